use std::collections::HashSet;

use crate::error::{Error, Result};

/// Upper bound on the number of generators of a single ring.
pub const MAX_GENERATORS: usize = 8;

/// Marks a generator as the Stiefel-Whitney class `w_index` of a bundle of
/// the given rank. Generators sharing a `family` belong to the same bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SwLabel {
    pub family: u8,
    pub index: u8,
    pub rank: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
    pub sw: Option<SwLabel>,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: u32) -> Self {
        Self {
            name: name.into(),
            degree,
            sw: None,
        }
    }

    pub fn with_sw(mut self, family: u8, index: u8, rank: u8) -> Self {
        self.sw = Some(SwLabel {
            family,
            index,
            rank,
        });
        self
    }
}

/// Ordered, named, graded generators of a polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorTable {
    entries: Vec<Generator>,
}

impl GeneratorTable {
    pub fn new(entries: Vec<Generator>) -> Result<Self> {
        if entries.len() > MAX_GENERATORS {
            return Err(Error::TooManyGenerators {
                max: MAX_GENERATORS,
                found: entries.len(),
            });
        }
        let mut seen = HashSet::new();
        for g in &entries {
            if g.degree == 0 {
                return Err(Error::InvalidGeneratorDegree(g.name.clone()));
            }
            if !seen.insert(g.name.as_str()) {
                return Err(Error::DuplicateGenerator(g.name.clone()));
            }
        }
        Ok(Self { entries })
    }

    /// Shorthand for a table of unlabelled generators.
    pub fn from_pairs(pairs: &[(&str, u32)]) -> Result<Self> {
        Self::new(pairs.iter().map(|&(n, d)| Generator::new(n, d)).collect())
    }

    /// `w1..wk` with `deg wi = i`, labelled as the classes of one rank-`k` bundle.
    pub fn stiefel_whitney(k: usize) -> Result<Self> {
        Self::new(
            (1..=k)
                .map(|i| Generator::new(format!("w{i}"), i as u32).with_sw(0, i as u8, k as u8))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Generator] {
        &self.entries
    }

    pub fn get(&self, index: usize) -> Option<&Generator> {
        self.entries.get(index)
    }

    pub fn degree(&self, index: usize) -> u32 {
        self.entries[index].degree
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.entries.iter().map(|g| g.degree).collect()
    }

    pub fn max_degree(&self) -> u32 {
        self.entries.iter().map(|g| g.degree).max().unwrap_or(0)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.entries.iter().position(|g| g.name == name)
    }

    pub fn check_index(&self, index: usize) -> Result<()> {
        if index < self.len() {
            Ok(())
        } else {
            Err(Error::InvalidIndex {
                index,
                count: self.len(),
            })
        }
    }
}
