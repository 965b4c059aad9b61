use std::collections::BTreeMap;

use super::monomial::Monomial;
use super::poly::Poly;
use crate::error::{Error, Result};

/// A truncated graded power series: homogeneous components indexed by degree,
/// nothing stored above `truncation`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSeries {
    nvars: u8,
    components: BTreeMap<u32, Poly>,
    truncation: u32,
}

impl GradedSeries {
    pub fn one(nvars: usize, truncation: u32) -> Self {
        Self::from_poly(&Poly::one(nvars), truncation)
    }

    pub fn from_poly(p: &Poly, truncation: u32) -> Self {
        let mut components: BTreeMap<u32, Poly> = BTreeMap::new();
        for m in p.terms().filter(|m| m.degree() <= truncation) {
            components
                .entry(m.degree())
                .or_insert_with(|| Poly::zero(p.nvars()))
                .toggle(*m);
        }
        Self {
            nvars: p.nvars() as u8,
            components,
            truncation,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    /// Degree-`d` component; zero when absent or above the truncation.
    pub fn component(&self, d: u32) -> Poly {
        self.components
            .get(&d)
            .cloned()
            .unwrap_or_else(|| Poly::zero(self.nvars()))
    }

    /// Nonzero components in ascending degree.
    pub fn components(&self) -> impl DoubleEndedIterator<Item = (u32, &Poly)> {
        self.components.iter().map(|(d, p)| (*d, p))
    }

    pub fn constant_term_is_one(&self) -> bool {
        self.components.get(&0).is_some_and(Poly::is_one)
    }

    pub fn to_poly(&self) -> Poly {
        let mut out = Poly::zero(self.nvars());
        for p in self.components.values() {
            out += p;
        }
        out
    }

    pub fn is_one(&self) -> bool {
        self.components.len() == 1 && self.constant_term_is_one()
    }

    /// Same series cut down to a smaller truncation degree.
    pub fn truncate(&self, truncation: u32) -> Self {
        let truncation = truncation.min(self.truncation);
        Self {
            nvars: self.nvars,
            components: self
                .components
                .range(..=truncation)
                .map(|(d, p)| (*d, p.clone()))
                .collect(),
            truncation,
        }
    }

    /// Product truncated at the smaller of the two truncation degrees.
    pub fn mul(&self, other: &Self) -> Self {
        let truncation = self.truncation.min(other.truncation);
        let prod = self.to_poly().mul_trunc(&other.to_poly(), Some(truncation));
        Self::from_poly(&prod, truncation)
    }

    /// `self^e` by square-and-multiply.
    pub fn pow(&self, e: u64) -> Self {
        let prod = self.to_poly().pow(e, Some(self.truncation));
        Self::from_poly(&prod, self.truncation)
    }

    /// Multiplicative inverse, built one degree at a time from
    /// `g_d = sum_{0 < i <= d} f_i g_{d-i}`.
    pub fn inverse(&self) -> Result<Self> {
        if !self.constant_term_is_one() {
            return Err(Error::NotInvertible);
        }
        let zero = Poly::zero(self.nvars());
        let mut g: Vec<Poly> = vec![Poly::one(self.nvars())];
        for d in 1..=self.truncation {
            let mut gd = Poly::zero(self.nvars());
            for (i, fi) in self.components.range(1..=d) {
                let prev = &g[(d - i) as usize];
                if !prev.is_zero() {
                    gd += &fi.mul_trunc(prev, None);
                }
            }
            g.push(gd);
        }
        let mut components = BTreeMap::new();
        for (d, p) in g.into_iter().enumerate() {
            if p != zero {
                components.insert(d as u32, p);
            }
        }
        Ok(Self {
            nvars: self.nvars,
            components,
            truncation: self.truncation,
        })
    }

    pub fn substitute_zero(&self, index: usize) -> Self {
        Self::from_poly(&self.to_poly().substitute_zero(index), self.truncation)
    }

    /// Applies `f` to every term and reassembles, dropping anything above the truncation.
    pub fn map_terms(&self, nvars: usize, mut f: impl FnMut(&Monomial) -> Monomial) -> Self {
        let p = Poly::from_monomials(nvars, self.to_poly().terms().map(&mut f));
        Self::from_poly(&p, self.truncation)
    }
}
