use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use super::generators::GeneratorTable;
use super::monomial::Monomial;
use crate::error::{Error, Result};

/// A polynomial over GF(2): a set of monomials, each with coefficient one.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    nvars: u8,
    terms: BTreeSet<Monomial>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars: nvars as u8,
            terms: BTreeSet::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_monomial(Monomial::one(nvars))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(m);
        Self {
            nvars: m.nvars() as u8,
            terms,
        }
    }

    /// Sums the given monomials; repeated monomials cancel in pairs.
    pub fn from_monomials(nvars: usize, monomials: impl IntoIterator<Item = Monomial>) -> Self {
        let mut p = Self::zero(nvars);
        for m in monomials {
            p.toggle(m);
        }
        p
    }

    pub fn var(index: usize, table: &GeneratorTable) -> Result<Self> {
        Monomial::var(index, table).map(Self::from_monomial)
    }

    /// Parses expressions such as `w1^2*w2 + w3 + 1` against `table`.
    pub fn parse(input: &str, table: &GeneratorTable) -> Result<Self> {
        let fail = |reason: String| Error::PolyParse {
            input: input.to_string(),
            reason,
        };
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(fail("empty input".into()));
        }
        let mut poly = Self::zero(table.len());
        for term in compact.split('+') {
            if term.is_empty() {
                return Err(fail("empty term".into()));
            }
            if term == "0" {
                continue;
            }
            let mut exps = vec![0u16; table.len()];
            if term != "1" {
                for factor in term.split('*') {
                    let (name, power) = match factor.split_once('^') {
                        Some((n, p)) => (
                            n,
                            p.parse::<u16>()
                                .map_err(|_| fail(format!("bad exponent in `{factor}`")))?,
                        ),
                        None => (factor, 1),
                    };
                    let idx = table
                        .index_of(name)
                        .ok_or_else(|| fail(format!("unknown generator `{name}`")))?;
                    exps[idx] = exps[idx]
                        .checked_add(power)
                        .ok_or(Error::ExponentOverflow)?;
                }
            }
            poly.toggle(Monomial::new(&exps, table)?);
        }
        Ok(poly)
    }

    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.first().is_some_and(Monomial::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = &Monomial> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    /// Leading term under the graded order.
    pub fn leading(&self) -> Option<&Monomial> {
        self.terms.last()
    }

    /// Highest total degree of a term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(Monomial::degree)
    }

    pub fn low_degree(&self) -> Option<u32> {
        self.terms.first().map(Monomial::degree)
    }

    /// The zero polynomial counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        self.low_degree() == self.degree()
    }

    /// Adds a single monomial (toggles its coefficient).
    pub fn toggle(&mut self, m: Monomial) {
        debug_assert_eq!(m.nvars(), self.nvars as usize);
        if !self.terms.insert(m) {
            self.terms.remove(&m);
        }
    }

    pub(crate) fn pop_leading(&mut self) -> Option<Monomial> {
        self.terms.pop_last()
    }

    pub fn homogeneous_component(&self, d: u32) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|m| m.degree() == d)
                .copied()
                .collect(),
        }
    }

    /// Drops every term of degree above `d`.
    pub fn truncate(&self, d: u32) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|m| m.degree() <= d)
                .copied()
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|t| t.mul(m)).collect(),
        }
    }

    /// Product, dropping terms above `truncation` when given.
    ///
    /// Panics if the generator counts differ; [`poly_mul`] is the checked form.
    pub fn mul_trunc(&self, other: &Self, truncation: Option<u32>) -> Self {
        assert_eq!(self.nvars, other.nvars, "generator count mismatch");
        let mut out = Self::zero(self.nvars());
        let limit = truncation.unwrap_or(u32::MAX);
        for a in &self.terms {
            if a.degree() > limit {
                break;
            }
            for b in &other.terms {
                if a.degree() + b.degree() > limit {
                    break;
                }
                out.toggle(a.mul(b));
            }
        }
        out
    }

    pub fn square(&self) -> Self {
        // Frobenius: cross terms cancel in characteristic two.
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|m| m.scale(2)).collect(),
        }
    }

    pub fn pow(&self, mut e: u64, truncation: Option<u32>) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.nvars());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_trunc(&base, truncation);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_trunc(&base, truncation);
            }
        }
        acc
    }

    /// Applies the ring map sending generator `index` to zero.
    pub fn substitute_zero(&self, index: usize) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|m| m.exponent(index) == 0)
                .copied()
                .collect(),
        }
    }

    pub fn display<'a>(&'a self, table: &'a GeneratorTable) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, table }
    }

    pub(crate) fn check_nvars(&self, table: &GeneratorTable) -> Result<()> {
        if self.nvars() == table.len() {
            Ok(())
        } else {
            Err(Error::GeneratorMismatch {
                expected: table.len(),
                found: self.nvars(),
            })
        }
    }
}

/// Checked product over `table`.
pub fn poly_mul(
    a: &Poly,
    b: &Poly,
    table: &GeneratorTable,
    truncation: Option<u32>,
) -> Result<Poly> {
    a.check_nvars(table)?;
    b.check_nvars(table)?;
    Ok(a.mul_trunc(b, truncation))
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        assert_eq!(self.nvars, rhs.nvars, "generator count mismatch");
        for m in &rhs.terms {
            self.toggle(*m);
        }
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        self.mul_trunc(rhs, None)
    }
}

/// Canonical text form: terms from the leading one down, `+`-separated.
pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    table: &'a GeneratorTable,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (i, m) in self.poly.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{}", m.display(self.table))?;
        }
        Ok(())
    }
}
