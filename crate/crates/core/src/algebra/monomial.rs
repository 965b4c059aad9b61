use std::cmp::Ordering;
use std::fmt;

use super::generators::{GeneratorTable, MAX_GENERATORS};
use crate::error::{Error, Result};

/// A power product of ring generators.
///
/// The total degree is carried alongside the exponents, so the derived
/// ordering is the graded order used everywhere in this crate: total degree
/// first, then lexicographic on the exponent vector with the first generator
/// heaviest.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u32,
    exps: [u16; MAX_GENERATORS],
    len: u8,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_GENERATORS);
        Self {
            degree: 0,
            exps: [0; MAX_GENERATORS],
            len: nvars as u8,
        }
    }

    pub fn new(exponents: &[u16], table: &GeneratorTable) -> Result<Self> {
        if exponents.len() != table.len() {
            return Err(Error::GeneratorMismatch {
                expected: table.len(),
                found: exponents.len(),
            });
        }
        let mut m = Self::one(table.len());
        for (i, &e) in exponents.iter().enumerate() {
            m.exps[i] = e;
            m.degree += e as u32 * table.degree(i);
        }
        Ok(m)
    }

    /// The generator `index` to the first power.
    pub fn var(index: usize, table: &GeneratorTable) -> Result<Self> {
        table.check_index(index)?;
        let mut m = Self::one(table.len());
        m.exps[index] = 1;
        m.degree = table.degree(index);
        Ok(m)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.len as usize
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.len as usize]
    }

    pub fn exponent(&self, index: usize) -> u16 {
        self.exps[index]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        let mut out = *self;
        for i in 0..self.len as usize {
            out.exps[i] += other.exps[i];
        }
        out.degree += other.degree;
        out
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.degree <= other.degree && (0..self.len as usize).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        let mut out = *self;
        for i in 0..self.len as usize {
            out.exps[i] -= other.exps[i];
        }
        out.degree -= other.degree;
        Some(out)
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        (0..self.len as usize).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    pub fn lcm(&self, other: &Self, table: &GeneratorTable) -> Self {
        let mut out = Self::one(self.len as usize);
        for i in 0..self.len as usize {
            let e = self.exps[i].max(other.exps[i]);
            out.exps[i] = e;
            out.degree += e as u32 * table.degree(i);
        }
        out
    }

    /// Every exponent multiplied by `factor`.
    pub fn scale(&self, factor: u16) -> Self {
        let mut out = *self;
        for e in out.exps.iter_mut() {
            *e *= factor;
        }
        out.degree *= factor as u32;
        out
    }

    /// Same monomial with the exponent at `index` replaced by zero.
    pub fn without(&self, index: usize, table: &GeneratorTable) -> Self {
        let mut out = *self;
        out.degree -= out.exps[index] as u32 * table.degree(index);
        out.exps[index] = 0;
        out
    }

    /// Re-embeds the exponents at `offset` inside a ring with `nvars` generators.
    pub(crate) fn embed(&self, offset: usize, nvars: usize) -> Self {
        let mut out = Self::one(nvars);
        out.exps[offset..offset + self.len as usize].copy_from_slice(self.exponents());
        out.degree = self.degree;
        out
    }

    /// Compares exponent vectors only, ignoring degree.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.exponents().cmp(other.exponents())
    }

    pub fn display<'a>(&'a self, table: &'a GeneratorTable) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, table }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}@{}", self.exponents(), self.degree)
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    table: &'a GeneratorTable,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.mono.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(&self.table.entries()[i].name)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// All monomials of total degree `d`, ascending lexicographically by exponent vector.
pub fn monomials_of_degree(table: &GeneratorTable, d: u32) -> Vec<Monomial> {
    fn go(
        table: &GeneratorTable,
        index: usize,
        remaining: u32,
        exps: &mut Vec<u16>,
        out: &mut Vec<Monomial>,
    ) {
        if index == table.len() {
            if remaining == 0 {
                out.push(Monomial::new(exps, table).expect("length matches table"));
            }
            return;
        }
        let deg = table.degree(index);
        for e in 0..=remaining / deg {
            exps.push(e as u16);
            go(table, index + 1, remaining - e * deg, exps, out);
            exps.pop();
        }
    }
    let mut out = Vec::new();
    go(table, 0, d, &mut Vec::with_capacity(table.len()), &mut out);
    out.sort_by(|a, b| a.lex_cmp(b));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w3() -> GeneratorTable {
        GeneratorTable::stiefel_whitney(3).unwrap()
    }

    #[test]
    fn graded_order_puts_first_generator_heaviest() {
        let t = w3();
        let w1_cubed = Monomial::new(&[3, 0, 0], &t).unwrap();
        let w1w2 = Monomial::new(&[1, 1, 0], &t).unwrap();
        let w3m = Monomial::new(&[0, 0, 1], &t).unwrap();
        let w2 = Monomial::new(&[0, 1, 0], &t).unwrap();
        assert!(w1_cubed > w1w2 && w1w2 > w3m);
        assert!(w3m > w2);
    }

    #[test]
    fn division_and_lcm() {
        let t = w3();
        let a = Monomial::new(&[2, 1, 0], &t).unwrap();
        let b = Monomial::new(&[1, 0, 2], &t).unwrap();
        let l = a.lcm(&b, &t);
        assert_eq!(l.exponents(), &[2, 1, 2]);
        assert_eq!(l.degree(), 2 + 2 + 6);
        assert_eq!(l.div(&a).unwrap().exponents(), &[0, 0, 2]);
        assert!(a.div(&b).is_none());
        assert!(!a.is_coprime(&b));
    }

    #[test]
    fn degree_enumeration_counts() {
        let t = w3();
        // partitions of 6 into parts 1, 2, 3
        assert_eq!(monomials_of_degree(&t, 6).len(), 7);
        assert_eq!(monomials_of_degree(&t, 0).len(), 1);
    }

    #[test]
    fn display_uses_names() {
        let t = w3();
        let m = Monomial::new(&[2, 0, 1], &t).unwrap();
        assert_eq!(m.display(&t).to_string(), "w1^2*w3");
        assert_eq!(Monomial::one(3).display(&t).to_string(), "1");
    }
}
