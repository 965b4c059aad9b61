//! Steenrod squares on rings generated by Stiefel-Whitney classes.
//!
//! Generators carrying an [`SwLabel`](crate::algebra::SwLabel) are acted on by
//! Wu's formula, with `w_0 = 1` and `w_m = 0` above the bundle rank or when the
//! class is not a generator of the ring. Unlabelled generators only have
//! `Sq^0 = id` and the top square `Sq^deg(x) = x^2`. Products go through the
//! Cartan formula, i.e. the total square is a ring map.

use crate::algebra::{lucas_binom, GeneratorTable, Monomial, Poly};
use crate::error::{Error, Result};
use crate::quotient::QuotientRing;

/// The operation `Sq^i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SqOperation(pub u32);

impl SqOperation {
    pub fn apply(&self, p: &Poly, ring: &QuotientRing) -> Result<Poly> {
        sq(self.0, p, ring)
    }
}

fn sw_class(table: &GeneratorTable, family: u8, index: u32, rank: u8) -> Poly {
    if index == 0 {
        return Poly::one(table.len());
    }
    if index > rank as u32 {
        return Poly::zero(table.len());
    }
    table
        .entries()
        .iter()
        .position(|g| {
            g.sw.is_some_and(|l| l.family == family && l.index as u32 == index)
        })
        .map(|i| Poly::var(i, table).expect("index from table"))
        .unwrap_or_else(|| Poly::zero(table.len()))
}

/// `Sq^i` of generator `gen`, unreduced.
pub fn sq_on_generator(table: &GeneratorTable, gen: usize, i: u32) -> Result<Poly> {
    table.check_index(gen)?;
    let g = &table.entries()[gen];
    let x = Poly::var(gen, table)?;
    if i == 0 {
        return Ok(x);
    }
    if i > g.degree {
        return Ok(Poly::zero(table.len()));
    }
    let Some(label) = g.sw else {
        return Ok(if i == g.degree {
            x.square()
        } else {
            Poly::zero(table.len())
        });
    };
    let j = label.index as u32;
    // Sq^i(w_j) = sum_t C(j-i+t-1, t) w_{i-t} w_{j+t}
    let mut out = Poly::zero(table.len());
    for t in 0..=i {
        let odd = t == 0 || lucas_binom((j - i + t - 1) as u64, t as u64);
        if odd {
            let a = sw_class(table, label.family, i - t, label.rank);
            let b = sw_class(table, label.family, j + t, label.rank);
            out += &(&a * &b);
        }
    }
    Ok(out)
}

/// Total square `Sq = sum_i Sq^i` of every generator.
fn generator_totals(table: &GeneratorTable) -> Result<Vec<Poly>> {
    (0..table.len())
        .map(|gen| {
            let mut total = Poly::zero(table.len());
            for i in 0..=table.degree(gen) {
                total += &sq_on_generator(table, gen, i)?;
            }
            Ok(total)
        })
        .collect()
}

fn sq_monomial(m: &Monomial, i: u32, totals: &[Poly], limit: u32) -> Poly {
    let target = m.degree() + i;
    let nvars = m.nvars();
    if target > limit {
        return Poly::zero(nvars);
    }
    let mut acc = Poly::one(nvars);
    for (gen, &e) in m.exponents().iter().enumerate() {
        if e > 0 {
            acc = acc.mul_trunc(&totals[gen].pow(e as u64, Some(target)), Some(target));
        }
    }
    acc.homogeneous_component(target)
}

/// `Sq^i(p)` in the free polynomial ring on `table`, before any relations apply.
pub fn sq_free(i: u32, p: &Poly, table: &GeneratorTable) -> Result<Poly> {
    p.check_nvars(table)?;
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let totals = generator_totals(table)?;
    let mut out = Poly::zero(table.len());
    for m in p.terms() {
        out += &sq_monomial(m, i, &totals, u32::MAX);
    }
    Ok(out)
}

/// `Sq^i(p)` in normal form.
pub fn sq(i: u32, p: &Poly, ring: &QuotientRing) -> Result<Poly> {
    p.check_nvars(ring.table())?;
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let totals = generator_totals(ring.table())?;
    let mut out = Poly::zero(ring.nvars());
    for m in p.terms() {
        out += &sq_monomial(m, i, &totals, ring.top_dimension());
    }
    Ok(ring.normal_form(&out))
}

/// `sum_i Sq^i(p)` in normal form; `p` need not be homogeneous.
pub fn sq_total(p: &Poly, ring: &QuotientRing) -> Result<Poly> {
    p.check_nvars(ring.table())?;
    let totals = generator_totals(ring.table())?;
    let mut out = Poly::zero(ring.nvars());
    for m in p.terms() {
        for i in 0..=m.degree() {
            out += &sq_monomial(m, i, &totals, ring.top_dimension());
        }
    }
    Ok(ring.normal_form(&out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(k: usize) -> GeneratorTable {
        GeneratorTable::stiefel_whitney(k).unwrap()
    }

    #[test]
    fn wu_formula_instances() {
        let t = w(2);
        assert_eq!(
            sq_on_generator(&t, 1, 1).unwrap(),
            Poly::parse("w1*w2", &t).unwrap()
        );
        assert_eq!(
            sq_on_generator(&t, 1, 0).unwrap(),
            Poly::parse("w2", &t).unwrap()
        );
        assert_eq!(
            sq_on_generator(&t, 1, 2).unwrap(),
            Poly::parse("w2^2", &t).unwrap()
        );
        assert!(sq_on_generator(&t, 1, 3).unwrap().is_zero());
        let t3 = w(3);
        assert_eq!(
            sq_on_generator(&t3, 1, 1).unwrap(),
            Poly::parse("w1*w2+w3", &t3).unwrap()
        );
        // Sq^2(w3) = w2*w3
        assert_eq!(
            sq_on_generator(&t3, 2, 2).unwrap(),
            Poly::parse("w2*w3", &t3).unwrap()
        );
    }

    #[test]
    fn unlabelled_generator_has_only_top_square() {
        let t = GeneratorTable::from_pairs(&[("z", 3)]).unwrap();
        assert!(sq_on_generator(&t, 0, 1).unwrap().is_zero());
        assert_eq!(
            sq_on_generator(&t, 0, 3).unwrap(),
            Poly::parse("z^2", &t).unwrap()
        );
    }
}
