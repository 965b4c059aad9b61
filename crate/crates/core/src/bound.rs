//! Dual classes, `k_max`, and the resulting embedding-dimension bounds.
//!
//! If `k_max` is the top degree in which the dual class of `M^n` survives, then
//! `N(M) >= 2n + 2 k_max + 1`.

use std::fmt;

use crate::algebra::{alpha, lucas_binom, GeneratorTable, GradedSeries, Monomial, Poly};
use crate::catalog::ManifoldData;
use crate::error::{Error, Result};
use crate::linalg::{BitRow, Echelon};
use crate::quotient::QuotientRing;

/// Which of the two lower bounds is larger.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundSource {
    /// `2n + 2 k_max + 1` from the dual class.
    Method,
    /// `2n + 2`, valid for every closed manifold.
    GenericClosed,
}

impl fmt::Display for BoundSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundSource::Method => "method",
            BoundSource::GenericClosed => "generic-closed",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub label: String,
    pub dimension: u32,
    pub alpha: u32,
    pub kmax: u32,
    /// Surviving top component of the dual class in normal form; zero iff `kmax == 0`.
    pub witness: Poly,
    /// Witness rendered with the ring's generator names.
    pub witness_text: String,
    pub lower_bound: u32,
    pub generic_lower: u32,
    /// Highest degree a nonzero dual class can live in for a closed manifold.
    pub massey_cap: u32,
    pub conjectured_upper: u32,
    pub literature_upper: u32,
}

impl BoundReport {
    pub fn best_lower(&self) -> u32 {
        self.lower_bound.max(self.generic_lower)
    }

    pub fn source_of_best_lower(&self) -> BoundSource {
        if self.lower_bound >= self.generic_lower {
            BoundSource::Method
        } else {
            BoundSource::GenericClosed
        }
    }
}

/// `w(M)^{-1}` with every component in normal form.
pub fn dual_class(m: &ManifoldData) -> Result<GradedSeries> {
    let raw = m.total_sw.inverse()?.truncate(m.dimension);
    let reduced = m.ring.normal_form(&raw.to_poly());
    Ok(GradedSeries::from_poly(&reduced, m.dimension))
}

/// The ring in which a class of `m` is tested for vanishing: the cohomology
/// ring itself, or for oriented Grassmannians the quotient by the kernel of
/// the covering map.
pub fn test_ring(m: &ManifoldData) -> Result<QuotientRing> {
    match &m.oriented_kernel {
        Some(kernel) => m.ring.extend(kernel),
        None => Ok(m.ring.clone()),
    }
}

/// Top degree of a surviving dual component and that component in normal form.
pub fn kmax(m: &ManifoldData) -> Result<(u32, Poly)> {
    kmax_in(m, &test_ring(m)?)
}

fn kmax_in(m: &ManifoldData, ring: &QuotientRing) -> Result<(u32, Poly)> {
    let raw = m.total_sw.inverse()?.truncate(m.dimension);
    for (d, component) in raw.components().rev() {
        if d == 0 {
            break;
        }
        let nf = ring.normal_form(component);
        if !nf.is_zero() {
            return Ok((d, nf));
        }
    }
    Ok((0, Poly::zero(m.ring.nvars())))
}

pub fn bound(m: &ManifoldData) -> Result<BoundReport> {
    let ring = test_ring(m)?;
    let (kmax, witness) = kmax_in(m, &ring)?;
    let n = m.dimension;
    let a = alpha(n as u64);
    Ok(BoundReport {
        label: m.label.clone(),
        dimension: n,
        alpha: a,
        kmax,
        witness_text: witness.display(ring.table()).to_string(),
        witness,
        lower_bound: 2 * n + 2 * kmax + 1,
        generic_lower: if m.closed { 2 * n + 2 } else { 2 * n + 1 },
        massey_cap: n - a,
        conjectured_upper: 4 * n - 2 * a + 1,
        literature_upper: 4 * n + 1,
    })
}

/// Ideal in `GF(2)[w2, w3]` generated by the degree `n-2, n-1, n` components
/// of `1 / (1 + w2 + w3)`. A monomial in `w2, w3` outside it is not a multiple
/// of `w1` in `H*(G_3(R^n))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JCriterion {
    /// Ambient dimension of the Grassmannian.
    pub n: u32,
    /// `2^r < n <= 2^{r+1}`.
    pub r: u32,
    pub table: GeneratorTable,
    /// `g_{n-2}, g_{n-1}, g_n` in that order.
    pub generators: [Poly; 3],
}

/// `w2` (degree 2) and `w3` (degree 3).
pub fn j_table() -> GeneratorTable {
    GeneratorTable::from_pairs(&[("w2", 2), ("w3", 3)]).expect("valid table")
}

/// `g_k = sum_{ceil(k/3) <= i <= floor(k/2)} C(i, 3i-k) w2^(3i-k) w3^(k-2i)`.
pub fn g_closed_form(k: u32, table: &GeneratorTable) -> Poly {
    let mut g = Poly::zero(2);
    for i in k.div_ceil(3)..=k / 2 {
        if lucas_binom(i as u64, (3 * i - k) as u64) {
            let m = Monomial::new(&[(3 * i - k) as u16, (k - 2 * i) as u16], table)
                .expect("two generators");
            g.toggle(m);
        }
    }
    g
}

pub fn j_criterion(n: u32) -> Result<JCriterion> {
    if n < 4 {
        return Err(Error::InvalidDimension(format!(
            "J-criterion needs ambient dimension at least 4, got {n}"
        )));
    }
    let r = (n - 1).ilog2();
    let table = j_table();
    let generators = [n - 2, n - 1, n].map(|k| g_closed_form(k, &table));
    Ok(JCriterion {
        n,
        r,
        table,
        generators,
    })
}

impl JCriterion {
    /// Whether `p` (over [`j_table`]) lies in the ideal, checked degree by degree
    /// against the span of monomial multiples of the generators.
    pub fn contains(&self, p: &Poly) -> Result<bool> {
        p.check_nvars(&self.table)?;
        let mut degrees: Vec<u32> = p.terms().map(Monomial::degree).collect();
        degrees.dedup();
        for d in degrees {
            let basis = crate::algebra::monomials_of_degree(&self.table, d);
            let index = |m: &Monomial| {
                basis
                    .iter()
                    .position(|b| b == m)
                    .expect("degree-d monomial")
            };
            let mut span = Echelon::new(basis.len());
            for g in self.generators.iter().filter(|g| !g.is_zero()) {
                let gd = g.degree().expect("nonzero");
                if gd > d {
                    continue;
                }
                for q in crate::algebra::monomials_of_degree(&self.table, d - gd) {
                    let mut row = BitRow::zeros(basis.len());
                    for t in g.terms() {
                        row.flip(index(&t.mul(&q)));
                    }
                    span.insert(row);
                }
            }
            let mut target = BitRow::zeros(basis.len());
            for t in p.terms().filter(|t| t.degree() == d) {
                target.flip(index(t));
            }
            if !span.contains(&target) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Rewrites a polynomial over `w1, w2, w3` that does not involve `w1`.
    pub fn from_w_poly(&self, p: &Poly, source: &GeneratorTable) -> Result<Poly> {
        let w2 = source.index_of("w2").ok_or(Error::InvalidIndex {
            index: 1,
            count: source.len(),
        })?;
        let w3 = source.index_of("w3").ok_or(Error::InvalidIndex {
            index: 2,
            count: source.len(),
        })?;
        let mut out = Poly::zero(2);
        for m in p.terms() {
            let others = m
                .exponents()
                .iter()
                .enumerate()
                .any(|(i, &e)| e > 0 && i != w2 && i != w3);
            if others {
                return Err(Error::PolyParse {
                    input: p.display(source).to_string(),
                    reason: "only w2 and w3 may appear".into(),
                });
            }
            out.toggle(Monomial::new(
                &[m.exponent(w2), m.exponent(w3)],
                &self.table,
            )?);
        }
        Ok(out)
    }
}

/// [`JCriterion::contains`] as a free function.
pub fn j_membership(c: &JCriterion, p: &Poly) -> Result<bool> {
    c.contains(p)
}
