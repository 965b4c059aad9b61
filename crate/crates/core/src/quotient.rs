//! Graded quotient rings `GF(2)[g_1..g_m] / I` with Gröbner-basis normal forms.
//!
//! Every ring here is treated as zero above its `top_dimension`; the Gröbner
//! basis is only completed up to `top_dimension` plus the largest generator
//! degree, which is all that normal forms of classes in range need.

use std::collections::BTreeMap;

use crate::algebra::{monomials_of_degree, GeneratorTable, Monomial, Poly};
use crate::error::{Error, Result};

/// Generators, homogeneous relations and top degree of a graded ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingPresentation {
    pub table: GeneratorTable,
    pub relations: Vec<Poly>,
    pub top_dimension: u32,
    pub label: String,
}

impl RingPresentation {
    pub fn new(
        table: GeneratorTable,
        relations: Vec<Poly>,
        top_dimension: u32,
        label: impl Into<String>,
    ) -> Result<Self> {
        for (index, r) in relations.iter().enumerate() {
            r.check_nvars(&table)?;
            if !r.is_homogeneous() {
                return Err(Error::NonHomogeneousRelation { index });
            }
        }
        Ok(Self {
            table,
            relations,
            top_dimension,
            label: label.into(),
        })
    }
}

#[derive(Debug, Clone)]
pub struct QuotientRing {
    presentation: RingPresentation,
    gb: Vec<Poly>,
    gb_bound: u32,
    basis: Vec<Vec<Monomial>>,
}

impl QuotientRing {
    pub fn build(presentation: RingPresentation) -> Result<Self> {
        for (index, r) in presentation.relations.iter().enumerate() {
            r.check_nvars(&presentation.table)?;
            if !r.is_homogeneous() {
                return Err(Error::NonHomogeneousRelation { index });
            }
        }
        let gb_bound = presentation.top_dimension + presentation.table.max_degree();
        let gb = groebner_basis(
            &presentation.table,
            presentation.relations.clone(),
            gb_bound,
        );
        let basis = (0..=presentation.top_dimension)
            .map(|d| {
                monomials_of_degree(&presentation.table, d)
                    .into_iter()
                    .filter(|m| !gb.iter().any(|g| g.leading().is_some_and(|l| l.divides(m))))
                    .collect()
            })
            .collect();
        Ok(Self {
            presentation,
            gb,
            gb_bound,
            basis,
        })
    }

    /// The same ring with `extra` adjoined to the relations.
    pub fn extend(&self, extra: &[Poly]) -> Result<Self> {
        let mut presentation = self.presentation.clone();
        let names: Vec<String> = extra
            .iter()
            .map(|p| p.display(&presentation.table).to_string())
            .collect();
        presentation.relations.extend(extra.iter().cloned());
        presentation.label = format!("{}/({})", presentation.label, names.join(","));
        Self::build(presentation)
    }

    pub fn presentation(&self) -> &RingPresentation {
        &self.presentation
    }

    pub fn table(&self) -> &GeneratorTable {
        &self.presentation.table
    }

    pub fn nvars(&self) -> usize {
        self.presentation.table.len()
    }

    pub fn top_dimension(&self) -> u32 {
        self.presentation.top_dimension
    }

    pub fn label(&self) -> &str {
        &self.presentation.label
    }

    /// Reduced Gröbner basis, ascending by leading monomial.
    pub fn groebner_basis(&self) -> &[Poly] {
        &self.gb
    }

    pub fn gb_bound(&self) -> u32 {
        self.gb_bound
    }

    /// Unique representative in the span of standard monomials. Terms above the
    /// top dimension vanish.
    pub fn normal_form(&self, p: &Poly) -> Poly {
        assert_eq!(p.nvars(), self.nvars(), "generator count mismatch");
        reduce(&p.truncate(self.top_dimension()), &self.gb)
    }

    pub fn is_zero(&self, p: &Poly) -> bool {
        self.normal_form(p).is_zero()
    }

    /// Product of two classes, in normal form.
    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.normal_form(&a.mul_trunc(b, Some(self.top_dimension())))
    }

    /// Standard monomials of degree `d`, ascending by exponent vector.
    pub fn degree_basis(&self, d: u32) -> &[Monomial] {
        self.basis.get(d as usize).map_or(&[], Vec::as_slice)
    }

    pub fn dimension_in_degree(&self, d: u32) -> usize {
        self.degree_basis(d).len()
    }

    pub fn total_dimension(&self) -> usize {
        self.basis.iter().map(Vec::len).sum()
    }

    /// Whether `p` lies in the ideal generated by the relations and `extra`.
    pub fn ideal_membership(&self, p: &Poly, extra: &[Poly]) -> Result<bool> {
        p.check_nvars(self.table())?;
        if extra.is_empty() {
            return Ok(self.is_zero(p));
        }
        Ok(self.extend(extra)?.is_zero(p))
    }

    /// Largest `m` with `p^m` nonzero; zero when `p` itself vanishes.
    pub fn height(&self, p: &Poly) -> Result<u32> {
        p.check_nvars(self.table())?;
        if p.is_zero() {
            return Ok(0);
        }
        if !p.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        if p.degree() == Some(0) {
            return Err(Error::DegreeZero);
        }
        let base = self.normal_form(p);
        let mut power = base.clone();
        let mut m = 0;
        while !power.is_zero() {
            m += 1;
            power = self.mul(&power, &base);
        }
        Ok(m)
    }
}

fn divisor<'a>(m: &Monomial, basis: &'a [Poly]) -> Option<(&'a Poly, Monomial)> {
    basis.iter().find_map(|g| {
        let lead = g.leading()?;
        m.div(lead).map(|q| (g, q))
    })
}

/// Full reduction of `p` modulo `basis`.
pub(crate) fn reduce(p: &Poly, basis: &[Poly]) -> Poly {
    let mut work = p.clone();
    let mut out = Poly::zero(p.nvars());
    while let Some(lead) = work.pop_leading() {
        match divisor(&lead, basis) {
            Some((g, q)) => {
                // lead cancels against the leading term of q*g, already popped
                for t in g.terms().rev().skip(1) {
                    work.toggle(t.mul(&q));
                }
            }
            None => out.toggle(lead),
        }
    }
    out
}

enum Pending {
    Input(Poly),
    Pair(usize, usize),
}

/// Buchberger's algorithm for homogeneous input over GF(2), processed degree by
/// degree. S-pairs whose lcm lies above `bound` are discarded, so the result is a
/// Gröbner basis for everything up to `bound`.
pub(crate) fn groebner_basis(
    table: &GeneratorTable,
    generators: Vec<Poly>,
    bound: u32,
) -> Vec<Poly> {
    let mut queue: BTreeMap<u32, Vec<Pending>> = BTreeMap::new();
    for g in generators {
        if let Some(d) = g.degree() {
            if d <= bound {
                queue.entry(d).or_default().push(Pending::Input(g));
            }
        }
    }
    let mut basis: Vec<Poly> = Vec::new();
    while let Some((_, batch)) = queue.pop_first() {
        for item in batch {
            let candidate = match item {
                Pending::Input(p) => p,
                Pending::Pair(i, j) => s_poly(&basis[i], &basis[j], table),
            };
            let r = reduce(&candidate, &basis);
            let Some(lead) = r.leading().copied() else {
                continue;
            };
            let new_index = basis.len();
            for (i, g) in basis.iter().enumerate() {
                let gl = g.leading().expect("basis elements are nonzero");
                if gl.is_coprime(&lead) {
                    continue;
                }
                let d = gl.lcm(&lead, table).degree();
                if d <= bound {
                    queue
                        .entry(d)
                        .or_default()
                        .push(Pending::Pair(i, new_index));
                }
            }
            basis.push(r);
        }
    }
    interreduce(basis)
}

fn s_poly(f: &Poly, g: &Poly, table: &GeneratorTable) -> Poly {
    let lf = f.leading().expect("nonzero");
    let lg = g.leading().expect("nonzero");
    let l = lf.lcm(lg, table);
    let mut s = f.mul_monomial(&l.div(lf).expect("lcm"));
    s += &g.mul_monomial(&l.div(lg).expect("lcm"));
    s
}

fn interreduce(mut basis: Vec<Poly>) -> Vec<Poly> {
    basis.sort_by(|a, b| a.leading().cmp(&b.leading()));
    let mut minimal: Vec<Poly> = Vec::new();
    for g in basis {
        let lead = g.leading().expect("nonzero");
        if !minimal
            .iter()
            .any(|h| h.leading().expect("nonzero").divides(lead))
        {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let g = &minimal[i];
        let lead = *g.leading().expect("nonzero");
        let others: Vec<Poly> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, h)| h.clone())
            .collect();
        let mut tail = g.clone();
        tail.toggle(lead);
        let mut r = reduce(&tail, &others);
        r.toggle(lead);
        reduced.push(r);
    }
    reduced
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GradedSeries;

    fn truncated_poly(n: u32, deg: u32) -> QuotientRing {
        let table = GeneratorTable::from_pairs(&[("t", deg)]).unwrap();
        let rel = Poly::from_monomial(Monomial::new(&[(n + 1) as u16], &table).unwrap());
        QuotientRing::build(RingPresentation::new(table, vec![rel], n * deg, "trunc").unwrap())
            .unwrap()
    }

    fn grassmannian_ring(k: usize, n: u32) -> QuotientRing {
        let table = GeneratorTable::stiefel_whitney(k).unwrap();
        let mut total = Poly::one(k);
        for i in 0..k {
            total += &Poly::var(i, &table).unwrap();
        }
        let inv = GradedSeries::from_poly(&total, n + k as u32)
            .inverse()
            .unwrap();
        let rels = (n + 1..=n + k as u32).map(|d| inv.component(d)).collect();
        QuotientRing::build(RingPresentation::new(table, rels, k as u32 * n, "G").unwrap()).unwrap()
    }

    #[test]
    fn truncated_polynomial_ring() {
        let ring = truncated_poly(5, 1);
        assert_eq!(ring.groebner_basis().len(), 1);
        for d in 0..=5 {
            assert_eq!(ring.degree_basis(d).len(), 1);
            assert_eq!(ring.degree_basis(d)[0].exponents(), &[d as u16]);
        }
        let t = ring.table().clone();
        assert!(ring.is_zero(&Poly::parse("t^6", &t).unwrap()));
        assert_eq!(ring.height(&Poly::parse("t", &t).unwrap()), Ok(5));
    }

    #[test]
    fn g2r4_dimensions() {
        let ring = grassmannian_ring(2, 2);
        let dims: Vec<_> = (0..=4).map(|d| ring.dimension_in_degree(d)).collect();
        assert_eq!(dims, vec![1, 1, 2, 1, 1]);
        assert_eq!(ring.total_dimension(), 6);
        let t = ring.table().clone();
        assert!(ring.is_zero(&Poly::parse("w1^3", &t).unwrap()));
        assert_eq!(ring.height(&Poly::parse("w1", &t).unwrap()), Ok(2));
    }

    #[test]
    fn g3r7_relations_and_w1_eighth() {
        let ring = grassmannian_ring(3, 4);
        let t = ring.table().clone();
        for r in [
            "w1^5+w1*w2^2+w1^2*w3",
            "w1^4*w2+w1^2*w2^2+w2^3+w1^3*w3+w3^2",
            "w1^4*w3+w1^2*w2*w3+w2^2*w3",
        ] {
            assert!(ring.is_zero(&Poly::parse(r, &t).unwrap()), "{r}");
        }
        assert!(ring.is_zero(&Poly::parse("w1^8", &t).unwrap()));
        let a = Poly::parse("w1^2*w2^2*w3+w3^3", &t).unwrap();
        let b = Poly::parse("w1^5*w2^2", &t).unwrap();
        assert!(!ring.is_zero(&a));
        assert_eq!(ring.normal_form(&a), ring.normal_form(&b));
    }

    #[test]
    fn membership_with_w1_adjoined() {
        let ring = grassmannian_ring(3, 4);
        let t = ring.table().clone();
        let w1 = Poly::parse("w1", &t).unwrap();
        let wbar9 = Poly::parse("w1^5*w2^2", &t).unwrap();
        let wbar8 = Poly::parse("w1^2*w2^3+w2*w3^2", &t).unwrap();
        assert_eq!(
            ring.ideal_membership(&wbar9, std::slice::from_ref(&w1)),
            Ok(true)
        );
        assert_eq!(
            ring.ideal_membership(&wbar8, std::slice::from_ref(&w1)),
            Ok(false)
        );
        assert_eq!(ring.ideal_membership(&Poly::zero(3), &[w1]), Ok(true));
    }

    #[test]
    fn height_of_w1_and_oriented_w2() {
        // r = 2: G_2(R^6)
        let ring = grassmannian_ring(2, 4);
        let t = ring.table().clone();
        assert_eq!(ring.height(&Poly::parse("w1", &t).unwrap()), Ok(6));
        assert_eq!(ring.degree_basis(6).len(), 2);
        let oriented = grassmannian_ring(2, 5)
            .extend(&[Poly::parse("w1", &t).unwrap()])
            .unwrap();
        assert_eq!(oriented.height(&Poly::parse("w2", &t).unwrap()), Ok(2));
    }

    #[test]
    fn height_contract() {
        let ring = grassmannian_ring(2, 4);
        let t = ring.table().clone();
        assert_eq!(
            ring.height(&Poly::parse("w1+w2", &t).unwrap()),
            Err(Error::NotHomogeneous)
        );
        assert_eq!(ring.height(&Poly::one(2)), Err(Error::DegreeZero));
        assert_eq!(ring.height(&Poly::parse("w1^7", &t).unwrap()), Ok(0));
    }

    #[test]
    fn non_homogeneous_relation_rejected() {
        let table = GeneratorTable::from_pairs(&[("t", 1)]).unwrap();
        let rel = Poly::parse("t+t^2", &table).unwrap();
        assert_eq!(
            RingPresentation::new(table, vec![rel], 3, "bad"),
            Err(Error::NonHomogeneousRelation { index: 0 })
        );
    }
}
