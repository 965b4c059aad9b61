//! Brute-force cross-checks that share no code path with the Gröbner engine
//! or the leading-term expansion.
//!
//! A graded quotient is a vector space degree by degree: the degree-`d` part of
//! the ideal is spanned by all monomial multiples of the generators that land
//! in degree `d`. Membership is then plain Gaussian elimination.

use std::collections::HashMap;

use crate::algebra::{monomials_of_degree, GeneratorTable, Monomial, Poly};
use crate::linalg::{BitRow, Echelon};
use crate::quotient::RingPresentation;
use crate::symmetric::{elementary_symmetric, variable_table, ElementaryExpansion, SymmetricPoly};

/// The degree-`d` slice of an ideal, row-reduced.
#[derive(Debug, Clone)]
pub struct DegreeSliceMatrix {
    pub degree: u32,
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    echelon: Echelon,
}

impl DegreeSliceMatrix {
    pub fn new(table: &GeneratorTable, generators: &[Poly], degree: u32) -> Self {
        let monomials = monomials_of_degree(table, degree);
        let index: HashMap<Monomial, usize> =
            monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let mut echelon = Echelon::new(monomials.len());
        for g in generators {
            // each homogeneous piece of a generator spans its own multiples
            for gd in g
                .terms()
                .map(Monomial::degree)
                .collect::<std::collections::BTreeSet<_>>()
            {
                if gd > degree {
                    continue;
                }
                let piece = g.homogeneous_component(gd);
                for q in monomials_of_degree(table, degree - gd) {
                    let mut row = BitRow::zeros(monomials.len());
                    for t in piece.terms() {
                        row.flip(index[&t.mul(&q)]);
                    }
                    echelon.insert(row);
                }
            }
        }
        Self {
            degree,
            monomials,
            index,
            echelon,
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn quotient_dimension(&self) -> usize {
        self.monomials.len() - self.rank()
    }

    /// Whether the degree-`degree` part of `p` lies in the slice.
    pub fn contains(&self, p: &Poly) -> bool {
        let mut row = BitRow::zeros(self.monomials.len());
        for t in p.terms().filter(|t| t.degree() == self.degree) {
            row.flip(self.index[t]);
        }
        self.echelon.contains(&row)
    }
}

fn slice_contains(table: &GeneratorTable, generators: &[Poly], p: &Poly) -> bool {
    let mut degrees: Vec<u32> = p.terms().map(Monomial::degree).collect();
    degrees.dedup();
    degrees
        .into_iter()
        .all(|d| DegreeSliceMatrix::new(table, generators, d).contains(p))
}

/// True iff `p` vanishes in the presented ring.
pub fn slice_zero_test(presentation: &RingPresentation, p: &Poly) -> bool {
    slice_contains(&presentation.table, &presentation.relations, p)
}

/// True iff `p` lies in the ideal generated by the relations and `extra`.
pub fn slice_ideal_test(presentation: &RingPresentation, p: &Poly, extra: &[Poly]) -> bool {
    let mut generators = presentation.relations.clone();
    generators.extend(extra.iter().cloned());
    slice_contains(&presentation.table, &generators, p)
}

/// Dimension of the degree-`d` part of the presented ring.
pub fn slice_dimension(presentation: &RingPresentation, d: u32) -> usize {
    DegreeSliceMatrix::new(&presentation.table, &presentation.relations, d).quotient_dimension()
}

/// Substitutes elementary symmetric polynomials into `e` by direct monomial
/// expansion and compares with `source` term by term.
pub fn expand_verify(e: &ElementaryExpansion, source: &SymmetricPoly) -> bool {
    let k = source.rank();
    if e.rank() != k {
        return false;
    }
    let xs = variable_table(k).expect("rank within generator limit");
    let elementary: Vec<Poly> = (1..=k).map(|i| elementary_symmetric(i, &xs)).collect();
    let mut acc = Poly::zero(k);
    for m in e.poly().terms() {
        let mut term = Poly::one(k);
        for (i, &power) in m.exponents().iter().enumerate() {
            for _ in 0..power {
                term = &term * &elementary[i];
            }
        }
        acc += &term;
    }
    &acc == source.poly()
}
