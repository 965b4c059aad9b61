#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewbound::algebra::monomials_of_degree;
use skewbound::{Atom, GeneratorTable, ManifoldData, Monomial, Poly};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Non-oriented atoms used across the property suites.
pub fn plain_atoms() -> Vec<Atom> {
    let mut atoms = Vec::new();
    for n in 1..=16 {
        atoms.push(Atom::RealProjective(n));
    }
    for n in 1..=8 {
        atoms.push(Atom::ComplexProjective(n));
    }
    for n in [1, 2, 3, 7] {
        atoms.push(Atom::Sphere(n));
    }
    for ambient in 3..=13 {
        atoms.push(Atom::Grassmannian { k: 2, ambient });
    }
    for ambient in 4..=13 {
        atoms.push(Atom::Grassmannian { k: 3, ambient });
    }
    atoms
}

pub fn oriented_atoms() -> Vec<Atom> {
    let mut atoms = Vec::new();
    for ambient in 3..=13 {
        atoms.push(Atom::OrientedGrassmannian { k: 2, ambient });
    }
    for ambient in 4..=13 {
        atoms.push(Atom::OrientedGrassmannian { k: 3, ambient });
    }
    atoms
}

pub fn build(atoms: &[Atom]) -> ManifoldData {
    ManifoldData::from_atoms(atoms).unwrap()
}

/// A product mix small enough for slice checks.
pub fn sample_products() -> Vec<Vec<Atom>> {
    use Atom::*;
    vec![
        vec![RealProjective(2), RealProjective(4)],
        vec![RealProjective(1), RealProjective(2), RealProjective(4)],
        vec![
            ComplexProjective(1),
            ComplexProjective(2),
            ComplexProjective(4),
        ],
        vec![RealProjective(3), Grassmannian { k: 2, ambient: 4 }],
        vec![Sphere(2), ComplexProjective(2)],
        vec![
            Grassmannian { k: 2, ambient: 5 },
            Grassmannian { k: 2, ambient: 4 },
        ],
    ]
}

pub fn random_homogeneous(rng: &mut ChaCha8Rng, table: &GeneratorTable, d: u32) -> Poly {
    let monomials = monomials_of_degree(table, d);
    Poly::from_monomials(
        table.len(),
        monomials.into_iter().filter(|_| rng.gen_bool(0.5)),
    )
}

pub fn random_poly(rng: &mut ChaCha8Rng, table: &GeneratorTable, max_degree: u32) -> Poly {
    let mut p = Poly::zero(table.len());
    for d in 0..=max_degree {
        if rng.gen_bool(0.6) {
            p += &random_homogeneous(rng, table, d);
        }
    }
    p
}

pub fn random_monomial(rng: &mut ChaCha8Rng, table: &GeneratorTable, d: u32) -> Option<Monomial> {
    let monomials = monomials_of_degree(table, d);
    if monomials.is_empty() {
        None
    } else {
        Some(monomials[rng.gen_range(0..monomials.len())])
    }
}

pub fn parse(s: &str, table: &GeneratorTable) -> Poly {
    Poly::parse(s, table).unwrap()
}
