//! Cohomology rings and total Stiefel-Whitney classes of the supported manifolds.

use std::fmt;

use crate::algebra::{Generator, GeneratorTable, GradedSeries, Monomial, Poly};
use crate::error::{Error, Result};
use crate::quotient::{QuotientRing, RingPresentation};
use crate::symmetric::build_pk;

/// One factor of a catalog manifold. Grassmannians are given by rank and
/// ambient dimension, so `Grassmannian { k: 3, ambient: 7 }` is `G_3(R^7)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Atom {
    RealProjective(u32),
    ComplexProjective(u32),
    Sphere(u32),
    Grassmannian { k: u32, ambient: u32 },
    OrientedGrassmannian { k: u32, ambient: u32 },
}

impl Atom {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Atom::RealProjective(n) | Atom::ComplexProjective(n) | Atom::Sphere(n) => {
                if n == 0 {
                    return Err(Error::InvalidDimension(format!(
                        "{self}: n must be at least 1"
                    )));
                }
            }
            Atom::Grassmannian { k, ambient } | Atom::OrientedGrassmannian { k, ambient } => {
                if !(2..=3).contains(&k) {
                    return Err(Error::UnsupportedRank(k as usize));
                }
                if ambient < k + 1 {
                    return Err(Error::InvalidDimension(format!(
                        "{self}: ambient dimension must exceed k"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn dimension(&self) -> u32 {
        match *self {
            Atom::RealProjective(n) | Atom::Sphere(n) => n,
            Atom::ComplexProjective(n) => 2 * n,
            Atom::Grassmannian { k, ambient } | Atom::OrientedGrassmannian { k, ambient } => {
                k * (ambient - k)
            }
        }
    }

    pub fn is_oriented(&self) -> bool {
        matches!(self, Atom::OrientedGrassmannian { .. })
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::RealProjective(n) => write!(f, "RP({n})"),
            Atom::ComplexProjective(n) => write!(f, "CP({n})"),
            Atom::Sphere(n) => write!(f, "S({n})"),
            Atom::Grassmannian { k, ambient } => write!(f, "G({k},{ambient})"),
            Atom::OrientedGrassmannian { k, ambient } => write!(f, "G~({k},{ambient})"),
        }
    }
}

/// A closed manifold with its mod-2 cohomology ring and total class `w(M)`.
#[derive(Debug, Clone)]
pub struct ManifoldData {
    pub label: String,
    pub dimension: u32,
    pub ring: QuotientRing,
    /// `w(M)`, constant term one, truncated at the dimension.
    pub total_sw: GradedSeries,
    /// Generators of the kernel of the covering map in cohomology; only for
    /// oriented Grassmannians, whose classes are tested through that map.
    pub oriented_kernel: Option<Vec<Poly>>,
    pub closed: bool,
    atoms: Vec<Atom>,
}

impl ManifoldData {
    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn is_oriented(&self) -> bool {
        self.oriented_kernel.is_some()
    }

    pub fn from_atom(atom: Atom) -> Result<Self> {
        Self::from_atoms(&[atom])
    }

    /// The product of the given atoms. Oriented Grassmannians are only allowed alone.
    pub fn from_atoms(atoms: &[Atom]) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::InvalidDimension("empty product".into()));
        }
        for a in atoms {
            a.validate()?;
        }
        if atoms.len() > 1 && atoms.iter().any(Atom::is_oriented) {
            return Err(Error::OrientedProduct);
        }
        let parts: Vec<AtomParts> = atoms
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let suffix = (atoms.len() > 1).then_some(i + 1);
                atom_parts(a, i as u8, suffix)
            })
            .collect::<Result<_>>()?;

        let entries: Vec<Generator> = parts.iter().flat_map(|p| p.generators.clone()).collect();
        let table = GeneratorTable::new(entries)?;
        let nvars = table.len();
        let dimension: u32 = atoms.iter().map(Atom::dimension).sum();
        let label = atoms
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("x");

        let mut relations = Vec::new();
        let mut total = GradedSeries::one(nvars, dimension);
        let mut offset = 0;
        for p in &parts {
            let embed = |m: &Monomial| m.embed(offset, nvars);
            relations.extend(
                p.relations
                    .iter()
                    .map(|r| Poly::from_monomials(nvars, r.terms().map(embed))),
            );
            let factor =
                GradedSeries::from_poly(&p.total.to_poly(), dimension).map_terms(nvars, embed);
            total = total.mul(&factor);
            offset += p.generators.len();
        }

        let ring =
            QuotientRing::build(RingPresentation::new(table, relations, dimension, &label)?)?;
        let oriented_kernel = atoms[0]
            .is_oriented()
            .then(|| vec![Poly::var(0, ring.table()).expect("w1 is the first generator")]);
        Ok(Self {
            label,
            dimension,
            ring,
            total_sw: total,
            oriented_kernel,
            closed: true,
            atoms: atoms.to_vec(),
        })
    }
}

pub fn real_projective(n: u32) -> Result<ManifoldData> {
    ManifoldData::from_atom(Atom::RealProjective(n))
}

pub fn complex_projective(n: u32) -> Result<ManifoldData> {
    ManifoldData::from_atom(Atom::ComplexProjective(n))
}

pub fn sphere(n: u32) -> Result<ManifoldData> {
    ManifoldData::from_atom(Atom::Sphere(n))
}

pub fn grassmannian(k: u32, ambient: u32) -> Result<ManifoldData> {
    ManifoldData::from_atom(Atom::Grassmannian { k, ambient })
}

pub fn oriented_grassmannian(k: u32, ambient: u32) -> Result<ManifoldData> {
    ManifoldData::from_atom(Atom::OrientedGrassmannian { k, ambient })
}

pub fn product(a: &ManifoldData, b: &ManifoldData) -> Result<ManifoldData> {
    if a.is_oriented() || b.is_oriented() {
        return Err(Error::OrientedProduct);
    }
    let atoms: Vec<Atom> = a.atoms.iter().chain(&b.atoms).copied().collect();
    ManifoldData::from_atoms(&atoms)
}

/// Generators, relations and total class of one atom in its own variables.
struct AtomParts {
    generators: Vec<Generator>,
    relations: Vec<Poly>,
    total: GradedSeries,
}

fn atom_parts(atom: &Atom, family: u8, suffix: Option<usize>) -> Result<AtomParts> {
    let name = |base: &str| match suffix {
        Some(i) => format!("{base}.{i}"),
        None => base.to_string(),
    };
    let dim = atom.dimension();
    match *atom {
        Atom::RealProjective(n) | Atom::ComplexProjective(n) => {
            let complex = matches!(atom, Atom::ComplexProjective(_));
            let g = if complex {
                Generator::new(name("t"), 2).with_sw(family, 2, 2)
            } else {
                Generator::new(name("t"), 1).with_sw(family, 1, 1)
            };
            let table = GeneratorTable::new(vec![g.clone()])?;
            let t = Poly::var(0, &table)?;
            let relation = Poly::from_monomial(Monomial::new(&[(n + 1) as u16], &table)?);
            let one_plus_t = &Poly::one(1) + &t;
            let total = GradedSeries::from_poly(&one_plus_t, dim).pow(n as u64 + 1);
            Ok(AtomParts {
                generators: vec![g],
                relations: vec![relation],
                total,
            })
        }
        Atom::Sphere(n) => {
            let g = Generator::new(name("z"), n);
            let table = GeneratorTable::new(vec![g.clone()])?;
            Ok(AtomParts {
                generators: vec![g],
                relations: vec![Poly::from_monomial(Monomial::new(&[2], &table)?)],
                total: GradedSeries::one(1, dim),
            })
        }
        Atom::Grassmannian { k, ambient } | Atom::OrientedGrassmannian { k, ambient } => {
            let k = k as usize;
            let n = ambient - k as u32;
            let generators: Vec<Generator> = (1..=k)
                .map(|i| {
                    Generator::new(name(&format!("w{i}")), i as u32)
                        .with_sw(family, i as u8, k as u8)
                })
                .collect();
            let table = GeneratorTable::new(generators.clone())?;
            let mut gamma = Poly::one(k);
            for i in 0..k {
                gamma += &Poly::var(i, &table)?;
            }
            // H*(G_k(R^{n+k})) = GF(2)[w1..wk] / (dual classes in degrees n+1..n+k)
            let dual = GradedSeries::from_poly(&gamma, n + k as u32).inverse()?;
            let relations = (n + 1..=n + k as u32).map(|d| dual.component(d)).collect();
            // w(X) p_k = w(γ)^{n+k}
            let pk = build_pk(k)?;
            let pk_inverse = GradedSeries::from_poly(pk.poly(), dim).inverse()?;
            let total = GradedSeries::from_poly(&gamma, dim)
                .pow(ambient as u64)
                .mul(&pk_inverse);
            Ok(AtomParts {
                generators,
                relations,
                total,
            })
        }
    }
}
