//! Rewriting symmetric polynomials over GF(2) in elementary symmetric polynomials.

use crate::algebra::{Generator, GeneratorTable, Monomial, Poly};
use crate::error::{Error, Result};

/// Largest rank for which `p_k` is built.
pub const MAX_PK_RANK: usize = 4;

/// `x1..xk`, all of degree one.
pub fn variable_table(k: usize) -> Result<GeneratorTable> {
    GeneratorTable::new(
        (1..=k)
            .map(|i| Generator::new(format!("x{i}"), 1))
            .collect(),
    )
}

/// A polynomial in `x1..xk` fixed by every permutation of the variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricPoly {
    poly: Poly,
}

impl SymmetricPoly {
    pub fn new(poly: Poly) -> Result<Self> {
        let table = variable_table(poly.nvars())?;
        for i in 1..poly.nvars() {
            if swap_variables(&poly, i - 1, i, &table) != poly {
                return Err(Error::NotSymmetric);
            }
        }
        Ok(Self { poly })
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn rank(&self) -> usize {
        self.poly.nvars()
    }
}

/// A polynomial in the elementary symmetric polynomials, written over the
/// table `w1..wk` with `deg wi = i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementaryExpansion {
    poly: Poly,
}

impl ElementaryExpansion {
    pub fn from_poly(poly: Poly) -> Self {
        Self { poly }
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn into_poly(self) -> Poly {
        self.poly
    }

    pub fn rank(&self) -> usize {
        self.poly.nvars()
    }

    pub fn table(&self) -> GeneratorTable {
        GeneratorTable::stiefel_whitney(self.rank()).expect("rank within generator limit")
    }

    /// Substitutes `wi -> e_i(x1..xk)` and expands.
    pub fn to_symmetric(&self) -> Poly {
        let k = self.rank();
        let xs = variable_table(k).expect("rank within generator limit");
        let elementary: Vec<Poly> = (1..=k).map(|i| elementary_symmetric(i, &xs)).collect();
        let mut out = Poly::zero(k);
        for m in self.poly.terms() {
            let mut term = Poly::one(k);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = &term * &elementary[i].pow(e as u64, None);
                }
            }
            out += &term;
        }
        out
    }
}

/// `e_i(x1..xk)`.
pub fn elementary_symmetric(i: usize, xs: &GeneratorTable) -> Poly {
    let k = xs.len();
    let mut out = Poly::zero(k);
    for mask in 0u32..(1 << k) {
        if mask.count_ones() as usize == i {
            let exps: Vec<u16> = (0..k).map(|j| (mask >> j & 1) as u16).collect();
            out.toggle(Monomial::new(&exps, xs).expect("length matches"));
        }
    }
    out
}

fn swap_variables(p: &Poly, a: usize, b: usize, table: &GeneratorTable) -> Poly {
    Poly::from_monomials(
        p.nvars(),
        p.terms().map(|m| {
            let mut exps = m.exponents().to_vec();
            exps.swap(a, b);
            Monomial::new(&exps, table).expect("length matches")
        }),
    )
}

/// Leading-term subtraction: the leading monomial `x^λ` of a symmetric
/// polynomial has `λ` non-increasing and matches the leading monomial of
/// `prod σ_i^(λ_i - λ_{i+1})`.
pub fn expand_elementary(s: &SymmetricPoly) -> Result<ElementaryExpansion> {
    let k = s.rank();
    let xs = variable_table(k)?;
    let ws = GeneratorTable::stiefel_whitney(k)?;
    let elementary: Vec<Poly> = (1..=k).map(|i| elementary_symmetric(i, &xs)).collect();
    let mut work = s.poly().clone();
    let mut out = Poly::zero(k);
    while let Some(lead) = work.leading().copied() {
        let lambda = lead.exponents();
        if lambda.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotSymmetric);
        }
        let sigma: Vec<u16> = (0..k)
            .map(|i| lambda[i] - lambda.get(i + 1).copied().unwrap_or(0))
            .collect();
        let mut product = Poly::one(k);
        for (i, &e) in sigma.iter().enumerate() {
            if e > 0 {
                product = &product * &elementary[i].pow(e as u64, None);
            }
        }
        debug_assert_eq!(product.leading(), Some(&lead));
        work += &product;
        out.toggle(Monomial::new(&sigma, &ws)?);
    }
    Ok(ElementaryExpansion { poly: out })
}

/// Total Stiefel-Whitney class of `γ ⊗ γ*` for a rank-`k` bundle, as a
/// polynomial in `w1..wk`: the product of `(1 + x_i + x_j)` over all ordered
/// pairs. Diagonal factors are `1 + 2x_i = 1`.
pub fn build_pk(k: usize) -> Result<ElementaryExpansion> {
    if !(1..=MAX_PK_RANK).contains(&k) {
        return Err(Error::UnsupportedRank(k));
    }
    let xs = variable_table(k)?;
    let mut product = Poly::one(k);
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let mut factor = Poly::one(k);
            factor += &Poly::var(i, &xs)?;
            factor += &Poly::var(j, &xs)?;
            product = &product * &factor;
        }
    }
    expand_elementary(&SymmetricPoly::new(product)?)
}

/// [`build_pk`] with `w1 = 0`.
pub fn oriented_pk(k: usize) -> Result<ElementaryExpansion> {
    let pk = build_pk(k)?;
    Ok(ElementaryExpansion {
        poly: pk.poly.substitute_zero(0),
    })
}
