//! `verify`: cross-checks the Gröbner-basis pipeline for one ring against the
//! dense degree-slice oracle.

use std::fmt::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewbound::algebra::monomials_of_degree;
use skewbound::symmetric::{build_pk, variable_table, SymmetricPoly};
use skewbound::{bound, oracle, Atom, GeneratorTable, ManifoldData, Poly, QuotientRing};

use crate::{manifold, parse, status, Checked, CliError};

const SEED: u64 = 0x5eed;
const SAMPLES: usize = 100;

pub fn verify(text: &str) -> Result<Checked, CliError> {
    let m = manifold(&parse(text)?)?;
    let checks = run_checks(&m)?;
    let mut text = format!("verify {}\n", m.label);
    for (name, ok) in &checks {
        writeln!(text, "{}  {name}", status(*ok)).unwrap();
    }
    let all_pass = checks.iter().all(|(_, ok)| *ok);
    Ok(Checked { text, all_pass })
}

fn random_homogeneous(rng: &mut ChaCha8Rng, table: &GeneratorTable, d: u32) -> Poly {
    let monomials = monomials_of_degree(table, d);
    Poly::from_monomials(
        table.len(),
        monomials.into_iter().filter(|_| rng.gen_bool(0.5)),
    )
}

pub fn run_checks(m: &ManifoldData) -> Result<Vec<(String, bool)>, CliError> {
    let ring = &m.ring;
    let presentation = ring.presentation();
    let table = ring.table();
    let top = ring.top_dimension();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut checks = Vec::new();

    let dims_agree =
        (0..=top).all(|d| ring.dimension_in_degree(d) == oracle::slice_dimension(presentation, d));
    checks.push((
        "standard monomial counts match slice ranks".to_string(),
        dims_agree,
    ));

    checks.push((
        "nothing survives above the top degree".to_string(),
        oracle::slice_dimension(presentation, top + 1) == 0,
    ));

    let relations_vanish = presentation.relations.iter().all(|r| ring.is_zero(r));
    checks.push((
        "defining relations reduce to zero".to_string(),
        relations_vanish,
    ));

    let zero_agree = (0..SAMPLES).all(|_| {
        let d = rng.gen_range(0..=top);
        let p = random_homogeneous(&mut rng, table, d);
        ring.is_zero(&p) == oracle::slice_zero_test(presentation, &p)
    });
    checks.push((
        format!("zero test agrees with slice oracle ({SAMPLES} samples)"),
        zero_agree,
    ));

    let duality = ring.dimension_in_degree(top) == 1
        && (0..=top).all(|d| ring.dimension_in_degree(d) == ring.dimension_in_degree(top - d));
    checks.push(("Poincare duality of graded dimensions".to_string(), duality));

    let dual = bound::dual_class(m)?;
    let product = ring.mul(&m.total_sw.to_poly(), &dual.to_poly());
    checks.push(("w * wbar = 1".to_string(), product.is_one()));

    if let Some(kernel) = &m.oriented_kernel {
        checks.push((
            format!("membership in (w1) agrees with slice oracle ({SAMPLES} samples)"),
            oriented_membership(ring, kernel, &mut rng)?,
        ));
    }

    for atom in m.atoms() {
        if let Atom::Grassmannian { k, .. } | Atom::OrientedGrassmannian { k, .. } = *atom {
            checks.push((
                format!("p_{k} expansion re-expands to its product"),
                pk_round_trip(k as usize)?,
            ));
        }
    }
    Ok(checks)
}

fn oriented_membership(
    ring: &QuotientRing,
    kernel: &[Poly],
    rng: &mut ChaCha8Rng,
) -> Result<bool, CliError> {
    let presentation = ring.presentation();
    for _ in 0..SAMPLES {
        let d = rng.gen_range(0..=ring.top_dimension());
        let p = random_homogeneous(rng, ring.table(), d);
        if ring.ideal_membership(&p, kernel)? != oracle::slice_ideal_test(presentation, &p, kernel)
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rebuilds `prod_{i != j} (1 + x_i + x_j)` directly and checks the stored
/// expansion against it.
fn pk_round_trip(k: usize) -> Result<bool, CliError> {
    let xs = variable_table(k)?;
    let mut prod = Poly::one(k);
    for i in 0..k {
        for j in 0..k {
            if i != j {
                let factor = &(&Poly::one(k) + &Poly::var(i, &xs)?) + &Poly::var(j, &xs)?;
                prod = &prod * &factor;
            }
        }
    }
    Ok(oracle::expand_verify(
        &build_pk(k)?,
        &SymmetricPoly::new(prod)?,
    ))
}
