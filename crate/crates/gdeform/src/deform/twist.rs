//! Twists by graded automorphisms and the induced symmetries of the
//! deformation space.

use crate::algebra::{hilbert_function, Presentation};
use crate::error::Error;
use crate::exact::tensor::apply_slotwise;
use crate::exact::{solve_linear, CycScalar, ExactMatrix, Rat, SparseVec};
use crate::rng::SplitMix64;
use crate::symmetry::{hom_space, Representation};
use crate::Result;

use super::ledger::{canonical_point, DeformPoint, Ledger};

/// The twist of a presentation by a degree-1 automorphism `β`: the degree-`d`
/// relation space is carried through the inverse of the slotwise map
/// `x_{i_1} ⊗ x_{i_2} ⊗ … ↦ x_{i_1} ⊗ β(x_{i_2}) ⊗ … ⊗ β^{d-1}(x_{i_d})`;
/// for quadratic relations this is `(Id ⊗ β^{-1})(R)`.
pub fn twist(p: &Presentation, beta: &ExactMatrix<CycScalar>) -> Result<Presentation> {
    let dim = p.dim();
    assert_eq!(beta.nrows(), dim);
    let beta_inv = beta.inverse().ok_or(Error::NotInvertible)?;

    // β must be an automorphism of P: each relation space is preserved by
    // the diagonal action
    for (&degree, basis) in p.relations() {
        let span = p.relation_span(degree);
        let mats: Vec<&ExactMatrix<CycScalar>> = (0..degree).map(|_| beta).collect();
        for rel in basis {
            let moved = apply_slotwise(&mats, rel, dim);
            if !span.contains(&moved) {
                return Err(Error::NotAutomorphism);
            }
        }
    }

    // powers of the inverse: slot j carries β^{-j}
    let max_degree = p.relation_degrees().into_iter().max().unwrap_or(2);
    let mut inv_powers = vec![ExactMatrix::identity(dim)];
    for _ in 1..max_degree {
        let next = inv_powers.last().unwrap().mul(&beta_inv);
        inv_powers.push(next);
    }

    let mut relations = Vec::new();
    for (&degree, basis) in p.relations() {
        let mats: Vec<&ExactMatrix<CycScalar>> = (0..degree).map(|j| &inv_powers[j]).collect();
        let new_basis: Vec<SparseVec<CycScalar>> = basis
            .iter()
            .map(|rel| apply_slotwise(&mats, rel, dim))
            .collect();
        relations.push((degree, new_basis));
    }
    Presentation::new(
        p.gen_names().to_vec(),
        p.symmetry().cloned(),
        relations,
        p.cutoff(),
    )
}

#[derive(Debug)]
pub struct TwistFamilyReport {
    /// `Σ e_i² - 1 = dim End_G(V) - 1`.
    pub family_dim: usize,
    pub samples: usize,
    /// Non-proportional sampled automorphisms gave pairwise distinct points.
    pub points_distinct: bool,
    /// Hilbert functions of all sampled twists match the base, up to cutoff.
    pub hilbert_preserved: bool,
    pub points: Vec<DeformPoint>,
}

fn random_equivariant_automorphism(
    basis: &[ExactMatrix<CycScalar>],
    rng: &mut SplitMix64,
) -> ExactMatrix<CycScalar> {
    loop {
        let dim = basis[0].nrows();
        let mut acc = ExactMatrix::zeros(dim, dim);
        for b in basis {
            let c = CycScalar::from_int(rng.small_int(5));
            acc = acc.add(&b.scale(&c));
        }
        if acc.inverse().is_some() {
            return acc;
        }
    }
}

fn proportional(a: &ExactMatrix<CycScalar>, b: &ExactMatrix<CycScalar>) -> bool {
    // find the first nonzero entry of b and normalize
    for i in 0..a.nrows() {
        for j in 0..a.ncols() {
            if !b.at(i, j).is_zero() {
                let lambda = a.at(i, j).mul(&b.at(i, j).inv().unwrap());
                return a == &b.scale(&lambda);
            }
        }
    }
    a.is_zero()
}

/// Sample equivariant automorphisms of `V`, twist the base presentation by
/// each, and canonicalize into deformation points. Verifies that
/// non-proportional automorphisms land on distinct points and that every
/// sampled twist preserves the Hilbert function up to the cutoff.
pub fn twist_family_check(
    ledger: &Ledger,
    samples: usize,
    seed: u64,
) -> Result<TwistFamilyReport> {
    let p = ledger.base();
    let rep = p.symmetry().ok_or(Error::NoGroupAttached)?;
    let end_basis = hom_space(rep, rep)?;
    let family_dim = end_basis.len() - 1;

    let base_hilbert = hilbert_function(p, p.cutoff())?;
    let mut rng = SplitMix64::new(seed);
    let mut alphas = Vec::new();
    let mut points = Vec::new();
    let mut hilbert_preserved = true;
    while alphas.len() < samples {
        let alpha = random_equivariant_automorphism(&end_basis, &mut rng);
        let twisted = twist(p, &alpha)?;
        if hilbert_function(&twisted, p.cutoff())? != base_hilbert {
            hilbert_preserved = false;
        }
        points.push(canonical_point(ledger, &twisted)?);
        alphas.push(alpha);
    }

    let mut points_distinct = true;
    for i in 0..alphas.len() {
        for j in (i + 1)..alphas.len() {
            if proportional(&alphas[i], &alphas[j]) {
                if points[i] != points[j] {
                    points_distinct = false;
                }
            } else if points[i] == points[j] {
                points_distinct = false;
            }
        }
    }

    Ok(TwistFamilyReport {
        family_dim,
        samples,
        points_distinct,
        hilbert_preserved,
        points,
    })
}

/// Check that `h` normalizes the symmetry of the presentation.
fn check_normalizes(rep: &Representation, h: &ExactMatrix<CycScalar>) -> Result<()> {
    match rep {
        Representation::Matrix(m) => {
            let h_inv = h.inverse().ok_or(Error::NotInvertible)?;
            for g in m.generator_images() {
                let conj = h.mul(g).mul(&h_inv);
                if !m.group().contains(&conj) {
                    return Err(Error::NotNormalizing);
                }
            }
            Ok(())
        }
        Representation::Weight(w) => {
            // h must be monomial, and the induced permutation of the weight
            // lines must come from a linear map of the weight lattice
            let dim = w.dim();
            let mut perm = vec![usize::MAX; dim];
            for j in 0..dim {
                let mut nonzero = None;
                for i in 0..dim {
                    if !h.at(i, j).is_zero() {
                        if nonzero.is_some() {
                            return Err(Error::NotNormalizing);
                        }
                        nonzero = Some(i);
                    }
                }
                perm[j] = nonzero.ok_or(Error::NotInvertible)?;
            }
            // solve U · w_{π(j)} = w_j over the rationals
            let rank = w.rank();
            let mut rows = Vec::new();
            let mut rhs = Vec::new();
            for j in 0..dim {
                let source = &w.weights()[perm[j]];
                let target = &w.weights()[j];
                for r in 0..rank {
                    let mut row = vec![CycScalar::zero(); rank * rank];
                    for c in 0..rank {
                        row[r * rank + c] = CycScalar::from_rational(Rat::from_integer(
                            num_bigint::BigInt::from(source[c]),
                        ));
                    }
                    rows.push(row);
                    rhs.push(CycScalar::from_int(target[r]));
                }
            }
            let m = ExactMatrix::from_rows(rows);
            if solve_linear(&m, &rhs).is_none() {
                return Err(Error::NotNormalizing);
            }
            Ok(())
        }
    }
}

/// Transform a presentation by an element of the normalizer: every degree-`k`
/// relation space is carried through `h^{⊗k}`. Hilbert functions are
/// asserted unchanged up to the cutoff.
pub fn normalizer_action(
    h: &ExactMatrix<CycScalar>,
    p: &Presentation,
) -> Result<Presentation> {
    let rep = p.symmetry().ok_or(Error::NoGroupAttached)?;
    check_normalizes(rep, h)?;
    let dim = p.dim();
    let mut relations = Vec::new();
    for (&degree, basis) in p.relations() {
        let mats: Vec<&ExactMatrix<CycScalar>> = (0..degree).map(|_| h).collect();
        let moved: Vec<SparseVec<CycScalar>> = basis
            .iter()
            .map(|rel| apply_slotwise(&mats, rel, dim))
            .collect();
        relations.push((degree, moved));
    }
    let out = Presentation::new(
        p.gen_names().to_vec(),
        p.symmetry().cloned(),
        relations,
        p.cutoff(),
    )?;
    assert_eq!(
        hilbert_function(p, p.cutoff())?,
        hilbert_function(&out, p.cutoff())?,
        "normalizer action must preserve the Hilbert function"
    );
    Ok(out)
}

/// Normalizer action on a canonical deformation point.
pub fn normalizer_action_point(
    h: &ExactMatrix<CycScalar>,
    ledger: &Ledger,
    point: &DeformPoint,
) -> Result<DeformPoint> {
    let p = super::ledger::point_to_presentation(ledger, point)?;
    let moved = normalizer_action(h, &p)?;
    canonical_point(ledger, &moved)
}
