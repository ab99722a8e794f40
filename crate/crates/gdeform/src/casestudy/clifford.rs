//! The order-54 family: deformations of the anticommutator algebra on three
//! variables under the group generated by the `S₃` permutation matrices and
//! `diag(1, ω, ω²)`. The family `A(yz+zy)+Bx², A(zx+xz)+By², A(xy+yx)+Bz²`
//! is a projective line, and the degree-3 collision rank drops at exactly
//! four parameter points.

use std::sync::Arc;

use crate::algebra::{hilbert_function, is_g_stable, Presentation};
use crate::deform::{hom_family, vk_membership, FamilyShape};
use crate::exact::tensor::tensor_dim;
use crate::exact::{parametric_rank, CycScalar, ExactMatrix, Field, FracScalar, SparseVec};
use crate::symmetry::{
    enumerate_group, permutation_matrix, FiniteGroupData, MatrixRep, Representation,
    DEFAULT_ELEMENT_CAP,
};
use crate::Result;

use super::report::{Provenance, Report};

/// The group generated by the permutation matrices of `S₃` and
/// `diag(1, ω, ω²)`; enumeration gives order 54.
pub fn clifford_group() -> Result<(Arc<FiniteGroupData>, Representation)> {
    let w = CycScalar::zeta(3);
    let diag = ExactMatrix::from_fn(3, 3, |i, j| {
        if i == j {
            w.pow(i as i64)
        } else {
            CycScalar::zero()
        }
    });
    let gens = vec![
        permutation_matrix(&[1, 0, 2]),
        permutation_matrix(&[1, 2, 0]),
        diag,
    ];
    let group = enumerate_group(gens.clone(), DEFAULT_ELEMENT_CAP)?;
    let rep = Representation::Matrix(MatrixRep::new(group.clone(), gens, "V")?);
    Ok((group, rep))
}

/// Relation vectors `A(yz+zy)+Bx²`, `A(zx+xz)+By²`, `A(xy+yx)+Bz²` over any
/// field containing the scalars. Generators are ordered `x, y, z`.
pub fn family_relations<F: Field>(a: &F, b: &F) -> Vec<Vec<F>> {
    let dim = 3usize;
    let idx = |i: usize, j: usize| i * dim + j;
    let mut out = Vec::new();
    for (pair, square) in [((1, 2), 0), ((2, 0), 1), ((0, 1), 2)] {
        let mut row = vec![F::zero(); dim * dim];
        row[idx(pair.0, pair.1)] = a.clone();
        row[idx(pair.1, pair.0)] = a.clone();
        row[idx(square, square)] = b.clone();
        out.push(row);
    }
    out
}

pub fn family_presentation(a: &CycScalar, b: &CycScalar, cutoff: usize) -> Result<Presentation> {
    let (_, rep) = clifford_group()?;
    let basis: Vec<SparseVec<CycScalar>> = family_relations(a, b)
        .into_iter()
        .map(|row| SparseVec::from_dense(&row))
        .collect();
    Presentation::new(
        vec!["x".into(), "y".into(), "z".into()],
        Some(rep),
        vec![(2, basis)],
        cutoff,
    )
}

/// Degree-3 collision matrix: the rows `r ⊗ x_j` and `x_j ⊗ r` of all
/// quadratic relations, over the word basis of the cube.
pub fn degree3_collision<F: Field>(relations: &[Vec<F>], dim: usize) -> ExactMatrix<F> {
    let cols = tensor_dim(dim, 3);
    let mut rows = Vec::new();
    for rel in relations {
        for j in 0..dim {
            // r ⊗ x_j
            let mut row = vec![F::zero(); cols];
            for (idx, c) in rel.iter().enumerate() {
                if !c.is_zero() {
                    row[idx * dim + j] = c.clone();
                }
            }
            rows.push(row);
            // x_j ⊗ r
            let mut row = vec![F::zero(); cols];
            for (idx, c) in rel.iter().enumerate() {
                if !c.is_zero() {
                    row[j * dim * dim + idx] = c.clone();
                }
            }
            rows.push(row);
        }
    }
    ExactMatrix::from_rows(rows)
}

/// Rank drops of the degree-3 collision matrix over both charts of the
/// projective parameter line. Returns the drop points as normalized `[A:B]`
/// pairs.
pub fn degeneracy_scan() -> Result<Vec<(CycScalar, CycScalar)>> {
    let t = FracScalar::parameter();
    let one = FracScalar::one();

    // chart [1 : t]
    let chart1 = degree3_collision(&family_relations(&one, &t), 3);
    let report1 = parametric_rank(&chart1);
    // chart [t : 1]
    let chart2 = degree3_collision(&family_relations(&t, &one), 3);
    let report2 = parametric_rank(&chart2);
    assert_eq!(report1.generic_rank, report2.generic_rank);
    assert!(report1.unresolved_factors.is_empty());
    assert!(report2.unresolved_factors.is_empty());

    let mut points: Vec<(CycScalar, CycScalar)> = Vec::new();
    let mut push = |a: CycScalar, b: CycScalar| {
        // normalize: first nonzero coordinate 1
        let (a, b) = if !a.is_zero() {
            let inv = a.inv().unwrap();
            (CycScalar::one(), b.mul(&inv))
        } else {
            (CycScalar::zero(), CycScalar::one())
        };
        if !points.iter().any(|(x, y)| *x == a && *y == b) {
            points.push((a, b));
        }
    };
    for c in report1.drop_points {
        push(CycScalar::one(), c);
    }
    for c in report2.drop_points {
        push(c, CycScalar::one());
    }
    Ok(points)
}

pub fn generic_degree3_rank() -> Result<usize> {
    let t = FracScalar::parameter();
    let chart1 = degree3_collision(&family_relations(&FracScalar::one(), &t), 3);
    Ok(parametric_rank(&chart1).generic_rank)
}

pub fn run_clifford(params: &[CycScalar], cutoff: usize, _samples: usize) -> Result<Report> {
    let (a, b) = match params {
        [] => (CycScalar::one(), CycScalar::from_int(2)),
        [a] => (CycScalar::one(), a.clone()),
        [a, b, ..] => (a.clone(), b.clone()),
    };
    let mut report = Report::new("clifford");
    report.meta("family", "A(yz+zy)+Bx^2, A(zx+xz)+By^2, A(xy+yx)+Bz^2");
    report.meta("A", format!("{}", a));
    report.meta("B", format!("{}", b));
    report.meta("cutoff", cutoff.to_string());
    report.meta(
        "regularity",
        "not certified here; Hilbert functions and graded characters only",
    );

    let (group, rep) = clifford_group()?;
    report.verdict_eq("group_order", 54usize, group.order(), Provenance::Literature);

    // the reference relation space and its Hom family
    let reference: Vec<SparseVec<CycScalar>> = family_relations(&CycScalar::one(), &CycScalar::zero())
        .into_iter()
        .map(|row| SparseVec::from_dense(&row))
        .collect();
    let fam = hom_family(&rep, 2, &reference)?;
    report.verdict_eq("hom_dimension", 2usize, fam.hom_dim(), Provenance::Literature);
    report.verdict_eq("end_dimension", 1usize, fam.end_dim, Provenance::Literature);
    let shape = match fam.shape {
        FamilyShape::Projective(d) => format!("P^{}", d),
        FamilyShape::Raw => "raw".to_string(),
    };
    report.verdict_eq("family_shape", "P^1", shape, Provenance::Literature);

    // the explicit second coordinate map x² ⊕ y² ⊕ z² spans the family with
    // the inclusion: both members must be stable, and generic members too
    let squares = family_presentation(&CycScalar::zero(), &CycScalar::one(), cutoff)?;
    let member = family_presentation(&a, &b, cutoff)?;
    let generic = family_presentation(&CycScalar::one(), &CycScalar::one(), cutoff)?;
    let mut stable_all = true;
    for p in [&squares, &member, &generic] {
        stable_all &= is_g_stable(p)?.stable;
    }
    report.verdict(
        "family_members_are_stable",
        "stable for all [A:B]",
        if stable_all { "stable" } else { "unstable" },
        Provenance::Literature,
        stable_all,
    );

    // parametric degree-3 scan over both charts
    let generic_rank = generic_degree3_rank()?;
    let generic_dim_a3 = tensor_dim(3, 3) - generic_rank;
    report.verdict_eq("generic_dim_A3", 10usize, generic_dim_a3, Provenance::Oracle);

    let drops = degeneracy_scan()?;
    let drop_strings: Vec<String> = drops
        .iter()
        .map(|(x, y)| format!("[{}:{}]", x, y))
        .collect();
    {
        let s = report.section("degeneracy");
        s.row("generic_rank", generic_rank);
        s.row("drop_points", drop_strings.join(", "));
    }
    let w = CycScalar::zeta(3);
    let expected_drops = vec![
        (CycScalar::zero(), CycScalar::one()),
        (CycScalar::one(), CycScalar::one()),
        (CycScalar::one(), w.clone()),
        (CycScalar::one(), w.pow(2)),
    ];
    let drops_match = drops.len() == expected_drops.len()
        && expected_drops
            .iter()
            .all(|(x, y)| drops.iter().any(|(u, v)| u == x && v == y));
    report.verdict(
        "degenerate_locus",
        "[0:1], [1:1], [1:w], [1:w^2]",
        drop_strings.join(", "),
        Provenance::Literature,
        drops_match,
    );

    // Hilbert function of the requested member, flagged at degenerate points
    let at_bad = drops
        .iter()
        .any(|(x, y)| x.mul(&b) == y.mul(&a));
    let h = hilbert_function(&member, cutoff.min(3))?;
    {
        let s = report.section("hilbert");
        s.row("member", format!("{:?}", h));
        if at_bad {
            s.row("flag", "parameter lies on the degenerate locus");
        }
    }
    let expect_h: Vec<usize> = vec![1, 3, 6, 10];
    report.verdict(
        "member_dim_A3",
        if at_bad { "degenerate (flagged)".to_string() } else { format!("{:?}", &expect_h[..=cutoff.min(3)]) },
        format!("{:?}", h),
        Provenance::Oracle,
        at_bad || h[..] == expect_h[..=cutoff.min(3)],
    );

    // the boundary point [0:1] fails the generic degree-3 profile
    let squares_span3 = crate::algebra::ideal_degree_span(&squares, 3)?;
    let spans = vec![(2usize, squares.relation_span(2)), (3usize, squares_span3)];
    let expected_dims = [(2usize, 3usize), (3usize, generic_rank)].into_iter().collect();
    let vk = vk_membership(3, &spans, Some(&expected_dims));
    let flagged = matches!(
        vk.violation,
        Some(crate::deform::VkViolation::DimensionMismatch {
            degree: 3,
            got: 15,
            want: 17
        })
    );
    report.verdict(
        "boundary_point_flagged_at_degree_3",
        "dimension 15 vs generic 17",
        format!("{:?}", vk.violation),
        Provenance::Oracle,
        flagged,
    );

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_54_and_family_shape() {
        let (group, _) = clifford_group().unwrap();
        assert_eq!(group.order(), 54);
    }

    #[test]
    fn degeneracy_points_are_the_four_roots() {
        let drops = degeneracy_scan().unwrap();
        assert_eq!(drops.len(), 4);
        let w = CycScalar::zeta(3);
        assert!(drops.contains(&(CycScalar::zero(), CycScalar::one())));
        assert!(drops.contains(&(CycScalar::one(), CycScalar::one())));
        assert!(drops.contains(&(CycScalar::one(), w.clone())));
        assert!(drops.contains(&(CycScalar::one(), w.pow(2))));
    }

    #[test]
    fn hilbert_at_boundary_point() {
        let p = family_presentation(&CycScalar::zero(), &CycScalar::one(), 3).unwrap();
        assert_eq!(hilbert_function(&p, 3).unwrap(), vec![1, 3, 6, 12]);
    }

    #[test]
    fn study_passes_at_a_generic_point() {
        let report = run_clifford(&[CycScalar::one(), CycScalar::from_int(5)], 3, 5).unwrap();
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn characters_are_constant_along_the_good_locus() {
        // equal Hilbert functions on a connected family force equal graded
        // characters: check three good parameter points degree by degree
        let params = [(1i64, 2i64), (1, 3), (2, 1)];
        let mut reference: Option<Vec<crate::symmetry::Character>> = None;
        for (a, b) in params {
            let p = family_presentation(&CycScalar::from_int(a), &CycScalar::from_int(b), 3)
                .unwrap();
            let tower = crate::algebra::ideal_tower(&p, 3).unwrap();
            assert_eq!(
                crate::algebra::hilbert_from_tower(&p, &tower),
                vec![1, 3, 6, 10]
            );
            let chars: Vec<crate::symmetry::Character> = (0..=3)
                .map(|k| crate::algebra::degree_character(&p, &tower, k).unwrap())
                .collect();
            match &reference {
                None => reference = Some(chars),
                Some(reference) => assert_eq!(reference, &chars),
            }
        }
    }
}
