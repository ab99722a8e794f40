//! Equivariant Hom spaces and multiplicities.

use crate::error::Error;
use crate::exact::{CycScalar, ExactMatrix, RowSpace, SparseVec};
use crate::Result;

use super::group::FiniteGroupData;
use super::rep::{character_inner_product, Character, Representation};

/// Basis of `{F : A → B | F ∘ ρ_A(g) = ρ_B(g) ∘ F for all generators g}`,
/// computed as the kernel of the stacked intertwining system. `gens_a` and
/// `gens_b` are the generator images on `A` and `B`.
pub fn intertwiner_basis(
    gens_a: &[ExactMatrix<CycScalar>],
    gens_b: &[ExactMatrix<CycScalar>],
) -> Vec<ExactMatrix<CycScalar>> {
    assert_eq!(gens_a.len(), gens_b.len());
    let da = gens_a.first().map_or(0, |m| m.ncols());
    let db = gens_b.first().map_or(0, |m| m.ncols());
    let unknowns = da * db; // F is db x da, index (i, j) -> i * da + j
    let mut space = RowSpace::new(unknowns);
    for (ga, gb) in gens_a.iter().zip(gens_b) {
        for i in 0..db {
            for j in 0..da {
                // (F ρ_A(g) - ρ_B(g) F)[i, j] = Σ_k F[i,k] A[k,j] - Σ_k B[i,k] F[k,j]
                let mut entries = Vec::new();
                for k in 0..da {
                    let c = ga.at(k, j);
                    if !c.is_zero() {
                        entries.push((i * da + k, c.clone()));
                    }
                }
                for k in 0..db {
                    let c = gb.at(i, k);
                    if !c.is_zero() {
                        entries.push((k * da + j, c.neg()));
                    }
                }
                space.insert(SparseVec::from_entries(entries));
            }
        }
    }
    space
        .kernel_basis()
        .into_iter()
        .map(|v| {
            let dense = v.to_dense(unknowns);
            ExactMatrix::from_fn(db, da, |i, j| dense[i * da + j].clone())
        })
        .collect()
}

/// Basis of the space of equivariant maps `A → B`.
///
/// Matrix backend: intertwiner kernel over the generators, cross-checked
/// against the character inner product. Weight backend: weight matching.
pub fn hom_space(a: &Representation, b: &Representation) -> Result<Vec<ExactMatrix<CycScalar>>> {
    match (a, b) {
        (Representation::Matrix(ma), Representation::Matrix(mb)) => {
            if !std::sync::Arc::ptr_eq(ma.group(), mb.group()) {
                return Err(Error::GroupMismatch);
            }
            let basis = intertwiner_basis(ma.generator_images(), mb.generator_images());
            let expected =
                character_inner_product(ma.group(), &ma.character(), &mb.character());
            assert_eq!(
                basis.len(),
                expected,
                "intertwiner dimension disagrees with the character inner product"
            );
            Ok(basis)
        }
        (Representation::Weight(wa), Representation::Weight(wb)) => {
            let mut out = Vec::new();
            for (j, w) in wa.weights().iter().enumerate() {
                for (i, v) in wb.weights().iter().enumerate() {
                    if w == v {
                        let mut m = ExactMatrix::zeros(wb.dim(), wa.dim());
                        *m.at_mut(i, j) = CycScalar::one();
                        out.push(m);
                    }
                }
            }
            Ok(out)
        }
        _ => Err(Error::BackendMismatch),
    }
}

/// Multiplicity of the absolutely irreducible `s` inside `w`.
///
/// Matrix backend: the character inner product, which equals
/// `dim Hom_G(s, w)` by Schur's lemma; absolute irreducibility is certified
/// first by `dim End_G(s) = 1`. Weight backend: multiset count.
pub fn multiplicity(s: &Representation, w: &Representation) -> Result<usize> {
    multiplicity_of_character(s, &w.character(), w_group(s, w)?)
}

fn w_group<'a>(
    s: &'a Representation,
    w: &'a Representation,
) -> Result<Option<&'a FiniteGroupData>> {
    match (s, w) {
        (Representation::Matrix(ms), Representation::Matrix(mw)) => {
            if !std::sync::Arc::ptr_eq(ms.group(), mw.group()) {
                return Err(Error::GroupMismatch);
            }
            Ok(Some(ms.group()))
        }
        (Representation::Weight(_), Representation::Weight(_)) => Ok(None),
        _ => Err(Error::BackendMismatch),
    }
}

/// Multiplicity of `s` in a (possibly virtual) character `chi`. Used when the
/// ambient representation is too large to materialize, e.g. tensor powers.
pub fn multiplicity_of_character(
    s: &Representation,
    chi: &Character,
    group: Option<&FiniteGroupData>,
) -> Result<usize> {
    match s {
        Representation::Matrix(ms) => {
            let group = group.ok_or(Error::NoGroupAttached)?;
            let end = intertwiner_basis(ms.generator_images(), ms.generator_images());
            if end.len() != 1 {
                return Err(Error::NotIrreducible { end_dim: end.len() });
            }
            Ok(character_inner_product(group, &ms.character(), chi))
        }
        Representation::Weight(ws) => {
            if ws.dim() != 1 {
                return Err(Error::NotIrreducible { end_dim: ws.dim() });
            }
            let target = &ws.weights()[0];
            match chi {
                Character::Weights { multiset } => {
                    Ok(multiset.get(target).copied().unwrap_or(0))
                }
                _ => Err(Error::BackendMismatch),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::group::{enumerate_group, permutation_matrix, DEFAULT_ELEMENT_CAP};
    use crate::symmetry::rep::{MatrixRep, WeightRep};

    fn perm_rep(n: usize) -> Representation {
        // adjacent transpositions as generators
        let gens: Vec<ExactMatrix<CycScalar>> = (0..n - 1)
            .map(|i| {
                let mut p: Vec<usize> = (0..n).collect();
                p.swap(i, i + 1);
                permutation_matrix(&p)
            })
            .collect();
        let group = enumerate_group(gens.clone(), DEFAULT_ELEMENT_CAP).unwrap();
        Representation::Matrix(MatrixRep::new(group, gens, "V").unwrap())
    }

    #[test]
    fn end_of_s3_permutation_rep_is_two_dimensional() {
        // V = S ⊕ T, so ⟨χ_V, χ_V⟩ = 2
        let v = perm_rep(3);
        let basis = hom_space(&v, &v).unwrap();
        assert_eq!(basis.len(), 2);
    }

    #[test]
    fn invariants_of_tensor_square_match_orbit_count() {
        // Hom(trivial, V⊗V) = invariants; the S_3-orbits on ordered pairs
        // (i, j) are the diagonal and the off-diagonal, so the dimension is 2.
        let v = perm_rep(3);
        let vm = v.as_matrix().unwrap();
        let group = vm.group().clone();
        let trivial = Representation::Matrix(
            MatrixRep::new(
                group.clone(),
                vec![ExactMatrix::identity(1); group.num_generators()],
                "T",
            )
            .unwrap(),
        );
        let t2 = v.tensor(&v).unwrap();
        let basis = hom_space(&trivial, &t2).unwrap();
        // oracle: orbit count of the group action on ordered pairs
        let mut pairs: std::collections::BTreeSet<(usize, usize)> = (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .collect();
        let mut orbits = 0;
        while let Some(&(i, j)) = pairs.iter().next() {
            orbits += 1;
            // close under the two generators (0 1) and (0 1 2)
            let mut stack = vec![(i, j)];
            while let Some((a, b)) = stack.pop() {
                if pairs.remove(&(a, b)) {
                    let s = |x: usize| [1, 0, 2][x];
                    let c = |x: usize| [1, 2, 0][x];
                    stack.push((s(a), s(b)));
                    stack.push((c(a), c(b)));
                }
            }
        }
        assert_eq!(orbits, 2);
        assert_eq!(basis.len(), orbits);
    }

    #[test]
    fn weight_backend_hom_dimension() {
        let v = Representation::Weight(WeightRep::new(
            2,
            vec![vec![1, 0], vec![0, 1]],
            "V",
        ));
        let vv = v.tensor(&v).unwrap();
        let chi = Representation::Weight(WeightRep::character_rep(2, vec![1, 1], "χ_{e1+e2}"));
        let basis = hom_space(&chi, &vv).unwrap();
        assert_eq!(basis.len(), 2);
    }

    #[test]
    fn multiplicity_examples() {
        let v4 = perm_rep(4);
        let v4m = v4.as_matrix().unwrap();
        let group = v4m.group().clone();
        let trivial = Representation::Matrix(
            MatrixRep::new(
                group.clone(),
                vec![ExactMatrix::identity(1); group.num_generators()],
                "T",
            )
            .unwrap(),
        );
        assert_eq!(multiplicity(&trivial, &v4).unwrap(), 1);

        // multiplicity of the 3-dim Schrödinger simple inside V ⊗ V for H_3:
        // V ⊗ V is the other Schrödinger representation three times over
        let w = CycScalar::zeta(3);
        let shift = permutation_matrix(&[2, 0, 1]);
        let diag = |p: i64| {
            ExactMatrix::from_fn(3, 3, |i, j| {
                if i == j {
                    w.pow(p * i as i64)
                } else {
                    CycScalar::zero()
                }
            })
        };
        let h3 = enumerate_group(vec![shift.clone(), diag(1)], DEFAULT_ELEMENT_CAP).unwrap();
        let schr1 = Representation::Matrix(
            MatrixRep::new(h3.clone(), vec![shift.clone(), diag(1)], "V_ω").unwrap(),
        );
        let schr2 = Representation::Matrix(
            MatrixRep::new(h3.clone(), vec![shift.clone(), diag(2)], "V_ω²").unwrap(),
        );
        let vv = schr1.tensor(&schr1).unwrap();
        assert_eq!(multiplicity(&schr2, &vv).unwrap(), 3);
        assert_eq!(multiplicity(&schr1, &vv).unwrap(), 0);
    }

    #[test]
    fn reducible_s_is_rejected() {
        let v = perm_rep(3);
        let vv = v.tensor(&v).unwrap();
        assert!(matches!(
            multiplicity(&v, &vv),
            Err(Error::NotIrreducible { end_dim: 2 })
        ));
    }

    #[test]
    fn standard_rep_occurs_once_in_its_tensor_square() {
        // S ⊗ S = S∧S ⊕ T ⊕ S ⊕ W for the standard representation of S_4
        let (group, irreps) =
            crate::symmetry::builtin::symmetric_group_irreps(4).unwrap();
        let s = irreps.iter().find(|r| r.label() == "[3,1]").unwrap();
        let ss = s.tensor(s).unwrap();
        assert_eq!(multiplicity(s, &ss).unwrap(), 1);
        // and S ⊗ trivial ≅ S
        let trivial = irreps.iter().find(|r| r.label() == "[4]").unwrap();
        let s_triv = s.tensor(trivial).unwrap();
        assert_eq!(multiplicity(s, &s_triv).unwrap(), 1);
        let _ = group;
    }

    #[test]
    fn multiplicity_is_additive_over_direct_sums() {
        let v = perm_rep(4);
        let vm = v.as_matrix().unwrap();
        let group = vm.group().clone();
        let trivial = Representation::Matrix(
            MatrixRep::new(
                group.clone(),
                vec![ExactMatrix::identity(1); group.num_generators()],
                "T",
            )
            .unwrap(),
        );
        let sum = v.direct_sum(&v).unwrap();
        assert_eq!(
            multiplicity(&trivial, &sum).unwrap(),
            2 * multiplicity(&trivial, &v).unwrap()
        );
        // S ⊗ trivial ≅ S has multiplicity 1
        let s_otimes_triv = trivial.tensor(&trivial).unwrap();
        assert_eq!(multiplicity(&trivial, &s_otimes_triv).unwrap(), 1);
    }

    #[test]
    fn weight_multiplicity_counts_compositions() {
        // multiplicity of chi_a in V^{⊗k} = number of length-k words of
        // weights summing to a
        let v = Representation::Weight(WeightRep::new(
            2,
            vec![vec![1, 0], vec![0, 1]],
            "V",
        ));
        let chi = Representation::Weight(WeightRep::character_rep(2, vec![2, 1], "χ_(2,1)"));
        let k = 3;
        let power = v.character().tensor_power(k);
        let got = multiplicity_of_character(&chi, &power, None).unwrap();
        // oracle: enumerate the words
        let mut count = 0;
        for w in 0..(1 << k) {
            let ones = (w as u32 & ((1 << k) - 1)).count_ones() as i64;
            if (k as i64 - ones, ones) == (2, 1) {
                count += 1;
            }
        }
        assert_eq!(got, count as usize);
        assert_eq!(got, 3);
    }

    #[test]
    fn mixed_backends_are_rejected() {
        let v = perm_rep(3);
        let w = Representation::Weight(WeightRep::new(2, vec![vec![1, 0], vec![0, 1]], "W"));
        assert!(matches!(hom_space(&v, &w), Err(Error::BackendMismatch)));
        assert!(matches!(v.tensor(&w), Err(Error::BackendMismatch)));
    }
}
