//! Built-in groups and representations: symmetric groups with their full
//! irrep lists (Young's seminormal form, rational entries), permutation
//! representations, Heisenberg groups with Schrödinger representations, and
//! dihedral groups.

use std::sync::Arc;

use crate::error::Error;
use crate::exact::{CycScalar, ExactMatrix};
use crate::Result;

use super::group::{enumerate_group, permutation_matrix, FiniteGroupData, DEFAULT_ELEMENT_CAP};
use super::hom::intertwiner_basis;
use super::rep::{character_inner_product, MatrixRep, Representation};

#[derive(Clone, Debug, PartialEq)]
pub enum BuiltinFamily {
    /// All irreducible representations of `S_n`, `n ≤ 6`.
    SymmetricGroupIrreps(usize),
    /// The natural permutation representation of `S_n`.
    PermutationRep(usize),
    /// Heisenberg group of order `n³` (`n` prime) with its Schrödinger
    /// representation built from `ζ_n`.
    Heisenberg(u64),
    /// Dihedral group of order `2n` with its standard 2-dimensional
    /// representation over `ℚ(ζ_n)`.
    Dihedral(u64),
}

pub struct BuiltinReps {
    pub group: Arc<FiniteGroupData>,
    /// The representation the group was enumerated in.
    pub natural: Representation,
    /// Complete irrep list when the family provides one.
    pub irreps: Vec<Representation>,
}

/// Adjacent transpositions `(i, i+1)` as permutation matrices; the generator
/// list shared by the group and all its built-in representations.
fn adjacent_transposition_matrices(n: usize) -> Vec<ExactMatrix<CycScalar>> {
    (0..n - 1)
        .map(|i| {
            let mut p: Vec<usize> = (0..n).collect();
            p.swap(i, i + 1);
            permutation_matrix(&p)
        })
        .collect()
}

/// `S_n` enumerated from adjacent transpositions, with its permutation
/// representation.
pub fn symmetric_group(n: usize) -> Result<(Arc<FiniteGroupData>, Representation)> {
    if n < 2 {
        return Err(Error::UnsupportedRange { n, min: 2, max: 10 });
    }
    let gens = adjacent_transposition_matrices(n);
    let group = enumerate_group(gens.clone(), DEFAULT_ELEMENT_CAP)?;
    let rep = Representation::Matrix(MatrixRep::new(group.clone(), gens, "perm")?);
    Ok((group, rep))
}

// ---- partitions and standard tableaux ----

pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            cur.push(part);
            rec(n - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

type Tableau = Vec<Vec<usize>>; // rows of entries, 1-based values

fn standard_tableaux(shape: &[usize]) -> Vec<Tableau> {
    let n: usize = shape.iter().sum();
    let mut out = Vec::new();
    let mut cur: Tableau = shape.iter().map(|_| Vec::new()).collect();
    fn rec(k: usize, n: usize, shape: &[usize], cur: &mut Tableau, out: &mut Vec<Tableau>) {
        if k > n {
            out.push(cur.clone());
            return;
        }
        for r in 0..shape.len() {
            let c = cur[r].len();
            if c >= shape[r] {
                continue;
            }
            if r > 0 && cur[r - 1].len() <= c {
                continue;
            }
            cur[r].push(k);
            rec(k + 1, n, shape, cur, out);
            cur[r].pop();
        }
    }
    rec(1, n, shape, &mut cur, &mut out);
    out
}

fn position_of(t: &Tableau, value: usize) -> (usize, usize) {
    for (r, row) in t.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            if v == value {
                return (r, c);
            }
        }
    }
    panic!("value {} not found in tableau", value);
}

/// Young's seminormal representation of `S_n` for one partition: rational
/// matrices for the adjacent transpositions, on the standard-tableau basis.
fn seminormal_images(shape: &[usize], n: usize) -> Vec<ExactMatrix<CycScalar>> {
    let tableaux = standard_tableaux(shape);
    let dim = tableaux.len();
    let index: std::collections::HashMap<Tableau, usize> = tableaux
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, t)| (t, i))
        .collect();
    let mut images = Vec::with_capacity(n - 1);
    for i in 1..n {
        let mut m = ExactMatrix::zeros(dim, dim);
        for (col, t) in tableaux.iter().enumerate() {
            let (r1, c1) = position_of(t, i);
            let (r2, c2) = position_of(t, i + 1);
            let d = (c2 as i64 - r2 as i64) - (c1 as i64 - r1 as i64); // axial distance
            let inv_d = CycScalar::from_ratio(1, d);
            if r1 == r2 {
                // same row: d = 1
                *m.at_mut(col, col) = CycScalar::one();
                continue;
            }
            if c1 == c2 {
                // same column: d = -1
                *m.at_mut(col, col) = CycScalar::from_int(-1);
                continue;
            }
            let mut swapped = t.clone();
            swapped[r1][c1] = i + 1;
            swapped[r2][c2] = i;
            let other = index[&swapped];
            *m.at_mut(col, col) = inv_d.clone();
            let off = if d > 0 {
                CycScalar::one()
            } else {
                // 1 - 1/d²
                CycScalar::one().sub(&inv_d.mul(&inv_d))
            };
            *m.at_mut(other, col) = off;
        }
        images.push(m);
    }
    images
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Pairwise-orthogonal completeness check for an irrep list.
pub fn validate_irrep_list(
    group: &Arc<FiniteGroupData>,
    reps: &[Representation],
    require_complete: bool,
) -> Result<()> {
    let mut dim_sq = 0usize;
    for rep in reps {
        let m = rep.as_matrix().ok_or(Error::BackendMismatch)?;
        let end = intertwiner_basis(m.generator_images(), m.generator_images());
        if end.len() != 1 {
            return Err(Error::NotIrreducible { end_dim: end.len() });
        }
        dim_sq += m.dim() * m.dim();
    }
    for (i, a) in reps.iter().enumerate() {
        for b in reps.iter().skip(i + 1) {
            let (ma, mb) = (a.as_matrix().unwrap(), b.as_matrix().unwrap());
            let ip = character_inner_product(group, &ma.character(), &mb.character());
            if ip != 0 {
                return Err(Error::NotIrreducible { end_dim: ip });
            }
        }
    }
    if require_complete && dim_sq != group.order() {
        return Err(Error::IrrepListIncomplete {
            got: dim_sq,
            want: group.order(),
        });
    }
    Ok(())
}

/// Full list of irreducibles of `S_n` indexed by partitions, in seminormal
/// form. Validated: homomorphism property on the enumerated group, pairwise
/// orthogonality, and `Σ (dim)² = n!`.
pub fn symmetric_group_irreps(n: usize) -> Result<(Arc<FiniteGroupData>, Vec<Representation>)> {
    if !(2..=6).contains(&n) {
        return Err(Error::UnsupportedRange { n, min: 2, max: 6 });
    }
    let (group, _) = symmetric_group(n)?;
    let mut irreps = Vec::new();
    for shape in partitions(n) {
        let images = seminormal_images(&shape, n);
        let label = format!(
            "[{}]",
            shape.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        );
        let rep = MatrixRep::new(group.clone(), images, label)?;
        irreps.push(Representation::Matrix(rep));
    }
    validate_irrep_list(&group, &irreps, true)?;
    debug_assert_eq!(
        irreps.iter().map(|r| r.dim() * r.dim()).sum::<usize>(),
        factorial(n)
    );
    Ok((group, irreps))
}

/// Heisenberg group `H_n` of order `n³` (`n` prime), with its Schrödinger
/// representation `e_1·x_i = x_{i-1}`, `e_2·x_i = ω^i x_i`, and the full
/// irrep list: `n²` one-dimensional characters `χ_{a,b}` plus `n-1`
/// `n`-dimensional simples.
pub fn heisenberg(n: u64) -> Result<BuiltinReps> {
    let is_prime = n >= 2 && (2..n).all(|d| n % d != 0);
    if !is_prime || n > 13 {
        return Err(Error::UnsupportedRange {
            n: n as usize,
            min: 2,
            max: 13,
        });
    }
    let w = CycScalar::zeta(n);
    let dim = n as usize;
    // e1 sends x_i to x_{i-1}: basis vector i maps to i-1 (mod n)
    let shift_perm: Vec<usize> = (0..dim).map(|i| (i + dim - 1) % dim).collect();
    let shift = permutation_matrix(&shift_perm);
    let diag_power = |p: i64| {
        ExactMatrix::from_fn(dim, dim, |i, j| {
            if i == j {
                w.pow(p * i as i64)
            } else {
                CycScalar::zero()
            }
        })
    };
    let group = enumerate_group(vec![shift.clone(), diag_power(1)], DEFAULT_ELEMENT_CAP)?;
    let natural = Representation::Matrix(MatrixRep::new(
        group.clone(),
        vec![shift.clone(), diag_power(1)],
        "schrodinger",
    )?);
    let mut irreps = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let images = vec![
                ExactMatrix::from_rows(vec![vec![w.pow(a as i64)]]),
                ExactMatrix::from_rows(vec![vec![w.pow(b as i64)]]),
            ];
            let rep = MatrixRep::new(group.clone(), images, format!("chi_{},{}", a, b))?;
            irreps.push(Representation::Matrix(rep));
        }
    }
    for j in 1..n {
        let rep = MatrixRep::new(
            group.clone(),
            vec![shift.clone(), diag_power(j as i64)],
            format!("V_{}", j),
        )?;
        irreps.push(Representation::Matrix(rep));
    }
    validate_irrep_list(&group, &irreps, true)?;
    Ok(BuiltinReps {
        group,
        natural,
        irreps,
    })
}

/// Dihedral group of order `2n`: rotation `diag(ζ_n, ζ_n⁻¹)` and the swap.
pub fn dihedral(n: u64) -> Result<(Arc<FiniteGroupData>, Representation)> {
    if n < 2 {
        return Err(Error::UnsupportedRange {
            n: n as usize,
            min: 2,
            max: usize::MAX,
        });
    }
    let z = CycScalar::zeta(n);
    let rot = ExactMatrix::from_rows(vec![
        vec![z.clone(), CycScalar::zero()],
        vec![CycScalar::zero(), z.inv().unwrap()],
    ]);
    let swap = ExactMatrix::from_rows(vec![
        vec![CycScalar::zero(), CycScalar::one()],
        vec![CycScalar::one(), CycScalar::zero()],
    ]);
    let group = enumerate_group(vec![rot.clone(), swap.clone()], DEFAULT_ELEMENT_CAP)?;
    let rep = Representation::Matrix(MatrixRep::new(group.clone(), vec![rot, swap], "standard")?);
    Ok((group, rep))
}

/// Dispatch a built-in family.
pub fn builtin_reps(family: BuiltinFamily) -> Result<BuiltinReps> {
    match family {
        BuiltinFamily::SymmetricGroupIrreps(n) => {
            let (group, irreps) = symmetric_group_irreps(n)?;
            let (_, natural) = symmetric_group(n)?;
            // re-enumerated group is structurally identical; keep the shared one
            let natural = match natural {
                Representation::Matrix(m) => Representation::Matrix(MatrixRep::new(
                    group.clone(),
                    m.generator_images().to_vec(),
                    "perm",
                )?),
                other => other,
            };
            Ok(BuiltinReps {
                group,
                natural,
                irreps,
            })
        }
        BuiltinFamily::PermutationRep(n) => {
            let (group, natural) = symmetric_group(n)?;
            Ok(BuiltinReps {
                group,
                natural,
                irreps: Vec::new(),
            })
        }
        BuiltinFamily::Heisenberg(n) => heisenberg(n),
        BuiltinFamily::Dihedral(n) => {
            let (group, natural) = dihedral(n)?;
            Ok(BuiltinReps {
                group,
                natural,
                irreps: Vec::new(),
            })
        }
    }
}

/// Hook length of the cell `(r, c)` in a partition.
fn hook_length(shape: &[usize], r: usize, c: usize) -> usize {
    let arm = shape[r] - c - 1;
    let leg = shape.iter().skip(r + 1).filter(|&&len| len > c).count();
    arm + leg + 1
}

/// Dimension of the `S_n`-irrep of a partition by the hook length formula.
/// Exposed for cross-checks; the seminormal construction must agree.
pub fn hook_length_dimension(shape: &[usize]) -> usize {
    let n: usize = shape.iter().sum();
    let mut denom = 1usize;
    for (r, &len) in shape.iter().enumerate() {
        for c in 0..len {
            denom *= hook_length(shape, r, c);
        }
    }
    factorial(n) / denom
}
