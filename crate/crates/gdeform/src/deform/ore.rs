//! Ore extensions `A[t; σ, δ]` of commutative polynomial presentations, and
//! the linear solver for admissible equivariant `σ`-derivations.
//!
//! The `σ`-derivation convention is `δ(ab) = σ(a)δ(b) + δ(a)b`. On the
//! commutativity relations of `ℂ[V]` this forces, for every pair of
//! generators, `σ(x_i)δ(x_j) + x_j δ(x_i) = σ(x_j)δ(x_i) + x_i δ(x_j)` in
//! degree 3; together with the twisted equivariance
//! `δ(g·x) = χ*(g)·g·δ(x)` these are the linear constraints solved here.

use std::collections::HashMap;

use crate::algebra::{is_g_stable, Presentation};
use crate::error::Error;
use crate::exact::multipoly::monomials_of_degree;
use crate::exact::{CycScalar, ExactMatrix, RowSpace, SparseVec};
use crate::symmetry::Representation;
use crate::Result;

/// Monomial basis of `Sym^d(V)` with index lookup.
struct SymBasis {
    monos: Vec<Vec<u32>>,
    index: HashMap<Vec<u32>, usize>,
}

impl SymBasis {
    fn new(nvars: usize, degree: u32) -> Self {
        let monos = monomials_of_degree(nvars, degree);
        let index = monos
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        SymBasis { monos, index }
    }

    fn len(&self) -> usize {
        self.monos.len()
    }
}

/// Commutative product of a linear form (coefficients over the variables)
/// with a monomial, as a sparse vector over the degree-(d+1) basis.
fn linear_times_monomial(
    linear: &[CycScalar],
    mono: &[u32],
    target: &SymBasis,
) -> Vec<(usize, CycScalar)> {
    let mut out = Vec::new();
    for (var, c) in linear.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut e = mono.to_vec();
        e[var] += 1;
        out.push((target.index[&e], c.clone()));
    }
    out
}

/// Matrix of the induced action of `g` on `Sym^d(V)` over the monomial
/// basis: expand `∏ (g·x_i)^{e_i}` commutatively.
fn sym_power_matrix(g: &ExactMatrix<CycScalar>, basis: &SymBasis, nvars: usize) -> ExactMatrix<CycScalar> {
    let mut out = ExactMatrix::zeros(basis.len(), basis.len());
    for (col, mono) in basis.monos.iter().enumerate() {
        // polynomial expansion as exponent map
        let mut poly: HashMap<Vec<u32>, CycScalar> = HashMap::new();
        poly.insert(vec![0; nvars], CycScalar::one());
        for (var, &e) in mono.iter().enumerate() {
            for _ in 0..e {
                let mut next: HashMap<Vec<u32>, CycScalar> = HashMap::new();
                for (exps, coeff) in &poly {
                    for row in 0..nvars {
                        let gv = g.at(row, var);
                        if gv.is_zero() {
                            continue;
                        }
                        let mut e2 = exps.clone();
                        e2[row] += 1;
                        let entry = next.entry(e2).or_insert_with(CycScalar::zero);
                        *entry = entry.add(&coeff.mul(gv));
                    }
                }
                poly = next;
            }
        }
        for (exps, coeff) in poly {
            if !coeff.is_zero() {
                *out.at_mut(basis.index[&exps], col) = coeff;
            }
        }
    }
    out
}

fn check_commutative_polynomial_base(p: &Presentation) -> Result<()> {
    p.is_quadratic()?;
    let dim = p.dim();
    let span = p.relation_span(2);
    let expected = dim * (dim - 1) / 2;
    if span.rank() != expected {
        return Err(Error::OreBaseNotPolynomial);
    }
    for i in 0..dim {
        for j in (i + 1)..dim {
            let comm = crate::algebra::relation(
                dim,
                &[(CycScalar::one(), &[i, j]), (CycScalar::from_int(-1), &[j, i])],
            );
            if !span.contains(&comm) {
                return Err(Error::OreBaseNotPolynomial);
            }
        }
    }
    Ok(())
}

fn check_sigma_equivariant(rep: &Representation, sigma: &ExactMatrix<CycScalar>) -> Result<()> {
    match rep {
        Representation::Matrix(m) => {
            for g in m.generator_images() {
                if sigma.mul(g) != g.mul(sigma) {
                    return Err(Error::NotEquivariant);
                }
            }
            Ok(())
        }
        Representation::Weight(w) => {
            for i in 0..w.dim() {
                for j in 0..w.dim() {
                    if !sigma.at(i, j).is_zero() && w.weights()[i] != w.weights()[j] {
                        return Err(Error::NotEquivariant);
                    }
                }
            }
            Ok(())
        }
    }
}

/// Character value of `chi` on each generator (matrix backend), or its
/// weight (weight backend).
enum ChiData {
    Values(Vec<CycScalar>),
    Weight(Vec<i64>),
}

fn chi_data(chi: &Representation) -> Result<ChiData> {
    match chi {
        Representation::Matrix(m) => {
            if m.dim() != 1 {
                return Err(Error::NotIrreducible { end_dim: m.dim() });
            }
            Ok(ChiData::Values(
                m.generator_images()
                    .iter()
                    .map(|g| g.at(0, 0).clone())
                    .collect(),
            ))
        }
        Representation::Weight(w) => {
            if w.dim() != 1 {
                return Err(Error::NotIrreducible { end_dim: w.dim() });
            }
            Ok(ChiData::Weight(w.weights()[0].clone()))
        }
    }
}

/// Data of an Ore extension of a commutative polynomial presentation:
/// an equivariant degree-1 automorphism `σ`, a derivation `δ: V → A₂` given
/// by its coefficient matrix over the degree-2 monomial basis, and the
/// 1-dimensional character `χ` carried by the new generator.
pub struct OreData {
    pub base: Presentation,
    pub sigma: ExactMatrix<CycScalar>,
    pub delta: ExactMatrix<CycScalar>,
    pub chi: Representation,
    pub t_name: String,
}

/// Symmetric lift of a degree-2 monomial into `V ⊗ V`.
fn lift_monomial(exps: &[u32], dim: usize) -> Vec<(usize, CycScalar)> {
    let vars: Vec<usize> = exps
        .iter()
        .enumerate()
        .flat_map(|(v, &e)| std::iter::repeat(v).take(e as usize))
        .collect();
    assert_eq!(vars.len(), 2);
    let (a, b) = (vars[0], vars[1]);
    if a == b {
        vec![(a * dim + a, CycScalar::one())]
    } else {
        let half = CycScalar::from_ratio(1, 2);
        vec![(a * dim + b, half.clone()), (b * dim + a, half)]
    }
}

/// The presentation of `A[t; σ, δ]`: the base relations plus
/// `t⊗x_i - σ(x_i)⊗t - δ(x_i)` for every generator, on `V ⊕ ℂt`. All
/// admissibility identities are checked; the result is asserted G-stable
/// when a symmetry is attached.
pub fn ore_extension(data: &OreData) -> Result<Presentation> {
    let p = &data.base;
    check_commutative_polynomial_base(p)?;
    let dim = p.dim();
    if data.sigma.inverse().is_none() {
        return Err(Error::NotInvertible);
    }
    let sym2 = SymBasis::new(dim, 2);
    let sym3 = SymBasis::new(dim, 3);
    assert_eq!(data.delta.nrows(), sym2.len());
    assert_eq!(data.delta.ncols(), dim);

    if let Some(rep) = p.symmetry() {
        check_sigma_equivariant(rep, &data.sigma)?;
        check_delta_equivariance(rep, &data.sigma, &data.delta, &data.chi, &sym2)?;
    }
    check_derivation_compatibility(&data.sigma, &data.delta, &sym2, &sym3, dim)?;

    // assemble relations on V ⊕ ℂt
    let big = dim + 1;
    let t = dim;
    let mut basis = Vec::new();
    for rels in p.relations().get(&2).into_iter() {
        for rel in rels {
            // embed the old word (i, j) -> i*big + j
            basis.push(rel.map_indices(|idx| {
                let (i, j) = (idx / dim, idx % dim);
                i * big + j
            }));
        }
    }
    for i in 0..dim {
        let mut entries = vec![(t * big + i, CycScalar::one())];
        for j in 0..dim {
            let s = data.sigma.at(j, i);
            if !s.is_zero() {
                entries.push((j * big + t, s.neg()));
            }
        }
        for (b, mono) in sym2.monos.iter().enumerate() {
            let d = data.delta.at(b, i);
            if d.is_zero() {
                continue;
            }
            for (idx, c) in lift_monomial(mono, dim) {
                let (a2, b2) = (idx / dim, idx % dim);
                entries.push((a2 * big + b2, d.mul(&c).neg()));
            }
        }
        basis.push(SparseVec::from_entries(entries));
    }

    let mut names = p.gen_names().to_vec();
    names.push(data.t_name.clone());
    let symmetry = match (p.symmetry(), &data.chi) {
        (None, _) => None,
        (Some(Representation::Matrix(m)), Representation::Matrix(chi)) => {
            let images: Vec<ExactMatrix<CycScalar>> = m
                .generator_images()
                .iter()
                .zip(chi.generator_images())
                .map(|(g, c)| {
                    ExactMatrix::from_fn(big, big, |r, s| {
                        if r < dim && s < dim {
                            g.at(r, s).clone()
                        } else if r == dim && s == dim {
                            c.at(0, 0).clone()
                        } else {
                            CycScalar::zero()
                        }
                    })
                })
                .collect();
            Some(Representation::Matrix(crate::symmetry::MatrixRep::new(
                m.group().clone(),
                images,
                format!("{}⊕{}", m.label, chi.label),
            )?))
        }
        (Some(Representation::Weight(w)), Representation::Weight(chi)) => {
            let mut weights = w.weights().to_vec();
            weights.push(chi.weights()[0].clone());
            Some(Representation::Weight(crate::symmetry::WeightRep::new(
                w.rank(),
                weights,
                format!("{}⊕{}", w.label, chi.label),
            )))
        }
        _ => return Err(Error::BackendMismatch),
    };

    let out = Presentation::new(names, symmetry, vec![(2, basis)], p.cutoff())?;
    if out.symmetry().is_some() {
        let st = is_g_stable(&out)?;
        assert!(st.stable, "Ore extension must be G-stable with t spanning chi");
    }
    Ok(out)
}

/// `σ(x_i)δ(x_j) + x_j δ(x_i) = σ(x_j)δ(x_i) + x_i δ(x_j)` in `Sym³`.
fn check_derivation_compatibility(
    sigma: &ExactMatrix<CycScalar>,
    delta: &ExactMatrix<CycScalar>,
    sym2: &SymBasis,
    sym3: &SymBasis,
    dim: usize,
) -> Result<()> {
    for i in 0..dim {
        for j in (i + 1)..dim {
            let mut acc = vec![CycScalar::zero(); sym3.len()];
            let sigma_col = |c: usize| -> Vec<CycScalar> {
                (0..dim).map(|r| sigma.at(r, c).clone()).collect()
            };
            let unit_col = |c: usize| -> Vec<CycScalar> {
                (0..dim)
                    .map(|r| {
                        if r == c {
                            CycScalar::one()
                        } else {
                            CycScalar::zero()
                        }
                    })
                    .collect()
            };
            let mut add_product = |linear: &[CycScalar], delta_col: usize, sign: i64| {
                for (b, mono) in sym2.monos.iter().enumerate() {
                    let d = delta.at(b, delta_col);
                    if d.is_zero() {
                        continue;
                    }
                    for (idx, c) in linear_times_monomial(linear, mono, sym3) {
                        let term = d.mul(&c).mul(&CycScalar::from_int(sign));
                        acc[idx] = acc[idx].add(&term);
                    }
                }
            };
            add_product(&sigma_col(i), j, 1);
            add_product(&unit_col(j), i, 1);
            add_product(&sigma_col(j), i, -1);
            add_product(&unit_col(i), j, -1);
            if acc.iter().any(|c| !c.is_zero()) {
                return Err(Error::OreIdentity {
                    identity: format!(
                        "sigma(x{})*delta(x{}) + x{}*delta(x{}) - sigma(x{})*delta(x{}) - x{}*delta(x{}) != 0",
                        i, j, j, i, j, i, i, j
                    ),
                });
            }
        }
    }
    Ok(())
}

/// `δ(g·x) = χ*(g)·g·δ(x)` for every generator.
fn check_delta_equivariance(
    rep: &Representation,
    _sigma: &ExactMatrix<CycScalar>,
    delta: &ExactMatrix<CycScalar>,
    chi: &Representation,
    sym2: &SymBasis,
) -> Result<()> {
    let dim = rep.dim();
    match (rep, chi_data(chi)?) {
        (Representation::Matrix(m), ChiData::Values(chi_vals)) => {
            for (g, chi_g) in m.generator_images().iter().zip(&chi_vals) {
                let sym_g = sym_power_matrix(g, sym2, dim);
                let lhs = delta.mul(g);
                let chi_star = chi_g.inv().ok_or(Error::NotInvertible)?;
                let rhs = sym_g.mul(delta).scale(&chi_star);
                if lhs != rhs {
                    return Err(Error::OreIdentity {
                        identity: "delta(g x) != chi*(g) g delta(x)".into(),
                    });
                }
            }
            Ok(())
        }
        (Representation::Weight(w), ChiData::Weight(chi_w)) => {
            for i in 0..dim {
                for (b, mono) in sym2.monos.iter().enumerate() {
                    if delta.at(b, i).is_zero() {
                        continue;
                    }
                    let mut mono_weight = vec![0i64; w.rank()];
                    for (var, &e) in mono.iter().enumerate() {
                        for (r, x) in w.weights()[var].iter().enumerate() {
                            mono_weight[r] += e as i64 * x;
                        }
                    }
                    let want: Vec<i64> = w.weights()[i]
                        .iter()
                        .zip(&chi_w)
                        .map(|(a, b)| a + b)
                        .collect();
                    if mono_weight != want {
                        return Err(Error::OreIdentity {
                            identity: "delta image has the wrong weight".into(),
                        });
                    }
                }
            }
            Ok(())
        }
        _ => Err(Error::BackendMismatch),
    }
}

/// Solve for all admissible `δ: V → A₂` on a commutative polynomial
/// presentation, given an equivariant `σ` and a character `χ`: the linear
/// system of the derivation compatibility on the commutativity relations
/// together with twisted equivariance. Returns a basis of coefficient
/// matrices over the degree-2 monomial basis.
pub fn sigma_derivation_solve(
    base: &Presentation,
    sigma: &ExactMatrix<CycScalar>,
    chi: &Representation,
) -> Result<Vec<ExactMatrix<CycScalar>>> {
    check_commutative_polynomial_base(base)?;
    let rep = base.symmetry().ok_or(Error::NoGroupAttached)?;
    check_sigma_equivariant(rep, sigma)?;
    let dim = base.dim();
    let sym2 = SymBasis::new(dim, 2);
    let sym3 = SymBasis::new(dim, 3);
    let unknowns = sym2.len() * dim; // D[b, i] at index b*dim + i
    let mut eqs: RowSpace<CycScalar> = RowSpace::new(unknowns);

    // derivation compatibility rows
    for i in 0..dim {
        for j in (i + 1)..dim {
            let mut rows: Vec<Vec<(usize, CycScalar)>> = vec![Vec::new(); sym3.len()];
            let sigma_col = |c: usize| -> Vec<CycScalar> {
                (0..dim).map(|r| sigma.at(r, c).clone()).collect()
            };
            let unit_col = |c: usize| -> Vec<CycScalar> {
                (0..dim)
                    .map(|r| {
                        if r == c {
                            CycScalar::one()
                        } else {
                            CycScalar::zero()
                        }
                    })
                    .collect()
            };
            let mut add = |linear: &[CycScalar], delta_col: usize, sign: i64| {
                for (b, mono) in sym2.monos.iter().enumerate() {
                    for (idx, c) in linear_times_monomial(linear, mono, &sym3) {
                        rows[idx].push((
                            b * dim + delta_col,
                            c.mul(&CycScalar::from_int(sign)),
                        ));
                    }
                }
            };
            add(&sigma_col(i), j, 1);
            add(&unit_col(j), i, 1);
            add(&sigma_col(j), i, -1);
            add(&unit_col(i), j, -1);
            for row in rows {
                eqs.insert(SparseVec::from_entries(row));
            }
        }
    }

    // equivariance rows
    match (rep, chi_data(chi)?) {
        (Representation::Matrix(m), ChiData::Values(chi_vals)) => {
            for (g, chi_g) in m.generator_images().iter().zip(&chi_vals) {
                let sym_g = sym_power_matrix(g, &sym2, dim);
                let chi_star = chi_g.inv().ok_or(Error::NotInvertible)?;
                // D ρ(g) - χ*(g) Sym²(g) D = 0, entry (b, i)
                for b in 0..sym2.len() {
                    for i in 0..dim {
                        let mut entries = Vec::new();
                        for k in 0..dim {
                            let c = g.at(k, i);
                            if !c.is_zero() {
                                entries.push((b * dim + k, c.clone()));
                            }
                        }
                        for b2 in 0..sym2.len() {
                            let c = sym_g.at(b, b2);
                            if !c.is_zero() {
                                entries.push((b2 * dim + i, c.mul(&chi_star).neg()));
                            }
                        }
                        eqs.insert(SparseVec::from_entries(entries));
                    }
                }
            }
        }
        (Representation::Weight(w), ChiData::Weight(chi_w)) => {
            for i in 0..dim {
                for (b, mono) in sym2.monos.iter().enumerate() {
                    let mut mono_weight = vec![0i64; w.rank()];
                    for (var, &e) in mono.iter().enumerate() {
                        for (r, x) in w.weights()[var].iter().enumerate() {
                            mono_weight[r] += e as i64 * x;
                        }
                    }
                    let want: Vec<i64> = w.weights()[i]
                        .iter()
                        .zip(&chi_w)
                        .map(|(a, b)| a + b)
                        .collect();
                    if mono_weight != want {
                        eqs.insert(SparseVec::unit(b * dim + i));
                    }
                }
            }
        }
        _ => return Err(Error::BackendMismatch),
    }

    Ok(eqs
        .kernel_basis()
        .into_iter()
        .map(|v| {
            let dense = v.to_dense(unknowns);
            ExactMatrix::from_fn(sym2.len(), dim, |b, i| dense[b * dim + i].clone())
        })
        .collect())
}

/// Degree-2 monomial basis used by `OreData::delta` and the solver, exposed
/// so callers can build coefficient matrices.
pub fn sym2_monomials(dim: usize) -> Vec<Vec<u32>> {
    monomials_of_degree(dim, 2)
}
