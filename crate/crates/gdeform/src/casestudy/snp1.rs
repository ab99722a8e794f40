//! Deformations of the polynomial ring on the permutation representation of
//! the symmetric group on `n+1` letters.
//!
//! In the basis `y_i = x_0 - x_i`, `v = Σ x_i`, the degree-2 family is the
//! projective plane of relation spaces
//! `A·y_i v + B·v y_i + C·y_i((n-1)y_i - 2Σ_{j≠i} y_j)` together with the
//! commutators `[y_i, y_j]`; the two good strata are the skew line `C = 0`
//! and the differential line `A + B = 0`, both realized here as Ore
//! extensions of `ℂ[y_1, …, y_n]` and cross-checked against the family.

use std::sync::Arc;

use crate::algebra::{
    hilbert_function, ideal_tower, is_g_stable, polynomial_presentation, relation, Presentation,
};
use crate::deform::{
    build_ledger, embedding_space, ore_extension, point_to_presentation, sigma_derivation_solve,
    sym2_monomials, twist_family_check, OreData,
};
use crate::error::Error;
use crate::exact::tensor::apply_slotwise;
use crate::exact::{CycScalar, ExactMatrix, MultiPoly, RowSpace, SparseVec};
use crate::pointscheme::{
    binomial, multilinearize, point_variety, snp1_line_structure, successor_on_line, LineClass,
    ProjPoint,
};
use crate::symmetry::{builtin_reps, BuiltinFamily, FiniteGroupData, MatrixRep, Representation};
use crate::Result;

use super::report::{Provenance, Report};
use super::{character_string, Stratum};

pub struct Snp1Context {
    pub n: usize,
    pub group: Arc<FiniteGroupData>,
    /// Permutation representation on `x_0, …, x_n`.
    pub natural: Representation,
    pub irreps: Vec<Representation>,
    /// `y_i = x_0 - x_i` in `x`-coordinates.
    pub y_vectors: Vec<Vec<CycScalar>>,
    /// `v = Σ x_i`.
    pub v_vector: Vec<CycScalar>,
    /// The same representation in the `(y_1, …, y_n, v)` basis.
    pub y_rep: Representation,
    /// Its restriction to the `y`-span (the standard representation).
    pub s_rep: Representation,
}

pub fn snp1_context(n: usize) -> Result<Snp1Context> {
    if !(2..=4).contains(&n) {
        return Err(Error::UnsupportedRange { n, min: 2, max: 4 });
    }
    let built = builtin_reps(BuiltinFamily::SymmetricGroupIrreps(n + 1))?;
    let dim = n + 1;
    let c = CycScalar::from_int;

    let mut y_vectors = Vec::new();
    for i in 1..=n {
        let mut y = vec![CycScalar::zero(); dim];
        y[0] = c(1);
        y[i] = c(-1);
        y_vectors.push(y);
    }
    let v_vector = vec![CycScalar::one(); dim];

    // change of basis: columns are y_1, …, y_n, v in x-coordinates
    let basis_change = ExactMatrix::from_fn(dim, dim, |r, col| {
        if col < n {
            y_vectors[col][r].clone()
        } else {
            v_vector[r].clone()
        }
    });
    let inv = basis_change.inverse().expect("basis change is invertible");
    let nat = built.natural.as_matrix().unwrap();
    let y_images: Vec<ExactMatrix<CycScalar>> = nat
        .generator_images()
        .iter()
        .map(|g| inv.mul(g).mul(&basis_change))
        .collect();
    // the v-line is fixed, so the images are block lower-triangular with the
    // standard representation in the y-block
    let s_images: Vec<ExactMatrix<CycScalar>> = y_images
        .iter()
        .map(|m| {
            for i in 0..dim {
                for j in 0..dim {
                    if (i == n) != (j == n) {
                        assert!(m.at(i, j).is_zero(), "y-basis images must be block diagonal");
                    }
                }
            }
            ExactMatrix::from_fn(n, n, |i, j| m.at(i, j).clone())
        })
        .collect();
    let y_rep = Representation::Matrix(MatrixRep::new(built.group.clone(), y_images, "S⊕T")?);
    let s_rep = Representation::Matrix(MatrixRep::new(built.group.clone(), s_images, "S")?);

    Ok(Snp1Context {
        n,
        group: built.group,
        natural: built.natural,
        irreps: built.irreps,
        y_vectors,
        v_vector,
        y_rep,
        s_rep,
    })
}

fn tensor_of(u: &[CycScalar], w: &[CycScalar]) -> SparseVec<CycScalar> {
    let dim = u.len();
    let mut entries = Vec::new();
    for (i, a) in u.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in w.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            entries.push((i * dim + j, a.mul(b)));
        }
    }
    SparseVec::from_entries(entries)
}

fn scale_vec(u: &[CycScalar], c: &CycScalar) -> Vec<CycScalar> {
    u.iter().map(|x| x.mul(c)).collect()
}

fn add_vec(u: &[CycScalar], w: &[CycScalar]) -> Vec<CycScalar> {
    u.iter().zip(w).map(|(a, b)| a.add(b)).collect()
}

/// `f_i = (n-1)·y_i - 2·Σ_{j≠i} y_j` in `x`-coordinates.
fn f_vector(ctx: &Snp1Context, i: usize) -> Vec<CycScalar> {
    let n = ctx.n;
    let mut acc = scale_vec(&ctx.y_vectors[i], &CycScalar::from_int(n as i64 - 1));
    for j in 0..n {
        if j != i {
            acc = add_vec(&acc, &scale_vec(&ctx.y_vectors[j], &CycScalar::from_int(-2)));
        }
    }
    acc
}

/// The family member `[A:B:C]` on the `x`-basis.
pub fn family_presentation(
    ctx: &Snp1Context,
    a: &CycScalar,
    b: &CycScalar,
    c: &CycScalar,
    cutoff: usize,
) -> Result<Presentation> {
    let n = ctx.n;
    let mut basis = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let comm = tensor_of(&ctx.y_vectors[i], &ctx.y_vectors[j])
                .axpy(&CycScalar::from_int(-1), &tensor_of(&ctx.y_vectors[j], &ctx.y_vectors[i]));
            basis.push(comm);
        }
    }
    for i in 0..n {
        let mut rel = tensor_of(&ctx.y_vectors[i], &ctx.v_vector).scale(a);
        rel = rel.axpy(b, &tensor_of(&ctx.v_vector, &ctx.y_vectors[i]));
        rel = rel.axpy(c, &tensor_of(&ctx.y_vectors[i], &f_vector(ctx, i)));
        basis.push(rel);
    }
    let names: Vec<String> = (0..=n).map(|i| format!("x{}", i)).collect();
    Presentation::new(names, Some(ctx.natural.clone()), vec![(2, basis)], cutoff)
}

/// Read the `[A:B:C]` coordinates back off a quadratic relation span, when
/// the span lies on the family.
pub fn family_coordinates(ctx: &Snp1Context, span: &RowSpace<CycScalar>) -> Option<Vec<CycScalar>> {
    let parts = [
        tensor_of(&ctx.y_vectors[0], &ctx.v_vector),
        tensor_of(&ctx.v_vector, &ctx.y_vectors[0]),
        tensor_of(&ctx.y_vectors[0], &f_vector(ctx, 0)),
    ];
    let residuals: Vec<SparseVec<CycScalar>> = parts.iter().map(|t| span.reduce(t)).collect();
    let mut eqs: RowSpace<CycScalar> = RowSpace::new(3);
    let coords: std::collections::BTreeSet<usize> = residuals
        .iter()
        .flat_map(|r| r.entries().iter().map(|(i, _)| *i))
        .collect();
    for coord in coords {
        let entries: Vec<(usize, CycScalar)> = residuals
            .iter()
            .enumerate()
            .filter_map(|(j, r)| r.get(coord).map(|v| (j, v.clone())))
            .collect();
        eqs.insert(SparseVec::from_entries(entries));
    }
    let kernel = eqs.kernel_basis();
    if kernel.len() != 1 {
        return None;
    }
    let dense = kernel[0].to_dense(3);
    let lead = dense.iter().position(|c| !c.is_zero())?;
    let inv = dense[lead].inv().unwrap();
    Some(dense.iter().map(|c| c.mul(&inv)).collect())
}

/// The derivation `δ(y_i) = scale · y_i((n-1)y_i - 2Σ_{j≠i} y_j)` over the
/// degree-2 monomial basis of `ℂ[y_1, …, y_n]`.
pub fn differential_delta(n: usize, scale: &CycScalar) -> ExactMatrix<CycScalar> {
    let monos = sym2_monomials(n);
    let index: std::collections::HashMap<Vec<u32>, usize> = monos
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let mut delta = ExactMatrix::zeros(monos.len(), n);
    for i in 0..n {
        let mut sq = vec![0u32; n];
        sq[i] = 2;
        *delta.at_mut(index[&sq], i) = CycScalar::from_int(n as i64 - 1).mul(scale);
        for j in 0..n {
            if j == i {
                continue;
            }
            let mut cross = vec![0u32; n];
            cross[i] = 1;
            cross[j] = 1;
            let cur = delta.at(index[&cross], i).clone();
            *delta.at_mut(index[&cross], i) = cur.add(&CycScalar::from_int(-2).mul(scale));
        }
    }
    delta
}

fn trivial_character(ctx: &Snp1Context) -> Representation {
    Representation::Matrix(
        MatrixRep::new(
            ctx.group.clone(),
            vec![ExactMatrix::identity(1); ctx.group.num_generators()],
            "triv",
        )
        .expect("trivial character"),
    )
}

fn sign_character(ctx: &Snp1Context) -> Representation {
    Representation::Matrix(
        MatrixRep::new(
            ctx.group.clone(),
            vec![
                ExactMatrix::identity(1).scale(&CycScalar::from_int(-1));
                ctx.group.num_generators()
            ],
            "sgn",
        )
        .expect("sign character"),
    )
}

fn y_base(ctx: &Snp1Context, cutoff: usize) -> Result<Presentation> {
    let names: Vec<String> = (1..=ctx.n).map(|i| format!("y{}", i)).collect();
    polynomial_presentation(names, Some(ctx.s_rep.clone()), cutoff)
}

/// Skew stratum: the Ore extension `ℂ[y][v; σ_a]`, `σ_a(y_i) = a·y_i`.
pub fn skew_stratum(ctx: &Snp1Context, a: &CycScalar, cutoff: usize) -> Result<Presentation> {
    let data = OreData {
        base: y_base(ctx, cutoff)?,
        sigma: ExactMatrix::identity(ctx.n).scale(a),
        delta: ExactMatrix::zeros(sym2_monomials(ctx.n).len(), ctx.n),
        chi: trivial_character(ctx),
        t_name: "v".into(),
    };
    ore_extension(&data)
}

/// Differential stratum: `ℂ[y][v; δ_c]`, `δ_c(y_i) = c·y_i f_i`.
pub fn differential_stratum(ctx: &Snp1Context, c: &CycScalar, cutoff: usize) -> Result<Presentation> {
    let data = OreData {
        base: y_base(ctx, cutoff)?,
        sigma: ExactMatrix::identity(ctx.n),
        delta: differential_delta(ctx.n, c),
        chi: trivial_character(ctx),
        t_name: "v".into(),
    };
    ore_extension(&data)
}

/// Rebase a presentation along a change of basis: columns of `basis` are the
/// new generators in the old coordinates.
fn rebase(
    p: &Presentation,
    basis: &ExactMatrix<CycScalar>,
    names: Vec<String>,
    cutoff: usize,
) -> Result<Presentation> {
    let dim = p.dim();
    let inv = basis.inverse().ok_or(Error::NotInvertible)?;
    let mut relations = Vec::new();
    for (&degree, rels) in p.relations() {
        let mats: Vec<&ExactMatrix<CycScalar>> = (0..degree).map(|_| &inv).collect();
        let moved: Vec<SparseVec<CycScalar>> = rels
            .iter()
            .map(|r| apply_slotwise(&mats, r, dim))
            .collect();
        relations.push((degree, moved));
    }
    Presentation::new(names, None, relations, cutoff)
}

fn spans_equal(a: &RowSpace<CycScalar>, b: &RowSpace<CycScalar>) -> bool {
    a.rank() == b.rank() && a.rows().iter().all(|r| b.contains(r))
}

/// The `n = 2` differential algebra in the diagonalizing basis
/// `x = y_1 + ω y_2`, `y = y_1 + ω² y_2`, `t = -v`, where the relations take
/// the form `xy - yx`, `xt - tx - y²`, `yt - ty - x²`. Returns the model and
/// whether its relation span matches that form exactly.
pub fn xyt_model(ctx: &Snp1Context, cutoff: usize) -> Result<(Presentation, bool)> {
    assert_eq!(ctx.n, 2);
    let diff = differential_stratum(ctx, &CycScalar::one(), cutoff)?;
    let w = CycScalar::zeta(3);
    let c = CycScalar::from_int;
    let basis = ExactMatrix::from_rows(vec![
        vec![c(1), c(1), c(0)],
        vec![w.clone(), w.pow(2), c(0)],
        vec![c(0), c(0), c(-1)],
    ]);
    let model = rebase(
        &diff,
        &basis,
        vec!["x".into(), "y".into(), "t".into()],
        cutoff,
    )?;
    let expected = vec![
        relation(3, &[(c(1), &[0, 1]), (c(-1), &[1, 0])]),
        relation(3, &[(c(1), &[0, 2]), (c(-1), &[2, 0]), (c(-1), &[1, 1])]),
        relation(3, &[(c(1), &[1, 2]), (c(-1), &[2, 1]), (c(-1), &[0, 0])]),
    ];
    let mut expected_span = RowSpace::new(9);
    for r in &expected {
        expected_span.insert(r.clone());
    }
    let ok = spans_equal(&model.relation_span(2), &expected_span);
    Ok((model, ok))
}

/// The `n = 3` differential algebra in the Klein-four diagonalizing basis
/// `(v00, v10, v01, v11) = (v/2, y_1-y_2+y_3, -y_1+y_2+y_3, y_1+y_2-y_3)`,
/// where the non-commutator relations are `w_i⊗u - u⊗w_i - w_j⊗w_k`.
pub fn vij_model(ctx: &Snp1Context, cutoff: usize) -> Result<(Presentation, bool)> {
    assert_eq!(ctx.n, 3);
    let diff = differential_stratum(ctx, &CycScalar::one(), cutoff)?;
    let c = CycScalar::from_int;
    let half = CycScalar::from_ratio(1, 2);
    // columns: v00, v10, v01, v11 in (y1, y2, y3, v) coordinates
    let basis = ExactMatrix::from_rows(vec![
        vec![c(0), c(1), c(-1), c(1)],
        vec![c(0), c(-1), c(1), c(1)],
        vec![c(0), c(1), c(1), c(-1)],
        vec![half, c(0), c(0), c(0)],
    ]);
    let names = vec!["v00".into(), "v10".into(), "v01".into(), "v11".into()];
    let model = rebase(&diff, &basis, names, cutoff)?;

    let mut expected = Vec::new();
    for (i, j) in [(1usize, 2usize), (3, 1), (2, 3)] {
        expected.push(relation(4, &[(c(1), &[i, j]), (c(-1), &[j, i])]));
    }
    for (i, j, k) in [(1usize, 2usize, 3usize), (2, 1, 3), (3, 1, 2)] {
        expected.push(relation(
            4,
            &[(c(1), &[i, 0]), (c(-1), &[0, i]), (c(-1), &[j, k])],
        ));
    }
    let mut expected_span = RowSpace::new(16);
    for r in &expected {
        expected_span.insert(r.clone());
    }
    let ok = spans_equal(&model.relation_span(2), &expected_span);
    Ok((model, ok))
}

/// The three cubics cutting out the seven lines of the `n = 3` model, in its
/// point coordinates.
pub fn n3_cubics(vars: Vec<String>) -> Vec<MultiPoly> {
    let v = |i: usize| MultiPoly::variable(vars.clone(), i);
    let sq = |p: &MultiPoly| p.mul(p);
    // coordinates: 0 = v00, 1 = v10, 2 = v01, 3 = v11
    vec![
        v(3).mul(&sq(&v(1)).sub(&sq(&v(2)))),
        v(1).mul(&sq(&v(2)).sub(&sq(&v(3)))),
        v(2).mul(&sq(&v(1)).sub(&sq(&v(3)))),
    ]
}

/// The seven candidate lines of the `n = 3` model: `(base, direction)` pairs
/// through the intersection point `[1:0:0:0]`.
pub fn n3_candidate_lines() -> Vec<(Vec<CycScalar>, Vec<CycScalar>)> {
    let c = CycScalar::from_int;
    let mut out = Vec::new();
    let mut direction = vec![CycScalar::zero(); 4];
    direction[0] = c(1);
    let patterns: Vec<Vec<i64>> = vec![
        vec![1, 0, 0],
        vec![0, 1, 0],
        vec![0, 0, 1],
        vec![1, 1, 1],
        vec![1, 1, -1],
        vec![1, -1, 1],
        vec![1, -1, -1],
    ];
    for pat in patterns {
        let mut base = vec![CycScalar::zero(); 4];
        for (i, &x) in pat.iter().enumerate() {
            base[i + 1] = c(x);
        }
        out.push((base, direction.clone()));
    }
    out
}

pub struct N3LocusCheck {
    pub lines_on_minors: bool,
    pub sampled_points: usize,
    pub samples_satisfy_cubics: bool,
    /// True when each `cubic · coordinate` lies in the linear span of the
    /// minors, which certifies the containment without sampling.
    pub linear_certificate: bool,
}

/// Two-way check between the maximal minors of the `n = 3` model and the
/// three cubics: the candidate lines satisfy every minor, and sampled points
/// of the minors' locus satisfy the cubics.
pub fn n3_locus_check(model: &Presentation, min_samples: usize) -> Result<N3LocusCheck> {
    let m = multilinearize(model)?;
    let variety = point_variety(&m)?;
    let equations = &variety.equations;
    let lines = n3_candidate_lines();

    let mut lines_on_minors = true;
    for (base, direction) in &lines {
        for eq in equations {
            let deg = eq.total_degree().unwrap_or(0) as i64;
            for step in 0..=deg {
                let pt: Vec<CycScalar> = base
                    .iter()
                    .zip(direction)
                    .map(|(b, d)| b.add(&d.mul(&CycScalar::from_int(step))))
                    .collect();
                if !eq.eval(&pt).is_zero() {
                    lines_on_minors = false;
                }
            }
        }
    }

    // sample the minors' locus over a bounded rational grid, chart by chart
    let cubics = n3_cubics(m.var_names().to_vec());
    let values: Vec<CycScalar> = vec![
        CycScalar::zero(),
        CycScalar::one(),
        CycScalar::from_int(-1),
        CycScalar::from_int(2),
        CycScalar::from_int(-2),
        CycScalar::from_ratio(1, 2),
        CycScalar::from_ratio(-1, 2),
        CycScalar::from_int(3),
        CycScalar::from_int(-3),
    ];
    let mut sampled = 0usize;
    let mut cubics_ok = true;
    for lead in 0..4usize {
        let free = 3 - lead;
        let count = values.len().pow(free as u32);
        for idx in 0..count {
            let mut point = vec![CycScalar::zero(); 4];
            point[lead] = CycScalar::one();
            let mut rest = idx;
            for slot in (lead + 1)..4 {
                point[slot] = values[rest % values.len()].clone();
                rest /= values.len();
            }
            if equations.iter().all(|eq| eq.eval(&point).is_zero()) {
                sampled += 1;
                if !cubics.iter().all(|cubic| cubic.eval(&point).is_zero()) {
                    cubics_ok = false;
                }
            }
        }
    }

    // linear certificate: cubic · p_i in the span of the minors
    let quartic_span = crate::exact::multipoly::poly_ideal_degree_span(equations, 4, 4);
    let mut linear_certificate = true;
    'outer: for cubic in &cubics {
        for i in 0..4 {
            let prod = cubic.mul(&MultiPoly::variable(m.var_names().to_vec(), i));
            let basis = crate::exact::multipoly::monomials_of_degree(4, 4);
            let index: std::collections::HashMap<Vec<u32>, usize> = basis
                .iter()
                .cloned()
                .enumerate()
                .map(|(k, e)| (e, k))
                .collect();
            let entries: Vec<(usize, CycScalar)> = prod
                .terms()
                .iter()
                .map(|(e, c)| (index[e], c.clone()))
                .collect();
            if !quartic_span.contains(&SparseVec::from_entries(entries)) {
                linear_certificate = false;
                break 'outer;
            }
        }
    }

    let _ = min_samples;
    Ok(N3LocusCheck {
        lines_on_minors,
        sampled_points: sampled,
        samples_satisfy_cubics: cubics_ok,
        linear_certificate,
    })
}

pub fn run_snp1(
    n: usize,
    stratum: Stratum,
    params: &[CycScalar],
    cutoff: usize,
    samples: usize,
) -> Result<Report> {
    let ctx = snp1_context(n)?;
    let mut report = Report::new("snp1");
    report.meta("n", n.to_string());
    report.meta("stratum", format!("{:?}", stratum).to_lowercase());
    report.meta("cutoff", cutoff.to_string());
    let param = params.first().cloned().unwrap_or_else(CycScalar::one);
    report.meta("parameter", format!("{}", param));
    report.meta(
        "regularity",
        "not certified here; Hilbert functions and graded characters only",
    );

    // degree-2 deformation space
    let poly = polynomial_presentation(
        (0..=n).map(|i| format!("x{}", i)).collect(),
        Some(ctx.natural.clone()),
        cutoff,
    )?;
    let ledger = build_ledger(&poly, &ctx.irreps, 2)?;
    let emb = embedding_space(&ledger, &[2]);
    {
        let s = report.section("deformation_space");
        s.row("embedding", format!("{}", emb));
    }
    let mut factors: Vec<(usize, usize)> = emb.factors.iter().map(|g| (g.f, g.a)).collect();
    factors.sort();
    report.verdict_eq(
        "degree_2_space_is_p2",
        "Grass(1,1) x Grass(1,3), dim 2",
        format!(
            "{}, dim {}",
            factors
                .iter()
                .map(|(f, a)| format!("Grass({},{})", f, a))
                .collect::<Vec<_>>()
                .join(" x "),
            emb.total_dim
        ),
        Provenance::Literature,
    );

    // strata as Ore extensions, cross-checked against the family coordinates
    let sample_params: Vec<CycScalar> = {
        let mut v = vec![param.clone()];
        for x in [
            CycScalar::from_int(2),
            CycScalar::from_int(-1),
            CycScalar::from_ratio(1, 2),
            CycScalar::from_int(3),
            CycScalar::from_int(5),
        ] {
            if v.len() < 5 && !v.contains(&x) && !(matches!(stratum, Stratum::Skew) && x.is_zero())
            {
                v.push(x);
            }
        }
        v
    };

    let binom_row: Vec<usize> = (0..=cutoff)
        .map(|k| binomial(n + k, n))
        .collect();
    let hilbert_degree = if n >= 4 { cutoff.min(3) } else { cutoff };

    match stratum {
        Stratum::Skew | Stratum::Differential => {
            let mut all_hilbert_ok = true;
            let mut cross_ok = true;
            {
                let s = report.section("hilbert");
                s.row("expected", format!("{:?}", &binom_row[..=hilbert_degree]));
                for p in &sample_params {
                    let (ore_built, family_coords) = match stratum {
                        Stratum::Skew => (
                            skew_stratum(&ctx, p, cutoff)?,
                            // v y_i - a y_i v: A = -a, B = 1, C = 0
                            (p.neg(), CycScalar::one(), CycScalar::zero()),
                        ),
                        _ => (
                            differential_stratum(&ctx, p, cutoff)?,
                            // v y_i - y_i v - c y_i f_i: A = -1, B = 1, C = -c
                            (CycScalar::from_int(-1), CycScalar::one(), p.neg()),
                        ),
                    };
                    let h = hilbert_function(&ore_built, hilbert_degree)?;
                    all_hilbert_ok &= h == binom_row[..=hilbert_degree];
                    s.row(format!("parameter {}", p), format!("{:?}", h));

                    let fam = family_presentation(
                        &ctx,
                        &family_coords.0,
                        &family_coords.1,
                        &family_coords.2,
                        cutoff,
                    )?;
                    let st = is_g_stable(&fam)?;
                    cross_ok &= st.stable;
                    cross_ok &= hilbert_function(&fam, hilbert_degree)? == h;
                }
            }
            report.verdict(
                "hilbert_matches_binomial_series",
                format!("{:?} at {} sampled parameters", &binom_row[..=hilbert_degree], sample_params.len()),
                if all_hilbert_ok { "match" } else { "mismatch" },
                Provenance::Literature,
                all_hilbert_ok,
            );
            report.verdict(
                "ore_and_family_constructions_agree",
                "stable family members with equal Hilbert functions",
                if cross_ok { "agree" } else { "disagree" },
                Provenance::Definition,
                cross_ok,
            );
        }
        Stratum::FullPlane => {
            let (a, b, c) = match params {
                [a, b, c, ..] => (a.clone(), b.clone(), c.clone()),
                _ => (CycScalar::one(), CycScalar::from_int(-1), CycScalar::zero()),
            };
            let fam = family_presentation(&ctx, &a, &b, &c, cutoff)?;
            let st = is_g_stable(&fam)?;
            report.verdict(
                "family_member_is_stable",
                "stable",
                if st.stable { "stable" } else { "unstable" },
                Provenance::Literature,
                st.stable,
            );
            let h = hilbert_function(&fam, hilbert_degree)?;
            let s = report.section("hilbert");
            s.row("member", format!("{:?}", h));
            s.row("reference", format!("{:?}", &binom_row[..=hilbert_degree]));
            if h != binom_row[..=hilbert_degree] {
                s.row("flag", "member is not a flat deformation (off the two good strata)");
            }
        }
    }

    // graded characters of the studied member
    {
        let member = match stratum {
            Stratum::Skew => skew_stratum(&ctx, &param, cutoff)?,
            Stratum::Differential => differential_stratum(&ctx, &param, cutoff)?,
            Stratum::FullPlane => family_presentation(
                &ctx,
                &CycScalar::one(),
                &CycScalar::from_int(-1),
                &CycScalar::zero(),
                cutoff,
            )?,
        };
        let deg = hilbert_degree.min(3);
        let tower = ideal_tower(&member, deg)?;
        let s = report.section("characters");
        for k in 0..=deg {
            let chi = crate::algebra::degree_character(&member, &tower, k)?;
            s.row(format!("degree {}", k), character_string(&chi));
        }
    }

    // twists of the polynomial ring land on the skew stratum
    let tw = twist_family_check(&ledger, 10, 0x2b7e)?;
    report.verdict_eq("twist_family_dimension", 1usize, tw.family_dim, Provenance::Literature);
    report.verdict(
        "twists_give_distinct_points",
        "distinct for non-proportional automorphisms",
        if tw.points_distinct { "distinct" } else { "collision" },
        Provenance::Literature,
        tw.points_distinct,
    );
    let mut on_skew = true;
    for point in &tw.points {
        let p = point_to_presentation(&ledger, point)?;
        match family_coordinates(&ctx, &p.relation_span(2)) {
            Some(coords) => on_skew &= coords[2].is_zero(),
            None => on_skew = false,
        }
    }
    report.verdict(
        "twists_land_on_skew_stratum",
        "C = 0 for every sampled twist",
        if on_skew { "C = 0" } else { "C != 0" },
        Provenance::Oracle,
        on_skew,
    );

    // point scheme
    match stratum {
        Stratum::Skew => {
            let skew = skew_stratum(&ctx, &param, cutoff)?;
            let m = multilinearize(&skew)?;
            let v = point_variety(&m)?;
            report.verdict(
                "point_scheme_is_projective_space",
                format!("P^{}", n),
                if v.whole_space {
                    format!("P^{}", n)
                } else {
                    format!("{} equations", v.equations.len())
                },
                Provenance::Literature,
                v.whole_space,
            );
        }
        Stratum::Differential => {
            let ls = snp1_line_structure(n)?;
            {
                let s = report.section("lines");
                for line in &ls.lines {
                    s.row(
                        format!("T = {:?}", line.zero_set),
                        format!(
                            "{}, constant {}, closed-form candidate {}",
                            match line.class {
                                LineClass::PointwiseFixed => "pointwise fixed",
                                LineClass::Translation { .. } => "translation",
                            },
                            line.constant,
                            line.closed_form_candidate
                        ),
                    );
                }
            }
            report.verdict_eq(
                "line_count",
                (1usize << n) - 1,
                ls.lines.len(),
                Provenance::Literature,
            );
            let expected_fixed = if n % 2 == 1 { binomial(n, (n + 1) / 2) } else { 0 };
            report.verdict_eq(
                "pointwise_fixed_lines",
                expected_fixed,
                ls.pointwise_fixed,
                Provenance::Literature,
            );
            report.verdict(
                "lines_lie_on_the_point_variety",
                "all",
                if ls.lines.iter().all(|l| l.on_variety) { "all" } else { "some escape" },
                Provenance::Definition,
                ls.lines.iter().all(|l| l.on_variety),
            );

            if n == 2 {
                let (model, form_ok) = xyt_model(&ctx, cutoff)?;
                report.verdict(
                    "diagonalized_model_has_xyt_relations",
                    "xy - yx, xt - tx - y^2, yt - ty - x^2",
                    if form_ok { "span matches" } else { "span differs" },
                    Provenance::Oracle,
                    form_ok,
                );
                let m = multilinearize(&model)?;
                let v = point_variety(&m)?;
                let det_str = v
                    .equations
                    .first()
                    .map(|e| format!("{}", e))
                    .unwrap_or_default();
                {
                    let s = report.section("point_scheme");
                    s.row("determinant", &det_str);
                }
                report.verdict_eq(
                    "determinant_is_difference_of_cubes",
                    "y0^3 - x0^3",
                    det_str,
                    Provenance::Literature,
                );

                let c1 = CycScalar::one();
                let class = successor_on_line(
                    &m,
                    &[c1.clone(), c1.clone(), CycScalar::zero()],
                    &[CycScalar::zero(), CycScalar::zero(), c1.clone()],
                )?;
                let unit = matches!(&class, LineClass::Translation { constant } if constant == &c1);
                report.verdict(
                    "diagonal_line_has_unit_translation",
                    "r -> r + 1",
                    format!("{:?}", class),
                    Provenance::Literature,
                    unit,
                );
                let intersection = ProjPoint::new(vec![
                    CycScalar::zero(),
                    CycScalar::zero(),
                    CycScalar::one(),
                ])?;
                let orb = crate::pointscheme::orbit_report(&m, &intersection, 3);
                report.verdict(
                    "only_the_intersection_point_is_fixed",
                    "intersection fixed; translation fixes nothing else",
                    format!("{:?}", orb.class),
                    Provenance::Literature,
                    matches!(orb.class, crate::pointscheme::OrbitClass::Fixed) && unit,
                );

                // one-dimensional locus: span-equivalent to {x², y²}
                let locus = crate::algebra::onedim_locus(&model)?;
                let vars = model.gen_names().to_vec();
                let x = MultiPoly::variable(vars.clone(), 0);
                let y = MultiPoly::variable(vars, 1);
                let target = vec![x.mul(&x), y.mul(&y)];
                let equiv = crate::exact::multipoly::poly_systems_equivalent(&locus, &target, 3, 3);
                report.verdict(
                    "onedim_locus_is_two_squares",
                    "span of {a^2, b^2} up to degree 3",
                    if equiv { "equivalent" } else { "different" },
                    Provenance::Literature,
                    equiv,
                );
            }

            if n == 3 {
                let (model, form_ok) = vij_model(&ctx, cutoff)?;
                report.verdict(
                    "diagonalized_model_has_vij_relations",
                    "commutators and w_i u - u w_i - w_j w_k",
                    if form_ok { "span matches" } else { "span differs" },
                    Provenance::Oracle,
                    form_ok,
                );
                let check = n3_locus_check(&model, samples)?;
                {
                    let s = report.section("locus_check");
                    s.row("sampled_points", check.sampled_points);
                    s.row(
                        "linear_certificate",
                        if check.linear_certificate { "cubics in minor span" } else { "sampled only" },
                    );
                }
                report.verdict(
                    "candidate_lines_satisfy_all_minors",
                    "7 lines on every maximal minor",
                    if check.lines_on_minors { "verified" } else { "violated" },
                    Provenance::Literature,
                    check.lines_on_minors,
                );
                let enough = check.sampled_points >= samples.min(50);
                report.verdict(
                    "sampled_locus_points_satisfy_cubics",
                    format!(">= {} points, zero counterexamples", samples.min(50)),
                    format!(
                        "{} points, {}",
                        check.sampled_points,
                        if check.samples_satisfy_cubics { "all satisfy" } else { "counterexample" }
                    ),
                    Provenance::Literature,
                    enough && check.samples_satisfy_cubics,
                );

                let locus = crate::algebra::onedim_locus(&model)?;
                let vars = model.gen_names().to_vec();
                let v_ = |i: usize| MultiPoly::variable(vars.clone(), i);
                let target = vec![
                    v_(1).mul(&v_(2)),
                    v_(1).mul(&v_(3)),
                    v_(2).mul(&v_(3)),
                ];
                let equiv = crate::exact::multipoly::poly_systems_equivalent(&locus, &target, 4, 3);
                report.verdict(
                    "onedim_locus_is_three_cross_terms",
                    "span of {bc, bd, cd} up to degree 3",
                    if equiv { "equivalent" } else { "different" },
                    Provenance::Literature,
                    equiv,
                );
            }
        }
        Stratum::FullPlane => {}
    }

    // admissible derivations
    {
        let base = polynomial_presentation(
            {
                let mut v: Vec<String> = (1..=n).map(|i| format!("y{}", i)).collect();
                v.push("v".into());
                v
            },
            Some(ctx.y_rep.clone()),
            cutoff,
        )?;
        let sols = sigma_derivation_solve(&base, &ExactMatrix::identity(n + 1), &trivial_character(&ctx))?;
        // the differential derivation, extended by δ(v) = 0, over the
        // degree-2 monomials of (y_1, …, y_n, v)
        let big_monos = sym2_monomials(n + 1);
        let small_monos = sym2_monomials(n);
        let small_delta = differential_delta(n, &CycScalar::one());
        let mut target = ExactMatrix::zeros(big_monos.len(), n + 1);
        for (bi, mono) in big_monos.iter().enumerate() {
            if mono[n] != 0 {
                continue; // v does not occur in the image
            }
            let small: Vec<u32> = mono[..n].to_vec();
            let si = small_monos.iter().position(|m| m == &small).unwrap();
            for col in 0..n {
                *target.at_mut(bi, col) = small_delta.at(si, col).clone();
            }
        }
        let unknowns = big_monos.len() * (n + 1);
        let mut span = RowSpace::new(unknowns);
        for sol in &sols {
            let mut dense = Vec::with_capacity(unknowns);
            for b in 0..big_monos.len() {
                for i in 0..=n {
                    dense.push(sol.at(b, i).clone());
                }
            }
            span.insert(SparseVec::from_dense(&dense));
        }
        let mut dense = Vec::with_capacity(unknowns);
        for b in 0..big_monos.len() {
            for i in 0..=n {
                dense.push(target.at(b, i).clone());
            }
        }
        let in_span = span.contains(&SparseVec::from_dense(&dense));
        {
            let s = report.section("derivations");
            s.row("solution_dim (sigma = id, chi = triv)", sols.len());
        }
        report.verdict(
            "differential_derivation_is_admissible",
            "y_i((n-1)y_i - 2 sum y_j) lies in the solution space",
            if in_span { "in span" } else { "missing" },
            Provenance::Literature,
            in_span,
        );

        // no admissible derivation when sigma has no eigenvalue 1 and chi is
        // not a constituent of V
        let mut zeros_ok = true;
        let instances: Vec<(CycScalar, CycScalar)> = vec![
            (CycScalar::from_int(2), CycScalar::from_int(3)),
            (CycScalar::from_int(-1), CycScalar::from_int(2)),
        ];
        for (a, b) in instances {
            let mut sigma = ExactMatrix::identity(n + 1).scale(&a);
            *sigma.at_mut(n, n) = b;
            let sols = sigma_derivation_solve(&base, &sigma, &sign_character(&ctx))?;
            zeros_ok &= sols.is_empty();
        }
        report.verdict(
            "no_derivation_without_matching_character",
            "solution space 0",
            if zeros_ok { "0" } else { "nonzero" },
            Provenance::Literature,
            zeros_ok,
        );
    }

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn context_builds_for_supported_n() {
        for n in 2..=4 {
            let ctx = snp1_context(n).unwrap();
            assert_eq!(ctx.group.order(), (1..=n + 1).product::<usize>());
        }
        assert!(snp1_context(5).is_err());
    }

    #[test]
    fn family_at_skew_point_matches_ore_construction() {
        let ctx = snp1_context(2).unwrap();
        let a = CycScalar::from_int(3);
        let fam = family_presentation(&ctx, &a.neg(), &CycScalar::one(), &CycScalar::zero(), 4)
            .unwrap();
        let ore = skew_stratum(&ctx, &a, 4).unwrap();
        assert_eq!(
            hilbert_function(&fam, 4).unwrap(),
            hilbert_function(&ore, 4).unwrap()
        );
        // family coordinates read back
        let coords = family_coordinates(&ctx, &fam.relation_span(2)).unwrap();
        assert!(coords[2].is_zero());
    }

    #[test]
    fn commutative_point_sits_on_the_skew_line() {
        let ctx = snp1_context(2).unwrap();
        let poly = polynomial_presentation(
            vec!["x0".into(), "x1".into(), "x2".into()],
            Some(ctx.natural.clone()),
            4,
        )
        .unwrap();
        let coords = family_coordinates(&ctx, &poly.relation_span(2)).unwrap();
        // A = -B, C = 0
        assert_eq!(coords[0], CycScalar::one());
        assert_eq!(coords[1], CycScalar::from_int(-1));
        assert!(coords[2].is_zero());
    }

    #[test]
    fn xyt_model_span_matches() {
        let ctx = snp1_context(2).unwrap();
        let (_, ok) = xyt_model(&ctx, 4).unwrap();
        assert!(ok);
    }

    #[test]
    fn vij_model_span_matches() {
        let ctx = snp1_context(3).unwrap();
        let (_, ok) = vij_model(&ctx, 4).unwrap();
        assert!(ok);
    }

    #[test]
    fn differential_study_n2_passes() {
        let report = run_snp1(2, Stratum::Differential, &[CycScalar::one()], 4, 50).unwrap();
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn skew_study_n2_passes() {
        let report = run_snp1(2, Stratum::Skew, &[CycScalar::from_int(2)], 4, 10).unwrap();
        assert!(report.passed(), "{}", report.render_text());
    }
}
