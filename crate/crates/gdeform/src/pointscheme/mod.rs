//! Point modules of quadratic algebras by multilinearization: the matrix of
//! linear forms `M(p)`, point-variety equations, the shift successor map,
//! orbit analysis, and the line structure of the symmetric-group
//! differential algebras.
//!
//! For a quadratic relation `Σ c_{ij} x_i x_j`, a pair of consecutive
//! point-module coordinates `(p, q)` satisfies the relation iff
//! `(M(p)·q)_s = 0`, where `M(p)_{s,j} = Σ_i c^{(s)}_{ij} p_i`.

use crate::algebra::{relation, Presentation};
use crate::error::Error;
use crate::exact::multipoly::poly_det_and_minors;
use crate::exact::tensor::index_to_word;
use crate::exact::{CycScalar, ExactMatrix, Field, FracScalar, MultiPoly, UniPoly};
use crate::rng::SplitMix64;
use crate::Result;

/// The multilinearization matrix: entry `(s, j)` is the linear form
/// `Σ_i c^{(s)}_{ij} p_i` in the point coordinates.
#[derive(Clone)]
pub struct LinearFormMatrix {
    gen_names: Vec<String>,
    var_names: Vec<String>,
    /// `coeff[s][j][i]`: coefficient of `p_i` in entry `(s, j)`.
    coeff: Vec<Vec<Vec<CycScalar>>>,
}

impl std::fmt::Debug for LinearFormMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LinearFormMatrix({}x{})", self.rows(), self.cols())
    }
}

impl LinearFormMatrix {
    pub fn rows(&self) -> usize {
        self.coeff.len()
    }

    pub fn cols(&self) -> usize {
        self.gen_names.len()
    }

    pub fn gen_names(&self) -> &[String] {
        &self.gen_names
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    /// Evaluate at a point, over any field containing the scalars.
    pub fn evaluate<F: Field>(&self, point: &[F]) -> ExactMatrix<F> {
        assert_eq!(point.len(), self.cols());
        ExactMatrix::from_fn(self.rows(), self.cols(), |s, j| {
            let mut acc = F::zero();
            for (i, c) in self.coeff[s][j].iter().enumerate() {
                if !c.is_zero() {
                    acc = acc.add_ref(&F::from_cyc(c).mul_ref(&point[i]));
                }
            }
            acc
        })
    }

    /// The matrix as polynomials in the point coordinates.
    pub fn to_polynomials(&self) -> Vec<Vec<MultiPoly>> {
        (0..self.rows())
            .map(|s| {
                (0..self.cols())
                    .map(|j| {
                        let mut p = MultiPoly::zero(self.var_names.clone());
                        for (i, c) in self.coeff[s][j].iter().enumerate() {
                            let mut exps = vec![0u32; self.cols()];
                            exps[i] = 1;
                            p.add_term(&exps, c);
                        }
                        p
                    })
                    .collect()
            })
            .collect()
    }
}

fn point_variable_names(gen_names: &[String]) -> Vec<String> {
    gen_names
        .iter()
        .map(|g| {
            if g.ends_with(|c: char| c.is_ascii_digit()) {
                format!("{}_0", g)
            } else {
                format!("{}0", g)
            }
        })
        .collect()
}

/// Multilinearize a quadratic presentation. The bilinear evaluation identity
/// is verified on seeded random pairs.
pub fn multilinearize(p: &Presentation) -> Result<LinearFormMatrix> {
    p.is_quadratic()?;
    let dim = p.dim();
    let relations = p.relations().get(&2).cloned().unwrap_or_default();
    let mut coeff = Vec::with_capacity(relations.len());
    for rel in &relations {
        let mut entry = vec![vec![CycScalar::zero(); dim]; dim]; // [col j][var i]
        for (idx, c) in rel.entries() {
            let w = index_to_word(*idx, dim, 2);
            entry[w[1]][w[0]] = entry[w[1]][w[0]].add(c);
        }
        coeff.push(entry);
    }
    let m = LinearFormMatrix {
        gen_names: p.gen_names().to_vec(),
        var_names: point_variable_names(p.gen_names()),
        coeff,
    };

    // bilinear evaluation identity on random pairs
    let mut rng = SplitMix64::new(0x9d5f);
    for _ in 0..4 {
        let pv: Vec<CycScalar> = (0..dim).map(|_| CycScalar::from_int(rng.small_int(4))).collect();
        let qv: Vec<CycScalar> = (0..dim).map(|_| CycScalar::from_int(rng.small_int(4))).collect();
        let eval = m.evaluate(&pv);
        for (s, rel) in relations.iter().enumerate() {
            let mut direct = CycScalar::zero();
            for (idx, c) in rel.entries() {
                let w = index_to_word(*idx, dim, 2);
                direct = direct.add(&c.mul(&pv[w[0]]).mul(&qv[w[1]]));
            }
            let mut via_matrix = CycScalar::zero();
            for j in 0..dim {
                via_matrix = via_matrix.add(&eval.at(s, j).mul(&qv[j]));
            }
            assert_eq!(direct, via_matrix, "bilinear evaluation identity failed");
        }
    }
    Ok(m)
}

/// Equations of the point variety `{p : rank M(p) ≤ cols - 1}`.
#[derive(Clone, Debug)]
pub struct PointVariety {
    pub equations: Vec<MultiPoly>,
    /// True when the condition is vacuous: fewer than `cols` relations, or
    /// every maximal minor vanishes identically.
    pub whole_space: bool,
}

pub fn point_variety(m: &LinearFormMatrix) -> Result<PointVariety> {
    let (r, g) = (m.rows(), m.cols());
    if r < g {
        return Ok(PointVariety {
            equations: Vec::new(),
            whole_space: true,
        });
    }
    let polys = m.to_polynomials();
    let minors = poly_det_and_minors(&polys, g)?;
    let whole = minors.is_empty();
    Ok(PointVariety {
        equations: minors,
        whole_space: whole,
    })
}

/// A point of projective space, normalized so the first nonzero coordinate
/// is 1.
#[derive(Clone, PartialEq)]
pub struct ProjPoint {
    coords: Vec<CycScalar>,
}

impl ProjPoint {
    pub fn new(coords: Vec<CycScalar>) -> Result<Self> {
        let lead = coords.iter().position(|c| !c.is_zero());
        let lead = lead.ok_or(Error::NotInvertible)?;
        let inv = coords[lead].inv().unwrap();
        Ok(ProjPoint {
            coords: coords.iter().map(|c| c.mul(&inv)).collect(),
        })
    }

    pub fn coords(&self) -> &[CycScalar] {
        &self.coords
    }
}

impl std::fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| format!("{}", c)).collect();
        write!(f, "[{}]", parts.join(":"))
    }
}

impl std::fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self)
    }
}

/// The unique `q` with `M(p)·q = 0`, defined when `rank M(p) = cols - 1`.
pub fn successor(m: &LinearFormMatrix, p: &ProjPoint) -> Result<ProjPoint> {
    let g = m.cols();
    let eval = m.evaluate(p.coords());
    let space = eval.row_space();
    if space.rank() == g {
        return Err(Error::NotOnVariety);
    }
    if space.rank() < g - 1 {
        return Err(Error::SuccessorUndefined {
            rank: space.rank(),
            want: g - 1,
        });
    }
    let kernel = space.kernel_basis();
    debug_assert_eq!(kernel.len(), 1);
    ProjPoint::new(kernel[0].to_dense(g))
}

/// Orbit of a point under the successor map, classified by exact equality.
#[derive(Clone, Debug)]
pub enum OrbitClass {
    Fixed,
    Finite { period: usize },
    Undefined { rank: usize },
    /// No repetition found within the step bound.
    Unresolved { steps: usize },
}

#[derive(Clone, Debug)]
pub struct OrbitReport {
    pub start: ProjPoint,
    pub sequence: Vec<ProjPoint>,
    pub class: OrbitClass,
}

pub fn orbit_report(m: &LinearFormMatrix, start: &ProjPoint, max_steps: usize) -> OrbitReport {
    let mut sequence = vec![start.clone()];
    for _ in 0..max_steps {
        let cur = sequence.last().unwrap();
        match successor(m, cur) {
            Ok(next) => {
                if &next == sequence.last().unwrap() {
                    return OrbitReport {
                        start: start.clone(),
                        sequence,
                        class: OrbitClass::Fixed,
                    };
                }
                if let Some(pos) = sequence.iter().position(|p| p == &next) {
                    let period = sequence.len() - pos;
                    sequence.push(next);
                    return OrbitReport {
                        start: start.clone(),
                        sequence,
                        class: OrbitClass::Finite { period },
                    };
                }
                sequence.push(next);
            }
            Err(Error::SuccessorUndefined { rank, .. }) => {
                return OrbitReport {
                    start: start.clone(),
                    sequence,
                    class: OrbitClass::Undefined { rank },
                }
            }
            Err(_) => {
                return OrbitReport {
                    start: start.clone(),
                    sequence,
                    class: OrbitClass::Undefined { rank: 0 },
                }
            }
        }
    }
    OrbitReport {
        start: start.clone(),
        sequence,
        class: OrbitClass::Unresolved { steps: max_steps },
    }
}

/// Classification of the successor restricted to a line, certified by the
/// exact symbolic computation over the rational-function field.
#[derive(Clone, Debug)]
pub enum LineClass {
    PointwiseFixed,
    /// Affine translation `r ↦ r + constant` in the direction coordinate;
    /// infinite order in characteristic zero.
    Translation { constant: CycScalar },
}

/// Successor along the parametrized line `base + r·direction`: computes the
/// image symbolically over `ℚ(ζ)(r)` and certifies that it is again
/// `base + s·direction` with `s - r` constant.
pub fn successor_on_line(
    m: &LinearFormMatrix,
    base: &[CycScalar],
    direction: &[CycScalar],
) -> Result<LineClass> {
    let g = m.cols();
    assert_eq!(base.len(), g);
    assert_eq!(direction.len(), g);
    let r = FracScalar::parameter();
    let point: Vec<FracScalar> = base
        .iter()
        .zip(direction)
        .map(|(b, d)| {
            FracScalar::constant(b.clone()).add(&r.mul(&FracScalar::constant(d.clone())))
        })
        .collect();
    let eval = m.evaluate(&point);
    let space = eval.row_space();
    if space.rank() != g - 1 {
        return Err(Error::SuccessorUndefined {
            rank: space.rank(),
            want: g - 1,
        });
    }
    let kernel = space.kernel_basis();
    let q = kernel[0].to_dense(g);

    // chart: a coordinate where the direction vanishes but the base does not
    let chart = (0..g)
        .find(|&i| direction[i].is_zero() && !base[i].is_zero())
        .ok_or(Error::NotOnVariety)?;
    let scale = FracScalar::constant(base[chart].clone()).mul(&q[chart].inv().ok_or(
        Error::SuccessorUndefined {
            rank: g - 1,
            want: g - 1,
        },
    )?);
    let qn: Vec<FracScalar> = q.iter().map(|c| c.mul(&scale)).collect();

    // read s from a coordinate with nonzero direction, then verify the whole
    // image equals base + s·direction
    let dir_idx = (0..g)
        .find(|&i| !direction[i].is_zero())
        .expect("direction is nonzero");
    let s = qn[dir_idx]
        .sub(&FracScalar::constant(base[dir_idx].clone()))
        .mul(&FracScalar::constant(direction[dir_idx].inv().unwrap()));
    for i in 0..g {
        let expect = FracScalar::constant(base[i].clone())
            .add(&s.mul(&FracScalar::constant(direction[i].clone())));
        if qn[i] != expect {
            return Err(Error::NotOnVariety);
        }
    }
    let diff = s.sub(&r);
    // the difference must be a constant rational function
    if diff.denominator() != &UniPoly::one() || diff.numerator().degree().unwrap_or(0) > 0 {
        return Err(Error::NotOnVariety);
    }
    let constant = diff
        .numerator()
        .coeffs()
        .first()
        .cloned()
        .unwrap_or_else(CycScalar::zero);
    if constant.is_zero() {
        Ok(LineClass::PointwiseFixed)
    } else {
        Ok(LineClass::Translation { constant })
    }
}

/// The differential-stratum relations on `(y_1, …, y_n, v)`:
/// `v⊗y_i - y_i⊗v - y_i⊗((n-1)y_i - 2Σ_{j≠i} y_j)` and the commutators.
pub fn differential_relations(n: usize) -> Result<Presentation> {
    let dim = n + 1;
    let v = n; // index of the extension generator
    let c = CycScalar::from_int;
    let mut basis = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            basis.push(relation(
                dim,
                &[(CycScalar::one(), &[i, j]), (c(-1), &[j, i])],
            ));
        }
    }
    for i in 0..n {
        let mut terms: Vec<(CycScalar, Vec<usize>)> = vec![
            (CycScalar::one(), vec![v, i]),
            (c(-1), vec![i, v]),
            (c(-(n as i64 - 1)), vec![i, i]),
        ];
        for j in 0..n {
            if j != i {
                terms.push((c(2), vec![i, j]));
            }
        }
        let terms_ref: Vec<(CycScalar, &[usize])> =
            terms.iter().map(|(c, w)| (c.clone(), w.as_slice())).collect();
        basis.push(relation(dim, &terms_ref));
    }
    let mut names: Vec<String> = (1..=n).map(|i| format!("y{}", i)).collect();
    names.push("v".into());
    Presentation::new(names, None, vec![(2, basis)], 5)
}

#[derive(Clone, Debug)]
pub struct LineReport {
    /// The subset `T` of vanishing `y`-coordinates (1-based indices).
    pub zero_set: Vec<usize>,
    pub on_variety: bool,
    pub class: LineClass,
    /// Exactly computed translation constant (zero for pointwise-fixed).
    pub constant: CycScalar,
    /// The closed-form candidate `2|T| - n - 1` for the constant, reported
    /// alongside the computed value.
    pub closed_form_candidate: CycScalar,
}

#[derive(Clone, Debug)]
pub struct LineStructure {
    pub n: usize,
    pub lines: Vec<LineReport>,
    pub pointwise_fixed: usize,
    pub equations: Vec<MultiPoly>,
}

/// Candidate lines of the differential stratum, indexed by proper subsets
/// `T ⊊ {1..n}`: coordinates `y_i = 0` for `i ∈ T`, the remaining
/// `y`-coordinates equal, `r` free. Each line is verified to lie on the
/// point variety and classified along the symbolic successor.
pub fn snp1_line_structure(n: usize) -> Result<LineStructure> {
    if !(2..=4).contains(&n) {
        return Err(Error::UnsupportedRange { n, min: 2, max: 4 });
    }
    let p = differential_relations(n)?;
    let m = multilinearize(&p)?;
    let variety = point_variety(&m)?;
    let g = n + 1;

    let mut lines = Vec::new();
    let mut fixed = 0usize;
    for mask in 0..(1u32 << n) - 1 {
        let zero_set: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect();
        let base: Vec<CycScalar> = (0..g)
            .map(|i| {
                if i < n && mask & (1 << i) == 0 {
                    CycScalar::one()
                } else {
                    CycScalar::zero()
                }
            })
            .collect();
        let mut direction = vec![CycScalar::zero(); g];
        direction[n] = CycScalar::one();

        // containment: every defining equation vanishes at deg+1 points of
        // the line, hence on the whole line
        let mut on_variety = true;
        if !variety.whole_space {
            'eqs: for eq in &variety.equations {
                let deg = eq.total_degree().unwrap_or(0) as i64;
                for step in 0..=deg {
                    let point: Vec<CycScalar> = base
                        .iter()
                        .zip(&direction)
                        .map(|(b, d)| b.add(&d.mul(&CycScalar::from_int(step))))
                        .collect();
                    if !eq.eval(&point).is_zero() {
                        on_variety = false;
                        break 'eqs;
                    }
                }
            }
        }

        let class = successor_on_line(&m, &base, &direction)?;
        let constant = match &class {
            LineClass::PointwiseFixed => CycScalar::zero(),
            LineClass::Translation { constant } => constant.clone(),
        };
        if matches!(class, LineClass::PointwiseFixed) {
            fixed += 1;
        }
        let t_size = zero_set.len() as i64;
        lines.push(LineReport {
            zero_set,
            on_variety,
            class,
            constant,
            closed_form_candidate: CycScalar::from_int(2 * t_size - n as i64 - 1),
        });
    }
    Ok(LineStructure {
        n,
        lines,
        pointwise_fixed: fixed,
        equations: variety.equations,
    })
}

/// binomial(n, k)
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::polynomial_presentation;

    fn c(n: i64) -> CycScalar {
        CycScalar::from_int(n)
    }

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    fn xyt_model() -> Presentation {
        // xy - yx, xt - tx - y², yt - ty - x²
        let rels = vec![
            relation(3, &[(c(1), &[0, 1]), (c(-1), &[1, 0])]),
            relation(3, &[(c(1), &[0, 2]), (c(-1), &[2, 0]), (c(-1), &[1, 1])]),
            relation(3, &[(c(1), &[1, 2]), (c(-1), &[2, 1]), (c(-1), &[0, 0])]),
        ];
        Presentation::new(names(&["x", "y", "t"]), None, vec![(2, rels)], 5).unwrap()
    }

    #[test]
    fn commutative_two_variable_matrix() {
        let p = polynomial_presentation(names(&["x", "y"]), None, 4).unwrap();
        let m = multilinearize(&p).unwrap();
        assert_eq!((m.rows(), m.cols()), (1, 2));
        // the 1x2 matrix (-y0, x0) up to sign
        let polys = m.to_polynomials();
        let vars = m.var_names().to_vec();
        let x0 = MultiPoly::variable(vars.clone(), 0);
        let y0 = MultiPoly::variable(vars, 1);
        assert_eq!(polys[0][0], y0.neg());
        assert_eq!(polys[0][1], x0);
        let v = point_variety(&m).unwrap();
        assert!(v.whole_space);
        assert!(v.equations.is_empty());
    }

    #[test]
    fn xyt_determinant_is_difference_of_cubes() {
        let m = multilinearize(&xyt_model()).unwrap();
        let v = point_variety(&m).unwrap();
        assert!(!v.whole_space);
        assert_eq!(v.equations.len(), 1);
        let vars = m.var_names().to_vec();
        let x0 = MultiPoly::variable(vars.clone(), 0);
        let y0 = MultiPoly::variable(vars, 1);
        let cube = |p: &MultiPoly| p.mul(p).mul(p);
        let expect = cube(&y0).sub(&cube(&x0)).normalized();
        assert_eq!(v.equations[0], expect);
        assert_eq!(format!("{}", v.equations[0]), "y0^3 - x0^3");
    }

    #[test]
    fn xyt_successor_translates_the_diagonal_line() {
        let m = multilinearize(&xyt_model()).unwrap();
        for t in [0i64, 1, 5, -2] {
            let p = ProjPoint::new(vec![c(1), c(1), c(t)]).unwrap();
            let q = successor(&m, &p).unwrap();
            let expect = ProjPoint::new(vec![c(1), c(1), c(t + 1)]).unwrap();
            assert_eq!(q, expect);
        }
        // symbolic: unit translation on the whole line
        let class = successor_on_line(&m, &[c(1), c(1), c(0)], &[c(0), c(0), c(1)]).unwrap();
        match class {
            LineClass::Translation { constant } => assert_eq!(constant, c(1)),
            _ => panic!("expected a translation"),
        }
    }

    #[test]
    fn xyt_intersection_point_is_fixed() {
        let m = multilinearize(&xyt_model()).unwrap();
        let p = ProjPoint::new(vec![c(0), c(0), c(1)]).unwrap();
        let report = orbit_report(&m, &p, 5);
        assert!(matches!(report.class, OrbitClass::Fixed));
    }

    #[test]
    fn commutative_points_are_all_fixed() {
        let p = polynomial_presentation(names(&["x", "y", "z"]), None, 4).unwrap();
        let m = multilinearize(&p).unwrap();
        for coords in [[1i64, 2, 3], [1, 0, 0], [0, 5, -1]] {
            let pt = ProjPoint::new(coords.iter().map(|&v| c(v)).collect()).unwrap();
            let report = orbit_report(&m, &pt, 3);
            assert!(matches!(report.class, OrbitClass::Fixed));
        }
    }

    #[test]
    fn successor_stays_on_the_variety() {
        let m = multilinearize(&xyt_model()).unwrap();
        let v = point_variety(&m).unwrap();
        let omega = CycScalar::zeta(3);
        for (a, t) in [(CycScalar::one(), c(2)), (omega.clone(), c(-1)), (omega.pow(2), c(7))] {
            // points on the line x = a·y (a³ = 1) are on the variety
            let p = ProjPoint::new(vec![a.clone(), CycScalar::one(), t]).unwrap();
            for eq in &v.equations {
                assert!(eq.eval(p.coords()).is_zero());
            }
            let q = successor(&m, &p).unwrap();
            for eq in &v.equations {
                assert!(eq.eval(q.coords()).is_zero());
            }
        }
    }

    #[test]
    fn line_structure_counts() {
        for (n, expected_fixed) in [(2usize, 0usize), (3, 3), (4, 0)] {
            let ls = snp1_line_structure(n).unwrap();
            assert_eq!(ls.lines.len(), (1 << n) - 1, "2^n - 1 lines for n = {}", n);
            assert!(ls.lines.iter().all(|l| l.on_variety));
            assert_eq!(ls.pointwise_fixed, expected_fixed, "fixed lines for n = {}", n);
            if n % 2 == 1 {
                assert_eq!(ls.pointwise_fixed, binomial(n, (n + 1) / 2));
            }
            // every pointwise-fixed line has |T| constant across the report
            for line in &ls.lines {
                if matches!(line.class, LineClass::PointwiseFixed) {
                    assert!(line.constant.is_zero());
                }
            }
        }
    }

    #[test]
    fn differential_stratum_n2_has_three_translated_lines() {
        let ls = snp1_line_structure(2).unwrap();
        for line in &ls.lines {
            match &line.class {
                LineClass::Translation { constant } => {
                    assert!(!constant.is_zero());
                }
                _ => panic!("n = 2 lines are all translations"),
            }
        }
    }

    #[test]
    fn six_by_four_matrix_for_n3() {
        let p = differential_relations(3).unwrap();
        let m = multilinearize(&p).unwrap();
        assert_eq!((m.rows(), m.cols()), (6, 4));
        // 15 maximal minors in total; the 3 built from all three commutator
        // rows vanish identically and are omitted
        let v = point_variety(&m).unwrap();
        assert_eq!(v.equations.len(), 12);
        assert!(!v.whole_space);
    }

    #[test]
    fn out_of_range_n_is_rejected() {
        assert!(snp1_line_structure(5).is_err());
        assert!(snp1_line_structure(1).is_err());
    }

    #[test]
    fn period_two_orbit_is_detected() {
        // xy + yx has M(p) = (y0, x0); the successor swaps the coordinates up
        // to sign, so [1:1] and [1:-1] form a 2-cycle
        let rel = relation(2, &[(c(1), &[0, 1]), (c(1), &[1, 0])]);
        let p = Presentation::new(names(&["x", "y"]), None, vec![(2, vec![rel])], 4).unwrap();
        let m = multilinearize(&p).unwrap();
        let start = ProjPoint::new(vec![c(1), c(1)]).unwrap();
        let report = orbit_report(&m, &start, 6);
        assert!(matches!(report.class, OrbitClass::Finite { period: 2 }));
        // a fixed point of the same map
        let fixed = ProjPoint::new(vec![c(1), c(0)]).unwrap();
        assert!(matches!(orbit_report(&m, &fixed, 4).class, OrbitClass::Fixed));
    }

    #[test]
    fn translated_orbits_stay_unresolved_within_the_step_bound() {
        let m = multilinearize(&xyt_model()).unwrap();
        let start = ProjPoint::new(vec![c(1), c(1), c(0)]).unwrap();
        let report = orbit_report(&m, &start, 5);
        assert!(matches!(report.class, OrbitClass::Unresolved { steps: 5 }));
        assert_eq!(report.sequence.len(), 6);
    }

    #[test]
    fn off_variety_points_are_rejected() {
        let m = multilinearize(&xyt_model()).unwrap();
        let off = ProjPoint::new(vec![c(1), c(2), c(0)]).unwrap();
        assert!(matches!(
            successor(&m, &off),
            Err(crate::error::Error::NotOnVariety)
        ));
    }
}
