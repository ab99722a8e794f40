//! Multivariate polynomials with cyclotomic coefficients.
//!
//! Used for point-scheme equations: determinants and minors of matrices of
//! linear forms, and degree-by-degree spans of commutative polynomial
//! systems. Monomial order is graded lexicographic with the *later* variable
//! in the list taking precedence, so for variables `[x0, y0, t0]` the leading
//! monomial of `y0^3 - x0^3` is `y0^3`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;

use super::cyclotomic::CycScalar;
use super::matrix::{RowSpace, SparseVec};

#[derive(Clone, PartialEq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, CycScalar>, // exponent vector -> nonzero coefficient
}

/// Graded lexicographic comparison; later variables weigh more.
pub fn grlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

impl MultiPoly {
    pub fn zero(vars: Vec<String>) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Vec<String>, c: CycScalar) -> Self {
        let mut p = MultiPoly::zero(vars);
        if !c.is_zero() {
            let exps = vec![0; p.vars.len()];
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn variable(vars: Vec<String>, index: usize) -> Self {
        let mut exps = vec![0u32; vars.len()];
        exps[index] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(exps, CycScalar::one());
        MultiPoly { vars, terms }
    }

    pub fn from_terms(vars: Vec<String>, terms: Vec<(Vec<u32>, CycScalar)>) -> Self {
        let mut p = MultiPoly::zero(vars);
        for (e, c) in terms {
            p.add_term(&e, &c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, CycScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: &[u32], c: &CycScalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps.to_vec()).or_insert_with(CycScalar::zero);
        *entry = entry.add(c);
        if entry.is_zero() {
            self.terms.remove(exps);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &CycScalar) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(self.vars.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v.mul(c))).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars);
        let mut out = MultiPoly::zero(self.vars.clone());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(&exps, &ca.mul(cb));
            }
        }
        out
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// `true` iff all terms share the same total degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn eval(&self, point: &[CycScalar]) -> CycScalar {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = CycScalar::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (i, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    term = term.mul(&point[i]);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Leading term under the graded lexicographic order.
    pub fn leading_term(&self) -> Option<(&Vec<u32>, &CycScalar)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| grlex_cmp(a, b))
    }

    /// Divide through by the leading coefficient.
    pub fn normalized(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => {
                let inv = c.inv().unwrap();
                self.scale(&inv)
            }
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // terms listed in descending graded-lex order
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| grlex_cmp(b, a));
        let mut out = String::new();
        for (n, e) in keys.iter().enumerate() {
            let c = &self.terms[*e];
            let cs = format!("{}", c);
            let (sign, mag) = if let Some(stripped) = cs.strip_prefix('-') {
                ("-", stripped.to_string())
            } else {
                ("+", cs)
            };
            if n == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(if sign == "-" { " - " } else { " + " });
            }
            let mut mono = String::new();
            for (i, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                if !mono.is_empty() {
                    mono.push('*');
                }
                if exp == 1 {
                    mono.push_str(&self.vars[i]);
                } else {
                    mono.push_str(&format!("{}^{}", self.vars[i], exp));
                }
            }
            let needs_parens = mag.contains('+') || mag.contains(' ');
            if mono.is_empty() {
                out.push_str(&mag);
            } else if mag == "1" {
                out.push_str(&mono);
            } else if needs_parens {
                out.push_str(&format!("({})*{}", mag, mono));
            } else {
                out.push_str(&format!("{}*{}", mag, mono));
            }
        }
        write!(f, "{}", out)
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn det_of(rows: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = rows.len();
    if n == 1 {
        return rows[0][0].clone();
    }
    let vars = rows[0][0].vars().to_vec();
    let mut acc = MultiPoly::zero(vars);
    for (j, entry) in rows[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<MultiPoly>> = rows[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let cofactor = entry.mul(&det_of(&minor));
        if j % 2 == 0 {
            acc = acc.add(&cofactor);
        } else {
            acc = acc.sub(&cofactor);
        }
    }
    acc
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// All `k×k` minors of a matrix of polynomials (the determinant when the
/// matrix is square and `k` equals its size). Minors are normalized to have
/// leading coefficient 1; zero minors are omitted.
pub fn poly_det_and_minors(matrix: &[Vec<MultiPoly>], k: usize) -> crate::Result<Vec<MultiPoly>> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, |r| r.len());
    if k == 0 || k > rows || k > cols {
        return Err(Error::MinorTooLarge { k, rows, cols });
    }
    let mut out: Vec<MultiPoly> = Vec::new();
    for row_set in k_subsets(rows, k) {
        for col_set in k_subsets(cols, k) {
            let sub: Vec<Vec<MultiPoly>> = row_set
                .iter()
                .map(|&i| col_set.iter().map(|&j| matrix[i][j].clone()).collect())
                .collect();
            let d = det_of(&sub);
            if d.is_zero() {
                continue;
            }
            out.push(d.normalized());
        }
    }
    out.sort_by_key(|p| format!("{}", p));
    Ok(out)
}

/// Monomials of the given total degree in `nvars` variables, in a fixed
/// deterministic order.
pub fn monomials_of_degree(nvars: usize, degree: u32) -> Vec<Vec<u32>> {
    fn rec(nvars: usize, degree: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == nvars - 1 {
            cur.push(degree);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for d in 0..=degree {
            cur.push(d);
            rec(nvars, degree - d, cur, out);
            cur.pop();
        }
    }
    if nvars == 0 {
        return if degree == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(nvars, degree, &mut Vec::new(), &mut out);
    out
}

/// Span of `{m · f}` over monomials `m` with `deg(m · f) = degree`, for the
/// given homogeneous generators, as a row space over the degree-`degree`
/// monomial basis.
pub fn poly_ideal_degree_span(polys: &[MultiPoly], nvars: usize, degree: u32) -> RowSpace<CycScalar> {
    let basis = monomials_of_degree(nvars, degree);
    let index: std::collections::HashMap<Vec<u32>, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i))
        .collect();
    let mut space = RowSpace::new(basis.len());
    for f in polys {
        if f.is_zero() {
            continue;
        }
        assert!(f.is_homogeneous(), "graded span needs homogeneous generators");
        let d = f.total_degree().unwrap();
        if d > degree {
            continue;
        }
        for m in monomials_of_degree(nvars, degree - d) {
            let entries: Vec<(usize, CycScalar)> = f
                .terms()
                .iter()
                .map(|(e, c)| {
                    let shifted: Vec<u32> = e.iter().zip(&m).map(|(a, b)| a + b).collect();
                    (index[&shifted], c.clone())
                })
                .collect();
            space.insert(SparseVec::from_entries(entries));
        }
    }
    space
}

/// Two-way graded span containment of two homogeneous polynomial systems up
/// to the given degree.
pub fn poly_systems_equivalent(a: &[MultiPoly], b: &[MultiPoly], nvars: usize, max_degree: u32) -> bool {
    for d in 0..=max_degree {
        let span_a = poly_ideal_degree_span(a, nvars, d);
        let span_b = poly_ideal_degree_span(b, nvars, d);
        if span_a.rank() != span_b.rank() {
            return false;
        }
        for row in span_a.rows() {
            if !span_b.contains(row) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    fn vars2() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    fn c(n: i64) -> CycScalar {
        CycScalar::from_int(n)
    }

    #[test]
    fn diag_determinant() {
        let x = MultiPoly::variable(vars2(), 0);
        let y = MultiPoly::variable(vars2(), 1);
        let zero = MultiPoly::zero(vars2());
        let m = vec![vec![x.clone(), zero.clone()], vec![zero, y.clone()]];
        let minors = poly_det_and_minors(&m, 2).unwrap();
        assert_eq!(minors, vec![x.mul(&y)]);
    }

    #[test]
    fn minor_size_too_large_errors() {
        let x = MultiPoly::variable(vars2(), 0);
        let m = vec![vec![x]];
        assert!(poly_det_and_minors(&m, 2).is_err());
    }

    #[test]
    fn later_variable_wins_grlex() {
        // y^3 - x^3 is already normalized: y is later in the list than x
        let x = MultiPoly::variable(vars2(), 0);
        let y = MultiPoly::variable(vars2(), 1);
        let p = y.mul(&y).mul(&y).sub(&x.mul(&x).mul(&x));
        assert_eq!(p.normalized(), p);
        assert_eq!(format!("{}", p), "y^3 - x^3");
    }

    fn random_poly(rng: &mut SplitMix64, nvars: usize, maxdeg: u32) -> MultiPoly {
        let vars: Vec<String> = (0..nvars).map(|i| format!("v{}", i)).collect();
        let mut p = MultiPoly::zero(vars);
        for _ in 0..3 {
            let exps: Vec<u32> = (0..nvars).map(|_| rng.below(maxdeg as u64 + 1) as u32).collect();
            p.add_term(&exps, &c(rng.small_int(3)));
        }
        p
    }

    #[test]
    fn det_is_multiplicative_on_random_instances() {
        let mut rng = SplitMix64::new(5);
        for n in [2usize, 3] {
            for _ in 0..4 {
                let a: Vec<Vec<MultiPoly>> = (0..n)
                    .map(|_| (0..n).map(|_| random_poly(&mut rng, 2, 1)).collect())
                    .collect();
                let b: Vec<Vec<MultiPoly>> = (0..n)
                    .map(|_| (0..n).map(|_| random_poly(&mut rng, 2, 1)).collect())
                    .collect();
                // product matrix
                let vars = a[0][0].vars().to_vec();
                let prod: Vec<Vec<MultiPoly>> = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| {
                                let mut acc = MultiPoly::zero(vars.clone());
                                for k in 0..n {
                                    acc = acc.add(&a[i][k].mul(&b[k][j]));
                                }
                                acc
                            })
                            .collect()
                    })
                    .collect();
                let da = det_of(&a);
                let db = det_of(&b);
                let dp = det_of(&prod);
                assert_eq!(dp, da.mul(&db));
            }
        }
    }

    #[test]
    fn graded_span_equivalence() {
        // (x^2, y^2) vs (x^2 + y^2, x^2 - y^2): same span at every degree
        let vars = vars2();
        let x = MultiPoly::variable(vars.clone(), 0);
        let y = MultiPoly::variable(vars.clone(), 1);
        let x2 = x.mul(&x);
        let y2 = y.mul(&y);
        let a = vec![x2.clone(), y2.clone()];
        let b = vec![x2.add(&y2), x2.sub(&y2)];
        assert!(poly_systems_equivalent(&a, &b, 2, 4));
        let c_sys = vec![x2.clone()];
        assert!(!poly_systems_equivalent(&a, &c_sys, 2, 4));
    }
}
