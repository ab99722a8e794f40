//! Rank of a matrix over the rational-function field, with exact detection
//! of the parameter values where the rank drops.
//!
//! Candidates are harvested from the numerators of the pivots met during
//! elimination: the product of the pivots is (up to sign) a maximal nonzero
//! minor of the original matrix, so every actual degeneration point is a root
//! of some pivot numerator. Each candidate is re-verified by exact
//! substitution before being reported. Only rational roots and roots of unity
//! are resolved; leftover factors are reported symbolically.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::cyclotomic::{cyclotomic_polynomial, euler_phi, gcd_u64, CycScalar, Rat};
use super::matrix::ExactMatrix;
use super::poly::{FracScalar, UniPoly};

/// Cyclotomic factors `Φ_d` are tried for all orders `d` with
/// `φ(d) ≤ deg` up to this cap.
const MAX_CYCLOTOMIC_ORDER: u64 = 400;

#[derive(Debug, Clone)]
pub struct ParametricRankReport {
    /// Rank over the function field.
    pub generic_rank: usize,
    /// Parameter values where the rank verifiably drops.
    pub drop_points: Vec<CycScalar>,
    /// Every candidate that was examined (drop points are a subset).
    pub candidates: Vec<CycScalar>,
    /// Pivot-numerator cofactors of degree >= 1 whose roots were not
    /// recognized as rationals or roots of unity.
    pub unresolved_factors: Vec<UniPoly>,
    /// Candidates that could not be substituted because a denominator
    /// vanishes there.
    pub poles: Vec<CycScalar>,
}

/// Rational roots of a polynomial over `ℚ(ζ_m)`, by the rational root
/// theorem applied to a nonzero rational coordinate polynomial.
fn rational_roots(f: &UniPoly) -> Vec<CycScalar> {
    let mut roots = Vec::new();
    if f.is_zero() {
        return roots;
    }
    // common conductor of all coefficients
    let mut m = 1u64;
    for c in f.coeffs() {
        m = m / gcd_u64(m, c.conductor()) * c.conductor();
    }
    let phi = euler_phi(m) as usize;
    // coordinate polynomials over Q
    let mut coord_polys: Vec<Vec<Rat>> = vec![Vec::new(); phi];
    for (deg, c) in f.coeffs().iter().enumerate() {
        let coords = c.coeffs_at(m);
        for (i, r) in coords.into_iter().enumerate() {
            if !r.is_zero() {
                coord_polys[i].resize(deg + 1, Rat::zero());
                coord_polys[i][deg] = r;
            }
        }
    }
    let base = match coord_polys.iter().find(|p| !p.is_empty()) {
        Some(p) => p.clone(),
        None => return roots,
    };
    // strip powers of t; t = 0 is then a candidate
    let low = base.iter().position(|c| !c.is_zero()).unwrap();
    if low > 0 || base[0].is_zero() {
        roots.push(CycScalar::zero());
    }
    let stripped: Vec<Rat> = base[low..].to_vec();
    if stripped.len() < 2 {
        return verified(f, roots);
    }
    // integer scale
    let mut denom_lcm = BigInt::from(1);
    for c in &stripped {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = stripped.iter().map(|c| (c * Rat::from_integer(denom_lcm.clone())).to_integer()).collect();
    let a0 = ints.first().unwrap().clone();
    let an = ints.last().unwrap().clone();
    let (p_divs, q_divs) = match (small_divisors(&a0), small_divisors(&an)) {
        (Some(p), Some(q)) => (p, q),
        _ => return verified(f, roots), // coefficients too large for the search
    };
    for p in &p_divs {
        for q in &q_divs {
            for sign in [1i64, -1] {
                let cand = CycScalar::from_ratio(sign * p, *q);
                roots.push(cand);
            }
        }
    }
    verified(f, roots)
}

fn verified(f: &UniPoly, candidates: Vec<CycScalar>) -> Vec<CycScalar> {
    let mut out: Vec<CycScalar> = Vec::new();
    for c in candidates {
        if f.has_root(&c) && !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

fn small_divisors(n: &BigInt) -> Option<Vec<i64>> {
    let v = n.abs().to_i64()?;
    if v == 0 {
        return Some(vec![1]);
    }
    if v > 1_000_000 {
        return None;
    }
    let mut divs = Vec::new();
    let mut d = 1;
    while d * d <= v {
        if v % d == 0 {
            divs.push(d);
            if d != v / d {
                divs.push(v / d);
            }
        }
        d += 1;
    }
    divs.sort();
    Some(divs)
}

/// Roots of unity of `f`, found by trial division by cyclotomic polynomials.
fn root_of_unity_roots(f: &UniPoly) -> Vec<CycScalar> {
    let mut out = Vec::new();
    let deg = match f.degree() {
        Some(d) if d >= 1 => d as u64,
        _ => return out,
    };
    for d in 1..=MAX_CYCLOTOMIC_ORDER {
        if euler_phi(d) > deg {
            continue;
        }
        let phi_d = UniPoly::from_coeffs(
            cyclotomic_polynomial(d)
                .into_iter()
                .map(CycScalar::from_rational)
                .collect(),
        );
        let (_, r) = f.div_rem(&phi_d);
        if r.is_zero() {
            for j in 1..=d {
                if gcd_u64(j, d) == 1 {
                    let root = CycScalar::root_of_unity(d, j as i64);
                    if !out.contains(&root) {
                        out.push(root);
                    }
                }
            }
        }
    }
    out
}

/// Divide out every occurrence of the recognized roots; returns the cofactor.
fn strip_roots(f: &UniPoly, roots: &[CycScalar]) -> UniPoly {
    let mut g = f.clone();
    for r in roots {
        loop {
            if g.degree().unwrap_or(0) == 0 {
                return g;
            }
            let lin = UniPoly::from_coeffs(vec![r.neg(), CycScalar::one()]);
            let (q, rem) = g.div_rem(&lin);
            if rem.is_zero() {
                g = q;
            } else {
                break;
            }
        }
    }
    g
}

/// Generic rank over the function field, plus verified degeneration points.
pub fn parametric_rank(m: &ExactMatrix<FracScalar>) -> ParametricRankReport {
    let mut work = m.clone();
    let rows = work.nrows();
    let cols = work.ncols();
    let mut pivots: Vec<FracScalar> = Vec::new();
    let mut pivot_row = 0usize;
    for col in 0..cols {
        if pivot_row >= rows {
            break;
        }
        let found = (pivot_row..rows).find(|&r| !work.at(r, col).is_zero());
        let r = match found {
            Some(r) => r,
            None => continue,
        };
        if r != pivot_row {
            for j in 0..cols {
                let tmp = work.at(r, j).clone();
                *work.at_mut(r, j) = work.at(pivot_row, j).clone();
                *work.at_mut(pivot_row, j) = tmp;
            }
        }
        let pivot = work.at(pivot_row, col).clone();
        pivots.push(pivot.clone());
        let pinv = pivot.inv().unwrap();
        for rr in pivot_row + 1..rows {
            if work.at(rr, col).is_zero() {
                continue;
            }
            let factor = work.at(rr, col).mul(&pinv);
            for j in col..cols {
                let t = work.at(pivot_row, j).mul(&factor);
                *work.at_mut(rr, j) = work.at(rr, j).sub(&t);
            }
        }
        pivot_row += 1;
    }
    let generic_rank = pivots.len();

    // harvest candidates from pivot numerators
    let mut candidates: Vec<CycScalar> = Vec::new();
    let mut unresolved: Vec<UniPoly> = Vec::new();
    for p in &pivots {
        let num = p.numerator();
        if num.degree().unwrap_or(0) == 0 {
            continue;
        }
        let mut roots = rational_roots(num);
        for r in root_of_unity_roots(num) {
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
        let cofactor = strip_roots(num, &roots).into_monic();
        if cofactor.degree().unwrap_or(0) >= 1 && !unresolved.contains(&cofactor) {
            unresolved.push(cofactor);
        }
        for r in roots {
            if !candidates.contains(&r) {
                candidates.push(r);
            }
        }
    }

    // verify candidates by exact substitution
    let mut drop_points = Vec::new();
    let mut poles = Vec::new();
    'cand: for c in &candidates {
        let mut eval = ExactMatrix::<CycScalar>::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                match m.at(i, j).eval(c) {
                    Some(v) => *eval.at_mut(i, j) = v,
                    None => {
                        poles.push(c.clone());
                        continue 'cand;
                    }
                }
            }
        }
        if eval.rank() < generic_rank {
            drop_points.push(c.clone());
        }
    }

    ParametricRankReport {
        generic_rank,
        drop_points,
        candidates,
        unresolved_factors: unresolved,
        poles,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;

    fn poly(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| CycScalar::from_int(c)).collect())
    }

    #[test]
    fn single_parameter_entry() {
        let m = ExactMatrix::from_rows(vec![vec![FracScalar::parameter()]]);
        let report = parametric_rank(&m);
        assert_eq!(report.generic_rank, 1);
        assert_eq!(report.drop_points, vec![CycScalar::zero()]);
        assert!(report.unresolved_factors.is_empty());
    }

    #[test]
    fn cube_roots_of_unity_recognized() {
        // t^3 - 1 over the rationals: the drop locus {1, ω, ω²} lies outside
        // the field of the input and is found by cyclotomic factor recognition
        let m = ExactMatrix::from_rows(vec![vec![FracScalar::from_poly(poly(&[-1, 0, 0, 1]))]]);
        let report = parametric_rank(&m);
        assert_eq!(report.generic_rank, 1);
        assert_eq!(report.drop_points.len(), 3);
        let omega = CycScalar::zeta(3);
        assert!(report.drop_points.contains(&CycScalar::one()));
        assert!(report.drop_points.contains(&omega));
        assert!(report.drop_points.contains(&omega.pow(2)));
        assert!(report.unresolved_factors.is_empty());
    }

    #[test]
    fn irreducible_quadratic_reported_unresolved() {
        // t^2 - 2 has no rational or root-of-unity roots
        let m = ExactMatrix::from_rows(vec![vec![FracScalar::from_poly(poly(&[-2, 0, 1]))]]);
        let report = parametric_rank(&m);
        assert_eq!(report.generic_rank, 1);
        assert!(report.drop_points.is_empty());
        assert_eq!(report.unresolved_factors.len(), 1);
        assert_eq!(report.unresolved_factors[0], poly(&[-2, 0, 1]));
    }

    #[test]
    fn random_noncandidate_values_keep_generic_rank() {
        // 2x3 matrix with entries linear in t
        let t = FracScalar::parameter();
        let c = |n: i64| FracScalar::constant(CycScalar::from_int(n));
        let m = ExactMatrix::from_rows(vec![
            vec![t.clone(), c(1), t.add(&c(2))],
            vec![c(3), t.clone(), t.sub(&c(1))],
        ]);
        let report = parametric_rank(&m);
        let mut rng = SplitMix64::new(42);
        let mut tested = 0;
        while tested < 20 {
            let v = CycScalar::from_ratio(rng.small_int(50), rng.small_nonzero(7));
            if report.candidates.contains(&v) {
                continue;
            }
            let eval = ExactMatrix::from_fn(2, 3, |i, j| m.at(i, j).eval(&v).unwrap());
            assert_eq!(eval.rank(), report.generic_rank);
            tested += 1;
        }
        // and every reported drop point really drops the rank
        for p in &report.drop_points {
            let eval = ExactMatrix::from_fn(2, 3, |i, j| m.at(i, j).eval(p).unwrap());
            assert!(eval.rank() < report.generic_rank);
        }
    }
}
