//! Exact elements of the cyclotomic fields `ℚ(ζ_m)`.
//!
//! A `CycScalar` is a rational polynomial in a primitive `m`-th root of unity
//! `ζ_m`, reduced modulo the `m`-th cyclotomic polynomial `Φ_m` and stored on
//! the power basis `1, ζ_m, …, ζ_m^{φ(m)-1}`. Rationals embed as conductor-1
//! scalars; binary operations on mixed conductors lift both operands to the
//! least common conductor before computing.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub type Rat = BigRational;

/// Euler totient, by trial-division factorization.
pub fn euler_phi(m: u64) -> u64 {
    assert!(m > 0);
    let mut n = m;
    let mut phi = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            phi = phi / p * (p - 1);
        }
        p += 1;
    }
    if n > 1 {
        phi = phi / n * (n - 1);
    }
    phi
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    a / gcd_u64(a, b) * b
}

// ---- rational-coefficient polynomial helpers (dense, ascending) ----

fn rp_trim(v: &mut Vec<Rat>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

fn rp_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            out[i + j] += ai * bj;
        }
    }
    rp_trim(&mut out);
    out
}

/// Division with remainder; `b` must be nonzero.
fn rp_div_rem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut rem: Vec<Rat> = a.to_vec();
    rp_trim(&mut rem);
    let db = b.len() - 1;
    let lead = &b[db];
    let mut quot = vec![Rat::zero(); rem.len().saturating_sub(db)];
    while rem.len() > db {
        let da = rem.len() - 1;
        let c = &rem[da] / lead;
        let shift = da - db;
        for (j, bj) in b.iter().enumerate() {
            let t = &c * bj;
            rem[shift + j] -= t;
        }
        quot[shift] = c;
        rp_trim(&mut rem);
    }
    rp_trim(&mut quot);
    (quot, rem)
}

/// Extended gcd over ℚ[x]: returns (g, u) with u·a ≡ g (mod b) and g monic.
fn rp_half_ext_gcd(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut r0: Vec<Rat> = a.to_vec();
    let mut r1: Vec<Rat> = b.to_vec();
    rp_trim(&mut r0);
    rp_trim(&mut r1);
    let mut u0 = vec![Rat::one()];
    let mut u1: Vec<Rat> = Vec::new();
    while !r1.is_empty() {
        let (q, r) = rp_div_rem(&r0, &r1);
        let qu = rp_mul(&q, &u1);
        let mut unew = u0.clone();
        if unew.len() < qu.len() {
            unew.resize(qu.len(), Rat::zero());
        }
        for (i, c) in qu.iter().enumerate() {
            unew[i] -= c;
        }
        rp_trim(&mut unew);
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = unew;
    }
    // normalize to monic gcd
    if let Some(lead) = r0.last().cloned() {
        if !lead.is_one() {
            for c in r0.iter_mut() {
                *c /= &lead;
            }
            for c in u0.iter_mut() {
                *c /= &lead;
            }
        }
    }
    (r0, u0)
}

thread_local! {
    static PHI_CACHE: RefCell<HashMap<u64, Vec<Rat>>> = RefCell::new(HashMap::new());
    static LIFT_CACHE: RefCell<HashMap<(u64, u64), Vec<Vec<Rat>>>> = RefCell::new(HashMap::new());
}

/// Coefficients (ascending) of the m-th cyclotomic polynomial `Φ_m`.
pub fn cyclotomic_polynomial(m: u64) -> Vec<Rat> {
    if let Some(hit) = PHI_CACHE.with(|c| c.borrow().get(&m).cloned()) {
        return hit;
    }
    let poly = if m == 1 {
        vec![-Rat::one(), Rat::one()]
    } else {
        // (x^m - 1) / prod_{d|m, d<m} Phi_d
        let mut num = vec![Rat::zero(); m as usize + 1];
        num[0] = -Rat::one();
        num[m as usize] = Rat::one();
        let mut den = vec![Rat::one()];
        for d in 1..m {
            if m % d == 0 {
                den = rp_mul(&den, &cyclotomic_polynomial(d));
            }
        }
        let (q, r) = rp_div_rem(&num, &den);
        debug_assert!(r.is_empty());
        q
    };
    PHI_CACHE.with(|c| c.borrow_mut().insert(m, poly.clone()));
    poly
}

/// Power-basis images of `ζ_m^j` inside `ℚ(ζ_M)` for `j < φ(m)`, where `m | M`.
fn lift_table(m: u64, big: u64) -> Vec<Vec<Rat>> {
    if let Some(hit) = LIFT_CACHE.with(|c| c.borrow().get(&(m, big)).cloned()) {
        return hit;
    }
    let phi_m = euler_phi(m) as usize;
    let phi_big = euler_phi(big) as usize;
    let modulus = cyclotomic_polynomial(big);
    let step = (big / m) as usize;
    let mut table = Vec::with_capacity(phi_m);
    // cur = x^(j*step) mod Phi_big, built incrementally
    let mut cur = vec![Rat::one()];
    for j in 0..phi_m {
        if j > 0 {
            for _ in 0..step {
                cur.insert(0, Rat::zero());
                if cur.len() > phi_big {
                    let (_, r) = rp_div_rem(&cur, &modulus);
                    cur = r;
                }
            }
        }
        let mut padded = cur.clone();
        padded.resize(phi_big, Rat::zero());
        table.push(padded);
    }
    LIFT_CACHE.with(|c| c.borrow_mut().insert((m, big), table.clone()));
    table
}

/// An exact element of `ℚ(ζ_m)` on the power basis modulo `Φ_m`.
#[derive(Clone)]
pub struct CycScalar {
    conductor: u64,
    coeffs: Vec<Rat>, // length phi(conductor)
}

impl CycScalar {
    fn make(conductor: u64, mut coeffs: Vec<Rat>) -> Self {
        let phi = euler_phi(conductor) as usize;
        coeffs.resize(phi, Rat::zero());
        let mut s = CycScalar { conductor, coeffs };
        s.shrink();
        s
    }

    /// Drop to conductor 1 when the value is visibly rational.
    fn shrink(&mut self) {
        if self.conductor > 1 && self.coeffs[1..].iter().all(|c| c.is_zero()) {
            let c0 = self.coeffs[0].clone();
            self.conductor = 1;
            self.coeffs = vec![c0];
        }
    }

    pub fn zero() -> Self {
        CycScalar {
            conductor: 1,
            coeffs: vec![Rat::zero()],
        }
    }

    pub fn one() -> Self {
        CycScalar {
            conductor: 1,
            coeffs: vec![Rat::one()],
        }
    }

    pub fn from_int(n: i64) -> Self {
        CycScalar {
            conductor: 1,
            coeffs: vec![Rat::from_integer(BigInt::from(n))],
        }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0);
        CycScalar {
            conductor: 1,
            coeffs: vec![Rat::new(BigInt::from(num), BigInt::from(den))],
        }
    }

    pub fn from_rational(r: Rat) -> Self {
        CycScalar {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    /// The primitive root `ζ_m`.
    pub fn zeta(m: u64) -> Self {
        assert!(m > 0);
        if m == 1 {
            return CycScalar::one();
        }
        let phi = euler_phi(m) as usize;
        let mut coeffs = vec![Rat::zero(); phi];
        if phi == 1 {
            // m = 2: zeta = -1
            coeffs[0] = -Rat::one();
        } else {
            coeffs[1] = Rat::one();
        }
        CycScalar::make(m, coeffs)
    }

    /// `ζ_m^k` for any integer exponent.
    pub fn root_of_unity(m: u64, k: i64) -> Self {
        let kk = k.rem_euclid(m as i64) as u64;
        let mut acc = CycScalar::one();
        let z = CycScalar::zeta(m);
        for _ in 0..kk {
            acc = &acc * &z;
        }
        acc
    }

    /// Construct from power-basis coefficients at a given conductor.
    pub fn from_coeffs(conductor: u64, coeffs: Vec<Rat>) -> crate::Result<Self> {
        let phi = euler_phi(conductor) as usize;
        if coeffs.len() != phi {
            return Err(Error::Schema {
                context: "cyclotomic coefficient vector".into(),
                message: format!("expected {} coefficients for conductor {}, got {}", phi, conductor, coeffs.len()),
            });
        }
        Ok(CycScalar::make(conductor, coeffs))
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Power-basis coefficients after lifting to the given conductor
    /// (length `φ(conductor)`).
    pub fn coeffs_at(&self, conductor: u64) -> Vec<Rat> {
        assert!(
            conductor % self.conductor == 0,
            "cannot lift conductor {} into {}",
            self.conductor,
            conductor
        );
        if conductor == self.conductor {
            return self.coeffs.clone();
        }
        let table = lift_table(self.conductor, conductor);
        let phi = euler_phi(conductor) as usize;
        let mut out = vec![Rat::zero(); phi];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, t) in table[j].iter().enumerate() {
                if !t.is_zero() {
                    out[k] += c * t;
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_one()
    }

    /// `Some(r)` iff the value lies in ℚ.
    pub fn as_rational(&self) -> Option<Rat> {
        if self.conductor == 1 {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn lift(&self, conductor: u64) -> Self {
        CycScalar::make(conductor, self.coeffs_at(conductor))
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.conductor == other.conductor {
            let coeffs = self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect();
            return CycScalar::make(self.conductor, coeffs);
        }
        let m = lcm_u64(self.conductor, other.conductor);
        let a = self.coeffs_at(m);
        let b = other.coeffs_at(m);
        let coeffs = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        CycScalar::make(m, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CycScalar {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        // conductor-1 fast paths
        if self.conductor == 1 {
            if self.coeffs[0].is_zero() {
                return CycScalar::zero();
            }
            let coeffs = other.coeffs.iter().map(|c| c * &self.coeffs[0]).collect();
            return CycScalar::make(other.conductor, coeffs);
        }
        if other.conductor == 1 {
            return other.mul(self);
        }
        let m = lcm_u64(self.conductor, other.conductor);
        let a = self.coeffs_at(m);
        let b = other.coeffs_at(m);
        let prod = rp_mul(&a, &b);
        let modulus = cyclotomic_polynomial(m);
        let reduced = if prod.len() >= modulus.len() {
            rp_div_rem(&prod, &modulus).1
        } else {
            prod
        };
        CycScalar::make(m, reduced)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.conductor == 1 {
            return Some(CycScalar {
                conductor: 1,
                coeffs: vec![self.coeffs[0].recip()],
            });
        }
        let modulus = cyclotomic_polynomial(self.conductor);
        let (g, u) = rp_half_ext_gcd(&self.coeffs, &modulus);
        // Phi_m is irreducible over Q, so the gcd is 1.
        debug_assert_eq!(g.len(), 1);
        let ginv = g[0].recip();
        let coeffs = u.iter().map(|c| c * &ginv).collect();
        Some(CycScalar::make(self.conductor, coeffs))
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().expect("zero has no negative power").pow(-e);
        }
        let mut base = self.clone();
        let mut exp = e as u64;
        let mut acc = CycScalar::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    /// Scale by a rational.
    pub fn scale(&self, r: &Rat) -> Self {
        CycScalar::make(self.conductor, self.coeffs.iter().map(|c| c * r).collect())
    }
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let m = lcm_u64(self.conductor, other.conductor);
        self.coeffs_at(m) == other.coeffs_at(m)
    }
}

impl Eq for CycScalar {}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        let mut s = String::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = c.is_negative();
            if first {
                if sign {
                    s.push('-');
                }
                first = false;
            } else if sign {
                s.push_str(" - ");
            } else {
                s.push_str(" + ");
            }
            let coeff_str = fmt_rat(&mag);
            if j == 0 {
                s.push_str(&coeff_str);
            } else {
                if !mag.is_one() {
                    s.push_str(&coeff_str);
                    s.push('*');
                }
                if j == 1 {
                    s.push('w');
                } else {
                    s.push_str(&format!("w^{}", j));
                }
            }
        }
        write!(f, "{}", s)
    }
}

impl std::ops::Add for &CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &CycScalar) -> CycScalar {
        CycScalar::add(self, rhs)
    }
}

impl std::ops::Sub for &CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &CycScalar) -> CycScalar {
        CycScalar::sub(self, rhs)
    }
}

impl std::ops::Mul for &CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &CycScalar) -> CycScalar {
        CycScalar::mul(self, rhs)
    }
}

impl std::ops::Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(2), 1);
        assert_eq!(euler_phi(3), 2);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(27), 18);
    }

    #[test]
    fn cyclotomic_polys() {
        // Phi_3 = x^2 + x + 1
        let p3 = cyclotomic_polynomial(3);
        assert_eq!(p3.len(), 3);
        assert_eq!(p3[0], Rat::one());
        assert_eq!(p3[1], Rat::one());
        assert_eq!(p3[2], Rat::one());
        // Phi_12 = x^4 - x^2 + 1
        let p12 = cyclotomic_polynomial(12);
        assert_eq!(p12.len(), 5);
        assert_eq!(p12[2], -Rat::one());
    }

    #[test]
    fn zeta_has_order_m_and_kills_phi() {
        for m in [1u64, 2, 3, 4, 5, 6, 8, 12] {
            let z = CycScalar::zeta(m);
            assert_eq!(z.pow(m as i64), CycScalar::one(), "zeta_{}^{} != 1", m, m);
            for k in 1..m {
                assert_ne!(z.pow(k as i64), CycScalar::one(), "zeta_{} has order < {}", m, m);
            }
            // evaluate Phi_m at zeta_m by Horner
            let phi = cyclotomic_polynomial(m);
            let mut acc = CycScalar::zero();
            for c in phi.iter().rev() {
                acc = acc.mul(&z).add(&CycScalar::from_rational(c.clone()));
            }
            assert!(acc.is_zero(), "Phi_{}(zeta_{}) != 0", m, m);
        }
    }

    #[test]
    fn mixed_conductor_equality() {
        // zeta_3 expressed at conductor 12 equals zeta_3
        let z3 = CycScalar::zeta(3);
        let z12 = CycScalar::zeta(12);
        assert_eq!(z12.pow(4), z3);
        // zeta_4^2 = -1 collapses to conductor 1
        let z4 = CycScalar::zeta(4);
        assert_eq!(z4.pow(2), CycScalar::from_int(-1));
        assert_eq!(z4.pow(2).conductor(), 1);
    }

    #[test]
    fn sum_of_cube_roots_is_minus_one() {
        let w = CycScalar::zeta(3);
        let s = CycScalar::one().add(&w).add(&w.pow(2));
        assert!(s.is_zero());
    }

    fn arb_scalar(m: u64) -> impl Strategy<Value = CycScalar> {
        let phi = euler_phi(m) as usize;
        proptest::collection::vec((-4i64..5, 1i64..4), phi).prop_map(move |cs| {
            let coeffs = cs
                .into_iter()
                .map(|(n, d)| Rat::new(BigInt::from(n), BigInt::from(d)))
                .collect();
            CycScalar::make(m, coeffs)
        })
    }

    proptest! {
        #[test]
        fn field_axioms_conductor_12(a in arb_scalar(12), b in arb_scalar(12), c in arb_scalar(3)) {
            // associativity and distributivity on a random mixed triple
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            // inverses
            if !a.is_zero() {
                prop_assert_eq!(a.mul(&a.inv().unwrap()), CycScalar::one());
            }
        }
    }
}
