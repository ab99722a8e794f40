//! Dense univariate polynomials over `CycScalar` and the rational-function
//! field built from them.
//!
//! `UniPoly` stores coefficients in ascending degree order with the trailing
//! coefficient nonzero. `FracScalar` is a reduced fraction of two `UniPoly`
//! with monic denominator; it is the scalar type used for parametric rank
//! computations over families such as `[A:B] ∈ ℙ¹`.

use std::fmt;

use super::cyclotomic::CycScalar;

/// Dense univariate polynomial over `ℚ(ζ_m)` in a formal parameter `t`.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<CycScalar>, // ascending; empty = zero, last nonzero otherwise
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly {
            coeffs: vec![CycScalar::one()],
        }
    }

    pub fn constant(c: CycScalar) -> Self {
        let mut p = UniPoly { coeffs: vec![c] };
        p.normalize();
        p
    }

    /// The parameter `t`.
    pub fn parameter() -> Self {
        UniPoly {
            coeffs: vec![CycScalar::zero(), CycScalar::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<CycScalar>) -> Self {
        let mut p = UniPoly { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[CycScalar] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&CycScalar> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        UniPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![CycScalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        UniPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &CycScalar) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly::from_coeffs(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Division with remainder by a nonzero divisor.
    pub fn div_rem(&self, div: &Self) -> (Self, Self) {
        assert!(!div.is_zero(), "division by the zero polynomial");
        let db = div.coeffs.len() - 1;
        let lead_inv = div.leading().unwrap().inv().unwrap();
        let mut rem = self.clone();
        let mut quot = vec![CycScalar::zero(); rem.coeffs.len().saturating_sub(db)];
        while !rem.is_zero() && rem.coeffs.len() - 1 >= db {
            let da = rem.coeffs.len() - 1;
            let c = rem.coeffs[da].mul(&lead_inv);
            let shift = da - db;
            for (j, bj) in div.coeffs.iter().enumerate() {
                let t = c.mul(bj);
                rem.coeffs[shift + j] = rem.coeffs[shift + j].sub(&t);
            }
            quot[shift] = c;
            rem.normalize();
        }
        (UniPoly::from_coeffs(quot), rem)
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn div_exact(&self, div: &Self) -> Self {
        let (q, r) = self.div_rem(div);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.into_monic()
    }

    /// Divide through by the leading coefficient.
    pub fn into_monic(self) -> Self {
        match self.leading() {
            None => self,
            Some(l) if l.is_one() => self,
            Some(l) => {
                let inv = l.inv().unwrap();
                self.scale(&inv)
            }
        }
    }

    pub fn eval(&self, x: &CycScalar) -> CycScalar {
        let mut acc = CycScalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// `true` iff `(t - root)` divides the polynomial.
    pub fn has_root(&self, root: &CycScalar) -> bool {
        self.eval(root).is_zero()
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = format!("{}", c);
            let needs_parens = cs.contains('+') || cs.contains(' ');
            let coeff = if needs_parens { format!("({})", cs) } else { cs };
            let term = match i {
                0 => coeff,
                1 if coeff == "1" => "t".to_string(),
                1 => format!("{}*t", coeff),
                _ if coeff == "1" => format!("t^{}", i),
                _ => format!("{}*t^{}", coeff, i),
            };
            parts.push(term);
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Element of the rational-function field `ℚ(ζ_m)(t)`.
///
/// Stored with monic denominator and `gcd(num, den) = 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct FracScalar {
    num: UniPoly,
    den: UniPoly, // monic, nonzero
}

impl FracScalar {
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut f = FracScalar { num, den };
        f.reduce();
        f
    }

    pub fn from_poly(p: UniPoly) -> Self {
        FracScalar {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn constant(c: CycScalar) -> Self {
        FracScalar::from_poly(UniPoly::constant(c))
    }

    pub fn parameter() -> Self {
        FracScalar::from_poly(UniPoly::parameter())
    }

    pub fn zero() -> Self {
        FracScalar::from_poly(UniPoly::zero())
    }

    pub fn one() -> Self {
        FracScalar::from_poly(UniPoly::one())
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = UniPoly::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.degree().unwrap_or(0) > 0 {
            self.num = self.num.div_exact(&g);
            self.den = self.den.div_exact(&g);
        }
        let lead = self.den.leading().unwrap().clone();
        if !lead.is_one() {
            let inv = lead.inv().unwrap();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        FracScalar::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        FracScalar::new(
            self.num.mul(&other.den).sub(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> Self {
        FracScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        FracScalar::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(FracScalar::new(self.den.clone(), self.num.clone()))
        }
    }

    /// Evaluate at `t = x`; `None` if the denominator vanishes there.
    pub fn eval(&self, x: &CycScalar) -> Option<CycScalar> {
        let d = self.den.eval(x);
        let inv = d.inv()?;
        Some(self.num.eval(x).mul(&inv))
    }
}

impl fmt::Display for FracScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == UniPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for FracScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
