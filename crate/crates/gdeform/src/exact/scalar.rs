//! Field abstraction shared by the linear algebra layer.

use std::fmt;

use super::cyclotomic::CycScalar;
use super::poly::{FracScalar, UniPoly};

/// Exact field operations, by reference. Implemented by `CycScalar` and
/// `FracScalar`; the linear algebra layer is generic over this trait.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// `None` exactly on zero.
    fn inv_ref(&self) -> Option<Self>;

    /// Embed a cyclotomic scalar into this field.
    fn from_cyc(c: &CycScalar) -> Self;
}

impl Field for CycScalar {
    fn zero() -> Self {
        CycScalar::zero()
    }
    fn one() -> Self {
        CycScalar::one()
    }
    fn is_zero(&self) -> bool {
        CycScalar::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn inv_ref(&self) -> Option<Self> {
        self.inv()
    }
    fn from_cyc(c: &CycScalar) -> Self {
        c.clone()
    }
}

impl Field for FracScalar {
    fn zero() -> Self {
        FracScalar::zero()
    }
    fn one() -> Self {
        FracScalar::one()
    }
    fn is_zero(&self) -> bool {
        FracScalar::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn inv_ref(&self) -> Option<Self> {
        self.inv()
    }
    fn from_cyc(c: &CycScalar) -> Self {
        FracScalar::from_poly(UniPoly::constant(c.clone()))
    }
}
