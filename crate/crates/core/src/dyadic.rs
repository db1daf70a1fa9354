//! Exact dyadic rationals.
//!
//! Every coordinate this library touches is of the form `m * 2^e` with an
//! arbitrary-precision integer `m`: cell corners at layer `j` live on the
//! grid of step `2^(j+1)`, and layers above the anchor refine that grid by
//! halving. `Dyadic` keeps such values exact, so containment and adjacency
//! tests never see rounding.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

/// `mantissa * 2^exponent`, normalized so the mantissa is odd (or zero with
/// exponent zero).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mantissa: BigInt,
    exponent: i64,
}

impl Dyadic {
    pub fn zero() -> Dyadic {
        Dyadic { mantissa: BigInt::zero(), exponent: 0 }
    }

    pub fn from_int(v: i64) -> Dyadic {
        Dyadic::from_bigint(BigInt::from(v))
    }

    pub fn from_bigint(v: BigInt) -> Dyadic {
        Dyadic { mantissa: v, exponent: 0 }.normalized()
    }

    /// `2^e`, for any integer `e`.
    pub fn pow2(e: i64) -> Dyadic {
        Dyadic { mantissa: BigInt::from(1), exponent: e }
    }

    fn normalized(mut self) -> Dyadic {
        if self.mantissa.is_zero() {
            self.exponent = 0;
            return self;
        }
        while (&self.mantissa % 2u8).is_zero() {
            self.mantissa /= 2;
            self.exponent += 1;
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.mantissa.is_zero() || self.exponent >= 0
    }

    pub fn to_bigint(&self) -> Option<BigInt> {
        if !self.is_integer() {
            return None;
        }
        Some(&self.mantissa << self.exponent.max(0) as u64)
    }

    /// The value as an integer multiple of `2^e`, when it is one.
    pub fn to_scaled_integer(&self, e: i64) -> Option<BigInt> {
        if self.mantissa.is_zero() {
            return Some(BigInt::zero());
        }
        let shift = self.exponent - e;
        if shift < 0 {
            return None;
        }
        Some(&self.mantissa << shift as u64)
    }

    pub fn mul_pow2(&self, e: i64) -> Dyadic {
        if self.mantissa.is_zero() {
            return Dyadic::zero();
        }
        Dyadic { mantissa: self.mantissa.clone(), exponent: self.exponent + e }
    }

    pub fn mul_int(&self, v: i64) -> Dyadic {
        Dyadic { mantissa: &self.mantissa * v, exponent: self.exponent }.normalized()
    }

    pub fn mul_bigint(&self, v: &BigInt) -> Dyadic {
        Dyadic { mantissa: &self.mantissa * v, exponent: self.exponent }.normalized()
    }

    /// Largest integer `<= self`.
    pub fn floor(&self) -> BigInt {
        if self.exponent >= 0 {
            return &self.mantissa << self.exponent as u64;
        }
        let shift = (-self.exponent) as u64;
        // BigInt >> rounds toward negative infinity, which is floor.
        &self.mantissa >> shift
    }

    pub fn ceil(&self) -> BigInt {
        -((-self.clone()).floor())
    }

    pub fn to_f64(&self) -> f64 {
        let m = self.mantissa.to_f64().unwrap_or(f64::NAN);
        m * 2f64.powi(self.exponent.clamp(i32::MIN as i64, i32::MAX as i64) as i32)
    }

    /// Exact ratio to another nonzero dyadic, as `f64`.
    pub fn ratio_f64(&self, other: &Dyadic) -> f64 {
        assert!(!other.is_zero());
        let m = BigRatioHelper::divide(&self.mantissa, &other.mantissa);
        m * 2f64.powi((self.exponent - other.exponent) as i32)
    }

    pub fn signum(&self) -> i8 {
        if self.mantissa.is_zero() {
            0
        } else if self.mantissa.is_negative() {
            -1
        } else {
            1
        }
    }
}

struct BigRatioHelper;

impl BigRatioHelper {
    fn divide(a: &BigInt, b: &BigInt) -> f64 {
        // Exact when the quotient is representable; close otherwise. Only
        // used at the rendering/report boundary.
        let fa = a.to_f64().unwrap_or(f64::NAN);
        let fb = b.to_f64().unwrap_or(f64::NAN);
        if fa.is_finite() && fb.is_finite() && fb != 0.0 {
            fa / fb
        } else {
            let q = a / b;
            q.to_f64().unwrap_or(f64::NAN)
        }
    }
}

fn aligned(a: &Dyadic, b: &Dyadic) -> (BigInt, BigInt, i64) {
    let e = a.exponent.min(b.exponent);
    let ma = if a.mantissa.is_zero() { BigInt::zero() } else { &a.mantissa << (a.exponent - e) as u64 };
    let mb = if b.mantissa.is_zero() { BigInt::zero() } else { &b.mantissa << (b.exponent - e) as u64 };
    (ma, mb, e)
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (ma, mb, e) = aligned(self, rhs);
        Dyadic { mantissa: ma + mb, exponent: e }.normalized()
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs.clone())
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { mantissa: -self.mantissa, exponent: self.exponent }
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() || rhs.is_zero() {
            return Dyadic::zero();
        }
        Dyadic { mantissa: &self.mantissa * &rhs.mantissa, exponent: self.exponent + rhs.exponent }
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Dyadic) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Dyadic) -> Ordering {
        let (ma, mb, _) = aligned(self, other);
        ma.cmp(&mb)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.to_bigint().expect("integer"))
        } else {
            let den = BigInt::from(1) << (-self.exponent) as u64;
            write!(f, "{}/{}", self.mantissa, den)
        }
    }
}

impl Serialize for Dyadic {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}
