use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{FieldSpec, Prime};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// An exact field element.
///
/// Rationals are kept reduced with a positive denominator (`BigRational`
/// normalizes on every operation); residues are kept in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Q(BigRational),
    Fp { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn zero(field: FieldSpec) -> Self {
        Scalar::from_i64(field, 0)
    }

    pub fn one(field: FieldSpec) -> Self {
        Scalar::from_i64(field, 1)
    }

    pub fn from_i64(field: FieldSpec, n: i64) -> Self {
        match field {
            FieldSpec::Rationals => Scalar(Repr::Q(BigRational::from_integer(BigInt::from(n)))),
            FieldSpec::PrimeField(p) => {
                let p = p.get();
                Scalar(Repr::Fp {
                    value: n.rem_euclid(p as i64) as u32,
                    modulus: p,
                })
            }
        }
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar(Repr::Q(r))
    }

    /// `num / den` in the given field; in 𝔽ₚ the denominator is inverted mod p.
    pub fn ratio(field: FieldSpec, num: i64, den: i64) -> Result<Self> {
        Scalar::from_i64(field, num).checked_div(&Scalar::from_i64(field, den))
    }

    pub fn field(&self) -> FieldSpec {
        match &self.0 {
            Repr::Q(_) => FieldSpec::Rationals,
            Repr::Fp { modulus, .. } => FieldSpec::PrimeField(Prime::new_unchecked(*modulus)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Q(r) => r.is_zero(),
            Repr::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Q(r) => r.is_one(),
            Repr::Fp { value, .. } => *value == 1,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Q(r) => Some(r),
            Repr::Fp { .. } => None,
        }
    }

    pub fn as_residue(&self) -> Option<u32> {
        match &self.0 {
            Repr::Q(_) => None,
            Repr::Fp { value, .. } => Some(*value),
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<()> {
        match (&self.0, &other.0) {
            (Repr::Q(_), Repr::Q(_)) => Ok(()),
            (Repr::Fp { modulus: p, .. }, Repr::Fp { modulus: q, .. }) if p == q => Ok(()),
            _ => Err(Error::FieldMismatch {
                left: self.field(),
                right: other.field(),
            }),
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(match (&self.0, &other.0) {
            (Repr::Q(a), Repr::Q(b)) => Scalar(Repr::Q(a + b)),
            (
                Repr::Fp {
                    value: a,
                    modulus: p,
                },
                Repr::Fp { value: b, .. },
            ) => Scalar(Repr::Fp {
                value: ((*a as u64 + *b as u64) % *p as u64) as u32,
                modulus: *p,
            }),
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(match (&self.0, &other.0) {
            (Repr::Q(a), Repr::Q(b)) => Scalar(Repr::Q(a * b)),
            (
                Repr::Fp {
                    value: a,
                    modulus: p,
                },
                Repr::Fp { value: b, .. },
            ) => Scalar(Repr::Fp {
                value: ((*a as u64 * *b as u64) % *p as u64) as u32,
                modulus: *p,
            }),
            _ => unreachable!(),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        let inv = other.inverse()?;
        self.checked_mul(&inv)
    }

    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.0 {
            Repr::Q(r) => Scalar(Repr::Q(r.recip())),
            Repr::Fp { value, modulus } => {
                let p = *modulus as u64;
                Scalar(Repr::Fp {
                    value: pow_mod(*value as u64, p - 2, p) as u32,
                    modulus: *modulus,
                })
            }
        })
    }

    pub fn apply(&self, op: ArithOp, other: &Scalar) -> Result<Scalar> {
        match op {
            ArithOp::Add => self.checked_add(other),
            ArithOp::Sub => self.checked_sub(other),
            ArithOp::Mul => self.checked_mul(other),
            ArithOp::Div => self.checked_div(other),
        }
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one(self.field());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Parses `"n"`, `"-n"` or `"p/q"`. In 𝔽ₚ a fraction means `p · q⁻¹`.
    pub fn parse(field: FieldSpec, text: &str) -> Result<Scalar> {
        let bad = || Error::InvalidScalar {
            text: text.to_string(),
            field,
        };
        let t = text.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (t, None),
        };
        let num = BigInt::from_str(num).map_err(|_| bad())?;
        let den = match den {
            Some(d) => BigInt::from_str(d).map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(bad());
        }
        match field {
            FieldSpec::Rationals => Ok(Scalar(Repr::Q(BigRational::new(num, den)))),
            FieldSpec::PrimeField(p) => {
                let m = BigInt::from(p.get());
                let reduce = |x: &BigInt| -> u32 {
                    let r = ((x % &m) + &m) % &m;
                    r.to_u32().expect("residue below modulus")
                };
                let n = Scalar(Repr::Fp {
                    value: reduce(&num),
                    modulus: p.get(),
                });
                let d = Scalar(Repr::Fp {
                    value: reduce(&den),
                    modulus: p.get(),
                });
                n.checked_div(&d).map_err(|_| bad())
            }
        }
    }
}

fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Q(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Repr::Q(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Repr::Fp { value, .. } => write!(f, "{value}"),
        }
    }
}

// Operator impls panic on field mismatch; the checked_* methods are the
// fallible surface. Inside a LinMap all entries share a field.
impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.checked_add(rhs)
            .expect("field mismatch in scalar addition")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.checked_sub(rhs)
            .expect("field mismatch in scalar subtraction")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.checked_mul(rhs)
            .expect("field mismatch in scalar multiplication")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Q(r) => Scalar(Repr::Q(-r)),
            Repr::Fp { value, modulus } => Scalar(Repr::Fp {
                value: (*modulus - *value) % *modulus,
                modulus: *modulus,
            }),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Scalar {
    pub fn is_negative(&self) -> bool {
        matches!(&self.0, Repr::Q(r) if r.is_negative())
    }
}
