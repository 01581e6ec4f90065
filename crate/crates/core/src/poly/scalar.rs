use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default prime for fast modular runs.
pub const DEFAULT_PRIME: u64 = 32003;

/// Coefficient field of the polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// A prime field `Z/p`. Moduli must be prime and below 2^31 so that
    /// products of residues fit in a `u64`.
    pub fn prime(p: u64) -> Result<Self> {
        if !(2..(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(Error::Validation(format!("{p} is not a prime below 2^31")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Modular {
                value: v.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(self, v: &BigInt) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let r = ((v % BigInt::from(p)) + BigInt::from(p)) % BigInt::from(p);
                Scalar::Modular {
                    value: r.to_u64().expect("residue fits in u64"),
                    modulus: p,
                }
            }
        }
    }

    /// `num/den` in this field; fails when `den` vanishes in the field.
    pub fn from_ratio(self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        let d = self.from_bigint(den);
        if d.is_zero() {
            return Err(Error::Parse(format!("denominator {den} vanishes in {self:?}")));
        }
        Ok(&self.from_bigint(num) * &d.inv())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "rational"),
            Field::Prime(p) => write!(f, "p:{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 4 {
        return p >= 2;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of the coefficient field.
///
/// Arithmetic through the operator impls panics when the operands come from
/// different fields; use the `checked_*` methods at API boundaries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    /// True when the printed form needs a leading minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Modular { .. } => false,
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(r.abs()),
            m => m.clone(),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self + other)
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(self * other)
    }

    pub(crate) fn same_field(&self, other: &Scalar) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::IncompatibleField(self.field(), other.field()));
        }
        Ok(())
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {:?} vs {:?}", a.field(), b.field())
}

impl std::ops::Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q }) if p == q => {
                Scalar::Modular {
                    value: (a + b) % p,
                    modulus: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl std::ops::Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q }) if p == q => {
                Scalar::Modular {
                    value: (a + p - b) % p,
                    modulus: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl std::ops::Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q }) if p == q => {
                Scalar::Modular {
                    value: a * b % p,
                    modulus: *p,
                }
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl std::ops::Div for &Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_inverse_round_trips() {
        let f = Field::Prime(DEFAULT_PRIME);
        for v in [1i64, 2, 17, 32002, -5] {
            let s = f.from_i64(v);
            assert!((&s * &s.inv()).is_one());
        }
    }

    #[test]
    fn rational_halves_sum_to_one() {
        let f = Field::Rational;
        let half = f.from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert!((&half + &half).is_one());
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let a = Field::Rational.one();
        let b = Field::Prime(7).one();
        assert_eq!(
            a.checked_add(&b),
            Err(Error::IncompatibleField(Field::Rational, Field::Prime(7)))
        );
    }

    #[test]
    fn prime_validation() {
        assert!(Field::prime(32003).is_ok());
        assert!(Field::prime(32001).is_err());
        assert!(Field::prime(1).is_err());
    }

    #[test]
    fn zero_denominator_mod_p() {
        let f = Field::Prime(7);
        assert!(f.from_ratio(&BigInt::from(1), &BigInt::from(14)).is_err());
    }
}
