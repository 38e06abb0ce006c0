//! Exact field elements over ℚ and GF(p).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The base field: the rationals or a prime field GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    // 0 encodes ℚ.
    p: u64,
}

impl FieldSpec {
    pub const fn rationals() -> Self {
        FieldSpec { p: 0 }
    }

    /// GF(p). Fails unless `p` is prime.
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        // Products of two residues must fit in u64.
        if p > u32::MAX as u64 {
            return Err(Error::Unsupported(format!("prime {p} exceeds 32 bits")));
        }
        Ok(FieldSpec { p })
    }

    pub fn is_rational(&self) -> bool {
        self.p == 0
    }

    /// The modulus of a prime field, `None` over ℚ.
    pub fn modulus(&self) -> Option<u64> {
        (self.p != 0).then_some(self.p)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero(*self)
    }

    pub fn one(&self) -> Scalar {
        Scalar::one(*self)
    }

    pub fn int(&self, n: i64) -> Scalar {
        Scalar::from_i64(*self, n)
    }

    /// All elements of a prime field in increasing residue order.
    pub fn elements(&self) -> Option<impl Iterator<Item = Scalar>> {
        let p = self.modulus()?;
        Some((0..p).map(move |v| Scalar(Repr::Mod { value: v, p })))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.modulus() {
            None => write!(f, "Q"),
            Some(p) => write!(f, "GF({p})"),
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Repr {
    Rational(BigRational),
    Mod { value: u64, p: u64 },
}

/// An exact element of a [`FieldSpec`].
///
/// Rationals are kept in lowest terms with a positive denominator and
/// residues in `[0, p)`. Mixing elements of different fields in one
/// arithmetic operation is a programming error and panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    /// Numeric order over ℚ, residue order over GF(p).
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl Scalar {
    pub fn zero(field: FieldSpec) -> Self {
        Self::from_i64(field, 0)
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::from_i64(field, 1)
    }

    pub fn from_i64(field: FieldSpec, n: i64) -> Self {
        match field.modulus() {
            None => Scalar(Repr::Rational(BigRational::from_integer(BigInt::from(n)))),
            Some(p) => Scalar(Repr::Mod {
                value: n.rem_euclid(p as i64) as u64,
                p,
            }),
        }
    }

    /// Reduces an arbitrary-precision integer into the field.
    pub fn from_bigint(field: FieldSpec, n: &BigInt) -> Self {
        match field.modulus() {
            None => Scalar(Repr::Rational(BigRational::from_integer(n.clone()))),
            Some(p) => {
                let m = BigInt::from(p);
                let r = ((n % &m) + &m) % &m;
                Scalar(Repr::Mod {
                    value: r.to_u64().expect("residue fits"),
                    p,
                })
            }
        }
    }

    /// `num / den`; fails when `den` vanishes in the field.
    pub fn from_ratio(field: FieldSpec, num: &BigInt, den: &BigInt) -> Result<Self> {
        let d = Scalar::from_bigint(field, den);
        let inv = d
            .inv()
            .ok_or_else(|| Error::NotInField(format!("{num}/{den}"), field))?;
        Ok(&Scalar::from_bigint(field, num) * &inv)
    }

    /// Reads an integer `n` or a fraction `n/d`.
    pub fn parse(field: FieldSpec, text: &str) -> Result<Self> {
        let int = |s: &str| {
            s.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::InvalidScalar(text.to_string()))
        };
        match text.split_once('/') {
            None => Ok(Scalar::from_bigint(field, &int(text)?)),
            Some((n, d)) => Scalar::from_ratio(field, &int(n)?, &int(d)?),
        }
    }

    pub fn field(&self) -> FieldSpec {
        match &self.0 {
            Repr::Rational(_) => FieldSpec::rationals(),
            Repr::Mod { p, .. } => FieldSpec { p: *p },
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_zero(),
            Repr::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rational(q) => q.is_one(),
            Repr::Mod { value, .. } => *value == 1,
        }
    }

    /// Residue of a prime-field element.
    pub fn residue(&self) -> Option<u64> {
        match &self.0 {
            Repr::Mod { value, .. } => Some(*value),
            Repr::Rational(_) => None,
        }
    }

    /// The rational value, `None` over GF(p).
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rational(q) => Some(q),
            Repr::Mod { .. } => None,
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Rational(q) => Scalar(Repr::Rational(q.recip())),
            Repr::Mod { value, p } => Scalar(Repr::Mod {
                value: pow_mod(*value, p - 2, *p),
                p: *p,
            }),
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Option<Scalar> {
        rhs.inv().map(|r| self * &r)
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
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
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn same_modulus(a: u64, b: u64) -> u64 {
    assert_eq!(a, b, "scalar arithmetic across different prime fields");
    a
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar(Repr::Rational(a + b)),
            (Repr::Mod { value: a, p }, Repr::Mod { value: b, p: q }) => {
                let p = same_modulus(*p, *q);
                Scalar(Repr::Mod {
                    value: (a + b) % p,
                    p,
                })
            }
            _ => panic!("scalar arithmetic across Q and GF(p)"),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar(Repr::Rational(a - b)),
            (Repr::Mod { value: a, p }, Repr::Mod { value: b, p: q }) => {
                let p = same_modulus(*p, *q);
                Scalar(Repr::Mod {
                    value: (a + p - b) % p,
                    p,
                })
            }
            _ => panic!("scalar arithmetic across Q and GF(p)"),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Rational(a), Repr::Rational(b)) => Scalar(Repr::Rational(a * b)),
            (Repr::Mod { value: a, p }, Repr::Mod { value: b, p: q }) => {
                let p = same_modulus(*p, *q);
                Scalar(Repr::Mod {
                    value: a * b % p,
                    p,
                })
            }
            _ => panic!("scalar arithmetic across Q and GF(p)"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Rational(a) => Scalar(Repr::Rational(-a)),
            Repr::Mod { value, p } => Scalar(Repr::Mod {
                value: (p - value) % p,
                p: *p,
            }),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    /// `a/b` in lowest terms (bare `a` for integers) or the bare residue.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Repr::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}
