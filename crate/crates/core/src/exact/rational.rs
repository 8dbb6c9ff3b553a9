//! Exact rational scalars.
//!
//! Values that fit in a pair of machine words are kept inline and all
//! arithmetic on them goes through 128-bit intermediates. Anything larger
//! falls back to an arbitrary-precision [`BigRational`]. The representation
//! is canonical: a value is stored as `Small` whenever it fits, so
//! structural equality and hashing agree with numeric equality.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact rational number, always stored in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    // den > 0, gcd(|num|, den) = 1, num != i64::MIN
    Small(i64, i64),
    // never representable as Small
    Big(Box<BigRational>),
}

/// Error returned when a rational literal is malformed or not canonical.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {literal:?}: {reason}")]
pub struct ParseRationalError {
    pub literal: String,
    pub reason: &'static str,
}

impl Rational {
    pub fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }

    pub fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_i128(n as i128, 1)
    }

    /// Builds `num / den`, reducing to lowest terms.
    ///
    /// Panics if `den` is zero.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    pub fn from_big(value: BigRational) -> Self {
        match (value.numer().to_i64(), value.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(Box::new(value))),
        }
    }

    pub fn from_bigints(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self::from_big(BigRational::new(num, den))
    }

    fn from_i128(mut num: i128, mut den: i128) -> Self {
        debug_assert!(den != 0);
        if den < 0 {
            num = -num;
            den = -den;
        }
        if num == 0 {
            return Rational::zero();
        }
        let g = num.gcd(&den);
        if g != 1 {
            num /= g;
            den /= g;
        }
        Self::from_reduced_i128(num, den)
    }

    fn from_reduced_i128(num: i128, den: i128) -> Self {
        if num > i64::MIN as i128 && num <= i64::MAX as i128 && den <= i64::MAX as i128 {
            Rational(Repr::Small(num as i64, den as i64))
        } else {
            Rational(Repr::Big(Box::new(BigRational::new_raw(
                BigInt::from(num),
                BigInt::from(den),
            ))))
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small(n, _) => n.signum() as i32,
            Repr::Big(b) => {
                if b.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        match &self.0 {
            Repr::Small(0, _) => panic!("reciprocal of zero"),
            Repr::Small(n, d) => {
                if *n < 0 {
                    Rational(Repr::Small(-*d, -*n))
                } else {
                    Rational(Repr::Small(*d, *n))
                }
            }
            Repr::Big(b) => Self::from_big(b.recip()),
        }
    }

    /// Parses a literal leniently: accepts any `p/q` with `q != 0`,
    /// reducing it. Use [`FromStr`] for the strict canonical grammar.
    pub fn parse_lenient(s: &str) -> Result<Self, ParseRationalError> {
        let err = |reason| ParseRationalError {
            literal: s.to_string(),
            reason,
        };
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let num: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
        let den: BigInt = match den {
            Some(d) => d.parse().map_err(|_| err("bad denominator"))?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(err("zero denominator"));
        }
        Ok(Self::from_bigints(num, den))
    }
}

fn is_canonical_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) && (s == "0" || !s.starts_with('0'))
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Strict canonical grammar: `p` or `p/q` with `q > 1`, `gcd(p, q) = 1`,
    /// an optional leading `-` on a nonzero numerator and no leading zeros.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason| ParseRationalError {
            literal: s.to_string(),
            reason,
        };
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (num, den) = match body.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (body, None),
        };
        if !is_canonical_digits(num) {
            return Err(err("numerator must be a canonical decimal integer"));
        }
        if neg && num == "0" {
            return Err(err("negative zero"));
        }
        let mut n: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
        if neg {
            n = -n;
        }
        let d: BigInt = match den {
            None => BigInt::one(),
            Some(d) => {
                if !is_canonical_digits(d) {
                    return Err(err("denominator must be a canonical decimal integer"));
                }
                let d: BigInt = d.parse().map_err(|_| err("bad denominator"))?;
                if d.is_zero() {
                    return Err(err("zero denominator"));
                }
                if d.is_one() {
                    return Err(err("denominator 1 must be omitted"));
                }
                if !n.gcd(&d).is_one() {
                    return Err(err("not in lowest terms"));
                }
                d
            }
        };
        Ok(Self::from_bigints(n, d))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) => {
                if b.denom().is_one() {
                    write!(f, "{}", b.numer())
                } else {
                    write!(f, "{}/{}", b.numer(), b.denom())
                }
            }
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_integer(n as i64)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_bigints(n, BigInt::one())
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational::from_big(r)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                ((*a as i128) * (*d as i128)).cmp(&((*c as i128) * (*b as i128)))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn add_impl(a: &Rational, b: &Rational, negate_b: bool) -> Rational {
    match (&a.0, &b.0) {
        (Repr::Small(n1, d1), Repr::Small(n2, d2)) => {
            let n2 = if negate_b { -(*n2 as i128) } else { *n2 as i128 };
            if *d1 == 1 && *d2 == 1 {
                return Rational::from_reduced_i128(*n1 as i128 + n2, 1);
            }
            if d1 == d2 {
                return Rational::from_i128(*n1 as i128 + n2, *d1 as i128);
            }
            let (d1, d2) = (*d1 as i128, *d2 as i128);
            Rational::from_i128(*n1 as i128 * d2 + n2 * d1, d1 * d2)
        }
        _ => {
            let (x, y) = (a.to_big(), b.to_big());
            Rational::from_big(if negate_b { x - y } else { x + y })
        }
    }
}

fn mul_impl(a: &Rational, b: &Rational) -> Rational {
    match (&a.0, &b.0) {
        (Repr::Small(0, _), _) | (_, Repr::Small(0, _)) => Rational::zero(),
        (Repr::Small(n1, d1), Repr::Small(n2, d2)) => {
            let g1 = n1.gcd(d2);
            let g2 = n2.gcd(d1);
            let n = (*n1 / g1) as i128 * (*n2 / g2) as i128;
            let d = (*d1 / g2) as i128 * (*d2 / g1) as i128;
            Rational::from_reduced_i128(n, d)
        }
        _ => Rational::from_big(a.to_big() * b.to_big()),
    }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn add(self, rhs: &'a Rational) -> Rational {
        add_impl(self, rhs, false)
    }
}

impl<'a> Sub<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn sub(self, rhs: &'a Rational) -> Rational {
        add_impl(self, rhs, true)
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn mul(self, rhs: &'a Rational) -> Rational {
        mul_impl(self, rhs)
    }
}

impl<'a> Div<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn div(self, rhs: &'a Rational) -> Rational {
        mul_impl(self, &rhs.recip())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $atr:ident, $am:ident) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: &'a Rational) -> Rational {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Rational> for &'a Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                self.$m(&rhs)
            }
        }
        impl<'a> $atr<&'a Rational> for Rational {
            fn $am(&mut self, rhs: &'a Rational) {
                *self = (&*self).$m(rhs);
            }
        }
        impl $atr<Rational> for Rational {
            fn $am(&mut self, rhs: Rational) {
                *self = (&*self).$m(&rhs);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);
forward_binop!(Div, div, DivAssign, div_assign);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match &self.0 {
            Repr::Small(n, d) => Rational(Repr::Small(-*n, *d)),
            Repr::Big(b) => Rational::from_big(-(**b).clone()),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational::one()
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn canonical_display() {
        assert_eq!(q(2, 4).to_string(), "1/2");
        assert_eq!(q(3, -6).to_string(), "-1/2");
        assert_eq!(q(0, -5).to_string(), "0");
        assert_eq!(q(6, 3).to_string(), "2");
    }

    #[test]
    fn strict_parse_rejects_noncanonical() {
        for bad in ["2/4", "3/1", "-0", "+1", "01", "1/-2", "1/0", "", "1/", "a"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad} accepted");
        }
        assert_eq!("-7/3".parse::<Rational>().unwrap(), q(-7, 3));
        assert_eq!("0".parse::<Rational>().unwrap(), Rational::zero());
    }

    #[test]
    fn lenient_parse_reduces() {
        assert_eq!(Rational::parse_lenient("2/4").unwrap(), q(1, 2));
        assert_eq!(Rational::parse_lenient("-3/-6").unwrap(), q(1, 2));
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Rational::from_integer(i64::MAX);
        let sum = &big + &big;
        assert_eq!(sum.numer(), BigInt::from(i64::MAX) * 2);
        let back = &sum - &big;
        assert_eq!(back, big);
        assert!(matches!(back.0, Repr::Small(..)));
        let min = Rational::from_big(BigRational::from_integer(BigInt::from(i64::MIN)));
        assert_eq!(-&min, Rational::from_big(BigRational::from_integer(-BigInt::from(i64::MIN))));
    }

    fn arb() -> impl Strategy<Value = (i64, i64)> {
        prop_oneof![
            (-20i64..20, 1i64..20),
            (any::<i64>().prop_filter("min", |n| *n != i64::MIN), 1i64..i64::MAX),
        ]
    }

    fn oracle(p: (i64, i64)) -> BigRational {
        BigRational::new(BigInt::from(p.0), BigInt::from(p.1))
    }

    proptest! {
        #[test]
        fn arithmetic_matches_bigrational(a in arb(), b in arb()) {
            let (x, y) = (q(a.0, a.1), q(b.0, b.1));
            let (ox, oy) = (oracle(a), oracle(b));
            prop_assert_eq!((&x + &y).to_big(), &ox + &oy);
            prop_assert_eq!((&x - &y).to_big(), &ox - &oy);
            prop_assert_eq!((&x * &y).to_big(), &ox * &oy);
            if !y.is_zero() {
                prop_assert_eq!((&x / &y).to_big(), &ox / &oy);
            }
            prop_assert_eq!(x.cmp(&y), ox.cmp(&oy));
        }

        #[test]
        fn display_parse_round_trip(a in arb()) {
            let x = q(a.0, a.1);
            prop_assert_eq!(x.to_string().parse::<Rational>().unwrap(), x);
        }
    }
}
