//! Exact arithmetic in the real quadratic field Q(√2).
//!
//! An element is `a + b√2` with rational `a`, `b`. The field carries the
//! conjugation automorphism `√2 ↦ −√2`, and two distinguished units
//!
//! * `ρ = √2 − 1`, the eigen-coordinate of the `+1` eigenvector `(1, ρ)` of
//!   the normalized Hadamard matrix, and
//! * `μ = −√2 − 1 = conj(ρ)`, with `ρ·μ = −1`.
//!
//! Values whose two components are integers fitting in an `i64` are kept
//! inline; everything else falls back to arbitrary-precision rationals.
//! Every constructor normalizes, so structural equality is value equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An exact element `a + b√2` of Q(√2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadRat(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// Both components integral and in `i64` range.
    Int(i64, i64),
    Big(Box<(BigRational, BigRational)>),
}

fn ratio_to_i64(r: &BigRational) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

fn int_ratio(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn fmt_ratio(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn parse_ratio(s: &str) -> Result<BigRational> {
    let err = || Error::Parse {
        what: "rational",
        detail: s.to_string(),
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| err())?;
            let d: BigInt = d.trim().parse().map_err(|_| err())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(
            s.trim().parse::<BigInt>().map_err(|_| err())?,
        )),
    }
}

impl QuadRat {
    /// Builds `a + b√2`.
    pub fn new(a: BigRational, b: BigRational) -> Self {
        match (ratio_to_i64(&a), ratio_to_i64(&b)) {
            (Some(x), Some(y)) => QuadRat(Repr::Int(x, y)),
            _ => QuadRat(Repr::Big(Box::new((a, b)))),
        }
    }

    pub const fn from_ints(a: i64, b: i64) -> Self {
        QuadRat(Repr::Int(a, b))
    }

    pub fn from_bigints(a: BigInt, b: BigInt) -> Self {
        Self::new(BigRational::from_integer(a), BigRational::from_integer(b))
    }

    pub const fn zero() -> Self {
        Self::from_ints(0, 0)
    }

    pub const fn one() -> Self {
        Self::from_ints(1, 0)
    }

    pub const fn sqrt2() -> Self {
        Self::from_ints(0, 1)
    }

    /// `ρ = √2 − 1`.
    pub const fn rho() -> Self {
        Self::from_ints(-1, 1)
    }

    /// `μ = −√2 − 1`.
    pub const fn mu() -> Self {
        Self::from_ints(-1, -1)
    }

    /// Rational component `a`.
    pub fn rational_part(&self) -> BigRational {
        match &self.0 {
            Repr::Int(a, _) => int_ratio(*a),
            Repr::Big(p) => p.0.clone(),
        }
    }

    /// Coefficient `b` of `√2`.
    pub fn sqrt2_part(&self) -> BigRational {
        match &self.0 {
            Repr::Int(_, b) => int_ratio(*b),
            Repr::Big(p) => p.1.clone(),
        }
    }

    fn big_parts(&self) -> (BigRational, BigRational) {
        (self.rational_part(), self.sqrt2_part())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Int(0, 0))
    }

    /// True when both components are integers, i.e. the value lies in Z[√2].
    pub fn is_integral(&self) -> bool {
        match &self.0 {
            Repr::Int(..) => true,
            Repr::Big(p) => p.0.is_integer() && p.1.is_integer(),
        }
    }

    /// True when the `√2` component vanishes.
    pub fn is_rational(&self) -> bool {
        match &self.0 {
            Repr::Int(_, b) => *b == 0,
            Repr::Big(p) => p.1.is_zero(),
        }
    }

    /// The conjugation automorphism `a + b√2 ↦ a − b√2` (sends ρ to μ).
    pub fn conj(&self) -> Self {
        match &self.0 {
            Repr::Int(a, b) => match b.checked_neg() {
                Some(nb) => Self::from_ints(*a, nb),
                None => Self::new(int_ratio(*a), -int_ratio(*b)),
            },
            Repr::Big(p) => Self::new(p.0.clone(), -p.1.clone()),
        }
    }

    /// Field norm `a² − 2b² = x·conj(x)`.
    pub fn norm(&self) -> BigRational {
        let (a, b) = self.big_parts();
        &a * &a - BigRational::from_integer(BigInt::from(2)) * &b * &b
    }

    pub fn checked_div(&self, rhs: &QuadRat) -> Result<QuadRat> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = self * &rhs.conj();
        let den = rhs.norm();
        let (a, b) = num.big_parts();
        Ok(Self::new(a / &den, b / den))
    }

    /// Multiplicative inverse.
    pub fn inverse(&self) -> Result<QuadRat> {
        Self::one().checked_div(self)
    }

    /// Multiplies by ρ: `(a + b√2)(√2 − 1) = (2b − a) + (a − b)√2`.
    pub fn mul_rho(&self) -> QuadRat {
        if let Repr::Int(a, b) = self.0 {
            let c = (2 * b as i128) - a as i128;
            let d = a as i128 - b as i128;
            if let (Ok(c), Ok(d)) = (i64::try_from(c), i64::try_from(d)) {
                return Self::from_ints(c, d);
            }
        }
        self * &Self::rho()
    }

    /// Exact `k`-th power of ρ. Negative exponents use `ρ⁻¹ = −μ = 1 + √2`.
    pub fn rho_pow(k: i32) -> QuadRat {
        if k >= 0 {
            Self::rho().pow(k as u32)
        } else {
            Self::from_ints(1, 1).pow(k.unsigned_abs())
        }
    }

    /// Exact `k`-th power of μ.
    pub fn mu_pow(k: i32) -> QuadRat {
        Self::rho_pow(k).conj()
    }

    pub fn pow(&self, mut e: u32) -> QuadRat {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplies by a rational scalar.
    pub fn scale(&self, s: &BigRational) -> QuadRat {
        let (a, b) = self.big_parts();
        Self::new(a * s, b * s)
    }

    /// Exact sign of the real number `a + b√2`.
    ///
    /// For mixed component signs the magnitudes are compared through
    /// `a²` against `2b²`.
    pub fn signum(&self) -> Ordering {
        match &self.0 {
            Repr::Int(a, b) => {
                let (sa, sb) = (a.cmp(&0), b.cmp(&0));
                match (sa, sb) {
                    (Ordering::Equal, s) | (s, Ordering::Equal) => s,
                    (x, y) if x == y => x,
                    _ => {
                        let a2 = (a.unsigned_abs() as u128).pow(2);
                        let b2 = 2 * (b.unsigned_abs() as u128).pow(2);
                        // a² > 2b² means the rational part dominates
                        if sa == Ordering::Greater {
                            a2.cmp(&b2)
                        } else {
                            b2.cmp(&a2)
                        }
                    }
                }
            }
            Repr::Big(p) => {
                let (a, b) = (&p.0, &p.1);
                let sa = a.cmp(&BigRational::zero());
                let sb = b.cmp(&BigRational::zero());
                match (sa, sb) {
                    (Ordering::Equal, s) | (s, Ordering::Equal) => s,
                    (x, y) if x == y => x,
                    _ => {
                        let a2 = a * a;
                        let b2 = BigRational::from_integer(BigInt::from(2)) * b * b;
                        if sa == Ordering::Greater {
                            a2.cmp(&b2)
                        } else {
                            b2.cmp(&a2)
                        }
                    }
                }
            }
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.signum() != Ordering::Less
    }

    /// Coordinates `(c, d)` with `x = c + d·ρ`.
    pub fn to_rho_basis(&self) -> (BigRational, BigRational) {
        let (a, b) = self.big_parts();
        (&a + &b, b)
    }

    pub fn from_rho_basis(c: BigRational, d: BigRational) -> QuadRat {
        Self::new(&c - &d, d)
    }

    /// Structured `{"const": c, "rho": d}` record.
    pub fn to_record(&self) -> RhoRecord {
        let (c, d) = self.to_rho_basis();
        RhoRecord {
            constant: fmt_ratio(&c),
            rho: fmt_ratio(&d),
        }
    }

    pub fn from_record(rec: &RhoRecord) -> Result<QuadRat> {
        Ok(Self::from_rho_basis(
            parse_ratio(&rec.constant)?,
            parse_ratio(&rec.rho)?,
        ))
    }

    /// Floating-point approximation for display only.
    pub fn approx_f64(&self) -> f64 {
        let (a, b) = self.big_parts();
        let f = |r: &BigRational| r.to_f64().unwrap_or(f64::NAN);
        f(&a) + f(&b) * std::f64::consts::SQRT_2
    }
}

/// A value in the `c + d·ρ` basis, components as decimal or `num/den` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RhoRecord {
    #[serde(rename = "const")]
    pub constant: String,
    pub rho: String,
}

impl Default for QuadRat {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for QuadRat {
    fn from(v: i64) -> Self {
        Self::from_ints(v, 0)
    }
}

impl From<BigInt> for QuadRat {
    fn from(v: BigInt) -> Self {
        Self::from_bigints(v, BigInt::zero())
    }
}

impl From<BigRational> for QuadRat {
    fn from(v: BigRational) -> Self {
        Self::new(v, BigRational::zero())
    }
}

impl PartialOrd for QuadRat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Ordering of the real values.
impl Ord for QuadRat {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

fn add_impl(x: &QuadRat, y: &QuadRat) -> QuadRat {
    if let (Repr::Int(a1, b1), Repr::Int(a2, b2)) = (&x.0, &y.0) {
        if let (Some(a), Some(b)) = (a1.checked_add(*a2), b1.checked_add(*b2)) {
            return QuadRat::from_ints(a, b);
        }
    }
    let (a1, b1) = x.big_parts();
    let (a2, b2) = y.big_parts();
    QuadRat::new(a1 + a2, b1 + b2)
}

fn sub_impl(x: &QuadRat, y: &QuadRat) -> QuadRat {
    if let (Repr::Int(a1, b1), Repr::Int(a2, b2)) = (&x.0, &y.0) {
        if let (Some(a), Some(b)) = (a1.checked_sub(*a2), b1.checked_sub(*b2)) {
            return QuadRat::from_ints(a, b);
        }
    }
    let (a1, b1) = x.big_parts();
    let (a2, b2) = y.big_parts();
    QuadRat::new(a1 - a2, b1 - b2)
}

fn mul_int(a1: i64, b1: i64, a2: i64, b2: i64) -> Option<(i64, i64)> {
    let (a1, b1, a2, b2) = (a1 as i128, b1 as i128, a2 as i128, b2 as i128);
    let bb = (b1 * b2).checked_mul(2)?;
    let a = (a1 * a2).checked_add(bb)?;
    let b = (a1 * b2).checked_add(a2 * b1)?;
    Some((i64::try_from(a).ok()?, i64::try_from(b).ok()?))
}

fn mul_impl(x: &QuadRat, y: &QuadRat) -> QuadRat {
    if let (Repr::Int(a1, b1), Repr::Int(a2, b2)) = (&x.0, &y.0) {
        if let Some((a, b)) = mul_int(*a1, *b1, *a2, *b2) {
            return QuadRat::from_ints(a, b);
        }
    }
    let (a1, b1) = x.big_parts();
    let (a2, b2) = y.big_parts();
    let two = BigRational::from_integer(BigInt::from(2));
    QuadRat::new(&a1 * &a2 + two * &b1 * &b2, a1 * b2 + a2 * b1)
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $imp:ident) => {
        impl $tr<&QuadRat> for &QuadRat {
            type Output = QuadRat;
            fn $method(self, rhs: &QuadRat) -> QuadRat {
                $imp(self, rhs)
            }
        }
        impl $tr<QuadRat> for &QuadRat {
            type Output = QuadRat;
            fn $method(self, rhs: QuadRat) -> QuadRat {
                $imp(self, &rhs)
            }
        }
        impl $tr<&QuadRat> for QuadRat {
            type Output = QuadRat;
            fn $method(self, rhs: &QuadRat) -> QuadRat {
                $imp(&self, rhs)
            }
        }
        impl $tr<QuadRat> for QuadRat {
            type Output = QuadRat;
            fn $method(self, rhs: QuadRat) -> QuadRat {
                $imp(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, sub_impl);
forward_binop!(Mul, mul, mul_impl);

impl AddAssign<&QuadRat> for QuadRat {
    fn add_assign(&mut self, rhs: &QuadRat) {
        if let (Repr::Int(a1, b1), Repr::Int(a2, b2)) = (&mut self.0, &rhs.0) {
            if let (Some(a), Some(b)) = (a1.checked_add(*a2), b1.checked_add(*b2)) {
                *a1 = a;
                *b1 = b;
                return;
            }
        }
        *self = add_impl(self, rhs);
    }
}

impl AddAssign<QuadRat> for QuadRat {
    fn add_assign(&mut self, rhs: QuadRat) {
        *self += &rhs;
    }
}

impl SubAssign<&QuadRat> for QuadRat {
    fn sub_assign(&mut self, rhs: &QuadRat) {
        *self = sub_impl(self, rhs);
    }
}

impl Neg for &QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        match &self.0 {
            Repr::Int(a, b) => match (a.checked_neg(), b.checked_neg()) {
                (Some(a), Some(b)) => QuadRat::from_ints(a, b),
                _ => QuadRat::new(-int_ratio(*a), -int_ratio(*b)),
            },
            Repr::Big(p) => QuadRat::new(-p.0.clone(), -p.1.clone()),
        }
    }
}

impl Neg for QuadRat {
    type Output = QuadRat;
    fn neg(self) -> QuadRat {
        -&self
    }
}

impl std::iter::Sum for QuadRat {
    fn sum<I: Iterator<Item = QuadRat>>(iter: I) -> Self {
        iter.fold(QuadRat::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl<'a> std::iter::Sum<&'a QuadRat> for QuadRat {
    fn sum<I: Iterator<Item = &'a QuadRat>>(iter: I) -> Self {
        iter.fold(QuadRat::zero(), |mut acc, x| {
            acc += x;
            acc
        })
    }
}

/// Prints the ρ-basis form `<d>*p + <c>` (or `<d>*p - <|c|>`).
impl fmt::Display for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (c, d) = self.to_rho_basis();
        let sign = if c.is_negative() { '-' } else { '+' };
        write!(f, "{}*p {} {}", fmt_ratio(&d), sign, fmt_ratio(&c.abs()))
    }
}

impl fmt::Debug for QuadRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.big_parts();
        write!(f, "QuadRat({} + {}√2)", fmt_ratio(&a), fmt_ratio(&b))
    }
}

/// Parses `<d>*p + <c>`, `<d>*p - <c>`, `<d>*p` or a bare rational `<c>`.
impl FromStr for QuadRat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || Error::Parse {
            what: "rho-basis value",
            detail: s.to_string(),
        };
        if compact.is_empty() {
            return Err(err());
        }
        let (d, c) = match compact.split_once("*p") {
            Some((d, rest)) => {
                let d = parse_ratio(d).map_err(|_| err())?;
                let c = match rest.chars().next() {
                    None => BigRational::zero(),
                    Some('+') => parse_ratio(&rest[1..]).map_err(|_| err())?,
                    Some('-') => -parse_ratio(&rest[1..]).map_err(|_| err())?,
                    Some(_) => return Err(err()),
                };
                (d, c)
            }
            None => (
                BigRational::zero(),
                parse_ratio(&compact).map_err(|_| err())?,
            ),
        };
        Ok(Self::from_rho_basis(c, d))
    }
}

impl One for QuadRat {
    fn one() -> Self {
        QuadRat::one()
    }
}

impl Zero for QuadRat {
    fn zero() -> Self {
        QuadRat::zero()
    }
    fn is_zero(&self) -> bool {
        QuadRat::is_zero(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(a: i64, b: i64) -> QuadRat {
        QuadRat::from_ints(a, b)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn norm_of_one_plus_sqrt2() {
        assert_eq!(q(1, 1) * q(1, -1), q(-1, 0));
    }

    #[test]
    fn rho_times_mu_is_minus_one() {
        assert_eq!(QuadRat::rho() * QuadRat::mu(), q(-1, 0));
    }

    #[test]
    fn rho_over_one_plus_rho_squared() {
        let rho = QuadRat::rho();
        let lhs = rho.checked_div(&(QuadRat::one() + rho.pow(2))).unwrap();
        let rhs = QuadRat::new(rat(0, 1), rat(1, 4));
        assert_eq!(lhs, rhs);
        let alt = (QuadRat::one() + &rho).scale(&rat(1, 4));
        assert_eq!(lhs, alt);
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(
            q(1, 1).checked_div(&QuadRat::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn conjugation() {
        assert_eq!(QuadRat::rho().conj(), QuadRat::mu());
        assert_eq!(q(5, 0).conj(), q(5, 0));
    }

    #[test]
    fn rho_powers() {
        assert_eq!(QuadRat::rho_pow(0), QuadRat::one());
        assert_eq!(QuadRat::rho_pow(-1), q(1, 1));
        assert_eq!(QuadRat::rho_pow(-1), -QuadRat::mu());
        assert_eq!(QuadRat::rho_pow(2), q(3, -2));
        assert_eq!(QuadRat::rho().mul_rho(), QuadRat::rho_pow(2));
    }

    #[test]
    fn rho_basis() {
        let x = q(1651712, -1167936);
        let (c, d) = x.to_rho_basis();
        assert_eq!(c, rat(483776, 1));
        assert_eq!(d, rat(-1167936, 1));
        assert_eq!(x.to_string(), "-1167936*p + 483776");
        assert_eq!(q(1, 0).to_rho_basis(), (rat(1, 1), rat(0, 1)));
        assert_eq!(QuadRat::rho().to_rho_basis(), (rat(0, 1), rat(1, 1)));
        assert_eq!(QuadRat::rho().to_string(), "1*p + 0");
    }

    #[test]
    fn parse_listing_strings() {
        let x: QuadRat = "7081024*p - 2933056".parse().unwrap();
        assert_eq!(x.to_string(), "7081024*p - 2933056");
        let big = "-2766052144192871265730560*p + 1145736312355867181711360";
        assert_eq!(big.parse::<QuadRat>().unwrap().to_string(), big);
        assert_eq!("3/4".parse::<QuadRat>().unwrap(), QuadRat::from(rat(3, 4)));
        assert!("p*3".parse::<QuadRat>().is_err());
        assert!("".parse::<QuadRat>().is_err());
    }

    #[test]
    fn rho_sign_and_bounds() {
        let rho = QuadRat::rho();
        assert_eq!(rho.signum(), Ordering::Greater);
        assert!(rho < QuadRat::one());
        assert!(QuadRat::mu() < QuadRat::zero());
        assert_eq!(q(3, -2).signum(), Ordering::Greater);
        assert_eq!(q(-3, 2).signum(), Ordering::Less);
        assert_eq!(q(1, -1).signum(), Ordering::Less);
    }

    #[test]
    fn overflow_promotes_to_bigint() {
        let x = q(i64::MAX, i64::MAX);
        let y = &x + &x;
        assert_eq!(y.rational_part(), rat(i64::MAX, 1) * rat(2, 1));
        assert_eq!(&y - &x, x);
        let sq = &x * &x;
        assert_eq!(sq.checked_div(&x).unwrap(), x);
        assert_eq!(q(i64::MIN, 0).signum(), Ordering::Less);
        assert_eq!(-(-q(i64::MIN, 3)), q(i64::MIN, 3));
    }

    #[test]
    fn structured_record_round_trip() {
        let x = QuadRat::new(rat(-3, 7), rat(5, 2));
        let rec = x.to_record();
        let json = serde_json::to_string(&rec).unwrap();
        assert!(json.contains("\"const\""));
        let back: RhoRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(QuadRat::from_record(&back).unwrap(), x);
    }

    fn arb_rat() -> impl Strategy<Value = BigRational> {
        (-1_000_000i64..1_000_000, 1i64..1000).prop_map(|(n, d)| rat(n, d))
    }

    fn arb_quad() -> impl Strategy<Value = QuadRat> {
        prop_oneof![
            (-1_000_000i64..1_000_000, -1_000_000i64..1_000_000).prop_map(|(a, b)| q(a, b)),
            (arb_rat(), arb_rat()).prop_map(|(a, b)| QuadRat::new(a, b)),
            (any::<i64>(), any::<i64>()).prop_map(|(a, b)| q(a, b)),
        ]
    }

    proptest! {
        #[test]
        fn conj_is_ring_automorphism(x in arb_quad(), y in arb_quad()) {
            prop_assert_eq!((&x * &y).conj(), x.conj() * y.conj());
            prop_assert_eq!((&x + &y).conj(), x.conj() + y.conj());
            prop_assert_eq!(x.conj().conj(), x);
        }

        #[test]
        fn ring_laws(x in arb_quad(), y in arb_quad(), z in arb_quad()) {
            prop_assert_eq!((&x * &y) * &z, &x * (&y * &z));
            prop_assert_eq!(&x * (&y + &z), &x * &y + &x * &z);
            prop_assert_eq!((&x + &y) - &y, x.clone());
        }

        #[test]
        fn division_inverts_multiplication(x in arb_quad(), y in arb_quad()) {
            prop_assume!(!y.is_zero());
            prop_assert_eq!((&x * &y).checked_div(&y).unwrap(), x);
        }

        #[test]
        fn rho_pow_adds_exponents(j in -20i32..=20, k in -20i32..=20) {
            prop_assert_eq!(QuadRat::rho_pow(j) * QuadRat::rho_pow(k), QuadRat::rho_pow(j + k));
        }

        #[test]
        fn rho_basis_round_trips(x in arb_quad()) {
            let (c, d) = x.to_rho_basis();
            prop_assert_eq!(QuadRat::from_rho_basis(c, d), x.clone());
            prop_assert_eq!(x.to_string().parse::<QuadRat>().unwrap(), x);
        }

        #[test]
        fn sign_matches_float(a in -1_000_000i64..1_000_000, b in -1_000_000i64..1_000_000) {
            let x = q(a, b);
            let f = a as f64 + b as f64 * std::f64::consts::SQRT_2;
            // |a² − 2b²| ≥ 1 when nonzero, so the float sign is reliable here
            let expected = if a == 0 && b == 0 { Ordering::Equal }
                else if f > 0.0 { Ordering::Greater } else { Ordering::Less };
            prop_assert_eq!(x.signum(), expected);
        }
    }
}
