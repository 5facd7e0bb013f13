//! Exact Gaussian rationals, the scalar field of every computation.
//!
//! A [`Scalar`] is `re + im·i` with `re`, `im` arbitrary-precision rationals.
//! Both parts are kept normalized (reduced fraction, positive denominator),
//! so derived equality is field equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    /// `num/den`, real.
    ///
    /// Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar::new(BigRational::new(num.into(), den.into()), BigRational::zero())
    }

    pub fn from_parts(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        Scalar::new(
            BigRational::new(re_num.into(), re_den.into()),
            BigRational::new(im_num.into(), im_den.into()),
        )
    }

    pub fn i() -> Self {
        Scalar::new(BigRational::zero(), BigRational::one())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Scalar::new(self.re.clone(), -&self.im)
    }

    /// Field norm `re² + im²`.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.im.is_zero() {
            return Ok(Scalar::from(self.re.recip()));
        }
        let n = self.norm();
        Ok(Scalar::new(&self.re / &n, -&self.im / &n))
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Square root in Q(i), if one exists.
    ///
    /// The returned root has positive real part, or zero real part and
    /// non-negative imaginary part.
    pub fn sqrt(&self) -> Option<Scalar> {
        if self.im.is_zero() {
            if !self.re.is_negative() {
                return rational_sqrt(&self.re).map(|r| Scalar::new(r, BigRational::zero()));
            }
            return rational_sqrt(&-&self.re).map(|r| Scalar::new(BigRational::zero(), r));
        }
        // (a + bi)^2 = c + di  =>  a^2 + b^2 = sqrt(c^2 + d^2)
        let r = rational_sqrt(&self.norm())?;
        let two = BigRational::from_integer(2.into());
        let a = rational_sqrt(&((&r + &self.re) / &two))?;
        let b = rational_sqrt(&((&r - &self.re) / &two))?;
        let b = if self.im.is_negative() { -b } else { b };
        Some(Scalar::new(a, b))
    }
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = int_sqrt(q.numer())?;
    let d = int_sqrt(q.denom())?;
    Some(BigRational::new(n, d))
}

fn int_sqrt(n: &BigInt) -> Option<BigInt> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::default()
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::from_int(1)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(re: BigRational) -> Self {
        Scalar::new(re, BigRational::zero())
    }
}

/// Lexicographic on `(re, im)`.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.re.cmp(&other.re).then_with(|| self.im.cmp(&other.im))
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        // most entries in practice are real; skip the products with zero
        match (self.im.is_zero(), rhs.im.is_zero()) {
            (true, true) => Scalar::from(&self.re * &rhs.re),
            (true, false) => Scalar::new(&self.re * &rhs.re, &self.re * &rhs.im),
            (false, true) => Scalar::new(&self.re * &rhs.re, &self.im * &rhs.re),
            (false, false) => Scalar::new(
                &self.re * &rhs.re - &self.im * &rhs.im,
                &self.re * &rhs.im + &self.im * &rhs.re,
            ),
        }
    }
}

/// Panics on division by zero; use [`Scalar::checked_div`] for a `Result`.
impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-&self.re, -&self.im)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re, -self.im)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, q: &BigRational) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

/// Canonical emission: `3/2-1/3i`, `2`, `-i`, `0`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write_rational(f, &self.re);
        }
        if !self.re.is_zero() {
            write_rational(f, &self.re)?;
            if self.im.is_positive() {
                f.write_str("+")?;
            }
        }
        if self.im.is_negative() {
            f.write_str("-")?;
        }
        let mag = self.im.abs();
        if !mag.is_one() {
            write_rational(f, &mag)?;
        }
        f.write_str("i")
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, message: &str) -> Error {
        Error::Parse {
            position: format!("char {}", self.pos),
            message: message.to_string(),
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).ok()?;
        s.parse().ok()
    }

    /// `['-'] digits ['/' digits]`, or `None` if no digits follow (the
    /// optional sign is consumed either way).
    fn rational(&mut self) -> Result<(bool, Option<BigRational>)> {
        let negative = self.eat(b'-');
        let Some(num) = self.digits() else {
            return Ok((negative, None));
        };
        let den = if self.eat(b'/') {
            let d = self.digits().ok_or_else(|| self.error("expected denominator"))?;
            if d.is_zero() {
                return Err(self.error("zero denominator"));
            }
            d
        } else {
            BigInt::one()
        };
        let q = BigRational::new(num, den);
        Ok((negative, Some(if negative { -q } else { q })))
    }
}

pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let mut cur = Cursor { bytes: text.as_bytes(), pos: 0 };
    let (negative, first) = cur.rational()?;

    let value = match (first, cur.peek()) {
        (Some(re), None) => Scalar::from(re),
        // ['-'] rational? 'i'
        (q, Some(b'i')) => {
            cur.pos += 1;
            let im = q.unwrap_or_else(|| {
                if negative {
                    -BigRational::one()
                } else {
                    BigRational::one()
                }
            });
            Scalar::new(BigRational::zero(), im)
        }
        // rational ('+'|'-') rational? 'i'
        (Some(re), Some(sign @ (b'+' | b'-'))) => {
            cur.pos += 1;
            let (inner_negative, q) = cur.rational()?;
            let mut im = match q {
                Some(q) => q,
                None if inner_negative => return Err(cur.error("expected digits")),
                None => BigRational::one(),
            };
            if sign == b'-' {
                im = -im;
            }
            if !cur.eat(b'i') {
                return Err(cur.error("expected 'i'"));
            }
            Scalar::new(re, im)
        }
        (None, _) => return Err(cur.error("expected digits or 'i'")),
        (Some(_), Some(_)) => return Err(cur.error("unexpected character")),
    };
    if cur.peek().is_some() {
        return Err(cur.error("trailing characters"));
    }
    Ok(value)
}

impl FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_scalar(s)
    }
}
