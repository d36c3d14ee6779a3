//! Exact arithmetic in the number field Q(i, sqrt2, sqrt5).
//!
//! Every value is stored as eight rationals: coordinates over the basis
//! {1, sqrt2, sqrt5, sqrt10} for the real part and the same four for the
//! imaginary part. The basis is closed under multiplication
//! (sqrt2*sqrt5 = sqrt10, sqrt2*sqrt10 = 2*sqrt5, sqrt5*sqrt10 = 5*sqrt2),
//! the eight elements are linearly independent over Q, so equality is
//! coordinate comparison and every operation canonicalizes for free.
//!
//! Inversion descends the tower Q < Q(sqrt2) < Q(sqrt2,sqrt5) <
//! Q(i,sqrt2,sqrt5) by repeated conjugate-norm reduction.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Convenience constructor for small rationals.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Element of the real subfield Q(sqrt2, sqrt5), coordinates over
/// {1, sqrt2, sqrt5, sqrt10}.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
struct Quad {
    one: Rational,
    s2: Rational,
    s5: Rational,
    s10: Rational,
}

impl Quad {
    fn zero() -> Self {
        Quad::default()
    }

    fn is_zero(&self) -> bool {
        self.one.is_zero() && self.s2.is_zero() && self.s5.is_zero() && self.s10.is_zero()
    }

    fn neg(&self) -> Self {
        Quad {
            one: -self.one.clone(),
            s2: -self.s2.clone(),
            s5: -self.s5.clone(),
            s10: -self.s10.clone(),
        }
    }

    fn add(&self, other: &Quad) -> Self {
        Quad {
            one: &self.one + &other.one,
            s2: &self.s2 + &other.s2,
            s5: &self.s5 + &other.s5,
            s10: &self.s10 + &other.s10,
        }
    }

    fn sub(&self, other: &Quad) -> Self {
        Quad {
            one: &self.one - &other.one,
            s2: &self.s2 - &other.s2,
            s5: &self.s5 - &other.s5,
            s10: &self.s10 - &other.s10,
        }
    }

    // sqrt2*sqrt5 = sqrt10, sqrt2*sqrt10 = 2*sqrt5, sqrt5*sqrt10 = 5*sqrt2
    fn mul(&self, other: &Quad) -> Self {
        let (a1, a2, a5, a10) = (&self.one, &self.s2, &self.s5, &self.s10);
        let (b1, b2, b5, b10) = (&other.one, &other.s2, &other.s5, &other.s10);
        let two = rat(2, 1);
        let five = rat(5, 1);
        let ten = rat(10, 1);
        Quad {
            one: a1 * b1 + &two * (a2 * b2) + &five * (a5 * b5) + &ten * (a10 * b10),
            s2: a1 * b2 + a2 * b1 + &five * (a5 * b10 + a10 * b5),
            s5: a1 * b5 + a5 * b1 + &two * (a2 * b10 + a10 * b2),
            s10: a1 * b10 + a10 * b1 + a2 * b5 + a5 * b2,
        }
    }

    fn scale(&self, r: &Rational) -> Self {
        Quad {
            one: &self.one * r,
            s2: &self.s2 * r,
            s5: &self.s5 * r,
            s10: &self.s10 * r,
        }
    }

    /// Inverse of a nonzero element, by norm-down to Q(sqrt2) and then Q.
    ///
    /// Writing q = u + v*sqrt5 with u, v in Q(sqrt2), the product
    /// q*(u - v*sqrt5) = u^2 - 5 v^2 lies in Q(sqrt2) and is nonzero
    /// because sqrt5 is not in Q(sqrt2); one more conjugation lands in Q.
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "Quad::inv on zero");
        // u = (one, s2), v = (s5, s10) over the basis {1, sqrt2} of Q(sqrt2)
        let u = (self.one.clone(), self.s2.clone());
        let v = (self.s5.clone(), self.s10.clone());
        let mul2 = |a: &(Rational, Rational), b: &(Rational, Rational)| {
            (&a.0 * &b.0 + rat(2, 1) * (&a.1 * &b.1), &a.0 * &b.1 + &a.1 * &b.0)
        };
        let uu = mul2(&u, &u);
        let vv = mul2(&v, &v);
        let den = (&uu.0 - rat(5, 1) * &vv.0, &uu.1 - rat(5, 1) * &vv.1);
        // invert den = s + t*sqrt2 in Q(sqrt2): norm s^2 - 2 t^2 is a
        // nonzero rational because sqrt2 is irrational
        let norm = &den.0 * &den.0 - rat(2, 1) * (&den.1 * &den.1);
        assert!(!norm.is_zero(), "field tower norm vanished on nonzero input");
        let den_inv = (&den.0 / &norm, -(&den.1 / &norm));
        // (u - v*sqrt5) * den_inv, with den_inv embedded in Q(sqrt2)
        let conj = Quad {
            one: u.0,
            s2: u.1,
            s5: -v.0,
            s10: -v.1,
        };
        let den_inv = Quad {
            one: den_inv.0,
            s2: den_inv.1,
            s5: Rational::zero(),
            s10: Rational::zero(),
        };
        conj.mul(&den_inv)
    }

    fn to_f64(&self) -> f64 {
        let r = |x: &Rational| x.to_f64().unwrap_or(f64::NAN);
        r(&self.one) + r(&self.s2) * 2f64.sqrt() + r(&self.s5) * 5f64.sqrt() + r(&self.s10) * 10f64.sqrt()
    }

    fn is_rational(&self) -> bool {
        self.s2.is_zero() && self.s5.is_zero() && self.s10.is_zero()
    }
}

/// Exact element of Q(i, sqrt2, sqrt5).
///
/// The representation is unique, so `==` decides field equality.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Scalar {
    re: Quad,
    im: Quad,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_rational(Rational::one())
    }

    pub fn i() -> Self {
        Scalar {
            re: Quad::zero(),
            im: Quad { one: Rational::one(), ..Quad::zero() },
        }
    }

    pub fn sqrt2() -> Self {
        Scalar {
            re: Quad { s2: Rational::one(), ..Quad::zero() },
            im: Quad::zero(),
        }
    }

    pub fn sqrt5() -> Self {
        Scalar {
            re: Quad { s5: Rational::one(), ..Quad::zero() },
            im: Quad::zero(),
        }
    }

    pub fn sqrt10() -> Self {
        Scalar {
            re: Quad { s10: Rational::one(), ..Quad::zero() },
            im: Quad::zero(),
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        Scalar {
            re: Quad { one: r, ..Quad::zero() },
            im: Quad::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(rat(n, 1))
    }

    /// Rational multiple of i.
    pub fn i_times(r: Rational) -> Self {
        Scalar {
            re: Quad::zero(),
            im: Quad { one: r, ..Quad::zero() },
        }
    }

    /// Coordinates over {1, sqrt2, sqrt5, sqrt10} x {1, i}, real four first.
    pub fn coords(&self) -> [Rational; 8] {
        [
            self.re.one.clone(),
            self.re.s2.clone(),
            self.re.s5.clone(),
            self.re.s10.clone(),
            self.im.one.clone(),
            self.im.s2.clone(),
            self.im.s5.clone(),
            self.im.s10.clone(),
        ]
    }

    pub fn from_coords(c: [Rational; 8]) -> Self {
        let [a, b, d, e, f, g, h, k] = c;
        Scalar {
            re: Quad { one: a, s2: b, s5: d, s10: e },
            im: Quad { one: f, s2: g, s5: h, s10: k },
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Complex conjugation; a ring automorphism of the field.
    pub fn conj(&self) -> Self {
        Scalar {
            re: self.re.clone(),
            im: self.im.neg(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.im.is_zero() && self.re.is_rational()
    }

    /// The rational value, when the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(self.re.one.clone())
        } else {
            None
        }
    }

    /// Real part as a (real) scalar.
    pub fn re_part(&self) -> Scalar {
        Scalar { re: self.re.clone(), im: Quad::zero() }
    }

    /// Imaginary part as a (real) scalar: a = re_part(a) + i * im_part(a).
    pub fn im_part(&self) -> Scalar {
        Scalar { re: self.im.clone(), im: Quad::zero() }
    }

    /// a * conj(a); always real, nonnegative as a real algebraic number.
    pub fn abs_squared(&self) -> Scalar {
        Scalar {
            re: self.re.mul(&self.re).add(&self.im.mul(&self.im)),
            im: Quad::zero(),
        }
    }

    /// Exact multiplicative inverse.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // 1/a = conj(a) / (a * conj(a)), the denominator being real
        let d = self.re.mul(&self.re).add(&self.im.mul(&self.im));
        let d_inv = d.inv();
        Ok(Scalar {
            re: self.re.mul(&d_inv),
            im: self.im.neg().mul(&d_inv),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self.clone() * other.inv()?)
    }

    pub fn scale(&self, r: &Rational) -> Scalar {
        Scalar {
            re: self.re.scale(r),
            im: self.im.scale(r),
        }
    }

    pub fn pow(&self, mut n: u32) -> Scalar {
        let mut acc = Scalar::one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            n >>= 1;
        }
        acc
    }

    /// Floating-point evaluation (re, im). Diagnostic output only; never
    /// used inside any exact decision.
    pub fn as_float(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    /// Parse a scalar literal; see the grammar in the module docs of
    /// [`crate::scalar`] and the `Display` impl for the canonical form.
    pub fn parse(input: &str) -> Result<Scalar> {
        parse_scalar(input)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        Scalar {
            re: self.re.add(&rhs.re),
            im: self.im.add(&rhs.im),
        }
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        self.re = self.re.add(&rhs.re);
        self.im = self.im.add(&rhs.im);
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        Scalar {
            re: self.re.sub(&rhs.re),
            im: self.im.sub(&rhs.im),
        }
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        self.re = self.re.sub(&rhs.re);
        self.im = self.im.sub(&rhs.im);
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: self.re.neg(),
            im: self.im.neg(),
        }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: self.re.mul(&rhs.re).sub(&self.im.mul(&rhs.im)),
            im: self.re.mul(&rhs.im).add(&self.im.mul(&rhs.re)),
        }
    }
}

impl MulAssign for Scalar {
    fn mul_assign(&mut self, rhs: Scalar) {
        *self = &*self * &rhs;
    }
}

// ---------------------------------------------------------------------------
// Canonical literal form
//
//   scalar   := term (('+'|'-') term)*
//   term     := ['i' '*'] rational ['*' radical]
//   radical  := 'sqrt2' | 'sqrt5' | 'sqrt10'
//   rational := int ['/' posint]
//
// Canonical output lists real coordinates in basis order then imaginary
// ones, each with an explicit rational coefficient, e.g. "1/2*sqrt10" or
// "1+1*sqrt2-i*1/4". Zero prints as "0".
// ---------------------------------------------------------------------------

fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        let radicals = ["", "sqrt2", "sqrt5", "sqrt10"];
        let emit = |coeff: &Rational, imag: bool, radical: &str, out: &mut String| {
            if coeff.is_zero() {
                return;
            }
            let neg = coeff < &Rational::zero();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let mag = if neg { -coeff.clone() } else { coeff.clone() };
            if imag {
                out.push_str("i*");
            }
            out.push_str(&fmt_rational(&mag));
            if !radical.is_empty() {
                out.push('*');
                out.push_str(radical);
            }
        };
        let re = [&self.re.one, &self.re.s2, &self.re.s5, &self.re.s10];
        let im = [&self.im.one, &self.im.s2, &self.im.s5, &self.im.s10];
        for (c, r) in re.iter().zip(radicals) {
            emit(c, false, r, &mut out);
        }
        for (c, r) in im.iter().zip(radicals) {
            emit(c, true, r, &mut out);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    ImagUnit,
    Radical(u8), // 2, 5 or 10
}

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = input.as_bytes();
    let mut tokens = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos] as char;
        match c {
            ' ' | '\t' => pos += 1,
            '+' => {
                tokens.push((pos, Token::Plus));
                pos += 1;
            }
            '-' => {
                tokens.push((pos, Token::Minus));
                pos += 1;
            }
            '*' => {
                tokens.push((pos, Token::Star));
                pos += 1;
            }
            '/' => {
                tokens.push((pos, Token::Slash));
                pos += 1;
            }
            '0'..='9' => {
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                let n: BigInt = input[start..pos]
                    .parse()
                    .map_err(|_| Error::parse_at(start, "invalid integer"))?;
                tokens.push((start, Token::Int(n)));
            }
            'i' => {
                tokens.push((pos, Token::ImagUnit));
                pos += 1;
            }
            's' => {
                let rest = &input[pos..];
                let radical = if rest.starts_with("sqrt10") {
                    (10u8, 6usize)
                } else if rest.starts_with("sqrt2") {
                    (2, 5)
                } else if rest.starts_with("sqrt5") {
                    (5, 5)
                } else {
                    return Err(Error::parse_at(pos, "expected sqrt2, sqrt5 or sqrt10"));
                };
                tokens.push((pos, Token::Radical(radical.0)));
                pos += radical.1;
            }
            other => {
                return Err(Error::parse_at(pos, format!("unexpected character '{other}'")));
            }
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    cursor: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.cursor).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.tokens.get(self.cursor).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.cursor).map(|(_, t)| t.clone());
        self.cursor += 1;
        t
    }

    fn eat(&mut self, t: &Token) -> bool {
        if self.peek() == Some(t) {
            self.cursor += 1;
            true
        } else {
            false
        }
    }

    fn rational(&mut self) -> Result<Rational> {
        let pos = self.pos();
        let negative = if self.eat(&Token::Minus) {
            true
        } else {
            self.eat(&Token::Plus);
            false
        };
        let Some(Token::Int(num)) = self.bump() else {
            return Err(Error::parse_at(pos, "expected an integer"));
        };
        let num = if negative { -num } else { num };
        if self.eat(&Token::Slash) {
            let dpos = self.pos();
            let Some(Token::Int(den)) = self.bump() else {
                return Err(Error::parse_at(dpos, "expected a positive denominator"));
            };
            if den.is_zero() {
                return Err(Error::parse_at(dpos, "denominator must be positive"));
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    /// term := ['i' '*'] rational ['*' radical], with the leniencies that a
    /// bare 'i' or bare radical stands for coefficient 1.
    fn term(&mut self) -> Result<Scalar> {
        let pos = self.pos();
        let imag = self.eat(&Token::ImagUnit);
        if imag {
            self.eat(&Token::Star);
        }
        let coeff = match self.peek() {
            Some(Token::Int(_)) | Some(Token::Minus) | Some(Token::Plus) => self.rational()?,
            Some(Token::Radical(_)) => Rational::one(),
            None if imag => Rational::one(),
            _ => return Err(Error::parse_at(pos, "expected a term")),
        };
        let radical = if self.eat(&Token::Star) {
            let rpos = self.pos();
            match self.bump() {
                Some(Token::Radical(r)) => Some(r),
                _ => return Err(Error::parse_at(rpos, "expected sqrt2, sqrt5 or sqrt10")),
            }
        } else if let Some(Token::Radical(r)) = self.peek() {
            let r = *r;
            self.cursor += 1;
            Some(r)
        } else {
            None
        };
        let mut quad = Quad::zero();
        match radical {
            None => quad.one = coeff,
            Some(2) => quad.s2 = coeff,
            Some(5) => quad.s5 = coeff,
            Some(10) => quad.s10 = coeff,
            Some(_) => unreachable!(),
        }
        Ok(if imag {
            Scalar { re: Quad::zero(), im: quad }
        } else {
            Scalar { re: quad, im: Quad::zero() }
        })
    }
}

fn parse_scalar(input: &str) -> Result<Scalar> {
    let tokens = tokenize(input)?;
    if tokens.is_empty() {
        return Err(Error::parse_at(0, "empty scalar literal"));
    }
    let mut parser = Parser { tokens, cursor: 0, end: input.len() };
    // optional leading sign applies to the first term
    let mut total = if parser.eat(&Token::Minus) {
        -parser.term()?
    } else {
        parser.term()?
    };
    loop {
        match parser.peek() {
            Some(Token::Plus) => {
                parser.cursor += 1;
                let t = parser.term()?;
                total += t;
            }
            Some(Token::Minus) => {
                parser.cursor += 1;
                let t = parser.term()?;
                total -= t;
            }
            None => break,
            _ => return Err(Error::parse_at(parser.pos(), "expected '+' or '-'")),
        }
    }
    Ok(total)
}

impl FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Scalar> {
        parse_scalar(s)
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Scalar, D::Error> {
        let s = String::deserialize(deserializer)?;
        Scalar::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Canonical text form of a rational, "n" or "n/d".
pub fn rational_to_string(r: &Rational) -> String {
    fmt_rational(r)
}

/// Parse "n" or "n/d" with a positive denominator.
pub fn rational_from_str(s: &str) -> Result<Rational> {
    let tokens = tokenize(s)?;
    let mut parser = Parser { tokens, cursor: 0, end: s.len() };
    let r = parser.rational()?;
    if parser.peek().is_some() {
        return Err(Error::parse_at(parser.pos(), "trailing input after rational"));
    }
    Ok(r)
}
