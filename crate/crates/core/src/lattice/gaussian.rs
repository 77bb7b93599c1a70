use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

use super::scalar::ExactInt;
use crate::error::GkzError;

/// A complex number with exact rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gaussian<T: Clone + Integer> {
    pub re: Ratio<T>,
    pub im: Ratio<T>,
}

impl<T: ExactInt> Gaussian<T> {
    pub fn new(re: Ratio<T>, im: Ratio<T>) -> Self {
        Self { re, im }
    }

    pub fn real(re: Ratio<T>) -> Self {
        Self {
            re,
            im: Ratio::zero(),
        }
    }

    pub fn from_integer(v: T) -> Self {
        Self::real(Ratio::from_integer(v))
    }

    pub fn zero() -> Self {
        Self::real(Ratio::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// The rational integer this value equals, if any.
    pub fn as_integer(&self) -> Option<T> {
        (self.im.is_zero() && self.re.is_integer()).then(|| self.re.to_integer())
    }

    pub fn scale(&self, k: &Ratio<T>) -> Self {
        Self {
            re: self.re.clone() * k.clone(),
            im: self.im.clone() * k.clone(),
        }
    }

    pub fn scale_int(&self, k: &T) -> Self {
        self.scale(&Ratio::from_integer(k.clone()))
    }
}

/// Value of an integer functional on a Gaussian vector.
pub fn eval<T: ExactInt>(functional: &[T], v: &[Gaussian<T>]) -> Gaussian<T> {
    assert_eq!(
        functional.len(),
        v.len(),
        "functional and vector lengths differ"
    );
    functional
        .iter()
        .zip(v)
        .fold(Gaussian::zero(), |acc, (c, x)| acc + x.scale_int(c))
}

pub fn from_integers<T: ExactInt>(v: &[T]) -> Vec<Gaussian<T>> {
    v.iter().cloned().map(Gaussian::from_integer).collect()
}

pub fn real_parts<T: ExactInt>(v: &[Gaussian<T>]) -> Vec<Ratio<T>> {
    v.iter().map(|x| x.re.clone()).collect()
}

pub fn imag_parts<T: ExactInt>(v: &[Gaussian<T>]) -> Vec<Ratio<T>> {
    v.iter().map(|x| x.im.clone()).collect()
}

pub fn combine<T: ExactInt>(re: &[Ratio<T>], im: &[Ratio<T>]) -> Vec<Gaussian<T>> {
    re.iter()
        .zip(im)
        .map(|(a, b)| Gaussian::new(a.clone(), b.clone()))
        .collect()
}

pub fn add_vec<T: ExactInt>(a: &[Gaussian<T>], b: &[Gaussian<T>]) -> Vec<Gaussian<T>> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.clone() + y.clone())
        .collect()
}

pub fn add_int_vec<T: ExactInt>(a: &[Gaussian<T>], z: &[T]) -> Vec<Gaussian<T>> {
    a.iter()
        .zip(z)
        .map(|(x, y)| x.clone() + Gaussian::from_integer(y.clone()))
        .collect()
}

pub fn sub_int_vec<T: ExactInt>(a: &[Gaussian<T>], z: &[T]) -> Vec<Gaussian<T>> {
    a.iter()
        .zip(z)
        .map(|(x, y)| x.clone() - Gaussian::from_integer(y.clone()))
        .collect()
}

/// `a - b` if every entry of the difference is a rational integer.
pub fn integer_difference<T: ExactInt>(a: &[Gaussian<T>], b: &[Gaussian<T>]) -> Option<Vec<T>> {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x.clone() - y.clone()).as_integer())
        .collect()
}

impl<T: ExactInt> Add for Gaussian<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<T: ExactInt> Sub for Gaussian<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl<T: ExactInt> Neg for Gaussian<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl<T: ExactInt> Mul for Gaussian<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone(),
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

/// Canonical text of a rational: `p` for integers, else `p/q` with `q > 0`.
pub fn format_ratio<T: ExactInt>(r: &Ratio<T>) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_ratio<T: ExactInt + FromStr>(s: &str) -> Result<Ratio<T>, GkzError> {
    let bad = || GkzError::InvalidInput(format!("not a rational number: {s:?}"));
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: T = n.parse().map_err(|_| bad())?;
    let d: T = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Ratio::new(n, d))
}

impl<T: ExactInt> fmt::Display for Gaussian<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", format_ratio(&self.re));
        }
        let im = format_ratio(&self.im.abs());
        let im = if im == "1" { String::new() } else { im };
        let sign = if self.im.is_negative() { "-" } else { "+" };
        if self.re.is_zero() {
            let sign = if self.im.is_negative() { "-" } else { "" };
            write!(f, "{sign}{im}i")
        } else {
            write!(f, "{}{sign}{im}i", format_ratio(&self.re))
        }
    }
}

impl<T: ExactInt> fmt::Debug for Gaussian<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `p`, `p/q`, `a+bi`, `a-bi`, `bi`, `i`, `-i`, `1+i/2`, with
/// rationals in either slot.
impl<T: ExactInt + FromStr> FromStr for Gaussian<T> {
    type Err = GkzError;

    fn from_str(s: &str) -> Result<Self, GkzError> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if !s.contains('i') {
            return Ok(Self::real(parse_ratio(&s)?));
        }
        let bad = || GkzError::InvalidInput(format!("not a Gaussian rational: {s:?}"));
        // split at the last sign that is not the leading one
        let split = s
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        let (re, im) = match split {
            Some(i) => (&s[..i], &s[i..]),
            None => ("0", s.as_str()),
        };
        if re.contains('i') || im.matches('i').count() != 1 {
            return Err(bad());
        }
        let (sign, body) = match im.strip_prefix('-') {
            Some(rest) => (-T::one(), rest),
            None => (T::one(), im.strip_prefix('+').unwrap_or(im)),
        };
        // forms: "i", "bi", "i/q", "b/qi"
        let im_value: Ratio<T> = if let Some(rest) = body.strip_prefix('i') {
            if rest.is_empty() {
                Ratio::from_integer(T::one())
            } else {
                let q = rest.strip_prefix('/').ok_or_else(bad)?;
                parse_ratio::<T>(&format!("1/{q}"))?
            }
        } else {
            parse_ratio(body.strip_suffix('i').ok_or_else(bad)?)?
        };
        Ok(Self::new(
            parse_ratio(re)?,
            im_value * Ratio::from_integer(sign),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type G = Gaussian<i64>;

    fn g(s: &str) -> G {
        s.parse().unwrap()
    }

    #[test]
    fn parsing_forms() {
        assert_eq!(g("3"), G::from_integer(3));
        assert_eq!(g("-1/2"), G::real(Ratio::new(-1, 2)));
        assert_eq!(g("1+i/2"), G::new(Ratio::from_integer(1), Ratio::new(1, 2)));
        assert_eq!(
            g("1-i/2"),
            G::new(Ratio::from_integer(1), Ratio::new(-1, 2))
        );
        assert_eq!(g("-i"), G::new(Ratio::zero(), Ratio::from_integer(-1)));
        assert_eq!(g("2/3-5/7i"), G::new(Ratio::new(2, 3), Ratio::new(-5, 7)));
        assert!("1/0".parse::<G>().is_err());
        assert!("x".parse::<G>().is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["0", "-3", "1/2", "1+1/2i", "1-1/2i", "i", "-2i", "-1/3+i"] {
            assert_eq!(g(&g(s).to_string()), g(s), "{s}");
        }
        assert_eq!(g("4/2").to_string(), "2");
    }

    #[test]
    fn integrality() {
        assert_eq!(g("4/2").as_integer(), Some(2));
        assert_eq!(g("1/2").as_integer(), None);
        assert_eq!(g("1+i").as_integer(), None);
    }
}
