//! Gaussian rationals `re + im·i` with exact arithmetic.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use super::rational::{ParseRationalError, Rational};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    pub re: Rational,
    pub im: Rational,
}

impl Scalar {
    pub const fn zero() -> Self {
        Scalar { re: Rational::zero(), im: Rational::zero() }
    }

    pub const fn one() -> Self {
        Scalar { re: Rational::one(), im: Rational::zero() }
    }

    /// The imaginary unit.
    pub const fn i() -> Self {
        Scalar { re: Rational::zero(), im: Rational::one() }
    }

    pub fn new(re: Rational, im: Rational) -> Self {
        Scalar { re, im }
    }

    pub fn int(n: i64) -> Self {
        Scalar { re: Rational::from_int(n), im: Rational::zero() }
    }

    pub fn frac(num: i64, den: i64) -> Self {
        Scalar { re: Rational::new(num, den), im: Rational::zero() }
    }

    pub fn complex(re: i64, im: i64) -> Self {
        Scalar { re: Rational::from_int(re), im: Rational::from_int(im) }
    }

    pub fn from_rational(re: Rational) -> Self {
        Scalar { re, im: Rational::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Scalar { re: self.re.clone(), im: -&self.im }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        if self.im.is_zero() {
            return Scalar::from_rational(self.re.recip());
        }
        let norm = &(&self.re * &self.re) + &(&self.im * &self.im);
        let inv = norm.recip();
        Scalar { re: &self.re * &inv, im: -(&self.im * &inv) }
    }

    /// `self += a * b`, the inner kernel of every elimination loop.
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let p = a * b;
        *self = &*self + &p;
    }

    fn add_ref(&self, o: &Scalar) -> Scalar {
        Scalar { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    fn sub_ref(&self, o: &Scalar) -> Scalar {
        Scalar { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    fn mul_ref(&self, o: &Scalar) -> Scalar {
        if self.im.is_zero() && o.im.is_zero() {
            return Scalar::from_rational(&self.re * &o.re);
        }
        Scalar {
            re: &(&self.re * &o.re) - &(&self.im * &o.im),
            im: &(&self.re * &o.im) + &(&self.im * &o.re),
        }
    }

    fn div_ref(&self, o: &Scalar) -> Scalar {
        self.mul_ref(&o.recip())
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::from_rational(r)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$imp(rhs)
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$imp(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$imp(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$imp(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Div, div, div_ref);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if !rhs.is_zero() {
            *self = self.add_ref(rhs);
        }
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self += &rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        if !rhs.is_zero() {
            *self = self.sub_ref(rhs);
        }
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self -= &rhs;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re, im: -self.im }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -&self.re, im: -&self.im }
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for Scalar {
    /// Exact textual form: `p/q`, `p/qi`, or `a+bi` / `a-bi`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |f: &mut fmt::Formatter<'_>, r: &Rational| -> fmt::Result {
            if r.is_one() {
                write!(f, "i")
            } else if (-r).is_one() {
                write!(f, "-i")
            } else {
                write!(f, "{r}i")
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => imag(f, &self.im),
            (false, false) => {
                write!(f, "{}", self.re)?;
                if self.im.signum() > 0 {
                    write!(f, "+")?;
                }
                imag(f, &self.im)
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = ParseRationalError;

    /// Parses the forms produced by `Display`, e.g. `3/4`, `-i`, `2/3i`, `1/2-5i`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(err());
        }
        let Some(body) = t.strip_suffix('i') else {
            return t.parse::<Rational>().map(Scalar::from_rational);
        };
        // Split at the last sign that is not the leading one.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|(_, c)| *c == '+' || *c == '-')
            .map(|(k, _)| k)
            .last();
        let (re_part, im_part) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("0", body),
        };
        let im = match im_part {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            other => other.parse::<Rational>().map_err(|_| err())?,
        };
        let re = re_part.parse::<Rational>().map_err(|_| err())?;
        Ok(Scalar { re, im })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::int(-1));
    }

    #[test]
    fn reciprocal() {
        let z = Scalar::complex(3, 4);
        assert_eq!(&z * &z.recip(), Scalar::one());
        assert_eq!(Scalar::i().recip(), -Scalar::i());
    }

    #[test]
    fn display_parse_roundtrip() {
        let cases = [
            Scalar::zero(),
            Scalar::frac(3, 4),
            Scalar::i(),
            -Scalar::i(),
            Scalar::new(Rational::new(1, 2), Rational::new(-5, 3)),
            Scalar::new(Rational::new(-7, 2), Rational::from_int(1)),
            Scalar::new(Rational::zero(), Rational::new(2, 3)),
        ];
        for z in cases {
            let s = z.to_string();
            assert_eq!(s.parse::<Scalar>().unwrap(), z, "{s}");
        }
        assert_eq!("2/4i".parse::<Scalar>().unwrap(), Scalar::new(Rational::zero(), Rational::new(1, 2)));
        assert!("1+".parse::<Scalar>().is_err());
        assert!("i/2".parse::<Scalar>().is_err());
    }
}
