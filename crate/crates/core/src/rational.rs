//! Exact rational arithmetic on checked 128-bit integers.
//!
//! The quotient matrices and characteristic polynomials in this crate stay
//! tiny (dimension <= 5, entries bounded by a few hundred), so i128 with
//! overflow detection is sufficient; any overflow surfaces as
//! [`Error::Overflow`](crate::Error::Overflow) instead of wrapping.

use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rat {
    num: i128,
    den: i128, // always > 0, gcd(num, den) = 1
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

impl Rat {
    pub const ZERO: Rat = Rat { num: 0, den: 1 };
    pub const ONE: Rat = Rat { num: 1, den: 1 };

    pub fn new(num: i128, den: i128) -> Result<Rat> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        let g = gcd(num, den);
        let (mut num, mut den) = if g == 0 { (0, 1) } else { (num / g, den / g) };
        if den < 0 {
            num = num.checked_neg().ok_or(Error::Overflow)?;
            den = den.checked_neg().ok_or(Error::Overflow)?;
        }
        Ok(Rat { num, den })
    }

    pub fn from_int(v: i128) -> Rat {
        Rat { num: v, den: 1 }
    }

    pub fn numer(&self) -> i128 {
        self.num
    }

    pub fn denom(&self) -> i128 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    pub fn try_add(self, rhs: Rat) -> Result<Rat> {
        let g = gcd(self.den, rhs.den);
        let l = self.den.checked_mul(rhs.den / g).ok_or(Error::Overflow)?;
        let a = self.num.checked_mul(l / self.den).ok_or(Error::Overflow)?;
        let b = rhs.num.checked_mul(l / rhs.den).ok_or(Error::Overflow)?;
        Rat::new(a.checked_add(b).ok_or(Error::Overflow)?, l)
    }

    pub fn try_sub(self, rhs: Rat) -> Result<Rat> {
        self.try_add(rhs.try_neg()?)
    }

    pub fn try_mul(self, rhs: Rat) -> Result<Rat> {
        // Cross-reduce before multiplying to keep magnitudes down.
        let g1 = gcd(self.num, rhs.den);
        let g2 = gcd(rhs.num, self.den);
        let num = (self.num / g1).checked_mul(rhs.num / g2).ok_or(Error::Overflow)?;
        let den = (self.den / g2).checked_mul(rhs.den / g1).ok_or(Error::Overflow)?;
        Rat::new(num, den)
    }

    pub fn try_div(self, rhs: Rat) -> Result<Rat> {
        if rhs.num == 0 {
            return Err(Error::DivisionByZero);
        }
        self.try_mul(Rat { num: rhs.den, den: rhs.num }.normalized())
    }

    pub fn try_neg(self) -> Result<Rat> {
        Ok(Rat { num: self.num.checked_neg().ok_or(Error::Overflow)?, den: self.den })
    }

    fn normalized(self) -> Rat {
        if self.den < 0 {
            Rat { num: -self.num, den: -self.den }
        } else {
            self
        }
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // Denominators of reduced fractions built from checked ops stay well
        // inside range; compare exactly via i128 widening is unavailable, so
        // fall back to gcd-reduced cross multiplication.
        let g = gcd(self.den, other.den);
        let a = self.num * (other.den / g);
        let b = other.num * (self.den / g);
        a.cmp(&b)
    }
}

impl std::fmt::Debug for Rat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(self, f)
    }
}

impl std::fmt::Display for Rat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Monic polynomial with exact rational coefficients, stored
/// degree-descending so that `coeffs[0]` is the leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rat>,
}

impl Polynomial {
    pub fn from_coeffs_desc(coeffs: Vec<Rat>) -> Polynomial {
        assert!(!coeffs.is_empty());
        Polynomial { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs_desc(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Integer coefficient list (degree-descending) when every coefficient is
    /// integral.
    pub fn integer_coeffs(&self) -> Option<Vec<i128>> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.numer())).collect()
    }

    pub fn eval(&self, x: Rat) -> Result<Rat> {
        let mut acc = Rat::ZERO;
        for &c in &self.coeffs {
            acc = acc.try_mul(x)?.try_add(c)?;
        }
        Ok(acc)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().fold(0.0, |acc, c| acc * x + c.to_f64())
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}
