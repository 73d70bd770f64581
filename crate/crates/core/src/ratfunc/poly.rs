use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense polynomial in `z` with big-integer coefficients; `coeffs[i]` is the
/// coefficient of `z^i` and there are no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * z^d`.
    pub fn monomial(c: BigInt, d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// The lowest-order nonzero coefficient.
    pub fn trailing(&self) -> Option<&BigInt> {
        self.coeffs.iter().find(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Divides every coefficient by `c`, which must divide each of them.
    pub fn div_scalar(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x / c).collect())
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `self / content`, with a positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        self.div_scalar(&c)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// `self(z^j)`.
    pub fn substitute_power(&self, j: usize) -> Self {
        assert!(j > 0, "substitution exponent must be positive");
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len().max(1) - 1) * j + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * j] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    /// The remainder of `lc(b)^(deg a - deg b + 1) * a` on division by `b`.
    pub fn pseudo_rem(&self, b: &IntPoly) -> Self {
        let db = b.degree().expect("pseudo-remainder by zero polynomial");
        let lb = b.leading().unwrap().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading().unwrap().clone();
            let shifted = Self::monomial(lr, dr - db);
            r = &r.scale(&lb) - &(&shifted * b);
        }
        r
    }

    /// Exact quotient `self / b`, or `None` if `b` does not divide `self` over the integers.
    pub fn div_exact(&self, b: &IntPoly) -> Option<Self> {
        let db = b.degree()?;
        let lb = b.leading().unwrap();
        let mut r = self.coeffs.clone();
        if r.len() < b.coeffs.len() {
            return r.iter().all(Zero::is_zero).then(Self::zero);
        }
        let mut q = vec![BigInt::zero(); r.len() - db];
        for i in (0..q.len()).rev() {
            let top = &r[i + db];
            if top.is_zero() {
                continue;
            }
            let (qi, rem) = top.div_rem(lb);
            if !rem.is_zero() {
                return None;
            }
            for (k, bc) in b.coeffs.iter().enumerate() {
                r[i + k] -= &qi * bc;
            }
            q[i] = qi;
        }
        r.iter().all(Zero::is_zero).then(|| Self::from_coeffs(q))
    }

    /// Primitive gcd with positive leading coefficient (primitive remainder sequence).
    pub fn gcd(&self, other: &IntPoly) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    pub fn eval_i64(&self, z: i64) -> BigInt {
        let z = BigInt::from(z);
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * &z + c)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

/// Expanded form in decreasing degree, e.g. `-z^7 + 2*z^5 - 1`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match (d, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match d {
                0 => {}
                1 => write!(f, "z")?,
                _ => write!(f, "z^{d}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn arithmetic_and_display() {
        let a = p(&[1, -1]);
        let b = p(&[1, 1]);
        assert_eq!(&a * &b, p(&[1, 0, -1]));
        assert_eq!(&a + &b, p(&[2]));
        assert_eq!(&a - &a, IntPoly::zero());
        assert_eq!(p(&[-1, 0, 2, 0, 0, 0, 0, -1]).to_string(), "-z^7 + 2*z^2 - 1");
        assert_eq!(p(&[0, 1]).to_string(), "z");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(p(&[1, 1]).pow(3), p(&[1, 3, 3, 1]));
        assert_eq!(p(&[0, 1, 2]).substitute_power(3), p(&[0, 0, 0, 1, 0, 0, 2]));
        assert_eq!(p(&[1, 2, 3]).eval_i64(2), BigInt::from(17));
    }

    #[test]
    fn gcd_and_exact_division() {
        let f = &p(&[1, -1]) * &p(&[2, 0, 1]);
        let g = &p(&[1, -1]).pow(2) * &p(&[3, 5]);
        assert_eq!(f.gcd(&g), p(&[-1, 1]));
        assert_eq!(p(&[6, 12]).gcd(&p(&[4, 8])), p(&[1, 2]));
        assert_eq!(p(&[3]).gcd(&p(&[0, 5])), p(&[1]));
        assert_eq!(f.div_exact(&p(&[1, -1])), Some(p(&[2, 0, 1])));
        assert_eq!(p(&[1, 0, 1]).div_exact(&p(&[1, 1])), None);
        assert_eq!(p(&[2, 4]).div_exact(&p(&[4])), None);
        assert_eq!(p(&[6, -9]).content(), BigInt::from(3));
        assert_eq!(p(&[6, -9]).primitive_part(), p(&[-2, 3]));
    }
}
