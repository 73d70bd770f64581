//! Exact rational functions in one variable `z` over the integers.

mod parse;
mod poly;

pub use parse::parse_ratfunc;
pub use poly::IntPoly;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// `num / den` in lowest terms: no common polynomial factor, the joint
/// content of all coefficients is 1, and the lowest-order nonzero
/// coefficient of `den` is positive. Zero is `0 / 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides numerator"), den.div_exact(&g).expect("gcd divides denominator"))
        };
        let mut c = num.content().gcd(&den.content());
        if den.trailing().is_some_and(Signed::is_negative) {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_scalar(&c);
            den = den.div_scalar(&c);
        }
        RatFunc { num, den }
    }

    pub fn zero() -> Self {
        RatFunc { num: IntPoly::zero(), den: IntPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(IntPoly::one())
    }

    pub fn from_poly(p: IntPoly) -> Self {
        Self::normalized(p, IntPoly::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(IntPoly::constant(BigInt::from(c)))
    }

    /// `z^d`.
    pub fn z_power(d: usize) -> Self {
        Self::from_poly(IntPoly::monomial(BigInt::one(), d))
    }

    /// `z^d / (1 - z^d)`.
    pub fn geometric_tail(d: usize) -> Self {
        let one = IntPoly::one();
        let zd = IntPoly::monomial(BigInt::one(), d);
        Self::normalized(zd.clone(), &one - &zd)
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        Self::normalized(self.num.pow(e), self.den.pow(e))
    }

    /// `f(z^j)`.
    pub fn substitute_z_power(&self, j: usize) -> RatFunc {
        if j == 1 {
            return self.clone();
        }
        Self::normalized(self.num.substitute_power(j), self.den.substitute_power(j))
    }

    /// Maclaurin coefficients of `z^0 ..= z^n_max`.
    pub fn series(&self, n_max: usize) -> Result<Vec<BigRational>> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::PoleAtZero);
        }
        let dens = self.den.coeffs();
        let mut out: Vec<BigRational> = Vec::with_capacity(n_max + 1);
        let d0 = BigRational::from_integer(d0);
        for n in 0..=n_max {
            let mut acc = BigRational::from_integer(self.num.coeff(n));
            for (j, dj) in dens.iter().enumerate().skip(1).take(n) {
                if !dj.is_zero() {
                    acc -= &out[n - j] * BigRational::from_integer(dj.clone());
                }
            }
            out.push(acc / &d0);
        }
        Ok(out)
    }

    /// As [`series`](Self::series) but requiring integer coefficients.
    pub fn integer_series(&self, n_max: usize) -> Result<Vec<BigInt>> {
        self.series(n_max)?
            .into_iter()
            .enumerate()
            .map(|(i, c)| if c.is_integer() { Ok(c.to_integer()) } else { Err(Error::NonIntegralSeries(i)) })
            .collect()
    }
}

/// Equality of canonical forms.
pub fn rf_equal(a: &RatFunc, b: &RatFunc) -> bool {
    a == b
}

impl std::ops::Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::normalized(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl std::ops::Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl std::ops::Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl std::ops::Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl IntPoly {
    fn is_one(&self) -> bool {
        self.degree() == Some(0) && self.coeff(0).is_one()
    }
}

impl FromStr for RatFunc {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_ratfunc(s)
    }
}

/// Wire form: coefficient lists in increasing degree, as decimal strings.
#[derive(Serialize, Deserialize)]
struct Wire {
    num: Vec<String>,
    den: Vec<String>,
}

fn to_strings(p: &IntPoly) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

fn from_strings(v: &[String]) -> std::result::Result<IntPoly, String> {
    v.iter()
        .map(|s| s.parse::<BigInt>().map_err(|e| format!("{s:?}: {e}")))
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(IntPoly::from_coeffs)
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Wire { num: to_strings(&self.num), den: to_strings(&self.den) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let w = Wire::deserialize(d)?;
        let num = from_strings(&w.num).map_err(D::Error::custom)?;
        let den = from_strings(&w.den).map_err(D::Error::custom)?;
        RatFunc::new(num, den).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    fn ints(f: &RatFunc, n: usize) -> Vec<i64> {
        f.integer_series(n).unwrap().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn arithmetic_examples() {
        let a = rf("z/(1-z)");
        assert_eq!(&a + &a, rf("2*z/(1-z)"));
        assert!((&a - &a).is_zero());
        let prod = &rf("1/(1-z)") * &rf("1/(1-z^2)");
        assert_eq!(prod.den(), &IntPoly::from_i64s(&[1, -1, -1, 1]));
        assert_eq!(ints(&prod, 6), vec![1, 1, 2, 2, 3, 3, 4]);
        assert!(rf_equal(&prod, &rf("1/((1-z^2)*(1-z))")));
        assert!(!rf_equal(&a, &(&a + &RatFunc::one())));
        assert_eq!(a.checked_div(&RatFunc::zero()), Err(Error::DivisionByZero));
        assert_eq!(RatFunc::new(IntPoly::one(), IntPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn normal_form() {
        let f = rf("(2 - 2*z)/(-4 + 4*z^2)");
        assert_eq!(f, rf("-1/(2 + 2*z)"));
        assert_eq!(f.den().coeff(0), BigInt::from(2));
        assert_eq!(f.num().coeff(0), BigInt::from(-1));
        let g = rf("z^3/(z^2 - z^3)");
        assert_eq!(g, rf("z/(1-z)"));
        assert_eq!(RatFunc::normalized(f.num().clone(), f.den().clone()), f);
    }

    #[test]
    fn series_examples() {
        assert_eq!(ints(&rf("1/(1-z)"), 5), vec![1; 6]);
        assert_eq!(ints(&rf("z/(1-z)^2"), 5), vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(rf("1/z").series(3), Err(Error::PoleAtZero));
        assert_eq!(rf("1/(2-z)").integer_series(3), Err(Error::NonIntegralSeries(0)));
        let s = rf("1/(2-z)").series(2).unwrap();
        assert_eq!(s[2], BigRational::new(1.into(), 8.into()));
    }

    #[test]
    fn substitution_dilates_series() {
        let f = rf("(1 + 3*z)/(1 - z - z^2)");
        assert_eq!(f.substitute_z_power(1), f);
        assert_eq!(rf("z/(1-z)").substitute_z_power(2), rf("z^2/(1-z^2)"));
        for j in 2..=4 {
            let base = ints(&f, 30 / j);
            let dilated = ints(&f.substitute_z_power(j), 30);
            for (n, c) in dilated.iter().enumerate() {
                let want = if n % j == 0 { base[n / j] } else { 0 };
                assert_eq!(*c, want);
            }
        }
    }

    #[test]
    fn product_series_is_convolution() {
        let f = rf("(1+z)/(1-2*z+z^3)");
        let g = rf("1/(1-z-z^4)");
        let (sf, sg, sfg) = (ints(&f, 25), ints(&g, 25), ints(&(&f * &g), 25));
        for n in 0..=25 {
            let conv: i64 = (0..=n).map(|i| sf[i] * sg[n - i]).sum();
            assert_eq!(sfg[n], conv);
        }
    }

    #[test]
    fn wire_round_trip() {
        let f = rf("-z*(z^7 - 2*z^5 + z^3 + z^2 - z - 1)/((z - 1)^4*(z + 1)^2*(z^2 + z + 1))");
        let json = serde_json::to_string(&f).unwrap();
        assert!(json.starts_with("{\"num\":[\"0\","));
        let back: RatFunc = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
        assert_eq!(rf(&f.to_string()), f);
        assert!(serde_json::from_str::<RatFunc>("{\"num\":[\"1\"],\"den\":[]}").is_err());
    }
}
