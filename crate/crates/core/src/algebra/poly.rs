use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Anything usable as an exact coefficient.
pub trait Coefficient {
    fn into_rational(self) -> BigRational;
}

impl Coefficient for BigRational {
    fn into_rational(self) -> BigRational {
        self
    }
}

impl Coefficient for BigInt {
    fn into_rational(self) -> BigRational {
        BigRational::from(self)
    }
}

macro_rules! int_coefficient {
    ($($t:ty),*) => {$(
        impl Coefficient for $t {
            fn into_rational(self) -> BigRational {
                BigRational::from(BigInt::from(self))
            }
        }
    )*};
}
int_coefficient!(i32, i64, u32, u64, usize);

/// Exponent pair `(x, y)`. The x exponent is never negative; y may be.
pub type Monomial = (u32, i32);

/// Sparse polynomial in `x` and `y` over the rationals, with Laurent
/// exponents allowed in `y`.
///
/// Zero coefficients are never stored, so structural equality of the term
/// maps is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: impl Coefficient) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: impl Coefficient, x_exp: u32, y_exp: i32) -> Self {
        let c = c.into_rational();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((x_exp, y_exp), c);
        }
        Self { terms }
    }

    pub fn x() -> Self {
        Self::monomial(BigRational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(BigRational::one(), 0, 1)
    }

    /// `y^e` for any integer `e`.
    pub fn y_pow(e: i32) -> Self {
        Self::monomial(BigRational::one(), 0, e)
    }

    /// Builds a polynomial from `(x_exp, y_exp, coefficient)` triples,
    /// summing repeated monomials.
    pub fn from_terms<C, I>(terms: I) -> Self
    where
        C: Coefficient,
        I: IntoIterator<Item = (u32, i32, C)>,
    {
        let mut p = Self::zero();
        for (xe, ye, c) in terms {
            p.add_term((xe, ye), c.into_rational());
        }
        p
    }

    /// Polynomial in `y` alone from its coefficient list, lowest power first.
    pub fn from_y_coeffs<C: Coefficient>(lowest: i32, coeffs: impl IntoIterator<Item = C>) -> Self {
        Self::from_terms(
            coeffs
                .into_iter()
                .enumerate()
                .map(|(i, c)| (0, lowest + i as i32, c)),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending `(x, y)` order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Monomial, &BigRational)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, x_exp: u32, y_exp: i32) -> BigRational {
        self.terms
            .get(&(x_exp, y_exp))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Largest monomial in lexicographic `(x, y)` order.
    pub fn leading(&self) -> Option<(Monomial, &BigRational)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    /// Smallest monomial in lexicographic `(x, y)` order.
    pub fn trailing(&self) -> Option<(Monomial, &BigRational)> {
        self.terms.iter().next().map(|(m, c)| (*m, c))
    }

    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.0).max()
    }

    pub fn min_x(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.0).min()
    }

    pub fn min_y(&self) -> Option<i32> {
        self.terms.keys().map(|m| m.1).min()
    }

    pub fn max_y(&self) -> Option<i32> {
        self.terms.keys().map(|m| m.1).max()
    }

    /// Maximum of `x_exp + y_exp` over the terms.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|&(x, y)| x as i64 + y as i64).max()
    }

    /// True when every term has x exponent 0.
    pub fn is_y_only(&self) -> bool {
        self.terms.keys().all(|m| m.0 == 0)
    }

    /// The coefficient of `x^i`, as a polynomial in `y`.
    pub fn x_coeff(&self, i: u32) -> LaurentPoly {
        let terms = self
            .terms
            .range((i, i32::MIN)..=(i, i32::MAX))
            .map(|(&(_, ye), c)| ((0, ye), c.clone()))
            .collect();
        LaurentPoly { terms }
    }

    /// All x-slices `[x^0]p, [x^1]p, ..., [x^d]p`.
    pub fn x_slices(&self) -> Vec<LaurentPoly> {
        let Some(d) = self.x_degree() else {
            return Vec::new();
        };
        let mut out = vec![LaurentPoly::zero(); d as usize + 1];
        for (&(xe, ye), c) in &self.terms {
            out[xe as usize].terms.insert((0, ye), c.clone());
        }
        out
    }

    /// Multiplies by the monomial `x^dx * y^dy`.
    pub fn shift(&self, dx: u32, dy: i32) -> LaurentPoly {
        let terms = self
            .terms
            .iter()
            .map(|(&(xe, ye), c)| ((xe + dx, ye + dy), c.clone()))
            .collect();
        LaurentPoly { terms }
    }

    pub fn scale(&self, s: &BigRational) -> LaurentPoly {
        if s.is_zero() {
            return LaurentPoly::zero();
        }
        let terms = self.terms.iter().map(|(m, c)| (*m, c * s)).collect();
        LaurentPoly { terms }
    }

    pub fn pow(&self, mut e: u32) -> LaurentPoly {
        let mut base = self.clone();
        let mut acc = LaurentPoly::one();
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

    /// Formal partial derivative in `y`.
    pub fn derivative_y(&self) -> LaurentPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.1 != 0)
            .map(|(&(xe, ye), c)| ((xe, ye - 1), c * BigRational::from(BigInt::from(ye))))
            .collect();
        LaurentPoly { terms }
    }

    /// Exact evaluation at `(x0, y0)`. Fails on `y0 = 0` when a negative
    /// power of `y` is present.
    pub fn eval(&self, x0: &BigRational, y0: &BigRational) -> Result<BigRational> {
        if y0.is_zero() && self.min_y().map(|m| m < 0).unwrap_or(false) {
            return Err(Error::DivisionByZero("negative power of y at y = 0"));
        }
        let mut acc = BigRational::zero();
        for (&(xe, ye), c) in &self.terms {
            acc += c * rat_pow(x0, xe as i32) * rat_pow(y0, ye);
        }
        Ok(acc)
    }

    /// Substitutes `y = y0`, leaving a polynomial in `x`.
    pub fn eval_y(&self, y0: &BigRational) -> Result<LaurentPoly> {
        if y0.is_zero() && self.min_y().map(|m| m < 0).unwrap_or(false) {
            return Err(Error::DivisionByZero("negative power of y at y = 0"));
        }
        let mut out = LaurentPoly::zero();
        for (&(xe, ye), c) in &self.terms {
            out.add_term((xe, 0), c * rat_pow(y0, ye));
        }
        Ok(out)
    }

    /// Exact quotient `self / d` in the ring of polynomials in `x` and
    /// Laurent polynomials in `y`. Fails if `d` does not divide `self`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Result<LaurentPoly> {
        let Some(((dx, dy), dc)) = d.leading() else {
            return Err(Error::DivisionByZero("polynomial division by zero"));
        };
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        if d.len() == 1 {
            let (x0, _) = self.trailing().unwrap().0;
            if x0 < dx {
                return Err(Error::InexactDivision);
            }
            let inv = dc.recip();
            let terms = self
                .terms
                .iter()
                .map(|(&(xe, ye), c)| ((xe - dx, ye - dy), c * &inv))
                .collect();
            return Ok(LaurentPoly { terms });
        }
        // Every quotient monomial lies at or above these bounds, which keeps
        // the loop finite even though y exponents are unbounded below.
        let x_floor = self.min_x().unwrap() as i64 - d.min_x().unwrap() as i64;
        let y_floor = self.min_y().unwrap() as i64 - d.min_y().unwrap() as i64;
        let lead_inv = dc.recip();
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        while let Some(((rx, ry), rc)) = rem.leading() {
            if rx < dx {
                return Err(Error::InexactDivision);
            }
            let qx = rx - dx;
            let qy = ry - dy;
            if (qx as i64) < x_floor || (qy as i64) < y_floor {
                return Err(Error::InexactDivision);
            }
            let qc = rc * &lead_inv;
            for (&(ex, ey), c) in &d.terms {
                rem.add_term((ex + qx, ey + qy), -(c * &qc));
            }
            quot.add_term((qx, qy), qc);
        }
        Ok(quot)
    }

    /// Integer coefficients of a y-only polynomial, or `None` if some
    /// coefficient is fractional or an x power is present.
    pub fn integer_y_coeffs(&self) -> Option<Vec<(i32, BigInt)>> {
        self.terms
            .iter()
            .map(|(&(xe, ye), c)| {
                if xe != 0 || !c.is_integer() {
                    None
                } else {
                    Some((ye, c.to_integer()))
                }
            })
            .collect()
    }

    /// Serializes as a map from `"i,j"` (the exponents of `x^i*y^j`) to
    /// `"num/den"` coefficient strings.
    pub fn to_json_map(&self) -> BTreeMap<String, String> {
        self.terms
            .iter()
            .map(|(&(xe, ye), c)| (format!("{xe},{ye}"), format!("{}/{}", c.numer(), c.denom())))
            .collect()
    }

    pub fn from_json_map<'a, I>(entries: I) -> Result<LaurentPoly>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut p = LaurentPoly::zero();
        for (key, value) in entries {
            let (xs, ys) = key
                .split_once(',')
                .ok_or_else(|| Error::parse(0, format!("bad exponent key {key:?}")))?;
            let xe: u32 = xs
                .parse()
                .map_err(|_| Error::parse(0, format!("bad x exponent in {key:?}")))?;
            let ye: i32 = ys
                .parse()
                .map_err(|_| Error::parse(xs.len() + 1, format!("bad y exponent in {key:?}")))?;
            p.add_term((xe, ye), parse_rational(value)?);
        }
        Ok(p)
    }

    /// Orders polynomials by their term maps; used only for deterministic
    /// tie-breaking.
    pub(crate) fn cmp_terms(&self, other: &LaurentPoly) -> Ordering {
        self.terms.iter().cmp(other.terms.iter())
    }
}

fn rat_pow(b: &BigRational, e: i32) -> BigRational {
    if e >= 0 {
        num_traits::pow(b.clone(), e as usize)
    } else {
        num_traits::pow(b.recip(), (-e) as usize)
    }
}

/// Parses `"p"` or `"p/q"` with decimal integers.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::parse(0, format!("bad rational {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::DivisionByZero("zero denominator"));
    }
    Ok(BigRational::new(n, d))
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(BigRational::from(BigInt::from(c)))
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::constant(BigRational::from(c))
    }
}

impl From<BigRational> for LaurentPoly {
    fn from(c: BigRational) -> Self {
        LaurentPoly::constant(c)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl AddAssign<LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        if self.terms.len() < rhs.terms.len() {
            let lhs = std::mem::replace(self, rhs);
            *self += &lhs;
            return;
        }
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(ax, ay), ac) in &self.terms {
            for (&(bx, by), bc) in &rhs.terms {
                out.add_term((ax + bx, ay + by), ac * bc);
            }
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
        impl $tr<i64> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: i64) -> LaurentPoly {
                (&self).$method(&LaurentPoly::from(rhs))
            }
        }
        impl $tr<i64> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: i64) -> LaurentPoly {
                self.$method(&LaurentPoly::from(rhs))
            }
        }
        impl $tr<LaurentPoly> for i64 {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&LaurentPoly::from(self)).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for i64 {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&LaurentPoly::from(self)).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

/// Renders in the plain-text polynomial syntax: `*` between factors, `^`
/// for powers and `/y^j` for negative powers of `y`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&(xe, ye), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i == 0, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            match xe {
                0 => {}
                1 => factors.push("x".into()),
                _ => factors.push(format!("x^{xe}")),
            }
            match ye {
                1 => factors.push("y".into()),
                e if e > 1 => factors.push(format!("y^{e}")),
                _ => {}
            }
            let coeff = if mag.is_integer() {
                mag.numer().to_string()
            } else {
                format!("{}/{}", mag.numer(), mag.denom())
            };
            let mut s = if factors.is_empty() || !mag.is_one() {
                factors.insert(0, coeff);
                factors.join("*")
            } else {
                factors.join("*")
            };
            match ye {
                -1 => s.push_str("/y"),
                e if e < -1 => s.push_str(&format!("/y^{}", -e)),
                _ => {}
            }
            f.write_str(&s)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    fn y() -> LaurentPoly {
        LaurentPoly::y()
    }

    #[test]
    fn add_cancels_and_identity() {
        assert!((y() + (-y())).is_zero());
        let p = 2 * y() + 2 * y().pow(2);
        assert_eq!(&p + &LaurentPoly::zero(), p);
        // ky + (k-1)ny at k = 2, n = 3
        assert_eq!(2 * y() + 3 * y(), 5 * y());
    }

    #[test]
    fn mul_examples() {
        assert_eq!((y() + 1) * (y() - 1), y().pow(2) - 1);
        let laurent = LaurentPoly::y_pow(-2) * (y().pow(2) + 1);
        assert_eq!(laurent, LaurentPoly::one() + LaurentPoly::y_pow(-2));
        let tree3 = 2 * y() * (y() + 1).pow(2);
        assert_eq!(tree3, LaurentPoly::from_y_coeffs(1, [2, 4, 2]));
    }

    #[test]
    fn pow_examples() {
        assert!((y() + 1).pow(0).is_one());
        assert_eq!((y() + 1).pow(2), LaurentPoly::from_y_coeffs(0, [1, 2, 1]));
        assert_eq!(
            (y() + 1).pow(6),
            LaurentPoly::from_y_coeffs(0, [1, 6, 15, 20, 15, 6, 1])
        );
    }

    #[test]
    fn derivative_examples() {
        let p = 2 * y() + 14 * y().pow(2);
        assert_eq!(p.derivative_y(), 2 + 28 * y());
        assert!(LaurentPoly::from(5).derivative_y().is_zero());
        assert_eq!(
            LaurentPoly::y_pow(-1).derivative_y(),
            -LaurentPoly::y_pow(-2)
        );
    }

    #[test]
    fn eval_examples() {
        let p = 2 * y() + 14 * y().pow(2);
        assert_eq!(p.eval(&r(7), &r(1)).unwrap(), r(16));
        assert_eq!(LaurentPoly::zero().eval(&r(3), &r(5)).unwrap(), r(0));
        assert!(matches!(
            LaurentPoly::y_pow(-1).eval(&r(1), &r(0)),
            Err(Error::DivisionByZero(_))
        ));
    }

    #[test]
    fn exact_division() {
        let a = (y() + 1) * (LaurentPoly::x() - y());
        assert_eq!(a.div_exact(&(y() + 1)).unwrap(), LaurentPoly::x() - y());
        assert_eq!(
            (y() + 1).div_exact(&LaurentPoly::y_pow(2)).unwrap(),
            LaurentPoly::y_pow(-1) + LaurentPoly::y_pow(-2)
        );
        assert_eq!(
            (y().pow(2) + 1).div_exact(&(y() + 1)),
            Err(Error::InexactDivision)
        );
        let lp = LaurentPoly::y_pow(-3) + LaurentPoly::x();
        let d = LaurentPoly::y_pow(-1) - LaurentPoly::x() * y();
        assert_eq!((&lp * &d).div_exact(&d).unwrap(), lp);
    }

    #[test]
    fn display_forms() {
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        let p = LaurentPoly::from_terms([(0, -2, 1), (0, 0, 1), (1, 1, -3), (2, 0, 1)]);
        assert_eq!(p.to_string(), "1/y^2 + 1 - 3*x*y + x^2");
        let q = LaurentPoly::from_terms([(0, -1, BigRational::new(3.into(), 2.into()))]);
        assert_eq!(q.to_string(), "3/2/y");
    }

    #[test]
    fn json_map_roundtrip() {
        let p = LaurentPoly::from_terms([(0, -2, 1), (3, 1, -7)])
            .scale(&BigRational::new(1.into(), 3.into()));
        let m = p.to_json_map();
        assert_eq!(m.get("3,1").unwrap(), "-7/3");
        let back =
            LaurentPoly::from_json_map(m.iter().map(|(k, v)| (k.as_str(), v.as_str()))).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn slices_and_shift() {
        let p = LaurentPoly::from_terms([(0, 0, 1), (2, 1, 3), (2, -1, 2)]);
        let s = p.x_slices();
        assert_eq!(s.len(), 3);
        assert!(s[1].is_zero());
        assert_eq!(s[2], LaurentPoly::from_terms([(0, 1, 3), (0, -1, 2)]));
        assert_eq!(p.x_coeff(2), s[2]);
        assert_eq!(p.shift(1, -1).coeff(3, -2), r(2));
    }
}
