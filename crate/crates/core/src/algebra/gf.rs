use std::fmt;

use num_rational::BigRational;

use super::poly::LaurentPoly;
use crate::error::{Error, Result};

/// A bivariate generating function `num / den`, kept unreduced.
#[derive(Clone, Debug)]
pub struct RationalGF {
    pub num: LaurentPoly,
    pub den: LaurentPoly,
}

impl RationalGF {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero(
                "generating function with zero denominator",
            ));
        }
        Ok(Self { num, den })
    }

    /// Cross-multiplication equality: `a.num * b.den == b.num * a.den`.
    pub fn equivalent(&self, other: &RationalGF) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    /// Coefficients of `x^0 .. x^n` as polynomials in `y`.
    ///
    /// Uses `c_n = p_n - sum_{i>=1} q_i c_{n-i}`, which requires the x^0
    /// slice of the denominator to be exactly 1.
    pub fn series(&self, n: usize) -> Result<Vec<LaurentPoly>> {
        let q = self.den.x_slices();
        if q.is_empty() || !q[0].is_one() {
            return Err(Error::SeriesPrecondition);
        }
        let p = self.num.x_slices();
        let mut out: Vec<LaurentPoly> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut c = p.get(i).cloned().unwrap_or_default();
            for (j, qj) in q.iter().enumerate().take(i + 1).skip(1) {
                if !qj.is_zero() && !out[i - j].is_zero() {
                    c -= &(qj * &out[i - j]);
                }
            }
            out.push(c);
        }
        Ok(out)
    }

    /// Substitutes a value for `y` in numerator and denominator.
    pub fn eval_y(&self, y0: &BigRational) -> Result<RationalGF> {
        RationalGF::new(self.num.eval_y(y0)?, self.den.eval_y(y0)?)
    }
}

/// Free-function form of [`RationalGF::equivalent`].
pub fn gf_equal(a: &RationalGF, b: &RationalGF) -> bool {
    a.equivalent(b)
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> LaurentPoly {
        LaurentPoly::x()
    }

    #[test]
    fn geometric_series() {
        let gf = RationalGF::new(x(), 1 - x()).unwrap();
        let s = gf.series(3).unwrap();
        assert!(s[0].is_zero());
        for c in &s[1..] {
            assert!(c.is_one());
        }
    }

    #[test]
    fn rejects_non_unit_constant_term() {
        let gf = RationalGF::new(x(), 2 - x()).unwrap();
        assert_eq!(gf.series(2), Err(Error::SeriesPrecondition));
        let gf = RationalGF::new(x(), LaurentPoly::y() - x()).unwrap();
        assert_eq!(gf.series(2), Err(Error::SeriesPrecondition));
    }

    #[test]
    fn equality_by_cross_multiplication() {
        let p = x() * LaurentPoly::y() + 1;
        let q = 1 - x() * 3;
        let a = RationalGF::new(p.clone(), q.clone()).unwrap();
        let b = RationalGF::new(2 * p, 2 * q).unwrap();
        assert!(gf_equal(&a, &b));
        let c = RationalGF::new(x(), 1 - x()).unwrap();
        let d = RationalGF::new(x() + x().pow(2), (1 - x()) * (1 + x())).unwrap();
        assert!(gf_equal(&c, &d));
        assert!(!gf_equal(&a, &c));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RationalGF::new(x(), LaurentPoly::zero()).is_err());
    }
}
