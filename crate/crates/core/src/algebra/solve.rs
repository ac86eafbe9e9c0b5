//! Fraction-free solution of `(I - xM) t = b` over polynomials in `x` and
//! Laurent polynomials in `y`.

use std::cmp::Ordering;

use super::gf::RationalGF;
use super::poly::LaurentPoly;
use crate::error::{Error, Result};

pub const DEFAULT_MAX_DIM: usize = 12;

/// Solves `t = b + x M t`, i.e. `(I - xM) t = b`.
///
/// Every returned entry shares the denominator `det(I - xM)`. Rows are first
/// multiplied by a power of `y` to clear negative exponents, then reduced by
/// Bareiss elimination with exact division, then solved by fraction-free back
/// substitution. The row scaling is undone at the end.
pub fn bareiss_solve(
    m: &[Vec<LaurentPoly>],
    b: &[LaurentPoly],
    max_dim: usize,
) -> Result<Vec<RationalGF>> {
    let n = m.len();
    if n > max_dim {
        return Err(Error::DimensionLimit {
            dim: n,
            limit: max_dim,
        });
    }
    if b.len() != n || m.iter().any(|row| row.len() != n) {
        return Err(Error::invalid(
            "matrix must be square and match the right-hand side",
        ));
    }
    if n == 0 {
        return Ok(Vec::new());
    }

    let x = LaurentPoly::x();
    let mut a: Vec<Vec<LaurentPoly>> = Vec::with_capacity(n);
    let mut rhs: Vec<LaurentPoly> = Vec::with_capacity(n);
    let mut y_shift_total: i32 = 0;
    for (i, row) in m.iter().enumerate() {
        let mut r: Vec<LaurentPoly> = row.iter().map(|e| -(&x * e)).collect();
        r[i] += &LaurentPoly::one();
        let low = r
            .iter()
            .chain(std::iter::once(&b[i]))
            .filter_map(LaurentPoly::min_y)
            .min()
            .unwrap_or(0);
        let s = (-low).max(0);
        if s > 0 {
            r = r.iter().map(|e| e.shift(0, s)).collect();
        }
        y_shift_total += s;
        rhs.push(b[i].shift(0, s));
        a.push(r);
    }

    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n {
        let pivot = (k..n)
            .filter(|&i| !a[i][k].is_zero())
            .min_by(|&i, &j| pivot_order(&a[i][k], &a[j][k]).then(i.cmp(&j)))
            .ok_or(Error::SingularSystem)?;
        if pivot != k {
            a.swap(pivot, k);
            rhs.swap(pivot, k);
            negate = !negate;
        }
        for i in (k + 1)..n {
            let aik = std::mem::take(&mut a[i][k]);
            for j in (k + 1)..n {
                let t = &(&a[k][k] * &a[i][j]) - &(&aik * &a[k][j]);
                a[i][j] = t.div_exact(&prev)?;
            }
            let t = &(&a[k][k] * &rhs[i]) - &(&aik * &rhs[k]);
            rhs[i] = t.div_exact(&prev)?;
        }
        prev = a[k][k].clone();
    }

    // prev is now the determinant of the row-swapped, row-scaled matrix.
    let det = prev;
    let mut numer = vec![LaurentPoly::zero(); n];
    for i in (0..n).rev() {
        let mut acc = &det * &rhs[i];
        for j in (i + 1)..n {
            acc -= &(&a[i][j] * &numer[j]);
        }
        numer[i] = acc.div_exact(&a[i][i])?;
    }

    // Undo the y scaling and the sign of the row swaps so the common
    // denominator is exactly det(I - xM).
    let unscale = |p: &LaurentPoly| {
        let p = p.shift(0, -y_shift_total);
        if negate {
            -p
        } else {
            p
        }
    };
    let den = unscale(&det);
    numer
        .iter()
        .map(|num| RationalGF::new(unscale(num), den.clone()))
        .collect()
}

/// Lowest total degree first, then term-map order.
fn pivot_order(a: &LaurentPoly, b: &LaurentPoly) -> Ordering {
    a.total_degree()
        .cmp(&b.total_degree())
        .then_with(|| a.len().cmp(&b.len()))
        .then_with(|| a.cmp_terms(b))
}

/// `x * sum_i w_i t_i` for solutions sharing one denominator, as returned by
/// [`bareiss_solve`].
pub fn combine_solutions(sols: &[RationalGF], weights: &[LaurentPoly]) -> Result<RationalGF> {
    if sols.len() != weights.len() {
        return Err(Error::LengthMismatch {
            expected: sols.len(),
            got: weights.len(),
        });
    }
    let Some(first) = sols.first() else {
        return RationalGF::new(LaurentPoly::zero(), LaurentPoly::one());
    };
    let mut num = LaurentPoly::zero();
    for (s, w) in sols.iter().zip(weights) {
        if s.den != first.den {
            return Err(Error::invalid("solutions do not share a denominator"));
        }
        num += &(w * &s.num);
    }
    RationalGF::new(num.shift(1, 0), first.den.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y() -> LaurentPoly {
        LaurentPoly::y()
    }

    fn check_solution(m: &[Vec<LaurentPoly>], b: &[LaurentPoly], t: &[RationalGF]) {
        // (I - xM) t - b = 0 after multiplying through by the common denominator.
        let x = LaurentPoly::x();
        let den = &t[0].den;
        for i in 0..m.len() {
            let mut lhs = t[i].num.clone();
            for j in 0..m.len() {
                lhs -= &(&(&x * &m[i][j]) * &t[j].num);
            }
            assert_eq!(lhs, &b[i] * den, "row {i}");
        }
    }

    #[test]
    fn trivial_systems() {
        let t = bareiss_solve(&[vec![LaurentPoly::zero()]], &[y()], 12).unwrap();
        assert!(t[0].den.is_one());
        assert_eq!(t[0].num, y());

        let t = bareiss_solve(&[vec![LaurentPoly::one()]], &[y()], 12).unwrap();
        let expect = RationalGF::new(y(), 1 - LaurentPoly::x()).unwrap();
        assert!(t[0].equivalent(&expect));
        assert_eq!(t[0].den, 1 - LaurentPoly::x());
    }

    #[test]
    fn laurent_entries_and_pivoting() {
        let m = vec![
            vec![LaurentPoly::y_pow(-2) + 1, 3 * y()],
            vec![LaurentPoly::from(2), LaurentPoly::y_pow(-1)],
        ];
        let b = vec![y().pow(2), LaurentPoly::zero()];
        let t = bareiss_solve(&m, &b, 12).unwrap();
        check_solution(&m, &b, &t);
        assert!(t[0].den.x_coeff(0).is_one());
    }

    #[test]
    fn dimension_limit() {
        let m = vec![vec![LaurentPoly::zero(); 3]; 3];
        let b = vec![LaurentPoly::zero(); 3];
        assert_eq!(
            bareiss_solve(&m, &b, 2).unwrap_err(),
            Error::DimensionLimit { dim: 3, limit: 2 }
        );
    }

    #[test]
    fn denominator_is_unit_at_x_zero() {
        // det(I - xM) reduces to det(I) = 1 at x = 0 for every M, so the
        // output always satisfies the series precondition.
        let m = vec![
            vec![y() + 1, LaurentPoly::y_pow(-3), LaurentPoly::zero()],
            vec![LaurentPoly::from(4), LaurentPoly::zero(), y().pow(2)],
            vec![LaurentPoly::one(), 2 * y(), LaurentPoly::y_pow(-1)],
        ];
        let b = vec![y(), LaurentPoly::zero(), y().pow(3)];
        let t = bareiss_solve(&m, &b, 12).unwrap();
        check_solution(&m, &b, &t);
        assert!(t[0].den.x_coeff(0).is_one());
        assert!(t[1].series(4).is_ok());
    }
}
