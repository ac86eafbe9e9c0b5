use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::combinatorics::{factorial, partitions_at_most_k_parts};
use crate::algebra::{bareiss_solve, combine_solutions, LaurentPoly, RationalGF, DEFAULT_MAX_DIM};
use crate::error::{Error, Result};

/// One class of colorings of `K_m` with `k` colors, up to permuting
/// vertices and colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorClass {
    /// `(A_1, ..., A_k)`: the vertex set of each color. Parts are laid out
    /// as consecutive vertex runs in decreasing size, then empty sets.
    pub representative: Vec<Vec<usize>>,
    /// Number of colorings in the class.
    pub class_size: BigInt,
    /// Number of colors actually used.
    pub support: usize,
}

impl ColorClass {
    pub fn part_sizes(&self) -> Vec<usize> {
        self.representative.iter().map(Vec::len).collect()
    }

    /// Color of each vertex.
    pub fn coloring(&self) -> Vec<usize> {
        let m = self.representative.iter().map(Vec::len).sum();
        let mut out = vec![0; m];
        for (c, part) in self.representative.iter().enumerate() {
            for &v in part {
                out[v] = c;
            }
        }
        out
    }
}

fn multinomial(n: usize, parts: impl Iterator<Item = usize>) -> BigInt {
    parts.fold(factorial(n as u64), |acc, p| acc / factorial(p as u64))
}

/// Classes of `k`-colorings of `K_m`, one per partition of `m` into at
/// most `k` parts.
pub fn color_classes(m: usize, k: usize) -> Result<Vec<ColorClass>> {
    if m == 0 || k == 0 {
        return Err(Error::invalid("m and k must be at least 1"));
    }
    Ok(partitions_at_most_k_parts(m, k)
        .into_iter()
        .map(|sizes| {
            let mut representative = Vec::with_capacity(k);
            let mut next = 0;
            for &s in &sizes {
                representative.push((next..next + s).collect());
                next += s;
            }
            representative.resize(k, Vec::new());

            let mut mult = vec![0usize; m + 1];
            for part in &representative {
                mult[part.len()] += 1;
            }
            let class_size =
                multinomial(m, sizes.iter().copied()) * multinomial(k, mult.into_iter());
            ColorClass {
                representative,
                class_size,
                support: sizes.len(),
            }
        })
        .collect())
}

/// The reduced system for `K_m x P_n`: `t = x (base + matrix t)` over class
/// representatives, and `T = x * sum out_i t_i`.
#[derive(Clone, Debug)]
pub struct KmSystem {
    pub classes: Vec<ColorClass>,
    /// Row = class of the new slice, column = class of the previous one.
    pub matrix: Vec<Vec<LaurentPoly>>,
    pub base: Vec<LaurentPoly>,
    pub out: Vec<BigInt>,
}

const MAX_CLASS_ENUMERATION: u128 = 1 << 22;

/// Builds the system by summing over every coloring `B` of the previous
/// slice: a color of the new slice opens a new block exactly when none of
/// its vertices had the same color before.
pub fn km_transfer_system(m: usize, k: usize) -> Result<KmSystem> {
    let classes = color_classes(m, k)?;
    if classes.len() > DEFAULT_MAX_DIM {
        return Err(Error::DimensionLimit {
            dim: classes.len(),
            limit: DEFAULT_MAX_DIM,
        });
    }
    let total = (k as u128)
        .checked_pow(m as u32)
        .filter(|&t| t <= MAX_CLASS_ENUMERATION)
        .ok_or_else(|| Error::CapExceeded {
            what: "colorings of the complete slice",
            needed: format!("{k}^{m}"),
            cap: MAX_CLASS_ENUMERATION.to_string(),
            hint: "use fewer colors or a smaller slice",
        })? as u64;

    let shapes: Vec<Vec<usize>> = classes
        .iter()
        .map(|c| c.part_sizes().into_iter().filter(|&s| s > 0).collect())
        .collect();
    let reps: Vec<Vec<usize>> = classes.iter().map(ColorClass::coloring).collect();
    let dim = classes.len();
    // counts[a][b][e]: colorings in class b with e new blocks after rep a
    let mut counts = vec![vec![vec![0u64; k + 1]; dim]; dim];

    let mut b = vec![0usize; m];
    let mut sizes = vec![0usize; k];
    for _ in 0..total {
        sizes.iter_mut().for_each(|s| *s = 0);
        for &c in &b {
            sizes[c] += 1;
        }
        let mut shape: Vec<usize> = sizes.iter().copied().filter(|&s| s > 0).collect();
        shape.sort_unstable_by(|x, y| y.cmp(x));
        let col = shapes
            .iter()
            .position(|s| *s == shape)
            .expect("every shape is a class");
        for (row, a) in reps.iter().enumerate() {
            let mut used = vec![false; k];
            let mut joined = vec![false; k];
            for v in 0..m {
                used[a[v]] = true;
                if a[v] == b[v] {
                    joined[a[v]] = true;
                }
            }
            let fresh = (0..k).filter(|&c| used[c] && !joined[c]).count();
            counts[row][col][fresh] += 1;
        }
        for d in b.iter_mut() {
            *d += 1;
            if *d < k {
                break;
            }
            *d = 0;
        }
    }

    let matrix = counts
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|by_e| {
                    LaurentPoly::from_y_coeffs(
                        0,
                        by_e.into_iter().map(|c| BigRational::from(BigInt::from(c))),
                    )
                })
                .collect()
        })
        .collect();
    let base = classes
        .iter()
        .map(|c| LaurentPoly::y_pow(c.support as i32))
        .collect();
    let out = classes.iter().map(|c| c.class_size.clone()).collect();
    Ok(KmSystem {
        classes,
        matrix,
        base,
        out,
    })
}

/// Generating function `sum_n x^n sum_T y^blocks(T)` of `K_m x P_n`.
pub fn km_prism_gf(m: usize, k: usize) -> Result<RationalGF> {
    let sys = km_transfer_system(m, k)?;
    let sols = bareiss_solve(&sys.matrix, &sys.base, DEFAULT_MAX_DIM)?;
    let weights: Vec<LaurentPoly> = sys
        .out
        .iter()
        .map(|c| LaurentPoly::from(c.clone()))
        .collect();
    combine_solutions(&sols, &weights)
}
