//! Ground truth by enumeration of every k-coloring.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::{int, LaurentPoly};
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::union_find::UnionFind;

/// Default bound on the number of colorings enumerated.
pub const DEFAULT_ENUMERATION_CAP: u128 = 1 << 24;

/// The polynomial `sum_T y^(blocks of T)` over all k-colored partitions of a
/// fixed graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDistribution {
    poly: LaurentPoly,
    vertex_count: usize,
    k: u32,
}

impl BlockDistribution {
    /// Wraps a y-only polynomial. Fails when an x power is present.
    pub fn new(poly: LaurentPoly, vertex_count: usize, k: u32) -> Result<Self> {
        if !poly.is_y_only() {
            return Err(Error::invalid("block distribution must not involve x"));
        }
        Ok(Self {
            poly,
            vertex_count,
            k,
        })
    }

    /// From `counts[i]` = number of colorings with `i` blocks.
    pub fn from_counts<C: Into<BigInt> + Clone>(counts: &[C], vertex_count: usize, k: u32) -> Self {
        let poly = LaurentPoly::from_terms(
            counts
                .iter()
                .enumerate()
                .map(|(i, c)| (0, i as i32, BigRational::from(c.clone().into()))),
        );
        Self {
            poly,
            vertex_count,
            k,
        }
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of partitions with exactly `i` blocks.
    pub fn coefficient(&self, i: i32) -> BigInt {
        self.poly.coeff(0, i).to_integer()
    }

    /// `(blocks, count)` pairs with nonzero count, ascending.
    pub fn coefficients(&self) -> Vec<(i32, BigInt)> {
        self.poly
            .terms()
            .map(|((_, ye), c)| (ye, c.to_integer()))
            .collect()
    }

    /// Value at `y = 1`; equals `k^vertex_count`.
    pub fn total(&self) -> BigInt {
        self.poly.terms().map(|(_, c)| c.to_integer()).sum()
    }

    pub fn min_blocks(&self) -> Option<i32> {
        self.poly.min_y()
    }

    pub fn max_blocks(&self) -> Option<i32> {
        self.poly.max_y()
    }

    /// Mean block count under uniform colorings.
    pub fn expected(&self) -> BigRational {
        expected_blocks(self)
    }
}

/// `(d/dy B)(1) / k^|V|`, exact.
pub fn expected_blocks(d: &BlockDistribution) -> BigRational {
    let weighted: BigInt = d
        .poly
        .terms()
        .map(|((_, ye), c)| c.to_integer() * BigInt::from(ye))
        .sum();
    let total = num_traits::pow(BigInt::from(d.k), d.vertex_count);
    if total.is_zero() {
        return BigRational::zero();
    }
    BigRational::new(weighted, total)
}

/// Number of maximal monochromatic connected components.
pub fn block_count(g: &Graph, colors: &[u32]) -> Result<usize> {
    if colors.len() != g.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: g.vertex_count(),
            got: colors.len(),
        });
    }
    let mut uf = UnionFind::new(g.vertex_count());
    let merged = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| colors[u] == colors[v] && uf.union(u, v))
        .count();
    Ok(g.vertex_count() - merged)
}

fn coloring_total(g: &Graph, k: u32, cap: u128) -> Result<u64> {
    if k == 0 {
        return Err(Error::invalid("k must be at least 1"));
    }
    let total = (k as u128).checked_pow(g.vertex_count() as u32);
    match total {
        Some(t) if t <= cap && t <= u64::MAX as u128 => Ok(t as u64),
        _ => Err(Error::CapExceeded {
            what: "brute-force enumeration",
            needed: format!("{k}^{}", g.vertex_count()),
            cap: cap.to_string(),
            hint: "use the transfer engine for products with a path",
        }),
    }
}

/// Calls `f` on every coloring with index in `range`, where vertex 0 is the
/// least significant base-`k` digit.
fn for_each_coloring(n: usize, k: u32, range: std::ops::Range<u64>, mut f: impl FnMut(&[u32])) {
    let mut digits = vec![0u32; n];
    let mut rest = range.start;
    for d in digits.iter_mut() {
        *d = (rest % k as u64) as u32;
        rest /= k as u64;
    }
    for _ in range {
        f(&digits);
        for d in digits.iter_mut() {
            *d += 1;
            if *d < k {
                break;
            }
            *d = 0;
        }
    }
}

const CHUNK: u64 = 1 << 14;

/// Enumerates all `k^|V|` colorings with the default cap.
pub fn distribution_bruteforce(g: &Graph, k: u32) -> Result<BlockDistribution> {
    distribution_bruteforce_capped(g, k, DEFAULT_ENUMERATION_CAP)
}

/// Enumerates all `k^|V|` colorings, failing when there are more than `cap`.
pub fn distribution_bruteforce_capped(g: &Graph, k: u32, cap: u128) -> Result<BlockDistribution> {
    let total = coloring_total(g, k, cap)?;
    let n = g.vertex_count();
    let edges: Vec<(usize, usize)> = g.edges();
    let chunks = total.div_ceil(CHUNK);
    let counts = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut counts = vec![0u64; n + 1];
            let mut uf = UnionFind::new(n);
            let range = c * CHUNK..((c + 1) * CHUNK).min(total);
            for_each_coloring(n, k, range, |colors| {
                uf.reset();
                let mut blocks = n;
                for &(u, v) in &edges {
                    if colors[u] == colors[v] && uf.union(u, v) {
                        blocks -= 1;
                    }
                }
                counts[blocks] += 1;
            });
            counts
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(BlockDistribution::from_counts(&counts, n, k))
}

/// Colorings in which every edge joins different colors, by direct filter.
pub fn proper_coloring_count(g: &Graph, k: u32) -> Result<BigInt> {
    proper_coloring_count_capped(g, k, DEFAULT_ENUMERATION_CAP)
}

pub fn proper_coloring_count_capped(g: &Graph, k: u32, cap: u128) -> Result<BigInt> {
    let total = coloring_total(g, k, cap)?;
    let edges = g.edges();
    let chunks = total.div_ceil(CHUNK);
    let count: u64 = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut hits = 0u64;
            let range = c * CHUNK..((c + 1) * CHUNK).min(total);
            for_each_coloring(g.vertex_count(), k, range, |colors| {
                if edges.iter().all(|&(u, v)| colors[u] != colors[v]) {
                    hits += 1;
                }
            });
            hits
        })
        .sum();
    Ok(BigInt::from(count))
}

/// Exact `k^e` as a rational; shared by the expectation formulas.
pub(crate) fn k_pow(k: u32, e: usize) -> BigRational {
    if e == 0 {
        return BigRational::one();
    }
    int(num_traits::pow(BigInt::from(k), e))
}
