//! Closed formulas for block distributions and their expectations on
//! trees, perfect binary trees, cycles, complete graphs, complete bipartite
//! graphs and complete prisms `K_l x P_n`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::combinatorics::{binomial, factorial, partition_counts_upto, stirling2_row};
use crate::algebra::{int, RationalGF};
use crate::error::{Error, Result};
use crate::fixtures::{fixture_gf, FixtureId};
use crate::oracle::{k_pow, BlockDistribution};

fn check_k(k: u32) -> Result<()> {
    if k == 0 {
        Err(Error::invalid("k must be at least 1"))
    } else {
        Ok(())
    }
}

fn ipow(base: i64, e: u64) -> BigInt {
    num_traits::pow(BigInt::from(base), e as usize)
}

/// `k y ((k-1) y + 1)^e` with the given vertex count.
fn tree_like(k: u32, exponent: u32, vertex_count: usize) -> BlockDistribution {
    // binomial expansion: [y^(j+1)] = k C(e, j) (k-1)^j
    let e = exponent as u64;
    let mut coeffs = vec![BigInt::zero()];
    let mut binom = BigInt::one();
    let mut km1_pow = BigInt::one();
    for j in 0..=e {
        coeffs.push(BigInt::from(k) * &binom * &km1_pow);
        binom = binom * (e - j) / (j + 1);
        km1_pow *= k as u64 - 1;
    }
    BlockDistribution::from_counts(&coeffs, vertex_count, k)
}

/// Any tree on `n` vertices: `k y ((k-1) y + 1)^(n-1)`.
pub fn tree_distribution(n: usize, k: u32) -> Result<BlockDistribution> {
    check_k(k)?;
    if n == 0 {
        return Err(Error::invalid("tree needs at least one vertex"));
    }
    let e = u32::try_from(n - 1).map_err(|_| Error::invalid("tree too large"))?;
    Ok(tree_like(k, e, n))
}

/// `((k-1) n + 1) / k`.
pub fn tree_expected(n: usize, k: u32) -> Result<BigRational> {
    check_k(k)?;
    if n == 0 {
        return Err(Error::invalid("tree needs at least one vertex"));
    }
    Ok(BigRational::new(
        BigInt::from(k as u64 - 1) * BigInt::from(n) + 1,
        BigInt::from(k),
    ))
}

/// Perfect binary tree of height `h`: `k y ((k-1) y + 1)^(2^(h+1) - 2)`.
pub fn pbt_distribution(h: u32, k: u32) -> Result<BlockDistribution> {
    check_k(k)?;
    if h >= 30 {
        return Err(Error::invalid("height too large"));
    }
    let n = (1usize << (h + 1)) - 1;
    Ok(tree_like(k, (n - 1) as u32, n))
}

/// `(k + 2 (k-1) (2^h - 1)) / k`.
pub fn pbt_expected(h: u32, k: u32) -> Result<BigRational> {
    check_k(k)?;
    let pow2 = num_traits::pow(BigInt::from(2), h as usize);
    let k_big = BigInt::from(k);
    Ok(BigRational::new(
        &k_big + BigInt::from(2) * (&k_big - 1) * (pow2 - 1),
        k_big,
    ))
}

/// `f_k(n, i)`: colorings of `C_n` with exactly `i` blocks.
///
/// `k` for `i = 1`, otherwise `C(n, i) ((k-1)^i + (k-1)(-1)^i)`.
pub fn cycle_block_count(n: usize, i: usize, k: u32) -> Result<BigInt> {
    check_k(k)?;
    if n < 3 {
        return Err(Error::invalid(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    if i == 0 || i > n {
        return Ok(BigInt::zero());
    }
    if i == 1 {
        return Ok(BigInt::from(k));
    }
    let km1 = k as i64 - 1;
    let sign = if i % 2 == 0 { 1 } else { -1 };
    Ok(binomial(n as u64, i as u64) * (ipow(km1, i as u64) + BigInt::from(km1 * sign)))
}

/// `sum_i f_k(n, i) y^i`.
pub fn cycle_distribution(n: usize, k: u32) -> Result<BlockDistribution> {
    let coeffs = (0..=n)
        .map(|i| cycle_block_count(n, i, k))
        .collect::<Result<Vec<_>>>()?;
    Ok(BlockDistribution::from_counts(&coeffs, n, k))
}

/// `(k + n (k^n - k^(n-1))) / k^n`.
pub fn cycle_expected(n: usize, k: u32) -> Result<BigRational> {
    check_k(k)?;
    if n < 3 {
        return Err(Error::invalid(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    let kn = ipow(k as i64, n as u64);
    let kn1 = ipow(k as i64, n as u64 - 1);
    Ok(BigRational::new(
        BigInt::from(k) + BigInt::from(n) * (&kn - kn1),
        kn,
    ))
}

/// Closed walks of length `l` from a fixed vertex of `K_m`:
/// `((m-1)^l + (m-1)(-1)^l) / m`.
pub fn closed_walks_complete(m: u32, l: u32) -> Result<BigRational> {
    if m == 0 {
        return Err(Error::invalid("K_m needs m >= 1"));
    }
    let mm1 = m as i64 - 1;
    let sign = if l % 2 == 0 { 1 } else { -1 };
    Ok(BigRational::new(
        ipow(mm1, l as u64) + BigInt::from(mm1 * sign),
        BigInt::from(m),
    ))
}

/// Walks of length `l >= 1` between a fixed ordered pair of distinct
/// vertices of `K_m`: `((m-1)^l - (-1)^l) / m`.
pub fn open_walks_complete(m: u32, l: u32) -> Result<BigRational> {
    if m == 0 {
        return Err(Error::invalid("K_m needs m >= 1"));
    }
    if l == 0 {
        return Err(Error::invalid("open walks need length at least 1"));
    }
    let sign = if l % 2 == 0 { 1 } else { -1 };
    Ok(BigRational::new(
        ipow(m as i64 - 1, l as u64) - BigInt::from(sign),
        BigInt::from(m),
    ))
}

/// `g_k(n, i) = S(n, i) C(k, i) i!`; zero outside `1 <= i <= min(n, k)`.
pub fn complete_block_count(n: usize, i: usize, k: u32) -> Result<BigInt> {
    check_k(k)?;
    if i == 0 || i > n || i > k as usize {
        return Ok(BigInt::zero());
    }
    let s = stirling2_row(n).swap_remove(i);
    Ok(s * binomial(k as u64, i as u64) * factorial(i as u64))
}

/// `sum_i g_k(n, i) y^i`.
pub fn complete_distribution(n: usize, k: u32) -> Result<BlockDistribution> {
    check_k(k)?;
    if n == 0 {
        return Err(Error::invalid("complete graph needs at least one vertex"));
    }
    let row = stirling2_row(n);
    let coeffs: Vec<BigInt> = (0..=n)
        .map(|i| {
            if i == 0 || i > k as usize {
                BigInt::zero()
            } else {
                &row[i] * binomial(k as u64, i as u64) * factorial(i as u64)
            }
        })
        .collect();
    Ok(BlockDistribution::from_counts(&coeffs, n, k))
}

/// `k - (k-1)^n / k^(n-1)`.
pub fn complete_expected(n: usize, k: u32) -> Result<BigRational> {
    check_k(k)?;
    if n == 0 {
        return Err(Error::invalid("complete graph needs at least one vertex"));
    }
    Ok(int(k) - BigRational::new(ipow(k as i64 - 1, n as u64), ipow(k as i64, n as u64 - 1)))
}

/// Expected blocks on `K_{n,m}`.
pub fn bipartite_expected(n: usize, m: usize, k: u32) -> Result<BigRational> {
    check_k(k)?;
    if n == 0 || m == 0 {
        return Err(Error::invalid("both parts must be nonempty"));
    }
    let (n64, m64) = (n as u64, m as u64);
    let kk = k as i64;
    let kn = ipow(kk, n64);
    let km = ipow(kk, m64);
    let k1n = ipow(kk - 1, n64);
    let k1m = ipow(kk - 1, m64);
    let numer = BigInt::from(n) * &kn * &k1m
        + BigInt::from(m) * &km * &k1n
        + BigInt::from(k) * (&kn - &k1n) * (&km - &k1m);
    Ok(BigRational::new(numer, ipow(kk, n64 + m64)))
}

/// Expected blocks on `K_l x P_n`:
/// `k^(ln-(2l-1)) ((k^(2l) - (k^2-1)^l) + (k-1)^l ((k+1)^l - k^l) n) / k^(ln)`.
pub fn complete_prism_expected(l: usize, n: usize, k: u32) -> Result<BigRational> {
    check_k(k)?;
    if l == 0 || n == 0 {
        return Err(Error::invalid("K_l x P_n needs l, n >= 1"));
    }
    let kk = k as i64;
    let l64 = l as u64;
    let constant = ipow(kk, 2 * l64) - ipow(kk * kk - 1, l64);
    let slope = ipow(kk - 1, l64) * (ipow(kk + 1, l64) - ipow(kk, l64));
    let bracket = BigRational::from(constant + slope * BigInt::from(n));
    // k^(ln - (2l - 1)) / k^(ln) = k^-(2l-1)
    Ok(bracket / k_pow(k, 2 * l - 1))
}

/// `p(x, y) / q(x, y)` for `K_3 x P_n` with `k` colors.
pub fn k3_prism_gf(k: u32) -> Result<RationalGF> {
    check_k(k)?;
    fixture_gf(FixtureId::K3GenericK, Some(k))
}

/// Last-slice configurations of `K_{1,m} x P_n` with two colors:
/// `sum_{l=0}^{m} p(l)`.
pub fn star_profile_count(m: usize) -> BigInt {
    partition_counts_upto(m).into_iter().sum()
}

/// A graph family with a closed-form treatment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Any tree on `n` vertices.
    Tree {
        n: usize,
    },
    PerfectBinaryTree {
        height: u32,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    Bipartite {
        n: usize,
        m: usize,
    },
    /// `K_l x P_n`.
    CompletePrism {
        l: usize,
        n: usize,
    },
}

impl Family {
    pub fn vertex_count(&self) -> usize {
        match *self {
            Family::Tree { n } | Family::Cycle { n } | Family::Complete { n } => n,
            Family::PerfectBinaryTree { height } => (1usize << (height + 1)) - 1,
            Family::Bipartite { n, m } => n + m,
            Family::CompletePrism { l, n } => l * n,
        }
    }

    /// Closed-form distribution, where one exists. `K_l x P_n` is served
    /// for `l <= 3` (through the tree formula or the `K_3` generating
    /// function); complete bipartite graphs only have an expectation.
    pub fn distribution(&self, k: u32) -> Result<BlockDistribution> {
        match *self {
            Family::Tree { n } => tree_distribution(n, k),
            Family::PerfectBinaryTree { height } => pbt_distribution(height, k),
            Family::Cycle { n } => cycle_distribution(n, k),
            Family::Complete { n } => complete_distribution(n, k),
            Family::CompletePrism { l: 1, n } => tree_distribution(n, k),
            Family::CompletePrism { l: 2, n: 1 } => complete_distribution(2, k),
            Family::CompletePrism { l: 2, n: 2 } => cycle_distribution(4, k),
            Family::CompletePrism { l: 3, n } => {
                let coeffs = k3_prism_gf(k)?.series(n)?;
                BlockDistribution::new(coeffs[n].clone(), 3 * n, k)
            }
            _ => Err(Error::invalid(format!(
                "no closed-form distribution for {self:?}"
            ))),
        }
    }

    pub fn expected(&self, k: u32) -> Result<BigRational> {
        match *self {
            Family::Tree { n } => tree_expected(n, k),
            Family::PerfectBinaryTree { height } => pbt_expected(height, k),
            Family::Cycle { n } => cycle_expected(n, k),
            Family::Complete { n } => complete_expected(n, k),
            Family::Bipartite { n, m } => bipartite_expected(n, m, k),
            Family::CompletePrism { l, n } => complete_prism_expected(l, n, k),
        }
    }
}

/// Total `k^n` as an integer; used by callers checking normalization.
pub fn coloring_total(k: u32, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    num_traits::pow(BigInt::from(k), n)
}
