//! Published generating functions for `K_m x P_n` and `K_{1,3} x P_n`, and
//! the 7 x 7 transfer system for the star product.
//!
//! Each fixture is built from term tables below. The same data also exists
//! as plain text in `text.rs`; tests require both to agree.

mod text;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::{
    bareiss_solve, combine_solutions, parse_poly, parse_poly_with, LaurentPoly, RationalGF,
    DEFAULT_MAX_DIM,
};
use crate::error::{Error, Result};
use crate::graphs::{complete, star, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FixtureId {
    /// `K_3 x P_n`, any number of colors.
    K3GenericK,
    K4K2,
    K5K2,
    K6K2,
    /// Published as `K_4 x P_n` with three colors.
    K4K3,
    /// `K_{1,3} x P_n`, two colors, from the published `p / q`.
    Star13K2,
    /// `K_{1,3} x P_n`, two colors, by solving the published matrix system.
    Star13Matrix,
}

impl FixtureId {
    pub const ALL: [FixtureId; 7] = [
        FixtureId::K3GenericK,
        FixtureId::K4K2,
        FixtureId::K5K2,
        FixtureId::K6K2,
        FixtureId::K4K3,
        FixtureId::Star13K2,
        FixtureId::Star13Matrix,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FixtureId::K3GenericK => "K3_generic_k",
            FixtureId::K4K2 => "K4_k2",
            FixtureId::K5K2 => "K5_k2",
            FixtureId::K6K2 => "K6_k2",
            FixtureId::K4K3 => "K4_k3",
            FixtureId::Star13K2 => "STAR13_k2",
            FixtureId::Star13Matrix => "STAR13_matrix",
        }
    }

    /// The graph `G` of the product `G x P_n` the fixture claims to count.
    pub fn slice(self) -> Graph {
        let g = match self {
            FixtureId::K3GenericK => complete(3),
            FixtureId::K4K2 | FixtureId::K4K3 => complete(4),
            FixtureId::K5K2 => complete(5),
            FixtureId::K6K2 => complete(6),
            FixtureId::Star13K2 | FixtureId::Star13Matrix => star(3),
        };
        g.expect("fixed slice graph")
    }

    /// Resolves the number of colors. Only `K3_generic_k` takes `k`; the
    /// others accept it when it matches their fixed value.
    pub fn colors(self, k: Option<u32>) -> Result<u32> {
        let fixed = match self {
            FixtureId::K3GenericK => {
                return match k {
                    Some(k) if k >= 1 => Ok(k),
                    Some(_) => Err(Error::invalid("k must be at least 1")),
                    None => Err(Error::invalid("K3_generic_k needs a value for k")),
                }
            }
            FixtureId::K4K3 => 3,
            _ => 2,
        };
        match k {
            Some(k) if k != fixed => Err(Error::invalid(format!(
                "{self} is only defined for k = {fixed}"
            ))),
            _ => Ok(fixed),
        }
    }
}

impl fmt::Display for FixtureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FixtureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FixtureId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownFixture(s.to_owned()))
    }
}

type Table = &'static [(u32, &'static [(i32, i64)])];

fn from_table(t: Table) -> LaurentPoly {
    LaurentPoly::from_terms(t.iter().flat_map(|&(xe, ys)| {
        ys.iter()
            .map(move |&(ye, c)| (xe, ye, BigRational::from(BigInt::from(c))))
    }))
}

/// Polynomial in `y` from coefficients, highest power first.
fn desc(c: &[i64]) -> LaurentPoly {
    LaurentPoly::from_y_coeffs(
        0,
        c.iter().rev().map(|&v| BigRational::from(BigInt::from(v))),
    )
}

/// Polynomial in `y` from big coefficients, constant term first.
fn asc(c: Vec<BigInt>) -> LaurentPoly {
    LaurentPoly::from_y_coeffs(0, c.into_iter().map(BigRational::from))
}

fn xp(e: u32) -> LaurentPoly {
    LaurentPoly::monomial(BigRational::from(BigInt::from(1)), e, 0)
}

/// `c x y (s0 + x s1 + x^2 s2 + ...)`.
fn gf_from_slices(c: i64, num_slices: &[LaurentPoly], den: LaurentPoly) -> Result<RationalGF> {
    let mut inner = LaurentPoly::zero();
    for (i, s) in num_slices.iter().enumerate() {
        inner += &(&xp(i as u32) * s);
    }
    let num = inner.shift(1, 1) * c;
    finish(num, den)
}

fn finish(num: LaurentPoly, den: LaurentPoly) -> Result<RationalGF> {
    if !den.x_coeff(0).is_one() {
        return Err(Error::SeriesPrecondition);
    }
    RationalGF::new(num, den)
}

fn k3_generic(k: u32) -> Result<RationalGF> {
    let k = BigInt::from(k);
    let k2 = &k * &k;
    let k3 = &k2 * &k;
    let k4 = &k3 * &k;
    let n = |v: i64| BigInt::from(v);
    let one_k = n(1) - &k;
    let two_k = n(2) - &k;

    let a = asc(vec![n(1), -(n(3) * &one_k), &one_k * &two_k]);
    let b = asc(vec![
        n(4),
        -(n(13) - n(5) * &k),
        (n(3) + &k) * (n(3) - n(2) * &k),
        -(&one_k * (n(1) + (n(3) - &k) * &k)),
    ]);
    let c = asc(vec![
        n(3),
        -(n(2) + n(4) * &k),
        n(1) - &k + n(3) * &k2,
        &k2 * &one_k,
    ]);
    let d = asc(vec![
        n(3),
        -(n(2) + n(4) * &k),
        &k * (n(1) + n(2) * &k),
        &k * &one_k,
        -num_traits::pow(&k - n(1), 4),
    ]);
    let e = asc(vec![
        n(7),
        -(n(25) - n(8) * &k),
        n(20) - n(3) * &k - n(4) * &k2,
        n(5) - n(24) * &k + n(21) * &k2 - n(5) * &k3,
        -(n(7) - n(18) * &k + n(17) * &k2 - n(7) * &k3 + &k4),
    ]);
    let f = asc(vec![
        n(5),
        -(n(12) * &two_k),
        n(32) - n(26) * &k + n(6) * &k2,
        -(n(13) - n(14) * &k + n(6) * &k2 - &k3),
    ]);

    let one_y = desc(&[-1, 1]);
    let one_y2 = one_y.pow(2);
    let inner = a - &xp(1) * &(&one_y * &b) + &xp(2) * &(&one_y2 * &c);
    let num = inner.shift(1, 1).scale(&BigRational::from(k));
    let den = LaurentPoly::one() - &xp(1) * &f + &xp(2) * &(&one_y * &e) - &xp(3) * &(&one_y2 * &d);
    finish(num, den)
}

fn complete_fixture(id: FixtureId) -> Result<RationalGF> {
    let ym1 = desc(&[1, -1]);
    let p = |e: u32| ym1.pow(e);
    match id {
        FixtureId::K4K2 => gf_from_slices(
            2,
            &[
                desc(&[7, 1]),
                -(p(1) * desc(&[7, 1, -9])),
                p(2) * desc(&[8, -17, 8]),
            ],
            LaurentPoly::one() - xp(1) * desc(&[2, 4, 10]) + xp(2) * p(1) * desc(&[1, 6, 8, -17])
                - xp(3) * p(2) * desc(&[1, 6, -17, 8]),
        ),
        FixtureId::K5K2 => gf_from_slices(
            2,
            &[
                desc(&[15, 1]),
                -(p(1) * desc(&[15, -13, -21])),
                p(2) * desc(&[16, -51, 30]),
            ],
            LaurentPoly::one() - xp(1) * desc(&[2, 8, 22]) + xp(2) * p(1) * desc(&[1, 10, 2, -51])
                - xp(3) * p(2) * desc(&[1, 10, -51, 30]),
        ),
        FixtureId::K6K2 => gf_from_slices(
            2,
            &[
                desc(&[31, 1]),
                -(p(1) * desc(&[62, -103, -48])),
                p(2) * desc(&[31, -72, -125, 155]),
                -(p(3) * desc(&[32, -185, 263, -108])),
            ],
            LaurentPoly::one() - xp(1) * desc(&[3, 12, 49])
                + xp(2) * p(1) * desc(&[3, 28, -6, -203])
                - xp(3) * p(2) * desc(&[1, 16, -40, -262, 263])
                + xp(4) * p(3) * desc(&[1, 15, -167, 263, -108]),
        ),
        FixtureId::K4K3 => gf_from_slices(
            3,
            &[
                desc(&[2, 6, 1]),
                p(1) * desc(&[2, -18, 2, 4]),
                -(desc(&[2, -1]) * p(2) * desc(&[9, -8, 3])),
            ],
            LaurentPoly::one()
                - xp(1) * desc(&[2, 8, 12, 5])
                - xp(2) * p(1) * desc(&[2, -13, -25, -1, 7])
                + xp(3) * p(2) * desc(&[16, 6, -21, 14, -3]),
        ),
        _ => unreachable!("not a complete-graph fixture"),
    }
}

const STAR_NUM: Table = &[
    (1, &[(4, 2), (3, 6), (2, 6), (1, 2)]),
    (
        2,
        &[
            (7, -8),
            (6, 4),
            (5, -28),
            (4, 40),
            (3, -44),
            (2, 4),
            (1, -16),
        ],
    ),
    (
        3,
        &[
            (9, 14),
            (8, -22),
            (7, -4),
            (6, 104),
            (5, -106),
            (4, -32),
            (3, 90),
            (2, -52),
            (1, 40),
        ],
    ),
    (
        4,
        &[
            (10, -8),
            (9, -8),
            (8, 124),
            (7, -204),
            (6, 52),
            (5, 64),
            (4, 16),
            (3, -80),
            (2, 92),
            (1, -48),
        ],
    ),
    (
        5,
        &[
            (11, -10),
            (10, 4),
            (9, 110),
            (8, -268),
            (7, 112),
            (6, 384),
            (5, -662),
            (4, 468),
            (3, -120),
            (2, -48),
            (1, 30),
        ],
    ),
    (
        6,
        &[
            (11, 16),
            (10, -28),
            (9, -156),
            (8, 656),
            (7, -1028),
            (6, 708),
            (4, -316),
            (3, 168),
            (2, -12),
            (1, -8),
        ],
    ),
    (
        7,
        &[
            (11, 8),
            (10, -58),
            (9, 228),
            (8, -562),
            (7, 852),
            (6, -756),
            (5, 340),
            (4, -26),
            (3, -36),
            (2, 10),
        ],
    ),
];

const STAR_DEN: Table = &[
    (0, &[(0, 1)]),
    (1, &[(4, -1), (3, -1), (2, -1), (1, -7), (0, -9)]),
    (
        2,
        &[
            (7, 1),
            (6, 1),
            (5, 5),
            (4, 11),
            (3, -4),
            (2, -6),
            (1, 14),
            (0, 28),
        ],
    ),
    (
        3,
        &[
            (9, -1),
            (8, -3),
            (7, 1),
            (6, 5),
            (5, -22),
            (4, -11),
            (3, 7),
            (2, 54),
            (1, -18),
            (0, -44),
        ],
    ),
    (
        4,
        &[
            (9, 7),
            (8, -17),
            (7, 2),
            (6, 20),
            (5, -32),
            (4, 45),
            (3, 42),
            (2, -105),
            (1, -1),
            (0, 39),
        ],
    ),
    (
        5,
        &[
            (11, 1),
            (10, 4),
            (9, -24),
            (8, 47),
            (7, -28),
            (6, -62),
            (5, 167),
            (4, -125),
            (3, -50),
            (2, 83),
            (1, 6),
            (0, -19),
        ],
    ),
    (
        6,
        &[
            (11, 1),
            (10, -24),
            (9, 94),
            (8, -122),
            (7, -61),
            (6, 365),
            (5, -409),
            (4, 116),
            (3, 116),
            (2, -91),
            (1, 11),
            (0, 4),
        ],
    ),
    (
        7,
        &[
            (11, -3),
            (10, 23),
            (9, -74),
            (8, 95),
            (7, 45),
            (6, -289),
            (5, 355),
            (4, -183),
            (3, 18),
            (2, 18),
            (1, -5),
        ],
    ),
];

type Entry = &'static [(i32, i64)];

/// Star matrix entries as `(y exponent, coefficient)` lists.
const STAR_MATRIX: [[Entry; 7]; 7] = [
    [
        &[(4, 1), (0, 1)],
        &[(4, 3)],
        &[(4, 1)],
        &[(3, 3), (1, 3)],
        &[(3, 3)],
        &[(2, 3)],
        &[(3, 1)],
    ],
    [&[], &[(0, 1)], &[], &[], &[(1, 1)], &[(2, 1)], &[]],
    [&[], &[], &[(0, 1)], &[], &[], &[], &[(1, 1)]],
    [
        &[(2, 1), (0, 1)],
        &[(2, 3), (0, 2)],
        &[(2, 1)],
        &[(3, 1), (1, 4), (0, 1)],
        &[(3, 1), (1, 4)],
        &[(2, 3), (1, 2)],
        &[(2, 1)],
    ],
    [
        &[],
        &[(0, 1)],
        &[(0, 1)],
        &[],
        &[(0, 1)],
        &[(0, 1)],
        &[(1, 1)],
    ],
    [
        &[(0, 2)],
        &[(1, 1), (0, 5)],
        &[(1, 1), (0, 1)],
        &[(1, 3), (0, 2), (-1, 1)],
        &[(1, 3), (0, 3)],
        &[(2, 1), (1, 2), (0, 3)],
        &[(1, 2)],
    ],
    [
        &[(0, 1), (-2, 1)],
        &[(0, 3), (-1, 3)],
        &[(0, 2)],
        &[(0, 3), (-1, 3)],
        &[(0, 6)],
        &[(0, 6)],
        &[(1, 1), (0, 1)],
    ],
];

/// `b` with its common factor `x` removed.
const STAR_BASE: [i32; 7] = [4, -1, -1, 3, -1, 2, 1];

/// `T = 2 (T_1 + 3 T_2 + T_3 + 3 T_4 + 3 T_5 + 3 T_6 + T_7)`.
const STAR_COMBO: [i64; 7] = [2, 6, 2, 6, 6, 6, 2];

/// The system `t = x (base + R t)` for the last-slice configurations of
/// `K_{1,3} x P_n`, two colors.
#[derive(Clone, Debug, PartialEq)]
pub struct StarSystem {
    /// Row = new configuration, column = previous configuration.
    pub matrix: Vec<Vec<LaurentPoly>>,
    pub base: Vec<LaurentPoly>,
    pub combo: Vec<LaurentPoly>,
}

impl StarSystem {
    /// `x * combo . (I - xR)^{-1} base`.
    pub fn solve(&self) -> Result<RationalGF> {
        let sols = bareiss_solve(&self.matrix, &self.base, DEFAULT_MAX_DIM)?;
        combine_solutions(&sols, &self.combo)
    }
}

fn star_base_and_combo() -> (Vec<LaurentPoly>, Vec<LaurentPoly>) {
    let base = STAR_BASE
        .iter()
        .map(|&e| {
            if e < 0 {
                LaurentPoly::zero()
            } else {
                LaurentPoly::y_pow(e)
            }
        })
        .collect();
    let combo = STAR_COMBO.iter().map(|&c| LaurentPoly::from(c)).collect();
    (base, combo)
}

pub fn star_system() -> StarSystem {
    let matrix = STAR_MATRIX
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| {
                    LaurentPoly::from_terms(
                        e.iter()
                            .map(|&(ye, c)| (0, ye, BigRational::from(BigInt::from(c)))),
                    )
                })
                .collect()
        })
        .collect();
    let (base, combo) = star_base_and_combo();
    StarSystem {
        matrix,
        base,
        combo,
    }
}

/// The star system read from its plain-text transcription.
pub fn star_system_from_text() -> Result<StarSystem> {
    let matrix = text::STAR_MATRIX
        .iter()
        .map(|row| {
            row.iter()
                .map(|s| parse_poly(s))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let (base, combo) = star_base_and_combo();
    Ok(StarSystem {
        matrix,
        base,
        combo,
    })
}

/// The published generating function `sum_n x^n sum_T y^blocks(T)` for the
/// fixture; `k` is required for `K3_generic_k` only.
pub fn fixture_gf(id: FixtureId, k: Option<u32>) -> Result<RationalGF> {
    let k = id.colors(k)?;
    match id {
        FixtureId::K3GenericK => k3_generic(k),
        FixtureId::Star13K2 => finish(from_table(STAR_NUM), from_table(STAR_DEN)),
        FixtureId::Star13Matrix => star_system().solve(),
        _ => complete_fixture(id),
    }
}

/// Same as [`fixture_gf`], but parsed from the plain-text transcription.
pub fn fixture_gf_from_text(id: FixtureId, k: Option<u32>) -> Result<RationalGF> {
    let k = id.colors(k)?;
    let (num, den) = match id {
        FixtureId::K3GenericK => {
            let b = [('k', k as i64)];
            return finish(
                parse_poly_with(text::K3_NUM, &b)?,
                parse_poly_with(text::K3_DEN, &b)?,
            );
        }
        FixtureId::K4K2 => (text::K4_K2_NUM, text::K4_K2_DEN),
        FixtureId::K5K2 => (text::K5_K2_NUM, text::K5_K2_DEN),
        FixtureId::K6K2 => (text::K6_K2_NUM, text::K6_K2_DEN),
        FixtureId::K4K3 => (text::K4_K3_NUM, text::K4_K3_DEN),
        FixtureId::Star13K2 => (text::STAR_NUM, text::STAR_DEN),
        FixtureId::Star13Matrix => return star_system_from_text()?.solve(),
    };
    finish(parse_poly(num)?, parse_poly(den)?)
}

/// The separately published two-color specialization of the `K_3` family.
pub fn k3_two_color_display() -> Result<RationalGF> {
    finish(parse_poly(text::K3_K2_NUM)?, parse_poly(text::K3_K2_DEN)?)
}
