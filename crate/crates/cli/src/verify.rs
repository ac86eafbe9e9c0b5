//! Built-in verification suites. Every check compares two independent
//! routes exactly and reports the first mismatching coefficient.

use std::time::Instant;

use colpart::algebra::{gf_equal, int, parse_poly, ratio, BigRational, LaurentPoly, RationalGF};
use colpart::closed_forms::{
    bipartite_expected, closed_walks_complete, complete_distribution, complete_expected,
    complete_prism_expected, cycle_block_count, cycle_distribution, cycle_expected,
    open_walks_complete, pbt_distribution, star_profile_count, tree_distribution,
};
use colpart::fixtures::{
    fixture_gf, fixture_gf_from_text, k3_two_color_display, star_system, FixtureId,
};
use colpart::graphs::{
    cartesian_product, complete, complete_bipartite, cycle, path, perfect_binary_tree, random_tree,
    star, Graph, SplitMix64,
};
use colpart::oracle::{distribution_bruteforce, expected_blocks, proper_coloring_count};
use colpart::transfer::{color_classes, km_prism_gf, prism_series, EngineConfig};
use colpart::BlockDistribution;
use num_bigint::BigInt;

use crate::output::{exact, first_difference, CheckRow, VerifyDoc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Quick,
    Full,
}

/// Options that affect every check.
#[derive(Clone, Copy, Debug, Default)]
pub struct Ctx {
    /// Adds a spurious `x^2 y^3` term to the `K4_k2` numerator, as a
    /// negative control for the suite itself.
    pub corrupt_fixture: bool,
}

type Outcome = Result<(), String>;

struct Check {
    name: String,
    run: Box<dyn Fn(&Ctx) -> Outcome>,
}

fn check(name: impl Into<String>, run: impl Fn(&Ctx) -> Outcome + 'static) -> Check {
    Check {
        name: name.into(),
        run: Box::new(run),
    }
}

fn e2s(e: colpart::Error) -> String {
    e.to_string()
}

fn fixture(ctx: &Ctx, id: FixtureId, k: Option<u32>) -> Result<RationalGF, String> {
    let mut gf = fixture_gf(id, k).map_err(e2s)?;
    if ctx.corrupt_fixture && id == FixtureId::K4K2 {
        gf.num += &LaurentPoly::monomial(1, 2, 3);
    }
    Ok(gf)
}

fn brute(g: &Graph, k: u32) -> Result<BlockDistribution, String> {
    distribution_bruteforce(g, k).map_err(e2s)
}

fn engine(g: &Graph, k: u32, n: usize) -> Result<Vec<BlockDistribution>, String> {
    prism_series(g, k, n, &EngineConfig::default()).map_err(e2s)
}

fn prism(g: &Graph, n: usize) -> Graph {
    cartesian_product(g, &path(n).expect("n >= 1"))
}

fn same(label: &str, got: &LaurentPoly, want: &LaurentPoly) -> Outcome {
    match first_difference(label, got, want) {
        None => Ok(()),
        Some(msg) => Err(msg),
    }
}

fn same_rational(label: &str, got: &BigRational, want: &BigRational) -> Outcome {
    if got == want {
        Ok(())
    } else {
        Err(format!(
            "{label}: got {} but expected {}",
            exact(got),
            exact(want)
        ))
    }
}

fn g(r: colpart::Result<Graph>) -> Graph {
    r.expect("valid graph parameters")
}

/// Engine series against a fixture's series for `n = 1..=n_max`.
fn fixture_vs_engine(ctx: &Ctx, id: FixtureId, k: Option<u32>, n_max: usize) -> Outcome {
    let gf = fixture(ctx, id, k)?;
    let colors = id.colors(k).map_err(e2s)?;
    let series = gf.series(n_max).map_err(e2s)?;
    let eng = engine(&id.slice(), colors, n_max)?;
    for n in 1..=n_max {
        same(&format!("{id} x^{n}"), &series[n], eng[n - 1].poly())?;
    }
    Ok(())
}

fn engine_vs_brute(slice: Graph, k: u32, n_max: usize) -> Outcome {
    let eng = engine(&slice, k, n_max)?;
    for n in 1..=n_max {
        same(
            &format!("n={n}"),
            eng[n - 1].poly(),
            brute(&prism(&slice, n), k)?.poly(),
        )?;
    }
    Ok(())
}

fn quick_checks() -> Vec<Check> {
    vec![
        check("tree: 10 random trees, n <= 8, k = 2,3", |_| {
            let mut rng = SplitMix64::new(7);
            for _ in 0..10 {
                let n = 1 + rng.below(8) as usize;
                let t = g(random_tree(n, rng.next_u64()));
                for k in [2, 3] {
                    same(
                        &format!("n={n} k={k}"),
                        brute(&t, k)?.poly(),
                        tree_distribution(n, k).map_err(e2s)?.poly(),
                    )?;
                }
            }
            Ok(())
        }),
        check("pbt: h <= 3, k = 2", |_| {
            for h in 0..=3 {
                let d = brute(&g(perfect_binary_tree(h)), 2)?;
                same(
                    &format!("h={h}"),
                    d.poly(),
                    pbt_distribution(h, 2).map_err(e2s)?.poly(),
                )?;
            }
            Ok(())
        }),
        check(
            "pbt: h = 2, k = 2 equals 2y+12y^2+30y^3+40y^4+30y^5+12y^6+2y^7",
            |_| {
                let want =
                    parse_poly("2*y+12*y^2+30*y^3+40*y^4+30*y^5+12*y^6+2*y^7").map_err(e2s)?;
                same("pbt", pbt_distribution(2, 2).map_err(e2s)?.poly(), &want)
            },
        ),
        check("cycle: 3 <= n <= 8, k = 2,3 distribution", |_| {
            for n in 3..=8 {
                for k in [2, 3] {
                    let d = brute(&g(cycle(n)), k)?;
                    same(
                        &format!("n={n} k={k}"),
                        d.poly(),
                        cycle_distribution(n, k).map_err(e2s)?.poly(),
                    )?;
                }
            }
            Ok(())
        }),
        check("cycle: f_2(5,4) = 10", |_| {
            let v = cycle_block_count(5, 4, 2).map_err(e2s)?;
            if v == BigInt::from(10) {
                Ok(())
            } else {
                Err(format!("got {v}"))
            }
        }),
        check("cycle: expectation, n <= 8", |_| {
            for n in 3..=8 {
                let d = brute(&g(cycle(n)), 3)?;
                same_rational(
                    &format!("n={n}"),
                    &expected_blocks(&d),
                    &cycle_expected(n, 3).map_err(e2s)?,
                )?;
            }
            Ok(())
        }),
        check(
            "walks: closed and open walk counts rebuild f_k(n,i)",
            |_| {
                for n in 3..=9usize {
                    for i in 2..=n {
                        for k in 1..=4u32 {
                            let c2 = BigInt::from(k) * BigInt::from(k.saturating_sub(1)) / 2;
                            let lhs = int(2 * binom(n - 1, i - 1) * c2)
                                * open_walks_complete(k, i as u32 - 1).map_err(e2s)?
                                + int(binom(n - 1, i) * BigInt::from(k))
                                    * closed_walks_complete(k, i as u32).map_err(e2s)?;
                            let rhs = int(cycle_block_count(n, i, k).map_err(e2s)?);
                            same_rational(&format!("n={n} i={i} k={k}"), &lhs, &rhs)?;
                        }
                    }
                }
                Ok(())
            },
        ),
        check("complete: n <= 6, k = 2,3 distribution", |_| {
            for n in 1..=6 {
                for k in [2, 3] {
                    let d = brute(&g(complete(n)), k)?;
                    same(
                        &format!("n={n} k={k}"),
                        d.poly(),
                        complete_distribution(n, k).map_err(e2s)?.poly(),
                    )?;
                }
            }
            Ok(())
        }),
        check("complete: g_2(4,2) = 14", |_| {
            let c = complete_distribution(4, 2).map_err(e2s)?.coefficient(2);
            if c == BigInt::from(14) {
                Ok(())
            } else {
                Err(format!("got {c}"))
            }
        }),
        check("complete: expectation k - (k-1)^n / k^(n-1)", |_| {
            for n in 1..=6 {
                let d = brute(&g(complete(n)), 3)?;
                same_rational(
                    &format!("n={n}"),
                    &expected_blocks(&d),
                    &complete_expected(n, 3).map_err(e2s)?,
                )?;
            }
            Ok(())
        }),
        check("bipartite: expectation, n, m <= 3, k = 2,3", |_| {
            for n in 1..=3 {
                for m in 1..=3 {
                    for k in [2, 3] {
                        let d = brute(&g(complete_bipartite(n, m)), k)?;
                        let want = bipartite_expected(n, m, k).map_err(e2s)?;
                        same_rational(&format!("n={n} m={m} k={k}"), &expected_blocks(&d), &want)?;
                    }
                }
            }
            Ok(())
        }),
        check("K3 x P_n: engine equals brute force, k = 2, n <= 4", |_| {
            engine_vs_brute(g(complete(3)), 2, 4)
        }),
        check("K3 x P_n: engine equals brute force, k = 3, n <= 3", |_| {
            engine_vs_brute(g(complete(3)), 3, 3)
        }),
        check("K3 x P_n: fixture equals engine, k = 2, n <= 6", |c| {
            fixture_vs_engine(c, FixtureId::K3GenericK, Some(2), 6)
        }),
        check("K3 x P_n: fixture equals engine, k = 3, n <= 6", |c| {
            fixture_vs_engine(c, FixtureId::K3GenericK, Some(3), 6)
        }),
        check("K3 x P_n: fixture equals engine, k = 4, n <= 4", |c| {
            fixture_vs_engine(c, FixtureId::K3GenericK, Some(4), 4)
        }),
        check(
            "K3 x P_n: k = 2 specialization equals the two-color display",
            |c| {
                let a = fixture(c, FixtureId::K3GenericK, Some(2))?;
                let b = k3_two_color_display().map_err(e2s)?;
                if gf_equal(&a, &b) {
                    Ok(())
                } else {
                    Err("cross products differ".into())
                }
            },
        ),
        check("K3 x P_n: expectation (37 + 19n) / 32, n <= 10", |_| {
            let eng = engine(&g(complete(3)), 2, 10)?;
            for (i, d) in eng.iter().enumerate() {
                let n = i as i64 + 1;
                same_rational(
                    &format!("n={n}"),
                    &expected_blocks(d),
                    &ratio(37 + 19 * n, 32),
                )?;
            }
            Ok(())
        }),
        check(
            "K4 x P_n: reduced system equals published quotient, k = 2",
            |c| {
                let a = km_prism_gf(4, 2).map_err(e2s)?;
                let b = fixture(c, FixtureId::K4K2, None)?;
                if gf_equal(&a, &b) {
                    return Ok(());
                }
                let (sa, sb) = (a.series(4).map_err(e2s)?, b.series(4).map_err(e2s)?);
                for n in 1..=4 {
                    same(&format!("K4_k2 x^{n}"), &sb[n], &sa[n])?;
                }
                Err("cross products differ".into())
            },
        ),
        check("K4 x P_n: fixture equals engine, k = 2, n <= 4", |c| {
            fixture_vs_engine(c, FixtureId::K4K2, None, 4)
        }),
        check("K4 x P_n: engine equals brute force, k = 2, n <= 3", |_| {
            engine_vs_brute(g(complete(4)), 2, 3)
        }),
        check("K4 x P_n: expectation (175 + 65n) / 128, n <= 8", |_| {
            let eng = engine(&g(complete(4)), 2, 8)?;
            for (i, d) in eng.iter().enumerate() {
                let n = i as i64 + 1;
                same_rational(
                    &format!("n={n}"),
                    &expected_blocks(d),
                    &ratio(175 + 65 * n, 128),
                )?;
            }
            Ok(())
        }),
        check("classes: m = 4, k = 2 has sizes 2, 8, 6", |_| {
            let sizes: Vec<String> = color_classes(4, 2)
                .map_err(e2s)?
                .iter()
                .map(|c| c.class_size.to_string())
                .collect();
            if sizes == ["2", "8", "6"] {
                Ok(())
            } else {
                Err(format!("got {sizes:?}"))
            }
        }),
        check("K5 x P_n: fixture equals engine, k = 2, n <= 3", |c| {
            fixture_vs_engine(c, FixtureId::K5K2, None, 3)
        }),
        check(
            "star: 7 x 7 system reproduces the published quotient",
            |c| {
                let a = star_system().solve().map_err(e2s)?;
                let b = fixture(c, FixtureId::Star13K2, None)?;
                if gf_equal(&a, &b) {
                    Ok(())
                } else {
                    Err("cross products differ".into())
                }
            },
        ),
        check("star: fixture equals engine, n <= 6", |c| {
            fixture_vs_engine(c, FixtureId::Star13K2, None, 6)
        }),
        check("star: engine equals brute force, n <= 3", |_| {
            engine_vs_brute(g(star(3)), 2, 3)
        }),
        check("star: expectation formula, n <= 8", |_| {
            let eng = engine(&g(star(3)), 2, 8)?;
            for (i, d) in eng.iter().enumerate() {
                let n = i + 1;
                let p3 = int(num_traits::pow(BigInt::from(2), 3 * n));
                let p4 = int(num_traits::pow(BigInt::from(2), 4 * n));
                let want = ratio(2254219, 1411200) + ratio(6, 49) / p3 - ratio(2, 225) / p4
                    + ratio(11933 * n as i64, 13440);
                same_rational(&format!("n={n}"), &expected_blocks(d), &want)?;
            }
            Ok(())
        }),
        check("star: profile counts 7 (m = 3) and 19 (m = 5)", |_| {
            let (a, b) = (star_profile_count(3), star_profile_count(5));
            if a == BigInt::from(7) && b == BigInt::from(19) {
                Ok(())
            } else {
                Err(format!("got {a}, {b}"))
            }
        }),
        check(
            "prisms: expectation formula, l <= 4, n <= 3, k = 2,3",
            |_| {
                for l in 1..=4 {
                    for k in [2, 3] {
                        for (i, d) in engine(&g(complete(l)), k, 3)?.iter().enumerate() {
                            let want = complete_prism_expected(l, i + 1, k).map_err(e2s)?;
                            same_rational(
                                &format!("l={l} k={k} n={}", i + 1),
                                &expected_blocks(d),
                                &want,
                            )?;
                        }
                    }
                }
                Ok(())
            },
        ),
        check("fixtures: term tables equal text transcriptions", |_| {
            for id in FixtureId::ALL {
                let k = (id == FixtureId::K3GenericK).then_some(3);
                let a = fixture_gf(id, k).map_err(e2s)?;
                let b = fixture_gf_from_text(id, k).map_err(e2s)?;
                if !gf_equal(&a, &b) {
                    return Err(format!("{id} transcriptions differ"));
                }
            }
            Ok(())
        }),
        check(
            "methods: brute and transfer agree on product graphs",
            |_| {
                for (slice, k, n) in [(g(cycle(4)), 2, 3), (g(path(3)), 3, 2), (g(star(2)), 2, 4)] {
                    let a = brute(&prism(&slice, n), k)?;
                    let b = engine(&slice, k, n)?.pop().expect("n >= 1");
                    same(
                        &format!("|V|={} k={k} n={n}", slice.vertex_count()),
                        b.poly(),
                        a.poly(),
                    )?;
                }
                Ok(())
            },
        ),
    ]
}

fn full_checks() -> Vec<Check> {
    let mut v = quick_checks();
    v.extend([
        check("K4 x P_n: fixture equals engine, k = 2, n <= 8", |c| {
            fixture_vs_engine(c, FixtureId::K4K2, None, 8)
        }),
        check("K5 x P_n: fixture equals engine, k = 2, n <= 5", |c| {
            fixture_vs_engine(c, FixtureId::K5K2, None, 5)
        }),
        check(
            "K5 x P_n: reduced system equals published quotient, k = 2",
            |c| {
                let ok = gf_equal(
                    &km_prism_gf(5, 2).map_err(e2s)?,
                    &fixture(c, FixtureId::K5K2, None)?,
                );
                if ok {
                    Ok(())
                } else {
                    Err("cross products differ".into())
                }
            },
        ),
        check("K6 x P_n: fixture equals engine, k = 2, n <= 5", |c| {
            fixture_vs_engine(c, FixtureId::K6K2, None, 5)
        }),
        check(
            "K6 x P_n: reduced system equals published quotient, k = 2",
            |c| {
                let ok = gf_equal(
                    &km_prism_gf(6, 2).map_err(e2s)?,
                    &fixture(c, FixtureId::K6K2, None)?,
                );
                if ok {
                    Ok(())
                } else {
                    Err("cross products differ".into())
                }
            },
        ),
        check("K4 x P_n: fixture equals engine, k = 3, n <= 5", |c| {
            fixture_vs_engine(c, FixtureId::K4K3, None, 5)
        }),
        check("K3 x P_n: engine equals brute force, k = 2, n <= 6", |_| {
            engine_vs_brute(g(complete(3)), 2, 6)
        }),
        check("K3 x P_n: engine equals brute force, k = 3, n <= 4", |_| {
            engine_vs_brute(g(complete(3)), 3, 4)
        }),
        check("star: engine equals brute force, n <= 4", |_| {
            engine_vs_brute(g(star(3)), 2, 4)
        }),
        check("cycle: 3 <= n <= 10, k = 2,3 distribution", |_| {
            for n in 3..=10 {
                for k in [2, 3] {
                    let d = brute(&g(cycle(n)), k)?;
                    same(
                        &format!("n={n} k={k}"),
                        d.poly(),
                        cycle_distribution(n, k).map_err(e2s)?.poly(),
                    )?;
                }
            }
            Ok(())
        }),
        check("complete: n <= 8, k = 2,3 distribution", |_| {
            for n in 1..=8 {
                for k in [2, 3] {
                    let d = brute(&g(complete(n)), k)?;
                    same(
                        &format!("n={n} k={k}"),
                        d.poly(),
                        complete_distribution(n, k).map_err(e2s)?.poly(),
                    )?;
                }
            }
            Ok(())
        }),
        check("bipartite: expectation, n, m <= 4, k = 2,3", |_| {
            for n in 1..=4 {
                for m in 1..=4 {
                    for k in [2, 3] {
                        let d = brute(&g(complete_bipartite(n, m)), k)?;
                        let want = bipartite_expected(n, m, k).map_err(e2s)?;
                        same_rational(&format!("n={n} m={m} k={k}"), &expected_blocks(&d), &want)?;
                    }
                }
            }
            Ok(())
        }),
        check("properties: 100 random graphs", |_| {
            let mut rng = SplitMix64::new(99);
            let mut done = 0;
            while done < 100 {
                let n = 1 + rng.below(9) as usize;
                let k = 1 + rng.below(3) as u32;
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.below(3) == 0 {
                            edges.push((u, v));
                        }
                    }
                }
                let gr = Graph::from_edges(n, &edges).map_err(e2s)?;
                let d = brute(&gr, k)?;
                let tag = format!("n={n} k={k} edges={edges:?}");
                if d.total() != num_traits::pow(BigInt::from(k), n) {
                    return Err(format!("normalization {tag}"));
                }
                if d.coefficient(n as i32) != proper_coloring_count(&gr, k).map_err(e2s)? {
                    return Err(format!("top coefficient {tag}"));
                }
                if gr.is_connected() && d.coefficient(1) != BigInt::from(k) {
                    return Err(format!("y^1 coefficient {tag}"));
                }
                if k == 2
                    && d.coefficients()
                        .iter()
                        .any(|(_, c)| c % 2 != BigInt::from(0))
                {
                    return Err(format!("evenness {tag}"));
                }
                done += 1;
            }
            Ok(())
        }),
    ]);
    v
}

fn binom(n: usize, k: usize) -> BigInt {
    colpart::algebra::combinatorics::binomial(n as u64, k as u64)
}

pub fn run(suite: Suite, ctx: &Ctx) -> VerifyDoc {
    let start = Instant::now();
    let checks = match suite {
        Suite::Quick => quick_checks(),
        Suite::Full => full_checks(),
    };
    let rows: Vec<CheckRow> = checks
        .into_iter()
        .map(|c| {
            let outcome = (c.run)(ctx);
            CheckRow {
                name: c.name,
                ok: outcome.is_ok(),
                detail: outcome.err().unwrap_or_default(),
            }
        })
        .collect();
    let failed = rows.iter().filter(|r| !r.ok).count();
    VerifyDoc {
        command: "verify",
        suite: match suite {
            Suite::Quick => "quick".into(),
            Suite::Full => "full".into(),
        },
        passed: rows.len() - failed,
        failed,
        checks: rows,
        elapsed_ms: start.elapsed().as_millis(),
    }
}
