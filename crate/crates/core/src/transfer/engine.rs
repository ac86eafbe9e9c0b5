use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::algebra::LaurentPoly;
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::oracle::{expected_blocks, BlockDistribution};
use crate::union_find::UnionFind;

/// Bounds on the slice graph the engine accepts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    pub max_vertices: usize,
    /// Bound on `k^|V(G)|`, the number of slice colorings.
    pub max_colorings: u64,
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self {
            max_vertices: 8,
            max_colorings: 1 << 16,
        }
    }
}

/// Coloring of the last slice plus the partition of its vertices into
/// blocks as joined so far, as a restricted growth string.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Profile {
    pub coloring: Vec<u32>,
    pub linkage: Vec<u32>,
}

impl Profile {
    pub fn open_blocks(&self) -> usize {
        self.linkage.iter().max().map_or(0, |&m| m as usize + 1)
    }
}

/// Dense polynomial in `y`, index = exponent.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct YPoly(Vec<BigInt>);

impl YPoly {
    fn one() -> Self {
        YPoly(vec![BigInt::from(1)])
    }

    /// `self += other * y^shift`.
    fn add_shifted(&mut self, other: &YPoly, shift: usize) {
        let need = other.0.len() + shift;
        if self.0.len() < need {
            self.0.resize(need, BigInt::zero());
        }
        for (i, c) in other.0.iter().enumerate() {
            self.0[i + shift] += c;
        }
    }

    fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::from_y_coeffs(0, self.0.iter().cloned().map(BigRational::from))
    }

    fn at_one(&self) -> BigInt {
        self.0.iter().sum()
    }
}

/// Profile weights after some number of slices. A weight counts the blocks
/// already closed off; open ones are paid for by [`finalize`].
#[derive(Clone, Debug)]
pub struct StateWeights {
    k: u32,
    slice_size: usize,
    slices: usize,
    states: HashMap<Profile, YPoly>,
}

impl StateWeights {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn slice_size(&self) -> usize {
        self.slice_size
    }

    /// Number of slices processed.
    pub fn slices(&self) -> usize {
        self.slices
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn weight(&self, p: &Profile) -> Option<LaurentPoly> {
        self.states.get(p).map(YPoly::to_poly)
    }

    pub fn profiles(&self) -> impl Iterator<Item = &Profile> {
        self.states.keys()
    }

    /// Sum of all weights at `y = 1`; equals `k^(slices * |V(G)|)`.
    pub fn mass(&self) -> BigInt {
        self.states.values().map(YPoly::at_one).sum()
    }
}

fn check_caps(g: &Graph, k: u32, cfg: &EngineConfig) -> Result<u64> {
    if k == 0 {
        return Err(Error::invalid("k must be at least 1"));
    }
    let m = g.vertex_count();
    if m == 0 {
        return Err(Error::invalid("slice graph needs at least one vertex"));
    }
    if m > cfg.max_vertices {
        return Err(Error::CapExceeded {
            what: "slice vertices",
            needed: m.to_string(),
            cap: cfg.max_vertices.to_string(),
            hint: "raise the profile cap",
        });
    }
    match (k as u128).checked_pow(m as u32) {
        Some(t) if t <= cfg.max_colorings as u128 => Ok(t as u64),
        _ => Err(Error::CapExceeded {
            what: "slice colorings",
            needed: format!("{k}^{m}"),
            cap: cfg.max_colorings.to_string(),
            hint: "raise the state cap or use fewer colors",
        }),
    }
}

/// One slice coloring with the slice edges joining equal colors.
struct SliceColoring {
    colors: Vec<u32>,
    mono_edges: Vec<(usize, usize)>,
}

fn slice_colorings(g: &Graph, k: u32, total: u64) -> Vec<SliceColoring> {
    let m = g.vertex_count();
    let edges = g.edges();
    (0..total)
        .map(|mut idx| {
            let colors: Vec<u32> = (0..m)
                .map(|_| {
                    let c = (idx % k as u64) as u32;
                    idx /= k as u64;
                    c
                })
                .collect();
            let mono_edges = edges
                .iter()
                .copied()
                .filter(|&(u, v)| colors[u] == colors[v])
                .collect();
            SliceColoring { colors, mono_edges }
        })
        .collect()
}

/// Canonical labels of `roots` in order of first appearance.
fn rgs(roots: impl Iterator<Item = usize>) -> Vec<u32> {
    let mut seen: Vec<usize> = Vec::new();
    roots
        .map(|r| match seen.iter().position(|&s| s == r) {
            Some(i) => i as u32,
            None => {
                seen.push(r);
                seen.len() as u32 - 1
            }
        })
        .collect()
}

/// One state per slice coloring, weight 1, linkage = monochromatic
/// components of the slice.
pub fn initial_states(g: &Graph, k: u32, cfg: &EngineConfig) -> Result<StateWeights> {
    let total = check_caps(g, k, cfg)?;
    let m = g.vertex_count();
    let mut uf = UnionFind::new(m);
    let states = slice_colorings(g, k, total)
        .into_iter()
        .map(|sc| {
            uf.reset();
            for &(u, v) in &sc.mono_edges {
                uf.union(u, v);
            }
            let linkage = rgs((0..m).map(|v| uf.find(v)));
            (
                Profile {
                    coloring: sc.colors,
                    linkage,
                },
                YPoly::one(),
            )
        })
        .collect();
    Ok(StateWeights {
        k,
        slice_size: m,
        slices: 1,
        states,
    })
}

/// Appends one slice. Old blocks that do not reach the new slice are closed
/// and paid for with a factor `y`.
pub fn step(g: &Graph, s: &StateWeights, cfg: &EngineConfig) -> Result<StateWeights> {
    let total = check_caps(g, s.k, cfg)?;
    let m = g.vertex_count();
    if m != s.slice_size {
        return Err(Error::LengthMismatch {
            expected: s.slice_size,
            got: m,
        });
    }
    let next = slice_colorings(g, s.k, total);
    let old: Vec<(&Profile, &YPoly)> = s.states.iter().collect();

    let states = old
        .par_iter()
        .fold(
            || (HashMap::new(), UnionFind::new(2 * m)),
            |(mut acc, mut uf): (HashMap<Profile, YPoly>, UnionFind), &(p, w)| {
                let open = p.open_blocks();
                let mut first = vec![usize::MAX; open];
                for sc in &next {
                    uf.reset();
                    for (v, &l) in p.linkage.iter().enumerate() {
                        let f = &mut first[l as usize];
                        if *f == usize::MAX {
                            *f = v;
                        } else {
                            uf.union(*f, v);
                        }
                    }
                    for &(u, v) in &sc.mono_edges {
                        uf.union(m + u, m + v);
                    }
                    for v in 0..m {
                        if p.coloring[v] == sc.colors[v] {
                            uf.union(v, m + v);
                        }
                    }
                    let roots: Vec<usize> = (m..2 * m).map(|v| uf.find(v)).collect();
                    let closed = first
                        .iter()
                        .filter(|&&f| !roots.contains(&uf.find(f)))
                        .count();
                    let key = Profile {
                        coloring: sc.colors.clone(),
                        linkage: rgs(roots.into_iter()),
                    };
                    acc.entry(key).or_default().add_shifted(w, closed);
                    first.iter_mut().for_each(|f| *f = usize::MAX);
                }
                (acc, uf)
            },
        )
        .map(|(acc, _)| acc)
        .reduce(HashMap::new, |a, b| {
            let (mut big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
            for (p, w) in small {
                big.entry(p).or_default().add_shifted(&w, 0);
            }
            big
        });

    Ok(StateWeights {
        k: s.k,
        slice_size: m,
        slices: s.slices + 1,
        states,
    })
}

/// Pays for the blocks still open: `sum weight * y^(open blocks)`.
pub fn finalize(s: &StateWeights) -> BlockDistribution {
    let mut acc = YPoly::default();
    for (p, w) in &s.states {
        acc.add_shifted(w, p.open_blocks());
    }
    BlockDistribution::new(acc.to_poly(), s.slice_size * s.slices, s.k).expect("y-only polynomial")
}

/// Block distribution of `G x P_n` with the default caps.
pub fn prism_distribution(g: &Graph, k: u32, n: usize) -> Result<BlockDistribution> {
    prism_distribution_with(g, k, n, &EngineConfig::default())
}

pub fn prism_distribution_with(
    g: &Graph,
    k: u32,
    n: usize,
    cfg: &EngineConfig,
) -> Result<BlockDistribution> {
    Ok(prism_series(g, k, n, cfg)?.pop().expect("n >= 1"))
}

/// Distributions of `G x P_1, ..., G x P_n`.
pub fn prism_series(
    g: &Graph,
    k: u32,
    n: usize,
    cfg: &EngineConfig,
) -> Result<Vec<BlockDistribution>> {
    if n == 0 {
        return Err(Error::invalid("path length must be at least 1"));
    }
    let mut s = initial_states(g, k, cfg)?;
    let mut out = vec![finalize(&s)];
    for _ in 1..n {
        s = step(g, &s, cfg)?;
        out.push(finalize(&s));
    }
    Ok(out)
}

pub fn prism_expected(g: &Graph, k: u32, n: usize) -> Result<BigRational> {
    Ok(expected_blocks(&prism_distribution(g, k, n)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, ratio};
    use crate::closed_forms::{cycle_distribution, tree_distribution};
    use crate::graphs::{cartesian_product, complete, cycle, path, star};
    use crate::oracle::distribution_bruteforce;

    fn cfg() -> EngineConfig {
        EngineConfig::default()
    }

    #[test]
    fn initial_state_examples() {
        let s = initial_states(&complete(1).unwrap(), 2, &cfg()).unwrap();
        assert_eq!(s.len(), 2);
        let s = initial_states(&complete(3).unwrap(), 2, &cfg()).unwrap();
        assert_eq!(s.len(), 8);
        for p in s.profiles() {
            let mono = p.coloring.iter().all(|&c| c == p.coloring[0]);
            assert_eq!(p.open_blocks(), if mono { 1 } else { 2 });
        }
        let s = initial_states(&star(3).unwrap(), 2, &cfg()).unwrap();
        assert_eq!(s.len(), 16);
        // center 0 colored differently from all leaves: three separate leaves
        let p = Profile {
            coloring: vec![1, 0, 0, 0],
            linkage: vec![0, 1, 2, 3],
        };
        assert!(s.weight(&p).is_some());
    }

    #[test]
    fn finalize_examples() {
        let k3 = finalize(&initial_states(&complete(3).unwrap(), 2, &cfg()).unwrap());
        assert_eq!(k3.poly(), &parse_poly("2*y+6*y^2").unwrap());
        let st = finalize(&initial_states(&star(3).unwrap(), 2, &cfg()).unwrap());
        assert_eq!(st.poly(), &parse_poly("2*y+6*y^2+6*y^3+2*y^4").unwrap());
    }

    #[test]
    fn path_slices_give_trees() {
        let k1 = complete(1).unwrap();
        for k in 1..=4 {
            for (n, d) in prism_series(&k1, k, 7, &cfg())
                .unwrap()
                .into_iter()
                .enumerate()
            {
                assert_eq!(d, tree_distribution(n + 1, k).unwrap());
            }
        }
    }

    #[test]
    fn ladder_square_is_a_cycle() {
        let d = prism_distribution(&path(2).unwrap(), 2, 2).unwrap();
        assert_eq!(d.poly(), cycle_distribution(4, 2).unwrap().poly());
    }

    #[test]
    fn agrees_with_bruteforce() {
        let slices = [
            complete(2),
            complete(3),
            path(3),
            star(3),
            cycle(3),
            cycle(4),
        ];
        for g in slices.into_iter().map(Result::unwrap) {
            for k in [2, 3] {
                let m = g.vertex_count() as u32;
                let n_max = (1..)
                    .take_while(|&n| (k as u64).pow(m * n) <= 1 << 16)
                    .last()
                    .unwrap();
                let series = prism_series(&g, k, n_max as usize, &cfg()).unwrap();
                for (i, d) in series.iter().enumerate() {
                    let prod = cartesian_product(&g, &path(i + 1).unwrap());
                    assert_eq!(
                        d,
                        &distribution_bruteforce(&prod, k).unwrap(),
                        "m={m} k={k} n={}",
                        i + 1
                    );
                }
            }
        }
    }

    #[test]
    fn mass_is_conserved() {
        let g = star(3).unwrap();
        let mut s = initial_states(&g, 3, &cfg()).unwrap();
        for t in 1..=4u32 {
            assert_eq!(s.mass(), num_traits::pow(BigInt::from(3), 4 * t as usize));
            s = step(&g, &s, &cfg()).unwrap();
        }
    }

    #[test]
    fn complete_slices_need_no_history() {
        let g = complete(4).unwrap();
        let mut s = initial_states(&g, 3, &cfg()).unwrap();
        for _ in 0..3 {
            s = step(&g, &s, &cfg()).unwrap();
            assert_eq!(s.len(), 81);
        }
    }

    #[test]
    fn expectation_examples() {
        let k3 = complete(3).unwrap();
        for n in 1..=6 {
            assert_eq!(
                prism_expected(&k3, 2, n).unwrap(),
                ratio(37 + 19 * n as i64, 32)
            );
        }
        assert_eq!(
            prism_expected(&star(3).unwrap(), 2, 1).unwrap(),
            ratio(5, 2)
        );
        assert_eq!(
            prism_expected(&complete(4).unwrap(), 2, 3).unwrap(),
            ratio(185, 64)
        );
    }

    #[test]
    fn caps_are_enforced() {
        let big = complete(9).unwrap();
        assert!(matches!(
            initial_states(&big, 2, &cfg()),
            Err(Error::CapExceeded { .. })
        ));
        let g = complete(5).unwrap();
        assert!(matches!(
            initial_states(&g, 10, &cfg()),
            Err(Error::CapExceeded { .. })
        ));
        let loose = EngineConfig {
            max_vertices: 9,
            max_colorings: 1 << 9,
        };
        assert_eq!(initial_states(&big, 2, &loose).unwrap().len(), 512);
        assert!(prism_distribution(&g, 2, 0).is_err());
    }
}
