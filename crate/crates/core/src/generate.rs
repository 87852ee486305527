//! Deterministic extremal constructions and seeded random instances.
//!
//! # Sampling algorithm
//!
//! All randomness comes from [`Sampler`], a ChaCha8 stream keyed by
//! `ChaCha8Rng::seed_from_u64(seed)`. On top of raw `u64` draws:
//!
//! * a Bernoulli(p) trial succeeds iff the next draw is `< floor(p * 2^64)`
//!   (with `p >= 1` always succeeding and `p <= 0` never);
//! * `below(k)` draws uniformly from `0..k` by rejection: draws above the
//!   largest multiple of `k` are discarded, the rest are reduced mod `k`;
//! * shuffles are Fisher-Yates from the back, `j = below(i + 1)`.
//!
//! G(n, p) visits pairs `(u, v)`, `u < v`, in lexicographic order with one
//! Bernoulli trial each. Set families visit subsets in increasing bit-pattern
//! order. None of this depends on platform word size or library defaults.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{LocexError, Result};
use crate::family::{level_sets, SetFamily};
use crate::graph::SmallGraph;
use crate::poset::RankedPoset;
use crate::sequence::RealSequence;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    pub fn bernoulli(&mut self, p: f64) -> bool {
        if p >= 1.0 {
            return true;
        }
        if p <= 0.0 {
            return false;
        }
        let threshold = (p * 18_446_744_073_709_551_616.0) as u64;
        self.next_u64() < threshold
    }

    /// Uniform on `0..k`, `k > 0`.
    pub fn below(&mut self, k: u64) -> u64 {
        assert!(k > 0);
        let zone = u64::MAX - (u64::MAX - k + 1) % k;
        loop {
            let x = self.next_u64();
            if x <= zone {
                return x % k;
            }
        }
    }

    /// Uniform in `[0, 1)` with 53 random bits.
    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}

/// Seed for trial `index` of a run seeded with `seed` (SplitMix64 finalizer).
pub fn trial_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Clone, Debug, PartialEq)]
pub enum Instance {
    Graph(SmallGraph),
    Family(SetFamily),
    Sequence(RealSequence),
}

impl Instance {
    pub fn into_graph(self) -> Result<SmallGraph> {
        match self {
            Instance::Graph(g) => Ok(g),
            _ => Err(LocexError::Parameter("construction is not a graph".into())),
        }
    }

    pub fn into_family(self) -> Result<SetFamily> {
        match self {
            Instance::Family(f) => Ok(f),
            _ => Err(LocexError::Parameter("construction is not a set family".into())),
        }
    }

    pub fn into_sequence(self) -> Result<RealSequence> {
        match self {
            Instance::Sequence(s) => Ok(s),
            _ => Err(LocexError::Parameter("construction is not a sequence".into())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    /// `r` classes of size `n / r`; vertex `v` is in class `v / (n / r)`.
    BalancedMultipartite { n: usize, r: usize },
    DisjointCliques { sizes: Vec<usize> },
    Cycle { n: usize },
    /// `n` vertices, `n - 1` edges.
    PathGraph { n: usize },
    /// `K_{1,k}` with center 0.
    StarGraph { k: usize },
    /// `K_{a,a}` on left `0..a`, right `a..2a`, plus the edge `0-1`.
    CompleteBipartitePlusEdge { a: usize },
    FullLevels { n: usize, levels: Vec<usize> },
    /// All `r`-sets containing element 0.
    EkrStar { n: usize, r: usize },
    /// All `r`-sets containing element 0 or element 1.
    EkrTwoPoints { n: usize, r: usize },
    FullRLevel { n: usize, r: usize },
}

impl Construction {
    pub const KINDS: [&'static str; 10] = [
        "balanced-multipartite",
        "disjoint-cliques",
        "cycle",
        "path-graph",
        "star-graph",
        "complete-bipartite-plus-edge",
        "full-levels",
        "ekr-star",
        "ekr-two-points",
        "full-r-level",
    ];

    pub fn parse(kind: &str, params: &[usize]) -> Result<Self> {
        let want = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(LocexError::Parameter(format!(
                    "{kind} takes {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let c = match kind {
            "balanced-multipartite" => {
                want(2)?;
                Construction::BalancedMultipartite {
                    n: params[0],
                    r: params[1],
                }
            }
            "disjoint-cliques" => Construction::DisjointCliques {
                sizes: params.to_vec(),
            },
            "cycle" => {
                want(1)?;
                Construction::Cycle { n: params[0] }
            }
            "path-graph" => {
                want(1)?;
                Construction::PathGraph { n: params[0] }
            }
            "star-graph" => {
                want(1)?;
                Construction::StarGraph { k: params[0] }
            }
            "complete-bipartite-plus-edge" => {
                want(1)?;
                Construction::CompleteBipartitePlusEdge { a: params[0] }
            }
            "full-levels" => {
                if params.is_empty() {
                    return Err(LocexError::Parameter("full-levels needs n".into()));
                }
                Construction::FullLevels {
                    n: params[0],
                    levels: params[1..].to_vec(),
                }
            }
            "ekr-star" => {
                want(2)?;
                Construction::EkrStar {
                    n: params[0],
                    r: params[1],
                }
            }
            "ekr-two-points" => {
                want(2)?;
                Construction::EkrTwoPoints {
                    n: params[0],
                    r: params[1],
                }
            }
            "full-r-level" => {
                want(2)?;
                Construction::FullRLevel {
                    n: params[0],
                    r: params[1],
                }
            }
            other => {
                return Err(LocexError::Parameter(format!("unknown construction {other:?}")))
            }
        };
        Ok(c)
    }

    pub fn build(&self) -> Result<Instance> {
        let bad = |msg: String| Err(LocexError::Parameter(msg));
        match self {
            &Construction::BalancedMultipartite { n, r } => {
                if r == 0 || n == 0 || n % r != 0 {
                    return bad(format!("{r} classes do not divide {n} vertices"));
                }
                let size = n / r;
                let mut g = SmallGraph::empty(n)?;
                for u in 0..n {
                    for v in u + 1..n {
                        if u / size != v / size {
                            g.add_edge(u, v)?;
                        }
                    }
                }
                Ok(Instance::Graph(g))
            }
            Construction::DisjointCliques { sizes } => {
                if sizes.is_empty() || sizes.contains(&0) {
                    return bad("clique sizes must be positive".into());
                }
                let mut g = SmallGraph::complete(sizes[0])?;
                for &s in &sizes[1..] {
                    g = g.disjoint_union(&SmallGraph::complete(s)?)?;
                }
                Ok(Instance::Graph(g))
            }
            &Construction::Cycle { n } => {
                if n < 3 {
                    return bad(format!("cycle needs at least 3 vertices, got {n}"));
                }
                let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                Ok(Instance::Graph(SmallGraph::from_edges(n, &edges)?))
            }
            &Construction::PathGraph { n } => {
                let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
                Ok(Instance::Graph(SmallGraph::from_edges(n, &edges)?))
            }
            &Construction::StarGraph { k } => {
                let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
                Ok(Instance::Graph(SmallGraph::from_edges(k + 1, &edges)?))
            }
            &Construction::CompleteBipartitePlusEdge { a } => {
                if a < 2 {
                    return bad("class size must be at least 2 to hold an inner edge".into());
                }
                let mut g = SmallGraph::empty(2 * a)?;
                for u in 0..a {
                    for v in a..2 * a {
                        g.add_edge(u, v)?;
                    }
                }
                g.add_edge(0, 1)?;
                Ok(Instance::Graph(g))
            }
            Construction::FullLevels { n, levels } => {
                check_ground(*n)?;
                if let Some(&l) = levels.iter().find(|&&l| l > *n) {
                    return bad(format!("level {l} exceeds n = {n}"));
                }
                let mut fam = SetFamily::new(*n, level_sets(*n, levels))?;
                if levels.len() == 1 {
                    fam = fam.with_uniformity(levels[0])?;
                }
                Ok(Instance::Family(fam))
            }
            &Construction::EkrStar { n, r } => {
                check_uniform(n, r, 1)?;
                let sets = level_sets(n, &[r]).into_iter().filter(|s| s & 1 != 0).collect();
                Ok(Instance::Family(SetFamily::uniform(n, r, sets)?))
            }
            &Construction::EkrTwoPoints { n, r } => {
                check_uniform(n, r, 2)?;
                let sets = level_sets(n, &[r])
                    .into_iter()
                    .filter(|s| s & 0b11 != 0)
                    .collect();
                Ok(Instance::Family(SetFamily::uniform(n, r, sets)?))
            }
            &Construction::FullRLevel { n, r } => {
                check_uniform(n, r, 0)?;
                Ok(Instance::Family(SetFamily::uniform(n, r, level_sets(n, &[r]))?))
            }
        }
    }
}

/// Convenience: parse and build.
pub fn gen_construction(kind: &str, params: &[usize]) -> Result<Instance> {
    Construction::parse(kind, params)?.build()
}

fn check_ground(n: usize) -> Result<()> {
    if n == 0 || n > crate::family::MAX_GROUND {
        return Err(LocexError::Parameter(format!("ground set size {n} out of range")));
    }
    Ok(())
}

fn check_uniform(n: usize, r: usize, min_n: usize) -> Result<()> {
    check_ground(n)?;
    if r == 0 || r > n {
        return Err(LocexError::Parameter(format!("uniformity {r} out of range for n = {n}")));
    }
    if n < min_n {
        return Err(LocexError::Parameter(format!("n = {n} too small")));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq)]
pub enum RandomModel {
    Gnp { n: usize, p: f64 },
    /// Each subset of `[n]` kept independently with probability `density`.
    UniformFamily { n: usize, density: f64 },
    /// Each `r`-subset of `[n]` kept independently with probability `density`.
    UniformRFamily { n: usize, r: usize, density: f64 },
    /// A uniformly shuffled `1..=len`.
    RandomPermutationSequence { len: usize },
}

impl RandomModel {
    pub fn generate(&self, seed: u64) -> Result<Instance> {
        let mut s = Sampler::new(seed);
        match *self {
            RandomModel::Gnp { n, p } => {
                check_probability(p)?;
                Ok(Instance::Graph(gnp(n, p, &mut s)?))
            }
            RandomModel::UniformFamily { n, density } => {
                check_probability(density)?;
                check_ground(n)?;
                let sets = (0u32..1 << n).filter(|_| s.bernoulli(density)).collect();
                Ok(Instance::Family(SetFamily::new(n, sets)?))
            }
            RandomModel::UniformRFamily { n, r, density } => {
                check_probability(density)?;
                check_ground(n)?;
                if r > n {
                    return Err(LocexError::Parameter(format!("r = {r} exceeds n = {n}")));
                }
                let sets = level_sets(n, &[r])
                    .into_iter()
                    .filter(|_| s.bernoulli(density))
                    .collect();
                Ok(Instance::Family(SetFamily::uniform(n, r, sets)?))
            }
            RandomModel::RandomPermutationSequence { len } => {
                if len == 0 {
                    return Err(LocexError::Parameter("sequence length must be positive".into()));
                }
                let mut values: Vec<i64> = (1..=len as i64).collect();
                s.shuffle(&mut values);
                Ok(Instance::Sequence(RealSequence::from_integers(&values)))
            }
        }
    }
}

pub fn gen_random(model: &RandomModel, seed: u64) -> Result<Instance> {
    model.generate(seed)
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(LocexError::Parameter(format!("probability {p} not in [0, 1]")))
    }
}

pub fn gnp(n: usize, p: f64, s: &mut Sampler) -> Result<SmallGraph> {
    check_probability(p)?;
    let mut g = SmallGraph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if s.bernoulli(p) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Random bipartite graph: sides `0..a` and `a..a+b`, cross pairs kept with probability `p`.
pub fn random_bipartite(a: usize, b: usize, p: f64, s: &mut Sampler) -> Result<SmallGraph> {
    check_probability(p)?;
    let mut g = SmallGraph::empty(a + b)?;
    for u in 0..a {
        for v in a..a + b {
            if s.bernoulli(p) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Random poset: each pair `i < j` (as integers) is related `i < j` with probability `p`,
/// then closed transitively. Ranked by longest chain from below.
pub fn random_poset(m: usize, p: f64, s: &mut Sampler) -> Result<RankedPoset> {
    check_probability(p)?;
    let mut rel = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            if s.bernoulli(p) {
                rel.push((i, j));
            }
        }
    }
    let poset = RankedPoset::from_relations(m, &rel)?;
    let mut height = vec![0usize; m];
    for y in 0..m {
        height[y] = (0..y)
            .filter(|&x| poset.less(x, y))
            .map(|x| height[x] + 1)
            .max()
            .unwrap_or(0);
    }
    poset.with_rank(height)
}
