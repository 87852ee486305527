//! Exact Turán numbers for small `n`: `ex(n, F) = C(n,2) - τ`, where `τ` is the
//! fewest edges of `K_n` meeting every copy of `F`.

use std::collections::BTreeMap;
use std::path::Path;

use itertools::Itertools;

use crate::error::{LocexError, Result};
use crate::graph::SmallGraph;
use crate::graph_local::GraphSequenceSpec;
use crate::io::{parse_ex_cache, write_ex_cache, ExCacheEntry};

pub const TURAN_CAP: usize = 8;

/// Edges of the complete `r`-partite graph on `n` vertices with near-equal classes.
pub fn turan_graph_edges(n: usize, r: usize) -> u64 {
    if r == 0 {
        return 0;
    }
    let (q, rem) = (n / r, n % r);
    let sizes = (0..r).map(|i| if i < rem { q + 1 } else { q });
    let total = n * n;
    let inside: usize = sizes.map(|s| s * s).sum();
    ((total - inside) / 2) as u64
}

/// Lexicographically least adjacency string over all relabelings, e.g. `"3:111"`.
pub fn canonical_form(f: &SmallGraph) -> Result<String> {
    let k = f.n();
    if k > TURAN_CAP {
        return Err(LocexError::capacity("pattern vertices for canonical form", TURAN_CAP, k));
    }
    let best = (0..k)
        .permutations(k)
        .map(|p| {
            let mut s = String::with_capacity(k * (k - 1) / 2);
            for i in 0..k {
                for j in i + 1..k {
                    s.push(if f.has_edge(p[i], p[j]) { '1' } else { '0' });
                }
            }
            s
        })
        .max()
        .unwrap_or_default();
    Ok(format!("{k}:{best}"))
}

fn pair_index(n: usize) -> Vec<Vec<usize>> {
    let mut idx = vec![vec![usize::MAX; n]; n];
    let mut next = 0;
    for i in 0..n {
        for j in i + 1..n {
            idx[i][j] = next;
            idx[j][i] = next;
            next += 1;
        }
    }
    idx
}

/// Every copy of `f` in `K_n`, as a mask over the pairs of `[n]`.
fn copies(n: usize, f: &SmallGraph) -> Vec<u64> {
    let idx = pair_index(n);
    let fe = f.edges();
    let mut out: Vec<u64> = (0..n)
        .permutations(f.n())
        .map(|img| fe.iter().fold(0u64, |m, &(a, b)| m | 1u64 << idx[img[a]][img[b]]))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

pub fn exact_turan_number(n: usize, f: &SmallGraph) -> Result<u64> {
    if n == 0 {
        return Err(LocexError::Parameter("n must be positive".into()));
    }
    if n > TURAN_CAP {
        return Err(LocexError::capacity("n for exact Turán search", TURAN_CAP, n));
    }
    let pairs = (n * (n - 1) / 2) as u64;
    if f.n() > n {
        return Ok(pairs);
    }
    if f.edge_count() == 0 {
        return Err(LocexError::Parameter("forbidden graph has no edges".into()));
    }
    let copies = copies(n, f);
    let mut h = Hitting {
        copies: &copies,
        best: pairs as u32,
    };
    h.search(0, 0, 0);
    Ok(pairs - h.best as u64)
}

struct Hitting<'a> {
    copies: &'a [u64],
    best: u32,
}

impl Hitting<'_> {
    /// `removed` edges are deleted; `kept` edges may no longer be deleted in this branch.
    fn search(&mut self, removed: u64, kept: u64, size: u32) {
        if size >= self.best {
            return;
        }
        let mut target: Option<u64> = None;
        let mut packing = 0u32;
        let mut packed = 0u64;
        for &c in self.copies {
            if c & removed != 0 {
                continue;
            }
            let free = c & !kept;
            if free == 0 {
                return;
            }
            if target.map_or(true, |t| free.count_ones() < t.count_ones()) {
                target = Some(free);
            }
            if free & packed == 0 {
                packing += 1;
                packed |= free;
            }
        }
        let Some(free) = target else {
            self.best = size;
            return;
        };
        if size + packing >= self.best {
            return;
        }
        let mut kept = kept;
        let mut rest = free;
        while rest != 0 {
            let e = rest.trailing_zeros();
            rest &= rest - 1;
            self.search(removed | 1u64 << e, kept, size + 1);
            kept |= 1u64 << e;
        }
    }
}

/// `ex(n, F)` values keyed by `n` and the canonical form of `F`.
#[derive(Clone, Debug, Default)]
pub struct TuranCache {
    entries: BTreeMap<(usize, String), u64>,
}

impl TuranCache {
    pub fn new() -> Self {
        TuranCache::default()
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let mut cache = TuranCache::new();
        for e in parse_ex_cache(&text)? {
            cache.entries.insert((e.n, e.signature), e.ex);
        }
        Ok(cache)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let entries: Vec<ExCacheEntry> = self
            .entries
            .iter()
            .map(|((n, signature), &ex)| ExCacheEntry {
                n: *n,
                signature: signature.clone(),
                ex,
            })
            .collect();
        std::fs::write(path, write_ex_cache(&entries))?;
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Stored value only; `None` when absent.
    pub fn lookup(&self, n: usize, f: &SmallGraph) -> Result<Option<u64>> {
        if f.n() > n {
            return Ok(Some((n * (n - 1) / 2) as u64));
        }
        Ok(self.entries.get(&(n, canonical_form(f)?)).copied())
    }

    pub fn insert(&mut self, n: usize, f: &SmallGraph, ex: u64) -> Result<()> {
        self.entries.insert((n, canonical_form(f)?), ex);
        Ok(())
    }

    pub fn get_or_compute(&mut self, n: usize, f: &SmallGraph) -> Result<u64> {
        if f.n() > n {
            return exact_turan_number(n, f);
        }
        let key = (n, canonical_form(f)?);
        if let Some(&ex) = self.entries.get(&key) {
            return Ok(ex);
        }
        let ex = exact_turan_number(n, f)?;
        self.entries.insert(key, ex);
        Ok(ex)
    }
}

/// Fills `ex(n, F_i)` from stored values only; a missing entry is a configuration error.
pub fn fill_ex_table_from(spec: &mut GraphSequenceSpec, n: usize, cache: &TuranCache) -> Result<()> {
    for i in 1..=spec.len() {
        if spec.has_ex(n, i) {
            continue;
        }
        let f = spec.graph(i).expect("index in range");
        let ex = cache.lookup(n, f)?.ok_or_else(|| {
            LocexError::Config(format!(
                "ex-table has no entry for n={n}, F_{i} ({})",
                canonical_form(f).unwrap_or_default()
            ))
        })?;
        spec.set_ex(n, i, ex)?;
    }
    Ok(())
}

/// Fills `ex(n, F_i)` for every graph of the sequence that is missing. Clique
/// sequences use the Turán graph formula, everything else the exact search.
pub fn fill_ex_table(spec: &mut GraphSequenceSpec, n: usize, cache: &mut TuranCache) -> Result<()> {
    for i in 1..=spec.len() {
        if spec.has_ex(n, i) {
            continue;
        }
        let f = spec.graph(i).expect("index in range").clone();
        let complete = f.edge_count() == f.n() * (f.n() - 1) / 2;
        let ex = if complete && f.n() >= 2 && f.n() <= n {
            let ex = turan_graph_edges(n, f.n() - 1);
            if f.n() <= TURAN_CAP {
                cache.insert(n, &f, ex)?;
            }
            ex
        } else {
            cache.get_or_compute(n, &f)?
        };
        spec.set_ex(n, i, ex)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::labeled_graph;
    use crate::graph_local::named_graph;
    use crate::subgraph::contains_subgraph;

    fn brute_ex(n: usize, f: &SmallGraph) -> u64 {
        let pairs = n * (n - 1) / 2;
        (0u64..1 << pairs)
            .map(|code| labeled_graph(n, code))
            .filter(|g| !contains_subgraph(g, f))
            .map(|g| g.edge_count() as u64)
            .max()
            .unwrap()
    }

    #[test]
    fn known_values() {
        let tri = named_graph("triangle").unwrap();
        let bow = named_graph("bowtie").unwrap();
        assert_eq!(exact_turan_number(6, &tri).unwrap(), 9);
        assert_eq!(exact_turan_number(6, &bow).unwrap(), 10);
        assert_eq!(exact_turan_number(5, &SmallGraph::complete(2).unwrap()).unwrap(), 0);
        assert_eq!(exact_turan_number(3, &SmallGraph::complete(4).unwrap()).unwrap(), 3);
        assert!(exact_turan_number(9, &tri).is_err());
        assert!(exact_turan_number(4, &SmallGraph::empty(2).unwrap()).is_err());
    }

    #[test]
    fn cliques_match_turan_graphs() {
        for n in 1..=8 {
            for r in 1..=4 {
                let k = SmallGraph::complete(r + 1).unwrap();
                assert_eq!(exact_turan_number(n, &k).unwrap(), turan_graph_edges(n, r), "n={n} r={r}");
            }
        }
    }

    #[test]
    fn matches_enumeration_over_all_graphs() {
        for name in ["p2", "p3", "c4", "s3", "triangle"] {
            let f = named_graph(name).unwrap();
            for n in 2..=6 {
                assert_eq!(exact_turan_number(n, &f).unwrap(), brute_ex(n, &f), "{name} n={n}");
            }
        }
    }

    #[test]
    fn canonical_forms_ignore_labels() {
        let a = SmallGraph::from_edges(4, &[(0, 1), (1, 2)]).unwrap();
        let b = SmallGraph::from_edges(4, &[(3, 2), (2, 0)]).unwrap();
        let c = SmallGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        assert_ne!(canonical_form(&a).unwrap(), canonical_form(&c).unwrap());
    }

    #[test]
    fn cache_roundtrip() {
        let dir = std::env::temp_dir().join(format!("locex-turan-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("ex.cache");
        let mut cache = TuranCache::new();
        let tri = named_graph("triangle").unwrap();
        assert_eq!(cache.get_or_compute(6, &tri).unwrap(), 9);
        cache.save(&path).unwrap();
        let loaded = TuranCache::load(&path).unwrap();
        assert_eq!(loaded.len(), 1);
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn fills_sequence_tables() {
        let mut spec = GraphSequenceSpec::from_names(&["triangle", "bowtie"]).unwrap();
        fill_ex_table(&mut spec, 6, &mut TuranCache::new()).unwrap();
        assert_eq!(spec.ex(6, 1).unwrap(), 9);
        assert_eq!(spec.ex(6, 2).unwrap(), 10);
        let mut big = GraphSequenceSpec::cliques(10).unwrap();
        fill_ex_table(&mut big, 12, &mut TuranCache::new()).unwrap();
        assert_eq!(big.ex(12, 10).unwrap(), turan_graph_edges(12, 10));
    }
}
