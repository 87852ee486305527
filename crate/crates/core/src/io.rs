//! Text formats for instances.
//!
//! * graph: `n m`, then `m` lines `u v` (0-based)
//! * family: `n`, then one set per line as space-separated elements; a blank
//!   line is the empty set
//! * sequence: whitespace-separated decimal literals
//! * poset: `m`, then `u v` lines meaning `u < v` and optional `rank u k` lines
//! * sigma: one line with a permutation of `0..n`
//! * ex-table cache: `n <signature> ex` lines
//!
//! `#` starts a comment everywhere. In family files a line that is only a
//! comment is skipped; it does not count as an empty set.

use std::collections::HashSet;
use std::path::Path;

use crate::error::{LocexError, Result};
use crate::family::SetFamily;
use crate::graph::{SmallGraph, MAX_VERTICES};
use crate::poset::RankedPoset;
use crate::sequence::RealSequence;

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn is_comment_only(line: &str) -> bool {
    line.trim_start().starts_with('#')
}

/// Non-blank, comment-stripped lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l).trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_usize(format: &'static str, line: usize, tok: &str) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| LocexError::parse(format, line, format!("expected a nonnegative integer, got {tok:?}")))
}

pub fn parse_graph(text: &str) -> Result<SmallGraph> {
    const F: &str = "graph";
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| LocexError::parse(F, 1, "missing header \"n m\""))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(LocexError::parse(F, hl, "header must be \"n m\""));
    }
    let n = parse_usize(F, hl, toks[0])?;
    let m = parse_usize(F, hl, toks[1])?;
    if n == 0 || n > MAX_VERTICES {
        return Err(LocexError::parse(F, hl, format!("vertex count {n} not in 1..=64")));
    }
    if m > n * (n - 1) / 2 {
        return Err(LocexError::parse(F, hl, format!("{m} edges cannot fit on {n} vertices")));
    }
    let mut g = SmallGraph::empty(n)?;
    let mut count = 0;
    for (ln, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(LocexError::parse(F, ln, "edge line must be \"u v\""));
        }
        let u = parse_usize(F, ln, toks[0])?;
        let v = parse_usize(F, ln, toks[1])?;
        if u >= n || v >= n {
            return Err(LocexError::parse(F, ln, format!("endpoint out of range 0..{n}")));
        }
        if u == v {
            return Err(LocexError::parse(F, ln, "self-loop"));
        }
        if g.has_edge(u, v) {
            return Err(LocexError::parse(F, ln, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v)?;
        count += 1;
    }
    if count != m {
        return Err(LocexError::parse(F, hl, format!("header promises {m} edges, found {count}")));
    }
    Ok(g)
}

pub fn write_graph(g: &SmallGraph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_family(text: &str) -> Result<SetFamily> {
    const F: &str = "family";
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let mut header = None;
    for (ln, line) in lines.by_ref() {
        let content = strip_comment(line).trim();
        if !content.is_empty() {
            header = Some((ln, content));
            break;
        }
    }
    let (hl, header) = header.ok_or_else(|| LocexError::parse(F, 1, "missing header \"n\""))?;
    let n = parse_usize(F, hl, header)?;
    if n == 0 || n > crate::family::MAX_GROUND {
        return Err(LocexError::parse(F, hl, format!("ground set size {n} not in 1..=24")));
    }
    let mut sets = Vec::new();
    let mut seen = HashSet::new();
    for (ln, line) in lines {
        if is_comment_only(line) {
            continue;
        }
        let mut set = 0u32;
        for tok in strip_comment(line).split_whitespace() {
            let x = parse_usize(F, ln, tok)?;
            if x >= n {
                return Err(LocexError::parse(F, ln, format!("element {x} out of range 0..{n}")));
            }
            if set >> x & 1 == 1 {
                return Err(LocexError::parse(F, ln, format!("element {x} repeated")));
            }
            set |= 1 << x;
        }
        if !seen.insert(set) {
            return Err(LocexError::parse(F, ln, "set repeated"));
        }
        sets.push(set);
    }
    SetFamily::new(n, sets)
}

pub fn write_family(f: &SetFamily) -> String {
    let mut out = format!("{}\n", f.n());
    for i in 0..f.len() {
        let elems: Vec<String> = f.elements(i).iter().map(|x| x.to_string()).collect();
        out.push_str(&elems.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_sequence(text: &str) -> Result<RealSequence> {
    const F: &str = "sequence";
    let mut values = Vec::new();
    for (ln, line) in content_lines(text) {
        for tok in line.split_whitespace() {
            let v = crate::rational::ExactRational::from_decimal(tok)
                .map_err(|e| LocexError::parse(F, ln, e.to_string()))?;
            values.push(v);
        }
    }
    if values.is_empty() {
        return Err(LocexError::parse(F, 1, "sequence is empty"));
    }
    Ok(RealSequence::new(values))
}

/// Writes values as exact decimals when they have a terminating expansion,
/// otherwise as `num/den` (which [`parse_sequence`] rejects).
pub fn write_sequence(s: &RealSequence) -> String {
    let parts: Vec<String> = s
        .values()
        .iter()
        .map(|v| decimal_string(v).unwrap_or_else(|| v.to_string()))
        .collect();
    let mut out = parts.join(" ");
    out.push('\n');
    out
}

fn decimal_string(v: &crate::rational::ExactRational) -> Option<String> {
    use num_bigint::BigInt;
    use num_traits::{One, Signed, Zero};

    let mut den = v.denom().clone();
    let (two, five) = (BigInt::from(2), BigInt::from(5));
    let (mut twos, mut fives) = (0usize, 0usize);
    while (&den % &two).is_zero() {
        den /= &two;
        twos += 1;
    }
    while (&den % &five).is_zero() {
        den /= &five;
        fives += 1;
    }
    if !den.is_one() {
        return None;
    }
    let k = twos.max(fives);
    let scaled = v.numer() * num_traits::pow(BigInt::from(10), k) / v.denom();
    let digits = scaled.abs().to_string();
    let sign = if scaled.is_negative() { "-" } else { "" };
    if k == 0 {
        return Some(format!("{sign}{digits}"));
    }
    let padded = format!("{digits:0>width$}", width = k + 1);
    let (int, frac) = padded.split_at(padded.len() - k);
    Some(format!("{sign}{int}.{frac}"))
}

pub fn parse_poset(text: &str) -> Result<RankedPoset> {
    const F: &str = "poset";
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| LocexError::parse(F, 1, "missing header \"m\""))?;
    let m = parse_usize(F, hl, header)?;
    if m == 0 || m > crate::poset::MAX_ELEMENTS {
        return Err(LocexError::parse(F, hl, format!("element count {m} not in 1..=64")));
    }
    let mut relations = Vec::new();
    let mut ranks: Vec<Option<usize>> = vec![None; m];
    let mut any_rank = false;
    for (ln, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            ["rank", u, k] => {
                let u = parse_usize(F, ln, u)?;
                let k = parse_usize(F, ln, k)?;
                if u >= m {
                    return Err(LocexError::parse(F, ln, format!("element {u} out of range")));
                }
                if ranks[u].replace(k).is_some() {
                    return Err(LocexError::parse(F, ln, format!("rank of {u} given twice")));
                }
                any_rank = true;
            }
            [u, v] => {
                let u = parse_usize(F, ln, u)?;
                let v = parse_usize(F, ln, v)?;
                if u >= m || v >= m {
                    return Err(LocexError::parse(F, ln, "element out of range"));
                }
                relations.push((u, v));
            }
            _ => return Err(LocexError::parse(F, ln, "expected \"u v\" or \"rank u k\"")),
        }
    }
    let poset = RankedPoset::from_relations(m, &relations)?;
    if !any_rank {
        return Ok(poset);
    }
    let rank = ranks
        .iter()
        .enumerate()
        .map(|(x, r)| r.ok_or_else(|| LocexError::parse(F, hl, format!("element {x} has no rank"))))
        .collect::<Result<Vec<_>>>()?;
    poset.with_rank(rank)
}

pub fn write_poset(p: &RankedPoset) -> String {
    let mut out = format!("{}\n", p.m());
    for (x, y) in p.covers() {
        out.push_str(&format!("{x} {y}\n"));
    }
    if let Some(rank) = p.rank() {
        for (x, r) in rank.iter().enumerate() {
            out.push_str(&format!("rank {x} {r}\n"));
        }
    }
    out
}

/// Parses a permutation of `0..n`. `n` is taken from the line length.
pub fn parse_sigma(text: &str) -> Result<Vec<usize>> {
    const F: &str = "sigma";
    let mut lines = content_lines(text);
    let (ln, line) = lines
        .next()
        .ok_or_else(|| LocexError::parse(F, 1, "missing permutation line"))?;
    if let Some((extra, _)) = lines.next() {
        return Err(LocexError::parse(F, extra, "expected a single line"));
    }
    let order = line
        .split_whitespace()
        .map(|t| parse_usize(F, ln, t))
        .collect::<Result<Vec<_>>>()?;
    let n = order.len();
    let mut seen = vec![false; n];
    for &x in &order {
        if x >= n || std::mem::replace(&mut seen[x], true) {
            return Err(LocexError::parse(F, ln, format!("not a permutation of 0..{n}")));
        }
    }
    Ok(order)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExCacheEntry {
    pub n: usize,
    pub signature: String,
    pub ex: u64,
}

pub fn parse_ex_cache(text: &str) -> Result<Vec<ExCacheEntry>> {
    const F: &str = "ex-cache";
    content_lines(text)
        .map(|(ln, line)| {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 3 {
                return Err(LocexError::parse(F, ln, "expected \"n signature ex\""));
            }
            let n = parse_usize(F, ln, toks[0])?;
            let ex = toks[2]
                .parse::<u64>()
                .map_err(|_| LocexError::parse(F, ln, "ex must be a nonnegative integer"))?;
            Ok(ExCacheEntry {
                n,
                signature: toks[1].to_string(),
                ex,
            })
        })
        .collect()
}

pub fn write_ex_cache(entries: &[ExCacheEntry]) -> String {
    entries
        .iter()
        .map(|e| format!("{} {} {}\n", e.n, e.signature, e.ex))
        .collect()
}

fn read(path: &Path) -> Result<String> {
    Ok(std::fs::read_to_string(path)?)
}

pub fn read_graph(path: &Path) -> Result<SmallGraph> {
    parse_graph(&read(path)?)
}

pub fn read_family(path: &Path) -> Result<SetFamily> {
    parse_family(&read(path)?)
}

pub fn read_sequence(path: &Path) -> Result<RealSequence> {
    parse_sequence(&read(path)?)
}

pub fn read_poset(path: &Path) -> Result<RankedPoset> {
    parse_poset(&read(path)?)
}

pub fn read_sigma(path: &Path) -> Result<Vec<usize>> {
    parse_sigma(&read(path)?)
}
