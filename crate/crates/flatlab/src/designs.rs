//! Incidence structures and t-design verification, translation and addition
//! designs of bent functions, relative-difference-set checks, invariant
//! fingerprints and budget-bounded isomorphism testing.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::func::{dot, VectorialFunc};
use crate::spectra::{dual_bent, SpectrumReport};

/// A simple incidence structure: `v` points, blocks of size `k`, blocks kept
/// as a strictly sorted, deduplicated list of sorted point tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceStructure {
    v: usize,
    k: usize,
    blocks: Vec<Vec<usize>>,
}

pub fn comb(v: u64, t: u64) -> u64 {
    if t > v {
        return 0;
    }
    let mut acc = 1u64;
    for i in 0..t {
        acc = acc * (v - i) / (i + 1);
    }
    acc
}

impl IncidenceStructure {
    /// Sorts every block and the block list, deduplicates, and validates
    /// that each block is a k-subset of the point range.
    pub fn new(v: usize, k: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        for b in &mut blocks {
            b.sort_unstable();
            if b.len() != k
                || b.windows(2).any(|w| w[0] == w[1])
                || b.last().is_some_and(|&p| p >= v)
            {
                return Err(Error::BadParameters);
            }
        }
        blocks.sort_unstable();
        blocks.dedup();
        Ok(IncidenceStructure { v, k, blocks })
    }

    pub fn empty(v: usize, k: usize) -> Self {
        IncidenceStructure { v, k, blocks: Vec::new() }
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn contains(&self, block: &[usize]) -> bool {
        self.blocks.binary_search_by(|b| b.as_slice().cmp(block)).is_ok()
    }

    /// Number of blocks through each point.
    pub fn degrees(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.v];
        for b in &self.blocks {
            for &p in b {
                deg[p] += 1;
            }
        }
        deg
    }

    /// Serializes as a `v=.. k=.. b=..` header followed by one sorted block
    /// per line.
    pub fn to_file_string(&self) -> String {
        let mut out = format!("v={} k={} b={}\n", self.v, self.k, self.blocks.len());
        for b in &self.blocks {
            let words: Vec<String> = b.iter().map(|p| p.to_string()).collect();
            out.push_str(&words.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_file_string(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty file".into()))?;
        let mut v = None;
        let mut k = None;
        let mut b = None;
        for field in header.split_whitespace() {
            let (key, val) = field
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad header field {field:?}")))?;
            let val: usize = val
                .parse()
                .map_err(|_| Error::Parse(format!("bad header value {val:?}")))?;
            match key {
                "v" => v = Some(val),
                "k" => k = Some(val),
                "b" => b = Some(val),
                _ => return Err(Error::Parse(format!("unknown header key {key:?}"))),
            }
        }
        let (v, k, b) = match (v, k, b) {
            (Some(v), Some(k), Some(b)) => (v, k, b),
            _ => return Err(Error::Parse("header must set v, k and b".into())),
        };
        let mut blocks = Vec::with_capacity(b);
        for line in lines {
            let block: std::result::Result<Vec<usize>, _> =
                line.split_whitespace().map(|w| w.parse()).collect();
            blocks.push(block.map_err(|_| Error::Parse(format!("bad block line {line:?}")))?);
        }
        if blocks.len() != b {
            return Err(Error::Parse(format!(
                "header claims {b} blocks, found {}",
                blocks.len()
            )));
        }
        IncidenceStructure::new(v, k, blocks)
    }
}

/// Whether S is a t-design; returns the valency lambda if so.
///
/// Coverage counting: every block contributes C(k,t) t-subsets; S is a
/// t-design iff every t-subset of points is covered the same number of
/// times. An empty block set is a t-design with lambda = 0.
pub fn is_t_design(s: &IncidenceStructure, t: usize) -> Result<Option<u64>> {
    if t < 1 || t > s.k {
        return Err(Error::BadParameters);
    }
    if t > 3 || s.v > 1 << 10 {
        return Err(Error::TooLarge);
    }
    if s.blocks.is_empty() {
        return Ok(Some(0));
    }
    let total = comb(s.v as u64, t as u64);
    let mut coverage: HashMap<Vec<usize>, u64> = HashMap::new();
    let mut subset = vec![0usize; t];
    for block in &s.blocks {
        // iterate t-subsets of the block by index vector
        let mut idx: Vec<usize> = (0..t).collect();
        loop {
            for (j, &i) in idx.iter().enumerate() {
                subset[j] = block[i];
            }
            *coverage.entry(subset.clone()).or_insert(0) += 1;
            // advance the combination
            let mut i = t;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if idx[i] != i + s.k - t {
                    idx[i] += 1;
                    for j in i + 1..t {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
                if i == 0 {
                    idx.clear();
                    break;
                }
            }
            if idx.is_empty() {
                break;
            }
        }
    }
    if coverage.len() as u64 != total {
        return Ok(None); // some t-subset uncovered
    }
    let lambda = *coverage.values().next().unwrap();
    if coverage.values().all(|&c| c == lambda) {
        Ok(Some(lambda))
    } else {
        Ok(None)
    }
}

/// Design verdicts of one structure for t in {1, 2, 3}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignReport {
    pub v: usize,
    pub k: usize,
    pub b: usize,
    /// lambda_per_t[t-1] is Some(lambda) iff the structure is a t-design;
    /// entries with t > k stay None.
    pub lambda_per_t: [Option<u64>; 3],
}

impl DesignReport {
    /// Largest verified t.
    pub fn t(&self) -> usize {
        self.lambda_per_t
            .iter()
            .rposition(|l| l.is_some())
            .map_or(0, |i| i + 1)
    }

    pub fn lambda(&self) -> Option<u64> {
        self.lambda_per_t.iter().flatten().last().copied()
    }

    /// Replication number (valency at t = 1).
    pub fn r(&self) -> Option<u64> {
        self.lambda_per_t[0]
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "t": self.t(),
            "lambda": self.lambda(),
            "r": self.r(),
            "b": self.b,
        })
    }
}

pub fn design_report(s: &IncidenceStructure) -> Result<DesignReport> {
    let mut lambda_per_t = [None; 3];
    for t in 1..=3.min(s.k) {
        lambda_per_t[t - 1] = is_t_design(s, t)?;
    }
    Ok(DesignReport {
        v: s.v,
        k: s.k,
        b: s.blocks.len(),
        lambda_per_t,
    })
}

/// Merges two block-disjoint structures over the same point set.
pub fn union_disjoint(
    s1: &IncidenceStructure,
    s2: &IncidenceStructure,
) -> Result<IncidenceStructure> {
    if s1.v != s2.v || s1.k != s2.k {
        return Err(Error::MismatchedPoints);
    }
    let mut blocks = Vec::with_capacity(s1.blocks.len() + s2.blocks.len());
    blocks.extend_from_slice(&s1.blocks);
    blocks.extend_from_slice(&s2.blocks);
    blocks.sort_unstable();
    if blocks.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::OverlappingBlocks);
    }
    Ok(IncidenceStructure {
        v: s1.v,
        k: s1.k,
        blocks,
    })
}

/// Whether `parts` are pairwise block-disjoint and their union is `whole`.
pub fn verify_partition(
    whole: &IncidenceStructure,
    parts: &[&IncidenceStructure],
) -> Result<bool> {
    let mut blocks = Vec::new();
    for p in parts {
        if p.v != whole.v || p.k != whole.k {
            return Err(Error::MismatchedPoints);
        }
        blocks.extend_from_slice(&p.blocks);
    }
    blocks.sort_unstable();
    if blocks.windows(2).any(|w| w[0] == w[1]) {
        return Ok(false);
    }
    Ok(blocks == whole.blocks)
}

/// One verified step of a bent extension chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionStep {
    /// Output dimension the step extends from.
    pub m_from: usize,
    /// Blocks of the derived-flats difference design.
    pub derived_blocks: usize,
    /// Its 2-design valency.
    pub lambda: u64,
}

/// Verifies the vanishing-flats partition along a chain of bent functions,
/// each extending the previous one by one output coordinate: at every step
/// the larger vanishing-flats set splits as the smaller one plus a 2-design
/// difference of predicted valency and block count.
pub fn verify_extension_partition(chain: &[VectorialFunc]) -> Result<Vec<ExtensionStep>> {
    if chain.is_empty() {
        return Err(Error::BadParameters);
    }
    for f in chain {
        if !SpectrumReport::analyze(f).is_bent {
            return Err(Error::NotBentInChain);
        }
    }
    let n = chain[0].n();
    let mut steps = Vec::new();
    for pair in chain.windows(2) {
        let (f, g) = (&pair[0], &pair[1]);
        let m = f.m();
        if g.n() != n || g.m() != m + 1 || &g.project(m)? != f {
            return Err(Error::BadParameters);
        }
        let vf_big = crate::flats::enumerate_flats(f)?.vf;
        let vf_small = crate::flats::enumerate_flats(g)?.vf;
        // the smaller set must embed in the larger
        if !vf_small.blocks.iter().all(|b| vf_big.contains(b)) {
            return Err(Error::PartitionFails);
        }
        let derived: Vec<Vec<usize>> = vf_big
            .blocks
            .iter()
            .filter(|b| !vf_small.contains(b))
            .cloned()
            .collect();
        let diff = IncidenceStructure::new(1 << n, 4, derived)?;
        let expected_blocks = crate::flats::vf_count_bent(n, m)? - crate::flats::vf_count_bent(n, m + 1)?;
        let expected_lambda = 1u64 << (n - m - 2);
        if diff.block_count() as u64 != expected_blocks
            || is_t_design(&diff, 2)? != Some(expected_lambda)
        {
            return Err(Error::PartitionFails);
        }
        steps.push(ExtensionStep {
            m_from: m,
            derived_blocks: diff.block_count(),
            lambda: expected_lambda,
        });
    }
    Ok(steps)
}

/// Translation design dev(supp f): the translates of the support of a
/// Boolean function.
pub fn translation_design(f: &VectorialFunc) -> Result<IncidenceStructure> {
    if f.m() != 1 {
        return Err(Error::BadParameters);
    }
    let supp = f.support();
    if supp.is_empty() {
        return Err(Error::EmptySupport);
    }
    let size = 1usize << f.n();
    let blocks = (0..size)
        .map(|g| supp.iter().map(|&x| x as usize ^ g).collect())
        .collect();
    IncidenceStructure::new(size, supp.len(), blocks)
}

/// Addition design D(f): supports of all f + l with l affine and
/// wt(f + l) = wt(f).
pub fn addition_design(f: &VectorialFunc) -> Result<IncidenceStructure> {
    if f.m() != 1 {
        return Err(Error::BadParameters);
    }
    let w = f.weight();
    if w == 0 {
        return Err(Error::EmptySupport);
    }
    let size = 1usize << f.n();
    let mut blocks = Vec::new();
    for a in 0..size as u32 {
        for c in 0..2u32 {
            let block: Vec<usize> = (0..size)
                .filter(|&x| f.value(x) ^ dot(a, x as u32) ^ c == 1)
                .collect();
            if block.len() == w {
                blocks.push(block);
            }
        }
    }
    IncidenceStructure::new(size, w, blocks)
}

/// Addition design of a bent function via the incidence-matrix formula
/// m_{x,y} = f~(x) + f(y) + <x,y> + f~(0): the blocks are the row supports.
pub fn addition_design_via_dual(f: &VectorialFunc) -> Result<IncidenceStructure> {
    let dual = dual_bent(f)?; // checks bentness
    let size = 1usize << f.n();
    let d0 = dual.value(0);
    let blocks = (0..size)
        .map(|x| {
            (0..size)
                .filter(|&y| dual.value(x) ^ f.value(y) ^ dot(x as u32, y as u32) ^ d0 == 1)
                .collect::<Vec<usize>>()
        })
        .collect();
    let k = f.weight();
    IncidenceStructure::new(size, k, blocks)
}

/// Verdict of the relative-difference-set check on the graph of F.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RdsReport {
    pub is_rds: bool,
    /// Target count 2^(n-m) for every element outside the forbidden subgroup.
    pub lambda: u64,
    /// Elements of N \ {0}, N = {0} x F_2^m, are never hit (structural here:
    /// differences of distinct graph points have a nonzero first part).
    pub forbidden_ok: bool,
}

/// Whether the graph of F is a relative (2^n, 2^m, 2^n, 2^(n-m))-difference
/// set in F_2^n x F_2^m relative to N = {0} x F_2^m.
pub fn rds_check(f: &VectorialFunc) -> RdsReport {
    let (n, m) = (f.n(), f.m());
    let size = 1usize << n;
    let lambda = 1u64 << (n - m.min(n));
    let mut counts = vec![0u64; 1 << (n + m)];
    for x1 in 0..size {
        for x2 in 0..size {
            if x1 != x2 {
                let d = (x1 ^ x2) << m | (f.value(x1) ^ f.value(x2)) as usize;
                counts[d] += 1;
            }
        }
    }
    let forbidden_ok = (1..1usize << m).all(|v| counts[v] == 0);
    let is_rds = forbidden_ok
        && (1..size).all(|d| (0..1usize << m).all(|v| counts[d << m | v] == lambda));
    RdsReport {
        is_rds,
        lambda,
        forbidden_ok,
    }
}

/// Canonical isomorphism-invariant summary of an incidence structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    pub v: usize,
    pub k: usize,
    pub b: usize,
    pub degrees: Vec<u64>,
    /// Sorted pair-coverage multiset; omitted when v > 256.
    pub pair_coverage: Option<Vec<u64>>,
    /// Sorted (intersection size, pair count) distribution over block pairs;
    /// omitted when the structure has more than 5000 blocks.
    pub block_intersections: Option<Vec<(usize, u64)>>,
}

fn pair_coverage_matrix(s: &IncidenceStructure) -> Vec<u32> {
    let v = s.v;
    let mut cov = vec![0u32; v * v];
    for block in &s.blocks {
        for (i, &p) in block.iter().enumerate() {
            for &q in &block[i + 1..] {
                cov[p * v + q] += 1;
                cov[q * v + p] += 1;
            }
        }
    }
    cov
}

pub fn fingerprint(s: &IncidenceStructure) -> Fingerprint {
    let mut degrees = s.degrees();
    degrees.sort_unstable();
    let pair_coverage = (s.v <= 256).then(|| {
        let cov = pair_coverage_matrix(s);
        let mut out: Vec<u64> = (0..s.v)
            .flat_map(|p| (p + 1..s.v).map(move |q| (p, q)))
            .map(|(p, q)| cov[p * s.v + q] as u64)
            .collect();
        out.sort_unstable();
        out
    });
    let block_intersections = (s.blocks.len() <= 5000).then(|| {
        let mut dist: HashMap<usize, u64> = HashMap::new();
        for (i, a) in s.blocks.iter().enumerate() {
            for b in &s.blocks[i + 1..] {
                // sorted blocks: two-pointer intersection size
                let (mut ia, mut ib, mut common) = (0, 0, 0);
                while ia < a.len() && ib < b.len() {
                    match a[ia].cmp(&b[ib]) {
                        std::cmp::Ordering::Less => ia += 1,
                        std::cmp::Ordering::Greater => ib += 1,
                        std::cmp::Ordering::Equal => {
                            common += 1;
                            ia += 1;
                            ib += 1;
                        }
                    }
                }
                *dist.entry(common).or_insert(0) += 1;
            }
        }
        let mut out: Vec<(usize, u64)> = dist.into_iter().collect();
        out.sort_unstable();
        out
    });
    Fingerprint {
        v: s.v,
        k: s.k,
        b: s.blocks.len(),
        degrees,
        pair_coverage,
        block_intersections,
    }
}

/// Three-valued isomorphism verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Iso {
    Yes,
    No,
    /// Search budget exhausted before a decision.
    Unknown,
}

struct IsoSearch<'a> {
    v: usize,
    order: Vec<usize>,
    deg1: Vec<u64>,
    deg2: Vec<u64>,
    cov1: Vec<u32>,
    cov2: Vec<u32>,
    blocks1_by_point: Vec<Vec<usize>>,
    s1: &'a IncidenceStructure,
    set2: HashSet<&'a [usize]>,
    budget: u64,
}

impl IsoSearch<'_> {
    /// Depth-first extension of the partial point map; returns None when the
    /// budget runs out.
    fn extend(&mut self, depth: usize, map: &mut Vec<Option<usize>>, used: &mut Vec<bool>) -> Option<bool> {
        if depth == self.order.len() {
            return Some(true);
        }
        let p = self.order[depth];
        for q in 0..self.v {
            if used[q] || self.deg1[p] != self.deg2[q] {
                continue;
            }
            // pair coverage must match against every already-mapped point
            if self.order[..depth].iter().any(|&p2| {
                self.cov1[p * self.v + p2] != self.cov2[q * self.v + map[p2].unwrap()]
            }) {
                continue;
            }
            if self.budget == 0 {
                return None;
            }
            self.budget -= 1;
            map[p] = Some(q);
            used[q] = true;
            // any block fully mapped by this assignment must land in S2
            let consistent = self.blocks1_by_point[p].iter().all(|&bi| {
                let block = &self.s1.blocks[bi];
                let mut image: Vec<usize> = Vec::with_capacity(block.len());
                for &pt in block {
                    match map[pt] {
                        Some(img) => image.push(img),
                        None => return true, // not fully mapped yet
                    }
                }
                image.sort_unstable();
                self.set2.contains(image.as_slice())
            });
            if consistent {
                match self.extend(depth + 1, map, used) {
                    Some(true) => return Some(true),
                    Some(false) => {}
                    None => return None,
                }
            }
            map[p] = None;
            used[q] = false;
        }
        Some(false)
    }
}

/// Budget-bounded isomorphism test; `budget` caps node expansions.
pub fn isomorphic(
    s1: &IncidenceStructure,
    s2: &IncidenceStructure,
    budget: u64,
) -> Result<Iso> {
    if s1.v != s2.v || s1.k != s2.k {
        return Err(Error::ShapeMismatch);
    }
    if fingerprint(s1) != fingerprint(s2) {
        return Ok(Iso::No);
    }
    let v = s1.v;
    let mut blocks1_by_point = vec![Vec::new(); v];
    for (i, b) in s1.blocks.iter().enumerate() {
        for &p in b {
            blocks1_by_point[p].push(i);
        }
    }
    // assign high-degree points first: most constrained earliest
    let deg1 = s1.degrees();
    let deg2 = s2.degrees();
    let mut order: Vec<usize> = (0..v).collect();
    order.sort_by_key(|&p| std::cmp::Reverse(deg1[p]));
    let mut search = IsoSearch {
        v,
        order,
        deg1,
        deg2,
        cov1: pair_coverage_matrix(s1),
        cov2: pair_coverage_matrix(s2),
        blocks1_by_point,
        s1,
        set2: s2.blocks.iter().map(|b| b.as_slice()).collect(),
        budget,
    };
    let mut map = vec![None; v];
    let mut used = vec![false; v];
    Ok(match search.extend(0, &mut map, &mut used) {
        Some(true) => Iso::Yes,
        Some(false) => Iso::No,
        None => Iso::Unknown,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    #[test]
    fn empty_structure_is_trivial_design() {
        let s = IncidenceStructure::empty(16, 4);
        for t in 1..=3 {
            assert_eq!(is_t_design(&s, t).unwrap(), Some(0));
        }
    }

    #[test]
    fn construction_validates_and_dedups() {
        let s = IncidenceStructure::new(6, 3, vec![vec![2, 1, 0], vec![0, 1, 2], vec![3, 4, 5]])
            .unwrap();
        assert_eq!(s.block_count(), 2);
        assert!(s.contains(&[0, 1, 2]));
        assert!(IncidenceStructure::new(4, 3, vec![vec![0, 1, 4]]).is_err());
        assert!(IncidenceStructure::new(4, 3, vec![vec![0, 1, 1]]).is_err());
        assert!(IncidenceStructure::new(4, 3, vec![vec![0, 1]]).is_err());
    }

    /// The Fano plane: the canonical 2-(7,3,1) design.
    fn fano() -> IncidenceStructure {
        IncidenceStructure::new(
            7,
            3,
            vec![
                vec![0, 1, 2],
                vec![0, 3, 4],
                vec![0, 5, 6],
                vec![1, 3, 5],
                vec![1, 4, 6],
                vec![2, 3, 6],
                vec![2, 4, 5],
            ],
        )
        .unwrap()
    }

    #[test]
    fn fano_plane_report() {
        let report = design_report(&fano()).unwrap();
        assert_eq!(report.lambda_per_t, [Some(3), Some(1), None]);
        assert_eq!(report.t(), 2);
        assert_eq!(report.lambda(), Some(1));
        assert_eq!(report.r(), Some(3));
        // b C(k,t) = lambda C(v,t): 7*3 = 1*21
        assert_eq!(report.b as u64 * comb(3, 2), comb(7, 2));
    }

    #[test]
    fn design_report_json() {
        let json = design_report(&fano()).unwrap().to_json();
        assert_eq!(json["t"], 2);
        assert_eq!(json["lambda"], 1);
        assert_eq!(json["r"], 3);
        assert_eq!(json["b"], 7);
    }

    #[test]
    fn union_and_partition() {
        let f = fano();
        // complement blocks of the Fano plane form another 2-design
        let comp_blocks: Vec<Vec<usize>> = f
            .blocks()
            .iter()
            .map(|b| (0..7).filter(|p| !b.contains(p)).collect())
            .collect();
        let comp = IncidenceStructure::new(7, 4, comp_blocks).unwrap();
        assert_eq!(is_t_design(&comp, 2).unwrap(), Some(2));

        let lines = f.blocks().to_vec();
        let s1 = IncidenceStructure::new(7, 3, lines[..3].to_vec()).unwrap();
        let s2 = IncidenceStructure::new(7, 3, lines[3..].to_vec()).unwrap();
        let u = union_disjoint(&s1, &s2).unwrap();
        assert_eq!(u, f);
        assert!(verify_partition(&f, &[&s1, &s2]).unwrap());
        assert!(!verify_partition(&f, &[&s1]).unwrap());
        assert!(matches!(union_disjoint(&f, &s1), Err(Error::OverlappingBlocks)));
        assert!(matches!(
            union_disjoint(&s1, &IncidenceStructure::empty(8, 3)),
            Err(Error::MismatchedPoints)
        ));
        // overlapping parts are a failed partition, not an error
        assert!(!verify_partition(&f, &[&s1, &s1, &s2]).unwrap());
    }

    #[test]
    fn translation_design_f4() {
        let s = translation_design(&fixtures::f4()).unwrap();
        assert_eq!((s.v(), s.k(), s.block_count()), (16, 6, 16));
        let report = design_report(&s).unwrap();
        assert_eq!(report.lambda_per_t[1], Some(2)); // 2-(16,6,2)
    }

    #[test]
    fn translation_design_complement() {
        let one = VectorialFunc::from_truth_table(4, 1, vec![1; 16]).unwrap();
        let f = fixtures::f4().xor(&one).unwrap();
        let s = translation_design(&f).unwrap();
        assert_eq!((s.v(), s.k()), (16, 10));
        assert_eq!(is_t_design(&s, 2).unwrap(), Some(6)); // 2-(16,10,6)
    }

    #[test]
    fn translation_design_non_bent() {
        let x1 = (0..16).map(|x| x & 1).collect();
        let f = VectorialFunc::from_truth_table(4, 1, x1).unwrap();
        let s = translation_design(&f).unwrap();
        assert_eq!(is_t_design(&s, 2).unwrap(), None);
        let zero = VectorialFunc::from_truth_table(4, 1, vec![0; 16]).unwrap();
        assert!(matches!(translation_design(&zero), Err(Error::EmptySupport)));
    }

    #[test]
    fn addition_design_both_variants() {
        let f = fixtures::f4();
        let direct = addition_design(&f).unwrap();
        let dual = addition_design_via_dual(&f).unwrap();
        assert_eq!(direct, dual);
        assert_eq!(direct.block_count(), 16);
        assert_eq!(is_t_design(&direct, 2).unwrap(), Some(2)); // 2-(16,6,2)
        let zero = VectorialFunc::from_truth_table(4, 1, vec![0; 16]).unwrap();
        assert!(matches!(addition_design_via_dual(&zero), Err(Error::NotBent)));
    }

    #[test]
    fn translation_design_iff_bent() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        for _ in 0..100 {
            let table: Vec<u32> = (0..16).map(|_| rng.gen_range(0..2)).collect();
            let f = match VectorialFunc::from_truth_table(4, 1, table) {
                Ok(f) if f.weight() > 0 => f,
                _ => continue,
            };
            let bent = crate::spectra::SpectrumReport::analyze(&f).is_bent;
            let s = translation_design(&f).unwrap();
            assert_eq!(is_t_design(&s, 2).unwrap().is_some(), bent);
        }
    }

    #[test]
    fn rds_verdicts() {
        let r = rds_check(&fixtures::f4());
        assert!(r.is_rds && r.forbidden_ok);
        assert_eq!(r.lambda, 8);
        let r = rds_check(&fixtures::bent42());
        assert!(r.is_rds);
        assert_eq!(r.lambda, 4);
        // APN but not bent: forbidden subgroup fine, counts vary
        let r = rds_check(&fixtures::gold6());
        assert!(!r.is_rds && r.forbidden_ok);
    }

    #[test]
    fn rds_iff_bent_random() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..60 {
            let table: Vec<u32> = (0..16).map(|_| rng.gen_range(0..4)).collect();
            let f = VectorialFunc::from_truth_table(4, 2, table).unwrap();
            let bent = crate::spectra::SpectrumReport::analyze(&f).is_bent;
            assert_eq!(rds_check(&f).is_rds, bent);
        }
    }

    #[test]
    fn fingerprint_separates_and_iso_relabels() {
        let f = fano();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let mut perm: Vec<usize> = (0..7).collect();
        perm.shuffle(&mut rng);
        let relabeled = IncidenceStructure::new(
            7,
            3,
            f.blocks()
                .iter()
                .map(|b| b.iter().map(|&p| perm[p]).collect())
                .collect(),
        )
        .unwrap();
        assert_eq!(fingerprint(&f), fingerprint(&relabeled));
        assert_eq!(isomorphic(&f, &relabeled, 1_000_000).unwrap(), Iso::Yes);
        // budget semantics
        assert_eq!(isomorphic(&f, &relabeled, 0).unwrap(), Iso::Unknown);
        // different block count: No by fingerprint
        let partial = IncidenceStructure::new(7, 3, f.blocks()[..5].to_vec()).unwrap();
        assert_eq!(isomorphic(&f, &partial, 100).unwrap(), Iso::No);
        // different shape: error
        assert!(matches!(
            isomorphic(&f, &IncidenceStructure::empty(7, 4), 100),
            Err(Error::ShapeMismatch)
        ));
    }

    #[test]
    fn iso_detects_non_isomorphic_same_parameters() {
        // two 1-regular graphs on 6 points vs a path-union with equal
        // degrees cannot exist; instead compare two 2-regular structures:
        // one 6-cycle vs two 3-cycles, as 2-subsets
        let cycle6 = IncidenceStructure::new(
            6,
            2,
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 5], vec![0, 5]],
        )
        .unwrap();
        let two_triangles = IncidenceStructure::new(
            6,
            2,
            vec![vec![0, 1], vec![1, 2], vec![0, 2], vec![3, 4], vec![4, 5], vec![3, 5]],
        )
        .unwrap();
        // degrees and block counts agree, so this exercises the search
        assert_eq!(isomorphic(&cycle6, &two_triangles, 1_000_000).unwrap(), Iso::No);
    }

    #[test]
    fn file_roundtrip() {
        let f = fano();
        let text = f.to_file_string();
        assert!(text.starts_with("v=7 k=3 b=7\n"));
        assert_eq!(IncidenceStructure::from_file_string(&text).unwrap(), f);
        assert!(IncidenceStructure::from_file_string("v=7 k=3 b=2\n0 1 2\n").is_err());
        assert!(IncidenceStructure::from_file_string("").is_err());
        assert!(IncidenceStructure::from_file_string("v=7 k=3\n").is_err());
    }
}
