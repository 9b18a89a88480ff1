//! Vanishing and nonvanishing flats of an (n,m)-function: enumeration,
//! closed-form block counts, derived flats of projections and the
//! EA-invariant fingerprint.

use std::collections::BTreeMap;

use crate::designs::IncidenceStructure;
use crate::error::{Error, Result};
use crate::func::VectorialFunc;

/// The partition of the affine Steiner quadruple system SQS(2^n) induced by
/// F: blocks {x1,x2,x3,x4} with pairwise-distinct points and zero XOR,
/// grouped by the XOR v of their four F-values.
#[derive(Debug, Clone)]
pub struct FlatFamily {
    pub n: usize,
    pub m: usize,
    /// Blocks with v = 0 (the vanishing flats).
    pub vf: IncidenceStructure,
    /// Nonvanishing flats per nonzero v; only nonempty entries are stored.
    pub nf: BTreeMap<u32, IncidenceStructure>,
}

impl FlatFamily {
    pub fn nf_or_empty(&self, v: u32) -> IncidenceStructure {
        self.nf
            .get(&v)
            .cloned()
            .unwrap_or_else(|| IncidenceStructure::empty(1 << self.n, 4))
    }

    /// Total block count over vf and every nf class.
    pub fn total_blocks(&self) -> usize {
        self.vf.block_count() + self.nf.values().map(|s| s.block_count()).sum::<usize>()
    }
}

/// Enumerates all flats by pair bucketing: unordered point pairs are grouped
/// by their XOR d; two pairs {x1,x2}, {x3,x4} in the same group form a block,
/// and requiring max(x1,x2) < min(x3,x4) emits each block exactly once.
pub fn enumerate_flats(f: &VectorialFunc) -> Result<FlatFamily> {
    let (n, m) = (f.n(), f.m());
    if n > 14 {
        return Err(Error::DimensionTooLarge);
    }
    let size = 1usize << n;
    let t = f.table();
    // bucket[d] lists (x1, ykey) for pairs {x1, x1^d} with x1 < x1^d,
    // already in increasing x1 order
    let mut vf_blocks = Vec::new();
    let mut nf_blocks: BTreeMap<u32, Vec<Vec<usize>>> = BTreeMap::new();
    let mut bucket: Vec<(usize, u32)> = Vec::with_capacity(size / 2);
    for d in 1..size {
        bucket.clear();
        for x1 in 0..size {
            let x2 = x1 ^ d;
            if x1 < x2 {
                bucket.push((x1, t[x1] ^ t[x2]));
            }
        }
        for (i, &(a, ya)) in bucket.iter().enumerate() {
            let b = a ^ d;
            for &(c, yc) in &bucket[i + 1..] {
                if c <= b {
                    continue;
                }
                let e = c ^ d;
                let block = vec![a, b, c.min(e), c.max(e)];
                let v = ya ^ yc;
                if v == 0 {
                    vf_blocks.push(block);
                } else {
                    nf_blocks.entry(v).or_default().push(block);
                }
            }
        }
    }
    let vf = IncidenceStructure::new(size, 4, vf_blocks)?;
    let mut nf = BTreeMap::new();
    for (v, blocks) in nf_blocks {
        nf.insert(v, IncidenceStructure::new(size, 4, blocks)?);
    }
    Ok(FlatFamily { n, m, vf, nf })
}

/// Block count of the vanishing flats of an (n,m)-bent function:
/// (2^(n+m) - 2^m) 2^(n-m) (2^(n-m) - 2) / 24.
pub fn vf_count_bent(n: usize, m: usize) -> Result<u64> {
    if n % 2 != 0 || m == 0 || 2 * m > n {
        return Err(Error::BadParameters);
    }
    let prod = ((1u128 << (n + m)) - (1 << m)) * (1 << (n - m)) * ((1 << (n - m)) - 2);
    debug_assert_eq!(prod % 24, 0);
    Ok((prod / 24) as u64)
}

/// Block count of each nonvanishing-flats class of an (n,m)-bent function:
/// (2^(n+m) - 2^m) 2^(2(n-m)) / 24.
pub fn nf_count_bent(n: usize, m: usize) -> Result<u64> {
    if n % 2 != 0 || m == 0 || 2 * m > n {
        return Err(Error::BadParameters);
    }
    let prod = ((1u128 << (n + m)) - (1 << m)) * (1 << (2 * (n - m)));
    debug_assert_eq!(prod % 24, 0);
    Ok((prod / 24) as u64)
}

/// Vanishing-flats block count of a plateaued function from its component
/// plateau profile (s_b for b = 1..2^m-1):
/// (2^(3n-m-3) + 2^(2n-m-3) sum_b 2^(s_b) - 3 2^(2n-3) + 2^(n-2)) / 3.
pub fn vf_count_plateaued(n: usize, m: usize, profile: &[u32]) -> Result<u64> {
    if n < 3 || m == 0 || profile.len() != (1 << m) - 1 {
        return Err(Error::BadParameters);
    }
    let pow_sum: i128 = profile.iter().map(|&s| 1i128 << s).sum();
    let total = (1i128 << (3 * n - m - 3)) + (1i128 << (2 * n - m - 3)) * pow_sum
        - 3 * (1i128 << (2 * n - 3))
        + (1i128 << (n - 2));
    if total < 0 || total % 3 != 0 {
        return Err(Error::NonIntegerResult);
    }
    Ok((total / 3) as u64)
}

/// Derived flats DF: blocks vanishing for the projection to the low `s`
/// output coordinates but not for F itself — the union of nf[v] over
/// nonzero v whose low s bits vanish.
pub fn derived_flats(f: &VectorialFunc, s: usize) -> Result<IncidenceStructure> {
    if s < 1 || s >= f.m() {
        return Err(Error::BadSplit);
    }
    let family = enumerate_flats(f)?;
    let mask = (1u32 << s) - 1;
    let mut blocks = Vec::new();
    for (&v, structure) in &family.nf {
        if v & mask == 0 {
            blocks.extend_from_slice(structure.blocks());
        }
    }
    IncidenceStructure::new(1 << f.n(), 4, blocks)
}

/// EA-invariant of the flat family: the vf summary plus the multiset over
/// nonzero v of (block count, sorted point-degree multiset).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EaFingerprint {
    pub vf: (usize, Vec<u64>),
    /// One entry per nonzero v, as a sorted multiset.
    pub nf: Vec<(usize, Vec<u64>)>,
}

pub fn ea_fingerprint(f: &VectorialFunc) -> Result<EaFingerprint> {
    let family = enumerate_flats(f)?;
    let summary = |s: &IncidenceStructure| {
        let mut deg = s.degrees();
        deg.sort_unstable();
        (s.block_count(), deg)
    };
    let mut nf: Vec<(usize, Vec<u64>)> = (1..1u32 << f.m())
        .map(|v| summary(&family.nf_or_empty(v)))
        .collect();
    nf.sort();
    Ok(EaFingerprint {
        vf: summary(&family.vf),
        nf,
    })
}
