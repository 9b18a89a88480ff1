//! The linear code C_F spanned by the all-ones row, the coordinate
//! projections and the coordinate functions of F, together with its dual:
//! weight enumerators, minimum distances, support designs and
//! Assmus-Mattson hypothesis checks.

use std::collections::BTreeMap;

use crate::designs::{is_t_design, IncidenceStructure};
use crate::error::{Error, Result};
use crate::flats::enumerate_flats;
use crate::func::{dot, VectorialFunc};
use crate::spectra::SpectrumReport;

/// C_F viewed through the Walsh table of F: codewords are indexed by
/// (c0, u, v) as x -> c0 + <u,x> + <v,F(x)>, and their weights come from
/// the transform in O(1) each.
#[derive(Debug, Clone)]
pub struct CodeView {
    f: VectorialFunc,
    report: SpectrumReport,
    rank: usize,
}

/// Rank over GF(2) of rows packed into 64-bit words.
fn rank_packed(mut rows: Vec<Vec<u64>>, bits: usize) -> usize {
    let mut rank = 0;
    for bit in 0..bits {
        let (w, b) = (bit / 64, bit % 64);
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][w] >> b & 1 == 1) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[w] >> b & 1 == 1 {
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x ^= p;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

impl CodeView {
    pub fn new(f: &VectorialFunc) -> Result<Self> {
        let (n, m) = (f.n(), f.m());
        if n + m + 1 > 24 {
            return Err(Error::TooLarge);
        }
        let size = 1usize << n;
        let words = size.div_ceil(64);
        let mut rows = Vec::with_capacity(n + m + 1);
        let pack = |bit_of: &dyn Fn(usize) -> u32| -> Vec<u64> {
            let mut row = vec![0u64; words];
            for x in 0..size {
                row[x / 64] |= (bit_of(x) as u64 & 1) << (x % 64);
            }
            row
        };
        rows.push(pack(&|_| 1));
        for i in 0..n {
            rows.push(pack(&|x| (x >> i) as u32));
        }
        for j in 0..m {
            rows.push(pack(&|x| f.value(x) >> j));
        }
        let rank = rank_packed(rows, size);
        Ok(CodeView {
            f: f.clone(),
            report: SpectrumReport::analyze(f),
            rank,
        })
    }

    pub fn function(&self) -> &VectorialFunc {
        &self.f
    }

    pub fn length(&self) -> usize {
        1 << self.f.n()
    }

    pub fn dimension(&self) -> usize {
        self.rank
    }

    /// Weight of the codeword (c0, u, v): 2^(n-1) - (-1)^c0 chi(u,v) / 2.
    pub fn codeword_weight(&self, c0: u32, u: u32, v: u32) -> u64 {
        let chi = self.report.walsh(u as usize, v);
        let signed = if c0 & 1 == 1 { -chi } else { chi };
        ((1i64 << (self.f.n() - 1)) - signed / 2) as u64
    }

    pub fn codeword_support(&self, c0: u32, u: u32, v: u32) -> Vec<usize> {
        (0..self.length())
            .filter(|&x| (c0 ^ dot(u, x as u32) ^ dot(v, self.f.value(x))) & 1 == 1)
            .collect()
    }

    /// Exact A_w table; duplicate (c0,u,v) tuples of a rank-deficient code
    /// collapse onto the same codeword.
    pub fn weight_enumerator(&self) -> BTreeMap<u64, u64> {
        let (n, m) = (self.f.n(), self.f.m());
        let mut counts = BTreeMap::new();
        for c0 in 0..2u32 {
            for v in 0..1u32 << m {
                for u in 0..1u32 << n {
                    *counts.entry(self.codeword_weight(c0, u, v)).or_insert(0u64) += 1;
                }
            }
        }
        let kernel = 1u64 << (n + m + 1 - self.rank);
        for c in counts.values_mut() {
            debug_assert_eq!(*c % kernel, 0);
            *c /= kernel;
        }
        counts
    }

    /// Minimum weight of a nonzero codeword.
    pub fn min_distance(&self) -> u64 {
        *self
            .weight_enumerator()
            .keys()
            .find(|&&w| w > 0)
            .expect("code has a nonzero codeword")
    }
}

/// Minimum distance of the dual code, exactly when reachable by the
/// weight-4/6 enumeration, otherwise as a lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualDistance {
    Exact(u64),
    LowerBound(u64),
}

/// Supports of weight-6 dual codewords: 6-subsets with zero point XOR and
/// zero F-XOR, found by iterating 5-subsets and forcing the sixth point.
fn dual_weight6_blocks(f: &VectorialFunc) -> Result<Vec<Vec<usize>>> {
    if f.n() > 7 {
        return Err(Error::TooLarge);
    }
    let size = 1usize << f.n();
    let t = f.table();
    let mut blocks = Vec::new();
    for a in 0..size {
        for b in a + 1..size {
            let xab = a ^ b;
            let yab = t[a] ^ t[b];
            for c in b + 1..size {
                let xc = xab ^ c;
                let yc = yab ^ t[c];
                for d in c + 1..size {
                    let xd = xc ^ d;
                    let yd = yc ^ t[d];
                    for e in d + 1..size {
                        let x6 = xd ^ e;
                        if x6 > e && yd ^ t[e] ^ t[x6] == 0 {
                            blocks.push(vec![a, b, c, d, e, x6]);
                        }
                    }
                }
            }
        }
    }
    Ok(blocks)
}

/// Dual minimum distance: 4 when vanishing flats exist, else 6 when a
/// weight-6 support exists, else a lower bound of 8. Dual weights are even
/// and weight 2 is impossible (two distinct points cannot XOR to zero).
pub fn dual_min_distance(f: &VectorialFunc) -> Result<DualDistance> {
    if enumerate_flats(f)?.vf.block_count() > 0 {
        return Ok(DualDistance::Exact(4));
    }
    if dual_weight6_blocks(f)?.is_empty() {
        Ok(DualDistance::LowerBound(8))
    } else {
        Ok(DualDistance::Exact(6))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Primal,
    Dual,
}

/// Deduplicated codeword supports of one weight as an incidence structure.
pub fn support_design(f: &VectorialFunc, w: usize, side: Side) -> Result<IncidenceStructure> {
    match side {
        Side::Primal => {
            let code = CodeView::new(f)?;
            let (n, m) = (f.n(), f.m());
            let mut blocks = Vec::new();
            for c0 in 0..2u32 {
                for v in 0..1u32 << m {
                    for u in 0..1u32 << n {
                        if code.codeword_weight(c0, u, v) == w as u64 {
                            blocks.push(code.codeword_support(c0, u, v));
                        }
                    }
                }
            }
            IncidenceStructure::new(code.length(), w, blocks)
        }
        Side::Dual => match w {
            4 => Ok(enumerate_flats(f)?.vf),
            6 => IncidenceStructure::new(1 << f.n(), 6, dual_weight6_blocks(f)?),
            _ => Err(Error::UnsupportedDualWeight),
        },
    }
}

/// Verdict of the original Assmus-Mattson premise check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmOriginalVerdict {
    pub pass: bool,
    pub t: usize,
    pub d: u64,
    /// Exact dual distance, or its verified lower bound.
    pub d_dual: u64,
    /// Nonzero weights of C in {1..v-t}.
    pub weights_in_range: Vec<u64>,
    pub allowed: u64,
}

/// Original Assmus-Mattson hypothesis: t < min(d, d_dual) and at most
/// d_dual - t nonzero weights of C in {1..v-t}.
pub fn am_original_check(f: &VectorialFunc, t: usize) -> Result<AmOriginalVerdict> {
    let code = CodeView::new(f)?;
    let d = code.min_distance();
    let d_dual = match dual_min_distance(f)? {
        DualDistance::Exact(x) | DualDistance::LowerBound(x) => x,
    };
    let v = code.length() as u64;
    let weights_in_range: Vec<u64> = code
        .weight_enumerator()
        .keys()
        .copied()
        .filter(|&w| w >= 1 && w <= v - t as u64)
        .collect();
    let allowed = d_dual.saturating_sub(t as u64);
    let pass = (t as u64) < d.min(d_dual) && weights_in_range.len() as u64 <= allowed;
    Ok(AmOriginalVerdict {
        pass,
        t,
        d,
        d_dual,
        weights_in_range,
        allowed,
    })
}

/// Verdict of the extended Assmus-Mattson premise check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmExtendedVerdict {
    pub pass: bool,
    pub t: usize,
    /// (weight, is a t-design) for each checked primal weight class.
    pub checked_primal: Vec<(u64, bool)>,
    /// (weight, is a t-design) for each checked dual weight class.
    pub checked_dual: Vec<(u64, bool)>,
}

/// Extended Assmus-Mattson premises for exceptional weight set S:
/// the primal weight classes in {d..v-t} outside S must be t-designs, and
/// the dual classes at weights up to |S|+t-1 must be t-designs. Dual
/// weights 1-3, 5 and 7 cannot occur; weights beyond the enumeration cap
/// are unverifiable.
pub fn am_extended_check(f: &VectorialFunc, t: usize, s: &[u64]) -> Result<AmExtendedVerdict> {
    let code = CodeView::new(f)?;
    let d = code.min_distance();
    let d_dual = match dual_min_distance(f)? {
        DualDistance::Exact(x) | DualDistance::LowerBound(x) => x,
    };
    let v = code.length() as u64;
    if (t as u64) >= d.min(d_dual) {
        return Err(Error::BadParameters);
    }
    if s.iter().any(|&w| w < d || w > v - t as u64) {
        return Err(Error::BadParameters);
    }
    let mut pass = true;
    let mut checked_primal = Vec::new();
    for &w in code.weight_enumerator().keys() {
        if w < d || w > v - t as u64 || s.contains(&w) {
            continue;
        }
        let design = support_design(f, w as usize, Side::Primal)?;
        let ok = is_t_design(&design, t)?.is_some();
        pass &= ok;
        checked_primal.push((w, ok));
    }
    let mut checked_dual = Vec::new();
    let cap = s.len() + t - 1;
    for w in 1..=cap as u64 {
        if w % 2 == 1 || w == 2 {
            continue; // no dual codewords of these weights
        }
        if w > 6 {
            return Err(Error::DualWeightUnverifiable(w as usize));
        }
        let design = support_design(f, w as usize, Side::Dual)?;
        let ok = is_t_design(&design, t)?.is_some();
        pass &= ok;
        checked_dual.push((w, ok));
    }
    Ok(AmExtendedVerdict {
        pass,
        t,
        checked_primal,
        checked_dual,
    })
}
