//! Walsh and differential analysis, classification predicates, second-order
//! derivative counts and the group-ring cube of a function graph.
//!
//! Everything here is exact integer arithmetic.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::func::{dot, VectorialFunc};

/// In-place fast Walsh-Hadamard butterfly.
pub fn fwht(data: &mut [i64]) {
    let mut h = 1;
    while h < data.len() {
        for r in (0..data.len()).step_by(h * 2) {
            for i in r..r + h {
                let (a, b) = (data[i], data[i + h]);
                data[i] = a + b;
                data[i + h] = a - b;
            }
        }
        h *= 2;
    }
}

/// Walsh transform of a Boolean function: a -> sum_x (-1)^(f(x) + <a,x>).
pub fn walsh_of_boolean(f: &VectorialFunc) -> Vec<i64> {
    debug_assert_eq!(f.m(), 1);
    let mut data: Vec<i64> = f.table().iter().map(|&v| 1 - 2 * v as i64).collect();
    fwht(&mut data);
    data
}

/// Full spectral report of an (n,m)-function.
#[derive(Debug, Clone)]
pub struct SpectrumReport {
    n: usize,
    m: usize,
    /// walsh[b-1][a] for b in 1..2^m.
    walsh: Vec<Vec<i64>>,
    pub walsh_multiset: BTreeMap<i64, u64>,
    pub diff_multiset: BTreeMap<u64, u64>,
    pub nonlinearity: u64,
    pub diff_uniformity: u64,
    /// Per component b (index b-1): Some(s_b) when the component is
    /// s_b-plateaued, None otherwise.
    pub plateau_profile: Vec<Option<u32>>,
    pub is_bent: bool,
    pub is_plateaued: bool,
    pub is_apn: bool,
    /// Set when all components share one plateau amplitude.
    pub single_amplitude: Option<u32>,
}

fn plateau_exponent(n: usize, values: &[i64]) -> Option<u32> {
    let amp = values.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0);
    if amp == 0 || !amp.is_power_of_two() {
        return None;
    }
    if values.iter().any(|&v| v != 0 && v.unsigned_abs() != amp) {
        return None;
    }
    let log = amp.trailing_zeros() as usize;
    // amplitude 2^((n+s)/2) with s >= 0
    if 2 * log < n {
        return None;
    }
    Some((2 * log - n) as u32)
}

impl SpectrumReport {
    /// Computes Walsh and differential spectra and all classification flags.
    pub fn analyze(f: &VectorialFunc) -> Self {
        let (n, m) = (f.n(), f.m());
        let size = 1usize << n;
        let mut walsh = Vec::with_capacity((1 << m) - 1);
        let mut walsh_multiset = BTreeMap::new();
        for b in 1..1u32 << m {
            let mut data: Vec<i64> = f
                .table()
                .iter()
                .map(|&y| 1 - 2 * dot(b, y) as i64)
                .collect();
            fwht(&mut data);
            for &v in &data {
                *walsh_multiset.entry(v).or_insert(0) += 1;
            }
            walsh.push(data);
        }
        let max_abs = walsh
            .iter()
            .flatten()
            .map(|v| v.unsigned_abs())
            .max()
            .unwrap_or(0);
        let nonlinearity = (1u64 << (n - 1)) - max_abs / 2;

        let mut diff_multiset = BTreeMap::new();
        let mut diff_uniformity = 0u64;
        let mut counts = vec![0u64; 1 << m];
        for a in 1..size {
            counts.fill(0);
            for x in 0..size {
                counts[(f.value(x) ^ f.value(x ^ a)) as usize] += 1;
            }
            for &c in &counts {
                *diff_multiset.entry(c).or_insert(0) += 1;
                diff_uniformity = diff_uniformity.max(c);
            }
        }

        let plateau_profile: Vec<Option<u32>> =
            walsh.iter().map(|w| plateau_exponent(n, w)).collect();
        let is_plateaued = plateau_profile.iter().all(|p| p.is_some());
        let is_bent = is_plateaued && plateau_profile.iter().all(|p| *p == Some(0));
        let single_amplitude = match plateau_profile.first() {
            Some(&first) if is_plateaued && plateau_profile.iter().all(|&p| p == first) => first,
            _ => None,
        };
        let is_apn = n == m && diff_uniformity <= 2;
        SpectrumReport {
            n,
            m,
            walsh,
            walsh_multiset,
            diff_multiset,
            nonlinearity,
            diff_uniformity,
            plateau_profile,
            is_bent,
            is_plateaued,
            is_apn,
            single_amplitude,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// chi_F(a, b); the b = 0 row follows the convention 2^n * [a = 0].
    pub fn walsh(&self, a: usize, b: u32) -> i64 {
        if b == 0 {
            if a == 0 {
                1i64 << self.n
            } else {
                0
            }
        } else {
            self.walsh[b as usize - 1][a]
        }
    }

    /// Walsh values of the component F_b, b nonzero.
    pub fn component_walsh(&self, b: u32) -> &[i64] {
        &self.walsh[b as usize - 1]
    }

    pub fn is_s_plateaued(&self, s: u32) -> bool {
        self.single_amplitude == Some(s)
    }

    /// Report as deterministic JSON.
    pub fn to_json(&self) -> serde_json::Value {
        let pairs = |it: Box<dyn Iterator<Item = (i64, u64)> + '_>| -> Vec<serde_json::Value> {
            it.map(|(v, c)| serde_json::json!([v, c])).collect()
        };
        serde_json::json!({
            "walsh_multiset": pairs(Box::new(self.walsh_multiset.iter().map(|(&v, &c)| (v, c)))),
            "diff_multiset": pairs(Box::new(self.diff_multiset.iter().map(|(&v, &c)| (v as i64, c)))),
            "nonlinearity": self.nonlinearity,
            "delta": self.diff_uniformity,
            "plateau_profile": self.plateau_profile.iter().enumerate()
                .map(|(i, p)| serde_json::json!([i + 1, p]))
                .collect::<Vec<_>>(),
            "flags": {
                "is_bent": self.is_bent,
                "is_plateaued": self.is_plateaued,
                "is_apn": self.is_apn,
                "single_amplitude": self.single_amplitude,
            },
        })
    }
}

/// Parseval check for every component; used as a structural self-test.
pub fn parseval_holds(report: &SpectrumReport) -> bool {
    let target = 1i128 << (2 * report.n);
    report
        .walsh
        .iter()
        .all(|w| w.iter().map(|&v| (v as i128) * (v as i128)).sum::<i128>() == target)
}

/// Whether an APN function has the classical (AB / Gold) Walsh spectrum.
///
/// The input is normalized to F(0) = 0 by output translation; the template
/// multisets include the b = 0 row.
pub fn has_classical_walsh_spectrum(f: &VectorialFunc) -> Result<bool> {
    let report = SpectrumReport::analyze(f);
    if !report.is_apn {
        return Err(Error::NotApn);
    }
    let n = f.n();
    let normalized;
    let report = if f.value(0) != 0 {
        let c = f.value(0);
        let table: Vec<u32> = f.table().iter().map(|&y| y ^ c).collect();
        normalized = VectorialFunc::from_truth_table(n, n, table).unwrap();
        SpectrumReport::analyze(&normalized)
    } else {
        report
    };
    let mut observed = report.walsh_multiset.clone();
    // b = 0 row
    *observed.entry(1i64 << n).or_insert(0) += 1;
    *observed.entry(0).or_insert(0) += (1u64 << n) - 1;

    let mut template: BTreeMap<i64, u64> = BTreeMap::new();
    let mut add = |v: i64, c: u64| {
        if c > 0 {
            *template.entry(v).or_insert(0) += c;
        }
    };
    let pn = 1u64 << n;
    if n % 2 == 1 {
        add(1i64 << n, 1);
        add(0, ((pn / 2) + 1) * (pn - 1));
        let amp = 1i64 << ((n + 1) / 2);
        add(amp, (pn - 1) * ((1u64 << (n - 2)) + (1u64 << ((n - 3) / 2))));
        add(-amp, (pn - 1) * ((1u64 << (n - 2)) - (1u64 << ((n - 3) / 2))));
    } else {
        add(1i64 << n, 1);
        add(0, (pn - 1) * ((1u64 << (n - 2)) + 1));
        let big = 1i64 << ((n + 2) / 2);
        add(big, (pn - 1) * ((1u64 << (n - 3)) + (1u64 << ((n - 4) / 2))) / 3);
        add(-big, (pn - 1) * ((1u64 << (n - 3)) - (1u64 << ((n - 4) / 2))) / 3);
        let small = 1i64 << (n / 2);
        add(small, 2 * (pn - 1) * ((1u64 << (n - 1)) + (1u64 << ((n - 2) / 2))) / 3);
        add(-small, 2 * (pn - 1) * ((1u64 << (n - 1)) - (1u64 << ((n - 2) / 2))) / 3);
    }
    Ok(observed == template)
}

/// N_F(v; x) for every x: the number of pairs (a, b) whose second-order
/// derivative at x equals v. Direct counting.
pub fn second_order_counts(f: &VectorialFunc, v: u32) -> Result<Vec<u64>> {
    if v >= 1u32 << f.m() {
        return Err(Error::BadParameters);
    }
    let size = 1usize << f.n();
    let t = f.table();
    let mut out = Vec::with_capacity(size);
    for x in 0..size {
        let fx = t[x];
        let mut count = 0u64;
        for a in 0..size {
            let fxa = t[x ^ a];
            for b in 0..size {
                if fx ^ fxa ^ t[x ^ b] ^ t[x ^ a ^ b] == v {
                    count += 1;
                }
            }
        }
        out.push(count);
    }
    Ok(out)
}

/// Number of weight-4 codewords of the dual code of C_F, from the fourth
/// power moment of the Walsh transform (b = 0 included).
pub fn a4_from_moments(f: &VectorialFunc) -> Result<u64> {
    let report = SpectrumReport::analyze(f);
    let (n, m) = (f.n(), f.m());
    let mut sum: i128 = 0;
    for b in 0..1u32 << m {
        for a in 0..1usize << n {
            let w = report.walsh(a, b) as i128;
            sum += w * w * w * w;
        }
    }
    let denom = 1i128 << (n + m);
    if sum % denom != 0 {
        return Err(Error::NonIntegerResult);
    }
    let inner = sum / denom - 3 * (1i128 << (2 * n)) + (1i128 << (n + 1));
    if inner % 24 != 0 || inner < 0 {
        return Err(Error::NonIntegerResult);
    }
    Ok((inner / 24) as u64)
}

/// Coefficients of the cube of the graph of F in the group algebra of
/// F_2^n x F_2^m, with the plateaued-equation verdicts.
#[derive(Debug, Clone)]
pub struct GroupRingCube {
    n: usize,
    m: usize,
    /// coeff[(x << m) | y].
    pub coeff: Vec<u64>,
    /// Gamma^3 = sum_v N_F(v; .) [Gamma + (0, v)], i.e. the coefficient at
    /// (x, F(x) + v) does not depend on x for any v.
    pub plateaued_equation_holds: bool,
    /// Some(s) when Gamma^3 = 2^(n+s) Gamma + (2^(2n-m) - 2^(n+s-m)) G.
    pub s_plateaued_form: Option<u32>,
}

impl GroupRingCube {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn coefficient(&self, x: usize, y: u32) -> u64 {
        self.coeff[(x << self.m) | y as usize]
    }
}

pub fn group_ring_cube(f: &VectorialFunc) -> Result<GroupRingCube> {
    let (n, m) = (f.n(), f.m());
    if n > 8 {
        return Err(Error::DimensionTooLarge);
    }
    let size = 1usize << n;
    let t = f.table();
    let mut coeff = vec![0u64; 1 << (n + m)];
    for x1 in 0..size {
        for x2 in 0..size {
            let px = x1 ^ x2;
            let py = t[x1] ^ t[x2];
            for x3 in 0..size {
                coeff[((px ^ x3) << m) | (py ^ t[x3]) as usize] += 1;
            }
        }
    }
    // plateaued equation: coefficient at (x, F(x) + v) is independent of x
    let mut plateaued_equation_holds = true;
    'outer: for v in 0..1u32 << m {
        let c0 = coeff[(v ^ t[0]) as usize];
        for x in 1..size {
            if coeff[(x << m) | (t[x] ^ v) as usize] != c0 {
                plateaued_equation_holds = false;
                break 'outer;
            }
        }
    }
    // s-plateaued closed form
    let mut s_plateaued_form = None;
    let diag = coeff[t[0] as usize];
    let off = (0..size)
        .flat_map(|x| (0..1u32 << m).map(move |y| (x, y)))
        .find(|&(x, y)| y != t[x])
        .map(|(x, y)| coeff[(x << m) | y as usize]);
    if let Some(off) = off {
        let uniform = (0..size).all(|x| {
            (0..1u32 << m).all(|y| {
                let c = coeff[(x << m) | y as usize];
                if y == t[x] {
                    c == diag
                } else {
                    c == off
                }
            })
        });
        if uniform && diag > off {
            let gamma_coeff = diag - off;
            if gamma_coeff.is_power_of_two() {
                // 2^(n+s) with s = log - n; off must equal 2^(2n-m) - 2^(n+s-m)
                let log = gamma_coeff.trailing_zeros() as usize;
                if log >= n && log >= m && off == (1u64 << (2 * n - m)) - (1u64 << (log - m)) {
                    s_plateaued_form = Some((log - n) as u32);
                }
            }
        }
    }
    Ok(GroupRingCube {
        n,
        m,
        coeff,
        plateaued_equation_holds,
        s_plateaued_form,
    })
}

/// Dual of a Boolean bent function: f~(a) = 0 iff chi_f(a) = +2^(n/2).
pub fn dual_bent(f: &VectorialFunc) -> Result<VectorialFunc> {
    if f.m() != 1 {
        return Err(Error::BadParameters);
    }
    let n = f.n();
    let report = SpectrumReport::analyze(f);
    if !report.is_bent {
        return Err(Error::NotBent);
    }
    let amp = 1i64 << (n / 2);
    let table = report
        .component_walsh(1)
        .iter()
        .map(|&w| if w == amp { 0 } else { 1 })
        .collect();
    VectorialFunc::from_truth_table(n, 1, table)
}
