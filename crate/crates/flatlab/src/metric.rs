//! Hamming-metric machinery over length-2^n words: distances to sets,
//! covering radii, metric complements and regularity, extendability of bent
//! functions, the n=4 bent catalog and Tokareva's bent-sum decomposition
//! check.

use crate::codes::CodeView;
use crate::error::{Error, Result};
use crate::func::{dot, VectorialFunc};
use crate::spectra::{fwht, SpectrumReport};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

/// Hard cap on exhaustive 2^length sweeps; lengths above 16 additionally
/// require an explicit override.
const SWEEP_CAP: usize = 24;

/// A finite set of binary words of one fixed length (at most 24 bits),
/// packed into u32 values and kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordSet {
    length: usize,
    members: Vec<u32>,
}

impl WordSet {
    pub fn explicit(length: usize, mut members: Vec<u32>) -> Result<Self> {
        if length == 0 || length > SWEEP_CAP {
            return Err(Error::LengthOverCap);
        }
        if members.iter().any(|&w| w >> length != 0) {
            return Err(Error::LengthMismatch);
        }
        members.sort_unstable();
        members.dedup();
        Ok(WordSet { length, members })
    }

    /// Materializes the codewords of C_F as packed words.
    pub fn from_code(f: &VectorialFunc) -> Result<Self> {
        let (n, m) = (f.n(), f.m());
        if 1usize << n > SWEEP_CAP {
            return Err(Error::LengthOverCap);
        }
        let code = CodeView::new(f)?;
        let mut members = Vec::with_capacity(1 << (n + m + 1));
        for c0 in 0..2u32 {
            for v in 0..1u32 << m {
                for u in 0..1u32 << n {
                    let mut w = 0u32;
                    for x in code.codeword_support(c0, u, v) {
                        w |= 1 << x;
                    }
                    members.push(w);
                }
            }
        }
        WordSet::explicit(1 << n, members)
    }

    /// The first-order Reed-Muller code RM(n,1) as words of length 2^n.
    pub fn rm1(n: usize) -> Result<Self> {
        if 1usize << n > SWEEP_CAP {
            return Err(Error::LengthOverCap);
        }
        let mut members = Vec::with_capacity(1 << (n + 1));
        for c0 in 0..2u32 {
            for a in 0..1u32 << n {
                let mut w = 0u32;
                for x in 0..1u32 << n {
                    w |= (dot(a, x) ^ c0) << x;
                }
                members.push(w);
            }
        }
        WordSet::explicit(1 << n, members)
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, w: u32) -> bool {
        self.members.binary_search(&w).is_ok()
    }
}

/// Packs a Boolean function into a word.
pub fn boolean_word(f: &VectorialFunc) -> Result<u32> {
    if f.m() != 1 || 1usize << f.n() > SWEEP_CAP {
        return Err(Error::BadParameters);
    }
    Ok(f.table()
        .iter()
        .enumerate()
        .fold(0u32, |acc, (x, &b)| acc | b << x))
}

/// Unpacks a word into the Boolean function it represents.
pub fn word_to_boolean(n: usize, word: u32) -> Result<VectorialFunc> {
    VectorialFunc::from_truth_table(n, 1, (0..1usize << n).map(|x| word >> x & 1).collect())
}

/// Minimum Hamming distance from a word to a set.
pub fn distance_to_set(word: u32, a: &WordSet) -> Result<u64> {
    if word >> a.length != 0 {
        return Err(Error::LengthMismatch);
    }
    if a.members.is_empty() {
        return Err(Error::BadParameters);
    }
    Ok(a.members
        .iter()
        .map(|&m| (word ^ m).count_ones() as u64)
        .min()
        .unwrap())
}

/// Worker count: the FLATLAB_THREADS environment variable, default 1.
pub fn worker_count() -> usize {
    std::env::var("FLATLAB_THREADS")
        .ok()
        .and_then(|s| s.parse().ok())
        .filter(|&t| t >= 1)
        .unwrap_or(1)
}

/// Distance from every word of the space to the set, as a dense table.
fn distance_table(a: &WordSet, allow_large: bool) -> Result<Vec<u8>> {
    if a.length > SWEEP_CAP || (a.length > 16 && !allow_large) {
        return Err(Error::LengthOverCap);
    }
    if a.members.is_empty() {
        return Err(Error::BadParameters);
    }
    let space = 1usize << a.length;
    let threads = worker_count().min(space);
    let mut table = vec![0u8; space];
    let fill = |offset: usize, chunk: &mut [u8]| {
        for (i, slot) in chunk.iter_mut().enumerate() {
            let w = (offset + i) as u32;
            *slot = a
                .members
                .iter()
                .map(|&m| (w ^ m).count_ones())
                .min()
                .unwrap() as u8;
        }
    };
    if threads <= 1 {
        fill(0, &mut table);
    } else {
        let chunk_len = space.div_ceil(threads);
        std::thread::scope(|scope| {
            for (idx, chunk) in table.chunks_mut(chunk_len).enumerate() {
                scope.spawn(move || fill(idx * chunk_len, chunk));
            }
        });
    }
    Ok(table)
}

pub fn covering_radius(a: &WordSet, allow_large: bool) -> Result<u64> {
    Ok(*distance_table(a, allow_large)?.iter().max().unwrap() as u64)
}

/// All words at distance exactly rho(A) from A.
pub fn metric_complement(a: &WordSet, allow_large: bool) -> Result<WordSet> {
    let table = distance_table(a, allow_large)?;
    let rho = *table.iter().max().unwrap();
    WordSet::explicit(
        a.length,
        table
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d == rho)
            .map(|(w, _)| w as u32)
            .collect(),
    )
}

pub fn is_metrically_regular(a: &WordSet, allow_large: bool) -> Result<bool> {
    let complement = metric_complement(a, allow_large)?;
    Ok(metric_complement(&complement, allow_large)? == *a)
}

/// Whether f + g is bent; the distance formulation of the sufficient-
/// condition lemma is equivalent and exercised by the tests.
pub fn bent_sum_check(f: &VectorialFunc, g: &VectorialFunc) -> Result<bool> {
    if f.n() % 2 != 0 {
        return Err(Error::OddDimension);
    }
    let h = f.xor(g)?;
    Ok(SpectrumReport::analyze(&h).is_bent)
}

/// Whether a 16-bit truth table is a bent function on F_2^4.
fn word_is_bent_n4(word: u32) -> bool {
    let mut data = [0i64; 16];
    for (x, d) in data.iter_mut().enumerate() {
        *d = 1 - 2 * (word >> x & 1) as i64;
    }
    fwht(&mut data);
    data.iter().all(|v| v.abs() == 4)
}

/// The 896 bent functions on F_2^4, as sorted truth-table words.
pub fn bent_catalog(n: usize) -> Result<Vec<u32>> {
    if n != 4 {
        return Err(Error::UnsupportedDimension);
    }
    let catalog: Vec<u32> = (0..1u32 << 16).filter(|&w| word_is_bent_n4(w)).collect();
    assert_eq!(catalog.len(), 896, "bent catalog generation is broken");
    Ok(catalog)
}

/// Serializes a catalog with a header recording n and the predicate.
pub fn catalog_to_file_string(n: usize, words: &[u32]) -> String {
    let mut out = format!("n={n} predicate=bent\n");
    for w in words {
        out.push_str(&format!("{w:04x}\n"));
    }
    out
}

pub fn catalog_from_file_string(text: &str) -> Result<(usize, Vec<u32>)> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty catalog".into()))?;
    let n = header
        .split_whitespace()
        .find_map(|f| f.strip_prefix("n="))
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| Error::Parse("catalog header must record n".into()))?;
    if !header.split_whitespace().any(|f| f == "predicate=bent") {
        return Err(Error::Parse("unknown catalog predicate".into()));
    }
    let words: std::result::Result<Vec<u32>, _> =
        lines.map(|l| u32::from_str_radix(l.trim(), 16)).collect();
    let words = words.map_err(|e| Error::Parse(format!("bad catalog word: {e}")))?;
    Ok((n, words))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtendMode {
    Exhaustive,
    CoveringRadius,
    Family,
}

/// Extendability verdict; the witness is the appended Boolean coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Extendability {
    Extendable(VectorialFunc),
    Lonely,
    Unknown,
}

fn concat_is_bent(f: &VectorialFunc, candidate: &VectorialFunc) -> bool {
    match f.concat(candidate) {
        Ok(g) => SpectrumReport::analyze(&g).is_bent,
        Err(_) => false,
    }
}

/// Whether the bent function F admits one more bent coordinate.
///
/// Exhaustive and covering-radius modes decide the n = 4 case; family mode
/// samples Maiorana-McFarland candidates at even n <= 8 and never asserts
/// loneliness except in the analytic Nyberg case m = n/2.
pub fn is_extendable(f: &VectorialFunc, mode: ExtendMode) -> Result<Extendability> {
    if !SpectrumReport::analyze(f).is_bent {
        return Err(Error::NotBent);
    }
    let (n, m) = (f.n(), f.m());
    match mode {
        ExtendMode::Exhaustive => {
            if n != 4 {
                return Err(Error::UnsupportedDimension);
            }
            for word in bent_catalog(4)? {
                let candidate = word_to_boolean(4, word)?;
                if concat_is_bent(f, &candidate) {
                    return Ok(Extendability::Extendable(candidate));
                }
            }
            Ok(Extendability::Lonely)
        }
        ExtendMode::CoveringRadius => {
            if n != 4 {
                return Err(Error::UnsupportedDimension);
            }
            let rho = covering_radius(&WordSet::from_code(f)?, false)?;
            if rho < 6 {
                return Ok(Extendability::Lonely);
            }
            // any member of the metric complement extends F
            let complement = metric_complement(&WordSet::from_code(f)?, false)?;
            let witness = word_to_boolean(4, complement.members()[0])?;
            debug_assert!(concat_is_bent(f, &witness));
            Ok(Extendability::Extendable(witness))
        }
        ExtendMode::Family => {
            if n % 2 != 0 || n > 8 {
                return Err(Error::UnsupportedDimension);
            }
            if m == n / 2 {
                return Ok(Extendability::Lonely); // Nyberg bound
            }
            let h = n / 2;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xf1a7_1ab);
            let mut perm: Vec<u32> = (0..1u32 << h).collect();
            for _ in 0..500 {
                perm.shuffle(&mut rng);
                let g_mask: u32 = rng.gen_range(0..1u32 << (1 << h));
                let table: Vec<u32> = (0..1usize << n)
                    .map(|xy| {
                        let x = (xy & ((1 << h) - 1)) as u32;
                        let y = xy >> h;
                        dot(x, perm[y]) ^ (g_mask >> y & 1)
                    })
                    .collect();
                let candidate = VectorialFunc::from_truth_table(n, 1, table)?;
                if concat_is_bent(f, &candidate) {
                    return Ok(Extendability::Extendable(candidate));
                }
            }
            Ok(Extendability::Unknown)
        }
    }
}

/// Coset decomposition of the metric complement of C_F for an extendable
/// bent F: the complement is a disjoint union of cosets of C_F itself
/// (the span of the components, the linear maps and the constant).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementStructure {
    pub complement_size: usize,
    pub coset_size: usize,
    pub coset_count: usize,
    /// Minimal word of each coset, sorted.
    pub leaders: Vec<u32>,
    /// One coset means F extends in essentially one way.
    pub uniquely_extendable: bool,
}

pub fn metric_complement_structure(f: &VectorialFunc) -> Result<ComplementStructure> {
    if f.n() != 4 {
        return Err(Error::UnsupportedDimension);
    }
    if !SpectrumReport::analyze(f).is_bent {
        return Err(Error::NotBent);
    }
    let code = WordSet::from_code(f)?;
    let rho = covering_radius(&code, false)?;
    if rho < 6 {
        return Err(Error::NotExtendable);
    }
    let complement = metric_complement(&code, false)?;
    let mut leaders = Vec::new();
    for &w in complement.members() {
        let leader = code.members().iter().map(|&c| w ^ c).min().unwrap();
        leaders.push(leader);
    }
    leaders.sort_unstable();
    leaders.dedup();
    // every coset must lie inside the complement in full
    for &leader in &leaders {
        if code.members().iter().any(|&c| !complement.contains(leader ^ c)) {
            return Err(Error::PartitionFails);
        }
    }
    let coset_size = code.len();
    if leaders.len() * coset_size != complement.len() {
        return Err(Error::PartitionFails);
    }
    Ok(ComplementStructure {
        complement_size: complement.len(),
        coset_size,
        coset_count: leaders.len(),
        uniquely_extendable: leaders.len() == 1,
        leaders,
    })
}

/// The set AU = {a + lambda u : a in A, u in U, lambda in F_2} and the
/// covering-radius statement attached to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuReport {
    pub au: WordSet,
    pub rho_a: u64,
    pub rho_au: u64,
    /// Complement of AU predicted by the theorem: words of B \ U whose
    /// U-translates stay in B.
    pub predicted_complement: WordSet,
    /// rho(AU) = rho(A) iff the predicted complement is nonempty, and the
    /// actual complement then matches it.
    pub theorem_holds: bool,
}

pub fn au_set(a: &WordSet, u: &WordSet) -> Result<AuReport> {
    if a.length() != u.length() {
        return Err(Error::LengthMismatch);
    }
    if !a.contains(0) {
        return Err(Error::ZeroNotInA);
    }
    let b = metric_complement(a, false)?;
    if u.members().iter().any(|&w| !b.contains(w)) {
        return Err(Error::UNotInComplement);
    }
    let rho_a = covering_radius(a, false)?;
    let mut au_members = a.members().to_vec();
    for &ai in a.members() {
        for &ui in u.members() {
            au_members.push(ai ^ ui);
        }
    }
    let au = WordSet::explicit(a.length(), au_members)?;
    let rho_au = covering_radius(&au, false)?;
    let predicted: Vec<u32> = b
        .members()
        .iter()
        .copied()
        .filter(|&w| !u.contains(w) && u.members().iter().all(|&ui| b.contains(w ^ ui)))
        .collect();
    let predicted_complement = WordSet::explicit(a.length(), predicted)?;
    let theorem_holds = if predicted_complement.is_empty() {
        rho_au < rho_a
    } else {
        rho_au == rho_a && metric_complement(&au, false)? == predicted_complement
    };
    Ok(AuReport {
        au,
        rho_a,
        rho_au,
        predicted_complement,
        theorem_holds,
    })
}

/// Tokareva's bent-sum decomposition check at n = 4: every function of
/// degree at most 2 must split as a sum of two bent functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokarevaReport {
    pub holds: bool,
    pub checked: usize,
    pub exceptions: Vec<u32>,
}

pub fn tokareva_check(n: usize) -> Result<TokarevaReport> {
    if n != 4 {
        return Err(Error::UnsupportedDimension);
    }
    let catalog = bent_catalog(4)?;
    let bent_set: std::collections::HashSet<u32> = catalog.iter().copied().collect();
    // monomials of degree <= 2 in 4 variables: 1 + 4 + 6 = 11 ANF bits
    let monomials: Vec<u64> = (0..16u64).filter(|i| i.count_ones() <= 2).collect();
    let mut exceptions = Vec::new();
    let mut checked = 0usize;
    for mask in 0..1u32 << monomials.len() {
        let mut anf = 0u64;
        for (bit, &mono) in monomials.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                anf |= 1 << mono;
            }
        }
        let f = VectorialFunc::boolean_from_anf_mask(4, anf)?;
        let word = boolean_word(&f)?;
        checked += 1;
        if !catalog.iter().any(|&g| bent_set.contains(&(word ^ g))) {
            exceptions.push(word);
        }
    }
    Ok(TokarevaReport {
        holds: exceptions.is_empty(),
        checked,
        exceptions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn distance_examples() {
        let rm = WordSet::rm1(4).unwrap();
        assert_eq!(rm.len(), 32);
        let f4 = boolean_word(&fixtures::f4()).unwrap();
        assert_eq!(distance_to_set(f4, &rm).unwrap(), 6);
        // member of its own set
        assert_eq!(distance_to_set(rm.members()[3], &rm).unwrap(), 0);
        // affine shift preserves distance to the affine set
        let x1: u32 = (0..16).fold(0, |acc, x| acc | ((x as u32 & 1) << x));
        assert_eq!(distance_to_set(f4 ^ x1, &rm).unwrap(), 6);
        assert!(matches!(
            distance_to_set(1 << 16, &rm),
            Err(Error::LengthMismatch)
        ));
    }

    #[test]
    fn rm1_metric_regularity() {
        let rm = WordSet::rm1(4).unwrap();
        assert_eq!(covering_radius(&rm, false).unwrap(), 6);
        let complement = metric_complement(&rm, false).unwrap();
        assert_eq!(complement.len(), 896);
        assert!(complement.members().iter().all(|&w| word_is_bent_n4(w)));
        assert_eq!(metric_complement(&complement, false).unwrap(), rm);
        assert!(is_metrically_regular(&rm, false).unwrap());
    }

    #[test]
    fn code_covering_radii() {
        let c_f4 = WordSet::from_code(&fixtures::f4()).unwrap();
        assert_eq!(c_f4.len(), 64);
        assert_eq!(covering_radius(&c_f4, false).unwrap(), 6);
        let c_bent42 = WordSet::from_code(&fixtures::bent42()).unwrap();
        assert_eq!(covering_radius(&c_bent42, false).unwrap(), 4);
    }

    #[test]
    fn sweep_cap_enforced() {
        let big = WordSet::explicit(18, vec![0]).unwrap();
        assert!(matches!(covering_radius(&big, false), Err(Error::LengthOverCap)));
        // override admits lengths 17..24
        assert_eq!(covering_radius(&big, true).unwrap(), 18);
        assert!(WordSet::explicit(25, vec![0]).is_err());
    }

    #[test]
    fn threads_agree_with_single() {
        let rm = WordSet::rm1(4).unwrap();
        let single = covering_radius(&rm, false).unwrap();
        std::env::set_var("FLATLAB_THREADS", "3");
        let multi = covering_radius(&rm, false).unwrap();
        std::env::remove_var("FLATLAB_THREADS");
        assert_eq!(single, multi);
    }

    #[test]
    fn bent_sum_checks() {
        let f4 = fixtures::f4();
        assert!(!bent_sum_check(&f4, &f4).unwrap()); // zero is not bent
        let zero = VectorialFunc::from_truth_table(4, 1, vec![0; 16]).unwrap();
        assert!(bent_sum_check(&f4, &zero).unwrap());
        // adding an affine function keeps the sum bent
        let x1 = VectorialFunc::from_truth_table(4, 1, (0..16).map(|x| x & 1).collect()).unwrap();
        assert!(bent_sum_check(&f4.xor(&x1).unwrap(), &zero).unwrap());
        let odd = VectorialFunc::from_truth_table(3, 1, vec![0; 8]).unwrap();
        assert!(matches!(bent_sum_check(&odd, &odd), Err(Error::OddDimension)));
    }

    #[test]
    fn sufficient_condition_lemma() {
        // if all shifted distances fall within the closed band, they take
        // only the extreme values, and this happens exactly for bent sums
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        let rm = WordSet::rm1(4).unwrap();
        for _ in 0..200 {
            let (wf, wg) = (rng.gen_range(0..1u32 << 16), rng.gen_range(0..1u32 << 16));
            let distances: Vec<u64> = rm
                .members()
                .iter()
                .map(|&l| (wf ^ wg ^ l).count_ones() as u64)
                .collect();
            let in_band = distances.iter().all(|&d| (6..=10).contains(&d));
            let extreme = distances.iter().all(|&d| d == 6 || d == 10);
            assert_eq!(in_band, extreme);
            assert_eq!(extreme, word_is_bent_n4(wf ^ wg));
        }
    }

    #[test]
    fn catalog_and_cache_roundtrip() {
        let catalog = bent_catalog(4).unwrap();
        assert_eq!(catalog.len(), 896);
        let text = catalog_to_file_string(4, &catalog);
        assert!(text.starts_with("n=4 predicate=bent\n"));
        let (n, words) = catalog_from_file_string(&text).unwrap();
        assert_eq!((n, words), (4, catalog));
        assert!(catalog_from_file_string("n=4 predicate=apn\n00\n").is_err());
        assert!(bent_catalog(6).is_err());
    }

    #[test]
    fn extendability_modes() {
        let f4 = fixtures::f4();
        let bent42 = fixtures::bent42();

        let ex = is_extendable(&f4, ExtendMode::Exhaustive).unwrap();
        let Extendability::Extendable(witness) = &ex else {
            panic!("f4 must be extendable");
        };
        assert!(concat_is_bent(&f4, witness));
        // the (4,2)-bent's second coordinate is a known witness
        let known = bent42.complement_project(1).unwrap();
        assert!(concat_is_bent(&f4, &known));

        assert!(matches!(
            is_extendable(&f4, ExtendMode::CoveringRadius).unwrap(),
            Extendability::Extendable(_)
        ));
        assert_eq!(
            is_extendable(&bent42, ExtendMode::Exhaustive).unwrap(),
            Extendability::Lonely
        );
        assert_eq!(
            is_extendable(&bent42, ExtendMode::CoveringRadius).unwrap(),
            Extendability::Lonely
        );
        // family mode: Nyberg case is analytic, otherwise search
        assert_eq!(
            is_extendable(&bent42, ExtendMode::Family).unwrap(),
            Extendability::Lonely
        );
        assert!(matches!(
            is_extendable(&f4, ExtendMode::Family).unwrap(),
            Extendability::Extendable(_) | Extendability::Unknown
        ));

        let zero = VectorialFunc::from_truth_table(4, 1, vec![0; 16]).unwrap();
        assert!(matches!(
            is_extendable(&zero, ExtendMode::Exhaustive),
            Err(Error::NotBent)
        ));
        assert!(matches!(
            is_extendable(&fixtures::gold6(), ExtendMode::Exhaustive),
            Err(Error::NotBent)
        ));
    }

    #[test]
    fn complement_structure_f4() {
        let s = metric_complement_structure(&fixtures::f4()).unwrap();
        assert_eq!(s.coset_size, 64);
        assert_eq!(s.complement_size % 64, 0);
        assert_eq!(s.coset_count * s.coset_size, s.complement_size);
        assert_eq!(s.uniquely_extendable, s.coset_count == 1);
        // every complement member is bent and extends f4
        let code = WordSet::from_code(&fixtures::f4()).unwrap();
        let complement = metric_complement(&code, false).unwrap();
        for &w in complement.members().iter().step_by(7) {
            assert!(word_is_bent_n4(w));
            let candidate = word_to_boolean(4, w).unwrap();
            assert!(concat_is_bent(&fixtures::f4(), &candidate));
        }
        assert!(matches!(
            metric_complement_structure(&fixtures::bent42()),
            Err(Error::NotExtendable)
        ));
    }

    #[test]
    fn au_set_f4() {
        let rm = WordSet::rm1(4).unwrap();
        let f4 = boolean_word(&fixtures::f4()).unwrap();
        let u = WordSet::explicit(16, vec![f4]).unwrap();
        let report = au_set(&rm, &u).unwrap();
        // AU = RM(4,1) + {0, f4} = C_{f4}
        assert_eq!(report.au, WordSet::from_code(&fixtures::f4()).unwrap());
        assert_eq!((report.rho_a, report.rho_au), (6, 6));
        assert!(report.theorem_holds);

        // empty U changes nothing
        let report = au_set(&rm, &WordSet::explicit(16, vec![]).unwrap()).unwrap();
        assert_eq!(report.au, rm);
        assert_eq!(report.rho_au, 6);
        assert!(report.theorem_holds);

        // preconditions
        let no_zero = WordSet::explicit(16, vec![1, 2]).unwrap();
        assert!(matches!(au_set(&no_zero, &u), Err(Error::ZeroNotInA)));
        let not_in_b = WordSet::explicit(16, vec![3]).unwrap();
        assert!(matches!(au_set(&rm, &not_in_b), Err(Error::UNotInComplement)));
    }

    #[test]
    fn au_set_radius_drop() {
        // grow U greedily until no bent function is bent-compatible with all
        // of it; the theorem then forces the covering radius to drop
        let catalog = bent_catalog(4).unwrap();
        let mut u_words: Vec<u32> = Vec::new();
        let mut predicted = catalog.clone();
        while let Some(&w) = predicted.first() {
            u_words.push(w);
            predicted.retain(|&p| p != w && word_is_bent_n4(p ^ w));
        }
        let rm = WordSet::rm1(4).unwrap();
        let u = WordSet::explicit(16, u_words).unwrap();
        let report = au_set(&rm, &u).unwrap();
        assert!(report.predicted_complement.is_empty());
        assert!(report.rho_au < 6);
        assert!(report.theorem_holds);
    }

    #[test]
    fn tokareva_n4() {
        let report = tokareva_check(4).unwrap();
        assert!(report.holds);
        assert_eq!(report.checked, 2048);
        assert!(report.exceptions.is_empty());
        assert!(matches!(tokareva_check(6), Err(Error::UnsupportedDimension)));
    }
}
