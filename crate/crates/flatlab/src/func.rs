//! Truth-table representations of (n,m)-functions, algebraic normal forms,
//! components, derivatives, projections and affine transformations.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Parity of the dot product `<a, x>` on bit vectors.
#[inline]
pub fn dot(a: u32, x: u32) -> u32 {
    (a & x).count_ones() & 1
}

/// An (n,m)-function given by its truth table. `table[x]` is the output at
/// the point whose little-endian bit vector is `x` (x_1 = least significant
/// bit).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VectorialFunc {
    n: usize,
    m: usize,
    table: Vec<u32>,
}

/// Algebraic normal form coefficients, one bit per output coordinate:
/// `coeffs[v]` carries the monomial prod_{i in v} x_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnfTable {
    n: usize,
    m: usize,
    coeffs: Vec<u32>,
}

/// In-place Moebius (binary zeta) transform; self-inverse. Operates on all
/// output bits of each word at once.
fn moebius(n: usize, data: &mut [u32]) {
    for i in 0..n {
        let bit = 1usize << i;
        for x in 0..data.len() {
            if x & bit != 0 {
                data[x] ^= data[x ^ bit];
            }
        }
    }
}

impl VectorialFunc {
    pub fn from_truth_table(n: usize, m: usize, table: Vec<u32>) -> Result<Self> {
        if !(1..=16).contains(&n) || m < 1 || m > 16 {
            return Err(Error::BadParameters);
        }
        if table.len() != 1 << n {
            return Err(Error::BadLength {
                expected: 1 << n,
                got: table.len(),
            });
        }
        let bound = if m == 32 { u32::MAX } else { 1u32 << m };
        if let Some((index, &value)) = table.iter().enumerate().find(|(_, &v)| v >= bound) {
            return Err(Error::EntryOutOfRange {
                index,
                value,
                bound,
            });
        }
        Ok(VectorialFunc { n, m, table })
    }

    /// A Boolean function from the ANF coefficient mask of monomials,
    /// `anf_mask` bit v set iff monomial prod_{i in v} x_i is present.
    pub fn boolean_from_anf_mask(n: usize, anf_mask: u64) -> Result<Self> {
        let mut coeffs: Vec<u32> = (0..1usize << n).map(|v| (anf_mask >> v & 1) as u32).collect();
        moebius(n, &mut coeffs);
        VectorialFunc::from_truth_table(n, 1, coeffs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    #[inline]
    pub fn value(&self, x: usize) -> u32 {
        self.table[x]
    }

    /// The component function x -> <b, F(x)> for a nonzero mask b.
    pub fn component(&self, b: u32) -> Result<VectorialFunc> {
        if b == 0 {
            return Err(Error::ZeroMask);
        }
        let table = self.table.iter().map(|&y| dot(b, y)).collect();
        VectorialFunc::from_truth_table(self.n, 1, table)
    }

    /// Pointwise XOR of two functions of matching dimensions.
    pub fn xor(&self, other: &VectorialFunc) -> Result<VectorialFunc> {
        if self.n != other.n || self.m != other.m {
            return Err(Error::BadParameters);
        }
        let table = self
            .table
            .iter()
            .zip(&other.table)
            .map(|(&a, &b)| a ^ b)
            .collect();
        VectorialFunc::from_truth_table(self.n, self.m, table)
    }

    pub fn anf(&self) -> AnfTable {
        let mut coeffs = self.table.clone();
        moebius(self.n, &mut coeffs);
        AnfTable {
            n: self.n,
            m: self.m,
            coeffs,
        }
    }

    /// Algebraic degree; the zero function has degree 0.
    pub fn degree(&self) -> u32 {
        self.anf()
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(v, _)| (v as u32).count_ones())
            .max()
            .unwrap_or(0)
    }

    /// First-order derivative x -> F(x + a) + F(x).
    pub fn derivative(&self, a: usize) -> VectorialFunc {
        let table = (0..self.table.len())
            .map(|x| self.table[x ^ a] ^ self.table[x])
            .collect();
        VectorialFunc {
            n: self.n,
            m: self.m,
            table,
        }
    }

    /// Second-order derivative x -> F(x) + F(x+a) + F(x+b) + F(x+a+b).
    pub fn second_derivative(&self, a: usize, b: usize) -> VectorialFunc {
        let table = (0..self.table.len())
            .map(|x| self.table[x] ^ self.table[x ^ a] ^ self.table[x ^ b] ^ self.table[x ^ a ^ b])
            .collect();
        VectorialFunc {
            n: self.n,
            m: self.m,
            table,
        }
    }

    /// Keeps the low `s` output coordinates.
    pub fn project(&self, s: usize) -> Result<VectorialFunc> {
        if s < 1 || s >= self.m {
            return Err(Error::BadSplit);
        }
        let mask = (1u32 << s) - 1;
        let table = self.table.iter().map(|&y| y & mask).collect();
        VectorialFunc::from_truth_table(self.n, s, table)
    }

    /// Keeps the high `m - s` output coordinates.
    pub fn complement_project(&self, s: usize) -> Result<VectorialFunc> {
        if s < 1 || s >= self.m {
            return Err(Error::BadSplit);
        }
        let table = self.table.iter().map(|&y| y >> s).collect();
        VectorialFunc::from_truth_table(self.n, self.m - s, table)
    }

    /// Appends a Boolean coordinate as output bit `m`, producing the
    /// (n, m+1)-extension.
    pub fn concat(&self, f: &VectorialFunc) -> Result<VectorialFunc> {
        if f.n != self.n || f.m != 1 {
            return Err(Error::BadSplit);
        }
        let table = self
            .table
            .iter()
            .zip(&f.table)
            .map(|(&y, &b)| y | b << self.m)
            .collect();
        VectorialFunc::from_truth_table(self.n, self.m + 1, table)
    }

    /// Applies the extended-affine transformation determined by the graph
    /// permutation L(x, y) = (A11 x + a, A21 x + A22 y + b):
    /// F'(A11 x + a) = A21 x + A22 F(x) + b.
    pub fn apply_ea(
        &self,
        a11: &BitMatrix,
        a21: &BitMatrix,
        a22: &BitMatrix,
        a: u32,
        b: u32,
    ) -> Result<VectorialFunc> {
        if a11.rows() != self.n
            || a11.cols() != self.n
            || a21.rows() != self.m
            || a21.cols() != self.n
            || a22.rows() != self.m
            || a22.cols() != self.m
        {
            return Err(Error::BadParameters);
        }
        if !a11.is_invertible() || !a22.is_invertible() {
            return Err(Error::SingularMatrix);
        }
        let mut table = vec![0u32; self.table.len()];
        for x in 0..self.table.len() {
            let xp = (a11.mul_vec(x as u32) ^ a) as usize;
            table[xp] = a21.mul_vec(x as u32) ^ a22.mul_vec(self.table[x]) ^ b;
        }
        VectorialFunc::from_truth_table(self.n, self.m, table)
    }

    /// Support of a Boolean function.
    pub fn support(&self) -> Vec<u32> {
        self.table
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(x, _)| x as u32)
            .collect()
    }

    pub fn weight(&self) -> usize {
        self.table.iter().filter(|&&v| v != 0).count()
    }

    /// Serializes in the function file format.
    pub fn to_file_string(&self) -> String {
        let mut s = format!("n={} m={}\ntt=", self.n, self.m);
        for (i, v) in self.table.iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            let _ = write!(s, "{v:x}");
        }
        s.push('\n');
        s
    }

    /// Parses the function file format: a header line `n=<int> m=<int>`
    /// followed by `tt=<2^n hex values>`.
    pub fn from_file_string(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Parse("empty file".into()))?;
        let mut n = None;
        let mut m = None;
        for part in header.split_whitespace() {
            if let Some(v) = part.strip_prefix("n=") {
                n = v.parse::<usize>().ok();
            } else if let Some(v) = part.strip_prefix("m=") {
                m = v.parse::<usize>().ok();
            } else {
                return Err(Error::Parse(format!("unexpected header token {part:?}")));
            }
        }
        let (n, m) = match (n, m) {
            (Some(n), Some(m)) => (n, m),
            _ => return Err(Error::Parse("header must be `n=<int> m=<int>`".into())),
        };
        let tt_line = lines
            .next()
            .and_then(|l| l.strip_prefix("tt="))
            .ok_or_else(|| Error::Parse("missing `tt=` line".into()))?;
        let table = tt_line
            .split_whitespace()
            .map(|t| u32::from_str_radix(t, 16).map_err(|_| Error::Parse(format!("bad table value {t:?}"))))
            .collect::<Result<Vec<u32>>>()?;
        if !(1..=16).contains(&n) {
            return Err(Error::Parse(format!("n={n} out of range")));
        }
        VectorialFunc::from_truth_table(n, m, table)
    }
}

impl AnfTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// Inverse of [`VectorialFunc::anf`].
    pub fn to_func(&self) -> VectorialFunc {
        let mut table = self.coeffs.clone();
        moebius(self.n, &mut table);
        VectorialFunc {
            n: self.n,
            m: self.m,
            table,
        }
    }
}

/// A bit matrix over GF(2); row i is a column bitmask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: Vec<u32>,
    cols: usize,
}

impl BitMatrix {
    pub fn new(rows: Vec<u32>, cols: usize) -> Self {
        debug_assert!(rows.iter().all(|&r| cols == 32 || r < 1 << cols));
        BitMatrix { rows, cols }
    }

    pub fn identity(size: usize) -> Self {
        BitMatrix {
            rows: (0..size).map(|i| 1u32 << i).collect(),
            cols: size,
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        BitMatrix {
            rows: vec![0; rows],
            cols,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// y_i = <row_i, x>.
    #[inline]
    pub fn mul_vec(&self, x: u32) -> u32 {
        let mut y = 0u32;
        for (i, &row) in self.rows.iter().enumerate() {
            y |= dot(row, x) << i;
        }
        y
    }

    pub fn is_invertible(&self) -> bool {
        if self.rows.len() != self.cols {
            return false;
        }
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let bit = 1u32 << col;
            if let Some(p) = (rank..rows.len()).find(|&r| rows[r] & bit != 0) {
                rows.swap(rank, p);
                let pivot = rows[rank];
                for (r, row) in rows.iter_mut().enumerate() {
                    if r != rank && *row & bit != 0 {
                        *row ^= pivot;
                    }
                }
                rank += 1;
            }
        }
        rank == self.cols
    }

    /// Samples an invertible square matrix.
    pub fn random_invertible<R: rand::Rng>(size: usize, rng: &mut R) -> Self {
        loop {
            let rows: Vec<u32> = (0..size).map(|_| rng.gen::<u32>() & ((1u32 << size) - 1)).collect();
            let m = BitMatrix { rows, cols: size };
            if m.is_invertible() {
                return m;
            }
        }
    }

    pub fn random<R: rand::Rng>(rows: usize, cols: usize, rng: &mut R) -> Self {
        let rows: Vec<u32> = (0..rows).map(|_| rng.gen::<u32>() & ((1u32 << cols) - 1)).collect();
        BitMatrix { rows, cols }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    #[test]
    fn f4_support() {
        let f4 = fixtures::f4();
        assert_eq!(f4.support(), vec![3, 7, 11, 12, 13, 14]);
    }

    #[test]
    fn identity_on_f2() {
        let f = VectorialFunc::from_truth_table(1, 1, vec![0, 1]).unwrap();
        assert_eq!(f.value(1), 1);
    }

    #[test]
    fn entry_out_of_range() {
        let r = VectorialFunc::from_truth_table(2, 1, vec![0, 0, 0, 2]);
        assert!(matches!(r, Err(Error::EntryOutOfRange { index: 3, value: 2, .. })));
    }

    #[test]
    fn component_extracts_coordinates() {
        let f = fixtures::bent42();
        let f1 = f.component(0b01).unwrap();
        assert_eq!(f1, fixtures::f4());
        // b = 11: XOR of the two coordinates, x1x4 + x2x3 + x3x4
        let f3 = f.component(0b11).unwrap();
        let expected = f.component(1).unwrap().xor(&f.component(2).unwrap()).unwrap();
        assert_eq!(f3, expected);
    }

    #[test]
    fn component_of_boolean_is_itself() {
        let f4 = fixtures::f4();
        assert_eq!(f4.component(1).unwrap(), f4);
        assert!(matches!(f4.component(0), Err(Error::ZeroMask)));
    }

    #[test]
    fn anf_of_f4() {
        let f4 = fixtures::f4();
        let anf = f4.anf();
        let nonzero: Vec<usize> = anf
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(v, _)| v)
            .collect();
        assert_eq!(nonzero, vec![3, 12]);
        assert_eq!(f4.degree(), 2);
    }

    #[test]
    fn anf_of_constants() {
        let zero = VectorialFunc::from_truth_table(3, 1, vec![0; 8]).unwrap();
        assert!(zero.anf().coeffs().iter().all(|&c| c == 0));
        assert_eq!(zero.degree(), 0);
        // x -> x1 + 1
        let f = VectorialFunc::from_truth_table(2, 1, vec![1, 0, 1, 0]).unwrap();
        assert_eq!(f.degree(), 1);
    }

    #[test]
    fn dillon_sextic_is_quadratic() {
        assert_eq!(fixtures::dillon_sextic().degree(), 2);
    }

    #[test]
    fn second_derivative_cases() {
        let f4 = fixtures::f4();
        let z = f4.second_derivative(5, 5);
        assert!(z.table().iter().all(|&v| v == 0));
        // D_{e1,e2}(x1 x2) = 1
        let d = f4.second_derivative(1, 2);
        assert!(d.table().iter().all(|&v| v == 1));
    }

    #[test]
    fn derivative_of_affine_is_constant() {
        let f = VectorialFunc::from_truth_table(3, 1, (0..8).map(|x| dot(0b101, x) ^ 1).collect())
            .unwrap();
        for a in 0..8 {
            let d = f.derivative(a);
            assert!(d.table().iter().all(|&v| v == d.value(0)));
        }
    }

    #[test]
    fn projections_of_bent42() {
        let f = fixtures::bent42();
        assert_eq!(f.project(1).unwrap(), fixtures::f4());
        // complement projection keeps the second coordinate
        assert_eq!(f.complement_project(1).unwrap(), f.component(2).unwrap());
        let rt = f.project(1).unwrap().concat(&f.component(2).unwrap()).unwrap();
        assert_eq!(rt, f);
        assert!(matches!(f.project(2), Err(Error::BadSplit)));
    }

    #[test]
    fn ea_identity_is_noop() {
        let f = fixtures::bent42();
        let g = f
            .apply_ea(
                &BitMatrix::identity(4),
                &BitMatrix::zero(2, 4),
                &BitMatrix::identity(2),
                0,
                0,
            )
            .unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn ea_swap_fixes_symmetric_f4() {
        // swap x1<->x3, x2<->x4; f4 is symmetric under it
        let a11 = BitMatrix::new(vec![0b0100, 0b1000, 0b0001, 0b0010], 4);
        let f4 = fixtures::f4();
        let g = f4
            .apply_ea(&a11, &BitMatrix::zero(1, 4), &BitMatrix::identity(1), 0, 0)
            .unwrap();
        assert_eq!(f4, g);
    }

    #[test]
    fn singular_matrix_rejected() {
        let f = fixtures::f4();
        let sing = BitMatrix::new(vec![1, 1, 4, 8], 4);
        let r = f.apply_ea(&sing, &BitMatrix::zero(1, 4), &BitMatrix::identity(1), 0, 0);
        assert!(matches!(r, Err(Error::SingularMatrix)));
    }

    #[test]
    fn file_format_roundtrip_and_rejects() {
        let f = fixtures::dillon_sextic();
        let s = f.to_file_string();
        assert_eq!(VectorialFunc::from_file_string(&s).unwrap(), f);
        assert!(VectorialFunc::from_file_string("n=2 m=1\ntt=0 1 0").is_err());
        assert!(VectorialFunc::from_file_string("n=2\ntt=0 1 0 1").is_err());
        assert!(VectorialFunc::from_file_string("n=2 m=1\ntt=0 1 0 zz").is_err());
    }

    proptest! {
        #[test]
        fn anf_roundtrip(n in 1usize..=8, seed in any::<u64>()) {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let m = 1 + (seed % 4) as usize;
            let table: Vec<u32> = (0..1usize << n)
                .map(|_| rand::Rng::gen_range(&mut rng, 0..1u32 << m))
                .collect();
            let f = VectorialFunc::from_truth_table(n, m, table).unwrap();
            prop_assert_eq!(f.anf().to_func(), f);
        }

        #[test]
        fn component_bilinearity(b1 in 1u32..4, b2 in 1u32..4, seed in any::<u64>()) {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let table: Vec<u32> = (0..16).map(|_| rand::Rng::gen_range(&mut rng, 0..4u32)).collect();
            let f = VectorialFunc::from_truth_table(4, 2, table).unwrap();
            prop_assume!(b1 != b2);
            let lhs = f.component(b1 ^ b2);
            let rhs = f.component(b1).unwrap().xor(&f.component(b2).unwrap()).unwrap();
            match lhs {
                Ok(l) => prop_assert_eq!(l, rhs),
                Err(_) => prop_assert!(b1 ^ b2 == 0),
            }
        }

        #[test]
        fn ea_preserves_degree_above_one(seed in any::<u64>()) {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let f = fixtures::bent42();
            let a11 = BitMatrix::random_invertible(4, &mut rng);
            let a21 = BitMatrix::random(2, 4, &mut rng);
            let a22 = BitMatrix::random_invertible(2, &mut rng);
            let a = rand::Rng::gen_range(&mut rng, 0..16u32);
            let b = rand::Rng::gen_range(&mut rng, 0..4u32);
            let g = f.apply_ea(&a11, &a21, &a22, a, b).unwrap();
            prop_assert_eq!(g.degree(), f.degree());
        }
    }
}
