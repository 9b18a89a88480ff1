//! Canonical test functions used across the crate and its test suites.

use crate::field::{parse_terms, Field};
use crate::func::VectorialFunc;

fn bit(x: usize, i: usize) -> u32 {
    (x >> i & 1) as u32
}

/// The Boolean bent function f(x) = x1 x2 + x3 x4 on F_2^4.
pub fn f4() -> VectorialFunc {
    let table = (0..16)
        .map(|x| bit(x, 0) & bit(x, 1) ^ bit(x, 2) & bit(x, 3))
        .collect();
    VectorialFunc::from_truth_table(4, 1, table).unwrap()
}

/// The (4,2)-bent function (x1 x2 + x3 x4, x1 x2 + x1 x4 + x2 x3).
pub fn bent42() -> VectorialFunc {
    let table = (0..16)
        .map(|x| {
            let f1 = bit(x, 0) & bit(x, 1) ^ bit(x, 2) & bit(x, 3);
            let f2 = bit(x, 0) & bit(x, 1) ^ bit(x, 0) & bit(x, 3) ^ bit(x, 1) & bit(x, 2);
            f1 | f2 << 1
        })
        .collect();
    VectorialFunc::from_truth_table(4, 2, table).unwrap()
}

/// GF(2^6) presented by the primitive polynomial x^6 + x^4 + x^3 + x + 1.
pub fn field64() -> Field {
    Field::new(6, 0x5b).unwrap()
}

/// The APN sextic x^3 + a^11 x^5 + a^13 x^9 + x^17 + a^11 x^33 + x^48
/// from Dillon's list, over [`field64`].
pub fn dillon_sextic() -> VectorialFunc {
    field64()
        .univariate_to_table(&parse_terms("x3 + a11*x5 + a13*x9 + x17 + a11*x33 + x48").unwrap())
        .unwrap()
}

/// The Gold map x^3 over GF(2^5) (an AB permutation).
pub fn gold5() -> VectorialFunc {
    let field = Field::new(5, 0b100101).unwrap();
    field.univariate_to_table(&parse_terms("x3").unwrap()).unwrap()
}

/// The Gold map x^3 over GF(2^6).
pub fn gold6() -> VectorialFunc {
    field64()
        .univariate_to_table(&parse_terms("x3").unwrap())
        .unwrap()
}

/// Kim's quadratic APN function kappa(x) = x^3 + x^10 + a x^24 over [`field64`].
///
/// Accepted into the corpus only because the fixture gate in the test suite
/// confirms it is APN, quadratic, and reproduces the expected nonvanishing
/// flat statistics (42 values giving 1-(64,4,9), 21 giving 1-(64,4,13)).
pub fn kim() -> VectorialFunc {
    field64()
        .univariate_to_table(&parse_terms("x3 + x10 + a1*x24").unwrap())
        .unwrap()
}
