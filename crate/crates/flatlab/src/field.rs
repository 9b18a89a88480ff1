//! Arithmetic in GF(2^n) with a configurable defining polynomial.
//!
//! Elements are encoded as little-endian coefficient vectors read as
//! integers, so the class of the indeterminate is `2`. The encoding matches
//! the truth-table index convention of [`crate::func::VectorialFunc`].

use crate::error::{Error, Result};
use crate::func::VectorialFunc;

/// A binary extension field GF(2^n), 2 <= n <= 16.
#[derive(Debug, Clone)]
pub struct Field {
    n: usize,
    poly: u64,
    primitive: bool,
    generator: u32,
    log: Vec<u32>,
    antilog: Vec<u32>,
}

/// One term of a univariate polynomial over the field: a coefficient given
/// as a power of the generator (or zero) and an exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Term {
    /// `None` encodes the zero coefficient, `Some(k)` the element g^k.
    pub coeff_pow: Option<u64>,
    pub exponent: u64,
}

fn poly_degree(p: u64) -> usize {
    (63 - p.leading_zeros()) as usize
}

fn poly_rem(mut a: u64, b: u64) -> u64 {
    let db = poly_degree(b);
    while a != 0 && poly_degree(a) >= db {
        a ^= b << (poly_degree(a) - db);
    }
    a
}

/// Trial division by every polynomial of degree 1..=n/2.
fn is_irreducible(poly: u64, n: usize) -> bool {
    for d in 1..=n / 2 {
        for g in (1u64 << d)..(1u64 << (d + 1)) {
            if poly_rem(poly, g) == 0 {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// Constructs GF(2^n) from an irreducible polynomial given as a bitmask
    /// with degree exactly `n` and constant term 1.
    pub fn new(n: usize, poly: u64) -> Result<Self> {
        if !(2..=16).contains(&n) {
            return Err(Error::BadParameters);
        }
        if poly == 0 || poly_degree(poly) != n || poly & 1 == 0 {
            return Err(Error::DegreeMismatch {
                expected: n,
                got: if poly == 0 { 0 } else { poly_degree(poly) },
            });
        }
        if !is_irreducible(poly, n) {
            return Err(Error::ReduciblePolynomial { poly });
        }
        let order = (1u32 << n) - 1;
        let mul = |a: u32, b: u32| -> u32 {
            let mut acc: u64 = 0;
            let (a, b) = (a as u64, b as u64);
            for i in 0..n {
                if b >> i & 1 == 1 {
                    acc ^= a << i;
                }
            }
            poly_rem(acc, poly) as u32
        };
        let elem_order = |e: u32| -> u32 {
            let mut acc = e;
            let mut ord = 1;
            while acc != 1 {
                acc = mul(acc, e);
                ord += 1;
            }
            ord
        };
        let primitive = elem_order(2) == order;
        let generator = if primitive {
            2
        } else {
            (3..1u32 << n)
                .find(|&e| elem_order(e) == order)
                .expect("multiplicative group of a finite field is cyclic")
        };
        let mut log = vec![0u32; 1 << n];
        let mut antilog = vec![0u32; order as usize];
        let mut acc = 1u32;
        for i in 0..order {
            antilog[i as usize] = acc;
            log[acc as usize] = i;
            acc = mul(acc, generator);
        }
        debug_assert_eq!(acc, 1);
        Ok(Field {
            n,
            poly,
            primitive,
            generator,
            log,
            antilog,
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn poly(&self) -> u64 {
        self.poly
    }

    /// True when the class of the indeterminate generates the multiplicative group.
    pub fn is_primitive(&self) -> bool {
        self.primitive
    }

    pub fn generator(&self) -> u32 {
        self.generator
    }

    /// The element g^k for the generator g.
    pub fn generator_power(&self, k: u64) -> u32 {
        let order = (1u64 << self.n) - 1;
        self.antilog[(k % order) as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let order = ((1u32 << self.n) - 1) as u64;
        let s = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % order;
        self.antilog[s as usize]
    }

    pub fn pow(&self, e: u32, k: u64) -> u32 {
        if k == 0 {
            return 1;
        }
        if e == 0 {
            return 0;
        }
        let order = ((1u32 << self.n) - 1) as u64;
        let s = (self.log[e as usize] as u64 * (k % order)) % order;
        // e^k for k >= 1 depends on k mod (2^n - 1) only
        self.antilog[s as usize]
    }

    /// Evaluates a univariate polynomial at every field element, producing
    /// the truth table of the induced (n,n)-function.
    pub fn univariate_to_table(&self, terms: &[Term]) -> Result<VectorialFunc> {
        let size = 1u64 << self.n;
        for t in terms {
            if t.exponent >= size {
                return Err(Error::ExponentOutOfRange(t.exponent));
            }
        }
        let mut table = Vec::with_capacity(size as usize);
        for x in 0..size as u32 {
            let mut acc = 0u32;
            for t in terms {
                let c = match t.coeff_pow {
                    None => 0,
                    Some(k) => self.generator_power(k),
                };
                if c == 0 {
                    continue;
                }
                let xe = if t.exponent == 0 {
                    1
                } else if x == 0 {
                    0
                } else {
                    self.pow(x, t.exponent)
                };
                acc ^= self.mul(c, xe);
            }
            table.push(acc);
        }
        VectorialFunc::from_truth_table(self.n, self.n, table)
    }
}

/// Parses a univariate term specification such as
/// `"x3 + a11*x5 + a13*x9 + x17 + a11*x33 + x48"`.
///
/// Each '+'-separated term is either `x<e>` or a bare exponent `<e>`
/// (coefficient 1), `a<k>` (a constant g^k), or `a<k>*x<e>`.
pub fn parse_terms(spec: &str) -> Result<Vec<Term>> {
    let mut terms = Vec::new();
    for raw in spec.split('+') {
        let t = raw.trim();
        if t.is_empty() {
            return Err(Error::Parse(format!("empty term in {spec:?}")));
        }
        let bad = || Error::Parse(format!("cannot parse term {t:?}"));
        let term = if let Some(rest) = t.strip_prefix('a') {
            match rest.split_once('*') {
                Some((k, x)) => {
                    let k = k.trim().parse::<u64>().map_err(|_| bad())?;
                    let x = x.trim().strip_prefix('x').ok_or_else(bad)?;
                    Term {
                        coeff_pow: Some(k),
                        exponent: x.parse().map_err(|_| bad())?,
                    }
                }
                None => Term {
                    coeff_pow: Some(rest.parse::<u64>().map_err(|_| bad())?),
                    exponent: 0,
                },
            }
        } else {
            let e = t.strip_prefix('x').unwrap_or(t);
            Term {
                coeff_pow: Some(0),
                exponent: e.parse().map_err(|_| bad())?,
            }
        };
        terms.push(term);
    }
    Ok(terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dillon_field_is_primitive() {
        // x^6 + x^4 + x^3 + x + 1
        let f = Field::new(6, 0x5b).unwrap();
        assert!(f.is_primitive());
        assert_eq!(f.generator(), 2);
    }

    #[test]
    fn degree_two_field() {
        let f = Field::new(2, 0b111).unwrap();
        assert!(f.is_primitive());
    }

    #[test]
    fn non_primitive_irreducible() {
        // x^4 + x^3 + x^2 + x + 1 is irreducible but x has order 5
        let f = Field::new(4, 0b11111).unwrap();
        assert!(!f.is_primitive());
        // the antilog table is still over a generator of the full group
        assert_eq!(f.pow(f.generator(), 15), 1);
        assert_ne!(f.pow(f.generator(), 5), 1);
        assert_eq!(f.pow(2, 5), 1);
    }

    #[test]
    fn reducible_rejected() {
        // x^4 + 1 = (x+1)^4
        assert!(matches!(
            Field::new(4, 0b10001),
            Err(Error::ReduciblePolynomial { poly: 0b10001 })
        ));
        assert!(matches!(
            Field::new(4, 0b101),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn lagrange_exhaustive() {
        for (n, poly) in [(3usize, 0b1011u64), (5, 0b100101), (8, 0x11b)] {
            let f = Field::new(n, poly).unwrap();
            let order = (1u64 << n) - 1;
            for e in 1..1u32 << n {
                assert_eq!(f.pow(e, order), 1);
            }
        }
    }

    #[test]
    fn frobenius_additivity() {
        for (n, poly) in [(4usize, 0b10011u64), (6, 0x5b)] {
            let f = Field::new(n, poly).unwrap();
            for a in 0..1u32 << n {
                for b in 0..1u32 << n {
                    let lhs = f.mul(a ^ b, a ^ b);
                    assert_eq!(lhs, f.mul(a, a) ^ f.mul(b, b));
                }
            }
        }
    }

    #[test]
    fn log_antilog_roundtrip() {
        let f = Field::new(6, 0x5b).unwrap();
        for e in 1..64u32 {
            assert_eq!(f.antilog[f.log[e as usize] as usize], e);
        }
    }

    #[test]
    fn power_map_permutation_when_coprime() {
        let f = Field::new(5, 0b100101).unwrap();
        // gcd(3, 31) = 1
        let tab = f
            .univariate_to_table(&[Term {
                coeff_pow: Some(0),
                exponent: 3,
            }])
            .unwrap();
        let mut seen = vec![false; 32];
        for x in 0..32 {
            let y = tab.value(x) as usize;
            assert!(!seen[y]);
            seen[y] = true;
        }
        assert_eq!(tab.value(0), 0);
        assert_eq!(tab.value(1), 1);
    }

    #[test]
    fn identity_map() {
        let f = Field::new(4, 0b10011).unwrap();
        let tab = f.univariate_to_table(&parse_terms("x1").unwrap()).unwrap();
        for x in 0..16 {
            assert_eq!(tab.value(x), x as u32);
        }
    }

    #[test]
    fn exponent_out_of_range() {
        let f = Field::new(4, 0b10011).unwrap();
        let r = f.univariate_to_table(&[Term {
            coeff_pow: Some(0),
            exponent: 16,
        }]);
        assert_eq!(r, Err(Error::ExponentOutOfRange(16)));
    }

    #[test]
    fn term_parsing() {
        assert_eq!(
            parse_terms("x3 + a11*x5 + 48").unwrap(),
            vec![
                Term {
                    coeff_pow: Some(0),
                    exponent: 3
                },
                Term {
                    coeff_pow: Some(11),
                    exponent: 5
                },
                Term {
                    coeff_pow: Some(0),
                    exponent: 48
                },
            ]
        );
        assert!(parse_terms("a11*y5").is_err());
    }
}
