//! Arithmetic in `GF(2^t)` for `1 <= t <= 16`.
//!
//! Elements are integers below `2^t` read as polynomials over `GF(2)` (bit
//! `i` is the coefficient of `x^i`). Products are carry-less multiplications
//! reduced by a fixed irreducible polynomial per degree, so field elements
//! and everything derived from them are the same on every platform.

use super::CodeError;

/// Reduction polynomials for `t = 1..=16`, including the leading term.
pub const REDUCTION_POLYNOMIALS: [u32; 16] = [
    0x3, 0x7, 0xB, 0x13, 0x25, 0x43, 0x83, 0x11D, 0x211, 0x409, 0x805, 0x1053, 0x201B, 0x4443,
    0x8003, 0x1002D,
];

/// The field `GF(2^t)` with the reduction polynomial from the table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gf2m {
    t: usize,
    poly: u32,
}

impl Gf2m {
    pub fn new(t: usize) -> Result<Self, CodeError> {
        if !(1..=16).contains(&t) {
            return Err(CodeError::UnsupportedFieldDegree(t));
        }
        Ok(Gf2m {
            t,
            poly: REDUCTION_POLYNOMIALS[t - 1],
        })
    }

    pub fn degree(&self) -> usize {
        self.t
    }

    pub fn size(&self) -> u32 {
        1 << self.t
    }

    pub fn polynomial(&self) -> u32 {
        self.poly
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        a ^ b
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.size() && b < self.size());
        let mut acc = 0u32;
        let mut a = a;
        let mut b = b;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a >> self.t & 1 == 1 {
                a ^= self.poly;
            }
        }
        acc
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.pow(a, (self.size() - 2) as u64))
    }
}

fn poly_degree(p: u64) -> i32 {
    63 - p.leading_zeros() as i32
}

fn poly_rem(mut a: u64, b: u64) -> u64 {
    let db = poly_degree(b);
    while a != 0 && poly_degree(a) >= db {
        a ^= b << (poly_degree(a) - db);
    }
    a
}

/// Irreducibility over `GF(2)` by trial division.
pub fn is_irreducible(poly: u64) -> bool {
    let d = poly_degree(poly);
    if d < 1 {
        return false;
    }
    (2u64..1 << (d / 2 + 1))
        .filter(|&q| poly_degree(q) <= d / 2)
        .all(|q| poly_rem(poly, q) != 0)
}
