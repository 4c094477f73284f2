use std::fmt;

use num::One;

use super::scalar::GaussianRational;
use crate::error::{Error, Result};

/// Largest generator index a blade can carry.
pub const MAX_GENERATORS: usize = 32;

/// Basis blade `e_A = e_{a1} e_{a2} ⋯` with `a1 < a2 < ⋯`, stored as a bitmask
/// (bit `j - 1` set when `e_j` is present). The empty blade is the unit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Blade(u32);

impl Blade {
    pub const UNIT: Blade = Blade(0);

    /// Builds a blade from strictly increasing 1-based generator indices.
    pub fn new(indices: &[usize]) -> Result<Self> {
        let mut bits = 0u32;
        let mut last = 0usize;
        for &j in indices {
            if j == 0 || j > MAX_GENERATORS {
                return Err(Error::IndexOutOfRange(format!("generator index {j}")));
            }
            if j <= last {
                return Err(Error::InvalidParameter(format!(
                    "blade indices must be strictly increasing, got {indices:?}"
                )));
            }
            last = j;
            bits |= 1 << (j - 1);
        }
        Ok(Blade(bits))
    }

    pub fn generator(j: usize) -> Result<Self> {
        Self::new(&[j])
    }

    pub const fn from_bits(bits: u32) -> Self {
        Blade(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_unit(self) -> bool {
        self.0 == 0
    }

    /// Largest generator index present, 0 for the unit.
    pub fn top_index(self) -> usize {
        (32 - self.0.leading_zeros()) as usize
    }

    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|b| self.0 & (1 << b) != 0).map(|b| b + 1).collect()
    }

    pub fn contains(self, j: usize) -> bool {
        (1..=MAX_GENERATORS).contains(&j) && self.0 & (1 << (j - 1)) != 0
    }

    /// Sign of the reversion `e_{a_k} ⋯ e_{a_1} = ±e_A`.
    pub fn reversion_sign(self) -> i32 {
        let g = self.grade();
        if (g * g.saturating_sub(1) / 2).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// Sign and blade of the unit-free product `e_A e_B` with `e_j² = -1`.
pub(crate) fn blade_product(a: Blade, b: Blade) -> (i32, Blade) {
    let mut swaps = 0u32;
    let mut rest = b.0;
    while rest != 0 {
        let j = rest.trailing_zeros();
        // generators of `a` with index above j must hop over e_j
        swaps += (a.0 >> (j + 1)).count_ones();
        rest &= rest - 1;
    }
    swaps += (a.0 & b.0).count_ones();
    let sign = if swaps.is_multiple_of(2) { 1 } else { -1 };
    (sign, Blade(a.0 ^ b.0))
}

/// Geometric product of two basis blades of an algebra with `m` generators.
pub fn blade_mul(a: Blade, b: Blade, m: usize) -> Result<(GaussianRational, Blade)> {
    if a.top_index() > m || b.top_index() > m {
        return Err(Error::IndexOutOfRange(format!(
            "blade {a} or {b} exceeds dimension {m}"
        )));
    }
    let (s, c) = blade_product(a, b);
    let sign = if s > 0 { GaussianRational::one() } else { -GaussianRational::one() };
    Ok((sign, c))
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.indices().iter().map(|j| j.to_string()).collect();
        write!(f, "e{{{}}}", parts.join(","))
    }
}
