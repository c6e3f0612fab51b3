//! Deterministic random generation of point sets.
//!
//! The generator is a fixed 64-bit splitmix sequence, so identical seeds
//! produce identical varieties on every platform. Residues are drawn by
//! rejection below the largest multiple of p, which keeps them exactly
//! uniform.

use std::collections::HashSet;

use crate::error::Error;
use crate::essbm::Variety;
use crate::field::PrimeField;

/// Splitmix64: state advances by the golden-ratio increment, output is the
/// mixed state.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform residue in [0, p): draws below 2^64 mod p are rejected, so
    /// every residue is hit by exactly floor(2^64 / p) raw values.
    pub fn uniform(&mut self, p: u64) -> u64 {
        debug_assert!(p > 0);
        let threshold = p.wrapping_neg() % p;
        loop {
            let x = self.next_u64();
            if x >= threshold {
                return x % p;
            }
        }
    }
}

/// Generates m pairwise-distinct uniform points in F_p^n, fully determined
/// by (p, n, m, seed). Whole duplicate points are rejected and redrawn.
pub fn random_variety(
    field: PrimeField,
    n_vars: usize,
    m: usize,
    seed: u64,
) -> Result<Variety, Error> {
    let p = field.modulus();
    let mut capacity: u128 = 1;
    for _ in 0..n_vars {
        capacity = capacity.saturating_mul(u128::from(p));
    }
    if m as u128 > capacity {
        return Err(Error::TooManyPoints { m, capacity });
    }
    if m == 0 {
        return Err(Error::EmptyPointSet);
    }
    let mut rng = SplitMix64::new(seed);
    let mut seen: HashSet<Vec<u64>> = HashSet::with_capacity(m);
    let mut points = Vec::with_capacity(m);
    while points.len() < m {
        let row: Vec<u64> = (0..n_vars).map(|_| rng.uniform(p)).collect();
        if seen.insert(row.clone()) {
            points.push(row.into_iter().map(|v| field.element(v)).collect());
        }
    }
    Variety::new(field, n_vars, points)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_distinct() {
        let field = PrimeField::new(3).unwrap();
        let a = random_variety(field, 4, 5, 1).unwrap();
        let b = random_variety(field, 4, 5, 1).unwrap();
        assert_eq!(a.points(), b.points());
        assert_eq!(a.len(), 5);
        let c = random_variety(field, 4, 5, 2).unwrap();
        assert_ne!(a.points(), c.points());
    }

    #[test]
    fn pigeonhole_rejected() {
        let field = PrimeField::new(2).unwrap();
        assert_eq!(
            random_variety(field, 2, 5, 0),
            Err(Error::TooManyPoints { m: 5, capacity: 4 })
        );
        // Exactly filling the space works.
        let full = random_variety(field, 2, 4, 0).unwrap();
        assert_eq!(full.len(), 4);
    }

    #[test]
    fn residues_are_in_range() {
        let field = PrimeField::new(17).unwrap();
        let mut rng = SplitMix64::new(42);
        for _ in 0..1000 {
            assert!(rng.uniform(17) < 17);
        }
        let v = random_variety(field, 3, 10, 7).unwrap();
        for pt in v.points() {
            for c in pt {
                assert!(c.value() < 17);
            }
        }
    }
}
