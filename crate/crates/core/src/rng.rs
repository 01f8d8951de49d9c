//! Seeded random functions for cross-checking.
//!
//! The generator is a plain 64-bit linear congruential generator so that a
//! seed names the same function on every platform. Each minterm, in
//! ascending order, draws one output and takes it mod 3:
//! 0 = off, 1 = care, 2 = don't-care.

use crate::function::BooleanFunction;

const MULTIPLIER: u64 = 6364136223846793005;
const INCREMENT: u64 = 1442695040888963407;

#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        self.state
    }

    /// Draws the next function on `n` variables.
    ///
    /// Panics if `n` is outside the supported range.
    pub fn random_function(&mut self, n: u32) -> BooleanFunction {
        let mut care = Vec::new();
        let mut dont_care = Vec::new();
        for m in 0..1u32 << n {
            match self.next_u64() % 3 {
                1 => care.push(m),
                2 => dont_care.push(m),
                _ => {}
            }
        }
        BooleanFunction::new(n, care, dont_care).expect("generated minterms are in range")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_outputs_are_fixed() {
        let mut rng = Lcg::new(0);
        assert_eq!(rng.next_u64(), INCREMENT);
        assert_eq!(
            rng.next_u64(),
            INCREMENT.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT)
        );
    }

    #[test]
    fn same_seed_same_function() {
        let a = Lcg::new(7).random_function(5);
        let b = Lcg::new(7).random_function(5);
        assert_eq!(a, b);
        assert_ne!(a, Lcg::new(8).random_function(5));
    }
}
