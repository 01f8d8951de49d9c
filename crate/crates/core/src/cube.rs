//! Compressed minterm lists.
//!
//! A [`Cube`] is the pair (least minterm, E-sum). The E-sum is the sum of the
//! positional weights of the eliminated variables, and since weights are
//! distinct powers of two it doubles as the bitmask of eliminated positions.
//! The explicit minterm list is always derivable and never stored.

use std::fmt;

use crate::error::{Error, Result};
use crate::term::{Literal, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cube {
    least: u32,
    esum: u32,
}

impl Cube {
    /// Builds a cube without checking it against a variable count.
    pub const fn new(least: u32, esum: u32) -> Self {
        Cube { least, esum }
    }

    /// A single minterm with nothing eliminated.
    pub const fn minterm(m: u32) -> Self {
        Cube { least: m, esum: 0 }
    }

    pub const fn least(&self) -> u32 {
        self.least
    }

    pub const fn esum(&self) -> u32 {
        self.esum
    }

    /// Largest member, `least + esum`.
    pub const fn largest(&self) -> u32 {
        self.least + self.esum
    }

    /// Number of eliminated variables.
    pub const fn eliminated(&self) -> u32 {
        self.esum.count_ones()
    }

    pub const fn member_count(&self) -> u64 {
        1u64 << self.esum.count_ones()
    }

    /// Literals in the product term for `n` variables.
    pub const fn literal_count(&self, n: u32) -> u32 {
        n - self.esum.count_ones()
    }

    pub fn validate(&self, n: u32) -> Result<()> {
        let invalid = Error::InvalidCube {
            least: self.least,
            esum: self.esum,
            n,
        };
        if n == 0 || n > crate::MAX_VARIABLES || self.least & self.esum != 0 {
            return Err(invalid);
        }
        // least and esum are disjoint, so least + esum == least | esum.
        if (self.least | self.esum) >> n != 0 {
            return Err(invalid);
        }
        Ok(())
    }

    pub fn contains(&self, m: u32) -> bool {
        m & !self.esum == self.least
    }

    /// True if every member of `self` is a member of `other`.
    pub fn is_subset_of(&self, other: &Cube) -> bool {
        self.esum & !other.esum == 0 && other.contains(self.least)
    }

    /// Members in ascending order without validation.
    pub(crate) fn iter_members(&self) -> impl Iterator<Item = u32> {
        let Cube { least, esum } = *self;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let sub = next?;
            // Ascending submask enumeration of `esum`.
            next = if sub == esum {
                None
            } else {
                Some((sub | !esum).wrapping_add(1) & esum)
            };
            Some(least | sub)
        })
    }

    /// The explicit minterm list, ascending.
    pub fn members(&self, n: u32) -> Result<Vec<u32>> {
        self.validate(n)?;
        Ok(self.iter_members().collect())
    }

    /// The product term: eliminated positions are absent, the rest take
    /// their polarity from the least minterm. The first variable carries
    /// weight `2^(n-1)`.
    pub fn to_term(&self, n: u32) -> Result<Term> {
        self.validate(n)?;
        let literals = (0..n)
            .rev()
            .map(|bit| {
                let weight = 1u32 << bit;
                if self.esum & weight != 0 {
                    Literal::Absent
                } else if self.least & weight != 0 {
                    Literal::Pos
                } else {
                    Literal::Neg
                }
            })
            .collect();
        Ok(Term::new(literals))
    }
}

/// Formats as `(least,esum)`.
impl fmt::Display for Cube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.least, self.esum)
    }
}
