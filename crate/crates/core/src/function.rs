use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::MAX_VARIABLES;

/// A single-output Boolean function given by its care and don't-care minterms.
///
/// Minterm `m` is the assignment whose binary digits are the variable values,
/// the first variable being the most significant bit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanFunction {
    n: u32,
    minterms: BTreeSet<u32>,
    dont_cares: BTreeSet<u32>,
}

pub(crate) fn check_variable_count(n: u32) -> Result<()> {
    if (1..=MAX_VARIABLES).contains(&n) {
        Ok(())
    } else {
        Err(Error::VariableCount(n))
    }
}

impl BooleanFunction {
    pub fn new(
        n: u32,
        minterms: impl IntoIterator<Item = u32>,
        dont_cares: impl IntoIterator<Item = u32>,
    ) -> Result<Self> {
        check_variable_count(n)?;
        let limit = 1u32 << n;
        let minterms: BTreeSet<u32> = minterms.into_iter().collect();
        let dont_cares: BTreeSet<u32> = dont_cares.into_iter().collect();
        if let Some(&minterm) = minterms.iter().chain(&dont_cares).find(|&&m| m >= limit) {
            return Err(Error::MintermOutOfRange { minterm, n });
        }
        if let Some(&m) = minterms.intersection(&dont_cares).next() {
            return Err(Error::Overlap(m));
        }
        Ok(BooleanFunction {
            n,
            minterms,
            dont_cares,
        })
    }

    /// The function that is 1 on every input.
    pub fn tautology(n: u32) -> Result<Self> {
        check_variable_count(n)?;
        Self::new(n, 0..1u32 << n, [])
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn minterms(&self) -> &BTreeSet<u32> {
        &self.minterms
    }

    pub fn dont_cares(&self) -> &BTreeSet<u32> {
        &self.dont_cares
    }

    /// Care and don't-care minterms together, ascending.
    pub fn on_and_dc(&self) -> BTreeSet<u32> {
        self.minterms.union(&self.dont_cares).copied().collect()
    }

    pub fn is_care(&self, m: u32) -> bool {
        self.minterms.contains(&m)
    }

    pub fn is_dont_care(&self, m: u32) -> bool {
        self.dont_cares.contains(&m)
    }

    pub fn is_off(&self, m: u32) -> bool {
        !self.is_care(m) && !self.is_dont_care(m)
    }
}

/// Renders the list form accepted by the parser, e.g. `n=4 m(4,5) d(0)`.
impl fmt::Display for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} m({})", self.n, join(&self.minterms))?;
        if !self.dont_cares.is_empty() {
            write!(f, " d({})", join(&self.dont_cares))?;
        }
        Ok(())
    }
}

fn join(set: &BTreeSet<u32>) -> String {
    set.iter()
        .map(|m| m.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
