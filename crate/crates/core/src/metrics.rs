//! Worst-case comparison formulas, the brute-force prime implicant oracle,
//! the worst-case benchmark, and a cross-check of all generators.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::counter::ComparisonCounter;
use crate::cover::{minimize, Method};
use crate::cube::Cube;
use crate::error::{Error, Result};
use crate::function::BooleanFunction;
use crate::mqm::mqm_prime_implicants;
use crate::qm::qm_prime_implicants;
use crate::MAX_VARIABLES;

/// Largest `n` the 3^n oracle and the measured benchmark accept.
pub const MAX_ORACLE_VARIABLES: u32 = 12;

fn check_range(n: u32, max: u32) -> Result<()> {
    if (1..=max).contains(&n) {
        Ok(())
    } else {
        Err(Error::Range(format!("n={n} is outside 1..={max}")))
    }
}

/// `C(n, k)` by the multiplicative form; exact for `n <= 62`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    // Each partial product is itself a binomial coefficient, so the
    // division is exact.
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// All-pairs first-pass comparisons on the all-minterms function:
/// `sum_{i<n} C(n,i) * C(n,i+1)`.
pub fn worst_case_qm_comparisons(n: u32) -> Result<u64> {
    check_range(n, MAX_VARIABLES)?;
    let n = u64::from(n);
    Ok((0..n).map(|i| binomial(n, i) * binomial(n, i + 1)).sum())
}

/// `sum_{i<n} C(n,i) * (n-i)`: each minterm in group `i` finds `n - i`
/// partners when probing upward.
pub fn mqm_comparisons_by_sum(n: u32) -> Result<u64> {
    check_range(n, MAX_VARIABLES)?;
    let n = u64::from(n);
    Ok((0..n).map(|i| binomial(n, i) * (n - i)).sum())
}

/// Probing first-pass comparisons on the all-minterms function,
/// `n * 2^(n-1)`.
pub fn worst_case_mqm_comparisons(n: u32) -> Result<u64> {
    let by_sum = mqm_comparisons_by_sum(n)?;
    let closed = u64::from(n) << (n - 1);
    assert_eq!(by_sum, closed, "sum and closed form disagree at n={n}");
    Ok(closed)
}

/// Every maximal cube inside care ∪ don't-care, found by enumerating all
/// 3^n cubes. Shares nothing with the combining generators.
pub fn brute_force_prime_implicants(f: &BooleanFunction) -> Result<BTreeSet<Cube>> {
    check_range(f.n(), MAX_ORACLE_VARIABLES)?;
    let n = f.n();
    let full = (1u32 << n) - 1;
    let on: Vec<bool> = (0..=full).map(|m| !f.is_off(m)).collect();

    let mut implicants = HashSet::new();
    for esum in 0..=full {
        let free = full & !esum;
        // Every assignment of the fixed positions.
        let mut least = 0u32;
        loop {
            let inside = (0..=esum)
                .filter(|s| s & !esum == 0)
                .all(|s| on[(least | s) as usize]);
            if inside {
                implicants.insert(Cube::new(least, esum));
            }
            if least == free {
                break;
            }
            least = (least | !free).wrapping_add(1) & free;
        }
    }

    // A cube strictly inside an implicant is inside one that frees a single
    // extra position, and that cube is an implicant too.
    Ok(implicants
        .iter()
        .copied()
        .filter(|c| {
            (0..n).map(|b| 1u32 << b).all(|w| {
                c.esum() & w != 0 || !implicants.contains(&Cube::new(c.least() & !w, c.esum() | w))
            })
        })
        .collect())
}

/// One benchmark row on the all-minterms function of `n` variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchRow {
    pub n: u32,
    pub qm_formula: u64,
    pub mqm_formula: u64,
    pub qm_measured: u64,
    pub mqm_measured: u64,
}

impl BenchRow {
    pub fn ratio(&self) -> f64 {
        self.qm_formula as f64 / self.mqm_formula as f64
    }

    pub fn agrees(&self) -> bool {
        self.qm_formula == self.qm_measured && self.mqm_formula == self.mqm_measured
    }
}

impl fmt::Display for BenchRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {} {} {:.2}",
            self.n,
            self.qm_formula,
            self.mqm_formula,
            self.qm_measured,
            self.mqm_measured,
            self.ratio()
        )
    }
}

/// Runs both generators on the all-minterms function and records measured
/// first-pass counts next to the closed forms.
pub fn bench_row(n: u32) -> Result<BenchRow> {
    check_range(n, MAX_ORACLE_VARIABLES)?;
    let f = BooleanFunction::tautology(n)?;
    let whole = BTreeSet::from([Cube::new(0, (1 << n) - 1)]);

    let mut qm = ComparisonCounter::new();
    assert_eq!(qm_prime_implicants(&f, &mut qm)?, whole);
    let mut mqm = ComparisonCounter::new();
    assert_eq!(mqm_prime_implicants(&f, &mut mqm)?, whole);

    Ok(BenchRow {
        n,
        qm_formula: worst_case_qm_comparisons(n)?,
        mqm_formula: worst_case_mqm_comparisons(n)?,
        qm_measured: qm.first_pass(),
        mqm_measured: mqm.first_pass(),
    })
}

pub fn bench_worst_case(n_min: u32, n_max: u32) -> Result<Vec<BenchRow>> {
    check_range(n_min, MAX_ORACLE_VARIABLES)?;
    check_range(n_max, MAX_ORACLE_VARIABLES)?;
    if n_min > n_max {
        return Err(Error::Range(format!("n-min {n_min} exceeds n-max {n_max}")));
    }
    (n_min..=n_max).map(bench_row).collect()
}

/// A disagreement found by [`cross_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Discrepancy {
    PrimeImplicants {
        qm: BTreeSet<Cube>,
        mqm: BTreeSet<Cube>,
        oracle: BTreeSet<Cube>,
    },
    MethodsDisagree,
    Uncovered(u32),
    CoversOff(u32),
    Redundant(Cube),
    Failed(Error),
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |s: &BTreeSet<Cube>| s.iter().map(Cube::to_string).collect::<Vec<_>>().join(" ");
        match self {
            Discrepancy::PrimeImplicants { qm, mqm, oracle } => write!(
                f,
                "prime implicants differ: qm [{}] mqm [{}] oracle [{}]",
                list(qm),
                list(mqm),
                list(oracle)
            ),
            Discrepancy::MethodsDisagree => write!(f, "qm and mqm selected different covers"),
            Discrepancy::Uncovered(m) => write!(f, "care minterm {m} is not covered"),
            Discrepancy::CoversOff(m) => write!(f, "cover includes off minterm {m}"),
            Discrepancy::Redundant(c) => write!(f, "cube {c} is redundant in the cover"),
            Discrepancy::Failed(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for Discrepancy {
    fn from(e: Error) -> Self {
        Discrepancy::Failed(e)
    }
}

/// Checks QM, MQM and the oracle agree on the prime implicants, and that
/// the selected cover is correct and irredundant.
pub fn cross_check(f: &BooleanFunction) -> std::result::Result<(), Discrepancy> {
    if f.on_and_dc().is_empty() {
        let qm = qm_prime_implicants(f, &mut ComparisonCounter::new());
        let mqm = mqm_prime_implicants(f, &mut ComparisonCounter::new());
        return match (qm, mqm) {
            (Err(Error::EmptyFunction), Err(Error::EmptyFunction)) => Ok(()),
            _ => Err(Discrepancy::MethodsDisagree),
        };
    }
    let qm = qm_prime_implicants(f, &mut ComparisonCounter::new())?;
    let mqm = mqm_prime_implicants(f, &mut ComparisonCounter::new())?;
    let oracle = brute_force_prime_implicants(f)?;
    if qm != mqm || mqm != oracle {
        return Err(Discrepancy::PrimeImplicants { qm, mqm, oracle });
    }
    if f.minterms().is_empty() {
        return Ok(());
    }

    let by_mqm = minimize(f, Method::Mqm)?;
    let by_qm = minimize(f, Method::Qm)?;
    if by_mqm.terms != by_qm.terms {
        return Err(Discrepancy::MethodsDisagree);
    }
    for m in 0..1u32 << f.n() {
        let value = by_mqm.terms.iter().any(|t| t.evaluate(m));
        if f.is_care(m) && !value {
            return Err(Discrepancy::Uncovered(m));
        }
        if f.is_off(m) && value {
            return Err(Discrepancy::CoversOff(m));
        }
    }
    for (i, &c) in by_mqm.cover.iter().enumerate() {
        let still_covered = f.minterms().iter().all(|&m| {
            by_mqm
                .cover
                .iter()
                .enumerate()
                .any(|(j, d)| j != i && d.contains(m))
        });
        if still_covered {
            return Err(Discrepancy::Redundant(c));
        }
    }
    Ok(())
}
