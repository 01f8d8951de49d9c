//! Modified Quine-McCluskey with E-sum matching.
//!
//! Two minterm lists in adjacent groups combine when their E-sums are equal
//! and the difference of their least minterms is a power of two (the
//! mismatch positional weight, MPW). Instead of sweeping all pairs, a cube
//! with least minterm `x` only probes cubes in the next group whose least
//! minterm is `x + 2^p`, so a probe that finds nothing costs nothing.

use std::collections::{BTreeSet, HashMap};

use crate::counter::ComparisonCounter;
use crate::cube::Cube;
use crate::error::Result;
use crate::function::BooleanFunction;
use crate::group::GroupTable;

/// Places every care and don't-care minterm in the group of its 1-count,
/// with E-sum 0 and no checkmarks.
pub fn group_minterms(f: &BooleanFunction) -> Result<GroupTable> {
    GroupTable::from_function(f)
}

/// Returns the MPW `b.least - a.least` when the E-sums agree and the
/// difference is a power of two.
pub fn mqm_match(a: Cube, b: Cube) -> Option<u32> {
    if a.esum() != b.esum() {
        return None;
    }
    let mpw = b.least().checked_sub(a.least())?;
    mpw.is_power_of_two().then_some(mpw)
}

/// The combined minterm list: least minterm of `a`, E-sum grown by `mpw`.
pub fn combine(a: Cube, b: Cube, mpw: u32) -> Cube {
    debug_assert_eq!(mqm_match(a, b), Some(mpw));
    // Both least minterms are 0 on every eliminated position, so a power of
    // two difference can never land inside the mask.
    debug_assert_eq!(mpw & a.esum(), 0);
    Cube::new(a.least(), a.esum() + mpw)
}

/// One combining pass. Checkmarks are set on `table`; the returned table
/// holds the combined cubes, deduplicated.
pub fn mqm_pass(table: &mut GroupTable, counter: &mut ComparisonCounter) -> GroupTable {
    mqm_pass_with_tally(table, counter).0
}

/// [`mqm_pass`], also returning how many comparisons each source cube made,
/// indexed like `table`'s groups.
pub fn mqm_pass_with_tally(
    table: &mut GroupTable,
    counter: &mut ComparisonCounter,
) -> (GroupTable, Vec<Vec<u64>>) {
    let n = table.n();
    let groups = table.group_count();
    counter.begin_pass(groups - 1);

    let index: Vec<HashMap<u32, Vec<usize>>> = (0..groups)
        .map(|g| {
            let mut by_least: HashMap<u32, Vec<usize>> = HashMap::new();
            for (j, c) in table.group(g).iter().enumerate() {
                by_least.entry(c.least()).or_default().push(j);
            }
            by_least
        })
        .collect();

    let mut next = GroupTable::empty(n);
    let mut tally: Vec<Vec<u64>> = (0..groups).map(|g| vec![0; table.group(g).len()]).collect();
    let mut marks = Vec::new();

    for g in 0..groups - 1 {
        let upper = table.group(g + 1);
        for (i, &a) in table.group(g).iter().enumerate() {
            for p in 0..n {
                let target = a.least() + (1 << p);
                let Some(hits) = index[g + 1].get(&target) else {
                    continue;
                };
                for &j in hits {
                    counter.record(g);
                    tally[g][i] += 1;
                    let b = upper[j];
                    if let Some(mpw) = mqm_match(a, b) {
                        let merged = combine(a, b, mpw);
                        debug_assert_eq!(merged.least().count_ones() as usize, g);
                        next.push(merged);
                        marks.push((g, i));
                        marks.push((g + 1, j));
                    }
                }
            }
        }
    }

    for (g, i) in marks {
        table.check(g, i);
    }
    next.dedup();
    (next, tally)
}

/// Full trace of a run: every table produced, in pass order, with final
/// checkmarks.
#[derive(Debug, Clone)]
pub struct MqmRun {
    pub tables: Vec<GroupTable>,
    pub counter: ComparisonCounter,
    pub prime_implicants: BTreeSet<Cube>,
}

impl MqmRun {
    pub fn new(f: &BooleanFunction) -> Result<Self> {
        let mut counter = ComparisonCounter::new();
        let mut table = group_minterms(f)?;
        let mut tables = Vec::new();
        loop {
            let next = mqm_pass(&mut table, &mut counter);
            tables.push(table);
            if next.is_empty() {
                break;
            }
            table = next;
        }
        let prime_implicants = tables.iter().flat_map(GroupTable::unchecked).collect();
        Ok(MqmRun {
            tables,
            counter,
            prime_implicants,
        })
    }
}

/// Every minterm list that was never checkmarked, across all passes.
pub fn mqm_prime_implicants(
    f: &BooleanFunction,
    counter: &mut ComparisonCounter,
) -> Result<BTreeSet<Cube>> {
    let mut table = group_minterms(f)?;
    let mut primes = BTreeSet::new();
    loop {
        let next = mqm_pass(&mut table, counter);
        primes.extend(table.unchecked());
        if next.is_empty() {
            return Ok(primes);
        }
        table = next;
    }
}
