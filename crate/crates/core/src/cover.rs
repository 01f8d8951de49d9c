//! Prime implicant chart and exact cover selection.
//!
//! Selection repeats essential-row extraction, row dominance and column
//! dominance until nothing changes, then resolves the cyclic remainder with
//! Petrick's method. Covers are ranked by cube count, then literal count,
//! then the lexicographic order of their sorted `(least, esum)` sequence.
//! Every reduction step preserves at least one cover that is optimal under
//! that ranking, so the result is the unique best cover.

use std::collections::BTreeSet;

use crate::counter::ComparisonCounter;
use crate::cube::Cube;
use crate::error::{Error, Result};
use crate::function::BooleanFunction;
use crate::mqm::mqm_prime_implicants;
use crate::qm::qm_prime_implicants;
use crate::term::{sop_to_text, Term};

/// Rows are prime implicants, columns are care minterms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PIChart {
    n: u32,
    rows: Vec<Cube>,
    cols: Vec<u32>,
    covers: Vec<Vec<bool>>,
}

impl PIChart {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn rows(&self) -> &[Cube] {
        &self.rows
    }

    pub fn cols(&self) -> &[u32] {
        &self.cols
    }

    pub fn covers(&self, row: usize, col: usize) -> bool {
        self.covers[row][col]
    }
}

/// Builds the chart over the care minterms of `f`. Don't-cares never become
/// columns, but prime implicants covering only don't-cares still get a row.
pub fn build_chart(pis: impl IntoIterator<Item = Cube>, f: &BooleanFunction) -> Result<PIChart> {
    let rows: Vec<Cube> = pis.into_iter().collect();
    let cols: Vec<u32> = f.minterms().iter().copied().collect();
    let covers: Vec<Vec<bool>> = rows
        .iter()
        .map(|r| cols.iter().map(|&m| r.contains(m)).collect())
        .collect();
    for (c, &m) in cols.iter().enumerate() {
        if !covers.iter().any(|row| row[c]) {
            return Err(Error::UncoveredMinterm(m));
        }
    }
    Ok(PIChart {
        n: f.n(),
        rows,
        cols,
        covers,
    })
}

/// Sort key ranking covers: fewest cubes, fewest literals, then smallest
/// sorted cube sequence.
pub fn cover_cost(cover: &[Cube], n: u32) -> (usize, u32, Vec<Cube>) {
    let mut sorted = cover.to_vec();
    sorted.sort_unstable();
    let literals = cover.iter().map(|c| c.literal_count(n)).sum();
    (cover.len(), literals, sorted)
}

/// Presentation order: more literals first, then by least minterm.
pub fn presentation_order(cover: &mut [Cube]) {
    cover.sort_unstable_by_key(|c| (c.eliminated(), c.least(), c.esum()));
}

/// Picks a minimum-cost irredundant cover, in presentation order.
pub fn select_cover(chart: &PIChart) -> Vec<Cube> {
    let n = chart.n;
    let mut rows: BTreeSet<usize> = (0..chart.rows.len()).collect();
    let mut cols: BTreeSet<usize> = (0..chart.cols.len()).collect();
    let mut chosen: Vec<usize> = Vec::new();

    let row_cols = |r: usize, cols: &BTreeSet<usize>| -> BTreeSet<usize> {
        cols.iter()
            .copied()
            .filter(|&c| chart.covers[r][c])
            .collect()
    };
    let col_rows = |c: usize, rows: &BTreeSet<usize>| -> BTreeSet<usize> {
        rows.iter()
            .copied()
            .filter(|&r| chart.covers[r][c])
            .collect()
    };
    // Strict preference between two rows of equal or larger coverage.
    let rank = |r: usize| (chart.rows[r].literal_count(n), chart.rows[r]);

    loop {
        let mut changed = false;

        // Essential rows.
        while let Some(r) = cols.iter().find_map(|&c| {
            let coverers = col_rows(c, &rows);
            (coverers.len() == 1).then(|| *coverers.first().unwrap())
        }) {
            for c in row_cols(r, &cols) {
                cols.remove(&c);
            }
            rows.remove(&r);
            chosen.push(r);
            changed = true;
        }

        // Rows covering nothing, or dominated by a row that is no worse.
        let coverage: Vec<(usize, BTreeSet<usize>)> =
            rows.iter().map(|&r| (r, row_cols(r, &cols))).collect();
        for (r, rc) in &coverage {
            let dominated = rc.is_empty()
                || coverage.iter().any(|(s, sc)| {
                    s != r && rows.contains(s) && rc.is_subset(sc) && rank(*s) < rank(*r)
                });
            if dominated {
                rows.remove(r);
                changed = true;
            }
        }

        // A column whose coverers include all coverers of another column is
        // implied by it.
        let coverers: Vec<(usize, BTreeSet<usize>)> =
            cols.iter().map(|&c| (c, col_rows(c, &rows))).collect();
        for (c, cr) in &coverers {
            let implied = coverers.iter().any(|(d, dr)| {
                d != c && cols.contains(d) && dr.is_subset(cr) && (dr != cr || d < c)
            });
            if implied {
                cols.remove(c);
                changed = true;
            }
        }

        if !changed {
            break;
        }
    }

    let essential: Vec<Cube> = chosen.iter().map(|&r| chart.rows[r]).collect();
    let mut best = if cols.is_empty() {
        essential
    } else {
        let candidates: Vec<usize> = rows.iter().copied().collect();
        let sets: Vec<Vec<usize>> = cols
            .iter()
            .map(|&c| {
                candidates
                    .iter()
                    .enumerate()
                    .filter(|&(_, &r)| chart.covers[r][c])
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        let literals: Vec<u32> = candidates
            .iter()
            .map(|&r| chart.rows[r].literal_count(n))
            .collect();
        petrick(&sets, &literals, greedy_bound(&sets, &literals))
            .into_iter()
            .map(|product| {
                let mut cover = essential.clone();
                cover.extend(product.iter().map(|&i| chart.rows[candidates[i]]));
                cover
            })
            .min_by_key(|cover| cover_cost(cover, n))
            .expect("a feasible chart has at least one cover")
    };
    presentation_order(&mut best);
    best
}

/// Fixed-width bitset over candidate rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct RowSet(Vec<u64>);

impl RowSet {
    fn empty(len: usize) -> Self {
        RowSet(vec![0; len.div_ceil(64)])
    }

    fn with(&self, i: usize) -> Self {
        let mut out = self.clone();
        out.0[i / 64] |= 1 << (i % 64);
        out
    }

    fn has(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn len(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    fn is_subset(&self, other: &RowSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn indices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (w, &word) in self.0.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                out.push(w * 64 + bits.trailing_zeros() as usize);
                bits &= bits - 1;
            }
        }
        out
    }
}

/// Cost of a greedy cover of the product of sums: repeatedly take the row
/// covering the most open columns, fewer literals first on ties.
fn greedy_bound(sets: &[Vec<usize>], literals: &[u32]) -> (usize, u32) {
    let mut open: Vec<&Vec<usize>> = sets.iter().collect();
    let (mut count, mut total) = (0, 0);
    while !open.is_empty() {
        let row = (0..literals.len())
            .max_by_key(|&r| {
                let hits = open.iter().filter(|s| s.contains(&r)).count();
                (hits, std::cmp::Reverse(literals[r]), std::cmp::Reverse(r))
            })
            .expect("open columns have candidate rows");
        open.retain(|s| !s.contains(&row));
        count += 1;
        total += literals[row];
    }
    (count, total)
}

/// Multiplies out the product of sums `sets` (each a list of row indices
/// that can cover one column) and returns the minimal products, i.e. the
/// irredundant choices of rows. Products whose (row count, literal count)
/// already exceeds `bound` are dropped as they form; adding rows never
/// lowers that cost, so every product within the bound survives.
fn petrick(sets: &[Vec<usize>], literals: &[u32], bound: (usize, u32)) -> Vec<Vec<usize>> {
    let rows = literals.len();
    let mut order: Vec<&Vec<usize>> = sets.iter().collect();
    order.sort_by_key(|s| s.len());

    let within = |p: &RowSet| {
        let lits: u32 = p.indices().iter().map(|&i| literals[i]).sum();
        (p.len() as usize, lits) <= bound
    };
    let mut products = vec![RowSet::empty(rows)];
    for sum in order {
        let mut expanded = Vec::with_capacity(products.len() * sum.len());
        for p in &products {
            if sum.iter().any(|&r| p.has(r)) {
                expanded.push(p.clone());
            } else {
                expanded.extend(sum.iter().map(|&r| p.with(r)).filter(|q| within(q)));
            }
        }
        products = absorb(expanded);
    }
    products.iter().map(RowSet::indices).collect()
}

/// Removes duplicates and any product that contains another (X + XY = X).
fn absorb(mut products: Vec<RowSet>) -> Vec<RowSet> {
    products.sort_unstable_by_key(|p| (p.len(), p.clone()));
    products.dedup();
    let mut kept: Vec<RowSet> = Vec::with_capacity(products.len());
    for p in products {
        if !kept.iter().any(|k| k.is_subset(&p)) {
            kept.push(p);
        }
    }
    kept
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Qm,
    Mqm,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Qm => "qm",
            Method::Mqm => "mqm",
        }
    }
}

/// Result of an end-to-end minimization.
#[derive(Debug, Clone)]
pub struct Minimization {
    pub n: u32,
    pub method: Method,
    pub prime_implicants: BTreeSet<Cube>,
    pub cover: Vec<Cube>,
    pub terms: Vec<Term>,
    pub counter: ComparisonCounter,
}

impl Minimization {
    pub fn literal_count(&self) -> u32 {
        self.cover.iter().map(|c| c.literal_count(self.n)).sum()
    }

    pub fn to_text(&self, alphabet: &[char]) -> String {
        sop_to_text(&self.terms, alphabet)
    }
}

/// Prime implicants, chart, cover and terms for `f`. The constant-0
/// function has no SOP form and is rejected.
pub fn minimize(f: &BooleanFunction, method: Method) -> Result<Minimization> {
    if f.minterms().is_empty() {
        return Err(Error::EmptyFunction);
    }
    let mut counter = ComparisonCounter::new();
    let prime_implicants = match method {
        Method::Qm => qm_prime_implicants(f, &mut counter)?,
        Method::Mqm => mqm_prime_implicants(f, &mut counter)?,
    };
    let chart = build_chart(prime_implicants.iter().copied(), f)?;
    let cover = select_cover(&chart);
    let terms = cover
        .iter()
        .map(|c| c.to_term(f.n()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Minimization {
        n: f.n(),
        method,
        prime_implicants,
        cover,
        terms,
        counter,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cubes(pairs: &[(u32, u32)]) -> Vec<Cube> {
        pairs.iter().map(|&(l, e)| Cube::new(l, e)).collect()
    }

    fn example_1() -> BooleanFunction {
        BooleanFunction::new(4, [4, 5, 6, 8, 9, 10, 13], [0, 7, 15]).unwrap()
    }

    // Smallest covers by exhaustive subset search, ranked by `cover_cost`.
    fn brute_force_cover(chart: &PIChart) -> Vec<Cube> {
        let k = chart.rows().len();
        (1u64..1 << k)
            .map(|mask| {
                (0..k)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| chart.rows()[i])
                    .collect::<Vec<_>>()
            })
            .filter(|cover| {
                chart
                    .cols()
                    .iter()
                    .all(|&m| cover.iter().any(|c| c.contains(m)))
            })
            .min_by_key(|cover| cover_cost(cover, chart.n()))
            .unwrap()
    }

    #[test]
    fn example_1_chart_and_cover() {
        let pis = cubes(&[(0, 4), (0, 8), (8, 1), (8, 2), (9, 4), (4, 3), (5, 10)]);
        let chart = build_chart(pis, &example_1()).unwrap();
        assert_eq!(chart.rows().len(), 7);
        assert_eq!(chart.cols(), &[4, 5, 6, 8, 9, 10, 13]);
        assert_eq!(select_cover(&chart), cubes(&[(8, 2), (9, 4), (4, 3)]));
    }

    #[test]
    fn single_row_covering_everything() {
        let f = BooleanFunction::new(2, [0, 1, 3], []).unwrap();
        let chart = build_chart(cubes(&[(0, 3), (0, 1)]), &f).unwrap();
        assert_eq!(select_cover(&chart), cubes(&[(0, 3)]));
    }

    #[test]
    fn two_essentials() {
        let f = BooleanFunction::new(2, [0, 1, 2], []).unwrap();
        let chart = build_chart(cubes(&[(0, 1), (0, 2)]), &f).unwrap();
        let cover = select_cover(&chart);
        assert_eq!(cover, cubes(&[(0, 1), (0, 2)]));
        assert_eq!(
            cover_cost(&cover, 2),
            cover_cost(&brute_force_cover(&chart), 2)
        );
    }

    #[test]
    fn single_minterm_chart() {
        let f = BooleanFunction::new(3, [5], []).unwrap();
        let chart = build_chart(cubes(&[(5, 0)]), &f).unwrap();
        assert_eq!((chart.rows().len(), chart.cols().len()), (1, 1));
        assert_eq!(select_cover(&chart), cubes(&[(5, 0)]));
    }

    #[test]
    fn uncovered_minterm_is_reported() {
        let pis = cubes(&[(0, 8), (8, 1), (8, 2), (9, 4), (5, 10)]);
        assert_eq!(
            build_chart(pis, &example_1()),
            Err(Error::UncoveredMinterm(4))
        );
    }

    #[test]
    fn cyclic_chart_goes_through_petrick() {
        // m(0,1,2,5,6,7) over three variables: six two-minterm primes in a
        // ring, no essentials, no dominance.
        let f = BooleanFunction::new(3, [0, 1, 2, 5, 6, 7], []).unwrap();
        let pis = qm_prime_implicants(&f, &mut ComparisonCounter::new()).unwrap();
        assert_eq!(pis.len(), 6);
        let chart = build_chart(pis, &f).unwrap();
        let cover = select_cover(&chart);
        let mut sorted = cover.clone();
        sorted.sort();
        assert_eq!(sorted, cover_cost(&brute_force_cover(&chart), 3).2);
        assert_eq!(cover.len(), 3);
    }

    #[test]
    fn petrick_returns_minimal_products() {
        // (a + b)(a + c) = a + bc
        let products = petrick(&[vec![0, 1], vec![0, 2]], &[2, 2, 2], (2, 4));
        assert_eq!(products, vec![vec![0], vec![1, 2]]);
        // A bound of one row drops the two-row product.
        let products = petrick(&[vec![0, 1], vec![0, 2]], &[2, 2, 2], (1, 2));
        assert_eq!(products, vec![vec![0]]);
    }

    #[test]
    fn minimize_example_1() {
        let result = minimize(&example_1(), Method::Mqm).unwrap();
        assert_eq!(result.to_text(&['A', 'B', 'C', 'D']), "AB'D' + AC'D + A'B");
        assert_eq!(result.literal_count(), 8);
    }

    #[test]
    fn minimize_tautology() {
        for method in [Method::Qm, Method::Mqm] {
            let result = minimize(&BooleanFunction::tautology(2).unwrap(), method).unwrap();
            assert_eq!(result.to_text(&['A', 'B']), "1");
        }
    }

    #[test]
    fn minimize_rejects_constant_zero() {
        let f = BooleanFunction::new(3, [], [1, 2]).unwrap();
        assert_eq!(minimize(&f, Method::Mqm).err(), Some(Error::EmptyFunction));
    }

    #[test]
    fn cover_matches_exhaustive_search_on_small_functions() {
        // Every 3-variable care set with two fixed don't-care choices.
        for dc in [0u32, 0b1000_0001] {
            for care in 1u32..256 {
                if care & dc != 0 {
                    continue;
                }
                let bits = |mask: u32| (0..8).filter(move |i| mask >> i & 1 == 1);
                let f = BooleanFunction::new(3, bits(care), bits(dc)).unwrap();
                let pis = qm_prime_implicants(&f, &mut ComparisonCounter::new()).unwrap();
                let chart = build_chart(pis, &f).unwrap();
                let cover = select_cover(&chart);
                assert_eq!(
                    cover_cost(&cover, 3),
                    cover_cost(&brute_force_cover(&chart), 3),
                    "{f}"
                );
            }
        }
    }
}
