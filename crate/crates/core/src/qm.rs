//! Classic Quine-McCluskey prime implicant generation.
//!
//! Every cube in group `g` is compared with every cube in group `g + 1`;
//! this all-pairs sweep is the baseline the E-sum method is measured
//! against. The combining test here is the textbook one (equal masks,
//! least minterms differing in exactly one bit) and shares no code with
//! [`crate::mqm`].

use std::collections::{BTreeSet, HashSet};

use crate::counter::ComparisonCounter;
use crate::cube::Cube;
use crate::error::{Error, Result};
use crate::function::BooleanFunction;

pub fn qm_prime_implicants(
    f: &BooleanFunction,
    counter: &mut ComparisonCounter,
) -> Result<BTreeSet<Cube>> {
    let on = f.on_and_dc();
    if on.is_empty() {
        return Err(Error::EmptyFunction);
    }
    let n = f.n() as usize;
    let mut groups: Vec<Vec<Cube>> = vec![Vec::new(); n + 1];
    for m in on {
        groups[m.count_ones() as usize].push(Cube::minterm(m));
    }

    let mut primes = BTreeSet::new();
    loop {
        counter.begin_pass(n);
        let mut checked: Vec<Vec<bool>> = groups.iter().map(|g| vec![false; g.len()]).collect();
        let mut next: Vec<Vec<Cube>> = vec![Vec::new(); n + 1];
        let mut seen: HashSet<Cube> = HashSet::new();

        for g in 0..n {
            let (lower, upper) = (&groups[g], &groups[g + 1]);
            for (i, a) in lower.iter().enumerate() {
                for (j, b) in upper.iter().enumerate() {
                    counter.record(g);
                    if a.esum() != b.esum() {
                        continue;
                    }
                    let diff = a.least() ^ b.least();
                    if diff.count_ones() != 1 {
                        continue;
                    }
                    checked[g][i] = true;
                    checked[g + 1][j] = true;
                    let merged = Cube::new(a.least() & !diff, a.esum() | diff);
                    if seen.insert(merged) {
                        next[g].push(merged);
                    }
                }
            }
        }

        for (cubes, marks) in groups.iter().zip(&checked) {
            primes.extend(
                cubes
                    .iter()
                    .zip(marks)
                    .filter(|(_, &m)| !m)
                    .map(|(&c, _)| c),
            );
        }
        if next.iter().all(Vec::is_empty) {
            return Ok(primes);
        }
        groups = next;
    }
}
