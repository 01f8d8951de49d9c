use crate::cube::Cube;
use crate::error::{Error, Result};
use crate::function::BooleanFunction;

/// Cubes bucketed by the number of 1-bits in their least minterm, with a
/// checkmark per cube recording whether it was combined into a larger one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    n: u32,
    groups: Vec<Vec<Cube>>,
    checked: Vec<Vec<bool>>,
}

impl GroupTable {
    /// An empty table with groups `0..=n`.
    pub fn empty(n: u32) -> Self {
        let len = n as usize + 1;
        GroupTable {
            n,
            groups: vec![Vec::new(); len],
            checked: vec![Vec::new(); len],
        }
    }

    /// Every care and don't-care minterm as an unchecked cube with E-sum 0.
    pub fn from_function(f: &BooleanFunction) -> Result<Self> {
        let on = f.on_and_dc();
        if on.is_empty() {
            return Err(Error::EmptyFunction);
        }
        let mut table = GroupTable::empty(f.n());
        for m in on {
            table.push(Cube::minterm(m));
        }
        Ok(table)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Appends `cube` to group `popcount(least)`, unchecked. Duplicates are
    /// kept; see [`GroupTable::dedup`].
    pub fn push(&mut self, cube: Cube) {
        let g = cube.least().count_ones() as usize;
        self.groups[g].push(cube);
        self.checked[g].push(false);
    }

    pub fn group_count(&self) -> usize {
        self.groups.len()
    }

    pub fn group(&self, g: usize) -> &[Cube] {
        &self.groups[g]
    }

    pub fn is_checked(&self, g: usize, i: usize) -> bool {
        self.checked[g][i]
    }

    pub fn check(&mut self, g: usize, i: usize) {
        self.checked[g][i] = true;
    }

    pub fn is_empty(&self) -> bool {
        self.groups.iter().all(Vec::is_empty)
    }

    pub fn len(&self) -> usize {
        self.groups.iter().map(Vec::len).sum()
    }

    /// All cubes with their group index and checkmark, group by group.
    pub fn entries(&self) -> impl Iterator<Item = (usize, Cube, bool)> + '_ {
        self.groups.iter().enumerate().flat_map(move |(g, cubes)| {
            cubes
                .iter()
                .zip(&self.checked[g])
                .map(move |(&c, &checked)| (g, c, checked))
        })
    }

    pub fn unchecked(&self) -> impl Iterator<Item = Cube> + '_ {
        self.entries()
            .filter(|&(_, _, checked)| !checked)
            .map(|(_, c, _)| c)
    }

    /// Drops repeated cubes within each group, keeping first occurrences.
    /// A dropped duplicate's checkmark is folded into the survivor.
    pub fn dedup(&mut self) {
        for g in 0..self.groups.len() {
            let mut seen = std::collections::HashMap::new();
            let mut cubes = Vec::with_capacity(self.groups[g].len());
            let mut checked = Vec::with_capacity(self.groups[g].len());
            for (&c, &mark) in self.groups[g].iter().zip(&self.checked[g]) {
                match seen.get(&c) {
                    Some(&i) => checked[i] |= mark,
                    None => {
                        seen.insert(c, cubes.len());
                        cubes.push(c);
                        checked.push(mark);
                    }
                }
            }
            self.groups[g] = cubes;
            self.checked[g] = checked;
        }
    }
}

/// Keeps the first occurrence of each cube. Two minterm lists are identical
/// when least minterm, largest minterm and E-sum agree; the largest member
/// is `least + esum`, so comparing `(least, esum)` suffices.
pub fn dedup(group: &[Cube]) -> Vec<Cube> {
    let mut seen = std::collections::HashSet::with_capacity(group.len());
    group.iter().copied().filter(|c| seen.insert(*c)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_1() -> BooleanFunction {
        BooleanFunction::new(4, [4, 5, 6, 8, 9, 10, 13], [0, 7, 15]).unwrap()
    }

    #[test]
    fn groups_example_by_popcount() {
        let table = GroupTable::from_function(&example_1()).unwrap();
        let leasts: Vec<Vec<u32>> = (0..table.group_count())
            .map(|g| table.group(g).iter().map(Cube::least).collect())
            .collect();
        assert_eq!(
            leasts,
            vec![
                vec![0],
                vec![4, 8],
                vec![5, 6, 9, 10],
                vec![7, 13],
                vec![15]
            ]
        );
        assert!(table
            .entries()
            .all(|(_, c, checked)| c.esum() == 0 && !checked));
    }

    #[test]
    fn single_minterm_lands_in_its_popcount_group() {
        let f = BooleanFunction::new(2, [3], []).unwrap();
        let table = GroupTable::from_function(&f).unwrap();
        assert_eq!(table.group(2), &[Cube::minterm(3)]);
        assert!(table.group(0).is_empty() && table.group(1).is_empty());
    }

    #[test]
    fn full_function_groups_are_binomial() {
        let table = GroupTable::from_function(&BooleanFunction::tautology(6).unwrap()).unwrap();
        let sizes: Vec<usize> = (0..=6).map(|g| table.group(g).len()).collect();
        assert_eq!(sizes, vec![1, 6, 15, 20, 15, 6, 1]);
    }

    #[test]
    fn empty_function_is_rejected() {
        let f = BooleanFunction::new(3, [], []).unwrap();
        assert_eq!(GroupTable::from_function(&f), Err(Error::EmptyFunction));
    }

    #[test]
    fn dedup_keeps_first_occurrence() {
        let quad = Cube::new(4, 3);
        assert_eq!(dedup(&[quad, quad]), vec![quad]);
        assert_eq!(dedup(&[]), Vec::<Cube>::new());
        assert_eq!(
            dedup(&[Cube::new(5, 10), Cube::new(5, 10), Cube::new(9, 4)]),
            vec![Cube::new(5, 10), Cube::new(9, 4)]
        );
    }

    #[test]
    fn dedup_agrees_with_three_field_identity() {
        // Pairwise test on (least, largest, esum), as stated for minterm lists.
        let cubes = [Cube::new(5, 10), Cube::new(5, 10), Cube::new(9, 4)];
        let identical = |a: &Cube, b: &Cube| {
            let la = *a.members(4).unwrap().last().unwrap();
            let lb = *b.members(4).unwrap().last().unwrap();
            a.least() == b.least() && la == lb && a.esum() == b.esum()
        };
        let mut brute: Vec<Cube> = Vec::new();
        for c in cubes {
            if !brute.iter().any(|k| identical(k, &c)) {
                brute.push(c);
            }
        }
        assert_eq!(dedup(&cubes), brute);
    }

    #[test]
    fn table_dedup_merges_checkmarks() {
        let mut table = GroupTable::empty(4);
        table.push(Cube::new(4, 3));
        table.push(Cube::new(4, 3));
        table.check(1, 1);
        table.dedup();
        assert_eq!(table.group(1), &[Cube::new(4, 3)]);
        assert!(table.is_checked(1, 0));
    }
}
