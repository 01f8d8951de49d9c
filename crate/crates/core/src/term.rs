use std::fmt;

use crate::cube::Cube;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Literal {
    Pos,
    Neg,
    Absent,
}

/// A product term: one literal per variable, first variable first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    literals: Vec<Literal>,
}

impl Term {
    pub fn new(literals: Vec<Literal>) -> Self {
        Term { literals }
    }

    pub fn literals(&self) -> &[Literal] {
        &self.literals
    }

    pub fn n(&self) -> u32 {
        self.literals.len() as u32
    }

    pub fn is_tautology(&self) -> bool {
        self.literals.iter().all(|&l| l == Literal::Absent)
    }

    pub fn literal_count(&self) -> usize {
        self.literals
            .iter()
            .filter(|&&l| l != Literal::Absent)
            .count()
    }

    /// Evaluates the product on the assignment encoded by minterm `m`.
    pub fn evaluate(&self, m: u32) -> bool {
        let n = self.literals.len();
        self.literals.iter().enumerate().all(|(i, lit)| {
            let value = (m >> (n - 1 - i)) & 1 == 1;
            match lit {
                Literal::Pos => value,
                Literal::Neg => !value,
                Literal::Absent => true,
            }
        })
    }

    /// The cube covering exactly the minterms where this term is true.
    pub fn to_cube(&self) -> Cube {
        let n = self.literals.len();
        let (mut least, mut esum) = (0u32, 0u32);
        for (i, lit) in self.literals.iter().enumerate() {
            let weight = 1u32 << (n - 1 - i);
            match lit {
                Literal::Pos => least |= weight,
                Literal::Neg => {}
                Literal::Absent => esum |= weight,
            }
        }
        Cube::new(least, esum)
    }

    /// Renders with the given variable names; complement is an apostrophe
    /// and the empty product is `1`.
    ///
    /// Panics if `alphabet` is shorter than the term.
    pub fn to_text(&self, alphabet: &[char]) -> String {
        assert!(alphabet.len() >= self.literals.len());
        if self.is_tautology() {
            return "1".to_string();
        }
        let mut out = String::new();
        for (lit, &name) in self.literals.iter().zip(alphabet) {
            match lit {
                Literal::Pos => out.push(name),
                Literal::Neg => {
                    out.push(name);
                    out.push('\'');
                }
                Literal::Absent => {}
            }
        }
        out
    }
}

/// Joins terms into ` + `-separated text.
pub fn sop_to_text(terms: &[Term], alphabet: &[char]) -> String {
    terms
        .iter()
        .map(|t| t.to_text(alphabet))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Renders with the default alphabet `A`, `B`, `C`, ...
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alphabet = crate::default_alphabet(self.n());
        f.write_str(&self.to_text(&alphabet))
    }
}
