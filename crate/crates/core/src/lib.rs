//! Two-level minimization of single-output Boolean functions.
//!
//! Prime implicants come from either classic Quine-McCluskey ([`qm`]) or the
//! E-sum based Modified Quine-McCluskey ([`mqm`]), which pairs a cube with
//! least minterm `x` only against cubes whose least minterm is `x + 2^p`.
//! Both report how many candidate pairings they tested. [`cover`] selects a
//! minimum cover from the prime implicant chart.
//!
//! Minterm indices put the first variable in the most significant bit:
//! with variables `ABCD`, `D` has weight 1 and `A` weight 8.
//!
//! ```
//! use mqm_core::{minimize, parse_function_spec, Method};
//!
//! let f = parse_function_spec("n=4 m(4,5,6,8,9,10,13) d(0,7,15)").unwrap();
//! let result = minimize(&f, Method::Mqm).unwrap();
//! assert_eq!(result.to_text(&['A', 'B', 'C', 'D']), "AB'D' + AC'D + A'B");
//! ```

pub mod counter;
pub mod cover;
pub mod cube;
pub mod error;
pub mod function;
pub mod group;
pub mod metrics;
pub mod mqm;
pub mod parser;
pub mod qm;
pub mod rng;
pub mod term;

pub use counter::ComparisonCounter;
pub use cover::{build_chart, minimize, select_cover, Method, Minimization, PIChart};
pub use cube::Cube;
pub use error::{Error, Result};
pub use function::BooleanFunction;
pub use group::GroupTable;
pub use mqm::{mqm_prime_implicants, MqmRun};
pub use parser::{
    canonicalize, parse_function_spec, parse_sop_expression, Alphabet, ExpansionStats,
    SopExpression,
};
pub use qm::qm_prime_implicants;
pub use term::{Literal, Term};

/// Upper bound on the variable count.
pub const MAX_VARIABLES: u32 = 24;

pub(crate) fn default_alphabet(n: u32) -> Vec<char> {
    (b'A'..=b'Z').take(n as usize).map(char::from).collect()
}
