//! Text front ends: the list form `n=4 m(4,5,6) d(0,7)` and sum-of-products
//! expressions such as `Y = AD + A'BC`, plus expansion of an expression to
//! its canonical minterm set.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::function::{check_variable_count, BooleanFunction};
use crate::term::{sop_to_text, Literal, Term};

/// Ordered single-letter variable names; the first name is the most
/// significant bit of a minterm index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet(Vec<char>);

impl Alphabet {
    pub fn new(names: &str) -> Result<Self> {
        let chars: Vec<char> = names.chars().collect();
        if chars.is_empty() {
            return Err(Error::InvalidAlphabet("no variables".into()));
        }
        if let Some(c) = chars.iter().find(|c| !c.is_ascii_alphabetic()) {
            return Err(Error::InvalidAlphabet(format!("'{c}' is not a letter")));
        }
        for (i, c) in chars.iter().enumerate() {
            if chars[..i].contains(c) {
                return Err(Error::InvalidAlphabet(format!("'{c}' appears twice")));
            }
        }
        check_variable_count(chars.len() as u32)?;
        Ok(Alphabet(chars))
    }

    /// `A`, `B`, `C`, ... for `n` variables.
    pub fn default_for(n: u32) -> Result<Self> {
        check_variable_count(n)?;
        Ok(Alphabet(crate::default_alphabet(n)))
    }

    pub fn chars(&self) -> &[char] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn position(&self, c: char) -> Option<usize> {
        self.0.iter().position(|&x| x == c)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SopExpression {
    alphabet: Alphabet,
    terms: Vec<Term>,
}

impl SopExpression {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn n(&self) -> u32 {
        self.alphabet.len() as u32
    }

    pub fn evaluate(&self, m: u32) -> bool {
        self.terms.iter().any(|t| t.evaluate(m))
    }
}

impl fmt::Display for SopExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&sop_to_text(&self.terms, self.alphabet.chars()))
    }
}

/// How much canonical expansion grew the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpansionStats {
    pub input_term_count: usize,
    pub canonical_minterm_count: usize,
    /// `canonical_minterm_count - input_term_count`; negative when
    /// overlapping terms merge.
    pub added: i64,
}

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            chars: text.char_indices().collect(),
            pos: 0,
            text,
        }
    }

    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or(self.text.len(), |&(i, _)| i)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn skip_ws_then_peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        let start = self.offset();
        for c in token.chars() {
            if !self.eat(c) {
                return Err(Error::parse(start, format!("expected '{token}'")));
            }
        }
        Ok(())
    }

    fn int(&mut self) -> Result<u32> {
        let start = self.offset();
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.pos += 1;
        }
        if digits.is_empty() {
            return Err(Error::parse(start, "expected an integer"));
        }
        digits
            .parse()
            .map_err(|_| Error::parse(start, format!("integer '{digits}' is too large")))
    }

    fn int_list(&mut self) -> Result<Vec<u32>> {
        let mut out = Vec::new();
        self.skip_ws();
        if self.eat(')') {
            return Ok(out);
        }
        loop {
            self.skip_ws();
            out.push(self.int()?);
            self.skip_ws();
            if self.eat(')') {
                return Ok(out);
            }
            if !self.eat(',') {
                return Err(Error::parse(self.offset(), "expected ',' or ')'"));
            }
        }
    }
}

/// Parses `n=<INT> m(<list>) [d(<list>)]`.
pub fn parse_function_spec(text: &str) -> Result<BooleanFunction> {
    let mut cur = Cursor::new(text);
    cur.skip_ws();
    cur.expect("n=")?;
    let n = cur.int()?;
    check_variable_count(n)?;
    cur.skip_ws();
    cur.expect("m(")?;
    let minterms = cur.int_list()?;
    cur.skip_ws();
    let dont_cares = if cur.peek() == Some('d') {
        cur.expect("d(")?;
        cur.int_list()?
    } else {
        Vec::new()
    };
    cur.skip_ws();
    if cur.peek().is_some() {
        return Err(Error::parse(cur.offset(), "unexpected trailing input"));
    }
    BooleanFunction::new(n, minterms, dont_cares)
}

/// Parses a `+`-separated list of products over `alphabet`. A letter may be
/// followed by `'` for its complement, `1` stands for the empty product, and
/// a leading `Y =` is ignored.
pub fn parse_sop_expression(text: &str, alphabet: &Alphabet) -> Result<SopExpression> {
    let mut cur = Cursor::new(text);
    skip_output_name(&mut cur, text)?;

    let mut terms = Vec::new();
    loop {
        terms.push(parse_product(&mut cur, alphabet)?);
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some('+') => cur.pos += 1,
            Some(c) => return Err(Error::parse(cur.offset(), format!("unexpected '{c}'"))),
        }
    }
    Ok(SopExpression {
        alphabet: alphabet.clone(),
        terms,
    })
}

fn skip_output_name(cur: &mut Cursor<'_>, text: &str) -> Result<()> {
    let Some(eq) = text.find('=') else {
        return Ok(());
    };
    let name: Vec<char> = text[..eq].chars().filter(|c| !c.is_whitespace()).collect();
    if name.len() != 1 || !name[0].is_ascii_alphabetic() {
        return Err(Error::parse(
            0,
            "expected a single-letter output name before '='",
        ));
    }
    while cur.offset() <= eq {
        cur.pos += 1;
    }
    Ok(())
}

fn parse_product(cur: &mut Cursor<'_>, alphabet: &Alphabet) -> Result<Term> {
    let mut literals = vec![Literal::Absent; alphabet.len()];
    cur.skip_ws();
    let start = cur.offset();
    if cur.eat('1') {
        return Ok(Term::new(literals));
    }
    let mut seen_any = false;
    loop {
        cur.skip_ws();
        let Some(c) = cur.peek().filter(char::is_ascii_alphabetic) else {
            break;
        };
        cur.pos += 1;
        let var = alphabet.position(c).ok_or(Error::UnknownVariable(c))?;
        cur.skip_ws();
        let lit = if cur.eat('\'') {
            Literal::Neg
        } else {
            Literal::Pos
        };
        if cur.skip_ws_then_peek() == Some('\'') {
            return Err(Error::parse(cur.offset(), "repeated complement mark"));
        }
        match literals[var] {
            Literal::Absent => literals[var] = lit,
            prev if prev == lit => {}
            _ => return Err(Error::ContradictoryLiteral(c)),
        }
        seen_any = true;
    }
    if !seen_any {
        return Err(Error::parse(start, "expected a product term"));
    }
    Ok(Term::new(literals))
}

/// Expands every product over its missing variables and merges the
/// results into one care set.
pub fn canonicalize(expr: &SopExpression) -> (BooleanFunction, ExpansionStats) {
    let mut minterms = BTreeSet::new();
    for term in expr.terms() {
        minterms.extend(term.to_cube().iter_members());
    }
    let stats = ExpansionStats {
        input_term_count: expr.terms().len(),
        canonical_minterm_count: minterms.len(),
        added: minterms.len() as i64 - expr.terms().len() as i64,
    };
    let f = BooleanFunction::new(expr.n(), minterms, [])
        .expect("expanded minterms are in range for the alphabet");
    (f, stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use Literal::*;

    fn abcd() -> Alphabet {
        Alphabet::new("ABCD").unwrap()
    }

    #[test]
    fn parses_example_spec() {
        let f = parse_function_spec("n=4 m(4,5,6,8,9,10,13) d(0,7,15)").unwrap();
        assert_eq!(
            f,
            BooleanFunction::new(4, [4, 5, 6, 8, 9, 10, 13], [0, 7, 15]).unwrap()
        );
    }

    #[test]
    fn parses_smallest_spec() {
        let f = parse_function_spec("n=1 m(0)").unwrap();
        assert_eq!(f, BooleanFunction::new(1, [0], []).unwrap());
    }

    #[test]
    fn tolerates_whitespace() {
        let f = parse_function_spec("  n=3   m( 1 , 2 ,3 )d(0)  ").unwrap();
        assert_eq!(f, BooleanFunction::new(3, [1, 2, 3], [0]).unwrap());
        assert!(parse_function_spec("n=3 m()")
            .unwrap()
            .minterms()
            .is_empty());
    }

    #[test]
    fn spec_errors() {
        assert_eq!(parse_function_spec("n=2 m(1) d(1)"), Err(Error::Overlap(1)));
        assert_eq!(
            parse_function_spec("n=2 m(4)"),
            Err(Error::MintermOutOfRange { minterm: 4, n: 2 })
        );
        assert_eq!(
            parse_function_spec("n=0 m(0)"),
            Err(Error::VariableCount(0))
        );
        assert!(matches!(
            parse_function_spec("n=2 m(1,)"),
            Err(Error::Parse { position: 8, .. })
        ));
        assert!(matches!(
            parse_function_spec("m(1)"),
            Err(Error::Parse { position: 0, .. })
        ));
        assert!(matches!(
            parse_function_spec("n=2 m(1) x"),
            Err(Error::Parse { position: 9, .. })
        ));
        assert!(matches!(
            parse_function_spec("n=2 m(99999999999)"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn parses_expressions() {
        let e = parse_sop_expression("AD + ABC", &abcd()).unwrap();
        assert_eq!(
            e.terms(),
            &[
                Term::new(vec![Pos, Absent, Absent, Pos]),
                Term::new(vec![Pos, Pos, Pos, Absent]),
            ]
        );
        let ab = Alphabet::new("AB").unwrap();
        let e = parse_sop_expression("A'B", &ab).unwrap();
        assert_eq!(e.terms(), &[Term::new(vec![Neg, Pos])]);
        let e = parse_sop_expression("Y = A' B + 1", &ab).unwrap();
        assert_eq!(e.terms()[1], Term::new(vec![Absent, Absent]));
    }

    #[test]
    fn expression_errors() {
        let ab = Alphabet::new("AB").unwrap();
        assert_eq!(
            parse_sop_expression("AA'", &ab),
            Err(Error::ContradictoryLiteral('A'))
        );
        assert_eq!(
            parse_sop_expression("AC", &ab),
            Err(Error::UnknownVariable('C'))
        );
        assert!(matches!(
            parse_sop_expression("A + ", &ab),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_sop_expression("A''", &ab),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_sop_expression("(A)", &ab),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_sop_expression("XY = A", &ab),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn alphabet_validation() {
        assert!(Alphabet::new("").is_err());
        assert!(Alphabet::new("AA").is_err());
        assert!(Alphabet::new("A1").is_err());
        assert_eq!(Alphabet::new("xyz").unwrap().to_string(), "xyz");
    }

    #[test]
    fn canonical_expansion_examples() {
        let e = parse_sop_expression("AD + ABC", &abcd()).unwrap();
        let (f, stats) = canonicalize(&e);
        assert_eq!(
            f.minterms().iter().copied().collect::<Vec<_>>(),
            vec![9, 11, 13, 14, 15]
        );
        assert_eq!(stats.added, 3);

        let e = parse_sop_expression("A'B'C'D'", &abcd()).unwrap();
        let (f, stats) = canonicalize(&e);
        assert_eq!(f.minterms().iter().copied().collect::<Vec<_>>(), vec![0]);
        assert_eq!(stats.added, 0);

        let a = Alphabet::new("A").unwrap();
        let (f, stats) = canonicalize(&parse_sop_expression("A + A'", &a).unwrap());
        assert_eq!(f.minterms().iter().copied().collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(stats.added, 0);
    }

    #[test]
    fn overlapping_terms_shrink_the_count() {
        let a = Alphabet::new("AB").unwrap();
        let (_, stats) = canonicalize(&parse_sop_expression("AB + AB + AB", &a).unwrap());
        assert_eq!(stats.added, -2);
    }

    fn arb_expression() -> impl Strategy<Value = SopExpression> {
        (1u32..=6).prop_flat_map(|n| {
            let lit = prop_oneof![Just(Pos), Just(Neg), Just(Absent)];
            prop::collection::vec(prop::collection::vec(lit, n as usize), 1..6).prop_map(
                move |terms| SopExpression {
                    alphabet: Alphabet::default_for(n).unwrap(),
                    terms: terms.into_iter().map(Term::new).collect(),
                },
            )
        })
    }

    // Literal-by-literal evaluation, independent of the cube conversion.
    fn truth(expr: &SopExpression, m: u32) -> bool {
        let n = expr.n();
        expr.terms().iter().any(|t| {
            t.literals().iter().enumerate().all(|(i, lit)| {
                let bit = m & (1 << (n - 1 - i as u32)) != 0;
                *lit == Absent || (*lit == Pos) == bit
            })
        })
    }

    proptest! {
        #[test]
        fn canonicalize_preserves_semantics(expr in arb_expression()) {
            let (f, stats) = canonicalize(&expr);
            let satisfying = (0..1u32 << expr.n()).filter(|&m| truth(&expr, m)).count();
            prop_assert_eq!(stats.canonical_minterm_count, satisfying);
            for m in 0..1u32 << expr.n() {
                prop_assert_eq!(f.is_care(m), truth(&expr, m));
            }
        }

        #[test]
        fn print_then_parse_is_a_fixed_point(expr in arb_expression()) {
            let printed = expr.to_string();
            let reparsed = parse_sop_expression(&printed, expr.alphabet()).unwrap();
            prop_assert_eq!(&reparsed, &expr);
            prop_assert_eq!(reparsed.to_string(), printed);
        }

        #[test]
        fn list_form_round_trips(n in 1u32..=8, seed in any::<u64>()) {
            let mut rng = crate::rng::Lcg::new(seed);
            let f = rng.random_function(n);
            prop_assert_eq!(parse_function_spec(&f.to_string()).unwrap(), f);
        }
    }
}
