//! Canonical text form of vectors, multivectors and `Sym²` elements.
//!
//! Terms appear in lexicographic order of their basis index tuples, with
//! coefficients as reduced fractions in front of the monomial:
//!
//! ```text
//! 1/2 a1^a2^b2 - 1/2 a1^a3^b3
//! a2·a3 - 3 b1·b1
//! 0
//! ```
//!
//! `^` joins wedge factors and `·` joins symmetric factors. The parser also
//! accepts unsorted or repeated factors (normalizing signs), `*` between a
//! coefficient and its monomial, and `*` in place of `·`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::exterior::{basis_label, Multivector, Sym2, Vector};
use crate::{Error, Rational, Result};

fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: Iterator<Item = (String, &'a Rational)>,
{
    let mut first = true;
    for (mono, c) in terms {
        let neg = c.is_negative();
        let abs = c.abs();
        match (first, neg) {
            (true, true) => write!(f, "-")?,
            (true, false) => {}
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
        }
        if abs.is_one() {
            write!(f, "{mono}")?;
        } else {
            write!(f, "{abs} {mono}")?;
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.genus();
        write_terms(
            f,
            self.terms().map(|(blade, c)| {
                let mono = blade.iter().map(|&i| basis_label(g, i)).collect::<Vec<_>>().join("^");
                (mono, c)
            }),
        )
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Multivector::from_vector(self).fmt(f)
    }
}

impl fmt::Display for Sym2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.genus();
        write_terms(
            f,
            self.terms()
                .map(|((i, j), c)| (format!("{}·{}", basis_label(g, i), basis_label(g, j)), c)),
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(Rational),
    Label(usize),
    Plus,
    Minus,
    Wedge,
    Dot,
    Star,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Product {
    Wedge,
    Symmetric,
}

fn err(input: &str, message: impl Into<String>) -> Error {
    Error::Parse {
        input: input.to_string(),
        message: message.into(),
    }
}

fn lex(genus: usize, input: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        match ch {
            c if c.is_whitespace() => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '^' => {
                out.push(Token::Wedge);
                i += 1;
            }
            '·' => {
                out.push(Token::Dot);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            'a' | 'b' => {
                let start = i + 1;
                let mut end = start;
                while end < chars.len() && chars[end].is_ascii_digit() {
                    end += 1;
                }
                let digits: String = chars[start..end].iter().collect();
                let n: usize = digits
                    .parse()
                    .map_err(|_| err(input, format!("expected an index after '{ch}'")))?;
                if n == 0 || n > genus {
                    return Err(err(input, format!("{ch}{n} is not a basis vector in genus {genus}")));
                }
                out.push(Token::Label(if ch == 'a' { n - 1 } else { genus + n - 1 }));
                i = end;
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '/') {
                    i += 1;
                }
                let lit: String = chars[start..i].iter().collect();
                let r: Rational = lit
                    .parse()
                    .map_err(|_| err(input, format!("bad coefficient {lit:?}")))?;
                out.push(Token::Number(r));
            }
            other => return Err(err(input, format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

/// A parsed term: coefficient times a list of basis factors.
type Term = (Rational, Vec<usize>);

fn parse_terms(genus: usize, input: &str, product: Product) -> Result<Vec<Term>> {
    let tokens = lex(genus, input)?;
    if tokens.is_empty() {
        return Err(err(input, "empty expression"));
    }
    if let [Token::Number(n)] = tokens.as_slice() {
        if n.is_zero() {
            return Ok(Vec::new());
        }
    }
    let mut terms = Vec::new();
    let mut pos = 0;
    let mut first = true;
    while pos < tokens.len() {
        let mut sign = Rational::one();
        match tokens[pos] {
            Token::Plus => pos += 1,
            Token::Minus => {
                sign = -sign;
                pos += 1;
            }
            _ if first => {}
            _ => return Err(err(input, "expected '+' or '-' between terms")),
        }
        first = false;
        let mut coef = Rational::one();
        if let Some(Token::Number(n)) = tokens.get(pos) {
            coef = n.clone();
            pos += 1;
            if tokens.get(pos) == Some(&Token::Star) {
                pos += 1;
            }
        }
        let mut factors = Vec::new();
        loop {
            match tokens.get(pos) {
                Some(Token::Label(i)) => {
                    factors.push(*i);
                    pos += 1;
                }
                _ => return Err(err(input, "expected a basis vector such as a1 or b2")),
            }
            match (tokens.get(pos), product) {
                (Some(Token::Wedge), Product::Wedge) => pos += 1,
                (Some(Token::Dot | Token::Star), Product::Symmetric) => pos += 1,
                (Some(Token::Wedge), Product::Symmetric) => {
                    return Err(err(input, "'^' is not allowed in a symmetric product"))
                }
                (Some(Token::Dot | Token::Star), Product::Wedge) => {
                    return Err(err(input, "'·' is not allowed in a wedge product"))
                }
                _ => break,
            }
        }
        terms.push((sign * coef, factors));
    }
    Ok(terms)
}

/// Parses an element of `∧ᵏV`. `degree` is needed for the bare `0` and, if
/// given, is enforced for every term.
pub fn parse_multivector(genus: usize, input: &str, degree: Option<usize>) -> Result<Multivector> {
    let terms = parse_terms(genus, input, Product::Wedge)?;
    let degree = match (degree, terms.first()) {
        (Some(d), _) => d,
        (None, Some((_, f))) => f.len(),
        (None, None) => return Err(err(input, "degree of 0 is ambiguous here")),
    };
    if !(1..=3).contains(&degree) {
        return Err(err(input, format!("degree {degree} is not supported")));
    }
    if let Some((_, f)) = terms.iter().find(|(_, f)| f.len() != degree) {
        return Err(err(
            input,
            format!("term of degree {} in a degree-{degree} expression", f.len()),
        ));
    }
    Multivector::from_terms(genus, degree, terms.into_iter().map(|(c, f)| (f, c)))
}

pub fn parse_vector(genus: usize, input: &str) -> Result<Vector> {
    parse_multivector(genus, input, Some(1))?.to_vector()
}

pub fn parse_sym2(genus: usize, input: &str) -> Result<Sym2> {
    let terms = parse_terms(genus, input, Product::Symmetric)?;
    if let Some((_, f)) = terms.iter().find(|(_, f)| f.len() != 2) {
        return Err(err(input, format!("symmetric monomial of degree {}", f.len())));
    }
    Sym2::from_terms(genus, terms.into_iter().map(|(c, f)| ((f[0], f[1]), c)))
}

/// Renders a rational as `p` or `p/q`.
pub fn render_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn parse_rational(input: &str) -> Result<Rational> {
    input
        .trim()
        .parse()
        .map_err(|_| err(input, "expected a rational such as -3 or 5/7"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::SymplecticSpace;
    use crate::{int, rat};

    #[test]
    fn golden_projected_johnson_element() {
        let s = SymplecticSpace::new(3).unwrap();
        let x = Multivector::wedge3(&s.a(1), &s.a(2), &s.b(2));
        let p = s.project_primitive(&x).unwrap();
        assert_eq!(p.to_string(), "1/2 a1^a2^b2 - 1/2 a1^a3^b3");
    }

    #[test]
    fn zero_renders_as_zero() {
        assert_eq!(Multivector::zero(3, 3).to_string(), "0");
        assert_eq!(Sym2::zero(2).to_string(), "0");
        assert_eq!(Vector::zero(2).to_string(), "0");
    }

    #[test]
    fn render_signs_and_coefficients() {
        let s = SymplecticSpace::new(2).unwrap();
        let v = &s.a(1).scale(&int(-1)) + &s.b(2).scale(&rat(-3, 4));
        assert_eq!(v.to_string(), "-a1 - 3/4 b2");
        assert_eq!(s.delta().to_string(), "a1^b1 + a2^b2");
        let sq = Sym2::product(&s.b(1), &s.b(1)).scale(&int(2));
        assert_eq!(sq.to_string(), "2 b1·b1");
    }

    #[test]
    fn parse_normalizes_factor_order() {
        let x = parse_multivector(3, "a2^b1^a3", None).unwrap();
        assert_eq!(x.to_string(), "-a2^a3^b1");
        let y = parse_multivector(3, "2*a1^a1^b1 + b3^a1^a2", Some(3)).unwrap();
        assert_eq!(y.to_string(), "a1^a2^b3");
        let s = parse_sym2(3, "a3*a2 + a2·a3").unwrap();
        assert_eq!(s.to_string(), "2 a2·a3");
    }

    #[test]
    fn parse_errors() {
        assert!(parse_multivector(3, "a4", None).is_err());
        assert!(parse_multivector(3, "a1 b1", None).is_err());
        assert!(parse_multivector(3, "a1^b1 + a2", None).is_err());
        assert!(parse_multivector(3, "0", None).is_err());
        assert!(parse_multivector(3, "0", Some(3)).unwrap().is_zero());
        assert!(parse_multivector(3, "a1^b1^a2^b2", None).is_err());
        assert!(parse_sym2(3, "a1^a2").is_err());
        assert!(parse_vector(3, "a1 % b1").is_err());
        assert!(parse_vector(3, "1/0 a1").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn parse_round_trip_examples() {
        for text in ["1/2 a1^a2^b2 - 1/2 a1^a3^b3", "-a1^b1^b3", "a1^a2^a3 + 7/3 b1^b2^b3"] {
            assert_eq!(parse_multivector(3, text, None).unwrap().to_string(), text);
        }
        assert_eq!(parse_vector(2, "-a1 + 2/5 b2").unwrap().to_string(), "-a1 + 2/5 b2");
        assert_eq!(parse_rational(" -4/6 ").unwrap(), rat(-2, 3));
    }
}
