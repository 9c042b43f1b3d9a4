//! Polynomials over F2 in named generators, and the expression grammar
//! `+`, `*`, `^`, parentheses, `0`, `1`.

use std::collections::BTreeSet;

use crate::parse::ParseError;

/// Exponent vector, one entry per generator.
pub type Monomial = Vec<u32>;

/// A polynomial as the set of monomials with coefficient 1.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    terms: BTreeSet<Monomial>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one(ngens: usize) -> Self {
        Poly::monomial(vec![0; ngens])
    }

    pub fn monomial(m: Monomial) -> Self {
        Poly {
            terms: BTreeSet::from([m]),
        }
    }

    pub fn generator(ngens: usize, i: usize) -> Self {
        let mut m = vec![0; ngens];
        m[i] = 1;
        Poly::monomial(m)
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn toggle(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn add_assign(&mut self, other: &Poly) {
        for m in &other.terms {
            self.toggle(m.clone());
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for a in &self.terms {
            for b in &other.terms {
                out.toggle(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        out
    }

    pub fn pow(&self, e: u32, ngens: usize) -> Poly {
        let mut out = Poly::one(ngens);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Degrees of the terms, given generator degrees.
    pub fn degrees(&self, gen_degrees: &[u32]) -> BTreeSet<u32> {
        self.terms.iter().map(|m| monomial_degree(m, gen_degrees)).collect()
    }

    /// The common degree of all terms; `None` for zero or mixed degrees.
    pub fn degree(&self, gen_degrees: &[u32]) -> Option<u32> {
        let d = self.degrees(gen_degrees);
        (d.len() == 1).then(|| *d.first().unwrap())
    }

    pub fn format(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|m| format_monomial(m, names))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

pub fn monomial_degree(m: &[u32], gen_degrees: &[u32]) -> u32 {
    m.iter().zip(gen_degrees).map(|(e, d)| e * d).sum()
}

/// `u2^2*u3`, or `1` for the empty product.
pub fn format_monomial(m: &[u32], names: &[String]) -> String {
    let factors: Vec<String> = m
        .iter()
        .zip(names)
        .filter(|(e, _)| **e > 0)
        .map(|(e, n)| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
        .collect();
    if factors.is_empty() {
        "1".into()
    } else {
        factors.join("*")
    }
}

/// All monomials of degree `n` in generators of the given positive degrees.
pub fn monomials_of_degree(n: u32, gen_degrees: &[u32]) -> Vec<Monomial> {
    fn go(n: u32, degs: &[u32], i: usize, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if i == degs.len() {
            if n == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for e in 0..=n / degs[i] {
            cur[i] = e;
            go(n - e * degs[i], degs, i + 1, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    go(n, gen_degrees, 0, &mut vec![0; gen_degrees.len()], &mut out);
    out.sort();
    out
}

/// Parses an expression over the given generator names.
pub fn parse_poly(text: &str, names: &[String]) -> Result<Poly, ParseError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        names,
    };
    let out = p.sum()?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(ParseError::at(p.pos + 1, format!("unexpected '{c}'")));
    }
    Ok(out)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.product()?;
        while self.eat('+') {
            acc.add_assign(&self.product()?);
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.power()?;
        while self.eat('*') {
            acc = acc.mul(&self.power()?);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if self.eat('^') {
            self.skip_ws();
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let digits: String = self.chars[start..self.pos].iter().collect();
            let e: u32 = digits
                .parse()
                .map_err(|_| ParseError::at(start + 1, "expected an exponent"))?;
            return Ok(base.pow(e, self.names.len()));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if !self.eat(')') {
                    return Err(ParseError::at(self.pos + 1, "expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let digits: String = self.chars[start..self.pos].iter().collect();
                match digits.as_str() {
                    "0" => Ok(Poly::zero()),
                    "1" => Ok(Poly::one(self.names.len())),
                    _ => Err(ParseError::at(start + 1, "only the constants 0 and 1 exist over F2")),
                }
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                while self.peek().is_some_and(|c| c.is_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                let i = self
                    .names
                    .iter()
                    .position(|n| *n == name)
                    .ok_or_else(|| ParseError::at(start + 1, format!("unknown generator '{name}'")))?;
                Ok(Poly::generator(self.names.len(), i))
            }
            Some(c) => Err(ParseError::at(start + 1, format!("unexpected '{c}'"))),
            None => Err(ParseError::at(start + 1, "expected a term")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names() -> Vec<String> {
        vec!["w2".into(), "w3".into()]
    }

    #[test]
    fn parse_and_format() {
        let p = parse_poly("w2^3 + w3^2", &names()).unwrap();
        assert_eq!(p.format(&names()), "w3^2 + w2^3");
        assert_eq!(p.degree(&[2, 3]), Some(6));
        let q = parse_poly("(w2 + w3)^2", &names()).unwrap();
        assert_eq!(q.format(&names()), "w3^2 + w2^2");
        assert_eq!(parse_poly("w2*w3 + w3*w2", &names()).unwrap(), Poly::zero());
        assert_eq!(parse_poly("1", &names()).unwrap().format(&names()), "1");
    }

    #[test]
    fn five_fold_identity() {
        // w2^5 = w2^2 (w2^3 + w3^2) + w3 (w2^2 w3)
        let n = names();
        let lhs = parse_poly("w2^5", &n).unwrap();
        let rhs = parse_poly("w2^2*(w2^3 + w3^2) + w3*(w2^2*w3)", &n).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn errors_have_columns() {
        let e = parse_poly("w2 + x", &names()).unwrap_err();
        assert_eq!(e.column, 6);
        let e = parse_poly("w2 + 2", &names()).unwrap_err();
        assert_eq!(e.column, 6);
        let e = parse_poly("(w2", &names()).unwrap_err();
        assert!(e.message.contains(")"));
        assert!(parse_poly("w2 w3", &names()).is_err());
    }

    #[test]
    fn monomial_enumeration() {
        let m = monomials_of_degree(6, &[2, 3]);
        assert_eq!(m, vec![vec![0, 2], vec![3, 0]]);
        assert_eq!(monomials_of_degree(1, &[2, 3]).len(), 0);
        assert_eq!(monomials_of_degree(0, &[2, 3]), vec![vec![0, 0]]);
    }
}
