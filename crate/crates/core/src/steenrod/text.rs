//! Text syntax: `Sq3 Sq1 + Sq4`, `1`, `0`. Words need not be admissible;
//! they are reduced on parsing.

use std::str::FromStr;

use crate::parse::ParseError;

use super::{adem_reduce, SteenrodElement};

impl FromStr for SteenrodElement {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let chars: Vec<char> = s.chars().collect();
        let mut pos = 0;
        let mut out = SteenrodElement::zero();
        let mut degree: Option<u32> = None;
        loop {
            let (word, is_zero, start) = parse_word(&chars, &mut pos)?;
            if !is_zero {
                let term = adem_reduce(&word);
                let d: u32 = word.iter().sum();
                match degree {
                    Some(prev) if prev != d => {
                        return Err(ParseError::at(
                            start + 1,
                            format!("inhomogeneous sum: degree {d} after degree {prev}"),
                        ))
                    }
                    _ => degree = Some(d),
                }
                out += &term;
            }
            skip_ws(&chars, &mut pos);
            match chars.get(pos) {
                None => break,
                Some('+') => pos += 1,
                Some(c) => return Err(ParseError::at(pos + 1, format!("unexpected '{c}'"))),
            }
        }
        Ok(out)
    }
}

fn skip_ws(chars: &[char], pos: &mut usize) {
    while chars.get(*pos).is_some_and(|c| c.is_whitespace()) {
        *pos += 1;
    }
}

/// One monomial: a run of `SqN` tokens, or `1`, or `0`.
fn parse_word(chars: &[char], pos: &mut usize) -> Result<(Vec<u32>, bool, usize), ParseError> {
    skip_ws(chars, pos);
    let start = *pos;
    let mut word = Vec::new();
    let mut tokens = 0;
    let mut zero = false;
    loop {
        skip_ws(chars, pos);
        match chars.get(*pos) {
            Some('S') => {
                let tok_start = *pos;
                if chars.get(*pos + 1) != Some(&'q') {
                    return Err(ParseError::at(tok_start + 1, "expected 'Sq'"));
                }
                *pos += 2;
                if chars.get(*pos) == Some(&'^') {
                    *pos += 1;
                }
                let digits_start = *pos;
                while chars.get(*pos).is_some_and(|c| c.is_ascii_digit()) {
                    *pos += 1;
                }
                if digits_start == *pos {
                    return Err(ParseError::at(digits_start + 1, "expected an exponent after 'Sq'"));
                }
                let text: String = chars[digits_start..*pos].iter().collect();
                let r: u32 = text
                    .parse()
                    .map_err(|_| ParseError::at(digits_start + 1, "exponent out of range"))?;
                word.push(r);
                tokens += 1;
            }
            Some(c @ ('0' | '1')) => {
                let c = *c;
                let tok_start = *pos;
                *pos += 1;
                if chars.get(*pos).is_some_and(|c| c.is_ascii_alphanumeric()) {
                    return Err(ParseError::at(tok_start + 1, "unexpected token"));
                }
                if c == '0' {
                    zero = true;
                }
                tokens += 1;
            }
            _ => break,
        }
    }
    if tokens == 0 {
        let column = *pos + 1;
        return Err(match chars.get(*pos) {
            None => ParseError::at(column, "expected a term"),
            Some(c) => ParseError::at(column, format!("unexpected '{c}'")),
        });
    }
    Ok((word, zero, start))
}
