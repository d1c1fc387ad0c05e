//! Text form shared by the polynomial carriers.
//!
//! Terms print in descending order as `c x^a y^b` without separators
//! (`3/2x^2`, `0^x`, `-xy^3`). Variables are `x`, `y`, `z` for up to three
//! variables and `x1 .. xn` beyond that; the parser accepts both spellings.

use std::fmt::{self, Write};

use crate::error::{Error, Result};

pub(crate) struct Term {
    pub negative: bool,
    /// Coefficient magnitude; `None` for a unit coefficient.
    pub magnitude: Option<String>,
    pub exps: Vec<u32>,
}

pub(crate) fn var_name(i: usize, nvars: usize) -> String {
    if nvars <= 3 {
        ["x", "y", "z"][i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

pub(crate) fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[Term], nvars: usize) -> fmt::Result {
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (k, t) in terms.iter().enumerate() {
        match (k, t.negative) {
            (0, true) => f.write_char('-')?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        let constant = t.exps.iter().all(|&e| e == 0);
        match &t.magnitude {
            Some(m) => f.write_str(m)?,
            None if constant => f.write_char('1')?,
            None => {}
        }
        for (i, &e) in t.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => f.write_str(&var_name(i, nvars))?,
                _ => write!(f, "{}^{}", var_name(i, nvars), e)?,
            }
        }
    }
    Ok(())
}

#[derive(Debug, PartialEq)]
pub(crate) struct ParsedTerm {
    pub negative: bool,
    /// Raw coefficient text: digits, `a/b`, or `0^`.
    pub coeff: Option<String>,
    /// (zero-based variable index, exponent)
    pub factors: Vec<(usize, u32)>,
}

impl ParsedTerm {
    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        let mut e = vec![0; nvars];
        for &(i, k) in &self.factors {
            e[i] += k;
        }
        e
    }
}

pub(crate) fn max_var(terms: &[ParsedTerm]) -> Option<usize> {
    terms
        .iter()
        .flat_map(|t| t.factors.iter().map(|f| f.0))
        .max()
}

pub(crate) fn parse_terms(src: &str) -> Result<Vec<ParsedTerm>> {
    let chars: Vec<char> = src.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut pos = 0;
    let mut terms = Vec::new();
    let err = |msg: &str, at: usize| Error::Parse(format!("{msg} at offset {at} in {src:?}"));
    while pos < chars.len() {
        let mut negative = false;
        if chars[pos] == '+' || chars[pos] == '-' {
            negative = chars[pos] == '-';
            pos += 1;
        } else if !terms.is_empty() {
            return Err(err("expected '+' or '-'", pos));
        }
        let start = pos;
        let mut coeff = None;
        if pos + 1 < chars.len() && chars[pos] == '0' && chars[pos + 1] == '^' {
            coeff = Some("0^".to_string());
            pos += 2;
        } else if pos < chars.len() && chars[pos].is_ascii_digit() {
            let mut text = String::new();
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                text.push(chars[pos]);
                pos += 1;
            }
            if pos < chars.len() && chars[pos] == '/' {
                text.push('/');
                pos += 1;
                let before = text.len();
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    text.push(chars[pos]);
                    pos += 1;
                }
                if text.len() == before {
                    return Err(err("missing denominator", pos));
                }
            }
            coeff = Some(text);
        }
        let mut factors = Vec::new();
        loop {
            if pos < chars.len() && chars[pos] == '*' && pos > start {
                pos += 1;
            }
            let Some(&c) = chars.get(pos) else { break };
            let var = match c {
                'x' => {
                    pos += 1;
                    let mut digits = String::new();
                    while pos < chars.len() && chars[pos].is_ascii_digit() {
                        digits.push(chars[pos]);
                        pos += 1;
                    }
                    if digits.is_empty() {
                        0
                    } else {
                        let k: usize = digits.parse().map_err(|_| err("bad variable", pos))?;
                        if k == 0 {
                            return Err(err("variables are numbered from 1", pos));
                        }
                        k - 1
                    }
                }
                'y' => {
                    pos += 1;
                    1
                }
                'z' => {
                    pos += 1;
                    2
                }
                _ => break,
            };
            let mut exp = 1;
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                let mut digits = String::new();
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    digits.push(chars[pos]);
                    pos += 1;
                }
                exp = digits.parse().map_err(|_| err("bad exponent", pos))?;
            }
            factors.push((var, exp));
        }
        if coeff.is_none() && factors.is_empty() {
            return Err(err("expected a term", pos));
        }
        terms.push(ParsedTerm {
            negative,
            coeff,
            factors,
        });
    }
    Ok(terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_hat_zero_and_rationals() {
        let t = parse_terms("3x^2 + 0^x - 3/2").unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t[0].coeff.as_deref(), Some("3"));
        assert_eq!(t[0].factors, vec![(0, 2)]);
        assert_eq!(t[1].coeff.as_deref(), Some("0^"));
        assert_eq!(t[1].factors, vec![(0, 1)]);
        assert!(t[2].negative);
        assert_eq!(t[2].coeff.as_deref(), Some("3/2"));
        assert!(t[2].factors.is_empty());
    }

    #[test]
    fn parses_multivariate() {
        let t = parse_terms("-xy^3 + 2*x2*x1^2").unwrap();
        assert_eq!(t[0].exponents(2), vec![1, 3]);
        assert_eq!(t[1].exponents(2), vec![2, 1]);
        assert_eq!(max_var(&t), Some(1));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_terms("").is_err());
        assert!(parse_terms("x +").is_err());
        assert!(parse_terms("x q").is_err());
        assert!(parse_terms("3/").is_err());
    }
}
