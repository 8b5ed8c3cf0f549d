//! Formulas over `{∨, ¬, 0, 1}` and their prefix syntax: `or(f,g)`,
//! `neg(f)`, `0`, `1` and identifiers.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Var(String),
    Or(Box<Formula>, Box<Formula>),
    Neg(Box<Formula>),
    Zero,
    One,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("formula syntax error at byte {pos}: {message}")]
pub struct FormulaError {
    pub pos: usize,
    pub message: String,
}

impl Formula {
    pub fn var(name: &str) -> Formula {
        Formula::Var(name.to_string())
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(a: Formula) -> Formula {
        Formula::Neg(Box::new(a))
    }

    /// `V(φ)`.
    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Var(v) => {
                out.insert(v.clone());
            }
            Formula::Or(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Formula::Neg(a) => a.collect_vars(out),
            Formula::Zero | Formula::One => {}
        }
    }

    /// Simultaneous substitution; unmapped variables stay.
    pub fn substitute(&self, sigma: &BTreeMap<String, Formula>) -> Formula {
        match self {
            Formula::Var(v) => sigma.get(v).cloned().unwrap_or_else(|| self.clone()),
            Formula::Or(a, b) => Formula::or(a.substitute(sigma), b.substitute(sigma)),
            Formula::Neg(a) => Formula::neg(a.substitute(sigma)),
            Formula::Zero | Formula::One => self.clone(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Or(a, b) => 1 + a.depth().max(b.depth()),
            Formula::Neg(a) => 1 + a.depth(),
            _ => 0,
        }
    }

    pub fn parse(text: &str) -> Result<Formula, FormulaError> {
        let mut p = Parser {
            s: text.as_bytes(),
            pos: 0,
        };
        let f = p.formula()?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(p.err("trailing input"));
        }
        Ok(f)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Var(v) => write!(f, "{v}"),
            Formula::Or(a, b) => write!(f, "or({a},{b})"),
            Formula::Neg(a) => write!(f, "neg({a})"),
            Formula::Zero => write!(f, "0"),
            Formula::One => write!(f, "1"),
        }
    }
}

impl std::str::FromStr for Formula {
    type Err = FormulaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Formula::parse(s)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, message: &str) -> FormulaError {
        FormulaError {
            pos: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), FormulaError> {
        self.skip_ws();
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected `{}`", c as char)))
        }
    }

    fn ident(&mut self) -> Option<String> {
        let start = self.pos;
        while self.pos < self.s.len()
            && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
        {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn formula(&mut self) -> Result<Formula, FormulaError> {
        self.skip_ws();
        let start = self.pos;
        let Some(word) = self.ident() else {
            return Err(self.err("expected a formula"));
        };
        self.skip_ws();
        let call = self.s.get(self.pos) == Some(&b'(');
        match (word.as_str(), call) {
            ("or", true) => {
                self.expect(b'(')?;
                let a = self.formula()?;
                self.expect(b',')?;
                let b = self.formula()?;
                self.expect(b')')?;
                Ok(Formula::or(a, b))
            }
            ("neg", true) => {
                self.expect(b'(')?;
                let a = self.formula()?;
                self.expect(b')')?;
                Ok(Formula::neg(a))
            }
            (_, true) => {
                self.pos = start;
                Err(self.err(&format!("unknown connective `{word}`")))
            }
            ("0", false) => Ok(Formula::Zero),
            ("1", false) => Ok(Formula::One),
            (w, false) if w.as_bytes()[0].is_ascii_digit() => {
                self.pos = start;
                Err(self.err("variables must not start with a digit"))
            }
            (w, false) => Ok(Formula::Var(w.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let f = Formula::parse("or( or(x, neg(x)) , y)").unwrap();
        assert_eq!(f.to_string(), "or(or(x,neg(x)),y)");
        assert_eq!(f.vars().into_iter().collect::<Vec<_>>(), vec!["x", "y"]);
        assert_eq!(
            Formula::parse("neg(1)").unwrap(),
            Formula::neg(Formula::One)
        );
    }

    #[test]
    fn syntax_errors() {
        assert!(Formula::parse("and(x,y)").is_err());
        assert!(Formula::parse("or(x)").is_err());
        assert!(Formula::parse("x y").is_err());
        assert!(Formula::parse("2x").is_err());
    }

    #[test]
    fn substitution() {
        let f = Formula::parse("or(or(x,neg(x)),y)").unwrap();
        let sigma = BTreeMap::from([("y".to_string(), Formula::parse("or(u,v)").unwrap())]);
        assert_eq!(f.substitute(&sigma).to_string(), "or(or(x,neg(x)),or(u,v))");
    }
}
