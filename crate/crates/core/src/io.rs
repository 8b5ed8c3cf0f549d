//! Text format for structures, DOT export and census TSV.
//!
//! ```text
//! # comments and blank lines are ignored
//! ilat 3
//! names 0 1/2 1
//! covers
//! 0 1
//! 1 2
//! inv 2 1 0
//! bottom 0
//! top 2
//! ```
//!
//! The `covers` block may list any generating relation (`i j` meaning
//! `i <= j`); the order is its reflexive-transitive closure. Elements are
//! referred to by index or, when a `names` line is present, by name; names
//! take precedence over indices. [`emit`] writes the cover relation in
//! sorted order, using names when present, so `emit` after `parse` is a
//! fixed point.

use std::fmt::Write as _;

use thiserror::Error;

use crate::census::Census;
use crate::{Elem, InvolutivePoset, StructureError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid structure: {0}")]
    Validation(#[from] StructureError),
}

fn perr(line: usize, message: impl Into<String>) -> IoError {
    IoError::Parse {
        line,
        message: message.into(),
    }
}

struct Parser {
    n: Option<usize>,
    names: Option<Vec<String>>,
    covers: Vec<(Elem, Elem)>,
    inv: Option<Vec<Elem>>,
    bottom: Option<Elem>,
    top: Option<Elem>,
}

impl Parser {
    fn elem(&self, tok: &str, line: usize) -> Result<Elem, IoError> {
        let n = self
            .n
            .ok_or_else(|| perr(line, "`ilat <n>` must come first"))?;
        let by_name = self
            .names
            .as_ref()
            .and_then(|names| names.iter().position(|s| s == tok));
        let e = match by_name {
            Some(e) => e,
            None => tok
                .parse::<usize>()
                .map_err(|_| perr(line, format!("unknown element `{tok}`")))?,
        };
        if e >= n {
            return Err(perr(line, format!("element {e} out of range 0..{n}")));
        }
        Ok(e)
    }

    fn single(&self, rest: &[&str], line: usize, key: &str) -> Result<Elem, IoError> {
        match rest {
            [tok] => self.elem(tok, line),
            _ => Err(perr(line, format!("`{key}` takes exactly one element"))),
        }
    }
}

/// Parses the text format and validates the result.
pub fn parse(text: &str) -> Result<InvolutivePoset, IoError> {
    let mut p = Parser {
        n: None,
        names: None,
        covers: Vec::new(),
        inv: None,
        bottom: None,
        top: None,
    };
    let mut in_covers = false;
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        let (key, rest) = (toks[0], &toks[1..]);
        if p.n.is_none() && key != "ilat" {
            return Err(perr(line, "expected `ilat <n>` header"));
        }
        match key {
            "ilat" => {
                if p.n.is_some() {
                    return Err(perr(line, "duplicate `ilat` header"));
                }
                let n = match rest {
                    [tok] => tok
                        .parse::<usize>()
                        .map_err(|_| perr(line, "bad element count"))?,
                    _ => return Err(perr(line, "expected `ilat <n>`")),
                };
                if n == 0 {
                    return Err(perr(line, "element count must be positive"));
                }
                p.n = Some(n);
                in_covers = false;
            }
            "names" => {
                if p.names.is_some() {
                    return Err(perr(line, "duplicate `names` line"));
                }
                if rest.len() != p.n.unwrap_or(0) {
                    return Err(perr(line, format!("expected {} names", p.n.unwrap_or(0))));
                }
                p.names = Some(rest.iter().map(|s| s.to_string()).collect());
                in_covers = false;
            }
            "covers" => {
                if !rest.is_empty() {
                    return Err(perr(
                        line,
                        "`covers` stands alone; list pairs on following lines",
                    ));
                }
                in_covers = true;
            }
            "inv" => {
                if p.inv.is_some() {
                    return Err(perr(line, "duplicate `inv` line"));
                }
                let inv = rest
                    .iter()
                    .map(|t| p.elem(t, line))
                    .collect::<Result<Vec<_>, _>>()?;
                if inv.len() != p.n.unwrap_or(0) {
                    return Err(perr(
                        line,
                        format!("`inv` needs {} entries", p.n.unwrap_or(0)),
                    ));
                }
                p.inv = Some(inv);
                in_covers = false;
            }
            "bottom" => {
                p.bottom = Some(p.single(rest, line, "bottom")?);
                in_covers = false;
            }
            "top" => {
                p.top = Some(p.single(rest, line, "top")?);
                in_covers = false;
            }
            _ if in_covers => match toks.as_slice() {
                [a, b] => {
                    let pair = (p.elem(a, line)?, p.elem(b, line)?);
                    p.covers.push(pair);
                }
                _ => return Err(perr(line, "expected a pair `i j`")),
            },
            other => return Err(perr(line, format!("unknown directive `{other}`"))),
        }
    }
    let end = last_line + 1;
    let n = p.n.ok_or_else(|| perr(end, "missing `ilat <n>` header"))?;
    let inv = p
        .inv
        .take()
        .ok_or_else(|| perr(end, "missing `inv` line"))?;
    let bottom = p.bottom.ok_or_else(|| perr(end, "missing `bottom` line"))?;
    let top = p.top.ok_or_else(|| perr(end, "missing `top` line"))?;
    Ok(InvolutivePoset::from_covers(
        n, &p.covers, inv, bottom, top, p.names,
    )?)
}

/// Canonical text form: covers sorted, names when present.
pub fn emit(p: &InvolutivePoset) -> String {
    let name = |e: Elem| match p.labels() {
        Some(names) => names[e].clone(),
        None => e.to_string(),
    };
    let mut s = String::new();
    writeln!(s, "ilat {}", p.n()).unwrap();
    if let Some(names) = p.labels() {
        writeln!(s, "names {}", names.join(" ")).unwrap();
    }
    s.push_str("covers\n");
    for (a, b) in p.covers() {
        writeln!(s, "{} {}", name(a), name(b)).unwrap();
    }
    let inv: Vec<String> = p.inv_map().iter().map(|&e| name(e)).collect();
    writeln!(s, "inv {}", inv.join(" ")).unwrap();
    writeln!(s, "bottom {}", name(p.bottom())).unwrap();
    writeln!(s, "top {}", name(p.top())).unwrap();
    s
}

fn dot_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram as an undirected Graphviz graph, bottom drawn lowest.
/// Involution pairs appear as dashed edges (self-loops for fixed points).
pub fn to_dot(p: &InvolutivePoset, name: &str) -> String {
    let mut s = String::new();
    writeln!(s, "graph {} {{", dot_quote(name)).unwrap();
    s.push_str("  rankdir=BT;\n  node [shape=circle];\n");
    for x in p.elements() {
        writeln!(s, "  {x} [label={}];", dot_quote(&p.label(x))).unwrap();
    }
    for (a, b) in p.covers() {
        writeln!(s, "  {a} -- {b};").unwrap();
    }
    for x in p.elements() {
        let y = p.inv(x);
        if x <= y {
            writeln!(s, "  {x} -- {y} [style=dashed, constraint=false];").unwrap();
        }
    }
    s.push_str("}\n");
    s
}

/// Census rows as TSV with columns `name`, `size`, `flags`; flags are
/// comma-separated class names (`-` when empty).
pub fn census_tsv(c: &Census) -> String {
    let mut s = String::from("name\tsize\tflags\n");
    for r in &c.rows {
        let flags: Vec<&str> = r.flags.iter().map(|f| f.name()).collect();
        let flags = if flags.is_empty() {
            "-".to_string()
        } else {
            flags.join(",")
        };
        writeln!(s, "{}\t{}\t{}", r.name, r.size, flags).unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::poset::OrderAxiom;

    #[test]
    fn round_trip_b6() {
        let text = emit(&catalog::b6());
        assert_eq!(emit(&parse(&text).unwrap()), text);
    }

    #[test]
    fn names_may_replace_indices() {
        let t =
            "ilat 3\nnames lo mid hi\ncovers\nlo mid\nmid hi\ninv hi mid lo\nbottom lo\ntop hi\n";
        let p = parse(t).unwrap();
        assert_eq!(p.inv(1), 1);
        assert_eq!(p.label(2), "hi");
    }

    #[test]
    fn missing_inv() {
        let err = parse("ilat 2\ncovers\n0 1\nbottom 0\ntop 1\n").unwrap_err();
        assert!(matches!(err, IoError::Parse { line: 6, .. }), "{err}");
    }

    #[test]
    fn cycle_rejected() {
        let err = parse("ilat 3\ncovers\n0 1\n1 0\n1 2\ninv 2 1 0\nbottom 0\ntop 2\n").unwrap_err();
        assert!(matches!(
            err,
            IoError::Validation(StructureError::NotAPartialOrder {
                axiom: OrderAxiom::Antisymmetry,
                ..
            })
        ));
    }

    #[test]
    fn comments_and_bad_pairs() {
        let ok = "# K3\nilat 3 # size\ncovers\n0 1\n\n1 2\ninv 2 1 0\nbottom 0\ntop 2\n";
        assert!(parse(ok).is_ok());
        let bad = "ilat 3\ncovers\n0 1 2\n";
        assert!(matches!(
            parse(bad).unwrap_err(),
            IoError::Parse { line: 3, .. }
        ));
    }

    #[test]
    fn dot_for_k3() {
        let d = to_dot(&catalog::k3(), "K3");
        assert_eq!(d.matches("style=dashed").count(), 2);
        assert!(d.contains("  1 -- 1 [style=dashed"));
        assert_eq!(
            d.lines()
                .filter(|l| l.ends_with("];") && l.contains("label"))
                .count(),
            3
        );
    }
}
