//! Named structures: small standard lattices, the forbidden shapes and the
//! subalgebras that occur in the forbidden-configuration argument.
//!
//! Labels use ASCII: `'` for the involution, `&` for meet and `|` for join.

use thiserror::Error;

use crate::classify::Class;
use crate::subalg::ForbiddenKind;
use crate::{constructs, Elem, InvolutiveLattice};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog name `{0}`")]
    UnknownName(String),
}

/// A catalog structure together with the facts asserted about it.
#[derive(Debug, Clone, Copy)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub summary: &'static str,
    build: fn() -> InvolutiveLattice,
    /// Class memberships that must hold (`true`) or fail (`false`).
    pub expected: &'static [(Class, bool)],
    pub tame: Option<bool>,
    /// Expected outcome of the forbidden-configuration search, if asserted.
    pub forbidden: Option<Option<ForbiddenKind>>,
}

impl CatalogEntry {
    pub fn build(&self) -> InvolutiveLattice {
        (self.build)()
    }
}

/// Builds a lattice from labelled covers. `pairs` lists involution pairs
/// (fixed points as `(a, a)`); `0` and `1` are paired automatically.
fn build(names: &[&str], covers: &[(&str, &str)], pairs: &[(&str, &str)]) -> InvolutiveLattice {
    let idx = |s: &str| -> Elem {
        names
            .iter()
            .position(|&n| n == s)
            .unwrap_or_else(|| panic!("unknown label {s}"))
    };
    let n = names.len();
    let mut inv: Vec<Elem> = (0..n).collect();
    for &(a, b) in pairs.iter().chain([("0", "1")].iter()) {
        if n == 1 {
            break;
        }
        inv[idx(a)] = idx(b);
        inv[idx(b)] = idx(a);
    }
    let cov: Vec<(Elem, Elem)> = covers.iter().map(|&(a, b)| (idx(a), idx(b))).collect();
    let (bottom, top) = (idx("0"), if n == 1 { 0 } else { idx("1") });
    InvolutiveLattice::from_covers(
        n,
        &cov,
        inv,
        bottom,
        top,
        Some(names.iter().map(|s| s.to_string()).collect()),
    )
    .expect("catalog structures are valid lattices")
}

pub fn k3() -> InvolutiveLattice {
    build(
        &["0", "1/2", "1"],
        &[("0", "1/2"), ("1/2", "1")],
        &[("1/2", "1/2")],
    )
}

pub fn b2() -> InvolutiveLattice {
    build(&["0", "1"], &[("0", "1")], &[])
}

pub fn b4() -> InvolutiveLattice {
    build(
        &["0", "a", "a'", "1"],
        &[("0", "a"), ("0", "a'"), ("a", "1"), ("a'", "1")],
        &[("a", "a'")],
    )
}

pub fn mo2() -> InvolutiveLattice {
    build(
        &["0", "a", "a'", "b", "b'", "1"],
        &[
            ("0", "a"),
            ("0", "a'"),
            ("0", "b"),
            ("0", "b'"),
            ("a", "1"),
            ("a'", "1"),
            ("b", "1"),
            ("b'", "1"),
        ],
        &[("a", "a'"), ("b", "b'")],
    )
}

pub fn b6() -> InvolutiveLattice {
    build(
        &["0", "x", "y", "y'", "x'", "1"],
        &[
            ("0", "x"),
            ("x", "y"),
            ("y", "1"),
            ("0", "y'"),
            ("y'", "x'"),
            ("x'", "1"),
        ],
        &[("x", "x'"), ("y", "y'")],
    )
}

pub fn b8() -> InvolutiveLattice {
    build(
        &["0", "z'", "x", "y'", "y", "x'", "z", "1"],
        &[
            ("0", "z'"),
            ("z'", "x"),
            ("z'", "y'"),
            ("x", "y"),
            ("y'", "x'"),
            ("y", "z"),
            ("x'", "z"),
            ("z", "1"),
        ],
        &[("x", "x'"), ("y", "y'"), ("z", "z'")],
    )
}

pub fn b8_star() -> InvolutiveLattice {
    build(
        &["0", "x", "y", "z", "z'", "y'", "x'", "1"],
        &[
            ("0", "x"),
            ("0", "y"),
            ("x", "z"),
            ("y", "z'"),
            ("z", "z'"),
            ("z", "y'"),
            ("z'", "x'"),
            ("y'", "1"),
            ("x'", "1"),
        ],
        &[("x", "x'"), ("y", "y'"), ("z", "z'")],
    )
}

pub fn b10() -> InvolutiveLattice {
    build(
        &[
            "0",
            "x",
            "y'",
            "x'&y",
            "y'|(x'&y)",
            "x|(x'&y)",
            "x'",
            "x|y'",
            "y",
            "1",
        ],
        &[
            ("0", "y'"),
            ("0", "x'&y"),
            ("0", "x"),
            ("y'", "y'|(x'&y)"),
            ("x'&y", "y'|(x'&y)"),
            ("x'&y", "x|(x'&y)"),
            ("x", "x|(x'&y)"),
            ("y'|(x'&y)", "x'"),
            ("y'|(x'&y)", "x|y'"),
            ("x|(x'&y)", "x|y'"),
            ("x|(x'&y)", "y"),
            ("x'", "1"),
            ("x|y'", "1"),
            ("y", "1"),
        ],
        &[
            ("x", "x'"),
            ("y", "y'"),
            ("x'&y", "x|y'"),
            ("y'|(x'&y)", "x|(x'&y)"),
        ],
    )
}

/// Super-paraorthomodular, with sharp `a, b` whose meet is not sharp.
pub fn pkl_b() -> InvolutiveLattice {
    build(
        &["0", "a'", "b'", "c'", "a", "b", "c", "1"],
        &[
            ("0", "b'"),
            ("0", "c'"),
            ("0", "a'"),
            ("c'", "a"),
            ("c'", "b"),
            ("b'", "c"),
            ("c'", "c"),
            ("a'", "c"),
            ("a", "1"),
            ("b", "1"),
            ("c", "1"),
        ],
        &[("a", "a'"), ("b", "b'"), ("c", "c'")],
    )
}

/// [`pkl_b`] with an extra bottom `d'` and top `d` inside the bounds.
pub fn pkl_c() -> InvolutiveLattice {
    build(
        &["0", "d'", "a'", "b'", "c'", "a", "b", "c", "d", "1"],
        &[
            ("0", "d'"),
            ("d'", "b'"),
            ("d'", "c'"),
            ("d'", "a'"),
            ("c'", "a"),
            ("c'", "b"),
            ("b'", "c"),
            ("c'", "c"),
            ("a'", "c"),
            ("a", "d"),
            ("b", "d"),
            ("c", "d"),
            ("d", "1"),
        ],
        &[("a", "a'"), ("b", "b'"), ("c", "c'"), ("d", "d'")],
    )
}

/// The congruence on [`pkl_c`] collapsing `{0, d'}` and `{d, 1}`.
pub fn pkl_c_theta() -> Vec<Vec<Elem>> {
    vec![vec![0, 1], vec![8, 9]]
}

/// The five-element diamond with atoms `a, b, a'` and `b = b'`.
pub fn diamond() -> InvolutiveLattice {
    build(
        &["0", "a", "b", "a'", "1"],
        &[
            ("0", "a"),
            ("0", "b"),
            ("0", "a'"),
            ("a", "1"),
            ("b", "1"),
            ("a'", "1"),
        ],
        &[("a", "a'"), ("b", "b")],
    )
}

/// Modular lattice where commuting pairs do not yield a distributive triple.
pub fn failure_fh() -> InvolutiveLattice {
    build(
        &["0", "a", "b", "c", "d", "a'", "b'", "c'", "1"],
        &[
            ("0", "a"),
            ("0", "b"),
            ("0", "c"),
            ("a", "d"),
            ("b", "d"),
            ("c", "d"),
            ("d", "a'"),
            ("d", "b'"),
            ("d", "c'"),
            ("a'", "1"),
            ("b'", "1"),
            ("c'", "1"),
        ],
        &[("a", "a'"), ("b", "b'"), ("c", "c'"), ("d", "d")],
    )
}

pub fn k3_times_b2() -> InvolutiveLattice {
    constructs::direct_product(&k3(), &b2())
}

// ============================================================================
// Subalgebras from the forbidden-configuration argument
// ============================================================================

pub fn f1() -> InvolutiveLattice {
    build(
        &[
            "0",
            "y&y'",
            "y'",
            "x|(y&y')",
            "x'&y",
            "y'|x",
            "y",
            "x'&(y|y')",
            "y|y'",
            "1",
        ],
        &[
            ("0", "y&y'"),
            ("y&y'", "y'"),
            ("y&y'", "x|(y&y')"),
            ("x|(y&y')", "x'&y"),
            ("y'", "y'|x"),
            ("x'&y", "y'|x"),
            ("x'&y", "y"),
            ("y'|x", "x'&(y|y')"),
            ("x'&(y|y')", "y|y'"),
            ("y", "y|y'"),
            ("y|y'", "1"),
        ],
        &[
            ("y", "y'"),
            ("y&y'", "y|y'"),
            ("x|(y&y')", "x'&(y|y')"),
            ("x'&y", "y'|x"),
        ],
    )
}

pub fn f2() -> InvolutiveLattice {
    build(
        &[
            "0",
            "y&y'",
            "y'",
            "x|(y&y')",
            "y&(x|y')",
            "y'|x",
            "x'&y",
            "y'|(x'&y)",
            "y",
            "x'&(y|y')",
            "y|y'",
            "1",
        ],
        &[
            ("0", "y&y'"),
            ("y&y'", "y'"),
            ("y&y'", "x|(y&y')"),
            ("x|(y&y')", "y&(x|y')"),
            ("y'", "y'|x"),
            ("y&(x|y')", "y'|x"),
            ("y&(x|y')", "x'&y"),
            ("y'|x", "y'|(x'&y)"),
            ("x'&y", "y'|(x'&y)"),
            ("x'&y", "y"),
            ("y'|(x'&y)", "x'&(y|y')"),
            ("x'&(y|y')", "y|y'"),
            ("y", "y|y'"),
            ("y|y'", "1"),
        ],
        &[
            ("y", "y'"),
            ("y&y'", "y|y'"),
            ("x|(y&y')", "x'&(y|y')"),
            ("y&(x|y')", "y'|(x'&y)"),
            ("y'|x", "x'&y"),
        ],
    )
}

pub fn f3() -> InvolutiveLattice {
    build(
        &[
            "0",
            "y&y'",
            "y'",
            "(x&x')|(y&y')",
            "x'&y",
            "y'|(x&x')",
            "y&(x|x')",
            "y'|x",
            "y",
            "(x|x')&(y|y')",
            "y|y'",
            "1",
        ],
        &[
            ("0", "y&y'"),
            ("y&y'", "y'"),
            ("y&y'", "(x&x')|(y&y')"),
            ("(x&x')|(y&y')", "x'&y"),
            ("y'", "y'|(x&x')"),
            ("x'&y", "y'|(x&x')"),
            ("x'&y", "y&(x|x')"),
            ("y'|(x&x')", "y'|x"),
            ("y&(x|x')", "y'|x"),
            ("y&(x|x')", "y"),
            ("y'|x", "(x|x')&(y|y')"),
            ("(x|x')&(y|y')", "y|y'"),
            ("y", "y|y'"),
            ("y|y'", "1"),
        ],
        &[
            ("y", "y'"),
            ("y&y'", "y|y'"),
            ("(x&x')|(y&y')", "(x|x')&(y|y')"),
            ("x'&y", "y'|x"),
            ("y'|(x&x')", "y&(x|x')"),
        ],
    )
}

pub fn f4() -> InvolutiveLattice {
    build(
        &[
            "0",
            "x&x'",
            "x",
            "(x&x')|(y&y')",
            "x'&y",
            "x|(y&y')",
            "x'&(y|y')",
            "y'|x",
            "x'",
            "(x|x')&(y|y')",
            "x|x'",
            "1",
        ],
        &[
            ("0", "x&x'"),
            ("x&x'", "x"),
            ("x&x'", "(x&x')|(y&y')"),
            ("(x&x')|(y&y')", "x'&y"),
            ("x", "x|(y&y')"),
            ("x'&y", "x|(y&y')"),
            ("x'&y", "x'&(y|y')"),
            ("x|(y&y')", "y'|x"),
            ("x'&(y|y')", "y'|x"),
            ("x'&(y|y')", "x'"),
            ("y'|x", "(x|x')&(y|y')"),
            ("(x|x')&(y|y')", "x|x'"),
            ("x'", "x|x'"),
            ("x|x'", "1"),
        ],
        &[
            ("x", "x'"),
            ("x&x'", "x|x'"),
            ("(x&x')|(y&y')", "(x|x')&(y|y')"),
            ("x'&y", "y'|x"),
            ("x|(y&y')", "x'&(y|y')"),
        ],
    )
}

pub fn f5() -> InvolutiveLattice {
    build(
        &[
            "0",
            "x&x'",
            "y'",
            "x'&y",
            "x",
            "y'|(x'&y)",
            "x|(x'&y)",
            "x'",
            "x|y'",
            "y",
            "x|x'",
            "1",
        ],
        &[
            ("0", "x&x'"),
            ("x&x'", "y'"),
            ("x&x'", "x'&y"),
            ("x&x'", "x"),
            ("y'", "y'|(x'&y)"),
            ("x'&y", "y'|(x'&y)"),
            ("x'&y", "x|(x'&y)"),
            ("x", "x|(x'&y)"),
            ("y'|(x'&y)", "x'"),
            ("y'|(x'&y)", "x|y'"),
            ("x|(x'&y)", "x|y'"),
            ("x|(x'&y)", "y"),
            ("x'", "x|x'"),
            ("x|y'", "x|x'"),
            ("y", "x|x'"),
            ("x|x'", "1"),
        ],
        &[
            ("x", "x'"),
            ("y", "y'"),
            ("x&x'", "x|x'"),
            ("x'&y", "x|y'"),
            ("y'|(x'&y)", "x|(x'&y)"),
        ],
    )
}

pub fn f6() -> InvolutiveLattice {
    build(
        &[
            "0",
            "x&x'",
            "x",
            "y&y'",
            "x'&(x|(y&y'))",
            "x|(y&y')",
            "x'&(y|y')",
            "x|(x'&(y|y'))",
            "y|y'",
            "x'",
            "x|x'",
            "1",
        ],
        &[
            ("0", "x&x'"),
            ("x&x'", "x"),
            ("x&x'", "y&y'"),
            ("y&y'", "x'&(x|(y&y'))"),
            ("x", "x|(y&y')"),
            ("x'&(x|(y&y'))", "x|(y&y')"),
            ("x'&(x|(y&y'))", "x'&(y|y')"),
            ("x|(y&y')", "x|(x'&(y|y'))"),
            ("x'&(y|y')", "x|(x'&(y|y'))"),
            ("x'&(y|y')", "x'"),
            ("x|(x'&(y|y'))", "y|y'"),
            ("y|y'", "x|x'"),
            ("x'", "x|x'"),
            ("x|x'", "1"),
        ],
        &[
            ("x", "x'"),
            ("x&x'", "x|x'"),
            ("y&y'", "y|y'"),
            ("x'&(x|(y&y'))", "x|(x'&(y|y'))"),
            ("x|(y&y')", "x'&(y|y')"),
        ],
    )
}

pub fn f7() -> InvolutiveLattice {
    build(
        &[
            "0",
            "y&y'",
            "y'",
            "x'&y",
            "x|(y&y')",
            "y'|(x'&y)",
            "x|(x'&y)",
            "x'&(y|y')",
            "x|y'",
            "y",
            "y|y'",
            "1",
        ],
        &[
            ("0", "y&y'"),
            ("y&y'", "y'"),
            ("y&y'", "x'&y"),
            ("y&y'", "x|(y&y')"),
            ("y'", "y'|(x'&y)"),
            ("x'&y", "y'|(x'&y)"),
            ("x'&y", "x|(x'&y)"),
            ("x|(y&y')", "x|(x'&y)"),
            ("y'|(x'&y)", "x'&(y|y')"),
            ("y'|(x'&y)", "x|y'"),
            ("x|(x'&y)", "x|y'"),
            ("x|(x'&y)", "y"),
            ("x'&(y|y')", "y|y'"),
            ("x|y'", "y|y'"),
            ("y", "y|y'"),
            ("y|y'", "1"),
        ],
        &[
            ("y", "y'"),
            ("y&y'", "y|y'"),
            ("x|(y&y')", "x'&(y|y')"),
            ("x'&y", "x|y'"),
            ("y'|(x'&y)", "x|(x'&y)"),
        ],
    )
}

pub fn f8() -> InvolutiveLattice {
    build(
        &[
            "0",
            "y&y'",
            "y'",
            "(y&y')|(x&x')",
            "y&(y'|(x&x'))",
            "y'|(x&x')",
            "y&(x|x')",
            "y'|(y&(x|x'))",
            "y",
            "(y|y')&(x|x')",
            "y|y'",
            "1",
        ],
        &[
            ("0", "y&y'"),
            ("y&y'", "y'"),
            ("y&y'", "(y&y')|(x&x')"),
            ("(y&y')|(x&x')", "y&(y'|(x&x'))"),
            ("y'", "y'|(x&x')"),
            ("y&(y'|(x&x'))", "y'|(x&x')"),
            ("y&(y'|(x&x'))", "y&(x|x')"),
            ("y'|(x&x')", "y'|(y&(x|x'))"),
            ("y&(x|x')", "y'|(y&(x|x'))"),
            ("y&(x|x')", "y"),
            ("y'|(y&(x|x'))", "(y|y')&(x|x')"),
            ("(y|y')&(x|x')", "y|y'"),
            ("y", "y|y'"),
            ("y|y'", "1"),
        ],
        &[
            ("y", "y'"),
            ("y&y'", "y|y'"),
            ("(y&y')|(x&x')", "(y|y')&(x|x')"),
            ("y&(y'|(x&x'))", "y'|(y&(x|x'))"),
            ("y'|(x&x')", "y&(x|x')"),
        ],
    )
}

pub fn f8_star() -> InvolutiveLattice {
    build(
        &[
            "0",
            "x&x'",
            "x",
            "(y&y')|(x&x')",
            "x'&(x|(y&y'))",
            "x|(y&y')",
            "x'&(y|y')",
            "x|(x'&(y|y'))",
            "x'",
            "(y|y')&(x|x')",
            "x|x'",
            "1",
        ],
        &[
            ("0", "x&x'"),
            ("x&x'", "x"),
            ("x&x'", "(y&y')|(x&x')"),
            ("(y&y')|(x&x')", "x'&(x|(y&y'))"),
            ("x", "x|(y&y')"),
            ("x'&(x|(y&y'))", "x|(y&y')"),
            ("x'&(x|(y&y'))", "x'&(y|y')"),
            ("x|(y&y')", "x|(x'&(y|y'))"),
            ("x'&(y|y')", "x|(x'&(y|y'))"),
            ("x'&(y|y')", "x'"),
            ("x|(x'&(y|y'))", "(y|y')&(x|x')"),
            ("(y|y')&(x|x')", "x|x'"),
            ("x'", "x|x'"),
            ("x|x'", "1"),
        ],
        &[
            ("x", "x'"),
            ("x&x'", "x|x'"),
            ("(y&y')|(x&x')", "(y|y')&(x|x')"),
            ("x'&(x|(y&y'))", "x|(x'&(y|y'))"),
            ("x|(y&y')", "x'&(y|y')"),
        ],
    )
}

pub fn f9() -> InvolutiveLattice {
    build(
        &[
            "0",
            "(y&y')|(x&x')",
            "y'|(x&x')",
            "x'&y",
            "x|(y&y')",
            "y'|(x'&y)",
            "x|(x'&y)",
            "x'&(y|y')",
            "x|y'",
            "y&(x|x')",
            "x|x'",
            "1",
        ],
        &[
            ("0", "(y&y')|(x&x')"),
            ("(y&y')|(x&x')", "y'|(x&x')"),
            ("(y&y')|(x&x')", "x'&y"),
            ("(y&y')|(x&x')", "x|(y&y')"),
            ("y'|(x&x')", "y'|(x'&y)"),
            ("x'&y", "y'|(x'&y)"),
            ("x'&y", "x|(x'&y)"),
            ("x|(y&y')", "x|(x'&y)"),
            ("y'|(x'&y)", "x'&(y|y')"),
            ("y'|(x'&y)", "x|y'"),
            ("x|(x'&y)", "x|y'"),
            ("x|(x'&y)", "y&(x|x')"),
            ("x'&(y|y')", "x|x'"),
            ("x|y'", "x|x'"),
            ("y&(x|x')", "x|x'"),
            ("x|x'", "1"),
        ],
        &[
            ("(y&y')|(x&x')", "x|x'"),
            ("y'|(x&x')", "y&(x|x')"),
            ("x|(y&y')", "x'&(y|y')"),
            ("x'&y", "x|y'"),
            ("y'|(x'&y)", "x|(x'&y)"),
        ],
    )
}

pub fn f10() -> InvolutiveLattice {
    build(
        &[
            "0",
            "y&y'",
            "y'",
            "(y&y')|(x&x')",
            "a'",
            "y'|a'",
            "y&a",
            "a",
            "y",
            "(y|y')&(x|x')",
            "y|y'",
            "1",
        ],
        &[
            ("0", "y&y'"),
            ("y&y'", "y'"),
            ("y&y'", "(y&y')|(x&x')"),
            ("(y&y')|(x&x')", "a'"),
            ("y'", "y'|a'"),
            ("a'", "y'|a'"),
            ("a'", "y&a"),
            ("y'|a'", "a"),
            ("y&a", "a"),
            ("y&a", "y"),
            ("a", "(y|y')&(x|x')"),
            ("(y|y')&(x|x')", "y|y'"),
            ("y", "y|y'"),
            ("y|y'", "1"),
        ],
        &[
            ("y", "y'"),
            ("y&y'", "y|y'"),
            ("(y&y')|(x&x')", "(y|y')&(x|x')"),
            ("a", "a'"),
            ("y'|a'", "y&a"),
        ],
    )
}

pub fn f11() -> InvolutiveLattice {
    build(
        &[
            "0",
            "(x&x')|(y&y')",
            "y'|(x&x')",
            "a'",
            "x|(y&y')",
            "y'|a'",
            "x|a'",
            "x'&y",
            "x'&a",
            "y&a",
            "y'|x",
            "x'&(y|y')",
            "a",
            "y&(x|x')",
            "(x|x')&(y|y')",
            "1",
        ],
        &[
            ("0", "(x&x')|(y&y')"),
            ("(x&x')|(y&y')", "y'|(x&x')"),
            ("(x&x')|(y&y')", "a'"),
            ("(x&x')|(y&y')", "x|(y&y')"),
            ("y'|(x&x')", "y'|a'"),
            ("a'", "y'|a'"),
            ("a'", "x|a'"),
            ("x|(y&y')", "x|a'"),
            ("a'", "x'&y"),
            ("y'|a'", "x'&a"),
            ("y'|a'", "y'|x"),
            ("x'&y", "x'&a"),
            ("x'&y", "y&a"),
            ("x|a'", "y&a"),
            ("x|a'", "y'|x"),
            ("x'&a", "x'&(y|y')"),
            ("x'&a", "a"),
            ("y&a", "a"),
            ("y&a", "y&(x|x')"),
            ("y'|x", "a"),
            ("x'&(y|y')", "(x|x')&(y|y')"),
            ("a", "(x|x')&(y|y')"),
            ("y&(x|x')", "(x|x')&(y|y')"),
            ("(x|x')&(y|y')", "1"),
        ],
        &[
            ("(x&x')|(y&y')", "(x|x')&(y|y')"),
            ("y'|(x&x')", "y&(x|x')"),
            ("x|(y&y')", "x'&(y|y')"),
            ("a", "a'"),
            ("y'|a'", "y&a"),
            ("x|a'", "x'&a"),
            ("x'&y", "y'|x"),
        ],
    )
}

/// The congruence on [`f1`] collapsing `{0, y&y'}` and `{y|y', 1}`.
pub fn f1_theta() -> Vec<Vec<Elem>> {
    vec![vec![0, 1], vec![8, 9]]
}

/// The congruence on [`f11`] whose quotient is B10.
pub fn f11_theta() -> Vec<Vec<Elem>> {
    let l = f11();
    let e = |s: &str| l.find(s).expect("label");
    [
        ["x'&y", "a'"],
        ["y'|x", "a"],
        ["x'&a", "y'|a'"],
        ["x|a'", "y&a"],
        ["(x&x')|(y&y')", "0"],
        ["(x|x')&(y|y')", "1"],
    ]
    .iter()
    .map(|p| {
        let mut v = vec![e(p[0]), e(p[1])];
        v.sort();
        v
    })
    .collect()
}

// ============================================================================
// Registry
// ============================================================================

use Class::*;

const QUOT8: Option<Option<ForbiddenKind>> = Some(Some(ForbiddenKind::QuotB8Star));
const QUOT10: Option<Option<ForbiddenKind>> = Some(Some(ForbiddenKind::QuotB10));
const F_FACTS: &[(Class, bool)] = &[(Pkl, true), (Sp1, true), (Sp2, false), (Spo, false)];

pub const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "K3",
        summary: "three-element Kleene chain with a fixed midpoint",
        build: k3,
        expected: &[(Kl, true), (Spo, true), (Residuation, true), (Op, false)],
        tame: Some(true),
        forbidden: Some(None),
    },
    CatalogEntry {
        name: "B2",
        summary: "two-element Boolean algebra",
        build: b2,
        expected: &[(Ba, true), (Residuation, true), (QuasiA, true)],
        tame: Some(true),
        forbidden: Some(None),
    },
    CatalogEntry {
        name: "B4",
        summary: "four-element Boolean algebra",
        build: b4,
        expected: &[(Ba, true)],
        tame: Some(true),
        forbidden: Some(None),
    },
    CatalogEntry {
        name: "MO2",
        summary: "orthomodular lattice with two blocks of four elements",
        build: mo2,
        expected: &[(Oml, true), (Distributive, false), (Mol, true)],
        tame: Some(true),
        forbidden: Some(None),
    },
    CatalogEntry {
        name: "B6",
        summary: "benzene ring ortholattice",
        build: b6,
        expected: &[
            (Pkl, true),
            (Ol, true),
            (Poml, false),
            (Oml, false),
            (Sp1, false),
        ],
        tame: Some(false),
        forbidden: Some(Some(ForbiddenKind::B6)),
    },
    CatalogEntry {
        name: "B8",
        summary: "paraorthomodular, non-modular, fails SP1",
        build: b8,
        expected: &[(Poml, true), (Sp1, false), (Modular, false), (Spo, false)],
        tame: Some(false),
        forbidden: Some(Some(ForbiddenKind::B8)),
    },
    CatalogEntry {
        name: "B8*",
        summary: "pseudo-Kleene lattice failing SP2",
        build: b8_star,
        expected: &[(Pkl, true), (Sp2, false)],
        tame: Some(false),
        forbidden: QUOT8,
    },
    CatalogEntry {
        name: "B10",
        summary: "pseudo-Kleene lattice failing SP2",
        build: b10,
        expected: &[(Pkl, true), (Sp2, false)],
        tame: Some(false),
        forbidden: QUOT10,
    },
    CatalogEntry {
        name: "B",
        summary: "super-paraorthomodular; sharp elements not closed under meet",
        build: pkl_b,
        expected: &[(Spo, true), (QuasiA, false)],
        tame: Some(true),
        forbidden: Some(None),
    },
    CatalogEntry {
        name: "C",
        summary: "B with an extra bottom and top layer; satisfies (A)",
        build: pkl_c,
        expected: &[(Spo, true), (QuasiA, true)],
        tame: Some(true),
        forbidden: Some(None),
    },
    CatalogEntry {
        name: "Diamond",
        summary: "diamond with a fixed atom; C1 and C3 hold but C2 fails",
        build: diamond,
        expected: &[(Spo, true), (Mpkl, true)],
        tame: Some(true),
        forbidden: Some(None),
    },
    CatalogEntry {
        name: "FH",
        summary: "modular example where commuting pairs give a non-distributive triple",
        build: failure_fh,
        expected: &[(Spo, true), (Mpkl, true)],
        tame: Some(true),
        forbidden: Some(None),
    },
    CatalogEntry {
        name: "K3xB2",
        summary: "product of K3 and B2; fails the residuation condition",
        build: k3_times_b2,
        expected: &[(Kl, true), (Residuation, false)],
        tame: Some(true),
        forbidden: Some(None),
    },
    CatalogEntry {
        name: "F1",
        summary: "quotient B8* case with x <= x'",
        build: f1,
        expected: F_FACTS,
        tame: Some(false),
        forbidden: QUOT8,
    },
    CatalogEntry {
        name: "F2",
        summary: "quotient B8* case with x'&y incomparable to y'|x",
        build: f2,
        expected: F_FACTS,
        tame: Some(false),
        forbidden: QUOT8,
    },
    CatalogEntry {
        name: "F3",
        summary: "quotient B8* case, y-side",
        build: f3,
        expected: F_FACTS,
        tame: Some(false),
        forbidden: QUOT8,
    },
    CatalogEntry {
        name: "F4",
        summary: "quotient B8* case, x-side",
        build: f4,
        expected: F_FACTS,
        tame: Some(false),
        forbidden: QUOT8,
    },
    CatalogEntry {
        name: "F5",
        summary: "quotient B10 case with x&x' = y&y'",
        build: f5,
        expected: F_FACTS,
        tame: Some(false),
        forbidden: QUOT10,
    },
    CatalogEntry {
        name: "F6",
        summary: "quotient B8* case",
        build: f6,
        expected: F_FACTS,
        tame: Some(false),
        forbidden: QUOT8,
    },
    CatalogEntry {
        name: "F7",
        summary: "quotient B10 case",
        build: f7,
        expected: F_FACTS,
        tame: Some(false),
        forbidden: QUOT10,
    },
    CatalogEntry {
        name: "F8",
        summary: "quotient B8* case, y-side",
        build: f8,
        expected: F_FACTS,
        tame: Some(false),
        forbidden: QUOT8,
    },
    CatalogEntry {
        name: "F8*",
        summary: "quotient B8* case, x-side",
        build: f8_star,
        expected: F_FACTS,
        tame: Some(false),
        forbidden: QUOT8,
    },
    CatalogEntry {
        name: "F9",
        summary: "quotient B10 case",
        build: f9,
        expected: F_FACTS,
        tame: Some(false),
        forbidden: QUOT10,
    },
    CatalogEntry {
        name: "F10",
        summary: "quotient B8* case with a' = (x'&y)&(y'|x)",
        build: f10,
        expected: F_FACTS,
        tame: Some(false),
        forbidden: QUOT8,
    },
    CatalogEntry {
        name: "F11",
        summary: "quotient B10 case with a' = (x'&y)&(y'|x)",
        build: f11,
        expected: F_FACTS,
        tame: Some(false),
        forbidden: QUOT10,
    },
];

pub fn entry(name: &str) -> Result<&'static CatalogEntry, CatalogError> {
    ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| CatalogError::UnknownName(name.to_string()))
}

pub fn get(name: &str) -> Result<InvolutiveLattice, CatalogError> {
    entry(name).map(CatalogEntry::build)
}

pub fn names() -> impl Iterator<Item = &'static str> {
    ENTRIES.iter().map(|e| e.name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_builds() {
        for e in ENTRIES {
            let l = e.build();
            assert!(l.n() >= 2, "{}", e.name);
        }
    }

    #[test]
    fn unknown_name() {
        assert_eq!(
            get("nope").unwrap_err(),
            CatalogError::UnknownName("nope".into())
        );
    }

    #[test]
    fn sizes() {
        let sizes: Vec<(&str, usize)> = ENTRIES.iter().map(|e| (e.name, e.build().n())).collect();
        for (name, n) in [
            ("K3", 3),
            ("B8", 8),
            ("B8*", 8),
            ("B10", 10),
            ("F11", 16),
            ("FH", 9),
        ] {
            assert!(sizes.contains(&(name, n)), "{name}");
        }
    }
}
