//! Exhaustive generation of small bounded lattices with antitone involution,
//! one per isomorphism class.
//!
//! Lattices are grown as naturally labelled posets on the non-bound
//! elements (each new element sits above an order ideal of the earlier
//! ones), filtered, and deduplicated by canonical form. Antitone
//! involutions are then layered on each lattice by backtracking and
//! deduplicated again.

use std::collections::HashMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::classify::{Class, Classifier};
use crate::{Elem, InvolutiveLattice, InvolutivePoset, RawStructure};

pub const DEFAULT_CAP: usize = 8;
pub const MAX_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("size {n} exceeds the enumeration budget {cap}")]
    BudgetExceeded { n: usize, cap: usize },
}

// ============================================================================
// Canonical form
// ============================================================================

/// Canonical relabelling: `order[p]` is the original element placed at
/// position `p`; `code` is the order matrix and involution read in that
/// order, so two structures are isomorphic iff their codes agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canonical {
    pub order: Vec<Elem>,
    pub code: Vec<u32>,
}

struct Canonizer<'a> {
    n: usize,
    leq: &'a dyn Fn(Elem, Elem) -> bool,
    inv: Option<&'a [Elem]>,
    best: Option<Canonical>,
}

impl Canonizer<'_> {
    fn refine(&self, colors: &mut [u32]) {
        let n = self.n;
        let mut classes = count_classes(colors);
        loop {
            let sigs: Vec<(u32, Vec<u32>, Vec<u32>, u32)> = (0..n)
                .map(|x| {
                    let mut below: Vec<u32> = (0..n)
                        .filter(|&y| y != x && (self.leq)(y, x))
                        .map(|y| colors[y])
                        .collect();
                    let mut above: Vec<u32> = (0..n)
                        .filter(|&y| y != x && (self.leq)(x, y))
                        .map(|y| colors[y])
                        .collect();
                    below.sort_unstable();
                    above.sort_unstable();
                    let ic = self.inv.map_or(0, |inv| colors[inv[x]]);
                    (colors[x], below, above, ic)
                })
                .collect();
            let mut distinct = sigs.clone();
            distinct.sort();
            distinct.dedup();
            for x in 0..n {
                colors[x] = distinct.binary_search(&sigs[x]).expect("present") as u32;
            }
            let now = distinct.len();
            if now == classes {
                return;
            }
            classes = now;
        }
    }

    fn code(&self, order: &[Elem]) -> Vec<u32> {
        let n = self.n;
        let mut pos = vec![0; n];
        for (p, &x) in order.iter().enumerate() {
            pos[x] = p;
        }
        let mut code = Vec::with_capacity(n * n / 32 + n + 1);
        let mut word = 0u32;
        let mut bits = 0;
        for &a in order {
            for &b in order {
                word = (word << 1) | (self.leq)(a, b) as u32;
                bits += 1;
                if bits == 32 {
                    code.push(word);
                    word = 0;
                    bits = 0;
                }
            }
        }
        code.push(word);
        if let Some(inv) = self.inv {
            code.extend(order.iter().map(|&x| pos[inv[x]] as u32));
        }
        code
    }

    fn search(&mut self, mut colors: Vec<u32>) {
        self.refine(&mut colors);
        let n = self.n;
        let mut counts = vec![0usize; n];
        for &c in &colors {
            counts[c as usize] += 1;
        }
        match counts.iter().position(|&k| k > 1) {
            None => {
                let mut order = vec![0; n];
                for x in 0..n {
                    order[colors[x] as usize] = x;
                }
                let code = self.code(&order);
                if self.best.as_ref().is_none_or(|b| code < b.code) {
                    self.best = Some(Canonical { order, code });
                }
            }
            Some(cell) => {
                let cell = cell as u32;
                for v in (0..n).filter(|&x| colors[x] == cell) {
                    let next = colors
                        .iter()
                        .enumerate()
                        .map(|(x, &c)| {
                            if c > cell || (c == cell && x != v) {
                                c + 1
                            } else {
                                c
                            }
                        })
                        .collect();
                    self.search(next);
                }
            }
        }
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut v = colors.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

fn canonize(n: usize, leq: &dyn Fn(Elem, Elem) -> bool, inv: Option<&[Elem]>) -> Canonical {
    let mut c = Canonizer {
        n,
        leq,
        inv,
        best: None,
    };
    // Initial colours: (down-set size, up-set size); bottom and top are
    // therefore first and last.
    let keys: Vec<(usize, usize)> = (0..n)
        .map(|x| {
            let below = (0..n).filter(|&y| leq(y, x)).count();
            (below, n - (0..n).filter(|&y| leq(x, y)).count())
        })
        .collect();
    let mut distinct = keys.clone();
    distinct.sort();
    distinct.dedup();
    let colors = keys
        .iter()
        .map(|k| distinct.binary_search(k).expect("present") as u32)
        .collect();
    c.search(colors);
    c.best.expect("at least one leaf")
}

/// Canonical form of a poset with its involution.
pub fn canonical_form(p: &InvolutivePoset) -> Canonical {
    canonize(p.n(), &|a, b| p.leq(a, b), Some(p.inv_map()))
}

/// Canonical form of the order alone.
pub fn canonical_order_form(p: &InvolutivePoset) -> Canonical {
    canonize(p.n(), &|a, b| p.leq(a, b), None)
}

/// The structure relabelled into canonical order (labels dropped).
pub fn canonical_relabel(p: &InvolutivePoset) -> InvolutivePoset {
    relabel(p, &canonical_form(p).order)
}

fn relabel(p: &InvolutivePoset, order: &[Elem]) -> InvolutivePoset {
    let n = p.n();
    let mut pos = vec![0; n];
    for (i, &x) in order.iter().enumerate() {
        pos[x] = i;
    }
    InvolutivePoset::validate(RawStructure {
        leq: order
            .iter()
            .map(|&a| order.iter().map(|&b| p.leq(a, b)).collect())
            .collect(),
        inv: order.iter().map(|&x| pos[p.inv(x)]).collect(),
        bottom: pos[p.bottom()],
        top: pos[p.top()],
        labels: None,
    })
    .expect("relabelling preserves validity")
}

// ============================================================================
// Lattices
// ============================================================================

/// Strict down-sets of the middle elements as bit masks.
type Middle = Vec<u32>;

fn grow(m: usize, below: &mut Middle, out: &mut Vec<Middle>) {
    let i = below.len();
    if i == m {
        if middle_is_lattice(below) && self_dual_counts(below) {
            out.push(below.clone());
        }
        return;
    }
    for d in 0u32..(1 << i) {
        let ideal = (0..i).all(|j| d >> j & 1 == 0 || below[j] & !d == 0);
        if ideal {
            below.push(d);
            grow(m, below, out);
            below.pop();
        }
    }
}

fn above_masks(below: &Middle) -> Middle {
    let m = below.len();
    let mut above = vec![0u32; m];
    for (j, &b) in below.iter().enumerate() {
        for (i, a) in above.iter_mut().enumerate() {
            if b >> i & 1 == 1 {
                *a |= 1 << j;
            }
        }
    }
    above
}

/// With bounds adjoined, a finite poset is a lattice iff every pair of
/// middle elements has a least common upper bound.
fn middle_is_lattice(below: &Middle) -> bool {
    let m = below.len();
    let above = above_masks(below);
    let up = |x: usize| above[x] | 1 << x;
    for a in 0..m {
        for b in a + 1..m {
            let common = up(a) & up(b);
            if common == 0 {
                continue;
            }
            let has_least = (0..m).any(|u| common >> u & 1 == 1 && common & !up(u) == 0);
            if !has_least {
                return false;
            }
        }
    }
    true
}

/// A necessary condition for an order-reversing bijection.
fn self_dual_counts(below: &Middle) -> bool {
    let above = above_masks(below);
    let mut d: Vec<u32> = below.iter().map(|b| b.count_ones()).collect();
    let mut u: Vec<u32> = above.iter().map(|a| a.count_ones()).collect();
    d.sort_unstable();
    u.sort_unstable();
    d == u
}

fn middle_to_leq(below: &Middle) -> Vec<Vec<bool>> {
    let m = below.len();
    let n = m + 2;
    (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    a == b
                        || a == 0
                        || b == n - 1
                        || (a != n - 1 && b != 0 && below[b - 1] >> (a - 1) & 1 == 1)
                })
                .collect()
        })
        .collect()
}

/// Order matrices of all self-dual lattices on `n >= 2` elements, one per
/// isomorphism class of the order, bottom at 0 and top at `n - 1`.
fn self_dual_lattices(n: usize) -> Vec<Vec<Vec<bool>>> {
    let m = n - 2;
    let mut raw = Vec::new();
    grow(m, &mut Vec::with_capacity(m), &mut raw);
    let mut unique: HashMap<Vec<u32>, Vec<Vec<bool>>> = raw
        .par_iter()
        .map(|below| {
            let leq = middle_to_leq(below);
            let c = canonize(n, &|a, b| leq[a][b], None);
            (c.code, leq)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    let mut keys: Vec<Vec<u32>> = unique.keys().cloned().collect();
    keys.sort();
    keys.into_iter()
        .map(|k| unique.remove(&k).expect("key"))
        .collect()
}

/// All antitone involutions of a bounded order, by backtracking.
fn antitone_involutions(leq: &[Vec<bool>]) -> Vec<Vec<Elem>> {
    let n = leq.len();
    let below: Vec<usize> = (0..n)
        .map(|x| (0..n).filter(|&y| leq[y][x]).count())
        .collect();
    let above: Vec<usize> = (0..n)
        .map(|x| (0..n).filter(|&y| leq[x][y]).count())
        .collect();
    let mut inv = vec![usize::MAX; n];
    let mut out = Vec::new();

    fn consistent(leq: &[Vec<bool>], inv: &[Elem], x: Elem) -> bool {
        let ix = inv[x];
        inv.iter().enumerate().all(|(a, &ia)| {
            ia == usize::MAX || ((!leq[a][x] || leq[ix][ia]) && (!leq[x][a] || leq[ia][ix]))
        })
    }

    fn go(
        leq: &[Vec<bool>],
        below: &[usize],
        above: &[usize],
        inv: &mut Vec<Elem>,
        out: &mut Vec<Vec<Elem>>,
    ) {
        let n = leq.len();
        let Some(x) = inv.iter().position(|&v| v == usize::MAX) else {
            out.push(inv.clone());
            return;
        };
        for y in x..n {
            if inv[y] != usize::MAX || below[x] != above[y] || above[x] != below[y] {
                continue;
            }
            inv[x] = y;
            inv[y] = x;
            if consistent(leq, inv, x) && consistent(leq, inv, y) {
                go(leq, below, above, inv, out);
            }
            inv[x] = usize::MAX;
            inv[y] = usize::MAX;
        }
    }

    go(leq, &below, &above, &mut inv, &mut out);
    out
}

/// Every bounded lattice with antitone involution on `n` elements, up to
/// isomorphism, in canonical form and sorted by canonical code.
pub fn all_models(n: usize, cap: usize) -> Result<Vec<InvolutiveLattice>, EnumError> {
    let cap = cap.min(MAX_CAP);
    if n > cap {
        return Err(EnumError::BudgetExceeded { n, cap });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        let p = InvolutivePoset::validate(RawStructure {
            leq: vec![vec![true]],
            inv: vec![0],
            bottom: 0,
            top: 0,
            labels: None,
        })
        .expect("one-point structure");
        return Ok(vec![InvolutiveLattice::try_lattice(p).expect("lattice")]);
    }
    let lattices = self_dual_lattices(n);
    let mut found: Vec<(Vec<u32>, InvolutivePoset)> = lattices
        .par_iter()
        .flat_map_iter(|leq| {
            let mut local: HashMap<Vec<u32>, InvolutivePoset> = HashMap::new();
            for inv in antitone_involutions(leq) {
                let p = InvolutivePoset::validate(RawStructure {
                    leq: leq.clone(),
                    inv,
                    bottom: 0,
                    top: n - 1,
                    labels: None,
                })
                .expect("antitone involution on a bounded order");
                let c = canonical_form(&p);
                local.entry(c.code).or_insert_with(|| relabel(&p, &c.order));
            }
            local.into_iter()
        })
        .collect();
    found.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(found
        .into_iter()
        .map(|(_, p)| InvolutiveLattice::try_lattice(p).expect("enumerated orders are lattices"))
        .collect())
}

/// Models on `n` elements belonging to every class in `constraints`.
pub fn enumerate_models(
    n: usize,
    constraints: &[Class],
    cap: usize,
) -> Result<Vec<InvolutiveLattice>, EnumError> {
    let all = all_models(n, cap)?;
    Ok(all
        .into_par_iter()
        .filter(|l| {
            let c = Classifier::for_lattice(l);
            constraints.iter().all(|&k| c.holds(k))
        })
        .collect())
}
