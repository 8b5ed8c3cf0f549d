//! Structure-building operations: ordinal sums, products, the interval
//! algebra over an orthomodular lattice, localizers and Sasaki-type
//! operations.

use thiserror::Error;

use crate::classify::{self, Class, Classifier, Verdict, Witness};
use crate::{Elem, InvolutiveLattice, InvolutivePoset, RawStructure};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("input is not an orthomodular lattice")]
    NotOrthomodular,
}

fn lattice_from(
    leq: Vec<Vec<bool>>,
    inv: Vec<Elem>,
    bottom: Elem,
    top: Elem,
    labels: Vec<String>,
) -> InvolutiveLattice {
    InvolutiveLattice::from_raw(RawStructure {
        leq,
        inv,
        bottom,
        top,
        labels: Some(labels),
    })
    .expect("construction yields a valid lattice")
}

fn fresh_label(base: &str, taken: &[String]) -> String {
    let mut s = base.to_string();
    while taken.contains(&s) {
        s.push('*');
    }
    s
}

/// Adjoins a new bottom (index 0) and a new top (index `n + 1`), swapped by
/// the involution; old elements shift up by one.
pub fn ordinal_sum(l: &InvolutiveLattice) -> InvolutiveLattice {
    let n = l.n();
    let m = n + 2;
    let leq = (0..m)
        .map(|a| {
            (0..m)
                .map(|b| a == 0 || b == m - 1 || (a != m - 1 && b != 0 && l.leq(a - 1, b - 1)))
                .collect()
        })
        .collect();
    let mut inv = vec![m - 1];
    inv.extend(l.elements().map(|x| l.inv(x) + 1));
    inv.push(0);
    let old: Vec<String> = l.elements().map(|x| l.label(x)).collect();
    let mut labels = vec![fresh_label("0", &old)];
    labels.extend(old.iter().cloned());
    labels.push(fresh_label("1", &old));
    lattice_from(leq, inv, 0, m - 1, labels)
}

/// Componentwise product; the pair `(i, j)` has index `i * |b| + j`.
pub fn direct_product(a: &InvolutiveLattice, b: &InvolutiveLattice) -> InvolutiveLattice {
    let (na, nb) = (a.n(), b.n());
    let m = na * nb;
    let split = |k: Elem| (k / nb, k % nb);
    let leq = (0..m)
        .map(|p| {
            let (i, j) = split(p);
            (0..m)
                .map(|q| {
                    let (k, l) = split(q);
                    a.leq(i, k) && b.leq(j, l)
                })
                .collect()
        })
        .collect();
    let inv = (0..m)
        .map(|p| {
            let (i, j) = split(p);
            a.inv(i) * nb + b.inv(j)
        })
        .collect();
    let labels = (0..m)
        .map(|p| {
            let (i, j) = split(p);
            format!("({},{})", a.label(i), b.label(j))
        })
        .collect();
    lattice_from(
        leq,
        inv,
        a.bottom() * nb + b.bottom(),
        a.top() * nb + b.top(),
        labels,
    )
}

/// Pairs `(x, y)` with `x <= y`, ordered componentwise, with involution
/// `(a, b) ↦ (b′, a′)`. Carrier listed in lexicographic index order.
pub fn moisil_interval(
    a: &InvolutiveLattice,
) -> Result<(InvolutiveLattice, Vec<(Elem, Elem)>), ConstructError> {
    if !Classifier::for_lattice(a).holds(Class::Oml) {
        return Err(ConstructError::NotOrthomodular);
    }
    let pairs: Vec<(Elem, Elem)> = a
        .elements()
        .flat_map(|x| {
            a.elements()
                .filter(move |&y| a.leq(x, y))
                .map(move |y| (x, y))
        })
        .collect();
    let index = |p: (Elem, Elem)| pairs.binary_search(&p).expect("pair in carrier");
    let leq = pairs
        .iter()
        .map(|&(x1, y1)| {
            pairs
                .iter()
                .map(|&(x2, y2)| a.leq(x1, x2) && a.leq(y1, y2))
                .collect()
        })
        .collect();
    let inv = pairs
        .iter()
        .map(|&(x, y)| index((a.inv(y), a.inv(x))))
        .collect();
    let labels = pairs
        .iter()
        .map(|&(x, y)| format!("({},{})", a.label(x), a.label(y)))
        .collect();
    let bottom = index((a.bottom(), a.bottom()));
    let top = index((a.top(), a.top()));
    Ok((lattice_from(leq, inv, bottom, top, labels), pairs))
}

// ============================================================================
// Localizers
// ============================================================================

/// The interval `[0_{x,y}, 1_{x,y}]` with the inherited operations.
#[derive(Debug, Clone)]
pub struct Localizer {
    pub lo: Elem,
    pub hi: Elem,
    /// Parent indices of the interval, ascending.
    pub members: Vec<Elem>,
    pub lattice: InvolutiveLattice,
}

impl Localizer {
    /// Index in [`Localizer::lattice`] of a parent element of the interval.
    pub fn local_index(&self, parent: Elem) -> Option<Elem> {
        self.members.binary_search(&parent).ok()
    }
}

/// Builds `Local(x, y)`. The interval is closed under `′` because
/// `0_{x,y}′ = 1_{x,y}`; this is asserted during construction.
pub fn localizer(l: &InvolutiveLattice, x: Elem, y: Elem) -> Localizer {
    let lo = classify::zero_xy(l, x, y);
    let hi = classify::one_xy(l, x, y);
    assert_eq!(
        l.inv(lo),
        hi,
        "localizer bounds are swapped by the involution"
    );
    let members: Vec<Elem> = l
        .elements()
        .filter(|&z| l.leq(lo, z) && l.leq(z, hi))
        .collect();
    let pos = |z: Elem| members.binary_search(&z).expect("interval closed under ′");
    let leq = members
        .iter()
        .map(|&a| members.iter().map(|&b| l.leq(a, b)).collect())
        .collect();
    let inv = members.iter().map(|&z| pos(l.inv(z))).collect();
    let labels = members.iter().map(|&z| l.label(z)).collect();
    let lattice = lattice_from(leq, inv, pos(lo), pos(hi), labels);
    Localizer {
        lo,
        hi,
        members,
        lattice,
    }
}

/// `π_x(y) = (y ∧ (x ∨ x′)) ∨ (x ∧ x′)`.
pub fn pi(l: &InvolutiveLattice, x: Elem, y: Elem) -> Elem {
    let xi = l.inv(x);
    l.join(l.meet(y, l.join(x, xi)), l.meet(x, xi))
}

/// Checks `π_x(y) = π_{0_{x,y}}(y)` and `π_y(x) = π_{0_{x,y}}(x)` on all
/// pairs. These hold in every pseudo-Kleene lattice; the variant
/// `π_x(y) = π_{0_{x,y}}(x)` does not (see the tests).
pub fn pi_identities(l: &InvolutiveLattice) -> Verdict {
    for x in l.elements() {
        for y in l.elements() {
            let z = classify::zero_xy(l, x, y);
            if pi(l, x, y) != pi(l, z, y) || pi(l, y, x) != pi(l, z, x) {
                return Verdict::fail(Witness::Pair(x, y));
            }
        }
    }
    Verdict::YES
}

/// Sharp elements of a localizer as a bounded poset with involution.
pub fn localizer_sharp_poset(loc: &Localizer) -> InvolutivePoset {
    let k = &loc.lattice;
    let sharp = k.sharp_elements();
    let pos = |z: Elem| sharp.binary_search(&z).expect("sharp set closed under ′");
    InvolutivePoset::validate(RawStructure {
        leq: sharp
            .iter()
            .map(|&a| sharp.iter().map(|&b| k.leq(a, b)).collect())
            .collect(),
        inv: sharp.iter().map(|&z| pos(k.inv(z))).collect(),
        bottom: pos(k.bottom()),
        top: pos(k.top()),
        labels: None,
    })
    .expect("sharp elements form a bounded involutive subposet")
}

fn for_comparable_localizers(
    l: &InvolutiveLattice,
    sharp_part_ok: impl Fn(&Localizer) -> bool,
) -> Verdict {
    for x in l.elements() {
        for y in l.elements() {
            if !l.leq(x, y) {
                continue;
            }
            let loc = localizer(l, x, y);
            let lo = loc.lo;
            let sharp_in_local = |p: Elem| {
                let i = loc.local_index(p).expect("π value lies in the interval");
                loc.lattice.is_sharp(i)
            };
            if !sharp_in_local(pi(l, lo, x))
                || !sharp_in_local(pi(l, lo, y))
                || !sharp_part_ok(&loc)
            {
                return Verdict::fail(Witness::Pair(x, y));
            }
        }
    }
    Verdict::YES
}

/// Orthogonal pairs of sharp elements of the localizer have sharp joins
/// (joins taken in the localizer).
fn sharp_closed_under_orthogonal_joins(loc: &Localizer) -> bool {
    let k = &loc.lattice;
    let sharp = k.sharp_elements();
    sharp.iter().all(|&z| {
        sharp
            .iter()
            .all(|&u| !k.leq(z, k.inv(u)) || k.is_sharp(k.join(z, u)))
    })
}

/// For every `x <= y`: `π_{0_{x,y}}(x)` and `π_{0_{x,y}}(y)` are sharp in
/// `Local(x, y)`, and orthogonal joins of its sharp elements are sharp, so
/// that they form an orthogonal poset whose orthogonal joins are those of
/// the localizer. Equivalent to SP2 on pseudo-Kleene lattices.
pub fn localizer_sp2_condition(l: &InvolutiveLattice) -> Verdict {
    for_comparable_localizers(l, |loc| {
        sharp_closed_under_orthogonal_joins(loc)
            && classify::is_op(&localizer_sharp_poset(loc)).holds
    })
}

/// As [`localizer_sp2_condition`], but only asks that the sharp elements
/// form an orthogonal poset under their own order. This weaker reading is
/// not equivalent to SP2 (see the tests).
pub fn localizer_sp2_condition_weak(l: &InvolutiveLattice) -> Verdict {
    for_comparable_localizers(l, |loc| classify::is_op(&localizer_sharp_poset(loc)).holds)
}

// ============================================================================
// Sasaki operations and the residual groupoid
// ============================================================================

/// Binary operation tables over a lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualGroupoid {
    n: usize,
    top: Elem,
    odot: Vec<Elem>,
    arrow: Vec<Elem>,
}

impl ResidualGroupoid {
    pub fn odot(&self, x: Elem, y: Elem) -> Elem {
        self.odot[x * self.n + y]
    }

    pub fn arrow(&self, x: Elem, y: Elem) -> Elem {
        self.arrow[x * self.n + y]
    }
}

fn tables(
    l: &InvolutiveLattice,
    odot: impl Fn(Elem, Elem) -> Elem,
    arrow: impl Fn(Elem, Elem) -> Elem,
) -> ResidualGroupoid {
    let n = l.n();
    let mut g = ResidualGroupoid {
        n,
        top: l.top(),
        odot: vec![0; n * n],
        arrow: vec![0; n * n],
    };
    for x in 0..n {
        for y in 0..n {
            g.odot[x * n + y] = odot(x, y);
            g.arrow[x * n + y] = arrow(x, y);
        }
    }
    g
}

/// `x ⊙ y = y ∧ (x ∨ y′)` and `x → y = x′ ∨ (x ∧ y)` everywhere.
pub fn sasaki_total(l: &InvolutiveLattice) -> ResidualGroupoid {
    tables(
        l,
        |x, y| l.meet(y, l.join(x, l.inv(y))),
        |x, y| l.join(l.inv(x), l.meet(x, y)),
    )
}

/// Sasaki operations with `x ⊙ y = 0` when `x <= y′` and `x → y = 1` when
/// `x <= y`.
pub fn residual_groupoid(l: &InvolutiveLattice) -> ResidualGroupoid {
    tables(
        l,
        |x, y| {
            if l.leq(x, l.inv(y)) {
                l.bottom()
            } else {
                l.meet(y, l.join(x, l.inv(y)))
            }
        },
        |x, y| {
            if l.leq(x, y) {
                l.top()
            } else {
                l.join(l.inv(x), l.meet(x, y))
            }
        },
    )
}

/// `x ⊙ y <= z` iff `x <= y → z` over all triples.
pub fn residuation_law(l: &InvolutiveLattice, g: &ResidualGroupoid) -> Verdict {
    for x in l.elements() {
        for y in l.elements() {
            for z in l.elements() {
                if l.leq(g.odot(x, y), z) != l.leq(x, g.arrow(y, z)) {
                    return Verdict::fail(Witness::Triple(x, y, z));
                }
            }
        }
    }
    Verdict::YES
}

/// Unit laws `x ⊙ 1 = x = 1 ⊙ x` followed by the residuation law.
pub fn is_left_residuated(l: &InvolutiveLattice, g: &ResidualGroupoid) -> Verdict {
    let top = g.top;
    if let Some(x) = l
        .elements()
        .find(|&x| g.odot(x, top) != x || g.odot(top, x) != x)
    {
        return Verdict::fail(Witness::Element(x));
    }
    residuation_law(l, g)
}
