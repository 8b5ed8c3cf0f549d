//! Commutation relations for orthomodular posets and modular
//! pseudo-Kleene lattices.

use thiserror::Error;

use crate::classify::{self, Class, Classifier, Verdict, Witness};
use crate::{Elem, ElemSet, InvolutiveLattice, InvolutivePoset};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CommuteError {
    #[error("meet of {0} and {1} is undefined")]
    UndefinedMeet(Elem, Elem),
    #[error("join of {0} and {1} is undefined")]
    UndefinedJoin(Elem, Elem),
    #[error("not a modular pseudo-Kleene lattice")]
    NotModular,
    #[error("element {0} is not sharp")]
    NotSharp(Elem),
}

/// `x = (x ∧ y) ∨ (x ∧ y′)` with partial operations.
pub fn commutes_omp(p: &InvolutivePoset, x: Elem, y: Elem) -> Result<bool, CommuteError> {
    let yi = p.inv(y);
    let a = p
        .partial_meet(x, y)
        .ok_or(CommuteError::UndefinedMeet(x, y))?;
    let b = p
        .partial_meet(x, yi)
        .ok_or(CommuteError::UndefinedMeet(x, yi))?;
    let j = p
        .partial_join(a, b)
        .ok_or(CommuteError::UndefinedJoin(a, b))?;
    Ok(j == x)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CommutationReport {
    pub c1: bool,
    pub c2: bool,
    pub c3: bool,
    /// The orthomodular-poset condition evaluated in the lattice.
    pub omp_commutes: bool,
    /// Whether `Sg(x, y)` is distributive.
    pub generated_distributive: bool,
}

impl CommutationReport {
    /// `x C y`: all of C1, C2 and C3.
    pub fn commutes(&self) -> bool {
        self.c1 && self.c2 && self.c3
    }
}

fn c1(l: &InvolutiveLattice, a: Elem, b: Elem) -> bool {
    l.meet(a, l.join(b, l.inv(b))) == l.join(l.meet(a, b), l.meet(a, l.inv(b)))
}

fn c3(l: &InvolutiveLattice, a: Elem, b: Elem) -> bool {
    let m = l.meet(a, l.inv(a));
    m == l.join(l.meet(m, b), l.meet(m, l.inv(b)))
}

/// `x C y` per C1 to C3.
pub fn commutes(l: &InvolutiveLattice, x: Elem, y: Elem) -> bool {
    c1(l, x, y) && c1(l, y, x) && c3(l, x, y)
}

/// Evaluates C1 to C3 literally, on any lattice.
pub fn commutes_mpkl(l: &InvolutiveLattice, x: Elem, y: Elem) -> CommutationReport {
    CommutationReport {
        c1: c1(l, x, y),
        c2: c1(l, y, x),
        c3: c3(l, x, y),
        omp_commutes: l.join(l.meet(x, y), l.meet(x, l.inv(y))) == x,
        generated_distributive: l.is_distributive_on(&l.generated_subalgebra(&[x, y])),
    }
}

fn require_mpkl(l: &InvolutiveLattice) -> Result<(), CommuteError> {
    if Classifier::for_lattice(l).holds(Class::Mpkl) {
        Ok(())
    } else {
        Err(CommuteError::NotModular)
    }
}

/// The five equivalent forms of commutation in a modular pseudo-Kleene
/// lattice, and the auxiliary identity that follows from `x C y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CommutationEquivalences {
    /// `x C y`, `y C x`, `x C y′`, `x′ C y`, and `x C y` together with
    /// distributivity of `x ∨ x′` over `y, y′`.
    pub forms: [bool; 5],
    /// `x ∨ (x′ ∧ y′) = (x ∨ x′) ∧ (x ∨ y′)`, evaluated only when `x C y`.
    pub aux: Option<bool>,
}

impl CommutationEquivalences {
    pub fn consistent(&self) -> bool {
        self.forms.iter().all(|&f| f == self.forms[0]) && self.aux != Some(false)
    }
}

pub fn commutation_equivalences(
    l: &InvolutiveLattice,
    x: Elem,
    y: Elem,
) -> Result<CommutationEquivalences, CommuteError> {
    require_mpkl(l)?;
    let (xi, yi) = (l.inv(x), l.inv(y));
    let xc = commutes(l, x, y);
    let e = l.join(x, xi);
    let fifth = xc && l.meet(e, l.join(y, yi)) == l.join(l.meet(e, y), l.meet(e, yi));
    let aux = xc.then(|| l.join(x, l.meet(xi, yi)) == l.meet(e, l.join(x, yi)));
    Ok(CommutationEquivalences {
        forms: [
            xc,
            commutes(l, y, x),
            commutes(l, x, yi),
            commutes(l, xi, y),
            fifth,
        ],
        aux,
    })
}

/// Over all pairs: `x C y` iff `Sg(x, y)` is distributive.
pub fn sg_distributive_iff_commutes(l: &InvolutiveLattice) -> Result<Verdict, CommuteError> {
    require_mpkl(l)?;
    for x in l.elements() {
        for y in l.elements() {
            let r = commutes_mpkl(l, x, y);
            if r.commutes() != r.generated_distributive {
                return Ok(Verdict::fail(Witness::Pair(x, y)));
            }
        }
    }
    Ok(Verdict::YES)
}

/// Whether the sublattice generated by `{a, b, c}` is distributive.
pub fn foulis_holland_check(l: &InvolutiveLattice, a: Elem, b: Elem, c: Elem) -> bool {
    l.is_distributive_on(&l.generated_sublattice(&[a, b, c]))
}

/// The criterion for `B ∪ C` to generate a distributive sublattice, with
/// `B = Sg(a)` and `C = Sg(b)`.
pub fn jonsson_criterion(l: &InvolutiveLattice, a: Elem, b: Elem) -> bool {
    let sa = l.generated_subalgebra(&[a]).to_vec();
    let sb = l.generated_subalgebra(&[b]).to_vec();
    let half = |p: &[Elem], q: &[Elem]| {
        p.iter().all(|&x1| {
            p.iter().all(|&x2| {
                q.iter()
                    .all(|&y| l.meet(l.join(x1, x2), y) == l.join(l.meet(x1, y), l.meet(x2, y)))
            })
        })
    };
    half(&sa, &sb) && half(&sb, &sa)
}

/// Whether the bounded sublattice generated by `Sg(a) ∪ Sg(b)` is already
/// closed under the involution, i.e. equals `Sg(a, b)`.
pub fn sublattice_of_subalgebras_is_closed(l: &InvolutiveLattice, a: Elem, b: Elem) -> bool {
    let mut seed = l.generated_subalgebra(&[a]);
    seed.union_with(&l.generated_subalgebra(&[b]));
    let d = l.generated_sublattice(&seed.to_vec());
    d.iter().all(|z| d.contains(l.inv(z))) && d == l.generated_subalgebra(&[a, b])
}

/// Commutation of two sharp elements, read in `Sh(L)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SharpCommutation {
    /// `x C y` in the orthomodular poset `Sh(L)`, if its meets and joins
    /// are defined.
    pub commutes_in_sh: Option<bool>,
    /// `x ∧ y` computed in `Sh(L)`, if it exists.
    pub sh_meet: Option<Elem>,
    pub lattice_meet: Elem,
    pub sg_distributive: bool,
}

impl SharpCommutation {
    /// Meets agree for commuting pairs, and `Sg(x, y)` is distributive
    /// exactly when the pair commutes in `Sh(L)`.
    pub fn consistent(&self) -> bool {
        let c = self.commutes_in_sh == Some(true);
        (!c || self.sh_meet == Some(self.lattice_meet)) && c == self.sg_distributive
    }
}

/// Expects a super-paraorthomodular lattice; fails if `x` or `y` is not
/// sharp.
pub fn sharp_commutation(
    l: &InvolutiveLattice,
    x: Elem,
    y: Elem,
) -> Result<SharpCommutation, CommuteError> {
    for e in [x, y] {
        if !l.is_sharp(e) {
            return Err(CommuteError::NotSharp(e));
        }
    }
    let sharp = l.sharp_elements();
    let sh = classify::sh_poset(l);
    let pos = |e: Elem| sharp.binary_search(&e).expect("sharp");
    let (sx, sy) = (pos(x), pos(y));
    Ok(SharpCommutation {
        commutes_in_sh: commutes_omp(&sh, sx, sy).ok(),
        sh_meet: sh.partial_meet(sx, sy).map(|m| sharp[m]),
        lattice_meet: l.meet(x, y),
        sg_distributive: l.is_distributive_on(&l.generated_subalgebra(&[x, y])),
    })
}

/// Elements generated together with `x` and `y`; convenience for reports.
pub fn generated_pair(l: &InvolutiveLattice, x: Elem, y: Elem) -> ElemSet {
    l.generated_subalgebra(&[x, y])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn diamond_fixed_atom() {
        let d = catalog::diamond();
        let (a, b) = (d.find("a").unwrap(), d.find("b").unwrap());
        let r = commutes_mpkl(&d, a, b);
        assert!(r.c1 && !r.c2 && r.c3);
        assert!(!r.generated_distributive);
        let eq = commutation_equivalences(&d, a, b).unwrap();
        assert_eq!(eq.forms, [false; 5]);
    }

    #[test]
    fn fh_pairs_commute_but_triple_is_not_distributive() {
        let l = catalog::failure_fh();
        let [a, b, c] = ["a", "b", "c"].map(|s| l.find(s).unwrap());
        assert!(commutes(&l, a, b) && commutes(&l, a, c));
        assert!(!foulis_holland_check(&l, a, b, c));
        assert!(sg_distributive_iff_commutes(&l).unwrap().holds);
    }

    #[test]
    fn b6_pair_does_not_commute_as_omp() {
        let l = catalog::b6();
        let (x, y) = (l.find("x").unwrap(), l.find("y").unwrap());
        // x <= y, so that pair commutes; x′ and y do not.
        assert_eq!(commutes_omp(&l, x, y), Ok(true));
        assert_eq!(commutes_omp(&l, l.inv(x), y), Ok(false));
        assert_eq!(commutes_omp(&l, x, l.top()), Ok(true));
    }

    #[test]
    fn non_modular_rejected() {
        assert_eq!(
            commutation_equivalences(&catalog::b8(), 1, 2).unwrap_err(),
            CommuteError::NotModular
        );
    }

    #[test]
    fn sharp_commutation_requires_sharp() {
        let k = catalog::k3();
        assert_eq!(
            sharp_commutation(&k, 1, 0).unwrap_err(),
            CommuteError::NotSharp(1)
        );
    }
}
