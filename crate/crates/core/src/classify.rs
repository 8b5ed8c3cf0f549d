//! Membership in the classes of involutive posets and lattices, with witnesses.
//!
//! Every check scans tuples in lexicographic index order and reports the
//! first violation. [`Classifier`] memoizes verdicts per structure.

use std::fmt;
use std::sync::OnceLock;

use crate::{Elem, InvolutiveLattice, InvolutivePoset};

/// A counterexample to a class condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Element(Elem),
    Pair(Elem, Elem),
    Triple(Elem, Elem, Elem),
    /// An orthogonal pair `x <= y′` without a join.
    MissingJoin(Elem, Elem),
    /// A pair whose meet is needed but absent.
    MissingMeet(Elem, Elem),
    /// The structure is not a lattice; the pair lacks a meet or join.
    NotALattice(Elem, Elem),
}

impl Witness {
    pub fn elems(&self) -> Vec<Elem> {
        match *self {
            Witness::Element(a) => vec![a],
            Witness::Pair(a, b)
            | Witness::MissingJoin(a, b)
            | Witness::MissingMeet(a, b)
            | Witness::NotALattice(a, b) => vec![a, b],
            Witness::Triple(a, b, c) => vec![a, b, c],
        }
    }

    /// Human-readable form using the structure's labels.
    pub fn describe(&self, p: &InvolutivePoset) -> String {
        let names: Vec<String> = self.elems().iter().map(|&e| p.label(e)).collect();
        let tuple = format!("({})", names.join(", "));
        match self {
            Witness::MissingJoin(..) => format!("missing join {tuple}"),
            Witness::MissingMeet(..) => format!("missing meet {tuple}"),
            Witness::NotALattice(..) => format!("not a lattice {tuple}"),
            _ => tuple,
        }
    }
}

/// Outcome of a single class test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub const YES: Verdict = Verdict {
        holds: true,
        witness: None,
    };

    pub fn fail(w: Witness) -> Verdict {
        Verdict {
            holds: false,
            witness: Some(w),
        }
    }

    pub(crate) fn from_search(found: Option<Witness>) -> Verdict {
        match found {
            None => Verdict::YES,
            Some(w) => Verdict::fail(w),
        }
    }

    /// Conjunction keeping the first failure.
    pub(crate) fn and_then(self, next: impl FnOnce() -> Verdict) -> Verdict {
        if self.holds {
            next()
        } else {
            self
        }
    }
}

/// Classes and named conditions that can be queried.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Class {
    /// Unsharp orthogonal poset.
    Uop,
    /// Orthogonal poset.
    Op,
    /// Paraorthomodular UOP.
    Pmp,
    /// Orthomodular poset: paraorthomodular OP.
    Omp,
    Lattice,
    /// Pseudo-Kleene lattice.
    Pkl,
    /// Ortholattice.
    Ol,
    /// Kleene lattice.
    Kl,
    /// Modular pseudo-Kleene lattice.
    Mpkl,
    /// Paraorthomodular pseudo-Kleene lattice.
    Poml,
    /// Orthomodular lattice.
    Oml,
    /// Super-paraorthomodular lattice.
    Spo,
    /// Modular ortholattice.
    Mol,
    /// Boolean algebra.
    Ba,
    Sp1,
    Sp2,
    /// Sharp elements closed under meet.
    QuasiA,
    /// Condition making the piecewise Sasaki groupoid residuated.
    Residuation,
    Modular,
    Distributive,
}

impl Class {
    pub const ALL: [Class; 20] = [
        Class::Uop,
        Class::Op,
        Class::Pmp,
        Class::Omp,
        Class::Lattice,
        Class::Pkl,
        Class::Ol,
        Class::Kl,
        Class::Mpkl,
        Class::Poml,
        Class::Oml,
        Class::Spo,
        Class::Mol,
        Class::Ba,
        Class::Sp1,
        Class::Sp2,
        Class::QuasiA,
        Class::Residuation,
        Class::Modular,
        Class::Distributive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Class::Uop => "uop",
            Class::Op => "op",
            Class::Pmp => "pmp",
            Class::Omp => "omp",
            Class::Lattice => "lattice",
            Class::Pkl => "pkl",
            Class::Ol => "ol",
            Class::Kl => "kl",
            Class::Mpkl => "mpkl",
            Class::Poml => "poml",
            Class::Oml => "oml",
            Class::Spo => "spo",
            Class::Mol => "mol",
            Class::Ba => "ba",
            Class::Sp1 => "sp1",
            Class::Sp2 => "sp2",
            Class::QuasiA => "quasi-a",
            Class::Residuation => "residuation",
            Class::Modular => "modular",
            Class::Distributive => "distributive",
        }
    }

    pub fn from_name(s: &str) -> Option<Class> {
        let s = s.to_ascii_lowercase();
        match s.as_str() {
            "pom" => Some(Class::Poml),
            "sp" => Some(Class::Spo),
            "a" => Some(Class::QuasiA),
            _ => Class::ALL.into_iter().find(|c| c.name() == s),
        }
    }

    fn index(self) -> usize {
        Class::ALL.iter().position(|&c| c == self).unwrap()
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

// ============================================================================
// Poset-level checks
// ============================================================================

fn pairs(n: usize) -> impl Iterator<Item = (Elem, Elem)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
}

fn triples(n: usize) -> impl Iterator<Item = (Elem, Elem, Elem)> {
    pairs(n).flat_map(move |(x, y)| (0..n).map(move |z| (x, y, z)))
}

/// Existence of joins of orthogonal pairs, then the Kleene condition
/// `x ∧ x′ <= y ∨ y′`.
pub fn is_uop(p: &InvolutivePoset) -> Verdict {
    let n = p.n();
    if let Some((x, y)) =
        pairs(n).find(|&(x, y)| p.leq(x, p.inv(y)) && p.partial_join(x, y).is_none())
    {
        return Verdict::fail(Witness::MissingJoin(x, y));
    }
    for (x, y) in pairs(n) {
        let m = match p.partial_meet(x, p.inv(x)) {
            Some(m) => m,
            None => return Verdict::fail(Witness::MissingMeet(x, p.inv(x))),
        };
        let j = match p.partial_join(y, p.inv(y)) {
            Some(j) => j,
            None => return Verdict::fail(Witness::MissingJoin(y, p.inv(y))),
        };
        if !p.leq(m, j) {
            return Verdict::fail(Witness::Pair(x, y));
        }
    }
    Verdict::YES
}

/// UOP in which every element is sharp.
pub fn is_op(p: &InvolutivePoset) -> Verdict {
    is_uop(p).and_then(|| {
        Verdict::from_search(
            p.elements()
                .find(|&x| p.partial_meet(x, p.inv(x)) != Some(p.bottom()))
                .map(Witness::Element),
        )
    })
}

/// `x <= y` and `x′ ∧ y = 0` imply `x = y`, with meets taken in the poset.
pub fn is_paraorthomodular_poset(p: &InvolutivePoset) -> Verdict {
    for (x, y) in pairs(p.n()) {
        if x == y || !p.leq(x, y) {
            continue;
        }
        match p.partial_meet(p.inv(x), y) {
            None => return Verdict::fail(Witness::MissingMeet(p.inv(x), y)),
            Some(m) if m == p.bottom() => return Verdict::fail(Witness::Pair(x, y)),
            Some(_) => {}
        }
    }
    Verdict::YES
}

pub fn is_pmp(p: &InvolutivePoset) -> Verdict {
    is_uop(p).and_then(|| is_paraorthomodular_poset(p))
}

pub fn is_omp(p: &InvolutivePoset) -> Verdict {
    is_op(p).and_then(|| is_paraorthomodular_poset(p))
}

// ============================================================================
// Lattice-level identities
// ============================================================================

/// The Kleene condition on a lattice.
pub fn is_pkl(l: &InvolutiveLattice) -> Verdict {
    Verdict::from_search(
        pairs(l.n())
            .find(|&(x, y)| !l.leq(l.meet(x, l.inv(x)), l.join(y, l.inv(y))))
            .map(|(x, y)| Witness::Pair(x, y)),
    )
}

/// Every element sharp.
pub fn is_ortho(l: &InvolutiveLattice) -> Verdict {
    Verdict::from_search(l.elements().find(|&x| !l.is_sharp(x)).map(Witness::Element))
}

pub fn is_distributive(l: &InvolutiveLattice) -> Verdict {
    Verdict::from_search(
        triples(l.n())
            .find(|&(x, y, z)| l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)))
            .map(|(x, y, z)| Witness::Triple(x, y, z)),
    )
}

/// `x <= z` implies `x ∨ (y ∧ z) = (x ∨ y) ∧ z`.
pub fn is_modular(l: &InvolutiveLattice) -> Verdict {
    Verdict::from_search(
        triples(l.n())
            .find(|&(x, y, z)| l.leq(x, z) && l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z))
            .map(|(x, y, z)| Witness::Triple(x, y, z)),
    )
}

/// `x <= y` and `x′ ∧ y = 0` imply `x = y`.
pub fn is_paraorthomodular(l: &InvolutiveLattice) -> Verdict {
    Verdict::from_search(
        pairs(l.n())
            .find(|&(x, y)| x != y && l.leq(x, y) && l.meet(l.inv(x), y) == l.bottom())
            .map(|(x, y)| Witness::Pair(x, y)),
    )
}

/// The orthomodular law: `x <= y` implies `y = x ∨ (y ∧ x′)`.
pub fn is_orthomodular(l: &InvolutiveLattice) -> Verdict {
    Verdict::from_search(
        pairs(l.n())
            .find(|&(x, y)| l.leq(x, y) && l.join(x, l.meet(y, l.inv(x))) != y)
            .map(|(x, y)| Witness::Pair(x, y)),
    )
}

/// `(x ∧ x′) ∨ (y ∧ y′)`.
pub fn zero_xy(l: &InvolutiveLattice, x: Elem, y: Elem) -> Elem {
    l.join(l.meet(x, l.inv(x)), l.meet(y, l.inv(y)))
}

/// `(x ∨ x′) ∧ (y ∨ y′)`.
pub fn one_xy(l: &InvolutiveLattice, x: Elem, y: Elem) -> Elem {
    l.meet(l.join(x, l.inv(x)), l.join(y, l.inv(y)))
}

fn comparable_pairs(l: &InvolutiveLattice) -> impl Iterator<Item = (Elem, Elem)> + '_ {
    pairs(l.n()).filter(|&(x, y)| l.leq(x, y))
}

/// SP1: for `x <= y`, `x′ ∧ y = 0_{x,y}` implies `y ∧ (x ∨ x′) = x ∨ (y ∧ y′)`.
pub fn is_sp1(l: &InvolutiveLattice) -> Verdict {
    Verdict::from_search(
        comparable_pairs(l)
            .find(|&(x, y)| {
                let (xi, yi) = (l.inv(x), l.inv(y));
                l.meet(xi, y) == zero_xy(l, x, y)
                    && l.meet(y, l.join(x, xi)) != l.join(x, l.meet(y, yi))
            })
            .map(|(x, y)| Witness::Pair(x, y)),
    )
}

/// SP2: for `x <= y`, `0_{x,y} = (x′ ∧ y) ∧ (x′ ∧ y)′`.
pub fn is_sp2(l: &InvolutiveLattice) -> Verdict {
    Verdict::from_search(
        comparable_pairs(l)
            .find(|&(x, y)| {
                let m = l.meet(l.inv(x), y);
                zero_xy(l, x, y) != l.meet(m, l.inv(m))
            })
            .map(|(x, y)| Witness::Pair(x, y)),
    )
}

/// The condition (sp): for `x <= y`, `y ∧ (x ∨ x′) = x ∨ (x′ ∧ y)`.
pub fn is_sp(l: &InvolutiveLattice) -> Verdict {
    Verdict::from_search(
        comparable_pairs(l)
            .find(|&(x, y)| {
                let xi = l.inv(x);
                l.meet(y, l.join(x, xi)) != l.join(x, l.meet(xi, y))
            })
            .map(|(x, y)| Witness::Pair(x, y)),
    )
}

/// The identity `(x ∨ y) ∧ (x ∨ x′) = x ∨ ((x ∨ y) ∧ x′)` over all pairs.
pub fn is_sp_equational(l: &InvolutiveLattice) -> Verdict {
    Verdict::from_search(
        pairs(l.n())
            .find(|&(x, y)| {
                let (xi, j) = (l.inv(x), l.join(x, y));
                l.meet(j, l.join(x, xi)) != l.join(x, l.meet(j, xi))
            })
            .map(|(x, y)| Witness::Pair(x, y)),
    )
}

/// The identity `x ∨ ((x ∨ y) ∧ (x ∨ y)′) = (x ∨ y) ∧ (x ∨ (x ∨ y)′)`.
pub fn is_sp_alternative(l: &InvolutiveLattice) -> Verdict {
    Verdict::from_search(
        pairs(l.n())
            .find(|&(x, y)| {
                let j = l.join(x, y);
                let ji = l.inv(j);
                l.join(x, l.meet(j, ji)) != l.meet(j, l.join(x, ji))
            })
            .map(|(x, y)| Witness::Pair(x, y)),
    )
}

/// The quasi-identity (@): `x <= y′` and `x′ ∧ y′ <= x ∧ y` imply `x = y′`.
pub fn is_at_quasi(l: &InvolutiveLattice) -> Verdict {
    Verdict::from_search(
        pairs(l.n())
            .find(|&(x, y)| {
                let yi = l.inv(y);
                l.leq(x, yi) && l.leq(l.meet(l.inv(x), yi), l.meet(x, y)) && x != yi
            })
            .map(|(x, y)| Witness::Pair(x, y)),
    )
}

/// (A): sharp elements are closed under meet.
pub fn satisfies_quasi_a(l: &InvolutiveLattice) -> Verdict {
    Verdict::from_search(
        pairs(l.n())
            .find(|&(x, y)| l.is_sharp(x) && l.is_sharp(y) && !l.is_sharp(l.meet(x, y)))
            .map(|(x, y)| Witness::Pair(x, y)),
    )
}

/// For `x` not below `y`: `x <= y ∨ y′` or `y′ <= x ∨ y`.
pub fn residuation_condition(l: &InvolutiveLattice) -> Verdict {
    Verdict::from_search(
        pairs(l.n())
            .find(|&(x, y)| {
                let yi = l.inv(y);
                !l.leq(x, y) && !l.leq(x, l.join(y, yi)) && !l.leq(yi, l.join(x, y))
            })
            .map(|(x, y)| Witness::Pair(x, y)),
    )
}

/// All formulations of super-paraorthomodularity evaluated side by side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpProfile {
    pub sp: bool,
    pub sp1: bool,
    pub sp2: bool,
    pub at_quasi: bool,
    pub equational: bool,
    pub alternative: bool,
}

impl SpProfile {
    /// (sp) iff SP1 and SP2, (@) iff SP1, and both identities iff (sp).
    pub fn consistent(&self) -> bool {
        self.sp == (self.sp1 && self.sp2)
            && self.at_quasi == self.sp1
            && self.equational == self.sp
            && self.alternative == self.sp
    }
}

pub fn sp_profile(l: &InvolutiveLattice) -> SpProfile {
    SpProfile {
        sp: is_sp(l).holds,
        sp1: is_sp1(l).holds,
        sp2: is_sp2(l).holds,
        at_quasi: is_at_quasi(l).holds,
        equational: is_sp_equational(l).holds,
        alternative: is_sp_alternative(l).holds,
    }
}

/// Sharp elements with the induced order and involution.
pub fn sh_poset(l: &InvolutiveLattice) -> InvolutivePoset {
    let members = crate::ElemSet::from_elems(l.n(), l.sharp_elements());
    l.poset()
        .restrict(&members)
        .expect("sharp elements contain the bounds and are closed under the involution")
        .0
}

/// Whether `Sh(L)` is an orthomodular poset whose orthogonal joins agree
/// with those of `L`.
pub fn is_sub_orthomodular(l: &InvolutiveLattice) -> Verdict {
    let sharp = l.sharp_elements();
    for &x in &sharp {
        for &y in &sharp {
            if l.leq(x, l.inv(y)) && !l.is_sharp(l.join(x, y)) {
                return Verdict::fail(Witness::Pair(x, y));
            }
        }
    }
    is_omp(&sh_poset(l)).and_then(|| Verdict::YES)
}

// ============================================================================
// Cached classification
// ============================================================================

/// Lazily evaluated, memoized class verdicts for one structure.
pub struct Classifier<'a> {
    poset: &'a InvolutivePoset,
    lattice: OnceLock<Result<InvolutiveLattice, (Elem, Elem)>>,
    cache: [OnceLock<Verdict>; Class::ALL.len()],
}

impl<'a> Classifier<'a> {
    pub fn new(poset: &'a InvolutivePoset) -> Self {
        Classifier {
            poset,
            lattice: OnceLock::new(),
            cache: Default::default(),
        }
    }

    pub fn for_lattice(l: &'a InvolutiveLattice) -> Self {
        let c = Self::new(l.poset());
        let _ = c.lattice.set(Ok(l.clone()));
        c
    }

    pub fn poset(&self) -> &InvolutivePoset {
        self.poset
    }

    pub fn lattice(&self) -> Result<&InvolutiveLattice, (Elem, Elem)> {
        self.lattice
            .get_or_init(|| {
                InvolutiveLattice::try_lattice(self.poset.clone()).map_err(|e| match e {
                    crate::StructureError::NotALattice { witness } => witness,
                    other => unreachable!("validated poset failed lattice promotion: {other}"),
                })
            })
            .as_ref()
            .map_err(|&w| w)
    }

    pub fn holds(&self, class: Class) -> bool {
        self.verdict(class).holds
    }

    pub fn verdict(&self, class: Class) -> &Verdict {
        self.cache[class.index()].get_or_init(|| self.compute(class))
    }

    fn on_lattice(&self, f: impl FnOnce(&InvolutiveLattice) -> Verdict) -> Verdict {
        match self.lattice() {
            Ok(l) => f(l),
            Err((x, y)) => Verdict::fail(Witness::NotALattice(x, y)),
        }
    }

    fn needs(&self, class: Class) -> Verdict {
        self.verdict(class).clone()
    }

    fn compute(&self, class: Class) -> Verdict {
        use Class::*;
        match class {
            Uop => is_uop(self.poset),
            Op => is_op(self.poset),
            Pmp => is_pmp(self.poset),
            Omp => is_omp(self.poset),
            Lattice => self.on_lattice(|_| Verdict::YES),
            Pkl => self.on_lattice(is_pkl),
            Ol => self.needs(Pkl).and_then(|| self.on_lattice(is_ortho)),
            Kl => self.needs(Pkl).and_then(|| self.needs(Distributive)),
            Mpkl => self.needs(Pkl).and_then(|| self.needs(Modular)),
            Poml => self
                .needs(Pkl)
                .and_then(|| self.on_lattice(is_paraorthomodular)),
            Oml => self.needs(Ol).and_then(|| self.on_lattice(is_orthomodular)),
            Spo => self.needs(Pkl).and_then(|| self.on_lattice(is_sp)),
            Mol => self.needs(Ol).and_then(|| self.needs(Modular)),
            Ba => self.needs(Ol).and_then(|| self.needs(Distributive)),
            Sp1 => self.needs(Pkl).and_then(|| self.on_lattice(is_sp1)),
            Sp2 => self.needs(Pkl).and_then(|| self.on_lattice(is_sp2)),
            QuasiA => self.on_lattice(satisfies_quasi_a),
            Residuation => self
                .needs(Pkl)
                .and_then(|| self.on_lattice(residuation_condition)),
            Modular => self.on_lattice(is_modular),
            Distributive => self.on_lattice(is_distributive),
        }
    }

    /// Verdicts for every class.
    pub fn report(&self) -> ClassReport {
        ClassReport {
            verdicts: Class::ALL
                .iter()
                .map(|&c| (c, self.verdict(c).clone()))
                .collect(),
        }
    }
}

/// Verdicts for all classes of one structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub verdicts: Vec<(Class, Verdict)>,
}

impl ClassReport {
    pub fn of(p: &InvolutivePoset) -> Self {
        Classifier::new(p).report()
    }

    pub fn get(&self, class: Class) -> &Verdict {
        &self.verdicts[class.index()].1
    }

    pub fn holds(&self, class: Class) -> bool {
        self.get(class).holds
    }

    /// Names of the classes that hold, in [`Class::ALL`] order.
    pub fn flags(&self) -> Vec<Class> {
        self.verdicts
            .iter()
            .filter(|(_, v)| v.holds)
            .map(|(c, _)| *c)
            .collect()
    }

    /// Implications of the inclusion diagram; returns the first violated
    /// `(stronger, weaker)` pair.
    pub fn inclusion_violation(&self) -> Option<(Class, Class)> {
        use Class::*;
        const EDGES: &[(Class, Class)] = &[
            (Op, Uop),
            (Pmp, Uop),
            (Omp, Op),
            (Omp, Pmp),
            (Pkl, Uop),
            (Pkl, Lattice),
            (Ol, Pkl),
            (Ol, Op),
            (Poml, Pkl),
            (Poml, Pmp),
            (Spo, Poml),
            (Spo, Sp1),
            (Spo, Sp2),
            (Mpkl, Spo),
            (Mpkl, Modular),
            (Kl, Mpkl),
            (Kl, Distributive),
            (Oml, Spo),
            (Oml, Ol),
            (Oml, Omp),
            (Mol, Oml),
            (Mol, Mpkl),
            (Ba, Mol),
            (Ba, Kl),
            (Ba, QuasiA),
            (Distributive, Modular),
        ];
        EDGES
            .iter()
            .copied()
            .find(|&(hi, lo)| self.holds(hi) && !self.holds(lo))
    }
}
