//! Paraconsistent partial referential matrices: the matrix of a finite
//! unsharp orthogonal poset, its order `≾`, and the consequence relations
//! it induces.

use std::fmt;

use thiserror::Error;

use crate::classify::{self, Verdict, Witness};
use crate::subalg::{self, SubalgError};
use crate::{Elem, ElemSet, InvolutiveLattice, InvolutivePoset, RawStructure};

pub mod entail;
pub mod formula;

pub use entail::{entails, entails_structural, extend_partial_hom};
pub use formula::Formula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RefmatError {
    #[error("not a distributive lattice")]
    NotDistributive,
    #[error("not an unsharp orthogonal poset")]
    NotUop,
    #[error("budget exceeded: more than {0} candidates")]
    BudgetExceeded(usize),
}

impl From<SubalgError> for RefmatError {
    fn from(e: SubalgError) -> Self {
        match e {
            SubalgError::SearchBudgetExceeded(n) => RefmatError::BudgetExceeded(n),
        }
    }
}

/// Values of the three-element Kleene chain, ordered `F < Half < T`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Truth {
    F,
    Half,
    T,
}

impl Truth {
    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> Truth {
        match self {
            Truth::F => Truth::T,
            Truth::Half => Truth::Half,
            Truth::T => Truth::F,
        }
    }

    pub fn join(self, other: Truth) -> Truth {
        self.max(other)
    }
}

impl fmt::Display for Truth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Truth::F => "0",
            Truth::Half => "1/2",
            Truth::T => "1",
        })
    }
}

// ============================================================================
// Filters and Kleene sublattices
// ============================================================================

/// A prime filter of the Kleene sublattice `sub`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFilterIndex {
    pub sub: usize,
    pub filter: ElemSet,
}

/// Proper nonempty prime filters of a distributive sublattice `members` of
/// `p`: the principal filters of its join-irreducible elements, in element
/// order.
fn prime_filters_in(p: &InvolutivePoset, members: &ElemSet) -> Vec<ElemSet> {
    let m = members.to_vec();
    m.iter()
        .filter(|&&j| {
            let lower: Vec<Elem> = m.iter().copied().filter(|&x| p.lt(x, j)).collect();
            let covers = lower
                .iter()
                .filter(|&&x| !lower.iter().any(|&y| p.lt(x, y)))
                .count();
            covers == 1
        })
        .map(|&j| ElemSet::from_elems(p.n(), m.iter().copied().filter(|&x| p.leq(j, x))))
        .collect()
}

/// Proper nonempty prime filters of a Kleene lattice.
pub fn prime_filters(k: &InvolutiveLattice) -> Result<Vec<ElemSet>, RefmatError> {
    if !classify::is_distributive(k).holds {
        return Err(RefmatError::NotDistributive);
    }
    Ok(prime_filters_in(k.poset(), &ElemSet::full(k.n())))
}

/// Closure of `seed` under the bounds, the involution and all existing
/// binary joins and meets of `p`.
fn poset_closure(p: &InvolutivePoset, seed: &ElemSet) -> ElemSet {
    let mut s = seed.clone();
    s.insert(p.bottom());
    s.insert(p.top());
    loop {
        let cur = s.to_vec();
        let mut grew = false;
        for &x in &cur {
            grew |= s.insert(p.inv(x));
            for &y in &cur {
                for z in [p.partial_join(x, y), p.partial_meet(x, y)]
                    .into_iter()
                    .flatten()
                {
                    grew |= s.insert(z);
                }
            }
        }
        if !grew {
            return s;
        }
    }
}

fn is_kleene_sublattice(p: &InvolutivePoset, s: &ElemSet) -> bool {
    let m = s.to_vec();
    let ops: Option<Vec<Vec<(Elem, Elem)>>> = m
        .iter()
        .map(|&x| {
            m.iter()
                .map(|&y| Some((p.partial_join(x, y)?, p.partial_meet(x, y)?)))
                .collect()
        })
        .collect();
    let Some(ops) = ops else { return false };
    let pos = |e: Elem| m.binary_search(&e).expect("closed set");
    let join = |a: usize, b: usize| pos(ops[a][b].0);
    let meet = |a: usize, b: usize| pos(ops[a][b].1);
    let k = m.len();
    (0..k).all(|a| {
        (0..k).all(|b| (0..k).all(|c| meet(a, join(b, c)) == join(meet(a, b), meet(a, c))))
    })
}

/// Which Kleene sublattices index the filters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SublatticeMode {
    /// Every Kleene sublattice.
    #[default]
    All,
    /// Maximal ones only. Not known to give the same representation.
    BlocksOnly,
}

/// Every Kleene sublattice of a poset: subsets with the bounds, closed
/// under the involution and the ambient joins and meets (which must
/// exist), and distributive. Sorted by member list.
pub fn kleene_sublattices(p: &InvolutivePoset, cap: usize) -> Result<Vec<ElemSet>, RefmatError> {
    let mut sets = subalg::enumerate_closed(
        p.n(),
        |s| poset_closure(p, s),
        |s| is_kleene_sublattice(p, s),
        cap,
    )?;
    sets.sort();
    Ok(sets)
}

fn maximal(sets: Vec<ElemSet>) -> Vec<ElemSet> {
    sets.iter()
        .filter(|s| !sets.iter().any(|t| t.len() > s.len() && s.is_subset(t)))
        .cloned()
        .collect()
}

/// Every comparable pair of `p` lies in a common Kleene sublattice.
pub fn is_tame_poset(p: &InvolutivePoset, cap: usize) -> Result<Verdict, RefmatError> {
    let subs = maximal(kleene_sublattices(p, cap)?);
    for x in p.elements() {
        for y in p.elements() {
            if p.leq(x, y) && !subs.iter().any(|s| s.contains(x) && s.contains(y)) {
                return Ok(Verdict::fail(Witness::Pair(x, y)));
            }
        }
    }
    Ok(Verdict::YES)
}

// ============================================================================
// Matrices
// ============================================================================

/// A partial proposition `(C, f)`: `values[i]` is `f(i)` for `i ∈ C` and
/// `None` outside `C`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RefProposition {
    pub label: String,
    pub values: Vec<Option<Truth>>,
}

impl RefProposition {
    pub fn domain(&self) -> impl Iterator<Item = usize> + '_ {
        self.values
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.map(|_| i))
    }

    pub fn same_function(&self, other: &RefProposition) -> bool {
        self.values == other.values
    }
}

/// How a matrix was obtained from a structure.
#[derive(Debug, Clone)]
pub struct Origin {
    pub structure: InvolutivePoset,
    pub mode: SublatticeMode,
    pub sublattices: Vec<ElemSet>,
    pub filters: Vec<PrimeFilterIndex>,
}

/// A matrix with index set `0..indices.len()`, propositions `props`,
/// commeasurability, partial join, negation and constants. For a matrix
/// built from a structure, proposition `a` is `(𝔽_a, f_a)`.
#[derive(Debug, Clone)]
pub struct RefMatrix {
    pub indices: Vec<String>,
    pub props: Vec<RefProposition>,
    comm: Vec<Vec<bool>>,
    join: Vec<Vec<Option<usize>>>,
    neg: Vec<usize>,
    zero: usize,
    one: usize,
    pub origin: Option<Origin>,
}

/// A failed clause of the matrix definition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseViolation {
    pub clause: &'static str,
    pub detail: String,
}

impl RefMatrix {
    /// Assembles a matrix from explicit tables. `join[p][q]` must be
    /// `Some` exactly on commeasurable pairs.
    pub fn from_tables(
        indices: Vec<String>,
        props: Vec<RefProposition>,
        comm: Vec<Vec<bool>>,
        join: Vec<Vec<Option<usize>>>,
        neg: Vec<usize>,
        zero: usize,
        one: usize,
    ) -> RefMatrix {
        RefMatrix {
            indices,
            props,
            comm,
            join,
            neg,
            zero,
            one,
            origin: None,
        }
    }

    pub fn len(&self) -> usize {
        self.props.len()
    }

    pub fn is_empty(&self) -> bool {
        self.props.is_empty()
    }

    pub fn commeasurable(&self, p: usize, q: usize) -> bool {
        self.comm[p][q]
    }

    /// `p ⊔ q`, defined on commeasurable pairs.
    pub fn join(&self, p: usize, q: usize) -> Option<usize> {
        self.join[p][q]
    }

    pub fn neg(&self, p: usize) -> usize {
        self.neg[p]
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    /// `p ∈ D_i`.
    pub fn designated(&self, p: usize, i: usize) -> bool {
        self.props[p].values[i] == Some(Truth::T)
    }

    /// `C ∩ D ≠ ∅` and `f(i) <= g(i)` on `C ∩ D`.
    pub fn precsim(&self, p: usize, q: usize) -> bool {
        let (a, b) = (&self.props[p].values, &self.props[q].values);
        let mut common = false;
        for (x, y) in a.iter().zip(b) {
            if let (Some(x), Some(y)) = (x, y) {
                common = true;
                if x > y {
                    return false;
                }
            }
        }
        common
    }

    fn domains_meet(&self, p: usize, q: usize) -> bool {
        let (a, b) = (&self.props[p].values, &self.props[q].values);
        a.iter().zip(b).any(|(x, y)| x.is_some() && y.is_some())
    }

    /// Propositions reachable from `seed` with `⊔`, `¬` and the constants,
    /// or `None` if some reached pair is not commeasurable.
    fn generated(&self, seed: &[usize]) -> Option<Vec<usize>> {
        let mut s: Vec<usize> = vec![self.zero, self.one];
        s.extend_from_slice(seed);
        s.sort_unstable();
        s.dedup();
        loop {
            let mut next = s.clone();
            for &p in &s {
                next.push(self.neg[p]);
                for &q in &s {
                    next.push(self.join[p][q]?);
                }
            }
            next.sort_unstable();
            next.dedup();
            if next == s {
                return Some(s);
            }
            s = next;
        }
    }

    /// Whether the propositions `s`, closed under `⊔` and `¬`, form a Kleene
    /// lattice with order `p <= q` iff `p ⊔ q = q`.
    fn forms_kleene_lattice(&self, s: &[usize]) -> bool {
        let k = s.len();
        let pos = |p: usize| s.binary_search(&p).ok();
        let Some(j) = (0..k)
            .map(|a| {
                (0..k)
                    .map(|b| pos(self.join[s[a]][s[b]]?))
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>()
        else {
            return false;
        };
        let laws = (0..k).all(|a| {
            j[a][a] == a
                && (0..k)
                    .all(|b| j[a][b] == j[b][a] && (0..k).all(|c| j[j[a][b]][c] == j[a][j[b][c]]))
        });
        if !laws {
            return false;
        }
        let inv: Option<Vec<usize>> = s.iter().map(|&p| pos(self.neg[p])).collect();
        let Some(inv) = inv else { return false };
        let raw = RawStructure {
            leq: (0..k)
                .map(|a| (0..k).map(|b| j[a][b] == b).collect())
                .collect(),
            inv,
            bottom: pos(self.zero).expect("seeded"),
            top: pos(self.one).expect("seeded"),
            labels: None,
        };
        let Ok(l) = InvolutiveLattice::from_raw(raw) else {
            return false;
        };
        (0..k).all(|a| (0..k).all(|b| l.join(a, b) == j[a][b]))
            && classify::is_distributive(&l).holds
            && classify::is_pkl(&l).holds
    }

    /// Checks the clauses of the definition of a paraconsistent partial
    /// referential matrix, returning the first failure.
    pub fn check_definition(&self) -> Result<(), ClauseViolation> {
        let fail = |clause, detail: String| Err(ClauseViolation { clause, detail });
        let n = self.len();
        let ni = self.indices.len();
        for p in 0..n {
            if self.props[p].values.len() != ni {
                return fail(
                    "(i)",
                    format!("{} has the wrong arity", self.props[p].label),
                );
            }
        }
        for p in 0..n {
            if !self.comm[p][p] {
                return fail(
                    "(ii)",
                    format!("{} is not commeasurable with itself", self.props[p].label),
                );
            }
            for q in 0..n {
                if self.comm[p][q] != self.comm[q][p] {
                    return fail(
                        "(ii)",
                        format!("commeasurability of {p}, {q} is not symmetric"),
                    );
                }
                if self.comm[p][q] && !self.domains_meet(p, q) {
                    return fail(
                        "(ii)",
                        format!("{p} and {q} are commeasurable with disjoint domains"),
                    );
                }
            }
        }
        let constant = |p: usize, t: Truth| self.props[p].values.iter().all(|v| *v == Some(t));
        if !constant(self.one, Truth::T) || !constant(self.zero, Truth::F) {
            return fail("(iii)", "constants are not total".into());
        }
        for p in 0..n {
            let q = self.neg[p];
            let expect: Vec<Option<Truth>> = self.props[p]
                .values
                .iter()
                .map(|v| v.map(Truth::neg))
                .collect();
            if self.props[q].values != expect {
                return fail(
                    "(iv)",
                    format!("negation of {} is not pointwise", self.props[p].label),
                );
            }
        }
        for p in 0..n {
            for q in 0..n {
                if !self.comm[p][q] {
                    continue;
                }
                let Some(r) = self.join[p][q] else {
                    return fail("(vii)", format!("join of commeasurable {p}, {q} undefined"));
                };
                let agrees = |z: usize| {
                    self.props[p]
                        .values
                        .iter()
                        .zip(&self.props[q].values)
                        .enumerate()
                        .all(|(i, (x, y))| match (x, y) {
                            (Some(x), Some(y)) => self.props[z].values[i] == Some(x.join(*y)),
                            _ => true,
                        })
                };
                if !agrees(r) {
                    return fail(
                        "(v)",
                        format!(
                            "join of {}, {} is not pointwise",
                            self.props[p].label, self.props[q].label
                        ),
                    );
                }
                if let Some(z) = (0..n)
                    .find(|&z| z != r && !self.props[z].same_function(&self.props[r]) && agrees(z))
                {
                    return fail(
                        "(v)",
                        format!(
                            "join of {}, {} is not unique: {} and {} both qualify",
                            self.props[p].label,
                            self.props[q].label,
                            self.props[r].label,
                            self.props[z].label
                        ),
                    );
                }
            }
        }
        for p in 0..n {
            for q in 0..n {
                if self.comm[p][q] {
                    let ok = self
                        .generated(&[p, q])
                        .is_some_and(|s| self.forms_kleene_lattice(&s));
                    if !ok {
                        return fail(
                            "(viii)",
                            format!(
                                "{}, {} do not generate a Kleene lattice",
                                self.props[p].label, self.props[q].label
                            ),
                        );
                    }
                }
            }
        }
        Ok(())
    }

    /// Propositions with equal `(C, f)`; a built matrix is injective iff
    /// this is `None`.
    pub fn duplicate(&self) -> Option<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .find(|&(p, q)| self.props[p].same_function(&self.props[q]))
    }

    /// `(carrier, ≾, ¬, 𝕆, 𝕀)` if `≾` is a partial order.
    pub fn precsim_poset(&self) -> Option<InvolutivePoset> {
        let n = self.len();
        let raw = RawStructure {
            leq: (0..n)
                .map(|p| (0..n).map(|q| self.precsim(p, q)).collect())
                .collect(),
            inv: self.neg.clone(),
            bottom: self.zero,
            top: self.one,
            labels: Some(self.props.iter().map(|p| p.label.clone()).collect()),
        };
        InvolutivePoset::validate(raw).ok()
    }
}

/// Builds the matrix of a finite unsharp orthogonal poset.
pub fn build_refmat(
    a: &InvolutivePoset,
    mode: SublatticeMode,
    cap: usize,
) -> Result<RefMatrix, RefmatError> {
    if !classify::is_uop(a).holds {
        return Err(RefmatError::NotUop);
    }
    let mut subs = kleene_sublattices(a, cap)?;
    if mode == SublatticeMode::BlocksOnly {
        subs = maximal(subs);
    }
    let filters: Vec<PrimeFilterIndex> = subs
        .iter()
        .enumerate()
        .flat_map(|(i, s)| {
            prime_filters_in(a, s)
                .into_iter()
                .map(move |filter| PrimeFilterIndex { sub: i, filter })
        })
        .collect();
    let value = |x: Elem, f: &PrimeFilterIndex| -> Option<Truth> {
        if !subs[f.sub].contains(x) {
            return None;
        }
        let (has, has_inv) = (f.filter.contains(x), f.filter.contains(a.inv(x)));
        Some(match (has, has_inv) {
            (true, false) => Truth::T,
            (false, true) => Truth::F,
            _ => Truth::Half,
        })
    };
    let props: Vec<RefProposition> = a
        .elements()
        .map(|x| RefProposition {
            label: a.label(x),
            values: filters.iter().map(|f| value(x, f)).collect(),
        })
        .collect();
    let n = a.n();
    let common_sub = |x: Elem, y: Elem| subs.iter().any(|s| s.contains(x) && s.contains(y));
    let mut comm = vec![vec![false; n]; n];
    let mut join = vec![vec![None; n]; n];
    for x in 0..n {
        for y in 0..n {
            let meets = props[x]
                .values
                .iter()
                .zip(&props[y].values)
                .any(|(u, v)| u.is_some() && v.is_some());
            comm[x][y] = meets;
            if meets {
                debug_assert!(common_sub(x, y));
                join[x][y] = Some(
                    a.partial_join(x, y)
                        .expect("joins exist inside a Kleene sublattice"),
                );
            }
        }
    }
    let indices = filters
        .iter()
        .map(|f| {
            let names: Vec<String> = f.filter.iter().map(|e| a.label(e)).collect();
            format!("K{}:{{{}}}", f.sub, names.join(","))
        })
        .collect();
    Ok(RefMatrix {
        indices,
        props,
        comm,
        join,
        neg: a.inv_map().to_vec(),
        zero: a.bottom(),
        one: a.top(),
        origin: Some(Origin {
            structure: a.clone(),
            mode,
            sublattices: subs,
            filters,
        }),
    })
}

/// Outcome of comparing a structure with its matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationReport {
    /// `a ↦ (𝔽_a, f_a)` is injective; otherwise a colliding pair.
    pub duplicate: Option<(Elem, Elem)>,
    /// `(𝔽_a, f_a) ≾ (𝔽_b, f_b)` implies `a <= b`; witness `(a, b)` on
    /// failure.
    pub forward: Verdict,
    pub tame: bool,
    /// `a <= b` implies `≾`; witness `(a, b)` on failure.
    pub converse: Verdict,
    /// `≾` is reflexive, antisymmetric and transitive.
    pub partial_order: bool,
    /// A pair `p ≾ q ≾ p` with `p ≠ q`, if any.
    pub antisymmetry_failure: Option<(Elem, Elem)>,
    /// A triple `p ≾ q ≾ r` with `p ⋦ r`, if any.
    pub transitivity_failure: Option<(Elem, Elem, Elem)>,
    /// `S(Ā)` is an unsharp orthogonal poset (when `≾` is an order).
    pub s_is_uop: Option<bool>,
    /// `a ↦ (𝔽_a, f_a)` is an orthoisomorphism onto `S(Ā)`.
    pub identity_iso: Option<bool>,
    /// Some orthoisomorphism `A ≅ S(Ā)` exists.
    pub isomorphic: Option<bool>,
}

impl RepresentationReport {
    /// Everything the representation theorem promises for this input.
    pub fn holds(&self) -> bool {
        self.duplicate.is_none()
            && self.forward.holds
            && (!self.tame
                || (self.converse.holds
                    && self.partial_order
                    && self.s_is_uop == Some(true)
                    && self.identity_iso == Some(true)))
    }
}

pub fn representation_check(m: &RefMatrix) -> RepresentationReport {
    let origin = m.origin.as_ref().expect("matrix built from a structure");
    let a = &origin.structure;
    let n = a.n();
    let pairs = || (0..n).flat_map(|x| (0..n).map(move |y| (x, y)));
    let forward = pairs()
        .find(|&(x, y)| m.precsim(x, y) && !a.leq(x, y))
        .map_or(Verdict::YES, |(x, y)| Verdict::fail(Witness::Pair(x, y)));
    let converse = pairs()
        .find(|&(x, y)| a.leq(x, y) && !m.precsim(x, y))
        .map_or(Verdict::YES, |(x, y)| Verdict::fail(Witness::Pair(x, y)));
    let tame = {
        let subs = maximal(origin.sublattices.clone());
        pairs().all(|(x, y)| !a.leq(x, y) || subs.iter().any(|s| s.contains(x) && s.contains(y)))
    };
    let s = m.precsim_poset();
    let identity_iso = s
        .as_ref()
        .map(|_| pairs().all(|(x, y)| a.leq(x, y) == m.precsim(x, y)));
    let antisymmetry_failure = pairs().find(|&(x, y)| x != y && m.precsim(x, y) && m.precsim(y, x));
    let transitivity_failure = pairs()
        .flat_map(|(x, y)| (0..n).map(move |z| (x, y, z)))
        .find(|&(x, y, z)| m.precsim(x, y) && m.precsim(y, z) && !m.precsim(x, z));
    RepresentationReport {
        duplicate: m.duplicate(),
        forward,
        tame,
        converse,
        partial_order: s.is_some(),
        antisymmetry_failure,
        transitivity_failure,
        s_is_uop: s.as_ref().map(|s| classify::is_uop(s).holds),
        identity_iso,
        isomorphic: s
            .as_ref()
            .map(|s| subalg::find_orthoisomorphism(a, s).is_some()),
    }
}

/// The two-state matrix with `I = {r, s}` and propositions `𝕀`, `𝕆`,
/// `({r}, a)`, `({r}, ¬a)`, `({s}, b)`, where `a(r) = 1` and `b(s) = ½`.
/// Commeasurability is overlap of domains.
pub fn two_state_example() -> RefMatrix {
    use Truth::*;
    let prop = |label: &str, r: Option<Truth>, s: Option<Truth>| RefProposition {
        label: label.to_string(),
        values: vec![r, s],
    };
    let props = vec![
        prop("I", Some(T), Some(T)),
        prop("O", Some(F), Some(F)),
        prop("a", Some(T), None),
        prop("-a", Some(F), None),
        prop("b", None, Some(Half)),
    ];
    let (one, zero, a, na, b) = (0, 1, 2, 3, 4);
    let n = props.len();
    let comm: Vec<Vec<bool>> = (0..n)
        .map(|p| {
            (0..n)
                .map(|q| {
                    props[p]
                        .values
                        .iter()
                        .zip(&props[q].values)
                        .any(|(x, y)| x.is_some() && y.is_some())
                })
                .collect()
        })
        .collect();
    let join = (0..n)
        .map(|p| {
            (0..n)
                .map(|q| {
                    if !comm[p][q] {
                        None
                    } else if p == one || q == one {
                        Some(one)
                    } else if q == zero {
                        Some(p)
                    } else if p == zero {
                        Some(q)
                    } else if (p, q) == (a, na) || (p, q) == (na, a) {
                        Some(one)
                    } else if p == q {
                        Some(p)
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    RefMatrix::from_tables(
        vec!["r".into(), "s".into()],
        props,
        comm,
        join,
        vec![zero, one, na, a, b],
        zero,
        one,
    )
}

impl RefMatrix {
    /// Index of the proposition with the given label.
    pub fn find(&self, label: &str) -> Option<usize> {
        self.props.iter().position(|p| p.label == label)
    }
}
