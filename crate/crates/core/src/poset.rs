//! Finite bounded posets with an antitone involution, and their lattice form.
//!
//! Elements are dense indices `0..n`. An [`InvolutivePoset`] is always valid:
//! the order is a partial order, `inv` is an order-reversing involution and
//! the declared bounds are the least and greatest elements with
//! `inv(bottom) == top`. [`InvolutiveLattice`] adds total meet and join
//! tables.

use std::fmt;
use std::ops::Deref;

use thiserror::Error;

use crate::{Elem, ElemSet};

/// Which partial-order axiom failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderAxiom {
    Reflexivity,
    Antisymmetry,
    Transitivity,
}

impl fmt::Display for OrderAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderAxiom::Reflexivity => "reflexivity",
            OrderAxiom::Antisymmetry => "antisymmetry",
            OrderAxiom::Transitivity => "transitivity",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("structure has no elements")]
    Empty,
    #[error("expected {expected} entries, found {found}")]
    Shape { expected: usize, found: usize },
    #[error("element {elem} out of range for a structure of size {n}")]
    ElementOutOfRange { elem: Elem, n: usize },
    #[error("not a partial order: {axiom} fails at ({}, {})", witness.0, witness.1)]
    NotAPartialOrder {
        axiom: OrderAxiom,
        witness: (Elem, Elem),
    },
    #[error("involution is not antitone: {} <= {} but not inv({}) <= inv({})", witness.0, witness.1, witness.1, witness.0)]
    NotAntitone { witness: (Elem, Elem) },
    #[error("map is not an involution: inv({}) = {} but inv({}) != {}", witness.0, witness.1, witness.1, witness.0)]
    NotInvolutive { witness: (Elem, Elem) },
    #[error("bounds missing: ({}, {}) violates bottom/top requirements", witness.0, witness.1)]
    BoundsMissing { witness: (Elem, Elem) },
    #[error("not a lattice: {} and {} lack a join or meet", witness.0, witness.1)]
    NotALattice { witness: (Elem, Elem) },
    #[error("labels: {0}")]
    Labels(String),
}

/// Unvalidated input for [`InvolutivePoset::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawStructure {
    /// Row-major `n x n` order matrix, `leq[x][y]` meaning `x <= y`.
    pub leq: Vec<Vec<bool>>,
    pub inv: Vec<Elem>,
    pub bottom: Elem,
    pub top: Elem,
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, PartialEq, Eq)]
pub struct InvolutivePoset {
    n: usize,
    leq: Vec<bool>,
    inv: Vec<Elem>,
    bottom: Elem,
    top: Elem,
    labels: Option<Vec<String>>,
    up: Vec<ElemSet>,
    down: Vec<ElemSet>,
}

impl fmt::Debug for InvolutivePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("InvolutivePoset")
            .field("n", &self.n)
            .field("covers", &self.covers())
            .field("inv", &self.inv)
            .field("labels", &self.labels)
            .finish()
    }
}

impl InvolutivePoset {
    pub fn validate(raw: RawStructure) -> Result<Self, StructureError> {
        let n = raw.leq.len();
        if n == 0 {
            return Err(StructureError::Empty);
        }
        for row in &raw.leq {
            if row.len() != n {
                return Err(StructureError::Shape {
                    expected: n,
                    found: row.len(),
                });
            }
        }
        if raw.inv.len() != n {
            return Err(StructureError::Shape {
                expected: n,
                found: raw.inv.len(),
            });
        }
        for &e in raw.inv.iter().chain([&raw.bottom, &raw.top]) {
            if e >= n {
                return Err(StructureError::ElementOutOfRange { elem: e, n });
            }
        }
        if let Some(labels) = &raw.labels {
            check_labels(labels, n)?;
        }
        let leq = &raw.leq;
        for x in 0..n {
            if !leq[x][x] {
                return Err(StructureError::NotAPartialOrder {
                    axiom: OrderAxiom::Reflexivity,
                    witness: (x, x),
                });
            }
        }
        for x in 0..n {
            for y in 0..n {
                if x != y && leq[x][y] && leq[y][x] {
                    return Err(StructureError::NotAPartialOrder {
                        axiom: OrderAxiom::Antisymmetry,
                        witness: (x, y),
                    });
                }
            }
        }
        for x in 0..n {
            for z in 0..n {
                if !leq[x][z] && (0..n).any(|y| leq[x][y] && leq[y][z]) {
                    return Err(StructureError::NotAPartialOrder {
                        axiom: OrderAxiom::Transitivity,
                        witness: (x, z),
                    });
                }
            }
        }
        let inv = &raw.inv;
        for x in 0..n {
            if inv[inv[x]] != x {
                return Err(StructureError::NotInvolutive {
                    witness: (x, inv[x]),
                });
            }
        }
        for x in 0..n {
            for y in 0..n {
                if leq[x][y] && !leq[inv[y]][inv[x]] {
                    return Err(StructureError::NotAntitone { witness: (x, y) });
                }
            }
        }
        for x in 0..n {
            if !leq[raw.bottom][x] {
                return Err(StructureError::BoundsMissing {
                    witness: (raw.bottom, x),
                });
            }
            if !leq[x][raw.top] {
                return Err(StructureError::BoundsMissing {
                    witness: (x, raw.top),
                });
            }
        }
        if inv[raw.bottom] != raw.top {
            return Err(StructureError::BoundsMissing {
                witness: (raw.bottom, inv[raw.bottom]),
            });
        }
        Ok(Self::from_valid_parts(
            raw.leq.concat(),
            raw.inv,
            raw.bottom,
            raw.top,
            raw.labels,
        ))
    }

    /// Builds a structure from a generating relation `(lo, hi)` meaning
    /// `lo <= hi`; the order is its reflexive-transitive closure.
    pub fn from_covers(
        n: usize,
        covers: &[(Elem, Elem)],
        inv: Vec<Elem>,
        bottom: Elem,
        top: Elem,
        labels: Option<Vec<String>>,
    ) -> Result<Self, StructureError> {
        let mut leq = vec![vec![false; n]; n];
        for (x, row) in leq.iter_mut().enumerate() {
            row[x] = true;
        }
        for &(a, b) in covers {
            for e in [a, b] {
                if e >= n {
                    return Err(StructureError::ElementOutOfRange { elem: e, n });
                }
            }
            leq[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        Self::validate(RawStructure {
            leq,
            inv,
            bottom,
            top,
            labels,
        })
    }

    fn from_valid_parts(
        leq: Vec<bool>,
        inv: Vec<Elem>,
        bottom: Elem,
        top: Elem,
        labels: Option<Vec<String>>,
    ) -> Self {
        let n = inv.len();
        let up = (0..n)
            .map(|x| ElemSet::from_elems(n, (0..n).filter(|&y| leq[x * n + y])))
            .collect();
        let down = (0..n)
            .map(|x| ElemSet::from_elems(n, (0..n).filter(|&y| leq[y * n + x])))
            .collect();
        InvolutivePoset {
            n,
            leq,
            inv,
            bottom,
            top,
            labels,
            up,
            down,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.n
    }

    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.leq[x * self.n + y]
    }

    pub fn lt(&self, x: Elem, y: Elem) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn inv(&self, x: Elem) -> Elem {
        self.inv[x]
    }

    pub fn inv_map(&self) -> &[Elem] {
        &self.inv
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    /// Elements `>= x`.
    pub fn up_set(&self, x: Elem) -> &ElemSet {
        &self.up[x]
    }

    /// Elements `<= x`.
    pub fn down_set(&self, x: Elem) -> &ElemSet {
        &self.down[x]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `x`: its label if present, else its index.
    pub fn label(&self, x: Elem) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    /// Resolves a label or a decimal index.
    pub fn find(&self, name: &str) -> Option<Elem> {
        if let Some(l) = &self.labels {
            if let Some(i) = l.iter().position(|s| s == name) {
                return Some(i);
            }
        }
        name.parse().ok().filter(|&i| i < self.n)
    }

    pub fn with_labels(mut self, labels: Option<Vec<String>>) -> Result<Self, StructureError> {
        if let Some(l) = &labels {
            check_labels(l, self.n)?;
        }
        self.labels = labels;
        Ok(self)
    }

    /// Cover pairs `(x, y)` with `x < y` and nothing strictly between,
    /// sorted lexicographically.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in 0..self.n {
                if self.lt(x, y) && !(0..self.n).any(|z| self.lt(x, z) && self.lt(z, y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Least upper bound, if it exists.
    pub fn partial_join(&self, x: Elem, y: Elem) -> Option<Elem> {
        let mut ub = self.up[x].clone();
        ub.intersect_with(&self.up[y]);
        let found = ub.iter().find(|&u| ub.is_subset(&self.up[u]));
        found
    }

    /// Greatest lower bound, if it exists.
    pub fn partial_meet(&self, x: Elem, y: Elem) -> Option<Elem> {
        let mut lb = self.down[x].clone();
        lb.intersect_with(&self.down[y]);
        let found = lb.iter().find(|&l| lb.is_subset(&self.down[l]));
        found
    }

    /// Number of elements strictly below `x`.
    pub fn below_count(&self, x: Elem) -> usize {
        self.down[x].len() - 1
    }

    /// Number of elements strictly above `x`.
    pub fn above_count(&self, x: Elem) -> usize {
        self.up[x].len() - 1
    }

    /// Length of the longest chain from the bottom to `x`.
    pub fn height(&self, x: Elem) -> usize {
        let mut h = vec![0usize; self.n];
        let mut order: Vec<Elem> = (0..self.n).collect();
        order.sort_by_key(|&e| self.below_count(e));
        for &e in &order {
            h[e] = self.down[e]
                .iter()
                .filter(|&d| d != e)
                .map(|d| h[d] + 1)
                .max()
                .unwrap_or(0);
        }
        h[x]
    }

    /// Restriction to a subset containing the bounds and closed under `inv`.
    /// Returns the induced structure and the map from new to old indices.
    pub fn restrict(
        &self,
        members: &ElemSet,
    ) -> Result<(InvolutivePoset, Vec<Elem>), StructureError> {
        let old: Vec<Elem> = members.iter().collect();
        let mut new_of = vec![usize::MAX; self.n];
        for (i, &o) in old.iter().enumerate() {
            new_of[o] = i;
        }
        let m = old.len();
        let mut inv = Vec::with_capacity(m);
        for &o in &old {
            let j = new_of[self.inv(o)];
            if j == usize::MAX {
                return Err(StructureError::NotInvolutive {
                    witness: (o, self.inv(o)),
                });
            }
            inv.push(j);
        }
        let leq = old
            .iter()
            .map(|&a| old.iter().map(|&b| self.leq(a, b)).collect())
            .collect();
        let bound = |e: Elem| {
            if new_of[e] == usize::MAX {
                Err(StructureError::BoundsMissing { witness: (e, e) })
            } else {
                Ok(new_of[e])
            }
        };
        let raw = RawStructure {
            leq,
            inv,
            bottom: bound(self.bottom)?,
            top: bound(self.top)?,
            labels: self
                .labels
                .as_ref()
                .map(|l| old.iter().map(|&o| l[o].clone()).collect()),
        };
        Ok((InvolutivePoset::validate(raw)?, old))
    }

    /// Unvalidated copy, for building modified structures.
    pub fn to_raw(&self) -> RawStructure {
        RawStructure {
            leq: (0..self.n)
                .map(|x| (0..self.n).map(|y| self.leq(x, y)).collect())
                .collect(),
            inv: self.inv.clone(),
            bottom: self.bottom,
            top: self.top,
            labels: self.labels.clone(),
        }
    }
}

fn check_labels(labels: &[String], n: usize) -> Result<(), StructureError> {
    if labels.len() != n {
        return Err(StructureError::Labels(format!(
            "{} labels for {} elements",
            labels.len(),
            n
        )));
    }
    for (i, l) in labels.iter().enumerate() {
        if l.is_empty() || l.chars().any(char::is_whitespace) {
            return Err(StructureError::Labels(format!(
                "label {i} is empty or has whitespace"
            )));
        }
        if labels[..i].contains(l) {
            return Err(StructureError::Labels(format!("duplicate label {l}")));
        }
    }
    Ok(())
}

/// A bounded involutive poset in which every pair has a meet and a join.
#[derive(Clone, PartialEq, Eq)]
pub struct InvolutiveLattice {
    poset: InvolutivePoset,
    meet: Vec<Elem>,
    join: Vec<Elem>,
}

impl fmt::Debug for InvolutiveLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poset.fmt(f)
    }
}

impl Deref for InvolutiveLattice {
    type Target = InvolutivePoset;

    fn deref(&self) -> &InvolutivePoset {
        &self.poset
    }
}

impl InvolutiveLattice {
    /// Promotes a poset, failing on the lexicographically first pair without
    /// a join or meet.
    pub fn try_lattice(poset: InvolutivePoset) -> Result<Self, StructureError> {
        let n = poset.n();
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                match (poset.partial_meet(x, y), poset.partial_join(x, y)) {
                    (Some(m), Some(j)) => {
                        meet[x * n + y] = m;
                        join[x * n + y] = j;
                    }
                    _ => return Err(StructureError::NotALattice { witness: (x, y) }),
                }
            }
        }
        Ok(InvolutiveLattice { poset, meet, join })
    }

    pub fn from_raw(raw: RawStructure) -> Result<Self, StructureError> {
        Self::try_lattice(InvolutivePoset::validate(raw)?)
    }

    pub fn from_covers(
        n: usize,
        covers: &[(Elem, Elem)],
        inv: Vec<Elem>,
        bottom: Elem,
        top: Elem,
        labels: Option<Vec<String>>,
    ) -> Result<Self, StructureError> {
        Self::try_lattice(InvolutivePoset::from_covers(
            n, covers, inv, bottom, top, labels,
        )?)
    }

    pub fn poset(&self) -> &InvolutivePoset {
        &self.poset
    }

    pub fn into_poset(self) -> InvolutivePoset {
        self.poset
    }

    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet[x * self.n() + y]
    }

    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join[x * self.n() + y]
    }

    pub fn with_labels(self, labels: Option<Vec<String>>) -> Result<Self, StructureError> {
        Ok(InvolutiveLattice {
            poset: self.poset.with_labels(labels)?,
            meet: self.meet,
            join: self.join,
        })
    }

    /// `x ∧ x′ = 0`.
    pub fn is_sharp(&self, x: Elem) -> bool {
        self.meet(x, self.inv(x)) == self.bottom()
    }

    pub fn sharp_elements(&self) -> Vec<Elem> {
        self.elements().filter(|&x| self.is_sharp(x)).collect()
    }

    /// Closure of `seed` under meet, join, involution and the bounds.
    pub fn generated_subalgebra(&self, seed: &[Elem]) -> ElemSet {
        let n = self.n();
        let mut set = ElemSet::new(n);
        let mut queue: Vec<Elem> = seed.to_vec();
        queue.push(self.bottom());
        queue.push(self.top());
        let mut members = Vec::new();
        while let Some(e) = queue.pop() {
            if !set.insert(e) {
                continue;
            }
            members.push(e);
            queue.push(self.inv(e));
            for &m in &members {
                queue.push(self.meet(e, m));
                queue.push(self.join(e, m));
            }
        }
        set
    }

    /// Closure of `seed` under meet and join only.
    pub fn generated_sublattice(&self, seed: &[Elem]) -> ElemSet {
        let n = self.n();
        let mut set = ElemSet::new(n);
        let mut queue: Vec<Elem> = seed.to_vec();
        let mut members = Vec::new();
        while let Some(e) = queue.pop() {
            if !set.insert(e) {
                continue;
            }
            members.push(e);
            for &m in &members {
                queue.push(self.meet(e, m));
                queue.push(self.join(e, m));
            }
        }
        set
    }

    /// Whether `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` holds on all triples of
    /// `members` (the set must be closed under the lattice operations).
    pub fn is_distributive_on(&self, members: &ElemSet) -> bool {
        let v: Vec<Elem> = members.iter().collect();
        v.iter().all(|&x| {
            v.iter().all(|&y| {
                v.iter().all(|&z| {
                    self.meet(x, self.join(y, z)) == self.join(self.meet(x, y), self.meet(x, z))
                })
            })
        })
    }

    /// Induced structure on a subuniverse, with the map to parent indices.
    pub fn restrict(
        &self,
        members: &ElemSet,
    ) -> Result<(InvolutiveLattice, Vec<Elem>), StructureError> {
        let (p, map) = self.poset.restrict(members)?;
        Ok((InvolutiveLattice::try_lattice(p)?, map))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain3() -> InvolutiveLattice {
        InvolutiveLattice::from_covers(3, &[(0, 1), (1, 2)], vec![2, 1, 0], 0, 2, None).unwrap()
    }

    #[test]
    fn chain_ops() {
        let k = chain3();
        assert_eq!(k.meet(1, 2), 1);
        assert_eq!(k.join(0, 1), 1);
        assert_eq!(k.covers(), vec![(0, 1), (1, 2)]);
        assert!(!k.is_sharp(1));
        assert_eq!(k.sharp_elements(), vec![0, 2]);
        assert_eq!(k.height(2), 2);
    }

    #[test]
    fn singleton_is_trivial_structure() {
        let p = InvolutivePoset::validate(RawStructure {
            leq: vec![vec![true]],
            inv: vec![0],
            bottom: 0,
            top: 0,
            labels: None,
        })
        .unwrap();
        assert!(InvolutiveLattice::try_lattice(p).is_ok());
    }

    #[test]
    fn rejects_cycle() {
        let err =
            InvolutivePoset::from_covers(3, &[(0, 1), (1, 0), (1, 2)], vec![2, 1, 0], 0, 2, None)
                .unwrap_err();
        assert!(matches!(
            err,
            StructureError::NotAPartialOrder {
                axiom: OrderAxiom::Antisymmetry,
                witness: (0, 1)
            }
        ));
    }

    #[test]
    fn rejects_non_involution_and_non_antitone() {
        let e = InvolutivePoset::from_covers(3, &[(0, 1), (1, 2)], vec![2, 0, 1], 0, 2, None)
            .unwrap_err();
        assert!(matches!(e, StructureError::NotInvolutive { .. }));
        // identity is an involution but not antitone
        let e = InvolutivePoset::from_covers(3, &[(0, 1), (1, 2)], vec![0, 1, 2], 0, 2, None)
            .unwrap_err();
        assert!(matches!(e, StructureError::NotAntitone { witness: (0, 1) }));
    }

    #[test]
    fn rejects_bad_bounds() {
        let e = InvolutivePoset::from_covers(3, &[(0, 1), (1, 2)], vec![2, 1, 0], 1, 2, None)
            .unwrap_err();
        assert!(matches!(
            e,
            StructureError::BoundsMissing { witness: (1, 0) }
        ));
    }

    #[test]
    fn non_lattice_detected() {
        // 0 < a, b < c, d < 1 with a, b both below c and d: no join of a, b
        let covers = [
            (0, 1),
            (0, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
            (3, 5),
            (4, 5),
        ];
        let p =
            InvolutivePoset::from_covers(6, &covers, vec![5, 3, 4, 1, 2, 0], 0, 5, None).unwrap();
        assert_eq!(p.partial_join(1, 2), None);
        let e = InvolutiveLattice::try_lattice(p).unwrap_err();
        assert_eq!(e, StructureError::NotALattice { witness: (1, 2) });
    }
}
