//! Dense bit sets over element indices.

use std::fmt;

use crate::Elem;

/// A set of element indices backed by 64-bit words.
#[derive(Clone, Default)]
pub struct ElemSet {
    words: Vec<u64>,
}

impl ElemSet {
    /// Empty set able to hold indices below `n` without reallocating.
    pub fn new(n: usize) -> Self {
        ElemSet {
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::new(n);
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    pub fn from_elems<I: IntoIterator<Item = Elem>>(n: usize, elems: I) -> Self {
        let mut s = Self::new(n);
        for e in elems {
            s.insert(e);
        }
        s
    }

    /// Inserts `e`, returning `true` if it was absent.
    pub fn insert(&mut self, e: Elem) -> bool {
        let (w, b) = (e / 64, e % 64);
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, e: Elem) {
        if let Some(w) = self.words.get_mut(e / 64) {
            *w &= !(1u64 << (e % 64));
        }
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.words
            .get(e / 64)
            .is_some_and(|w| w & (1 << (e % 64)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, &w)| w & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn intersects(&self, other: &ElemSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn union_with(&mut self, other: &ElemSet) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &ElemSet) {
        for (i, a) in self.words.iter_mut().enumerate() {
            *a &= other.words.get(i).copied().unwrap_or(0);
        }
    }

    /// Members strictly below index `bound`.
    pub fn prefix(&self, bound: Elem) -> ElemSet {
        let mut out = self.clone();
        for (i, w) in out.words.iter_mut().enumerate() {
            let lo = i * 64;
            if lo >= bound {
                *w = 0;
            } else if bound - lo < 64 {
                *w &= (1u64 << (bound - lo)) - 1;
            }
        }
        out
    }

    pub fn to_vec(&self) -> Vec<Elem> {
        self.iter().collect()
    }

    fn trimmed(&self) -> &[u64] {
        let end = self
            .words
            .iter()
            .rposition(|&w| w != 0)
            .map_or(0, |i| i + 1);
        &self.words[..end]
    }
}

impl PartialEq for ElemSet {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for ElemSet {}

impl std::hash::Hash for ElemSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state);
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ElemSet {
    /// Orders by sorted member list.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<Elem> for ElemSet {
    fn from_iter<I: IntoIterator<Item = Elem>>(iter: I) -> Self {
        let mut s = ElemSet::default();
        for e in iter {
            s.insert(e);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_iter() {
        let mut s = ElemSet::new(130);
        assert!(s.insert(3));
        assert!(!s.insert(3));
        s.insert(64);
        s.insert(129);
        assert_eq!(s.to_vec(), vec![3, 64, 129]);
        s.remove(64);
        assert_eq!(s.len(), 2);
        assert!(s.contains(129) && !s.contains(64));
    }

    #[test]
    fn prefix_truncates() {
        let s = ElemSet::from_elems(100, [1, 5, 63, 64, 70]);
        assert_eq!(s.prefix(64).to_vec(), vec![1, 5, 63]);
        assert_eq!(s.prefix(65).to_vec(), vec![1, 5, 63, 64]);
        assert_eq!(s.prefix(0).to_vec(), Vec::<Elem>::new());
    }

    #[test]
    fn subset_and_intersection() {
        let a = ElemSet::from_elems(10, [1, 2]);
        let b = ElemSet::from_elems(10, [1, 2, 7]);
        assert!(a.is_subset(&b) && !b.is_subset(&a));
        assert!(a.intersects(&b));
        assert!(!a.intersects(&ElemSet::from_elems(10, [9])));
    }

    #[test]
    fn equality_ignores_capacity() {
        let a = ElemSet::from_elems(200, [4]);
        let b: ElemSet = [4].into_iter().collect();
        assert_eq!(a, b);
        let mut c = ElemSet::from_elems(200, [4, 150]);
        c.remove(150);
        assert_eq!(a, c);
    }
}
