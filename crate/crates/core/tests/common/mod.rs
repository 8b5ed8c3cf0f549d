//! Brute-force oracles shared by the integration tests. Nothing here calls
//! the enumerator, the canonizer or the congruence and filter code of the
//! library; structures go in and out as plain matrices.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeSet;

use spo_core::{InvolutiveLattice, InvolutivePoset};

pub type Leq = Vec<Vec<bool>>;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let n = used.len();
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Smallest encoding of `(leq, inv)` over every relabelling `x ↦ perm[x]`.
pub fn brute_canonical_code(leq: &Leq, inv: &[usize], perms: &[Vec<usize>]) -> Vec<u8> {
    let n = inv.len();
    let mut best: Option<Vec<u8>> = None;
    let mut back = vec![0; n];
    for perm in perms {
        for (old, &new) in perm.iter().enumerate() {
            back[new] = old;
        }
        let mut code = Vec::with_capacity(n * n + n);
        for i in 0..n {
            for j in 0..n {
                code.push(leq[back[i]][back[j]] as u8);
            }
        }
        for i in 0..n {
            code.push(perm[inv[back[i]]] as u8);
        }
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    }
    best.expect("at least one permutation")
}

pub fn code_of(p: &InvolutivePoset, perms: &[Vec<usize>]) -> Vec<u8> {
    let n = p.n();
    let leq: Leq = (0..n)
        .map(|i| (0..n).map(|j| p.leq(i, j)).collect())
        .collect();
    brute_canonical_code(&leq, p.inv_map(), perms)
}

fn is_lattice(leq: &Leq) -> bool {
    let n = leq.len();
    let least_of = |set: &[usize]| set.iter().any(|&a| set.iter().all(|&b| leq[a][b]));
    let greatest_of = |set: &[usize]| set.iter().any(|&a| set.iter().all(|&b| leq[b][a]));
    (0..n).all(|a| {
        (0..n).all(|b| {
            let ub: Vec<usize> = (0..n).filter(|&u| leq[a][u] && leq[b][u]).collect();
            let lb: Vec<usize> = (0..n).filter(|&u| leq[u][a] && leq[u][b]).collect();
            least_of(&ub) && greatest_of(&lb)
        })
    })
}

/// Every order on `0..n` with least element 0 and greatest element `n - 1`,
/// found by trying every relation on the middle elements.
pub fn bounded_orders(n: usize) -> Vec<Leq> {
    if n == 1 {
        return vec![vec![vec![true]]];
    }
    let m = n - 2;
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (0..m).map(move |j| (i, j)))
        .filter(|(i, j)| i != j)
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut leq = vec![vec![false; n]; n];
        for i in 0..n {
            leq[i][i] = true;
            leq[0][i] = true;
            leq[i][n - 1] = true;
        }
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                leq[i + 1][j + 1] = true;
            }
        }
        let antisymmetric = (0..n).all(|i| (0..n).all(|j| i == j || !(leq[i][j] && leq[j][i])));
        let transitive =
            (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(leq[i][j] && leq[j][k]) || leq[i][k])));
        if antisymmetric && transitive {
            out.push(leq);
        }
    }
    out
}

/// One canonical code per isomorphism class of bounded lattices with an
/// antitone involution on `n` elements: every bounded order, every
/// permutation tested as an involution, canonical form by exhaustive
/// relabelling.
pub fn naive_model_codes(n: usize) -> BTreeSet<Vec<u8>> {
    let perms = permutations(n);
    let mut codes = BTreeSet::new();
    for leq in bounded_orders(n).into_iter().filter(is_lattice) {
        for inv in &perms {
            let involution = (0..n).all(|x| inv[inv[x]] == x);
            let antitone = (0..n).all(|x| (0..n).all(|y| !leq[x][y] || leq[inv[y]][inv[x]]));
            if involution && antitone {
                codes.insert(brute_canonical_code(&leq, inv, &perms));
            }
        }
    }
    codes
}

/// Set partitions of `0..n` as class vectors (restricted growth strings).
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for c in 0..=max + 1 {
            cur.push(c);
            go(cur, max.max(c), n, out);
            cur.pop();
        }
    }
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    go(&mut vec![0], 0, n, &mut out);
    out
}

/// Congruences as class vectors, by testing every partition.
pub fn naive_congruences(l: &InvolutiveLattice) -> BTreeSet<Vec<usize>> {
    let n = l.n();
    set_partitions(n)
        .into_iter()
        .filter(|c| {
            (0..n).all(|x| {
                (0..n).all(|y| {
                    c[x] != c[y]
                        || (c[l.inv(x)] == c[l.inv(y)]
                            && (0..n).all(|z| {
                                c[l.meet(x, z)] == c[l.meet(y, z)]
                                    && c[l.join(x, z)] == c[l.join(y, z)]
                            }))
                })
            })
        })
        .collect()
}

/// Proper nonempty prime filters, by testing every subset.
pub fn naive_prime_filters(l: &InvolutiveLattice) -> BTreeSet<Vec<usize>> {
    let n = l.n();
    let mut out = BTreeSet::new();
    for mask in 1u64..(1 << n) {
        let has = |x: usize| mask >> x & 1 == 1;
        if mask == (1 << n) - 1 {
            continue;
        }
        let up = (0..n).all(|x| (0..n).all(|y| !has(x) || !l.leq(x, y) || has(y)));
        let meets = (0..n).all(|x| (0..n).all(|y| !(has(x) && has(y)) || has(l.meet(x, y))));
        let prime = (0..n).all(|x| (0..n).all(|y| !has(l.join(x, y)) || has(x) || has(y)));
        if up && meets && prime {
            out.insert((0..n).filter(|&x| has(x)).collect());
        }
    }
    out
}
