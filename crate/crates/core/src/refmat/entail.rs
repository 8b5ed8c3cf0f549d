//! Partial homomorphisms and the consequence relations `⊢` and `⊢*`.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::formula::Formula;
use super::{RefMatrix, RefmatError};

/// Default cap on the number of enumerated assignments.
pub const DEFAULT_ASSIGNMENT_CAP: usize = 1 << 20;

/// `h*(φ)` for the assignment `h`, or `None` when `φ ∉ Dom(h*)`.
/// Variables missing from `h` are undefined.
pub fn extend_partial_hom(
    m: &RefMatrix,
    h: &BTreeMap<String, usize>,
    phi: &Formula,
) -> Option<usize> {
    match phi {
        Formula::Var(v) => h.get(v).copied(),
        Formula::One => Some(m.one()),
        Formula::Zero => Some(m.zero()),
        Formula::Neg(a) => extend_partial_hom(m, h, a).map(|p| m.neg(p)),
        Formula::Or(a, b) => {
            let p = extend_partial_hom(m, h, a)?;
            let q = extend_partial_hom(m, h, b)?;
            if m.commeasurable(p, q) {
                m.join(p, q)
            } else {
                None
            }
        }
    }
}

fn all_vars(gamma: &[Formula], phi: &Formula) -> Vec<String> {
    let mut vars: BTreeSet<String> = phi.vars();
    for g in gamma {
        vars.extend(g.vars());
    }
    vars.into_iter().collect()
}

/// `Γ ⊢ φ`: under every assignment and at every index, if all of `Γ` is
/// defined and designated then so is `φ`.
pub fn entails(
    m: &RefMatrix,
    gamma: &[Formula],
    phi: &Formula,
    cap: usize,
) -> Result<bool, RefmatError> {
    let vars = all_vars(gamma, phi);
    let n = m.len();
    let total = (0..vars.len()).try_fold(1usize, |acc, _| acc.checked_mul(n).filter(|&t| t <= cap));
    let Some(total) = total else {
        return Err(RefmatError::BudgetExceeded(cap));
    };
    let ok = (0..total).into_par_iter().all(|code| {
        let mut c = code;
        let h: BTreeMap<String, usize> = vars
            .iter()
            .map(|v| {
                let p = c % n;
                c /= n;
                (v.clone(), p)
            })
            .collect();
        let Some(premises) = gamma
            .iter()
            .map(|g| extend_partial_hom(m, &h, g))
            .collect::<Option<Vec<_>>>()
        else {
            return true;
        };
        let conclusion = extend_partial_hom(m, &h, phi);
        (0..m.indices.len()).all(|i| {
            !premises.iter().all(|&p| m.designated(p, i))
                || conclusion.is_some_and(|q| m.designated(q, i))
        })
    });
    Ok(ok)
}

/// `Γ ⊢* φ`: `Γ ⊢ φ` and `V(φ) ⊆ V(Γ)`.
pub fn entails_structural(
    m: &RefMatrix,
    gamma: &[Formula],
    phi: &Formula,
    cap: usize,
) -> Result<bool, RefmatError> {
    let vg: BTreeSet<String> = gamma.iter().flat_map(Formula::vars).collect();
    if !phi.vars().is_subset(&vg) {
        return Ok(false);
    }
    entails(m, gamma, phi, cap)
}

/// A random formula over `vars` of depth at most `depth`.
pub fn random_formula<R: Rng>(rng: &mut R, vars: &[&str], depth: usize) -> Formula {
    let leaf = depth == 0 || rng.gen_ratio(1, 3);
    if leaf {
        return match rng.gen_range(0..10) {
            0 => Formula::Zero,
            1 => Formula::One,
            _ => Formula::var(vars.choose(rng).expect("nonempty")),
        };
    }
    if rng.gen_bool(0.4) {
        Formula::neg(random_formula(rng, vars, depth - 1))
    } else {
        Formula::or(
            random_formula(rng, vars, depth - 1),
            random_formula(rng, vars, depth - 1),
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubstitutionTrials {
    pub trials: usize,
    /// Trials where `Γ ⊢* φ` held, so that `σΓ ⊢* σφ` was required.
    pub premises_held: usize,
    pub violations: usize,
    /// First failing instance, as `(Γ, φ, σ)` rendered in prefix syntax.
    pub first_failure: Option<String>,
}

/// Random instances of substitution invariance for `⊢*`: if `Γ ⊢* φ` then
/// `σ(Γ) ⊢* σ(φ)`. Formulas use at most three variables before and after
/// substitution. Trial `t` uses ChaCha8 stream `t` of `seed`.
pub fn substitution_trials(
    m: &RefMatrix,
    trials: usize,
    seed: u64,
    cap: usize,
) -> Result<SubstitutionTrials, RefmatError> {
    const VARS: [&str; 3] = ["x", "y", "z"];
    const TARGETS: [&str; 3] = ["x", "u", "v"];
    let mut out = SubstitutionTrials {
        trials,
        premises_held: 0,
        violations: 0,
        first_failure: None,
    };
    for t in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(t as u64);
        let gamma: Vec<Formula> = (0..rng.gen_range(1..=2))
            .map(|_| random_formula(&mut rng, &VARS, 2))
            .collect();
        let phi = match rng.gen_range(0..3) {
            0 => gamma[0].clone(),
            1 => Formula::or(
                Formula::or(gamma[0].clone(), Formula::neg(gamma[0].clone())),
                random_formula(&mut rng, &VARS, 1),
            ),
            _ => random_formula(&mut rng, &VARS, 2),
        };
        let sigma: BTreeMap<String, Formula> = VARS
            .iter()
            .map(|v| (v.to_string(), random_formula(&mut rng, &TARGETS, 1)))
            .collect();
        if !entails_structural(m, &gamma, &phi, cap)? {
            continue;
        }
        out.premises_held += 1;
        let sg: Vec<Formula> = gamma.iter().map(|g| g.substitute(&sigma)).collect();
        let sp = phi.substitute(&sigma);
        if !entails_structural(m, &sg, &sp, cap)? {
            out.violations += 1;
            if out.first_failure.is_none() {
                let g: Vec<String> = gamma.iter().map(ToString::to_string).collect();
                let s: Vec<String> = sigma.iter().map(|(k, v)| format!("{k}:={v}")).collect();
                out.first_failure = Some(format!(
                    "[{}] |- {} under {}",
                    g.join(", "),
                    phi,
                    s.join(" ")
                ));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::refmat::two_state_example;

    fn f(s: &str) -> Formula {
        Formula::parse(s).unwrap()
    }

    #[test]
    fn two_state_entailment_and_its_substitution_instance() {
        let m = two_state_example();
        let cap = DEFAULT_ASSIGNMENT_CAP;
        assert!(entails(&m, &[f("x")], &f("or(or(x,neg(x)),y)"), cap).unwrap());
        assert!(!entails(&m, &[f("x")], &f("or(or(x,neg(x)),or(u,v))"), cap).unwrap());
        let h = BTreeMap::from([
            ("x".to_string(), m.find("a").unwrap()),
            ("u".to_string(), m.find("a").unwrap()),
            ("v".to_string(), m.find("b").unwrap()),
        ]);
        assert_eq!(
            extend_partial_hom(&m, &h, &f("or(or(x,neg(x)),or(u,v))")),
            None
        );
        assert_eq!(
            extend_partial_hom(&m, &h, &f("or(x,neg(x))")),
            Some(m.one())
        );
    }

    #[test]
    fn structural_relation_drops_new_variables() {
        let m = two_state_example();
        assert!(!entails_structural(&m, &[f("x")], &f("or(or(x,neg(x)),y)"), 1000).unwrap());
        assert!(entails_structural(&m, &[f("x"), f("y")], &f("y"), 1000).unwrap());
    }

    #[test]
    fn constant_one_everywhere() {
        let m = two_state_example();
        assert_eq!(
            extend_partial_hom(&m, &BTreeMap::new(), &Formula::One),
            Some(m.one())
        );
        assert!(entails(&m, &[], &Formula::One, 10).unwrap());
    }

    #[test]
    fn budget() {
        let m = two_state_example();
        assert_eq!(
            entails(&m, &[f("or(x,or(y,z))")], &f("x"), 100).unwrap_err(),
            RefmatError::BudgetExceeded(100)
        );
    }
}
