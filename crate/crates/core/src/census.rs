//! Classification of every enumerated model, with the characterization
//! theorems cross-checked instance by instance.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::classify::{self, Class, Classifier};
use crate::enumerate::{self, EnumError};
use crate::subalg::{self, ForbiddenKind, DEFAULT_BUDGET};
use crate::{commute, constructs, InvolutiveLattice};

/// One row of the census table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub name: String,
    pub size: usize,
    pub flags: Vec<Class>,
}

/// Instance counts for one cross-checked statement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremCheck {
    pub name: &'static str,
    /// Models to which the statement applies.
    pub tested: usize,
    pub counterexamples: usize,
    /// Name of the first failing model.
    pub first_failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub rows: Vec<CensusRow>,
    pub class_counts: BTreeMap<Class, usize>,
    pub checks: Vec<TheoremCheck>,
}

impl Census {
    pub fn counterexamples(&self) -> usize {
        self.checks.iter().map(|c| c.counterexamples).sum()
    }

    pub fn check(&self, name: &str) -> Option<&TheoremCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn merge(&mut self, other: Census) {
        self.rows.extend(other.rows);
        for (k, v) in other.class_counts {
            *self.class_counts.entry(k).or_default() += v;
        }
        for (mine, theirs) in self.checks.iter_mut().zip(other.checks) {
            mine.tested += theirs.tested;
            mine.counterexamples += theirs.counterexamples;
            if mine.first_failure.is_none() {
                mine.first_failure = theirs.first_failure;
            }
        }
    }
}

type Check = fn(&InvolutiveLattice, &Classifier) -> Option<bool>;

fn pkl_only(c: &Classifier, f: impl FnOnce() -> bool) -> Option<bool> {
    c.holds(Class::Pkl).then(f)
}

fn no_subalgebra(l: &InvolutiveLattice, kind: ForbiddenKind) -> bool {
    subalg::find_subalgebra(l, kind).is_none()
}

fn all_pairs(l: &InvolutiveLattice, mut f: impl FnMut(usize, usize) -> bool) -> bool {
    l.elements().all(|x| l.elements().all(|y| f(x, y)))
}

/// Statements checked on every model where they apply. `None` means the
/// statement does not apply to the model.
pub const CHECKS: &[(&str, Check)] = &[
    ("class inclusions", |_, c| {
        Some(c.report().inclusion_violation().is_none())
    }),
    ("sp iff sp1 and sp2", |l, c| {
        pkl_only(c, || {
            let p = classify::sp_profile(l);
            p.sp == (p.sp1 && p.sp2)
        })
    }),
    ("sp iff equational form", |l, c| {
        pkl_only(c, || {
            let p = classify::sp_profile(l);
            p.sp == p.equational && p.sp == p.alternative
        })
    }),
    ("sp1 iff quasi-identity @", |l, c| {
        pkl_only(c, || {
            let p = classify::sp_profile(l);
            p.sp1 == p.at_quasi
        })
    }),
    ("sp1 iff no B6 or B8 subalgebra", |l, c| {
        pkl_only(c, || {
            c.holds(Class::Sp1)
                == (no_subalgebra(l, ForbiddenKind::B6) && no_subalgebra(l, ForbiddenKind::B8))
        })
    }),
    ("paraorthomodular iff no B6 subalgebra", |l, c| {
        pkl_only(c, || {
            c.holds(Class::Poml) == no_subalgebra(l, ForbiddenKind::B6)
        })
    }),
    ("spo iff tame", |l, c| {
        pkl_only(c, || c.holds(Class::Spo) == subalg::is_tame(l).holds)
    }),
    ("spo iff no forbidden configuration", |l, c| {
        pkl_only(c, || {
            let none = subalg::forbidden_configuration(l, DEFAULT_BUDGET)
                .expect("budget suffices for small models")
                .is_none();
            c.holds(Class::Spo) == none
        })
    }),
    ("pasting set is a Kleene subalgebra", |l, c| {
        c.holds(Class::Spo).then(|| {
            all_pairs(l, |a, b| {
                if !l.leq(a, b) {
                    return true;
                }
                let s = subalg::pasting_set(l, a, b);
                l.generated_subalgebra(&s.to_vec()) == s && l.is_distributive_on(&s)
            })
        })
    }),
    ("total sasaki residuated iff oml", |l, c| {
        pkl_only(c, || {
            let g = constructs::sasaki_total(l);
            constructs::residuation_law(l, &g).holds == c.holds(Class::Oml)
        })
    }),
    (
        "residual groupoid iff spo and residuation condition",
        |l, c| {
            pkl_only(c, || {
                let g = constructs::residual_groupoid(l);
                constructs::is_left_residuated(l, &g).holds
                    == (c.holds(Class::Spo) && c.holds(Class::Residuation))
            })
        },
    ),
    ("sp2 iff localizer condition", |l, c| {
        pkl_only(c, || {
            c.holds(Class::Sp2) == constructs::localizer_sp2_condition(l).holds
        })
    }),
    ("localizer pi identities", |l, c| {
        pkl_only(c, || constructs::pi_identities(l).holds)
    }),
    ("sharp elements form a sub-orthomodular poset", |l, c| {
        c.holds(Class::Spo)
            .then(|| classify::is_sub_orthomodular(l).holds)
    }),
    ("sharp commutation", |l, c| {
        c.holds(Class::Spo).then(|| {
            let sharp = l.sharp_elements();
            sharp.iter().all(|&x| {
                sharp.iter().all(|&y| {
                    commute::sharp_commutation(l, x, y)
                        .expect("sharp inputs")
                        .consistent()
                })
            })
        })
    }),
    (
        "mpkl commutes iff generated subalgebra distributive",
        |l, c| {
            c.holds(Class::Mpkl).then(|| {
                commute::sg_distributive_iff_commutes(l)
                    .expect("modular input")
                    .holds
            })
        },
    ),
    ("mpkl commutation equivalences", |l, c| {
        c.holds(Class::Mpkl).then(|| {
            all_pairs(l, |x, y| {
                commute::commutation_equivalences(l, x, y)
                    .expect("modular input")
                    .consistent()
            })
        })
    }),
    (
        "jonsson criterion agrees with direct distributivity",
        |l, c| {
            c.holds(Class::Modular).then(|| {
                all_pairs(l, |x, y| {
                    commute::jonsson_criterion(l, x, y)
                        == l.is_distributive_on(&l.generated_subalgebra(&[x, y]))
                })
            })
        },
    ),
    (
        "sublattice generated by two subalgebras is a subalgebra",
        |l, _| {
            Some(all_pairs(l, |x, y| {
                commute::sublattice_of_subalgebras_is_closed(l, x, y)
            }))
        },
    ),
    ("ordinal sum preserves distributivity", |l, c| {
        let s = constructs::ordinal_sum(l);
        Some(c.holds(Class::Distributive) == classify::is_distributive(&s).holds)
    }),
    ("interval algebra of an oml is sp", |l, c| {
        c.holds(Class::Oml).then(|| {
            let (m, _) = constructs::moisil_interval(l).expect("orthomodular input");
            classify::is_sp(&m).holds && Classifier::for_lattice(&m).holds(Class::Spo)
        })
    }),
];

fn empty_census() -> Census {
    Census {
        rows: Vec::new(),
        class_counts: BTreeMap::new(),
        checks: CHECKS
            .iter()
            .map(|&(name, _)| TheoremCheck {
                name,
                tested: 0,
                counterexamples: 0,
                first_failure: None,
            })
            .collect(),
    }
}

/// Classifies one model and evaluates every applicable check.
pub fn classify_model(name: String, l: &InvolutiveLattice) -> Census {
    let c = Classifier::for_lattice(l);
    let flags = c.report().flags();
    let mut out = empty_census();
    for &f in &flags {
        *out.class_counts.entry(f).or_default() += 1;
    }
    for (slot, &(_, check)) in out.checks.iter_mut().zip(CHECKS) {
        if let Some(ok) = check(l, &c) {
            slot.tested += 1;
            if !ok {
                slot.counterexamples += 1;
                slot.first_failure = Some(name.clone());
            }
        }
    }
    out.rows.push(CensusRow {
        name,
        size: l.n(),
        flags,
    });
    out
}

/// Census of every model of size `n`. Models are named `m<n>.<i>` in
/// canonical order.
pub fn classify_all(n: usize, cap: usize) -> Result<Census, EnumError> {
    let models = enumerate::all_models(n, cap)?;
    let parts: Vec<Census> = models
        .par_iter()
        .enumerate()
        .map(|(i, l)| classify_model(format!("m{n}.{i}"), l))
        .collect();
    let mut total = empty_census();
    for p in parts {
        total.merge(p);
    }
    Ok(total)
}

/// Census over all sizes `1..=max_n`.
pub fn classify_up_to(max_n: usize, cap: usize) -> Result<Census, EnumError> {
    let mut total = empty_census();
    for n in 1..=max_n {
        total.merge(classify_all(n, cap)?);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_model_is_in_every_class() {
        let c = classify_all(1, 8).unwrap();
        assert_eq!(c.rows.len(), 1);
        assert_eq!(c.rows[0].flags.len(), Class::ALL.len());
        assert_eq!(c.counterexamples(), 0);
    }

    #[test]
    fn small_census_has_no_counterexamples() {
        let c = classify_up_to(5, 8).unwrap();
        for check in &c.checks {
            assert_eq!(check.counterexamples, 0, "{check:?}");
        }
    }
}
