//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_RED` are printed as FAIL with their reason but
//! do not fail the process; any other failure does.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use spo_core::catalog::{self, ENTRIES};
use spo_core::census;
use spo_core::classify::{self, is_uop, Class, Classifier};
use spo_core::commute;
use spo_core::constructs::moisil_interval;
use spo_core::enumerate::{all_models, enumerate_models, DEFAULT_CAP};
use spo_core::refmat::entail::{entails, substitution_trials, DEFAULT_ASSIGNMENT_CAP};
use spo_core::refmat::formula::Formula;
use spo_core::refmat::{build_refmat, representation_check, two_state_example, SublatticeMode};
use spo_core::spectral::{self, SpectralEffect};
use spo_core::subalg::{self, Congruence};
use spo_core::InvolutiveLattice;

/// Criteria expected to fail, with the reason printed next to them.
const KNOWN_RED: &[(u32, &str)] = &[(
    3,
    "the inclusion of the canonical order in the spectral order is false; \
     the reverse inclusion is what holds and is checked",
)];

type Criterion = (u32, &'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, ok_detail: String) -> Outcome {
    if failures.is_empty() {
        Outcome {
            pass: true,
            detail: ok_detail,
        }
    } else {
        Outcome {
            pass: false,
            detail: failures.join("; "),
        }
    }
}

fn within(t: Duration, limit_secs: u64, what: &str, failures: &mut Vec<String>) {
    if t > Duration::from_secs(limit_secs) {
        failures.push(format!("{what} took {t:.1?}, limit {limit_secs} s"));
    }
}

fn catalog_fidelity() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut expect = |what: &str, got: bool, want: bool| {
        if got != want {
            failures.push(format!("{what}: got {got}, expected {want}"));
        }
    };
    let holds = |l: &InvolutiveLattice, c: Class| Classifier::for_lattice(l).holds(c);

    let b6 = catalog::b6();
    expect("B6 pkl", holds(&b6, Class::Pkl), true);
    expect("B6 paraorthomodular", holds(&b6, Class::Poml), false);

    let b8 = catalog::b8();
    expect("B8 paraorthomodular", holds(&b8, Class::Poml), true);
    expect("B8 sp1", holds(&b8, Class::Sp1), false);
    expect("B8 tame", subalg::is_tame(&b8).holds, false);
    expect("B8 modular", holds(&b8, Class::Modular), false);

    expect("B8* sp2", holds(&catalog::b8_star(), Class::Sp2), false);

    let b = catalog::pkl_b();
    let (a, bb) = (b.find("a").unwrap(), b.find("b").unwrap());
    expect("B sp", holds(&b, Class::Spo), true);
    expect("B a sharp", b.is_sharp(a), true);
    expect("B b sharp", b.is_sharp(bb), true);
    expect("B a^b sharp", b.is_sharp(b.meet(a, bb)), false);

    let c = catalog::pkl_c();
    let theta = Congruence::from_blocks(&c, &catalog::pkl_c_theta()).expect("congruence");
    let cq = subalg::quotient(&c, &theta);
    expect(
        "C satisfies (A)",
        classify::satisfies_quasi_a(&c).holds,
        true,
    );
    expect(
        "C/theta satisfies (A)",
        classify::satisfies_quasi_a(&cq).holds,
        false,
    );
    expect(
        "C/theta iso B",
        subalg::find_orthoisomorphism(&cq, &b).is_some(),
        true,
    );

    let d = catalog::diamond();
    let r = commute::commutes_mpkl(&d, d.find("a").unwrap(), d.find("b").unwrap());
    expect("diamond C1", r.c1, true);
    expect("diamond C3", r.c3, true);
    expect("diamond C2", r.c2, false);

    let fh = catalog::failure_fh();
    let [fa, fb, fc] = ["a", "b", "c"].map(|n| fh.find(n).unwrap());
    expect("FH aCb", commute::commutes(&fh, fa, fb), true);
    expect("FH aCc", commute::commutes(&fh, fa, fc), true);
    let triple = fh.generated_subalgebra(&[fa, fb, fc]);
    expect(
        "FH Sg(a,b,c) distributive",
        fh.is_distributive_on(&triple),
        false,
    );

    expect(
        "K3 residuation",
        classify::residuation_condition(&catalog::k3()).holds,
        true,
    );
    expect(
        "K3xB2 residuation",
        classify::residuation_condition(&catalog::k3_times_b2()).holds,
        false,
    );

    let t = start.elapsed();
    within(t, 1, "catalog checks", &mut failures);
    outcome(failures, format!("22 facts in {t:.1?}"))
}

fn theorem_census() -> Outcome {
    let mut failures = Vec::new();
    let start = Instant::now();
    let small = census::classify_up_to(6, DEFAULT_CAP).expect("n <= 6");
    let t6 = start.elapsed();
    within(t6, 30, "census n <= 6", &mut failures);
    let start = Instant::now();
    let full = census::classify_up_to(8, DEFAULT_CAP).expect("n <= 8");
    let t8 = start.elapsed();
    within(t8, 600, "census n <= 8", &mut failures);
    for c in small.checks.iter().chain(&full.checks) {
        if c.counterexamples > 0 {
            failures.push(format!(
                "{}: {} counterexamples, first {:?}",
                c.name, c.counterexamples, c.first_failure
            ));
        }
    }
    let tested: usize = full.checks.iter().map(|c| c.tested).sum();
    outcome(
        failures,
        format!(
            "{} models n <= 8, {} checks, {tested} instances, 0 counterexamples (n <= 6 in {t6:.1?}, n <= 8 in {t8:.1?})",
            full.rows.len(),
            full.checks.len()
        ),
    )
}

fn spectral_suite() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for d in [2, 3] {
        let r = spectral::verify(1000, d, 7);
        for p in r.properties.iter().filter(|p| p.violations > 0) {
            failures.push(format!("d={d} {}: {} violations", p.name, p.violations));
        }
        if r.canonical_not_spectral > 0 {
            failures.push(format!(
                "d={d}: canonical_leq => spectral_leq violated on {} of {} pairs (first at sample {})",
                r.canonical_not_spectral,
                r.canonical_pairs,
                r.first_canonical_not_spectral.unwrap_or_default()
            ));
        }
    }
    let a = SpectralEffect::parse("effect 2 2\n0 ; 1 -1\n1/3 ; 1 0, 0 1\n").expect("effect");
    let b = SpectralEffect::parse("effect 2 2\n2/7 ; 1 -2\n1 ; 1 0, 0 1\n").expect("effect");
    if a.canonical_leq(&b).unwrap() && !a.leq(&b).unwrap() {
        failures.push("pinned pair A <=c B, A !<=s B (A: 0 on (1,-1), 1/3 on (1,1); B: 2/7 on (1,-2), 1 on (2,1))".into());
    }
    let t = start.elapsed();
    within(t, 60, "spectral suite", &mut failures);
    let ok = format!("all other identities exact on 2 x 1000 samples in {t:.1?}");
    let mut o = outcome(failures, ok.clone());
    if !o.pass {
        o.detail = format!("{}; {ok}", o.detail);
    }
    o
}

fn representation_suite() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut matrices = 0;
    for e in ENTRIES {
        let p = e.build().into_poset();
        if !is_uop(&p).holds {
            continue;
        }
        let m = build_refmat(&p, SublatticeMode::All, usize::MAX).expect("catalog matrix");
        matrices += 1;
        let r = representation_check(&m);
        if r.duplicate.is_some() || !r.forward.holds {
            failures.push(format!("{}: embedding fails", e.name));
        }
        if e.tame == Some(true) {
            checked += 1;
            if !(r.holds() && r.identity_iso == Some(true)) {
                failures.push(format!("{}: not an orthoisomorphism", e.name));
            }
        }
    }
    for n in 2..=6 {
        for l in enumerate_models(n, &[Class::Spo], DEFAULT_CAP).expect("n <= 6") {
            let m = build_refmat(l.poset(), SublatticeMode::All, usize::MAX).expect("model matrix");
            matrices += 1;
            checked += 1;
            let r = representation_check(&m);
            if !(r.holds() && r.identity_iso == Some(true)) {
                failures.push(format!("model {l:?}: not an orthoisomorphism"));
            }
        }
    }
    let b8 = catalog::b8();
    let m = build_refmat(b8.poset(), SublatticeMode::All, usize::MAX).expect("B8 matrix");
    let pair = b8
        .elements()
        .flat_map(|x| b8.elements().map(move |y| (x, y)))
        .find(|&(x, y)| b8.leq(x, y) && !m.precsim(x, y));
    let shown = match pair {
        Some((x, y)) => format!("B8: {} <= {} without precsim", b8.label(x), b8.label(y)),
        None => {
            failures.push("B8: no comparable pair without precsim".into());
            String::new()
        }
    };
    outcome(
        failures,
        format!("{checked} orthoisomorphisms, {matrices} injective embeddings; {shown}"),
    )
}

fn consequence_suite() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let f = |s: &str| Formula::parse(s).expect("formula");
    let m = two_state_example();
    if !entails(
        &m,
        &[f("x")],
        &f("or(or(x,neg(x)),y)"),
        DEFAULT_ASSIGNMENT_CAP,
    )
    .unwrap()
    {
        failures.push("two-state: x |- (x v -x) v y fails".into());
    }
    if entails(
        &m,
        &[f("x")],
        &f("or(or(x,neg(x)),or(u,v))"),
        DEFAULT_ASSIGNMENT_CAP,
    )
    .unwrap()
    {
        failures.push("two-state: substitution instance holds".into());
    }
    let (mut trials, mut held, mut structures) = (0, 0, 0);
    for (k, e) in ENTRIES.iter().enumerate() {
        let p = e.build().into_poset();
        if p.n() > 12 || !is_uop(&p).holds {
            continue;
        }
        structures += 1;
        let mat = build_refmat(&p, SublatticeMode::All, usize::MAX).expect("catalog matrix");
        let t = substitution_trials(&mat, 100, 1000 + k as u64, DEFAULT_ASSIGNMENT_CAP)
            .expect("within budget");
        trials += t.trials;
        held += t.premises_held;
        if t.violations > 0 {
            failures.push(format!(
                "{}: {} violations, first {:?}",
                e.name, t.violations, t.first_failure
            ));
        }
    }
    let t = start.elapsed();
    within(t, 120, "consequence suite", &mut failures);
    outcome(
        failures,
        format!("two-state example reproduced; {trials} trials on {structures} catalog matrices ({held} with premises holding), 0 violations in {t:.1?}"),
    )
}

fn moisil_suite() -> Outcome {
    let mut failures = Vec::new();
    let (b2i, _) = moisil_interval(&catalog::b2()).expect("B2 is an OML");
    if subalg::find_orthoisomorphism(&b2i, &catalog::k3()).is_none() {
        failures.push("B2^[2] not isomorphic to K3".into());
    }
    let (b4i, _) = moisil_interval(&catalog::b4()).expect("B4 is an OML");
    if b4i.n() != 9 {
        failures.push(format!("|B4^[2]| = {}", b4i.n()));
    }
    let mut omls = 0;
    for n in 1..=8 {
        for l in enumerate_models(n, &[Class::Oml], DEFAULT_CAP).expect("n <= 8") {
            omls += 1;
            let (m, _) = moisil_interval(&l).expect("OML input");
            if !classify::is_sp(&m).holds {
                failures.push(format!("interval algebra of {l:?} fails (sp)"));
            }
        }
    }
    outcome(
        failures,
        format!("B2^[2] = K3, |B4^[2]| = 9, {omls} OMLs n <= 8 give (sp) algebras"),
    )
}

fn enumeration_soundness() -> Outcome {
    let mut failures = Vec::new();
    let mut counts = Vec::new();
    for n in 1..=6 {
        let perms = common::permutations(n);
        let ours = all_models(n, DEFAULT_CAP).expect("n <= 6");
        let naive = common::naive_model_codes(n);
        let codes: BTreeSet<Vec<u8>> = ours.iter().map(|m| common::code_of(m, &perms)).collect();
        if ours.len() != naive.len() || codes != naive {
            failures.push(format!(
                "n={n}: enumerator {} vs oracle {}",
                ours.len(),
                naive.len()
            ));
        }
        counts.push(format!("{n}:{}", naive.len()));
    }
    outcome(failures, format!("counts {}", counts.join(" ")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        (1, "catalog fidelity", catalog_fidelity),
        (2, "theorem census n <= 8", theorem_census),
        (3, "spectral suite", spectral_suite),
        (4, "representation", representation_suite),
        (5, "consequence relations", consequence_suite),
        (6, "interval algebras", moisil_suite),
        (7, "enumeration soundness", enumeration_soundness),
    ];
    let mut unexpected = 0;
    let mut failed = 0;
    for (id, name, run) in criteria {
        let o = run();
        let known = KNOWN_RED
            .iter()
            .find(|(k, _)| *k == id)
            .map(|(_, why)| *why);
        if o.pass {
            println!("PASS {id} {name}: {}", o.detail);
            if known.is_some() {
                println!("     note: criterion {id} was expected to fail");
            }
        } else {
            failed += 1;
            println!("FAIL {id} {name}: {}", o.detail);
            match known {
                Some(why) => println!("     expected: {why}"),
                None => unexpected += 1,
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed, {unexpected} unexpected",
        7 - failed
    );
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
