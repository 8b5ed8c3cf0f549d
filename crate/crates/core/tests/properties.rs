use std::sync::OnceLock;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spo_core::enumerate::{all_models, canonical_form, DEFAULT_CAP};
use spo_core::refmat::entail::{entails, random_formula};
use spo_core::refmat::formula::Formula;
use spo_core::refmat::{build_refmat, two_state_example, RefMatrix, SublatticeMode};
use spo_core::spectral::random::{random_effect, random_projection};
use spo_core::spectral::SpectralEffect;
use spo_core::{catalog, InvolutiveLattice, InvolutivePoset, RawStructure};

fn models() -> &'static [InvolutiveLattice] {
    static M: OnceLock<Vec<InvolutiveLattice>> = OnceLock::new();
    M.get_or_init(|| {
        (2..=8)
            .flat_map(|n| all_models(n, DEFAULT_CAP).unwrap())
            .collect()
    })
}

fn relabel(p: &InvolutivePoset, perm: &[usize]) -> InvolutivePoset {
    let raw = p.to_raw();
    let n = p.n();
    let mut leq = vec![vec![false; n]; n];
    let mut inv = vec![0; n];
    for x in 0..n {
        for y in 0..n {
            leq[perm[x]][perm[y]] = raw.leq[x][y];
        }
        inv[perm[x]] = perm[raw.inv[x]];
    }
    InvolutivePoset::validate(RawStructure {
        leq,
        inv,
        bottom: perm[raw.bottom],
        top: perm[raw.top],
        labels: None,
    })
    .unwrap()
}

fn model_and_perm() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0..models().len()).prop_flat_map(|i| {
        let n = models()[i].n();
        (Just(i), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn canonical_form_is_relabelling_invariant((i, perm) in model_and_perm()) {
        let p = models()[i].poset();
        let q = relabel(p, &perm);
        prop_assert_eq!(canonical_form(p).code, canonical_form(&q).code);
    }

    #[test]
    fn lattice_laws_and_de_morgan(i in 0..400usize, a in 0..16usize, b in 0..16usize, c in 0..16usize) {
        let l = &models()[i % models().len()];
        let n = l.n();
        let (x, y, z) = (a % n, b % n, c % n);
        prop_assert_eq!(l.meet(x, y), l.meet(y, x));
        prop_assert_eq!(l.join(x, y), l.join(y, x));
        prop_assert_eq!(l.meet(l.meet(x, y), z), l.meet(x, l.meet(y, z)));
        prop_assert_eq!(l.join(l.join(x, y), z), l.join(x, l.join(y, z)));
        prop_assert_eq!(l.join(x, l.meet(x, y)), x);
        prop_assert_eq!(l.meet(x, l.join(x, y)), x);
        prop_assert_eq!(l.meet(x, x), x);
        prop_assert_eq!(l.inv(l.join(x, y)), l.meet(l.inv(x), l.inv(y)));
        prop_assert_eq!(l.inv(l.meet(x, y)), l.join(l.inv(x), l.inv(y)));
    }

    #[test]
    fn effect_lattice_identities(seed in any::<u64>(), d in 1..=3usize) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_effect(&mut rng, d);
        let b = random_effect(&mut rng, d);
        let c = random_effect(&mut rng, d);
        let neg = SpectralEffect::complement;
        let ab = a.meet(&b).unwrap();
        let a_or_b = a.join(&b).unwrap();
        prop_assert_eq!(neg(&neg(&a)), a.clone());
        prop_assert_eq!(neg(&a_or_b), neg(&a).meet(&neg(&b)).unwrap());
        prop_assert!(a.meet(&neg(&a)).unwrap().leq(&b.join(&neg(&b)).unwrap()).unwrap());
        prop_assert!(ab.leq(&a).unwrap() && a.leq(&a_or_b).unwrap());
        // (sp) on ab <= a.
        let lhs = ab.join(&neg(&ab).meet(&a).unwrap()).unwrap();
        let rhs = ab.join(&neg(&ab)).unwrap().meet(&a).unwrap();
        prop_assert_eq!(lhs, rhs);
        // Modular law on ab <= b.
        let lhs = ab.join(&c.meet(&b).unwrap()).unwrap();
        let rhs = ab.join(&c).unwrap().meet(&b).unwrap();
        prop_assert_eq!(lhs, rhs);
        // Antisymmetry up to canonical form and transitivity.
        if a.leq(&b).unwrap() && b.leq(&a).unwrap() {
            prop_assert_eq!(&a, &b);
        }
        if ab.leq(&b).unwrap() && b.leq(&a_or_b.join(&b).unwrap()).unwrap() {
            prop_assert!(ab.leq(&a_or_b.join(&b).unwrap()).unwrap());
        }
        prop_assert!(ab.canonical_leq(&a).unwrap());
    }

    #[test]
    fn projections_are_sharp_and_closed(seed in any::<u64>(), d in 1..=3usize) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_projection(&mut rng, d);
        let q = random_projection(&mut rng, d);
        prop_assert!(p.is_sharp() && p.has_sharp_thresholds());
        let j = p.join(&q).unwrap();
        let m = p.meet(&q).unwrap();
        prop_assert!(j.is_sharp() && m.is_sharp() && p.complement().is_sharp());
        let e = random_effect(&mut rng, d);
        prop_assert_eq!(e.is_sharp(), e.has_sharp_thresholds());
    }

    #[test]
    fn effect_text_round_trip(seed in any::<u64>(), d in 1..=3usize) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = random_effect(&mut rng, d);
        let text = e.to_text();
        prop_assert_eq!(SpectralEffect::parse(&text).unwrap(), e);
    }

    #[test]
    fn formula_print_parse_round_trip(seed in any::<u64>(), depth in 0..5usize) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_formula(&mut rng, &["x", "y", "z"], depth);
        prop_assert!(f.depth() <= depth);
        prop_assert_eq!(Formula::parse(&f.to_string()).unwrap(), f);
    }
}

fn matrices() -> &'static [RefMatrix] {
    static M: OnceLock<Vec<RefMatrix>> = OnceLock::new();
    M.get_or_init(|| {
        let mut out = vec![two_state_example()];
        for name in ["K3", "B4", "MO2", "B8"] {
            let p = catalog::get(name).unwrap().into_poset();
            out.push(build_refmat(&p, SublatticeMode::All, usize::MAX).unwrap());
        }
        out
    })
}

fn formulas(seed: u64, count: usize) -> Vec<Formula> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_formula(&mut rng, &["x", "y"], 2))
        .collect()
}

const CAP: usize = 1 << 16;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn entailment_is_reflexive_and_monotone(seed in any::<u64>(), k in 0..5usize) {
        let m = &matrices()[k];
        let fs = formulas(seed, 3);
        let (phi, extra) = (&fs[0], &fs[1]);
        prop_assert!(entails(m, std::slice::from_ref(phi), phi, CAP).unwrap());
        let gamma = vec![fs[2].clone()];
        if entails(m, &gamma, phi, CAP).unwrap() {
            prop_assert!(entails(m, &[fs[2].clone(), extra.clone()], phi, CAP).unwrap());
        }
    }

    #[test]
    fn entailment_is_transitive(seed in any::<u64>(), k in 0..5usize) {
        let m = &matrices()[k];
        let fs = formulas(seed, 3);
        let (gamma, psi, phi) = (vec![fs[0].clone()], &fs[1], &fs[2]);
        // Γ ⊢ ψ and Γ, ψ ⊢ φ give Γ ⊢ φ.
        if entails(m, &gamma, psi, CAP).unwrap() && entails(m, &[fs[0].clone(), psi.clone()], phi, CAP).unwrap() {
            prop_assert!(entails(m, &gamma, phi, CAP).unwrap());
        }
    }
}
