//! Seeded randomized check of the lattice identities of spectral effects.

use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::effect::SpectralEffect;
use super::random::{random_effect, random_projection};
use super::subspace::Q;

/// Names of the checked properties, in report order.
pub const PROPERTIES: &[&str] = &[
    "partial order",
    "lattice laws",
    "involution",
    "de morgan",
    "kleene condition",
    "sp on comparable pairs",
    "modular law",
    "double complement",
    "projection subalgebra",
    "sharp iff 0/1 thresholds",
    "spectral implies canonical",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyResult {
    pub name: &'static str,
    pub tested: usize,
    pub violations: usize,
    /// Index of the first failing sample.
    pub first_failure: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub samples: u64,
    pub dim: usize,
    pub seed: u64,
    pub properties: Vec<PropertyResult>,
    /// Canonically comparable pairs tested against the spectral order.
    pub canonical_pairs: usize,
    /// Among those, pairs not comparable in the spectral order. The
    /// inclusion of the canonical order in the spectral one fails in
    /// general; the reverse inclusion is the property checked above.
    pub canonical_not_spectral: usize,
    pub first_canonical_not_spectral: Option<u64>,
}

impl VerifyReport {
    pub fn violations(&self) -> usize {
        self.properties.iter().map(|p| p.violations).sum()
    }

    pub fn passed(&self) -> bool {
        self.violations() == 0
    }
}

struct Sample {
    outcomes: Vec<bool>,
    canonical_not_spectral: bool,
}

fn check_sample(d: usize, seed: u64, index: u64) -> Sample {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let a = random_effect(&mut rng, d);
    let b = random_effect(&mut rng, d);
    let c = random_effect(&mut rng, d);
    let p = random_projection(&mut rng, d);
    let q = random_projection(&mut rng, d);

    let leq = |x: &SpectralEffect, y: &SpectralEffect| x.leq(y).expect("same dimension");
    let join = |x: &SpectralEffect, y: &SpectralEffect| x.join(y).expect("same dimension");
    let meet = |x: &SpectralEffect, y: &SpectralEffect| x.meet(y).expect("same dimension");
    let neg = SpectralEffect::complement;

    let ab_meet = meet(&a, &b);
    let ab_join = join(&a, &b);

    let partial_order = leq(&a, &a)
        && (!(leq(&a, &b) && leq(&b, &a)) || a == b)
        && leq(&ab_meet, &a)
        && leq(&a, &join(&a, &c))
        && leq(&ab_meet, &join(&a, &c))
        && leq(&a, &b) == (ab_join == b);

    let lattice_laws = join(&a, &ab_meet) == a
        && meet(&a, &ab_join) == a
        && ab_join == join(&b, &a)
        && ab_meet == meet(&b, &a)
        && join(&a, &a) == a
        && meet(&a, &a) == a
        && join(&ab_join, &c) == join(&a, &join(&b, &c))
        && meet(&ab_meet, &c) == meet(&a, &meet(&b, &c))
        && leq(&SpectralEffect::zero(d), &a)
        && leq(&a, &SpectralEffect::identity(d));

    let involution = neg(&neg(&a)) == a && (!leq(&a, &b) || leq(&neg(&b), &neg(&a)));

    let de_morgan =
        neg(&ab_join) == meet(&neg(&a), &neg(&b)) && neg(&ab_meet) == join(&neg(&a), &neg(&b));

    let kleene = leq(&meet(&a, &neg(&a)), &join(&b, &neg(&b)));

    // (sp) on the comparable pair x = a ∧ b <= y = a.
    let (x, y) = (&ab_meet, &a);
    let sp = join(x, &meet(&neg(x), y)) == meet(&join(x, &neg(x)), y);

    // Modular law on x = a ∧ b <= y = b with c.
    let (x, y) = (&ab_meet, &b);
    let modular = join(x, &meet(&c, y)) == meet(&join(x, &c), y);

    let double_complement =
        neg(&neg(&b)) == b && neg(&SpectralEffect::zero(d)) == SpectralEffect::identity(d);

    let (pr, qr) = (
        p.projection_range().expect("projection"),
        q.projection_range().expect("projection"),
    );
    let projections = join(&p, &q)
        == SpectralEffect::projection(&pr.sum(&qr).expect("same ambient"))
        && meet(&p, &q) == SpectralEffect::projection(&pr.intersect(&qr).expect("same ambient"))
        && neg(&p) == SpectralEffect::projection(&pr.orthocomplement())
        && leq(&p, &q) == pr.is_subspace_of(&qr).expect("same ambient");

    let sharp = [&a, &b, &c, &p, &ab_meet, &ab_join]
        .iter()
        .all(|e| e.is_sharp() == e.has_sharp_thresholds());

    // Spectral pairs must be canonical pairs.
    let canonical = [(&ab_meet, &a), (&a, &ab_join), (&p, &join(&p, &c))]
        .iter()
        .all(|(x, y)| x.canonical_leq(y).expect("same dimension"));

    // Shrink a towards 0 and b towards I until a ≤c b, then ask for ≤s.
    let mut s = Q::one();
    let half = Q::new(1.into(), 2.into());
    let (lo, hi) = loop {
        let lo = a.affine(&s, &Q::zero()).expect("scaled effect");
        let hi = b.affine(&s, &(Q::one() - &s)).expect("shifted effect");
        if lo.canonical_leq(&hi).expect("same dimension") {
            break (lo, hi);
        }
        s = if s > Q::new(1.into(), 64.into()) {
            s * &half
        } else {
            Q::zero()
        };
    };
    let canonical_not_spectral = !leq(&lo, &hi);

    Sample {
        outcomes: vec![
            partial_order,
            lattice_laws,
            involution,
            de_morgan,
            kleene,
            sp,
            modular,
            double_complement,
            projections,
            sharp,
            canonical,
        ],
        canonical_not_spectral,
    }
}

/// Runs every property on `samples` random instances in `ℚ^dim`. Sample `i`
/// draws from the ChaCha8 stream `i` of `seed`, so the report depends only
/// on the arguments.
pub fn verify(samples: u64, dim: usize, seed: u64) -> VerifyReport {
    assert!(dim >= 1, "dimension must be positive");
    let results: Vec<Sample> = (0..samples)
        .into_par_iter()
        .map(|i| check_sample(dim, seed, i))
        .collect();
    let mut properties: Vec<PropertyResult> = PROPERTIES
        .iter()
        .map(|&name| PropertyResult {
            name,
            tested: 0,
            violations: 0,
            first_failure: None,
        })
        .collect();
    let mut canonical_not_spectral = 0;
    let mut first_canonical_not_spectral = None;
    for (i, r) in results.iter().enumerate() {
        if r.canonical_not_spectral {
            canonical_not_spectral += 1;
            first_canonical_not_spectral.get_or_insert(i as u64);
        }
        for (p, &ok) in properties.iter_mut().zip(&r.outcomes) {
            p.tested += 1;
            if !ok {
                p.violations += 1;
                p.first_failure.get_or_insert(i as u64);
            }
        }
    }
    VerifyReport {
        samples,
        dim,
        seed,
        properties,
        canonical_pairs: results.len(),
        canonical_not_spectral,
        first_canonical_not_spectral,
    }
}
