//! Seeded random effects over `ℚ^d`.

use rand::seq::index::sample;
use rand::Rng;

use super::effect::SpectralEffect;
use super::subspace::{RationalSubspace, Q};

/// Largest threshold denominator.
pub const MAX_DENOM: i64 = 8;
/// Random vector entries are drawn from `-ENTRY..=ENTRY`.
pub const ENTRY: i64 = 2;

fn random_vector<R: Rng>(rng: &mut R, d: usize) -> Vec<Q> {
    (0..d)
        .map(|_| Q::from_integer(rng.gen_range(-ENTRY..=ENTRY).into()))
        .collect()
}

/// A strictly increasing chain of subspaces with the given dimensions,
/// grown by adding random vectors.
pub fn random_flag<R: Rng>(rng: &mut R, d: usize, dims: &[usize]) -> Vec<RationalSubspace> {
    let mut current = RationalSubspace::zero(d);
    let mut out = Vec::with_capacity(dims.len());
    for &target in dims {
        while current.dim() < target {
            let v = random_vector(rng, d);
            if !current.contains_vector(&v) {
                current = current
                    .sum(&RationalSubspace::span(d, &[v]).expect("length d"))
                    .expect("same ambient");
            }
        }
        out.push(current.clone());
    }
    out
}

/// `k` distinct sorted rationals in `[0, 1]` with denominators up to
/// [`MAX_DENOM`].
pub fn random_thresholds<R: Rng>(rng: &mut R, k: usize) -> Vec<Q> {
    let mut out: Vec<Q> = Vec::with_capacity(k);
    while out.len() < k {
        let den = rng.gen_range(1..=MAX_DENOM);
        let q = Q::new(rng.gen_range(0..=den).into(), den.into());
        if !out.contains(&q) {
            out.push(q);
        }
    }
    out.sort();
    out
}

/// A random effect with between 1 and `d` distinct eigenvalues.
pub fn random_effect<R: Rng>(rng: &mut R, d: usize) -> SpectralEffect {
    let k = rng.gen_range(1..=d);
    let mut dims: Vec<usize> = sample(rng, d - 1, k - 1)
        .into_iter()
        .map(|i| i + 1)
        .collect();
    dims.sort_unstable();
    dims.push(d);
    let flag = random_flag(rng, d, &dims);
    let jumps = random_thresholds(rng, k).into_iter().zip(flag).collect();
    SpectralEffect::new(d, jumps).expect("generator yields valid families")
}

/// A random projection effect (range of any dimension `0..=d`).
pub fn random_projection<R: Rng>(rng: &mut R, d: usize) -> SpectralEffect {
    let r = rng.gen_range(0..=d);
    let range = random_flag(rng, d, &[r]).pop().expect("one subspace");
    SpectralEffect::projection(&range)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generated_effects_are_deterministic() {
        let mut a = ChaCha8Rng::seed_from_u64(3);
        let mut b = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            assert_eq!(random_effect(&mut a, 3), random_effect(&mut b, 3));
        }
    }

    #[test]
    fn flags_have_requested_dimensions() {
        let mut r = ChaCha8Rng::seed_from_u64(0);
        let f = random_flag(&mut r, 3, &[1, 3]);
        assert_eq!(
            f.iter().map(RationalSubspace::dim).collect::<Vec<_>>(),
            vec![1, 3]
        );
        assert!(f[0].is_subspace_of(&f[1]).unwrap());
    }
}
