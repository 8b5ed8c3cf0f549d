//! Effects on `ℚ^d` as finite spectral families.

use std::fmt::Write as _;

use num_traits::{One, Zero};

use super::subspace::{is_psd, Matrix, RationalSubspace, Q};
use super::SpectralError;

/// A finite spectral family: `M(λ) = V_i` for `λ_i <= λ < λ_{i+1}`, the
/// zero subspace below `λ_1`, and the whole space from the last threshold
/// on. Thresholds lie in `[0, 1]` and increase strictly; the subspaces
/// increase strictly, the first is nonzero and the last is `ℚ^d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpectralEffect {
    d: usize,
    jumps: Vec<(Q, RationalSubspace)>,
}

fn in_unit(q: &Q) -> bool {
    *q >= Q::zero() && *q <= Q::one()
}

impl SpectralEffect {
    /// Validating constructor.
    pub fn new(d: usize, jumps: Vec<(Q, RationalSubspace)>) -> Result<Self, SpectralError> {
        let bad = |m: &str| Err(SpectralError::InvalidEffect(m.to_string()));
        if jumps.is_empty() {
            return bad("an effect needs at least one threshold");
        }
        for (i, (l, v)) in jumps.iter().enumerate() {
            if v.ambient() != d {
                return Err(SpectralError::DimensionMismatch(d, v.ambient()));
            }
            if !in_unit(l) {
                return bad("thresholds must lie in [0, 1]");
            }
            if i == 0 {
                if v.is_zero() {
                    return bad("the first subspace must be nonzero");
                }
            } else {
                let (pl, pv) = &jumps[i - 1];
                if l <= pl {
                    return bad("thresholds must increase strictly");
                }
                if v.dim() <= pv.dim() || !pv.is_subspace_of(v)? {
                    return bad("subspaces must increase strictly");
                }
            }
        }
        if !jumps.last().expect("nonempty").1.is_full() {
            return bad("the last subspace must be the whole space");
        }
        Ok(SpectralEffect { d, jumps })
    }

    /// Builds the canonical family from values at sorted breakpoints of a
    /// monotone step function, dropping breakpoints where nothing changes.
    fn from_steps(d: usize, steps: Vec<(Q, RationalSubspace)>) -> Self {
        let mut jumps: Vec<(Q, RationalSubspace)> = Vec::new();
        for (l, v) in steps {
            let prev_dim = jumps.last().map_or(0, |(_, p)| p.dim());
            if v.dim() > prev_dim {
                jumps.push((l, v));
            }
        }
        debug_assert!(jumps.last().is_some_and(|(_, v)| v.is_full()));
        SpectralEffect { d, jumps }
    }

    pub fn zero(d: usize) -> Self {
        SpectralEffect {
            d,
            jumps: vec![(Q::zero(), RationalSubspace::full(d))],
        }
    }

    pub fn identity(d: usize) -> Self {
        SpectralEffect {
            d,
            jumps: vec![(Q::one(), RationalSubspace::full(d))],
        }
    }

    /// The projection onto `range`, as an effect.
    pub fn projection(range: &RationalSubspace) -> Self {
        let d = range.ambient();
        if range.is_zero() {
            return Self::zero(d);
        }
        if range.is_full() {
            return Self::identity(d);
        }
        SpectralEffect {
            d,
            jumps: vec![
                (Q::zero(), range.orthocomplement()),
                (Q::one(), RationalSubspace::full(d)),
            ],
        }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn jumps(&self) -> &[(Q, RationalSubspace)] {
        &self.jumps
    }

    pub fn thresholds(&self) -> impl DoubleEndedIterator<Item = &Q> {
        self.jumps.iter().map(|(l, _)| l)
    }

    /// `M(λ)`.
    pub fn at(&self, lambda: &Q) -> RationalSubspace {
        self.jumps
            .iter()
            .rev()
            .find(|(l, _)| l <= lambda)
            .map_or_else(|| RationalSubspace::zero(self.d), |(_, v)| v.clone())
    }

    /// `⋁_{μ < λ} M(μ)`.
    pub fn left_limit(&self, lambda: &Q) -> RationalSubspace {
        self.jumps
            .iter()
            .rev()
            .find(|(l, _)| l < lambda)
            .map_or_else(|| RationalSubspace::zero(self.d), |(_, v)| v.clone())
    }

    fn same_dim(&self, other: &Self) -> Result<(), SpectralError> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(SpectralError::DimensionMismatch(self.d, other.d))
        }
    }

    fn merged_breakpoints(&self, other: &Self) -> Vec<Q> {
        let mut ts: Vec<Q> = self
            .thresholds()
            .chain(other.thresholds())
            .cloned()
            .collect();
        ts.sort();
        ts.dedup();
        ts
    }

    /// `self ≤s other`: `other_λ ⊆ self_λ` for every `λ`.
    pub fn leq(&self, other: &Self) -> Result<bool, SpectralError> {
        self.same_dim(other)?;
        for t in self.merged_breakpoints(other) {
            if !other.at(&t).is_subspace_of(&self.at(&t))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `(A ∨s B)_λ = A_λ ∩ B_λ`.
    pub fn join(&self, other: &Self) -> Result<Self, SpectralError> {
        self.same_dim(other)?;
        let steps = self
            .merged_breakpoints(other)
            .into_iter()
            .map(|t| {
                let v = self.at(&t).intersect(&other.at(&t))?;
                Ok((t, v))
            })
            .collect::<Result<_, SpectralError>>()?;
        Ok(Self::from_steps(self.d, steps))
    }

    /// `(A ∧s B)_λ = ⋀_{μ>λ} (A_μ + B_μ)`. Both families are right-continuous
    /// steps, so the infimum is the value at `λ` itself.
    pub fn meet(&self, other: &Self) -> Result<Self, SpectralError> {
        self.same_dim(other)?;
        let steps = self
            .merged_breakpoints(other)
            .into_iter()
            .map(|t| {
                let v = self.at(&t).sum(&other.at(&t))?;
                Ok((t, v))
            })
            .collect::<Result<_, SpectralError>>()?;
        Ok(Self::from_steps(self.d, steps))
    }

    /// `I − A`: its family at `λ` is the orthocomplement of `⋁_{μ < 1−λ} A_μ`.
    pub fn complement(&self) -> Self {
        let one = Q::one();
        let steps = self
            .thresholds()
            .rev()
            .map(|l| {
                let t = &one - l;
                let v = self.left_limit(&(&one - &t)).orthocomplement();
                (t, v)
            })
            .collect();
        Self::from_steps(self.d, steps)
    }

    /// The effect with spectrum mapped by `λ ↦ s·λ + t`, for `s >= 0`.
    pub fn affine(&self, s: &Q, t: &Q) -> Result<Self, SpectralError> {
        if *s < Q::zero() {
            return Err(SpectralError::InvalidEffect("negative scale".into()));
        }
        let steps: Vec<(Q, RationalSubspace)> = self
            .jumps
            .iter()
            .map(|(l, v)| (s * l + t, v.clone()))
            .collect();
        let collapsed = if s.is_zero() {
            vec![(t.clone(), RationalSubspace::full(self.d))]
        } else {
            steps
        };
        Self::new(self.d, collapsed)
    }

    /// Eigenvalues lie in `{0, 1}`.
    pub fn has_sharp_thresholds(&self) -> bool {
        self.thresholds().all(|l| l.is_zero() || l.is_one())
    }

    /// `A ∧s A′ = 0`.
    pub fn is_sharp(&self) -> bool {
        self.meet(&self.complement()).expect("same dimension") == Self::zero(self.d)
    }

    /// The range of a projection effect.
    pub fn projection_range(&self) -> Option<RationalSubspace> {
        if !self.has_sharp_thresholds() {
            return None;
        }
        Some(self.at(&Q::zero()).orthocomplement())
    }

    /// `Σ λ_i (P_i − P_{i−1})`.
    pub fn to_operator(&self) -> Matrix {
        let d = self.d;
        let mut out = vec![vec![Q::zero(); d]; d];
        let mut prev = vec![vec![Q::zero(); d]; d];
        for (l, v) in &self.jumps {
            let p = v.projection_matrix();
            for i in 0..d {
                for j in 0..d {
                    out[i][j] += l * (&p[i][j] - &prev[i][j]);
                }
            }
            prev = p;
        }
        out
    }

    /// `self ≤c other`: `other − self` is positive semidefinite.
    pub fn canonical_leq(&self, other: &Self) -> Result<bool, SpectralError> {
        self.same_dim(other)?;
        let (a, b) = (self.to_operator(), other.to_operator());
        let diff: Matrix = a
            .iter()
            .zip(&b)
            .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| y - x).collect())
            .collect();
        Ok(is_psd(&diff))
    }

    /// Text form: a header `effect d k`, then one line per threshold,
    /// `λ ; row, row, ...` listing the basis of `M(λ)`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "effect {} {}", self.d, self.jumps.len()).unwrap();
        for (l, v) in &self.jumps {
            let rows: Vec<String> = v
                .basis()
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|q| q.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect();
            writeln!(s, "{l} ; {}", rows.join(", ")).unwrap();
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self, SpectralError> {
        let perr = |line: usize, m: &str| SpectralError::Parse {
            line,
            message: m.to_string(),
        };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hl, header) = lines.next().ok_or_else(|| perr(1, "empty input"))?;
        let h: Vec<&str> = header.split_whitespace().collect();
        let (d, k) = match h.as_slice() {
            ["effect", d, k] => (
                d.parse::<usize>().map_err(|_| perr(hl, "bad dimension"))?,
                k.parse::<usize>()
                    .map_err(|_| perr(hl, "bad threshold count"))?,
            ),
            _ => return Err(perr(hl, "expected `effect <d> <k>`")),
        };
        let rat = |tok: &str, line: usize| {
            tok.parse::<Q>()
                .map_err(|_| perr(line, &format!("bad rational `{tok}`")))
        };
        let mut jumps = Vec::with_capacity(k);
        for _ in 0..k {
            let (ln, l) = lines
                .next()
                .ok_or_else(|| perr(hl + k, "missing threshold line"))?;
            let (lam, rows) = l
                .split_once(';')
                .ok_or_else(|| perr(ln, "expected `λ ; rows`"))?;
            let lam = rat(lam.trim(), ln)?;
            let vectors = rows
                .split(',')
                .map(str::trim)
                .filter(|r| !r.is_empty())
                .map(|r| {
                    r.split_whitespace()
                        .map(|t| rat(t, ln))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            let v = RationalSubspace::span(d, &vectors).map_err(|e| perr(ln, &e.to_string()))?;
            jumps.push((lam, v));
        }
        if let Some((ln, _)) = lines.next() {
            return Err(perr(ln, "trailing content"));
        }
        Self::new(d, jumps)
    }
}
