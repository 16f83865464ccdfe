//! Deterministic instance builders.
//!
//! Random streams use PCG32 (`Lcg64Xsh32`): a 64-bit LCG with multiplier
//! `6364136223846793005`, increment `(STREAM << 1) | 1` where
//! `STREAM = 0x0a02bdbf7bb3c0a7`, and the XSH-RR output permutation, seeded
//! with `state = seed`. Only 32-bit outputs are consumed. An integer in
//! `[lo, hi]` with `span = hi - lo + 1` is drawn by rejecting outputs
//! `x >= 2^32 - (2^32 mod span)` and returning `lo + x mod span`. Matrix
//! entries are drawn row-major over the upper triangle (diagonal included).
//! Any implementation following these rules reproduces the streams.

use num_integer::Integer;
use num_traits::{One, Zero};
use rand_core::Rng;
use rand_pcg::Pcg32;

use crate::arith::{factorial, Int, Rat};
use crate::error::{Error, Result};
use crate::numdata::{
    mat_mul, profile_from_matrix, IntersectionProfile, SymMatrixModel, ValidationLevel,
};

pub const STREAM: u64 = 0x0a02_bdbf_7bb3_c0a7;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Profile(IntersectionProfile),
    Matrix(SymMatrixModel),
}

impl Instance {
    pub fn profile(&self) -> Result<IntersectionProfile> {
        match self {
            Instance::Profile(p) => Ok(p.clone()),
            Instance::Matrix(m) => profile_from_matrix(m),
        }
    }

    pub fn matrix(&self) -> Option<&SymMatrixModel> {
        match self {
            Instance::Matrix(m) => Some(m),
            Instance::Profile(_) => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    /// `(M^2, L.M, L^2)` with `L^2 in [1, bound]`, the others in
    /// `[-bound, bound]`, rejected unless `(L.M)^2 >= L^2 M^2`.
    Surface { bound: i64 },
    /// Symmetric integer matrix with entries in `[-bound, bound]`, `L^n = n!`.
    ProductMatrix { n: usize, bound: i64 },
    /// Symmetric rational matrix, numerators in `[-bound, bound]`,
    /// denominators in `[1, denom]`; `L^n = n! * lcm(denominators)^n` keeps
    /// the profile integral.
    RationalMatrix { n: usize, bound: i64, denom: i64 },
    /// `F = H diag(l) H` with `H` the rational Householder reflection of a
    /// random integer vector and integer eigenvalues `l` in
    /// `[-bound, bound]`, not all equal, largest positive. The slope is
    /// `1 / max l`, and `M` is never proportional to `L`.
    RationalSpectrum { n: usize, bound: i64 },
    /// Raw profile, entries in `[-bound, bound]` and `L^n in [1, bound]`,
    /// rejected unless the chi polynomial is real-rooted.
    Profile { n: usize, bound: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub kind: GenKind,
    pub count: usize,
    pub seed: u64,
}

struct Stream(Pcg32);

impl Stream {
    fn new(seed: u64) -> Self {
        Self(Pcg32::new(seed, STREAM))
    }

    fn range(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        let span = (hi - lo + 1) as u64;
        assert!(span <= 1 << 32, "range too wide");
        let limit = (1u64 << 32) - ((1u64 << 32) % span);
        loop {
            let x = u64::from(self.0.next_u32());
            if x < limit {
                return lo + (x % span) as i64;
            }
        }
    }
}

pub fn gen_product(entries: Vec<Vec<Int>>) -> Result<SymMatrixModel> {
    let f = entries
        .into_iter()
        .map(|row| row.into_iter().map(Rat::from_integer).collect())
        .collect();
    SymMatrixModel::principal(f)
}

pub fn gen_surface(l2: Int, lm: Int, m2: Int) -> Result<IntersectionProfile> {
    let p = IntersectionProfile::new(2, vec![m2, lm, l2])?;
    match p.validate(ValidationLevel::SurfaceHodge) {
        Ok(()) => Ok(p),
        Err(_) => {
            let v = p.values();
            Err(Error::HodgeViolation {
                lm_squared: (&v[1] * &v[1]).to_string(),
                product: (&v[2] * &v[0]).to_string(),
            })
        }
    }
}

pub fn gen_random(spec: &GenSpec) -> Vec<Instance> {
    let mut rng = Stream::new(spec.seed);
    (0..spec.count).map(|_| draw(&mut rng, spec.kind)).collect()
}

fn draw(rng: &mut Stream, kind: GenKind) -> Instance {
    match kind {
        GenKind::Surface { bound } => loop {
            let l2 = rng.range(1, bound.max(1));
            let lm = rng.range(-bound, bound);
            let m2 = rng.range(-bound, bound);
            if let Ok(p) = gen_surface(Int::from(l2), Int::from(lm), Int::from(m2)) {
                return Instance::Profile(p);
            }
        },
        GenKind::ProductMatrix { n, bound } => {
            let f = symmetric(rng, n, |rng| {
                Rat::from_integer(Int::from(rng.range(-bound, bound)))
            });
            Instance::Matrix(SymMatrixModel::principal(f).expect("symmetric by construction"))
        }
        GenKind::RationalMatrix { n, bound, denom } => {
            let f = symmetric(rng, n, |rng| {
                let num = rng.range(-bound, bound);
                let den = rng.range(1, denom.max(1));
                Rat::new(Int::from(num), Int::from(den))
            });
            let lcm = f
                .iter()
                .flatten()
                .fold(Int::one(), |acc, x| acc.lcm(x.denom()));
            let ln = factorial(n) * num_traits::pow(lcm, n);
            Instance::Matrix(SymMatrixModel::new(f, ln).expect("symmetric by construction"))
        }
        GenKind::RationalSpectrum { n, bound } => {
            assert!(n >= 2, "a non-proportional spectrum needs n >= 2");
            let eigen = loop {
                let l: Vec<i64> = (0..n).map(|_| rng.range(-bound, bound)).collect();
                let max = *l.iter().max().expect("n >= 2");
                if max > 0 && l.iter().any(|&x| x != max) {
                    break l;
                }
            };
            let w = loop {
                let w: Vec<i64> = (0..n).map(|_| rng.range(-bound, bound)).collect();
                if w.iter().any(|&x| x != 0) {
                    break w;
                }
            };
            Instance::Matrix(conjugated_diagonal(&eigen, &w))
        }
        GenKind::Profile { n, bound } => loop {
            let mut v: Vec<Int> = (0..n)
                .map(|_| Int::from(rng.range(-bound, bound)))
                .collect();
            v.push(Int::from(rng.range(1, bound.max(1))));
            let p = IntersectionProfile::from_raw(n, v);
            if p.validate(ValidationLevel::Spectral).is_ok() {
                return Instance::Profile(p);
            }
        },
    }
}

fn symmetric(
    rng: &mut Stream,
    n: usize,
    mut entry: impl FnMut(&mut Stream) -> Rat,
) -> Vec<Vec<Rat>> {
    let mut f = vec![vec![Rat::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let x = entry(rng);
            f[i][j] = x.clone();
            f[j][i] = x;
        }
    }
    f
}

/// `H diag(eigen) H` with `H = I - 2 w w^T / (w^T w)`, `L^n = n!`.
pub fn conjugated_diagonal(eigen: &[i64], w: &[i64]) -> SymMatrixModel {
    let n = eigen.len();
    let norm: i64 = w.iter().map(|x| x * x).sum();
    assert!(norm > 0, "Householder vector must be nonzero");
    let h: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let id = if i == j { Rat::one() } else { Rat::zero() };
                    id - Rat::new(Int::from(2 * w[i] * w[j]), Int::from(norm))
                })
                .collect()
        })
        .collect();
    let d: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rat::from_integer(Int::from(eigen[i]))
                    } else {
                        Rat::zero()
                    }
                })
                .collect()
        })
        .collect();
    let f = mat_mul(&mat_mul(&h, &d), &h);
    SymMatrixModel::principal(f).expect("H D H is symmetric")
}

/// True when every entry is an integer, so the class is integral in the
/// product model.
pub fn has_integer_entries(m: &SymMatrixModel) -> bool {
    m.matrix().iter().flatten().all(|x| x.is_integer())
}

/// `(L.M)^2 - L^2 M^2` for a surface profile.
pub fn hodge_defect(p: &IntersectionProfile) -> Int {
    let v = p.values();
    &v[1] * &v[1] - &v[2] * &v[0]
}
