//! Simplicity criterion as a procedure.
//!
//! A polarized abelian variety is simple iff `sigma(L, M)` is irrational or
//! infinite for every `M` not proportional to `L`. A rational value `p/q`
//! yields the boundary class `B = qL - pM`: nef, not ample, and (in the matrix
//! model) `f_B = qI - pF` is a nonzero singular matrix whose kernel is the
//! tangent space of an abelian subvariety.
//!
//! Scans can only ever produce witnesses of non-simplicity. A scan without
//! witnesses is reported as "consistent with simple", never as a proof.

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::arith::{factorial, Int, Rat};
use crate::error::{Error, Result};
use crate::nefslope::{self, is_nef, NefReport, SlopeResult};
use crate::numdata::{is_proportional, profile_from_matrix, IntersectionProfile, SymMatrixModel};
use crate::polyroot::AlgebraicNumber;

/// Pullback `N_Y^* L` of the polarization along the norm endomorphism of an
/// abelian subvariety `Y` of dimension `dim_y` whose induced polarization has
/// exponent `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormClassSpec {
    n: usize,
    dim_y: usize,
    e: u64,
}

impl NormClassSpec {
    pub fn new(n: usize, dim_y: usize, e: u64) -> Result<Self> {
        if dim_y == 0 || dim_y >= n {
            return Err(Error::InvalidSpec(format!(
                "need 1 <= dim Y < n, got dim Y = {dim_y}, n = {n}"
            )));
        }
        if e == 0 {
            return Err(Error::InvalidSpec("exponent e must be positive".into()));
        }
        Ok(Self { n, dim_y, e })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim_y(&self) -> usize {
        self.dim_y
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    /// `1/e^2`.
    pub fn expected_slope(&self) -> Rat {
        Rat::new(Int::one(), Int::from(self.e) * Int::from(self.e))
    }
}

/// `F = diag(e^2, ..., e^2, 0, ..., 0)` with `dim_y` nonzero entries and
/// `L^n = n!`: `f_M = N_Y^2 = e N_Y` for an axis subtorus of `E^n`.
pub fn norm_class(spec: &NormClassSpec) -> SymMatrixModel {
    let e2 = Rat::from_integer(Int::from(spec.e) * Int::from(spec.e));
    let diag: Vec<Rat> = (0..spec.n)
        .map(|i| {
            if i < spec.dim_y {
                e2.clone()
            } else {
                Rat::zero()
            }
        })
        .collect();
    SymMatrixModel::diagonal(&diag, factorial(spec.n)).expect("diagonal matrices are symmetric")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormCheck {
    pub pass: bool,
    pub proportional: bool,
    pub slope: SlopeResult,
}

/// Runs matrix -> profile -> slope and checks for exactly `1/e^2` with `M`
/// not proportional to `L`.
pub fn norm_slope_check(spec: &NormClassSpec) -> Result<NormCheck> {
    let model = norm_class(spec);
    let profile = profile_from_matrix(&model)?;
    let proportional = is_proportional(&profile).is_some();
    let slope = nefslope::slope(&profile)?;
    let exact = slope.rational_value() == Some(spec.expected_slope());
    Ok(NormCheck {
        pass: exact && !proportional,
        proportional,
        slope,
    })
}

/// `f_B = qI - pF` for the boundary class `B = qL - pM`.
pub fn boundary_endomorphism(m: &SymMatrixModel, p: &Int, q: &Int) -> Vec<Vec<Rat>> {
    let (p, q) = (Rat::from_integer(p.clone()), Rat::from_integer(q.clone()));
    m.matrix()
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, x)| if i == j { &q - &p * x } else { -(&p * x) })
                .collect()
        })
        .collect()
}

/// Dimension of the null space, by exact Gaussian elimination.
pub fn nullity(a: &[Vec<Rat>]) -> usize {
    let mut a = a.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let lead = a[rank][col].clone();
        for r in 0..rows {
            if r == rank || a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &lead;
            for c in col..cols {
                let delta = &factor * &a[rank][c];
                a[r][c] -= delta;
            }
        }
        rank += 1;
    }
    cols - rank
}

/// Nullity of `f_B = qI - pF` for the slope `p/q`.
pub fn kernel_rank(m: &SymMatrixModel, p: &Int, q: &Int) -> usize {
    nullity(&boundary_endomorphism(m, p, q))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelWitness {
    pub nullity: usize,
    pub endomorphism_is_zero: bool,
}

impl KernelWitness {
    /// Non-trivial proper kernel: `1 <= nullity <= n-1` and `f_B != 0`.
    pub fn is_proper(&self, n: usize) -> bool {
        !self.endomorphism_is_zero && self.nullity >= 1 && self.nullity < n
    }
}

pub fn kernel_witness(m: &SymMatrixModel, p: &Int, q: &Int) -> KernelWitness {
    let f_b = boundary_endomorphism(m, p, q);
    KernelWitness {
        nullity: nullity(&f_b),
        endomorphism_is_zero: f_b.iter().flatten().all(Zero::is_zero),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanInstance {
    pub label: String,
    pub profile: IntersectionProfile,
    pub matrix: Option<SymMatrixModel>,
}

impl ScanInstance {
    pub fn from_profile(label: impl Into<String>, profile: IntersectionProfile) -> Self {
        Self {
            label: label.into(),
            profile,
            matrix: None,
        }
    }

    pub fn from_matrix(label: impl Into<String>, matrix: SymMatrixModel) -> Result<Self> {
        let profile = profile_from_matrix(&matrix)?;
        Ok(Self {
            label: label.into(),
            profile,
            matrix: Some(matrix),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScanVerdict {
    /// `M = tL` numerically; excluded from the criterion.
    SkippedProportional {
        ratio: Rat,
    },
    /// Rational slope `p/q` with a nef, non-ample boundary class `qL - pM`.
    Witness {
        p: Int,
        q: Int,
        boundary: IntersectionProfile,
        report: NefReport,
        kernel: Option<KernelWitness>,
    },
    Irrational {
        slope: AlgebraicNumber,
    },
    Infinite,
    /// Rational slope whose boundary class is not nef-and-not-ample. Only
    /// possible for profiles that no abelian variety realizes.
    Unrealizable {
        p: Int,
        q: Int,
        boundary: IntersectionProfile,
        report: NefReport,
    },
}

impl ScanVerdict {
    pub fn is_witness(&self) -> bool {
        matches!(self, ScanVerdict::Witness { .. })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Overall {
    NonSimpleWitnessFound,
    ConsistentWithSimple,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicityScan {
    pub entries: Vec<(ScanInstance, ScanVerdict)>,
    pub overall: Overall,
}

impl SimplicityScan {
    pub fn witnesses(&self) -> impl Iterator<Item = &(ScanInstance, ScanVerdict)> {
        self.entries.iter().filter(|(_, v)| v.is_witness())
    }
}

pub fn classify(instance: &ScanInstance) -> Result<ScanVerdict> {
    let profile = &instance.profile;
    if let Some(ratio) = is_proportional(profile) {
        return Ok(ScanVerdict::SkippedProportional { ratio });
    }
    let result = nefslope::slope(profile)?;
    let Some(value) = result.rational_value() else {
        return Ok(match result {
            SlopeResult::Finite { slope, .. } => ScanVerdict::Irrational { slope },
            SlopeResult::Infinite { .. } => ScanVerdict::Infinite,
        });
    };
    let (p, q) = (value.numer().clone(), value.denom().clone());
    debug_assert!(p.is_positive());
    let boundary = profile.binary(&q, &-&p);
    let report = is_nef(&boundary);
    if !report.is_boundary() {
        return Ok(ScanVerdict::Unrealizable {
            p,
            q,
            boundary,
            report,
        });
    }
    let kernel = instance.matrix.as_ref().map(|m| kernel_witness(m, &p, &q));
    Ok(ScanVerdict::Witness {
        p,
        q,
        boundary,
        report,
        kernel,
    })
}

/// Classifies every instance; with `jobs > 1` the work runs on a rayon pool
/// and results are merged in input order.
pub fn scan(instances: Vec<ScanInstance>, jobs: usize) -> Result<SimplicityScan> {
    if let Some(first) = instances.first() {
        let top = first.profile.top();
        if let Some((index, other)) = instances
            .iter()
            .enumerate()
            .find(|(_, i)| i.profile.top() != top)
        {
            return Err(Error::InconsistentContext {
                first: top.to_string(),
                other: other.profile.top().to_string(),
                index,
            });
        }
    }
    let verdicts: Vec<ScanVerdict> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| instances.par_iter().map(classify).collect::<Result<_>>())?
    } else {
        instances.iter().map(classify).collect::<Result<_>>()?
    };
    let overall = if verdicts.iter().any(ScanVerdict::is_witness) {
        Overall::NonSimpleWitnessFound
    } else {
        Overall::ConsistentWithSimple
    };
    Ok(SimplicityScan {
        entries: instances.into_iter().zip(verdicts).collect(),
        overall,
    })
}
