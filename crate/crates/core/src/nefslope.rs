//! The nef threshold `sigma(L, M)` and everything certified around it.
//!
//! With `zeta` the largest real root of `n! chi(uL - M)`, the threshold is
//! infinite when `zeta <= 0` and `1/zeta` otherwise. Nefness of a class `B`
//! is read off its profile: `B` is nef iff every `L^k B^(n-k)` is
//! non-negative.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{divides, Int, Rat};
use crate::error::{Error, Result};
use crate::numdata::{IntersectionProfile, ValidationLevel};
use crate::polyroot::{
    cauchy_bound, chi_polynomial, isolate_max_root, rational_candidates, rational_roots,
    AlgebraicNumber, Bound, SturmChain,
};

/// `2^-64`, the display width used when no other width is requested.
pub fn default_width() -> Rat {
    Rat::new(BigInt::one(), BigInt::one() << 64u32)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NefVerdict {
    Nef,
    /// First negative entry `L^k B^(n-k)`.
    NotNef {
        k: usize,
        value: Int,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NefReport {
    pub values: Vec<(usize, Int)>,
    pub verdict: NefVerdict,
    /// Nef with `B^n > 0`.
    pub ample: bool,
}

impl NefReport {
    pub fn is_nef(&self) -> bool {
        self.verdict == NefVerdict::Nef
    }

    /// Nef but not ample: the class sits on the boundary of the ample cone.
    pub fn is_boundary(&self) -> bool {
        self.is_nef() && !self.ample
    }
}

/// Nefness of the class `B` whose profile against `L` is `p`.
pub fn is_nef(p: &IntersectionProfile) -> NefReport {
    let values: Vec<(usize, Int)> = p.values().iter().cloned().enumerate().collect();
    let verdict = match values.iter().find(|(_, v)| v.is_negative()) {
        Some((k, v)) => NefVerdict::NotNef {
            k: *k,
            value: v.clone(),
        },
        None => NefVerdict::Nef,
    };
    let ample = verdict == NefVerdict::Nef && p.m_top().is_positive();
    NefReport {
        values,
        verdict,
        ample,
    }
}

/// How the rationality verdict was reached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceConclusion {
    /// `candidates[index]` is a root and is the largest real root.
    MaxRoot { index: usize },
    /// No candidate is the largest root: the largest root lies in
    /// `(lo, hi]`, strictly above every rational root, on a factor with no
    /// rational roots.
    Irrational {
        best_rational_root: Option<Rat>,
        lo: Rat,
        hi: Rat,
    },
}

/// Every positive rational-root candidate of `n! chi(uL - M)` with its exact
/// value there, in descending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateTrace {
    pub candidates: Vec<(Rat, Rat)>,
    pub conclusion: TraceConclusion,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rationality {
    /// `sigma = p/q` in lowest terms, so `zeta = q/p`.
    Rational {
        p: Int,
        q: Int,
        certificate: CandidateTrace,
    },
    Irrational {
        certificate: CandidateTrace,
    },
}

impl Rationality {
    pub fn is_rational(&self) -> bool {
        matches!(self, Rationality::Rational { .. })
    }

    pub fn certificate(&self) -> &CandidateTrace {
        match self {
            Rationality::Rational { certificate, .. } | Rationality::Irrational { certificate } => {
                certificate
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SlopeResult {
    /// No positive root: `L - tM` is nef for every `t >= 0`. The largest real
    /// root is kept when one exists.
    Infinite { zeta: Option<AlgebraicNumber> },
    Finite {
        zeta: AlgebraicNumber,
        slope: AlgebraicNumber,
        rationality: Rationality,
    },
}

impl SlopeResult {
    pub fn is_infinite(&self) -> bool {
        matches!(self, SlopeResult::Infinite { .. })
    }

    pub fn zeta(&self) -> Option<&AlgebraicNumber> {
        match self {
            SlopeResult::Infinite { zeta } => zeta.as_ref(),
            SlopeResult::Finite { zeta, .. } => Some(zeta),
        }
    }

    pub fn slope(&self) -> Option<&AlgebraicNumber> {
        match self {
            SlopeResult::Finite { slope, .. } => Some(slope),
            SlopeResult::Infinite { .. } => None,
        }
    }

    pub fn rationality(&self) -> Option<&Rationality> {
        match self {
            SlopeResult::Finite { rationality, .. } => Some(rationality),
            SlopeResult::Infinite { .. } => None,
        }
    }

    /// `p/q` when the slope is finite and rational.
    pub fn rational_value(&self) -> Option<Rat> {
        match self.rationality()? {
            Rationality::Rational { p, q, .. } => Some(Rat::new(p.clone(), q.clone())),
            Rationality::Irrational { .. } => None,
        }
    }

    pub fn is_irrational(&self) -> bool {
        matches!(self.rationality(), Some(Rationality::Irrational { .. }))
    }
}

pub fn slope(p: &IntersectionProfile) -> Result<SlopeResult> {
    slope_with_width(p, &default_width())
}

/// Threshold with `zeta` and `slope` refined to intervals no wider than
/// `width`. Certification never depends on the width.
pub fn slope_with_width(p: &IntersectionProfile, width: &Rat) -> Result<SlopeResult> {
    p.validate(ValidationLevel::Syntactic)
        .map_err(|v| Error::InvalidProfile(v.detail))?;
    let chi = chi_polynomial(p);
    if chi.degree().unwrap_or(0) == 0 {
        return Err(Error::DegenerateInput);
    }
    let zeta = isolate_max_root(&chi);
    let positive_roots = SturmChain::new(&chi).count(&Bound::Finite(Rat::zero()), &Bound::PosInf);
    if positive_roots == 0 {
        return Ok(SlopeResult::Infinite {
            zeta: zeta.map(|z| z.refine(width)),
        });
    }
    let zeta = zeta
        .expect("a positive root exists")
        .refine(width)
        .above(&Rat::zero());
    let slope = zeta.reciprocal().expect("zeta is positive");
    let rationality = decide_rationality(p, &chi, &zeta);
    Ok(SlopeResult::Finite {
        zeta: zeta.refine(width),
        slope: slope.refine(width),
        rationality,
    })
}

fn decide_rationality(
    p: &IntersectionProfile,
    chi: &crate::polyroot::IntPolynomial,
    zeta: &AlgebraicNumber,
) -> Rationality {
    let candidates: Vec<(Rat, Rat)> = rational_candidates(chi)
        .into_iter()
        .filter(|c| c.is_positive())
        .map(|c| {
            let value = chi.eval(&c);
            (c, value)
        })
        .collect();
    match zeta.exact() {
        Some(z) => {
            let index = candidates
                .iter()
                .position(|(c, _)| c == z)
                .expect("a positive rational root is always a candidate");
            let (q, pp) = (z.numer().clone(), z.denom().clone());
            debug_assert!(divides(&pp, p.top()) && divides(&q, p.m_top()));
            Rationality::Rational {
                p: pp,
                q,
                certificate: CandidateTrace {
                    candidates,
                    conclusion: TraceConclusion::MaxRoot { index },
                },
            }
        }
        None => {
            let (lo, hi) = zeta.interval();
            Rationality::Irrational {
                certificate: CandidateTrace {
                    candidates,
                    conclusion: TraceConclusion::Irrational {
                        best_rational_root: rational_roots(chi).into_iter().next(),
                        lo: lo.clone(),
                        hi: hi.clone(),
                    },
                },
            }
        }
    }
}

/// Rational `p/q` (with `p | L^n`, `q | M^n`) or an irrationality trace.
pub fn certify_rationality(p: &IntersectionProfile) -> Result<Rationality> {
    match slope(p)? {
        SlopeResult::Finite { rationality, .. } => Ok(rationality),
        SlopeResult::Infinite { .. } => Err(Error::InfiniteSlope),
    }
}

/// Checks a rationality verdict against the profile without trusting the
/// engine: divisibility, the zero evaluation, and the trace values.
pub fn verify_certificate(p: &IntersectionProfile, r: &Rationality) -> bool {
    let chi = chi_polynomial(p);
    let trace = r.certificate();
    let values_ok = trace.candidates.iter().all(|(c, v)| chi.eval(c) == *v);
    match (r, &trace.conclusion) {
        (Rationality::Rational { p: num, q, .. }, TraceConclusion::MaxRoot { index }) => {
            let zeta = Rat::new(q.clone(), num.clone());
            let chain = SturmChain::new(&chi);
            values_ok
                && divides(num, p.top())
                && divides(q, p.m_top())
                && trace
                    .candidates
                    .get(*index)
                    .is_some_and(|(c, v)| *c == zeta && v.is_zero())
                && chain.count(&Bound::Finite(zeta), &Bound::PosInf) == 0
        }
        (
            Rationality::Irrational { .. },
            TraceConclusion::Irrational {
                best_rational_root,
                lo,
                hi,
            },
        ) => {
            let chain = SturmChain::new(&chi);
            let no_root_above_best = trace
                .candidates
                .iter()
                .all(|(c, v)| !v.is_zero() || best_rational_root.as_ref().is_some_and(|b| c <= b));
            values_ok
                && !lo.is_negative()
                && no_root_above_best
                && best_rational_root.as_ref().is_none_or(|b| b <= lo)
                && chain.count(&Bound::Finite(lo.clone()), &Bound::Finite(hi.clone())) == 1
                && chain.count(&Bound::Finite(hi.clone()), &Bound::PosInf) == 0
                && chi.sign_at(hi) != 0
        }
        _ => false,
    }
}

/// `1 / (1 + max_{k<n} C(n,k) |L^k M^(n-k)| / L^n)`, which is the reciprocal
/// of the Cauchy bound of `n! chi(uL - M)`.
pub fn slope_lower_bound(p: &IntersectionProfile) -> Result<Rat> {
    p.validate(ValidationLevel::Syntactic)
        .map_err(|v| Error::InvalidProfile(v.detail))?;
    let negation = p.binary(&Int::zero(), &-Int::one());
    if is_nef(&negation).is_nef() {
        return Err(Error::NegationIsNef);
    }
    Ok(cauchy_bound(&chi_polynomial(p)).recip())
}

/// Value of the s-invariant `1/sigma` of the divisor ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SInvariant {
    Value(AlgebraicNumber),
    /// `sigma` is infinite; no value is assigned.
    InfiniteSlope,
}

pub fn s_invariant(p: &IntersectionProfile) -> Result<SInvariant> {
    Ok(match slope(p)? {
        SlopeResult::Finite { zeta, .. } => SInvariant::Value(zeta),
        SlopeResult::Infinite { .. } => SInvariant::InfiniteSlope,
    })
}
