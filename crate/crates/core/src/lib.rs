//! Exact computation of the nef threshold
//!
//! ```text
//! sigma(L, M) = sup { t : L - tM is nef }
//! ```
//!
//! on a polarized abelian variety `(X, L)`, working purely from the
//! intersection numbers `L^k M^(n-k)`. The threshold is the reciprocal of the
//! largest real root of `chi(uL - M)`, so everything reduces to exact integer
//! polynomial arithmetic: Sturm chains, rational-root enumeration and
//! bisection on rational intervals.
//!
//! Rational thresholds come with a candidate trace that can be replayed by
//! hand; on abelian varieties a rational threshold for a non-proportional
//! class exhibits a non-trivial abelian subvariety, which [`simplicity`] turns
//! into a scan over bundle classes.
//!
//! ```
//! use nefslope_core::{nefslope, IntersectionProfile};
//!
//! let p = IntersectionProfile::from_i64(2, &[0, 4, 2]).unwrap();
//! let s = nefslope::slope(&p).unwrap();
//! assert_eq!(s.rational_value().unwrap().to_string(), "1/4");
//! ```

#![allow(clippy::needless_range_loop, clippy::large_enum_variant)]

pub mod arith;
pub mod error;
pub mod generators;
pub mod nefslope;
pub mod numdata;
pub mod polyroot;
pub mod simplicity;
pub mod wire;

pub use arith::{Int, Rat};
pub use error::{Error, Result};
pub use generators::{GenKind, GenSpec, Instance};
pub use nefslope::{CandidateTrace, NefReport, NefVerdict, Rationality, SInvariant, SlopeResult};
pub use numdata::{IntersectionProfile, SymMatrixModel, ValidationLevel, Violation};
pub use polyroot::{AlgebraicNumber, Bound, IntPolynomial, SturmChain};
pub use simplicity::{NormClassSpec, ScanInstance, ScanVerdict, SimplicityScan};
