//! JSON wire formats. Every exact number is written as a decimal string
//! (`"p/q"` or `"p"` for rationals); integer inputs may also be plain JSON
//! numbers.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::arith::{fmt_rat, parse_int, parse_rat, Int, Rat};
use crate::error::{Error, Result};
use crate::generators::Instance;
use crate::nefslope::{
    CandidateTrace, NefReport, NefVerdict, Rationality, SlopeResult, TraceConclusion,
};
use crate::numdata::{IntersectionProfile, SymMatrixModel};
use crate::polyroot::{AlgebraicNumber, IntPolynomial};
use crate::simplicity::{Overall, ScanInstance, ScanVerdict, SimplicityScan};

/// A JSON integer or a decimal string.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum NumLit {
    Int(i64),
    Str(String),
}

impl NumLit {
    fn to_int(&self) -> Result<Int> {
        match self {
            NumLit::Int(i) => Ok(Int::from(*i)),
            NumLit::Str(s) => parse_int(s),
        }
    }

    fn to_rat(&self) -> Result<Rat> {
        match self {
            NumLit::Int(i) => Ok(Rat::from_integer(Int::from(*i))),
            NumLit::Str(s) => parse_rat(s),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProfileIn {
    #[serde(default)]
    label: Option<String>,
    n: usize,
    v: Vec<NumLit>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixIn {
    #[serde(default)]
    label: Option<String>,
    n: usize,
    #[serde(rename = "Ln")]
    ln: Option<NumLit>,
    #[serde(rename = "F")]
    f: Vec<Vec<NumLit>>,
}

/// A parsed instance object with its optional label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledInstance {
    pub label: Option<String>,
    pub instance: Instance,
}

fn decode<T: for<'de> Deserialize<'de>>(value: Value) -> Result<T> {
    serde_json::from_value(value).map_err(|e| Error::Json(e.to_string()))
}

/// Parses `{"n", "v"}` as a profile or `{"n", "Ln", "F"}` as a matrix model
/// (`Ln` defaults to `n!`).
pub fn instance_from_value(value: Value) -> Result<LabeledInstance> {
    let is_matrix = value.get("F").is_some();
    if is_matrix {
        let m: MatrixIn = decode(value)?;
        let f =
            m.f.iter()
                .map(|row| row.iter().map(NumLit::to_rat).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
        if f.len() != m.n {
            return Err(Error::InvalidMatrix(format!(
                "n = {} but F has {} rows",
                m.n,
                f.len()
            )));
        }
        let model = match m.ln {
            Some(ln) => SymMatrixModel::new(f, ln.to_int()?)?,
            None => SymMatrixModel::principal(f)?,
        };
        Ok(LabeledInstance {
            label: m.label,
            instance: Instance::Matrix(model),
        })
    } else {
        let p: ProfileIn = decode(value)?;
        let v = p.v.iter().map(NumLit::to_int).collect::<Result<Vec<_>>>()?;
        let profile = IntersectionProfile::from_raw(p.n, v);
        Ok(LabeledInstance {
            label: p.label,
            instance: Instance::Profile(profile),
        })
    }
}

/// One instance object, or an array of them, or `{"instances": [...]}`.
pub fn instances_from_value(value: Value) -> Result<Vec<LabeledInstance>> {
    match value {
        Value::Array(items) => items.into_iter().map(instance_from_value).collect(),
        Value::Object(mut map) if map.contains_key("instances") => {
            instances_from_value(map.remove("instances").expect("checked"))
        }
        other => Ok(vec![instance_from_value(other)?]),
    }
}

pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))
}

fn strs<'a>(xs: impl IntoIterator<Item = &'a Int>) -> Vec<String> {
    xs.into_iter().map(Int::to_string).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProfileOut {
    pub n: usize,
    pub v: Vec<String>,
}

impl From<&IntersectionProfile> for ProfileOut {
    fn from(p: &IntersectionProfile) -> Self {
        Self {
            n: p.dim(),
            v: strs(p.values()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixOut {
    pub n: usize,
    #[serde(rename = "Ln")]
    pub ln: String,
    #[serde(rename = "F")]
    pub f: Vec<Vec<String>>,
}

impl From<&SymMatrixModel> for MatrixOut {
    fn from(m: &SymMatrixModel) -> Self {
        Self {
            n: m.dim(),
            ln: m.ln().to_string(),
            f: m.matrix()
                .iter()
                .map(|r| r.iter().map(fmt_rat).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum InstanceOut {
    Profile(ProfileOut),
    Matrix(MatrixOut),
}

impl From<&Instance> for InstanceOut {
    fn from(i: &Instance) -> Self {
        match i {
            Instance::Profile(p) => InstanceOut::Profile(p.into()),
            Instance::Matrix(m) => InstanceOut::Matrix(m.into()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolyOut {
    pub coeffs: Vec<String>,
}

impl From<&IntPolynomial> for PolyOut {
    fn from(p: &IntPolynomial) -> Self {
        Self {
            coeffs: strs(p.coeffs()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlgebraicOut {
    pub minpoly: PolyOut,
    pub interval: [String; 2],
    pub exact: Option<String>,
    /// Display only; never used for decisions.
    pub approx: String,
}

impl From<&AlgebraicNumber> for AlgebraicOut {
    fn from(a: &AlgebraicNumber) -> Self {
        let (lo, hi) = a.interval();
        Self {
            minpoly: a.poly().into(),
            interval: [fmt_rat(lo), fmt_rat(hi)],
            exact: a.exact().map(fmt_rat),
            approx: format!("{:.17e}", a.to_f64()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateOut {
    pub candidate: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConclusionOut {
    MaxRoot {
        index: usize,
        root: String,
    },
    Irrational {
        best_rational_root: Option<String>,
        interval: [String; 2],
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RationalityOut {
    pub verdict: &'static str,
    pub p: Option<String>,
    pub q: Option<String>,
    pub trace: Vec<CandidateOut>,
    pub conclusion: ConclusionOut,
}

fn trace_out(t: &CandidateTrace) -> (Vec<CandidateOut>, ConclusionOut) {
    let trace = t
        .candidates
        .iter()
        .map(|(c, v)| CandidateOut {
            candidate: fmt_rat(c),
            value: fmt_rat(v),
        })
        .collect();
    let conclusion = match &t.conclusion {
        TraceConclusion::MaxRoot { index } => ConclusionOut::MaxRoot {
            index: *index,
            root: fmt_rat(&t.candidates[*index].0),
        },
        TraceConclusion::Irrational {
            best_rational_root,
            lo,
            hi,
        } => ConclusionOut::Irrational {
            best_rational_root: best_rational_root.as_ref().map(fmt_rat),
            interval: [fmt_rat(lo), fmt_rat(hi)],
        },
    };
    (trace, conclusion)
}

impl From<&Rationality> for RationalityOut {
    fn from(r: &Rationality) -> Self {
        let (trace, conclusion) = trace_out(r.certificate());
        match r {
            Rationality::Rational { p, q, .. } => Self {
                verdict: "rational",
                p: Some(p.to_string()),
                q: Some(q.to_string()),
                trace,
                conclusion,
            },
            Rationality::Irrational { .. } => Self {
                verdict: "irrational",
                p: None,
                q: None,
                trace,
                conclusion,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SlopeOut {
    pub kind: &'static str,
    pub zeta: Option<AlgebraicOut>,
    pub slope: Option<AlgebraicOut>,
    pub rationality: Option<RationalityOut>,
}

impl From<&SlopeResult> for SlopeOut {
    fn from(s: &SlopeResult) -> Self {
        match s {
            SlopeResult::Infinite { zeta } => Self {
                kind: "infinite",
                zeta: zeta.as_ref().map(Into::into),
                slope: None,
                rationality: None,
            },
            SlopeResult::Finite {
                zeta,
                slope,
                rationality,
            } => Self {
                kind: "finite",
                zeta: Some(zeta.into()),
                slope: Some(slope.into()),
                rationality: Some(rationality.into()),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NefValueOut {
    pub k: usize,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NefOut {
    pub values: Vec<NefValueOut>,
    pub verdict: &'static str,
    pub witness: Option<NefValueOut>,
    pub ample: bool,
}

impl From<&NefReport> for NefOut {
    fn from(r: &NefReport) -> Self {
        let (verdict, witness) = match &r.verdict {
            NefVerdict::Nef => ("nef", None),
            NefVerdict::NotNef { k, value } => (
                "not-nef",
                Some(NefValueOut {
                    k: *k,
                    value: value.to_string(),
                }),
            ),
        };
        Self {
            values: r
                .values
                .iter()
                .map(|(k, v)| NefValueOut {
                    k: *k,
                    value: v.to_string(),
                })
                .collect(),
            verdict,
            witness,
            ample: r.ample,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KernelOut {
    pub nullity: usize,
    pub endomorphism_is_zero: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum VerdictOut {
    SkippedProportional {
        ratio: String,
    },
    RationalSlopeWitness {
        p: String,
        q: String,
        boundary: ProfileOut,
        nef: NefOut,
        kernel: Option<KernelOut>,
    },
    Irrational {
        slope: AlgebraicOut,
    },
    Infinite,
    Unrealizable {
        p: String,
        q: String,
        boundary: ProfileOut,
        nef: NefOut,
    },
}

impl From<&ScanVerdict> for VerdictOut {
    fn from(v: &ScanVerdict) -> Self {
        match v {
            ScanVerdict::SkippedProportional { ratio } => VerdictOut::SkippedProportional {
                ratio: fmt_rat(ratio),
            },
            ScanVerdict::Witness {
                p,
                q,
                boundary,
                report,
                kernel,
            } => VerdictOut::RationalSlopeWitness {
                p: p.to_string(),
                q: q.to_string(),
                boundary: boundary.into(),
                nef: report.into(),
                kernel: kernel.as_ref().map(|k| KernelOut {
                    nullity: k.nullity,
                    endomorphism_is_zero: k.endomorphism_is_zero,
                }),
            },
            ScanVerdict::Irrational { slope } => VerdictOut::Irrational {
                slope: slope.into(),
            },
            ScanVerdict::Infinite => VerdictOut::Infinite,
            ScanVerdict::Unrealizable {
                p,
                q,
                boundary,
                report,
            } => VerdictOut::Unrealizable {
                p: p.to_string(),
                q: q.to_string(),
                boundary: boundary.into(),
                nef: report.into(),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanEntryOut {
    pub label: String,
    pub profile: ProfileOut,
    #[serde(flatten)]
    pub verdict: VerdictOut,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanOut {
    pub instances: Vec<ScanEntryOut>,
    pub overall: &'static str,
}

impl From<&SimplicityScan> for ScanOut {
    fn from(s: &SimplicityScan) -> Self {
        Self {
            instances: s
                .entries
                .iter()
                .map(|(inst, v): &(ScanInstance, ScanVerdict)| ScanEntryOut {
                    label: inst.label.clone(),
                    profile: (&inst.profile).into(),
                    verdict: v.into(),
                })
                .collect(),
            overall: match s.overall {
                Overall::NonSimpleWitnessFound => "non-simple-witness-found",
                Overall::ConsistentWithSimple => "consistent-with-simple",
            },
        }
    }
}
