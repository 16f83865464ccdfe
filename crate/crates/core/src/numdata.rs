//! Numerical presentation of a polarized abelian variety `(X, L)` together
//! with a second class `M`, and the matrix model on a product of elliptic
//! curves.
//!
//! A pair `(L, M)` is seen only through its intersection profile
//! `v[k] = L^k M^(n-k)`. On `X = E^n` with `End(E) = Z` and the product
//! principal polarization, a class `M` is equivalently a symmetric rational
//! matrix `F` (the endomorphism `phi_L^-1 phi_M`), and the two presentations
//! are tied together by
//!
//! ```text
//! n! chi(uL - M) = L^n det(u I - F).
//! ```

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, factorial, fmt_rat, rat_int, Int, Rat};
use crate::error::{Error, Result};
use crate::polyroot;

/// `(L^k M^(n-k))_{k=0..n}` for a polarization `L` and a class `M`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntersectionProfile {
    n: usize,
    v: Vec<Int>,
}

impl IntersectionProfile {
    /// Builds a profile and checks the syntactic invariants.
    pub fn new(n: usize, v: Vec<Int>) -> Result<Self> {
        let p = Self::from_raw(n, v);
        if let Err(violation) = p.validate(ValidationLevel::Syntactic) {
            return Err(Error::InvalidProfile(violation.detail));
        }
        Ok(p)
    }

    pub fn from_i64(n: usize, v: &[i64]) -> Result<Self> {
        Self::new(n, v.iter().map(|&x| Int::from(x)).collect())
    }

    /// No checks at all; use [`IntersectionProfile::validate`] afterwards.
    pub fn from_raw(n: usize, v: Vec<Int>) -> Self {
        Self { n, v }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[Int] {
        &self.v
    }

    /// `L^n`.
    pub fn top(&self) -> &Int {
        &self.v[self.n]
    }

    /// `M^n`.
    pub fn m_top(&self) -> &Int {
        &self.v[0]
    }

    /// Profile of `M` itself scaled by `c`: `v[k] * c^(n-k)`.
    pub fn scale_m(&self, c: &Int) -> Self {
        let v = self
            .v
            .iter()
            .enumerate()
            .map(|(k, x)| x * num_traits::pow(c.clone(), self.n - k))
            .collect();
        Self { n: self.n, v }
    }

    /// The profile of the class `B = aL + bM` against `L`.
    pub fn binary(&self, a: &Int, b: &Int) -> Self {
        binary_profile(self, a, b)
    }

    /// Returns `t` with `M = tL` numerically, if the profile is proportional.
    pub fn proportional_ratio(&self) -> Option<Rat> {
        is_proportional(self)
    }

    pub fn validate(&self, level: ValidationLevel) -> Result<(), Violation> {
        validate(self, level)
    }
}

impl fmt::Display for IntersectionProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} v=(", self.n)?;
        for (i, x) in self.v.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Symmetric rational matrix model of `f_M` on `E^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymMatrixModel {
    n: usize,
    f: Vec<Vec<Rat>>,
    ln: Int,
}

impl SymMatrixModel {
    pub fn new(f: Vec<Vec<Rat>>, ln: Int) -> Result<Self> {
        let n = f.len();
        if n == 0 {
            return Err(Error::InvalidMatrix("matrix must be at least 1x1".into()));
        }
        if let Some(i) = f.iter().position(|row| row.len() != n) {
            return Err(Error::InvalidMatrix(format!(
                "row {i} has length {} (expected {n})",
                f[i].len()
            )));
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if f[i][j] != f[j][i] {
                    return Err(Error::AsymmetricInput { row: i, col: j });
                }
            }
        }
        if !ln.is_positive() {
            return Err(Error::InvalidMatrix(format!("L^n = {ln} must be positive")));
        }
        Ok(Self { n, f, ln })
    }

    /// Model with the product principal polarization, `L^n = n!`.
    pub fn principal(f: Vec<Vec<Rat>>) -> Result<Self> {
        let ln = factorial(f.len());
        Self::new(f, ln)
    }

    pub fn from_i64(rows: &[&[i64]], ln: i64) -> Result<Self> {
        let f = rows
            .iter()
            .map(|r| r.iter().map(|&x| Rat::from_integer(Int::from(x))).collect())
            .collect();
        Self::new(f, Int::from(ln))
    }

    pub fn diagonal(diag: &[Rat], ln: Int) -> Result<Self> {
        let n = diag.len();
        let f = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { diag[i].clone() } else { Rat::zero() })
                    .collect()
            })
            .collect();
        Self::new(f, ln)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &[Vec<Rat>] {
        &self.f
    }

    pub fn ln(&self) -> &Int {
        &self.ln
    }

    /// `F^2 = c F`, the structural shape of a norm endomorphism square.
    pub fn satisfies_idempotent_law(&self, c: &Rat) -> bool {
        let sq = mat_mul(&self.f, &self.f);
        (0..self.n).all(|i| (0..self.n).all(|j| sq[i][j] == &self.f[i][j] * c))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ValidationLevel {
    Syntactic,
    Spectral,
    #[serde(rename = "hodge")]
    SurfaceHodge,
}

impl std::str::FromStr for ValidationLevel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "syntactic" => Ok(Self::Syntactic),
            "spectral" => Ok(Self::Spectral),
            "hodge" | "surface-hodge" => Ok(Self::SurfaceHodge),
            _ => Err(Error::Parse(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    Length,
    NonPositiveTop,
    NonRealRoots,
    HodgeNotApplicable,
    HodgeIndex,
}

/// Which check failed, with the witnessing numbers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub level: ValidationLevel,
    pub kind: ViolationKind,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} check {:?}: {}", self.level, self.kind, self.detail)
    }
}

/// Exact coefficients (ascending) of `det(u I - F)`, via Faddeev-LeVerrier.
pub fn charpoly(f: &[Vec<Rat>]) -> Vec<Rat> {
    let n = f.len();
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    let mut m = vec![vec![Rat::zero(); n]; n];
    for k in 1..=n {
        // M_k = F M_{k-1} + c_{n-k+1} I
        let mut next = mat_mul(f, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        m = next;
        let fm = mat_mul(f, &m);
        let trace = (0..n).fold(Rat::zero(), |acc, i| acc + &fm[i][i]);
        coeffs[n - k] = -trace / Rat::from_integer(Int::from(k));
    }
    coeffs
}

pub(crate) fn mat_mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![Rat::zero(); m]; n];
    for i in 0..n {
        for (k, bk) in b.iter().enumerate() {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] += &a[i][k] * &bk[j];
            }
        }
    }
    out
}

/// `v[k] = L^n e_{n-k}(F) / C(n,k)`, read off `L^n det(u I - F)`.
pub fn profile_from_matrix(m: &SymMatrixModel) -> Result<IntersectionProfile> {
    let n = m.n;
    let cp = charpoly(&m.f);
    let mut v = Vec::with_capacity(n + 1);
    for (k, a) in cp.iter().enumerate() {
        let signed = if (n - k).is_odd() { -a } else { a.clone() };
        let val = signed * rat_int(&m.ln) / rat_int(&binomial(n, k));
        if !val.is_integer() {
            return Err(Error::NonIntegralProfile {
                k,
                power: n - k,
                value: fmt_rat(&val),
            });
        }
        v.push(val.to_integer());
    }
    IntersectionProfile::new(n, v)
}

/// `Some(t)` when `v[k] = t^(n-k) v[n]` for all `k`.
pub fn is_proportional(p: &IntersectionProfile) -> Option<Rat> {
    let n = p.n;
    let top = rat_int(p.top());
    let t = rat_int(&p.v[n - 1]) / &top;
    let mut power = Rat::one();
    for k in (0..n).rev() {
        power *= &t;
        if rat_int(&p.v[k]) != &power * &top {
            return None;
        }
    }
    Some(t)
}

pub fn validate(p: &IntersectionProfile, level: ValidationLevel) -> Result<(), Violation> {
    let fail = |level, kind, detail: String| {
        Err(Violation {
            level,
            kind,
            detail,
        })
    };
    if p.n == 0 || p.v.len() != p.n + 1 {
        return fail(
            ValidationLevel::Syntactic,
            ViolationKind::Length,
            format!(
                "expected {} entries for n = {}, got {}",
                p.n + 1,
                p.n,
                p.v.len()
            ),
        );
    }
    if !p.top().is_positive() {
        return fail(
            ValidationLevel::Syntactic,
            ViolationKind::NonPositiveTop,
            format!("L^n = {} must be positive", p.top()),
        );
    }
    if level == ValidationLevel::Syntactic {
        return Ok(());
    }

    // Surface checks come first so that a failing surface reports the Hodge
    // numbers rather than the (equivalent) discriminant condition.
    if level == ValidationLevel::SurfaceHodge {
        if p.n != 2 {
            return fail(
                ValidationLevel::SurfaceHodge,
                ViolationKind::HodgeNotApplicable,
                format!("Hodge index check needs n = 2, got n = {}", p.n),
            );
        }
        let lm_sq = &p.v[1] * &p.v[1];
        let prod = &p.v[2] * &p.v[0];
        if lm_sq < prod {
            return fail(
                ValidationLevel::SurfaceHodge,
                ViolationKind::HodgeIndex,
                format!("(L.M)^2 = {lm_sq} < L^2 M^2 = {prod}"),
            );
        }
    }

    let chi = polyroot::chi_polynomial(p);
    let real = polyroot::real_root_count_with_multiplicity(&chi);
    if real != p.n {
        return fail(
            ValidationLevel::Spectral,
            ViolationKind::NonRealRoots,
            format!(
                "chi polynomial {chi} has {real} real roots (with multiplicity) out of {}",
                p.n
            ),
        );
    }
    Ok(())
}

/// `w[k] = L^k (aL + bM)^(n-k) = sum_j C(n-k, j) a^(n-k-j) b^j v[n-j]`.
pub fn binary_profile(p: &IntersectionProfile, a: &Int, b: &Int) -> IntersectionProfile {
    let n = p.n;
    let w = (0..=n)
        .map(|k| {
            let m = n - k;
            (0..=m).fold(Int::zero(), |acc, j| {
                acc + binomial(m, j)
                    * num_traits::pow(a.clone(), m - j)
                    * num_traits::pow(b.clone(), j)
                    * &p.v[n - j]
            })
        })
        .collect();
    IntersectionProfile { n, v: w }
}
