//! Exact integer polynomial algebra: `n! chi(uL - M)`, Sturm chains,
//! real-root isolation, rational-root enumeration and the Cauchy bound.
//!
//! Real roots are always counted on the square-free part. An
//! [`AlgebraicNumber`] is rational exactly when its `exact` field is set;
//! isolation divides rational roots out before bisecting, so rationality is
//! decided rather than guessed from decimals.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{binomial, positive_divisors, rat_int, rat_to_f64, two, Int, Rat};
use crate::numdata::IntersectionProfile;

/// Dense integer polynomial, ascending coefficients, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<Int>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<Int>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// `den * u - num` for `r = num/den`.
    pub fn linear_root(r: &Rat) -> Self {
        Self::new(vec![-r.numer().clone(), r.denom().clone()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Int> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + rat_int(c))
    }

    /// Sign of `p(x)`, computed on the homogenized integer form
    /// `sum c_k a^k b^(d-k)` for `x = a/b`, `b > 0`.
    pub fn sign_at(&self, x: &Rat) -> i8 {
        let Some(d) = self.degree() else { return 0 };
        let (a, b) = (x.numer(), x.denom());
        let mut acc = self.coeffs[d].clone();
        let mut bpow = Int::one();
        for c in self.coeffs[..d].iter().rev() {
            bpow *= b;
            acc = acc * a + c * &bpow;
        }
        sign_of(&acc)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Int::from(k))
                .collect(),
        )
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> Int {
        self.coeffs.iter().fold(Int::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides by the (positive) content; the sign of every value is kept.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// `u^d p(1/u)`: the roots are the reciprocals of the nonzero roots.
    pub fn reversed(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Int::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &Int) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplicity of the root `0`.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Drops the factor `u^m` where `m` is the multiplicity of the root 0.
    pub fn strip_zero_roots(&self) -> Self {
        Self::new(self.coeffs[self.zero_root_multiplicity()..].to_vec())
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        RatPoly::from_int(self)
            .gcd(&RatPoly::from_int(other))
            .to_primitive()
    }

    /// `self / divisor` over the rationals, returned primitive. The caller
    /// guarantees the division is exact.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = RatPoly::from_int(self).div_rem(&RatPoly::from_int(divisor));
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q.to_primitive()
    }

    /// Product of the distinct irreducible factors, primitive, positive lead.
    pub fn square_free_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return positive_lead(self.primitive_part());
        }
        let g = self.gcd(&self.derivative());
        positive_lead(self.exact_div(&g))
    }

    /// Yun's decomposition `p = c * prod f_i^i`, returned as `(f_i, i)` with
    /// constant factors omitted.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPolynomial, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = RatPoly::from_int(self);
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.div_rem(&a0).0;
        let c = fp.div_rem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree() > Some(0) {
            let a = b.gcd(&d);
            b = b.div_rem(&a).0;
            let c = d.div_rem(&a).0;
            d = c.sub(&b.derivative());
            if a.degree() > Some(0) {
                out.push((a.to_primitive(), i));
            }
            i += 1;
        }
        out
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "u")?,
                _ => write!(f, "u^{k}")?,
            }
        }
        Ok(())
    }
}

fn sign_of(x: &Int) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn positive_lead(p: IntPolynomial) -> IntPolynomial {
    if p.leading().is_some_and(Signed::is_negative) {
        p.neg()
    } else {
        p
    }
}

/// Rational polynomial used internally for Euclidean steps.
#[derive(Debug, Clone)]
struct RatPoly(Vec<Rat>);

impl RatPoly {
    fn from_int(p: &IntPolynomial) -> Self {
        Self(p.coeffs.iter().map(rat_int).collect())
    }

    fn normalized(mut v: Vec<Rat>) -> Self {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        Self(v)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn derivative(&self) -> Self {
        Self::normalized(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rat::from_integer(Int::from(k)))
                .collect(),
        )
    }

    fn sub(&self, other: &Self) -> Self {
        let len = self.0.len().max(other.0.len());
        let zero = Rat::zero();
        Self::normalized(
            (0..len)
                .map(|i| self.0.get(i).unwrap_or(&zero) - other.0.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead = &divisor.0[dd];
        let mut rem = self.0.clone();
        let Some(nd) = self.degree().filter(|&d| d >= dd) else {
            return (Self(Vec::new()), self.clone());
        };
        let mut quot = vec![Rat::zero(); nd - dd + 1];
        for k in (0..=(nd - dd)).rev() {
            let q = &rem[k + dd] / lead;
            if q.is_zero() {
                continue;
            }
            for (j, c) in divisor.0.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (Self::normalized(quot), Self::normalized(rem))
    }

    fn monic(&self) -> Self {
        match self.0.last() {
            Some(lead) => Self(self.0.iter().map(|c| c / lead).collect()),
            None => self.clone(),
        }
    }

    fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Clears denominators with a positive factor, then removes the content.
    /// Positive scaling keeps every sign evaluation intact.
    fn to_primitive(&self) -> IntPolynomial {
        let den = self.0.iter().fold(Int::one(), |acc, c| acc.lcm(c.denom()));
        let ints = self
            .0
            .iter()
            .map(|c| (c * rat_int(&den)).to_integer())
            .collect();
        IntPolynomial::new(ints).primitive_part()
    }
}

/// The coefficients of `n! chi(uL - M)`: `c[k] = (-1)^(n-k) C(n,k) v[k]`.
///
/// Content is kept: the leading coefficient is `L^n` and the constant term is
/// `(-1)^n M^n`.
pub fn chi_polynomial(p: &IntersectionProfile) -> IntPolynomial {
    let n = p.dim();
    IntPolynomial::new(
        p.values()
            .iter()
            .enumerate()
            .map(|(k, v)| {
                let c = binomial(n, k) * v;
                if (n - k).is_odd() {
                    -c
                } else {
                    c
                }
            })
            .collect(),
    )
}

/// Endpoint of a root-counting interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(Rat),
    PosInf,
}

impl From<Rat> for Bound {
    fn from(r: Rat) -> Self {
        Bound::Finite(r)
    }
}

/// Signed remainder sequence of the square-free part and its derivative,
/// each element reduced to its primitive part by a positive factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmChain {
    polys: Vec<IntPolynomial>,
}

impl SturmChain {
    pub fn new(p: &IntPolynomial) -> Self {
        let head = p.square_free_part();
        if head.degree().unwrap_or(0) == 0 {
            return Self { polys: vec![head] };
        }
        let mut polys = vec![head.clone(), head.derivative().primitive_part()];
        loop {
            let len = polys.len();
            let (_, r) =
                RatPoly::from_int(&polys[len - 2]).div_rem(&RatPoly::from_int(&polys[len - 1]));
            if r.is_zero() {
                break;
            }
            polys.push(r.to_primitive().neg());
        }
        Self { polys }
    }

    pub fn polys(&self) -> &[IntPolynomial] {
        &self.polys
    }

    /// The square-free polynomial whose roots the chain counts.
    pub fn head(&self) -> &IntPolynomial {
        &self.polys[0]
    }

    fn variations(&self, x: &Bound) -> usize {
        let signs = self.polys.iter().map(|p| match x {
            Bound::Finite(r) => p.sign_at(r),
            Bound::PosInf => p.leading().map_or(0, sign_of),
            Bound::NegInf => {
                let s = p.leading().map_or(0, sign_of);
                if p.degree().unwrap_or(0).is_odd() {
                    -s
                } else {
                    s
                }
            }
        });
        let mut last = 0i8;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }
}

/// Distinct real roots of the chain's polynomial in `(lo, hi]`.
pub fn sturm_count(chain: &SturmChain, lo: &Bound, hi: &Bound) -> usize {
    chain.count(lo, hi)
}

/// Real roots counted with multiplicity.
pub fn real_root_count_with_multiplicity(p: &IntPolynomial) -> usize {
    p.squarefree_decomposition()
        .iter()
        .map(|(f, m)| m * SturmChain::new(f).count(&Bound::NegInf, &Bound::PosInf))
        .sum()
}

/// `1 + max_{k<d} |c_k / c_d|`; every complex root lies strictly inside.
pub fn cauchy_bound(p: &IntPolynomial) -> Rat {
    let d = p.degree().expect("Cauchy bound of the zero polynomial");
    let lead = rat_int(&p.coeffs[d]).abs();
    let max = p.coeffs[..d]
        .iter()
        .map(|c| rat_int(c).abs() / &lead)
        .max()
        .unwrap_or_else(Rat::zero);
    Rat::one() + max
}

/// All `+-r/s` with `r | c[0]` and `s | c[d]`, after removing the root 0,
/// in descending order.
pub fn rational_candidates(p: &IntPolynomial) -> Vec<Rat> {
    let q = p.strip_zero_roots();
    if q.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let nums = positive_divisors(&q.coeffs[0]);
    let dens = positive_divisors(q.leading().expect("nonzero"));
    let mut cands: Vec<Rat> = nums
        .iter()
        .flat_map(|r| dens.iter().map(move |s| Rat::new(r.clone(), s.clone())))
        .collect();
    cands.sort_unstable();
    cands.dedup();
    let negatives: Vec<Rat> = cands.iter().map(|c| -c).collect();
    cands.reverse();
    cands.extend(negatives);
    cands
}

/// Distinct rational roots in descending order.
pub fn rational_roots(p: &IntPolynomial) -> Vec<Rat> {
    assert!(!p.is_zero(), "rational roots of the zero polynomial");
    let q = p.strip_zero_roots();
    let mut roots: Vec<Rat> = rational_candidates(&q)
        .into_iter()
        .filter(|c| q.sign_at(c) == 0)
        .collect();
    if p.zero_root_multiplicity() > 0 {
        let pos = roots
            .iter()
            .position(|r| r.is_negative())
            .unwrap_or(roots.len());
        roots.insert(pos, Rat::zero());
    }
    roots
}

/// Square-free part of `p` with every rational root divided out.
pub fn irrational_part(p: &IntPolynomial, rational: &[Rat]) -> IntPolynomial {
    rational.iter().fold(p.square_free_part(), |q, r| {
        q.exact_div(&IntPolynomial::linear_root(r))
    })
}

/// Exact real algebraic number: the unique root of `poly` in `(lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraicNumber {
    poly: IntPolynomial,
    lo: Rat,
    hi: Rat,
    exact: Option<Rat>,
}

impl AlgebraicNumber {
    pub fn from_rational(r: Rat) -> Self {
        Self {
            poly: IntPolynomial::linear_root(&r),
            lo: &r - Rat::one(),
            hi: r.clone(),
            exact: Some(r),
        }
    }

    /// Checked constructor: `poly` must have exactly one root in `(lo, hi]`.
    pub fn isolated(poly: IntPolynomial, lo: Rat, hi: Rat) -> Option<Self> {
        if lo >= hi || SturmChain::new(&poly).count(&lo.clone().into(), &hi.clone().into()) != 1 {
            return None;
        }
        let poly = poly.square_free_part();
        let exact = (poly.sign_at(&hi) == 0).then(|| hi.clone());
        Some(Self {
            poly,
            lo,
            hi,
            exact,
        })
    }

    pub fn poly(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn interval(&self) -> (&Rat, &Rat) {
        (&self.lo, &self.hi)
    }

    pub fn exact(&self) -> Option<&Rat> {
        self.exact.as_ref()
    }

    pub fn is_rational(&self) -> bool {
        self.exact.is_some()
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    /// Exact value if rational, otherwise the interval midpoint.
    pub fn to_f64(&self) -> f64 {
        match &self.exact {
            Some(r) => rat_to_f64(r),
            None => rat_to_f64(&((&self.lo + &self.hi) / two())),
        }
    }

    /// Sturm count in the interval is one and the exact value, if any, is a
    /// root inside it.
    pub fn is_valid(&self) -> bool {
        let chain = SturmChain::new(&self.poly);
        let one_root = chain.count(&self.lo.clone().into(), &self.hi.clone().into()) == 1;
        let exact_ok = self
            .exact
            .as_ref()
            .is_none_or(|r| self.poly.sign_at(r) == 0 && &self.lo < r && r <= &self.hi);
        one_root && exact_ok
    }

    fn bisect(&mut self) {
        if self.exact.is_some() {
            return;
        }
        let hi_sign = self.poly.sign_at(&self.hi);
        if hi_sign == 0 {
            self.exact = Some(self.hi.clone());
            return;
        }
        let mid = (&self.lo + &self.hi) / two();
        match self.poly.sign_at(&mid) {
            0 => {
                self.exact = Some(mid.clone());
                self.hi = mid;
            }
            s if s == hi_sign => self.hi = mid,
            _ => self.lo = mid,
        }
    }

    /// Same number with an isolating interval no wider than `width`.
    /// Rational numbers are returned unchanged.
    pub fn refine(&self, width: &Rat) -> Self {
        let mut out = self.clone();
        if out.exact.is_some() || !width.is_positive() {
            return out;
        }
        while out.width() > *width && out.exact.is_none() {
            out.bisect();
        }
        out
    }

    /// Exact comparison with a rational.
    pub fn cmp_rat(&self, r: &Rat) -> Ordering {
        if let Some(x) = &self.exact {
            return x.cmp(r);
        }
        if r <= &self.lo {
            return Ordering::Greater;
        }
        if r >= &self.hi {
            // The root is < hi unless it is hi itself, which would make it rational.
            return if self.poly.sign_at(&self.hi) == 0 && r == &self.hi {
                Ordering::Equal
            } else {
                Ordering::Less
            };
        }
        if self.poly.sign_at(r) == 0 {
            // r is a root strictly inside, hence the unique one.
            return Ordering::Equal;
        }
        let chain = SturmChain::new(&self.poly);
        if chain.count(&self.lo.clone().into(), &r.clone().into()) == 1 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// Same number with `lo >= r`; the number must exceed `r`.
    pub fn above(&self, r: &Rat) -> Self {
        debug_assert_eq!(self.cmp_rat(r), Ordering::Greater);
        let mut out = self.clone();
        while out.exact.is_none() && &out.lo < r {
            out.bisect();
        }
        out
    }

    pub fn signum(&self) -> Ordering {
        self.cmp_rat(&Rat::zero())
    }

    /// `1/x`, defined by the reversed polynomial. `None` for zero.
    pub fn reciprocal(&self) -> Option<Self> {
        if let Some(x) = &self.exact {
            return (!x.is_zero()).then(|| Self::from_rational(x.recip()));
        }
        let mut a = self.clone();
        // Endpoints must avoid 0 and any root of the polynomial.
        while a.exact.is_none()
            && (!(a.lo.is_positive() || a.hi.is_negative())
                || a.poly.sign_at(&a.lo) == 0
                || a.poly.sign_at(&a.hi) == 0)
        {
            a.bisect();
        }
        if let Some(x) = &a.exact {
            return (!x.is_zero()).then(|| Self::from_rational(x.recip()));
        }
        Some(Self {
            poly: positive_lead(a.poly.reversed()),
            lo: a.hi.recip(),
            hi: a.lo.recip(),
            exact: None,
        })
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.exact {
            Some(r) => write!(f, "{r}"),
            None => write!(
                f,
                "root of {} in ({}, {}] ~ {:.12}",
                self.poly,
                self.lo,
                self.hi,
                self.to_f64()
            ),
        }
    }
}

/// Largest real root; `None` if `p` has no real root.
pub fn isolate_max_root(p: &IntPolynomial) -> Option<AlgebraicNumber> {
    if p.degree().unwrap_or(0) == 0 {
        return None;
    }
    let rational = rational_roots(p);
    let best_rational = rational.first().cloned();
    let q = irrational_part(p, &rational);
    if q.degree().unwrap_or(0) >= 1 {
        let bound = cauchy_bound(p);
        let lo = match &best_rational {
            Some(r) if r > &-&bound => r.clone(),
            _ => -bound.clone(),
        };
        if let Some(a) = isolate_top_root(&q, lo, bound) {
            return Some(a);
        }
    }
    best_rational.map(AlgebraicNumber::from_rational)
}

/// Largest root of the square-free `q` in `(lo, hi]`, given that no root
/// exceeds `hi`.
fn isolate_top_root(q: &IntPolynomial, mut lo: Rat, mut hi: Rat) -> Option<AlgebraicNumber> {
    let chain = SturmChain::new(q);
    if chain.count(&lo.clone().into(), &hi.clone().into()) == 0 {
        return None;
    }
    while chain.count(&lo.clone().into(), &hi.clone().into()) > 1 {
        let mid = (&lo + &hi) / two();
        if chain.count(&mid.clone().into(), &hi.clone().into()) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(AlgebraicNumber {
        poly: chain.head().clone(),
        lo,
        hi,
        exact: None,
    })
}

/// Every real root, ascending.
pub fn isolate_real_roots(p: &IntPolynomial) -> Vec<AlgebraicNumber> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let rational = rational_roots(p);
    let mut out: Vec<AlgebraicNumber> = rational
        .iter()
        .cloned()
        .map(AlgebraicNumber::from_rational)
        .collect();
    let q = irrational_part(p, &rational);
    if q.degree().unwrap_or(0) >= 1 {
        let chain = SturmChain::new(&q);
        let bound = cauchy_bound(p);
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((lo, hi)) = stack.pop() {
            match chain.count(&lo.clone().into(), &hi.clone().into()) {
                0 => {}
                1 => out.push(AlgebraicNumber {
                    poly: chain.head().clone(),
                    lo,
                    hi,
                    exact: None,
                }),
                _ => {
                    let mid = (&lo + &hi) / two();
                    stack.push((lo, mid.clone()));
                    stack.push((mid, hi));
                }
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo).then_with(|| a.hi.cmp(&b.hi)));
    // Rational intervals (r-1, r] may overlap irrational ones; order by value.
    out.sort_by(compare_algebraic);
    out
}

fn compare_algebraic(a: &AlgebraicNumber, b: &AlgebraicNumber) -> Ordering {
    match (&a.exact, &b.exact) {
        (Some(x), _) => b.cmp_rat(x).reverse(),
        (None, Some(y)) => a.cmp_rat(y),
        (None, None) => {
            let (mut a, mut b) = (a.clone(), b.clone());
            loop {
                if a.hi <= b.lo {
                    return Ordering::Less;
                }
                if b.hi <= a.lo {
                    return Ordering::Greater;
                }
                if a == b {
                    return Ordering::Equal;
                }
                a.bisect();
                b.bisect();
            }
        }
    }
}
