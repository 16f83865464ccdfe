//! Exact integer and rational helpers shared by the other modules.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

pub fn rat_int(v: &Int) -> Rat {
    Rat::from_integer(v.clone())
}

pub fn binomial(n: usize, k: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

pub fn factorial(n: usize) -> Int {
    (1..=n).fold(Int::one(), |acc, i| acc * Int::from(i))
}

/// `d | n` with the convention that every integer divides zero.
pub fn divides(d: &Int, n: &Int) -> bool {
    if n.is_zero() {
        return true;
    }
    !d.is_zero() && (n % d).is_zero()
}

/// Positive divisors of `|n|`, ascending. `n` must be nonzero.
pub fn positive_divisors(n: &Int) -> Vec<Int> {
    assert!(!n.is_zero(), "divisors of zero are unbounded");
    let mut divs = vec![Int::one()];
    for (p, e) in prime_factorization(n) {
        let len = divs.len();
        let mut pk = Int::one();
        for _ in 0..e {
            pk *= &p;
            for i in 0..len {
                let d = &divs[i] * &pk;
                divs.push(d);
            }
        }
    }
    divs.sort_unstable();
    divs
}

/// Prime factorization of `|n|` as `(prime, exponent)` pairs.
pub fn prime_factorization(n: &Int) -> Vec<(Int, usize)> {
    let n = n.magnitude();
    if let Some(small) = n.to_u64() {
        return num_prime::nt_funcs::factorize64(small)
            .into_iter()
            .map(|(p, e)| (Int::from(p), e))
            .collect();
    }
    if let Some(mid) = n.to_u128() {
        return num_prime::nt_funcs::factorize128(mid)
            .into_iter()
            .map(|(p, e)| (Int::from(p), e))
            .collect();
    }
    num_prime::nt_funcs::factorize(n.clone())
        .into_iter()
        .map(|(p, e)| (Int::from(p), e))
        .collect()
}

pub fn is_perfect_square(n: &Int) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// Parses `"p/q"`, `"p"`, or a plain decimal such as `"-0.001"` exactly.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    let bad = || Error::Parse(s.to_string());
    if let Some((num, den)) = t.split_once('/') {
        let num: Int = num.trim().parse().map_err(|_| bad())?;
        let den: Int = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(Rat::new(num, den));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole_digits = whole.trim_start_matches(['-', '+']);
        let digits = format!(
            "{}{}",
            if whole_digits.is_empty() {
                "0"
            } else {
                whole_digits
            },
            frac
        );
        let mut num: Int = digits.parse().map_err(|_| bad())?;
        if negative {
            num = -num;
        }
        let den = num_traits::pow(Int::from(10u32), frac.len());
        return Ok(Rat::new(num, den));
    }
    let v: Int = t.parse().map_err(|_| bad())?;
    Ok(Rat::from_integer(v))
}

pub fn parse_int(s: &str) -> Result<Int> {
    s.trim().parse().map_err(|_| Error::Parse(s.to_string()))
}

/// `"p/q"` in lowest terms, or `"p"` for integers.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Fall back to scaling for values whose parts overflow f64.
        let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000);
        let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

pub fn lcm_all<'a>(values: impl IntoIterator<Item = &'a Int>) -> Int {
    values.into_iter().fold(Int::one(), |acc, v| acc.lcm(v))
}

pub fn two() -> Rat {
    Rat::from_integer(Int::from(2))
}
