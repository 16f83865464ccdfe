//! Independent oracles shared by the integration tests. Nothing here calls
//! into the code paths it is used to check.
#![allow(dead_code, clippy::needless_range_loop)]

use nefslope_core::{Int, Rat};
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn r(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Determinant by fraction-exact Gaussian elimination.
pub fn det(mut a: Vec<Vec<Rat>>) -> Rat {
    let n = a.len();
    let mut acc = Rat::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&i| !a[i][col].is_zero()) else {
            return Rat::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            acc = -acc;
        }
        let lead = a[col][col].clone();
        acc *= &lead;
        for i in (col + 1)..n {
            let f = &a[i][col] / &lead;
            if f.is_zero() {
                continue;
            }
            for j in col..n {
                let d = &f * &a[col][j];
                a[i][j] -= d;
            }
        }
    }
    acc
}

/// Coefficients (ascending) of `det(xI - F)`, by evaluating at
/// `x = 0..=n` and Lagrange interpolation.
pub fn charpoly_by_interpolation(f: &[Vec<Rat>]) -> Vec<Rat> {
    let n = f.len();
    let xs: Vec<Rat> = (0..=n as i64).map(|x| r(x, 1)).collect();
    let ys: Vec<Rat> = xs
        .iter()
        .map(|x| {
            let m = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            if i == j {
                                x - &f[i][j]
                            } else {
                                -f[i][j].clone()
                            }
                        })
                        .collect()
                })
                .collect();
            det(m)
        })
        .collect();
    let mut out = vec![Rat::zero(); n + 1];
    for (i, xi) in xs.iter().enumerate() {
        // basis = prod_{j != i} (x - x_j) / (x_i - x_j)
        let mut basis = vec![Rat::one()];
        let mut denom = Rat::one();
        for (j, xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![Rat::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * xj;
            }
            basis = next;
            denom *= xi - xj;
        }
        for (k, c) in basis.iter().enumerate() {
            out[k] += c * &ys[i] / &denom;
        }
    }
    out
}

pub fn eval(coeffs: &[Rat], x: &Rat) -> Rat {
    coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
}

/// Durand-Kerner iteration with Newton polishing, all in f64.
pub fn float_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let mut c: Vec<f64> = coeffs.to_vec();
    while c.last() == Some(&0.0) {
        c.pop();
    }
    let d = c.len() - 1;
    if d == 0 {
        return Vec::new();
    }
    let lead = c[d];
    let monic: Vec<f64> = c.iter().map(|x| x / lead).collect();
    let p = |z: Complex64| {
        monic
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
    };
    let dp = |z: Complex64| {
        monic
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, (k, &a)| {
                acc * z + a * k as f64
            })
    };
    let radius = 1.0 + monic[..d].iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..d).map(|k| seed.powu(k as u32) * radius).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..d {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..d {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            let step = p(z[i]) / den;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    for zi in z.iter_mut() {
        for _ in 0..5 {
            let d = dp(*zi);
            if d.norm() == 0.0 {
                break;
            }
            let step = p(*zi) / d;
            if !step.re.is_finite() || !step.im.is_finite() {
                break;
            }
            *zi -= step;
        }
    }
    z
}

pub fn to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap()
}

pub fn int_sqrt_exact(n: &Int) -> Option<Int> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

/// `(a + b sqrt(d)) > x` decided exactly, `d >= 0`.
pub fn surd_gt(a: &Rat, b: &Rat, d: &Int, x: &Rat) -> bool {
    // a + b sqrt d > x  <=>  b sqrt d > x - a
    let rhs = x - a;
    let dd = Rat::from_integer(d.clone());
    if b.is_zero() || d.is_zero() {
        return rhs.is_negative();
    }
    if b.is_positive() {
        rhs.is_negative() || &(b * b) * &dd > &rhs * &rhs
    } else {
        // -|b| sqrt d > rhs  <=>  rhs < 0 and |b|^2 d < rhs^2
        rhs.is_negative() && &(b * b) * &dd < &rhs * &rhs
    }
}
