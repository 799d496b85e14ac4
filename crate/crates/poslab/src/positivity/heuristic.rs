//! Floating-point candidate generation.
//!
//! Nothing in this module is trusted: the Jacobi sweep below runs on `f64`
//! midpoints and merely proposes a direction that might have negative
//! energy. Callers must certify the proposal with exact or enclosure
//! arithmetic before it becomes a witness; a bad proposal costs time, not
//! soundness.

use rug::{Integer, Rational};

use crate::numerics::matrix::IntervalMatrix;

/// Proposes a rational direction approximating the least eigenvector of the
/// enclosure midpoints. Returns integer-valued vectors with small entries so
/// the certification step stays cheap.
pub fn min_eigenvector_candidate(m: &IntervalMatrix) -> Option<Vec<Rational>> {
    let n = m.n();
    if n == 0 {
        return None;
    }
    let mut a = vec![vec![0.0f64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let v = m.entry(i, j).mid_f64();
            if !v.is_finite() {
                return None;
            }
            a[i][j] = v;
        }
    }
    let (values, vectors) = jacobi(&mut a);
    let (k, _) = values
        .iter()
        .enumerate()
        .min_by(|(_, x), (_, y)| x.partial_cmp(y).unwrap())?;
    let col: Vec<f64> = (0..n).map(|i| vectors[i][k]).collect();
    let scale = col.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
    if scale == 0.0 || !scale.is_finite() {
        return None;
    }
    let approx: Vec<Rational> = col
        .iter()
        .map(|x| rationalize(x / scale, 10_000))
        .collect();
    // clear denominators and strip the common factor
    let mut lcm = Integer::from(1);
    for q in &approx {
        lcm = lcm.lcm(q.denom());
    }
    let mut ints: Vec<Integer> = approx
        .iter()
        .map(|q| Rational::from(q * &lcm).numer().clone())
        .collect();
    let mut gcd = Integer::new();
    for v in &ints {
        gcd = gcd.gcd(v);
    }
    if gcd.cmp0() != std::cmp::Ordering::Equal && gcd != 1 {
        for v in &mut ints {
            *v /= &gcd;
        }
    }
    if ints.iter().all(|v| v.cmp0() == std::cmp::Ordering::Equal) {
        return None;
    }
    Some(ints.into_iter().map(Rational::from).collect())
}

/// Cyclic Jacobi eigendecomposition of a symmetric matrix. Returns the
/// diagonal (eigenvalue approximations) and the accumulated rotations
/// (eigenvectors as columns).
fn jacobi(a: &mut [Vec<f64>]) -> (Vec<f64>, Vec<Vec<f64>>) {
    let n = a.len();
    let mut v = vec![vec![0.0f64; n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    for _sweep in 0..50 {
        let mut off = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                off += a[p][q] * a[p][q];
            }
        }
        if off < 1e-24 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for i in 0..n {
                    let aip = a[i][p];
                    let aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for j in 0..n {
                    let apj = a[p][j];
                    let aqj = a[q][j];
                    a[p][j] = c * apj - s * aqj;
                    a[q][j] = s * apj + c * aqj;
                }
                for i in 0..n {
                    let vip = v[i][p];
                    let viq = v[i][q];
                    v[i][p] = c * vip - s * viq;
                    v[i][q] = s * vip + c * viq;
                }
            }
        }
    }
    ((0..n).map(|i| a[i][i]).collect(), v)
}

/// Best rational approximation with bounded denominator, by continued
/// fractions.
pub fn rationalize(x: f64, max_den: u64) -> Rational {
    if !x.is_finite() {
        return Rational::new();
    }
    let negative = x < 0.0;
    let mut x = x.abs();
    let (mut h0, mut h1) = (Integer::from(1), Integer::from(x.floor() as i64));
    let (mut k0, mut k1) = (Integer::from(0), Integer::from(1));
    x -= x.floor();
    for _ in 0..40 {
        if x < 1e-12 {
            break;
        }
        x = 1.0 / x;
        let a = x.floor();
        if a >= 1e18 {
            break;
        }
        let ai = Integer::from(a as i64);
        let h2 = Integer::from(&ai * &h1) + &h0;
        let k2 = Integer::from(&ai * &k1) + &k0;
        if k2 > max_den {
            break;
        }
        h0 = std::mem::replace(&mut h1, h2);
        k0 = std::mem::replace(&mut k1, k2);
        x -= a;
    }
    let q = Rational::from((h1, k1));
    if negative {
        -q
    } else {
        q
    }
}
