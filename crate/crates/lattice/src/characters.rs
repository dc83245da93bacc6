//! Characters of SO(2k+1), O(2k), Sp(2k) and U(n) as ratios of alternants.
//!
//! Points `x ∈ ℝ^k` stand for the torus element with eigenvalues `e^{±2πi x_j}`.

use std::f64::consts::PI;

use fusym_core::labels::associated_diagram;
use fusym_core::{Error, Partition, Result, RootOfUnity};
use nalgebra::{Complex, DMatrix};
use serde::{Deserialize, Serialize};

pub type C64 = Complex<f64>;

/// Denominators below this are treated as a wall of the alcove.
pub const DEGENERATE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    SoOdd,
    OEven,
    Sp,
}

impl Family {
    /// `ρ_i` for rank k.
    pub fn rho(self, k: usize) -> Vec<f64> {
        (1..=k)
            .map(|i| match self {
                Family::SoOdd => k as f64 + 0.5 - i as f64,
                Family::OEven => (k - i) as f64,
                Family::Sp => (k + 1 - i) as f64,
            })
            .collect()
    }
}

/// Determinant of an element of O(2k), or of O(2k+1) for `Minus` meaning `−g` with `g ∈ SO`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Det {
    Plus,
    Minus,
}

/// `det(sin(2π v_j x_i))`; equals the B_k alternant with sign ε up to `(2i)^k`.
pub fn sin_alternant(v: &[f64], x: &[f64]) -> f64 {
    alternant(v, x, f64::sin)
}

/// `det(cos(2π v_j x_i))`; equals the B_k alternant with sign ε̃ up to `2^k`.
pub fn cos_alternant(v: &[f64], x: &[f64]) -> f64 {
    alternant(v, x, f64::cos)
}

fn alternant(v: &[f64], x: &[f64], f: fn(f64) -> f64) -> f64 {
    let k = v.len();
    assert_eq!(k, x.len(), "weight and point have different rank");
    if k == 0 {
        return 1.0;
    }
    DMatrix::from_fn(k, k, |i, j| f(2.0 * PI * v[j] * x[i])).determinant()
}

fn ratio(num: f64, den: f64) -> Result<f64> {
    if den.abs() < DEGENERATE {
        return Err(Error::Degenerate(den));
    }
    Ok(num / den)
}

/// `a(e^{v})/a(e^{ρ})` for an arbitrary (possibly half-integral) highest weight `v − ρ`.
pub fn alternant_ratio(family: Family, highest: &[f64], x: &[f64]) -> Result<f64> {
    let rho = family.rho(x.len());
    let shifted: Vec<f64> = highest.iter().zip(&rho).map(|(a, b)| a + b).collect();
    match family {
        Family::SoOdd | Family::Sp => ratio(sin_alternant(&shifted, x), sin_alternant(&rho, x)),
        Family::OEven => ratio(cos_alternant(&shifted, x), cos_alternant(&rho, x)),
    }
}

/// Character of `λ` (at most `k = x.len()` rows) for the given family.
///
/// For `OEven` this is the O(2k) character on SO(2k), including the factor 2 when λ has exactly k rows.
pub fn weyl_character(family: Family, lambda: &Partition, x: &[f64]) -> Result<f64> {
    let k = x.len();
    if lambda.num_rows() > k {
        return Err(Error::Domain(format!("{lambda} has more than {k} rows")));
    }
    let highest: Vec<f64> = lambda.padded(k).into_iter().map(|r| r as f64).collect();
    let value = alternant_ratio(family, &highest, x)?;
    Ok(match family {
        Family::OEven if k > 0 && lambda.num_rows() == k => 2.0 * value,
        _ => value,
    })
}

/// Sp(2k) character at the point `x` of rank k.
pub fn sp_character(lambda: &Partition, x: &[f64]) -> Result<f64> {
    weyl_character(Family::Sp, lambda, x)
}

/// O(n) character of `λ` (first two columns summing to at most n).
///
/// `Det::Plus`: the element `exp(x)` of SO(n), `x.len() = ⌊n/2⌋`.
/// `Det::Minus`, n = 2k: the element with eigenvalues `{1, −1, e^{±2πi x_j}}`, `x.len() = k − 1`.
/// `Det::Minus`, n odd: the element `−exp(x)`.
pub fn o_character(n: usize, lambda: &Partition, x: &[f64], det: Det) -> Result<f64> {
    if lambda.col(1) + lambda.col(2) > n {
        return Err(Error::Domain(format!("{lambda} is not an O({n}) label")));
    }
    let k = n / 2;
    let rows = lambda.num_rows();
    let (small, twisted) = if rows > k { (associated_diagram(lambda, n)?, true) } else { (lambda.clone(), false) };
    if n % 2 == 1 {
        expect_rank(x, k)?;
        let value = weyl_character(Family::SoOdd, &small, x)?;
        return Ok(match det {
            Det::Plus => value,
            Det::Minus if lambda.size() % 2 == 0 => value,
            Det::Minus => -value,
        });
    }
    match det {
        Det::Plus => {
            expect_rank(x, k)?;
            weyl_character(Family::OEven, &small, x)
        }
        Det::Minus => {
            expect_rank(x, k.saturating_sub(1))?;
            if rows == k {
                return Ok(0.0);
            }
            let value = sp_character(&small, x)?;
            Ok(if twisted { -value } else { value })
        }
    }
}

fn expect_rank(x: &[f64], k: usize) -> Result<()> {
    if x.len() != k {
        return Err(Error::Domain(format!("point has rank {}, expected {k}", x.len())));
    }
    Ok(())
}

/// Schur polynomial `s_λ(z)` as a ratio of `n × n` alternants; zero if λ has more than n rows.
pub fn schur(lambda: &Partition, z: &[C64]) -> Result<C64> {
    let n = z.len();
    if lambda.num_rows() > n {
        return Ok(C64::new(0.0, 0.0));
    }
    let l = lambda.padded(n);
    let num = DMatrix::from_fn(n, n, |i, j| z[i].powu((l[j] + n - 1 - j) as u32)).determinant();
    let den = DMatrix::from_fn(n, n, |i, j| z[i].powu((n - 1 - j) as u32)).determinant();
    if den.norm() < DEGENERATE {
        return Err(Error::Degenerate(den.norm()));
    }
    Ok(num / den)
}

/// Jacobi–Trudi evaluation `det(h_{λ_i − i + j})`; division free.
pub fn schur_jacobi_trudi(lambda: &Partition, z: &[C64]) -> C64 {
    let r = lambda.num_rows();
    if r == 0 {
        return C64::new(1.0, 0.0);
    }
    let top = lambda.row(1) + r;
    let mut h = vec![C64::new(0.0, 0.0); top + 1];
    h[0] = C64::new(1.0, 0.0);
    for zi in z {
        for m in 1..=top {
            let prev = h[m - 1];
            h[m] += zi * prev;
        }
    }
    DMatrix::from_fn(r, r, |i, j| {
        let m = lambda.row(i + 1) as i64 - (i as i64) + j as i64;
        if m < 0 {
            C64::new(0.0, 0.0)
        } else {
            h[m as usize]
        }
    })
    .determinant()
}

/// `ρ̌ / ℓ` with `ρ̌_i = (|N|+1)/2 − i`, `i = 1..k`.
pub fn rho_check_point(ctx: &RootOfUnity) -> Vec<f64> {
    let n = ctx.abs_n() as f64;
    (1..=ctx.rank()).map(|i| ((n + 1.0) / 2.0 - i as f64) / ctx.ell() as f64).collect()
}

/// Eigenvalues `e^{2πi ρ_i/ℓ}` of the principal element of U(|N|).
pub fn principal_eigenvalues(ctx: &RootOfUnity) -> Vec<C64> {
    let n = ctx.abs_n() as f64;
    (1..=ctx.abs_n())
        .map(|i| C64::from_polar(1.0, 2.0 * PI * ((n + 1.0) / 2.0 - i as f64) / ctx.ell() as f64))
        .collect()
}

fn parity_sign(lambda: &Partition) -> f64 {
    if lambda.size() % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `d_λ` evaluated as a character of O(N) (N > 0) or Sp(|N|) (N < 0, even) at `ρ̌/ℓ`.
pub fn weight_character(ctx: &RootOfUnity, lambda: &Partition) -> Result<f64> {
    let x = rho_check_point(ctx);
    if ctx.n() > 0 {
        return o_character(ctx.abs_n(), lambda, &x, Det::Plus);
    }
    if ctx.abs_n() % 2 == 1 {
        return Err(Error::Domain(format!("no symplectic group for N = {}", ctx.n())));
    }
    Ok(parity_sign(lambda) * sp_character(&lambda.conjugate(), &x)?)
}

/// `d̃_λ` evaluated as a U(|N|) character at the principal element (transposed for N < 0).
pub fn hecke_character(ctx: &RootOfUnity, lambda: &Partition) -> Result<f64> {
    let z = principal_eigenvalues(ctx);
    if ctx.n() > 0 {
        Ok(schur(lambda, &z)?.re)
    } else {
        Ok(parity_sign(lambda) * schur(&lambda.conjugate(), &z)?.re)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fusym_core::partition;

    #[test]
    fn so3_vector_is_q_three() {
        let ell = 7.0;
        let v = weyl_character(Family::SoOdd, &partition![1], &[1.0 / ell]).unwrap();
        assert!((v - (3.0 * PI / ell).sin() / (PI / ell).sin()).abs() < 1e-12);
    }

    #[test]
    fn trivial_is_one() {
        let x = [0.31, 0.17, 0.05];
        for f in [Family::SoOdd, Family::OEven, Family::Sp] {
            assert!((weyl_character(f, &Partition::empty(), &x).unwrap() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn first_schur_is_trace() {
        let z: Vec<C64> = [0.1, 0.4, 0.75].iter().map(|t| C64::from_polar(1.0, 2.0 * PI * t)).collect();
        let s = schur(&partition![1], &z).unwrap();
        let sum: C64 = z.iter().sum();
        assert!((s - sum).norm() < 1e-12);
    }

    #[test]
    fn reflection_in_o2() {
        // [1,1] is the determinant of O(2).
        assert_eq!(o_character(2, &partition![1, 1], &[], Det::Minus).unwrap(), -1.0);
        assert_eq!(o_character(2, &partition![3], &[], Det::Minus).unwrap(), 0.0);
        assert_eq!(o_character(2, &Partition::empty(), &[], Det::Minus).unwrap(), 1.0);
    }

    #[test]
    fn wall_is_degenerate() {
        let err = weyl_character(Family::SoOdd, &partition![1], &[0.0]).unwrap_err();
        assert!(matches!(err, Error::Degenerate(_)));
    }
}
