//! Fusion multiplicities as signed sums of classical ones over an affine reflection group.
//!
//! Vectors are stored doubled (`V = 2v`) so that half-integral ρ stays integral.

use std::collections::BTreeMap;

use fusym_core::labels::associated_diagram;
use fusym_core::{Error, Partition, Result, RootOfUnity};
use fusym_lattice::{Sign, SignedPermutation};

const STEP_CAP: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Translations {
    /// `ℓℤ^k`; the affine wall is `v_1 = ℓ/2`.
    Integral,
    /// `ℓQ`; the affine wall is `v_1 + v_2 = ℓ` (`v_1 = ℓ` for k = 1).
    Root,
}

/// `W(B_k) ⋉ (translations)` with its dot action `w.x = w(x + ρ) − ρ`.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineGroupSpec {
    pub rank: usize,
    pub ell: u64,
    pub translations: Translations,
    pub sign: Sign,
    /// `2ρ`.
    pub rho2: Vec<i64>,
    /// Whether points with `v_k = 0` lie on a wall.
    pub last_wall: bool,
}

/// Result of moving a doubled vector into the closed fundamental alcove.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub v2: Vec<i64>,
    pub swaps: usize,
    pub flips: usize,
    pub affine: usize,
}

impl AffineGroupSpec {
    /// The group for a context, with ε̃ the natural sign for N = 2k > 0.
    pub fn for_context(ctx: &RootOfUnity, sign: Sign) -> Result<Self> {
        let k = ctx.rank();
        let (translations, rho2, last_wall): (_, Vec<i64>, _) = match (ctx.n() > 0, ctx.abs_n() % 2) {
            (true, 1) => (Translations::Integral, (1..=k).map(|i| (2 * (k - i) + 1) as i64).collect(), true),
            (true, _) => (Translations::Integral, (1..=k).map(|i| 2 * (k - i) as i64).collect(), false),
            (false, 0) => (Translations::Root, (1..=k).map(|i| 2 * (k + 1 - i) as i64).collect(), true),
            _ => return Err(Error::Domain(format!("no affine group for N = {}", ctx.n()))),
        };
        Ok(Self { rank: k, ell: ctx.ell(), translations, sign, rho2, last_wall })
    }

    /// `(w, t).x = w(x + ρ) + t − ρ` on ordinary coordinates.
    pub fn dot(&self, w: &SignedPermutation, t: &[i64], x: &[f64]) -> Vec<f64> {
        let shifted: Vec<f64> = x.iter().zip(&self.rho2).map(|(a, r)| a + *r as f64 / 2.0).collect();
        w.apply(&shifted).iter().zip(t).zip(&self.rho2).map(|((a, b), r)| a + *b as f64 - *r as f64 / 2.0).collect()
    }

    /// Sorts into `v_1 ≥ … ≥ v_k ≥ 0` and reflects in the affine wall until inside the closed alcove.
    pub fn reduce(&self, v2: &[i64]) -> Result<Reduction> {
        let k = v2.len();
        let ell2 = 2 * self.ell as i64;
        let mut v = v2.to_vec();
        let (mut swaps, mut flips, mut affine) = (0, 0, 0);
        for _ in 0..STEP_CAP {
            for c in v.iter_mut() {
                if *c < 0 {
                    *c = -*c;
                    flips += 1;
                }
            }
            for i in 0..k {
                for j in 0..k - 1 - i {
                    if v[j] < v[j + 1] {
                        v.swap(j, j + 1);
                        swaps += 1;
                    }
                }
            }
            let moved = match self.translations {
                Translations::Integral if v[0] > ell2 / 2 => {
                    v[0] = ell2 - v[0];
                    true
                }
                Translations::Root if k == 1 && v[0] > ell2 => {
                    v[0] = 2 * ell2 - v[0];
                    true
                }
                Translations::Root if k >= 2 && v[0] + v[1] > ell2 => {
                    let (a, b) = (v[0], v[1]);
                    v[0] = ell2 - b;
                    v[1] = ell2 - a;
                    true
                }
                _ => false,
            };
            if !moved {
                return Ok(Reduction { v2: v, swaps, flips, affine });
            }
            affine += 1;
        }
        Err(Error::Internal(format!("alcove reduction of {v2:?} exceeded {STEP_CAP} steps")))
    }

    /// True if a reduced vector lies on a wall (nontrivial stabiliser, zero contribution).
    pub fn on_wall(&self, v2: &[i64]) -> bool {
        let k = v2.len();
        let ell2 = 2 * self.ell as i64;
        if v2.windows(2).any(|w| w[0] == w[1]) || (self.last_wall && v2[k - 1] == 0) {
            return true;
        }
        match self.translations {
            Translations::Integral => v2[0] == ell2 / 2,
            Translations::Root if k == 1 => v2[0] == ell2,
            Translations::Root => v2[0] + v2[1] == ell2,
        }
    }

    fn shifted(&self, label: &Partition) -> Vec<i64> {
        label.padded(self.rank).iter().zip(&self.rho2).map(|(&r, p)| 2 * r as i64 + p).collect()
    }

    fn unshifted(&self, v2: &[i64]) -> Result<Partition> {
        let rows = v2
            .iter()
            .zip(&self.rho2)
            .map(|(v, r)| {
                let d = v - r;
                if d < 0 || d % 2 != 0 {
                    Err(Error::Internal(format!("reduced vector {v2:?} is not ρ-shifted dominant")))
                } else {
                    Ok((d / 2) as usize)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(rows)
    }
}

fn parity(n: usize) -> i64 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Image of one classical label `g` in the fusion labels, with its signed coefficient(s).
pub fn fold_label(ctx: &RootOfUnity, spec: &AffineGroupSpec, g: &Partition) -> Result<Vec<(Partition, i64)>> {
    let n = ctx.abs_n();
    let k = spec.rank;
    if ctx.n() < 0 {
        let r = spec.reduce(&spec.shifted(&g.conjugate()))?;
        if spec.on_wall(&r.v2) {
            return Ok(vec![]);
        }
        let nu = spec.unshifted(&r.v2)?.conjugate();
        return Ok(vec![(nu, parity(r.swaps + r.flips + r.affine))]);
    }
    let twisted = g.num_rows() > k;
    let small = if twisted { associated_diagram(g, n)? } else { g.clone() };
    let r = spec.reduce(&spec.shifted(&small))?;
    if spec.on_wall(&r.v2) {
        return Ok(vec![]);
    }
    let nu = spec.unshifted(&r.v2)?;
    if n % 2 == 1 || spec.sign == Sign::Epsilon {
        // O(N) labels with the same SO(N) restriction differ in box parity; keep the one matching g.
        let s = parity(r.swaps + r.flips + r.affine);
        let nu = if (nu.size() + g.size()) % 2 == 1 { associated_diagram(&nu, n)? } else { nu };
        return Ok(vec![(nu, s)]);
    }
    // N = 2k with ε̃: track the SO(2k) value (sign from swaps and affine steps) and the value on
    // det −1 elements (all steps, and −1 for associated labels) separately.
    let s_so = parity(r.swaps + r.affine);
    let source_full = small.num_rows() == k;
    let target_full = nu.num_rows() == k;
    if source_full {
        if target_full {
            return Ok(vec![(nu, s_so)]);
        }
        let dagger = associated_diagram(&nu, n)?;
        return Ok(vec![(nu, s_so), (dagger, s_so)]);
    }
    let s_det = parity(r.swaps + r.affine + r.flips) * if twisted { -1 } else { 1 };
    if s_det == s_so {
        Ok(vec![(nu, s_so)])
    } else {
        Ok(vec![(associated_diagram(&nu, n)?, s_so)])
    }
}

/// `Σ_w sign(w) b^λ_{w.μ}(N)` for every μ, given the classical table of λ as a map.
pub fn fold_table(
    ctx: &RootOfUnity,
    sign: Sign,
    classical: &BTreeMap<Partition, u64>,
) -> Result<BTreeMap<Partition, i64>> {
    let spec = AffineGroupSpec::for_context(ctx, sign)?;
    let mut out: BTreeMap<Partition, i64> = BTreeMap::new();
    for (g, &m) in classical {
        for (nu, s) in fold_label(ctx, &spec, g)? {
            *out.entry(nu).or_default() += s * m as i64;
        }
    }
    out.retain(|_, v| *v != 0);
    Ok(out)
}

/// The sign the folding formula uses for a context: ε̃ for N = 2k > 0, otherwise ε.
pub fn natural_sign(ctx: &RootOfUnity) -> Sign {
    if ctx.n() > 0 && ctx.abs_n() % 2 == 0 {
        Sign::EpsilonTilde
    } else {
        Sign::Epsilon
    }
}
