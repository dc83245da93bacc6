//! Positive roots of B_k, C_k, D_k in the coordinates φ_1..φ_k, and the Weyl denominator.

use std::f64::consts::PI;

use fusym_core::RootOfUnity;
use serde::{Deserialize, Serialize};

use crate::characters::C64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootSystem {
    B(usize),
    C(usize),
    D(usize),
}

impl RootSystem {
    /// B_k for N = 2k+1, D_k for N = 2k, C_k for N = −2k; `None` for odd negative N.
    pub fn for_context(ctx: &RootOfUnity) -> Option<Self> {
        let k = ctx.rank();
        match (ctx.n() > 0, ctx.abs_n() % 2) {
            (true, 1) => Some(RootSystem::B(k)),
            (true, _) => Some(RootSystem::D(k)),
            (false, 0) => Some(RootSystem::C(k)),
            (false, _) => None,
        }
    }

    pub fn rank(self) -> usize {
        match self {
            RootSystem::B(k) | RootSystem::C(k) | RootSystem::D(k) => k,
        }
    }

    pub fn positive_roots(self) -> Vec<Vec<i64>> {
        let k = self.rank();
        let unit = |i: usize, c: i64| {
            let mut v = vec![0; k];
            v[i] = c;
            v
        };
        let mut roots = Vec::new();
        match self {
            RootSystem::B(_) => roots.extend((0..k).map(|i| unit(i, 1))),
            RootSystem::C(_) => roots.extend((0..k).map(|i| unit(i, 2))),
            RootSystem::D(_) => {}
        }
        for i in 0..k {
            for j in i + 1..k {
                let mut minus = unit(i, 1);
                minus[j] = -1;
                let mut plus = unit(i, 1);
                plus[j] = 1;
                roots.push(minus);
                roots.push(plus);
            }
        }
        roots
    }

    /// `ρ` = half the sum of the positive roots.
    pub fn rho(self) -> Vec<f64> {
        let k = self.rank();
        let mut rho = vec![0.0; k];
        for a in self.positive_roots() {
            for (r, c) in rho.iter_mut().zip(a) {
                *r += c as f64 / 2.0;
            }
        }
        rho
    }
}

/// `∏_{α>0} 2 sin(π(α, x))`, the real part of the denominator without its phase.
pub fn denominator_magnitude(system: RootSystem, x: &[f64]) -> f64 {
    system
        .positive_roots()
        .iter()
        .map(|a| 2.0 * (PI * a.iter().zip(x).map(|(&c, t)| c as f64 * t).sum::<f64>()).sin())
        .product()
}

/// `Σ_w ε(w) e^{2πi(wρ, x)} = i^{|Δ+|} ∏_{α>0} 2 sin(π(α, x))`.
pub fn weyl_denominator(system: RootSystem, x: &[f64]) -> C64 {
    let count = system.positive_roots().len();
    let phase = match count % 4 {
        0 => C64::new(1.0, 0.0),
        1 => C64::new(0.0, 1.0),
        2 => C64::new(-1.0, 0.0),
        _ => C64::new(0.0, -1.0),
    };
    phase * denominator_magnitude(system, x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        assert_eq!(RootSystem::B(3).positive_roots().len(), 9);
        assert_eq!(RootSystem::C(2).positive_roots().len(), 4);
        assert_eq!(RootSystem::D(3).positive_roots().len(), 6);
        assert_eq!(RootSystem::D(1).positive_roots().len(), 0);
    }

    #[test]
    fn rho_vectors() {
        assert_eq!(RootSystem::B(2).rho(), vec![1.5, 0.5]);
        assert_eq!(RootSystem::C(2).rho(), vec![2.0, 1.0]);
        assert_eq!(RootSystem::D(3).rho(), vec![2.0, 1.0, 0.0]);
    }

    #[test]
    fn empty_system() {
        assert_eq!(weyl_denominator(RootSystem::D(1), &[0.3]), C64::new(1.0, 0.0));
    }
}
