//! The hyperoctahedral group W(B_k) as signed permutations.

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

/// Which sign character to use in alternating sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sign {
    /// The usual sign of W(B_k): permutation sign times the product of coordinate signs.
    Epsilon,
    /// Agrees with `Epsilon` on W(D_k) and is its negative elsewhere; equals the permutation sign.
    EpsilonTilde,
}

/// `w(x)_i = signs[i] · x[perm[i]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn identity(k: usize) -> Self {
        Self { perm: (0..k).collect(), signs: vec![1; k] }
    }

    /// Panics unless `perm` is a permutation of `0..k` and every sign is ±1.
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Self {
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            assert!(p < perm.len() && !seen[p], "not a permutation: {perm:?}");
            seen[p] = true;
        }
        assert!(signs.len() == perm.len() && signs.iter().all(|s| s.abs() == 1));
        Self { perm, signs }
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Self) -> Self {
        let k = self.rank();
        let perm = (0..k).map(|i| other.perm[self.perm[i]]).collect();
        let signs = (0..k).map(|i| self.signs[i] * other.signs[self.perm[i]]).collect();
        Self { perm, signs }
    }

    pub fn inverse(&self) -> Self {
        let k = self.rank();
        let mut perm = vec![0; k];
        let mut signs = vec![1; k];
        for i in 0..k {
            perm[self.perm[i]] = i;
            signs[self.perm[i]] = self.signs[i];
        }
        Self { perm, signs }
    }

    pub fn permutation_sign(&self) -> i32 {
        let mut visited = vec![false; self.rank()];
        let mut sign = 1;
        for start in 0..self.rank() {
            let mut len = 0;
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                i = self.perm[i];
                len += 1;
            }
            if len % 2 == 0 && len > 0 {
                sign = -sign;
            }
        }
        sign
    }

    pub fn flips(&self) -> usize {
        self.signs.iter().filter(|&&s| s < 0).count()
    }

    /// True on the index-two subgroup W(D_k) of even sign changes.
    pub fn in_type_d(&self) -> bool {
        self.flips() % 2 == 0
    }

    pub fn epsilon(&self) -> i32 {
        if self.flips() % 2 == 0 {
            self.permutation_sign()
        } else {
            -self.permutation_sign()
        }
    }

    pub fn epsilon_tilde(&self) -> i32 {
        self.permutation_sign()
    }

    pub fn sign(&self, which: Sign) -> i32 {
        match which {
            Sign::Epsilon => self.epsilon(),
            Sign::EpsilonTilde => self.epsilon_tilde(),
        }
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        (0..self.rank()).map(|i| f64::from(self.signs[i]) * x[self.perm[i]]).collect()
    }

    pub fn apply_rational(&self, x: &[Rational64]) -> Vec<Rational64> {
        (0..self.rank()).map(|i| x[self.perm[i]] * i64::from(self.signs[i])).collect()
    }
}

/// All `2^k k!` elements of W(B_k), in a fixed order.
#[derive(Debug, Clone)]
pub struct WeylGroupBk {
    rank: usize,
    elements: Vec<SignedPermutation>,
}

impl WeylGroupBk {
    pub fn new(rank: usize) -> Self {
        let mut perms = Vec::new();
        permutations(&mut (0..rank).collect(), 0, &mut perms);
        perms.sort();
        let mut elements = Vec::with_capacity(perms.len() << rank);
        for perm in perms {
            for mask in 0..(1usize << rank) {
                let signs = (0..rank).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
                elements.push(SignedPermutation { perm: perm.clone(), signs });
            }
        }
        Self { rank, elements }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[SignedPermutation] {
        &self.elements
    }

    /// `Σ_w sign(w) e^{2πi(w v, x)}`.
    pub fn alternating_sum(&self, v: &[f64], x: &[f64], which: Sign) -> (f64, f64) {
        let (mut re, mut im) = (0.0, 0.0);
        for w in &self.elements {
            let wv = w.apply(v);
            let phase = 2.0 * std::f64::consts::PI * wv.iter().zip(x).map(|(a, b)| a * b).sum::<f64>();
            let s = f64::from(w.sign(which));
            re += s * phase.cos();
            im += s * phase.sin();
        }
        (re, im)
    }
}

fn permutations(items: &mut Vec<usize>, start: usize, out: &mut Vec<Vec<usize>>) {
    if start == items.len() {
        out.push(items.clone());
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permutations(items, start + 1, out);
        items.swap(start, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(WeylGroupBk::new(0).order(), 1);
        assert_eq!(WeylGroupBk::new(1).order(), 2);
        assert_eq!(WeylGroupBk::new(3).order(), 48);
    }

    #[test]
    fn single_flip_signs() {
        let w = SignedPermutation::new(vec![0, 1], vec![1, -1]);
        assert_eq!(w.epsilon(), -1);
        assert_eq!(w.epsilon_tilde(), 1);
        let w = SignedPermutation::new(vec![1, 0], vec![1, 1]);
        assert_eq!((w.epsilon(), w.epsilon_tilde()), (-1, -1));
    }

    #[test]
    fn compose_matches_application() {
        let a = SignedPermutation::new(vec![2, 0, 1], vec![1, -1, 1]);
        let b = SignedPermutation::new(vec![1, 2, 0], vec![-1, 1, 1]);
        let x = [0.3, -1.7, 2.5];
        assert_eq!(a.compose(&b).apply(&x), a.apply(&b.apply(&x)));
        assert_eq!(a.compose(&a.inverse()), SignedPermutation::identity(3));
    }
}
