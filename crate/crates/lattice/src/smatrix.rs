//! Scaled standard lattices, finite quotients `L/M`, and S-matrices antisymmetrised by W(B_k).

use std::collections::{BTreeMap, VecDeque};
use std::f64::consts::PI;

use fusym_core::{Error, Result};
use nalgebra::DMatrix;
use num_rational::Rational64;
use serde::Serialize;

use crate::characters::C64;
use crate::weyl::{Sign, WeylGroupBk};

pub type QVec = Vec<Rational64>;

/// `ℤ^k`, `Q = {x ∈ ℤ^k : Σx even}` or `P = ℤ^k ∪ (ε + ℤ^k)`, ε the all-halves vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Standard {
    Z,
    Q,
    P,
}

impl Standard {
    pub fn dual(self) -> Self {
        match self {
            Standard::Z => Standard::Z,
            Standard::Q => Standard::P,
            Standard::P => Standard::Q,
        }
    }
}

/// `scale · standard` in ℝ^k.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Lattice {
    pub rank: usize,
    pub standard: Standard,
    #[serde(serialize_with = "ser_rational")]
    pub scale: Rational64,
}

fn ser_rational<S: serde::Serializer>(r: &Rational64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn q(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

fn zero() -> Rational64 {
    q(0)
}

pub fn to_f64(r: Rational64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

impl Lattice {
    pub fn new(rank: usize, standard: Standard, scale: Rational64) -> Result<Self> {
        if rank == 0 {
            return Err(Error::Domain("lattice of rank 0".into()));
        }
        if scale == zero() {
            return Err(Error::Domain("zero scale gives an infinite index".into()));
        }
        Ok(Self { rank, standard, scale: if scale < zero() { -scale } else { scale } })
    }

    pub fn dual(&self) -> Self {
        Self { rank: self.rank, standard: self.standard.dual(), scale: self.scale.recip() }
    }

    /// Columns form a ℤ-basis.
    pub fn basis(&self) -> Vec<QVec> {
        let k = self.rank;
        let e = |i: usize| -> QVec { (0..k).map(|j| q((i == j) as i64)).collect() };
        let raw: Vec<QVec> = match self.standard {
            Standard::Z => (0..k).map(e).collect(),
            Standard::Q if k == 1 => vec![vec![q(2)]],
            Standard::Q => {
                let mut b: Vec<QVec> =
                    (0..k - 1).map(|i| e(i).iter().zip(e(i + 1)).map(|(a, c)| a - c).collect()).collect();
                b.push(e(k - 2).iter().zip(e(k - 1)).map(|(a, c)| a + c).collect());
                b
            }
            Standard::P => {
                let mut b: Vec<QVec> = (0..k - 1).map(e).collect();
                b.push(vec![Rational64::new(1, 2); k]);
                b
            }
        };
        raw.into_iter().map(|v| v.into_iter().map(|c| c * self.scale).collect()).collect()
    }

    /// Coordinates of `y` in [`Lattice::basis`]; integral iff `y` lies in the lattice.
    pub fn coordinates(&self, y: &[Rational64]) -> QVec {
        solve(&self.basis(), y)
    }

    pub fn contains(&self, y: &[Rational64]) -> bool {
        self.coordinates(y).iter().all(|c| c.is_integer())
    }

    /// Representative of `y + lattice` whose coordinates lie in `[−½, ½)`.
    pub fn reduce(&self, y: &[Rational64]) -> QVec {
        let half = Rational64::new(1, 2);
        let t: QVec = self.coordinates(y).into_iter().map(|c| c - (c + half).floor()).collect();
        let basis = self.basis();
        (0..self.rank).map(|i| basis.iter().zip(&t).map(|(b, c)| b[i] * c).sum()).collect()
    }

    /// Covolume `|det basis|`.
    pub fn covolume(&self) -> Rational64 {
        let d = det(&self.basis());
        if d < zero() {
            -d
        } else {
            d
        }
    }
}

#[allow(clippy::needless_range_loop)]
fn solve(columns: &[QVec], y: &[Rational64]) -> QVec {
    let k = y.len();
    let mut a: Vec<QVec> = (0..k).map(|i| columns.iter().map(|c| c[i]).chain([y[i]]).collect()).collect();
    for col in 0..k {
        let pivot = (col..k).find(|&r| a[r][col] != zero()).expect("basis is nonsingular");
        a.swap(col, pivot);
        let p = a[col][col];
        for c in col..=k {
            a[col][c] /= p;
        }
        for r in 0..k {
            if r != col && a[r][col] != zero() {
                let f = a[r][col];
                for c in col..=k {
                    let v = a[col][c];
                    a[r][c] -= f * v;
                }
            }
        }
    }
    a.into_iter().map(|row| row[k]).collect()
}

#[allow(clippy::needless_range_loop)]
fn det(columns: &[QVec]) -> Rational64 {
    let k = columns.len();
    let mut a: Vec<QVec> = (0..k).map(|i| columns.iter().map(|c| c[i]).collect()).collect();
    let mut d = q(1);
    for col in 0..k {
        let Some(pivot) = (col..k).find(|&r| a[r][col] != zero()) else {
            return zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            d = -d;
        }
        let p = a[col][col];
        d *= p;
        for r in col + 1..k {
            let f = a[r][col] / p;
            for c in col..k {
                let v = a[col][c];
                a[r][c] -= f * v;
            }
        }
    }
    d
}

/// A pair `M ⊆ L` of W(B_k)-invariant lattices with integral form on M.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LatticePair {
    pub m: Lattice,
    pub l: Lattice,
}

impl LatticePair {
    pub fn new(m: Lattice, l: Lattice) -> Result<Self> {
        if m.rank != l.rank {
            return Err(Error::Config("lattices of different rank".into()));
        }
        if !m.basis().iter().all(|b| l.contains(b)) {
            return Err(Error::Config(format!("{m:?} is not contained in {l:?}")));
        }
        Ok(Self { m, l })
    }

    pub fn rank(&self) -> usize {
        self.m.rank
    }

    /// `|L : M|`.
    pub fn index(&self) -> usize {
        let r = self.m.covolume() / self.l.covolume();
        assert!(r.is_integer(), "index of a sublattice is an integer");
        r.to_integer() as usize
    }

    /// The pair `L* ⊆ M*`, whose quotient is the character group of `L/M`.
    pub fn dual(&self) -> Self {
        Self { m: self.l.dual(), l: self.m.dual() }
    }
}

/// One representative of each coset of `L/M`, taken in the centered fundamental domain of M.
pub fn coset_representatives(pair: &LatticePair) -> Result<Vec<QVec>> {
    let expected = pair.index();
    let origin: QVec = vec![zero(); pair.rank()];
    let gens = pair.l.basis();
    let mut seen = std::collections::BTreeSet::from([origin.clone()]);
    let mut queue = VecDeque::from([origin]);
    while let Some(v) = queue.pop_front() {
        for g in &gens {
            let w: QVec = v.iter().zip(g).map(|(a, b)| a + b).collect();
            let w = pair.m.reduce(&w);
            if seen.insert(w.clone()) {
                if seen.len() > expected {
                    return Err(Error::Internal(format!("more than |L:M| = {expected} cosets")));
                }
                queue.push_back(w);
            }
        }
    }
    if seen.len() != expected {
        return Err(Error::Internal(format!("found {} cosets, expected {expected}", seen.len())));
    }
    Ok(seen.into_iter().collect())
}

/// A W-orbit in a finite quotient, carried by its lexicographically largest reduced element.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrbitLabel {
    pub point: Vec<f64>,
    pub stabilizer: usize,
    pub orbit_size: usize,
}

fn sign_orbits(pair: &LatticePair, group: &WeylGroupBk, sign: Sign) -> Result<Vec<(QVec, OrbitLabel)>> {
    let reps = coset_representatives(pair)?;
    let mut done = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for r in reps {
        if done.contains(&r) {
            continue;
        }
        let mut orbit = BTreeMap::new();
        let mut stab_ok = true;
        let mut stab = 0;
        for w in group.elements() {
            let image = pair.m.reduce(&w.apply_rational(&r));
            if image == r {
                stab += 1;
                stab_ok &= w.sign(sign) == 1;
            }
            orbit.entry(image).or_insert(());
        }
        let top = orbit.keys().next_back().cloned().expect("orbit is nonempty");
        done.extend(orbit.keys().cloned());
        if stab_ok {
            let label = OrbitLabel {
                point: top.iter().copied().map(to_f64).collect(),
                stabilizer: stab,
                orbit_size: orbit.len(),
            };
            out.push((top, label));
        }
    }
    out.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct SMatrix {
    pub pair: LatticePair,
    pub sign: Sign,
    /// Orbits in `M*/L*`.
    pub rows: Vec<OrbitLabel>,
    /// Orbits in `L/M`.
    pub columns: Vec<OrbitLabel>,
    #[serde(skip)]
    pub matrix: DMatrix<C64>,
    /// `max |S*S − I|`.
    pub unitarity_defect: f64,
}

impl SMatrix {
    pub fn entry(&self, row: usize, col: usize) -> C64 {
        self.matrix[(row, col)]
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// `s_{γ,x} = |Stab γ|^{−1/2} |Stab x|^{−1/2} |L:M|^{−1/2} Σ_w sign(w) e^{2πi(wγ, x)}`.
pub fn s_matrix_entry(group: &WeylGroupBk, sign: Sign, gamma: &OrbitLabel, x: &OrbitLabel, index: usize) -> C64 {
    let (re, im) = group.alternating_sum(&gamma.point, &x.point, sign);
    C64::new(re, im) / ((gamma.stabilizer * x.stabilizer * index) as f64).sqrt()
}

/// Builds the S-matrix and checks unitarity to `tol`.
pub fn s_matrix(pair: &LatticePair, sign: Sign, tol: f64) -> Result<SMatrix> {
    let group = WeylGroupBk::new(pair.rank());
    let rows: Vec<OrbitLabel> = sign_orbits(&pair.dual(), &group, sign)?.into_iter().map(|p| p.1).collect();
    let columns: Vec<OrbitLabel> = sign_orbits(pair, &group, sign)?.into_iter().map(|p| p.1).collect();
    if rows.len() != columns.len() {
        return Err(Error::Internal(format!("{} row orbits but {} column orbits", rows.len(), columns.len())));
    }
    let index = pair.index();
    let matrix = DMatrix::from_fn(rows.len(), columns.len(), |i, j| {
        s_matrix_entry(&group, sign, &rows[i], &columns[j], index)
    });
    let product = matrix.adjoint() * &matrix;
    let unitarity_defect = (0..rows.len())
        .flat_map(|i| (0..rows.len()).map(move |j| (i, j)))
        .map(|(i, j)| (product[(i, j)] - if i == j { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) }).norm())
        .fold(0.0, f64::max);
    if unitarity_defect > tol {
        return Err(Error::Internal(format!("S-matrix is not unitary: defect {unitarity_defect:e}")));
    }
    Ok(SMatrix { pair: *pair, sign, rows, columns, matrix, unitarity_defect })
}

/// The character `e^{2πi(γ, x)}` used for the unsymmetrised S̃.
pub fn plane_wave(gamma: &[f64], x: &[f64]) -> C64 {
    C64::from_polar(1.0, 2.0 * PI * gamma.iter().zip(x).map(|(a, b)| a * b).sum::<f64>())
}

/// The lattice pairs behind the square-sum identities, at rank k and level ℓ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Setup {
    /// `M = Q ⊂ L = ℓ⁻¹ℤ^k`, rows run over the weight lattice P of so(2k+1).
    SoOdd,
    /// `M = ℤ^k ⊂ L = ℓ⁻¹ℤ^k`, rows restricted to integral weights.
    SoOddIntegral,
    /// `M = ℤ^k ⊂ L = ℓ⁻¹P`, rows run over ℤ^k, the weight lattice of sp(2k).
    Sp,
    /// `M = P ⊂ L = ℓ⁻¹P`, rows run over Q.
    SpRoot,
    /// Same lattices as `Sp`, antisymmetrised with ε̃.
    OEven,
}

impl Setup {
    pub fn pair(self, k: usize, ell: u64) -> Result<LatticePair> {
        let inv = Rational64::new(1, ell as i64);
        let (m, l) = match self {
            Setup::SoOdd => (Standard::Q, Standard::Z),
            Setup::SoOddIntegral => (Standard::Z, Standard::Z),
            Setup::Sp | Setup::OEven => (Standard::Z, Standard::P),
            Setup::SpRoot => (Standard::P, Standard::P),
        };
        LatticePair::new(Lattice::new(k, m, q(1))?, Lattice::new(k, l, inv)?)
    }

    pub fn sign(self) -> Sign {
        match self {
            Setup::OEven => Sign::EpsilonTilde,
            _ => Sign::Epsilon,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lat(k: usize, s: Standard, num: i64, den: i64) -> Lattice {
        Lattice::new(k, s, Rational64::new(num, den)).unwrap()
    }

    #[test]
    fn rank_one_quotient() {
        let pair = LatticePair::new(lat(1, Standard::Z, 2, 1), lat(1, Standard::Z, 1, 1)).unwrap();
        let reps = coset_representatives(&pair).unwrap();
        assert_eq!(reps, vec![vec![q(-1)], vec![q(0)]]);
    }

    #[test]
    fn duals() {
        for s in [Standard::Z, Standard::Q, Standard::P] {
            let l = lat(3, s, 2, 5);
            assert_eq!(l.dual().dual(), l);
            for a in l.basis() {
                for b in l.dual().basis() {
                    let ip: Rational64 = a.iter().zip(&b).map(|(x, y)| x * y).sum();
                    assert!(ip.is_integer());
                }
            }
            assert_eq!(l.covolume() * l.dual().covolume(), q(1));
        }
    }

    #[test]
    fn containment_is_checked() {
        assert!(LatticePair::new(lat(2, Standard::P, 1, 1), lat(2, Standard::Z, 1, 1)).is_err());
        assert!(Lattice::new(2, Standard::Z, q(0)).is_err());
    }
}
