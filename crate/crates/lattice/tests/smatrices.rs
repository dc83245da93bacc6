use fusym_core::RootOfUnity;
use fusym_lattice::characters::{alternant_ratio, rho_check_point};
use fusym_lattice::smatrix::{s_matrix_entry, to_f64};
use fusym_lattice::{
    coset_representatives, s_matrix, verify_square_sums, weyl_denominator, Family, Lattice, LatticePair, RootSystem,
    Setup, Sign, Standard, WeylGroupBk,
};
use num_rational::Rational64;

#[test]
fn coset_counts() {
    for k in 1..=3 {
        for ell in [3u64, 4, 5] {
            let inv = Rational64::new(1, ell as i64);
            let zz = LatticePair::new(
                Lattice::new(k, Standard::Z, 1.into()).unwrap(),
                Lattice::new(k, Standard::Z, inv).unwrap(),
            )
            .unwrap();
            assert_eq!(coset_representatives(&zz).unwrap().len(), (ell as usize).pow(k as u32));
            let qz = Setup::SoOdd.pair(k, ell).unwrap();
            assert_eq!(qz.index(), 2 * (ell as usize).pow(k as u32));
            assert_eq!(coset_representatives(&qz).unwrap().len(), qz.index());
        }
    }
}

#[test]
fn centered_domain_breaks_ties_downward() {
    let pair = Setup::SoOddIntegral.pair(2, 4).unwrap();
    for r in coset_representatives(&pair).unwrap() {
        for c in r {
            let c = to_f64(c);
            assert!((-0.5..0.5).contains(&c), "{c}");
        }
    }
}

#[test]
fn rank_one_level_four_is_three_by_three() {
    let s = s_matrix(&Setup::SoOdd.pair(1, 4).unwrap(), Sign::Epsilon, 1e-10).unwrap();
    assert_eq!(s.dim(), 3);
    assert!(s.unitarity_defect < 1e-10);
    // With M = ℤ only one free orbit survives.
    let s = s_matrix(&Setup::SoOddIntegral.pair(1, 4).unwrap(), Sign::Epsilon, 1e-10).unwrap();
    assert_eq!(s.dim(), 1);
}

#[test]
fn all_setups_are_unitary() {
    for setup in [Setup::SoOdd, Setup::SoOddIntegral, Setup::Sp, Setup::SpRoot, Setup::OEven] {
        for k in 1..=2 {
            for ell in 3..=10u64 {
                let s = s_matrix(&setup.pair(k, ell).unwrap(), setup.sign(), 1e-9)
                    .unwrap_or_else(|e| panic!("{setup:?} k={k} ℓ={ell}: {e}"));
                assert!(s.unitarity_defect < 1e-9);
            }
        }
        for ell in [4u64, 7] {
            assert!(s_matrix(&setup.pair(3, ell).unwrap(), setup.sign(), 1e-9).is_ok(), "{setup:?} k=3");
        }
    }
}

#[test]
fn twisted_sign_rows_on_the_wall_have_stabiliser_two() {
    let s = s_matrix(&Setup::OEven.pair(2, 8).unwrap(), Sign::EpsilonTilde, 1e-10).unwrap();
    let mut walls = 0;
    for row in &s.rows {
        let last = row.point[1];
        if last.abs() < 1e-12 {
            assert_eq!(row.stabilizer, 2, "{row:?}");
            walls += 1;
        } else {
            assert_eq!(row.stabilizer, 1, "{row:?}");
        }
    }
    assert!(walls > 0);
}

#[test]
fn rows_transform_by_the_sign() {
    let pair = Setup::SoOdd.pair(2, 7).unwrap();
    let s = s_matrix(&pair, Sign::Epsilon, 1e-10).unwrap();
    let g = WeylGroupBk::new(2);
    for row in &s.rows {
        for col in &s.columns {
            let base = s_matrix_entry(&g, Sign::Epsilon, row, col, pair.index());
            for w in g.elements() {
                let mut moved = row.clone();
                moved.point = w.apply(&row.point);
                let v = s_matrix_entry(&g, Sign::Epsilon, &moved, col, pair.index());
                assert!((v - base * f64::from(w.epsilon())).norm() < 1e-10);
            }
        }
    }
}

#[test]
fn character_square_sums_from_unitarity() {
    // Σ_λ χ_λ(x)² = |L:M| / |Δ(x)|² over the alcove weights, for every free column x.
    for (setup, family, system) in [
        (Setup::SoOdd, Family::SoOdd, RootSystem::B as fn(usize) -> RootSystem),
        (Setup::Sp, Family::Sp, RootSystem::C as fn(usize) -> RootSystem),
    ] {
        for k in 1..=2 {
            for ell in 4..=10u64 {
                let pair = setup.pair(k, ell).unwrap();
                let s = s_matrix(&pair, Sign::Epsilon, 1e-9).unwrap();
                let rho = family.rho(k);
                for x in &s.columns {
                    let delta = weyl_denominator(system(k), &x.point).norm_sqr();
                    let sum: f64 = s
                        .rows
                        .iter()
                        .map(|g| {
                            let hw: Vec<f64> = g.point.iter().zip(&rho).map(|(a, r)| a - r).collect();
                            alternant_ratio(family, &hw, &x.point).unwrap().powi(2)
                        })
                        .sum();
                    let expect = pair.index() as f64 / delta;
                    assert!((sum - expect).abs() < 1e-8 * expect, "{setup:?} k={k} ℓ={ell}: {sum} vs {expect}");
                }
            }
        }
    }
}

#[test]
fn rho_check_is_a_free_column() {
    let ctx = RootOfUnity::new(5, 9).unwrap();
    let x = rho_check_point(&ctx);
    let s = s_matrix(&Setup::SoOdd.pair(2, 9).unwrap(), Sign::Epsilon, 1e-10).unwrap();
    assert!(s.columns.iter().any(|c| c.point.iter().zip(&x).all(|(a, b)| (a - b).abs() < 1e-12)));
}

#[test]
fn square_sum_identities() {
    for (n, ell) in [(2, 8), (2, 10), (3, 7), (3, 9), (4, 8), (-4, 8), (5, 9), (5, 11), (6, 12), (-6, 10)] {
        let r = verify_square_sums(&RootOfUnity::new(n, ell).unwrap(), 1e-9).unwrap();
        assert!(r.passed, "{r:?}");
    }
    let r = verify_square_sums(&RootOfUnity::new(2, 8).unwrap(), 1e-9).unwrap();
    assert!((r.even_sum - 4.0).abs() < 1e-12);
    assert!(verify_square_sums(&RootOfUnity::new(5, 12).unwrap(), 1e-9).is_err());
}
