use std::f64::consts::PI;

use fusym_core::labels::{
    all_brauer_labels, associated_diagram, brauer_labels, hecke_labels, periodicity_inverse, periodicity_map, Kind,
};
use fusym_core::qarith::{brauer_product, brauer_weight, hecke_product, hecke_weight, positivity_report, WeightTable};
use fusym_core::{partition, qint, Partition, RootOfUnity};
use proptest::prelude::*;

fn ctx(n: i64, ell: u64) -> RootOfUnity {
    RootOfUnity::new(n, ell).unwrap()
}

#[test]
fn n_two_label_count() {
    for ell in [4u64, 6, 8, 10, 12] {
        assert_eq!(all_brauer_labels(&ctx(2, ell)).len() as u64, ell / 2 + 1);
    }
}

#[test]
fn sl2_product_rule() {
    for m in 1..=10i64 {
        for n in m..=10 {
            let lhs = qint(m, 50) * qint(n, 50);
            let rhs: f64 = ((n - m + 1)..=(n + m - 1)).step_by(2).map(|k| qint(k, 50)).sum();
            assert!((lhs - rhs).abs() < 1e-10, "[{m}][{n}]");
        }
    }
}

#[test]
fn empty_diagram_has_weight_one() {
    for (n, ell) in [(2, 8), (3, 7), (3, 9), (4, 8), (-4, 8), (-3, 9)] {
        let c = ctx(n, ell);
        assert_eq!(hecke_weight(&c, &Partition::empty()).unwrap(), 1.0);
        assert_eq!(brauer_weight(&c, &Partition::empty()).unwrap(), 1.0);
    }
}

#[test]
fn symmetric_square_is_weight_of_sum() {
    // d_[2] for N = 3 is the q-dimension of the five-dimensional representation.
    let c = ctx(3, 7);
    let d2 = brauer_weight(&c, &partition![2]).unwrap();
    assert!((d2 - c.qint(5)).abs() < 1e-12);
}

#[test]
fn large_level_limit_is_classical() {
    // ℓ → ∞ recovers the classical dimensions.
    let c = ctx(5, 100_000);
    let d = brauer_product(&c, &partition![2]).unwrap();
    assert!((d - 14.0).abs() < 1e-6);
    let d = hecke_product(&c, &partition![2, 1]).unwrap();
    assert!((d - 40.0).abs() < 1e-6);
    let c = ctx(-4, 100_000);
    // Sp(4) natural representation, with the sign of the odd box count.
    assert!((brauer_product(&c, &partition![1]).unwrap() + 4.0).abs() < 1e-6);
    // [1,1] at N = −4 is the transposed label of the 5-dimensional Sp(4) module.
    assert!((brauer_product(&c, &partition![2]).unwrap() - 5.0).abs() < 1e-6);
}

#[test]
fn weight_tables_cover_their_sets() {
    let c = ctx(3, 9);
    let t = WeightTable::for_labels(&brauer_labels(&c, 6)).unwrap();
    assert_eq!(t.entries.len(), brauer_labels(&c, 6).len());
    assert!(t.get(&partition![2]).unwrap() > 0.0);
    let h = WeightTable::for_labels(&hecke_labels(&c, 4)).unwrap();
    assert!((h.get(&partition![4]).unwrap() - (c.qint(9) + c.qint(5) + c.qint(1))).abs() < 1e-12);
}

#[test]
fn brauer_slices_have_parity_and_boundary() {
    let c = ctx(3, 7);
    let s = brauer_labels(&c, 6);
    assert!(s.members.iter().all(|l| l.size() % 2 == 0 && l.size() <= 6));
    assert!(s.boundary.iter().all(|l| !s.contains(l)));
    assert!(s.is_boundary(&partition![2, 1, 1]) || s.is_boundary(&partition![2, 2]));
}

#[test]
fn positivity_contexts() {
    for (n, ell) in [(3, 7), (3, 9), (5, 9), (2, 8), (4, 8)] {
        assert!(positivity_report(&ctx(n, ell), 1e-9).unwrap().all_positive, "({n},{ell})");
    }
    let r = positivity_report(&ctx(3, 8), 1e-9).unwrap();
    let (witness, value) = r.first_negative.unwrap();
    assert!(value < 0.0);
    // [(ℓ−N+1)/2] = [3] still has d = 1; the sign change happens one box later.
    assert_eq!(witness, partition![4]);
    assert!((brauer_weight(&ctx(3, 8), &partition![3]).unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn n_two_weights_are_cosines() {
    for ell in [8u64, 10, 14] {
        let c = ctx(2, ell);
        for l in all_brauer_labels(&c) {
            let w = brauer_weight(&c, &l).unwrap();
            let expect = match l.rows() {
                [] | [1, 1] => 1.0,
                [j] => 2.0 * (*j as f64 * PI / ell as f64).cos(),
                _ => unreachable!(),
            };
            assert!((w - expect).abs() < 1e-12);
        }
    }
}

proptest! {
    #[test]
    fn dagger_is_involution(n in 2usize..8, size in 0usize..9) {
        for l in Partition::bounded(size, n, size) {
            if l.col(1) + l.col(2) <= n {
                let d = associated_diagram(&l, n).unwrap();
                prop_assert_eq!(associated_diagram(&d, n).unwrap(), l.clone());
                prop_assert_eq!(d.col(2), l.col(2));
            }
        }
    }

    #[test]
    fn hecke_periodicity_is_a_bijection(n in prop::sample::select(vec![2i64, 3, 4, -3, -4]), extra in 2u64..5, size in 0usize..10) {
        let c = RootOfUnity::new(n, n.unsigned_abs() + extra).unwrap();
        let here = hecke_labels(&c, size);
        let there = hecke_labels(&c, size + c.abs_n());
        let mapped: Vec<Partition> = here.iter().map(|l| periodicity_map(Kind::Hecke, &c, l).unwrap()).collect();
        for (l, m) in here.iter().zip(&mapped) {
            prop_assert!(there.contains(m));
            prop_assert_eq!(&periodicity_inverse(Kind::Hecke, &c, m).unwrap(), l);
        }
        // Onto once every label at size + |N| has a full column (row).
        if size >= c.abs_n() * (c.ell() as usize) {
            prop_assert_eq!(mapped.len(), there.len());
        }
    }
}

#[test]
fn vanishing_factors_cancel_in_pairs() {
    // [7,1] at N = 2, ℓ = 8 has [8] in numerator and hook; the value is d̃_[6] = [7].
    let c = ctx(2, 8);
    let v = hecke_weight(&c, &partition![7, 1]).unwrap();
    assert!((v - c.qint(7)).abs() < 1e-12, "{v}");
    assert!((v - hecke_weight(&c, &partition![6]).unwrap()).abs() < 1e-12);
}

#[test]
fn significant_digit_formatting() {
    use fusym_core::qarith::format_sig;
    assert_eq!(format_sig(3.801937735804838, 9), "3.80193774");
    assert_eq!(format_sig(11.638155725, 9), "11.6381557");
    assert_eq!(format_sig(9.9999999996, 9), "10.0000000");
    assert_eq!(format_sig(1.16801325e-16, 9), "1.16801325e-16");
    assert_eq!(format_sig(-0.029437252, 9), "-0.0294372520");
    assert_eq!(format_sig(0.0, 9), "0");
    assert_eq!(format_sig(2.5e9, 3), "2.50e9");
}
