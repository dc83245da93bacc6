use fusym_core::{lr_coefficient, partition, Partition};
use proptest::prelude::*;

fn arb_partition(max_size: usize) -> impl Strategy<Value = Partition> {
    (0..=max_size).prop_flat_map(|n| {
        let all = Partition::all_of_size(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn brute_hook(l: &Partition, i: usize, j: usize) -> usize {
    let arm = (j + 1..=l.row(i)).count();
    let leg = (i + 1..).take_while(|&r| l.row(r) >= j).count();
    arm + leg + 1
}

proptest! {
    #[test]
    fn conjugate_is_involution(l in arb_partition(14)) {
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.conjugate().size(), l.size());
    }

    #[test]
    fn box_moves_are_inverse(l in arb_partition(12)) {
        for up in l.add_box() {
            prop_assert_eq!(up.size(), l.size() + 1);
            prop_assert!(up.remove_box().contains(&l));
        }
        for down in l.remove_box() {
            prop_assert!(down.add_box().contains(&l));
        }
    }

    #[test]
    fn text_and_json_round_trip(l in arb_partition(12)) {
        let text = l.rows().iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
        prop_assert_eq!(text.parse::<Partition>().unwrap(), l.clone());
        let json = serde_json::to_string(&l).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), l);
    }

    #[test]
    fn content_branches_agree_on_the_diagonal(l in arb_partition(12)) {
        // Only the first branch applies on the diagonal.
        for (i, j) in l.boxes() {
            let d = l.brauer_content(i, j).unwrap();
            if i == j {
                prop_assert_eq!(d, 2 * l.row(i) as i64 - 2 * i as i64);
            }
        }
    }
}

#[test]
fn hook_sums_match_brute_force() {
    for n in 0..=8 {
        for l in Partition::all_of_size(n) {
            let fast: usize = l.boxes().map(|(i, j)| l.hook_length(i, j).unwrap()).sum();
            let slow: usize = l.boxes().map(|(i, j)| brute_hook(&l, i, j)).sum();
            assert_eq!(fast, slow, "{l}");
        }
    }
}

#[test]
fn lr_is_symmetric_up_to_eight_boxes() {
    for n in 0..=8 {
        for lam in Partition::all_of_size(n) {
            for m in 0..=n {
                for mu in Partition::all_of_size(m).into_iter().filter(|mu| lam.contains(mu)) {
                    for beta in Partition::all_of_size(n - m) {
                        assert_eq!(
                            lr_coefficient(&lam, &mu, &beta),
                            lr_coefficient(&lam, &beta, &mu),
                            "{lam} / {mu}, {beta}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn lr_pieri_rule() {
    // Multiplying by a single row adds a horizontal strip.
    let lam = partition![3, 2, 1];
    let total: u64 = Partition::all_of_size(4).iter().map(|mu| lr_coefficient(&lam, mu, &partition![2])).sum();
    // The horizontal 2-strips of [3,2,1] leave [2,1,1], [3,1] or [2,2].
    let strips = [partition![2, 1, 1], partition![3, 1], partition![2, 2]];
    let expected: u64 = strips.iter().map(|mu| lr_coefficient(&lam, mu, &partition![2])).sum();
    assert_eq!(total, expected);
    assert_eq!(expected, 3);
}

#[test]
fn lr_dimension_count() {
    // Σ_{λ ⊢ n} c^λ_{μβ} f^λ = C(n, |μ|) f^μ f^β, with f the number of standard tableaux.
    fn f(l: &Partition) -> u64 {
        let n = l.size() as u64;
        let num: u64 = (1..=n).product();
        let den: u64 = l.boxes().map(|(i, j)| l.hook_length(i, j).unwrap() as u64).product();
        num / den
    }
    let binom = |n: u64, k: u64| -> u64 { (1..=k).fold(1, |acc, i| acc * (n - k + i) / i) };
    for (mu, beta) in [(partition![2, 1], partition![2]), (partition![3], partition![1, 1, 1]), (partition![2, 2], partition![2, 1])] {
        let n = mu.size() + beta.size();
        let lhs: u64 = Partition::all_of_size(n).iter().map(|l| lr_coefficient(l, &mu, &beta) * f(l)).sum();
        assert_eq!(lhs, binom(n as u64, mu.size() as u64) * f(&mu) * f(&beta));
    }
}
