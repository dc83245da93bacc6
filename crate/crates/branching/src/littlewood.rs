//! Littlewood's stable restriction rule.

use std::collections::BTreeMap;

use fusym_core::{lr_coefficient, Partition};

use crate::table::{BranchingTable, Method, StableFamily, TableContext};

fn admissible(beta: &Partition, family: StableFamily) -> bool {
    match family {
        StableFamily::O => beta.rows().iter().all(|r| r % 2 == 0),
        StableFamily::Sp => beta.conjugate().rows().iter().all(|c| c % 2 == 0),
    }
}

/// `b^λ_μ = Σ_β c^λ_{μβ}` over β with even rows (O) or even columns (Sp).
///
/// Labels are in the usual convention for both families; valid once N is large compared to |λ|.
pub fn littlewood_stable(lambda: &Partition, family: StableFamily) -> BranchingTable {
    let mut values = BTreeMap::new();
    for removed in (0..=lambda.size()).step_by(2) {
        let betas: Vec<Partition> =
            Partition::all_of_size(removed).into_iter().filter(|b| admissible(b, family)).collect();
        for mu in Partition::all_of_size(lambda.size() - removed) {
            if !lambda.contains(&mu) {
                continue;
            }
            let total: u64 = betas.iter().map(|b| lr_coefficient(lambda, &mu, b)).sum();
            if total > 0 {
                values.insert(mu, total as i64);
            }
        }
    }
    BranchingTable::from_signed(TableContext::Stable { family }, lambda.clone(), values, Method::Littlewood)
        .expect("Littlewood coefficients are nonnegative")
}
