//! Structural claims checked over every pair of quasigroups of small order.
//!
//! cargo run --example structural_theorems -- 4

use biquasi::census::{enumerate_quasigroups, verify_structural, CensusOptions, StructuralClaim};

fn main() -> biquasi::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    println!("{} quasigroups of order {n}", enumerate_quasigroups(n)?.len());
    let opts = CensusOptions::from_env();
    for claim in StructuralClaim::ALL {
        let r = verify_structural(claim, n, &opts)?;
        println!(
            "{:<14} {:<32} models {:<5} violations {}",
            claim.name(),
            r.identity,
            r.satisfying_pairs,
            r.violations.len()
        );
    }
    Ok(())
}
