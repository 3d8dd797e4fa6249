//! Census of linear biquasigroups over a group, and a theorem check that
//! compares it with a parameter characterization.
//!
//! cargo run --example linear_census -- zn:5 e4 t24a

use biquasi::census::{run_census, verify_theorem, CensusOptions, TheoremId};
use biquasi::constructors::GroupName;
use biquasi::identity::resolve_identity;
use biquasi::Kind;

fn main() -> biquasi::Result<()> {
    let mut args = std::env::args().skip(1);
    let group: GroupName = args.next().unwrap_or_else(|| "zn:5".into()).parse()?;
    let identity = resolve_identity(&args.next().unwrap_or_else(|| "e4".into()))?;
    let theorem: TheoremId = args.next().unwrap_or_else(|| "t24a".into()).parse()?;
    let opts = CensusOptions::from_env();

    for kind in [Kind::Middle, Kind::End] {
        let r = run_census(&group, &identity, kind, &opts)?;
        println!(
            "{} over {group} ({kind}): {} of {} specs",
            r.identity,
            r.satisfying.len(),
            r.total_specs
        );
        for d in r.satisfying.iter().take(5) {
            println!("  phi,psi,a,alpha,beta,b = {}", d.csv_row());
        }
    }

    let check = verify_theorem(theorem, &group, &opts)?;
    println!(
        "\n{theorem} over {group}: census {} predicate {} agree {}",
        check.census_set.len(),
        check.predicate_set.len(),
        check.agree
    );
    Ok(())
}
