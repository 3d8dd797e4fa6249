//! Every named construction family, checked against its identity.
//!
//! cargo run --example constructions

use biquasi::constructors::{catalog, construct, Family, FamilyParams, GroupName};
use biquasi::identity::{builtin, check};

fn main() -> biquasi::Result<()> {
    let z5 = catalog(&GroupName::Zn(5))?;
    let params = |a, b, n| FamilyParams {
        a: Some(a),
        b: Some(b),
        n: Some(n),
        ..FamilyParams::default()
    };
    let cases = [
        (Family::Ward, params(0, 0, 0)),
        (Family::DerivedGroup, params(0, 0, 0)),
        (Family::E4Extension, params(0, 0, 0)),
        (Family::T26, params(2, 0, 0)),
        (Family::InverseOp, params(0, 0, 0)),
        (Family::E5Example, params(0, 0, 0)),
        (Family::E7Example, params(0, 0, 0)),
        (Family::C71, params(3, 0, 5)),
        (Family::C72V1, params(3, 0, 0)),
        (Family::C72V2, params(4, 0, 0)),
        (Family::E8Zn, params(2, 0, 5)),
        (Family::E9Zn, params(3, 1, 7)),
        (Family::E9Example, params(2, 0, 0)),
    ];
    for (family, p) in cases {
        let biq = construct(family, Some(&z5), &p)?;
        let verdict = match family.target() {
            Some(id) => format!(
                "{} {}",
                id.name(),
                if check(&biq, &builtin(id)).holds {
                    "holds"
                } else {
                    "FAILS"
                }
            ),
            None => "no target identity".to_string(),
        };
        println!("{:<14} order {:<2} {verdict}", family.name(), biq.order());
    }

    println!(
        "\nc72 variant 1, a = 3:\n{}",
        construct(Family::C72V1, None, &params(3, 0, 0))?.to_text()
    );
    Ok(())
}
