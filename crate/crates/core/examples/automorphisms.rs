//! Automorphism groups of the built-in groups.
//!
//! cargo run --example automorphisms

use biquasi::constructors::{catalog, GroupName};

fn main() -> biquasi::Result<()> {
    for name in GroupName::catalog_up_to_8() {
        let g = catalog(&name)?;
        let auts = g.automorphisms();
        println!(
            "{:<8} order {}  abelian {:<5}  |Aut| = {:<3} center {:?}",
            name.to_string(),
            g.order(),
            g.is_commutative(),
            auts.len(),
            g.center()
        );
    }
    let q8 = catalog(&GroupName::Q8)?;
    println!("\nfirst automorphisms of q8:");
    for p in q8.automorphisms().iter().take(4) {
        println!("  {p}");
    }
    Ok(())
}
