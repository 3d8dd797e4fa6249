//! Structural property report of a biquasigroup.
//!
//! cargo run --example properties_report

use biquasi::properties::full_report;
use biquasi::Biquasigroup;

fn main() -> biquasi::Result<()> {
    // Over Z_5: x o y = x + y, x * y = x + 2y.
    let biq = Biquasigroup::from_fns(5, |x, y| (x + y) % 5, |x, y| (x + 2 * y) % 5)?;
    println!("{}", biq.to_text());
    for (key, value) in full_report(&biq).fields() {
        println!("{key}: {value}");
    }
    Ok(())
}
