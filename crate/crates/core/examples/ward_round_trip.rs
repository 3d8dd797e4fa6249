//! Ward quasigroup of a group and the group recovered from it.
//!
//! cargo run --example ward_round_trip -- s3

use biquasi::constructors::{catalog, derived_group, ward_from_group, GroupName};
use biquasi::properties::{is_left_modular, is_medial, is_ward, unipotency};

fn main() -> biquasi::Result<()> {
    let name: GroupName = std::env::args().nth(1).unwrap_or_else(|| "zn:5".into()).parse()?;
    let g = catalog(&name)?;
    let w = ward_from_group(&g);
    println!("x o y = x - y over {name}:\n{}", w.to_text());
    println!("ward: {}", is_ward(&w)?);
    println!("diagonal constant: {:?}", unipotency(&w));
    println!(
        "medial: {}  left modular: {}  group commutative: {}",
        is_medial(&w)?,
        is_left_modular(&w)?,
        g.is_commutative()
    );

    let back = derived_group(&w)?;
    println!("derived group equals original: {}", back.table() == g.table());
    Ok(())
}
