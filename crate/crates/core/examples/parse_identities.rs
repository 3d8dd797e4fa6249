//! The identity grammar: canonical rendering and positioned errors.
//!
//! cargo run --example parse_identities

use biquasi::identity::{builtin, parse_identity, Builtin};

fn main() {
    for id in Builtin::ALL {
        println!("{:<16} {}", id.name(), builtin(id).render());
    }
    println!();
    for text in [
        "(x o z) * (y o z) = x * y",
        "x o y o z = x",
        "(x o y = x",
        "x + y = x",
        "(x) = x",
    ] {
        println!("{text}");
        match parse_identity(text) {
            Ok(eq) => println!("  parsed as {}\n", eq.render()),
            Err(e) => println!("{}^ {e}\n", " ".repeat(e.position)),
        }
    }
}
