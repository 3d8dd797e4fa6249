//! Exhaustive identity checking, with the first counterexample on failure.
//!
//! cargo run --example check_identity

use biquasi::identity::{builtin, check, parse_identity, resolve_identity, Builtin};
use biquasi::{Biquasigroup, CayleyTable};

fn main() -> biquasi::Result<()> {
    // Over Z_3: x o y = x - y, x * y = x + y.
    let circ = CayleyTable::from_fn(3, |x, y| (x + 3 - y) % 3);
    let star = CayleyTable::from_fn(3, |x, y| (x + y) % 3);
    let biq = Biquasigroup::new(circ, star)?;

    for id in Builtin::NUMBERED {
        let eq = builtin(id);
        let result = check(&biq, &eq);
        match result.counterexample {
            None => println!("{:<3} {:<36} holds", id.name(), eq.render()),
            Some(ce) => {
                let vals: Vec<String> = ce
                    .assignment
                    .iter()
                    .map(|b| format!("{}={}", b.var.name(), b.value))
                    .collect();
                println!(
                    "{:<3} {:<36} fails at {} ({} vs {})",
                    id.name(),
                    eq.render(),
                    vals.join(" "),
                    ce.lhs,
                    ce.rhs
                );
            }
        }
    }

    // Identities may also be written by hand; this one is commutativity of o.
    let comm = parse_identity("x o y = y o x")?;
    println!("{}: {}", comm.render(), check(&biq, &comm).holds);
    let custom = resolve_identity("custom:(x * y) o z = (x o z) * (y o z)")?;
    println!("{}: {}", custom.render(), check(&biq, &custom).holds);
    Ok(())
}
