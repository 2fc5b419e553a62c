//! Exact domination, total domination and DTD numbers of a few graphs.
//!
//! Usage: `cargo run --example compute_numbers -- [family ...]`, e.g. `C(7) "T(3)" L13`.

use dtdom::domination::{exact_number, DominationKind};
use dtdom::families::{generate, FamilyId};

fn main() -> dtdom::Result<()> {
    let mut names: Vec<String> = std::env::args().skip(1).collect();
    if names.is_empty() {
        names = ["C(7)", "P(10)", "T(3)", "G(3)", "H(2)", "RelateGadget(3)"].map(String::from).to_vec();
    }
    for name in names {
        let id: FamilyId = name.parse()?;
        let g = generate(&id)?;
        print!("{:<16} n={:<3}", id.to_string(), g.order());
        for kind in DominationKind::ALL {
            let r = exact_number(&g, kind)?;
            print!("  {kind}={:<2} {:<20}", r.value, r.witness.to_string());
        }
        println!();
    }
    Ok(())
}
