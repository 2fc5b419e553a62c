//! Validates candidate sets against the three domination notions and shows
//! which vertices a failing set leaves uncovered.

use dtdom::domination::{satisfies, uncovered, DominationKind};
use dtdom::families::{generate, FamilyId};
use dtdom::VertexSet;

fn main() -> dtdom::Result<()> {
    let c7 = generate(&FamilyId::Cycle(7))?;
    for text in ["0,1,2,3", "0,1,4,5", "0,3", "1,2,5"] {
        let s: VertexSet = text.parse()?;
        for kind in DominationKind::ALL {
            let missing = uncovered(&c7, &s, kind);
            let verdict = if satisfies(&c7, &s, kind) { "ok".to_string() } else { format!("misses {missing}") };
            println!("C7  {s:<10} {kind:<5} {verdict}");
        }
    }
    Ok(())
}
