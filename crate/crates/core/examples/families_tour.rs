//! Generates the named families, compares their reference DTD numbers with
//! the exact solver and classifies relabeled copies back to their names.

use dtdom::domination::{exact_number, DominationKind};
use dtdom::families::{classify, dtd_reference_value, generate, FamilyClass, FamilyId};

fn main() -> dtdom::Result<()> {
    let ids: Vec<FamilyId> =
        ["T(3)", "F(3)", "G(3)", "T*", "H(2)", "L(13)", "L(14)", "C10'", "C10''", "DoubleStar(2,3)"]
            .iter()
            .map(|s| s.parse())
            .collect::<dtdom::Result<_>>()?;
    for id in ids {
        let g = generate(&id)?;
        let exact = exact_number(&g, DominationKind::DisjunctiveTotalDomination)?.value;
        // Reverse the labels so classification cannot lean on the numbering.
        let perm: Vec<usize> = (0..g.order()).rev().collect();
        let named = classify(&g.permute(&perm)).map_or("?".into(), |f| f.to_string());
        let reference = dtd_reference_value(&id).map_or("-".into(), |v| v.to_string());
        println!(
            "{:<16} n={:<3} m={:<3} dtd={exact:<3} reference={reference:<3} classified as {named}",
            id.to_string(),
            g.order(),
            g.size()
        );
    }
    for class in FamilyClass::ALL {
        if let Some(members) = class.members() {
            let names: Vec<String> = members.iter().map(|m| m.to_string()).collect();
            println!("class {class}: {}", names.join(" "));
        }
    }
    Ok(())
}
