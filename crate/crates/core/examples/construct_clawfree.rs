//! Builds DTD-sets of at most 4n/7 vertices for claw-free graphs and
//! compares them with the greedy baseline and the exact optimum.

use dtdom::constructor::{construct_dtd_clawfree, greedy_dtd};
use dtdom::domination::{exact_number, is_dtd, DominationKind};
use dtdom::families::{generate, FamilyId};
use dtdom::Graph;

fn report(name: &str, g: &Graph) -> dtdom::Result<()> {
    let c = construct_dtd_clawfree(g)?;
    assert!(is_dtd(g, &c.set));
    let greedy = greedy_dtd(g)?.len();
    let exact = match g.order() {
        n if n <= 40 => exact_number(g, DominationKind::DisjunctiveTotalDomination)?.value.to_string(),
        _ => "-".into(),
    };
    println!(
        "{name:<22} n={:<3} bound={:<3} built={:<3} greedy={greedy:<3} exact={exact:<3} {}",
        g.order(),
        4 * g.order() / 7,
        c.set.len(),
        c.method
    );
    Ok(())
}

fn main() -> dtdom::Result<()> {
    for t in 1..=6 {
        report(&format!("H({t})"), &generate(&FamilyId::H(t))?)?;
    }
    for name in ["L(13)", "L(14)", "Corona(K(4),2)", "Corona(K(3),3)", "P(20)", "C(12)"] {
        report(name, &generate(&name.parse()?)?)?;
    }
    // Exceptional graphs are refused by name.
    match construct_dtd_clawfree(&generate(&FamilyId::Path(6))?) {
        Err(e) => println!("P(6): {e}"),
        Ok(_) => unreachable!("P6 is exceptional"),
    }
    Ok(())
}
