//! Shows the leaf decomposition of a claw-free graph and the selections of
//! both algorithms, fragment by fragment.
//!
//! Usage: `cargo run --example decomposition_trace -- [family] [leaf]`

use dtdom::constructor::{algorithm_a, algorithm_b, decompose, decompose_extended};
use dtdom::domination::{exact_number, is_dtd, DominationKind};
use dtdom::families::generate;
use dtdom::{Graph, VertexSet};

fn solve(h: &Graph) -> dtdom::Result<VertexSet> {
    Ok(exact_number(h, DominationKind::DisjunctiveTotalDomination)?.witness)
}

fn main() -> dtdom::Result<()> {
    let mut args = std::env::args().skip(1);
    let family = args.next().unwrap_or_else(|| "H(3)".into());
    let g = generate(&family.parse()?)?;
    let leaf = match args.next() {
        Some(v) => v.parse().map_err(|_| dtdom::Error::Input(format!("bad leaf '{v}'")))?,
        None => g.leaves().first().expect("graph has a leaf"),
    };

    let dec = decompose(&g, leaf)?;
    println!("{family}: leaf y={} x={} X={} X1={} Y={}", dec.y, dec.x, dec.clique, dec.x1, dec.big_y);
    for f in &dec.fragments {
        println!(
            "  fragment {:<28} {:?} x_F={} step {}",
            f.vertices.to_string(),
            f.kind,
            f.chosen,
            f.attachment.step()
        );
    }
    let s = algorithm_a(&g, &dec, &mut solve)?;
    println!("algorithm A: {s} (size {}, DTD: {})", s.len(), is_dtd(&g, &s));

    if g.degree(dec.x) == 2 {
        let dec = decompose_extended(&g, leaf)?;
        let s = algorithm_b(&g, &dec, &mut solve)?;
        println!("algorithm B from z={leaf}: {s} (size {}, DTD: {})", s.len(), is_dtd(&g, &s));
    }
    Ok(())
}
