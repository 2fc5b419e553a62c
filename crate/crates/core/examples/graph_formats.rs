//! Converts between edge lists and graph6, and uses canonical forms to tell
//! isomorphic relabelings apart from genuinely different graphs.

use dtdom::canon::{canonical_graph, is_isomorphic};
use dtdom::families::{generate, FamilyId};
use dtdom::io::{from_graph6, parse_edge_list, to_graph6, write_edge_list};

fn main() -> dtdom::Result<()> {
    let g = parse_edge_list("6 7\n0 1\n1 2\n2 0\n2 3\n3 4\n4 5\n5 3\n")?;
    let code = to_graph6(&g);
    println!("two triangles joined by an edge: {code}");
    print!("{}", write_edge_list(&from_graph6(&code)?));

    let shuffled = g.permute(&[4, 0, 5, 2, 1, 3]);
    println!(
        "relabeled: {}  canonical: {} vs {}",
        to_graph6(&shuffled),
        to_graph6(&canonical_graph(&g)),
        to_graph6(&canonical_graph(&shuffled))
    );
    println!("isomorphic to the original: {}", is_isomorphic(&g, &shuffled));

    let (t3, f3) = (generate(&FamilyId::T(3))?, generate(&FamilyId::F(3))?);
    println!("T(3) {} and F(3) {} isomorphic: {}", to_graph6(&t3), to_graph6(&f3), is_isomorphic(&t3, &f3));
    Ok(())
}
