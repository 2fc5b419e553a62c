//! Closed forms for paths and cycles, their explicit witness sets, and the
//! support-vertex exchange on a small tree.

use dtdom::domination::{
    cycle_witness, dtd_cycle_formula, dtd_path_formula, gt_cycle_formula, is_dtd, path_witness, support_exchange,
};
use dtdom::families::{generate, FamilyId};
use dtdom::{Graph, VertexSet};

fn main() -> dtdom::Result<()> {
    println!(" n  P_n  C_n  gt(C_n)  path witness");
    for n in 3..=16 {
        let p = generate(&FamilyId::Path(n))?;
        let w = path_witness(n)?;
        assert!(is_dtd(&p, &w) && is_dtd(&generate(&FamilyId::Cycle(n))?, &cycle_witness(n)?));
        println!("{n:2}  {:3}  {:3}  {:7}  {w}", dtd_path_formula(n)?, dtd_cycle_formula(n)?, gt_cycle_formula(n)?);
    }

    // Support vertex 0 with leaves 1 and 2 on the path 0-3-4-5. The set
    // {1,2,3,4} covers everything through the leaves; the exchange trades one
    // leaf for the support vertex without growing the set.
    let g = Graph::from_edge_list(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)])?;
    let s = VertexSet::from([1, 2, 3, 4]);
    let swapped = support_exchange(&g, &s, 0)?;
    println!("leafy set {s} -> {swapped}, still DTD: {}", is_dtd(&g, &swapped));
    Ok(())
}
