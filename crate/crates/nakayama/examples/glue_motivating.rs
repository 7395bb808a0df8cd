//! Gluing two Nakayama algebras and checking the gluing invariants.

use nakayama::{cluster, gluing, Kupisch};

pub fn main() -> nakayama::Result<()> {
    let b = Kupisch::lambda(9, 4)?;
    let a = Kupisch::lambda(6, 5)?;
    let g = gluing::glue(&b, &a, 3)?;
    println!("{b} glued with {a} at height 3 gives {}", g.result);
    assert_eq!(g.result.run_length(), "5^2,4^7,3,2,1");

    let report = gluing::check_glue_invariants(&g).expect("gluing invariants");
    println!("invariants hold: {report:?}");
    println!("{} + {} - 6 = {} indecomposables", a.module_count(), b.module_count(), g.result.module_count());

    for n in 2..=4 {
        let v = cluster::check_nct(&g.result, n)?;
        println!("  {n}-cluster tilting: {}", v.ok);
    }
    Ok(())
}
