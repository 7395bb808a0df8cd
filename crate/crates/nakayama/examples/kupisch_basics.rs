//! Kupisch series: validation, the family `Λ_{m,h}`, classification of
//! indecomposables and the quiver presentation.

use nakayama::{kupisch, Coord, Kupisch};

pub fn main() -> nakayama::Result<()> {
    let k: Kupisch = "5,5,4^7,3,2,1".parse()?;
    println!("algebra {k} with {} vertices and {} indecomposables", k.m(), k.module_count());

    let p = k.presentation();
    for r in &p.relations {
        println!("  zero relation of length {} starting at vertex {}", r.length, r.start);
    }

    let c = k.classify(Coord::new(3, 4))?;
    println!(
        "M(3,4): top {}, socle {}, dim {}, projective {}, injective {}",
        c.top, c.socle, c.dim, c.projective, c.injective
    );

    match kupisch::validate(&[3, 1]) {
        Ok(()) => println!("[3,1] is valid"),
        Err(v) => println!("[3,1] is rejected: {v}"),
    }

    let lambda = Kupisch::lambda(9, 4)?;
    println!("Λ_(9,4) = {lambda}, opposite {}", lambda.opposite());
    assert_eq!(lambda.module_count(), 30);
    Ok(())
}
