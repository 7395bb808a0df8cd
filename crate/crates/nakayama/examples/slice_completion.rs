//! Completing a slice to an algebra with a fractured subcategory, then
//! gluing the left and right completions into an n-cluster tilting algebra.

use nakayama::abutments::Side;
use nakayama::cluster::{self, FracturedAlgebra, TraceStep};
use nakayama::tilting::Slice;

pub fn main() -> nakayama::Result<()> {
    let slice = Slice::new(vec![3, 2, 2, 2, 1])?;
    let n = 2;
    let right = cluster::complete_slice(&slice, n, Side::Right)?;
    println!("right completion: {}", right.kupisch);
    for step in &right.trace {
        if let TraceStep::Glue { b, a, h, result } = step {
            println!("  {b} glued with {a} at {h} gives {result}");
        }
    }
    let left = cluster::complete_slice(&slice, n, Side::Left)?;
    println!("left completion: {}", left.kupisch);

    let b = FracturedAlgebra { kupisch: left.kupisch, fracturing: left.fracturing };
    let a = FracturedAlgebra { kupisch: right.kupisch, fracturing: right.fracturing };
    let glued = cluster::glue_fractured(&b, &a, slice.height(), n)?;
    println!("glued: {} is {n}-cluster tilting: {}", glued.glued.result, glued.verdict.ok);
    assert!(cluster::check_nct(&glued.glued.result, n)?.ok);
    Ok(())
}
