//! Auslander–Reiten translates, syzygies and homological dimensions.

use nakayama::{ar, Coord, Kupisch};

fn show(m: ar::Module) -> String {
    m.map_or_else(|| "0".to_string(), |c| c.to_string())
}

pub fn main() -> nakayama::Result<()> {
    let k = Kupisch::lambda(9, 4)?;
    let q = ar::ar_quiver(&k);
    println!("{k}: {} vertices, {} arrows, {} translations", q.vertices.len(), q.arrows.len(), q.tau.len());

    let x = Coord::new(4, 2);
    println!("τ {x} = {}", show(ar::tau(&k, x)?));
    println!("Ω {x} = {}", show(ar::syzygy(&k, x)?));
    println!("Ω⁻ {x} = {}", show(ar::cosyzygy(&k, x)?));
    println!("τ₂ {x} = {}", show(ar::tau_n(&k, 2, x)?));
    println!("τ₂⁻ {x} = {}", show(ar::tau_n_inv(&k, 2, x)?));
    println!("pd {x} = {}, id {x} = {}", ar::pd(&k, x)?, ar::idim(&k, x)?);
    println!("gl.dim {k} = {}", ar::gldim(&k));

    for y in q.successors(x) {
        println!("  arrow {x} -> {y}");
    }
    Ok(())
}
