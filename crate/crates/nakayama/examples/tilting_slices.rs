//! Tilting modules and slices of `KA_h`, and the level of a fracture.

use nakayama::abutments::Side;
use nakayama::tilting::{self, Fracture};
use nakayama::Kupisch;

pub fn main() -> nakayama::Result<()> {
    for h in 1..=5 {
        println!(
            "KA_{h}: {} tilting modules, {} slices",
            tilting::enumerate_tilting(h).len(),
            tilting::enumerate_slices(h).len()
        );
    }

    for slice in tilting::enumerate_slices(3) {
        let coords: Vec<String> = slice.coords().iter().map(ToString::to_string).collect();
        println!("  slice {:?}: {}", (1..=3).map(|k| slice.i(k)).collect::<Vec<_>>(), coords.join(" "));
    }

    let k = Kupisch::lambda(10, 4)?;
    let canon = Fracture::canonical(&k, Side::Right, 4)?;
    println!("canonical right fracture of {k} has level {}", canon.level);
    Ok(())
}
