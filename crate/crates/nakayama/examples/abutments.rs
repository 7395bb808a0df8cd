//! Abutments and the footing that identifies a foundation with `KA_h`.

use nakayama::abutments::{self, Side};
use nakayama::Kupisch;

pub fn main() -> nakayama::Result<()> {
    let k: Kupisch = "3^5,5^8,4,3,2,1".parse()?;
    for side in [Side::Left, Side::Right] {
        let heights: Vec<usize> = abutments::abutments(&k, side).iter().map(|a| a.height).collect();
        println!("{side} abutment heights of {k}: {heights:?}");
    }

    let h = 3;
    let apex = abutments::abutment(&k, Side::Right, h)?.apex;
    println!("right abutment of height {h} has apex {apex}");
    for x in abutments::foundation(&k, Side::Right, h)? {
        let y = abutments::footing_to_ka(&k, Side::Right, h, x)?;
        assert_eq!(abutments::footing_from_ka(&k, Side::Right, h, y)?, x);
        println!("  {x} corresponds to {y} in KA_{h}");
    }
    Ok(())
}
