//! Rendering an Auslander–Reiten quiver with a highlighted subcategory.

use nakayama::render::{self, Format, Labels, RenderSpec};
use nakayama::{ar, cluster, Kupisch};

pub fn main() -> nakayama::Result<()> {
    let k = Kupisch::lambda(9, 4)?;
    let v = cluster::check_nct(&k, 2)?;
    let q = ar::ar_quiver(&k);
    let spec = RenderSpec { format: Format::Ascii, highlight: v.candidate.clone(), labels: Labels::Coords };
    println!("{}", render::render(&q, &spec)?);

    let dot = render::render(&q, &RenderSpec { format: Format::Dot, ..spec })?;
    println!("DOT output has {} lines", dot.lines().count());
    Ok(())
}
