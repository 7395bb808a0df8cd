//! Left and right abutments, their foundations and footings.
//!
//! A left abutment of height `h` has apex `M(1, h)` at the sink end of the
//! quiver; a right abutment of height `h` has apex `M(m-h+1, h)` at the source
//! end. Each foundation is a triangle of `h(h+1)/2` modules that the footing
//! identifies with the modules of `KA_h`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ar::ArQuiver;
use crate::error::{Error, Result};
use crate::kupisch::{Coord, Kupisch};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

impl std::str::FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "left" | "l" => Ok(Side::Left),
            "right" | "r" => Ok(Side::Right),
            other => Err(Error::Parse(format!("unknown side `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Abutment {
    pub side: Side,
    pub height: usize,
    pub apex: Coord,
}

/// Height of the maximal left abutment.
pub fn max_left_height(k: &Kupisch) -> usize {
    let m = k.m();
    (1..=m)
        .take_while(|&h| (0..h).all(|s| k.d(m - h + 1 + s) == h - s))
        .last()
        .unwrap_or(0)
}

/// Height of the maximal right abutment.
pub fn max_right_height(k: &Kupisch) -> usize {
    k.d(1)
}

pub fn max_height(k: &Kupisch, side: Side) -> usize {
    match side {
        Side::Left => max_left_height(k),
        Side::Right => max_right_height(k),
    }
}

pub fn left_abutment_heights(k: &Kupisch) -> Vec<usize> {
    (1..=max_left_height(k)).collect()
}

pub fn right_abutment_heights(k: &Kupisch) -> Vec<usize> {
    (1..=max_right_height(k)).collect()
}

pub fn abutment(k: &Kupisch, side: Side, height: usize) -> Result<Abutment> {
    if height == 0 || height > max_height(k, side) {
        return Err(Error::NotAbutment { side, height });
    }
    let apex = match side {
        Side::Left => Coord::new(1, height),
        Side::Right => Coord::new(k.m() - height + 1, height),
    };
    Ok(Abutment { side, height, apex })
}

pub fn abutments(k: &Kupisch, side: Side) -> Vec<Abutment> {
    (1..=max_height(k, side))
        .map(|h| abutment(k, side, h).expect("height in range"))
        .collect()
}

fn in_foundation(m: usize, side: Side, h: usize, c: Coord) -> bool {
    match side {
        Side::Left => c.i >= 1 && c.j >= 1 && c.i + c.j <= h + 1,
        Side::Right => c.j >= 1 && c.i + h > m && c.i + c.j <= m + 1,
    }
}

pub fn foundation(k: &Kupisch, side: Side, h: usize) -> Result<Vec<Coord>> {
    abutment(k, side, h)?;
    let m = k.m();
    let offset = match side {
        Side::Left => 0,
        Side::Right => m - h,
    };
    Ok(Kupisch::linear(h)
        .expect("h >= 1")
        .all_modules()
        .into_iter()
        .map(|c| Coord::new(c.i + offset, c.j))
        .collect())
}

pub fn is_in_foundation(k: &Kupisch, side: Side, h: usize, c: Coord) -> bool {
    h <= max_height(k, side) && in_foundation(k.m(), side, h, c)
}

/// Footing identification of a foundation module with a `KA_h` module.
pub fn footing_to_ka(k: &Kupisch, side: Side, h: usize, x: Coord) -> Result<Coord> {
    abutment(k, side, h)?;
    if !in_foundation(k.m(), side, h, x) {
        return Err(Error::OutsideFoundation { side, height: h, i: x.i, j: x.j });
    }
    Ok(match side {
        Side::Left => x,
        Side::Right => Coord::new(x.i - (k.m() - h), x.j),
    })
}

pub fn footing_from_ka(k: &Kupisch, side: Side, h: usize, y: Coord) -> Result<Coord> {
    abutment(k, side, h)?;
    if !Kupisch::linear(h).expect("h >= 1").exists(y) {
        return Err(Error::NoSuchModule { i: y.i, j: y.j });
    }
    Ok(match side {
        Side::Left => y,
        Side::Right => Coord::new(y.i + (k.m() - h), y.j),
    })
}

/// Decides from the translation quiver alone whether `apex` is the apex of an
/// abutment on `side`.
///
/// Left: the apex and every module on its sectional path down to the simple
/// are projective, and the closure of that path under the arrows
/// `(i,j) → (i+1,j-1)` is a full triangle with no arrows entering it from
/// outside. Right is the mirror image, using injectivity and the arrows
/// `(i,j-1) → (i,j)` read backwards.
pub fn verify_foundation_shape(q: &ArQuiver, side: Side, apex: Coord) -> Result<bool> {
    if !q.contains(apex) {
        return Err(Error::NoSuchModule { i: apex.i, j: apex.j });
    }
    let h = apex.j;
    let spine: Vec<Coord> = match side {
        Side::Left => (1..=h).map(|j| Coord::new(apex.i, j)).collect(),
        Side::Right => (0..h).map(|s| Coord::new(apex.i + s, h - s)).collect(),
    };
    let ok_spine = spine.iter().all(|&c| {
        q.contains(c)
            && match side {
                Side::Left => q.tau_of(c).is_none(),
                Side::Right => !q.is_tau_image(c),
            }
    });
    if !ok_spine {
        return Ok(false);
    }
    let mut region: BTreeSet<Coord> = spine.iter().copied().collect();
    let mut frontier: Vec<Coord> = spine.clone();
    while let Some(c) = frontier.pop() {
        let next = match side {
            Side::Left => q.successors(c).into_iter().filter(|t| t.j + 1 == c.j).collect::<Vec<_>>(),
            Side::Right => q.predecessors(c).into_iter().filter(|s| s.j + 1 == c.j).collect(),
        };
        for t in next {
            if region.insert(t) {
                frontier.push(t);
            }
        }
    }
    if region.len() != h * (h + 1) / 2 {
        return Ok(false);
    }
    let leaks = q.arrows.iter().any(|&(s, t)| match side {
        Side::Left => region.contains(&t) && !region.contains(&s),
        Side::Right => region.contains(&s) && !region.contains(&t),
    });
    Ok(!leaks)
}
