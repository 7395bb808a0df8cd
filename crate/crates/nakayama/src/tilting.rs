//! Tilting modules over `KA_h`, slices, fractures and fracturings.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::abutments::{self, Side};
use crate::error::{Error, Result};
use crate::kupisch::{Coord, Kupisch};

fn require_ka(h: usize, c: Coord) -> Result<()> {
    if h >= 1 && c.i >= 1 && c.j >= 1 && c.i + c.j <= h + 1 {
        Ok(())
    } else {
        Err(Error::NoSuchModule { i: c.i, j: c.j })
    }
}

/// `dim Hom(x, y)` over `KA_h`.
pub fn hom_dim_ka(h: usize, x: Coord, y: Coord) -> Result<usize> {
    require_ka(h, x)?;
    require_ka(h, y)?;
    Ok(hom_raw(x, y))
}

fn hom_raw(x: Coord, y: Coord) -> usize {
    let (xe, ye) = (x.i + x.j - 1, y.i + y.j - 1);
    usize::from(x.i <= y.i && y.i <= xe && xe <= ye)
}

/// `dim Ext¹(x, y)` over `KA_h`.
pub fn ext1_dim_ka(h: usize, x: Coord, y: Coord) -> Result<usize> {
    require_ka(h, x)?;
    require_ka(h, y)?;
    Ok(ext_raw(x, y))
}

fn ext_raw(x: Coord, y: Coord) -> usize {
    if x.i == 1 {
        0
    } else {
        hom_raw(y, Coord::new(x.i - 1, x.j))
    }
}

fn compatible(x: Coord, y: Coord) -> bool {
    ext_raw(x, y) == 0 && ext_raw(y, x) == 0
}

pub fn is_tilting(h: usize, coords: &[Coord]) -> Result<bool> {
    for &c in coords {
        require_ka(h, c)?;
    }
    let distinct: BTreeSet<_> = coords.iter().collect();
    if distinct.len() != coords.len() || coords.len() != h {
        return Ok(false);
    }
    Ok(coords
        .iter()
        .enumerate()
        .all(|(a, &x)| coords[a..].iter().all(|&y| compatible(x, y))))
}

/// All basic tilting `KA_h`-modules, each as a sorted coordinate list.
pub fn enumerate_tilting(h: usize) -> Vec<Vec<Coord>> {
    let modules = if h == 0 { Vec::new() } else { Kupisch::linear(h).expect("h >= 1").all_modules() };
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    extend_tilting(h, &modules, 0, &mut chosen, &mut out);
    out
}

fn extend_tilting(
    h: usize,
    modules: &[Coord],
    start: usize,
    chosen: &mut Vec<Coord>,
    out: &mut Vec<Vec<Coord>>,
) {
    if chosen.len() == h {
        out.push(chosen.clone());
        return;
    }
    for idx in start..modules.len() {
        if modules.len() - idx < h - chosen.len() {
            break;
        }
        let x = modules[idx];
        if chosen.iter().all(|&y| compatible(x, y)) {
            chosen.push(x);
            extend_tilting(h, modules, idx + 1, chosen, out);
            chosen.pop();
        }
    }
}

/// A slice of `KA_h`: one module `M(i_k, k)` of each length `k`, with
/// `i_h = 1` and `i_{k+1} ∈ {i_k, i_k - 1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Slice {
    /// `rows[k-1] = i_k`.
    pub rows: Vec<usize>,
}

impl Slice {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        let h = rows.len();
        let ok = h >= 1
            && rows[h - 1] == 1
            && rows.windows(2).all(|w| w[0] == w[1] || w[0] == w[1] + 1);
        if ok {
            Ok(Slice { rows })
        } else {
            Err(Error::NotSlice(h))
        }
    }

    pub fn projective(h: usize) -> Result<Self> {
        Slice::new(vec![1; h])
    }

    pub fn from_coords(h: usize, coords: &[Coord]) -> Result<Self> {
        let mut rows = vec![0; h];
        for &c in coords {
            if c.j == 0 || c.j > h || rows[c.j - 1] != 0 {
                return Err(Error::NotSlice(h));
            }
            rows[c.j - 1] = c.i;
        }
        Slice::new(rows)
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn i(&self, k: usize) -> usize {
        self.rows[k - 1]
    }

    pub fn coords(&self) -> Vec<Coord> {
        let mut out: Vec<Coord> =
            self.rows.iter().enumerate().map(|(k, &i)| Coord::new(i, k + 1)).collect();
        out.sort();
        out
    }

    /// Image under the duality of `KA_h`, `M(i, j) ↦ M(h-i-j+2, j)`.
    pub fn dual(&self) -> Slice {
        let h = self.height();
        Slice {
            rows: self.rows.iter().enumerate().map(|(k, &i)| h + 1 - i - k).collect(),
        }
    }
}

pub fn is_slice(h: usize, coords: &[Coord]) -> bool {
    coords.len() == h && Slice::from_coords(h, coords).is_ok()
}

pub fn enumerate_slices(h: usize) -> Vec<Slice> {
    if h == 0 {
        return Vec::new();
    }
    (0..1usize << (h - 1))
        .map(|mask| {
            let mut rows = vec![1; h];
            for k in (0..h - 1).rev() {
                rows[k] = rows[k + 1] + ((mask >> k) & 1);
            }
            Slice { rows }
        })
        .collect()
}

/// A fracture of the abutment of the given side and height.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fracture {
    pub side: Side,
    pub height: usize,
    /// Coordinates in the algebra (not in `KA_h`), sorted.
    pub coords: Vec<Coord>,
    pub level: usize,
    /// Whether the abutment is the maximal one on its side.
    #[serde(default = "default_true")]
    pub maximal: bool,
}

fn default_true() -> bool {
    true
}

/// Level of a fracture: one more than the largest height whose apex is
/// missing, or 1 when every apex is present.
pub fn level(k: &Kupisch, side: Side, h: usize, coords: &[Coord]) -> usize {
    let present: BTreeSet<_> = coords.iter().copied().collect();
    let m = k.m();
    (1..=h)
        .filter(|&s| {
            let apex = match side {
                Side::Left => Coord::new(1, s),
                Side::Right => Coord::new(m + 1 - s, s),
            };
            !present.contains(&apex)
        })
        .max()
        .unwrap_or(0)
        + 1
}

pub fn is_fracture(k: &Kupisch, side: Side, h: usize, coords: &[Coord]) -> Result<Fracture> {
    let mut footed = Vec::with_capacity(coords.len());
    for &c in coords {
        footed.push(abutments::footing_to_ka(k, side, h, c)?);
    }
    if !is_tilting(h, &footed)? {
        return Err(Error::NotTilting(h));
    }
    let mut coords = coords.to_vec();
    coords.sort();
    Ok(Fracture {
        side,
        height: h,
        level: level(k, side, h, &coords),
        maximal: h == abutments::max_height(k, side),
        coords,
    })
}

impl Fracture {
    /// The fracture made of all apexes up to height `h` (projective on the
    /// left, injective on the right).
    pub fn canonical(k: &Kupisch, side: Side, h: usize) -> Result<Fracture> {
        let coords: Vec<Coord> = (1..=h)
            .map(|s| abutments::abutment(k, side, s).map(|a| a.apex))
            .collect::<Result<_>>()?;
        is_fracture(k, side, h, &coords)
    }

    /// Fracture whose footing image is the given `KA_h` coordinates.
    pub fn from_ka(k: &Kupisch, side: Side, h: usize, ka: &[Coord]) -> Result<Fracture> {
        let coords: Vec<Coord> = ka
            .iter()
            .map(|&y| abutments::footing_from_ka(k, side, h, y))
            .collect::<Result<_>>()?;
        is_fracture(k, side, h, &coords)
    }

    /// Footing image in `KA_h`, sorted.
    pub fn ka_coords(&self, k: &Kupisch) -> Vec<Coord> {
        let mut out: Vec<Coord> = self
            .coords
            .iter()
            .map(|&c| abutments::footing_to_ka(k, self.side, self.height, c).expect("fracture lies in its foundation"))
            .collect();
        out.sort();
        out
    }

    /// Whether every apex is present, i.e. the fracture is projective (left)
    /// or injective (right).
    pub fn is_canonical(&self) -> bool {
        self.level == 1
    }
}

/// A left fracture at the maximal left abutment and a right fracture at the
/// maximal right abutment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fracturing {
    pub left: Fracture,
    pub right: Fracture,
}

impl Fracturing {
    pub fn new(k: &Kupisch, left: &[Coord], right: &[Coord]) -> Result<Self> {
        Ok(Fracturing {
            left: is_fracture(k, Side::Left, abutments::max_left_height(k), left)?,
            right: is_fracture(k, Side::Right, abutments::max_right_height(k), right)?,
        })
    }

    /// The projective left and injective right fracturing.
    pub fn canonical(k: &Kupisch) -> Self {
        Fracturing {
            left: Fracture::canonical(k, Side::Left, abutments::max_left_height(k)).expect("apexes form a fracture"),
            right: Fracture::canonical(k, Side::Right, abutments::max_right_height(k)).expect("apexes form a fracture"),
        }
    }

    pub fn validate(&self, k: &Kupisch) -> Result<()> {
        for (f, side) in [(&self.left, Side::Left), (&self.right, Side::Right)] {
            if f.side != side || f.height != abutments::max_height(k, side) {
                return Err(Error::Precondition(format!(
                    "{side} fracture must sit at the maximal {side} abutment"
                )));
            }
            let fresh = is_fracture(k, side, f.height, &f.coords)?;
            if fresh.level != f.level {
                return Err(Error::Precondition(format!("{side} fracture has a wrong level")));
            }
        }
        Ok(())
    }
}

/// `P^L`: projectives that are not left abutment apexes, together with the
/// left fracture.
pub fn pl_category(k: &Kupisch, f: &Fracturing) -> Vec<Coord> {
    let hl = abutments::max_left_height(k);
    let mut out: BTreeSet<Coord> = k
        .projectives()
        .into_iter()
        .filter(|c| !(c.i == 1 && c.j <= hl))
        .collect();
    out.extend(f.left.coords.iter().copied());
    out.into_iter().collect()
}

/// `I^R`: injectives that are not right abutment apexes, together with the
/// right fracture.
pub fn ir_category(k: &Kupisch, f: &Fracturing) -> Vec<Coord> {
    let hr = abutments::max_right_height(k);
    let m = k.m();
    let mut out: BTreeSet<Coord> = k
        .injectives()
        .into_iter()
        .filter(|c| !(c.i + c.j == m + 1 && c.j <= hr))
        .collect();
    out.extend(f.right.coords.iter().copied());
    out.into_iter().collect()
}
