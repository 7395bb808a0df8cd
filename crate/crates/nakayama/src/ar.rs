//! Auslander–Reiten translations, syzygies and homological dimensions.
//!
//! Every operation accepts either a coordinate or the zero module (`None`)
//! and returns `None` for the zero module, so chains such as `τΩ^{n-1}`
//! saturate at zero without error handling at each step.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kupisch::{Coord, Kupisch};

/// The zero module or an indecomposable.
pub type Module = Option<Coord>;

fn checked(k: &Kupisch, x: impl Into<Module>) -> Result<Module> {
    let x = x.into();
    if let Some(c) = x {
        k.require(c)?;
    }
    Ok(x)
}

pub(crate) fn tau_raw(k: &Kupisch, c: Coord) -> Module {
    (!k.is_projective(c)).then(|| Coord::new(c.i - 1, c.j))
}

pub(crate) fn tau_inv_raw(k: &Kupisch, c: Coord) -> Module {
    (!k.is_injective(c)).then(|| Coord::new(c.i + 1, c.j))
}

pub(crate) fn syzygy_raw(k: &Kupisch, c: Coord) -> Module {
    let s = c.i + c.j;
    let u = k.u(s);
    (c.j != u).then(|| Coord::new(s - u, u - c.j))
}

pub(crate) fn cosyzygy_raw(k: &Kupisch, c: Coord) -> Module {
    let v = k.v(c.i);
    (c.j != v).then(|| Coord::new(c.i + c.j, v - c.j))
}

pub(crate) fn tau_n_raw(k: &Kupisch, n: usize, x: Module) -> Module {
    let mut x = x;
    for _ in 1..n {
        x = x.and_then(|c| syzygy_raw(k, c));
    }
    x.and_then(|c| tau_raw(k, c))
}

pub(crate) fn tau_n_inv_raw(k: &Kupisch, n: usize, x: Module) -> Module {
    let mut x = x;
    for _ in 1..n {
        x = x.and_then(|c| cosyzygy_raw(k, c));
    }
    x.and_then(|c| tau_inv_raw(k, c))
}

/// Auslander–Reiten translate `τ`.
pub fn tau(k: &Kupisch, x: impl Into<Module>) -> Result<Module> {
    Ok(checked(k, x)?.and_then(|c| tau_raw(k, c)))
}

/// Inverse Auslander–Reiten translate `τ⁻`.
pub fn tau_inv(k: &Kupisch, x: impl Into<Module>) -> Result<Module> {
    Ok(checked(k, x)?.and_then(|c| tau_inv_raw(k, c)))
}

/// Kernel of the projective cover.
pub fn syzygy(k: &Kupisch, x: impl Into<Module>) -> Result<Module> {
    Ok(checked(k, x)?.and_then(|c| syzygy_raw(k, c)))
}

/// Cokernel of the injective envelope.
pub fn cosyzygy(k: &Kupisch, x: impl Into<Module>) -> Result<Module> {
    Ok(checked(k, x)?.and_then(|c| cosyzygy_raw(k, c)))
}

fn require_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::Parameter("n must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Higher translate `τ_n = τ Ω^{n-1}`.
pub fn tau_n(k: &Kupisch, n: usize, x: impl Into<Module>) -> Result<Module> {
    require_n(n)?;
    Ok(tau_n_raw(k, n, checked(k, x)?))
}

/// Higher inverse translate `τ_n⁻ = τ⁻ Ω^{-(n-1)}`.
pub fn tau_n_inv(k: &Kupisch, n: usize, x: impl Into<Module>) -> Result<Module> {
    require_n(n)?;
    Ok(tau_n_inv_raw(k, n, checked(k, x)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// `τ_n`
    Forward,
    /// `τ_n⁻`
    Backward,
}

/// Closed-form `τ_n` / `τ_n⁻` on `Λ_{m,h}`.
pub fn tau_n_closed_lambda_mh(
    m: usize,
    h: usize,
    n: usize,
    x: Coord,
    direction: Direction,
) -> Result<Module> {
    require_n(n)?;
    let k = Kupisch::lambda(m, h)?;
    k.require(x)?;
    match direction {
        Direction::Forward if k.is_projective(x) => {
            return Err(Error::Precondition(format!("{x} is projective")))
        }
        Direction::Backward if k.is_injective(x) => {
            return Err(Error::Precondition(format!("{x} is injective")))
        }
        _ => {}
    }
    let (i, j, h) = (x.i as i64, x.j as i64, h as i64);
    let half = (n / 2) as i64;
    let (ni, nj) = match (n.is_multiple_of(2), direction) {
        (true, Direction::Forward) => (i + j - half * h - 1, h - j),
        (true, Direction::Backward) => (i + j + (half - 1) * h + 1, h - j),
        (false, Direction::Forward) => (i - half * h - 1, j),
        (false, Direction::Backward) => (i + half * h + 1, j),
    };
    if ni < 1 || nj < 1 {
        return Ok(None);
    }
    let c = Coord::new(ni as usize, nj as usize);
    Ok(k.exists(c).then_some(c))
}

/// `Ω^k(x)`, the `k`-th syzygy.
pub fn syzygy_power(k: &Kupisch, power: usize, x: Module) -> Module {
    (0..power).fold(x, |acc, _| acc.and_then(|c| syzygy_raw(k, c)))
}

/// `Ω^{-k}(x)`, the `k`-th cosyzygy.
pub fn cosyzygy_power(k: &Kupisch, power: usize, x: Module) -> Module {
    (0..power).fold(x, |acc, _| acc.and_then(|c| cosyzygy_raw(k, c)))
}

/// Projective dimension.
pub fn pd(k: &Kupisch, x: Coord) -> Result<usize> {
    k.require(x)?;
    let mut count = 0;
    let mut cur = x;
    while let Some(next) = syzygy_raw(k, cur) {
        count += 1;
        cur = next;
    }
    Ok(count)
}

/// Injective dimension.
pub fn idim(k: &Kupisch, x: Coord) -> Result<usize> {
    k.require(x)?;
    let mut count = 0;
    let mut cur = x;
    while let Some(next) = cosyzygy_raw(k, cur) {
        count += 1;
        cur = next;
    }
    Ok(count)
}

/// Global dimension, the largest projective dimension of an indecomposable.
pub fn gldim(k: &Kupisch) -> usize {
    // Syzygies land on strictly smaller co-diagonals, so sweeping upwards
    // lets each value reuse the one of its syzygy.
    let m = k.m();
    let mut memo = vec![vec![0usize; m + 2]; m + 2];
    let mut best = 0;
    for s in 2..=m + 1 {
        for j in 1..=k.u(s) {
            let c = Coord::new(s - j, j);
            let value = match syzygy_raw(k, c) {
                Some(y) => memo[y.i][y.j] + 1,
                None => 0,
            };
            memo[c.i][c.j] = value;
            best = best.max(value);
        }
    }
    best
}

/// The simple injective `I(1)` at the source vertex.
pub fn source_injective(k: &Kupisch) -> Coord {
    k.injective_at(1)
}

/// The simple projective `P(m)` at the sink vertex.
pub fn sink_projective(k: &Kupisch) -> Coord {
    k.projective_at(k.m())
}

/// Auslander–Reiten quiver with its translation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArQuiver {
    pub vertices: Vec<Coord>,
    pub arrows: Vec<(Coord, Coord)>,
    /// Pairs `(x, τx)` for every nonprojective `x`.
    pub tau: Vec<(Coord, Coord)>,
}

impl ArQuiver {
    pub fn contains(&self, c: Coord) -> bool {
        self.vertices.binary_search(&c).is_ok()
    }

    pub fn tau_of(&self, c: Coord) -> Option<Coord> {
        self.tau.iter().find(|(x, _)| *x == c).map(|&(_, y)| y)
    }

    pub fn is_tau_image(&self, c: Coord) -> bool {
        self.tau.iter().any(|&(_, y)| y == c)
    }

    pub fn predecessors(&self, c: Coord) -> Vec<Coord> {
        let mut out: Vec<Coord> =
            self.arrows.iter().filter(|(_, t)| *t == c).map(|&(s, _)| s).collect();
        out.sort();
        out
    }

    pub fn successors(&self, c: Coord) -> Vec<Coord> {
        let mut out: Vec<Coord> =
            self.arrows.iter().filter(|(s, _)| *s == c).map(|&(_, t)| t).collect();
        out.sort();
        out
    }
}

pub fn ar_quiver(k: &Kupisch) -> ArQuiver {
    let vertices = k.all_modules();
    let mut arrows = Vec::new();
    let mut tau = Vec::new();
    for &c in &vertices {
        let up = Coord::new(c.i, c.j + 1);
        if k.exists(up) {
            arrows.push((c, up));
        }
        if c.j >= 2 {
            let down = Coord::new(c.i + 1, c.j - 1);
            if k.exists(down) {
                arrows.push((c, down));
            }
        }
        if let Some(t) = tau_raw(k, c) {
            tau.push((c, t));
        }
    }
    ArQuiver { vertices, arrows, tau }
}
