//! Gluing `B ⊳ A` of two Nakayama algebras along a right abutment of `B` and a
//! left abutment of `A` of the same height.
//!
//! On Kupisch series this is concatenation with an overlap of `h` entries:
//! the first `p - h` entries of `A` followed by all of `B`. Modules of `B`
//! keep their coordinates, modules of `A` are shifted by `q - h` along `i`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::abutments::{self, Side};
use crate::ar::{self, ar_quiver, Module};
use crate::error::{Error, Result};
use crate::kupisch::{Coord, Kupisch};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Glued {
    pub result: Kupisch,
    pub h: usize,
    /// Supplies the left abutment; its quiver forms the prefix.
    pub a: Kupisch,
    /// Supplies the right abutment.
    pub b: Kupisch,
}

impl Glued {
    pub fn phi(&self, x: Coord) -> Coord {
        Coord::new(x.i + self.b.m() - self.h, x.j)
    }

    pub fn psi(&self, x: Coord) -> Coord {
        x
    }

    pub fn phi_module(&self, x: Module) -> Module {
        x.map(|c| self.phi(c))
    }

    pub fn psi_module(&self, x: Module) -> Module {
        x.map(|c| self.psi(c))
    }

    /// Whether `x ∈ mod A` lies in the identified foundation.
    pub fn a_in_overlap(&self, x: Coord) -> bool {
        x.i + x.j <= self.h + 1
    }

    /// Whether `y ∈ mod B` lies in the identified foundation.
    pub fn b_in_overlap(&self, y: Coord) -> bool {
        y.i + self.h > self.b.m()
    }
}

#[derive(Serialize)]
struct GluedJson<'a> {
    result: &'a Kupisch,
    h: usize,
    a: &'a Kupisch,
    b: &'a Kupisch,
    phi: Vec<(Coord, Coord)>,
    psi: Vec<(Coord, Coord)>,
}

impl Serialize for Glued {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GluedJson {
            result: &self.result,
            h: self.h,
            a: &self.a,
            b: &self.b,
            phi: self.a.all_modules().into_iter().map(|x| (x, self.phi(x))).collect(),
            psi: self.b.all_modules().into_iter().map(|y| (y, self.psi(y))).collect(),
        }
        .serialize(s)
    }
}

/// Glues `b ⊳ a` at height `h`.
pub fn glue(b: &Kupisch, a: &Kupisch, h: usize) -> Result<Glued> {
    if h == 0 || h > abutments::max_left_height(a) {
        return Err(Error::NotAbutment { side: Side::Left, height: h });
    }
    if h > abutments::max_right_height(b) {
        return Err(Error::NotAbutment { side: Side::Right, height: h });
    }
    let p = a.m();
    let mut entries = a.entries()[..p - h].to_vec();
    entries.extend_from_slice(b.entries());
    let result = Kupisch::new(entries)?;
    Ok(Glued { result, h, a: a.clone(), b: b.clone() })
}

/// The first violated gluing invariant.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GlueViolation {
    #[error("indecomposable count {found}, expected {expected}")]
    Count { found: usize, expected: usize },
    #[error("{0} is not sent to a module of the glued algebra")]
    NotAModule(Coord),
    #[error("embedding is not injective at {0}")]
    NotInjective(Coord),
    #[error("{0} is not in the image of either embedding")]
    NotCovered(Coord),
    #[error("overlap mismatch at {0}")]
    Overlap(Coord),
    #[error("arrow {0} -> {1} of a component is not an arrow of the glued quiver")]
    Arrow(Coord, Coord),
    #[error("translation disagrees at {0}")]
    Translation(Coord),
    #[error("the amalgamated quiver differs from the glued quiver: {0}")]
    Pushout(String),
    #[error("global dimension {glued} outside [{low}, {high}]")]
    GlobalDimension { glued: usize, low: usize, high: usize },
    #[error("simple projective/injective counts ({s}, {t}) violate the sum rule")]
    Simples { s: usize, t: usize },
}

/// Summary returned when all invariants hold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GlueReport {
    pub modules: usize,
    pub gldim_a: usize,
    pub gldim_b: usize,
    pub gldim: usize,
}

fn simple_counts(k: &Kupisch) -> (usize, usize) {
    let mods = k.all_modules();
    let s = mods.iter().filter(|&&c| c.j == 1 && k.is_projective(c)).count();
    let t = mods.iter().filter(|&&c| c.j == 1 && k.is_injective(c)).count();
    (s, t)
}

/// Checks the structural consequences of gluing: module count, the two
/// embeddings, the amalgamated AR quiver and the global dimension bounds.
pub fn check_glue_invariants(g: &Glued) -> std::result::Result<GlueReport, GlueViolation> {
    let (a, b, k) = (&g.a, &g.b, &g.result);
    let expected = a.module_count() + b.module_count() - g.h * (g.h + 1) / 2;
    if k.module_count() != expected {
        return Err(GlueViolation::Count { found: k.module_count(), expected });
    }

    // Embeddings: injective, jointly surjective, overlapping exactly on the
    // foundations identified through the footings.
    let mut owner: BTreeMap<Coord, (Option<Coord>, Option<Coord>)> = BTreeMap::new();
    for x in a.all_modules() {
        let y = g.phi(x);
        if !k.exists(y) {
            return Err(GlueViolation::NotAModule(x));
        }
        let slot = owner.entry(y).or_default();
        if slot.0.is_some() {
            return Err(GlueViolation::NotInjective(x));
        }
        slot.0 = Some(x);
    }
    for x in b.all_modules() {
        let y = g.psi(x);
        if !k.exists(y) {
            return Err(GlueViolation::NotAModule(x));
        }
        let slot = owner.entry(y).or_default();
        if slot.1.is_some() {
            return Err(GlueViolation::NotInjective(x));
        }
        slot.1 = Some(x);
    }
    for y in k.all_modules() {
        match owner.get(&y) {
            None => return Err(GlueViolation::NotCovered(y)),
            Some((Some(xa), Some(xb))) => {
                let fa = abutments::footing_to_ka(a, Side::Left, g.h, *xa);
                let fb = abutments::footing_to_ka(b, Side::Right, g.h, *xb);
                match (fa, fb) {
                    (Ok(fa), Ok(fb)) if fa == fb => {}
                    _ => return Err(GlueViolation::Overlap(y)),
                }
            }
            Some((Some(xa), None)) if g.a_in_overlap(*xa) => return Err(GlueViolation::Overlap(y)),
            Some((None, Some(xb))) if g.b_in_overlap(*xb) => return Err(GlueViolation::Overlap(y)),
            _ => {}
        }
    }

    // Amalgamated sum of the two translation quivers.
    let (qa, qb, q) = (ar_quiver(a), ar_quiver(b), ar_quiver(k));
    let mut arrows: BTreeSet<(Coord, Coord)> = BTreeSet::new();
    for &(s, t) in &qa.arrows {
        arrows.insert((g.phi(s), g.phi(t)));
    }
    for &(s, t) in &qb.arrows {
        arrows.insert((g.psi(s), g.psi(t)));
    }
    let glued_arrows: BTreeSet<(Coord, Coord)> = q.arrows.iter().copied().collect();
    if let Some(&(s, t)) = arrows.difference(&glued_arrows).next() {
        return Err(GlueViolation::Arrow(s, t));
    }
    if let Some(&(s, t)) = glued_arrows.difference(&arrows).next() {
        return Err(GlueViolation::Pushout(format!("extra arrow {s} -> {t}")));
    }
    let mut translation: BTreeMap<Coord, Coord> = BTreeMap::new();
    let images = qa
        .tau
        .iter()
        .map(|&(x, y)| (g.phi(x), g.phi(y)))
        .chain(qb.tau.iter().map(|&(x, y)| (g.psi(x), g.psi(y))));
    for (x, y) in images {
        if let Some(prev) = translation.insert(x, y) {
            if prev != y {
                return Err(GlueViolation::Translation(x));
            }
        }
    }
    let glued_translation: BTreeMap<Coord, Coord> = q.tau.iter().copied().collect();
    if translation != glued_translation {
        let bad = glued_translation
            .keys()
            .chain(translation.keys())
            .find(|c| translation.get(c) != glued_translation.get(c))
            .copied()
            .expect("maps differ");
        return Err(GlueViolation::Translation(bad));
    }

    let (gldim_a, gldim_b, gldim) = (ar::gldim(a), ar::gldim(b), ar::gldim(k));
    let (low, high) = (gldim_a.max(gldim_b), gldim_a + gldim_b);
    if gldim < low || gldim > high {
        return Err(GlueViolation::GlobalDimension { glued: gldim, low, high });
    }

    let ((sa, ta), (sb, tb), (s, t)) = (simple_counts(a), simple_counts(b), simple_counts(k));
    if s + 1 != sa + sb || t + 1 != ta + tb {
        return Err(GlueViolation::Simples { s, t });
    }

    Ok(GlueReport { modules: k.module_count(), gldim_a, gldim_b, gldim })
}

/// The first identity of the component dispatch rules that fails.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{operation} of {coord} from {component} is {found:?} in the glued algebra, expected {expected:?}")]
pub struct DispatchViolation {
    pub operation: &'static str,
    pub component: &'static str,
    pub coord: Coord,
    pub found: Module,
    pub expected: Module,
}

/// Checks that translates, syzygies and cosyzygies of embedded modules can be
/// computed inside the component that owns them.
///
/// `τ` and `Ω` are computed in `A` off the overlap and in `B` everywhere;
/// `τ⁻` and `Ω⁻` are computed in `A` everywhere and in `B` off the overlap.
pub fn dispatch_check(g: &Glued) -> std::result::Result<usize, DispatchViolation> {
    type Op = fn(&Kupisch, Coord) -> Module;
    let ops: [(&'static str, Op); 4] = [
        ("tau", ar::tau_raw),
        ("syzygy", ar::syzygy_raw),
        ("tau_inv", ar::tau_inv_raw),
        ("cosyzygy", ar::cosyzygy_raw),
    ];
    let k = &g.result;
    let mut checked = 0;
    for (idx, (name, op)) in ops.iter().enumerate() {
        let forward = idx < 2;
        for x in g.a.all_modules() {
            if forward && g.a_in_overlap(x) {
                continue;
            }
            let expected = g.phi_module(op(&g.a, x));
            let found = op(k, g.phi(x));
            if found != expected {
                return Err(DispatchViolation { operation: name, component: "A", coord: x, found, expected });
            }
            checked += 1;
        }
        for y in g.b.all_modules() {
            if !forward && g.b_in_overlap(y) {
                continue;
            }
            let expected = g.psi_module(op(&g.b, y));
            let found = op(k, g.psi(y));
            if found != expected {
                return Err(DispatchViolation { operation: name, component: "B", coord: y, found, expected });
            }
            checked += 1;
        }
    }
    Ok(checked)
}
