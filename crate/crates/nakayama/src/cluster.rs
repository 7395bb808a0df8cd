//! Fractured and n-cluster tilting subcategories: candidate generation,
//! verification, gluing of fractured subcategories and slice completion.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::abutments::{self, Side};
use crate::ar::{self, Module};
use crate::error::{Error, Result};
use crate::gluing::{self, Glued};
use crate::kupisch::{Coord, Kupisch};
use crate::tilting::{self, Fracture, Fracturing, Slice};

/// A violated condition, located at a coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Failure {
    /// A member of `P^L` is missing from the candidate.
    MissingFromCandidate { coord: Coord },
    /// A coordinate of the candidate is not a module of the algebra.
    NoSuchModule { coord: Coord },
    /// `τ_n` of a member of `C ∖ P^L` is zero or lies outside `C ∖ I^R`.
    TauN { coord: Coord, image: Module },
    /// `τ_n⁻` of a member of `C ∖ I^R` is zero or lies outside `C ∖ P^L`.
    TauNInv { coord: Coord, image: Module },
    /// `τ_n⁻ τ_n x ≠ x` or `τ_n τ_n⁻ x ≠ x`.
    NotInverse { coord: Coord, back: Module },
    /// `Ω^power x` vanishes for `x ∈ C ∖ P^L`.
    Syzygy { coord: Coord, power: usize },
    /// `Ω^{-power} x` vanishes for `x ∈ C ∖ I^R`.
    Cosyzygy { coord: Coord, power: usize },
}

impl Failure {
    /// Number of the violated condition, from 1 to 4.
    pub fn condition(&self) -> u8 {
        match self {
            Failure::MissingFromCandidate { .. } | Failure::NoSuchModule { .. } => 1,
            Failure::TauN { .. } | Failure::TauNInv { .. } | Failure::NotInverse { .. } => 2,
            Failure::Syzygy { .. } => 3,
            Failure::Cosyzygy { .. } => 4,
        }
    }

    pub fn coord(&self) -> Coord {
        match *self {
            Failure::MissingFromCandidate { coord }
            | Failure::NoSuchModule { coord }
            | Failure::TauN { coord, .. }
            | Failure::TauNInv { coord, .. }
            | Failure::NotInverse { coord, .. }
            | Failure::Syzygy { coord, .. }
            | Failure::Cosyzygy { coord, .. } => coord,
        }
    }
}

fn show(m: Module) -> String {
    m.map_or_else(|| "0".to_string(), |c| c.to_string())
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Failure::MissingFromCandidate { coord } => write!(f, "{coord} lies in P^L but not in the candidate"),
            Failure::NoSuchModule { coord } => write!(f, "{coord} is not a module of the algebra"),
            Failure::TauN { coord, image } => write!(f, "τ_n {coord} = {} is not in C ∖ I^R", show(image)),
            Failure::TauNInv { coord, image } => write!(f, "τ_n⁻ {coord} = {} is not in C ∖ P^L", show(image)),
            Failure::NotInverse { coord, back } => write!(f, "{coord} returns as {}", show(back)),
            Failure::Syzygy { coord, power } => write!(f, "Ω^{power} {coord} = 0"),
            Failure::Cosyzygy { coord, power } => write!(f, "Ω^-{power} {coord} = 0"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub ok: bool,
    pub n: usize,
    pub candidate: Vec<Coord>,
    /// Pairs `(x, τ_n⁻ x)` for `x ∈ C ∖ I^R`.
    pub orbit: Vec<(Coord, Coord)>,
    pub failures: Vec<Failure>,
}

/// Closure of `P^L` under `τ_n⁻`.
pub fn generate_candidate(k: &Kupisch, n: usize, f: &Fracturing) -> Vec<Coord> {
    let mut out: BTreeSet<Coord> = BTreeSet::new();
    for seed in tilting::pl_category(k, f) {
        let mut x = Some(seed);
        while let Some(c) = x {
            if !out.insert(c) {
                break;
            }
            x = ar::tau_n_inv_raw(k, n, Some(c));
        }
    }
    out.into_iter().collect()
}

fn require_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::Parameter("n must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Checks conditions (1) to (4) for a given candidate.
pub fn check_candidate(k: &Kupisch, n: usize, f: &Fracturing, candidate: &[Coord]) -> Result<Verdict> {
    require_n(n)?;
    f.validate(k)?;
    let c: BTreeSet<Coord> = candidate.iter().copied().collect();
    let mut failures = Vec::new();
    for &x in &c {
        if !k.exists(x) {
            failures.push(Failure::NoSuchModule { coord: x });
        }
    }
    if !failures.is_empty() {
        return Ok(Verdict { ok: false, n, candidate: c.into_iter().collect(), orbit: Vec::new(), failures });
    }
    if n == 1 {
        let all = k.all_modules();
        let failures: Vec<Failure> = all
            .iter()
            .filter(|x| !c.contains(x))
            .map(|&coord| Failure::MissingFromCandidate { coord })
            .collect();
        return Ok(Verdict { ok: failures.is_empty(), n, candidate: c.into_iter().collect(), orbit: Vec::new(), failures });
    }

    let pl: BTreeSet<Coord> = tilting::pl_category(k, f).into_iter().collect();
    let ir: BTreeSet<Coord> = tilting::ir_category(k, f).into_iter().collect();
    for &p in &pl {
        if !c.contains(&p) {
            failures.push(Failure::MissingFromCandidate { coord: p });
        }
    }
    let c_minus_pl: BTreeSet<Coord> = c.difference(&pl).copied().collect();
    let c_minus_ir: BTreeSet<Coord> = c.difference(&ir).copied().collect();

    for &x in &c_minus_pl {
        let image = ar::tau_n_raw(k, n, Some(x));
        match image {
            Some(y) if c_minus_ir.contains(&y) => {
                let back = ar::tau_n_inv_raw(k, n, image);
                if back != Some(x) {
                    failures.push(Failure::NotInverse { coord: x, back });
                }
            }
            _ => failures.push(Failure::TauN { coord: x, image }),
        }
    }
    let mut orbit = Vec::new();
    for &y in &c_minus_ir {
        let image = ar::tau_n_inv_raw(k, n, Some(y));
        match image {
            Some(x) if c_minus_pl.contains(&x) => {
                let back = ar::tau_n_raw(k, n, image);
                if back != Some(y) {
                    failures.push(Failure::NotInverse { coord: y, back });
                }
                orbit.push((y, x));
            }
            _ => failures.push(Failure::TauNInv { coord: y, image }),
        }
    }
    for &x in &c_minus_pl {
        let mut z = Some(x);
        for power in 1..n {
            z = z.and_then(|w| ar::syzygy_raw(k, w));
            if z.is_none() {
                failures.push(Failure::Syzygy { coord: x, power });
                break;
            }
        }
    }
    for &y in &c_minus_ir {
        let mut z = Some(y);
        for power in 1..n {
            z = z.and_then(|w| ar::cosyzygy_raw(k, w));
            if z.is_none() {
                failures.push(Failure::Cosyzygy { coord: y, power });
                break;
            }
        }
    }
    Ok(Verdict { ok: failures.is_empty(), n, candidate: c.into_iter().collect(), orbit, failures })
}

/// Decides whether the `τ_n⁻`-closure of `P^L` is a
/// `(T^L, T^R, n)`-fractured subcategory.
pub fn check_fractured(k: &Kupisch, n: usize, f: &Fracturing) -> Result<Verdict> {
    require_n(n)?;
    let candidate = if n == 1 { k.all_modules() } else { generate_candidate(k, n, f) };
    check_candidate(k, n, f, &candidate)
}

/// Decides whether the algebra admits an n-cluster tilting subcategory.
pub fn check_nct(k: &Kupisch, n: usize) -> Result<Verdict> {
    check_fractured(k, n, &Fracturing::canonical(k))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sides {
    pub left_nct: bool,
    pub right_nct: bool,
    pub nct: bool,
}

pub fn classify_sides(verdict: &Verdict, f: &Fracturing) -> Result<Sides> {
    if !verdict.ok {
        return Err(Error::Verification("verdict is not ok".into()));
    }
    let left_nct = f.left.is_canonical();
    let right_nct = f.right.is_canonical();
    Ok(Sides { left_nct, right_nct, nct: left_nct && right_nct })
}

/// One side of a fractured gluing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FracturedAlgebra {
    pub kupisch: Kupisch,
    pub fracturing: Fracturing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Compatibility {
    pub compatible: bool,
    /// Whether `h` is at least the level of the left fracture of `A`.
    pub level_bound: bool,
}

fn restricted_ka(k: &Kupisch, fracture: &Fracture, side: Side, h: usize) -> Result<BTreeSet<Coord>> {
    if h == 0 || h > fracture.height {
        return Err(Error::Incompatible);
    }
    let mut out = BTreeSet::new();
    for &c in &fracture.coords {
        if abutments::is_in_foundation(k, side, h, c) {
            out.insert(abutments::footing_to_ka(k, side, h, c)?);
        }
    }
    Ok(out)
}

/// Compares the left fracture of `a` and the right fracture of `b`, both
/// restricted to the height-`h` foundation and read in `KA_h`.
pub fn compatibility_check(b: &FracturedAlgebra, a: &FracturedAlgebra, h: usize) -> Result<Compatibility> {
    let from_a = restricted_ka(&a.kupisch, &a.fracturing.left, Side::Left, h)?;
    let from_b = restricted_ka(&b.kupisch, &b.fracturing.right, Side::Right, h)?;
    Ok(Compatibility {
        compatible: from_a == from_b,
        level_bound: h >= a.fracturing.left.level,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct FracturedGlue {
    pub glued: Glued,
    pub fracturing: Fracturing,
    pub compatibility: Compatibility,
    pub verdict: Verdict,
}

/// Glues two fractured algebras and re-verifies the glued subcategory.
pub fn glue_fractured(b: &FracturedAlgebra, a: &FracturedAlgebra, h: usize, n: usize) -> Result<FracturedGlue> {
    let compatibility = compatibility_check(b, a, h)?;
    if !compatibility.compatible {
        return Err(Error::Incompatible);
    }
    let vb = check_fractured(&b.kupisch, n, &b.fracturing)?;
    let va = check_fractured(&a.kupisch, n, &a.fracturing)?;
    if !vb.ok || !va.ok {
        return Err(Error::Precondition("both components must pass the fractured check".into()));
    }
    let glued = gluing::glue(&b.kupisch, &a.kupisch, h)?;
    gluing::check_glue_invariants(&glued).map_err(|v| Error::Verification(v.to_string()))?;
    let lam = &glued.result;

    let left_coords: Vec<Coord> = if b.kupisch.m() > h {
        b.fracturing.left.coords.iter().map(|&y| glued.psi(y)).collect()
    } else {
        a.fracturing.left.coords.iter().map(|&x| glued.phi(x)).collect()
    };
    let right_coords: Vec<Coord> = if a.kupisch.m() > h {
        a.fracturing.right.coords.iter().map(|&x| glued.phi(x)).collect()
    } else {
        b.fracturing.right.coords.iter().map(|&y| glued.psi(y)).collect()
    };
    let fracturing = Fracturing::new(lam, &left_coords, &right_coords)?;

    let mut assembled: BTreeSet<Coord> = va.candidate.iter().map(|&x| glued.phi(x)).collect();
    assembled.extend(vb.candidate.iter().map(|&y| glued.psi(y)));
    let assembled: Vec<Coord> = assembled.into_iter().collect();
    let verdict = check_candidate(lam, n, &fracturing, &assembled)?;
    let fresh = check_fractured(lam, n, &fracturing)?;
    if !verdict.ok || fresh.candidate != assembled {
        return Err(Error::Verification(format!(
            "glued subcategory over {} does not re-verify",
            lam
        )));
    }
    Ok(FracturedGlue { glued, fracturing, compatibility, verdict })
}

/// One step of a slice completion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "step", rename_all = "kebab-case")]
pub enum TraceStep {
    /// A single vertex.
    Base,
    /// `Λ_{m,h}` carrying the slice on the left and its `τ_n⁻`-image on the right.
    Lambda { m: usize, h: usize, right_level: usize },
    /// `b ⊳ a` at height `h`.
    Glue { b: Kupisch, a: Kupisch, h: usize, result: Kupisch },
    /// Passage to the opposite algebra.
    Opposite { before: Kupisch, after: Kupisch },
}

#[derive(Debug, Clone, Serialize)]
pub struct Completion {
    pub kupisch: Kupisch,
    pub fracturing: Fracturing,
    pub verdict: Verdict,
    pub sides: Sides,
    pub trace: Vec<TraceStep>,
}

/// Builds an algebra whose fractured subcategory has the given slice as
/// fracture on the opposite side of `side`, and is `n`-cluster tilting on
/// `side`.
pub fn complete_slice(slice: &Slice, n: usize, side: Side) -> Result<Completion> {
    if n < 2 {
        return Err(Error::Parameter("slice completion needs n >= 2".into()));
    }
    let mut trace = Vec::new();
    let h = slice.height();
    let (kupisch, fracturing) = match side {
        Side::Right => {
            let k = complete_right(slice, n, &mut trace)?;
            let left = slice.coords();
            let f = Fracturing {
                left: tilting::is_fracture(&k, Side::Left, h, &left)?,
                right: Fracture::canonical(&k, Side::Right, abutments::max_right_height(&k))?,
            };
            (k, f)
        }
        Side::Left => {
            let dual = complete_right(&slice.dual(), n, &mut trace)?;
            let k = dual.opposite();
            trace.push(TraceStep::Opposite { before: dual, after: k.clone() });
            let right: Vec<Coord> = slice
                .coords()
                .into_iter()
                .map(|c| abutments::footing_from_ka(&k, Side::Right, h, c))
                .collect::<Result<_>>()?;
            let f = Fracturing {
                left: Fracture::canonical(&k, Side::Left, abutments::max_left_height(&k))?,
                right: tilting::is_fracture(&k, Side::Right, h, &right)?,
            };
            (k, f)
        }
    };
    fracturing.validate(&kupisch)?;
    let verdict = check_fractured(&kupisch, n, &fracturing)?;
    if !verdict.ok {
        return Err(Error::Verification(format!(
            "completion {} is not fractured for n = {n}",
            kupisch
        )));
    }
    let sides = classify_sides(&verdict, &fracturing)?;
    let honest = match side {
        Side::Right => sides.right_nct,
        Side::Left => sides.left_nct,
    };
    if !honest {
        return Err(Error::Verification(format!("completion is not {side} {n}-cluster tilting")));
    }
    Ok(Completion { kupisch, fracturing, verdict, sides, trace })
}

fn glue_step(b: &Kupisch, a: &Kupisch, h: usize, trace: &mut Vec<TraceStep>) -> Result<Kupisch> {
    let g = gluing::glue(b, a, h)?;
    gluing::check_glue_invariants(&g).map_err(|v| Error::Verification(v.to_string()))?;
    trace.push(TraceStep::Glue { b: b.clone(), a: a.clone(), h, result: g.result.clone() });
    Ok(g.result)
}

fn complete_right(slice: &Slice, n: usize, trace: &mut Vec<TraceStep>) -> Result<Kupisch> {
    let h = slice.height();
    if h == 1 {
        trace.push(TraceStep::Base);
        return Kupisch::linear(1);
    }
    if slice.i(h - 1) == 2 {
        let shifted = Slice::new(slice.rows[..h - 1].iter().map(|&i| i - 1).collect())?;
        let inner = complete_right(&shifted, n, trace)?;
        return glue_step(&Kupisch::linear(h)?, &inner, h - 1, trace);
    }

    let m = if n % 2 == 1 { n.div_ceil(2) * h } else { slice.i(1) + n * h / 2 };
    let lam = Kupisch::lambda(m, h)?;
    let mut right: BTreeSet<Coord> = BTreeSet::new();
    for c in slice.coords() {
        if c == Coord::new(1, h) {
            continue;
        }
        match ar::tau_n_inv_raw(&lam, n, Some(c)) {
            Some(y) => {
                right.insert(y);
            }
            None => {
                return Err(Error::Verification(format!(
                    "{} vanishes under the inverse {n}-translate over {}",
                    c, lam
                )))
            }
        }
    }
    right.insert(Coord::new(m - h + 1, h));
    let right: Vec<Coord> = right.into_iter().collect();
    let fracture = tilting::is_fracture(&lam, Side::Right, h, &right)?;
    let level = fracture.level;
    trace.push(TraceStep::Lambda { m, h, right_level: level });
    if level == 1 {
        return Ok(lam);
    }
    let inner_ka: Vec<Coord> = right
        .iter()
        .filter(|&&c| abutments::is_in_foundation(&lam, Side::Right, level, c))
        .map(|&c| abutments::footing_to_ka(&lam, Side::Right, level, c))
        .collect::<Result<_>>()?;
    let inner_slice = Slice::from_coords(level, &inner_ka)?;
    let inner = complete_right(&inner_slice, n, trace)?;
    glue_step(&lam, &inner, level, trace)
}

/// Orbit pairs as a map, convenient for lookups.
pub fn orbit_map(v: &Verdict) -> BTreeMap<Coord, Coord> {
    v.orbit.iter().copied().collect()
}
