//! Kupisch series and module coordinates.
//!
//! An acyclic Nakayama algebra with `m` vertices is the path algebra of
//! `1 → 2 → … → m` modulo monomial relations, and is determined by the tuple
//! `(d_1, …, d_m)` of lengths of its indecomposable projectives. Every
//! indecomposable module is an interval module, addressed here as `M(i, j)`:
//! the module of length `j` supported on the vertices `m−i−j+2 ..= m−i+1`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, Violation};

/// Coordinate `(i, j)` of an indecomposable module `M(i, j)`.
///
/// The zero module is represented by `None` wherever an operation can
/// produce it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Coord {
    pub i: usize,
    pub j: usize,
}

impl Coord {
    pub const fn new(i: usize, j: usize) -> Self {
        Coord { i, j }
    }
}

impl From<[usize; 2]> for Coord {
    fn from([i, j]: [usize; 2]) -> Self {
        Coord { i, j }
    }
}

impl From<Coord> for [usize; 2] {
    fn from(c: Coord) -> Self {
        [c.i, c.j]
    }
}

impl From<(usize, usize)> for Coord {
    fn from((i, j): (usize, usize)) -> Self {
        Coord { i, j }
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({},{})", self.i, self.j)
    }
}

/// A validated Kupisch series.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "KupischJson", into = "KupischJson")]
pub struct Kupisch {
    entries: Vec<usize>,
    /// `v[i-1]` is the largest `j` such that `M(i, j)` exists.
    v: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct KupischJson {
    kupisch: Vec<usize>,
}

impl TryFrom<KupischJson> for Kupisch {
    type Error = Error;
    fn try_from(raw: KupischJson) -> Result<Self> {
        Kupisch::new(raw.kupisch)
    }
}

impl From<Kupisch> for KupischJson {
    fn from(k: Kupisch) -> Self {
        KupischJson { kupisch: k.entries }
    }
}

/// Checks the Kupisch axioms, returning the first violated rule.
pub fn validate(entries: &[usize]) -> std::result::Result<(), Violation> {
    let m = entries.len();
    if m == 0 {
        return Err(Violation::Empty);
    }
    if entries[m - 1] != 1 {
        return Err(Violation::LastEntryNotOne { found: entries[m - 1] });
    }
    for (idx, &d) in entries[..m - 1].iter().enumerate() {
        if d < 2 {
            return Err(Violation::EntryBelowTwo { position: idx + 1 });
        }
    }
    for (idx, &d) in entries.iter().enumerate() {
        if d > m - idx {
            return Err(Violation::OverflowPastSink { position: idx + 1 });
        }
    }
    for idx in 1..m {
        if entries[idx - 1] > entries[idx] + 1 {
            return Err(Violation::KupischStep { position: idx + 1 });
        }
    }
    Ok(())
}

/// Projective-type data of a single module.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub projective: bool,
    pub injective: bool,
    /// Top vertex (the start of the interval).
    pub top: usize,
    /// Socle vertex (the end of the interval).
    pub socle: usize,
    pub support: (usize, usize),
    pub dim: usize,
}

/// A zero relation: the path of `length` arrows starting at `start`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Relation {
    pub start: usize,
    pub length: usize,
}

impl Relation {
    pub fn end(&self) -> usize {
        self.start + self.length
    }
}

/// Bound quiver presentation: the linear quiver on `vertices` vertices with
/// monomial relations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Presentation {
    pub vertices: usize,
    pub relations: Vec<Relation>,
}

impl Kupisch {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        validate(&entries)?;
        let m = entries.len();
        let mut v = vec![0; m];
        // M(i, j) has top vertex m-i-j+2, so for fixed i the admissible
        // lengths form an initial segment.
        for (slot, i) in v.iter_mut().zip(1..=m) {
            let mut j = 0;
            while j < m + 1 - i && j < entries[m - i - j] {
                j += 1;
            }
            *slot = j;
        }
        Ok(Kupisch { entries, v })
    }

    /// The series `(h^(m-h+1), h-1, …, 1)` of `KA_m / rad^h`.
    pub fn lambda(m: usize, h: usize) -> Result<Self> {
        if h == 0 || h > m {
            return Err(Error::Parameter(format!("need 1 <= h <= m, got m={m}, h={h}")));
        }
        if h == 1 && m > 1 {
            return Err(Error::Parameter(format!(
                "h = 1 only defines a connected algebra for m = 1, got m={m}"
            )));
        }
        let mut entries = vec![h; m - h + 1];
        entries.extend((1..h).rev());
        Kupisch::new(entries)
    }

    /// The hereditary algebra `KA_h`, i.e. `(h, h-1, …, 1)`.
    pub fn linear(h: usize) -> Result<Self> {
        Kupisch::lambda(h, h)
    }

    pub fn m(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Length `d_t` of the projective at vertex `t` (1-based).
    pub fn d(&self, t: usize) -> usize {
        self.entries[t - 1]
    }

    pub fn exists(&self, c: Coord) -> bool {
        let m = self.m();
        c.i >= 1 && c.j >= 1 && c.i + c.j <= m + 1 && c.j <= self.d(m + 2 - c.i - c.j)
    }

    /// Errors unless `c` is an existing coordinate.
    pub fn require(&self, c: Coord) -> Result<()> {
        if self.exists(c) {
            Ok(())
        } else {
            Err(Error::NoSuchModule { i: c.i, j: c.j })
        }
    }

    /// All indecomposables, ordered by `(i, j)`.
    pub fn all_modules(&self) -> Vec<Coord> {
        (1..=self.m())
            .flat_map(|i| (1..=self.v(i)).map(move |j| Coord::new(i, j)))
            .collect()
    }

    pub fn module_count(&self) -> usize {
        self.entries.iter().sum()
    }

    /// Largest module length on the co-diagonal `i + j = s`, for `2 <= s <= m+1`.
    pub fn u(&self, s: usize) -> usize {
        self.d(self.m() + 2 - s)
    }

    /// Largest module length on the diagonal with first coordinate `i`.
    pub fn v(&self, i: usize) -> usize {
        self.v[i - 1]
    }

    pub fn is_projective(&self, c: Coord) -> bool {
        c.j == self.u(c.i + c.j)
    }

    pub fn is_injective(&self, c: Coord) -> bool {
        c.j == self.v(c.i)
    }

    pub fn classify(&self, c: Coord) -> Result<Classification> {
        self.require(c)?;
        let m = self.m();
        let top = m + 2 - c.i - c.j;
        let socle = m + 1 - c.i;
        Ok(Classification {
            projective: self.is_projective(c),
            injective: self.is_injective(c),
            top,
            socle,
            support: (top, socle),
            dim: c.j,
        })
    }

    /// The indecomposable projective with top at vertex `t`.
    pub fn projective_at(&self, t: usize) -> Coord {
        let d = self.d(t);
        Coord::new(self.m() + 2 - t - d, d)
    }

    /// The indecomposable injective with socle at vertex `t`.
    pub fn injective_at(&self, t: usize) -> Coord {
        let i = self.m() + 1 - t;
        Coord::new(i, self.v(i))
    }

    pub fn projectives(&self) -> Vec<Coord> {
        let mut out: Vec<Coord> = (1..=self.m()).map(|t| self.projective_at(t)).collect();
        out.sort();
        out
    }

    pub fn injectives(&self) -> Vec<Coord> {
        let mut out: Vec<Coord> = (1..=self.m()).map(|t| self.injective_at(t)).collect();
        out.sort();
        out
    }

    pub fn presentation(&self) -> Presentation {
        let m = self.m();
        let relations = (1..=m)
            .filter(|&t| t + self.d(t) <= m && self.d(t + 1) >= self.d(t))
            .map(|t| Relation { start: t, length: self.d(t) })
            .collect();
        Presentation { vertices: m, relations }
    }

    /// Kupisch series of the opposite algebra.
    pub fn opposite(&self) -> Kupisch {
        Kupisch::new(self.v.clone()).expect("injective lengths form a Kupisch series")
    }

    /// Coordinate of the dual module `D(M(i, j))` over the opposite algebra.
    pub fn mirror(&self, c: Coord) -> Coord {
        Coord::new(self.m() + 2 - c.i - c.j, c.j)
    }

    /// Run-length rendering such as `2^6,3^13,1`.
    pub fn run_length(&self) -> String {
        let mut parts = Vec::new();
        let mut idx = 0;
        while idx < self.entries.len() {
            let d = self.entries[idx];
            let mut run = 1;
            while idx + run < self.entries.len() && self.entries[idx + run] == d {
                run += 1;
            }
            parts.push(if run == 1 { d.to_string() } else { format!("{d}^{run}") });
            idx += run;
        }
        parts.join(",")
    }
}

impl fmt::Display for Kupisch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.run_length())
    }
}

/// Parses `2,3,3,1` or the run-length form `2^6,3^13,2^3,1` into entries.
pub fn parse_entries(text: &str) -> Result<Vec<usize>> {
    let body = text.trim().trim_start_matches('(').trim_end_matches(')');
    let mut out = Vec::new();
    for part in body.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (value, count) = match part.split_once('^') {
            Some((v, c)) => (v.trim(), c.trim().trim_start_matches('(').trim_end_matches(')')),
            None => (part, "1"),
        };
        let value: usize = value
            .parse()
            .map_err(|_| Error::Parse(format!("bad entry `{part}`")))?;
        let count: usize = count
            .parse()
            .map_err(|_| Error::Parse(format!("bad repeat count in `{part}`")))?;
        out.extend(std::iter::repeat_n(value, count));
    }
    if out.is_empty() {
        return Err(Error::Parse("no entries".into()));
    }
    Ok(out)
}

impl FromStr for Kupisch {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.starts_with('{') {
            return serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()));
        }
        if trimmed.starts_with('[') {
            let entries: Vec<usize> =
                serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()))?;
            return Kupisch::new(entries);
        }
        Kupisch::new(parse_entries(trimmed)?)
    }
}
