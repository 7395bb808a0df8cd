//! Certified `(n, d)`-representation-finite Nakayama algebras.
//!
//! Every pair `(n, d)` with `d = kn + d'` is reached from a base algebra of
//! global dimension `g ≡ d (mod n)` by repeatedly prepending `n` entries `2`,
//! which glues on a copy of `Λ_{n+1,2}` at a simple module and raises the
//! global dimension by exactly `n`.

use serde::Serialize;

use crate::ar;
use crate::cluster::{self, Verdict};
use crate::error::{Error, Result};
use crate::gluing;
use crate::kupisch::Kupisch;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `Λ_{kn+1,2}`.
    LambdaM2,
    OddA,
    OddB,
    OddC,
    EvenA,
    EvenB,
    EvenC,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NdCertificate {
    pub n: usize,
    pub d: usize,
    pub kupisch: Kupisch,
    pub verdict: Verdict,
    pub gldim: usize,
    pub pd_source_injective: usize,
    pub trace: Trace,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Trace {
    pub family: Family,
    pub base: Kupisch,
    pub base_gldim: usize,
    /// Number of copies of `Λ_{n+1,2}` glued onto the base.
    pub extensions: usize,
}

fn series(runs: &[(usize, usize)]) -> Result<Kupisch> {
    let mut entries = Vec::new();
    for &(value, count) in runs {
        entries.extend(std::iter::repeat_n(value, count));
    }
    Kupisch::new(entries)
}

fn odd_family(n: usize, d: usize) -> Result<Family> {
    if n.is_multiple_of(2) || d <= n || d >= 2 * n {
        return Err(Error::Parameter(format!("odd family needs n odd and n < d < 2n, got n = {n}, d = {d}")));
    }
    Ok(if d.is_multiple_of(2) {
        Family::OddA
    } else if d == 2 * n - 1 {
        Family::OddC
    } else {
        Family::OddB
    })
}

/// Base algebra for odd `n` and `n < d < 2n`.
pub fn base_family_odd(n: usize, d: usize) -> Result<Kupisch> {
    match odd_family(n, d)? {
        Family::OddA => series(&[(2, d - n), (3, 3 * (n - d / 2) - 1), (2, d - n + 1), (1, 1)]),
        Family::OddC => series(&[(2, n - 1), (3, 3 * (n + 1) / 2 - 2), (2, 1), (1, 1)]),
        _ => {
            let h = n - (d - 1) / 2;
            let s = (d - n) / 2 * (h + 1) + 2 * h;
            let mut runs = vec![(2, d - n)];
            runs.extend((3..=h).map(|k| (k, k - 1)));
            runs.push((h + 1, s));
            runs.extend((3..=h).rev().map(|k| (k, k)));
            runs.extend([(2, 3), (1, 1)]);
            series(&runs)
        }
    }
}

fn even_family(n: usize, k: usize) -> Result<Family> {
    if n % 2 == 1 || k == 0 || k >= n {
        return Err(Error::Parameter(format!("even family needs n even and 0 < k < n, got n = {n}, k = {k}")));
    }
    Ok(if k.is_multiple_of(2) {
        Family::EvenA
    } else if k == n - 1 {
        Family::EvenC
    } else {
        Family::EvenB
    })
}

/// Base algebra for even `n` and `0 < k < n`. Its global dimension is
/// `n + k` for even `k` and `2n + k` for odd `k`.
pub fn base_family_even(n: usize, k: usize) -> Result<Kupisch> {
    match even_family(n, k)? {
        Family::EvenA => series(&[(2, k), (3, 3 * (n - k) / 2 - 1), (2, k + 1), (1, 1)]),
        Family::EvenB => series(&[(2, k), (3, 3 * (n - k.div_ceil(2))), (2, k + 1), (1, 1)]),
        _ => series(&[(3, 9 * n / 2 - 2), (2, 1), (1, 1)]),
    }
}

/// Glues `Λ_{n+1,2}` onto `k` at a simple module, that is, prepends `n`
/// entries `2`.
pub fn extend_by_n(k: &Kupisch, n: usize) -> Result<Kupisch> {
    if !cluster::check_nct(k, n)?.ok {
        return Err(Error::Precondition(format!("{k} is not {n}-cluster tilting")));
    }
    let g = ar::gldim(k);
    let pd = ar::pd(k, ar::source_injective(k))?;
    if pd != g {
        return Err(Error::Precondition(format!(
            "pd of the source injective is {pd}, but the global dimension is {g}"
        )));
    }
    let glued = gluing::glue(k, &Kupisch::lambda(n + 1, 2)?, 1)?;
    gluing::check_glue_invariants(&glued).map_err(|v| Error::Verification(v.to_string()))?;
    Ok(glued.result)
}

pub fn supported(n: usize, d: usize) -> bool {
    if n == 0 || d < n {
        return false;
    }
    n % 2 == 1 || d.is_multiple_of(2) || d >= 2 * n
}

fn base(n: usize, d: usize) -> Result<(Family, Kupisch, usize)> {
    let r = d % n;
    if r == 0 {
        return Ok((Family::LambdaM2, Kupisch::lambda(n + 1, 2)?, n));
    }
    if n % 2 == 1 {
        let g = n + r;
        return Ok((odd_family(n, g)?, base_family_odd(n, g)?, g));
    }
    let g = if r.is_multiple_of(2) { n + r } else { 2 * n + r };
    Ok((even_family(n, r)?, base_family_even(n, r)?, g))
}

/// Builds and fully verifies an `(n, d)`-representation-finite algebra.
pub fn construct(n: usize, d: usize) -> Result<NdCertificate> {
    if !supported(n, d) {
        return Err(Error::Unsupported { n, d });
    }
    let (family, base_kupisch, target) = base(n, d)?;
    let base_gldim = ar::gldim(&base_kupisch);
    if base_gldim != target || d < base_gldim {
        return Err(Error::Verification(format!(
            "base algebra {base_kupisch} has global dimension {base_gldim}, expected {target}"
        )));
    }
    let extensions = (d - base_gldim) / n;
    let mut kupisch = base_kupisch.clone();
    for _ in 0..extensions {
        kupisch = extend_by_n(&kupisch, n)?;
    }
    let verdict = cluster::check_nct(&kupisch, n)?;
    let gldim = ar::gldim(&kupisch);
    let pd_source_injective = ar::pd(&kupisch, ar::source_injective(&kupisch))?;
    if !verdict.ok || gldim != d || pd_source_injective != d {
        return Err(Error::Verification(format!(
            "{kupisch}: ok = {}, gldim = {gldim}, pd I(1) = {pd_source_injective}, wanted d = {d}",
            verdict.ok
        )));
    }
    Ok(NdCertificate {
        n,
        d,
        kupisch,
        verdict,
        gldim,
        pd_source_injective,
        trace: Trace { family, base: base_kupisch, base_gldim, extensions },
    })
}
