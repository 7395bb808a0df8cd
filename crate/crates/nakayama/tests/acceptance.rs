//! Acceptance suite: one line per criterion, `PASS` or `FAIL`, with the
//! measured time against its limit. Exits nonzero if any criterion fails.

mod oracle;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use nakayama::ar::{self, Direction};
use nakayama::cluster;
use nakayama::gluing;
use nakayama::ndgen;
use nakayama::tilting::{self, Fracturing, Slice};
use nakayama::{Coord, Error, Kupisch, Side};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<(), String>;

fn k(s: &str) -> Kupisch {
    s.parse().expect("valid series")
}

fn c(i: usize, j: usize) -> Coord {
    Coord::new(i, j)
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn certify(series: &Kupisch, n: usize, d: usize) -> Outcome {
    let v = cluster::check_nct(series, n).map_err(|e| e.to_string())?;
    ensure!(v.ok, "{series} is not {n}-cluster tilting: {:?}", v.failures.first());
    let g = ar::gldim(series);
    ensure!(g == d, "{series}: gldim {g}, expected {d}");
    let pd = ar::pd(series, ar::source_injective(series)).map_err(|e| e.to_string())?;
    ensure!(pd == d, "{series}: pd I(1) = {pd}, expected {d}");
    Ok(())
}

fn criterion_1() -> Outcome {
    let rows = [
        (10, "2,3^11,2^2,1"),
        (11, "2^2,3^2,4^3,5^13,4^4,3^3,2^3,1"),
        (12, "2^3,3^8,2^4,1"),
        (13, "2^4,3^2,4^14,3^3,2^3,1"),
        (14, "2^5,3^5,2^6,1"),
        (15, "2^6,3^13,2^3,1"),
        (16, "2^7,3^2,2^8,1"),
        (17, "2^8,3^13,2,1"),
    ];
    for (d, s) in rows {
        certify(&k(s), 9, d)?;
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    let rows = [
        (6, "2^6,1"),
        (8, "2^2,3^5,2^3,1"),
        (10, "2^4,3^2,2^5,1"),
        (13, "2,3^15,2^2,1"),
        (15, "2^3,3^12,2^4,1"),
        (17, "3^25,2,1"),
    ];
    for (d, s) in rows {
        certify(&k(s), 6, d)?;
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    for n in 2..=6 {
        for kk in 1..=5 {
            let l = Kupisch::lambda(kk * n + 1, 2).map_err(|e| e.to_string())?;
            let v = cluster::check_nct(&l, n).map_err(|e| e.to_string())?;
            ensure!(v.ok, "Λ_{{{},2}} is not {n}-CT", kk * n + 1);
            ensure!(ar::gldim(&l) == kk * n, "gldim of Λ_{{{},2}}", kk * n + 1);
            ensure!(v.candidate.len() == kk * n + kk + 1, "candidate size {} for n={n} k={kk}", v.candidate.len());
        }
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    for m in 2..=5 {
        let l = Kupisch::lambda(m, 2).map_err(|e| e.to_string())?;
        let n = m - 1;
        let projectives: Vec<Coord> = oracle::indecomposables(&l)
            .into_iter()
            .filter(|&x| oracle::is_projective(&l, x))
            .collect();
        let rest: Vec<Coord> = oracle::indecomposables(&l)
            .into_iter()
            .filter(|&x| !oracle::is_projective(&l, x))
            .collect();
        let mut found = Vec::new();
        for mask in 0u32..(1 << rest.len()) {
            let mut cand = projectives.clone();
            cand.extend((0..rest.len()).filter(|b| mask >> b & 1 == 1).map(|b| rest[b]));
            if oracle::is_n_cluster_tilting(&l, n, &cand) {
                cand.sort();
                found.push(cand);
            }
        }
        ensure!(found.len() == 1, "m = {m}: {} cluster tilting subcategories", found.len());
        let mut expected = projectives.clone();
        expected.push(c(m, 1));
        expected.sort();
        ensure!(found[0] == expected, "m = {m}: found {:?}", found[0]);
        let v = cluster::check_nct(&l, n).map_err(|e| e.to_string())?;
        ensure!(v.ok && v.candidate == expected, "m = {m}: library candidate differs");
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    let b = Kupisch::lambda(9, 4).map_err(|e| e.to_string())?;
    let a = Kupisch::lambda(6, 5).map_err(|e| e.to_string())?;
    let g = gluing::glue(&b, &a, 3).map_err(|e| e.to_string())?;
    ensure!(g.result == k("5,5,4^7,3,2,1"), "glued series {}", g.result);
    ensure!(cluster::check_nct(&g.result, 2).map_err(|e| e.to_string())?.ok, "glued algebra is not 2-CT");
    let t1 = ar::tau_n_inv(&g.result, 2, c(7, 1)).map_err(|e| e.to_string())?;
    let t2 = ar::tau_n_inv(&g.result, 2, c(7, 2)).map_err(|e| e.to_string())?;
    ensure!(t1 == Some(c(9, 4)), "τ₂⁻(7,1) = {t1:?}");
    ensure!(t2 == Some(c(10, 3)), "τ₂⁻(7,2) = {t2:?}");
    ensure!(!cluster::check_nct(&b, 2).map_err(|e| e.to_string())?.ok, "Λ_{{9,4}} passes at n = 2");
    ensure!(cluster::check_nct(&a, 2).map_err(|e| e.to_string())?.ok, "Λ_{{6,5}} fails at n = 2");
    Ok(())
}

fn criterion_6() -> Outcome {
    let mut compared = 0usize;
    for m in 1..=15 {
        for h in 1..=m {
            let Ok(l) = Kupisch::lambda(m, h) else { continue };
            for n in 1..=6 {
                for x in l.all_modules() {
                    for dir in [Direction::Forward, Direction::Backward] {
                        let stepwise = match dir {
                            Direction::Forward => ar::tau_n(&l, n, x),
                            Direction::Backward => ar::tau_n_inv(&l, n, x),
                        }
                        .map_err(|e| e.to_string())?;
                        let excluded = match dir {
                            Direction::Forward => l.is_projective(x),
                            Direction::Backward => l.is_injective(x),
                        };
                        let closed = ar::tau_n_closed_lambda_mh(m, h, n, x, dir);
                        if excluded {
                            ensure!(closed.is_err() && stepwise.is_none(), "Λ_{{{m},{h}}} n={n} {x}: excluded case");
                        } else {
                            let closed = closed.map_err(|e| e.to_string())?;
                            ensure!(closed == stepwise, "Λ_{{{m},{h}}} n={n} {x} {dir:?}: {closed:?} vs {stepwise:?}");
                        }
                        compared += 1;
                    }
                }
            }
        }
    }
    ensure!(compared > 10_000, "only {compared} comparisons");
    Ok(())
}

fn criterion_7() -> Outcome {
    for m in 1..=6 {
        for l in oracle::all_kupisch(m) {
            let mods = oracle::indecomposables(&l);
            ensure!(mods == l.all_modules(), "{l}: module sets differ");
            for &x in &mods {
                let rep = oracle::coord_to_rep(m, x);
                let cl = l.classify(x).map_err(|e| e.to_string())?;
                ensure!(cl.projective == oracle::is_projective(&l, x), "{l} {x}: projectivity");
                ensure!(cl.injective == oracle::is_injective(&l, x), "{l} {x}: injectivity");
                let top = rep.top();
                let soc = rep.socle();
                ensure!(top[cl.top - 1] == 1 && top.iter().sum::<usize>() == 1, "{l} {x}: top");
                ensure!(soc[cl.socle - 1] == 1 && soc.iter().sum::<usize>() == 1, "{l} {x}: socle");
                ensure!(cl.dim == rep.total_dim(), "{l} {x}: dimension");
                ensure!(cl.support == (cl.top, cl.socle), "{l} {x}: support");
                let omega = oracle::dims_to_coord(&oracle::syzygy_dims(&l, &rep, 1));
                ensure!(omega == ar::syzygy(&l, x).unwrap(), "{l} {x}: syzygy {omega:?}");
                let coomega = oracle::dims_to_coord(&oracle::cosyzygy_dims(&l, &rep, 2));
                ensure!(coomega == ar::cosyzygy(&l, x).unwrap(), "{l} {x}: cosyzygy {coomega:?}");
            }
        }
    }
    for h in 1..=6 {
        let ka = Kupisch::linear(h).map_err(|e| e.to_string())?;
        let mods = ka.all_modules();
        for &x in &mods {
            for &y in &mods {
                let (rx, ry) = (oracle::coord_to_rep(h, x), oracle::coord_to_rep(h, y));
                let hom = tilting::hom_dim_ka(h, x, y).map_err(|e| e.to_string())?;
                ensure!(hom == oracle::hom_dim(&rx, &ry), "KA_{h} hom({x},{y})");
                let ext = tilting::ext1_dim_ka(h, x, y).map_err(|e| e.to_string())?;
                ensure!(ext == oracle::ext1_dim(&ka, &rx, &ry), "KA_{h} ext({x},{y})");
            }
        }
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    let catalan = [1usize, 1, 2, 5, 14, 42];
    for (h, &expected) in catalan.iter().enumerate().skip(1) {
        let got = tilting::enumerate_tilting(h).len();
        ensure!(got == expected, "h = {h}: {got} tilting modules");
    }
    for h in 1..=6 {
        let slices = tilting::enumerate_slices(h);
        ensure!(slices.len() == 1 << (h - 1), "h = {h}: {} slices", slices.len());
        for s in slices {
            ensure!(tilting::is_tilting(h, &s.coords()).unwrap(), "slice {:?} is not tilting", s.rows);
        }
    }
    Ok(())
}

fn random_kupisch(rng: &mut StdRng, m: usize) -> Kupisch {
    let mut entries = vec![1usize; m];
    for t in (0..m.saturating_sub(1)).rev() {
        let hi = (entries[t + 1] + 1).min(m - t);
        entries[t] = rng.gen_range(2..=hi);
    }
    Kupisch::new(entries).expect("generated series is valid")
}

fn criterion_9() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut pairs = 0;
    while pairs < 600 {
        let (mb, ma) = (rng.gen_range(1..=12), rng.gen_range(1..=12));
        let (b, a) = (random_kupisch(&mut rng, mb), random_kupisch(&mut rng, ma));
        let hmax = nakayama::abutments::max_right_height(&b).min(nakayama::abutments::max_left_height(&a));
        let h = rng.gen_range(1..=hmax);
        let g = gluing::glue(&b, &a, h).map_err(|e| e.to_string())?;
        let mut concat = a.entries()[..ma - h].to_vec();
        concat.extend_from_slice(b.entries());
        ensure!(g.result.entries() == concat.as_slice(), "{b} ⊳ {a} at {h}: concatenation");
        ensure!(
            g.result.module_count() + h * (h + 1) / 2 == a.module_count() + b.module_count(),
            "{b} ⊳ {a} at {h}: module count"
        );
        let report = gluing::check_glue_invariants(&g).map_err(|e| format!("{b} ⊳ {a} at {h}: {e}"))?;
        ensure!(
            report.gldim_a.max(report.gldim_b) <= report.gldim && report.gldim <= report.gldim_a + report.gldim_b,
            "{b} ⊳ {a} at {h}: gldim bounds"
        );
        gluing::dispatch_check(&g).map_err(|e| format!("{b} ⊳ {a} at {h}: {e}"))?;
        pairs += 1;
    }
    Ok(())
}

fn criterion_10() -> Outcome {
    let slice = Slice::new(vec![2, 2, 1, 1, 1]).map_err(|e| e.to_string())?;
    let out = cluster::complete_slice(&slice, 4, Side::Right).map_err(|e| e.to_string())?;
    ensure!(out.kupisch == k("2^3,3^5,5^8,4,3,2,1"), "completion {}", out.kupisch);
    ensure!(out.verdict.ok && out.sides.right_nct, "completion is not right 4-CT");

    let l = Kupisch::lambda(12, 5).map_err(|e| e.to_string())?;
    let left = [c(2, 1), c(2, 2), c(1, 3), c(1, 4), c(1, 5)];
    let right = [c(11, 1), c(10, 2), c(10, 3), c(9, 4), c(8, 5)];
    let f = Fracturing::new(&l, &left, &right).map_err(|e| e.to_string())?;
    let v = cluster::check_fractured(&l, 4, &f).map_err(|e| e.to_string())?;
    ensure!(v.ok, "Λ_{{12,5}} slice fracturing fails: {:?}", v.failures);
    let mut want: BTreeSet<Coord> = (1..=8).map(|i| c(i, 5)).collect();
    want.extend(left);
    want.extend(right);
    ensure!(v.candidate == want.into_iter().collect::<Vec<_>>(), "candidate {:?}", v.candidate);
    ensure!(v.candidate.len() == 16, "candidate size {}", v.candidate.len());
    Ok(())
}

fn criterion_11() -> Outcome {
    let mut certified = 0;
    for n in 1..=9 {
        for d in 1..=30 {
            match ndgen::construct(n, d) {
                Ok(cert) => {
                    ensure!(ndgen::supported(n, d), "({n},{d}) built but unsupported");
                    ensure!(cert.verdict.ok && cert.gldim == d && cert.pd_source_injective == d, "({n},{d}) certificate");
                    certify(&cert.kupisch, n, d)?;
                    certified += 1;
                }
                Err(Error::Unsupported { .. }) => {
                    ensure!(!ndgen::supported(n, d), "({n},{d}) supported but rejected");
                }
                Err(e) => return Err(format!("({n},{d}): {e}")),
            }
        }
    }
    ensure!(certified > 200, "only {certified} certificates");
    Ok(())
}

struct Criterion {
    id: usize,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() {
    let criteria = [
        Criterion { id: 1, name: "n=9 table", limit: Duration::from_secs(1), run: criterion_1 },
        Criterion { id: 2, name: "n=6 table", limit: Duration::from_secs(1), run: criterion_2 },
        Criterion { id: 3, name: "Λ_{kn+1,2} grid", limit: Duration::from_secs(1), run: criterion_3 },
        Criterion { id: 4, name: "Λ_{m,2} uniqueness by brute force", limit: Duration::from_secs(10), run: criterion_4 },
        Criterion { id: 5, name: "motivating gluing", limit: Duration::from_secs(1), run: criterion_5 },
        Criterion { id: 6, name: "closed-form τ_n on Λ_{m,h}", limit: Duration::from_secs(30), run: criterion_6 },
        Criterion { id: 7, name: "matrix oracle equivalence", limit: Duration::from_secs(60), run: criterion_7 },
        Criterion { id: 8, name: "tilting combinatorics", limit: Duration::from_secs(10), run: criterion_8 },
        Criterion { id: 9, name: "gluing invariants on random pairs", limit: Duration::from_secs(60), run: criterion_9 },
        Criterion { id: 10, name: "worked slice completion", limit: Duration::from_secs(5), run: criterion_10 },
        Criterion { id: 11, name: "construct(n,d) sweep", limit: Duration::from_secs(60), run: criterion_11 },
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for cr in &criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(cr.run))
            .unwrap_or_else(|p| Err(p.downcast_ref::<String>().cloned().unwrap_or_else(|| "panicked".into())));
        let elapsed = start.elapsed();
        let verdict = match (&outcome, elapsed <= cr.limit) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => "FAIL (too slow)".to_string(),
            (Err(msg), _) => format!("FAIL ({msg})"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!(
            "criterion {:>2} {:<36} {} in {:.3}s (limit {}s)",
            cr.id,
            cr.name,
            verdict,
            elapsed.as_secs_f64(),
            cr.limit.as_secs()
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
