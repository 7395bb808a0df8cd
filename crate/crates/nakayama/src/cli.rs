//! Command-line front end. The `nakayama` binary is a thin wrapper around
//! [`run`], which keeps every command testable in-process.
//!
//! Exit codes: 0 success (or an ok verdict), 1 a negative verdict, 2 an
//! error. With `--json`, results and errors are written to stdout as JSON.

use std::io::{BufRead, Write};

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::abutments::{self, Side};
use crate::ar;
use crate::cluster::{self, Verdict};
use crate::error::{Error, Result};
use crate::gluing;
use crate::kupisch::{Coord, Kupisch, Relation};
use crate::ndgen;
use crate::render::{self, Format, Labels, RenderSpec};
use crate::tilting::{self, Fracture, Fracturing, Slice};

#[derive(Debug, Parser)]
#[command(name = "nakayama", version, about = "Representation theory of acyclic Nakayama algebras")]
pub struct Cli {
    /// Machine-readable JSON output, including errors.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a Kupisch series and summarize the algebra.
    Validate {
        /// Kupisch series such as `2^6,3^13,2^3,1`; read one per line from stdin when omitted.
        #[arg(long)]
        kupisch: Option<String>,
    },
    /// Print the Auslander-Reiten quiver.
    ArQuiver {
        #[arg(long)]
        kupisch: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        #[arg(long, value_enum, default_value_t = Labels::Coords)]
        labels: Labels,
        /// Modules to highlight, e.g. `7,1;9,4`.
        #[arg(long)]
        highlight: Option<String>,
        /// Highlight the n-cluster tilting candidate for this n.
        #[arg(long)]
        candidate: Option<usize>,
    },
    /// Decide whether the algebra admits an n-cluster tilting subcategory.
    CheckNct {
        #[arg(long)]
        kupisch: Option<String>,
        #[arg(long)]
        n: usize,
    },
    /// Check a fractured subcategory for a given fracturing.
    CheckFractured {
        #[arg(long)]
        kupisch: String,
        #[arg(long)]
        n: usize,
        /// Left fracture: fracture JSON, a JSON coordinate list, or `2,1;2,2;...`.
        #[arg(long)]
        left: Option<String>,
        #[arg(long)]
        right: Option<String>,
        /// Candidate to verify instead of the generated one: a verdict JSON
        /// (inline or a file path) or a coordinate list.
        #[arg(long)]
        candidate: Option<String>,
    },
    /// Glue `b ⊳ a` along abutments of the given height.
    Glue {
        #[arg(long)]
        b: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        height: usize,
        /// Verify the gluing invariants and dispatch identities.
        #[arg(long)]
        check: bool,
    },
    /// Construct a certified (n,d)-representation-finite algebra.
    ConstructNd {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value_t = Emit::Kupisch)]
        emit: Emit,
    },
    /// Complete a slice of KA_h to a one-sided n-cluster tilting algebra.
    CompleteSlice {
        #[arg(long)]
        h: usize,
        /// The rows `i_1,...,i_h` of the slice.
        #[arg(long)]
        slice: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "right")]
        side: Side,
    },
    /// List abutments and enumerate fractures.
    Fractures {
        #[arg(long)]
        kupisch: Option<String>,
        #[arg(long)]
        side: Option<Side>,
        /// Height of the abutment to enumerate; defaults to the maximal one.
        #[arg(long)]
        height: Option<usize>,
        /// Enumerate every fracture of the chosen abutment.
        #[arg(long)]
        enumerate: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Emit {
    Quiver,
    Kupisch,
    Certificate,
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let json = args.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            if json {
                let _ = writeln!(stdout, "{}", json!({"error": "usage", "message": e.to_string().trim()}));
            } else {
                let _ = write!(stderr, "{}", e.render());
            }
            return 2;
        }
    };
    let mut ctx = Ctx { json: cli.json, out: stdout, err: stderr };
    match dispatch(&cli.command, stdin, &mut ctx) {
        Ok(code) => code,
        Err(e) => {
            ctx.error(&e);
            2
        }
    }
}

struct Ctx<'a> {
    json: bool,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn emit(&mut self, value: &impl Serialize, text: impl FnOnce() -> String) {
        if self.json {
            let _ = writeln!(self.out, "{}", serde_json::to_string(value).expect("output serializes"));
        } else {
            let _ = write!(self.out, "{}", text());
        }
    }

    fn error(&mut self, e: &Error) {
        if self.json {
            let mut body = json!({"error": error_kind(e), "message": e.to_string()});
            if let Error::Invalid(v) = e {
                body["violation"] = json!(v.name());
            }
            let _ = writeln!(self.out, "{body}");
        } else {
            let _ = writeln!(self.err, "error: {e}");
        }
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Invalid(_) => "invalid-kupisch",
        Error::NoSuchModule { .. } => "no-such-module",
        Error::Parameter(_) => "parameter",
        Error::NotAbutment { .. } => "not-abutment",
        Error::OutsideFoundation { .. } => "outside-foundation",
        Error::NotTilting(_) => "not-tilting",
        Error::NotSlice(_) => "not-slice",
        Error::Unsupported { .. } => "unsupported",
        Error::Precondition(_) => "precondition",
        Error::Incompatible => "incompatible",
        Error::Verification(_) => "verification",
        Error::Parse(_) => "parse",
    }
}

fn dispatch(cmd: &Command, stdin: &mut dyn BufRead, ctx: &mut Ctx<'_>) -> Result<i32> {
    match cmd {
        Command::Validate { kupisch } => per_series(kupisch, stdin, ctx, validate),
        Command::ArQuiver { kupisch, format, labels, highlight, candidate } => {
            per_series(kupisch, stdin, ctx, |k, ctx| ar_quiver(k, *format, *labels, highlight.as_deref(), *candidate, ctx))
        }
        Command::CheckNct { kupisch, n } => per_series(kupisch, stdin, ctx, |k, ctx| check_nct(k, *n, ctx)),
        Command::CheckFractured { kupisch, n, left, right, candidate } => {
            check_fractured(kupisch, *n, left.as_deref(), right.as_deref(), candidate.as_deref(), ctx)
        }
        Command::Glue { b, a, height, check } => glue(b, a, *height, *check, ctx),
        Command::ConstructNd { n, d, emit } => construct_nd(*n, *d, *emit, ctx),
        Command::CompleteSlice { h, slice, n, side } => complete_slice(*h, slice, *n, *side, ctx),
        Command::Fractures { kupisch, side, height, enumerate } => {
            per_series(kupisch, stdin, ctx, |k, ctx| fractures(k, *side, *height, *enumerate, ctx))
        }
    }
}

/// Runs `f` on the given series, or on every nonblank stdin line when no
/// series is given. The exit code is the worst one seen.
fn per_series(
    kupisch: &Option<String>,
    stdin: &mut dyn BufRead,
    ctx: &mut Ctx<'_>,
    mut f: impl FnMut(&str, &mut Ctx<'_>) -> Result<i32>,
) -> Result<i32> {
    if let Some(k) = kupisch {
        if k != "-" {
            return f(k, ctx);
        }
    }
    let mut worst = 0;
    let mut seen = false;
    for line in stdin.lines() {
        let line = line.map_err(|e| Error::Parse(e.to_string()))?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        seen = true;
        let code = match f(line, ctx) {
            Ok(code) => code,
            Err(e) => {
                ctx.error(&e);
                2
            }
        };
        worst = worst.max(code);
    }
    if !seen {
        return Err(Error::Parse("no Kupisch series given".into()));
    }
    Ok(worst)
}

fn parse_coords(text: &str) -> Result<Vec<Coord>> {
    let t = text.trim();
    if t.starts_with('[') {
        return serde_json::from_str(t).map_err(|e| Error::Parse(e.to_string()));
    }
    t.split(';')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            let p = p.trim_start_matches("M").trim_start_matches('(').trim_end_matches(')');
            let (i, j) = p.split_once(',').ok_or_else(|| Error::Parse(format!("bad coordinate `{p}`")))?;
            let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad coordinate `{p}`")));
            Ok(Coord::new(parse(i)?, parse(j)?))
        })
        .collect()
}

#[derive(Serialize)]
struct Summary<'a> {
    valid: bool,
    kupisch: &'a Kupisch,
    vertices: usize,
    modules: usize,
    gldim: usize,
    left_abutment_height: usize,
    right_abutment_height: usize,
    relations: &'a [Relation],
}

fn validate(text: &str, ctx: &mut Ctx<'_>) -> Result<i32> {
    let k: Kupisch = text.parse()?;
    let p = k.presentation();
    let s = Summary {
        valid: true,
        kupisch: &k,
        vertices: k.m(),
        modules: k.module_count(),
        gldim: ar::gldim(&k),
        left_abutment_height: abutments::max_left_height(&k),
        right_abutment_height: abutments::max_right_height(&k),
        relations: &p.relations,
    };
    ctx.emit(&s, || {
        let rels: Vec<String> = p.relations.iter().map(|r| format!("{}->{}", r.start, r.end())).collect();
        format!(
            "{k}: valid, {} vertices, {} indecomposables, gldim {}, abutments left {} right {}, zero relations [{}]\n",
            s.vertices,
            s.modules,
            s.gldim,
            s.left_abutment_height,
            s.right_abutment_height,
            rels.join(", ")
        )
    });
    Ok(0)
}

fn ar_quiver(
    text: &str,
    format: Format,
    labels: Labels,
    highlight: Option<&str>,
    candidate: Option<usize>,
    ctx: &mut Ctx<'_>,
) -> Result<i32> {
    let k: Kupisch = text.parse()?;
    let mut hl = match highlight {
        Some(h) => parse_coords(h)?,
        None => Vec::new(),
    };
    if let Some(n) = candidate {
        hl.extend(cluster::check_nct(&k, n)?.candidate);
    }
    let format = if ctx.json { Format::Json } else { format };
    let text = render::render(&ar::ar_quiver(&k), &RenderSpec { format, highlight: hl, labels })?;
    let _ = write!(ctx.out, "{text}");
    Ok(0)
}

#[derive(Serialize, Deserialize)]
struct CheckReport {
    kupisch: Kupisch,
    fracturing: Fracturing,
    #[serde(flatten)]
    verdict: Verdict,
}

fn verdict_text(k: &Kupisch, v: &Verdict) -> String {
    let mut out = format!(
        "{k}: n = {} {}; candidate has {} indecomposables\n",
        v.n,
        if v.ok { "ok" } else { "NOT ok" },
        v.candidate.len()
    );
    let members: Vec<String> = v.candidate.iter().map(Coord::to_string).collect();
    out.push_str(&format!("  C = {{{}}}\n", members.join(", ")));
    for f in &v.failures {
        out.push_str(&format!("  condition ({}) fails: {}\n", f.condition(), f));
    }
    out
}

fn report(k: Kupisch, fracturing: Fracturing, verdict: Verdict, ctx: &mut Ctx<'_>) -> i32 {
    let code = if verdict.ok { 0 } else { 1 };
    let text = verdict_text(&k, &verdict);
    ctx.emit(&CheckReport { kupisch: k, fracturing, verdict }, || text);
    code
}

fn check_nct(text: &str, n: usize, ctx: &mut Ctx<'_>) -> Result<i32> {
    let k: Kupisch = text.parse()?;
    let v = cluster::check_nct(&k, n)?;
    Ok(report(k.clone(), Fracturing::canonical(&k), v, ctx))
}

fn parse_fracture(k: &Kupisch, side: Side, text: &str) -> Result<Fracture> {
    let height = abutments::max_height(k, side);
    let t = text.trim();
    if t.starts_with('{') {
        let f: Fracture = serde_json::from_str(t).map_err(|e| Error::Parse(e.to_string()))?;
        if f.side != side {
            return Err(Error::Parse(format!("expected a {side} fracture")));
        }
        return tilting::is_fracture(k, side, f.height, &f.coords);
    }
    tilting::is_fracture(k, side, height, &parse_coords(t)?)
}

fn read_json_arg(text: &str) -> Result<Value> {
    let t = text.trim();
    let body = if t.starts_with('{') || t.starts_with('[') {
        t.to_string()
    } else {
        std::fs::read_to_string(t).map_err(|e| Error::Parse(format!("{t}: {e}")))?
    };
    serde_json::from_str(&body).map_err(|e| Error::Parse(e.to_string()))
}

fn check_fractured(
    text: &str,
    n: usize,
    left: Option<&str>,
    right: Option<&str>,
    candidate: Option<&str>,
    ctx: &mut Ctx<'_>,
) -> Result<i32> {
    let k: Kupisch = text.parse()?;
    let canonical = Fracturing::canonical(&k);
    let supplied: Option<Value> = candidate.map(read_json_arg).transpose()?;
    let from_report: Option<Fracturing> = supplied
        .as_ref()
        .and_then(|v| v.get("fracturing"))
        .map(|f| serde_json::from_value(f.clone()).map_err(|e| Error::Parse(e.to_string())))
        .transpose()?;
    let base = from_report.unwrap_or(canonical);
    let fracturing = Fracturing {
        left: match left {
            Some(l) => parse_fracture(&k, Side::Left, l)?,
            None => base.left,
        },
        right: match right {
            Some(r) => parse_fracture(&k, Side::Right, r)?,
            None => base.right,
        },
    };
    let verdict = match supplied {
        Some(v) => {
            let coords = match v.get("candidate") {
                Some(c) => c.clone(),
                None => v,
            };
            let coords: Vec<Coord> = serde_json::from_value(coords).map_err(|e| Error::Parse(e.to_string()))?;
            cluster::check_candidate(&k, n, &fracturing, &coords)?
        }
        None => cluster::check_fractured(&k, n, &fracturing)?,
    };
    Ok(report(k, fracturing, verdict, ctx))
}

fn glue(b: &str, a: &str, height: usize, check: bool, ctx: &mut Ctx<'_>) -> Result<i32> {
    let (b, a): (Kupisch, Kupisch) = (b.parse()?, a.parse()?);
    let g = gluing::glue(&b, &a, height)?;
    if !check {
        ctx.emit(&g, || format!("{}\n", g.result));
        return Ok(0);
    }
    let invariants = gluing::check_glue_invariants(&g);
    let dispatch = gluing::dispatch_check(&g);
    let ok = invariants.is_ok() && dispatch.is_ok();
    let body = json!({
        "glued": &g,
        "ok": ok,
        "invariants": match &invariants { Ok(r) => json!(r), Err(e) => json!({"violation": e.to_string()}) },
        "dispatch": match &dispatch { Ok(n) => json!({"checked": n}), Err(e) => json!({"violation": e.to_string()}) },
    });
    ctx.emit(&body, || {
        let mut s = format!("{}\n", g.result);
        match &invariants {
            Ok(r) => s.push_str(&format!(
                "  invariants ok: {} indecomposables, gldim {} within [{}, {}]\n",
                r.modules,
                r.gldim,
                r.gldim_a.max(r.gldim_b),
                r.gldim_a + r.gldim_b
            )),
            Err(e) => s.push_str(&format!("  invariant violated: {e}\n")),
        }
        match &dispatch {
            Ok(n) => s.push_str(&format!("  dispatch ok: {n} identities\n")),
            Err(e) => s.push_str(&format!("  dispatch violated: {e}\n")),
        }
        s
    });
    Ok(if ok { 0 } else { 1 })
}

fn construct_nd(n: usize, d: usize, emit: Emit, ctx: &mut Ctx<'_>) -> Result<i32> {
    let cert = ndgen::construct(n, d)?;
    match emit {
        Emit::Certificate => {
            let text = serde_json::to_string_pretty(&cert).expect("certificate serializes");
            let _ = writeln!(ctx.out, "{text}");
        }
        Emit::Kupisch => ctx.emit(&cert.kupisch, || format!("{}\n", cert.kupisch)),
        Emit::Quiver => {
            let format = if ctx.json { Format::Json } else { Format::Ascii };
            let spec = RenderSpec { format, highlight: cert.verdict.candidate.clone(), labels: Labels::Coords };
            let text = render::render(&ar::ar_quiver(&cert.kupisch), &spec)?;
            let _ = write!(ctx.out, "{text}");
        }
    }
    Ok(0)
}

fn complete_slice(h: usize, rows: &str, n: usize, side: Side, ctx: &mut Ctx<'_>) -> Result<i32> {
    let rows = rows
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad slice entry `{p}`"))))
        .collect::<Result<Vec<_>>>()?;
    if rows.len() != h {
        return Err(Error::NotSlice(h));
    }
    let out = cluster::complete_slice(&Slice::new(rows)?, n, side)?;
    ctx.emit(&out, || {
        format!(
            "{}: {side} {n}-cluster tilting (left {}, right {}), candidate has {} indecomposables, {} construction steps\n",
            out.kupisch,
            out.sides.left_nct,
            out.sides.right_nct,
            out.verdict.candidate.len(),
            out.trace.len()
        )
    });
    Ok(0)
}

fn fractures(text: &str, side: Option<Side>, height: Option<usize>, enumerate: bool, ctx: &mut Ctx<'_>) -> Result<i32> {
    let k: Kupisch = text.parse()?;
    let sides = match side {
        Some(s) => vec![s],
        None => vec![Side::Left, Side::Right],
    };
    let mut body = Vec::new();
    let mut text_out = String::new();
    for s in sides {
        let heights: Vec<usize> = (1..=abutments::max_height(&k, s)).collect();
        let h = height.unwrap_or(abutments::max_height(&k, s));
        let apexes: Vec<Coord> = abutments::abutments(&k, s).into_iter().map(|a| a.apex).collect();
        text_out.push_str(&format!(
            "{s}: heights 1..={}, apexes {}\n",
            heights.len(),
            apexes.iter().map(Coord::to_string).collect::<Vec<_>>().join(" ")
        ));
        let mut list = Vec::new();
        if enumerate {
            for t in tilting::enumerate_tilting(h) {
                let f = Fracture::from_ka(&k, s, h, &t)?;
                text_out.push_str(&format!(
                    "  level {}: {}\n",
                    f.level,
                    f.coords.iter().map(Coord::to_string).collect::<Vec<_>>().join(" ")
                ));
                list.push(f);
            }
        }
        body.push(json!({"side": s, "heights": heights, "apexes": apexes, "fractures": list}));
    }
    ctx.emit(&body, || text_out);
    Ok(0)
}
