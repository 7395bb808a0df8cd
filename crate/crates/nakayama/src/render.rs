//! Text renderings of Auslander–Reiten quivers.
//!
//! Highlighted modules are drawn encircled and the translation is drawn
//! dotted. Vertices are emitted in `(i, j)` order so that identical inputs
//! give byte-identical output.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::ar::ArQuiver;
use crate::error::{Error, Result};
use crate::kupisch::Coord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Ascii,
    Dot,
    Tikz,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Labels {
    #[default]
    Coords,
    /// The support interval of the module, as vertex numbers.
    Dims,
    None,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RenderSpec {
    pub format: Format,
    pub highlight: Vec<Coord>,
    pub labels: Labels,
}

fn label(m: usize, c: Coord, labels: Labels) -> String {
    match labels {
        Labels::Coords => format!("{},{}", c.i, c.j),
        Labels::Dims => {
            let top = m + 2 - c.i - c.j;
            let socle = m + 1 - c.i;
            if top == socle {
                top.to_string()
            } else {
                format!("{top}-{socle}")
            }
        }
        Labels::None => "*".to_string(),
    }
}

fn node_id(c: Coord) -> String {
    format!("m{}_{}", c.i, c.j)
}

/// Number of vertices of the algebra, read off the quiver.
fn vertex_count(q: &ArQuiver) -> usize {
    q.vertices.iter().map(|c| c.i + c.j - 1).max().unwrap_or(0)
}

pub fn render(q: &ArQuiver, spec: &RenderSpec) -> Result<String> {
    for &c in &spec.highlight {
        if !q.contains(c) {
            return Err(Error::NoSuchModule { i: c.i, j: c.j });
        }
    }
    let hl: BTreeSet<Coord> = spec.highlight.iter().copied().collect();
    Ok(match spec.format {
        Format::Ascii => ascii(q, &hl, spec.labels),
        Format::Dot => dot(q, &hl, spec.labels),
        Format::Tikz => tikz(q, &hl, spec.labels),
        Format::Json => json(q, &hl),
    })
}

fn ascii(q: &ArQuiver, hl: &BTreeSet<Coord>, labels: Labels) -> String {
    let m = vertex_count(q);
    let rows = q.vertices.iter().map(|c| c.j).max().unwrap_or(0);
    let width = q.vertices.iter().map(|&c| label(m, c, labels).len()).max().unwrap_or(1) + 2;
    let mut out = String::new();
    for j in (1..=rows).rev() {
        let mut line = String::new();
        for s in 2..=m + 1 {
            let cell = if s > j {
                let c = Coord::new(s - j, j);
                if q.contains(c) {
                    let text = label(m, c, labels);
                    if hl.contains(&c) {
                        format!("[{text}]")
                    } else {
                        format!(" {text} ")
                    }
                } else {
                    String::new()
                }
            } else {
                String::new()
            };
            let _ = write!(line, "{cell:^width$}");
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn dot(q: &ArQuiver, hl: &BTreeSet<Coord>, labels: Labels) -> String {
    let m = vertex_count(q);
    let mut out = String::from("digraph ar {\n  rankdir=LR;\n  node [shape=plaintext];\n");
    for &c in &q.vertices {
        let extra = if hl.contains(&c) { ", shape=circle" } else { "" };
        let _ = writeln!(out, "  {} [label=\"{}\"{}];", node_id(c), label(m, c, labels), extra);
    }
    for &(s, t) in &q.arrows {
        let _ = writeln!(out, "  {} -> {};", node_id(s), node_id(t));
    }
    for &(x, t) in &q.tau {
        let _ = writeln!(
            out,
            "  {} -> {} [style=dotted, arrowhead=none, constraint=false];",
            node_id(x),
            node_id(t)
        );
    }
    out.push_str("}\n");
    out
}

fn tikz(q: &ArQuiver, hl: &BTreeSet<Coord>, labels: Labels) -> String {
    let m = vertex_count(q);
    let mut out = String::from("\\begin{tikzpicture}[scale=0.8]\n");
    for &c in &q.vertices {
        let style = if hl.contains(&c) { "[draw, circle, inner sep=1pt]" } else { "" };
        let text = match labels {
            Labels::None => "$\\bullet$".to_string(),
            _ => label(m, c, labels),
        };
        let _ = writeln!(
            out,
            "  \\node{style} ({}) at ({}, {}) {{\\tiny {text}}};",
            node_id(c),
            c.i + c.j,
            c.j
        );
    }
    for &(s, t) in &q.arrows {
        let _ = writeln!(out, "  \\draw[->] ({}) -- ({});", node_id(s), node_id(t));
    }
    for &(x, t) in &q.tau {
        let _ = writeln!(out, "  \\draw[dotted] ({}) -- ({});", node_id(x), node_id(t));
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

#[derive(Serialize)]
struct QuiverJson<'a> {
    vertices: &'a [Coord],
    arrows: &'a [(Coord, Coord)],
    tau: &'a [(Coord, Coord)],
    highlight: Vec<Coord>,
}

fn json(q: &ArQuiver, hl: &BTreeSet<Coord>) -> String {
    let body = QuiverJson {
        vertices: &q.vertices,
        arrows: &q.arrows,
        tau: &q.tau,
        highlight: hl.iter().copied().collect(),
    };
    let mut s = serde_json::to_string(&body).expect("quiver serializes");
    s.push('\n');
    s
}
