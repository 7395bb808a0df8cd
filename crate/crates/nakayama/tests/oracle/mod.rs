//! Linear-algebra oracle over explicit quiver representations.
//!
//! Modules are representations of `1 → 2 → ... → m` over `GF(P)`. Hom spaces
//! are null spaces of the commutativity equations; projective covers and
//! injective envelopes are random homomorphisms into the path modules, and
//! syzygies are read off from ranks. None of this uses the coordinate
//! formulas of the library.

#![allow(dead_code)]

use nakayama::{Coord, Kupisch};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub const P: u64 = 32_003;

fn inv(a: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (a % P, P - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % P;
        }
        base = base * base % P;
        exp >>= 1;
    }
    acc
}

/// Row-reduces in place and returns the pivot columns.
fn rref(rows: &mut [Vec<u64>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
        rows.swap(r, p);
        let f = inv(rows[r][col]);
        for x in rows[r].iter_mut() {
            *x = *x * f % P;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][col] != 0 {
                let g = rows[i][col];
                let pivot = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x = (*x + P * P - g * y) % P;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn at(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = 0;
                for k in 0..self.cols {
                    acc = (acc + self.at(r, k) * other.at(k, c)) % P;
                }
                out.data[r * other.cols + c] = acc;
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<u64>> =
            (0..self.rows).map(|r| self.data[r * self.cols..(r + 1) * self.cols].to_vec()).collect();
        rref(&mut rows, self.cols).len()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }
}

/// A representation: spaces `dims[t]` at vertex `t + 1` and maps
/// `maps[t]: V_{t+1} → V_{t+2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rep {
    pub dims: Vec<usize>,
    pub maps: Vec<Matrix>,
}

impl Rep {
    /// The representation with `K` on every vertex of `support` and identity
    /// maps between consecutive supported vertices.
    pub fn from_support(m: usize, support: &[bool]) -> Rep {
        let dims: Vec<usize> = support.iter().map(|&s| usize::from(s)).collect();
        let maps = (0..m.saturating_sub(1))
            .map(|t| {
                let mut mat = Matrix::zero(dims[t + 1], dims[t]);
                if dims[t] == 1 && dims[t + 1] == 1 {
                    mat.data[0] = 1;
                }
                mat
            })
            .collect();
        Rep { dims, maps }
    }

    pub fn interval(m: usize, a: usize, b: usize) -> Rep {
        let support: Vec<bool> = (1..=m).map(|t| a <= t && t <= b).collect();
        Rep::from_support(m, &support)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Composite map from vertex `from` to vertex `to` (1-based, `from <= to`).
    pub fn path_map(&self, from: usize, to: usize) -> Matrix {
        let mut acc = Matrix::zero(self.dims[from - 1], self.dims[from - 1]);
        for r in 0..acc.rows {
            acc.data[r * acc.cols + r] = 1;
        }
        for t in from..to {
            acc = self.maps[t - 1].mul(&acc);
        }
        acc
    }

    /// Whether every zero relation of `k` acts as zero.
    pub fn satisfies(&self, k: &Kupisch) -> bool {
        let m = k.m();
        (1..=m).all(|t| {
            let end = t + k.d(t);
            end > m || self.path_map(t, end).is_zero()
        })
    }

    /// Dimension of the top at each vertex.
    pub fn top(&self) -> Vec<usize> {
        (0..self.dims.len())
            .map(|t| if t == 0 { self.dims[0] } else { self.dims[t] - self.maps[t - 1].rank() })
            .collect()
    }

    /// Dimension of the socle at each vertex.
    pub fn socle(&self) -> Vec<usize> {
        let m = self.dims.len();
        (0..m)
            .map(|t| if t + 1 == m { self.dims[t] } else { self.dims[t] - self.maps[t].rank() })
            .collect()
    }
}

/// Whether the path of arrows from `from` to `to` is nonzero in the algebra,
/// i.e. it contains no relation path.
fn path_nonzero(k: &Kupisch, from: usize, to: usize) -> bool {
    (from..to).all(|s| s + k.d(s) > to)
}

/// Indecomposable projective at vertex `a`, spanned by the nonzero paths
/// starting at `a`.
pub fn projective(k: &Kupisch, a: usize) -> Rep {
    let m = k.m();
    let support: Vec<bool> = (1..=m).map(|t| t >= a && path_nonzero(k, a, t)).collect();
    Rep::from_support(m, &support)
}

/// Indecomposable injective at vertex `b`, dual to the nonzero paths ending
/// at `b`.
pub fn injective(k: &Kupisch, b: usize) -> Rep {
    let m = k.m();
    let support: Vec<bool> = (1..=m).map(|t| t <= b && path_nonzero(k, t, b)).collect();
    Rep::from_support(m, &support)
}

/// Basis of `Hom(x, y)`, each element given as one matrix per vertex.
pub fn hom_basis(x: &Rep, y: &Rep) -> Vec<Vec<Matrix>> {
    let m = x.dims.len();
    let mut offsets = vec![0];
    for t in 0..m {
        offsets.push(offsets[t] + y.dims[t] * x.dims[t]);
    }
    let n = offsets[m];
    let var = |t: usize, r: usize, c: usize| offsets[t] + r * x.dims[t] + c;
    let mut eqs: Vec<Vec<u64>> = Vec::new();
    for t in 0..m.saturating_sub(1) {
        let (fx, fy) = (&x.maps[t], &y.maps[t]);
        for r in 0..y.dims[t + 1] {
            for c in 0..x.dims[t] {
                let mut row = vec![0u64; n];
                for k in 0..x.dims[t + 1] {
                    let v = var(t + 1, r, k);
                    row[v] = (row[v] + fx.at(k, c)) % P;
                }
                for k in 0..y.dims[t] {
                    let v = var(t, k, c);
                    row[v] = (row[v] + P - fy.at(r, k)) % P;
                }
                eqs.push(row);
            }
        }
    }
    let pivots = rref(&mut eqs, n);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut sol = vec![0u64; n];
            sol[f] = 1;
            for (row, &p) in eqs.iter().zip(&pivots) {
                sol[p] = (P - row[f]) % P;
            }
            (0..m)
                .map(|t| Matrix {
                    rows: y.dims[t],
                    cols: x.dims[t],
                    data: sol[offsets[t]..offsets[t + 1]].to_vec(),
                })
                .collect()
        })
        .collect()
}

pub fn hom_dim(x: &Rep, y: &Rep) -> usize {
    hom_basis(x, y).len()
}

fn random_hom(x: &Rep, y: &Rep, rng: &mut StdRng) -> Vec<Matrix> {
    let basis = hom_basis(x, y);
    let m = x.dims.len();
    let mut out: Vec<Matrix> = (0..m).map(|t| Matrix::zero(y.dims[t], x.dims[t])).collect();
    for b in &basis {
        let coef = rng.gen_range(1..P);
        for t in 0..m {
            for (o, v) in out[t].data.iter_mut().zip(&b[t].data) {
                *o = (*o + coef * v) % P;
            }
        }
    }
    out
}

fn single_vertex(v: &[usize]) -> usize {
    let hits: Vec<usize> = (0..v.len()).filter(|&t| v[t] > 0).collect();
    assert!(hits.len() == 1 && v[hits[0]] == 1, "expected a simple top or socle, got {v:?}");
    hits[0] + 1
}

/// Dimension vector of the kernel of a projective cover.
pub fn syzygy_dims(k: &Kupisch, x: &Rep, seed: u64) -> Vec<usize> {
    let a = single_vertex(&x.top());
    let p0 = projective(k, a);
    let mut rng = StdRng::seed_from_u64(seed);
    loop {
        let f = random_hom(&p0, x, &mut rng);
        let ranks: Vec<usize> = f.iter().map(Matrix::rank).collect();
        if ranks == x.dims {
            return p0.dims.iter().zip(&ranks).map(|(d, r)| d - r).collect();
        }
    }
}

/// Dimension vector of the cokernel of an injective envelope.
pub fn cosyzygy_dims(k: &Kupisch, x: &Rep, seed: u64) -> Vec<usize> {
    let b = single_vertex(&x.socle());
    let i0 = injective(k, b);
    let mut rng = StdRng::seed_from_u64(seed);
    loop {
        let f = random_hom(x, &i0, &mut rng);
        let ranks: Vec<usize> = f.iter().map(Matrix::rank).collect();
        if ranks == x.dims {
            return i0.dims.iter().zip(&ranks).map(|(d, r)| d - r).collect();
        }
    }
}

/// `dim Ext¹(x, y)` from `0 → Ωx → P_0 → x → 0`.
pub fn ext1_dim(k: &Kupisch, x: &Rep, y: &Rep) -> usize {
    let a = single_vertex(&x.top());
    let p0 = projective(k, a);
    let omega = dims_to_rep(&syzygy_dims(k, x, 7));
    hom_dim(&omega, y) + hom_dim(x, y) - hom_dim(&p0, y)
}

pub fn dims_to_rep(dims: &[usize]) -> Rep {
    let support: Vec<bool> = dims.iter().map(|&d| {
        assert!(d <= 1);
        d == 1
    }).collect();
    Rep::from_support(dims.len(), &support)
}

/// The coordinate `M(i, j)` of an interval dimension vector, `None` for zero.
pub fn dims_to_coord(dims: &[usize]) -> Option<Coord> {
    let m = dims.len();
    let support: Vec<usize> = (0..m).filter(|&t| dims[t] > 0).map(|t| t + 1).collect();
    let (&a, &b) = (support.first()?, support.last()?);
    assert_eq!(support.len(), b - a + 1, "not an interval: {dims:?}");
    assert!(dims.iter().all(|&d| d <= 1));
    Some(Coord::new(m - b + 1, b - a + 1))
}

pub fn coord_to_rep(m: usize, c: Coord) -> Rep {
    Rep::interval(m, m + 2 - c.i - c.j, m + 1 - c.i)
}

/// All indecomposable representations of the algebra, found by testing every
/// interval against the relations.
pub fn indecomposables(k: &Kupisch) -> Vec<Coord> {
    let m = k.m();
    let mut out = Vec::new();
    for a in 1..=m {
        for b in a..=m {
            if Rep::interval(m, a, b).satisfies(k) {
                out.push(dims_to_coord(&Rep::interval(m, a, b).dims).unwrap());
            }
        }
    }
    out.sort();
    out
}

pub fn is_projective(k: &Kupisch, c: Coord) -> bool {
    let m = k.m();
    let x = coord_to_rep(m, c);
    (1..=m).any(|a| projective(k, a) == x)
}

pub fn is_injective(k: &Kupisch, c: Coord) -> bool {
    let m = k.m();
    let x = coord_to_rep(m, c);
    (1..=m).any(|b| injective(k, b) == x)
}

/// Every Kupisch series with `m` entries.
pub fn all_kupisch(m: usize) -> Vec<Kupisch> {
    fn go(prefix: &mut Vec<usize>, m: usize, out: &mut Vec<Kupisch>) {
        let t = prefix.len();
        if t == m {
            if let Ok(k) = Kupisch::new(prefix.clone()) {
                out.push(k);
            }
            return;
        }
        let lo = if t + 1 == m { 1 } else { 2 };
        for d in lo..=m - t {
            if t > 0 && prefix[t - 1] > d + 1 {
                continue;
            }
            prefix.push(d);
            go(prefix, m, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), m, &mut out);
    out
}

/// `dim Ext^i(x, y)` for `i >= 1`, via dimension shifting.
pub fn ext_dim(k: &Kupisch, i: usize, x: Coord, y: Coord) -> usize {
    let m = k.m();
    let mut cur = coord_to_rep(m, x);
    for step in 1..i {
        let dims = syzygy_dims(k, &cur, step as u64);
        if dims.iter().all(|&d| d == 0) {
            return 0;
        }
        cur = dims_to_rep(&dims);
    }
    ext1_dim(k, &cur, &coord_to_rep(m, y))
}

/// Whether `c` is an n-cluster tilting subcategory, straight from the
/// definition: `C` equals both of its `Ext^{1..n-1}`-perpendiculars.
pub fn is_n_cluster_tilting(k: &Kupisch, n: usize, c: &[Coord]) -> bool {
    let all = indecomposables(k);
    let left: Vec<Coord> = all
        .iter()
        .copied()
        .filter(|&x| c.iter().all(|&y| (1..n).all(|i| ext_dim(k, i, x, y) == 0)))
        .collect();
    let right: Vec<Coord> = all
        .iter()
        .copied()
        .filter(|&x| c.iter().all(|&y| (1..n).all(|i| ext_dim(k, i, y, x) == 0)))
        .collect();
    let mut sorted = c.to_vec();
    sorted.sort();
    left == sorted && right == sorted
}
