//! Naive GF(p) arithmetic on plain integers, sharing no code with the
//! library, used as an oracle.
#![allow(dead_code, clippy::needless_range_loop)]

use leibniz::{Bimodule, LeibnizAlgebra, Matrix, Scalar, Subspace};

pub type Vector = Vec<u64>;

pub fn residues(v: &[Scalar]) -> Vector {
    v.iter().map(|x| x.residue().expect("GF(p) scalar") as u64).collect()
}

pub fn matrix(m: &Matrix) -> Vec<Vector> {
    m.row_iter().map(residues).collect()
}

pub fn basis(s: &Subspace) -> Vec<Vector> {
    matrix(s.basis())
}

/// `c[i][j]` = coordinates of `e_i e_j`.
pub struct Table {
    pub p: u64,
    pub n: usize,
    pub c: Vec<Vec<Vector>>,
}

impl Table {
    pub fn of(alg: &LeibnizAlgebra) -> Self {
        let p = alg.field().modulus().expect("GF(p) algebra") as u64;
        let n = alg.dim();
        let c = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| alg.constant(i, j, k).residue().unwrap() as u64).collect()).collect())
            .collect();
        Table { p, n, c }
    }

    pub fn from_flat(p: u64, n: usize, flat: &[u64]) -> Self {
        let c = (0..n)
            .map(|i| (0..n).map(|j| flat[(i * n + j) * n..(i * n + j + 1) * n].to_vec()).collect())
            .collect();
        Table { p, n, c }
    }

    pub fn mul(&self, x: &[u64], y: &[u64]) -> Vector {
        let mut out = vec![0; self.n];
        for i in 0..self.n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..self.n {
                if y[j] == 0 {
                    continue;
                }
                let s = x[i] * y[j] % self.p;
                for k in 0..self.n {
                    out[k] = (out[k] + s * self.c[i][j][k]) % self.p;
                }
            }
        }
        out
    }

    pub fn unit(&self, i: usize) -> Vector {
        let mut v = vec![0; self.n];
        v[i] = 1;
        v
    }

    /// Brute-force `a(xy) = (ax)y + x(ay)` on all basis triples.
    pub fn is_leibniz(&self) -> bool {
        let e: Vec<Vector> = (0..self.n).map(|i| self.unit(i)).collect();
        for a in &e {
            for x in &e {
                for y in &e {
                    let lhs = self.mul(a, &self.mul(x, y));
                    let r1 = self.mul(&self.mul(a, x), y);
                    let r2 = self.mul(x, &self.mul(a, y));
                    let rhs: Vector = r1.iter().zip(&r2).map(|(u, v)| (u + v) % self.p).collect();
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Spanning set of `AB`.
    pub fn products(&self, a: &[Vector], b: &[Vector]) -> Vec<Vector> {
        a.iter().flat_map(|x| b.iter().map(move |y| self.mul(x, y))).collect()
    }
}

pub fn inv(x: u64, p: u64) -> u64 {
    let (mut r, mut e, mut b) = (1u64, p - 2, x % p);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub fn rank(rows: &[Vector], p: u64) -> usize {
    reduce(rows, p).len()
}

/// Nonzero rows of the reduced row echelon form of `rows`.
pub fn reduce(rows: &[Vector], p: u64) -> Vec<Vector> {
    let mut m: Vec<Vector> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..m.len()).find(|&i| !m[i][c].is_multiple_of(p)) else {
            continue;
        };
        m.swap(r, pivot);
        let s = inv(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = *x * s % p;
        }
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for k in 0..cols {
                    m[i][k] = (m[i][k] + (p - f) * m[r][k] % p) % p;
                }
            }
        }
        r += 1;
    }
    m.truncate(r);
    m
}

/// `span(b) ⊆ span(a)`.
pub fn contains(a: &[Vector], b: &[Vector], p: u64) -> bool {
    let all: Vec<Vector> = a.iter().chain(b).cloned().collect();
    rank(&all, p) == rank(a, p)
}

/// Row-convention `v · M`.
pub fn apply(v: &[u64], m: &[Vector], p: u64) -> Vector {
    let cols = m.first().map_or(0, Vec::len);
    let mut out = vec![0; cols];
    for (r, x) in v.iter().enumerate() {
        for c in 0..cols {
            out[c] = (out[c] + x * m[r][c]) % p;
        }
    }
    out
}

pub fn mat_mul(a: &[Vector], b: &[Vector], p: u64) -> Vec<Vector> {
    a.iter().map(|row| apply(row, b, p)).collect()
}

/// All action matrices of a bimodule as integer matrices.
pub fn actions(v: &Bimodule) -> Vec<Vec<Vector>> {
    v.left_actions()
        .iter()
        .chain(v.right_actions())
        .map(matrix)
        .collect()
}

/// Whether `φ` (rows = images) satisfies `A φ = φ B` for every paired action.
pub fn intertwines(a: &Bimodule, b: &Bimodule, phi: &[Vector], p: u64) -> bool {
    actions(a)
        .iter()
        .zip(actions(b))
        .all(|(x, y)| mat_mul(x, phi, p) == mat_mul(phi, &y, p))
}

/// Every `rows × cols` matrix over GF(p), as a flat counter.
pub fn all_matrices(rows: usize, cols: usize, p: u64) -> impl Iterator<Item = Vec<Vector>> {
    let total = p.pow((rows * cols) as u32);
    (0..total).map(move |mut code| {
        (0..rows)
            .map(|_| {
                (0..cols)
                    .map(|_| {
                        let d = code % p;
                        code /= p;
                        d
                    })
                    .collect()
            })
            .collect()
    })
}

/// Every vector of `span(basis)` (including zero).
pub fn all_combinations(basis: &[Vector], p: u64) -> Vec<Vector> {
    let len = basis.first().map_or(0, Vec::len);
    let mut out = vec![vec![0; len]];
    for b in basis {
        let mut next = Vec::with_capacity(out.len() * p as usize);
        for v in &out {
            for c in 0..p {
                next.push(v.iter().zip(b).map(|(x, y)| (x + c * y) % p).collect());
            }
        }
        out = next;
    }
    out
}
