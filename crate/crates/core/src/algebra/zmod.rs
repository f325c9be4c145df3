use crate::error::{Error, Result};

/// Dense matrix over `Z/d` (`d >= 2`, not necessarily prime).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZModMatrix {
    rows: usize,
    cols: usize,
    modulus: u64,
    data: Vec<u64>,
}

impl ZModMatrix {
    pub fn zeros(rows: usize, cols: usize, modulus: u64) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        Self { rows, cols, modulus, data: vec![0; rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<i64>], modulus: u64) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols, modulus);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Dimension(format!("row {i} has {} entries, expected {cols}", row.len())));
            }
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    pub fn identity(n: usize, modulus: u64) -> Self {
        let mut m = Self::zeros(n, n, modulus);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    /// Stores `v` reduced into `0..d`.
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        let d = self.modulus as i64;
        self.data[i * self.cols + j] = v.rem_euclid(d) as u64;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: i64) {
        let cur = self.get(i, j) as i64;
        self.set(i, j, cur + v.rem_euclid(self.modulus as i64));
    }

    pub fn mul_vec(&self, x: &[u64]) -> Vec<u64> {
        (0..self.rows)
            .map(|i| {
                let s: u128 = (0..self.cols).map(|j| self.get(i, j) as u128 * x[j] as u128).sum();
                (s % self.modulus as u128) as u64
            })
            .collect()
    }
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - (a.div_euclid(b)) * y)
    }
}

/// Unimodular 2x2 matrix sending `(a, b)` to `(gcd, 0)`. When `a` already
/// divides `b` the first line is left untouched, so a cleared column stays
/// cleared while the row is processed.
fn clearing_pair(a: i128, b: i128) -> (i128, i128, i128, i128) {
    if b % a == 0 {
        return (1, 0, -(b / a), 1);
    }
    let (g, s, t) = ext_gcd(a, b);
    (s, t, -b / g, a / g)
}

/// Working copy for Smith-form elimination over `Z/d`. Row operations are
/// mirrored on the right-hand side, column operations on `cols_op` so that
/// `x = cols_op * y`.
struct Elim {
    d: i128,
    a: Vec<Vec<i128>>,
    rhs: Vec<i128>,
    col_op: Vec<Vec<i128>>,
}

impl Elim {
    fn red(&self, v: i128) -> i128 {
        v.rem_euclid(self.d)
    }

    /// Replaces rows (r1, r2) by (s r1 + t r2, u r1 + v r2).
    fn row_mix(&mut self, r1: usize, r2: usize, s: i128, t: i128, u: i128, v: i128) {
        for j in 0..self.a[0].len() {
            let (x, y) = (self.a[r1][j], self.a[r2][j]);
            self.a[r1][j] = self.red(s * x + t * y);
            self.a[r2][j] = self.red(u * x + v * y);
        }
        let (x, y) = (self.rhs[r1], self.rhs[r2]);
        self.rhs[r1] = self.red(s * x + t * y);
        self.rhs[r2] = self.red(u * x + v * y);
    }

    fn col_mix(&mut self, c1: usize, c2: usize, s: i128, t: i128, u: i128, v: i128) {
        for i in 0..self.a.len() {
            let (x, y) = (self.a[i][c1], self.a[i][c2]);
            self.a[i][c1] = self.red(s * x + t * y);
            self.a[i][c2] = self.red(u * x + v * y);
        }
        for i in 0..self.col_op.len() {
            let (x, y) = (self.col_op[i][c1], self.col_op[i][c2]);
            self.col_op[i][c1] = self.red(s * x + t * y);
            self.col_op[i][c2] = self.red(u * x + v * y);
        }
    }
}

/// Solves `M x = b (mod d)` by diagonalising `M` with unimodular row and
/// column operations (a Smith-form reduction taken modulo `d`). Returns a
/// solution, or `None` exactly when the system is inconsistent.
pub fn solve_linear_zmod(m: &ZModMatrix, b: &[u64]) -> Result<Option<Vec<u64>>> {
    if b.len() != m.rows {
        return Err(Error::Dimension(format!("rhs has {} entries, matrix has {} rows", b.len(), m.rows)));
    }
    let d = m.modulus as i128;
    let (rows, cols) = (m.rows, m.cols);
    if cols == 0 {
        return Ok(if b.iter().all(|&v| v % m.modulus == 0) { Some(vec![]) } else { None });
    }
    let mut e = Elim {
        d,
        a: (0..rows).map(|i| (0..cols).map(|j| m.get(i, j) as i128).collect()).collect(),
        rhs: b.iter().map(|&v| (v as i128).rem_euclid(d)).collect(),
        col_op: (0..cols).map(|i| (0..cols).map(|j| i128::from(i == j)).collect()).collect(),
    };
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Pivot: nonzero entry in the remaining block with the smallest gcd with d.
        let mut best: Option<(i128, usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let v = e.a[i][j];
                if v != 0 {
                    let g = ext_gcd(v, d).0;
                    if best.is_none_or(|(bg, _, _)| g < bg) {
                        best = Some((g, i, j));
                    }
                }
            }
        }
        let Some((_, pi, pj)) = best else { break };
        if pi != t {
            e.row_mix(t, pi, 0, 1, 1, 0);
        }
        if pj != t {
            e.col_mix(t, pj, 0, 1, 1, 0);
        }
        loop {
            let mut changed = false;
            for i in t + 1..rows {
                let (a, bb) = (e.a[t][t], e.a[i][t]);
                if bb == 0 {
                    continue;
                }
                let (s, tt, u, v) = clearing_pair(a, bb);
                e.row_mix(t, i, s, tt, u, v);
                changed = true;
            }
            for j in t + 1..cols {
                let (a, bb) = (e.a[t][t], e.a[t][j]);
                if bb == 0 {
                    continue;
                }
                let (s, tt, u, v) = clearing_pair(a, bb);
                e.col_mix(t, j, s, tt, u, v);
                changed = true;
            }
            let clean = (t + 1..rows).all(|i| e.a[i][t] == 0) && (t + 1..cols).all(|j| e.a[t][j] == 0);
            if clean || !changed {
                break;
            }
        }
        diag.push(e.a[t][t]);
        t += 1;
    }
    let mut y = vec![0i128; cols];
    for (i, &di) in diag.iter().enumerate() {
        let c = e.rhs[i];
        let g = ext_gcd(di, d).0;
        if c % g != 0 {
            return Ok(None);
        }
        let md = d / g;
        let (_, inv, _) = ext_gcd((di / g).rem_euclid(md), md);
        y[i] = ((c / g) * inv).rem_euclid(md);
    }
    if e.rhs[diag.len()..].iter().any(|&c| c != 0) {
        return Ok(None);
    }
    let x: Vec<u64> =
        (0..cols).map(|i| ((0..cols).map(|j| e.col_op[i][j] * y[j]).sum::<i128>()).rem_euclid(d) as u64).collect();
    if m.mul_vec(&x) != b.iter().map(|v| v % m.modulus).collect::<Vec<_>>() {
        return Err(Error::Internal("modular solver produced a non-solution".into()));
    }
    Ok(Some(x))
}
