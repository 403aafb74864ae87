//! Dense row-major matrix, LU with partial pivoting, and quadrature helpers.

use crate::error::{Error, Result};

/// Dense row-major matrix of f64.
#[derive(Clone, Debug, PartialEq)]
pub struct DMat {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend_from_slice(row);
        }
        Self { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [f64] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    /// y = A x
    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.cols);
        let mut y = vec![0.0; self.rows];
        for i in 0..self.rows {
            let row = self.row(i);
            let mut s = 0.0;
            for (a, b) in row.iter().zip(x.iter()) {
                s += a * b;
            }
            y[i] = s;
        }
        y
    }

    /// y += c * A x
    pub fn matvec_acc(&self, x: &[f64], c: f64, y: &mut [f64]) {
        assert_eq!(x.len(), self.cols);
        assert_eq!(y.len(), self.rows);
        for i in 0..self.rows {
            let row = self.row(i);
            let mut s = 0.0;
            for (a, b) in row.iter().zip(x.iter()) {
                s += a * b;
            }
            y[i] += c * s;
        }
    }

    /// C = A B
    pub fn matmul(&self, other: &DMat) -> DMat {
        assert_eq!(self.cols, other.rows);
        let mut c = DMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self[(i, k)];
                if aik == 0.0 {
                    continue;
                }
                let brow = other.row(k);
                let crow = c.row_mut(i);
                for j in 0..brow.len() {
                    crow[j] += aik * brow[j];
                }
            }
        }
        c
    }

    pub fn scale(&mut self, c: f64) {
        for v in &mut self.data {
            *v *= c;
        }
    }

    pub fn add_assign(&mut self, other: &DMat, c: f64) {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.cols, other.cols);
        for (a, b) in self.data.iter_mut().zip(other.data.iter()) {
            *a += c * b;
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Estimated bytes for an n x n matrix, used by the memory guard.
    pub fn dense_bytes(n: usize) -> u64 {
        (n as u64) * (n as u64) * 8
    }
}

impl std::ops::Index<(usize, usize)> for DMat {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for DMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

pub fn norm2(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

pub fn norm_inf(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| x * y).sum()
}

/// LU factorization with partial pivoting, kept packed in place.
pub struct LuFactor {
    n: usize,
    lu: DMat,
    piv: Vec<usize>,
    min_pivot: f64,
    min_pivot_index: usize,
}

impl LuFactor {
    pub fn factor(a: &DMat) -> Result<Self> {
        assert_eq!(a.rows(), a.cols());
        let n = a.rows();
        let mut lu = a.clone();
        let mut piv: Vec<usize> = (0..n).collect();
        let scale = a.max_abs();
        let tol = 1e-14 * scale.max(f64::MIN_POSITIVE);
        let mut min_pivot = f64::INFINITY;
        let mut min_pivot_index = 0;
        for k in 0..n {
            // pivot search in column k
            let mut p = k;
            let mut best = lu[(k, k)].abs();
            for i in k + 1..n {
                let v = lu[(i, k)].abs();
                if v > best {
                    best = v;
                    p = i;
                }
            }
            if best < tol {
                return Err(Error::Singular { index: k, pivot: best });
            }
            if p != k {
                piv.swap(k, p);
                for j in 0..n {
                    let t = lu[(k, j)];
                    lu[(k, j)] = lu[(p, j)];
                    lu[(p, j)] = t;
                }
            }
            let pivot = lu[(k, k)];
            if pivot.abs() < min_pivot {
                min_pivot = pivot.abs();
                min_pivot_index = k;
            }
            let inv = 1.0 / pivot;
            for i in k + 1..n {
                let lik = lu[(i, k)] * inv;
                lu[(i, k)] = lik;
                if lik != 0.0 {
                    // row_i -= lik * row_k over columns k+1..n, contiguous slices
                    let (top, bottom) = lu.data.split_at_mut(i * n);
                    let rk = &top[k * n + k + 1..k * n + n];
                    let ri = &mut bottom[k + 1..n];
                    for (x, y) in ri.iter_mut().zip(rk.iter()) {
                        *x -= lik * y;
                    }
                }
            }
        }
        Ok(Self { n, lu, piv, min_pivot, min_pivot_index })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn min_pivot(&self) -> f64 {
        self.min_pivot
    }

    pub fn min_pivot_index(&self) -> usize {
        self.min_pivot_index
    }

    /// Solve A x = b.
    pub fn solve(&self, b: &[f64]) -> Vec<f64> {
        assert_eq!(b.len(), self.n);
        let n = self.n;
        let mut x: Vec<f64> = self.piv.iter().map(|&p| b[p]).collect();
        // forward, unit lower
        for i in 1..n {
            let row = self.lu.row(i);
            let mut s = x[i];
            for j in 0..i {
                s -= row[j] * x[j];
            }
            x[i] = s;
        }
        // backward, upper
        for i in (0..n).rev() {
            let row = self.lu.row(i);
            let mut s = x[i];
            for j in i + 1..n {
                s -= row[j] * x[j];
            }
            x[i] = s / row[i];
        }
        x
    }

    /// Solve in place over a mutable slice.
    pub fn solve_in_place(&self, b: &mut [f64]) {
        let x = self.solve(b);
        b.copy_from_slice(&x);
    }
}

/// Nodes and weights of an n-point Gauss-Legendre rule on [0,1].
pub fn gauss_legendre_01(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = (n + 1) / 2;
    for i in 0..m {
        // Newton on P_n with Chebyshev-like initial guess, on [-1,1]
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = (n as f64) * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = 0.5 * (1.0 - x);
        nodes[n - 1 - i] = 0.5 * (1.0 + x);
        weights[i] = 0.5 * w;
        weights[n - 1 - i] = 0.5 * w;
    }
    (nodes, weights)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lu_identity_returns_rhs() {
        let a = DMat::identity(5);
        let f = LuFactor::factor(&a).unwrap();
        let b = vec![1.0, -2.0, 3.0, 0.5, 4.0];
        assert_eq!(f.solve(&b), b);
    }

    #[test]
    fn lu_pivoting_swap() {
        // A = [[0,1],[1,0]], b = [2,3] -> x = [3,2]
        let a = DMat::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]);
        let f = LuFactor::factor(&a).unwrap();
        let x = f.solve(&[2.0, 3.0]);
        assert!((x[0] - 3.0).abs() < 1e-14);
        assert!((x[1] - 2.0).abs() < 1e-14);
    }

    #[test]
    fn lu_singular_reports_pivot() {
        let a = DMat::from_rows(&[vec![1.0, 2.0], vec![2.0, 4.0]]);
        match LuFactor::factor(&a) {
            Err(Error::Singular { index, .. }) => assert_eq!(index, 1),
            other => panic!("expected singular, got {:?}", other.is_ok()),
        }
    }

    #[test]
    fn lu_random_residual() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let n = 50;
        let mut a = DMat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                a[(i, j)] = rng.gen_range(-1.0..1.0);
            }
            a[(i, i)] += 4.0;
        }
        let b: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let f = LuFactor::factor(&a).unwrap();
        let x = f.solve(&b);
        let r: Vec<f64> = a
            .matvec(&x)
            .iter()
            .zip(b.iter())
            .map(|(ax, bb)| ax - bb)
            .collect();
        assert!(norm2(&r) / norm2(&b) < 1e-11);
    }

    #[test]
    fn gauss_legendre_exactness() {
        // 32 points integrate t^k exactly for k <= 63
        let (x, w) = gauss_legendre_01(32);
        for k in [0usize, 1, 5, 20, 63] {
            let got: f64 = x.iter().zip(w.iter()).map(|(xi, wi)| wi * xi.powi(k as i32)).sum();
            let want = 1.0 / (k as f64 + 1.0);
            assert!((got - want).abs() < 1e-13, "k={k}: {got} vs {want}");
        }
    }
}
