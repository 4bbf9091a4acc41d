//! Dense and sparse kernels on row-major `n×n` float matrices.

/// Compressed sparse rows of an `n×n` matrix.
#[derive(Clone, Debug)]
pub(crate) struct Csr {
    pub n: usize,
    row_start: Vec<usize>,
    col: Vec<usize>,
    val: Vec<f64>,
}

impl Csr {
    pub fn from_dense(n: usize, a: &[f64]) -> Self {
        let mut row_start = vec![0];
        let (mut col, mut val) = (Vec::new(), Vec::new());
        for i in 0..n {
            for j in 0..n {
                let x = a[i * n + j];
                if x != 0.0 {
                    col.push(j);
                    val.push(x);
                }
            }
            row_start.push(col.len());
        }
        Csr {
            n,
            row_start,
            col,
            val,
        }
    }

    /// `out = self · q` with `q` row-major `n×m`.
    pub fn mul_into(&self, q: &[f64], m: usize, out: &mut [f64]) {
        out.fill(0.0);
        for i in 0..self.n {
            let dst = &mut out[i * m..(i + 1) * m];
            for k in self.row_start[i]..self.row_start[i + 1] {
                let (c, v) = (self.col[k], self.val[k]);
                let src = &q[c * m..(c + 1) * m];
                for (d, s) in dst.iter_mut().zip(src) {
                    *d += v * s;
                }
            }
        }
    }
}

/// Householder QR of the row-major `n×m` matrix `a` (n ≥ m). Overwrites `a`
/// with the orthonormal factor and returns `log|r_ii|`.
pub(crate) fn qr_in_place(a: &mut [f64], n: usize, m: usize) -> Vec<f64> {
    let mut vs: Vec<Vec<f64>> = Vec::with_capacity(m);
    let mut logs = Vec::with_capacity(m);
    for k in 0..m {
        let norm = (k..n).map(|i| a[i * m + k].powi(2)).sum::<f64>().sqrt();
        let alpha = if a[k * m + k] > 0.0 { -norm } else { norm };
        let mut v: Vec<f64> = (k..n).map(|i| a[i * m + k]).collect();
        v[0] -= alpha;
        let vn = v.iter().map(|x| x * x).sum::<f64>();
        if vn > 0.0 {
            for j in k..m {
                let dot: f64 = (k..n).map(|i| v[i - k] * a[i * m + j]).sum();
                let f = 2.0 * dot / vn;
                for i in k..n {
                    a[i * m + j] -= f * v[i - k];
                }
            }
        }
        logs.push(alpha.abs().ln());
        vs.push(if vn > 0.0 {
            v.iter().map(|x| x / vn.sqrt()).collect()
        } else {
            vec![0.0; n - k]
        });
    }
    // rebuild Q = H_0 … H_{m−1} applied to the first m unit columns
    a.fill(0.0);
    for i in 0..m {
        a[i * m + i] = 1.0;
    }
    for k in (0..m).rev() {
        let v = &vs[k];
        for j in 0..m {
            let dot: f64 = (k..n).map(|i| v[i - k] * a[i * m + j]).sum();
            for i in k..n {
                a[i * m + j] -= 2.0 * dot * v[i - k];
            }
        }
    }
    logs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qr_of_upper_triangular() {
        let mut a = vec![2.0, 1.0, 0.0, 3.0];
        let logs = qr_in_place(&mut a, 2, 2);
        assert!((logs[0] - 2f64.ln()).abs() < 1e-12 && (logs[1] - 3f64.ln()).abs() < 1e-12);
        // Q is diagonal ±1
        assert!((a[0].abs() - 1.0).abs() < 1e-12 && a[1].abs() < 1e-12);
    }

    #[test]
    fn q_is_orthonormal() {
        let mut a = vec![1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 10.0];
        let logs = qr_in_place(&mut a, 3, 3);
        let det: f64 = logs.iter().sum::<f64>().exp();
        assert!((det - 3.0).abs() < 1e-9);
        for i in 0..3 {
            for j in 0..3 {
                let dot: f64 = (0..3).map(|r| a[r * 3 + i] * a[r * 3 + j]).sum();
                assert!((dot - f64::from(u8::from(i == j))).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn sparse_product() {
        let g = Csr::from_dense(2, &[0.0, 1.0, 2.0, 0.0]);
        let mut out = vec![0.0; 4];
        g.mul_into(&[1.0, 2.0, 3.0, 4.0], 2, &mut out);
        assert_eq!(out, [3.0, 4.0, 2.0, 4.0]);
    }
}
