use super::field::Field;

/// Dense square matrix over an exact field, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<F: Field> {
    field: F,
    n: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> DenseMatrix<F> {
    pub fn zeros(field: F, n: usize) -> Self {
        let data = vec![field.zero(); n * n];
        DenseMatrix { field, n, data }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Self::zeros(field, n);
        for i in 0..n {
            m.data[i * n + i] = m.field.one();
        }
        m
    }

    pub fn from_i64_rows(field: F, rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        let data = rows.iter().flatten().map(|&v| field.from_i64(v)).collect();
        DenseMatrix { field, n, data }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.n + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| self.field.is_zero(a))
    }

    pub fn is_identity(&self) -> bool {
        let one = self.field.one();
        (0..self.n).all(|i| {
            (0..self.n).all(|j| {
                let a = self.get(i, j);
                if i == j {
                    *a == one
                } else {
                    self.field.is_zero(a)
                }
            })
        })
    }

    /// `self - 1`
    pub fn minus_identity(&self) -> Self {
        let mut out = self.clone();
        let one = self.field.one();
        for i in 0..self.n {
            let v = self.field.sub(out.get(i, i), &one);
            out.set(i, i, v);
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let f = &self.field;
        let mut out = Self::zeros(f.clone(), n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !f.is_zero(b) {
                        f.mul_add_assign(&mut out.data[i * n + j], a, b);
                    }
                }
            }
        }
        out
    }

    /// Kronecker product; basis `e_i (x) f_j` sits at index `i * dim(rhs) + j`.
    pub fn kronecker(&self, rhs: &Self) -> Self {
        let (n, m) = (self.n, rhs.n);
        let f = &self.field;
        let size = n * m;
        let mut out = Self::zeros(f.clone(), size);
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                if f.is_zero(a) {
                    continue;
                }
                for k in 0..m {
                    for l in 0..m {
                        let b = rhs.get(k, l);
                        if !f.is_zero(b) {
                            out.data[(i * m + k) * size + j * m + l] = f.mul(a, b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Rank by Gaussian elimination on a copy.
    pub fn rank(&self) -> usize {
        let n = self.n;
        let f = &self.field;
        let mut rows: Vec<Vec<F::Elem>> = self.data.chunks(n).map(|r| r.to_vec()).collect();
        let mut rank = 0;
        for col in 0..n {
            let Some(p) = (rank..n).find(|&r| !f.is_zero(&rows[r][col])) else {
                continue;
            };
            rows.swap(rank, p);
            let inv = f.inv(&rows[rank][col]).expect("nonzero pivot");
            let pivot: Vec<F::Elem> = rows[rank].iter().map(|a| f.mul(a, &inv)).collect();
            for row in rows.iter_mut().skip(rank + 1) {
                if f.is_zero(&row[col]) {
                    continue;
                }
                let factor = f.neg(&row[col]);
                for j in col..n {
                    if !f.is_zero(&pivot[j]) {
                        f.mul_add_assign(&mut row[j], &factor, &pivot[j]);
                    }
                }
            }
            rows[rank] = pivot;
            rank += 1;
        }
        rank
    }

    /// Inverse by Gauss-Jordan elimination, `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        let f = &self.field;
        let mut a: Vec<Vec<F::Elem>> = self.data.chunks(n).map(|r| r.to_vec()).collect();
        let mut b: Vec<Vec<F::Elem>> = Self::identity(f.clone(), n)
            .data
            .chunks(n)
            .map(|r| r.to_vec())
            .collect();
        for col in 0..n {
            let p = (col..n).find(|&r| !f.is_zero(&a[r][col]))?;
            a.swap(col, p);
            b.swap(col, p);
            let inv = f.inv(&a[col][col]).expect("nonzero pivot");
            a[col] = a[col].iter().map(|x| f.mul(x, &inv)).collect();
            b[col] = b[col].iter().map(|x| f.mul(x, &inv)).collect();
            for r in 0..n {
                if r == col || f.is_zero(&a[r][col]) {
                    continue;
                }
                let factor = f.neg(&a[r][col]);
                let (pa, pb) = (a[col].clone(), b[col].clone());
                for j in 0..n {
                    f.mul_add_assign(&mut a[r][j], &factor, &pa[j]);
                    f.mul_add_assign(&mut b[r][j], &factor, &pb[j]);
                }
            }
        }
        let data = b.into_iter().flatten().collect();
        Some(DenseMatrix {
            field: f.clone(),
            n,
            data,
        })
    }

    /// Entries rendered as strings, row by row.
    pub fn render_rows(&self) -> Vec<Vec<String>> {
        self.data
            .chunks(self.n)
            .map(|r| r.iter().map(|a| self.field.render(a)).collect())
            .collect()
    }
}
