//! Brute-force linear algebra used to cross-check the combinatorics: exact
//! representation matrices of root elements, unipotence degrees, ranks and
//! Kronecker products.

mod field;
mod matrix;
mod root_element;
mod tensor_lemma;

pub use field::{Field, FieldKind, PrimeField, Rational, Rationals};
pub use matrix::DenseMatrix;
pub use root_element::{
    build_root_element, build_root_element_with, oracle_drop, root_index_of, OracleDropReport,
    SignConvention,
};
pub use tensor_lemma::{
    random_unipotent, verify_tensor_lemma, TensorLemmaReport, TensorLemmaSpec, TrialOutcome,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A square matrix over `Q` or `F_p`.
#[derive(Debug, Clone, PartialEq)]
pub enum ExactMatrix {
    Rational(DenseMatrix<Rationals>),
    Prime(DenseMatrix<PrimeField>),
}

impl ExactMatrix {
    pub fn identity(kind: FieldKind, n: usize) -> Result<Self> {
        Ok(match kind {
            FieldKind::Rationals => ExactMatrix::Rational(DenseMatrix::identity(Rationals, n)),
            FieldKind::Prime(p) => ExactMatrix::Prime(DenseMatrix::identity(PrimeField::new(p)?, n)),
        })
    }

    pub fn from_i64_rows(kind: FieldKind, rows: &[Vec<i64>]) -> Result<Self> {
        Ok(match kind {
            FieldKind::Rationals => ExactMatrix::Rational(DenseMatrix::from_i64_rows(Rationals, rows)),
            FieldKind::Prime(p) => {
                ExactMatrix::Prime(DenseMatrix::from_i64_rows(PrimeField::new(p)?, rows))
            }
        })
    }

    /// Upper-triangular Jordan blocks with eigenvalue 1.
    pub fn jordan(kind: FieldKind, blocks: &[usize]) -> Result<Self> {
        let n: usize = blocks.iter().sum();
        let mut rows = vec![vec![0i64; n]; n];
        let mut start = 0;
        for &b in blocks {
            for i in start..start + b {
                rows[i][i] = 1;
                if i + 1 < start + b {
                    rows[i][i + 1] = 1;
                }
            }
            start += b;
        }
        Self::from_i64_rows(kind, &rows)
    }

    pub fn field_kind(&self) -> FieldKind {
        match self {
            ExactMatrix::Rational(m) => m.field().kind(),
            ExactMatrix::Prime(m) => m.field().kind(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            ExactMatrix::Rational(m) => m.dim(),
            ExactMatrix::Prime(m) => m.dim(),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            ExactMatrix::Rational(m) => m.rank(),
            ExactMatrix::Prime(m) => m.rank(),
        }
    }

    /// `rank(self - 1)`
    pub fn minus_identity_rank(&self) -> usize {
        match self {
            ExactMatrix::Rational(m) => m.minus_identity().rank(),
            ExactMatrix::Prime(m) => m.minus_identity().rank(),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            ExactMatrix::Rational(m) => m.is_identity(),
            ExactMatrix::Prime(m) => m.is_identity(),
        }
    }

    pub fn render_rows(&self) -> Vec<Vec<String>> {
        match self {
            ExactMatrix::Rational(m) => m.render_rows(),
            ExactMatrix::Prime(m) => m.render_rows(),
        }
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        match (self, rhs) {
            (ExactMatrix::Rational(a), ExactMatrix::Rational(b)) if a.dim() == b.dim() => {
                Ok(ExactMatrix::Rational(a.mul(b)))
            }
            (ExactMatrix::Prime(a), ExactMatrix::Prime(b))
                if a.field() == b.field() && a.dim() == b.dim() =>
            {
                Ok(ExactMatrix::Prime(a.mul(b)))
            }
            _ => Err(Error::FieldMismatch(
                format!("{} ({}x{})", self.field_kind(), self.dim(), self.dim()),
                format!("{} ({}x{})", rhs.field_kind(), rhs.dim(), rhs.dim()),
            )),
        }
    }
}

/// Kronecker product of two matrices over the same field.
pub fn tensor(a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix> {
    match (a, b) {
        (ExactMatrix::Rational(x), ExactMatrix::Rational(y)) => Ok(ExactMatrix::Rational(x.kronecker(y))),
        (ExactMatrix::Prime(x), ExactMatrix::Prime(y)) if x.field() == y.field() => {
            Ok(ExactMatrix::Prime(x.kronecker(y)))
        }
        _ => Err(Error::FieldMismatch(
            a.field_kind().to_string(),
            b.field_kind().to_string(),
        )),
    }
}

/// Degree `k` with `(M - 1)^k = 0 != (M - 1)^(k-1)`, and the drop `rank(M - 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnipotenceReport {
    pub degree: usize,
    pub drop: usize,
    pub quadratic: bool,
}

pub fn unipotence(m: &ExactMatrix) -> Result<UnipotenceReport> {
    match m {
        ExactMatrix::Rational(x) => unipotence_in(x),
        ExactMatrix::Prime(x) => unipotence_in(x),
    }
}

fn unipotence_in<F: Field>(m: &DenseMatrix<F>) -> Result<UnipotenceReport> {
    let nil = m.minus_identity();
    let mut power = nil.clone();
    let mut degree = 1;
    // a nilpotent n x n matrix satisfies N^n = 0
    while !power.is_zero() {
        if degree >= m.dim() {
            return Err(Error::NotUnipotent);
        }
        power = power.mul(&nil);
        degree += 1;
    }
    let drop = nil.rank();
    Ok(UnipotenceReport {
        degree,
        drop,
        quadratic: degree <= 2,
    })
}
