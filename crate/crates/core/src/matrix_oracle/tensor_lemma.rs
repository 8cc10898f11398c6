use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::field::{Field, FieldKind, PrimeField, Rationals};
use super::matrix::DenseMatrix;
use super::{tensor, unipotence, ExactMatrix};
use crate::error::{Error, Result};

/// Parameters of a seeded run of the tensor-degree check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorLemmaSpec {
    pub k1: usize,
    pub k2: usize,
    pub dims: (usize, usize),
    pub trials: u64,
    pub seed: u64,
    pub field: FieldKind,
}

impl TensorLemmaSpec {
    /// Spec over `Q` with dimensions `min(k + 2, 6)`, never below `k`.
    pub fn new(k1: usize, k2: usize, trials: u64, seed: u64) -> Self {
        let dim = |k: usize| k.max((k + 2).min(6));
        TensorLemmaSpec {
            k1,
            k2,
            dims: (dim(k1), dim(k2)),
            trials,
            seed,
            field: FieldKind::Rationals,
        }
    }

    pub fn expected_degree(&self) -> usize {
        self.k1 + self.k2 - 1
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidTrialSpec(msg));
        if self.trials == 0 {
            return bad("trials must be positive".into());
        }
        if self.k1 == 0 || self.k2 == 0 {
            return bad("unipotence degrees must be at least 1".into());
        }
        if self.dims.0 < self.k1 || self.dims.1 < self.k2 {
            return bad(format!(
                "dims {:?} must be at least the degrees ({}, {})",
                self.dims, self.k1, self.k2
            ));
        }
        if let FieldKind::Prime(p) = self.field {
            PrimeField::new(p)?;
            if (p as usize) < self.expected_degree() {
                return bad(format!(
                    "prime {p} is below k1 + k2 - 1 = {}",
                    self.expected_degree()
                ));
            }
        }
        Ok(())
    }
}

/// Degrees measured in one trial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialOutcome {
    pub trial: u64,
    pub degree1: usize,
    pub degree2: usize,
    pub tensor_degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorLemmaReport {
    pub spec: TensorLemmaSpec,
    pub expected_degree: usize,
    /// Tensor degree -> number of trials.
    pub degree_histogram: BTreeMap<usize, u64>,
    /// Trials over `Q` whose tensor degree differs from `k1 + k2 - 1`.
    pub failures: Vec<TrialOutcome>,
    /// The same over `F_p`, kept apart from failures.
    pub characteristic_deviations: Vec<TrialOutcome>,
    pub quadratic_tensors: u64,
    /// Quadratic tensors whose factors are both different from the identity.
    pub corollary_violations: u64,
    pub passed: bool,
}

/// A random `d x d` matrix that is `k`-unipotent: a Jordan matrix whose
/// largest block has size `k`, conjugated by a random unimodular integer
/// matrix.
pub fn random_unipotent<R: Rng>(k: usize, d: usize, field: FieldKind, rng: &mut R) -> Result<ExactMatrix> {
    if k == 0 || d < k {
        return Err(Error::InvalidTrialSpec(format!("no {k}-unipotent matrix of size {d}")));
    }
    let mut blocks = vec![k];
    let mut left = d - k;
    while left > 0 {
        let b = rng.gen_range(1..=left.min(k));
        blocks.push(b);
        left -= b;
    }
    let seed = jordan_rows(&blocks);
    let p = unimodular(d, rng);
    Ok(match field {
        FieldKind::Rationals => ExactMatrix::Rational(conjugate(Rationals, &seed, &p)),
        FieldKind::Prime(q) => ExactMatrix::Prime(conjugate(PrimeField::new(q)?, &seed, &p)),
    })
}

fn jordan_rows(blocks: &[usize]) -> Vec<Vec<i64>> {
    let n: usize = blocks.iter().sum();
    let mut rows = vec![vec![0; n]; n];
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
    rows
}

/// `L * U` with unit diagonals and entries in {-1, 0, 1}, rows permuted.
fn unimodular<R: Rng>(d: usize, rng: &mut R) -> Vec<Vec<i64>> {
    let mut tri = |lower: bool| -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; d]; d];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                if i == j {
                    *entry = 1;
                } else if (lower && j < i) || (!lower && j > i) {
                    *entry = rng.gen_range(-1..=1);
                }
            }
        }
        m
    };
    let (l, u) = (tri(true), tri(false));
    let mut p: Vec<Vec<i64>> = (0..d)
        .map(|i| (0..d).map(|j| (0..d).map(|t| l[i][t] * u[t][j]).sum()).collect())
        .collect();
    for i in (1..d).rev() {
        let j = rng.gen_range(0..=i);
        p.swap(i, j);
    }
    p
}

fn conjugate<F: Field>(field: F, seed: &[Vec<i64>], p: &[Vec<i64>]) -> DenseMatrix<F> {
    let p = DenseMatrix::from_i64_rows(field.clone(), p);
    let inv = p.inverse().expect("unimodular matrices are invertible");
    p.mul(&DenseMatrix::from_i64_rows(field, seed)).mul(&inv)
}

/// Runs `spec.trials` seeded trials. Trial `t` draws from a ChaCha8 stream
/// `t` keyed by `spec.seed`, so each trial is reproducible on its own.
pub fn verify_tensor_lemma(spec: &TensorLemmaSpec) -> Result<TensorLemmaReport> {
    spec.validate()?;
    let expected = spec.expected_degree();
    let mut report = TensorLemmaReport {
        spec: *spec,
        expected_degree: expected,
        degree_histogram: BTreeMap::new(),
        failures: Vec::new(),
        characteristic_deviations: Vec::new(),
        quadratic_tensors: 0,
        corollary_violations: 0,
        passed: true,
    };
    for trial in 0..spec.trials {
        let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
        rng.set_stream(trial);
        let m1 = random_unipotent(spec.k1, spec.dims.0, spec.field, &mut rng)?;
        let m2 = random_unipotent(spec.k2, spec.dims.1, spec.field, &mut rng)?;
        let outcome = TrialOutcome {
            trial,
            degree1: unipotence(&m1)?.degree,
            degree2: unipotence(&m2)?.degree,
            tensor_degree: unipotence(&tensor(&m1, &m2)?)?.degree,
        };
        *report.degree_histogram.entry(outcome.tensor_degree).or_default() += 1;
        if outcome.degree1 != spec.k1 || outcome.degree2 != spec.k2 || outcome.tensor_degree != expected {
            match spec.field {
                FieldKind::Rationals => report.failures.push(outcome),
                FieldKind::Prime(_) => report.characteristic_deviations.push(outcome),
            }
        }
        if outcome.tensor_degree <= 2 {
            report.quadratic_tensors += 1;
            if outcome.degree1 > 1 && outcome.degree2 > 1 {
                report.corollary_violations += 1;
            }
        }
    }
    report.passed = report.failures.is_empty() && report.corollary_violations == 0;
    Ok(report)
}
