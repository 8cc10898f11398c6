use serde::{Deserialize, Serialize};

use super::field::{Field, FieldKind, PrimeField, Rationals};
use super::matrix::DenseMatrix;
use super::{unipotence, ExactMatrix};
use crate::error::{Error, Result};
use crate::minuscule::{MinusculeRep, RepSummary};

/// How the structure constant `c` in `x_alpha(1) v_mu = v_mu + c v_{mu+alpha}`
/// is chosen. Ranks and unipotence degrees of single root elements do not
/// depend on it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SignConvention {
    /// `c = +1` always.
    Uniform,
    /// `c = (-1)^i` where `i` is the position of `mu` in the sorted orbit.
    #[default]
    IndexParity,
}

impl SignConvention {
    fn sign(self, source_index: usize) -> i64 {
        match self {
            SignConvention::Uniform => 1,
            SignConvention::IndexParity if source_index % 2 == 1 => -1,
            SignConvention::IndexParity => 1,
        }
    }
}

/// Index of the positive root with the given simple-root coordinates.
pub fn root_index_of(rep: &MinusculeRep, simple_coords: &[i64]) -> Result<usize> {
    rep.datum()
        .root_index(simple_coords)
        .ok_or_else(|| Error::NotPositiveRoot(format!("{simple_coords:?}")))
}

fn check_roots(rep: &MinusculeRep, roots: &[usize]) -> Result<()> {
    let d = rep.datum();
    if roots.is_empty() {
        return Err(Error::NotPositiveRoot("empty root list".into()));
    }
    for &r in roots {
        if r >= d.num_positive_roots() {
            return Err(Error::IndexOutOfRange {
                index: r,
                len: d.num_positive_roots(),
            });
        }
    }
    for (a, &r) in roots.iter().enumerate() {
        for &s in &roots[a + 1..] {
            if r == s || d.root_coroot_pairing(r, s) != 0 || d.root_coroot_pairing(s, r) != 0 {
                return Err(Error::NotOrthogonal(
                    format!("{:?}", d.positive_roots()[r]),
                    format!("{:?}", d.positive_roots()[s]),
                ));
            }
        }
    }
    Ok(())
}

fn build_in<F: Field>(
    rep: &MinusculeRep,
    roots: &[usize],
    field: F,
    convention: SignConvention,
) -> Result<DenseMatrix<F>> {
    let d = rep.datum();
    let n = rep.dim();
    let mut product: Option<DenseMatrix<F>> = None;
    for &r in roots {
        let alpha = d.root_weight(r);
        let mut x = DenseMatrix::identity(field.clone(), n);
        for (i, mu) in rep.orbit().iter().enumerate() {
            if d.pairing_unchecked(mu, r) != -1 {
                continue;
            }
            let target = mu + &alpha;
            let j = rep
                .weight_index(&target)
                .ok_or_else(|| Error::WeightOutsideOrbit(target.to_string()))?;
            x.set(j, i, field.from_i64(convention.sign(i)));
        }
        product = Some(match product {
            Some(p) => p.mul(&x),
            None => x,
        });
    }
    Ok(product.expect("root list checked nonempty"))
}

/// Matrix of `prod x_alpha(1)` over the given pairwise orthogonal positive
/// roots (indices into the datum's positive roots), in the weight basis.
pub fn build_root_element(
    rep: &MinusculeRep,
    roots: &[usize],
    field: FieldKind,
) -> Result<ExactMatrix> {
    build_root_element_with(rep, roots, field, SignConvention::default())
}

pub fn build_root_element_with(
    rep: &MinusculeRep,
    roots: &[usize],
    field: FieldKind,
    convention: SignConvention,
) -> Result<ExactMatrix> {
    check_roots(rep, roots)?;
    Ok(match field {
        FieldKind::Rationals => ExactMatrix::Rational(build_in(rep, roots, Rationals, convention)?),
        FieldKind::Prime(p) => {
            ExactMatrix::Prime(build_in(rep, roots, PrimeField::new(p)?, convention)?)
        }
    })
}

/// Unipotence degree and drop of a root element (or a product of orthogonal
/// root elements) measured on its matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleDropReport {
    pub rep: RepSummary,
    /// Roots in the simple-root basis.
    pub roots: Vec<Vec<i64>>,
    pub field: FieldKind,
    pub convention: SignConvention,
    pub degree: usize,
    pub drop: usize,
    pub quadratic: bool,
    /// Products of several root elements use signs that are not certified
    /// to come from a group representation.
    pub exploratory: bool,
}

pub fn oracle_drop(
    rep: &MinusculeRep,
    roots: &[usize],
    field: FieldKind,
    convention: SignConvention,
) -> Result<OracleDropReport> {
    let m = build_root_element_with(rep, roots, field, convention)?;
    let u = unipotence(&m)?;
    Ok(OracleDropReport {
        rep: RepSummary::from(rep),
        roots: roots
            .iter()
            .map(|&r| rep.datum().positive_roots()[r].clone())
            .collect(),
        field,
        convention,
        degree: u.degree,
        drop: u.drop,
        quadratic: u.quadratic,
        exploratory: roots.len() > 1,
    })
}
