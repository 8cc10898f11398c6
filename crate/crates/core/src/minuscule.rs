//! Minuscule weights, their representations, dimensions and duality signs.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_kit::{dual_from_orbit, CartanType, Family, LengthClass, RootDatum, Weight};

/// Frobenius-Schur type of a representation: `+1` orthogonal, `-1`
/// symplectic, `0` not self-dual.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "i8", into = "i8")]
pub enum Sign {
    Orthogonal,
    Symplectic,
    NotSelfDual,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Orthogonal => 1,
            Sign::Symplectic => -1,
            Sign::NotSelfDual => 0,
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        s.value()
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;
    fn try_from(v: i8) -> std::result::Result<Self, String> {
        match v {
            1 => Ok(Sign::Orthogonal),
            -1 => Ok(Sign::Symplectic),
            0 => Ok(Sign::NotSelfDual),
            other => Err(format!("sign must be -1, 0 or 1, got {other}")),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Orthogonal => "+1",
            Sign::Symplectic => "-1",
            Sign::NotSelfDual => "0",
        })
    }
}

/// Short name of a minuscule representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RepName {
    Std,
    /// `Λ^j Std` of `SL_{n+1}`.
    Wedge(usize),
    Spin,
    SpinPlus,
    SpinMinus,
    /// Minuscule representations of E6/E7, named by Bourbaki index.
    Fundamental(usize),
}

impl RepName {
    /// Name of the representation with highest weight `varpi_j`.
    pub fn for_fundamental(t: CartanType, j: usize) -> RepName {
        let n = t.rank();
        match (t.family(), j) {
            (Family::A, 1) => RepName::Std,
            (Family::A, j) => RepName::Wedge(j),
            (Family::B, j) if j == n => RepName::Spin,
            (Family::C, 1) | (Family::D, 1) | (Family::B, 1) => RepName::Std,
            (Family::D, j) if j == n => RepName::SpinPlus,
            (Family::D, j) if j + 1 == n => RepName::SpinMinus,
            (_, j) => RepName::Fundamental(j),
        }
    }
}

impl fmt::Display for RepName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepName::Std => f.write_str("Std"),
            RepName::Wedge(j) => write!(f, "Λ^{j} Std"),
            RepName::Spin => f.write_str("Spin"),
            RepName::SpinPlus => f.write_str("Spin+"),
            RepName::SpinMinus => f.write_str("Spin-"),
            RepName::Fundamental(j) => write!(f, "V(w{j})"),
        }
    }
}

/// An irreducible representation with minuscule highest weight, together
/// with its weights (one Weyl orbit, each of multiplicity one).
#[derive(Debug, Clone)]
pub struct MinusculeRep {
    datum: Arc<RootDatum>,
    highest_weight: Weight,
    name: RepName,
    sign: Sign,
    orbit: Vec<Weight>,
}

impl MinusculeRep {
    pub fn new(datum: Arc<RootDatum>, highest_weight: Weight) -> Result<Self> {
        if !is_minuscule(&datum, &highest_weight)? {
            return Err(Error::NotMinuscule {
                cartan_type: datum.cartan_type().to_string(),
                weight: highest_weight.to_string(),
            });
        }
        let orbit = datum.weyl_orbit(&highest_weight)?;
        let dual = dual_from_orbit(&orbit);
        let sign = if dual == highest_weight {
            parity_sign(&datum, &highest_weight)
        } else {
            Sign::NotSelfDual
        };
        let name = match highest_weight.fundamental_index() {
            Some(j) => RepName::for_fundamental(datum.cartan_type(), j),
            None => unreachable!("minuscule weights of irreducible systems are fundamental"),
        };
        Ok(MinusculeRep {
            datum,
            highest_weight,
            name,
            sign,
            orbit,
        })
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn shared_datum(&self) -> Arc<RootDatum> {
        Arc::clone(&self.datum)
    }

    pub fn cartan_type(&self) -> CartanType {
        self.datum.cartan_type()
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.highest_weight
    }

    /// Bourbaki index `j` of the highest weight `varpi_j`.
    pub fn fundamental_index(&self) -> usize {
        self.highest_weight.fundamental_index().expect("fundamental")
    }

    pub fn name(&self) -> RepName {
        self.name
    }

    pub fn dimension(&self) -> BigUint {
        BigUint::from(self.orbit.len())
    }

    pub fn dim(&self) -> usize {
        self.orbit.len()
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    /// Weights of the representation, sorted lexicographically.
    pub fn orbit(&self) -> &[Weight] {
        &self.orbit
    }

    /// Position of a weight in [`Self::orbit`].
    pub fn weight_index(&self, mu: &Weight) -> Option<usize> {
        self.orbit.binary_search(mu).ok()
    }

    /// Whether `<mu, beta^vee>` lies in `{-1, 0, 1}` for every weight `mu`
    /// and every coroot `beta^vee` of the class. The orbit and the coroots
    /// of a class are both W-stable, so it is enough to pair the highest
    /// weight against the positive coroots of the class.
    pub fn pairings_within_unit(&self, class: LengthClass) -> bool {
        (0..self.datum.num_positive_roots())
            .filter(|&i| self.datum.length_class(i) == class)
            .all(|i| self.datum.pairing_unchecked(&self.highest_weight, i).abs() <= 1)
    }

    /// Whether the weight lies outside the classical A/B/C/D table.
    pub fn outside_classical_table(&self) -> bool {
        !self.cartan_type().family().is_classical()
    }

    pub fn label(&self) -> String {
        format!("{} w{} ({})", self.cartan_type(), self.fundamental_index(), self.name)
    }
}

impl fmt::Display for MinusculeRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Serializable description of a minuscule representation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepSummary {
    pub cartan_type: CartanType,
    /// Bourbaki index `j` of the highest weight `varpi_j`.
    pub weight: usize,
    pub name: RepName,
    #[serde(with = "crate::serde_big")]
    pub dimension: BigUint,
    pub sign: Sign,
    pub outside_classical_table: bool,
}

impl From<&MinusculeRep> for RepSummary {
    fn from(rep: &MinusculeRep) -> Self {
        RepSummary {
            cartan_type: rep.cartan_type(),
            weight: rep.fundamental_index(),
            name: rep.name(),
            dimension: rep.dimension(),
            sign: rep.sign(),
            outside_classical_table: rep.outside_classical_table(),
        }
    }
}

/// `(-1)^p` with `p = sum over positive coroots of <w, alpha^vee>`.
fn parity_sign(datum: &RootDatum, w: &Weight) -> Sign {
    let p: i64 = (0..datum.num_positive_roots())
        .map(|i| datum.pairing_unchecked(w, i))
        .sum();
    if p % 2 == 0 {
        Sign::Orthogonal
    } else {
        Sign::Symplectic
    }
}

fn check_highest_weight(datum: &RootDatum, w: &Weight) -> Result<()> {
    if w.rank() != datum.rank() {
        return Err(Error::RankMismatch {
            got: w.rank(),
            rank: datum.rank(),
        });
    }
    if !w.is_dominant() {
        return Err(Error::NotDominant(w.to_string()));
    }
    if w.is_zero() {
        return Err(Error::ZeroWeight);
    }
    Ok(())
}

/// True iff `<w, alpha^vee>` is 0 or 1 for every positive coroot.
pub fn is_minuscule(datum: &RootDatum, w: &Weight) -> Result<bool> {
    check_highest_weight(datum, w)?;
    Ok((0..datum.num_positive_roots()).all(|i| datum.pairing_unchecked(w, i) <= 1))
}

/// Duality sign of the representation with minuscule highest weight `w`.
pub fn duality_sign(datum: &RootDatum, w: &Weight) -> Result<Sign> {
    if !is_minuscule(datum, w)? {
        return Err(Error::NotMinuscule {
            cartan_type: datum.cartan_type().to_string(),
            weight: w.to_string(),
        });
    }
    if datum.dual_weight(w)? != *w {
        return Ok(Sign::NotSelfDual);
    }
    Ok(parity_sign(datum, w))
}

/// Bourbaki indices of the minuscule fundamental weights.
pub fn minuscule_indices(datum: &RootDatum) -> Vec<usize> {
    let n = datum.rank();
    (1..=n)
        .filter(|&j| is_minuscule(datum, &Weight::fundamental(n, j)).unwrap_or(false))
        .collect()
}

/// Every minuscule representation of `t`, ordered by Bourbaki index.
pub fn enumerate_minuscule(t: CartanType) -> Vec<MinusculeRep> {
    let datum = Arc::new(RootDatum::new(t));
    enumerate_in(&datum, None)
}

/// Minuscule representations of `t` with dimension at most `max_dim`. Orbit
/// sizes are computed from Weyl group orders first, so large orbits are
/// never enumerated.
pub fn minuscule_up_to_dim(t: CartanType, max_dim: usize) -> Vec<MinusculeRep> {
    let datum = Arc::new(RootDatum::new(t));
    enumerate_in(&datum, Some(max_dim))
}

pub(crate) fn enumerate_in(datum: &Arc<RootDatum>, max_dim: Option<usize>) -> Vec<MinusculeRep> {
    let n = datum.rank();
    minuscule_indices(datum)
        .into_iter()
        .map(|j| Weight::fundamental(n, j))
        .filter(|w| match max_dim {
            Some(m) => datum.weyl_orbit_size(w).expect("dominant") <= BigUint::from(m),
            None => true,
        })
        .map(|w| MinusculeRep::new(Arc::clone(datum), w).expect("minuscule by construction"))
        .collect()
}
