//! Drops of root elements on minuscule representations, and the scan for
//! symplectic minuscule representations of a given dimension.
//!
//! On a minuscule representation the root element `x_alpha(1)` sends the
//! weight vector `v_mu` to `v_mu +- v_{mu+alpha}` exactly when
//! `<mu, alpha^vee> = -1` and fixes it otherwise. The image of
//! `x_alpha(1) - 1` is therefore spanned by distinct weight vectors, one per
//! weight with pairing `-1`; reflection in `alpha` matches these with the
//! weights of pairing `+1`, which is what gets counted.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, exact_log2};
use crate::error::{Error, Result};
use crate::minuscule::{MinusculeRep, RepName, RepSummary, Sign};
use crate::root_kit::{
    dual_from_orbit, orbit, orbit_size, CartanType, Family, LengthClass, RootDatum, Weight,
};

/// Drops of root elements of each length class on one representation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DropReport {
    pub rep: RepSummary,
    #[serde(with = "big_map")]
    pub per_length_class: BTreeMap<LengthClass, BigUint>,
    pub quadratic: BTreeMap<LengthClass, bool>,
}

impl DropReport {
    pub fn drop(&self, class: LengthClass) -> Option<&BigUint> {
        self.per_length_class.get(&class)
    }

    /// Distinct drop values, ascending.
    pub fn values(&self) -> Vec<BigUint> {
        let mut v: Vec<BigUint> = self.per_length_class.values().cloned().collect();
        v.sort();
        v.dedup();
        v
    }
}

mod big_map {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        m: &BTreeMap<LengthClass, BigUint>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let as_str: BTreeMap<LengthClass, String> =
            m.iter().map(|(k, v)| (*k, v.to_str_radix(10))).collect();
        as_str.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<BTreeMap<LengthClass, BigUint>, D::Error> {
        let raw = BTreeMap::<LengthClass, String>::deserialize(d)?;
        raw.into_iter()
            .map(|(k, v)| {
                v.parse::<BigUint>()
                    .map(|b| (k, b))
                    .map_err(serde::de::Error::custom)
            })
            .collect()
    }
}

/// Number of weights `mu` of the representation with `<mu, beta^vee> = 1`
/// for the positive root at `root_index`.
pub fn drop_for_root(rep: &MinusculeRep, root_index: usize) -> usize {
    let d = rep.datum();
    rep.orbit()
        .iter()
        .filter(|mu| d.pairing_unchecked(mu, root_index) == 1)
        .count()
}

fn check_class(rep: &MinusculeRep, class: LengthClass) -> Result<usize> {
    let d = rep.datum();
    let Some(idx) = d.highest_root_of_class(class) else {
        return Err(Error::NoSuchClass {
            cartan_type: rep.cartan_type().to_string(),
            class: class.to_string(),
        });
    };
    if !rep.pairings_within_unit(class) {
        return Err(Error::NotQuadratic {
            rep: rep.label(),
            class: class.to_string(),
        });
    }
    Ok(idx)
}

/// Drop of a root element whose root lies in `class`, measured on the
/// highest root of that class.
pub fn root_element_drop(rep: &MinusculeRep, class: LengthClass) -> Result<BigUint> {
    let idx = check_class(rep, class)?;
    Ok(BigUint::from(drop_for_root(rep, idx)))
}

pub fn drop_spectrum(rep: &MinusculeRep) -> DropReport {
    let mut per_length_class = BTreeMap::new();
    let mut quadratic = BTreeMap::new();
    for class in rep.datum().classes_present() {
        let q = rep.pairings_within_unit(class);
        quadratic.insert(class, q);
        if let Ok(v) = root_element_drop(rep, class) {
            per_length_class.insert(class, v);
        }
    }
    DropReport {
        rep: RepSummary::from(rep),
        per_length_class,
        quadratic,
    }
}

/// One symplectic minuscule representation of the requested dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub cartan_type: CartanType,
    /// Bourbaki index of the highest weight.
    pub weight: usize,
    pub name: RepName,
    /// The family parameter: `r` for `Λ^r Std` of `SL_{2r}`, the rank for
    /// the B, C and D families.
    pub r: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateList {
    #[serde(with = "crate::serde_big")]
    pub two_g: BigUint,
    pub candidates: Vec<Candidate>,
}

/// Ranks worth scanning in each classical family for a representation of
/// dimension `two_g`. Families grow as `n + 1`, `2^n`, `2n` and `2n`/`2^(n-1)`
/// in their smallest minuscule representations, which bounds each scan.
fn candidate_weights(two_g: u64) -> Vec<(CartanType, Vec<usize>)> {
    let mut out = Vec::new();
    let target = BigUint::from(two_g);

    // A_n: binomial(n + 1, j) grows in n for fixed j, and is at least j + 1
    let mut by_rank: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for j in 1..two_g {
        for n in j.. {
            let dim = binomial(n + 1, j);
            if dim > target {
                break;
            }
            if dim == target {
                by_rank.entry(n as usize).or_default().push(j as usize);
            }
        }
    }
    for (n, mut js) in by_rank {
        js.sort_unstable();
        js.dedup();
        out.push((CartanType::new(Family::A, n).expect("rank >= 1"), js));
    }

    let all = |t: CartanType| (t, (1..=t.rank()).collect::<Vec<_>>());
    let log = exact_log2(&target).map(|e| e as usize);
    if let Some(r) = log {
        if let Ok(t) = CartanType::new(Family::B, r) {
            out.push(all(t));
        }
    }
    let half = (two_g / 2) as usize;
    if let Ok(t) = CartanType::new(Family::C, half) {
        out.push(all(t));
    }
    let mut d_ranks = vec![half];
    if let Some(r) = log {
        d_ranks.push(r + 1);
    }
    d_ranks.sort_unstable();
    d_ranks.dedup();
    for r in d_ranks {
        if let Ok(t) = CartanType::new(Family::D, r) {
            out.push(all(t));
        }
    }
    out
}

/// Every pair (classical type, minuscule weight) whose representation is
/// symplectic of dimension `two_g`.
pub fn classify_symplectic_minuscule(two_g: u64) -> Result<CandidateList> {
    if two_g < 2 || !two_g.is_multiple_of(2) {
        return Err(Error::InvalidDimension(two_g.to_string()));
    }
    let target = BigUint::from(two_g);
    let mut data: HashMap<CartanType, Arc<RootDatum>> = HashMap::new();
    let mut candidates = Vec::new();

    for (t, weights) in candidate_weights(two_g) {
        let cartan = t.cartan_matrix();
        let cols: Vec<_> = (0..t.rank()).map(|j| cartan.column_support(j)).collect();
        for j in weights {
            let w = Weight::fundamental(t.rank(), j);
            if orbit_size(&cartan, &w) != target {
                continue;
            }
            let Some(weights) = orbit(&cols, &w, two_g as usize) else {
                continue;
            };
            if dual_from_orbit(&weights) != w {
                continue;
            }
            let datum = data.entry(t).or_insert_with(|| Arc::new(RootDatum::new(t)));
            let Ok(rep) = MinusculeRep::new(Arc::clone(datum), w) else {
                continue;
            };
            if rep.sign() != Sign::Symplectic {
                continue;
            }
            let r = match t.family() {
                Family::A => j as u64,
                _ => t.rank() as u64,
            };
            candidates.push(Candidate {
                cartan_type: t,
                weight: j,
                name: rep.name(),
                r,
            });
        }
    }
    candidates.sort_by_key(|c| (c.cartan_type, c.weight));
    Ok(CandidateList {
        two_g: target,
        candidates,
    })
}

impl CandidateList {
    pub fn contains(&self, t: CartanType, weight: usize) -> bool {
        self.candidates
            .iter()
            .any(|c| c.cartan_type == t && c.weight == weight)
    }

    pub fn two_g_u64(&self) -> Option<u64> {
        self.two_g.to_u64()
    }
}
