use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::cartan::{CartanMatrix, CartanType};
use super::weight::Weight;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LengthClass {
    Long,
    Short,
}

impl fmt::Display for LengthClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LengthClass::Long => "long",
            LengthClass::Short => "short",
        })
    }
}

/// Positive roots, coroots and length classes of an irreducible root system.
///
/// Roots are stored in the simple-root basis, coroots in the simple-coroot
/// basis; both lists share one index and are sorted lexicographically on the
/// root coordinates.
#[derive(Debug, Clone)]
pub struct RootDatum {
    cartan_type: CartanType,
    cartan: CartanMatrix,
    rows: Vec<Vec<(usize, i64)>>,
    cols: Vec<Vec<(usize, i64)>>,
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    classes: Vec<LengthClass>,
    index: HashMap<Vec<i64>, usize>,
}

impl RootDatum {
    pub fn new(cartan_type: CartanType) -> Self {
        let cartan = cartan_type.cartan_matrix();
        let n = cartan.size();
        let rows: Vec<_> = (0..n).map(|i| cartan.row_support(i)).collect();
        let cols: Vec<_> = (0..n).map(|j| cartan.column_support(j)).collect();

        let mut roots = positive_roots(&rows);
        roots.sort();

        let sym = symmetrizer(&cartan);
        let mut norms = Vec::with_capacity(roots.len());
        let mut coroots = Vec::with_capacity(roots.len());
        for beta in &roots {
            // 2(beta, beta) = sum_i beta_i d_i <beta, alpha_i^vee>
            let norm2: i64 = (0..n)
                .filter(|&i| beta[i] != 0)
                .map(|i| beta[i] * sym[i] * pair_simple(&rows[i], beta))
                .sum();
            let coroot: Vec<i64> = (0..n)
                .map(|j| {
                    let num = 2 * beta[j] * sym[j];
                    debug_assert_eq!(num % norm2, 0);
                    num / norm2
                })
                .collect();
            norms.push(norm2);
            coroots.push(coroot);
        }
        let long = norms.iter().copied().max().unwrap_or(0);
        let classes = norms
            .iter()
            .map(|&v| if v == long { LengthClass::Long } else { LengthClass::Short })
            .collect();
        let index = roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();

        RootDatum {
            cartan_type,
            cartan,
            rows,
            cols,
            roots,
            coroots,
            classes,
            index,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan.size()
    }

    pub fn cartan_matrix(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn coroots(&self) -> &[Vec<i64>] {
        &self.coroots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn length_class(&self, idx: usize) -> LengthClass {
        self.classes[idx]
    }

    pub fn length_classes(&self) -> &[LengthClass] {
        &self.classes
    }

    /// Length classes present, long first.
    pub fn classes_present(&self) -> Vec<LengthClass> {
        let mut out = vec![LengthClass::Long];
        if self.classes.contains(&LengthClass::Short) {
            out.push(LengthClass::Short);
        }
        out
    }

    pub fn root_index(&self, simple_coords: &[i64]) -> Option<usize> {
        self.index.get(simple_coords).copied()
    }

    pub fn height(&self, idx: usize) -> i64 {
        self.roots[idx].iter().sum()
    }

    /// The highest root of a length class: maximal height, ties broken by the
    /// lexicographically largest coordinates.
    pub fn highest_root_of_class(&self, class: LengthClass) -> Option<usize> {
        (0..self.roots.len())
            .filter(|&i| self.classes[i] == class)
            .max_by(|&a, &b| {
                self.height(a)
                    .cmp(&self.height(b))
                    .then_with(|| self.roots[a].cmp(&self.roots[b]))
            })
    }

    fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch {
                got: w.rank(),
                rank: self.rank(),
            });
        }
        Ok(())
    }

    /// `<w, beta^vee>` for the positive coroot at `coroot_index`.
    pub fn pairing(&self, w: &Weight, coroot_index: usize) -> Result<i64> {
        self.check_rank(w)?;
        if coroot_index >= self.coroots.len() {
            return Err(Error::IndexOutOfRange {
                index: coroot_index,
                len: self.coroots.len(),
            });
        }
        Ok(self.pairing_unchecked(w, coroot_index))
    }

    #[inline]
    pub(crate) fn pairing_unchecked(&self, w: &Weight, coroot_index: usize) -> i64 {
        w.coords()
            .iter()
            .zip(&self.coroots[coroot_index])
            .map(|(a, b)| a * b)
            .sum()
    }

    /// `<alpha_a, alpha_b^vee>` for positive roots `a` and `b`.
    pub fn root_coroot_pairing(&self, a: usize, b: usize) -> i64 {
        let root = &self.roots[a];
        self.coroots[b]
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(j, &c)| c * pair_simple(&self.rows[j], root))
            .sum()
    }

    /// Simple root `alpha_i` (0-based) in the fundamental-weight basis.
    pub fn simple_root_weight(&self, i: usize) -> Weight {
        let mut w = Weight::zero(self.rank());
        for &(k, a) in &self.cols[i] {
            w.coords_mut()[k] = a;
        }
        w
    }

    /// Positive root at `idx` in the fundamental-weight basis.
    pub fn root_weight(&self, idx: usize) -> Weight {
        let mut w = Weight::zero(self.rank());
        for (j, &b) in self.roots[idx].iter().enumerate() {
            if b != 0 {
                for &(k, a) in &self.cols[j] {
                    w.coords_mut()[k] += b * a;
                }
            }
        }
        w
    }

    /// Reflection of `mu` in the positive root at `idx`.
    pub fn reflect(&self, mu: &Weight, idx: usize) -> Weight {
        let p = self.pairing_unchecked(mu, idx);
        if p == 0 {
            return mu.clone();
        }
        let beta = self.root_weight(idx);
        let mut out = mu.clone();
        for (o, b) in out.coords_mut().iter_mut().zip(beta.coords()) {
            *o -= p * b;
        }
        out
    }

    /// Weyl orbit of a dominant weight, sorted lexicographically.
    pub fn weyl_orbit(&self, w: &Weight) -> Result<Vec<Weight>> {
        self.check_rank(w)?;
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.to_string()));
        }
        Ok(orbit(&self.cols, w, usize::MAX).expect("uncapped orbit"))
    }

    /// `-w_0(w)`: highest weight of the dual representation.
    pub fn dual_weight(&self, w: &Weight) -> Result<Weight> {
        let orbit = self.weyl_orbit(w)?;
        Ok(dual_from_orbit(&orbit))
    }

    /// `|W| / |W_J|` where `J` is the stabiliser of the dominant weight `w`.
    pub fn weyl_orbit_size(&self, w: &Weight) -> Result<BigUint> {
        self.check_rank(w)?;
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.to_string()));
        }
        Ok(orbit_size(&self.cartan, w))
    }

    pub fn weyl_group_order(&self) -> BigUint {
        let all: Vec<usize> = (0..self.rank()).collect();
        self.cartan.weyl_group_order(&all)
    }

}

#[inline]
fn pair_simple(row: &[(usize, i64)], beta: &[i64]) -> i64 {
    row.iter().map(|&(j, a)| a * beta[j]).sum()
}

/// Positive roots in the simple-root basis, by closure under the simple
/// reflections that raise height.
fn positive_roots(rows: &[Vec<(usize, i64)>]) -> Vec<Vec<i64>> {
    let n = rows.len();
    let mut roots: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    let mut seen: HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut k = 0;
    while k < roots.len() {
        for (i, row) in rows.iter().enumerate() {
            let p = pair_simple(row, &roots[k]);
            if p < 0 {
                let mut next = roots[k].clone();
                next[i] -= p;
                if !seen.contains(&next) {
                    seen.insert(next.clone());
                    roots.push(next);
                }
            }
        }
        k += 1;
    }
    roots
}

/// Squared simple-root lengths `d_i`, scaled to coprime integers.
fn symmetrizer(cartan: &CartanMatrix) -> Vec<i64> {
    let n = cartan.size();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
    let mut queue = VecDeque::new();
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Ratio::from_integer(1));
        queue.push_back(start);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if i != j && cartan.get(i, j) != 0 && d[j].is_none() {
                    // d_i A[i][j] = d_j A[j][i]
                    d[j] = Some(d[i].unwrap() * cartan.get(i, j) / cartan.get(j, i));
                    queue.push_back(j);
                }
            }
        }
    }
    let d: Vec<Ratio<i64>> = d.into_iter().map(Option::unwrap).collect();
    let lcm = d.iter().fold(1i64, |acc, r| acc.lcm(r.denom()));
    d.iter().map(|r| (r * lcm).to_integer()).collect()
}

/// Breadth-first closure of `w` under the simple reflections, given the
/// column supports of the Cartan matrix. Returns `None` once the orbit
/// exceeds `cap` elements.
pub(crate) fn orbit(cols: &[Vec<(usize, i64)>], w: &Weight, cap: usize) -> Option<Vec<Weight>> {
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut out = vec![w.clone()];
    seen.insert(w.clone());
    let mut k = 0;
    while k < out.len() {
        for (i, col) in cols.iter().enumerate() {
            let c = out[k].coords()[i];
            if c == 0 {
                continue;
            }
            let mut next = out[k].clone();
            for &(row, a) in col {
                next.coords_mut()[row] -= c * a;
            }
            if seen.insert(next.clone()) {
                if out.len() == cap {
                    return None;
                }
                out.push(next);
            }
        }
        k += 1;
    }
    out.sort();
    Some(out)
}

pub(crate) fn orbit_size(cartan: &CartanMatrix, w: &Weight) -> BigUint {
    let stabiliser: Vec<usize> = (0..cartan.size()).filter(|&i| w.coords()[i] == 0).collect();
    let all: Vec<usize> = (0..cartan.size()).collect();
    cartan.weyl_group_order(&all) / cartan.weyl_group_order(&stabiliser)
}

pub(crate) fn dual_from_orbit(orbit: &[Weight]) -> Weight {
    let low = orbit
        .iter()
        .find(|mu| mu.is_antidominant())
        .expect("every Weyl orbit has an antidominant element");
    -low
}
