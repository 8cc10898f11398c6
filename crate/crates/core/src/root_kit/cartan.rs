//! Cartan types, Cartan matrices and Weyl group orders.
//!
//! Convention: `A[i][j] = <alpha_j, alpha_i^vee>`. The simple root `alpha_j`
//! expressed in the fundamental-weight basis is therefore the j-th column.
//! Node numbering follows Bourbaki:
//!
//! | type | diagram                                   |
//! |------|-------------------------------------------|
//! | A_n  | 1 - 2 - ... - n                           |
//! | B_n  | 1 - ... - (n-1) => n   (alpha_n short)    |
//! | C_n  | 1 - ... - (n-1) <= n   (alpha_n long)     |
//! | D_n  | 1 - ... - (n-2) - (n-1), (n-2) - n        |
//! | E6   | 1 - 3 - 4 - 5 - 6, 2 - 4                  |
//! | E7   | 1 - 3 - 4 - 5 - 6 - 7, 2 - 4              |
//! | F4   | 1 - 2 => 3 - 4        (alpha_1, alpha_2 long) |
//! | G2   | 1 <= 2                (alpha_2 long)      |

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
    F4,
    G2,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E6,
        Family::E7,
        Family::F4,
        Family::G2,
    ];

    /// Rank fixed by the label for exceptional families.
    pub fn fixed_rank(self) -> Option<usize> {
        match self {
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::F4 => Some(4),
            Family::G2 => Some(2),
            _ => None,
        }
    }

    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 3,
            other => other.fixed_rank().unwrap(),
        }
    }

    pub fn is_classical(self) -> bool {
        self.fixed_rank().is_none()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::F4 => "F4",
            Family::G2 => "G2",
        };
        f.write_str(s)
    }
}

/// A validated (family, rank) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "CartanTypeRepr", into = "CartanTypeRepr")]
pub struct CartanType {
    family: Family,
    rank: usize,
}

#[derive(Serialize, Deserialize)]
struct CartanTypeRepr {
    family: Family,
    rank: usize,
}

impl TryFrom<CartanTypeRepr> for CartanType {
    type Error = Error;
    fn try_from(r: CartanTypeRepr) -> Result<Self> {
        CartanType::new(r.family, r.rank)
    }
}

impl From<CartanType> for CartanTypeRepr {
    fn from(t: CartanType) -> Self {
        CartanTypeRepr {
            family: t.family,
            rank: t.rank,
        }
    }
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let invalid = |reason: String| Error::InvalidType {
            label: format!("{family}{rank}"),
            reason,
        };
        match family.fixed_rank() {
            Some(r) if r != rank => Err(invalid(format!("{family} has rank {r}"))),
            Some(_) => Ok(CartanType { family, rank }),
            None if rank < family.min_rank() => Err(invalid(format!(
                "{family}_n requires n >= {}",
                family.min_rank()
            ))),
            None => Ok(CartanType { family, rank }),
        }
    }

    /// Exceptional types carry their rank in the label.
    pub fn exceptional(family: Family) -> Result<Self> {
        match family.fixed_rank() {
            Some(r) => Ok(CartanType { family, rank: r }),
            None => Err(Error::InvalidType {
                label: family.to_string(),
                reason: "classical families need an explicit rank".into(),
            }),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(&self) -> bool {
        !matches!(self.family, Family::B | Family::C | Family::F4 | Family::G2)
    }

    /// Number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E6 => 36,
            Family::E7 => 63,
            Family::F4 => 24,
            Family::G2 => 6,
        }
    }

    pub fn cartan_matrix(&self) -> CartanMatrix {
        let n = self.rank;
        let mut m = CartanMatrix::diagonal(n);
        match self.family {
            Family::A => m.chain(0..n),
            Family::B => {
                m.chain(0..n - 1);
                // alpha_{n-1} long, alpha_n short
                m.bond(n - 2, n - 1, -1, -2);
            }
            Family::C => {
                m.chain(0..n - 1);
                m.bond(n - 2, n - 1, -2, -1);
            }
            Family::D => {
                m.chain(0..n - 1);
                m.bond(n - 3, n - 1, -1, -1);
            }
            Family::E6 | Family::E7 => {
                m.bond(0, 2, -1, -1);
                m.chain(2..n);
                m.bond(1, 3, -1, -1);
            }
            Family::F4 => {
                m.bond(0, 1, -1, -1);
                m.bond(1, 2, -1, -2);
                m.bond(2, 3, -1, -1);
            }
            Family::G2 => m.bond(0, 1, -3, -1),
        }
        m
    }

    pub fn weyl_group_order(&self) -> BigUint {
        let m = self.cartan_matrix();
        let all: Vec<usize> = (0..self.rank).collect();
        m.weyl_group_order(&all)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.is_classical() {
            write!(f, "{}{}", self.family, self.rank)
        } else {
            write!(f, "{}", self.family)
        }
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Accepts `A5`, `a5`, `A_5`, `E6`, `f4`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase().replace('_', "");
        let bad = || Error::InvalidType {
            label: s.to_string(),
            reason: "expected a label such as A5, B3, C4, D6, E6, E7, F4, G2".into(),
        };
        match t.as_str() {
            "E6" => return CartanType::exceptional(Family::E6),
            "E7" => return CartanType::exceptional(Family::E7),
            "F4" => return CartanType::exceptional(Family::F4),
            "G2" => return CartanType::exceptional(Family::G2),
            _ => {}
        }
        let mut chars = t.chars();
        let family = match chars.next() {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        CartanType::new(family, rank)
    }
}

/// Square integer Cartan matrix with cached sparsity pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl CartanMatrix {
    fn diagonal(n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 2;
        }
        CartanMatrix { n, entries }
    }

    /// Sets `A[i][j] = a_ij` and `A[j][i] = a_ji`.
    fn bond(&mut self, i: usize, j: usize, a_ij: i64, a_ji: i64) {
        self.entries[i * self.n + j] = a_ij;
        self.entries[j * self.n + i] = a_ji;
    }

    fn chain(&mut self, nodes: std::ops::Range<usize>) {
        for i in nodes.start..nodes.end.saturating_sub(1) {
            self.bond(i, i + 1, -1, -1);
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let entries = rows.iter().flat_map(|r| r.iter().copied()).collect();
        CartanMatrix { n, entries }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// Nonzero `(j, A[i][j])` pairs of row `i`.
    pub fn row_support(&self, i: usize) -> Vec<(usize, i64)> {
        (0..self.n)
            .filter_map(|j| {
                let a = self.get(i, j);
                (a != 0).then_some((j, a))
            })
            .collect()
    }

    /// Nonzero `(k, A[k][j])` pairs of column `j`: the simple root `alpha_j`
    /// in the fundamental-weight basis.
    pub fn column_support(&self, j: usize) -> Vec<(usize, i64)> {
        (0..self.n)
            .filter_map(|k| {
                let a = self.get(k, j);
                (a != 0).then_some((k, a))
            })
            .collect()
    }

    fn neighbours(&self, i: usize, within: &[bool]) -> Vec<usize> {
        (0..self.n)
            .filter(|&j| j != i && within[j] && self.get(i, j) != 0)
            .collect()
    }

    /// Order of the Weyl group generated by the simple reflections in
    /// `nodes`. Each connected component of the sub-diagram is identified
    /// as a finite type and contributes its standard order.
    pub fn weyl_group_order(&self, nodes: &[usize]) -> BigUint {
        let mut within = vec![false; self.n];
        for &i in nodes {
            within[i] = true;
        }
        let mut seen = vec![false; self.n];
        let mut order = BigUint::one();
        for &start in nodes {
            if seen[start] {
                continue;
            }
            let mut component = vec![start];
            seen[start] = true;
            let mut k = 0;
            while k < component.len() {
                for j in self.neighbours(component[k], &within) {
                    if !seen[j] {
                        seen[j] = true;
                        component.push(j);
                    }
                }
                k += 1;
            }
            order *= self.component_weyl_order(&component, &within);
        }
        order
    }

    fn component_weyl_order(&self, nodes: &[usize], within: &[bool]) -> BigUint {
        let k = nodes.len() as u64;
        let factorial = |m: u64| -> BigUint { (1..=m).fold(BigUint::one(), |acc, i| acc * i) };
        let mut bonds = Vec::new();
        for (a, &i) in nodes.iter().enumerate() {
            for &j in &nodes[a + 1..] {
                let m = self.get(i, j) * self.get(j, i);
                if m != 0 {
                    bonds.push((i, j, m));
                }
            }
        }
        let degree = |i: usize| self.neighbours(i, within).len();
        if bonds.iter().any(|b| b.2 == 3) {
            return BigUint::from(12u32);
        }
        if let Some(&(i, j, _)) = bonds.iter().find(|b| b.2 == 2) {
            if k == 4 && degree(i) == 2 && degree(j) == 2 {
                return BigUint::from(1152u32);
            }
            return (BigUint::one() << k) * factorial(k);
        }
        let Some(&branch) = nodes.iter().find(|&&i| degree(i) == 3) else {
            return factorial(k + 1);
        };
        let mut arms: Vec<usize> = self
            .neighbours(branch, within)
            .into_iter()
            .map(|start| {
                let (mut prev, mut cur, mut len) = (branch, start, 1);
                loop {
                    let next: Vec<usize> = self
                        .neighbours(cur, within)
                        .into_iter()
                        .filter(|&x| x != prev)
                        .collect();
                    match next.first() {
                        Some(&nx) => {
                            prev = cur;
                            cur = nx;
                            len += 1;
                        }
                        None => break len,
                    }
                }
            })
            .collect();
        arms.sort_unstable();
        match arms.as_slice() {
            [1, 1, _] => (BigUint::one() << (k - 1)) * factorial(k),
            [1, 2, 2] => BigUint::from(51_840u32),
            [1, 2, 3] => BigUint::from(2_903_040u32),
            [1, 2, 4] => BigUint::from(696_729_600u32),
            other => unreachable!("not a finite-type diagram: arms {other:?}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(f: Family, n: usize) -> CartanType {
        CartanType::new(f, n).unwrap()
    }

    #[test]
    fn rank_bounds() {
        assert!(CartanType::new(Family::A, 0).is_err());
        assert!(CartanType::new(Family::B, 1).is_err());
        assert!(CartanType::new(Family::C, 1).is_err());
        assert!(CartanType::new(Family::D, 2).is_err());
        assert!(CartanType::new(Family::E6, 7).is_err());
        assert!(CartanType::new(Family::D, 3).is_ok());
        assert!(CartanType::new(Family::F4, 4).is_ok());
    }

    #[test]
    fn parses_labels() {
        assert_eq!("A5".parse::<CartanType>().unwrap(), t(Family::A, 5));
        assert_eq!("d_6".parse::<CartanType>().unwrap(), t(Family::D, 6));
        assert_eq!("e7".parse::<CartanType>().unwrap(), t(Family::E7, 7));
        assert!("B1".parse::<CartanType>().is_err());
        assert!("X3".parse::<CartanType>().is_err());
        assert!("A".parse::<CartanType>().is_err());
        assert_eq!(t(Family::G2, 2).to_string(), "G2");
        assert_eq!(t(Family::C, 10).to_string(), "C10");
    }

    #[test]
    fn matrices_are_generalised_cartan() {
        for f in Family::ALL {
            let ranks: Vec<usize> = match f.fixed_rank() {
                Some(r) => vec![r],
                None => (f.min_rank()..=9).collect(),
            };
            for n in ranks {
                let m = t(f, n).cartan_matrix();
                for i in 0..n {
                    assert_eq!(m.get(i, i), 2);
                    for j in 0..n {
                        if i != j {
                            assert!(m.get(i, j) <= 0);
                            assert_eq!(m.get(i, j) == 0, m.get(j, i) == 0);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn b2_and_g2_bonds() {
        let b2 = t(Family::B, 2).cartan_matrix();
        assert_eq!(b2.rows(), vec![vec![2, -1], vec![-2, 2]]);
        let c2 = t(Family::C, 2).cartan_matrix();
        assert_eq!(c2.rows(), vec![vec![2, -2], vec![-1, 2]]);
        let g2 = t(Family::G2, 2).cartan_matrix();
        assert_eq!(g2.rows(), vec![vec![2, -3], vec![-1, 2]]);
    }

    #[test]
    fn weyl_orders() {
        let fact = |m: u64| (1..=m).fold(BigUint::one(), |a, i| a * i);
        for n in 1..=10u64 {
            assert_eq!(t(Family::A, n as usize).weyl_group_order(), fact(n + 1));
        }
        for n in 2..=10u64 {
            let bc = (BigUint::one() << n) * fact(n);
            assert_eq!(t(Family::B, n as usize).weyl_group_order(), bc);
            assert_eq!(t(Family::C, n as usize).weyl_group_order(), bc);
        }
        for n in 3..=10u64 {
            let d = (BigUint::one() << (n - 1)) * fact(n);
            assert_eq!(t(Family::D, n as usize).weyl_group_order(), d);
        }
        assert_eq!(t(Family::E6, 6).weyl_group_order(), BigUint::from(51_840u32));
        assert_eq!(t(Family::E7, 7).weyl_group_order(), BigUint::from(2_903_040u32));
        assert_eq!(t(Family::F4, 4).weyl_group_order(), BigUint::from(1152u32));
        assert_eq!(t(Family::G2, 2).weyl_group_order(), BigUint::from(12u32));
    }

    #[test]
    fn parabolic_orders() {
        // E6 without node 1 is D5; without node 2 it is A5.
        let e6 = t(Family::E6, 6).cartan_matrix();
        assert_eq!(e6.weyl_group_order(&[1, 2, 3, 4, 5]), BigUint::from(1920u32));
        assert_eq!(e6.weyl_group_order(&[0, 2, 3, 4, 5]), BigUint::from(720u32));
        // E7 without node 7 is E6.
        let e7 = t(Family::E7, 7).cartan_matrix();
        assert_eq!(e7.weyl_group_order(&[0, 1, 2, 3, 4, 5]), BigUint::from(51_840u32));
        // B4 without node 4 is A3; F4 without node 1 is C3.
        let b4 = t(Family::B, 4).cartan_matrix();
        assert_eq!(b4.weyl_group_order(&[0, 1, 2]), BigUint::from(24u32));
        let f4 = t(Family::F4, 4).cartan_matrix();
        assert_eq!(f4.weyl_group_order(&[1, 2, 3]), BigUint::from(48u32));
        // A5 without node 3 is A2 x A2.
        let a5 = t(Family::A, 5).cartan_matrix();
        assert_eq!(a5.weyl_group_order(&[0, 1, 3, 4]), BigUint::from(36u32));
        assert_eq!(a5.weyl_group_order(&[]), BigUint::one());
    }
}
