use std::fmt;

use serde::{Deserialize, Serialize};

/// Integral weight in the fundamental-weight basis: `coords[i]` is the
/// pairing with the i-th simple coroot.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// Fundamental weight `varpi_j`, with Bourbaki index `j` starting at 1.
    pub fn fundamental(rank: usize, j: usize) -> Self {
        assert!((1..=rank).contains(&j), "fundamental index {j} out of 1..={rank}");
        let mut c = vec![0; rank];
        c[j - 1] = 1;
        Weight(c)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_antidominant(&self) -> bool {
        self.0.iter().all(|&c| c <= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// `Some(j)` (1-based) when this is exactly `varpi_j`.
    pub fn fundamental_index(&self) -> Option<usize> {
        let mut hit = None;
        for (i, &c) in self.0.iter().enumerate() {
            match c {
                0 => {}
                1 if hit.is_none() => hit = Some(i + 1),
                _ => return None,
            }
        }
        hit
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }

    pub(crate) fn coords_mut(&mut self) -> &mut [i64] {
        &mut self.0
    }
}

impl std::ops::Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scaled(-1)
    }
}

impl std::ops::Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
