//! Permutations on `0..degree`, the element type of every group in the crate.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection on `0..degree`, stored as the image of each index.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            map: (0..degree).collect(),
        }
    }

    /// Builds a permutation from the image sequence, rejecting non-bijections.
    pub fn from_images(map: Vec<usize>) -> Result<Self> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &image in &map {
            if image >= n {
                return Err(Error::NotABijection(format!(
                    "image {image} out of range for degree {n}"
                )));
            }
            if seen[image] {
                return Err(Error::NotABijection(format!("image {image} repeated")));
            }
            seen[image] = true;
        }
        Ok(Permutation { map })
    }

    pub fn from_fn(degree: usize, f: impl Fn(usize) -> usize) -> Result<Self> {
        Self::from_images((0..degree).map(f).collect())
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.map
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            map: other.map.iter().map(|&i| self.map[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.map.len()];
        for (i, &image) in self.map.iter().enumerate() {
            inv[image] = i;
        }
        Permutation { map: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &image)| i == image)
    }

    /// Multiplicative order: lcm of the cycle lengths.
    pub fn order(&self) -> usize {
        let mut seen = vec![false; self.map.len()];
        let mut order = 1usize;
        for start in 0..self.map.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0usize;
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                v = self.map[v];
                len += 1;
            }
            order = num_integer::lcm(order, len);
        }
        order
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, image) in self.map.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{image}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
