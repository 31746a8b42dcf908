//! Permutations of `{1, ..., n}` in one-line notation.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A bijection `σ` of `{1, ..., n}`, stored as the image list
/// `[σ(1), σ(2), ..., σ(n)]` (1-based values).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    image: Vec<usize>,
}

/// Error for [`Permutation::from_image`]: the image list is not a
/// bijection of `{1, ..., n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NotBijective;

impl fmt::Display for NotBijective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "image list is not a bijection of 1..=n")
    }
}

impl core::error::Error for NotBijective {}

/// Returns whether `image` hits every element of `{1, ..., image.len()}`
/// exactly once.
pub fn is_bijection(image: &[usize]) -> bool {
    let n = image.len();
    let mut seen = vec![false; n + 1];
    for &v in image {
        if v < 1 || v > n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

impl Permutation {
    /// The identity permutation on `{1, ..., n}`.
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (1..=n).collect(),
        }
    }

    /// Builds a permutation from its image list `[σ(1), ..., σ(n)]`.
    pub fn from_image(image: Vec<usize>) -> Result<Self, NotBijective> {
        if is_bijection(&image) {
            Ok(Permutation { image })
        } else {
            Err(NotBijective)
        }
    }

    /// Size of the permuted set.
    pub fn n(&self) -> usize {
        self.image.len()
    }

    /// `σ(k)` for `k` in `[1, n]`.
    ///
    /// # Panics
    ///
    /// Panics if `k` is out of range.
    pub fn apply(&self, k: usize) -> usize {
        self.image[k - 1]
    }

    /// The image list `[σ(1), ..., σ(n)]`.
    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// Consumes the permutation, returning its image list.
    pub fn into_image(self) -> Vec<usize> {
        self.image
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.image.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}
