//! Cartan datum and positive-root enumeration for affine type A_n^(1).
//!
//! The index set is I = {0, 1, ..., n}. Positive roots split into real roots
//! (multiplicity 1) and imaginary roots m*delta (multiplicity n), where
//! delta = alpha_0 + alpha_1 + ... + alpha_n is the minimal imaginary root.
//! Every root handled here is materialized as a nonnegative coefficient
//! vector over the simple roots.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Cartan datum of type A_n^(1), determined by the rank parameter `n >= 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct CartanData {
    n: usize,
}

impl CartanData {
    pub fn new(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidRank { n });
        }
        Ok(CartanData { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of simple roots, n+1. Row colors and residue classes repeat
    /// with this period.
    pub fn period(&self) -> usize {
        self.n + 1
    }

    /// The simple root alpha_i as a coefficient vector.
    pub fn simple_root(&self, i: usize) -> RootVector {
        assert!(i <= self.n, "index {i} outside 0..={}", self.n);
        let mut coeffs = vec![0; self.period()];
        coeffs[i] = 1;
        RootVector { coeffs }
    }

    /// The minimal imaginary root delta = alpha_0 + ... + alpha_n.
    pub fn delta(&self) -> RootVector {
        RootVector {
            coeffs: vec![1; self.period()],
        }
    }

    /// Zero element of the root lattice.
    pub fn zero(&self) -> RootVector {
        RootVector {
            coeffs: vec![0; self.period()],
        }
    }

    /// The composite root alpha_i^(l) = alpha_i + alpha_{i-1} + ... +
    /// alpha_{i-l+1}, indices mod n+1. Height l, coefficients in {0,1}.
    pub fn composite_root(&self, i: usize, len: usize) -> Result<RootVector> {
        assert!(i <= self.n, "index {i} outside 0..={}", self.n);
        if len < 1 || len > self.n {
            return Err(Error::InvalidCompositeLength { len, n: self.n });
        }
        let p = self.period();
        let mut coeffs = vec![0; p];
        for step in 0..len {
            coeffs[(i + p - step) % p] = 1;
        }
        Ok(RootVector { coeffs })
    }

    /// All positive roots of height at most `bound`, each paired with its
    /// multiplicity (1 for real roots, n for m*delta). Graded-lex order.
    pub fn positive_roots_up_to(&self, bound: u32) -> Vec<(RootVector, u32)> {
        let mut roots = Vec::new();
        let period = self.period() as u32;
        // Classical roots alpha_i + ... + alpha_j, 1 <= i <= j <= n, and
        // their delta-shifts. The negative classical root -(alpha_i+...+alpha_j)
        // only contributes through m*delta - (alpha_i+...+alpha_j), m >= 1.
        for i in 1..=self.n {
            for j in i..=self.n {
                let ht = (j - i + 1) as u32;
                let mut cl = vec![0u32; self.period()];
                for c in cl.iter_mut().take(j + 1).skip(i) {
                    *c = 1;
                }
                let mut m = 0u32;
                while m * period + ht <= bound {
                    let coeffs = cl.iter().map(|&c| c + m).collect();
                    roots.push((RootVector { coeffs }, 1));
                    m += 1;
                }
                let mut m = 1u32;
                while m * period - ht <= bound {
                    let coeffs = cl.iter().map(|&c| m - c).collect();
                    roots.push((RootVector { coeffs }, 1));
                    m += 1;
                }
            }
        }
        let mut m = 1u32;
        while m * period <= bound {
            let coeffs = vec![m; self.period()];
            roots.push((RootVector { coeffs }, self.n as u32));
            m += 1;
        }
        roots.sort();
        roots
    }
}

/// Element of the nonnegative root lattice, as the coefficient vector over
/// alpha_0, ..., alpha_n. Ordered graded-lexicographically: first by height,
/// then lexicographically on the coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RootVector {
    coeffs: Vec<u32>,
}

impl RootVector {
    /// Builds a vector from explicit coefficients; the length fixes the rank.
    pub fn from_coeffs(cartan: CartanData, coeffs: Vec<u32>) -> Result<Self> {
        if coeffs.len() != cartan.period() {
            return Err(Error::RankMismatch {
                expected: cartan.period(),
                found: coeffs.len(),
            });
        }
        Ok(RootVector { coeffs })
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs[i]
    }

    /// Sum of the coefficients; height(delta) = n+1.
    pub fn height(&self) -> u32 {
        self.coeffs.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &RootVector) -> RootVector {
        assert_eq!(self.coeffs.len(), other.coeffs.len());
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        RootVector { coeffs }
    }

    /// Componentwise difference, or `None` if any entry would go negative.
    pub fn checked_sub(&self, other: &RootVector) -> Option<RootVector> {
        assert_eq!(self.coeffs.len(), other.coeffs.len());
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
            coeffs.push(a.checked_sub(*b)?);
        }
        Some(RootVector { coeffs })
    }

    pub fn scale(&self, k: u32) -> RootVector {
        RootVector {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }
}

impl Ord for RootVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.height()
            .cmp(&other.height())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl PartialOrd for RootVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
