//! Exact Laurent polynomials in q and truncated multivariate formal series.
//!
//! `QLaurent` is a sparse element of `Z[q, q^-1]` over arbitrary-precision
//! integers. `ZSeries` is a finitely supported map from exponent vectors
//! (elements of the nonnegative root lattice) to `QLaurent` coefficients,
//! truncated by the total height of the exponent: any monomial whose
//! exponent height exceeds the cutoff is discarded by products and is an
//! error to read back, never a silent zero.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::root_system::{CartanData, RootVector};

/// Sparse Laurent polynomial in q with integer coefficients. No zero
/// coefficients are stored; equality is exponent-wise.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QLaurent {
    coeffs: BTreeMap<i64, BigInt>,
}

impl QLaurent {
    pub fn zero() -> Self {
        QLaurent::default()
    }

    pub fn one() -> Self {
        QLaurent::monomial(0, 1)
    }

    /// The monomial c * q^exp.
    pub fn monomial(exp: i64, c: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if c != 0 {
            coeffs.insert(exp, BigInt::from(c));
        }
        QLaurent { coeffs }
    }

    /// Builds a polynomial from (exponent, coefficient) pairs; repeated
    /// exponents accumulate.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut out = QLaurent::zero();
        for (exp, c) in terms {
            out.add_assign_term(exp, &BigInt::from(c));
        }
        out
    }

    /// 1 - q^-1, the coefficient attached to each real-root power in the
    /// Gindikin-Karpelevich product.
    pub fn one_minus_q_inv() -> Self {
        QLaurent::from_terms([(0, 1), (-1, -1)])
    }

    /// 1 - q.
    pub fn one_minus_q() -> Self {
        QLaurent::from_terms([(0, 1), (1, -1)])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    /// Coefficient of q^exp (zero if absent).
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    fn add_assign_term(&mut self, exp: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn add(&self, other: &QLaurent) -> QLaurent {
        let mut out = self.clone();
        for (exp, c) in &other.coeffs {
            out.add_assign_term(*exp, c);
        }
        out
    }

    pub fn sub(&self, other: &QLaurent) -> QLaurent {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> QLaurent {
        QLaurent {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &QLaurent) -> QLaurent {
        let mut out = QLaurent::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                out.add_assign_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }

    /// Nonnegative integer power, by repeated squaring.
    pub fn pow(&self, k: u32) -> QLaurent {
        let mut result = QLaurent::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Evaluates at a rational value of q. Negative exponents contribute
    /// inverse powers, so the result is rational in general.
    pub fn eval(&self, q: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (&exp, c) in &self.coeffs {
            let base = if exp >= 0 {
                num_traits::pow::pow(q.clone(), exp as usize)
            } else {
                num_traits::pow::pow(q.clone(), (-exp) as usize).recip()
            };
            acc += BigRational::from(c.clone()) * base;
        }
        acc
    }
}

/// Renders with descending exponents and explicit signs, e.g.
/// "2*q^2 - 4*q + 2" or "1 - q^-1". The zero polynomial renders as "0".
impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (&exp, c)) in self.coeffs.iter().rev().enumerate() {
            let negative = c.is_negative();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.magnitude();
            if exp == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if exp == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{exp}")?;
                }
            }
        }
        Ok(())
    }
}

/// Truncated multivariate formal series: a finite map from exponent vectors
/// of height at most `cutoff` to nonzero `QLaurent` coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZSeries {
    cartan: CartanData,
    cutoff: u32,
    terms: BTreeMap<RootVector, QLaurent>,
}

impl ZSeries {
    /// The zero series at the given cutoff.
    pub fn zero(cartan: CartanData, cutoff: u32) -> Self {
        ZSeries {
            cartan,
            cutoff,
            terms: BTreeMap::new(),
        }
    }

    /// The constant series 1, the multiplicative identity.
    pub fn one(cartan: CartanData, cutoff: u32) -> Self {
        let mut s = ZSeries::zero(cartan, cutoff);
        s.add_term(cartan.zero(), QLaurent::one());
        s
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn cartan(&self) -> CartanData {
        self.cartan
    }

    /// Adds `c * z^gamma` into the series. Terms beyond the cutoff are
    /// discarded, matching the truncation contract of products.
    pub fn add_term(&mut self, gamma: RootVector, c: QLaurent) {
        if gamma.height() > self.cutoff || c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(gamma) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get().add(&c);
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    /// Stored monomials in graded-lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&RootVector, &QLaurent)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of z^gamma. Requests beyond the cutoff are errors: the
    /// value was truncated away and is unknown, not zero.
    pub fn coefficient(&self, gamma: &RootVector) -> Result<QLaurent> {
        if gamma.height() > self.cutoff {
            return Err(Error::CoefficientOutOfRange {
                height: gamma.height(),
                cutoff: self.cutoff,
            });
        }
        Ok(self.terms.get(gamma).cloned().unwrap_or_default())
    }

    /// Convolution product. Both factors must share the cutoff; product
    /// monomials of height above the cutoff are discarded.
    pub fn mul(&self, other: &ZSeries) -> Result<ZSeries> {
        if self.cutoff != other.cutoff {
            return Err(Error::CutoffMismatch {
                left: self.cutoff,
                right: other.cutoff,
            });
        }
        let mut out = ZSeries::zero(self.cartan, self.cutoff);
        for (g1, c1) in &self.terms {
            let h1 = g1.height();
            for (g2, c2) in &other.terms {
                if h1 + g2.height() > self.cutoff {
                    continue;
                }
                out.add_term(g1.add(g2), c1.mul(c2));
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &ZSeries) -> Result<ZSeries> {
        if self.cutoff != other.cutoff {
            return Err(Error::CutoffMismatch {
                left: self.cutoff,
                right: other.cutoff,
            });
        }
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g.clone(), c.clone());
        }
        Ok(out)
    }

    /// Truncation of (1 - num*z^gamma) / (1 - den*z^gamma): the constant
    /// term is 1 and the term at z^(k*gamma) is den^k - num*den^(k-1) for
    /// k >= 1. Requires height(gamma) >= 1 for convergence.
    pub fn geom_factor(
        cartan: CartanData,
        cutoff: u32,
        gamma: &RootVector,
        num: &QLaurent,
        den: &QLaurent,
    ) -> Result<ZSeries> {
        let h = gamma.height();
        if h == 0 {
            return Err(Error::ZeroHeightFactor);
        }
        let mut s = ZSeries::one(cartan, cutoff);
        let mut den_pow_prev = QLaurent::one(); // den^(k-1)
        let mut k = 1u32;
        while k * h <= cutoff {
            let den_pow = den_pow_prev.mul(den);
            let c = den_pow.sub(&num.mul(&den_pow_prev));
            s.add_term(gamma.scale(k), c);
            den_pow_prev = den_pow;
            k += 1;
        }
        Ok(s)
    }

    /// First monomial (graded-lex) where the two series differ, with both
    /// coefficients. `None` means they agree on every stored term.
    pub fn first_mismatch(&self, other: &ZSeries) -> Option<(RootVector, QLaurent, QLaurent)> {
        let mut keys: Vec<&RootVector> = self.terms.keys().collect();
        keys.extend(other.terms.keys());
        keys.sort();
        keys.dedup();
        for key in keys {
            let lhs = self.terms.get(key).cloned().unwrap_or_default();
            let rhs = other.terms.get(key).cloned().unwrap_or_default();
            if lhs != rhs {
                return Some((key.clone(), lhs, rhs));
            }
        }
        None
    }
}
