//! Both sides of the affine Gindikin-Karpelevich identity and its
//! correction-factor refinement, as truncated series with exact
//! coefficients.
//!
//! The product side runs over positive roots of height within the cutoff:
//!
//!   prod_alpha ((1 - q^-1 z^alpha) / (1 - z^alpha))^mult(alpha).
//!
//! The sum side runs over reduced proper generalized Young walls Y, each
//! contributing (1 - q^-1)^N(Y) at the exponent -wt(Y). The correction
//! factor
//!
//!   prod_{i=1..n} prod_{j>=1} (1 - q^-i z^(j delta)) / (1 - q^-(i+1) z^(j delta))
//!
//! expands over the walls with empty class-(n+1) rows, and the product of
//! the two identities expands over pairs. Comparing the latter with the
//! orbit-intersection generating function gives a counting polynomial for
//! #(T^-gamma intersect S^0), computed here by direct pair enumeration.

use serde::Serialize;

use crate::root_system::{CartanData, RootVector};
use crate::series::{QLaurent, ZSeries};
use crate::young_wall::{enumerate_reduced_proper, enumerate_y0, Wall};

/// Outcome of comparing two series sides monomial by monomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerificationReport {
    pub n: usize,
    pub cutoff: u32,
    /// Product side.
    pub side_a: ZSeries,
    /// Sum side.
    pub side_b: ZSeries,
    pub equal: bool,
    /// Smallest differing exponent in graded-lex order, with both
    /// coefficients; absent exactly when the sides are equal.
    pub first_mismatch: Option<Mismatch>,
    /// Number of walls (or wall pairs) feeding the sum side.
    pub wall_count: u64,
    /// Number of product factors: root vectors and/or correction factors.
    pub root_count: u64,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mismatch {
    pub gamma: RootVector,
    pub lhs: QLaurent,
    pub rhs: QLaurent,
}

impl VerificationReport {
    fn compare(
        n: usize,
        cutoff: u32,
        side_a: ZSeries,
        side_b: ZSeries,
        wall_count: u64,
        root_count: u64,
    ) -> Self {
        let first_mismatch = side_a
            .first_mismatch(&side_b)
            .map(|(gamma, lhs, rhs)| Mismatch { gamma, lhs, rhs });
        VerificationReport {
            n,
            cutoff,
            equal: first_mismatch.is_none(),
            first_mismatch,
            side_a,
            side_b,
            wall_count,
            root_count,
        }
    }

    /// Canonical JSON form {"n","D","equal","first_mismatch","wall_count",
    /// "root_count"}.
    pub fn to_json(&self) -> String {
        let mismatch = self.first_mismatch.as_ref().map(|m| MismatchJson {
            gamma: m.gamma.coeffs().to_vec(),
            lhs: m.lhs.to_string(),
            rhs: m.rhs.to_string(),
        });
        serde_json::to_string(&ReportJson {
            n: self.n,
            d: self.cutoff,
            equal: self.equal,
            first_mismatch: mismatch,
            wall_count: self.wall_count,
            root_count: self.root_count,
        })
        .expect("report serialization cannot fail")
    }
}

#[derive(Serialize)]
struct ReportJson {
    n: usize,
    #[serde(rename = "D")]
    d: u32,
    equal: bool,
    first_mismatch: Option<MismatchJson>,
    wall_count: u64,
    root_count: u64,
}

#[derive(Serialize)]
struct MismatchJson {
    gamma: Vec<u32>,
    lhs: String,
    rhs: String,
}

/// Product over all positive roots of height at most `cutoff` of
/// ((1 - q^-1 z^alpha) / (1 - z^alpha))^mult(alpha), truncated. Roots of
/// larger height contribute only 1 modulo the cutoff and are omitted.
pub fn gk_product(cartan: CartanData, cutoff: u32) -> ZSeries {
    let q_inv = QLaurent::monomial(-1, 1);
    let one = QLaurent::one();
    let mut acc = ZSeries::one(cartan, cutoff);
    for (root, mult) in cartan.positive_roots_up_to(cutoff) {
        let factor = ZSeries::geom_factor(cartan, cutoff, &root, &q_inv, &one)
            .expect("roots have positive height");
        for _ in 0..mult {
            acc = acc.mul(&factor).expect("cutoffs agree");
        }
    }
    acc
}

/// Sum over the reduced proper walls with at most `cutoff` boxes of
/// (1 - q^-1)^N(Y) at the exponent -wt(Y).
pub fn gk_sum(cartan: CartanData, cutoff: u32) -> ZSeries {
    let base = QLaurent::one_minus_q_inv();
    let mut acc = ZSeries::zero(cartan, cutoff);
    for wall in enumerate_reduced_proper(cartan, cutoff as u64) {
        let n_stat = wall.stat_n().expect("enumerated walls are members");
        acc.add_term(wall.weight(), base.pow(n_stat as u32));
    }
    acc
}

/// Compares [`gk_product`] against [`gk_sum`] monomial by monomial.
pub fn verify_main(cartan: CartanData, cutoff: u32) -> VerificationReport {
    let product = gk_product(cartan, cutoff);
    let sum = gk_sum(cartan, cutoff);
    let wall_count = enumerate_reduced_proper(cartan, cutoff as u64).len() as u64;
    let root_count = cartan.positive_roots_up_to(cutoff).len() as u64;
    VerificationReport::compare(cartan.n(), cutoff, product, sum, wall_count, root_count)
}

/// The correction factor as a truncated product: for each i = 1..n and each
/// j with j(n+1) within the cutoff, the factor
/// (1 - q^-i z^(j delta)) / (1 - q^-(i+1) z^(j delta)).
pub fn correction_product(cartan: CartanData, cutoff: u32) -> ZSeries {
    let mut acc = ZSeries::one(cartan, cutoff);
    let delta_height = cartan.period() as u32;
    for i in 1..=cartan.n() as i64 {
        let num = QLaurent::monomial(-i, 1);
        let den = QLaurent::monomial(-(i + 1), 1);
        let mut j = 1u32;
        while j * delta_height <= cutoff {
            let gamma = cartan.delta().scale(j);
            let factor = ZSeries::geom_factor(cartan, cutoff, &gamma, &num, &den)
                .expect("delta has positive height");
            acc = acc.mul(&factor).expect("cutoffs agree");
            j += 1;
        }
    }
    acc
}

/// The correction factor as a sum over walls with empty class-(n+1) rows:
/// (1 - q)^N(Y) q^(-M(Y)) at the exponent |Y| delta.
pub fn correction_sum(cartan: CartanData, cutoff: u32) -> ZSeries {
    let base = QLaurent::one_minus_q();
    let mut acc = ZSeries::zero(cartan, cutoff);
    for wall in y0_within(cartan, cutoff) {
        let n_stat = wall.stat_n().expect("members of the y0 subset");
        let m_stat = wall.stat_m().expect("members of the y0 subset");
        let coeff = base
            .pow(n_stat as u32)
            .mul(&QLaurent::monomial(-(m_stat as i64), 1));
        acc.add_term(cartan.delta().scale(wall.box_count() as u32), coeff);
    }
    acc
}

/// Walls in the empty-class-(n+1) subset whose exponent |Y| delta stays
/// within the cutoff.
fn y0_within(cartan: CartanData, cutoff: u32) -> Vec<Wall> {
    enumerate_y0(cartan, (cutoff / cartan.period() as u32) as u64)
}

pub fn verify_correction(cartan: CartanData, cutoff: u32) -> VerificationReport {
    let product = correction_product(cartan, cutoff);
    let sum = correction_sum(cartan, cutoff);
    let wall_count = y0_within(cartan, cutoff).len() as u64;
    let root_count = cartan.n() as u64 * (cutoff / cartan.period() as u32) as u64;
    VerificationReport::compare(cartan.n(), cutoff, product, sum, wall_count, root_count)
}

/// Product of the correction factor and the Gindikin-Karpelevich product.
pub fn ig_product(cartan: CartanData, cutoff: u32) -> ZSeries {
    correction_product(cartan, cutoff)
        .mul(&gk_product(cartan, cutoff))
        .expect("cutoffs agree")
}

/// Sum over pairs (Y1, Y2) of a reduced proper wall and an empty-class-(n+1)
/// wall, constrained by |Y1| + (n+1)|Y2| within the cutoff, of
/// (1 - q^-1)^N(Y1) (1 - q)^N(Y2) q^(-M(Y2)) at -wt(Y1) + |Y2| delta.
pub fn ig_sum(cartan: CartanData, cutoff: u32) -> ZSeries {
    let mut acc = ZSeries::zero(cartan, cutoff);
    for (coeff, exponent) in ig_pair_terms(cartan, cutoff) {
        acc.add_term(exponent, coeff);
    }
    acc
}

fn ig_pair_terms(cartan: CartanData, cutoff: u32) -> Vec<(QLaurent, RootVector)> {
    let period = cartan.period() as u64;
    let q_inv_base = QLaurent::one_minus_q_inv();
    let q_base = QLaurent::one_minus_q();
    let walls = enumerate_reduced_proper(cartan, cutoff as u64);
    let mut terms = Vec::new();
    for y2 in y0_within(cartan, cutoff) {
        let b2 = y2.box_count();
        let n2 = y2.stat_n().expect("members of the y0 subset");
        let m2 = y2.stat_m().expect("members of the y0 subset");
        let c2 = q_base
            .pow(n2 as u32)
            .mul(&QLaurent::monomial(-(m2 as i64), 1));
        let shift = cartan.delta().scale(b2 as u32);
        for y1 in &walls {
            if y1.box_count() + period * b2 > cutoff as u64 {
                continue;
            }
            let n1 = y1.stat_n().expect("enumerated walls are members");
            terms.push((q_inv_base.pow(n1 as u32).mul(&c2), y1.weight().add(&shift)));
        }
    }
    terms
}

pub fn verify_ig(cartan: CartanData, cutoff: u32) -> VerificationReport {
    let product = ig_product(cartan, cutoff);
    let sum = ig_sum(cartan, cutoff);
    let pair_count = ig_pair_terms(cartan, cutoff).len() as u64;
    let factor_count = cartan.positive_roots_up_to(cutoff).len() as u64
        + cartan.n() as u64 * (cutoff / cartan.period() as u32) as u64;
    VerificationReport::compare(cartan.n(), cutoff, product, sum, pair_count, factor_count)
}

/// The orbit-intersection counting polynomial: the sum over pairs (Y1, Y2)
/// with -wt(Y1) + |Y2| delta = gamma of
/// (1 - q^-1)^N(Y1) (1 - q)^N(Y2) q^(|gamma| - M(Y2)), where |gamma| is the
/// coefficient sum. The search is finite: |Y2| is at most the minimum
/// coefficient of gamma and |Y1| is determined by the height balance.
/// The result is recorded as a raw Laurent polynomial; the worked cases lie
/// in `Z[q]` but no polynomiality is assumed.
pub fn intersection_polynomial(cartan: CartanData, gamma: &RootVector) -> QLaurent {
    let gamma_height = gamma.height() as i64;
    let q_inv_base = QLaurent::one_minus_q_inv();
    let q_base = QLaurent::one_minus_q();
    let mut by_weight: std::collections::BTreeMap<RootVector, Vec<u64>> =
        std::collections::BTreeMap::new();
    for wall in enumerate_reduced_proper(cartan, gamma.height() as u64) {
        by_weight
            .entry(wall.weight())
            .or_default()
            .push(wall.stat_n().expect("enumerated walls are members"));
    }
    let max_b2 = gamma.coeffs().iter().copied().min().unwrap_or(0);
    let mut acc = QLaurent::zero();
    for y2 in enumerate_y0(cartan, max_b2 as u64) {
        let b2 = y2.box_count() as u32;
        let target = gamma
            .checked_sub(&cartan.delta().scale(b2))
            .expect("b2 bounded by the minimum coefficient");
        let Some(stats) = by_weight.get(&target) else {
            continue;
        };
        let n2 = y2.stat_n().expect("members of the y0 subset");
        let m2 = y2.stat_m().expect("members of the y0 subset");
        let c2 = q_base
            .pow(n2 as u32)
            .mul(&QLaurent::monomial(gamma_height - m2 as i64, 1));
        for &n1 in stats {
            acc = acc.add(&q_inv_base.pow(n1 as u32).mul(&c2));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a1() -> CartanData {
        CartanData::new(1).unwrap()
    }

    fn a2() -> CartanData {
        CartanData::new(2).unwrap()
    }

    fn one_minus_q_inv_pow(k: u32) -> QLaurent {
        QLaurent::one_minus_q_inv().pow(k)
    }

    #[test]
    fn gk_product_coefficients() {
        let s = gk_product(a1(), 2);
        assert_eq!(
            s.coefficient(&a1().delta()).unwrap(),
            one_minus_q_inv_pow(2).add(&one_minus_q_inv_pow(1))
        );
        assert_eq!(s.coefficient(&a1().zero()).unwrap(), QLaurent::one());

        let s = gk_product(a2(), 2);
        let a1_plus_a2 = a2().simple_root(1).add(&a2().simple_root(2));
        assert_eq!(
            s.coefficient(&a1_plus_a2).unwrap(),
            one_minus_q_inv_pow(2).add(&one_minus_q_inv_pow(1))
        );
    }

    #[test]
    fn gk_sum_coefficients() {
        let s = gk_sum(a1(), 2);
        // walls [2] (N = 1) and [0,2] (N = 2); [1,1] is not reduced
        assert_eq!(
            s.coefficient(&a1().delta()).unwrap(),
            one_minus_q_inv_pow(1).add(&one_minus_q_inv_pow(2))
        );
        assert_eq!(s.coefficient(&a1().zero()).unwrap(), QLaurent::one());
        // unique wall [1,0,1] of weight 2*alpha_0, with N = 1
        let two_a0 = a1().simple_root(0).scale(2);
        assert_eq!(s.coefficient(&two_a0).unwrap(), one_minus_q_inv_pow(1));
    }

    #[test]
    fn verify_main_small() {
        for (n, d) in [(1, 6), (2, 6), (1, 0)] {
            let report = verify_main(CartanData::new(n).unwrap(), d);
            assert!(report.equal, "n = {n}, D = {d}");
            assert!(report.first_mismatch.is_none());
        }
    }

    #[test]
    fn correction_sides_small() {
        let s = correction_sum(a1(), 2);
        let expected = QLaurent::one_minus_q().mul(&QLaurent::monomial(-2, 1));
        assert_eq!(s.coefficient(&a1().delta()).unwrap(), expected);
        let p = correction_product(a1(), 2);
        assert_eq!(p.coefficient(&a1().delta()).unwrap(), expected);
        assert_eq!(p.coefficient(&a1().zero()).unwrap(), QLaurent::one());

        // Both routes at 2*delta: walls [2] (M = 2) and [1,0,1] (M = 4)
        // against the j = 1 factor at k = 2 plus the j = 2 factor at k = 1.
        let report = verify_correction(a1(), 4);
        assert!(report.equal);
        let at_two_delta = report.side_b.coefficient(&a1().delta().scale(2)).unwrap();
        let want = QLaurent::one_minus_q()
            .mul(&QLaurent::monomial(-2, 1))
            .add(&QLaurent::one_minus_q().mul(&QLaurent::monomial(-4, 1)));
        assert_eq!(at_two_delta, want);
    }

    #[test]
    fn ig_sides_small() {
        let s = ig_sum(a1(), 2);
        // pairs (empty, [1]), ([2], empty), ([0,2], empty)
        let want = QLaurent::one_minus_q()
            .mul(&QLaurent::monomial(-2, 1))
            .add(&one_minus_q_inv_pow(1))
            .add(&one_minus_q_inv_pow(2));
        assert_eq!(s.coefficient(&a1().delta()).unwrap(), want);
        assert_eq!(s.coefficient(&a1().zero()).unwrap(), QLaurent::one());

        let report = verify_ig(a1(), 6);
        assert!(report.equal);
    }

    #[test]
    fn intersection_polynomial_examples() {
        let gamma = a1().delta();
        assert_eq!(
            intersection_polynomial(a1(), &gamma),
            QLaurent::from_terms([(2, 2), (1, -4), (0, 2)])
        );
        assert_eq!(
            intersection_polynomial(a1(), &a1().simple_root(0)),
            QLaurent::from_terms([(1, 1), (0, -1)])
        );
        assert_eq!(intersection_polynomial(a1(), &a1().zero()), QLaurent::one());
    }

    #[test]
    fn intersection_consistent_with_pair_sum() {
        // coefficient of z^gamma in the pair sum, times q^|gamma|, equals
        // the counting polynomial
        for n in 1..=2 {
            let cartan = CartanData::new(n).unwrap();
            let cutoff = 5;
            let s = ig_sum(cartan, cutoff);
            for (gamma, coeff) in s.terms() {
                let scaled = coeff.mul(&QLaurent::monomial(gamma.height() as i64, 1));
                assert_eq!(scaled, intersection_polynomial(cartan, gamma));
            }
        }
    }

    #[test]
    fn report_json_shape() {
        let report = verify_main(a1(), 0);
        assert_eq!(
            report.to_json(),
            r#"{"n":1,"D":0,"equal":true,"first_mismatch":null,"wall_count":1,"root_count":0}"#
        );
    }
}
