//! Kostant partitions and reduced expressions.
//!
//! Parts are (k*delta + alpha_i^(l)) for real roots, (k*delta_j) for the n
//! labeled copies of the imaginary root, and the formal generators D^(m)
//! that each stand for a sum of n+1 equal-length parts of total weight
//! m*delta:
//!
//!   D^(m) = sum_i (k*delta + alpha_i^(l))        if m = (n+1)k + l, 1 <= l <= n,
//!   D^(m) = D^(k) + sum_j (k*delta_j)            if m = (n+1)k.
//!
//! Folding rewrites an expression bottom-up, replacing each complete set of
//! relation parts by the corresponding generator with the largest possible
//! multiplicity; unfolding expands generators largest-first. An expression
//! with no replaceable set is *reduced*. Reduced expressions biject with
//! reduced proper generalized Young walls row by row.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{CartanData, RootVector};
use crate::young_wall::{realize_classes, Wall};

/// A single part. `Real { k, i, l }` is (k*delta + alpha_i^(l)),
/// `Imag { k, j }` is (k*delta_j) with the labeled copies distinct, and
/// `DeltaGen { m }` is the generator D^(m). The derived `Ord` gives the
/// canonical printing order: real before imaginary before generators, then
/// lexicographic on the numeric fields.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum KostantPart {
    Real { k: u32, i: u32, l: u32 },
    Imag { k: u32, j: u32 },
    DeltaGen { m: u32 },
}

impl KostantPart {
    fn validate(&self, cartan: CartanData) -> Result<()> {
        let n = cartan.n() as u32;
        let bad = |reason: String| Err(Error::InvalidPart { reason });
        match *self {
            KostantPart::Real { i, l, .. } => {
                if i > n {
                    return bad(format!("index {i} outside 0..={n}"));
                }
                if l < 1 || l > n {
                    return bad(format!("length {l} outside 1..={n}"));
                }
            }
            KostantPart::Imag { k, j } => {
                if k < 1 {
                    return bad("imaginary part needs k >= 1".into());
                }
                if j < 1 || j > n {
                    return bad(format!("label {j} outside 1..={n}"));
                }
            }
            KostantPart::DeltaGen { m } => {
                if m < 1 {
                    return bad("generator needs m >= 1".into());
                }
            }
        }
        Ok(())
    }

    /// Number of boxes of the corresponding wall row.
    pub fn height(&self, cartan: CartanData) -> u32 {
        let p = cartan.period() as u32;
        match *self {
            KostantPart::Real { k, l, .. } => p * k + l,
            KostantPart::Imag { k, .. } => p * k,
            KostantPart::DeltaGen { m } => p * m,
        }
    }

    pub fn weight(&self, cartan: CartanData) -> RootVector {
        match *self {
            KostantPart::Real { k, i, l } => cartan.delta().scale(k).add(
                &cartan
                    .composite_root(i as usize, l as usize)
                    .expect("validated part"),
            ),
            KostantPart::Imag { k, .. } => cartan.delta().scale(k),
            KostantPart::DeltaGen { m } => cartan.delta().scale(m),
        }
    }

    /// Residue class of the wall row this part corresponds to, in 1..=n+1.
    fn row_class(&self, cartan: CartanData) -> usize {
        match *self {
            KostantPart::Real { i, .. } => i as usize + 1,
            KostantPart::Imag { j, .. } => j as usize,
            KostantPart::DeltaGen { .. } => cartan.period(),
        }
    }
}

impl fmt::Display for KostantPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            KostantPart::Real { k, i, l } => {
                write!(f, "(")?;
                match k {
                    0 => {}
                    1 => write!(f, "d+")?,
                    _ => write!(f, "{k}d+")?,
                }
                write!(f, "a{i}")?;
                if l > 1 {
                    write!(f, "^({l})")?;
                }
                write!(f, ")")
            }
            KostantPart::Imag { k, j } => {
                if k == 1 {
                    write!(f, "(d_{j})")
                } else {
                    write!(f, "({k}d_{j})")
                }
            }
            KostantPart::DeltaGen { m } => write!(f, "D^({m})"),
        }
    }
}

/// A finite multiset of parts. Expressions without generators are Kostant
/// partitions; expressions without a removable delta are reduced.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KostantExpr {
    cartan: CartanData,
    parts: BTreeMap<KostantPart, u64>,
}

impl KostantExpr {
    pub fn new(cartan: CartanData) -> Self {
        KostantExpr {
            cartan,
            parts: BTreeMap::new(),
        }
    }

    pub fn from_parts<I>(cartan: CartanData, parts: I) -> Result<Self>
    where
        I: IntoIterator<Item = (KostantPart, u64)>,
    {
        let mut expr = KostantExpr::new(cartan);
        for (part, mult) in parts {
            expr.add_part(part, mult)?;
        }
        Ok(expr)
    }

    pub fn cartan(&self) -> CartanData {
        self.cartan
    }

    pub fn add_part(&mut self, part: KostantPart, mult: u64) -> Result<()> {
        part.validate(self.cartan)?;
        if mult > 0 {
            *self.parts.entry(part).or_insert(0) += mult;
        }
        Ok(())
    }

    fn add_unchecked(&mut self, part: KostantPart, mult: u64) {
        if mult > 0 {
            *self.parts.entry(part).or_insert(0) += mult;
        }
    }

    fn remove(&mut self, part: &KostantPart, mult: u64) {
        let entry = self.parts.get_mut(part).expect("part present");
        *entry -= mult;
        if *entry == 0 {
            self.parts.remove(part);
        }
    }

    pub fn multiplicity(&self, part: &KostantPart) -> u64 {
        self.parts.get(part).copied().unwrap_or(0)
    }

    /// Parts with their multiplicities, in canonical order.
    pub fn parts(&self) -> impl Iterator<Item = (&KostantPart, u64)> {
        self.parts.iter().map(|(p, &m)| (p, m))
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of distinct parts, ignoring multiplicities.
    pub fn distinct_parts(&self) -> u64 {
        self.parts.len() as u64
    }

    /// Multiplicity-weighted sum of the part weights.
    pub fn weight(&self) -> RootVector {
        let mut acc = self.cartan.zero();
        for (part, mult) in &self.parts {
            acc = acc.add(&part.weight(self.cartan).scale(*mult as u32));
        }
        acc
    }

    pub fn height(&self) -> u64 {
        self.parts
            .iter()
            .map(|(part, &mult)| part.height(self.cartan) as u64 * mult)
            .sum()
    }

    /// True when no generator D^(m) occurs, i.e. the expression lies in the
    /// span of the basic parts (a Kostant partition).
    pub fn is_kostant_partition(&self) -> bool {
        !self
            .parts
            .keys()
            .any(|p| matches!(p, KostantPart::DeltaGen { .. }))
    }

    /// Smallest m > 0 whose relation parts are all present, so that they
    /// could be replaced by D^(m); `None` when the expression is reduced.
    pub fn find_removable_delta(&self) -> Option<u32> {
        let p = self.cartan.period() as u32;
        let n = self.cartan.n() as u32;
        let height = self.height();
        for m in 1..=height.min(u32::MAX as u64) as u32 {
            let k = m / p;
            let l = m % p;
            let removable = if l != 0 {
                (0..=n).all(|i| self.multiplicity(&KostantPart::Real { k, i, l }) > 0)
            } else {
                self.multiplicity(&KostantPart::DeltaGen { m: k }) > 0
                    && (1..=n).all(|j| self.multiplicity(&KostantPart::Imag { k, j }) > 0)
            };
            if removable {
                return Some(m);
            }
        }
        None
    }

    pub fn is_reduced(&self) -> bool {
        self.find_removable_delta().is_none()
    }

    /// The reduction map: a single ascending pass over m, replacing the
    /// relation parts at m by D^(m) with the largest possible multiplicity.
    /// Folding at m only creates material for (n+1)m, which the same pass
    /// reaches later, so one pass leaves no removable delta.
    pub fn fold(&self) -> KostantExpr {
        let p = self.cartan.period() as u32;
        let n = self.cartan.n() as u32;
        let mut out = self.clone();
        let height = out.height().min(u32::MAX as u64) as u32;
        for m in 1..=height {
            let k = m / p;
            let l = m % p;
            if l != 0 {
                let count = (0..=n)
                    .map(|i| out.multiplicity(&KostantPart::Real { k, i, l }))
                    .min()
                    .unwrap_or(0);
                if count > 0 {
                    for i in 0..=n {
                        out.remove(&KostantPart::Real { k, i, l }, count);
                    }
                    out.add_unchecked(KostantPart::DeltaGen { m }, count);
                }
            } else {
                let count = (1..=n)
                    .map(|j| out.multiplicity(&KostantPart::Imag { k, j }))
                    .chain(std::iter::once(
                        out.multiplicity(&KostantPart::DeltaGen { m: k }),
                    ))
                    .min()
                    .unwrap_or(0);
                if count > 0 {
                    out.remove(&KostantPart::DeltaGen { m: k }, count);
                    for j in 1..=n {
                        out.remove(&KostantPart::Imag { k, j }, count);
                    }
                    out.add_unchecked(KostantPart::DeltaGen { m }, count);
                }
            }
        }
        out
    }

    /// The unfolding map: repeatedly replaces the generator with the
    /// largest m by its relation parts until none remains.
    pub fn unfold(&self) -> KostantExpr {
        let p = self.cartan.period() as u32;
        let n = self.cartan.n() as u32;
        let mut out = self.clone();
        loop {
            let largest = out
                .parts
                .keys()
                .filter_map(|part| match part {
                    KostantPart::DeltaGen { m } => Some(*m),
                    _ => None,
                })
                .max();
            let Some(m) = largest else {
                return out;
            };
            let mult = out.multiplicity(&KostantPart::DeltaGen { m });
            out.remove(&KostantPart::DeltaGen { m }, mult);
            let k = m / p;
            let l = m % p;
            if l != 0 {
                for i in 0..=n {
                    out.add_unchecked(KostantPart::Real { k, i, l }, mult);
                }
            } else {
                out.add_unchecked(KostantPart::DeltaGen { m: k }, mult);
                for j in 1..=n {
                    out.add_unchecked(KostantPart::Imag { k, j }, mult);
                }
            }
        }
    }

    /// Canonical JSON form with multiplicities expanded:
    /// `{"real":[[k,i,l],...],"imag":[[k,j],...],"delta":[m,...]}`.
    pub fn to_json(&self) -> String {
        let mut json = KostantJson::default();
        for (part, mult) in &self.parts {
            for _ in 0..*mult {
                match *part {
                    KostantPart::Real { k, i, l } => json.real.push([k, i, l]),
                    KostantPart::Imag { k, j } => json.imag.push([k, j]),
                    KostantPart::DeltaGen { m } => json.delta.push(m),
                }
            }
        }
        serde_json::to_string(&json).expect("expression serialization cannot fail")
    }

    pub fn from_json(cartan: CartanData, text: &str) -> Result<KostantExpr> {
        let json: KostantJson = serde_json::from_str(text).map_err(|e| Error::InvalidJson {
            message: e.to_string(),
        })?;
        let mut expr = KostantExpr::new(cartan);
        for [k, i, l] in json.real {
            expr.add_part(KostantPart::Real { k, i, l }, 1)?;
        }
        for [k, j] in json.imag {
            expr.add_part(KostantPart::Imag { k, j }, 1)?;
        }
        for m in json.delta {
            expr.add_part(KostantPart::DeltaGen { m }, 1)?;
        }
        Ok(expr)
    }
}

impl fmt::Display for KostantExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        for (idx, (part, mult)) in self.parts.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            if *mult > 1 {
                write!(f, "{mult}")?;
            }
            write!(f, "{part}")?;
        }
        Ok(())
    }
}

#[derive(Default, Serialize, Deserialize)]
struct KostantJson {
    #[serde(default)]
    real: Vec<[u32; 3]>,
    #[serde(default)]
    imag: Vec<[u32; 2]>,
    #[serde(default)]
    delta: Vec<u32>,
}

/// Writes m = (n+1)^p * q with q not divisible by n+1. Requires m >= 1.
pub fn factor_out_period(cartan: CartanData, m: u32) -> (u32, u32) {
    assert!(m >= 1);
    let period = cartan.period() as u32;
    let mut p = 0;
    let mut q = m;
    while q.is_multiple_of(period) {
        q /= period;
        p += 1;
    }
    (p, q)
}

/// Closed form of the full unfolding of D^((n+1)^p * q): with q = (n+1)r + s,
/// the n+1 real parts (r*delta + alpha_{j-1}^(s)) plus, for each exponent
/// 0 <= i < p, the n parts ((n+1)^i * q * delta_j). The result has n+1+n*p
/// parts counted with multiplicity and agrees with iterative unfolding.
pub fn unfold_delta_closed(cartan: CartanData, p: u32, q: u32) -> Result<KostantExpr> {
    let period = cartan.period() as u32;
    let n = cartan.n() as u32;
    if q == 0 || q.is_multiple_of(period) {
        return Err(Error::InvalidDeltaFactor { q, n: cartan.n() });
    }
    let r = q / period;
    let s = q % period;
    let mut expr = KostantExpr::new(cartan);
    for j in 1..=period {
        expr.add_unchecked(
            KostantPart::Real {
                k: r,
                i: j - 1,
                l: s,
            },
            1,
        );
    }
    let mut scale = 1u64;
    for _ in 0..p {
        let k = (scale * q as u64)
            .try_into()
            .expect("part height fits in u32");
        for j in 1..=n {
            expr.add_unchecked(KostantPart::Imag { k, j }, 1);
        }
        scale *= period as u64;
    }
    Ok(expr)
}

/// The row-to-part map from reduced proper walls to reduced expressions:
/// each nonempty row of length (n+1)k + l in residue class j contributes
/// (k*delta_j) when l = 0 and j <= n, the generator D^(k) when l = 0 and
/// j = n+1, and (k*delta + alpha_{j-1}^(l)) otherwise.
pub fn wall_to_kostant(wall: &Wall) -> Result<KostantExpr> {
    wall.check_in_y_inf()?;
    let cartan = wall.cartan();
    let p = cartan.period();
    let n = cartan.n() as u32;
    let mut expr = KostantExpr::new(cartan);
    for (idx, &len) in wall.rows().iter().enumerate() {
        if len == 0 {
            continue;
        }
        let class = wall.class_of_row(idx + 1);
        let k = len / p as u32;
        let l = len % p as u32;
        let part = if class == p {
            if l == 0 {
                KostantPart::DeltaGen { m: k }
            } else {
                KostantPart::Real { k, i: n, l }
            }
        } else if l == 0 {
            KostantPart::Imag { k, j: class as u32 }
        } else {
            KostantPart::Real {
                k,
                i: class as u32 - 1,
                l,
            }
        };
        expr.add_unchecked(part, 1);
    }
    Ok(expr)
}

/// Inverse of [`wall_to_kostant`]: each part becomes a row of its height in
/// its residue class, and each class is sorted weakly decreasing from the
/// bottom. Requires a reduced expression.
pub fn kostant_to_wall(expr: &KostantExpr) -> Result<Wall> {
    if let Some(m) = expr.find_removable_delta() {
        return Err(Error::UnreducedExpression { m });
    }
    let cartan = expr.cartan();
    let mut classes: Vec<Vec<u32>> = vec![Vec::new(); cartan.period()];
    for (part, mult) in expr.parts() {
        let class = part.row_class(cartan);
        let len = part.height(cartan);
        for _ in 0..mult {
            classes[class - 1].push(len);
        }
    }
    for lens in &mut classes {
        lens.sort_unstable_by(|a, b| b.cmp(a));
    }
    Ok(realize_classes(cartan, &classes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::young_wall::enumerate_reduced_proper;

    fn a1() -> CartanData {
        CartanData::new(1).unwrap()
    }

    fn a2() -> CartanData {
        CartanData::new(2).unwrap()
    }

    fn real(k: u32, i: u32, l: u32) -> KostantPart {
        KostantPart::Real { k, i, l }
    }

    fn imag(k: u32, j: u32) -> KostantPart {
        KostantPart::Imag { k, j }
    }

    fn dgen(m: u32) -> KostantPart {
        KostantPart::DeltaGen { m }
    }

    fn expr(cartan: CartanData, parts: &[(KostantPart, u64)]) -> KostantExpr {
        KostantExpr::from_parts(cartan, parts.iter().copied()).unwrap()
    }

    /// Psi image of the wall [5,3,1,0,1]:
    /// (d+a0^(2)) + (d_2) + (a2) + (a1).
    fn psi_53101() -> KostantExpr {
        expr(
            a2(),
            &[
                (real(1, 0, 2), 1),
                (imag(1, 2), 1),
                (real(0, 2, 1), 1),
                (real(0, 1, 1), 1),
            ],
        )
    }

    #[test]
    fn part_validation() {
        let mut e = KostantExpr::new(a2());
        assert!(e.add_part(real(0, 3, 1), 1).is_err());
        assert!(e.add_part(real(0, 0, 3), 1).is_err());
        assert!(e.add_part(imag(0, 1), 1).is_err());
        assert!(e.add_part(imag(1, 3), 1).is_err());
        assert!(e.add_part(dgen(0), 1).is_err());
        assert!(e.add_part(real(5, 2, 2), 1).is_ok());
    }

    #[test]
    fn weight_and_height() {
        let e = psi_53101();
        assert_eq!(e.weight().coeffs(), &[3, 3, 4]);
        assert_eq!(e.height(), 10);
        assert_eq!(expr(a2(), &[(dgen(3), 1)]).weight().coeffs(), &[3, 3, 3]);
        assert_eq!(KostantExpr::new(a2()).weight().coeffs(), &[0, 0, 0]);
    }

    #[test]
    fn removable_delta_detection() {
        let simples = expr(
            a2(),
            &[(real(0, 0, 1), 1), (real(0, 1, 1), 1), (real(0, 2, 1), 1)],
        );
        assert_eq!(simples.find_removable_delta(), Some(1));

        let imaginary = expr(a2(), &[(dgen(1), 1), (imag(1, 1), 1), (imag(1, 2), 1)]);
        assert_eq!(imaginary.find_removable_delta(), Some(3));

        assert_eq!(psi_53101().find_removable_delta(), None);
        assert!(psi_53101().is_reduced());
    }

    #[test]
    fn fold_examples() {
        let e = expr(
            a2(),
            &[
                (real(0, 0, 1), 1),
                (real(0, 1, 1), 1),
                (real(0, 2, 1), 1),
                (imag(1, 1), 1),
                (imag(1, 2), 1),
            ],
        );
        assert_eq!(e.fold(), expr(a2(), &[(dgen(3), 1)]));

        let e = expr(
            a1(),
            &[(real(0, 0, 1), 1), (real(0, 1, 1), 1), (imag(1, 1), 1)],
        );
        assert_eq!(e.fold(), expr(a1(), &[(dgen(2), 1)]));

        // already reduced: fixpoint
        assert_eq!(psi_53101().fold(), psi_53101());
    }

    #[test]
    fn unfold_examples() {
        assert_eq!(
            expr(a2(), &[(dgen(2), 1)]).unfold(),
            expr(
                a2(),
                &[(real(0, 0, 2), 1), (real(0, 1, 2), 1), (real(0, 2, 2), 1)]
            )
        );
        assert_eq!(
            expr(a2(), &[(dgen(9), 1)]).unfold(),
            expr(
                a2(),
                &[
                    (real(0, 0, 1), 1),
                    (real(0, 1, 1), 1),
                    (real(0, 2, 1), 1),
                    (imag(1, 1), 1),
                    (imag(1, 2), 1),
                    (imag(3, 1), 1),
                    (imag(3, 2), 1),
                ]
            )
        );
        assert_eq!(psi_53101().unfold(), psi_53101());
    }

    #[test]
    fn closed_form_unfolding() {
        // m = 9 = 3^2 * 1
        let e = unfold_delta_closed(a2(), 2, 1).unwrap();
        assert_eq!(e, expr(a2(), &[(dgen(9), 1)]).unfold());
        let total: u64 = e.parts().map(|(_, m)| m).sum();
        assert_eq!(total, 7); // n+1+np = 3 + 2*2

        // m = 5 = 3^0 * 5, q = 3*1 + 2
        let e = unfold_delta_closed(a2(), 0, 5).unwrap();
        assert_eq!(
            e,
            expr(
                a2(),
                &[(real(1, 0, 2), 1), (real(1, 1, 2), 1), (real(1, 2, 2), 1)]
            )
        );

        let e = unfold_delta_closed(a1(), 0, 1).unwrap();
        assert_eq!(e, expr(a1(), &[(real(0, 0, 1), 1), (real(0, 1, 1), 1)]));

        assert_eq!(
            unfold_delta_closed(a2(), 1, 6),
            Err(Error::InvalidDeltaFactor { q: 6, n: 2 })
        );
    }

    #[test]
    fn closed_form_matches_iterative_unfolding() {
        for n in 1..=3 {
            let cartan = CartanData::new(n).unwrap();
            for m in 1..=30 {
                let (p, q) = factor_out_period(cartan, m);
                let closed = unfold_delta_closed(cartan, p, q).unwrap();
                let iterative = KostantExpr::from_parts(cartan, [(dgen(m), 1)])
                    .unwrap()
                    .unfold();
                assert_eq!(closed, iterative, "n = {n}, m = {m}");
                let total: u64 = closed.parts().map(|(_, mult)| mult).sum();
                assert_eq!(total, (n + 1 + n * p as usize) as u64);
            }
        }
    }

    #[test]
    fn distinct_part_counts() {
        // 2(a1^(2)) + 5(a2^(2)) + 2(d_1) + (d_2) + (a0) + 4(a1), where
        // a1^(2) = alpha_1 + alpha_0 and a2^(2) = alpha_2 + alpha_1.
        let e = expr(
            a2(),
            &[
                (real(0, 1, 2), 2),
                (real(0, 2, 2), 5),
                (imag(1, 1), 2),
                (imag(1, 2), 1),
                (real(0, 0, 1), 1),
                (real(0, 1, 1), 4),
            ],
        );
        assert_eq!(e.distinct_parts(), 6);
        assert_eq!(KostantExpr::new(a2()).distinct_parts(), 0);

        let w = Wall::new(a2(), vec![3, 2, 9, 0, 0, 6]);
        let unfolded = wall_to_kostant(&w).unwrap().unfold();
        assert_eq!(unfolded.distinct_parts(), 8);
    }

    #[test]
    fn psi_examples() {
        let w = Wall::new(a2(), vec![5, 3, 1, 0, 1]);
        assert_eq!(wall_to_kostant(&w).unwrap(), psi_53101());

        let w = Wall::new(a2(), vec![3, 2, 9, 0, 0, 6]);
        assert_eq!(
            wall_to_kostant(&w).unwrap(),
            expr(
                a2(),
                &[
                    (imag(1, 1), 1),
                    (real(0, 1, 2), 1),
                    (dgen(3), 1),
                    (dgen(2), 1)
                ]
            )
        );

        assert_eq!(
            wall_to_kostant(&Wall::empty(a2())).unwrap(),
            KostantExpr::new(a2())
        );
        assert!(wall_to_kostant(&Wall::new(a1(), vec![1, 1])).is_err());
    }

    #[test]
    fn phi_examples() {
        let e = expr(
            a2(),
            &[
                (real(0, 0, 1), 1),
                (real(2, 1, 2), 1),
                (dgen(3), 1),
                (real(0, 2, 1), 1),
            ],
        );
        let w = kostant_to_wall(&e).unwrap();
        assert_eq!(w.rows(), &[1, 8, 9, 0, 0, 1]);

        let w = Wall::new(a2(), vec![5, 3, 1, 0, 1]);
        assert_eq!(kostant_to_wall(&wall_to_kostant(&w).unwrap()).unwrap(), w);

        assert_eq!(
            kostant_to_wall(&KostantExpr::new(a2())).unwrap(),
            Wall::empty(a2())
        );

        let unreduced = expr(
            a2(),
            &[(real(0, 0, 1), 1), (real(0, 1, 1), 1), (real(0, 2, 1), 1)],
        );
        assert_eq!(
            kostant_to_wall(&unreduced),
            Err(Error::UnreducedExpression { m: 1 })
        );
    }

    #[test]
    fn bijection_round_trips_small() {
        for n in 1..=3 {
            let cartan = CartanData::new(n).unwrap();
            for w in enumerate_reduced_proper(cartan, 6) {
                let e = wall_to_kostant(&w).unwrap();
                assert!(e.is_reduced());
                assert_eq!(kostant_to_wall(&e).unwrap(), w);
                assert_eq!(e.weight(), w.weight());
                // fold/unfold are mutually inverse across the bijection
                let unfolded = e.unfold();
                assert!(unfolded.is_kostant_partition());
                assert_eq!(unfolded.fold(), e);
                assert_eq!(unfolded.weight(), w.weight());
            }
        }
    }

    #[test]
    fn fold_output_is_reduced() {
        // Deterministic pseudo-random expressions over the basic parts.
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for n in 1..=3u32 {
            let cartan = CartanData::new(n as usize).unwrap();
            for _ in 0..50 {
                let mut e = KostantExpr::new(cartan);
                for _ in 0..(next() % 6) {
                    let mult = 1 + next() % 3;
                    let part = match next() % 2 {
                        0 => KostantPart::Real {
                            k: (next() % 3) as u32,
                            i: (next() % (n as u64 + 1)) as u32,
                            l: (1 + next() % n as u64) as u32,
                        },
                        _ => KostantPart::Imag {
                            k: (1 + next() % 3) as u32,
                            j: (1 + next() % n as u64) as u32,
                        },
                    };
                    e.add_part(part, mult).unwrap();
                }
                let folded = e.fold();
                assert_eq!(folded.find_removable_delta(), None);
                assert_eq!(folded.weight(), e.weight());
                assert_eq!(folded.unfold(), e.unfold());
                // unfold . fold = id on generator-free expressions
                assert_eq!(folded.unfold(), e);
            }
        }
    }

    #[test]
    fn rendering() {
        assert_eq!(psi_53101().to_string(), "(a1) + (a2) + (d+a0^(2)) + (d_2)");
        assert_eq!(
            expr(a2(), &[(real(0, 1, 1), 2), (dgen(3), 1), (imag(3, 2), 1)]).to_string(),
            "2(a1) + (3d_2) + D^(3)"
        );
        assert_eq!(KostantExpr::new(a2()).to_string(), "0");
    }

    #[test]
    fn json_round_trip() {
        let e = expr(a2(), &[(real(0, 1, 2), 2), (imag(1, 1), 1), (dgen(2), 1)]);
        let text = e.to_json();
        assert_eq!(
            text,
            r#"{"real":[[0,1,2],[0,1,2]],"imag":[[1,1]],"delta":[2]}"#
        );
        assert_eq!(KostantExpr::from_json(a2(), &text).unwrap(), e);
        assert!(KostantExpr::from_json(a2(), r#"{"imag":[[0,1]]}"#).is_err());
    }
}
