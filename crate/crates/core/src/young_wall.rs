//! Generalized Young walls of type A_n^(1).
//!
//! Boxes are stacked right to left in rows on a board whose color at row r,
//! column c (both counted from 1, columns from the right) is
//! (r - c) mod (n+1). Colors are fully determined by position, so a wall is
//! stored as its sequence of row lengths, bottom row first, trailing zeros
//! trimmed.
//!
//! Rows fall into residue classes 1..=n+1 by their index mod n+1. A wall is
//! *proper* when within each class the lengths weakly decrease bottom to
//! top, and *reduced* when no column admits a removable delta, i.e. no
//! column k satisfies a_{i-1}(k+1) < a_i(k) for every color i. The reduced
//! proper walls model the crystal B(infinity); the subset with empty
//! class-(n+1) rows corresponds to multipartitions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{CartanData, RootVector};

/// A generalized Young wall: row lengths from the bottom, trailing zeros
/// trimmed. The empty wall is the highest-weight element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Wall {
    cartan: CartanData,
    rows: Vec<u32>,
}

/// Row statistics of a reduced proper wall: the distinct-length sets S_j per
/// residue class, the (p_m, q_m) decompositions of the class-(n+1) row
/// lengths, and the derived sets feeding the part-count statistic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WallStats {
    /// S_1..S_{n+1}; entry j-1 is the set of row lengths in class j,
    /// always including 0 because the wall is finite.
    pub s_sets: Vec<BTreeSet<u32>>,
    /// (p_m, q_m) with N_{(n+1)(m+1)} = (n+1)^{p_m} q_m, for the nonempty
    /// class-(n+1) rows from the bottom; empty rows beyond the support are
    /// all (0, 0) and not listed.
    pub pq: Vec<(u32, u32)>,
    /// The union of {(n+1)^s q_m : 0 <= s < p_m} over all m, plus 0.
    pub q_set: BTreeSet<u32>,
    /// Sum over t >= 1 not divisible by n+1 of max{p_m : q_m = t}, with an
    /// empty maximum contributing 0.
    pub p_stat: u64,
}

impl Wall {
    /// Builds a wall from row lengths, bottom row first. Trailing zeros are
    /// trimmed; any lengths are accepted (properness is a separate check).
    pub fn new(cartan: CartanData, mut rows: Vec<u32>) -> Self {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        Wall { cartan, rows }
    }

    pub fn empty(cartan: CartanData) -> Self {
        Wall {
            cartan,
            rows: Vec::new(),
        }
    }

    pub fn cartan(&self) -> CartanData {
        self.cartan
    }

    /// Row lengths from the bottom, with trailing zeros trimmed.
    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// Length of row r (1-based); rows above the support are empty.
    pub fn row_len(&self, r: usize) -> u32 {
        if r >= 1 && r <= self.rows.len() {
            self.rows[r - 1]
        } else {
            0
        }
    }

    /// Index of the highest nonempty row (0 for the empty wall).
    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Total number of boxes.
    pub fn box_count(&self) -> u64 {
        self.rows.iter().map(|&len| len as u64).sum()
    }

    /// Board color at row r, column c (1-based, columns from the right).
    pub fn color(&self, r: usize, c: usize) -> usize {
        let p = self.cartan.period() as i64;
        (r as i64 - c as i64).rem_euclid(p) as usize
    }

    /// Residue class of row r, in 1..=n+1.
    pub fn class_of_row(&self, r: usize) -> usize {
        (r - 1) % self.cartan.period() + 1
    }

    /// Row lengths of one residue class, bottom to top, trailing zeros
    /// trimmed.
    fn class_lengths(&self, class: usize) -> Vec<u32> {
        let p = self.cartan.period();
        let mut out: Vec<u32> = (0..)
            .map(|m| class + m * p)
            .take_while(|&r| r <= self.rows.len())
            .map(|r| self.row_len(r))
            .collect();
        while out.last() == Some(&0) {
            out.pop();
        }
        out
    }

    /// True when within every residue class the row lengths weakly decrease
    /// from the bottom. Equivalently, each class forms a partition.
    pub fn is_proper(&self) -> bool {
        (1..=self.cartan.period()).all(|class| {
            let lens = self.class_lengths(class);
            lens.windows(2).all(|w| w[0] >= w[1])
        })
    }

    /// a_i(k): the number of i-colored boxes in column k, for i in 0..=n.
    pub fn column_counts(&self, k: usize) -> Vec<u32> {
        let mut counts = vec![0u32; self.cartan.period()];
        for (idx, &len) in self.rows.iter().enumerate() {
            let r = idx + 1;
            if len as usize >= k {
                counts[self.color(r, k)] += 1;
            }
        }
        counts
    }

    fn removable_delta_column(&self) -> Option<usize> {
        let p = self.cartan.period();
        let max_len = self.rows.iter().copied().max().unwrap_or(0) as usize;
        // Columns beyond the longest row are empty, so the strict
        // inequality can never hold there.
        for k in 1..=max_len {
            let col = self.column_counts(k);
            let next = self.column_counts(k + 1);
            if (0..p).all(|i| next[(i + p - 1) % p] < col[i]) {
                return Some(k);
            }
        }
        None
    }

    /// True when no column contains a removable delta. The wall must be
    /// proper.
    pub fn is_reduced(&self) -> Result<bool> {
        if !self.is_proper() {
            return Err(Error::ImproperWall);
        }
        Ok(self.removable_delta_column().is_none())
    }

    pub(crate) fn check_in_y_inf(&self) -> Result<()> {
        if !self.is_proper() {
            return Err(Error::ImproperWall);
        }
        if let Some(column) = self.removable_delta_column() {
            return Err(Error::UnreducedWall { column });
        }
        Ok(())
    }

    /// The negated weight -wt(Y): entry i counts the i-colored boxes.
    pub fn weight(&self) -> RootVector {
        let p = self.cartan.period();
        let mut counts = vec![0u32; p];
        for (idx, &len) in self.rows.iter().enumerate() {
            let r = idx + 1;
            for c in 1..=len as usize {
                counts[self.color(r, c)] += 1;
            }
        }
        RootVector::from_coeffs(self.cartan, counts).expect("length matches period")
    }

    /// The S_j sets, (p_m, q_m) pairs, and derived statistics. Requires a
    /// reduced proper wall.
    pub fn stat_components(&self) -> Result<WallStats> {
        self.check_in_y_inf()?;
        let p = self.cartan.period() as u32;
        let mut s_sets = Vec::with_capacity(p as usize);
        for class in 1..=p as usize {
            let mut set: BTreeSet<u32> = self.class_lengths(class).into_iter().collect();
            set.insert(0);
            s_sets.push(set);
        }
        let pq: Vec<(u32, u32)> = self
            .class_lengths(p as usize)
            .into_iter()
            .map(|len| {
                let mut q = len;
                let mut pw = 0;
                while q % p == 0 {
                    q /= p;
                    pw += 1;
                }
                (pw, q)
            })
            .collect();
        let mut q_set = BTreeSet::new();
        q_set.insert(0);
        for &(pw, q) in &pq {
            let mut value = q;
            for _ in 0..pw {
                q_set.insert(value);
                value *= p;
            }
        }
        let mut max_p_for_q: BTreeMap<u32, u32> = BTreeMap::new();
        for &(pw, q) in &pq {
            let slot = max_p_for_q.entry(q).or_insert(0);
            *slot = (*slot).max(pw);
        }
        let p_stat = max_p_for_q.values().map(|&v| v as u64).sum();
        Ok(WallStats {
            s_sets,
            pq,
            q_set,
            p_stat,
        })
    }

    /// The part-count statistic n*P + sum_j #(S_j \ Q).
    pub fn stat_n(&self) -> Result<u64> {
        let stats = self.stat_components()?;
        let surplus: u64 = stats
            .s_sets
            .iter()
            .map(|s| s.difference(&stats.q_set).count() as u64)
            .sum();
        Ok(self.cartan.n() as u64 * stats.p_stat + surplus)
    }

    /// Applies the row-splitting map: every class-(n+1) row of length
    /// (n+1)*l, taken from the largest l downward, is replaced by n+1 rows
    /// of length l, one in each residue class. Rows are identified by
    /// (class, length) since the rightmost box color of a class-j row is
    /// j-1. Returns the resulting multiset of nonempty rows.
    pub fn split_rows(&self) -> Result<BTreeMap<(usize, u32), u64>> {
        self.check_in_y_inf()?;
        let p = self.cartan.period();
        let mut rows: BTreeMap<(usize, u32), u64> = BTreeMap::new();
        for (idx, &len) in self.rows.iter().enumerate() {
            if len > 0 {
                *rows.entry((self.class_of_row(idx + 1), len)).or_insert(0) += 1;
            }
        }
        loop {
            let target = rows
                .keys()
                .filter(|&&(class, len)| class == p && len % p as u32 == 0)
                .map(|&(_, len)| len)
                .max();
            let Some(len) = target else {
                break;
            };
            let mult = rows.remove(&(p, len)).expect("key was just found");
            for class in 1..=p {
                *rows.entry((class, len / p as u32)).or_insert(0) += mult;
            }
        }
        Ok(rows)
    }

    /// Number of distinct rows after splitting; equal to the part-count
    /// statistic.
    pub fn stat_n_via_split(&self) -> Result<u64> {
        Ok(self.split_rows()?.len() as u64)
    }

    /// True for reduced proper walls whose class-(n+1) rows are all empty.
    pub fn is_in_y0(&self) -> bool {
        self.is_proper()
            && self.removable_delta_column().is_none()
            && self.class_lengths(self.cartan.period()).is_empty()
    }

    fn check_in_y0(&self) -> Result<()> {
        self.check_in_y_inf()?;
        let p = self.cartan.period();
        if let Some(idx) =
            (0..self.rows.len()).find(|&idx| (idx + 1) % p == 0 && self.rows[idx] > 0)
        {
            return Err(Error::NotInY0 { row: idx + 1 });
        }
        Ok(())
    }

    /// Sum over i = 1..n of (i+1) times the number of nonempty class-i rows;
    /// the q-exponent weight in the correction-factor sum. Requires a wall
    /// with empty class-(n+1) rows.
    pub fn stat_m(&self) -> Result<u64> {
        self.check_in_y0()?;
        let mut total = 0u64;
        for class in 1..=self.cartan.n() {
            total += (class as u64 + 1) * self.class_lengths(class).len() as u64;
        }
        Ok(total)
    }

    /// Builds a wall from explicit per-row color lists, rightmost box first.
    /// Every listed color must match the board color at its position.
    pub fn from_color_rows(cartan: CartanData, data: &[Vec<usize>]) -> Result<Wall> {
        let p = cartan.period() as i64;
        for (idx, row) in data.iter().enumerate() {
            let r = idx + 1;
            for (cidx, &found) in row.iter().enumerate() {
                let c = cidx + 1;
                let expected = (r as i64 - c as i64).rem_euclid(p) as usize;
                if found != expected {
                    return Err(Error::ColorMismatch {
                        row: r,
                        column: c,
                        expected,
                        found,
                    });
                }
            }
        }
        Ok(Wall::new(
            cartan,
            data.iter().map(|row| row.len() as u32).collect(),
        ))
    }

    /// Per-row color lists, rightmost box first; inverse of
    /// [`Wall::from_color_rows`] on valid input.
    pub fn to_color_rows(&self) -> Vec<Vec<usize>> {
        self.rows
            .iter()
            .enumerate()
            .map(|(idx, &len)| (1..=len as usize).map(|c| self.color(idx + 1, c)).collect())
            .collect()
    }

    /// Canonical JSON form {"n": ..., "rows": [...]}.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&WallJsonOut {
            n: self.cartan.n(),
            rows: &self.rows,
        })
        .expect("wall serialization cannot fail")
    }

    /// Parses the canonical {"n", "rows"} form or the alternate
    /// {"n", "colors"} form with rightmost-first color lists per row.
    pub fn from_json(text: &str) -> Result<Wall> {
        let parsed: WallJsonIn = serde_json::from_str(text).map_err(|e| Error::InvalidJson {
            message: e.to_string(),
        })?;
        let cartan = CartanData::new(parsed.n)?;
        match (parsed.rows, parsed.colors) {
            (Some(rows), None) => Ok(Wall::new(cartan, rows)),
            (None, Some(colors)) => Wall::from_color_rows(cartan, &colors),
            _ => Err(Error::InvalidJson {
                message: "wall must have exactly one of \"rows\" or \"colors\"".into(),
            }),
        }
    }
}

impl fmt::Display for Wall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, len) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{len}")?;
        }
        write!(f, "]")
    }
}

#[derive(Serialize)]
struct WallJsonOut<'a> {
    n: usize,
    rows: &'a [u32],
}

#[derive(Deserialize)]
struct WallJsonIn {
    n: usize,
    #[serde(default)]
    rows: Option<Vec<u32>>,
    #[serde(default)]
    colors: Option<Vec<Vec<usize>>>,
}

/// A tuple of n partitions; component at index j-1 holds the partition for
/// residue class j.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPartition {
    components: Vec<Vec<u32>>,
}

impl MultiPartition {
    /// Validates that every component is weakly decreasing with positive
    /// parts.
    pub fn new(components: Vec<Vec<u32>>) -> Result<Self> {
        for (idx, comp) in components.iter().enumerate() {
            let decreasing = comp.windows(2).all(|w| w[0] >= w[1]);
            if !decreasing || comp.contains(&0) {
                return Err(Error::InvalidPartition { component: idx + 1 });
            }
        }
        Ok(MultiPartition { components })
    }

    pub fn components(&self) -> &[Vec<u32>] {
        &self.components
    }

    pub fn total(&self) -> u64 {
        self.components
            .iter()
            .flat_map(|c| c.iter())
            .map(|&p| p as u64)
            .sum()
    }
}

/// Realizes a multipartition as the wall whose class-j rows have the parts
/// of component j as lengths, largest at the bottom. The result is always
/// proper with empty class-(n+1) rows.
pub fn xi(cartan: CartanData, mp: &MultiPartition) -> Result<Wall> {
    if mp.components.len() != cartan.n() {
        return Err(Error::RankMismatch {
            expected: cartan.n(),
            found: mp.components.len(),
        });
    }
    Ok(realize_classes(cartan, &mp.components))
}

/// Reads the class-j row lengths of a wall with empty class-(n+1) rows back
/// into a multipartition; inverse of [`xi`].
pub fn xi_inv(wall: &Wall) -> Result<MultiPartition> {
    wall.check_in_y0()?;
    let components = (1..=wall.cartan.n())
        .map(|class| wall.class_lengths(class))
        .collect();
    MultiPartition::new(components)
}

/// Places one partition per residue class into rows; classes beyond the
/// slice are left empty.
pub(crate) fn realize_classes(cartan: CartanData, class_partitions: &[Vec<u32>]) -> Wall {
    let p = cartan.period();
    let max_rows = class_partitions
        .iter()
        .enumerate()
        .filter(|(_, parts)| !parts.is_empty())
        .map(|(idx, parts)| idx + 1 + (parts.len() - 1) * p)
        .max()
        .unwrap_or(0);
    let mut rows = vec![0u32; max_rows];
    for (idx, parts) in class_partitions.iter().enumerate() {
        for (m, &part) in parts.iter().enumerate() {
            rows[idx + m * p] = part;
        }
    }
    Wall::new(cartan, rows)
}

/// All partitions with sum at most `budget`, in no particular order.
fn partitions_up_to(budget: u64) -> Vec<Vec<u32>> {
    fn rec(remaining: u64, max_part: u64, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(current.clone());
        for part in 1..=remaining.min(max_part) {
            current.push(part as u32);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    rec(budget, budget, &mut current, &mut out);
    out
}

fn enumerate_class_tuples(cartan: CartanData, classes: usize, max_boxes: u64) -> Vec<Wall> {
    fn rec(
        cartan: CartanData,
        classes: usize,
        class: usize,
        remaining: u64,
        chosen: &mut Vec<Vec<u32>>,
        out: &mut Vec<Wall>,
    ) {
        if class == classes {
            out.push(realize_classes(cartan, chosen));
            return;
        }
        for partition in partitions_up_to(remaining) {
            let size: u64 = partition.iter().map(|&p| p as u64).sum();
            chosen.push(partition);
            rec(cartan, classes, class + 1, remaining - size, chosen, out);
            chosen.pop();
        }
    }
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    rec(cartan, classes, 0, max_boxes, &mut chosen, &mut out);
    out
}

fn sort_walls(walls: &mut [Wall]) {
    walls.sort_by(|a, b| {
        a.box_count()
            .cmp(&b.box_count())
            .then_with(|| a.rows.len().cmp(&b.rows.len()))
            .then_with(|| a.rows.cmp(&b.rows))
    });
}

/// Every reduced proper wall with at most `max_boxes` boxes, graded by box
/// count, then by height, then lexicographically on row lengths. Properness
/// is built in (each class is enumerated as a partition); reducedness is
/// filtered.
pub fn enumerate_reduced_proper(cartan: CartanData, max_boxes: u64) -> Vec<Wall> {
    let mut walls: Vec<Wall> = enumerate_class_tuples(cartan, cartan.period(), max_boxes)
        .into_iter()
        .filter(|w| w.removable_delta_column().is_none())
        .collect();
    sort_walls(&mut walls);
    walls
}

/// Members of the empty-class-(n+1) subset with at most `max_boxes` boxes,
/// in the same order as [`enumerate_reduced_proper`].
pub fn enumerate_y0(cartan: CartanData, max_boxes: u64) -> Vec<Wall> {
    let mut walls: Vec<Wall> = enumerate_class_tuples(cartan, cartan.n(), max_boxes)
        .into_iter()
        .filter(|w| w.removable_delta_column().is_none())
        .collect();
    sort_walls(&mut walls);
    walls
}
