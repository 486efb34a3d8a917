//! Fillings over the signed alphabet `1 < 2 < ... < 2~ < 1~` and their
//! statistics.
//!
//! Two comparison relations drive all statistics: `x <=+ y` holds when
//! `x < y` or `x = y` is a positive letter, `x <=- y` when `x < y` or
//! `x = y` is a negative letter. The default total order places every
//! positive letter below every negative one and reverses magnitudes among
//! the negatives; an alternative order with the negatives at the bottom is
//! available because one hook argument needs `1~` minimal. All summed
//! statistics are independent of the admissible order, which the tests
//! exercise.

use std::fmt;

use crate::shapes::{BoxPos, Filling, Partition};
use crate::Error;

/// A signed letter: `3` or `3~`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SuperLetter {
    pub magnitude: u32,
    pub negative: bool,
}

impl SuperLetter {
    pub fn positive(m: u32) -> Self {
        SuperLetter {
            magnitude: m,
            negative: false,
        }
    }

    pub fn negative(m: u32) -> Self {
        SuperLetter {
            magnitude: m,
            negative: true,
        }
    }
}

impl fmt::Display for SuperLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.magnitude, if self.negative { "~" } else { "" })
    }
}

/// Total order of the signed alphabet; both choices preserve the natural
/// order of the positive letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SuperOrder {
    /// `1 < 2 < ... < 2~ < 1~`
    #[default]
    PositivesFirst,
    /// `... < 2~ < 1~ < 1 < 2 < ...`
    NegativesFirst,
}

impl SuperOrder {
    pub fn cmp(&self, a: SuperLetter, b: SuperLetter) -> std::cmp::Ordering {
        self.key(a).cmp(&self.key(b))
    }

    fn key(&self, x: SuperLetter) -> (i8, i64) {
        let band = match (self, x.negative) {
            (SuperOrder::PositivesFirst, false) => 0,
            (SuperOrder::PositivesFirst, true) => 1,
            (SuperOrder::NegativesFirst, true) => -1,
            (SuperOrder::NegativesFirst, false) => 0,
        };
        let within = if x.negative {
            -(x.magnitude as i64)
        } else {
            x.magnitude as i64
        };
        (band, within)
    }

    /// `a <=+ b`: strictly smaller, or equal positive letters.
    pub fn leq_pos(&self, a: SuperLetter, b: SuperLetter) -> bool {
        match self.cmp(a, b) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Equal => !a.negative,
            std::cmp::Ordering::Greater => false,
        }
    }

    /// `a <=- b`: strictly smaller, or equal negative letters.
    pub fn leq_neg(&self, a: SuperLetter, b: SuperLetter) -> bool {
        match self.cmp(a, b) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Equal => a.negative,
            std::cmp::Ordering::Greater => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperFilling {
    shape: Partition,
    rows: Vec<Vec<SuperLetter>>,
}

impl SuperFilling {
    pub fn new(shape: Partition, rows: Vec<Vec<SuperLetter>>) -> Result<Self, Error> {
        if rows.len() != shape.len()
            || rows
                .iter()
                .zip(shape.parts())
                .any(|(row, &len)| row.len() != len)
            || rows.iter().flatten().any(|l| l.magnitude == 0)
        {
            return Err(Error::Invalid("rows do not match the shape".into()));
        }
        Ok(SuperFilling { shape, rows })
    }

    pub fn from_reading_entries(shape: Partition, entries: &[SuperLetter]) -> Result<Self, Error> {
        if entries.len() != shape.size() {
            return Err(Error::Invalid("entry count does not match the shape".into()));
        }
        let mut rows: Vec<Vec<SuperLetter>> = shape
            .parts()
            .iter()
            .map(|&len| vec![SuperLetter::positive(1); len])
            .collect();
        let mut k = 0;
        for j in (1..=shape.len()).rev() {
            for i in 1..=shape.part(j) {
                rows[j - 1][i - 1] = entries[k];
                k += 1;
            }
        }
        SuperFilling::new(shape, rows)
    }

    /// Embed an ordinary filling as an all-positive super filling.
    pub fn from_filling(f: &Filling) -> Self {
        SuperFilling {
            shape: f.shape().clone(),
            rows: f
                .rows()
                .iter()
                .map(|row| row.iter().map(|&e| SuperLetter::positive(e)).collect())
                .collect(),
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn entry(&self, b: BoxPos) -> SuperLetter {
        self.rows[b.row - 1][b.col - 1]
    }

    /// The filling of absolute values.
    pub fn magnitudes(&self) -> Filling {
        Filling::new(
            self.shape.clone(),
            self.rows
                .iter()
                .map(|row| row.iter().map(|l| l.magnitude).collect())
                .collect(),
        )
        .unwrap()
    }

    /// Exponent vector of `x^{|sigma|}` over `max` variables.
    pub fn content(&self, max: usize) -> Vec<u32> {
        let mut c = vec![0u32; max];
        for l in self.rows.iter().flatten() {
            c[(l.magnitude as usize) - 1] += 1;
        }
        c
    }

    /// `|sigma(x, y)| >= y` for every box.
    pub fn is_compatible(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(j, row)| row.iter().all(|l| l.magnitude as usize > j))
    }

    /// Attacking inversions under `>=-`: same-row pairs and
    /// consecutive-row pairs with the upper box strictly to the right,
    /// counted when the earlier box in reading order dominates. Exposed for
    /// the ordinary-embedding checks; the pair statistics feed everything
    /// else.
    pub fn attack_inversions(&self, order: SuperOrder) -> usize {
        let shape = &self.shape;
        let mut count = 0;
        for j in 1..=shape.len() {
            let len = shape.part(j);
            for i1 in 1..len {
                for i2 in (i1 + 1)..=len {
                    let a = self.entry(BoxPos::new(i1, j));
                    let b = self.entry(BoxPos::new(i2, j));
                    if order.leq_neg(b, a) {
                        count += 1;
                    }
                }
            }
            if j >= 2 {
                for i in 1..=shape.part(j) {
                    for k in 1..i {
                        let upper = self.entry(BoxPos::new(i, j));
                        let lower = self.entry(BoxPos::new(k, j - 1));
                        if order.leq_neg(lower, upper) {
                            count += 1;
                        }
                    }
                }
            }
        }
        count
    }
}

/// All statistics of a super filling under one alphabet order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperStats {
    pub descents: Vec<BoxPos>,
    pub maj: usize,
    pub inversion_pairs: Vec<(BoxPos, BoxPos)>,
    /// Number of negative entries.
    pub negatives: usize,
    /// Number of positive entries.
    pub positives: usize,
    pub compatible: bool,
}

/// Descents (via `>=-`), major index, inversion pairs (via the signed
/// counterclockwise conditions), and entry sign counts.
pub fn super_stats(sf: &SuperFilling, order: SuperOrder) -> SuperStats {
    let shape = sf.shape();
    let mut descents = Vec::new();
    for j in 2..=shape.len() {
        for i in 1..=shape.part(j) {
            let upper = sf.entry(BoxPos::new(i, j));
            let lower = sf.entry(BoxPos::new(i, j - 1));
            // upper >=- lower, that is lower <=- upper
            if order.leq_neg(lower, upper) {
                descents.push(BoxPos::new(i, j));
            }
        }
    }
    let maj = descents
        .iter()
        .map(|&b| shape.leg(b).unwrap() + 1)
        .sum();

    let mut inversion_pairs = Vec::new();
    for j in 1..=shape.len() {
        let len = shape.part(j);
        for i1 in 1..len {
            for i2 in (i1 + 1)..=len {
                let s1 = sf.entry(BoxPos::new(i1, j));
                let s2 = sf.entry(BoxPos::new(i2, j));
                let is_pair = if j == 1 {
                    // virtual letter below row 1 is strictly minimal: only
                    // the middle condition can hold
                    order.leq_neg(s2, s1)
                } else {
                    let s3 = sf.entry(BoxPos::new(i1, j - 1));
                    (order.leq_pos(s1, s3) && order.leq_neg(s3, s2))
                        || (order.leq_neg(s3, s2) && order.leq_neg(s2, s1))
                        || (order.leq_neg(s2, s1) && order.leq_pos(s1, s3))
                };
                if is_pair {
                    inversion_pairs.push((BoxPos::new(i1, j), BoxPos::new(i2, j)));
                }
            }
        }
    }

    let negatives = sf.rows.iter().flatten().filter(|l| l.negative).count();
    let positives = sf.shape.size() - negatives;
    SuperStats {
        descents,
        maj,
        inversion_pairs,
        negatives,
        positives,
        compatible: sf.is_compatible(),
    }
}

/// All super fillings with magnitudes in `1..=max_magnitude`, lexicographic
/// by reading order with positives before negatives per box.
pub fn enumerate_superfillings(
    shape: &Partition,
    max_magnitude: usize,
) -> impl Iterator<Item = SuperFilling> {
    let shape = shape.clone();
    let boxes = shape.size();
    let radix = 2 * max_magnitude as u64;
    let total: u64 = radix.pow(boxes as u32);
    (0..total).map(move |index| {
        let mut entries = Vec::with_capacity(boxes);
        let mut rest = index;
        for _ in 0..boxes {
            entries.push(decode_letter((rest % radix) as usize, max_magnitude));
            rest /= radix;
        }
        entries.reverse();
        SuperFilling::from_reading_entries(shape.clone(), &entries).unwrap()
    })
}

fn decode_letter(code: usize, max_magnitude: usize) -> SuperLetter {
    if code < max_magnitude {
        SuperLetter::positive(code as u32 + 1)
    } else {
        SuperLetter::negative((code - max_magnitude) as u32 + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::enumerate_fillings;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn pos(m: u32) -> SuperLetter {
        SuperLetter::positive(m)
    }

    fn neg(m: u32) -> SuperLetter {
        SuperLetter::negative(m)
    }

    #[test]
    fn default_order() {
        let o = SuperOrder::PositivesFirst;
        assert!(o.cmp(pos(1), pos(2)).is_lt());
        assert!(o.cmp(pos(7), neg(7)).is_lt());
        assert!(o.cmp(neg(2), neg(1)).is_lt());
        let o = SuperOrder::NegativesFirst;
        assert!(o.cmp(neg(2), neg(1)).is_lt());
        assert!(o.cmp(neg(1), pos(1)).is_lt());
    }

    #[test]
    fn all_positive_matches_ordinary_statistics() {
        let sh = p(&[3, 2]);
        for f in enumerate_fillings(&sh, 3) {
            let sf = SuperFilling::from_filling(&f);
            for order in [SuperOrder::PositivesFirst, SuperOrder::NegativesFirst] {
                let stats = super_stats(&sf, order);
                let mut des = f.descents();
                des.sort();
                let mut sdes = stats.descents.clone();
                sdes.sort();
                assert_eq!(sdes, des);
                assert_eq!(stats.maj, f.maj());
                let mut pairs = f.inversion_pairs();
                pairs.sort();
                let mut spairs = stats.inversion_pairs.clone();
                spairs.sort();
                assert_eq!(spairs, pairs);
                assert_eq!(stats.negatives, 0);
                assert_eq!(
                    sf.attack_inversions(order),
                    f.attack_inversions(),
                    "attack inversions embed"
                );
            }
        }
    }

    #[test]
    fn equal_negative_column_is_descent() {
        let sf = SuperFilling::new(p(&[1, 1]), vec![vec![neg(1)], vec![neg(1)]]).unwrap();
        let stats = super_stats(&sf, SuperOrder::PositivesFirst);
        assert_eq!(stats.descents, vec![BoxPos::new(1, 2)]);
        assert_eq!(stats.maj, 1);
        assert_eq!(stats.negatives, 2);
    }

    #[test]
    fn single_row_signed_pairs_depend_on_order() {
        // left 1, right 1~: a pair exactly when 1~ lies below 1 in the order
        let sf = SuperFilling::new(p(&[2]), vec![vec![pos(1), neg(1)]]).unwrap();
        assert!(super_stats(&sf, SuperOrder::PositivesFirst)
            .inversion_pairs
            .is_empty());
        assert_eq!(
            super_stats(&sf, SuperOrder::NegativesFirst)
                .inversion_pairs
                .len(),
            1
        );
        // left 1~, right 1: the opposite
        let sf = SuperFilling::new(p(&[2]), vec![vec![neg(1), pos(1)]]).unwrap();
        assert_eq!(
            super_stats(&sf, SuperOrder::PositivesFirst)
                .inversion_pairs
                .len(),
            1
        );
        // equal negatives are always a pair, equal positives never
        let sf = SuperFilling::new(p(&[2]), vec![vec![neg(2), neg(2)]]).unwrap();
        assert_eq!(
            super_stats(&sf, SuperOrder::PositivesFirst)
                .inversion_pairs
                .len(),
            1
        );
        let sf = SuperFilling::new(p(&[2]), vec![vec![pos(2), pos(2)]]).unwrap();
        assert!(super_stats(&sf, SuperOrder::PositivesFirst)
            .inversion_pairs
            .is_empty());
    }

    #[test]
    fn compatibility() {
        let sf = SuperFilling::new(
            p(&[2, 1]),
            vec![vec![pos(1), neg(3)], vec![pos(2)]],
        )
        .unwrap();
        assert!(sf.is_compatible());
        let sf = SuperFilling::new(
            p(&[2, 1]),
            vec![vec![pos(1), neg(3)], vec![pos(1)]],
        )
        .unwrap();
        assert!(!sf.is_compatible());
    }

    #[test]
    fn enumeration_count() {
        assert_eq!(enumerate_superfillings(&p(&[2]), 2).count(), 16);
        assert_eq!(enumerate_superfillings(&p(&[1, 1]), 1).count(), 4);
    }
}
