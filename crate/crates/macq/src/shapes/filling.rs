//! Fillings of Young diagrams and the statistics `Des`, `maj`, `Inv`,
//! `InvP`, `inv`.
//!
//! A filling assigns a positive integer to every box. Rows are stored bottom
//! row first (French convention). The descent set collects the upper box of
//! every vertically decreasing pair; `maj` adds `leg + 1` over descents.
//! Inversion pairs are the row pairs that are counterclockwise increasing
//! together with the box directly below the left member, where a virtual
//! letter smaller than every entry sits below the first row.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::shapes::{BoxPos, Partition};
use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Filling {
    shape: Partition,
    /// Bottom row first; `rows[j-1][i-1]` is the entry of box `(i, j)`.
    rows: Vec<Vec<u32>>,
}

impl Filling {
    pub fn new(shape: Partition, rows: Vec<Vec<u32>>) -> Result<Self, Error> {
        if rows.len() != shape.len()
            || rows
                .iter()
                .zip(shape.parts())
                .any(|(row, &len)| row.len() != len)
            || rows.iter().flatten().any(|&e| e == 0)
        {
            return Err(Error::Invalid("rows do not match the shape".into()));
        }
        Ok(Filling { shape, rows })
    }

    /// Build from entries listed in reading order (top row first).
    pub fn from_reading_entries(shape: Partition, entries: &[u32]) -> Result<Self, Error> {
        if entries.len() != shape.size() {
            return Err(Error::Invalid("entry count does not match the shape".into()));
        }
        let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&len| vec![0; len]).collect();
        let mut k = 0;
        for j in (1..=shape.len()).rev() {
            for i in 1..=shape.part(j) {
                rows[j - 1][i - 1] = entries[k];
                k += 1;
            }
        }
        Filling::new(shape, rows)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn entry(&self, b: BoxPos) -> u32 {
        self.rows[b.row - 1][b.col - 1]
    }

    /// Entries in reading order: rows top to bottom, left to right.
    pub fn reading_word(&self) -> Vec<u32> {
        let mut w = Vec::with_capacity(self.shape.size());
        for row in self.rows.iter().rev() {
            w.extend_from_slice(row);
        }
        w
    }

    /// Count of each letter `1..=max`, as the exponent vector of `x^sigma`.
    pub fn content(&self, max: usize) -> Vec<u32> {
        let mut c = vec![0u32; max];
        for &e in self.rows.iter().flatten() {
            c[(e as usize) - 1] += 1;
        }
        c
    }

    pub fn is_standard(&self) -> bool {
        let n = self.shape.size();
        let mut seen = vec![false; n];
        for &e in self.rows.iter().flatten() {
            let e = e as usize;
            if e == 0 || e > n || seen[e - 1] {
                return false;
            }
            seen[e - 1] = true;
        }
        true
    }

    /// Upper boxes of vertically decreasing pairs.
    pub fn descents(&self) -> Vec<BoxPos> {
        let mut out = Vec::new();
        for j in 2..=self.shape.len() {
            for i in 1..=self.shape.part(j) {
                let upper = BoxPos::new(i, j);
                let lower = BoxPos::new(i, j - 1);
                if self.entry(upper) > self.entry(lower) {
                    out.push(upper);
                }
            }
        }
        out
    }

    /// Sum of `leg + 1` over the descent boxes.
    pub fn maj(&self) -> usize {
        self.descents()
            .into_iter()
            .map(|b| self.shape.leg(b).unwrap() + 1)
            .sum()
    }

    /// Number of attacking inversions: pairs in a common row with the left
    /// entry larger, plus consecutive-row pairs with the upper box strictly
    /// to the right and its entry larger.
    pub fn attack_inversions(&self) -> usize {
        let mut count = 0;
        for j in 1..=self.shape.len() {
            let len = self.shape.part(j);
            for i1 in 1..len {
                for i2 in (i1 + 1)..=len {
                    if self.entry(BoxPos::new(i1, j)) > self.entry(BoxPos::new(i2, j)) {
                        count += 1;
                    }
                }
            }
            if j >= 2 {
                for i in 1..=self.shape.part(j) {
                    for k in 1..i.min(self.shape.part(j - 1) + 1) {
                        if self.entry(BoxPos::new(i, j)) > self.entry(BoxPos::new(k, j - 1)) {
                            count += 1;
                        }
                    }
                }
            }
        }
        count
    }

    /// Counterclockwise-increasing row pairs `(left, right)`, using the box
    /// directly below the left member (a virtual minimum below row 1).
    pub fn inversion_pairs(&self) -> Vec<(BoxPos, BoxPos)> {
        let mut out = Vec::new();
        for j in 1..=self.shape.len() {
            let len = self.shape.part(j);
            for i1 in 1..len {
                for i2 in (i1 + 1)..=len {
                    let s1 = self.entry(BoxPos::new(i1, j));
                    let s2 = self.entry(BoxPos::new(i2, j));
                    let is_pair = if j == 1 {
                        s2 < s1
                    } else {
                        let s3 = self.entry(BoxPos::new(i1, j - 1));
                        (s1 <= s3 && s3 < s2) || (s3 < s2 && s2 < s1) || (s2 < s1 && s1 <= s3)
                    };
                    if is_pair {
                        out.push((BoxPos::new(i1, j), BoxPos::new(i2, j)));
                    }
                }
            }
        }
        out
    }

    /// `inv = #InvP`; the identity `#Inv - sum of arms over descents = #InvP`
    /// is exercised by the invariant tests, not assumed here.
    pub fn inv(&self) -> usize {
        self.inversion_pairs().len()
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows.iter().enumerate().rev() {
            if k + 1 < self.rows.len() {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Inverse descents of a standard filling: `i` such that `i + 1` appears to
/// the left of `i` in the reading word.
pub fn ides(filling: &Filling) -> Result<Vec<usize>, Error> {
    if !filling.is_standard() {
        return Err(Error::NotStandard);
    }
    let word = filling.reading_word();
    ides_of_word(&word)
}

/// Inverse descents of a permutation given as a word.
pub fn ides_of_word(word: &[u32]) -> Result<Vec<usize>, Error> {
    let n = word.len();
    let mut pos = vec![usize::MAX; n + 1];
    for (k, &e) in word.iter().enumerate() {
        let e = e as usize;
        if e == 0 || e > n || pos[e] != usize::MAX {
            return Err(Error::NotStandard);
        }
        pos[e] = k;
    }
    Ok((1..n).filter(|&i| pos[i + 1] < pos[i]).collect())
}

/// Precomputed box structure of one shape for fast statistic evaluation on
/// flat entry vectors in reading order. Used by the filling sweeps, where
/// constructing a [`Filling`] per term would dominate the run time.
#[derive(Debug, Clone)]
pub struct ShapeTables {
    shape: Partition,
    /// Boxes in reading order.
    boxes: Vec<BoxPos>,
    /// Index of the box directly below, when it exists.
    below: Vec<Option<usize>>,
    /// `leg + 1` per box.
    leg1: Vec<usize>,
    /// Same-row pairs `(left, right, below-left)` as indices into `boxes`.
    row_pairs: Vec<(usize, usize, Option<usize>)>,
}

/// Statistics of one flat entry vector, produced by [`ShapeTables::stats`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FillingStats {
    pub maj: usize,
    /// Indices into [`ShapeTables::row_pairs`] of the inversion pairs.
    pub invp: Vec<usize>,
}

impl ShapeTables {
    pub fn new(shape: &Partition) -> Self {
        let boxes = shape.boxes_reading_order();
        let index_of = |b: BoxPos| boxes.iter().position(|&x| x == b);
        let below: Vec<Option<usize>> = boxes
            .iter()
            .map(|b| {
                (b.row > 1)
                    .then(|| index_of(BoxPos::new(b.col, b.row - 1)))
                    .flatten()
            })
            .collect();
        let leg1 = boxes.iter().map(|&b| shape.leg(b).unwrap() + 1).collect();
        let mut row_pairs = Vec::new();
        for (k1, b1) in boxes.iter().enumerate() {
            for (k2, b2) in boxes.iter().enumerate() {
                if b1.row == b2.row && b1.col < b2.col {
                    row_pairs.push((k1, k2, below[k1]));
                }
            }
        }
        ShapeTables {
            shape: shape.clone(),
            boxes,
            below,
            leg1,
            row_pairs,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn num_boxes(&self) -> usize {
        self.boxes.len()
    }

    pub fn boxes(&self) -> &[BoxPos] {
        &self.boxes
    }

    pub fn row_pairs(&self) -> &[(usize, usize, Option<usize>)] {
        &self.row_pairs
    }

    pub fn maj_of(&self, entries: &[u32]) -> usize {
        let mut maj = 0;
        for (k, &b) in self.below.iter().enumerate() {
            if let Some(lower) = b {
                if entries[k] > entries[lower] {
                    maj += self.leg1[k];
                }
            }
        }
        maj
    }

    /// Visit the index of every inversion pair of `entries`.
    pub fn for_each_invp(&self, entries: &[u32], mut f: impl FnMut(usize)) {
        for (idx, &(k1, k2, k3)) in self.row_pairs.iter().enumerate() {
            let s1 = entries[k1];
            let s2 = entries[k2];
            let is_pair = match k3 {
                None => s2 < s1,
                Some(k3) => {
                    let s3 = entries[k3];
                    (s1 <= s3 && s3 < s2) || (s3 < s2 && s2 < s1) || (s2 < s1 && s1 <= s3)
                }
            };
            if is_pair {
                f(idx);
            }
        }
    }

    pub fn stats(&self, entries: &[u32]) -> FillingStats {
        let mut invp = Vec::new();
        self.for_each_invp(entries, |idx| invp.push(idx));
        FillingStats {
            maj: self.maj_of(entries),
            invp,
        }
    }

    /// Decode the `index`-th filling with entries in `1..=max_entry`,
    /// lexicographic in reading order.
    pub fn decode(&self, max_entry: usize, index: u64, entries: &mut Vec<u32>) {
        let len = self.boxes.len();
        entries.clear();
        entries.resize(len, 1);
        let mut rest = index;
        for k in (0..len).rev() {
            entries[k] = (rest % max_entry as u64) as u32 + 1;
            rest /= max_entry as u64;
        }
    }

    pub fn filling_count(&self, max_entry: usize) -> u64 {
        (max_entry as u64).pow(self.num_boxes() as u32)
    }
}

/// All fillings of `shape` with entries in `1..=max_entry`, lexicographic by
/// reading order.
pub fn enumerate_fillings(shape: &Partition, max_entry: usize) -> FillingIter {
    FillingIter {
        tables: ShapeTables::new(shape),
        max_entry,
        next: 0,
    }
}

pub struct FillingIter {
    tables: ShapeTables,
    max_entry: usize,
    next: u64,
}

impl Iterator for FillingIter {
    type Item = Filling;

    fn next(&mut self) -> Option<Filling> {
        if self.max_entry == 0 || self.next >= self.tables.filling_count(self.max_entry) {
            return None;
        }
        let mut entries = Vec::new();
        self.tables.decode(self.max_entry, self.next, &mut entries);
        self.next += 1;
        Some(Filling::from_reading_entries(self.tables.shape.clone(), &entries).unwrap())
    }
}

/// The `n!` standard fillings of a shape of size `n`, ordered by reading word.
pub fn standard_fillings(shape: &Partition) -> Vec<Filling> {
    let n = shape.size();
    let mut word: Vec<u32> = (1..=n as u32).collect();
    let mut out = Vec::new();
    loop {
        out.push(Filling::from_reading_entries(shape.clone(), &word).unwrap());
        if !next_permutation(&mut word) {
            break;
        }
    }
    out
}

pub(crate) fn next_permutation<T: Ord>(w: &mut [T]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let mut i = w.len() - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = w.len() - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn filling(parts: &[usize], rows: &[&[u32]]) -> Filling {
        Filling::new(
            shape(parts),
            rows.iter().map(|r| r.to_vec()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn descents_and_maj_small() {
        let f = filling(&[2], &[&[1, 2]]);
        assert!(f.descents().is_empty());
        assert_eq!(f.maj(), 0);

        let f = filling(&[1, 1], &[&[1], &[2]]);
        assert_eq!(f.descents(), vec![BoxPos::new(1, 2)]);
        assert_eq!(f.maj(), 1);

        // weakly decreasing up every column: no descents
        let f = filling(&[2, 2], &[&[2, 3], &[2, 1]]);
        assert_eq!(f.maj(), 0);
    }

    #[test]
    fn maj_single_column() {
        // bottom-to-top 1,3,2: one descent at (1,2) with leg 1
        let f = filling(&[1, 1, 1], &[&[1], &[3], &[2]]);
        assert_eq!(f.descents(), vec![BoxPos::new(1, 2)]);
        assert_eq!(f.maj(), 2);
        // bottom-to-top 3,2,1: no vertical increase read downward, no descents
        let f = filling(&[1, 1, 1], &[&[3], &[2], &[1]]);
        assert!(f.descents().is_empty());
        assert_eq!(f.maj(), 0);
        // bottom-to-top 1,2,3: descents at both upper boxes, legs 1 and 0
        let f = filling(&[1, 1, 1], &[&[1], &[2], &[3]]);
        assert_eq!(f.maj(), 3);
    }

    #[test]
    fn single_row_inversion_pairs() {
        let f = filling(&[2], &[&[2, 1]]);
        assert_eq!(f.inv(), 1);
        assert_eq!(f.attack_inversions(), 1);
        let f = filling(&[2], &[&[1, 2]]);
        assert_eq!(f.inv(), 0);
        let f = filling(&[3], &[&[2, 2, 2]]);
        assert_eq!(f.inv(), 0);
    }

    #[test]
    fn inv_identity_exhaustive_small() {
        // #Inv - sum of arms over descents = #InvP for every filling
        for parts in [vec![2, 2], vec![3, 1], vec![2, 1, 1], vec![3, 2]] {
            let sh = Partition::new(parts);
            for f in enumerate_fillings(&sh, 4) {
                let arms: usize = f
                    .descents()
                    .into_iter()
                    .map(|b| f.shape().arm(b).unwrap())
                    .sum();
                assert_eq!(
                    f.attack_inversions() as i64 - arms as i64,
                    f.inv() as i64,
                    "failed on {:?}",
                    f
                );
            }
        }
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(enumerate_fillings(&shape(&[1]), 2).count(), 2);
        assert_eq!(enumerate_fillings(&shape(&[2]), 2).count(), 4);
        assert_eq!(enumerate_fillings(&shape(&[2, 1]), 3).count(), 27);
    }

    #[test]
    fn tables_agree_with_definitions() {
        for parts in [vec![3, 2], vec![2, 2, 1], vec![4, 1]] {
            let sh = Partition::new(parts);
            let tables = ShapeTables::new(&sh);
            for f in enumerate_fillings(&sh, 3) {
                let entries: Vec<u32> = f.reading_word();
                let stats = tables.stats(&entries);
                assert_eq!(stats.maj, f.maj());
                assert_eq!(stats.invp.len(), f.inv());
            }
        }
    }

    #[test]
    fn standard_fillings_are_permutations() {
        let fillings = standard_fillings(&shape(&[2, 1]));
        assert_eq!(fillings.len(), 6);
        let mut words: Vec<Vec<u32>> = fillings.iter().map(|f| f.reading_word()).collect();
        words.dedup();
        assert_eq!(words.len(), 6);
        assert!(fillings.iter().all(|f| f.is_standard()));
    }

    #[test]
    fn ides_examples() {
        let f = Filling::from_reading_entries(shape(&[3]), &[1, 2, 3]).unwrap();
        assert!(ides(&f).unwrap().is_empty());
        let f = Filling::from_reading_entries(shape(&[2]), &[2, 1]).unwrap();
        assert_eq!(ides(&f).unwrap(), vec![1]);
        let f = Filling::from_reading_entries(shape(&[3]), &[3, 1, 2]).unwrap();
        assert_eq!(ides(&f).unwrap(), vec![2]);
        let f = Filling::from_reading_entries(shape(&[2]), &[2, 2]).unwrap();
        assert_eq!(ides(&f), Err(Error::NotStandard));
    }

    #[test]
    fn serde_shape_and_rows() {
        let f = filling(&[2, 1], &[&[1, 3], &[2]]);
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"{"shape":[2,1],"rows":[[1,3],[2]]}"#);
        let back: Filling = serde_json::from_str(&json).unwrap();
        assert_eq!(f, back);
    }

    /// A large worked example: shape (11,10,8,7,4) with a fixed filling whose
    /// descent set and a list of 24 inversion pairs were derived by hand from
    /// the definitions.
    #[test]
    fn large_worked_example() {
        let f = filling(
            &[11, 10, 8, 7, 4],
            &[
                &[1, 2, 10, 11, 2, 4, 6, 12, 14, 11, 13],
                &[2, 4, 3, 1, 8, 10, 7, 8, 9, 9],
                &[6, 7, 4, 10, 9, 9, 13, 13],
                &[1, 1, 1, 11, 5, 8, 9],
                &[9, 9, 4, 9],
            ],
        );

        let expected_descents: Vec<BoxPos> = [
            (1, 2), (2, 2), (5, 2), (6, 2), (7, 2),
            (1, 3), (2, 3), (3, 3), (4, 3), (5, 3), (7, 3), (8, 3),
            (4, 4),
            (1, 5), (2, 5), (3, 5),
        ]
        .iter()
        .map(|&(i, j)| BoxPos::new(i, j))
        .collect();
        let mut descents = f.descents();
        descents.sort();
        let mut expected = expected_descents.clone();
        expected.sort();
        assert_eq!(descents, expected);
        assert_eq!(f.maj(), 39);

        // pairs checked one by one against the counterclockwise conditions
        let member_pairs: Vec<((usize, usize), (usize, usize))> = vec![
            ((3, 1), (5, 1)), ((3, 1), (6, 1)), ((3, 1), (7, 1)),
            ((4, 1), (5, 1)), ((4, 1), (6, 1)), ((4, 1), (7, 1)),
            ((8, 1), (10, 1)), ((9, 1), (10, 1)), ((9, 1), (11, 1)),
            ((2, 2), (3, 2)), ((3, 2), (4, 2)), ((5, 2), (7, 2)),
            ((6, 2), (7, 2)), ((6, 2), (8, 2)), ((6, 2), (9, 2)), ((6, 2), (10, 2)),
            ((1, 3), (3, 3)), ((4, 3), (5, 3)), ((4, 3), (6, 3)),
            ((6, 3), (7, 3)), ((6, 3), (8, 3)),
            ((1, 4), (4, 4)), ((2, 4), (4, 4)), ((3, 4), (4, 4)),
            ((1, 4), (6, 4)), ((1, 4), (7, 4)), ((2, 4), (6, 4)), ((2, 4), (7, 4)),
            ((3, 4), (5, 4)), ((3, 4), (6, 4)), ((3, 4), (7, 4)),
            ((1, 5), (3, 5)), ((2, 5), (3, 5)),
        ];
        let non_pairs: Vec<((usize, usize), (usize, usize))> = vec![
            ((1, 5), (2, 5)),
            ((5, 2), (6, 2)),
            ((7, 2), (8, 2)),
            ((1, 2), (2, 2)),
            ((2, 3), (3, 3)),
            ((5, 3), (6, 3)),
            ((4, 4), (5, 4)),
        ];
        let pairs = f.inversion_pairs();
        for ((c1, r1), (c2, r2)) in member_pairs {
            assert!(
                pairs.contains(&(BoxPos::new(c1, r1), BoxPos::new(c2, r2))),
                "missing pair ({},{}) ({},{})",
                c1, r1, c2, r2
            );
        }
        for ((c1, r1), (c2, r2)) in non_pairs {
            assert!(
                !pairs.contains(&(BoxPos::new(c1, r1), BoxPos::new(c2, r2))),
                "unexpected pair ({},{}) ({},{})",
                c1, r1, c2, r2
            );
        }

        // the two statistics routes agree on this large filling
        let arms: usize = f
            .descents()
            .into_iter()
            .map(|b| f.shape().arm(b).unwrap())
            .sum();
        assert_eq!(f.attack_inversions() - arms, f.inv());
    }
}
