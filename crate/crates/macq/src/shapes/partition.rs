//! Integer partitions and Young diagram box statistics.
//!
//! The coordinate convention is French: a box `(i, j)` sits in column `i`
//! and row `j`, both 1-based, with row 1 at the bottom. The diagram of
//! `lambda` is `{(i,j) : 1 <= i <= lambda_j, 1 <= j <= len(lambda)}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::Error;

/// A box of a Young diagram: `column` is the x-coordinate, `row` the
/// y-coordinate, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoxPos {
    pub col: usize,
    pub row: usize,
}

impl BoxPos {
    pub fn new(col: usize, row: usize) -> Self {
        BoxPos { col, row }
    }
}

/// A weakly decreasing sequence of positive integers (possibly empty).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Panics when the parts are not weakly decreasing and positive; use
    /// [`Partition::try_new`] for validated input.
    pub fn new(parts: Vec<usize>) -> Self {
        Self::try_new(parts).expect("parts must be weakly decreasing and positive")
    }

    pub fn try_new(parts: Vec<usize>) -> Result<Self, Error> {
        if parts.contains(&0) {
            return Err(Error::Invalid("partition parts must be positive".into()));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Invalid("partition parts must be weakly decreasing".into()));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// Single row `(n)`; the empty partition for n = 0.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// Single column `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The j-th part (1-based), zero outside the diagram.
    pub fn part(&self, j: usize) -> usize {
        if j == 0 || j > self.parts.len() {
            0
        } else {
            self.parts[j - 1]
        }
    }

    pub fn contains_box(&self, b: BoxPos) -> bool {
        b.col >= 1 && b.row >= 1 && b.row <= self.len() && b.col <= self.parts[b.row - 1]
    }

    /// Boxes in reading order: rows top to bottom, left to right within a row.
    pub fn boxes_reading_order(&self) -> Vec<BoxPos> {
        let mut out = Vec::with_capacity(self.size());
        for j in (1..=self.len()).rev() {
            for i in 1..=self.parts[j - 1] {
                out.push(BoxPos::new(i, j));
            }
        }
        out
    }

    /// `lambda^t_j = #{i : lambda_i >= j}`; an involution.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Height of column `i` (1-based).
    pub fn column_height(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p >= i).count()
    }

    /// `n(mu) = sum_i (i-1) mu_i`.
    pub fn n_stat(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// Dominance order on partitions of equal size: true iff every prefix
    /// sum of `self` is at most the corresponding prefix sum of `other`.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool, Error> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch);
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        for j in 1..=len {
            a += self.part(j);
            b += other.part(j);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn arm(&self, b: BoxPos) -> Result<usize, Error> {
        self.check_box(b)?;
        Ok(self.parts[b.row - 1] - b.col)
    }

    pub fn coarm(&self, b: BoxPos) -> Result<usize, Error> {
        self.check_box(b)?;
        Ok(b.col - 1)
    }

    pub fn leg(&self, b: BoxPos) -> Result<usize, Error> {
        self.check_box(b)?;
        Ok(self.column_height(b.col) - b.row)
    }

    pub fn coleg(&self, b: BoxPos) -> Result<usize, Error> {
        self.check_box(b)?;
        Ok(b.row - 1)
    }

    fn check_box(&self, b: BoxPos) -> Result<(), Error> {
        if self.contains_box(b) {
            Ok(())
        } else {
            Err(Error::BoxOutside)
        }
    }

    /// Entrywise sum after zero-padding; the empty partition is the unit.
    pub fn oplus(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        let parts = (1..=len).map(|j| self.part(j) + other.part(j)).collect();
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    /// Compact form `[3,2,1]`, matching the JSON map keys used for
    /// symmetric-function coefficients.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "]")
    }
}

impl From<Vec<usize>> for Partition {
    fn from(parts: Vec<usize>) -> Self {
        Partition::new(parts)
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    rec(n, n.max(1), &mut current, &mut out);
    out
}

/// All nonempty partitions of size 1..=n, ordered by size then descending lex.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (1..=n).flat_map(partitions_of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[4, 2, 1]).conjugate().conjugate(), p(&[4, 2, 1]));
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[2, 2]).dominance_leq(&p(&[3, 1])).unwrap());
        assert!(!p(&[3, 1]).dominance_leq(&p(&[2, 2])).unwrap());
        assert!(p(&[1, 1, 1, 1]).dominance_leq(&p(&[4])).unwrap());
        assert_eq!(p(&[2]).dominance_leq(&p(&[1])), Err(Error::SizeMismatch));
    }

    #[test]
    fn arm_leg_examples() {
        let single = p(&[1]);
        let b = BoxPos::new(1, 1);
        assert_eq!(single.arm(b).unwrap(), 0);
        assert_eq!(single.coarm(b).unwrap(), 0);
        assert_eq!(single.leg(b).unwrap(), 0);
        assert_eq!(single.coleg(b).unwrap(), 0);

        let lam = p(&[3, 2]);
        let b = BoxPos::new(1, 1);
        assert_eq!(lam.arm(b).unwrap(), 2);
        assert_eq!(lam.leg(b).unwrap(), 1);
        let b = BoxPos::new(2, 2);
        assert_eq!(lam.arm(b).unwrap(), 0);
        assert_eq!(lam.coarm(b).unwrap(), 1);
        assert_eq!(lam.leg(b).unwrap(), 0);
        assert_eq!(lam.coleg(b).unwrap(), 1);

        assert_eq!(lam.arm(BoxPos::new(3, 2)), Err(Error::BoxOutside));
    }

    #[test]
    fn oplus_examples() {
        assert_eq!(p(&[1]).oplus(&p(&[1])), p(&[2]));
        assert_eq!(p(&[2, 1]).oplus(&p(&[1, 1])), p(&[3, 2]));
        assert_eq!(Partition::empty().oplus(&p(&[3])), p(&[3]));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(partitions_of(0).len(), 1);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(6).len(), 11);
        assert_eq!(partitions_of(7).len(), 15);
        // descending lex order
        let names: Vec<String> = partitions_of(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(names, ["[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"]);
    }

    #[test]
    fn reading_order_top_row_first() {
        let boxes = p(&[2, 1]).boxes_reading_order();
        assert_eq!(
            boxes,
            vec![BoxPos::new(1, 2), BoxPos::new(1, 1), BoxPos::new(2, 1)]
        );
    }

    #[test]
    fn n_stat_values() {
        assert_eq!(p(&[2, 2]).n_stat(), 2);
        assert_eq!(Partition::column(3).n_stat(), 3);
        assert_eq!(p(&[3]).n_stat(), 0);
    }
}
