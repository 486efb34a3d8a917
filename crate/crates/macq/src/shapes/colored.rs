//! Column-colored sums of partitions.
//!
//! The diagram of an entrywise sum of partitions is rebuilt by sorting all
//! source columns by weakly decreasing height; equal heights keep the source
//! order (columns of the first partition first). Every column remembers the
//! partition and the column it came from, which identifies each box of the
//! sum with a box of one source diagram and makes fillings of the sum
//! splittable into fillings of the partial sums.

use crate::shapes::{BoxPos, Filling, Partition};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Column {
    height: usize,
    /// Color label, 1-based within the original family.
    color: usize,
    /// 1-based column index within the source partition.
    source_col: usize,
}

/// The Young diagram of an entrywise sum of partitions together with its
/// column coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredDiagram {
    /// Color labels of the sources, ascending.
    labels: Vec<usize>,
    /// Source partitions, parallel to `labels`.
    sources: Vec<Partition>,
    shape: Partition,
    columns: Vec<Column>,
}

/// Color the diagram of the entrywise sum of the given partitions by
/// `1..=parts.len()`.
pub fn color_sum(parts: &[Partition]) -> ColoredDiagram {
    assert!(!parts.is_empty(), "need at least one partition");
    let labels: Vec<usize> = (1..=parts.len()).collect();
    ColoredDiagram::build(&labels, parts)
}

impl ColoredDiagram {
    fn build(labels: &[usize], sources: &[Partition]) -> Self {
        let mut columns = Vec::new();
        for (label, p) in labels.iter().zip(sources) {
            for i in 1..=p.part(1) {
                columns.push(Column {
                    height: p.column_height(i),
                    color: *label,
                    source_col: i,
                });
            }
        }
        // decreasing height; ties keep source order, so this sort is stable
        columns.sort_by(|a, b| b.height.cmp(&a.height).then(a.color.cmp(&b.color)));
        let shape = Partition::new(
            columns
                .iter()
                .map(|c| c.height)
                .collect::<Vec<_>>(),
        )
        .conjugate();
        let expected = sources
            .iter()
            .fold(Partition::empty(), |acc, p| acc.oplus(p));
        debug_assert_eq!(shape, expected);
        ColoredDiagram {
            labels: labels.to_vec(),
            sources: sources.to_vec(),
            shape,
            columns,
        }
    }

    pub fn num_colors(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn sources(&self) -> &[Partition] {
        &self.sources
    }

    pub fn source_of(&self, label: usize) -> Option<&Partition> {
        self.labels
            .iter()
            .position(|&l| l == label)
            .map(|k| &self.sources[k])
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Color of a column, 1-based.
    pub fn column_color(&self, col: usize) -> usize {
        self.columns[col - 1].color
    }

    /// Index of the source column a column came from, 1-based.
    pub fn column_back_index(&self, col: usize) -> usize {
        self.columns[col - 1].source_col
    }

    pub fn box_color(&self, b: BoxPos) -> usize {
        self.column_color(b.col)
    }

    /// The colored diagram of the partial sum over a block of color labels.
    /// Labels keep their original values.
    pub fn sub_diagram(&self, block: &[usize]) -> ColoredDiagram {
        let mut block: Vec<usize> = block.to_vec();
        block.sort_unstable();
        block.dedup();
        let sources: Vec<Partition> = block
            .iter()
            .map(|l| self.source_of(*l).expect("label not in diagram").clone())
            .collect();
        ColoredDiagram::build(&block, &sources)
    }

    /// Column of this diagram holding the `source_col`-th column of source
    /// `label`, 1-based.
    pub fn column_of(&self, label: usize, source_col: usize) -> Option<usize> {
        self.columns
            .iter()
            .position(|c| c.color == label && c.source_col == source_col)
            .map(|k| k + 1)
    }
}

/// Split a filling of the full colored diagram into the fillings of the
/// partial sums over the blocks of a set partition of the color labels.
/// Blocks are returned in the order given.
pub fn split_filling(
    diagram: &ColoredDiagram,
    filling: &Filling,
    blocks: &[Vec<usize>],
) -> Result<Vec<(ColoredDiagram, Filling)>, Error> {
    if filling.shape() != diagram.shape() {
        return Err(Error::Invalid("filling shape does not match diagram".into()));
    }
    let mut out = Vec::with_capacity(blocks.len());
    for block in blocks {
        let sub = diagram.sub_diagram(block);
        let mut rows: Vec<Vec<u32>> = sub
            .shape()
            .parts()
            .iter()
            .map(|&len| vec![0; len])
            .collect();
        for (col_idx, col) in sub.columns.iter().enumerate() {
            let big_col = diagram
                .column_of(col.color, col.source_col)
                .ok_or(Error::BoxOutside)?;
            debug_assert_eq!(diagram.columns[big_col - 1].height, col.height);
            for row in 1..=col.height {
                rows[row - 1][col_idx] = filling.entry(BoxPos::new(big_col, row));
            }
        }
        let sub_filling = Filling::new(sub.shape().clone(), rows)?;
        out.push((sub, sub_filling));
    }
    Ok(out)
}

/// Inverse of [`split_filling`]: reassemble a filling of the full diagram
/// from fillings of the blocks.
pub fn merge_fillings(
    diagram: &ColoredDiagram,
    pieces: &[(ColoredDiagram, Filling)],
) -> Result<Filling, Error> {
    let shape = diagram.shape().clone();
    let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&len| vec![0; len]).collect();
    for (sub, filling) in pieces {
        if filling.shape() != sub.shape() {
            return Err(Error::Invalid("piece shape mismatch".into()));
        }
        for (col_idx, col) in sub.columns.iter().enumerate() {
            let big_col = diagram
                .column_of(col.color, col.source_col)
                .ok_or(Error::BoxOutside)?;
            for row in 1..=col.height {
                rows[row - 1][big_col - 1] = filling.entry(BoxPos::new(col_idx + 1, row));
            }
        }
    }
    if rows.iter().flatten().any(|&e| e == 0) {
        return Err(Error::Invalid("blocks do not cover the diagram".into()));
    }
    Filling::new(shape, rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::enumerate_fillings;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn two_single_boxes() {
        let d = color_sum(&[p(&[1]), p(&[1])]);
        assert_eq!(d.shape(), &p(&[2]));
        assert_eq!(d.column_color(1), 1);
        assert_eq!(d.column_color(2), 2);
    }

    #[test]
    fn equal_height_ties_keep_source_order() {
        let d = color_sum(&[p(&[2]), p(&[1])]);
        assert_eq!(d.shape(), &p(&[3]));
        assert_eq!(
            (1..=3).map(|c| d.column_color(c)).collect::<Vec<_>>(),
            vec![1, 1, 2]
        );
    }

    #[test]
    fn three_partition_coloring() {
        // sources with a height tie between the last column of source 1 and
        // of source 2: source 1 must come first
        let l1 = p(&[4, 4, 3, 3, 2]);
        let l2 = p(&[3, 3, 2, 2, 1]);
        let l3 = p(&[4, 3, 3, 2, 1]);
        let d = color_sum(&[l1, l2, l3]);
        assert_eq!(d.shape(), &p(&[11, 10, 8, 7, 4]));
        let colors: Vec<usize> = (1..=11).map(|c| d.column_color(c)).collect();
        assert_eq!(colors, vec![1, 1, 2, 3, 1, 2, 3, 3, 1, 2, 3]);
        let back: Vec<usize> = (1..=11).map(|c| d.column_back_index(c)).collect();
        assert_eq!(back, vec![1, 2, 1, 1, 3, 2, 2, 3, 4, 3, 4]);
    }

    #[test]
    fn coloring_preserves_legs_and_colegs() {
        let sources = [p(&[3, 1]), p(&[2, 2]), p(&[1, 1, 1])];
        let d = color_sum(&sources);
        for col in 1..=d.shape().part(1) {
            let label = d.column_color(col);
            let src = d.source_of(label).unwrap();
            let src_col = d.column_back_index(col);
            for row in 1..=d.columns[col - 1].height {
                let big = BoxPos::new(col, row);
                let small = BoxPos::new(src_col, row);
                assert_eq!(d.shape().leg(big).unwrap(), src.leg(small).unwrap());
                assert_eq!(d.shape().coleg(big).unwrap(), src.coleg(small).unwrap());
            }
        }
    }

    #[test]
    fn inv_decomposition_constant() {
        // single row (1,1,2,1) with columns colored (1,2,3,3): the block
        // inversion count decomposes with multiplier #B - 2, not #B - 1
        let d = color_sum(&[p(&[1]), p(&[1]), p(&[2])]);
        let f = Filling::new(p(&[4]), vec![vec![1, 1, 2, 1]]).unwrap();
        let inv_of = |block: &[usize]| -> i64 {
            let pieces = split_filling(&d, &f, &[block.to_vec()]).unwrap();
            pieces[0].1.inv() as i64
        };
        let singles = inv_of(&[1]) + inv_of(&[2]) + inv_of(&[3]);
        let pairs = inv_of(&[1, 2]) + inv_of(&[1, 3]) + inv_of(&[2, 3]);
        assert_eq!(inv_of(&[1, 2, 3]), 1);
        assert_eq!(singles, 1);
        assert_eq!(pairs, 2);
        assert_eq!(inv_of(&[1, 2, 3]), pairs - singles);
        assert_ne!(inv_of(&[1, 2, 3]), pairs - (3 - 1) * singles);
    }

    #[test]
    fn split_merge_roundtrip() {
        let sources = [p(&[2, 1]), p(&[1, 1]), p(&[2])];
        let d = color_sum(&sources);
        let blocks_list: Vec<Vec<Vec<usize>>> = vec![
            vec![vec![1, 2, 3]],
            vec![vec![1], vec![2], vec![3]],
            vec![vec![1, 3], vec![2]],
            vec![vec![2, 3], vec![1]],
        ];
        for f in enumerate_fillings(d.shape(), 3).take(200) {
            for blocks in &blocks_list {
                let pieces = split_filling(&d, &f, blocks).unwrap();
                let merged = merge_fillings(&d, &pieces).unwrap();
                assert_eq!(merged, f);
            }
        }
    }

    #[test]
    fn trivial_split_is_identity() {
        let sources = [p(&[2]), p(&[1, 1])];
        let d = color_sum(&sources);
        let f = enumerate_fillings(d.shape(), 2).nth(7).unwrap();
        let pieces = split_filling(&d, &f, &[vec![1, 2]]).unwrap();
        assert_eq!(pieces.len(), 1);
        assert_eq!(pieces[0].1, f);
    }

    #[test]
    fn split_of_large_example() {
        let l1 = p(&[4, 4, 3, 3, 2]);
        let l2 = p(&[3, 3, 2, 2, 1]);
        let l3 = p(&[4, 3, 3, 2, 1]);
        let d = color_sum(&[l1.clone(), l2.clone(), l3.clone()]);
        let f = Filling::new(
            d.shape().clone(),
            vec![
                vec![1, 2, 10, 11, 2, 4, 6, 12, 14, 11, 13],
                vec![2, 4, 3, 1, 8, 10, 7, 8, 9, 9],
                vec![6, 7, 4, 10, 9, 9, 13, 13],
                vec![1, 1, 1, 11, 5, 8, 9],
                vec![9, 9, 4, 9],
            ],
        )
        .unwrap();
        let pieces =
            split_filling(&d, &f, &[vec![1], vec![2], vec![3]]).unwrap();
        assert_eq!(pieces[0].0.shape(), &l1);
        assert_eq!(pieces[1].0.shape(), &l2);
        assert_eq!(pieces[2].0.shape(), &l3);
        let rows1: Vec<Vec<u32>> = vec![
            vec![1, 2, 2, 14],
            vec![2, 4, 8, 9],
            vec![6, 7, 9],
            vec![1, 1, 5],
            vec![9, 9],
        ];
        let rows2: Vec<Vec<u32>> = vec![
            vec![10, 4, 11],
            vec![3, 10, 9],
            vec![4, 9],
            vec![1, 8],
            vec![4],
        ];
        let rows3: Vec<Vec<u32>> = vec![
            vec![11, 6, 12, 13],
            vec![1, 7, 8],
            vec![10, 13, 13],
            vec![11, 9],
            vec![9],
        ];
        assert_eq!(pieces[0].1.rows(), &rows1[..]);
        assert_eq!(pieces[1].1.rows(), &rows2[..]);
        assert_eq!(pieces[2].1.rows(), &rows3[..]);

        // major index is additive over the blocks
        let total: usize = pieces.iter().map(|(_, f)| f.maj()).sum();
        assert_eq!(total, f.maj());
    }
}
