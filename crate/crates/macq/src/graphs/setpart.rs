//! Set partitions of `{0, .., n-1}`.

/// Disjoint nonempty blocks covering the ground set, each block sorted, and
/// blocks ordered by their smallest element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }
}

/// All set partitions of `{0, .., n-1}` in restricted-growth order; the
/// single empty partition for `n = 0`. Bell-number many.
pub fn set_partitions(n: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    let mut assignment = vec![0usize; n];
    fn rec(k: usize, max_used: usize, assignment: &mut Vec<usize>, out: &mut Vec<SetPartition>) {
        let n = assignment.len();
        if k == n {
            let blocks_count = max_used;
            let mut blocks = vec![Vec::new(); blocks_count];
            for (elem, &b) in assignment.iter().enumerate() {
                blocks[b].push(elem);
            }
            out.push(SetPartition { blocks });
            return;
        }
        for b in 0..=max_used {
            assignment[k] = b;
            rec(k + 1, max_used.max(b + 1), assignment, out);
        }
    }
    rec(0, 0, &mut assignment, &mut out);
    out
}
