//! Spanning trees, tree inversions and the kappa statistic, and the
//! increasing-tree polynomial.

use crate::graphs::Multigraph;
use crate::poly::MPoly;

/// A spanning tree of a simple graph, stored as a parent map toward the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    root: usize,
    /// `parent[v - 1]` is the parent of `v`; `None` only for the root.
    parent: Vec<Option<usize>>,
}

impl SpanningTree {
    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v - 1]
    }

    pub fn vertex_count(&self) -> usize {
        self.parent.len()
    }

    /// Tree edges as `(child, parent)` pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.parent.len())
            .filter_map(|v| self.parent(v).map(|p| (v, p)))
            .collect()
    }

    /// True when `a` lies on the path from `b` to the root, `a != b`.
    pub fn is_ancestor_of(&self, a: usize, b: usize) -> bool {
        let mut v = b;
        while let Some(p) = self.parent(v) {
            if p == a {
                return true;
            }
            v = p;
        }
        false
    }

    /// Descendants of `v` including `v` itself.
    pub fn subtree(&self, v: usize) -> Vec<usize> {
        (1..=self.parent.len())
            .filter(|&w| w == v || self.is_ancestor_of(v, w))
            .collect()
    }
}

/// Every spanning tree of the simplification of `g`, in a deterministic
/// order; empty when the graph is disconnected.
pub fn spanning_trees(g: &Multigraph) -> Vec<SpanningTree> {
    let simple = g.simplify();
    let n = simple.vertex_count();
    let edges = simple.edges();
    if n == 1 {
        return vec![SpanningTree {
            root: simple.root(),
            parent: vec![None],
        }];
    }
    if edges.len() < n - 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut choice: Vec<usize> = Vec::with_capacity(n - 1);
    enumerate_subsets(edges, n, &mut choice, 0, &mut out, simple.root());
    out
}

fn enumerate_subsets(
    edges: &[(usize, usize)],
    n: usize,
    choice: &mut Vec<usize>,
    from: usize,
    out: &mut Vec<SpanningTree>,
    root: usize,
) {
    if choice.len() == n - 1 {
        if let Some(tree) = build_tree(edges, choice, n, root) {
            out.push(tree);
        }
        return;
    }
    let needed = n - 1 - choice.len();
    for k in from..=edges.len().saturating_sub(needed) {
        choice.push(k);
        enumerate_subsets(edges, n, choice, k + 1, out, root);
        choice.pop();
    }
}

fn build_tree(
    edges: &[(usize, usize)],
    choice: &[usize],
    n: usize,
    root: usize,
) -> Option<SpanningTree> {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &k in choice {
        let (a, b) = edges[k];
        adj[a - 1].push(b);
        adj[b - 1].push(a);
    }
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    let mut stack = vec![root];
    seen[root - 1] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v - 1] {
            if !seen[w - 1] {
                seen[w - 1] = true;
                parent[w - 1] = Some(v);
                count += 1;
                stack.push(w);
            }
        }
    }
    (count == n).then_some(SpanningTree { root, parent })
}

/// The kappa statistic of a spanning tree of the simplification of `g`:
/// the sum of `e(parent(i), j)` over pairs `(i, j)` avoiding the root with
/// `i` an ancestor of `j`, `i > j`, and `j` adjacent to `parent(i)` in `g`.
pub fn kappa_statistic(tree: &SpanningTree, g: &Multigraph) -> usize {
    let root = tree.root();
    let n = tree.vertex_count();
    let mut total = 0;
    for i in 1..=n {
        if i == root {
            continue;
        }
        let Some(pi) = tree.parent(i) else { continue };
        for j in 1..i {
            if j == root || !tree.is_ancestor_of(i, j) {
                continue;
            }
            total += g.multiplicity(pi, j);
        }
    }
    total
}

/// Parent arrays of every tree on `[n]` rooted at 1 with all ancestors
/// smaller than their descendants (`parents[v - 2]` is the parent of `v`).
pub fn increasing_trees(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut parents = vec![0usize; n.saturating_sub(1)];
    fn rec(v: usize, n: usize, parents: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if v > n {
            out.push(parents.clone());
            return;
        }
        for p in 1..v {
            parents[v - 2] = p;
            rec(v + 1, n, parents, out);
        }
    }
    rec(2, n, &mut parents, &mut out);
    out
}

/// The polynomial summing, over increasing trees on `[n]` with
/// `n = weights.len() + 1`, the product over non-root vertices `i` of
/// `[delta(i)]_q`, where `delta(i)` adds `weights` over the subtree of `i`
/// and `weights[k]` belongs to vertex `k + 2`.
pub fn increasing_tree_poly(weights: &[usize]) -> MPoly {
    let n = weights.len() + 1;
    let mut total = MPoly::zero();
    for parents in increasing_trees(n) {
        // subtree sums; children always have larger labels than parents
        let mut subtree: Vec<usize> = (2..=n).map(|v| weights[v - 2]).collect();
        for v in (2..=n).rev() {
            let p = parents[v - 2];
            if p >= 2 {
                subtree[p - 2] += subtree[v - 2];
            }
        }
        let mut term = MPoly::one();
        for v in 2..=n {
            term = &term * &MPoly::qint(subtree[v - 2]);
        }
        total = &total + &term;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spanning_tree_counts() {
        assert_eq!(spanning_trees(&Multigraph::complete(2)).len(), 1);
        assert_eq!(spanning_trees(&Multigraph::complete(3)).len(), 3);
        assert_eq!(spanning_trees(&Multigraph::complete(4)).len(), 16);
        let disconnected = Multigraph::new(2, &[]).unwrap();
        assert!(spanning_trees(&disconnected).is_empty());
        // multiplicities collapse before enumeration
        let dipole = Multigraph::new(2, &[(1, 2), (1, 2), (1, 2)]).unwrap();
        assert_eq!(spanning_trees(&dipole).len(), 1);
    }

    #[test]
    fn kappa_examples() {
        let k3 = Multigraph::complete(3);
        let trees = spanning_trees(&k3);
        // the star rooted at 1 has no inversions
        let star = trees
            .iter()
            .find(|t| t.parent(2) == Some(1) && t.parent(3) == Some(1))
            .unwrap();
        assert_eq!(kappa_statistic(star, &k3), 0);
        // path 1 - 3 - 2: inversion (3, 2) with parent(3) = 1 adjacent to 2
        let path = trees
            .iter()
            .find(|t| t.parent(3) == Some(1) && t.parent(2) == Some(3))
            .unwrap();
        assert_eq!(kappa_statistic(path, &k3), 1);
        // same path in the graph missing the edge {1, 2}
        let sparse = Multigraph::new(3, &[(1, 3), (2, 3)]).unwrap();
        let trees = spanning_trees(&sparse);
        let path = trees
            .iter()
            .find(|t| t.parent(3) == Some(1) && t.parent(2) == Some(3))
            .unwrap();
        assert_eq!(kappa_statistic(path, &sparse), 0);
    }

    #[test]
    fn subtree_and_ancestors() {
        let g = Multigraph::new(4, &[(1, 3), (3, 2), (3, 4)]).unwrap();
        let tree = &spanning_trees(&g)[0];
        assert!(tree.is_ancestor_of(1, 2));
        assert!(tree.is_ancestor_of(3, 4));
        assert!(!tree.is_ancestor_of(2, 4));
        let mut sub = tree.subtree(3);
        sub.sort_unstable();
        assert_eq!(sub, vec![2, 3, 4]);
    }

    #[test]
    fn increasing_tree_counts() {
        assert_eq!(increasing_trees(1).len(), 1);
        assert_eq!(increasing_trees(2).len(), 1);
        assert_eq!(increasing_trees(3).len(), 2);
        assert_eq!(increasing_trees(4).len(), 6);
    }

    #[test]
    fn increasing_tree_poly_examples() {
        assert_eq!(increasing_tree_poly(&[1]), MPoly::one());
        assert_eq!(increasing_tree_poly(&[2]), MPoly::qint(2));
        // star gives [1][1] = 1, chain gives [1][2]: total 2 + q
        let expect = &MPoly::constant(2) + &MPoly::q();
        assert_eq!(increasing_tree_poly(&[1, 1]), expect);
        // no weights: the single-vertex tree contributes the empty product
        assert_eq!(increasing_tree_poly(&[]), MPoly::one());
    }
}
