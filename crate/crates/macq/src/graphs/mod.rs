//! Loop-allowed multigraphs on labeled vertices and the polynomial
//! invariants built on them: spanning-tree enumeration, the G-inversion
//! polynomial in its four equivalent forms, G-parking functions, the abelian
//! sandpile model, set partitions, and increasing-tree polynomials.

mod invpoly;
mod parking;
mod setpart;
mod trees;

pub use invpoly::{
    connected_subgraph_gen, inversion_poly, inversion_poly_recursive, recursion_identity_holds,
    tutte, tutte_at, tutte_cumulant_form, TuttePoly,
};
pub use parking::{
    dhar_check, gparking_enumerate, parking_gen, sandpile_level, sandpile_level_gen,
    sandpile_recurrent, ParkingFunction, SandpileConfig,
};
pub use setpart::{set_partitions, SetPartition};
pub use trees::{increasing_tree_poly, increasing_trees, kappa_statistic, spanning_trees, SpanningTree};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::Error;

/// A multigraph on vertices `1..=vertex_count` with loops allowed, plus a
/// distinguished root (the smallest label unless overridden).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    vertex_count: usize,
    root: usize,
    /// Unordered edges stored as `(min, max)`, sorted; a pair `(i, i)` is a loop.
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        Self::with_root(vertex_count, edges, 1)
    }

    pub fn with_root(
        vertex_count: usize,
        edges: &[(usize, usize)],
        root: usize,
    ) -> Result<Self, Error> {
        if vertex_count == 0 {
            return Err(Error::Invalid("graph needs at least one vertex".into()));
        }
        if root < 1 || root > vertex_count {
            return Err(Error::Invalid("root outside the vertex range".into()));
        }
        let mut canon = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a < 1 || a > vertex_count || b < 1 || b > vertex_count {
                return Err(Error::Invalid(format!(
                    "edge ({a},{b}) outside vertices 1..={vertex_count}"
                )));
            }
            canon.push((a.min(b), a.max(b)));
        }
        canon.sort_unstable();
        Ok(Multigraph {
            vertex_count,
            root,
            edges: canon,
        })
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                edges.push((i, j));
            }
        }
        Multigraph::new(n, &edges).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Multiplicity of the edge `{i, j}`; for `i = j` the number of loops at `i`.
    pub fn multiplicity(&self, i: usize, j: usize) -> usize {
        let key = (i.min(j), i.max(j));
        self.edges.iter().filter(|&&e| e == key).count()
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(a, b)| a == b).count()
    }

    pub fn loops_at(&self, v: usize) -> usize {
        self.multiplicity(v, v)
    }

    /// Degree with every loop counted once: `sum_j e(i, j)`.
    pub fn degree(&self, i: usize) -> usize {
        (1..=self.vertex_count).map(|j| self.multiplicity(i, j)).sum()
    }

    /// Loops removed and multiplicities collapsed to one.
    pub fn simplify(&self) -> Multigraph {
        let mut simple: Vec<(usize, usize)> = self
            .edges
            .iter()
            .copied()
            .filter(|(a, b)| a != b)
            .collect();
        simple.dedup();
        Multigraph {
            vertex_count: self.vertex_count,
            root: self.root,
            edges: simple,
        }
    }

    pub fn is_connected(&self) -> bool {
        let mut dsu = Dsu::new(self.vertex_count);
        for &(a, b) in &self.edges {
            dsu.union(a - 1, b - 1);
        }
        (1..self.vertex_count).all(|v| dsu.find(v) == dsu.find(0))
    }

    /// Number of connected components induced by an edge subset, isolated
    /// vertices included.
    pub fn component_count(&self, edge_subset: &[usize]) -> usize {
        let mut dsu = Dsu::new(self.vertex_count);
        for &k in edge_subset {
            let (a, b) = self.edges[k];
            dsu.union(a - 1, b - 1);
        }
        dsu.component_count()
    }

    /// Sub-multigraph induced on a set of vertices, relabeled `1..=|block|`
    /// in increasing order of the original labels.
    pub fn induced(&self, block: &[usize]) -> Multigraph {
        let mut verts: Vec<usize> = block.to_vec();
        verts.sort_unstable();
        verts.dedup();
        let pos = |v: usize| verts.iter().position(|&w| w == v);
        let mut edges = Vec::new();
        for &(a, b) in &self.edges {
            if let (Some(i), Some(j)) = (pos(a), pos(b)) {
                edges.push((i + 1, j + 1));
            }
        }
        Multigraph::new(verts.len().max(1), &edges).unwrap()
    }

    /// Relabel vertices by a permutation given as `perm[old - 1] = new`.
    /// The root moves with the permutation.
    pub fn relabel(&self, perm: &[usize]) -> Result<Multigraph, Error> {
        if perm.len() != self.vertex_count {
            return Err(Error::Invalid("permutation length mismatch".into()));
        }
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(a, b)| (perm[a - 1], perm[b - 1]))
            .collect();
        Multigraph::with_root(self.vertex_count, &edges, perm[self.root - 1])
    }

    /// Number of edges joining `w` to some vertex of `block` (loops at `w`
    /// never count).
    pub fn edges_to_block(&self, block: &[usize], w: usize) -> usize {
        block
            .iter()
            .filter(|&&b| b != w)
            .map(|&b| self.multiplicity(w, b))
            .sum()
    }
}

impl fmt::Display for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "graph on {} vertices, root {}, edges {:?}",
            self.vertex_count, self.root, self.edges
        )
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    root: Option<usize>,
}

impl Serialize for Multigraph {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        GraphJson {
            vertices: self.vertex_count,
            edges: self.edges.clone(),
            root: (self.root != 1).then_some(self.root),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Multigraph {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let raw = GraphJson::deserialize(de)?;
        Multigraph::with_root(raw.vertices, &raw.edges, raw.root.unwrap_or(1))
            .map_err(serde::de::Error::custom)
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, v: usize) -> usize {
        if self.parent[v] != v {
            let root = self.find(self.parent[v]);
            self.parent[v] = root;
        }
        self.parent[v]
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }

    fn component_count(&mut self) -> usize {
        (0..self.parent.len())
            .map(|v| self.find(v))
            .collect::<std::collections::BTreeSet<_>>()
            .len()
    }
}
