//! G-parking functions and recurrent sandpile configurations.
//!
//! A parking function assigns a value below the escaping out-degree to some
//! vertex of every subset avoiding the root; its weight is
//! `#E - #V + 1 - sum f`. A sandpile configuration is recurrent when it is
//! stable and passes the burning criterion `u(i) >= sum_{j in U} e(i, j)`
//! on every subset. Degrees count loops once, which makes
//! `f(i) = deg(i) - u(i) - 1` an exact bijection onto parking functions;
//! the level constant carries a `+ #loops` correction so that the level
//! generating function matches the parking one on loopy graphs as well.

use num_bigint::BigInt;
use num_traits::One;

use crate::graphs::Multigraph;
use crate::poly::{Exp, MPoly};
use crate::Error;

/// Values on the non-root vertices, indexed by vertex label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParkingFunction {
    root: usize,
    values: Vec<(usize, usize)>,
}

impl ParkingFunction {
    pub fn value(&self, v: usize) -> Option<usize> {
        self.values.iter().find(|(w, _)| *w == v).map(|(_, x)| *x)
    }

    pub fn values(&self) -> &[(usize, usize)] {
        &self.values
    }

    pub fn total(&self) -> usize {
        self.values.iter().map(|(_, x)| x).sum()
    }

    /// `#E - #V + 1 - sum f`.
    pub fn weight(&self, g: &Multigraph) -> usize {
        g.edge_count() + 1 - g.vertex_count() - self.total()
    }
}

/// Chip counts on the non-root vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SandpileConfig {
    root: usize,
    chips: Vec<(usize, usize)>,
}

impl SandpileConfig {
    pub fn chips(&self) -> &[(usize, usize)] {
        &self.chips
    }

    pub fn chip_count(&self, v: usize) -> Option<usize> {
        self.chips.iter().find(|(w, _)| *w == v).map(|(_, x)| *x)
    }

    pub fn total(&self) -> usize {
        self.chips.iter().map(|(_, x)| x).sum()
    }

    /// The matching parking function `f(i) = deg(i) - u(i) - 1`.
    pub fn to_parking(&self, g: &Multigraph) -> ParkingFunction {
        ParkingFunction {
            root: self.root,
            values: self
                .chips
                .iter()
                .map(|&(v, u)| (v, g.degree(v) - u - 1))
                .collect(),
        }
    }
}

fn non_root_vertices(g: &Multigraph) -> Vec<usize> {
    (1..=g.vertex_count()).filter(|&v| v != g.root()).collect()
}

/// Iterate over nonempty subsets of `verts` as index masks.
fn subsets(verts: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (1u32..(1 << verts.len())).map(move |mask| {
        verts
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &v)| v)
            .collect()
    })
}

fn is_parking(g: &Multigraph, verts: &[usize], values: &[usize]) -> bool {
    for subset in subsets(verts) {
        let ok = subset.iter().any(|&i| {
            let outdeg: usize = (1..=g.vertex_count())
                .filter(|j| !subset.contains(j))
                .map(|j| if j == i { 0 } else { g.multiplicity(i, j) })
                .sum();
            let f = values[verts.iter().position(|&v| v == i).unwrap()];
            f < outdeg
        });
        if !ok {
            return false;
        }
    }
    true
}

/// All G-parking functions of a connected multigraph, deterministic order.
pub fn gparking_enumerate(g: &Multigraph) -> Result<Vec<ParkingFunction>, Error> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let verts = non_root_vertices(g);
    // f(i) < outdeg_{i}(i) bounds each value by the non-loop degree
    let bounds: Vec<usize> = verts
        .iter()
        .map(|&i| {
            (1..=g.vertex_count())
                .filter(|&j| j != i)
                .map(|j| g.multiplicity(i, j))
                .sum()
        })
        .collect();
    let mut out = Vec::new();
    let mut values = vec![0usize; verts.len()];
    loop {
        if is_parking(g, &verts, &values) {
            out.push(ParkingFunction {
                root: g.root(),
                values: verts.iter().copied().zip(values.iter().copied()).collect(),
            });
        }
        // odometer over the value box
        let mut k = verts.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if values[k] + 1 < bounds[k] {
                values[k] += 1;
                values[k + 1..].fill(0);
                break;
            }
        }
    }
}

/// `sum_f q^wt(f)` over all G-parking functions.
pub fn parking_gen(g: &Multigraph) -> Result<MPoly, Error> {
    let mut total = MPoly::zero();
    for f in gparking_enumerate(g)? {
        total.add_term(Exp::new(f.weight(g) as u32, 0, 0), &BigInt::one());
    }
    Ok(total)
}

/// Burning criterion: stable, and every nonempty subset of non-root
/// vertices has a member with `u(i) >= sum_{j in U} e(i, j)`.
pub fn dhar_check(g: &Multigraph, config: &SandpileConfig) -> bool {
    let verts = non_root_vertices(g);
    let chip = |v: usize| config.chip_count(v).unwrap_or(0);
    if verts.iter().any(|&v| chip(v) >= g.degree(v)) {
        return false;
    }
    for subset in subsets(&verts) {
        let ok = subset.iter().any(|&i| {
            let need: usize = subset.iter().map(|&j| g.multiplicity(i, j)).sum();
            chip(i) >= need
        });
        if !ok {
            return false;
        }
    }
    true
}

/// All recurrent configurations of the sandpile on `g`.
pub fn sandpile_recurrent(g: &Multigraph) -> Result<Vec<SandpileConfig>, Error> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let verts = non_root_vertices(g);
    let bounds: Vec<usize> = verts.iter().map(|&v| g.degree(v)).collect();
    let mut out = Vec::new();
    let mut chips = vec![0usize; verts.len()];
    loop {
        let config = SandpileConfig {
            root: g.root(),
            chips: verts.iter().copied().zip(chips.iter().copied()).collect(),
        };
        if dhar_check(g, &config) {
            out.push(config);
        }
        let mut k = verts.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            if chips[k] + 1 < bounds[k] {
                chips[k] += 1;
                chips[k + 1..].fill(0);
                break;
            }
        }
    }
}

/// `level(u) = sum u + deg(root) + #loops - #E`, aligned so that the level
/// generating function equals the parking one on loop-allowed graphs.
pub fn sandpile_level(g: &Multigraph, config: &SandpileConfig) -> usize {
    config.total() + g.degree(g.root()) + g.loop_count() - g.edge_count()
}

/// `sum_u q^level(u)` over recurrent configurations.
pub fn sandpile_level_gen(g: &Multigraph) -> Result<MPoly, Error> {
    let mut total = MPoly::zero();
    for u in sandpile_recurrent(g)? {
        total.add_term(Exp::new(sandpile_level(g, &u) as u32, 0, 0), &BigInt::one());
    }
    Ok(total)
}
