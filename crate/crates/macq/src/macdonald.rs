//! Macdonald polynomials and their joint cumulants.
//!
//! The transformed Macdonald polynomial is defined here by the filling
//! formula `H(lambda) = sum_sigma q^inv(sigma) t^maj(sigma) x^sigma`. The
//! cumulant of a tuple of partitions is computed on two independent routes:
//!
//! - [`cumulant_by_definition`]: the alternating sum over set partitions of
//!   the tuple of products of Macdonald polynomials of the partial entrywise
//!   sums, divided by `(q - 1)^(r - 1)`; the products are expanded through
//!   the split/merge correspondence of fillings rather than generic
//!   multiplication, so every filling of the full diagram is visited once.
//! - [`cumulant_combinatorial`]: one sweep over fillings of the full colored
//!   diagram, attaching to each filling the inversion polynomial of the
//!   multigraph its inversion pairs draw on the colors.
//!
//! Equality of the two routes is the central identity of the crate and is
//! enforced by the acceptance suite, never assumed. The module also houses
//! the quasisymmetric expansion, hook q,t-Kostka coefficients, fully colored
//! Macdonald polynomials, the signed-filling plethysm formula, and the
//! triangularity axioms that characterize the polynomials.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::graphs::{inversion_poly, set_partitions, Multigraph};
use crate::poly::{Exp, MPoly};
use crate::shapes::{
    color_sum, ides, standard_fillings, BoxPos, ColoredDiagram, Filling,
    ShapeTables, SuperFilling, SuperOrder,
};
use crate::symfunc::{
    plethysm_x_qminus1, plethysm_x_tminus1, Basis, QSymExpansion, SymFunc,
};
use crate::Error;

/// A tuple of partitions together with the colored diagram of their
/// entrywise sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CumulantProblem {
    partitions: Vec<Partition>,
    colored: ColoredDiagram,
}

use crate::shapes::Partition;

impl CumulantProblem {
    pub fn new(partitions: Vec<Partition>) -> Result<Self, Error> {
        if partitions.is_empty() {
            return Err(Error::Invalid("need at least one partition".into()));
        }
        let colored = color_sum(&partitions);
        Ok(CumulantProblem {
            partitions,
            colored,
        })
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn colored(&self) -> &ColoredDiagram {
        &self.colored
    }

    pub fn shape(&self) -> &Partition {
        self.colored.shape()
    }

    /// Total number of boxes.
    pub fn degree(&self) -> usize {
        self.shape().size()
    }

    /// Number of colors `r`.
    pub fn color_count(&self) -> usize {
        self.partitions.len()
    }
}

/// The transformed Macdonald polynomial by the filling formula, read into
/// the monomial basis. Entries are truncated to `1..=n`, which determines
/// the degree-n function completely.
pub fn haglund(lambda: &Partition) -> SymFunc {
    let n = lambda.size();
    if n == 0 {
        return SymFunc::unit(Basis::Monomial);
    }
    let tables = ShapeTables::new(lambda);
    let total = tables.filling_count(n);
    let map = (0..total)
        .into_par_iter()
        .fold(
            || (MonomialMap::new(), Vec::new()),
            |(mut map, mut buf), idx| {
                tables.decode(n, idx, &mut buf);
                let stats = tables.stats(&buf);
                map.add(
                    content_key(&buf, n),
                    MPoly::monomial(
                        Exp::new(stats.invp.len() as u32, stats.maj as u32, 0),
                        BigInt::one(),
                    ),
                );
                (map, buf)
            },
        )
        .map(|(map, _)| map)
        .reduce(MonomialMap::new, MonomialMap::merge);
    map.into_symfunc(n)
}

/// The multigraph a filling of the colored diagram draws on the colors: one
/// edge per inversion pair, joining the colors of its two boxes.
pub fn build_graph(problem: &CumulantProblem, filling: &Filling) -> Multigraph {
    let r = problem.color_count();
    let diagram = problem.colored();
    let mut edges = Vec::new();
    for (b1, b2) in filling.inversion_pairs() {
        edges.push((diagram.box_color(b1), diagram.box_color(b2)));
    }
    Multigraph::new(r, &edges).unwrap()
}

/// Same construction from the signed inversion pairs of a super filling.
pub fn build_graph_super(
    problem: &CumulantProblem,
    filling: &SuperFilling,
    order: SuperOrder,
) -> Multigraph {
    let r = problem.color_count();
    let diagram = problem.colored();
    let stats = crate::shapes::super_stats(filling, order);
    let mut edges = Vec::new();
    for (b1, b2) in stats.inversion_pairs {
        edges.push((diagram.box_color(b1), diagram.box_color(b2)));
    }
    Multigraph::new(r, &edges).unwrap()
}

/// Shared sweep scaffolding for the colored diagram of a problem.
struct ColoredSweep {
    tables: ShapeTables,
    /// Color pair of every row pair, as a slot into the edge vector.
    pair_slot: Vec<usize>,
    /// All unordered color pairs `(i <= j)`, indexing the edge vector.
    slots: Vec<(usize, usize)>,
    r: usize,
}

impl ColoredSweep {
    fn new(problem: &CumulantProblem) -> Self {
        let diagram = problem.colored();
        let tables = ShapeTables::new(problem.shape());
        let r = problem.color_count();
        let mut slots = Vec::new();
        for i in 1..=r {
            for j in i..=r {
                slots.push((i, j));
            }
        }
        let slot_of = |a: usize, b: usize| {
            let key = (a.min(b), a.max(b));
            slots.iter().position(|&s| s == key).unwrap()
        };
        let boxes = tables.boxes();
        let pair_slot = tables
            .row_pairs()
            .iter()
            .map(|&(k1, k2, _)| {
                slot_of(
                    diagram.box_color(boxes[k1]),
                    diagram.box_color(boxes[k2]),
                )
            })
            .collect();
        ColoredSweep {
            tables,
            pair_slot,
            slots,
            r,
        }
    }

    fn graph_from_edge_vector(&self, ev: &[u8]) -> Multigraph {
        let mut edges = Vec::new();
        for (slot, &count) in ev.iter().enumerate() {
            let (i, j) = self.slots[slot];
            for _ in 0..count {
                edges.push((i, j));
            }
        }
        Multigraph::new(self.r, &edges).unwrap()
    }
}

/// Coefficient map keyed by exponent vectors of `x^sigma`, merged across
/// the parallel sweep.
struct MonomialMap {
    map: BTreeMap<Vec<u32>, MPoly>,
}

impl MonomialMap {
    fn new() -> Self {
        MonomialMap {
            map: BTreeMap::new(),
        }
    }

    fn add(&mut self, key: Vec<u32>, value: MPoly) {
        if value.is_zero() {
            return;
        }
        let entry = self.map.entry(key.clone()).or_insert_with(MPoly::zero);
        *entry += &value;
        if entry.is_zero() {
            self.map.remove(&key);
        }
    }

    fn merge(mut a: Self, b: Self) -> Self {
        for (k, v) in b.map {
            a.add(k, v);
        }
        a
    }

    /// Read off the monomial-basis coefficients, insisting the accumulated
    /// polynomial really is symmetric.
    fn into_symfunc(self, degree: usize) -> SymFunc {
        let mut exp = crate::symfunc::Expansion::zero(degree.max(1));
        for (k, v) in self.map {
            let key = if degree == 0 { vec![0] } else { k };
            exp.add_term(key, v);
        }
        exp.to_symfunc()
            .expect("filling sweep must produce a symmetric function")
    }
}

fn content_key(entries: &[u32], n: usize) -> Vec<u32> {
    let mut c = vec![0u32; n];
    for &e in entries {
        c[(e - 1) as usize] += 1;
    }
    c
}

/// Main combinatorial route:
/// `sum_sigma I(G^sigma)(q) t^maj(sigma) x^sigma` over fillings of the
/// colored diagram with entries up to the degree. Disconnected graphs
/// contribute zero through their inversion polynomial.
pub fn cumulant_combinatorial(problem: &CumulantProblem) -> SymFunc {
    let n = problem.degree();
    if n == 0 {
        // the empty diagram has one empty filling; its graph is edgeless
        let g = Multigraph::new(problem.color_count(), &[]).unwrap();
        return SymFunc::unit(Basis::Monomial).scale(&inversion_poly(&g));
    }
    let sweep = ColoredSweep::new(problem);
    let total = sweep.tables.filling_count(n);
    let slots = sweep.slots.len();
    let map = (0..total)
        .into_par_iter()
        .fold(
            || (MonomialMap::new(), HashMap::<Vec<u8>, MPoly>::new(), Vec::new()),
            |(mut map, mut memo, mut buf), idx| {
                sweep.tables.decode(n, idx, &mut buf);
                let maj = sweep.tables.maj_of(&buf);
                let mut ev = vec![0u8; slots];
                sweep
                    .tables
                    .for_each_invp(&buf, |pair| ev[sweep.pair_slot[pair]] += 1);
                let ipoly = memo
                    .entry(ev)
                    .or_insert_with_key(|ev| inversion_poly(&sweep.graph_from_edge_vector(ev)));
                if !ipoly.is_zero() {
                    let term = ipoly.mul_monomial(Exp::new(0, maj as u32, 0), &BigInt::one());
                    map.add(content_key(&buf, n), term);
                }
                (map, memo, buf)
            },
        )
        .map(|(map, _, _)| map)
        .reduce(MonomialMap::new, MonomialMap::merge);
    map.into_symfunc(n)
}

/// Per-block extraction tables: positions of the block diagram's boxes
/// inside the full reading order.
pub(crate) struct BlockTables {
    tables: ShapeTables,
    positions: Vec<usize>,
}

/// Tables for every nonempty subset of colors, indexed by bitmask minus one.
pub(crate) fn block_tables_for(problem: &CumulantProblem) -> Vec<BlockTables> {
    let r = problem.color_count();
    (1u32..(1 << r))
        .map(|mask| {
            let block: Vec<usize> = (0..r)
                .filter(|k| mask >> k & 1 == 1)
                .map(|k| k + 1)
                .collect();
            BlockTables::new(problem, &block)
        })
        .collect()
}

impl BlockTables {
    fn new(problem: &CumulantProblem, block: &[usize]) -> Self {
        let diagram = problem.colored();
        let sub = diagram.sub_diagram(block);
        let full_tables = ShapeTables::new(problem.shape());
        let full_index: HashMap<BoxPos, usize> = full_tables
            .boxes()
            .iter()
            .enumerate()
            .map(|(k, &b)| (b, k))
            .collect();
        let tables = ShapeTables::new(sub.shape());
        let positions = tables
            .boxes()
            .iter()
            .map(|b| {
                let color = sub.column_color(b.col);
                let source_col = sub.column_back_index(b.col);
                let big_col = diagram.column_of(color, source_col).unwrap();
                full_index[&BoxPos::new(big_col, b.row)]
            })
            .collect();
        BlockTables { tables, positions }
    }

    /// `maj` and `#InvP` of the block filling extracted from full entries.
    pub(crate) fn stats(&self, entries: &[u32], buf: &mut Vec<u32>) -> (usize, usize) {
        buf.clear();
        buf.extend(self.positions.iter().map(|&k| entries[k]));
        let maj = self.tables.maj_of(buf);
        let mut invp = 0usize;
        self.tables.for_each_invp(buf, |_| invp += 1);
        (maj, invp)
    }
}

/// The alternating set-partition numerator of the cumulant, before the
/// division by `(q - 1)^(r - 1)`. Exposed separately because its vanishing
/// order at `q = 1` is itself a tested statement.
pub fn cumulant_numerator(problem: &CumulantProblem) -> SymFunc {
    let n = problem.degree();
    let r = problem.color_count();
    // all nonempty subsets of colors, keyed by bitmask
    let mut blocks: Vec<BlockTables> = Vec::new();
    let mut block_of_mask: HashMap<u32, usize> = HashMap::new();
    for mask in 1u32..(1 << r) {
        let block: Vec<usize> = (0..r).filter(|k| mask >> k & 1 == 1).map(|k| k + 1).collect();
        block_of_mask.insert(mask, blocks.len());
        blocks.push(BlockTables::new(problem, &block));
    }
    // set partitions of the colors as lists of block indices with sign
    struct PartitionPlan {
        coeff: BigInt,
        block_ids: Vec<usize>,
    }
    let plans: Vec<PartitionPlan> = set_partitions(r)
        .into_iter()
        .map(|pi| {
            let sign = if (pi.block_count() - 1) % 2 == 0 { 1 } else { -1 };
            let mut fact = BigInt::one();
            for k in 1..pi.block_count() {
                fact *= BigInt::from(k);
            }
            let block_ids = pi
                .blocks()
                .iter()
                .map(|b| {
                    let mask = b.iter().fold(0u32, |m, &e| m | 1 << e);
                    block_of_mask[&mask]
                })
                .collect();
            PartitionPlan {
                coeff: BigInt::from(sign) * fact,
                block_ids,
            }
        })
        .collect();

    if n == 0 {
        let mut total = MPoly::zero();
        for plan in &plans {
            total.add_term(Exp::ZERO, &plan.coeff);
        }
        return SymFunc::unit(Basis::Monomial).scale(&total);
    }

    let full_tables = ShapeTables::new(problem.shape());
    let total_fillings = full_tables.filling_count(n);
    let map = (0..total_fillings)
        .into_par_iter()
        .fold(
            || (MonomialMap::new(), Vec::new(), Vec::new()),
            |(mut map, mut buf, mut block_buf), idx| {
                full_tables.decode(n, idx, &mut buf);
                let stats: Vec<(usize, usize)> = blocks
                    .iter()
                    .map(|b| b.stats(&buf, &mut block_buf))
                    .collect();
                let mut contribution = MPoly::zero();
                for plan in &plans {
                    let (mut maj, mut inv) = (0usize, 0usize);
                    for &id in &plan.block_ids {
                        maj += stats[id].0;
                        inv += stats[id].1;
                    }
                    contribution.add_term(Exp::new(inv as u32, maj as u32, 0), &plan.coeff);
                }
                map.add(content_key(&buf, n), contribution);
                (map, buf, block_buf)
            },
        )
        .map(|(map, _, _)| map)
        .reduce(MonomialMap::new, MonomialMap::merge);
    map.into_symfunc(n)
}

/// Definitional route: the numerator divided exactly by `(q - 1)^(r - 1)`.
/// A division failure means the divisibility theorem is violated on this
/// input, which the caller treats as a failed identity, not a crash.
pub fn cumulant_by_definition(problem: &CumulantProblem) -> Result<SymFunc, Error> {
    let numerator = cumulant_numerator(problem);
    let divisor = (&MPoly::q() - &MPoly::one()).pow(problem.color_count() - 1);
    let mut out = SymFunc::zero(problem.degree(), Basis::Monomial);
    for (idx, c) in numerator.coeffs() {
        out.add_coeff(idx.clone(), c.exact_divide(&divisor)?);
    }
    Ok(out)
}

/// True when every monomial coefficient of the numerator vanishes at
/// `q = 1` to order `r - 1`.
pub fn numerator_vanishes_at_q1(problem: &CumulantProblem) -> bool {
    let numerator = cumulant_numerator(problem);
    let qm1 = &MPoly::q() - &MPoly::one();
    let at_one = crate::poly::Assignment::new().set(crate::poly::Var::Q, MPoly::one());
    for (_, c) in numerator.coeffs() {
        let mut current = c.clone();
        for _ in 0..problem.color_count() - 1 {
            if !current.evaluate(&at_one).is_zero() {
                return false;
            }
            match current.exact_divide(&qm1) {
                Ok(q) => current = q,
                Err(_) => return false,
            }
        }
    }
    true
}

/// Quasisymmetric route: standard fillings only, each contributing its
/// inversion-polynomial weight at the inverse-descent set of its reading
/// word.
pub fn cumulant_qsym(problem: &CumulantProblem) -> QSymExpansion {
    let n = problem.degree();
    let mut out = QSymExpansion::zero(n);
    for f in standard_fillings(problem.shape()) {
        let g = build_graph(problem, &f);
        let ipoly = inversion_poly(&g);
        if ipoly.is_zero() {
            continue;
        }
        let term = ipoly.mul_monomial(Exp::new(0, f.maj() as u32, 0), &BigInt::one());
        out.add_coeff(ides(&f).unwrap(), term);
    }
    out
}

/// The multigraph of a chosen box set: one edge from every chosen box to
/// every box strictly to its left in the same row, joining their colors.
pub fn hook_graph(problem: &CumulantProblem, boxes: &[BoxPos]) -> Result<Multigraph, Error> {
    let diagram = problem.colored();
    let shape = problem.shape();
    let mut edges = Vec::new();
    for &b in boxes {
        if !shape.contains_box(b) {
            return Err(Error::BoxOutside);
        }
        for col in 1..b.col {
            edges.push((
                diagram.box_color(BoxPos::new(col, b.row)),
                diagram.box_color(b),
            ));
        }
    }
    Ok(Multigraph::new(problem.color_count(), &edges).unwrap())
}

fn hook_sum_over(problem: &CumulantProblem, boxes: &[BoxPos], s: usize) -> MPoly {
    let shape = problem.shape();
    let mut total = MPoly::zero();
    let mut chosen = Vec::with_capacity(s);
    fn rec(
        problem: &CumulantProblem,
        shape: &Partition,
        boxes: &[BoxPos],
        from: usize,
        s: usize,
        chosen: &mut Vec<BoxPos>,
        total: &mut MPoly,
    ) {
        if chosen.len() == s {
            let g = hook_graph(problem, chosen).unwrap();
            let ipoly = inversion_poly(&g);
            if !ipoly.is_zero() {
                let colegs: usize = chosen.iter().map(|&b| shape.coleg(b).unwrap()).sum();
                *total += &ipoly.mul_monomial(Exp::new(0, colegs as u32, 0), &BigInt::one());
            }
            return;
        }
        let needed = s - chosen.len();
        for k in from..=boxes.len().saturating_sub(needed) {
            chosen.push(boxes[k]);
            rec(problem, shape, boxes, k + 1, s, chosen, total);
            chosen.pop();
        }
    }
    rec(problem, shape, boxes, 0, s, &mut chosen, &mut total);
    total
}

/// The hook multivariate q,t-Kostka coefficient at `(n-s, 1^s)`: the sum
/// over s-subsets of boxes avoiding the corner `(1,1)` of the inversion
/// polynomial of the box graph, weighted by `t` to the total coleg.
pub fn hook_kostka(problem: &CumulantProblem, s: usize) -> MPoly {
    let corner = BoxPos::new(1, 1);
    let boxes: Vec<BoxPos> = problem
        .shape()
        .boxes_reading_order()
        .into_iter()
        .filter(|&b| b != corner)
        .collect();
    hook_sum_over(problem, &boxes, s)
}

/// The companion sum over all s-subsets (corner included), which computes
/// the coefficient of `(-u)^s` in the cumulant evaluated at `1 - u`.
pub fn hook_kostka_claim(problem: &CumulantProblem, s: usize) -> MPoly {
    let boxes = problem.shape().boxes_reading_order();
    hook_sum_over(problem, &boxes, s)
}

/// Fully colored Macdonald polynomial: the cumulant of the columns of `mu`.
pub fn fully_colored(mu: &Partition) -> SymFunc {
    assert!(!mu.is_empty(), "need a nonempty partition");
    let conj = mu.conjugate();
    let columns: Vec<Partition> = conj
        .parts()
        .iter()
        .map(|&h| Partition::column(h))
        .collect();
    let problem = CumulantProblem::new(columns).unwrap();
    cumulant_combinatorial(&problem)
}

/// Signed-filling formula for the plethysm `kappa[X(t-1)]`: compatible
/// super fillings weighted by `(-1)^negatives t^(positives + maj)` and the
/// inversion polynomial of their signed pair graph.
pub fn cumulant_pleth_super(problem: &CumulantProblem) -> SymFunc {
    let n = problem.degree();
    if n == 0 {
        let g = Multigraph::new(problem.color_count(), &[]).unwrap();
        return SymFunc::unit(Basis::Monomial).scale(&inversion_poly(&g));
    }
    let order = SuperOrder::PositivesFirst;
    let mut map = MonomialMap::new();
    for sf in crate::shapes::enumerate_superfillings(problem.shape(), n) {
        if !sf.is_compatible() {
            continue;
        }
        let stats = crate::shapes::super_stats(&sf, order);
        let g = build_graph_super(problem, &sf, order);
        let ipoly = inversion_poly(&g);
        if ipoly.is_zero() {
            continue;
        }
        let sign = if stats.negatives.is_multiple_of(2) { 1 } else { -1 };
        let term = ipoly.mul_monomial(
            Exp::new(0, (stats.positives + stats.maj) as u32, 0),
            &BigInt::from(sign),
        );
        map.add(sf.content(n), term);
    }
    map.into_symfunc(n)
}

/// Result of checking the three characterizing conditions on one shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub shape: Partition,
    /// Offending Schur indices of `H[X(q-1)]` outside the span below the
    /// conjugate shape.
    pub c1_violations: Vec<Partition>,
    /// Offending Schur indices of `H[X(t-1)]` outside the span below the
    /// shape.
    pub c2_violations: Vec<Partition>,
    /// The pairing with the single-row Schur function, which must be one.
    pub c3_value: MPoly,
}

impl AxiomReport {
    pub fn c1(&self) -> bool {
        self.c1_violations.is_empty()
    }

    pub fn c2(&self) -> bool {
        self.c2_violations.is_empty()
    }

    pub fn c3(&self) -> bool {
        self.c3_value.is_one()
    }

    pub fn passes(&self) -> bool {
        self.c1() && self.c2() && self.c3()
    }
}

/// Check the triangularity conditions on `H(lambda)`: the `X(q-1)` plethysm
/// stays below the conjugate in dominance, the `X(t-1)` plethysm stays
/// below the shape, and the pairing with `s_(n)` equals one.
pub fn verify_axioms(lambda: &Partition) -> Result<AxiomReport, Error> {
    let h = haglund(lambda);
    let conj = lambda.conjugate();
    let c1_violations = dominance_violations(&plethysm_x_qminus1(&h)?, &conj)?;
    let c2_violations = dominance_violations(&plethysm_x_tminus1(&h)?, lambda)?;
    let row = SymFunc::basis_element(Basis::Schur, Partition::row(lambda.size()));
    let c3_value = h.hall_inner(&row)?;
    Ok(AxiomReport {
        shape: lambda.clone(),
        c1_violations,
        c2_violations,
        c3_value,
    })
}

fn dominance_violations(f: &SymFunc, bound: &Partition) -> Result<Vec<Partition>, Error> {
    let mut out = Vec::new();
    for mu in f.to_schur().support() {
        if !mu.dominance_leq(bound)? {
            out.push(mu);
        }
    }
    Ok(out)
}

/// Super quasisymmetric route for the superization of a cumulant, collapsed
/// over a split alphabet; used to check that the two displays of the same
/// expansion agree. Returns the expansion over `xvars + yvars` variables.
pub fn cumulant_super_collapse(
    problem: &CumulantProblem,
    xvars: usize,
    yvars: usize,
    order: SuperOrder,
    negate_y: bool,
) -> crate::symfunc::Expansion {
    let max_mag = xvars.max(yvars);
    let mut out = crate::symfunc::Expansion::zero(xvars + yvars);
    for sf in crate::shapes::enumerate_superfillings(problem.shape(), max_mag) {
        let stats = crate::shapes::super_stats(&sf, order);
        // skip magnitudes outside the per-sign variable counts
        let mut exps = vec![0u32; xvars + yvars];
        let mut ok = true;
        let mut negs = 0usize;
        for j in 1..=sf.shape().len() {
            for i in 1..=sf.shape().part(j) {
                let l = sf.entry(BoxPos::new(i, j));
                if l.negative {
                    if l.magnitude as usize > yvars {
                        ok = false;
                    } else {
                        negs += 1;
                        exps[xvars + l.magnitude as usize - 1] += 1;
                    }
                } else if l.magnitude as usize > xvars {
                    ok = false;
                } else {
                    exps[l.magnitude as usize - 1] += 1;
                }
            }
        }
        if !ok {
            continue;
        }
        let g = build_graph_super(problem, &sf, order);
        let ipoly = inversion_poly(&g);
        if ipoly.is_zero() {
            continue;
        }
        let sign = if negate_y && negs % 2 == 1 { -1 } else { 1 };
        out.add_term(
            exps,
            ipoly.mul_monomial(Exp::new(0, stats.maj as u32, 0), &BigInt::from(sign)),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn problem(parts: &[&[usize]]) -> CumulantProblem {
        CumulantProblem::new(parts.iter().map(|q| p(q)).collect()).unwrap()
    }

    fn qp() -> MPoly {
        MPoly::q()
    }

    fn tp() -> MPoly {
        MPoly::t()
    }

    #[test]
    fn haglund_small() {
        let h1 = haglund(&p(&[1]));
        assert_eq!(h1.coeff(&p(&[1])), MPoly::one());

        // H(2) = m2 + (1+q) m11
        let h2 = haglund(&p(&[2]));
        assert_eq!(h2.coeff(&p(&[2])), MPoly::one());
        assert_eq!(h2.coeff(&p(&[1, 1])), &MPoly::one() + &qp());

        // H(1,1) = m2 + (1+t) m11
        let h11 = haglund(&p(&[1, 1]));
        assert_eq!(h11.coeff(&p(&[2])), MPoly::one());
        assert_eq!(h11.coeff(&p(&[1, 1])), &MPoly::one() + &tp());
    }

    #[test]
    fn haglund_schur_expansions() {
        let h2 = haglund(&p(&[2])).to_schur();
        assert_eq!(h2.coeff(&p(&[2])), MPoly::one());
        assert_eq!(h2.coeff(&p(&[1, 1])), qp());
        let h11 = haglund(&p(&[1, 1])).to_schur();
        assert_eq!(h11.coeff(&p(&[2])), MPoly::one());
        assert_eq!(h11.coeff(&p(&[1, 1])), tp());
    }

    #[test]
    fn build_graph_examples() {
        // one color: every inversion pair is a loop
        let pr = problem(&[&[2]]);
        let f = Filling::new(p(&[2]), vec![vec![2, 1]]).unwrap();
        let g = build_graph(&pr, &f);
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.loop_count(), 1);

        // two colors: the descending row filling draws one edge {1,2}
        let pr = problem(&[&[1], &[1]]);
        let f = Filling::new(p(&[2]), vec![vec![2, 1]]).unwrap();
        let g = build_graph(&pr, &f);
        assert_eq!(g.multiplicity(1, 2), 1);
        assert_eq!(g.loop_count(), 0);
    }

    #[test]
    fn cumulant_two_singles() {
        let pr = problem(&[&[1], &[1]]);
        let comb = cumulant_combinatorial(&pr);
        let def = cumulant_by_definition(&pr).unwrap();
        assert_eq!(comb, def);
        assert_eq!(comb.coeff(&p(&[1, 1])), MPoly::one());
        assert!(comb.coeff(&p(&[2])).is_zero());
    }

    #[test]
    fn cumulant_three_singles() {
        let pr = problem(&[&[1], &[1], &[1]]);
        let comb = cumulant_combinatorial(&pr);
        let def = cumulant_by_definition(&pr).unwrap();
        assert_eq!(comb, def);
        assert_eq!(comb.coeff(&p(&[2, 1])), MPoly::one());
        assert_eq!(comb.coeff(&p(&[1, 1, 1])), &MPoly::constant(4) + &qp());
        // Schur form s21 + (2+q) s111
        let schur = comb.to_schur();
        assert_eq!(schur.coeff(&p(&[2, 1])), MPoly::one());
        assert_eq!(schur.coeff(&p(&[1, 1, 1])), &MPoly::constant(2) + &qp());
    }

    #[test]
    fn cumulant_single_partition_is_haglund() {
        for parts in [vec![2], vec![1, 1], vec![2, 1], vec![3]] {
            let lam = Partition::new(parts);
            let pr = CumulantProblem::new(vec![lam.clone()]).unwrap();
            assert_eq!(cumulant_combinatorial(&pr), haglund(&lam));
            assert_eq!(cumulant_by_definition(&pr).unwrap(), haglund(&lam));
        }
    }

    #[test]
    fn qsym_route_small() {
        let pr = problem(&[&[1]]);
        let q = cumulant_qsym(&pr);
        assert_eq!(q.coeff(&[]), MPoly::one());

        let pr = problem(&[&[1], &[1]]);
        let q = cumulant_qsym(&pr);
        assert_eq!(q.coeff(&[1]), MPoly::one());
        assert!(q.coeff(&[]).is_zero());
        // collapse matches the combinatorial route
        assert_eq!(
            q.to_symfunc(2).unwrap(),
            cumulant_combinatorial(&pr)
        );
    }

    #[test]
    fn hook_graph_examples() {
        let pr = problem(&[&[1], &[1]]);
        let g = hook_graph(&pr, &[BoxPos::new(2, 1)]).unwrap();
        assert_eq!(g.multiplicity(1, 2), 1);

        let pr3 = problem(&[&[1], &[1], &[1]]);
        let g = hook_graph(&pr3, &[BoxPos::new(2, 1), BoxPos::new(3, 1)]).unwrap();
        assert_eq!(g.multiplicity(1, 2), 1);
        assert_eq!(g.multiplicity(1, 3), 1);
        assert_eq!(g.multiplicity(2, 3), 1);

        let empty = hook_graph(&pr3, &[]).unwrap();
        assert_eq!(empty.edge_count(), 0);
        assert_eq!(
            hook_graph(&pr3, &[BoxPos::new(4, 1)]),
            Err(Error::BoxOutside)
        );
    }

    #[test]
    fn hook_kostka_examples() {
        let pr = problem(&[&[1], &[1]]);
        assert_eq!(hook_kostka(&pr, 1), MPoly::one());

        let pr3 = problem(&[&[1], &[1], &[1]]);
        assert_eq!(hook_kostka(&pr3, 2), &MPoly::constant(2) + &qp());
        assert_eq!(hook_kostka(&pr3, 1), MPoly::one());
        assert!(hook_kostka(&pr3, 0).is_zero());

        // one color, single row: the box graph is a loop at the only vertex
        let pr1 = problem(&[&[2]]);
        assert_eq!(hook_kostka(&pr1, 1), qp());
    }

    #[test]
    fn fully_colored_examples() {
        // a single column is an ordinary Macdonald polynomial
        assert_eq!(fully_colored(&p(&[1, 1])), haglund(&p(&[1, 1])));
        // a single row of width two is the cumulant of two boxes
        let f = fully_colored(&p(&[2]));
        assert_eq!(f.coeff(&p(&[1, 1])), MPoly::one());
        assert!(f.coeff(&p(&[2])).is_zero());
    }

    #[test]
    fn remark_identity_for_two_by_two() {
        // [s_(1^4)] of the fully colored polynomial at (2,2) is t^2 (1+q)
        let f = fully_colored(&p(&[2, 2])).to_schur();
        let coeff = f.coeff(&p(&[1, 1, 1, 1]));
        let expect = MPoly::qint(2).mul_monomial(Exp::new(0, 2, 0), &BigInt::one());
        assert_eq!(coeff, expect);
    }

    #[test]
    fn pleth_super_single_box() {
        let pr = problem(&[&[1]]);
        let lhs = cumulant_pleth_super(&pr);
        // H(1)[X(t-1)] = (t-1) m1
        assert_eq!(lhs.coeff(&p(&[1])), &tp() - &MPoly::one());
        let rhs = plethysm_x_tminus1(&cumulant_combinatorial(&pr)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn axioms_on_small_shapes() {
        for parts in [vec![2], vec![1, 1], vec![2, 1]] {
            let lam = Partition::new(parts);
            let report = verify_axioms(&lam).unwrap();
            assert!(report.passes(), "axioms fail on {lam}: {report:?}");
        }
    }

    #[test]
    fn numerator_vanishing() {
        let pr = problem(&[&[1], &[1]]);
        assert!(numerator_vanishes_at_q1(&pr));
        let pr = problem(&[&[2], &[1, 1]]);
        assert!(numerator_vanishes_at_q1(&pr));
    }
}
