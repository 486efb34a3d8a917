//! Identity sweeps behind the `verify` subcommand and the acceptance suite.
//!
//! Each suite runs a family of exact identity checks over a bounded sweep
//! and reports per-check case counts and failures. Nothing here tolerates
//! approximation: a check fails on the first coefficient that differs.

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::graphs::{
    connected_subgraph_gen, gparking_enumerate, increasing_tree_poly, inversion_poly,
    inversion_poly_recursive, parking_gen, recursion_identity_holds, sandpile_level,
    sandpile_level_gen, sandpile_recurrent, set_partitions, tutte_at, tutte_cumulant_form,
    Multigraph,
};
use crate::macdonald::{
    cumulant_by_definition, cumulant_combinatorial, cumulant_pleth_super, cumulant_qsym,
    cumulant_super_collapse, fully_colored, haglund, hook_kostka, hook_kostka_claim,
    numerator_vanishes_at_q1, verify_axioms, CumulantProblem,
};
use crate::poly::{Exp, MPoly, Var};
use crate::shapes::{partitions_of, partitions_up_to, Partition, ShapeTables};
use crate::symfunc::{
    gessel_schur, plethysm_one_minus_u, plethysm_x_tminus1, schur_in_monomial,
    superization_expansion,
};

/// Outcome of one named check over a sweep.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    fn new(name: &str) -> Self {
        CheckReport {
            name: name.to_string(),
            cases: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(describe());
        }
    }
}

fn describe_problem(p: &CumulantProblem) -> String {
    let parts: Vec<String> = p.partitions().iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(";"))
}

/// Every multiset of nonempty partitions with at most `max_r` members and
/// total size at most `max_n`; with `r2_extra`, pairs are additionally swept
/// up to that total size.
pub fn cumulant_problems(max_r: usize, max_n: usize, r2_extra: Option<usize>) -> Vec<CumulantProblem> {
    let limit = max_n.max(r2_extra.unwrap_or(0));
    let pool = partitions_up_to(limit);
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(
        pool: &[Partition],
        max_r: usize,
        max_n: usize,
        r2_extra: Option<usize>,
        from: usize,
        total: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<CumulantProblem>,
    ) {
        if !chosen.is_empty() {
            let within_main = total <= max_n && chosen.len() <= max_r;
            let within_extra =
                chosen.len() == 2 && r2_extra.is_some_and(|extra| total <= extra);
            if within_main || within_extra {
                let parts: Vec<Partition> = chosen.iter().map(|&k| pool[k].clone()).collect();
                out.push(CumulantProblem::new(parts).unwrap());
            }
        }
        if chosen.len() == max_r.max(2) {
            return;
        }
        let budget = max_n.max(r2_extra.unwrap_or(0));
        for k in from..pool.len() {
            let size = pool[k].size();
            if total + size > budget {
                continue;
            }
            chosen.push(k);
            rec(pool, max_r, max_n, r2_extra, k, total + size, chosen, out);
            chosen.pop();
        }
    }
    rec(&pool, max_r, max_n, r2_extra, 0, 0, &mut chosen, &mut out);
    // drop multisets that only satisfy neither bound (guard above already
    // filters, but r > 2 tuples above max_n can slip through the recursion
    // when r2_extra exceeds max_n)
    out.retain(|p| {
        let n: usize = p.degree();
        (p.color_count() <= max_r && n <= max_n)
            || (p.color_count() == 2 && r2_extra.is_some_and(|e| n <= e))
    });
    out
}

/// Haglund axioms (C1)-(C3) for all shapes up to `max_n`, the two spot
/// values at degree two, and Gessel's Schur expansion.
pub fn suite_axioms(max_n: usize) -> Vec<CheckReport> {
    let mut axioms = CheckReport::new("triangularity axioms (C1)-(C3)");
    for n in 0..=max_n {
        for lam in partitions_of(n) {
            match verify_axioms(&lam) {
                Ok(report) => axioms.record(report.passes(), || {
                    format!("{}: {:?}", lam, report)
                }),
                Err(e) => axioms.record(false, || format!("{}: {}", lam, e)),
            }
        }
    }

    let mut spot = CheckReport::new("degree-two Schur expansions");
    {
        let p2 = Partition::new(vec![2]);
        let p11 = Partition::new(vec![1, 1]);
        let h2 = haglund(&p2).to_schur();
        spot.record(
            h2.coeff(&p2) == MPoly::one() && h2.coeff(&p11) == MPoly::q(),
            || "H(2) != s2 + q s11".into(),
        );
        let h11 = haglund(&p11).to_schur();
        spot.record(
            h11.coeff(&p2) == MPoly::one() && h11.coeff(&p11) == MPoly::t(),
            || "H(1,1) != s2 + t s11".into(),
        );
    }

    let mut gessel = CheckReport::new("Gessel expansion reproduces Schur functions");
    for n in 1..=max_n {
        for lam in partitions_of(n) {
            let ok = gessel_schur(&lam)
                .to_symfunc(n)
                .map(|f| f == schur_in_monomial(&lam))
                .unwrap_or(false);
            gessel.record(ok, || format!("s_{lam}"));
        }
    }

    vec![axioms, spot, gessel]
}

/// The main-theorem sweep: both cumulant routes agree, the division is
/// exact with integer q,t coefficients, monomial coefficients are
/// nonnegative, the numerator vanishes at q = 1 to the right order, the
/// standardized quasisymmetric route collapses to the same function, and
/// the filling statistics identities hold.
pub fn suite_main(max_n: usize, r2_extra: Option<usize>) -> Vec<CheckReport> {
    let problems = cumulant_problems(3, max_n, r2_extra);

    struct ProblemOutcome {
        label: String,
        equal: bool,
        divisible: bool,
        integral: bool,
        positive: bool,
        vanishes: bool,
        qsym_ok: Option<bool>,
    }

    let outcomes: Vec<ProblemOutcome> = problems
        .par_iter()
        .map(|pr| {
            let label = describe_problem(pr);
            let comb = cumulant_combinatorial(pr);
            let (equal, divisible) = match cumulant_by_definition(pr) {
                Ok(def) => (def == comb, true),
                Err(_) => (false, false),
            };
            let integral = comb
                .coeffs()
                .all(|(_, c)| c.is_free_of(Var::U));
            let positive = comb.coeffs().all(|(_, c)| c.is_nonnegative());
            let vanishes = numerator_vanishes_at_q1(pr);
            let qsym_ok = (pr.degree() <= 5).then(|| {
                cumulant_qsym(pr)
                    .to_symfunc(pr.degree().max(1))
                    .map(|f| f == comb)
                    .unwrap_or(false)
            });
            ProblemOutcome {
                label,
                equal,
                divisible,
                integral,
                positive,
                vanishes,
                qsym_ok,
            }
        })
        .collect();

    let mut equality = CheckReport::new("combinatorial route equals definitional route");
    let mut divisibility = CheckReport::new("cumulant division exact with integer coefficients");
    let mut positivity = CheckReport::new("monomial coefficients are q,t-nonnegative");
    let mut vanishing = CheckReport::new("numerator vanishes at q=1 to order r-1");
    let mut qsym = CheckReport::new("quasisymmetric route collapses to the cumulant");
    for o in &outcomes {
        equality.record(o.equal, || o.label.clone());
        divisibility.record(o.divisible && o.integral, || o.label.clone());
        positivity.record(o.positive, || o.label.clone());
        vanishing.record(o.vanishes, || o.label.clone());
        if let Some(ok) = o.qsym_ok {
            qsym.record(ok, || o.label.clone());
        }
    }

    let stats = filling_statistics_check(&problems, 4);

    vec![equality, divisibility, positivity, vanishing, qsym, stats]
}

/// The filling statistics identities on every problem shape: the inversion
/// count equality, additivity of maj over blocks, and the pairwise
/// decomposition of inv.
fn filling_statistics_check(problems: &[CumulantProblem], max_entry: usize) -> CheckReport {
    let mut report = CheckReport::new("filling statistics identities (inv, maj, blocks)");
    let failures: Vec<String> = problems
        .par_iter()
        .filter_map(|pr| {
            let shape = pr.shape().clone();
            let r = pr.color_count();
            let tables = ShapeTables::new(&shape);
            let blocks = crate::macdonald::block_tables_for(pr);
            let mut buf = Vec::new();
            let mut block_buf = Vec::new();
            for idx in 0..tables.filling_count(max_entry) {
                tables.decode(max_entry, idx, &mut buf);
                // route equality on the full shape
                let filling =
                    crate::shapes::Filling::from_reading_entries(shape.clone(), &buf).unwrap();
                let arms: usize = filling
                    .descents()
                    .into_iter()
                    .map(|b| shape.arm(b).unwrap())
                    .sum();
                if filling.attack_inversions() as i64 - arms as i64 != filling.inv() as i64 {
                    return Some(format!("inv identity: {} {:?}", describe_problem(pr), buf));
                }
                // per-subset stats; subsets are indexed by bitmask-1
                let stats: Vec<(usize, usize)> = blocks
                    .iter()
                    .map(|b| b.stats(&buf, &mut block_buf))
                    .collect();
                for (k, stat) in stats.iter().enumerate() {
                    let mask = k + 1;
                    let members: Vec<usize> =
                        (0..r).filter(|j| mask >> j & 1 == 1).collect();
                    let maj_sum: usize = members
                        .iter()
                        .map(|&j| stats[(1usize << j) - 1].0)
                        .sum();
                    if stat.0 != maj_sum {
                        return Some(format!(
                            "maj additivity: {} {:?}",
                            describe_problem(pr),
                            buf
                        ));
                    }
                    let singles: i64 = members
                        .iter()
                        .map(|&j| stats[(1usize << j) - 1].1 as i64)
                        .sum();
                    let mut pair_sum: i64 = 0;
                    for (a, &i) in members.iter().enumerate() {
                        for &j in &members[a + 1..] {
                            let mask = (1usize << i) | (1usize << j);
                            pair_sum += stats[mask - 1].1 as i64;
                        }
                    }
                    // the multiplier is #B - 2: each pairwise inv repeats a
                    // member's single-color pairs #B - 1 times while inv of
                    // the block keeps them once
                    let expect = pair_sum - (members.len() as i64 - 2) * singles;
                    if stat.1 as i64 != expect {
                        return Some(format!(
                            "inv decomposition: {} {:?}",
                            describe_problem(pr),
                            buf
                        ));
                    }
                }
            }
            None
        })
        .collect();
    report.cases = problems.len();
    report.failures = failures;
    report
}

/// Hook coefficients: equality with the Schur expansion of the cumulant,
/// positivity, and the two-sum relation against the `1 - u` evaluation.
pub fn suite_hooks(max_n: usize) -> Vec<CheckReport> {
    let problems = cumulant_problems(3, max_n, None);

    struct HookOutcome {
        label: String,
        schur_match: bool,
        positive: bool,
        relation: bool,
        claim_matches_pleth: bool,
    }

    let outcomes: Vec<HookOutcome> = problems
        .par_iter()
        .map(|pr| {
            let label = describe_problem(pr);
            let n = pr.degree();
            let schur = match cumulant_by_definition(pr) {
                Ok(def) => def.to_schur(),
                Err(_) => {
                    return HookOutcome {
                        label,
                        schur_match: false,
                        positive: false,
                        relation: false,
                        claim_matches_pleth: false,
                    }
                }
            };
            let hooks: Vec<MPoly> = (0..n.max(1)).map(|s| hook_kostka(pr, s)).collect();
            let claims: Vec<MPoly> = (0..=n).map(|s| hook_kostka_claim(pr, s)).collect();
            let mut schur_match = true;
            for (s, hook) in hooks.iter().enumerate() {
                let mut parts = vec![n - s];
                parts.extend(std::iter::repeat_n(1, s));
                let idx = Partition::new(parts);
                if &schur.coeff(&idx) != hook {
                    schur_match = false;
                }
            }
            let positive = hooks.iter().chain(claims.iter()).all(MPoly::is_nonnegative);
            let mut relation = true;
            for s in 0..=n {
                let lhs = &claims[s];
                let mut rhs = MPoly::zero();
                if s < n {
                    rhs += &hooks[s];
                }
                if s >= 1 {
                    rhs += &hooks[s - 1];
                }
                if lhs != &rhs {
                    relation = false;
                }
            }
            // claim route against the plethystic evaluation at 1 - u
            let pleth = plethysm_one_minus_u(&cumulant_combinatorial(pr)).unwrap_or_else(|_| {
                MPoly::constant(-1)
            });
            let mut claim_matches_pleth = true;
            for s in 0..=n {
                let sign = if s % 2 == 0 { 1 } else { -1 };
                let coeff = pleth.u_coefficient(s as u32).scale(&BigInt::from(sign));
                if coeff != claims[s] {
                    claim_matches_pleth = false;
                }
            }
            HookOutcome {
                label,
                schur_match,
                positive,
                relation,
                claim_matches_pleth,
            }
        })
        .collect();

    let mut schur = CheckReport::new("hook coefficients equal Schur coefficients");
    let mut positive = CheckReport::new("hook coefficients are q,t-nonnegative");
    let mut relation = CheckReport::new("corner relation between the two hook sums");
    let mut pleth = CheckReport::new("1-u evaluation matches the all-boxes hook sum");
    for o in &outcomes {
        schur.record(o.schur_match, || o.label.clone());
        positive.record(o.positive, || o.label.clone());
        relation.record(o.relation, || o.label.clone());
        pleth.record(o.claim_matches_pleth, || o.label.clone());
    }
    vec![schur, positive, relation, pleth]
}

/// Column-colored cumulants: the signed-filling plethysm formula, the
/// leading Schur coefficient given by increasing trees, the basis
/// determinant, and the equivalence of the two superized displays.
pub fn suite_colored(max_n: usize) -> Vec<CheckReport> {
    let mut pleth = CheckReport::new("signed-filling formula equals the t-plethysm");
    for pr in cumulant_problems(3, max_n.min(4), None) {
        let lhs = cumulant_pleth_super(&pr);
        let rhs = plethysm_x_tminus1(&cumulant_combinatorial(&pr));
        let ok = rhs.map(|rhs| rhs == lhs).unwrap_or(false);
        pleth.record(ok, || describe_problem(&pr));
    }

    let mut remark = CheckReport::new("column Schur coefficient counts increasing trees");
    for n in 1..=max_n.min(5) {
        for mu in partitions_of(n) {
            let conj = mu.conjugate();
            let weights: Vec<usize> = conj.parts().iter().skip(1).copied().collect();
            let expect = increasing_tree_poly(&weights)
                .mul_monomial(Exp::new(0, mu.n_stat() as u32, 0), &BigInt::one());
            let coeff = fully_colored(&mu)
                .to_schur()
                .coeff(&Partition::column(n));
            remark.record(coeff == expect, || format!("{mu}"));
        }
    }

    let mut basis = CheckReport::new("fully colored family has nonzero determinant");
    for n in 1..=max_n.min(5) {
        let indices = partitions_of(n);
        let matrix: Vec<Vec<MPoly>> = indices
            .par_iter()
            .map(|mu| {
                let f = fully_colored(mu);
                indices.iter().map(|nu| f.coeff(nu)).collect()
            })
            .collect();
        let det = bareiss_determinant(matrix);
        basis.record(!det.is_zero(), || format!("degree {n}"));
    }

    let mut superized = CheckReport::new("superized quasisymmetric displays agree");
    for pr in cumulant_problems(2, max_n.min(4), None) {
        let n = pr.degree();
        let direct = cumulant_super_collapse(
            &pr,
            n,
            n,
            crate::shapes::SuperOrder::PositivesFirst,
            false,
        );
        let via_f = superization_expansion(
            &cumulant_qsym(&pr),
            n,
            n,
            crate::shapes::SuperOrder::PositivesFirst,
            false,
        );
        superized.record(direct == via_f, || describe_problem(&pr));
    }

    vec![pleth, remark, basis, superized]
}

/// Configuration of the graph sweep: exhaustive below the given bounds and
/// pseudorandom beyond.
#[derive(Debug, Clone)]
pub struct GraphSweepConfig {
    pub exhaustive_vertices: usize,
    pub exhaustive_edges: usize,
    pub random_vertices: usize,
    pub random_edges: usize,
    pub random_count: usize,
    pub seed: u64,
}

impl Default for GraphSweepConfig {
    fn default() -> Self {
        GraphSweepConfig {
            exhaustive_vertices: 4,
            exhaustive_edges: 6,
            random_vertices: 5,
            random_edges: 8,
            random_count: 500,
            seed: 0x5eed_1234_abcd_0001,
        }
    }
}

/// All connected multigraphs (loops allowed) with at most the given counts.
pub fn connected_multigraphs(max_vertices: usize, max_edges: usize) -> Vec<Multigraph> {
    let mut out = Vec::new();
    for v in 1..=max_vertices {
        let mut slots = Vec::new();
        for i in 1..=v {
            for j in i..=v {
                slots.push((i, j));
            }
        }
        let mut counts = vec![0usize; slots.len()];
        fn rec(
            v: usize,
            slots: &[(usize, usize)],
            counts: &mut Vec<usize>,
            k: usize,
            remaining: usize,
            out: &mut Vec<Multigraph>,
        ) {
            if k == slots.len() {
                let mut edges = Vec::new();
                for (slot, &c) in counts.iter().enumerate() {
                    for _ in 0..c {
                        edges.push(slots[slot]);
                    }
                }
                let g = Multigraph::new(v, &edges).unwrap();
                if g.is_connected() {
                    out.push(g);
                }
                return;
            }
            for c in 0..=remaining {
                counts[k] = c;
                rec(v, slots, counts, k + 1, remaining - c, out);
            }
            counts[k] = 0;
        }
        rec(v, &slots, &mut counts, 0, max_edges, &mut out);
    }
    out
}

/// Deterministic pseudorandom generator for sampled sweeps.
pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}

/// Pseudorandom connected multigraphs with a fixed vertex count.
pub fn random_connected_multigraphs(
    vertices: usize,
    max_edges: usize,
    count: usize,
    seed: u64,
) -> Vec<Multigraph> {
    let mut rng = SplitMix64(seed);
    let mut slots = Vec::new();
    for i in 1..=vertices {
        for j in i..=vertices {
            slots.push((i, j));
        }
    }
    let min_edges = vertices.saturating_sub(1);
    let mut out = Vec::new();
    while out.len() < count {
        let e = min_edges + rng.below(max_edges - min_edges + 1);
        let edges: Vec<(usize, usize)> = (0..e).map(|_| slots[rng.below(slots.len())]).collect();
        let g = Multigraph::new(vertices, &edges).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// Graph-side identities: the four routes to the inversion polynomial, the
/// parking and sandpile generating functions, spanning-tree counting, the
/// root-deletion recursion, relabeling invariance, the connected-subgraph
/// specialization, and the set-partition inversion formulas.
pub fn suite_graphs(cfg: &GraphSweepConfig) -> Vec<CheckReport> {
    let mut graphs = connected_multigraphs(cfg.exhaustive_vertices, cfg.exhaustive_edges);
    let exhaustive_count = graphs.len();
    graphs.extend(random_connected_multigraphs(
        cfg.random_vertices,
        cfg.random_edges,
        cfg.random_count,
        cfg.seed,
    ));

    struct GraphOutcome {
        label: String,
        four_routes: bool,
        merino: bool,
        tree_count: bool,
        connect: bool,
    }

    let one = MPoly::one();
    let q = MPoly::q();
    let outcomes: Vec<GraphOutcome> = graphs
        .par_iter()
        .map(|g| {
            let label = g.to_string();
            let a = inversion_poly(g);
            let b = tutte_at(g, &one, &q);
            let c = inversion_poly_recursive(g);
            let d = tutte_cumulant_form(g).unwrap_or_else(|_| MPoly::constant(-1));
            let four_routes = a == b && a == c && a == d;
            let parking = parking_gen(g).unwrap_or_else(|_| MPoly::constant(-1));
            let level = sandpile_level_gen(g).unwrap_or_else(|_| MPoly::constant(-1));
            let merino = parking == b && level == parking;
            let trees = crate::graphs::spanning_trees(g)
                .into_iter()
                .map(|t| {
                    t.edges()
                        .iter()
                        .map(|&(x, y)| BigInt::from(g.multiplicity(x, y)))
                        .product::<BigInt>()
                })
                .sum::<BigInt>();
            let tree_count = tutte_at(g, &one, &one) == MPoly::constant(trees);
            let connect_lhs = connected_subgraph_gen(g);
            let connect_rhs = tutte_at(g, &one, &(&q + &one)).mul_monomial(
                Exp::new(g.vertex_count() as u32 - 1, 0, 0),
                &BigInt::one(),
            );
            let connect = connect_lhs == connect_rhs;
            GraphOutcome {
                label,
                four_routes,
                merino,
                tree_count,
                connect,
            }
        })
        .collect();

    let mut four = CheckReport::new("four routes to the inversion polynomial agree");
    let mut merino = CheckReport::new("parking and sandpile generating functions match T(1,q)");
    let mut trees = CheckReport::new("T(1,1) counts spanning trees with multiplicity");
    let mut connect = CheckReport::new("connected-subgraph generating function specializes");
    for o in &outcomes {
        four.record(o.four_routes, || o.label.clone());
        merino.record(o.merino, || o.label.clone());
        trees.record(o.tree_count, || o.label.clone());
        connect.record(o.connect, || o.label.clone());
    }

    // the recursion is costly (Bell-number partitions per vertex): check
    // on the smaller exhaustive family plus a slice of the random one
    let mut recursion = CheckReport::new("root-deletion recursion at every vertex");
    for g in graphs
        .iter()
        .take(exhaustive_count)
        .chain(graphs[exhaustive_count..].iter().step_by(25))
    {
        recursion.record(recursion_identity_holds(g), || g.to_string());
    }

    let mut relabel = CheckReport::new("inversion polynomial is relabeling invariant");
    let mut rng = SplitMix64(cfg.seed ^ 0xfeed);
    for g in graphs.iter().step_by(17) {
        let base = inversion_poly(g);
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (1..=n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.below(i + 1));
        }
        let relabeled = Multigraph::new(n, g.relabel(&perm).unwrap().edges()).unwrap();
        relabel.record(inversion_poly(&relabeled) == base, || g.to_string());
    }

    let mut spot = CheckReport::new("triangle spot values");
    {
        let k3 = Multigraph::complete(3);
        let expect = &MPoly::constant(2) + &MPoly::q();
        spot.record(tutte_at(&k3, &one, &q) == expect, || "T_K3(1,q)".into());
        let parking: Vec<(usize, usize)> = gparking_enumerate(&k3)
            .unwrap()
            .iter()
            .map(|f| (f.value(2).unwrap(), f.value(3).unwrap()))
            .collect();
        spot.record(
            parking == vec![(0, 0), (0, 1), (1, 0)],
            || "K3 parking set".into(),
        );
        let levels: Vec<usize> = sandpile_recurrent(&k3)
            .unwrap()
            .iter()
            .map(|u| sandpile_level(&k3, u))
            .collect();
        let mut sorted = levels.clone();
        sorted.sort_unstable();
        spot.record(sorted == vec![0, 0, 1], || "K3 sandpile levels".into());
    }

    let mut mobius = CheckReport::new("set-partition inversion recovers moments");
    let mut rng = SplitMix64(cfg.seed ^ 0xcafe);
    for r in 1..=4 {
        for _ in 0..5 {
            // random family u indexed by nonempty subsets of [r]
            let mut family: Vec<MPoly> = Vec::new();
            for _ in 1u32..(1 << r) {
                let mut p = MPoly::zero();
                for _ in 0..3 {
                    let e = Exp::new(rng.below(3) as u32, rng.below(3) as u32, 0);
                    p.add_term(e, &BigInt::from(rng.below(7) as i64 - 3));
                }
                family.push(p);
            }
            let u = |mask: usize| family[mask - 1].clone();
            // cumulants of every subset via the alternating sum
            let mut kappa: Vec<MPoly> = Vec::new();
            for mask in 1usize..(1 << r) {
                let members: Vec<usize> = (0..r).filter(|k| mask >> k & 1 == 1).collect();
                let mut total = MPoly::zero();
                for pi in set_partitions(members.len()) {
                    let sign: i64 = if (pi.block_count() - 1) % 2 == 0 { 1 } else { -1 };
                    let mut fact = 1i64;
                    for k in 1..pi.block_count() {
                        fact *= k as i64;
                    }
                    let mut prod = MPoly::constant(sign * fact);
                    for block in pi.blocks() {
                        let m = block.iter().fold(0usize, |acc, &e| acc | 1 << members[e]);
                        prod = &prod * &u(m);
                    }
                    total = &total + &prod;
                }
                kappa.push(total);
            }
            // moments recovered as sums over partitions of products of kappas
            let members: Vec<usize> = (0..r).collect();
            let mut recovered = MPoly::zero();
            for pi in set_partitions(r) {
                let mut prod = MPoly::one();
                for block in pi.blocks() {
                    let m = block.iter().fold(0usize, |acc, &e| acc | 1 << members[e]);
                    prod = &prod * &kappa[m - 1];
                }
                recovered = &recovered + &prod;
            }
            mobius.record(recovered == u((1 << r) - 1), || format!("r = {r}"));
        }
    }

    vec![four, merino, trees, connect, recursion, relabel, spot, mobius]
}

/// Fraction-free determinant over the polynomial ring; every division in
/// the elimination is exact.
pub fn bareiss_determinant(mut m: Vec<Vec<MPoly>>) -> MPoly {
    let n = m.len();
    if n == 0 {
        return MPoly::one();
    }
    let mut sign = 1i64;
    let mut prev = MPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return MPoly::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num
                    .exact_divide(&prev)
                    .expect("Bareiss elimination divides exactly");
            }
        }
        prev = m[k][k].clone();
    }
    m[n - 1][n - 1].scale(&BigInt::from(sign))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn problem_enumeration_counts() {
        let problems = cumulant_problems(3, 3, None);
        // r=1: partitions of size <= 3: 1 + 2 + 3 = 6
        // r=2: multisets of two nonempty partitions with total <= 3:
        //      {1,1}, {1,2}, {1,11} -> 3
        // r=3: {1,1,1} -> 1
        assert_eq!(problems.len(), 10);
        let with_extra = cumulant_problems(3, 3, Some(4));
        // adds the pairs with total exactly 4: {1,3},{1,21},{1,111},
        // {2,2},{2,11},{11,11} -> 6
        assert_eq!(with_extra.len(), 16);
    }

    #[test]
    fn exhaustive_graph_family_is_connected() {
        let graphs = connected_multigraphs(3, 3);
        assert!(graphs.iter().all(Multigraph::is_connected));
        assert!(graphs.iter().any(|g| g.loop_count() > 0));
        assert!(graphs.len() > 10);
    }

    #[test]
    fn random_graphs_deterministic() {
        let a = random_connected_multigraphs(5, 8, 10, 42);
        let b = random_connected_multigraphs(5, 8, 10, 42);
        assert_eq!(a, b);
        assert!(a.iter().all(Multigraph::is_connected));
    }

    #[test]
    fn bareiss_small() {
        let m = vec![
            vec![MPoly::q(), MPoly::one()],
            vec![MPoly::one(), MPoly::t()],
        ];
        let det = bareiss_determinant(m);
        assert_eq!(det, &(&MPoly::q() * &MPoly::t()) - &MPoly::one());
        let singular = vec![
            vec![MPoly::one(), MPoly::one()],
            vec![MPoly::one(), MPoly::one()],
        ];
        assert!(bareiss_determinant(singular).is_zero());
    }
}
