//! The G-inversion polynomial and its Tutte-polynomial relatives.
//!
//! Four independent computations of the same polynomial live here:
//!
//! 1. [`inversion_poly`]: spanning trees of the simplified graph weighted by
//!    the kappa statistic and q-integer edge multiplicities;
//! 2. [`tutte`] at `(1, q)`: the subgraph expansion of the Tutte polynomial;
//! 3. [`inversion_poly_recursive`]: kappa-free trees with descendant counts;
//! 4. [`tutte_cumulant_form`]: an alternating sum over set partitions of the
//!    vertices divided by `(q - 1)^(#V - 1)`.
//!
//! A disconnected graph yields the zero polynomial on every route.

use num_bigint::BigInt;
use num_traits::One;

use crate::graphs::{set_partitions, spanning_trees, trees::kappa_statistic, Multigraph};
use crate::poly::{Assignment, MPoly, Var};
use crate::Error;

/// Spanning-tree route: `q^loops * sum_T q^kappa(T) * prod [e_ij]_q`.
pub fn inversion_poly(g: &Multigraph) -> MPoly {
    if !g.is_connected() {
        return MPoly::zero();
    }
    let mut total = MPoly::zero();
    for tree in spanning_trees(g) {
        let kappa = kappa_statistic(&tree, g);
        let mut term = MPoly::monomial(crate::poly::Exp::new(kappa as u32, 0, 0), BigInt::one());
        for (child, parent) in tree.edges() {
            term = &term * &MPoly::qint(g.multiplicity(child, parent));
        }
        total = &total + &term;
    }
    total.mul_monomial(
        crate::poly::Exp::new(g.loop_count() as u32, 0, 0),
        &BigInt::one(),
    )
}

/// Kappa-free route: `q^loops * sum_{T: kappa(T) = 0} prod_w [delta_T(w)]_q`
/// with `delta_T(w)` adding `e(i, parent(w))` over the subtree of `w`.
pub fn inversion_poly_recursive(g: &Multigraph) -> MPoly {
    if !g.is_connected() {
        return MPoly::zero();
    }
    let root = g.root();
    let mut total = MPoly::zero();
    for tree in spanning_trees(g) {
        if kappa_statistic(&tree, g) != 0 {
            continue;
        }
        let mut term = MPoly::one();
        for w in 1..=g.vertex_count() {
            if w == root {
                continue;
            }
            let parent = tree.parent(w).unwrap();
            let delta: usize = tree
                .subtree(w)
                .into_iter()
                .map(|i| g.multiplicity(i, parent))
                .sum();
            term = &term * &MPoly::qint(delta);
        }
        total = &total + &term;
    }
    total.mul_monomial(
        crate::poly::Exp::new(g.loop_count() as u32, 0, 0),
        &BigInt::one(),
    )
}

/// The Tutte polynomial in two formal slots, stored over the scalar ring by
/// housing the x-exponent in the q slot and the y-exponent in the t slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TuttePoly(MPoly);

impl TuttePoly {
    pub fn zero() -> Self {
        TuttePoly(MPoly::zero())
    }

    /// Substitute polynomial values for the two slots.
    pub fn eval(&self, x: &MPoly, y: &MPoly) -> MPoly {
        self.0.evaluate(
            &Assignment::new()
                .set(Var::Q, x.clone())
                .set(Var::T, y.clone()),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Render with `x`/`y` names, lowest y-degree first.
    pub fn to_xy_string(&self) -> String {
        if self.0.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        let mut first = true;
        for (e, c) in self.0.terms() {
            let mut m = String::new();
            for (name, exp) in [("x", e.q), ("y", e.t)] {
                match exp {
                    0 => {}
                    1 => {
                        if !m.is_empty() {
                            m.push('*');
                        }
                        m.push_str(name);
                    }
                    _ => {
                        if !m.is_empty() {
                            m.push('*');
                        }
                        m.push_str(&format!("{}^{}", name, exp));
                    }
                }
            }
            let sign = if c < &BigInt::from(0) {
                if first { "-" } else { " - " }
            } else if first {
                ""
            } else {
                " + "
            };
            out.push_str(sign);
            let mag = if c < &BigInt::from(0) { -c } else { c.clone() };
            if m.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&m);
            } else {
                out.push_str(&format!("{}*{}", mag, m));
            }
            first = false;
        }
        out
    }
}

/// Subgraph expansion `sum_H (x-1)^(c(H)-1) (y-1)^(#E(H)-#V+c(H))` over all
/// edge subsets; zero for a disconnected graph.
pub fn tutte(g: &Multigraph) -> TuttePoly {
    if !g.is_connected() {
        return TuttePoly::zero();
    }
    let xm1 = &MPoly::q() - &MPoly::one();
    let ym1 = &MPoly::t() - &MPoly::one();
    let m = g.edge_count();
    let n = g.vertex_count();
    let mut total = MPoly::zero();
    let mut subset = Vec::new();
    for mask in 0u64..(1u64 << m) {
        subset.clear();
        for k in 0..m {
            if mask >> k & 1 == 1 {
                subset.push(k);
            }
        }
        let c = g.component_count(&subset);
        let cyclomatic = subset.len() + c - n;
        total = &total + &(&xm1.pow(c - 1) * &ym1.pow(cyclomatic));
    }
    TuttePoly(total)
}

/// Specialize the Tutte polynomial at concrete values of both slots.
pub fn tutte_at(g: &Multigraph, x: &MPoly, y: &MPoly) -> MPoly {
    tutte(g).eval(x, y)
}

/// Alternating set-partition route:
/// `(sum_pi (-1)^(#pi-1) (#pi-1)! prod_B q^(#E|_B)) / (q-1)^(#V-1)`.
/// The division is exact for every multigraph; a failure would contradict
/// the identity this computes and is reported as an error.
pub fn tutte_cumulant_form(g: &Multigraph) -> Result<MPoly, Error> {
    let n = g.vertex_count();
    let vertices: Vec<usize> = (1..=n).collect();
    let mut numerator = MPoly::zero();
    for pi in set_partitions(n) {
        let sign = if (pi.block_count() - 1) % 2 == 0 { 1 } else { -1 };
        let coeff = BigInt::from(sign) * factorial(pi.block_count() - 1);
        let mut q_exp = 0usize;
        for block in pi.blocks() {
            let verts: Vec<usize> = block.iter().map(|&k| vertices[k]).collect();
            q_exp += internal_edge_count(g, &verts);
        }
        numerator.add_term(crate::poly::Exp::new(q_exp as u32, 0, 0), &coeff);
    }
    let divisor = (&MPoly::q() - &MPoly::one()).pow(n - 1);
    numerator.exact_divide(&divisor)
}

fn internal_edge_count(g: &Multigraph, verts: &[usize]) -> usize {
    g.edges()
        .iter()
        .filter(|(a, b)| verts.contains(a) && verts.contains(b))
        .count()
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Generating function of spanning connected edge subsets by size:
/// `c_G(q) = sum_{H connected, spanning} q^(#H)`.
pub fn connected_subgraph_gen(g: &Multigraph) -> MPoly {
    let m = g.edge_count();
    let n = g.vertex_count();
    let mut total = MPoly::zero();
    let mut subset = Vec::new();
    for mask in 0u64..(1u64 << m) {
        subset.clear();
        for k in 0..m {
            if mask >> k & 1 == 1 {
                subset.push(k);
            }
        }
        if n == 1 || g.component_count(&subset) == 1 {
            total.add_term(
                crate::poly::Exp::new(subset.len() as u32, 0, 0),
                &BigInt::one(),
            );
        }
    }
    total
}

/// Check the root-deletion recursion
/// `T_G(1,q) = q^(loops at w) * sum over partitions of V minus w of
/// prod_B [d(B,w)]_q T_{G|B}(1,q)` at every choice of `w`.
pub fn recursion_identity_holds(g: &Multigraph) -> bool {
    let lhs = inversion_poly(g);
    let n = g.vertex_count();
    for w in 1..=n {
        let others: Vec<usize> = (1..=n).filter(|&v| v != w).collect();
        let mut rhs = MPoly::zero();
        for pi in set_partitions(others.len()) {
            let mut term = MPoly::one();
            for block in pi.blocks() {
                let verts: Vec<usize> = block.iter().map(|&k| others[k]).collect();
                let d = g.edges_to_block(&verts, w);
                term = &term * &MPoly::qint(d);
                if term.is_zero() {
                    break;
                }
                term = &term * &inversion_poly(&g.induced(&verts));
                if term.is_zero() {
                    break;
                }
            }
            rhs = &rhs + &term;
        }
        rhs = rhs.mul_monomial(
            crate::poly::Exp::new(g.loops_at(w) as u32, 0, 0),
            &BigInt::one(),
        );
        if rhs != lhs {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &[(i64, u32)]) -> MPoly {
        // helper: sum of c * q^k
        let mut p = MPoly::zero();
        for &(c, k) in s {
            p.add_term(crate::poly::Exp::new(k, 0, 0), &BigInt::from(c));
        }
        p
    }

    #[test]
    fn inversion_poly_examples() {
        let dipole3 = Multigraph::new(2, &[(1, 2), (1, 2), (1, 2)]).unwrap();
        assert_eq!(inversion_poly(&dipole3), MPoly::qint(3));

        let k3 = Multigraph::complete(3);
        assert_eq!(inversion_poly(&k3), poly(&[(2, 0), (1, 1)]));

        let isolated = Multigraph::new(2, &[]).unwrap();
        assert!(inversion_poly(&isolated).is_zero());

        let single = Multigraph::new(1, &[]).unwrap();
        assert_eq!(inversion_poly(&single), MPoly::one());

        let loop_only = Multigraph::new(1, &[(1, 1), (1, 1)]).unwrap();
        assert_eq!(inversion_poly(&loop_only), poly(&[(1, 2)]));
    }

    #[test]
    fn tutte_examples() {
        let k3 = Multigraph::complete(3);
        let t = tutte(&k3);
        // x^2 + x + y
        let expect = &(&MPoly::q().pow(2) + &MPoly::q()) + &MPoly::t();
        assert_eq!(t.eval(&MPoly::q(), &MPoly::t()), expect);
        assert_eq!(t.to_xy_string(), "x + x^2 + y");
        assert_eq!(
            t.eval(&MPoly::one(), &MPoly::q()),
            poly(&[(2, 0), (1, 1)])
        );

        let k2 = Multigraph::complete(2);
        assert_eq!(tutte(&k2).eval(&MPoly::q(), &MPoly::t()), MPoly::q());
        assert_eq!(
            tutte_at(&k2, &MPoly::one(), &MPoly::one()),
            MPoly::one()
        );

        let k4 = Multigraph::complete(4);
        assert_eq!(
            tutte_at(&k4, &MPoly::one(), &MPoly::one()),
            MPoly::constant(16)
        );

        assert!(tutte(&Multigraph::new(3, &[(1, 2)]).unwrap()).is_zero());
    }

    #[test]
    fn cumulant_form_examples() {
        let k2 = Multigraph::complete(2);
        assert_eq!(tutte_cumulant_form(&k2).unwrap(), MPoly::one());
        let k3 = Multigraph::complete(3);
        assert_eq!(tutte_cumulant_form(&k3).unwrap(), poly(&[(2, 0), (1, 1)]));
        let disconnected = Multigraph::new(3, &[(1, 2)]).unwrap();
        assert!(tutte_cumulant_form(&disconnected).unwrap().is_zero());
    }

    #[test]
    fn connected_subgraph_examples() {
        let k2 = Multigraph::complete(2);
        assert_eq!(connected_subgraph_gen(&k2), poly(&[(1, 1)]));

        let dipole2 = Multigraph::new(2, &[(1, 2), (1, 2)]).unwrap();
        assert_eq!(connected_subgraph_gen(&dipole2), poly(&[(2, 1), (1, 2)]));

        let k3 = Multigraph::complete(3);
        assert_eq!(connected_subgraph_gen(&k3), poly(&[(3, 2), (1, 3)]));
        // c_G(q) = q^(#V-1) T_G(1, q+1)
        let shifted = tutte_at(&k3, &MPoly::one(), &(&MPoly::q() + &MPoly::one()));
        assert_eq!(
            connected_subgraph_gen(&k3),
            shifted.mul_monomial(crate::poly::Exp::new(2, 0, 0), &BigInt::one())
        );
    }

    #[test]
    fn four_routes_agree_on_small_graphs() {
        let samples = [
            Multigraph::complete(3),
            Multigraph::complete(4),
            Multigraph::new(3, &[(1, 2), (1, 2), (2, 3), (1, 1)]).unwrap(),
            Multigraph::new(4, &[(1, 2), (2, 3), (3, 4), (4, 1), (2, 2)]).unwrap(),
            Multigraph::new(2, &[(1, 2), (1, 2), (2, 2), (1, 1)]).unwrap(),
        ];
        for g in &samples {
            let a = inversion_poly(g);
            let b = tutte_at(g, &MPoly::one(), &MPoly::q());
            let c = inversion_poly_recursive(g);
            let d = tutte_cumulant_form(g).unwrap();
            assert_eq!(a, b, "tree vs tutte on {g}");
            assert_eq!(a, c, "tree vs recursive on {g}");
            assert_eq!(a, d, "tree vs cumulant on {g}");
        }
    }

    #[test]
    fn recursion_identity_small() {
        for g in [
            Multigraph::complete(3),
            Multigraph::new(3, &[(1, 2), (2, 3), (2, 3), (3, 3)]).unwrap(),
            Multigraph::new(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap(),
        ] {
            assert!(recursion_identity_holds(&g));
        }
    }

    #[test]
    fn relabeling_invariance() {
        let g = Multigraph::new(4, &[(1, 2), (1, 2), (2, 3), (3, 4), (1, 4), (2, 2)]).unwrap();
        let base = inversion_poly(&g);
        let perms = [
            vec![2, 1, 3, 4],
            vec![4, 3, 2, 1],
            vec![2, 3, 4, 1],
            vec![3, 1, 4, 2],
        ];
        for perm in &perms {
            let h = g.relabel(perm).unwrap();
            // compare with the default root, not the carried one
            let h = Multigraph::new(h.vertex_count(), h.edges()).unwrap();
            assert_eq!(inversion_poly(&h), base);
        }
        // and the carried root gives the same polynomial as well
        let h = g.relabel(&[3, 1, 4, 2]).unwrap();
        assert_eq!(inversion_poly(&h), base);
    }
}
