//! Power-sum expansions with rational coefficients, the omega involution,
//! and plethystic specializations.
//!
//! Rational arithmetic is confined to this module: every public result is
//! cleared back to integer polynomials, and a failed clearing surfaces as
//! [`Error::NonIntegral`] because integrality is part of the claims the
//! crate checks.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::poly::{MPoly, RatMPoly};
use crate::shapes::{partitions_of, Partition};
use crate::symfunc::{Basis, Expansion, SymFunc};
use crate::Error;

/// A degree-homogeneous symmetric function written in the power-sum basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSum {
    degree: usize,
    coeffs: BTreeMap<Partition, RatMPoly>,
}

impl PowerSum {
    pub fn zero(degree: usize) -> Self {
        PowerSum {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, index: &Partition) -> RatMPoly {
        self.coeffs.get(index).cloned().unwrap_or_else(RatMPoly::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&Partition, &RatMPoly)> {
        self.coeffs.iter()
    }

    pub fn add_coeff(&mut self, index: Partition, value: RatMPoly) {
        assert_eq!(index.size(), self.degree);
        if value.is_zero() {
            return;
        }
        let entry = self
            .coeffs
            .entry(index.clone())
            .or_insert_with(RatMPoly::zero);
        *entry = &*entry + &value;
        if entry.is_zero() {
            self.coeffs.remove(&index);
        }
    }

    /// Apply `p_i -> g(i) * p_i`, scaling each coefficient by the product of
    /// `g` over the parts of its index.
    pub fn scale_parts(&self, g: impl Fn(usize) -> MPoly) -> PowerSum {
        let mut out = PowerSum::zero(self.degree);
        for (idx, c) in &self.coeffs {
            let mut factor = MPoly::one();
            for &part in idx.parts() {
                factor = &factor * &g(part);
            }
            out.add_coeff(idx.clone(), c.mul_int(&factor));
        }
        out
    }

    /// Substitute a scalar for every `p_i`, leaving a plain polynomial.
    pub fn substitute_scalar(&self, g: impl Fn(usize) -> MPoly) -> RatMPoly {
        let mut out = RatMPoly::zero();
        for (idx, c) in &self.coeffs {
            let mut factor = MPoly::one();
            for &part in idx.parts() {
                factor = &factor * &g(part);
            }
            out = &out + &c.mul_int(&factor);
        }
        out
    }
}

/// Rows of the transition `p_lambda = sum_mu R(lambda, mu) m_mu` for one
/// degree.
struct PowerTable {
    partitions: Vec<Partition>,
    rows: HashMap<Partition, BTreeMap<Partition, BigInt>>,
}

impl PowerTable {
    fn compute(n: usize) -> Self {
        let partitions = partitions_of(n);
        let mut rows = HashMap::new();
        for lambda in &partitions {
            let mut exp = Expansion::one(n.max(1));
            for &part in lambda.parts() {
                exp = exp.mul(&Expansion::power_sum(n.max(1), part));
            }
            let f = exp.to_symfunc().expect("power sums are symmetric");
            let row: BTreeMap<Partition, BigInt> = f
                .coeffs()
                .map(|(mu, c)| (mu.clone(), c.coeff(crate::poly::Exp::ZERO)))
                .collect();
            rows.insert(lambda.clone(), row);
        }
        PowerTable { partitions, rows }
    }
}

static POWER_CACHE: RwLock<Option<HashMap<usize, Arc<PowerTable>>>> = RwLock::new(None);

fn power_table(n: usize) -> Arc<PowerTable> {
    if let Some(map) = POWER_CACHE.read().unwrap().as_ref() {
        if let Some(t) = map.get(&n) {
            return Arc::clone(t);
        }
    }
    let table = Arc::new(PowerTable::compute(n));
    let mut guard = POWER_CACHE.write().unwrap();
    let map = guard.get_or_insert_with(HashMap::new);
    Arc::clone(map.entry(n).or_insert(table))
}

/// Exact rational expansion in the power-sum basis.
pub fn to_powersum(f: &SymFunc) -> PowerSum {
    let f = f.to_monomial();
    let n = f.degree();
    let table = power_table(n);
    let mut residual: BTreeMap<Partition, RatMPoly> = f
        .coeffs()
        .map(|(mu, c)| (mu.clone(), RatMPoly::from_int(c)))
        .collect();
    let mut out = PowerSum::zero(n);
    // ascending lex order: R(lambda, mu) vanishes unless mu dominates
    // lambda, so the least dominant index is resolved first
    for lambda in table.partitions.iter().rev() {
        let a = match residual.get(lambda) {
            Some(a) if !a.is_zero() => a.clone(),
            _ => continue,
        };
        let row = &table.rows[lambda];
        let diag = BigRational::from_integer(row[lambda].clone());
        let c = a.scale(&diag.recip());
        for (mu, r) in row {
            let entry = residual
                .entry(mu.clone())
                .or_insert_with(RatMPoly::zero);
            *entry = &*entry - &c.scale(&BigRational::from_integer(r.clone()));
        }
        out.add_coeff(lambda.clone(), c);
    }
    debug_assert!(residual.values().all(|v| v.is_zero()));
    out
}

/// Back to the monomial basis; fails with [`Error::NonIntegral`] when the
/// rational coefficients do not clear.
pub fn from_powersum(ps: &PowerSum) -> Result<SymFunc, Error> {
    let n = ps.degree();
    let table = power_table(n);
    let mut acc: BTreeMap<Partition, RatMPoly> = BTreeMap::new();
    for (lambda, c) in ps.coeffs() {
        for (mu, r) in &table.rows[lambda] {
            let entry = acc.entry(mu.clone()).or_insert_with(RatMPoly::zero);
            *entry = &*entry + &c.scale(&BigRational::from_integer(r.clone()));
        }
    }
    let mut out = SymFunc::zero(n, Basis::Monomial);
    for (mu, c) in acc {
        out.add_coeff(mu, c.clear_denominators()?);
    }
    Ok(out)
}

/// The omega involution: `p_lambda -> (-1)^(|lambda| + len lambda) p_lambda`.
pub fn omega(f: &SymFunc) -> SymFunc {
    let ps = to_powersum(f);
    let mut flipped = PowerSum::zero(ps.degree());
    for (idx, c) in ps.coeffs() {
        let sign = if (idx.size() + idx.len()) % 2 == 0 {
            1
        } else {
            -1
        };
        flipped.add_coeff(idx.clone(), c.scale(&BigRational::from_integer(sign.into())));
    }
    from_powersum(&flipped).expect("omega preserves integrality")
}

/// Plethysm by `X(q - 1)`: `p_i -> (q^i - 1) p_i`.
pub fn plethysm_x_qminus1(f: &SymFunc) -> Result<SymFunc, Error> {
    let scaled = to_powersum(f).scale_parts(|i| &MPoly::q().pow(i) - &MPoly::one());
    from_powersum(&scaled)
}

/// Plethysm by `X(t - 1)`: `p_i -> (t^i - 1) p_i`.
pub fn plethysm_x_tminus1(f: &SymFunc) -> Result<SymFunc, Error> {
    let scaled = to_powersum(f).scale_parts(|i| &MPoly::t().pow(i) - &MPoly::one());
    from_powersum(&scaled)
}

/// Evaluation at the alphabet `1 - u`: `p_i -> 1 - u^i`, yielding a plain
/// polynomial in `q`, `t`, `u`.
pub fn plethysm_one_minus_u(f: &SymFunc) -> Result<MPoly, Error> {
    to_powersum(f)
        .substitute_scalar(|i| &MPoly::one() - &MPoly::u().pow(i))
        .clear_denominators()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn s(parts: &[usize]) -> SymFunc {
        SymFunc::basis_element(Basis::Schur, p(parts))
    }

    fn m(parts: &[usize]) -> SymFunc {
        SymFunc::basis_element(Basis::Monomial, p(parts))
    }

    #[test]
    fn s2_power_expansion() {
        let ps = to_powersum(&s(&[2]));
        assert_eq!(ps.coeff(&p(&[1, 1])), RatMPoly::from_ratio(1, 2));
        assert_eq!(ps.coeff(&p(&[2])), RatMPoly::from_ratio(1, 2));
    }

    #[test]
    fn powersum_roundtrip() {
        for n in 0..=5 {
            for lam in partitions_of(n) {
                let f = m(lam.parts());
                assert_eq!(from_powersum(&to_powersum(&f)).unwrap(), f);
            }
        }
    }

    #[test]
    fn omega_examples() {
        // omega p2 = -p2: check through m-basis, p2 = m2
        assert_eq!(omega(&m(&[2])), m(&[2]).scale(&MPoly::constant(-1)));
        // omega s2 = s11
        assert_eq!(omega(&s(&[2]).to_monomial()).to_schur(), s(&[1, 1]));
        // involution on a mixed value
        let f = m(&[2, 1]).scale(&MPoly::q()).add(&m(&[1, 1, 1]));
        assert_eq!(omega(&omega(&f)), f);
    }

    #[test]
    fn omega_conjugates_schur() {
        for n in 1..=5 {
            for lam in partitions_of(n) {
                let lhs = omega(&s(lam.parts()).to_monomial()).to_schur();
                let rhs = s(lam.conjugate().parts());
                assert_eq!(lhs, rhs, "omega s_{lam}");
            }
        }
    }

    #[test]
    fn hook_evaluations() {
        assert_eq!(
            plethysm_one_minus_u(&s(&[2])).unwrap(),
            &MPoly::one() - &MPoly::u()
        );
        assert_eq!(
            plethysm_one_minus_u(&s(&[1, 1])).unwrap(),
            &MPoly::u().pow(2) - &MPoly::u()
        );
        assert!(plethysm_one_minus_u(&s(&[2, 2])).unwrap().is_zero());
        assert!(plethysm_one_minus_u(&s(&[3, 2, 1])).unwrap().is_zero());
    }

    #[test]
    fn negated_alphabet_matches_omega() {
        // f[-X] = (-1)^n omega f for homogeneous f of degree n; both sides
        // are linear in f, so basis elements settle the general statement
        for n in 1..=6 {
            for lam in partitions_of(n) {
                let f = s(lam.parts()).to_monomial();
                let negated = from_powersum(
                    &to_powersum(&f).scale_parts(|_| MPoly::constant(-1)),
                )
                .unwrap();
                let sign = if n % 2 == 0 { 1 } else { -1 };
                assert_eq!(negated, omega(&f).scale(&MPoly::constant(sign)));
            }
        }
        // and once on a value with mixed coefficients
        let f = m(&[3, 1])
            .scale(&MPoly::q())
            .add(&m(&[2, 2]).scale(&(&MPoly::t() + &MPoly::constant(2))));
        let negated =
            from_powersum(&to_powersum(&f).scale_parts(|_| MPoly::constant(-1))).unwrap();
        assert_eq!(negated, omega(&f));
    }
}
