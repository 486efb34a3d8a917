//! Degree-homogeneous symmetric functions with polynomial coefficients.
//!
//! A [`SymFunc`] is a coefficient map over partitions of its degree, tagged
//! with the basis it is written in (monomial or Schur); power-sum
//! expansions carry rational coefficients and live in [`PowerSum`]. A
//! degree-n function is determined by its expansion in n variables, which is
//! how products and quasisymmetric collapses are computed.

mod power;
mod qsym;

pub use power::{
    from_powersum, omega, plethysm_one_minus_u, plethysm_x_qminus1, plethysm_x_tminus1,
    to_powersum, PowerSum,
};
pub use qsym::{
    gessel_schur, super_fundamental_expansion, superization_expansion, QSymExpansion, SuperWord,
};

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::ser::SerializeMap;
use serde::Serialize;

use crate::poly::MPoly;
use crate::shapes::{kostka_table, partitions_of, Partition};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Basis {
    #[serde(rename = "m")]
    Monomial,
    #[serde(rename = "s")]
    Schur,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::Monomial => write!(f, "m"),
            Basis::Schur => write!(f, "s"),
        }
    }
}

/// A homogeneous symmetric function of fixed degree in a tagged basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFunc {
    degree: usize,
    basis: Basis,
    coeffs: BTreeMap<Partition, MPoly>,
}

impl SymFunc {
    pub fn zero(degree: usize, basis: Basis) -> Self {
        SymFunc {
            degree,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// The unit: degree zero, coefficient one at the empty partition.
    pub fn unit(basis: Basis) -> Self {
        let mut f = SymFunc::zero(0, basis);
        f.add_coeff(Partition::empty(), MPoly::one());
        f
    }

    /// A single basis element with coefficient one.
    pub fn basis_element(basis: Basis, index: Partition) -> Self {
        let mut f = SymFunc::zero(index.size(), basis);
        f.add_coeff(index, MPoly::one());
        f
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, index: &Partition) -> MPoly {
        self.coeffs.get(index).cloned().unwrap_or_else(MPoly::zero)
    }

    /// Nonzero coefficients in ascending lexicographic index order.
    pub fn coeffs(&self) -> impl Iterator<Item = (&Partition, &MPoly)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> Vec<Partition> {
        self.coeffs.keys().cloned().collect()
    }

    pub fn add_coeff(&mut self, index: Partition, value: MPoly) {
        assert_eq!(index.size(), self.degree, "index size must match degree");
        if value.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(index.clone()).or_insert_with(MPoly::zero);
        *entry += &value;
        if entry.is_zero() {
            self.coeffs.remove(&index);
        }
    }

    pub fn scale(&self, c: &MPoly) -> SymFunc {
        let mut out = SymFunc::zero(self.degree, self.basis);
        for (idx, v) in &self.coeffs {
            out.add_coeff(idx.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        assert_eq!(self.basis, other.basis);
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (idx, v) in &other.coeffs {
            out.add_coeff(idx.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.add(&other.scale(&MPoly::constant(-1)))
    }

    /// Rewrite in the monomial basis.
    pub fn to_monomial(&self) -> SymFunc {
        match self.basis {
            Basis::Monomial => self.clone(),
            Basis::Schur => {
                let table = kostka_table(self.degree);
                let mut out = SymFunc::zero(self.degree, Basis::Monomial);
                for (lambda, c) in &self.coeffs {
                    for mu in &table.partitions {
                        let k = table.value(lambda, mu);
                        if k != 0 {
                            out.add_coeff(mu.clone(), c.scale(&BigInt::from(k)));
                        }
                    }
                }
                out
            }
        }
    }

    /// Rewrite in the Schur basis by exact back-substitution through the
    /// unitriangular Kostka matrix.
    pub fn to_schur(&self) -> SymFunc {
        if self.basis == Basis::Schur {
            return self.clone();
        }
        let table = kostka_table(self.degree);
        let mut residual: BTreeMap<Partition, MPoly> = self.coeffs.clone();
        let mut out = SymFunc::zero(self.degree, Basis::Schur);
        // descending lex order extends dominance: process the most dominant
        // index first, then peel its Kostka row off the residual
        for lambda in &table.partitions {
            let c = match residual.get(lambda) {
                Some(c) if !c.is_zero() => c.clone(),
                _ => continue,
            };
            for mu in &table.partitions {
                let k = table.value(lambda, mu);
                if k != 0 {
                    let entry = residual.entry(mu.clone()).or_insert_with(MPoly::zero);
                    *entry -= &c.scale(&BigInt::from(k));
                }
            }
            out.add_coeff(lambda.clone(), c);
        }
        debug_assert!(residual.values().all(|v| v.is_zero()));
        out
    }

    /// Product, computed by expanding both factors in enough variables.
    pub fn multiply(&self, other: &SymFunc) -> SymFunc {
        let degree = self.degree + other.degree;
        let a = Expansion::from_monomial_symfunc(&self.to_monomial(), degree);
        let b = Expansion::from_monomial_symfunc(&other.to_monomial(), degree);
        a.mul(&b)
            .to_symfunc()
            .expect("product of symmetric functions is symmetric")
    }

    /// Hall pairing: Schur coefficients multiplied and summed.
    pub fn hall_inner(&self, other: &SymFunc) -> Result<MPoly, Error> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch);
        }
        let a = self.to_schur();
        let b = other.to_schur();
        let mut total = MPoly::zero();
        for (idx, c) in &a.coeffs {
            let d = b.coeff(idx);
            if !d.is_zero() {
                total += &(c * &d);
            }
        }
        Ok(total)
    }

    /// Render as lines `m[2,1]: 1 + q`, most dominant index first.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return format!("{}: 0", self.basis);
        }
        self.coeffs
            .iter()
            .rev()
            .map(|(idx, c)| format!("{}{}: {}", self.basis, idx, c))
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Render as a LaTeX sum of `m_{(2,1)}`-style terms.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .rev()
            .map(|(idx, c)| {
                let tuple = idx
                    .parts()
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                format!("\\left({}\\right)\\, {}_{{({})}}", c.latex(), self.basis, tuple)
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl Serialize for SymFunc {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            degree: usize,
            basis: &'a Basis,
            coeffs: CoeffMap<'a>,
        }
        struct CoeffMap<'a>(&'a BTreeMap<Partition, MPoly>);
        impl Serialize for CoeffMap<'_> {
            fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
                let mut map = ser.serialize_map(Some(self.0.len()))?;
                for (idx, c) in self.0.iter().rev() {
                    map.serialize_entry(&idx.to_string(), &c.to_string())?;
                }
                map.end()
            }
        }
        Repr {
            degree: self.degree,
            basis: &self.basis,
            coeffs: CoeffMap(&self.coeffs),
        }
        .serialize(ser)
    }
}

/// A polynomial in `nvars` commuting variables with [`MPoly`] coefficients,
/// keyed by exponent vectors. The workhorse behind products and collapses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, MPoly>,
}

impl Expansion {
    pub fn zero(nvars: usize) -> Self {
        Expansion {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        let mut e = Expansion::zero(nvars);
        e.add_term(vec![0; nvars], MPoly::one());
        e
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &MPoly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: MPoly) {
        assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps.clone()).or_insert_with(MPoly::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn add(&self, other: &Expansion) -> Expansion {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &MPoly) -> Expansion {
        let mut out = Expansion::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Expansion) -> Expansion {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Expansion::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let sum: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(sum, c1 * c2);
            }
        }
        out
    }

    /// The power sum `x_1^k + ... + x_n^k`; the constant 1 for `k = 0`.
    pub fn power_sum(nvars: usize, k: usize) -> Expansion {
        if k == 0 {
            return Expansion::one(nvars);
        }
        let mut e = Expansion::zero(nvars);
        for v in 0..nvars {
            let mut exps = vec![0u32; nvars];
            exps[v] = k as u32;
            e.add_term(exps, MPoly::one());
        }
        e
    }

    /// Expand a monomial-basis function in `nvars` variables.
    pub fn from_monomial_symfunc(f: &SymFunc, nvars: usize) -> Expansion {
        assert_eq!(f.basis, Basis::Monomial);
        let mut out = Expansion::zero(nvars);
        for (mu, c) in &f.coeffs {
            if mu.len() > nvars {
                continue;
            }
            let mut exps: Vec<u32> = mu.parts().iter().map(|&p| p as u32).collect();
            exps.resize(nvars, 0);
            // distinct permutations of the exponent vector
            exps.sort_unstable();
            loop {
                out.add_term(exps.clone(), c.clone());
                if !crate::shapes::filling_next_permutation(&mut exps) {
                    break;
                }
            }
        }
        out
    }

    /// Read the coefficient map of a symmetric polynomial back into the
    /// monomial basis, verifying symmetry along the way.
    pub fn to_symfunc(&self) -> Result<SymFunc, Error> {
        // group exponent vectors by sorted class and insist every member of
        // the class carries the same coefficient
        let mut classes: BTreeMap<Vec<u32>, (MPoly, usize)> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut key = e.clone();
            key.sort_unstable_by(|a, b| b.cmp(a));
            match classes.get(&key) {
                None => {
                    classes.insert(key, (c.clone(), 1));
                }
                Some((first, _)) => {
                    if first != c {
                        return Err(Error::Invalid(
                            "expansion is not a symmetric polynomial".into(),
                        ));
                    }
                    classes.get_mut(&key).unwrap().1 += 1;
                }
            }
        }
        let mut degree = None;
        for key in classes.keys() {
            let d: u32 = key.iter().sum();
            match degree {
                None => degree = Some(d),
                Some(prev) if prev != d => {
                    return Err(Error::Invalid("expansion is not homogeneous".into()))
                }
                _ => {}
            }
        }
        let degree = degree.unwrap_or(0) as usize;
        let mut out = SymFunc::zero(degree, Basis::Monomial);
        for (key, (c, count)) in classes {
            let parts: Vec<usize> = key
                .iter()
                .take_while(|&&p| p > 0)
                .map(|&p| p as usize)
                .collect();
            let index = Partition::new(parts);
            // the class of a vector with nvars slots has a known orbit size
            let expected = orbit_size(&key, self.nvars);
            if count != expected {
                return Err(Error::Invalid(
                    "expansion is not a symmetric polynomial".into(),
                ));
            }
            out.add_coeff(index, c);
        }
        Ok(out)
    }
}

fn orbit_size(sorted_desc: &[u32], nvars: usize) -> usize {
    let mut mult: BTreeMap<u32, usize> = BTreeMap::new();
    for &e in sorted_desc {
        *mult.entry(e).or_default() += 1;
    }
    let mut numer = 1usize;
    for k in 1..=nvars {
        numer *= k;
    }
    let mut denom = 1usize;
    for (_, m) in mult {
        for k in 1..=m {
            denom *= k;
        }
    }
    numer / denom
}

/// The Schur function `s_lambda` in the monomial basis via tableau counts.
pub fn schur_in_monomial(lambda: &Partition) -> SymFunc {
    SymFunc::basis_element(Basis::Schur, lambda.clone()).to_monomial()
}

/// All partitions of `n`, exposed here for sweeps over basis indices.
pub fn basis_indices(n: usize) -> Vec<Partition> {
    partitions_of(n)
}
