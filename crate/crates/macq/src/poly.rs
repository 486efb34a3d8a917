//! Exact scalar arithmetic: sparse polynomials in the indeterminates `q`, `t`, `u`
//! with arbitrary-precision integer coefficients, plus a rational-coefficient
//! variant used as an intermediate in power-sum computations.
//!
//! [`MPoly`] is the universal scalar of the crate: q-integers, Tutte
//! specializations, Kostka coefficients and every generating function are
//! values of this type. Division is checked ([`MPoly::exact_divide`]) because
//! divisibility statements are themselves claims under test.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Error;

/// The three indeterminates an [`MPoly`] may mention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    Q,
    T,
    U,
}

/// Exponent triple of one term. Field order gives the canonical term order:
/// ascending by (t-degree, q-degree, u-degree).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exp {
    pub t: u32,
    pub q: u32,
    pub u: u32,
}

impl Exp {
    pub const ZERO: Exp = Exp { t: 0, q: 0, u: 0 };

    pub fn new(q: u32, t: u32, u: u32) -> Self {
        Exp { t, q, u }
    }

    fn checked_add(self, other: Exp) -> Exp {
        Exp {
            t: self.t + other.t,
            q: self.q + other.q,
            u: self.u + other.u,
        }
    }

    fn checked_sub(self, other: Exp) -> Option<Exp> {
        Some(Exp {
            t: self.t.checked_sub(other.t)?,
            q: self.q.checked_sub(other.q)?,
            u: self.u.checked_sub(other.u)?,
        })
    }

    fn get(&self, v: Var) -> u32 {
        match v {
            Var::Q => self.q,
            Var::T => self.t,
            Var::U => self.u,
        }
    }
}

/// Sparse polynomial in `q`, `t`, `u` over the integers.
///
/// Invariant: no stored coefficient is zero, so structural equality is
/// polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Exp, BigInt>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(1)
    }

    pub fn constant<I: Into<BigInt>>(c: I) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exp::ZERO, c);
        }
        MPoly { terms }
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(
            match v {
                Var::Q => Exp::new(1, 0, 0),
                Var::T => Exp::new(0, 1, 0),
                Var::U => Exp::new(0, 0, 1),
            },
            BigInt::one(),
        )
    }

    pub fn q() -> Self {
        Self::var(Var::Q)
    }

    pub fn t() -> Self {
        Self::var(Var::T)
    }

    pub fn u() -> Self {
        Self::var(Var::U)
    }

    pub fn monomial(e: Exp, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        MPoly { terms }
    }

    /// The q-integer `[n]_q = 1 + q + ... + q^(n-1)`; the zero polynomial for n = 0.
    pub fn qint(n: usize) -> Self {
        let mut terms = BTreeMap::new();
        for k in 0..n {
            terms.insert(Exp::new(k as u32, 0, 0), BigInt::one());
        }
        MPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Exp::ZERO).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical ascending (t, q, u) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: Exp) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    /// True when every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// True when no term mentions the given indeterminate.
    pub fn is_free_of(&self, v: Var) -> bool {
        self.terms.keys().all(|e| e.get(v) == 0)
    }

    pub fn add_term(&mut self, e: Exp, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Multiply by a single monomial, shifting every exponent.
    pub fn mul_monomial(&self, e: Exp, c: &BigInt) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(f, k)| (f.checked_add(e), k * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: usize) -> MPoly {
        let mut acc = MPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division: returns `c` with `self = b * c` when such a quotient
    /// exists in the integer polynomial ring, and [`Error::NonDivisible`]
    /// otherwise.
    pub fn exact_divide(&self, b: &MPoly) -> Result<MPoly, Error> {
        if b.is_zero() {
            return Err(Error::NonDivisible);
        }
        let (lead_exp, lead_coeff) = b.terms.iter().next_back().map(|(e, c)| (*e, c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = MPoly::zero();
        while let Some((&re, rc)) = rem.terms.iter().next_back() {
            let e = re.checked_sub(lead_exp).ok_or(Error::NonDivisible)?;
            let (c, r) = num_integer::div_rem(rc.clone(), lead_coeff.clone());
            if !r.is_zero() {
                return Err(Error::NonDivisible);
            }
            rem = &rem - &b.mul_monomial(e, &c);
            quot.add_term(e, &c);
        }
        Ok(quot)
    }

    /// Simultaneous substitution of the given indeterminates by polynomial
    /// values; unassigned indeterminates stay symbolic.
    pub fn evaluate(&self, at: &Assignment) -> MPoly {
        let mut acc = MPoly::zero();
        for (e, c) in &self.terms {
            let mut term = MPoly::constant(c.clone());
            let mut rest = Exp::ZERO;
            for (v, exp) in [(Var::Q, e.q), (Var::T, e.t), (Var::U, e.u)] {
                match at.get(v) {
                    Some(val) => {
                        if exp > 0 {
                            term = &term * &val.pow(exp as usize);
                        }
                    }
                    None => match v {
                        Var::Q => rest.q = exp,
                        Var::T => rest.t = exp,
                        Var::U => rest.u = exp,
                    },
                }
            }
            acc = &acc + &term.mul_monomial(rest, &BigInt::one());
        }
        acc
    }

    /// Coefficient of `u^k`, as a polynomial in q and t.
    pub fn u_coefficient(&self, k: u32) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.u == k)
                .map(|(e, c)| (Exp { u: 0, ..*e }, c.clone()))
                .collect(),
        }
    }

    pub fn max_degree(&self, v: Var) -> u32 {
        self.terms.keys().map(|e| e.get(v)).max().unwrap_or(0)
    }

    /// Render in LaTeX with `q^{i}t^{j}u^{k}` monomials.
    pub fn latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            push_signed(&mut out, i == 0, c, &latex_monomial(e));
        }
        out
    }
}

fn latex_monomial(e: &Exp) -> String {
    let mut m = String::new();
    for (name, exp) in [("t", e.t), ("q", e.q), ("u", e.u)] {
        match exp {
            0 => {}
            1 => m.push_str(name),
            _ => m.push_str(&format!("{}^{{{}}}", name, exp)),
        }
    }
    m
}

fn plain_monomial(e: &Exp) -> String {
    let mut parts = Vec::new();
    for (name, exp) in [("t", e.t), ("q", e.q), ("u", e.u)] {
        match exp {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{}^{}", name, exp)),
        }
    }
    parts.join("*")
}

fn push_signed(out: &mut String, first: bool, c: &BigInt, monomial: &str) {
    let mag = c.abs();
    if first {
        if c.is_negative() {
            out.push('-');
        }
    } else if c.is_negative() {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    if monomial.is_empty() {
        out.push_str(&mag.to_string());
    } else if mag.is_one() {
        out.push_str(monomial);
    } else {
        out.push_str(&format!("{}*{}", mag, monomial));
    }
}

impl fmt::Display for MPoly {
    /// Canonical string form: terms in ascending (t, q, u) degree, e.g.
    /// `2 + q` or `t^2 + t^2*q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            push_signed(&mut out, i == 0, c, &plain_monomial(e));
        }
        write!(f, "{}", out)
    }
}

impl From<usize> for MPoly {
    fn from(n: usize) -> Self {
        MPoly::constant(BigInt::from(n))
    }
}

impl From<i64> for MPoly {
    fn from(n: i64) -> Self {
        MPoly::constant(n)
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &(-c));
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1.checked_add(*e2), &(c1 * c2));
            }
        }
        out
    }
}

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
    }
}

impl SubAssign<&MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &MPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, &(-c));
        }
    }
}

/// Partial assignment of indeterminates for [`MPoly::evaluate`].
#[derive(Debug, Clone, Default)]
pub struct Assignment {
    vals: Vec<(Var, MPoly)>,
}

impl Assignment {
    pub fn new() -> Self {
        Assignment::default()
    }

    pub fn set(mut self, v: Var, value: MPoly) -> Self {
        self.vals.retain(|(w, _)| *w != v);
        self.vals.push((v, value));
        self
    }

    fn get(&self, v: Var) -> Option<&MPoly> {
        self.vals.iter().find(|(w, _)| *w == v).map(|(_, p)| p)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    q: u32,
    t: u32,
    u: u32,
    c: String,
}

impl Serialize for MPoly {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(e, c)| TermJson {
                q: e.q,
                t: e.t,
                u: e.u,
                c: c.to_string(),
            })
            .collect();
        terms.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for MPoly {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let terms = Vec::<TermJson>::deserialize(de)?;
        let mut out = MPoly::zero();
        for t in terms {
            let c: BigInt = t.c.parse().map_err(|_| D::Error::custom("bad integer coefficient"))?;
            out.add_term(Exp::new(t.q, t.t, t.u), &c);
        }
        Ok(out)
    }
}

/// Sparse polynomial in `q`, `t`, `u` with rational coefficients.
///
/// Used only as an intermediate for power-sum expansions and plethysm;
/// every externally returned value clears to an [`MPoly`] or reports
/// [`Error::NonIntegral`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RatMPoly {
    terms: BTreeMap<Exp, BigRational>,
}

impl RatMPoly {
    pub fn zero() -> Self {
        RatMPoly::default()
    }

    pub fn one() -> Self {
        RatMPoly::from_int(&MPoly::one())
    }

    pub fn from_int(p: &MPoly) -> Self {
        RatMPoly {
            terms: p
                .terms
                .iter()
                .map(|(e, c)| (*e, BigRational::from_integer(c.clone())))
                .collect(),
        }
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        let r = BigRational::new(BigInt::from(n), BigInt::from(d));
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(Exp::ZERO, r);
        }
        RatMPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e: Exp, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, r: &BigRational) -> RatMPoly {
        if r.is_zero() {
            return RatMPoly::zero();
        }
        RatMPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * r)).collect(),
        }
    }

    pub fn mul_int(&self, p: &MPoly) -> RatMPoly {
        let mut out = RatMPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &p.terms {
                out.add_term(e1.checked_add(*e2), &(c1 * BigRational::from_integer(c2.clone())));
            }
        }
        out
    }

    /// Succeeds exactly when every coefficient is an integer.
    pub fn clear_denominators(&self) -> Result<MPoly, Error> {
        let mut out = MPoly::zero();
        for (e, c) in &self.terms {
            if !c.is_integer() {
                return Err(Error::NonIntegral);
            }
            out.add_term(*e, &c.to_integer());
        }
        Ok(out)
    }
}

impl Add for &RatMPoly {
    type Output = RatMPoly;
    fn add(self, rhs: &RatMPoly) -> RatMPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub for &RatMPoly {
    type Output = RatMPoly;
    fn sub(self, rhs: &RatMPoly) -> RatMPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &(-c));
        }
        out
    }
}

impl Mul for &RatMPoly {
    type Output = RatMPoly;
    fn mul(self, rhs: &RatMPoly) -> RatMPoly {
        let mut out = RatMPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1.checked_add(*e2), &(c1 * c2));
            }
        }
        out
    }
}

// Small helper reexported for internal use; num-integer is pulled in by
// num-bigint, but we route div_rem through a local shim to keep the
// dependency list explicit.
mod num_integer {
    use num_bigint::BigInt;
    use num_traits::Zero;

    pub fn div_rem(a: BigInt, b: BigInt) -> (BigInt, BigInt) {
        if b.is_zero() {
            panic!("division by zero");
        }
        let q = &a / &b;
        let r = &a - &q * &b;
        (q, r)
    }
}
