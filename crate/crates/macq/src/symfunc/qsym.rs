//! Fundamental quasisymmetric functions, Gessel's Schur expansion, and the
//! signed-alphabet variants used to check superization identities.

use std::collections::BTreeMap;

use serde::ser::SerializeMap;
use serde::Serialize;

use crate::poly::MPoly;
use crate::shapes::{ides, standard_tableaux, Partition, SuperLetter, SuperOrder};
use crate::symfunc::{Expansion, SymFunc};
use crate::Error;

/// A linear combination of fundamental quasisymmetric functions `F_{n,D}`,
/// keyed by the descent set `D` inside `[n-1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSymExpansion {
    degree: usize,
    coeffs: BTreeMap<Vec<usize>, MPoly>,
}

impl QSymExpansion {
    pub fn zero(degree: usize) -> Self {
        QSymExpansion {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, descents: &[usize]) -> MPoly {
        self.coeffs
            .get(descents)
            .cloned()
            .unwrap_or_else(MPoly::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&Vec<usize>, &MPoly)> {
        self.coeffs.iter()
    }

    pub fn add_coeff(&mut self, descents: Vec<usize>, value: MPoly) {
        debug_assert!(descents.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(descents.iter().all(|&d| d >= 1 && d < self.degree.max(1)));
        if value.is_zero() {
            return;
        }
        let entry = self
            .coeffs
            .entry(descents.clone())
            .or_insert_with(MPoly::zero);
        *entry += &value;
        if entry.is_zero() {
            self.coeffs.remove(&descents);
        }
    }

    /// Collapse into a concrete polynomial in `nvars` variables.
    pub fn expand(&self, nvars: usize) -> Expansion {
        let mut out = Expansion::zero(nvars);
        for (descents, c) in &self.coeffs {
            out = out.add(&fundamental_expansion(self.degree, descents, nvars).scale(c));
        }
        out
    }

    /// Collapse and reread as a monomial-basis symmetric function; fails when
    /// the combination is quasisymmetric but not symmetric.
    pub fn to_symfunc(&self, nvars: usize) -> Result<SymFunc, Error> {
        self.expand(nvars).to_symfunc()
    }

    pub fn to_text(&self) -> String {
        if self.coeffs.is_empty() {
            return "F: 0".into();
        }
        self.coeffs
            .iter()
            .map(|(d, c)| {
                let set = d
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                format!("F[{}|{{{}}}]: {}", self.degree, set, c)
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn to_latex(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(|(d, c)| {
                let set = d
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                format!(
                    "\\left({}\\right)\\, F_{{{},\\{{{}\\}}}}",
                    c.latex(),
                    self.degree,
                    set
                )
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl Serialize for QSymExpansion {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            degree: usize,
            basis: &'static str,
            coeffs: Coeffs<'a>,
        }
        struct Coeffs<'a>(&'a BTreeMap<Vec<usize>, MPoly>);
        impl Serialize for Coeffs<'_> {
            fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
                let mut map = ser.serialize_map(Some(self.0.len()))?;
                for (d, c) in self.0 {
                    let key = format!(
                        "[{}]",
                        d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
                    );
                    map.serialize_entry(&key, &c.to_string())?;
                }
                map.end()
            }
        }
        Repr {
            degree: self.degree,
            basis: "F",
            coeffs: Coeffs(&self.coeffs),
        }
        .serialize(ser)
    }
}

/// `F_{n,D}` in `nvars` variables: weakly increasing index words with strict
/// rises at the positions of `D`.
pub fn fundamental_expansion(n: usize, descents: &[usize], nvars: usize) -> Expansion {
    let mut out = Expansion::zero(nvars);
    let mut word = Vec::with_capacity(n);
    fn rec(
        n: usize,
        descents: &[usize],
        nvars: usize,
        word: &mut Vec<usize>,
        out: &mut Expansion,
    ) {
        if word.len() == n {
            let mut exps = vec![0u32; nvars];
            for &i in word.iter() {
                exps[i - 1] += 1;
            }
            out.add_term(exps, MPoly::one());
            return;
        }
        let k = word.len();
        let lo = if k == 0 {
            1
        } else if descents.contains(&k) {
            word[k - 1] + 1
        } else {
            word[k - 1]
        };
        for i in lo..=nvars {
            word.push(i);
            rec(n, descents, nvars, word, out);
            word.pop();
        }
    }
    rec(n, descents, nvars, &mut word, &mut out);
    out
}

/// Gessel's expansion of a Schur function: one `F_{n, iDes}` per standard
/// tableau of the shape.
pub fn gessel_schur(lambda: &Partition) -> QSymExpansion {
    let mut out = QSymExpansion::zero(lambda.size());
    for t in standard_tableaux(lambda) {
        out.add_coeff(ides(&t).unwrap(), MPoly::one());
    }
    out
}

/// A word over the signed alphabet, weakly increasing for a given order.
pub type SuperWord = Vec<SuperLetter>;

/// The signed analogue of `F_{n,D}` collapsed over `xvars` positive and
/// `yvars` negative letters: weakly increasing words where equal adjacent
/// positives are allowed only outside `D` and equal adjacent negatives only
/// inside `D`. With `negate_y` every negative letter contributes a sign,
/// which turns the superization into the `X - Y` specialization.
pub fn super_fundamental_expansion(
    n: usize,
    descents: &[usize],
    xvars: usize,
    yvars: usize,
    order: SuperOrder,
    negate_y: bool,
) -> Expansion {
    let nvars = xvars + yvars;
    let mut alphabet: Vec<SuperLetter> = (1..=xvars as u32)
        .map(SuperLetter::positive)
        .chain((1..=yvars as u32).map(SuperLetter::negative))
        .collect();
    alphabet.sort_by(|&a, &b| order.cmp(a, b));
    let mut out = Expansion::zero(nvars);
    let mut word: Vec<usize> = Vec::with_capacity(n);
    fn rec(
        n: usize,
        descents: &[usize],
        alphabet: &[SuperLetter],
        xvars: usize,
        negate_y: bool,
        word: &mut Vec<usize>,
        out: &mut Expansion,
    ) {
        if word.len() == n {
            let nvars = out.nvars();
            let mut exps = vec![0u32; nvars];
            let mut negs = 0usize;
            for &k in word.iter() {
                let l = alphabet[k];
                if l.negative {
                    negs += 1;
                    exps[xvars + l.magnitude as usize - 1] += 1;
                } else {
                    exps[l.magnitude as usize - 1] += 1;
                }
            }
            let sign = if negate_y && negs % 2 == 1 { -1 } else { 1 };
            out.add_term(exps, MPoly::constant(sign));
            return;
        }
        let j = word.len();
        let lo = if j == 0 {
            0
        } else {
            let prev = word[j - 1];
            let prev_letter = alphabet[prev];
            // equality allowed when the sign of the letter matches the
            // descent-set membership of the boundary
            let allow_equal = if descents.contains(&j) {
                prev_letter.negative
            } else {
                !prev_letter.negative
            };
            if allow_equal {
                prev
            } else {
                prev + 1
            }
        };
        for k in lo..alphabet.len() {
            word.push(k);
            rec(n, descents, alphabet, xvars, negate_y, word, out);
            word.pop();
        }
    }
    rec(
        n,
        descents,
        &alphabet,
        xvars,
        negate_y,
        &mut word,
        &mut out,
    );
    out
}

/// The superization of a function given by its fundamental expansion:
/// the same coefficients attached to the signed `F`'s.
pub fn superization_expansion(
    f: &QSymExpansion,
    xvars: usize,
    yvars: usize,
    order: SuperOrder,
    negate_y: bool,
) -> Expansion {
    let mut out = Expansion::zero(xvars + yvars);
    for (descents, c) in f.coeffs() {
        out = out.add(
            &super_fundamental_expansion(f.degree(), descents, xvars, yvars, order, negate_y)
                .scale(c),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{schur_in_monomial, to_powersum};
    use crate::shapes::partitions_of;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn fundamental_small() {
        // F_{2, {}} = h2: m2 + m11
        let f = fundamental_expansion(2, &[], 2).to_symfunc().unwrap();
        assert_eq!(f.coeff(&p(&[2])), MPoly::one());
        assert_eq!(f.coeff(&p(&[1, 1])), MPoly::one());
        // F_{2, {1}} = m11
        let f = fundamental_expansion(2, &[1], 2).to_symfunc().unwrap();
        assert_eq!(f.coeff(&p(&[2])), MPoly::zero());
        assert_eq!(f.coeff(&p(&[1, 1])), MPoly::one());
        // F_{3, {1}} alone is quasisymmetric but not symmetric
        assert!(fundamental_expansion(3, &[1], 3).to_symfunc().is_err());
    }

    #[test]
    fn gessel_reproduces_schur() {
        for n in 1..=6 {
            for lam in partitions_of(n) {
                let collapsed = gessel_schur(&lam).to_symfunc(n).unwrap();
                assert_eq!(collapsed, schur_in_monomial(&lam), "s_{lam}");
            }
        }
    }

    #[test]
    fn gessel_s21() {
        let q = gessel_schur(&p(&[2, 1]));
        // two standard tableaux with inverse descent sets {1} and {2}
        assert_eq!(q.coeff(&[1]), MPoly::one());
        assert_eq!(q.coeff(&[2]), MPoly::one());
    }

    #[test]
    fn superization_specializes_to_x_minus_y() {
        // for s_lambda: the signed collapse with negated y equals the
        // power-sum route p_i -> p_i(x) - p_i(y)
        use crate::poly::RatMPoly;
        use std::collections::BTreeMap;
        for n in 1..=4 {
            for lam in partitions_of(n) {
                let (a, b) = (n, n);
                let f = schur_in_monomial(&lam);
                let via_super = superization_expansion(
                    &gessel_schur(&lam),
                    a,
                    b,
                    SuperOrder::PositivesFirst,
                    true,
                );
                let ps = to_powersum(&f);
                let mut acc: BTreeMap<Vec<u32>, RatMPoly> = BTreeMap::new();
                for (idx, c) in ps.coeffs() {
                    let mut term = Expansion::one(a + b);
                    for &part in idx.parts() {
                        let mut diff = Expansion::zero(a + b);
                        for v in 0..a {
                            let mut e = vec![0u32; a + b];
                            e[v] = part as u32;
                            diff.add_term(e, MPoly::one());
                        }
                        for v in 0..b {
                            let mut e = vec![0u32; a + b];
                            e[a + v] = part as u32;
                            diff.add_term(e, MPoly::constant(-1));
                        }
                        term = term.mul(&diff);
                    }
                    for (e, v) in term.terms() {
                        let entry = acc.entry(e.clone()).or_insert_with(RatMPoly::zero);
                        *entry = &*entry + &c.mul_int(v);
                    }
                }
                let mut via_power = Expansion::zero(a + b);
                for (e, v) in acc {
                    via_power.add_term(e, v.clear_denominators().unwrap());
                }
                assert_eq!(via_super, via_power, "superization of s_{lam}");
            }
        }
    }

    #[test]
    fn order_choice_does_not_change_the_collapse() {
        for lam in partitions_of(3) {
            let a = superization_expansion(
                &gessel_schur(&lam),
                3,
                3,
                SuperOrder::PositivesFirst,
                false,
            );
            let b = superization_expansion(
                &gessel_schur(&lam),
                3,
                3,
                SuperOrder::NegativesFirst,
                false,
            );
            assert_eq!(a, b);
        }
    }
}
