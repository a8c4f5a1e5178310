//! Exact sparse multivariate polynomials over an integer scalar.
//!
//! Monomials are exponent vectors over a fixed ambient variable set
//! α_1..α_n (stored 0-based). Terms live in a `BTreeMap` keyed by
//! graded-lexicographic order, so iteration — and therefore printing and
//! serialization — is canonical.

use crate::scalar::Scalar;
use crate::{Error, Result};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector with graded-lex ordering (total degree first, then
/// lexicographic).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Box<[u8]>);

impl Monomial {
    pub fn new(exps: Vec<u8>) -> Self {
        Monomial(exps.into_boxed_slice())
    }

    pub fn unit(nvars: usize) -> Self {
        Monomial(vec![0u8; nvars].into_boxed_slice())
    }

    pub fn var(v: usize, nvars: usize) -> Self {
        let mut e = vec![0u8; nvars];
        e[v] = 1;
        Monomial(e.into_boxed_slice())
    }

    pub fn exps(&self) -> &[u8] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_multilinear(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u8> = self
            .0
            .iter()
            .zip(other.0.iter())
            .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
            .collect();
        Monomial(exps.into_boxed_slice())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// Sparse polynomial: monomial -> nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePoly<C: Scalar> {
    nvars: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Scalar> SparsePoly<C> {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::unit(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    /// The variable α_{v+1} as a polynomial.
    pub fn var(v: usize, nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::var(v, nvars), C::one());
        p
    }

    /// Monomial Π_{v ∈ vars} α_{v+1}.
    pub fn monomial(vars: &[usize], nvars: usize) -> Self {
        let mut exps = vec![0u8; nvars];
        for &v in vars {
            exps[v] += 1;
        }
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::new(exps), C::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Constant term.
    pub fn constant_term(&self) -> C {
        self.coeff(&Monomial::unit(self.nvars))
    }

    /// Add `c` to the coefficient of `m`, dropping zeros.
    pub fn add_term(&mut self, m: Monomial, c: C) {
        debug_assert_eq!(m.exps().len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable universe mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.negate())
    }

    pub fn negate(&self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable universe mismatch");
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let mut out = Self::zero(self.nvars);
        for (m, a) in &self.terms {
            out.terms.insert(m.clone(), a.clone() * c.clone());
        }
        out
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u8 {
        self.terms
            .keys()
            .map(|m| m.exps()[var])
            .max()
            .unwrap_or(0)
    }

    pub fn is_multilinear(&self) -> bool {
        self.terms.keys().all(|m| m.is_multilinear())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// True when every coefficient is +1 or -1.
    pub fn coeffs_are_units(&self) -> bool {
        self.terms.values().all(|c| c.abs().is_one())
    }

    /// Variables that actually occur, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut used = vec![false; self.nvars];
        for m in self.terms.keys() {
            for (v, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    used[v] = true;
                }
            }
        }
        used.iter()
            .enumerate()
            .filter_map(|(v, &u)| u.then_some(v))
            .collect()
    }

    /// Set α_{var+1} := 0.
    pub fn substitute_zero(&self, var: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            if m.exps()[var] == 0 {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }

    /// Split f = f^e · α_e + f_e for a variable in which f is at most
    /// linear; returns (f^e, f_e). Errors when deg_e f > 1.
    pub fn linear_split(&self, var: usize) -> Result<(Self, Self)> {
        let mut cofactor = Self::zero(self.nvars);
        let mut rest = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            match m.exps()[var] {
                0 => rest.terms.insert(m.clone(), c.clone()),
                1 => {
                    let mut exps = m.exps().to_vec();
                    exps[var] = 0;
                    cofactor.terms.insert(Monomial::new(exps), c.clone())
                }
                _ => return Err(Error::NonLinear(var + 1)),
            };
        }
        Ok((cofactor, rest))
    }

    /// Resultant with respect to a variable both operands are linear in:
    /// [f, g]_e := f^e g_e - f_e g^e.
    pub fn resultant(&self, other: &Self, var: usize) -> Result<Self> {
        let (fc, fr) = self.linear_split(var)?;
        let (gc, gr) = other.linear_split(var)?;
        Ok(fc.mul(&gr).sub(&fr.mul(&gc)))
    }

    /// Cremona involution over an explicit variable set: every monomial is
    /// replaced by its complement within `vars`. Requires a multilinear
    /// homogeneous input supported on `vars`.
    pub fn cremona_over(&self, vars: &[usize]) -> Result<Self> {
        if !self.is_multilinear() {
            return Err(Error::NotMultilinear);
        }
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let in_vars = |v: usize| vars.contains(&v);
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut exps = vec![0u8; self.nvars];
            for &v in vars {
                exps[v] = 1 - m.exps()[v];
            }
            for (v, &e) in m.exps().iter().enumerate() {
                if e > 0 && !in_vars(v) {
                    return Err(Error::Precondition(format!(
                        "variable a{} outside the Cremona variable set",
                        v + 1
                    )));
                }
            }
            out.add_term(Monomial::new(exps), c.clone());
        }
        Ok(out)
    }

    /// Cremona involution over the first `nvars` variables.
    pub fn cremona(&self, nvars: usize) -> Result<Self> {
        let vars: Vec<usize> = (0..nvars).collect();
        self.cremona_over(&vars)
    }

    /// Evaluate at an integer point.
    pub fn eval(&self, point: &[C]) -> C {
        assert_eq!(point.len(), self.nvars);
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    t = t * point[v].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Canonical text form: terms in descending graded-lex order, explicit
    /// sign and coefficient, e.g. `+1*a1*a2 +1*a1*a3 +1*a2*a3`.
    pub fn to_canonical_string(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for (m, c) in self.terms.iter().rev() {
            let sign = if c.is_negative() { '-' } else { '+' };
            let mut s = format!("{}{}", sign, c.abs());
            for (v, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => s.push_str(&format!("*a{}", v + 1)),
                    _ => s.push_str(&format!("*a{}^{}", v + 1, e)),
                }
            }
            parts.push(s);
        }
        parts.join(" ")
    }

    /// JSON form: list of `[[exponents...], "coeff"]` pairs in descending
    /// graded-lex order. Coefficients are decimal strings so arbitrary
    /// precision survives the trip.
    pub fn to_json(&self) -> serde_json::Value {
        let items: Vec<serde_json::Value> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                serde_json::json!([
                    m.exps().iter().map(|&e| e as u64).collect::<Vec<u64>>(),
                    c.to_string()
                ])
            })
            .collect();
        serde_json::Value::Array(items)
    }
}

impl<C: Scalar> fmt::Display for SparsePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = SparsePoly<i64>;

    fn a(v: usize) -> P {
        P::var(v, 4)
    }

    #[test]
    fn arithmetic_basics() {
        let f = a(0).mul(&a(1)).add(&a(2)); // a1*a2 + a3
        assert_eq!(f.to_canonical_string(), "+1*a1*a2 +1*a3");
        let sq = a(0).mul(&a(0));
        assert_eq!(sq.to_canonical_string(), "+1*a1^2");
        let z = f.sub(&f);
        assert!(z.is_zero());
        assert_eq!(z.to_canonical_string(), "0");
    }

    #[test]
    fn linear_split_examples() {
        let f = a(0).mul(&a(1)).add(&a(2)); // a1*a2 + a3
        let (c, r) = f.linear_split(0).unwrap();
        assert_eq!(c, a(1));
        assert_eq!(r, a(2));
        let g = a(0).mul(&a(0));
        assert!(matches!(g.linear_split(0), Err(Error::NonLinear(1))));
    }

    #[test]
    fn substitute_zero_examples() {
        let f = a(0).add(&a(1));
        assert_eq!(f.substitute_zero(0), a(1));
    }

    #[test]
    fn resultant_examples() {
        let f = a(0);
        let g = a(1);
        assert_eq!(f.resultant(&g, 0).unwrap(), a(1));
        assert!(f.resultant(&f, 0).unwrap().is_zero());
    }

    #[test]
    fn cremona_is_an_involution() {
        // psi_C3 = a1 + a2 + a3 over 3 variables -> a2*a3 + a1*a3 + a1*a2
        let psi = SparsePoly::<i64>::var(0, 3)
            .add(&SparsePoly::var(1, 3))
            .add(&SparsePoly::var(2, 3));
        let phi = psi.cremona(3).unwrap();
        assert_eq!(phi.to_canonical_string(), "+1*a1*a2 +1*a1*a3 +1*a2*a3");
        assert_eq!(phi.cremona(3).unwrap(), psi);
    }

    #[test]
    fn cremona_rejects_inhomogeneous() {
        let f = a(0).add(&P::one(4));
        assert!(matches!(f.cremona(4), Err(Error::NotHomogeneous)));
        let g = a(0).mul(&a(0));
        assert!(matches!(g.cremona(4), Err(Error::NotMultilinear)));
    }

    #[test]
    fn eval_point() {
        let f = a(0).mul(&a(1)).add(&a(2)); // a1*a2 + a3
        assert_eq!(f.eval(&[2, 3, 5, 0]), 11);
    }

    #[test]
    fn json_round_shape() {
        let f = a(0).mul(&a(1));
        let v = f.to_json();
        assert_eq!(v, serde_json::json!([[[1, 1, 0, 0], "1"]]));
    }
}
