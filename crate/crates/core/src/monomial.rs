//! Rings, monomials and variable sets.
//!
//! A [`Monomial`] is a bare exponent vector; the [`Ring`] it belongs to is
//! carried by the containers ([`MonomialIdeal`](crate::MonomialIdeal),
//! [`SparsePolynomial`](crate::SparsePolynomial)), which check ring agreement
//! at their public boundary. Monomial-level operations require equal lengths
//! and panic otherwise.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Exponent type used throughout the crate.
pub type Exp = u32;

/// A polynomial ring `k[x_1, ..., x_n]` identified by its variable names.
///
/// The coefficient field is not represented: everything computed here is
/// independent of it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Arc<[String]>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidRing(
                "a ring needs at least one variable".into(),
            ));
        }
        let names: Vec<String> = names
            .iter()
            .map(|s| s.as_ref().trim().to_string())
            .collect();
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidRing(format!(
                    "`{name}` is not a valid variable name"
                )));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidRing(format!("duplicate variable `{name}`")));
            }
        }
        Ok(Ring {
            names: names.into(),
        })
    }

    /// `x, y, z` (truncated) for up to three variables, `x1, ..., xn` beyond.
    pub fn with_default_names(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRing(
                "a ring needs at least one variable".into(),
            ));
        }
        if n <= 3 {
            Ring::new(&["x", "y", "z"][..n])
        } else {
            let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
            Ring::new(&names)
        }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn unit(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    pub fn var(&self, i: usize) -> Monomial {
        Monomial::var(self.nvars(), i)
    }

    /// Renders a monomial with this ring's variable names, e.g. `x^2*y`.
    pub fn render(&self, m: &Monomial) -> String {
        assert_eq!(m.nvars(), self.nvars(), "monomial arity differs from ring");
        let parts: Vec<String> = m
            .exps()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    self.names[i].clone()
                } else {
                    format!("{}^{}", self.names[i], e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring[{}]", self.names.join(","))
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// An exponent vector `x_1^{a_1} ... x_n^{a_n}`.
///
/// Ordered graded-lexicographically: lower total degree first, and within a
/// degree the vector with the larger leading exponent first (`x*y < z^2`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[Exp]>,
}

impl Monomial {
    pub fn new(exps: Vec<Exp>) -> Self {
        Monomial {
            exps: exps.into_boxed_slice(),
        }
    }

    pub fn one(n: usize) -> Self {
        Monomial::new(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial::new(e)
    }

    pub fn pure_power(n: usize, i: usize, d: Exp) -> Self {
        let mut e = vec![0; n];
        e[i] = d;
        Monomial::new(e)
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[Exp] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> Exp {
        self.exps[i]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> VarSet {
        VarSet::from_sorted(
            self.exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i)
                .collect(),
        )
    }

    /// `Some(i)` when this is `x_i^d` with `d > 0`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    fn check_arity(&self, other: &Monomial) {
        assert_eq!(
            self.nvars(),
            other.nvars(),
            "monomials from rings of different size"
        );
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.check_arity(other);
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.check_arity(other);
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.check_arity(other);
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }

    pub fn checked_mul(&self, other: &Monomial) -> Option<Monomial> {
        self.check_arity(other);
        let exps: Option<Vec<Exp>> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| a.checked_add(b))
            .collect();
        exps.map(Monomial::new)
    }

    /// Panics on exponent overflow; see [`Monomial::checked_mul`].
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.checked_mul(other).expect("exponent overflow")
    }

    /// Exponent-wise `max(a - b, 0)`: the generator of `(self) : (other)`.
    pub fn quotient_saturating(&self, other: &Monomial) -> Monomial {
        self.check_arity(other);
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        )
    }

    /// Exact quotient; `None` unless `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(self.quotient_saturating(other))
        } else {
            None
        }
    }

    /// Every positive exponent clamped to 1.
    pub fn squarefree_part(&self) -> Monomial {
        Monomial::new(self.exps.iter().map(|&e| e.min(1)).collect())
    }

    pub fn max_exp(&self) -> Exp {
        self.exps.iter().copied().max().unwrap_or(0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

/// A set of variable indices, kept sorted. Stands for the monomial prime
/// generated by those variables.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VarSet(Vec<usize>);

impl VarSet {
    pub fn from_sorted(v: Vec<usize>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        VarSet(v)
    }

    pub fn new(mut v: Vec<usize>) -> Self {
        v.sort_unstable();
        v.dedup();
        VarSet(v)
    }

    pub fn all(n: usize) -> Self {
        VarSet((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn is_subset(&self, other: &VarSet) -> bool {
        self.0.iter().all(|&i| other.contains(i))
    }

    pub fn is_strict_subset(&self, other: &VarSet) -> bool {
        self.len() < other.len() && self.is_subset(other)
    }

    pub fn comparable(&self, other: &VarSet) -> bool {
        self.is_subset(other) || other.is_subset(self)
    }

    pub fn render(&self, ring: &Ring) -> String {
        let names: Vec<&str> = self.0.iter().map(|&i| ring.name(i)).collect();
        format!("({})", names.join(","))
    }
}

/// Primes sort by height first, then by their index lists.
impl Ord for VarSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for VarSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[Exp]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn divisibility() {
        assert!(m(&[1, 1]).divides(&m(&[2, 3])));
        assert!(!m(&[2, 0]).divides(&m(&[1, 1])));
        assert!(m(&[0, 0]).divides(&m(&[5, 7])));
    }

    #[test]
    fn lcm_is_componentwise_max() {
        assert_eq!(m(&[2, 0]).lcm(&m(&[0, 1])), m(&[2, 1]));
        assert_eq!(m(&[1, 0]).lcm(&m(&[2, 0])), m(&[2, 0]));
        assert_eq!(m(&[0, 2]).lcm(&m(&[2, 0])), m(&[2, 2]));
    }

    #[test]
    fn graded_lex_order() {
        let mut v = vec![
            m(&[4, 0, 0]),
            m(&[0, 0, 2]),
            m(&[1, 1, 0]),
            m(&[0, 2, 1]),
            m(&[0, 3, 0]),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                m(&[1, 1, 0]),
                m(&[0, 0, 2]),
                m(&[0, 3, 0]),
                m(&[0, 2, 1]),
                m(&[4, 0, 0])
            ]
        );
    }

    #[test]
    #[should_panic(expected = "different size")]
    fn arity_mismatch_panics() {
        m(&[1]).divides(&m(&[1, 1]));
    }

    #[test]
    fn ring_validation() {
        assert!(Ring::new(&["x", "x"]).is_err());
        assert!(Ring::new::<&str>(&[]).is_err());
        assert!(Ring::new(&["1x"]).is_err());
        let r = Ring::with_default_names(4).unwrap();
        assert_eq!(r.names(), &["x1", "x2", "x3", "x4"]);
        assert_eq!(r.render(&m(&[2, 0, 1, 0])), "x1^2*x3");
    }

    #[test]
    fn varset_order_and_subsets() {
        let a = VarSet::new(vec![1, 0]);
        let b = VarSet::new(vec![0, 1, 2]);
        assert!(a.is_strict_subset(&b));
        assert!(a < b);
        assert!(!VarSet::new(vec![1, 2]).comparable(&VarSet::new(vec![0, 1])));
    }
}
