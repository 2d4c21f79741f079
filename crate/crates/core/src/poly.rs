//! Sparse polynomials with exact rational coefficients.
//!
//! Only what witness verification needs: sums, products, products taken
//! modulo a monomial ideal, and supports.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, Ring};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparsePolynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, BigRational>,
}

impl SparsePolynomial {
    pub fn zero(ring: &Ring) -> Self {
        SparsePolynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::monomial(ring, ring.unit())
    }

    pub fn monomial(ring: &Ring, m: Monomial) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial arity differs from ring");
        let mut terms = BTreeMap::new();
        terms.insert(m, BigRational::one());
        SparsePolynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Self::monomial(ring, ring.var(i))
    }

    /// Sum of the given monomials, each with coefficient 1.
    pub fn sum_of_monomials(ring: &Ring, monomials: impl IntoIterator<Item = Monomial>) -> Self {
        let mut p = Self::zero(ring);
        for m in monomials {
            p.add_term(m, BigRational::one());
        }
        p
    }

    pub fn from_terms(
        ring: &Ring,
        terms: impl IntoIterator<Item = (Monomial, BigRational)>,
    ) -> Result<Self> {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            if m.nvars() != ring.nvars() {
                return Err(Error::WrongArity {
                    expected: ring.nvars(),
                    found: m.nvars(),
                });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `supp(f)`, in ascending graded-lex order.
    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn add(&self, other: &SparsePolynomial) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &SparsePolynomial) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(self.mul_filtered(other, |_| true))
    }

    /// Product modulo a monomial ideal: terms landing in `ideal` are dropped.
    ///
    /// Dropping is a ring homomorphism onto the standard monomials of
    /// `R / ideal`, so the result is zero iff the true product lies in
    /// `ideal`.
    pub fn mul_mod(&self, other: &SparsePolynomial, ideal: &MonomialIdeal) -> Result<Self> {
        if self.ring != other.ring || &self.ring != ideal.ring() {
            return Err(Error::RingMismatch);
        }
        Ok(self.mul_filtered(other, |m| !ideal.has_monomial(m)))
    }

    /// Remainder modulo a monomial ideal.
    pub fn reduce_mod(&self, ideal: &MonomialIdeal) -> Result<Self> {
        if &self.ring != ideal.ring() {
            return Err(Error::RingMismatch);
        }
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| !ideal.has_monomial(m))
            .map(|(m, c)| (m.clone(), c.clone()));
        Ok(SparsePolynomial {
            ring: self.ring.clone(),
            terms: terms.collect(),
        })
    }

    fn mul_filtered(&self, other: &SparsePolynomial, keep: impl Fn(&Monomial) -> bool) -> Self {
        let mut out = Self::zero(&self.ring);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let m = a.mul(b);
                if keep(&m) {
                    out.add_term(m, ca * cb);
                }
            }
        }
        out
    }

    /// Exact division by a monomial, when it divides every term.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (t, c) in &self.terms {
            terms.insert(t.div(m)?, c.clone());
        }
        Some(SparsePolynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// True when `x_var` divides every term.
    pub fn divisible_by_var(&self, var: usize) -> bool {
        !self.is_zero() && self.terms.keys().all(|t| t.exp(var) > 0)
    }

    /// Constant polynomials (including zero).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }
}

impl fmt::Display for SparsePolynomial {
    /// Terms by descending degree, `x`-heavy first within a degree, e.g. `x*y^2 + 3/2*z - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut order: Vec<_> = self.terms.iter().collect();
        order.sort_by(|(a, _), (b, _)| {
            b.degree()
                .cmp(&a.degree())
                .then_with(|| b.exps().cmp(a.exps()))
        });
        for (k, (m, c)) in order.into_iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let a = c.abs();
            let mono = self.ring.render(m);
            if m.is_one() {
                write!(f, "{}", fmt_rational(&a))?;
            } else if a.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{}*{}", fmt_rational(&a), mono)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.denom() == &BigInt::one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
