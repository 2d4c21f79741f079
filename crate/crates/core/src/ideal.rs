//! Monomial ideals in canonical form and their arithmetic.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{Exp, Monomial, Ring, VarSet};
use crate::poly::SparsePolynomial;

/// A monomial ideal stored by its minimal generating set `G(I)`.
///
/// Generators are pairwise non-dividing and sorted in graded-lex order. The
/// unit ideal is `[1]`, the zero ideal has no generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

/// Reduces a generator list to its minimal, canonically sorted form.
pub fn minimalize_monomials(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        // sorted by degree, so any proper divisor of g is already in `out`
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

impl MonomialIdeal {
    /// Builds `(gens)` after removing redundant generators.
    pub fn minimalize(ring: &Ring, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            if g.nvars() != ring.nvars() {
                return Err(Error::WrongArity {
                    expected: ring.nvars(),
                    found: g.nvars(),
                });
            }
        }
        Ok(Self::from_gens_unchecked(ring, gens))
    }

    pub(crate) fn from_gens_unchecked(ring: &Ring, gens: Vec<Monomial>) -> Self {
        MonomialIdeal {
            ring: ring.clone(),
            gens: minimalize_monomials(gens),
        }
    }

    pub fn from_exponents(ring: &Ring, exps: &[Vec<Exp>]) -> Result<Self> {
        Self::minimalize(
            ring,
            exps.iter().map(|e| Monomial::new(e.clone())).collect(),
        )
    }

    pub fn unit(ring: &Ring) -> Self {
        MonomialIdeal {
            ring: ring.clone(),
            gens: vec![ring.unit()],
        }
    }

    pub fn zero(ring: &Ring) -> Self {
        MonomialIdeal {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    pub fn principal(ring: &Ring, m: Monomial) -> Result<Self> {
        Self::minimalize(ring, vec![m])
    }

    /// The monomial prime generated by the given variables.
    pub fn prime(ring: &Ring, vars: &VarSet) -> Self {
        let n = ring.nvars();
        Self::from_gens_unchecked(ring, vars.iter().map(|i| Monomial::var(n, i)).collect())
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(ring: &Ring) -> Self {
        Self::prime(ring, &VarSet::all(ring.nvars()))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    pub fn max_degree(&self) -> u64 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    fn same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn check_monomial(&self, f: &Monomial) -> Result<()> {
        if f.nvars() == self.nvars() {
            Ok(())
        } else {
            Err(Error::WrongArity {
                expected: self.nvars(),
                found: f.nvars(),
            })
        }
    }

    pub(crate) fn has_monomial(&self, f: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(f))
    }

    pub fn contains_monomial(&self, f: &Monomial) -> Result<bool> {
        self.check_monomial(f)?;
        Ok(self.has_monomial(f))
    }

    /// A polynomial lies in a monomial ideal iff its whole support does.
    pub fn contains_poly(&self, f: &SparsePolynomial) -> Result<bool> {
        if f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        Ok(f.support().all(|u| self.has_monomial(u)))
    }

    /// Generator-wise containment `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        self.same_ring(other)?;
        Ok(self.subset_unchecked(other))
    }

    pub(crate) fn subset_unchecked(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.has_monomial(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.sum_unchecked(other))
    }

    pub(crate) fn sum_unchecked(&self, other: &MonomialIdeal) -> Self {
        let gens = self.gens.iter().chain(other.gens.iter()).cloned().collect();
        Self::from_gens_unchecked(&self.ring, gens)
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<Self> {
        self.same_ring(other)?;
        let top =
            |i: &MonomialIdeal, k: usize| i.gens.iter().map(|g| g.exp(k) as u64).max().unwrap_or(0);
        if (0..self.nvars()).any(|k| top(self, k) + top(other, k) > Exp::MAX as u64) {
            return Err(Error::ExponentOverflow);
        }
        Ok(self.product_unchecked(other))
    }

    pub(crate) fn product_unchecked(&self, other: &MonomialIdeal) -> Self {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        Self::from_gens_unchecked(&self.ring, gens)
    }

    /// `I^m` for `m >= 1`; `I^0 = R` is left to the caller.
    pub fn power(&self, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroPower);
        }
        let top = self
            .gens
            .iter()
            .map(|g| g.max_exp() as u64)
            .max()
            .unwrap_or(0);
        if top * m as u64 > Exp::MAX as u64 {
            return Err(Error::ExponentOverflow);
        }
        Ok(self.power_unchecked(m))
    }

    pub(crate) fn power_unchecked(&self, m: u32) -> Self {
        let mut acc = self.clone();
        for _ in 1..m {
            acc = acc.product_unchecked(self);
        }
        acc
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.intersect_unchecked(other))
    }

    pub(crate) fn intersect_unchecked(&self, other: &MonomialIdeal) -> Self {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Self::from_gens_unchecked(&self.ring, gens)
    }

    /// Intersection of a nonempty family; `None` for an empty family.
    pub(crate) fn intersect_all<'a, I>(ideals: I) -> Option<Self>
    where
        I: IntoIterator<Item = &'a MonomialIdeal>,
    {
        let mut it = ideals.into_iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, q| acc.intersect_unchecked(q)))
    }

    /// `I : v` for a single monomial.
    pub fn colon_monomial(&self, v: &Monomial) -> Result<Self> {
        self.check_monomial(v)?;
        Ok(self.colon_monomial_unchecked(v))
    }

    fn colon_monomial_unchecked(&self, v: &Monomial) -> Self {
        Self::from_gens_unchecked(
            &self.ring,
            self.gens.iter().map(|u| u.quotient_saturating(v)).collect(),
        )
    }

    /// `I : J = ∩_{v ∈ G(J)} (I : v)`.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<Self> {
        self.same_ring(other)?;
        if other.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let parts: Vec<MonomialIdeal> = other
            .gens
            .iter()
            .map(|v| self.colon_monomial_unchecked(v))
            .collect();
        Ok(Self::intersect_all(&parts).expect("nonempty generator list"))
    }

    /// `√I`; the radical of the zero ideal is itself.
    pub fn radical(&self) -> Self {
        Self::from_gens_unchecked(
            &self.ring,
            self.gens.iter().map(Monomial::squarefree_part).collect(),
        )
    }

    /// Variables occurring in some generator.
    pub fn support(&self) -> VarSet {
        let mut v: Vec<usize> = self
            .gens
            .iter()
            .flat_map(|g| g.support().as_slice().to_vec())
            .collect();
        v.sort_unstable();
        v.dedup();
        VarSet::from_sorted(v)
    }

    /// Writes `I = h * J` with `h` the gcd of `G(I)`.
    pub fn factor_out_gcd(&self) -> Result<(Monomial, MonomialIdeal)> {
        let first = self.gens.first().ok_or(Error::ZeroIdeal)?;
        let h = self.gens[1..]
            .iter()
            .fold(first.clone(), |acc, g| acc.gcd(g));
        let quotient: Vec<Monomial> = self
            .gens
            .iter()
            .map(|g| g.quotient_saturating(&h))
            .collect();
        // dividing by a common factor preserves minimality and order
        let j = MonomialIdeal::from_gens_unchecked(&self.ring, quotient);
        Ok((h, j))
    }

    /// `f * I` for a monomial `f`.
    pub fn shift(&self, f: &Monomial) -> Result<Self> {
        self.check_monomial(f)?;
        let gens: Option<Vec<Monomial>> = self.gens.iter().map(|g| g.checked_mul(f)).collect();
        Ok(Self::from_gens_unchecked(
            &self.ring,
            gens.ok_or(Error::ExponentOverflow)?,
        ))
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self.gens.iter().map(|g| self.ring.render(g)).collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.ring, self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_ideal;

    fn xyz() -> Ring {
        Ring::new(&["x", "y", "z"]).unwrap()
    }
    fn xy() -> Ring {
        Ring::new(&["x", "y"]).unwrap()
    }
    fn id(r: &Ring, s: &str) -> MonomialIdeal {
        parse_ideal(s, Some(r)).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        let r = xy();
        assert_eq!(
            id(&r, "x^2, x*y, x^2*y^2").gens(),
            id(&r, "x^2, x*y").gens()
        );
        assert!(id(&r, "1, x").is_unit());
        let r = xyz();
        let i = id(&r, "x^4, y^3, z^2, x*y, y^2*z, x^5*y");
        assert_eq!(i, id(&r, "x^4, y^3, z^2, x*y, y^2*z"));
        assert_eq!(i.gens().len(), 5);
        assert!(MonomialIdeal::minimalize(&r, vec![]).unwrap().is_zero());
    }

    #[test]
    fn membership() {
        let r = xy();
        let i = id(&r, "x^2, x*y");
        assert!(i.contains_monomial(&Monomial::new(vec![3, 1])).unwrap());
        assert!(!i.contains_monomial(&Monomial::new(vec![0, 5])).unwrap());
        let r = xyz();
        let i = id(&r, "x^4, y^3, z^2, x*y, y^2*z");
        assert!(i.contains_monomial(&Monomial::new(vec![1, 2, 1])).unwrap());
        assert!(matches!(
            i.contains_monomial(&Monomial::new(vec![1])),
            Err(Error::WrongArity { .. })
        ));
    }

    #[test]
    fn sum_product_power() {
        let r = xy();
        assert_eq!(id(&r, "x").sum(&id(&r, "y")).unwrap(), id(&r, "x, y"));
        let i = id(&r, "x^3, x*y, y^2");
        let j = id(&r, "x^2, x*y, y^3");
        assert_eq!(
            i.product(&j).unwrap(),
            id(&r, "x^5, x^3*y, x^2*y^2, x*y^3, y^5")
        );
        assert_eq!(id(&r, "x, y").power(2).unwrap(), id(&r, "x^2, x*y, y^2"));
        assert_eq!(i.power(1).unwrap(), i);
        assert_eq!(i.power(0), Err(Error::ZeroPower));
        let big = MonomialIdeal::from_exponents(&r, &[vec![Exp::MAX / 2 + 1, 0]]).unwrap();
        assert_eq!(big.power(2), Err(Error::ExponentOverflow));
    }

    #[test]
    fn intersections() {
        let r = xy();
        assert_eq!(
            id(&r, "x, y^2").intersect(&id(&r, "x^2, y")).unwrap(),
            id(&r, "x^2, x*y, y^2")
        );
        let i = id(&r, "x^2, x*y");
        assert_eq!(i.intersect(&MonomialIdeal::unit(&r)).unwrap(), i);
        assert_eq!(id(&r, "x").intersect(&id(&r, "y")).unwrap(), id(&r, "x*y"));
    }

    #[test]
    fn colon_examples() {
        let r = xy();
        assert_eq!(
            id(&r, "x^2, x*y").colon(&id(&r, "x")).unwrap(),
            id(&r, "x, y")
        );
        let i = id(&r, "x^3, x*y, y^2");
        assert!(i.colon(&i).unwrap().is_unit());
        assert!(i.colon(&id(&r, "x^4, y^3")).unwrap().is_unit());
        assert_eq!(i.colon(&MonomialIdeal::zero(&r)), Err(Error::ZeroIdeal));
    }

    #[test]
    fn radicals() {
        let r = xy();
        assert_eq!(id(&r, "x^4, y^3").radical(), id(&r, "x, y"));
        assert_eq!(id(&r, "x^2*y^3").radical(), id(&r, "x*y"));
        let r = xyz();
        assert_eq!(
            id(&r, "x^4, y^3, z^2, x*y, y^2*z").radical(),
            id(&r, "x, y, z")
        );
        assert!(MonomialIdeal::zero(&r).radical().is_zero());
    }

    #[test]
    fn gcd_factoring() {
        let r = xyz();
        let i = id(&r, "x^3*y^4, x^2*y^5, x^4*y^3*z^2, x^5*y^3*z, x^2*y^4*z^2");
        let (h, j) = i.factor_out_gcd().unwrap();
        assert_eq!(h, Monomial::new(vec![2, 3, 0]));
        assert_eq!(j, id(&r, "x*y, y^2, x^2*z^2, x^3*z, y*z^2"));
        let (h, j) = id(&r, "x^2*y").factor_out_gcd().unwrap();
        assert_eq!(h, Monomial::new(vec![2, 1, 0]));
        assert!(j.is_unit());
        let (h, j) = id(&r, "x, y").factor_out_gcd().unwrap();
        assert!(h.is_one());
        assert_eq!(j, id(&r, "x, y"));
        assert_eq!(
            MonomialIdeal::zero(&r).factor_out_gcd(),
            Err(Error::ZeroIdeal)
        );
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = id(&xy(), "x");
        let b = id(&xyz(), "x");
        assert_eq!(a.sum(&b), Err(Error::RingMismatch));
        assert_eq!(a.intersect(&b), Err(Error::RingMismatch));
    }
}
