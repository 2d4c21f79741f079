//! Witness certificates for lower bounds on the absorbing degree.
//!
//! A certificate is a list of factors `f_1, ..., f_t` whose product lies in
//! the target ideal while every product with one factor removed does not.
//! Such a list shows the target is not `(t-1)`-absorbing, so `ω ≥ t`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::decomposition::{standard_decomposition, IrreducibleComponent, PrimaryComponent};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, VarSet};
use crate::poly::SparsePolynomial;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WitnessCertificate {
    pub factors: Vec<SparsePolynomial>,
    pub target: MonomialIdeal,
}

/// JSON form: the factors as polynomial strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub factors: Vec<String>,
}

impl WitnessCertificate {
    pub fn new(factors: Vec<SparsePolynomial>, target: MonomialIdeal) -> Self {
        WitnessCertificate { factors, target }
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Same factors, another target.
    pub fn retarget(&self, target: &MonomialIdeal) -> Self {
        WitnessCertificate {
            factors: self.factors.clone(),
            target: target.clone(),
        }
    }

    /// Product in the target, every one-factor deletion outside it.
    ///
    /// Products are taken modulo the target; the residue is then tested
    /// with [`MonomialIdeal::contains_poly`].
    pub fn verify(&self) -> bool {
        self.verify_detailed().is_ok()
    }

    /// Like [`verify`](Self::verify) but names the failing check.
    pub fn verify_detailed(&self) -> std::result::Result<(), String> {
        if self.factors.is_empty() {
            return Err("certificate has no factors".into());
        }
        let ring = self.target.ring();
        if self.factors.iter().any(|f| f.ring() != ring) {
            return Err("factor ring differs from target ring".into());
        }
        let full = product_mod(&self.factors, None, &self.target);
        if !self.target.contains_poly(&full).expect("same ring") {
            return Err("product is not in the target".into());
        }
        let mut checked: HashSet<&SparsePolynomial> = HashSet::new();
        for (j, f) in self.factors.iter().enumerate() {
            // deleting equal factors gives equal products
            if !checked.insert(f) {
                continue;
            }
            let rest = product_mod(&self.factors, Some(j), &self.target);
            if self.target.contains_poly(&rest).expect("same ring") {
                return Err(format!(
                    "product without factor {j} ({f}) is still in the target"
                ));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> CertificateJson {
        CertificateJson {
            factors: self.factors.iter().map(ToString::to_string).collect(),
        }
    }

    /// Certificate for `h * target` from one for `target`.
    ///
    /// Factors of `x | h` are prepended. Before that the old factors are
    /// normalised so their product does not lie in `x * target` for any
    /// `x | h`: whenever it does, some factor is divisible by `x` and is
    /// replaced by its quotient, which keeps the certificate valid and
    /// lowers its degree.
    pub fn shift(&self, h: &Monomial) -> WitnessCertificate {
        let ring = self.target.ring().clone();
        let mut factors = self.factors.clone();
        let vars: Vec<usize> = h.support().iter().collect();
        'outer: loop {
            for &x in &vars {
                let x_target = self.target.shift(&ring.var(x)).expect("arity");
                if x_target
                    .contains_poly(&product_mod(&factors, None, &x_target))
                    .expect("same ring")
                {
                    let k = factors
                        .iter()
                        .position(|f| f.divisible_by_var(x))
                        .expect("x divides some factor");
                    factors[k] = factors[k].div_monomial(&ring.var(x)).expect("divisible");
                    continue 'outer;
                }
            }
            break;
        }
        let mut out = Vec::with_capacity(h.degree() as usize + factors.len());
        for &x in &vars {
            for _ in 0..h.exp(x) {
                out.push(SparsePolynomial::var(&ring, x));
            }
        }
        out.extend(factors);
        WitnessCertificate {
            factors: out,
            target: self.target.shift(h).expect("arity"),
        }
    }
}

/// Product of the factors (optionally skipping one) modulo `ideal`.
fn product_mod(
    factors: &[SparsePolynomial],
    skip: Option<usize>,
    ideal: &MonomialIdeal,
) -> SparsePolynomial {
    let ring = ideal.ring();
    let mut acc = SparsePolynomial::one(ring)
        .reduce_mod(ideal)
        .expect("same ring");
    for (k, f) in factors.iter().enumerate() {
        if Some(k) == skip {
            continue;
        }
        if acc.is_zero() {
            break;
        }
        acc = acc.mul_mod(f, ideal).expect("same ring");
    }
    acc
}

/// `f = x_{i_1} ... ` one variable factor per unit of exponent: the
/// witness for `ω(fR) ≥ deg f`.
pub fn principal_witness(ideal: &MonomialIdeal) -> Result<WitnessCertificate> {
    if !ideal.is_principal() || ideal.is_unit() {
        return Err(Error::Precondition(
            "principal witness needs a proper principal ideal".into(),
        ));
    }
    let ring = ideal.ring();
    let g = &ideal.gens()[0];
    let factors = (0..ring.nvars())
        .flat_map(|i| std::iter::repeat_n(i, g.exp(i) as usize))
        .map(|i| SparsePolynomial::var(ring, i))
        .collect();
    Ok(WitnessCertificate::new(factors, ideal.clone()))
}

/// Witness for ideals whose components have pairwise incomparable primes.
///
/// For each component an irreducible part `T_i = (x_{i_j}^{a_j})` of
/// maximal Noether exponent is chosen; the factors are `Σ_l x_{i_l}` once
/// and `f_{i,j} = x_{i_j} + Σ_{t≠j} x_{i_t}^2` repeated `a_j - 1` times,
/// `Σ e(Q_i)` factors in all. The target is the intersection.
pub fn sum_witness(components: &[PrimaryComponent]) -> Result<WitnessCertificate> {
    let first = components
        .first()
        .ok_or_else(|| Error::Precondition("no components".into()))?;
    for (i, a) in components.iter().enumerate() {
        for b in &components[i + 1..] {
            if a.prime().comparable(b.prime()) {
                let ring = a.ideal().ring();
                return Err(Error::ComparablePrimes(format!(
                    "{} and {}",
                    a.prime().render(ring),
                    b.prime().render(ring)
                )));
            }
        }
    }
    let ring = first.ideal().ring().clone();
    let n = ring.nvars();
    let mut factors = Vec::new();
    for q in components {
        let powers = q.extremal_part().powers();
        let vars: Vec<usize> = powers.iter().map(|p| p.0).collect();
        factors.push(SparsePolynomial::sum_of_monomials(
            &ring,
            vars.iter().map(|&i| Monomial::var(n, i)),
        ));
        for &(j, a) in &powers {
            let f = SparsePolynomial::sum_of_monomials(
                &ring,
                vars.iter()
                    .map(|&t| Monomial::pure_power(n, t, if t == j { 1 } else { 2 })),
            );
            for _ in 1..a {
                factors.push(f.clone());
            }
        }
    }
    let target = MonomialIdeal::intersect_all(components.iter().map(PrimaryComponent::ideal))
        .expect("nonempty");
    Ok(WitnessCertificate::new(factors, target))
}

/// Witness `x_{i_1}^{a_1-1} ... x_{i_l}^{a_l-1} (x_{i_1} + ... + x_{i_l})`
/// for `ω(I) ≥ e(T)`, split into its `e(T)` factors.
///
/// `top` must be an irreducible component of `ideal` whose radical
/// contains every associated prime; `g` must lie in the intersection of
/// the remaining components, outside `top`, and involve only `top`'s
/// variables.
pub fn top_component_witness(
    ideal: &MonomialIdeal,
    top: &IrreducibleComponent,
    g: &Monomial,
) -> Result<WitnessCertificate> {
    let std = standard_decomposition(ideal)?;
    if !std.components.contains(top) {
        return Err(Error::NoQualifyingWitness(format!(
            "{} is not a standard component",
            top.ideal()
        )));
    }
    let prime = top.prime();
    if let Some(bad) = std
        .components
        .iter()
        .map(IrreducibleComponent::prime)
        .find(|p| !p.is_subset(&prime))
    {
        return Err(Error::ComparablePrimes(format!(
            "{} is not contained in {}",
            bad.render(ideal.ring()),
            prime.render(ideal.ring())
        )));
    }
    if g.nvars() != ideal.nvars() {
        return Err(Error::WrongArity {
            expected: ideal.nvars(),
            found: g.nvars(),
        });
    }
    if !g.support().is_subset(&prime) || top.contains(g) {
        return Err(Error::NoQualifyingWitness(
            "g must use the component's variables and lie outside it".into(),
        ));
    }
    let cert = top_component_factors(ideal, top);
    let full = product_mod(&cert.factors, None, ideal);
    if !ideal.contains_poly(&full)? {
        return Err(Error::NoQualifyingWitness(
            "g does not lie in the other components".into(),
        ));
    }
    Ok(cert)
}

fn top_component_factors(ideal: &MonomialIdeal, top: &IrreducibleComponent) -> WitnessCertificate {
    let ring = ideal.ring();
    let n = ring.nvars();
    let powers = top.powers();
    let mut factors = Vec::new();
    for &(i, a) in &powers {
        for _ in 1..a {
            factors.push(SparsePolynomial::var(ring, i));
        }
    }
    factors.push(SparsePolynomial::sum_of_monomials(
        ring,
        powers.iter().map(|&(i, _)| Monomial::var(n, i)),
    ));
    WitnessCertificate::new(factors, ideal.clone())
}

/// Picks `g` for [`top_component_witness`]: the first generator (graded-lex) of
/// `others` lying outside `top`; `1` when there are no other components.
pub fn choose_top_multiplier(
    others: Option<&MonomialIdeal>,
    top: &IrreducibleComponent,
) -> Option<Monomial> {
    match others {
        None => Some(top.ideal().ring().unit()),
        Some(rest) => rest.gens().iter().find(|g| !top.contains(g)).cloned(),
    }
}

/// Variables of a prime as a linear form `Σ x_j`.
pub fn prime_sum(ideal: &MonomialIdeal, prime: &VarSet) -> SparsePolynomial {
    let ring = ideal.ring();
    SparsePolynomial::sum_of_monomials(ring, prime.iter().map(|i| ring.var(i)))
}
