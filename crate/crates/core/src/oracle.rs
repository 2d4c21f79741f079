//! Slow, independent checkers for the closed forms.
//!
//! Nothing here uses decompositions or the dispatcher. The searches are
//! one-sided: a find proves a lower bound on `ω`, a miss proves nothing.

use crate::certificate::WitnessCertificate;
use crate::decomposition::IrreducibleComponent;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Exp, Monomial, Ring};
use crate::poly::SparsePolynomial;

/// The least `μ ≥ 1` with `(√I)^μ ⊆ I`, found by trying `μ = 1, 2, ...`.
pub fn brute_noether(ideal: &MonomialIdeal) -> Result<u64> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let rad = ideal.radical();
    let mut power = rad.clone();
    let mut mu = 1;
    loop {
        if power.is_subset_of(ideal)? {
            return Ok(mu);
        }
        power = power.product(&rad)?;
        mu += 1;
    }
}

/// Checks a certificate with full (unreduced) products: the product of all
/// factors is in the target and no product omitting one factor is.
pub fn verify_certificate(c: &WitnessCertificate) -> bool {
    let target = &c.target;
    let factors = &c.factors;
    if factors.is_empty() || factors.iter().any(|f| f.ring() != target.ring()) {
        return false;
    }
    let product = |skip: Option<usize>| {
        factors
            .iter()
            .enumerate()
            .filter(|(j, _)| Some(*j) != skip)
            .fold(SparsePolynomial::one(target.ring()), |acc, (_, f)| {
                acc.mul(f).expect("same ring")
            })
    };
    let inside = |p: &SparsePolynomial| target.contains_poly(p).expect("same ring");
    inside(&product(None)) && (0..factors.len()).all(|j| !inside(&product(Some(j))))
}

/// Nonconstant monomials of degree at most `deg_cap`, in graded-lex order.
fn monomial_pool(ring: &Ring, deg_cap: u32) -> Vec<Monomial> {
    let n = ring.nvars();
    let mut out = Vec::new();
    fn fill(n: usize, i: usize, left: u32, cur: &mut Vec<Exp>, out: &mut Vec<Monomial>) {
        if i == n {
            if cur.iter().any(|&e| e > 0) {
                out.push(Monomial::new(cur.clone()));
            }
            return;
        }
        for e in 0..=left {
            cur.push(e);
            fill(n, i + 1, left - e, cur, out);
            cur.pop();
        }
    }
    fill(n, 0, deg_cap, &mut Vec::with_capacity(n), &mut out);
    out.sort();
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSearch {
    /// Largest `t` for which a violation was found (0 if none).
    pub best: u64,
    pub certificate: Option<WitnessCertificate>,
    /// True when the search for `best + 1` factors ran to completion
    /// without a find; false when it stopped at `t_max`.
    pub exhausted: bool,
}

/// Searches products of `t` monomials (each of degree at most `deg_cap`)
/// lying in `I` with every `t - 1` sub-product outside `I`, for increasing
/// `t` up to `t_max`. The answer is a lower bound on `ω(I)`.
pub fn monomial_absorbing_lower_bound(
    ideal: &MonomialIdeal,
    t_max: u32,
    deg_cap: u32,
) -> Result<MonomialSearch> {
    if t_max == 0 || deg_cap == 0 {
        return Err(Error::Precondition(
            "t_max and deg_cap must be positive".into(),
        ));
    }
    if !ideal.is_proper_nonzero() {
        return Err(Error::Precondition(
            "the search needs a proper nonzero ideal".into(),
        ));
    }
    let pool = monomial_pool(ideal.ring(), deg_cap);
    let mut best = MonomialSearch {
        best: 0,
        certificate: None,
        exhausted: false,
    };
    for t in 1..=t_max as usize {
        let mut chosen = Vec::with_capacity(t);
        let one = ideal.ring().unit();
        match monomial_dfs(ideal, &pool, t, 0, &one, &mut chosen) {
            Some(tuple) => {
                let ring = ideal.ring();
                let factors = tuple
                    .iter()
                    .map(|&k| SparsePolynomial::monomial(ring, pool[k].clone()))
                    .collect();
                best.best = t as u64;
                best.certificate = Some(WitnessCertificate::new(factors, ideal.clone()));
            }
            None => {
                best.exhausted = true;
                return Ok(best);
            }
        }
    }
    Ok(best)
}

/// Nondecreasing index tuples; a prefix already in `I` is abandoned since
/// dropping any later factor would keep the product in `I`.
fn monomial_dfs(
    ideal: &MonomialIdeal,
    pool: &[Monomial],
    t: usize,
    start: usize,
    prefix: &Monomial,
    chosen: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    for k in start..pool.len() {
        let p = prefix.mul(&pool[k]);
        let inside = ideal.has_monomial(&p);
        chosen.push(k);
        if chosen.len() == t {
            if inside
                && chosen.iter().all(|&j| {
                    !ideal.has_monomial(&p.div(&pool[j]).expect("factor divides product"))
                })
            {
                return Some(chosen.clone());
            }
        } else if !inside {
            if let Some(found) = monomial_dfs(ideal, pool, t, k, &p, chosen) {
                return Some(found);
            }
        }
        chosen.pop();
    }
    None
}

/// Looks for a `t`-factor violation among monomials and sums of two
/// distinct monomials (unit coefficients, degrees at most `deg_cap`).
/// A returned certificate has been verified.
pub fn binomial_absorbing_search(
    ideal: &MonomialIdeal,
    t: u32,
    deg_cap: u32,
) -> Result<Option<WitnessCertificate>> {
    if t == 0 || deg_cap == 0 {
        return Err(Error::Precondition("t and deg_cap must be positive".into()));
    }
    if !ideal.is_proper_nonzero() {
        return Err(Error::Precondition(
            "the search needs a proper nonzero ideal".into(),
        ));
    }
    let ring = ideal.ring();
    let monos = monomial_pool(ring, deg_cap);
    let mut pool: Vec<SparsePolynomial> = monos
        .iter()
        .map(|m| SparsePolynomial::monomial(ring, m.clone()))
        .collect();
    for (i, a) in monos.iter().enumerate() {
        for b in &monos[i + 1..] {
            pool.push(SparsePolynomial::sum_of_monomials(
                ring,
                [a.clone(), b.clone()],
            ));
        }
    }
    let mut chosen = Vec::with_capacity(t as usize);
    let found = poly_dfs(
        ideal,
        &pool,
        t as usize,
        0,
        &SparsePolynomial::one(ring),
        &mut chosen,
    );
    Ok(found.map(|tuple| {
        WitnessCertificate::new(
            tuple.iter().map(|&k| pool[k].clone()).collect(),
            ideal.clone(),
        )
    }))
}

fn poly_dfs(
    ideal: &MonomialIdeal,
    pool: &[SparsePolynomial],
    t: usize,
    start: usize,
    prefix: &SparsePolynomial,
    chosen: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    for k in start..pool.len() {
        let p = prefix.mul_mod(&pool[k], ideal).expect("same ring");
        chosen.push(k);
        if chosen.len() == t {
            if p.is_zero() {
                let c = WitnessCertificate::new(
                    chosen.iter().map(|&j| pool[j].clone()).collect(),
                    ideal.clone(),
                );
                if c.verify() {
                    return Some(chosen.clone());
                }
            }
        } else if !p.is_zero() {
            if let Some(found) = poly_dfs(ideal, pool, t, k, &p, chosen) {
                return Some(found);
            }
        }
        chosen.pop();
    }
    None
}

/// Compares `T^m` with `∩_{k ∈ S_m} (x_{i_1}^{k_1 a_1}, ..., x_{i_r}^{k_r a_r})`
/// over `S_m = {k ∈ ℤ^r_{≥1} : Σ k_j = m + r - 1}`.
pub fn brute_power_decomposition_check(t: &IrreducibleComponent, m: u32) -> Result<bool> {
    if m == 0 {
        return Err(Error::ZeroPower);
    }
    let ring = t.ideal().ring();
    let powers = t.powers();
    let r = powers.len();
    let mut acc: Option<MonomialIdeal> = None;
    for k in compositions(m as usize + r - 1, r) {
        let mut gens = Vec::with_capacity(r);
        for (&(i, a), &kj) in powers.iter().zip(&k) {
            let d = a.checked_mul(kj as Exp).ok_or(Error::ExponentOverflow)?;
            gens.push(Monomial::pure_power(ring.nvars(), i, d));
        }
        let q = MonomialIdeal::minimalize(ring, gens)?;
        acc = Some(match acc {
            None => q,
            Some(a) => a.intersect(&q)?,
        });
    }
    let lhs = t.ideal().power(m)?;
    Ok(acc.expect("S_m is nonempty") == lhs)
}

/// All ways to write `total` as an ordered sum of `parts` positive integers.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(total: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            cur.push(total);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for first in 1..=total.saturating_sub(parts - 1) {
            cur.push(first);
            go(total - first, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts >= 1 && total >= parts {
        go(total, parts, &mut Vec::new(), &mut out);
    }
    out
}
