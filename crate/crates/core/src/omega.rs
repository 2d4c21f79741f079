//! Noether exponents and absorbing degrees of monomial ideals.
//!
//! The dispatcher walks the exact rules in a fixed order and falls back to
//! certified bounds when none applies:
//!
//! 1. unit / zero ideal;
//! 2. two variables: the staircase formula `max_i (a_i + b_{i+1}) - 1`;
//! 3. factor `I = hJ` with `h` the generator gcd; `ω(I) = deg h + ω(J)`,
//!    and a principal `I` has `ω = deg`;
//! 4. on the canonical primary decomposition `J = ∩ Q_i`:
//!    one component: `max e(T)` over its irreducible parts;
//!    `dim R/J = 1`: `max{e(Q_m), Σ_{i≠m} e(Q_i)}` when the maximal ideal
//!    is associated, `Σ e(Q_i)` otherwise;
//!    incomparable primes: `Σ e(Q_i)`;
//!    a chain: `max e(Q_i)`;
//!    a prime `P_k` containing all others: `max{e(Q_k), ω(∩_{i≠k} Q_i)}`;
//! 5. otherwise bounds `max(e(J), max deg G(J)) ≤ ω ≤ Σ e(Q_i)`, with the
//!    upper bound tightened per connected group of comparable primes.
//!
//! Every exact answer for a proper nonzero ideal carries a witness
//! certificate whose length equals the value.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::certificate::{
    choose_top_multiplier, principal_witness, sum_witness, top_component_witness, CertificateJson,
    WitnessCertificate,
};
use crate::decomposition::{
    canonical_primary_decomposition, classify_primes, is_primary_shape, staircase,
    standard_decomposition, unique_top, PosetShape, PrimaryComponent,
};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, VarSet};
use crate::poly::SparsePolynomial;

/// Tags recorded in an [`OmegaResult`]'s method trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Rule {
    Unit,
    Zero,
    Principal,
    GcdFactor,
    Primary,
    Antichain,
    Chain,
    UniqueTopRecursion,
    Dim1,
    TwoVars,
    FallbackBounds,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().expect("string tag"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum OmegaValue {
    Exact(u64),
    Bounds { lo: u64, hi: u64 },
}

impl OmegaValue {
    pub fn lo(&self) -> u64 {
        match *self {
            OmegaValue::Exact(v) => v,
            OmegaValue::Bounds { lo, .. } => lo,
        }
    }

    pub fn hi(&self) -> u64 {
        match *self {
            OmegaValue::Exact(v) => v,
            OmegaValue::Bounds { hi, .. } => hi,
        }
    }

    pub fn exact(&self) -> Option<u64> {
        match *self {
            OmegaValue::Exact(v) => Some(v),
            OmegaValue::Bounds { .. } => None,
        }
    }

    fn map(self, f: impl Fn(u64) -> u64) -> Self {
        match self {
            OmegaValue::Exact(v) => OmegaValue::Exact(f(v)),
            OmegaValue::Bounds { lo, hi } => OmegaValue::Bounds {
                lo: f(lo),
                hi: f(hi),
            },
        }
    }
}

impl fmt::Display for OmegaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OmegaValue::Exact(v) => write!(f, "{v}"),
            OmegaValue::Bounds { lo, hi } => write!(f, "{lo}..={hi}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaResult {
    pub value: OmegaValue,
    pub method: Vec<Rule>,
    pub certificate: Option<WitnessCertificate>,
}

impl OmegaResult {
    fn exact(v: u64, rule: Rule, certificate: Option<WitnessCertificate>) -> Self {
        OmegaResult {
            value: OmegaValue::Exact(v),
            method: vec![rule],
            certificate,
        }
    }

    pub fn exact_value(&self) -> Option<u64> {
        self.value.exact()
    }

    pub fn to_json(&self) -> OmegaJson {
        let value = match self.value {
            OmegaValue::Exact(v) => ValueJson::Exact { exact: v },
            OmegaValue::Bounds { lo, hi } => ValueJson::Bounds { lo, hi },
        };
        OmegaJson {
            value,
            method: self.method.clone(),
            certificate: self.certificate.as_ref().map(WitnessCertificate::to_json),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ValueJson {
    Exact { exact: u64 },
    Bounds { lo: u64, hi: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaJson {
    pub value: ValueJson,
    pub method: Vec<Rule>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<CertificateJson>,
}

/// Switches for the dispatcher. The defaults use every shortcut and emit
/// certificates; turning a shortcut off forces the general path, which is
/// how the closed forms are cross-checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OmegaOptions {
    pub two_var_formula: bool,
    pub dim1_closed_form: bool,
    pub certificates: bool,
}

impl Default for OmegaOptions {
    fn default() -> Self {
        OmegaOptions {
            two_var_formula: true,
            dim1_closed_form: true,
            certificates: true,
        }
    }
}

impl OmegaOptions {
    /// Skip the closed forms and take the decomposition route.
    pub fn decomposition_path() -> Self {
        OmegaOptions {
            two_var_formula: false,
            dim1_closed_form: false,
            certificates: true,
        }
    }

    pub fn without_certificates(self) -> Self {
        OmegaOptions {
            certificates: false,
            ..self
        }
    }
}

/// `e(I)`: the least `μ` with `(√I)^μ ⊆ I`. `e(R) = 0` and `e(0) = 1`.
///
/// Primary ideals take the largest `Σ d_j - m + 1` over their irreducible
/// components. Otherwise `(√I)^μ ⊄ T` for an irreducible component
/// `T = (x_j^{d_j})` exactly when some `μ` generators of `√I` (with
/// repetition) use each `x_j` fewer than `d_j` times, so `e(I)` is one
/// more than the largest such packing, maximised over components.
pub fn noether_exponent(ideal: &MonomialIdeal) -> u64 {
    if ideal.is_unit() {
        return 0;
    }
    if ideal.is_zero() {
        return 1;
    }
    let std = standard_decomposition(ideal).expect("proper nonzero");
    if is_primary_shape(ideal) {
        return std
            .components
            .iter()
            .map(|t| t.noether_exponent())
            .max()
            .expect("nonempty");
    }
    let radical_gens: Vec<VarSet> = ideal
        .radical()
        .gens()
        .iter()
        .map(Monomial::support)
        .collect();
    std.components
        .iter()
        .map(|t| {
            let mut caps = vec![u64::MAX; ideal.nvars()];
            for (i, d) in t.powers() {
                caps[i] = d as u64 - 1;
            }
            let sets: Vec<Vec<usize>> = radical_gens
                .iter()
                .map(|g| g.iter().filter(|&i| caps[i] != u64::MAX).collect())
                .collect();
            1 + max_packing(&sets, &mut caps)
        })
        .max()
        .expect("nonempty")
}

fn max_packing(sets: &[Vec<usize>], caps: &mut [u64]) -> u64 {
    fn go(sets: &[Vec<usize>], caps: &mut [u64], i: usize, current: u64, best: &mut u64) {
        if current > *best {
            *best = current;
        }
        if i == sets.len() {
            return;
        }
        let room: u64 = caps.iter().filter(|&&c| c != u64::MAX).sum();
        if current + room <= *best {
            return;
        }
        let set = &sets[i];
        debug_assert!(
            !set.is_empty(),
            "radical generator outside the component's prime"
        );
        let most = set.iter().map(|&v| caps[v]).min().unwrap_or(0);
        for k in (0..=most).rev() {
            for &v in set {
                caps[v] -= k;
            }
            go(sets, caps, i + 1, current + k, best);
            for &v in set {
                caps[v] += k;
            }
        }
    }
    let mut best = 0;
    go(sets, caps, 0, 0, &mut best);
    best
}

pub fn omega(ideal: &MonomialIdeal) -> OmegaResult {
    omega_with(ideal, &OmegaOptions::default())
}

pub fn omega_with(ideal: &MonomialIdeal, opts: &OmegaOptions) -> OmegaResult {
    if ideal.is_unit() {
        return OmegaResult::exact(0, Rule::Unit, None);
    }
    if ideal.is_zero() {
        return OmegaResult::exact(1, Rule::Zero, None);
    }
    if ideal.nvars() == 2 && opts.two_var_formula {
        return two_variables(ideal, opts);
    }
    let (h, j) = ideal.factor_out_gcd().expect("nonzero");
    if j.is_unit() {
        let cert = opts
            .certificates
            .then(|| principal_witness(ideal).expect("proper principal"));
        return OmegaResult::exact(h.degree(), Rule::Principal, cert);
    }
    let inner = gcd_free(&j, opts);
    if h.is_one() {
        inner
    } else {
        shift_by_monomial(&h, inner)
    }
}

/// `ω(fI) = deg f + ω(I)`, applied to a result for `I`.
pub fn shift_by_monomial(f: &Monomial, w: OmegaResult) -> OmegaResult {
    let d = f.degree();
    if d == 0 {
        return w;
    }
    let mut method = Vec::with_capacity(w.method.len() + 1);
    method.push(Rule::GcdFactor);
    method.extend(w.method);
    OmegaResult {
        value: w.value.map(|v| v + d),
        method,
        certificate: w.certificate.map(|c| c.shift(f)),
    }
}

/// The two-variable formula, with the certificate taken from the
/// decomposition route.
fn two_variables(ideal: &MonomialIdeal, opts: &OmegaOptions) -> OmegaResult {
    let value = two_variable_formula(ideal);
    let certificate = if opts.certificates {
        let general = omega_with(
            ideal,
            &OmegaOptions {
                two_var_formula: false,
                ..*opts
            },
        );
        assert_eq!(
            general.exact_value(),
            Some(value),
            "two-variable formula disagrees with decomposition route"
        );
        general.certificate
    } else {
        None
    };
    OmegaResult::exact(value, Rule::TwoVars, certificate)
}

/// `a_1 + b_1` for one generator, else `max_{i<r} (a_i + b_{i+1}) - 1`.
pub fn two_variable_formula(ideal: &MonomialIdeal) -> u64 {
    let s = staircase(ideal);
    if s.len() == 1 {
        return s[0].0 as u64 + s[0].1 as u64;
    }
    s.windows(2)
        .map(|w| w[0].0 as u64 + w[1].1 as u64)
        .max()
        .expect("r > 1")
        - 1
}

fn gcd_free(j: &MonomialIdeal, opts: &OmegaOptions) -> OmegaResult {
    let comps = canonical_primary_decomposition(j)
        .expect("proper nonzero")
        .components;
    let es: Vec<u64> = comps
        .iter()
        .map(PrimaryComponent::noether_exponent)
        .collect();
    let primes: Vec<VarSet> = comps.iter().map(|c| c.prime().clone()).collect();
    let n = j.nvars();

    if comps.len() == 1 {
        let cert = opts.certificates.then(|| {
            let top = comps[0].extremal_part();
            top_component_witness(j, top, &j.ring().unit()).expect("primary witness")
        });
        return OmegaResult::exact(es[0], Rule::Primary, cert);
    }

    let min_height = primes.iter().map(VarSet::len).min().expect("nonempty");
    if opts.dim1_closed_form && n - min_height == 1 {
        return dim_one(j, &comps, &es, opts);
    }

    match classify_primes(&primes) {
        PosetShape::Singleton => unreachable!("handled above"),
        PosetShape::Antichain => {
            let cert = opts
                .certificates
                .then(|| sum_witness(&comps).expect("antichain witness"));
            OmegaResult::exact(es.iter().sum(), Rule::Antichain, cert)
        }
        PosetShape::Chain => {
            let k = unique_top(&primes).expect("chain has a top");
            let rec = unique_top_step(j, &comps, k, opts);
            let value = *es.iter().max().expect("nonempty");
            debug_assert_eq!(rec.value, OmegaValue::Exact(value));
            OmegaResult {
                value: OmegaValue::Exact(value),
                method: vec![Rule::Chain],
                certificate: rec.certificate,
            }
        }
        PosetShape::HasUniqueTop => {
            let k = unique_top(&primes).expect("has a top");
            unique_top_step(j, &comps, k, opts)
        }
        PosetShape::General => fallback(j, &comps, &es, opts),
    }
}

fn intersect_except(comps: &[PrimaryComponent], skip: usize) -> Option<MonomialIdeal> {
    MonomialIdeal::intersect_all(
        comps
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != skip)
            .map(|(_, c)| c.ideal()),
    )
}

/// `ω(J) = max{e(Q_k), ω(∩_{i≠k} Q_i)}` when `√Q_k` contains every prime.
fn unique_top_step(
    j: &MonomialIdeal,
    comps: &[PrimaryComponent],
    k: usize,
    opts: &OmegaOptions,
) -> OmegaResult {
    let ek = comps[k].noether_exponent();
    let rest = intersect_except(comps, k).expect("at least two components");
    let sub = omega_with(&rest, opts);
    let value = sub.value.map(|v| v.max(ek));
    let certificate = if opts.certificates {
        match sub.value {
            OmegaValue::Exact(v) if ek >= v => Some(top_witness(j, &comps[k], Some(&rest))),
            OmegaValue::Exact(_) => sub.certificate.as_ref().map(|c| c.retarget(j)),
            OmegaValue::Bounds { .. } => None,
        }
    } else {
        None
    };
    let mut method = vec![Rule::UniqueTopRecursion];
    method.extend(sub.method);
    OmegaResult {
        value,
        method,
        certificate,
    }
}

fn top_witness(
    j: &MonomialIdeal,
    top: &PrimaryComponent,
    rest: Option<&MonomialIdeal>,
) -> WitnessCertificate {
    let t = top.extremal_part();
    let g = choose_top_multiplier(rest, t).expect("an irredundant component leaves room for g");
    top_component_witness(j, t, &g).expect("top-component witness")
}

fn dim_one(
    j: &MonomialIdeal,
    comps: &[PrimaryComponent],
    es: &[u64],
    opts: &OmegaOptions,
) -> OmegaResult {
    let n = j.nvars();
    match comps.iter().position(|q| q.prime().len() == n) {
        Some(k) => {
            let others: u64 = es
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != k)
                .map(|(_, e)| e)
                .sum();
            let value = es[k].max(others);
            let cert = opts.certificates.then(|| {
                let rest = intersect_except(comps, k).expect("at least two components");
                if es[k] >= others {
                    top_witness(j, &comps[k], Some(&rest))
                } else {
                    let lower: Vec<PrimaryComponent> = comps
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| *i != k)
                        .map(|(_, c)| c.clone())
                        .collect();
                    sum_witness(&lower)
                        .expect("height n-1 primes are incomparable")
                        .retarget(j)
                }
            });
            OmegaResult::exact(value, Rule::Dim1, cert)
        }
        None => {
            let cert = opts
                .certificates
                .then(|| sum_witness(comps).expect("antichain witness"));
            OmegaResult::exact(es.iter().sum(), Rule::Dim1, cert)
        }
    }
}

/// Connected components of the comparability graph on the primes.
fn comparability_groups(primes: &[VarSet]) -> Vec<Vec<usize>> {
    let r = primes.len();
    let mut group = vec![usize::MAX; r];
    let mut groups = Vec::new();
    for s in 0..r {
        if group[s] != usize::MAX {
            continue;
        }
        let id = groups.len();
        let mut members = vec![s];
        group[s] = id;
        let mut k = 0;
        while k < members.len() {
            let a = members[k];
            for b in 0..r {
                if group[b] == usize::MAX && primes[a].comparable(&primes[b]) {
                    group[b] = id;
                    members.push(b);
                }
            }
            k += 1;
        }
        members.sort_unstable();
        groups.push(members);
    }
    groups
}

fn fallback(
    j: &MonomialIdeal,
    comps: &[PrimaryComponent],
    es: &[u64],
    opts: &OmegaOptions,
) -> OmegaResult {
    let maxdeg = j.max_degree();
    let lo = noether_exponent(j).max(maxdeg);
    let primes: Vec<VarSet> = comps.iter().map(|c| c.prime().clone()).collect();
    let mut hi = 0;
    for members in comparability_groups(&primes) {
        let group_primes: Vec<VarSet> = members.iter().map(|&i| primes[i].clone()).collect();
        if members.len() < comps.len() && unique_top(&group_primes).is_some() {
            let part = MonomialIdeal::intersect_all(members.iter().map(|&i| comps[i].ideal()))
                .expect("nonempty");
            hi += omega_with(&part, &opts.without_certificates()).value.hi();
        } else {
            hi += members.iter().map(|&i| es[i]).sum::<u64>();
        }
    }
    debug_assert!(lo <= hi);
    let certificate = (opts.certificates && lo == maxdeg).then(|| generator_witness(j));
    OmegaResult {
        value: OmegaValue::Bounds { lo, hi },
        method: vec![Rule::FallbackBounds],
        certificate,
    }
}

/// A generator of largest degree split into its variables: removing any
/// variable leaves a proper divisor, which misses the ideal.
pub fn generator_witness(ideal: &MonomialIdeal) -> WitnessCertificate {
    let ring = ideal.ring();
    let g = ideal
        .gens()
        .iter()
        .max_by_key(|g| g.degree())
        .expect("nonzero ideal");
    let factors = (0..ring.nvars())
        .flat_map(|i| std::iter::repeat_n(i, g.exp(i) as usize))
        .map(|i| SparsePolynomial::var(ring, i))
        .collect();
    WitnessCertificate::new(factors, ideal.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Ring;
    use crate::text::parse_ideal;

    fn id(s: &str, vars: &[&str]) -> MonomialIdeal {
        parse_ideal(s, Some(&Ring::new(vars).unwrap())).unwrap()
    }
    const XYZ: [&str; 3] = ["x", "y", "z"];
    const XY: [&str; 2] = ["x", "y"];

    fn exact(i: &MonomialIdeal) -> u64 {
        let r = omega(i);
        if let Some(c) = &r.certificate {
            assert!(c.verify(), "{:?}: {:?}", i, c.verify_detailed());
            assert_eq!(c.len() as u64, r.value.lo());
        }
        r.exact_value()
            .unwrap_or_else(|| panic!("no exact value for {i:?}: {r:?}"))
    }

    #[test]
    fn irreducible_noether_exponents() {
        assert_eq!(noether_exponent(&id("x, y^2, z^2", &XYZ)), 3);
        assert_eq!(noether_exponent(&id("x^4, y, z^2", &XYZ)), 5);
        assert_eq!(noether_exponent(&id("x", &XYZ)), 1);
    }

    #[test]
    fn noether_exponent_cases() {
        assert_eq!(noether_exponent(&id("x^3, y^2, z^2, x*y", &XYZ)), 4);
        assert_eq!(noether_exponent(&id("x, y", &XYZ)), 1);
        assert_eq!(
            noether_exponent(&MonomialIdeal::unit(&Ring::new(&XYZ).unwrap())),
            0
        );
        assert_eq!(
            noether_exponent(&MonomialIdeal::zero(&Ring::new(&XYZ).unwrap())),
            1
        );
        // non-primary: (x^2, xy, y^2, xz^2), radical (x, y); (x,y)^2 ⊆ I
        assert_eq!(noether_exponent(&id("x^2, x*y, y^2, x*z^2", &XYZ)), 2);
        assert_eq!(noether_exponent(&id("x^2*y^3", &XYZ)), 3);
    }

    #[test]
    fn background_example() {
        let r = omega(&id("x^4, y^3, z^2, x*y, y^2*z", &XYZ));
        assert_eq!(r.value, OmegaValue::Exact(5));
        assert_eq!(r.method, vec![Rule::Primary]);
        assert_eq!(r.certificate.as_ref().unwrap().len(), 5);
    }

    #[test]
    fn gcd_example_nine() {
        let i = id(
            "x^3*y^4, x^2*y^5, x^4*y^3*z^2, x^5*y^3*z, x^2*y^4*z^2",
            &XYZ,
        );
        let r = omega(&i);
        assert_eq!(r.value, OmegaValue::Exact(9));
        assert_eq!(r.method, vec![Rule::GcdFactor, Rule::Dim1]);
        assert!(r.certificate.as_ref().unwrap().verify());
        let general = omega_with(&i, &OmegaOptions::decomposition_path());
        assert_eq!(general.value, OmegaValue::Exact(9));
        assert_eq!(
            general.method[..2],
            [Rule::GcdFactor, Rule::UniqueTopRecursion]
        );
    }

    #[test]
    fn staircase_example() {
        let i = id("x^11*y^4, x^8*y^5, x^7*y^9, x^4*y^10, x^2*y^16", &XY);
        assert_eq!(two_variable_formula(&i), 19);
        assert_eq!(exact(&i), 19);
    }

    #[test]
    fn example_tw_quadruple() {
        let i = id("x^2, x*y, y^2, x*z^2", &XYZ);
        let j = id("x^2, x*y, y^2, y*z^3", &XYZ);
        assert_eq!(exact(&i), 3);
        assert_eq!(exact(&j), 4);
        assert_eq!(exact(&i.intersect(&j).unwrap()), 2);
        assert_eq!(exact(&i.sum(&j).unwrap()), 4);
        let general = OmegaOptions::decomposition_path();
        assert_eq!(omega_with(&i, &general).method, vec![Rule::Chain]);
    }

    #[test]
    fn different_radicals_example() {
        let i = id("x, y", &XYZ);
        let j = id("y, z^2", &XYZ);
        assert_eq!(exact(&i), 1);
        assert_eq!(exact(&j), 2);
        assert_eq!(exact(&i.intersect(&j).unwrap()), 3);
    }

    #[test]
    fn principal_ideals() {
        let i = id("x^2*y^3*z", &XYZ);
        let r = omega(&i);
        assert_eq!(r.value, OmegaValue::Exact(6));
        assert_eq!(r.method, vec![Rule::Principal]);
        assert!(r.certificate.unwrap().verify());
    }

    #[test]
    fn trivial_ideals() {
        let r = Ring::new(&XYZ).unwrap();
        assert_eq!(omega(&MonomialIdeal::unit(&r)).value, OmegaValue::Exact(0));
        assert_eq!(omega(&MonomialIdeal::zero(&r)).value, OmegaValue::Exact(1));
    }

    #[test]
    fn shifting_results() {
        let f = Monomial::new(vec![2, 3, 0]);
        let base = OmegaResult::exact(4, Rule::Primary, None);
        let s = shift_by_monomial(&f, base.clone());
        assert_eq!(s.value, OmegaValue::Exact(9));
        assert_eq!(s.method, vec![Rule::GcdFactor, Rule::Primary]);
        assert_eq!(shift_by_monomial(&Monomial::one(3), base.clone()), base);
        let b = OmegaResult {
            value: OmegaValue::Bounds { lo: 3, hi: 5 },
            method: vec![Rule::FallbackBounds],
            certificate: None,
        };
        assert_eq!(
            shift_by_monomial(&Monomial::new(vec![1, 1, 0]), b).value,
            OmegaValue::Bounds { lo: 5, hi: 7 }
        );
    }

    #[test]
    fn general_poset_falls_back_to_bounds() {
        let v = ["x", "y", "z", "w"];
        let i = id("x, y", &v)
            .intersect(&id("x^2, y^2, z", &v))
            .unwrap()
            .intersect(&id("x^2, y^2, w", &v))
            .unwrap();
        let r = omega(&i);
        assert_eq!(r.method, vec![Rule::FallbackBounds]);
        let OmegaValue::Bounds { lo, hi } = r.value else {
            panic!("expected bounds")
        };
        assert!(lo <= hi);
        assert_eq!(hi, 1 + 3 + 3);
    }

    #[test]
    fn json_shape() {
        let r = omega(&id("x*y", &XYZ));
        let s = serde_json::to_string(&r.to_json()).unwrap();
        assert_eq!(
            s,
            r#"{"value":{"exact":2},"method":["PRINCIPAL"],"certificate":{"factors":["x","y"]}}"#
        );
        let b = OmegaResult {
            value: OmegaValue::Bounds { lo: 3, hi: 5 },
            method: vec![Rule::FallbackBounds],
            certificate: None,
        };
        assert_eq!(
            serde_json::to_string(&b.to_json()).unwrap(),
            r#"{"value":{"lo":3,"hi":5},"method":["FALLBACK_BOUNDS"]}"#
        );
        assert_eq!(Rule::UniqueTopRecursion.to_string(), "UNIQUE_TOP_RECURSION");
    }
}
