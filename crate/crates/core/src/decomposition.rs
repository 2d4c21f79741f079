//! Standard (irreducible) and canonical primary decompositions.
//!
//! The standard decomposition is found by splitting a mixed generator
//! `u = a * b` into coprime parts, `(u, rest) = (a, rest) ∩ (b, rest)`, until
//! every branch is generated by pure powers, then discarding leaves that
//! contain another leaf. Irreducible monomial ideals are meet-irreducible
//! in the distributive lattice of monomial ideals, so a leaf is redundant
//! exactly when it contains some other leaf.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, LazyLock, Mutex};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Exp, Monomial, Ring, VarSet};

/// An ideal `(x_{i_1}^{d_1}, ..., x_{i_m}^{d_m})` with distinct variables.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IrreducibleComponent {
    ideal: MonomialIdeal,
}

impl IrreducibleComponent {
    pub fn new(ideal: MonomialIdeal) -> Result<Self> {
        if ideal.is_zero()
            || ideal.is_unit()
            || ideal.gens().iter().any(|g| g.pure_power_var().is_none())
        {
            return Err(Error::NotIrreducible);
        }
        // minimality already rules out two powers of the same variable
        Ok(IrreducibleComponent { ideal })
    }

    /// Builds `(x_i^{d_i})` from `(variable, exponent)` pairs.
    pub fn from_powers(ring: &Ring, powers: &[(usize, Exp)]) -> Result<Self> {
        let n = ring.nvars();
        if powers.iter().any(|&(i, d)| i >= n || d == 0) {
            return Err(Error::NotIrreducible);
        }
        let vars = VarSet::new(powers.iter().map(|p| p.0).collect());
        if vars.len() != powers.len() {
            return Err(Error::NotIrreducible);
        }
        let gens = powers
            .iter()
            .map(|&(i, d)| Monomial::pure_power(n, i, d))
            .collect();
        Self::new(MonomialIdeal::minimalize(ring, gens)?)
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    /// `(variable, exponent)` pairs in variable order.
    pub fn powers(&self) -> Vec<(usize, Exp)> {
        let mut p: Vec<(usize, Exp)> = self
            .ideal
            .gens()
            .iter()
            .map(|g| {
                let i = g.pure_power_var().expect("pure power");
                (i, g.exp(i))
            })
            .collect();
        p.sort_unstable();
        p
    }

    /// The dense exponent vector, 0 for variables that do not occur.
    pub fn exponent_vector(&self) -> Vec<Exp> {
        let mut v = vec![0; self.ideal.nvars()];
        for (i, d) in self.powers() {
            v[i] = d;
        }
        v
    }

    pub fn prime(&self) -> VarSet {
        self.ideal.support()
    }

    /// `d_1 + ... + d_m - m + 1`.
    pub fn noether_exponent(&self) -> u64 {
        let p = self.powers();
        p.iter().map(|&(_, d)| d as u64).sum::<u64>() - p.len() as u64 + 1
    }

    /// Largest exponent among the pure powers.
    pub fn max_exponent(&self) -> Exp {
        self.powers().iter().map(|p| p.1).max().unwrap_or(0)
    }

    /// A monomial lies in `(x_i^{d_i})` iff some exponent reaches its `d_i`.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.powers().iter().any(|&(i, d)| m.exp(i) >= d)
    }

    /// Inclusion between irreducible ideals: every generator of `self` is a
    /// multiple of a generator of `other`.
    pub fn is_subset_of(&self, other: &IrreducibleComponent) -> bool {
        self.ideal.subset_unchecked(&other.ideal)
    }

    fn sort_key(&self) -> (VarSet, Vec<Exp>) {
        (self.prime(), self.exponent_vector())
    }
}

/// A primary monomial ideal together with its radical.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PrimaryComponent {
    ideal: MonomialIdeal,
    prime: VarSet,
    parts: Vec<IrreducibleComponent>,
}

impl PrimaryComponent {
    /// Checks primality via its shape: a pure power of every radical
    /// variable is a generator and no generator leaves those variables.
    pub fn new(ideal: MonomialIdeal) -> Result<Self> {
        if !ideal.is_proper_nonzero() || !is_primary_shape(&ideal) {
            return Err(Error::NotPrimary);
        }
        let prime = ideal.support();
        let parts = standard_decomposition(&ideal)?.components;
        Ok(PrimaryComponent {
            ideal,
            prime,
            parts,
        })
    }

    fn from_group(ring: &Ring, prime: VarSet, parts: Vec<IrreducibleComponent>) -> Self {
        let ideal =
            MonomialIdeal::intersect_all(parts.iter().map(|t| &t.ideal)).expect("nonempty group");
        debug_assert!(ideal.gens().iter().all(|g| g.nvars() == ring.nvars()));
        PrimaryComponent {
            ideal,
            prime,
            parts,
        }
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn prime(&self) -> &VarSet {
        &self.prime
    }

    /// The irreducible components of this primary ideal.
    pub fn parts(&self) -> &[IrreducibleComponent] {
        &self.parts
    }

    /// `e(Q)`, the largest Noether exponent among the irreducible parts.
    pub fn noether_exponent(&self) -> u64 {
        self.parts
            .iter()
            .map(IrreducibleComponent::noether_exponent)
            .max()
            .expect("nonempty")
    }

    /// The first irreducible part attaining `e(Q)`.
    pub fn extremal_part(&self) -> &IrreducibleComponent {
        let e = self.noether_exponent();
        self.parts
            .iter()
            .find(|t| t.noether_exponent() == e)
            .expect("nonempty")
    }
}

/// The structural test for primary monomial ideals.
pub fn is_primary_shape(ideal: &MonomialIdeal) -> bool {
    if !ideal.is_proper_nonzero() {
        return false;
    }
    let support = ideal.support();
    let ok = support
        .iter()
        .all(|i| ideal.gens().iter().any(|g| g.pure_power_var() == Some(i)));
    ok
}

/// Components of a decomposition, tagged for rendering.
pub trait Component {
    fn kind(&self) -> &'static str;
    fn component_ideal(&self) -> &MonomialIdeal;
    fn component_prime(&self) -> VarSet;
}

impl Component for IrreducibleComponent {
    fn kind(&self) -> &'static str {
        "irreducible"
    }
    fn component_ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }
    fn component_prime(&self) -> VarSet {
        self.prime()
    }
}

impl Component for PrimaryComponent {
    fn kind(&self) -> &'static str {
        "primary"
    }
    fn component_ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }
    fn component_prime(&self) -> VarSet {
        self.prime.clone()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition<C> {
    pub components: Vec<C>,
    pub irredundant: bool,
}

impl<C: Component> Decomposition<C> {
    /// Intersection of all components.
    pub fn intersection(&self) -> Option<MonomialIdeal> {
        MonomialIdeal::intersect_all(self.components.iter().map(Component::component_ideal))
    }

    /// No component contains the intersection of the others.
    pub fn check_irredundant(&self) -> bool {
        (0..self.components.len()).all(|i| {
            let others = self
                .components
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, c)| c.component_ideal());
            match MonomialIdeal::intersect_all(others) {
                Some(rest) => !rest.subset_unchecked(self.components[i].component_ideal()),
                None => true,
            }
        })
    }

    pub fn render(&self) -> String {
        self.components
            .iter()
            .map(|c| c.component_ideal().render())
            .collect::<Vec<_>>()
            .join(" ∩ ")
    }
}

pub type StandardDecomposition = Decomposition<IrreducibleComponent>;
pub type PrimaryDecomposition = Decomposition<PrimaryComponent>;

fn check_proper_nonzero(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        Err(Error::ZeroIdeal)
    } else if ideal.is_unit() {
        Err(Error::UnitIdeal)
    } else {
        Ok(())
    }
}

type Cache = Mutex<HashMap<MonomialIdeal, Arc<Vec<IrreducibleComponent>>>>;

static STANDARD_CACHE: LazyLock<Cache> = LazyLock::new(|| Mutex::new(HashMap::new()));

/// The unique irredundant decomposition into irreducible monomial ideals,
/// sorted by prime and then by exponent vector.
pub fn standard_decomposition(ideal: &MonomialIdeal) -> Result<StandardDecomposition> {
    check_proper_nonzero(ideal)?;
    if let Some(hit) = STANDARD_CACHE.lock().expect("cache poisoned").get(ideal) {
        return Ok(Decomposition {
            components: hit.as_ref().clone(),
            irredundant: true,
        });
    }
    let components = split_decomposition(ideal);
    STANDARD_CACHE
        .lock()
        .expect("cache poisoned")
        .insert(ideal.clone(), Arc::new(components.clone()));
    Ok(Decomposition {
        components,
        irredundant: true,
    })
}

fn split_decomposition(ideal: &MonomialIdeal) -> Vec<IrreducibleComponent> {
    let ring = ideal.ring().clone();
    let mut leaves: HashSet<MonomialIdeal> = HashSet::new();
    let mut seen: HashSet<MonomialIdeal> = HashSet::new();
    let mut stack = vec![ideal.clone()];
    while let Some(cur) = stack.pop() {
        if !seen.insert(cur.clone()) {
            continue;
        }
        let mixed = cur.gens().iter().position(|g| g.pure_power_var().is_none());
        let Some(pos) = mixed else {
            leaves.insert(cur);
            continue;
        };
        let u = &cur.gens()[pos];
        let var = u
            .exps()
            .iter()
            .position(|&e| e > 0)
            .expect("mixed generator has support");
        let a = Monomial::pure_power(u.nvars(), var, u.exp(var));
        let b = u.quotient_saturating(&a);
        let rest: Vec<Monomial> = cur
            .gens()
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != pos)
            .map(|(_, g)| g.clone())
            .collect();
        for part in [a, b] {
            let mut gens = rest.clone();
            gens.push(part);
            stack.push(MonomialIdeal::from_gens_unchecked(&ring, gens));
        }
    }
    let leaves: Vec<IrreducibleComponent> = leaves
        .into_iter()
        .map(|l| IrreducibleComponent::new(l).expect("leaf is irreducible"))
        .collect();
    let mut kept: Vec<IrreducibleComponent> = leaves
        .iter()
        .filter(|t| !leaves.iter().any(|s| s != *t && s.is_subset_of(t)))
        .cloned()
        .collect();
    kept.sort_by_cached_key(IrreducibleComponent::sort_key);
    kept
}

/// Closed-form standard decomposition of a two-variable ideal read off its
/// staircase `x^{a_1}y^{b_1}, ..., x^{a_r}y^{b_r}` (`a` decreasing, `b`
/// increasing): `x^{a_r} ∩ y^{b_1} ∩ ⋂ (x^{a_i}, y^{b_{i+1}})`, dropping
/// the unit and zero-exponent pieces.
pub fn staircase_decomposition_2d(ideal: &MonomialIdeal) -> Result<StandardDecomposition> {
    if ideal.nvars() != 2 {
        return Err(Error::WrongArity {
            expected: 2,
            found: ideal.nvars(),
        });
    }
    check_proper_nonzero(ideal)?;
    let ring = ideal.ring();
    let stairs = staircase(ideal);
    let r = stairs.len();
    let mut comps = Vec::new();
    let (a_r, b_1) = (stairs[r - 1].0, stairs[0].1);
    if a_r > 0 {
        comps.push(IrreducibleComponent::from_powers(ring, &[(0, a_r)])?);
    }
    if b_1 > 0 {
        comps.push(IrreducibleComponent::from_powers(ring, &[(1, b_1)])?);
    }
    for i in 0..r.saturating_sub(1) {
        comps.push(IrreducibleComponent::from_powers(
            ring,
            &[(0, stairs[i].0), (1, stairs[i + 1].1)],
        )?);
    }
    comps.sort_by_cached_key(IrreducibleComponent::sort_key);
    Ok(Decomposition {
        components: comps,
        irredundant: true,
    })
}

/// Generators of a two-variable ideal as `(a_i, b_i)`, `a` strictly
/// decreasing and `b` strictly increasing.
pub fn staircase(ideal: &MonomialIdeal) -> Vec<(Exp, Exp)> {
    assert_eq!(ideal.nvars(), 2, "staircase needs two variables");
    let mut s: Vec<(Exp, Exp)> = ideal.gens().iter().map(|g| (g.exp(0), g.exp(1))).collect();
    s.sort_by_key(|p| std::cmp::Reverse(p.0));
    s
}

/// Groups standard components by radical and intersects each group.
pub fn canonical_primary_decomposition(ideal: &MonomialIdeal) -> Result<PrimaryDecomposition> {
    let std = standard_decomposition(ideal)?;
    let mut groups: Vec<(VarSet, Vec<IrreducibleComponent>)> = Vec::new();
    for t in std.components {
        let p = t.prime();
        match groups.iter_mut().find(|(q, _)| *q == p) {
            Some((_, g)) => g.push(t),
            None => groups.push((p, vec![t])),
        }
    }
    groups.sort_by(|a, b| a.0.cmp(&b.0));
    let ring = ideal.ring();
    let components = groups
        .into_iter()
        .map(|(p, parts)| PrimaryComponent::from_group(ring, p, parts))
        .collect();
    Ok(Decomposition {
        components,
        irredundant: true,
    })
}

/// `Ass(R/I)` as variable sets, sorted by height then indices.
pub fn associated_primes(ideal: &MonomialIdeal) -> Result<Vec<VarSet>> {
    Ok(canonical_primary_decomposition(ideal)?
        .components
        .into_iter()
        .map(|c| c.prime)
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PosetShape {
    Singleton,
    Antichain,
    Chain,
    /// One prime contains all others, but the set is not a chain.
    HasUniqueTop,
    General,
}

/// Classifies a set of primes under inclusion.
pub fn classify_primes(primes: &[VarSet]) -> PosetShape {
    let r = primes.len();
    if r <= 1 {
        return PosetShape::Singleton;
    }
    let pairs = || (0..r).flat_map(|i| ((i + 1)..r).map(move |j| (i, j)));
    if pairs().all(|(i, j)| !primes[i].comparable(&primes[j])) {
        return PosetShape::Antichain;
    }
    if pairs().all(|(i, j)| primes[i].comparable(&primes[j])) {
        return PosetShape::Chain;
    }
    if unique_top(primes).is_some() {
        PosetShape::HasUniqueTop
    } else {
        PosetShape::General
    }
}

/// Index of a prime containing every other one.
pub fn unique_top(primes: &[VarSet]) -> Option<usize> {
    (0..primes.len()).find(|&k| primes.iter().all(|p| p.is_subset(&primes[k])))
}

pub fn ass_poset_shape(ideal: &MonomialIdeal) -> Result<PosetShape> {
    Ok(classify_primes(&associated_primes(ideal)?))
}

/// `dim R/I = n - min height` over the associated primes.
pub fn dim_quotient(ideal: &MonomialIdeal) -> Result<usize> {
    let primes = associated_primes(ideal)?;
    let min_height = primes
        .iter()
        .map(VarSet::len)
        .min()
        .expect("proper ideal has a prime");
    Ok(ideal.nvars() - min_height)
}
