//! Shared proptest strategies.
#![allow(dead_code)]

use absorbing_core::{Monomial, MonomialIdeal, Ring};
use proptest::prelude::*;

pub fn ring(n: usize) -> Ring {
    Ring::with_default_names(n).unwrap()
}

/// Proper nonzero ideals in `n` variables, exponents ≤ `max_exp`, 1 to 5 generators.
pub fn ideal_in(n: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::vec(0..=max_exp, n), 1..=5).prop_filter_map(
        "unit ideal",
        move |rows| {
            let gens: Vec<Monomial> = rows.into_iter().map(Monomial::new).collect();
            let i = MonomialIdeal::minimalize(&ring(n), gens).unwrap();
            i.is_proper_nonzero().then_some(i)
        },
    )
}

pub fn small_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=3).prop_flat_map(|n| ideal_in(n, 4))
}

/// Two proper nonzero ideals over the same ring.
pub fn ideal_pair() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    (1usize..=3).prop_flat_map(|n| (ideal_in(n, 4), ideal_in(n, 4)))
}

/// A primary ideal in `n` variables whose radical is generated by the
/// variables in `support` (a nonempty bitmask): pure powers of those
/// variables plus random monomials in them.
pub fn primary_on(n: usize, support: u32, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    let vars: Vec<usize> = (0..n).filter(|i| support & (1 << i) != 0).collect();
    let k = vars.len();
    (
        prop::collection::vec(1..=max_exp, k),
        prop::collection::vec(prop::collection::vec(0..=max_exp, k), 0..=3),
    )
        .prop_map(move |(pure, extra)| {
            let r = ring(n);
            let mut gens = Vec::new();
            for (j, &v) in vars.iter().enumerate() {
                gens.push(Monomial::pure_power(n, v, pure[j]));
            }
            for row in extra {
                let mut e = vec![0; n];
                for (j, &v) in vars.iter().enumerate() {
                    e[v] = row[j];
                }
                let m = Monomial::new(e);
                if !m.is_one() {
                    gens.push(m);
                }
            }
            MonomialIdeal::minimalize(&r, gens).unwrap()
        })
}

/// Two primary ideals with the same radical.
pub fn primary_pair() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    (1usize..=3)
        .prop_flat_map(|n| (Just(n), 1u32..(1 << n)))
        .prop_flat_map(|(n, s)| (primary_on(n, s, 4), primary_on(n, s, 4)))
}

pub fn exact(i: &MonomialIdeal) -> u64 {
    absorbing_core::omega(i)
        .exact_value()
        .unwrap_or_else(|| panic!("no exact value for {}", i.render()))
}
