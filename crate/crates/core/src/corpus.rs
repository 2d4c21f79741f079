//! Deterministic test corpora: exhaustive families where they are small,
//! seeded random samples where they are not.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decomposition::IrreducibleComponent;
use crate::graph::Graph;
use crate::ideal::MonomialIdeal;
use crate::monomial::{Exp, Monomial, Ring, VarSet};

pub const DEFAULT_SEED: u64 = 0x5eed_0f1d_ea15;

/// Every proper nonzero ideal of `k[x, y]` whose minimal generators have
/// exponents at most `max_exp`, at most `max_gens` of them.
pub fn staircase_ideals(max_exp: Exp, max_gens: usize) -> Vec<MonomialIdeal> {
    let ring = Ring::with_default_names(2).expect("two variables");
    let mut out = Vec::new();
    // staircase points with a strictly decreasing and b strictly increasing
    fn go(
        ring: &Ring,
        max_exp: Exp,
        max_gens: usize,
        cur: &mut Vec<(Exp, Exp)>,
        out: &mut Vec<MonomialIdeal>,
    ) {
        if !cur.is_empty() && !(cur.len() == 1 && cur[0] == (0, 0)) {
            let gens = cur
                .iter()
                .map(|&(a, b)| Monomial::new(vec![a, b]))
                .collect();
            out.push(MonomialIdeal::minimalize(ring, gens).expect("same ring"));
        }
        if cur.len() == max_gens {
            return;
        }
        let (a_hi, b_lo) = match cur.last() {
            None => (max_exp, 0),
            Some(&(a, b)) if a == 0 || b == max_exp => return,
            Some(&(a, b)) => (a - 1, b + 1),
        };
        for a in 0..=a_hi {
            for b in b_lo..=max_exp {
                if cur.is_empty() && (a, b) == (0, 0) {
                    continue;
                }
                cur.push((a, b));
                go(ring, max_exp, max_gens, cur, out);
                cur.pop();
            }
        }
    }
    go(&ring, max_exp, max_gens, &mut Vec::new(), &mut out);
    out.sort_by(|p, q| p.gens().cmp(q.gens()));
    out.dedup();
    out
}

/// The mixed corpus: principal ideals in one variable, every staircase
/// ideal in two, and seeded random ideals in three variables until `cap`
/// ideals are collected. Exponents are at most `max_exp` and each ideal
/// has at most `max_gens` minimal generators.
pub fn ideal_corpus(max_exp: Exp, max_gens: usize, cap: usize, seed: u64) -> Vec<MonomialIdeal> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut push = |i: MonomialIdeal, out: &mut Vec<MonomialIdeal>| {
        if i.is_proper_nonzero()
            && i.gens().len() <= max_gens
            && seen.insert((i.nvars(), i.gens().to_vec()))
        {
            out.push(i);
        }
    };
    let r1 = Ring::with_default_names(1).expect("one variable");
    for a in 1..=max_exp {
        push(
            MonomialIdeal::principal(&r1, Monomial::new(vec![a])).expect("monomial"),
            &mut out,
        );
    }
    let mut two = staircase_ideals(max_exp, max_gens);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if out.len() + two.len() > cap / 2 {
        two.shuffle(&mut rng);
        two.truncate(cap / 2);
    }
    for i in two {
        push(i, &mut out);
    }
    let r3 = Ring::with_default_names(3).expect("three variables");
    let mut attempts = 0;
    while out.len() < cap && attempts < cap * 20 {
        attempts += 1;
        let k = rng.gen_range(1..=max_gens);
        let gens: Vec<Monomial> = (0..k)
            .map(|_| Monomial::new((0..3).map(|_| rng.gen_range(0..=max_exp)).collect()))
            .filter(|m| !m.is_one())
            .collect();
        if gens.is_empty() {
            continue;
        }
        push(
            MonomialIdeal::minimalize(&r3, gens).expect("same ring"),
            &mut out,
        );
    }
    out
}

/// Every irreducible ideal `(x_{i_1}^{a_1}, ...)` in `n` variables with
/// `1 ≤ a_j ≤ max_exp`.
pub fn irreducible_family(n: usize, max_exp: Exp) -> Vec<IrreducibleComponent> {
    let ring = Ring::with_default_names(n).expect("positive arity");
    let mut out = Vec::new();
    for mask in 1u32..1 << n {
        let vars: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let mut exps = vec![1; vars.len()];
        loop {
            let powers: Vec<(usize, Exp)> =
                vars.iter().copied().zip(exps.iter().copied()).collect();
            out.push(IrreducibleComponent::from_powers(&ring, &powers).expect("valid powers"));
            // odometer over exponent tuples
            let mut k = 0;
            while k < exps.len() && exps[k] == max_exp {
                exps[k] = 1;
                k += 1;
            }
            if k == exps.len() {
                break;
            }
            exps[k] += 1;
        }
    }
    out
}

/// Primary ideals built by intersecting one to three irreducible ideals
/// that share a prime, drawn from `irreducible_family(n, max_exp)`.
pub fn primary_sample(n: usize, max_exp: Exp, count: usize, seed: u64) -> Vec<MonomialIdeal> {
    let family = irreducible_family(n, max_exp);
    let mut by_prime: Vec<(VarSet, Vec<&IrreducibleComponent>)> = Vec::new();
    for t in &family {
        let p = t.prime();
        match by_prime.iter_mut().find(|(q, _)| *q == p) {
            Some((_, v)) => v.push(t),
            None => by_prime.push((p, vec![t])),
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < count * 20 {
        attempts += 1;
        let (_, group) = &by_prime[rng.gen_range(0..by_prime.len())];
        let k = rng.gen_range(1..=3);
        let q = (0..k)
            .map(|_| group[rng.gen_range(0..group.len())].ideal().clone())
            .reduce(|a, b| a.intersect(&b).expect("same ring"))
            .expect("k ≥ 1");
        if seen.insert(q.gens().to_vec()) {
            out.push(q);
        }
    }
    out
}

/// A random connected graph on `n` vertices: a random spanning
/// tree plus each remaining edge with probability `p`.
pub fn random_connected_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = BTreeSet::new();
    for k in 1..n {
        let parent = order[rng.gen_range(0..k)];
        let (u, v) = (order[k], parent);
        edges.insert((u.min(v), u.max(v)));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.insert((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("valid edges")
}

/// Connected graphs for the edge-ideal checks: every connected labelled
/// graph on 2 to 4 vertices, paths, cycles, stars and complete graphs up
/// to `max_vertices`, and `random` seeded graphs on 5 to `max_vertices`
/// vertices.
pub fn graph_corpus(max_vertices: usize, random: usize, seed: u64) -> Vec<Graph> {
    let mut graphs: Vec<Graph> = Vec::new();
    let mut seen = BTreeSet::new();
    let mut add = |g: Graph, graphs: &mut Vec<Graph>| {
        if g.is_connected()
            && !g.edges().is_empty()
            && seen.insert((g.vertex_count(), g.edges().to_vec()))
        {
            graphs.push(g);
        }
    };
    for n in 2..=max_vertices.min(4) {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        for mask in 1u32..1 << pairs.len() {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .map(|(_, &e)| e);
            add(Graph::new(n, edges).expect("valid edges"), &mut graphs);
        }
    }
    for n in 2..=max_vertices {
        add(Graph::path(n).expect("path"), &mut graphs);
        add(
            Graph::new(n, (1..n).map(|i| (0, i))).expect("star"),
            &mut graphs,
        );
        add(Graph::complete(n).expect("complete"), &mut graphs);
        if n >= 3 {
            add(Graph::cycle(n).expect("cycle"), &mut graphs);
        }
    }
    if max_vertices >= 5 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..random {
            let n = rng.gen_range(5..=max_vertices);
            add(random_connected_graph(n, 0.3, &mut rng), &mut graphs);
        }
    }
    graphs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn staircases_are_complete() {
        // antichains in a 2x2 box, excluding the unit ideal
        let s = staircase_ideals(1, 5);
        let rendered: Vec<String> = s.iter().map(MonomialIdeal::render).collect();
        assert_eq!(s.len(), 4, "{rendered:?}");
        assert!(rendered.contains(&"(x, y)".to_string()));
        assert!(s.iter().all(|i| i.gens().iter().all(|g| g.max_exp() <= 1)));
    }

    #[test]
    fn corpus_is_deterministic_and_bounded() {
        let a = ideal_corpus(4, 5, 600, 7);
        let b = ideal_corpus(4, 5, 600, 7);
        assert_eq!(a, b);
        assert_eq!(a.len(), 600);
        assert!(a
            .iter()
            .all(|i| i.is_proper_nonzero() && i.gens().len() <= 5));
        assert!(a.iter().any(|i| i.nvars() == 3));
    }

    #[test]
    fn irreducibles() {
        assert_eq!(irreducible_family(2, 2).len(), 2 + 2 + 4);
        assert_eq!(irreducible_family(3, 4).len(), 12 + 48 + 64);
    }

    #[test]
    fn graphs() {
        let gs = graph_corpus(7, 20, 1);
        assert!(gs.iter().all(|g| g.is_connected() && g.vertex_count() <= 7));
        // 1 + 4 + 38 connected labelled graphs on 2, 3, 4 vertices
        assert_eq!(gs.iter().filter(|g| g.vertex_count() <= 4).count(), 43);
        assert_eq!(gs, graph_corpus(7, 20, 1));
    }
}
