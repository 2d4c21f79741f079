//! Simple graphs and their edge ideals `(x_i x_j : ij ∈ E)`.
//!
//! Minimal vertex covers are the minimal primes of the edge ideal; since
//! the ideal is squarefree, they are all of its associated primes and
//! `ω(I)` is their number.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::certificate::WitnessCertificate;
use crate::decomposition::associated_primes;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, Ring, VarSet};
use crate::omega::{omega_with, OmegaOptions, OmegaValue};
use crate::poly::SparsePolynomial;

/// Largest vertex count accepted by the exhaustive cover enumeration.
pub const MAX_COVER_VERTICES: usize = 16;

/// An undirected simple graph on vertices `0..vertex_count`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Edges are 0-based pairs; they are normalised to `(min, max)` and sorted.
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::Graph("a graph needs at least one vertex".into()));
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::Graph(format!(
                    "edge {}-{} out of range",
                    u + 1,
                    v + 1
                )));
            }
            if u == v {
                return Err(Error::Graph(format!("loop at vertex {}", u + 1)));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::Graph(format!("duplicate edge {}-{}", u + 1, v + 1)));
            }
        }
        Ok(Graph {
            vertex_count,
            edges: set.into_iter().collect(),
        })
    }

    /// Reads an edge list with one `u v` pair per line (1-based; commas
    /// also separate). Blank lines and `#` comments are skipped. The
    /// vertex count is the largest endpoint.
    pub fn parse(text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        let mut offset = 0;
        for line in text.split_inclusive('\n') {
            let body = line.split('#').next().unwrap_or("");
            let fields: Vec<&str> = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .collect();
            match fields.as_slice() {
                [] => {}
                [u, v] => {
                    let read = |s: &str| match s.parse::<usize>() {
                        Ok(k) if k >= 1 => Ok(k - 1),
                        _ => Err(Error::parse(
                            offset,
                            format!("bad vertex `{s}` (vertices are numbered from 1)"),
                        )),
                    };
                    edges.push((read(u)?, read(v)?));
                }
                _ => return Err(Error::parse(offset, "expected a line `u v`")),
            }
            offset += line.len();
        }
        let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        Graph::new(n, edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Graph("a cycle needs at least 3 vertices".into()));
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Self> {
        Graph::new(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges
            .iter()
            .filter_map(move |&(a, b)| match (a == v, b == v) {
                (true, _) => Some(b),
                (_, true) => Some(a),
                _ => None,
            })
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in self.neighbours(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Renders the 1-based edge-list format read by [`Graph::parse`].
    pub fn to_edge_list(&self) -> String {
        self.edges
            .iter()
            .map(|(u, v)| format!("{} {}\n", u + 1, v + 1))
            .collect()
    }
}

pub fn edge_ideal(g: &Graph) -> Result<MonomialIdeal> {
    if g.edges.is_empty() {
        return Err(Error::Graph(
            "the edge ideal of a graph without edges is zero".into(),
        ));
    }
    let ring = Ring::with_default_names(g.vertex_count)?;
    let n = g.vertex_count;
    let gens = g
        .edges
        .iter()
        .map(|&(u, v)| {
            let mut e = vec![0; n];
            e[u] = 1;
            e[v] = 1;
            Monomial::new(e)
        })
        .collect();
    MonomialIdeal::minimalize(&ring, gens)
}

/// Two-colouring by breadth-first search, one component at a time.
pub fn is_bipartite(g: &Graph) -> bool {
    let mut colour: Vec<Option<bool>> = vec![None; g.vertex_count];
    for s in 0..g.vertex_count {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(false);
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let c = colour[v].expect("coloured when queued");
            for w in g.neighbours(v) {
                match colour[w] {
                    None => {
                        colour[w] = Some(!c);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == c => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// All inclusion-minimal vertex covers, sorted by size then vertices.
pub fn minimal_vertex_covers(g: &Graph) -> Result<Vec<VarSet>> {
    if g.vertex_count > MAX_COVER_VERTICES {
        return Err(Error::Graph(format!(
            "cover enumeration is limited to {MAX_COVER_VERTICES} vertices, got {}",
            g.vertex_count
        )));
    }
    let edge_masks: Vec<u32> = g.edges.iter().map(|&(u, v)| (1 << u) | (1 << v)).collect();
    let covers = |mask: u32| edge_masks.iter().all(|&e| e & mask != 0);
    let mut out: Vec<VarSet> = (0u32..1 << g.vertex_count)
        .filter(|&mask| {
            covers(mask)
                && (0..g.vertex_count).all(|v| mask & (1 << v) == 0 || !covers(mask & !(1 << v)))
        })
        .map(|mask| {
            VarSet::from_sorted(
                (0..g.vertex_count)
                    .filter(|v| mask & (1 << v) != 0)
                    .collect(),
            )
        })
        .collect();
    out.sort();
    Ok(out)
}

/// `ω(I(G))`: the number of minimal vertex covers.
pub fn omega_edge_ideal(g: &Graph) -> Result<u64> {
    if g.edges.is_empty() {
        return Err(Error::Graph("graph has no edges".into()));
    }
    Ok(minimal_vertex_covers(g)?.len() as u64)
}

/// The witness `∏_i (Σ_{x_j ∈ P_i} x_j)`, each factor repeated `m` times,
/// against `I^m`; it proves `ω(I^m) ≥ m·r` for a squarefree ideal with
/// minimal primes `P_1, ..., P_r`.
pub fn squarefree_power_witness(
    ideal: &MonomialIdeal,
    primes: &[VarSet],
    m: u32,
) -> Result<WitnessCertificate> {
    let ring = ideal.ring();
    let target = ideal.power(m)?;
    let mut factors = Vec::with_capacity(primes.len() * m as usize);
    for p in primes {
        let sum = SparsePolynomial::sum_of_monomials(ring, p.iter().map(|i| ring.var(i)));
        factors.extend(std::iter::repeat_n(sum, m as usize));
    }
    Ok(WitnessCertificate::new(factors, target))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgePowerRow {
    pub m: u32,
    pub omega: OmegaValue,
    /// `m·r`, the value linearity predicts.
    pub expected: u64,
    /// `I^m = ∩ P_i^m`; only checked for bipartite graphs.
    pub power_equals_intersection: Option<bool>,
    pub witness_verified: bool,
    /// Whether the ideal generated by every vertex is associated to `I^m`.
    pub maximal_ideal_associated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgePowerReport {
    pub vertices: usize,
    pub edges: usize,
    pub bipartite: bool,
    pub covers: Vec<Vec<usize>>,
    pub rows: Vec<EdgePowerRow>,
}

impl EdgePowerReport {
    /// Every row exact and equal to `m·r`.
    pub fn linear(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.omega == OmegaValue::Exact(r.expected))
    }
}

/// Tabulates `ω(I^m)` against `m·ω(I)` for `m = 1..=m_max`.
pub fn edge_power_linearity(g: &Graph, m_max: u32) -> Result<EdgePowerReport> {
    if m_max == 0 {
        return Err(Error::ZeroPower);
    }
    let ideal = edge_ideal(g)?;
    let covers = minimal_vertex_covers(g)?;
    let r = covers.len() as u64;
    let bipartite = is_bipartite(g);
    let all = VarSet::all(g.vertex_count);
    let opts = OmegaOptions::default().without_certificates();
    let mut rows = Vec::new();
    for m in 1..=m_max {
        let power = ideal.power(m)?;
        let omega = omega_with(&power, &opts).value;
        let power_equals_intersection = bipartite.then(|| {
            let ring = ideal.ring();
            let parts: Vec<MonomialIdeal> = covers
                .iter()
                .map(|p| MonomialIdeal::prime(ring, p).power_unchecked(m))
                .collect();
            MonomialIdeal::intersect_all(parts.iter()).expect("at least one cover") == power
        });
        let witness_verified = squarefree_power_witness(&ideal, &covers, m)?.verify();
        let maximal_ideal_associated = associated_primes(&power)?.contains(&all);
        rows.push(EdgePowerRow {
            m,
            omega,
            expected: m as u64 * r,
            power_equals_intersection,
            witness_verified,
            maximal_ideal_associated,
        });
    }
    Ok(EdgePowerReport {
        vertices: g.vertex_count,
        edges: g.edges.len(),
        bipartite,
        covers: covers
            .iter()
            .map(|c| c.iter().map(|v| v + 1).collect())
            .collect(),
        rows,
    })
}
