//! Exact connectivity invariants and the minimum-edge-cut certificate.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::flow::FlowNetwork;
use crate::graph::Graph;
use crate::{Error, Result};

fn require_connected(g: &Graph, need: usize) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.n() < need {
        return Err(Error::TooSmall { need, n: g.n() });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// δ(G).
pub fn min_degree(g: &Graph) -> Result<usize> {
    (0..g.n())
        .map(|v| g.degree(v))
        .min()
        .ok_or(Error::EmptyGraph)
}

/// Least sink `t` realising the global minimum `0`–`t` flow, with that value.
fn min_cut_sink(g: &Graph) -> Result<(usize, usize)> {
    require_connected(g, 2)?;
    let delta = min_degree(g)? as u32;
    let mut net = FlowNetwork::bidirected(g);
    // Flows are capped at the running minimum; `delta + 1` is a sentinel
    // so that the first sink reaching the true minimum is the one recorded.
    let mut best = delta + 1;
    let mut best_t = 0;
    for t in 1..g.n() {
        net.reset();
        let f = net.max_flow(0, t, best);
        if f < best {
            best = f;
            best_t = t;
        }
    }
    Ok((best_t, best as usize))
}

/// κ′(G): the minimum over sinks `t != 0` of the `0`–`t` max-flow on the
/// bidirected unit-capacity network.
pub fn edge_connectivity(g: &Graph) -> Result<usize> {
    min_cut_sink(g).map(|(_, k)| k)
}

/// A minimum edge cut `M` together with the two sides of `G - M` and the
/// boundary sets `S_i = V(G_i) ∩ V(M)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutCertificate {
    pub cut_edges: Vec<(usize, usize)>,
    pub side1: VertexSet,
    pub side2: VertexSet,
    pub boundary1: VertexSet,
    pub boundary2: VertexSet,
}

impl CutCertificate {
    /// Re-checks the certificate against `g`: the cut separates exactly the
    /// two recorded connected sides, has size κ′, and the boundaries are
    /// the cut-incident vertices of each side.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let fail = |msg: &str| Err(Error::Consistency(format!("cut certificate: {msg}")));
        if !self.side1.intersection(&self.side2).is_empty()
            || self.side1.union(&self.side2).len() != g.n()
        {
            return fail("sides do not partition the vertex set");
        }
        let mut crossing = Vec::new();
        for (u, v) in g.edges() {
            if self.side1.contains(u) != self.side1.contains(v) {
                crossing.push((u, v));
            }
        }
        if crossing != self.cut_edges {
            return fail("cut edges differ from the edges between the sides");
        }
        if self.cut_edges.len() != edge_connectivity(g)? {
            return fail("cut size differs from edge connectivity");
        }
        if !g.is_connected_within(&self.side1) || !g.is_connected_within(&self.side2) {
            return fail("a side is not connected");
        }
        let mut b1 = VertexSet::empty(g.n());
        let mut b2 = VertexSet::empty(g.n());
        for &(u, v) in &self.cut_edges {
            for x in [u, v] {
                if self.side1.contains(x) {
                    b1.insert(x);
                } else {
                    b2.insert(x);
                }
            }
        }
        if b1 != self.boundary1 || b2 != self.boundary2 {
            return fail("boundary sets are not the cut-incident vertices");
        }
        if b1.len() > self.cut_edges.len() || b2.len() > self.cut_edges.len() {
            return fail("boundary larger than the cut");
        }
        Ok(())
    }
}

/// A minimum edge cut, chosen deterministically: the least sink achieving
/// κ′, then the source side of the residual network of that flow.
pub fn min_edge_cut(g: &Graph) -> Result<CutCertificate> {
    let (t, k) = min_cut_sink(g)?;
    let mut net = FlowNetwork::bidirected(g);
    let f = net.max_flow(0, t, u32::MAX) as usize;
    debug_assert_eq!(f, k);
    let reach = net.residual_reach(0);
    let n = g.n();
    let side1 = VertexSet::from_vertices(n, (0..n).filter(|&v| reach[v]))?;
    let side2 = side1.complement();
    let mut cut_edges = Vec::with_capacity(k);
    let mut boundary1 = VertexSet::empty(n);
    let mut boundary2 = VertexSet::empty(n);
    for (u, v) in g.edges() {
        if reach[u] != reach[v] {
            cut_edges.push((u, v));
            let (a, b) = if reach[u] { (u, v) } else { (v, u) };
            boundary1.insert(a);
            boundary2.insert(b);
        }
    }
    Ok(CutCertificate {
        cut_edges,
        side1,
        side2,
        boundary1,
        boundary2,
    })
}

/// κ(G), with κ(K_n) = n − 1.
///
/// Local connectivities are computed on the vertex-split network, only
/// from the first κ + 1 vertices to later non-neighbours (Even's scheme);
/// some vertex among them avoids any minimum separator.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    require_connected(g, 1)?;
    let n = g.n();
    if g.is_complete() {
        return Ok(n - 1);
    }
    let mut best = min_degree(g)? as u32;
    let mut net = FlowNetwork::vertex_split(g);
    let mut i = 0;
    while i <= best as usize && i < n {
        for j in i + 1..n {
            if g.has_edge(i, j) {
                continue;
            }
            net.reset();
            let f = net.max_flow(2 * i + 1, 2 * j, best);
            best = best.min(f);
        }
        i += 1;
    }
    Ok(best as usize)
}

/// ω(G) by branch and bound with greedy-colouring bounds.
pub fn clique_number(g: &Graph) -> Result<usize> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut best = 1;
    expand_clique(g, order, 0, &mut best);
    Ok(best)
}

/// Greedy colouring of `cand` in the given order; returns vertices sorted
/// by colour and each one's colour (1-based).
fn colour_sort(g: &Graph, cand: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in cand {
        match classes
            .iter_mut()
            .find(|c| c.iter().all(|&u| !g.has_edge(u, v)))
        {
            Some(c) => c.push(v),
            None => classes.push(vec![v]),
        }
    }
    let mut order = Vec::with_capacity(cand.len());
    let mut colours = Vec::with_capacity(cand.len());
    for (k, class) in classes.into_iter().enumerate() {
        colours.extend(std::iter::repeat_n(k + 1, class.len()));
        order.extend(class);
    }
    (order, colours)
}

fn expand_clique(g: &Graph, cand: Vec<usize>, size: usize, best: &mut usize) {
    let (order, colours) = colour_sort(g, &cand);
    for i in (0..order.len()).rev() {
        if size + colours[i] <= *best {
            return;
        }
        let v = order[i];
        let next: Vec<usize> = order[..i]
            .iter()
            .copied()
            .filter(|&u| g.has_edge(u, v))
            .collect();
        if next.is_empty() {
            *best = (*best).max(size + 1);
        } else {
            expand_clique(g, next, size + 1, best);
        }
    }
}

/// Checks the side structure of the computed minimum edge cut when
/// κ′ < δ: each side keeps a vertex off the boundary, and every such
/// vertex has a neighbour off the boundary on its own side.
pub fn check_claim1(g: &Graph) -> Result<bool> {
    let cert = min_edge_cut(g)?;
    let delta = min_degree(g)?;
    if cert.cut_edges.len() >= delta {
        return Err(Error::Precondition(format!(
            "requires edge connectivity < minimum degree (got {} >= {delta})",
            cert.cut_edges.len()
        )));
    }
    for (side, boundary) in [
        (&cert.side1, &cert.boundary1),
        (&cert.side2, &cert.boundary2),
    ] {
        let inner = side.difference(boundary);
        if inner.is_empty() {
            return Ok(false);
        }
        if inner.iter().any(|x| g.degree_into(x, &inner) == 0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Per-graph invariant record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub kappa: usize,
    pub kappa_prime: usize,
    pub omega: usize,
    pub diameter: usize,
}

impl InvariantReport {
    /// Computes every invariant of a connected graph. `K1` reports zeros
    /// for δ, κ and κ′.
    pub fn compute(g: &Graph) -> Result<Self> {
        require_connected(g, 1)?;
        let (kappa, kappa_prime) = if g.n() == 1 {
            (0, 0)
        } else {
            (vertex_connectivity(g)?, edge_connectivity(g)?)
        };
        Ok(InvariantReport {
            n: g.n(),
            m: g.m(),
            delta: min_degree(g)?,
            kappa,
            kappa_prime,
            omega: clique_number(g)?,
            diameter: g.diameter()?,
        })
    }
}
