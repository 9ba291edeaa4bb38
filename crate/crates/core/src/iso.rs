//! Induced-subgraph search, forbidden patterns and the ⪯ order on
//! pattern sets.

use std::collections::BTreeMap;
use std::fmt;

use crate::bitset::VertexSet;
use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::Graph;
use crate::{Error, Result};

/// Largest order accepted by [`maximal_common_induced_subgraphs`].
pub const MAX_COMMON_ORDER: usize = 10;

/// A connected graph used as a forbidden induced subgraph.
#[derive(Clone, PartialEq, Eq)]
pub struct Pattern {
    graph: Graph,
    label: Option<String>,
}

impl Pattern {
    pub fn new(graph: Graph, label: Option<String>) -> Result<Self> {
        if graph.n() == 0 {
            return Err(Error::EmptyGraph);
        }
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(Pattern { graph, label })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// Display name: the label, or `g6:<record>` for unlabelled patterns.
    pub fn name(&self) -> String {
        match &self.label {
            Some(l) => l.clone(),
            None => match crate::graph6::to_graph6(&self.graph) {
                Ok(s) => format!("g6:{s}"),
                Err(_) => format!("n{}m{}", self.graph.n(), self.graph.m()),
            },
        }
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({})", self.name())
    }
}

/// A finite set of pairwise non-isomorphic patterns.
#[derive(Clone)]
pub struct PatternSet {
    patterns: Vec<Pattern>,
}

impl PatternSet {
    /// Fails on an empty list or on two isomorphic members.
    pub fn new(patterns: Vec<Pattern>) -> Result<Self> {
        if patterns.is_empty() {
            return Err(Error::InvalidSpec("pattern set must be nonempty".into()));
        }
        let forms: Vec<CanonicalForm> = patterns.iter().map(|p| canonical_form(&p.graph)).collect();
        for i in 0..forms.len() {
            for j in i + 1..forms.len() {
                if forms[i] == forms[j] {
                    return Err(Error::InvalidSpec(format!(
                        "patterns {} and {} are isomorphic",
                        patterns[i].name(),
                        patterns[j].name()
                    )));
                }
            }
        }
        Ok(PatternSet { patterns })
    }

    /// Like [`PatternSet::new`] but keeps only the first of any isomorphic
    /// members.
    pub fn collapsing(patterns: Vec<Pattern>) -> Result<Self> {
        let mut seen = Vec::new();
        let mut kept = Vec::new();
        for p in patterns {
            let f = canonical_form(&p.graph);
            if !seen.contains(&f) {
                seen.push(f);
                kept.push(p);
            }
        }
        Self::new(kept)
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Pattern> {
        self.patterns.iter()
    }

    /// Sorted canonical forms of the members; equal keys mean the sets
    /// agree up to isomorphism of members.
    pub fn iso_key(&self) -> Vec<CanonicalForm> {
        let mut k: Vec<_> = self
            .patterns
            .iter()
            .map(|p| canonical_form(&p.graph))
            .collect();
        k.sort();
        k
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.patterns.iter().map(Pattern::name).collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

impl fmt::Debug for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PatternSet{self}")
    }
}

/// Search plan for one pattern: vertex order plus, per position, which
/// earlier positions must be adjacent and which must not.
struct Plan {
    order: Vec<usize>,
    adjacent_before: Vec<Vec<usize>>,
    apart_before: Vec<Vec<usize>>,
    degree: Vec<usize>,
}

impl Plan {
    fn new(h: &Graph) -> Plan {
        let n = h.n();
        let mut placed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let next = (0..n)
                .filter(|&v| !placed[v])
                .max_by_key(|&v| {
                    let links = order.iter().filter(|&&u| h.has_edge(u, v)).count();
                    (links, h.degree(v), std::cmp::Reverse(v))
                })
                .expect("unplaced vertex remains");
            placed[next] = true;
            order.push(next);
        }
        let mut adjacent_before = Vec::with_capacity(n);
        let mut apart_before = Vec::with_capacity(n);
        for (k, &v) in order.iter().enumerate() {
            let (adj, apart): (Vec<usize>, Vec<usize>) =
                (0..k).partition(|&i| h.has_edge(order[i], v));
            adjacent_before.push(adj);
            apart_before.push(apart);
        }
        let degree = order.iter().map(|&v| h.degree(v)).collect();
        Plan {
            order,
            adjacent_before,
            apart_before,
            degree,
        }
    }
}

struct Matcher<'a> {
    g: &'a Graph,
    plan: Plan,
    /// `eligible[k]`: host vertices with degree at least that of position `k`.
    eligible: Vec<VertexSet>,
}

impl Matcher<'_> {
    fn extend(&self, k: usize, images: &mut Vec<usize>, used: &mut VertexSet) -> bool {
        if k == self.plan.order.len() {
            return true;
        }
        let mut cand = self.eligible[k].difference(used);
        for &i in &self.plan.adjacent_before[k] {
            cand.intersect_words(self.g.row(images[i]));
        }
        for &i in &self.plan.apart_before[k] {
            cand.subtract_words(self.g.row(images[i]));
        }
        for w in cand.iter() {
            images.push(w);
            used.insert(w);
            if self.extend(k + 1, images, used) {
                return true;
            }
            used.remove(w);
            images.pop();
        }
        false
    }
}

/// An induced embedding of `h` in `g`: `map[v]` is the host vertex of
/// pattern vertex `v`.
pub fn find_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if h.n() > g.n() {
        return None;
    }
    if h.n() == 0 {
        return Some(Vec::new());
    }
    if h.m() > g.m() {
        return None;
    }
    let gmax = (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0);
    if (0..h.n()).any(|v| h.degree(v) > gmax) {
        return None;
    }
    let plan = Plan::new(h);
    let eligible = plan
        .degree
        .iter()
        .map(|&d| {
            let mut s = VertexSet::empty(g.n());
            for v in (0..g.n()).filter(|&v| g.degree(v) >= d) {
                s.insert(v);
            }
            s
        })
        .collect();
    let matcher = Matcher { g, plan, eligible };
    let mut images = Vec::with_capacity(h.n());
    let mut used = VertexSet::empty(g.n());
    if !matcher.extend(0, &mut images, &mut used) {
        return None;
    }
    let mut map = vec![0; h.n()];
    for (k, &v) in matcher.plan.order.iter().enumerate() {
        map[v] = images[k];
    }
    Some(map)
}

/// Whether `h` occurs in `g` as an induced subgraph.
pub fn contains_induced_graph(g: &Graph, h: &Graph) -> bool {
    find_induced(g, h).is_some()
}

pub fn contains_induced(g: &Graph, h: &Pattern) -> bool {
    contains_induced_graph(g, &h.graph)
}

/// `g` contains no member of `hs` as an induced subgraph.
pub fn is_free(g: &Graph, hs: &PatternSet) -> bool {
    hs.iter().all(|h| !contains_induced(g, h))
}

/// `h1 ⪯ h2`: every member of `h2` has some member of `h1` as an induced
/// subgraph. Then every `h1`-free graph is `h2`-free.
pub fn pattern_preceq(h1: &PatternSet, h2: &PatternSet) -> bool {
    h2.iter().all(|b| {
        h1.iter()
            .any(|a| contains_induced_graph(&b.graph, &a.graph))
    })
}

/// `h1 ⪯ h2` and `h2 ⪯ h1`.
pub fn pattern_equivalent(h1: &PatternSet, h2: &PatternSet) -> bool {
    pattern_preceq(h1, h2) && pattern_preceq(h2, h1)
}

/// Every connected induced subgraph of `g` with at most `max_order`
/// vertices, one per isomorphism class, keyed by canonical form.
pub fn connected_induced_classes(g: &Graph, max_order: usize) -> BTreeMap<CanonicalForm, Graph> {
    let mut out = BTreeMap::new();
    if max_order == 0 {
        return out;
    }
    let n = g.n();
    for v in 0..n {
        let mut sub = VertexSet::empty(n);
        sub.insert(v);
        let mut ext = VertexSet::empty(n);
        for u in g.neighbors(v).filter(|&u| u > v) {
            ext.insert(u);
        }
        let mut closed = g.neighbor_set(v);
        closed.insert(v);
        extend_connected(g, v, &sub, ext, &closed, max_order, &mut out);
    }
    out
}

/// ESU enumeration: each connected vertex set whose least vertex is `root`
/// is visited exactly once.
fn extend_connected(
    g: &Graph,
    root: usize,
    sub: &VertexSet,
    mut ext: VertexSet,
    closed: &VertexSet,
    max_order: usize,
    out: &mut BTreeMap<CanonicalForm, Graph>,
) {
    let h = g.induced(sub);
    out.entry(canonical_form(&h)).or_insert(h);
    if sub.len() == max_order {
        return;
    }
    while let Some(w) = ext.first() {
        ext.remove(w);
        let mut next_ext = ext.clone();
        for u in g.neighbors(w) {
            if u > root && !closed.contains(u) {
                next_ext.insert(u);
            }
        }
        let mut next_sub = sub.clone();
        next_sub.insert(w);
        let mut next_closed = closed.clone();
        next_closed.union_words(g.row(w));
        extend_connected(g, root, &next_sub, next_ext, &next_closed, max_order, out);
    }
}

/// All connected graphs with at most `max_order` vertices that are induced
/// in every member of `a` and of `b` and are maximal with that property
/// (within `max_order`), one per isomorphism class, ordered by order and
/// then canonical form.
pub fn maximal_common_induced_subgraphs(
    a: &[Graph],
    b: &[Graph],
    max_order: usize,
) -> Result<Vec<Graph>> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::Precondition(
            "both graph lists must be nonempty".into(),
        ));
    }
    if max_order > MAX_COMMON_ORDER {
        return Err(Error::OutOfRange {
            what: "max_order",
            value: max_order,
            range: "0..=10",
        });
    }
    let all: Vec<&Graph> = a.iter().chain(b).collect();
    let source = all
        .iter()
        .min_by_key(|g| (g.n(), g.m()))
        .expect("nonempty list");
    let classes = connected_induced_classes(source, max_order);
    let mut common: Vec<(CanonicalForm, Graph)> = classes
        .into_iter()
        .filter(|(_, h)| all.iter().all(|g| contains_induced_graph(g, h)))
        .collect();
    common.sort_by(|x, y| (x.1.n(), &x.0).cmp(&(y.1.n(), &y.0)));
    let maximal = common
        .iter()
        .filter(|(_, h)| {
            !common
                .iter()
                .any(|(_, big)| big.n() > h.n() && contains_induced_graph(big, h))
        })
        .map(|(_, h)| h.clone())
        .collect();
    Ok(maximal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphBuilder;

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut b = GraphBuilder::new(n);
        b.add_clique(&(0..n).collect::<Vec<_>>()).unwrap();
        b.build()
    }

    fn claw() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn pat(g: Graph, name: &str) -> Pattern {
        Pattern::new(g, Some(name.into())).unwrap()
    }

    #[test]
    fn containment_examples() {
        assert!(!contains_induced_graph(&complete(4), &claw()));
        assert!(contains_induced_graph(&cycle(5), &path(4)));
        assert!(!contains_induced_graph(&cycle(4), &path(4)));
        assert!(contains_induced_graph(&path(3), &Graph::empty(1)));
        assert!(!contains_induced_graph(&path(3), &path(4)));
    }

    #[test]
    fn embedding_is_induced() {
        let c7 = cycle(7);
        let p5 = path(5);
        let map = find_induced(&c7, &p5).unwrap();
        for u in 0..5 {
            for v in 0..5 {
                if u != v {
                    assert_eq!(p5.has_edge(u, v), c7.has_edge(map[u], map[v]));
                }
            }
        }
    }

    #[test]
    fn pattern_requires_connected_graph() {
        assert!(Pattern::new(Graph::empty(2), None).is_err());
        assert!(Pattern::new(Graph::empty(0), None).is_err());
    }

    #[test]
    fn pattern_set_rejects_isomorphic_members() {
        let a = pat(path(3), "P3");
        let b = pat(Graph::from_edges(3, &[(0, 2), (2, 1)]).unwrap(), "P3'");
        assert!(PatternSet::new(vec![a.clone(), b.clone()]).is_err());
        assert_eq!(PatternSet::collapsing(vec![a, b]).unwrap().len(), 1);
        assert!(PatternSet::new(vec![]).is_err());
    }

    #[test]
    fn freeness_examples() {
        let hs = PatternSet::new(vec![pat(complete(3), "K3"), pat(claw(), "K1_3")]).unwrap();
        assert!(is_free(&cycle(6), &hs));
        let p5 = PatternSet::new(vec![pat(path(5), "P5")]).unwrap();
        assert!(is_free(&path(4), &p5));
    }

    #[test]
    fn preceq_examples() {
        let p5 = PatternSet::new(vec![pat(path(5), "P5")]).unwrap();
        let p4 = PatternSet::new(vec![pat(path(4), "P4")]).unwrap();
        assert!(!pattern_preceq(&p5, &p4));
        assert!(pattern_preceq(&p4, &p5));
        assert!(pattern_preceq(&p4, &p4));
    }

    #[test]
    fn common_subgraph_examples() {
        let r = maximal_common_induced_subgraphs(&[complete(3)], &[claw()], 4).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!((r[0].n(), r[0].m()), (2, 1));
        assert!(maximal_common_induced_subgraphs(&[], &[claw()], 4).is_err());
        assert!(maximal_common_induced_subgraphs(&[claw()], &[claw()], 11).is_err());
    }

    #[test]
    fn connected_classes_of_c5() {
        let classes = connected_induced_classes(&cycle(5), 5);
        // K1, K2, P3, P4, C5.
        assert_eq!(classes.len(), 5);
    }
}
