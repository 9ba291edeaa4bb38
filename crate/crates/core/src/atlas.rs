//! Named graphs and the κ′ = 1 < 2 = δ witness families.
//!
//! Vertex numbering of the named graphs is fixed:
//!
//! * `P_i`, `C_n`, `K_n`: vertices `0..` in path / cycle order.
//! * `K{m,n}`: parts `0..m` and `m..m+n`. `K1_r` is the star with centre 0.
//! * `Z_i`: triangle `{0,1,2}`, tail `2-3-…-(i+2)`.
//! * `T{i,j,k}`: centre 0, then the three legs in order, each numbered
//!   outwards from the centre.
//! * `H0`: the bowtie, centre 0 and triangles `{0,1,2}`, `{0,3,4}`.
//! * `H1`: triangles `{0,1,2}` and `{3,4,5}` joined by the edge `2-3`.
//!
//! The families `1..=7` are parameterised graphs with edge connectivity 1
//! and minimum degree 2. Each member is generated together with a
//! certificate of the properties the family is used for; generation fails
//! if any property does not hold.
//!
//! | id | params | shape |
//! |----|--------|-------|
//! | 1 | `t >= 3` | `K_t` and a triangle joined by a bridge (claw-free, chordal, longest induced path `P4`) |
//! | 2 | `k >= 4, l >= 1` | two `C_k` joined by a path of `l` edges (triangle-free) |
//! | 3 | `l >= 3` | two triangles joined by a path of `l` edges (claw-free) |
//! | 4 | `r >= 1` | two windmills of `r` triangles, centres joined by a bridge (`K4`-free, longest induced path `P4`) |
//! | 5 | `r >= 1` | two windmills of `r` triangles, centres joined by a 2-edge path (`H1`-free, longest induced path `P5`) |
//! | 6 | `k >= 2` | two `K{2,k}` joined by a bridge between degree-`k` vertices (triangle-free, longest induced path `P6`) |
//! | 7 | `l >= 2` | two `C4` joined by a path of `l` edges (triangle-free, maximum degree 3, contains `T{1,1,3}`) |

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphBuilder};
use crate::graph6::from_graph6;
use crate::invariants::{edge_connectivity, min_degree};
use crate::iso::{contains_induced_graph, is_free, Pattern, PatternSet};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedKind {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    Z,
    T,
    H0,
    H1,
}

impl NamedKind {
    fn arity(self) -> usize {
        match self {
            NamedKind::Path
            | NamedKind::Cycle
            | NamedKind::Complete
            | NamedKind::Star
            | NamedKind::Z => 1,
            NamedKind::CompleteBipartite => 2,
            NamedKind::T => 3,
            NamedKind::H0 | NamedKind::H1 => 0,
        }
    }
}

/// A named graph: a kind plus its integer parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NamedGraphSpec {
    kind: NamedKind,
    params: Vec<usize>,
}

impl NamedGraphSpec {
    pub fn new(kind: NamedKind, params: Vec<usize>) -> Result<Self> {
        if params.len() != kind.arity() {
            return Err(Error::InvalidSpec(format!(
                "{kind:?} takes {} parameter(s), got {}",
                kind.arity(),
                params.len()
            )));
        }
        if params.contains(&0) {
            return Err(Error::InvalidSpec(format!(
                "{kind:?} parameters must be >= 1"
            )));
        }
        if kind == NamedKind::Cycle && params[0] < 3 {
            return Err(Error::InvalidSpec("cycles need at least 3 vertices".into()));
        }
        Ok(NamedGraphSpec { kind, params })
    }

    pub fn kind(&self) -> NamedKind {
        self.kind
    }

    pub fn params(&self) -> &[usize] {
        &self.params
    }

    /// Parses names such as `P5`, `C6`, `K4`, `K{2,3}`, `K1_4`, `Z2`,
    /// `T{1,1,3}`, `T1_1_3`, `H0`, `H1`.
    pub fn parse(name: &str) -> Result<Self> {
        let bad = || Error::InvalidSpec(format!("unknown graph name {name:?}"));
        let name = name.trim();
        if name == "H0" {
            return Self::new(NamedKind::H0, vec![]);
        }
        if name == "H1" {
            return Self::new(NamedKind::H1, vec![]);
        }
        let (head, rest) = name.split_at(name.chars().next().ok_or_else(bad)?.len_utf8());
        let numbers = |s: &str, sep: char| -> Result<Vec<usize>> {
            s.split(sep)
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect()
        };
        let braced = rest.strip_prefix('{').and_then(|r| r.strip_suffix('}'));
        match head {
            "P" => Self::new(NamedKind::Path, numbers(rest, ',')?),
            "C" => Self::new(NamedKind::Cycle, numbers(rest, ',')?),
            "Z" => Self::new(NamedKind::Z, numbers(rest, ',')?),
            "T" => {
                let p = match braced {
                    Some(inner) => numbers(inner, ',')?,
                    None => numbers(rest, '_')?,
                };
                Self::new(NamedKind::T, p)
            }
            "K" => {
                if let Some(inner) = braced {
                    return Self::new(NamedKind::CompleteBipartite, numbers(inner, ',')?);
                }
                if let Some(r) = rest.strip_prefix("1_") {
                    return Self::new(NamedKind::Star, numbers(r, ',')?);
                }
                Self::new(NamedKind::Complete, numbers(rest, ',')?)
            }
            _ => Err(bad()),
        }
    }

    /// Display name accepted back by [`NamedGraphSpec::parse`].
    pub fn name(&self) -> String {
        let p = &self.params;
        match self.kind {
            NamedKind::Path => format!("P{}", p[0]),
            NamedKind::Cycle => format!("C{}", p[0]),
            NamedKind::Complete => format!("K{}", p[0]),
            NamedKind::CompleteBipartite => format!("K{{{},{}}}", p[0], p[1]),
            NamedKind::Star => format!("K1_{}", p[0]),
            NamedKind::Z => format!("Z{}", p[0]),
            NamedKind::T => format!("T{{{},{},{}}}", p[0], p[1], p[2]),
            NamedKind::H0 => "H0".into(),
            NamedKind::H1 => "H1".into(),
        }
    }
}

impl fmt::Display for NamedGraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn build(n: usize, f: impl FnOnce(&mut GraphBuilder) -> Result<()>) -> Result<Graph> {
    let mut b = GraphBuilder::new(n);
    f(&mut b)?;
    Ok(b.build())
}

pub fn make_named(spec: &NamedGraphSpec) -> Result<Graph> {
    let p = &spec.params;
    match spec.kind {
        NamedKind::Path => build(p[0], |b| {
            b.add_path(&(0..p[0]).collect::<Vec<_>>())?;
            Ok(())
        }),
        NamedKind::Cycle => build(p[0], |b| {
            b.add_path(&(0..p[0]).collect::<Vec<_>>())?;
            b.add_edge(p[0] - 1, 0)?;
            Ok(())
        }),
        NamedKind::Complete => build(p[0], |b| {
            b.add_clique(&(0..p[0]).collect::<Vec<_>>())?;
            Ok(())
        }),
        NamedKind::CompleteBipartite => build(p[0] + p[1], |b| {
            for u in 0..p[0] {
                for v in p[0]..p[0] + p[1] {
                    b.add_edge(u, v)?;
                }
            }
            Ok(())
        }),
        NamedKind::Star => build(p[0] + 1, |b| {
            for v in 1..=p[0] {
                b.add_edge(0, v)?;
            }
            Ok(())
        }),
        NamedKind::Z => build(p[0] + 3, |b| {
            b.add_clique(&[0, 1, 2])?;
            b.add_path(&(2..p[0] + 3).collect::<Vec<_>>())?;
            Ok(())
        }),
        NamedKind::T => build(p[0] + p[1] + p[2] + 1, |b| {
            let mut next = 1;
            for &len in p {
                let mut leg = vec![0];
                leg.extend(next..next + len);
                b.add_path(&leg)?;
                next += len;
            }
            Ok(())
        }),
        NamedKind::H0 => build(5, |b| {
            b.add_clique(&[0, 1, 2])?;
            b.add_clique(&[0, 3, 4])?;
            Ok(())
        }),
        NamedKind::H1 => build(6, |b| {
            b.add_clique(&[0, 1, 2])?;
            b.add_clique(&[3, 4, 5])?;
            b.add_edge(2, 3)?;
            Ok(())
        }),
    }
}

/// Builds a named graph from its display name.
pub fn named(name: &str) -> Result<Graph> {
    make_named(&NamedGraphSpec::parse(name)?)
}

/// Resolves a pattern name from the atlas vocabulary, or an inline graph6
/// record written `g6:<record>`.
pub fn pattern(name: &str) -> Result<Pattern> {
    let name = name.trim();
    if let Some(rec) = name.strip_prefix("g6:") {
        return Pattern::new(from_graph6(rec)?, None);
    }
    let spec = NamedGraphSpec::parse(name)?;
    Pattern::new(make_named(&spec)?, Some(spec.name()))
}

/// The atlas name of a graph isomorphic to `g`, if there is one.
pub fn identify(g: &Graph) -> Option<String> {
    let n = g.n();
    let mut names = Vec::new();
    match n {
        1 => names.push("K1".to_string()),
        5 => names.push("H0".to_string()),
        6 => names.push("H1".to_string()),
        _ => {}
    }
    if n >= 4 {
        names.push(format!("Z{}", n - 3));
    }
    names.push(format!("P{n}"));
    names.push(format!("K{n}"));
    if n >= 4 {
        names.push(format!("K1_{}", n - 1));
        names.push(format!("C{n}"));
    }
    for a in 2..=n / 2 {
        names.push(format!("K{{{a},{}}}", n - a));
    }
    for i in 1..n {
        for j in i..n {
            if i + j + 1 < n && n - 1 - i - j >= j.max(2) {
                names.push(format!("T{{{i},{j},{}}}", n - 1 - i - j));
            }
        }
    }
    names.into_iter().find(|name| {
        named(name).is_ok_and(|h| h.m() == g.m() && crate::canon::are_isomorphic(&h, g))
    })
}

/// Splits on commas outside braces, so `Z2,T{1,1,3}` has two parts.
pub fn split_pattern_list(list: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, c) in list.char_indices() {
        match c {
            '{' => depth += 1,
            '}' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(list[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(list[start..].trim());
    parts.retain(|p| !p.is_empty());
    parts
}

/// Parses a comma-separated pattern list such as `Z2,P6` or `{H1,P5}`.
pub fn pattern_set(list: &str) -> Result<PatternSet> {
    let list = list.trim();
    let inner = list
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .unwrap_or(list);
    PatternSet::new(
        split_pattern_list(inner)
            .into_iter()
            .map(pattern)
            .collect::<Result<_>>()?,
    )
}

/// One generated member of a witness family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyMember {
    pub family_id: u8,
    pub params: Vec<usize>,
    #[serde(skip)]
    pub graph: Graph,
    pub certificate: Vec<(String, bool)>,
}

/// Length (in vertices) of the longest induced path.
pub fn longest_induced_path(g: &Graph) -> usize {
    let mut k = 0;
    while k < g.n() {
        let p = named(&format!("P{}", k + 1)).expect("valid path");
        if !contains_induced_graph(g, &p) {
            break;
        }
        k += 1;
    }
    k
}

/// No induced cycle of length at least 4.
pub fn is_chordal(g: &Graph) -> bool {
    (4..=g.n()).all(|k| {
        let c = named(&format!("C{k}")).expect("valid cycle");
        !contains_induced_graph(g, &c)
    })
}

fn contains(g: &Graph, name: &str) -> bool {
    contains_induced_graph(g, &named(name).expect("atlas name"))
}

/// Two copies of `side` joined by a path of `len` edges between vertex
/// `attach` of each copy. Internal path vertices are numbered after the
/// first copy; the second copy comes last.
fn join_by_path(side: &Graph, attach: usize, len: usize) -> Graph {
    let s = side.n();
    let n = 2 * s + len - 1;
    let mut b = GraphBuilder::new(n);
    let second = s + len - 1;
    for (u, v) in side.edges() {
        b.add_edge(u, v).expect("valid edge");
        b.add_edge(second + u, second + v).expect("valid edge");
    }
    let mut path = vec![attach];
    path.extend(s..second);
    path.push(second + attach);
    b.add_path(&path).expect("valid path");
    b.build()
}

/// `r` triangles sharing vertex 0.
fn windmill(r: usize) -> Graph {
    let mut b = GraphBuilder::new(2 * r + 1);
    for i in 0..r {
        b.add_clique(&[0, 2 * i + 1, 2 * i + 2])
            .expect("valid clique");
    }
    b.build()
}

fn family_params(family_id: u8, params: &[usize]) -> Result<()> {
    let bad = |msg: &str| {
        Err(Error::InvalidSpec(format!(
            "family {family_id} params {params:?}: {msg}"
        )))
    };
    match (family_id, params) {
        (1, [t]) if *t >= 3 => Ok(()),
        (1, _) => bad("expected [t] with t >= 3"),
        (2, [k, l]) if *k >= 4 && *l >= 1 => Ok(()),
        (2, _) => bad("expected [k, l] with k >= 4, l >= 1"),
        (3, [l]) if *l >= 3 => Ok(()),
        (3, _) => bad("expected [l] with l >= 3"),
        (4 | 5, [r]) if *r >= 1 => Ok(()),
        (4 | 5, _) => bad("expected [r] with r >= 1"),
        (6, [k]) if *k >= 2 => Ok(()),
        (6, _) => bad("expected [k] with k >= 2"),
        (7, [l]) if *l >= 2 => Ok(()),
        (7, _) => bad("expected [l] with l >= 2"),
        _ => Err(Error::OutOfRange {
            what: "family_id",
            value: usize::from(family_id),
            range: "1..=7",
        }),
    }
}

fn family_graph(family_id: u8, p: &[usize]) -> Graph {
    match family_id {
        1 => {
            let t = p[0];
            let mut b = GraphBuilder::new(t + 3);
            b.add_clique(&(0..t).collect::<Vec<_>>()).expect("clique");
            b.add_clique(&[t, t + 1, t + 2]).expect("triangle");
            b.add_edge(t - 1, t).expect("bridge");
            b.build()
        }
        2 => {
            let cycle = named(&format!("C{}", p[0])).expect("cycle");
            join_by_path(&cycle, p[0] - 1, p[1])
        }
        3 => join_by_path(&named("K3").expect("K3"), 2, p[0]),
        4 => join_by_path(&windmill(p[0]), 0, 1),
        5 => join_by_path(&windmill(p[0]), 0, 2),
        6 => {
            let side = named(&format!("K{{2,{}}}", p[0])).expect("K2,k");
            join_by_path(&side, 0, 1)
        }
        7 => join_by_path(&named("C4").expect("C4"), 0, p[0]),
        _ => unreachable!("family id validated"),
    }
}

/// Properties certified for every member of `family_id`.
fn family_certificate(family_id: u8, p: &[usize], g: &Graph) -> Vec<(String, bool)> {
    let mut cert = vec![
        ("connected".to_string(), g.is_connected()),
        (
            "kappa_prime=1".to_string(),
            edge_connectivity(g).is_ok_and(|k| k == 1),
        ),
        ("delta=2".to_string(), min_degree(g).is_ok_and(|d| d == 2)),
    ];
    let mut push = |name: String, ok: bool| cert.push((name, ok));
    let lip = longest_induced_path(g);
    match family_id {
        1 => {
            push("claw-free".into(), !contains(g, "K1_3"));
            push("chordal".into(), is_chordal(g));
            push("longest_induced_path=P4".into(), lip == 4);
            push(
                format!("contains K{}", p[0]),
                contains(g, &format!("K{}", p[0])),
            );
            push("contains H1".into(), contains(g, "H1"));
            push("contains Z2".into(), contains(g, "Z2"));
        }
        2 => {
            push("triangle-free".into(), !contains(g, "K3"));
        }
        3 => {
            push("claw-free".into(), !contains(g, "K1_3"));
            push(
                format!("longest_induced_path=P{}", p[0] + 3),
                lip == p[0] + 3,
            );
        }
        4 => {
            push("K4-free".into(), !contains(g, "K4"));
            push("longest_induced_path=P4".into(), lip == 4);
        }
        5 => {
            push("H1-free".into(), !contains(g, "H1"));
            push("longest_induced_path=P5".into(), lip == 5);
        }
        6 => {
            push("triangle-free".into(), !contains(g, "K3"));
            push("longest_induced_path=P6".into(), lip == 6);
        }
        7 => {
            push("triangle-free".into(), !contains(g, "K3"));
            push("K1_4-free".into(), !contains(g, "K1_4"));
            push("contains T{1,1,3}".into(), contains(g, "T{1,1,3}"));
        }
        _ => unreachable!("family id validated"),
    }
    cert
}

pub fn make_family_member(family_id: u8, params: &[usize]) -> Result<FamilyMember> {
    family_params(family_id, params)?;
    let graph = family_graph(family_id, params);
    let certificate = family_certificate(family_id, params, &graph);
    if let Some((name, _)) = certificate.iter().find(|(_, ok)| !ok) {
        return Err(Error::Consistency(format!(
            "family {family_id} {params:?} fails certificate entry {name}"
        )));
    }
    Ok(FamilyMember {
        family_id,
        params: params.to_vec(),
        graph,
        certificate,
    })
}

/// Curated witness candidates, tried in this order.
const WITNESS_TABLE: &[(u8, &[usize])] = &[
    (1, &[3]),
    (1, &[4]),
    (1, &[5]),
    (2, &[4, 1]),
    (2, &[5, 1]),
    (2, &[4, 2]),
    (2, &[6, 1]),
    (3, &[3]),
    (3, &[4]),
    (3, &[5]),
    (4, &[1]),
    (4, &[2]),
    (5, &[1]),
    (5, &[2]),
    (6, &[2]),
    (6, &[3]),
    (7, &[2]),
    (7, &[3]),
];

/// First table member with at most `max_order` vertices that is free of
/// every pattern of `pair`.
pub fn known_witness_within(pair: &PatternSet, max_order: usize) -> Option<FamilyMember> {
    if pair.is_empty() || pair.len() > 2 {
        return None;
    }
    WITNESS_TABLE
        .iter()
        .filter_map(|(id, params)| make_family_member(*id, params).ok())
        .filter(|m| m.graph.n() <= max_order)
        .find(|m| is_free(&m.graph, pair))
}

/// A family member that is `pair`-free (and so has κ′ < δ), if the
/// built-in table has one.
pub fn known_witness(pair: &PatternSet) -> Option<FamilyMember> {
    known_witness_within(pair, usize::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;

    #[test]
    fn identify_names() {
        for name in [
            "K1", "P2", "P3", "K3", "Z1", "K1_3", "C4", "H0", "H1", "T{1,1,2}", "K{2,3}",
        ] {
            assert_eq!(identify(&named(name).unwrap()).as_deref(), Some(name));
        }
        assert_eq!(identify(&named("K1_2").unwrap()).as_deref(), Some("P3"));
        assert_eq!(identify(&from_graph6("DrK").unwrap()), None);
    }

    #[test]
    fn spec_validation() {
        assert!(NamedGraphSpec::new(NamedKind::Path, vec![]).is_err());
        assert!(NamedGraphSpec::new(NamedKind::T, vec![1, 0, 2]).is_err());
        assert!(NamedGraphSpec::new(NamedKind::Cycle, vec![2]).is_err());
        assert!(NamedGraphSpec::new(NamedKind::H0, vec![1]).is_err());
        assert!(NamedGraphSpec::parse("Q3").is_err());
        assert!(NamedGraphSpec::parse("P").is_err());
    }

    #[test]
    fn names_round_trip() {
        for name in [
            "P5", "C7", "K4", "K{2,3}", "K1_4", "Z2", "T{1,1,3}", "H0", "H1",
        ] {
            assert_eq!(NamedGraphSpec::parse(name).unwrap().name(), name);
        }
        assert_eq!(NamedGraphSpec::parse("T1_2_3").unwrap().name(), "T{1,2,3}");
    }

    #[test]
    fn z1_shape() {
        let z1 = named("Z1").unwrap();
        assert_eq!((z1.n(), z1.m()), (4, 4));
        assert_eq!(z1.degrees(), vec![2, 2, 3, 1]);
    }

    #[test]
    fn t112_shape() {
        let t = named("T{1,1,2}").unwrap();
        assert_eq!((t.n(), t.m()), (5, 4));
        assert_eq!(t.degrees(), vec![3, 1, 1, 2, 1]);
    }

    #[test]
    fn h0_is_bowtie() {
        let h0 = named("H0").unwrap();
        assert_eq!(h0.degree_sequence(), vec![4, 2, 2, 2, 2]);
        assert_eq!(h0.m(), 6);
    }

    #[test]
    fn pattern_lists_respect_braces() {
        assert_eq!(split_pattern_list("Z2,T{1,1,3}"), vec!["Z2", "T{1,1,3}"]);
        let s = pattern_set("{H1,P5}").unwrap();
        assert_eq!(s.to_string(), "{H1,P5}");
        let s = pattern_set("K{2,3},g6:Bw").unwrap();
        assert_eq!(s.len(), 2);
        assert!(pattern_set("P3,P3").is_err());
        assert_eq!(pattern("g6:Bo").unwrap().graph().m(), 2);
        assert!(matches!(pattern("g6:B?"), Err(Error::Disconnected)));
    }

    #[test]
    fn family_examples() {
        let f1 = make_family_member(1, &[3]).unwrap();
        assert!(are_isomorphic(&f1.graph, &named("H1").unwrap()));
        assert_eq!(f1.graph, named("H1").unwrap());

        let f2 = make_family_member(2, &[5, 1]).unwrap();
        assert_eq!(f2.graph.n(), 10);

        let f5 = make_family_member(5, &[1]).unwrap();
        assert_eq!(f5.graph.n(), 7);
        assert_eq!(longest_induced_path(&f5.graph), 5);
    }

    #[test]
    fn family_parameter_errors() {
        assert!(matches!(
            make_family_member(8, &[1]),
            Err(Error::OutOfRange { .. })
        ));
        assert!(make_family_member(1, &[2]).is_err());
        assert!(make_family_member(2, &[3, 1]).is_err());
        assert!(make_family_member(7, &[1]).is_err());
        assert!(make_family_member(6, &[]).is_err());
    }

    #[test]
    fn every_table_member_certifies() {
        for (id, params) in WITNESS_TABLE {
            let m = make_family_member(*id, params).unwrap();
            assert!(m.certificate.iter().all(|(_, ok)| *ok));
            let names: Vec<_> = m.certificate.iter().map(|(n, _)| n.as_str()).collect();
            assert!(names.contains(&"kappa_prime=1") && names.contains(&"delta=2"));
        }
    }

    #[test]
    fn known_witness_examples() {
        let w = known_witness(&pattern_set("K1_4,P5").unwrap()).unwrap();
        assert_eq!(w.graph, named("H1").unwrap());

        let w = known_witness(&pattern_set("H1,P6").unwrap()).unwrap();
        assert_eq!((w.family_id, w.graph.n()), (5, 7));

        let w = known_witness(&pattern_set("Z2,P7").unwrap()).unwrap();
        let two_c4 = make_family_member(6, &[2]).unwrap().graph;
        assert!(are_isomorphic(&w.graph, &two_c4));
        assert_eq!(w.graph.n(), 8);
        assert_eq!(longest_induced_path(&w.graph), 6);

        assert!(known_witness(&pattern_set("Z2,P6").unwrap()).is_none());
    }
}
