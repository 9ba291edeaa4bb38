//! Embedded oracle suite run by the `selftest` command.

use serde::Serialize;

use crate::atlas::named;
use crate::canon::are_isomorphic;
use crate::enumerate::connected_level;
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::invariants::{edge_connectivity, vertex_connectivity};
use crate::Result;

/// Outcome of one self-test case.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelfTestCase {
    pub module: &'static str,
    pub case: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelfTestReport {
    pub cases: Vec<SelfTestCase>,
}

impl SelfTestReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &SelfTestCase> {
        self.cases.iter().filter(|c| !c.passed)
    }
}

const DEGREE_TABLE: &[(&str, &[usize])] = &[
    ("P5", &[2, 2, 2, 1, 1]),
    ("C6", &[2, 2, 2, 2, 2, 2]),
    ("K4", &[3, 3, 3, 3]),
    ("K{2,3}", &[3, 3, 2, 2, 2]),
    ("K1_4", &[4, 1, 1, 1, 1]),
    ("Z1", &[3, 2, 2, 1]),
    ("Z2", &[3, 2, 2, 2, 1]),
    ("T{1,1,3}", &[3, 2, 2, 1, 1, 1]),
    ("H0", &[4, 2, 2, 2, 2]),
    ("H1", &[3, 3, 2, 2, 2, 2]),
];

const CONNECTED_COUNTS: [usize; 6] = [1, 1, 2, 6, 21, 112];

/// Minimum edge cut by trying every bipartition with vertex 0 on one side.
fn brute_edge_connectivity(g: &Graph) -> usize {
    let n = g.n();
    let edges = g.edges();
    (0..(1u32 << (n - 1)) - 1)
        .map(|mask| {
            let side = |v: usize| v == 0 || (mask >> (v - 1)) & 1 == 1;
            edges.iter().filter(|&&(u, v)| side(u) != side(v)).count()
        })
        .min()
        .unwrap_or(0)
}

/// Smallest vertex set whose removal disconnects `g` or leaves one vertex.
fn brute_vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    (0u32..(1 << n))
        .filter(|&mask| {
            let keep: Vec<usize> = (0..n).filter(|v| (mask >> v) & 1 == 0).collect();
            keep.len() <= 1 || {
                let set = crate::VertexSet::from_vertices(n, keep).expect("in range");
                !g.is_connected_within(&set)
            }
        })
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap_or(0)
        .min(n - 1)
}

fn record(
    cases: &mut Vec<SelfTestCase>,
    module: &'static str,
    case: String,
    outcome: Result<Option<String>>,
) {
    let (passed, detail) = match outcome {
        Ok(None) => (true, String::new()),
        Ok(Some(d)) => (false, d),
        Err(e) => (false, e.to_string()),
    };
    cases.push(SelfTestCase {
        module,
        case,
        passed,
        detail,
    });
}

/// Runs the suite with the built-in named-graph constructor.
pub fn run_selftest() -> SelfTestReport {
    run_selftest_with(named)
}

/// Runs the suite with `atlas` standing in for the named-graph
/// constructor.
pub fn run_selftest_with(atlas: impl Fn(&str) -> Result<Graph>) -> SelfTestReport {
    let mut cases = Vec::new();

    for (i, &want) in CONNECTED_COUNTS.iter().enumerate() {
        let n = i + 1;
        let outcome = connected_level(n).map(|lv| {
            (lv.len() != want).then(|| format!("expected {want} graphs, got {}", lv.len()))
        });
        record(&mut cases, "enumerator", format!("count n={n}"), outcome);
    }

    for n in 2..=6 {
        let outcome = connected_level(n).and_then(|lv| {
            for g in lv.iter() {
                let kp = edge_connectivity(g)?;
                let k = vertex_connectivity(g)?;
                let (bkp, bk) = (brute_edge_connectivity(g), brute_vertex_connectivity(g));
                if (kp, k) != (bkp, bk) {
                    return Ok(Some(format!(
                        "{}: computed (κ′,κ)=({kp},{k}), oracle ({bkp},{bk})",
                        to_graph6(g)?
                    )));
                }
            }
            Ok(None)
        });
        record(
            &mut cases,
            "invariants",
            format!("cut oracle n={n}"),
            outcome,
        );
    }

    let outcome = atlas("H0").and_then(|h0| {
        let lv = connected_level(5)?;
        let hits: Vec<&Graph> = lv
            .iter()
            .filter(|g| g.degree_sequence() == [4, 2, 2, 2, 2])
            .collect();
        Ok(match hits.as_slice() {
            [one] if are_isomorphic(one, &h0) => None,
            [_] => Some("unique graph is not the atlas H0".into()),
            _ => Some(format!(
                "{} graphs with degree sequence (4,2,2,2,2)",
                hits.len()
            )),
        })
    });
    record(&mut cases, "atlas", "H0 uniqueness".into(), outcome);

    for &(name, seq) in DEGREE_TABLE {
        let outcome = atlas(name).map(|g| {
            let got = g.degree_sequence();
            (got != seq).then(|| format!("expected {seq:?}, got {got:?}"))
        });
        record(
            &mut cases,
            "atlas",
            format!("degree sequence {name}"),
            outcome,
        );
    }

    SelfTestReport { cases }
}
