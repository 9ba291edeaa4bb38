//! Bounded verification of connectivity equalities over forbidden-pattern
//! classes, witness mining, and intersection of characterizations.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::atlas::{identify, known_witness_within, pattern_set};
use crate::canon::CanonicalForm;
use crate::enumerate::{for_each_connected_batch, MAX_ENUM_ORDER};
use crate::graph::Graph;
use crate::graph6::{from_graph6, to_graph6};
use crate::invariants::{edge_connectivity, min_degree, vertex_connectivity};
use crate::iso::{
    contains_induced_graph, is_free, maximal_common_induced_subgraphs, pattern_equivalent,
    pattern_preceq, Pattern, PatternSet,
};
use crate::{Error, Result};

/// Largest `max_order` accepted by [`intersect_characterizations`].
pub const MAX_INTERSECT_ORDER: usize = 7;

/// The equality checked on every scanned graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    /// `κ′ = δ`.
    KappaPrimeDelta,
    /// `κ = κ′`.
    KappaKappaPrime,
    /// `κ = δ`.
    KappaDelta,
}

impl Target {
    pub fn name(self) -> &'static str {
        match self {
            Target::KappaPrimeDelta => "kappa_prime_delta",
            Target::KappaKappaPrime => "kappa_kappa_prime",
            Target::KappaDelta => "kappa_delta",
        }
    }

    /// Whether the equality holds on a connected graph.
    pub fn holds(self, g: &Graph) -> Result<bool> {
        Ok(match self {
            Target::KappaPrimeDelta => edge_connectivity(g)? == min_degree(g)?,
            Target::KappaKappaPrime => vertex_connectivity(g)? == edge_connectivity(g)?,
            Target::KappaDelta => vertex_connectivity(g)? == min_degree(g)?,
        })
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "kappa_prime_delta" | "kp=d" => Ok(Target::KappaPrimeDelta),
            "kappa_kappa_prime" | "k=kp" => Ok(Target::KappaKappaPrime),
            "kappa_delta" | "k=d" => Ok(Target::KappaDelta),
            _ => Err(Error::InvalidSpec(format!("unknown target '{s}'"))),
        }
    }
}

/// Outcome of a bounded scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub claim_id: String,
    pub n_max: usize,
    pub graphs_scanned: u64,
    pub elapsed_ms: u64,
    pub counterexamples: Vec<String>,
}

impl VerdictRecord {
    /// The claim held on every scanned graph.
    pub fn held(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Where a witness came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessOrigin {
    Enumerated,
    Family,
}

/// A connected pattern-free graph with `κ′ < δ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub pair: String,
    pub witness: String,
    pub kappa_prime: usize,
    pub delta: usize,
    pub origin: WitnessOrigin,
}

impl WitnessRecord {
    /// Builds a record after checking that `g` is connected, free of
    /// every member of `pair`, and has `κ′ < δ`.
    pub fn new(pair: &PatternSet, g: &Graph, origin: WitnessOrigin) -> Result<Self> {
        let (kappa_prime, delta) = check_witness(pair, g)?;
        Ok(WitnessRecord {
            pair: pair.to_string(),
            witness: to_graph6(g)?,
            kappa_prime,
            delta,
            origin,
        })
    }

    /// The witness graph.
    pub fn graph(&self) -> Result<Graph> {
        from_graph6(&self.witness)
    }

    /// Re-checks every stored property from the serialized fields.
    pub fn revalidate(&self) -> Result<()> {
        let pair = pattern_set(&self.pair)?;
        let g = self.graph()?;
        let (kp, d) = check_witness(&pair, &g)?;
        if kp != self.kappa_prime || d != self.delta {
            return Err(Error::Consistency(format!(
                "witness {} records κ′={} δ={}, recomputed κ′={kp} δ={d}",
                self.witness, self.kappa_prime, self.delta
            )));
        }
        Ok(())
    }

    /// Parses a JSON record and revalidates it.
    pub fn from_json(text: &str) -> Result<Self> {
        let rec: WitnessRecord = serde_json::from_str(text)
            .map_err(|e| Error::InvalidSpec(format!("witness record: {e}")))?;
        rec.revalidate()?;
        Ok(rec)
    }
}

fn check_witness(pair: &PatternSet, g: &Graph) -> Result<(usize, usize)> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !is_free(g, pair) {
        return Err(Error::Consistency(format!(
            "witness contains a member of {pair}"
        )));
    }
    let kp = edge_connectivity(g)?;
    let d = min_degree(g)?;
    if kp >= d {
        return Err(Error::Consistency(format!("witness has κ′={kp} ≥ δ={d}")));
    }
    Ok((kp, d))
}

fn check_n_max(n_max: usize) -> Result<()> {
    if !(2..=MAX_ENUM_ORDER).contains(&n_max) {
        return Err(Error::OutOfRange {
            what: "n_max",
            value: n_max,
            range: "2..=10",
        });
    }
    Ok(())
}

/// Scans every connected graph on `2..=n_max` vertices that is free of
/// `forbidden` (all graphs when `None`) and records those violating
/// `target`, as graph6, in enumeration order.
pub fn scan_free(
    claim_id: &str,
    forbidden: Option<&PatternSet>,
    n_max: usize,
    target: Target,
) -> Result<VerdictRecord> {
    check_n_max(n_max)?;
    let start = Instant::now();
    let mut scanned = 0u64;
    let mut counterexamples = Vec::new();
    let mut failure = None;
    for n in 2..=n_max {
        for_each_connected_batch(n, |batch| {
            if failure.is_some() {
                return;
            }
            let results: Vec<Option<Result<bool>>> = batch
                .par_iter()
                .map(|g| {
                    let free = forbidden.is_none_or(|hs| is_free(g, hs));
                    free.then(|| target.holds(g))
                })
                .collect();
            for (g, r) in batch.iter().zip(results) {
                match r {
                    None => {}
                    Some(Ok(ok)) => {
                        scanned += 1;
                        if !ok {
                            match to_graph6(g) {
                                Ok(s) => counterexamples.push(s),
                                Err(e) => failure = Some(e),
                            }
                        }
                    }
                    Some(Err(e)) => {
                        failure.get_or_insert(e);
                    }
                }
            }
        })?;
        if let Some(e) = failure {
            return Err(e);
        }
    }
    Ok(VerdictRecord {
        claim_id: claim_id.to_string(),
        n_max,
        graphs_scanned: scanned,
        elapsed_ms: start.elapsed().as_millis() as u64,
        counterexamples,
    })
}

/// Scans connected `s`-free graphs up to `n_max` for violations of `target`.
pub fn verify_single(s: &Pattern, n_max: usize, target: Target) -> Result<VerdictRecord> {
    let set = PatternSet::new(vec![s.clone()])?;
    scan_free(&format!("{target}:{set}"), Some(&set), n_max, target)
}

/// Scans connected `pair`-free graphs up to `n_max` for violations of
/// `target`.
pub fn verify_pair(pair: &PatternSet, n_max: usize, target: Target) -> Result<VerdictRecord> {
    if pair.len() != 2 {
        return Err(Error::Precondition(format!(
            "expected a pair of patterns, got {pair}"
        )));
    }
    scan_free(&format!("{target}:{pair}"), Some(pair), n_max, target)
}

fn is_bad(g: &Graph, pair: &PatternSet) -> bool {
    match (edge_connectivity(g), min_degree(g)) {
        (Ok(kp), Ok(d)) => kp < d && is_free(g, pair),
        _ => false,
    }
}

/// First connected `pair`-free graph with `κ′ < δ` and at most `n_max`
/// vertices: the curated family table first, then the enumeration in
/// ascending order.
pub fn mine_witness(pair: &PatternSet, n_max: usize) -> Result<Option<WitnessRecord>> {
    if n_max > MAX_ENUM_ORDER {
        return Err(Error::OutOfRange {
            what: "n_max",
            value: n_max,
            range: "0..=10",
        });
    }
    if let Some(member) = known_witness_within(pair, n_max) {
        return WitnessRecord::new(pair, &member.graph, WitnessOrigin::Family).map(Some);
    }
    mine_enumerated(pair, n_max)
}

/// First connected `pair`-free graph with `κ′ < δ` in the enumeration of
/// orders `2..=n_max`, ignoring the family table.
pub fn mine_enumerated(pair: &PatternSet, n_max: usize) -> Result<Option<WitnessRecord>> {
    if n_max > MAX_ENUM_ORDER {
        return Err(Error::OutOfRange {
            what: "n_max",
            value: n_max,
            range: "0..=10",
        });
    }
    for n in 2..=n_max {
        let mut found: Option<Graph> = None;
        for_each_connected_batch(n, |batch| {
            if found.is_none() {
                if let Some(i) = batch.par_iter().position_first(|g| is_bad(g, pair)) {
                    found = Some(batch[i].clone());
                }
            }
        })?;
        if let Some(g) = found {
            return WitnessRecord::new(pair, &g, WitnessOrigin::Enumerated).map(Some);
        }
    }
    Ok(None)
}

/// Mines a witness for each extension. An extension must lie strictly
/// above some member of `base` in the ⪯ order and below none of them.
pub fn maximality_sweep(
    base: &[PatternSet],
    extensions: &[PatternSet],
    n_max: usize,
) -> Result<Vec<(PatternSet, Option<WitnessRecord>)>> {
    for ext in extensions {
        if let Some(b) = base.iter().find(|b| pattern_preceq(ext, b)) {
            return Err(Error::Precondition(format!(
                "extension {ext} is ⪯ characterized set {b}"
            )));
        }
        if !base.iter().any(|b| pattern_preceq(b, ext)) {
            return Err(Error::Precondition(format!(
                "extension {ext} is not above any characterized set"
            )));
        }
    }
    extensions
        .iter()
        .map(|ext| Ok((ext.clone(), mine_witness(ext, n_max)?)))
        .collect()
}

fn parse_list(items: &[&str]) -> Vec<PatternSet> {
    items
        .iter()
        .map(|s| pattern_set(s).expect("built-in pattern list"))
        .collect()
}

/// Forbidden pairs whose free connected graphs satisfy `κ′ = δ`.
pub fn kappa_prime_delta_pairs() -> Vec<PatternSet> {
    parse_list(&["{H1,P5}", "{Z2,P6}", "{Z2,T{1,1,3}}"])
}

/// [`kappa_prime_delta_pairs`] together with the forbidden single graph.
pub fn kappa_prime_delta_characterization() -> Vec<PatternSet> {
    let mut v = kappa_prime_delta_pairs();
    v.push(pattern_set("{P4}").expect("built-in pattern"));
    v
}

/// Forbidden pairs whose free connected graphs satisfy `κ = κ′`.
pub fn kappa_kappa_prime_pairs() -> Vec<PatternSet> {
    parse_list(&[
        "{Z1,P5}",
        "{Z1,K1_4}",
        "{Z1,T{1,1,2}}",
        "{P4,H0}",
        "{K1_3,H0}",
    ])
}

/// [`kappa_kappa_prime_pairs`] together with the forbidden single graph.
pub fn kappa_kappa_prime_characterization() -> Vec<PatternSet> {
    let mut v = kappa_kappa_prime_pairs();
    v.push(pattern_set("{P3}").expect("built-in pattern"));
    v
}

/// Forbidden pairs whose free connected graphs satisfy `κ = δ`.
pub fn kappa_delta_pairs() -> Vec<PatternSet> {
    parse_list(&["{H0,P4}", "{Z1,P5}", "{Z1,T{1,1,2}}"])
}

/// Replaces each singleton `{X}` of `list` by the pairs `{X, Y}` for every
/// member `Y` of `others` not isomorphic to `X`, when some set of either
/// list has two members.
pub fn lift_singletons(list: &[PatternSet], others: &[PatternSet]) -> Result<Vec<PatternSet>> {
    let width = list
        .iter()
        .chain(others)
        .map(PatternSet::len)
        .max()
        .unwrap_or(0);
    if width != 2 {
        return Ok(list.to_vec());
    }
    let mut partners: Vec<&Pattern> = Vec::new();
    for p in others.iter().flat_map(PatternSet::iter) {
        if !partners
            .iter()
            .any(|q| crate::canon::are_isomorphic(q.graph(), p.graph()))
        {
            partners.push(p);
        }
    }
    let mut out = Vec::new();
    for set in list {
        if set.len() != 1 {
            out.push(set.clone());
            continue;
        }
        let x = &set.patterns()[0];
        for y in &partners {
            if !crate::canon::are_isomorphic(x.graph(), y.graph()) {
                out.push(PatternSet::new(vec![x.clone(), (*y).clone()])?);
            }
        }
    }
    Ok(out)
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, k - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Drops members that contain another member; the result is ⪯-equivalent.
fn reduce(patterns: Vec<Pattern>) -> Result<PatternSet> {
    let set = PatternSet::collapsing(patterns)?;
    let members = set.patterns();
    let kept: Vec<Pattern> = members
        .iter()
        .enumerate()
        .filter(|(i, p)| {
            !members
                .iter()
                .enumerate()
                .any(|(j, q)| j != *i && contains_induced_graph(p.graph(), q.graph()))
        })
        .map(|(_, p)| p.clone())
        .collect();
    PatternSet::new(kept)
}

fn labelled(g: &Graph) -> Result<Pattern> {
    Pattern::new(g.clone(), identify(g))
}

/// Pattern sets built slot by slot from maximal common induced subgraphs
/// of the members of an `a`-set and a `b`-set, over every pairing of sets
/// and every matching of slots. Singletons are lifted first; duplicates up
/// to isomorphism and sets strictly ⪯-below another output are dropped.
pub fn intersect_characterizations(
    a: &[PatternSet],
    b: &[PatternSet],
    max_order: usize,
) -> Result<Vec<PatternSet>> {
    if max_order > MAX_INTERSECT_ORDER {
        return Err(Error::OutOfRange {
            what: "max_order",
            value: max_order,
            range: "0..=7",
        });
    }
    let la = lift_singletons(a, b)?;
    let lb = lift_singletons(b, a)?;
    let k = la
        .first()
        .or(lb.first())
        .map(PatternSet::len)
        .ok_or_else(|| Error::Precondition("both lists must be nonempty".into()))?;
    if la.is_empty() || lb.is_empty() {
        return Err(Error::Precondition("both lists must be nonempty".into()));
    }
    if let Some(bad) = la.iter().chain(&lb).find(|s| s.len() != k) {
        return Err(Error::Precondition(format!(
            "pattern set {bad} has {} members, expected {k}",
            bad.len()
        )));
    }

    let perms = permutations(k);
    let mut candidates: Vec<PatternSet> = Vec::new();
    let mut keys: Vec<Vec<CanonicalForm>> = Vec::new();
    for sa in &la {
        for sb in &lb {
            for perm in &perms {
                let mut slots: Vec<Vec<Graph>> = Vec::with_capacity(k);
                for (i, &j) in perm.iter().enumerate() {
                    let x = sa.patterns()[i].graph().clone();
                    let y = sb.patterns()[j].graph().clone();
                    slots.push(maximal_common_induced_subgraphs(&[x], &[y], max_order)?);
                }
                for choice in cartesian(&slots) {
                    let members = choice.iter().map(labelled).collect::<Result<_>>()?;
                    let set = reduce(members)?;
                    let key = set.iso_key();
                    if !keys.contains(&key) {
                        keys.push(key);
                        candidates.push(set);
                    }
                }
            }
        }
    }

    let mut out: Vec<PatternSet> = Vec::new();
    for (i, x) in candidates.iter().enumerate() {
        let dominated = candidates
            .iter()
            .enumerate()
            .any(|(j, y)| j != i && pattern_preceq(x, y) && !pattern_preceq(y, x));
        let repeated = out.iter().any(|y| pattern_equivalent(x, y));
        if !dominated && !repeated {
            out.push(x.clone());
        }
    }
    Ok(out)
}

fn cartesian(slots: &[Vec<Graph>]) -> Vec<Vec<Graph>> {
    let mut acc: Vec<Vec<Graph>> = vec![Vec::new()];
    for options in slots {
        let mut next = Vec::with_capacity(acc.len() * options.len());
        for prefix in &acc {
            for g in options {
                let mut v = prefix.clone();
                v.push(g.clone());
                next.push(v);
            }
        }
        acc = next;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::{named, pattern};

    #[test]
    fn target_parsing() {
        for t in [
            Target::KappaPrimeDelta,
            Target::KappaKappaPrime,
            Target::KappaDelta,
        ] {
            assert_eq!(t.name().parse::<Target>().unwrap(), t);
        }
        assert!("nope".parse::<Target>().is_err());
    }

    #[test]
    fn witness_validation() {
        let pair = pattern_set("{K1_4,P5}").unwrap();
        let rec = WitnessRecord::new(&pair, &named("H1").unwrap(), WitnessOrigin::Family).unwrap();
        assert_eq!((rec.kappa_prime, rec.delta), (1, 2));
        rec.revalidate().unwrap();
        let json = serde_json::to_string(&rec).unwrap();
        assert_eq!(WitnessRecord::from_json(&json).unwrap(), rec);
        assert!(WitnessRecord::new(&pair, &named("C5").unwrap(), WitnessOrigin::Family).is_err());
        let mut forged = rec.clone();
        forged.witness = "Bw".into();
        assert!(forged.revalidate().is_err());
    }

    #[test]
    fn small_scans() {
        let rec = verify_single(&pattern("P4").unwrap(), 6, Target::KappaPrimeDelta).unwrap();
        assert!(rec.held());
        assert!(rec.graphs_scanned > 0);
        assert!(verify_single(&pattern("P4").unwrap(), 11, Target::KappaPrimeDelta).is_err());
        assert!(verify_pair(&pattern_set("{P4}").unwrap(), 5, Target::KappaDelta).is_err());
    }

    #[test]
    fn sweep_preconditions() {
        let base = kappa_prime_delta_pairs();
        assert!(maximality_sweep(&base, &[pattern_set("{Z2,P6}").unwrap()], 6).is_err());
        assert!(maximality_sweep(&base, &[pattern_set("{K3,K1_3}").unwrap()], 6).is_err());
    }

    #[test]
    fn nested_singletons() {
        let out = intersect_characterizations(
            &[pattern_set("{P3}").unwrap()],
            &[pattern_set("{P4}").unwrap()],
            4,
        )
        .unwrap();
        assert_eq!(out.len(), 1);
        assert!(pattern_equivalent(&out[0], &pattern_set("{P3}").unwrap()));
    }

    #[test]
    fn cardinality_mismatch() {
        let a = [pattern_set("{P3,K3}").unwrap()];
        let b = [pattern_set("{P3,K3,K1_3}").unwrap()];
        assert!(intersect_characterizations(&a, &b, 5).is_err());
    }

    #[test]
    fn permutations_are_complete() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(0), vec![Vec::<usize>::new()]);
    }
}
