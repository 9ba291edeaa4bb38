//! Eight classical sufficient conditions for `κ′ = δ`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphBuilder};
use crate::invariants::{clique_number, edge_connectivity, min_degree};
use crate::matching::matching_number;
use crate::{Error, Result};

/// One of the eight sufficient conditions, numbered 1 to 8.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConditionId {
    /// `n ≤ 2δ + 1`.
    Chartrand,
    /// `d(u) + d(v) ≥ n − 1` for every nonadjacent pair.
    Lesniak,
    /// Diameter exactly 2.
    PlesnikDiam2,
    /// Bipartite with `n ≤ 4δ − 1`.
    VolkmannBipartite,
    /// No four distinct vertices `u1, v1, u2, v2` with every `u_i`/`v_i` to
    /// `u_j`/`v_j` cross distance at least 3.
    PlesnikZnamQuadruple,
    /// Bipartite with diameter exactly 3.
    PlesnikZnamBipartiteDiam3,
    /// `⌊n/2⌋` disjoint pairs with degree sum at least `n`.
    XuPairing,
    /// `ω ≤ p` and `n ≤ 2⌊pδ/(p − 1)⌋ − 1` with `p = max(ω, 2)`.
    DankelmannVolkmann,
}

impl ConditionId {
    pub const ALL: [ConditionId; 8] = [
        ConditionId::Chartrand,
        ConditionId::Lesniak,
        ConditionId::PlesnikDiam2,
        ConditionId::VolkmannBipartite,
        ConditionId::PlesnikZnamQuadruple,
        ConditionId::PlesnikZnamBipartiteDiam3,
        ConditionId::XuPairing,
        ConditionId::DankelmannVolkmann,
    ];

    pub fn id(self) -> u8 {
        self as u8 + 1
    }

    pub fn from_id(id: u8) -> Result<Self> {
        match id {
            1..=8 => Ok(Self::ALL[usize::from(id) - 1]),
            _ => Err(Error::OutOfRange {
                what: "condition id",
                value: usize::from(id),
                range: "1..=8",
            }),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ConditionId::Chartrand => "chartrand",
            ConditionId::Lesniak => "lesniak",
            ConditionId::PlesnikDiam2 => "plesnik_diam2",
            ConditionId::VolkmannBipartite => "volkmann_bipartite",
            ConditionId::PlesnikZnamQuadruple => "plesnik_znam_quadruple",
            ConditionId::PlesnikZnamBipartiteDiam3 => "plesnik_znam_bipartite_diam3",
            ConditionId::XuPairing => "xu_pairing",
            ConditionId::DankelmannVolkmann => "dankelmann_volkmann",
        }
    }
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConditionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let t = t.strip_prefix("cond").unwrap_or(t);
        if let Ok(id) = t.parse::<u8>() {
            return Self::from_id(id);
        }
        Self::ALL
            .into_iter()
            .find(|c| c.name() == t)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown condition '{s}'")))
    }
}

fn check_input(g: &Graph) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::TooSmall { need: 2, n: g.n() });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

fn quadruple_free(g: &Graph) -> Result<bool> {
    let dist = g.distance_matrix()?;
    let n = g.n();
    let far = |a: usize, b: usize| dist.get(a, b) >= 3;
    for u1 in 0..n {
        for u2 in 0..n {
            if u2 == u1 || !far(u1, u2) {
                continue;
            }
            for v1 in 0..n {
                if v1 == u1 || v1 == u2 || !far(v1, u2) {
                    continue;
                }
                for v2 in 0..n {
                    if v2 == u1 || v2 == u2 || v2 == v1 {
                        continue;
                    }
                    if far(u1, v2) && far(v1, v2) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

fn has_heavy_pairing(g: &Graph) -> Result<bool> {
    let n = g.n();
    let deg = g.degrees();
    let mut aux = GraphBuilder::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if deg[u] + deg[v] >= n {
                aux.add_edge(u, v)?;
            }
        }
    }
    Ok(matching_number(&aux.build()) >= n / 2)
}

/// Evaluates one condition on a connected graph with at least 2 vertices.
pub fn holds(cond: ConditionId, g: &Graph) -> Result<bool> {
    check_input(g)?;
    let n = g.n();
    let delta = min_degree(g)?;
    Ok(match cond {
        ConditionId::Chartrand => n <= 2 * delta + 1,
        ConditionId::Lesniak => {
            let deg = g.degrees();
            (0..n).all(|u| ((u + 1)..n).all(|v| g.has_edge(u, v) || deg[u] + deg[v] + 1 >= n))
        }
        ConditionId::PlesnikDiam2 => g.diameter()? == 2,
        ConditionId::VolkmannBipartite => g.is_bipartite() && n < 4 * delta,
        ConditionId::PlesnikZnamQuadruple => quadruple_free(g)?,
        ConditionId::PlesnikZnamBipartiteDiam3 => g.is_bipartite() && g.diameter()? == 3,
        ConditionId::XuPairing => has_heavy_pairing(g)?,
        ConditionId::DankelmannVolkmann => {
            let p = clique_number(g)?.max(2);
            n < 2 * (p * delta / (p - 1))
        }
    })
}

/// One row of [`implied_equality_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionRow {
    pub condition: ConditionId,
    pub holds: bool,
    pub kappa_prime_equals_delta: bool,
}

impl ConditionRow {
    /// A row where the condition holds but `κ′ = δ` fails.
    pub fn is_violation(&self) -> bool {
        self.holds && !self.kappa_prime_equals_delta
    }
}

/// Evaluates all eight conditions together with the conclusion `κ′ = δ`.
pub fn implied_equality_check(g: &Graph) -> Result<Vec<ConditionRow>> {
    check_input(g)?;
    let equal = edge_connectivity(g)? == min_degree(g)?;
    ConditionId::ALL
        .into_iter()
        .map(|c| {
            Ok(ConditionRow {
                condition: c,
                holds: holds(c, g)?,
                kappa_prime_equals_delta: equal,
            })
        })
        .collect()
}
