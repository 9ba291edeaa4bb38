//! Brute-force oracles that share no algorithm with the library. Graphs
//! are read only through `n()` and `has_edge()`.

#![allow(dead_code, clippy::needless_range_loop)]

use econn::Graph;

/// Adjacency as bitmasks, built from `has_edge` only.
pub fn adjacency(g: &Graph) -> Vec<u32> {
    let n = g.n();
    assert!(n <= 16);
    (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| g.has_edge(u, v))
                .fold(0, |m, v| m | 1 << v)
        })
        .collect()
}

pub fn degrees(g: &Graph) -> Vec<usize> {
    adjacency(g)
        .iter()
        .map(|r| r.count_ones() as usize)
        .collect()
}

pub fn min_degree(g: &Graph) -> usize {
    degrees(g).into_iter().min().unwrap_or(0)
}

/// Whether the vertices in `keep` induce a connected subgraph (empty and
/// single-vertex sets count as connected).
pub fn connected_within(adj: &[u32], keep: u32) -> bool {
    if keep == 0 {
        return true;
    }
    let mut seen = 1u32 << keep.trailing_zeros();
    loop {
        let mut grown = seen;
        for v in 0..adj.len() {
            if seen >> v & 1 == 1 {
                grown |= adj[v] & keep;
            }
        }
        if grown == seen {
            return seen == keep;
        }
        seen = grown;
    }
}

pub fn is_connected(g: &Graph) -> bool {
    let adj = adjacency(g);
    connected_within(&adj, (1u32 << adj.len()) - 1)
}

/// Minimum number of edges between `X` and its complement over every
/// proper `X` containing vertex 0.
pub fn edge_connectivity(g: &Graph) -> usize {
    let adj = adjacency(g);
    let n = adj.len();
    let full = (1u32 << n) - 1;
    let mut best = usize::MAX;
    for rest in 0..(1u32 << (n - 1)) {
        let side = 1 | rest << 1;
        if side == full {
            continue;
        }
        let cut: u32 = (0..n)
            .filter(|&v| side >> v & 1 == 1)
            .map(|v| (adj[v] & !side).count_ones())
            .sum();
        best = best.min(cut as usize);
    }
    best
}

/// Smallest vertex set whose deletion disconnects `g` or leaves at most
/// one vertex.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let adj = adjacency(g);
    let n = adj.len();
    let full = (1u32 << n) - 1;
    (0..=full)
        .filter(|&del| {
            let keep = full & !del;
            keep.count_ones() <= 1 || !connected_within(&adj, keep)
        })
        .map(|del| del.count_ones() as usize)
        .min()
        .unwrap()
}

pub fn clique_number(g: &Graph) -> usize {
    let adj = adjacency(g);
    let n = adj.len();
    (0..(1u32 << n))
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || (adj[v] | 1 << v) & s == s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// All-pairs distances by Floyd–Warshall (`u32::MAX` when unreachable).
pub fn distances(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut d = vec![vec![u32::MAX; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in 0..n {
            if g.has_edge(u, v) {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] != u32::MAX && d[k][j] != u32::MAX {
                    d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
                }
            }
        }
    }
    d
}

/// Every permutation of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Index of the pair `u < v` among the `n(n-1)/2` vertex pairs.
fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

pub fn edge_mask(g: &Graph) -> u32 {
    let n = g.n();
    let mut m = 0;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                m |= 1 << pair_index(n, u, v);
            }
        }
    }
    m
}

pub fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if mask >> pair_index(n, u, v) & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn permute_mask(n: usize, mask: u32, perm: &[usize], pairs: &[(usize, usize)]) -> u32 {
    let mut out = 0;
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            out |= 1 << pair_index(n, perm[u], perm[v]);
        }
    }
    out
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut p = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            p.push((u, v));
        }
    }
    p
}

/// Smallest edge mask over all relabellings: equal iff isomorphic.
pub fn brute_canonical(g: &Graph) -> u32 {
    let n = g.n();
    let m = edge_mask(g);
    let ps = pairs(n);
    permutations(n)
        .iter()
        .map(|p| permute_mask(n, m, p, &ps))
        .min()
        .unwrap()
}

/// Minimal edge masks of all isomorphism classes of graphs on `n`
/// vertices, by marking every permutation image of each new labelled
/// graph.
pub fn permutation_classes(n: usize) -> Vec<u32> {
    let ps = pairs(n);
    let total = 1usize << ps.len();
    let perms = permutations(n);
    let mut seen = vec![false; total];
    let mut classes = Vec::new();
    for mask in 0..total as u32 {
        if seen[mask as usize] {
            continue;
        }
        classes.push(mask);
        for p in &perms {
            seen[permute_mask(n, mask, p, &ps) as usize] = true;
        }
    }
    classes
}

/// Connected classes on `n` vertices as minimal edge masks.
pub fn connected_classes(n: usize) -> Vec<u32> {
    permutation_classes(n)
        .into_iter()
        .filter(|&m| is_connected(&graph_from_mask(n, m)))
        .collect()
}

/// Whether some `|V(h)|`-subset of `g` induces a graph isomorphic to `h`.
pub fn contains_induced(g: &Graph, h: &Graph) -> bool {
    let (n, k) = (g.n(), h.n());
    if k > n {
        return false;
    }
    let target = brute_canonical(h);
    (0u32..(1 << n))
        .filter(|s| s.count_ones() as usize == k)
        .any(|s| {
            let verts: Vec<usize> = (0..n).filter(|v| s >> v & 1 == 1).collect();
            let mut edges = Vec::new();
            for (i, &u) in verts.iter().enumerate() {
                for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                    if g.has_edge(u, v) {
                        edges.push((i, j));
                    }
                }
            }
            brute_canonical(&Graph::from_edges(k, &edges).unwrap()) == target
        })
}

/// Largest set of disjoint vertex pairs with `d(u) + d(v) >= n`, found by
/// exhaustive search.
pub fn heavy_pairing_size(g: &Graph) -> usize {
    let n = g.n();
    let deg = degrees(g);
    fn go(free: u32, n: usize, deg: &[usize]) -> usize {
        let Some(u) = (0..n).find(|&u| free >> u & 1 == 1) else {
            return 0;
        };
        let rest = free & !(1 << u);
        let mut best = go(rest, n, deg);
        for v in u + 1..n {
            if rest >> v & 1 == 1 && deg[u] + deg[v] >= n {
                best = best.max(1 + go(rest & !(1 << v), n, deg));
            }
        }
        best
    }
    go((1u32 << n) - 1, n, &deg)
}

/// Every connected graph on `2..=n_max` vertices, from the oracle classes.
pub fn oracle_connected_graphs(n_max: usize) -> Vec<Graph> {
    (2..=n_max)
        .flat_map(|n| {
            connected_classes(n)
                .into_iter()
                .map(move |m| graph_from_mask(n, m))
        })
        .collect()
}
