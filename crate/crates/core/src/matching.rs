//! Maximum cardinality matching in general graphs (Edmonds' blossom
//! algorithm, O(n^3)).

use std::collections::VecDeque;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
}

impl<'a> Blossom<'a> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    queue.push_back(next);
                }
            }
        }
        None
    }
}

/// A maximum matching as `mate[v]` (`None` for unmatched vertices).
pub fn maximum_matching(g: &Graph) -> Vec<Option<usize>> {
    let n = g.n();
    let mut state = Blossom {
        g,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        blossom: vec![false; n],
    };
    for root in 0..n {
        if state.mate[root] != NONE {
            continue;
        }
        if let Some(mut v) = state.find_path(root) {
            while v != NONE {
                let pv = state.parent[v];
                let ppv = state.mate[pv];
                state.mate[v] = pv;
                state.mate[pv] = v;
                v = ppv;
            }
        }
    }
    state
        .mate
        .into_iter()
        .map(|m| (m != NONE).then_some(m))
        .collect()
}

/// Number of edges in a maximum matching.
pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).iter().filter(|m| m.is_some()).count() / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphBuilder;

    fn cycle(n: usize) -> Graph {
        let mut b = GraphBuilder::new(n);
        for i in 0..n {
            b.add_edge(i, (i + 1) % n).unwrap();
        }
        b.build()
    }

    #[test]
    fn odd_and_even_cycles() {
        assert_eq!(matching_number(&cycle(5)), 2);
        assert_eq!(matching_number(&cycle(6)), 3);
    }

    #[test]
    fn blossom_needed() {
        // Triangle 0-1-2 with pendant paths 2-3 and 0-4-5.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (0, 4), (4, 5)]).unwrap();
        assert_eq!(matching_number(&g), 3);
    }

    #[test]
    fn matching_is_valid() {
        let g = cycle(7);
        let mate = maximum_matching(&g);
        for (v, m) in mate.iter().enumerate() {
            if let Some(u) = m {
                assert!(g.has_edge(u.to_owned(), v));
                assert_eq!(mate[*u], Some(v));
            }
        }
    }
}
