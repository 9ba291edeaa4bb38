//! Canonical labelling by partition refinement and individualisation.
//!
//! The search tree is the usual one: refine to an equitable ordered
//! partition, individualise each vertex of a target cell, recurse. Leaves
//! are compared by their relabelled adjacency rows and the least one wins.
//! Automorphisms found at equal leaves prune the tree in two ways: subtrees
//! are abandoned up to the common ancestor with the matching leaf, and
//! children in the same orbit under the automorphisms fixing the current
//! prefix are skipped.

use std::cmp::Ordering;
use std::collections::VecDeque;

use crate::bitset::{popcount_and, words_for, VertexSet};
use crate::graph::Graph;

/// Relabelling-invariant encoding; equal iff the graphs are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    rows: Box<[u64]>,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Little-endian bytes: the order as a `u32`, then the canonical
    /// adjacency rows word by word.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(4 + 8 * self.rows.len());
        out.extend_from_slice(&(self.n as u32).to_le_bytes());
        for w in self.rows.iter() {
            out.extend_from_slice(&w.to_le_bytes());
        }
        out
    }

    /// The canonical representative as a graph.
    pub fn to_graph(&self) -> Graph {
        let words = words_for(self.n);
        let mut g = Graph::empty(self.n);
        for i in 0..self.n {
            for j in i + 1..self.n {
                if (self.rows[i * words + j / 64] >> (j % 64)) & 1 == 1 {
                    g.set_edge(i, j);
                }
            }
        }
        g
    }
}

impl std::fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonicalForm({:?})", self.to_graph())
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.m() == b.m() && canonical_form(a) == canonical_form(b)
}

/// Canonical form plus the labelling that produces it: `lab[i]` is the
/// vertex placed at canonical position `i`.
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.n();
    let mut root = Partition::unit(n);
    if n > 1 {
        root.refine(g, vec![0]);
    }
    let mut search = Search {
        g,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let mut path = Vec::new();
    let _ = search.visit(root, &mut path);
    let best = search.best.expect("search always reaches a leaf");
    (
        CanonicalForm {
            n,
            rows: best.enc.into_boxed_slice(),
        },
        best.lab,
    )
}

#[derive(Clone)]
struct Partition {
    lab: Vec<usize>,
    /// `end[s]` is the exclusive end of the cell starting at `s`.
    end: Vec<usize>,
    cells: usize,
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut end = vec![0; n];
        if n > 0 {
            end[0] = n;
        }
        Partition {
            lab: (0..n).collect(),
            end,
            cells: usize::from(n > 0),
        }
    }

    fn n(&self) -> usize {
        self.lab.len()
    }

    fn is_discrete(&self) -> bool {
        self.cells == self.n()
    }

    fn cell_set(&self, s: usize) -> VertexSet {
        let mut set = VertexSet::empty(self.n());
        for &v in &self.lab[s..self.end[s]] {
            set.insert(v);
        }
        set
    }

    /// Splits cell `[s, e)` by neighbour count into `mask`, fragments in
    /// ascending count order. Returns fragment starts if a split happened.
    fn split(&mut self, g: &Graph, s: usize, e: usize, mask: &[u64]) -> Vec<usize> {
        let mut keyed: Vec<(u32, usize)> = self.lab[s..e]
            .iter()
            .map(|&v| (popcount_and(g.row(v), mask), v))
            .collect();
        let k0 = keyed[0].0;
        if keyed.iter().all(|&(k, _)| k == k0) {
            return Vec::new();
        }
        keyed.sort_unstable();
        let mut starts = vec![s];
        for (i, &(k, v)) in keyed.iter().enumerate() {
            self.lab[s + i] = v;
            if i > 0 && k != keyed[i - 1].0 {
                starts.push(s + i);
            }
        }
        for w in 0..starts.len() {
            let fe = starts.get(w + 1).copied().unwrap_or(e);
            self.end[starts[w]] = fe;
        }
        self.cells += starts.len() - 1;
        starts
    }

    /// Refines to the coarsest equitable partition finer than `self`,
    /// starting from the splitter cells in `queue`.
    fn refine(&mut self, g: &Graph, queue: Vec<usize>) {
        let n = self.n();
        let mut in_queue = vec![false; n];
        let mut queue: VecDeque<usize> = queue.into();
        for &s in &queue {
            in_queue[s] = true;
        }
        while let Some(sp) = queue.pop_front() {
            in_queue[sp] = false;
            if self.is_discrete() {
                break;
            }
            let mask = self.cell_set(sp);
            let mut s = 0;
            while s < n {
                let e = self.end[s];
                if e - s > 1 {
                    for f in self.split(g, s, e, mask.words()) {
                        if !in_queue[f] {
                            in_queue[f] = true;
                            queue.push_back(f);
                        }
                    }
                }
                s = e;
            }
        }
    }

    /// First smallest non-singleton cell.
    fn target_cell(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        let mut s = 0;
        while s < self.n() {
            let len = self.end[s] - s;
            if len > 1 && best.is_none_or(|(_, l)| len < l) {
                best = Some((s, len));
            }
            s = self.end[s];
        }
        best.map(|(s, _)| s)
    }

    fn individualize(&self, g: &Graph, s: usize, v: usize) -> Partition {
        let mut p = self.clone();
        let e = p.end[s];
        let pos = p.lab[s..e].iter().position(|&x| x == v).expect("v in cell") + s;
        p.lab.swap(s, pos);
        p.end[s] = s + 1;
        p.end[s + 1] = e;
        p.cells += 1;
        p.refine(g, vec![s]);
        p
    }
}

struct Leaf {
    lab: Vec<usize>,
    enc: Vec<u64>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut x = x;
    while parent[x] != r {
        let next = parent[x];
        parent[x] = r;
        x = next;
    }
    r
}

impl Search<'_> {
    fn encode(&self, lab: &[usize]) -> Vec<u64> {
        let n = lab.len();
        let words = words_for(n);
        let mut pos = vec![0; n];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        let mut enc = vec![0u64; n * words];
        for (i, &v) in lab.iter().enumerate() {
            for u in self.g.neighbors(v) {
                let j = pos[u];
                enc[i * words + j / 64] |= 1u64 << (j % 64);
            }
        }
        enc
    }

    /// Automorphism mapping the labelling `from` onto `to`.
    fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
        let mut gamma = vec![0; from.len()];
        for (&a, &b) in from.iter().zip(to) {
            gamma[a] = b;
        }
        gamma
    }

    /// Visits the subtree at `part`. `Err(d)` asks every node deeper than
    /// `d` to stop exploring its remaining children.
    fn visit(&mut self, part: Partition, path: &mut Vec<usize>) -> Result<(), usize> {
        let Some(s) = part.target_cell() else {
            return self.leaf(part.lab, path);
        };
        let depth = path.len();
        let cell: Vec<usize> = {
            let mut c = part.lab[s..part.end[s]].to_vec();
            c.sort_unstable();
            c
        };
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() && self.same_orbit(path, &explored, v) {
                continue;
            }
            explored.push(v);
            let child = part.individualize(self.g, s, v);
            path.push(v);
            let r = self.visit(child, path);
            path.pop();
            match r {
                Ok(()) => {}
                Err(d) if d == depth => {}
                Err(d) => return Err(d),
            }
        }
        Ok(())
    }

    fn same_orbit(&self, path: &[usize], explored: &[usize], v: usize) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        let mut any = false;
        for gamma in &self.generators {
            if path.iter().all(|&p| gamma[p] == p) {
                any = true;
                for (x, &y) in gamma.iter().enumerate() {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }

    fn leaf(&mut self, lab: Vec<usize>, path: &[usize]) -> Result<(), usize> {
        let enc = self.encode(&lab);
        let leaf = Leaf {
            lab,
            enc,
            path: path.to_vec(),
        };
        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                lab: leaf.lab.clone(),
                enc: leaf.enc.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return Ok(());
        };
        if leaf.enc == first.enc {
            let gamma = Self::automorphism(&first.lab, &leaf.lab);
            let d = common_prefix(&first.path, &leaf.path);
            self.generators.push(gamma);
            return Err(d);
        }
        let best = self.best.as_ref().expect("best set with first");
        match leaf.enc.cmp(&best.enc) {
            Ordering::Equal => {
                let gamma = Self::automorphism(&best.lab, &leaf.lab);
                let d = common_prefix(&best.path, &leaf.path);
                self.generators.push(gamma);
                Err(d)
            }
            Ordering::Less => {
                self.best = Some(leaf);
                Ok(())
            }
            Ordering::Greater => Ok(()),
        }
    }
}
