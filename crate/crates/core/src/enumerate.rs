//! Isomorphism-free generation of connected graphs and graph6 file streams.
//!
//! Generation is by canonical augmentation: a connected graph on `n + 1`
//! vertices is produced only from the parent obtained by deleting its
//! canonical deletion vertex. That vertex is chosen among non-cut vertices
//! maximising `(degree, sum of neighbour degrees)`, ties broken by least
//! canonical position. Isomorphic children of one parent are merged by
//! canonical form. Level `k` lists, for each level `k - 1` parent in order,
//! its children sorted by canonical form; every graph is stored as its
//! canonical representative.

use std::collections::HashSet;
use std::fs::File;
use std::io::{BufRead, BufReader, Lines};
use std::path::Path;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::canon::{canonical_form, canonical_labeling, CanonicalForm};
use crate::graph::Graph;
use crate::graph6::from_graph6;
use crate::iso::{is_free, PatternSet};
use crate::{Error, Result};

/// Largest order the internal generator produces.
pub const MAX_ENUM_ORDER: usize = 10;

/// Levels up to this order are kept in memory once generated.
const CACHED_ORDER: usize = 9;

/// Parents expanded per batch when streaming the uncached top level.
const STREAM_BATCH: usize = 512;

const SMALL: usize = MAX_ENUM_ORDER + 1;

fn levels() -> &'static Mutex<Vec<Arc<Vec<Graph>>>> {
    static LEVELS: OnceLock<Mutex<Vec<Arc<Vec<Graph>>>>> = OnceLock::new();
    LEVELS.get_or_init(|| Mutex::new(Vec::new()))
}

fn check_order(n: usize) -> Result<()> {
    if !(1..=MAX_ENUM_ORDER).contains(&n) {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            range: "1..=10",
        });
    }
    Ok(())
}

/// All connected graphs on `n <= 9` vertices, one per isomorphism class,
/// in generation order. Cached after the first call.
pub fn connected_level(n: usize) -> Result<Arc<Vec<Graph>>> {
    check_order(n)?;
    if n > CACHED_ORDER {
        return Err(Error::OutOfRange {
            what: "n (materialised)",
            value: n,
            range: "1..=9; stream larger orders",
        });
    }
    let mut cache = levels().lock().unwrap_or_else(|e| e.into_inner());
    if cache.is_empty() {
        cache.push(Arc::new(vec![Graph::empty(1)]));
    }
    while cache.len() < n {
        let parents = Arc::clone(cache.last().expect("level 1 present"));
        let next: Vec<Graph> = parents
            .par_iter()
            .map(children_of)
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect();
        cache.push(Arc::new(next));
    }
    Ok(Arc::clone(&cache[n - 1]))
}

/// Calls `f` with consecutive batches of the connected graphs on `n`
/// vertices, in generation order.
pub fn for_each_connected_batch(n: usize, mut f: impl FnMut(&[Graph])) -> Result<()> {
    check_order(n)?;
    if n <= CACHED_ORDER {
        f(&connected_level(n)?);
        return Ok(());
    }
    let parents = connected_level(n - 1)?;
    for chunk in parents.chunks(STREAM_BATCH) {
        let batch: Vec<Graph> = expand(chunk);
        f(&batch);
    }
    Ok(())
}

fn expand(parents: &[Graph]) -> Vec<Graph> {
    parents
        .par_iter()
        .map(children_of)
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// Adjacency rows of a small graph, one `u64` per vertex.
fn small_rows(g: &Graph, rows: &mut [u64; SMALL]) {
    for (v, r) in rows.iter_mut().enumerate().take(g.n()) {
        *r = g.row(v)[0];
    }
}

/// Whether deleting `v` disconnects the graph on `rows[..n]`.
fn is_cut_vertex(rows: &[u64], n: usize, v: usize) -> bool {
    let all = ((1u64 << n) - 1) & !(1u64 << v);
    if all == 0 {
        return false;
    }
    let start = all.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let u = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= rows[u];
        }
        next &= all & !seen;
        seen |= next;
        frontier = next;
    }
    seen != all
}

/// Canonical children of a connected parent, sorted by canonical form.
fn children_of(parent: &Graph) -> Vec<Graph> {
    let n = parent.n();
    debug_assert!(n < MAX_ENUM_ORDER);
    let x = n;
    let size = n + 1;
    let parent_form = canonical_form(parent);
    let mut rows = [0u64; SMALL];
    small_rows(parent, &mut rows);
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    let mut out: Vec<(CanonicalForm, Graph)> = Vec::new();

    for mask in 1u64..(1u64 << n) {
        let mut child = rows;
        child[x] = mask;
        let mut m = mask;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            child[u] |= 1u64 << x;
        }
        let deg: Vec<u32> = child[..size].iter().map(|r| r.count_ones()).collect();
        let inv = |v: usize| -> (u32, u32) {
            let mut s = 0;
            let mut r = child[v];
            while r != 0 {
                let u = r.trailing_zeros() as usize;
                r &= r - 1;
                s += deg[u];
            }
            (deg[v], s)
        };
        let inv_x = inv(x);
        let mut ties = vec![x];
        let mut rejected = false;
        for v in 0..n {
            let iv = inv(v);
            if iv < inv_x || is_cut_vertex(&child, size, v) {
                continue;
            }
            if iv > inv_x {
                rejected = true;
                break;
            }
            ties.push(v);
        }
        if rejected {
            continue;
        }

        let mut g = Graph::empty(size);
        for (u, &row) in child[..size].iter().enumerate() {
            for v in (u + 1)..size {
                if (row >> v) & 1 == 1 {
                    g.set_edge(u, v);
                }
            }
        }
        let (form, lab) = canonical_labeling(&g);
        if ties.len() > 1 {
            let mut pos = vec![0; size];
            for (i, &v) in lab.iter().enumerate() {
                pos[v] = i;
            }
            let chosen = *ties.iter().min_by_key(|&&v| pos[v]).expect("ties nonempty");
            if chosen != x && canonical_form(&g.remove_vertex(chosen)) != parent_form {
                continue;
            }
        }
        if seen.insert(form.clone()) {
            let rep = form.to_graph();
            out.push((form, rep));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.into_iter().map(|(_, g)| g).collect()
}

enum Source {
    Level {
        graphs: Arc<Vec<Graph>>,
        pos: usize,
    },
    Expanding {
        parents: Arc<Vec<Graph>>,
        next_parent: usize,
        buffer: std::vec::IntoIter<Graph>,
    },
    File {
        lines: Lines<BufReader<File>>,
        line: usize,
    },
    Filtered {
        inner: Box<GraphStream>,
        patterns: PatternSet,
    },
}

/// A stream of graphs: the internal generator, a graph6 file, or a
/// filtered stream.
pub struct GraphStream {
    source: Source,
    last_line: Option<usize>,
}

impl GraphStream {
    fn new(source: Source) -> Self {
        GraphStream {
            source,
            last_line: None,
        }
    }

    /// 1-based line number of the most recent item from a file stream.
    pub fn line(&self) -> Option<usize> {
        match &self.source {
            Source::Filtered { inner, .. } => inner.line(),
            _ => self.last_line,
        }
    }
}

impl Iterator for GraphStream {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Result<Graph>> {
        match &mut self.source {
            Source::Level { graphs, pos } => {
                let g = graphs.get(*pos)?.clone();
                *pos += 1;
                Some(Ok(g))
            }
            Source::Expanding {
                parents,
                next_parent,
                buffer,
            } => loop {
                if let Some(g) = buffer.next() {
                    return Some(Ok(g));
                }
                if *next_parent >= parents.len() {
                    return None;
                }
                let end = (*next_parent + STREAM_BATCH).min(parents.len());
                *buffer = expand(&parents[*next_parent..end]).into_iter();
                *next_parent = end;
            },
            Source::File { lines, line } => loop {
                let text = match lines.next()? {
                    Ok(t) => t,
                    Err(e) => return Some(Err(Error::from(e).at_line(*line + 1))),
                };
                *line += 1;
                if text.trim().is_empty() {
                    continue;
                }
                self.last_line = Some(*line);
                return Some(from_graph6(&text).map_err(|e| e.at_line(*line)));
            },
            Source::Filtered { inner, patterns } => loop {
                match inner.next()? {
                    Ok(g) if !is_free(&g, patterns) => continue,
                    other => return Some(other),
                }
            },
        }
    }
}

/// Every connected graph on `n` vertices exactly once up to isomorphism.
pub fn enumerate_connected(n: usize) -> Result<GraphStream> {
    check_order(n)?;
    if n <= CACHED_ORDER {
        return Ok(GraphStream::new(Source::Level {
            graphs: connected_level(n)?,
            pos: 0,
        }));
    }
    Ok(GraphStream::new(Source::Expanding {
        parents: connected_level(n - 1)?,
        next_parent: 0,
        buffer: Vec::new().into_iter(),
    }))
}

/// Graphs of a graph6 file in file order. Blank lines are skipped; parse
/// errors carry their line number.
pub fn read_graph6_stream(path: impl AsRef<Path>) -> Result<GraphStream> {
    let file = File::open(path)?;
    Ok(GraphStream::new(Source::File {
        lines: BufReader::new(file).lines(),
        line: 0,
    }))
}

/// The substream of graphs free of every pattern in `hs`.
pub fn filter_free(s: GraphStream, hs: PatternSet) -> GraphStream {
    GraphStream::new(Source::Filtered {
        inner: Box::new(s),
        patterns: hs,
    })
}
