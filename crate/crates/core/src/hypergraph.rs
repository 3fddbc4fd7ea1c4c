//! Clutters on the vertex set `1..=n`, their blockers, incidence matrices and
//! the combinatorial sufficient conditions for unimodularity.
//!
//! Edges are stored as ascending vertex lists and kept in lexicographic order.
//! That order is the alignment used by [`WeightFunction`] and by the rows of
//! [`Hypergraph::incidence_matrix`].

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::linalg::IntegerMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

/// Outcome of clutter normalization, keeping track of where each input edge went.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub hypergraph: Hypergraph,
    /// `origin[i]` is the canonical index of input edge `i`, or `None` when the
    /// edge was dropped as a duplicate or as a superset of another edge.
    pub origin: Vec<Option<usize>>,
}

impl Normalized {
    pub fn removed(&self) -> impl Iterator<Item = usize> + '_ {
        self.origin
            .iter()
            .enumerate()
            .filter_map(|(i, o)| o.is_none().then_some(i))
    }
}

impl Hypergraph {
    /// Builds a clutter from raw edges: vertices inside an edge are deduplicated,
    /// duplicate edges and edges containing another edge are dropped.
    pub fn normalize_clutter<E, V>(raw_edges: E, n: usize) -> Result<Self>
    where
        E: IntoIterator<Item = V>,
        V: IntoIterator<Item = usize>,
    {
        Self::normalize_tracked(raw_edges, n).map(|norm| norm.hypergraph)
    }

    pub fn normalize_tracked<E, V>(raw_edges: E, n: usize) -> Result<Normalized>
    where
        E: IntoIterator<Item = V>,
        V: IntoIterator<Item = usize>,
    {
        if n < 1 {
            return Err(Error::NoVertices);
        }
        let mut raw: Vec<Vec<usize>> = Vec::new();
        for (i, edge) in raw_edges.into_iter().enumerate() {
            let mut e: Vec<usize> = edge.into_iter().collect();
            if let Some(&vertex) = e.iter().find(|&&v| v < 1 || v > n) {
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            e.sort_unstable();
            e.dedup();
            if e.is_empty() {
                return Err(Error::EmptyEdge(i + 1));
            }
            raw.push(e);
        }

        let keep: Vec<bool> = (0..raw.len())
            .map(|i| {
                raw.iter().enumerate().all(|(j, other)| {
                    if i == j {
                        true
                    } else if raw[i] == *other {
                        j > i
                    } else {
                        !is_subset(other, &raw[i])
                    }
                })
            })
            .collect();

        let mut edges: Vec<Vec<usize>> = raw
            .iter()
            .zip(&keep)
            .filter(|(_, &k)| k)
            .map(|(e, _)| e.clone())
            .collect();
        edges.sort();
        let origin = raw
            .iter()
            .zip(&keep)
            .map(|(e, &k)| if k { edges.binary_search(e).ok() } else { None })
            .collect();
        Ok(Normalized {
            hypergraph: Hypergraph { n, edges },
            origin,
        })
    }

    /// The hypergraph with no edges; every vector is a cover of it.
    pub fn empty(n: usize) -> Result<Self> {
        Self::normalize_clutter(Vec::<Vec<usize>>::new(), n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Rows are edges in canonical order, columns are vertices `1..=n`.
    pub fn incidence_matrix(&self) -> IntegerMatrix {
        let mut rows = vec![vec![0i64; self.n]; self.edges.len()];
        for (row, edge) in rows.iter_mut().zip(&self.edges) {
            for &v in edge {
                row[v - 1] = 1;
            }
        }
        IntegerMatrix::from_rows(self.n, &rows)
    }

    /// Whether the vertex set meets every edge.
    pub fn is_vertex_cover(&self, vertices: &[usize]) -> bool {
        self.edges
            .iter()
            .all(|e| e.iter().any(|v| vertices.contains(v)))
    }

    /// The clutter of inclusion-minimal vertex covers.
    ///
    /// Transversals are built edge by edge: a partial transversal that misses
    /// the next edge is extended by each of its vertices, and the family is
    /// reduced to its minimal members after every step.
    pub fn blocker(&self) -> Hypergraph {
        if self.edges.is_empty() {
            return Hypergraph {
                n: self.n,
                edges: Vec::new(),
            };
        }
        let mut family: Vec<Vec<usize>> = vec![Vec::new()];
        for edge in &self.edges {
            let mut next = Vec::with_capacity(family.len());
            for t in &family {
                if edge.iter().any(|v| t.binary_search(v).is_ok()) {
                    next.push(t.clone());
                } else {
                    for &v in edge {
                        let mut grown = t.clone();
                        let pos = grown.binary_search(&v).unwrap_err();
                        grown.insert(pos, v);
                        next.push(grown);
                    }
                }
            }
            family = minimal_sets(next);
        }
        family.sort();
        Hypergraph {
            n: self.n,
            edges: family,
        }
    }

    /// Searches for a cyclic sequence `v1, F1, ..., vs, Fs` of odd length
    /// `s >= 3` with distinct vertices and distinct edges and `v_i, v_{i+1}`
    /// in `F_i`. Having none is sufficient for unimodularity; finding one
    /// proves nothing.
    pub fn find_odd_alternating_chain(&self) -> Option<AlternatingChain> {
        if self.edges.len() < 3 {
            return None;
        }
        let mut search = ChainSearch {
            h: self,
            vertices: Vec::new(),
            edges: Vec::new(),
            used_vertex: vec![false; self.n + 1],
            used_edge: vec![false; self.edges.len()],
        };
        for start in 1..=self.n {
            search.vertices.push(start);
            search.used_vertex[start] = true;
            if search.extend() {
                return Some(AlternatingChain {
                    vertices: search.vertices,
                    edges: search.edges,
                });
            }
            search.used_vertex[start] = false;
            search.vertices.pop();
        }
        None
    }

    /// `None` unless every edge has exactly two vertices.
    pub fn is_bipartite_graph(&self) -> Option<bool> {
        if self.edges.iter().any(|e| e.len() != 2) {
            return None;
        }
        let mut adjacency = vec![Vec::new(); self.n + 1];
        for e in &self.edges {
            adjacency[e[0]].push(e[1]);
            adjacency[e[1]].push(e[0]);
        }
        let mut color: Vec<Option<bool>> = vec![None; self.n + 1];
        for root in 1..=self.n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &v in &adjacency[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return Some(false),
                        Some(_) => {}
                    }
                }
            }
        }
        Some(true)
    }

    /// All clutters on `1..=n`, including the empty one, in a fixed order.
    /// Exponential in `2^n`; intended for exhaustive sweeps with `n <= 4`.
    pub fn all_clutters(n: usize) -> Result<Vec<Hypergraph>> {
        if n < 1 {
            return Err(Error::NoVertices);
        }
        if n > 5 {
            return Err(Error::CapExceeded { size: n, cap: 5 });
        }
        let subsets: Vec<u32> = (1u32..(1 << n)).collect();
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        antichains(&subsets, 0, &mut chosen, &mut out);
        let mut clutters: Vec<Hypergraph> = out
            .into_iter()
            .map(|family| {
                let edges = family.iter().map(|&mask| {
                    (0..n).filter(move |i| mask & (1 << i) != 0).map(|i| i + 1)
                });
                Hypergraph::normalize_clutter(edges, n).expect("masks are in range")
            })
            .collect();
        clutters.sort_by(|a, b| (a.edges.len(), &a.edges).cmp(&(b.edges.len(), &b.edges)));
        Ok(clutters)
    }
}

fn antichains(subsets: &[u32], from: usize, chosen: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    out.push(chosen.clone());
    for i in from..subsets.len() {
        let s = subsets[i];
        if chosen.iter().all(|&t| s & t != s && s & t != t) {
            chosen.push(s);
            antichains(subsets, i + 1, chosen, out);
            chosen.pop();
        }
    }
}

struct ChainSearch<'a> {
    h: &'a Hypergraph,
    vertices: Vec<usize>,
    edges: Vec<usize>,
    used_vertex: Vec<bool>,
    used_edge: Vec<bool>,
}

impl ChainSearch<'_> {
    fn extend(&mut self) -> bool {
        let current = *self.vertices.last().unwrap();
        let first = self.vertices[0];
        let len = self.vertices.len();
        for (idx, edge) in self.h.edges.iter().enumerate() {
            if self.used_edge[idx] || edge.binary_search(&current).is_err() {
                continue;
            }
            self.used_edge[idx] = true;
            self.edges.push(idx);
            if len >= 3 && len % 2 == 1 && edge.binary_search(&first).is_ok() {
                return true;
            }
            for &next in edge {
                if self.used_vertex[next] {
                    continue;
                }
                self.used_vertex[next] = true;
                self.vertices.push(next);
                if self.extend() {
                    return true;
                }
                self.vertices.pop();
                self.used_vertex[next] = false;
            }
            self.edges.pop();
            self.used_edge[idx] = false;
        }
        false
    }
}

/// A cyclic vertex/edge sequence witnessing an odd cycle in the hypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingChain {
    /// `v_1, ..., v_s` as 1-based vertices.
    pub vertices: Vec<usize>,
    /// `F_1, ..., F_s` as indices into [`Hypergraph::edges`].
    pub edges: Vec<usize>,
}

impl AlternatingChain {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_valid_for(&self, h: &Hypergraph) -> bool {
        let s = self.vertices.len();
        if s < 3 || s.is_multiple_of(2) || self.edges.len() != s {
            return false;
        }
        let mut vs = self.vertices.clone();
        vs.sort_unstable();
        vs.dedup();
        let mut es = self.edges.clone();
        es.sort_unstable();
        es.dedup();
        if vs.len() != s || es.len() != s || es.iter().any(|&e| e >= h.edge_count()) {
            return false;
        }
        (0..s).all(|i| {
            let edge = &h.edges[self.edges[i]];
            edge.contains(&self.vertices[i]) && edge.contains(&self.vertices[(i + 1) % s])
        })
    }
}

/// Positive integer weights aligned with the canonical edge order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightFunction {
    weights: Vec<u64>,
}

impl WeightFunction {
    pub fn new(h: &Hypergraph, weights: Vec<u64>) -> Result<Self> {
        if weights.len() != h.edge_count() {
            return Err(Error::LengthMismatch {
                expected: h.edge_count(),
                got: weights.len(),
            });
        }
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::NonPositiveWeight(i + 1));
        }
        Ok(WeightFunction { weights })
    }

    /// The canonical weight `w_F = 1`.
    pub fn ones(h: &Hypergraph) -> Self {
        Self::constant(h, 1)
    }

    pub fn constant(h: &Hypergraph, d: u64) -> Self {
        assert!(d >= 1, "weights must be positive");
        WeightFunction {
            weights: vec![d; h.edge_count()],
        }
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn max(&self) -> u64 {
        self.weights.iter().copied().max().unwrap_or(0)
    }

    pub(crate) fn check_aligned(&self, h: &Hypergraph) -> Result<()> {
        if self.weights.len() != h.edge_count() {
            return Err(Error::LengthMismatch {
                expected: h.edge_count(),
                got: self.weights.len(),
            });
        }
        Ok(())
    }
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|v| big.binary_search(v).is_ok())
}

fn minimal_sets(mut sets: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<Vec<usize>> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| is_subset(k, &s)) {
            kept.push(s);
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(edges: &[&[usize]], n: usize) -> Hypergraph {
        Hypergraph::normalize_clutter(edges.iter().map(|e| e.iter().copied()), n).unwrap()
    }

    fn example() -> Hypergraph {
        hg(&[&[1, 2, 3], &[1, 5, 6], &[2, 4, 6], &[3, 4, 5]], 6)
    }

    /// Minimal covers by brute force over all vertex subsets.
    fn blocker_by_subsets(h: &Hypergraph) -> Vec<Vec<usize>> {
        let n = h.n();
        let covers: Vec<Vec<usize>> = (0u32..(1 << n))
            .map(|mask| (1..=n).filter(|v| mask & (1 << (v - 1)) != 0).collect::<Vec<_>>())
            .filter(|s| h.is_vertex_cover(s))
            .collect();
        let mut minimal: Vec<Vec<usize>> = covers
            .iter()
            .filter(|s| {
                s.iter().all(|v| {
                    let smaller: Vec<usize> = s.iter().copied().filter(|u| u != v).collect();
                    !h.is_vertex_cover(&smaller)
                })
            })
            .cloned()
            .collect();
        if h.edge_count() == 0 {
            minimal.clear();
        }
        minimal.sort();
        minimal
    }

    #[test]
    fn normalize_drops_supersets_and_duplicates() {
        assert_eq!(hg(&[&[1, 2], &[1, 2, 3]], 3).edges(), &[vec![1, 2]]);
        assert_eq!(hg(&[&[1], &[1]], 1).edges(), &[vec![1]]);
        let ex = example();
        assert_eq!(
            ex.edges(),
            &[vec![1, 2, 3], vec![1, 5, 6], vec![2, 4, 6], vec![3, 4, 5]]
        );
    }

    #[test]
    fn normalize_rejections() {
        assert_eq!(
            Hypergraph::normalize_clutter(vec![Vec::<usize>::new()], 2),
            Err(Error::EmptyEdge(1))
        );
        assert_eq!(
            Hypergraph::normalize_clutter(vec![vec![1]], 0),
            Err(Error::NoVertices)
        );
        assert_eq!(
            Hypergraph::normalize_clutter(vec![vec![1, 4]], 3),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        );
    }

    #[test]
    fn normalize_tracks_origin() {
        let norm = Hypergraph::normalize_tracked(vec![vec![2, 3], vec![1, 2, 3], vec![1, 2], vec![3, 2]], 3)
            .unwrap();
        assert_eq!(norm.hypergraph.edges(), &[vec![1, 2], vec![2, 3]]);
        assert_eq!(norm.origin, vec![Some(1), None, Some(0), None]);
        assert_eq!(norm.removed().collect::<Vec<_>>(), vec![1, 3]);
    }

    #[test]
    fn incidence_rows_are_edges() {
        let tri = hg(&[&[1, 2], &[1, 3], &[2, 3]], 3);
        assert_eq!(
            tri.incidence_matrix(),
            IntegerMatrix::from_rows(3, &[vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]])
        );
        assert_eq!(
            hg(&[&[1, 2]], 2).incidence_matrix(),
            IntegerMatrix::from_rows(2, &[vec![1, 1]])
        );
        assert_eq!(
            example().incidence_matrix(),
            IntegerMatrix::from_rows(
                6,
                &[
                    vec![1, 1, 1, 0, 0, 0],
                    vec![1, 0, 0, 0, 1, 1],
                    vec![0, 1, 0, 1, 0, 1],
                    vec![0, 0, 1, 1, 1, 0],
                ]
            )
        );
    }

    #[test]
    fn blocker_examples() {
        let b = example().blocker();
        let expected = hg(
            &[
                &[1, 4],
                &[2, 5],
                &[3, 6],
                &[1, 2, 3],
                &[1, 5, 6],
                &[2, 4, 6],
                &[3, 4, 5],
            ],
            6,
        );
        assert_eq!(b, expected);
        let c4 = hg(&[&[1, 2], &[2, 3], &[3, 4], &[4, 1]], 4);
        assert_eq!(c4.blocker().edges(), blocker_by_subsets(&c4).as_slice());
        assert_eq!(c4.blocker().edges(), &[vec![1, 3], vec![2, 4]]);
        assert_eq!(hg(&[&[1]], 1).blocker().edges(), &[vec![1]]);
        assert_eq!(Hypergraph::empty(3).unwrap().blocker().edge_count(), 0);
    }

    #[test]
    fn blocker_matches_subset_enumeration_and_is_involutive() {
        for n in 1..=5 {
            let clutters = if n <= 4 {
                Hypergraph::all_clutters(n).unwrap()
            } else {
                Hypergraph::all_clutters(n).unwrap().into_iter().step_by(97).collect()
            };
            for h in clutters {
                let b = h.blocker();
                assert_eq!(b.edges(), blocker_by_subsets(&h).as_slice(), "{h:?}");
                assert_eq!(b.blocker(), h, "involution failed on {h:?}");
                for be in b.edges() {
                    assert!(h.edges().iter().all(|e| e.iter().any(|v| be.contains(v))));
                }
            }
        }
    }

    #[test]
    fn clutter_counts() {
        // antichains of nonempty subsets: Dedekind numbers minus one
        assert_eq!(Hypergraph::all_clutters(1).unwrap().len(), 2);
        assert_eq!(Hypergraph::all_clutters(2).unwrap().len(), 5);
        assert_eq!(Hypergraph::all_clutters(3).unwrap().len(), 19);
        assert_eq!(Hypergraph::all_clutters(4).unwrap().len(), 167);
    }

    #[test]
    fn odd_chains() {
        let tri = hg(&[&[1, 2], &[1, 3], &[2, 3]], 3);
        let chain = tri.find_odd_alternating_chain().unwrap();
        assert_eq!(chain.vertices, vec![1, 2, 3]);
        let edges: Vec<&Vec<usize>> = chain.edges.iter().map(|&i| &tri.edges()[i]).collect();
        assert_eq!(edges, vec![&vec![1, 2], &vec![2, 3], &vec![1, 3]]);
        assert!(chain.is_valid_for(&tri));

        let c4 = hg(&[&[1, 2], &[2, 3], &[3, 4], &[4, 1]], 4);
        assert_eq!(c4.find_odd_alternating_chain(), None);
        assert_eq!(hg(&[&[1, 2]], 2).find_odd_alternating_chain(), None);

        let ex = example();
        assert!(ex.find_odd_alternating_chain().unwrap().is_valid_for(&ex));
    }

    #[test]
    fn bipartite_detection() {
        assert_eq!(hg(&[&[1, 2], &[2, 3], &[3, 4], &[4, 1]], 4).is_bipartite_graph(), Some(true));
        assert_eq!(hg(&[&[1, 2], &[1, 3], &[2, 3]], 3).is_bipartite_graph(), Some(false));
        assert_eq!(example().is_bipartite_graph(), None);
        assert_eq!(Hypergraph::empty(2).unwrap().is_bipartite_graph(), Some(true));
    }

    #[test]
    fn weights_validate() {
        let tri = hg(&[&[1, 2], &[1, 3], &[2, 3]], 3);
        assert!(WeightFunction::new(&tri, vec![1, 2, 3]).is_ok());
        assert_eq!(
            WeightFunction::new(&tri, vec![1, 2]),
            Err(Error::LengthMismatch { expected: 3, got: 2 })
        );
        assert_eq!(
            WeightFunction::new(&tri, vec![1, 0, 1]),
            Err(Error::NonPositiveWeight(2))
        );
    }
}
