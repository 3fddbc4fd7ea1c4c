//! k-covers of a weighted hypergraph and the degree-one generation question
//! for its vertex cover algebra.
//!
//! A vector `c` of nonnegative integers is a k-cover of `(Δ, w)` when every
//! edge `F` satisfies `sum_{i in F} c_i >= k w_F`. The degree-k piece of the
//! vertex cover algebra is spanned by `x^c t^k` over the k-covers `c`, so the
//! algebra is standard graded exactly when every k-cover is a sum of k
//! 1-covers.
//!
//! Two reductions keep the searches finite:
//!
//! * Every k-cover dominates a minimal one, and the slack can be added to any
//!   summand. So it suffices to decompose minimal k-covers. A coordinate of a
//!   minimal k-cover never exceeds `k * max w_F` over the edges containing it
//!   (and is 0 on isolated vertices): otherwise lowering it by one keeps every
//!   edge sum at or above its bound.
//! * If `c = c_1 + rest` with `c_1` a j-cover, then any minimal j-cover
//!   `m <= c_1` leaves `c - m >= rest`, still a cover of the same order. So a
//!   splitting search only needs to branch over minimal j-covers below `c`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, WeightFunction};
use crate::ideals::graded_lex;

/// A vector `c` certified at construction to be a k-cover of `(Δ, w)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoverVector {
    c: Vec<u64>,
    k: u64,
}

impl CoverVector {
    pub fn new(h: &Hypergraph, w: &WeightFunction, c: Vec<u64>, k: u64) -> Result<Self> {
        if !is_k_cover(h, w, &c, k)? {
            return Err(Error::NotACover { k });
        }
        Ok(CoverVector { c, k })
    }

    pub fn entries(&self) -> &[u64] {
        &self.c
    }

    pub fn order(&self) -> u64 {
        self.k
    }

    pub fn into_entries(self) -> Vec<u64> {
        self.c
    }
}

fn check_vector(h: &Hypergraph, w: &WeightFunction, c: &[u64]) -> Result<()> {
    w.check_aligned(h)?;
    if c.len() != h.n() {
        return Err(Error::LengthMismatch {
            expected: h.n(),
            got: c.len(),
        });
    }
    Ok(())
}

fn covers(h: &Hypergraph, w: &WeightFunction, c: &[u64], k: u64) -> bool {
    h.edges()
        .iter()
        .zip(w.weights())
        .all(|(edge, &wf)| edge.iter().map(|&v| c[v - 1]).sum::<u64>() >= k * wf)
}

/// `M c >= k w`, edge by edge.
pub fn is_k_cover(h: &Hypergraph, w: &WeightFunction, c: &[u64], k: u64) -> Result<bool> {
    check_vector(h, w, c)?;
    Ok(covers(h, w, c, k))
}

/// Componentwise-minimal k-covers in graded lexicographic order.
pub fn minimal_k_covers(h: &Hypergraph, w: &WeightFunction, k: u64) -> Result<Vec<CoverVector>> {
    if k < 1 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    w.check_aligned(h)?;
    Ok(minimal_covers_raw(h, w, k)
        .into_iter()
        .map(|c| CoverVector { c, k })
        .collect())
}

/// Upper bound for coordinate `i` of a minimal k-cover.
fn coordinate_bounds(h: &Hypergraph, w: &WeightFunction, k: u64) -> Vec<u64> {
    let mut ub = vec![0u64; h.n()];
    for (edge, &wf) in h.edges().iter().zip(w.weights()) {
        for &v in edge {
            ub[v - 1] = ub[v - 1].max(k * wf);
        }
    }
    ub
}

pub(crate) fn minimal_covers_raw(h: &Hypergraph, w: &WeightFunction, k: u64) -> Vec<Vec<u64>> {
    let n = h.n();
    let ub = coordinate_bounds(h, w, k);
    let demand: Vec<u64> = w.weights().iter().map(|&wf| k * wf).collect();
    // capacity[e][i]: most that coordinates i.. can still add to edge e
    let capacity: Vec<Vec<u64>> = h
        .edges()
        .iter()
        .map(|edge| {
            let mut cap = vec![0u64; n + 1];
            for i in (0..n).rev() {
                let here = if edge.binary_search(&(i + 1)).is_ok() { ub[i] } else { 0 };
                cap[i] = cap[i + 1] + here;
            }
            cap
        })
        .collect();
    let incident: Vec<Vec<usize>> = (1..=n)
        .map(|v| {
            h.edges()
                .iter()
                .enumerate()
                .filter(|(_, e)| e.binary_search(&v).is_ok())
                .map(|(i, _)| i)
                .collect()
        })
        .collect();

    let mut out = Vec::new();
    let mut c = vec![0u64; n];
    let mut sums = vec![0u64; h.edge_count()];
    let mut search = MinimalCoverSearch {
        ub: &ub,
        demand: &demand,
        capacity: &capacity,
        incident: &incident,
    };
    search.run(0, &mut c, &mut sums, &mut out);
    out.sort_by(|a, b| graded_lex(a, b));
    out
}

struct MinimalCoverSearch<'a> {
    ub: &'a [u64],
    demand: &'a [u64],
    capacity: &'a [Vec<u64>],
    incident: &'a [Vec<usize>],
}

impl MinimalCoverSearch<'_> {
    fn run(&mut self, i: usize, c: &mut [u64], sums: &mut [u64], out: &mut Vec<Vec<u64>>) {
        let n = c.len();
        if i == n {
            // every edge is satisfied by the pruning below; check minimality
            let minimal = (0..n).all(|v| {
                c[v] == 0 || self.incident[v].iter().any(|&e| sums[e] == self.demand[e])
            });
            if minimal {
                out.push(c.to_vec());
            }
            return;
        }
        for value in 0..=self.ub[i] {
            c[i] = value;
            for &e in &self.incident[i] {
                sums[e] += value;
            }
            let feasible = self
                .demand
                .iter()
                .enumerate()
                .all(|(e, &d)| sums[e] + self.capacity[e][i + 1] >= d);
            // a coordinate pushing every incident edge past its demand cannot be minimal
            let wasteful = value > 0
                && self.incident[i].iter().all(|&e| sums[e] > self.demand[e]);
            if feasible && !wasteful {
                self.run(i + 1, c, sums, out);
            }
            for &e in &self.incident[i] {
                sums[e] -= value;
            }
            if wasteful {
                break;
            }
        }
        c[i] = 0;
    }
}

/// Splitting search over sums of covers, memoizing remainders known not to split.
pub(crate) struct Decomposer<'a> {
    h: &'a Hypergraph,
    w: &'a WeightFunction,
    minimal: Vec<Vec<Vec<u64>>>,
    failed: HashSet<(Vec<u64>, u64)>,
}

impl<'a> Decomposer<'a> {
    pub(crate) fn new(h: &'a Hypergraph, w: &'a WeightFunction) -> Self {
        Decomposer {
            h,
            w,
            minimal: vec![Vec::new()],
            failed: HashSet::new(),
        }
    }

    fn minimal_of(&mut self, j: u64) -> &[Vec<u64>] {
        let j = j as usize;
        while self.minimal.len() <= j {
            let next = self.minimal.len() as u64;
            self.minimal.push(minimal_covers_raw(self.h, self.w, next));
        }
        &self.minimal[j]
    }

    /// `c` (a k-cover) as a sum of `k` 1-covers, if possible. The first
    /// `k - 1` parts are minimal 1-covers; the last absorbs the slack.
    pub(crate) fn split_into_ones(&mut self, c: &[u64], k: u64) -> Option<Vec<Vec<u64>>> {
        if k <= 1 {
            return Some(vec![c.to_vec()]);
        }
        let key = (c.to_vec(), k);
        if self.failed.contains(&key) {
            return None;
        }
        let candidates: Vec<Vec<u64>> = self
            .minimal_of(1)
            .iter()
            .filter(|m| dominated(m, c))
            .cloned()
            .collect();
        for m in candidates {
            let rest = difference(c, &m);
            if !covers(self.h, self.w, &rest, k - 1) {
                continue;
            }
            if let Some(mut parts) = self.split_into_ones(&rest, k - 1) {
                parts.insert(0, m);
                return Some(parts);
            }
        }
        self.failed.insert(key);
        None
    }

    /// Whether the k-cover `c` is a j-cover plus a (k - j)-cover for some
    /// `1 <= j < k`.
    pub(crate) fn is_product(&mut self, c: &[u64], k: u64) -> bool {
        for j in 1..=k / 2 {
            let h = self.h;
            let w = self.w;
            if self
                .minimal_of(j)
                .iter()
                .any(|m| dominated(m, c) && covers(h, w, &difference(c, m), k - j))
            {
                return true;
            }
        }
        false
    }
}

fn dominated(small: &[u64], big: &[u64]) -> bool {
    small.iter().zip(big).all(|(a, b)| a <= b)
}

fn difference(big: &[u64], small: &[u64]) -> Vec<u64> {
    big.iter().zip(small).map(|(a, b)| a - b).collect()
}

/// Writes the k-cover `c` as a sum of `k` 1-covers, or `None` when no such
/// decomposition exists.
pub fn decompose(
    h: &Hypergraph,
    w: &WeightFunction,
    c: &[u64],
    k: u64,
) -> Result<Option<Vec<Vec<u64>>>> {
    if k < 1 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    if !is_k_cover(h, w, c, k)? {
        return Err(Error::NotACover { k });
    }
    Ok(Decomposer::new(h, w).split_into_ones(c, k))
}

/// Outcome of checking degree-one generation up to degree `bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingReport {
    pub bound: u64,
    /// The first minimal k-cover (`2 <= k <= bound`) that is not a sum of k 1-covers.
    pub failing_cover: Option<CoverVector>,
}

impl GradingReport {
    pub fn is_standard(&self) -> bool {
        self.failing_cover.is_none()
    }
}

pub fn is_standard_graded_up_to(
    h: &Hypergraph,
    w: &WeightFunction,
    bound: u64,
) -> Result<GradingReport> {
    if bound < 1 {
        return Err(Error::InvalidArgument("grading bound must be at least 1".into()));
    }
    w.check_aligned(h)?;
    let mut dec = Decomposer::new(h, w);
    for k in 2..=bound {
        let covers = dec.minimal_of(k).to_vec();
        for c in covers {
            if dec.split_into_ones(&c, k).is_none() {
                return Ok(GradingReport {
                    bound,
                    failing_cover: Some(CoverVector { c, k }),
                });
            }
        }
    }
    Ok(GradingReport {
        bound,
        failing_cover: None,
    })
}

/// A monomial generator `x^c t^k` of the vertex cover algebra over the
/// polynomial ring (degree-zero generators are the variables and are not listed).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraGenerator {
    pub c: Vec<u64>,
    pub k: u64,
}

/// Generators of t-degree at most `bound`: all minimal 1-covers, and for
/// `k >= 2` the minimal k-covers that are not a sum of a j-cover and a
/// (k - j)-cover. The algebra is standard graded up to `bound` iff every
/// returned generator has degree 1.
pub fn algebra_generators_up_to(
    h: &Hypergraph,
    w: &WeightFunction,
    bound: u64,
) -> Result<Vec<AlgebraGenerator>> {
    if bound < 1 {
        return Err(Error::InvalidArgument("generator bound must be at least 1".into()));
    }
    w.check_aligned(h)?;
    let mut dec = Decomposer::new(h, w);
    let mut out: Vec<AlgebraGenerator> = dec
        .minimal_of(1)
        .iter()
        .map(|c| AlgebraGenerator { c: c.clone(), k: 1 })
        .collect();
    for k in 2..=bound {
        let covers = dec.minimal_of(k).to_vec();
        for c in covers {
            if !dec.is_product(&c, k) {
                out.push(AlgebraGenerator { c, k });
            }
        }
    }
    Ok(out)
}
