//! Bounded checks of the min-cover / max-packing equality.
//!
//! For a cost vector `c >= 0` the minimum of `a . c` over integer 1-covers `a`
//! is attained at a minimal 1-cover, since lowering a coordinate never raises
//! the cost. The packing side maximizes `sum b` over edge multiplicities `b`
//! with `M^T b <= c`; each `b_F` is at most the smallest `c_v` on `F`, so a
//! bounded branch and bound over the edges is exact.

use crate::covers::{is_standard_graded_up_to, minimal_covers_raw, GradingReport};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, WeightFunction};
use crate::linalg::next_in_box;

/// Largest vertex count accepted by [`is_mengerian_up_to`].
pub const MENGERIAN_VERTEX_CAP: usize = 10;

fn check_costs(h: &Hypergraph, c: &[u64]) -> Result<()> {
    if c.len() != h.n() {
        return Err(Error::LengthMismatch {
            expected: h.n(),
            got: c.len(),
        });
    }
    Ok(())
}

fn cheapest_cover(minimal: &[Vec<u64>], c: &[u64]) -> u64 {
    minimal
        .iter()
        .map(|a| a.iter().zip(c).map(|(x, y)| x * y).sum::<u64>())
        .min()
        .expect("a hypergraph always has a minimal cover")
}

pub fn min_cover_value(h: &Hypergraph, c: &[u64]) -> Result<u64> {
    check_costs(h, c)?;
    let minimal = minimal_covers_raw(h, &WeightFunction::ones(h), 1);
    Ok(cheapest_cover(&minimal, c))
}

pub fn max_packing_value(h: &Hypergraph, c: &[u64]) -> Result<u64> {
    check_costs(h, c)?;
    Ok(best_packing(h, c))
}

fn best_packing(h: &Hypergraph, c: &[u64]) -> u64 {
    let mut capacity = c.to_vec();
    let mut best = 0;
    pack(h.edges(), 0, &mut capacity, 0, &mut best);
    best
}

fn pack(edges: &[Vec<usize>], next: usize, capacity: &mut [u64], value: u64, best: &mut u64) {
    if value > *best {
        *best = value;
    }
    if next == edges.len() {
        return;
    }
    // each remaining edge uses at least one unit of some vertex it contains
    let optimistic: u64 = edges[next..]
        .iter()
        .map(|e| e.iter().map(|&v| capacity[v - 1]).min().unwrap_or(0))
        .sum();
    if value + optimistic <= *best {
        return;
    }
    let edge = &edges[next];
    let most = edge.iter().map(|&v| capacity[v - 1]).min().unwrap_or(0);
    for times in (0..=most).rev() {
        for &v in edge {
            capacity[v - 1] -= times;
        }
        pack(edges, next + 1, capacity, value + times, best);
        for &v in edge {
            capacity[v - 1] += times;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MengerianFailure {
    pub c: Vec<u64>,
    pub min_value: u64,
    pub max_value: u64,
}

/// Result of sweeping every cost vector in `{0..=bound}^n`. A pass only
/// covers that box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MengerianReport {
    pub bound: u64,
    pub failure: Option<MengerianFailure>,
}

impl MengerianReport {
    pub fn passes(&self) -> bool {
        self.failure.is_none()
    }
}

pub fn is_mengerian_up_to(h: &Hypergraph, c_bound: u64) -> Result<MengerianReport> {
    if c_bound < 1 {
        return Err(Error::InvalidArgument("cost bound must be at least 1".into()));
    }
    if h.n() > MENGERIAN_VERTEX_CAP {
        return Err(Error::CapExceeded {
            size: h.n(),
            cap: MENGERIAN_VERTEX_CAP,
        });
    }
    let minimal = minimal_covers_raw(h, &WeightFunction::ones(h), 1);
    let mut c = vec![0u64; h.n()];
    loop {
        let min_value = cheapest_cover(&minimal, &c);
        let max_value = best_packing(h, &c);
        assert!(
            min_value >= max_value,
            "weak duality violated at {c:?}: min {min_value} < max {max_value}"
        );
        if min_value != max_value {
            return Ok(MengerianReport {
                bound: c_bound,
                failure: Some(MengerianFailure {
                    c,
                    min_value,
                    max_value,
                }),
            });
        }
        if !next_in_box(&mut c, 0, c_bound) {
            return Ok(MengerianReport {
                bound: c_bound,
                failure: None,
            });
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Agreement {
    /// Both checks pass or both fail.
    Agree,
    /// Grading fails but the bounded Mengerian sweep passes; possible because
    /// the sweep only sees a finite box of costs.
    OneSided,
    /// Grading passes up to the bound while the blocker fails the min-max
    /// equality.
    HardInconsistency,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrosscheckReport {
    pub grading: GradingReport,
    pub blocker: Hypergraph,
    pub blocker_mengerian: MengerianReport,
    pub agreement: Agreement,
}

/// Compares degree-one generation of the canonical-weight algebra with the
/// min-max equality on the blocker.
pub fn blocker_crosscheck(h: &Hypergraph, k_bound: u64, c_bound: u64) -> Result<CrosscheckReport> {
    let grading = is_standard_graded_up_to(h, &WeightFunction::ones(h), k_bound)?;
    let blocker = h.blocker();
    let blocker_mengerian = is_mengerian_up_to(&blocker, c_bound)?;
    let agreement = match (grading.is_standard(), blocker_mengerian.passes()) {
        (true, true) | (false, false) => Agreement::Agree,
        (false, true) => Agreement::OneSided,
        (true, false) => Agreement::HardInconsistency,
    };
    Ok(CrosscheckReport {
        grading,
        blocker,
        blocker_mengerian,
        agreement,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(edges: &[&[usize]], n: usize) -> Hypergraph {
        Hypergraph::normalize_clutter(edges.iter().map(|e| e.iter().copied()), n).unwrap()
    }

    fn triangle() -> Hypergraph {
        hg(&[&[1, 2], &[1, 3], &[2, 3]], 3)
    }

    fn example() -> Hypergraph {
        hg(&[&[1, 2, 3], &[1, 5, 6], &[2, 4, 6], &[3, 4, 5]], 6)
    }

    /// Packing value by scanning every multiplicity vector in the box.
    fn packing_by_box(h: &Hypergraph, c: &[u64]) -> u64 {
        let top = c.iter().copied().max().unwrap_or(0);
        let mut b = vec![0u64; h.edge_count()];
        let mut best = 0;
        loop {
            let mut load = vec![0u64; h.n()];
            for (edge, &times) in h.edges().iter().zip(&b) {
                for &v in edge {
                    load[v - 1] += times;
                }
            }
            if load.iter().zip(c).all(|(l, cap)| l <= cap) {
                best = best.max(b.iter().sum());
            }
            if !next_in_box(&mut b, 0, top) {
                return best;
            }
        }
    }

    #[test]
    fn optimum_examples() {
        let ex = example();
        assert_eq!(min_cover_value(&ex, &[1; 6]).unwrap(), 2);
        assert_eq!(max_packing_value(&ex, &[1; 6]).unwrap(), 1);
        assert_eq!(min_cover_value(&triangle(), &[1, 1, 1]).unwrap(), 2);
        assert_eq!(max_packing_value(&triangle(), &[1, 1, 1]).unwrap(), 1);
        let single = hg(&[&[1]], 1);
        assert_eq!(min_cover_value(&single, &[5]).unwrap(), 5);
        assert_eq!(max_packing_value(&single, &[5]).unwrap(), 5);
        assert!(min_cover_value(&single, &[5, 1]).is_err());
    }

    #[test]
    fn empty_hypergraph_values() {
        let empty = Hypergraph::empty(2).unwrap();
        assert_eq!(min_cover_value(&empty, &[3, 4]).unwrap(), 0);
        assert_eq!(max_packing_value(&empty, &[3, 4]).unwrap(), 0);
    }

    #[test]
    fn packing_matches_box_scan() {
        for h in Hypergraph::all_clutters(3).unwrap() {
            let mut c = vec![0u64; 3];
            loop {
                assert_eq!(max_packing_value(&h, &c).unwrap(), packing_by_box(&h, &c), "{h:?} {c:?}");
                if !next_in_box(&mut c, 0, 2) {
                    break;
                }
            }
        }
    }

    #[test]
    fn min_cover_at_ones_is_smallest_blocker_edge() {
        for h in Hypergraph::all_clutters(4).unwrap() {
            if h.edge_count() == 0 {
                continue;
            }
            let smallest = h.blocker().edges().iter().map(Vec::len).min().unwrap() as u64;
            assert_eq!(min_cover_value(&h, &[1; 4]).unwrap(), smallest);
        }
    }

    #[test]
    fn sweeps() {
        let report = is_mengerian_up_to(&example(), 1).unwrap();
        assert_eq!(
            report.failure,
            Some(MengerianFailure {
                c: vec![1; 6],
                min_value: 2,
                max_value: 1
            })
        );
        assert!(is_mengerian_up_to(&example().blocker(), 2).unwrap().passes());
        assert!(is_mengerian_up_to(&hg(&[&[1, 2]], 2), 3).unwrap().passes());
        let tri = is_mengerian_up_to(&triangle(), 2).unwrap();
        assert_eq!(tri.failure.unwrap().c, vec![1, 1, 1]);
    }

    #[test]
    fn crosschecks() {
        let r = blocker_crosscheck(&example(), 3, 2).unwrap();
        assert!(r.grading.is_standard());
        assert!(r.blocker_mengerian.passes());
        assert_eq!(r.agreement, Agreement::Agree);

        let r = blocker_crosscheck(&triangle(), 2, 2).unwrap();
        assert!(!r.grading.is_standard());
        assert_eq!(r.blocker, triangle());
        assert_eq!(r.blocker_mengerian.failure.as_ref().unwrap().c, vec![1, 1, 1]);
        assert_eq!(r.agreement, Agreement::Agree);

        let r = blocker_crosscheck(&hg(&[&[1, 2]], 2), 3, 2).unwrap();
        assert_eq!(r.agreement, Agreement::Agree);
        assert!(r.grading.is_standard());
    }
}
