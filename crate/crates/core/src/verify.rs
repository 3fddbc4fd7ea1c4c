//! Sweeps tying total unimodularity to degree-one generation.
//!
//! When the incidence matrix is totally unimodular every weight function must
//! give a standard graded algebra; a violation here is a bug. When it is not,
//! some weight has a cover polyhedron with a fractional vertex `a`, and with
//! `k` the lcm of the denominators of `a` the integer vector `k a` is a
//! k-cover that is not a sum of k 1-covers: such a sum would exhibit the
//! vertex `a` as the average of k points of the polyhedron, forcing all of
//! them to equal `a`, which is not integral.

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::covers::{is_standard_graded_up_to, CoverVector, Decomposer};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, WeightFunction};
use crate::linalg::{self, fractional_vertex_search, next_in_box, RationalPoint, TuVerdict, TuWitness};

/// Scales a fractional vertex of `{c >= 0 : M c >= w}` to the k-cover `k a`,
/// where `k` is the lcm of its denominators.
pub fn witness_from_fractional_vertex(
    h: &Hypergraph,
    w: &WeightFunction,
    a: &RationalPoint,
) -> Result<CoverVector> {
    w.check_aligned(h)?;
    if a.dim() != h.n() {
        return Err(Error::LengthMismatch {
            expected: h.n(),
            got: a.dim(),
        });
    }
    if a.is_integral() {
        return Err(Error::IntegralPoint);
    }
    if !linalg::is_vertex(&h.incidence_matrix(), w.weights(), a)? {
        return Err(Error::NotAVertex);
    }
    let k = a.denominator_lcm();
    let c = a
        .coords()
        .iter()
        .map(|x| {
            let scaled = x * BigRational::from_integer(k.clone());
            debug_assert!(scaled.is_integer() && !scaled.is_negative());
            scaled.to_integer().to_u64()
        })
        .collect::<Option<Vec<u64>>>()
        .ok_or_else(|| Error::InvalidArgument("scaled vertex does not fit in u64".into()))?;
    let k = k
        .to_u64()
        .ok_or_else(|| Error::InvalidArgument("denominator lcm does not fit in u64".into()))?;
    CoverVector::new(h, w, c, k)
}

/// Smallest constant weight `d <= d_max` whose algebra is standard graded up
/// to degree `k_test`.
pub fn find_veronese_degree(h: &Hypergraph, k_test: u64, d_max: u64) -> Result<Option<u64>> {
    if k_test < 2 {
        return Err(Error::InvalidArgument("test depth must be at least 2".into()));
    }
    if d_max < 1 {
        return Err(Error::InvalidArgument("d_max must be at least 1".into()));
    }
    for d in 1..=d_max {
        let w = WeightFunction::constant(h, d);
        if is_standard_graded_up_to(h, &w, k_test)?.is_standard() {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TheoremReport {
    /// Incidence matrix is totally unimodular; every weight in the box was
    /// checked. Any entry in `violations` contradicts the theorem.
    Unimodular {
        weights_checked: usize,
        violations: Vec<(Vec<u64>, CoverVector)>,
    },
    NotUnimodular {
        tu_witness: TuWitness,
        outcome: ConverseOutcome,
    },
}

impl TheoremReport {
    /// True when the run found something the theorem forbids.
    pub fn is_contradiction(&self) -> bool {
        match self {
            TheoremReport::Unimodular { violations, .. } => !violations.is_empty(),
            TheoremReport::NotUnimodular { outcome, .. } => {
                matches!(outcome, ConverseOutcome::Witness { decomposes: true, .. })
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConverseOutcome {
    /// A weight whose polyhedron has the fractional vertex `vertex`, and the
    /// scaled cover built from it. `decomposes` must be false.
    Witness {
        weights: Vec<u64>,
        vertex: RationalPoint,
        cover: CoverVector,
        decomposes: bool,
    },
    /// No fractional vertex for any weight in the box; not a refutation.
    Exhausted,
}

pub fn verify_main_theorem(h: &Hypergraph, w_bound: u64, k_bound: u64) -> Result<TheoremReport> {
    if w_bound < 1 {
        return Err(Error::InvalidArgument("weight bound must be at least 1".into()));
    }
    if k_bound < 1 {
        return Err(Error::InvalidArgument("grading bound must be at least 1".into()));
    }
    let m = h.incidence_matrix();
    match m.is_totally_unimodular()? {
        TuVerdict::TotallyUnimodular => {
            let mut violations = Vec::new();
            let mut checked = 0;
            let mut wv = vec![1u64; h.edge_count()];
            loop {
                let w = WeightFunction::new(h, wv.clone())?;
                checked += 1;
                if let Some(cover) = is_standard_graded_up_to(h, &w, k_bound)?.failing_cover {
                    violations.push((wv.clone(), cover));
                }
                if !next_in_box(&mut wv, 1, w_bound) {
                    break;
                }
            }
            Ok(TheoremReport::Unimodular {
                weights_checked: checked,
                violations,
            })
        }
        TuVerdict::Violated(tu_witness) => {
            let outcome = match fractional_vertex_search(&m, w_bound)? {
                None => ConverseOutcome::Exhausted,
                Some((weights, vertex)) => {
                    let w = WeightFunction::new(h, weights.clone())?;
                    let cover = witness_from_fractional_vertex(h, &w, &vertex)?;
                    let decomposes = Decomposer::new(h, &w)
                        .split_into_ones(cover.entries(), cover.order())
                        .is_some();
                    ConverseOutcome::Witness {
                        weights,
                        vertex,
                        cover,
                        decomposes,
                    }
                }
            };
            Ok(TheoremReport::NotUnimodular {
                tu_witness,
                outcome,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covers::decompose;
    use crate::linalg::RationalPoint;

    fn hg(edges: &[&[usize]], n: usize) -> Hypergraph {
        Hypergraph::normalize_clutter(edges.iter().map(|e| e.iter().copied()), n).unwrap()
    }

    fn triangle() -> Hypergraph {
        hg(&[&[1, 2], &[1, 3], &[2, 3]], 3)
    }

    fn four_cycle() -> Hypergraph {
        hg(&[&[1, 2], &[2, 3], &[3, 4], &[4, 1]], 4)
    }

    fn example() -> Hypergraph {
        hg(&[&[1, 2, 3], &[1, 5, 6], &[2, 4, 6], &[3, 4, 5]], 6)
    }

    #[test]
    fn triangle_witness() {
        let tri = triangle();
        let w = WeightFunction::ones(&tri);
        let a = RationalPoint::from_ratios(&[(1, 2), (1, 2), (1, 2)]);
        let c = witness_from_fractional_vertex(&tri, &w, &a).unwrap();
        assert_eq!((c.entries(), c.order()), (&[1u64, 1, 1][..], 2));
        assert_eq!(decompose(&tri, &w, c.entries(), c.order()).unwrap(), None);
    }

    #[test]
    fn witness_rejections() {
        let tri = triangle();
        let w = WeightFunction::ones(&tri);
        assert_eq!(
            witness_from_fractional_vertex(&tri, &w, &RationalPoint::from_ratios(&[(1, 1), (1, 1), (0, 1)])),
            Err(Error::IntegralPoint)
        );
        assert_eq!(
            witness_from_fractional_vertex(&tri, &w, &RationalPoint::from_ratios(&[(1, 2), (1, 2), (3, 2)])),
            Err(Error::NotAVertex)
        );
        assert!(witness_from_fractional_vertex(&tri, &w, &RationalPoint::from_ratios(&[(1, 2)])).is_err());
    }

    #[test]
    fn example_witness_from_search() {
        let ex = example();
        let (weights, vertex) = fractional_vertex_search(&ex.incidence_matrix(), 3)
            .unwrap()
            .unwrap();
        let w = WeightFunction::new(&ex, weights).unwrap();
        let c = witness_from_fractional_vertex(&ex, &w, &vertex).unwrap();
        assert_eq!(decompose(&ex, &w, c.entries(), c.order()).unwrap(), None);
    }

    #[test]
    fn veronese_degrees() {
        assert_eq!(find_veronese_degree(&four_cycle(), 3, 2).unwrap(), Some(1));
        assert_eq!(find_veronese_degree(&hg(&[&[1, 2]], 2), 3, 1).unwrap(), Some(1));
        assert_eq!(find_veronese_degree(&triangle(), 3, 4).unwrap(), Some(2));
        assert_eq!(find_veronese_degree(&triangle(), 3, 1).unwrap(), None);
        assert!(find_veronese_degree(&triangle(), 1, 1).is_err());
    }

    #[test]
    fn main_theorem_branches() {
        match verify_main_theorem(&four_cycle(), 2, 3).unwrap() {
            TheoremReport::Unimodular {
                weights_checked,
                violations,
            } => {
                assert_eq!(weights_checked, 16);
                assert!(violations.is_empty());
            }
            other => panic!("unexpected {other:?}"),
        }

        let report = verify_main_theorem(&triangle(), 1, 2).unwrap();
        assert!(!report.is_contradiction());
        match report {
            TheoremReport::NotUnimodular {
                outcome:
                    ConverseOutcome::Witness {
                        weights,
                        cover,
                        decomposes,
                        ..
                    },
                ..
            } => {
                assert_eq!(weights, vec![1, 1, 1]);
                assert_eq!((cover.entries(), cover.order()), (&[1u64, 1, 1][..], 2));
                assert!(!decomposes);
            }
            other => panic!("unexpected {other:?}"),
        }

        let report = verify_main_theorem(&example(), 3, 3).unwrap();
        assert!(!report.is_contradiction());
        assert!(matches!(report, TheoremReport::NotUnimodular { .. }));
    }
}
