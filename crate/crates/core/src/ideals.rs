//! Monomial ideals through their minimal generators.
//!
//! A monomial ideal has a unique minimal monomial generating set, so the
//! canonical form used here (minimal generators sorted by [`graded_lex`]) makes
//! ideal equality plain list equality. Coefficients never matter for monomial
//! ideals, so no field is modeled.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, WeightFunction};

/// Total degree ascending, then lexicographic with `x1 > x2 > ... > xn`.
pub fn graded_lex(a: &[u64], b: &[u64]) -> Ordering {
    let da: u64 = a.iter().sum();
    let db: u64 = b.iter().sum();
    da.cmp(&db).then_with(|| b.cmp(a))
}

/// An exponent vector `x^c`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u64>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn exponents(&self) -> &[u64] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        graded_lex(&self.0, &other.0)
    }
}

impl fmt::Display for Monomial {
    /// `x1^2*x3`, or `1` for the unit monomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("x{}", i + 1)
                } else {
                    format!("x{}^{}", i + 1, e)
                }
            })
            .collect();
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// The ideal generated by `generators`, reduced to canonical form.
    pub fn new(n: usize, generators: Vec<Monomial>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.0.len() != n) {
            return Err(Error::AmbientMismatch {
                left: n,
                right: g.0.len(),
            });
        }
        Ok(Self::minimalized(n, generators))
    }

    fn minimalized(n: usize, mut gens: Vec<Monomial>) -> Self {
        gens.sort();
        gens.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        MonomialIdeal {
            n,
            generators: kept,
        }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            generators: Vec::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            generators: vec![Monomial::one(n)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if self.n != n {
            return Err(Error::AmbientMismatch {
                left: self.n,
                right: n,
            });
        }
        Ok(())
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.check_ambient(m.0.len())?;
        Ok(self.generators.iter().any(|g| g.divides(m)))
    }

    /// Ideal containment `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        other.check_ambient(self.n)?;
        Ok(self
            .generators
            .iter()
            .all(|g| other.generators.iter().any(|h| h.divides(g))))
    }

    pub fn equals(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_ambient(other.n)?;
        Ok(self.generators == other.generators)
    }

    /// Generated by the pairwise lcms of generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other.n)?;
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a.lcm(b));
            }
        }
        Ok(Self::minimalized(self.n, gens))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other.n)?;
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a.mul(b));
            }
        }
        Ok(Self::minimalized(self.n, gens))
    }

    pub fn power(&self, k: u64) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.n);
        for _ in 0..k {
            acc = acc.product(self).expect("same ambient ring");
        }
        acc
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

/// `P_F^p`: all monomials of degree `p` in the variables indexed by `edge`
/// (1-based). `p = 0` gives the unit ideal.
pub fn vertex_prime(edge: &[usize], n: usize, p: u64) -> Result<MonomialIdeal> {
    if edge.is_empty() {
        return Err(Error::EmptyEdge(1));
    }
    if let Some(&vertex) = edge.iter().find(|&&v| v < 1 || v > n) {
        return Err(Error::VertexOutOfRange { vertex, n });
    }
    let mut vars = edge.to_vec();
    vars.sort_unstable();
    vars.dedup();
    let mut gens = Vec::new();
    let mut current = vec![0u64; n];
    spread(&vars, p, &mut current, &mut gens);
    Ok(MonomialIdeal::minimalized(n, gens))
}

fn spread(vars: &[usize], remaining: u64, current: &mut [u64], out: &mut Vec<Monomial>) {
    match vars {
        [] => {}
        [last] => {
            current[last - 1] = remaining;
            out.push(Monomial(current.to_vec()));
            current[last - 1] = 0;
        }
        [first, rest @ ..] => {
            for e in 0..=remaining {
                current[first - 1] = e;
                spread(rest, remaining - e, current, out);
            }
            current[first - 1] = 0;
        }
    }
}

fn intersection_of_powers(h: &Hypergraph, w: &WeightFunction, k: u64) -> Result<MonomialIdeal> {
    w.check_aligned(h)?;
    let mut acc = MonomialIdeal::unit(h.n());
    for (edge, &wf) in h.edges().iter().zip(w.weights()) {
        acc = acc.intersect(&vertex_prime(edge, h.n(), wf * k)?)?;
    }
    Ok(acc)
}

/// `I(Δ, w)`, the intersection of `P_F^{w_F}` over all edges.
pub fn ideal_of(h: &Hypergraph, w: &WeightFunction) -> Result<MonomialIdeal> {
    intersection_of_powers(h, w, 1)
}

/// The `k`-th symbolic power, the intersection of `P_F^{k w_F}`, computed
/// directly from its definition rather than from cover enumeration.
pub fn symbolic_power(h: &Hypergraph, w: &WeightFunction, k: u64) -> Result<MonomialIdeal> {
    intersection_of_powers(h, w, k)
}

/// Comparison of both sides of the power identity for `n + 1` coordinate
/// points of projective `n`-space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryReport {
    pub n: usize,
    pub weights: Vec<u64>,
    pub k: u64,
    /// The hypergraph of all `n`-subsets of the `n + 1` vertices.
    pub hypergraph: Hypergraph,
    pub ordinary_power: MonomialIdeal,
    pub symbolic_power: MonomialIdeal,
    /// A generator of the symbolic side outside the ordinary power.
    pub separating_monomial: Option<Monomial>,
    pub unimodular: bool,
}

impl CorollaryReport {
    pub fn is_equal(&self) -> bool {
        self.separating_monomial.is_none()
    }

    /// The general-position corollary predicts equality for every `n`, weights
    /// and `k`; an inequality here contradicts it.
    pub fn contradicts_corollary(&self) -> bool {
        !self.is_equal()
    }
}

/// Point `i` (0-based, `i = 0..=n`) is the coordinate point `e_i`, whose ideal
/// is generated by every variable except `x_{i+1}`; `weights[i]` is its power.
pub fn corollary_points_check(n: usize, weights: &[u64], k: u64) -> Result<CorollaryReport> {
    if n < 1 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    if k < 1 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    if weights.len() != n + 1 {
        return Err(Error::LengthMismatch {
            expected: n + 1,
            got: weights.len(),
        });
    }
    if let Some(i) = weights.iter().position(|&w| w == 0) {
        return Err(Error::NonPositiveWeight(i + 1));
    }
    let vertices = n + 1;
    let raw: Vec<Vec<usize>> = (1..=vertices)
        .map(|skip| (1..=vertices).filter(|&v| v != skip).collect())
        .collect();
    let norm = Hypergraph::normalize_tracked(raw, vertices)?;
    let h = norm.hypergraph;
    let mut aligned = vec![0u64; h.edge_count()];
    for (point, slot) in norm.origin.iter().enumerate() {
        aligned[slot.expect("n-subsets form a clutter")] = weights[point];
    }
    let w = WeightFunction::new(&h, aligned)?;

    let ordinary_power = ideal_of(&h, &w)?.power(k);
    let symbolic = symbolic_power(&h, &w, k)?;
    let mut separating = None;
    for g in symbolic.generators() {
        if !ordinary_power.contains(g)? {
            separating = Some(g.clone());
            break;
        }
    }
    let unimodular = h
        .incidence_matrix()
        .is_totally_unimodular()?
        .is_totally_unimodular();
    Ok(CorollaryReport {
        n,
        weights: weights.to_vec(),
        k,
        hypergraph: h,
        ordinary_power,
        symbolic_power: symbolic,
        separating_monomial: separating,
        unimodular,
    })
}
