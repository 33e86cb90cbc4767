//! Basic invariants of numerical semigroups: membership, Apéry sets,
//! gaps, (pseudo-)Frobenius numbers, factorizations and their orders.
//!
//! All arithmetic is checked 64-bit; overflow aborts with [`Error::Overflow`]
//! instead of wrapping.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Checked 64-bit integer used throughout the crate.
pub type Int = i64;

fn add(a: Int, b: Int) -> Result<Int> {
    a.checked_add(b).ok_or(Error::Overflow)
}

fn mul(a: Int, b: Int) -> Result<Int> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub fn gcd(mut a: Int, mut b: Int) -> Int {
    while b != 0 {
        (a, b) = (b, a.rem_euclid(b));
    }
    a.abs()
}

/// The Apéry set of a semigroup with respect to a positive element `base`:
/// `representatives[i]` is the least element of the semigroup congruent to
/// `i` modulo `base`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AperySet {
    pub base: Int,
    pub representatives: Vec<Int>,
}

impl AperySet {
    pub fn max(&self) -> Int {
        *self.representatives.iter().max().expect("non-empty")
    }

    /// Representatives in increasing order.
    pub fn sorted(&self) -> Vec<Int> {
        let mut v = self.representatives.clone();
        v.sort_unstable();
        v
    }
}

/// One representation of an element as a non-negative combination of the
/// generators, in user generator order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pub coefficients: Vec<Int>,
    pub degree: Int,
    pub length: Int,
}

/// The pseudo-Frobenius numbers, sorted increasingly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PfSet {
    pub values: Vec<Int>,
}

impl PfSet {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// A numerical semigroup given by its minimal generators, kept in the
/// order the user supplied them (theorem statements permute the
/// non-multiplicity generators, so the order is data).
///
/// The Apéry set with respect to the multiplicity and the Frobenius
/// number are computed eagerly at construction; all operations are pure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericalSemigroup {
    generators: Vec<Int>,
    sorted: Vec<Int>,
    removed: Vec<Int>,
    multiplicity: Int,
    apery: AperySet,
    frobenius: Int,
}

impl NumericalSemigroup {
    /// Canonicalizes a raw generator list: drops redundant generators
    /// (reporting them), keeps the survivors in user order, and caches
    /// the multiplicity, Apéry set and Frobenius number.
    pub fn new(raw_generators: &[Int]) -> Result<Self> {
        if raw_generators.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(&g) = raw_generators.iter().find(|&&g| g <= 0) {
            return Err(Error::NonPositiveGenerator(g));
        }
        let g = raw_generators.iter().copied().fold(0, gcd);
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }

        // An input generator is minimal iff it is not a sum of two positive
        // elements of the semigroup generated by the whole list.
        let max = *raw_generators.iter().max().expect("non-empty");
        let mut member = vec![false; max as usize + 1];
        member[0] = true;
        for x in 1..=max {
            member[x as usize] = raw_generators
                .iter()
                .any(|&a| a <= x && member[(x - a) as usize]);
        }
        let decomposable = |x: Int| (1..x).any(|y| member[y as usize] && member[(x - y) as usize]);

        let mut generators = Vec::new();
        let mut removed = Vec::new();
        for &g in raw_generators {
            if generators.contains(&g) || decomposable(g) {
                removed.push(g);
            } else {
                generators.push(g);
            }
        }

        let multiplicity = *generators.iter().min().expect("non-empty");
        let apery = apery_by_dijkstra(&generators, multiplicity)?;
        let frobenius = apery.max() - multiplicity;
        let mut sorted = generators.clone();
        sorted.sort_unstable();
        Ok(NumericalSemigroup {
            generators,
            sorted,
            removed,
            multiplicity,
            apery,
            frobenius,
        })
    }

    /// Minimal generators in user order.
    pub fn generators(&self) -> &[Int] {
        &self.generators
    }

    /// Minimal generators in increasing order.
    pub fn sorted_generators(&self) -> &[Int] {
        &self.sorted
    }

    /// Input generators that were dropped as redundant.
    pub fn removed(&self) -> &[Int] {
        &self.removed
    }

    pub fn multiplicity(&self) -> Int {
        self.multiplicity
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// The cached Apéry set with respect to the multiplicity.
    pub fn apery(&self) -> &AperySet {
        &self.apery
    }

    /// The Apéry set with respect to an arbitrary positive element.
    pub fn apery_set(&self, base: Int) -> Result<AperySet> {
        if base <= 0 || !self.contains(base) {
            return Err(Error::BaseNotInSemigroup(base));
        }
        apery_by_dijkstra(&self.generators, base)
    }

    /// Membership by Apéry reduction: `z` lies in the semigroup iff
    /// `z >= w_{z mod a1}`.
    pub fn contains(&self, z: Int) -> bool {
        if z < 0 {
            return false;
        }
        let r = (z % self.multiplicity) as usize;
        z >= self.apery.representatives[r]
    }

    pub fn frobenius(&self) -> Int {
        self.frobenius
    }

    pub fn gaps(&self) -> Vec<Int> {
        (0..=self.frobenius).filter(|&z| !self.contains(z)).collect()
    }

    pub fn genus(&self) -> usize {
        self.gaps().len()
    }

    /// Pseudo-Frobenius numbers, computed from the maximal elements of the
    /// Apéry set under the partial order `x <= y  iff  y - x` in the
    /// semigroup.
    pub fn pseudo_frobenius(&self) -> PfSet {
        if self.multiplicity == 1 {
            return PfSet { values: Vec::new() };
        }
        let reps = &self.apery.representatives;
        let mut values: Vec<Int> = reps
            .iter()
            .filter(|&&a| {
                reps.iter().all(|&b| b == a || !self.contains(b - a))
            })
            .map(|&a| a - self.multiplicity)
            .collect();
        values.sort_unstable();
        PfSet { values }
    }

    /// Cohen-Macaulay type: the number of pseudo-Frobenius numbers.
    pub fn pf_type(&self) -> usize {
        self.pseudo_frobenius().len()
    }

    /// For `z` outside the semigroup, the least pseudo-Frobenius number
    /// `alpha` with `alpha - z` in the semigroup.
    pub fn pf_witness(&self, z: Int) -> Result<Int> {
        if self.contains(z) {
            return Err(Error::InSemigroup(z));
        }
        self.pseudo_frobenius()
            .values
            .iter()
            .copied()
            .find(|&alpha| self.contains(alpha - z))
            .ok_or_else(|| {
                Error::InternalContradiction(format!(
                    "no pseudo-Frobenius witness for gap {z}"
                ))
            })
    }

    /// All factorizations of `d`, in ascending lexicographic order on the
    /// coefficient vectors (last generator varied innermost).
    pub fn factorizations(&self, d: Int) -> Vec<Factorization> {
        let mut out = Vec::new();
        if d < 0 {
            return out;
        }
        let mut coeffs = vec![0; self.generators.len()];
        self.enumerate_factorizations(d, 0, &mut coeffs, &mut out);
        out
    }

    fn enumerate_factorizations(
        &self,
        remaining: Int,
        idx: usize,
        coeffs: &mut Vec<Int>,
        out: &mut Vec<Factorization>,
    ) {
        if idx == self.generators.len() {
            if remaining == 0 {
                let length = coeffs.iter().sum();
                let degree = coeffs
                    .iter()
                    .zip(&self.generators)
                    .map(|(&c, &a)| c * a)
                    .sum();
                out.push(Factorization {
                    coefficients: coeffs.clone(),
                    degree,
                    length,
                });
            }
            return;
        }
        let a = self.generators[idx];
        for c in 0..=remaining / a {
            coeffs[idx] = c;
            self.enumerate_factorizations(remaining - c * a, idx + 1, coeffs, out);
        }
        coeffs[idx] = 0;
    }

    /// Maximal factorization length of `d` (the order of `t^d` in the
    /// maximal ideal filtration), or `None` if `d` is not in the semigroup.
    pub fn max_order(&self, d: Int) -> Option<Int> {
        if d < 0 {
            return None;
        }
        let mut ord: Vec<Option<Int>> = vec![None; d as usize + 1];
        ord[0] = Some(0);
        for x in 1..=d {
            let best = self
                .generators
                .iter()
                .filter(|&&a| a <= x)
                .filter_map(|&a| ord[(x - a) as usize])
                .max();
            ord[x as usize] = best.map(|b| b + 1);
        }
        ord[d as usize]
    }

    /// A maximal-length factorization of `d`, if `d` is in the semigroup.
    pub fn max_order_witness(&self, d: Int) -> Option<Factorization> {
        let facts = self.factorizations(d);
        facts.into_iter().max_by_key(|f| f.length)
    }
}

/// Shortest-path relaxation over residue classes: each Apéry
/// representative is the shortest distance from residue 0 with arc
/// weights given by the generators.
fn apery_by_dijkstra(generators: &[Int], base: Int) -> Result<AperySet> {
    let h = base as usize;
    let mut dist: Vec<Option<Int>> = vec![None; h];
    dist[0] = Some(0);
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if dist[r] != Some(d) {
            continue;
        }
        for &a in generators {
            if a % base == 0 {
                continue;
            }
            let nd = add(d, a)?;
            let nr = (nd % base) as usize;
            if dist[nr].is_none_or(|old| nd < old) {
                dist[nr] = Some(nd);
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    // Every residue class mod base contains semigroup elements (gcd 1).
    let representatives: Vec<Int> = dist
        .into_iter()
        .map(|d| d.expect("every residue class is reachable"))
        .collect();
    Ok(AperySet {
        base,
        representatives,
    })
}

/// Degree of a coefficient vector against a weight list, checked.
pub fn weighted_sum(coefficients: &[Int], weights: &[Int]) -> Result<Int> {
    let mut acc: Int = 0;
    for (&c, &w) in coefficients.iter().zip(weights) {
        acc = add(acc, mul(c, w)?)?;
    }
    Ok(acc)
}
