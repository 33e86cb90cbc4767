//! Buchberger completion for binomial ideals in the weighted ring,
//! normal forms, standard-monomial counting for Artinian quotients, and
//! the Nakayama dimension certificate.
//!
//! All arithmetic stays in the ±1 coefficient signature: an S-polynomial
//! or reduction of two such binomials is again a binomial or a single
//! monomial, so no field coefficients are ever needed.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::binomial::{Binomial, Monomial, WeightedRing};
use crate::error::{Error, Result};
use crate::semigroup::{Int, NumericalSemigroup};

/// Weighted-degree term order, ties broken lexicographically on exponent
/// vectors read from the last variable down to the first. Total,
/// multiplicative, and a well-order since all weights are positive.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermOrder {
    pub weights: Vec<Int>,
}

impl TermOrder {
    pub fn new(weights: Vec<Int>) -> Self {
        TermOrder { weights }
    }

    pub fn for_ring(ring: &WeightedRing) -> Self {
        TermOrder { weights: ring.weights.clone() }
    }

    pub fn degree(&self, m: &Monomial) -> i128 {
        m.exponents
            .iter()
            .zip(&self.weights)
            .map(|(&e, &w)| e as i128 * w as i128)
            .sum()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.degree(a).cmp(&self.degree(b)).then_with(|| {
            for (&x, &y) in a.exponents.iter().zip(&b.exponents).rev() {
                match x.cmp(&y) {
                    Ordering::Equal => continue,
                    other => return other,
                }
            }
            Ordering::Equal
        })
    }
}

/// A basis element: a binomial `lead - trail`, or a pure monomial when
/// `trail` is absent (one term of an S-pair reduced to zero).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GbElement {
    pub lead: Monomial,
    pub trail: Option<Monomial>,
}

impl GbElement {
    fn oriented(a: Monomial, b: Monomial, order: &TermOrder) -> Option<GbElement> {
        match order.cmp(&a, &b) {
            Ordering::Greater => Some(GbElement { lead: a, trail: Some(b) }),
            Ordering::Less => Some(GbElement { lead: b, trail: Some(a) }),
            Ordering::Equal => None,
        }
    }

    pub fn from_binomial(b: &Binomial, order: &TermOrder) -> GbElement {
        GbElement::oriented(b.plus.clone(), b.minus.clone(), order)
            .expect("binomial terms differ")
    }

    pub fn from_monomial(m: Monomial) -> GbElement {
        GbElement { lead: m, trail: None }
    }

    pub fn as_binomial(&self) -> Option<Binomial> {
        self.trail
            .as_ref()
            .and_then(|t| Binomial::new(self.lead.clone(), t.clone()))
    }
}

/// Resource caps for Buchberger completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Maximal weighted degree of any basis element lead.
    pub max_degree: Int,
    /// Maximal number of basis elements.
    pub max_basis: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_degree: 1_000_000, max_basis: 10_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerBasis {
    pub elements: Vec<GbElement>,
    pub order: TermOrder,
}

impl GroebnerBasis {
    /// Unique remainder modulo the basis; `None` means the input reduces
    /// to zero, i.e. lies in the ideal.
    pub fn normal_form(&self, p: &GbElement) -> Option<GbElement> {
        reduce_full(p.clone(), &self.elements, &self.order)
    }

    pub fn normal_form_binomial(&self, b: &Binomial) -> Option<GbElement> {
        self.normal_form(&GbElement::from_binomial(b, &self.order))
    }

    /// Buchberger criterion: every S-pair of basis elements reduces to
    /// zero.
    pub fn is_closed_under_s_pairs(&self) -> bool {
        for i in 0..self.elements.len() {
            for j in i + 1..self.elements.len() {
                if let Some(sp) = s_pair(&self.elements[i], &self.elements[j], &self.order) {
                    if reduce_full(sp, &self.elements, &self.order).is_some() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Counts monomials outside the leading-term ideal by walking the
    /// staircase; `None` when some variable has no pure-power leading
    /// term, i.e. the quotient is infinite-dimensional.
    pub fn quotient_dimension(&self) -> Option<Int> {
        let n = self.order.weights.len();
        let leads: Vec<&Monomial> = self.elements.iter().map(|e| &e.lead).collect();
        let mut bounds = vec![None; n];
        for lead in &leads {
            if let Some((v, e)) = lead.pure_power() {
                let b: &mut Option<u32> = &mut bounds[v];
                if b.is_none_or(|cur| e < cur) {
                    *b = Some(e);
                }
            }
            if lead.is_one() {
                return Some(0);
            }
        }
        let bounds: Vec<u32> = bounds.into_iter().collect::<Option<_>>()?;
        let mut count = 0;
        let mut exps = vec![0u32; n];
        count_standard(&leads, &bounds, &mut exps, 0, &mut count);
        Some(count)
    }
}

fn count_standard(
    leads: &[&Monomial],
    bounds: &[u32],
    exps: &mut Vec<u32>,
    idx: usize,
    count: &mut Int,
) {
    if idx == bounds.len() {
        let standard = !leads.iter().any(|l| {
            l.exponents.iter().zip(exps.iter()).all(|(&a, &b)| a <= b)
        });
        if standard {
            *count += 1;
        }
        return;
    }
    for e in 0..bounds[idx] {
        exps[idx] = e;
        count_standard(leads, bounds, exps, idx + 1, count);
    }
    exps[idx] = 0;
}

/// One full reduction pass: the lead is rewritten while reducible, then
/// the trail; `None` means reduction to zero.
fn reduce_full(
    mut p: GbElement,
    basis: &[GbElement],
    order: &TermOrder,
) -> Option<GbElement> {
    'outer: loop {
        for g in basis {
            if g.lead.divides(&p.lead) {
                let m = g.lead.quotient_into(&p.lead);
                match (&p.trail, &g.trail) {
                    (Some(t), Some(gt)) => {
                        let replaced = m.mul(gt).expect("checked exponents");
                        p = GbElement::oriented(replaced, t.clone(), order)?;
                    }
                    (Some(t), None) => {
                        p = GbElement { lead: t.clone(), trail: None };
                    }
                    (None, Some(gt)) => {
                        let replaced = m.mul(gt).expect("checked exponents");
                        p = GbElement { lead: replaced, trail: None };
                    }
                    (None, None) => return None,
                }
                continue 'outer;
            }
        }
        break;
    }
    // Reduce the trail; each rewrite strictly decreases it in the order.
    while let Some(t) = p.trail.clone() {
        let mut changed = false;
        for g in basis {
            if g.lead.divides(&t) {
                let m = g.lead.quotient_into(&t);
                match &g.trail {
                    Some(gt) => {
                        p.trail = Some(m.mul(gt).expect("checked exponents"));
                    }
                    None => {
                        p.trail = None;
                    }
                }
                changed = true;
                break;
            }
        }
        if !changed {
            break;
        }
    }
    Some(p)
}

fn s_pair(f: &GbElement, g: &GbElement, order: &TermOrder) -> Option<GbElement> {
    let lcm = f.lead.lcm(&g.lead);
    let mf = f.lead.quotient_into(&lcm);
    let mg = g.lead.quotient_into(&lcm);
    match (&f.trail, &g.trail) {
        (Some(ft), Some(gt)) => {
            let a = mf.mul(ft).expect("checked exponents");
            let b = mg.mul(gt).expect("checked exponents");
            GbElement::oriented(a, b, order)
        }
        (Some(ft), None) => Some(GbElement::from_monomial(
            mf.mul(ft).expect("checked exponents"),
        )),
        (None, Some(gt)) => Some(GbElement::from_monomial(
            mg.mul(gt).expect("checked exponents"),
        )),
        (None, None) => None,
    }
}

/// Buchberger completion with the normal pair-selection strategy (least
/// lcm degree first, ties by insertion sequence), coprime-lead criterion,
/// and a final inter-reduction to the unique reduced basis.
pub fn buchberger(
    binomials: &[Binomial],
    monomials: &[Monomial],
    order: TermOrder,
    caps: &Caps,
) -> Result<GroebnerBasis> {
    let mut basis: Vec<GbElement> = Vec::new();
    for b in binomials {
        basis.push(GbElement::from_binomial(b, &order));
    }
    for m in monomials {
        if !m.is_one() {
            basis.push(GbElement::from_monomial(m.clone()));
        }
    }

    let mut pairs: BinaryHeap<Reverse<(i128, u64, usize, usize)>> = BinaryHeap::new();
    let mut seq: u64 = 0;
    for i in 0..basis.len() {
        for j in 0..i {
            let lcm = basis[i].lead.lcm(&basis[j].lead);
            pairs.push(Reverse((order.degree(&lcm), seq, j, i)));
            seq += 1;
        }
    }

    while let Some(Reverse((_, _, i, j))) = pairs.pop() {
        if basis[i].lead.coprime(&basis[j].lead) {
            continue;
        }
        let Some(s) = s_pair(&basis[i], &basis[j], &order) else {
            continue;
        };
        let Some(reduced) = reduce_full(s, &basis, &order) else {
            continue;
        };
        if order.degree(&reduced.lead) > caps.max_degree as i128 {
            return Err(Error::CapExceeded(format!(
                "lead degree {} exceeds max degree {}",
                order.degree(&reduced.lead),
                caps.max_degree
            )));
        }
        if basis.len() >= caps.max_basis {
            return Err(Error::CapExceeded(format!(
                "basis size exceeds {}",
                caps.max_basis
            )));
        }
        let k = basis.len();
        for (i, g) in basis.iter().enumerate() {
            let lcm = g.lead.lcm(&reduced.lead);
            pairs.push(Reverse((order.degree(&lcm), seq, i, k)));
            seq += 1;
        }
        basis.push(reduced);
    }

    Ok(GroebnerBasis {
        elements: inter_reduce(basis, &order),
        order,
    })
}

/// Minimizes and auto-reduces a completed basis; output is sorted by
/// leading term, ascending.
fn inter_reduce(mut basis: Vec<GbElement>, order: &TermOrder) -> Vec<GbElement> {
    // Drop elements whose lead is divisible by another lead.
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            if basis[j].lead.divides(&basis[i].lead)
                && (basis[j].lead != basis[i].lead || j < i)
            {
                keep[i] = false;
                break;
            }
        }
    }
    basis = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(e, k)| k.then_some(e))
        .collect();

    // Reduce each element's trail against the others until stable.
    loop {
        let mut changed = false;
        for i in 0..basis.len() {
            let others: Vec<GbElement> = basis
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, e)| e.clone())
                .collect();
            if let Some(r) = reduce_full(basis[i].clone(), &others, order) {
                if r != basis[i] {
                    basis[i] = r;
                    changed = true;
                }
            } else {
                // Leads are pairwise non-divisible, so full reduction of a
                // surviving element cannot vanish.
                unreachable!("minimal basis element reduced to zero");
            }
        }
        if !changed {
            break;
        }
    }
    basis.sort_by(|a, b| order.cmp(&a.lead, &b.lead));
    basis
}

/// Result of the Nakayama dimension certificate for a candidate
/// generating set `J` of the defining ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NakCertificate {
    /// Every generator of `J` is homogeneous for the semigroup grading.
    pub contained: bool,
    /// `dim_k S/(J + (X_mult))`, `None` when infinite.
    pub dimension: Option<Int>,
    pub ok: bool,
}

/// Checks `J ⊆ I_H` term-degree-wise and `dim_k S/(J + (X_mult)) = a_1`;
/// both together prove `J = I_H`.
pub fn nak_certificate(
    h: &NumericalSemigroup,
    j: &[Binomial],
    caps: &Caps,
) -> Result<NakCertificate> {
    let ring = WeightedRing::new(h.generators().to_vec());
    let mut contained = true;
    for b in j {
        if !ring.is_in_defining_ideal(b)? {
            contained = false;
        }
    }
    if !contained {
        return Ok(NakCertificate { contained, dimension: None, ok: false });
    }
    let mult_var = h
        .generators()
        .iter()
        .position(|&g| g == h.multiplicity())
        .expect("multiplicity is a generator");
    let x1 = Monomial::var_pow(ring.num_vars(), mult_var, 1);
    let order = TermOrder::for_ring(&ring);
    let gb = buchberger(j, &[x1], order, caps)?;
    let dimension = gb.quotient_dimension();
    let ok = dimension == Some(h.multiplicity());
    Ok(NakCertificate { contained, dimension, ok })
}
