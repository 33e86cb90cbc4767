//! Exhaustive enumeration of numerical semigroups within multiplicity and
//! Frobenius bounds, via the genus tree: each semigroup other than the
//! whole numbers is obtained from a unique parent by removing one minimal
//! generator larger than the parent's Frobenius number.

use crate::error::Result;
use crate::semigroup::{Int, NumericalSemigroup};

/// All numerical semigroups with multiplicity at most `max_multiplicity`
/// and Frobenius number at most `max_frobenius`, each exactly once,
/// sorted by the sorted generator tuple.
///
/// Both bounds prune the tree soundly: removing generators never
/// decreases the multiplicity, and a child's Frobenius number is exactly
/// the removed generator, which exceeds the parent's.
pub fn enumerate(max_multiplicity: Int, max_frobenius: Int) -> Result<Vec<NumericalSemigroup>> {
    let mut out = Vec::new();
    let root = NumericalSemigroup::new(&[1])?;
    let mut stack = vec![root];
    while let Some(h) = stack.pop() {
        for child in children(&h)? {
            if child.multiplicity() <= max_multiplicity && child.frobenius() <= max_frobenius {
                stack.push(child);
            }
        }
        out.push(h);
    }
    out.sort_by(|x, y| x.sorted_generators().cmp(y.sorted_generators()));
    Ok(out)
}

/// The children of `h` in the genus tree: remove each minimal generator
/// `g` greater than the Frobenius number. The removal is generated by
/// the remaining generators together with `g + a` for each of them and
/// `2g, 3g`.
pub fn children(h: &NumericalSemigroup) -> Result<Vec<NumericalSemigroup>> {
    let mut out = Vec::new();
    for &g in h.generators() {
        if g <= h.frobenius() {
            continue;
        }
        if h.generators().len() == 1 && g == 1 {
            out.push(NumericalSemigroup::new(&[2, 3])?);
            continue;
        }
        let mut gens: Vec<Int> = h.generators().iter().copied().filter(|&a| a != g).collect();
        let rest = gens.clone();
        for a in rest {
            gens.push(g + a);
        }
        gens.push(2 * g);
        gens.push(3 * g);
        out.push(NumericalSemigroup::new(&gens)?);
    }
    Ok(out)
}
