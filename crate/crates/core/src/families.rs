//! Parametric families realizing both branches of the structure theorem,
//! with post-hoc validation of every promised property.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{gcd, Int, NumericalSemigroup};
use crate::stretched::{arithmetic_pf_profile, stretched_profile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub ell: Int,
    pub n: Int,
    pub alpha: Int,
    pub h1: Int,
}

impl FamilyParams {
    pub fn a(&self) -> Int {
        self.ell + self.n - 1
    }

    fn check_ranges(&self) -> Result<()> {
        if self.ell < 2 {
            return Err(Error::PreconditionFailed("ell >= 2".into()));
        }
        if self.n < 3 {
            return Err(Error::PreconditionFailed("n >= 3".into()));
        }
        if self.alpha <= 0 {
            return Err(Error::PreconditionFailed("alpha > 0".into()));
        }
        if self.h1 < 0 {
            return Err(Error::PreconditionFailed("h1 >= 0".into()));
        }
        if gcd(self.a(), self.alpha) != 1 {
            return Err(Error::PreconditionFailed(format!(
                "gcd(a, alpha) = gcd({}, {}) != 1",
                self.a(),
                self.alpha
            )));
        }
        Ok(())
    }
}

fn validate(
    generators: &[Int],
    params: &FamilyParams,
    expected_h: Int,
) -> Result<NumericalSemigroup> {
    let h = NumericalSemigroup::new(generators)?;
    let n = params.n as usize;
    if !h.removed().is_empty() || h.embedding_dimension() != n {
        return Err(Error::ValidationFailed(format!(
            "embedding dimension {} != {} for {:?}",
            h.embedding_dimension(),
            n,
            generators
        )));
    }
    if h.multiplicity() != params.a() {
        return Err(Error::ValidationFailed(format!(
            "multiplicity {} != a = {} for {:?}",
            h.multiplicity(),
            params.a(),
            generators
        )));
    }
    let shape = stretched_profile(&h);
    match shape.profile() {
        Some(p) if p.ell == params.ell => {}
        _ => {
            return Err(Error::ValidationFailed(format!(
                "quotient not stretched with ell = {} for {:?}",
                params.ell, generators
            )));
        }
    }
    match arithmetic_pf_profile(&h) {
        Some(p) if p.h == expected_h && p.alpha == params.alpha => {}
        other => {
            return Err(Error::ValidationFailed(format!(
                "PF profile {:?} != expected (h = {}, alpha = {}) for {:?}",
                other, expected_h, params.alpha, generators
            )));
        }
    }
    Ok(h)
}

/// The `j = 1` family: `b = (h1 + 1) a + alpha` and
/// `H = <a, b, ell b + alpha, ..., ell b + (n-2) alpha>`.
pub fn family_j1(params: &FamilyParams) -> Result<NumericalSemigroup> {
    params.check_ranges()?;
    let a = params.a();
    let b = (params.h1 + 1)
        .checked_mul(a)
        .and_then(|v| v.checked_add(params.alpha))
        .ok_or(Error::Overflow)?;
    let lb = params.ell.checked_mul(b).ok_or(Error::Overflow)?;
    let mut gens = vec![a, b];
    for i in 1..=params.n - 2 {
        gens.push(
            lb.checked_add(i.checked_mul(params.alpha).ok_or(Error::Overflow)?)
                .ok_or(Error::Overflow)?,
        );
    }
    let expected_h = params.h1 * a + (params.ell - 1) * b;
    validate(&gens, params, expected_h)
}

/// The `j = n-1` family: `b = ((h1 + 1 + alpha)/ell) a - alpha` and
/// `H = <a, ell b - (n-2) alpha, ..., ell b - alpha, b>`.
pub fn family_jn1(params: &FamilyParams) -> Result<NumericalSemigroup> {
    params.check_ranges()?;
    let a = params.a();
    let num = params.h1 + 1 + params.alpha;
    if num % params.ell != 0 {
        return Err(Error::PreconditionFailed(format!(
            "(h1 + 1 + alpha)/ell = {num}/{} not an integer",
            params.ell
        )));
    }
    let b = (num / params.ell)
        .checked_mul(a)
        .and_then(|v| v.checked_sub(params.alpha))
        .ok_or(Error::Overflow)?;
    if b <= a {
        return Err(Error::PreconditionFailed(format!("b = {b} <= a = {a}")));
    }
    let lb = params.ell.checked_mul(b).ok_or(Error::Overflow)?;
    let mut gens = vec![a];
    for i in (1..=params.n - 2).rev() {
        gens.push(
            lb.checked_sub(i.checked_mul(params.alpha).ok_or(Error::Overflow)?)
                .ok_or(Error::Overflow)?,
        );
    }
    gens.push(b);
    let expected_h = params.h1 * a;
    validate(&gens, params, expected_h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j1_worked_instance() {
        let h = family_j1(&FamilyParams { ell: 3, n: 4, alpha: 1, h1: 1 }).unwrap();
        assert_eq!(h.generators(), &[6, 13, 40, 41]);
    }

    #[test]
    fn j1_small_instance() {
        let h = family_j1(&FamilyParams { ell: 2, n: 3, alpha: 1, h1: 0 }).unwrap();
        assert_eq!(h.generators(), &[4, 5, 11]);
    }

    #[test]
    fn j1_gcd_filter() {
        let r = family_j1(&FamilyParams { ell: 2, n: 4, alpha: 5, h1: 0 });
        assert!(matches!(r, Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn jn1_worked_instance() {
        let h = family_jn1(&FamilyParams { ell: 3, n: 5, alpha: 4, h1: 4 }).unwrap();
        assert_eq!(h.generators(), &[7, 39, 43, 47, 17]);
    }

    #[test]
    fn jn1_small_instance() {
        let h = family_jn1(&FamilyParams { ell: 2, n: 3, alpha: 3, h1: 0 }).unwrap();
        assert_eq!(h.generators(), &[4, 7, 5]);
    }

    #[test]
    fn jn1_divisibility_filter() {
        let r = family_jn1(&FamilyParams { ell: 3, n: 4, alpha: 1, h1: 0 });
        assert!(matches!(r, Err(Error::PreconditionFailed(_))));
    }

    #[test]
    fn families_match_theorem_branches() {
        use crate::groebner::Caps;
        use crate::structure::{verify_main_theorem, Branch};

        let h = family_j1(&FamilyParams { ell: 2, n: 3, alpha: 3, h1: 2 }).unwrap();
        let r = verify_main_theorem(&h, &Caps::default()).unwrap();
        assert_eq!(r.certificate().unwrap().branch, Branch::J1);

        let h = family_jn1(&FamilyParams { ell: 2, n: 4, alpha: 1, h1: 2 }).unwrap();
        let r = verify_main_theorem(&h, &Caps::default()).unwrap();
        assert_eq!(r.certificate().unwrap().branch, Branch::JN1);
    }
}
