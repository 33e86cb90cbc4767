//! Stretchedness of the Artinian quotient by the multiplicity, decided
//! from the shape of the Apéry set, with an independent Hilbert-function
//! oracle, plus detection of arithmetic pseudo-Frobenius profiles.

use serde::{Deserialize, Serialize};

use crate::semigroup::{Int, NumericalSemigroup};

/// Witness for a stretched quotient, read off the Apéry set.
///
/// `ell = a1 - n + 1`. For `ell = 1` (maximal embedding dimension) the
/// Apéry set is exactly `{0, a2, ..., an}` and no index is recorded.
/// For `ell = 2` the single extra element is `a_lambda + a_mu`; for
/// `ell >= 3` the extras are `2 a_lambda, ..., ell a_lambda`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StretchedProfile {
    pub ell: Int,
    /// 0-based index into the generator list, user order.
    pub lambda_index: Option<usize>,
    /// Second index for the `ell = 2` mixed case.
    pub mu_index: Option<usize>,
}

/// Outcome of the Apéry-shape test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum StretchedShape {
    Stretched(StretchedProfile),
    /// The Apéry element that fits none of the admissible shapes.
    NotStretched { offending: Int },
}

impl StretchedShape {
    pub fn is_stretched(&self) -> bool {
        matches!(self, StretchedShape::Stretched(_))
    }

    pub fn profile(&self) -> Option<&StretchedProfile> {
        match self {
            StretchedShape::Stretched(p) => Some(p),
            StretchedShape::NotStretched { .. } => None,
        }
    }
}

/// An arithmetic pseudo-Frobenius profile: `PF(H) = {h + alpha, ...,
/// h + (n-1) alpha}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArithmeticPfProfile {
    pub h: Int,
    pub alpha: Int,
    /// `n - 1`, the number of pseudo-Frobenius values.
    pub length: usize,
}

/// Matches the Apéry set against the admissible stretched shapes.
pub fn stretched_profile(h: &NumericalSemigroup) -> StretchedShape {
    let n = h.embedding_dimension() as Int;
    let ell = h.multiplicity() - n + 1;
    // The non-multiplicity generators always lie in the Apéry set, so the
    // extras are exactly the other ell - 1 representatives.
    let mut extras: Vec<Int> = h
        .apery()
        .representatives
        .iter()
        .copied()
        .filter(|&w| w != 0 && !h.generators().contains(&w))
        .collect();
    extras.sort_unstable();
    debug_assert_eq!(extras.len() as Int, ell - 1);

    if ell == 1 {
        return StretchedShape::Stretched(StretchedProfile {
            ell,
            lambda_index: None,
            mu_index: None,
        });
    }

    if ell == 2 {
        let extra = extras[0];
        let gens = h.generators();
        for i in 0..gens.len() {
            for j in i..gens.len() {
                if gens[i] == h.multiplicity() || gens[j] == h.multiplicity() {
                    continue;
                }
                if gens[i] + gens[j] == extra {
                    return StretchedShape::Stretched(StretchedProfile {
                        ell,
                        lambda_index: Some(i),
                        mu_index: Some(j),
                    });
                }
            }
        }
        return StretchedShape::NotStretched { offending: extra };
    }

    // ell >= 3: extras must be 2 a_lambda, ..., ell a_lambda.
    for (i, &g) in h.generators().iter().enumerate() {
        if g == h.multiplicity() {
            continue;
        }
        let expected: Vec<Int> = (2..=ell).map(|k| k * g).collect();
        if extras == expected {
            return StretchedShape::Stretched(StretchedProfile {
                ell,
                lambda_index: Some(i),
                mu_index: None,
            });
        }
    }
    // Report the first extra that is not the double of a generator, or
    // failing that the first that breaks the power chain.
    let offending = extras
        .iter()
        .copied()
        .find(|&e| !h.generators().iter().any(|&g| e % g == 0))
        .unwrap_or_else(|| extras[extras.len() - 1]);
    StretchedShape::NotStretched { offending }
}

/// Independent stretchedness check via the Hilbert function of the
/// quotient: counts Apéry elements of factorization order exactly 2 and
/// requires at most one.
///
/// Apéry elements never use the multiplicity in a factorization, so the
/// order inside the quotient equals the order in the semigroup.
pub fn stretched_oracle(h: &NumericalSemigroup) -> bool {
    let order2 = h
        .apery()
        .representatives
        .iter()
        .filter(|&&w| h.max_order(w) == Some(2))
        .count();
    order2 <= 1
}

/// Detects `PF(H) = {h + alpha, ..., h + (n-1) alpha}` with `alpha > 0`
/// and `h >= 0`. Returns `None` for embedding dimension at most 2, where
/// a length-1 profile would be ambiguous.
pub fn arithmetic_pf_profile(h: &NumericalSemigroup) -> Option<ArithmeticPfProfile> {
    let n = h.embedding_dimension();
    if n < 3 {
        return None;
    }
    let pf = h.pseudo_frobenius().values;
    if pf.len() != n - 1 {
        return None;
    }
    let alpha = pf[1] - pf[0];
    if alpha <= 0 {
        return None;
    }
    if !pf.windows(2).all(|w| w[1] - w[0] == alpha) {
        return None;
    }
    let base = pf[0] - alpha;
    if base < 0 {
        return None;
    }
    Some(ArithmeticPfProfile {
        h: base,
        alpha,
        length: n - 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::NumericalSemigroup;

    fn sg(gens: &[Int]) -> NumericalSemigroup {
        NumericalSemigroup::new(gens).unwrap()
    }

    #[test]
    fn stretched_ell3() {
        let shape = stretched_profile(&sg(&[6, 13, 40, 41]));
        assert_eq!(
            shape,
            StretchedShape::Stretched(StretchedProfile {
                ell: 3,
                lambda_index: Some(1),
                mu_index: None,
            })
        );
    }

    #[test]
    fn stretched_ell2_mixed() {
        // Extra Apéry element 27 = 11 + 16.
        let shape = stretched_profile(&sg(&[6, 11, 13, 16, 20]));
        assert_eq!(
            shape,
            StretchedShape::Stretched(StretchedProfile {
                ell: 2,
                lambda_index: Some(1),
                mu_index: Some(3),
            })
        );
    }

    #[test]
    fn not_stretched_examples() {
        let shape = stretched_profile(&sg(&[8, 9, 28, 29, 15]));
        assert!(!shape.is_stretched());
        let shape = stretched_profile(&sg(&[6, 7, 11, 15]));
        assert_eq!(shape, StretchedShape::NotStretched { offending: 22 });
    }

    #[test]
    fn stretched_ell4() {
        assert!(stretched_profile(&sg(&[8, 9, 31, 37, 38])).is_stretched());
    }

    #[test]
    fn med_is_stretched() {
        let shape = stretched_profile(&sg(&[3, 4, 5]));
        assert_eq!(shape.profile().unwrap().ell, 1);
    }

    #[test]
    fn oracle_examples() {
        assert!(stretched_oracle(&sg(&[6, 13, 40, 41])));
        assert!(!stretched_oracle(&sg(&[8, 9, 28, 29, 15])));
        assert!(stretched_oracle(&sg(&[2, 3])));
    }

    #[test]
    fn oracle_agrees_with_shape_on_examples() {
        for gens in [
            vec![6, 13, 40, 41],
            vec![7, 39, 43, 47, 17],
            vec![6, 11, 13, 16, 20],
            vec![8, 9, 31, 37, 38],
            vec![8, 9, 28, 29, 15],
            vec![6, 7, 11, 15],
            vec![3, 4, 5],
            vec![2, 3],
        ] {
            let h = sg(&gens);
            assert_eq!(
                stretched_profile(&h).is_stretched(),
                stretched_oracle(&h),
                "{gens:?}"
            );
        }
    }

    #[test]
    fn arithmetic_pf_examples() {
        assert_eq!(
            arithmetic_pf_profile(&sg(&[6, 13, 40, 41])),
            Some(ArithmeticPfProfile { h: 32, alpha: 1, length: 3 })
        );
        assert_eq!(
            arithmetic_pf_profile(&sg(&[7, 39, 43, 47, 17])),
            Some(ArithmeticPfProfile { h: 28, alpha: 4, length: 4 })
        );
        // PF = {7, 14, 21} has length 3 != 4.
        assert_eq!(arithmetic_pf_profile(&sg(&[6, 11, 13, 16, 20])), None);
        // PF = {23, 28, 29, 30} is not arithmetic.
        assert_eq!(arithmetic_pf_profile(&sg(&[8, 9, 31, 37, 38])), None);
        // Length-1 profiles are ambiguous.
        assert_eq!(arithmetic_pf_profile(&sg(&[2, 3])), None);
    }

    #[test]
    fn arithmetic_pf_consequences() {
        for gens in [vec![6, 13, 40, 41], vec![7, 39, 43, 47, 17], vec![3, 4, 5]] {
            let h = sg(&gens);
            let p = arithmetic_pf_profile(&h).unwrap();
            assert!(h.contains(p.h));
            assert!(!h.contains(p.alpha));
            assert_eq!(p.h + (p.length as Int) * p.alpha, h.frobenius());
        }
    }
}
