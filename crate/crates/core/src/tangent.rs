//! Cohen–Macaulayness of the tangent cone for certified semigroups:
//! closed-form branch criteria cross-checked against the Sally membership
//! criterion, evaluated through factorization orders.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{Factorization, Int, NumericalSemigroup};
use crate::structure::{Branch, DeterminantalCertificate};

/// Sufficient / iff conditions that bypass the main criterion. The first
/// two apply on the `j = n-1` branch only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shortcuts {
    /// Fires when `h1 >= ell^2 - ell - alpha` on the `j = n-1` branch;
    /// implies Cohen–Macaulay.
    pub h1_large: bool,
    /// Fires when `ell = 2` on the `j = n-1` branch; implies
    /// Cohen–Macaulay.
    pub ell2_jn1: bool,
    /// For `ell = 2` only: the full iff verdict — NOT Cohen–Macaulay
    /// exactly when `j = 1` and `h = b = a + alpha`.
    pub ell2_not_cm: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangentConeReport {
    pub branch: Branch,
    pub cm_formula: bool,
    pub cm_sally: bool,
    /// The compared quantities: `(h1 + 1, ell)` on the `j = 1` branch,
    /// `(p, ell)` otherwise.
    pub compared: (Int, Int),
    /// A maximal-length factorization of `(ell + 1) b - a` when the Sally
    /// criterion is non-vacuous.
    pub order_witness: Option<Factorization>,
    pub shortcuts: Shortcuts,
    pub agree: bool,
}

fn require_certified(cert: &DeterminantalCertificate) -> Result<()> {
    if cert.certified {
        Ok(())
    } else {
        Err(Error::Uncertified)
    }
}

/// The closed-form criterion: `j = 1` branch is Cohen–Macaulay iff
/// `h1 + 1 >= ell`, the `j = n-1` branch iff `p >= ell`; maximal
/// embedding dimension is always Cohen–Macaulay.
pub fn cm_by_formula(cert: &DeterminantalCertificate) -> Result<bool> {
    require_certified(cert)?;
    Ok(match cert.branch {
        Branch::J1 => cert.h1 + 1 >= cert.ell,
        Branch::JN1 => cert.p >= cert.ell,
        Branch::Med => true,
    })
}

/// The Sally criterion: Cohen–Macaulay iff `t^{(ell+1) b}` lies in
/// `t^a m^ell`, i.e. iff the element `(ell+1) b - a` has factorization
/// order at least `ell`. Returns a maximal-length factorization witness.
pub fn cm_by_sally(
    h: &NumericalSemigroup,
    cert: &DeterminantalCertificate,
) -> Result<(bool, Option<Factorization>)> {
    require_certified(cert)?;
    let Some(b) = cert.b else {
        // MED: ell = 1 and any positive element has order >= 1.
        return Ok((true, None));
    };
    let z = (cert.ell + 1)
        .checked_mul(b)
        .and_then(|v| v.checked_sub(cert.a))
        .ok_or(Error::Overflow)?;
    if !h.contains(z) {
        return Err(Error::NotInSemigroup(z));
    }
    let witness = h.max_order_witness(z);
    let order = witness.as_ref().map(|f| f.length).unwrap_or(0);
    Ok((order >= cert.ell, witness))
}

/// Evaluates the shortcut conditions; each fired shortcut must agree with
/// `cm_by_formula`.
pub fn cm_shortcuts(cert: &DeterminantalCertificate) -> Result<Shortcuts> {
    require_certified(cert)?;
    let threshold = cert.ell * cert.ell - cert.ell - cert.alpha;
    let h1_large = cert.branch == Branch::JN1 && cert.h1 >= threshold;
    let ell2_jn1 = cert.ell == 2 && cert.branch == Branch::JN1;
    let ell2_not_cm = if cert.ell == 2 {
        let h = cert.profile_h();
        Some(
            cert.branch == Branch::J1
                && cert.b == Some(h)
                && h == cert.a + cert.alpha,
        )
    } else {
        None
    };
    Ok(Shortcuts { h1_large, ell2_jn1, ell2_not_cm })
}

/// Assembles the full report; `agree` records whether the formula and the
/// Sally oracle reached the same verdict.
pub fn tangent_cone_report(
    h: &NumericalSemigroup,
    cert: &DeterminantalCertificate,
) -> Result<TangentConeReport> {
    let cm_formula = cm_by_formula(cert)?;
    let (cm_sally, order_witness) = cm_by_sally(h, cert)?;
    let shortcuts = cm_shortcuts(cert)?;
    let compared = match cert.branch {
        Branch::J1 => (cert.h1 + 1, cert.ell),
        Branch::JN1 | Branch::Med => (cert.p, cert.ell),
    };
    Ok(TangentConeReport {
        branch: cert.branch,
        cm_formula,
        cm_sally,
        compared,
        order_witness,
        shortcuts,
        agree: cm_formula == cm_sally,
    })
}
