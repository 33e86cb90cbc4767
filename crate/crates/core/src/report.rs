//! Machine-readable run records: one self-contained JSON object per
//! analyzed semigroup, versioned and losslessly round-trippable.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::groebner::Caps;
use crate::semigroup::{Int, NumericalSemigroup};
use crate::structure::{verify_main_theorem, MainTheoremReport};
use crate::tangent::{tangent_cone_report, TangentConeReport};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunRecord {
    pub schema: u32,
    pub generators: Vec<Int>,
    pub multiplicity: Int,
    pub frobenius: Int,
    pub genus: usize,
    pub pseudo_frobenius: Vec<Int>,
    pub apery: Vec<Int>,
    pub main_theorem: MainTheoremReport,
    pub tangent_cone: Option<TangentConeReport>,
    pub elapsed_ms: u64,
}

impl RunRecord {
    pub fn stretched(&self) -> bool {
        self.main_theorem.stretched.is_stretched()
    }
}

/// Runs the full pipeline on one semigroup. The tangent-cone report is
/// present exactly when a certificate was produced.
pub fn run_record(h: &NumericalSemigroup, caps: &Caps) -> Result<RunRecord> {
    let start = Instant::now();
    let main_theorem = verify_main_theorem(h, caps)?;
    let tangent_cone = match main_theorem.certificate() {
        Some(cert) => Some(tangent_cone_report(h, cert)?),
        None => None,
    };
    Ok(RunRecord {
        schema: SCHEMA_VERSION,
        generators: h.generators().to_vec(),
        multiplicity: h.multiplicity(),
        frobenius: h.frobenius(),
        genus: h.genus(),
        pseudo_frobenius: h.pseudo_frobenius().values,
        apery: h.apery().sorted(),
        main_theorem,
        tangent_cone,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(gens: &[Int]) -> RunRecord {
        let h = NumericalSemigroup::new(gens).unwrap();
        run_record(&h, &Caps::default()).unwrap()
    }

    #[test]
    fn json_round_trip() {
        for gens in [
            vec![6, 13, 40, 41],
            vec![7, 39, 43, 47, 17],
            vec![8, 9, 28, 29, 15],
            vec![6, 11, 13, 16, 20],
            vec![2, 3],
            vec![1],
        ] {
            let r = record(&gens);
            let s = serde_json::to_string(&r).unwrap();
            let back: RunRecord = serde_json::from_str(&s).unwrap();
            assert_eq!(back, r, "{gens:?}");
        }
    }

    #[test]
    fn tangent_present_iff_certified() {
        let r = record(&[6, 13, 40, 41]);
        assert!(r.tangent_cone.is_some());
        assert!(!r.tangent_cone.unwrap().cm_formula);
        let r = record(&[8, 9, 31, 37, 38]);
        assert!(r.tangent_cone.is_none());
    }

    #[test]
    fn invariant_fields() {
        let r = record(&[6, 13, 40, 41]);
        assert_eq!(r.schema, SCHEMA_VERSION);
        assert_eq!(r.apery, vec![0, 13, 26, 39, 40, 41]);
        assert_eq!(r.pseudo_frobenius, vec![33, 34, 35]);
        assert_eq!(r.frobenius, 35);
    }
}
