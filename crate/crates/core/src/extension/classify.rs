//! Case analysis of an extension of simples against the stated classification.
//!
//! i: `V` infinite, stated always split.
//! ii: `U` shift module, `V = k_lambda`, stated nonsplit iff `δ != 0`.
//! iii: both one-dimensional, stated nonsplit iff `δ != 0` and `lambda = lambda'`.

use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use super::{iso_test, split_test, ExtSpec, Intertwiner, IsoResult, SplitResult};
use crate::error::Result;
use crate::module::{ModVector, SimpleDesc};
use crate::scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Case {
    #[serde(rename = "i")]
    I,
    #[serde(rename = "ii")]
    II,
    #[serde(rename = "iii")]
    III,
}

impl Case {
    pub fn of(spec: &ExtSpec) -> Case {
        match (spec.u().is_finite(), spec.v().is_finite()) {
            (_, false) => Case::I,
            (false, true) => Case::II,
            (true, true) => Case::III,
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::I => "i",
            Case::II => "ii",
            Case::III => "iii",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Comparison {
    Agrees,
    Discrepancy,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub case: Case,
    /// Verdict the stated classification predicts.
    pub paper_claim_split: bool,
    pub oracle: SplitResult,
    pub comparison: Comparison,
    /// Normal form in the isomorphism class.
    pub representative: ExtSpec,
    /// `spec -> representative`, where the search applies.
    pub intertwiner: Option<Intertwiner>,
}

fn verdict(split: bool) -> &'static str {
    if split {
        "split"
    } else {
        "nonsplit"
    }
}

impl Classification {
    pub fn to_json(&self) -> Value {
        json!({
            "case": self.case,
            "paper_claim": verdict(self.paper_claim_split),
            "oracle_verdict": self.oracle.verdict(),
            "oracle": self.oracle.verdict(),
            "comparison": self.comparison,
            "certificate": {
                "split_test": self.oracle.to_json(),
                "representative": self.representative,
                "intertwiner": self.intertwiner.as_ref().map(Intertwiner::to_json),
            },
        })
    }
}

pub fn classify(spec: &ExtSpec) -> Result<Classification> {
    let case = Case::of(spec);
    let oracle = split_test(spec)?;
    let delta_zero = spec.delta().is_zero();
    let paper_claim_split = match (case, spec.u(), spec.v()) {
        (Case::I, _, _) => true,
        (Case::II, _, _) => delta_zero,
        (_, u, v) => delta_zero || u.lambda() != v.lambda(),
    };
    let comparison = if paper_claim_split == oracle.is_split() {
        Comparison::Agrees
    } else {
        Comparison::Discrepancy
    };
    let representative = match (oracle.is_split(), spec.v()) {
        (false, SimpleDesc::Fin(lambda)) => {
            let image = match spec.u() {
                SimpleDesc::InfShift => ModVector::shift_basis(0),
                SimpleDesc::Fin(_) => ModVector::Fin(scalar::one()),
            };
            ExtSpec::onto_fin(spec.u().clone(), lambda.clone(), image)?
        }
        _ => ExtSpec::split_sum(spec.u().clone(), spec.v().clone()),
    };
    let intertwiner = match case {
        Case::I => None,
        Case::II | Case::III => match iso_test(spec, &representative)? {
            IsoResult::Iso(f) => Some(f),
            IsoResult::NoIso(_) => None,
        },
    };
    Ok(Classification {
        case,
        paper_claim_split,
        oracle,
        comparison,
        representative,
        intertwiner,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::LinMap;
    use crate::scalar::int;

    fn e(n: usize) -> ModVector {
        ModVector::shift_basis(n)
    }

    #[test]
    fn three_cases() {
        let v = SimpleDesc::InfShift;
        let u = SimpleDesc::fin(int(1)).unwrap();
        let dx = LinMap::new(v.clone(), u.clone(), [(2, ModVector::Fin(int(4)))]).unwrap();
        let c = classify(&ExtSpec::completed(u.clone(), v, dx, None).unwrap()).unwrap();
        assert_eq!(
            (c.case, c.oracle.is_split(), c.comparison),
            (Case::I, true, Comparison::Agrees)
        );
        assert_eq!(c.to_json()["oracle"], "split");

        let s = ExtSpec::onto_fin(SimpleDesc::InfShift, int(1), e(0)).unwrap();
        let c = classify(&s).unwrap();
        assert_eq!(
            (c.case, c.oracle.is_split(), c.comparison),
            (Case::II, false, Comparison::Agrees)
        );
        assert_eq!(c.intertwiner, Some(Intertwiner::identity(&s)));

        let c = classify(&ExtSpec::split_sum(u.clone(), u)).unwrap();
        assert_eq!(
            (c.case, c.oracle.is_split(), c.comparison),
            (Case::III, true, Comparison::Agrees)
        );
    }

    #[test]
    fn coboundary_probe_disagrees() {
        let s = ExtSpec::onto_fin(SimpleDesc::InfShift, int(1), e(1).add(&e(0).neg()).unwrap())
            .unwrap();
        let c = classify(&s).unwrap();
        assert!(c.oracle.is_split());
        assert_eq!(c.comparison, Comparison::Discrepancy);
        assert!(c
            .intertwiner
            .unwrap()
            .verify(&s, &c.representative)
            .unwrap());
    }

    #[test]
    fn nonsplit_maps_to_normal_form() {
        let s = ExtSpec::onto_fin(SimpleDesc::InfShift, int(2), e(3).scale(&int(5))).unwrap();
        let c = classify(&s).unwrap();
        assert!(!c.oracle.is_split());
        assert!(c
            .intertwiner
            .unwrap()
            .verify(&s, &c.representative)
            .unwrap());
    }
}
