//! Machine-readable reports.
//!
//! Every report is a JSON object `{"version": .., "kind": .., "data": ..}`
//! with fields in declaration order, so repeated runs are byte-identical.

use serde::{Deserialize, Serialize};

use crate::algebra::{
    commutativity_witness, implicativity_witness, induced_order, AxiomReport, BckAlgebra,
    CayleyAlgebra,
};
use crate::census::CensusReport;
use crate::code::BlockCode;
use crate::construct::RoundTripReport;
use crate::error::Result;
use crate::pipeline::{FamilyAlgebra, LiftResult};

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: u32,
    #[serde(flatten)]
    pub body: ReportBody,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "data", rename_all = "snake_case")]
pub enum ReportBody {
    Verify(VerifyReport),
    Encode(EncodeReport),
    Construct(ConstructReport),
    Lift(LiftReport),
    Codes(CodesReport),
    Census(CensusReport),
    Family(FamilyReport),
}

impl Report {
    pub fn new(body: ReportBody) -> Self {
        Report {
            version: REPORT_VERSION,
            body,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

/// Axioms plus, for BCK-algebras, the derived properties.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub order: usize,
    pub axioms: AxiomReport,
    pub commutative: Option<bool>,
    pub commutativity_witness: Option<(usize, usize)>,
    pub implicative: Option<bool>,
    pub implicativity_witness: Option<(usize, usize)>,
    /// `order_relation[x][y]` is `x ≤ y`.
    pub order_relation: Option<Vec<Vec<bool>>>,
}

impl VerifyReport {
    pub fn new(alg: &CayleyAlgebra) -> Result<Self> {
        let axioms = crate::algebra::check_axioms(alg);
        let mut report = VerifyReport {
            order: alg.order(),
            axioms,
            commutative: None,
            commutativity_witness: None,
            implicative: None,
            implicativity_witness: None,
            order_relation: None,
        };
        if report.axioms.is_bck {
            let bck = BckAlgebra::new(alg.clone())?;
            report.commutativity_witness = commutativity_witness(&bck);
            report.commutative = Some(report.commutativity_witness.is_none());
            report.implicativity_witness = implicativity_witness(&bck);
            report.implicative = Some(report.implicativity_witness.is_none());
            report.order_relation = Some(induced_order(&bck)?.to_rows());
        }
        Ok(report)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EncodeReport {
    pub labels: Vec<String>,
    pub values: Vec<usize>,
    /// Members of each equivalence class, ordered by representative.
    pub classes: Vec<Vec<usize>>,
    pub code: BlockCode,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructReport {
    pub table: Vec<Vec<usize>>,
    pub roundtrip: RoundTripReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftReport {
    pub source: BlockCode,
    pub embedded: Vec<String>,
    pub augmented: Vec<String>,
    pub prepended: bool,
    pub ambient_order: usize,
    /// `(original column, element)`, both 0-based.
    pub column_map: Vec<(usize, usize)>,
    pub lifted_code: BlockCode,
    pub contains_source: bool,
}

impl From<&LiftResult> for LiftReport {
    fn from(lift: &LiftResult) -> Self {
        LiftReport {
            source: lift.source.clone(),
            embedded: lift.embedded.row_strings(),
            augmented: lift.augmented.row_strings(),
            prepended: lift.prepended,
            ambient_order: lift.ambient_order(),
            column_map: lift.column_map(),
            lifted_code: lift.lifted_code.clone(),
            contains_source: lift.source.is_subset_of(&lift.lifted_code),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodesReport {
    pub order: usize,
    pub count: u64,
    pub codes: Option<Vec<BlockCode>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub n: usize,
    pub order: usize,
    pub members: Vec<BlockCode>,
    pub table: Vec<Vec<usize>>,
    pub code: BlockCode,
}

impl From<&FamilyAlgebra> for FamilyReport {
    fn from(family: &FamilyAlgebra) -> Self {
        FamilyReport {
            n: family.members[0].n(),
            order: family.algebra.order(),
            members: family.members.iter().map(|m| m.code().clone()).collect(),
            table: family.algebra.to_rows(),
            code: family.code.clone(),
        }
    }
}
