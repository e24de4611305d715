//! The machine-readable record emitted by every subcommand, one JSON object
//! per result (JSON-lines for `table`). Absent fields are omitted; integer
//! fields use arbitrary-precision JSON numbers so nothing is truncated.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Number;

use cyclotrig::trig::{Classification, TrigFunc};
use cyclotrig::{Fraction, NormalizedAngle, Surd};

pub fn bigint_number(x: &BigInt) -> Number {
    Number::from_str(&x.to_string()).expect("integer literal")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurdRecord {
    pub p: Number,
    pub q: Number,
    pub r: Number,
    #[serde(rename = "D")]
    pub d: Number,
}

impl From<&Surd> for SurdRecord {
    fn from(surd: &Surd) -> Self {
        SurdRecord {
            p: bigint_number(surd.p()),
            q: bigint_number(surd.q()),
            r: bigint_number(surd.r()),
            d: bigint_number(surd.radicand()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct ReportRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub func: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<Number>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<Number>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub surd: Option<SurdRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minpoly: Option<Vec<Number>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub preimages: Option<Vec<u64>>,
}

impl ReportRecord {
    pub fn with_angle(mut self, func: TrigFunc, angle: &NormalizedAngle) -> Self {
        self.func = Some(func.to_string());
        self.a = Some(bigint_number(angle.t().numer()));
        self.b = Some(bigint_number(angle.t().denom()));
        self
    }

    pub fn with_classification(mut self, classification: &Classification) -> Self {
        match classification {
            Classification::Rational(value) => {
                self.kind = Some("rational".into());
                self.value = Some(value.to_string());
            }
            Classification::Quadratic(surd) => {
                self.kind = Some("quadratic".into());
                self.surd = Some(surd.into());
            }
            Classification::Algebraic { degree, minpoly } => {
                self.kind = Some("algebraic".into());
                self.degree = Some(*degree);
                self.minpoly = Some(minpoly.coeffs().iter().map(bigint_number).collect());
            }
            Classification::Pole => {
                self.kind = Some("pole".into());
            }
        }
        self
    }

    pub fn with_value(mut self, value: &Fraction) -> Self {
        self.value = Some(value.to_string());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}
