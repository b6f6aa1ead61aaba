use serde::{Deserialize, Serialize};

use crate::modp::{BadWitness, WildWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanKind {
    Bad,
    VeryBad,
    Wild,
}

impl std::fmt::Display for ScanKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ScanKind::Bad => "bad",
            ScanKind::VeryBad => "very-bad",
            ScanKind::Wild => "wild",
        })
    }
}

/// Classifier parameters; only those used by the scan kind are set.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Parameters {
    pub delta: Option<f64>,
    pub epsilon: Option<f64>,
    pub c: Option<f64>,
}

/// `None` marks a property that this scan did not classify.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub delta_bad: Option<bool>,
    pub very_bad: Option<bool>,
    pub c_wild: Option<bool>,
    pub vacuous_order: bool,
    pub clamped_threshold: bool,
}

/// One line of a census file.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PrimeRecord {
    pub p: u64,
    pub kind: ScanKind,
    pub flags: Flags,
    pub parameters: Parameters,
    pub order_floor: u64,
    pub bad_witness: Option<BadWitness>,
    pub wild_witness: Option<WildWitness>,
    pub wall_time_ms: f64,
}

/// Timing is not part of a record's identity.
impl PartialEq for PrimeRecord {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
            && self.kind == other.kind
            && self.flags == other.flags
            && self.parameters == other.parameters
            && self.order_floor == other.order_floor
            && self.bad_witness == other.bad_witness
            && self.wild_witness == other.wild_witness
    }
}

impl PrimeRecord {
    /// The flag for the scanned property.
    pub fn flagged(&self) -> bool {
        match self.kind {
            ScanKind::Bad => self.flags.delta_bad,
            ScanKind::VeryBad => self.flags.very_bad,
            ScanKind::Wild => self.flags.c_wild,
        }
        .unwrap_or(false)
    }

    /// Flag set exactly when a witness is stored; vacuous records carry neither.
    pub fn is_consistent(&self) -> bool {
        let witness = match self.kind {
            ScanKind::Bad | ScanKind::VeryBad => self.bad_witness.is_some() && self.wild_witness.is_none(),
            ScanKind::Wild => self.wild_witness.is_some() && self.bad_witness.is_none(),
        };
        let none = self.bad_witness.is_none() && self.wild_witness.is_none();
        if self.flags.vacuous_order {
            !self.flagged() && none
        } else {
            self.flagged() == witness && (witness || none)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityPoint {
    pub x: u64,
    pub prime_count: usize,
    pub count: usize,
    pub density: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusSummary {
    pub kind: ScanKind,
    #[serde(rename = "X")]
    pub x: u64,
    pub parameters: Parameters,
    pub prime_count: usize,
    pub bad_count: usize,
    pub very_bad_count: usize,
    pub wild_count: usize,
    pub vacuous_count: usize,
    pub clamped_count: usize,
    /// Flagged density of the scanned property at `X/4`, `X/2` and `X`.
    pub densities: Vec<DensityPoint>,
}

impl CensusSummary {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serializes")
    }
}
