//! Machine-readable check reports shared by every checker and the CLI.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::LinMap;

/// Fixed enumeration of the axioms the checkers decide.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum AxiomId {
    AlgAssoc,
    AlgUnitLeft,
    AlgUnitRight,
    CoalgCoassoc,
    CoalgCounitLeft,
    CoalgCounitRight,
    BialgComultMult,
    BialgCounitMult,
    BialgComultUnit,
    BialgCounitUnit,
    HopfAntipodeLeft,
    HopfAntipodeRight,
    ModAssoc,
    ModUnit,
    ComodCoassoc,
    ComodCounit,
    Eq2,
    Eq2Unit,
    Eq3,
    Eq3Counit,
    Eq4,
    Eq4Unit,
    Eq5,
    Eq5Counit,
    Yd,
    Cond1,
    BrCounitMult,
    BrCounitUnit,
    BrComultUnit,
    BrAntipodeLeft,
    BrAntipodeRight,
    QtIntertwine,
    QtComultLeft,
    QtComultRight,
    QtCounitLeft,
    QtCounitRight,
    TangleEq,
}

impl AxiomId {
    pub fn as_str(self) -> &'static str {
        use AxiomId::*;
        match self {
            AlgAssoc => "ALG_ASSOC",
            AlgUnitLeft => "ALG_UNIT_LEFT",
            AlgUnitRight => "ALG_UNIT_RIGHT",
            CoalgCoassoc => "COALG_COASSOC",
            CoalgCounitLeft => "COALG_COUNIT_LEFT",
            CoalgCounitRight => "COALG_COUNIT_RIGHT",
            BialgComultMult => "BIALG_COMULT_MULT",
            BialgCounitMult => "BIALG_COUNIT_MULT",
            BialgComultUnit => "BIALG_COMULT_UNIT",
            BialgCounitUnit => "BIALG_COUNIT_UNIT",
            HopfAntipodeLeft => "HOPF_ANTIPODE_LEFT",
            HopfAntipodeRight => "HOPF_ANTIPODE_RIGHT",
            ModAssoc => "MOD_ASSOC",
            ModUnit => "MOD_UNIT",
            ComodCoassoc => "COMOD_COASSOC",
            ComodCounit => "COMOD_COUNIT",
            Eq2 => "EQ2",
            Eq2Unit => "EQ2_UNIT",
            Eq3 => "EQ3",
            Eq3Counit => "EQ3_COUNIT",
            Eq4 => "EQ4",
            Eq4Unit => "EQ4_UNIT",
            Eq5 => "EQ5",
            Eq5Counit => "EQ5_COUNIT",
            Yd => "YD",
            Cond1 => "COND1",
            BrCounitMult => "BR_COUNIT_MULT",
            BrCounitUnit => "BR_COUNIT_UNIT",
            BrComultUnit => "BR_COMULT_UNIT",
            BrAntipodeLeft => "BR_ANTIPODE_LEFT",
            BrAntipodeRight => "BR_ANTIPODE_RIGHT",
            QtIntertwine => "QT_INTERTWINE",
            QtComultLeft => "QT_COMULT_LEFT",
            QtComultRight => "QT_COMULT_RIGHT",
            QtCounitLeft => "QT_COUNIT_LEFT",
            QtCounitRight => "QT_COUNIT_RIGHT",
            TangleEq => "TANGLE_EQ",
        }
    }

    /// Coarse grouping used to tag negative fixtures, e.g. `BR_COUNIT`
    /// covers "ε_B is an algebra map" and "Δ1_B = 1_B ⊗ 1_B".
    pub fn family(self) -> &'static str {
        use AxiomId::*;
        match self {
            AlgAssoc | AlgUnitLeft | AlgUnitRight => "ALG",
            CoalgCoassoc | CoalgCounitLeft | CoalgCounitRight => "COALG",
            BialgComultMult | BialgCounitMult | BialgComultUnit | BialgCounitUnit => "BIALG",
            HopfAntipodeLeft | HopfAntipodeRight => "HOPF",
            ModAssoc | ModUnit => "MOD",
            ComodCoassoc | ComodCounit => "COMOD",
            Eq2 | Eq2Unit => "EQ2",
            Eq3 | Eq3Counit => "EQ3",
            Eq4 | Eq4Unit => "EQ4",
            Eq5 | Eq5Counit => "EQ5",
            Yd => "YD",
            Cond1 => "COND1",
            BrCounitMult | BrCounitUnit | BrComultUnit => "BR_COUNIT",
            BrAntipodeLeft | BrAntipodeRight => "BR_ANTIPODE",
            QtIntertwine | QtComultLeft | QtComultRight | QtCounitLeft | QtCounitRight => "QT",
            TangleEq => "TANGLE",
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The first differing matrix entry of a failed identity `lhs = rhs`.
///
/// `indices` is the input multi-index followed by the output multi-index;
/// `basis_names` names the same positions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub basis_names: Vec<String>,
    pub lhs_entry: String,
    pub rhs_entry: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomResult {
    pub axiom_id: AxiomId,
    /// Which object the axiom was checked on (`H`, `B`, `B⋆H`, a diagram label, …).
    pub subject: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

impl AxiomResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Decides `lhs = rhs` exactly, recording the first differing entry.
    pub fn from_maps(axiom_id: AxiomId, subject: &str, lhs: &LinMap, rhs: &LinMap) -> Result<Self> {
        lhs.field().ensure_same(rhs.field())?;
        if lhs.dom().dim() != rhs.dom().dim() || lhs.cod().dim() != rhs.cod().dim() {
            return Err(Error::SignatureMismatch {
                expected: format!("{} → {}", lhs.dom(), lhs.cod()),
                found: format!("{} → {}", rhs.dom(), rhs.cod()),
            });
        }
        let witness = lhs.first_difference(rhs).map(|(row, col)| {
            let mut indices = lhs.dom().decode(col);
            indices.extend(lhs.cod().decode(row));
            let mut basis_names = lhs.dom().labels(col);
            basis_names.extend(lhs.cod().labels(row));
            Witness {
                indices,
                basis_names,
                lhs_entry: lhs.get(row, col).to_string(),
                rhs_entry: rhs.get(row, col).to_string(),
            }
        });
        let status = if witness.is_some() {
            Status::Fail
        } else {
            Status::Pass
        };
        Ok(AxiomResult {
            axiom_id,
            subject: subject.to_string(),
            status,
            witness,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub hopf_ready: Option<bool>,
    pub results: Vec<AxiomResult>,
}

impl Default for CheckReport {
    fn default() -> Self {
        CheckReport {
            ok: true,
            hopf_ready: None,
            results: Vec::new(),
        }
    }
}

impl CheckReport {
    pub fn new(results: Vec<AxiomResult>) -> Self {
        let ok = results.iter().all(AxiomResult::passed);
        CheckReport {
            ok,
            hopf_ready: None,
            results,
        }
    }

    pub fn push(&mut self, r: AxiomResult) {
        self.ok = self.ok && r.passed();
        self.results.push(r);
    }

    pub fn extend(&mut self, other: CheckReport) {
        for r in other.results {
            self.push(r);
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomResult> {
        self.results.iter().filter(|r| !r.passed())
    }

    pub fn failed_ids(&self) -> Vec<String> {
        self.failures()
            .map(|r| format!("{}:{}", r.subject, r.axiom_id))
            .collect()
    }

    pub fn has_failure(&self, id: AxiomId) -> bool {
        self.failures().any(|r| r.axiom_id == id)
    }

    pub fn has_family_failure(&self, family: &str) -> bool {
        self.failures().any(|r| r.axiom_id.family() == family)
    }

    pub fn get(&self, id: AxiomId, subject: &str) -> Option<&AxiomResult> {
        self.results
            .iter()
            .find(|r| r.axiom_id == id && r.subject == subject)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable rendering; witnesses only when `witnesses` is set.
    pub fn render_text(&self, witnesses: bool) -> String {
        let mut out = String::new();
        for r in &self.results {
            let status = if r.passed() { "pass" } else { "FAIL" };
            out.push_str(&format!("{status:<5} {:<8} {}\n", r.subject, r.axiom_id));
            if let (true, Some(w)) = (witnesses, &r.witness) {
                out.push_str(&format!(
                    "      at [{}]: lhs {} ≠ rhs {}\n",
                    w.basis_names.join(", "),
                    w.lhs_entry,
                    w.rhs_entry
                ));
            }
        }
        out.push_str(if self.ok { "ok\n" } else { "FAILED\n" });
        if let Some(ready) = self.hopf_ready {
            out.push_str(&format!("hopf_ready: {ready}\n"));
        }
        out
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text(true))
    }
}
