//! Shipped diagram equations over the standard generators.

use serde::{Deserialize, Serialize};

use super::eval::TangleEquation;
use super::parser::parse;
use crate::error::{Error, Result};

/// Multiplication of `B⋆H` drawn with `act`.
pub const SMASH_MULT: &str =
    "(id[B] * cm_H * id[B] * id[H]) ; (id[B] * id[H] * swap[H,B] * id[H]) ; (id[B] * act * id[H] * id[H]) ; (m_B * m_H)";

/// Comultiplication of `B⋆H` drawn with `coact`.
pub const SMASH_COMULT: &str =
    "(cm_B * cm_H) ; (id[B] * coact * id[H] * id[H]) ; (id[B] * id[H] * swap[B,H] * id[H]) ; (id[B] * m_H * id[B] * id[H])";

/// Antipode of `B⋆H`.
pub const SMASH_ANTIPODE: &str =
    "(coact * id[H]) ; (id[H] * swap[B,H]) ; (m_H * id[B]) ; (S_H * S_B) ; \
     (cm_H * id[B]) ; (id[H] * swap[H,B]) ; (act * id[H])";

const YD_FORMS: [&str; 3] = [
    "(cm_H * coact) ; (id[H] * swap[H,H] * id[B]) ; (m_H * act)",
    "(cm_H * id[B]) ; (swap[H,H] * id[B]) ; (id[H] * act) ; (id[H] * coact) ; (swap[H,H] * id[B]) ; (m_H * id[B])",
    "(cm_H * id[B]) ; (id[H] * swap[H,B]) ; (act * id[H]) ; (coact * id[H]) ; (id[H] * swap[B,H]) ; (m_H * id[B])",
];

/// `(B⊗H)⊗(B⊗H) → (B⊗H)⊗(B⊗H)` exchanging the two pairs.
const SWAP_PAIRS: &str =
    "(id[B] * swap[H,B] * id[H]) ; (swap[B,B] * swap[H,H]) ; (id[B] * swap[B,H] * id[H])";

fn equations() -> Vec<(String, String, String)> {
    let (m, d, s) = (SMASH_MULT, SMASH_COMULT, SMASH_ANTIPODE);
    let unit_counit = "(cu_B * cu_H) ; (u_B * u_H)";
    let mut out = vec![
        (
            "eq2:module-algebra".into(),
            "(id[H] * m_B) ; act".into(),
            "(cm_H * id[B] * id[B]) ; (id[H] * swap[H,B] * id[B]) ; (act * act) ; m_B".into(),
        ),
        (
            "eq3:module-coalgebra".into(),
            "act ; cm_B".into(),
            "(cm_H * cm_B) ; (id[H] * swap[H,B] * id[B]) ; (act * act)".into(),
        ),
        (
            "eq4:comodule-algebra".into(),
            "m_B ; coact".into(),
            "(coact * coact) ; (id[H] * swap[B,H] * id[B]) ; (m_H * m_B)".into(),
        ),
        (
            "eq5:comodule-coalgebra".into(),
            "coact ; (id[H] * cm_B)".into(),
            "cm_B ; (coact * coact) ; (id[H] * swap[B,H] * id[B]) ; (m_H * id[B] * id[B])".into(),
        ),
        (
            "bialgebra:H".into(),
            "m_H ; cm_H".into(),
            "(cm_H * cm_H) ; (id[H] * swap[H,H] * id[H]) ; (m_H * m_H)".into(),
        ),
        (
            "cond1:braided-bialgebra".into(),
            "m_B ; cm_B".into(),
            "(cm_B * cm_B) ; (id[B] * coact * id[B] * id[B]) ; (id[B] * id[H] * swap[B,B] * id[B]) ; \
             (id[B] * act * id[B] * id[B]) ; (m_B * m_B)"
                .into(),
        ),
    ];
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        out.push((
            format!("yd:{}={}", i + 1, j + 1),
            YD_FORMS[i].into(),
            YD_FORMS[j].into(),
        ));
    }
    out.extend([
        ("composite:m".into(), m.into(), "m_BH".into()),
        ("composite:cm".into(), d.into(), "cm_BH".into()),
        ("composite:S".into(), s.into(), "S_BH".into()),
        ("fig1:coassoc".into(), format!("({d}) ; (({d}) * id[B] * id[H])"), format!("({d}) ; (id[B] * id[H] * ({d}))")),
        ("fig2:bialgebra".into(), format!("({m}) ; ({d})"), format!("(({d}) * ({d})) ; (id[B] * id[H] * ({SWAP_PAIRS}) * id[B] * id[H]) ; (({m}) * ({m}))")),
        ("fig3:antipode-left".into(), format!("({d}) ; (({s}) * id[B] * id[H]) ; ({m})"), unit_counit.into()),
        ("fig3:antipode-right".into(), format!("({d}) ; (id[B] * id[H] * ({s})) ; ({m})"), unit_counit.into()),
    ]);
    out
}

/// The shipped equations, in a fixed order.
pub fn figure_corpus() -> Vec<TangleEquation> {
    equations()
        .into_iter()
        .map(|(label, lhs, rhs)| {
            TangleEquation::new(
                &label,
                parse(&lhs).expect("corpus lhs parses"),
                parse(&rhs).expect("corpus rhs parses"),
            )
        })
        .collect()
}

/// One equation as stored on disk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquationRecord {
    pub label: String,
    pub lhs: String,
    pub rhs: String,
}

pub fn corpus_to_json(eqs: &[TangleEquation]) -> String {
    let records: Vec<EquationRecord> = eqs
        .iter()
        .map(|e| EquationRecord {
            label: e.label.clone(),
            lhs: e.lhs.to_string(),
            rhs: e.rhs.to_string(),
        })
        .collect();
    serde_json::to_string_pretty(&records).expect("records serialize")
}

pub fn corpus_from_json(text: &str) -> Result<Vec<TangleEquation>> {
    let records: Vec<EquationRecord> =
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    records
        .iter()
        .map(|r| {
            Ok(TangleEquation::new(
                &r.label,
                parse(&r.lhs)?,
                parse(&r.rhs)?,
            ))
        })
        .collect()
}
