//! Actions and coactions of `H` on `B`, and every hypothesis of the
//! biproduct theorem as an exact check.
//!
//! Each identity is assembled from primitive maps (`m`, `Δ`, `α`, `ρ`, flips)
//! wired the same way as the corresponding string diagram; no index loops.

use crate::error::{Error, Result};
use crate::exactla::{FieldSpec, LinMap, SpaceSig};
use crate::report::{AxiomId, AxiomResult, CheckReport};
use crate::structures::{self, subject_of, BialgebraData, HopfData};

fn expect(what: &str, found: &SpaceSig, expected: &SpaceSig) -> Result<()> {
    if found.compatible(expected) {
        Ok(())
    } else {
        Err(Error::SignatureMismatch {
            expected: format!("{what}: {expected}"),
            found: found.to_string(),
        })
    }
}

/// A left action `α: H ⊗ B → B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionData {
    h: BialgebraData,
    b: SpaceSig,
    action: LinMap,
}

impl ActionData {
    pub fn new(h: BialgebraData, b: SpaceSig, action: LinMap) -> Result<Self> {
        h.field().ensure_same(action.field())?;
        expect("action domain", action.dom(), &h.space().concat(&b))?;
        expect("action codomain", action.cod(), &b)?;
        Ok(ActionData { h, b, action })
    }

    pub fn h(&self) -> &BialgebraData {
        &self.h
    }

    pub fn b_space(&self) -> &SpaceSig {
        &self.b
    }

    pub fn action(&self) -> &LinMap {
        &self.action
    }
}

/// A left coaction `ρ: B → H ⊗ B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoactionData {
    h: BialgebraData,
    b: SpaceSig,
    coaction: LinMap,
}

impl CoactionData {
    pub fn new(h: BialgebraData, b: SpaceSig, coaction: LinMap) -> Result<Self> {
        h.field().ensure_same(coaction.field())?;
        expect("coaction domain", coaction.dom(), &b)?;
        expect("coaction codomain", coaction.cod(), &h.space().concat(&b))?;
        Ok(CoactionData { h, b, coaction })
    }

    pub fn h(&self) -> &BialgebraData {
        &self.h
    }

    pub fn b_space(&self) -> &SpaceSig {
        &self.b
    }

    pub fn coaction(&self) -> &LinMap {
        &self.coaction
    }
}

/// Everything the biproduct theorem quantifies over: `B` with its braided
/// comultiplication, `H`, the action and the coaction. Antipodes are optional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidedHopfData {
    b: BialgebraData,
    b_antipode: Option<LinMap>,
    h: BialgebraData,
    h_antipode: Option<LinMap>,
    action: LinMap,
    coaction: LinMap,
}

impl BraidedHopfData {
    pub fn new(
        b: BialgebraData,
        b_antipode: Option<LinMap>,
        h: BialgebraData,
        h_antipode: Option<LinMap>,
        action: LinMap,
        coaction: LinMap,
    ) -> Result<Self> {
        b.field().ensure_same(h.field())?;
        if let Some(s) = &b_antipode {
            HopfData::new(b.clone(), s.clone())?;
        }
        if let Some(s) = &h_antipode {
            HopfData::new(h.clone(), s.clone())?;
        }
        ActionData::new(h.clone(), b.space().clone(), action.clone())?;
        CoactionData::new(h.clone(), b.space().clone(), coaction.clone())?;
        Ok(BraidedHopfData {
            b,
            b_antipode,
            h,
            h_antipode,
            action,
            coaction,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.b.field()
    }

    pub fn b(&self) -> &BialgebraData {
        &self.b
    }

    pub fn h(&self) -> &BialgebraData {
        &self.h
    }

    pub fn b_antipode(&self) -> Option<&LinMap> {
        self.b_antipode.as_ref()
    }

    pub fn h_antipode(&self) -> Option<&LinMap> {
        self.h_antipode.as_ref()
    }

    pub fn action(&self) -> &LinMap {
        &self.action
    }

    pub fn coaction(&self) -> &LinMap {
        &self.coaction
    }

    pub fn action_data(&self) -> ActionData {
        ActionData {
            h: self.h.clone(),
            b: self.b.space().clone(),
            action: self.action.clone(),
        }
    }

    pub fn coaction_data(&self) -> CoactionData {
        CoactionData {
            h: self.h.clone(),
            b: self.b.space().clone(),
            coaction: self.coaction.clone(),
        }
    }

    pub fn h_hopf(&self) -> Option<HopfData> {
        self.h_antipode
            .as_ref()
            .map(|s| HopfData::new(self.h.clone(), s.clone()).expect("validated at construction"))
    }

    pub fn with_b(&self, b: BialgebraData, b_antipode: Option<LinMap>) -> Result<Self> {
        BraidedHopfData::new(
            b,
            b_antipode,
            self.h.clone(),
            self.h_antipode.clone(),
            self.action.clone(),
            self.coaction.clone(),
        )
    }

    pub fn with_h(&self, h: BialgebraData, h_antipode: Option<LinMap>) -> Result<Self> {
        BraidedHopfData::new(
            self.b.clone(),
            self.b_antipode.clone(),
            h,
            h_antipode,
            self.action.clone(),
            self.coaction.clone(),
        )
    }

    pub fn with_action(&self, action: LinMap) -> Result<Self> {
        BraidedHopfData::new(
            self.b.clone(),
            self.b_antipode.clone(),
            self.h.clone(),
            self.h_antipode.clone(),
            action,
            self.coaction.clone(),
        )
    }

    pub fn with_coaction(&self, coaction: LinMap) -> Result<Self> {
        BraidedHopfData::new(
            self.b.clone(),
            self.b_antipode.clone(),
            self.h.clone(),
            self.h_antipode.clone(),
            self.action.clone(),
            coaction,
        )
    }

    pub fn with_antipodes(
        &self,
        b_antipode: Option<LinMap>,
        h_antipode: Option<LinMap>,
    ) -> Result<Self> {
        BraidedHopfData::new(
            self.b.clone(),
            b_antipode,
            self.h.clone(),
            h_antipode,
            self.action.clone(),
            self.coaction.clone(),
        )
    }

    /// Structure maps by their diagram names: `m_B`, `u_B`, `cm_B`, `cu_B`,
    /// `S_B`, the same for `H`, `act` and `coact`.
    pub fn map(&self, name: &str) -> Option<&LinMap> {
        match name {
            "m_B" => Some(self.b.mult()),
            "u_B" => Some(self.b.unit()),
            "cm_B" => Some(self.b.comult()),
            "cu_B" => Some(self.b.counit()),
            "S_B" => self.b_antipode.as_ref(),
            "m_H" => Some(self.h.mult()),
            "u_H" => Some(self.h.unit()),
            "cm_H" => Some(self.h.comult()),
            "cu_H" => Some(self.h.counit()),
            "S_H" => self.h_antipode.as_ref(),
            "act" => Some(&self.action),
            "coact" => Some(&self.coaction),
            _ => None,
        }
    }

    /// Replaces one structure map, named as in [`BraidedHopfData::map`].
    pub fn with_map(&self, name: &str, m: LinMap) -> Result<Self> {
        let replace = |a: &BialgebraData, slot: usize| {
            let mut maps = [
                a.mult().clone(),
                a.unit().clone(),
                a.comult().clone(),
                a.counit().clone(),
            ];
            maps[slot] = m.clone();
            let [mult, unit, comult, counit] = maps;
            a.with_maps(mult, unit, comult, counit)
        };
        let slot = |prefix: &str| ["m", "u", "cm", "cu"].iter().position(|p| *p == prefix);
        match (name, name.rsplit_once('_')) {
            ("S_B", _) => self.with_b(self.b.clone(), Some(m)),
            ("S_H", _) => self.with_h(self.h.clone(), Some(m)),
            ("act", _) => self.with_action(m),
            ("coact", _) => self.with_coaction(m),
            (_, Some((prefix, "B"))) if slot(prefix).is_some() => self.with_b(
                replace(&self.b, slot(prefix).expect("checked"))?,
                self.b_antipode.clone(),
            ),
            (_, Some((prefix, "H"))) if slot(prefix).is_some() => self.with_h(
                replace(&self.h, slot(prefix).expect("checked"))?,
                self.h_antipode.clone(),
            ),
            _ => Err(Error::InvalidParameter(format!(
                "no structure map named {name:?}"
            ))),
        }
    }

    fn ids(&self) -> (LinMap, LinMap) {
        (self.h.id(), self.b.id())
    }

    fn flip(&self, a: &SpaceSig, b: &SpaceSig) -> LinMap {
        LinMap::flip(self.field(), a, b)
    }
}

/// Names accepted by [`BraidedHopfData::map`].
pub const STRUCTURE_MAPS: [&str; 12] = [
    "m_B", "u_B", "cm_B", "cu_B", "S_B", "m_H", "u_H", "cm_H", "cu_H", "S_H", "act", "coact",
];

/// `(gh)·m = g·(h·m)` and `1·m = m`.
pub fn check_module(a: &ActionData) -> Result<CheckReport> {
    let subject = subject_of(&a.b);
    let id_h = a.h.id();
    let id_b = LinMap::identity(a.h.field(), &a.b);
    let alpha = &a.action;
    let lhs = alpha.compose(&a.h.mult().tensor(&id_b)?)?;
    let rhs = alpha.compose(&id_h.tensor(alpha)?)?;
    let unit = alpha.compose(&a.h.unit().tensor(&id_b)?)?;
    Ok(CheckReport::new(vec![
        AxiomResult::from_maps(AxiomId::ModAssoc, &subject, &lhs, &rhs)?,
        AxiomResult::from_maps(AxiomId::ModUnit, &subject, &unit, &id_b)?,
    ]))
}

/// Coassociativity of the coaction and the counit law.
pub fn check_comodule(c: &CoactionData) -> Result<CheckReport> {
    let subject = subject_of(&c.b);
    let id_h = c.h.id();
    let id_b = LinMap::identity(c.h.field(), &c.b);
    let rho = &c.coaction;
    let lhs = id_h.tensor(rho)?.compose(rho)?;
    let rhs = c.h.comult().tensor(&id_b)?.compose(rho)?;
    let counit = c.h.counit().tensor(&id_b)?.compose(rho)?;
    Ok(CheckReport::new(vec![
        AxiomResult::from_maps(AxiomId::ComodCoassoc, &subject, &lhs, &rhs)?,
        AxiomResult::from_maps(AxiomId::ComodCounit, &subject, &counit, &id_b)?,
    ]))
}

/// `h·(ab) = Σ (h₁·a)(h₂·b)` and `h·1 = ε(h)1`.
pub fn check_module_algebra(d: &BraidedHopfData) -> Result<CheckReport> {
    let subject = subject_of(d.b.space());
    let (id_h, id_b) = d.ids();
    let (hs, bs) = (d.h.space(), d.b.space());
    let alpha = &d.action;
    let lhs = alpha.compose(&id_h.tensor(d.b.mult())?)?;
    let rhs = LinMap::chain([
        &d.h.comult().tensor(&id_b)?.tensor(&id_b)?,
        &id_h.tensor(&d.flip(hs, bs))?.tensor(&id_b)?,
        &alpha.tensor(alpha)?,
        d.b.mult(),
    ])?;
    let unit_lhs = alpha.compose(&id_h.tensor(d.b.unit())?)?;
    let unit_rhs = d.b.unit().compose(d.h.counit())?;
    Ok(CheckReport::new(vec![
        AxiomResult::from_maps(AxiomId::Eq2, &subject, &lhs, &rhs)?,
        AxiomResult::from_maps(AxiomId::Eq2Unit, &subject, &unit_lhs, &unit_rhs)?,
    ]))
}

/// `Δ(h·b) = Σ (h₁·b₁) ⊗ (h₂·b₂)` and `ε(h·b) = ε(h)ε(b)`.
pub fn check_module_coalgebra(d: &BraidedHopfData) -> Result<CheckReport> {
    let subject = subject_of(d.b.space());
    let (id_h, id_b) = d.ids();
    let (hs, bs) = (d.h.space(), d.b.space());
    let alpha = &d.action;
    let lhs = d.b.comult().compose(alpha)?;
    let rhs = LinMap::chain([
        &d.h.comult().tensor(d.b.comult())?,
        &id_h.tensor(&d.flip(hs, bs))?.tensor(&id_b)?,
        &alpha.tensor(alpha)?,
    ])?;
    let counit_lhs = d.b.counit().compose(alpha)?;
    let counit_rhs = d.h.counit().tensor(d.b.counit())?;
    Ok(CheckReport::new(vec![
        AxiomResult::from_maps(AxiomId::Eq3, &subject, &lhs, &rhs)?,
        AxiomResult::from_maps(AxiomId::Eq3Counit, &subject, &counit_lhs, &counit_rhs)?,
    ]))
}

/// `ρ(ab) = Σ a₋₁b₋₁ ⊗ a₀b₀` and `ρ(1) = 1 ⊗ 1`.
pub fn check_comodule_algebra(d: &BraidedHopfData) -> Result<CheckReport> {
    let subject = subject_of(d.b.space());
    let (id_h, id_b) = d.ids();
    let (hs, bs) = (d.h.space(), d.b.space());
    let rho = &d.coaction;
    let lhs = rho.compose(d.b.mult())?;
    let rhs = LinMap::chain([
        &rho.tensor(rho)?,
        &id_h.tensor(&d.flip(bs, hs))?.tensor(&id_b)?,
        &d.h.mult().tensor(d.b.mult())?,
    ])?;
    let unit_lhs = rho.compose(d.b.unit())?;
    let unit_rhs = d.h.unit().tensor(d.b.unit())?;
    Ok(CheckReport::new(vec![
        AxiomResult::from_maps(AxiomId::Eq4, &subject, &lhs, &rhs)?,
        AxiomResult::from_maps(AxiomId::Eq4Unit, &subject, &unit_lhs, &unit_rhs)?,
    ]))
}

/// `Σ b₋₁ ⊗ b₀₁ ⊗ b₀₂ = Σ b₁₋₁b₂₋₁ ⊗ b₁₀ ⊗ b₂₀` and `(id ⊗ ε)ρ = η ε`.
pub fn check_comodule_coalgebra(d: &BraidedHopfData) -> Result<CheckReport> {
    let subject = subject_of(d.b.space());
    let (id_h, id_b) = d.ids();
    let (hs, bs) = (d.h.space(), d.b.space());
    let rho = &d.coaction;
    let lhs = id_h.tensor(d.b.comult())?.compose(rho)?;
    let rhs = LinMap::chain([
        d.b.comult(),
        &rho.tensor(rho)?,
        &id_h.tensor(&d.flip(bs, hs))?.tensor(&id_b)?,
        &d.h.mult().tensor(&id_b)?.tensor(&id_b)?,
    ])?;
    let counit_lhs = id_h.tensor(d.b.counit())?.compose(rho)?;
    let counit_rhs = d.h.unit().compose(d.b.counit())?;
    Ok(CheckReport::new(vec![
        AxiomResult::from_maps(AxiomId::Eq5, &subject, &lhs, &rhs)?,
        AxiomResult::from_maps(AxiomId::Eq5Counit, &subject, &counit_lhs, &counit_rhs)?,
    ]))
}

/// Left side of the Yetter–Drinfeld condition, `h ⊗ b ↦ Σ h₁b₋₁ ⊗ h₂·b₀`.
pub fn yd_lhs(d: &BraidedHopfData) -> Result<LinMap> {
    let (id_h, id_b) = d.ids();
    let hs = d.h.space();
    LinMap::chain([
        &d.h.comult().tensor(&d.coaction)?,
        &id_h.tensor(&d.flip(hs, hs))?.tensor(&id_b)?,
        &d.h.mult().tensor(&d.action)?,
    ])
}

/// Right side of the Yetter–Drinfeld condition, `h ⊗ b ↦ Σ (h₁·b)₋₁h₂ ⊗ (h₁·b)₀`.
pub fn yd_rhs(d: &BraidedHopfData) -> Result<LinMap> {
    let (id_h, id_b) = d.ids();
    let hs = d.h.space();
    let swap_hh = d.flip(hs, hs);
    LinMap::chain([
        &d.h.comult().tensor(&id_b)?,
        &swap_hh.tensor(&id_b)?,
        &id_h.tensor(&d.action)?,
        &id_h.tensor(&d.coaction)?,
        &swap_hh.tensor(&id_b)?,
        &d.h.mult().tensor(&id_b)?,
    ])
}

pub fn check_yd_condition(d: &BraidedHopfData) -> Result<CheckReport> {
    let subject = subject_of(d.b.space());
    Ok(CheckReport::new(vec![AxiomResult::from_maps(
        AxiomId::Yd,
        &subject,
        &yd_lhs(d)?,
        &yd_rhs(d)?,
    )?]))
}

/// Right side of the braided multiplicativity of `Δ_B`,
/// `a ⊗ b ↦ Σ a₁(a₂₋₁·b₁) ⊗ a₂₀b₂`.
pub fn cond1_rhs(d: &BraidedHopfData) -> Result<LinMap> {
    let (id_h, id_b) = d.ids();
    let bs = d.b.space();
    LinMap::chain([
        &d.b.comult().tensor(d.b.comult())?,
        &id_b.tensor(&d.coaction)?.tensor(&id_b)?.tensor(&id_b)?,
        &id_b.tensor(&id_h)?.tensor(&d.flip(bs, bs))?.tensor(&id_b)?,
        &id_b.tensor(&d.action)?.tensor(&id_b)?.tensor(&id_b)?,
        &d.b.mult().tensor(d.b.mult())?,
    ])
}

pub fn check_condition1(d: &BraidedHopfData) -> Result<CheckReport> {
    let subject = subject_of(d.b.space());
    let lhs = d.b.comult().compose(d.b.mult())?;
    Ok(CheckReport::new(vec![AxiomResult::from_maps(
        AxiomId::Cond1,
        &subject,
        &lhs,
        &cond1_rhs(d)?,
    )?]))
}

/// `ε_B` is multiplicative and unital, and `Δ_B(1) = 1 ⊗ 1`.
pub fn check_braided_counit_unit(d: &BraidedHopfData) -> Result<CheckReport> {
    let subject = subject_of(d.b.space());
    let b = &d.b;
    let id_k = LinMap::identity(d.field(), &SpaceSig::unit());
    Ok(CheckReport::new(vec![
        AxiomResult::from_maps(
            AxiomId::BrCounitMult,
            &subject,
            &b.counit().compose(b.mult())?,
            &b.counit().tensor(b.counit())?,
        )?,
        AxiomResult::from_maps(
            AxiomId::BrCounitUnit,
            &subject,
            &b.counit().compose(b.unit())?,
            &id_k,
        )?,
        AxiomResult::from_maps(
            AxiomId::BrComultUnit,
            &subject,
            &b.comult().compose(b.unit())?,
            &b.unit().tensor(b.unit())?,
        )?,
    ]))
}

/// Antipode identities of `B` against its braided comultiplication.
/// Empty report when `B` has no antipode.
pub fn check_braided_antipode(d: &BraidedHopfData) -> Result<CheckReport> {
    let Some(s) = &d.b_antipode else {
        return Ok(CheckReport::default());
    };
    let subject = subject_of(d.b.space());
    let id = d.b.id();
    let target = d.b.unit().compose(d.b.counit())?;
    Ok(CheckReport::new(vec![
        AxiomResult::from_maps(
            AxiomId::BrAntipodeLeft,
            &subject,
            &structures::convolve(&d.b, s, &id)?,
            &target,
        )?,
        AxiomResult::from_maps(
            AxiomId::BrAntipodeRight,
            &subject,
            &structures::convolve(&d.b, &id, s)?,
            &target,
        )?,
    ]))
}

/// The full hypothesis bundle: `H`'s own axioms, `B`'s algebra and coalgebra
/// axioms, module/comodule laws, (co)module (co)algebra conditions, the
/// Yetter–Drinfeld condition, braided multiplicativity of `Δ_B`, the counit
/// and unit conditions, and the braided antipode when present.
///
/// `hopf_ready` is set iff everything passes and both antipodes are present.
pub fn check_theorem_hypotheses(d: &BraidedHopfData) -> Result<CheckReport> {
    let mut report = structures::check_cascade(&d.h, d.h_antipode.as_ref())?;
    report.extend(structures::check_algebra(d.b.algebra())?);
    report.extend(structures::check_coalgebra(d.b.coalgebra())?);
    report.extend(check_module(&d.action_data())?);
    report.extend(check_comodule(&d.coaction_data())?);
    report.extend(check_module_algebra(d)?);
    report.extend(check_module_coalgebra(d)?);
    report.extend(check_comodule_algebra(d)?);
    report.extend(check_comodule_coalgebra(d)?);
    report.extend(check_yd_condition(d)?);
    report.extend(check_condition1(d)?);
    report.extend(check_braided_counit_unit(d)?);
    report.extend(check_braided_antipode(d)?);
    report.results.sort_by_key(|r| r.axiom_id);
    report.hopf_ready = Some(report.ok && d.b_antipode.is_some() && d.h_antipode.is_some());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exactla::Scalar;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn maps_by_name() {
        let d = catalog::superline(crate::exactla::FieldSpec::Rationals).unwrap();
        for name in STRUCTURE_MAPS {
            let m = d.map(name).unwrap().clone();
            assert_eq!(d.with_map(name, m).unwrap(), d, "{name}");
        }
        assert!(d.map("nope").is_none());
        assert!(d.with_map("nope", d.action().clone()).is_err());
    }

    #[test]
    fn superline_passes_every_hypothesis() {
        let d = catalog::superline(q()).unwrap();
        let r = check_theorem_hypotheses(&d).unwrap();
        assert!(r.ok, "{r}");
        assert_eq!(r.hopf_ready, Some(true));
    }

    #[test]
    fn trivial_coaction_breaks_condition1_only() {
        let d = catalog::superline(q()).unwrap();
        let trivial = d.h().unit().tensor(&d.b().id()).unwrap();
        let d = d.with_coaction(trivial).unwrap();
        let r = check_theorem_hypotheses(&d).unwrap();
        assert_eq!(r.failed_ids(), vec!["B:COND1".to_string()]);
        let w = r.get(AxiomId::Cond1, "B").unwrap().witness.clone().unwrap();
        assert_eq!(w.basis_names, ["x", "x", "x", "x"]);
        assert_eq!((w.lhs_entry.as_str(), w.rhs_entry.as_str()), ("0", "2"));
    }

    #[test]
    fn unit_coaction_broken() {
        let d = catalog::superline(q()).unwrap();
        // ρ(1) = g ⊗ 1 instead of 1 ⊗ 1
        let rho = d
            .coaction()
            .with_entry(0, 0, Scalar::zero(q()))
            .unwrap()
            .with_entry(2, 0, Scalar::one(q()))
            .unwrap();
        let d = d.with_coaction(rho).unwrap();
        let r = check_comodule_algebra(&d).unwrap();
        assert!(r.has_failure(AxiomId::Eq4Unit));
    }

    #[test]
    fn braided_antipode_absent_yields_empty_report() {
        let d = catalog::superline(q())
            .unwrap()
            .with_antipodes(None, None)
            .unwrap();
        assert!(check_braided_antipode(&d).unwrap().results.is_empty());
        let r = check_theorem_hypotheses(&d).unwrap();
        assert!(r.ok);
        assert_eq!(r.hopf_ready, Some(false));
    }

    #[test]
    fn action_signature_checked() {
        let d = catalog::superline(q()).unwrap();
        assert!(d.with_action(d.coaction().clone()).is_err());
    }
}
