//! Structure-constant records for algebras, coalgebras, bialgebras and Hopf
//! algebras, with exact checkers for their axioms.

use crate::error::{Error, Result};
use crate::exactla::{solve_linear, FieldSpec, LinMap, Scalar, SpaceSig};
use crate::report::{AxiomId, AxiomResult, CheckReport};

fn expect_sig(what: &str, found: &SpaceSig, expected: &SpaceSig) -> Result<()> {
    if found.compatible(expected) {
        Ok(())
    } else {
        Err(Error::SignatureMismatch {
            expected: format!("{what}: {expected}"),
            found: found.to_string(),
        })
    }
}

/// Name used as the report subject for a space, e.g. `H` or `B⊗H`.
pub fn subject_of(space: &SpaceSig) -> String {
    if space.is_unit() {
        return "k".to_string();
    }
    space
        .factors()
        .iter()
        .map(|f| f.name())
        .collect::<Vec<_>>()
        .join("⊗")
}

/// `(V, m, η)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraData {
    space: SpaceSig,
    mult: LinMap,
    unit: LinMap,
}

impl AlgebraData {
    pub fn new(space: SpaceSig, mult: LinMap, unit: LinMap) -> Result<Self> {
        mult.field().ensure_same(unit.field())?;
        let vv = space.concat(&space);
        expect_sig("multiplication domain", mult.dom(), &vv)?;
        expect_sig("multiplication codomain", mult.cod(), &space)?;
        expect_sig("unit domain", unit.dom(), &SpaceSig::unit())?;
        expect_sig("unit codomain", unit.cod(), &space)?;
        Ok(AlgebraData { space, mult, unit })
    }

    pub fn field(&self) -> FieldSpec {
        self.mult.field()
    }

    pub fn space(&self) -> &SpaceSig {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis_names(&self) -> Vec<String> {
        (0..self.dim()).map(|i| self.space.label(i)).collect()
    }

    pub fn mult(&self) -> &LinMap {
        &self.mult
    }

    pub fn unit(&self) -> &LinMap {
        &self.unit
    }

    /// Product of two coordinate vectors.
    pub fn multiply(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let field = self.field();
        let mut out = vec![Scalar::zero(field); n];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x * y;
                for (k, slot) in out.iter_mut().enumerate() {
                    let c = self.mult.get(k, i * n + j);
                    if !c.is_zero() {
                        *slot = &*slot + &(c * &xy);
                    }
                }
            }
        }
        out
    }

    pub fn one(&self) -> Vec<Scalar> {
        self.unit.column(0)
    }
}

/// `(V, Δ, ε)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoalgebraData {
    space: SpaceSig,
    comult: LinMap,
    counit: LinMap,
}

impl CoalgebraData {
    pub fn new(space: SpaceSig, comult: LinMap, counit: LinMap) -> Result<Self> {
        comult.field().ensure_same(counit.field())?;
        let vv = space.concat(&space);
        expect_sig("comultiplication domain", comult.dom(), &space)?;
        expect_sig("comultiplication codomain", comult.cod(), &vv)?;
        expect_sig("counit domain", counit.dom(), &space)?;
        expect_sig("counit codomain", counit.cod(), &SpaceSig::unit())?;
        Ok(CoalgebraData {
            space,
            comult,
            counit,
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.comult.field()
    }

    pub fn space(&self) -> &SpaceSig {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn comult(&self) -> &LinMap {
        &self.comult
    }

    pub fn counit(&self) -> &LinMap {
        &self.counit
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BialgebraData {
    algebra: AlgebraData,
    coalgebra: CoalgebraData,
}

impl BialgebraData {
    pub fn new(algebra: AlgebraData, coalgebra: CoalgebraData) -> Result<Self> {
        algebra.field().ensure_same(coalgebra.field())?;
        expect_sig("coalgebra space", coalgebra.space(), algebra.space())?;
        Ok(BialgebraData { algebra, coalgebra })
    }

    pub fn from_maps(
        space: SpaceSig,
        mult: LinMap,
        unit: LinMap,
        comult: LinMap,
        counit: LinMap,
    ) -> Result<Self> {
        let algebra = AlgebraData::new(space.clone(), mult, unit)?;
        let coalgebra = CoalgebraData::new(space, comult, counit)?;
        BialgebraData::new(algebra, coalgebra)
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &CoalgebraData {
        &self.coalgebra
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn space(&self) -> &SpaceSig {
        self.algebra.space()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn mult(&self) -> &LinMap {
        self.algebra.mult()
    }

    pub fn unit(&self) -> &LinMap {
        self.algebra.unit()
    }

    pub fn comult(&self) -> &LinMap {
        self.coalgebra.comult()
    }

    pub fn counit(&self) -> &LinMap {
        self.coalgebra.counit()
    }

    pub fn id(&self) -> LinMap {
        LinMap::identity(self.field(), self.space())
    }

    /// Copy with the four structure maps replaced (signatures re-validated).
    pub fn with_maps(
        &self,
        mult: LinMap,
        unit: LinMap,
        comult: LinMap,
        counit: LinMap,
    ) -> Result<Self> {
        BialgebraData::from_maps(self.space().clone(), mult, unit, comult, counit)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfData {
    bialgebra: BialgebraData,
    antipode: LinMap,
}

impl HopfData {
    pub fn new(bialgebra: BialgebraData, antipode: LinMap) -> Result<Self> {
        bialgebra.field().ensure_same(antipode.field())?;
        expect_sig("antipode domain", antipode.dom(), bialgebra.space())?;
        expect_sig("antipode codomain", antipode.cod(), bialgebra.space())?;
        Ok(HopfData {
            bialgebra,
            antipode,
        })
    }

    pub fn bialgebra(&self) -> &BialgebraData {
        &self.bialgebra
    }

    pub fn antipode(&self) -> &LinMap {
        &self.antipode
    }

    pub fn field(&self) -> FieldSpec {
        self.bialgebra.field()
    }

    pub fn space(&self) -> &SpaceSig {
        self.bialgebra.space()
    }

    pub fn dim(&self) -> usize {
        self.bialgebra.dim()
    }

    pub fn into_parts(self) -> (BialgebraData, LinMap) {
        (self.bialgebra, self.antipode)
    }
}

/// Associativity and both unit laws.
pub fn check_algebra(a: &AlgebraData) -> Result<CheckReport> {
    let subject = subject_of(a.space());
    let id = LinMap::identity(a.field(), a.space());
    let m = a.mult();
    let u = a.unit();
    let lhs = m.compose(&m.tensor(&id)?)?;
    let rhs = m.compose(&id.tensor(m)?)?;
    let left = m.compose(&u.tensor(&id)?)?;
    let right = m.compose(&id.tensor(u)?)?;
    Ok(CheckReport::new(vec![
        AxiomResult::from_maps(AxiomId::AlgAssoc, &subject, &lhs, &rhs)?,
        AxiomResult::from_maps(AxiomId::AlgUnitLeft, &subject, &left, &id)?,
        AxiomResult::from_maps(AxiomId::AlgUnitRight, &subject, &right, &id)?,
    ]))
}

/// Coassociativity and both counit laws.
pub fn check_coalgebra(c: &CoalgebraData) -> Result<CheckReport> {
    let subject = subject_of(c.space());
    let id = LinMap::identity(c.field(), c.space());
    let d = c.comult();
    let e = c.counit();
    let lhs = d.tensor(&id)?.compose(d)?;
    let rhs = id.tensor(d)?.compose(d)?;
    let left = e.tensor(&id)?.compose(d)?;
    let right = id.tensor(e)?.compose(d)?;
    Ok(CheckReport::new(vec![
        AxiomResult::from_maps(AxiomId::CoalgCoassoc, &subject, &lhs, &rhs)?,
        AxiomResult::from_maps(AxiomId::CoalgCounitLeft, &subject, &left, &id)?,
        AxiomResult::from_maps(AxiomId::CoalgCounitRight, &subject, &right, &id)?,
    ]))
}

/// Compatibility of the algebra and coalgebra halves. Does not re-run
/// [`check_algebra`] or [`check_coalgebra`].
pub fn check_bialgebra(h: &BialgebraData) -> Result<CheckReport> {
    let field = h.field();
    let v = h.space();
    let subject = subject_of(v);
    let (m, u, d, e) = (h.mult(), h.unit(), h.comult(), h.counit());

    let lhs = d.compose(m)?;
    let rhs = d
        .tensor(d)?
        .then_local(1, &LinMap::flip(field, v, v))?
        .then_local(0, m)?
        .then_local(1, m)?;
    let eps_lhs = e.compose(m)?;
    let eps_rhs = e.tensor(e)?;
    let unit_lhs = d.compose(u)?;
    let unit_rhs = u.tensor(u)?;
    let scalar = e.compose(u)?;
    let id_k = LinMap::identity(field, &SpaceSig::unit());

    Ok(CheckReport::new(vec![
        AxiomResult::from_maps(AxiomId::BialgComultMult, &subject, &lhs, &rhs)?,
        AxiomResult::from_maps(AxiomId::BialgCounitMult, &subject, &eps_lhs, &eps_rhs)?,
        AxiomResult::from_maps(AxiomId::BialgComultUnit, &subject, &unit_lhs, &unit_rhs)?,
        AxiomResult::from_maps(AxiomId::BialgCounitUnit, &subject, &scalar, &id_k)?,
    ]))
}

/// Convolution `f ∗ g = m ∘ (f ⊗ g) ∘ Δ`.
pub fn convolve(h: &BialgebraData, f: &LinMap, g: &LinMap) -> Result<LinMap> {
    h.mult().compose(&f.tensor(g)?)?.compose(h.comult())
}

/// Both antipode identities `S ∗ id = η∘ε = id ∗ S`.
pub fn check_hopf(h: &HopfData) -> Result<CheckReport> {
    let b = h.bialgebra();
    let subject = subject_of(b.space());
    let id = b.id();
    let s = h.antipode();
    let target = b.unit().compose(b.counit())?;
    Ok(CheckReport::new(vec![
        AxiomResult::from_maps(
            AxiomId::HopfAntipodeLeft,
            &subject,
            &convolve(b, s, &id)?,
            &target,
        )?,
        AxiomResult::from_maps(
            AxiomId::HopfAntipodeRight,
            &subject,
            &convolve(b, &id, s)?,
            &target,
        )?,
    ]))
}

/// Algebra, coalgebra, bialgebra and (if present) Hopf checks in one report.
pub fn check_cascade(b: &BialgebraData, antipode: Option<&LinMap>) -> Result<CheckReport> {
    let mut report = check_algebra(b.algebra())?;
    report.extend(check_coalgebra(b.coalgebra())?);
    report.extend(check_bialgebra(b)?);
    if let Some(s) = antipode {
        report.extend(check_hopf(&HopfData::new(b.clone(), s.clone())?)?);
    }
    Ok(report)
}

/// Solves `m ∘ (S ⊗ id) ∘ Δ = η ∘ ε` for `S` by exact elimination, then
/// verifies the right-hand identity before returning.
pub fn solve_antipode(h: &BialgebraData) -> Result<LinMap> {
    let field = h.field();
    let n = h.dim();
    let (m, d) = (h.mult(), h.comult());
    let target = h.unit().compose(h.counit())?;

    // Unknown S[k][i] at position k * n + i; equation (l, c) for output l, input c.
    let mut rows = Vec::with_capacity(n * n);
    let mut rhs = Vec::with_capacity(n * n);
    for l in 0..n {
        for c in 0..n {
            let mut row = vec![Scalar::zero(field); n * n];
            for i in 0..n {
                for j in 0..n {
                    let dc = d.get(i * n + j, c);
                    if dc.is_zero() {
                        continue;
                    }
                    for k in 0..n {
                        let mc = m.get(l, k * n + j);
                        if !mc.is_zero() {
                            let slot = &mut row[k * n + i];
                            *slot = &*slot + &(dc * mc);
                        }
                    }
                }
            }
            rows.push(row);
            rhs.push(target.get(l, c).clone());
        }
    }
    let solution = solve_linear(field, rows, rhs)?
        .ok_or_else(|| Error::NoSolution("identity has no left convolution inverse".into()))?;
    let s = LinMap::new(field, h.space().clone(), h.space().clone(), solution)?;
    let right = convolve(h, &h.id(), &s)?;
    if !right.maps_equal(&target) {
        return Err(Error::StructuralInconsistency(
            "left convolution inverse of id fails the right antipode identity".into(),
        ));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn group_algebra_z2_passes_everything() {
        let h = catalog::group_algebra(2, FieldSpec::Rationals).unwrap();
        let r = check_cascade(h.bialgebra(), Some(h.antipode())).unwrap();
        assert!(r.ok, "{r}");
        assert_eq!(r.results.len(), 12);
    }

    #[test]
    fn gg_equals_g_is_caught_by_antipode_not_algebra() {
        // With g·g = g the algebra is the (associative, unital) truncated
        // monoid algebra; only the antipode identity breaks.
        let h = catalog::group_algebra(2, FieldSpec::Rationals).unwrap();
        let q = FieldSpec::Rationals;
        let b = h.bialgebra();
        let m = b
            .mult()
            .with_entry(0, 3, Scalar::zero(q))
            .unwrap()
            .with_entry(1, 3, Scalar::one(q))
            .unwrap();
        let b = b
            .with_maps(m, b.unit().clone(), b.comult().clone(), b.counit().clone())
            .unwrap();
        assert!(check_algebra(b.algebra()).unwrap().ok);
        assert!(check_bialgebra(&b).unwrap().ok);
        let r = check_hopf(&HopfData::new(b, h.antipode().clone()).unwrap()).unwrap();
        let w = r
            .get(AxiomId::HopfAntipodeLeft, "H")
            .unwrap()
            .witness
            .as_ref()
            .unwrap();
        assert_eq!(w.basis_names, ["g", "1"]);
        assert_eq!((w.lhs_entry.as_str(), w.rhs_entry.as_str()), ("0", "1"));
    }

    #[test]
    fn broken_counit_is_reported() {
        let h = catalog::group_algebra(2, FieldSpec::Rationals).unwrap();
        let e = h
            .bialgebra()
            .counit()
            .with_entry(0, 1, Scalar::zero(FieldSpec::Rationals))
            .unwrap();
        let b = h.bialgebra();
        let b = b
            .with_maps(b.mult().clone(), b.unit().clone(), b.comult().clone(), e)
            .unwrap();
        let r = check_bialgebra(&b).unwrap();
        assert!(r.has_failure(AxiomId::BialgCounitMult));
        assert!(!r.has_failure(AxiomId::BialgComultMult));
    }

    #[test]
    fn signatures_are_validated() {
        let h = catalog::group_algebra(2, FieldSpec::Rationals).unwrap();
        let b = h.bialgebra();
        assert!(matches!(
            AlgebraData::new(h.space().clone(), b.comult().clone(), b.unit().clone()),
            Err(Error::SignatureMismatch { .. })
        ));
    }

    #[test]
    fn truncated_monoid_has_no_antipode() {
        let b = catalog::truncated_monoid(FieldSpec::Rationals).unwrap();
        assert!(check_cascade(&b, None).unwrap().ok);
        assert!(matches!(solve_antipode(&b), Err(Error::NoSolution(_))));
    }
}
