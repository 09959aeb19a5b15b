//! Built-in example structures with exactly known constants.

use crate::biproduct::{check_quasitriangular, ModuleBialgebraData, RMatrix};
use crate::error::{Error, Result};
use crate::exactla::{Factor, FieldSpec, LinMap, Scalar, SpaceSig};
use crate::report::{AxiomId, CheckReport};
use crate::structures::{self, BialgebraData, HopfData};
use crate::ydcat::{self, BraidedHopfData};

/// Sparse map from `(row, col, numerator, denominator)` entries.
fn sparse(
    field: FieldSpec,
    dom: &SpaceSig,
    cod: &SpaceSig,
    entries: &[(usize, usize, i64, i64)],
) -> Result<LinMap> {
    let entries = entries
        .iter()
        .map(|&(r, c, n, d)| Ok((r, c, Scalar::ratio(field, n, d)?)))
        .collect::<Result<Vec<_>>>()?;
    LinMap::from_entries(field, dom.clone(), cod.clone(), entries)
}

fn require_odd_characteristic(field: FieldSpec) -> Result<()> {
    if field.characteristic() == 2 {
        return Err(Error::InvalidParameter(
            "characteristic 2 is not allowed here".into(),
        ));
    }
    Ok(())
}

fn group_labels(n: usize, generator: &str) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => generator.to_string(),
            _ => format!("{generator}^{i}"),
        })
        .collect()
}

/// `k[ℤₙ]` on a factor with the given name and generator label.
pub fn cyclic_group_algebra(
    n: usize,
    field: FieldSpec,
    space: &str,
    generator: &str,
) -> Result<HopfData> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "group order must be at least 1".into(),
        ));
    }
    let v = SpaceSig::single(&Factor::new(space, group_labels(n, generator))?);
    let vv = v.concat(&v);
    let k = SpaceSig::unit();
    let one = Scalar::one(field);
    let mult = LinMap::from_entries(
        field,
        vv.clone(),
        v.clone(),
        (0..n)
            .flat_map(|i| (0..n).map(move |j| ((i + j) % n, i * n + j)))
            .map(|(r, c)| (r, c, one.clone())),
    )?;
    let unit = sparse(field, &k, &v, &[(0, 0, 1, 1)])?;
    let comult = LinMap::from_entries(
        field,
        v.clone(),
        vv,
        (0..n).map(|i| (i * n + i, i, one.clone())),
    )?;
    let counit = LinMap::from_entries(field, v.clone(), k, (0..n).map(|i| (0, i, one.clone())))?;
    let antipode = LinMap::from_entries(
        field,
        v.clone(),
        v.clone(),
        (0..n).map(|i| ((n - i) % n, i, one.clone())),
    )?;
    HopfData::new(
        BialgebraData::from_maps(v, mult, unit, comult, counit)?,
        antipode,
    )
}

/// `k[ℤₙ]` with basis `1, g, g^2, …`, grouplike `g`, `S(gⁱ) = gⁿ⁻ⁱ`.
pub fn group_algebra(n: usize, field: FieldSpec) -> Result<HopfData> {
    cyclic_group_algebra(n, field, "H", "g")
}

/// Basis `{1, t}`, `t² = t`, `t` grouplike: a bialgebra with no antipode.
pub fn truncated_monoid(field: FieldSpec) -> Result<BialgebraData> {
    let v = SpaceSig::single(&Factor::new("M", vec!["1".into(), "t".into()])?);
    let vv = v.concat(&v);
    let k = SpaceSig::unit();
    let mult = sparse(
        field,
        &vv,
        &v,
        &[(0, 0, 1, 1), (1, 1, 1, 1), (1, 2, 1, 1), (1, 3, 1, 1)],
    )?;
    let unit = sparse(field, &k, &v, &[(0, 0, 1, 1)])?;
    let comult = sparse(field, &v, &vv, &[(0, 0, 1, 1), (3, 1, 1, 1)])?;
    let counit = sparse(field, &v, &k, &[(0, 0, 1, 1), (0, 1, 1, 1)])?;
    BialgebraData::from_maps(v, mult, unit, comult, counit)
}

/// Sweedler's four-dimensional Hopf algebra: basis `1, g, x, gx`,
/// `g² = 1`, `x² = 0`, `xg = −gx`, `Δx = x⊗1 + g⊗x`, `S(x) = −gx`.
pub fn sweedler(field: FieldSpec) -> Result<HopfData> {
    require_odd_characteristic(field)?;
    let v = SpaceSig::single(&Factor::new(
        "H4",
        ["1", "g", "x", "gx"].map(String::from).to_vec(),
    )?);
    let vv = v.concat(&v);
    let k = SpaceSig::unit();
    // gᵃxᵇ at index a + 2b
    let mut mult = Vec::new();
    for i in 0..4usize {
        for j in 0..4usize {
            let (a, b) = (i % 2, i / 2);
            let (c, d) = (j % 2, j / 2);
            if b + d >= 2 {
                continue;
            }
            let sign = if b * c == 1 { -1 } else { 1 };
            mult.push(((a + c) % 2 + 2 * (b + d), i * 4 + j, sign, 1));
        }
    }
    let mult = sparse(field, &vv, &v, &mult)?;
    let unit = sparse(field, &k, &v, &[(0, 0, 1, 1)])?;
    let comult = sparse(
        field,
        &v,
        &vv,
        &[
            (0, 0, 1, 1),
            (5, 1, 1, 1),
            (2 * 4, 2, 1, 1),
            (4 + 2, 2, 1, 1),
            (3 * 4 + 1, 3, 1, 1),
            (3, 3, 1, 1),
        ],
    )?;
    let counit = sparse(field, &v, &k, &[(0, 0, 1, 1), (0, 1, 1, 1)])?;
    let antipode = sparse(
        field,
        &v,
        &v,
        &[(0, 0, 1, 1), (1, 1, 1, 1), (3, 2, -1, 1), (2, 3, 1, 1)],
    )?;
    HopfData::new(
        BialgebraData::from_maps(v, mult, unit, comult, counit)?,
        antipode,
    )
}

fn superline_b(field: FieldSpec) -> Result<(BialgebraData, LinMap)> {
    let b = SpaceSig::single(&Factor::new("B", vec!["1".into(), "x".into()])?);
    let bb = b.concat(&b);
    let k = SpaceSig::unit();
    let mult = sparse(field, &bb, &b, &[(0, 0, 1, 1), (1, 1, 1, 1), (1, 2, 1, 1)])?;
    let unit = sparse(field, &k, &b, &[(0, 0, 1, 1)])?;
    let comult = sparse(field, &b, &bb, &[(0, 0, 1, 1), (2, 1, 1, 1), (1, 1, 1, 1)])?;
    let counit = sparse(field, &b, &k, &[(0, 0, 1, 1)])?;
    let antipode = sparse(field, &b, &b, &[(0, 0, 1, 1), (1, 1, -1, 1)])?;
    Ok((
        BialgebraData::from_maps(b, mult, unit, comult, counit)?,
        antipode,
    ))
}

/// `g·x = −x` on `B = span{1, x}` over `kℤ₂`.
fn superline_action(field: FieldSpec, h: &SpaceSig, b: &SpaceSig) -> Result<LinMap> {
    // H⊗B index: h * 2 + b
    sparse(
        field,
        &h.concat(b),
        b,
        &[(0, 0, 1, 1), (1, 1, 1, 1), (0, 2, 1, 1), (1, 3, -1, 1)],
    )
}

/// The super line: `B = k[x]/(x²)` with `x` primitive and `S_B(x) = −x`,
/// over `H = kℤ₂` acting by `g·x = −x` and coacting by `ρ(x) = g ⊗ x`.
pub fn superline(field: FieldSpec) -> Result<BraidedHopfData> {
    require_odd_characteristic(field)?;
    let h = group_algebra(2, field)?;
    let (b, s_b) = superline_b(field)?;
    let action = superline_action(field, h.space(), b.space())?;
    // ρ(1) = 1⊗1, ρ(x) = g⊗x; H⊗B index h * 2 + b
    let coaction = sparse(
        field,
        b.space(),
        &h.space().concat(b.space()),
        &[(0, 0, 1, 1), (3, 1, 1, 1)],
    )?;
    let (h_bi, s_h) = h.into_parts();
    BraidedHopfData::new(b, Some(s_b), h_bi, Some(s_h), action, coaction)
}

/// The super line as a Hopf algebra in `H`-modules, without a coaction.
pub fn superline_module(field: FieldSpec) -> Result<ModuleBialgebraData> {
    let d = superline(field)?;
    Ok(ModuleBialgebraData {
        b: d.b().clone(),
        b_antipode: d.b_antipode().cloned(),
        h: d.h().clone(),
        h_antipode: d.h_antipode().cloned(),
        action: d.action().clone(),
    })
}

/// `B = k` with the trivial action and coaction of `h`.
pub fn trivial_bundle(h: &HopfData) -> Result<BraidedHopfData> {
    let field = h.field();
    let b = SpaceSig::single(&Factor::new("B", vec!["1".into()])?);
    let k = SpaceSig::unit();
    let id_b = LinMap::identity(field, &b);
    let one = |dom: &SpaceSig, cod: &SpaceSig| sparse(field, dom, cod, &[(0, 0, 1, 1)]);
    let bialg = BialgebraData::from_maps(
        b.clone(),
        one(&b.concat(&b), &b)?,
        one(&k, &b)?,
        one(&b, &b.concat(&b))?,
        one(&b, &k)?,
    )?;
    let action = h.bialgebra().counit().tensor(&id_b)?;
    let coaction = h.bialgebra().unit().tensor(&id_b)?;
    BraidedHopfData::new(
        bialg,
        Some(id_b),
        h.bialgebra().clone(),
        Some(h.antipode().clone()),
        action,
        coaction,
    )
}

/// An ordinary Hopf algebra `b` with the trivial action and coaction of `h`;
/// the braiding degenerates to the flip.
pub fn trivial_braiding(b: &HopfData, h: &HopfData) -> Result<BraidedHopfData> {
    let id_b = b.bialgebra().id();
    let action = h.bialgebra().counit().tensor(&id_b)?;
    let coaction = h.bialgebra().unit().tensor(&id_b)?;
    BraidedHopfData::new(
        b.bialgebra().clone(),
        Some(b.antipode().clone()),
        h.bialgebra().clone(),
        Some(h.antipode().clone()),
        action,
        coaction,
    )
}

/// `R = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g)` on `kℤ₂`; `R⁻¹ = R`.
pub fn z2_rmatrix(field: FieldSpec) -> Result<RMatrix> {
    require_odd_characteristic(field)?;
    let h = group_algebra(2, field)?;
    let coeffs = [1, 1, 1, -1]
        .iter()
        .map(|&c| Scalar::ratio(field, c, 2))
        .collect::<Result<Vec<_>>>()?;
    RMatrix::new(h.bialgebra().clone(), coeffs)
}

#[derive(Clone, Debug)]
pub enum Payload {
    Bialgebra(BialgebraData),
    Hopf(HopfData),
    Braided(BraidedHopfData),
    RMatrix(RMatrix),
    /// A module bialgebra together with an R-matrix: input to bosonization.
    Bosonization(ModuleBialgebraData, RMatrix),
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub description: String,
    pub payload: Payload,
    /// For negative fixtures, the axiom whose family must be reported failing.
    pub expected_failure: Option<AxiomId>,
}

impl CatalogEntry {
    fn new(name: &str, description: &str, payload: Payload) -> Self {
        CatalogEntry {
            name: name.into(),
            description: description.into(),
            payload,
            expected_failure: None,
        }
    }

    fn failing(mut self, id: AxiomId) -> Self {
        self.expected_failure = Some(id);
        self
    }

    /// The maximal check cascade for this payload.
    pub fn check(&self) -> Result<CheckReport> {
        match &self.payload {
            Payload::Bialgebra(b) => structures::check_cascade(b, None),
            Payload::Hopf(h) => structures::check_cascade(h.bialgebra(), Some(h.antipode())),
            Payload::Braided(d) => ydcat::check_theorem_hypotheses(d),
            Payload::RMatrix(r) => {
                let mut report = structures::check_cascade(r.h(), None)?;
                report.extend(check_quasitriangular(r)?);
                Ok(report)
            }
            Payload::Bosonization(m, r) => {
                let mut report = check_quasitriangular(r)?;
                report.extend(ydcat::check_theorem_hypotheses(&m.with_rmatrix(r, true)?)?);
                Ok(report)
            }
        }
    }
}

/// Every positive entry. Each passes its full cascade.
pub fn entries() -> Result<Vec<CatalogEntry>> {
    let q = FieldSpec::Rationals;
    let f3 = FieldSpec::prime(3)?;
    let f5 = FieldSpec::prime(5)?;
    let kz2 = group_algebra(2, q)?;
    Ok(vec![
        CatalogEntry::new(
            "k",
            "the trivial Hopf algebra k[Z_1]",
            Payload::Hopf(group_algebra(1, q)?),
        ),
        CatalogEntry::new(
            "kz2",
            "group algebra of Z_2 over Q",
            Payload::Hopf(kz2.clone()),
        ),
        CatalogEntry::new(
            "kz3",
            "group algebra of Z_3 over Q",
            Payload::Hopf(group_algebra(3, q)?),
        ),
        CatalogEntry::new(
            "kz3-f5",
            "group algebra of Z_3 over F_5",
            Payload::Hopf(group_algebra(3, f5)?),
        ),
        CatalogEntry::new(
            "kz8",
            "group algebra of Z_8 over Q",
            Payload::Hopf(group_algebra(8, q)?),
        ),
        CatalogEntry::new(
            "sweedler",
            "Sweedler's 4-dimensional Hopf algebra over Q",
            Payload::Hopf(sweedler(q)?),
        ),
        CatalogEntry::new(
            "truncated-monoid",
            "bialgebra {1, t}, t^2 = t, t grouplike; has no antipode",
            Payload::Bialgebra(truncated_monoid(q)?),
        ),
        CatalogEntry::new(
            "superline",
            "super line over kZ_2, Q",
            Payload::Braided(superline(q)?),
        ),
        CatalogEntry::new(
            "superline-f3",
            "super line over kZ_2, F_3",
            Payload::Braided(superline(f3)?),
        ),
        CatalogEntry::new(
            "superline-f5",
            "super line over kZ_2, F_5",
            Payload::Braided(superline(f5)?),
        ),
        CatalogEntry::new(
            "trivial-b",
            "B = k over kZ_2",
            Payload::Braided(trivial_bundle(&kz2)?),
        ),
        CatalogEntry::new(
            "tensor-z2-z2",
            "kZ_2 with trivial action and coaction of kZ_2",
            Payload::Braided(trivial_braiding(
                &cyclic_group_algebra(2, q, "B", "a")?,
                &kz2,
            )?),
        ),
        CatalogEntry::new(
            "over-k",
            "kZ_2 as B over H = k",
            Payload::Braided(trivial_braiding(
                &cyclic_group_algebra(2, q, "B", "a")?,
                &group_algebra(1, q)?,
            )?),
        ),
        CatalogEntry::new(
            "z2-rmatrix",
            "R = (1⊗1 + 1⊗g + g⊗1 − g⊗g)/2 on kZ_2",
            Payload::RMatrix(z2_rmatrix(q)?),
        ),
        CatalogEntry::new(
            "superline-rmatrix",
            "super line action with the Z_2 R-matrix; coaction to be derived",
            Payload::Bosonization(superline_module(q)?, z2_rmatrix(q)?),
        ),
    ])
}

/// Negative fixtures, each tagged with the axiom its checker must report.
pub fn counterexamples() -> Result<Vec<CatalogEntry>> {
    let q = FieldSpec::Rationals;
    let d = superline(q)?;
    let b = d.b();
    let mut out = Vec::new();

    // ε_B(x) = 1
    let counit = b.counit().with_entry(0, 1, Scalar::one(q))?;
    let bad = d.with_b(
        b.with_maps(
            b.mult().clone(),
            b.unit().clone(),
            b.comult().clone(),
            counit,
        )?,
        d.b_antipode().cloned(),
    )?;
    out.push(
        CatalogEntry::new(
            "eb-not-algebra-map",
            "super line with ε_B(x) = 1",
            Payload::Braided(bad),
        )
        .failing(AxiomId::BrCounitMult),
    );

    // ρ(x) = 1 ⊗ x
    let trivial = d.h().unit().tensor(&b.id())?;
    out.push(
        CatalogEntry::new(
            "coaction-trivial",
            "super line with ρ(x) = 1⊗x",
            Payload::Braided(d.with_coaction(trivial)?),
        )
        .failing(AxiomId::Cond1),
    );

    // Δ_B(x) = x ⊗ 1
    let comult = b.comult().with_entry(1, 1, Scalar::zero(q))?;
    let bad = d.with_b(
        b.with_maps(
            b.mult().clone(),
            b.unit().clone(),
            comult,
            b.counit().clone(),
        )?,
        d.b_antipode().cloned(),
    )?;
    out.push(
        CatalogEntry::new(
            "comult-no-counit",
            "super line with Δ_B(x) = x⊗1",
            Payload::Braided(bad),
        )
        .failing(AxiomId::CoalgCounitLeft),
    );

    // kℤ₂ with ε(g) = 0
    let h = group_algebra(2, q)?;
    let hb = h.bialgebra();
    let counit = hb.counit().with_entry(0, 1, Scalar::zero(q))?;
    let bad = HopfData::new(
        hb.with_maps(
            hb.mult().clone(),
            hb.unit().clone(),
            hb.comult().clone(),
            counit,
        )?,
        h.antipode().clone(),
    )?;
    out.push(
        CatalogEntry::new("kz2-eps-zero", "kZ_2 with ε(g) = 0", Payload::Hopf(bad))
            .failing(AxiomId::BialgCounitMult),
    );

    // R = 1 ⊗ g
    let r = RMatrix::new(
        hb.clone(),
        [0, 1, 0, 0]
            .iter()
            .map(|&c| Scalar::from_i64(q, c))
            .collect(),
    )?;
    out.push(
        CatalogEntry::new("rmatrix-one-g", "R = 1⊗g on kZ_2", Payload::RMatrix(r))
            .failing(AxiomId::QtCounitLeft),
    );

    Ok(out)
}

pub fn lookup(name: &str) -> Result<Option<CatalogEntry>> {
    Ok(entries()?
        .into_iter()
        .chain(counterexamples()?)
        .find(|e| e.name == name))
}

pub fn names() -> Result<Vec<String>> {
    Ok(entries()?
        .into_iter()
        .chain(counterexamples()?)
        .map(|e| e.name)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_algebra_inverses() {
        let f5 = FieldSpec::prime(5).unwrap();
        let h = group_algebra(3, f5).unwrap();
        let s = h.antipode();
        assert!(s.get(2, 1).is_one() && s.get(1, 2).is_one() && s.get(0, 0).is_one());
        let trivial = group_algebra(1, FieldSpec::Rationals).unwrap();
        assert_eq!(trivial.dim(), 1);
        assert!(group_algebra(0, FieldSpec::Rationals).is_err());
    }

    #[test]
    fn characteristic_two_rejected() {
        let f2 = FieldSpec::prime(2).unwrap();
        assert!(matches!(superline(f2), Err(Error::InvalidParameter(_))));
        assert!(matches!(z2_rmatrix(f2), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn every_positive_entry_passes() {
        for e in entries().unwrap() {
            let r = e.check().unwrap();
            assert!(r.ok, "{}: {}", e.name, r);
        }
    }

    #[test]
    fn every_counterexample_fails_its_family() {
        for e in counterexamples().unwrap() {
            let r = e.check().unwrap();
            let id = e.expected_failure.unwrap();
            assert!(
                r.has_family_failure(id.family()),
                "{} should fail {}: {}",
                e.name,
                id,
                r
            );
        }
    }
}
