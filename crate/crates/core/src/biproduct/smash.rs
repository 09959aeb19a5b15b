use crate::error::{Error, Result};
use crate::exactla::{Factor, FieldSpec, LinMap, Scalar, SpaceSig};
use crate::report::CheckReport;
use crate::structures::{self, AlgebraData, BialgebraData, CoalgebraData, HopfData};
use crate::ydcat::{self, BraidedHopfData};

/// The single-factor space `B⋆H` with basis labels `b⋆h`.
pub fn biproduct_space(b: &SpaceSig, h: &SpaceSig) -> Result<SpaceSig> {
    let name = format!(
        "{}⋆{}",
        structures::subject_of(b),
        structures::subject_of(h)
    );
    let basis = (0..b.dim())
        .flat_map(|i| (0..h.dim()).map(move |j| (i, j)))
        .map(|(i, j)| format!("{}⋆{}", b.label(i), h.label(j)))
        .collect();
    Ok(SpaceSig::single(&Factor::new(name, basis)?))
}

fn require(report: CheckReport, force: bool) -> Result<()> {
    if report.ok || force {
        Ok(())
    } else {
        Err(Error::HypothesisFailure(Box::new(report)))
    }
}

fn unit_vector(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    (0..n)
        .map(|k| {
            if k == i {
                Scalar::one(field)
            } else {
                Scalar::zero(field)
            }
        })
        .collect()
}

fn outer(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| x * y))
        .collect()
}

/// Nonzero entries of column `col`, as `(row, value)`.
fn column_terms(m: &LinMap, col: usize) -> Vec<(usize, Scalar)> {
    (0..m.rows())
        .filter_map(|r| {
            let v = m.get(r, col);
            (!v.is_zero()).then(|| (r, v.clone()))
        })
        .collect()
}

/// `(a⋆g)(b⋆h) = Σ a(g₁·b) ⋆ g₂h` on `B ⊗ H`, unit `1 ⋆ 1`.
///
/// Requires the module and module-algebra checks to pass unless `force`.
pub fn smash_product(d: &BraidedHopfData, force: bool) -> Result<AlgebraData> {
    if !force {
        let mut pre = ydcat::check_module(&d.action_data())?;
        pre.extend(ydcat::check_module_algebra(d)?);
        require(pre, false)?;
    }
    let field = d.field();
    let (nb, nh) = (d.b().dim(), d.h().dim());
    let n = nb * nh;
    let space = biproduct_space(d.b().space(), d.h().space())?;
    let (mb, mh, dh, alpha) = (d.b().mult(), d.h().mult(), d.h().comult(), d.action());

    let mut entries = Vec::new();
    for i in 0..nb {
        for j in 0..nh {
            let coproduct = column_terms(dh, j);
            for k in 0..nb {
                for l in 0..nh {
                    let col = (i * nh + j) * n + (k * nh + l);
                    for (pq, c1) in &coproduct {
                        let (p, q) = (pq / nh, pq % nh);
                        for (r, c2) in column_terms(alpha, p * nb + k) {
                            let c12 = c1 * &c2;
                            for (s, c3) in column_terms(mb, i * nb + r) {
                                let c123 = &c12 * &c3;
                                for (t, c4) in column_terms(mh, q * nh + l) {
                                    entries.push((s * nh + t, col, &c123 * &c4));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let mult = LinMap::from_entries(field, space.concat(&space), space.clone(), entries)?;
    let one = outer(&d.b().unit().column(0), &d.h().unit().column(0));
    let unit = LinMap::from_vector(field, space.clone(), one)?;
    AlgebraData::new(space, mult, unit)
}

/// `Δ(b⋆h) = Σ b₁ ⋆ (b₂)₋₁h₁ ⊗ (b₂)₀ ⋆ h₂`, `ε(b⋆h) = ε(b)ε(h)`.
///
/// Requires the comodule and comodule-coalgebra checks to pass unless `force`.
pub fn smash_coproduct(d: &BraidedHopfData, force: bool) -> Result<CoalgebraData> {
    if !force {
        let mut pre = ydcat::check_comodule(&d.coaction_data())?;
        pre.extend(ydcat::check_comodule_coalgebra(d)?);
        require(pre, false)?;
    }
    let field = d.field();
    let (nb, nh) = (d.b().dim(), d.h().dim());
    let n = nb * nh;
    let space = biproduct_space(d.b().space(), d.h().space())?;
    let (db, dh, mh, rho) = (d.b().comult(), d.h().comult(), d.h().mult(), d.coaction());

    let mut entries = Vec::new();
    for i in 0..nb {
        for j in 0..nh {
            let col = i * nh + j;
            for (pq, c1) in column_terms(db, i) {
                let (p, q) = (pq / nb, pq % nb);
                for (uv, c2) in column_terms(rho, q) {
                    let (u, v) = (uv / nb, uv % nb);
                    let c12 = &c1 * &c2;
                    for (st, c3) in column_terms(dh, j) {
                        let (s, t) = (st / nh, st % nh);
                        let c123 = &c12 * &c3;
                        for (w, c4) in column_terms(mh, u * nh + s) {
                            let row = (p * nh + w) * n + (v * nh + t);
                            entries.push((row, col, &c123 * &c4));
                        }
                    }
                }
            }
        }
    }
    let comult = LinMap::from_entries(field, space.clone(), space.concat(&space), entries)?;
    let eps = outer(d.b().counit().entries(), d.h().counit().entries());
    let counit = LinMap::new(field, space.clone(), SpaceSig::unit(), eps)?;
    CoalgebraData::new(space, comult, counit)
}

/// The biproduct bialgebra `B⋆H`, with antipode when both `S_B` and `S_H` exist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiproductData {
    bialgebra: BialgebraData,
    antipode: Option<LinMap>,
    source: BraidedHopfData,
}

impl BiproductData {
    pub fn bialgebra(&self) -> &BialgebraData {
        &self.bialgebra
    }

    pub fn antipode(&self) -> Option<&LinMap> {
        self.antipode.as_ref()
    }

    pub fn hopf(&self) -> Option<HopfData> {
        self.antipode
            .as_ref()
            .map(|s| HopfData::new(self.bialgebra.clone(), s.clone()).expect("antipode signature"))
    }

    pub fn source(&self) -> &BraidedHopfData {
        &self.source
    }

    pub fn space(&self) -> &SpaceSig {
        self.bialgebra.space()
    }

    pub fn dim(&self) -> usize {
        self.bialgebra.dim()
    }

    /// Full structure cascade on the constructed bialgebra.
    pub fn check(&self) -> Result<CheckReport> {
        structures::check_cascade(&self.bialgebra, self.antipode.as_ref())
    }
}

fn biproduct_antipode(
    d: &BraidedHopfData,
    product: &AlgebraData,
    s_b: &LinMap,
    s_h: &LinMap,
) -> Result<LinMap> {
    let field = d.field();
    let (nb, nh) = (d.b().dim(), d.h().dim());
    let space = product.space().clone();
    let one_b = d.b().unit().column(0);
    let one_h = d.h().unit().column(0);
    let zero = vec![Scalar::zero(field); nb * nh];

    let mut columns = Vec::with_capacity(nb * nh);
    for i in 0..nb {
        for j in 0..nh {
            let mut acc = zero.clone();
            for (uv, c) in column_terms(d.coaction(), i) {
                let (u, v) = (uv / nb, uv % nb);
                let hu_hj = d
                    .h()
                    .algebra()
                    .multiply(&unit_vector(field, nh, u), &unit_vector(field, nh, j));
                let left = outer(&one_b, &s_h.apply(&hu_hj)?);
                let right = outer(&s_b.column(v), &one_h);
                let term = product.multiply(&left, &right);
                for (a, t) in acc.iter_mut().zip(&term) {
                    *a = &*a + &(&c * t);
                }
            }
            columns.push(acc);
        }
    }
    Ok(LinMap::from_fn(field, space.clone(), space, |r, col| {
        columns[col][r].clone()
    }))
}

/// Builds `B⋆H` from the smash product and smash coproduct.
///
/// Unless `force`, the full hypothesis bundle must pass first, and the
/// output is re-checked: a failure there is reported as
/// [`Error::StructuralInconsistency`].
pub fn build_biproduct(d: &BraidedHopfData, force: bool) -> Result<BiproductData> {
    let hypotheses = ydcat::check_theorem_hypotheses(d)?;
    let verified = hypotheses.ok;
    require(hypotheses, force)?;

    let algebra = smash_product(d, true)?;
    let coalgebra = smash_coproduct(d, true)?;
    let antipode = match (d.b_antipode(), d.h_antipode()) {
        (Some(s_b), Some(s_h)) => Some(biproduct_antipode(d, &algebra, s_b, s_h)?),
        _ => None,
    };
    let bialgebra = BialgebraData::new(algebra, coalgebra)?;
    let out = BiproductData {
        bialgebra,
        antipode,
        source: d.clone(),
    };

    if verified {
        let post = out.check()?;
        if !post.ok {
            return Err(Error::StructuralInconsistency(format!(
                "biproduct fails {} although every hypothesis holds",
                post.failed_ids().join(", ")
            )));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn basis(space: &SpaceSig, label: &str) -> usize {
        (0..space.dim()).find(|&i| space.label(i) == label).unwrap()
    }

    #[test]
    fn superline_products() {
        let d = catalog::superline(q()).unwrap();
        let a = smash_product(&d, false).unwrap();
        let sp = a.space().clone();
        let n = sp.dim();
        let e = |l: &str| unit_vector(q(), n, basis(&sp, l));
        let neg = |v: Vec<Scalar>| v.into_iter().map(|x| -x).collect::<Vec<_>>();
        assert_eq!(a.multiply(&e("x⋆1"), &e("x⋆1")), vec![Scalar::zero(q()); 4]);
        assert_eq!(a.multiply(&e("1⋆g"), &e("x⋆1")), neg(e("x⋆g")));
        assert_eq!(a.multiply(&e("x⋆1"), &e("1⋆g")), e("x⋆g"));
        assert_eq!(a.multiply(&e("x⋆g"), &e("x⋆g")), vec![Scalar::zero(q()); 4]);
    }

    #[test]
    fn superline_coproduct_of_x() {
        let d = catalog::superline(q()).unwrap();
        let c = smash_coproduct(&d, false).unwrap();
        let sp = c.space().clone();
        let col = basis(&sp, "x⋆1");
        let terms: Vec<String> = (0..c.comult().rows())
            .filter(|&r| !c.comult().get(r, col).is_zero())
            .map(|r| format!("{} {}", c.comult().get(r, col), sp.concat(&sp).label(r)))
            .collect();
        assert_eq!(terms, ["1 1⋆g⊗x⋆1", "1 x⋆1⊗1⋆1"]);
    }

    #[test]
    fn preconditions_enforced_without_force() {
        let d = catalog::superline(q()).unwrap();
        let bad = d
            .with_action(d.action().scale(&Scalar::from_i64(q(), 2)).unwrap())
            .unwrap();
        assert!(matches!(
            smash_product(&bad, false),
            Err(Error::HypothesisFailure(_))
        ));
        assert!(smash_product(&bad, true).is_ok());
        assert!(matches!(
            build_biproduct(&bad, false),
            Err(Error::HypothesisFailure(_))
        ));
    }

    #[test]
    fn superline_antipode_on_x() {
        let d = catalog::superline(q()).unwrap();
        let bp = build_biproduct(&d, false).unwrap();
        let s = bp.antipode().unwrap();
        let sp = bp.space();
        // S(x⋆1) = x⋆g
        let col = basis(sp, "x⋆1");
        let image: Vec<_> = s.column(col);
        assert_eq!(image, unit_vector(q(), 4, basis(sp, "x⋆g")));
    }
}
