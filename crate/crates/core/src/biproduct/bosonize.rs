use crate::error::{Error, Result};
use crate::exactla::{solve_linear, LinMap, Scalar, SpaceSig};
use crate::report::{AxiomId, AxiomResult, CheckReport};
use crate::structures::BialgebraData;
use crate::ydcat::{self, ActionData, BraidedHopfData, CoactionData};

use super::smash::{build_biproduct, BiproductData};

/// Multiplication of the algebra `H ⊗ H`, i.e. `(m ⊗ m) ∘ (id ⊗ τ ⊗ id)`.
fn square_mult(h: &BialgebraData) -> Result<LinMap> {
    let v = h.space();
    let id = h.id();
    let shuffle = id.tensor(&LinMap::flip(h.field(), v, v))?.tensor(&id)?;
    h.mult().tensor(h.mult())?.compose(&shuffle)
}

/// Multiplication of `H ⊗ H ⊗ H`.
fn cube_mult(h: &BialgebraData) -> Result<LinMap> {
    let dom = SpaceSig::power(h.space(), 6);
    let shuffle = LinMap::permutation(h.field(), &dom, &[0, 3, 1, 4, 2, 5]);
    let m = h.mult();
    m.tensor(m)?.tensor(m)?.compose(&shuffle)
}

/// A universal R-matrix candidate `R ∈ H ⊗ H`, stored with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    h: BialgebraData,
    element: LinMap,
    inverse: LinMap,
}

impl RMatrix {
    /// `coefficients[i·n + j]` is the coefficient of `hᵢ ⊗ hⱼ`.
    /// Fails with [`Error::NotInvertible`] if `R` has no inverse in `H ⊗ H`.
    pub fn new(h: BialgebraData, coefficients: Vec<Scalar>) -> Result<Self> {
        let field = h.field();
        let hh = h.space().concat(h.space());
        let element = LinMap::from_vector(field, hh.clone(), coefficients)?;
        let m2 = square_mult(&h)?;
        let left_mult = m2.compose(&element.tensor(&LinMap::identity(field, &hh))?)?;
        let rows: Vec<Vec<Scalar>> = (0..left_mult.rows())
            .map(|r| {
                (0..left_mult.cols())
                    .map(|c| left_mult.get(r, c).clone())
                    .collect()
            })
            .collect();
        let one = h.unit().tensor(h.unit())?;
        let x = solve_linear(field, rows, one.column(0))?
            .ok_or_else(|| Error::NotInvertible("R has no left inverse in H⊗H".into()))?;
        let inverse = LinMap::from_vector(field, hh, x)?;
        if !m2.compose(&inverse.tensor(&element)?)?.maps_equal(&one) {
            return Err(Error::NotInvertible(
                "left inverse of R is not a right inverse".into(),
            ));
        }
        Ok(RMatrix {
            h,
            element,
            inverse,
        })
    }

    pub fn h(&self) -> &BialgebraData {
        &self.h
    }

    /// `R` as a map `k → H ⊗ H`.
    pub fn element(&self) -> &LinMap {
        &self.element
    }

    pub fn inverse(&self) -> &LinMap {
        &self.inverse
    }

    pub fn coefficients(&self) -> Vec<Scalar> {
        self.element.column(0)
    }
}

/// The standard left quasitriangularity axioms:
/// `R Δ(h) = Δᵒᵖ(h) R`, `(Δ⊗id)R = R₁₃R₂₃`, `(id⊗Δ)R = R₁₃R₁₂`,
/// `(ε⊗id)R = 1 = (id⊗ε)R`.
pub fn check_quasitriangular(r: &RMatrix) -> Result<CheckReport> {
    let h = &r.h;
    let field = h.field();
    let v = h.space();
    let id = h.id();
    let big_r = &r.element;
    let m2 = square_mult(h)?;
    let m3 = cube_mult(h)?;
    let delta_op = LinMap::flip(field, v, v).compose(h.comult())?;

    let intertwine_lhs = m2.compose(&big_r.tensor(h.comult())?)?;
    let intertwine_rhs = m2.compose(&delta_op.tensor(big_r)?)?;

    let r13 = id.tensor(h.unit())?.tensor(&id)?.compose(big_r)?;
    let r23 = h.unit().tensor(big_r)?;
    let r12 = big_r.tensor(h.unit())?;
    let left_lhs = h.comult().tensor(&id)?.compose(big_r)?;
    let left_rhs = m3.compose(&r13.tensor(&r23)?)?;
    let right_lhs = id.tensor(h.comult())?.compose(big_r)?;
    let right_rhs = m3.compose(&r13.tensor(&r12)?)?;

    let counit_left = h.counit().tensor(&id)?.compose(big_r)?;
    let counit_right = id.tensor(h.counit())?.compose(big_r)?;

    let s = "R";
    Ok(CheckReport::new(vec![
        AxiomResult::from_maps(AxiomId::QtIntertwine, s, &intertwine_lhs, &intertwine_rhs)?,
        AxiomResult::from_maps(AxiomId::QtComultLeft, s, &left_lhs, &left_rhs)?,
        AxiomResult::from_maps(AxiomId::QtComultRight, s, &right_lhs, &right_rhs)?,
        AxiomResult::from_maps(AxiomId::QtCounitLeft, s, &counit_left, h.unit())?,
        AxiomResult::from_maps(AxiomId::QtCounitRight, s, &counit_right, h.unit())?,
    ]))
}

fn require(report: CheckReport, force: bool) -> Result<()> {
    if report.ok || force {
        Ok(())
    } else {
        Err(Error::HypothesisFailure(Box::new(report)))
    }
}

/// `ρ(b) = R⁻¹(1 ⊗ b)`: the first leg of `R⁻¹` lands in `H`, the second
/// acts on `b`, i.e. `ρ = (id_H ⊗ α) ∘ (R⁻¹ ⊗ id_B)`.
pub fn bosonize_coaction(act: &ActionData, r: &RMatrix, force: bool) -> Result<CoactionData> {
    act.h().space().ensure_compatible(r.h.space())?;
    if !force {
        let mut pre = check_quasitriangular(r)?;
        pre.extend(ydcat::check_module(act)?);
        require(pre, false)?;
    }
    let id_b = LinMap::identity(r.h.field(), act.b_space());
    let rho = act
        .h()
        .id()
        .tensor(act.action())?
        .compose(&r.inverse.tensor(&id_b)?)?;
    let out = CoactionData::new(act.h().clone(), act.b_space().clone(), rho)?;
    if !force {
        require(ydcat::check_comodule(&out)?, false)?;
    }
    Ok(out)
}

/// A bialgebra (optionally Hopf) `B` in left `H`-modules, before a coaction
/// has been chosen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleBialgebraData {
    pub b: BialgebraData,
    pub b_antipode: Option<LinMap>,
    pub h: BialgebraData,
    pub h_antipode: Option<LinMap>,
    pub action: LinMap,
}

impl ModuleBialgebraData {
    pub fn action_data(&self) -> Result<ActionData> {
        ActionData::new(self.h.clone(), self.b.space().clone(), self.action.clone())
    }

    /// Attaches the coaction derived from `r`.
    pub fn with_rmatrix(&self, r: &RMatrix, force: bool) -> Result<BraidedHopfData> {
        let coaction = bosonize_coaction(&self.action_data()?, r, force)?;
        BraidedHopfData::new(
            self.b.clone(),
            self.b_antipode.clone(),
            self.h.clone(),
            self.h_antipode.clone(),
            self.action.clone(),
            coaction.coaction().clone(),
        )
    }
}

/// Derives the coaction from `r`, then builds the biproduct. The full
/// hypothesis bundle is re-checked rather than assumed.
pub fn bosonize(m: &ModuleBialgebraData, r: &RMatrix, force: bool) -> Result<BiproductData> {
    let d = m.with_rmatrix(r, force)?;
    build_biproduct(&d, force)
}
