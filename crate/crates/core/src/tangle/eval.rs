use super::ast::TangleExpr;
use super::env::TangleEnv;
use crate::error::{Error, Result};
use crate::exactla::LinMap;
use crate::report::{AxiomId, AxiomResult, CheckReport};

/// Input and output wires of a diagram.
pub type Wires = (Vec<String>, Vec<String>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangleEquation {
    pub label: String,
    pub lhs: TangleExpr,
    pub rhs: TangleExpr,
}

impl TangleEquation {
    pub fn new(label: &str, lhs: TangleExpr, rhs: TangleExpr) -> Self {
        TangleEquation {
            label: label.to_string(),
            lhs,
            rhs,
        }
    }
}

pub fn typecheck(e: &TangleExpr, env: &TangleEnv) -> Result<Wires> {
    match e {
        TangleExpr::Gen(name) => {
            let g = env.generator(name)?;
            Ok((g.source.clone(), g.target.clone()))
        }
        TangleExpr::Id(x) => {
            env.object(x)?;
            Ok((vec![x.clone()], vec![x.clone()]))
        }
        TangleExpr::Swap(a, b) => {
            env.object(a)?;
            env.object(b)?;
            Ok((vec![a.clone(), b.clone()], vec![b.clone(), a.clone()]))
        }
        TangleExpr::Tensor(xs) => {
            let (mut src, mut tgt) = (Vec::new(), Vec::new());
            for x in xs {
                let (s, t) = typecheck(x, env)?;
                src.extend(s);
                tgt.extend(t);
            }
            Ok((src, tgt))
        }
        TangleExpr::Compose(xs) => {
            let mut steps = xs.iter();
            let first = steps
                .next()
                .ok_or_else(|| Error::Malformed("empty composition".into()))?;
            let (src, mut tgt) = typecheck(first, env)?;
            for (i, x) in steps.enumerate() {
                let (s, t) = typecheck(x, env)?;
                if s != tgt {
                    return Err(Error::WireMismatch {
                        step: i + 2,
                        expected: tgt.join(","),
                        found: s.join(","),
                    });
                }
                tgt = t;
            }
            Ok((src, tgt))
        }
    }
}

/// Applies `e` to the codomain wires of `acc` starting at `offset`.
fn apply_at(acc: LinMap, e: &TangleExpr, offset: usize, env: &TangleEnv) -> Result<LinMap> {
    match e {
        TangleExpr::Id(_) => Ok(acc),
        TangleExpr::Gen(name) => acc.then_local(offset, &env.generator(name)?.map),
        TangleExpr::Swap(a, b) => {
            let flip = LinMap::flip(
                env.field(),
                &env.sig(std::slice::from_ref(a))?,
                &env.sig(std::slice::from_ref(b))?,
            );
            acc.then_local(offset, &flip)
        }
        TangleExpr::Tensor(xs) => {
            let mut acc = acc;
            let mut at = offset;
            for x in xs {
                let (_, tgt) = typecheck(x, env)?;
                acc = apply_at(acc, x, at, env)?;
                at += tgt.len();
            }
            Ok(acc)
        }
        TangleExpr::Compose(xs) => xs
            .iter()
            .try_fold(acc, |acc, x| apply_at(acc, x, offset, env)),
    }
}

/// The linear map denoted by `e`: steps are applied top to bottom, so the
/// result is `bottom ∘ … ∘ top`.
pub fn eval(e: &TangleExpr, env: &TangleEnv) -> Result<LinMap> {
    let (src, _) = typecheck(e, env)?;
    let start = LinMap::identity(env.field(), &env.sig(&src)?);
    apply_at(start, e, 0, env)
}

/// Decides an equation by evaluating both sides.
pub fn check_equation(eq: &TangleEquation, env: &TangleEnv) -> Result<CheckReport> {
    let left = typecheck(&eq.lhs, env)?;
    let right = typecheck(&eq.rhs, env)?;
    if left != right {
        return Err(Error::SignatureMismatch {
            expected: format!("[{}] → [{}]", left.0.join(","), left.1.join(",")),
            found: format!("[{}] → [{}]", right.0.join(","), right.1.join(",")),
        });
    }
    let lhs = eval(&eq.lhs, env)?;
    let rhs = eval(&eq.rhs, env)?;
    let mut report = CheckReport::default();
    report.push(AxiomResult::from_maps(
        AxiomId::TangleEq,
        &eq.label,
        &lhs,
        &rhs,
    )?);
    Ok(report)
}

/// Checks every equation; results keep the input order.
pub fn check_all(eqs: &[TangleEquation], env: &TangleEnv) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    for eq in eqs {
        report.extend(check_equation(eq, env)?);
    }
    Ok(report)
}
