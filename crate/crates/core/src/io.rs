//! JSON structure files.
//!
//! ```json
//! {
//!   "field": {"kind": "Q"},
//!   "spaces": {"H": {"dim": 2, "basis": ["1", "g"]}},
//!   "algebra": {"H": {"mult": [[1, 1, 0, "1"]], "unit": [[0, "1"]]}},
//!   "coalgebra": {"H": {"comult": [[1, 1, 1, "1"]], "counit": [[1, "1"]]}},
//!   "antipode": {"H": [[1, 1, "1"]]},
//!   "action": {"h": "H", "b": "B", "entries": [[1, 1, 1, "-1"]]},
//!   "coaction": {"h": "H", "b": "B", "entries": [[1, 1, 1, "1"]]},
//!   "rmatrix": {"h": "H", "entries": [[0, 0, "1/2"]]}
//! }
//! ```
//!
//! Every sparse entry lists input indices, then output indices, then the
//! coefficient as a string:
//!
//! | section   | entry                 | meaning                     |
//! |-----------|-----------------------|-----------------------------|
//! | mult      | `[i, j, k, c]`        | `eᵢ·eⱼ` has `c·eₖ`          |
//! | unit      | `[k, c]`              | `1` has `c·eₖ`              |
//! | comult    | `[i, j, k, c]`        | `Δ(eᵢ)` has `c·eⱼ⊗eₖ`       |
//! | counit    | `[i, c]`              | `ε(eᵢ) = c`                 |
//! | antipode  | `[i, j, c]`           | `S(eᵢ)` has `c·eⱼ`          |
//! | action    | `[h, b, k, c]`        | `h·b` has `c·eₖ`            |
//! | coaction  | `[b, h, k, c]`        | `ρ(b)` has `c·h⊗eₖ`         |
//! | rmatrix   | `[i, j, c]`           | `R` has `c·eᵢ⊗eⱼ`           |
//!
//! Omitted entries are zero; repeated entries are summed.

use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::biproduct::{check_quasitriangular, BiproductData, ModuleBialgebraData, RMatrix};
use crate::catalog::{CatalogEntry, Payload};
use crate::error::{Error, Result};
use crate::exactla::{Factor, FieldSpec, LinMap, Prime, Scalar, SpaceSig};
use crate::report::CheckReport;
use crate::structures::{self, AlgebraData, BialgebraData, CoalgebraData, HopfData};
use crate::ydcat::{self, ActionData, BraidedHopfData, CoactionData};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FieldDecl {
    Q,
    Fp { p: u64 },
}

impl FieldDecl {
    pub fn resolve(self) -> Result<FieldSpec> {
        match self {
            FieldDecl::Q => Ok(FieldSpec::Rationals),
            FieldDecl::Fp { p } => Ok(FieldSpec::PrimeField(Prime::try_from(p)?)),
        }
    }
}

impl From<FieldSpec> for FieldDecl {
    fn from(f: FieldSpec) -> Self {
        match f {
            FieldSpec::Rationals => FieldDecl::Q,
            FieldSpec::PrimeField(p) => FieldDecl::Fp {
                p: u64::from(p.get()),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDecl {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
}

/// `[idx…, "coef"]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Entry {
    pub indices: Vec<usize>,
    pub coef: String,
}

impl Serialize for Entry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut v: Vec<Value> = self.indices.iter().map(|&i| Value::from(i)).collect();
        v.push(Value::from(self.coef.clone()));
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Entry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let mut v = Vec::<Value>::deserialize(d)?;
        let coef = match v.pop() {
            Some(Value::String(s)) => s,
            Some(other) => {
                return Err(D::Error::custom(format!(
                    "coefficient must be a string, found {other}"
                )))
            }
            None => return Err(D::Error::custom("empty entry")),
        };
        let indices = v
            .into_iter()
            .map(|x| {
                x.as_u64()
                    .and_then(|i| usize::try_from(i).ok())
                    .ok_or_else(|| {
                        D::Error::custom(format!("index must be a non-negative integer, found {x}"))
                    })
            })
            .collect::<std::result::Result<_, _>>()?;
        Ok(Entry { indices, coef })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDecl {
    pub mult: Vec<Entry>,
    pub unit: Vec<Entry>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoalgebraDecl {
    pub comult: Vec<Entry>,
    pub counit: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDecl {
    pub h: String,
    pub b: String,
    pub entries: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RMatrixDecl {
    pub h: String,
    pub entries: Vec<Entry>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldDecl>,
    pub spaces: BTreeMap<String, SpaceDecl>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub algebra: BTreeMap<String, AlgebraDecl>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub coalgebra: BTreeMap<String, CoalgebraDecl>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub antipode: BTreeMap<String, Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<ModuleDecl>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coaction: Option<ModuleDecl>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rmatrix: Option<RMatrixDecl>,
}

/// JSON with short arrays kept on one line.
fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(xs) if xs.iter().all(|x| !x.is_array() && !x.is_object()) => {
            out.push_str(&serde_json::to_string(v).expect("scalar array"));
        }
        Value::Array(xs) if xs.is_empty() => out.push_str("[]"),
        Value::Array(xs) => {
            out.push_str("[\n");
            for (i, x) in xs.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                render(x, indent + 1, out);
                out.push_str(if i + 1 < xs.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(m) if m.is_empty() => out.push_str("{}"),
        Value::Object(m) => {
            out.push_str("{\n");
            for (i, (k, x)) in m.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&serde_json::to_string(k).expect("key"));
                out.push_str(": ");
                render(x, indent + 1, out);
                out.push_str(if i + 1 < m.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        scalar => out.push_str(&serde_json::to_string(scalar).expect("scalar")),
    }
}

fn entries_of(m: &LinMap, index: impl Fn(usize, usize) -> Vec<usize>) -> Vec<Entry> {
    let mut out: Vec<Entry> = m
        .nonzeros()
        .map(|(r, c, v)| Entry {
            indices: index(r, c),
            coef: v.to_string(),
        })
        .collect();
    out.sort();
    out
}

fn single_name(space: &SpaceSig) -> Result<&str> {
    match space.factors() {
        [f] => Ok(f.name()),
        _ => Err(Error::Malformed(format!(
            "space {space} is not a single named space"
        ))),
    }
}

impl StructureFile {
    pub fn new(field: FieldSpec) -> Self {
        StructureFile {
            field: Some(field.into()),
            ..Default::default()
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut out = String::new();
        render(
            &serde_json::to_value(self).expect("structure file serializes"),
            0,
            &mut out,
        );
        out.push('\n');
        out
    }

    fn add_space(&mut self, space: &SpaceSig) -> Result<String> {
        let name = single_name(space)?.to_string();
        let basis = space.factors()[0].basis().to_vec();
        self.spaces.insert(
            name.clone(),
            SpaceDecl {
                dim: basis.len(),
                basis: Some(basis),
            },
        );
        Ok(name)
    }

    pub fn add_algebra(&mut self, a: &AlgebraData) -> Result<()> {
        let n = a.dim();
        let name = self.add_space(a.space())?;
        let mult = entries_of(a.mult(), |r, c| vec![c / n, c % n, r]);
        let unit = entries_of(a.unit(), |r, _| vec![r]);
        self.algebra.insert(name, AlgebraDecl { mult, unit });
        Ok(())
    }

    pub fn add_coalgebra(&mut self, c: &CoalgebraData) -> Result<()> {
        let n = c.dim();
        let name = self.add_space(c.space())?;
        let comult = entries_of(c.comult(), |r, col| vec![col, r / n, r % n]);
        let counit = entries_of(c.counit(), |_, col| vec![col]);
        self.coalgebra
            .insert(name, CoalgebraDecl { comult, counit });
        Ok(())
    }

    pub fn add_bialgebra(&mut self, b: &BialgebraData) -> Result<()> {
        self.add_algebra(b.algebra())?;
        self.add_coalgebra(b.coalgebra())
    }

    pub fn add_antipode(&mut self, space: &SpaceSig, s: &LinMap) -> Result<()> {
        let name = self.add_space(space)?;
        self.antipode.insert(name, entries_of(s, |r, c| vec![c, r]));
        Ok(())
    }

    pub fn add_hopf(&mut self, h: &HopfData) -> Result<()> {
        self.add_bialgebra(h.bialgebra())?;
        self.add_antipode(h.space(), h.antipode())
    }

    fn add_optional_hopf(&mut self, b: &BialgebraData, s: Option<&LinMap>) -> Result<()> {
        self.add_bialgebra(b)?;
        match s {
            Some(s) => self.add_antipode(b.space(), s),
            None => Ok(()),
        }
    }

    pub fn set_action(&mut self, h: &SpaceSig, b: &SpaceSig, action: &LinMap) -> Result<()> {
        let nb = b.dim();
        let entries = entries_of(action, |r, c| vec![c / nb, c % nb, r]);
        self.action = Some(ModuleDecl {
            h: single_name(h)?.into(),
            b: single_name(b)?.into(),
            entries,
        });
        Ok(())
    }

    pub fn set_coaction(&mut self, h: &SpaceSig, b: &SpaceSig, coaction: &LinMap) -> Result<()> {
        let nb = b.dim();
        let entries = entries_of(coaction, |r, c| vec![c, r / nb, r % nb]);
        self.coaction = Some(ModuleDecl {
            h: single_name(h)?.into(),
            b: single_name(b)?.into(),
            entries,
        });
        Ok(())
    }

    pub fn set_rmatrix(&mut self, r: &RMatrix) -> Result<()> {
        let n = r.h().dim();
        let entries = entries_of(r.element(), |row, _| vec![row / n, row % n]);
        self.rmatrix = Some(RMatrixDecl {
            h: single_name(r.h().space())?.into(),
            entries,
        });
        Ok(())
    }

    pub fn from_braided(d: &BraidedHopfData) -> Result<Self> {
        let mut f = StructureFile::new(d.field());
        f.add_optional_hopf(d.b(), d.b_antipode())?;
        f.add_optional_hopf(d.h(), d.h_antipode())?;
        f.set_action(d.h().space(), d.b().space(), d.action())?;
        f.set_coaction(d.h().space(), d.b().space(), d.coaction())?;
        Ok(f)
    }

    pub fn from_module(m: &ModuleBialgebraData, r: &RMatrix) -> Result<Self> {
        let mut f = StructureFile::new(m.b.field());
        f.add_optional_hopf(&m.b, m.b_antipode.as_ref())?;
        f.add_optional_hopf(&m.h, m.h_antipode.as_ref())?;
        f.set_action(m.h.space(), m.b.space(), &m.action)?;
        f.set_rmatrix(r)?;
        Ok(f)
    }

    pub fn from_biproduct(bp: &BiproductData) -> Result<Self> {
        let mut f = StructureFile::new(bp.bialgebra().field());
        f.add_optional_hopf(bp.bialgebra(), bp.antipode())?;
        Ok(f)
    }

    pub fn from_catalog(entry: &CatalogEntry) -> Result<Self> {
        match &entry.payload {
            Payload::Bialgebra(b) => {
                let mut f = StructureFile::new(b.field());
                f.add_bialgebra(b)?;
                Ok(f)
            }
            Payload::Hopf(h) => {
                let mut f = StructureFile::new(h.field());
                f.add_hopf(h)?;
                Ok(f)
            }
            Payload::Braided(d) => StructureFile::from_braided(d),
            Payload::RMatrix(r) => {
                let mut f = StructureFile::new(r.h().field());
                f.add_bialgebra(r.h())?;
                f.set_rmatrix(r)?;
                Ok(f)
            }
            Payload::Bosonization(m, r) => StructureFile::from_module(m, r),
        }
    }

    /// Resolves the field: the file's declaration, else `fallback`, else ℚ.
    /// Supplying both is an error.
    pub fn load(&self, fallback: Option<FieldSpec>) -> Result<Document> {
        let field = match (self.field, fallback) {
            (Some(_), Some(_)) => {
                return Err(Error::Malformed(
                    "the file declares its field; refusing a field override".into(),
                ));
            }
            (Some(decl), None) => decl.resolve()?,
            (None, Some(f)) => f,
            (None, None) => FieldSpec::Rationals,
        };
        Document::build(self, field)
    }
}

/// A structure file with every section turned into exact maps.
#[derive(Clone, Debug)]
pub struct Document {
    pub field: FieldSpec,
    pub spaces: BTreeMap<String, SpaceSig>,
    pub algebras: BTreeMap<String, AlgebraData>,
    pub coalgebras: BTreeMap<String, CoalgebraData>,
    pub antipodes: BTreeMap<String, LinMap>,
    /// `(H, B, α)`.
    pub action: Option<(String, String, LinMap)>,
    /// `(H, B, ρ)`.
    pub coaction: Option<(String, String, LinMap)>,
    /// `(H, coefficients of R)`.
    pub rmatrix: Option<(String, Vec<Scalar>)>,
}

struct Ctx<'a> {
    field: FieldSpec,
    spaces: &'a BTreeMap<String, SpaceSig>,
}

impl Ctx<'_> {
    fn space(&self, name: &str) -> Result<&SpaceSig> {
        self.spaces
            .get(name)
            .ok_or_else(|| Error::Malformed(format!("unknown space {name:?}")))
    }

    /// Builds a map from entries with `arity` indices; `place` maps indices
    /// to `(row, col)`. `bounds` are the index limits.
    fn map(
        &self,
        what: &str,
        dom: SpaceSig,
        cod: SpaceSig,
        entries: &[Entry],
        bounds: &[usize],
        place: impl Fn(&[usize]) -> (usize, usize),
    ) -> Result<LinMap> {
        let mut triples = Vec::with_capacity(entries.len());
        for e in entries {
            if e.indices.len() != bounds.len() {
                return Err(Error::Malformed(format!(
                    "{what}: entry {:?} has {} indices, expected {}",
                    e.indices,
                    e.indices.len(),
                    bounds.len()
                )));
            }
            if let Some((i, b)) = e.indices.iter().zip(bounds).find(|(i, b)| i >= b) {
                return Err(Error::Malformed(format!(
                    "{what}: index {i} out of range 0..{b}"
                )));
            }
            let (r, c) = place(&e.indices);
            triples.push((r, c, Scalar::parse(self.field, &e.coef)?));
        }
        LinMap::from_entries(self.field, dom, cod, triples)
    }
}

impl Document {
    fn build(file: &StructureFile, field: FieldSpec) -> Result<Self> {
        let mut spaces = BTreeMap::new();
        for (name, decl) in &file.spaces {
            let factor = match &decl.basis {
                Some(basis) if basis.len() != decl.dim => {
                    return Err(Error::Malformed(format!(
                        "space {name:?}: {} basis names for dimension {}",
                        basis.len(),
                        decl.dim
                    )));
                }
                Some(basis) => Factor::new(name.clone(), basis.clone())?,
                None => Factor::with_dim(name.clone(), decl.dim)?,
            };
            spaces.insert(name.clone(), SpaceSig::single(&factor));
        }
        let ctx = Ctx {
            field,
            spaces: &spaces,
        };
        let k = SpaceSig::unit();

        let mut algebras = BTreeMap::new();
        for (name, decl) in &file.algebra {
            let v = ctx.space(name)?.clone();
            let n = v.dim();
            let vv = v.concat(&v);
            let what = format!("algebra {name}");
            let mult = ctx.map(&what, vv, v.clone(), &decl.mult, &[n, n, n], |x| {
                (x[2], x[0] * n + x[1])
            })?;
            let unit = ctx.map(&what, k.clone(), v.clone(), &decl.unit, &[n], |x| (x[0], 0))?;
            algebras.insert(name.clone(), AlgebraData::new(v, mult, unit)?);
        }

        let mut coalgebras = BTreeMap::new();
        for (name, decl) in &file.coalgebra {
            let v = ctx.space(name)?.clone();
            let n = v.dim();
            let vv = v.concat(&v);
            let what = format!("coalgebra {name}");
            let comult = ctx.map(&what, v.clone(), vv, &decl.comult, &[n, n, n], |x| {
                (x[1] * n + x[2], x[0])
            })?;
            let counit = ctx.map(&what, v.clone(), k.clone(), &decl.counit, &[n], |x| {
                (0, x[0])
            })?;
            coalgebras.insert(name.clone(), CoalgebraData::new(v, comult, counit)?);
        }

        let mut antipodes = BTreeMap::new();
        for (name, entries) in &file.antipode {
            let v = ctx.space(name)?.clone();
            let n = v.dim();
            let s = ctx.map(
                &format!("antipode {name}"),
                v.clone(),
                v,
                entries,
                &[n, n],
                |x| (x[1], x[0]),
            )?;
            antipodes.insert(name.clone(), s);
        }

        let action = match &file.action {
            Some(decl) => {
                let (h, b) = (ctx.space(&decl.h)?, ctx.space(&decl.b)?);
                let (nh, nb) = (h.dim(), b.dim());
                let m = ctx.map(
                    "action",
                    h.concat(b),
                    b.clone(),
                    &decl.entries,
                    &[nh, nb, nb],
                    |x| (x[2], x[0] * nb + x[1]),
                )?;
                Some((decl.h.clone(), decl.b.clone(), m))
            }
            None => None,
        };
        let coaction = match &file.coaction {
            Some(decl) => {
                let (h, b) = (ctx.space(&decl.h)?, ctx.space(&decl.b)?);
                let (nh, nb) = (h.dim(), b.dim());
                let m = ctx.map(
                    "coaction",
                    b.clone(),
                    h.concat(b),
                    &decl.entries,
                    &[nb, nh, nb],
                    |x| (x[1] * nb + x[2], x[0]),
                )?;
                Some((decl.h.clone(), decl.b.clone(), m))
            }
            None => None,
        };
        let rmatrix = match &file.rmatrix {
            Some(decl) => {
                let h = ctx.space(&decl.h)?;
                let n = h.dim();
                let m = ctx.map(
                    "rmatrix",
                    k.clone(),
                    h.concat(h),
                    &decl.entries,
                    &[n, n],
                    |x| (x[0] * n + x[1], 0),
                )?;
                Some((decl.h.clone(), m.column(0)))
            }
            None => None,
        };
        Ok(Document {
            field,
            spaces,
            algebras,
            coalgebras,
            antipodes,
            action,
            coaction,
            rmatrix,
        })
    }

    pub fn bialgebra(&self, name: &str) -> Result<BialgebraData> {
        let missing =
            |what: &str| Error::Malformed(format!("space {name:?} has no {what} section"));
        let a = self.algebras.get(name).ok_or_else(|| missing("algebra"))?;
        let c = self
            .coalgebras
            .get(name)
            .ok_or_else(|| missing("coalgebra"))?;
        BialgebraData::new(a.clone(), c.clone())
    }

    /// The single space carrying both an algebra and a coalgebra.
    pub fn only_bialgebra(&self) -> Result<String> {
        let names: Vec<&String> = self
            .algebras
            .keys()
            .filter(|n| self.coalgebras.contains_key(*n))
            .collect();
        match names.as_slice() {
            [n] => Ok((*n).clone()),
            [] => Err(Error::Malformed(
                "no space has both algebra and coalgebra sections".into(),
            )),
            _ => Err(Error::Malformed(
                "several bialgebras and no action to relate them".into(),
            )),
        }
    }

    pub fn hopf(&self, name: &str) -> Result<HopfData> {
        let s = self
            .antipodes
            .get(name)
            .ok_or_else(|| Error::Malformed(format!("space {name:?} has no antipode")))?;
        HopfData::new(self.bialgebra(name)?, s.clone())
    }

    /// `B` and `H` named by the action, else by the coaction.
    fn pair(&self) -> Result<(String, String)> {
        match (&self.action, &self.coaction) {
            (Some((ha, ba, _)), Some((hc, bc, _))) if (ha, ba) != (hc, bc) => {
                Err(Error::Malformed(format!(
                    "action relates {ha}/{ba} but coaction relates {hc}/{bc}"
                )))
            }
            (Some((h, b, _)), _) | (None, Some((h, b, _))) => Ok((b.clone(), h.clone())),
            (None, None) => Err(Error::Malformed("no action or coaction section".into())),
        }
    }

    pub fn braided(&self) -> Result<BraidedHopfData> {
        let (b, h) = self.pair()?;
        let (_, _, action) = self
            .action
            .as_ref()
            .ok_or_else(|| Error::Malformed("no action section".into()))?;
        let (_, _, coaction) = self
            .coaction
            .as_ref()
            .ok_or_else(|| Error::Malformed("no coaction section".into()))?;
        BraidedHopfData::new(
            self.bialgebra(&b)?,
            self.antipodes.get(&b).cloned(),
            self.bialgebra(&h)?,
            self.antipodes.get(&h).cloned(),
            action.clone(),
            coaction.clone(),
        )
    }

    pub fn module_bialgebra(&self) -> Result<ModuleBialgebraData> {
        let (_, _, action) = self
            .action
            .as_ref()
            .ok_or_else(|| Error::Malformed("no action section".into()))?;
        let (b, h) = self.pair()?;
        Ok(ModuleBialgebraData {
            b: self.bialgebra(&b)?,
            b_antipode: self.antipodes.get(&b).cloned(),
            h: self.bialgebra(&h)?,
            h_antipode: self.antipodes.get(&h).cloned(),
            action: action.clone(),
        })
    }

    pub fn rmatrix(&self) -> Result<RMatrix> {
        let (h, coeffs) = self
            .rmatrix
            .as_ref()
            .ok_or_else(|| Error::Malformed("no rmatrix section".into()))?;
        RMatrix::new(self.bialgebra(h)?, coeffs.clone())
    }

    /// Runs the largest check cascade the present sections allow.
    pub fn check(&self) -> Result<CheckReport> {
        if self.action.is_some() && self.coaction.is_some() {
            let mut report = ydcat::check_theorem_hypotheses(&self.braided()?)?;
            if self.rmatrix.is_some() {
                report.extend(check_quasitriangular(&self.rmatrix()?)?);
            }
            return Ok(report);
        }
        if self.action.is_some() && self.rmatrix.is_some() {
            let r = self.rmatrix()?;
            let mut report = check_quasitriangular(&r)?;
            report.extend(ydcat::check_theorem_hypotheses(
                &self.module_bialgebra()?.with_rmatrix(&r, true)?,
            )?);
            return Ok(report);
        }

        let mut report = CheckReport::default();
        for name in self.spaces.keys() {
            match (self.algebras.get(name), self.coalgebras.get(name)) {
                (Some(_), Some(_)) => report.extend(structures::check_cascade(
                    &self.bialgebra(name)?,
                    self.antipodes.get(name),
                )?),
                (Some(a), None) => report.extend(structures::check_algebra(a)?),
                (None, Some(c)) => report.extend(structures::check_coalgebra(c)?),
                (None, None) => {}
            }
        }
        if let Some((h, b, action)) = &self.action {
            let a = ActionData::new(self.bialgebra(h)?, self.spaces[b].clone(), action.clone())?;
            report.extend(ydcat::check_module(&a)?);
        }
        if let Some((h, b, coaction)) = &self.coaction {
            let c =
                CoactionData::new(self.bialgebra(h)?, self.spaces[b].clone(), coaction.clone())?;
            report.extend(ydcat::check_comodule(&c)?);
        }
        if self.rmatrix.is_some() {
            report.extend(check_quasitriangular(&self.rmatrix()?)?);
        }
        Ok(report)
    }
}
