use std::collections::BTreeMap;

use crate::biproduct::{build_biproduct, BiproductData};
use crate::error::{Error, Result};
use crate::exactla::{Factor, FieldSpec, LinMap, SpaceSig};
use crate::structures::BialgebraData;
use crate::ydcat::BraidedHopfData;

/// A named map with declared input and output wires.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub source: Vec<String>,
    pub target: Vec<String>,
    pub map: LinMap,
}

#[derive(Clone, Debug)]
pub struct TangleEnv {
    field: FieldSpec,
    objects: BTreeMap<String, Factor>,
    generators: BTreeMap<String, Generator>,
    aliases: BTreeMap<String, String>,
}

/// Alternative spellings accepted for the standard generators.
const STANDARD_ALIASES: [(&str, &str); 12] = [
    ("Δ_H", "cm_H"),
    ("Δ_B", "cm_B"),
    ("δ_H", "cm_H"),
    ("δ_B", "cm_B"),
    ("ε_H", "cu_H"),
    ("ε_B", "cu_B"),
    ("η_H", "u_H"),
    ("η_B", "u_B"),
    ("α", "act"),
    ("ρ", "coact"),
    ("Δ_BH", "cm_BH"),
    ("ε_BH", "cu_BH"),
];

fn basis_of(space: &SpaceSig) -> Vec<String> {
    (0..space.dim()).map(|i| space.label(i)).collect()
}

fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

impl TangleEnv {
    pub fn new(field: FieldSpec) -> Self {
        TangleEnv {
            field,
            objects: BTreeMap::new(),
            generators: BTreeMap::new(),
            aliases: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Declares a wire type; its factor takes the object's name.
    pub fn add_object(&mut self, name: &str, basis: Vec<String>) -> Result<()> {
        self.objects
            .insert(name.to_string(), Factor::new(name, basis)?);
        Ok(())
    }

    pub fn object(&self, name: &str) -> Result<&Factor> {
        self.objects
            .get(name)
            .ok_or_else(|| Error::UnknownObject(name.to_string()))
    }

    pub fn objects(&self) -> impl Iterator<Item = &str> {
        self.objects.keys().map(String::as_str)
    }

    /// The space carried by a list of wires.
    pub fn sig(&self, wires: &[String]) -> Result<SpaceSig> {
        Ok(SpaceSig::new(
            wires
                .iter()
                .map(|w| self.object(w).cloned())
                .collect::<Result<_>>()?,
        ))
    }

    /// Binds `name`; the map is relabelled onto the declared wires, which
    /// must have the same dimensions.
    pub fn add_generator(
        &mut self,
        name: &str,
        source: Vec<String>,
        target: Vec<String>,
        map: &LinMap,
    ) -> Result<()> {
        self.field.ensure_same(map.field())?;
        let (dom, cod) = (self.sig(&source)?, self.sig(&target)?);
        let map = map.relabel(dom, cod)?;
        self.generators.insert(
            name.to_string(),
            Generator {
                source,
                target,
                map,
            },
        );
        Ok(())
    }

    pub fn add_alias(&mut self, alias: &str, name: &str) {
        self.aliases.insert(alias.to_string(), name.to_string());
    }

    pub fn generator(&self, name: &str) -> Result<&Generator> {
        let key = self.aliases.get(name).map(String::as_str).unwrap_or(name);
        self.generators
            .get(key)
            .ok_or_else(|| Error::UnboundGenerator(name.to_string()))
    }

    pub fn generator_names(&self) -> impl Iterator<Item = &str> {
        self.generators.keys().map(String::as_str)
    }

    fn add_bialgebra(&mut self, x: &str, a: &BialgebraData) -> Result<()> {
        let one = vec![x.to_string()];
        let two = vec![x.to_string(), x.to_string()];
        self.add_generator(&format!("m_{x}"), two.clone(), one.clone(), a.mult())?;
        self.add_generator(&format!("u_{x}"), vec![], one.clone(), a.unit())?;
        self.add_generator(&format!("cm_{x}"), one.clone(), two, a.comult())?;
        self.add_generator(&format!("cu_{x}"), one, vec![], a.counit())
    }

    /// Objects `B`, `H` and generators `m_*`, `u_*`, `cm_*`, `cu_*`, `S_*`,
    /// `act`, `coact`, plus the biproduct maps `m_BH`, `u_BH`, `cm_BH`,
    /// `cu_BH`, `S_BH` on the wires `B, H`.
    pub fn standard(d: &BraidedHopfData) -> Result<Self> {
        let mut env = TangleEnv::new(d.field());
        env.add_object("B", basis_of(d.b().space()))?;
        env.add_object("H", basis_of(d.h().space()))?;
        env.add_bialgebra("B", d.b())?;
        env.add_bialgebra("H", d.h())?;
        if let Some(s) = d.b_antipode() {
            env.add_generator("S_B", names(&["B"]), names(&["B"]), s)?;
        }
        if let Some(s) = d.h_antipode() {
            env.add_generator("S_H", names(&["H"]), names(&["H"]), s)?;
        }
        env.add_generator("act", names(&["H", "B"]), names(&["B"]), d.action())?;
        env.add_generator("coact", names(&["B"]), names(&["H", "B"]), d.coaction())?;
        env.add_biproduct(&build_biproduct(d, true)?)?;
        for (alias, name) in STANDARD_ALIASES {
            env.add_alias(alias, name);
        }
        Ok(env)
    }

    fn add_biproduct(&mut self, bp: &BiproductData) -> Result<()> {
        let bh = names(&["B", "H"]);
        let bhbh = names(&["B", "H", "B", "H"]);
        let a = bp.bialgebra();
        self.add_generator("m_BH", bhbh.clone(), bh.clone(), a.mult())?;
        self.add_generator("u_BH", vec![], bh.clone(), a.unit())?;
        self.add_generator("cm_BH", bh.clone(), bhbh, a.comult())?;
        self.add_generator("cu_BH", bh.clone(), vec![], a.counit())?;
        if let Some(s) = bp.antipode() {
            self.add_generator("S_BH", bh.clone(), bh, s)?;
        }
        Ok(())
    }
}
