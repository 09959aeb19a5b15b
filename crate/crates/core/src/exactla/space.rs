use std::fmt;

use crate::error::{Error, Result};

/// One named tensor factor with labelled basis vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factor {
    name: String,
    basis: Vec<String>,
}

impl Factor {
    pub fn new(name: impl Into<String>, basis: Vec<String>) -> Result<Self> {
        let name = name.into();
        if basis.is_empty() {
            return Err(Error::InvalidParameter(format!(
                "space {name} must have positive dimension"
            )));
        }
        Ok(Factor { name, basis })
    }

    /// A factor with basis labels `e0, e1, …`.
    pub fn with_dim(name: impl Into<String>, dim: usize) -> Result<Self> {
        Factor::new(name, (0..dim).map(|i| format!("e{i}")).collect())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn renamed(&self, name: impl Into<String>) -> Factor {
        Factor {
            name: name.into(),
            basis: self.basis.clone(),
        }
    }
}

/// An ordered tensor product of factors. The empty product is the ground field.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SpaceSig {
    factors: Vec<Factor>,
}

impl SpaceSig {
    pub fn new(factors: Vec<Factor>) -> Self {
        SpaceSig { factors }
    }

    pub fn unit() -> Self {
        SpaceSig::default()
    }

    pub fn single(f: &Factor) -> Self {
        SpaceSig {
            factors: vec![f.clone()],
        }
    }

    /// `f ⊗ f ⊗ … ⊗ f` (n copies).
    pub fn power(f: &SpaceSig, n: usize) -> Self {
        let mut factors = Vec::new();
        for _ in 0..n {
            factors.extend(f.factors.iter().cloned());
        }
        SpaceSig { factors }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_unit()
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(Factor::dim).product()
    }

    pub fn concat(&self, other: &SpaceSig) -> SpaceSig {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        SpaceSig { factors }
    }

    pub fn slice(&self, start: usize, end: usize) -> SpaceSig {
        SpaceSig {
            factors: self.factors[start..end].to_vec(),
        }
    }

    /// Same factor names and dimensions, in order. Basis labels are not compared.
    pub fn compatible(&self, other: &SpaceSig) -> bool {
        self.factors.len() == other.factors.len()
            && self
                .factors
                .iter()
                .zip(&other.factors)
                .all(|(a, b)| a.name == b.name && a.dim() == b.dim())
    }

    pub fn ensure_compatible(&self, other: &SpaceSig) -> Result<()> {
        if self.compatible(other) {
            Ok(())
        } else {
            Err(Error::SignatureMismatch {
                expected: self.to_string(),
                found: other.to_string(),
            })
        }
    }

    /// Row-major multi-index of a flat index.
    pub fn decode(&self, mut flat: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (slot, f) in out.iter_mut().zip(&self.factors).rev() {
            *slot = flat % f.dim();
            flat /= f.dim();
        }
        out
    }

    pub fn encode(&self, multi: &[usize]) -> usize {
        multi
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&i, f)| acc * f.dim() + i)
    }

    /// Basis label of a flat index, e.g. `x⊗g`; `1` for the ground field.
    pub fn label(&self, flat: usize) -> String {
        if self.factors.is_empty() {
            return "1".to_string();
        }
        self.decode(flat)
            .iter()
            .zip(&self.factors)
            .map(|(&i, f)| f.basis[i].as_str())
            .collect::<Vec<_>>()
            .join("⊗")
    }

    pub fn labels(&self, flat: usize) -> Vec<String> {
        self.decode(flat)
            .iter()
            .zip(&self.factors)
            .map(|(&i, f)| f.basis[i].clone())
            .collect()
    }
}

impl fmt::Display for SpaceSig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "k");
        }
        let names: Vec<_> = self
            .factors
            .iter()
            .map(|x| format!("{}({})", x.name, x.dim()))
            .collect();
        write!(f, "{}", names.join("⊗"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_major_indexing() {
        let v = Factor::new("V", vec!["a".into(), "b".into()]).unwrap();
        let w = Factor::with_dim("W", 3).unwrap();
        let sig = SpaceSig::new(vec![v, w]);
        assert_eq!(sig.dim(), 6);
        assert_eq!(sig.decode(4), vec![1, 1]);
        assert_eq!(sig.encode(&[1, 2]), 5);
        assert_eq!(sig.label(3), "b⊗e0");
        assert_eq!(SpaceSig::unit().dim(), 1);
        assert_eq!(SpaceSig::unit().label(0), "1");
    }

    #[test]
    fn zero_dimensional_factor_rejected() {
        assert!(Factor::new("V", vec![]).is_err());
    }
}
