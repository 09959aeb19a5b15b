use std::fmt;

use super::{FieldSpec, Scalar, SpaceSig};
use crate::error::{Error, Result};

/// A linear map `dom → cod` stored as a dense `cod.dim() × dom.dim()` matrix.
///
/// Column `j` is the image of the `j`-th basis vector of `dom`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinMap {
    field: FieldSpec,
    dom: SpaceSig,
    cod: SpaceSig,
    data: Vec<Scalar>,
}

impl LinMap {
    pub fn new(field: FieldSpec, dom: SpaceSig, cod: SpaceSig, data: Vec<Scalar>) -> Result<Self> {
        let expected = dom.dim() * cod.dim();
        if data.len() != expected {
            return Err(Error::Shape {
                expected,
                found: data.len(),
            });
        }
        for s in &data {
            field.ensure_same(s.field())?;
        }
        Ok(LinMap {
            field,
            dom,
            cod,
            data,
        })
    }

    pub fn zero(field: FieldSpec, dom: SpaceSig, cod: SpaceSig) -> Self {
        let data = vec![Scalar::zero(field); dom.dim() * cod.dim()];
        LinMap {
            field,
            dom,
            cod,
            data,
        }
    }

    pub fn identity(field: FieldSpec, sig: &SpaceSig) -> Self {
        LinMap::from_fn(field, sig.clone(), sig.clone(), |r, c| {
            if r == c {
                Scalar::one(field)
            } else {
                Scalar::zero(field)
            }
        })
    }

    /// Entry `(row, col)` is `f(row, col)`.
    pub fn from_fn(
        field: FieldSpec,
        dom: SpaceSig,
        cod: SpaceSig,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let (rows, cols) = (cod.dim(), dom.dim());
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        LinMap {
            field,
            dom,
            cod,
            data,
        }
    }

    /// Sums `(row, col, value)` triples into a zero map.
    pub fn from_entries(
        field: FieldSpec,
        dom: SpaceSig,
        cod: SpaceSig,
        entries: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut m = LinMap::zero(field, dom, cod);
        let cols = m.cols();
        for (r, c, v) in entries {
            if r >= m.rows() || c >= cols {
                return Err(Error::InvalidParameter(format!(
                    "entry ({r}, {c}) outside {}×{} matrix",
                    m.rows(),
                    cols
                )));
            }
            let slot = &mut m.data[r * cols + c];
            *slot = slot.checked_add(&v)?;
        }
        Ok(m)
    }

    /// The linear map `k → cod` picking out the given vector.
    pub fn from_vector(field: FieldSpec, cod: SpaceSig, v: Vec<Scalar>) -> Result<Self> {
        LinMap::new(field, SpaceSig::unit(), cod, v)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dom(&self) -> &SpaceSig {
        &self.dom
    }

    pub fn cod(&self) -> &SpaceSig {
        &self.cod
    }

    pub fn rows(&self) -> usize {
        self.cod.dim()
    }

    pub fn cols(&self) -> usize {
        self.dom.dim()
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.data[row * self.cols() + col]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn column(&self, col: usize) -> Vec<Scalar> {
        (0..self.rows()).map(|r| self.get(r, col).clone()).collect()
    }

    /// Nonzero entries as `(row, col, value)` in row-major order.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        let cols = self.cols().max(1);
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(i, v)| (i / cols, i % cols, v))
    }

    /// Copy with one entry replaced.
    pub fn with_entry(&self, row: usize, col: usize, value: Scalar) -> Result<Self> {
        self.field.ensure_same(value.field())?;
        let mut out = self.clone();
        let cols = out.cols();
        out.data[row * cols + col] = value;
        Ok(out)
    }

    /// Same matrix, new signatures of equal total dimension.
    pub fn relabel(&self, dom: SpaceSig, cod: SpaceSig) -> Result<Self> {
        if dom.dim() != self.dom.dim() || cod.dim() != self.cod.dim() {
            return Err(Error::SignatureMismatch {
                expected: format!("{} → {}", self.dom, self.cod),
                found: format!("{dom} → {cod}"),
            });
        }
        Ok(LinMap {
            field: self.field,
            dom,
            cod,
            data: self.data.clone(),
        })
    }

    /// Applies the map to a coordinate vector over `dom`.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols() {
            return Err(Error::Shape {
                expected: self.cols(),
                found: v.len(),
            });
        }
        let mut out = vec![Scalar::zero(self.field); self.rows()];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            self.field.ensure_same(x.field())?;
            for (r, slot) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    *slot = &*slot + &(a * x);
                }
            }
        }
        Ok(out)
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &LinMap) -> Result<LinMap> {
        self.field.ensure_same(g.field)?;
        self.dom.ensure_compatible(&g.cod)?;
        let (rows, inner, cols) = (self.rows(), self.cols(), g.cols());
        let mut data = vec![Scalar::zero(self.field); rows * cols];
        for r in 0..rows {
            for k in 0..inner {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..cols {
                    let b = g.get(k, c);
                    if !b.is_zero() {
                        let slot = &mut data[r * cols + c];
                        *slot = &*slot + &(a * b);
                    }
                }
            }
        }
        Ok(LinMap {
            field: self.field,
            dom: g.dom.clone(),
            cod: self.cod.clone(),
            data,
        })
    }

    /// Kronecker product; signatures concatenate.
    pub fn tensor(&self, g: &LinMap) -> Result<LinMap> {
        self.field.ensure_same(g.field)?;
        let dom = self.dom.concat(&g.dom);
        let cod = self.cod.concat(&g.cod);
        let (gr, gc) = (g.rows(), g.cols());
        let zero = Scalar::zero(self.field);
        Ok(LinMap::from_fn(self.field, dom, cod, |r, c| {
            let a = self.get(r / gr, c / gc);
            if a.is_zero() {
                return zero.clone();
            }
            let b = g.get(r % gr, c % gc);
            if b.is_zero() {
                zero.clone()
            } else {
                a * b
            }
        }))
    }

    /// Tensor product of a list of maps, left to right. Empty list is `id_k`.
    pub fn tensor_all<'a>(
        field: FieldSpec,
        maps: impl IntoIterator<Item = &'a LinMap>,
    ) -> Result<LinMap> {
        maps.into_iter()
            .try_fold(LinMap::identity(field, &SpaceSig::unit()), |acc, m| {
                acc.tensor(m)
            })
    }

    /// Composes a pipeline given top-to-bottom: `steps[n-1] ∘ … ∘ steps[0]`.
    pub fn chain<'a>(steps: impl IntoIterator<Item = &'a LinMap>) -> Result<LinMap> {
        let mut it = steps.into_iter();
        let first = it
            .next()
            .ok_or_else(|| Error::InvalidParameter("empty composition chain".into()))?
            .clone();
        it.try_fold(first, |acc, step| step.compose(&acc))
    }

    /// The flip `a ⊗ b ↦ b ⊗ a` on `A ⊗ B → B ⊗ A`.
    pub fn flip(field: FieldSpec, a: &SpaceSig, b: &SpaceSig) -> LinMap {
        let dom = a.concat(b);
        let mut perm: Vec<usize> = (a.len()..a.len() + b.len()).collect();
        perm.extend(0..a.len());
        LinMap::permutation(field, &dom, &perm)
    }

    /// Reorders tensor factors: output factor `j` is input factor `perm[j]`.
    pub fn permutation(field: FieldSpec, dom: &SpaceSig, perm: &[usize]) -> LinMap {
        assert_eq!(
            perm.len(),
            dom.len(),
            "permutation length must match factor count"
        );
        let cod = SpaceSig::new(perm.iter().map(|&i| dom.factors()[i].clone()).collect());
        let mut m = LinMap::zero(field, dom.clone(), cod.clone());
        let cols = m.cols();
        for c in 0..dom.dim() {
            let multi = dom.decode(c);
            let out: Vec<usize> = perm.iter().map(|&i| multi[i]).collect();
            let r = cod.encode(&out);
            m.data[r * cols + c] = Scalar::one(field);
        }
        m
    }

    pub fn add(&self, other: &LinMap) -> Result<LinMap> {
        self.field.ensure_same(other.field)?;
        self.same_shape(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(LinMap {
            field: self.field,
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            data,
        })
    }

    pub fn sub(&self, other: &LinMap) -> Result<LinMap> {
        self.field.ensure_same(other.field)?;
        self.same_shape(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(LinMap {
            field: self.field,
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            data,
        })
    }

    pub fn scale(&self, s: &Scalar) -> Result<LinMap> {
        self.field.ensure_same(s.field())?;
        let data = self.data.iter().map(|a| a * s).collect();
        Ok(LinMap {
            field: self.field,
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            data,
        })
    }

    fn same_shape(&self, other: &LinMap) -> Result<()> {
        if self.dom.dim() != other.dom.dim() || self.cod.dim() != other.cod.dim() {
            return Err(Error::SignatureMismatch {
                expected: format!("{} → {}", self.dom, self.cod),
                found: format!("{} → {}", other.dom, other.cod),
            });
        }
        Ok(())
    }

    /// Exact equality: same field, same total dimensions, all entries equal.
    pub fn maps_equal(&self, other: &LinMap) -> bool {
        self.field == other.field
            && self.dom.dim() == other.dom.dim()
            && self.cod.dim() == other.cod.dim()
            && self.data == other.data
    }

    /// First `(row, col)` where the maps differ, scanning columns (inputs)
    /// in basis order and rows within each column.
    pub fn first_difference(&self, other: &LinMap) -> Option<(usize, usize)> {
        for c in 0..self.cols() {
            for r in 0..self.rows() {
                if self.get(r, c) != other.get(r, c) {
                    return Some((r, c));
                }
            }
        }
        None
    }

    /// `(id ⊗ op ⊗ id) ∘ self`, where `op` acts on the codomain factors
    /// starting at `start`. The Kronecker product is never materialized.
    pub fn then_local(&self, start: usize, op: &LinMap) -> Result<LinMap> {
        self.field.ensure_same(op.field)?;
        let arity = op.dom.len();
        if start + arity > self.cod.len() {
            return Err(Error::SignatureMismatch {
                expected: format!("{} at factor {start}", op.dom),
                found: self.cod.to_string(),
            });
        }
        self.cod
            .slice(start, start + arity)
            .ensure_compatible(&op.dom)?;

        let left: usize = self.cod.factors()[..start]
            .iter()
            .map(|f| f.dim())
            .product();
        let right: usize = self.cod.factors()[start + arity..]
            .iter()
            .map(|f| f.dim())
            .product();
        let (mid_in, mid_out) = (op.cols(), op.rows());
        let cols = self.cols();

        let mut op_cols: Vec<Vec<(usize, &Scalar)>> = vec![Vec::new(); mid_in];
        for (q, p, v) in op.nonzeros() {
            op_cols[p].push((q, v));
        }

        let cod = self
            .cod
            .slice(0, start)
            .concat(&op.cod)
            .concat(&self.cod.slice(start + arity, self.cod.len()));
        let mut data = vec![Scalar::zero(self.field); cod.dim() * cols];
        for l in 0..left {
            for p in 0..mid_in {
                if op_cols[p].is_empty() {
                    continue;
                }
                for r in 0..right {
                    let src_row = (l * mid_in + p) * right + r;
                    for c in 0..cols {
                        let x = &self.data[src_row * cols + c];
                        if x.is_zero() {
                            continue;
                        }
                        for &(q, v) in &op_cols[p] {
                            let dst_row = (l * mid_out + q) * right + r;
                            let slot = &mut data[dst_row * cols + c];
                            *slot = &*slot + &(v * x);
                        }
                    }
                }
            }
        }
        Ok(LinMap {
            field: self.field,
            dom: self.dom.clone(),
            cod,
            data,
        })
    }

    /// `self^n` for an endomorphism.
    pub fn power(&self, n: u32) -> Result<LinMap> {
        let mut acc = LinMap::identity(self.field, &self.dom);
        for _ in 0..n {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} → {} over {}", self.dom, self.cod, self.field)?;
        let cells: Vec<String> = self.data.iter().map(|s| s.to_string()).collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(1);
        for r in 0..self.rows() {
            let row: Vec<String> = (0..self.cols())
                .map(|c| format!("{:>width$}", cells[r * self.cols() + c], width = width))
                .collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Factor;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn sig(name: &str, dim: usize) -> SpaceSig {
        SpaceSig::single(&Factor::with_dim(name, dim).unwrap())
    }

    fn mat(dom: &SpaceSig, cod: &SpaceSig, vals: &[i64]) -> LinMap {
        LinMap::new(
            q(),
            dom.clone(),
            cod.clone(),
            vals.iter().map(|&v| Scalar::from_i64(q(), v)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn identity_laws() {
        let v = sig("V", 2);
        let w = sig("W", 3);
        let f = mat(&v, &w, &[1, 2, 3, 4, 5, 6]);
        assert_eq!(f.compose(&LinMap::identity(q(), &v)).unwrap(), f);
        assert_eq!(LinMap::identity(q(), &w).compose(&f).unwrap(), f);
    }

    #[test]
    fn compose_rejects_mismatched_names() {
        let f = mat(&sig("V", 2), &sig("V", 2), &[1, 0, 0, 1]);
        let g = mat(&sig("W", 2), &sig("W", 2), &[1, 0, 0, 1]);
        assert!(matches!(
            f.compose(&g),
            Err(Error::SignatureMismatch { .. })
        ));
    }

    #[test]
    fn kronecker_entries() {
        let v = sig("V", 2);
        let f = mat(&v, &v, &[1, 2, 3, 4]);
        let g = mat(&v, &v, &[0, 5, 6, 7]);
        let t = f.tensor(&g).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        assert_eq!(t.get(i * 2 + k, j * 2 + l), &(f.get(i, j) * g.get(k, l)));
                    }
                }
            }
        }
        let id = LinMap::identity(q(), &v);
        assert_eq!(
            id.tensor(&id).unwrap(),
            LinMap::identity(q(), &v.concat(&v))
        );
    }

    #[test]
    fn flip_on_two_by_two_swaps_middle_indices() {
        let v = sig("V", 2);
        let w = sig("W", 2);
        let t = LinMap::flip(q(), &v, &w);
        let expected = [1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1];
        assert!(t
            .entries()
            .iter()
            .zip(expected)
            .all(|(a, b)| *a == Scalar::from_i64(q(), b)));
        let back = LinMap::flip(q(), &w, &v).compose(&t).unwrap();
        assert_eq!(back, LinMap::identity(q(), &v.concat(&w)));
    }

    #[test]
    fn flip_with_ground_field_is_identity() {
        let v = sig("V", 3);
        let t = LinMap::flip(q(), &SpaceSig::unit(), &v);
        assert!(t.maps_equal(&LinMap::identity(q(), &v)));
    }

    #[test]
    fn maps_equal_detects_single_entry() {
        let v = sig("V", 2);
        let f = mat(&v, &v, &[1, 2, 3, 4]);
        assert!(f.maps_equal(&f));
        let g = f.with_entry(0, 0, Scalar::from_i64(q(), 2)).unwrap();
        assert!(!f.maps_equal(&g));
        assert_eq!(f.first_difference(&g), Some((0, 0)));
    }

    #[test]
    fn then_local_matches_kronecker() {
        let a = sig("A", 2);
        let b = sig("B", 3);
        let start = mat(
            &a,
            &a.concat(&b).concat(&a),
            &(0..24).map(|i| i as i64 - 4).collect::<Vec<_>>(),
        );
        let op = mat(
            &b,
            &a.concat(&a),
            &(0..12).map(|i| (i % 5) as i64 - 2).collect::<Vec<_>>(),
        );
        let fast = start.then_local(1, &op).unwrap();
        let ida = LinMap::identity(q(), &a);
        let slow = ida
            .tensor(&op)
            .unwrap()
            .tensor(&ida)
            .unwrap()
            .compose(&start)
            .unwrap();
        assert_eq!(fast, slow);
    }

    #[test]
    fn from_entries_bounds() {
        let v = sig("V", 2);
        assert!(LinMap::from_entries(q(), v.clone(), v, [(2, 0, Scalar::one(q()))]).is_err());
    }
}
