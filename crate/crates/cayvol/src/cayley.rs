//! Construction of Cay(f) from group algebras (and general basis-table
//! associative algebras), the regular-weight search, left-multiplication
//! and conjugation automorphisms, and class functions.

use crate::autgrp::MonomialMap;
use crate::error::{Error, Result};
use crate::evoalg::EvolutionAlgebra;
use crate::exactla::Matrix;
use crate::field::{FieldSpec, Scalar};
use crate::group::FiniteGroup;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A weight on basis labels; the support (the nonzero locus) plays the role
/// of a Cayley generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFunction {
    pub field: FieldSpec,
    values: Vec<Scalar>,
    support: Vec<usize>,
}

impl WeightFunction {
    pub fn new(field: FieldSpec, values: Vec<Scalar>) -> Result<Self> {
        for v in &values {
            if !field.contains(v) {
                return Err(Error::FieldMismatch(field.to_string()));
            }
        }
        let support = (0..values.len())
            .filter(|&i| !field.is_zero(&values[i]))
            .collect();
        Ok(WeightFunction {
            field,
            values,
            support,
        })
    }

    pub fn zero(field: FieldSpec, n: usize) -> Self {
        let values = vec![field.zero(); n];
        WeightFunction {
            field,
            values,
            support: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, i: usize) -> &Scalar {
        &self.values[i]
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn is_injective_on_support(&self) -> bool {
        for (a, &i) in self.support.iter().enumerate() {
            for &j in &self.support[a + 1..] {
                if self.values[i] == self.values[j] {
                    return false;
                }
            }
        }
        true
    }

    /// Pointwise scalar multiple; the support is unchanged for nonzero
    /// lambda.
    pub fn scale(&self, lambda: &Scalar) -> Result<WeightFunction> {
        let values = self
            .values
            .iter()
            .map(|v| self.field.mul(v, lambda))
            .collect::<Result<Vec<_>>>()?;
        WeightFunction::new(self.field.clone(), values)
    }
}

/// On-disk weight format: `{"group": ..., "field": ..., "values": {...}}`;
/// labels absent from `values` are zero.
#[derive(Serialize, Deserialize)]
pub struct WeightFile {
    pub group: String,
    pub field: String,
    pub values: BTreeMap<String, String>,
}

pub fn weight_to_json(group_spec: &str, labels: &[String], f: &WeightFunction) -> String {
    let mut values = BTreeMap::new();
    for &i in f.support() {
        values.insert(labels[i].clone(), f.value(i).to_string());
    }
    let file = WeightFile {
        group: group_spec.to_string(),
        field: f.field.to_string(),
        values,
    };
    serde_json::to_string_pretty(&file).expect("weight serializes")
}

pub fn weight_from_json(text: &str, group: &FiniteGroup) -> Result<(String, WeightFunction)> {
    let file: WeightFile = serde_json::from_str(text)?;
    let field = FieldSpec::parse(&file.field)?;
    let mut values = vec![field.zero(); group.order()];
    for (label, value) in &file.values {
        let idx = group.index_of_label(label).ok_or_else(|| {
            Error::Parse(format!("unknown group element label `{label}`"))
        })?;
        values[idx] = field.parse_scalar(value)?;
    }
    Ok((file.group, WeightFunction::new(field, values)?))
}

/// A finite-dimensional associative algebra presented by a basis product
/// table, with unit flags per basis element. Associativity is verified
/// exhaustively at construction.
#[derive(Clone, Debug)]
pub struct AssociativeBasisAlgebra {
    pub field: FieldSpec,
    pub labels: Vec<String>,
    product: Vec<Vec<Vec<Scalar>>>,
    units: Vec<bool>,
}

impl AssociativeBasisAlgebra {
    pub fn new(
        field: FieldSpec,
        labels: Vec<String>,
        product: Vec<Vec<Vec<Scalar>>>,
        units: Vec<bool>,
    ) -> Result<Self> {
        let n = labels.len();
        let shape_ok = product.len() == n
            && product
                .iter()
                .all(|row| row.len() == n && row.iter().all(|v| v.len() == n))
            && units.len() == n;
        if !shape_ok {
            return Err(Error::DimensionMismatch(
                "product table shape does not match the basis".into(),
            ));
        }
        let a = AssociativeBasisAlgebra {
            field,
            labels,
            product,
            units,
        };
        for e in a.product.iter().flatten().flatten() {
            if !a.field.contains(e) {
                return Err(Error::FieldMismatch(a.field.to_string()));
            }
        }
        a.check_associativity()?;
        Ok(a)
    }

    fn check_associativity(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = self.product[i][j].clone();
                for k in 0..n {
                    let left = self.mul_vector_right(&ij, k)?;
                    let jk = &self.product[j][k];
                    let right = self.mul_vector_left(i, jk)?;
                    if left != right {
                        return Err(Error::GroupInvariant(format!(
                            "product table is not associative at ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// (sum_i v_i b_i) * b_k
    fn mul_vector_right(&self, v: &[Scalar], k: usize) -> Result<Vec<Scalar>> {
        let n = self.dim();
        let f = &self.field;
        let mut out = vec![f.zero(); n];
        for (i, c) in v.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            for (t, o) in out.iter_mut().enumerate() {
                let term = f.mul(c, &self.product[i][k][t])?;
                *o = f.add(o, &term)?;
            }
        }
        Ok(out)
    }

    /// b_i * (sum_j v_j b_j)
    fn mul_vector_left(&self, i: usize, v: &[Scalar]) -> Result<Vec<Scalar>> {
        let n = self.dim();
        let f = &self.field;
        let mut out = vec![f.zero(); n];
        for (j, c) in v.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            for (t, o) in out.iter_mut().enumerate() {
                let term = f.mul(c, &self.product[i][j][t])?;
                *o = f.add(o, &term)?;
            }
        }
        Ok(out)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn product_vector(&self, i: usize, j: usize) -> &[Scalar] {
        &self.product[i][j]
    }

    pub fn is_unit(&self, i: usize) -> bool {
        self.units[i]
    }

    /// The group algebra k[G]: basis G, products b_g b_h = b_gh, every basis
    /// element a unit.
    pub fn group_algebra(g: &FiniteGroup, field: &FieldSpec) -> Self {
        let n = g.order();
        let mut product = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut v = vec![field.zero(); n];
                v[g.mul(i, j)] = field.one();
                product[i][j] = v;
            }
        }
        AssociativeBasisAlgebra {
            field: field.clone(),
            labels: g.labels().to_vec(),
            product,
            units: vec![true; n],
        }
    }

    /// The Cayley evolution algebra of a weight function: column i of the
    /// structure matrix is sum_j f(b_j) * (b_i b_j). For a group algebra the
    /// entries are M[k][g] = f(g^-1 k).
    pub fn cay(&self, f: &WeightFunction) -> Result<EvolutionAlgebra> {
        let n = self.dim();
        if f.len() != n || f.field != self.field {
            return Err(Error::FieldMismatch(self.field.to_string()));
        }
        let fd = &self.field;
        let mut matrix = Matrix::zeros(fd.clone(), n, n);
        for i in 0..n {
            for &j in f.support() {
                let fj = f.value(j);
                for k in 0..n {
                    let coeff = &self.product[i][j][k];
                    if fd.is_zero(coeff) {
                        continue;
                    }
                    let term = fd.mul(fj, coeff)?;
                    let cur = fd.add(matrix.get(k, i), &term)?;
                    matrix.set(k, i, cur);
                }
            }
        }
        EvolutionAlgebra::new(fd.clone(), self.labels.clone(), matrix)
    }
}

/// Searches for a weight function with the given support, injective on the
/// support, making Cay(f) regular. The first |S|-1 support elements (in
/// ascending index order) take the first canonical units; the last scans
/// the remaining canonical units until the determinant is nonzero, which
/// the degree argument guarantees within |G| + |S| candidates.
pub fn realize(
    g: &FiniteGroup,
    field: &FieldSpec,
    support: &[usize],
    force: bool,
) -> Result<WeightFunction> {
    let n = g.order();
    if support.is_empty() {
        return Err(Error::EmptySupport);
    }
    let mut s: Vec<usize> = support.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.iter().any(|&i| i >= n) {
        return Err(Error::DimensionMismatch(format!(
            "support index out of range for order {n}"
        )));
    }
    if let Some(units) = field.unit_group_order() {
        let required = 2 * n as u64;
        if units < required && !force {
            return Err(Error::FieldTooSmall { units, required });
        }
    }
    let m = s.len();
    let pool_size = match field.unit_group_order() {
        Some(total) => total as usize,
        None => n + m,
    };
    let pool = field.enumerate_units(pool_size.max(m))?;
    if pool.len() < m {
        return Err(Error::NotEnoughUnits {
            requested: m,
            available: pool.len() as u64,
        });
    }
    let algebra = AssociativeBasisAlgebra::group_algebra(g, field);
    let mut values = vec![field.zero(); n];
    for (pos, &elt) in s.iter().take(m - 1).enumerate() {
        values[elt] = pool[pos].clone();
    }
    let last = s[m - 1];
    for candidate in pool.iter().skip(m - 1) {
        values[last] = candidate.clone();
        let f = WeightFunction::new(field.clone(), values.clone())?;
        let x = algebra.cay(&f)?;
        if x.is_regular()?.0 {
            return Ok(f);
        }
    }
    Err(Error::RealizeExhausted)
}

/// Determinant of the singleton-support structure matrix as a monomial:
/// the sign `(-1)^((o(s)+1)|G|/o(s))` and the exponent `|G|` in
/// `det = sign * c^|G|`.
pub fn monomial_det_formula(g: &FiniteGroup, s: usize) -> (i8, u64) {
    let o = g.element_order(s);
    let exp = (o + 1) * (g.order() / o);
    let sign = if exp.is_multiple_of(2) { 1 } else { -1 };
    (sign, g.order() as u64)
}

/// Left multiplication by a basis unit x with xB = B, as a monomial map on
/// Cay(f), verified to preserve the product.
pub fn psi(a: &AssociativeBasisAlgebra, f: &WeightFunction, x: usize) -> Result<MonomialMap> {
    let n = a.dim();
    if !a.is_unit(x) {
        return Err(Error::GroupInvariant(format!(
            "basis element {x} is not a unit"
        )));
    }
    let mut sigma = vec![usize::MAX; n];
    let mut hit = vec![false; n];
    for i in 0..n {
        // x * b_i must itself be a basis element
        let v = a.product_vector(x, i);
        let mut target = None;
        for (k, c) in v.iter().enumerate() {
            if a.field.is_zero(c) {
                continue;
            }
            if target.is_some() || !a.field.is_one(c) {
                return Err(Error::GroupInvariant(format!(
                    "left multiplication by {x} does not permute the basis"
                )));
            }
            target = Some(k);
        }
        let k = target
            .ok_or_else(|| Error::GroupInvariant(format!("x * b_{i} = 0 for a unit x")))?;
        if hit[k] {
            return Err(Error::GroupInvariant(format!(
                "left multiplication by {x} does not permute the basis"
            )));
        }
        hit[k] = true;
        sigma[i] = k;
    }
    let map = MonomialMap::permutation(a.field.clone(), sigma);
    let cay = a.cay(f)?;
    if !map.verify_automorphism(&cay)? {
        return Err(Error::GroupInvariant(format!(
            "left multiplication by {x} fails to preserve the Cay(f) product"
        )));
    }
    Ok(map)
}

/// Builds a weight constant on each conjugacy class, one value per class in
/// `conjugacy_classes` order.
pub fn make_class_function(
    g: &FiniteGroup,
    field: &FieldSpec,
    class_values: &[Scalar],
) -> Result<WeightFunction> {
    let classes = g.conjugacy_classes();
    if class_values.len() != classes.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} class values for {} classes",
            class_values.len(),
            classes.len()
        )));
    }
    let mut values = vec![field.zero(); g.order()];
    for (class, value) in classes.iter().zip(class_values) {
        for &k in class {
            values[k] = value.clone();
        }
    }
    WeightFunction::new(field.clone(), values)
}

/// Checks f(g^-1 k g) = f(k) for all g, k.
pub fn is_class_function(g: &FiniteGroup, f: &WeightFunction) -> bool {
    if f.len() != g.order() {
        return false;
    }
    for k in 0..g.order() {
        for h in 0..g.order() {
            let conj = g.mul(g.mul(g.inv(h), k), h);
            if f.value(conj) != f.value(k) {
                return false;
            }
        }
    }
    true
}

/// Inner conjugation by h as a monomial map on Cay(f); requires f to be a
/// class function (otherwise conjugation need not preserve the product).
pub fn rho(g: &FiniteGroup, f: &WeightFunction, h: usize) -> Result<MonomialMap> {
    if !is_class_function(g, f) {
        return Err(Error::NotClassFunction);
    }
    let n = g.order();
    let sigma = (0..n).map(|x| g.mul(g.mul(h, x), g.inv(h))).collect();
    let map = MonomialMap::permutation(f.field.clone(), sigma);
    let algebra = AssociativeBasisAlgebra::group_algebra(g, &f.field);
    let cay = algebra.cay(f)?;
    if !map.verify_automorphism(&cay)? {
        return Err(Error::GroupInvariant(format!(
            "conjugation by {h} fails to preserve the Cay(f) product"
        )));
    }
    Ok(map)
}
