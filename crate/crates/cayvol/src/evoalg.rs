//! The core evolution-algebra type: multiplication, regularity, degeneracy,
//! simplicity for the regular case, and the attached (weighted) digraphs.
//!
//! The structure matrix convention is `M[k][i]` = coefficient of `b_k` in
//! `b_i^2`, so column `i` encodes the square of the i-th basis element.

use crate::digraph::{Digraph, WeightedDigraph};
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::field::{embed, FieldSpec, Scalar};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Debug)]
pub struct EvolutionAlgebra {
    pub field: FieldSpec,
    pub basis: Vec<String>,
    pub matrix: Matrix,
}

/// Simplicity verdict with the reason a non-simple algebra fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Simplicity {
    Simple,
    NotSimple(NotSimpleReason),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NotSimpleReason {
    /// X^2 = 0: the zero algebra.
    ZeroSquare,
    /// The structure matrix is singular.
    NotRegular,
    /// Regular, but the attached graph is not strongly connected: some
    /// basis subset spans a proper ideal.
    Reducible,
}

impl fmt::Display for NotSimpleReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotSimpleReason::ZeroSquare => write!(f, "X^2 = 0"),
            NotSimpleReason::NotRegular => write!(f, "not regular"),
            NotSimpleReason::Reducible => write!(f, "reducible"),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct AlgebraFile {
    field: String,
    basis: Vec<String>,
    matrix: Vec<Vec<String>>,
}

impl EvolutionAlgebra {
    pub fn new(field: FieldSpec, basis: Vec<String>, matrix: Matrix) -> Result<Self> {
        let n = basis.len();
        if matrix.rows != n || matrix.cols != n {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} structure matrix for {n} basis elements",
                matrix.rows, matrix.cols
            )));
        }
        if matrix.field != field {
            return Err(Error::FieldMismatch(field.to_string()));
        }
        Ok(EvolutionAlgebra {
            field,
            basis,
            matrix,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Column `i` of the structure matrix: the square of basis element i.
    pub fn square_of(&self, i: usize) -> Vec<Scalar> {
        (0..self.dim()).map(|k| self.matrix.get(k, i).clone()).collect()
    }

    /// Product of two coefficient vectors: sum_i u_i v_i b_i^2, since the
    /// cross products of distinct natural-basis elements vanish.
    pub fn multiply(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>> {
        let n = self.dim();
        if u.len() != n || v.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "element length {} / {} for dimension {n}",
                u.len(),
                v.len()
            )));
        }
        let f = &self.field;
        let mut out = vec![f.zero(); n];
        for i in 0..n {
            let coeff = f.mul(&u[i], &v[i])?;
            if f.is_zero(&coeff) {
                continue;
            }
            for (k, o) in out.iter_mut().enumerate() {
                let term = f.mul(&coeff, self.matrix.get(k, i))?;
                *o = f.add(o, &term)?;
            }
        }
        Ok(out)
    }

    /// Regularity with the determinant value as evidence.
    pub fn is_regular(&self) -> Result<(bool, Scalar)> {
        let det = self.matrix.determinant()?;
        Ok((!self.field.is_zero(&det), det))
    }

    /// Some basis element squares to zero.
    pub fn is_degenerate(&self) -> bool {
        (0..self.dim()).any(|i| (0..self.dim()).all(|k| self.field.is_zero(self.matrix.get(k, i))))
    }

    fn is_zero_square(&self) -> bool {
        (0..self.dim())
            .all(|i| (0..self.dim()).all(|k| self.field.is_zero(self.matrix.get(k, i))))
    }

    /// Simplicity verdict. A regular algebra is simple exactly when its
    /// attached graph is strongly connected (no basis reordering exposes a
    /// lower-left zero block).
    pub fn simplicity(&self) -> Result<Simplicity> {
        if self.is_zero_square() {
            return Ok(Simplicity::NotSimple(NotSimpleReason::ZeroSquare));
        }
        let (regular, _) = self.is_regular()?;
        if !regular {
            return Ok(Simplicity::NotSimple(NotSimpleReason::NotRegular));
        }
        if self.attached_graph().is_strongly_connected() {
            Ok(Simplicity::Simple)
        } else {
            Ok(Simplicity::NotSimple(NotSimpleReason::Reducible))
        }
    }

    pub fn is_simple(&self) -> Result<bool> {
        Ok(self.simplicity()? == Simplicity::Simple)
    }

    /// Does span(subset) form an ideal? For an evolution algebra it
    /// suffices that every b_i^2 with i in the subset stays inside the
    /// span, because distinct basis elements multiply to zero.
    pub fn basis_ideal_oracle(&self, subset: &[usize]) -> Result<bool> {
        let n = self.dim();
        if subset.is_empty() || subset.len() >= n {
            return Err(Error::DimensionMismatch(
                "ideal oracle needs a nonempty proper basis subset".into(),
            ));
        }
        let mut inside = vec![false; n];
        for &i in subset {
            if i >= n {
                return Err(Error::DimensionMismatch(format!("index {i} out of range")));
            }
            inside[i] = true;
        }
        for &i in subset {
            for k in 0..n {
                if !inside[k] && !self.field.is_zero(self.matrix.get(k, i)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Edge (i, k) whenever b_i^2 has a nonzero b_k component.
    pub fn attached_graph(&self) -> Digraph {
        let n = self.dim();
        let mut edges = Vec::new();
        for i in 0..n {
            for k in 0..n {
                if !self.field.is_zero(self.matrix.get(k, i)) {
                    edges.push((i, k));
                }
            }
        }
        Digraph::new(n, edges).expect("indices in range")
    }

    pub fn attached_weighted_graph(&self) -> WeightedDigraph {
        let n = self.dim();
        let mut edges = Vec::new();
        for i in 0..n {
            for k in 0..n {
                let w = self.matrix.get(k, i);
                if !self.field.is_zero(w) {
                    edges.push((i, k, w.clone()));
                }
            }
        }
        WeightedDigraph::new(n, self.field.clone(), edges).expect("weights nonzero")
    }

    /// Extension of scalars: the same structure matrix over a larger field.
    pub fn extend_to(&self, target: &FieldSpec) -> Result<EvolutionAlgebra> {
        let n = self.dim();
        let mut entries = Vec::with_capacity(n * n);
        for k in 0..n {
            for i in 0..n {
                entries.push(embed(&self.field, target, self.matrix.get(k, i))?);
            }
        }
        let matrix = Matrix::new(target.clone(), n, n, entries)?;
        EvolutionAlgebra::new(target.clone(), self.basis.clone(), matrix)
    }

    pub fn to_json(&self) -> String {
        let n = self.dim();
        let matrix = (0..n)
            .map(|k| (0..n).map(|i| self.matrix.get(k, i).to_string()).collect())
            .collect();
        let file = AlgebraFile {
            field: self.field.to_string(),
            basis: self.basis.clone(),
            matrix,
        };
        serde_json::to_string_pretty(&file).expect("algebra serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: AlgebraFile = serde_json::from_str(text)?;
        let field = FieldSpec::parse(&file.field)?;
        let n = file.basis.len();
        if file.matrix.len() != n || file.matrix.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "matrix must be {n}x{n} to match the basis"
            )));
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in &file.matrix {
            for cell in row {
                entries.push(field.parse_scalar(cell)?);
            }
        }
        let matrix = Matrix::new(field.clone(), n, n, entries)?;
        EvolutionAlgebra::new(field, file.basis, matrix)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn algebra(field: FieldSpec, vals: &[i64]) -> EvolutionAlgebra {
        let n = (vals.len() as f64).sqrt() as usize;
        let entries = vals.iter().map(|&v| field.from_integer(v)).collect();
        let matrix = Matrix::new(field.clone(), n, n, entries).unwrap();
        let basis = (0..n).map(|i| format!("b{i}")).collect();
        EvolutionAlgebra::new(field, basis, matrix).unwrap()
    }

    fn basis_vec(x: &EvolutionAlgebra, i: usize) -> Vec<Scalar> {
        let mut v = vec![x.field.zero(); x.dim()];
        v[i] = x.field.one();
        v
    }

    #[test]
    fn multiplication_rules() {
        let f = FieldSpec::prime(7).unwrap();
        let x = algebra(f.clone(), &[1, 2, 3, 4]);
        let b0 = basis_vec(&x, 0);
        let b1 = basis_vec(&x, 1);
        // distinct basis elements multiply to zero
        let zero = x.multiply(&b0, &b1).unwrap();
        assert!(zero.iter().all(|c| f.is_zero(c)));
        // a square reads off the column
        assert_eq!(x.multiply(&b0, &b0).unwrap(), x.square_of(0));
        // (b0+b1)^2 = b0^2 + b1^2
        let sum: Vec<Scalar> = (0..2).map(|_| f.one()).collect();
        let sq = x.multiply(&sum, &sum).unwrap();
        let expected: Vec<Scalar> = (0..2)
            .map(|k| f.add(x.matrix.get(k, 0), x.matrix.get(k, 1)).unwrap())
            .collect();
        assert_eq!(sq, expected);
    }

    #[test]
    fn multiply_is_commutative() {
        let f = FieldSpec::prime(11).unwrap();
        let x = algebra(f.clone(), &[1, 2, 0, 3, 4, 5, 6, 0, 7]);
        // deterministic sample of element pairs
        for seed in 0..10i64 {
            let u: Vec<Scalar> = (0..3).map(|i| f.from_integer(seed * 3 + i)).collect();
            let v: Vec<Scalar> = (0..3).map(|i| f.from_integer(seed + 5 * i + 1)).collect();
            assert_eq!(x.multiply(&u, &v).unwrap(), x.multiply(&v, &u).unwrap());
        }
    }

    #[test]
    fn regularity_and_degeneracy() {
        let f = FieldSpec::prime(7).unwrap();
        let zero = algebra(f.clone(), &[0, 0, 0, 0]);
        assert!(!zero.is_regular().unwrap().0);
        assert!(zero.is_degenerate());
        assert_eq!(
            zero.simplicity().unwrap(),
            Simplicity::NotSimple(NotSimpleReason::ZeroSquare)
        );

        let id = algebra(f.clone(), &[1, 0, 0, 1]);
        assert!(id.is_regular().unwrap().0);
        assert!(!id.is_degenerate());

        let cay_c2 = algebra(f.clone(), &[1, 2, 2, 1]);
        let (reg, det) = cay_c2.is_regular().unwrap();
        assert!(reg);
        assert_eq!(det, f.from_integer(4));
        assert_eq!(cay_c2.simplicity().unwrap(), Simplicity::Simple);
    }

    /// The block fixture [[I_r, *], [0, I_s]]: regular but not simple.
    fn block_fixture(field: FieldSpec, r: usize, s: usize) -> EvolutionAlgebra {
        let n = r + s;
        let mut m = Matrix::identity(field.clone(), n);
        for row in 0..r {
            for col in r..n {
                m.set(row, col, field.from_integer((row + col) as i64 % 3 + 1));
            }
        }
        let basis = (0..n).map(|i| format!("b{i}")).collect();
        EvolutionAlgebra::new(field, basis, m).unwrap()
    }

    #[test]
    fn block_matrix_is_regular_but_not_simple() {
        let f = FieldSpec::prime(7).unwrap();
        let x = block_fixture(f, 2, 2);
        assert!(x.is_regular().unwrap().0);
        assert_eq!(
            x.simplicity().unwrap(),
            Simplicity::NotSimple(NotSimpleReason::Reducible)
        );
        // the first r basis elements span an ideal
        assert!(x.basis_ideal_oracle(&[0, 1]).unwrap());
        assert!(!x.basis_ideal_oracle(&[2, 3]).unwrap());
    }

    #[test]
    fn ideal_oracle_cases() {
        let f = FieldSpec::prime(5).unwrap();
        // b0^2 = b0, nothing else touches b0
        let x = algebra(f.clone(), &[1, 0, 0, 1]);
        assert!(x.basis_ideal_oracle(&[0]).unwrap());
        // strongly connected regular algebra: no proper subset is an ideal
        let y = algebra(f, &[1, 2, 2, 1]);
        for t in [vec![0], vec![1]] {
            assert!(!y.basis_ideal_oracle(&t).unwrap());
        }
        assert!(y.basis_ideal_oracle(&[]).is_err());
        assert!(y.basis_ideal_oracle(&[0, 1]).is_err());
    }

    #[test]
    fn simplicity_matches_ideal_oracle_exhaustively() {
        let f = FieldSpec::prime(7).unwrap();
        let fixtures = [
            algebra(f.clone(), &[1, 2, 2, 1]),
            algebra(f.clone(), &[1, 0, 0, 1]),
            block_fixture(f.clone(), 2, 2),
            algebra(f.clone(), &[0, 1, 1, 0]),
            algebra(f.clone(), &[1, 1, 0, 0, 1, 1, 1, 0, 1]),
        ];
        for x in fixtures {
            let (regular, _) = x.is_regular().unwrap();
            if !regular {
                continue;
            }
            let n = x.dim();
            let mut ideal_found = false;
            for mask in 1u32..((1 << n) - 1) {
                let t: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
                if x.basis_ideal_oracle(&t).unwrap() {
                    ideal_found = true;
                }
            }
            assert_eq!(x.is_simple().unwrap(), !ideal_found);
        }
    }

    #[test]
    fn simple_implies_regular() {
        let f = FieldSpec::prime(7).unwrap();
        for vals in [
            vec![0i64, 0, 0, 0],
            vec![1, 1, 1, 1],
            vec![1, 2, 2, 1],
            vec![1, 0, 0, 1],
        ] {
            let x = algebra(f.clone(), &vals);
            if x.is_simple().unwrap() {
                assert!(x.is_regular().unwrap().0);
            }
        }
    }

    #[test]
    fn attached_graphs() {
        let f = FieldSpec::prime(5).unwrap();
        let id = algebra(f.clone(), &[1, 0, 0, 1]);
        let g = id.attached_graph();
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(0, 0) && g.has_edge(1, 1));

        let zero = algebra(f.clone(), &[0, 0, 0, 0]);
        assert_eq!(zero.attached_graph().edge_count(), 0);

        // edge count equals the number of nonzero entries
        let x = algebra(f.clone(), &[1, 2, 0, 3, 0, 4, 0, 0, 1]);
        assert_eq!(x.attached_graph().edge_count(), 5);
        let wg = x.attached_weighted_graph();
        assert_eq!(wg.weight(0, 1), Some(&f.from_integer(3)));
    }

    #[test]
    fn json_round_trip() {
        let f = FieldSpec::extension(2, 2, None).unwrap();
        let units = f.all_units().unwrap();
        let entries = vec![
            units[0].clone(),
            units[1].clone(),
            units[2].clone(),
            f.zero(),
        ];
        let m = Matrix::new(f.clone(), 2, 2, entries).unwrap();
        let x = EvolutionAlgebra::new(f, vec!["a".into(), "b".into()], m).unwrap();
        let json = x.to_json();
        let back = EvolutionAlgebra::from_json(&json).unwrap();
        assert_eq!(back.to_json(), json);
        assert_eq!(back.basis, x.basis);
    }

    #[test]
    fn extension_of_scalars() {
        let base = FieldSpec::prime(13).unwrap();
        let ext = FieldSpec::extension(13, 2, None).unwrap();
        let x = algebra(base, &[1, 2, 2, 1]);
        let y = x.extend_to(&ext).unwrap();
        assert_eq!(y.field, ext);
        assert!(y.is_regular().unwrap().0);
        assert_eq!(x.attached_graph(), y.attached_graph());
    }
}
