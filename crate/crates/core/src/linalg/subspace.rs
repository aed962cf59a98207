use super::{Field, LinalgError, Matrix};

/// A linear subspace of `T^n`, stored by a basis in reduced column-echelon
/// form (the transpose of the reduced row-echelon form of the basis rows).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace<T: Field> {
    ambient: usize,
    basis: Matrix<T>,
}

impl<T: Field> Subspace<T> {
    /// The span of the columns of `generators`.
    pub fn span(generators: &Matrix<T>) -> Self {
        let ambient = generators.rows();
        let (r, pivots) = generators.transpose().rref();
        let keep: Vec<usize> = (0..pivots.len()).collect();
        Subspace {
            ambient,
            basis: r.select_rows(&keep).transpose(),
        }
    }

    pub fn span_vectors(vectors: &[Vec<T>], ambient: usize, ctx: T::Ctx) -> Self {
        Self::span(&Matrix::from_columns(vectors, ambient, ctx))
    }

    pub fn zero(ambient: usize, ctx: T::Ctx) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(ambient, 0, ctx),
        }
    }

    pub fn full(ambient: usize, ctx: T::Ctx) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient, ctx),
        }
    }

    /// Right null space of `a`.
    pub fn kernel(a: &Matrix<T>) -> Self {
        Self::span(&a.kernel_basis())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn ctx(&self) -> T::Ctx {
        self.basis.ctx()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis; columns are the basis vectors.
    pub fn basis(&self) -> &Matrix<T> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<T>> {
        self.basis.columns()
    }

    fn check(&self, other: &Self) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::Dimension(format!(
                "ambient dimensions {} and {} differ",
                self.ambient, other.ambient
            )));
        }
        if self.ctx() != other.ctx() {
            return Err(LinalgError::Dimension(format!(
                "field contexts {:?} and {:?} differ",
                self.ctx(),
                other.ctx()
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check(other)?;
        Ok(Self::span(&self.basis.hstack(&other.basis)))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient, self.ctx()));
        }
        // S a = T b  <=>  [S | -T] (a; b) = 0
        let stacked = self.basis.hstack(&other.basis.neg());
        let k = stacked.kernel_basis();
        let top: Vec<usize> = (0..self.dim()).collect();
        let coeffs = k.select_rows(&top);
        Ok(Self::span(&self.basis.mul(&coeffs)))
    }

    pub fn contains_vector(&self, v: &[T]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        self.coordinates(v).is_some()
    }

    pub fn contains(&self, other: &Self) -> Result<bool, LinalgError> {
        self.check(other)?;
        Ok(other
            .basis_vectors()
            .iter()
            .all(|v| self.contains_vector(v)))
    }

    pub fn equals(&self, other: &Self) -> Result<bool, LinalgError> {
        self.check(other)?;
        Ok(self == other)
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[T]) -> Option<Vec<T>> {
        if self.is_zero() {
            return v.iter().all(|x| x.is_zero_elem()).then(Vec::new);
        }
        self.basis.solve(v)
    }

    /// Rows spanning the annihilator `{a : a·v = 0 for all v in S}`.
    pub fn annihilator(&self) -> Matrix<T> {
        if self.is_zero() {
            return Matrix::identity(self.ambient, self.ctx());
        }
        self.basis.transpose().kernel_basis().transpose()
    }

    /// Image under a linear map given by a matrix acting on column vectors.
    pub fn image(&self, map: &Matrix<T>) -> Self {
        assert_eq!(map.cols(), self.ambient, "map domain mismatch");
        if self.is_zero() {
            return Self::zero(map.rows(), self.ctx());
        }
        Self::span(&map.mul(&self.basis))
    }

    /// Pivot rows of the canonical basis; the remaining coordinates index a
    /// complement.
    pub fn pivot_rows(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|j| {
                (0..self.ambient)
                    .find(|&i| !self.basis.get(i, j).is_zero_elem())
                    .expect("basis vector is zero")
            })
            .collect()
    }

    /// Coordinates complementary to the pivots, in increasing order.
    pub fn complement_coordinates(&self) -> Vec<usize> {
        let piv = self.pivot_rows();
        (0..self.ambient).filter(|i| !piv.contains(i)).collect()
    }

    /// The quotient map `T^n → T^n / S`, realised on the complement spanned by
    /// the non-pivot standard basis vectors.
    pub fn quotient_map(&self) -> Matrix<T> {
        let ctx = self.ctx();
        let piv = self.pivot_rows();
        let comp = self.complement_coordinates();
        // w ↦ w - Σ_k w[piv_k] b_k, then read the complement coordinates.
        let mut proj: Matrix<T> = Matrix::identity(self.ambient, ctx);
        for (k, &p) in piv.iter().enumerate() {
            for i in 0..self.ambient {
                let b = self.basis.get(i, k);
                if b.is_zero_elem() {
                    continue;
                }
                let v = proj.get(i, p).minus(b);
                proj.set(i, p, v);
            }
        }
        proj.select_rows(&comp)
    }
}

impl<T: Field + std::fmt::Display> std::fmt::Debug for Subspace<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} in {}: {:?})", self.dim(), self.ambient, self.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{rat, FieldElem, Rational};

    fn qv(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn canonical_form_makes_equal_spans_identical() {
        let a = Subspace::span_vectors(&[qv(&[1, 2, 0]), qv(&[0, 1, 1])], 3, ());
        let b = Subspace::span_vectors(&[qv(&[1, 3, 1]), qv(&[2, 5, 1]), qv(&[1, 2, 0])], 3, ());
        assert_eq!(a, b);
    }

    #[test]
    fn self_intersection() {
        let s = Subspace::span_vectors(&[qv(&[1, 2, 0]), qv(&[0, 1, 1])], 3, ());
        assert_eq!(s.intersect(&s).unwrap(), s);
    }

    #[test]
    fn conjugate_lines_meet_trivially() {
        let k = |a| FieldElem::from_ints(1, a);
        let v = vec![k([1, 0, 0, 0]), k([0, 0, 1, 0])];
        let w = vec![k([1, 0, 0, 0]), k([0, 0, -1, 0])];
        let s = Subspace::span_vectors(&[v], 2, 1);
        let t = Subspace::span_vectors(&[w], 2, 1);
        assert!(s.intersect(&t).unwrap().is_zero());
        assert!(s.sum(&t).unwrap().is_full());
    }

    #[test]
    fn kernel_of_single_row() {
        let k = |a| FieldElem::from_ints(1, a);
        let a = Matrix::from_rows(vec![vec![k([1, 0, 0, 0]), k([0, 0, 1, 0])]], 2, 1).unwrap();
        let ker = Subspace::kernel(&a);
        assert_eq!(ker.dim(), 1);
        let expected = Subspace::span_vectors(&[vec![k([0, 0, -1, 0]), k([1, 0, 0, 0])]], 2, 1);
        assert_eq!(ker, expected);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::<Rational>::full(2, ());
        let b = Subspace::<Rational>::full(3, ());
        assert!(a.intersect(&b).is_err());
        assert!(a.sum(&b).is_err());
    }

    #[test]
    fn quotient_map_kills_subspace() {
        let s = Subspace::span_vectors(&[qv(&[1, 2, 0]), qv(&[0, 1, 1])], 3, ());
        let q = s.quotient_map();
        assert_eq!(q.rows(), 1);
        assert!(q.mul(s.basis()).is_zero());
        assert_eq!(q.rank(), 1);
    }

    #[test]
    fn annihilator_dimension() {
        let s = Subspace::span_vectors(&[qv(&[1, 2, 0, 1])], 4, ());
        let ann = s.annihilator();
        assert_eq!(ann.rows(), 3);
        assert!(ann.mul(s.basis()).is_zero());
    }
}
