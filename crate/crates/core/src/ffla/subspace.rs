use super::field::PrimeField;
use super::matrix::{axpy, scale_in_place, FpMatrix};

/// A subspace of `F_p^n` held as a semi-echelon basis.
///
/// Every stored row has a 1 in its pivot column, and each row is zero in
/// the pivot columns of all rows stored before it. Reducing a vector by the
/// rows in insertion order clears every pivot column.
#[derive(Clone, Debug)]
pub struct Subspace {
    field: PrimeField,
    n: usize,
    rows: Vec<Vec<u8>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(field: PrimeField, n: usize) -> Self {
        Self {
            field,
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows(field: PrimeField, n: usize, rows: impl IntoIterator<Item = Vec<u8>>) -> Self {
        let mut s = Self::new(field, n);
        for r in rows {
            s.insert(r);
        }
        s
    }

    pub fn full(field: PrimeField, n: usize) -> Self {
        let mut s = Self::new(field, n);
        for i in 0..n {
            let mut v = vec![0u8; n];
            v[i] = 1;
            s.insert(v);
        }
        s
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` in place; returns the coefficients of the subtracted rows.
    pub fn reduce(&self, v: &mut [u8]) -> Vec<u8> {
        let mut coeffs = vec![0u8; self.rows.len()];
        for (k, (row, &piv)) in self.rows.iter().zip(&self.pivots).enumerate() {
            let c = v[piv];
            if c != 0 {
                coeffs[k] = c;
                axpy(self.field, v, row, self.field.neg(c));
            }
        }
        coeffs
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` with respect to [`Self::rows`], if `v` lies in the subspace.
    pub fn coords(&self, v: &[u8]) -> Option<Vec<u8>> {
        let mut w = v.to_vec();
        let c = self.reduce(&mut w);
        w.iter().all(|&x| x == 0).then_some(c)
    }

    /// Adds `v`; returns `false` if it was already in the span.
    pub fn insert(&mut self, mut v: Vec<u8>) -> bool {
        assert_eq!(v.len(), self.n, "vector length mismatch");
        self.reduce(&mut v);
        let Some(piv) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.field.inv(v[piv]).expect("nonzero");
        scale_in_place(self.field, &mut v, inv);
        self.rows.push(v);
        self.pivots.push(piv);
        true
    }

    pub fn basis_matrix(&self) -> FpMatrix {
        FpMatrix::from_reduced_rows(self.field, self.n, &self.rows)
    }

    /// Columns that are not pivots; they index a basis of the quotient `F_p^n / self`.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.n];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.n).filter(|&c| !is_pivot[c]).collect()
    }

    /// Coordinates of `v + self` in the quotient basis given by [`Self::non_pivots`].
    pub fn quotient_coords(&self, v: &[u8]) -> Vec<u8> {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        self.non_pivots().into_iter().map(|c| w[c]).collect()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r.clone());
        }
        s
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn same_as(&self, other: &Subspace) -> bool {
        self.dim() == other.dim() && self.is_subspace_of(other)
    }

    /// `{w : w . u = 0 for all u in self}`.
    pub fn annihilator(&self) -> Subspace {
        let m = self.basis_matrix();
        let null = if self.dim() == 0 {
            FpMatrix::identity(self.field, self.n)
        } else {
            m.nullspace()
        };
        null.row_space()
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // (U ∩ W)^⊥ = U^⊥ + W^⊥
        self.annihilator().sum(&other.annihilator()).annihilator()
    }

    /// Image of the subspace under `v -> v * m`.
    pub fn image(&self, m: &FpMatrix) -> Subspace {
        Subspace::from_rows(self.field, m.cols(), self.rows.iter().map(|r| m.vec_mul(r)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_and_coords() {
        let f = PrimeField::new(3).unwrap();
        let s = Subspace::from_rows(f, 3, vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 2, 1]]);
        assert_eq!(s.dim(), 2);
        let v = vec![2, 0, 1];
        let c = s.coords(&v).unwrap();
        let mut recon = vec![0u8; 3];
        for (row, &ci) in s.rows().iter().zip(&c) {
            axpy(f, &mut recon, row, ci);
        }
        assert_eq!(recon, v);
        assert!(!s.contains(&[1, 0, 0]));
    }

    #[test]
    fn intersection_and_annihilator() {
        let f = PrimeField::new(5).unwrap();
        let u = Subspace::from_rows(f, 4, vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0]]);
        let w = Subspace::from_rows(f, 4, vec![vec![0, 1, 0, 0], vec![0, 0, 1, 0]]);
        let i = u.intersection(&w);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&[0, 3, 0, 0]));
        assert_eq!(u.annihilator().dim(), 2);
        assert_eq!(u.sum(&w).dim(), 3);
    }

    #[test]
    fn quotient_coordinates_vanish_on_subspace() {
        let f = PrimeField::new(3).unwrap();
        let s = Subspace::from_rows(f, 3, vec![vec![0, 1, 2]]);
        assert_eq!(s.quotient_coords(&[0, 2, 1]), vec![0, 0]);
        assert_eq!(s.non_pivots(), vec![0, 2]);
    }
}
