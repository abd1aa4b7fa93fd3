use std::fmt;

use super::field::PrimeField;
use super::subspace::Subspace;
use crate::{Error, Result};

/// Dense row-major matrix over `F_p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

/// Result of [`FpMatrix::rref`].
#[derive(Clone, Debug)]
pub struct Rref {
    pub reduced: FpMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// `dst += c * src` over the field.
#[inline]
pub(crate) fn axpy(field: PrimeField, dst: &mut [u8], src: &[u8], c: u8) {
    if c == 0 {
        return;
    }
    let p = field.p();
    if c == 1 {
        for (d, &s) in dst.iter_mut().zip(src) {
            let t = *d + s;
            *d = if t >= p { t - p } else { t };
        }
        return;
    }
    let table = field.mul_table(c);
    for (d, &s) in dst.iter_mut().zip(src) {
        let t = *d as u16 + table[s as usize] as u16;
        *d = if t >= p as u16 { (t - p as u16) as u8 } else { t as u8 };
    }
}

#[inline]
pub(crate) fn scale_in_place(field: PrimeField, v: &mut [u8], c: u8) {
    let table = field.mul_table(c);
    for x in v.iter_mut() {
        *x = table[*x as usize];
    }
}

impl FpMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from raw data, reducing every entry mod `p`.
    pub fn from_vec(field: PrimeField, rows: usize, cols: usize, data: Vec<i64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::dim(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self {
            field,
            rows,
            cols,
            data: data.into_iter().map(|v| field.reduce(v)).collect(),
        })
    }

    pub fn from_rows<R: AsRef<[i64]>>(field: PrimeField, rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::dim("ragged rows"));
            }
            data.extend(r.iter().map(|&v| field.reduce(v)));
        }
        Ok(Self {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Rows already reduced mod `p`.
    pub fn from_reduced_rows(field: PrimeField, cols: usize, rows: &[Vec<u8>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            debug_assert_eq!(r.len(), cols);
            data.extend_from_slice(r);
        }
        Self {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_fn(
        field: PrimeField,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> i64,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(field.reduce(f(i, j)));
            }
        }
        Self {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Permutation matrix sending basis vector `i` to basis vector `images[i]`.
    pub fn permutation(field: PrimeField, images: &[usize]) -> Self {
        let n = images.len();
        let mut m = Self::zeros(field, n, n);
        for (i, &j) in images.iter().enumerate() {
            m.data[i * n + j] = 1;
        }
        m
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn p(&self) -> u8 {
        self.field.p()
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = self.field.reduce(v);
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [u8] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn data(&self) -> &[u8] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (0..self.cols).all(|j| self.get(i, j) == u8::from(i == j)))
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.p() != other.p() {
            return Err(Error::Modulus(self.p(), other.p()));
        }
        Ok(())
    }

    /// Exact product `self * other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        if self.cols != other.rows {
            return Err(Error::dim(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let p = self.p() as u32;
        let (n, k, m) = (self.rows, self.cols, other.cols);
        let mut out = Self::zeros(self.field, n, m);
        // Accumulate in u32 and reduce before the accumulator can overflow.
        let step = ((p - 1) * (p - 1)).max(1);
        let budget = (u32::MAX - p) / step;
        let mut acc = vec![0u32; m];
        for i in 0..n {
            acc.iter_mut().for_each(|x| *x = 0);
            let arow = self.row(i);
            let mut pending = 0u32;
            for (l, &a) in arow.iter().enumerate().take(k) {
                if a == 0 {
                    continue;
                }
                let a = a as u32;
                for (x, &b) in acc.iter_mut().zip(other.row(l)) {
                    *x += a * b as u32;
                }
                pending += 1;
                if pending == budget {
                    acc.iter_mut().for_each(|x| *x %= p);
                    pending = 0;
                }
            }
            for (o, &x) in out.row_mut(i).iter_mut().zip(&acc) {
                *o = (x % p) as u8;
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(v.len(), self.rows, "vector length mismatch");
        let mut out = vec![0u8; self.cols];
        for (i, &c) in v.iter().enumerate() {
            axpy(self.field, &mut out, self.row(i), c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::dim("shape mismatch in add"));
        }
        let mut out = self.clone();
        axpy(self.field, &mut out.data, &other.data, 1);
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::dim("shape mismatch in sub"));
        }
        let mut out = self.clone();
        axpy(self.field, &mut out.data, &other.data, self.field.neg(1));
        Ok(out)
    }

    /// `self += c * other` (same shape).
    pub fn add_scaled(&mut self, other: &Self, c: u8) {
        assert!(self.rows == other.rows && self.cols == other.cols);
        axpy(self.field, &mut self.data, &other.data, c);
    }

    pub fn scale(&self, c: u8) -> Self {
        let mut out = self.clone();
        scale_in_place(self.field, &mut out.data, c % self.p());
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        let mut base = self.clone();
        let mut acc = Self::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        Ok(acc)
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        if self.cols != other.cols && self.rows > 0 && other.rows > 0 {
            return Err(Error::dim("column mismatch in vstack"));
        }
        let cols = if self.rows > 0 { self.cols } else { other.cols };
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Self {
            field: self.field,
            rows: self.rows + other.rows,
            cols,
            data,
        })
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        if self.rows != other.rows {
            return Err(Error::dim("row mismatch in hstack"));
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Ok(Self {
            field: self.field,
            rows: self.rows,
            cols,
            data,
        })
    }

    /// Block-diagonal sum.
    pub fn block_diag(blocks: &[&FpMatrix]) -> Result<Self> {
        let field = blocks
            .first()
            .map(|b| b.field)
            .ok_or_else(|| Error::invalid("no blocks"))?;
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(field, n, m);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            if b.p() != field.p() {
                return Err(Error::Modulus(b.p(), field.p()));
            }
            for i in 0..b.rows {
                out.data[(r0 + i) * m + c0..(r0 + i) * m + c0 + b.cols].copy_from_slice(b.row(i));
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        Ok(out)
    }

    pub fn submatrix(&self, row_range: std::ops::Range<usize>, col_range: std::ops::Range<usize>) -> Self {
        let mut out = Self::zeros(self.field, row_range.len(), col_range.len());
        for (oi, i) in row_range.enumerate() {
            out.row_mut(oi).copy_from_slice(&self.row(i)[col_range.clone()]);
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let rows: Vec<Vec<u8>> = idx.iter().map(|&i| self.row(i).to_vec()).collect();
        Self::from_reduced_rows(self.field, self.cols, &rows)
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(piv) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if piv != r {
                for j in 0..m.cols {
                    m.data.swap(piv * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.field.inv(m.get(r, c)).expect("nonzero pivot");
            scale_in_place(m.field, m.row_mut(r), inv);
            let pivot_row = m.row(r).to_vec();
            for i in 0..m.rows {
                if i != r {
                    let f = m.get(i, c);
                    if f != 0 {
                        let neg = m.field.neg(f);
                        axpy(m.field, m.row_mut(i), &pivot_row, neg);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            reduced: m,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        Subspace::from_rows(self.field, self.cols, self.row_vecs()).dim()
    }

    /// Basis (as rows) of `{v : self * v^T = 0}`.
    pub fn nullspace(&self) -> FpMatrix {
        let Rref {
            reduced, pivots, ..
        } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u8; self.cols];
            v[f] = 1;
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = self.field.neg(reduced.get(r, f));
            }
            basis.push(v);
        }
        FpMatrix::from_reduced_rows(self.field, self.cols, &basis)
    }

    /// Basis (as rows) of `{v : v * self = 0}`.
    pub fn left_nullspace(&self) -> FpMatrix {
        self.transpose().nullspace()
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        let n = self.rows;
        let aug = self.hstack(&Self::identity(self.field, n))?;
        let Rref { reduced, rank, pivots } = aug.rref();
        if rank < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(reduced.submatrix(0..n, n..2 * n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn det(&self) -> Result<u8> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        let f = self.field;
        let mut m = self.clone();
        let n = m.rows;
        let mut det = 1u8 % f.p();
        for c in 0..n {
            let Some(piv) = (c..n).find(|&i| m.get(i, c) != 0) else {
                return Ok(0);
            };
            if piv != c {
                for j in 0..n {
                    m.data.swap(piv * n + j, c * n + j);
                }
                det = f.neg(det);
            }
            let d = m.get(c, c);
            det = f.mul(det, d);
            let inv = f.inv(d).expect("nonzero pivot");
            let pivot_row = m.row(c).to_vec();
            for i in c + 1..n {
                let x = m.get(i, c);
                if x != 0 {
                    axpy(f, m.row_mut(i), &pivot_row, f.neg(f.mul(x, inv)));
                }
            }
        }
        Ok(det)
    }

    /// If this is a permutation matrix, the induced map on basis indices.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        if !self.is_square() {
            return None;
        }
        let mut images = Vec::with_capacity(self.rows);
        let mut seen = vec![false; self.cols];
        for i in 0..self.rows {
            let row = self.row(i);
            let mut hit = None;
            for (j, &x) in row.iter().enumerate() {
                match x {
                    0 => {}
                    1 if hit.is_none() => hit = Some(j),
                    _ => return None,
                }
            }
            let j = hit?;
            if seen[j] {
                return None;
            }
            seen[j] = true;
            images.push(j);
        }
        Some(images)
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::from_rows(self.field, self.cols, self.row_vecs())
    }

    /// Kronecker product `self (x) other`.
    pub fn kronecker(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let f = self.field;
        Ok(Self::from_fn(f, r, c, |i, j| {
            let a = self.get(i / other.rows, j / other.cols);
            let b = other.get(i % other.rows, j % other.cols);
            f.mul(a, b) as i64
        }))
    }

    pub fn trace(&self) -> u8 {
        let f = self.field;
        (0..self.rows.min(self.cols)).fold(0, |acc, i| f.add(acc, self.get(i, i)))
    }
}

impl std::ops::Sub for &FpMatrix {
    type Output = FpMatrix;

    /// Panics on shape mismatch; use [`FpMatrix::sub`] for a checked version.
    fn sub(self, rhs: Self) -> FpMatrix {
        FpMatrix::sub(self, rhs).expect("matching shapes")
    }
}

impl std::ops::Mul for &FpMatrix {
    type Output = FpMatrix;

    /// Panics on a shape or modulus mismatch; use [`FpMatrix::mul`] for a checked product.
    fn mul(self, rhs: &FpMatrix) -> FpMatrix {
        FpMatrix::mul(self, rhs).expect("matrix product")
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix(p={}, {}x{})", self.p(), self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f3() -> PrimeField {
        PrimeField::new(3).unwrap()
    }

    fn random(field: PrimeField, r: usize, c: usize, rng: &mut ChaCha8Rng) -> FpMatrix {
        FpMatrix::from_fn(field, r, c, |_, _| rng.gen_range(0..field.p() as i64))
    }

    #[test]
    fn identity_times_m() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let m = random(f3(), 3, 3, &mut rng);
        assert_eq!(&FpMatrix::identity(f3(), 3) * &m, m);
    }

    #[test]
    fn hand_product_vanishes() {
        let a = FpMatrix::from_rows(f3(), &[[1, 2], [2, 1]]).unwrap();
        let b = FpMatrix::from_rows(f3(), &[[1, 1], [1, 1]]).unwrap();
        assert!(a.mul(&b).unwrap().is_zero());
    }

    #[test]
    fn product_matches_naive_triple_loop() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for p in [3u32, 251] {
            let f = PrimeField::new(p).unwrap();
            let a = random(f, 50, 50, &mut rng);
            let b = random(f, 50, 50, &mut rng);
            let fast = a.mul(&b).unwrap();
            for i in 0..50 {
                for j in 0..50 {
                    let naive: u64 = (0..50).map(|l| a.get(i, l) as u64 * b.get(l, j) as u64).sum();
                    assert_eq!(fast.get(i, j) as u64, naive % p as u64);
                }
            }
        }
    }

    #[test]
    fn mismatches_are_errors() {
        let a = FpMatrix::zeros(f3(), 2, 3);
        let b = FpMatrix::zeros(f3(), 2, 3);
        assert!(matches!(a.mul(&b), Err(Error::Dimension(_))));
        let c = FpMatrix::zeros(PrimeField::new(5).unwrap(), 3, 2);
        assert!(matches!(a.mul(&c), Err(Error::Modulus(3, 5))));
    }

    #[test]
    fn rref_examples() {
        let r = FpMatrix::identity(f3(), 3).rref();
        assert_eq!((r.rank, r.pivots.clone()), (3, vec![0, 1, 2]));
        assert_eq!(FpMatrix::zeros(f3(), 4, 4).rref().rank, 0);
        let m = FpMatrix::from_rows(f3(), &[[1, 2], [2, 1]]).unwrap();
        assert_eq!(m.rref().rank, 1);
    }

    #[test]
    fn nullspace_examples() {
        let m = FpMatrix::from_rows(f3(), &[[1, 2], [2, 1]]).unwrap();
        let n = m.nullspace();
        assert_eq!(n.rows(), 1);
        assert_eq!(n.row(0), &[1, 1]);
        assert_eq!(FpMatrix::identity(f3(), 4).nullspace().rows(), 0);
        assert_eq!(FpMatrix::zeros(f3(), 3, 3).nullspace().rows(), 3);
    }

    #[test]
    fn inverse_and_det() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let m = random(f3(), 5, 5, &mut rng);
            match m.inverse() {
                Ok(inv) => {
                    assert!(m.mul(&inv).unwrap().is_identity());
                    assert_ne!(m.det().unwrap(), 0);
                }
                Err(Error::Singular) => assert_eq!(m.det().unwrap(), 0),
                Err(e) => panic!("{e}"),
            }
        }
    }

    #[test]
    fn permutation_detection() {
        let m = FpMatrix::permutation(f3(), &[2, 0, 1]);
        assert_eq!(m.as_permutation(), Some(vec![2, 0, 1]));
        assert_eq!(m.scale(2).as_permutation(), None);
    }
}
