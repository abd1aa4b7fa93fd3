//! Characteristic and minimal polynomials by Krylov iteration.

use super::field::PrimeField;
use super::matrix::{axpy, scale_in_place, FpMatrix};
use super::poly::FpPoly;
use super::subspace::Subspace;
use crate::{Error, Result};

/// Minimal polynomial of `v` relative to an `m`-invariant subspace `base`,
/// together with the Krylov vectors `v, v*m, ..., v*m^(d-1)`.
fn relative_krylov(m: &FpMatrix, v: &[u8], base: &Subspace) -> (FpPoly, Vec<Vec<u8>>) {
    let field: PrimeField = m.field();
    let mut rows: Vec<(Vec<u8>, usize, Vec<u8>)> = Vec::new();
    let mut raw = v.to_vec();
    let mut krylov = Vec::new();
    let n = m.rows();
    for k in 0..=n {
        let mut w = raw.clone();
        base.reduce(&mut w);
        let mut combo = vec![0u8; k + 1];
        combo[k] = 1;
        for (row, piv, rc) in &rows {
            let t = w[*piv];
            if t != 0 {
                let neg = field.neg(t);
                axpy(field, &mut w, row, neg);
                axpy(field, &mut combo[..rc.len()], rc, neg);
            }
        }
        match w.iter().position(|&x| x != 0) {
            None => return (FpPoly::from_reduced(field, combo), krylov),
            Some(piv) => {
                let inv = field.inv(w[piv]).expect("nonzero");
                scale_in_place(field, &mut w, inv);
                scale_in_place(field, &mut combo, inv);
                rows.push((w, piv, combo));
            }
        }
        krylov.push(raw.clone());
        raw = m.vec_mul(&raw);
    }
    unreachable!("Krylov sequence longer than the dimension")
}

/// Minimal polynomial of the vector `v` under `m` (the monic generator of `{f : v f(m) = 0}`).
pub fn vector_min_poly(m: &FpMatrix, v: &[u8]) -> Result<FpPoly> {
    if !m.is_square() {
        return Err(Error::NotSquare(m.rows(), m.cols()));
    }
    if v.len() != m.rows() {
        return Err(Error::dim("vector length mismatch"));
    }
    Ok(relative_krylov(m, v, &Subspace::new(m.field(), m.rows())).0)
}

/// Characteristic polynomial `det(x I - m)`.
pub fn char_poly(m: &FpMatrix) -> Result<FpPoly> {
    if !m.is_square() {
        return Err(Error::NotSquare(m.rows(), m.cols()));
    }
    let n = m.rows();
    let field = m.field();
    let mut base = Subspace::new(field, n);
    let mut acc = FpPoly::one(field);
    for i in 0..n {
        if base.dim() == n {
            break;
        }
        let mut e = vec![0u8; n];
        e[i] = 1;
        if base.contains(&e) {
            continue;
        }
        let (f, vecs) = relative_krylov(m, &e, &base);
        acc = acc.mul(&f);
        for v in vecs {
            base.insert(v);
        }
    }
    Ok(acc)
}

/// Monic polynomial of least degree annihilating `m`.
pub fn min_poly(m: &FpMatrix) -> Result<FpPoly> {
    if !m.is_square() {
        return Err(Error::NotSquare(m.rows(), m.cols()));
    }
    let n = m.rows();
    let field = m.field();
    let empty = Subspace::new(field, n);
    let mut span = Subspace::new(field, n);
    let mut acc = FpPoly::one(field);
    for i in 0..n {
        if span.dim() == n {
            break;
        }
        let mut e = vec![0u8; n];
        e[i] = 1;
        if span.contains(&e) {
            continue;
        }
        let (f, vecs) = relative_krylov(m, &e, &empty);
        acc = acc.lcm(&f);
        for v in vecs {
            span.insert(v);
        }
    }
    Ok(acc)
}
