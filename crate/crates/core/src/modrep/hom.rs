//! Intertwiners between representations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::rep::MatRep;
use crate::ffla::{FpMatrix, Subspace};
use crate::{Error, Result};

/// Largest `p^k` enumerated when certifying non-isomorphism.
pub const EXHAUSTIVE_LIMIT: u64 = 100_000;

fn flatten(m: &FpMatrix) -> Vec<u8> {
    m.data().to_vec()
}

fn unflatten(v: &[u8], rows: usize, cols: usize, like: &FpMatrix) -> FpMatrix {
    FpMatrix::from_reduced_rows(
        like.field(),
        cols,
        &v.chunks(cols).map(|c| c.to_vec()).collect::<Vec<_>>()[..rows],
    )
}

/// Basis of `{X : A_g X = X B_g for all generators g}`, i.e. of module maps
/// `v -> v X` from `m` to `n`.
pub fn hom_space(m: &MatRep, n: &MatRep) -> Result<Vec<FpMatrix>> {
    m.check_compatible(n)?;
    let (a, b) = (m.dim(), n.dim());
    let f = m.field();
    let zero = FpMatrix::zeros(f, a, b);
    if a == 0 || b == 0 {
        return Ok(Vec::new());
    }
    let total = a * b;
    // current solution space as a list of flattened matrices
    let mut basis: Option<Vec<Vec<u8>>> = None;
    for (am, bm) in m.mats().iter().zip(n.mats()) {
        let rows: Vec<Vec<u8>> = match &basis {
            None => {
                // images of the elementary matrices E_ij under X -> A X - X B
                let mut rows = Vec::with_capacity(total);
                for i in 0..a {
                    for j in 0..b {
                        let mut v = vec![0u8; total];
                        for r in 0..a {
                            let x = am.get(r, i);
                            if x != 0 {
                                v[r * b + j] = f.add(v[r * b + j], x);
                            }
                        }
                        for c in 0..b {
                            let x = bm.get(j, c);
                            if x != 0 {
                                v[i * b + c] = f.sub(v[i * b + c], x);
                            }
                        }
                        rows.push(v);
                    }
                }
                rows
            }
            Some(bs) => bs
                .iter()
                .map(|x| {
                    let xm = unflatten(x, a, b, &zero);
                    flatten(&(&(am * &xm) - &(&xm * bm)))
                })
                .collect(),
        };
        let lhs = FpMatrix::from_reduced_rows(f, total, &rows);
        let null = lhs.left_nullspace();
        let old: Vec<Vec<u8>> = match &basis {
            None => (0..total)
                .map(|k| {
                    let mut e = vec![0u8; total];
                    e[k] = 1;
                    e
                })
                .collect(),
            Some(bs) => bs.clone(),
        };
        let mut next = Vec::with_capacity(null.rows());
        for r in 0..null.rows() {
            let coeffs = null.row(r);
            let mut v = vec![0u8; total];
            for (c, o) in coeffs.iter().zip(&old) {
                if *c != 0 {
                    for (x, y) in v.iter_mut().zip(o) {
                        *x = f.add(*x, f.mul(*c, *y));
                    }
                }
            }
            next.push(v);
        }
        basis = Some(next);
        if basis.as_ref().unwrap().is_empty() {
            return Ok(Vec::new());
        }
    }
    let basis = basis.unwrap_or_else(|| {
        (0..total)
            .map(|k| {
                let mut e = vec![0u8; total];
                e[k] = 1;
                e
            })
            .collect()
    });
    // echelonize for a canonical, deterministic basis
    let sp = Subspace::from_rows(f, total, basis);
    Ok(sp.rows().iter().map(|v| unflatten(v, a, b, &zero)).collect())
}

fn combination(basis: &[FpMatrix], coeffs: &[u8]) -> FpMatrix {
    let mut acc = FpMatrix::zeros(basis[0].field(), basis[0].rows(), basis[0].cols());
    for (b, &c) in basis.iter().zip(coeffs) {
        if c != 0 {
            acc.add_scaled(b, c);
        }
    }
    acc
}

/// An invertible intertwiner `m -> n` if the modules are isomorphic, `None`
/// if they are certainly not, and an inconclusive error otherwise.
pub fn is_isomorphic(m: &MatRep, n: &MatRep) -> Result<Option<FpMatrix>> {
    is_isomorphic_seeded(m, n, 0)
}

pub fn is_isomorphic_seeded(m: &MatRep, n: &MatRep, seed: u64) -> Result<Option<FpMatrix>> {
    m.check_compatible(n)?;
    if m.dim() != n.dim() {
        return Ok(None);
    }
    if m.dim() == 0 {
        return Ok(Some(FpMatrix::zeros(m.field(), 0, 0)));
    }
    let hom = hom_space(m, n)?;
    let k = hom.len();
    if k == 0 {
        return Ok(None);
    }
    let p = m.p() as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..40 {
        let coeffs: Vec<u8> = (0..k).map(|_| rng.gen_range(0..p as u8)).collect();
        let x = combination(&hom, &coeffs);
        if x.is_invertible() {
            return Ok(Some(x));
        }
    }
    // every intertwiner is singular iff the determinant vanishes on all of Hom
    let exhaustive = p.checked_pow(k as u32).filter(|&t| t <= EXHAUSTIVE_LIMIT);
    if let Some(total) = exhaustive {
        let mut coeffs = vec![0u8; k];
        for _ in 0..total {
            let x = combination(&hom, &coeffs);
            if x.is_invertible() {
                return Ok(Some(x));
            }
            for c in coeffs.iter_mut() {
                *c += 1;
                if (*c as u64) < p {
                    break;
                }
                *c = 0;
            }
        }
        return Ok(None);
    }
    // isomorphic modules have equal endomorphism and hom dimensions
    if hom_space(m, m)?.len() != k || hom_space(n, n)?.len() != k {
        return Ok(None);
    }
    Err(Error::Inconclusive(format!(
        "no invertible intertwiner found in a {k}-dimensional hom space"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffla::PrimeField;
    use crate::modrep::perm_rep;
    use crate::permgrp::{PermAction, PermGroup};
    use std::sync::Arc;

    #[test]
    fn hom_with_trivial() {
        let f = PrimeField::new(3).unwrap();
        let a8 = Arc::new(PermGroup::alternating(8));
        let v = perm_rep(&PermAction::natural(a8.clone()), f);
        let t = MatRep::trivial(a8, f);
        let h = hom_space(&v, &t).unwrap();
        assert_eq!(h.len(), 1);
        assert_eq!(hom_space(&t, &v).unwrap().len(), 1);
        assert_eq!(hom_space(&v, &v).unwrap().len(), 2);
        for x in &h {
            for (a, b) in v.mats().iter().zip(t.mats()) {
                assert_eq!(&(a * x), &(x * b));
            }
        }
        assert!(is_isomorphic(&v, &v.dual()).unwrap().is_some());
        assert!(is_isomorphic(&v, &t).unwrap().is_none());
    }
}
