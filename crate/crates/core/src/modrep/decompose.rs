//! Decomposition into indecomposable summands by Fitting splitting.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::hom::hom_space;
use super::rep::MatRep;
use crate::ffla::{factor_poly, min_poly, FpMatrix, Subspace};
use crate::{Error, Result};

/// Random endomorphisms tried before a piece is declared indecomposable.
pub const FITTING_ROUNDS: usize = 25;
/// Largest module dimension accepted.
pub const DEFAULT_MAX_DIM: usize = 500;
/// Largest endomorphism ring checked for being local.
pub const LOCAL_CHECK_MAX: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Certificate {
    /// `End(V) = k * 1 + J` with `J` a nilpotent ideal.
    LocalEndomorphismRing,
    /// Only the Fitting rounds failed to split (endomorphism ring too large to check).
    FittingRounds,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub summands: Vec<MatRep>,
    /// Basis of each summand, rows in the coordinates of the input module.
    pub bases: Vec<FpMatrix>,
    pub certificates: Vec<Certificate>,
}

impl Decomposition {
    pub fn dims(&self) -> Vec<usize> {
        self.summands.iter().map(|s| s.dim()).collect()
    }

    /// Stacked summand bases; conjugating by it block-diagonalizes the input.
    pub fn change_of_basis(&self) -> Result<FpMatrix> {
        let mut it = self.bases.iter();
        let first = it.next().ok_or_else(|| Error::invalid("empty decomposition"))?;
        it.try_fold(first.clone(), |acc, b| acc.vstack(b))
    }
}

fn random_combination(basis: &[FpMatrix], rng: &mut ChaCha8Rng) -> FpMatrix {
    let p = basis[0].p();
    let mut acc = FpMatrix::zeros(basis[0].field(), basis[0].rows(), basis[0].cols());
    for b in basis {
        acc.add_scaled(b, rng.gen_range(0..p));
    }
    acc
}

/// Splits along the generalized eigenspaces of a random endomorphism with
/// at least two coprime factors in its minimal polynomial.
fn fitting_split(end: &[FpMatrix], rng: &mut ChaCha8Rng) -> Result<Option<(Subspace, Subspace)>> {
    for _ in 0..FITTING_ROUNDS {
        let theta = random_combination(end, rng);
        let mp = min_poly(&theta)?;
        let factors = factor_poly(&mp)?;
        if factors.len() < 2 {
            continue;
        }
        let (f, e) = &factors[0];
        let g = f.pow(*e as u64);
        let h = mp.divrem(&g)?.0;
        let u1 = g.eval_matrix(&theta)?.left_nullspace().row_space();
        let u2 = h.eval_matrix(&theta)?.left_nullspace().row_space();
        return Ok(Some((u1, u2)));
    }
    Ok(None)
}

/// Checks that the endomorphism ring is `k * 1` plus a nilpotent ideal.
fn is_local_split(end: &[FpMatrix]) -> Result<bool> {
    let field = end[0].field();
    let n = end[0].rows();
    let id = FpMatrix::identity(field, n);
    let mut nil: Vec<FpMatrix> = Vec::new();
    for b in end {
        let factors = factor_poly(&min_poly(b)?)?;
        if factors.len() != 1 || factors[0].0.degree() != Some(1) {
            return Ok(false);
        }
        // factor is x - lambda
        let lambda = field.neg(factors[0].0.coeff(0));
        let mut m = b.clone();
        m.add_scaled(&id, field.neg(lambda));
        nil.push(m);
    }
    let flat = |m: &FpMatrix| m.data().to_vec();
    let s = Subspace::from_rows(field, n * n, nil.iter().map(flat));
    let basis: Vec<FpMatrix> = s
        .rows()
        .iter()
        .map(|r| FpMatrix::from_reduced_rows(field, n, &r.chunks(n).map(|c| c.to_vec()).collect::<Vec<_>>()))
        .collect();
    for a in &basis {
        for b in &basis {
            if !s.contains(&flat(&(a * b))) {
                return Ok(false);
            }
        }
    }
    // powers of the ideal must reach zero
    let mut power = basis.clone();
    for _ in 0..=n {
        if power.iter().all(|m| m.is_zero()) {
            return Ok(true);
        }
        let next = Subspace::from_rows(
            field,
            n * n,
            power.iter().flat_map(|a| basis.iter().map(move |b| flat(&(a * b)))),
        );
        power = next
            .rows()
            .iter()
            .map(|r| FpMatrix::from_reduced_rows(field, n, &r.chunks(n).map(|c| c.to_vec()).collect::<Vec<_>>()))
            .collect();
    }
    Ok(power.is_empty())
}

/// Decomposes a module into indecomposable summands.
pub fn indecomposable_summands(rep: &MatRep, seed: u64) -> Result<Decomposition> {
    if rep.dim() > DEFAULT_MAX_DIM {
        return Err(Error::BoundExceeded(format!(
            "dimension {} above {DEFAULT_MAX_DIM}",
            rep.dim()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Decomposition {
        summands: Vec::new(),
        bases: Vec::new(),
        certificates: Vec::new(),
    };
    if rep.dim() == 0 {
        return Ok(out);
    }
    let mut stack = vec![(rep.clone(), rep.identity_matrix())];
    while let Some((m, basis)) = stack.pop() {
        let end = hom_space(&m, &m)?;
        match fitting_split(&end, &mut rng)? {
            Some((u1, u2)) => {
                if u1.dim() + u2.dim() != m.dim() || u1.dim() == 0 || u2.dim() == 0 {
                    return Err(Error::invalid("Fitting decomposition has wrong dimensions"));
                }
                for u in [u2, u1] {
                    let sub = m.submodule(&u)?;
                    let b = &u.basis_matrix() * &basis;
                    stack.push((sub, b));
                }
            }
            None => {
                let cert = if end.len() <= LOCAL_CHECK_MAX {
                    if !is_local_split(&end)? {
                        return Err(Error::Inconclusive(format!(
                            "summand of dim {} resisted {FITTING_ROUNDS} Fitting rounds but its endomorphism ring is not k + J",
                            m.dim()
                        )));
                    }
                    Certificate::LocalEndomorphismRing
                } else {
                    Certificate::FittingRounds
                };
                out.summands.push(m);
                out.bases.push(basis);
                out.certificates.push(cert);
            }
        }
    }
    verify(rep, &out)?;
    Ok(out)
}

/// Checks that the stacked bases are invertible and that each summand
/// basis carries exactly the summand's action.
fn verify(rep: &MatRep, d: &Decomposition) -> Result<()> {
    let t = d.change_of_basis()?;
    if !t.is_invertible() {
        return Err(Error::invalid("summand bases are not independent"));
    }
    for (s, b) in d.summands.iter().zip(&d.bases) {
        for (a, sa) in rep.mats().iter().zip(s.mats()) {
            if &(b * a) != &(sa * b) {
                return Err(Error::invalid("summand basis is not invariant"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffla::PrimeField;
    use crate::modrep::{is_isomorphic, perm_rep, regular_rep};
    use crate::permgrp::{PermAction, PermGroup};
    use std::sync::Arc;

    #[test]
    fn natural_a8_splits_as_one_plus_seven() {
        let f = PrimeField::new(3).unwrap();
        let a8 = Arc::new(PermGroup::alternating(8));
        let v = perm_rep(&PermAction::natural(a8), f);
        let d = indecomposable_summands(&v, 0).unwrap();
        let mut dims = d.dims();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 7]);
        let sum = d.summands[0].direct_sum(&d.summands[1]).unwrap();
        assert!(is_isomorphic(&sum, &v).unwrap().is_some());
    }

    #[test]
    fn regular_c3_is_indecomposable() {
        let f = PrimeField::new(3).unwrap();
        let c3 = Arc::new(PermGroup::from_cycles(3, &["(1,2,3)"]).unwrap());
        let d = indecomposable_summands(&regular_rep(&c3, f).unwrap(), 0).unwrap();
        assert_eq!(d.dims(), vec![3]);
        assert_eq!(d.certificates, vec![Certificate::LocalEndomorphismRing]);
    }
}
