//! Matrix representations anchored to the generators of a permutation group.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::blocks::LinearCharacter;
use crate::ffla::{FpMatrix, PrimeField, Subspace};
use crate::permgrp::{enumerate_cosets, Evaluator, Perm, PermAction, PermGroup};
use crate::{Error, Result};

/// Largest dimension for which the full relator check runs in [`MatRep::new`];
/// bigger representations are validated on random products.
pub const EXACT_CHECK_DIM: usize = 64;

/// A representation `g -> A_g` given by one invertible matrix per group
/// generator; vectors are rows and `g` acts by `v -> v * A_g`.
///
/// The group may be absent for representations read from a file on their
/// own; operations that need group elements then fail with [`Error::NoGroup`].
#[derive(Clone, Debug)]
pub struct MatRep {
    group: Option<Arc<PermGroup>>,
    field: PrimeField,
    dim: usize,
    mats: Vec<FpMatrix>,
}

impl MatRep {
    /// Validated constructor.
    pub fn new(group: Option<Arc<PermGroup>>, field: PrimeField, dim: usize, mats: Vec<FpMatrix>) -> Result<Self> {
        for m in &mats {
            if m.p() != field.p() {
                return Err(Error::Modulus(m.p(), field.p()));
            }
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::dim(format!("expected {dim}x{dim}, found {}x{}", m.rows(), m.cols())));
            }
            if !m.is_invertible() {
                return Err(Error::Singular);
            }
        }
        let rep = Self { group, field, dim, mats };
        if let Some(g) = &rep.group {
            if g.gens().len() != rep.mats.len() {
                return Err(Error::invalid(format!(
                    "{} matrices for {} generators",
                    rep.mats.len(),
                    g.gens().len()
                )));
            }
            if dim <= EXACT_CHECK_DIM {
                if !g.is_homomorphism(&rep.mats, &FpMatrix::identity(field, dim)) {
                    return Err(Error::Relator("matrices violate a group relation".into()));
                }
            } else {
                rep.sample_check(20, 0)?;
            }
        }
        Ok(rep)
    }

    pub(crate) fn from_parts(group: Option<Arc<PermGroup>>, field: PrimeField, dim: usize, mats: Vec<FpMatrix>) -> Self {
        Self { group, field, dim, mats }
    }

    /// Checks `A_g A_h = A_{gh}` for random `g`, `h`.
    pub fn sample_check(&self, samples: usize, seed: u64) -> Result<()> {
        let g = self.group()?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut ev = self.evaluator()?;
        for _ in 0..samples {
            let a = g.random_element(&mut rng);
            let b = g.random_element(&mut rng);
            let lhs = &g.eval_element(&mut ev, &a)? * &g.eval_element(&mut ev, &b)?;
            if lhs != g.eval_element(&mut ev, &a.mul(&b))? {
                return Err(Error::Relator("sampled product not respected".into()));
            }
        }
        Ok(())
    }

    /// The trivial module.
    pub fn trivial(group: Arc<PermGroup>, field: PrimeField) -> Self {
        let mats = vec![FpMatrix::identity(field, 1); group.gens().len()];
        Self::from_parts(Some(group), field, 1, mats)
    }

    pub fn group(&self) -> Result<&Arc<PermGroup>> {
        self.group.as_ref().ok_or(Error::NoGroup)
    }

    pub fn group_opt(&self) -> Option<&Arc<PermGroup>> {
        self.group.as_ref()
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u8 {
        self.field.p()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mats(&self) -> &[FpMatrix] {
        &self.mats
    }

    pub fn identity_matrix(&self) -> FpMatrix {
        FpMatrix::identity(self.field, self.dim)
    }

    /// Same matrices, attached to `group` (which must have matching generators).
    pub fn with_group(&self, group: Arc<PermGroup>) -> Result<Self> {
        Self::new(Some(group), self.field, self.dim, self.mats.clone())
    }

    pub fn evaluator(&self) -> Result<Evaluator<'_, FpMatrix>> {
        Ok(self.group()?.evaluator(self.mats.clone(), self.identity_matrix()))
    }

    /// Matrix of an arbitrary group element.
    pub fn evaluate(&self, g: &Perm) -> Result<FpMatrix> {
        let mut ev = self.evaluator()?;
        self.group()?.eval_element(&mut ev, g)
    }

    /// Restriction to a subgroup.
    pub fn restrict(&self, h: &Arc<PermGroup>) -> Result<MatRep> {
        let g = self.group()?;
        if !h.is_subgroup_of(g) {
            return Err(Error::NotSubgroup("restriction target is not a subgroup".into()));
        }
        let mut ev = self.evaluator()?;
        let mats = h
            .gens()
            .iter()
            .map(|x| g.eval_element(&mut ev, x))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts(Some(h.clone()), self.field, self.dim, mats))
    }

    /// Induction to an overgroup along a right transversal `t_0 = 1, t_1, ..`:
    /// `(w (x) t_i) g = w A_{t_i g t_j^-1} (x) t_j`.
    pub fn induce(&self, g: &Arc<PermGroup>) -> Result<MatRep> {
        let h = self.group()?;
        let (reps, images) = enumerate_cosets(g, h)?;
        let n = reps.len();
        let d = self.dim;
        let inv_reps: Vec<Perm> = reps.iter().map(|t| t.inv()).collect();
        let mut ev = self.evaluator()?;
        let mut mats = Vec::with_capacity(g.gens().len());
        for (s, img) in g.gens().iter().zip(&images) {
            let mut m = FpMatrix::zeros(self.field, n * d, n * d);
            for i in 0..n {
                let j = img.image(i);
                let x = reps[i].mul(s).mul(&inv_reps[j]);
                let block = h.eval_element(&mut ev, &x)?;
                for r in 0..d {
                    m.row_mut(i * d + r)[j * d..(j + 1) * d].copy_from_slice(block.row(r));
                }
            }
            mats.push(m);
        }
        Ok(Self::from_parts(Some(g.clone()), self.field, n * d, mats))
    }

    /// Contragredient module: `A_g -> (A_g^-1)^T`.
    pub fn dual(&self) -> MatRep {
        let mats = self
            .mats
            .iter()
            .map(|m| m.inverse().expect("invertible").transpose())
            .collect();
        Self::from_parts(self.group.clone(), self.field, self.dim, mats)
    }

    /// `V (x) lambda` for a linear character of the same group.
    pub fn tensor_linear(&self, lambda: &LinearCharacter) -> Result<MatRep> {
        let g = self.group()?;
        if !lambda.group().same_group(g) || lambda.values().len() != self.mats.len() {
            return Err(Error::invalid("linear character lives on a different group"));
        }
        if lambda.field().p() != self.p() {
            return Err(Error::Modulus(lambda.field().p(), self.p()));
        }
        let mats = self
            .mats
            .iter()
            .zip(lambda.values())
            .map(|(m, &c)| m.scale(c))
            .collect();
        Ok(Self::from_parts(self.group.clone(), self.field, self.dim, mats))
    }

    /// Tensor product over the field, with the diagonal action.
    pub fn tensor(&self, other: &MatRep) -> Result<MatRep> {
        self.check_compatible(other)?;
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| a.kronecker(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts(self.group.clone(), self.field, self.dim * other.dim, mats))
    }

    pub fn direct_sum(&self, other: &MatRep) -> Result<MatRep> {
        self.check_compatible(other)?;
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| FpMatrix::block_diag(&[a, b]))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts(self.group.clone(), self.field, self.dim + other.dim, mats))
    }

    pub(crate) fn check_compatible(&self, other: &MatRep) -> Result<()> {
        if self.p() != other.p() {
            return Err(Error::Modulus(self.p(), other.p()));
        }
        if self.mats.len() != other.mats.len() {
            return Err(Error::invalid("representations of different groups"));
        }
        if let (Some(a), Some(b)) = (&self.group, &other.group) {
            if !Arc::ptr_eq(a, b) && !(a.gens() == b.gens()) {
                return Err(Error::invalid("representations of different groups"));
            }
        }
        Ok(())
    }

    /// Whether a subspace is invariant under all generators.
    pub fn is_invariant(&self, u: &Subspace) -> bool {
        u.rows()
            .iter()
            .all(|r| self.mats.iter().all(|m| u.contains(&m.vec_mul(r))))
    }

    /// Action on an invariant subspace, in the basis [`Subspace::rows`].
    pub fn submodule(&self, u: &Subspace) -> Result<MatRep> {
        let d = u.dim();
        let mut mats = Vec::with_capacity(self.mats.len());
        for m in &self.mats {
            let mut a = FpMatrix::zeros(self.field, d, d);
            for (i, r) in u.rows().iter().enumerate() {
                let c = u
                    .coords(&m.vec_mul(r))
                    .ok_or_else(|| Error::invalid("subspace is not invariant"))?;
                a.row_mut(i).copy_from_slice(&c);
            }
            mats.push(a);
        }
        Ok(Self::from_parts(self.group.clone(), self.field, d, mats))
    }

    /// Action on `V / U` in the basis of non-pivot unit vectors of `U`.
    pub fn quotient(&self, u: &Subspace) -> Result<MatRep> {
        if !self.is_invariant(u) {
            return Err(Error::invalid("subspace is not invariant"));
        }
        let cols = u.non_pivots();
        let d = cols.len();
        let mut mats = Vec::with_capacity(self.mats.len());
        for m in &self.mats {
            let mut a = FpMatrix::zeros(self.field, d, d);
            for (i, &c) in cols.iter().enumerate() {
                a.row_mut(i).copy_from_slice(&u.quotient_coords(m.row(c)));
            }
            mats.push(a);
        }
        Ok(Self::from_parts(self.group.clone(), self.field, d, mats))
    }

    /// Conjugates by a change of basis: new matrices `T A T^-1`.
    pub fn change_basis(&self, t: &FpMatrix) -> Result<MatRep> {
        let ti = t.inverse()?;
        let mats = self.mats.iter().map(|m| &(t * m) * &ti).collect();
        Ok(Self::from_parts(self.group.clone(), self.field, self.dim, mats))
    }

    /// Whether every generator acts by a permutation matrix.
    pub fn is_permutation_rep(&self) -> bool {
        self.mats.iter().all(|m| m.as_permutation().is_some())
    }
}

/// Permutation module of an action.
pub fn perm_rep(action: &PermAction, field: PrimeField) -> MatRep {
    let mats = action
        .images()
        .iter()
        .map(|g| FpMatrix::permutation(field, &g.images()))
        .collect();
    MatRep::from_parts(Some(action.group().clone()), field, action.size(), mats)
}

/// Regular module `k G`.
pub fn regular_rep(group: &Arc<PermGroup>, field: PrimeField) -> Result<MatRep> {
    let trivial = PermGroup::trivial(group.degree());
    let act = crate::permgrp::coset_action(group, &trivial)?;
    Ok(perm_rep(&act, field))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> PrimeField {
        PrimeField::new(3).unwrap()
    }

    #[test]
    fn evaluation_is_multiplicative() {
        let a8 = Arc::new(PermGroup::alternating(8));
        let v = perm_rep(&PermAction::natural(a8.clone()), f3());
        assert!(v.is_permutation_rep());
        assert!(v.evaluate(&a8.identity()).unwrap().is_identity());
        assert_eq!(v.evaluate(&a8.gens()[2]).unwrap(), v.mats()[2]);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let g = a8.random_element(&mut rng);
            let h = a8.random_element(&mut rng);
            let lhs = &v.evaluate(&g).unwrap() * &v.evaluate(&h).unwrap();
            assert_eq!(lhs, v.evaluate(&g.mul(&h)).unwrap());
            assert_eq!(v.evaluate(&g).unwrap(), FpMatrix::permutation(f3(), &g.images()));
        }
        assert!(matches!(v.evaluate(&Perm::parse("(1,2)", 8).unwrap()), Err(Error::NotMember)));
    }

    #[test]
    fn constructor_rejects_non_homomorphisms() {
        let s3 = Arc::new(PermGroup::symmetric(3));
        let f = f3();
        let neg = FpMatrix::from_rows(f, &[[2]]).unwrap();
        let one = FpMatrix::identity(f, 1);
        assert!(MatRep::new(Some(s3.clone()), f, 1, vec![neg.clone(), neg.clone()]).is_err());
        assert!(MatRep::new(Some(s3.clone()), f, 1, vec![neg, one]).is_ok());
        assert!(MatRep::new(Some(s3), f, 1, vec![FpMatrix::zeros(f, 1, 1); 2]).is_err());
    }

    #[test]
    fn induction_of_trivial_is_permutation_module() {
        let a8 = Arc::new(PermGroup::alternating(8));
        let a7 = Arc::new(a8.stabilizer(&[7]).unwrap());
        let ind = MatRep::trivial(a7, f3()).induce(&a8).unwrap();
        assert_eq!(ind.dim(), 8);
        assert!(ind.is_permutation_rep());
        MatRep::new(Some(a8), f3(), 8, ind.mats().to_vec()).unwrap();
    }
}
