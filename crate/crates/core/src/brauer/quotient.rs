use std::sync::Arc;

use super::is_p_group;
use crate::ffla::{FpMatrix, Subspace};
use crate::modrep::MatRep;
use crate::permgrp::{maximal_subgroups_of_p_group, right_transversal, PermGroup};
use crate::{Error, Result};

/// Bound on subgroup enumeration inside `P`.
const P_GROUP_BOUND: u128 = 100_000;

/// `V^K` as a subspace of `V`.
pub fn fixed_points(rep: &MatRep, k: &PermGroup) -> Result<Subspace> {
    let g = rep.group()?;
    if !k.is_subgroup_of(g) {
        return Err(Error::NotSubgroup("K is not inside the module's group".into()));
    }
    let n = rep.dim();
    let f = rep.field();
    let mut ev = rep.evaluator()?;
    let mut stacked: Option<FpMatrix> = None;
    for x in k.gens() {
        let m = g.eval_element(&mut ev, x)?;
        let d = m.sub(&FpMatrix::identity(f, n))?;
        stacked = Some(match stacked {
            None => d,
            Some(s) => s.hstack(&d)?,
        });
    }
    Ok(match stacked {
        None => Subspace::full(f, n),
        Some(s) => s.left_nullspace().row_space(),
    })
}

/// `Tr_Q^P(U) = { sum_t u * t : u in U }` over a right transversal of `Q` in `P`.
pub fn relative_trace(rep: &MatRep, q: &PermGroup, p: &PermGroup, subspace: &Subspace) -> Result<Subspace> {
    if !q.is_subgroup_of(p) {
        return Err(Error::NotSubgroup("Q is not inside P".into()));
    }
    let g = rep.group()?;
    if !p.is_subgroup_of(g) {
        return Err(Error::NotSubgroup("P is not inside the module's group".into()));
    }
    let mut ev = rep.evaluator()?;
    for x in q.gens() {
        let m = g.eval_element(&mut ev, x)?;
        if subspace.rows().iter().any(|r| m.vec_mul(r) != *r) {
            return Err(Error::invalid("subspace is not fixed by Q"));
        }
    }
    let f = rep.field();
    let mut trace = FpMatrix::zeros(f, rep.dim(), rep.dim());
    for t in right_transversal(p, q)? {
        trace.add_scaled(&g.eval_element(&mut ev, &t)?, 1);
    }
    Ok(subspace.image(&trace))
}

/// The Brauer quotient `V(P) = V^P / sum_{Q < P maximal} Tr_Q^P(V^Q)`.
#[derive(Clone, Debug)]
pub struct BrauerQuotient {
    pub normalizer: Arc<PermGroup>,
    /// Action of the normalizer on `V(P)`.
    pub quotient_rep: MatRep,
    pub fixed_basis: Subspace,
    /// Traced part, in the coordinates of `V`.
    pub traced_subspace: Subspace,
    /// Rows: images in `V(P)` of the rows of `fixed_basis`.
    pub brauer_map: FpMatrix,
}

impl BrauerQuotient {
    pub fn dim(&self) -> usize {
        self.quotient_rep.dim()
    }
}

/// Computes `V(P)` as a module for `n`, which must normalize `P`.
pub fn brauer_quotient(rep: &MatRep, p: &PermGroup, n: &Arc<PermGroup>) -> Result<BrauerQuotient> {
    let g = rep.group()?;
    let prime = rep.p() as u64;
    if !is_p_group(p, prime) {
        return Err(Error::invalid(format!("|P| = {} is not a power of {prime}", p.order())));
    }
    if !n.is_subgroup_of(g) {
        return Err(Error::NotSubgroup("N is not inside the module's group".into()));
    }
    if !n.gens().iter().all(|x| p.is_normalized_by(x)) {
        return Err(Error::invalid("N does not normalize P"));
    }
    let f = rep.field();
    let fixed = fixed_points(rep, p)?;
    let mut traced = Subspace::new(f, rep.dim());
    for q in maximal_subgroups_of_p_group(p, prime, P_GROUP_BOUND)? {
        let vq = fixed_points(rep, &q)?;
        traced = traced.sum(&relative_trace(rep, &q, p, &vq)?);
    }
    let on_fixed = rep.restrict(n)?.submodule(&fixed)?;
    let traced_coords = Subspace::from_rows(
        f,
        fixed.dim(),
        traced.rows().iter().map(|r| fixed.coords(r).expect("traces are P-fixed")),
    );
    let quotient_rep = on_fixed.quotient(&traced_coords)?;
    let mut brauer_map = FpMatrix::zeros(f, fixed.dim(), quotient_rep.dim());
    for i in 0..fixed.dim() {
        let mut e = vec![0u8; fixed.dim()];
        e[i] = 1;
        brauer_map.row_mut(i).copy_from_slice(&traced_coords.quotient_coords(&e));
    }
    Ok(BrauerQuotient {
        normalizer: n.clone(),
        quotient_rep,
        fixed_basis: fixed,
        traced_subspace: traced,
        brauer_map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffla::PrimeField;
    use crate::modrep::{perm_rep, regular_rep};
    use crate::permgrp::PermAction;

    fn f3() -> PrimeField {
        PrimeField::new(3).unwrap()
    }

    #[test]
    fn regular_c3() {
        let c3 = Arc::new(PermGroup::from_cycles(3, &["(1,2,3)"]).unwrap());
        let v = regular_rep(&c3, f3()).unwrap();
        let fixed = fixed_points(&v, &c3).unwrap();
        assert_eq!(fixed.dim(), 1);
        assert!(fixed.contains(&[1, 1, 1]));
        let one = PermGroup::trivial(3);
        let tr = relative_trace(&v, &one, &c3, &Subspace::full(f3(), 3)).unwrap();
        assert!(tr.same_as(&fixed));
        let bq = brauer_quotient(&v, &c3, &c3).unwrap();
        assert_eq!(bq.dim(), 0);
    }

    #[test]
    fn omega8_at_p() {
        let a8 = Arc::new(PermGroup::alternating(8));
        let v = perm_rep(&PermAction::natural(a8.clone()), f3());
        let p = PermGroup::from_cycles(8, &["(1,2,3)", "(4,5,6)"]).unwrap();
        let fixed = fixed_points(&v, &p).unwrap();
        // orbit sums of {1,2,3}, {4,5,6}, {7}, {8}
        assert_eq!(fixed.dim(), 4);
        assert!(fixed.contains(&[1, 1, 1, 0, 0, 0, 0, 0]));
        assert!(fixed.contains(&[0, 0, 0, 0, 0, 0, 1, 0]));
        assert!(fixed.contains(&[0, 0, 0, 0, 0, 0, 0, 1]));
        let n = Arc::new(crate::permgrp::normalizer(&a8, &p, Default::default()).unwrap());
        let bq = brauer_quotient(&v, &p, &n).unwrap();
        assert_eq!(bq.dim(), 2);
        assert_eq!(bq.brauer_map.rank(), 2);
        let triv = PermGroup::trivial(8);
        let bq1 = brauer_quotient(&v, &triv, &a8).unwrap();
        assert_eq!(bq1.dim(), 8);
    }

    #[test]
    fn trace_from_index_p_kills_fixed_basis_vectors() {
        let a8 = Arc::new(PermGroup::alternating(8));
        let v = perm_rep(&PermAction::natural(a8), f3());
        let p = PermGroup::from_cycles(8, &["(1,2,3)"]).unwrap();
        let one = PermGroup::trivial(8);
        let e7 = Subspace::from_rows(f3(), 8, [vec![0, 0, 0, 0, 0, 0, 1, 0]]);
        assert_eq!(relative_trace(&v, &one, &p, &e7).unwrap().dim(), 0);
        assert!(relative_trace(&v, &p, &one, &e7).is_err());
    }
}
