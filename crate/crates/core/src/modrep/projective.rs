//! Higman's criterion: projectivity, relative projectivity and vertices.

use std::sync::Arc;

use super::hom::hom_space;
use super::rep::MatRep;
use crate::ffla::{FpMatrix, Subspace};
use crate::permgrp::{all_subgroups, right_transversal, sylow, PermGroup, SearchBound};
use crate::{Error, Result};

/// Largest group handled by the trace computations.
pub const MAX_GROUP_ORDER: u128 = 10_000;

fn identity_in_span(traces: &[FpMatrix], n: usize) -> bool {
    let field = traces.first().map(|t| t.field());
    let Some(field) = field else {
        return n == 0;
    };
    let s = Subspace::from_rows(field, n * n, traces.iter().map(|t| t.data().to_vec()));
    s.contains(FpMatrix::identity(field, n).data())
}

/// Whether the identity is a relative trace `Tr_Q^H(phi)` of some `kQ`-endomorphism `phi`.
pub fn is_relatively_projective(rep: &MatRep, q: &Arc<PermGroup>) -> Result<bool> {
    let h = rep.group()?.clone();
    if h.order() > MAX_GROUP_ORDER {
        return Err(Error::BoundExceeded(format!("group order {} above {MAX_GROUP_ORDER}", h.order())));
    }
    let n = rep.dim();
    if n == 0 {
        return Ok(true);
    }
    let transversal = right_transversal(&h, q)?;
    let mut ev = rep.evaluator()?;
    let mats: Vec<(FpMatrix, FpMatrix)> = transversal
        .iter()
        .map(|t| {
            let m = h.eval_element(&mut ev, t)?;
            Ok((m.inverse()?, m))
        })
        .collect::<Result<_>>()?;
    let f = rep.field();
    let traces: Vec<FpMatrix> = if q.is_trivial() {
        // Tr(E_ij)[r][c] = sum_t inv(t)[r][i] * A(t)[j][c]
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = FpMatrix::zeros(f, n, n);
                for (inv, m) in &mats {
                    for r in 0..n {
                        let a = inv.get(r, i);
                        if a != 0 {
                            let src = m.row(j).to_vec();
                            let dst = acc.row_mut(r);
                            for (d, s) in dst.iter_mut().zip(&src) {
                                *d = f.add(*d, f.mul(a, *s));
                            }
                        }
                    }
                }
                out.push(acc);
            }
        }
        out
    } else {
        let res = rep.restrict(q)?;
        hom_space(&res, &res)?
            .iter()
            .map(|psi| {
                let mut acc = FpMatrix::zeros(f, n, n);
                for (inv, m) in &mats {
                    acc.add_scaled(&(&(inv * psi) * m), 1);
                }
                acc
            })
            .collect()
    };
    Ok(identity_in_span(&traces, n))
}

/// Projectivity over `kH`, decided on a Sylow `p`-subgroup.
pub fn is_projective(rep: &MatRep, seed: u64) -> Result<bool> {
    let h = rep.group()?;
    if h.order() > MAX_GROUP_ORDER {
        return Err(Error::BoundExceeded(format!("group order {} above {MAX_GROUP_ORDER}", h.order())));
    }
    let p = Arc::new(sylow(h, rep.p() as u64, seed, SearchBound::default())?);
    let res = rep.restrict(&p)?;
    is_relatively_projective(&res, &Arc::new(PermGroup::trivial(h.degree())))
}

/// A vertex: a subgroup of a Sylow `p`-subgroup of least order relative to
/// which the module is projective.
pub fn vertex(rep: &MatRep, seed: u64) -> Result<Arc<PermGroup>> {
    let h = rep.group()?;
    if h.order() > MAX_GROUP_ORDER {
        return Err(Error::BoundExceeded(format!("group order {} above {MAX_GROUP_ORDER}", h.order())));
    }
    let p = sylow(h, rep.p() as u64, seed, SearchBound::default())?;
    let mut subs = all_subgroups(&p, MAX_GROUP_ORDER)?;
    subs.sort_by_key(|s| s.order());
    for q in subs {
        let q = Arc::new(q);
        if is_relatively_projective(rep, &q)? {
            return Ok(q);
        }
    }
    Err(Error::invalid("module is not relatively projective to a Sylow subgroup"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffla::PrimeField;
    use crate::modrep::regular_rep;

    #[test]
    fn cyclic_group_of_order_three() {
        let f = PrimeField::new(3).unwrap();
        let c3 = Arc::new(PermGroup::from_cycles(3, &["(1,2,3)"]).unwrap());
        let reg = regular_rep(&c3, f).unwrap();
        assert!(is_projective(&reg, 0).unwrap());
        let triv = MatRep::trivial(c3.clone(), f);
        assert!(!is_projective(&triv, 0).unwrap());
        assert_eq!(vertex(&triv, 0).unwrap().order(), 3);
        assert_eq!(vertex(&reg, 0).unwrap().order(), 1);
    }

    #[test]
    fn trivial_module_has_sylow_vertex() {
        let f = PrimeField::new(3).unwrap();
        let s4 = Arc::new(PermGroup::symmetric(4));
        assert_eq!(vertex(&MatRep::trivial(s4, f), 0).unwrap().order(), 3);
    }
}
