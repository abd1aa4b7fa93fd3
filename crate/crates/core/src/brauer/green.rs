use std::sync::Arc;

use super::{brauer_quotient, is_p_group};
use crate::ffla::FpMatrix;
use crate::modrep::{indecomposable_summands, vertex, Certificate, MatRep};
use crate::permgrp::PermGroup;
use crate::{Error, Result};

/// `V(P)` for a module whose basis is permuted by `P`.
#[derive(Clone, Debug)]
pub struct TrivialSourceImage {
    pub module: MatRep,
    /// Whether `N` also permutes the basis, so that `V(P)` is realized on the
    /// `P`-fixed basis vectors.
    pub fast_path: bool,
    /// The `P`-fixed basis indices (fast path only).
    pub fixed_points: Vec<usize>,
}

fn permutations(rep: &MatRep, h: &PermGroup) -> Result<Option<Vec<Vec<usize>>>> {
    let g = rep.group()?;
    let mut ev = rep.evaluator()?;
    let mut out = Vec::new();
    for x in h.gens() {
        match g.eval_element(&mut ev, x)?.as_permutation() {
            Some(p) => out.push(p),
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}

/// The Brauer quotient of a module with a `P`-stable basis, read off the
/// fixed basis vectors when `N` permutes the basis too.
pub fn green_trivial_source(v: &MatRep, p: &PermGroup, n: &Arc<PermGroup>) -> Result<TrivialSourceImage> {
    let g = v.group()?;
    if !is_p_group(p, v.p() as u64) {
        return Err(Error::invalid(format!("|P| = {} is not a power of {}", p.order(), v.p())));
    }
    if !p.is_subgroup_of(g) || !n.is_subgroup_of(g) {
        return Err(Error::NotSubgroup("P and N must lie in the module's group".into()));
    }
    if !n.gens().iter().all(|x| p.is_normalized_by(x)) {
        return Err(Error::invalid("N does not normalize P"));
    }
    let pperms = permutations(v, p)?.ok_or_else(|| Error::invalid("basis is not permuted by P"))?;
    let fixed: Vec<usize> = (0..v.dim()).filter(|&i| pperms.iter().all(|q| q[i] == i)).collect();
    let Some(nperms) = permutations(v, n)? else {
        let bq = brauer_quotient(v, p, n)?;
        return Ok(TrivialSourceImage {
            module: bq.quotient_rep,
            fast_path: false,
            fixed_points: Vec::new(),
        });
    };
    let mut position = vec![usize::MAX; v.dim()];
    for (a, &i) in fixed.iter().enumerate() {
        position[i] = a;
    }
    let f = v.field();
    let mats = nperms
        .iter()
        .map(|q| {
            let images: Vec<usize> = fixed.iter().map(|&i| position[q[i]]).collect();
            if images.contains(&usize::MAX) {
                return Err(Error::invalid("N does not preserve the P-fixed basis vectors"));
            }
            Ok(FpMatrix::permutation(f, &images))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TrivialSourceImage {
        module: MatRep::new(Some(n.clone()), f, fixed.len(), mats)?,
        fast_path: true,
        fixed_points: fixed,
    })
}

/// Result of restricting to `N` and stripping the summands with smaller vertex.
#[derive(Clone, Debug)]
pub struct GreenCorrespondence {
    pub module: MatRep,
    /// All indecomposable summands of `Res_N(V)`, the correspondent included.
    pub summands: Vec<MatRep>,
    /// Dimensions of all indecomposable summands of `Res_N(V)`.
    pub summand_dims: Vec<usize>,
    /// Order of a vertex of each summand.
    pub vertex_orders: Vec<u128>,
    /// Position of the correspondent among the summands.
    pub index: usize,
}

struct Stripped {
    summands: Vec<MatRep>,
    vertex_orders: Vec<u128>,
    hits: Vec<usize>,
}

fn strip(v: &MatRep, p: &PermGroup, n: &Arc<PermGroup>, seed: u64) -> Result<Stripped> {
    let g = v.group()?;
    if !p.is_subgroup_of(n) || !n.is_subgroup_of(g) {
        return Err(Error::NotSubgroup("need P <= N <= G".into()));
    }
    if !p.is_normal_in(n) {
        return Err(Error::invalid("P is not normal in N"));
    }
    let res = v.restrict(n)?;
    let dec = indecomposable_summands(&res, seed)?;
    if dec.certificates.iter().any(|c| *c != Certificate::LocalEndomorphismRing) {
        return Err(Error::Inconclusive("indecomposability of a summand is not certified".into()));
    }
    let mut vertex_orders = Vec::new();
    let mut hits = Vec::new();
    for (i, s) in dec.summands.iter().enumerate() {
        let q = vertex(s, seed)?;
        if q.order() == p.order() && q.same_group(p) {
            hits.push(i);
        }
        vertex_orders.push(q.order());
    }
    Ok(Stripped {
        summands: dec.summands,
        vertex_orders,
        hits,
    })
}

/// Green correspondent of an indecomposable `kG`-module with vertex `P`,
/// with `N = N_G(P)` supplied by the caller.
pub fn green_correspondent(v: &MatRep, p: &PermGroup, n: &Arc<PermGroup>, seed: u64) -> Result<GreenCorrespondence> {
    let st = strip(v, p, n, seed)?;
    let index = match st.hits.as_slice() {
        [i] => *i,
        [] => return Err(Error::invalid("no summand has vertex P")),
        _ => return Err(Error::invalid("more than one summand has vertex P; V is not indecomposable")),
    };
    Ok(GreenCorrespondence {
        module: st.summands[index].clone(),
        summand_dims: st.summands.iter().map(|s| s.dim()).collect(),
        summands: st.summands,
        vertex_orders: st.vertex_orders,
        index,
    })
}

/// Sum of the Green correspondents of the indecomposable summands of `V`
/// that have vertex `P`; summands with smaller vertex contribute nothing.
/// `None` when no summand has vertex `P`.
pub fn green_pipeline(v: &MatRep, p: &PermGroup, n: &Arc<PermGroup>, seed: u64) -> Result<Option<MatRep>> {
    let dec = indecomposable_summands(v, seed)?;
    let mut acc: Option<MatRep> = None;
    for m in &dec.summands {
        let st = strip(m, p, n, seed)?;
        let piece = match st.hits.as_slice() {
            [] => continue,
            [i] => st.summands[*i].clone(),
            _ => return Err(Error::invalid("a summand of V restricts with two vertex-P pieces")),
        };
        acc = Some(match acc {
            None => piece,
            Some(a) => a.direct_sum(&piece)?,
        });
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::brauer_quotient;
    use crate::ffla::PrimeField;
    use crate::modrep::{is_isomorphic, perm_rep};
    use crate::permgrp::{normalizer, PermAction};

    fn f3() -> PrimeField {
        PrimeField::new(3).unwrap()
    }

    #[test]
    fn fast_path_matches_generic_on_omega8() {
        let a8 = Arc::new(PermGroup::alternating(8));
        let v = perm_rep(&PermAction::natural(a8.clone()), f3());
        let p = PermGroup::from_cycles(8, &["(1,2,3)", "(4,5,6)"]).unwrap();
        let n = Arc::new(normalizer(&a8, &p, Default::default()).unwrap());
        let fast = green_trivial_source(&v, &p, &n).unwrap();
        assert!(fast.fast_path);
        assert_eq!(fast.fixed_points, vec![6, 7]);
        let generic = brauer_quotient(&v, &p, &n).unwrap();
        assert!(is_isomorphic(&fast.module, &generic.quotient_rep).unwrap().is_some());
    }

    #[test]
    fn trivial_module_goes_to_trivial_module() {
        let a8 = Arc::new(PermGroup::alternating(8));
        let p = PermGroup::from_cycles(8, &["(1,2,3)", "(4,5,6)"]).unwrap();
        let n = Arc::new(normalizer(&a8, &p, Default::default()).unwrap());
        let k = MatRep::trivial(a8, f3());
        let out = green_trivial_source(&k, &p, &n).unwrap();
        assert!(is_isomorphic(&out.module, &MatRep::trivial(n.clone(), f3())).unwrap().is_some());
        let gc = green_correspondent(&k, &p, &n, 0).unwrap();
        assert_eq!(gc.summand_dims, vec![1]);
    }

    #[test]
    fn rejects_basis_not_permuted() {
        let c3 = Arc::new(PermGroup::from_cycles(3, &["(1,2,3)"]).unwrap());
        let v = perm_rep(&PermAction::natural(c3.clone()), f3());
        let t = FpMatrix::from_rows(f3(), &[[1, 1, 0], [0, 1, 0], [0, 0, 1]]).unwrap();
        let w = v.change_basis(&t).unwrap();
        assert!(green_trivial_source(&w, &c3, &c3).is_err());
    }
}
