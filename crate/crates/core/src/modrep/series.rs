//! Radical and socle series.

use super::hom::hom_space;
use super::meataxe::{chop, Constituents};
use super::rep::MatRep;
use crate::ffla::Subspace;
use crate::{Error, Result};

/// Layers of a Loewy series: radical series top to bottom, socle series bottom to top.
#[derive(Clone, Debug)]
pub struct SeriesReport {
    pub layers: Vec<Constituents>,
    /// Each layer as a semisimple module.
    pub layer_modules: Vec<MatRep>,
}

impl SeriesReport {
    pub fn layer_dims(&self) -> Vec<usize> {
        self.layer_modules.iter().map(|m| m.dim()).collect()
    }
}

/// `rad(M)`: the intersection of the kernels of all maps from `M` to simple modules.
pub fn radical(rep: &MatRep, seed: u64) -> Result<Subspace> {
    let simples = chop(rep, seed)?;
    let mut k = Subspace::full(rep.field(), rep.dim());
    for c in &simples.items {
        for phi in hom_space(rep, &c.module)? {
            k = k.intersection(&phi.left_nullspace().row_space());
        }
    }
    Ok(k)
}

/// `soc(M)`: the sum of the images of all maps from simple modules into `M`.
pub fn socle(rep: &MatRep, seed: u64) -> Result<Subspace> {
    let simples = chop(rep, seed)?;
    let mut s = Subspace::new(rep.field(), rep.dim());
    for c in &simples.items {
        for phi in hom_space(&c.module, rep)? {
            for r in phi.row_vecs() {
                s.insert(r);
            }
        }
    }
    Ok(s)
}

pub fn radical_series(rep: &MatRep, seed: u64) -> Result<SeriesReport> {
    let mut layers = Vec::new();
    let mut layer_modules = Vec::new();
    let mut cur = rep.clone();
    while cur.dim() > 0 {
        let r = radical(&cur, seed)?;
        if r.dim() == cur.dim() {
            return Err(Error::invalid("radical of a nonzero module is the whole module"));
        }
        let top = cur.quotient(&r)?;
        layers.push(chop(&top, seed)?);
        layer_modules.push(top);
        cur = cur.submodule(&r)?;
    }
    Ok(SeriesReport { layers, layer_modules })
}

/// Socle series, obtained by dualizing the radical series of the dual module.
pub fn socle_series(rep: &MatRep, seed: u64) -> Result<SeriesReport> {
    let rs = radical_series(&rep.dual(), seed)?;
    let mut layers = Vec::new();
    let mut layer_modules = Vec::new();
    for m in rs.layer_modules {
        let d = m.dual();
        layers.push(chop(&d, seed)?);
        layer_modules.push(d);
    }
    Ok(SeriesReport { layers, layer_modules })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffla::PrimeField;
    use crate::modrep::{perm_rep, regular_rep};
    use crate::permgrp::{PermAction, PermGroup};
    use std::sync::Arc;

    #[test]
    fn regular_c3_is_uniserial() {
        let f = PrimeField::new(3).unwrap();
        let c3 = Arc::new(PermGroup::from_cycles(3, &["(1,2,3)"]).unwrap());
        let v = regular_rep(&c3, f).unwrap();
        assert_eq!(radical_series(&v, 0).unwrap().layer_dims(), vec![1, 1, 1]);
        assert_eq!(socle_series(&v, 0).unwrap().layer_dims(), vec![1, 1, 1]);
        // (g - 1)-power filtration: rad = image of g - 1
        let g = &v.mats()[0];
        let gm1 = g - &v.identity_matrix();
        assert!(radical(&v, 0).unwrap().same_as(&gm1.row_space()));
        assert!(socle(&v, 0).unwrap().same_as(&(&gm1 * &gm1).row_space()));
    }

    #[test]
    fn semisimple_has_one_layer() {
        let f = PrimeField::new(3).unwrap();
        let s4 = Arc::new(PermGroup::from_cycles(4, &["(1,2)", "(1,2,3,4)"]).unwrap());
        // S4 natural module over F3: p does not divide 4, 1 + 3 splits
        let v = perm_rep(&PermAction::natural(s4), f);
        assert_eq!(radical_series(&v, 0).unwrap().layer_dims(), vec![4]);
    }
}
