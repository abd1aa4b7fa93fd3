//! Groups and modules of the shipped scenarios, built from explicit generators.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::blocks::{idempotent_from_character, GroupAlgebraElement, LinearCharacter};
use crate::ffla::{FpMatrix, PrimeField};
use crate::modrep::{radical_series, MatRep};
use crate::permgrp::{
    normalizer, semidirect_product, ModuleFactor, Perm, PermGroup, SearchBound, SemidirectLayout,
};
use crate::{Error, Result};

pub fn f2() -> PrimeField {
    PrimeField::new(2).expect("2 is prime")
}

pub fn f3() -> PrimeField {
    PrimeField::new(3).expect("3 is prime")
}

/// The alternating group of degree 8 on `(1,2,3)` and `(2,3,4,5,6,7,8)`.
pub fn a8() -> PermGroup {
    PermGroup::from_cycles(8, &["(1,2,3)", "(2,3,4,5,6,7,8)"]).expect("valid cycles")
}

/// Point stabilizer of 8 in [`a8`].
pub fn a7() -> PermGroup {
    PermGroup::from_cycles(8, &["(1,2,3)", "(1,2,3,4,5,6,7)"]).expect("valid cycles")
}

/// The Sylow 3-subgroup `<(1,2,3), (4,5,6)>`.
pub fn sylow3() -> PermGroup {
    PermGroup::from_cycles(8, &["(1,2,3)", "(4,5,6)"]).expect("valid cycles")
}

/// Setwise stabilizer of `{7,8}` in [`a8`]; its cosets are the 28 two-subsets.
pub fn two_subset_stabilizer() -> PermGroup {
    PermGroup::from_cycles(8, &["(1,2,3)", "(2,3,4,5,6)", "(1,2)(7,8)"]).expect("valid cycles")
}

/// `N_{A8}(P)` for [`sylow3`].
pub fn a8_hprime(bound: SearchBound) -> Result<PermGroup> {
    normalizer(&a8(), &sylow3(), bound)
}

fn mat3(rows: [[i64; 2]; 2]) -> FpMatrix {
    FpMatrix::from_rows(f3(), &rows).expect("2x2 rows")
}

/// Generators of `GL_2(3)`: a transvection, the coordinate swap and `diag(-1, 1)`.
pub fn gl23_matrices() -> Vec<FpMatrix> {
    vec![mat3([[1, 1], [0, 1]]), mat3([[0, 1], [1, 0]]), mat3([[2, 0], [0, 1]])]
}

/// Upper triangular matrices: the stabilizer of the line `<(0,1)>`.
pub fn borel_matrices() -> Vec<FpMatrix> {
    vec![mat3([[1, 1], [0, 1]]), mat3([[2, 0], [0, 1]]), mat3([[1, 0], [0, 2]])]
}

/// Monomial matrices, a dihedral group of order 8.
pub fn monomial_d8_matrices() -> Vec<FpMatrix> {
    vec![mat3([[0, 1], [2, 0]]), mat3([[1, 0], [0, 2]])]
}

fn nonzero_vectors() -> Vec<[u8; 2]> {
    (1..9).map(|i| [(i / 3) as u8, (i % 3) as u8]).collect()
}

const LINES: [[u8; 2]; 4] = [[1, 0], [0, 1], [1, 1], [1, 2]];

fn times(v: [u8; 2], m: &FpMatrix) -> [u8; 2] {
    let w = m.vec_mul(&v);
    [w[0], w[1]]
}

fn line_index(v: [u8; 2]) -> usize {
    let lead = if v[0] != 0 { v[0] } else { v[1] };
    let w = [(v[0] * lead) % 3, (v[1] * lead) % 3];
    LINES.iter().position(|&l| l == w).expect("nonzero vector")
}

/// Action of a matrix on the 8 nonzero vectors of `F_3^2`.
pub fn vector_perm(m: &FpMatrix) -> Perm {
    let nz = nonzero_vectors();
    let images = nz
        .iter()
        .map(|&v| {
            let w = times(v, m);
            nz.iter().position(|&x| x == w).expect("invertible")
        })
        .collect();
    Perm::from_images(images).expect("bijection")
}

/// Action of a matrix on the 4 lines of `F_3^2`.
pub fn line_perm(m: &FpMatrix) -> Vec<usize> {
    LINES.iter().map(|&l| line_index(times(l, m))).collect()
}

fn e_coords(line: usize) -> Vec<u8> {
    match line {
        0 => vec![1, 1, 1],
        i => {
            let mut v = vec![0; 3];
            v[i - 1] = 1;
            v
        }
    }
}

/// Action on `E = F_2^4 / <1111>`, the lines permuted by the matrix; the
/// basis is the images of the last three lines.
pub fn e_matrix(m: &FpMatrix) -> FpMatrix {
    let lp = line_perm(m);
    let rows: Vec<Vec<u8>> = (1..4).map(|i| e_coords(lp[i])).collect();
    FpMatrix::from_reduced_rows(f2(), 3, &rows)
}

/// `N = (E x P) : GL_2(3)` with its subgroups, as permutations of 25 points:
/// 8 nonzero vectors of `F_3^2`, then `E` (8 points), then `P` (9 points).
#[derive(Clone, Debug)]
pub struct LocalGroups {
    pub gl23: Arc<PermGroup>,
    pub n: Arc<PermGroup>,
    pub layout: SemidirectLayout,
    pub e: Arc<PermGroup>,
    pub p: Arc<PermGroup>,
    /// `P : D8`, the monomial `D8`.
    pub hprime: Arc<PermGroup>,
    /// `H = H' (E x P)`.
    pub h: Arc<PermGroup>,
    /// `<t> x (P : B)` with `B` the Borel subgroup and `t` the involution of `E` it fixes.
    pub ntilde: Arc<PermGroup>,
}

impl LocalGroups {
    /// The element of the complement acting by the matrix `m`.
    pub fn complement_element(&self, m: &FpMatrix) -> Result<Perm> {
        let mut images = vector_perm(m).images();
        let em = e_matrix(m);
        let off = self.layout.offsets[0];
        for i in 0..8usize {
            let v = vec![(i >> 2) as u8 & 1, (i >> 1) as u8 & 1, i as u8 & 1];
            let w = em.vec_mul(&v);
            images.push(off + (w[0] as usize) * 4 + (w[1] as usize) * 2 + w[2] as usize);
        }
        let off = self.layout.offsets[1];
        for i in 0..9usize {
            let w = m.vec_mul(&[(i / 3) as u8, (i % 3) as u8]);
            images.push(off + w[0] as usize * 3 + w[1] as usize);
        }
        let x = Perm::from_images(images)?;
        if !self.n.contains(&x) {
            return Err(Error::NotMember);
        }
        Ok(x)
    }
}

/// Builds [`LocalGroups`] by the semidirect-product constructor.
pub fn local_groups() -> Result<LocalGroups> {
    let mats = gl23_matrices();
    let gl23 = Arc::new(PermGroup::new(8, mats.iter().map(vector_perm).collect())?);
    let efac = ModuleFactor::new(mats.iter().map(e_matrix).collect());
    let pfac = ModuleFactor::new(mats.clone());
    let (n, layout) = semidirect_product(&[efac, pfac], &gl23)?;
    let n = Arc::new(n);
    let k = gl23.gens().len();
    let etrans = n.gens()[k..k + 3].to_vec();
    let ptrans = n.gens()[k + 3..k + 5].to_vec();
    let e = Arc::new(n.subgroup(etrans.clone())?);
    let p = Arc::new(n.subgroup(ptrans.clone())?);
    let mut out = LocalGroups {
        gl23,
        n: n.clone(),
        layout,
        e,
        p,
        hprime: n.clone(),
        h: n.clone(),
        ntilde: n.clone(),
    };
    let mut hp: Vec<Perm> = monomial_d8_matrices()
        .iter()
        .map(|m| out.complement_element(m))
        .collect::<Result<_>>()?;
    hp.extend(ptrans.iter().cloned());
    out.hprime = Arc::new(n.subgroup(hp.clone())?);
    hp.extend(etrans.iter().cloned());
    out.h = Arc::new(n.subgroup(hp)?);
    let mut nt: Vec<Perm> = borel_matrices()
        .iter()
        .map(|m| out.complement_element(m))
        .collect::<Result<_>>()?;
    nt.extend(ptrans);
    // line <(0,1)> is E's first basis vector, the first translation
    nt.push(etrans[0].clone());
    out.ntilde = Arc::new(n.subgroup(nt)?);
    Ok(out)
}

/// `2 x (3^2 : D12)` built independently: a transposition on two extra
/// points times the affine group `F_3^2 : B`.
pub fn ntilde_reference() -> Result<PermGroup> {
    let b = PermGroup::new(8, borel_matrices().iter().map(vector_perm).collect())?;
    let (pb, layout) = semidirect_product(&[ModuleFactor::new(borel_matrices())], &b)?;
    let d = layout.degree;
    let mut gens: Vec<Perm> = pb
        .gens()
        .iter()
        .map(|g| {
            let mut im = g.images();
            im.extend([d, d + 1]);
            Perm::from_images(im)
        })
        .collect::<Result<_>>()?;
    let mut swap: Vec<usize> = (0..d).collect();
    swap.extend([d + 1, d]);
    gens.push(Perm::from_images(swap)?);
    PermGroup::new(d + 2, gens)
}

/// Characters of `E` as vectors `u` in the sum-zero part of `F_2^4`
/// (coordinates indexed by the lines); `u` maps the class of `x` to `(-1)^{u.x}`.
pub fn e_character(groups: &LocalGroups, u: [u8; 4]) -> Result<LinearCharacter> {
    if u.iter().map(|&x| x as u32).sum::<u32>() % 2 != 0 {
        return Err(Error::invalid("character vector must have even weight"));
    }
    let values = (1..4).map(|i| if u[i] == 1 { 2 } else { 1 }).collect();
    LinearCharacter::new(groups.e.clone(), f3(), values)
}

/// `e_1 + e_2` for the two `D8`-fixed, non-`N`-invariant characters of `E`.
pub fn hprime_fixed_idempotent(groups: &LocalGroups) -> Result<GroupAlgebraElement> {
    let e1 = idempotent_from_character(&e_character(groups, [1, 1, 0, 0])?)?;
    let e2 = idempotent_from_character(&e_character(groups, [0, 0, 1, 1])?)?;
    Ok(e1.add(&e2))
}

fn dual_orbit_lengths(mats: &[FpMatrix]) -> Vec<usize> {
    let duals: Vec<FpMatrix> = mats.iter().map(|m| m.inverse().expect("invertible").transpose()).collect();
    let mut seen = BTreeSet::new();
    let mut lengths = Vec::new();
    for i in 0..8u8 {
        let v = vec![(i >> 2) & 1, (i >> 1) & 1, i & 1];
        if seen.contains(&v) {
            continue;
        }
        let mut orbit = vec![v.clone()];
        seen.insert(v);
        let mut j = 0;
        while j < orbit.len() {
            for d in &duals {
                let w = d.vec_mul(&orbit[j]);
                if seen.insert(w.clone()) {
                    orbit.push(w);
                }
            }
            j += 1;
        }
        lengths.push(orbit.len());
    }
    lengths.sort_unstable();
    lengths
}

/// Checks on the dual of `E`: orbit lengths under `GL_2(3)` and under the
/// monomial `D8`, and the radical layers under `GL_2(3)`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct DualModuleCheck {
    pub gl23_orbits: Vec<usize>,
    pub d8_orbits: Vec<usize>,
    pub gl23_radical_layers: Vec<usize>,
    pub d8_radical_layers: Vec<usize>,
}

pub fn dual_module_check(groups: &LocalGroups, seed: u64) -> Result<DualModuleCheck> {
    let gl = gl23_matrices();
    let d8 = monomial_d8_matrices();
    let e_gl: Vec<FpMatrix> = gl.iter().map(e_matrix).collect();
    let e_d8: Vec<FpMatrix> = d8.iter().map(e_matrix).collect();
    let d8_group = Arc::new(PermGroup::new(8, d8.iter().map(vector_perm).collect())?);
    let gl_rep = MatRep::new(Some(groups.gl23.clone()), f2(), 3, e_gl.clone())?.dual();
    let d8_rep = MatRep::new(Some(d8_group), f2(), 3, e_d8.clone())?.dual();
    Ok(DualModuleCheck {
        gl23_orbits: dual_orbit_lengths(&e_gl),
        d8_orbits: dual_orbit_lengths(&e_d8),
        gl23_radical_layers: radical_series(&gl_rep, seed)?.layer_dims(),
        d8_radical_layers: radical_series(&d8_rep, seed)?.layer_dims(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgrp::fingerprint;

    #[test]
    fn a8_family() {
        assert_eq!(a8().order(), 20160);
        assert_eq!(a7().order(), 2520);
        assert!(a7().is_subgroup_of(&a8()));
        assert_eq!(two_subset_stabilizer().order(), 720);
        assert_eq!(a8_hprime(SearchBound::default()).unwrap().order(), 72);
    }

    #[test]
    fn local_orders_and_fingerprint() {
        let l = local_groups().unwrap();
        assert_eq!(l.gl23.order(), 48);
        assert_eq!(l.n.order(), 3456);
        assert_eq!(l.hprime.order(), 72);
        assert_eq!(l.h.order(), 576);
        assert_eq!(l.ntilde.order(), 216);
        assert!(l.e.is_normal_in(&l.n) && l.p.is_normal_in(&l.n));
        let a = fingerprint(&l.ntilde, 1000).unwrap();
        let b = fingerprint(&ntilde_reference().unwrap(), 1000).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn dual_of_e() {
        let l = local_groups().unwrap();
        let c = dual_module_check(&l, 0).unwrap();
        assert_eq!(c.gl23_orbits, vec![1, 1, 6]);
        assert_eq!(c.d8_orbits, vec![1, 1, 1, 1, 4]);
        assert_eq!(c.gl23_radical_layers, vec![2, 1]);
        assert_eq!(c.d8_radical_layers, vec![1, 2]);
    }

    #[test]
    fn idempotent_is_fixed_by_hprime() {
        let l = local_groups().unwrap();
        let e = hprime_fixed_idempotent(&l).unwrap();
        assert!(e.is_idempotent());
        for x in l.hprime.gens() {
            assert_eq!(e.conjugate(x), e);
        }
        let x = l.complement_element(&mat3([[1, 1], [0, 1]])).unwrap();
        assert_ne!(e.conjugate(&x), e);
    }
}
