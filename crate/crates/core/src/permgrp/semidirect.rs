//! Split extensions `(q_1^{d_1} x ... ) : Q` as permutation groups.

use super::group::PermGroup;
use super::perm::Perm;
use crate::ffla::FpMatrix;
use crate::{Error, Result};

/// An elementary abelian `q^d` together with the matrix by which each
/// generator of `Q` acts on it (row vectors, `x -> x * A`).
#[derive(Clone, Debug)]
pub struct ModuleFactor {
    pub matrices: Vec<FpMatrix>,
}

impl ModuleFactor {
    pub fn new(matrices: Vec<FpMatrix>) -> Self {
        Self { matrices }
    }
}

fn vector_index(v: &[u8], q: usize) -> usize {
    v.iter().fold(0, |acc, &x| acc * q + x as usize)
}

fn index_vector(mut i: usize, q: usize, d: usize) -> Vec<u8> {
    let mut v = vec![0u8; d];
    for k in (0..d).rev() {
        v[k] = (i % q) as u8;
        i /= q;
    }
    v
}

/// Layout of the domain: `Q`'s own points first, then one block of `q^d`
/// points per factor, vectors numbered lexicographically.
#[derive(Clone, Debug)]
pub struct SemidirectLayout {
    pub q_degree: usize,
    pub offsets: Vec<usize>,
    pub sizes: Vec<usize>,
    pub degree: usize,
}

/// Builds `(V_1 x ... x V_r) : Q` acting on the disjoint union of `Q`'s
/// points and the affine spaces `V_i`; `Q`'s generators come first, then
/// the unit-vector translations of each factor.
pub fn semidirect_product(factors: &[ModuleFactor], q: &PermGroup) -> Result<(PermGroup, SemidirectLayout)> {
    let qd = q.degree();
    let mut offsets = Vec::new();
    let mut sizes = Vec::new();
    let mut degree = qd;
    let mut expected = q.order();
    for f in factors {
        if f.matrices.len() != q.gens().len() {
            return Err(Error::invalid("one action matrix per generator of Q required"));
        }
        let m0 = f
            .matrices
            .first()
            .ok_or_else(|| Error::invalid("Q has no generators"))?;
        let (p, d) = (m0.p() as usize, m0.rows());
        for m in &f.matrices {
            if m.p() as usize != p || m.rows() != d || !m.is_square() {
                return Err(Error::dim("action matrices of one factor differ in shape"));
            }
            if !m.is_invertible() {
                return Err(Error::Singular);
            }
        }
        if !q.is_homomorphism(&f.matrices, &FpMatrix::identity(m0.field(), d)) {
            return Err(Error::Relator("action matrices do not define a homomorphism".into()));
        }
        let size = p.checked_pow(d as u32).filter(|&s| s <= 1 << 20).ok_or_else(|| {
            Error::BoundExceeded(format!("{p}^{d} affine points"))
        })?;
        offsets.push(degree);
        sizes.push(size);
        degree += size;
        expected *= size as u128;
    }
    let mut gens = Vec::new();
    for (j, qg) in q.gens().iter().enumerate() {
        let mut images: Vec<usize> = qg.images();
        for (f, &size) in factors.iter().zip(&sizes) {
            let m = &f.matrices[j];
            let (p, d) = (m.p() as usize, m.rows());
            let off = images.len();
            for i in 0..size {
                let w = m.vec_mul(&index_vector(i, p, d));
                images.push(off + vector_index(&w, p));
            }
        }
        gens.push(Perm::from_images(images)?);
    }
    for (fi, f) in factors.iter().enumerate() {
        let m = &f.matrices[0];
        let (p, d) = (m.p() as usize, m.rows());
        for e in 0..d {
            let mut images: Vec<usize> = (0..degree).collect();
            for i in 0..sizes[fi] {
                let mut v = index_vector(i, p, d);
                v[e] = ((v[e] as usize + 1) % p) as u8;
                images[offsets[fi] + i] = offsets[fi] + vector_index(&v, p);
            }
            gens.push(Perm::from_images(images)?);
        }
    }
    let g = PermGroup::new(degree, gens)?;
    if g.order() != expected {
        return Err(Error::Relator(format!(
            "product has order {} instead of {expected}",
            g.order()
        )));
    }
    Ok((
        g,
        SemidirectLayout {
            q_degree: qd,
            offsets,
            sizes,
            degree,
        },
    ))
}

/// The normal subgroup generated by the translations.
pub fn translation_subgroup(g: &PermGroup, q: &PermGroup) -> Result<PermGroup> {
    PermGroup::new(g.degree(), g.gens()[q.gens().len()..].to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffla::PrimeField;

    #[test]
    fn trivial_action_is_direct_product() {
        let f2 = PrimeField::new(2).unwrap();
        let q = PermGroup::from_cycles(3, &["(1,2,3)"]).unwrap();
        let fac = ModuleFactor::new(vec![FpMatrix::identity(f2, 2)]);
        let (g, layout) = semidirect_product(&[fac], &q).unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(layout.degree, 7);
        assert!(g.is_abelian());
        let t = translation_subgroup(&g, &q).unwrap();
        assert_eq!(t.order(), 4);
        assert!(t.is_abelian());
        assert!(t.is_normal_in(&g));
    }

    #[test]
    fn affine_group_of_the_plane() {
        let f3 = PrimeField::new(3).unwrap();
        // Q = D8 as the monomial subgroup of GL2(3), on 4 points
        let q = PermGroup::from_cycles(4, &["(1,2,3,4)", "(1,3)"]).unwrap();
        let a = FpMatrix::from_rows(f3, &[[0, 1], [2, 0]]).unwrap();
        let b = FpMatrix::from_rows(f3, &[[1, 0], [0, 2]]).unwrap();
        let (g, _) = semidirect_product(&[ModuleFactor::new(vec![a.clone(), b.clone()])], &q).unwrap();
        assert_eq!(g.order(), 72);
        let bad = FpMatrix::from_rows(f3, &[[1, 1], [0, 1]]).unwrap();
        assert!(semidirect_product(&[ModuleFactor::new(vec![a, bad])], &q).is_err());
    }
}
