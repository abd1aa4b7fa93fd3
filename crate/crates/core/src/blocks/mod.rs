//! Linear characters, idempotents of normal `p'`-subgroups and the
//! projections `V -> V e` they induce.

pub mod io;

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::ffla::{FpMatrix, PrimeField, Subspace};
use crate::modrep::MatRep;
use crate::permgrp::{Perm, PermGroup, Unit};
use crate::{Error, Result};

/// Largest number of value tuples tried by [`linear_characters`].
pub const MAX_CHARACTER_CANDIDATES: u64 = 1_000_000;

/// A homomorphism `G -> F_p^x`, stored by its values on the generators.
#[derive(Clone, Debug)]
pub struct LinearCharacter {
    group: Arc<PermGroup>,
    field: PrimeField,
    values: Vec<u8>,
}

impl LinearCharacter {
    /// Validated constructor: the values must define a homomorphism.
    pub fn new(group: Arc<PermGroup>, field: PrimeField, values: Vec<u8>) -> Result<Self> {
        if values.len() != group.gens().len() {
            return Err(Error::invalid("one value per generator required"));
        }
        if values.iter().any(|&v| v == 0 || v >= field.p()) {
            return Err(Error::invalid("character values must be nonzero residues"));
        }
        let units: Vec<Unit> = values.iter().map(|&value| Unit { field, value }).collect();
        if !group.is_homomorphism(&units, &Unit { field, value: 1 }) {
            return Err(Error::Relator("values are not multiplicative".into()));
        }
        Ok(Self { group, field, values })
    }

    pub fn trivial(group: Arc<PermGroup>, field: PrimeField) -> Self {
        let values = vec![1; group.gens().len()];
        Self { group, field, values }
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 1)
    }

    /// Value at an arbitrary group element.
    pub fn eval(&self, g: &Perm) -> Result<u8> {
        let units: Vec<Unit> = self
            .values
            .iter()
            .map(|&value| Unit { field: self.field, value })
            .collect();
        let mut ev = self.group.evaluator(units, Unit { field: self.field, value: 1 });
        Ok(self.group.eval_element(&mut ev, g)?.value)
    }

    /// Pointwise product.
    pub fn mul(&self, other: &LinearCharacter) -> Result<LinearCharacter> {
        if !Arc::ptr_eq(&self.group, &other.group) && self.group.gens() != other.group.gens() {
            return Err(Error::invalid("characters of different groups"));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| self.field.mul(a, b))
            .collect();
        Ok(Self {
            group: self.group.clone(),
            field: self.field,
            values,
        })
    }

    /// The 1-dimensional module afforded by the character.
    pub fn to_rep(&self) -> MatRep {
        let mats = self
            .values
            .iter()
            .map(|&v| FpMatrix::from_reduced_rows(self.field, 1, &[vec![v]]))
            .collect();
        MatRep::from_parts(Some(self.group.clone()), self.field, 1, mats)
    }
}

/// All homomorphisms `G -> F_p^x`, the trivial one first.
pub fn linear_characters(group: &Arc<PermGroup>, field: PrimeField) -> Result<Vec<LinearCharacter>> {
    let m = group.gens().len();
    let q = field.p() as u64 - 1;
    let total = q.checked_pow(m as u32).filter(|&t| t <= MAX_CHARACTER_CANDIDATES).ok_or_else(|| {
        Error::BoundExceeded(format!("{q}^{m} candidate value tuples"))
    })?;
    let one = Unit { field, value: 1 };
    let mut out = Vec::new();
    for idx in 0..total {
        let mut k = idx;
        let values: Vec<u8> = (0..m)
            .map(|_| {
                let v = (k % q) as u8 + 1;
                k /= q;
                v
            })
            .collect();
        let units: Vec<Unit> = values.iter().map(|&value| Unit { field, value }).collect();
        if group.is_homomorphism(&units, &one) {
            out.push(LinearCharacter {
                group: group.clone(),
                field,
                values,
            });
        }
    }
    Ok(out)
}

/// Finitely supported element of `kG`.
#[derive(Clone, Debug)]
pub struct GroupAlgebraElement {
    group: Arc<PermGroup>,
    field: PrimeField,
    terms: BTreeMap<Perm, u8>,
}

impl PartialEq for GroupAlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.terms == other.terms
    }
}

impl Eq for GroupAlgebraElement {}

impl GroupAlgebraElement {
    /// Validated constructor: every support element must lie in the group.
    pub fn new(group: Arc<PermGroup>, field: PrimeField, terms: impl IntoIterator<Item = (Perm, u8)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (g, c) in terms {
            if !group.contains(&g) {
                return Err(Error::NotMember);
            }
            let e = map.entry(g).or_insert(0u8);
            *e = field.add(*e, c % field.p());
        }
        map.retain(|_, c| *c != 0);
        Ok(Self {
            group,
            field,
            terms: map,
        })
    }

    pub fn one(group: Arc<PermGroup>, field: PrimeField) -> Self {
        let id = group.identity();
        Self::new(group, field, [(id, 1)]).expect("identity is a member")
    }

    pub fn zero(group: Arc<PermGroup>, field: PrimeField) -> Self {
        Self {
            group,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn terms(&self) -> &BTreeMap<Perm, u8> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (g, &c) in &other.terms {
            let e = terms.entry(g.clone()).or_insert(0);
            *e = self.field.add(*e, c);
        }
        terms.retain(|_, c| *c != 0);
        Self {
            group: self.group.clone(),
            field: self.field,
            terms,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<Perm, u8> = BTreeMap::new();
        for (g, &a) in &self.terms {
            for (h, &b) in &other.terms {
                let e = terms.entry(g.mul(h)).or_insert(0);
                *e = self.field.add(*e, self.field.mul(a, b));
            }
        }
        terms.retain(|_, c| *c != 0);
        Self {
            group: self.group.clone(),
            field: self.field,
            terms,
        }
    }

    /// `x^-1 e x`.
    pub fn conjugate(&self, x: &Perm) -> Self {
        Self {
            group: self.group.clone(),
            field: self.field,
            terms: self.terms.iter().map(|(g, &c)| (g.conj(x), c)).collect(),
        }
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul(self) == *self
    }

    /// Image in a representation of a group containing the support.
    pub fn matrix(&self, rep: &MatRep) -> Result<FpMatrix> {
        let g = rep.group()?;
        let mut ev = rep.evaluator()?;
        let mut acc = FpMatrix::zeros(rep.field(), rep.dim(), rep.dim());
        for (x, &c) in &self.terms {
            acc.add_scaled(&g.eval_element(&mut ev, x)?, c);
        }
        Ok(acc)
    }
}

/// `e = |E|^-1 sum_{g in E} lambda(g^-1) g`.
pub fn idempotent_from_character(lambda: &LinearCharacter) -> Result<GroupAlgebraElement> {
    let e = lambda.group();
    let f = lambda.field();
    let order = e.order();
    if order % f.p() as u128 == 0 {
        return Err(Error::invalid(format!("p = {} divides |E| = {order}", f.p())));
    }
    let inv = f.inv((order % f.p() as u128) as u8).expect("p does not divide |E|");
    let units: Vec<Unit> = lambda.values().iter().map(|&value| Unit { field: f, value }).collect();
    let mut ev = e.evaluator(units, Unit { field: f, value: 1 });
    let mut terms = Vec::new();
    for g in e.elements(MAX_CHARACTER_CANDIDATES as u128)? {
        let v = e.eval_element(&mut ev, &g.inv())?.value;
        terms.push((g, f.mul(inv, v)));
    }
    GroupAlgebraElement::new(e.clone(), f, terms)
}

/// Image `V e` with the action of a subgroup `D` that centralizes `e`.
#[derive(Clone, Debug)]
pub struct Projection {
    pub module: MatRep,
    pub subspace: Subspace,
}

/// Projects `V` (a module for `H`) by an element of `kE`, `E` normal in `H`,
/// keeping the action of `designated <= H`, which must fix `e` under conjugation.
pub fn project(v: &MatRep, e: &GroupAlgebraElement, designated: &Arc<PermGroup>) -> Result<Projection> {
    let h = v.group()?;
    if !e.group().is_subgroup_of(h) {
        return Err(Error::NotSubgroup("support group is not inside the module's group".into()));
    }
    if !e.group().is_normal_in(h) {
        return Err(Error::invalid("support group is not normal"));
    }
    if !designated.is_subgroup_of(h) {
        return Err(Error::NotSubgroup("designated subgroup".into()));
    }
    for d in designated.gens() {
        if e.conjugate(d) != *e {
            return Err(Error::invalid(format!("{d} does not fix the idempotent")));
        }
    }
    let m = e.matrix(v)?;
    let subspace = m.row_space();
    let res = v.restrict(designated)?;
    let module = res.submodule(&subspace)?;
    Ok(Projection { module, subspace })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> PrimeField {
        PrimeField::new(3).unwrap()
    }

    #[test]
    fn character_counts() {
        let d8 = Arc::new(PermGroup::from_cycles(4, &["(1,2,3,4)", "(1,3)"]).unwrap());
        assert_eq!(linear_characters(&d8, f3()).unwrap().len(), 4);
        let a8 = Arc::new(PermGroup::alternating(8));
        let chars = linear_characters(&a8, f3()).unwrap();
        assert_eq!(chars.len(), 1);
        assert!(chars[0].is_trivial());
    }

    #[test]
    fn idempotents_of_elementary_abelian_2_group() {
        let e = Arc::new(PermGroup::from_cycles(6, &["(1,2)", "(3,4)", "(5,6)"]).unwrap());
        let chars = linear_characters(&e, f3()).unwrap();
        assert_eq!(chars.len(), 8);
        let idems: Vec<_> = chars.iter().map(|c| idempotent_from_character(c).unwrap()).collect();
        let triv = &idems[0];
        // 8^-1 = 2 mod 3
        assert!(triv.terms().values().all(|&c| c == 2));
        let mut sum = GroupAlgebraElement::zero(e.clone(), f3());
        for (i, a) in idems.iter().enumerate() {
            assert!(a.is_idempotent());
            for b in &idems[i + 1..] {
                assert!(a.mul(b).is_zero());
            }
            sum = sum.add(a);
        }
        assert_eq!(sum, GroupAlgebraElement::one(e.clone(), f3()));
        let t = Arc::new(PermGroup::trivial(3));
        let one = idempotent_from_character(&LinearCharacter::trivial(t.clone(), f3())).unwrap();
        assert_eq!(one, GroupAlgebraElement::one(t, f3()));
    }

    #[test]
    fn rejects_p_dividing_order() {
        let c3 = Arc::new(PermGroup::from_cycles(3, &["(1,2,3)"]).unwrap());
        assert!(idempotent_from_character(&LinearCharacter::trivial(c3, f3())).is_err());
    }
}
