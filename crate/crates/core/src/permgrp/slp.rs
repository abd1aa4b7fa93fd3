//! Straight-line programs over the original generators of a group.

use super::perm::Perm;
use crate::ffla::{FpMatrix, PrimeField};

/// Anything that can be multiplied and inverted: permutations, invertible
/// matrices, nonzero scalars.
pub trait GroupLike: Clone {
    fn op(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
}

impl GroupLike for Perm {
    fn op(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn inverse(&self) -> Self {
        self.inv()
    }
}

impl GroupLike for FpMatrix {
    fn op(&self, other: &Self) -> Self {
        self.mul_unchecked(other)
    }
    fn inverse(&self) -> Self {
        self.inverse().expect("group matrices are invertible")
    }
}

/// Nonzero element of `F_p` under multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Unit {
    pub field: PrimeField,
    pub value: u8,
}

impl GroupLike for Unit {
    fn op(&self, other: &Self) -> Self {
        Unit {
            field: self.field,
            value: self.field.mul(self.value, other.value),
        }
    }
    fn inverse(&self) -> Self {
        Unit {
            field: self.field,
            value: self.field.inv(self.value).expect("units are invertible"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Node {
    Identity,
    Gen(usize),
    Mul(usize, usize),
    Inv(usize),
}

/// Arena of straight-line program nodes; every node refers only to earlier ones.
#[derive(Clone, Debug, Default)]
pub struct Slp {
    nodes: Vec<Node>,
}

impl Slp {
    /// Arena whose first `ngens + 1` nodes are the identity and the generators.
    pub fn new(ngens: usize) -> Self {
        let mut nodes = vec![Node::Identity];
        nodes.extend((0..ngens).map(Node::Gen));
        Self { nodes }
    }

    pub const IDENTITY: usize = 0;

    pub fn gen(&self, i: usize) -> usize {
        i + 1
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, i: usize) -> Node {
        self.nodes[i]
    }

    pub fn mul(&mut self, a: usize, b: usize) -> usize {
        if a == Self::IDENTITY {
            return b;
        }
        if b == Self::IDENTITY {
            return a;
        }
        self.nodes.push(Node::Mul(a, b));
        self.nodes.len() - 1
    }

    pub fn inv(&mut self, a: usize) -> usize {
        if a == Self::IDENTITY {
            return a;
        }
        self.nodes.push(Node::Inv(a));
        self.nodes.len() - 1
    }

    /// Expands a node into a word of signed 1-based generator indices
    /// (`-i` is the inverse of generator `i`), refusing beyond `limit` letters.
    pub fn word(&self, node: usize, limit: usize) -> Option<Vec<i64>> {
        fn go(slp: &Slp, n: usize, inv: bool, out: &mut Vec<i64>, limit: usize) -> bool {
            if out.len() > limit {
                return false;
            }
            match slp.nodes[n] {
                Node::Identity => true,
                Node::Gen(i) => {
                    let g = i as i64 + 1;
                    out.push(if inv { -g } else { g });
                    true
                }
                Node::Inv(a) => go(slp, a, !inv, out, limit),
                Node::Mul(a, b) => {
                    if inv {
                        go(slp, b, true, out, limit) && go(slp, a, true, out, limit)
                    } else {
                        go(slp, a, false, out, limit) && go(slp, b, false, out, limit)
                    }
                }
            }
        }
        let mut out = Vec::new();
        (go(self, node, false, &mut out, limit) && out.len() <= limit).then_some(out)
    }
}

/// Memoizing evaluator of program nodes in some target group.
pub struct Evaluator<'a, T: GroupLike> {
    slp: &'a Slp,
    identity: T,
    gens: Vec<T>,
    memo: Vec<Option<T>>,
}

impl<'a, T: GroupLike> Evaluator<'a, T> {
    pub fn new(slp: &'a Slp, gens: Vec<T>, identity: T) -> Self {
        Self {
            slp,
            identity,
            gens,
            memo: vec![None; slp.len()],
        }
    }

    pub fn identity(&self) -> &T {
        &self.identity
    }

    pub fn gens(&self) -> &[T] {
        &self.gens
    }

    /// Value of node `n`; iterative so deep programs cannot overflow the stack.
    pub fn eval(&mut self, n: usize) -> T {
        let mut stack = vec![n];
        while let Some(&top) = stack.last() {
            if self.memo[top].is_some() {
                stack.pop();
                continue;
            }
            let value = match self.slp.nodes[top] {
                Node::Identity => Some(self.identity.clone()),
                Node::Gen(i) => Some(self.gens[i].clone()),
                Node::Inv(a) => match &self.memo[a] {
                    Some(v) => Some(v.inverse()),
                    None => {
                        stack.push(a);
                        None
                    }
                },
                Node::Mul(a, b) => match (&self.memo[a], &self.memo[b]) {
                    (Some(x), Some(y)) => Some(x.op(y)),
                    (x, y) => {
                        if x.is_none() {
                            stack.push(a);
                        }
                        if y.is_none() {
                            stack.push(b);
                        }
                        None
                    }
                },
            };
            if let Some(v) = value {
                self.memo[top] = Some(v);
                stack.pop();
            }
        }
        self.memo[n].clone().expect("evaluated")
    }

    /// Product of the values of `nodes` in order.
    pub fn eval_product(&mut self, nodes: &[usize]) -> T {
        let mut acc = self.identity.clone();
        for &n in nodes {
            let v = self.eval(n);
            acc = acc.op(&v);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_and_evaluation_agree() {
        let a = Perm::parse("(1,2,3)", 4).unwrap();
        let b = Perm::parse("(3,4)", 4).unwrap();
        let mut slp = Slp::new(2);
        let ab = slp.mul(slp.gen(0), slp.gen(1));
        let inv = slp.inv(ab);
        let x = slp.mul(inv, slp.gen(0));
        assert_eq!(slp.word(x, 10).unwrap(), vec![-2, -1, 1]);
        let mut ev = Evaluator::new(&slp, vec![a.clone(), b.clone()], Perm::identity(4));
        assert_eq!(ev.eval(x), b.inv());
        assert_eq!(ev.eval(ab), a.mul(&b));
    }
}
