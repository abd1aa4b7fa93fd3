use std::cmp::Ordering;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::PrimeField;
use super::matrix::FpMatrix;
use crate::{Error, Result};

/// Univariate polynomial over `F_p`, coefficients low degree first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    field: PrimeField,
    coeffs: Vec<u8>,
}

impl FpPoly {
    pub fn new(field: PrimeField, coeffs: Vec<i64>) -> Self {
        let mut p = Self {
            field,
            coeffs: coeffs.into_iter().map(|c| field.reduce(c)).collect(),
        };
        p.trim();
        p
    }

    pub(crate) fn from_reduced(field: PrimeField, coeffs: Vec<u8>) -> Self {
        let mut p = Self { field, coeffs };
        p.trim();
        p
    }

    pub fn zero(field: PrimeField) -> Self {
        Self {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: PrimeField) -> Self {
        Self::constant(field, 1)
    }

    pub fn constant(field: PrimeField, c: u8) -> Self {
        Self::from_reduced(field, vec![c % field.p()])
    }

    /// The polynomial `x`.
    pub fn x(field: PrimeField) -> Self {
        Self::from_reduced(field, vec![0, 1])
    }

    /// `c * x^k`
    pub fn monomial(field: PrimeField, c: u8, k: usize) -> Self {
        let mut coeffs = vec![0u8; k + 1];
        coeffs[k] = c % field.p();
        Self::from_reduced(field, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u8 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u8 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading()).expect("nonzero");
        self.scale(inv)
    }

    pub fn scale(&self, c: u8) -> Self {
        let f = self.field;
        Self::from_reduced(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_reduced(f, (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::from_reduced(f, (0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        let p = self.field.p() as u32;
        let mut acc = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u32 * b as u32) % p;
            }
        }
        Self::from_reduced(self.field, acc.into_iter().map(|x| x as u8).collect())
    }

    /// Quotient and remainder; errors on division by zero.
    pub fn divrem(&self, d: &Self) -> Result<(Self, Self)> {
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.field;
        let dd = d.degree().unwrap();
        let inv = f.inv(d.leading()).unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(f), self.clone()));
        }
        let mut q = vec![0u8; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = f.mul(r[k + dd], inv);
            q[k] = c;
            if c != 0 {
                for (j, &dj) in d.coeffs.iter().enumerate() {
                    r[k + j] = f.sub(r[k + j], f.mul(c, dj));
                }
            }
        }
        r.truncate(dd);
        Ok((Self::from_reduced(f, q), Self::from_reduced(f, r)))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).expect("nonzero divisor").1
    }

    /// Exact division; panics when `d` does not divide `self`.
    pub(crate) fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.divrem(d).expect("nonzero divisor");
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        self.mul(other).div_exact(&self.gcd(other)).monic()
    }

    pub fn derivative(&self) -> Self {
        let f = self.field;
        Self::from_reduced(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| f.mul(c, (i % f.p() as usize) as u8))
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one(self.field).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, x: u8) -> u8 {
        let f = self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `f(m)` by Horner's rule.
    pub fn eval_matrix(&self, m: &FpMatrix) -> Result<FpMatrix> {
        if !m.is_square() {
            return Err(Error::NotSquare(m.rows(), m.cols()));
        }
        let n = m.rows();
        let mut acc = FpMatrix::zeros(m.field(), n, n);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul_unchecked(m);
            for i in 0..n {
                let v = self.field.add(acc.get(i, i), c);
                acc.set(i, i, v as i64);
            }
        }
        Ok(acc)
    }

    /// `p`-th root of a polynomial whose only nonzero coefficients sit at multiples of `p`.
    fn pth_root(&self) -> Self {
        let p = self.field.p() as usize;
        Self::from_reduced(self.field, self.coeffs.iter().step_by(p).copied().collect())
    }

    fn random_below(field: PrimeField, deg: usize, rng: &mut ChaCha8Rng) -> Self {
        Self::from_reduced(field, (0..deg).map(|_| rng.gen_range(0..field.p())).collect())
    }

    /// Canonical ordering: by degree, then coefficients from the top.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }

    /// Brute-force irreducibility test by trial division with every monic
    /// polynomial of degree at most half; intended for small degrees.
    pub fn is_irreducible_brute(&self) -> bool {
        let Some(d) = self.degree() else {
            return false;
        };
        if d == 0 {
            return false;
        }
        let p = self.field.p() as u64;
        for k in 1..=d / 2 {
            let count = p.pow(k as u32);
            for idx in 0..count {
                let mut coeffs = Vec::with_capacity(k + 1);
                let mut t = idx;
                for _ in 0..k {
                    coeffs.push((t % p) as u8);
                    t /= p;
                }
                coeffs.push(1);
                let g = Self::from_reduced(self.field, coeffs);
                if self.rem(&g).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Debug for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let t = match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "x".to_string(),
                (1, c) => format!("{c}x"),
                (i, 1) => format!("x^{i}"),
                (i, c) => format!("{c}x^{i}"),
            };
            terms.push(t);
        }
        write!(f, "{}", terms.join(" + "))
    }
}

/// Factors `f` into monic irreducibles with multiplicities (leading unit dropped).
pub fn factor_poly(f: &FpPoly) -> Result<Vec<(FpPoly, usize)>> {
    factor_poly_seeded(f, 0x5eed)
}

/// As [`factor_poly`] with an explicit seed for equal-degree splitting.
pub fn factor_poly_seeded(f: &FpPoly, seed: u64) -> Result<Vec<(FpPoly, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<(FpPoly, usize)> = Vec::new();
    for (sqf, mult) in squarefree(&f.monic()) {
        for (g, d) in distinct_degree(&sqf) {
            for h in equal_degree(&g, d, &mut rng) {
                match out.iter_mut().find(|(q, _)| *q == h) {
                    Some(entry) => entry.1 += mult,
                    None => out.push((h, mult)),
                }
            }
        }
    }
    out.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    Ok(out)
}

/// Square-free decomposition of a monic polynomial: pairs `(g, i)` with `g`
/// square-free and `f = prod g^i`.
fn squarefree(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let field = f.field();
    let p = field.p() as usize;
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div_exact(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.div_exact(&y);
        if fac.degree().unwrap_or(0) > 0 {
            out.push((fac.monic(), i));
        }
        w = y;
        c = c.div_exact(&w);
        i += 1;
    }
    if !c.is_one() {
        for (g, m) in squarefree(&c.pth_root().monic()) {
            out.push((g, m * p));
        }
    }
    out
}

/// Splits a monic square-free polynomial into products of irreducibles of equal degree.
fn distinct_degree(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let field = f.field();
    let p = field.p() as u64;
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = FpPoly::x(field);
    let mut h = x.clone();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(p, &rest);
        let g = rest.gcd(&h.sub(&x));
        if !g.is_one() {
            rest = rest.div_exact(&g);
            h = h.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        let deg = rest.degree().unwrap();
        out.push((rest, deg));
    }
    out
}

/// Cantor–Zassenhaus splitting of a product of distinct irreducibles of degree `d`.
fn equal_degree(f: &FpPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let n = f.degree().unwrap_or(0);
    if n <= d {
        return vec![f.monic()];
    }
    let field = f.field();
    let p = field.p() as u64;
    loop {
        let a = FpPoly::random_below(field, n, rng);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            // trace map a + a^2 + ... + a^(2^(d-1))
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(f);
                acc = acc.add(&t);
            }
            acc
        } else {
            // a^((p^d - 1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p-1)/2)
            let mut frob = a.clone();
            let mut norm = a.clone();
            for _ in 1..d {
                frob = frob.pow_mod(p, f);
                norm = norm.mul(&frob).rem(f);
            }
            norm.pow_mod((p - 1) / 2, f).sub(&FpPoly::one(field))
        };
        let g = f.gcd(&b);
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < n {
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&f.div_exact(&g), d, rng));
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> PrimeField {
        PrimeField::new(3).unwrap()
    }

    fn remultiply(field: PrimeField, fs: &[(FpPoly, usize)]) -> FpPoly {
        fs.iter()
            .fold(FpPoly::one(field), |acc, (g, m)| acc.mul(&g.pow(*m as u64)))
    }

    #[test]
    fn cube_minus_one_is_a_cube() {
        let f = FpPoly::new(f3(), vec![-1, 0, 0, 1]);
        let fs = factor_poly(&f).unwrap();
        assert_eq!(fs, vec![(FpPoly::new(f3(), vec![-1, 1]), 3)]);
    }

    #[test]
    fn x_squared_plus_one_irreducible_mod_3() {
        let f = FpPoly::new(f3(), vec![1, 0, 1]);
        assert_eq!(factor_poly(&f).unwrap(), vec![(f.clone(), 1)]);
    }

    #[test]
    fn x_is_irreducible() {
        for p in [2, 3, 5, 7] {
            let field = PrimeField::new(p).unwrap();
            let x = FpPoly::x(field);
            assert_eq!(factor_poly(&x).unwrap(), vec![(x.clone(), 1)]);
        }
    }

    #[test]
    fn zero_is_an_error() {
        assert!(matches!(factor_poly(&FpPoly::zero(f3())), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn mixed_factorization_char_two_and_five() {
        for p in [2u32, 5] {
            let field = PrimeField::new(p).unwrap();
            let a = FpPoly::new(field, vec![1, 1, 0, 1]);
            let b = FpPoly::new(field, vec![1, 1]);
            let f = a.mul(&a).mul(&b.pow(p as u64 + 1)).mul(&FpPoly::x(field));
            let fs = factor_poly(&f).unwrap();
            assert_eq!(remultiply(field, &fs), f.monic());
            assert!(fs.iter().all(|(g, _)| g.is_irreducible_brute()));
        }
    }

    #[test]
    fn divrem_reconstructs() {
        let a = FpPoly::new(f3(), vec![1, 2, 0, 1, 1]);
        let b = FpPoly::new(f3(), vec![2, 1]);
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 1);
    }
}
