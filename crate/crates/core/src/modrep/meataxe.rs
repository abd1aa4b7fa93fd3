//! Spinning, splitting and chopping modules into composition factors.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::hom::hom_space;
use super::rep::MatRep;
use crate::ffla::{char_poly, factor_poly_seeded, FpMatrix, Subspace};
use crate::{Error, Result};

/// Maximum length of the random words used to build algebra elements.
pub const MAX_WORD_LEN: usize = 12;
/// Attempts per split before giving up.
pub const SPLIT_BUDGET: usize = 50;

/// Smallest subspace containing `seeds` and stable under `mats`.
pub fn spin_with(mats: &[FpMatrix], n: usize, seeds: &[Vec<u8>]) -> Subspace {
    let field = mats
        .first()
        .map(|m| m.field())
        .unwrap_or_else(|| crate::ffla::PrimeField::new(crate::ffla::DEFAULT_P as u32).unwrap());
    let mut sp = Subspace::new(field, n);
    let mut queue: Vec<Vec<u8>> = Vec::new();
    for s in seeds {
        if sp.insert(s.clone()) {
            queue.push(s.clone());
        }
    }
    let mut i = 0;
    while i < queue.len() && sp.dim() < n {
        for m in mats {
            let w = m.vec_mul(&queue[i]);
            if sp.insert(w.clone()) {
                queue.push(w);
            }
        }
        i += 1;
    }
    sp
}

/// Submodule generated by the seed vectors.
pub fn spin(rep: &MatRep, seeds: &[Vec<u8>]) -> Result<Subspace> {
    if seeds.iter().any(|s| s.len() != rep.dim()) {
        return Err(Error::dim("seed length differs from module dimension"));
    }
    let mut sp = spin_with(rep.mats(), rep.dim(), seeds);
    if rep.mats().is_empty() {
        sp = Subspace::from_rows(rep.field(), rep.dim(), seeds.to_vec());
    }
    Ok(sp)
}

/// Outcome of one split attempt.
#[derive(Clone, Debug)]
pub enum Split {
    /// Irreducibility certified by the kernel-vector test on the module and its transpose.
    Irreducible,
    /// A proper nonzero submodule.
    Reducible(Subspace),
}

/// Random algebra elements built from words of bounded length.
struct AlgebraSampler<'a> {
    gens: &'a [FpMatrix],
    words: Vec<(FpMatrix, usize)>,
    rng: ChaCha8Rng,
}

impl<'a> AlgebraSampler<'a> {
    fn new(gens: &'a [FpMatrix], seed: u64) -> Self {
        Self {
            gens,
            words: gens.iter().map(|g| (g.clone(), 1)).collect(),
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn next(&mut self) -> FpMatrix {
        let p = self.gens[0].p();
        for _ in 0..2 {
            let i = self.rng.gen_range(0..self.words.len());
            if self.words[i].1 < MAX_WORD_LEN {
                let j = self.rng.gen_range(0..self.gens.len());
                let w = &self.words[i].0 * &self.gens[j];
                let len = self.words[i].1 + 1;
                self.words.push((w, len));
            }
        }
        let n = self.gens[0].rows();
        let mut a = FpMatrix::zeros(self.gens[0].field(), n, n);
        for _ in 0..3 {
            let i = self.rng.gen_range(0..self.words.len());
            let c = self.rng.gen_range(1..p);
            a.add_scaled(&self.words[i].0, c);
        }
        a
    }
}

/// Finds a proper submodule or certifies irreducibility.
pub fn split(rep: &MatRep, seed: u64) -> Result<Split> {
    let n = rep.dim();
    if n <= 1 {
        return Ok(Split::Irreducible);
    }
    if rep.mats().is_empty() {
        let mut e = vec![0u8; n];
        e[0] = 1;
        return Ok(Split::Reducible(Subspace::from_rows(rep.field(), n, vec![e])));
    }
    let transposed: Vec<FpMatrix> = rep.mats().iter().map(|m| m.transpose()).collect();
    let mut sampler = AlgebraSampler::new(rep.mats(), seed);
    for _ in 0..SPLIT_BUDGET {
        let a = sampler.next();
        let cp = char_poly(&a)?;
        let fseed = sampler.rng.gen();
        let mut factors = factor_poly_seeded(&cp, fseed)?;
        factors.sort_by(|x, y| x.0.degree().cmp(&y.0.degree()).then(x.0.canonical_cmp(&y.0)));
        for (f, _) in factors {
            let deg = f.degree().unwrap_or(0);
            let b = f.eval_matrix(&a)?;
            let ker = b.left_nullspace();
            if ker.rows() == 0 {
                continue;
            }
            let v = ker.row(0).to_vec();
            let u = spin(rep, &[v])?;
            if u.dim() < n {
                return Ok(Split::Reducible(u));
            }
            if ker.rows() != deg {
                continue;
            }
            let kt = b.nullspace();
            let w = kt.row(0).to_vec();
            let ut = spin_with(&transposed, n, &[w]);
            if ut.dim() < n {
                return Ok(Split::Reducible(ut.annihilator()));
            }
            return Ok(Split::Irreducible);
        }
    }
    Err(Error::Inconclusive(format!(
        "no good algebra element found in {SPLIT_BUDGET} attempts (dim {n})"
    )))
}

#[derive(Clone, Debug)]
pub struct Constituent {
    pub module: MatRep,
    pub multiplicity: usize,
}

/// Composition factors with multiplicities; members pairwise non-isomorphic.
#[derive(Clone, Debug, Default)]
pub struct Constituents {
    pub items: Vec<Constituent>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstituentSummary {
    pub dim: usize,
    pub multiplicity: usize,
}

impl Constituents {
    pub fn total_dim(&self) -> usize {
        self.items.iter().map(|c| c.module.dim() * c.multiplicity).sum()
    }

    /// Dimensions of all composition factors, with repetition, ascending.
    pub fn dims(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .items
            .iter()
            .flat_map(|c| std::iter::repeat(c.module.dim()).take(c.multiplicity))
            .collect();
        v.sort_unstable();
        v
    }

    pub fn summary(&self) -> Vec<ConstituentSummary> {
        self.items
            .iter()
            .map(|c| ConstituentSummary {
                dim: c.module.dim(),
                multiplicity: c.multiplicity,
            })
            .collect()
    }

    /// Index of the member isomorphic to a simple module `s`.
    pub fn position(&self, s: &MatRep) -> Result<Option<usize>> {
        for (i, c) in self.items.iter().enumerate() {
            if c.module.dim() == s.dim() && !hom_space(&c.module, s)?.is_empty() {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    fn add(&mut self, s: MatRep, mult: usize) -> Result<()> {
        match self.position(&s)? {
            Some(i) => self.items[i].multiplicity += mult,
            None => self.items.push(Constituent {
                module: s,
                multiplicity: mult,
            }),
        }
        Ok(())
    }

    /// Union of two constituent lists.
    pub fn merge(&mut self, other: &Constituents) -> Result<()> {
        for c in &other.items {
            self.add(c.module.clone(), c.multiplicity)?;
        }
        Ok(())
    }

    /// Same simple modules with the same multiplicities.
    pub fn same_as(&self, other: &Constituents) -> Result<bool> {
        if self.dims() != other.dims() || self.items.len() != other.items.len() {
            return Ok(false);
        }
        for c in &self.items {
            match other.position(&c.module)? {
                Some(i) if other.items[i].multiplicity == c.multiplicity => {}
                _ => return Ok(false),
            }
        }
        Ok(true)
    }
}

/// Composition factors of a module (the MeatAxe).
pub fn chop(rep: &MatRep, seed: u64) -> Result<Constituents> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Constituents::default();
    let mut stack = vec![rep.clone()];
    while let Some(m) = stack.pop() {
        if m.dim() == 0 {
            continue;
        }
        match split(&m, rng.gen())? {
            Split::Irreducible => out.add(m, 1)?,
            Split::Reducible(u) => {
                stack.push(m.quotient(&u)?);
                stack.push(m.submodule(&u)?);
            }
        }
    }
    out.items.sort_by_key(|c| c.module.dim());
    debug_assert_eq!(out.total_dim(), rep.dim());
    Ok(out)
}

/// Whether a module is irreducible.
pub fn is_irreducible(rep: &MatRep, seed: u64) -> Result<bool> {
    Ok(matches!(split(rep, seed)?, Split::Irreducible))
}
