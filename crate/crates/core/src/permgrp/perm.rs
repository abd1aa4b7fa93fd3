//! Permutations of `{0, .., n-1}` acting on the right.

use std::fmt;

use crate::{Error, Result};

/// A permutation stored by its image list; `images[i]` is the image of `i`.
///
/// Products compose left to right: `a.mul(&b)` applies `a` first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPerm(format!("{images:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Self {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        Self { images }
    }

    /// Builds a permutation from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cyc in cycles {
            for (k, &x) in cyc.iter().enumerate() {
                if x >= degree {
                    return Err(Error::PointOutOfRange(x + 1));
                }
                if touched[x] {
                    return Err(Error::InvalidPerm(format!("point {} repeated", x + 1)));
                }
                touched[x] = true;
                images[x] = cyc[(k + 1) % cyc.len()];
            }
        }
        Self::from_images(images)
    }

    /// Parses cycle notation with 1-based points, e.g. `(1,2,3)(4,5)`; `()` is the identity.
    pub fn parse(s: &str, degree: usize) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = s.as_str();
        if rest.is_empty() {
            return Err(Error::InvalidPerm("empty string".into()));
        }
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::InvalidPerm(format!("expected `(` in `{s}`")))?;
            let end = body
                .find(')')
                .ok_or_else(|| Error::InvalidPerm(format!("unclosed cycle in `{s}`")))?;
            let inner = &body[..end];
            if !inner.is_empty() {
                let pts = inner
                    .split(',')
                    .map(|t| match t.parse::<usize>() {
                        Ok(v) if v >= 1 => Ok(v - 1),
                        _ => Err(Error::InvalidPerm(format!("bad point `{t}`"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                cycles.push(pts);
            }
            rest = &body[end + 1..];
        }
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Self::from_cycles(degree, &refs)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` then `other`.
    pub fn mul(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inv(&self) -> Perm {
        let mut images = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Perm { images }
    }

    pub fn pow(&self, e: i64) -> Perm {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Perm::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            e >>= 1;
        }
        acc
    }

    /// `other^-1 * self * other`.
    pub fn conj(&self, other: &Perm) -> Perm {
        other.inv().mul(self).mul(other)
    }

    /// Nontrivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let mut cyc = vec![i];
            seen[i] = true;
            let mut j = self.image(i);
            while j != i {
                seen[j] = true;
                cyc.push(j);
                j = self.image(j);
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    pub fn moved_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &x)| *i as u32 != x)
            .map(|(i, _)| i)
    }

    pub fn first_moved(&self) -> Option<usize> {
        self.moved_points().next()
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl fmt::Display for Perm {
    /// Cycle notation with 1-based points.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", pts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let g = Perm::parse("(1,2,3)(4,5,6)", 8).unwrap();
        assert_eq!(g.to_string(), "(1,2,3)(4,5,6)");
        assert_eq!(g.order(), 3);
        assert!(Perm::parse("()", 4).unwrap().is_identity());
        assert!(Perm::parse("(1,1)", 4).is_err());
        assert!(Perm::parse("(1,9)", 4).is_err());
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = Perm::parse("(1,2)", 3).unwrap();
        let b = Perm::parse("(2,3)", 3).unwrap();
        // 1 -> 2 -> 3
        assert_eq!(a.mul(&b).image(0), 2);
        assert!(a.mul(&a.inv()).is_identity());
        assert_eq!(a.mul(&b).pow(3), Perm::identity(3));
        assert_eq!(a.mul(&b).pow(-1), a.mul(&b).inv());
    }
}
