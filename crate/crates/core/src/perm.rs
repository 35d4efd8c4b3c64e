//! Permutations of a fixed finite point set `0..degree`.

use std::fmt;

use num_integer::Integer;

use crate::error::GroupError;

/// A permutation stored as its image table: point `i` maps to `images[i]`.
///
/// Ordering and equality are lexicographic on the image table, which makes
/// sorted element lists canonical for a fixed degree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Box<[u16]>,
}

impl Perm {
    /// The identity on `0..degree`.
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from its image table, rejecting non-bijections.
    pub fn from_images(images: Vec<u16>) -> Result<Perm, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            let img = img as usize;
            if img >= n || seen[img] {
                return Err(GroupError::MalformedPermutation {
                    degree: n,
                    value: img,
                });
            }
            seen[img] = true;
        }
        Ok(Perm {
            images: images.into_boxed_slice(),
        })
    }

    /// Builds a permutation of `0..degree` from disjoint cycles of 0-indexed
    /// points. A point appearing twice (in one cycle or across cycles) is
    /// rejected; fixed points may be written as singleton cycles or omitted.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u16>]) -> Result<Perm, GroupError> {
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for &p in cycle {
                let p = p as usize;
                if p >= degree || seen[p] {
                    return Err(GroupError::MalformedPermutation { degree, value: p });
                }
                seen[p] = true;
            }
        }
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                images[p as usize] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Perm {
            images: images.into_boxed_slice(),
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: u16) -> u16 {
        self.images[point as usize]
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i as u16 == img)
    }

    /// Composition acting left to right on points: `(a.then(b))(x) = b(a(x))`.
    ///
    /// Panics if the degrees differ; mixing degrees is a programming error,
    /// not a recoverable condition.
    pub fn then(&self, other: &Perm) -> Perm {
        assert_eq!(
            self.degree(),
            other.degree(),
            "composing permutations of different degrees"
        );
        Perm {
            images: self.images.iter().map(|&m| other.images[m as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u16; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u16;
        }
        Perm {
            images: images.into_boxed_slice(),
        }
    }

    /// Multiplicative order: least k ≥ 1 with the k-th power trivial.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    /// Nontrivial cycles, each rotated to start at its least point, sorted by
    /// that point. Fixed points do not appear.
    pub fn cycles(&self) -> Vec<Vec<u16>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start as u16 {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start as u16;
            loop {
                seen[p as usize] = true;
                cycle.push(p);
                p = self.images[p as usize];
                if p as usize == start {
                    break;
                }
            }
            out.push(cycle);
        }
        out
    }
}

/// Cycle notation on 1-indexed points, `()` for the identity.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{self}]")
    }
}
