use crate::error::{Error, Result};
use std::fmt;

/// A permutation of `{0, ..., degree-1}`, stored as its image list.
///
/// `images[i]` is the image of point `i`. Composition follows action order:
/// `a.then(&b)` maps `x` to `b(a(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from an image list, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            let i = img as usize;
            if i >= n {
                return Err(Error::Input(format!(
                    "image {img} out of range for degree {n}"
                )));
            }
            if seen[i] {
                return Err(Error::Input(format!("repeated image {img}")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of the given degree from disjoint cycles (0-based).
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                let q = cycle[(k + 1) % cycle.len()];
                if p as usize >= degree || q as usize >= degree {
                    return Err(Error::Input(format!("cycle point out of range: {p}")));
                }
                images[p as usize] = q;
            }
        }
        Permutation::from_images(images)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i as u32 == p)
    }

    /// `self` followed by `other`: maps `x` to `other(self(x))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&p| other.images[p as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &p) in self.images.iter().enumerate() {
            inv[p as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// Conjugate `self^other = other^-1 * self * other` (so that cycles map
    /// through `other`).
    pub fn conjugate_by(&self, other: &Permutation) -> Permutation {
        other.inverse().then(self).then(other)
    }

    pub fn first_moved_point(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &p)| *i as u32 != p)
            .map(|(i, _)| i as u32)
    }

    pub fn fixed_point_count(&self) -> usize {
        self.images.iter().enumerate().filter(|(i, &p)| *i as u32 == p).count()
    }

    /// Cycle lengths in decreasing order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.images[p] as usize;
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// Multiplicative order, as the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let mut ord: u128 = 1;
        for len in self.cycle_type() {
            ord = lcm_u128(ord, len as u128);
        }
        u64::try_from(ord).expect("element order exceeds u64")
    }

    /// `self` raised to the `k`-th power (k >= 0).
    pub fn pow(&self, mut k: u64) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        let mut sq = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.then(&sq);
            }
            sq = sq.then(&sq);
            k >>= 1;
        }
        acc
    }

    /// Space-separated image list, the group file generator row format.
    pub fn to_row(&self) -> String {
        let strs: Vec<String> = self.images.iter().map(|p| p.to_string()).collect();
        strs.join(" ")
    }

    pub fn parse_row(row: &str, degree: usize) -> Result<Self> {
        let mut images = Vec::with_capacity(degree);
        for tok in row.split_whitespace() {
            let v: u32 = tok
                .parse()
                .map_err(|_| Error::Input(format!("bad image token `{tok}`")))?;
            images.push(v);
        }
        if images.len() != degree {
            return Err(Error::Input(format!(
                "generator row has {} images, expected {degree}",
                images.len()
            )));
        }
        Permutation::from_images(images)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]", self.to_row())
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, e.g. `(0 1 2)(3 4)`; identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
                first = false;
                p = self.images[p] as usize;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

fn gcd_u128(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd_u128(b, a % b)
    }
}

fn lcm_u128(a: u128, b: u128) -> u128 {
    a / gcd_u128(a, b) * b
}
