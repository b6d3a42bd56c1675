use crate::chain::StabilizerChain;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use num_bigint::BigUint;
use num_traits::One;
use std::sync::Arc;

/// A permutation group given by generators, together with its verified
/// stabilizer chain and a label.
#[derive(Clone)]
pub struct GroupHandle {
    degree: usize,
    name: String,
    generators: Vec<Permutation>,
    chain: Arc<StabilizerChain>,
}

impl GroupHandle {
    pub fn new(degree: usize, name: &str, generators: Vec<Permutation>, seed: u64) -> Result<Self> {
        let chain = StabilizerChain::build(degree, &generators, seed)?;
        Ok(GroupHandle {
            degree,
            name: name.to_string(),
            generators,
            chain: Arc::new(chain),
        })
    }

    pub fn trivial(degree: usize, name: &str) -> Result<Self> {
        GroupHandle::new(degree, name, Vec::new(), 0)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabilizerChain {
        &self.chain
    }

    pub fn order(&self) -> &BigUint {
        self.chain.order()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        self.chain.contains(p)
    }

    pub fn is_trivial(&self) -> bool {
        self.chain.order().is_one()
    }

    /// The subgroup fixing every listed point, as a fresh handle. Duplicate
    /// points are permitted and ignored.
    pub fn pointwise_stabilizer(&self, points: &[u32], seed: u64) -> Result<GroupHandle> {
        for &p in points {
            if p as usize >= self.degree {
                return Err(Error::Input(format!(
                    "point {p} out of range for degree {}",
                    self.degree
                )));
            }
        }
        let mut prefix: Vec<u32> = Vec::new();
        for &p in points {
            if !prefix.contains(&p) {
                prefix.push(p);
            }
        }
        let chain =
            StabilizerChain::build_with_base_hint(self.degree, &self.generators, &prefix, seed)?;
        let gens = chain.level_generators(prefix.len());
        let name = format!("{}_stab", self.name);
        GroupHandle::new(self.degree, &name, gens, seed)
    }

    /// Orbits of the group on its points, each sorted, in order of least element.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        orbits_of(self.degree, &self.generators)
    }

    pub fn is_transitive(&self) -> bool {
        self.degree > 0 && self.orbits().len() == 1
    }

    /// Serializes in the group file format.
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("degree: {}\n", self.degree));
        out.push_str(&format!("name: {}\n", self.name));
        for g in &self.generators {
            out.push_str(&g.to_row());
            out.push('\n');
        }
        out
    }
}

/// Orbits of a set of permutations on `{0..degree}`.
pub(crate) fn orbits_of(degree: usize, gens: &[Permutation]) -> Vec<Vec<u32>> {
    let mut seen = vec![false; degree];
    let mut orbits = Vec::new();
    for start in 0..degree as u32 {
        if seen[start as usize] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start as usize] = true;
        let mut head = 0;
        while head < orbit.len() {
            let p = orbit[head];
            head += 1;
            for g in gens {
                let q = g.apply(p);
                if !seen[q as usize] {
                    seen[q as usize] = true;
                    orbit.push(q);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}

/// Parses the group file format:
///
/// ```text
/// degree: N
/// name: <label>
/// <one generator per line: space-separated image list of length N, 0-based>
/// ```
///
/// Blank lines and lines starting with `#` are ignored. Round-trips exactly
/// through [`GroupHandle::to_file_string`].
pub fn load_group_str(text: &str, seed: u64) -> Result<GroupHandle> {
    let mut degree: Option<usize> = None;
    let mut name: Option<String> = None;
    let mut generators = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("degree:") {
            degree = Some(rest.trim().parse().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("bad degree `{}`", rest.trim()),
            })?);
        } else if let Some(rest) = line.strip_prefix("name:") {
            name = Some(rest.trim().to_string());
        } else {
            let d = degree.ok_or(Error::Parse {
                line: lineno,
                msg: "generator row before degree header".into(),
            })?;
            let p = Permutation::parse_row(line, d).map_err(|e| Error::Parse {
                line: lineno,
                msg: e.to_string(),
            })?;
            generators.push(p);
        }
    }
    let degree = degree.ok_or(Error::Parse {
        line: 0,
        msg: "missing `degree:` header".into(),
    })?;
    let name = name.unwrap_or_else(|| "unnamed".to_string());
    GroupHandle::new(degree, &name, generators, seed)
}
