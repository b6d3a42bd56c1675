use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::rng::RngState;
use num_bigint::BigUint;
use num_traits::One;
use std::sync::Arc;

/// One level of a stabilizer chain. The group at level `k` is the pointwise
/// stabilizer of the first `k` base points; `gens` is its full strong
/// generating set, `orbit` the orbit of `beta` under it, and
/// `transversal[p]` a representative mapping `beta` to `p`.
///
/// Orbits and transversals are explicit arrays indexed by point.
#[derive(Clone)]
pub struct ChainLevel {
    pub beta: u32,
    gens: Vec<Arc<Permutation>>,
    orbit: Vec<u32>,
    transversal: Vec<Option<Arc<Permutation>>>,
    transversal_inv: Vec<Option<Arc<Permutation>>>,
}

impl ChainLevel {
    fn new(beta: u32, degree: usize) -> Self {
        let mut level = ChainLevel {
            beta,
            gens: Vec::new(),
            orbit: vec![beta],
            transversal: vec![None; degree],
            transversal_inv: vec![None; degree],
        };
        let id = Arc::new(Permutation::identity(degree));
        level.transversal[beta as usize] = Some(id.clone());
        level.transversal_inv[beta as usize] = Some(id);
        level
    }

    pub fn orbit(&self) -> &[u32] {
        &self.orbit
    }

    pub fn generators(&self) -> impl Iterator<Item = &Permutation> {
        self.gens.iter().map(|g| g.as_ref())
    }

    /// Coset representative mapping `beta` to `point`, if `point` is in the orbit.
    pub fn representative(&self, point: u32) -> Option<&Permutation> {
        self.transversal[point as usize].as_deref()
    }

    pub fn representative_inv(&self, point: u32) -> Option<&Permutation> {
        self.transversal_inv[point as usize].as_deref()
    }
}

/// Base and strong generating set for a permutation group, with a certified
/// exact order. Immutable once built; queries may run concurrently.
#[derive(Clone)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<ChainLevel>,
    order: BigUint,
}

impl StabilizerChain {
    /// Builds a chain for the group generated by `generators`.
    ///
    /// A randomized warm-up (seeded by `seed`) sifts random subproducts to
    /// populate deep levels early; the deterministic Schreier closure that
    /// follows certifies the result, so the order is exact whatever the seed.
    pub fn build(degree: usize, generators: &[Permutation], seed: u64) -> Result<Self> {
        Self::build_with_base_hint(degree, generators, &[], seed)
    }

    /// Builds a chain whose base starts with exactly `base_hint` (redundant
    /// points get trivial levels), then continues with whatever points are
    /// needed. Level `k` of the result generates the pointwise stabilizer of
    /// the first `k` hint points.
    pub fn build_with_base_hint(
        degree: usize,
        generators: &[Permutation],
        base_hint: &[u32],
        seed: u64,
    ) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Input("degree must be positive".into()));
        }
        for g in generators {
            if g.degree() != degree {
                return Err(Error::Input(format!(
                    "generator degree {} does not match {}",
                    g.degree(),
                    degree
                )));
            }
        }
        for &b in base_hint {
            if b as usize >= degree {
                return Err(Error::Input(format!("base point {b} out of range")));
            }
        }
        let mut builder = Builder {
            degree,
            levels: base_hint.iter().map(|&b| ChainLevel::new(b, degree)).collect(),
            pending: Vec::new(),
        };
        for g in generators {
            builder.insert(Arc::new(g.clone()));
        }
        builder.randomized_warmup(generators, seed);
        builder.close();
        let chain = builder.finish();
        debug_assert!(chain.verify_schreier_closure());
        Ok(chain)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.beta).collect()
    }

    pub fn levels(&self) -> &[ChainLevel] {
        &self.levels
    }

    /// Strong generators of the stabilizer of the first `level` base points.
    pub fn level_generators(&self, level: usize) -> Vec<Permutation> {
        if level >= self.levels.len() {
            return Vec::new();
        }
        self.levels[level]
            .gens
            .iter()
            .map(|g| g.as_ref().clone())
            .collect()
    }

    /// Order of the stabilizer of the first `level` base points.
    pub fn level_order(&self, level: usize) -> BigUint {
        let mut ord = BigUint::one();
        for l in &self.levels[level.min(self.levels.len())..] {
            ord *= BigUint::from(l.orbit.len());
        }
        ord
    }

    /// Strips `p` through the chain. Returns the residue and the level at
    /// which stripping stopped; membership holds iff the residue is the
    /// identity and every level was passed.
    pub fn sift(&self, p: &Permutation) -> (Permutation, usize) {
        let mut cur = p.clone();
        for (i, level) in self.levels.iter().enumerate() {
            let img = cur.apply(level.beta);
            match level.representative_inv(img) {
                None => return (cur, i),
                Some(t_inv) => {
                    if img != level.beta {
                        cur = cur.then(t_inv);
                    }
                }
            }
        }
        (cur, self.levels.len())
    }

    /// Membership test by sifting.
    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::Input(format!(
                "degree mismatch: element has degree {}, group has {}",
                p.degree(),
                self.degree
            )));
        }
        let (residue, level) = self.sift(p);
        Ok(level == self.levels.len() && residue.is_identity())
    }

    /// Uniformly random element: the product of one uniformly chosen
    /// transversal representative per level.
    pub fn random_element(&self, rng: &mut RngState) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for level in &self.levels {
            let k = rng.below(level.orbit.len() as u64) as usize;
            let point = level.orbit[k];
            if point != level.beta {
                g = level.representative(point).unwrap().then(&g);
            }
        }
        g
    }

    /// Deterministic verification pass: every level's orbit is closed under
    /// its generators and every Schreier generator sifts to the identity
    /// through the rest of the chain. Certifies `order`.
    pub fn verify_schreier_closure(&self) -> bool {
        for (i, level) in self.levels.iter().enumerate() {
            for g in &level.gens {
                for earlier in &self.levels[..i] {
                    if g.apply(earlier.beta) != earlier.beta {
                        return false;
                    }
                }
            }
            let tail = self.subchain(i + 1);
            for &p in &level.orbit {
                let t_p = level.representative(p).unwrap();
                for g in &level.gens {
                    let q = g.apply(p);
                    let t_q_inv = match level.representative_inv(q) {
                        Some(t) => t,
                        None => return false, // orbit not closed
                    };
                    let schreier = t_p.then(g).then(t_q_inv);
                    let (res, lvl) = tail.sift(&schreier);
                    if !(lvl == tail.levels.len() && res.is_identity()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// View of the chain from `level` down (the stabilizer of the first
    /// `level` base points).
    pub fn subchain(&self, level: usize) -> StabilizerChain {
        StabilizerChain {
            degree: self.degree,
            levels: self.levels[level.min(self.levels.len())..].to_vec(),
            order: self.level_order(level),
        }
    }
}

struct Builder {
    degree: usize,
    levels: Vec<ChainLevel>,
    /// pending Schreier pairs (orbit position, generator index), bucketed by level
    pending: Vec<Vec<(usize, usize)>>,
}

impl Builder {
    /// Registers a new strong generator: it joins the generating set of every
    /// level whose base prefix it fixes, creating one new level if it fixes
    /// the entire current base.
    fn insert(&mut self, g: Arc<Permutation>) {
        if g.is_identity() {
            return;
        }
        let mut drop = self.levels.len();
        for (k, level) in self.levels.iter().enumerate() {
            if g.apply(level.beta) != level.beta {
                drop = k;
                break;
            }
        }
        if drop == self.levels.len() {
            let beta = g.first_moved_point().expect("non-identity generator");
            self.levels.push(ChainLevel::new(beta, self.degree));
        }
        for k in 0..=drop {
            let gen_idx = self.levels[k].gens.len();
            self.levels[k].gens.push(g.clone());
            while self.pending.len() <= k {
                self.pending.push(Vec::new());
            }
            for pos in 0..self.levels[k].orbit.len() {
                self.pending[k].push((pos, gen_idx));
            }
        }
    }

    /// Processes pending Schreier pairs, deepest level first, until closure.
    fn close(&mut self) {
        loop {
            let level = match (0..self.pending.len()).rev().find(|&l| !self.pending[l].is_empty()) {
                Some(l) => l,
                None => return,
            };
            let (pos, gen_idx) = self.pending[level].pop().unwrap();
            let lvl = &self.levels[level];
            let p = lvl.orbit[pos];
            let g = lvl.gens[gen_idx].clone();
            let q = g.apply(p);
            if lvl.transversal[q as usize].is_none() {
                // new orbit point: extend the transversal, no sift needed
                let t_q = Arc::new(lvl.representative(p).unwrap().then(&g));
                let lvl = &mut self.levels[level];
                lvl.transversal_inv[q as usize] = Some(Arc::new(t_q.inverse()));
                lvl.transversal[q as usize] = Some(t_q);
                let new_pos = lvl.orbit.len();
                lvl.orbit.push(q);
                for gi in 0..lvl.gens.len() {
                    self.pending[level].push((new_pos, gi));
                }
            } else {
                let t_p = lvl.representative(p).unwrap();
                let t_q_inv = lvl.representative_inv(q).unwrap();
                let schreier = t_p.then(&g).then(t_q_inv);
                let (residue, _) = self.sift_from(level + 1, &schreier);
                if !residue.is_identity() {
                    self.insert(Arc::new(residue));
                }
            }
        }
    }

    fn sift_from(&self, start: usize, p: &Permutation) -> (Permutation, usize) {
        let mut cur = p.clone();
        for (off, level) in self.levels[start.min(self.levels.len())..].iter().enumerate() {
            let img = cur.apply(level.beta);
            match level.transversal_inv[img as usize].as_deref() {
                None => return (cur, start + off),
                Some(t_inv) => {
                    if img != level.beta {
                        cur = cur.then(t_inv);
                    }
                }
            }
        }
        (cur, self.levels.len())
    }

    /// Sifts a handful of random subproducts of the generators so that deep
    /// levels are populated before the deterministic closure runs.
    fn randomized_warmup(&mut self, generators: &[Permutation], seed: u64) {
        if generators.is_empty() {
            return;
        }
        let mut rng = RngState::from_seed(seed ^ 0x5355424752505321);
        let rounds = 16 + 2 * self.levels.len();
        let mut word = Permutation::identity(self.degree);
        for _ in 0..rounds {
            for _ in 0..3 {
                let k = rng.below(generators.len() as u64) as usize;
                word = word.then(&generators[k]);
            }
            let (residue, _) = self.sift_from(0, &word);
            if !residue.is_identity() {
                self.insert(Arc::new(residue));
            }
        }
    }

    fn finish(self) -> StabilizerChain {
        let mut order = BigUint::one();
        for l in &self.levels {
            order *= BigUint::from(l.orbit.len());
        }
        StabilizerChain {
            degree: self.degree,
            levels: self.levels,
            order,
        }
    }
}
