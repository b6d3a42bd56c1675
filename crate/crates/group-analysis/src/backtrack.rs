//! Backtrack searches over a stabilizer chain: conjugating elements and
//! centralizer generators.
//!
//! Both searches walk the chain level by level, choosing an image for each
//! base point among the current coset's candidates, and propagate the
//! commutation constraint g(x(p)) = y(g(p)) along the cycles of x. Leaves
//! are verified outright, so the propagation is a pruning device only.

use perm_core::{Error, Permutation, Result, StabilizerChain};

/// Partial map with an undo trail.
struct PartialMap {
    img: Vec<Option<u32>>,
    pre: Vec<Option<u32>>,
    trail: Vec<u32>,
}

impl PartialMap {
    fn new(degree: usize) -> Self {
        PartialMap {
            img: vec![None; degree],
            pre: vec![None; degree],
            trail: Vec::new(),
        }
    }

    fn mark(&self) -> usize {
        self.trail.len()
    }

    fn rollback(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let a = self.trail.pop().unwrap();
            let b = self.img[a as usize].take().unwrap();
            self.pre[b as usize] = None;
        }
    }

    fn assign(&mut self, a: u32, b: u32) -> bool {
        match self.img[a as usize] {
            Some(v) => v == b,
            None => {
                if self.pre[b as usize].is_some() {
                    return false;
                }
                self.img[a as usize] = Some(b);
                self.pre[b as usize] = Some(a);
                self.trail.push(a);
                true
            }
        }
    }
}

/// Search for elements g of the chain's group with g * y = x * g pointwise,
/// i.e. g(x(p)) = y(g(p)), the conjugation constraint x^g = y.
struct ConjSearch<'a> {
    chain: &'a StabilizerChain,
    x: &'a Permutation,
    y: &'a Permutation,
    x_cycle_len: Vec<u32>,
    y_cycle_len: Vec<u32>,
    map: PartialMap,
    /// when generating a subgroup: the known part, for orbit-minimality
    /// pruning; leaves inside it are skipped
    known: Option<StabilizerChain>,
    /// per level, whether each point is least in its orbit under the
    /// pointwise stabilizer of the base prefix in the known subgroup
    known_minimal: Vec<Vec<bool>>,
    solutions: Vec<Permutation>,
}

fn cycle_lengths(p: &Permutation) -> Vec<u32> {
    let n = p.degree();
    let mut lens = vec![0u32; n];
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut q = p.apply(start as u32) as usize;
        while q != start {
            seen[q] = true;
            cycle.push(q);
            q = p.apply(q as u32) as usize;
        }
        for &c in &cycle {
            lens[c] = cycle.len() as u32;
        }
    }
    lens
}

impl ConjSearch<'_> {
    /// Assigns g(a) = b and propagates around the cycle of x through a.
    fn assign_and_propagate(&mut self, a: u32, b: u32) -> bool {
        if self.x_cycle_len[a as usize] != self.y_cycle_len[b as usize] {
            return false;
        }
        if !self.map.assign(a, b) {
            return false;
        }
        let mut pa = self.x.apply(a);
        let mut pb = self.y.apply(b);
        while pa != a {
            if self.x_cycle_len[pa as usize] != self.y_cycle_len[pb as usize] {
                return false;
            }
            if !self.map.assign(pa, pb) {
                return false;
            }
            pa = self.x.apply(pa);
            pb = self.y.apply(pb);
        }
        pb == b
    }

    /// `partial` maps the first `level` base points to their chosen images;
    /// candidates below are partial * (elements of the level subgroup).
    fn descend(&mut self, level: usize, partial: &Permutation, partial_inv: &Permutation) -> bool {
        if level == self.chain.levels().len() {
            // leaf: verify the full constraint
            let ok = (0..self.chain.degree() as u32)
                .all(|p| partial.apply(self.x.apply(p)) == self.y.apply(partial.apply(p)));
            if !ok {
                return false;
            }
            if let Some(known) = &self.known {
                if known.contains(partial).unwrap_or(false) {
                    return false; // already generated, keep searching
                }
            }
            self.solutions.push(partial.clone());
            return true;
        }
        let lvl = &self.chain.levels()[level];
        let beta = lvl.beta;
        let forced = self.map.img[beta as usize];
        let on_spine = (0..level).all(|i| {
            let b = self.chain.levels()[i].beta;
            partial.apply(b) == b
        });
        for &p in lvl.orbit() {
            let delta = partial.apply(p);
            if let Some(v) = forced {
                if v != delta {
                    continue;
                }
            }
            // subgroup-search pruning: explore only orbit-minimal images
            if !self.known_minimal.is_empty()
                && (level == 0 || on_spine)
                && !self.known_minimal[level][delta as usize]
            {
                continue;
            }
            let mark = self.map.mark();
            if self.assign_and_propagate(beta, delta) {
                let (next, next_inv) = if p == beta {
                    (partial.clone(), partial_inv.clone())
                } else {
                    let t = lvl.representative(p).unwrap();
                    (t.then(partial), partial_inv.then(lvl.representative_inv(p).unwrap()))
                };
                if self.descend(level + 1, &next, &next_inv) {
                    return true;
                }
            }
            self.map.rollback(mark);
        }
        false
    }
}

/// For each level of the search chain, marks the points that are least in
/// their orbit under the pointwise stabilizer in `known` of the base prefix.
fn minimality_bitmaps(known: &StabilizerChain, levels: usize, degree: usize) -> Vec<Vec<bool>> {
    (0..levels)
        .map(|level| {
            let gens = known.level_generators(level);
            let mut minimal = vec![true; degree];
            if gens.is_empty() {
                return minimal;
            }
            let mut seen = vec![false; degree];
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
                    for g in &gens {
                        let q = g.apply(p);
                        if !seen[q as usize] {
                            seen[q as usize] = true;
                            orbit.push(q);
                        }
                    }
                }
                // start is the least point of this orbit by scan order
                for &p in &orbit[1..] {
                    if p != start {
                        minimal[p as usize] = false;
                    }
                }
            }
            minimal
        })
        .collect()
}

/// A chain of the same group whose base is adapted to the cycles of `x`
/// (longest cycles first), which maximizes propagation during search.
fn adapted_chain(chain: &StabilizerChain, gens: &[Permutation], x: &Permutation, seed: u64) -> Result<StabilizerChain> {
    let n = chain.degree();
    let lens = cycle_lengths(x);
    let mut cycle_reps: Vec<u32> = Vec::new();
    let mut seen = vec![false; n];
    for start in 0..n as u32 {
        if seen[start as usize] {
            continue;
        }
        let mut q = start;
        loop {
            seen[q as usize] = true;
            q = x.apply(q);
            if q == start {
                break;
            }
        }
        if lens[start as usize] > 1 {
            cycle_reps.push(start);
        }
    }
    cycle_reps.sort_by_key(|&p| std::cmp::Reverse(lens[p as usize]));
    StabilizerChain::build_with_base_hint(n, gens, &cycle_reps, seed)
}

/// Finds one g in the group with x^g = y, if any.
pub fn conjugating_element(
    chain: &StabilizerChain,
    gens: &[Permutation],
    x: &Permutation,
    y: &Permutation,
    seed: u64,
) -> Result<Option<Permutation>> {
    if x.degree() != chain.degree() || y.degree() != chain.degree() {
        return Err(Error::Input("degree mismatch in conjugacy test".into()));
    }
    if x.cycle_type() != y.cycle_type() {
        return Ok(None);
    }
    let search_chain = adapted_chain(chain, gens, x, seed)?;
    conjugating_element_adapted(&search_chain, x, y)
}

/// Conjugacy search against a chain already adapted to the cycles of `x`
/// (see [`search_chain_for`]); lets callers test one fixed `x` against many
/// candidates without rebuilding chains.
pub fn conjugating_element_adapted(
    search_chain: &StabilizerChain,
    x: &Permutation,
    y: &Permutation,
) -> Result<Option<Permutation>> {
    if x.cycle_type() != y.cycle_type() {
        return Ok(None);
    }
    let mut search = ConjSearch {
        chain: search_chain,
        x,
        y,
        x_cycle_len: cycle_lengths(x),
        y_cycle_len: cycle_lengths(y),
        map: PartialMap::new(search_chain.degree()),
        known: None,
        known_minimal: Vec::new(),
        solutions: Vec::new(),
    };
    let id = Permutation::identity(search_chain.degree());
    search.descend(0, &id, &id.clone());
    Ok(search.solutions.pop())
}

/// A chain of the group with base adapted to the cycles of `x`, for use
/// with [`conjugating_element_adapted`].
pub fn search_chain_for(
    chain: &StabilizerChain,
    gens: &[Permutation],
    x: &Permutation,
    seed: u64,
) -> Result<StabilizerChain> {
    adapted_chain(chain, gens, x, seed)
}

/// Generators of the centralizer of `x` in the group, found by repeated
/// backtrack searches with orbit-minimality pruning against the subgroup
/// found so far.
pub fn centralizer_generators(
    chain: &StabilizerChain,
    gens: &[Permutation],
    x: &Permutation,
    seed: u64,
) -> Result<Vec<Permutation>> {
    if x.degree() != chain.degree() {
        return Err(Error::Input("degree mismatch in centralizer".into()));
    }
    let n = chain.degree();
    let search_chain = adapted_chain(chain, gens, x, seed)?;
    let mut known_gens: Vec<Permutation> = Vec::new();
    if !x.is_identity() {
        known_gens.push(x.clone());
    }
    loop {
        let known = StabilizerChain::build_with_base_hint(n, &known_gens, &search_chain.base(), seed)?;
        let known_minimal = minimality_bitmaps(&known, search_chain.levels().len(), n);
        let mut search = ConjSearch {
            chain: &search_chain,
            x,
            y: x,
            x_cycle_len: cycle_lengths(x),
            y_cycle_len: cycle_lengths(x),
            map: PartialMap::new(n),
            known: Some(known.clone()),
            known_minimal,
            solutions: Vec::new(),
        };
        let id = Permutation::identity(n);
        search.descend(0, &id, &id.clone());
        match search.solutions.pop() {
            Some(s) => known_gens.push(s),
            None => return Ok(known_gens),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use perm_core::RngState;

    fn sym(n: usize) -> (StabilizerChain, Vec<Permutation>) {
        let gens = vec![
            Permutation::from_cycles(n, &[vec![0, 1]]).unwrap(),
            Permutation::from_cycles(n, &[(0..n as u32).collect()]).unwrap(),
        ];
        (StabilizerChain::build(n, &gens, 0).unwrap(), gens)
    }

    /// brute-force element list of a small group
    fn elements(gens: &[Permutation]) -> Vec<Permutation> {
        let n = gens[0].degree();
        let mut out = vec![Permutation::identity(n)];
        let mut head = 0;
        while head < out.len() {
            let e = out[head].clone();
            head += 1;
            for g in gens {
                let f = e.then(g);
                if !out.contains(&f) {
                    out.push(f);
                }
            }
        }
        out
    }

    #[test]
    fn conjugacy_in_s5_matches_brute_force() {
        let (chain, gens) = sym(5);
        let all = elements(&gens);
        let mut rng = RngState::from_seed(11);
        for _ in 0..30 {
            let x = chain.random_element(&mut rng);
            let y = chain.random_element(&mut rng);
            let found = conjugating_element(&chain, &gens, &x, &y, 0).unwrap();
            let truth = all.iter().any(|g| g.inverse().then(&x).then(g) == y);
            assert_eq!(found.is_some(), truth);
            if let Some(g) = found {
                assert_eq!(g.inverse().then(&x).then(&g), y);
                assert!(chain.contains(&g).unwrap());
            }
        }
    }

    #[test]
    fn conjugacy_respects_the_group_not_just_cycle_type() {
        // in A4, the two classes of 3-cycles are not conjugate
        let gens = vec![
            Permutation::from_cycles(4, &[vec![0, 1, 2]]).unwrap(),
            Permutation::from_cycles(4, &[vec![1, 2, 3]]).unwrap(),
        ];
        let chain = StabilizerChain::build(4, &gens, 0).unwrap();
        let x = Permutation::from_cycles(4, &[vec![0, 1, 2]]).unwrap();
        let y = Permutation::from_cycles(4, &[vec![0, 2, 1]]).unwrap();
        assert!(conjugating_element(&chain, &gens, &x, &y, 0).unwrap().is_none());
        let z = Permutation::from_cycles(4, &[vec![0, 3, 1]]).unwrap();
        assert!(conjugating_element(&chain, &gens, &x, &z, 0).unwrap().is_some());
    }

    #[test]
    fn centralizer_orders_match_brute_force_in_s6() {
        let (chain, gens) = sym(6);
        let all = elements(&gens);
        let mut rng = RngState::from_seed(3);
        for _ in 0..12 {
            let x = chain.random_element(&mut rng);
            let c_gens = centralizer_generators(&chain, &gens, &x, 0).unwrap();
            let c_chain = StabilizerChain::build(6, &c_gens, 0).unwrap();
            let truth = all.iter().filter(|g| g.then(&x) == x.then(g)).count();
            assert_eq!(c_chain.order(), &BigUint::from(truth));
            for g in &c_gens {
                assert_eq!(g.then(&x), x.then(g));
            }
        }
    }
}
