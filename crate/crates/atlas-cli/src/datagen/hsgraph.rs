//! HS acting on the 100 vertices of the Higman-Sims graph.
//!
//! The graph is built from the Steiner system S(3,6,22): one hub vertex
//! joined to the 22 points, points joined to the 77 hexads containing them,
//! hexads joined when disjoint. M22 acts fixing the hub; one automorphism
//! moving the hub is found by a constraint-propagation backtrack, and the
//! derived subgroup of the resulting vertex-transitive group is HS. The
//! chain order check certifies the construction.

use super::golay::GolayCode;
use perm_core::{Permutation, RngState, StabilizerChain};

pub const HS_ORDER: u64 = 44_352_000;
pub const M22_IN_HS_ORDER: u64 = 443_520;

/// Adjacency as 100 rows of two-u64 bitsets.
struct Graph {
    adj: Vec<[u64; 2]>,
}

impl Graph {
    fn new() -> Graph {
        Graph {
            adj: vec![[0u64; 2]; 100],
        }
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u][v / 64] |= 1 << (v % 64);
        self.adj[v][u / 64] |= 1 << (u % 64);
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u][v / 64] >> (v % 64) & 1 == 1
    }

    fn degree(&self, u: usize) -> u32 {
        self.adj[u][0].count_ones() + self.adj[u][1].count_ones()
    }
}

/// Hexads of S(3,6,22) as bitmasks over points 0..21: the octads through
/// coordinates 22 and 23, with those two coordinates removed.
fn hexads(code: &GolayCode) -> Vec<u32> {
    let pair = (1u32 << 22) | (1u32 << 23);
    let hexads: Vec<u32> = code
        .octads
        .iter()
        .filter(|&&o| o & pair == pair)
        .map(|&o| o & !pair)
        .collect();
    assert_eq!(hexads.len(), 77);
    hexads
}

/// Vertex layout: 0 = hub, 1..=22 = points 0..21, 23..=99 = hexads.
fn higman_sims_graph(hexads: &[u32]) -> Graph {
    let mut g = Graph::new();
    for p in 0..22 {
        g.add_edge(0, 1 + p);
    }
    for (hi, &h) in hexads.iter().enumerate() {
        for p in 0..22 {
            if h >> p & 1 == 1 {
                g.add_edge(1 + p, 23 + hi);
            }
        }
        for (hj, &h2) in hexads.iter().enumerate().skip(hi + 1) {
            if h & h2 == 0 {
                g.add_edge(23 + hi, 23 + hj);
            }
        }
    }
    for v in 0..100 {
        assert_eq!(g.degree(v), 22, "graph is not 22-regular at {v}");
    }
    g
}

/// Finds a graph automorphism sending `from` to `to` by backtracking with
/// adjacency-consistency propagation, most-constrained vertex first.
fn automorphism_moving(g: &Graph, from: usize, to: usize) -> Option<Permutation> {
    struct Search<'a> {
        g: &'a Graph,
        map: Vec<Option<u32>>,
        used: Vec<bool>,
    }
    impl Search<'_> {
        fn candidates(&self, v: usize) -> Vec<u32> {
            let mut out = Vec::new();
            'w: for w in 0..100u32 {
                if self.used[w as usize] {
                    continue;
                }
                for u in 0..100usize {
                    if let Some(mu) = self.map[u] {
                        if self.g.has_edge(v, u) != self.g.has_edge(w as usize, mu as usize) {
                            continue 'w;
                        }
                    }
                }
                out.push(w);
            }
            out
        }

        fn extend(&mut self) -> bool {
            // most-constrained unmapped vertex
            let mut best: Option<(usize, Vec<u32>)> = None;
            for v in 0..100 {
                if self.map[v].is_some() {
                    continue;
                }
                let cands = self.candidates(v);
                if cands.is_empty() {
                    return false;
                }
                let better = match &best {
                    None => true,
                    Some((_, c)) => cands.len() < c.len(),
                };
                if better {
                    let single = cands.len() == 1;
                    best = Some((v, cands));
                    if single {
                        break;
                    }
                }
            }
            let (v, cands) = match best {
                None => return true, // everything mapped
                Some(b) => b,
            };
            for w in cands {
                self.map[v] = Some(w);
                self.used[w as usize] = true;
                if self.extend() {
                    return true;
                }
                self.map[v] = None;
                self.used[w as usize] = false;
            }
            false
        }
    }
    let mut search = Search {
        g,
        map: vec![None; 100],
        used: vec![false; 100],
    };
    search.map[from] = Some(to as u32);
    search.used[to] = true;
    if !search.extend() {
        return None;
    }
    let images: Vec<u32> = search.map.iter().map(|m| m.unwrap()).collect();
    Some(Permutation::from_images(images).unwrap())
}

pub struct HsData {
    pub generators: Vec<Permutation>,
}

/// Builds HS on the 100 vertices, with the hub at point 0 so the point
/// stabilizer is M22. `m24` are Golay-preserving M24 generators.
pub fn hs_on_100(code: &GolayCode, m24: &[Permutation], seed: u64) -> HsData {
    let hexads = hexads(code);
    let graph = higman_sims_graph(&hexads);

    // M22 fixing coordinates 22, 23 of the Golay set, acting on the vertices
    let m22 = super::mathieu::stabilizer_generators(24, m24, &[22, 23], seed);
    let hexad_index = |h: u32| -> usize { hexads.iter().position(|&x| x == h).unwrap() };
    let m22_vertex_gens: Vec<Permutation> = m22
        .iter()
        .map(|g| {
            let mut images = vec![0u32; 100];
            for p in 0..22u32 {
                images[1 + p as usize] = 1 + g.apply(p);
            }
            for (hi, &h) in hexads.iter().enumerate() {
                let mut img = 0u32;
                for p in 0..22 {
                    if h >> p & 1 == 1 {
                        img |= 1 << g.apply(p);
                    }
                }
                images[23 + hi] = (23 + hexad_index(img)) as u32;
            }
            Permutation::from_images(images).unwrap()
        })
        .collect();
    for g in &m22_vertex_gens {
        for v in 0..100 {
            for w in 0..100 {
                if graph.has_edge(v, w) {
                    debug_assert!(graph.has_edge(g.apply(v as u32) as usize, g.apply(w as u32) as usize));
                }
            }
        }
    }

    let extra = automorphism_moving(&graph, 0, 1).expect("no automorphism moves the hub");

    let mut gens = m22_vertex_gens;
    gens.push(extra);
    let chain = StabilizerChain::build(100, &gens, seed).unwrap();
    let full_order: u64 = chain.order().to_string().parse().unwrap();
    assert!(
        full_order == HS_ORDER || full_order == 2 * HS_ORDER,
        "vertex group has unexpected order {full_order}"
    );

    let hs_gens = if full_order == HS_ORDER {
        gens
    } else {
        // derived subgroup: HS.2' = HS
        let mut rng = RngState::from_seed(seed ^ 0x4853);
        let mut comms: Vec<Permutation> = Vec::new();
        loop {
            for _ in 0..4 {
                let a = chain.random_element(&mut rng);
                let b = chain.random_element(&mut rng);
                let comm = a
                    .inverse()
                    .then(&b.inverse())
                    .then(&a)
                    .then(&b);
                comms.push(comm);
            }
            let sub = StabilizerChain::build(100, &comms, seed).unwrap();
            let ord: u64 = sub.order().to_string().parse().unwrap();
            if ord == HS_ORDER {
                break comms;
            }
            assert!(ord < HS_ORDER, "derived subgroup overshot HS");
        }
    };
    let chain = StabilizerChain::build(100, &hs_gens, seed).unwrap();
    assert_eq!(chain.order().to_string(), HS_ORDER.to_string());
    let stab = StabilizerChain::build_with_base_hint(100, &hs_gens, &[0], seed).unwrap();
    assert_eq!(stab.level_order(1).to_string(), M22_IN_HS_ORDER.to_string());
    HsData { generators: hs_gens }
}
