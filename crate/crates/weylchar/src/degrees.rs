//! Reflection degree tables and recognition of root subsystem components.

use crate::root_system::RootSystemData;
use perm_core::{Error, Result};

/// Degrees of the fundamental invariants for an irreducible type,
/// recognized from (rank, root count, simply-laced?).
pub fn degrees_for(
    label: &str,
    rank: usize,
    root_count: usize,
    simply_laced: bool,
) -> Result<Vec<usize>> {
    let _ = label;
    let degs = match (rank, root_count) {
        (r, c) if c == r * (r + 1) => (2..=r + 1).collect(),
        (6, 72) if simply_laced => vec![2, 5, 6, 8, 9, 12], // E6; B6/C6 share the count
        (r, c) if c == 2 * r * r => (1..=r).map(|k| 2 * k).collect(),
        (r, c) if r >= 4 && c == 2 * r * (r - 1) => {
            let mut d: Vec<usize> = (1..r).map(|k| 2 * k).collect();
            d.push(r);
            d.sort_unstable();
            d
        }
        (7, 126) => vec![2, 6, 8, 10, 12, 14, 18],
        (8, 240) => vec![2, 8, 12, 14, 18, 20, 24, 30],
        (4, 48) => vec![2, 6, 8, 12],
        (2, 12) => vec![2, 6],
        _ => {
            return Err(Error::Internal(format!(
                "unrecognized component: rank {rank}, {root_count} roots"
            )))
        }
    };
    Ok(degs)
}

/// The root subsystem generated by a set of roots: closure of the set
/// (with negatives) under reflecting its members in one another.
pub fn subsystem_closure(rs: &RootSystemData, seed_roots: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut member = vec![false; rs.roots.len()];
    for beta in seed_roots {
        let i = rs.root_index(beta).expect("seed must be a root");
        member[i] = true;
        let neg: Vec<i64> = beta.iter().map(|x| -x).collect();
        member[rs.root_index(&neg).unwrap()] = true;
    }
    loop {
        let current: Vec<usize> = (0..rs.roots.len()).filter(|&i| member[i]).collect();
        let mut grew = false;
        for &xi in &current {
            for &yi in &current {
                let x = &rs.roots[xi];
                let y = &rs.roots[yi];
                let k = rs.pairing(x, y);
                let img: Vec<i64> = x.iter().zip(y).map(|(&a, &b)| a - k * b).collect();
                let idx = rs.root_index(&img).expect("reflection stays in the system");
                if !member[idx] {
                    member[idx] = true;
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    (0..rs.roots.len())
        .filter(|&i| member[i])
        .map(|i| rs.roots[i].clone())
        .collect()
}

/// Splits a subsystem into orthogonal irreducible components and returns
/// (rank, degrees) per component.
pub fn component_degrees(rs: &RootSystemData, sub: &[Vec<i64>]) -> Result<Vec<(usize, Vec<usize>)>> {
    let mut unassigned: Vec<Vec<i64>> = sub.to_vec();
    let mut out = Vec::new();
    while let Some(start) = unassigned.pop() {
        let mut comp = vec![start];
        let mut changed = true;
        while changed {
            changed = false;
            let mut i = 0;
            while i < unassigned.len() {
                if comp.iter().any(|c| rs.form(c, &unassigned[i]) != 0) {
                    comp.push(unassigned.swap_remove(i));
                    changed = true;
                } else {
                    i += 1;
                }
            }
        }
        let rank = rank_of(&comp);
        let lengths: std::collections::HashSet<i64> =
            comp.iter().map(|r| rs.form(r, r)).collect();
        let degs = degrees_for("", rank, comp.len(), lengths.len() == 1)?;
        out.push((rank, degs));
    }
    out.sort();
    Ok(out)
}

/// Rank of the span of integer vectors, by fraction-free elimination.
pub fn rank_of(vectors: &[Vec<i64>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let mut m: Vec<Vec<i64>> = vectors.to_vec();
    let cols = m[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let pivot = (rank..m.len()).find(|&r| m[r][col] != 0);
        let Some(p) = pivot else { continue };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            if m[r][col] != 0 {
                let (a, b) = (m[rank][col], m[r][col]);
                for c in 0..cols {
                    m[r][c] = m[r][c] * a - m[rank][c] * b;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_tables() {
        assert_eq!(degrees_for("", 2, 6, true).unwrap(), vec![2, 3]);
        assert_eq!(degrees_for("", 5, 30, true).unwrap(), vec![2, 3, 4, 5, 6]);
        assert_eq!(degrees_for("", 3, 18, false).unwrap(), vec![2, 4, 6]);
        assert_eq!(degrees_for("", 4, 24, true).unwrap(), vec![2, 4, 4, 6]);
        assert_eq!(degrees_for("", 6, 72, true).unwrap(), vec![2, 5, 6, 8, 9, 12]);
        assert_eq!(degrees_for("", 6, 72, false).unwrap(), vec![2, 4, 6, 8, 10, 12]);
        assert_eq!(degrees_for("", 1, 2, true).unwrap(), vec![2]);
    }

    #[test]
    fn a5a1_subsystem_in_e6() {
        let rs = RootSystemData::build("E6").unwrap();
        // J = {alpha0, alpha1, alpha3, alpha4, alpha5, alpha6}
        let mut seeds = vec![rs.highest_root.clone()];
        for i in [0usize, 2, 3, 4, 5] {
            let mut v = vec![0i64; 6];
            v[i] = 1;
            seeds.push(v);
        }
        let sub = subsystem_closure(&rs, &seeds);
        assert_eq!(sub.len(), 32); // A5 (30) + A1 (2)
        let comps = component_degrees(&rs, &sub).unwrap();
        assert_eq!(comps, vec![(1, vec![2]), (5, vec![2, 3, 4, 5, 6])]);
    }

    #[test]
    fn d4_levi_subsystem_in_e6() {
        let rs = RootSystemData::build("E6").unwrap();
        let seeds: Vec<Vec<i64>> = [1usize, 2, 3, 4]
            .iter()
            .map(|&i| {
                let mut v = vec![0i64; 6];
                v[i] = 1;
                v
            })
            .collect();
        let sub = subsystem_closure(&rs, &seeds);
        assert_eq!(sub.len(), 24);
        let comps = component_degrees(&rs, &sub).unwrap();
        assert_eq!(comps, vec![(4, vec![2, 4, 4, 6])]);
    }
}
