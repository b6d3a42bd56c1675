//! Root systems of types A-G: Cartan matrices with Bourbaki numbering,
//! root enumeration by reflection closure, the highest root, and the
//! invariant bilinear form.

use perm_core::{Error, Result};

/// An irreducible root system with roots stored as integer coordinate
/// vectors over the simple roots.
#[derive(Clone)]
pub struct RootSystemData {
    pub type_label: String,
    pub rank: usize,
    /// cartan[i][j] = <alpha_j, alpha_i-check>
    pub cartan: Vec<Vec<i64>>,
    /// all roots; positives first, then negatives in matching order
    pub roots: Vec<Vec<i64>>,
    pub positive_count: usize,
    pub highest_root: Vec<i64>,
    /// diagonal symmetrizer: d[i] * cartan[i][j] is symmetric
    pub symmetrizer: Vec<i64>,
}

fn cartan_matrix(family: char, rank: usize) -> Result<Vec<Vec<i64>>> {
    let mut c = vec![vec![0i64; rank]; rank];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut chain = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match family {
        'A' => {
            for i in 1..rank {
                chain(i - 1, i);
            }
        }
        'B' => {
            if rank < 2 {
                return Err(Error::Input("B requires rank >= 2".into()));
            }
            for i in 1..rank {
                chain(i - 1, i);
            }
            // alpha_rank is short
            c[rank - 1][rank - 2] = -2;
        }
        'C' => {
            if rank < 2 {
                return Err(Error::Input("C requires rank >= 2".into()));
            }
            for i in 1..rank {
                chain(i - 1, i);
            }
            c[rank - 2][rank - 1] = -2;
        }
        'D' => {
            if rank < 3 {
                return Err(Error::Input("D requires rank >= 3".into()));
            }
            for i in 1..rank - 1 {
                chain(i - 1, i);
            }
            chain(rank - 3, rank - 1);
        }
        'E' => {
            if !(6..=8).contains(&rank) {
                return Err(Error::Input("E requires rank 6, 7 or 8".into()));
            }
            // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to 4
            chain(0, 2);
            for i in 3..rank {
                chain(i - 1, i);
            }
            chain(1, 3);
        }
        'F' => {
            if rank != 4 {
                return Err(Error::Input("F requires rank 4".into()));
            }
            chain(0, 1);
            chain(1, 2);
            chain(2, 3);
            c[2][1] = -2; // alpha_3, alpha_4 short
        }
        'G' => {
            if rank != 2 {
                return Err(Error::Input("G requires rank 2".into()));
            }
            chain(0, 1);
            c[1][0] = -3; // alpha_1 short
        }
        _ => return Err(Error::Input(format!("unknown family `{family}`"))),
    }
    Ok(c)
}

/// Positive integer diagonal making d[i] * c[i][j] symmetric, found by
/// propagation along the edges.
fn symmetrizer(c: &[Vec<i64>]) -> Vec<i64> {
    let rank = c.len();
    // rational d as (num, den), propagate then scale
    let mut num = vec![0i64; rank];
    let mut den = vec![1i64; rank];
    num[0] = 1;
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..rank {
            if num[i] == 0 {
                continue;
            }
            for j in 0..rank {
                if c[i][j] != 0 && i != j && num[j] == 0 {
                    // d_j = d_i * c[i][j] / c[j][i]
                    num[j] = num[i] * c[i][j];
                    den[j] = den[i] * c[j][i];
                    if num[j] * den[j] < 0 {
                        num[j] = -num[j].abs();
                        den[j] = -den[j].abs();
                    }
                    num[j] = num[j].abs();
                    den[j] = den[j].abs();
                    changed = true;
                }
            }
        }
    }
    let lcm_den = den.iter().fold(1i64, |a, &b| a / gcd(a, b) * b);
    let mut d: Vec<i64> = (0..rank).map(|i| num[i] * (lcm_den / den[i])).collect();
    let g = d.iter().fold(0i64, |a, &b| gcd(a, b));
    for x in d.iter_mut() {
        *x /= g;
    }
    d
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl RootSystemData {
    /// Builds a system from a label: irreducible like `A2`, `E6`, `F4`, or
    /// a product like `A2xA1`.
    pub fn build(type_label: &str) -> Result<RootSystemData> {
        let label = type_label.trim();
        if label.starts_with('2') || label.starts_with('3') {
            return Err(Error::Input(format!(
                "twisted type `{label}` is out of scope; only split untwisted data is evaluated"
            )));
        }
        if label.contains('x') || label.contains('X') {
            let factors: Vec<RootSystemData> = label
                .split(['x', 'X'])
                .map(RootSystemData::build)
                .collect::<Result<_>>()?;
            return Ok(RootSystemData::product(&factors));
        }
        let mut chars = label.chars();
        let family = chars
            .next()
            .ok_or_else(|| Error::Input("empty type label".into()))?
            .to_ascii_uppercase();
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Input(format!("bad rank in `{label}`")))?;
        if rank == 0 || rank > 8 {
            return Err(Error::Input("rank must be between 1 and 8".into()));
        }
        let family = if family == 'A' && rank == 1 { 'A' } else { family };
        let cartan = cartan_matrix(family, rank)?;
        let symmetrizer = symmetrizer(&cartan);

        // close the simple roots under simple reflections
        let mut roots: Vec<Vec<i64>> = Vec::new();
        let mut queue: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                let mut v = vec![0i64; rank];
                v[i] = 1;
                v
            })
            .collect();
        while let Some(beta) = queue.pop() {
            if roots.contains(&beta) {
                continue;
            }
            roots.push(beta.clone());
            for i in 0..rank {
                // s_i(beta) = beta - <beta, alpha_i-check> alpha_i
                let pairing: i64 = (0..rank).map(|j| cartan[i][j] * beta[j]).sum();
                let mut img = beta.clone();
                img[i] -= pairing;
                if !roots.contains(&img) {
                    queue.push(img);
                }
            }
        }
        // order: positives (all coords >= 0) by height then lex, negatives after
        let mut positives: Vec<Vec<i64>> = roots
            .iter()
            .filter(|r| r.iter().all(|&x| x >= 0))
            .cloned()
            .collect();
        positives.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
        let negatives: Vec<Vec<i64>> = positives
            .iter()
            .map(|r| r.iter().map(|&x| -x).collect())
            .collect();
        if positives.len() * 2 != roots.len() {
            return Err(Error::Internal("root system is not symmetric".into()));
        }
        let positive_count = positives.len();
        let highest_root = positives.last().unwrap().clone();
        for r in &positives {
            if highest_root.iter().zip(r).any(|(h, x)| h < x) {
                return Err(Error::Internal(
                    "highest root does not dominate all roots".into(),
                ));
            }
        }
        let mut all = positives;
        all.extend(negatives);
        Ok(RootSystemData {
            type_label: format!("{family}{rank}"),
            rank,
            cartan,
            roots: all,
            positive_count,
            highest_root,
            symmetrizer,
        })
    }

    /// Direct product: block-diagonal Cartan data, roots padded with zeros.
    fn product(factors: &[RootSystemData]) -> RootSystemData {
        let rank: usize = factors.iter().map(|f| f.rank).sum();
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut symmetrizer = Vec::with_capacity(rank);
        let mut positives: Vec<Vec<i64>> = Vec::new();
        let mut offset = 0;
        for f in factors {
            for i in 0..f.rank {
                for j in 0..f.rank {
                    cartan[offset + i][offset + j] = f.cartan[i][j];
                }
            }
            symmetrizer.extend_from_slice(&f.symmetrizer);
            for r in &f.roots[..f.positive_count] {
                let mut v = vec![0i64; rank];
                v[offset..offset + f.rank].copy_from_slice(r);
                positives.push(v);
            }
            offset += f.rank;
        }
        positives.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
        let negatives: Vec<Vec<i64>> = positives
            .iter()
            .map(|r| r.iter().map(|&x| -x).collect())
            .collect();
        let positive_count = positives.len();
        let mut roots = positives;
        roots.extend(negatives);
        let label: Vec<&str> = factors.iter().map(|f| f.type_label.as_str()).collect();
        RootSystemData {
            type_label: label.join("x"),
            rank,
            cartan,
            roots,
            positive_count,
            highest_root: Vec::new(), // undefined for products
            symmetrizer,
        }
    }

    pub fn is_irreducible(&self) -> bool {
        !self.highest_root.is_empty()
    }

    pub fn root_index(&self, root: &[i64]) -> Option<usize> {
        self.roots.iter().position(|r| r == root)
    }

    pub fn is_negative(&self, index: usize) -> bool {
        index >= self.positive_count
    }

    /// Symmetric bilinear form (x, y) in simple-root coordinates, scaled so
    /// values are integers.
    pub fn form(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut acc = 0;
        for i in 0..self.rank {
            for j in 0..self.rank {
                acc += self.symmetrizer[i] * self.cartan[i][j] * x[i] * y[j];
            }
        }
        acc
    }

    /// 2(x, beta)/(beta, beta): the integer reflection pairing.
    pub fn pairing(&self, x: &[i64], beta: &[i64]) -> i64 {
        let num = 2 * self.form(x, beta);
        let den = self.form(beta, beta);
        debug_assert_eq!(num % den, 0);
        num / den
    }

    /// The reflection in the given root, as a permutation image list on
    /// root indices.
    pub fn reflection_perm(&self, root: &[i64]) -> Vec<u8> {
        self.roots
            .iter()
            .map(|gamma| {
                let k = self.pairing(gamma, root);
                let img: Vec<i64> = gamma
                    .iter()
                    .zip(root)
                    .map(|(&g, &b)| g - k * b)
                    .collect();
                self.root_index(&img).expect("reflection leaves the system") as u8
            })
            .collect()
    }

    /// Matrix of the reflection in a simple root on the reflection
    /// representation (acting on simple-root coordinates).
    pub fn simple_reflection_matrix(&self, i: usize) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.rank]; self.rank];
        for (k, row) in m.iter_mut().enumerate() {
            row[k] = 1;
        }
        for j in 0..self.rank {
            m[i][j] -= self.cartan[i][j];
        }
        m
    }
}
