//! Projective actions of small linear groups: points, hyperplanes and
//! complete flags for SL3(2) and SL3(3), and the full automorphism group of
//! L4(3) on the 40 + 40 points and hyperplanes of PG(3,3).

use perm_core::Permutation;

/// Square matrix over F_p, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat {
    pub n: usize,
    pub p: u32,
    pub a: Vec<u32>,
}

impl Mat {
    pub fn identity(n: usize, p: u32) -> Mat {
        let mut a = vec![0; n * n];
        for i in 0..n {
            a[i * n + i] = 1;
        }
        Mat { n, p, a }
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.a[i * self.n + j] = v % self.p;
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        let n = self.n;
        let mut out = Mat {
            n,
            p: self.p,
            a: vec![0; n * n],
        };
        for i in 0..n {
            for k in 0..n {
                let v = self.get(i, k);
                if v == 0 {
                    continue;
                }
                for j in 0..n {
                    out.a[i * n + j] = (out.a[i * n + j] + v * other.get(k, j)) % self.p;
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        let n = self.n;
        (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j) * v[j]).sum::<u32>() % self.p)
            .collect()
    }

    /// Row vector times matrix (functionals transform on the right).
    pub fn apply_row(&self, f: &[u32]) -> Vec<u32> {
        let n = self.n;
        (0..n)
            .map(|j| (0..n).map(|i| f[i] * self.get(i, j)).sum::<u32>() % self.p)
            .collect()
    }

    pub fn transpose(&self) -> Mat {
        let n = self.n;
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                out.a[i * n + j] = self.get(j, i);
            }
        }
        out
    }

    pub fn inverse(&self) -> Mat {
        let n = self.n;
        let p = self.p;
        let mut aug: Vec<Vec<u32>> = (0..n)
            .map(|i| {
                let mut row: Vec<u32> = (0..n).map(|j| self.get(i, j)).collect();
                row.extend((0..n).map(|j| u32::from(i == j)));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| aug[r][col] != 0)
                .expect("matrix is singular");
            aug.swap(col, pivot);
            let inv = mod_inv(aug[col][col], p);
            for x in aug[col].iter_mut() {
                *x = *x * inv % p;
            }
            for r in 0..n {
                if r != col && aug[r][col] != 0 {
                    let factor = aug[r][col];
                    for j in 0..2 * n {
                        let sub = factor * aug[col][j] % p;
                        aug[r][j] = (aug[r][j] + p * p - sub) % p;
                    }
                }
            }
        }
        let mut out = Mat {
            n,
            p,
            a: vec![0; n * n],
        };
        for i in 0..n {
            for j in 0..n {
                out.a[i * n + j] = aug[i][n + j];
            }
        }
        out
    }
}

fn mod_inv(x: u32, p: u32) -> u32 {
    let mut acc = 1u64;
    let mut b = x as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    acc as u32
}

/// Nonzero vectors of F_p^n up to scalar, normalized so the first nonzero
/// coordinate is 1, ordered lexicographically.
pub fn projective_points(n: usize, p: u32) -> Vec<Vec<u32>> {
    let total = (p as u64).pow(n as u32);
    let mut pts = Vec::new();
    for code in 1..total {
        let mut v = Vec::with_capacity(n);
        let mut c = code;
        for _ in 0..n {
            v.push((c % p as u64) as u32);
            c /= p as u64;
        }
        v.reverse();
        if v.iter().find(|&&x| x != 0) == Some(&1) {
            pts.push(v);
        }
    }
    pts
}

pub fn normalize(mut v: Vec<u32>, p: u32) -> Vec<u32> {
    let lead = *v.iter().find(|&&x| x != 0).expect("zero vector");
    if lead != 1 {
        let inv = mod_inv(lead, p);
        for x in v.iter_mut() {
            *x = *x * inv % p;
        }
    }
    v
}

fn point_index(pts: &[Vec<u32>], v: &[u32]) -> usize {
    pts.iter().position(|w| w == v).expect("point not found")
}

/// Standard generators of SL_n(p): a transvection and a signed cycle.
pub fn sl_generators(n: usize, p: u32) -> Vec<Mat> {
    let mut t = Mat::identity(n, p);
    t.set(0, 1, 1);
    let mut c = Mat {
        n,
        p,
        a: vec![0; n * n],
    };
    // companion-style n-cycle, with a sign fixing the determinant at 1
    let sign = if n % 2 == 0 { p - 1 } else { 1 };
    c.set(0, n - 1, sign);
    for i in 1..n {
        c.set(i, i - 1, 1);
    }
    vec![t, c]
}

/// Action of matrices on projective points.
pub fn action_on_points(mats: &[Mat], n: usize, p: u32) -> Vec<Permutation> {
    let pts = projective_points(n, p);
    mats.iter()
        .map(|m| {
            let images: Vec<u32> = pts
                .iter()
                .map(|v| point_index(&pts, &normalize(m.apply(v), p)) as u32)
                .collect();
            Permutation::from_images(images).unwrap()
        })
        .collect()
}

/// Action on hyperplanes (functionals up to scalar): f -> f * m^-1.
pub fn action_on_hyperplanes(mats: &[Mat], n: usize, p: u32) -> Vec<Permutation> {
    let pts = projective_points(n, p);
    mats.iter()
        .map(|m| {
            let minv = m.inverse();
            let images: Vec<u32> = pts
                .iter()
                .map(|f| point_index(&pts, &normalize(minv.apply_row(f), p)) as u32)
                .collect();
            Permutation::from_images(images).unwrap()
        })
        .collect()
}

/// Complete flags (incident point-hyperplane pairs) of PG(2,p), and the
/// action of matrices on them.
pub fn flags_of_pg2(p: u32) -> Vec<(usize, usize)> {
    let pts = projective_points(3, p);
    let mut flags = Vec::new();
    for (pi, v) in pts.iter().enumerate() {
        for (li, f) in pts.iter().enumerate() {
            let dot: u32 = v.iter().zip(f).map(|(a, b)| a * b).sum::<u32>() % p;
            if dot == 0 {
                flags.push((pi, li));
            }
        }
    }
    flags
}

pub fn action_on_flags(mats: &[Mat], p: u32) -> Vec<Permutation> {
    let pts = projective_points(3, p);
    let flags = flags_of_pg2(p);
    let flag_index = |pi: usize, li: usize| -> u32 {
        flags.iter().position(|&fl| fl == (pi, li)).unwrap() as u32
    };
    mats.iter()
        .map(|m| {
            let minv = m.inverse();
            let images: Vec<u32> = flags
                .iter()
                .map(|&(pi, li)| {
                    let np = point_index(&pts, &normalize(m.apply(&pts[pi]), p));
                    let nl = point_index(&pts, &normalize(minv.apply_row(&pts[li]), p));
                    flag_index(np, nl)
                })
                .collect();
            Permutation::from_images(images).unwrap()
        })
        .collect()
}

/// Aut(L4(3)) = PGL4(3).2 acting on the 40 points and 40 hyperplanes of
/// PG(3,3); the extra involution is induced by inverse-transpose, which
/// swaps the two sides.
pub fn aut_l43_on_80() -> Vec<Permutation> {
    let p = 3;
    let n = 4;
    let pts = projective_points(n, p);
    let npts = pts.len();
    assert_eq!(npts, 40);
    // linear generators: SL4(3) plus a determinant-2 diagonal for PGL
    let mut mats = sl_generators(n, p);
    let mut d = Mat::identity(n, p);
    d.set(0, 0, 2);
    mats.push(d);

    let mut gens = Vec::new();
    for m in &mats {
        let minv = m.inverse();
        let mut images = Vec::with_capacity(2 * npts);
        for v in &pts {
            images.push(point_index(&pts, &normalize(m.apply(v), p)) as u32);
        }
        for f in &pts {
            images.push((npts + point_index(&pts, &normalize(minv.apply_row(f), p))) as u32);
        }
        gens.push(Permutation::from_images(images).unwrap());
    }
    // graph automorphism: swap points and hyperplanes via transpose
    let mut images = Vec::with_capacity(2 * npts);
    for v in &pts {
        images.push((npts + point_index(&pts, v)) as u32);
    }
    for f in &pts {
        images.push(point_index(&pts, f) as u32);
    }
    gens.push(Permutation::from_images(images).unwrap());
    gens
}

/// PSL4(3) on the 40 points of PG(3,3).
pub fn psl43_on_40() -> Vec<Permutation> {
    action_on_points(&sl_generators(4, 3), 4, 3)
}

pub const PSL43_ORDER: u64 = 6_065_280;
pub const AUT_L43_ORDER: u64 = 24_261_120;
pub const L32_ORDER: u64 = 168;
pub const L33_ORDER: u64 = 5_616;
