//! The Weyl group as permutations of the roots: enumeration, lengths,
//! conjugacy classes, torus order polynomials and relative ranks.

use crate::poly::IntPolynomial;
use crate::root_system::RootSystemData;
use num_bigint::BigInt;
use perm_core::{Error, Result};
use std::collections::HashMap;

type RootPerm = Vec<u8>;

fn compose(a: &RootPerm, b: &RootPerm) -> RootPerm {
    a.iter().map(|&x| b[x as usize]).collect()
}

/// W with every element enumerated, its conjugacy classes, and per-class
/// torus data.
pub struct WeylGroupData {
    pub rs: RootSystemData,
    /// permutations of the roots; element 0 is the identity
    pub elements: Vec<RootPerm>,
    pub index_of: HashMap<RootPerm, usize>,
    /// simple reflections as element indices
    pub simple: Vec<usize>,
    pub order: u64,
    /// class id of every element
    pub class_of: Vec<u32>,
    pub classes: Vec<ClassData>,
    pub reflection_count: usize,
}

pub struct ClassData {
    pub representative: usize,
    pub size: u64,
    /// det(qI - w) on the reflection representation
    pub order_poly: IntPolynomial,
    /// multiplicity of eigenvalue 1 = multiplicity of (q-1) in order_poly
    pub relative_rank: usize,
}

/// Enumeration budget: |W| at most this.
pub const WEYL_ENUMERATION_BUDGET: u64 = 1_200_000;

impl WeylGroupData {
    pub fn build(rs: RootSystemData) -> Result<WeylGroupData> {
        let expected = order_from_degrees(&rs);
        if expected > WEYL_ENUMERATION_BUDGET {
            return Err(Error::Resource(format!(
                "Weyl group of order {expected} exceeds the enumeration budget"
            )));
        }
        let simple_perms: Vec<RootPerm> = (0..rs.rank)
            .map(|i| {
                let mut alpha = vec![0i64; rs.rank];
                alpha[i] = 1;
                rs.reflection_perm(&alpha)
            })
            .collect();
        let n_roots = rs.roots.len();
        let identity: RootPerm = (0..n_roots as u8).collect();
        let mut elements = vec![identity.clone()];
        let mut index_of = HashMap::new();
        index_of.insert(identity, 0usize);
        let mut head = 0;
        while head < elements.len() {
            let w = elements[head].clone();
            head += 1;
            for s in &simple_perms {
                let ws = compose(&w, s);
                if !index_of.contains_key(&ws) {
                    index_of.insert(ws.clone(), elements.len());
                    elements.push(ws);
                }
            }
        }
        let order = elements.len() as u64;
        if order != expected {
            return Err(Error::Internal(format!(
                "enumerated {order} elements, degree product predicts {expected}"
            )));
        }
        let simple: Vec<usize> = simple_perms.iter().map(|s| index_of[s]).collect();

        // classes by conjugation orbits
        let mut class_of = vec![u32::MAX; elements.len()];
        let mut classes = Vec::new();
        let simple_invs: Vec<RootPerm> = simple_perms.iter().map(|s| invert(s)).collect();
        for start in 0..elements.len() {
            if class_of[start] != u32::MAX {
                continue;
            }
            let cid = classes.len() as u32;
            let mut orbit = vec![start];
            class_of[start] = cid;
            let mut h = 0;
            while h < orbit.len() {
                let e = orbit[h];
                h += 1;
                for (s, si) in simple_perms.iter().zip(&simple_invs) {
                    let conj = compose(si, &compose(&elements[e], s));
                    let idx = index_of[&conj];
                    if class_of[idx] == u32::MAX {
                        class_of[idx] = cid;
                        orbit.push(idx);
                    }
                }
            }
            let rep = *orbit.iter().min().unwrap();
            let order_poly = char_poly(&rs, &elements[rep]);
            let relative_rank = order_poly.multiplicity_of_q_minus_one();
            classes.push(ClassData {
                representative: rep,
                size: orbit.len() as u64,
                order_poly,
                relative_rank,
            });
        }
        Ok(WeylGroupData {
            reflection_count: n_roots / 2,
            rs,
            elements,
            index_of,
            simple,
            order,
            class_of,
            classes,
        })
    }

    /// Length of an element: positive roots sent negative.
    pub fn length(&self, element: usize) -> usize {
        let w = &self.elements[element];
        (0..self.rs.positive_count)
            .filter(|&i| self.rs.is_negative(w[i] as usize))
            .count()
    }

    /// The reflection-representation matrix of an element (columns are the
    /// images of the simple roots).
    pub fn matrix(&self, element: usize) -> Vec<Vec<i64>> {
        let w = &self.elements[element];
        let rank = self.rs.rank;
        let mut m = vec![vec![0i64; rank]; rank];
        for j in 0..rank {
            let mut alpha = vec![0i64; rank];
            alpha[j] = 1;
            let src = self.rs.root_index(&alpha).unwrap();
            let img = &self.rs.roots[w[src] as usize];
            for k in 0..rank {
                m[k][j] = img[k];
            }
        }
        m
    }

    /// det(qI - w): the torus order polynomial of the class of `element`.
    pub fn torus_order_poly(&self, element: usize) -> IntPolynomial {
        self.classes[self.class_of[element] as usize].order_poly.clone()
    }

    pub fn relative_rank(&self, element: usize) -> usize {
        self.classes[self.class_of[element] as usize].relative_rank
    }

    /// Multiplies a word in simple reflections into an element index.
    pub fn element_from_word(&self, word: &[usize]) -> Result<usize> {
        let n_roots = self.rs.roots.len();
        let mut cur: RootPerm = (0..n_roots as u8).collect();
        for &i in word {
            if i >= self.rs.rank {
                return Err(Error::Input(format!("s{} is out of range", i + 1)));
            }
            cur = compose(&cur, &self.elements[self.simple[i]]);
        }
        Ok(self.index_of[&cur])
    }

    /// Subgroup generated by the reflections in the given roots, as element
    /// indices, enumerated by closure.
    pub fn reflection_subgroup(&self, roots: &[Vec<i64>]) -> Result<Vec<usize>> {
        let gens: Vec<usize> = roots
            .iter()
            .map(|r| {
                let perm = self.rs.reflection_perm(r);
                self.index_of
                    .get(&perm)
                    .copied()
                    .ok_or_else(|| Error::Internal("reflection not in the enumerated group".into()))
            })
            .collect::<Result<_>>()?;
        let n_roots = self.rs.roots.len();
        let identity: RootPerm = (0..n_roots as u8).collect();
        let mut seen = HashMap::new();
        seen.insert(identity.clone(), ());
        let mut out = vec![self.index_of[&identity]];
        let mut queue = vec![identity];
        while let Some(w) = queue.pop() {
            for &g in &gens {
                let wg = compose(&w, &self.elements[g]);
                if !seen.contains_key(&wg) {
                    seen.insert(wg.clone(), ());
                    out.push(self.index_of[&wg]);
                    queue.push(wg);
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }
}

fn invert(p: &RootPerm) -> RootPerm {
    let mut inv = vec![0u8; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x as usize] = i as u8;
    }
    inv
}

/// Characteristic polynomial det(qI - M) by the Faddeev-LeVerrier
/// recurrence (exact over the integers).
fn char_poly(rs: &RootSystemData, w: &RootPerm) -> IntPolynomial {
    let rank = rs.rank;
    let mut m = vec![vec![BigInt::from(0); rank]; rank];
    for j in 0..rank {
        let mut alpha = vec![0i64; rank];
        alpha[j] = 1;
        let src = rs.root_index(&alpha).unwrap();
        let img = &rs.roots[w[src] as usize];
        for k in 0..rank {
            m[k][j] = BigInt::from(img[k]);
        }
    }
    let mul = |a: &Vec<Vec<BigInt>>, b: &Vec<Vec<BigInt>>| -> Vec<Vec<BigInt>> {
        let mut out = vec![vec![BigInt::from(0); rank]; rank];
        for i in 0..rank {
            for k in 0..rank {
                if a[i][k] == BigInt::from(0) {
                    continue;
                }
                for j in 0..rank {
                    let prod = &a[i][k] * &b[k][j];
                    out[i][j] += prod;
                }
            }
        }
        out
    };
    let trace = |a: &Vec<Vec<BigInt>>| -> BigInt { (0..rank).map(|i| a[i][i].clone()).sum() };

    // coefficients of det(qI - M) = q^r + c1 q^{r-1} + ... + cr
    let mut coeffs = vec![BigInt::from(0); rank + 1];
    coeffs[rank] = BigInt::from(1);
    let mut ak = m.clone();
    let mut ck = -trace(&ak);
    coeffs[rank - 1] = ck.clone();
    for k in 2..=rank {
        let mut shifted = ak.clone();
        for i in 0..rank {
            shifted[i][i] += &ck;
        }
        ak = mul(&m, &shifted);
        ck = -trace(&ak) / BigInt::from(k as i64);
        coeffs[rank - k] = ck.clone();
    }
    IntPolynomial::from_coeffs(coeffs)
}

/// |W| as the product of the reflection degrees over the components.
pub fn order_from_degrees(rs: &RootSystemData) -> u64 {
    crate::degrees::component_degrees(rs, &rs.roots)
        .expect("components carry degree tables")
        .iter()
        .flat_map(|(_, degs)| degs.iter())
        .map(|&d| d as u64)
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use perm_core::RngState;

    fn weyl(label: &str) -> WeylGroupData {
        WeylGroupData::build(RootSystemData::build(label).unwrap()).unwrap()
    }

    #[test]
    fn orders_and_class_sums() {
        for (label, order, classes) in [
            ("A1", 2u64, 2usize),
            ("A2", 6, 3),
            ("B2", 8, 5),
            ("G2", 12, 6),
            ("D4", 192, 13),
            ("A5", 720, 11),
        ] {
            let w = weyl(label);
            assert_eq!(w.order, order, "{label}");
            assert_eq!(w.classes.len(), classes, "{label}");
            let sum: u64 = w.classes.iter().map(|c| c.size).sum();
            assert_eq!(sum, order, "{label} class sizes");
        }
    }

    #[test]
    fn product_weyl_groups() {
        let w = weyl("A1xA1");
        assert_eq!(w.order, 4);
        assert_eq!(w.classes.len(), 4);
        let w = weyl("A2xA1");
        assert_eq!(w.order, 12);
        assert_eq!(w.classes.len(), 6);
    }

    #[test]
    fn e6_weyl_order_is_51840() {
        let w = weyl("E6");
        assert_eq!(w.order, 51840);
        assert_eq!(w.classes.len(), 25);
        assert_eq!(w.reflection_count, 36);
        let sum: u64 = w.classes.iter().map(|c| c.size).sum();
        assert_eq!(sum, 51840);
    }

    #[test]
    fn torus_polys_of_a2() {
        let w = weyl("A2");
        // identity: (q-1)^2; reflections: (q-1)(q+1); Coxeter: q^2+q+1
        let mut polys: Vec<String> = w.classes.iter().map(|c| c.order_poly.to_string()).collect();
        polys.sort();
        assert_eq!(
            polys,
            vec!["q^2 + q + 1", "q^2 - 1", "q^2 - 2q + 1"]
        );
        // q = 1 is a root exactly when the relative rank is positive
        for c in &w.classes {
            let at_one = c.order_poly.eval(&BigInt::from(1));
            assert_eq!(at_one == BigInt::from(0), c.relative_rank > 0);
        }
        // relative ranks: identity 2, reflection 1, Coxeter 0
        let mut ranks: Vec<usize> = w.classes.iter().map(|c| c.relative_rank).collect();
        ranks.sort_unstable();
        assert_eq!(ranks, vec![0, 1, 2]);
    }

    #[test]
    fn torus_poly_is_a_class_function() {
        let w = weyl("D4");
        let mut rng = RngState::from_seed(5);
        for _ in 0..40 {
            let e = rng.below(w.order) as usize;
            let cls = &w.classes[w.class_of[e] as usize];
            let direct = super::char_poly(&w.rs, &w.elements[e]);
            assert_eq!(direct, cls.order_poly);
            // constant term is +-1
            let ct = cls.order_poly.constant_term();
            assert!(ct == BigInt::from(1) || ct == BigInt::from(-1));
        }
    }

    #[test]
    fn relative_rank_basics() {
        let w = weyl("A2");
        // identity has rank 2
        let id_class = w.class_of[0] as usize;
        assert_eq!(w.classes[id_class].relative_rank, 2);
        // any reflection has rank 1
        let refl = w.simple[0];
        assert_eq!(w.relative_rank(refl), 1);
        // Coxeter element has rank 0 and torus poly q^2+q+1
        let cox = w.element_from_word(&[0, 1]).unwrap();
        assert_eq!(w.relative_rank(cox), 0);
        assert_eq!(w.torus_order_poly(cox).to_string(), "q^2 + q + 1");
    }

    #[test]
    fn word_and_subgroup() {
        let w = weyl("E6");
        assert_eq!(w.element_from_word(&[]).unwrap(), 0);
        // parabolic D4 inside E6: nodes 2,3,4,5 (0-based 1,2,3,4)
        let d4_roots: Vec<Vec<i64>> = [1usize, 2, 3, 4]
            .iter()
            .map(|&i| {
                let mut v = vec![0i64; 6];
                v[i] = 1;
                v
            })
            .collect();
        let sub = w.reflection_subgroup(&d4_roots).unwrap();
        assert_eq!(sub.len(), 192);
    }
}
