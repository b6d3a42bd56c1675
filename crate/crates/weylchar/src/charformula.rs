//! The semisimple permutation character: the alternating sum over Weyl
//! classes pairing a parabolic with a semisimple class datum (J, [w]).

use crate::degrees::{component_degrees, rank_of, subsystem_closure};
use crate::parabolic::parabolic_index_poly;
use crate::poly::{IntPolynomial, RatPoly};
use crate::root_system::RootSystemData;
use crate::weyl::WeylGroupData;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use perm_core::{Error, Result};

/// A named root of Pi union {alpha0}: `a0` is the highest root, `a1`..`an`
/// the simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JNode {
    Highest,
    Simple(usize),
}

impl JNode {
    pub fn parse(tok: &str) -> Result<JNode> {
        let t = tok.trim().to_ascii_lowercase();
        let rest = t
            .strip_prefix('a')
            .ok_or_else(|| Error::Input(format!("bad node name `{tok}`, expected a0..an")))?;
        let k: usize = rest
            .parse()
            .map_err(|_| Error::Input(format!("bad node name `{tok}`")))?;
        Ok(if k == 0 {
            JNode::Highest
        } else {
            JNode::Simple(k - 1)
        })
    }

    fn to_root(&self, rs: &RootSystemData) -> Result<Vec<i64>> {
        match self {
            JNode::Highest => {
                if !rs.is_irreducible() {
                    return Err(Error::Input(
                        "a0 names the highest root, which needs an irreducible type".into(),
                    ));
                }
                Ok(rs.highest_root.clone())
            }
            JNode::Simple(i) => {
                if *i >= rs.rank {
                    return Err(Error::Input(format!("node a{} out of range", i + 1)));
                }
                let mut v = vec![0i64; rs.rank];
                v[*i] = 1;
                Ok(v)
            }
        }
    }
}

/// A semisimple character query: the class datum (J, [w]), the parabolic
/// subgroup, the centralizer order polynomial (computed when w = 1), and an
/// optional numeric q.
pub struct ParabolicCharQuery {
    pub type_label: String,
    /// subset of Pi union {alpha0}; must be proper
    pub j_nodes: Vec<JNode>,
    /// word in simple reflections (empty = identity)
    pub w_word: Vec<usize>,
    /// subset of Pi generating the parabolic Weyl group
    pub parabolic_subset: Vec<usize>,
    /// required when w is not the identity
    pub centralizer_pprime_poly: Option<IntPolynomial>,
    pub q: Option<BigInt>,
}

/// The p'-part of the split centralizer order for w = 1: the product of
/// (q^d - 1) over the reflection degrees of the subsystem spanned by J,
/// times (q-1)^(rank - rank J).
pub fn split_centralizer_order_pprime(
    rs: &RootSystemData,
    j_roots: &[Vec<i64>],
) -> Result<IntPolynomial> {
    if j_roots.is_empty() {
        let mut acc = IntPolynomial::one();
        for _ in 0..rs.rank {
            acc = acc.mul(&IntPolynomial::q_pow_minus_one(1));
        }
        return Ok(acc);
    }
    let sub = subsystem_closure(rs, j_roots);
    let j_rank = rank_of(&sub);
    let comps = component_degrees(rs, &sub)?;
    let mut acc = IntPolynomial::one();
    for (_, degs) in comps {
        for d in degs {
            acc = acc.mul(&IntPolynomial::q_pow_minus_one(d));
        }
    }
    for _ in 0..rs.rank - j_rank {
        acc = acc.mul(&IntPolynomial::q_pow_minus_one(1));
    }
    Ok(acc)
}

/// The value of the semisimple character evaluation.
pub struct ChiResult {
    pub polynomial: IntPolynomial,
    pub value_at_q: Option<BigInt>,
    /// number of Weyl classes meeting the coset, for reporting
    pub classes_meeting_coset: usize,
}

/// Evaluates the alternating class sum for the pair (J, [w]) against the
/// given parabolic. The exact rational-function sum must simplify to a
/// polynomial with integer coefficients; anything else is an input
/// inconsistency.
pub fn chi_semisimple(query: &ParabolicCharQuery) -> Result<ChiResult> {
    let rs = RootSystemData::build(&query.type_label)?;
    if query.j_nodes.len() > rs.rank {
        return Err(Error::Input(
            "J must be a proper subset of the simple roots plus the highest root".into(),
        ));
    }
    {
        let mut seen = Vec::new();
        for n in &query.j_nodes {
            if seen.contains(n) {
                return Err(Error::Input("repeated node in J".into()));
            }
            seen.push(n.clone());
        }
    }
    let w = WeylGroupData::build(rs)?;
    let rs = &w.rs;

    let j_roots: Vec<Vec<i64>> = query
        .j_nodes
        .iter()
        .map(|n| n.to_root(rs))
        .collect::<Result<_>>()?;

    // centralizer p'-order polynomial
    let w_elt = w.element_from_word(&query.w_word)?;
    let cent_poly = match (&query.centralizer_pprime_poly, w_elt) {
        (Some(p), _) => p.clone(),
        (None, 0) => split_centralizer_order_pprime(rs, &j_roots)?,
        (None, _) => {
            return Err(Error::Input(
                "a centralizer order polynomial must be supplied when w is not the identity"
                    .into(),
            ))
        }
    };

    // W_J and the coset W_J w
    let wj = w.reflection_subgroup(&j_roots)?;
    let wj_order = wj.len() as u64;
    let coset: Vec<usize> = wj
        .iter()
        .map(|&e| {
            let prod = compose_indices(&w, e, w_elt);
            Ok(prod)
        })
        .collect::<Result<_>>()?;

    // W_Hbar
    let parab_roots: Vec<Vec<i64>> = query
        .parabolic_subset
        .iter()
        .map(|&i| JNode::Simple(i).to_root(rs))
        .collect::<Result<_>>()?;
    let wh = w.reflection_subgroup(&parab_roots)?;
    let wh_order = wh.len() as u64;

    if wj_order.checked_mul(wh_order).map(|p| p > 1_000_000_000_000).unwrap_or(true) {
        return Err(Error::Resource("coset enumeration over budget".into()));
    }

    // Sign normalization: each torus term carries the product of the split
    // ranks of the centralizer and the torus, (-1)^(r_w + r_i). For even
    // ambient rank and w = 1 this is the bare (-1)^(r_i) of the even-rank
    // formula; the A1 Borel case is the witness that the general form
    // needs the centralizer factor.
    let w_split_rank = w.relative_rank(w_elt);

    // count both enumerations into the classes of W
    let k = w.classes.len();
    let mut wh_in_class = vec![0u64; k];
    for &e in &wh {
        wh_in_class[w.class_of[e] as usize] += 1;
    }
    let mut coset_in_class = vec![0u64; k];
    for &e in &coset {
        coset_in_class[w.class_of[e] as usize] += 1;
    }
    debug_assert_eq!(wh_in_class.iter().sum::<u64>(), wh_order);
    debug_assert_eq!(coset_in_class.iter().sum::<u64>(), wj_order);

    // group terms by torus polynomial and sum scalars
    let mut by_poly: Vec<(IntPolynomial, BigRational)> = Vec::new();
    let mut classes_meeting_coset = 0;
    for (i, cls) in w.classes.iter().enumerate() {
        if coset_in_class[i] == 0 || wh_in_class[i] == 0 {
            if coset_in_class[i] > 0 {
                classes_meeting_coset += 1;
            }
            continue;
        }
        classes_meeting_coset += 1;
        let centralizer_w = BigRational::from(BigInt::from(w.order / cls.size));
        let h_frac = BigRational::new(BigInt::from(wh_in_class[i]), BigInt::from(wh_order));
        let j_frac = BigRational::new(BigInt::from(coset_in_class[i]), BigInt::from(wj_order));
        let sign = if (w_split_rank + cls.relative_rank) % 2 == 0 {
            BigRational::one()
        } else {
            -BigRational::one()
        };
        let scalar = centralizer_w * h_frac * j_frac * sign;
        match by_poly.iter_mut().find(|(p, _)| *p == cls.order_poly) {
            Some((_, s)) => *s += scalar,
            None => by_poly.push((cls.order_poly.clone(), scalar)),
        }
    }

    // sum of scalar_i / T_i over a common denominator, times the
    // centralizer polynomial
    let mut numerator = RatPoly::zero();
    let mut denominator = RatPoly::from_int(&IntPolynomial::one());
    for (i, (_, scalar)) in by_poly.iter().enumerate() {
        let mut term = RatPoly::from_int(&IntPolynomial::one()).scale(scalar);
        for (j, (p, _)) in by_poly.iter().enumerate() {
            if i != j {
                term = term.mul(&RatPoly::from_int(p));
            }
        }
        numerator = numerator.add(&term);
    }
    for (p, _) in &by_poly {
        denominator = denominator.mul(&RatPoly::from_int(p));
    }
    let full_num = numerator.mul(&RatPoly::from_int(&cent_poly));
    let (quot, rem) = full_num.div_rem(&denominator)?;
    if !rem.is_zero() {
        return Err(Error::Input(
            "the class sum did not simplify to a polynomial; the query data are inconsistent"
                .into(),
        ));
    }
    let polynomial = quot.into_int().map_err(|_| {
        Error::Input("the class sum has non-integer coefficients; the query data are inconsistent".into())
    })?;
    let value_at_q = query.q.as_ref().map(|q| polynomial.eval(q));
    Ok(ChiResult {
        polynomial,
        value_at_q,
        classes_meeting_coset,
    })
}

fn compose_indices(w: &WeylGroupData, a: usize, b: usize) -> usize {
    let pa = &w.elements[a];
    let pb = &w.elements[b];
    let prod: Vec<u8> = pa.iter().map(|&x| pb[x as usize]).collect();
    w.index_of[&prod]
}

/// Central-class sanity identity: when J spans the whole system and w = 1,
/// the character value is the parabolic index.
pub fn chi_central_equals_index(
    type_label: &str,
    parabolic_subset: &[usize],
) -> Result<(IntPolynomial, IntPolynomial)> {
    let rs = RootSystemData::build(type_label)?;
    let query = ParabolicCharQuery {
        type_label: type_label.into(),
        j_nodes: (0..rs.rank).map(JNode::Simple).collect(),
        w_word: Vec::new(),
        parabolic_subset: parabolic_subset.to_vec(),
        centralizer_pprime_poly: None,
        q: None,
    };
    let chi = chi_semisimple(&query)?;
    let idx = parabolic_index_poly(&rs, parabolic_subset)?;
    Ok((chi.polynomial, idx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn central_class_gives_the_index_polynomial() {
        for (label, parab) in [
            ("A1", vec![]),
            ("A2", vec![]),
            ("A2", vec![0usize]),
            ("A2", vec![1]),
            ("A3", vec![0, 2]),
            ("D4", vec![1, 2, 3]),
        ] {
            let (chi, idx) = chi_central_equals_index(label, &parab).unwrap();
            assert_eq!(chi, idx, "{label} {parab:?}");
        }
    }

    #[test]
    fn a2_regular_split_class_counts_fixed_flags() {
        // J empty, w = 1: a regular split semisimple element; on complete
        // flags it fixes |W| = 6 of them at every q, on points 3
        let borel = ParabolicCharQuery {
            type_label: "A2".into(),
            j_nodes: vec![],
            w_word: vec![],
            parabolic_subset: vec![],
            centralizer_pprime_poly: None,
            q: None,
        };
        let chi = chi_semisimple(&borel).unwrap();
        assert_eq!(chi.polynomial, IntPolynomial::from_i64(&[6]));
        let points = ParabolicCharQuery {
            parabolic_subset: vec![1],
            ..borel
        };
        let chi = chi_semisimple(&points).unwrap();
        assert_eq!(chi.polynomial, IntPolynomial::from_i64(&[3]));
    }

    #[test]
    fn a2_subregular_class() {
        // J = {alpha1}: eigenvalues (a,a,b); fixes q+2 points
        let q = ParabolicCharQuery {
            type_label: "A2".into(),
            j_nodes: vec![JNode::Simple(0)],
            w_word: vec![],
            parabolic_subset: vec![1],
            centralizer_pprime_poly: None,
            q: Some(BigInt::from(3)),
        };
        let chi = chi_semisimple(&q).unwrap();
        assert_eq!(chi.polynomial, IntPolynomial::from_i64(&[2, 1]));
        assert_eq!(chi.value_at_q, Some(BigInt::from(5)));
    }

    #[test]
    fn w_not_identity_needs_a_centralizer_polynomial() {
        let q = ParabolicCharQuery {
            type_label: "A2".into(),
            j_nodes: vec![],
            w_word: vec![0],
            parabolic_subset: vec![],
            centralizer_pprime_poly: None,
            q: None,
        };
        assert!(chi_semisimple(&q).is_err());
    }

    #[test]
    fn nonnegative_at_prime_powers() {
        // permutation character values are nonnegative integers
        let q = ParabolicCharQuery {
            type_label: "A2".into(),
            j_nodes: vec![JNode::Simple(1)],
            w_word: vec![],
            parabolic_subset: vec![0],
            centralizer_pprime_poly: None,
            q: None,
        };
        let chi = chi_semisimple(&q).unwrap();
        for qv in [2u32, 3, 4, 5, 7, 8, 9] {
            assert!(chi.polynomial.eval(&BigInt::from(qv)) >= BigInt::zero());
        }
    }
}
