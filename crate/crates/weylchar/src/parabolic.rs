//! Poincare polynomials and parabolic index polynomials.
//!
//! The length generating function of a finite reflection group factors as
//! the product of q-integers over its reflection degrees; quotients of
//! these give coset counts |G : P| for the split group. The explicit
//! length-sum route is kept alongside as an independent oracle for
//! enumerable groups.

use crate::degrees::{component_degrees, subsystem_closure};
use crate::poly::IntPolynomial;
use crate::root_system::RootSystemData;
use crate::weyl::WeylGroupData;
use perm_core::{Error, Result};

/// Poincare polynomial of the full Weyl group, from the component degree
/// tables (products multiply).
pub fn poincare_poly(rs: &RootSystemData) -> Result<IntPolynomial> {
    let comps = component_degrees(rs, &rs.roots)?;
    let mut acc = IntPolynomial::one();
    for (_, degs) in comps {
        for d in degs {
            acc = acc.mul(&IntPolynomial::q_integer(d));
        }
    }
    Ok(acc)
}

/// Poincare polynomial of the reflection subgroup generated by a subset of
/// the simple roots (a parabolic), from its component degree tables.
pub fn poincare_poly_parabolic(rs: &RootSystemData, levi_subset: &[usize]) -> Result<IntPolynomial> {
    for &i in levi_subset {
        if i >= rs.rank {
            return Err(Error::Input(format!("node index {i} out of range")));
        }
    }
    if levi_subset.is_empty() {
        return Ok(IntPolynomial::one());
    }
    let seeds: Vec<Vec<i64>> = levi_subset
        .iter()
        .map(|&i| {
            let mut v = vec![0i64; rs.rank];
            v[i] = 1;
            v
        })
        .collect();
    let sub = subsystem_closure(rs, &seeds);
    let comps = component_degrees(rs, &sub)?;
    let mut acc = IntPolynomial::one();
    for (_, degs) in comps {
        for d in degs {
            acc = acc.mul(&IntPolynomial::q_integer(d));
        }
    }
    Ok(acc)
}

/// Index polynomial of the parabolic subgroup with the given Levi subset:
/// Poincare(W) / Poincare(W_levi), an exact division. Equals |G : P| for
/// the split group of this type.
pub fn parabolic_index_poly(rs: &RootSystemData, levi_subset: &[usize]) -> Result<IntPolynomial> {
    let w = poincare_poly(rs)?;
    let wj = poincare_poly_parabolic(rs, levi_subset)?;
    let index = w.div_exact(&wj).map_err(|_| {
        Error::Internal("parabolic Poincare polynomial does not divide".into())
    })?;
    if index.constant_term() != num_bigint::BigInt::from(1) {
        return Err(Error::Internal("index polynomial must have constant term 1".into()));
    }
    Ok(index)
}

/// Oracle route: the length generating function by explicit enumeration.
pub fn poincare_poly_by_lengths(w: &WeylGroupData) -> IntPolynomial {
    let mut counts: Vec<i64> = vec![0; w.rs.positive_count + 1];
    for e in 0..w.elements.len() {
        counts[w.length(e)] += 1;
    }
    IntPolynomial::from_i64(&counts)
}
