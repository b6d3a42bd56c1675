//! Parabolic index polynomials: the Borel of A1 and A2, and the D4-Levi
//! parabolic of E6 with its factored form.

use num_bigint::BigInt;
use weylchar::{parabolic_index_poly, IntPolynomial, RootSystemData};

fn main() {
    let a1 = RootSystemData::build("A1").unwrap();
    println!("A1 Borel index: {}", parabolic_index_poly(&a1, &[]).unwrap());

    let a2 = RootSystemData::build("A2").unwrap();
    println!("A2 Borel index: {}", parabolic_index_poly(&a2, &[]).unwrap());

    let e6 = RootSystemData::build("E6").unwrap();
    // Levi of type D4: nodes a2, a3, a4, a5
    let idx = parabolic_index_poly(&e6, &[1, 2, 3, 4]).unwrap();
    println!("E6 / P(1,6) index: {idx}");
    let factored = IntPolynomial::q_pow_minus_one(9)
        .mul(&IntPolynomial::from_i64(&[1, 0, 0, 0, 1, 0, 0, 0, 1]))
        .mul(&IntPolynomial::q_pow_minus_one(5))
        .mul(&IntPolynomial::from_i64(&[1, 0, 0, 0, 1]))
        .div_exact(&IntPolynomial::from_i64(&[1, -2, 1]))
        .unwrap();
    assert_eq!(idx, factored);
    println!("matches (q^9-1)(q^8+q^4+1)(q^5-1)(q^4+1)/(q-1)^2");
    println!("value at q = 2: {}", idx.eval(&BigInt::from(2)));
}
