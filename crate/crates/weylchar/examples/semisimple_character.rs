//! The E6 semisimple character for the class with root subset of type A5A1
//! against the D4-Levi parabolic, evaluated from the alternating class sum
//! over the 25 conjugacy classes of W(E6).

use num_bigint::BigInt;
use weylchar::{chi_semisimple, JNode, ParabolicCharQuery};

fn main() {
    let query = ParabolicCharQuery {
        type_label: "E6".into(),
        j_nodes: vec![
            JNode::Highest,
            JNode::Simple(0),
            JNode::Simple(2),
            JNode::Simple(3),
            JNode::Simple(4),
            JNode::Simple(5),
        ],
        w_word: vec![],
        parabolic_subset: vec![1, 2, 3, 4],
        centralizer_pprime_poly: None,
        q: Some(BigInt::from(5)),
    };
    let chi = chi_semisimple(&query).unwrap();
    println!("chi = {}", chi.polynomial);
    println!("{} Weyl classes meet the coset", chi.classes_meeting_coset);
    println!("value at q = 5: {}", chi.value_at_q.unwrap());
}
