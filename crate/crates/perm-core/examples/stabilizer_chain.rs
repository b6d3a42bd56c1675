//! Build a stabilizer chain for M24 from its shipped generator file and
//! query it: order, membership, pointwise stabilizers, random elements.

use perm_core::{load_group_str, RngState};
use std::path::Path;

fn main() {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data");
    let text = std::fs::read_to_string(data.join("groups/m24.grp")).unwrap();
    let g = load_group_str(&text, 1).unwrap();
    println!("{}: degree {}, order {}", g.name(), g.degree(), g.order());
    println!("chain base: {:?}", g.chain().base());

    // the stabilizer of five points in the 5-transitive action
    let stab = g.pointwise_stabilizer(&[0, 1, 2, 3, 4], 1).unwrap();
    println!("stabilizer of (0,1,2,3,4) has order {}", stab.order());

    // uniform random elements, all members
    let mut rng = RngState::from_seed(7);
    for _ in 0..3 {
        let x = g.chain().random_element(&mut rng);
        assert!(g.contains(&x).unwrap());
        println!("random element of order {:>2}: {x}", x.order());
    }
}
