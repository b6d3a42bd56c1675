//! Construct the degree-35 action of S8 on the cosets of S4 wr S2.

use perm_core::{coset_action, load_group_str};
use std::path::Path;

fn main() {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data");
    let read = |rel: &str| std::fs::read_to_string(data.join(rel)).unwrap();
    let g = load_group_str(&read("groups/s8.grp"), 1).unwrap();
    let h = load_group_str(&read("groups/s4wrs2_in_s8.grp"), 1).unwrap();

    let act = coset_action(&g, &h, 1_000_000, 1).unwrap();
    println!(
        "index {} action of {} on cosets of {} (faithful: {})",
        act.index,
        g.name(),
        h.name(),
        act.faithful
    );
    let q = &act.quotient_group;
    println!("quotient order {} on {} points", q.order(), q.degree());
    let stab0 = q.pointwise_stabilizer(&[0], 1).unwrap();
    println!(
        "stabilizer of point 0 has order {} (= |H| {})",
        stab0.order(),
        h.order()
    );
    let suborbits: Vec<usize> = stab0.orbits().iter().map(|o| o.len()).collect();
    println!("suborbit sizes: {suborbits:?}");
}
