//! Five conjugates of S4 wr S2 in S8 with trivial intersection, and the
//! impossibility of doing it with four.

use basesize::{conjugate_intersection_witness, WitnessOutcome};
use std::path::Path;

fn main() {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data");
    let read = |rel: &str| std::fs::read_to_string(data.join(rel)).unwrap();
    let g = perm_core::load_group_str(&read("groups/s8.grp"), 1).unwrap();
    let h = perm_core::load_group_str(&read("groups/s4wrs2_in_s8.grp"), 1).unwrap();

    match conjugate_intersection_witness(&g, &h, 4, 5_000, 1_000_000, 1).unwrap() {
        WitnessOutcome::NotFound { trials } => {
            println!("k = 4: no witness in {trials} random tuples (none exists)")
        }
        WitnessOutcome::Found(_) => unreachable!("at least 5 conjugates are needed"),
    }
    match conjugate_intersection_witness(&g, &h, 5, 100_000, 1_000_000, 1).unwrap() {
        WitnessOutcome::Found(w) => {
            println!(
                "k = 5: intersection order {} with conjugators:",
                w.intersection_order
            );
            for x in &w.conjugators {
                println!("  {x}");
            }
        }
        WitnessOutcome::NotFound { .. } => unreachable!(),
    }
}
