//! Randomized evidence on Co3 at degree 276: a 6-base is easy to find, and
//! a million random 5-tuples produce none.

use basesize::{greedy_base, q_montecarlo};
use std::path::Path;

fn main() {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data");
    let text = std::fs::read_to_string(data.join("groups/co3_276.grp")).unwrap();
    let g = perm_core::load_group_str(&text, 1).unwrap();
    println!("{}: order {} on {} points", g.name(), g.order(), g.degree());

    let cert = greedy_base(&g, 1).unwrap();
    println!("greedy base of size {}: {:?}", cert.size(), cert.points);

    let mc6 = q_montecarlo(&g, 6, 20_000, 7).unwrap();
    println!(
        "random 6-tuples: {} of {} non-base, Q(G,6) ~ {:.4} in [{:.4}, {:.4}]",
        mc6.non_base, mc6.trials, mc6.estimate, mc6.interval.0, mc6.interval.1
    );

    let mc5 = q_montecarlo(&g, 5, 1_000_000, 8).unwrap();
    println!(
        "random 5-tuples: {} of {} non-base (a 5-base was found: {})",
        mc5.non_base,
        mc5.trials,
        mc5.base_example.is_some()
    );
    println!("evidence only: Monte Carlo results never feed certificates");
}
