//! Exact minimal base sizes with certificates: the Mathieu groups M22, M23
//! and M24 in their natural actions.

use basesize::{minimal_base_size_exact, ExactBaseResult, SearchBudget};
use std::path::Path;

fn main() {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data");
    for rel in ["groups/m22.grp", "groups/m23.grp", "groups/m24.grp"] {
        let text = std::fs::read_to_string(data.join(rel)).unwrap();
        let g = perm_core::load_group_str(&text, 1).unwrap();
        match minimal_base_size_exact(&g, SearchBudget::default(), 1).unwrap() {
            ExactBaseResult::Exact { base_size, witness, lower } => {
                println!("{}: b = {base_size}", g.name());
                println!("  witness {:?}", witness.points);
                println!(
                    "  trace {:?}",
                    witness
                        .stabilizer_order_trace
                        .iter()
                        .map(|o| o.to_string())
                        .collect::<Vec<_>>()
                );
                println!(
                    "  lower bound: {} ({} canonical prefixes examined)",
                    lower.verdict, lower.tuples_examined
                );
            }
            ExactBaseResult::Interval { lower_bound, upper_bound, .. } => {
                println!("{}: budget exhausted, b in [{lower_bound}, {upper_bound}]", g.name());
            }
        }
    }
}
