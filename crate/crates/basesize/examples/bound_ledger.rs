//! The prime-order class bound ledger for M12 on 12 points: per-class
//! contributions, the exact total, and the comparison with the exact
//! non-base probability.

use basesize::{q_exact, qhat_from_inventory};
use group_analysis::{class_inventory, InventoryBudget};
use std::path::Path;

fn main() {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data");
    let text = std::fs::read_to_string(data.join("groups/m12.grp")).unwrap();
    let g = perm_core::load_group_str(&text, 1).unwrap();
    let inv = class_inventory(&g, true, InventoryBudget::default(), 1).unwrap();

    for c in [4usize, 5, 6] {
        let ledger = qhat_from_inventory(&inv, c).unwrap();
        let q = q_exact(&g, c, 1_000_000_000, 1).unwrap();
        println!("c = {c}:");
        print!("{}", ledger.to_report());
        println!("  exact Q(G,{c}) = {q}");
        assert!(q <= ledger.total);
    }
}
