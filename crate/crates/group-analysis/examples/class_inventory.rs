//! Enumerate the conjugacy classes of M12 with certified completeness and
//! print the class table.

use group_analysis::{class_inventory, export_csv, InventoryBudget};
use std::path::Path;

fn main() {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data");
    let text = std::fs::read_to_string(data.join("groups/m12.grp")).unwrap();
    let g = perm_core::load_group_str(&text, 1).unwrap();

    let inv = class_inventory(&g, false, InventoryBudget::default(), 42).unwrap();
    println!("{} has {} conjugacy classes", g.name(), inv.records.len());
    println!("complete: {} ({})", inv.complete, inv.method);
    println!("i_2 = {}", inv.count_elements_of_order(2).unwrap());
    println!("i_3 = {}", inv.count_elements_of_order(3).unwrap());
    print!("{}", export_csv(&inv));
}
