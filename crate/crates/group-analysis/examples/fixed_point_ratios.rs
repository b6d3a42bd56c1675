//! Fixed point ratios of M12 on the cosets of M11, computed two independent
//! ways: counting fixed points in the natural action, and fusing M11
//! classes into M12 classes.

use group_analysis::{class_inventory, fpr_by_fixes, fpr_by_fusion, InventoryBudget};
use std::path::Path;

fn main() {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data");
    let text = std::fs::read_to_string(data.join("groups/m12.grp")).unwrap();
    let g = perm_core::load_group_str(&text, 1).unwrap();
    // the natural action is the action on cosets of the point stabilizer M11
    let h = g.pointwise_stabilizer(&[0], 1).unwrap();

    let g_inv = class_inventory(&g, true, InventoryBudget::default(), 1).unwrap();
    let h_inv = class_inventory(&h, true, InventoryBudget::default(), 2).unwrap();
    println!("class  order  fpr_by_fixes  fpr_by_fusion");
    for rec in &g_inv.records {
        let fixes = fpr_by_fixes(&rec.representative);
        let fusion = fpr_by_fusion(&g, &h_inv, &rec.representative, 3).unwrap();
        assert_eq!(fixes, fusion);
        println!(
            "size {:>5}  {:>3}  {:>10}  {:>10}",
            rec.class_size, rec.element_order, fixes, fusion
        );
    }
    println!("both pipelines agree on every prime-order class");
}
