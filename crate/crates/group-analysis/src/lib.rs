//! Conjugacy class enumeration, element-order counts, class fusion and
//! fixed point ratios for finite permutation groups.
//!
//! Class discovery samples random elements, closes under power maps, and
//! certifies completeness by the exact identity "sum of class sizes equals
//! the group order". All ratios are exact rationals; floating point never
//! enters.

pub mod backtrack;
pub mod classes;
pub mod fpr;
pub mod table;

pub use backtrack::{centralizer_generators, conjugating_element};
pub use classes::{
    all_elements, class_inventory, class_size, is_prime, ClassInventory, ConjClassRecord,
    InventoryBudget,
};
pub use fpr::{fpr_by_fixes, fpr_by_fusion, fuse_classes, FusionMap};
pub use table::{count_order_from_table, export_csv, parse_csv, ImportedClassRow, ImportedClassTable};
