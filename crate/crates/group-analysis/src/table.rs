//! CSV class tables: export of computed inventories and import of
//! literature data for groups too large to enumerate. Imported rows are
//! uncertified and reports must say so.

use crate::classes::ClassInventory;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use perm_core::{Error, Result};

/// A class-table row from an external source. `class_size` is always
/// present; the remaining columns depend on what the source provides.
#[derive(Clone, Debug)]
pub struct ImportedClassRow {
    pub label: String,
    pub element_order: Option<u64>,
    pub class_size: BigUint,
    pub centralizer_order: Option<BigUint>,
    pub fixed_points: Option<usize>,
    /// |x^G meet H| when the source tabulates intersections
    pub intersection: Option<BigUint>,
    /// fixed point ratio when the source tabulates it directly
    pub fpr: Option<BigRational>,
}

impl ImportedClassRow {
    /// The fixed point ratio this row determines, if any: either the stored
    /// ratio, intersection/class_size, or fixed_points/degree.
    pub fn fpr_value(&self, degree: Option<usize>) -> Option<BigRational> {
        if let Some(f) = &self.fpr {
            return Some(f.clone());
        }
        if let Some(i) = &self.intersection {
            return Some(BigRational::new(
                BigInt::from(i.clone()),
                BigInt::from(self.class_size.clone()),
            ));
        }
        match (self.fixed_points, degree) {
            (Some(f), Some(d)) => Some(BigRational::new(BigInt::from(f), BigInt::from(d))),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ImportedClassTable {
    pub rows: Vec<ImportedClassRow>,
    /// always false for imports; exported tables from certified inventories
    /// set it
    pub certified: bool,
}

/// Serializes an inventory in the class-table format:
/// `label, element_order, class_size, centralizer_order, fixed_points`.
pub fn export_csv(inv: &ClassInventory) -> String {
    let mut out = String::from("label,element_order,class_size,centralizer_order,fixed_points\n");
    let mut seen_of_order: std::collections::HashMap<u64, usize> = std::collections::HashMap::new();
    for rec in &inv.records {
        let pos = seen_of_order.entry(rec.element_order).or_insert(0);
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            rec.label(*pos),
            rec.element_order,
            rec.class_size,
            rec.centralizer_order,
            rec.fixed_point_count
        ));
        *pos += 1;
    }
    out
}

/// Parses a class-table CSV. Recognized columns: `label`, `element_order`,
/// `class_size` (required), `centralizer_order`, `fixed_points`,
/// `intersection`, `fpr_num`, `fpr_den`.
pub fn parse_csv(text: &str) -> Result<ImportedClassTable> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::Input("empty class table".into()))?;
    let cols: Vec<&str> = header.split(',').map(str::trim).collect();
    let col = |name: &str| cols.iter().position(|c| *c == name);
    let size_col = col("class_size").ok_or_else(|| {
        Error::Input("class table is missing the required class_size column".into())
    })?;
    let label_col = col("label");
    let order_col = col("element_order");
    let cent_col = col("centralizer_order");
    let fix_col = col("fixed_points");
    let int_col = col("intersection");
    let fprn_col = col("fpr_num");
    let fprd_col = col("fpr_den");

    let mut rows = Vec::new();
    for (idx, line) in lines {
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        let get = |c: Option<usize>| c.and_then(|i| fields.get(i)).map(|s| s.to_string());
        let parse_big = |s: &str| -> Result<BigUint> {
            s.parse().map_err(|_| Error::Parse {
                line: idx + 1,
                msg: format!("bad integer `{s}`"),
            })
        };
        let class_size = parse_big(fields.get(size_col).ok_or(Error::Parse {
            line: idx + 1,
            msg: "missing class_size field".into(),
        })?)?;
        let fpr = match (get(fprn_col), get(fprd_col)) {
            (Some(n), Some(d)) => Some(BigRational::new(
                BigInt::from(parse_big(&n)?),
                BigInt::from(parse_big(&d)?),
            )),
            _ => None,
        };
        rows.push(ImportedClassRow {
            label: get(label_col).unwrap_or_else(|| format!("row{}", idx + 1)),
            element_order: match get(order_col) {
                Some(s) => Some(s.parse().map_err(|_| Error::Parse {
                    line: idx + 1,
                    msg: format!("bad element order `{s}`"),
                })?),
                None => None,
            },
            centralizer_order: match get(cent_col) {
                Some(s) => Some(parse_big(&s)?),
                None => None,
            },
            fixed_points: match get(fix_col) {
                Some(s) => Some(s.parse().map_err(|_| Error::Parse {
                    line: idx + 1,
                    msg: format!("bad fixed point count `{s}`"),
                })?),
                None => None,
            },
            intersection: match get(int_col) {
                Some(s) => Some(parse_big(&s)?),
                None => None,
            },
            class_size,
            fpr,
        });
    }
    Ok(ImportedClassTable {
        rows,
        certified: false,
    })
}

/// Number of elements of the given order according to an imported table:
/// the sum of class sizes over rows tabulating that element order. Callers
/// must surface the table's uncertified status.
pub fn count_order_from_table(
    table: &ImportedClassTable,
    r: u64,
) -> Result<num_bigint::BigUint> {
    let mut any = false;
    let mut total = num_bigint::BigUint::from(0u32);
    for row in &table.rows {
        match row.element_order {
            Some(o) if o == r => {
                any = true;
                total += &row.class_size;
            }
            Some(_) => any = true,
            None => {
                return Err(Error::Input(
                    "table lacks the element_order column needed for counting".into(),
                ))
            }
        }
    }
    if !any {
        return Err(Error::Input("table has no rows".into()));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::{class_inventory, InventoryBudget};
    use perm_core::load_group_str;

    #[test]
    fn export_then_import_round_trips_sizes() {
        let g = load_group_str("degree: 4\nname: S4\n1 0 2 3\n1 2 3 0\n", 0).unwrap();
        let inv = class_inventory(&g, false, InventoryBudget::default(), 0).unwrap();
        let csv = export_csv(&inv);
        let table = parse_csv(&csv).unwrap();
        assert!(!table.certified);
        assert_eq!(table.rows.len(), inv.records.len());
        for (row, rec) in table.rows.iter().zip(&inv.records) {
            assert_eq!(row.class_size, rec.class_size);
            assert_eq!(row.element_order, Some(rec.element_order));
            assert_eq!(row.fixed_points, Some(rec.fixed_point_count));
        }
    }

    #[test]
    fn intersection_rows_give_fpr() {
        let table = parse_csv("label,class_size,intersection\nx,4194304,131072\n").unwrap();
        let f = table.rows[0].fpr_value(None).unwrap();
        assert_eq!(f, BigRational::new(1.into(), 32.into()));
    }

    #[test]
    fn missing_class_size_is_an_error() {
        assert!(parse_csv("label,element_order\nx,2\n").is_err());
    }

    #[test]
    fn order_counts_from_an_imported_table() {
        let t = parse_csv(
            "label,element_order,class_size\n2a,2,10\n2b,2,5\n3a,3,20\n",
        )
        .unwrap();
        assert_eq!(
            count_order_from_table(&t, 2).unwrap(),
            num_bigint::BigUint::from(15u32)
        );
        assert_eq!(
            count_order_from_table(&t, 5).unwrap(),
            num_bigint::BigUint::from(0u32)
        );
    }
}
