//! Bound ledgers: the prime-order class-sum upper bound on the non-base
//! probability, assembled from computed inventories or imported tables, and
//! the aggregated two-parameter bound.

use group_analysis::{ClassInventory, ImportedClassTable};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use perm_core::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LedgerSource {
    Computed,
    ImportedTable,
}

#[derive(Clone, Debug)]
pub struct LedgerRow {
    pub label: String,
    pub class_size: BigUint,
    pub fpr: BigRational,
    pub contribution: BigRational,
}

/// Per-class contributions class_size * fpr^c and their exact total.
#[derive(Clone, Debug)]
pub struct BoundLedger {
    pub c: usize,
    pub rows: Vec<LedgerRow>,
    pub total: BigRational,
    pub source: LedgerSource,
    /// false when any input row came from an uncertified import
    pub certified: bool,
}

impl BoundLedger {
    fn assemble(
        c: usize,
        rows: Vec<LedgerRow>,
        source: LedgerSource,
        certified: bool,
    ) -> Result<BoundLedger> {
        let mut total = BigRational::zero();
        for row in &rows {
            if row.contribution.is_negative() {
                return Err(Error::Internal("negative ledger contribution".into()));
            }
            total += &row.contribution;
        }
        Ok(BoundLedger {
            c,
            rows,
            total,
            source,
            certified,
        })
    }

    /// CSV export: exact rationals as `p/q` plus decimal approximations.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("label,class_size,fpr,fpr_decimal,contribution,contribution_decimal\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{:.6e},{},{:.6e}\n",
                row.label,
                row.class_size,
                row.fpr,
                rational_to_f64(&row.fpr),
                row.contribution,
                rational_to_f64(&row.contribution),
            ));
        }
        out.push_str(&format!(
            "total,,,,{},{:.6e}\n",
            self.total,
            rational_to_f64(&self.total)
        ));
        out
    }

    /// Structured text report.
    pub fn to_report(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "bound ledger (c = {}, source = {}, {})\n",
            self.c,
            match self.source {
                LedgerSource::Computed => "computed",
                LedgerSource::ImportedTable => "imported-table",
            },
            if self.certified { "certified" } else { "uncertified" }
        ));
        for row in &self.rows {
            out.push_str(&format!(
                "  {:<8} size {:<12} fpr {} contribution {} (~{:.4e})\n",
                row.label,
                row.class_size,
                row.fpr,
                row.contribution,
                rational_to_f64(&row.contribution)
            ));
        }
        out.push_str(&format!(
            "  total {} (~{:.6e}){}\n",
            self.total,
            rational_to_f64(&self.total),
            if self.total < BigRational::one() {
                "  < 1: a base of this size exists"
            } else {
                ""
            }
        ));
        out
    }
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    // good enough for report rendering
    let num = r.numer();
    let den = r.denom();
    let scale = 1u64 << 52;
    let scaled = num * BigInt::from(scale) / den;
    let s: f64 = scaled.to_string().parse().unwrap_or(f64::NAN);
    s / scale as f64
}

/// The ledger over the prime-order classes of a complete inventory, with
/// fixed point ratios taken from the inventory's own action.
pub fn qhat_from_inventory(inv: &ClassInventory, c: usize) -> Result<BoundLedger> {
    if !inv.complete {
        return Err(Error::State(
            "the bound ledger requires a complete inventory".into(),
        ));
    }
    let degree = inv.degree;
    let mut rows = Vec::new();
    let mut seen_of_order: std::collections::HashMap<u64, usize> = std::collections::HashMap::new();
    for rec in inv.prime_order_records() {
        let pos = seen_of_order.entry(rec.element_order).or_insert(0);
        let fpr = BigRational::new(
            BigInt::from(rec.fixed_point_count),
            BigInt::from(degree),
        );
        let contribution =
            BigRational::from(BigInt::from(rec.class_size.clone())) * pow_rational(&fpr, c);
        rows.push(LedgerRow {
            label: rec.label(*pos),
            class_size: rec.class_size.clone(),
            fpr,
            contribution,
        });
        *pos += 1;
    }
    BoundLedger::assemble(c, rows, LedgerSource::Computed, true)
}

/// The ledger from an imported class table; rows must carry enough columns
/// to determine a fixed point ratio. `degree` is needed only when rows give
/// fixed point counts.
pub fn qhat_from_table(
    table: &ImportedClassTable,
    c: usize,
    degree: Option<usize>,
) -> Result<BoundLedger> {
    let mut rows = Vec::new();
    for r in &table.rows {
        let fpr = r.fpr_value(degree).ok_or_else(|| {
            Error::Input(format!(
                "row {} lacks fpr, intersection, and fixed_points columns",
                r.label
            ))
        })?;
        let contribution =
            BigRational::from(BigInt::from(r.class_size.clone())) * pow_rational(&fpr, c);
        rows.push(LedgerRow {
            label: r.label.clone(),
            class_size: r.class_size.clone(),
            fpr,
            contribution,
        });
    }
    BoundLedger::assemble(c, rows, LedgerSource::ImportedTable, table.certified)
}

/// The aggregated bound B * (A/B)^c for classes with total intersection at
/// most A and each class size at least B.
pub fn aggregate_bound(a: &BigUint, b: &BigUint, c: usize) -> Result<BigRational> {
    if b.is_zero() {
        return Err(Error::Input("aggregate bound needs B >= 1".into()));
    }
    if c == 0 {
        return Err(Error::Input("aggregate bound needs c >= 1".into()));
    }
    let ratio = BigRational::new(BigInt::from(a.clone()), BigInt::from(b.clone()));
    Ok(BigRational::from(BigInt::from(b.clone())) * pow_rational(&ratio, c))
}

fn pow_rational(r: &BigRational, c: usize) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..c {
        acc *= r;
    }
    acc
}
