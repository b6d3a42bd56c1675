//! Run the shipped verification manifests end to end and print the reports.

use atlas_cli::manifest::run_manifest;
use std::path::Path;

fn main() {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data");
    for manifest in ["manifests/theorem1_desk.cases", "manifests/counting.cases"] {
        let doc = run_manifest(&data.join(manifest), 20260808, 1_000_000).unwrap();
        print!("{}", doc.to_text("example-run"));
        assert!(!doc.any_certified_failure());
    }
}
