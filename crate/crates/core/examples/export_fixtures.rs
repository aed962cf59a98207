//! Writes the fixture documents, by default into `crates/core/fixtures`.
//!
//! `cargo run --example export_fixtures [-- <dir>]`

use std::path::PathBuf;

use hodge_cousin::doc::{to_text, CousinDoc, PeriodDoc, StructureDoc};
use hodge_cousin::fixtures::*;
use hodge_cousin::hodge::direct_sum;
use hodge_cousin::metric::hermitian_extension;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures"));
    std::fs::create_dir_all(&dir)?;
    let ext = hermitian_extension(&fix_hc(), &q4())?;
    let h4_pair = direct_sum(&fix_h4(), &fix_h4())?;
    let docs = [
        ("fix_e.json", to_text(&StructureDoc::new(&fix_e(), Some(&q_e())))),
        ("fix_e_sub3.json", to_text(&StructureDoc::new(&fix_e_sub3(), None))),
        ("fix_h4.json", to_text(&StructureDoc::new(&fix_h4(), Some(&q4())))),
        ("fix_hc.json", to_text(&StructureDoc::new(&fix_hc(), Some(&q4())))),
        ("fix_w2.json", to_text(&StructureDoc::new(&fix_w2(), None))),
        ("fix_h8.json", to_text(&StructureDoc::new(&fix_h8(), Some(&q8())))),
        ("fix_h4_pair.json", to_text(&StructureDoc::new(&h4_pair, Some(&q8())))),
        ("fix_p3.json", to_text(&PeriodDoc::new(&fix_p3()))),
        ("fix_hc_cousin.json", to_text(&CousinDoc::new(&ext.periods, &ext.h))),
    ];
    for (name, text) in docs {
        let path = dir.join(name);
        std::fs::write(&path, text)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
