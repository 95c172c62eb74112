//! Recomputes the reference minimizers and rewrites `fixtures/table3.tsv`.

use std::path::Path;

use ratiosect::benchsuite::{fixture, reference_minimizer, render_fixture, OracleRecord, COLUMNS};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/table3.tsv");
    let text = std::fs::read_to_string(&path)?;
    let column_line = format!("# {}", COLUMNS.join("\t"));
    let header: Vec<&str> = text
        .lines()
        .take_while(|l| l.starts_with('#'))
        .filter(|l| *l != column_line)
        .map(|l| l.trim_start_matches('#').trim_start())
        .collect();

    let mut records = fixture().records.clone();
    for r in &mut records {
        let m = reference_minimizer(r.id)?;
        r.oracle = Some(OracleRecord {
            x_star: m.x_star,
            f_star: m.f_star,
            plateau: m.plateau.map(|p| (p.lo(), p.hi())),
        });
        println!("{:>2} x*={:<22} f*={:<22} plateau={:?}", r.id, m.x_star, m.f_star, m.plateau);
    }
    std::fs::write(&path, render_fixture(&header, &records))?;
    Ok(())
}
