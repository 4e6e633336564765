//! Confluence of the ten Hom-deformations of associativity: `hom_deformations [max_degree]`.
use operad_groebner::cli::{hom_table, HOM_TABLE_MAX_DEGREE};

fn main() -> operad_groebner::Result<()> {
    let d = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(HOM_TABLE_MAX_DEGREE);
    let (sig, rows) = hom_table(d)?;
    println!("max degree {d}");
    for r in rows {
        let cert = r
            .certificate
            .map(|t| t.display(&sig).to_string())
            .unwrap_or_default();
        println!(
            "{:<6} {:<5} {:>2} overlaps  {cert}",
            r.name, r.confluent, r.overlaps
        );
    }
    Ok(())
}
