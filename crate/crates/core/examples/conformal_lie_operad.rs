//! Truncated shuffle presentations of the conformal Lie operad and their ambiguities.
use operad_groebner::cli::clie_summary;
use operad_groebner::presentations::ClieParams;

fn main() -> operad_groebner::Result<()> {
    for k in 0..=2 {
        let s = clie_summary(
            ClieParams {
                k,
                nmax: 2,
                jmax: 2,
            },
            4,
        )?;
        let p = &s.presentation;
        println!(
            "k={k}: {} relations, {} ambiguities, comb shape {}, certified {}",
            p.relations.len(),
            s.ambiguities,
            s.comb_shape,
            s.certified
        );
        println!("  first relation: {}", p.relation_text(0));
    }
    Ok(())
}
