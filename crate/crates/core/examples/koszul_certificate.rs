//! The Priddy criterion on a few presentations.
use operad_groebner::groebner::{koszul_report, overlap_bound};
use operad_groebner::presentations::builtin;

fn main() -> operad_groebner::Result<()> {
    for name in ["ass", "lie", "hom_ass_II0", "hom_ass_I1", "novikov"] {
        let p = builtin(name, None)?;
        // every overlap of the relations fits under this bound; smaller bounds stay inconclusive
        let d = overlap_bound(&p.relations).max(4);
        let r = koszul_report(&p, &p.order_spec, d)?;
        println!(
            "{name:<12} degree {d}: {:<22} basis degree {} ({} elements)",
            r.verdict.to_string(),
            r.basis_degree,
            r.gb.basis.len()
        );
    }
    Ok(())
}
