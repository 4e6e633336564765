//! Buchberger completion: a non-confluent Hom-deformation acquires new basis elements.
use operad_groebner::groebner::buchberger;
use operad_groebner::presentations::builtin;

fn main() -> operad_groebner::Result<()> {
    for name in ["lie", "hom_ass_I2"] {
        let p = builtin(name, None)?;
        let r = buchberger(&p, &p.order_spec, 5)?;
        println!(
            "{name}: {} relation(s) -> {} basis element(s) up to degree 5",
            p.relations.len(),
            r.basis.len()
        );
        for g in &r.basis {
            println!(
                "  [weight {}] {}",
                g.weight(),
                g.display_sorted(&r.signature, &r.spec)
            );
        }
        if let Some((o, nf)) = &r.failure_certificate {
            println!(
                "  first new element came from {}: {}",
                o.monomial.display(&r.signature),
                nf.display(&r.signature)
            );
        }
    }
    Ok(())
}
