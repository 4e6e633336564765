//! Reducing monomials to normal form modulo associativity.
use operad_groebner::poly::{normal_form, TreePolynomial};
use operad_groebner::presentations::builtin;
use operad_groebner::tree::enumerate_monomials;

fn main() -> operad_groebner::Result<()> {
    let p = builtin("ass", None)?;
    for t in enumerate_monomials(&p.signature, p.mode, 4, 3) {
        let nf = normal_form(
            &TreePolynomial::monomial(t.clone()),
            &p.relations,
            &p.order_spec,
        );
        println!(
            "{:<24} -> {}",
            t.display(&p.signature).to_string(),
            nf.display(&p.signature)
        );
    }
    Ok(())
}
