//! Dimensions from counting normal monomials.
use operad_groebner::groebner::{buchberger, count_normal_monomials};
use operad_groebner::presentations::builtin;

fn main() -> operad_groebner::Result<()> {
    for (name, upto) in [("magma", 7), ("ass", 7), ("lie", 6)] {
        let p = builtin(name, None)?;
        let gb = buchberger(&p, &p.order_spec, upto - 1)?;
        let dims = (1..=upto)
            .map(|n| count_normal_monomials(&gb, n))
            .collect::<Result<Vec<_>, _>>()?;
        println!("{name:<6} {dims:?}");
    }
    Ok(())
}
