//! Reading presentations from the text format, and what errors look like.
use operad_groebner::presentations::{builtin, parse_presentation, render};

fn main() -> operad_groebner::Result<()> {
    let text = include_str!("../presentations/ass.op");
    let p = parse_presentation(text)?;
    println!("{}", render(&p));
    println!("same as the built-in: {}", p == builtin("ass", None)?);

    let custom = "\
operad twisted_comm
mode shuffle
gen alpha 1
gen m 2 symmetric
# a Hom-associativity for a commutative product
rel m(m(1,2),alpha(3)) - m(alpha(1),m(2,3))
";
    let p = parse_presentation(custom)?;
    println!(
        "{} relation(s) over {} generators",
        p.relations.len(),
        p.signature.len()
    );

    for bad in [
        "operad x\ngen m 2\nrel m(1,q(2))\n",
        "operad x\ngen m 2\nrel m(1,2) - m(m(1,2),3)\n",
    ] {
        let err = parse_presentation(bad).unwrap_err();
        println!("{}: {err}", err.name());
    }
    Ok(())
}
