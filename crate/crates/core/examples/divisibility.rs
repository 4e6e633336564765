//! Finding a leading term inside a larger tree and rewriting it in place.
use operad_groebner::compose::{divides, substitute};
use operad_groebner::poly::leading;
use operad_groebner::presentations::builtin;
use operad_groebner::tree::TreeMonomial;

fn main() -> operad_groebner::Result<()> {
    let p = builtin("hom_ass_II0", None)?;
    let sig = &p.signature;
    let rel = &p.relations[0];
    let (lead, _) = leading(rel, &p.order_spec)?;
    let other = rel
        .terms()
        .map(|(t, _)| t)
        .find(|t| **t != lead)
        .expect("two terms")
        .clone();

    // alpha(m(1,2)) ∘ ... : grow the leading tree by a second copy of itself
    let alpha = sig.lookup("alpha").unwrap();
    let m = sig.lookup("m").unwrap();
    let leaf = TreeMonomial::leaf;
    let inner = TreeMonomial::node(
        m,
        vec![
            TreeMonomial::node(alpha, vec![TreeMonomial::node(m, vec![leaf(1), leaf(2)])]),
            leaf(3),
        ],
    );
    let w = TreeMonomial::node(m, vec![TreeMonomial::node(alpha, vec![inner]), leaf(4)]);
    println!("w = {}", w.display(sig));
    for e in divides(&lead, &w) {
        println!(
            "  {} divides w at vertices {:?}; rewriting gives {}",
            lead.display(sig),
            e.vertex_map,
            substitute(&e, &other)?.display(sig)
        );
    }
    Ok(())
}
