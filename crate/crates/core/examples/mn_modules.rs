//! The modules M_n: conformal algebras whose n-th product is not a derivative of a lower one.
use operad_groebner::conformal::{build_mn, distinctness, render_module, Element};

fn main() -> operad_groebner::Result<()> {
    for n in 0..=5 {
        let m = build_mn(n)?;
        let (a, b) = (Element::basis(0), Element::basis(1));
        println!(
            "M{n}: antisymmetry {} jacobi {} distinct {}  a_({n})b = {}",
            m.check_antisymmetry().holds,
            m.check_jacobi().holds,
            distinctness(&m, 0, 1, n as usize, 10),
            m.nth_product(&a, &b, n)?.display(&m.basis)
        );
    }
    print!("{}", render_module(&build_mn(2)?));
    Ok(())
}
