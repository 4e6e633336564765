//! From a Gelfand–Dorfman algebra to a λ-bracket, in both conventions.
use operad_groebner::conformal::{
    check_gd_with, commutator_bracket, lambda_bracket_from_gd, FiniteAlgebra, Matrix,
};
use operad_groebner::poly::q;
use operad_groebner::presentations::GdConvention;

/// Q[x]/(x^n) with a∘b = a·x·db/dx.
fn truncated_novikov(n: usize) -> FiniteAlgebra {
    let mut a = FiniteAlgebra::zero((0..n).map(|i| format!("x{i}")).collect());
    for i in 0..n {
        for j in (0..n).filter(|j| i + j < n) {
            let mut v = vec![q(0); n];
            v[i + j] = q(j as i64);
            a.set_circ(i, j, v).unwrap();
        }
    }
    a
}

fn main() -> operad_groebner::Result<()> {
    let nov = truncated_novikov(4);
    let id: Matrix = (0..4).map(|i| nov.basis(i)).collect();
    let gd = commutator_bracket(&nov.with_alpha(id)?)?;
    for (name, alg) in [
        ("as stated", gd.clone()),
        ("opposite product", gd.opposite()),
    ] {
        let m = lambda_bracket_from_gd(&alg);
        let (c3, c4) = (m.check_antisymmetry(), m.check_jacobi());
        println!(
            "{name}: right GD {:?}, left GD {:?}, antisymmetry {}, jacobi {}",
            check_gd_with(&alg, GdConvention::Right),
            check_gd_with(&alg, GdConvention::Left),
            c3.holds,
            c4.holds
        );
        if let Some(v) = c4.first_violation {
            println!("  {}", v.describe(&m));
        }
    }
    Ok(())
}
