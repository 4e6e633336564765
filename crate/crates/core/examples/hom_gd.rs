//! Hom-GD algebras from Yau twists and from commutators of Hom-Novikov products.
use operad_groebner::conformal::{
    check_hom_gd, check_twist_identities, commutator_bracket, is_gd_morphism, parse_algebra,
    render_algebra, yau_twist, Matrix,
};
use operad_groebner::poly::q;

fn diag(d: &[i64]) -> Matrix {
    (0..d.len())
        .map(|i| {
            (0..d.len())
                .map(|j| q(if i == j { d[i] } else { 0 }))
                .collect()
        })
        .collect()
}

fn main() -> operad_groebner::Result<()> {
    // x^i ∘ x^j = j x^(i+j) in Q[x]/(x^3); x -> 2x is an automorphism
    let nov = parse_algebra(
        "algebra\nbasis x0 x1 x2\ncirc x0 x1 = x1\ncirc x0 x2 = 2 x2\ncirc x1 x1 = x2\n",
    )?;
    let alpha = diag(&[1, 2, 4]);
    println!("x -> 2x is a morphism: {}", is_gd_morphism(&nov, &alpha)?);

    let hom_novikov = yau_twist(&nov, &alpha)?;
    let hom_gd = commutator_bracket(&hom_novikov)?;
    print!("{}", render_algebra(&hom_gd));
    println!("(1*)-(5*): {:?}", check_hom_gd(&hom_gd)?);

    let gd = commutator_bracket(&nov.clone().with_alpha(diag(&[1, 1, 1]))?)?;
    println!(
        "twist identities: {:?}",
        check_twist_identities(&gd, &alpha)?
    );
    println!(
        "twisted GD algebra: {:?}",
        check_hom_gd(&yau_twist(&gd, &alpha)?)?
    );

    let not_morphism = diag(&[1, 3, 4]);
    println!(
        "twist by a non-morphism ({}): {:?}",
        is_gd_morphism(&gd, &not_morphism)?,
        check_hom_gd(&yau_twist(&gd, &not_morphism)?)?
    );
    Ok(())
}
