//! Building shuffle tree-monomials, composing them and comparing them by path-lex.
use operad_groebner::compose::{elementary_composition, enumerate_shuffles};
use operad_groebner::order::OrderSpec;
use operad_groebner::tree::{corolla, path_sequence, Generator, Signature};

fn main() -> operad_groebner::Result<()> {
    let mut sig = Signature::new();
    let alpha = sig.add(Generator::new("alpha", 1))?;
    let m = sig.add(Generator::new("m", 2))?;
    let spec = OrderSpec::path_lex(&sig);

    let mm = corolla(&sig, m, &[1, 2])?;
    let a = corolla(&sig, alpha, &[1])?;

    // m ∘_{1,σ} m over every shuffle σ
    for sigma in enumerate_shuffles(1, 2, 2) {
        let t = elementary_composition(&mm, 1, &sigma, &mm)?;
        println!("m o_(1,{sigma:?}) m = {}", t.display(&sig));
    }

    let left = elementary_composition(
        &elementary_composition(&mm, 1, &[2, 3], &mm)?,
        1,
        &[2, 3],
        &a,
    )?;
    let right = elementary_composition(&elementary_composition(&mm, 2, &[3], &mm)?, 3, &[], &a)?;
    let seq = path_sequence(&left)?;
    let words: Vec<Vec<&str>> = seq
        .words
        .iter()
        .map(|w| w.iter().map(|op| sig.get(*op).name.as_str()).collect())
        .collect();
    println!(
        "{} has path words {words:?}, permutation {:?}",
        left.display(&sig),
        seq.permutation
    );
    println!(
        "{} vs {}: {:?}",
        left.display(&sig),
        right.display(&sig),
        spec.compare(&left, &right)
    );
    Ok(())
}
