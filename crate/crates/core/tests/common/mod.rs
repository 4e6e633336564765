//! Fixtures shared by the integration tests and the acceptance target.
#![allow(dead_code)]

pub mod oracle;

use std::cmp::Ordering;

use operad_groebner::compose::{divides, elementary_composition, enumerate_shuffles, substitute};
use operad_groebner::conformal::{commutator_bracket, FiniteAlgebra, Matrix};
use operad_groebner::groebner::buchberger;
use operad_groebner::order::OrderSpec;
use operad_groebner::poly::{leading, q, reduce_once, Coeff, TreePolynomial};
use operad_groebner::presentations::Presentation;
use operad_groebner::tree::{enumerate_monomials, Generator, Mode, Signature, TreeMonomial};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `{alpha/1, m/2}` in that order.
pub fn alpha_m() -> Signature {
    let mut sig = Signature::new();
    sig.add(Generator::new("alpha", 1)).unwrap();
    sig.add(Generator::new("m", 2)).unwrap();
    sig
}

/// Monomials of arity `1..=max_arity` and degree at most `max_degree`, by arity.
pub fn pools(
    sig: &Signature,
    mode: Mode,
    max_arity: usize,
    max_degree: usize,
) -> Vec<Vec<TreeMonomial>> {
    (1..=max_arity)
        .map(|n| enumerate_monomials(sig, mode, n, max_degree))
        .collect()
}

/// A random composition `a ∘_{i,σ} b` together with the inner factor `b`.
pub fn random_composite(
    pools: &[Vec<TreeMonomial>],
    mode: Mode,
    max_arity: usize,
    r: &mut ChaCha8Rng,
) -> (TreeMonomial, TreeMonomial) {
    loop {
        let n = r.gen_range(1..=max_arity);
        let m = r.gen_range(1..=max_arity + 1 - n);
        let (Some(a), Some(b)) = (pools[n - 1].choose(r), pools[m - 1].choose(r)) else {
            continue;
        };
        if b.degree() == 0 {
            continue;
        }
        let i = r.gen_range(1..=n);
        let sigma: Vec<u32> = match mode {
            Mode::Shuffle => enumerate_shuffles(i, m, n).choose(r).unwrap().clone(),
            Mode::Nonsymmetric => (i as u32 + 1..=(n + m - 1) as u32).collect(),
        };
        return (
            elementary_composition(a, i as u32, &sigma, b).unwrap(),
            b.clone(),
        );
    }
}

/// Composes random pairs until `count` embeddings have been checked;
/// returns the number checked and the number that failed `substitute(e, v) = w`.
pub fn divisibility_round_trips(count: usize, seed: u64) -> (usize, usize) {
    let sig = alpha_m();
    let mode = Mode::Shuffle;
    let pools = pools(&sig, mode, 4, 3);
    let mut r = rng(seed);
    let (mut checked, mut failed) = (0, 0);
    while checked < count {
        let (w, v) = random_composite(&pools, mode, 4, &mut r);
        let embeddings = divides(&v, &w);
        if embeddings.is_empty() {
            failed += 1;
            checked += 1;
            continue;
        }
        for e in embeddings.into_iter().take(count - checked) {
            checked += 1;
            let ok =
                e.divisor == v && e.dividend == w && substitute(&e, &v).ok().as_ref() == Some(&w);
            if !ok {
                failed += 1;
            }
        }
    }
    (checked, failed)
}

/// Draws `count` pairs `(f, g)` where the leading term of `g` divides that of
/// `f`; returns the number of pairs and how many reductions failed to descend.
pub fn strict_descent(count: usize, seed: u64) -> (usize, usize) {
    let sig = alpha_m();
    let mode = Mode::Shuffle;
    let spec = OrderSpec::path_lex(&sig);
    let pools = pools(&sig, mode, 4, 3);
    let mut r = rng(seed);
    let mut failed = 0;
    for _ in 0..count {
        let (w, v) = random_composite(&pools, mode, 4, &mut r);
        let g = random_polynomial_led_by(&v, &pools[v.arity() - 1], &spec, &mut r);
        let f = random_polynomial_led_by(&w, &pools[w.arity() - 1], &spec, &mut r);
        let descended = match reduce_once(&f, &g, &spec) {
            Ok(h) => {
                h.is_zero() || spec.compare(&leading(&h, &spec).unwrap().0, &w) == Ordering::Less
            }
            Err(_) => false,
        };
        if !descended {
            failed += 1;
        }
    }
    (count, failed)
}

fn random_coeff(r: &mut ChaCha8Rng) -> Coeff {
    let n = r.gen_range(1..=5i64) * if r.gen_bool(0.5) { 1 } else { -1 };
    Coeff::new(n.into(), r.gen_range(1..=3i64).into())
}

/// `lead` plus up to three random strictly smaller monomials of the same arity.
fn random_polynomial_led_by(
    lead: &TreeMonomial,
    pool: &[TreeMonomial],
    spec: &OrderSpec,
    r: &mut ChaCha8Rng,
) -> TreePolynomial {
    let mut f = TreePolynomial::term(lead.clone(), random_coeff(r));
    let smaller: Vec<&TreeMonomial> = pool
        .iter()
        .filter(|t| spec.compare(t, lead) == Ordering::Less)
        .collect();
    for _ in 0..r.gen_range(0..=3) {
        if let Some(t) = smaller.choose(r) {
            f.add_term((*t).clone(), random_coeff(r));
        }
    }
    f
}

/// Runs the completion `runs` times and reports whether every run produced
/// the same basis, bounds and certificate.
pub fn buchberger_deterministic(p: &Presentation, max_degree: usize, runs: usize) -> bool {
    let fingerprint = || {
        let gb = buchberger(p, &p.order_spec, max_degree).unwrap();
        let basis: Vec<String> = gb
            .basis
            .iter()
            .map(|g| g.display_sorted(&gb.signature, &gb.spec).to_string())
            .collect();
        (
            basis,
            gb.completed_to_degree,
            gb.confluent_at_bound,
            gb.max_basis_degree,
            gb.truncated,
            gb.complete,
        )
    };
    let first = fingerprint();
    (1..runs).all(|_| fingerprint() == first)
}

pub fn vector(entries: &[i64]) -> Vec<Coeff> {
    entries.iter().map(|&x| q(x)).collect()
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| q(i64::from(i == j))).collect())
        .collect()
}

pub fn diag(d: &[i64]) -> Matrix {
    (0..d.len())
        .map(|i| {
            (0..d.len())
                .map(|j| q(if i == j { d[i] } else { 0 }))
                .collect()
        })
        .collect()
}

fn names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

pub fn zero_algebra(n: usize) -> FiniteAlgebra {
    FiniteAlgebra::zero(names(n))
}

/// One basis vector with `e∘e = e` and zero bracket.
pub fn idempotent() -> FiniteAlgebra {
    let mut a = FiniteAlgebra::zero(names(1));
    a.set_circ(0, 0, vector(&[1])).unwrap();
    a
}

/// `e1∘e1 = e2`, every other product zero.
pub fn nilpotent() -> FiniteAlgebra {
    let mut a = FiniteAlgebra::zero(names(2));
    a.set_circ(0, 0, vector(&[0, 1])).unwrap();
    a
}

/// `Q[x]/(x^n)` with `x^i∘x^j = j x^(i+j)`.
pub fn truncated_novikov(n: usize) -> FiniteAlgebra {
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

/// The truncated Novikov algebra with its commutator bracket: a GD algebra
/// with both operations nonzero.
pub fn novikov_gd(n: usize) -> FiniteAlgebra {
    let nov = truncated_novikov(n).with_alpha(identity(n)).unwrap();
    let mut gd = commutator_bracket(&nov).unwrap();
    gd.alpha = None;
    gd
}
