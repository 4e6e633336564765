//! Finite-dimensional GD and Hom-GD algebras given by structure constants.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Coeff;
use crate::presentations::GdConvention;

pub type Vector = Vec<Coeff>;

/// A linear map stored by images: row `i` is the image of basis vector `i`.
pub type Matrix = Vec<Vector>;

/// Two bilinear products `∘` and `[,]` on a space with a named basis,
/// and optionally a twist map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    pub names: Vec<String>,
    circ: Vec<Vec<Vector>>,
    bracket: Vec<Vec<Vector>>,
    pub alpha: Option<Matrix>,
}

fn zero_vec(d: usize) -> Vector {
    vec![Coeff::zero(); d]
}

fn axpy(acc: &mut Vector, c: &Coeff, x: &Vector) {
    if c.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(x) {
        *a += c * b;
    }
}

fn sum(parts: &[(i64, Vector)]) -> Vector {
    let d = parts.first().map_or(0, |p| p.1.len());
    let mut out = zero_vec(d);
    for (c, v) in parts {
        axpy(&mut out, &Coeff::from_integer((*c).into()), v);
    }
    out
}

impl FiniteAlgebra {
    /// The algebra with all products zero.
    pub fn zero(names: Vec<String>) -> Self {
        let d = names.len();
        let table = vec![vec![zero_vec(d); d]; d];
        FiniteAlgebra {
            names,
            circ: table.clone(),
            bracket: table,
            alpha: None,
        }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn basis(&self, i: usize) -> Vector {
        let mut v = zero_vec(self.dim());
        v[i] = Coeff::one();
        v
    }

    fn check_vec(&self, v: &Vector) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    fn check_matrix(&self, m: &Matrix) -> Result<()> {
        if m.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: m.len(),
            });
        }
        m.iter().try_for_each(|row| self.check_vec(row))
    }

    pub fn set_circ(&mut self, i: usize, j: usize, v: Vector) -> Result<()> {
        self.check_vec(&v)?;
        self.circ[i][j] = v;
        Ok(())
    }

    pub fn set_bracket(&mut self, i: usize, j: usize, v: Vector) -> Result<()> {
        self.check_vec(&v)?;
        self.bracket[i][j] = v;
        Ok(())
    }

    pub fn with_alpha(mut self, alpha: Matrix) -> Result<Self> {
        self.check_matrix(&alpha)?;
        self.alpha = Some(alpha);
        Ok(self)
    }

    pub fn circ_basis(&self, i: usize, j: usize) -> Vector {
        self.circ[i][j].clone()
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        self.bracket[i][j].clone()
    }

    fn bilinear(&self, table: &[Vec<Vector>], u: &Vector, v: &Vector) -> Vector {
        let mut out = zero_vec(self.dim());
        for (i, ui) in u.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, vj) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                axpy(&mut out, &(ui * vj), &table[i][j]);
            }
        }
        out
    }

    pub fn circ(&self, u: &Vector, v: &Vector) -> Vector {
        self.bilinear(&self.circ, u, v)
    }

    pub fn bracket(&self, u: &Vector, v: &Vector) -> Vector {
        self.bilinear(&self.bracket, u, v)
    }

    /// The same algebra with `a∘'b = b∘a`.
    pub fn opposite(&self) -> Self {
        let mut out = self.clone();
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                out.circ[i][j] = self.circ[j][i].clone();
            }
        }
        out
    }

    fn nonzero_structure(&self) -> impl Iterator<Item = (bool, usize, usize, &Vector)> {
        let circ = self
            .circ
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, v)| (true, i, j, v)));
        let br = self
            .bracket
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, v)| (false, i, j, v)));
        circ.chain(br)
            .filter(|(_, _, _, v)| v.iter().any(|c| !c.is_zero()))
    }

    /// Nonzero structure constants as `(is_circ, i, j, value)`.
    pub fn structure(&self) -> Vec<(bool, usize, usize, Vector)> {
        self.nonzero_structure()
            .map(|(c, i, j, v)| (c, i, j, v.clone()))
            .collect()
    }
}

pub fn apply(m: &Matrix, v: &Vector) -> Vector {
    let d = v.len();
    let mut out = zero_vec(d);
    for (i, c) in v.iter().enumerate() {
        axpy(&mut out, c, &m[i]);
    }
    out
}

fn compose(outer: &Matrix, inner: &Matrix) -> Matrix {
    inner.iter().map(|row| apply(outer, row)).collect()
}

fn on_triples(d: usize, f: impl Fn(usize, usize, usize) -> Vector) -> bool {
    (0..d).all(|a| (0..d).all(|b| (0..d).all(|c| f(a, b, c).iter().all(Zero::is_zero))))
}

/// Verdicts for the GD relations (1)–(5), evaluated on all basis triples.
pub fn check_gd(alg: &FiniteAlgebra) -> [bool; 5] {
    let identity: Matrix = (0..alg.dim()).map(|i| alg.basis(i)).collect();
    hom_gd_verdicts(alg, &identity)
}

/// Verdicts for (1)–(5) read in the given convention; a left GD algebra is
/// one whose opposite product satisfies the list as stated.
pub fn check_gd_with(alg: &FiniteAlgebra, convention: GdConvention) -> [bool; 5] {
    match convention {
        GdConvention::Right => check_gd(alg),
        GdConvention::Left => check_gd(&alg.opposite()),
    }
}

/// Verdicts for the Hom-GD relations (1*)–(5*).
pub fn check_hom_gd(alg: &FiniteAlgebra) -> Result<[bool; 5]> {
    let alpha = alg.alpha.as_ref().ok_or(Error::MissingAlpha)?;
    Ok(hom_gd_verdicts(alg, alpha))
}

fn hom_gd_verdicts(alg: &FiniteAlgebra, alpha: &Matrix) -> [bool; 5] {
    let d = alg.dim();
    let e = |i| alg.basis(i);
    let o = |u: &Vector, v: &Vector| alg.circ(u, v);
    let br = |u: &Vector, v: &Vector| alg.bracket(u, v);
    let al = |u: &Vector| apply(alpha, u);
    [
        on_triples(d, |a, b, c| {
            let (a, b, c) = (e(a), e(b), e(c));
            sum(&[
                (1, o(&o(&a, &b), &al(&c))),
                (-1, o(&al(&a), &o(&b, &c))),
                (-1, o(&o(&b, &a), &al(&c))),
                (1, o(&al(&b), &o(&a, &c))),
            ])
        }),
        on_triples(d, |a, b, c| {
            let (a, b, c) = (e(a), e(b), e(c));
            sum(&[(1, o(&o(&a, &b), &al(&c))), (-1, o(&o(&a, &c), &al(&b)))])
        }),
        on_triples(d, |a, b, _| {
            let (a, b) = (e(a), e(b));
            sum(&[(1, br(&a, &b)), (1, br(&b, &a))])
        }),
        on_triples(d, |a, b, c| {
            let (a, b, c) = (e(a), e(b), e(c));
            sum(&[
                (1, br(&br(&a, &b), &al(&c))),
                (1, br(&br(&c, &a), &al(&b))),
                (1, br(&br(&b, &c), &al(&a))),
            ])
        }),
        on_triples(d, |a, b, c| {
            let (a, b, c) = (e(a), e(b), e(c));
            sum(&[
                (1, br(&o(&c, &a), &al(&b))),
                (-1, br(&o(&c, &b), &al(&a))),
                (1, o(&br(&c, &a), &al(&b))),
                (-1, o(&br(&c, &b), &al(&a))),
                (-1, o(&al(&c), &br(&a, &b))),
            ])
        }),
    ]
}

/// `a∘'b = α(a∘b)`, `[a,b]' = α([a,b])`, with `α` carried along.
pub fn yau_twist(alg: &FiniteAlgebra, alpha: &Matrix) -> Result<FiniteAlgebra> {
    alg.check_matrix(alpha)?;
    let mut out = alg.clone();
    let d = alg.dim();
    for i in 0..d {
        for j in 0..d {
            out.circ[i][j] = apply(alpha, &alg.circ[i][j]);
            out.bracket[i][j] = apply(alpha, &alg.bracket[i][j]);
        }
    }
    out.alpha = Some(alpha.clone());
    Ok(out)
}

/// Whether `α` preserves both products.
pub fn is_gd_morphism(alg: &FiniteAlgebra, alpha: &Matrix) -> Result<bool> {
    alg.check_matrix(alpha)?;
    let d = alg.dim();
    let al = |u: &Vector| apply(alpha, u);
    Ok((0..d).all(|i| {
        (0..d).all(|j| {
            let (a, b) = (alg.basis(i), alg.basis(j));
            al(&alg.circ(&a, &b)) == alg.circ(&al(&a), &al(&b))
                && al(&alg.bracket(&a, &b)) == alg.bracket(&al(&a), &al(&b))
        })
    }))
}

/// Replaces the bracket by the commutator `a∘b - b∘a`.
///
/// The product must satisfy (1*) and (2*) for the algebra's twist map.
pub fn commutator_bracket(alg: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    let verdicts = check_hom_gd(alg)?;
    if !(verdicts[0] && verdicts[1]) {
        return Err(Error::NotHomNovikov);
    }
    let mut out = alg.clone();
    let d = alg.dim();
    for i in 0..d {
        for j in 0..d {
            out.bracket[i][j] = sum(&[(1, alg.circ[i][j].clone()), (-1, alg.circ[j][i].clone())]);
        }
    }
    Ok(out)
}

/// The four identities relating the twisted products to the original ones:
///
/// 1. `(a∘' b)∘' α(c) = α²((a∘b)∘c)`
/// 2. `[[a,b]', α(c)]' = α²([[a,b],c])`
/// 3. `[a,b]' ∘' α(c) = α²([a,b]∘c)`
/// 4. `[a∘' b, α(c)]' = α²([a∘b, c])`
pub fn check_twist_identities(alg: &FiniteAlgebra, alpha: &Matrix) -> Result<[bool; 4]> {
    if !is_gd_morphism(alg, alpha)? {
        return Err(Error::NotAMorphism);
    }
    let tw = yau_twist(alg, alpha)?;
    let d = alg.dim();
    let e = |i| alg.basis(i);
    let al = |u: &Vector| apply(alpha, u);
    let al2 = compose(alpha, alpha);
    let al2 = |u: &Vector| apply(&al2, u);
    let check = |lhs: &dyn Fn(&Vector, &Vector, &Vector) -> Vector,
                 rhs: &dyn Fn(&Vector, &Vector, &Vector) -> Vector| {
        on_triples(d, |a, b, c| {
            let (a, b, c) = (e(a), e(b), e(c));
            sum(&[(1, lhs(&a, &b, &c)), (-1, rhs(&a, &b, &c))])
        })
    };
    Ok([
        check(&|a, b, c| tw.circ(&tw.circ(a, b), &al(c)), &|a, b, c| {
            al2(&alg.circ(&alg.circ(a, b), c))
        }),
        check(
            &|a, b, c| tw.bracket(&tw.bracket(a, b), &al(c)),
            &|a, b, c| al2(&alg.bracket(&alg.bracket(a, b), c)),
        ),
        check(&|a, b, c| tw.circ(&tw.bracket(a, b), &al(c)), &|a, b, c| {
            al2(&alg.circ(&alg.bracket(a, b), c))
        }),
        check(&|a, b, c| tw.bracket(&tw.circ(a, b), &al(c)), &|a, b, c| {
            al2(&alg.bracket(&alg.circ(a, b), c))
        }),
    ])
}
