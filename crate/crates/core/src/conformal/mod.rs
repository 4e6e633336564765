//! Lie conformal algebras on free `Q[D]`-modules, and finite-dimensional
//! (Hom-)Gelfand–Dorfman algebras.
//!
//! A module is given by the `n`-products of its basis elements; products of
//! arbitrary elements follow from sesquilinearity,
//! `(Da)_(n) b = -n a_(n-1) b` and `a_(n) Db = D(a_(n) b) + n a_(n-1) b`.
//! Internally products are evaluated through the λ-bracket
//! `[a_λ b] = Σ λ^n/n! a_(n) b`, where these rules read
//! `[Da_λ b] = -λ[a_λ b]` and `[a_λ Db] = (D+λ)[a_λ b]`.

mod algebra;
mod text;

use std::collections::BTreeMap;
use std::fmt;

use num_integer::binomial;
use num_traits::{One, Signed, Zero};

pub use algebra::{
    check_gd, check_gd_with, check_hom_gd, check_twist_identities, commutator_bracket,
    is_gd_morphism, yau_twist, FiniteAlgebra, Matrix,
};
pub use text::{parse_algebra, parse_module, render_algebra, render_module};

use crate::error::{Error, Result};
use crate::poly::{q, Coeff};

fn factorial(n: usize) -> Coeff {
    (1..=n).fold(Coeff::one(), |acc, i| acc * q(i as i64))
}

/// A polynomial in `D` with rational coefficients; `c[i]` multiplies `D^i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PolyD {
    c: Vec<Coeff>,
}

impl PolyD {
    pub fn zero() -> Self {
        PolyD { c: Vec::new() }
    }

    pub fn constant(x: Coeff) -> Self {
        Self::from_coeffs(vec![x])
    }

    /// `D^k`
    pub fn d_power(k: usize) -> Self {
        let mut c = vec![Coeff::zero(); k + 1];
        c[k] = Coeff::one();
        PolyD { c }
    }

    /// The divided power `D^(k) = D^k / k!`.
    pub fn divided_power(k: usize) -> Self {
        Self::d_power(k).scale(&factorial(k).recip())
    }

    pub fn from_coeffs(mut c: Vec<Coeff>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        PolyD { c }
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree in `D`; the zero polynomial has degree 0.
    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn add(&self, other: &PolyD) -> PolyD {
        let n = self.c.len().max(other.c.len());
        let zero = Coeff::zero();
        Self::from_coeffs(
            (0..n)
                .map(|i| self.c.get(i).unwrap_or(&zero) + other.c.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn scale(&self, x: &Coeff) -> PolyD {
        Self::from_coeffs(self.c.iter().map(|c| c * x).collect())
    }

    pub fn mul(&self, other: &PolyD) -> PolyD {
        if self.is_zero() || other.is_zero() {
            return PolyD::zero();
        }
        let mut c = vec![Coeff::zero(); self.c.len() + other.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in other.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::from_coeffs(c)
    }
}

/// An element of the free module: basis index -> coefficient polynomial.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Element {
    terms: BTreeMap<usize, PolyD>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(i: usize) -> Self {
        Self::term(i, PolyD::constant(Coeff::one()))
    }

    pub fn term(i: usize, p: PolyD) -> Self {
        let mut e = Self::zero();
        e.add_term(i, p);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &PolyD)> {
        self.terms.iter().map(|(i, p)| (*i, p))
    }

    pub fn add_term(&mut self, i: usize, p: PolyD) {
        let sum = self.terms.get(&i).map(|x| x.add(&p)).unwrap_or(p);
        if sum.is_zero() {
            self.terms.remove(&i);
        } else {
            self.terms.insert(i, sum);
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (i, p) in &other.terms {
            out.add_term(*i, p.clone());
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.scale(&-Coeff::one()))
    }

    pub fn scale(&self, x: &Coeff) -> Element {
        self.mul_poly(&PolyD::constant(x.clone()))
    }

    pub fn mul_poly(&self, p: &PolyD) -> Element {
        let mut out = Element::zero();
        for (i, c) in &self.terms {
            out.add_term(*i, c.mul(p));
        }
        out
    }

    /// Multiplication by `D`.
    pub fn d(&self) -> Element {
        self.mul_poly(&PolyD::d_power(1))
    }

    pub fn max_d_degree(&self) -> usize {
        self.terms.values().map(PolyD::degree).max().unwrap_or(0)
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> ElementDisplay<'a> {
        ElementDisplay { e: self, names }
    }
}

pub struct ElementDisplay<'a> {
    e: &'a Element,
    names: &'a [String],
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, p) in self.e.terms() {
            for (k, c) in p.coeffs().iter().enumerate().rev() {
                if c.is_zero() {
                    continue;
                }
                match (first, c.is_negative()) {
                    (true, true) => write!(f, "-")?,
                    (true, false) => {}
                    (false, true) => write!(f, " - ")?,
                    (false, false) => write!(f, " + ")?,
                }
                first = false;
                let a = c.abs();
                if !a.is_one() {
                    write!(f, "{a} ")?;
                }
                match k {
                    0 => {}
                    1 => write!(f, "D ")?,
                    _ => write!(f, "D^{k} ")?,
                }
                write!(f, "{}", self.names[i])?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A polynomial in λ with module coefficients; `coeffs[i]` multiplies `λ^i`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct LambdaPoly {
    coeffs: Vec<Element>,
}

impl LambdaPoly {
    fn add_at(&mut self, power: usize, e: &Element) {
        if self.coeffs.len() <= power {
            self.coeffs.resize(power + 1, Element::zero());
        }
        self.coeffs[power] = self.coeffs[power].add(e);
    }
}

/// A free `Q[D]`-module with finitely many nonzero basis products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConformalModule {
    pub basis: Vec<String>,
    /// Products `(n)` vanish on basis pairs for `n > k`.
    pub k: usize,
    products: BTreeMap<(usize, usize, usize), Element>,
}

/// First failing instance of an axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: &'static str,
    /// Basis indices involved, in the order they appear in the axiom.
    pub elements: Vec<usize>,
    /// Product orders `n` (and `m` for the Jacobi identity).
    pub orders: Vec<usize>,
    pub lhs: Element,
    pub rhs: Element,
}

impl AxiomViolation {
    pub fn describe(&self, m: &ConformalModule) -> String {
        let names: Vec<&str> = self.elements.iter().map(|&i| m.basis[i].as_str()).collect();
        format!(
            "{} fails at elements {:?} orders {:?}: {} != {}",
            self.axiom,
            names,
            self.orders,
            self.lhs.display(&m.basis),
            self.rhs.display(&m.basis)
        )
    }
}

impl ConformalModule {
    pub fn new(basis: Vec<String>, k: usize) -> Self {
        ConformalModule {
            basis,
            k,
            products: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == name)
    }

    /// Sets `e_i (n) e_j`; products above the truncation are rejected.
    pub fn set_product(&mut self, i: usize, j: usize, n: usize, value: Element) -> Result<()> {
        if n > self.k {
            return Err(Error::DimensionMismatch {
                expected: self.k,
                found: n,
            });
        }
        if i >= self.dim() || j >= self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: i.max(j) + 1,
            });
        }
        if value.is_zero() {
            self.products.remove(&(i, j, n));
        } else {
            self.products.insert((i, j, n), value);
        }
        Ok(())
    }

    pub fn basis_product(&self, i: usize, j: usize, n: usize) -> Element {
        self.products.get(&(i, j, n)).cloned().unwrap_or_default()
    }

    pub fn products(&self) -> impl Iterator<Item = ((usize, usize, usize), &Element)> {
        self.products.iter().map(|(k, v)| (*k, v))
    }

    fn max_d_degree(&self) -> usize {
        self.products
            .values()
            .map(Element::max_d_degree)
            .max()
            .unwrap_or(0)
    }

    fn basis_bracket(&self, i: usize, j: usize) -> LambdaPoly {
        let mut out = LambdaPoly::default();
        for n in 0..=self.k {
            let p = self.basis_product(i, j, n);
            if !p.is_zero() {
                out.add_at(n, &p.scale(&factorial(n).recip()));
            }
        }
        out
    }

    fn bracket(&self, x: &Element, y: &Element) -> LambdaPoly {
        let mut out = LambdaPoly::default();
        for (i, xi) in x.terms() {
            for (j, yj) in y.terms() {
                let base = self.basis_bracket(i, j);
                // yj(D + λ) acting on the bracket
                let mut right = LambdaPoly::default();
                for (qd, yq) in yj.coeffs().iter().enumerate() {
                    if yq.is_zero() {
                        continue;
                    }
                    for (n, e) in base.coeffs.iter().enumerate() {
                        for t in 0..=qd {
                            let c = yq * q(binomial(qd as i64, t as i64));
                            let term = e.mul_poly(&PolyD::d_power(qd - t)).scale(&c);
                            right.add_at(n + t, &term);
                        }
                    }
                }
                // xi(-λ)
                for (p, xp) in xi.coeffs().iter().enumerate() {
                    if xp.is_zero() {
                        continue;
                    }
                    let sign = if p % 2 == 0 { xp.clone() } else { -xp.clone() };
                    for (n, e) in right.coeffs.iter().enumerate() {
                        out.add_at(n + p, &e.scale(&sign));
                    }
                }
            }
        }
        out
    }

    /// `x_(n) y`, extended from the basis products by sesquilinearity.
    pub fn nth_product(&self, x: &Element, y: &Element, n: i64) -> Result<Element> {
        if n < 0 {
            return Err(Error::NegativeIndex(n));
        }
        Ok(self.nth(x, y, n as usize))
    }

    /// Every nonzero-range `n`-product of `x` and `y`, indexed by `n`.
    fn all_nth(&self, x: &Element, y: &Element) -> Vec<Element> {
        let coeffs = self.bracket(x, y).coeffs;
        coeffs
            .iter()
            .enumerate()
            .map(|(n, e)| e.scale(&factorial(n)))
            .collect()
    }

    fn nth(&self, x: &Element, y: &Element, n: usize) -> Element {
        self.bracket(x, y)
            .coeffs
            .get(n)
            .map(|e| e.scale(&factorial(n)))
            .unwrap_or_default()
    }

    /// Skew-symmetry `a_(n) b = -Σ_j (-1)^(n+j) D^(j) (b_(n+j) a)` on all basis pairs.
    pub fn check_antisymmetry(&self) -> AxiomCheck {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                for n in 0..=self.k {
                    let lhs = self.basis_product(i, j, n);
                    let mut rhs = Element::zero();
                    for t in 0..=(self.k - n) {
                        let sign = if (n + t) % 2 == 0 {
                            -Coeff::one()
                        } else {
                            Coeff::one()
                        };
                        let term = self
                            .basis_product(j, i, n + t)
                            .mul_poly(&PolyD::divided_power(t));
                        rhs = rhs.add(&term.scale(&sign));
                    }
                    if lhs != rhs {
                        return AxiomCheck::failed(AxiomViolation {
                            axiom: "antisymmetry",
                            elements: vec![i, j],
                            orders: vec![n],
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
        AxiomCheck::passed()
    }

    /// Jacobi identity
    /// `a_(m)(b_(n)c) - b_(n)(a_(m)c) = Σ_j C(m,j) (a_(j)b)_(m+n-j) c` on all basis triples.
    ///
    /// Orders run past the truncation far enough to see every product that
    /// the `D`-powers in the structure constants can make nonzero.
    pub fn check_jacobi(&self) -> AxiomCheck {
        let d = self.dim();
        let top = self.k + self.max_d_degree() + 1;
        let basis: Vec<Element> = (0..d).map(Element::basis).collect();
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    let (ea, eb, ec) = (&basis[a], &basis[b], &basis[c]);
                    let bc = self.all_nth(eb, ec);
                    let ac = self.all_nth(ea, ec);
                    let ab = self.all_nth(ea, eb);
                    let a_bc: Vec<Vec<Element>> = bc.iter().map(|x| self.all_nth(ea, x)).collect();
                    let b_ac: Vec<Vec<Element>> = ac.iter().map(|x| self.all_nth(eb, x)).collect();
                    let ab_c: Vec<Vec<Element>> = ab.iter().map(|x| self.all_nth(x, ec)).collect();
                    let at = |v: &[Vec<Element>], i: usize, j: usize| {
                        v.get(i).and_then(|w| w.get(j)).cloned().unwrap_or_default()
                    };
                    for m in 0..=top {
                        for n in 0..=top {
                            let lhs = at(&a_bc, n, m).sub(&at(&b_ac, m, n));
                            let mut rhs = Element::zero();
                            for j in 0..=m {
                                let term = at(&ab_c, j, m + n - j);
                                if !term.is_zero() {
                                    rhs = rhs.add(&term.scale(&q(binomial(m as i64, j as i64))));
                                }
                            }
                            if lhs != rhs {
                                return AxiomCheck::failed(AxiomViolation {
                                    axiom: "jacobi",
                                    elements: vec![a, b, c],
                                    orders: vec![m, n],
                                    lhs,
                                    rhs,
                                });
                            }
                        }
                    }
                }
            }
        }
        AxiomCheck::passed()
    }
}

/// Outcome of an axiom check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub holds: bool,
    pub first_violation: Option<AxiomViolation>,
}

impl AxiomCheck {
    fn passed() -> Self {
        AxiomCheck {
            holds: true,
            first_violation: None,
        }
    }

    fn failed(v: AxiomViolation) -> Self {
        AxiomCheck {
            holds: false,
            first_violation: Some(v),
        }
    }
}

/// The module on `a, b, c` whose `(n)`-product `a_(n) b = c` differs from every `D(a_(m) b)`.
///
/// `b_(r) a = (-1)^(n+1) D^(n-r) c` for `r <= n` makes skew-symmetry close in every order.
pub fn build_mn(n: i64) -> Result<ConformalModule> {
    if n < 0 {
        return Err(Error::NegativeIndex(n));
    }
    let n = n as usize;
    let mut m = ConformalModule::new(vec!["a".into(), "b".into(), "c".into()], n);
    let (a, b, c) = (0, 1, 2);
    m.set_product(a, b, n, Element::basis(c))?;
    let sign = if n % 2 == 1 {
        Coeff::one()
    } else {
        -Coeff::one()
    };
    for r in 0..=n {
        m.set_product(
            b,
            a,
            r,
            Element::term(c, PolyD::divided_power(n - r).scale(&sign)),
        )?;
    }
    Ok(m)
}

/// True iff `x_(n) y` differs from `D(x_(m) y)` for every `m <= m_max`.
pub fn distinctness(m: &ConformalModule, x: usize, y: usize, n: usize, m_max: usize) -> bool {
    let (ex, ey) = (Element::basis(x), Element::basis(y));
    let target = m.nth(&ex, &ey, n);
    (0..=m_max).all(|k| target != m.nth(&ex, &ey, k).d())
}

/// The module with `[a_λ b] = [a,b] + D(a∘b) + λ(a∘b + b∘a)`.
///
/// It is a Lie conformal algebra exactly when the algebra is a *left* GD
/// algebra, i.e. `check_gd_with(alg, GdConvention::Left)` holds.
pub fn lambda_bracket_from_gd(alg: &FiniteAlgebra) -> ConformalModule {
    let d = alg.dim();
    let mut m = ConformalModule::new(alg.names.clone(), 1);
    let to_element = |v: &[Coeff]| {
        let mut e = Element::zero();
        for (s, c) in v.iter().enumerate() {
            e.add_term(s, PolyD::constant(c.clone()));
        }
        e
    };
    for i in 0..d {
        for j in 0..d {
            let circ = to_element(&alg.circ_basis(i, j));
            let circ_t = to_element(&alg.circ_basis(j, i));
            let br = to_element(&alg.bracket_basis(i, j));
            m.set_product(i, j, 0, br.add(&circ.d())).expect("in range");
            m.set_product(i, j, 1, circ.add(&circ_t)).expect("in range");
        }
    }
    m
}
