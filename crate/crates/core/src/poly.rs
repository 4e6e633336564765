//! Tree-polynomials with exact rational coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::compose::{divides, substitute, Embedding};
use crate::error::{Error, Result};
use crate::order::OrderSpec;
use crate::tree::{Signature, TreeMonomial};

pub type Coeff = BigRational;

pub fn q(n: i64) -> Coeff {
    BigRational::from_integer(n.into())
}

pub fn q_frac(n: i64, d: i64) -> Coeff {
    BigRational::new(n.into(), d.into())
}

/// A finite rational combination of monomials of one arity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TreePolynomial {
    terms: BTreeMap<TreeMonomial, Coeff>,
    arity: usize,
}

impl TreePolynomial {
    pub fn zero(arity: usize) -> Self {
        TreePolynomial {
            terms: BTreeMap::new(),
            arity,
        }
    }

    pub fn monomial(t: TreeMonomial) -> Self {
        Self::term(t, Coeff::one())
    }

    pub fn term(t: TreeMonomial, c: Coeff) -> Self {
        let mut p = Self::zero(t.arity());
        p.add_term(t, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (TreeMonomial, Coeff)>) -> Result<Self> {
        let mut it = terms.into_iter().peekable();
        let arity = match it.peek() {
            Some((t, _)) => t.arity(),
            None => return Ok(Self::zero(0)),
        };
        let mut p = Self::zero(arity);
        for (t, c) in it {
            if t.arity() != arity {
                return Err(Error::ArityMismatch {
                    expected: arity,
                    found: t.arity(),
                });
            }
            p.add_term(t, c);
        }
        Ok(p)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TreeMonomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, t: &TreeMonomial) -> Coeff {
        self.terms.get(t).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|t| t.degree()).max().unwrap_or(0)
    }

    /// Maximal weight over the terms (vertices with at least two inputs).
    pub fn weight(&self) -> usize {
        self.terms.keys().map(|t| t.weight()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, t: TreeMonomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        if self.terms.is_empty() {
            self.arity = t.arity();
        }
        match self.terms.entry(t) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TreePolynomial, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        for (t, d) in &other.terms {
            self.add_term(t.clone(), d * c);
        }
    }

    pub fn scale(&self, c: &Coeff) -> TreePolynomial {
        let mut out = Self::zero(self.arity);
        out.add_scaled(self, c);
        out
    }

    pub fn sub(&self, other: &TreePolynomial) -> TreePolynomial {
        let mut out = self.clone();
        out.add_scaled(other, &-Coeff::one());
        out
    }

    pub fn add(&self, other: &TreePolynomial) -> TreePolynomial {
        let mut out = self.clone();
        out.add_scaled(other, &Coeff::one());
        out
    }

    /// Scales so that the leading coefficient is 1.
    pub fn monic(&self, spec: &OrderSpec) -> TreePolynomial {
        match leading(self, spec) {
            Ok((_, c)) => self.scale(&c.recip()),
            Err(_) => self.clone(),
        }
    }

    /// Monomials sorted from largest to smallest.
    pub fn sorted_desc(&self, spec: &OrderSpec) -> Vec<&TreeMonomial> {
        let mut keyed: Vec<_> = self.terms.keys().map(|t| (spec.path_key(t), t)).collect();
        keyed.sort_by(|(ka, a), (kb, b)| match spec.kind {
            crate::order::OrderKind::PathLex => kb.cmp_with(ka, spec),
            crate::order::OrderKind::ForestLex => spec.compare(b, a),
        });
        keyed.into_iter().map(|(_, t)| t).collect()
    }

    /// Applies a substitution pattern to every term.
    pub fn substitute(&self, e: &Embedding) -> Result<TreePolynomial> {
        let mut out = TreePolynomial::zero(e.dividend.arity());
        for (t, c) in &self.terms {
            out.add_term(substitute(e, t)?, c.clone());
        }
        Ok(out)
    }

    pub fn display<'a>(&'a self, sig: &'a Signature) -> PolyDisplay<'a> {
        PolyDisplay {
            poly: self,
            sig,
            spec: None,
        }
    }

    /// Renders terms from largest to smallest under `spec`.
    pub fn display_sorted<'a>(
        &'a self,
        sig: &'a Signature,
        spec: &'a OrderSpec,
    ) -> PolyDisplay<'a> {
        PolyDisplay {
            poly: self,
            sig,
            spec: Some(spec),
        }
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a TreePolynomial,
    sig: &'a Signature,
    spec: Option<&'a OrderSpec>,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let order: Vec<&TreeMonomial> = match self.spec {
            Some(s) => self.poly.sorted_desc(s),
            None => self.poly.terms.keys().collect(),
        };
        for (i, t) in order.into_iter().enumerate() {
            let c = &self.poly.terms[t];
            let neg = c.is_negative();
            let a = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !a.is_one() {
                write!(f, "{}*", a)?;
            }
            write!(f, "{}", t.display(self.sig))?;
        }
        Ok(())
    }
}

pub fn leading(f: &TreePolynomial, spec: &OrderSpec) -> Result<(TreeMonomial, Coeff)> {
    let t = f
        .terms
        .keys()
        .max_by(|a, b| spec.compare(a, b))
        .ok_or(Error::ZeroPolynomial)?;
    Ok((t.clone(), f.terms[t].clone()))
}

/// The embedding used for reduction when several exist: smallest vertex tuple.
pub fn preferred_embedding(v: &TreeMonomial, w: &TreeMonomial) -> Option<Embedding> {
    divides(v, w)
        .into_iter()
        .min_by(|a, b| a.vertex_map.cmp(&b.vertex_map))
}

/// One reduction of the leading term of `f` by `g`.
pub fn reduce_once(
    f: &TreePolynomial,
    g: &TreePolynomial,
    spec: &OrderSpec,
) -> Result<TreePolynomial> {
    let (lf, cf) = leading(f, spec)?;
    let (lg, cg) = leading(g, spec)?;
    let e = preferred_embedding(&lg, &lf).ok_or(Error::NotDivisible)?;
    reduce_at(f, &cf, g, &cg, &e)
}

/// `f - (c_f / c_g) * m_{w,v}(g)` for the embedding `e` of `v = lead(g)` into a monomial of `f`.
pub fn reduce_at(
    f: &TreePolynomial,
    cf: &Coeff,
    g: &TreePolynomial,
    cg: &Coeff,
    e: &Embedding,
) -> Result<TreePolynomial> {
    let shifted = g.substitute(e)?;
    let mut out = f.clone();
    out.add_scaled(&shifted, &-(cf / cg));
    Ok(out)
}

/// Precomputed leading data of a reducer set.
#[derive(Clone, Debug)]
pub struct Reducers {
    pub polys: Vec<TreePolynomial>,
    pub leads: Vec<(TreeMonomial, Coeff)>,
}

impl Reducers {
    pub fn new(polys: &[TreePolynomial], spec: &OrderSpec) -> Self {
        let polys: Vec<TreePolynomial> = polys.iter().filter(|p| !p.is_zero()).cloned().collect();
        let leads = polys
            .iter()
            .map(|p| leading(p, spec).expect("nonzero"))
            .collect();
        Reducers { polys, leads }
    }

    /// First reducer (in list order) whose leading term divides `t`.
    pub fn find(&self, t: &TreeMonomial) -> Option<(usize, Embedding)> {
        self.leads
            .iter()
            .enumerate()
            .filter(|(_, (lt, _))| lt.arity() <= t.arity() && lt.degree() <= t.degree())
            .find_map(|(i, (lt, _))| preferred_embedding(lt, t).map(|e| (i, e)))
    }

    pub fn is_normal(&self, t: &TreeMonomial) -> bool {
        self.find(t).is_none()
    }
}

/// Full reduction: rewrites every reducible monomial, largest first.
pub fn normal_form(f: &TreePolynomial, g: &[TreePolynomial], spec: &OrderSpec) -> TreePolynomial {
    normal_form_with(f, &Reducers::new(g, spec), spec)
}

pub fn normal_form_with(
    f: &TreePolynomial,
    reducers: &Reducers,
    spec: &OrderSpec,
) -> TreePolynomial {
    let mut current = f.clone();
    // Monomials already known to be irreducible never need re-examination.
    let mut irreducible: std::collections::HashSet<TreeMonomial> = Default::default();
    loop {
        let mut step = None;
        for t in current.sorted_desc(spec) {
            if irreducible.contains(t) {
                continue;
            }
            match reducers.find(t) {
                Some(hit) => {
                    step = Some((t.clone(), hit));
                    break;
                }
                None => {
                    irreducible.insert(t.clone());
                }
            }
        }
        let Some((t, (i, e))) = step else {
            return current;
        };
        let ct = current.coeff(&t);
        let (_, cg) = &reducers.leads[i];
        current = reduce_at(&current, &ct, &reducers.polys[i], cg, &e)
            .expect("embedding arity matches reducer");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{Generator, Label, OpId, TreeMonomial as T};

    fn l(x: Label) -> T {
        T::Leaf(x)
    }

    fn setup() -> (Signature, OpId, OpId, OrderSpec) {
        let mut s = Signature::new();
        let a = s.add(Generator::new("alpha", 1)).unwrap();
        let m = s.add(Generator::new("m", 2)).unwrap();
        let spec = OrderSpec::path_lex(&s);
        (s, a, m, spec)
    }

    fn ass(m: OpId) -> TreePolynomial {
        let left = T::node(m, vec![T::node(m, vec![l(1), l(2)]), l(3)]);
        let right = T::node(m, vec![l(1), T::node(m, vec![l(2), l(3)])]);
        TreePolynomial::from_terms([(left, q(1)), (right, q(-1))]).unwrap()
    }

    #[test]
    fn arithmetic_cancels() {
        let (_, _, m, _) = setup();
        let g = ass(m);
        assert!(g.sub(&g).is_zero());
        assert_eq!(g.scale(&q(0)), TreePolynomial::zero(3));
        assert_eq!(
            g.add(&g).coeff(&g.terms().next().unwrap().0.clone()).abs(),
            q(2)
        );
        let bad = TreePolynomial::from_terms([(l(1), q(1)), (T::node(m, vec![l(1), l(2)]), q(1))]);
        assert!(matches!(bad, Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn leading_and_self_reduction() {
        let (s, _, m, spec) = setup();
        let g = ass(m);
        let (lt, c) = leading(&g, &spec).unwrap();
        assert_eq!(lt.display(&s).to_string(), "m(m(1,2),3)");
        assert_eq!(c, q(1));
        assert!(reduce_once(&g, &g, &spec).unwrap().is_zero());
        assert_eq!(
            leading(&TreePolynomial::zero(2), &spec),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn comb_normal_form() {
        let (s, _, m, spec) = setup();
        let c = T::node(m, vec![l(1), l(2)]);
        let comb = T::node(m, vec![T::node(m, vec![c, l(3)]), l(4)]);
        let f = TreePolynomial::monomial(comb);
        let once = reduce_once(&f, &ass(m), &spec).unwrap();
        assert_eq!(once.display(&s).to_string(), "m(m(1,2),m(3,4))");
        let nf = normal_form(&f, &[ass(m)], &spec);
        assert_eq!(nf.display(&s).to_string(), "m(1,m(2,m(3,4)))");
    }

    #[test]
    fn not_divisible() {
        let (_, a, m, spec) = setup();
        let f = TreePolynomial::monomial(T::node(a, vec![T::node(m, vec![l(1), l(2)])]));
        assert_eq!(reduce_once(&f, &ass(m), &spec), Err(Error::NotDivisible));
    }

    #[test]
    fn rendering() {
        let (s, _, m, spec) = setup();
        let g = ass(m).scale(&q_frac(-1, 2));
        assert_eq!(
            g.display_sorted(&s, &spec).to_string(),
            "-1/2*m(m(1,2),3) + 1/2*m(1,m(2,3))"
        );
        assert_eq!(TreePolynomial::zero(3).display(&s).to_string(), "0");
    }
}
