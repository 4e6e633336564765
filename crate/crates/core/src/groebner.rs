//! Ambiguities, S-polynomials, Buchberger completion and the Priddy criterion.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use itertools::Itertools;

use crate::compose::Embedding;
use crate::error::{Error, Result};
use crate::order::OrderSpec;
use crate::poly::{leading, normal_form_with, Reducers, TreePolynomial};
use crate::presentations::Presentation;
use crate::tree::{canonicalize, enumerate_monomials, Label, Mode, Signature, TreeMonomial};

/// A monomial divisible by two leading terms along vertex-sharing embeddings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Overlap {
    pub monomial: TreeMonomial,
    pub embedding_1: Embedding,
    pub embedding_2: Embedding,
    pub relations: (usize, usize),
}

impl Overlap {
    pub fn degree(&self) -> usize {
        self.monomial.degree()
    }
}

/// Places the root of `b` on the root of `a` and merges downward. Leaves of
/// the result are placeholders (all `0`) and get numbered afterwards.
fn glue(a: &TreeMonomial, b: &TreeMonomial) -> Option<TreeMonomial> {
    match (a, b) {
        (_, TreeMonomial::Leaf(_)) => Some(blank(a)),
        (TreeMonomial::Leaf(_), _) => Some(blank(b)),
        (TreeMonomial::Node(g, ac), TreeMonomial::Node(h, bc)) => {
            if g != h || ac.len() != bc.len() {
                return None;
            }
            let ch = ac
                .iter()
                .zip(bc)
                .map(|(x, y)| glue(x, y))
                .collect::<Option<Vec<_>>>()?;
            Some(TreeMonomial::Node(*g, ch))
        }
    }
}

fn blank(t: &TreeMonomial) -> TreeMonomial {
    match t {
        TreeMonomial::Leaf(_) => TreeMonomial::Leaf(0),
        TreeMonomial::Node(op, ch) => TreeMonomial::Node(*op, ch.iter().map(blank).collect()),
    }
}

/// All planar shapes obtained by rooting `b` at some vertex of `a`.
fn glued_shapes(a: &TreeMonomial, b: &TreeMonomial) -> Vec<TreeMonomial> {
    let mut variants: Vec<TreeMonomial> = glue(a, b).into_iter().collect();
    if let TreeMonomial::Node(op, ch) = a {
        for (i, c) in ch.iter().enumerate() {
            for v in glued_shapes(c, b) {
                let mut nch: Vec<TreeMonomial> = ch.iter().map(blank).collect();
                nch[i] = v;
                variants.push(TreeMonomial::Node(*op, nch));
            }
        }
    }
    variants
}

fn number_leaves(t: &TreeMonomial, labels: &[Label], next: &mut usize) -> TreeMonomial {
    match t {
        TreeMonomial::Leaf(_) => {
            *next += 1;
            TreeMonomial::Leaf(labels[*next - 1])
        }
        TreeMonomial::Node(op, ch) => TreeMonomial::Node(
            *op,
            ch.iter().map(|c| number_leaves(c, labels, next)).collect(),
        ),
    }
}

fn labelings(shape: &TreeMonomial, mode: Mode) -> Vec<TreeMonomial> {
    let n = shape.arity();
    let ident: Vec<Label> = (1..=n as Label).collect();
    match mode {
        Mode::Nonsymmetric => vec![number_leaves(shape, &ident, &mut 0)],
        Mode::Shuffle => {
            let mut seen = BTreeSet::new();
            for perm in ident.iter().copied().permutations(n) {
                seen.insert(canonicalize(number_leaves(shape, &perm, &mut 0)));
            }
            seen.into_iter().collect()
        }
    }
}

fn vertex_count(t: &TreeMonomial) -> usize {
    t.degree()
}

/// All overlaps of the given leading terms whose monomial has degree at most `max_degree`.
/// A found overlap: monomial, then each relation index with its vertex map.
type OverlapKey = (TreeMonomial, usize, Vec<usize>, usize, Vec<usize>);

pub fn find_ambiguities(
    leading_terms: &[TreeMonomial],
    mode: Mode,
    spec: &OrderSpec,
    max_degree: usize,
) -> Vec<Overlap> {
    let mut found: Vec<Overlap> = Vec::new();
    let mut seen: HashSet<OverlapKey> = HashSet::new();
    for (i, j) in
        (0..leading_terms.len()).flat_map(|i| (i..leading_terms.len()).map(move |j| (i, j)))
    {
        let (a, b) = (&leading_terms[i], &leading_terms[j]);
        let mut candidates: BTreeSet<TreeMonomial> = BTreeSet::new();
        for shape in glued_shapes(a, b).into_iter().chain(glued_shapes(b, a)) {
            if vertex_count(&shape) > max_degree {
                continue;
            }
            candidates.extend(labelings(&shape, mode));
        }
        for w in candidates {
            let total = w.degree();
            let ea = crate::compose::divides(a, &w);
            let eb = crate::compose::divides(b, &w);
            for e1 in &ea {
                for e2 in &eb {
                    if i == j && e1.vertex_map >= e2.vertex_map {
                        continue;
                    }
                    if !e1.overlaps(e2) {
                        continue;
                    }
                    let union: HashSet<usize> = e1
                        .vertex_map
                        .iter()
                        .chain(&e2.vertex_map)
                        .copied()
                        .collect();
                    if union.len() != total {
                        continue;
                    }
                    let key = (
                        w.clone(),
                        i,
                        e1.vertex_map.clone(),
                        j,
                        e2.vertex_map.clone(),
                    );
                    if seen.insert(key) {
                        found.push(Overlap {
                            monomial: w.clone(),
                            embedding_1: e1.clone(),
                            embedding_2: e2.clone(),
                            relations: (i, j),
                        });
                    }
                }
            }
        }
    }
    let keys: HashMap<TreeMonomial, crate::order::PathKey> = found
        .iter()
        .map(|o| (o.monomial.clone(), spec.path_key(&o.monomial)))
        .collect();
    found.sort_by(|x, y| {
        let by_monomial = match spec.kind {
            crate::order::OrderKind::PathLex => {
                keys[&x.monomial].cmp_with(&keys[&y.monomial], spec)
            }
            crate::order::OrderKind::ForestLex => spec.compare(&x.monomial, &y.monomial),
        };
        by_monomial
            .then(x.relations.cmp(&y.relations))
            .then_with(|| x.embedding_1.vertex_map.cmp(&y.embedding_1.vertex_map))
            .then_with(|| x.embedding_2.vertex_map.cmp(&y.embedding_2.vertex_map))
    });
    found
}

/// Difference of the two one-step reductions of the overlap monomial.
pub fn s_polynomial(
    o: &Overlap,
    relations: &[TreePolynomial],
    spec: &OrderSpec,
) -> Result<TreePolynomial> {
    let (i, j) = o.relations;
    let (_, c1) = leading(&relations[i], spec)?;
    let (_, c2) = leading(&relations[j], spec)?;
    let mut s = relations[i].substitute(&o.embedding_1)?.scale(&c1.recip());
    s.add_scaled(&relations[j].substitute(&o.embedding_2)?, &-c2.recip());
    Ok(s)
}

#[derive(Clone, Debug)]
pub struct GBResult {
    pub basis: Vec<TreePolynomial>,
    pub completed_to_degree: usize,
    pub confluent_at_bound: bool,
    pub max_basis_degree: usize,
    pub failure_certificate: Option<(Overlap, TreePolynomial)>,
    pub signature: Signature,
    pub mode: Mode,
    pub spec: OrderSpec,
    /// Whether the completion stopped on the size guard rather than by exhausting overlaps.
    pub truncated: bool,
    /// The bound reaches every overlap of the final basis, so the basis is a
    /// Gröbner basis outright and not only up to the bound.
    pub complete: bool,
}

impl GBResult {
    pub fn leading_terms(&self) -> Vec<TreeMonomial> {
        self.basis
            .iter()
            .map(|g| leading(g, &self.spec).expect("basis is nonzero").0)
            .collect()
    }

    pub fn max_basis_weight(&self) -> usize {
        self.basis.iter().map(|g| g.weight()).max().unwrap_or(0)
    }
}

/// Degree that every overlap of two elements of degree at most that of
/// `polys` fits under: two trees sharing a vertex have at most `2d - 1` vertices.
pub fn overlap_bound(polys: &[TreePolynomial]) -> usize {
    let d = polys.iter().map(|r| r.degree()).max().unwrap_or(0);
    (2 * d).saturating_sub(1)
}

/// Caps the number of basis elements a completion may create before giving up.
const BASIS_LIMIT: usize = 2000;

fn check_bound(relations: &[TreePolynomial], max_degree: usize) -> Result<()> {
    let needed = relations.iter().map(|r| r.degree()).max().unwrap_or(0);
    if max_degree < needed {
        return Err(Error::BoundTooSmall {
            bound: max_degree,
            needed,
        });
    }
    Ok(())
}

/// Fully reduces every element by the others and normalizes to monic form.
pub fn interreduce(polys: &[TreePolynomial], spec: &OrderSpec) -> Vec<TreePolynomial> {
    let mut basis: Vec<TreePolynomial> = polys
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.monic(spec))
        .collect();
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < basis.len() {
            let others: Vec<TreePolynomial> = basis
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, p)| p.clone())
                .collect();
            let nf = normal_form_with(&basis[i], &Reducers::new(&others, spec), spec);
            if nf.is_zero() {
                basis.remove(i);
                changed = true;
                continue;
            }
            let nf = nf.monic(spec);
            if nf != basis[i] {
                basis[i] = nf;
                changed = true;
            }
            i += 1;
        }
        if !changed {
            break;
        }
    }
    basis.sort_by(|a, b| {
        let la = leading(a, spec).expect("nonzero").0;
        let lb = leading(b, spec).expect("nonzero").0;
        spec.compare(&la, &lb)
    });
    basis
}

/// Degree-bounded completion of the relations of `p`.
pub fn buchberger(p: &Presentation, spec: &OrderSpec, max_degree: usize) -> Result<GBResult> {
    check_bound(&p.relations, max_degree)?;
    let mut basis = interreduce(&p.relations, spec);
    let mut first_failure = None;
    let mut truncated = false;
    'rounds: loop {
        let leads: Vec<TreeMonomial> = basis
            .iter()
            .map(|g| leading(g, spec).expect("nonzero").0)
            .collect();
        let overlaps = find_ambiguities(&leads, p.mode, spec, max_degree);
        let mut added = false;
        let mut reducers = Reducers::new(&basis, spec);
        for o in &overlaps {
            let nf = normal_form_with(&s_polynomial(o, &basis, spec)?, &reducers, spec);
            if nf.is_zero() {
                continue;
            }
            if first_failure.is_none() {
                first_failure = Some((o.clone(), nf.clone()));
            }
            basis.push(nf.monic(spec));
            reducers = Reducers::new(&basis, spec);
            added = true;
            if basis.len() > BASIS_LIMIT {
                truncated = true;
                break 'rounds;
            }
        }
        if !added {
            break;
        }
        basis = interreduce(&basis, spec);
    }
    let max_basis_degree = basis.iter().map(|g| g.degree()).max().unwrap_or(0);
    let complete = !truncated && max_degree >= overlap_bound(&basis);
    Ok(GBResult {
        basis,
        completed_to_degree: max_degree,
        confluent_at_bound: !truncated,
        max_basis_degree,
        failure_certificate: first_failure,
        signature: p.signature.clone(),
        mode: p.mode,
        spec: spec.clone(),
        truncated,
        complete,
    })
}

#[derive(Clone, Debug)]
pub struct ConfluenceReport {
    pub confluent: bool,
    pub overlaps_checked: usize,
    pub certificate: Option<(Overlap, TreePolynomial)>,
}

/// Checks that every S-polynomial of the given relations (without completion) reduces to zero.
pub fn is_confluent(
    p: &Presentation,
    spec: &OrderSpec,
    max_degree: usize,
) -> Result<ConfluenceReport> {
    check_bound(&p.relations, max_degree)?;
    let relations: Vec<TreePolynomial> = p
        .relations
        .iter()
        .filter(|r| !r.is_zero())
        .cloned()
        .collect();
    let leads: Vec<TreeMonomial> = relations
        .iter()
        .map(|g| leading(g, spec).expect("nonzero").0)
        .collect();
    let overlaps = find_ambiguities(&leads, p.mode, spec, max_degree);
    let reducers = Reducers::new(&relations, spec);
    for o in &overlaps {
        let nf = normal_form_with(&s_polynomial(o, &relations, spec)?, &reducers, spec);
        if !nf.is_zero() {
            return Ok(ConfluenceReport {
                confluent: false,
                overlaps_checked: overlaps.len(),
                certificate: Some((o.clone(), nf)),
            });
        }
    }
    Ok(ConfluenceReport {
        confluent: true,
        overlaps_checked: overlaps.len(),
        certificate: None,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KoszulVerdict {
    KoszulCertified,
    InconclusiveAtBound,
}

impl fmt::Display for KoszulVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KoszulVerdict::KoszulCertified => "KOSZUL-CERTIFIED",
            KoszulVerdict::InconclusiveAtBound => "INCONCLUSIVE-AT-BOUND",
        })
    }
}

#[derive(Clone, Debug)]
pub struct KoszulReport {
    pub verdict: KoszulVerdict,
    /// Largest weight (count of non-unary vertices) among basis elements.
    pub basis_degree: usize,
    pub gb: GBResult,
}

/// Priddy criterion: a quadratic Gröbner basis certifies Koszulity. Never claims the converse.
///
/// Quadratic is measured by weight, so unary decorations do not count. The
/// basis must be complete: a bound below [`overlap_bound`] only yields
/// `InconclusiveAtBound`.
pub fn koszul_report(
    p: &Presentation,
    spec: &OrderSpec,
    max_degree: usize,
) -> Result<KoszulReport> {
    let gb = buchberger(p, spec, max_degree)?;
    let basis_degree = gb.max_basis_weight();
    let quadratic = gb
        .basis
        .iter()
        .all(|g| g.terms().all(|(t, _)| t.weight() == 2));
    let verdict = if gb.complete && quadratic {
        KoszulVerdict::KoszulCertified
    } else {
        KoszulVerdict::InconclusiveAtBound
    };
    Ok(KoszulReport {
        verdict,
        basis_degree,
        gb,
    })
}

/// Number of monomials of the given arity divisible by no leading term of the basis.
pub fn count_normal_monomials(r: &GBResult, arity: usize) -> Result<u64> {
    if r.signature.has_unary() {
        return Err(Error::BoundExceeded {
            arity,
            needed: usize::MAX,
            bound: r.completed_to_degree,
        });
    }
    let needed = arity.saturating_sub(1);
    if needed > r.completed_to_degree {
        return Err(Error::BoundExceeded {
            arity,
            needed,
            bound: r.completed_to_degree,
        });
    }
    let reducers = Reducers::new(&r.basis, &r.spec);
    Ok(enumerate_monomials(&r.signature, r.mode, arity, needed)
        .iter()
        .filter(|t| reducers.is_normal(t))
        .count() as u64)
}

/// Normal monomials of bounded degree; usable with unary generators.
pub fn normal_monomials_up_to(r: &GBResult, arity: usize, degree: usize) -> Vec<TreeMonomial> {
    let reducers = Reducers::new(&r.basis, &r.spec);
    enumerate_monomials(&r.signature, r.mode, arity, degree)
        .into_iter()
        .filter(|t| reducers.is_normal(t))
        .collect()
}
