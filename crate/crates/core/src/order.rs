//! Admissible orderings of tree-monomials.
//!
//! Path-lexicographic ordering encodes a monomial by its root-to-leaf
//! operation words and its planar leaf permutation; forest-lexicographic
//! ordering compares leaf sets, root operations, and then subtrees.

use std::cmp::Ordering;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::compose::{elementary_composition, enumerate_shuffles};
use crate::error::{Error, Result};
use crate::tree::{enumerate_monomials, Label, Mode, OpId, Signature, TreeMonomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    PathLex,
    /// Literal reading of the forest-lexicographic definition; experimental.
    ForestLex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum WordDirection {
    #[default]
    LeftToRight,
    RightToLeft,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum PermutationRule {
    /// First differing position with the larger entry marks the smaller permutation.
    #[default]
    ReverseLex,
    Lex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum ArityRule {
    #[default]
    SmallerAritySmaller,
    LargerAritySmaller,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderSpec {
    pub kind: OrderKind,
    /// `symbol_rank[op]` is the position of `op` in the symbol order.
    pub symbol_rank: Vec<u32>,
    pub word_direction: WordDirection,
    pub permutation_rule: PermutationRule,
    pub arity_rule: ArityRule,
}

impl OrderSpec {
    /// Path-lex with symbols ordered as declared in the signature.
    pub fn path_lex(sig: &Signature) -> Self {
        OrderSpec {
            kind: OrderKind::PathLex,
            symbol_rank: (0..sig.len() as u32).collect(),
            word_direction: WordDirection::LeftToRight,
            permutation_rule: PermutationRule::ReverseLex,
            arity_rule: ArityRule::SmallerAritySmaller,
        }
    }

    pub fn forest_lex(sig: &Signature) -> Self {
        OrderSpec {
            kind: OrderKind::ForestLex,
            ..Self::path_lex(sig)
        }
    }

    /// Replaces the symbol order by an explicit increasing list of generator names.
    /// Generators not listed keep their declaration order after the listed ones.
    pub fn with_symbol_order(mut self, sig: &Signature, names: &[&str]) -> Result<Self> {
        let mut order: Vec<OpId> = Vec::new();
        for n in names {
            let id = sig.lookup(n).ok_or_else(|| Error::UnknownGenerator {
                name: (*n).to_string(),
                line: 0,
                col: 0,
            })?;
            if !order.contains(&id) {
                order.push(id);
            }
        }
        for id in sig.ids() {
            if !order.contains(&id) {
                order.push(id);
            }
        }
        self.symbol_rank = vec![0; sig.len()];
        for (rank, id) in order.into_iter().enumerate() {
            self.symbol_rank[id.index()] = rank as u32;
        }
        Ok(self)
    }

    /// Path-lex with indexed symbols `(n, j)` ordered by [`clie_symbol_compare`].
    pub fn clie(sig: &Signature) -> Self {
        let mut ids: Vec<OpId> = sig.ids().collect();
        ids.sort_by(|&x, &y| {
            let kx = &sig.get(x).symbol_key;
            let ky = &sig.get(y).symbol_key;
            match (kx.as_slice(), ky.as_slice()) {
                ([n, j], [m, i]) => clie_symbol_compare((*n, *j), (*m, *i)),
                _ => kx.cmp(ky),
            }
            .then(x.cmp(&y))
        });
        let mut spec = Self::path_lex(sig);
        for (rank, id) in ids.into_iter().enumerate() {
            spec.symbol_rank[id.index()] = rank as u32;
        }
        spec
    }

    fn rank(&self, op: OpId) -> u32 {
        self.symbol_rank[op.index()]
    }

    pub fn covers(&self, t: &TreeMonomial) -> bool {
        t.ops().iter().all(|op| op.index() < self.symbol_rank.len())
    }

    /// Total comparison of two standard shuffle monomials.
    pub fn compare(&self, a: &TreeMonomial, b: &TreeMonomial) -> Ordering {
        let arity = a.arity().cmp(&b.arity());
        if arity != Ordering::Equal {
            return match self.arity_rule {
                ArityRule::SmallerAritySmaller => arity,
                ArityRule::LargerAritySmaller => arity.reverse(),
            };
        }
        match self.kind {
            OrderKind::PathLex => self.path_key(a).cmp_with(&self.path_key(b), self),
            OrderKind::ForestLex => self.forest_cmp(a, b),
        }
    }

    pub fn checked_compare(&self, a: &TreeMonomial, b: &TreeMonomial) -> Result<Ordering> {
        if !self.covers(a) || !self.covers(b) {
            return Err(Error::MixedSignature);
        }
        Ok(self.compare(a, b))
    }

    /// Precomputed comparison key for path-lex; cheaper when a monomial is compared often.
    pub fn path_key(&self, t: &TreeMonomial) -> PathKey {
        let n = t.arity();
        let mut words = vec![Vec::new(); n];
        let mut leaves = Vec::with_capacity(n);
        let mut stack = Vec::new();
        fn walk(
            spec: &OrderSpec,
            t: &TreeMonomial,
            stack: &mut Vec<u32>,
            words: &mut Vec<Vec<u32>>,
            leaves: &mut Vec<Label>,
        ) {
            match t {
                TreeMonomial::Leaf(l) => {
                    leaves.push(*l);
                    let idx = *l as usize - 1;
                    if idx >= words.len() {
                        words.resize(idx + 1, Vec::new());
                    }
                    words[idx] = stack.clone();
                }
                TreeMonomial::Node(op, ch) => {
                    stack.push(spec.rank(*op));
                    ch.iter().for_each(|c| walk(spec, c, stack, words, leaves));
                    stack.pop();
                }
            }
        }
        walk(self, t, &mut stack, &mut words, &mut leaves);
        if self.word_direction == WordDirection::RightToLeft {
            words.iter_mut().for_each(|w| w.reverse());
        }
        PathKey {
            words,
            permutation: leaves,
        }
    }

    fn forest_cmp(&self, a: &TreeMonomial, b: &TreeMonomial) -> Ordering {
        let la: Vec<Label> = a.leaf_set().into_iter().collect();
        let lb: Vec<Label> = b.leaf_set().into_iter().collect();
        let sets = leaf_set_cmp(&la, &lb);
        if sets != Ordering::Equal {
            return sets;
        }
        match (a, b) {
            (TreeMonomial::Leaf(_), TreeMonomial::Leaf(_)) => Ordering::Equal,
            (TreeMonomial::Leaf(_), TreeMonomial::Node(..)) => Ordering::Less,
            (TreeMonomial::Node(..), TreeMonomial::Leaf(_)) => Ordering::Greater,
            (TreeMonomial::Node(x, xs), TreeMonomial::Node(y, ys)) => {
                let ops = self.rank(*x).cmp(&self.rank(*y));
                if ops != Ordering::Equal {
                    return ops;
                }
                for (p, q) in xs.iter().zip(ys) {
                    let sp: Vec<Label> = p.leaf_set().into_iter().collect();
                    let sq: Vec<Label> = q.leaf_set().into_iter().collect();
                    let c = leaf_set_cmp(&sp, &sq).then_with(|| self.forest_cmp(p, q));
                    if c != Ordering::Equal {
                        return c;
                    }
                }
                xs.len().cmp(&ys.len())
            }
        }
    }
}

/// Leaf-set comparison read literally: at the first position where the
/// sorted sets differ, the set with the smaller entry is the larger set.
/// Sets that agree on their common prefix compare by size.
fn leaf_set_cmp(a: &[Label], b: &[Label]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return y.cmp(x);
        }
    }
    a.len().cmp(&b.len())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathKey {
    words: Vec<Vec<u32>>,
    permutation: Vec<Label>,
}

impl PathKey {
    pub fn cmp_with(&self, other: &PathKey, spec: &OrderSpec) -> Ordering {
        let len = self.words.len().cmp(&other.words.len());
        if len != Ordering::Equal {
            return len;
        }
        for (u, v) in self.words.iter().zip(&other.words) {
            let c = u.len().cmp(&v.len()).then_with(|| u.cmp(v));
            if c != Ordering::Equal {
                return c;
            }
        }
        for (s, t) in self.permutation.iter().zip(&other.permutation) {
            if s != t {
                return match spec.permutation_rule {
                    PermutationRule::ReverseLex => t.cmp(s),
                    PermutationRule::Lex => s.cmp(t),
                };
            }
        }
        Ordering::Equal
    }
}

/// Order on conformal product symbols `(n, j)`: compare `j` first, then `n`,
/// each under `0 < 2 < 3 < ... < 1`.
pub fn clie_symbol_compare(p: (i64, i64), q: (i64, i64)) -> Ordering {
    fn key(x: i64) -> (bool, i64) {
        (x == 1, x)
    }
    key(p.1)
        .cmp(&key(q.1))
        .then_with(|| key(p.0).cmp(&key(q.0)))
}

/// A violation of admissibility: `smaller < larger` but the compositions
/// `smaller ∘ other` and `larger ∘ other` (or with the roles swapped) are misordered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibilityViolation {
    pub outer: (TreeMonomial, TreeMonomial),
    pub inner: (TreeMonomial, TreeMonomial),
    pub position: Label,
    pub shuffle: Vec<Label>,
}

fn violation(
    spec: &OrderSpec,
    a: &TreeMonomial,
    a2: &TreeMonomial,
    b: &TreeMonomial,
    b2: &TreeMonomial,
    i: Label,
    sigma: &[Label],
) -> Option<Box<AdmissibilityViolation>> {
    let lhs = elementary_composition(a, i, sigma, b).ok()?;
    let rhs = elementary_composition(a2, i, sigma, b2).ok()?;
    (spec.compare(&lhs, &rhs) == Ordering::Greater).then(|| {
        Box::new(AdmissibilityViolation {
            outer: (a.clone(), a2.clone()),
            inner: (b.clone(), b2.clone()),
            position: i,
            shuffle: sigma.to_vec(),
        })
    })
}

fn shuffles_for(mode: Mode, i: usize, inner: usize, outer: usize) -> Vec<Vec<Label>> {
    match mode {
        Mode::Shuffle => enumerate_shuffles(i, inner, outer),
        Mode::Nonsymmetric => {
            vec![((i + 1) as Label..=(inner + outer - 1) as Label).collect()]
        }
    }
}

/// Randomized admissibility check: draws pairs `a <= a'`, `b <= b'` of arity at most
/// four and degree at most three and tests every applicable composition.
pub fn check_admissibility(
    sig: &Signature,
    mode: Mode,
    spec: &OrderSpec,
    sample_budget: usize,
    seed: u64,
) -> std::result::Result<(), Box<AdmissibilityViolation>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pools: Vec<Vec<TreeMonomial>> = (1..=4)
        .map(|n| enumerate_monomials(sig, mode, n, 3))
        .collect();
    for _ in 0..sample_budget {
        let n = rng.gen_range(1..=3usize);
        let m = rng.gen_range(1..=(5 - n));
        let (Some(a), Some(a2)) = (pools[n - 1].choose(&mut rng), pools[n - 1].choose(&mut rng))
        else {
            continue;
        };
        let (Some(b), Some(b2)) = (pools[m - 1].choose(&mut rng), pools[m - 1].choose(&mut rng))
        else {
            continue;
        };
        let (a, a2) = if spec.compare(a, a2) == Ordering::Greater {
            (a2, a)
        } else {
            (a, a2)
        };
        let (b, b2) = if spec.compare(b, b2) == Ordering::Greater {
            (b2, b)
        } else {
            (b, b2)
        };
        for i in 1..=n {
            for sigma in shuffles_for(mode, i, m, n) {
                if let Some(v) = violation(spec, a, a2, b, b2, i as Label, &sigma) {
                    return Err(v);
                }
            }
        }
    }
    Ok(())
}

/// Exhaustive admissibility over all monomials with arity at most `max_arity`
/// and degree at most `max_degree`, for compositions of arity at most `max_arity`.
///
/// Monotonicity is checked in each slot separately along consecutive elements of
/// the sorted monomial lists; with a transitive order this covers every pair.
pub fn exhaustive_admissibility(
    sig: &Signature,
    mode: Mode,
    spec: &OrderSpec,
    max_arity: usize,
    max_degree: usize,
) -> std::result::Result<usize, Box<AdmissibilityViolation>> {
    let pools: Vec<Vec<TreeMonomial>> = (1..=max_arity)
        .map(|n| {
            let mut v = enumerate_monomials(sig, mode, n, max_degree);
            v.sort_by(|x, y| spec.compare(x, y));
            v
        })
        .collect();
    let mut checked = 0usize;
    for n in 1..=max_arity {
        for m in 1..=(max_arity + 1 - n) {
            let outer = &pools[n - 1];
            let inner = &pools[m - 1];
            for i in 1..=n {
                let shuffles = shuffles_for(mode, i, m, n);
                for sigma in &shuffles {
                    for w in outer.windows(2) {
                        for b in inner {
                            checked += 1;
                            if let Some(v) = violation(spec, &w[0], &w[1], b, b, i as Label, sigma)
                            {
                                return Err(v);
                            }
                        }
                    }
                    for w in inner.windows(2) {
                        for a in outer {
                            checked += 1;
                            if let Some(v) = violation(spec, a, a, &w[0], &w[1], i as Label, sigma)
                            {
                                return Err(v);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(checked)
}
