//! Generators and tree-monomials of the free shuffle (or nonsymmetric) operad.
//!
//! A tree-monomial is a planar rooted tree whose internal vertices carry
//! generators and whose leaves carry distinct positive labels. The planar
//! representative is fixed by the minimal-leaf rule: at every vertex the
//! children appear in order of their smallest reachable leaf.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

pub type Label = u32;

/// Index of a generator inside its [`Signature`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpId(pub u32);

impl OpId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Whether the operad is nonsymmetric (identity shuffles only) or shuffle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Nonsymmetric,
    Shuffle,
}

/// Symmetry type a generator had before passing to the shuffle operad.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Symmetry {
    #[default]
    None,
    Antisymmetric,
    Symmetric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum GeneratorKind {
    #[default]
    Plain,
    /// Member of an indexed family such as the conformal products `(n, j)`.
    IndexedFamily,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub arity: usize,
    /// Key used by family orderings; for conformal products this is `[n, j]`.
    pub symbol_key: Vec<i64>,
    pub kind: GeneratorKind,
    pub symmetry: Symmetry,
}

impl Generator {
    pub fn new(name: impl Into<String>, arity: usize) -> Self {
        Generator {
            name: name.into(),
            arity,
            symbol_key: Vec::new(),
            kind: GeneratorKind::Plain,
            symmetry: Symmetry::None,
        }
    }

    pub fn with_symmetry(mut self, symmetry: Symmetry) -> Self {
        self.symmetry = symmetry;
        self
    }

    pub fn indexed(name: impl Into<String>, arity: usize, key: Vec<i64>) -> Self {
        Generator {
            name: name.into(),
            arity,
            symbol_key: key,
            kind: GeneratorKind::IndexedFamily,
            symmetry: Symmetry::None,
        }
    }
}

/// A table of generators with unique names.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Signature {
    gens: Vec<Generator>,
    by_name: HashMap<String, OpId>,
}

impl Signature {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, gen: Generator) -> Result<OpId> {
        if gen.arity == 0 {
            return Err(Error::ArityMismatch {
                expected: 1,
                found: 0,
            });
        }
        if self.by_name.contains_key(&gen.name) {
            return Err(Error::InvalidMonomial(format!(
                "generator `{}` declared twice",
                gen.name
            )));
        }
        let id = OpId(self.gens.len() as u32);
        self.by_name.insert(gen.name.clone(), id);
        self.gens.push(gen);
        Ok(id)
    }

    pub fn get(&self, id: OpId) -> &Generator {
        &self.gens[id.index()]
    }

    pub fn lookup(&self, name: &str) -> Option<OpId> {
        self.by_name.get(name).copied()
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = OpId> {
        (0..self.gens.len() as u32).map(OpId)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn has_unary(&self) -> bool {
        self.gens.iter().any(|g| g.arity == 1)
    }
}

/// A tree-monomial. Structural equality coincides with equality of monomials
/// once both sides are in canonical (shuffle) form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TreeMonomial {
    Leaf(Label),
    Node(OpId, Vec<TreeMonomial>),
}

/// Encoding of a monomial as root-to-leaf operation words plus the planar
/// leaf permutation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathSequence {
    /// `words[i]` lists the operations from the root down to leaf `i + 1`.
    pub words: Vec<Vec<OpId>>,
    /// Leaf labels read left to right.
    pub permutation: Vec<Label>,
}

impl TreeMonomial {
    pub fn leaf(label: Label) -> Self {
        TreeMonomial::Leaf(label)
    }

    pub fn node(op: OpId, children: Vec<TreeMonomial>) -> Self {
        TreeMonomial::Node(op, children)
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, TreeMonomial::Leaf(_))
    }

    pub fn arity(&self) -> usize {
        match self {
            TreeMonomial::Leaf(_) => 1,
            TreeMonomial::Node(_, ch) => ch.iter().map(|c| c.arity()).sum(),
        }
    }

    /// Number of vertices.
    pub fn degree(&self) -> usize {
        match self {
            TreeMonomial::Leaf(_) => 0,
            TreeMonomial::Node(_, ch) => 1 + ch.iter().map(|c| c.degree()).sum::<usize>(),
        }
    }

    /// Number of vertices with at least two inputs. Unary vertices carry weight 0.
    pub fn weight(&self) -> usize {
        match self {
            TreeMonomial::Leaf(_) => 0,
            TreeMonomial::Node(_, ch) => {
                usize::from(ch.len() >= 2) + ch.iter().map(|c| c.weight()).sum::<usize>()
            }
        }
    }

    pub fn min_leaf(&self) -> Label {
        match self {
            TreeMonomial::Leaf(l) => *l,
            TreeMonomial::Node(_, ch) => ch.iter().map(|c| c.min_leaf()).min().unwrap_or(0),
        }
    }

    /// Leaf labels in planar (left to right) order.
    pub fn leaves(&self) -> Vec<Label> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<Label>) {
        match self {
            TreeMonomial::Leaf(l) => out.push(*l),
            TreeMonomial::Node(_, ch) => ch.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    pub fn leaf_set(&self) -> BTreeSet<Label> {
        self.leaves().into_iter().collect()
    }

    /// Internal vertices in preorder. Vertex maps of embeddings index into this list.
    pub fn nodes_preorder(&self) -> Vec<&TreeMonomial> {
        let mut out = Vec::new();
        fn go<'a>(t: &'a TreeMonomial, out: &mut Vec<&'a TreeMonomial>) {
            if let TreeMonomial::Node(_, ch) = t {
                out.push(t);
                ch.iter().for_each(|c| go(c, out));
            }
        }
        go(self, &mut out);
        out
    }

    pub fn ops(&self) -> Vec<OpId> {
        self.nodes_preorder()
            .into_iter()
            .filter_map(|n| match n {
                TreeMonomial::Node(op, _) => Some(*op),
                TreeMonomial::Leaf(_) => None,
            })
            .collect()
    }

    /// Labels are exactly `1..=arity`.
    pub fn is_standard(&self) -> bool {
        let mut ls = self.leaves();
        ls.sort_unstable();
        ls.iter().enumerate().all(|(i, &l)| l == i as Label + 1)
    }

    /// Leaves read left to right are `1, 2, ..., n`.
    pub fn is_nonsymmetric(&self) -> bool {
        self.leaves()
            .iter()
            .enumerate()
            .all(|(i, &l)| l == i as Label + 1)
    }

    /// Checks generator arities against a signature.
    pub fn check_signature(&self, sig: &Signature) -> Result<()> {
        match self {
            TreeMonomial::Leaf(_) => Ok(()),
            TreeMonomial::Node(op, ch) => {
                if op.index() >= sig.len() {
                    return Err(Error::MixedSignature);
                }
                let g = sig.get(*op);
                if g.arity != ch.len() {
                    return Err(Error::ArityMismatch {
                        expected: g.arity,
                        found: ch.len(),
                    });
                }
                ch.iter().try_for_each(|c| c.check_signature(sig))
            }
        }
    }

    pub fn display<'a>(&'a self, sig: &'a Signature) -> Functional<'a> {
        Functional { tree: self, sig }
    }

    pub fn sexpr<'a>(&'a self, sig: &'a Signature) -> SExpr<'a> {
        SExpr { tree: self, sig }
    }

    fn map_leaves(&self, f: &impl Fn(Label) -> Label) -> TreeMonomial {
        match self {
            TreeMonomial::Leaf(l) => TreeMonomial::Leaf(f(*l)),
            TreeMonomial::Node(op, ch) => {
                TreeMonomial::Node(*op, ch.iter().map(|c| c.map_leaves(f)).collect())
            }
        }
    }

    /// Renumbers the leaves by rank so that they become `1..=arity`.
    pub fn standardize(&self) -> TreeMonomial {
        let ranks: HashMap<Label, Label> = self
            .leaf_set()
            .into_iter()
            .enumerate()
            .map(|(i, l)| (l, i as Label + 1))
            .collect();
        canonicalize(self.map_leaves(&|l| ranks[&l]))
    }
}

/// Sorts children by minimal leaf at every vertex, producing the shuffle representative.
pub fn canonicalize(t: TreeMonomial) -> TreeMonomial {
    match t {
        TreeMonomial::Leaf(_) => t,
        TreeMonomial::Node(op, ch) => {
            let mut ch: Vec<TreeMonomial> = ch.into_iter().map(canonicalize).collect();
            ch.sort_by_key(|c| c.min_leaf());
            TreeMonomial::Node(op, ch)
        }
    }
}

/// Single-vertex monomial `g(labels...)`.
pub fn corolla(sig: &Signature, op: OpId, labels: &[Label]) -> Result<TreeMonomial> {
    let g = sig.get(op);
    if labels.len() != g.arity {
        return Err(Error::ArityMismatch {
            expected: g.arity,
            found: labels.len(),
        });
    }
    let mut seen = BTreeSet::new();
    for &l in labels {
        if l == 0 {
            return Err(Error::InvalidMonomial("leaf labels are 1-based".into()));
        }
        if !seen.insert(l) {
            return Err(Error::DuplicateLabel(l));
        }
    }
    if labels.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NotShuffleOrdered);
    }
    Ok(TreeMonomial::Node(
        op,
        labels.iter().map(|&l| TreeMonomial::Leaf(l)).collect(),
    ))
}

/// True iff labels are distinct and every vertex lists its children by
/// strictly increasing minimal leaf.
pub fn validate_shuffle(t: &TreeMonomial) -> bool {
    fn ordered(t: &TreeMonomial) -> bool {
        match t {
            TreeMonomial::Leaf(_) => true,
            TreeMonomial::Node(_, ch) => {
                ch.windows(2).all(|w| w[0].min_leaf() < w[1].min_leaf()) && ch.iter().all(ordered)
            }
        }
    }
    let leaves = t.leaves();
    let distinct = leaves.iter().collect::<BTreeSet<_>>().len() == leaves.len();
    distinct && ordered(t)
}

/// Relabels leaves through an injective map and restores the shuffle order.
pub fn relabel(t: &TreeMonomial, map: &HashMap<Label, Label>) -> Result<TreeMonomial> {
    let leaves = t.leaves();
    let mut image = BTreeSet::new();
    for l in &leaves {
        let target = *map
            .get(l)
            .ok_or_else(|| Error::InvalidMonomial(format!("label {l} is not mapped")))?;
        if !image.insert(target) {
            return Err(Error::NonInjectiveMap);
        }
    }
    Ok(canonicalize(t.map_leaves(&|l| map[&l])))
}

pub fn path_sequence(t: &TreeMonomial) -> Result<PathSequence> {
    if !validate_shuffle(t) || !t.is_standard() {
        return Err(Error::InvalidMonomial(
            "path sequences need a standard shuffle monomial".into(),
        ));
    }
    let n = t.arity();
    let mut words = vec![Vec::new(); n];
    let mut stack = Vec::new();
    fn walk(t: &TreeMonomial, stack: &mut Vec<OpId>, words: &mut [Vec<OpId>]) {
        match t {
            TreeMonomial::Leaf(l) => words[*l as usize - 1] = stack.clone(),
            TreeMonomial::Node(op, ch) => {
                stack.push(*op);
                ch.iter().for_each(|c| walk(c, stack, words));
                stack.pop();
            }
        }
    }
    walk(t, &mut stack, &mut words);
    Ok(PathSequence {
        words,
        permutation: t.leaves(),
    })
}

/// All standard monomials of the given arity and degree at most `max_degree`,
/// in a deterministic order.
pub fn enumerate_monomials(
    sig: &Signature,
    mode: Mode,
    arity: usize,
    max_degree: usize,
) -> Vec<TreeMonomial> {
    let labels: Vec<Label> = (1..=arity as Label).collect();
    let mut memo = HashMap::new();
    monomials_on(sig, mode, &labels, max_degree, &mut memo)
}

type Memo = HashMap<(Vec<Label>, usize), Vec<TreeMonomial>>;

fn monomials_on(
    sig: &Signature,
    mode: Mode,
    labels: &[Label],
    budget: usize,
    memo: &mut Memo,
) -> Vec<TreeMonomial> {
    let key = (labels.to_vec(), budget);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut out = Vec::new();
    if labels.len() == 1 {
        out.push(TreeMonomial::Leaf(labels[0]));
    }
    if budget > 0 {
        for op in sig.ids() {
            let k = sig.get(op).arity;
            if k > labels.len() {
                continue;
            }
            for blocks in ordered_blocks(labels, k, mode) {
                let options: Vec<Vec<TreeMonomial>> = blocks
                    .iter()
                    .map(|b| monomials_on(sig, mode, b, budget - 1, memo))
                    .collect();
                combine(&options, budget - 1, &mut Vec::new(), &mut |children| {
                    out.push(TreeMonomial::Node(op, children.to_vec()));
                });
            }
        }
    }
    memo.insert(key, out.clone());
    out
}

fn combine(
    options: &[Vec<TreeMonomial>],
    budget: usize,
    acc: &mut Vec<TreeMonomial>,
    emit: &mut impl FnMut(&[TreeMonomial]),
) {
    if acc.len() == options.len() {
        emit(acc);
        return;
    }
    for t in &options[acc.len()] {
        let d = t.degree();
        if d <= budget {
            acc.push(t.clone());
            combine(options, budget - d, acc, emit);
            acc.pop();
        }
    }
}

/// Partitions of `labels` into `k` nonempty blocks listed by increasing minimum.
/// In nonsymmetric mode only consecutive intervals qualify.
fn ordered_blocks(labels: &[Label], k: usize, mode: Mode) -> Vec<Vec<Vec<Label>>> {
    let mut out = Vec::new();
    match mode {
        Mode::Nonsymmetric => {
            let n = labels.len();
            let mut cuts = Vec::new();
            fn rec(
                start: usize,
                n: usize,
                k: usize,
                cuts: &mut Vec<usize>,
                out: &mut Vec<Vec<usize>>,
            ) {
                if k == 1 {
                    if start < n {
                        let mut c = cuts.clone();
                        c.push(n);
                        out.push(c);
                    }
                    return;
                }
                for end in start + 1..n {
                    cuts.push(end);
                    rec(end, n, k - 1, cuts, out);
                    cuts.pop();
                }
            }
            let mut all = Vec::new();
            rec(0, n, k, &mut cuts, &mut all);
            for c in all {
                let mut prev = 0;
                let blocks = c
                    .iter()
                    .map(|&e| {
                        let b = labels[prev..e].to_vec();
                        prev = e;
                        b
                    })
                    .collect();
                out.push(blocks);
            }
        }
        Mode::Shuffle => {
            let mut blocks: Vec<Vec<Label>> = Vec::new();
            fn rec(
                labels: &[Label],
                k: usize,
                blocks: &mut Vec<Vec<Label>>,
                out: &mut Vec<Vec<Vec<Label>>>,
            ) {
                let Some((&first, rest)) = labels.split_first() else {
                    if blocks.len() == k {
                        out.push(blocks.clone());
                    }
                    return;
                };
                for i in 0..blocks.len() {
                    blocks[i].push(first);
                    rec(rest, k, blocks, out);
                    blocks[i].pop();
                }
                if blocks.len() < k {
                    blocks.push(vec![first]);
                    rec(rest, k, blocks, out);
                    blocks.pop();
                }
            }
            rec(labels, k, &mut blocks, &mut out);
        }
    }
    out
}

/// Functional rendering, e.g. `m(m(1,2),3)`.
pub struct Functional<'a> {
    tree: &'a TreeMonomial,
    sig: &'a Signature,
}

impl fmt::Display for Functional<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tree {
            TreeMonomial::Leaf(l) => write!(f, "{l}"),
            TreeMonomial::Node(op, ch) => {
                write!(f, "{}(", self.sig.get(*op).name)?;
                for (i, c) in ch.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{}", c.display(self.sig))?;
                }
                f.write_str(")")
            }
        }
    }
}

/// S-expression rendering, e.g. `(m (m 1 2) 3)`.
pub struct SExpr<'a> {
    tree: &'a TreeMonomial,
    sig: &'a Signature,
}

impl fmt::Display for SExpr<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tree {
            TreeMonomial::Leaf(l) => write!(f, "{l}"),
            TreeMonomial::Node(op, ch) => {
                write!(f, "({}", self.sig.get(*op).name)?;
                for c in ch {
                    write!(f, " {}", c.sexpr(self.sig))?;
                }
                f.write_str(")")
            }
        }
    }
}
