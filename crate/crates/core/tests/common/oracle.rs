//! Independent enumeration of normal monomials and quadratic overlaps.
//!
//! Builds binary trees on its own, decides normality with a local edge
//! matcher (enough for quadratic leading terms) and never calls the library's
//! divisibility or overlap code.

use operad_groebner::groebner::{buchberger, count_normal_monomials, find_ambiguities};
use operad_groebner::poly::leading;
use operad_groebner::presentations::Presentation;
use operad_groebner::tree::{Mode, OpId, TreeMonomial};

#[derive(Clone, Debug, PartialEq)]
enum Bin {
    Leaf(u32),
    Node(u32, Box<Bin>, Box<Bin>),
}

impl Bin {
    fn min(&self) -> u32 {
        match self {
            Bin::Leaf(l) => *l,
            Bin::Node(_, a, _) => a.min(),
        }
    }

    fn edges(&self) -> usize {
        match self {
            Bin::Leaf(_) => 0,
            Bin::Node(_, a, b) => {
                a.edges()
                    + b.edges()
                    + usize::from(!matches!(**a, Bin::Leaf(_)))
                    + usize::from(!matches!(**b, Bin::Leaf(_)))
            }
        }
    }
}

/// Every binary tree on `labels` over `ops` generators: shuffle trees keep
/// the minimum in the left child, nonsymmetric ones split contiguously.
fn trees(labels: &[u32], ops: u32, mode: Mode) -> Vec<Bin> {
    if labels.len() == 1 {
        return vec![Bin::Leaf(labels[0])];
    }
    let mut out = Vec::new();
    let rest = &labels[1..];
    let splits: Vec<(Vec<u32>, Vec<u32>)> = match mode {
        Mode::Nonsymmetric => (1..labels.len())
            .map(|k| (labels[..k].to_vec(), labels[k..].to_vec()))
            .collect(),
        Mode::Shuffle => (0..(1u32 << rest.len()) - 1)
            .map(|mask| {
                let mut left = vec![labels[0]];
                let mut right = Vec::new();
                for (i, l) in rest.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        left.push(*l);
                    } else {
                        right.push(*l);
                    }
                }
                (left, right)
            })
            .collect(),
    };
    for (l, r) in splits {
        for a in trees(&l, ops, mode) {
            for b in trees(&r, ops, mode) {
                for op in 0..ops {
                    out.push(Bin::Node(op, Box::new(a.clone()), Box::new(b.clone())));
                }
            }
        }
    }
    out
}

/// A quadratic leading term `g(h(..), ..)` or `g(.., h(..))`: the operations,
/// which child of `g` holds `h`, and the leaf labels read left to right.
#[derive(Debug)]
struct EdgePattern {
    outer: u32,
    inner: u32,
    position: usize,
    labels: [u32; 3],
}

fn pattern(t: &TreeMonomial) -> EdgePattern {
    let leaf = |t: &TreeMonomial| match t {
        TreeMonomial::Leaf(l) => *l,
        _ => panic!("not quadratic"),
    };
    let TreeMonomial::Node(OpId(g), ch) = t else {
        panic!("leaf")
    };
    match (&ch[0], &ch[1]) {
        (TreeMonomial::Node(OpId(h), inner), x) => EdgePattern {
            outer: *g,
            inner: *h,
            position: 0,
            labels: [leaf(&inner[0]), leaf(&inner[1]), leaf(x)],
        },
        (x, TreeMonomial::Node(OpId(h), inner)) => EdgePattern {
            outer: *g,
            inner: *h,
            position: 1,
            labels: [leaf(x), leaf(&inner[0]), leaf(&inner[1])],
        },
        _ => panic!("not quadratic"),
    }
}

/// Edges (parent, child position) at which `p` occurs, identified by a path.
fn matches(t: &Bin, p: &EdgePattern, path: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, usize)>) {
    let Bin::Node(g, a, b) = t else { return };
    for (pos, child) in [(0, a), (1, b)] {
        if let Bin::Node(h, x, y) = &**child {
            if *g == p.outer && *h == p.inner && pos == p.position {
                let hanging: [u32; 3] = if pos == 0 {
                    [x.min(), y.min(), b.min()]
                } else {
                    [a.min(), x.min(), y.min()]
                };
                let mut sorted = hanging;
                sorted.sort();
                let ranks =
                    hanging.map(|m| sorted.iter().position(|s| *s == m).unwrap() as u32 + 1);
                if ranks == p.labels {
                    out.push((path.clone(), pos));
                }
            }
        }
    }
    path.push(0);
    matches(a, p, path, out);
    path.pop();
    path.push(1);
    matches(b, p, path, out);
    path.pop();
}

fn occurrences(t: &Bin, p: &EdgePattern) -> Vec<(Vec<usize>, usize)> {
    let mut out = Vec::new();
    matches(t, p, &mut Vec::new(), &mut out);
    out
}

fn leading_patterns(
    p: &Presentation,
    basis: &[operad_groebner::poly::TreePolynomial],
) -> Vec<EdgePattern> {
    basis
        .iter()
        .map(|g| pattern(&leading(g, &p.order_spec).unwrap().0))
        .collect()
}

pub fn oracle_dims(p: &Presentation, upto: usize) -> Vec<u64> {
    let gb = buchberger(p, &p.order_spec, upto.saturating_sub(1).max(2)).unwrap();
    let pats = leading_patterns(p, &gb.basis);
    let ops = p.signature.len() as u32;
    (1..=upto as u32)
        .map(|n| {
            let labels: Vec<u32> = (1..=n).collect();
            trees(&labels, ops, p.mode)
                .iter()
                .filter(|t| pats.iter().all(|q| occurrences(t, q).is_empty()))
                .count() as u64
        })
        .collect()
}

pub fn library_dims(p: &Presentation, upto: usize) -> Vec<u64> {
    let gb = buchberger(p, &p.order_spec, upto.saturating_sub(1).max(2)).unwrap();
    (1..=upto)
        .map(|n| count_normal_monomials(&gb, n).unwrap())
        .collect()
}

pub fn catalan(n: usize) -> Vec<u64> {
    let mut c = vec![1u64];
    for k in 1..n {
        c.push((0..k).map(|i| c[i] * c[k - 1 - i]).sum());
    }
    c
}

/// Overlaps of quadratic leading terms live on three-vertex trees; count the
/// pairs of distinct matched edges there (unordered for a term with itself).
pub fn oracle_overlaps(p: &Presentation) -> usize {
    let pats = leading_patterns(p, &p.relations);
    let ops = p.signature.len() as u32;
    let mut count = 0;
    for t in trees(&[1, 2, 3, 4], ops, p.mode)
        .iter()
        .filter(|t| t.edges() == 2)
    {
        let occ: Vec<_> = pats.iter().map(|q| occurrences(t, q)).collect();
        for i in 0..pats.len() {
            for j in i..pats.len() {
                for (x, e1) in occ[i].iter().enumerate() {
                    for (y, e2) in occ[j].iter().enumerate() {
                        if e1 == e2 || (i == j && y <= x) {
                            continue;
                        }
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

pub fn library_overlaps(p: &Presentation) -> usize {
    let leads: Vec<TreeMonomial> = p
        .relations
        .iter()
        .map(|r| leading(r, &p.order_spec).unwrap().0)
        .collect();
    find_ambiguities(&leads, p.mode, &p.order_spec, 3).len()
}
