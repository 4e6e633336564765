//! Elementary shuffle compositions, divisibility, and substitution.
//!
//! `a ∘_{i,σ} b` grafts `b` onto input `i` of `a`. The first input of `b`
//! keeps label `i`; the remaining inputs of `b` and the inputs of `a` after `i`
//! receive the labels `i+1, ..., n+m-1` through a two-block shuffle `σ`.
//! A shuffle is written as the list of images of those inputs: first the
//! `m-1` images for `b`, then the `n-i` images for `a`; each block increases.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::tree::{canonicalize, Label, OpId, TreeMonomial};

/// One elementary composition in a script reconstructing a dividend.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CompositionStep {
    /// `current ∘_{position, shuffle} operand`
    Inner {
        position: Label,
        shuffle: Vec<Label>,
        operand: TreeMonomial,
    },
    /// `host ∘_{position, shuffle} current`
    Outer {
        host: TreeMonomial,
        position: Label,
        shuffle: Vec<Label>,
    },
}

/// An occurrence of `divisor` inside `dividend`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Embedding {
    pub divisor: TreeMonomial,
    pub dividend: TreeMonomial,
    /// `vertex_map[k]` is the preorder index in the dividend of the divisor's `k`-th vertex.
    pub vertex_map: Vec<usize>,
    pub script: Vec<CompositionStep>,
}

impl Embedding {
    pub fn anchor(&self) -> usize {
        self.vertex_map[0]
    }

    pub fn overlaps(&self, other: &Embedding) -> bool {
        self.vertex_map.iter().any(|v| other.vertex_map.contains(v))
    }
}

pub fn elementary_composition(
    a: &TreeMonomial,
    i: Label,
    sigma: &[Label],
    b: &TreeMonomial,
) -> Result<TreeMonomial> {
    let n = a.arity();
    let m = b.arity();
    if i == 0 || i as usize > n {
        return Err(Error::BadPosition {
            position: i,
            arity: n,
        });
    }
    let total = n + m - 1;
    let tail = total - i as usize;
    if sigma.len() != tail {
        return Err(Error::NotAShuffle);
    }
    let (inner, outer) = sigma.split_at(m - 1);
    let block_ok = |s: &[Label]| s.windows(2).all(|w| w[0] < w[1]);
    let mut sorted = sigma.to_vec();
    sorted.sort_unstable();
    let expected: Vec<Label> = (i + 1..=total as Label).collect();
    if !block_ok(inner) || !block_ok(outer) || sorted != expected {
        return Err(Error::NotAShuffle);
    }
    let grafted = graft(
        a,
        i,
        &|l| if l == 1 { i } else { inner[l as usize - 2] },
        b,
        &|l| {
            if l < i {
                l
            } else {
                outer[(l - i - 1) as usize]
            }
        },
    );
    Ok(canonicalize(grafted))
}

fn graft(
    a: &TreeMonomial,
    i: Label,
    b_map: &impl Fn(Label) -> Label,
    b: &TreeMonomial,
    a_map: &impl Fn(Label) -> Label,
) -> TreeMonomial {
    match a {
        TreeMonomial::Leaf(l) if *l == i => map_labels(b, b_map),
        TreeMonomial::Leaf(l) => TreeMonomial::Leaf(a_map(*l)),
        TreeMonomial::Node(op, ch) => TreeMonomial::Node(
            *op,
            ch.iter().map(|c| graft(c, i, b_map, b, a_map)).collect(),
        ),
    }
}

fn map_labels(t: &TreeMonomial, f: &impl Fn(Label) -> Label) -> TreeMonomial {
    match t {
        TreeMonomial::Leaf(l) => TreeMonomial::Leaf(f(*l)),
        TreeMonomial::Node(op, ch) => {
            TreeMonomial::Node(*op, ch.iter().map(|c| map_labels(c, f)).collect())
        }
    }
}

/// All two-block shuffles for grafting an `inner_arity` tree onto input `i`
/// of an `outer_arity` tree. There are `C(m-1 + n-i, m-1)` of them.
pub fn enumerate_shuffles(i: usize, inner_arity: usize, outer_arity: usize) -> Vec<Vec<Label>> {
    let total = inner_arity + outer_arity - 1;
    let pool: Vec<Label> = (i as Label + 1..=total as Label).collect();
    pool.iter()
        .copied()
        .combinations(inner_arity - 1)
        .map(|chosen| {
            let rest = pool.iter().copied().filter(|x| !chosen.contains(x));
            chosen.iter().copied().chain(rest).collect()
        })
        .collect()
}

/// Every embedding of `v` into `w`, ordered by anchor vertex in preorder.
pub fn divides(v: &TreeMonomial, w: &TreeMonomial) -> Vec<Embedding> {
    if v.degree() == 0 || v.degree() > w.degree() {
        return Vec::new();
    }
    let k = v.arity();
    let mut out = Vec::new();
    let mut counter = 0usize;
    let mut anchors = Vec::new();
    collect_anchors(w, &mut counter, &mut Vec::new(), &mut anchors);
    for (anchor_idx, path) in anchors {
        let sub = subtree_at(w, &path);
        let mut hanging: Vec<Option<&TreeMonomial>> = vec![None; k];
        let mut vmap = Vec::new();
        if !match_pattern(v, sub, anchor_idx, &mut hanging, &mut vmap) {
            continue;
        }
        let hanging: Vec<&TreeMonomial> = hanging
            .into_iter()
            .map(|h| h.expect("leaf matched"))
            .collect();
        // leaf l of v must reach the l-th smallest minimal leaf among the hanging subtrees
        let mins: Vec<Label> = hanging.iter().map(|h| h.min_leaf()).collect();
        let mut sorted = mins.clone();
        sorted.sort_unstable();
        if mins != sorted {
            continue;
        }
        let script = build_script(w, &path, &hanging);
        out.push(Embedding {
            divisor: v.clone(),
            dividend: w.clone(),
            vertex_map: vmap,
            script,
        });
    }
    out
}

fn collect_anchors(
    t: &TreeMonomial,
    counter: &mut usize,
    path: &mut Vec<usize>,
    out: &mut Vec<(usize, Vec<usize>)>,
) {
    if let TreeMonomial::Node(_, ch) = t {
        out.push((*counter, path.clone()));
        *counter += 1;
        for (i, c) in ch.iter().enumerate() {
            path.push(i);
            collect_anchors(c, counter, path, out);
            path.pop();
        }
    }
}

fn subtree_at<'a>(t: &'a TreeMonomial, path: &[usize]) -> &'a TreeMonomial {
    path.iter().fold(t, |t, &i| match t {
        TreeMonomial::Node(_, ch) => &ch[i],
        TreeMonomial::Leaf(_) => unreachable!("path leads through a leaf"),
    })
}

/// Preorder vertex count of a subtree; used to advance vertex indices.
fn count_nodes(t: &TreeMonomial) -> usize {
    t.degree()
}

fn match_pattern<'a>(
    v: &TreeMonomial,
    w: &'a TreeMonomial,
    w_index: usize,
    hanging: &mut [Option<&'a TreeMonomial>],
    vmap: &mut Vec<usize>,
) -> bool {
    match (v, w) {
        (TreeMonomial::Leaf(l), _) => {
            hanging[*l as usize - 1] = Some(w);
            true
        }
        (TreeMonomial::Node(..), TreeMonomial::Leaf(_)) => false,
        (TreeMonomial::Node(g, vc), TreeMonomial::Node(h, wc)) => {
            if g != h || vc.len() != wc.len() {
                return false;
            }
            vmap.push(w_index);
            let mut next = w_index + 1;
            for (vchild, wchild) in vc.iter().zip(wc) {
                if !match_pattern(vchild, wchild, next, hanging, vmap) {
                    return false;
                }
                next += count_nodes(wchild);
            }
            true
        }
    }
}

/// Labels of `t` read in sorted order.
fn sorted_labels(t: &TreeMonomial) -> Vec<Label> {
    t.leaf_set().into_iter().collect()
}

/// Position (1-based) of `x` in the sorted list of block minima.
fn rank_of(mins: &[Label], x: Label) -> Label {
    mins.iter().filter(|&&m| m < x).count() as Label + 1
}

/// Reconstructs `w` from the divisor by grafting the hanging subtrees one at a
/// time and finally placing the result into its context.
fn build_script(
    w: &TreeMonomial,
    path: &[usize],
    hanging: &[&TreeMonomial],
) -> Vec<CompositionStep> {
    let mut script = Vec::new();
    // blocks[p] = final labels (within the anchored subtree) owned by current leaf p+1
    let mut blocks: Vec<Vec<Label>> = hanging.iter().map(|h| sorted_labels(h)).collect();
    for (l, h) in hanging.iter().enumerate().rev() {
        if h.is_leaf() {
            continue;
        }
        let mins: Vec<Label> = blocks.iter().map(|b| b[0]).collect();
        let position = rank_of(&mins, blocks[l][0]);
        let expanded: Vec<Vec<Label>> = blocks
            .iter()
            .enumerate()
            .flat_map(|(idx, b)| {
                if idx == l {
                    b.iter().map(|&x| vec![x]).collect::<Vec<_>>()
                } else {
                    vec![b.clone()]
                }
            })
            .collect();
        let new_mins: Vec<Label> = expanded.iter().map(|b| b[0]).collect();
        let b_tail: Vec<Label> = blocks[l][1..]
            .iter()
            .map(|&x| rank_of(&new_mins, x))
            .collect();
        let mut a_tail: Vec<Label> = blocks
            .iter()
            .filter(|b| b[0] > blocks[l][0])
            .map(|b| rank_of(&new_mins, b[0]))
            .collect();
        a_tail.sort_unstable();
        let mut shuffle = b_tail;
        shuffle.extend(a_tail);
        script.push(CompositionStep::Inner {
            position,
            shuffle,
            operand: h.standardize(),
        });
        blocks = expanded;
    }
    if !path.is_empty() {
        let anchored = subtree_at(w, path);
        let inside = anchored.leaf_set();
        let hole_label = *inside.iter().next().expect("nonempty subtree");
        let host = replace_at(w, path, TreeMonomial::Leaf(hole_label));
        let host_labels = sorted_labels(&host);
        let position = rank_of(&host_labels, hole_label);
        let b_tail = inside.iter().skip(1).copied();
        let a_tail = host_labels.iter().copied().filter(|&x| x > hole_label);
        let shuffle: Vec<Label> = b_tail.chain(a_tail).collect();
        script.push(CompositionStep::Outer {
            host: host.standardize(),
            position,
            shuffle,
        });
    }
    script
}

fn replace_at(t: &TreeMonomial, path: &[usize], with: TreeMonomial) -> TreeMonomial {
    match path.split_first() {
        None => with,
        Some((&i, rest)) => match t {
            TreeMonomial::Node(op, ch) => {
                let mut ch = ch.clone();
                ch[i] = replace_at(&ch[i], rest, with);
                TreeMonomial::Node(*op, ch)
            }
            TreeMonomial::Leaf(_) => unreachable!("path leads through a leaf"),
        },
    }
}

/// Replays an embedding's composition script with `z` in place of the divisor.
pub fn substitute(e: &Embedding, z: &TreeMonomial) -> Result<TreeMonomial> {
    let expected = e.divisor.arity();
    if z.arity() != expected {
        return Err(Error::ArityMismatch {
            expected,
            found: z.arity(),
        });
    }
    let mut current = z.clone();
    for step in &e.script {
        current = match step {
            CompositionStep::Inner {
                position,
                shuffle,
                operand,
            } => elementary_composition(&current, *position, shuffle, operand)?,
            CompositionStep::Outer {
                host,
                position,
                shuffle,
            } => elementary_composition(host, *position, shuffle, &current)?,
        };
    }
    Ok(current)
}

/// Operation symbols on the embedded vertices, in divisor preorder.
pub fn embedded_ops(e: &Embedding) -> Vec<OpId> {
    let nodes = e.dividend.nodes_preorder();
    e.vertex_map
        .iter()
        .map(|&i| match nodes[i] {
            TreeMonomial::Node(op, _) => *op,
            TreeMonomial::Leaf(_) => unreachable!("vertex map points at a vertex"),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{Generator, Signature, TreeMonomial as T};

    fn l(x: Label) -> T {
        T::Leaf(x)
    }

    fn sig() -> (Signature, OpId, OpId) {
        let mut s = Signature::new();
        let a = s.add(Generator::new("alpha", 1)).unwrap();
        let m = s.add(Generator::new("m", 2)).unwrap();
        (s, a, m)
    }

    #[test]
    fn grafting_examples() {
        let (s, _, m) = sig();
        let c = T::node(m, vec![l(1), l(2)]);
        let r = elementary_composition(&c, 1, &[2, 3], &c).unwrap();
        assert_eq!(r.display(&s).to_string(), "m(m(1,2),3)");
        let r = elementary_composition(&c, 2, &[3], &c).unwrap();
        assert_eq!(r.display(&s).to_string(), "m(1,m(2,3))");
        let r = elementary_composition(&c, 1, &[3, 2], &c).unwrap();
        assert_eq!(r.display(&s).to_string(), "m(m(1,3),2)");
        assert!(matches!(
            elementary_composition(&c, 3, &[], &c),
            Err(Error::BadPosition { .. })
        ));
        assert_eq!(
            elementary_composition(&c, 2, &[2], &c),
            Err(Error::NotAShuffle)
        );
    }

    #[test]
    fn shuffle_counts() {
        assert_eq!(enumerate_shuffles(1, 2, 2).len(), 2);
        assert_eq!(enumerate_shuffles(2, 2, 2).len(), 1);
        assert_eq!(enumerate_shuffles(1, 1, 1).len(), 1);
        assert_eq!(enumerate_shuffles(1, 3, 3).len(), 6);
        let (_, _, m) = sig();
        let c = T::node(m, vec![l(1), l(2)]);
        let results: Vec<T> = enumerate_shuffles(1, 2, 2)
            .iter()
            .map(|s| elementary_composition(&c, 1, s, &c).unwrap())
            .collect();
        assert_eq!(results.len(), 2);
        assert_ne!(results[0], results[1]);
    }

    #[test]
    fn divisibility_examples() {
        let (_, a, m) = sig();
        let c = T::node(m, vec![l(1), l(2)]);
        let left = T::node(m, vec![c.clone(), l(3)]);
        let es = divides(&c, &left);
        assert_eq!(es.len(), 2);
        assert_eq!(es[0].vertex_map, vec![0]);
        assert_eq!(es[1].vertex_map, vec![1]);
        assert!(divides(&left, &c).is_empty());

        let pattern = T::node(a, vec![c.clone()]);
        let ii0_left = T::node(m, vec![T::node(a, vec![c.clone()]), l(3)]);
        assert_eq!(divides(&pattern, &ii0_left).len(), 1);
    }

    #[test]
    fn label_rule_rejects_misordered_leaves() {
        let (_, _, m) = sig();
        let twisted = T::node(m, vec![T::node(m, vec![l(1), l(3)]), l(2)]);
        let straight = T::node(m, vec![T::node(m, vec![l(1), l(2)]), l(3)]);
        assert!(divides(&twisted, &straight).is_empty());
        assert_eq!(divides(&twisted, &twisted).len(), 1);
    }

    #[test]
    fn substitution_replays_script() {
        let (s, _, m) = sig();
        let c = T::node(m, vec![l(1), l(2)]);
        let left3 = T::node(m, vec![c.clone(), l(3)]);
        let right3 = T::node(m, vec![l(1), T::node(m, vec![l(2), l(3)])]);
        let left4 = T::node(m, vec![left3.clone(), l(4)]);
        let es = divides(&left3, &left4);
        assert_eq!(es.len(), 2);
        for e in &es {
            assert_eq!(substitute(e, &e.divisor).unwrap(), left4);
        }
        let root = es.iter().find(|e| e.anchor() == 0).unwrap();
        assert_eq!(
            substitute(root, &right3).unwrap().display(&s).to_string(),
            "m(m(1,2),m(3,4))"
        );
        let lower = es.iter().find(|e| e.anchor() == 1).unwrap();
        assert_eq!(
            substitute(lower, &right3).unwrap().display(&s).to_string(),
            "m(m(1,m(2,3)),4)"
        );
        assert!(matches!(
            substitute(lower, &c),
            Err(Error::ArityMismatch { .. })
        ));
    }
}
