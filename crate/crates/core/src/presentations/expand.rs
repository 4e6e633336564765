//! Passing from symmetric relations in named variables to shuffle relations.
//!
//! A binary generator `o` without symmetry becomes two shuffle generators:
//! `o(1,2)` stands for `x1 o x2` and `o_op(1,2)` for `x2 o x1`. An
//! antisymmetric generator keeps one shuffle generator and picks up a sign
//! when its inputs must be swapped; a symmetric one keeps one generator and
//! no sign.

use std::collections::{BTreeSet, HashMap, HashSet};

use itertools::Itertools;

use super::parse::{parse_signed_sum, RawTerm};
use super::{OrderChoice, Presentation};
use crate::error::{Error, Result};
use crate::poly::{Coeff, TreePolynomial};
use crate::tree::{Generator, Label, Mode, OpId, Signature, Symmetry, TreeMonomial};

/// A symmetric relation: a signed sum of terms in named variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymRelation {
    pub terms: Vec<(Coeff, SymTerm)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymTerm {
    Var(String),
    Op(String, Vec<SymTerm>),
}

impl SymTerm {
    fn vars(&self, out: &mut BTreeSet<String>) {
        match self {
            SymTerm::Var(v) => {
                out.insert(v.clone());
            }
            SymTerm::Op(_, args) => args.iter().for_each(|a| a.vars(out)),
        }
    }

    /// Swaps the two inputs of every occurrence of generator `name`.
    pub fn opposite(&self, name: &str) -> SymTerm {
        match self {
            SymTerm::Var(_) => self.clone(),
            SymTerm::Op(g, args) => {
                let mut args: Vec<SymTerm> = args.iter().map(|a| a.opposite(name)).collect();
                if g == name {
                    args.reverse();
                }
                SymTerm::Op(g.clone(), args)
            }
        }
    }
}

impl SymRelation {
    /// Reads `o(o(a,b),c) - o(a,o(b,c))`-style text.
    pub fn parse(text: &str) -> Result<SymRelation> {
        fn convert(raw: &RawTerm) -> Result<SymTerm> {
            match raw {
                RawTerm::Var(v, _) => Ok(SymTerm::Var(v.clone())),
                RawTerm::Op(g, _, args) => Ok(SymTerm::Op(
                    g.clone(),
                    args.iter().map(convert).collect::<Result<_>>()?,
                )),
                RawTerm::Label(_, col) => Err(Error::SyntaxError {
                    line: 1,
                    col: *col,
                    msg: "symmetric relations use variable names, not leaf numbers".into(),
                }),
            }
        }
        let terms = parse_signed_sum(text, 1, 0)?
            .iter()
            .map(|(c, raw)| Ok((c.clone(), convert(raw)?)))
            .collect::<Result<_>>()?;
        Ok(SymRelation { terms })
    }

    pub fn opposite(&self, name: &str) -> SymRelation {
        SymRelation {
            terms: self
                .terms
                .iter()
                .map(|(c, t)| (c.clone(), t.opposite(name)))
                .collect(),
        }
    }

    fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.terms.iter().for_each(|(_, t)| t.vars(&mut out));
        out
    }
}

struct ShuffleGens {
    sig: Signature,
    /// generator name -> (plain id, swapped id, symmetry)
    table: HashMap<String, (OpId, Option<OpId>, Symmetry, usize)>,
}

fn shuffle_generators(generators: &[Generator]) -> Result<ShuffleGens> {
    let mut sig = Signature::new();
    let mut table = HashMap::new();
    for g in generators {
        if g.arity > 2 {
            return Err(Error::UnsupportedArity(g.arity));
        }
        let plain = sig.add(g.clone())?;
        let swapped = if g.arity == 2 && g.symmetry == Symmetry::None {
            Some(sig.add(Generator::new(format!("{}_op", g.name), 2))?)
        } else {
            None
        };
        table.insert(g.name.clone(), (plain, swapped, g.symmetry, g.arity));
    }
    Ok(ShuffleGens { sig, table })
}

fn to_shuffle(
    t: &SymTerm,
    assign: &HashMap<&str, Label>,
    gens: &ShuffleGens,
) -> Result<(TreeMonomial, i64)> {
    match t {
        SymTerm::Var(v) => Ok((TreeMonomial::Leaf(assign[v.as_str()]), 1)),
        SymTerm::Op(name, args) => {
            let &(plain, swapped, symmetry, arity) = gens
                .table
                .get(name)
                .ok_or_else(|| Error::UnknownName(name.clone()))?;
            if args.len() != arity {
                return Err(Error::ArityMismatch {
                    expected: arity,
                    found: args.len(),
                });
            }
            let converted = args
                .iter()
                .map(|a| to_shuffle(a, assign, gens))
                .collect::<Result<Vec<_>>>()?;
            let sign: i64 = converted.iter().map(|(_, s)| s).product();
            let mut ch: Vec<TreeMonomial> = converted.into_iter().map(|(c, _)| c).collect();
            if arity == 1 || ch[0].min_leaf() < ch[1].min_leaf() {
                return Ok((TreeMonomial::Node(plain, ch), sign));
            }
            ch.swap(0, 1);
            Ok(match symmetry {
                Symmetry::None => (TreeMonomial::Node(swapped.expect("binary"), ch), sign),
                Symmetry::Antisymmetric => (TreeMonomial::Node(plain, ch), -sign),
                Symmetry::Symmetric => (TreeMonomial::Node(plain, ch), sign),
            })
        }
    }
}

/// Expands symmetric relations over every assignment of leaf labels to variables.
pub fn shuffle_expand(
    name: &str,
    generators: &[Generator],
    relations: &[SymRelation],
) -> Result<Presentation> {
    let gens = shuffle_generators(generators)?;
    let order = OrderChoice::PathLex;
    let spec = order.spec(&gens.sig);
    let mut out: Vec<TreePolynomial> = Vec::new();
    let mut seen = HashSet::new();
    for rel in relations {
        let vars: Vec<String> = rel.vars().into_iter().collect();
        let n = vars.len();
        for perm in (1..=n as Label).permutations(n) {
            let assign: HashMap<&str, Label> = vars.iter().map(String::as_str).zip(perm).collect();
            let mut poly = TreePolynomial::zero(n);
            for (c, t) in &rel.terms {
                let (tree, sign) = to_shuffle(t, &assign, &gens)?;
                poly.add_term(tree, c * Coeff::from_integer(sign.into()));
            }
            if poly.is_zero() {
                continue;
            }
            let monic = poly.monic(&spec);
            if seen.insert(monic.clone()) {
                out.push(monic);
            }
        }
    }
    Ok(Presentation {
        name: name.to_string(),
        mode: Mode::Shuffle,
        order_spec: spec,
        order,
        signature: gens.sig,
        relations: out,
        family_params: None,
        warnings: Vec::new(),
    })
}
