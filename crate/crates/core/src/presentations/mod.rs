//! Operad presentations: the built-in catalogue, the symmetric-to-shuffle
//! expander and the text format.

mod expand;
mod parse;

use num_integer::binomial;

pub use expand::{shuffle_expand, SymRelation, SymTerm};
pub use parse::{parse_presentation, render};

use crate::error::{Error, Result};
use crate::order::OrderSpec;
use crate::poly::{q, TreePolynomial};
use crate::tree::{validate_shuffle, Generator, Mode, Signature, Symmetry, TreeMonomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum OrderChoice {
    #[default]
    PathLex,
    ForestLex,
    /// Path-lex with conformal symbols `(n, j)` ordered by `j` then `n`, each as `0 < 2 < 3 < ... < 1`.
    Clie,
}

impl OrderChoice {
    pub fn spec(self, sig: &Signature) -> OrderSpec {
        match self {
            OrderChoice::PathLex => OrderSpec::path_lex(sig),
            OrderChoice::ForestLex => OrderSpec::forest_lex(sig),
            OrderChoice::Clie => OrderSpec::clie(sig),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OrderChoice::PathLex => "path-lex",
            OrderChoice::ForestLex => "forest-lex",
            OrderChoice::Clie => "clie",
        }
    }
}

/// Truncation parameters of the conformal Lie family: products vanish above
/// `k`, relations are emitted for `n, m <= nmax`, and generators `(p, j)` exist for `j <= jmax`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClieParams {
    pub k: usize,
    pub nmax: usize,
    pub jmax: usize,
}

impl Default for ClieParams {
    fn default() -> Self {
        ClieParams {
            k: 1,
            nmax: 2,
            jmax: 2,
        }
    }
}

/// Which of the two Gelfand–Dorfman conventions to encode.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum GdConvention {
    /// The relation list exactly as stated (right Novikov).
    #[default]
    Right,
    /// The same list for the opposite product `a∘'b = b∘a`.
    Left,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct BuiltinParams {
    pub clie: Option<ClieParams>,
    pub convention: GdConvention,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub name: String,
    pub mode: Mode,
    pub signature: Signature,
    pub relations: Vec<TreePolynomial>,
    pub order: OrderChoice,
    pub order_spec: OrderSpec,
    pub family_params: Option<ClieParams>,
    /// Truncation notes produced while building the presentation.
    pub warnings: Vec<String>,
}

impl Presentation {
    /// Checks arity-homogeneity and planar validity of every relation.
    pub fn validate(&self) -> Result<()> {
        for r in &self.relations {
            let arity = r.arity();
            for (t, _) in r.terms() {
                t.check_signature(&self.signature)?;
                if t.arity() != arity {
                    return Err(Error::ArityMismatch {
                        expected: arity,
                        found: t.arity(),
                    });
                }
                let ok = match self.mode {
                    Mode::Nonsymmetric => t.is_nonsymmetric(),
                    Mode::Shuffle => validate_shuffle(t) && t.is_standard(),
                };
                if !ok {
                    return Err(Error::InvalidMonomial(
                        t.display(&self.signature).to_string(),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn with_order(mut self, order: OrderChoice) -> Self {
        self.order = order;
        self.order_spec = order.spec(&self.signature);
        self
    }

    pub fn relation_text(&self, i: usize) -> String {
        self.relations[i]
            .display_sorted(&self.signature, &self.order_spec)
            .to_string()
    }
}

pub const BUILTIN_NAMES: &[&str] = &[
    "magma",
    "ass",
    "hom_ass_I1",
    "hom_ass_I2",
    "hom_ass_I3",
    "hom_ass_II0",
    "hom_ass_II1",
    "hom_ass_II2",
    "hom_ass_II3",
    "hom_ass_III",
    "hom_ass_IIIp",
    "hom_ass_IIIpp",
    "lie",
    "novikov",
    "gd",
    "clie",
];

/// The ten Hom-deformations of associativity, as `(name, left - right)`.
pub const HOM_ASS: &[(&str, &str)] = &[
    ("hom_ass_I1", "m(m(1,2),alpha(3)) - m(alpha(1),m(2,3))"),
    ("hom_ass_I2", "m(m(1,alpha(2)),3) - m(1,m(alpha(2),3))"),
    ("hom_ass_I3", "m(m(alpha(1),2),3) - m(1,m(2,alpha(3)))"),
    ("hom_ass_II0", "m(alpha(m(1,2)),3) - m(1,alpha(m(2,3)))"),
    (
        "hom_ass_II1",
        "m(m(alpha(1),alpha(2)),3) - m(1,m(alpha(2),alpha(3)))",
    ),
    (
        "hom_ass_II2",
        "m(m(alpha(1),2),alpha(3)) - m(alpha(1),m(2,alpha(3)))",
    ),
    (
        "hom_ass_II3",
        "m(m(1,alpha(2)),alpha(3)) - m(alpha(1),m(alpha(2),3))",
    ),
    ("hom_ass_III", "alpha(m(m(1,2),3)) - alpha(m(1,m(2,3)))"),
    (
        "hom_ass_IIIp",
        "m(alpha(m(1,2)),alpha(3)) - m(alpha(1),alpha(m(2,3)))",
    ),
    (
        "hom_ass_IIIpp",
        "m(m(alpha(1),alpha(2)),alpha(3)) - m(alpha(1),m(alpha(2),alpha(3)))",
    ),
];

/// Gelfand–Dorfman relations in the variables `a, b, c`: `o` is the
/// Novikov product and `b` the Lie bracket.
pub const GD_RELATIONS: &[&str] = &[
    "o(o(a,b),c) - o(a,o(b,c)) - o(o(b,a),c) + o(b,o(a,c))",
    "o(o(a,b),c) - o(o(a,c),b)",
    "br(a,b) + br(b,a)",
    "br(br(a,b),c) + br(br(c,a),b) + br(br(b,c),a)",
    "br(o(c,a),b) - br(o(c,b),a) + o(br(c,a),b) - o(br(c,b),a) - o(c,br(a,b))",
];

fn nonsymmetric(name: &str, gens: &[Generator], relations: &[&str]) -> Result<Presentation> {
    let mut sig = Signature::new();
    for g in gens {
        sig.add(g.clone())?;
    }
    let relations = relations
        .iter()
        .map(|r| parse::relation_from_text(r, &sig, Mode::Nonsymmetric, 1, 0))
        .collect::<Result<Vec<_>>>()?;
    let order = OrderChoice::PathLex;
    Ok(Presentation {
        name: name.to_string(),
        mode: Mode::Nonsymmetric,
        order_spec: order.spec(&sig),
        order,
        signature: sig,
        relations,
        family_params: None,
        warnings: Vec::new(),
    })
}

fn symmetric(
    name: &str,
    gens: &[Generator],
    relations: &[&str],
    convention: GdConvention,
) -> Result<Presentation> {
    let rels = relations
        .iter()
        .map(|r| {
            let rel = SymRelation::parse(r)?;
            Ok(match convention {
                GdConvention::Right => rel,
                GdConvention::Left => rel.opposite("o"),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    shuffle_expand(name, gens, &rels)
}

/// Name of the conformal product generator `{a,b}_{n,j}`.
pub fn clie_generator_name(n: usize, j: usize) -> String {
    format!("c{n}_{j}")
}

/// The shuffle presentation of the conformal Lie operad, truncated by `params`.
///
/// For `a < b < c` and `0 <= n, m <= nmax` the relation reads
/// `{a,{b,c}_{n,0}}_{m,0} - sum_{j<=k} (-1)^{n+j} {{a,c}_{m,0},b}_{n+j,j} - sum_{j<=m} C(m,j) {{a,b}_{j,0},c}_{n+m-j,0}`.
pub fn clie(params: ClieParams) -> Result<Presentation> {
    let ClieParams { k, nmax, jmax } = params;
    let pmax = (2 * nmax).max(nmax + k);
    let mut sig = Signature::new();
    for j in 0..=jmax {
        for p in 0..=pmax {
            sig.add(Generator::indexed(
                clie_generator_name(p, j),
                2,
                vec![p as i64, j as i64],
            ))?;
        }
    }
    let op = |p: usize, j: usize| sig.lookup(&clie_generator_name(p, j)).expect("declared");
    let leaf = TreeMonomial::Leaf;
    let node = |p, j, ch| TreeMonomial::Node(op(p, j), ch);
    let mut warnings = Vec::new();
    let mut relations = Vec::new();
    for n in 0..=nmax {
        for m in 0..=nmax {
            let mut r = TreePolynomial::zero(3);
            r.add_term(
                node(m, 0, vec![leaf(1), node(n, 0, vec![leaf(2), leaf(3)])]),
                q(1),
            );
            for j in 0..=k {
                if j > jmax {
                    warnings.push(format!(
                        "TRUNCATED: relation (n={n}, m={m}) drops the term with symbol ({}, {j}) since j > {jmax}",
                        n + j
                    ));
                    continue;
                }
                let sign = if (n + j) % 2 == 0 { -1 } else { 1 };
                r.add_term(
                    node(n + j, j, vec![node(m, 0, vec![leaf(1), leaf(3)]), leaf(2)]),
                    q(sign),
                );
            }
            for j in 0..=m {
                let c = binomial(m as i64, j as i64);
                r.add_term(
                    node(
                        m + n - j,
                        0,
                        vec![node(j, 0, vec![leaf(1), leaf(2)]), leaf(3)],
                    ),
                    q(-c),
                );
            }
            relations.push(r);
        }
    }
    let order = OrderChoice::Clie;
    Ok(Presentation {
        name: "clie".into(),
        mode: Mode::Shuffle,
        order_spec: order.spec(&sig),
        order,
        signature: sig,
        relations,
        family_params: Some(params),
        warnings,
    })
}

/// Looks up a presentation from the built-in catalogue.
pub fn builtin(name: &str, params: Option<&BuiltinParams>) -> Result<Presentation> {
    let alpha = || Generator::new("alpha", 1);
    let m = || Generator::new("m", 2);
    let convention = params.map(|p| p.convention).unwrap_or_default();
    match name {
        "magma" => nonsymmetric(name, &[m()], &[]),
        "ass" => nonsymmetric(name, &[m()], &["m(m(1,2),3) - m(1,m(2,3))"]),
        "lie" => symmetric(
            name,
            &[Generator::new("br", 2).with_symmetry(Symmetry::Antisymmetric)],
            &GD_RELATIONS[2..4],
            GdConvention::Right,
        ),
        "novikov" => symmetric(
            name,
            &[Generator::new("o", 2)],
            &GD_RELATIONS[..2],
            convention,
        ),
        "gd" => symmetric(
            name,
            &[
                Generator::new("o", 2),
                Generator::new("br", 2).with_symmetry(Symmetry::Antisymmetric),
            ],
            GD_RELATIONS,
            convention,
        ),
        "clie" => match params.and_then(|p| p.clie) {
            Some(c) => clie(c),
            None => Err(Error::MissingParams(name.into())),
        },
        _ => match HOM_ASS.iter().find(|(n, _)| *n == name) {
            Some((n, rel)) => nonsymmetric(n, &[alpha(), m()], &[rel]),
            None => Err(Error::UnknownName(name.into())),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_builtin_is_valid() {
        let params = BuiltinParams {
            clie: Some(ClieParams::default()),
            ..Default::default()
        };
        for name in BUILTIN_NAMES {
            let p = builtin(name, Some(&params)).unwrap();
            p.validate().unwrap();
            assert_eq!(&p.name, name);
        }
    }

    #[test]
    fn unknown_and_missing() {
        assert_eq!(
            builtin("nope", None).unwrap_err(),
            Error::UnknownName("nope".into())
        );
        assert_eq!(
            builtin("clie", None).unwrap_err(),
            Error::MissingParams("clie".into())
        );
    }

    #[test]
    fn ii0_relation() {
        let p = builtin("hom_ass_II0", None).unwrap();
        assert_eq!(p.relations.len(), 1);
        assert_eq!(
            p.relation_text(0),
            "m(alpha(m(1,2)),3) - m(1,alpha(m(2,3)))"
        );
    }

    #[test]
    fn clie_term_counts() {
        let params = ClieParams {
            k: 1,
            nmax: 2,
            jmax: 2,
        };
        let p = clie(params).unwrap();
        assert_eq!(p.relations.len(), 9);
        for (idx, r) in p.relations.iter().enumerate() {
            let m = idx % 3;
            assert_eq!(r.len(), 1 + (params.k + 1) + (m + 1));
        }
        assert!(p.warnings.is_empty());
        let truncated = clie(ClieParams {
            k: 1,
            nmax: 2,
            jmax: 0,
        })
        .unwrap();
        assert_eq!(truncated.warnings.len(), 9);
        assert!(truncated.warnings[0].starts_with("TRUNCATED"));
    }

    #[test]
    fn gd_conventions_differ() {
        let right = builtin("gd", None).unwrap();
        let left = builtin(
            "gd",
            Some(&BuiltinParams {
                convention: GdConvention::Left,
                ..Default::default()
            }),
        )
        .unwrap();
        assert_ne!(right.relations, left.relations);
        assert_eq!(right.signature, left.signature);
    }
}
