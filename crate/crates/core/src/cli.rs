//! Report-producing driver behind the `operad` binary.
//!
//! Every command returns an [`Outcome`] instead of printing, so the binary
//! stays a thin argument parser and the reports can be tested directly.

use std::fmt::Write as _;
use std::path::PathBuf;

use crate::conformal::{
    check_gd_with, check_hom_gd, check_twist_identities, is_gd_morphism, lambda_bracket_from_gd,
    parse_algebra, parse_module, yau_twist, ConformalModule,
};
use crate::error::{Error, Result};
use crate::groebner::{
    buchberger, count_normal_monomials, find_ambiguities, is_confluent, koszul_report,
    overlap_bound,
};
use crate::poly::leading;
use crate::presentations::{
    builtin, clie, parse_presentation, BuiltinParams, ClieParams, GdConvention, OrderChoice,
    Presentation, HOM_ASS,
};
use crate::tree::{Mode, Signature, TreeMonomial};

pub const DEFAULT_MAX_DEGREE: usize = 4;
/// Large enough to reach the degree-5 ambiguities of every Hom-deformation.
pub const HOM_TABLE_MAX_DEGREE: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Machine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseStudy {
    HomTable,
    Clie,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Gb,
    Confluence,
    Koszul,
    Dims { upto: usize },
    Conformal,
    Casestudy(CaseStudy),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Builtin(String),
    File(PathBuf),
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub input: Input,
    /// `None` picks the command's default.
    pub max_degree: Option<usize>,
    pub order: Option<OrderChoice>,
    pub format: Format,
    pub expect_confluent: bool,
    pub clie: ClieParams,
    pub convention: GdConvention,
}

impl RunConfig {
    pub fn new(command: Command, input: Input) -> Self {
        RunConfig {
            command,
            input,
            max_degree: None,
            order: None,
            format: Format::Text,
            expect_confluent: false,
            clie: ClieParams::default(),
            convention: GdConvention::Right,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub report: String,
}

/// A failure with enough context to point at the offending input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub error: Error,
    pub context: Option<String>,
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.context {
            Some(c) => write!(f, "error[{}]: {c}: {}", self.error.name(), self.error),
            None => write!(f, "error[{}]: {}", self.error.name(), self.error),
        }
    }
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure {
            error,
            context: None,
        }
    }
}

/// Runs one command. Exit codes: 0 success, 1 a `--expect confluent`
/// violation, 2 an input error (reported on the returned string).
pub fn run(config: &RunConfig) -> Outcome {
    match dispatch(config) {
        Ok(o) => o,
        Err(f) => Outcome {
            code: 2,
            report: format!("{f}\n"),
        },
    }
}

fn dispatch(config: &RunConfig) -> std::result::Result<Outcome, Failure> {
    if config.max_degree.is_some_and(|d| d < 2) {
        return Err(Error::BoundTooSmall {
            bound: config.max_degree.unwrap_or(0),
            needed: 2,
        }
        .into());
    }
    match &config.command {
        Command::Gb => gb(config),
        Command::Confluence => confluence(config),
        Command::Koszul => koszul(config),
        Command::Dims { upto } => dims(config, *upto),
        Command::Conformal => conformal(config),
        Command::Casestudy(c) => Ok(casestudy(*c, config)?),
    }
}

fn read(path: &PathBuf) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        error: Error::UnknownName(path.display().to_string()),
        context: Some(format!("cannot read {}: {e}", path.display())),
    })
}

fn load(config: &RunConfig) -> std::result::Result<Presentation, Failure> {
    let p = match &config.input {
        Input::Builtin(name) => {
            let params = BuiltinParams {
                clie: Some(config.clie),
                convention: config.convention,
            };
            builtin(name, Some(&params))?
        }
        Input::File(path) => parse_presentation(&read(path)?).map_err(|error| Failure {
            error,
            context: Some(path.display().to_string()),
        })?,
        Input::None => return Err(Error::MissingParams("--builtin or --file".into()).into()),
    };
    Ok(match config.order {
        Some(o) => p.with_order(o),
        None => p,
    })
}

/// An explicit bound wins; otherwise the default, raised so that every
/// overlap of the input relations is examined.
fn degree(config: &RunConfig, p: &Presentation) -> usize {
    config
        .max_degree
        .unwrap_or_else(|| DEFAULT_MAX_DEGREE.max(overlap_bound(&p.relations)))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn expect_code(config: &RunConfig, confluent: bool) -> i32 {
    if config.expect_confluent && !confluent {
        1
    } else {
        0
    }
}

/// Indented text rendering of a tree.
pub fn tree_art(t: &TreeMonomial, sig: &Signature) -> String {
    fn go(
        t: &TreeMonomial,
        sig: &Signature,
        prefix: &str,
        last: bool,
        root: bool,
        out: &mut String,
    ) {
        let (branch, next) = match (root, last) {
            (true, _) => ("", String::new()),
            (false, true) => ("└─ ", format!("{prefix}   ")),
            (false, false) => ("├─ ", format!("{prefix}│  ")),
        };
        match t {
            TreeMonomial::Leaf(l) => {
                let _ = writeln!(out, "{prefix}{branch}{l}");
            }
            TreeMonomial::Node(op, ch) => {
                let _ = writeln!(out, "{prefix}{branch}{}", sig.get(*op).name);
                for (i, c) in ch.iter().enumerate() {
                    go(c, sig, &next, i + 1 == ch.len(), false, out);
                }
            }
        }
    }
    let mut out = String::new();
    go(t, sig, "", true, true, &mut out);
    out
}

fn header(p: &Presentation, config: &RunConfig, max_degree: usize) -> String {
    let mut out = format!(
        "presentation {} ({} mode, {} relations, order {}, max degree {max_degree})\n",
        p.name,
        match p.mode {
            Mode::Nonsymmetric => "nonsymmetric",
            Mode::Shuffle => "shuffle",
        },
        p.relations.len(),
        p.order.name(),
    );
    if config.format == Format::Text {
        for w in &p.warnings {
            out.push_str(w);
            out.push('\n');
        }
    }
    out
}

fn gb(config: &RunConfig) -> std::result::Result<Outcome, Failure> {
    let p = load(config)?;
    let d = degree(config, &p);
    let r = buchberger(&p, &p.order_spec, d)?;
    let confluent = r.failure_certificate.is_none();
    let mut out = String::new();
    match config.format {
        Format::Text => {
            out.push_str(&header(&p, config, d));
            let status = if confluent {
                "relations already form a Gröbner basis"
            } else {
                "completion added elements"
            };
            let _ = writeln!(
                out,
                "{status}; basis has {} elements up to degree {d}",
                r.basis.len()
            );
            if r.truncated {
                out.push_str("completion stopped at the basis size limit\n");
            } else if !r.complete {
                let _ = writeln!(
                    out,
                    "overlaps above degree {d} were not examined; the basis may be incomplete"
                );
            }
            for g in &r.basis {
                let _ = writeln!(out, "  {}", g.display_sorted(&r.signature, &r.spec));
            }
        }
        Format::Machine => {
            let _ = writeln!(out, "CONFLUENT {}", yes_no(confluent));
            let _ = writeln!(out, "COMPLETE {}", yes_no(r.complete));
            let _ = writeln!(out, "BASIS_SIZE {}", r.basis.len());
            let _ = writeln!(out, "BASIS_DEGREE {}", r.max_basis_weight());
            for g in &r.basis {
                let _ = writeln!(out, "GB {}", g.display_sorted(&r.signature, &r.spec));
            }
        }
    }
    Ok(Outcome {
        code: expect_code(config, confluent),
        report: out,
    })
}

fn confluence(config: &RunConfig) -> std::result::Result<Outcome, Failure> {
    let p = load(config)?;
    let d = degree(config, &p);
    let r = is_confluent(&p, &p.order_spec, d)?;
    let mut out = String::new();
    match config.format {
        Format::Text => {
            out.push_str(&header(&p, config, d));
            if r.confluent {
                let _ = writeln!(out, "CONFLUENT ({} overlaps checked)", r.overlaps_checked);
            } else {
                let (o, nf) = r.certificate.as_ref().expect("certificate");
                let _ = writeln!(out, "NOT CONFLUENT");
                let _ = writeln!(out, "ambiguity: {}", o.monomial.display(&p.signature));
                out.push_str(&tree_art(&o.monomial, &p.signature));
                let _ = writeln!(
                    out,
                    "irreducible difference: {}",
                    nf.display_sorted(&p.signature, &p.order_spec)
                );
            }
        }
        Format::Machine => {
            let _ = writeln!(out, "CONFLUENT {}", yes_no(r.confluent));
            let _ = writeln!(out, "OVERLAPS {}", r.overlaps_checked);
            if let Some((o, nf)) = &r.certificate {
                let _ = writeln!(out, "CERT {}", o.monomial.display(&p.signature));
                let _ = writeln!(
                    out,
                    "RESIDUE {}",
                    nf.display_sorted(&p.signature, &p.order_spec)
                );
            }
        }
    }
    Ok(Outcome {
        code: expect_code(config, r.confluent),
        report: out,
    })
}

fn koszul(config: &RunConfig) -> std::result::Result<Outcome, Failure> {
    let p = load(config)?;
    let d = degree(config, &p);
    let r = koszul_report(&p, &p.order_spec, d)?;
    let confluent = r.gb.failure_certificate.is_none();
    let mut out = String::new();
    match config.format {
        Format::Text => {
            out.push_str(&header(&p, config, d));
            let _ = writeln!(out, "{}", r.verdict);
            let _ = writeln!(
                out,
                "basis degree {} ({} elements)",
                r.basis_degree,
                r.gb.basis.len()
            );
        }
        Format::Machine => {
            let _ = writeln!(out, "VERDICT {}", r.verdict);
            let _ = writeln!(out, "CONFLUENT {}", yes_no(confluent));
            let _ = writeln!(out, "BASIS_DEGREE {}", r.basis_degree);
        }
    }
    Ok(Outcome {
        code: expect_code(config, confluent),
        report: out,
    })
}

fn dims(config: &RunConfig, upto: usize) -> std::result::Result<Outcome, Failure> {
    let p = load(config)?;
    // arity n needs monomials of degree n - 1
    let d = degree(config, &p).max(upto.saturating_sub(1));
    let r = buchberger(&p, &p.order_spec, d)?;
    let values = (1..=upto)
        .map(|n| count_normal_monomials(&r, n))
        .collect::<Result<Vec<u64>>>()?;
    let mut out = String::new();
    match config.format {
        Format::Text => {
            out.push_str(&header(&p, config, d));
            let line: Vec<String> = values.iter().map(u64::to_string).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        Format::Machine => {
            for (n, v) in values.iter().enumerate() {
                let _ = writeln!(out, "DIM {} {v}", n + 1);
            }
        }
    }
    Ok(Outcome {
        code: 0,
        report: out,
    })
}

fn verdicts(v: &[bool]) -> String {
    v.iter()
        .map(|b| if *b { "1" } else { "0" })
        .collect::<Vec<_>>()
        .join(" ")
}

fn module_report(m: &ConformalModule, prefix: &str, out: &mut String, format: Format) -> bool {
    let (c3, c4) = (m.check_antisymmetry(), m.check_jacobi());
    match format {
        Format::Text => {
            for (name, check) in [("antisymmetry", &c3), ("jacobi", &c4)] {
                let _ = writeln!(
                    out,
                    "{prefix}{name}: {}",
                    if check.holds { "holds" } else { "FAILS" }
                );
                if let Some(v) = &check.first_violation {
                    let _ = writeln!(out, "{prefix}  {}", v.describe(m));
                }
            }
        }
        Format::Machine => {
            let _ = writeln!(out, "{prefix}ANTISYMMETRY {}", yes_no(c3.holds));
            let _ = writeln!(out, "{prefix}JACOBI {}", yes_no(c4.holds));
        }
    }
    c3.holds && c4.holds
}

fn conformal(config: &RunConfig) -> std::result::Result<Outcome, Failure> {
    let Input::File(path) = &config.input else {
        return Err(Error::MissingParams("conformal needs --file".into()).into());
    };
    let text = read(path)?;
    let ctx = |error| Failure {
        error,
        context: Some(path.display().to_string()),
    };
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    let machine = config.format == Format::Machine;
    let mut out = String::new();
    if first.starts_with("conformal") {
        let m = parse_module(&text).map_err(ctx)?;
        module_report(&m, "", &mut out, config.format);
        return Ok(Outcome {
            code: 0,
            report: out,
        });
    }
    let alg = parse_algebra(&text).map_err(ctx)?;
    let right = check_gd_with(&alg, GdConvention::Right);
    let left = check_gd_with(&alg, GdConvention::Left);
    if machine {
        let _ = writeln!(out, "GD_RIGHT {}", verdicts(&right));
        let _ = writeln!(out, "GD_LEFT {}", verdicts(&left));
    } else {
        let _ = writeln!(
            out,
            "GD identities (1)-(5), as stated: {}",
            verdicts(&right)
        );
        let _ = writeln!(
            out,
            "GD identities (1)-(5), opposite product: {}",
            verdicts(&left)
        );
        out.push_str("lambda-bracket module:\n");
    }
    module_report(
        &lambda_bracket_from_gd(&alg),
        if machine { "BRIDGE_" } else { "  " },
        &mut out,
        config.format,
    );
    if let Some(alpha) = &alg.alpha {
        let hom = check_hom_gd(&alg).map_err(ctx)?;
        let morphism = is_gd_morphism(&alg, alpha).map_err(ctx)?;
        if machine {
            let _ = writeln!(out, "HOM_GD {}", verdicts(&hom));
            let _ = writeln!(out, "MORPHISM {}", yes_no(morphism));
        } else {
            let _ = writeln!(out, "Hom-GD identities (1*)-(5*): {}", verdicts(&hom));
            let _ = writeln!(out, "alpha is a morphism: {}", yes_no(morphism));
        }
        if morphism {
            let twisted = check_hom_gd(&yau_twist(&alg, alpha).map_err(ctx)?).map_err(ctx)?;
            let ids = check_twist_identities(&alg, alpha).map_err(ctx)?;
            if machine {
                let _ = writeln!(out, "TWIST_HOM_GD {}", verdicts(&twisted));
                let _ = writeln!(out, "TWIST_IDENTITIES {}", verdicts(&ids));
            } else {
                let _ = writeln!(
                    out,
                    "twisted algebra, Hom-GD identities: {}",
                    verdicts(&twisted)
                );
                let _ = writeln!(out, "twist identities 1-4: {}", verdicts(&ids));
            }
        }
    }
    Ok(Outcome {
        code: 0,
        report: out,
    })
}

/// One row of the Hom-deformation table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomRow {
    pub name: String,
    pub confluent: bool,
    pub overlaps: usize,
    pub certificate: Option<TreeMonomial>,
}

/// Confluence of every Hom-deformation of associativity.
pub fn hom_table(max_degree: usize) -> Result<(Signature, Vec<HomRow>)> {
    let mut sig = None;
    let mut rows = Vec::new();
    for (name, _) in HOM_ASS {
        let p = builtin(name, None)?;
        let r = is_confluent(&p, &p.order_spec, max_degree)?;
        rows.push(HomRow {
            name: name.trim_start_matches("hom_ass_").to_string(),
            confluent: r.confluent,
            overlaps: r.overlaps_checked,
            certificate: r.certificate.map(|(o, _)| o.monomial),
        });
        sig.get_or_insert(p.signature);
    }
    Ok((sig.expect("nonempty table"), rows))
}

/// The truncated conformal Lie check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClieSummary {
    pub presentation: Presentation,
    pub leading_terms: Vec<TreeMonomial>,
    pub ambiguities: usize,
    /// Leading terms have the shape `{{1,3}_(m,0), 2}_(n', 1)`.
    pub comb_shape: bool,
    pub basis_degree: usize,
    pub certified: bool,
}

pub fn clie_summary(params: ClieParams, max_degree: usize) -> Result<ClieSummary> {
    let p = clie(params)?;
    let leads: Vec<TreeMonomial> = p
        .relations
        .iter()
        .map(|r| leading(r, &p.order_spec).map(|x| x.0))
        .collect::<Result<_>>()?;
    let ambiguities = find_ambiguities(&leads, p.mode, &p.order_spec, max_degree).len();
    let key = |op| p.signature.get(op).symbol_key.clone();
    let comb_shape = leads.iter().all(|t| match t {
        TreeMonomial::Node(outer, ch) => match ch.as_slice() {
            [TreeMonomial::Node(inner, inner_ch), TreeMonomial::Leaf(2)] => {
                inner_ch.as_slice() == [TreeMonomial::Leaf(1), TreeMonomial::Leaf(3)]
                    && key(*inner)[1] == 0
                    && key(*outer)[1] == 1
            }
            _ => false,
        },
        _ => false,
    });
    let basis_degree = p.relations.iter().map(|r| r.weight()).max().unwrap_or(0);
    let quadratic = p
        .relations
        .iter()
        .all(|r| r.terms().all(|(t, _)| t.weight() == 2));
    let certified = ambiguities == 0 && quadratic;
    Ok(ClieSummary {
        presentation: p,
        leading_terms: leads,
        ambiguities,
        comb_shape,
        basis_degree,
        certified,
    })
}

pub fn casestudy(which: CaseStudy, config: &RunConfig) -> Result<Outcome> {
    let mut out = String::new();
    match which {
        CaseStudy::HomTable => {
            let d = config.max_degree.unwrap_or(HOM_TABLE_MAX_DEGREE);
            let (sig, rows) = hom_table(d)?;
            for r in &rows {
                match config.format {
                    Format::Text => {
                        let verdict = if r.confluent {
                            "CONFLUENT"
                        } else {
                            "NOT-CONFLUENT"
                        };
                        let cert = r
                            .certificate
                            .as_ref()
                            .map(|t| format!("  {}", t.display(&sig)))
                            .unwrap_or_default();
                        let _ = writeln!(
                            out,
                            "{:<6} {verdict:<14} overlaps {:<3}{cert}",
                            r.name, r.overlaps
                        );
                    }
                    Format::Machine => {
                        let _ = writeln!(out, "CONFLUENT {} {}", r.name, yes_no(r.confluent));
                        if let Some(t) = &r.certificate {
                            let _ = writeln!(out, "CERT {} {}", r.name, t.display(&sig));
                        }
                    }
                }
            }
            let confluent: Vec<&str> = rows
                .iter()
                .filter(|r| r.confluent)
                .map(|r| r.name.as_str())
                .collect();
            if config.format == Format::Text {
                let _ = writeln!(out, "confluent up to degree {d}: {}", confluent.join(", "));
            }
            let all = confluent.len() == rows.len();
            Ok(Outcome {
                code: expect_code(config, all),
                report: out,
            })
        }
        CaseStudy::Clie => {
            let d = config.max_degree.unwrap_or(DEFAULT_MAX_DEGREE);
            let s = clie_summary(config.clie, d)?;
            let p = &s.presentation;
            let verdict = if s.certified {
                "KOSZUL-CERTIFIED (truncated)"
            } else {
                "INCONCLUSIVE-AT-BOUND"
            };
            match config.format {
                Format::Text => {
                    let ClieParams { k, nmax, jmax } = config.clie;
                    let _ = writeln!(
                        out,
                        "conformal Lie operad, k={k} N={nmax} J={jmax}, {} relations",
                        p.relations.len()
                    );
                    for w in &p.warnings {
                        let _ = writeln!(out, "{w}");
                    }
                    for t in &s.leading_terms {
                        let _ = writeln!(out, "  leading {}", t.display(&p.signature));
                    }
                    let _ = writeln!(
                        out,
                        "leading terms {} the comb shape {{{{1,3}}_(m,0),2}}_(n+j,1)",
                        if s.comb_shape {
                            "all have"
                        } else {
                            "do not all have"
                        }
                    );
                    let _ = writeln!(
                        out,
                        "AMBIGUITIES: {}; BASIS DEGREE: {}; VERDICT: {verdict}",
                        s.ambiguities, s.basis_degree
                    );
                }
                Format::Machine => {
                    let _ = writeln!(out, "AMBIGUITIES {}", s.ambiguities);
                    let _ = writeln!(out, "BASIS_DEGREE {}", s.basis_degree);
                    let _ = writeln!(out, "COMB_SHAPE {}", yes_no(s.comb_shape));
                    let _ = writeln!(out, "VERDICT {verdict}");
                    for w in &p.warnings {
                        let _ = writeln!(out, "WARNING {w}");
                    }
                }
            }
            Ok(Outcome {
                code: expect_code(config, s.ambiguities == 0),
                report: out,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(command: Command, name: &str) -> RunConfig {
        RunConfig::new(command, Input::Builtin(name.into()))
    }

    #[test]
    fn magma_dims() {
        let mut c = cfg(Command::Dims { upto: 6 }, "magma");
        let o = run(&c);
        assert_eq!(o.code, 0);
        assert!(o.report.ends_with("1 1 2 5 14 42\n"), "{}", o.report);
        c.format = Format::Machine;
        assert!(run(&c).report.contains("DIM 6 42\n"));
    }

    #[test]
    fn exit_codes() {
        let mut c = cfg(Command::Confluence, "hom_ass_I2");
        c.max_degree = Some(5);
        assert_eq!(run(&c).code, 0);
        c.expect_confluent = true;
        let o = run(&c);
        assert_eq!(o.code, 1);
        assert!(o.report.contains("NOT CONFLUENT"));
        let o = run(&cfg(Command::Gb, "no_such_operad"));
        assert_eq!(o.code, 2);
        assert!(o.report.starts_with("error[UnknownName]"));
    }

    #[test]
    fn tree_art_layout() {
        let p = builtin("ass", None).unwrap();
        let t = p.relations[0].terms().next().unwrap().0.clone();
        let art = tree_art(&t, &p.signature);
        assert_eq!(art.lines().count(), 5);
        assert!(art.starts_with("m\n"));
    }
}
