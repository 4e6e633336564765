use std::path::PathBuf;

use operad_groebner::cli::{run, CaseStudy, Command, Format, Input, RunConfig};
use operad_groebner::presentations::{
    builtin, parse_presentation, render, ClieParams, GdConvention,
};

fn shipped(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("presentations")
        .join(format!("{name}.op"))
}

fn machine(command: Command, input: Input) -> RunConfig {
    RunConfig {
        format: Format::Machine,
        ..RunConfig::new(command, input)
    }
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("operad-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn shipped_files_match_builtins() {
    for name in ["ass", "hom_ass_II0", "hom_ass_I2", "lie", "novikov", "gd"] {
        let text = std::fs::read_to_string(shipped(name)).unwrap();
        let parsed = parse_presentation(&text).unwrap();
        let b = builtin(name, None).unwrap();
        assert_eq!(parsed.relations, b.relations, "{name}");
        assert_eq!(
            parse_presentation(&render(&parsed)).unwrap(),
            parsed,
            "{name}"
        );
    }
}

#[test]
fn file_and_builtin_reports_agree() {
    for command in [Command::Gb, Command::Confluence, Command::Koszul] {
        let a = run(&machine(
            command.clone(),
            Input::Builtin("hom_ass_II0".into()),
        ));
        let b = run(&machine(
            command.clone(),
            Input::File(shipped("hom_ass_II0")),
        ));
        assert_eq!(a, b, "{command:?}");
        assert_eq!(a.code, 0);
    }
}

#[test]
fn machine_reports() {
    let o = run(&machine(
        Command::Confluence,
        Input::Builtin("hom_ass_I2".into()),
    ));
    assert!(o.report.contains("CONFLUENT no"));
    assert!(o
        .report
        .lines()
        .any(|l| l == "CERT m(m(m(1,alpha(2)),alpha(3)),4)"));
    let o = run(&machine(Command::Koszul, Input::Builtin("ass".into())));
    assert!(o.report.contains("VERDICT KOSZUL-CERTIFIED"));
    assert!(o.report.contains("BASIS_DEGREE 2"));
    let o = run(&machine(
        Command::Dims { upto: 6 },
        Input::Builtin("magma".into()),
    ));
    let dims: Vec<&str> = o.report.lines().filter(|l| l.starts_with("DIM")).collect();
    assert_eq!(
        dims,
        ["DIM 1 1", "DIM 2 1", "DIM 3 2", "DIM 4 5", "DIM 5 14", "DIM 6 42"]
    );
}

#[test]
fn machine_output_is_stable() {
    let config = machine(Command::Casestudy(CaseStudy::HomTable), Input::None);
    let first = run(&config);
    for _ in 0..3 {
        assert_eq!(run(&config), first);
    }
    assert!(first.report.contains("CONFLUENT II0 yes"));
    assert!(first.report.contains("CONFLUENT I2 no"));
}

#[test]
fn exit_codes() {
    let mut config = RunConfig::new(Command::Confluence, Input::Builtin("hom_ass_I1".into()));
    assert_eq!(run(&config).code, 0);
    config.expect_confluent = true;
    assert_eq!(run(&config).code, 1);
    config.input = Input::Builtin("hom_ass_II0".into());
    assert_eq!(run(&config).code, 0);
    config.input = Input::Builtin("no_such".into());
    let o = run(&config);
    assert_eq!(o.code, 2);
    assert!(o.report.starts_with("error[UnknownName]"));
    config.input = Input::Builtin("ass".into());
    config.max_degree = Some(1);
    assert!(run(&config).report.starts_with("error[BoundTooSmall]"));
    config.max_degree = None;
    config.input = Input::None;
    assert_eq!(run(&config).code, 2);
}

#[test]
fn syntax_errors_point_at_the_input() {
    let path = scratch(
        "broken.op",
        "operad broken\nmode nonsymmetric\ngen m 2\nrel m(m(1,2),3 - m(1,m(2,3))\n",
    );
    let o = run(&RunConfig::new(Command::Gb, Input::File(path.clone())));
    assert_eq!(o.code, 2);
    assert!(o.report.starts_with("error[SyntaxError]"), "{}", o.report);
    assert!(o.report.contains("broken.op"));
    assert!(o.report.contains(": 4:"), "{}", o.report);
    let o = run(&RunConfig::new(
        Command::Gb,
        Input::File(path.with_file_name("missing.op")),
    ));
    assert_eq!(o.code, 2);
}

#[test]
fn conformal_module_file() {
    let path = scratch(
        "m1.conf",
        "conformal\nbasis a b c\nk 1\nproduct a b 1 = c\nproduct b a 0 = D c\nproduct b a 1 = c\n",
    );
    let o = run(&machine(Command::Conformal, Input::File(path)));
    assert_eq!(o.code, 0);
    assert!(o.report.contains("ANTISYMMETRY yes"), "{}", o.report);
    assert!(o.report.contains("JACOBI yes"));
    let path = scratch(
        "bad.conf",
        "conformal\nbasis a b c\nk 1\nproduct a b 1 = c\nproduct b a 0 = c\nproduct b a 1 = c\n",
    );
    let o = run(&machine(Command::Conformal, Input::File(path)));
    assert!(o.report.contains("ANTISYMMETRY no"), "{}", o.report);
}

#[test]
fn conformal_algebra_file() {
    let text = "algebra\nbasis x0 x1 x2\ncirc x0 x1 = x1\ncirc x0 x2 = 2 x2\ncirc x1 x1 = x2\nbracket x0 x1 = -1 x1\nbracket x1 x0 = x1\nbracket x0 x2 = -2 x2\nbracket x2 x0 = 2 x2\nalpha x0 = x0\nalpha x1 = 2 x1\nalpha x2 = 4 x2\n";
    let o = run(&machine(
        Command::Conformal,
        Input::File(scratch("nov.alg", text)),
    ));
    assert_eq!(o.code, 0, "{}", o.report);
    for line in [
        "GD_RIGHT",
        "HOM_GD",
        "MORPHISM",
        "TWIST_HOM_GD",
        "TWIST_IDENTITIES",
    ] {
        assert!(
            o.report.lines().any(|l| l.starts_with(line)),
            "{line}: {}",
            o.report
        );
    }
}

#[test]
fn clie_case_study() {
    let mut config = RunConfig::new(Command::Casestudy(CaseStudy::Clie), Input::None);
    let o = run(&config);
    assert!(o.report.contains("AMBIGUITIES: 0"), "{}", o.report);
    assert!(o.report.contains("KOSZUL-CERTIFIED (truncated)"));
    config.clie = ClieParams {
        k: 1,
        nmax: 2,
        jmax: 0,
    };
    assert!(run(&config).report.contains("TRUNCATED"));
}

#[test]
fn gd_convention_flag_changes_the_relations() {
    let mut config = machine(Command::Gb, Input::Builtin("novikov".into()));
    let right = run(&config);
    config.convention = GdConvention::Left;
    let left = run(&config);
    assert_eq!(right.code, 0);
    assert_ne!(right.report, left.report);
}
