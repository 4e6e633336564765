//! Prints a built-in presentation in the text format: `render_builtin <name>`.
use operad_groebner::presentations::{builtin, render, BuiltinParams, ClieParams};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "ass".into());
    let params = BuiltinParams {
        clie: Some(ClieParams::default()),
        ..Default::default()
    };
    match builtin(&name, Some(&params)) {
        Ok(p) => print!("{}", render(&p)),
        Err(e) => eprintln!("{e}"),
    }
}
