//! Fundamental group presentations before and after Tietze simplification.

use t3links::diagram::builtin_example;
use t3links::presentation::{build_presentation, extract_arcs, tietze_simplify};

fn main() -> t3links::Result<()> {
    for name in ["U1", "W2", "local_trefoil"] {
        let d = builtin_example(name)?;
        let arcs = extract_arcs(&d);
        let raw = build_presentation(&d);
        let simple = tietze_simplify(&raw);
        println!(
            "== {name}: {} arcs, {} -> {} generators",
            arcs.len(),
            raw.generators.len(),
            simple.generators.len()
        );
        print!("{}", simple.render_text());
    }
    Ok(())
}
