//! Alexander polynomials of the built-in fixtures.

use t3links::diagram::builtin_example;
use t3links::invariants::{alexander_polynomial, classical_alexander, display_delta, AlexanderOptions, Collapse};

fn main() -> t3links::Result<()> {
    let collapsed = AlexanderOptions::default();
    let multivar = AlexanderOptions { collapse: Collapse::None, raw: false };
    for name in ["local_unknot", "local_hopf", "U1", "W2", "Ln(2)", "Ln(3)", "U1#local_trefoil"] {
        let d = builtin_example(name)?;
        let r = alexander_polynomial(&d, &collapsed)?;
        let m = alexander_polynomial(&d, &multivar)?;
        println!("{name:>18}: Delta = {:<20} multivariable {}", display_delta(&r.canonical), m.canonical);
    }
    // The same Fox pipeline on a local diagram viewed in the 3-sphere.
    let trefoil = builtin_example("local_trefoil")?;
    println!("classical trefoil: {}", classical_alexander(&trefoil)?);
    Ok(())
}
