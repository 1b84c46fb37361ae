//! First homology of link complements, with the component classes.

use t3links::diagram::builtin_example;
use t3links::presentation::{first_homology, class_decomposition};

fn main() -> t3links::Result<()> {
    for name in ["local_unknot", "U1", "W2", "W(6)", "Ln(2)", "Ln(4)"] {
        let d = builtin_example(name)?;
        let h = first_homology(&d)?;
        let classes: Vec<_> = h.classes.iter().map(|c| (c.delta, c.sigma, c.xi)).collect();
        println!("{name:>12}: H1 = {:<12} classes {classes:?}", h.render());
        assert_eq!(class_decomposition(&d)?, (h.free_rank, h.torsion.clone()));
    }
    Ok(())
}
