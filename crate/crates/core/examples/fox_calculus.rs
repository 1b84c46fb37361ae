//! Fox derivatives of a word and the abelianized Alexander matrix of U1.

use t3links::diagram::builtin_example;
use t3links::fox::{alexander_matrix, fox_derivative, GroupRingElem, TwistCharacter};
use t3links::presentation::{first_homology, tietze_simplify, build_presentation, FreeWord};

fn main() -> t3links::Result<()> {
    let names: Vec<String> = ["a", "b"].iter().map(|s| s.to_string()).collect();
    // w = a b a^-1 b^-1
    let w = FreeWord::new([(0, 1), (1, 1), (0, -1), (1, -1)]);
    let mut total = GroupRingElem::zero();
    for g in 0..2 {
        let dw = fox_derivative(&w, g);
        println!("d/d{} ({}) = {}", names[g], w.render(&names), dw.render(&names));
        total = total.add(&dw.mul(&GroupRingElem::word(FreeWord::generator(g)).sub(&GroupRingElem::one())));
    }
    // Fundamental identity: the sum equals w - 1.
    assert_eq!(total, GroupRingElem::word(w).sub(&GroupRingElem::one()));

    let d = builtin_example("U1")?;
    let p = tietze_simplify(&build_presentation(&d));
    let h = first_homology(&d)?;
    let a = alexander_matrix(&p, &h, &TwistCharacter::trivial(0))?;
    print!("Alexander matrix of U1 over {:?}:\n{}", a.vars, a.render());
    Ok(())
}
