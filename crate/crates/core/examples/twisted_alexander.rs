//! Twisted Alexander polynomials through characters of the torsion subgroup.

use t3links::diagram::builtin_example;
use t3links::fox::TwistCharacter;
use t3links::invariants::{twisted_alexander, AlexanderOptions};
use t3links::presentation::first_homology;

fn main() -> t3links::Result<()> {
    let opts = AlexanderOptions::default();
    let raw = AlexanderOptions { raw: true, ..AlexanderOptions::default() };

    let w2 = builtin_example("W2")?;
    let h = first_homology(&w2)?;
    let sigma = TwistCharacter::new(2, &[1], &h.torsion)?;
    let a = twisted_alexander(&w2, &sigma, &opts)?;
    let b = twisted_alexander(&w2, &sigma, &raw)?;
    println!("W2, g -> -1: simplified {} | raw {}", a.canonical, b.canonical);
    assert!(a.canonical.unit_equivalent(&b.canonical));

    // A trefoil summed onto a strand whose meridian is sent to a primitive
    // sixth root of unity: the trefoil factor 1 - t + t^2 vanishes there.
    for name in ["W(6)", "W(6)#local_trefoil"] {
        let d = builtin_example(name)?;
        let h = first_homology(&d)?;
        let sigma = TwistCharacter::new(6, &[1], &h.torsion)?;
        let r = twisted_alexander(&d, &sigma, &opts)?;
        println!("{name}: H1 = {}, Delta^sigma = {} over Q(zeta_{})", h.render(), r.canonical, r.d);
    }
    Ok(())
}
