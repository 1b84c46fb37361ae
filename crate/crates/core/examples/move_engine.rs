//! Generalized Reidemeister moves, inverses and seeded scrambles.

use t3links::diagram::{builtin_example, serialize_diagram};
use t3links::invariants::{alexander_polynomial, AlexanderOptions};
use t3links::moves::{apply_move, inverse, replay, scramble, scramble_with, Move, STABLE_FAMILIES};
use t3links::presentation::first_homology;

fn main() -> t3links::Result<()> {
    let w2 = builtin_example("W2")?;
    let m: Move = "V1+ 0:1 sign=- at=1 order=asc".parse()?;
    let bumped = apply_move(&w2, &m)?;
    print!("after {m}:\n{}", serialize_diagram(&bumped));
    let back = apply_move(&bumped, &inverse(&w2, &m)?)?;
    assert_eq!(back.canonical(), w2.canonical());

    let opts = AlexanderOptions::default();
    let base = alexander_polynomial(&w2, &opts)?.canonical;
    for seed in 0..3 {
        let r = scramble_with(&w2, seed, 25, &STABLE_FAMILIES);
        assert_eq!(replay(&w2, &r.moves)?, r.diagram);
        let delta = alexander_polynomial(&r.diagram, &opts)?.canonical;
        let moves: Vec<_> = r.moves.iter().map(|m| m.variant()).collect();
        println!("seed {seed}: {} | Delta stable: {} | {}", first_homology(&r.diagram)?.render(), delta == base, moves.join(" "));
    }

    // The full move set includes V2, which can change the polynomial.
    let r = scramble(&w2, 2, 30);
    println!("full move set, seed 2: Delta = {}", alexander_polynomial(&r.diagram, &opts)?.canonical);
    Ok(())
}
