use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{apply_move, Move, Site};
use crate::diagram::{Diagram, Event, Sign, WallKind};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScrambleResult {
    pub diagram: Diagram,
    pub moves: Vec<Move>,
}

fn sign(rng: &mut ChaCha8Rng) -> Sign {
    if rng.gen() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

fn random_site(d: &Diagram, rng: &mut ChaCha8Rng) -> Site {
    let c = rng.gen_range(0..d.components.len());
    Site::new(c, rng.gen_range(0..=d.components[c].events.len()))
}

fn pair_sites(d: &Diagram) -> impl Iterator<Item = (Site, Event, Event)> + '_ {
    d.components.iter().enumerate().flat_map(|(c, comp)| {
        comp.events.windows(2).enumerate().map(move |(i, w)| (Site::new(c, i), w[0], w[1]))
    })
}

/// Pair sites whose events include `e`: the pair starting one before it and the one starting at it.
fn sites_around(d: &Diagram, at: Option<(usize, usize)>) -> Vec<Site> {
    let Some((c, i)) = at else { return Vec::new() };
    let len = d.components[c].events.len();
    let mut out = Vec::new();
    if i > 0 {
        out.push(Site::new(c, i - 1));
    }
    if i + 1 < len {
        out.push(Site::new(c, i));
    }
    out
}

pub fn pattern_candidates(d: &Diagram, family: &str) -> Vec<Move> {
    let mut out = Vec::new();
    for (s, a, b) in pair_sites(d) {
        match family {
            "R1-" => out.push(Move::R1Remove { at: s }),
            "R4-" => out.push(Move::R4Remove { at: s }),
            "V1-" => out.push(Move::V1Remove { at: s }),
            "V2" => out.push(Move::V2 { at: s }),
            "V3" => out.push(Move::V3 { at: s }),
            "R2-" => {
                if let (Event::Over(_), Event::Over(y)) = (a, b) {
                    for under in sites_around(d, d.strands(y).1) {
                        out.push(Move::R2Remove { over: s, under });
                    }
                }
            }
            "R3" => {
                if let (Event::Over(x), Event::Over(y)) = (a, b) {
                    for (p, q) in [(x, y), (y, x)] {
                        let middles = sites_around(d, d.strands(p).1);
                        let bottoms = sites_around(d, d.strands(q).1);
                        for &middle in &middles {
                            for &bottom in &bottoms {
                                out.push(Move::R3 { top: s, middle, bottom });
                            }
                        }
                    }
                }
            }
            "R5" => {
                let c = match (a, b) {
                    (w, Event::Over(c)) | (Event::Over(c), w) if w.is_boundary() => c,
                    _ => continue,
                };
                for under in sites_around(d, d.strands(c).1) {
                    out.push(Move::R5 { over: s, under });
                }
            }
            _ => {}
        }
    }
    out.retain(|m| apply_move(d, m).is_ok());
    out
}

fn random_insertion(d: &Diagram, family: &str, rng: &mut ChaCha8Rng) -> Move {
    let at = random_site(d, rng);
    match family {
        "R2+" => Move::R2Add { over: at, under: random_site(d, rng), sign: sign(rng), under_first: rng.gen() },
        "R4+" => {
            let kind = if rng.gen() { WallKind::X } else { WallKind::Y };
            let n = d.wall_count(kind) as u32;
            Move::R4Add { at, kind, sign: sign(rng), pos: rng.gen_range(1..=n + 1), descending: rng.gen() }
        }
        "V1+" => {
            let n = d.vertex_count() as u32;
            Move::V1Add { at, sign: sign(rng), index: rng.gen_range(1..=n + 1), descending: rng.gen() }
        }
        _ => Move::R1Add { at, sign: sign(rng), under_first: rng.gen() },
    }
}

const INSERTIONS: [&str; 4] = ["R1+", "R2+", "R4+", "V1+"];
const PATTERNS: [&str; 8] = ["R1-", "R2-", "R3", "R4-", "R5", "V1-", "V2", "V3"];

/// Every move family the scrambler can draw from.
pub const ALL_FAMILIES: [&str; 12] = ["R1+", "R1-", "R2+", "R2-", "R3", "R4+", "R4-", "R5", "V1+", "V1-", "V2", "V3"];

/// The families under which the invariants are observed to be stable. V2 and
/// V3 move a vertex to another region of the square, and event sequences do
/// not record which region a vertex sits in.
pub const STABLE_FAMILIES: [&str; 10] = ["R1+", "R1-", "R2+", "R2-", "R3", "R4+", "R4-", "R5", "V1+", "V1-"];

/// One random applicable move, or `None` when the diagram has no components.
fn random_move(d: &Diagram, families: &[&str], rng: &mut ChaCha8Rng) -> Option<Move> {
    if d.components.is_empty() {
        return None;
    }
    let mut pool: Vec<(&str, Vec<Move>)> =
        INSERTIONS.iter().filter(|f| families.contains(f)).map(|f| (*f, Vec::new())).collect();
    for f in PATTERNS.iter().filter(|f| families.contains(f)) {
        let c = pattern_candidates(d, f);
        if !c.is_empty() {
            pool.push((f, c));
        }
    }
    let fallback = |rng: &mut ChaCha8Rng| Move::R1Add { at: random_site(d, rng), sign: sign(rng), under_first: rng.gen() };
    let Some((family, candidates)) = pool.choose(rng) else {
        return Some(fallback(rng));
    };
    let m = match candidates.choose(rng) {
        Some(m) => m.clone(),
        None => random_insertion(d, family, rng),
    };
    if apply_move(d, &m).is_ok() {
        Some(m)
    } else {
        Some(fallback(rng))
    }
}

/// Applies `steps` random moves chosen by a generator seeded with `seed`.
pub fn scramble(d: &Diagram, seed: u64, steps: usize) -> ScrambleResult {
    scramble_with(d, seed, steps, &ALL_FAMILIES)
}

/// As [`scramble`], drawing only from the named families. `R1+` is used when
/// none of them applies.
pub fn scramble_with(d: &Diagram, seed: u64, steps: usize, families: &[&str]) -> ScrambleResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut diagram = d.clone();
    let mut moves = Vec::with_capacity(steps);
    for _ in 0..steps {
        let Some(m) = random_move(&diagram, families, &mut rng) else { break };
        diagram = apply_move(&diagram, &m).expect("chosen move applies");
        moves.push(m);
    }
    ScrambleResult { diagram, moves }
}

pub fn replay(d: &Diagram, moves: &[Move]) -> Result<Diagram> {
    moves.iter().try_fold(d.clone(), |acc, m| apply_move(&acc, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::builtin_example;
    use crate::moves::inverse;

    #[test]
    fn zero_steps() {
        let u1 = builtin_example("U1").unwrap();
        let r = scramble(&u1, 7, 0);
        assert_eq!(r.diagram, u1);
        assert!(r.moves.is_empty());
    }

    #[test]
    fn deterministic_and_replayable() {
        let w2 = builtin_example("W2").unwrap();
        let a = scramble(&w2, 11, 40);
        assert_eq!(a, scramble(&w2, 11, 40));
        assert_eq!(a.moves.len(), 40);
        assert_eq!(replay(&w2, &a.moves).unwrap(), a.diagram);
    }

    #[test]
    fn restricted_families() {
        let u1 = builtin_example("U1").unwrap();
        let r = scramble_with(&u1, 3, 30, &["R4+", "R4-"]);
        assert!(r.moves.iter().all(|m| m.variant().starts_with("R4")));
        let r = scramble_with(&u1, 3, 5, &[]);
        assert!(r.moves.iter().all(|m| m.variant() == "R1+"));
    }

    #[test]
    fn every_family_reachable_and_invertible() {
        let mut seen = std::collections::BTreeSet::new();
        for name in ["U1", "W2", "Ln(2)", "Ln(3)", "U1#local_trefoil"] {
            let d = builtin_example(name).unwrap();
            for seed in 0..80 {
                let r = scramble(&d, seed, 25);
                let mut cur = d.clone();
                for m in &r.moves {
                    seen.insert(m.variant());
                    let next = apply_move(&cur, m).unwrap();
                    let back = apply_move(&next, &inverse(&cur, m).unwrap()).unwrap();
                    assert_eq!(back.canonical(), cur.canonical(), "{name} seed {seed}: {m}");
                    for c in 0..cur.components.len() {
                        assert_eq!(next.homology_class(c).unwrap(), cur.homology_class(c).unwrap());
                    }
                    cur = next;
                }
            }
        }
        for f in ["R1+", "R1-", "R2+", "R2-", "R4+", "R4-", "V1+", "V1-", "V2", "V3", "R3", "R5"] {
            assert!(seen.contains(f), "{f} never chosen: {seen:?}");
        }
    }
}
