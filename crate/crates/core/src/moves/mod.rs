//! Generalized Reidemeister moves on event sequences.
//!
//! A [`Site`] names a component and an event index. Insertion moves insert
//! before that index (`index == len` appends). Pattern moves read the pair of
//! events at `index` and `index + 1`; pairs never wrap around the end of a
//! component, which keeps every move exactly invertible.

mod apply;
mod scramble;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagram::{Sign, WallKind};
use crate::Error;

pub use apply::{apply_move, inverse};
pub use scramble::{pattern_candidates, replay, scramble, scramble_with, ScrambleResult, ALL_FAMILIES, STABLE_FAMILIES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Site {
    pub component: usize,
    pub index: usize,
}

impl Site {
    pub fn new(component: usize, index: usize) -> Self {
        Site { component, index }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Move {
    /// Insert a kink: `[Over(c), Under(c)]`, or the reverse if `under_first`.
    R1Add { at: Site, sign: Sign, under_first: bool },
    R1Remove { at: Site },
    /// Insert `[Over(c), Over(c')]` and `[Under(c'), Under(c)]` with
    /// `sign(c) = sign`, `sign(c') = -sign`. When both sites coincide the
    /// over pair goes first unless `under_first`.
    R2Add { over: Site, under: Site, sign: Sign, under_first: bool },
    R2Remove { over: Site, under: Site },
    /// Exchange across the triangle formed by the pairs
    /// `{Over(a), Over(b)}`, `{Under(a), Over(c)}`, `{Under(b), Under(c)}`.
    R3 { top: Site, middle: Site, bottom: Site },
    /// Insert `Wall(sign, pos), Wall(-sign, pos + 1)`; with `descending` the
    /// positions are swapped.
    R4Add { at: Site, kind: WallKind, sign: Sign, pos: u32, descending: bool },
    R4Remove { at: Site },
    /// Slide a crossing across an edge: `[Wall, Over(c)]` with `[Wall, Under(c)]`,
    /// or the reverse patterns.
    R5 { over: Site, under: Site },
    /// Insert `Vertex(sign, index), Vertex(-sign, index + 1)`.
    V1Add { at: Site, sign: Sign, index: u32, descending: bool },
    V1Remove { at: Site },
    /// Transpose a vertex with an adjacent wall puncture.
    V2 { at: Site },
    /// Transpose a vertex with an adjacent crossing event.
    V3 { at: Site },
    /// Always rejected.
    V4 { at: Site },
}

impl Move {
    pub fn variant(&self) -> &'static str {
        match self {
            Move::R1Add { .. } => "R1+",
            Move::R1Remove { .. } => "R1-",
            Move::R2Add { .. } => "R2+",
            Move::R2Remove { .. } => "R2-",
            Move::R3 { .. } => "R3",
            Move::R4Add { .. } => "R4+",
            Move::R4Remove { .. } => "R4-",
            Move::R5 { .. } => "R5",
            Move::V1Add { .. } => "V1+",
            Move::V1Remove { .. } => "V1-",
            Move::V2 { .. } => "V2",
            Move::V3 { .. } => "V3",
            Move::V4 { .. } => "V4",
        }
    }
}

fn site(s: &Site) -> String {
    format!("{}:{}", s.component, s.index)
}

fn order(descending: bool) -> &'static str {
    if descending {
        "desc"
    } else {
        "asc"
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.variant();
        match self {
            Move::R1Add { at, sign, under_first } => write!(
                f,
                "{v} {} sign={} first={}",
                site(at),
                sign.symbol(),
                if *under_first { "u" } else { "o" }
            ),
            Move::R2Add { over, under, sign, under_first } => write!(
                f,
                "{v} {} {} sign={} first={}",
                site(over),
                site(under),
                sign.symbol(),
                if *under_first { "u" } else { "o" }
            ),
            Move::R2Remove { over, under } | Move::R5 { over, under } => write!(f, "{v} {} {}", site(over), site(under)),
            Move::R3 { top, middle, bottom } => write!(f, "{v} {} {} {}", site(top), site(middle), site(bottom)),
            Move::R4Add { at, kind, sign, pos, descending } => write!(
                f,
                "{v} {} wall={} sign={} at={pos} order={}",
                site(at),
                kind.letter(),
                sign.symbol(),
                order(*descending)
            ),
            Move::V1Add { at, sign, index, descending } => write!(
                f,
                "{v} {} sign={} at={index} order={}",
                site(at),
                sign.symbol(),
                order(*descending)
            ),
            Move::R1Remove { at }
            | Move::R4Remove { at }
            | Move::V1Remove { at }
            | Move::V2 { at }
            | Move::V3 { at }
            | Move::V4 { at } => write!(f, "{v} {}", site(at)),
        }
    }
}

fn bad(line: &str, why: &str) -> Error {
    Error::Syntax { line: 1, column: 1, message: format!("{why}: `{line}`") }
}

impl FromStr for Move {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self, Error> {
        let mut toks = line.split_whitespace();
        let variant = toks.next().ok_or_else(|| bad(line, "empty move"))?;
        let mut sites = Vec::new();
        let mut params = std::collections::BTreeMap::new();
        for t in toks {
            if let Some((k, v)) = t.split_once('=') {
                params.insert(k, v);
            } else {
                let (c, i) = t.split_once(':').ok_or_else(|| bad(line, "expected component:index"))?;
                let c = c.parse().map_err(|_| bad(line, "bad component"))?;
                let i = i.parse().map_err(|_| bad(line, "bad index"))?;
                sites.push(Site::new(c, i));
            }
        }
        let param = |k: &str| params.get(k).copied().ok_or_else(|| bad(line, &format!("missing {k}=")));
        let sign = || {
            param("sign").and_then(|s| {
                s.chars()
                    .next()
                    .and_then(Sign::from_symbol)
                    .filter(|_| s.len() == 1)
                    .ok_or_else(|| bad(line, "bad sign"))
            })
        };
        let first_u = || match param("first")? {
            "u" => Ok(true),
            "o" => Ok(false),
            _ => Err(bad(line, "first= must be o or u")),
        };
        let desc = || match param("order")? {
            "asc" => Ok(false),
            "desc" => Ok(true),
            _ => Err(bad(line, "order= must be asc or desc")),
        };
        let at = || param("at")?.parse::<u32>().map_err(|_| bad(line, "bad at="));
        let need = |n: usize| {
            if sites.len() == n {
                Ok(())
            } else {
                Err(bad(line, &format!("expected {n} site(s)")))
            }
        };
        let m = match variant {
            "R1+" => {
                need(1)?;
                Move::R1Add { at: sites[0], sign: sign()?, under_first: first_u()? }
            }
            "R2+" => {
                need(2)?;
                Move::R2Add { over: sites[0], under: sites[1], sign: sign()?, under_first: first_u()? }
            }
            "R2-" => {
                need(2)?;
                Move::R2Remove { over: sites[0], under: sites[1] }
            }
            "R5" => {
                need(2)?;
                Move::R5 { over: sites[0], under: sites[1] }
            }
            "R3" => {
                need(3)?;
                Move::R3 { top: sites[0], middle: sites[1], bottom: sites[2] }
            }
            "R4+" => {
                need(1)?;
                let kind = match param("wall")? {
                    "x" => WallKind::X,
                    "y" => WallKind::Y,
                    _ => return Err(bad(line, "wall= must be x or y")),
                };
                Move::R4Add { at: sites[0], kind, sign: sign()?, pos: at()?, descending: desc()? }
            }
            "V1+" => {
                need(1)?;
                Move::V1Add { at: sites[0], sign: sign()?, index: at()?, descending: desc()? }
            }
            "R1-" | "R4-" | "V1-" | "V2" | "V3" | "V4" => {
                need(1)?;
                let at = sites[0];
                match variant {
                    "R1-" => Move::R1Remove { at },
                    "R4-" => Move::R4Remove { at },
                    "V1-" => Move::V1Remove { at },
                    "V2" => Move::V2 { at },
                    "V3" => Move::V3 { at },
                    _ => Move::V4 { at },
                }
            }
            _ => return Err(bad(line, "unknown move")),
        };
        Ok(m)
    }
}

/// One move per line; blank lines and `#` comments are skipped.
pub fn parse_move_log(text: &str) -> crate::Result<Vec<Move>> {
    text.lines()
        .enumerate()
        .filter_map(|(n, l)| {
            let l = l.split('#').next().unwrap_or("").trim();
            (!l.is_empty()).then_some((n, l))
        })
        .map(|(n, l)| {
            l.parse::<Move>().map_err(|e| match e {
                Error::Syntax { message, .. } => Error::Syntax { line: n + 1, column: 1, message },
                other => other,
            })
        })
        .collect()
}

pub fn serialize_move_log(moves: &[Move]) -> String {
    moves.iter().map(|m| format!("{m}\n")).collect()
}
