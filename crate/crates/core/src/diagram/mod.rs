//! Combinatorial link diagrams in the 3-torus.
//!
//! Each component is a cyclic sequence of [`Event`]s met while travelling
//! along its orientation. Geometry is not stored and realizability of an
//! event sequence as a planar projection is not checked.

mod builtin;
mod format;
mod sum;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

pub use builtin::{builtin_example, BUILTIN_NAMES};
pub use format::{parse_diagram, serialize_diagram};
pub use sum::connected_sum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn from_symbol(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' => Some(Sign::Minus),
            _ => None,
        }
    }
}

/// Which pair of identified side faces a puncture belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WallKind {
    /// left/right faces
    X,
    /// front/back faces
    Y,
}

impl WallKind {
    pub fn letter(self) -> char {
        match self {
            WallKind::X => 'x',
            WallKind::Y => 'y',
        }
    }
}

/// One event along a component.
///
/// `Wall { sign: Plus, .. }` means the strand crosses in the positive
/// direction, so the arc after the event starts on the left (X) or bottom
/// (Y) edge. `Vertex { sign: Plus, .. }` means the arc after the event starts
/// at the ceiling pole. `pos`/`index` order punctures along their edge and
/// vertices in the arrangement; they are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Event {
    Over(u32),
    Under(u32),
    Wall { kind: WallKind, sign: Sign, pos: u32 },
    Vertex { sign: Sign, index: u32 },
}

impl Event {
    pub fn wall_x(sign: Sign, pos: u32) -> Event {
        Event::Wall { kind: WallKind::X, sign, pos }
    }

    pub fn wall_y(sign: Sign, pos: u32) -> Event {
        Event::Wall { kind: WallKind::Y, sign, pos }
    }

    pub fn vertex(sign: Sign, index: u32) -> Event {
        Event::Vertex { sign, index }
    }

    /// Wall punctures and vertices; these end arcs at the boundary of the cube.
    pub fn is_boundary(&self) -> bool {
        matches!(self, Event::Wall { .. } | Event::Vertex { .. })
    }

    pub fn crossing(&self) -> Option<u32> {
        match *self {
            Event::Over(c) | Event::Under(c) => Some(c),
            _ => None,
        }
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Event::Over(c) => write!(f, "o{c}"),
            Event::Under(c) => write!(f, "u{c}"),
            Event::Wall { kind, sign, pos } => write!(f, "{}{}@{pos}", kind.letter(), sign.symbol()),
            Event::Vertex { sign, index } => write!(f, "z{}@{index}", sign.symbol()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Component {
    pub name: String,
    pub events: Vec<Event>,
}

impl Component {
    pub fn new(name: impl Into<String>, events: Vec<Event>) -> Self {
        Component {
            name: name.into(),
            events,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Diagram {
    pub crossings: BTreeMap<u32, Sign>,
    pub components: Vec<Component>,
}

/// Homology class `(δ, σ, ξ)` of a component in `H₁(T³) = Z³`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomologyClass {
    pub delta: i64,
    pub sigma: i64,
    pub xi: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    MissingStrand { crossing: u32, over: bool },
    DuplicateStrand { crossing: u32, over: bool },
    UndeclaredCrossing(u32),
    UnusedCrossing(u32),
    DuplicatePosition { what: &'static str, pos: u32 },
    MissingPosition { what: &'static str, pos: u32 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strand = |over: bool| if over { "over" } else { "under" };
        match self {
            Violation::MissingStrand { crossing, over } => {
                write!(f, "crossing {crossing} lacks an {} strand", strand(*over))
            }
            Violation::DuplicateStrand { crossing, over } => {
                write!(f, "crossing {crossing} has more than one {} strand", strand(*over))
            }
            Violation::UndeclaredCrossing(c) => write!(f, "crossing {c} is used but not declared"),
            Violation::UnusedCrossing(c) => write!(f, "crossing {c} is declared but never used"),
            Violation::DuplicatePosition { what, pos } => write!(f, "duplicate {what} position {pos}"),
            Violation::MissingPosition { what, pos } => write!(f, "missing {what} position {pos}"),
        }
    }
}

impl Diagram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn events(&self) -> impl Iterator<Item = (usize, usize, &Event)> {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(c, comp)| comp.events.iter().enumerate().map(move |(i, e)| (c, i, e)))
    }

    pub fn wall_count(&self, kind: WallKind) -> usize {
        self.events()
            .filter(|(_, _, e)| matches!(e, Event::Wall { kind: k, .. } if *k == kind))
            .count()
    }

    pub fn vertex_count(&self) -> usize {
        self.events()
            .filter(|(_, _, e)| matches!(e, Event::Vertex { .. }))
            .count()
    }

    pub fn is_local(&self) -> bool {
        self.events().all(|(_, _, e)| !e.is_boundary())
    }

    pub fn next_crossing_id(&self) -> u32 {
        let used = self.events().filter_map(|(_, _, e)| e.crossing());
        self.crossings.keys().copied().chain(used).max().map_or(1, |m| m + 1)
    }

    /// Locates the over and under strands of a crossing as `(component, index)`.
    pub fn strands(&self, crossing: u32) -> (Option<(usize, usize)>, Option<(usize, usize)>) {
        let mut over = None;
        let mut under = None;
        for (c, i, e) in self.events() {
            match *e {
                Event::Over(x) if x == crossing => over = Some((c, i)),
                Event::Under(x) if x == crossing => under = Some((c, i)),
                _ => {}
            }
        }
        (over, under)
    }

    /// `(δ, σ, ξ)`: sums of wall signs per kind and the negated vertex sign sum.
    pub fn homology_class(&self, component: usize) -> crate::Result<HomologyClass> {
        let comp = self
            .components
            .get(component)
            .ok_or_else(|| crate::Error::OutOfRange(format!("component {component}")))?;
        let mut class = HomologyClass { delta: 0, sigma: 0, xi: 0 };
        for e in &comp.events {
            match *e {
                Event::Wall { kind: WallKind::X, sign, .. } => class.delta += sign.value() as i64,
                Event::Wall { kind: WallKind::Y, sign, .. } => class.sigma += sign.value() as i64,
                Event::Vertex { sign, .. } => class.xi -= sign.value() as i64,
                _ => {}
            }
        }
        Ok(class)
    }

    /// Every violated invariant, each reported once.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut overs: BTreeMap<u32, usize> = BTreeMap::new();
        let mut unders: BTreeMap<u32, usize> = BTreeMap::new();
        let mut positions: BTreeMap<&'static str, Vec<u32>> = BTreeMap::new();
        for (_, _, e) in self.events() {
            match *e {
                Event::Over(c) => *overs.entry(c).or_default() += 1,
                Event::Under(c) => *unders.entry(c).or_default() += 1,
                Event::Wall { kind: WallKind::X, pos, .. } => positions.entry("x").or_default().push(pos),
                Event::Wall { kind: WallKind::Y, pos, .. } => positions.entry("y").or_default().push(pos),
                Event::Vertex { index, .. } => positions.entry("vertex").or_default().push(index),
            }
        }
        let used: BTreeSet<u32> = overs.keys().chain(unders.keys()).copied().collect();
        for &c in &used {
            if !self.crossings.contains_key(&c) {
                out.push(Violation::UndeclaredCrossing(c));
            }
        }
        for &c in self.crossings.keys().chain(used.iter()).collect::<BTreeSet<_>>() {
            for (map, over) in [(&overs, true), (&unders, false)] {
                match map.get(&c).copied().unwrap_or(0) {
                    0 if used.contains(&c) => out.push(Violation::MissingStrand { crossing: c, over }),
                    0 | 1 => {}
                    _ => out.push(Violation::DuplicateStrand { crossing: c, over }),
                }
            }
            if !used.contains(&c) {
                out.push(Violation::UnusedCrossing(c));
            }
        }
        for (what, mut ps) in positions {
            ps.sort_unstable();
            let mut seen = BTreeSet::new();
            for &p in &ps {
                if !seen.insert(p) {
                    out.push(Violation::DuplicatePosition { what, pos: p });
                }
            }
            let n = ps.len() as u32;
            for p in 1..=n {
                if !seen.contains(&p) {
                    out.push(Violation::MissingPosition { what, pos: p });
                }
            }
        }
        out.dedup();
        out
    }

    pub fn check_valid(&self) -> crate::Result<()> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            let msgs: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            Err(crate::Error::InvalidDiagram(msgs.join("; ")))
        }
    }

    /// Renumbers crossing ids to `1..` in order of first appearance and
    /// compacts positions and indices preserving relative order. Component
    /// names are kept. Two diagrams that differ only by such relabelling have
    /// equal canonical forms.
    pub fn canonical(&self) -> Diagram {
        let mut ids: BTreeMap<u32, u32> = BTreeMap::new();
        for (_, _, e) in self.events() {
            if let Some(c) = e.crossing() {
                let next = ids.len() as u32 + 1;
                ids.entry(c).or_insert(next);
            }
        }
        let mut out = self.clone();
        out.crossings = self
            .crossings
            .iter()
            .filter_map(|(c, s)| ids.get(c).map(|n| (*n, *s)))
            .collect();
        for comp in &mut out.components {
            for e in &mut comp.events {
                match e {
                    Event::Over(c) | Event::Under(c) => *c = ids[c],
                    _ => {}
                }
            }
        }
        out.compact_positions();
        out
    }

    /// Maps wall positions and vertex indices onto `1..=n` keeping their order.
    pub fn compact_positions(&mut self) {
        let mut keys: BTreeMap<(u8, u32), u32> = BTreeMap::new();
        let class = |e: &Event| match *e {
            Event::Wall { kind: WallKind::X, pos, .. } => Some((0u8, pos)),
            Event::Wall { kind: WallKind::Y, pos, .. } => Some((1, pos)),
            Event::Vertex { index, .. } => Some((2, index)),
            _ => None,
        };
        for (_, _, e) in self.events() {
            if let Some(k) = class(e) {
                keys.insert(k, 0);
            }
        }
        let mut counters = [0u32; 3];
        for (k, v) in keys.iter_mut() {
            counters[k.0 as usize] += 1;
            *v = counters[k.0 as usize];
        }
        for comp in &mut self.components {
            for e in &mut comp.events {
                if let Some(k) = class(e) {
                    match e {
                        Event::Wall { pos, .. } => *pos = keys[&k],
                        Event::Vertex { index, .. } => *index = keys[&k],
                        _ => {}
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_valid() {
        for name in BUILTIN_NAMES {
            let d = builtin_example(name).unwrap();
            assert_eq!(d.validate(), vec![], "{name}");
        }
    }

    #[test]
    fn duplicate_wall_position() {
        let d = Diagram {
            crossings: BTreeMap::new(),
            components: vec![Component::new("k", vec![Event::wall_x(Sign::Plus, 1), Event::wall_x(Sign::Plus, 1)])],
        };
        assert_eq!(
            d.validate(),
            vec![
                Violation::DuplicatePosition { what: "x", pos: 1 },
                Violation::MissingPosition { what: "x", pos: 2 }
            ]
        );
    }

    #[test]
    fn unmatched_crossing() {
        let d = Diagram {
            crossings: [(7, Sign::Plus)].into_iter().collect(),
            components: vec![Component::new("k", vec![Event::Over(7)])],
        };
        assert_eq!(d.validate(), vec![Violation::MissingStrand { crossing: 7, over: false }]);
    }

    #[test]
    fn classes() {
        let u1 = builtin_example("U1").unwrap();
        assert_eq!(u1.homology_class(0).unwrap(), HomologyClass { delta: 1, sigma: 0, xi: 0 });
        let w2 = builtin_example("W2").unwrap();
        assert_eq!(w2.homology_class(0).unwrap(), HomologyClass { delta: 2, sigma: 0, xi: 0 });
        let k = builtin_example("local_unknot").unwrap();
        assert_eq!(k.homology_class(0).unwrap(), HomologyClass { delta: 0, sigma: 0, xi: 0 });
        assert!(k.homology_class(1).is_err());
    }

    #[test]
    fn canonical_forgets_labels() {
        let mut d = builtin_example("local_trefoil").unwrap();
        let a = d.canonical();
        for comp in &mut d.components {
            for e in &mut comp.events {
                if let Event::Over(c) | Event::Under(c) = e {
                    *c += 10;
                }
            }
        }
        d.crossings = d.crossings.iter().map(|(c, s)| (c + 10, *s)).collect();
        assert_eq!(d.canonical(), a);
    }
}
