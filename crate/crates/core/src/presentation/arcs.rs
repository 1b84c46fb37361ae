use serde::{Deserialize, Serialize};

use crate::diagram::{Diagram, Event, Sign, WallKind};

/// A boundary label carried by an arc end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Label {
    Wall { kind: WallKind, pos: u32, primed: bool },
    Vertex { index: u32, primed: bool },
}

impl Label {
    pub fn name(&self) -> String {
        let (letter, n, primed) = match *self {
            Label::Wall { kind, pos, primed } => (kind.letter(), pos, primed),
            Label::Vertex { index, primed } => ('z', index, primed),
        };
        format!("{letter}{n}{}", if primed { "'" } else { "" })
    }
}

/// Maximal segment of a component between two cutting events.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arc {
    pub component: usize,
    /// Event index the arc starts after; `None` for a closed arc.
    pub start: Option<usize>,
    /// Event index the arc ends before; `None` for a closed arc.
    pub end: Option<usize>,
    /// Crossing ids the arc passes over.
    pub overs: Vec<u32>,
    /// Start-side label first.
    pub labels: Vec<Label>,
}

fn label_after(e: &Event) -> Option<Label> {
    match *e {
        Event::Wall { kind, sign, pos } => Some(Label::Wall { kind, pos, primed: sign == Sign::Minus }),
        Event::Vertex { sign, index } => Some(Label::Vertex { index, primed: sign == Sign::Minus }),
        _ => None,
    }
}

fn label_before(e: &Event) -> Option<Label> {
    match *e {
        Event::Wall { kind, sign, pos } => Some(Label::Wall { kind, pos, primed: sign == Sign::Plus }),
        Event::Vertex { sign, index } => Some(Label::Vertex { index, primed: sign == Sign::Plus }),
        _ => None,
    }
}

fn is_cut(e: &Event) -> bool {
    matches!(e, Event::Under(_)) || e.is_boundary()
}

/// Cuts every component at under-crossings, wall punctures and vertices.
pub fn extract_arcs(d: &Diagram) -> Vec<Arc> {
    let mut arcs = Vec::new();
    for (c, comp) in d.components.iter().enumerate() {
        let ev = &comp.events;
        let cuts: Vec<usize> = (0..ev.len()).filter(|&i| is_cut(&ev[i])).collect();
        if cuts.is_empty() {
            arcs.push(Arc {
                component: c,
                start: None,
                end: None,
                overs: ev.iter().filter_map(|e| e.crossing()).collect(),
                labels: vec![],
            });
            continue;
        }
        for (k, &s) in cuts.iter().enumerate() {
            let e = cuts[(k + 1) % cuts.len()];
            let len = (e + ev.len() - s - 1) % ev.len();
            let overs = (1..=len)
                .map(|j| &ev[(s + j) % ev.len()])
                .filter_map(|x| match *x {
                    Event::Over(id) => Some(id),
                    _ => None,
                })
                .collect();
            let labels = label_after(&ev[s]).into_iter().chain(label_before(&ev[e])).collect();
            arcs.push(Arc {
                component: c,
                start: Some(s),
                end: Some(e),
                overs,
                labels,
            });
        }
    }
    arcs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::builtin_example;

    fn names(a: &Arc) -> Vec<String> {
        a.labels.iter().map(|l| l.name()).collect()
    }

    #[test]
    fn u1() {
        let arcs = extract_arcs(&builtin_example("U1").unwrap());
        assert_eq!(arcs.len(), 1);
        assert_eq!(names(&arcs[0]), ["x1", "x1'"]);
    }

    #[test]
    fn w2() {
        let arcs = extract_arcs(&builtin_example("W2").unwrap());
        assert_eq!(arcs.iter().map(names).collect::<Vec<_>>(), [["x1", "x2'"], ["x2", "x1'"]]);
    }

    #[test]
    fn local_unknot() {
        let arcs = extract_arcs(&builtin_example("local_unknot").unwrap());
        assert_eq!(arcs.len(), 1);
        assert!(arcs[0].labels.is_empty() && arcs[0].start.is_none());
    }

    #[test]
    fn trefoil() {
        let arcs = extract_arcs(&builtin_example("local_trefoil").unwrap());
        assert_eq!(arcs.len(), 3);
        assert!(arcs.iter().all(|a| a.overs.len() == 1 && a.labels.is_empty()));
    }

    #[test]
    fn negative_walls() {
        let d = crate::diagram::parse_diagram("t3d 1\ncomponent k : x-@1 z+@1 z-@2 y+@1").unwrap();
        let arcs = extract_arcs(&d);
        let got: Vec<Vec<String>> = arcs.iter().map(names).collect();
        assert_eq!(got, [vec!["x1'", "z1'"], vec!["z1", "z2"], vec!["z2'", "y1'"], vec!["y1", "x1"]]);
    }
}
