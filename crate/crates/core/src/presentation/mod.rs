//! Fundamental group presentations of link complements in the 3-torus.

mod arcs;
mod homology;
mod tietze;
mod word;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::diagram::{Diagram, Event, WallKind};

pub use arcs::{extract_arcs, Arc, Label};
pub use homology::{first_homology, AbelImage, homology_class, class_decomposition, relation_matrix, snf_decomposition, HomologyDecomposition};
pub use tietze::tietze_simplify;
pub use word::FreeWord;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Role {
    Torus { axis: char },
    Boundary { label: Label },
    Arc { index: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub role: Role,
    /// Component the generator is a meridian of; `None` for x, y, z.
    pub component: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    W,
    ArcIdentity,
    Q,
    T,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Relation {
    pub word: FreeWord,
    pub family: Family,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub generators: Vec<Generator>,
    pub relations: Vec<Relation>,
    pub epsilon: Vec<i32>,
    pub nu: Vec<i32>,
    pub tau: Vec<i32>,
    /// `γ_1 .. γ_{l+1}` with `γ_1 = 1`.
    pub gamma: Vec<FreeWord>,
    pub components: usize,
}

pub const X: usize = 0;
pub const Y: usize = 1;
pub const Z: usize = 2;

fn commutator(a: usize, b: usize) -> FreeWord {
    FreeWord::new([(a, 1), (b, 1), (a, -1), (b, -1)])
}

impl Presentation {
    pub fn names(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.name.clone()).collect()
    }

    pub fn generator_id(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn render_text(&self) -> String {
        let names = self.names();
        let mut out = format!("generators: {}\n", names.join(", "));
        for r in &self.relations {
            out.push_str(&r.word.render(&names));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let names = self.names();
        serde_json::json!({
            "generators": self.generators,
            "relations": self.relations.iter().map(|r| serde_json::json!({
                "family": r.family,
                "word": r.word.render(&names),
                "letters": r.word.letters().iter().map(|&(g, e)| (names[g].clone(), e)).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "epsilon": self.epsilon,
            "nu": self.nu,
            "tau": self.tau,
            "gamma": self.gamma.iter().map(|w| w.render(&names)).collect::<Vec<_>>(),
        })
    }
}

/// Signs of the wall or vertex events of one kind, ordered by position.
fn signs_by_position(d: &Diagram, pick: impl Fn(&Event) -> Option<(u32, i32)>) -> Vec<i32> {
    let mut v: Vec<(u32, i32)> = d.events().filter_map(|(_, _, e)| pick(e)).collect();
    v.sort_unstable();
    v.into_iter().map(|p| p.1).collect()
}

/// Builds the Wirtinger-type presentation with W, arc-identity, Q and T relations.
pub fn build_presentation(d: &Diagram) -> Presentation {
    let arcs = extract_arcs(d);
    let epsilon = signs_by_position(d, |e| match *e {
        Event::Wall { kind: WallKind::X, sign, pos } => Some((pos, sign.value())),
        _ => None,
    });
    let nu = signs_by_position(d, |e| match *e {
        Event::Wall { kind: WallKind::Y, sign, pos } => Some((pos, sign.value())),
        _ => None,
    });
    let tau = signs_by_position(d, |e| match *e {
        Event::Vertex { sign, index } => Some((index, sign.value())),
        _ => None,
    });

    let mut generators: Vec<Generator> = ['x', 'y', 'z']
        .iter()
        .map(|&a| Generator { name: a.to_string(), role: Role::Torus { axis: a }, component: None })
        .collect();
    let mut label_component: BTreeMap<Label, usize> = BTreeMap::new();
    for a in &arcs {
        for l in &a.labels {
            label_component.insert(*l, a.component);
        }
    }
    let mut label_id: BTreeMap<Label, usize> = BTreeMap::new();
    // BTreeMap order on Label: X walls, Y walls, then vertices; position then primed.
    for (l, c) in &label_component {
        label_id.insert(*l, generators.len());
        generators.push(Generator { name: l.name(), role: Role::Boundary { label: *l }, component: Some(*c) });
    }
    let mut arc_gen = Vec::with_capacity(arcs.len());
    let mut next_arc = 1;
    for a in &arcs {
        match a.labels.first() {
            Some(l) => arc_gen.push(label_id[l]),
            None => {
                arc_gen.push(generators.len());
                generators.push(Generator {
                    name: format!("a{next_arc}"),
                    role: Role::Arc { index: next_arc },
                    component: Some(a.component),
                });
                next_arc += 1;
            }
        }
    }

    let mut over_arc = BTreeMap::new();
    let mut under_in = BTreeMap::new();
    let mut under_out = BTreeMap::new();
    for (k, a) in arcs.iter().enumerate() {
        for &c in &a.overs {
            over_arc.insert(c, arc_gen[k]);
        }
        let events = &d.components[a.component].events;
        if let Some(Event::Under(c)) = a.end.map(|i| events[i]) {
            under_in.insert(c, arc_gen[k]);
        }
        if let Some(Event::Under(c)) = a.start.map(|i| events[i]) {
            under_out.insert(c, arc_gen[k]);
        }
    }

    let mut relations = Vec::new();
    for (&c, sign) in &d.crossings {
        let (Some(&o), Some(&ui), Some(&uo)) = (over_arc.get(&c), under_in.get(&c), under_out.get(&c)) else {
            continue;
        };
        let s = sign.value();
        let conj = FreeWord::product([&FreeWord::power_of(o, s), &FreeWord::generator(ui), &FreeWord::power_of(o, -s)]);
        relations.push(Relation { word: FreeWord::generator(uo).mul(&conj.inverse()), family: Family::W });
    }
    for a in &arcs {
        if let [l1, l2] = a.labels[..] {
            let w = FreeWord::generator(label_id[&l1]).mul(&FreeWord::generator(label_id[&l2]).inverse());
            relations.push(Relation { word: w, family: Family::ArcIdentity });
        }
    }

    let z_gen = |k: u32, primed: bool| label_id[&Label::Vertex { index: k, primed }];
    let mut gamma = vec![FreeWord::empty()];
    for (k, &t) in tau.iter().enumerate() {
        let next = FreeWord::power_of(z_gen(k as u32 + 1, false), t).mul(&gamma[k]);
        gamma.push(next);
    }
    let big = gamma.last().cloned().unwrap_or_default();
    let conj_rel = |primed: usize, body: FreeWord| Relation {
        word: FreeWord::generator(primed).mul(&body.inverse()),
        family: Family::Q,
    };
    for (kind, outer) in [(WallKind::X, FreeWord::generator(Y)), (WallKind::Y, FreeWord::power_of(X, -1))] {
        let n = if kind == WallKind::X { epsilon.len() } else { nu.len() };
        for p in 1..=n as u32 {
            let g = label_id[&Label::Wall { kind, pos: p, primed: false }];
            let gp = label_id[&Label::Wall { kind, pos: p, primed: true }];
            let body = FreeWord::product([&outer, &big.inverse(), &FreeWord::generator(g), &big, &outer.inverse()]);
            relations.push(conj_rel(gp, body));
        }
    }
    // The floor loop of a vertex is its ceiling loop conjugated by z alone.
    // Conjugating by γ_k as well breaks invariance under V1 when the inserted
    // pair has τ = -1 first.
    for k in 1..=tau.len() {
        let zi = FreeWord::power_of(Z, -1);
        let body = FreeWord::product([&zi, &FreeWord::generator(z_gen(k as u32, false)), &zi.inverse()]);
        relations.push(conj_rel(z_gen(k as u32, true), body));
    }

    let product = |kind: Option<WallKind>, signs: &[i32]| {
        let words: Vec<FreeWord> = signs
            .iter()
            .enumerate()
            .map(|(i, &s)| {
                let p = i as u32 + 1;
                let l = match kind {
                    Some(kind) => Label::Wall { kind, pos: p, primed: false },
                    None => Label::Vertex { index: p, primed: false },
                };
                FreeWord::power_of(label_id[&l], s)
            })
            .collect();
        FreeWord::product(words.iter())
    };
    let t_rel = |comm: FreeWord, prod: FreeWord| Relation { word: comm.mul(&prod.inverse()), family: Family::T };
    relations.push(t_rel(commutator(Z, X), product(Some(WallKind::X), &epsilon)));
    relations.push(t_rel(commutator(Y, X), product(None, &tau)));
    relations.push(t_rel(commutator(Y, Z), product(Some(WallKind::Y), &nu)));

    Presentation { generators, relations, epsilon, nu, tau, gamma, components: d.components.len() }
}
