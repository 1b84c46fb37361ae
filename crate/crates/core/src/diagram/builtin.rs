use super::{connected_sum, Component, Diagram, Event, Sign};
use crate::{Error, Result};

/// Representative names accepted by [`builtin_example`]; `Ln(<n>)` takes any `n >= 1`.
pub const BUILTIN_NAMES: &[&str] = &[
    "local_unknot",
    "local_trefoil",
    "local_hopf",
    "U1",
    "Ln(2)",
    "Ln(3)",
    "W2",
    "U1#local_trefoil",
];

fn local_trefoil() -> Diagram {
    let ev = [(true, 1), (false, 2), (true, 3), (false, 1), (true, 2), (false, 3)];
    Diagram {
        crossings: (1..=3).map(|c| (c, Sign::Plus)).collect(),
        components: vec![Component::new(
            "c0",
            ev.iter()
                .map(|&(o, c)| if o { Event::Over(c) } else { Event::Under(c) })
                .collect(),
        )],
    }
}

fn walls(n: usize) -> Diagram {
    Diagram {
        crossings: Default::default(),
        components: (0..n)
            .map(|i| Component::new(format!("c{i}"), vec![Event::wall_x(Sign::Plus, i as u32 + 1)]))
            .collect(),
    }
}

/// One component running `n` times around the x direction.
fn winding(n: usize) -> Diagram {
    Diagram {
        crossings: Default::default(),
        components: vec![Component::new(
            "c0",
            (1..=n as u32).map(|p| Event::wall_x(Sign::Plus, p)).collect(),
        )],
    }
}

/// Fixture diagrams. `Ln(<n>)` is `n` parallel x-loops and `W(<n>)` a single
/// loop winding `n` times; `W2` is `W(2)`. `A#B` splices the first component of local fixture `B`
/// at the end of the first component of `A`.
pub fn builtin_example(name: &str) -> Result<Diagram> {
    let unknown = || Error::UnknownExample(name.to_string());
    if let Some((a, b)) = name.split_once('#') {
        let base = builtin_example(a)?;
        let local = builtin_example(b)?;
        let at = base.components.first().map(|c| c.events.len()).ok_or_else(unknown)?;
        return connected_sum(&base, 0, at, &local, 0);
    }
    match name {
        "local_unknot" => Ok(Diagram {
            crossings: Default::default(),
            components: vec![Component::new("c0", vec![])],
        }),
        "local_trefoil" => Ok(local_trefoil()),
        "local_hopf" => Ok(Diagram {
            crossings: [(1, Sign::Plus), (2, Sign::Plus)].into_iter().collect(),
            components: vec![
                Component::new("c0", vec![Event::Over(1), Event::Under(2)]),
                Component::new("c1", vec![Event::Under(1), Event::Over(2)]),
            ],
        }),
        "U1" => Ok(walls(1)),
        "W2" => Ok(winding(2)),
        _ => {
            let arg = |prefix: &str| {
                name.strip_prefix(prefix)
                    .and_then(|r| r.strip_suffix(')'))
                    .and_then(|r| r.parse::<usize>().ok())
                    .filter(|&n| n >= 1)
            };
            if let Some(n) = arg("Ln(") {
                Ok(walls(n))
            } else if let Some(n) = arg("W(") {
                Ok(winding(n))
            } else {
                Err(unknown())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(builtin_example("U1").unwrap().components[0].events, vec![Event::wall_x(Sign::Plus, 1)]);
        let l3 = builtin_example("Ln(3)").unwrap();
        assert_eq!(l3.components.len(), 3);
        assert!(l3.components.iter().all(|c| c.events.len() == 1));
        assert_eq!(builtin_example("W2").unwrap().components[0].events.len(), 2);
        assert!(builtin_example("Ln(0)").is_err());
        assert_eq!(builtin_example("W(2)").unwrap(), builtin_example("W2").unwrap());
        assert!(builtin_example("nope").is_err());
        assert_eq!(builtin_example("U1#local_unknot").unwrap(), builtin_example("U1").unwrap());
    }
}
