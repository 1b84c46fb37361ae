use std::collections::BTreeSet;

use super::{Component, Diagram, Event};
use crate::{Error, Result};

/// Splices component `local_comp` of the local diagram `local` into
/// component `comp` of `base` before event index `at` (`at == len` appends).
/// The other local components are appended as new components. Local
/// crossing ids are shifted above those of `base`.
pub fn connected_sum(base: &Diagram, comp: usize, at: usize, local: &Diagram, local_comp: usize) -> Result<Diagram> {
    if !local.is_local() {
        return Err(Error::InvalidDiagram("local diagram contains boundary events".into()));
    }
    let target = base
        .components
        .get(comp)
        .ok_or_else(|| Error::OutOfRange(format!("component {comp}")))?;
    if at > target.events.len() {
        return Err(Error::OutOfRange(format!("position {at} in component {comp}")));
    }
    if local_comp >= local.components.len() {
        return Err(Error::OutOfRange(format!("local component {local_comp}")));
    }
    let offset = base.next_crossing_id() - 1;
    let shift = |e: &Event| match *e {
        Event::Over(c) => Event::Over(c + offset),
        Event::Under(c) => Event::Under(c + offset),
        other => other,
    };
    let mut out = base.clone();
    out.crossings.extend(local.crossings.iter().map(|(c, s)| (c + offset, *s)));
    let spliced: Vec<Event> = local.components[local_comp].events.iter().map(shift).collect();
    out.components[comp].events.splice(at..at, spliced);
    let mut names: BTreeSet<String> = out.components.iter().map(|c| c.name.clone()).collect();
    for (i, lc) in local.components.iter().enumerate() {
        if i == local_comp {
            continue;
        }
        let mut name = lc.name.clone();
        let mut k = 1;
        while names.contains(&name) {
            name = format!("{}_{k}", lc.name);
            k += 1;
        }
        names.insert(name.clone());
        out.components.push(Component::new(name, lc.events.iter().map(shift).collect()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::builtin_example;

    #[test]
    fn unknot_is_identity() {
        let u1 = builtin_example("U1").unwrap();
        let k = builtin_example("local_unknot").unwrap();
        assert_eq!(connected_sum(&u1, 0, 1, &k, 0).unwrap(), u1);
    }

    #[test]
    fn trefoil_sum() {
        let u1 = builtin_example("U1").unwrap();
        let t = builtin_example("local_trefoil").unwrap();
        let d = connected_sum(&u1, 0, 1, &t, 0).unwrap();
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.components[0].events.len(), 7);
        assert_eq!(d.crossings.len(), 3);
        assert_eq!(d.wall_count(crate::diagram::WallKind::X), 1);
        assert!(d.validate().is_empty());
    }

    #[test]
    fn into_empty_component() {
        let k = builtin_example("local_unknot").unwrap();
        let t = builtin_example("local_trefoil").unwrap();
        let d = connected_sum(&k, 0, 0, &t, 0).unwrap();
        assert_eq!(d.components[0].events, t.components[0].events);
    }

    #[test]
    fn extra_components_and_renumbering() {
        let h = builtin_example("local_hopf").unwrap();
        let d = connected_sum(&h, 0, 0, &h, 0).unwrap();
        assert_eq!(d.components.len(), 3);
        assert_eq!(d.crossings.len(), 4);
        assert_ne!(d.components[1].name, d.components[2].name);
        assert!(d.validate().is_empty());
    }

    #[test]
    fn errors() {
        let u1 = builtin_example("U1").unwrap();
        let k = builtin_example("local_unknot").unwrap();
        assert!(connected_sum(&k, 0, 0, &u1, 0).is_err());
        assert!(connected_sum(&u1, 1, 0, &k, 0).is_err());
        assert!(connected_sum(&u1, 0, 2, &k, 0).is_err());
        assert!(connected_sum(&u1, 0, 0, &k, 1).is_err());
    }
}
