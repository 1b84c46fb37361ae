use super::{Move, Site};
use crate::diagram::{Diagram, Event, Sign, WallKind};
use crate::{Error, Result};

fn mismatch(m: &Move, reason: impl Into<String>) -> Error {
    Error::PatternMismatch { kind: m.variant().to_string(), reason: reason.into() }
}

fn events<'a>(d: &'a Diagram, m: &Move, s: Site) -> Result<&'a Vec<Event>> {
    d.components
        .get(s.component)
        .map(|c| &c.events)
        .ok_or_else(|| mismatch(m, format!("no component {}", s.component)))
}

fn pair(d: &Diagram, m: &Move, s: Site) -> Result<(Event, Event)> {
    let ev = events(d, m, s)?;
    if s.index + 1 >= ev.len() {
        return Err(mismatch(m, format!("no event pair at {}:{}", s.component, s.index)));
    }
    Ok((ev[s.index], ev[s.index + 1]))
}

fn insertion_point(d: &Diagram, m: &Move, s: Site) -> Result<()> {
    if s.index > events(d, m, s)?.len() {
        return Err(mismatch(m, format!("index {} past the end of component {}", s.index, s.component)));
    }
    Ok(())
}

fn sign_of(d: &Diagram, c: u32) -> Sign {
    d.crossings.get(&c).copied().unwrap_or(Sign::Plus)
}

/// Position key shared by events of one kind: walls per edge, vertices.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Slot {
    Wall(WallKind),
    Vertex,
}

fn slot_pos(e: &mut Event) -> Option<(Slot, &mut u32)> {
    match e {
        Event::Wall { kind, pos, .. } => Some((Slot::Wall(*kind), pos)),
        Event::Vertex { index, .. } => Some((Slot::Vertex, index)),
        _ => None,
    }
}

fn slot_of(e: &Event) -> Option<(Slot, Sign, u32)> {
    match *e {
        Event::Wall { kind, sign, pos } => Some((Slot::Wall(kind), sign, pos)),
        Event::Vertex { sign, index } => Some((Slot::Vertex, sign, index)),
        _ => None,
    }
}

fn make(slot: Slot, sign: Sign, pos: u32) -> Event {
    match slot {
        Slot::Wall(kind) => Event::Wall { kind, sign, pos },
        Slot::Vertex => Event::Vertex { sign, index: pos },
    }
}

fn slot_count(d: &Diagram, slot: Slot) -> u32 {
    d.events().filter(|(_, _, e)| slot_of(e).is_some_and(|s| s.0 == slot)).count() as u32
}

/// Adds `by` to every position of `slot` that is at least `from`.
fn shift(d: &mut Diagram, slot: Slot, from: u32, by: i64) {
    for comp in &mut d.components {
        for e in &mut comp.events {
            if let Some((s, p)) = slot_pos(e) {
                if s == slot && *p >= from {
                    *p = (*p as i64 + by) as u32;
                }
            }
        }
    }
}

fn insert_pair(d: &mut Diagram, s: Site, a: Event, b: Event) {
    d.components[s.component].events.splice(s.index..s.index, [a, b]);
}

fn remove_pair(d: &mut Diagram, s: Site) {
    d.components[s.component].events.drain(s.index..s.index + 2);
}

fn swap_pair(d: &mut Diagram, s: Site) {
    d.components[s.component].events.swap(s.index, s.index + 1);
}

fn insert_slot_pair(d: &Diagram, m: &Move, at: Site, slot: Slot, sign: Sign, pos: u32, descending: bool) -> Result<Diagram> {
    insertion_point(d, m, at)?;
    let n = slot_count(d, slot);
    if pos == 0 || pos > n + 1 {
        return Err(mismatch(m, format!("position {pos} outside 1..={}", n + 1)));
    }
    let mut out = d.clone();
    shift(&mut out, slot, pos, 2);
    let (p, q) = if descending { (pos + 1, pos) } else { (pos, pos + 1) };
    insert_pair(&mut out, at, make(slot, sign, p), make(slot, sign.flip(), q));
    Ok(out)
}

fn remove_slot_pair(d: &Diagram, m: &Move, at: Site, want: impl Fn(Slot) -> bool) -> Result<Diagram> {
    let (a, b) = pair(d, m, at)?;
    let (Some((sa, ea, pa)), Some((sb, eb, pb))) = (slot_of(&a), slot_of(&b)) else {
        return Err(mismatch(m, "expected two boundary events"));
    };
    if sa != sb || !want(sa) || ea == eb || pa.abs_diff(pb) != 1 {
        return Err(mismatch(m, "events do not cancel"));
    }
    let mut out = d.clone();
    remove_pair(&mut out, at);
    shift(&mut out, sa, pa.max(pb) + 1, -2);
    Ok(out)
}

/// Start of the arc holding event `i`: the nearest cutting event before it.
fn arc_start(ev: &[Event], i: usize) -> Option<Event> {
    (1..=ev.len())
        .map(|k| ev[(i + ev.len() - k) % ev.len()])
        .find(|e| matches!(e, Event::Under(_)) || e.is_boundary())
}

fn r3_roles(d: &Diagram, m: &Move, top: Site, middle: Site, bottom: Site) -> Result<()> {
    let (t0, t1) = pair(d, m, top)?;
    let (m0, m1) = pair(d, m, middle)?;
    let (b0, b1) = pair(d, m, bottom)?;
    let (Event::Over(p), Event::Over(q)) = (t0, t1) else {
        return Err(mismatch(m, "top pair must be two over events"));
    };
    let under = |e: Event| if let Event::Under(c) = e { Some(c) } else { None };
    let over = |e: Event| if let Event::Over(c) = e { Some(c) } else { None };
    let (ua, c, m_after) = match (under(m0), over(m1), over(m0), under(m1)) {
        (Some(a), Some(c), _, _) => (a, c, true),
        (_, _, Some(c), Some(a)) => (a, c, false),
        _ => return Err(mismatch(m, "middle pair must be an under and an over event")),
    };
    let (a, b) = if ua == p {
        (p, q)
    } else if ua == q {
        (q, p)
    } else {
        return Err(mismatch(m, "middle pair does not pass under the top pair"));
    };
    let (Some(x), Some(y)) = (under(b0), under(b1)) else {
        return Err(mismatch(m, "bottom pair must be two under events"));
    };
    let b_after = match (x, y) {
        (x, y) if x == b && y == c => true,
        (x, y) if x == c && y == b => false,
        _ => return Err(mismatch(m, "bottom pair does not pass under the other two")),
    };
    if a == b || b == c || a == c {
        return Err(mismatch(m, "crossings must be distinct"));
    }
    if (sign_of(d, a) == sign_of(d, b)) != (m_after == b_after) {
        return Err(mismatch(m, "crossing signs do not fit the triangle"));
    }
    let start = arc_start(&d.components[top.component].events, top.index);
    if matches!(start, Some(Event::Under(u)) if u == a || u == b || u == c) {
        return Err(mismatch(m, "top strand leaves the triangle"));
    }
    Ok(())
}

fn r5(d: &Diagram, m: &Move, over: Site, under: Site) -> Result<Diagram> {
    let (a0, a1) = pair(d, m, over)?;
    let (b0, b1) = pair(d, m, under)?;
    let (wall_first, wa, oc, wb, uc) = match (a0, a1, b0, b1) {
        (w, Event::Over(c), v, Event::Under(e)) if w.is_boundary() && v.is_boundary() => (true, w, c, v, e),
        (Event::Over(c), w, Event::Under(e), v) if w.is_boundary() && v.is_boundary() => (false, w, c, v, e),
        _ => return Err(mismatch(m, "expected a wall next to each strand of one crossing")),
    };
    let (Event::Wall { kind: ka, sign: ea, pos: pa }, Event::Wall { kind: kb, sign: eb, pos: pb }) = (wa, wb) else {
        return Err(mismatch(m, "expected wall punctures"));
    };
    if oc != uc || ka != kb || ea != eb || pa.abs_diff(pb) != 1 {
        return Err(mismatch(m, "walls must be adjacent punctures of one edge with equal signs"));
    }
    let s = sign_of(d, oc);
    let forward = if wall_first { pa < pb } else { pa > pb };
    if (s == ea) != forward {
        return Err(mismatch(m, "crossing sign does not fit the slide"));
    }
    let mut out = d.clone();
    let (ia, ib) = if wall_first { (over.index, under.index) } else { (over.index + 1, under.index + 1) };
    out.components[over.component].events[ia] = Event::Wall { kind: ka, sign: ea, pos: pb };
    out.components[under.component].events[ib] = Event::Wall { kind: kb, sign: eb, pos: pa };
    swap_pair(&mut out, over);
    swap_pair(&mut out, under);
    Ok(out)
}

/// Near a vertex the strand sits at the floor on one side and at the ceiling
/// on the other, so pushing the vertex through a double point flips that
/// crossing. With `τ = +` the strand leaves the vertex at the ceiling.
fn v3(d: &Diagram, m: &Move, at: Site) -> Result<Diagram> {
    let (a, b) = pair(d, m, at)?;
    let (c, swapped) = match (a, b) {
        (Event::Under(c), Event::Vertex { sign: Sign::Plus, .. }) => (c, (b, Event::Over(c))),
        (Event::Vertex { sign: Sign::Plus, .. }, Event::Over(c)) => (c, (Event::Under(c), a)),
        (Event::Over(c), Event::Vertex { sign: Sign::Minus, .. }) => (c, (b, Event::Under(c))),
        (Event::Vertex { sign: Sign::Minus, .. }, Event::Under(c)) => (c, (Event::Over(c), a)),
        _ => return Err(mismatch(m, "vertex cannot pass this side of the crossing")),
    };
    let mut out = d.clone();
    let ev = &mut out.components[at.component].events;
    ev[at.index] = swapped.0;
    ev[at.index + 1] = swapped.1;
    for (ci, comp) in out.components.iter_mut().enumerate() {
        for (i, e) in comp.events.iter_mut().enumerate() {
            if ci == at.component && (i == at.index || i == at.index + 1) {
                continue;
            }
            *e = match *e {
                Event::Over(x) if x == c => Event::Under(c),
                Event::Under(x) if x == c => Event::Over(c),
                other => other,
            };
        }
    }
    let s = sign_of(d, c).flip();
    out.crossings.insert(c, s);
    Ok(out)
}

/// Applies `m` and checks that the result is a valid diagram.
pub fn apply_move(d: &Diagram, m: &Move) -> Result<Diagram> {
    let out = match *m {
        Move::R1Add { at, sign, under_first } => {
            insertion_point(d, m, at)?;
            let c = d.next_crossing_id();
            let mut out = d.clone();
            out.crossings.insert(c, sign);
            let (a, b) = if under_first { (Event::Under(c), Event::Over(c)) } else { (Event::Over(c), Event::Under(c)) };
            insert_pair(&mut out, at, a, b);
            out
        }
        Move::R1Remove { at } => {
            let c = match pair(d, m, at)? {
                (Event::Over(a), Event::Under(b)) | (Event::Under(a), Event::Over(b)) if a == b => a,
                _ => return Err(mismatch(m, "expected over and under of one crossing")),
            };
            let mut out = d.clone();
            remove_pair(&mut out, at);
            out.crossings.remove(&c);
            out
        }
        Move::R2Add { over, under, sign, under_first } => {
            insertion_point(d, m, over)?;
            insertion_point(d, m, under)?;
            let c = d.next_crossing_id();
            let c2 = c + 1;
            let mut out = d.clone();
            out.crossings.insert(c, sign);
            out.crossings.insert(c2, sign.flip());
            let op = (Event::Over(c), Event::Over(c2));
            let up = (Event::Under(c2), Event::Under(c));
            let over_later = over.component == under.component
                && (over.index > under.index || (over.index == under.index && under_first));
            if over_later {
                insert_pair(&mut out, over, op.0, op.1);
                insert_pair(&mut out, under, up.0, up.1);
            } else {
                insert_pair(&mut out, under, up.0, up.1);
                insert_pair(&mut out, over, op.0, op.1);
            }
            out
        }
        Move::R2Remove { over, under } => {
            let (Event::Over(a), Event::Over(b)) = pair(d, m, over)? else {
                return Err(mismatch(m, "first site must hold two over events"));
            };
            if pair(d, m, under)? != (Event::Under(b), Event::Under(a)) || a == b {
                return Err(mismatch(m, "second site must pass under both in reverse order"));
            }
            if sign_of(d, a) == sign_of(d, b) {
                return Err(mismatch(m, "crossing signs must be opposite"));
            }
            let mut out = d.clone();
            let (first, second) = if over.component == under.component && over.index < under.index {
                (under, over)
            } else {
                (over, under)
            };
            remove_pair(&mut out, first);
            remove_pair(&mut out, second);
            out.crossings.remove(&a);
            out.crossings.remove(&b);
            out
        }
        Move::R3 { top, middle, bottom } => {
            r3_roles(d, m, top, middle, bottom)?;
            let mut out = d.clone();
            for s in [top, middle, bottom] {
                swap_pair(&mut out, s);
            }
            out
        }
        Move::R4Add { at, kind, sign, pos, descending } => insert_slot_pair(d, m, at, Slot::Wall(kind), sign, pos, descending)?,
        Move::R4Remove { at } => remove_slot_pair(d, m, at, |s| s != Slot::Vertex)?,
        Move::R5 { over, under } => r5(d, m, over, under)?,
        Move::V1Add { at, sign, index, descending } => insert_slot_pair(d, m, at, Slot::Vertex, sign, index, descending)?,
        Move::V1Remove { at } => remove_slot_pair(d, m, at, |s| s == Slot::Vertex)?,
        Move::V2 { at } => {
            let (a, b) = pair(d, m, at)?;
            let ok = matches!((a, b), (Event::Vertex { .. }, Event::Wall { .. }) | (Event::Wall { .. }, Event::Vertex { .. }));
            if !ok {
                return Err(mismatch(m, "expected a vertex next to a wall puncture"));
            }
            let mut out = d.clone();
            swap_pair(&mut out, at);
            out
        }
        Move::V3 { at } => v3(d, m, at)?,
        Move::V4 { .. } => return Err(Error::ForbiddenMove("V4".into())),
    };
    out.check_valid()?;
    Ok(out)
}

/// The move undoing `m` on `apply_move(d, m)`.
pub fn inverse(d: &Diagram, m: &Move) -> Result<Move> {
    let same = |a: Site, b: Site| a.component == b.component;
    Ok(match *m {
        Move::R1Add { at, .. } => Move::R1Remove { at },
        Move::R1Remove { at } => {
            let (a, _) = pair(d, m, at)?;
            let c = a.crossing().expect("crossing event");
            Move::R1Add { at, sign: sign_of(d, c), under_first: matches!(a, Event::Under(_)) }
        }
        Move::R2Add { over, under, under_first, .. } => {
            if !same(over, under) {
                Move::R2Remove { over, under }
            } else if over.index < under.index || (over.index == under.index && !under_first) {
                Move::R2Remove { over, under: Site::new(under.component, under.index + 2) }
            } else {
                Move::R2Remove { over: Site::new(over.component, over.index + 2), under }
            }
        }
        Move::R2Remove { over, under } => {
            let (a, _) = pair(d, m, over)?;
            let sign = sign_of(d, a.crossing().expect("crossing event"));
            if !same(over, under) {
                Move::R2Add { over, under, sign, under_first: false }
            } else if over.index < under.index {
                Move::R2Add { over, under: Site::new(under.component, under.index - 2), sign, under_first: false }
            } else {
                Move::R2Add { over: Site::new(over.component, over.index - 2), under, sign, under_first: true }
            }
        }
        Move::R4Add { at, .. } => Move::R4Remove { at },
        Move::V1Add { at, .. } => Move::V1Remove { at },
        Move::R4Remove { at } | Move::V1Remove { at } => {
            let (a, b) = pair(d, m, at)?;
            let ((_, sign, pa), (_, _, pb)) = (slot_of(&a).expect("boundary"), slot_of(&b).expect("boundary"));
            match a {
                Event::Wall { kind, .. } => Move::R4Add { at, kind, sign, pos: pa.min(pb), descending: pa > pb },
                _ => Move::V1Add { at, sign, index: pa.min(pb), descending: pa > pb },
            }
        }
        Move::R3 { .. } | Move::R5 { .. } | Move::V2 { .. } | Move::V3 { .. } => m.clone(),
        Move::V4 { .. } => return Err(Error::ForbiddenMove("V4".into())),
    })
}
