use super::{Family, FreeWord, Presentation, Role};

fn family_rank(f: Family) -> usize {
    match f {
        Family::ArcIdentity => 0,
        Family::Q => 1,
        Family::W => 2,
        Family::T => 3,
    }
}

fn total_length(p: &Presentation) -> usize {
    p.relations.iter().map(|r| r.word.len()).sum()
}

/// Eliminates generators defined by a relation `g = w`.
///
/// Primed boundary generators go first, then the rest by descending id so
/// that low-numbered generators survive;
/// among defining relations arc identities are preferred, then Q, then W,
/// then the shortest. T relations are kept as they are and x, y, z are never
/// eliminated. An elimination that would grow the presentation past a fixed
/// budget is skipped.
pub fn tietze_simplify(p: &Presentation) -> Presentation {
    let mut p = p.clone();
    let budget = (4 * total_length(&p)).max(20_000);
    loop {
        let mut order: Vec<usize> = (0..p.generators.len())
            .filter(|&g| !matches!(p.generators[g].role, Role::Torus { .. }))
            .collect();
        order.sort_by_key(|&g| {
            let primed = matches!(p.generators[g].role, Role::Boundary { label } if is_primed(&label));
            (!primed, std::cmp::Reverse(g))
        });
        let mut applied = false;
        for g in order {
            let best = p
                .relations
                .iter()
                .enumerate()
                .filter(|(_, r)| r.family != Family::T && r.word.occurrences(g) == 1)
                .min_by_key(|(i, r)| (family_rank(r.family), r.word.len(), *i))
                .map(|(i, _)| i);
            let Some(i) = best else { continue };
            let w = p.relations[i].word.solve_for(g).expect("single occurrence");
            let uses: usize = p.relations.iter().map(|r| r.word.occurrences(g)).sum::<usize>() - 1;
            if total_length(&p) + uses * w.len() > budget {
                continue;
            }
            eliminate(&mut p, g, i, &w);
            applied = true;
            break;
        }
        if !applied {
            return p;
        }
    }
}

fn is_primed(l: &super::Label) -> bool {
    match *l {
        super::Label::Wall { primed, .. } | super::Label::Vertex { primed, .. } => primed,
    }
}

fn eliminate(p: &mut Presentation, g: usize, rel: usize, w: &FreeWord) {
    p.relations.remove(rel);
    let remap = |h: usize| Some(if h > g { h - 1 } else { h });
    for r in &mut p.relations {
        r.word = r.word.substitute(g, w).map_generators(remap);
    }
    p.relations.retain(|r| !r.word.is_empty());
    for gw in &mut p.gamma {
        *gw = gw.substitute(g, w).map_generators(remap);
    }
    p.generators.remove(g);
}
