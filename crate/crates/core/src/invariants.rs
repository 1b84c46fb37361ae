//! Elementary ideals and (twisted) Alexander polynomials.

use serde::{Deserialize, Serialize};

use crate::algebra::{laurent_gcd, size_k_minors, Cyclo, LaurentPoly};
use crate::diagram::Diagram;
use crate::fox::{alexander_matrix, AlexanderMatrix, TwistCharacter};
use crate::presentation::{
    build_presentation, first_homology, tietze_simplify, AbelImage, Family, HomologyDecomposition, Presentation, Relation, X, Y, Z,
};
use crate::{Error, Result};

/// Specialization of the free-part variables onto powers of a single `t`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Collapse {
    /// Keep the multivariable polynomial.
    None,
    /// Every free variable goes to `t`.
    #[default]
    AllToT,
    /// Variable `i` goes to `t^exps[i]`.
    Exponents(Vec<i32>),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlexanderOptions {
    pub collapse: Collapse,
    /// Skip Tietze simplification and pivot elimination; minors of the raw matrix.
    pub raw: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderResult {
    pub raw: LaurentPoly,
    pub canonical: LaurentPoly,
    pub d: u32,
    pub vars: Vec<String>,
    pub generators: usize,
    pub relations: usize,
    pub homology: String,
}

impl AlexanderResult {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "polynomial": self.raw.to_string(),
            "canonical": self.canonical.to_string(),
            "display": display_delta(&self.canonical),
            "d": self.d,
            "vars": self.vars,
            "pipeline": {
                "generators": self.generators,
                "relations": self.relations,
                "homology": self.homology,
            },
        })
    }
}

/// Ring map sending variable `i` to `t^exps[i]`.
pub fn collapse_specialize(p: &LaurentPoly, exps: &[i32]) -> LaurentPoly {
    let images: Vec<Vec<i32>> = exps.iter().map(|&e| vec![e]).collect();
    p.specialize(&["t".to_string()], &images)
}

pub fn unit_equivalent(p: &LaurentPoly, q: &LaurentPoly) -> bool {
    p.unit_equivalent(q)
}

/// Determinants of all `(n - k)`-minors, `n` the number of columns.
pub fn elementary_ideal_generators(a: &AlexanderMatrix, k: usize) -> Result<Vec<LaurentPoly>> {
    let n = a.cols();
    if k > n {
        return Err(Error::OutOfRange(format!("elementary ideal {k} of a matrix with {n} columns")));
    }
    let size = n - k;
    if size == 0 {
        return Ok(vec![LaurentPoly::one(&a.vars, a.d)]);
    }
    if size > a.rows() {
        return Ok(vec![]);
    }
    size_k_minors(&a.entries, n, size, &a.vars, a.d)
}

fn is_unit(p: &LaurentPoly) -> bool {
    if !p.is_monomial() {
        return false;
    }
    let c = p.terms().values().next().expect("monomial");
    let d = c.order();
    (0..d as i64).any(|j| {
        let z = Cyclo::root_power(d, j);
        *c == z || *c == z.neg()
    })
}

/// Clears the row and column of a unit entry and drops both, repeatedly.
/// The ideal of `(n - k)`-minors is unchanged with `n` the current column count.
pub fn eliminate_unit_pivots(a: &AlexanderMatrix) -> AlexanderMatrix {
    let mut m = a.clone();
    loop {
        let col_fill: Vec<usize> = (0..m.cols())
            .map(|j| m.entries.iter().filter(|r| !r[j].is_zero()).count())
            .collect();
        let pivot = (0..m.rows())
            .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
            .filter(|&(i, j)| is_unit(&m.entries[i][j]))
            .min_by_key(|&(i, j)| (col_fill[j], m.entries[i].iter().filter(|e| !e.is_zero()).count(), i, j));
        let Some((pi, pj)) = pivot else { return m };
        let prow = m.entries[pi].clone();
        let inv = LaurentPoly::one(&m.vars, m.d).div_exact(&prow[pj]).expect("unit");
        for i in 0..m.rows() {
            if i == pi || m.entries[i][pj].is_zero() {
                continue;
            }
            let f = m.entries[i][pj].mul(&inv);
            for j in 0..m.cols() {
                if !prow[j].is_zero() {
                    m.entries[i][j] = m.entries[i][j].sub(&f.mul(&prow[j]));
                }
            }
        }
        m.entries.remove(pi);
        m.row_labels.remove(pi);
        for r in &mut m.entries {
            r.remove(pj);
        }
        m.col_labels.remove(pj);
    }
}

fn collapse_matrix(a: &AlexanderMatrix, collapse: &Collapse) -> Result<AlexanderMatrix> {
    let exps = match collapse {
        Collapse::None => return Ok(a.clone()),
        Collapse::AllToT => vec![1; a.vars.len()],
        Collapse::Exponents(e) => {
            if e.len() != a.vars.len() {
                return Err(Error::VariableMismatch);
            }
            e.clone()
        }
    };
    Ok(a.map(vec!["t".to_string()], |p| collapse_specialize(p, &exps)))
}

/// `Δ^σ`: gcd of the first elementary ideal after the character and the
/// optional collapse.
pub fn twisted_alexander(d: &Diagram, sigma: &TwistCharacter, opts: &AlexanderOptions) -> Result<AlexanderResult> {
    let raw_p = build_presentation(d);
    let p = if opts.raw { raw_p } else { tietze_simplify(&raw_p) };
    let h = first_homology(d)?;
    let a = collapse_matrix(&alexander_matrix(&p, &h, sigma)?, &opts.collapse)?;
    let a = if opts.raw { a } else { eliminate_unit_pivots(&a) };
    let minors = elementary_ideal_generators(&a, 1)?;
    let g = if minors.is_empty() { LaurentPoly::zero(&a.vars, a.d) } else { laurent_gcd(&minors) };
    Ok(AlexanderResult {
        canonical: g.unit_normalize(),
        raw: g,
        d: a.d,
        vars: a.vars.clone(),
        generators: p.generators.len(),
        relations: p.relations.len(),
        homology: h.render(),
    })
}

/// `Δ` with the trivial character.
pub fn alexander_polynomial(d: &Diagram, opts: &AlexanderOptions) -> Result<AlexanderResult> {
    let h = first_homology(d)?;
    twisted_alexander(d, &TwistCharacter::trivial(h.torsion.len()), opts)
}

/// Classical Alexander polynomial of a local diagram viewed in the
/// 3-sphere: Wirtinger relations only, every meridian sent to `t`.
pub fn classical_alexander(d: &Diagram) -> Result<LaurentPoly> {
    if !d.is_local() {
        return Err(Error::InvalidDiagram("classical polynomial needs a local diagram".into()));
    }
    let full = build_presentation(d);
    let torus = [X, Y, Z];
    let p = Presentation {
        generators: full.generators[3..].to_vec(),
        relations: full
            .relations
            .iter()
            .filter(|r| r.family == Family::W)
            .map(|r| Relation {
                word: r.word.map_generators(|g| (!torus.contains(&g)).then(|| g - 3)),
                family: r.family,
            })
            .collect(),
        components: full.components,
        ..full
    };
    let omega = d.components.len();
    let unit = |i: Option<usize>| AbelImage { free: (0..omega).map(|c| i64::from(Some(c) == i)).collect(), torsion: vec![] };
    let h = HomologyDecomposition {
        free_rank: omega,
        torsion: vec![],
        meridians: [None, None, None].into_iter().chain((0..omega).map(Some)).map(unit).collect(),
        classes: vec![],
    };
    let a = collapse_matrix(&alexander_matrix(&p, &h, &TwistCharacter::trivial(0))?, &Collapse::AllToT)?;
    let a = eliminate_unit_pivots(&a);
    let minors = elementary_ideal_generators(&a, 1)?;
    let g = if minors.is_empty() { LaurentPoly::zero(&a.vars, 1) } else { laurent_gcd(&minors) };
    Ok(g.unit_normalize())
}

/// Evaluates a univariate integer polynomial at `ζ_d^k · m`, `m` a monomial
/// in `vars`.
pub fn push_forward(p: &LaurentPoly, vars: &[String], d: u32, k: i64, m: &[i32]) -> LaurentPoly {
    let mut out = LaurentPoly::zero(vars, d);
    for (e, c) in p.terms() {
        let q = c.as_rational().expect("integer polynomial").clone();
        let coeff = Cyclo::root_power(d, k * e[0] as i64).scale(&q);
        let mono: Vec<i32> = m.iter().map(|&x| x * e[0]).collect();
        out = out.add(&LaurentPoly::monomial(vars, mono, coeff));
    }
    out
}

/// Univariate integer results with the `(t-1)` power pulled out, e.g.
/// `(t-1)^2 * (1 - t + t^2)`; anything else is printed as is.
pub fn display_delta(p: &LaurentPoly) -> String {
    if p.is_zero() || p.vars().len() != 1 || p.order() != 1 {
        return p.to_string();
    }
    let var = &p.vars()[0];
    let tm1 = LaurentPoly::univariate(var, 1, &[(0, -1), (1, 1)]);
    let mut rest = p.clone();
    let mut k = 0;
    while let Some(q) = rest.div_exact(&tm1) {
        rest = q;
        k += 1;
    }
    let head = match k {
        0 => return p.to_string(),
        1 => format!("({var}-1)"),
        _ => format!("({var}-1)^{k}"),
    };
    if rest.is_one() {
        head
    } else if rest.is_monomial() && rest.num_terms() == 1 && rest.terms().values().next().is_some_and(|c| c.is_one()) {
        format!("{head} * {rest}")
    } else {
        format!("{head} * ({rest})")
    }
}
