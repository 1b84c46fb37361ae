use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{build_presentation, Generator, Presentation, Role};
use crate::algebra::{invariant_factors, smith_normal_form, IntMatrix};
use crate::diagram::{Diagram, HomologyClass};
use crate::{Error, Result};

pub fn homology_class(d: &Diagram, component: usize) -> Result<HomologyClass> {
    d.homology_class(component)
}

/// Coordinates of a group element in `Z^free_rank ⊕ ⨁ Z/torsion[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelImage {
    pub free: Vec<i64>,
    pub torsion: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyDecomposition {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
    /// Images of x, y, z followed by one meridian per component. Every
    /// non-torus generator is a meridian of its component.
    pub meridians: Vec<AbelImage>,
    pub classes: Vec<HomologyClass>,
}

impl HomologyDecomposition {
    pub fn image(&self, g: &Generator) -> &AbelImage {
        match (&g.role, g.component) {
            (Role::Torus { axis }, _) => &self.meridians[(*axis as u8 - b'x') as usize],
            (_, Some(c)) => &self.meridians[3 + c],
            (_, None) => unreachable!("non-torus generators carry a component"),
        }
    }

    /// Image of a word given by exponent sums per generator.
    pub fn image_of_exponents(&self, gens: &[Generator], exps: &[i64]) -> AbelImage {
        let mut free = vec![0i64; self.free_rank];
        let mut torsion = vec![0i64; self.torsion.len()];
        for (g, &e) in gens.iter().zip(exps) {
            let im = self.image(g);
            for (a, b) in free.iter_mut().zip(&im.free) {
                *a += e * b;
            }
            for (a, b) in torsion.iter_mut().zip(&im.torsion) {
                *a += e * b;
            }
        }
        for (a, &m) in torsion.iter_mut().zip(&self.torsion) {
            *a = a.rem_euclid(m as i64);
        }
        AbelImage { free, torsion }
    }

    /// Whether every relation of `p` maps to zero.
    pub fn kills(&self, p: &Presentation) -> bool {
        p.relations.iter().all(|r| {
            let exps: Vec<i64> = (0..p.generators.len()).map(|g| r.word.exponent_sum(g)).collect();
            let im = self.image_of_exponents(&p.generators, &exps);
            im.free.iter().all(|&v| v == 0) && im.torsion.iter().all(|&v| v == 0)
        })
    }

    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        if self.free_rank > 0 || self.torsion.is_empty() {
            parts.push(if self.free_rank == 1 { "Z".to_string() } else { format!("Z^{}", self.free_rank) });
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        parts.join(" + ")
    }
}

/// Exponent sums: one row per relation, one column per generator.
pub fn relation_matrix(p: &Presentation) -> IntMatrix {
    let rows: Vec<Vec<i64>> = p
        .relations
        .iter()
        .map(|r| (0..p.generators.len()).map(|g| r.word.exponent_sum(g)).collect())
        .collect();
    IntMatrix::from_rows_with_cols(&rows, p.generators.len()).expect("rectangular")
}

fn split(factors: &[BigInt], cols: usize) -> (usize, Vec<u64>) {
    let nonzero = factors.iter().filter(|f| !f.is_zero()).count();
    let torsion = factors
        .iter()
        .filter(|f| **f > BigInt::one())
        .map(|f| f.to_u64().expect("torsion order fits u64"))
        .collect();
    (cols - nonzero, torsion)
}

/// Smith normal form of the abelianized relation matrix.
pub fn snf_decomposition(p: &Presentation) -> (usize, Vec<u64>) {
    let m = relation_matrix(p);
    split(&invariant_factors(&m), m.cols())
}

/// Per-component classes as columns of a 3 x ω matrix; H₁ is Z³ plus the
/// cokernel of its transpose.
fn class_matrix(classes: &[HomologyClass]) -> IntMatrix {
    let rows: Vec<Vec<i64>> = vec![
        classes.iter().map(|c| c.delta).collect(),
        classes.iter().map(|c| c.sigma).collect(),
        classes.iter().map(|c| c.xi).collect(),
    ];
    IntMatrix::from_rows_with_cols(&rows, classes.len()).expect("rectangular")
}

/// Closed form from the component classes alone.
pub fn class_decomposition(d: &Diagram) -> Result<(usize, Vec<u64>)> {
    let classes = (0..d.components.len())
        .map(|c| d.homology_class(c))
        .collect::<Result<Vec<_>>>()?;
    let m = class_matrix(&classes);
    let (free, torsion) = split(&invariant_factors(&m), m.cols());
    Ok((free + 3, torsion))
}

/// First homology of the complement, computed from the component classes
/// and cross-checked against the Smith form of the presentation.
pub fn first_homology(d: &Diagram) -> Result<HomologyDecomposition> {
    let classes = (0..d.components.len())
        .map(|c| d.homology_class(c))
        .collect::<Result<Vec<_>>>()?;
    let omega = classes.len();
    let (free_rank, torsion) = class_decomposition(d)?;
    let p = build_presentation(d);
    let snf = snf_decomposition(&p);
    if snf != (free_rank, torsion.clone()) {
        return Err(Error::Inconsistency(format!(
            "class route gives {:?}, presentation route gives {:?}",
            (free_rank, &torsion),
            snf
        )));
    }

    // Relations among x, y, z, g_1..g_ω are the rows of [0 | M].
    let rows: Vec<Vec<i64>> = [|c: &HomologyClass| c.delta, |c: &HomologyClass| c.sigma, |c: &HomologyClass| c.xi]
        .iter()
        .map(|f| [0, 0, 0].into_iter().chain(classes.iter().map(f)).collect())
        .collect();
    let r = IntMatrix::from_rows_with_cols(&rows, 3 + omega).expect("rectangular");
    let sd = smith_normal_form(&r);
    let diag = sd.diagonal();
    let n = 3 + omega;
    let meridians = (0..n)
        .map(|g| {
            let mut free = Vec::new();
            let mut tors = Vec::new();
            for i in 0..n {
                let v = sd.v[(g, i)].clone();
                let s = diag.get(i).cloned().unwrap_or_else(BigInt::zero);
                if s.is_zero() {
                    free.push(v.to_i64().expect("coordinate fits i64"));
                } else if s > BigInt::one() {
                    tors.push(v.mod_floor(&s).to_i64().expect("coordinate fits i64"));
                }
            }
            AbelImage { free, torsion: tors }
        })
        .collect();
    let h = HomologyDecomposition { free_rank, torsion, meridians, classes };
    if !h.kills(&p) {
        return Err(Error::Inconsistency("abelianization map does not kill a relation".into()));
    }
    Ok(h)
}
