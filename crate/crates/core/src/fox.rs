//! Fox free differential calculus and Alexander matrices.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::algebra::{Cyclo, LaurentPoly};
use crate::presentation::{FreeWord, HomologyDecomposition, Presentation};
use crate::{Error, Result};

/// Element of the integral group ring of a free group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GroupRingElem(BTreeMap<FreeWord, i64>);

impl GroupRingElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(FreeWord::empty())
    }

    pub fn word(w: FreeWord) -> Self {
        GroupRingElem([(w, 1)].into_iter().collect())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, FreeWord)>) -> Self {
        let mut out = Self::zero();
        for (c, w) in terms {
            out.add_term(w, c);
        }
        out
    }

    fn add_term(&mut self, w: FreeWord, c: i64) {
        if c == 0 {
            return;
        }
        match self.0.entry(w) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, i64)> {
        self.0.iter().map(|(w, c)| (w, *c))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        GroupRingElem(self.0.iter().map(|(w, c)| (w.clone(), -c)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                out.add_term(a.mul(b), x * y);
            }
        }
        out
    }

    pub fn left_mul_word(&self, w: &FreeWord) -> Self {
        GroupRingElem::word(w.clone()).mul(self)
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms().enumerate() {
            let body = if w.is_empty() { String::new() } else { w.render(names).replace(' ', "") };
            let sign = if c < 0 { "-" } else if i > 0 { "+" } else { "" };
            let mag = c.abs();
            let sep = if i > 0 { " " } else { "" };
            let term = match (mag, body.is_empty()) {
                (_, true) => mag.to_string(),
                (1, false) => body,
                (_, false) => format!("{mag}*{body}"),
            };
            if i > 0 {
                out.push_str(&format!("{sep}{sign} {term}"));
            } else {
                out.push_str(&format!("{sign}{term}"));
            }
        }
        out
    }
}

/// `∂w/∂g`.
pub fn fox_derivative(w: &FreeWord, g: usize) -> GroupRingElem {
    let mut out = GroupRingElem::zero();
    let letters = w.letters();
    for (i, &(h, e)) in letters.iter().enumerate() {
        if h != g {
            continue;
        }
        let prefix = FreeWord::new(letters[..i].iter().copied());
        if e > 0 {
            out.add_term(prefix, 1);
        } else {
            out.add_term(prefix.mul(&FreeWord::new([(g, -1)])), -1);
        }
    }
    out
}

/// Entry `(i, j)` is the derivative of relation `i` by generator `j`.
pub fn jacobian(p: &Presentation) -> Vec<Vec<GroupRingElem>> {
    p.relations
        .iter()
        .map(|r| (0..p.generators.len()).map(|g| fox_derivative(&r.word, g)).collect())
        .collect()
}

/// Character of the torsion subgroup: the generator of factor `i` goes to
/// `ζ_d^images[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwistCharacter {
    pub d: u32,
    pub images: Vec<u32>,
}

impl TwistCharacter {
    pub fn trivial(factors: usize) -> Self {
        TwistCharacter { d: 1, images: vec![0; factors] }
    }

    /// Validates against the torsion orders and reduces `d` to the exact
    /// order of the image.
    pub fn new(d: u32, images: &[i64], torsion: &[u64]) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidCharacter("order must be positive".into()));
        }
        if images.len() != torsion.len() {
            return Err(Error::InvalidCharacter(format!(
                "{} images given for {} torsion factors",
                images.len(),
                torsion.len()
            )));
        }
        let d64 = d as i64;
        let mut order = 1i64;
        for (&e, &f) in images.iter().zip(torsion) {
            if (e.rem_euclid(d64) * f as i64) % d64 != 0 {
                return Err(Error::InvalidCharacter(format!("zeta_{d}^{e} does not have order dividing {f}")));
            }
            order = order.lcm(&(d64 / d64.gcd(&e.rem_euclid(d64))));
        }
        let images = images
            .iter()
            .map(|&e| (e.rem_euclid(d64) * order / d64) as u32)
            .collect();
        Ok(TwistCharacter { d: order as u32, images })
    }

    pub fn is_trivial(&self) -> bool {
        self.d == 1
    }

    fn check(&self, h: &HomologyDecomposition) -> Result<()> {
        if self.images.len() != h.torsion.len() {
            return Err(Error::InvalidCharacter(format!(
                "character has {} images, homology has {} torsion factors",
                self.images.len(),
                h.torsion.len()
            )));
        }
        for (&e, &f) in self.images.iter().zip(&h.torsion) {
            if (e as u64 * f) % self.d as u64 != 0 {
                return Err(Error::InvalidCharacter(format!("zeta_{}^{e} on Z/{f}", self.d)));
            }
        }
        Ok(())
    }
}

/// `t1 .. tr` for a free part of rank `r`.
pub fn free_variables(rank: usize) -> Vec<String> {
    (1..=rank).map(|i| format!("t{i}")).collect()
}

/// Image of an exponent-sum vector as `(free exponents, root power)`.
fn image(p: &Presentation, h: &HomologyDecomposition, sigma: &TwistCharacter, exps: &[i64]) -> (Vec<i32>, i64) {
    let im = h.image_of_exponents(&p.generators, exps);
    let k: i64 = im.torsion.iter().zip(&sigma.images).map(|(&c, &e)| c * e as i64).sum();
    (im.free.iter().map(|&v| v as i32).collect(), k.rem_euclid(sigma.d as i64))
}

fn collect(vars: &[String], d: u32, acc: BTreeMap<(Vec<i32>, i64), i64>) -> LaurentPoly {
    LaurentPoly::from_terms(
        vars,
        d,
        acc.into_iter().filter(|(_, c)| *c != 0).map(|((m, k), c)| {
            (m, Cyclo::root_power(d, k).scale(&num_rational::BigRational::from_integer(c.into())))
        }),
    )
}

/// Pushes a group ring element through abelianization and the character.
pub fn abelianize_entry(e: &GroupRingElem, p: &Presentation, h: &HomologyDecomposition, sigma: &TwistCharacter) -> Result<LaurentPoly> {
    sigma.check(h)?;
    let vars = free_variables(h.free_rank);
    let mut acc = BTreeMap::new();
    for (w, c) in e.terms() {
        let exps: Vec<i64> = (0..p.generators.len()).map(|g| w.exponent_sum(g)).collect();
        *acc.entry(image(p, h, sigma, &exps)).or_insert(0) += c;
    }
    Ok(collect(&vars, sigma.d, acc))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderMatrix {
    pub entries: Vec<Vec<LaurentPoly>>,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub vars: Vec<String>,
    pub d: u32,
}

impl AlexanderMatrix {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.col_labels.len()
    }

    /// Applies a ring map to every entry.
    pub fn map(&self, vars: Vec<String>, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        AlexanderMatrix {
            entries: self.entries.iter().map(|r| r.iter().map(&f).collect()).collect(),
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
            vars,
            d: self.d,
        }
    }

    pub fn render(&self) -> String {
        let mut out = format!("columns: {}\n", self.col_labels.join(", "));
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            out.push_str(&format!("[{}]\n", cells.join(", ")));
        }
        out
    }
}

/// Abelianized Jacobian, computed letter by letter without expanding the
/// free group ring.
pub fn alexander_matrix(p: &Presentation, h: &HomologyDecomposition, sigma: &TwistCharacter) -> Result<AlexanderMatrix> {
    sigma.check(h)?;
    let vars = free_variables(h.free_rank);
    let n = p.generators.len();
    let names = p.names();
    let mut entries = Vec::with_capacity(p.relations.len());
    for r in &p.relations {
        let mut acc: Vec<BTreeMap<(Vec<i32>, i64), i64>> = vec![BTreeMap::new(); n];
        let mut prefix = vec![0i64; n];
        for &(g, e) in r.word.letters() {
            if e > 0 {
                *acc[g].entry(image(p, h, sigma, &prefix)).or_insert(0) += 1;
                prefix[g] += 1;
            } else {
                prefix[g] -= 1;
                *acc[g].entry(image(p, h, sigma, &prefix)).or_insert(0) -= 1;
            }
        }
        entries.push(acc.into_iter().map(|a| collect(&vars, sigma.d, a)).collect());
    }
    Ok(AlexanderMatrix {
        entries,
        row_labels: p.relations.iter().map(|r| r.word.render(&names)).collect(),
        col_labels: names,
        vars,
        d: sigma.d,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::builtin_example;
    use crate::presentation::{build_presentation, first_homology, tietze_simplify};
    use proptest::prelude::*;

    fn w(letters: &[(usize, i8)]) -> FreeWord {
        FreeWord::new(letters.iter().copied())
    }

    #[test]
    fn base_rules() {
        assert_eq!(fox_derivative(&w(&[(0, 1)]), 0), GroupRingElem::one());
        assert!(fox_derivative(&w(&[(1, 1)]), 0).is_zero());
        assert_eq!(fox_derivative(&w(&[(0, -1)]), 0), GroupRingElem::from_terms([(-1, w(&[(0, -1)]))]));
        assert_eq!(
            fox_derivative(&w(&[(0, 1), (0, 1)]), 0),
            GroupRingElem::from_terms([(1, FreeWord::empty()), (1, w(&[(0, 1)]))])
        );
    }

    #[test]
    fn printed_entries() {
        let names: Vec<String> = ["x", "y", "z", "x1"].iter().map(|s| s.to_string()).collect();
        let r = w(&[(3, 1), (1, 1), (3, -1), (1, -1)]);
        assert_eq!(fox_derivative(&r, 3).render(&names), "1 - x1yx1^-1");
        let c = w(&[(2, 1), (0, 1), (2, -1), (0, -1)]);
        assert_eq!(fox_derivative(&c, 0).render(&names), "z - zxz^-1x^-1");
    }

    #[test]
    fn character_canonical_order() {
        assert_eq!(TwistCharacter::new(2, &[0], &[2]).unwrap(), TwistCharacter::trivial(1));
        assert_eq!(TwistCharacter::new(4, &[2], &[2]).unwrap(), TwistCharacter { d: 2, images: vec![1] });
        assert!(TwistCharacter::new(3, &[1], &[2]).is_err());
        assert!(TwistCharacter::new(2, &[1, 1], &[2]).is_err());
    }

    #[test]
    fn u1_entries() {
        let d = builtin_example("U1").unwrap();
        let p = tietze_simplify(&build_presentation(&d));
        let h = first_homology(&d).unwrap();
        let a = alexander_matrix(&p, &h, &TwistCharacter::trivial(0)).unwrap();
        // x1 ↦ 0 so ∂[x1,y]/∂x1 = 1 - x1 y x1^-1 ↦ 1 - y.
        let y = LaurentPoly::from_terms(&a.vars, 1, [(h.meridians[1].free.iter().map(|&v| v as i32).collect(), Cyclo::one(1))]);
        assert_eq!(a.entries[0][3], LaurentPoly::one(&a.vars, 1).sub(&y));
    }

    #[test]
    fn w2_twisted_entry() {
        let d = builtin_example("W2").unwrap();
        let p = build_presentation(&d);
        let h = first_homology(&d).unwrap();
        let sigma = TwistCharacter::new(2, &[1], &h.torsion).unwrap();
        let g = p.generator_id("x1").unwrap();
        let e = GroupRingElem::one().sub(&GroupRingElem::word(FreeWord::generator(g)));
        let v = abelianize_entry(&e, &p, &h, &sigma).unwrap();
        assert_eq!(v, LaurentPoly::from_int(&free_variables(3), 2, 2));
    }

    #[test]
    fn streaming_matches_group_ring_route() {
        for name in ["U1", "W2", "Ln(2)", "U1#local_trefoil"] {
            let d = builtin_example(name).unwrap();
            let p = build_presentation(&d);
            let h = first_homology(&d).unwrap();
            let sigmas = if h.torsion.is_empty() {
                vec![TwistCharacter::trivial(0)]
            } else {
                vec![TwistCharacter::trivial(1), TwistCharacter::new(2, &[1], &h.torsion).unwrap()]
            };
            for s in sigmas {
                let a = alexander_matrix(&p, &h, &s).unwrap();
                let j = jacobian(&p);
                for (i, row) in j.iter().enumerate() {
                    for (k, e) in row.iter().enumerate() {
                        assert_eq!(abelianize_entry(e, &p, &h, &s).unwrap(), a.entries[i][k], "{name} {i} {k}");
                    }
                }
            }
        }
    }

    #[test]
    fn empty_diagram_block_is_singular() {
        let d = crate::diagram::Diagram::new();
        let p = build_presentation(&d);
        let h = first_homology(&d).unwrap();
        let a = alexander_matrix(&p, &h, &TwistCharacter::trivial(0)).unwrap();
        assert_eq!((a.rows(), a.cols()), (3, 3));
        assert!(crate::algebra::determinant(&a.entries, &a.vars, 1).is_zero());
    }

    fn word() -> impl Strategy<Value = FreeWord> {
        prop::collection::vec((0usize..5, prop::bool::ANY), 0..=12)
            .prop_map(|v| FreeWord::new(v.into_iter().map(|(g, s)| (g, if s { 1 } else { -1 }))))
    }

    proptest! {
        #[test]
        fn fundamental_identity(w in word()) {
            let mut lhs = GroupRingElem::zero();
            for g in 0..5 {
                let gm1 = GroupRingElem::word(FreeWord::generator(g)).sub(&GroupRingElem::one());
                lhs = lhs.add(&fox_derivative(&w, g).mul(&gm1));
            }
            prop_assert_eq!(lhs, GroupRingElem::word(w.clone()).sub(&GroupRingElem::one()));
        }

        #[test]
        fn product_rule(u in word(), v in word(), g in 0usize..5) {
            let lhs = fox_derivative(&u.mul(&v), g);
            let rhs = fox_derivative(&u, g).add(&fox_derivative(&v, g).left_mul_word(&u));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
