use std::fmt;

use serde::{Deserialize, Serialize};

/// A freely reduced word; letters are `(generator id, ±1)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FreeWord(Vec<(usize, i8)>);

impl FreeWord {
    pub fn new(letters: impl IntoIterator<Item = (usize, i8)>) -> Self {
        let mut w = FreeWord(Vec::new());
        for (g, e) in letters {
            debug_assert!(e == 1 || e == -1);
            w.push(g, e);
        }
        w
    }

    pub fn empty() -> Self {
        FreeWord(Vec::new())
    }

    pub fn generator(g: usize) -> Self {
        FreeWord(vec![(g, 1)])
    }

    /// `g^e` for any integer `e`.
    pub fn power_of(g: usize, e: i32) -> Self {
        let s = if e < 0 { -1 } else { 1 };
        FreeWord(vec![(g, s); e.unsigned_abs() as usize])
    }

    fn push(&mut self, g: usize, e: i8) {
        if let Some(&(h, f)) = self.0.last() {
            if h == g && f == -e {
                self.0.pop();
                return;
            }
        }
        self.0.push((g, e));
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        FreeWord(self.0.iter().rev().map(|&(g, e)| (g, -e)).collect())
    }

    pub fn mul(&self, other: &FreeWord) -> Self {
        let mut w = self.clone();
        for &(g, e) in &other.0 {
            w.push(g, e);
        }
        w
    }

    /// Concatenation of several words.
    pub fn product<'a>(words: impl IntoIterator<Item = &'a FreeWord>) -> Self {
        words.into_iter().fold(FreeWord::empty(), |acc, w| acc.mul(w))
    }

    pub fn pow(&self, k: i32) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(FreeWord::empty(), |acc, _| acc.mul(&base))
    }

    pub fn occurrences(&self, g: usize) -> usize {
        self.0.iter().filter(|l| l.0 == g).count()
    }

    pub fn exponent_sum(&self, g: usize) -> i64 {
        self.0.iter().filter(|l| l.0 == g).map(|l| l.1 as i64).sum()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.0.iter().any(|l| l.0 == g)
    }

    /// Replaces each occurrence of `g` by `w` (and `g⁻¹` by `w⁻¹`).
    pub fn substitute(&self, g: usize, w: &FreeWord) -> Self {
        let wi = w.inverse();
        let mut out = FreeWord::empty();
        for &(h, e) in &self.0 {
            if h == g {
                out = out.mul(if e > 0 { w } else { &wi });
            } else {
                out.push(h, e);
            }
        }
        out
    }

    /// Renames generators; letters mapped to `None` are dropped.
    pub fn map_generators(&self, f: impl Fn(usize) -> Option<usize>) -> Self {
        FreeWord::new(self.0.iter().filter_map(|&(g, e)| f(g).map(|h| (h, e))))
    }

    /// Conjugates cyclically until the first and last letters do not cancel.
    pub fn cyclically_reduced(&self) -> Self {
        let mut v = self.0.as_slice();
        while v.len() >= 2 && v[0].0 == v[v.len() - 1].0 && v[0].1 == -v[v.len() - 1].1 {
            v = &v[1..v.len() - 1];
        }
        FreeWord(v.to_vec())
    }

    /// If `g` occurs exactly once, solves `self = 1` for `g`.
    pub fn solve_for(&self, g: usize) -> Option<FreeWord> {
        if self.occurrences(g) != 1 {
            return None;
        }
        let i = self.0.iter().position(|l| l.0 == g)?;
        // a g^e b = 1  =>  g^e = a⁻¹ b⁻¹
        let a = FreeWord(self.0[..i].to_vec());
        let b = FreeWord(self.0[i + 1..].to_vec());
        let rhs = a.inverse().mul(&b.inverse());
        Some(if self.0[i].1 > 0 { rhs } else { rhs.inverse() })
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        let mut out = String::new();
        let mut i = 0;
        while i < self.0.len() {
            let (g, e) = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == (g, e) {
                j += 1;
            }
            let k = (j - i) as i64 * e as i64;
            if !out.is_empty() {
                out.push(' ');
            }
            out.push_str(&names[g]);
            if k != 1 {
                out.push_str(&format!("^{k}"));
            }
            i = j;
        }
        out
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..=self.0.iter().map(|l| l.0).max().unwrap_or(0))
            .map(|g| format!("g{g}"))
            .collect();
        f.write_str(&self.render(&names))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn word() -> impl Strategy<Value = FreeWord> {
        prop::collection::vec((0usize..4, prop::bool::ANY), 0..12)
            .prop_map(|v| FreeWord::new(v.into_iter().map(|(g, s)| (g, if s { 1 } else { -1 }))))
    }

    #[test]
    fn reduction() {
        let w = FreeWord::new([(0, 1), (1, 1), (1, -1), (0, -1), (2, 1)]);
        assert_eq!(w.letters(), &[(2, 1)]);
        assert_eq!(FreeWord::power_of(3, -2).letters(), &[(3, -1), (3, -1)]);
    }

    #[test]
    fn solve() {
        // x1' y x1^-1 y^-1 = 1  => x1' = y x1 y^-1
        let r = FreeWord::new([(4, 1), (1, 1), (3, -1), (1, -1)]);
        assert_eq!(r.solve_for(4).unwrap(), FreeWord::new([(1, 1), (3, 1), (1, -1)]));
        assert!(r.solve_for(0).is_none());
    }

    #[test]
    fn render() {
        let names: Vec<String> = ["x", "y"].iter().map(|s| s.to_string()).collect();
        assert_eq!(FreeWord::new([(0, 1), (0, 1), (1, -1)]).render(&names), "x^2 y^-1");
        assert_eq!(FreeWord::empty().render(&names), "1");
    }

    proptest! {
        #[test]
        fn inverse_cancels(w in word()) {
            prop_assert!(w.mul(&w.inverse()).is_empty());
        }

        #[test]
        fn associative(a in word(), b in word(), c in word()) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn solved_generator_satisfies_relation(w in word()) {
            if let Some(s) = w.solve_for(0) {
                prop_assert!(w.substitute(0, &s).is_empty());
            }
        }
    }
}
