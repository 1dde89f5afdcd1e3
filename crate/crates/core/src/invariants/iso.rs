use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::MonoidPresentation;
use crate::error::{Error, Result};

/// Result of comparing two monoid congruences through a generator bijection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoCertificate {
    pub isomorphic: bool,
    pub degree_bound: u32,
    /// Generator words compared on both sides.
    pub words_checked: usize,
    /// Distinct elements of the monoid reached within the bound.
    pub classes: usize,
    /// Two words identified on exactly one side, rendered with `a`'s labels.
    pub counterexample: Option<(String, String)>,
    pub reason: Option<String>,
}

impl IsoCertificate {
    fn refuted(degree_bound: u32, reason: String) -> Self {
        Self { isomorphic: false, degree_bound, words_checked: 0, classes: 0, counterexample: None, reason: Some(reason) }
    }
}

/// Does `generator_map` (generator `i` of `a` to generator `map[i]` of `b`)
/// carry the congruence of `a` onto that of `b` for all words of generator
/// degree `<= degree_bound`?
pub fn presentations_isomorphic(
    a: &MonoidPresentation,
    b: &MonoidPresentation,
    generator_map: &[usize],
    degree_bound: u32,
) -> IsoCertificate {
    if a.len() != b.len() {
        return IsoCertificate::refuted(degree_bound, format!("generator counts differ: {} vs {}", a.len(), b.len()));
    }
    if generator_map.len() != a.len() {
        return IsoCertificate::refuted(degree_bound, "generator map has the wrong length".into());
    }
    let mut seen = vec![false; b.len()];
    for &j in generator_map {
        if j >= b.len() || std::mem::replace(&mut seen[j], true) {
            return IsoCertificate::refuted(degree_bound, "generator map is not a bijection".into());
        }
    }

    let mut forward: HashMap<Vec<u32>, (Vec<u32>, Vec<u32>)> = HashMap::new();
    let mut backward: HashMap<Vec<u32>, (Vec<u32>, Vec<u32>)> = HashMap::new();
    let mut words_checked = 0usize;
    let mut counterexample = None;

    let mut word = vec![0u32; a.len()];
    let mut visit = |word: &[u32]| -> bool {
        words_checked += 1;
        let mut mapped = vec![0u32; b.len()];
        for (i, &c) in word.iter().enumerate() {
            mapped[generator_map[i]] = c;
        }
        let ka = a.expand(word);
        let kb = b.expand(&mapped);
        if let Some((expected_kb, witness)) = forward.get(&ka) {
            if *expected_kb != kb {
                counterexample = Some((a.word_to_string(witness), a.word_to_string(word)));
                return false;
            }
        } else {
            forward.insert(ka.clone(), (kb.clone(), word.to_vec()));
        }
        if let Some((expected_ka, witness)) = backward.get(&kb) {
            if *expected_ka != ka {
                counterexample = Some((a.word_to_string(witness), a.word_to_string(word)));
                return false;
            }
        } else {
            backward.insert(kb, (ka, word.to_vec()));
        }
        true
    };
    let ok = for_each_word(&mut word, 0, degree_bound, &mut visit);

    IsoCertificate {
        isomorphic: ok,
        degree_bound,
        words_checked,
        classes: forward.len(),
        counterexample,
        reason: (!ok).then(|| "congruences differ".to_string()),
    }
}

fn for_each_word(word: &mut Vec<u32>, j: usize, budget: u32, f: &mut impl FnMut(&[u32]) -> bool) -> bool {
    if j == word.len() {
        return f(word);
    }
    for c in 0..=budget {
        word[j] = c;
        if !for_each_word(word, j + 1, budget - c, f) {
            word[j] = 0;
            return false;
        }
    }
    word[j] = 0;
    true
}

/// Generator bijection induced by a renaming of ambient variables.
///
/// `variable_map[i]` is the variable of `b` that variable `i` of `a` becomes;
/// variables that never occur in `a`'s generators may map to `None`.
pub fn generator_map_from_variables(
    a: &MonoidPresentation,
    b: &MonoidPresentation,
    variable_map: &[Option<usize>],
) -> Result<Vec<usize>> {
    if variable_map.len() != a.ambient_dim {
        return Err(Error::DimensionMismatch { expected: a.ambient_dim, found: variable_map.len() });
    }
    a.generators
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut image = vec![0u32; b.ambient_dim];
            for (v, &e) in g.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let target = variable_map[v]
                    .filter(|&t| t < b.ambient_dim)
                    .ok_or_else(|| Error::InvalidInput(format!("variable {v} of generator {} is unmapped", a.labels[i])))?;
                image[target] += e;
            }
            b.generators
                .iter()
                .position(|h| h.exponents() == image.as_slice())
                .ok_or_else(|| Error::InvalidInput(format!("image of generator {} is not a generator of the target", a.labels[i])))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{invariant_generators, DiagonalAction};

    fn two_by_two() -> MonoidPresentation {
        let a = DiagonalAction::torus(4, vec![vec![1, 1, -1, -1]]).unwrap();
        invariant_generators(&a, 2).unwrap()
    }

    #[test]
    fn identity_map_is_isomorphism() {
        let p = two_by_two();
        let cert = presentations_isomorphic(&p, &p, &[0, 1, 2, 3], 4);
        assert!(cert.isomorphic);
        assert!(cert.words_checked > 0);
    }

    #[test]
    fn free_monoid_is_not_segre() {
        // four independent variables have no relations; the 2x2 Segre cone has one
        let free = MonoidPresentation::from_generators(4, (0..4).map(|i| crate::Monomial::variable(4, i)).collect()).unwrap();
        let cert = presentations_isomorphic(&two_by_two(), &free, &[0, 1, 2, 3], 2);
        assert!(!cert.isomorphic);
        assert!(cert.counterexample.is_some());
    }

    #[test]
    fn cardinality_mismatch() {
        let free = MonoidPresentation::from_generators(3, (0..3).map(|i| crate::Monomial::variable(3, i)).collect()).unwrap();
        let cert = presentations_isomorphic(&two_by_two(), &free, &[0, 1, 2], 2);
        assert!(!cert.isomorphic);
        assert!(cert.reason.unwrap().contains("counts"));
    }
}
