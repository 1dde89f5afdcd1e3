use serde::{Deserialize, Serialize};

use super::{minimal_relations, default_relation_bound, DiagonalAction, MonoidPresentation};
use crate::error::{Error, Result};
use crate::lattice::Monomial;

/// A linear involution `x_i -> sign_i * x_{image_i}` permuting coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoordinateInvolution {
    image: Vec<usize>,
    signs: Vec<i8>,
}

impl CoordinateInvolution {
    pub fn new(image: Vec<usize>, signs: Option<Vec<i8>>) -> Result<Self> {
        let n = image.len();
        let signs = signs.unwrap_or_else(|| vec![1; n]);
        if signs.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: signs.len() });
        }
        if let Some(&s) = signs.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::InvalidInput(format!("sign {s} is not +1 or -1")));
        }
        for (i, &j) in image.iter().enumerate() {
            if j >= n || image[j] != i {
                return Err(Error::InvalidInput(format!("coordinate map is not an involution at index {i}")));
            }
            if signs[i] * signs[j] != 1 {
                return Err(Error::InvalidInput(format!("signs at {i} and {j} do not square to the identity")));
            }
        }
        Ok(Self { image, signs })
    }

    pub fn identity(n: usize) -> Self {
        Self { image: (0..n).collect(), signs: vec![1; n] }
    }

    pub fn dim(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Image monomial under the induced map on functions (signs dropped).
    pub fn apply(&self, m: &Monomial) -> Monomial {
        let mut out = vec![0u32; self.dim()];
        for (i, &e) in m.exponents().iter().enumerate() {
            out[self.image[i]] += e;
        }
        Monomial::new(out)
    }

    /// Where each coordinate goes on the fixed locus: `Some(rep)` for the
    /// surviving coordinate it is identified with, `None` if it must vanish.
    fn fixed_locus_substitution(&self) -> Vec<Option<usize>> {
        (0..self.dim())
            .map(|i| {
                let j = self.image[i];
                if i == j && self.signs[i] == -1 {
                    None
                } else {
                    Some(i.min(j))
                }
            })
            .collect()
    }
}

/// Fixed locus of an involution inside a quotient, as a presentation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedLocus {
    pub presentation: MonoidPresentation,
    /// `(dropped label, surviving label)` for generators that coincide on the fixed locus.
    pub identifications: Vec<(String, String)>,
    /// Labels of generators that vanish on the fixed locus or become products of others.
    pub eliminated: Vec<String>,
    /// For each original generator, its index in the new presentation if it survives.
    pub generator_image: Vec<Option<usize>>,
}

impl FixedLocus {
    /// Index of a generator by its own label or by any label identified with it.
    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.presentation.index_of_label(label).or_else(|| {
            self.identifications
                .iter()
                .find(|(dropped, _)| dropped == label)
                .and_then(|(_, kept)| self.presentation.index_of_label(kept))
        })
    }
}

/// Restrict the invariant generators to the fixed locus of `inv`.
///
/// Coordinates swapped by the involution are identified (the smaller index
/// survives), generators that become equal are merged, and relations among
/// the survivors are recomputed up to `relation_bound` (defaults to three times
/// the top generator degree).
pub fn fixed_locus_presentation(
    action: &DiagonalAction,
    pres: &MonoidPresentation,
    inv: &CoordinateInvolution,
    relation_bound: Option<u32>,
) -> Result<FixedLocus> {
    let n = action.ambient_dim();
    if inv.dim() != n || pres.ambient_dim != n {
        return Err(Error::DimensionMismatch { expected: n, found: inv.dim() });
    }
    for (i, g) in pres.generators.iter().enumerate() {
        if !action.is_invariant(inv.apply(g).exponents()) {
            return Err(Error::NotNormalizing { generator: i });
        }
    }

    let subst = inv.fixed_locus_substitution();
    let mut generators: Vec<Monomial> = Vec::new();
    let mut labels: Vec<String> = Vec::new();
    let mut generator_image = Vec::with_capacity(pres.len());
    let mut identifications = Vec::new();
    let mut eliminated = Vec::new();

    for (g, label) in pres.generators.iter().zip(&pres.labels) {
        let mut restricted = vec![0u32; n];
        let mut vanishes = false;
        for (i, &e) in g.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            match subst[i] {
                Some(r) => restricted[r] += e,
                None => vanishes = true,
            }
        }
        if vanishes {
            eliminated.push(label.clone());
            generator_image.push(None);
            continue;
        }
        let restricted = Monomial::new(restricted);
        match generators.iter().position(|h| h == &restricted) {
            Some(k) => {
                identifications.push((label.clone(), labels[k].clone()));
                generator_image.push(Some(k));
            }
            None => {
                generator_image.push(Some(generators.len()));
                generators.push(restricted);
                labels.push(label.clone());
            }
        }
    }

    // drop survivors that factor through the others
    let mut k = 0;
    while k < generators.len() {
        let others: Vec<Monomial> =
            generators.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, g)| g.clone()).collect();
        if in_monoid(&generators[k], &others) {
            eliminated.push(labels[k].clone());
            generators.remove(k);
            labels.remove(k);
            for slot in generator_image.iter_mut() {
                *slot = match *slot {
                    Some(j) if j == k => None,
                    Some(j) if j > k => Some(j - 1),
                    other => other,
                };
            }
        } else {
            k += 1;
        }
    }

    let bound = relation_bound.unwrap_or_else(|| default_relation_bound(&generators));
    let relations = minimal_relations(&generators, bound);
    let presentation = MonoidPresentation {
        ambient_dim: n,
        variable_names: pres.variable_names.clone(),
        generators,
        labels,
        relations,
    };
    Ok(FixedLocus { presentation, identifications, eliminated, generator_image })
}

/// Whether `target` is a product of elements of `gens` (with repetition).
fn in_monoid(target: &Monomial, gens: &[Monomial]) -> bool {
    if target.is_one() {
        return true;
    }
    gens.iter()
        .filter(|g| !g.is_one())
        .any(|g| g.quotient_of(target).is_some_and(|rest| in_monoid(&rest, gens)))
}
