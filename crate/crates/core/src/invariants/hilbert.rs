use super::{DiagonalAction, MonoidPresentation};
use crate::error::{Error, Result};
use crate::lattice::Monomial;

/// Degree bound used when a caller does not supply one.
pub const DEFAULT_DEGREE_BOUND: u32 = 8;

/// All irreducible invariant monomials of degree `<= max_degree`.
///
/// An invariant monomial is reducible exactly when some irreducible of lower
/// degree divides it, so degrees are swept upwards and the search tree is cut
/// as soon as the partial exponent vector is divisible by a known generator.
pub fn hilbert_basis_candidates(action: &DiagonalAction, max_degree: u32) -> Vec<Monomial> {
    let n = action.ambient_dim();
    if n == 0 {
        return Vec::new();
    }
    let mut search = Search {
        action,
        chars: action.characters(),
        gens: Vec::new(),
        found: Vec::new(),
        exps: vec![0; n],
        acc: vec![0; action.torus_weights().len() + action.finite_factors().len()],
    };
    for d in 1..=max_degree {
        search.visit(0, d);
        let found = std::mem::take(&mut search.found);
        search.gens.extend(found);
    }
    let mut out: Vec<Monomial> = search.gens.into_iter().map(Monomial::new).collect();
    out.sort();
    out
}

/// Minimal generators of the invariant monoid, certified up to `2 * degree_bound`.
///
/// Fails with [`Error::NonSaturated`] when an irreducible invariant monomial of
/// degree in `(degree_bound, 2 * degree_bound]` exists.
pub fn invariant_generators(action: &DiagonalAction, degree_bound: u32) -> Result<MonoidPresentation> {
    if degree_bound == 0 {
        return Err(Error::InvalidInput("degree bound must be positive".into()));
    }
    let all = hilbert_basis_candidates(action, 2 * degree_bound);
    if let Some(witness) = all.iter().find(|m| m.degree() > degree_bound) {
        return Err(Error::NonSaturated { bound: degree_bound, witness: witness.clone() });
    }
    MonoidPresentation::from_generators(action.ambient_dim(), all)
}

struct Search<'a> {
    action: &'a DiagonalAction,
    chars: Vec<Vec<i64>>,
    gens: Vec<Vec<u32>>,
    found: Vec<Vec<u32>>,
    exps: Vec<u32>,
    acc: Vec<i64>,
}

impl Search<'_> {
    fn bump(&mut self, i: usize, times: i64) {
        for (a, c) in self.acc.iter_mut().zip(&self.chars[i]) {
            *a += times * c;
        }
    }

    /// Is the current vector divisible by a known generator whose `i`-th
    /// exponent equals the current one? Earlier prefixes were already tested.
    fn newly_divisible(&self, i: usize) -> bool {
        let e = self.exps[i];
        self.gens
            .iter()
            .any(|g| g[i] == e && g.iter().zip(&self.exps).all(|(a, b)| a <= b))
    }

    fn visit(&mut self, i: usize, remaining: u32) {
        let n = self.exps.len();
        if i + 1 == n {
            self.exps[i] = remaining;
            self.bump(i, remaining as i64);
            let divisible = remaining > 0 && self.gens.iter().any(|g| g.iter().zip(&self.exps).all(|(a, b)| a <= b));
            if !divisible && self.action.character_is_trivial(&self.acc) {
                self.found.push(self.exps.clone());
            }
            self.bump(i, -(remaining as i64));
            self.exps[i] = 0;
            return;
        }
        let mut e = 0;
        loop {
            self.visit(i + 1, remaining - e);
            if e == remaining {
                break;
            }
            e += 1;
            self.exps[i] = e;
            self.bump(i, 1);
            if self.newly_divisible(i) {
                break;
            }
        }
        self.bump(i, -(e as i64));
        self.exps[i] = 0;
    }
}
