//! Binomial relations among monomial generators, by fiber enumeration.
//!
//! A fiber is the set of all factorizations of one ambient monomial into
//! generators. Sweeping fibers by increasing ambient degree, two
//! factorizations are already identified by the lower-degree relations iff
//! they are linked through a chain of factorizations sharing a generator, so
//! each fiber needs exactly `components - 1` new relations.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{DiagonalAction, MonoidPresentation, Relation};
use crate::error::{Error, Result};
use crate::lattice::{grlex_cmp, Monomial};

/// All factorizations of one ambient monomial.
#[derive(Clone, Debug)]
pub struct Fiber {
    pub ambient: Vec<u32>,
    pub factorizations: Vec<Vec<u32>>,
}

/// Fibers of every ambient monomial of degree `<= max_degree` in the monoid
/// generated by `gens`, in graded-lex order of the ambient monomial.
pub fn fibers(gens: &[Monomial], max_degree: u32) -> Vec<Fiber> {
    let Some(n) = gens.first().map(Monomial::dim) else {
        return Vec::new();
    };
    let degrees: Vec<u32> = gens.iter().map(Monomial::degree).collect();
    assert!(degrees.iter().all(|&d| d > 0), "generators must be non-constant");

    let mut map: HashMap<Vec<u32>, Vec<Vec<u32>>> = HashMap::new();
    let mut word = vec![0u32; gens.len()];
    let mut ambient = vec![0u32; n];
    enumerate(gens, &degrees, 0, max_degree, &mut word, &mut ambient, &mut map);

    let mut out: Vec<Fiber> = map
        .into_iter()
        .map(|(ambient, mut factorizations)| {
            factorizations.sort_by(|a, b| grlex_cmp(a, b));
            Fiber { ambient, factorizations }
        })
        .collect();
    out.sort_by(|a, b| grlex_cmp(&a.ambient, &b.ambient));
    out
}

fn enumerate(
    gens: &[Monomial],
    degrees: &[u32],
    j: usize,
    budget: u32,
    word: &mut Vec<u32>,
    ambient: &mut Vec<u32>,
    map: &mut HashMap<Vec<u32>, Vec<Vec<u32>>>,
) {
    if j == gens.len() {
        if word.iter().any(|&c| c > 0) {
            map.entry(ambient.clone()).or_default().push(word.clone());
        }
        return;
    }
    let mut c = 0u32;
    loop {
        enumerate(gens, degrees, j + 1, budget - c * degrees[j], word, ambient, map);
        if (c + 1) * degrees[j] > budget {
            break;
        }
        c += 1;
        word[j] = c;
        for (a, &e) in ambient.iter_mut().zip(gens[j].exponents()) {
            *a += e;
        }
    }
    for (a, &e) in ambient.iter_mut().zip(gens[j].exponents()) {
        *a -= c * e;
    }
    word[j] = 0;
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller index as root so component leaders are canonical
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    fn components(&mut self) -> usize {
        (0..self.parent.len()).filter(|&i| self.find(i) == i).count()
    }
}

/// A minimal generating set of the binomial relations among `gens`, complete
/// for every fiber of ambient degree `<= max_degree`.
pub fn minimal_relations(gens: &[Monomial], max_degree: u32) -> Vec<Relation> {
    let mut out = Vec::new();
    for fiber in fibers(gens, max_degree) {
        let k = fiber.factorizations.len();
        if k < 2 {
            continue;
        }
        let mut uf = UnionFind::new(k);
        for t in 0..gens.len() {
            let mut first = None;
            for (idx, f) in fiber.factorizations.iter().enumerate() {
                if f[t] > 0 {
                    match first {
                        None => first = Some(idx),
                        Some(r) => uf.union(r, idx),
                    }
                }
            }
        }
        // factorizations are sorted, so each root is its component's leading word
        let leaders: Vec<usize> = (0..k).filter(|&i| uf.find(i) == i).collect();
        for &other in &leaders[1..] {
            out.push(Relation::new(fiber.factorizations[leaders[0]].clone(), fiber.factorizations[other].clone()));
        }
    }
    out
}

/// Default ambient-degree bound for relation searches: three times the top generator degree.
pub fn default_relation_bound(gens: &[Monomial]) -> u32 {
    3 * gens.iter().map(Monomial::degree).max().unwrap_or(1)
}

/// Attach a minimal set of binomial relations to generators of `action`'s invariant ring.
pub fn toric_relations(action: &DiagonalAction, gens: &MonoidPresentation, degree_bound: u32) -> Result<MonoidPresentation> {
    if gens.ambient_dim != action.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: action.ambient_dim(), found: gens.ambient_dim });
    }
    if let Some(i) = gens.generators.iter().position(|g| !action.is_invariant(g.exponents())) {
        return Err(Error::InvalidInput(format!("generator {} is not invariant", gens.labels[i])));
    }
    let mut out = gens.clone();
    out.relations = minimal_relations(&gens.generators, degree_bound);
    Ok(out)
}

/// A fiber left disconnected by a candidate relation set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureGap {
    pub ambient: Vec<u32>,
    pub components: usize,
    pub factorizations: usize,
    /// Two factorizations of `ambient` the candidate relations do not connect.
    pub witness: (Vec<u32>, Vec<u32>),
}

/// Outcome of closing a relation set under the monoid operation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub degree_bound: u32,
    pub fibers_checked: usize,
    /// Relations whose two sides expand to different ambient monomials.
    pub invalid_relations: Vec<usize>,
    pub gaps: Vec<ClosureGap>,
}

impl ClosureReport {
    /// The relations are valid and generate the whole kernel congruence up to the bound.
    pub fn is_complete(&self) -> bool {
        self.invalid_relations.is_empty() && self.gaps.is_empty()
    }

    /// Number of independent relations the candidate set is missing up to the bound.
    pub fn missing(&self) -> usize {
        self.gaps.iter().map(|g| g.components - 1).sum()
    }
}

/// Close `relations` by union-find over every fiber up to `max_degree` and
/// report the fibers the induced congruence fails to connect.
pub fn congruence_closure(gens: &[Monomial], relations: &[Relation], max_degree: u32) -> ClosureReport {
    let expand = |w: &[u32]| -> Vec<u32> {
        let mut out = vec![0u32; gens.first().map(Monomial::dim).unwrap_or(0)];
        for (g, &c) in gens.iter().zip(w) {
            for (o, &e) in out.iter_mut().zip(g.exponents()) {
                *o += c * e;
            }
        }
        out
    };
    let invalid_relations: Vec<usize> = relations
        .iter()
        .enumerate()
        .filter(|(_, r)| r.lhs.len() != gens.len() || r.rhs.len() != gens.len() || expand(&r.lhs) != expand(&r.rhs))
        .map(|(i, _)| i)
        .collect();
    let moves: Vec<(&[u32], &[u32])> = relations
        .iter()
        .enumerate()
        .filter(|(i, r)| !invalid_relations.contains(i) && !r.is_trivial())
        .flat_map(|(_, r)| [(r.lhs.as_slice(), r.rhs.as_slice()), (r.rhs.as_slice(), r.lhs.as_slice())])
        .collect();

    let all = fibers(gens, max_degree);
    let mut gaps = Vec::new();
    for fiber in &all {
        let k = fiber.factorizations.len();
        if k < 2 {
            continue;
        }
        let index: HashMap<&[u32], usize> =
            fiber.factorizations.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect();
        let mut uf = UnionFind::new(k);
        for (i, f) in fiber.factorizations.iter().enumerate() {
            for &(from, to) in &moves {
                if from.iter().zip(f).all(|(a, b)| a <= b) {
                    let image: Vec<u32> = f.iter().zip(from).zip(to).map(|((x, a), b)| x - a + b).collect();
                    if let Some(&j) = index.get(image.as_slice()) {
                        uf.union(i, j);
                    }
                }
            }
        }
        let components = uf.components();
        if components > 1 {
            let root = uf.find(0);
            let other = (1..k).find(|&i| uf.find(i) != root).expect("more than one component");
            gaps.push(ClosureGap {
                ambient: fiber.ambient.clone(),
                components,
                factorizations: k,
                witness: (fiber.factorizations[0].clone(), fiber.factorizations[other].clone()),
            });
        }
    }
    ClosureReport { degree_bound: max_degree, fibers_checked: all.len(), invalid_relations, gaps }
}

/// Number of independent identifications a family of relations makes among
/// the generator words it mentions: distinct words minus connected classes.
pub fn family_rank(relations: &[Relation]) -> usize {
    let mut ids: HashMap<&[u32], usize> = HashMap::new();
    for r in relations {
        let next = ids.len();
        ids.entry(r.lhs.as_slice()).or_insert(next);
        let next = ids.len();
        ids.entry(r.rhs.as_slice()).or_insert(next);
    }
    let mut uf = UnionFind::new(ids.len());
    for r in relations {
        uf.union(ids[r.lhs.as_slice()], ids[r.rhs.as_slice()]);
    }
    ids.len() - uf.components()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::invariant_generators;

    fn segre_2x2() -> Vec<Monomial> {
        // x1,x2,y1,y2 with weights (1,1,-1,-1): u_ij = x_i y_j
        let a = DiagonalAction::torus(4, vec![vec![1, 1, -1, -1]]).unwrap();
        invariant_generators(&a, 2).unwrap().generators
    }

    #[test]
    fn single_minor_for_two_by_two() {
        let gens = segre_2x2();
        assert_eq!(gens.len(), 4);
        let rels = minimal_relations(&gens, 8);
        assert_eq!(rels.len(), 1);
        assert_eq!(rels[0].degree(), 2);
    }

    #[test]
    fn closure_detects_missing_relation() {
        let gens = segre_2x2();
        let full = minimal_relations(&gens, 6);
        assert!(congruence_closure(&gens, &full, 6).is_complete());
        let report = congruence_closure(&gens, &[], 6);
        assert!(!report.is_complete());
        assert_eq!(report.gaps[0].components, 2);
    }

    #[test]
    fn closure_flags_invalid_relation() {
        let gens = segre_2x2();
        let bogus = Relation::new(vec![2, 0, 0, 0], vec![0, 2, 0, 0]);
        let report = congruence_closure(&gens, &[bogus], 4);
        assert_eq!(report.invalid_relations, vec![0]);
    }

    #[test]
    fn numerical_semigroup_relations() {
        // t^2, t^3 inside one variable: single relation (t^2)^3 = (t^3)^2
        let gens = vec![Monomial::new(vec![2]), Monomial::new(vec![3])];
        let rels = minimal_relations(&gens, 12);
        assert_eq!(rels, vec![Relation::new(vec![0, 2], vec![3, 0])]);
    }

    #[test]
    fn family_rank_counts_independent_identifications() {
        let a = vec![1, 0, 0];
        let b = vec![0, 1, 0];
        let c = vec![0, 0, 1];
        let rels = vec![
            Relation::new(a.clone(), b.clone()),
            Relation::new(b.clone(), c.clone()),
            Relation::new(a, c),
        ];
        assert_eq!(family_rank(&rels), 2);
    }
}
