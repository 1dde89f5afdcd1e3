//! The 27 lines on a smooth cubic surface as a labelled incidence graph.
//!
//! Labels follow the blowup of six points: `E_i` exceptional curves, `G_j`
//! conics through five of the points, `F_ij` lines through two of them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Line27 {
    E(u8),
    G(u8),
    /// Indices stored with `i < j`.
    F(u8, u8),
}

impl Line27 {
    /// All 27 labels: `E1..E6`, `G1..G6`, then `F12..F56`.
    pub fn all() -> Vec<Line27> {
        let mut out: Vec<Line27> = (1..=6).map(Line27::E).collect();
        out.extend((1..=6).map(Line27::G));
        for i in 1..=6 {
            for j in i + 1..=6 {
                out.push(Line27::F(i, j));
            }
        }
        out
    }

    pub fn f(i: u8, j: u8) -> Line27 {
        Line27::F(i.min(j), i.max(j))
    }

    /// Image under a permutation of the six points (`perm[i-1]` is the new index of `i`).
    pub fn permute(self, perm: &[u8; 6]) -> Line27 {
        let p = |i: u8| perm[usize::from(i) - 1];
        match self {
            Line27::E(i) => Line27::E(p(i)),
            Line27::G(j) => Line27::G(p(j)),
            Line27::F(i, j) => Line27::f(p(i), p(j)),
        }
    }

    fn has_index(self, k: u8) -> bool {
        matches!(self, Line27::F(i, j) if i == k || j == k)
    }

    /// Whether the two lines meet.
    pub fn meets(self, other: Line27) -> bool {
        use Line27::*;
        match (self, other) {
            (E(_), E(_)) | (G(_), G(_)) => false,
            (E(i), G(j)) | (G(j), E(i)) => i != j,
            (E(i), f @ F(..)) | (f @ F(..), E(i)) => f.has_index(i),
            (G(j), f @ F(..)) | (f @ F(..), G(j)) => f.has_index(j),
            (F(i, j), F(k, l)) => i != k && i != l && j != k && j != l,
        }
    }
}

impl fmt::Display for Line27 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line27::E(i) => write!(f, "E{i}"),
            Line27::G(j) => write!(f, "G{j}"),
            Line27::F(i, j) => write!(f, "F{i}{j}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration27 {
    lines: Vec<Line27>,
    incidence: Vec<Vec<bool>>,
}

impl Configuration27 {
    pub fn build() -> Self {
        let lines = Line27::all();
        let incidence = lines.iter().map(|&a| lines.iter().map(|&b| a != b && a.meets(b)).collect()).collect();
        Self { lines, incidence }
    }

    /// Line configuration of a del Pezzo surface of the given degree; only the cubic is modelled.
    pub fn for_del_pezzo_degree(degree: u32) -> Result<Self> {
        match degree {
            3 => Ok(Self::build()),
            d => Err(Error::Unsupported(format!("line configuration of the degree {d} del Pezzo surface"))),
        }
    }

    pub fn lines(&self) -> &[Line27] {
        &self.lines
    }

    fn index(&self, l: Line27) -> usize {
        self.lines.iter().position(|&m| m == l).expect("all 27 labels are present")
    }

    pub fn incident(&self, a: Line27, b: Line27) -> bool {
        self.incidence[self.index(a)][self.index(b)]
    }

    pub fn neighbors(&self, l: Line27) -> Vec<Line27> {
        let i = self.index(l);
        self.lines.iter().zip(&self.incidence[i]).filter(|(_, &m)| m).map(|(&m, _)| m).collect()
    }

    /// `(v, k, lambda, mu)` if the incidence graph is strongly regular.
    pub fn strongly_regular_parameters(&self) -> Option<(usize, usize, usize, usize)> {
        let n = self.lines.len();
        let common = |a: usize, b: usize| (0..n).filter(|&c| self.incidence[a][c] && self.incidence[b][c]).count();
        let k = self.incidence[0].iter().filter(|&&m| m).count();
        let (mut lambda, mut mu) = (None, None);
        for a in 0..n {
            if self.incidence[a].iter().filter(|&&m| m).count() != k || self.incidence[a][a] {
                return None;
            }
            for b in a + 1..n {
                let slot = if self.incidence[a][b] { &mut lambda } else { &mut mu };
                let c = common(a, b);
                if *slot.get_or_insert(c) != c {
                    return None;
                }
            }
        }
        Some((n, k, lambda.unwrap_or(0), mu.unwrap_or(0)))
    }

    /// All triangles of the incidence graph.
    pub fn incident_triples(&self) -> Vec<[Line27; 3]> {
        let n = self.lines.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if !self.incidence[a][b] {
                    continue;
                }
                for c in b + 1..n {
                    if self.incidence[a][c] && self.incidence[b][c] {
                        out.push([self.lines[a], self.lines[b], self.lines[c]]);
                    }
                }
            }
        }
        out
    }
}

/// Tritangent planes: `{E_i, G_j, F_ij}` for `i != j` and `{F_ij, F_kl, F_mn}`
/// for partitions of `{1..6}` into pairs. Each triple is sorted.
pub fn tritangent_triples(_c: &Configuration27) -> Vec<[Line27; 3]> {
    let mut out = Vec::new();
    for i in 1..=6 {
        for j in 1..=6 {
            if i != j {
                out.push([Line27::E(i), Line27::G(j), Line27::f(i, j)]);
            }
        }
    }
    // partitions: pair 1 with a, then the smallest remaining with b
    for a in 2..=6u8 {
        let rest: Vec<u8> = (2..=6).filter(|&x| x != a).collect();
        let first = rest[0];
        for &b in &rest[1..] {
            let last: Vec<u8> = rest[1..].iter().copied().filter(|&x| x != b).collect();
            out.push([Line27::f(1, a), Line27::f(first, b), Line27::f(last[0], last[1])]);
        }
    }
    for t in out.iter_mut() {
        t.sort();
    }
    out.sort();
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualCounts {
    pub dual_lines: usize,
    pub triple_points: usize,
    pub triples_per_line: usize,
    pub lines_per_triple: usize,
}

impl DualCounts {
    /// Incidences counted from both sides agree.
    pub fn double_count_holds(&self) -> bool {
        self.dual_lines * self.triples_per_line == self.triple_points * self.lines_per_triple
    }
}

/// Counts for the dual picture: a dual line per line, a triple point per tritangent plane.
pub fn dual_stratification_counts(c: &Configuration27) -> Result<DualCounts> {
    let triples = tritangent_triples(c);
    let per_line: Vec<usize> = c.lines().iter().map(|l| triples.iter().filter(|t| t.contains(l)).count()).collect();
    let k = per_line[0];
    if per_line.iter().any(|&x| x != k) {
        return Err(Error::InvalidInput("tritangent planes are not equidistributed over lines".into()));
    }
    Ok(DualCounts { dual_lines: c.lines().len(), triple_points: triples.len(), triples_per_line: k, lines_per_triple: 3 })
}
