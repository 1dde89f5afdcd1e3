//! The diagonal actions, involutions, and displayed relation families that
//! model the two kinds of singular points of the Prym fibration.
//!
//! * `segre`: `C*` on `W x W* = C^8`, weights `+1` on `x`, `-1` on `y`.
//! * `sign-c4`: `-1` on `C^4`.
//! * `triple`: `(C*)^2` on `C^12`, the three-component case.
//! * `z2z2`: `Z2 x Z2` on `C^6` generated by `(1,1,-1,-1,-1,-1)` and `(-1,-1,1,1,-1,-1)`.
//!
//! Displayed relation families are regenerated from their index schemes so
//! their sizes can be compared with the stated counts. Where a family as
//! displayed does not hold, a corrected variant is built alongside it.

use serde::{Deserialize, Serialize};

use super::{CoordinateInvolution, DiagonalAction, FiniteFactor, MonoidPresentation, Relation};
use crate::error::{Error, Result};
use crate::lattice::Monomial;

/// How generators of a named instance are labelled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LabelScheme {
    Segre,
    SignC4,
    Triple,
    Z2z2,
    Generic,
}

pub fn segre_variables() -> Vec<String> {
    (1..=4).map(|i| format!("x{i}")).chain((1..=4).map(|i| format!("y{i}"))).collect()
}

pub fn segre_action() -> DiagonalAction {
    DiagonalAction::torus(8, vec![vec![1, 1, 1, 1, -1, -1, -1, -1]]).expect("static data")
}

/// `x1 = y2, x2 = y1, x3 = y4, x4 = y3`.
pub fn segre_involution() -> CoordinateInvolution {
    CoordinateInvolution::new(vec![5, 4, 7, 6, 1, 0, 3, 2], None).expect("static data")
}

pub fn sign_c4_variables() -> Vec<String> {
    (1..=4).map(|i| format!("w{i}")).collect()
}

pub fn sign_c4_action() -> DiagonalAction {
    DiagonalAction::finite(4, vec![FiniteFactor { modulus: 2, weights: vec![1, 1, 1, 1] }]).expect("static data")
}

const BLOCKS: [&str; 3] = ["12", "13", "23"];

/// `x12^0, x12^1, x13^0, x13^1, x23^0, x23^1`, then the dual `y` coordinates.
pub fn triple_variables() -> Vec<String> {
    ["x", "y"]
        .iter()
        .flat_map(|p| BLOCKS.iter().flat_map(move |b| (0..2).map(move |k| format!("{p}{b}^{k}"))))
        .collect()
}

/// `(e1, e2)` acts by `e1` on `x12`, `e1 e2` on `x13`, `e2` on `x23`, inversely on `y`.
pub fn triple_action() -> DiagonalAction {
    DiagonalAction::torus(
        12,
        vec![
            vec![1, 1, 1, 1, 0, 0, -1, -1, -1, -1, 0, 0],
            vec![0, 0, 1, 1, 1, 1, 0, 0, -1, -1, -1, -1],
        ],
    )
    .expect("static data")
}

/// `y_ij^1 = x_ij^0, y_ij^0 = x_ij^1` for every block.
pub fn triple_involution() -> CoordinateInvolution {
    CoordinateInvolution::new(vec![7, 6, 9, 8, 11, 10, 1, 0, 3, 2, 5, 4], None).expect("static data")
}

/// `r1^0, r1^1, r2^0, r2^1, r3^0, r3^1`.
pub fn z2z2_variables() -> Vec<String> {
    (1..=3).flat_map(|i| (0..2).map(move |j| format!("r{i}^{j}"))).collect()
}

pub fn z2z2_action() -> DiagonalAction {
    DiagonalAction::finite(
        6,
        vec![
            FiniteFactor { modulus: 2, weights: vec![0, 0, 1, 1, 1, 1] },
            FiniteFactor { modulus: 2, weights: vec![1, 1, 0, 0, 1, 1] },
        ],
    )
    .expect("static data")
}

/// Label of a generator under `scheme`, falling back to the monomial itself.
pub fn label_for(scheme: LabelScheme, m: &Monomial, variable_names: &[String]) -> String {
    let e = m.exponents();
    let support: Vec<usize> = e.iter().enumerate().flat_map(|(i, &c)| std::iter::repeat_n(i, c as usize)).collect();
    let label = match scheme {
        LabelScheme::Segre if e.len() == 8 && support.len() == 2 && support[0] < 4 && support[1] >= 4 => {
            Some(format!("u{}{}", support[0] + 1, support[1] - 3))
        }
        LabelScheme::SignC4 if e.len() == 4 && support.len() == 2 => Some(format!("v{}{}", support[0] + 1, support[1] + 1)),
        LabelScheme::Triple if e.len() == 12 => triple_label(&support),
        LabelScheme::Z2z2 if e.len() == 6 => z2z2_label(&support),
        _ => None,
    };
    label.unwrap_or_else(|| m.display_with(variable_names))
}

fn triple_label(support: &[usize]) -> Option<String> {
    // variable index -> (is_y, block, superscript)
    let split = |v: usize| (v >= 6, (v % 6) / 2, v % 2);
    match support {
        [a, b] => {
            let (ya, ba, ka) = split(*a);
            let (yb, bb, kb) = split(*b);
            (!ya && yb && ba == bb).then(|| format!("u{}^{ka}{kb}", BLOCKS[ba]))
        }
        [a, b, c] => {
            let parts = [split(*a), split(*b), split(*c)];
            let find = |y: bool, block: usize| parts.iter().find(|p| p.0 == y && p.1 == block).map(|p| p.2);
            if let (Some(k), Some(l), Some(m)) = (find(false, 1), find(true, 0), find(true, 2)) {
                Some(format!("v^{k}{l}{m}"))
            } else if let (Some(k), Some(l), Some(m)) = (find(true, 1), find(false, 0), find(false, 2)) {
                Some(format!("w^{k}{l}{m}"))
            } else {
                None
            }
        }
        _ => None,
    }
}

fn z2z2_label(support: &[usize]) -> Option<String> {
    match support {
        [a, b] if a / 2 == b / 2 => Some(format!("s{}^{}{}", a / 2 + 1, a % 2, b % 2)),
        [a, b, c] if a / 2 == 0 && b / 2 == 1 && c / 2 == 2 => Some(format!("t^{}{}{}", a % 2, b % 2, c % 2)),
        _ => None,
    }
}

/// A relation family as displayed, plus a corrected variant when the displayed one fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationFamily {
    pub name: &'static str,
    pub stated_size: usize,
    pub displayed: Vec<Relation>,
    pub corrected: Option<(Vec<Relation>, &'static str)>,
}

impl RelationFamily {
    /// The relations to use downstream: corrected if available, else as displayed.
    pub fn effective(&self) -> &[Relation] {
        self.corrected.as_ref().map(|(r, _)| r.as_slice()).unwrap_or(&self.displayed)
    }
}

struct Words<'a> {
    len: usize,
    lookup: Box<dyn Fn(&str) -> Option<usize> + 'a>,
}

impl<'a> Words<'a> {
    fn of(pres: &'a MonoidPresentation) -> Self {
        Self { len: pres.len(), lookup: Box::new(move |l| pres.index_of_label(l)) }
    }

    fn of_fixed(fixed: &'a super::FixedLocus) -> Self {
        Self { len: fixed.presentation.len(), lookup: Box::new(move |l| fixed.index_of_label(l)) }
    }

    fn word(&self, labels: &[String]) -> Result<Vec<u32>> {
        let mut w = vec![0u32; self.len];
        for l in labels {
            let i = (self.lookup)(l).ok_or_else(|| Error::InvalidInput(format!("no generator labelled {l}")))?;
            w[i] += 1;
        }
        Ok(w)
    }

    fn rel(&self, lhs: &[String], rhs: &[String]) -> Result<Relation> {
        Ok(Relation::new(self.word(lhs)?, self.word(rhs)?))
    }
}

fn push_nontrivial(out: &mut Vec<Relation>, r: Relation) {
    if !r.is_trivial() {
        out.push(r);
    }
}

/// `u_ij u_kl = u_kj u_il` over all indices.
pub fn segre_minor_family(pres: &MonoidPresentation) -> Result<RelationFamily> {
    let w = Words::of(pres);
    let u = |i: usize, j: usize| format!("u{i}{j}");
    let mut displayed = Vec::new();
    for i in 1..=4 {
        for j in 1..=4 {
            for k in 1..=4 {
                for l in 1..=4 {
                    push_nontrivial(&mut displayed, w.rel(&[u(i, j), u(k, l)], &[u(k, j), u(i, l)])?);
                }
            }
        }
    }
    Ok(RelationFamily { name: "segre 2x2 minors", stated_size: 36, displayed, corrected: None })
}

/// `v_ij v_kl = v_kj v_il` with `v_ij = v_ji`.
pub fn sign_c4_family(pres: &MonoidPresentation) -> Result<RelationFamily> {
    let w = Words::of(pres);
    let v = |i: usize, j: usize| format!("v{}{}", i.min(j), i.max(j));
    let mut displayed = Vec::new();
    for i in 1..=4 {
        for j in 1..=4 {
            for k in 1..=4 {
                for l in 1..=4 {
                    push_nontrivial(&mut displayed, w.rel(&[v(i, j), v(k, l)], &[v(k, j), v(i, l)])?);
                }
            }
        }
    }
    Ok(RelationFamily { name: "veronese quadrics", stated_size: 20, displayed, corrected: None })
}

fn bits3() -> impl Iterator<Item = (u8, u8, u8)> {
    (0..8u8).map(|b| (b >> 2 & 1, b >> 1 & 1, b & 1))
}

/// Families of the three-component case: `u^00 u^11 = u^01 u^10` (3),
/// the Segre-type quadrics in `v` and in `w` (18), and `v w = u u u` (64).
pub fn triple_families(pres: &MonoidPresentation) -> Result<Vec<RelationFamily>> {
    let w = Words::of(pres);
    let u = |b: &str, k: u8, l: u8| format!("u{b}^{k}{l}");

    let mut minors = Vec::new();
    for b in BLOCKS {
        push_nontrivial(&mut minors, w.rel(&[u(b, 0, 0), u(b, 1, 1)], &[u(b, 0, 1), u(b, 1, 0)])?);
    }

    let mut quadrics = Vec::new();
    for p in ["v", "w"] {
        let g = |k: u8, l: u8, m: u8| format!("{p}^{k}{l}{m}");
        for (k, l, m) in bits3() {
            for (k2, l2, m2) in bits3() {
                let chain = [
                    [g(k, l, m), g(k2, l2, m2)],
                    [g(k2, l, m), g(k, l2, m2)],
                    [g(k, l2, m), g(k2, l, m2)],
                    [g(k, l, m2), g(k2, l2, m)],
                ];
                for pair in chain.windows(2) {
                    push_nontrivial(&mut quadrics, w.rel(&pair[0], &pair[1])?);
                }
            }
        }
    }

    let mut cubic_displayed = Vec::new();
    let mut cubic_corrected = Vec::new();
    for (k, l, m) in bits3() {
        for (k2, l2, m2) in bits3() {
            let lhs = [format!("v^{k}{l}{m}"), format!("w^{k2}{l2}{m2}")];
            cubic_displayed.push(w.rel(&lhs, &[u("13", k, k2), u("12", l, l2), u("23", m, m2)])?);
            cubic_corrected.push(w.rel(&lhs, &[u("13", k, k2), u("12", l2, l), u("23", m2, m)])?);
        }
    }

    Ok(vec![
        RelationFamily { name: "u quadrics", stated_size: 3, displayed: minors, corrected: None },
        RelationFamily { name: "v and w quadrics", stated_size: 18, displayed: quadrics, corrected: None },
        RelationFamily {
            name: "v w cubics",
            stated_size: 64,
            displayed: cubic_displayed,
            corrected: Some((cubic_corrected, "superscripts of the u12 and u23 factors transposed")),
        },
    ])
}

/// Families on the fixed locus of the three-component case:
/// `(u^00)^2 = u^01 u^10` (3) and `v v = u u u` (36).
pub fn triple_fixed_families(fixed: &super::FixedLocus) -> Result<Vec<RelationFamily>> {
    let w = Words::of_fixed(fixed);
    let u = |b: &str, k: u8, l: u8| format!("u{b}^{k}{l}");

    let mut squares = Vec::new();
    for b in BLOCKS {
        push_nontrivial(&mut squares, w.rel(&[u(b, 0, 0), u(b, 0, 0)], &[u(b, 0, 1), u(b, 1, 0)])?);
    }

    let mut displayed = Vec::new();
    let mut corrected = Vec::new();
    let triples: Vec<_> = bits3().collect();
    for (a, &(k, l, m)) in triples.iter().enumerate() {
        for &(k2, l2, m2) in &triples[a..] {
            let lhs = [format!("v^{k}{l}{m}"), format!("v^{k2}{l2}{m2}")];
            displayed.push(w.rel(&lhs, &[u("13", k, 1 - k2), u("12", l, 1 - l2), u("23", m, 1 - m2)])?);
            corrected.push(w.rel(&lhs, &[u("13", k, 1 - k2), u("12", 1 - l2, l), u("23", 1 - m2, m)])?);
        }
    }

    Ok(vec![
        RelationFamily { name: "fixed u squares", stated_size: 3, displayed: squares, corrected: None },
        RelationFamily {
            name: "fixed v cubics",
            stated_size: 36,
            displayed,
            corrected: Some((corrected, "superscripts of the u12 and u23 factors transposed")),
        },
    ])
}

/// Families of the `Z2 x Z2` quotient: `s^01 = s^00 s^11` (3) and `t t = s s s` (36).
pub fn z2z2_families(pres: &MonoidPresentation) -> Result<Vec<RelationFamily>> {
    let w = Words::of(pres);
    let s = |i: usize, j: u8, k: u8| format!("s{i}^{}{}", j.min(k), j.max(k));

    let mut displayed = Vec::new();
    let mut corrected = Vec::new();
    for i in 1..=3 {
        displayed.push(w.rel(&[s(i, 0, 1)], &[s(i, 0, 0), s(i, 1, 1)])?);
        corrected.push(w.rel(&[s(i, 0, 1), s(i, 0, 1)], &[s(i, 0, 0), s(i, 1, 1)])?);
    }

    let mut cubics = Vec::new();
    let triples: Vec<_> = bits3().collect();
    for (a, &(i, j, k)) in triples.iter().enumerate() {
        for &(i2, j2, k2) in &triples[a..] {
            cubics.push(w.rel(&[format!("t^{i}{j}{k}"), format!("t^{i2}{j2}{k2}")], &[s(1, i, i2), s(2, j, j2), s(3, k, k2)])?);
        }
    }

    Ok(vec![
        RelationFamily {
            name: "s quadrics",
            stated_size: 3,
            displayed,
            corrected: Some((corrected, "left-hand side squared")),
        },
        RelationFamily { name: "t cubics", stated_size: 36, displayed: cubics, corrected: None },
    ])
}

/// Generators, labels and a minimal relation set for `action` in one call.
///
/// Relations are complete for fibers of ambient degree up to three times the
/// top generator degree.
pub fn labelled_presentation(
    action: &DiagonalAction,
    degree_bound: u32,
    scheme: LabelScheme,
    variable_names: Vec<String>,
) -> Result<MonoidPresentation> {
    let gens = super::invariant_generators(action, degree_bound)?;
    let gens = if variable_names.len() == action.ambient_dim() { gens.with_variable_names(variable_names) } else { gens };
    let names = gens.variable_names.clone();
    let gens = gens.relabel(|m| label_for(scheme, m, &names));
    let bound = super::default_relation_bound(&gens.generators);
    super::toric_relations(action, &gens, bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_follow_the_schemes() {
        let names = triple_variables();
        assert_eq!(names[3], "x13^1");
        assert_eq!(names[6], "y12^0");
        let mut e = vec![0u32; 12];
        e[3] = 1; // x13^1
        e[6] = 1; // y12^0
        e[11] = 1; // y23^1
        assert_eq!(label_for(LabelScheme::Triple, &Monomial::new(e), &names), "v^101");
        let mut e = vec![0u32; 6];
        e[1] = 1;
        e[3] = 1;
        e[4] = 1;
        assert_eq!(label_for(LabelScheme::Z2z2, &Monomial::new(e), &z2z2_variables()), "t^110");
        let odd = Monomial::new(vec![1, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(label_for(LabelScheme::Segre, &odd, &segre_variables()), "x1");
    }

    #[test]
    fn segre_case_counts() {
        let p = labelled_presentation(&segre_action(), 4, LabelScheme::Segre, segre_variables()).unwrap();
        assert_eq!(p.len(), 16);
        assert_eq!(p.labels[0], "u11");
        let fam = segre_minor_family(&p).unwrap();
        assert!(fam.displayed.iter().all(|r| p.relation_holds(r)));
        assert_eq!(super::super::family_rank(&fam.displayed), 36);
    }

    #[test]
    fn unknown_label_is_an_error() {
        let p = labelled_presentation(&sign_c4_action(), 4, LabelScheme::Generic, sign_c4_variables()).unwrap();
        assert!(sign_c4_family(&p).is_err());
    }
}
