//! Symmetry assessments from transformation monoids: the induced
//! indifference span, the symmetry background model, natural extension of
//! favourability statements under symmetry, and the averaging projection
//! for permutation groups.

use crate::engine::Model;
use crate::frameworks::{favour_member, favourability_extension, FiBackground, FrameworkError};
use crate::rat::{rint, rone, rzero, Rat};
use crate::ratlp::{feasible, solve_lp, LinearProgram, LpOutcome, Relation};
use crate::region::span_basis;
use crate::space::{Gamble, Space, SpaceError};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SymmetryError {
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error("transformation maps outside the space")]
    BadMapping,
    #[error("monoid closure exceeds the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("transformation is not a bijection")]
    NotBijective,
    #[error("symmetry background is confused: the indifference span contains a partial loss")]
    Confused { certificate: Gamble },
    #[error("statements do not respect the symmetry background")]
    NoRespect,
}

/// A total map of atoms, acting on gambles by composition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Transformation {
    mapping: Vec<usize>,
}

impl Transformation {
    pub fn new(mapping: Vec<usize>) -> Result<Transformation, SymmetryError> {
        let n = mapping.len();
        if mapping.iter().any(|&i| i >= n) {
            return Err(SymmetryError::BadMapping);
        }
        Ok(Transformation { mapping })
    }

    pub fn identity(dim: usize) -> Transformation {
        Transformation {
            mapping: (0..dim).collect(),
        }
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn dim(&self) -> usize {
        self.mapping.len()
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.mapping.len()];
        for &i in &self.mapping {
            if seen[i] {
                return false;
            }
            seen[i] = true;
        }
        true
    }

    /// `self` after `other`: the composite sends an atom through `other`
    /// first.
    pub fn compose(&self, other: &Transformation) -> Transformation {
        Transformation {
            mapping: other.mapping.iter().map(|&i| self.mapping[i]).collect(),
        }
    }
}

/// Transposed action on gambles: the transformed gamble pays at an atom
/// what the original pays at the atom's image.
pub fn transformed_gamble(t: &Transformation, f: &Gamble) -> Result<Gamble, SymmetryError> {
    if t.dim() != f.space().dim() {
        return Err(SymmetryError::BadMapping);
    }
    let values = t.mapping.iter().map(|&i| f.values()[i].clone()).collect();
    Ok(Gamble::new(f.space(), values).expect("same dimension"))
}

pub const DEFAULT_MONOID_CAP: usize = 10_000;

/// A finite transformation monoid, stored as its full element list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformationMonoid {
    elements: Vec<Transformation>,
}

impl TransformationMonoid {
    pub fn elements(&self) -> &[Transformation] {
        &self.elements
    }

    pub fn identity_only(dim: usize) -> TransformationMonoid {
        TransformationMonoid {
            elements: vec![Transformation::identity(dim)],
        }
    }
}

/// Closes a generator list under composition, inserting the identity.
/// Errors out when the closure grows past `cap`.
pub fn monoid_closure(
    generators: &[Transformation],
    cap: usize,
) -> Result<TransformationMonoid, SymmetryError> {
    let dim = match generators.first() {
        Some(t) => t.dim(),
        None => return Err(SymmetryError::BadMapping),
    };
    if generators.iter().any(|t| t.dim() != dim) {
        return Err(SymmetryError::BadMapping);
    }
    let mut elements = vec![Transformation::identity(dim)];
    let mut frontier: Vec<Transformation> = Vec::new();
    for g in generators {
        if !elements.contains(g) {
            elements.push(g.clone());
            frontier.push(g.clone());
        }
    }
    while let Some(t) = frontier.pop() {
        for g in generators {
            for c in [g.compose(&t), t.compose(g)] {
                if !elements.contains(&c) {
                    if elements.len() >= cap {
                        return Err(SymmetryError::CapExceeded { cap });
                    }
                    elements.push(c.clone());
                    frontier.push(c);
                }
            }
        }
    }
    Ok(TransformationMonoid { elements })
}

/// A finite permutation group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationGroup {
    monoid: TransformationMonoid,
}

impl PermutationGroup {
    /// Generates the group from bijective generators; closure under
    /// composition of a finite set of bijections yields inverses for free.
    pub fn from_generators(
        generators: &[Transformation],
        cap: usize,
    ) -> Result<PermutationGroup, SymmetryError> {
        if generators.iter().any(|g| !g.is_bijective()) {
            return Err(SymmetryError::NotBijective);
        }
        let monoid = monoid_closure(generators, cap)?;
        Ok(PermutationGroup { monoid })
    }

    pub fn identity_only(dim: usize) -> PermutationGroup {
        PermutationGroup {
            monoid: TransformationMonoid::identity_only(dim),
        }
    }

    pub fn elements(&self) -> &[Transformation] {
        self.monoid.elements()
    }

    pub fn as_monoid(&self) -> &TransformationMonoid {
        &self.monoid
    }
}

/// Basis of the indifference span: the linear hull of all differences
/// between an atom indicator and its transform, reduced by exact
/// elimination.
pub fn indifference_span(m: &TransformationMonoid, space: &Space) -> Vec<Gamble> {
    let mut diffs = Vec::new();
    for t in m.elements() {
        for i in 0..space.dim() {
            let e = Gamble::indicator(space, i);
            let te = transformed_gamble(t, &e).expect("monoid matches space");
            let d = &e - &te;
            if !d.is_zero() {
                diffs.push(d);
            }
        }
    }
    span_basis(&diffs, space)
}

/// Searches the indifference span for a nonzero nonpositive gamble. The
/// all-negative constant is tried first so confusion certificates come out
/// in their most readable form.
fn span_partial_loss(basis: &[Gamble], space: &Space) -> Option<Gamble> {
    if basis.is_empty() {
        return None;
    }
    let dim = space.dim();
    let neg_one = Gamble::constant(space, -rone());
    // membership of the all-(-1) constant in the span is a plain equality
    // system over the basis coefficients
    let mut p = LinearProgram::new(basis.len());
    p.nonneg = vec![false; basis.len()];
    for w in 0..dim {
        let coeffs = basis.iter().map(|b| b.values()[w].clone()).collect();
        p.push(coeffs, Relation::Eq, neg_one.values()[w].clone());
    }
    if feasible(&p).expect("well-formed span membership").0 {
        return Some(neg_one);
    }
    // otherwise: coefficients c with sum_j c_j b_j <= 0 everywhere and
    // strictly negative somewhere, via maximizing the total deficit
    let vars = basis.len() + 1;
    let t = basis.len();
    let mut p = LinearProgram::new(vars);
    p.nonneg = vec![false; vars];
    p.objective[t] = rone();
    let mut total = vec![rzero(); vars];
    for w in 0..dim {
        let mut coeffs = vec![rzero(); vars];
        for (j, b) in basis.iter().enumerate() {
            coeffs[j] = b.values()[w].clone();
            total[j] -= &b.values()[w].clone();
        }
        p.push(coeffs, Relation::Le, rzero());
    }
    total[t] = -rone();
    p.push(total, Relation::Ge, rzero());
    match solve_lp(&p).expect("well-formed partial-loss program") {
        LpOutcome::Optimal { value, witness } if value > rzero() => {
            Some(combine(basis, &witness[..basis.len()], space))
        }
        LpOutcome::Unbounded { witness } => Some(combine(basis, &witness[..basis.len()], space)),
        _ => None,
    }
}

fn combine(basis: &[Gamble], coeffs: &[Rat], space: &Space) -> Gamble {
    let mut acc = Gamble::zero(space);
    for (b, c) in basis.iter().zip(coeffs) {
        acc = &acc + &b.scale(c);
    }
    acc
}

/// The favour-indifference background a monoid induces: indifferent on the
/// whole span, favouring its shifts by positive gambles.
pub fn symmetry_fi_background(m: &TransformationMonoid, space: &Space) -> FiBackground {
    FiBackground::new(indifference_span(m, space), Vec::new(), true)
}

/// The symmetry background model: indifference on the span, favour for the
/// span shifted by positive gambles. Confused exactly when the span
/// contains a nonzero nonpositive gamble.
pub fn symmetry_background(
    m: &TransformationMonoid,
    space: &Space,
) -> Result<Model, SymmetryError> {
    let basis = indifference_span(m, space);
    if let Some(certificate) = span_partial_loss(&basis, space) {
        return Err(SymmetryError::Confused { certificate });
    }
    favourability_extension(space, &[], &symmetry_fi_background(m, space)).map_err(|e| match e {
        FrameworkError::NoRespect => {
            unreachable!("partial-loss check already rules out cancellation")
        }
        FrameworkError::Space(e) => SymmetryError::Space(e),
        _ => unreachable!("no other failure mode"),
    })
}

/// Natural extension of favourability statements under a symmetry
/// background: favour the joint hull of the statements with the positive
/// gambles, shifted along the indifference span.
pub fn sym_extension(
    fav: &[Gamble],
    m: &TransformationMonoid,
    space: &Space,
) -> Result<Model, SymmetryError> {
    let basis = indifference_span(m, space);
    if let Some(certificate) = span_partial_loss(&basis, space) {
        return Err(SymmetryError::Confused { certificate });
    }
    favourability_extension(space, fav, &symmetry_fi_background(m, space)).map_err(|e| match e {
        FrameworkError::NoRespect => SymmetryError::NoRespect,
        FrameworkError::Space(e) => SymmetryError::Space(e),
        _ => unreachable!("no other failure mode"),
    })
}

/// Orbits of the group action on atoms, each sorted, in order of their
/// smallest atom.
pub fn invariant_atoms(g: &PermutationGroup, space: &Space) -> Vec<Vec<usize>> {
    let dim = space.dim();
    let mut seen = vec![false; dim];
    let mut orbits = Vec::new();
    for i in 0..dim {
        if seen[i] {
            continue;
        }
        let mut orbit: Vec<usize> = g.elements().iter().map(|t| t.mapping[i]).collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &j in &orbit {
            seen[j] = true;
        }
        orbits.push(orbit);
    }
    orbits
}

/// The group average of a gamble: the uniform mixture of its transforms.
/// Constant on every orbit; fixes exactly the invariant gambles.
pub fn project_avg(g: &PermutationGroup, f: &Gamble) -> Result<Gamble, SymmetryError> {
    let mut acc = Gamble::zero(f.space());
    for t in g.elements() {
        acc = &acc + &transformed_gamble(t, f)?;
    }
    let n = rint(g.elements().len() as i64);
    Ok(acc.scale(&(rone() / n)))
}

/// Outcome of the averaging representation check on one model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationReport {
    pub pass: bool,
    pub counterexamples: Vec<Gamble>,
}

/// Checks that favourability of a gamble and of its group average always
/// agree on the sampled gambles.
pub fn representation_check(
    m: &Model,
    g: &PermutationGroup,
    sample: &[Gamble],
) -> Result<RepresentationReport, SymmetryError> {
    let mut counterexamples = Vec::new();
    for f in sample {
        let avg = project_avg(g, f)?;
        if favour_member(m, f) != favour_member(m, &avg) {
            counterexamples.push(f.clone());
        }
    }
    Ok(RepresentationReport {
        pass: counterexamples.is_empty(),
        counterexamples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frameworks::{
        check_characterisation, indifferent_member, FrameworkBackground, FrameworkTag,
    };
    use crate::rat::rat;
    use crate::region::member_region;
    use crate::space::Space;

    fn two() -> Space {
        Space::of_size(2)
    }

    fn g(s: &Space, v: &[i64]) -> Gamble {
        Gamble::from_ints(s, v)
    }

    fn swap() -> Transformation {
        Transformation::new(vec![1, 0]).unwrap()
    }

    #[test]
    fn transformed_gamble_evaluation() {
        let s = two();
        let f = g(&s, &[1, 0]);
        assert_eq!(transformed_gamble(&swap(), &f).unwrap(), g(&s, &[0, 1]));
        let id = Transformation::identity(2);
        assert_eq!(transformed_gamble(&id, &f).unwrap(), f);
        let const0 = Transformation::new(vec![0, 0]).unwrap();
        assert_eq!(
            transformed_gamble(&const0, &g(&s, &[3, 7])).unwrap(),
            g(&s, &[3, 3])
        );
    }

    #[test]
    fn closure_generation() {
        let three = Transformation::new(vec![1, 2, 0]).unwrap();
        let m = monoid_closure(&[three], 100).unwrap();
        assert_eq!(m.elements().len(), 3);
        let m = monoid_closure(&[swap()], 100).unwrap();
        assert_eq!(m.elements().len(), 2);
        let c0 = Transformation::new(vec![0, 0]).unwrap();
        let c1 = Transformation::new(vec![1, 1]).unwrap();
        let m = monoid_closure(&[c0, c1], 100).unwrap();
        assert_eq!(m.elements().len(), 3);
        assert!(matches!(
            monoid_closure(&[Transformation::new(vec![1, 2, 0]).unwrap()], 2),
            Err(SymmetryError::CapExceeded { cap: 2 })
        ));
    }

    #[test]
    fn span_bases() {
        let s = two();
        let m = monoid_closure(&[swap()], 100).unwrap();
        let basis = indifference_span(&m, &s);
        assert_eq!(basis.len(), 1);
        assert!(basis[0].same_ray(&g(&s, &[1, -1])) || basis[0].same_ray(&g(&s, &[-1, 1])));
        assert!(indifference_span(&TransformationMonoid::identity_only(2), &s).is_empty());
        let c0 = Transformation::new(vec![0, 0]).unwrap();
        let c1 = Transformation::new(vec![1, 1]).unwrap();
        let m = monoid_closure(&[c0, c1], 100).unwrap();
        assert_eq!(indifference_span(&m, &s).len(), 2);
    }

    #[test]
    fn background_validity() {
        let s = two();
        let m = monoid_closure(&[swap()], 100).unwrap();
        let model = symmetry_background(&m, &s).unwrap();
        assert!(indifferent_member(&model, &g(&s, &[1, -1])));
        assert!(favour_member(&model, &g(&s, &[1, 0])));
        assert!(favour_member(&model, &g(&s, &[2, -1])));
        assert!(!member_region(&g(&s, &[-1, -1]), model.accepted_region()));
        // a span covering the whole plane swallows sure losses
        let c0 = Transformation::new(vec![0, 0]).unwrap();
        let c1 = Transformation::new(vec![1, 1]).unwrap();
        let m = monoid_closure(&[c0, c1], 100).unwrap();
        match symmetry_background(&m, &s) {
            Err(SymmetryError::Confused { certificate }) => {
                assert_eq!(certificate, Gamble::constant(&s, -rone()));
            }
            other => panic!("expected confusion, got {other:?}"),
        }
        // permutation groups are always valid
        let g3 = PermutationGroup::from_generators(
            &[Transformation::new(vec![1, 2, 0]).unwrap()],
            100,
        )
        .unwrap();
        assert!(symmetry_background(g3.as_monoid(), &Space::of_size(3)).is_ok());
    }

    #[test]
    fn sym_extension_respect() {
        let s = two();
        let m = monoid_closure(&[swap()], 100).unwrap();
        let model = sym_extension(&[g(&s, &[2, -1])], &m, &s).unwrap();
        // (0,1) = (2,-1) + (-2,2) with (-2,2) in the span
        assert!(favour_member(&model, &g(&s, &[0, 1])));
        assert!(favour_member(&model, &g(&s, &[2, -1])));
        // 0 = (-2,0) + (1,-1) + (1,1) cancels through span and positives
        assert!(matches!(
            sym_extension(&[g(&s, &[-2, 0])], &m, &s),
            Err(SymmetryError::NoRespect)
        ));
        // no statements: exactly the background
        let bare = sym_extension(&[], &m, &s).unwrap();
        let bg = symmetry_background(&m, &s).unwrap();
        assert!(crate::engine::models_equivalent(&bare, &bg));
        // the characterisation suite accepts the output
        let fb = FrameworkBackground::FavourIndifference(symmetry_fi_background(&m, &s));
        let report = check_characterisation(&model, &fb, FrameworkTag::F);
        assert!(report.all_pass(), "{:?}", report.failures());
    }

    #[test]
    fn orbits_and_projection() {
        // pair space {aa, ab, ba, bb} with the index swap ab <-> ba
        let s = Space::of_size(4);
        let pair_swap = Transformation::new(vec![0, 2, 1, 3]).unwrap();
        let grp = PermutationGroup::from_generators(&[pair_swap], 100).unwrap();
        assert_eq!(invariant_atoms(&grp, &s), vec![vec![0], vec![1, 2], vec![3]]);
        let f = Gamble::indicator(&s, 1);
        let avg = project_avg(&grp, &f).unwrap();
        assert_eq!(
            avg,
            Gamble::new(&s, vec![rzero(), rat(1, 2), rat(1, 2), rzero()]).unwrap()
        );
        // projection laws: idempotence and invariance under the action
        assert_eq!(project_avg(&grp, &avg).unwrap(), avg);
        for t in grp.elements() {
            assert_eq!(
                project_avg(&grp, &transformed_gamble(t, &f).unwrap()).unwrap(),
                avg
            );
        }
        // antisymmetric gambles project to zero
        let anti = &Gamble::indicator(&s, 1) - &Gamble::indicator(&s, 2);
        assert!(project_avg(&grp, &anti).unwrap().is_zero());
        // identity group: singleton orbits, projection is the identity
        let id = PermutationGroup::identity_only(4);
        assert_eq!(invariant_atoms(&id, &s).len(), 4);
        assert_eq!(project_avg(&id, &f).unwrap(), f);
        // full symmetric group on 3 atoms: one orbit
        let s3 = Space::of_size(3);
        let grp = PermutationGroup::from_generators(
            &[
                Transformation::new(vec![1, 0, 2]).unwrap(),
                Transformation::new(vec![1, 2, 0]).unwrap(),
            ],
            100,
        )
        .unwrap();
        assert_eq!(grp.elements().len(), 6);
        assert_eq!(invariant_atoms(&grp, &s3), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn representation_round_trip() {
        let s = two();
        let grp = PermutationGroup::from_generators(&[swap()], 100).unwrap();
        let m = grp.as_monoid();
        let bg = symmetry_background(m, &s).unwrap();
        let sample = crate::sampling::sample_gambles(&s, 20, 0xABCD);
        let report = representation_check(&bg, &grp, &sample).unwrap();
        assert!(report.pass, "{:?}", report.counterexamples);
        let seeded = sym_extension(&[g(&s, &[2, -1])], m, &s).unwrap();
        let mut sample = sample;
        sample.push(g(&s, &[2, -1]));
        let report = representation_check(&seeded, &grp, &sample).unwrap();
        assert!(report.pass, "{:?}", report.counterexamples);
        // dropping the span shift from the favourable region breaks the
        // representation on asymmetric gambles
        let broken = crate::engine::Model::constructed(
            &s,
            Vec::new(),
            Vec::new(),
            None,
            crate::region::Region::from_pieces(vec![
                crate::region::RegionPiece::Span(vec![g(&s, &[1, -1])]),
                crate::region::RegionPiece::OrthantNonnegPunctured,
            ]),
            crate::region::Region::from_pieces(vec![
                crate::region::RegionPiece::OrthantNonposPunctured,
            ]),
        );
        let report = representation_check(&broken, &grp, &[g(&s, &[2, -1])]).unwrap();
        assert!(!report.pass);
    }
}
