//! Symbolic convex-piece regions and exact membership.
//!
//! A region is a finite union of convex pieces: cones, punctured cones
//! (positive linear hulls), rays, ray-minus-cone differences, linear spans,
//! halfspaces and orthant variants, plus Minkowski sums of those. Every
//! membership query compiles the piece into a small linear program; strict
//! requirements ("some coefficient must be positive") are decided by
//! maximizing the minimum slack and accepting iff the optimum is positive
//! or unbounded.

use crate::rat::{rone, rzero, Rat};
use crate::ratlp::{feasible, solve_lp, LinearProgram, LpOutcome, Relation};
use crate::space::{Gamble, Space, SpaceError};
use num::Zero;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum RegionError {
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error("unsupported region algebra combination: {0}")]
    UnsupportedRegionAlgebra(String),
}

/// One convex piece of a region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RegionPiece {
    /// Closed convex cone generated by the gambles (contains 0).
    Cone(Vec<Gamble>),
    /// Positive linear hull: positive combinations over nonempty subsets of
    /// the generators; contains 0 only when 0 has a convex representation.
    PuncturedCone(Vec<Gamble>),
    /// Strictly positive scalings of one gamble.
    Ray(Gamble),
    /// `{ mu*r - c : mu > 0, c in cone(generators) }`.
    RayMinusCone(Gamble, Vec<Gamble>),
    /// Linear span of the generators (the span of the empty list is `{0}`).
    Span(Vec<Gamble>),
    /// `{ f : <normal, f> > 0 }`.
    HalfSpaceOpen(Gamble),
    /// `{ f : <normal, f> >= 0 }`.
    HalfSpaceClosed(Gamble),
    /// Pointwise nonnegative gambles.
    OrthantNonneg,
    /// Nonnegative and nonzero gambles.
    OrthantNonnegPunctured,
    /// Uniformly positive gambles: every coordinate strictly positive.
    OrthantUniformPos,
    /// Pointwise nonpositive gambles.
    OrthantNonpos,
    /// Nonpositive and nonzero gambles.
    OrthantNonposPunctured,
    /// Uniformly negative gambles.
    OrthantUniformNeg,
    /// Minkowski sum of the component pieces.
    Sum(Vec<RegionPiece>),
}

impl RegionPiece {
    /// Minkowski negation of the piece, in closed form.
    pub fn negate(&self) -> RegionPiece {
        use RegionPiece::*;
        let neg_all = |gs: &[Gamble]| gs.iter().map(|g| -g).collect::<Vec<_>>();
        match self {
            Cone(gs) => Cone(neg_all(gs)),
            PuncturedCone(gs) => PuncturedCone(neg_all(gs)),
            Ray(g) => Ray(-g),
            RayMinusCone(r, gs) => RayMinusCone(-r, neg_all(gs)),
            Span(gs) => Span(gs.clone()),
            HalfSpaceOpen(n) => HalfSpaceOpen(-n),
            HalfSpaceClosed(n) => HalfSpaceClosed(-n),
            OrthantNonneg => OrthantNonpos,
            OrthantNonnegPunctured => OrthantNonposPunctured,
            OrthantUniformPos => OrthantUniformNeg,
            OrthantNonpos => OrthantNonneg,
            OrthantNonposPunctured => OrthantNonnegPunctured,
            OrthantUniformNeg => OrthantUniformPos,
            Sum(ps) => Sum(ps.iter().map(|p| p.negate()).collect()),
        }
    }

    /// A few concrete members of the piece, used for sampled axiom checks.
    /// Every returned gamble genuinely lies in the piece.
    pub fn representatives(&self, space: &Space) -> Vec<Gamble> {
        use RegionPiece::*;
        let mut out = match self {
            Cone(gs) => {
                let mut v = vec![Gamble::zero(space)];
                v.extend(gs.iter().cloned());
                for i in 0..gs.len() {
                    for j in (i + 1)..gs.len() {
                        v.push(&gs[i] + &gs[j]);
                    }
                }
                v
            }
            PuncturedCone(gs) => {
                let mut v: Vec<Gamble> = gs.to_vec();
                for i in 0..gs.len() {
                    for j in (i + 1)..gs.len() {
                        v.push(&gs[i] + &gs[j]);
                    }
                }
                v
            }
            Ray(g) => vec![g.clone(), g.scale(&crate::rat::rat(1, 2))],
            RayMinusCone(r, gs) => {
                let mut v = vec![r.clone()];
                for g in gs {
                    v.push(r - g);
                }
                v
            }
            Span(gs) => {
                let mut v = vec![Gamble::zero(space)];
                for g in gs {
                    v.push(g.clone());
                    v.push(-g);
                }
                v
            }
            HalfSpaceOpen(n) | HalfSpaceClosed(n) => {
                let mut v = vec![n.clone()];
                if matches!(self, HalfSpaceClosed(_)) {
                    v.push(Gamble::zero(space));
                }
                v
            }
            OrthantNonneg => {
                let mut v = vec![Gamble::zero(space), Gamble::constant(space, rone())];
                v.extend((0..space.dim()).map(|i| Gamble::indicator(space, i)));
                v
            }
            OrthantNonnegPunctured => {
                let mut v = vec![Gamble::constant(space, rone())];
                v.extend((0..space.dim()).map(|i| Gamble::indicator(space, i)));
                v
            }
            OrthantUniformPos => vec![
                Gamble::constant(space, rone()),
                Gamble::constant(space, crate::rat::rat(1, 3)),
            ],
            OrthantNonpos | OrthantNonposPunctured | OrthantUniformNeg => self
                .negate()
                .representatives(space)
                .into_iter()
                .map(|g| -&g)
                .collect(),
            Sum(ps) => {
                // One representative per component, summed; take the first
                // representative of each (all components must contribute).
                let mut acc = vec![Gamble::zero(space)];
                for p in ps {
                    let reps = p.representatives(space);
                    if reps.is_empty() {
                        return Vec::new();
                    }
                    let mut next = Vec::new();
                    for a in &acc {
                        for r in reps.iter().take(2) {
                            next.push(a + r);
                        }
                    }
                    acc = next;
                }
                acc
            }
        };
        out.dedup();
        out
    }
}

/// LP fragment for one piece: local variables, their contribution columns,
/// side constraints, and linear forms that must all be strictly positive.
pub(crate) struct Fragment {
    pub vars: usize,
    pub nonneg: Vec<bool>,
    /// columns[v] is the gamble-space vector contributed per unit of var v.
    pub columns: Vec<Vec<Rat>>,
    /// extra constraints (coeffs over local vars, relation, bound)
    pub constraints: Vec<(Vec<Rat>, Relation, Rat)>,
    /// each entry is a linear form over local vars required to be > 0
    pub strict: Vec<Vec<Rat>>,
}

impl Fragment {
    fn empty() -> Fragment {
        Fragment {
            vars: 0,
            nonneg: Vec::new(),
            columns: Vec::new(),
            constraints: Vec::new(),
            strict: Vec::new(),
        }
    }

    fn append(&mut self, other: Fragment) {
        let off = self.vars;
        self.vars += other.vars;
        self.nonneg.extend(other.nonneg);
        self.columns.extend(other.columns);
        for (coeffs, rel, b) in other.constraints {
            let mut full = vec![rzero(); off];
            full.extend(coeffs);
            self.constraints.push((full, rel, b));
        }
        for s in other.strict {
            let mut full = vec![rzero(); off];
            full.extend(s);
            self.strict.push(full);
        }
    }

    fn pad_to(&mut self, vars: usize) {
        for (coeffs, _, _) in self.constraints.iter_mut() {
            coeffs.resize(vars, rzero());
        }
        for s in self.strict.iter_mut() {
            s.resize(vars, rzero());
        }
    }
}

pub(crate) fn compile(piece: &RegionPiece, space: &Space) -> Fragment {
    use RegionPiece::*;
    let dim = space.dim();
    let mut f = Fragment::empty();
    match piece {
        Cone(gs) | PuncturedCone(gs) => {
            f.vars = gs.len();
            f.nonneg = vec![true; gs.len()];
            f.columns = gs.iter().map(|g| g.values().to_vec()).collect();
            if matches!(piece, PuncturedCone(_)) {
                f.strict.push(vec![rone(); gs.len()]);
            }
        }
        Ray(g) => {
            f.vars = 1;
            f.nonneg = vec![true];
            f.columns = vec![g.values().to_vec()];
            f.strict.push(vec![rone()]);
        }
        RayMinusCone(r, gs) => {
            f.vars = 1 + gs.len();
            f.nonneg = vec![true; f.vars];
            f.columns.push(r.values().to_vec());
            for g in gs {
                f.columns.push((-g).values().to_vec());
            }
            let mut s = vec![rzero(); f.vars];
            s[0] = rone();
            f.strict.push(s);
        }
        Span(gs) => {
            f.vars = gs.len();
            f.nonneg = vec![false; gs.len()];
            f.columns = gs.iter().map(|g| g.values().to_vec()).collect();
        }
        HalfSpaceOpen(n) | HalfSpaceClosed(n) => {
            f.vars = dim;
            f.nonneg = vec![false; dim];
            f.columns = (0..dim)
                .map(|i| {
                    let mut c = vec![rzero(); dim];
                    c[i] = rone();
                    c
                })
                .collect();
            let form = n.values().to_vec();
            if matches!(piece, HalfSpaceOpen(_)) {
                f.strict.push(form);
            } else {
                f.constraints.push((form, Relation::Ge, rzero()));
            }
        }
        OrthantNonneg | OrthantNonnegPunctured | OrthantUniformPos => {
            f.vars = dim;
            f.nonneg = vec![true; dim];
            f.columns = (0..dim)
                .map(|i| {
                    let mut c = vec![rzero(); dim];
                    c[i] = rone();
                    c
                })
                .collect();
            match piece {
                OrthantNonnegPunctured => f.strict.push(vec![rone(); dim]),
                OrthantUniformPos => {
                    for i in 0..dim {
                        let mut s = vec![rzero(); dim];
                        s[i] = rone();
                        f.strict.push(s);
                    }
                }
                _ => {}
            }
        }
        OrthantNonpos | OrthantNonposPunctured | OrthantUniformNeg => {
            f = compile(&piece.negate(), space);
            for col in f.columns.iter_mut() {
                for v in col.iter_mut() {
                    *v = -v.clone();
                }
            }
        }
        Sum(ps) => {
            for p in ps {
                f.append(compile(p, space));
            }
        }
    }
    f.pad_to(f.vars);
    f
}

/// Builds the membership LP for `target = fragment contribution` and decides
/// it with the strictness trick. Returns the local-variable witness when the
/// answer is positive and a finite optimum is attained.
fn decide_fragment(frag: &Fragment, space: &Space, target: &[Rat]) -> bool {
    let dim = space.dim();
    let strict = !frag.strict.is_empty();
    // variables: fragment vars, plus slack t when strictness applies (free)
    let vars = frag.vars + usize::from(strict);
    let mut p = LinearProgram::new(vars);
    p.nonneg[..frag.vars].clone_from_slice(&frag.nonneg);
    if strict {
        p.nonneg[frag.vars] = false;
        p.objective[frag.vars] = rone();
    }
    for w in 0..dim {
        let mut coeffs = vec![rzero(); vars];
        for (v, col) in frag.columns.iter().enumerate() {
            coeffs[v] = col[w].clone();
        }
        p.push(coeffs, Relation::Eq, target[w].clone());
    }
    for (coeffs, rel, b) in &frag.constraints {
        let mut full = coeffs.clone();
        full.resize(vars, rzero());
        p.push(full, *rel, b.clone());
    }
    for s in &frag.strict {
        let mut full = s.clone();
        full.resize(vars, rzero());
        full[frag.vars] = -rone();
        p.push(full, Relation::Ge, rzero());
    }
    if !strict {
        return feasible(&p).expect("well-formed membership program").0;
    }
    match solve_lp(&p).expect("well-formed membership program") {
        LpOutcome::Infeasible => false,
        LpOutcome::Optimal { value, .. } => value > rzero(),
        LpOutcome::Unbounded { .. } => true,
    }
}

/// Exact membership of `f` in a single piece.
pub fn member_piece(f: &Gamble, piece: &RegionPiece) -> bool {
    let space = f.space();
    let frag = compile(piece, space);
    decide_fragment(&frag, space, f.values())
}

/// A region: semantic union of its pieces.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Region {
    pub pieces: Vec<RegionPiece>,
}

impl Region {
    pub fn empty() -> Region {
        Region { pieces: Vec::new() }
    }

    pub fn from_pieces(pieces: Vec<RegionPiece>) -> Region {
        Region { pieces }
    }

    pub fn is_empty_representation(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn union(&self, other: &Region) -> Region {
        let mut pieces = self.pieces.clone();
        pieces.extend(other.pieces.clone());
        Region { pieces }
    }

    pub fn negate(&self) -> Region {
        Region {
            pieces: self.pieces.iter().map(|p| p.negate()).collect(),
        }
    }

    /// Minkowski sum distributes over the union of pieces.
    pub fn minkowski_sum(&self, other: &Region) -> Region {
        let mut pieces = Vec::new();
        for a in &self.pieces {
            for b in &other.pieces {
                pieces.push(minkowski_sum_piece(a, b));
            }
        }
        Region { pieces }
    }

    pub fn representatives(&self, space: &Space) -> Vec<Gamble> {
        let mut out = Vec::new();
        for p in &self.pieces {
            out.extend(p.representatives(space));
        }
        out
    }
}

/// Exact membership of `f` in the region (any piece).
pub fn member_region(f: &Gamble, r: &Region) -> bool {
    r.pieces.iter().any(|p| member_piece(f, p))
}

/// Closed-form Minkowski sums where available, a symbolic `Sum` otherwise.
pub fn minkowski_sum_piece(a: &RegionPiece, b: &RegionPiece) -> RegionPiece {
    use RegionPiece::*;
    match (a, b) {
        (Cone(x), Cone(y)) => {
            let mut gens = x.clone();
            gens.extend(y.clone());
            Cone(gens)
        }
        (Span(x), Span(y)) => {
            let mut gens = x.clone();
            gens.extend(y.clone());
            Span(gens)
        }
        (Ray(r), Cone(g)) | (Cone(g), Ray(r)) => {
            // ray plus a negated cone is the reckoning difference shape
            let all_neg = g.iter().map(|x| -x).collect::<Vec<_>>();
            RayMinusCone(r.clone(), all_neg)
        }
        _ => Sum(vec![a.clone(), b.clone()]),
    }
}

/// Finds a common gamble of two pieces, if one exists. All piece programs
/// are homogeneous, so strict positivity can be encoded as "at least 1"
/// without losing solutions, and feasibility yields an exact witness.
pub fn pieces_intersect_witness(
    a: &RegionPiece,
    b: &RegionPiece,
    space: &Space,
) -> Option<Gamble> {
    let fa = compile(a, space);
    let fb = compile(b, space);
    let dim = space.dim();
    let off = fa.vars;
    let vars = fa.vars + fb.vars;
    let mut p = LinearProgram::new(vars);
    p.nonneg[..fa.vars].clone_from_slice(&fa.nonneg);
    p.nonneg[off..off + fb.vars].clone_from_slice(&fb.nonneg);
    // contribution(a) - contribution(b) = 0 per coordinate
    for w in 0..dim {
        let mut coeffs = vec![rzero(); vars];
        for (v, col) in fa.columns.iter().enumerate() {
            coeffs[v] = col[w].clone();
        }
        for (v, col) in fb.columns.iter().enumerate() {
            coeffs[off + v] = -col[w].clone();
        }
        p.push(coeffs, Relation::Eq, rzero());
    }
    for (coeffs, rel, bnd) in &fa.constraints {
        let mut full = coeffs.clone();
        full.resize(vars, rzero());
        p.push(full, *rel, bnd.clone());
    }
    for (coeffs, rel, bnd) in &fb.constraints {
        let mut full = vec![rzero(); off];
        full.extend(coeffs.clone());
        full.resize(vars, rzero());
        p.push(full, *rel, bnd.clone());
    }
    for s in &fa.strict {
        let mut full = s.clone();
        full.resize(vars, rzero());
        p.push(full, Relation::Ge, rone());
    }
    for s in &fb.strict {
        let mut full = vec![rzero(); off];
        full.extend(s.clone());
        full.resize(vars, rzero());
        p.push(full, Relation::Ge, rone());
    }
    let (ok, witness) = feasible(&p).expect("well-formed intersection program");
    if !ok {
        return None;
    }
    let x = witness.expect("feasible programs report a point");
    let mut point = vec![rzero(); dim];
    for (v, col) in fa.columns.iter().enumerate() {
        for w in 0..dim {
            point[w] += &col[w] * &x[v];
        }
    }
    Some(Gamble::new(space, point).expect("dimension by construction"))
}

/// True when the two pieces intersect (share at least one gamble).
pub fn pieces_intersect(a: &RegionPiece, b: &RegionPiece, space: &Space) -> bool {
    pieces_intersect_witness(a, b, space).is_some()
}

/// A common gamble of two regions, if any pair of pieces shares one.
pub fn regions_intersect_witness(a: &Region, b: &Region, space: &Space) -> Option<Gamble> {
    for pa in &a.pieces {
        for pb in &b.pieces {
            if let Some(w) = pieces_intersect_witness(pa, pb, space) {
                return Some(w);
            }
        }
    }
    None
}

/// True when any piece of `a` intersects any piece of `b`.
pub fn regions_intersect(a: &Region, b: &Region, space: &Space) -> bool {
    regions_intersect_witness(a, b, space).is_some()
}

/// Membership in the positive linear hull of `gens`.
///
/// For nonzero `f` this is cone membership (zero coefficients can be
/// dropped, leaving a positive combination over a nonempty subset); for
/// `f = 0` a convex representation of 0 is required.
pub fn member_posi(f: &Gamble, gens: &[Gamble]) -> Result<bool, SpaceError> {
    for g in gens {
        if g.space() != f.space() {
            return Err(SpaceError::SpaceMismatch);
        }
    }
    if gens.is_empty() {
        return Ok(false);
    }
    let dim = f.space().dim();
    let mut p = LinearProgram::new(gens.len());
    for w in 0..dim {
        let coeffs = gens.iter().map(|g| g.values()[w].clone()).collect();
        p.push(coeffs, Relation::Eq, f.values()[w].clone());
    }
    if f.is_zero() {
        p.push(vec![rone(); gens.len()], Relation::Eq, rone());
    }
    Ok(feasible(&p).expect("well-formed posi program").0)
}

/// Like `member_posi`, also returning the coefficient certificate on success.
pub fn member_posi_witness(f: &Gamble, gens: &[Gamble]) -> Result<Option<Vec<Rat>>, SpaceError> {
    for g in gens {
        if g.space() != f.space() {
            return Err(SpaceError::SpaceMismatch);
        }
    }
    if gens.is_empty() {
        return Ok(None);
    }
    let dim = f.space().dim();
    let mut p = LinearProgram::new(gens.len());
    for w in 0..dim {
        let coeffs = gens.iter().map(|g| g.values()[w].clone()).collect();
        p.push(coeffs, Relation::Eq, f.values()[w].clone());
    }
    if f.is_zero() {
        p.push(vec![rone(); gens.len()], Relation::Eq, rone());
    }
    Ok(feasible(&p).expect("well-formed posi program").1)
}

/// Reduces a list of gambles to a basis of their linear span by exact
/// Gaussian elimination. Returns an independent subset-like basis (in
/// echelon form derived from the inputs).
pub fn span_basis(vecs: &[Gamble], space: &Space) -> Vec<Gamble> {
    let dim = space.dim();
    let rows: Vec<Vec<Rat>> = vecs.iter().map(|g| g.values().to_vec()).collect();
    let mut basis: Vec<Vec<Rat>> = Vec::new();
    for row in &rows {
        let mut r = row.clone();
        for b in &basis {
            let lead = b.iter().position(|v| !v.is_zero()).expect("nonzero basis row");
            if !r[lead].is_zero() {
                let factor = &r[lead] / &b[lead];
                for j in 0..dim {
                    let delta = &factor * &b[j];
                    r[j] -= delta;
                }
            }
        }
        if r.iter().any(|v| !v.is_zero()) {
            basis.push(r);
        }
    }
    basis
        .into_iter()
        .map(|r| Gamble::new(space, r).expect("dimension preserved"))
        .collect()
}

/// Basis of the lineality space of `posi(gens)`: the span of those
/// generators whose negation lies back in the cone.
pub fn lineality_basis(gens: &[Gamble], space: &Space) -> Result<Vec<Gamble>, SpaceError> {
    let mut lineal = Vec::new();
    for g in gens {
        if member_posi(&-g, gens)? {
            lineal.push(g.clone());
        }
    }
    Ok(span_basis(&lineal, space))
}
