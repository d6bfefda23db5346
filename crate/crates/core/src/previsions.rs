//! Lower previsions as supremum buying prices, and their two-way bridge
//! with accept-reject models: marginal gambles, avoiding sure loss, the
//! natural-extension value, coherence, prevision-induced models, and the
//! prevision read off a model.

use crate::engine::{BackgroundModel, Model};
use crate::rat::{rone, rzero, Rat};
use crate::ratlp::{solve_lp, LinearProgram, LpOutcome, Relation};
use crate::region::{compile, Region, RegionPiece};
use crate::space::{Gamble, Space, SpaceError};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PrevisionError {
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error("duplicate gamble in lower prevision domain")]
    DuplicateGamble,
    #[error("lower prevision has no entries")]
    Empty,
    #[error("lower prevision incurs sure loss")]
    SureLoss { certificate: Vec<Rat> },
    #[error("mass vector is not a probability: nonnegative entries summing to one required")]
    BadMass,
    #[error("background model incompatible with coherent previsions: {0}")]
    IncompatibleBackground(&'static str),
    #[error("buying price unbounded above; model accepts arbitrarily sweetened losses")]
    Unbounded,
    #[error("no acceptable shifted gamble; model misses the background sure gains")]
    NoValue,
}

/// A lower prevision on a finite domain: supremum acceptable buying prices
/// for finitely many gambles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerPrevision {
    space: Space,
    entries: Vec<(Gamble, Rat)>,
}

impl LowerPrevision {
    pub fn new(space: &Space, entries: Vec<(Gamble, Rat)>) -> Result<LowerPrevision, PrevisionError> {
        for (g, _) in &entries {
            if g.space() != space {
                return Err(PrevisionError::Space(SpaceError::SpaceMismatch));
            }
        }
        for i in 0..entries.len() {
            for j in (i + 1)..entries.len() {
                if entries[i].0 == entries[j].0 {
                    return Err(PrevisionError::DuplicateGamble);
                }
            }
        }
        Ok(LowerPrevision {
            space: space.clone(),
            entries,
        })
    }

    /// The vacuous prevision on the given domain: every value is the
    /// gamble's infimum.
    pub fn vacuous(space: &Space, domain: Vec<Gamble>) -> Result<LowerPrevision, PrevisionError> {
        let entries = domain
            .into_iter()
            .map(|g| {
                let v = g.min_value();
                (g, v)
            })
            .collect();
        LowerPrevision::new(space, entries)
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn entries(&self) -> &[(Gamble, Rat)] {
        &self.entries
    }
}

/// A linear prevision, identified with its probability mass function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearPrevision {
    space: Space,
    mass: Vec<Rat>,
}

impl LinearPrevision {
    pub fn new(space: &Space, mass: Vec<Rat>) -> Result<LinearPrevision, PrevisionError> {
        if mass.len() != space.dim()
            || mass.iter().any(|m| m < &rzero())
            || mass.iter().fold(rzero(), |a, m| a + m) != rone()
        {
            return Err(PrevisionError::BadMass);
        }
        Ok(LinearPrevision {
            space: space.clone(),
            mass,
        })
    }

    pub fn mass(&self) -> &[Rat] {
        &self.mass
    }

    /// The expectation of a gamble under the mass function.
    pub fn value(&self, f: &Gamble) -> Rat {
        f.values()
            .iter()
            .zip(&self.mass)
            .fold(rzero(), |a, (v, m)| a + v * m)
    }

    /// The mass function as a gamble (used as a halfspace normal).
    fn as_gamble(&self) -> Gamble {
        Gamble::new(&self.space, self.mass.clone()).expect("mass has space dimension")
    }

    /// The lower prevision restricting this expectation to a finite domain.
    pub fn restrict(&self, domain: Vec<Gamble>) -> Result<LowerPrevision, PrevisionError> {
        let entries = domain.into_iter().map(|g| {
            let v = self.value(&g);
            (g, v)
        });
        LowerPrevision::new(&self.space, entries.collect())
    }
}

/// The marginal gambles of a lower prevision, one per entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarginalSet {
    pub gambles: Vec<Gamble>,
}

/// Entry-wise marginal gamble: the gamble minus its value times the unit
/// constant.
pub fn marginal_gambles(lp: &LowerPrevision) -> MarginalSet {
    let space = lp.space();
    let gambles = lp
        .entries()
        .iter()
        .map(|(g, v)| g - &Gamble::constant(space, v.clone()))
        .collect();
    MarginalSet { gambles }
}

/// A sure-loss verdict: on failure, convex coefficients over the marginal
/// gambles whose combination is uniformly negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SureLossVerdict {
    pub avoids: bool,
    pub certificate: Option<Vec<Rat>>,
}

/// Decides avoiding sure loss: minimizes the uniform upper bound of convex
/// combinations of the marginal gambles; sure loss iff that bound can be
/// pushed below zero.
pub fn avoids_sure_loss(lp: &LowerPrevision) -> Result<SureLossVerdict, PrevisionError> {
    if lp.entries().is_empty() {
        return Err(PrevisionError::Empty);
    }
    let marg = marginal_gambles(lp).gambles;
    let n = marg.len();
    let dim = lp.space().dim();
    // variables: lambda (nonneg, convex) and the bound t (free); maximize -t
    let mut p = LinearProgram::new(n + 1);
    p.nonneg[n] = false;
    p.objective[n] = -rone();
    for w in 0..dim {
        let mut coeffs: Vec<Rat> = marg.iter().map(|m| m.values()[w].clone()).collect();
        coeffs.push(-rone());
        p.push(coeffs, Relation::Le, rzero());
    }
    let mut convex = vec![rone(); n];
    convex.push(rzero());
    p.push(convex, Relation::Eq, rone());
    match solve_lp(&p).expect("well-formed sure-loss program") {
        LpOutcome::Optimal { value, witness } => {
            if value > rzero() {
                Ok(SureLossVerdict {
                    avoids: false,
                    certificate: Some(witness[..n].to_vec()),
                })
            } else {
                Ok(SureLossVerdict {
                    avoids: true,
                    certificate: None,
                })
            }
        }
        // t is bounded below by each combination value, so neither outcome
        // can occur on a well-formed program
        _ => unreachable!("sure-loss program is feasible and bounded"),
    }
}

/// The natural-extension value at `f`: the best uniform lower bound of
/// `f - g` over nonnegative combinations `g` of the marginal gambles.
pub fn natural_extension_value(lp: &LowerPrevision, f: &Gamble) -> Result<Rat, PrevisionError> {
    if f.space() != lp.space() {
        return Err(PrevisionError::Space(SpaceError::SpaceMismatch));
    }
    let verdict = avoids_sure_loss(lp)?;
    if !verdict.avoids {
        return Err(PrevisionError::SureLoss {
            certificate: verdict.certificate.unwrap_or_default(),
        });
    }
    let marg = marginal_gambles(lp).gambles;
    let n = marg.len();
    let dim = lp.space().dim();
    // variables: lambda (nonneg) and the bound t (free); maximize t
    let mut p = LinearProgram::new(n + 1);
    p.nonneg[n] = false;
    p.objective[n] = rone();
    for w in 0..dim {
        let mut coeffs: Vec<Rat> = marg.iter().map(|m| (-&m.values()[w]).clone()).collect();
        coeffs.push(-rone());
        p.push(coeffs, Relation::Ge, -&f.values()[w]);
    }
    match solve_lp(&p).expect("well-formed extension program") {
        LpOutcome::Optimal { value, .. } => Ok(value),
        // avoiding sure loss bounds the value by sup f
        _ => unreachable!("extension program is feasible and bounded under ASL"),
    }
}

/// Coherence of a lower prevision: avoids sure loss, every stated value is
/// a fixed point of the natural extension, and the coherence arithmetic
/// (sure gains, positive homogeneity, superadditivity) holds on whatever
/// entry combinations the domain happens to contain.
pub fn is_coherent_lpr(lp: &LowerPrevision) -> Result<bool, PrevisionError> {
    if lp.entries().is_empty() {
        return Ok(true);
    }
    match avoids_sure_loss(lp)? {
        SureLossVerdict { avoids: false, .. } => return Ok(false),
        _ => {}
    }
    let lookup = |g: &Gamble| {
        lp.entries()
            .iter()
            .find(|(h, _)| h == g)
            .map(|(_, v)| v.clone())
    };
    for (g, v) in lp.entries() {
        if &natural_extension_value(lp, g)? != v {
            return Ok(false);
        }
        if v < &g.min_value() {
            return Ok(false);
        }
    }
    for (f, vf) in lp.entries() {
        for (g, vg) in lp.entries() {
            if let Some(vsum) = lookup(&(f + g)) {
                if vsum < vf + vg {
                    return Ok(false);
                }
            }
        }
        for k in [crate::rat::rat(1, 2), crate::rat::rint(2), crate::rat::rint(3)] {
            if let Some(vs) = lookup(&f.scale(&k)) {
                if vs != vf * &k {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The accept-reject model induced by a lower prevision over a background:
/// accepted adds every marginal combination sweetened by a uniformly
/// positive amount, rejected adds the mirror image. With `accept_marginals`
/// the marginal gambles themselves are accepted too (the committal reading
/// of a buying price).
pub fn prevision_to_model(
    lp: &LowerPrevision,
    s: BackgroundModel,
    accept_marginals: bool,
) -> Result<Model, PrevisionError> {
    if matches!(s, BackgroundModel::Trivial) {
        return Err(PrevisionError::IncompatibleBackground(
            "background must accept every uniformly positive gamble",
        ));
    }
    let verdict = avoids_sure_loss(lp)?;
    if !verdict.avoids {
        return Err(PrevisionError::SureLoss {
            certificate: verdict.certificate.unwrap_or_default(),
        });
    }
    let space = lp.space();
    let marg = marginal_gambles(lp).gambles;
    let mut accepted = s.accepted_region(space);
    let mut rejected = s.rejected_region(space);
    accepted.pieces.push(RegionPiece::Sum(vec![
        RegionPiece::Cone(marg.clone()),
        RegionPiece::OrthantUniformPos,
    ]));
    rejected.pieces.push(RegionPiece::Sum(vec![
        RegionPiece::OrthantUniformNeg,
        RegionPiece::Cone(marg.iter().map(|m| -m).collect()),
    ]));
    if accept_marginals {
        accepted.pieces.push(RegionPiece::Cone(marg.clone()));
    }
    Ok(Model::constructed(
        space,
        marg,
        Vec::new(),
        Some(s),
        accepted,
        rejected,
    ))
}

/// The supremum buying price a model assigns to `f`: the largest `alpha`
/// with `f - alpha` accepted. Computed per accepted piece as a parametric
/// program; a strict-feasibility probe first checks the piece is hit at
/// all, then the relaxed program maximizes `alpha` (the supremum over a
/// nonempty convex piece is unchanged by closing its strict faces).
pub fn model_to_lower_prevision(m: &Model, f: &Gamble) -> Result<Rat, PrevisionError> {
    if f.space() != m.space() {
        return Err(PrevisionError::Space(SpaceError::SpaceMismatch));
    }
    let space = m.space();
    let dim = space.dim();
    let mut best: Option<Rat> = None;
    for piece in &m.accepted_region().pieces {
        let frag = compile(piece, space);
        let strict = !frag.strict.is_empty();
        // variables: fragment vars, alpha (free), then slack t (free) in
        // the probe phase
        let base_vars = frag.vars + 1;
        let alpha = frag.vars;
        let build = |probe: bool| {
            let vars = base_vars + usize::from(probe && strict);
            let mut p = LinearProgram::new(vars);
            p.nonneg[..frag.vars].clone_from_slice(&frag.nonneg);
            p.nonneg[alpha] = false;
            if probe && strict {
                p.nonneg[base_vars] = false;
                p.objective[base_vars] = rone();
            } else if !probe {
                p.objective[alpha] = rone();
            }
            for w in 0..dim {
                let mut coeffs = vec![rzero(); vars];
                for (v, col) in frag.columns.iter().enumerate() {
                    coeffs[v] = col[w].clone();
                }
                coeffs[alpha] = rone();
                p.push(coeffs, Relation::Eq, f.values()[w].clone());
            }
            for (coeffs, rel, b) in &frag.constraints {
                let mut full = coeffs.clone();
                full.resize(vars, rzero());
                p.push(full, *rel, b.clone());
            }
            for sform in &frag.strict {
                let mut full = sform.clone();
                full.resize(vars, rzero());
                if probe {
                    full[base_vars] = -rone();
                }
                p.push(full, Relation::Ge, rzero());
            }
            p
        };
        if strict {
            let probe = build(true);
            let hit = match solve_lp(&probe).expect("well-formed probe program") {
                LpOutcome::Infeasible => false,
                LpOutcome::Optimal { value, .. } => value > rzero(),
                LpOutcome::Unbounded { .. } => true,
            };
            if !hit {
                continue;
            }
        }
        match solve_lp(&build(false)).expect("well-formed price program") {
            LpOutcome::Infeasible => continue,
            LpOutcome::Unbounded { .. } => return Err(PrevisionError::Unbounded),
            LpOutcome::Optimal { value, .. } => {
                if best.as_ref().map_or(true, |b| &value > b) {
                    best = Some(value);
                }
            }
        }
    }
    best.ok_or(PrevisionError::NoValue)
}

/// The model a linear prevision stands for: accept exactly the gambles
/// with positive expectation, reject those with negative expectation.
pub fn linear_prevision_model(p: &LinearPrevision) -> Model {
    let n = p.as_gamble();
    let accepted = Region::from_pieces(vec![RegionPiece::HalfSpaceOpen(n.clone())]);
    let rejected = Region::from_pieces(vec![RegionPiece::HalfSpaceOpen(-&n)]);
    Model::constructed(&p.space, Vec::new(), Vec::new(), None, accepted, rejected)
}
