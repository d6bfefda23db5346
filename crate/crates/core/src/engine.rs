//! The accept-reject calculus: assessments, deductive closure, limbo and
//! reckoning, background models, natural extension, coherence, closure
//! operators, maximal completion over query sets, and the model-axiom
//! checker.
//!
//! An assessment is a pair of finite statement lists. Deductive closure
//! reads the accepted list as the generator set of a positive linear hull;
//! reckoning additionally rejects every gamble whose acceptance would
//! create confusion. Both operations keep finite, symbolic representations
//! whose membership questions are linear programs.

use crate::rat::{rat, Rat};
use crate::region::{
    member_posi, member_posi_witness, member_region, pieces_intersect_witness, Region, RegionPiece,
};
use crate::sampling::sample_gambles;
use crate::space::{Gamble, Space, SpaceError};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error("strategy is not sound for this kind of assessment")]
    StrategyNotSound,
    #[error("input assessment is confusing (witness {witness})")]
    ConfusedInput { witness: Gamble },
    #[error("assessment is not deductively closable (witness {witness})")]
    NotClosable {
        witness: Gamble,
        certificate: Option<Vec<Rat>>,
    },
    #[error("assessment does not respect the background model (witness {witness})")]
    NoRespect { witness: Gamble },
    #[error("unsupported combination: {0}")]
    Unsupported(String),
}

/// Removes ray-duplicate statements, keeping first occurrences.
fn dedup_rays(list: Vec<Gamble>) -> Vec<Gamble> {
    let mut out: Vec<Gamble> = Vec::new();
    for g in list {
        if !out.iter().any(|h| h.same_ray(&g)) {
            out.push(g);
        }
    }
    out
}

fn ray_listed(list: &[Gamble], f: &Gamble) -> bool {
    list.iter().any(|h| h.same_ray(f))
}

/// A raw assessment: finite accepted and rejected statement lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assessment {
    space: Space,
    accepted: Vec<Gamble>,
    rejected: Vec<Gamble>,
}

impl Assessment {
    /// Statements are deduplicated up to positive scaling on ingestion.
    pub fn new(
        space: &Space,
        accepted: Vec<Gamble>,
        rejected: Vec<Gamble>,
    ) -> Result<Assessment, SpaceError> {
        for g in accepted.iter().chain(&rejected) {
            if g.space() != space {
                return Err(SpaceError::SpaceMismatch);
            }
        }
        Ok(Assessment {
            space: space.clone(),
            accepted: dedup_rays(accepted),
            rejected: dedup_rays(rejected),
        })
    }

    pub fn empty(space: &Space) -> Assessment {
        Assessment {
            space: space.clone(),
            accepted: Vec::new(),
            rejected: Vec::new(),
        }
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn accepted(&self) -> &[Gamble] {
        &self.accepted
    }

    pub fn rejected(&self) -> &[Gamble] {
        &self.rejected
    }
}

/// A deductively closed assessment: the accepted list is read as cone
/// generators (positive linear hull semantics), the rejected list is as-is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedAssessment {
    space: Space,
    accepted_gens: Vec<Gamble>,
    rejected: Vec<Gamble>,
}

impl ClosedAssessment {
    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn accepted_gens(&self) -> &[Gamble] {
        &self.accepted_gens
    }

    pub fn rejected(&self) -> &[Gamble] {
        &self.rejected
    }

    /// Accepted region: the positive linear hull of the generators.
    pub fn accepted_region(&self) -> Region {
        Region::from_pieces(vec![RegionPiece::PuncturedCone(self.accepted_gens.clone())])
    }

    /// Rejected gambles semantically confusing for this closed assessment:
    /// rejected statements lying in the accepted hull.
    pub fn confusing_rejected(&self) -> Vec<Gamble> {
        self.rejected
            .iter()
            .filter(|r| member_posi(r, &self.accepted_gens).expect("same space"))
            .cloned()
            .collect()
    }
}

/// Built-in background models; each satisfies the model axioms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BackgroundModel {
    /// accept all nonnegative gambles, reject the nonpositive nonzero ones
    Nonneg,
    /// accept the uniformly positive gambles, reject the uniformly negative
    Uniform,
    /// accept the nonnegative nonzero gambles, reject the nonpositive nonzero
    Positive,
    /// indifference to status quo only: accept 0, reject nothing
    Trivial,
}

impl BackgroundModel {
    pub fn name(&self) -> &'static str {
        match self {
            BackgroundModel::Nonneg => "nonneg",
            BackgroundModel::Uniform => "uniform",
            BackgroundModel::Positive => "positive",
            BackgroundModel::Trivial => "trivial",
        }
    }

    pub fn from_name(name: &str) -> Option<BackgroundModel> {
        match name {
            "nonneg" => Some(BackgroundModel::Nonneg),
            "uniform" => Some(BackgroundModel::Uniform),
            "positive" => Some(BackgroundModel::Positive),
            "trivial" => Some(BackgroundModel::Trivial),
            _ => None,
        }
    }

    /// Whether status quo (the zero gamble) is accepted.
    pub fn isq(&self) -> bool {
        matches!(self, BackgroundModel::Nonneg | BackgroundModel::Trivial)
    }

    pub fn accepted_region(&self, space: &Space) -> Region {
        let pieces = match self {
            BackgroundModel::Nonneg => vec![RegionPiece::OrthantNonneg],
            BackgroundModel::Uniform => vec![RegionPiece::OrthantUniformPos],
            BackgroundModel::Positive => vec![RegionPiece::OrthantNonnegPunctured],
            BackgroundModel::Trivial => vec![RegionPiece::Span(Vec::new())],
        };
        let _ = space;
        Region::from_pieces(pieces)
    }

    pub fn rejected_region(&self, space: &Space) -> Region {
        let _ = space;
        let pieces = match self {
            BackgroundModel::Nonneg | BackgroundModel::Positive => {
                vec![RegionPiece::OrthantNonposPunctured]
            }
            BackgroundModel::Uniform => vec![RegionPiece::OrthantUniformNeg],
            BackgroundModel::Trivial => Vec::new(),
        };
        Region::from_pieces(pieces)
    }
}

/// How a model's regions were obtained; reckoned and constructed models are
/// cone-shaped and limbo-free by construction, candidates are not trusted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelKind {
    Reckoned,
    Constructed,
    Candidate,
}

/// A model: a deductively closed assessment with no limbo, kept as symbolic
/// accepted/rejected regions plus the finite statements that generated them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    space: Space,
    accepted_gens: Vec<Gamble>,
    rejected_gens: Vec<Gamble>,
    background: Option<BackgroundModel>,
    accepted: Region,
    rejected: Region,
    kind: ModelKind,
}

impl Model {
    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn accepted_gens(&self) -> &[Gamble] {
        &self.accepted_gens
    }

    pub fn rejected_gens(&self) -> &[Gamble] {
        &self.rejected_gens
    }

    pub fn background(&self) -> Option<BackgroundModel> {
        self.background
    }

    pub fn accepted_region(&self) -> &Region {
        &self.accepted
    }

    pub fn rejected_region(&self) -> &Region {
        &self.rejected
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    /// Wraps externally supplied regions as an untrusted candidate model.
    pub fn candidate(space: &Space, accepted: Region, rejected: Region) -> Model {
        Model {
            space: space.clone(),
            accepted_gens: Vec::new(),
            rejected_gens: Vec::new(),
            background: None,
            accepted,
            rejected,
            kind: ModelKind::Candidate,
        }
    }

    /// Builds a constructed model from explicit regions plus the statements
    /// that generated them (used by the framework and prevision pipelines).
    pub fn constructed(
        space: &Space,
        accepted_gens: Vec<Gamble>,
        rejected_gens: Vec<Gamble>,
        background: Option<BackgroundModel>,
        accepted: Region,
        rejected: Region,
    ) -> Model {
        Model {
            space: space.clone(),
            accepted_gens,
            rejected_gens,
            background,
            accepted,
            rejected,
            kind: ModelKind::Constructed,
        }
    }

    /// The finite statements of this model, as an assessment.
    pub fn statements(&self) -> Assessment {
        Assessment::new(
            &self.space,
            self.accepted_gens.clone(),
            self.rejected_gens.clone(),
        )
        .expect("statements share the model space")
    }
}

/// Accepted-region pieces of the merged hull posi(gens plus background).
fn merged_accepted_pieces(
    gens: &[Gamble],
    background: Option<BackgroundModel>,
    space: &Space,
) -> Vec<RegionPiece> {
    let indicators: Vec<Gamble> = (0..space.dim()).map(|i| Gamble::indicator(space, i)).collect();
    match background {
        None => vec![RegionPiece::PuncturedCone(gens.to_vec())],
        Some(BackgroundModel::Trivial) => vec![
            RegionPiece::PuncturedCone(gens.to_vec()),
            RegionPiece::Span(Vec::new()),
        ],
        Some(BackgroundModel::Nonneg) => {
            // posi(gens with the nonnegative orthant) is the closed cone on
            // the generators and the atom indicators, 0 included
            let mut all = gens.to_vec();
            all.extend(indicators);
            vec![RegionPiece::Cone(all)]
        }
        Some(BackgroundModel::Positive) => {
            let mut all = gens.to_vec();
            all.extend(indicators);
            vec![RegionPiece::PuncturedCone(all)]
        }
        Some(BackgroundModel::Uniform) => vec![
            RegionPiece::PuncturedCone(gens.to_vec()),
            RegionPiece::Sum(vec![
                RegionPiece::Cone(gens.to_vec()),
                RegionPiece::OrthantUniformPos,
            ]),
        ],
    }
}

/// Rejected-region pieces of the reckoning: the positive-scaling hull of the
/// rejected statements, together with that hull minus the accepted hull,
/// merged with the background rejections.
fn merged_rejected_pieces(
    accepted_pieces: &[RegionPiece],
    gens: &[Gamble],
    rejected: &[Gamble],
    background: Option<BackgroundModel>,
    space: &Space,
) -> Vec<RegionPiece> {
    let indicators: Vec<Gamble> = (0..space.dim()).map(|i| Gamble::indicator(space, i)).collect();
    let mut pieces = Vec::new();
    // cone generators of the merged accepted hull, when it has one
    let merged_gens: Option<Vec<Gamble>> = match background {
        None | Some(BackgroundModel::Trivial) => Some(gens.to_vec()),
        Some(BackgroundModel::Nonneg) | Some(BackgroundModel::Positive) => {
            let mut all = gens.to_vec();
            all.extend(indicators);
            Some(all)
        }
        Some(BackgroundModel::Uniform) => None,
    };
    for r in rejected {
        pieces.push(RegionPiece::Ray(r.clone()));
        match &merged_gens {
            Some(mg) => pieces.push(RegionPiece::RayMinusCone(r.clone(), mg.clone())),
            None => {
                for ap in accepted_pieces {
                    pieces.push(RegionPiece::Sum(vec![
                        RegionPiece::Ray(r.clone()),
                        ap.negate(),
                    ]));
                }
            }
        }
    }
    if let Some(bg) = background {
        for sp in bg.rejected_region(space).pieces {
            pieces.push(sp.clone());
            for ap in accepted_pieces {
                pieces.push(RegionPiece::Sum(vec![sp.clone(), ap.negate()]));
            }
        }
    }
    pieces
}

/// Builds the reckoning of a closed assessment merged with an optional
/// background, verifying No Confusion (the generalized closability check).
fn build_model(
    space: &Space,
    gens: &[Gamble],
    rejected: &[Gamble],
    background: Option<BackgroundModel>,
) -> Result<Model, EngineError> {
    let accepted_pieces = merged_accepted_pieces(gens, background, space);
    let accepted = Region::from_pieces(accepted_pieces.clone());
    // every finite rejected statement must stay out of the accepted hull
    for r in rejected {
        if member_region(r, &accepted) {
            let certificate = member_posi_witness(r, gens).expect("same space");
            return Err(EngineError::NotClosable {
                witness: r.clone(),
                certificate,
            });
        }
    }
    // background rejections must not meet the accepted hull either
    if let Some(bg) = background {
        for sp in &bg.rejected_region(space).pieces {
            for ap in &accepted_pieces {
                if let Some(w) = pieces_intersect_witness(sp, ap, space) {
                    return Err(EngineError::NoRespect { witness: w });
                }
            }
        }
    }
    let rejected_region = Region::from_pieces(merged_rejected_pieces(
        &accepted_pieces,
        gens,
        rejected,
        background,
        space,
    ));
    Ok(Model {
        space: space.clone(),
        accepted_gens: gens.to_vec(),
        rejected_gens: rejected.to_vec(),
        background,
        accepted,
        rejected: rejected_region,
        kind: ModelKind::Reckoned,
    })
}

/// Statement-level confusion: the exact intersection of the two lists.
pub fn confusion_statements(a: &Assessment) -> Vec<Gamble> {
    a.accepted
        .iter()
        .filter(|g| a.rejected.contains(g))
        .cloned()
        .collect()
}

/// Confusion-removal strategies; the last one only applies to closed
/// assessments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConfusionStrategy {
    DropFromAccepted,
    DropFromRejected,
    DropFromBoth,
    DropFromBothThenReclose,
}

/// Removes statement-level confusion from a raw assessment.
pub fn remove_confusion(
    a: &Assessment,
    strategy: ConfusionStrategy,
) -> Result<Assessment, EngineError> {
    let confusing = confusion_statements(a);
    let drop = |list: &[Gamble]| -> Vec<Gamble> {
        list.iter()
            .filter(|g| !confusing.contains(g))
            .cloned()
            .collect()
    };
    let (accepted, rejected) = match strategy {
        ConfusionStrategy::DropFromAccepted => (drop(&a.accepted), a.rejected.clone()),
        ConfusionStrategy::DropFromRejected => (a.accepted.clone(), drop(&a.rejected)),
        ConfusionStrategy::DropFromBoth => (drop(&a.accepted), drop(&a.rejected)),
        ConfusionStrategy::DropFromBothThenReclose => return Err(EngineError::StrategyNotSound),
    };
    Ok(Assessment {
        space: a.space.clone(),
        accepted,
        rejected,
    })
}

/// Removes semantic confusion from a deductively closed assessment. Only
/// the two strategies sanctioned for closed assessments are sound; both
/// yield the same closed assessment.
pub fn remove_confusion_closed(
    d: &ClosedAssessment,
    strategy: ConfusionStrategy,
) -> Result<ClosedAssessment, EngineError> {
    let confusing = d.confusing_rejected();
    let rejected: Vec<Gamble> = d
        .rejected
        .iter()
        .filter(|r| !confusing.contains(r))
        .cloned()
        .collect();
    match strategy {
        ConfusionStrategy::DropFromRejected => Ok(ClosedAssessment {
            space: d.space.clone(),
            accepted_gens: d.accepted_gens.clone(),
            rejected,
        }),
        ConfusionStrategy::DropFromBothThenReclose => {
            // removing finitely many statements from the hull and reclosing
            // restores the same hull (each removed g is twice its own half);
            // literally confusing generators are replaced by their halves so
            // the statement list also drops them
            let accepted_gens = d
                .accepted_gens
                .iter()
                .map(|g| {
                    if confusing.contains(g) {
                        g.scale(&rat(1, 2))
                    } else {
                        g.clone()
                    }
                })
                .collect();
            Ok(ClosedAssessment {
                space: d.space.clone(),
                accepted_gens,
                rejected,
            })
        }
        _ => Err(EngineError::StrategyNotSound),
    }
}

/// Deductive extension: reads the accepted statements as hull generators.
pub fn deductive_extension(a: &Assessment) -> ClosedAssessment {
    ClosedAssessment {
        space: a.space.clone(),
        accepted_gens: a.accepted.clone(),
        rejected: a.rejected.clone(),
    }
}

/// Verdict of the closability criterion, with an exact certificate on
/// failure: the offending rejected gamble and its hull coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosabilityVerdict {
    pub closable: bool,
    pub witness: Option<Gamble>,
    pub certificate: Option<Vec<Rat>>,
}

/// An assessment is deductively closable iff no rejected statement lies in
/// the positive linear hull of the accepted ones.
pub fn is_deductively_closable(a: &Assessment) -> ClosabilityVerdict {
    for r in &a.rejected {
        if let Some(cert) = member_posi_witness(r, &a.accepted).expect("same space") {
            return ClosabilityVerdict {
                closable: false,
                witness: Some(r.clone()),
                certificate: Some(cert),
            };
        }
    }
    ClosabilityVerdict {
        closable: true,
        witness: None,
        certificate: None,
    }
}

/// Limbo membership for a confusion-free closed assessment: gambles in the
/// scaling hull of the rejected statements, or in that hull minus the
/// accepted hull, excluding the rejected statements themselves.
pub fn limbo_contains(d: &ClosedAssessment, f: &Gamble) -> Result<bool, EngineError> {
    if let Some(w) = d.confusing_rejected().into_iter().next() {
        return Err(EngineError::ConfusedInput { witness: w });
    }
    if d.rejected.contains(f) {
        return Ok(false);
    }
    let mut pieces = Vec::new();
    for r in &d.rejected {
        pieces.push(RegionPiece::Ray(r.clone()));
        pieces.push(RegionPiece::RayMinusCone(r.clone(), d.accepted_gens.clone()));
    }
    Ok(member_region(f, &Region::from_pieces(pieces)))
}

/// Reckoning extension of a confusion-free closed assessment: additionally
/// rejects every gamble in its limbo, yielding a model.
pub fn reckoning_extension(d: &ClosedAssessment) -> Result<Model, EngineError> {
    if let Some(w) = d.confusing_rejected().into_iter().next() {
        return Err(EngineError::ConfusedInput { witness: w });
    }
    build_model(&d.space, &d.accepted_gens, &d.rejected, None)
}

/// Status of a gamble against a model, including the nine-class partition
/// cell: with statuses accepted=0, rejected=1, unresolved=2 for the gamble
/// and its negation, the cell index is `3 * status(f) + status(-f)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StatusRecord {
    pub accepted: bool,
    pub rejected: bool,
    pub confusing: bool,
    pub unresolved: bool,
    pub indifferent: bool,
    pub favourable: bool,
    pub indeterminate: bool,
    pub nine_class: u8,
}

/// Classifies a gamble by membership of it and its negation in the model
/// regions.
pub fn classify(m: &Model, f: &Gamble) -> StatusRecord {
    let acc = member_region(f, &m.accepted);
    let rej = member_region(f, &m.rejected);
    let neg = -f;
    let nacc = member_region(&neg, &m.accepted);
    let nrej = member_region(&neg, &m.rejected);
    let status = |a: bool, r: bool| -> u8 {
        if a {
            0
        } else if r {
            1
        } else {
            2
        }
    };
    StatusRecord {
        accepted: acc,
        rejected: rej,
        confusing: acc && rej,
        unresolved: !acc && !rej,
        indifferent: acc && nacc,
        favourable: acc && nrej,
        indeterminate: !acc && !nacc,
        nine_class: 3 * status(acc, rej) + status(nacc, nrej),
    }
}

/// Natural extension: merges the assessment with the background model
/// statement-wise, checks closability of the union, and reckons.
pub fn natural_extension(a: &Assessment, s: BackgroundModel) -> Result<Model, EngineError> {
    let d = deductive_extension(a);
    build_model(&d.space, &d.accepted_gens, &d.rejected, Some(s)).map_err(|e| match e {
        EngineError::NotClosable { witness, .. } => EngineError::NoRespect { witness },
        other => other,
    })
}

/// Membership of `f` in the literal statement sets of an assessment
/// (up to ray identity, matching statement deduplication).
fn literally_accepted(a: &Assessment, f: &Gamble) -> bool {
    ray_listed(&a.accepted, f)
}

fn literally_rejected(a: &Assessment, f: &Gamble) -> bool {
    ray_listed(&a.rejected, f)
}

const COHERENCE_SAMPLES: usize = 256;
const COHERENCE_SEED: u64 = 0xC0FFEE;

/// Strict coherence of an assessment against a background: the natural
/// extension must add nothing beyond the literal statements of `a` (which
/// therefore must already contain the background). Checked on region
/// representatives plus a deterministic sample of grid points.
pub fn is_coherent(a: &Assessment, s: BackgroundModel) -> bool {
    let Ok(m) = natural_extension(a, s) else {
        return false;
    };
    let mut points = m.accepted.representatives(&a.space);
    points.extend(m.rejected.representatives(&a.space));
    points.extend(s.accepted_region(&a.space).representatives(&a.space));
    points.extend(s.rejected_region(&a.space).representatives(&a.space));
    points.extend(a.accepted.iter().cloned());
    points.extend(a.rejected.iter().cloned());
    points.extend(sample_gambles(&a.space, COHERENCE_SAMPLES, COHERENCE_SEED));
    for f in &points {
        if member_region(f, &m.accepted) && !literally_accepted(a, f) {
            return false;
        }
        if member_region(f, &m.rejected) && !literally_rejected(a, f) {
            return false;
        }
    }
    true
}

/// Coherence with the background taken as given: the natural extension
/// must add nothing beyond the literal statements and the background
/// regions themselves. The background-only assessment is coherent in this
/// sense, while `is_coherent` also demands the background be restated.
pub fn is_coherent_over_background(a: &Assessment, s: BackgroundModel) -> bool {
    let Ok(m) = natural_extension(a, s) else {
        return false;
    };
    let s_acc = s.accepted_region(&a.space);
    let s_rej = s.rejected_region(&a.space);
    let mut points = m.accepted.representatives(&a.space);
    points.extend(m.rejected.representatives(&a.space));
    points.extend(a.accepted.iter().cloned());
    points.extend(a.rejected.iter().cloned());
    points.extend(sample_gambles(&a.space, COHERENCE_SAMPLES, COHERENCE_SEED));
    for f in &points {
        if member_region(f, &m.accepted)
            && !literally_accepted(a, f)
            && !member_region(f, &s_acc)
        {
            return false;
        }
        if member_region(f, &m.rejected)
            && !literally_rejected(a, f)
            && !member_region(f, &s_rej)
        {
            return false;
        }
    }
    true
}

/// Region-level membership equivalence of two models on representatives
/// plus sampled grid points.
pub fn models_equivalent(m1: &Model, m2: &Model) -> bool {
    let space = &m1.space;
    if space != &m2.space {
        return false;
    }
    let mut points = m1.accepted.representatives(space);
    points.extend(m1.rejected.representatives(space));
    points.extend(m2.accepted.representatives(space));
    points.extend(m2.rejected.representatives(space));
    points.extend(sample_gambles(space, COHERENCE_SAMPLES, COHERENCE_SEED));
    points.iter().all(|f| {
        member_region(f, &m1.accepted) == member_region(f, &m2.accepted)
            && member_region(f, &m1.rejected) == member_region(f, &m2.rejected)
    })
}

/// Model-level coherence: rebuilding from the model's own statements over
/// the background reproduces the model (merged with the background).
pub fn is_coherent_model(m: &Model, s: BackgroundModel) -> bool {
    let a = m.statements();
    let Ok(m2) = natural_extension(&a, s) else {
        return false;
    };
    let merged = Model::candidate(
        &m.space,
        m.accepted.union(&s.accepted_region(&m.space)),
        m.rejected.union(&s.rejected_region(&m.space)),
    );
    models_equivalent(&m2, &merged)
}

/// Statement-wise union of assessments.
pub fn union_assessments(items: &[Assessment]) -> Result<Assessment, EngineError> {
    let space = items
        .first()
        .map(|a| a.space.clone())
        .ok_or_else(|| EngineError::Unsupported("union of an empty family".into()))?;
    let mut accepted = Vec::new();
    let mut rejected = Vec::new();
    for a in items {
        if a.space != space {
            return Err(EngineError::Space(SpaceError::SpaceMismatch));
        }
        accepted.extend(a.accepted.clone());
        rejected.extend(a.rejected.clone());
    }
    Ok(Assessment::new(&space, accepted, rejected)?)
}

/// Deductive closure of the union.
pub fn deductive_union(items: &[Assessment]) -> Result<ClosedAssessment, EngineError> {
    Ok(deductive_extension(&union_assessments(items)?))
}

/// Reckoning closure of the union; fails when the union is not closable.
pub fn reckoning_union(items: &[Assessment]) -> Result<Model, EngineError> {
    let d = deductive_extension(&union_assessments(items)?);
    build_model(&d.space, &d.accepted_gens, &d.rejected, None)
}

/// Component-wise intersection of two models. Supported on two-atom spaces
/// via exact sector decomposition; the result is returned as a candidate
/// whose model axioms can be checked separately (the intersection of models
/// with confusion need not be a model).
pub fn intersect_models(a: &Model, b: &Model) -> Result<Model, EngineError> {
    use crate::arrangement::{boundary_rays, intersect_profiles, profile, region_from_profile};
    if a.space != b.space {
        return Err(EngineError::Space(SpaceError::SpaceMismatch));
    }
    if a.space.dim() != 2 {
        return Err(EngineError::Unsupported(
            "model intersection is only supported on two-atom spaces".into(),
        ));
    }
    let space = &a.space;
    let rays = boundary_rays(&[&a.accepted, &a.rejected, &b.accepted, &b.rejected], space);
    let acc = intersect_profiles(
        &profile(&a.accepted, &rays, space),
        &profile(&b.accepted, &rays, space),
    );
    let rej = intersect_profiles(
        &profile(&a.rejected, &rays, space),
        &profile(&b.rejected, &rays, space),
    );
    Ok(Model::candidate(
        space,
        region_from_profile(&acc, space),
        region_from_profile(&rej, space),
    ))
}

/// Closure structures of the calculus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureKind {
    /// deductively closed assessments
    D,
    /// deductively closed assessments without confusion
    NcD,
    /// models without confusion
    NcM,
}

/// Result of a closure operator; `Top` is the absorbing everything-model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosureOutcome {
    Closed(ClosedAssessment),
    Model(Model),
    Top,
}

/// The three practical closure operators.
pub fn closure(a: &Assessment, structure: StructureKind) -> ClosureOutcome {
    let d = deductive_extension(a);
    match structure {
        StructureKind::D => ClosureOutcome::Closed(d),
        StructureKind::NcD => {
            if is_deductively_closable(a).closable {
                ClosureOutcome::Closed(d)
            } else {
                ClosureOutcome::Top
            }
        }
        StructureKind::NcM => match reckoning_extension(&d) {
            Ok(m) => ClosureOutcome::Model(m),
            Err(_) => ClosureOutcome::Top,
        },
    }
}

/// Tie-breaking policy for maximal completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompletionPolicy {
    AcceptFirst,
    RejectFirst,
}

/// Resolves every query gamble against the reckoning of `a`, extending the
/// model gamble by gamble. An unresolved query is tentatively accepted
/// (resp. rejected, per policy) whenever the augmented assessment stays
/// closable; otherwise the other side is taken. Query order matters.
pub fn maximal_completion(
    a: &Assessment,
    queries: &[Gamble],
    policy: CompletionPolicy,
) -> Result<Model, EngineError> {
    let d = deductive_extension(a);
    let mut model = reckoning_extension(&d)?;
    for f in queries {
        let status = classify(&model, f);
        if !status.unresolved {
            continue;
        }
        let accept = |m: &Model| -> Result<Model, EngineError> {
            let mut gens = m.accepted_gens.clone();
            gens.push(f.clone());
            build_model(&m.space, &gens, &m.rejected_gens, m.background)
        };
        let reject = |m: &Model| -> Result<Model, EngineError> {
            let mut rej = m.rejected_gens.clone();
            rej.push(f.clone());
            build_model(&m.space, &m.accepted_gens, &rej, m.background)
        };
        let (first, second): (&dyn Fn(&Model) -> _, &dyn Fn(&Model) -> _) = match policy {
            CompletionPolicy::AcceptFirst => (&accept, &reject),
            CompletionPolicy::RejectFirst => (&reject, &accept),
        };
        model = first(&model).or_else(|_| second(&model))?;
    }
    Ok(model)
}

/// One axiom check with a counterexample witness on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub pass: bool,
    pub witness: Option<Gamble>,
}

impl Check {
    fn pass() -> Check {
        Check {
            pass: true,
            witness: None,
        }
    }

    fn fail(w: Gamble) -> Check {
        Check {
            pass: false,
            witness: Some(w),
        }
    }
}

/// Report of the model-axiom checker: background inclusion, status quo not
/// rejected, cone-ness of the accepted region, absence of limbo, and
/// confusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelAxiomReport {
    pub ar1_background: Check,
    pub ar2_status_quo: Check,
    pub ar3_cone: Check,
    pub ar4_no_limbo: Check,
    pub no_confusion: Check,
}

impl ModelAxiomReport {
    pub fn all_pass(&self) -> bool {
        self.ar1_background.pass
            && self.ar2_status_quo.pass
            && self.ar3_cone.pass
            && self.ar4_no_limbo.pass
            && self.no_confusion.pass
    }
}

/// Checks the four model axioms (plus No Confusion) for a candidate model
/// against a background. Structural facts are used for reckoned and
/// constructed representations; everything else is certified on region
/// representatives with exact membership queries.
pub fn check_model_axioms(m: &Model, s: &BackgroundModel) -> ModelAxiomReport {
    let space = &m.space;
    // AR1: the background embeds in the model
    let mut ar1 = Check::pass();
    for f in s.accepted_region(space).representatives(space) {
        if !member_region(&f, &m.accepted) {
            ar1 = Check::fail(f);
            break;
        }
    }
    if ar1.pass {
        for f in s.rejected_region(space).representatives(space) {
            if !member_region(&f, &m.rejected) {
                ar1 = Check::fail(f);
                break;
            }
        }
    }
    // AR2: status quo is not rejected
    let zero = Gamble::zero(space);
    let ar2 = if member_region(&zero, &m.rejected) {
        Check::fail(zero.clone())
    } else {
        Check::pass()
    };
    // AR3: the accepted region is a cone (closed under positive combination)
    let ar3 = {
        let mut result = Check::pass();
        let reps: Vec<Gamble> = m.accepted.representatives(space).into_iter().take(12).collect();
        'outer: for f in &reps {
            for c in [rat(1, 2), rat(3, 1)] {
                let scaled = f.scale(&c);
                if !member_region(&scaled, &m.accepted) {
                    result = Check::fail(scaled);
                    break 'outer;
                }
            }
            for g in &reps {
                let sum = f + g;
                if !member_region(&sum, &m.accepted) {
                    result = Check::fail(sum);
                    break 'outer;
                }
            }
        }
        result
    };
    // AR4: no limbo: scalings of rejected gambles, minus accepted gambles,
    // stay rejected
    let ar4 = {
        let mut result = Check::pass();
        let rej_reps: Vec<Gamble> = m.rejected.representatives(space).into_iter().take(12).collect();
        let mut acc_reps = vec![zero.clone()];
        acc_reps.extend(m.accepted.representatives(space).into_iter().take(8));
        'outer: for r in &rej_reps {
            for c in [rat(1, 2), rat(1, 1), rat(2, 1)] {
                let scaled = r.scale(&c);
                for a in &acc_reps {
                    let candidate = &scaled - a;
                    let probe_needed = !a.is_zero() || c != rat(1, 1);
                    if probe_needed && !member_region(&candidate, &m.rejected) {
                        result = Check::fail(candidate);
                        break 'outer;
                    }
                }
            }
        }
        result
    };
    // No Confusion
    let no_confusion = match crate::region::regions_intersect_witness(
        &m.accepted,
        &m.rejected,
        space,
    ) {
        Some(w) => Check::fail(w),
        None => Check::pass(),
    };
    ModelAxiomReport {
        ar1_background: ar1,
        ar2_status_quo: ar2,
        ar3_cone: ar3,
        ar4_no_limbo: ar4,
        no_confusion,
    }
}
