//! Simplified statement frameworks: accept-favour, favour-indifference,
//! favourability, and acceptability, with their closability criteria,
//! explicit natural extensions, characterisation checkers, and the
//! correspondence with desirability axiom systems from the literature.
//!
//! Favourable means accepted while the negation is rejected; indifferent
//! means accepted in both directions. The frameworks restrict which
//! statement patterns an assessment may use, which buys simpler closability
//! criteria (all of the form "0 stays out of a hull sum").

use crate::arrangement::{cell_points, symmetric_rays};
use crate::engine::{
    natural_extension, Assessment, BackgroundModel, EngineError, Model,
};
use crate::rat::{rat, rone, Rat};
use crate::ratlp::{feasible, LinearProgram, Relation};
use crate::region::{member_posi, member_region, Region, RegionPiece};
use crate::sampling::sample_gambles;
use crate::space::{Gamble, Space, SpaceError};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FrameworkError {
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error("assessment violates the framework condition (statement {witness})")]
    ConditionViolated { witness: Gamble },
    #[error("assessment is not closable in this framework: 0 enters the hull sum")]
    NotClosable { certificate: Option<Vec<Rat>> },
    #[error("assessment does not respect the background model")]
    NoRespect,
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// The four simplified frameworks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrameworkTag {
    /// accept-favour: rejects only negations of accepted gambles
    AF,
    /// favour-indifference: accepts only favourable or indifferent gambles
    FI,
    /// favourability statements over a favour-indifference background
    F,
    /// acceptability statements over an accept-reject background
    A,
}

/// A favour-indifference assessment, by its defining statement lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiAssessment {
    space: Space,
    favourable: Vec<Gamble>,
    indifferent: Vec<Gamble>,
}

impl FiAssessment {
    pub fn new(
        space: &Space,
        favourable: Vec<Gamble>,
        indifferent: Vec<Gamble>,
    ) -> Result<FiAssessment, SpaceError> {
        for g in favourable.iter().chain(&indifferent) {
            if g.space() != space {
                return Err(SpaceError::SpaceMismatch);
            }
        }
        Ok(FiAssessment {
            space: space.clone(),
            favourable,
            indifferent,
        })
    }

    pub fn favourable(&self) -> &[Gamble] {
        &self.favourable
    }

    pub fn indifferent(&self) -> &[Gamble] {
        &self.indifferent
    }

    /// The encoded accept-reject assessment: accepted is favourable plus
    /// indifferent plus negated indifferent, rejected is negated favourable.
    pub fn to_assessment(&self) -> Assessment {
        let mut accepted = self.favourable.clone();
        accepted.extend(self.indifferent.iter().cloned());
        accepted.extend(self.indifferent.iter().map(|g| -g));
        let rejected = self.favourable.iter().map(|g| -g).collect();
        Assessment::new(&self.space, accepted, rejected).expect("same space by construction")
    }
}

/// A favour-indifference background model with indifference to status quo,
/// given by a finite basis of background-indifferent gambles and a finitely
/// generated favourable cone, optionally joined with the nonnegative
/// nonzero gambles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiBackground {
    indifferent: Vec<Gamble>,
    favourable_gens: Vec<Gamble>,
    favour_positive_orthant: bool,
}

impl FiBackground {
    pub fn new(
        indifferent: Vec<Gamble>,
        favourable_gens: Vec<Gamble>,
        favour_positive_orthant: bool,
    ) -> FiBackground {
        FiBackground {
            indifferent,
            favourable_gens,
            favour_positive_orthant,
        }
    }

    /// The vacuous literature background: favour exactly the nonnegative
    /// nonzero gambles, indifferent only to status quo.
    pub fn positive_orthant() -> FiBackground {
        FiBackground {
            indifferent: Vec::new(),
            favourable_gens: Vec::new(),
            favour_positive_orthant: true,
        }
    }

    pub fn indifferent_gens(&self) -> &[Gamble] {
        &self.indifferent
    }

    pub fn favourable_gens(&self) -> &[Gamble] {
        &self.favourable_gens
    }

    pub fn indifferent_region(&self, _space: &Space) -> Region {
        Region::from_pieces(vec![RegionPiece::Span(self.indifferent.clone())])
    }

    /// Generators of the favourable hull, indicators standing in for the
    /// positive orthant.
    fn favour_hull_gens(&self, space: &Space) -> Vec<Gamble> {
        let mut gens = self.favourable_gens.clone();
        if self.favour_positive_orthant {
            gens.extend((0..space.dim()).map(|i| Gamble::indicator(space, i)));
        }
        gens
    }

    pub fn favourable_region(&self, space: &Space) -> Region {
        Region::from_pieces(vec![RegionPiece::PuncturedCone(self.favour_hull_gens(space))])
    }

    pub fn accepted_region(&self, space: &Space) -> Region {
        self.indifferent_region(space)
            .union(&self.favourable_region(space))
    }

    pub fn rejected_region(&self, space: &Space) -> Region {
        self.favourable_region(space).negate()
    }
}

/// A background parameter for characterisation checks: either an
/// accept-reject background or a favour-indifference one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FrameworkBackground {
    AcceptReject(BackgroundModel),
    FavourIndifference(FiBackground),
}

impl FrameworkBackground {
    fn accepted_region(&self, space: &Space) -> Region {
        match self {
            FrameworkBackground::AcceptReject(s) => s.accepted_region(space),
            FrameworkBackground::FavourIndifference(s) => s.accepted_region(space),
        }
    }

    fn rejected_region(&self, space: &Space) -> Region {
        match self {
            FrameworkBackground::AcceptReject(s) => s.rejected_region(space),
            FrameworkBackground::FavourIndifference(s) => s.rejected_region(space),
        }
    }
}

/// One framework check with a counterexample witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameworkCheck {
    pub name: &'static str,
    pub pass: bool,
    pub witness: Option<Gamble>,
}

impl FrameworkCheck {
    fn pass(name: &'static str) -> FrameworkCheck {
        FrameworkCheck {
            name,
            pass: true,
            witness: None,
        }
    }

    fn set_fail(&mut self, w: &Gamble) {
        if self.pass {
            self.pass = false;
            self.witness = Some(w.clone());
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameworkReport {
    pub tag: FrameworkTag,
    pub checks: Vec<FrameworkCheck>,
}

impl FrameworkReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&FrameworkCheck> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}

/// Membership flags of a model in the simplified frameworks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrameworkFlags {
    /// the statement lists satisfy the accept-favour condition literally
    pub af_statements: bool,
    /// semantic accept-favour: negated rejected region inside the accepted
    pub af: bool,
    /// semantic favour-indifference: accepted is favourable or indifferent
    pub fi: bool,
}

/// Probe points that decide region questions: on two-atom spaces one exact
/// representative per cell of the boundary-ray arrangement, elsewhere the
/// symbolic representatives plus a deterministic grid sample. Closed under
/// negation.
fn probe_points(regions: &[&Region], space: &Space) -> Vec<Gamble> {
    let mut points = if space.dim() == 2 {
        let rays = symmetric_rays(regions, space);
        cell_points(&rays, space)
    } else {
        let mut pts = vec![Gamble::zero(space)];
        for r in regions {
            pts.extend(r.representatives(space));
        }
        pts.extend(sample_gambles(space, 64, 0x0F0F));
        pts
    };
    let negs: Vec<Gamble> = points.iter().map(|p| -p).collect();
    points.extend(negs);
    let mut dedup: Vec<Gamble> = Vec::new();
    for p in points {
        if !dedup.contains(&p) {
            dedup.push(p);
        }
    }
    dedup
}

/// Whether a model favours `f`: accepted with rejected negation.
pub fn favour_member(m: &Model, f: &Gamble) -> bool {
    member_region(f, m.accepted_region()) && member_region(&-f, m.rejected_region())
}

/// Whether a model is indifferent to `f`: accepted in both directions.
pub fn indifferent_member(m: &Model, f: &Gamble) -> bool {
    member_region(f, m.accepted_region()) && member_region(&-f, m.accepted_region())
}

/// Semantic framework membership of a model, decided on probe points
/// (exact cell representatives on two-atom spaces).
pub fn framework_membership(m: &Model) -> FrameworkFlags {
    let space = m.space();
    let af_statements = m.rejected_gens().iter().all(|r| {
        let neg = -r;
        m.accepted_gens().iter().any(|a| a.same_ray(&neg))
    });
    let points = probe_points(&[m.accepted_region(), m.rejected_region()], space);
    let mut af = true;
    let mut fi = true;
    for f in &points {
        let acc = member_region(f, m.accepted_region());
        let rej = member_region(f, m.rejected_region());
        let nacc = member_region(&-f, m.accepted_region());
        let nrej = member_region(&-f, m.rejected_region());
        if rej && !nacc {
            af = false;
        }
        if acc && !(nacc || nrej) {
            fi = false;
        }
    }
    FrameworkFlags {
        af_statements,
        af,
        fi: af && fi,
    }
}

/// Closability verdict for an accept-favour assessment (Condition AF is
/// required statement-wise): closable iff status quo stays out of the sum
/// of the favourable statements with the accepted hull, i.e. iff no
/// favourable statement has its negation in the accepted hull.
pub fn af_closability(a: &Assessment) -> Result<bool, FrameworkError> {
    for r in a.rejected() {
        let neg = -r;
        if !a.accepted().iter().any(|g| g.same_ray(&neg)) {
            return Err(FrameworkError::ConditionViolated { witness: r.clone() });
        }
    }
    for r in a.rejected() {
        // the favourable statements are exactly the negated rejected ones
        if member_posi(r, a.accepted())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Certificate LP for "0 in posi(favourable) + lhull(indifferent)": on
/// failure of closability, returns the favourable coefficients (nonneg,
/// summing to at least one) and the free indifference coefficients.
fn zero_in_hull_sum(
    favourable: &[Gamble],
    indifferent: &[Gamble],
    space: &Space,
) -> Option<Vec<Rat>> {
    if favourable.is_empty() {
        return None;
    }
    let nf = favourable.len();
    let vars = nf + indifferent.len();
    let mut p = LinearProgram::new(vars);
    for v in nf..vars {
        p.nonneg[v] = false;
    }
    for w in 0..space.dim() {
        let mut coeffs: Vec<Rat> = favourable.iter().map(|g| g.values()[w].clone()).collect();
        coeffs.extend(indifferent.iter().map(|g| g.values()[w].clone()));
        p.push(coeffs, Relation::Eq, crate::rat::rzero());
    }
    let mut strict = vec![rone(); nf];
    strict.extend(vec![crate::rat::rzero(); vars - nf]);
    p.push(strict, Relation::Ge, rone());
    feasible(&p).expect("well-formed hull-sum program").1
}

/// Natural extension of a favour-indifference assessment: indifference
/// becomes the linear hull of the indifference statements, favour becomes
/// the favourable hull shifted along it, rejection is the negated favour.
pub fn fi_natural_extension(a: &FiAssessment) -> Result<Model, FrameworkError> {
    let space = &a.space;
    if let Some(cert) = zero_in_hull_sum(&a.favourable, &a.indifferent, space) {
        return Err(FrameworkError::NotClosable {
            certificate: Some(cert),
        });
    }
    // 0 in lhull(indifferent) alone is fine; only the favour sum matters
    let ind_piece = RegionPiece::Span(a.indifferent.clone());
    let fav_piece = RegionPiece::Sum(vec![
        RegionPiece::PuncturedCone(a.favourable.clone()),
        ind_piece.clone(),
    ]);
    let accepted = Region::from_pieces(vec![ind_piece, fav_piece.clone()]);
    let rejected = Region::from_pieces(vec![fav_piece.negate()]);
    let enc = a.to_assessment();
    Ok(Model::constructed(
        space,
        enc.accepted().to_vec(),
        enc.rejected().to_vec(),
        None,
        accepted,
        rejected,
    ))
}

/// Natural extension of favourability statements over a favour-indifference
/// background: respects iff 0 stays out of the background indifference
/// space plus the joint favourable hull.
pub fn favourability_extension(
    space: &Space,
    favourable: &[Gamble],
    s: &FiBackground,
) -> Result<Model, FrameworkError> {
    for g in favourable {
        if g.space() != space {
            return Err(FrameworkError::Space(SpaceError::SpaceMismatch));
        }
    }
    let mut hull_gens = s.favour_hull_gens(space);
    hull_gens.extend(favourable.iter().cloned());
    if zero_in_hull_sum(&hull_gens, &s.indifferent, space).is_some() {
        return Err(FrameworkError::NoRespect);
    }
    let ind_piece = RegionPiece::Span(s.indifferent.clone());
    let fav_piece = RegionPiece::Sum(vec![
        ind_piece.clone(),
        RegionPiece::PuncturedCone(hull_gens),
    ]);
    let accepted = Region::from_pieces(vec![ind_piece, fav_piece.clone()]);
    let rejected = Region::from_pieces(vec![fav_piece.negate()]);
    let mut accepted_gens = s.indifferent.clone();
    accepted_gens.extend(favourable.iter().cloned());
    let rejected_gens = favourable.iter().map(|g| -g).collect();
    Ok(Model::constructed(
        space,
        accepted_gens,
        rejected_gens,
        None,
        accepted,
        rejected,
    ))
}

/// Natural extension of acceptability statements over an accept-reject
/// background with indifference to status quo; the rejected region is
/// entirely induced: background rejections minus the accepted hull.
pub fn acceptability_extension(
    space: &Space,
    acceptable: &[Gamble],
    s: BackgroundModel,
) -> Result<Model, FrameworkError> {
    let a = Assessment::new(space, acceptable.to_vec(), Vec::new())?;
    natural_extension(&a, s).map_err(|e| match e {
        EngineError::NoRespect { .. } => FrameworkError::NoRespect,
        other => FrameworkError::Engine(other),
    })
}

/// Verifies the per-framework characterisation axiom suite on probe points.
pub fn check_characterisation(
    m: &Model,
    s: &FrameworkBackground,
    tag: FrameworkTag,
) -> FrameworkReport {
    let space = m.space();
    let s_acc = s.accepted_region(space);
    let s_rej = s.rejected_region(space);
    let points = probe_points(
        &[m.accepted_region(), m.rejected_region(), &s_acc, &s_rej],
        space,
    );
    let acc = |f: &Gamble| member_region(f, m.accepted_region());
    let rej = |f: &Gamble| member_region(f, m.rejected_region());
    let fav = |f: &Gamble| acc(f) && rej(&-f);
    let ind = |f: &Gamble| acc(f) && acc(&-f);
    let zero = Gamble::zero(space);

    let mut checks = Vec::new();

    // background inclusion
    let mut bg = FrameworkCheck::pass("background inclusion");
    match (tag, s) {
        (FrameworkTag::F, FrameworkBackground::FavourIndifference(fi)) => {
            let sfav = fi.favourable_region(space);
            for f in &points {
                if member_region(f, &sfav) && !fav(f) {
                    bg.set_fail(f);
                }
            }
        }
        _ => {
            for f in &points {
                if member_region(f, &s_acc) && !acc(f) {
                    bg.set_fail(f);
                }
                if member_region(f, &s_rej) && !rej(f) {
                    bg.set_fail(f);
                }
            }
        }
    }
    checks.push(bg);

    // status quo condition
    let mut zr = match tag {
        FrameworkTag::A => FrameworkCheck::pass("status quo not rejected"),
        _ => FrameworkCheck::pass("status quo not favoured"),
    };
    let zero_bad = match tag {
        FrameworkTag::A => rej(&zero),
        _ => fav(&zero),
    };
    if zero_bad {
        zr.set_fail(&zero);
    }
    checks.push(zr);

    // cone conditions (scaling is structural for symbolic regions, so the
    // sampled content is closure under addition)
    let members: Vec<&Gamble> = points.iter().filter(|f| acc(f)).collect();
    let favs: Vec<&Gamble> = points.iter().filter(|f| fav(f)).collect();
    let inds: Vec<&Gamble> = points.iter().filter(|f| ind(f)).collect();
    match tag {
        FrameworkTag::AF => {
            let mut cn = FrameworkCheck::pass("accepted and favourable are cones");
            for f in &members {
                for g in &members {
                    let sum = *f + *g;
                    if !acc(&sum) {
                        cn.set_fail(&sum);
                    }
                }
                if !acc(&f.scale(&rat(1, 2))) {
                    cn.set_fail(&f.scale(&rat(1, 2)));
                }
            }
            for f in &favs {
                for g in &favs {
                    let sum = *f + *g;
                    if !fav(&sum) {
                        cn.set_fail(&sum);
                    }
                }
            }
            checks.push(cn);
            let mut ss = FrameworkCheck::pass("favours sweetened deals");
            for f in &members {
                for g in &favs {
                    let sum = *f + *g;
                    if !fav(&sum) {
                        ss.set_fail(&sum);
                    }
                }
            }
            checks.push(ss);
        }
        FrameworkTag::FI => {
            let mut cn = FrameworkCheck::pass("favourable cone, indifferent linear");
            for f in &favs {
                for g in &favs {
                    let sum = *f + *g;
                    if !fav(&sum) {
                        cn.set_fail(&sum);
                    }
                }
            }
            if !ind(&zero) {
                cn.set_fail(&zero);
            }
            for f in &inds {
                if !ind(&-*f) {
                    cn.set_fail(&-*f);
                }
                for g in &inds {
                    let sum = *f + *g;
                    if !ind(&sum) {
                        cn.set_fail(&sum);
                    }
                }
            }
            checks.push(cn);
            let mut ss = FrameworkCheck::pass("favours sweetened deals");
            for f in &favs {
                for g in &inds {
                    let sum = *f + *g;
                    if !fav(&sum) {
                        ss.set_fail(&sum);
                    }
                }
            }
            checks.push(ss);
        }
        FrameworkTag::F => {
            let mut cn = FrameworkCheck::pass("favourable gambles form a cone");
            for f in &favs {
                for g in &favs {
                    let sum = *f + *g;
                    if !fav(&sum) {
                        cn.set_fail(&sum);
                    }
                }
            }
            checks.push(cn);
            let mut ss = FrameworkCheck::pass("favours sweetened deals");
            if let FrameworkBackground::FavourIndifference(fi) = s {
                let sind = fi.indifferent_region(space);
                for f in &favs {
                    for g in points.iter().filter(|g| member_region(g, &sind)) {
                        let sum = *f + g;
                        if !fav(&sum) {
                            ss.set_fail(&sum);
                        }
                    }
                }
            }
            checks.push(ss);
        }
        FrameworkTag::A => {
            let mut cn = FrameworkCheck::pass("acceptable gambles form a cone");
            for f in &members {
                for g in &members {
                    let sum = *f + *g;
                    if !acc(&sum) {
                        cn.set_fail(&sum);
                    }
                }
            }
            checks.push(cn);
        }
    }
    FrameworkReport { tag, checks }
}

/// Desirability axiom system variants from the literature.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DesirabilityVariant {
    /// strict desirability: no zero, sure gains, scaling, combination
    StrictD1D4,
    /// really desirable gambles: scaling, combination, avoiding partial
    /// loss, accepting sure gains
    ReallyDesirable,
}

/// Report of the desirability correspondence: the direct axiom checks on
/// the generated cone, the matching framework characterisation, and
/// whether the two verdicts agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesirabilityReport {
    pub axiom_checks: Vec<FrameworkCheck>,
    pub framework_report: FrameworkReport,
    pub agree: bool,
}

/// Checks the desirability axioms on the positive hull of `desirable` and
/// confirms the verdict matches the corresponding framework
/// characterisation (favourability over the positive orthant for the
/// strict variant, acceptability over the nonnegative background for the
/// really-desirable variant).
pub fn desirability_correspondence(
    space: &Space,
    desirable: &[Gamble],
    variant: DesirabilityVariant,
) -> Result<DesirabilityReport, FrameworkError> {
    for g in desirable {
        if g.space() != space {
            return Err(FrameworkError::Space(SpaceError::SpaceMismatch));
        }
    }
    let cone = RegionPiece::PuncturedCone(desirable.to_vec());
    let in_cone = |f: &Gamble| member_posi(f, desirable).expect("same space");
    let zero = Gamble::zero(space);
    let mut axiom_checks = Vec::new();
    match variant {
        DesirabilityVariant::StrictD1D4 => {
            let mut d1 = FrameworkCheck::pass("no zero gamble");
            if in_cone(&zero) {
                d1.set_fail(&zero);
            }
            axiom_checks.push(d1);
            let mut d2 = FrameworkCheck::pass("contains positive gambles");
            for f in positive_probes(space) {
                if !in_cone(&f) {
                    d2.set_fail(&f);
                }
            }
            axiom_checks.push(d2);
            // D3 scaling and D4 combination hold structurally for a
            // generated hull; spot-check on generators
            let mut d34 = FrameworkCheck::pass("scaling and combination");
            for f in desirable {
                for g in desirable {
                    let sum = f + g;
                    if !in_cone(&sum) {
                        d34.set_fail(&sum);
                    }
                }
                if !in_cone(&f.scale(&rat(3, 2))) {
                    d34.set_fail(f);
                }
            }
            axiom_checks.push(d34);
            let m = Model::constructed(
                space,
                desirable.to_vec(),
                desirable.iter().map(|g| -g).collect(),
                None,
                Region::from_pieces(vec![RegionPiece::Span(Vec::new()), cone.clone()]),
                Region::from_pieces(vec![cone.negate()]),
            );
            let s = FrameworkBackground::FavourIndifference(FiBackground::positive_orthant());
            let framework_report = check_characterisation(&m, &s, FrameworkTag::F);
            let agree = axiom_checks.iter().all(|c| c.pass) == framework_report.all_pass();
            Ok(DesirabilityReport {
                axiom_checks,
                framework_report,
                agree,
            })
        }
        DesirabilityVariant::ReallyDesirable => {
            let mut d23 = FrameworkCheck::pass("scaling and combination");
            for f in desirable {
                for g in desirable {
                    let sum = f + g;
                    if !in_cone(&sum) {
                        d23.set_fail(&sum);
                    }
                }
            }
            axiom_checks.push(d23);
            // avoiding partial loss: the hull must miss the nonpositive
            // nonzero orthant (exact piece intersection)
            let mut apl = FrameworkCheck::pass("avoiding partial loss");
            if let Some(w) = crate::region::pieces_intersect_witness(
                &cone,
                &RegionPiece::OrthantNonposPunctured,
                space,
            ) {
                apl.set_fail(&w);
            }
            axiom_checks.push(apl);
            // accepting sure gains: the nonnegative orthant embeds, which
            // for a hull reduces to zero plus the atom indicators
            let mut apg = FrameworkCheck::pass("accepting sure gains");
            if !in_cone(&zero) {
                apg.set_fail(&zero);
            }
            for i in 0..space.dim() {
                let e = Gamble::indicator(space, i);
                if !in_cone(&e) {
                    apg.set_fail(&e);
                }
            }
            axiom_checks.push(apg);
            let accepted = Region::from_pieces(vec![cone.clone()]);
            let rejected = Region::from_pieces(vec![
                RegionPiece::OrthantNonposPunctured,
                RegionPiece::Sum(vec![RegionPiece::OrthantNonposPunctured, cone.negate()]),
            ]);
            let m = Model::constructed(
                space,
                desirable.to_vec(),
                Vec::new(),
                Some(BackgroundModel::Nonneg),
                accepted,
                rejected,
            );
            let s = FrameworkBackground::AcceptReject(BackgroundModel::Nonneg);
            let framework_report = check_characterisation(&m, &s, FrameworkTag::A);
            let agree = axiom_checks.iter().all(|c| c.pass) == framework_report.all_pass();
            Ok(DesirabilityReport {
                axiom_checks,
                framework_report,
                agree,
            })
        }
    }
}

/// A few strictly-above-zero probe gambles: indicators, the unit constant,
/// and skewed positive combinations.
fn positive_probes(space: &Space) -> Vec<Gamble> {
    let mut out: Vec<Gamble> = (0..space.dim()).map(|i| Gamble::indicator(space, i)).collect();
    out.push(Gamble::constant(space, rone()));
    let e0 = Gamble::indicator(space, 0);
    out.push(&Gamble::constant(space, rat(1, 3)) + &e0);
    out
}

/// Heuristic openness diagnostic: every favourable gamble outside the
/// background-favourable region should stay favourable after subtracting
/// some positive constant. Probes a fixed ladder of constants; a fail means
/// the favourable region has a non-open boundary direction.
pub fn openness_diagnostic(m: &Model, s: &FiBackground) -> FrameworkCheck {
    let space = m.space();
    let sfav = s.favourable_region(space);
    let points = probe_points(&[m.accepted_region(), m.rejected_region(), &sfav], space);
    let mut check = FrameworkCheck::pass("favourable region open beyond background");
    for f in &points {
        if favour_member(m, f) && !member_region(f, &sfav) {
            let open = [rat(1, 1), rat(1, 2), rat(1, 4), rat(1, 8)].iter().any(|c| {
                let shifted = f - &Gamble::constant(space, c.clone());
                favour_member(m, &shifted)
            });
            if !open {
                check.set_fail(f);
            }
        }
    }
    check
}
