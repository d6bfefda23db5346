//! Gamble relations derived from a model: "accepted in exchange for",
//! unpreference, indifference, preference, and uncomparability, together
//! with a sampled verifier of their axiom suite.
//!
//! Every relation verdict reduces to membership of the two difference
//! gambles in the model regions (Cancellation), so relating two gambles is
//! just classifying `f - g` and `g - f`.

use crate::engine::{classify, BackgroundModel, Model};
use crate::rat::{rone, Rat};
use crate::region::member_region;
use crate::space::{Gamble, SpaceError};
use std::collections::HashMap;

/// Verdict of relating `f` to `g` under a model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RelationVerdict {
    /// f is accepted in exchange for g
    pub accept_exchange: bool,
    /// f is unpreferred to g
    pub unpreferred: bool,
    /// mutual accepted-in-exchange
    pub indifferent: bool,
    /// f accepted in exchange for g, and g unpreferred to f
    pub preferred: bool,
    /// neither direction is accepted in exchange
    pub uncomparable: bool,
}

/// Relates two gambles by classifying their differences against the model.
pub fn relate(m: &Model, f: &Gamble, g: &Gamble) -> Result<RelationVerdict, SpaceError> {
    if f.space() != m.space() || g.space() != m.space() {
        return Err(SpaceError::SpaceMismatch);
    }
    let fwd = classify(m, &(f - g));
    let bwd = classify(m, &(g - f));
    Ok(RelationVerdict {
        accept_exchange: fwd.accepted,
        unpreferred: fwd.rejected,
        indifferent: fwd.accepted && bwd.accepted,
        preferred: fwd.accepted && bwd.rejected,
        uncomparable: !fwd.accepted && !bwd.accepted,
    })
}

/// One relation-axiom check with a counterexample on failure; the witness
/// lists the gambles (and mixture coefficient, when applicable) involved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: &'static str,
    pub pass: bool,
    pub witness: Option<Vec<Gamble>>,
}

impl RelationCheck {
    fn pass(name: &'static str) -> RelationCheck {
        RelationCheck {
            name,
            pass: true,
            witness: None,
        }
    }
}

/// Report of the sampled axiom verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationAxiomReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationAxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&RelationCheck> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}

fn mix(mu: &Rat, f: &Gamble, h: &Gamble) -> Gamble {
    // mu * f + (1 - mu) * h
    &f.scale(mu) + &h.scale(&(rone() - mu))
}

/// Exhaustively checks the relation axioms (reflexivity, transitivity,
/// mixed transitivity, mixture independence, and the derived preference
/// properties plus Cancellation) over all pairs and triples from `sample`,
/// with mixtures drawn from `mixtures` (each must lie in (0, 1]).
///
/// The relations range over an infinite space, so this is a finite test
/// surface; the structural model-axiom checks are the real guarantee.
pub fn verify_relation_axioms(
    m: &Model,
    sample: &[Gamble],
    mixtures: &[Rat],
) -> Result<RelationAxiomReport, SpaceError> {
    for f in sample {
        if f.space() != m.space() {
            return Err(SpaceError::SpaceMismatch);
        }
    }
    // memoized region status per difference gamble; the sampled loops hit
    // the same differences repeatedly
    let mut memo: HashMap<Gamble, (bool, bool)> = HashMap::new();
    let mut status = |f: &Gamble| -> (bool, bool) {
        if let Some(&st) = memo.get(f) {
            return st;
        }
        let c = classify(m, f);
        let st = (c.accepted, c.rejected);
        memo.insert(f.clone(), st);
        st
    };
    let mut rel = |f: &Gamble, g: &Gamble| -> RelationVerdict {
        let (acc, rej) = status(&(f - g));
        let (nacc, nrej) = status(&(g - f));
        RelationVerdict {
            accept_exchange: acc,
            unpreferred: rej,
            indifferent: acc && nacc,
            preferred: acc && nrej,
            uncomparable: !acc && !nacc,
        }
    };
    let mut checks = Vec::new();

    // AD1 Accept Reflexivity and AD2 Reject Irreflexivity
    let mut ad1 = RelationCheck::pass("accept reflexivity");
    let mut ad2 = RelationCheck::pass("reject irreflexivity");
    let mut fav_irr = RelationCheck::pass("favour irreflexivity");
    let mut uncomp_irr = RelationCheck::pass("uncomparability irreflexivity");
    for f in sample {
        let v = rel(f, f);
        if ad1.pass && !v.accept_exchange {
            ad1 = RelationCheck {
                name: ad1.name,
                pass: false,
                witness: Some(vec![f.clone()]),
            };
        }
        if ad2.pass && v.unpreferred {
            ad2 = RelationCheck {
                name: ad2.name,
                pass: false,
                witness: Some(vec![f.clone()]),
            };
        }
        if fav_irr.pass && v.preferred {
            fav_irr = RelationCheck {
                name: fav_irr.name,
                pass: false,
                witness: Some(vec![f.clone()]),
            };
        }
        if uncomp_irr.pass && v.uncomparable {
            uncomp_irr = RelationCheck {
                name: uncomp_irr.name,
                pass: false,
                witness: Some(vec![f.clone()]),
            };
        }
    }
    checks.push(ad1);
    checks.push(ad2);

    // pairwise facts, cached for the triple loops
    let n = sample.len();
    let verdicts: Vec<Vec<RelationVerdict>> = (0..n)
        .map(|i| (0..n).map(|j| rel(&sample[i], &sample[j])).collect())
        .collect();

    // AD3 Accept Transitivity, AD4 Mixed Transitivity, plus the derived
    // favour transitivity / favour mixed transitivity
    let mut ad3 = RelationCheck::pass("accept transitivity");
    let mut ad4 = RelationCheck::pass("mixed transitivity");
    let mut fav_tr = RelationCheck::pass("favour transitivity");
    let mut fav_mx = RelationCheck::pass("favour mixed transitivity");
    'triples: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (f, g, h) = (&sample[i], &sample[j], &sample[k]);
                if verdicts[i][j].accept_exchange
                    && verdicts[j][k].accept_exchange
                    && !verdicts[i][k].accept_exchange
                {
                    ad3 = RelationCheck {
                        name: ad3.name,
                        pass: false,
                        witness: Some(vec![f.clone(), g.clone(), h.clone()]),
                    };
                }
                // f < g and h >= g implies f < h
                if verdicts[i][j].unpreferred
                    && verdicts[k][j].accept_exchange
                    && !verdicts[i][k].unpreferred
                {
                    ad4 = RelationCheck {
                        name: ad4.name,
                        pass: false,
                        witness: Some(vec![f.clone(), g.clone(), h.clone()]),
                    };
                }
                if verdicts[i][j].preferred
                    && verdicts[j][k].preferred
                    && !verdicts[i][k].preferred
                {
                    fav_tr = RelationCheck {
                        name: fav_tr.name,
                        pass: false,
                        witness: Some(vec![f.clone(), g.clone(), h.clone()]),
                    };
                }
                if verdicts[i][j].preferred
                    && verdicts[j][k].accept_exchange
                    && !verdicts[i][k].preferred
                {
                    fav_mx = RelationCheck {
                        name: fav_mx.name,
                        pass: false,
                        witness: Some(vec![f.clone(), g.clone(), h.clone()]),
                    };
                }
                if !(ad3.pass || ad4.pass || fav_tr.pass || fav_mx.pass) {
                    break 'triples;
                }
            }
        }
    }
    checks.push(ad3);
    checks.push(ad4);

    // AD5/AD6 Mixture Independence (both directions of the equivalence),
    // for acceptance, unpreference and preference
    let mut ad5 = RelationCheck::pass("accept mixture independence");
    let mut ad6 = RelationCheck::pass("reject mixture independence");
    let mut fav_mi = RelationCheck::pass("favour mixture independence");
    'mixloop: for i in 0..n {
        for j in 0..n {
            for mu in mixtures {
                for h in sample {
                    let vm = rel(
                        &mix(mu, &sample[i], h),
                        &mix(mu, &sample[j], h),
                    );
                    if verdicts[i][j].accept_exchange != vm.accept_exchange && ad5.pass {
                        ad5 = RelationCheck {
                            name: ad5.name,
                            pass: false,
                            witness: Some(vec![
                                sample[i].clone(),
                                sample[j].clone(),
                                h.clone(),
                            ]),
                        };
                    }
                    if verdicts[i][j].unpreferred != vm.unpreferred && ad6.pass {
                        ad6 = RelationCheck {
                            name: ad6.name,
                            pass: false,
                            witness: Some(vec![
                                sample[i].clone(),
                                sample[j].clone(),
                                h.clone(),
                            ]),
                        };
                    }
                    if verdicts[i][j].preferred != vm.preferred && fav_mi.pass {
                        fav_mi = RelationCheck {
                            name: fav_mi.name,
                            pass: false,
                            witness: Some(vec![
                                sample[i].clone(),
                                sample[j].clone(),
                                h.clone(),
                            ]),
                        };
                    }
                    if !(ad5.pass || ad6.pass || fav_mi.pass) {
                        break 'mixloop;
                    }
                }
            }
        }
    }
    checks.push(ad5);
    checks.push(ad6);

    // derived properties: weakening, irreflexivities, favour transitivity
    // variants, mixture independence for preference, cancellation,
    // uncomparability symmetry
    let mut weakening = RelationCheck::pass("weakening");
    let mut uncomp_sym = RelationCheck::pass("uncomparability symmetry");
    let mut cancellation = RelationCheck::pass("cancellation");
    let zero = Gamble::zero(m.space());
    for i in 0..n {
        for j in 0..n {
            let v = verdicts[i][j];
            if weakening.pass && v.preferred && !v.accept_exchange {
                weakening = RelationCheck {
                    name: weakening.name,
                    pass: false,
                    witness: Some(vec![sample[i].clone(), sample[j].clone()]),
                };
            }
            if uncomp_sym.pass && v.uncomparable != verdicts[j][i].uncomparable {
                uncomp_sym = RelationCheck {
                    name: uncomp_sym.name,
                    pass: false,
                    witness: Some(vec![sample[i].clone(), sample[j].clone()]),
                };
            }
            if cancellation.pass {
                let vd = rel(&(&sample[i] - &sample[j]), &zero);
                if v != vd {
                    cancellation = RelationCheck {
                        name: cancellation.name,
                        pass: false,
                        witness: Some(vec![sample[i].clone(), sample[j].clone()]),
                    };
                }
            }
        }
    }
    checks.push(weakening);
    checks.push(fav_irr);
    checks.push(fav_tr);
    checks.push(fav_mx);
    checks.push(fav_mi);
    checks.push(cancellation);
    checks.push(uncomp_irr);
    checks.push(uncomp_sym);
    Ok(RelationAxiomReport { checks })
}

/// Monotonicity report against a background with indifference to status
/// quo: background-acceptable differences must be accepted in exchange and
/// background-rejected differences must be unpreferred.
pub fn check_monotonicity(
    m: &Model,
    s: &BackgroundModel,
    sample: &[Gamble],
) -> Result<RelationAxiomReport, SpaceError> {
    for f in sample {
        if f.space() != m.space() {
            return Err(SpaceError::SpaceMismatch);
        }
    }
    let space = m.space();
    let acc = s.accepted_region(space);
    let rej = s.rejected_region(space);
    let mut up = RelationCheck::pass("background dominance accepted");
    let mut down = RelationCheck::pass("background dominance rejected");
    for f in sample {
        for g in sample {
            let d = f - g;
            let v = relate(m, f, g)?;
            if up.pass && member_region(&d, &acc) && !v.accept_exchange {
                up = RelationCheck {
                    name: up.name,
                    pass: false,
                    witness: Some(vec![f.clone(), g.clone()]),
                };
            }
            if down.pass && member_region(&d, &rej) && !v.unpreferred {
                down = RelationCheck {
                    name: down.name,
                    pass: false,
                    witness: Some(vec![f.clone(), g.clone()]),
                };
            }
        }
    }
    Ok(RelationAxiomReport {
        checks: vec![up, down],
    })
}

/// Default sample for axiom verification: the model's statement generators,
/// their negations and pairwise sums, plus any user gambles.
pub fn default_sample(m: &Model, extra: &[Gamble]) -> Vec<Gamble> {
    let mut out = vec![Gamble::zero(m.space())];
    let gens: Vec<Gamble> = m
        .accepted_gens()
        .iter()
        .chain(m.rejected_gens())
        .cloned()
        .collect();
    for g in &gens {
        out.push(g.clone());
        out.push(-g);
    }
    for i in 0..gens.len() {
        for j in (i + 1)..gens.len() {
            out.push(&gens[i] + &gens[j]);
        }
    }
    out.extend(extra.iter().cloned());
    let mut dedup: Vec<Gamble> = Vec::new();
    for g in out {
        if !dedup.contains(&g) {
            dedup.push(g);
        }
    }
    dedup
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{
        natural_extension, reckoning_extension, deductive_extension, Assessment,
    };
    use crate::rat::rat;
    use crate::region::{Region, RegionPiece};
    use crate::space::Space;

    fn two() -> Space {
        Space::of_size(2)
    }

    fn g(s: &Space, v: &[i64]) -> Gamble {
        Gamble::from_ints(s, v)
    }

    fn model_a(s: &Space) -> Model {
        let a = Assessment::new(
            s,
            vec![g(s, &[2, 1]), g(s, &[1, 2])],
            vec![g(s, &[2, -1]), g(s, &[-1, 2])],
        )
        .unwrap();
        reckoning_extension(&deductive_extension(&a)).unwrap()
    }

    /// Maximal model for a fair coin: accepted is the closed halfplane
    /// x + y >= 0, rejected its open complement.
    fn fair_coin(s: &Space) -> Model {
        Model::candidate(
            s,
            Region::from_pieces(vec![RegionPiece::HalfSpaceClosed(g(s, &[1, 1]))]),
            Region::from_pieces(vec![RegionPiece::HalfSpaceOpen(g(s, &[-1, -1]))]),
        )
    }

    #[test]
    fn relate_difference_examples() {
        let s = two();
        let m = model_a(&s);
        // both differences land in the reckoned rejected region:
        // (-3,2) = mu*(-1,2) - cone terms for mu in [7/5, 2], and
        // (3,-2) = (8/5)*(2,-1) - (1/5)*(1,2); mutual unpreference makes
        // the pair uncomparable
        let v = relate(&m, &g(&s, &[3, 0]), &g(&s, &[0, 2])).unwrap();
        assert!(!v.accept_exchange && v.unpreferred && v.uncomparable);
        let v = relate(&m, &g(&s, &[0, 2]), &g(&s, &[3, 0])).unwrap();
        assert!(v.unpreferred && !v.accept_exchange && v.uncomparable);
        // a genuinely one-sided case: (1,4) against (2,1)
        let v = relate(&m, &g(&s, &[1, 4]), &g(&s, &[0, 2])).unwrap();
        assert!(v.accept_exchange);
    }

    #[test]
    fn fair_coin_indifference() {
        let s = two();
        let m = fair_coin(&s);
        let v = relate(&m, &g(&s, &[1, 0]), &g(&s, &[0, 1])).unwrap();
        assert!(v.indifferent && v.accept_exchange && !v.preferred);
        let v = relate(&m, &g(&s, &[2, 0]), &g(&s, &[0, 1])).unwrap();
        assert!(v.accept_exchange && !v.indifferent && v.preferred);
    }

    #[test]
    fn reflexivity_depends_on_status_quo() {
        let s = two();
        // without status quo in the accepted region, f >= f fails
        let m = model_a(&s);
        let v = relate(&m, &g(&s, &[1, 0]), &g(&s, &[1, 0])).unwrap();
        assert!(!v.accept_exchange && !v.unpreferred);
        // with a background accepting 0, reflexivity holds
        let a = Assessment::new(&s, vec![g(&s, &[2, 1])], vec![]).unwrap();
        let m = natural_extension(&a, crate::engine::BackgroundModel::Nonneg).unwrap();
        let v = relate(&m, &g(&s, &[1, 0]), &g(&s, &[1, 0])).unwrap();
        assert!(v.accept_exchange && !v.unpreferred && !v.uncomparable);
    }

    #[test]
    fn axiom_suite_passes_on_pipeline_model() {
        let s = two();
        let a = Assessment::new(
            &s,
            vec![g(&s, &[2, 1]), g(&s, &[1, 2])],
            vec![g(&s, &[2, -1])],
        )
        .unwrap();
        let m = natural_extension(&a, crate::engine::BackgroundModel::Nonneg).unwrap();
        let sample = default_sample(&m, &[g(&s, &[1, -1]), g(&s, &[-4, 1])]);
        let report =
            verify_relation_axioms(&m, &sample, &[rat(1, 2), rat(1, 3), rat(1, 1)]).unwrap();
        assert!(report.all_pass(), "{:?}", report.failures());
    }

    #[test]
    fn axiom_suite_flags_violator() {
        let s = two();
        // rejected region not closed under scaling: a bare rejected point
        // region cannot satisfy reject mixture independence
        let m = Model::candidate(
            &s,
            Region::from_pieces(vec![RegionPiece::OrthantNonneg]),
            Region::from_pieces(vec![RegionPiece::Span(vec![])
                .negate()]),
        );
        // rejected = {0} violates reject irreflexivity outright
        let sample = vec![Gamble::zero(&s), g(&s, &[1, 0])];
        let report = verify_relation_axioms(&m, &sample, &[rat(1, 2)]).unwrap();
        assert!(!report.all_pass());
        assert!(report
            .failures()
            .iter()
            .any(|c| c.name == "reject irreflexivity"));
    }

    #[test]
    fn transitivity_violators_are_caught() {
        let s = two();
        // accepted region not closed under addition: two bare rays
        let m = Model::candidate(
            &s,
            Region::from_pieces(vec![
                RegionPiece::Span(vec![]),
                RegionPiece::Ray(g(&s, &[1, 0])),
                RegionPiece::Ray(g(&s, &[0, 1])),
            ]),
            Region::empty(),
        );
        let sample = vec![Gamble::zero(&s), g(&s, &[0, 1]), g(&s, &[1, 1]), g(&s, &[1, 0])];
        let report = verify_relation_axioms(&m, &sample, &[rat(1, 2)]).unwrap();
        assert!(report
            .failures()
            .iter()
            .any(|c| c.name == "accept transitivity"));
        // rejected region not closed under subtracting accepted gambles
        let m = Model::candidate(
            &s,
            Region::from_pieces(vec![
                RegionPiece::Span(vec![]),
                RegionPiece::Cone(vec![g(&s, &[1, 0])]),
            ]),
            Region::from_pieces(vec![RegionPiece::Ray(g(&s, &[-1, -1]))]),
        );
        let sample = vec![Gamble::zero(&s), g(&s, &[-1, -1]), g(&s, &[1, 0])];
        let report = verify_relation_axioms(&m, &sample, &[rat(1, 2)]).unwrap();
        assert!(report
            .failures()
            .iter()
            .any(|c| c.name == "mixed transitivity"));
    }

    #[test]
    fn empty_sample_vacuous_pass() {
        let s = two();
        let report = verify_relation_axioms(&model_a(&s), &[], &[rat(1, 2)]).unwrap();
        assert!(report.all_pass());
    }

    #[test]
    fn monotonicity_against_background() {
        let s = two();
        let a = Assessment::new(&s, vec![g(&s, &[2, 1])], vec![]).unwrap();
        let m = natural_extension(&a, crate::engine::BackgroundModel::Nonneg).unwrap();
        let sample = vec![
            g(&s, &[2, 2]),
            g(&s, &[1, 1]),
            g(&s, &[0, 0]),
            g(&s, &[-1, 2]),
        ];
        let report =
            check_monotonicity(&m, &crate::engine::BackgroundModel::Nonneg, &sample).unwrap();
        assert!(report.all_pass(), "{:?}", report.failures());
        // a model missing the background fails dominance
        let bare = model_a(&s);
        let report =
            check_monotonicity(&bare, &crate::engine::BackgroundModel::Nonneg, &sample).unwrap();
        assert!(!report.all_pass());
    }
}
