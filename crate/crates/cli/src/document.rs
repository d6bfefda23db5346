//! JSON document schema and resolution into engine types.
//!
//! All rationals travel as "p/q" strings; gambles are named once and
//! referenced by id everywhere else.

use reckon::engine::Assessment;
use reckon::frameworks::FiAssessment;
use reckon::previsions::LowerPrevision;
use reckon::symmetry::Transformation;
use reckon::{parse_rat, Gamble, Space};
use serde::Deserialize;
use std::collections::BTreeMap;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    space: SpaceDoc,
    #[serde(default)]
    gambles: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    assessment: Option<AssessmentDoc>,
    #[serde(default)]
    fi: Option<FiDoc>,
    #[serde(default)]
    background: Option<String>,
    #[serde(default)]
    prevision: Option<PrevisionDoc>,
    #[serde(default)]
    transformations: Vec<Vec<usize>>,
    #[serde(default)]
    sym_favourable: Vec<String>,
    #[serde(default)]
    queries: Option<QueryDoc>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SpaceDoc {
    atoms: Vec<String>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct AssessmentDoc {
    #[serde(default)]
    accepted: Vec<String>,
    #[serde(default)]
    rejected: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FiDoc {
    #[serde(default)]
    favourable: Vec<String>,
    #[serde(default)]
    indifferent: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PrevisionDoc {
    entries: Vec<EntryDoc>,
    #[serde(default)]
    extend: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryDoc {
    gamble: String,
    value: String,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct QueryDoc {
    #[serde(default)]
    gambles: Vec<String>,
    #[serde(default)]
    pairs: Vec<(String, String)>,
}

/// A fully resolved document: every id looked up, every rational parsed.
pub struct Resolved {
    pub space: Space,
    pub assessment: Assessment,
    pub fi: Option<FiAssessment>,
    pub background: Option<String>,
    pub prevision: Option<LowerPrevision>,
    pub prevision_queries: Vec<(String, Gamble)>,
    pub transformations: Vec<Transformation>,
    pub sym_favourable: Vec<(String, Gamble)>,
    pub query_gambles: Vec<(String, Gamble)>,
    pub query_pairs: Vec<((String, Gamble), (String, Gamble))>,
}

impl Document {
    pub fn resolve(self) -> Result<Resolved, String> {
        let space = Space::new(self.space.atoms).map_err(|e| e.to_string())?;
        let mut named: BTreeMap<String, Gamble> = BTreeMap::new();
        for (id, values) in &self.gambles {
            let values = values
                .iter()
                .map(|v| parse_rat(v))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| format!("gamble {id:?}: {e}"))?;
            let g = Gamble::new(&space, values)
                .map_err(|e| format!("gamble {id:?}: {e}"))?;
            named.insert(id.clone(), g);
        }
        let lookup = |id: &String| -> Result<(String, Gamble), String> {
            named
                .get(id)
                .map(|g| (id.clone(), g.clone()))
                .ok_or_else(|| format!("unknown gamble id {id:?}"))
        };
        let lookup_all = |ids: &[String]| -> Result<Vec<Gamble>, String> {
            ids.iter().map(|id| Ok(lookup(id)?.1)).collect()
        };

        let adoc = self.assessment.unwrap_or_default();
        let assessment = Assessment::new(
            &space,
            lookup_all(&adoc.accepted)?,
            lookup_all(&adoc.rejected)?,
        )
        .map_err(|e| e.to_string())?;

        let fi = match self.fi {
            None => None,
            Some(f) => Some(
                FiAssessment::new(&space, lookup_all(&f.favourable)?, lookup_all(&f.indifferent)?)
                    .map_err(|e| e.to_string())?,
            ),
        };

        let (prevision, prevision_queries) = match self.prevision {
            None => (None, Vec::new()),
            Some(p) => {
                let entries = p
                    .entries
                    .iter()
                    .map(|e| {
                        let g = lookup(&e.gamble)?.1;
                        let v = parse_rat(&e.value)
                            .map_err(|err| format!("prevision value for {:?}: {err}", e.gamble))?;
                        Ok((g, v))
                    })
                    .collect::<Result<Vec<_>, String>>()?;
                let lp = LowerPrevision::new(&space, entries).map_err(|e| e.to_string())?;
                let queries = p
                    .extend
                    .iter()
                    .map(&lookup)
                    .collect::<Result<Vec<_>, _>>()?;
                (Some(lp), queries)
            }
        };

        let transformations = self
            .transformations
            .iter()
            .map(|mapping| {
                if mapping.len() != space.dim() {
                    return Err("transformation length must match the atom count".to_string());
                }
                Transformation::new(mapping.clone()).map_err(|e| e.to_string())
            })
            .collect::<Result<Vec<_>, _>>()?;

        let sym_favourable = self
            .sym_favourable
            .iter()
            .map(&lookup)
            .collect::<Result<Vec<_>, _>>()?;

        let qdoc = self.queries.unwrap_or_default();
        let query_gambles = qdoc
            .gambles
            .iter()
            .map(&lookup)
            .collect::<Result<Vec<_>, _>>()?;
        let query_pairs = qdoc
            .pairs
            .iter()
            .map(|(l, r)| Ok((lookup(l)?, lookup(r)?)))
            .collect::<Result<Vec<_>, String>>()?;

        Ok(Resolved {
            space,
            assessment,
            fi,
            background: self.background,
            prevision,
            prevision_queries,
            transformations,
            sym_favourable,
            query_gambles,
            query_pairs,
        })
    }
}
