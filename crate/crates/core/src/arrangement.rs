//! Exact 2D sector decomposition of regions.
//!
//! On a two-atom space every region handled by this library is a finite
//! union of angular sectors whose boundary rays come from the region's
//! generators (and sums thereof for Minkowski pieces). Sorting those
//! candidate rays by angle and probing one interior direction per gap
//! yields a complete, exact membership profile of the plane, which is what
//! model intersection and figure rendering need.

use crate::rat::{is_neg, is_pos, is_zero, Rat};
use crate::region::{member_region, Region, RegionPiece};
use crate::space::{Gamble, Space};
use std::cmp::Ordering;

/// Counterclockwise angular comparison of two nonzero direction vectors.
pub fn cmp_angle(a: &Gamble, b: &Gamble) -> Ordering {
    fn octant(v: &[Rat]) -> u8 {
        let (x, y) = (&v[0], &v[1]);
        match (
            (is_pos(x), is_zero(x), is_neg(x)),
            (is_pos(y), is_zero(y), is_neg(y)),
        ) {
            ((true, _, _), (_, true, _)) => 0,
            ((true, _, _), (true, _, _)) => 1,
            ((_, true, _), (true, _, _)) => 2,
            ((_, _, true), (true, _, _)) => 3,
            ((_, _, true), (_, true, _)) => 4,
            ((_, _, true), (_, _, true)) => 5,
            ((_, true, _), (_, _, true)) => 6,
            ((true, _, _), (_, _, true)) => 7,
            _ => unreachable!("zero vector has no angle"),
        }
    }
    let (oa, ob) = (octant(a.values()), octant(b.values()));
    if oa != ob {
        return oa.cmp(&ob);
    }
    // same octant: counterclockwise iff cross product positive
    let cross = &a.values()[0] * &b.values()[1] - &a.values()[1] * &b.values()[0];
    if is_pos(&cross) {
        Ordering::Less
    } else if is_neg(&cross) {
        Ordering::Greater
    } else {
        Ordering::Equal
    }
}

/// Boundary-direction candidates contributed by a piece: every boundary ray
/// of the piece's sector representation lies along one of these.
fn piece_boundary_dirs(piece: &RegionPiece, space: &Space) -> Vec<Gamble> {
    use RegionPiece::*;
    match piece {
        Cone(gs) | PuncturedCone(gs) => gs.clone(),
        Ray(g) => vec![g.clone()],
        RayMinusCone(r, gs) => {
            let mut v = vec![r.clone()];
            v.extend(gs.iter().map(|g| -g));
            v
        }
        Span(gs) => {
            let mut v: Vec<Gamble> = gs.clone();
            v.extend(gs.iter().map(|g| -g));
            v
        }
        HalfSpaceOpen(n) | HalfSpaceClosed(n) => {
            let perp = Gamble::new(space, vec![-n.values()[1].clone(), n.values()[0].clone()])
                .expect("2d");
            vec![-&perp, perp]
        }
        OrthantNonneg | OrthantNonnegPunctured | OrthantUniformPos | OrthantNonpos
        | OrthantNonposPunctured | OrthantUniformNeg => {
            vec![
                Gamble::indicator(space, 0),
                Gamble::indicator(space, 1),
                -&Gamble::indicator(space, 0),
                -&Gamble::indicator(space, 1),
            ]
        }
        Sum(ps) => {
            // boundary rays of a Minkowski sum of sectors are sums of one
            // boundary ray per component
            let mut acc: Vec<Gamble> = vec![Gamble::zero(space)];
            for p in ps {
                let dirs = piece_boundary_dirs(p, space);
                let mut next = Vec::new();
                for a in &acc {
                    for d in &dirs {
                        next.push(a + d);
                    }
                    // a component may also contribute nothing at the boundary
                    next.push(a.clone());
                }
                acc = next;
            }
            acc
        }
    }
}

/// An exact angular membership profile of a region on a 2-atom space.
#[derive(Debug, Clone)]
pub struct SectorProfile {
    /// boundary rays sorted counterclockwise, ray-normalized, distinct
    pub rays: Vec<Gamble>,
    /// membership of each boundary ray
    pub on_ray: Vec<bool>,
    /// membership of the open sector between ray i and ray i+1 (cyclic)
    pub in_gap: Vec<bool>,
    /// membership of the origin
    pub at_origin: bool,
}

/// Collects, sorts and dedups boundary candidates for a family of regions,
/// always including the four axis directions so gaps stay below 90 degrees.
pub fn boundary_rays(regions: &[&Region], space: &Space) -> Vec<Gamble> {
    let mut dirs = vec![
        Gamble::indicator(space, 0),
        Gamble::indicator(space, 1),
        -&Gamble::indicator(space, 0),
        -&Gamble::indicator(space, 1),
    ];
    for r in regions {
        for p in &r.pieces {
            dirs.extend(piece_boundary_dirs(p, space));
        }
    }
    let mut dirs: Vec<Gamble> = dirs
        .into_iter()
        .filter(|d| !d.is_zero())
        .map(|d| d.ray_normalized())
        .collect();
    dirs.sort_by(cmp_angle);
    dirs.dedup_by(|a, b| a.same_ray(b));
    dirs
}

/// Boundary rays closed under negation, so that the cell of a gamble's
/// negation is the antipodal cell (index shifted by half the ray count).
pub fn symmetric_rays(regions: &[&Region], space: &Space) -> Vec<Gamble> {
    let mut rays = boundary_rays(regions, space);
    let negs: Vec<Gamble> = rays.iter().map(|r| (-r).ray_normalized()).collect();
    rays.extend(negs);
    rays.sort_by(cmp_angle);
    rays.dedup_by(|a, b| a.same_ray(b));
    rays
}

/// One point per cell of the ray arrangement: every ray, every open-gap
/// midpoint, and the origin. For positively homogeneous regions these
/// points decide membership on the entire plane.
pub fn cell_points(rays: &[Gamble], space: &Space) -> Vec<Gamble> {
    let mut out = vec![Gamble::zero(space)];
    for (i, r) in rays.iter().enumerate() {
        out.push(r.clone());
        out.push(r + &rays[(i + 1) % rays.len()]);
    }
    out
}

/// Probes `region` along the given sorted boundary rays.
pub fn profile(region: &Region, rays: &[Gamble], space: &Space) -> SectorProfile {
    let on_ray: Vec<bool> = rays.iter().map(|r| member_region(r, region)).collect();
    let in_gap: Vec<bool> = (0..rays.len())
        .map(|i| {
            let next = &rays[(i + 1) % rays.len()];
            // any positive combination lies strictly between two rays less
            // than a half turn apart
            let mid = &rays[i] + next;
            member_region(&mid, region)
        })
        .collect();
    SectorProfile {
        rays: rays.to_vec(),
        on_ray,
        in_gap,
        at_origin: member_region(&Gamble::zero(space), region),
    }
}

/// Rebuilds a region (union of ray and open-sector pieces) from a profile.
pub fn region_from_profile(p: &SectorProfile, _space: &Space) -> Region {
    let n = p.rays.len();
    let mut pieces = Vec::new();
    for i in 0..n {
        if p.on_ray[i] {
            pieces.push(RegionPiece::Ray(p.rays[i].clone()));
        }
        if p.in_gap[i] {
            // open sector between consecutive rays: both coefficients strict
            pieces.push(RegionPiece::Sum(vec![
                RegionPiece::Ray(p.rays[i].clone()),
                RegionPiece::Ray(p.rays[(i + 1) % n].clone()),
            ]));
        }
    }
    if p.at_origin {
        pieces.push(RegionPiece::Span(Vec::new()));
    }
    Region::from_pieces(pieces)
}

/// Pointwise intersection of two profiles over the same ray list.
pub fn intersect_profiles(a: &SectorProfile, b: &SectorProfile) -> SectorProfile {
    assert_eq!(a.rays.len(), b.rays.len());
    SectorProfile {
        rays: a.rays.clone(),
        on_ray: a
            .on_ray
            .iter()
            .zip(&b.on_ray)
            .map(|(x, y)| *x && *y)
            .collect(),
        in_gap: a
            .in_gap
            .iter()
            .zip(&b.in_gap)
            .map(|(x, y)| *x && *y)
            .collect(),
        at_origin: a.at_origin && b.at_origin,
    }
}
