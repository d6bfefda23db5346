//! Deterministic SVG rendering of 2-atom models.
//!
//! The accepted and rejected regions of a 2-atom model are unions of
//! angular sectors; the renderer probes the shared boundary-ray
//! arrangement and paints filled sectors (light grey accepted, dark grey
//! rejected), styling each boundary ray by its status: dotted when the
//! model favours it, solid when included, dashed when it borders a filled
//! sector without belonging to any region.

use reckon::arrangement::{boundary_rays, profile, SectorProfile};
use reckon::engine::Model;
use reckon::region::member_region;
use reckon::{Gamble, Rat};

const SIZE: f64 = 600.0;
const CENTER: f64 = 300.0;
const RADIUS: f64 = 250.0;

const ACCEPTED_FILL: &str = "#d9d9d9";
const REJECTED_FILL: &str = "#8c8c8c";
const RAY_STROKE: &str = "#262626";
const AXIS_STROKE: &str = "#b3b3b3";

fn rat_f64(r: &Rat) -> f64 {
    let n: f64 = r.numer().to_string().parse().unwrap_or(0.0);
    let d: f64 = r.denom().to_string().parse().unwrap_or(1.0);
    n / d
}

/// Endpoint of a ray direction on the plot circle, y axis flipped.
fn endpoint(g: &Gamble) -> (f64, f64) {
    let x = rat_f64(&g.values()[0]);
    let y = rat_f64(&g.values()[1]);
    let len = (x * x + y * y).sqrt();
    (CENTER + RADIUS * x / len, CENTER - RADIUS * y / len)
}

fn fmt(v: f64) -> String {
    format!("{v:.2}")
}

fn sector_path(a: &Gamble, mid: &Gamble, b: &Gamble, fill: &str) -> String {
    let (ax, ay) = endpoint(a);
    let (mx, my) = endpoint(mid);
    let (bx, by) = endpoint(b);
    format!(
        "  <path d=\"M {cx},{cy} L {ax},{ay} L {mx},{my} L {bx},{by} Z\" fill=\"{fill}\" stroke=\"none\"/>",
        cx = fmt(CENTER),
        cy = fmt(CENTER),
        ax = fmt(ax),
        ay = fmt(ay),
        mx = fmt(mx),
        my = fmt(my),
        bx = fmt(bx),
        by = fmt(by),
    )
}

fn filled_sectors(p: &SectorProfile, fill: &str, out: &mut Vec<String>) {
    let n = p.rays.len();
    for i in 0..n {
        if p.in_gap[i] {
            let a = &p.rays[i];
            let b = &p.rays[(i + 1) % n];
            let mid = a + b;
            out.push(sector_path(a, &mid, b, fill));
        }
    }
}

/// Renders the model's regions as a fixed 600 by 600 SVG 1.1 document.
pub fn render_model(m: &Model) -> String {
    let space = m.space();
    assert_eq!(space.dim(), 2, "rendering requires a 2-atom space");
    let acc = m.accepted_region();
    let rej = m.rejected_region();
    let rays = boundary_rays(&[acc, rej], space);
    let pa = profile(acc, &rays, space);
    let pr = profile(rej, &rays, space);
    let n = rays.len();

    let mut lines = vec![
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>".to_string(),
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{s}\" height=\"{s}\" viewBox=\"0 0 {s} {s}\">",
            s = SIZE as u32
        ),
        format!("  <rect width=\"{s}\" height=\"{s}\" fill=\"#ffffff\"/>", s = SIZE as u32),
    ];
    filled_sectors(&pa, ACCEPTED_FILL, &mut lines);
    filled_sectors(&pr, REJECTED_FILL, &mut lines);
    lines.push(format!(
        "  <line x1=\"{a}\" y1=\"{c}\" x2=\"{b}\" y2=\"{c}\" stroke=\"{AXIS_STROKE}\" stroke-width=\"1\"/>",
        a = fmt(CENTER - RADIUS),
        b = fmt(CENTER + RADIUS),
        c = fmt(CENTER),
    ));
    lines.push(format!(
        "  <line x1=\"{c}\" y1=\"{a}\" x2=\"{c}\" y2=\"{b}\" stroke=\"{AXIS_STROKE}\" stroke-width=\"1\"/>",
        a = fmt(CENTER - RADIUS),
        b = fmt(CENTER + RADIUS),
        c = fmt(CENTER),
    ));
    for (i, ray) in rays.iter().enumerate() {
        let included = pa.on_ray[i] || pr.on_ray[i];
        let favoured = pa.on_ray[i] && member_region(&-ray, rej);
        let borders_fill = pa.in_gap[i]
            || pa.in_gap[(i + n - 1) % n]
            || pr.in_gap[i]
            || pr.in_gap[(i + n - 1) % n];
        let dash = if favoured {
            Some("2,3")
        } else if included {
            None
        } else if borders_fill {
            Some("7,5")
        } else {
            continue;
        };
        let (x, y) = endpoint(ray);
        let style = match dash {
            Some(d) => format!(" stroke-dasharray=\"{d}\""),
            None => String::new(),
        };
        lines.push(format!(
            "  <line x1=\"{c}\" y1=\"{c}\" x2=\"{x}\" y2=\"{y}\" stroke=\"{RAY_STROKE}\" stroke-width=\"2\"{style}/>",
            c = fmt(CENTER),
            x = fmt(x),
            y = fmt(y),
        ));
    }
    let origin_fill = if pa.at_origin { RAY_STROKE } else { "#ffffff" };
    lines.push(format!(
        "  <circle cx=\"{c}\" cy=\"{c}\" r=\"4\" fill=\"{origin_fill}\" stroke=\"{RAY_STROKE}\" stroke-width=\"1.5\"/>",
        c = fmt(CENTER),
    ));
    lines.push("</svg>".to_string());
    let mut out = lines.join("\n");
    out.push('\n');
    out
}
