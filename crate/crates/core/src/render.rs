//! Deterministic SVG output and residue-class reflection checks.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::enumerate::{Enumeration, PackedCircle, Window};
use crate::exact::rational::{as_integer, frac, modulo, rat, to_decimal};
use crate::exact::{AugmentedMatrix, Circle, Integer, Isometry, Rational};
use crate::{Error, Result};

const DIGITS: usize = 20;
const PIXELS: i64 = 800;
/// Fill ramp for depth shading; depth 8 reuses the first step.
const RAMP: [&str; 8] = ["#ffffff", "#e6e6e6", "#cccccc", "#b3b3b3", "#999999", "#808080", "#666666", "#4d4d4d"];

/// Stroke width `max / (1 + decay·|b|)`, in window units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrokeRule {
    pub max: Rational,
    pub decay: Rational,
}

impl StrokeRule {
    pub fn width(&self, b: &Rational) -> Rational {
        &self.max / (rat(1) + &self.decay * b.abs())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fill {
    None,
    DepthShading,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Label {
    None,
    Curvature,
}

/// Keeps circles with integral curvature `≡ residue (mod modulus)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueFilter {
    modulus: Integer,
    residue: Integer,
}

impl ResidueFilter {
    pub fn new(modulus: Integer, residue: Integer) -> Result<Self> {
        if modulus < Integer::from(2) {
            return Err(Error::BadModulus);
        }
        let residue = modulo(&residue, &modulus);
        Ok(ResidueFilter { modulus, residue })
    }

    pub fn keeps(&self, c: &Circle) -> bool {
        as_integer(&c.b).is_some_and(|b| modulo(&b, &self.modulus) == self.residue)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RenderOptions {
    pub window: Window,
    pub stroke: StrokeRule,
    pub fill: Fill,
    pub filter: Option<ResidueFilter>,
    pub label: Label,
    pub highlight: Option<AugmentedMatrix>,
}

impl RenderOptions {
    /// Plain outlines; the widest stroke is 1/400 of the window width.
    pub fn new(window: Window) -> Self {
        let span = &window.xmax - &window.xmin;
        RenderOptions {
            stroke: StrokeRule { max: span / rat(400), decay: frac(1, 20) },
            window,
            fill: Fill::None,
            filter: None,
            label: Label::None,
            highlight: None,
        }
    }
}

fn num(q: &Rational) -> String {
    to_decimal(q, DIGITS)
}

/// Endpoints of the part of the line `n·p = h` inside the window, lowest
/// first.
fn clip_line(c: &Circle, w: &Window) -> Option<((Rational, Rational), (Rational, Rational))> {
    let h = &c.bbar / rat(2);
    let (nx, ny) = (&c.bx, &c.by);
    let mut pts: BTreeSet<(Rational, Rational)> = BTreeSet::new();
    if !ny.is_zero() {
        for x in [&w.xmin, &w.xmax] {
            let y = (&h - nx * x) / ny;
            if w.contains_point((x, &y)) {
                pts.insert((x.clone(), y));
            }
        }
    }
    if !nx.is_zero() {
        for y in [&w.ymin, &w.ymax] {
            let x = (&h - ny * y) / nx;
            if w.contains_point((&x, y)) {
                pts.insert((x, y.clone()));
            }
        }
    }
    let first = pts.iter().next()?.clone();
    let last = pts.iter().next_back()?.clone();
    Some((first, last))
}

/// SVG 1.1 document for the circles meeting the window, drawn in row order.
/// The `y` axis points up.
pub fn render_svg(circles: &[PackedCircle], opts: &RenderOptions) -> Result<String> {
    let w = &opts.window;
    if w.xmin >= w.xmax || w.ymin >= w.ymax {
        return Err(Error::EmptyWindow);
    }
    let (dx, dy) = (&w.xmax - &w.xmin, &w.ymax - &w.ymin);
    let height = &dy / &dx * rat(PIXELS);
    let highlight: BTreeSet<Circle> =
        opts.highlight.iter().flat_map(|h| h.rows().iter().map(Circle::geometric_key)).collect();
    let mut seen = BTreeSet::new();
    let mut shown: Vec<&PackedCircle> = circles
        .iter()
        .filter(|p| opts.filter.as_ref().is_none_or(|f| f.keeps(&p.circle)))
        .filter(|p| w.meets_circle(&p.circle))
        .filter(|p| seen.insert(p.circle.geometric_key()))
        .collect();
    shown.sort_by(|a, b| a.circle.cmp(&b.circle));

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{PIXELS}" height="{}" viewBox="{} {} {} {}">"#,
        num(&height),
        num(&w.xmin),
        num(&-&w.ymax),
        num(&dx),
        num(&dy)
    );
    let frame = format!(r#"x="{}" y="{}" width="{}" height="{}""#, num(&w.xmin), num(&-&w.ymax), num(&dx), num(&dy));
    let _ = writeln!(s, r#"<defs><clipPath id="window"><rect {frame}/></clipPath></defs>"#);
    let _ = writeln!(s, r#"<rect {frame} fill="white" stroke="black" stroke-width="{}"/>"#, num(&opts.stroke.max));
    let _ = writeln!(s, r##"<g clip-path="url(#window)" stroke="#333333">"##);
    for p in &shown {
        let c = &p.circle;
        let hl = highlight.contains(&c.geometric_key());
        let mut width = opts.stroke.width(&c.b);
        if hl {
            width *= rat(2);
        }
        let paint = match opts.fill {
            Fill::DepthShading if !c.b.is_zero() => RAMP[p.depth % RAMP.len()],
            _ => "none",
        };
        let color = if hl { r#" stroke="black""# } else { "" };
        if c.b.is_zero() {
            let Some(((x1, y1), (x2, y2))) = clip_line(c, w) else { continue };
            let _ = writeln!(
                s,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke-width="{}"{color}/>"#,
                num(&x1),
                num(&-y1),
                num(&x2),
                num(&-y2),
                num(&width)
            );
        } else {
            let (x, y) = c.center().unwrap();
            let r = c.radius().unwrap();
            let _ = writeln!(
                s,
                r#"<circle cx="{}" cy="{}" r="{}" fill="{paint}" stroke-width="{}"{color}/>"#,
                num(&x),
                num(&-y),
                num(&r),
                num(&width)
            );
        }
    }
    let _ = writeln!(s, "</g>");
    if opts.label == Label::Curvature {
        let _ = writeln!(s, r#"<g font-family="sans-serif" text-anchor="middle" dominant-baseline="central">"#);
        for p in shown.iter().filter(|p| !p.circle.b.is_zero()) {
            let c = &p.circle;
            let (x, y) = c.center().unwrap();
            if !w.contains_point((&x, &y)) {
                continue;
            }
            let size = c.radius().unwrap() * rat(2) / rat(3);
            let _ = writeln!(
                s,
                r#"<text x="{}" y="{}" font-size="{}">{}</text>"#,
                num(&x),
                num(&-y),
                num(&size),
                c.b.to_integer()
            );
        }
        let _ = writeln!(s, "</g>");
    }
    let _ = writeln!(s, "</svg>");
    Ok(s)
}

/// Mirror lines of the unit square used by the residue checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Reflection {
    /// `x = 1 − y`
    AntiDiagonal,
    /// `y = 1/2`
    Horizontal,
    /// `x = 1/2`
    Vertical,
}

impl Reflection {
    pub fn isometry(self) -> Isometry {
        let (g, t) = match self {
            Reflection::AntiDiagonal => (Isometry::linear(true, -1, -1), (1, 1)),
            Reflection::Horizontal => (Isometry::linear(false, 1, -1), (0, 1)),
            Reflection::Vertical => (Isometry::linear(false, -1, 1), (1, 0)),
        };
        Isometry::translation(rat(t.0), rat(t.1)).compose(&g)
    }

    fn name(self) -> &'static str {
        match self {
            Reflection::AntiDiagonal => "x = 1 - y",
            Reflection::Horizontal => "y = 1/2",
            Reflection::Vertical => "x = 1/2",
        }
    }
}

impl std::str::FromStr for Reflection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace(' ', "").as_str() {
            "x=1-y" | "anti-diagonal" => Ok(Reflection::AntiDiagonal),
            "y=1/2" | "horizontal" => Ok(Reflection::Horizontal),
            "x=1/2" | "vertical" => Ok(Reflection::Vertical),
            _ => Err(Error::Parse(format!("unknown reflection {s:?}; use x=1-y, y=1/2 or x=1/2"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueSymmetry {
    pub holds: bool,
    /// A filtered circle whose mirror image is not in the filtered set.
    pub counterexample: Option<Circle>,
}

/// Whether the circles meeting the enumeration window with curvature
/// `≡ residue (mod modulus)` are carried onto themselves by `reflection`.
pub fn residue_symmetry_check(
    set: &Enumeration,
    modulus: &Integer,
    residue: &Integer,
    reflection: Reflection,
) -> Result<ResidueSymmetry> {
    let filter = ResidueFilter::new(modulus.clone(), residue.clone())?;
    let g = reflection.isometry();
    let w = set.budget().window.as_ref().ok_or(Error::AsymmetricWindow(reflection.name()))?;
    if &w.transform(&g) != w {
        return Err(Error::AsymmetricWindow(reflection.name()));
    }
    let keys: BTreeSet<Circle> = set
        .iter()
        .filter(|p| filter.keeps(&p.circle) && w.meets_circle(&p.circle))
        .map(|p| p.circle.geometric_key())
        .collect();
    let counterexample = keys.iter().find(|c| !keys.contains(&c.transform(&g).geometric_key())).cloned();
    Ok(ResidueSymmetry { holds: counterexample.is_none(), counterexample })
}
