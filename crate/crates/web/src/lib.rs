//! Browser bindings: quadruple check, reduction to ground, and SVG rendering
//! of a packing or super-packing inside a window.

use gasket_core::classify::{reduce_to_ground, root_quadruple, RootQuadruple};
use gasket_core::enumerate::{generate, locate_in_unit_square, EnumerationBudget, GroupKind, Window};
use gasket_core::render::{render_svg, Label, RenderOptions};
use gasket_core::{descartes_defect, AugmentedMatrix, DescartesQuadruple, Integer, Orientation};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Largest curvature bound the page will enumerate.
pub const MAX_CURVATURE: u32 = 2000;

fn parse_quadruple(text: &str) -> Result<[Integer; 4], String> {
    let v: Vec<Integer> = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<Integer>().map_err(|_| format!("not an integer: {s:?}")))
        .collect::<Result<_, _>>()?;
    v.try_into().map_err(|v: Vec<Integer>| format!("expected four curvatures, got {}", v.len()))
}

/// JSON with the Descartes defect, validity, divisor, orientation and root.
pub fn check_json(curvatures: &str) -> Result<String, String> {
    let b = parse_quadruple(curvatures)?;
    let defect = descartes_defect(&b);
    let v = match DescartesQuadruple::new(b) {
        Ok(d) => {
            let pos = if d.orientation() == Orientation::Positive { d.clone() } else { d.neg() };
            json!({
                "quadruple": d.to_string(),
                "valid": true,
                "defect": defect.to_string(),
                "g": d.divisor().to_string(),
                "orientation": d.orientation().to_string(),
                "root": root_quadruple(&pos).map_err(|e| e.to_string())?.to_string(),
            })
        }
        Err(_) => json!({ "valid": false, "defect": defect.to_string() }),
    };
    Ok(v.to_string())
}

/// JSON with the reduction word, the ground quadruple and the size after
/// each step.
pub fn reduce_json(curvatures: &str) -> Result<String, String> {
    let d = DescartesQuadruple::new(parse_quadruple(curvatures)?).map_err(|e| e.to_string())?;
    let r = reduce_to_ground(&d).map_err(|e| e.to_string())?;
    let sizes: Vec<String> = r.sizes.iter().map(|s| s.to_string()).collect();
    Ok(json!({ "word": r.word.to_string(), "ground": r.ground.to_string(), "sizes": sizes }).to_string())
}

/// SVG of the circles with `|b| ≤ max_curvature` meeting `window`
/// (`"x0,x1,y0,y1"`). An empty `root` starts from the strip configuration;
/// otherwise the root quadruple is placed in the unit square first.
pub fn render(
    root: &str,
    max_curvature: u32,
    window: &str,
    superpacking: bool,
    labels: bool,
) -> Result<String, String> {
    if max_curvature == 0 || max_curvature > MAX_CURVATURE {
        return Err(format!("curvature bound must be in 1..={MAX_CURVATURE}"));
    }
    let window: Window = window.parse().map_err(|e: gasket_core::Error| e.to_string())?;
    let base = if root.trim().is_empty() {
        AugmentedMatrix::d1()
    } else {
        let mut b = parse_quadruple(root)?;
        b.sort();
        let r = DescartesQuadruple::new(b).and_then(RootQuadruple::new).map_err(|e| e.to_string())?;
        locate_in_unit_square(&r).map_err(|e| e.to_string())?
    };
    let budget =
        EnumerationBudget::new(Integer::from(max_curvature)).map_err(|e| e.to_string())?.with_window(window.clone());
    let kind = if superpacking { GroupKind::SuperApollonian } else { GroupKind::Apollonian };
    let e = generate(&base, &budget, kind, 1).map_err(|e| e.to_string())?;
    let mut opts = RenderOptions::new(window);
    opts.label = if labels { Label::Curvature } else { Label::None };
    render_svg(e.circles(), &opts).map_err(|e| e.to_string())
}

#[wasm_bindgen(js_name = checkQuadruple)]
pub fn check_quadruple(curvatures: &str) -> Result<String, JsError> {
    check_json(curvatures).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = reduceQuadruple)]
pub fn reduce_quadruple(curvatures: &str) -> Result<String, JsError> {
    reduce_json(curvatures).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = renderSvg)]
pub fn render_svg_js(
    root: &str,
    max_curvature: u32,
    window: &str,
    superpacking: bool,
    labels: bool,
) -> Result<String, JsError> {
    render(root, max_curvature, window, superpacking, labels).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_reports_defect() {
        let v: serde_json::Value = serde_json::from_str(&check_json("-6, 10, 11, 14").unwrap()).unwrap();
        assert_eq!(v["defect"], "-65");
        let v: serde_json::Value = serde_json::from_str(&check_json("-1 2 2 3").unwrap()).unwrap();
        assert_eq!(v["root"], "(-1, 2, 2, 3)");
        assert!(check_json("1,2,3").is_err());
    }

    #[test]
    fn reduce_reaches_ground() {
        let v: serde_json::Value = serde_json::from_str(&reduce_json("-1,2,2,3").unwrap()).unwrap();
        assert!(v["ground"].as_str().unwrap().contains('0'));
    }

    #[test]
    fn render_matches_window() {
        let svg = render("", 30, "0,1,0,1", true, false).unwrap();
        assert!(svg.starts_with("<?xml") && svg.contains("<circle"));
        let svg = render("-6,11,14,15", 60, "0,1,0,1", false, true).unwrap();
        assert!(svg.contains("<text"));
        assert!(render("", 0, "0,1,0,1", true, false).is_err());
        assert!(render("", 10, "1,0,0,1", true, false).is_err());
        assert!(render("-6,10,11,14", 10, "0,1,0,1", true, false).is_err());
    }
}
