//! Browser bindings for the demo page in `www/`.
//!
//! Three operations, all string-in/string-out so the page needs no glue
//! types: a per-n verdict as JSON, an SVG rendering of a packing, and a
//! range enumeration of exceptional numbers. Inputs are `u32`; the demo is
//! meant for interactive ranges, not record hunting.
//!
//! Build with `wasm-pack build --target web --out-dir www/pkg`; everything
//! here also compiles and runs natively, which is how it is unit tested.

use wasm_bindgen::prelude::*;

use groemer::geometry::{export_svg, realize, RenderOptions};
use groemer::report::VerdictReport;
use groemer::search::{complete_seq, enumerate_exceptional, find_extremal, Criterion};

/// Verdict for `n` as a JSON report; set `oracle` to include the exhaustive
/// packing search (fast up to a few million).
#[wasm_bindgen]
pub fn check(n: u32, oracle: bool, max_solutions: u32) -> Result<String, String> {
    let n = u64::from(n);
    let report = if oracle {
        VerdictReport::compute_with_oracle(n, Some(max_solutions as usize))
    } else {
        VerdictReport::compute(n)
    }
    .map_err(|e| e.to_string())?;
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

/// SVG for the first extremal packing of `n` discs. Errors when `n` is
/// exceptional (that is the interesting case: nothing to draw).
#[wasm_bindgen]
pub fn render_extremal_svg(n: u32, scale: u32, highlight: bool) -> Result<String, String> {
    let report = find_extremal(u64::from(n)).map_err(|e| e.to_string())?;
    let Some(seq) = report.solutions.first() else {
        return Err(format!(
            "n={n} is exceptional: no extremal packing exists"
        ));
    };
    Ok(export_svg(
        &realize(seq),
        &RenderOptions {
            scale: u64::from(scale.max(1)),
            highlight_boundary: highlight,
        },
    ))
}

/// SVG for the explicit hexagon with free sides `p1..p4` (the opposite
/// sides follow from the balance relations).
#[wasm_bindgen]
pub fn render_seq_svg(
    p1: u32,
    p2: u32,
    p3: u32,
    p4: u32,
    scale: u32,
    highlight: bool,
) -> Result<String, String> {
    let seq = complete_seq(
        u64::from(p1),
        u64::from(p2),
        u64::from(p3),
        u64::from(p4),
    )
    .ok_or("sequence does not close to a hexagon (derived sides must stay positive)")?;
    Ok(export_svg(
        &realize(&seq),
        &RenderOptions {
            scale: u64::from(scale.max(1)),
            highlight_boundary: highlight,
        },
    ))
}

/// JSON array of all exceptional `n <= max` under the chosen criterion
/// (`"oracle"`, `"br"`, `"corrected"` or `"wegner"`).
#[wasm_bindgen]
pub fn enumerate(max: u32, criterion: &str) -> Result<String, String> {
    let criterion: Criterion = criterion.parse()?;
    let values = enumerate_exceptional(u64::from(max), criterion).map_err(|e| e.to_string())?;
    serde_json::to_string(&values).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_reports_json() {
        let json = check(121, true, 8).unwrap();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["p0"], 36);
        assert_eq!(v["boeroeczky_ruzsa"]["exceptional"], true);
        assert_eq!(v["oracle"]["exceptional"], true);
    }

    #[test]
    fn svg_renders_or_errors() {
        let svg = render_extremal_svg(7, 10, true).unwrap();
        assert_eq!(svg.matches("<circle").count(), 7);
        assert!(render_extremal_svg(121, 10, false).is_err());
        let svg = render_seq_svg(2, 2, 2, 2, 10, false).unwrap();
        assert_eq!(svg.matches("<circle").count(), 7);
        assert!(render_seq_svg(1, 1, 5, 5, 10, false).is_err());
    }

    #[test]
    fn enumerate_lists_json() {
        assert_eq!(enumerate(200, "br").unwrap(), "[121,163]");
        assert_eq!(enumerate(100, "oracle").unwrap(), "[]");
        assert!(enumerate(10, "nope").is_err());
    }
}
