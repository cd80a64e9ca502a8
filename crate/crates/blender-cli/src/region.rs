//! Region scan output: the CSV contract and its SVG rendering.

use anyhow::{Context, Result};
use blender_core::convexity::SectionRow;
use blender_core::numeric::psi_curve;
use blender_core::rat::rat_to_f64;
use blender_core::verdict::MembershipVerdict;
use std::fmt::Write as _;

/// The CSV contract: `A,B,in_P,in_Q,in_K` with verdict codes I/B/O.
pub fn rows_to_csv(rows: &[SectionRow]) -> String {
    let mut out = String::from("A,B,in_P,in_Q,in_K\n");
    for row in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            row.a,
            row.b,
            row.verdicts.in_p.code(),
            row.verdicts.in_q.code(),
            row.verdicts.in_k.code()
        );
    }
    out
}

/// A convenience rendering of the CSV truth: grid cells coloured by the
/// verdict triple, the convex-section boundary polyline from ψ(λ) sampled
/// at 512 parameters, and the psd-section boundary parametric curve.
pub fn rows_to_svg(rows: &[SectionRow], cell: f64) -> Result<String> {
    if rows.is_empty() {
        anyhow::bail!("empty grid");
    }
    let (mut a_min, mut a_max) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut b_min, mut b_max) = (f64::INFINITY, f64::NEG_INFINITY);
    for r in rows {
        let a = rat_to_f64(&r.a);
        let b = rat_to_f64(&r.b);
        a_min = a_min.min(a);
        a_max = a_max.max(a);
        b_min = b_min.min(b);
        b_max = b_max.max(b);
    }
    let size = 640.0;
    let margin = 40.0;
    let scale_x = (size - 2.0 * margin) / (a_max - a_min).max(1e-9);
    let scale_y = (size - 2.0 * margin) / (b_max - b_min).max(1e-9);
    let px = |a: f64| margin + (a - a_min) * scale_x;
    let py = |b: f64| size - margin - (b - b_min) * scale_y;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#,
        size
    );
    let _ = writeln!(svg, r#"<rect width="{0}" height="{0}" fill="white"/>"#, size);
    let colour = |v: &blender_core::convexity::SectionVerdicts| -> &'static str {
        match (v.in_q.is_member(), v.in_k.is_member(), v.in_p.is_member()) {
            (true, _, _) => "#2b6cb0",    // sums of sixth powers
            (false, true, _) => "#63b3ed", // convex but not a power sum
            (false, false, true) => "#c6e3f7", // psd only
            _ => "#f3f4f6",               // outside the psd cone
        }
    };
    let w = cell * scale_x;
    let h = cell * scale_y;
    for r in rows {
        let a = rat_to_f64(&r.a);
        let b = rat_to_f64(&r.b);
        let _ = writeln!(
            svg,
            r#"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="{}"/>"#,
            px(a) - w / 2.0,
            py(b) - h / 2.0,
            w,
            h,
            colour(&r.verdicts)
        );
    }
    // Boundary of the convex section: (ψ(λ), ψ(−λ)) for λ ∈ [−1/2, 1/2].
    let mut path = String::new();
    for k in 0..=512 {
        let l = -0.5 + (k as f64) / 512.0;
        let (a, b) = (psi_curve(l), psi_curve(-l));
        let _ = write!(path, "{}{:.2},{:.2} ", if k == 0 { "M" } else { "L" }, px(a), py(b));
    }
    let _ = writeln!(svg, r##"<path d="{}" fill="none" stroke="#1a202c" stroke-width="1.5"/>"##, path);
    // Boundary of the psd section: (A,B) = ((1/r⁴ − 2r²)/15, (r⁴ − 2/r²)/15).
    let mut path = String::new();
    let mut first = true;
    for k in 0..=512 {
        let r = 0.55 + 0.85 * (k as f64) / 512.0;
        let a = (r.powi(-4) - 2.0 * r * r) / 15.0;
        let b = (r.powi(4) - 2.0 / (r * r)) / 15.0;
        if a < a_min - 0.2 || a > a_max + 0.2 || b < b_min - 0.2 || b > b_max + 0.2 {
            continue;
        }
        let _ = write!(path, "{}{:.2},{:.2} ", if first { "M" } else { "L" }, px(a), py(b));
        first = false;
    }
    let _ = writeln!(svg, r##"<path d="{}" fill="none" stroke="#9b2c2c" stroke-width="1.5" stroke-dasharray="4 3"/>"##, path);
    let _ = writeln!(
        svg,
        r##"<text x="{:.0}" y="{:.0}" font-size="12" fill="#1a202c">A</text>"##,
        size - margin + 8.0,
        py(0.0)
    );
    let _ = writeln!(
        svg,
        r##"<text x="{:.0}" y="{:.0}" font-size="12" fill="#1a202c">B</text>"##,
        px(0.0),
        margin - 8.0
    );
    let _ = writeln!(svg, "</svg>");
    Ok(svg)
}

pub fn verdict_counts(rows: &[SectionRow]) -> (usize, usize, usize) {
    let count = |f: fn(&SectionRow) -> MembershipVerdict| {
        rows.iter().filter(|r| f(r).is_member()).count()
    };
    (
        count(|r| r.verdicts.in_p),
        count(|r| r.verdicts.in_q),
        count(|r| r.verdicts.in_k),
    )
}

pub fn write_file(path: &str, contents: &str) -> Result<()> {
    std::fs::write(path, contents).with_context(|| format!("writing {}", path))
}
