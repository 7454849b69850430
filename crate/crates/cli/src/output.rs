//! Matrix, range and SVG serialization.

use std::fmt::Write as _;

use bergman_numrange::numrange::{BoundaryPoint, HullPolygon};
use bergman_numrange::{CMatrix, Complex64, Error};

/// One row per matrix row, `re,im` per entry, no header.
pub fn matrix_csv(m: &CMatrix) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        let cells: Vec<String> = m.row(i).iter().map(|z| format!("{:?},{:?}", z.re, z.im)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn parse_matrix_csv(text: &str) -> Result<CMatrix, Error> {
    let mut rows = Vec::new();
    for (line_no, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let fields: Result<Vec<f64>, _> = line.split(',').map(|f| f.trim().parse::<f64>()).collect();
        let fields = fields.map_err(|e| Error::Usage(format!("matrix line {}: {e}", line_no + 1)))?;
        if fields.len() % 2 != 0 {
            return Err(Error::Usage(format!(
                "matrix line {}: expected re,im pairs, got {} fields",
                line_no + 1,
                fields.len()
            )));
        }
        rows.push(fields.chunks(2).map(|p| Complex64::new(p[0], p[1])).collect());
    }
    if rows.is_empty() {
        return Err(Error::Usage("matrix file is empty".into()));
    }
    CMatrix::from_rows(rows)
}

/// `theta,re,im,support` rows with a header line.
pub fn range_csv(points: &[BoundaryPoint]) -> String {
    let mut out = String::from("theta,re,im,support\n");
    for b in points {
        let _ = writeln!(out, "{:?},{:?},{:?},{:?}", b.theta, b.point.re, b.point.im, b.support);
    }
    out
}

/// Static SVG with the hull polygon and coordinate axes.
pub fn hull_svg(hull: &HullPolygon) -> String {
    let size = 480.0;
    let v = hull.vertices();
    let extent = v
        .iter()
        .map(|z| z.re.abs().max(z.im.abs()))
        .fold(0.0_f64, f64::max)
        .max(1e-12)
        * 1.1;
    let map = |z: Complex64| (size / 2.0 * (1.0 + z.re / extent), size / 2.0 * (1.0 - z.im / extent));
    let mut pts: Vec<String> = v
        .iter()
        .map(|z| {
            let (x, y) = map(*z);
            format!("{x:.3},{y:.3}")
        })
        .collect();
    if let Some(first) = pts.first().cloned() {
        pts.push(first);
    }
    let mid = size / 2.0;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let _ = writeln!(
        out,
        r##"<line x1="0" y1="{mid}" x2="{size}" y2="{mid}" stroke="#999" stroke-width="1"/>"##
    );
    let _ = writeln!(
        out,
        r##"<line x1="{mid}" y1="0" x2="{mid}" y2="{size}" stroke="#999" stroke-width="1"/>"##
    );
    let _ = writeln!(
        out,
        r##"<polyline points="{}" fill="none" stroke="#1f4e9c" stroke-width="1.5"/>"##,
        pts.join(" ")
    );
    let _ = writeln!(
        out,
        r##"<text x="4" y="14" font-size="12" fill="#555">|axis| = {extent:.4}</text>"##
    );
    out.push_str("</svg>\n");
    out
}
