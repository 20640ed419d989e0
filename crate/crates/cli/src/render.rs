//! Static SVG drawings of polygonal clusters.

use std::fmt::Write;

use lenscluster_core::cluster2d::PolyCluster;

const SIZE: f64 = 600.0;

fn colour(label: (u8, u8)) -> &'static str {
    match label {
        (1, 2) => "#c0392b",
        (1, 3) => "#2471a3",
        _ => "#555555",
    }
}

/// Edges coloured by interface, junctions as dots, the truncation circle
/// dashed. The y axis points up.
pub fn cluster_svg(pc: &PolyCluster) -> String {
    let r = pc.r_trunc * 1.05;
    let scale = SIZE / (2.0 * r);
    let map = |x: f64, y: f64| ((x + r) * scale, (r - y) * scale);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let (cx, cy) = map(0.0, 0.0);
    let _ = writeln!(
        s,
        r##"<circle cx="{cx:.3}" cy="{cy:.3}" r="{:.3}" fill="none" stroke="#999" stroke-dasharray="4 4"/>"##,
        pc.r_trunc * scale
    );
    for e in &pc.edges {
        let a = pc.vertices[e.v[0]];
        let b = pc.vertices[e.v[1]];
        let (x1, y1) = map(a.x, a.y);
        let (x2, y2) = map(b.x, b.y);
        let _ = writeln!(
            s,
            r#"<line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="{}" stroke-width="1.5"/>"#,
            colour(e.label)
        );
    }
    for v in pc.junctions() {
        let (x, y) = map(pc.vertices[v].x, pc.vertices[v].y);
        let _ = writeln!(s, r#"<circle cx="{x:.3}" cy="{y:.3}" r="3" fill="black"/>"#);
    }
    s.push_str("</svg>\n");
    s
}
