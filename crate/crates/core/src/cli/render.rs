use std::fmt::Write as _;

use super::{resolve_point, CliError};
use crate::combinatorics::{enumerate_acyclic_orientations, Graph};
use crate::geometry::{RationalPoint, RegionProjector};

const SIZE: f64 = 480.0;
const CENTER: f64 = SIZE / 2.0;
const LINE_RADIUS: f64 = 220.0;
const LABEL_RADIUS: f64 = 165.0;
const POINT_RADIUS: f64 = 120.0;

/// Coordinates in the plane `x₁ + x₂ + x₃ = 0` with orthonormal basis
/// `(1, −1, 0)/√2`, `(1, 1, −2)/√6`.
fn section(x: [f64; 3]) -> (f64, f64) {
    ((x[0] - x[1]) / 2f64.sqrt(), (x[0] + x[1] - 2.0 * x[2]) / 6f64.sqrt())
}

fn to_svg((u, w): (f64, f64), scale: f64) -> (f64, f64) {
    (CENTER + scale * u, CENTER - scale * w)
}

fn coords3(p: &RationalPoint) -> [f64; 3] {
    let c = p.to_f64();
    [c[0], c[1], c[2]]
}

fn unit(e: usize) -> [f64; 3] {
    let mut x = [0.0; 3];
    x[e - 1] = 1.0;
    x
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// SVG of the section of the arrangement of a 3-vertex graph by the plane
/// orthogonal to `(1, 1, 1)`: one line per hyperplane, one label per region
/// carrying its projection dimension, the image of `v`, and one marker per
/// region at the projection of `v` onto it.
pub fn cmd_render(g: &Graph, point: Option<&RationalPoint>) -> Result<String, CliError> {
    if g.n() != 3 {
        return Err(CliError::UnsupportedDimension(g.n()));
    }
    let v = resolve_point(g, point)?;
    let projector = RegionProjector::new(g, v.clone())?;
    let regions = enumerate_acyclic_orientations(g)
        .into_iter()
        .map(|gamma| {
            let projection = projector.closed_form(&gamma)?;
            // average sector direction over the braid chambers inside the region
            let (mut du, mut dw) = (0.0, 0.0);
            for sigma in gamma.linear_extensions() {
                let mut x = [0.0; 3];
                for (k, &i) in sigma.word().iter().enumerate() {
                    x[i - 1] = (2 - k) as f64;
                }
                let (u, w) = section(x);
                let norm = u.hypot(w);
                du += u / norm;
                dw += w / norm;
            }
            Ok((gamma.to_string(), projection, (du, dw)))
        })
        .collect::<Result<Vec<_>, CliError>>()?;

    let v_image = section(coords3(&v));
    let extent = regions
        .iter()
        .map(|(_, p, _)| section(coords3(&p.point)))
        .chain([v_image])
        .map(|(u, w)| u.hypot(w))
        .fold(0.0, f64::max);
    let point_scale = if extent > 0.0 { POINT_RADIUS / extent } else { 1.0 };

    let mut out = String::new();
    let w = |out: &mut String, line: String| writeln!(out, "{line}").expect("writing to a String");
    w(&mut out, format!(r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#));
    w(&mut out, format!("<title>section of the arrangement of {}</title>", escape(&g.to_string())));
    w(&mut out, format!(r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#));
    for &(i, j) in g.edges() {
        let (nu, nw) = section([0, 1, 2].map(|k| unit(i)[k] - unit(j)[k]));
        let norm = nu.hypot(nw);
        let (du, dw) = (-nw / norm, nu / norm);
        let (x1, y1) = to_svg((du, dw), LINE_RADIUS);
        let (x2, y2) = to_svg((-du, -dw), LINE_RADIUS);
        w(
            &mut out,
            format!(
                r#"<line class="hyperplane" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="black" stroke-width="1.5"><title>x{i} = x{j}</title></line>"#
            ),
        );
    }
    for (label, projection, (du, dw)) in &regions {
        let norm = du.hypot(*dw);
        // a region covering every chamber has no preferred direction
        let (lu, lw) = if norm > 1e-9 { (du / norm, dw / norm) } else { (0.0, 1.0) };
        let (x, y) = to_svg((lu, lw), LABEL_RADIUS);
        w(
            &mut out,
            format!(
                r#"<text class="region-label" x="{x:.2}" y="{y:.2}" text-anchor="middle" font-size="11">{} pd={}</text>"#,
                escape(label),
                projection.pd
            ),
        );
        let (px, py) = to_svg(section(coords3(&projection.point)), point_scale);
        w(
            &mut out,
            format!(
                r#"<circle class="projection" cx="{px:.2}" cy="{py:.2}" r="4" fill="steelblue"><title>region {} pd={} point {}</title></circle>"#,
                escape(label),
                projection.pd,
                projection.point
            ),
        );
    }
    let (vx, vy) = to_svg(v_image, point_scale);
    w(
        &mut out,
        format!(r#"<circle class="point-v" cx="{vx:.2}" cy="{vy:.2}" r="5" fill="crimson"><title>v = {v}</title></circle>"#),
    );
    w(&mut out, "</svg>".to_string());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(svg: &str, class: &str) -> usize {
        svg.matches(&format!(r#"class="{class}""#)).count()
    }

    fn pd_labels(svg: &str) -> Vec<usize> {
        let mut pds: Vec<usize> = svg
            .lines()
            .filter(|l| l.contains(r#"class="region-label""#))
            .map(|l| {
                let tail = &l[l.find("pd=").unwrap() + 3..];
                tail[..tail.find('<').unwrap()].parse().unwrap()
            })
            .collect();
        pds.sort_unstable();
        pds
    }

    #[test]
    fn complete_graph() {
        let svg = cmd_render(&Graph::complete(3), None).unwrap();
        assert_eq!(count(&svg, "hyperplane"), 3);
        assert_eq!(count(&svg, "region-label"), 6);
        assert_eq!(count(&svg, "projection"), 6);
        assert_eq!(count(&svg, "point-v"), 1);
        assert_eq!(pd_labels(&svg), [1, 1, 2, 2, 2, 3]);
    }

    #[test]
    fn path_and_edgeless() {
        let svg = cmd_render(&Graph::path(3), None).unwrap();
        assert_eq!((count(&svg, "hyperplane"), count(&svg, "region-label")), (2, 4));
        let svg = cmd_render(&Graph::empty(3), None).unwrap();
        assert_eq!((count(&svg, "hyperplane"), count(&svg, "region-label")), (0, 1));
        assert_eq!(pd_labels(&svg), [3]);
    }

    #[test]
    fn other_dimensions_rejected() {
        assert!(matches!(cmd_render(&Graph::complete(4), None), Err(CliError::UnsupportedDimension(4))));
        assert!(matches!(cmd_render(&Graph::empty(2), None), Err(CliError::UnsupportedDimension(2))));
    }
}
