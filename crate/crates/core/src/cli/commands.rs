use std::fmt::Write as _;
use std::str::FromStr;

use itertools::Itertools;

use super::CliError;
use crate::combinatorics::{enumerate_acyclic_orientations, Graph};
use crate::geometry::{graphical_generic_point, validate_point_graphical, RationalPoint, RegionProjector};
use crate::nui::{c_vector, is_nui, product_char_poly};
use crate::polynomial::{chromatic_deletion_contraction, mobius_char_poly, IntPolynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Chromatic,
    Mobius,
    Projection,
    Product,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Chromatic, Method::Mobius, Method::Projection, Method::Product];

    pub fn name(self) -> &'static str {
        match self {
            Method::Chromatic => "chromatic",
            Method::Mobius => "mobius",
            Method::Projection => "projection",
            Method::Product => "product",
        }
    }
}

impl FromStr for Method {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| CliError::Usage(format!("unknown method {s:?}; expected chromatic|mobius|projection|product")))
    }
}

/// Human form on the first line, `coeffs_ascending=[…]` on the second.
pub fn emit_polynomial(p: &IntPolynomial) -> String {
    let coeffs = if p.is_zero() { "0".to_string() } else { p.coeffs().iter().join(",") };
    format!("{p}\ncoeffs_ascending=[{coeffs}]\n")
}

/// The requested point, validated against the graphical inequality system,
/// or the default generic point.
pub fn resolve_point(g: &Graph, point: Option<&RationalPoint>) -> Result<RationalPoint, CliError> {
    let Some(v) = point else {
        return Ok(graphical_generic_point(g.n()));
    };
    if v.len() != g.n() {
        return Err(CliError::InvalidPoint(format!("point {v} has {} coordinates, graph has {} vertices", v.len(), g.n())));
    }
    if !validate_point_graphical(v) {
        return Err(CliError::InvalidPoint(format!("point {v} fails v_i > (6n^2+1) v_(i+1), v_n > 0")));
    }
    Ok(v.clone())
}

pub fn char_poly_by(g: &Graph, method: Method, point: Option<&RationalPoint>) -> Result<IntPolynomial, CliError> {
    Ok(match method {
        Method::Chromatic => chromatic_deletion_contraction(g),
        Method::Mobius => mobius_char_poly(g),
        Method::Projection => {
            let v = resolve_point(g, point)?;
            crate::geometry::char_poly_via_projection(g, &v)?
        }
        Method::Product => product_char_poly(&c_vector(g)?),
    })
}

pub fn cmd_charpoly(g: &Graph, method: Method, point: Option<&RationalPoint>) -> Result<String, CliError> {
    Ok(emit_polynomial(&char_poly_by(g, method, point)?))
}

/// One tab-separated row per region: arcs, source components, projection
/// dimension, projection point and, for natural unit interval graphs, the
/// lex-min linear extension.
pub fn cmd_regions(g: &Graph, point: Option<&RationalPoint>) -> Result<String, CliError> {
    let v = resolve_point(g, point)?;
    let projector = RegionProjector::new(g, v.clone())?;
    let nui = is_nui(g);
    let mut out = format!("# graph {g}\n# point {v}\n");
    let mut header = vec!["arcs", "source_components", "pd", "point"];
    if nui {
        header.push("lexmin");
    }
    writeln!(out, "{}", header.join("\t")).expect("writing to a String");
    for gamma in enumerate_acyclic_orientations(g) {
        let projection = projector.closed_form(&gamma)?;
        let mut row = vec![
            gamma.to_string(),
            gamma.source_components().to_string(),
            projection.pd.to_string(),
            projection.point.to_string(),
        ];
        if nui {
            row.push(gamma.lex_min_extension().to_string());
        }
        writeln!(out, "{}", row.join("\t")).expect("writing to a String");
    }
    Ok(out)
}
