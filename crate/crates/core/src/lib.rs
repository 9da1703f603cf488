//! Brylinski beta functions of single and double layers on closed plane
//! curves and closed surfaces in 3-space, and their residues.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// jet tables are indexed by multi-index, not iterated
#![allow(clippy::needless_range_loop)]

pub mod beta;
pub mod closed_form;
pub mod curve;
pub mod error;
pub mod kernels;
pub mod numerics;
pub mod residue;
pub mod shape;
pub mod surface;

pub use beta::{
    beta_double_layer, beta_sample, beta_single_layer, beta_with_rule, residue_extrapolate, sigma_min, BetaRule,
    BetaSample, Layer,
};
pub use closed_form::{sphere_beta, sphere_beta_residue, unit_sphere_area, SphereSpec, Variant};
pub use curve::{curvature_jet, curve_measure, graph_jet, CurveJet, CurveMeasure, CurveNode, FourierMode, PlaneCurve};
pub use error::{Error, Result};
pub use kernels::{double_layer_kernel, single_layer_kernel, SurfelPair};
pub use numerics::{euler_beta_moment, integrate_1d, log_gamma, ComplexScalar, GradedRule, QuadratureRule, RuleKind};
pub use residue::{
    curve_residues_invariant, curve_residues_jet, quadrature_residue, residue_report, surface_residues_invariant,
    surface_residues_jet, ResidueReport, ResidueTable, CURVE_POLES, SURFACE_POLES,
};
pub use shape::Shape;
pub use surface::{
    area_nodes, graph_jet_from_chart, invariant_monomials, surface_frame, surface_graph_jet, ChartJet,
    InvariantMonomials, ParamSurface, SurfaceFrame, SurfaceJet, SurfaceKind, SurfaceNode,
};
