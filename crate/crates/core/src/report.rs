//! End-to-end verification of one `(V, B)` input, as a serializable report.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::construction::{construct_pair, ConstructedPair};
use crate::error::Result;
use crate::graph::BipartiteGraph;
use crate::iso::{
    decide_pair_isomorphism_with, is_pet, property_eta_certificate, EtaCertificate, IsoVerdict,
    Strategy,
};
use crate::matrix::ZMatrix;
use crate::spectra::{certify_pair, PairSpectra};

pub const SCHEMA: u32 = 1;

/// Pairs whose graphs have at most this many vertices get an exhaustive
/// re-check when `cross_check` is on.
pub const CROSS_CHECK_LIMIT: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub left: usize,
    pub right: usize,
    pub vertices: usize,
    pub edges: usize,
}

impl GraphSummary {
    pub fn of(g: &BipartiteGraph) -> Self {
        GraphSummary {
            left: g.left(),
            right: g.right(),
            vertices: g.order(),
            edges: g.edge_count(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StageTimings {
    pub construct_ms: f64,
    pub spectra_ms: f64,
    pub iso_ms: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cross_check_ms: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairReport {
    pub schema: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sample: Option<u64>,
    pub v: Vec<Vec<i64>>,
    pub b: Vec<Vec<i64>>,
    pub g1: GraphSummary,
    pub g2: GraphSummary,
    pub spectra: PairSpectra,
    pub cospectral_adjacency: bool,
    pub cospectral_normalized: bool,
    pub eta_certificate: EtaCertificate,
    pub iso_verdict: IsoVerdict,
    /// Whether an exhaustive search reached the same isomorphism verdict;
    /// absent when no independent check ran.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exhaustive_agrees: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<StageTimings>,
}

impl PairReport {
    pub fn is_cospectral(&self) -> bool {
        self.cospectral_adjacency && self.cospectral_normalized
    }

    pub fn is_nds_witness(&self) -> bool {
        self.is_cospectral() && !self.iso_verdict.isomorphic
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    pub strategy: Strategy,
    /// Re-decide small pairs exhaustively when the verdict came from a
    /// shortcut.
    pub cross_check: bool,
    pub timings: bool,
}

fn rows_i64(m: &ZMatrix) -> Vec<Vec<i64>> {
    m.to_rows_i64().expect("0/1 entries fit in i64")
}

fn ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

pub fn verify_pair(v: &ZMatrix, b: &ZMatrix, opts: &VerifyOptions) -> Result<PairReport> {
    let t = Instant::now();
    let pair = construct_pair(v, b)?;
    let construct_ms = ms(t);
    verify_constructed(&pair, opts, construct_ms)
}

pub(crate) fn verify_constructed(
    pair: &ConstructedPair,
    opts: &VerifyOptions,
    construct_ms: f64,
) -> Result<PairReport> {
    let t = Instant::now();
    let spectra = certify_pair(pair)?;
    let spectra_ms = ms(t);

    let t = Instant::now();
    let verdict = decide_pair_isomorphism_with(pair, opts.strategy);
    let iso_ms = ms(t);

    let small = pair.g1().order() <= CROSS_CHECK_LIMIT;
    let mut cross_check_ms = None;
    let exhaustive_agrees = if opts.cross_check && small && verdict.decided_by != crate::iso::DecidedBy::Exhaustive {
        let t = Instant::now();
        let ex = decide_pair_isomorphism_with(pair, Strategy::Exhaustive);
        cross_check_ms = Some(ms(t));
        Some(ex.isomorphic == verdict.isomorphic)
    } else {
        None
    };

    Ok(PairReport {
        schema: SCHEMA,
        sample: None,
        v: rows_i64(pair.v()),
        b: rows_i64(pair.b()),
        g1: GraphSummary::of(pair.g1()),
        g2: GraphSummary::of(pair.g2()),
        cospectral_adjacency: spectra.cospectral_adjacency(),
        cospectral_normalized: spectra.cospectral_normalized(),
        spectra,
        eta_certificate: property_eta_certificate(pair.v(), pair.b()),
        iso_verdict: verdict,
        exhaustive_agrees,
        timing_ms: opts.timings.then_some(StageTimings {
            construct_ms,
            spectra_ms,
            iso_ms,
            cross_check_ms,
        }),
    })
}

/// The worked example: `V` is the (1,2)-biregular 4×2 matrix, `B` a non-PET
/// 3×3 matrix.
pub fn example_v() -> ZMatrix {
    ZMatrix::from_rows(&[[1, 0], [1, 0], [0, 1], [0, 1]]).expect("constant")
}

pub fn example_b() -> ZMatrix {
    ZMatrix::from_rows(&[[1, 1, 0], [1, 0, 1], [1, 0, 0]]).expect("constant")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Reproduction {
    pub report: PairReport,
    /// Verdict of the exhaustive search alone.
    pub exhaustive: IsoVerdict,
    pub checks: Vec<Check>,
}

impl Reproduction {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Verifies the worked example and checks every expected property of it.
pub fn reproduce_example(timings: bool) -> Result<Reproduction> {
    let (v, b) = (example_v(), example_b());
    let opts = VerifyOptions {
        strategy: Strategy::Auto,
        cross_check: false,
        timings,
    };
    let report = verify_pair(&v, &b, &opts)?;
    let pair = construct_pair(&v, &b)?;
    let exhaustive = decide_pair_isomorphism_with(&pair, Strategy::Exhaustive);

    let expected_edges = v.count_nonzero() * b.count_nonzero();
    let mut checks = Vec::new();
    let mut check = |name: &str, passed: bool, detail: String| {
        checks.push(Check {
            name: name.to_string(),
            passed,
            detail,
        });
    };
    check(
        "vertex counts",
        report.g1.vertices == 18 && report.g2.vertices == 18,
        format!("{} and {}", report.g1.vertices, report.g2.vertices),
    );
    check(
        "edge counts",
        report.g1.edges == expected_edges && report.g2.edges == expected_edges,
        format!(
            "{} and {} (expected {} = ones(V)·ones(B))",
            report.g1.edges, report.g2.edges, expected_edges
        ),
    );
    check(
        "adjacency cospectral",
        report.cospectral_adjacency,
        report.spectra.g1.adjacency.to_string(),
    );
    check(
        "normalized laplacian cospectral",
        report.cospectral_normalized,
        report.spectra.g1.normalized.to_string(),
    );
    check(
        "exhaustive search: not isomorphic",
        !exhaustive.isomorphic,
        exhaustive.decided_by.to_string(),
    );
    check(
        "biregular criterion: not isomorphic",
        !report.iso_verdict.isomorphic
            && report.iso_verdict.decided_by == crate::iso::DecidedBy::BiregularCriterion,
        format!(
            "isomorphic={} decided_by={}",
            report.iso_verdict.isomorphic, report.iso_verdict.decided_by
        ),
    );
    check("b is not PET", !is_pet(&b), String::new());
    check(
        "eta certificate",
        report.eta_certificate == EtaCertificate::BiregularDistinct,
        report.eta_certificate.to_string(),
    );
    Ok(Reproduction {
        report,
        exhaustive,
        checks,
    })
}
