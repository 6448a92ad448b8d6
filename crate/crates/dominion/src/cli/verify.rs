//! The built-in verification suite: constructs the standard roster of
//! designs up to a requested plane order and checks every bound,
//! construction identity, and γ relation the library implements against
//! exact solver results.
//!
//! Proved statements report `pass`/`fail`; conjectured or open quantities
//! report `finding`; work gated away by size or budget reports `skipped`.

use super::report::{
    BoundsJson, CheckJson, CheckStatus, DesignReport, NeatnessJson, RunReport, SolverStats,
};
use crate::bounds;
use crate::design::{self, Design};
use crate::incidence::IncidenceGraph;
use crate::solver::{self, SolverConfig, SolverError};
use std::time::Instant;

/// Exhaustive sweeps switch to sampling above this many subsets per size.
pub const DEFAULT_EXHAUSTIVE_CAP: u64 = 100_000;
/// Random point sets per size once a sweep is sampled.
pub const DEFAULT_SAMPLES_PER_SIZE: usize = 1_000;
/// Full minimum-dominating-set enumeration is attempted up to this many
/// incidence-graph vertices.
pub const ENUMERATION_VERTEX_CAP: usize = 26;
/// Residual solves cover all b residuals up to this plane order.
pub const RESIDUAL_MAX_Q: u64 = 4;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Largest plane order constructed (non prime powers are skipped).
    pub max_q: u64,
    pub threads: usize,
    pub exhaustive_cap: u64,
    pub samples_per_size: usize,
    /// Seed for the sampled sweeps; fixed so runs are reproducible.
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_q: 3,
            threads: 1,
            exhaustive_cap: DEFAULT_EXHAUSTIVE_CAP,
            samples_per_size: DEFAULT_SAMPLES_PER_SIZE,
            seed: 0xD031,
        }
    }
}

enum Kind {
    Projective(u64),
    Affine(u64),
    /// Symmetric λ = 2 design; residual relations checked when flagged.
    Biplane { check_residuals: bool },
    Steiner,
}

fn roster(max_q: u64) -> Vec<(String, Design, Kind)> {
    let orders: Vec<u64> = (2..=max_q.min(8))
        .filter(|&q| design::prime_power(q).is_ok())
        .collect();
    let mut out = Vec::new();
    for &q in &orders {
        out.push((
            format!("pg-{q}"),
            design::projective_plane(q).expect("supported order"),
            Kind::Projective(q),
        ));
    }
    for &q in &orders {
        out.push((
            format!("ag-{q}"),
            design::affine_plane(q).expect("supported order"),
            Kind::Affine(q),
        ));
    }
    out.push((
        "biplane-7-4-2".into(),
        design::projective_plane(2)
            .unwrap()
            .complement()
            .expect("7 - 3 >= 2"),
        Kind::Biplane {
            check_residuals: false,
        },
    ));
    out.push((
        "biplane-11-5-2".into(),
        design::cyclic_design(11, &[vec![1, 3, 4, 5, 9]]).expect("Paley difference set"),
        Kind::Biplane {
            check_residuals: true,
        },
    ));
    out.push((
        "sts-13".into(),
        design::cyclic_design(13, &[vec![0, 1, 4], vec![0, 2, 7]]).expect("difference family"),
        Kind::Steiner,
    ));
    out.push((
        "sts-15".into(),
        design::cyclic_design(15, &[vec![0, 1, 4], vec![0, 2, 9], vec![0, 5, 10]])
            .expect("difference family with one short orbit"),
        Kind::Steiner,
    ));
    out
}

pub fn run_verify(opts: &VerifyOptions) -> RunReport {
    let mut total_nodes = 0u64;
    let designs = roster(opts.max_q)
        .into_iter()
        .map(|(id, d, kind)| process_design(id, &d, &kind, opts, &mut total_nodes))
        .collect();
    RunReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        designs,
        solver: SolverStats {
            threads: opts.threads,
            total_nodes,
        },
    }
}

fn verdict(ok: bool) -> CheckStatus {
    if ok {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    }
}

struct Recorder {
    checks: Vec<CheckJson>,
}

impl Recorder {
    fn push(&mut self, name: &str, anchor: &str, status: CheckStatus, since: Instant) {
        self.checks.push(CheckJson {
            name: name.to_string(),
            anchor: anchor.to_string(),
            status,
            seconds: since.elapsed().as_secs_f64(),
        });
    }
}

fn process_design(
    id: String,
    d: &Design,
    kind: &Kind,
    opts: &VerifyOptions,
    total_nodes: &mut u64,
) -> DesignReport {
    let cfg = SolverConfig::default().with_threads(opts.threads);
    let g = IncidenceGraph::new(d);
    let p = d.params();
    let n = g.vertex_count();
    let mut rec = Recorder { checks: Vec::new() };
    let mut neatness: Option<NeatnessJson> = None;

    // γ, computed inside the design's leading check so the solve time is
    // attributed to it. A blown budget marks γ-dependent checks skipped.
    let t = Instant::now();
    let gamma = match solver::minimum_domination(&g, &cfg) {
        Ok(r) => {
            *total_nodes += r.nodes_explored;
            Some(r.gamma as u64)
        }
        Err(SolverError::BudgetExceeded { .. }) => None,
        Err(e) => panic!("unexpected solver failure on {id}: {e}"),
    };
    let skip_unless = |cond: bool, status: CheckStatus| {
        if cond {
            status
        } else {
            CheckStatus::Skipped
        }
    };

    match *kind {
        Kind::Projective(q) => rec.push(
            "gamma-matches-plane-formula",
            "gamma of a projective plane of order q is 2q",
            match gamma {
                Some(got) => verdict(got == bounds::expected_gamma_plane(bounds::PlaneKind::Projective, q)),
                None => CheckStatus::Skipped,
            },
            t,
        ),
        Kind::Affine(q) => rec.push(
            "gamma-matches-plane-formula",
            "gamma of an affine plane of order q is 2q-1",
            match gamma {
                Some(got) => verdict(got == bounds::expected_gamma_plane(bounds::PlaneKind::Affine, q)),
                None => CheckStatus::Skipped,
            },
            t,
        ),
        Kind::Biplane { .. } => rec.push(
            "conjectured-gamma-equals-k",
            "open question: does gamma equal k for every symmetric design with lambda = 2 and k >= 4?",
            skip_unless(gamma.is_some(), CheckStatus::Finding),
            t,
        ),
        Kind::Steiner => rec.push(
            "gamma-recorded",
            "exact gamma of this Steiner triple system, recorded as data",
            skip_unless(gamma.is_some(), CheckStatus::Finding),
            t,
        ),
    }

    // Closed-form bound evaluation against the computed γ.
    let breport = bounds::evaluate_bounds(&id, d, gamma);
    let t = Instant::now();
    rec.push(
        "general-lower-bound",
        "gamma >= ceil((2v - 1 - (k-1)/lambda) / k)",
        match gamma {
            Some(_) => verdict(breport.lb_general_status != bounds::BoundStatus::Violated),
            None => CheckStatus::Skipped,
        },
        t,
    );

    if matches!(kind, Kind::Projective(_) | Kind::Affine(_)) {
        let t = Instant::now();
        rec.push(
            "general-lower-bound-tight-on-plane",
            "the general lower bound equals gamma on projective and affine planes",
            match gamma {
                Some(got) => verdict(breport.lb_general == got),
                None => CheckStatus::Skipped,
            },
            t,
        );
        let t = Instant::now();
        rec.push(
            "superneat-sufficient-condition",
            "gamma < (ceil(r/lambda)(k-1) + v) / k certifies that all minimum dominating sets are neat",
            match gamma {
                Some(got) => verdict(bounds::superneat_sufficient(&p, got)),
                None => CheckStatus::Skipped,
            },
            t,
        );
    }

    if breport.bracket.is_some() {
        let t = Instant::now();
        rec.push(
            "nonsymmetric-bracket",
            "2k-1 <= gamma <= (v-k^2)(v-1)/(k(k-1)) + 2k-1 for non-symmetric designs with lambda = 1",
            match gamma {
                Some(_) => verdict(breport.bracket_status != bounds::BoundStatus::Violated),
                None => CheckStatus::Skipped,
            },
            t,
        );
    }

    if let Kind::Biplane { .. } = kind {
        let t = Instant::now();
        let sweep = bounds::line_bound_sweep(d);
        let sound = sweep
            .iter()
            .all(|s| s.bound_violations == 0 && s.inside_without_equality == 0);
        rec.push(
            "line-count-bound-exhaustive",
            "|L(P)| <= l(2k-1-l)/2 + 1 for 2 <= |P| = l <= k, with equality whenever P lies inside a block",
            verdict(sound),
            t,
        );
        let t = Instant::now();
        let converse_everywhere = sweep.iter().all(|s| s.equality_without_inside == 0);
        rec.push(
            "line-count-equality-converse",
            "whether attaining the line-count bound forces P inside a block; fails at sizes where the bound saturates b, reported as data",
            if converse_everywhere {
                CheckStatus::Pass
            } else {
                CheckStatus::Finding
            },
            t,
        );
        if p.k >= 5 {
            let t = Instant::now();
            rec.push(
                "biplane-floor-sum-lower-bound",
                "gamma >= k - 1 + sum of floor((k-4)/2^(2i-1)) for symmetric biplanes with k >= 5",
                match gamma {
                    Some(_) => verdict(breport.biplane_lb_status != bounds::BoundStatus::Violated),
                    None => CheckStatus::Skipped,
                },
                t,
            );
            let t = Instant::now();
            let table_ok = [(5, 4), (6, 6), (7, 7), (8, 9), (9, 10), (11, 13), (13, 17)]
                .iter()
                .all(|&(k, want)| bounds::lb_biplane_sum(k) == Ok(want));
            rec.push(
                "floor-sum-value-table",
                "the floor-sum lower bound evaluates to 4, 6, 7, 9, 10, 13, 17 at k = 5, 6, 7, 8, 9, 11, 13",
                verdict(table_ok),
                t,
            );
        }
    }

    // Full enumeration and neatness classification, where feasible.
    let t = Instant::now();
    let enum_status = if n > ENUMERATION_VERTEX_CAP || gamma.is_none() {
        CheckStatus::Skipped
    } else {
        match solver::classify_neatness(d, &cfg) {
            Ok(report) => {
                neatness = Some(NeatnessJson {
                    count_mds: report.count_mds,
                    count_neat: report.count_neat,
                    super_neat: report.is_super_neat,
                });
                match kind {
                    // Proved for planes; data for everything else.
                    Kind::Projective(_) | Kind::Affine(_) => verdict(report.is_super_neat),
                    _ => CheckStatus::Finding,
                }
            }
            Err(SolverError::BudgetExceeded { .. })
            | Err(SolverError::EnumerationBudgetExceeded { .. }) => CheckStatus::Skipped,
            Err(e) => panic!("unexpected enumeration failure on {id}: {e}"),
        }
    };
    rec.push(
        "superneat-enumeration",
        "every minimum dominating set equals I_P for P its point part (planes are super-neat)",
        enum_status,
        t,
    );

    let t = Instant::now();
    let epn_status = if gamma.is_none() {
        CheckStatus::Skipped
    } else {
        match solver::epn_certified_mds(&g, &cfg) {
            Ok(s) => verdict(g.is_dominating(&s) && g.all_members_have_epn(&s)),
            Err(SolverError::EpnNotFound { .. }) => CheckStatus::Fail,
            Err(_) => CheckStatus::Skipped,
        }
    };
    rec.push(
        "epn-certified-mds",
        "some minimum dominating set gives every member an external private neighbour",
        epn_status,
        t,
    );

    let t = Instant::now();
    let oracle_status = if n > solver::ORACLE_VERTEX_CAP || gamma.is_none() {
        CheckStatus::Skipped
    } else {
        let oracle = solver::exhaustive_gamma_oracle(&g).expect("within cap");
        verdict(Some(oracle as u64) == gamma)
    };
    rec.push(
        "oracle-equivalence",
        "branch-and-bound gamma equals the exhaustive subset-scan gamma",
        oracle_status,
        t,
    );

    if !matches!(kind, Kind::Steiner) {
        let t = Instant::now();
        let sweep = bounds::ip_domination_sweep(d, opts.exhaustive_cap, opts.samples_per_size, opts.seed);
        rec.push(
            "closure-dominates-small-point-sets",
            "I_P is a dominating set whenever |P| <= ceil(r/lambda) - 1",
            verdict(sweep.ok()),
            t,
        );
    }

    match *kind {
        Kind::Projective(q) => {
            let t = Instant::now();
            let status = if q > RESIDUAL_MAX_Q || gamma.is_none() {
                CheckStatus::Skipped
            } else {
                match bounds::residual_relation_check(d, true, &cfg) {
                    Ok(rep) => {
                        *total_nodes += rep.nodes_explored;
                        verdict(rep.all_equal() && rep.equals_gamma_minus_one())
                    }
                    Err(_) => CheckStatus::Skipped,
                }
            };
            rec.push(
                "residual-gammas-equal-gamma-minus-1",
                "every residual of a block-transitive symmetric design has gamma(D1) = gamma(D) - 1",
                status,
                t,
            );
        }
        Kind::Biplane {
            check_residuals: true,
        } => {
            let t = Instant::now();
            match bounds::residual_relation_check(d, true, &cfg) {
                Ok(rep) => {
                    *total_nodes += rep.nodes_explored;
                    rec.push(
                        "residual-lower-bound",
                        "gamma(D1) >= gamma(D) - 1 for every residual of a symmetric design",
                        verdict(rep.lower_bound_ok()),
                        t,
                    );
                    let t = Instant::now();
                    rec.push(
                        "residual-gammas-all-equal",
                        "residuals of a block-transitive symmetric design are isomorphic, so their gammas agree",
                        verdict(rep.all_equal()),
                        t,
                    );
                    let t = Instant::now();
                    rec.push(
                        "residual-equals-gamma-minus-1",
                        "whether each residual gamma equals gamma(D) - 1, reported as data",
                        if rep.equals_gamma_minus_one() {
                            CheckStatus::Finding
                        } else {
                            CheckStatus::Fail
                        },
                        t,
                    );
                }
                Err(_) => {
                    rec.push(
                        "residual-lower-bound",
                        "gamma(D1) >= gamma(D) - 1 for every residual of a symmetric design",
                        CheckStatus::Skipped,
                        t,
                    );
                }
            }
        }
        _ => {}
    }

    DesignReport {
        id,
        params: p,
        gamma,
        bounds: BoundsJson {
            lb_general: breport.lb_general,
            bracket: breport.bracket.map(|(lo, hi)| [lo, hi]),
            biplane_lb: breport.biplane_lb,
        },
        neatness,
        checks: rec.checks,
    }
}
