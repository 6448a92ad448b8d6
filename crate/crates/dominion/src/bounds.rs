//! Closed-form bounds and relations on γ for 2-designs, evaluated exactly
//! and checked against solver ground truth.
//!
//! No floating point anywhere: integer ceiling division throughout, and the
//! one genuinely fractional threshold (the super-neatness sufficiency cut,
//! whose margin can be as small as 1/(q+1)) is compared through an exact
//! [`Rational`].

use crate::bitset::BitSet;
use crate::design::{Design, DesignParams};
use crate::solver::{self, SolverConfig, SolverError};
use crate::incidence::IncidenceGraph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("bracket applies only to non-symmetric designs with λ = 1, got λ = {lambda}, b = {b}, v = {v}")]
    BracketNotApplicable { lambda: u64, b: u64, v: u64 },
    #[error("biplane line bound needs 2 <= ℓ <= k, got ℓ = {ell}, k = {k}")]
    LineSizeOutOfRange { ell: u64, k: u64 },
    #[error("biplane floor-sum bound needs k >= 5, got k = {k}")]
    BlockSizeTooSmall { k: u64 },
}

/// Exact rational with positive denominator, kept reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rational {
    num: i64,
    den: i64,
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Rational {
        assert!(den != 0, "zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()) as i64;
        Rational {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Rational {
        Rational { num: n, den: 1 }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // Denominators are positive, so cross-multiplication preserves order.
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl std::fmt::Display for Rational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

fn ceil_div(num: u64, den: u64) -> u64 {
    num.div_ceil(den)
}

/// ⌈r/λ⌉ on integers.
pub fn ceil_r_over_lambda(p: &DesignParams) -> u64 {
    ceil_div(p.r, p.lambda)
}

/// General lower bound: γ(D) >= ⌈(2v - 1 - (k-1)/λ) / k⌉, computed exactly
/// as ⌈(λ(2v-1) - (k-1)) / (λk)⌉.
pub fn lb_general(p: &DesignParams) -> u64 {
    ceil_div(p.lambda * (2 * p.v - 1) - (p.k - 1), p.lambda * p.k)
}

/// Point-count lower bound on any dominating set with |π(S)| = `psize`:
/// |S| >= ⌈(v + |P|(k-1)) / k⌉.
pub fn lb_point_count(p: &DesignParams, psize: u64) -> u64 {
    assert!(psize <= p.v, "|P| = {psize} exceeds v = {}", p.v);
    ceil_div(p.v + psize * (p.k - 1), p.k)
}

/// The bracket 2k-1 <= γ(D) <= (v-k²)(v-1)/(k(k-1)) + 2k-1 for non-symmetric
/// designs with λ = 1, computed in integers as hi = b - kr + 2k - 1.
pub fn nonsymmetric_bracket(p: &DesignParams) -> Result<(u64, u64), BoundsError> {
    if p.lambda != 1 || p.b <= p.v {
        return Err(BoundsError::BracketNotApplicable {
            lambda: p.lambda,
            b: p.b,
            v: p.v,
        });
    }
    let lo = 2 * p.k - 1;
    let hi = p.b - p.k * p.r + 2 * p.k - 1;
    Ok((lo, hi))
}

/// Certified upper bound |I_P| on γ when |P| <= ⌈r/λ⌉ - 1 (then I_P
/// dominates); `None` when the precondition fails and no guarantee exists.
pub fn neat_upper(d: &Design, p: &BitSet) -> Option<u64> {
    let params = d.params();
    let psize = p.count_ones() as u64;
    if psize > ceil_r_over_lambda(&params) - 1 {
        return None;
    }
    Some(psize + d.blocks_avoiding(p).count_ones() as u64)
}

/// For a symmetric biplane (λ = 2) and a point set of size `ell` inside the
/// block-size-`k` design: the maximum of |L(P)| and the minimum of |I_P|,
/// with equality exactly when P lies inside a block.
///
/// L_max = ℓ(2k-1-ℓ)/2 + 1 and I_min = (k²-k)/2 + (ℓ² - ℓ(2k-3))/2.
pub fn biplane_line_bounds(k: u64, ell: u64) -> Result<(u64, u64), BoundsError> {
    if ell < 2 || ell > k {
        return Err(BoundsError::LineSizeOutOfRange { ell, k });
    }
    let l_num = ell * (2 * k - 1 - ell);
    debug_assert_eq!(l_num % 2, 0, "ℓ(2k-1-ℓ) is always even");
    let l_max = l_num / 2 + 1;
    let k = k as i64;
    let ell = ell as i64;
    let i_min = (k * k - k) / 2 + (ell * ell - ell * (2 * k - 3)) / 2;
    debug_assert!(i_min >= 0);
    Ok((l_max, i_min as u64))
}

/// Lower bound for symmetric biplanes with k >= 5:
/// γ(D) >= k - 1 + Σ_{i>=1} ⌊(k-4) / 2^(2i-1)⌋.
/// The sum stops at the first power exceeding k-4 (all later floors vanish).
pub fn lb_biplane_sum(k: u64) -> Result<u64, BoundsError> {
    if k < 5 {
        return Err(BoundsError::BlockSizeTooSmall { k });
    }
    let mut total = k - 1;
    let mut power = 2u64; // 2^(2i-1) for i = 1
    while power <= k - 4 {
        total += (k - 4) / power;
        power *= 4;
    }
    Ok(total)
}

/// Sufficient condition for super-neatness:
/// γ(D) < (⌈r/λ⌉(k-1) + v) / k, compared exactly.
pub fn superneat_sufficient(p: &DesignParams, gamma: u64) -> bool {
    let threshold = Rational::new(
        (ceil_r_over_lambda(p) * (p.k - 1) + p.v) as i64,
        p.k as i64,
    );
    Rational::from(gamma as i64) < threshold
}

/// Expected γ of a plane of order q: 2q projective, 2q-1 affine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlaneKind {
    Projective,
    Affine,
}

pub fn expected_gamma_plane(kind: PlaneKind, q: u64) -> u64 {
    assert!(q >= 2);
    match kind {
        PlaneKind::Projective => 2 * q,
        PlaneKind::Affine => 2 * q - 1,
    }
}

/// γ of every residual of a symmetric design, with the relations that the
/// residual theorems assert about them.
#[derive(Clone, Debug)]
pub struct ResidualRelationReport {
    pub gamma: usize,
    /// γ(Res(d, B₀)) for every block index B₀.
    pub residual_gammas: Vec<usize>,
    /// Whether the result was computed under a block-transitivity promise.
    pub transitivity_assumed: bool,
    /// Search nodes across the base solve and all residual solves.
    pub nodes_explored: u64,
}

impl ResidualRelationReport {
    /// γ(D₁) >= γ(D) - 1 for every residual; holds unconditionally for any
    /// symmetric design, so a violation is a solver bug.
    pub fn lower_bound_ok(&self) -> bool {
        self.first_lower_violation().is_none()
    }

    pub fn first_lower_violation(&self) -> Option<usize> {
        self.residual_gammas
            .iter()
            .position(|&g1| g1 + 1 < self.gamma)
    }

    /// All residual γ equal (expected under block-transitivity).
    pub fn all_equal(&self) -> bool {
        self.residual_gammas.windows(2).all(|w| w[0] == w[1])
    }

    /// Every residual satisfies γ(D₁) = γ(D) - 1 (the block-transitive case).
    pub fn equals_gamma_minus_one(&self) -> bool {
        self.residual_gammas.iter().all(|&g1| g1 + 1 == self.gamma)
    }
}

/// Computes γ for the design and all of its residuals.
///
/// `assume_transitive` only records that the caller promises
/// block-transitivity (so equal residual γ values equal to γ(D)-1 are a
/// theorem there); the same data is computed either way and violations are
/// left to the caller to interpret as a failure or a finding.
pub fn residual_relation_check(
    d: &Design,
    assume_transitive: bool,
    cfg: &SolverConfig,
) -> Result<ResidualRelationReport, SolverError> {
    let base = solver::minimum_domination(&IncidenceGraph::new(d), cfg)?;
    let mut nodes_explored = base.nodes_explored;
    let mut residual_gammas = Vec::with_capacity(d.b());
    for b0 in 0..d.b() {
        let (res, _) = d
            .residual(b0)
            .expect("symmetric design has residuals at every block");
        let r = solver::minimum_domination(&IncidenceGraph::new(&res), cfg)?;
        nodes_explored += r.nodes_explored;
        residual_gammas.push(r.gamma);
    }
    Ok(ResidualRelationReport {
        gamma: base.gamma,
        residual_gammas,
        transitivity_assumed: assume_transitive,
        nodes_explored,
    })
}

/// Outcome of sweeping point sets P with |P| <= ⌈r/λ⌉ - 1 and testing that
/// each closure I_P dominates.
#[derive(Clone, Debug, Default)]
pub struct IpSweepOutcome {
    pub tested: u64,
    pub violations: u64,
    /// Sizes swept exhaustively.
    pub exhaustive_sizes: Vec<u64>,
    /// Sizes covered by random samples instead.
    pub sampled_sizes: Vec<u64>,
}

impl IpSweepOutcome {
    pub fn ok(&self) -> bool {
        self.violations == 0
    }
}

/// Exhaustive tally of the biplane line-count bound at one point-set size.
#[derive(Clone, Debug)]
pub struct LineBoundSizeTally {
    pub ell: u64,
    pub l_max: u64,
    pub tested: u64,
    /// Point sets with |L(P)| > L_max. Zero in every observed case.
    pub bound_violations: u64,
    /// Sets inside a block whose |L(P)| missed L_max. Zero in every
    /// observed case: containment forces equality.
    pub inside_without_equality: u64,
    /// Sets attaining L_max without lying inside any block. Nonzero once
    /// L_max reaches b and no block can avoid P, so "equality iff contained"
    /// holds only below that saturation point.
    pub equality_without_inside: u64,
}

/// Sweeps every point set P with 2 <= |P| <= k of a symmetric biplane
/// against the line-count bound and its equality characterization.
pub fn line_bound_sweep(d: &Design) -> Vec<LineBoundSizeTally> {
    let p = d.params();
    assert!(p.lambda == 2 && d.is_symmetric(), "biplane sweep needs a symmetric λ = 2 design");
    let v = d.v();
    (2..=p.k)
        .map(|ell| {
            let (l_max, _) = biplane_line_bounds(p.k, ell).expect("2 <= ell <= k");
            let mut tally = LineBoundSizeTally {
                ell,
                l_max,
                tested: 0,
                bound_violations: 0,
                inside_without_equality: 0,
                equality_without_inside: 0,
            };
            crate::bitset::for_each_combination(v, ell as usize, &mut |c| {
                tally.tested += 1;
                let pset = BitSet::from_indices(v, c.iter().copied());
                let l = d.blocks_meeting(&pset).count_ones() as u64;
                let inside = d.blocks().iter().any(|b| pset.is_subset(b));
                if l > l_max {
                    tally.bound_violations += 1;
                }
                if inside && l != l_max {
                    tally.inside_without_equality += 1;
                }
                if l == l_max && !inside {
                    tally.equality_without_inside += 1;
                }
            });
            tally
        })
        .collect()
}

/// Tests that I_P dominates for every point set within the closure lemma's
/// hypothesis. Each size is swept exhaustively while C(v, s) stays within
/// `exhaustive_cap`, and by `samples` seeded random subsets above that.
pub fn ip_domination_sweep(
    d: &Design,
    exhaustive_cap: u64,
    samples: usize,
    seed: u64,
) -> IpSweepOutcome {
    use rand::SeedableRng;

    let g = IncidenceGraph::new(d);
    let p = d.params();
    let v = d.v();
    let max_size = ceil_r_over_lambda(&p) - 1;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut out = IpSweepOutcome::default();

    let test = |out: &mut IpSweepOutcome, pset: &BitSet| {
        out.tested += 1;
        if !g.is_dominating(&d.neat_closure(pset)) {
            out.violations += 1;
        }
    };

    for size in 0..=max_size {
        if crate::bitset::binomial(v as u64, size) <= exhaustive_cap {
            out.exhaustive_sizes.push(size);
            crate::bitset::for_each_combination(v, size as usize, &mut |c| {
                test(&mut out, &BitSet::from_indices(v, c.iter().copied()));
            });
        } else {
            out.sampled_sizes.push(size);
            for _ in 0..samples {
                let idx = rand::seq::index::sample(&mut rng, v, size as usize);
                test(&mut out, &BitSet::from_indices(v, idx.iter()));
            }
        }
    }
    out
}

/// Evaluation status of one bound against solver ground truth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundStatus {
    Satisfied,
    Violated,
    NotApplicable,
}

/// Every applicable closed-form bound of one design, with its status against
/// a computed γ where one is available.
#[derive(Clone, Debug)]
pub struct BoundsReport {
    pub id: String,
    pub params: DesignParams,
    pub gamma: Option<u64>,
    pub lb_general: u64,
    /// ⌈(v + |P|(k-1))/k⌉ for |P| = 0 ..= ⌈r/λ⌉.
    pub point_count_curve: Vec<(u64, u64)>,
    /// (lo, hi) for non-symmetric λ = 1 designs.
    pub bracket: Option<(u64, u64)>,
    /// Floor-sum lower bound for symmetric biplanes with k >= 5.
    pub biplane_lb: Option<u64>,
    /// Whether the super-neatness sufficiency cut certifies the design
    /// (needs γ).
    pub superneat_sufficient: Option<bool>,
    pub lb_general_status: BoundStatus,
    pub bracket_status: BoundStatus,
    pub biplane_lb_status: BoundStatus,
}

impl BoundsReport {
    pub fn any_violated(&self) -> bool {
        [
            self.lb_general_status,
            self.bracket_status,
            self.biplane_lb_status,
        ]
        .contains(&BoundStatus::Violated)
    }
}

/// Evaluates every applicable bound for `d` against `gamma` (when known).
pub fn evaluate_bounds(id: &str, d: &Design, gamma: Option<u64>) -> BoundsReport {
    let p = d.params();
    let lb = lb_general(&p);
    let curve = (0..=ceil_r_over_lambda(&p))
        .map(|psize| (psize, lb_point_count(&p, psize)))
        .collect();
    let bracket = nonsymmetric_bracket(&p).ok();
    let biplane_lb = if p.lambda == 2 && d.is_symmetric() && p.k >= 5 {
        Some(lb_biplane_sum(p.k).expect("k >= 5 checked"))
    } else {
        None
    };

    let against = |check: Option<bool>| match check {
        None => BoundStatus::NotApplicable,
        Some(true) => BoundStatus::Satisfied,
        Some(false) => BoundStatus::Violated,
    };
    let lb_general_status = against(gamma.map(|g| lb <= g));
    let bracket_status = against(match (bracket, gamma) {
        (Some((lo, hi)), Some(g)) => Some(lo <= g && g <= hi),
        _ => None,
    });
    let biplane_lb_status = against(match (biplane_lb, gamma) {
        (Some(lbb), Some(g)) => Some(lbb <= g),
        _ => None,
    });

    BoundsReport {
        id: id.to_string(),
        params: p,
        gamma,
        lb_general: lb,
        point_count_curve: curve,
        bracket,
        biplane_lb,
        superneat_sufficient: gamma.map(|g| superneat_sufficient(&p, g)),
        lb_general_status,
        bracket_status,
        biplane_lb_status,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::{affine_plane, cyclic_design, projective_plane};

    fn params(v: u64, k: u64, lambda: u64) -> DesignParams {
        let r = lambda * (v - 1) / (k - 1);
        DesignParams {
            v,
            k,
            lambda,
            b: v * r / k,
            r,
        }
    }

    #[test]
    fn lb_general_values() {
        assert_eq!(lb_general(&params(7, 3, 1)), 4);
        assert_eq!(lb_general(&params(13, 4, 1)), 6);
        assert_eq!(lb_general(&params(11, 5, 2)), 4);
    }

    #[test]
    fn lb_general_tight_on_plane_parameters() {
        for q in 2..=16u64 {
            assert_eq!(lb_general(&params(q * q + q + 1, q + 1, 1)), 2 * q);
            assert_eq!(lb_general(&params(q * q, q, 1)), 2 * q - 1);
        }
    }

    #[test]
    fn lb_point_count_values() {
        let fano = params(7, 3, 1);
        assert_eq!(lb_point_count(&fano, 0), 3);
        assert_eq!(lb_point_count(&fano, 2), 4);
        for q in 2..=9u64 {
            assert_eq!(lb_point_count(&params(q * q, q, 1), q - 1), 2 * q - 1);
        }
    }

    #[test]
    fn bracket_values() {
        assert_eq!(nonsymmetric_bracket(&params(9, 3, 1)).unwrap(), (5, 5));
        assert_eq!(nonsymmetric_bracket(&params(13, 3, 1)).unwrap(), (5, 13));
        assert_eq!(nonsymmetric_bracket(&params(15, 3, 1)).unwrap(), (5, 19));
        assert!(nonsymmetric_bracket(&params(7, 3, 1)).is_err());
        assert!(nonsymmetric_bracket(&params(11, 5, 2)).is_err());
    }

    #[test]
    fn bracket_matches_paper_fraction() {
        // hi = b - kr + 2k - 1 agrees with (v-k²)(v-1)/(k(k-1)) + 2k - 1.
        for (v, k) in [(9u64, 3u64), (13, 3), (15, 3), (25, 5), (16, 4)] {
            let p = params(v, k, 1);
            if p.b <= p.v {
                continue;
            }
            let (_, hi) = nonsymmetric_bracket(&p).unwrap();
            let frac = (v - k * k) * (v - 1) / (k * (k - 1));
            assert_eq!(hi, frac + 2 * k - 1);
        }
    }

    #[test]
    fn neat_upper_examples() {
        let fano = cyclic_design(7, &[vec![0, 1, 3]]).unwrap();
        let pair = BitSet::from_indices(7, [0, 1]);
        assert_eq!(neat_upper(&fano, &pair), Some(4));
        let empty = BitSet::new(7);
        assert_eq!(neat_upper(&fano, &empty), Some(7)); // all blocks
        let too_big = BitSet::from_indices(7, [0, 1, 2]);
        assert_eq!(neat_upper(&fano, &too_big), None);

        // One full block of AG(2,q): q + (q-1) = 2q - 1, tight.
        for q in [2u64, 3, 4] {
            let ag = affine_plane(q).unwrap();
            let block = ag.block(0).clone();
            assert_eq!(neat_upper(&ag, &block), Some(2 * q - 1));
        }
    }

    #[test]
    fn biplane_line_bound_values() {
        assert_eq!(biplane_line_bounds(4, 2).unwrap(), (6, 3));
        assert_eq!(biplane_line_bounds(5, 2).unwrap(), (8, 5));
        assert_eq!(biplane_line_bounds(5, 5).unwrap(), (11, 5));
        assert!(biplane_line_bounds(5, 1).is_err());
        assert!(biplane_line_bounds(5, 6).is_err());
    }

    #[test]
    fn biplane_floor_sum_values() {
        assert!(lb_biplane_sum(4).is_err());
        for (k, expected) in [(5, 4), (6, 6), (7, 7), (8, 9), (9, 10), (11, 13), (13, 17)] {
            assert_eq!(lb_biplane_sum(k).unwrap(), expected, "k = {k}");
        }
    }

    #[test]
    fn superneat_sufficient_examples() {
        for q in [2u64, 3, 4, 5] {
            assert!(superneat_sufficient(&params(q * q + q + 1, q + 1, 1), 2 * q));
            assert!(superneat_sufficient(&params(q * q, q, 1), 2 * q - 1));
        }
        // Hypothetical γ = 5 on Fano parameters: 5 > 13/3.
        assert!(!superneat_sufficient(&params(7, 3, 1), 5));
    }

    #[test]
    fn expected_plane_gammas() {
        assert_eq!(expected_gamma_plane(PlaneKind::Projective, 2), 4);
        assert_eq!(expected_gamma_plane(PlaneKind::Affine, 4), 7);
        assert_eq!(expected_gamma_plane(PlaneKind::Projective, 5), 10);
    }

    #[test]
    fn rational_ordering() {
        assert!(Rational::new(13, 3) < Rational::from(5));
        assert!(Rational::from(4) < Rational::new(13, 3));
        assert_eq!(Rational::new(-4, -2), Rational::from(2));
        assert_eq!(Rational::new(6, -3), Rational::from(-2));
        assert_eq!(Rational::new(2, 4), Rational::new(1, 2));
    }

    #[test]
    fn residual_relations_on_fano() {
        let fano = cyclic_design(7, &[vec![0, 1, 3]]).unwrap();
        let report = residual_relation_check(&fano, true, &SolverConfig::default()).unwrap();
        assert_eq!(report.gamma, 4);
        assert!(report.lower_bound_ok());
        assert!(report.all_equal());
        assert!(report.equals_gamma_minus_one());
        assert_eq!(report.residual_gammas, vec![3; 7]);
    }

    #[test]
    fn line_bound_sweep_directions() {
        // Both directions that hold exhaustively: the bound itself, and
        // containment forcing equality. The converse fails exactly at the
        // sizes where L_max reaches b (28 sets at l = 4 on the 2-(7,4,2);
        // 110 at l = 4 and 385 at l = 5 on the 2-(11,5,2)).
        let biplane7 = cyclic_design(7, &[vec![0, 1, 3]])
            .unwrap()
            .complement()
            .unwrap();
        let sweep7 = line_bound_sweep(&biplane7);
        assert!(sweep7
            .iter()
            .all(|s| s.bound_violations == 0 && s.inside_without_equality == 0));
        let converse7: Vec<u64> = sweep7.iter().map(|s| s.equality_without_inside).collect();
        assert_eq!(converse7, vec![0, 0, 28]);

        let paley = cyclic_design(11, &[vec![1, 3, 4, 5, 9]]).unwrap();
        let sweep11 = line_bound_sweep(&paley);
        assert!(sweep11
            .iter()
            .all(|s| s.bound_violations == 0 && s.inside_without_equality == 0));
        let converse11: Vec<u64> = sweep11.iter().map(|s| s.equality_without_inside).collect();
        assert_eq!(converse11, vec![0, 0, 110, 385]);
    }

    #[test]
    fn ip_sweep_exhaustive_on_fano() {
        let fano = cyclic_design(7, &[vec![0, 1, 3]]).unwrap();
        let out = ip_domination_sweep(&fano, 100_000, 10, 1);
        assert!(out.ok());
        assert!(out.sampled_sizes.is_empty());
        // Sizes 0, 1, 2: 1 + 7 + 21 point sets.
        assert_eq!(out.tested, 29);
    }

    #[test]
    fn ip_sweep_sampling_path() {
        let fano = cyclic_design(7, &[vec![0, 1, 3]]).unwrap();
        let out = ip_domination_sweep(&fano, 1, 5, 42);
        assert!(out.ok());
        assert_eq!(out.sampled_sizes, vec![1, 2]);
        assert_eq!(out.tested, 1 + 5 + 5);
    }

    #[test]
    fn bounds_report_statuses() {
        let d = projective_plane(2).unwrap();
        let report = evaluate_bounds("pg-2", &d, Some(4));
        assert_eq!(report.lb_general, 4);
        assert_eq!(report.lb_general_status, BoundStatus::Satisfied);
        assert_eq!(report.bracket_status, BoundStatus::NotApplicable);
        assert!(!report.any_violated());
        assert_eq!(report.superneat_sufficient, Some(true));

        let broken = evaluate_bounds("pg-2", &d, Some(3));
        assert_eq!(broken.lb_general_status, BoundStatus::Violated);
        assert!(broken.any_violated());
    }
}
