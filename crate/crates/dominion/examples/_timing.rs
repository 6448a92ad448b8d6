use dominion::bounds::residual_relation_check;
use dominion::design::{affine_plane, cyclic_design, projective_plane};
use dominion::incidence::IncidenceGraph;
use dominion::solver::{classify_neatness, epn_certified_mds, SolverConfig};
use std::time::Instant;

fn main() {
    let cfg = SolverConfig::default();
    for (name, d) in [
        ("pg2", projective_plane(2).unwrap()),
        ("pg3", projective_plane(3).unwrap()),
        ("ag2", affine_plane(2).unwrap()),
        ("ag3", affine_plane(3).unwrap()),
        ("biplane742", projective_plane(2).unwrap().complement().unwrap()),
        ("paley", cyclic_design(11, &[vec![1, 3, 4, 5, 9]]).unwrap()),
    ] {
        let t = Instant::now();
        let r = classify_neatness(&d, &cfg).unwrap();
        println!(
            "classify {name}: gamma={} mds={} neat={} super={} in {:.3}s",
            r.gamma, r.count_mds, r.count_neat, r.is_super_neat, t.elapsed().as_secs_f64()
        );
    }
    for q in [2u64, 3, 4] {
        let d = projective_plane(q).unwrap();
        let t = Instant::now();
        let rep = residual_relation_check(&d, true, &cfg).unwrap();
        println!(
            "residuals pg{q}: gamma={} all_equal={} eq-1={} in {:.3}s",
            rep.gamma, rep.all_equal(), rep.equals_gamma_minus_one(), t.elapsed().as_secs_f64()
        );
    }
    let paley = cyclic_design(11, &[vec![1, 3, 4, 5, 9]]).unwrap();
    let t = Instant::now();
    let rep = residual_relation_check(&paley, true, &cfg).unwrap();
    println!(
        "residuals paley: gamma={} residual_gammas={:?} in {:.3}s",
        rep.gamma, rep.residual_gammas, t.elapsed().as_secs_f64()
    );
    for q in [2u64, 3, 4, 5] {
        for (kind, d) in [("pg", projective_plane(q).unwrap()), ("ag", affine_plane(q).unwrap())] {
            let g = IncidenceGraph::new(&d);
            let t = Instant::now();
            let s = epn_certified_mds(&g, &cfg).unwrap();
            println!("epn {kind}{q}: |S|={} in {:.3}s", s.count_ones(), t.elapsed().as_secs_f64());
        }
    }
}
