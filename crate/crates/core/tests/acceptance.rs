//! Acceptance criteria 1-13. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::f64::consts::PI;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pseudocone::cone::PolyCone;
use pseudocone::copolarity::{
    check_identities, classify, classify_faces_with, copolar, local_identities, FaceClass,
    IdentityCheck,
};
use pseudocone::corpus::{
    random_cone, random_interior_vector, random_point_pseudocone, random_pseudocone,
};
use pseudocone::linalg::{frac, normalize, rat, Halfspace, QVec};
use pseudocone::minkowski::{
    coconvex_volume, dilatation_inequality_check, semicontinuity_witness, reverse_image_radius,
    solve_minkowski, surface_area_measure, truncation_pipeline, volume_gradient_fd, AtomicMeasure,
    CoconvexVolume, DyadicGenerator, Initialization, SolverConfig, WeightRule, WulffShape,
};
use pseudocone::pseudocone::PseudoCone;

const SEED: u64 = 20_240_601;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

/// 100 instances per dimension: two thirds cut by interior halfspaces,
/// one third generated by points of `int C`.
fn corpus() -> Vec<PseudoCone> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut out = Vec::new();
    for dim in [2, 3] {
        for i in 0..100 {
            let cone = Arc::new(random_cone(&mut rng, dim));
            out.push(if i % 3 == 2 {
                random_point_pseudocone(&mut rng, &cone)
            } else {
                random_pseudocone(&mut rng, &cone)
            });
        }
    }
    out
}

/// Identity battery on 30 pairs per dimension sharing a cone.
fn battery() -> Vec<Vec<IdentityCheck>> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let mut out = Vec::new();
    for dim in [2, 3] {
        for i in 0..30u64 {
            let cone = Arc::new(random_cone(&mut rng, dim));
            let k = if i % 3 == 2 {
                random_point_pseudocone(&mut rng, &cone)
            } else {
                random_pseudocone(&mut rng, &cone)
            };
            let l = if i % 2 == 0 {
                random_point_pseudocone(&mut rng, &cone)
            } else {
                random_pseudocone(&mut rng, &cone)
            };
            out.push(check_identities(&k, &l, 20, SEED + i));
        }
    }
    out
}

fn battery_outcome(results: &[Vec<IdentityCheck>], names: &[&str]) -> Outcome {
    let mut checked = 0;
    let mut failures = Vec::new();
    for (i, checks) in results.iter().enumerate() {
        for c in checks.iter().filter(|c| names.contains(&c.name)) {
            checked += 1;
            if !c.passed {
                failures.push(format!("pair {i} {} {}", c.name, c.detail));
            }
        }
    }
    let detail = if failures.is_empty() {
        format!("{checked} checks on {} pairs", results.len())
    } else {
        format!(
            "{} of {checked} checks failed: {}",
            failures.len(),
            failures.join("; ")
        )
    };
    outcome(failures.is_empty() && checked > 0, detail)
}

const CONJUGATE_CHECKS: [&str; 4] = [
    "conjugate-class-bijections",
    "conjugate-involution",
    "conjugate-dimension-law",
    "conjugate-inclusion-reversal",
];

fn merge(a: Outcome, b: Outcome) -> Outcome {
    outcome(a.passed && b.passed, format!("{}; {}", a.detail, b.detail))
}

fn criterion_1(corpus: &[PseudoCone]) -> Outcome {
    let start = Instant::now();
    let bad = corpus
        .iter()
        .filter(|k| copolar(&copolar(k)) != **k)
        .count();
    let elapsed = start.elapsed();
    outcome(
        bad == 0 && elapsed < Duration::from_secs(60) && corpus.len() >= 200,
        format!(
            "{} instances, {bad} failures, {:.1} s",
            corpus.len(),
            elapsed.as_secs_f64()
        ),
    )
}

fn criterion_2(corpus: &[PseudoCone]) -> Outcome {
    let bad = corpus
        .iter()
        .filter(|k| {
            let star = copolar(k);
            let polar = k.cone().polar();
            star.rays() != polar.generators() || *star.cone() != polar
        })
        .count();
    outcome(
        bad == 0,
        format!("{} instances, {bad} failures", corpus.len()),
    )
}

fn criterion_6(corpus: &[PseudoCone]) -> Outcome {
    let mut faces = 0;
    for (i, k) in corpus.iter().enumerate() {
        let report = classify_faces_with(k, &copolar(k));
        faces += report.faces.len();
        if !report.all_hold() {
            return outcome(false, format!("instance {i}: {report:?}"));
        }
        if report
            .faces
            .iter()
            .any(|f| f.class == FaceClass::UnboundedBoundary && f.conjugate.is_some())
        {
            return outcome(
                false,
                format!("instance {i}: boundary-unbounded face with a conjugate"),
            );
        }
    }
    outcome(true, format!("{faces} faces on {} instances", corpus.len()))
}

fn criterion_7(corpus: &[PseudoCone]) -> Outcome {
    let mut faces = 0;
    for (i, k) in corpus.iter().enumerate() {
        let star = copolar(k);
        for (j, f) in k.faces().faces().iter().enumerate() {
            if classify(k, f) == FaceClass::UnboundedBoundary {
                continue;
            }
            faces += 1;
            match local_identities(k, &star, f) {
                Ok(l) if l.all_hold() => {}
                Ok(l) => return outcome(false, format!("instance {i} face {j}: {l:?}")),
                Err(e) => return outcome(false, format!("instance {i} face {j}: {e}")),
            }
        }
    }
    outcome(true, format!("{faces} faces on {} instances", corpus.len()))
}

fn criterion_8(corpus: &[PseudoCone]) -> Outcome {
    let mut worst = 0.0f64;
    let mut count = 0;
    for k in corpus {
        if let v @ CoconvexVolume::Finite { .. } = coconvex_volume(k) {
            count += 1;
            worst = worst.max(v.relative_gap());
        }
    }
    outcome(
        worst <= 1e-9 && count > 0,
        format!("{count} C-close instances, worst relative gap {worst:.2e}"),
    )
}

/// Pseudo-cones cut out by tangent halfspaces of `x y = 1` and `x y z = 1`
/// in the orthant, so that every halfspace is a facet (9 or 10 atoms).
fn tangent_instances() -> Vec<PseudoCone> {
    let mut out = Vec::new();
    let cone = Arc::new(PolyCone::orthant(2).unwrap());
    let ts = [
        (1, 4),
        (1, 3),
        (1, 2),
        (2, 3),
        (1, 1),
        (3, 2),
        (2, 1),
        (3, 1),
        (4, 1),
        (5, 1),
    ];
    let halfspaces = ts
        .iter()
        .map(|&(p, q)| Halfspace::new(QVec::from_ints(&[-q * q, -p * p]), rat(-2 * p * q)))
        .collect();
    out.push(PseudoCone::from_cone_and_halfspaces(cone, halfspaces).unwrap());
    let cone = Arc::new(PolyCone::orthant(3).unwrap());
    let coords = [(1, 2), (1, 1), (2, 1)];
    let mut halfspaces = Vec::new();
    for &(p1, q1) in &coords {
        for &(p2, q2) in &coords {
            // Tangent at (a, b, 1/(ab)) with a = p1/q1, b = p2/q2.
            let normal = QVec::new(vec![frac(-q1, p1), frac(-q2, p2), frac(-p1 * p2, q1 * q2)]);
            halfspaces.push(Halfspace::new(normal, rat(-3)));
        }
    }
    out.push(PseudoCone::from_cone_and_halfspaces(cone, halfspaces).unwrap());
    out
}

fn relative(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs())
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 9);
    let mut worst_round_trip = 0.0f64;
    let mut worst_unique = 0.0f64;
    let mut worst_gradient = 0.0f64;
    let mut slowest = Duration::ZERO;
    let mut max_atoms = 0;
    let mut solves = 0;
    let mut instances = tangent_instances();
    for dim in [2, 3] {
        for _ in 0..8 {
            let cone = Arc::new(random_cone(&mut rng, dim));
            instances.push(random_pseudocone(&mut rng, &cone));
        }
    }
    for k in instances {
        let cone = k.cone_arc().clone();
        let dim = k.dim();
        let phi = surface_area_measure(&k);
        max_atoms = max_atoms.max(phi.len());
        let start = Instant::now();
        let solved = solve_minkowski(&cone, &phi, &SolverConfig::default());
        slowest = slowest.max(start.elapsed());
        let Ok((_, state)) = solved else {
            return outcome(
                false,
                format!(
                    "solver failed on a {dim}-dimensional instance: {:?}",
                    solved.err()
                ),
            );
        };
        solves += 1;
        for (u, h) in state.normals.iter().zip(&state.hbar) {
            worst_round_trip = worst_round_trip.max(relative(*h, k.hbar_f64(u).unwrap()));
        }
        let cfg = SolverConfig {
            init: Initialization::Random(rng.random()),
            ..SolverConfig::default()
        };
        let (_, other) = solve_minkowski(&cone, &phi, &cfg).expect("second solve");
        for (a, b) in state.hbar.iter().zip(&other.hbar) {
            worst_unique = worst_unique.max(relative(*a, *b));
        }
        // Gradient at a perturbed point of the same normals.
        let hbar: Vec<f64> = state
            .hbar
            .iter()
            .map(|h| h * rng.random_range(0.9..1.1))
            .collect();
        let w = WulffShape::new(&cone, &state.normals, &hbar).expect("perturbed shape");
        let fd =
            volume_gradient_fd(&cone, &state.normals, &hbar, 1e-5).expect("finite differences");
        for (a, b) in fd.iter().zip(&w.areas) {
            if *b > 1e-6 {
                worst_gradient = worst_gradient.max(relative(*a, *b));
            }
        }
    }
    let cone = Arc::new(PolyCone::orthant(2).unwrap());
    let phi = AtomicMeasure::new(&cone, vec![(vec![-1.0, -1.0], 2f64.sqrt())]).unwrap();
    let (k, state) = solve_minkowski(&cone, &phi, &SolverConfig::default()).unwrap();
    let k1 = PseudoCone::from_cone_and_halfspaces(
        cone,
        vec![Halfspace::new(QVec::from_ints(&[-1, -1]), rat(-1))],
    )
    .unwrap();
    let analytic = (state.hbar[0] - 0.5f64.sqrt()).abs();
    let passed = worst_round_trip <= 1e-6
        && worst_unique <= 1e-6
        && worst_gradient <= 1e-4
        && slowest < Duration::from_secs(10)
        && max_atoms <= 10
        && analytic <= 1e-9
        && k == k1;
    outcome(
        passed,
        format!(
            "{solves} solves (up to {max_atoms} atoms, slowest {:.2} s): round trip {worst_round_trip:.1e}, \
             uniqueness {worst_unique:.1e}, gradient {worst_gradient:.1e}, single atom {analytic:.1e}, exact K1 {}",
            slowest.as_secs_f64(),
            k == k1
        ),
    )
}

fn criterion_10(corpus: &[PseudoCone]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 10);
    let mut pairs = 0;
    let mut worst = 0.0f64;
    for k in corpus.iter().filter(|k| k.is_c_full()) {
        let polar = k.cone().polar();
        let mut dirs: Vec<Vec<f64>> = surface_area_measure(k).directions();
        for _ in 0..3 {
            dirs.push(normalize(
                &random_interior_vector(&mut rng, polar.generators()).to_f64(),
            ));
        }
        for u in dirs {
            let r = match dilatation_inequality_check(k, &u, 1e-9) {
                Ok(r) => r,
                Err(e) => return outcome(false, format!("dilatation check failed: {e}")),
            };
            pairs += 1;
            if !r.holds {
                return outcome(false, format!("inequality violated: {r:?}"));
            }
            worst = worst.max(r.lhs / r.coconvex_volume);
        }
    }
    // Path from the bisector toward the boundary of the polar orthant.
    let cone = Arc::new(PolyCone::orthant(2).unwrap());
    let k = PseudoCone::from_cone_and_halfspaces(
        cone,
        vec![
            Halfspace::new(QVec::from_ints(&[-1, -2]), rat(-2)),
            Halfspace::new(QVec::from_ints(&[-2, -1]), rat(-2)),
        ],
    )
    .unwrap();
    let mut ratios = Vec::new();
    let mut hbars = Vec::new();
    for step in 0..10 {
        let angle = PI + PI / 4.0 / 1.6f64.powi(step);
        let r = dilatation_inequality_check(&k, &[angle.cos(), angle.sin()], 1e-9).unwrap();
        ratios.push(r.ratio);
        hbars.push(r.hbar);
    }
    let trend = ratios.iter().all(|r| *r <= 2.0 * ratios[0]);
    let hbar_to_zero = hbars.windows(2).all(|w| w[1] <= w[0]);
    outcome(
        pairs > 0 && trend && hbar_to_zero,
        format!(
            "{pairs} (K,u) pairs, max lhs/V {worst:.6}; ratio along path {:.3} -> {:.3}, h̄ monotone {hbar_to_zero}",
            ratios[0],
            ratios[ratios.len() - 1]
        ),
    )
}

fn criterion_11(corpus: &[PseudoCone]) -> Outcome {
    let mut checks = 0;
    for k in corpus {
        for tau in [PI / 16.0, PI / 8.0, PI / 4.0] {
            let (radius, bound) = reverse_image_radius(k, tau, 5.0);
            checks += 1;
            if radius > bound + 1e-9 {
                return outcome(
                    false,
                    format!("radius {radius} exceeds {bound} at tau {tau}"),
                );
            }
        }
    }
    outcome(true, format!("{checks} (K, tau) pairs"))
}

fn criterion_12() -> Outcome {
    let start = Instant::now();
    let cone = Arc::new(PolyCone::orthant(2).unwrap());
    let stages = 6;
    let phi = DyadicGenerator {
        weights: WeightRule::Decaying,
    }
    .atoms(&cone, stages)
    .unwrap();
    let report = match truncation_pipeline(&cone, &phi, stages, &SolverConfig::default()) {
        Ok(r) => r,
        Err(e) => return outcome(false, format!("pipeline failed: {e}")),
    };
    let (b_min, b_max) = report.distance_b_range();
    let distances = (0..report.ladder.len()).all(|r| report.distances_decreasing(r));
    let elapsed = start.elapsed();
    let passed = report.lambda_increasing()
        && b_min >= 0.1
        && b_max <= 1.0
        && report.max_volume() < 1.0
        && distances
        && report.stages.len() >= 5
        && elapsed < Duration::from_secs(300);
    outcome(
        passed,
        format!(
            "{} stages: lambda increasing {}, b in [{b_min:.4}, {b_max:.4}], max volume {:.4}, distances decreasing {distances}, {:.1} s",
            report.stages.len(),
            report.lambda_increasing(),
            report.max_volume(),
            elapsed.as_secs_f64()
        ),
    )
}

fn criterion_13() -> Outcome {
    let cone = Arc::new(PolyCone::orthant(2).unwrap());
    let k0 = PseudoCone::from_cone_and_halfspaces(
        cone,
        vec![Halfspace::new(QVec::from_ints(&[-1, -1]), rat(-1))],
    )
    .unwrap();
    let steps = match semicontinuity_witness(&k0, 8, &rat(4), &rat(1)) {
        Ok(s) => s,
        Err(e) => return outcome(false, format!("construction failed: {e}")),
    };
    let infinite = steps.iter().all(|s| s.volume == CoconvexVolume::Infinite);
    let shrinking = steps.windows(2).all(|w| w[1].distance < w[0].distance);
    let last = steps.last().unwrap().distance;
    outcome(
        infinite && shrinking && last < 0.01 && coconvex_volume(&k0).is_finite(),
        format!(
            "{} members with infinite volume {infinite}; distance {:.4} -> {last:.2e}; V(C \\ K0) = {}",
            steps.len(),
            steps[0].distance,
            coconvex_volume(&k0).value()
        ),
    )
}

fn main() {
    let corpus = corpus();
    let battery = battery();
    type Criterion<'a> = (&'a str, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: Vec<Criterion> = vec![
        ("copolar involution", Box::new(|| criterion_1(&corpus))),
        ("recession duality", Box::new(|| criterion_2(&corpus))),
        (
            "intersection, hull and halfspace identities",
            Box::new(|| {
                battery_outcome(
                    &battery,
                    &[
                        "copolar-of-intersection",
                        "copolar-of-hull",
                        "copolar-of-halfspace-cut",
                    ],
                )
            }),
        ),
        (
            "radial-support duality and boundary criterion",
            Box::new(|| {
                battery_outcome(&battery, &["radial-support-duality", "boundary-criterion"])
            }),
        ),
        (
            "crucial-pair symmetry",
            Box::new(|| battery_outcome(&battery, &["crucial-pair-symmetry"])),
        ),
        (
            "conjugate-face laws",
            Box::new(|| {
                merge(
                    battery_outcome(&battery, &CONJUGATE_CHECKS),
                    criterion_6(&corpus),
                )
            }),
        ),
        (
            "normal, angle and tangent cones",
            Box::new(|| {
                merge(
                    battery_outcome(&battery, &["local-cone-identities"]),
                    criterion_7(&corpus),
                )
            }),
        ),
        (
            "coconvex volume identity",
            Box::new(|| criterion_8(&corpus)),
        ),
        ("Minkowski solver", Box::new(criterion_9)),
        ("dilatation inequality", Box::new(|| criterion_10(&corpus))),
        (
            "reverse image radius bound",
            Box::new(|| criterion_11(&corpus)),
        ),
        ("truncation pipeline", Box::new(criterion_12)),
        ("semicontinuity witness", Box::new(criterion_13)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            outcome(false, format!("panicked: {msg}"))
        });
        if !result.passed {
            failed += 1;
        }
        println!(
            "criterion {:>2} {} {name} ({:.1} s): {}",
            i + 1,
            if result.passed { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64(),
            result.detail
        );
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
