//! Acceptance suite: the equivalence, soundness and closure properties the
//! crate promises, each printed as one pass/fail line. Run with
//! `cargo test --test acceptance -- --nocapture` to see the lines for
//! passing criteria too.

mod common;

use std::time::Instant;

use loopgraphs::graphs::DegreeConvention;
use loopgraphs::oracle::{
    exhaustive_sequence_scan, oracle_bipartite_symmetric, sequence_space, OracleBudget,
};
use loopgraphs::realize::{
    feasibility_descends, realize_loops_double, realize_loops_reduced, RealizeError,
};
use loopgraphs::sequences::{
    check_erdos_gallai, check_gale_ryser_symmetric, check_loops_double, check_loops_reduced,
    choudum_reduce, complement_sequence, increment_all, DegreeSequence,
};
use loopgraphs::transforms::{
    complement_graph, involution_check, symmetric_bipartite_realization, tensor_double_cover,
    topological_double_cover,
};
use loopgraphs::verify_realization;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn criterion(name: &str, body: impl FnOnce() -> Result<String, String>) {
    match body() {
        Ok(detail) => println!("PASS {name}: {detail}"),
        Err(detail) => {
            println!("FAIL {name}: {detail}");
            panic!("{name} failed: {detail}");
        }
    }
}

fn ds(v: &[i64]) -> DegreeSequence {
    DegreeSequence::new(v, false).unwrap()
}

/// Whether the reduction step applies at all: strictly positive and not the
/// lone single-entry base case that a loop realizes directly.
fn reducible(d: &DegreeSequence) -> bool {
    !d.is_empty() && !d.values().contains(&0) && !(d.len() == 1 && d.max_degree() < 2)
}

#[test]
fn criterion_1_double_check_matches_oracle() {
    criterion("criterion 1 (doubled-degree check matches oracle, n <= 5)", || {
        let start = Instant::now();
        let budget = OracleBudget::default();
        let mut sequences = 0usize;
        for n in 0..=5 {
            let scan = exhaustive_sequence_scan(n, n as u64 + 1, DegreeConvention::Double, &budget)
                .map_err(|e| e.to_string())?;
            for (d, realizable) in scan {
                sequences += 1;
                let predicted = check_loops_double(&d).passed;
                if predicted != realizable {
                    return Err(format!("disagreement on {d}: check {predicted}, oracle {realizable}"));
                }
            }
        }
        let elapsed = start.elapsed();
        if elapsed.as_secs() >= 60 {
            return Err(format!("scan took {elapsed:.2?}, budget is one minute"));
        }
        Ok(format!("{sequences} sequences, 0 disagreements, {elapsed:.2?}"))
    });
}

#[test]
fn criterion_2_reduced_check_matches_oracle() {
    criterion("criterion 2 (reduced-degree check matches oracle, n <= 5)", || {
        let start = Instant::now();
        let budget = OracleBudget::default();
        let mut sequences = 0usize;
        for n in 0..=5 {
            let scan = exhaustive_sequence_scan(n, n as u64, DegreeConvention::Reduced, &budget)
                .map_err(|e| e.to_string())?;
            for (d, realizable) in scan {
                sequences += 1;
                let predicted = check_loops_reduced(&d).passed;
                if predicted != realizable {
                    return Err(format!("disagreement on {d}: check {predicted}, oracle {realizable}"));
                }
            }
        }
        let elapsed = start.elapsed();
        if elapsed.as_secs() >= 60 {
            return Err(format!("scan took {elapsed:.2?}, budget is one minute"));
        }
        Ok(format!("{sequences} sequences, 0 disagreements, {elapsed:.2?}"))
    });
}

#[test]
fn criterion_3_reduced_equals_bipartite_check() {
    criterion("criterion 3 (reduced check = symmetric bipartite check)", || {
        let mut sequences = 0usize;
        for n in 0..=6 {
            for d in sequence_space(n, n as u64) {
                sequences += 1;
                let reduced = check_loops_reduced(&d).passed;
                let gale_ryser = check_gale_ryser_symmetric(&d).passed;
                if reduced != gale_ryser {
                    return Err(format!("disagreement on {d}: reduced {reduced}, dominance {gale_ryser}"));
                }
            }
        }
        let budget = OracleBudget::with_max_n(4);
        let mut oracle_checked = 0usize;
        for n in 0..=4 {
            for d in sequence_space(n, n as u64) {
                oracle_checked += 1;
                let by_oracle = oracle_bipartite_symmetric(&d, &budget)
                    .map_err(|e| e.to_string())?
                    .is_some();
                if by_oracle != check_gale_ryser_symmetric(&d).passed {
                    return Err(format!("bipartite oracle disagrees on {d}"));
                }
            }
        }
        Ok(format!("{sequences} sequences compared, {oracle_checked} against the bipartite oracle"))
    });
}

#[test]
fn criterion_4_reference_values() {
    criterion("criterion 4 (reference failure and pass values)", || {
        let report = check_erdos_gallai(&ds(&[3, 3, 1, 1]));
        if report.passed || report.first_violation != Some(2) {
            return Err(format!("(3,3,1,1) simple-graph check: {report:?}"));
        }
        let row = report.rows[1];
        if (row.lhs, row.rhs) != (6, 4) {
            return Err(format!("(3,3,1,1) row at k=2 is {row:?}, expected lhs 6 rhs 4"));
        }
        if !check_gale_ryser_symmetric(&ds(&[4, 4, 2, 2])).passed {
            return Err("(4,4,2,2) should pass the symmetric bipartite check".into());
        }
        let bumped = increment_all(&ds(&[3, 3, 1, 1]));
        if bumped != ds(&[4, 4, 2, 2]) {
            return Err(format!("increment of (3,3,1,1) gave {bumped}"));
        }
        if !check_gale_ryser_symmetric(&bumped).passed {
            return Err("incremented sequence should pass the symmetric bipartite check".into());
        }
        Ok("non-graphic (3,3,1,1) fails at k=2 with 6 > 4; its increment (4,4,2,2) is bipartite-feasible".into())
    });
}

#[test]
fn criterion_5_realizer_soundness() {
    criterion("criterion 5 (realizers verify on every feasible input)", || {
        let mut realized = 0usize;
        for n in 0..=5 {
            for d in sequence_space(n, n as u64 + 1) {
                if check_loops_double(&d).passed {
                    let (g, _) = realize_loops_double(&d).map_err(|e| format!("{d}: {e}"))?;
                    if !verify_realization(&g, &d, DegreeConvention::Double) {
                        return Err(format!("double realization of {d} does not verify"));
                    }
                    realized += 1;
                }
            }
            for d in sequence_space(n, n as u64) {
                if check_loops_reduced(&d).passed {
                    let (g, _) = realize_loops_reduced(&d).map_err(|e| format!("{d}: {e}"))?;
                    if !verify_realization(&g, &d, DegreeConvention::Reduced) {
                        return Err(format!("reduced realization of {d} does not verify"));
                    }
                    realized += 1;
                }
            }
        }

        // random feasible sequences come from random graphs, whose degree
        // sequences are feasible by the necessity direction
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let start = Instant::now();
        for i in 0..1000 {
            let n = rng.gen_range(1..=40);
            let edge_p = rng.gen_range(0.05..0.9);
            let loop_p = rng.gen_range(0.0..1.0);
            let g = common::random_graph(&mut rng, n, edge_p, loop_p);
            if i % 2 == 0 {
                let d = g.degrees_double();
                let (h, _) = realize_loops_double(&d).map_err(|e| format!("{d}: {e}"))?;
                if !verify_realization(&h, &d, DegreeConvention::Double) {
                    return Err(format!("double realization of {d} does not verify"));
                }
            } else {
                let d = g.degrees_reduced();
                let (h, _) = realize_loops_reduced(&d).map_err(|e| format!("{d}: {e}"))?;
                if !verify_realization(&h, &d, DegreeConvention::Reduced) {
                    return Err(format!("reduced realization of {d} does not verify"));
                }
            }
        }
        let elapsed = start.elapsed();
        if elapsed.as_secs() >= 10 {
            return Err(format!("1000 random realizations took {elapsed:.2?}, budget is 10 seconds"));
        }
        Ok(format!(
            "{realized} exhaustive + 1000 random (n <= 40) realizations verified in {elapsed:.2?}, 0 patch failures"
        ))
    });
}

#[test]
fn criterion_6_feasibility_lemma() {
    criterion("criterion 6 (feasibility survives the reduction step)", || {
        let mut reduced = 0usize;
        for n in 1..=6 {
            for d in sequence_space(n, n as u64 + 1) {
                if !reducible(&d) {
                    continue;
                }
                if check_loops_double(&d).passed {
                    reduced += 1;
                    if !feasibility_descends(&d, DegreeConvention::Double).map_err(|e| e.to_string())? {
                        return Err(format!("doubled-degree feasibility lost reducing {d}"));
                    }
                }
                if check_loops_reduced(&d).passed {
                    reduced += 1;
                    if !feasibility_descends(&d, DegreeConvention::Reduced).map_err(|e| e.to_string())? {
                        return Err(format!("reduced-degree feasibility lost reducing {d}"));
                    }
                }
            }
        }

        // beyond the exhaustive window: feasible sequences drawn from random
        // graphs, stripped down to their positive entries
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let mut randomized = 0usize;
        for _ in 0..300 {
            let n = rng.gen_range(2..=30);
            let g = common::random_graph(&mut rng, n, 0.3, 0.5);
            for convention in [DegreeConvention::Double, DegreeConvention::Reduced] {
                let d = g.degrees(convention).strip_trailing_zeros();
                if !reducible(&d) {
                    continue;
                }
                randomized += 1;
                if !feasibility_descends(&d, convention).map_err(|e| e.to_string())? {
                    return Err(format!("feasibility lost reducing random {d}"));
                }
            }
        }
        Ok(format!("{reduced} exhaustive + {randomized} randomized reductions, all stayed feasible"))
    });
}

#[test]
fn criterion_7_cover_degree_preservation() {
    criterion("criterion 7 (covers preserve the right degrees)", || {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut graphs: Vec<_> = (0..200)
            .map(|_| {
                let n = rng.gen_range(0..=12);
                common::random_graph(&mut rng, n, 0.4, 0.5)
            })
            .collect();
        for n in 0..=3 {
            graphs.extend(common::all_graphs(n));
        }
        let count = graphs.len();
        for g in &graphs {
            let tensor = tensor_double_cover(g);
            let (left, right) = tensor.part_degrees();
            if left != g.degrees_reduced() || right != g.degrees_reduced() {
                return Err(format!("tensor cover part degrees differ from reduced degrees on {g:?}"));
            }
            let topo = topological_double_cover(g);
            let mut fibre = g.degree_vector(DegreeConvention::Double);
            fibre.extend(g.degree_vector(DegreeConvention::Double));
            if topo.degree_vector() != fibre {
                return Err(format!("topological cover fibre degrees differ on {g:?}"));
            }
        }

        let mut complete3 = loopgraphs::GraphWithLoops::new(3);
        for a in 0..3 {
            for b in a + 1..3 {
                complete3.add_edge(a, b).unwrap();
            }
            complete3.add_loop(a).unwrap();
        }
        let k33 = tensor_double_cover(&complete3);
        if k33.edge_count() != 9 {
            return Err(format!("cover of the complete graph-with-loops has {} edges", k33.edge_count()));
        }
        let (l, r) = k33.part_degrees();
        if l != ds(&[3, 3, 3]) || r != ds(&[3, 3, 3]) {
            return Err("cover of the complete graph-with-loops is not 3-regular".into());
        }
        Ok(format!("{count} graphs checked; complete-with-loops on 3 vertices covers to K_3,3 with 9 edges, all degrees 3"))
    });
}

#[test]
fn criterion_8_closure_properties() {
    criterion("criterion 8 (reduction and complement keep bipartite feasibility)", || {
        let mut reductions = 0usize;
        let mut complements = 0usize;
        for n in 1..=6 {
            for d in sequence_space(n, n as u64) {
                if !check_gale_ryser_symmetric(&d).passed {
                    continue;
                }
                if reducible(&d) {
                    let (smaller, _) = choudum_reduce(&d).map_err(|e| e.to_string())?;
                    if !check_gale_ryser_symmetric(&smaller).passed {
                        return Err(format!("reduction of {d} to {smaller} lost feasibility"));
                    }
                    reductions += 1;
                }
                let flipped = complement_sequence(&d).map_err(|e| e.to_string())?;
                if !check_gale_ryser_symmetric(&flipped).passed {
                    return Err(format!("complement of {d} to {flipped} lost feasibility"));
                }
                complements += 1;
            }
        }
        Ok(format!("{reductions} reductions and {complements} complements stayed feasible"))
    });
}

#[test]
fn criterion_9_symmetric_realizations() {
    criterion("criterion 9 (symmetric realizations admit the part swap)", || {
        let mut count = 0usize;
        for n in 0..=6 {
            for d in sequence_space(n, n as u64) {
                if !check_gale_ryser_symmetric(&d).passed {
                    continue;
                }
                let b = match symmetric_bipartite_realization(&d) {
                    Ok(b) => b,
                    Err(RealizeError::Infeasible { .. }) => {
                        return Err(format!("{d} passes dominance but was rejected"));
                    }
                    Err(e) => return Err(format!("{d}: {e}")),
                };
                let (left, right) = b.part_degrees();
                if left != d || right != d {
                    return Err(format!("part degrees of the realization of {d} are wrong"));
                }
                if !involution_check(&b).map_err(|e| e.to_string())? {
                    return Err(format!("realization of {d} is not swap-symmetric"));
                }
                count += 1;
            }
        }
        Ok(format!("{count} symmetric realizations verified"))
    });
}

/// Degree identities and complements round out the advertised invariants.
#[test]
fn graph_identities_hold_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let n = rng.gen_range(0..=12);
        let g = common::random_graph(&mut rng, n, 0.4, 0.5);
        let double = g.degree_vector(DegreeConvention::Double);
        let reduced = g.degree_vector(DegreeConvention::Reduced);
        for v in 0..n {
            assert_eq!(double[v], reduced[v] + u64::from(g.has_loop(v)));
        }
        assert!(check_loops_double(&g.degrees_double()).passed);
        assert!(check_loops_reduced(&g.degrees_reduced()).passed);
        assert_eq!(complement_graph(&complement_graph(&g)), g);
    }
}

/// The forward direction of the increment correspondence: graphic sequences
/// become bipartite-feasible after a uniform bump.
#[test]
fn graphic_sequences_increment_to_bipartite_feasible() {
    for n in 0..=6 {
        for d in sequence_space(n, n.saturating_sub(1) as u64) {
            if check_erdos_gallai(&d).passed {
                assert!(
                    check_gale_ryser_symmetric(&increment_all(&d)).passed,
                    "increment of graphic {d} is not bipartite-feasible"
                );
            }
        }
    }
}
