use loopgraphs::GraphWithLoops;
use rand::Rng;

/// Random graph-with-loops on `n` vertices with independent edge and loop
/// probabilities.
pub fn random_graph(rng: &mut impl Rng, n: usize, edge_p: f64, loop_p: f64) -> GraphWithLoops {
    let mut g = GraphWithLoops::new(n);
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(edge_p) {
                g.add_edge(a, b).unwrap();
            }
        }
        if rng.gen_bool(loop_p) {
            g.add_loop(a).unwrap();
        }
    }
    g
}

/// Every graph-with-loops on `n` labeled vertices; feasible for small `n`
/// only (`2^(n(n+1)/2)` graphs).
pub fn all_graphs(n: usize) -> Vec<GraphWithLoops> {
    let mut slots = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            slots.push((a, Some(b)));
        }
    }
    for v in 0..n {
        slots.push((v, None));
    }
    (0u32..(1 << slots.len()))
        .map(|mask| {
            let mut g = GraphWithLoops::new(n);
            for (i, &(a, b)) in slots.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    match b {
                        Some(b) => g.add_edge(a, b).unwrap(),
                        None => g.add_loop(a).unwrap(),
                    }
                }
            }
            g
        })
        .collect()
}
