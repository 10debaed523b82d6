//! Brute-force oracles for matchings and expansions.

use std::collections::BTreeSet;
use std::path::PathBuf;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use orbicluster::fixtures::Bundle;
use orbicluster::snakegraph::{Side, Step, Tile};
use orbicluster::{BandGraph, Graph, SnakeGraph, VarTable};
use proptest::prelude::*;

fn bundle() -> Bundle {
    Bundle::load(&PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/orbifolds")).unwrap()
}

/// Every perfect matching, found by trying every subset of edges.
fn subsets(g: &SnakeGraph) -> BTreeSet<Vec<usize>> {
    let n = g.edge_count();
    assert!(n <= 24, "too many edges for subset enumeration");
    let nv = g.vertex_count();
    let ends: Vec<(usize, usize)> = (0..n).map(|e| g.edge_ends(e)).collect();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize * 2 != nv {
            continue;
        }
        let mut seen = vec![false; nv];
        let mut ok = true;
        for (e, &(a, b)) in ends.iter().enumerate() {
            if mask >> e & 1 == 1 {
                if seen[a] || seen[b] {
                    ok = false;
                    break;
                }
                seen[a] = true;
                seen[b] = true;
            }
        }
        if ok {
            out.insert((0..n).filter(|e| mask >> e & 1 == 1).collect());
        }
    }
    out
}

fn band_subsets(b: &BandGraph) -> BTreeSet<Vec<usize>> {
    let (e1, e2) = b.glued_edges();
    subsets(b.base()).into_iter().filter(|m| m.contains(&e1) || m.contains(&e2)).collect()
}

fn point(table: &VarTable, seed: u64) -> (Vec<BigRational>, Vec<BigRational>) {
    let v = |i: usize, k: u64| {
        BigRational::new(BigInt::from(2 + (i as u64 * 7 + k * 13 + seed) % 11), BigInt::from(1 + (i as u64 + k) % 3))
    };
    ((0..table.nx()).map(|i| v(i, 1)).collect(), (0..table.ny()).map(|_| BigRational::one()).collect())
}

/// Sum of edge weights over the matchings, divided by the crossing monomial.
fn weight_sum(
    g: &SnakeGraph,
    table: &VarTable,
    ms: &BTreeSet<Vec<usize>>,
    extra: Option<&str>,
    xs: &[BigRational],
) -> BigRational {
    let x = |l: &str| xs[table.x(l).unwrap()].clone();
    let mut crossing = BigRational::one();
    for t in g.tiles() {
        crossing *= x(&t.label);
    }
    if let Some(l) = extra {
        crossing *= x(l);
    }
    let mut total = BigRational::from_integer(0.into());
    for m in ms {
        let mut w = BigRational::one();
        for &e in m {
            w *= x(g.edge_label(e));
        }
        total += w;
    }
    total / crossing
}

fn small_table(g: &Graph) -> std::sync::Arc<VarTable> {
    orbicluster::cli::graph_table(g)
}

#[test]
fn fixture_snakes_match_subset_enumeration() {
    let b = bundle();
    let mut checked = 0;
    for (name, e) in &b.graphs {
        let table = b.table(&e.triangulation).unwrap();
        let (xs, ys) = point(&table, 3);
        match &e.graph {
            Graph::Snake(g) if g.edge_count() <= 22 => {
                let truth = subsets(g);
                let got: BTreeSet<Vec<usize>> = g.enumerate_matchings().into_iter().map(|m| m.edges).collect();
                assert_eq!(got, truth, "{name}");
                let x = g.expansion(&table).unwrap();
                assert_eq!(x.eval::<BigRational>(&xs, &ys), weight_sum(g, &table, &truth, None, &xs), "{name}");
                checked += 1;
            }
            Graph::Band(bg) if bg.base().edge_count() <= 22 => {
                let truth = band_subsets(bg);
                let got: BTreeSet<Vec<usize>> = bg.enumerate_good_matchings().into_iter().map(|m| m.edges).collect();
                assert_eq!(got, truth, "{name}");
                let x = bg.expansion(&table).unwrap();
                let w = weight_sum(bg.base(), &table, &truth, Some(bg.glue_label()), &xs);
                assert_eq!(x.eval::<BigRational>(&xs, &ys), w, "{name}");
                checked += 1;
            }
            _ => {}
        }
    }
    assert!(checked >= 10, "only {checked} graphs small enough");
}

#[test]
fn straight_and_alternating_counts() {
    let fib = [2usize, 3, 5, 8, 13, 21];
    for (n, &f) in fib.iter().enumerate() {
        let n = n + 1;
        for zig in [false, true] {
            let shape: Vec<Step> = (0..n - 1).map(|i| if zig && i % 2 == 1 { Step::Up } else { Step::Right }).collect();
            let g = chain(n, &shape);
            let want = if zig { n + 1 } else { f };
            assert_eq!(subsets(&g).len(), want, "{n} tiles, alternating {zig}");
            assert_eq!(subsets(&g).len(), g.matching_count());
        }
    }
}

fn chain(n: usize, shape: &[Step]) -> SnakeGraph {
    let mut tiles: Vec<Tile> = Vec::new();
    for i in 0..n {
        let mut t = Tile::new(&format!("t{i}"), "a", "b", "c", "d");
        if i > 0 {
            let prev = &tiles[i - 1];
            match shape[i - 1] {
                Step::Right => t.edges[Side::W.index()] = prev.edges[Side::E.index()].clone(),
                Step::Up => t.edges[Side::S.index()] = prev.edges[Side::N.index()].clone(),
            }
        }
        tiles.push(t);
    }
    SnakeGraph::new(tiles, shape.to_vec()).unwrap()
}

fn arb_snake() -> impl Strategy<Value = SnakeGraph> {
    let labels = ["a", "b", "c", "d"];
    (1usize..6)
        .prop_flat_map(|n| {
            (proptest::collection::vec(0usize..4, n * 4), proptest::collection::vec(any::<bool>(), n - 1))
        })
        .prop_map(move |(ls, dirs)| {
            let n = dirs.len() + 1;
            let shape: Vec<Step> = dirs.iter().map(|&r| if r { Step::Right } else { Step::Up }).collect();
            let mut tiles: Vec<Tile> = Vec::new();
            for i in 0..n {
                let l = |k: usize| labels[ls[4 * i + k]];
                let mut t = Tile::new(["t", "u", "v"][i % 3], l(0), l(1), l(2), l(3));
                if i > 0 {
                    let prev = &tiles[i - 1];
                    match shape[i - 1] {
                        Step::Right => t.edges[Side::W.index()] = prev.edges[Side::E.index()].clone(),
                        Step::Up => t.edges[Side::S.index()] = prev.edges[Side::N.index()].clone(),
                    }
                }
                tiles.push(t);
            }
            SnakeGraph::new(tiles, shape).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_snakes_match_subset_enumeration(g in arb_snake(), seed in 0u64..100) {
        let truth = subsets(&g);
        let got: BTreeSet<Vec<usize>> = g.enumerate_matchings().into_iter().map(|m| m.edges).collect();
        prop_assert_eq!(&got, &truth);
        let graph = Graph::Snake(g.clone());
        let table = small_table(&graph);
        let (xs, ys) = point(&table, seed);
        let x = g.expansion(&table).unwrap();
        prop_assert_eq!(x.eval::<BigRational>(&xs, &ys), weight_sum(&g, &table, &truth, None, &xs));
    }

    #[test]
    fn random_bands_match_subset_enumeration(g in arb_snake(), seed in 0u64..100) {
        let first = g.tiles()[0].edge(Side::W).to_string();
        let last = g.tiles().last().unwrap();
        for side in [Side::N, Side::E] {
            if last.edge(side) != first {
                continue;
            }
            let b = BandGraph::new(g.clone(), Side::W, side).unwrap();
            let truth = band_subsets(&b);
            let got: BTreeSet<Vec<usize>> = b.enumerate_good_matchings().into_iter().map(|m| m.edges).collect();
            prop_assert_eq!(&got, &truth);
            let graph = Graph::Band(b.clone());
            let table = small_table(&graph);
            let (xs, ys) = point(&table, seed);
            let x = b.expansion(&table).unwrap();
            prop_assert_eq!(x.eval::<BigRational>(&xs, &ys), weight_sum(&g, &table, &truth, Some(&first), &xs));
        }
    }
}
