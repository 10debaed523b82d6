//! Writes the fixture bundle used by the test suite.
//!
//! Usage: `cargo run --example gen_fixtures -- fixtures/orbifolds`

use std::collections::BTreeMap;
use std::path::PathBuf;

use orbicluster::calculus::{boundary_resolution, Heights, IdentityJson, TermJson, Verifier};
use orbicluster::fixtures::{
    Bundle, Conditions, CurveEntry, DrawnEntry, FlipEntry, GraphEntry, IdentityFile, ManifestEntry, Provenance,
};
use orbicluster::laurent::{Poly, Var};
use orbicluster::orbifold::{boundary_curves, graph_of, standard_triangulation, Curve, CurveKind, Triangulation};

const TILDE: &str = "y_1 * y_2 * y_3^2 * y_5 * y_6";

fn tri(t: &Triangulation, sides: [&str; 3]) -> usize {
    t.triangles.iter().position(|s| (0..3).any(|r| (0..3).all(|i| s[(i + r) % 3] == sides[i]))).expect("triangle")
}

fn term(y: &str, factors: &[&str]) -> TermJson {
    TermJson { y: y.to_string(), factors: factors.iter().map(|s| s.to_string()).collect() }
}

fn mul(a: &str, b: &str) -> String {
    match (a, b) {
        ("1", b) => b.to_string(),
        (a, "1") => a.to_string(),
        _ => format!("{a} * {b}"),
    }
}

type Terms = Vec<TermJson>;

fn published(source: &str) -> ManifestEntry {
    ManifestEntry { provenance: Provenance::Published, source: source.to_string() }
}

fn derived(source: &str) -> ManifestEntry {
    ManifestEntry { provenance: Provenance::Derived, source: source.to_string() }
}

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "fixtures/orbifolds".into()));
    let mut b = Bundle::default();

    let g1 = standard_triangulation(1, 1).expect("genus 1");
    b.manifest.insert("triangulation:genus1".into(), published("drawn triangulation of the genus one orbifold"));
    b.triangulations.insert("genus1".into(), g1.clone());
    for (name, g, c) in [("genus2", 2, 1), ("two-points", 1, 2)] {
        b.triangulations.insert(name.into(), standard_triangulation(g, c).expect("standard"));
        b.manifest.insert(
            format!("triangulation:{name}"),
            derived(&format!("standard_triangulation({g}, {c}): handles fanned around arc 3, pending chain at arc 5")),
        );
    }

    let tb = tri(&g1, ["4", "B", "5"]);
    let t1 = tri(&g1, ["1", "2", "3"]);
    let t2 = tri(&g1, ["4", "1", "2"]);
    let to = tri(&g1, ["5", "3", "6"]);
    let arcs: [(&str, usize, &str); 17] = [
        ("U", tb, "4214"),
        ("V", tb, "5632135"),
        ("K", tb, "42145632135"),
        ("S", tb, "421"),
        ("T", to, "632135"),
        ("C", t2, "135"),
        ("D", tb, "42"),
        ("E", t2, "13542"),
        ("G", tb, "5312"),
        ("H", t1, "354"),
        ("arc-5", tb, "5"),
        ("M", tb, "4236"),
        ("N", t2, "1354236"),
        ("arc-3-6", t1, "36"),
        ("Qb", t2, "136324"),
        ("R", t2, "4563"),
        ("P", tb, "41363"),
    ];
    let loops: [(&str, usize, &str); 5] =
        [("L", tb, "42145632135"), ("X", t1, "12"), ("Y", to, "63213"), ("F", t2, "1354"), ("I", t1, "24563")];
    let split = |s: &str| s.chars().map(|c| c.to_string()).collect::<Vec<_>>();
    let mut curves: Vec<(String, String, Curve)> = Vec::new();
    for (n, start, cr) in arcs {
        curves.push((n.into(), "genus1".into(), Curve::from_vec(CurveKind::Arc, start, split(cr))));
    }
    for (n, start, cr) in loops {
        curves.push((n.into(), "genus1".into(), Curve::from_vec(CurveKind::Loop, start, split(cr))));
    }
    for (n, tname, c) in &curves {
        b.manifest
            .insert(format!("curve:{n}"), published("crossing sequence read off the drawn arcs and snake graphs"));
        b.curves.insert(n.clone(), CurveEntry { triangulation: tname.clone(), curve: c.clone() });
    }
    for tname in ["genus2", "two-points"] {
        let t = &b.triangulations[tname].clone();
        let bc = boundary_curves(t).expect("boundary curves");
        for (n, c) in
            [("U", bc.u), ("V", bc.v), ("K", bc.k), ("L", bc.l), ("S", bc.s), ("T", bc.t), ("X", bc.x), ("Y", bc.y)]
        {
            let name = format!("{tname}.{n}");
            b.manifest
                .insert(format!("curve:{name}"), derived("boundary_curves: walk around the boundary marked point"));
            b.curves.insert(name, CurveEntry { triangulation: tname.into(), curve: c });
        }
    }
    for (n, c) in b.curves.clone() {
        let t = &b.triangulations[&c.triangulation];
        let g = graph_of(t, &c.curve).expect("graph of curve");
        b.manifest.insert(format!("graph:{n}"), derived("graph_of applied to the curve of the same name"));
        b.graphs.insert(n, GraphEntry { triangulation: c.triangulation, graph: g });
    }

    let flips: [(&str, &[usize]); 10] = [
        ("U", &[3, 0, 3, 1, 3]),
        ("V", &[2, 4, 0, 5, 1, 2]),
        ("D", &[1, 3]),
        ("C", &[4, 2, 0]),
        ("arc-3-6", &[5, 2]),
        ("arc-5", &[4]),
        ("H", &[4, 2, 3, 4]),
        ("R", &[3, 5, 2, 4]),
        ("P", &[2, 0, 3, 5, 2]),
        ("M", &[1, 3, 1, 2, 5, 2]),
    ];
    for (n, seq) in flips {
        b.manifest
            .insert(format!("flips:{n}"), derived("breadth-first search over flips at a random point mod 2^61-1"));
        b.flips.insert(
            n.into(),
            FlipEntry { curve: n.into(), sequence: seq.to_vec(), position: *seq.last().expect("nonempty") },
        );
    }

    // relations around the boundary loop, with B formal
    let t_uv = term("y_5", &["S", "T"]);
    let resolved_uv = |bb: &[&'static str]| -> Terms {
        let with = |fs: &[&'static str]| -> Vec<&'static str> { fs.iter().chain(bb).copied().collect() };
        let mut l = vec!["L"];
        l.extend(bb);
        l.extend(bb);
        vec![
            term("1", &l),
            term("y_4 * y_5", &[with(&["X", "Y"]), bb.to_vec()].concat()),
            term(&mul("y_4 * y_5", TILDE), &with(&["X", "edge:4"])),
            term("y_5", &with(&["edge:5", "Y"])),
            term(&mul("y_5", TILDE), &["edge:5", "edge:4"]),
        ]
    };
    let b_ = &["edge:B"][..];
    let cd_resolved = |bb: &[&'static str]| -> Terms {
        let with = |fs: &[&'static str]| -> Vec<&'static str> { fs.iter().chain(bb).copied().collect() };
        vec![
            term("y_1", &with(&["H"])),
            term("1", &with(&["edge:5"])),
            term("y_4", &[with(&["X"]), vec!["edge:B"]].concat()),
            term("y_1 * y_2 * y_3 * y_4", &with(&["arc-5"])),
            term("y_1 * y_3 * y_5", &["edge:2", "edge:1"]),
        ]
    };
    let ids: Vec<(&str, Terms, Terms, &str)> = vec![
        ("uv-graft", vec![term("1", &["U", "V"])], vec![term("1", &["K", "edge:B"]), t_uv.clone()], "grafting at B"),
        ("k-closure", vec![term("1", &["K"])], vec![term("1", &["L", "edge:B"])], "self-grafting at B"),
        (
            "s-self-graft",
            vec![term("1", &["S"])],
            vec![term("y_4", &["X", "edge:B"]), term("1", &["edge:5"])],
            "self-grafting at 4",
        ),
        (
            "t-self-graft",
            vec![term("1", &["T"])],
            vec![term("1", &["Y", "edge:B"]), term(TILDE, &["edge:4"])],
            "self-grafting at 5",
        ),
        ("uv-resolved", vec![term("1", &["U", "V"])], resolved_uv(b_), "composite of the four relations above"),
        (
            "cd-graft",
            vec![term("1", &["C", "D"])],
            vec![term("1", &["E", "edge:B"]), term("y_1 * y_3 * y_5", &["edge:2", "edge:1"])],
            "grafting at B",
        ),
        (
            "cd-split",
            vec![term("1", &["C", "D"])],
            vec![
                term("1", &["F", "edge:1", "edge:B"]),
                term("y_4", &["G", "edge:B"]),
                term("y_1 * y_3 * y_5", &["edge:2", "edge:1"]),
            ],
            "smoothing of a self-crossing",
        ),
        (
            "f-resolve",
            vec![term("1", &["F", "edge:1"])],
            vec![term("y_1", &["H"]), term("1", &["edge:5"])],
            "grafting with 1",
        ),
        (
            "g-resolve",
            vec![term("1", &["G"])],
            vec![term("1", &["X", "edge:B"]), term("y_1 * y_2 * y_3", &["arc-5"])],
            "self-grafting",
        ),
        ("cd-resolved", vec![term("1", &["C", "D"])], cd_resolved(b_), "composite of the three relations above"),
        (
            "cm-graft",
            vec![term("1", &["C", "M"])],
            vec![term("1", &["N", "edge:B"]), term("y_1 * y_3 * y_5", &["edge:2", "arc-3-6"])],
            "grafting at B",
        ),
        (
            "n-split",
            vec![term("1", &["N"])],
            vec![term("y_1 * y_3", &["I", "edge:2"]), term("1", &["Qb"])],
            "self-grafting",
        ),
        (
            "i-resolve",
            vec![term("1", &["I", "edge:2"])],
            vec![term("1", &["R"]), term("y_2 * y_3 * y_4 * y_5 * y_6", &["edge:4"])],
            "grafting with 2",
        ),
        (
            "qb-resolve",
            vec![term("1", &["Qb"])],
            vec![term("y_4", &["Y", "edge:B"]), term("1", &["P"])],
            "self-grafting",
        ),
        (
            "cm-resolved",
            vec![term("1", &["C", "M"])],
            vec![
                term("y_1 * y_3", &["R", "edge:B"]),
                term("y_1 * y_2 * y_3^2 * y_4 * y_5 * y_6", &["edge:4", "edge:B"]),
                term("y_4", &["Y", "edge:B", "edge:B"]),
                term("1", &["P", "edge:B"]),
                term("y_1 * y_3 * y_5", &["edge:2", "arc-3-6"]),
            ],
            "composite of the four relations above",
        ),
    ];
    for (name, lhs, rhs, what) in ids {
        let f = IdentityFile { triangulation: "genus1".into(), identity: IdentityJson { name: name.into(), lhs, rhs } };
        let (table, id) = b.resolve(&f).expect("resolves");
        assert!(Verifier::new(&table).verify(&id).expect("verifies").holds(), "{name} must verify");
        b.manifest.insert(
            format!("identity:{name}"),
            ManifestEntry {
                provenance: Provenance::Published,
                source: format!("drawn relation ({what}); coefficients and B factors as forced by exact verification"),
            },
        );
        b.identities.insert(name.into(), f);
    }

    for tname in ["genus2", "two-points"] {
        let t = b.triangulations[tname].clone();
        let table = t.var_table();
        let r = boundary_resolution(&t).expect("resolution");
        let graphs = b.graphs_of(tname);
        let name_of = |g: &orbicluster::Graph| graphs.iter().find(|(_, h)| *h == g).map(|(n, _)| n.clone());
        for id in [r.graft, r.closure, r.s, r.t, r.resolved] {
            let name = format!("{tname}-{}", id.name);
            let mut j = id.to_json(&table, name_of).expect("named graphs");
            j.name = name.clone();
            b.manifest.insert(
                format!("identity:{name}"),
                derived("boundary_resolution: graft and self_graft search with exactly fitted coefficients"),
            );
            b.identities.insert(name, IdentityFile { triangulation: tname.into(), identity: j });
        }
    }

    // relations exactly as drawn
    let drawn: Vec<(&str, &str, Terms, Terms)> = vec![
        ("uv-resolved", "uv-resolved", vec![term("1", &["U", "V"])], resolved_uv(&[])),
        ("uv-graft", "uv-graft", vec![term("1", &["U", "V"])], vec![term("1", &["K"]), t_uv]),
        (
            "cd-graft",
            "cd-graft",
            vec![term("1", &["C", "D"])],
            vec![term("1", &["E"]), term("y_1 * y_3 * y_5", &["edge:2", "edge:1"])],
        ),
        (
            "cd-split",
            "cd-split",
            vec![term("1", &["C", "D"])],
            vec![term("1", &["F", "edge:1"]), term("y_4", &["G"]), term("y_1 * y_3 * y_5", &["edge:2", "edge:1"])],
        ),
        ("cd-resolved", "cd-resolved", vec![term("1", &["C", "D"])], cd_resolved(&[])),
        (
            "cm-graft",
            "cm-graft",
            vec![term("1", &["C", "M"])],
            vec![term("1", &["N"]), term("y_1 * y_3 * y_5", &["edge:2", "arc-3-6"])],
        ),
        ("n-split", "n-split", vec![term("1", &["N"])], vec![term("1", &["I", "edge:2"]), term("y_5", &["Qb"])]),
        (
            "i-resolve",
            "i-resolve",
            vec![term("1", &["I", "edge:2"])],
            vec![term("y_2", &["R"]), term("1", &["edge:4"])],
        ),
        ("qb-resolve", "qb-resolve", vec![term("1", &["Qb"])], vec![term("1", &["Y", "edge:B"]), term("y_2", &["P"])]),
    ];
    let conditions = [
        Conditions { heights: Heights::Minimal, unit: vec![] },
        Conditions { heights: Heights::Minimal, unit: vec!["B".into()] },
        Conditions { heights: Heights::Maximal, unit: vec![] },
        Conditions { heights: Heights::Maximal, unit: vec!["B".into()] },
    ];
    for (name, of, lhs, rhs) in drawn {
        let mut d = DrawnEntry {
            triangulation: "genus1".into(),
            lhs,
            rhs,
            reading_of: of.into(),
            holds_with: Conditions::default(),
        };
        b.drawn.insert(name.into(), d.clone());
        let (table, id) = b.resolve_drawn(name).expect("resolves");
        let found = conditions.iter().find(|c| {
            let mut v = Verifier::with_heights(&table, c.heights);
            let (l, r) = v.sides(&id).expect("expands");
            let map: BTreeMap<Var, Poly> =
                c.unit.iter().map(|u| (Var::X(table.x(u).expect("label")), Poly::one(&table))).collect();
            l.substitute(&map).expect("unit") == r.substitute(&map).expect("unit")
        });
        match found {
            Some(c) => {
                d.holds_with = c.clone();
                eprintln!("{name}: holds with {:?}", c);
            }
            None => panic!("drawing {name} holds under none of the tried conditions"),
        }
        b.drawn.insert(name.into(), d);
        b.manifest.insert(
            format!("drawn:{name}"),
            published("relation as drawn; holds_with found by trying both height conventions and B = 1"),
        );
    }

    b.check().expect("consistent bundle");
    b.save(&dir).expect("write");
    eprintln!("wrote {}", dir.display());
}
