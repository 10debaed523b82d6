//! Triangulated orbifolds with one boundary marked point and orbifold points of
//! weight 1/2, curves given by crossing sequences, and their snake and band graphs.
//!
//! A triangle lists its sides counterclockwise. Two triangles sharing an arc are
//! glued with opposite orientations. A pending arc occurs in a single triangle and
//! is folded onto itself, so crossing it leaves the curve in the same triangle.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::laurent::{ExpVec, Poly, Var, VarTable};
use crate::snakegraph::{BandGraph, Graph, GraphError, Side, SnakeGraph, Step, Tile};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrbifoldError {
    #[error("unsupported parameters genus={0} orbifold_points={1}")]
    Unsupported(usize, usize),
    #[error("invalid triangulation: {0}")]
    Invalid(String),
    #[error("curve does not follow the triangulation: {0}")]
    BadCurve(String),
    #[error("curve crosses no arc")]
    NoCrossings,
    #[error("loop does not close up")]
    NotClosed,
    #[error("semi-closed curve must start and end next to orbifold points")]
    NotSemiClosed,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triangulation {
    pub genus: usize,
    pub orbifold_points: usize,
    pub arcs: Vec<String>,
    pub pending: Vec<String>,
    pub boundary: Vec<String>,
    pub triangles: Vec<[String; 3]>,
}

fn label_order(a: &str, b: &str) -> std::cmp::Ordering {
    match (a.parse::<u64>(), b.parse::<u64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y),
        (Ok(_), Err(_)) => std::cmp::Ordering::Less,
        (Err(_), Ok(_)) => std::cmp::Ordering::Greater,
        _ => a.cmp(b),
    }
}

/// Sorts labels numerically where possible.
pub fn sort_labels(v: &mut [String]) {
    v.sort_by(|a, b| label_order(a, b));
}

/// The triangulation family used throughout: genus `g` handles, `c` orbifold
/// points in a chain of pending triangles, and a single boundary segment `B`.
///
/// Labels 1..6 play fixed roles; extra orbifold points use 7..2c+4 (odd labels
/// separate, even labels are pending) and extra handles continue from there.
pub fn standard_triangulation(g: usize, c: usize) -> Result<Triangulation, OrbifoldError> {
    if g == 0 || g > 64 || c > 64 {
        return Err(OrbifoldError::Unsupported(g, c));
    }
    let mut next = 2 * c + 5;
    let mut fresh = || {
        let l = next.to_string();
        next += 1;
        l
    };
    let top = if c == 0 { "3" } else { "5" };
    let mut tris: Vec<[String; 3]> = vec![["4".into(), "B".into(), top.into()]];
    // handle i has arcs a, b, d, d' and triangles (a, b, d), (d', a, b)
    let mut handles: Vec<[String; 4]> = Vec::new();
    for i in 1..=g {
        let h = if i == g {
            let d = if g == 1 { "3".to_string() } else { fresh() };
            ["1".to_string(), "2".to_string(), d, "4".to_string()]
        } else {
            [fresh(), fresh(), fresh(), fresh()]
        };
        handles.push(h);
    }
    for [a, b, d, dp] in &handles {
        tris.push([a.clone(), b.clone(), d.clone()]);
        tris.push([dp.clone(), a.clone(), b.clone()]);
    }
    if g > 1 {
        // fan triangulation of the polygon d1, d1', ..., dg closed by arc 3
        let mut sides = Vec::new();
        for (i, h) in handles.iter().enumerate() {
            sides.push(h[2].clone());
            if i + 1 < g {
                sides.push(h[3].clone());
            }
        }
        let mut prev = sides[0].clone();
        for s in &sides[1..sides.len() - 1] {
            let f = fresh();
            tris.push([prev.clone(), s.clone(), f.clone()]);
            prev = f;
        }
        tris.push([prev, sides[sides.len() - 1].clone(), "3".into()]);
    }
    let mut seps = vec!["5".to_string()];
    seps.extend((1..c).map(|i| (5 + 2 * i).to_string()));
    seps.push("3".into());
    let mut pending = Vec::new();
    for i in 0..c {
        let tau = (6 + 2 * i).to_string();
        tris.push([seps[i].clone(), seps[i + 1].clone(), tau.clone()]);
        pending.push(tau);
    }
    let mut arcs: Vec<String> = tris.iter().flatten().filter(|s| *s != "B").cloned().collect();
    sort_labels(&mut arcs);
    arcs.dedup();
    let t = Triangulation { genus: g, orbifold_points: c, arcs, pending, boundary: vec!["B".into()], triangles: tris };
    t.validate()?;
    Ok(t)
}

impl Triangulation {
    pub fn validate(&self) -> Result<(), OrbifoldError> {
        let bad = |m: String| Err(OrbifoldError::Invalid(m));
        let pending: BTreeSet<&String> = self.pending.iter().collect();
        let boundary: BTreeSet<&String> = self.boundary.iter().collect();
        let mut count: BTreeMap<&String, Vec<usize>> = BTreeMap::new();
        for (i, t) in self.triangles.iter().enumerate() {
            for s in t {
                count.entry(s).or_default().push(i);
            }
        }
        for a in &self.arcs {
            let occ = count.get(a).cloned().unwrap_or_default();
            if pending.contains(a) {
                if occ.len() != 1 {
                    return bad(format!("pending arc {a} must occur once"));
                }
            } else if occ.len() != 2 || occ[0] == occ[1] {
                return bad(format!("arc {a} must border two distinct triangles"));
            }
        }
        for b in &self.boundary {
            if count.get(b).map(Vec::len) != Some(1) {
                return bad(format!("boundary segment {b} must occur once"));
            }
        }
        for s in count.keys() {
            if !self.arcs.contains(s) && !boundary.contains(s) {
                return bad(format!("side {s} is neither an arc nor a boundary segment"));
            }
        }
        if pending.iter().any(|p| !self.arcs.contains(p)) || pending.len() != self.orbifold_points {
            return bad("pending arcs must be arcs, one per orbifold point".into());
        }
        if self.boundary.len() != 1 {
            return bad("exactly one boundary segment is supported".into());
        }
        if self.arcs.len() != 6 * self.genus + 2 * self.orbifold_points - 2 {
            return bad(format!("{} arcs, expected 6g+2c-2", self.arcs.len()));
        }
        Ok(())
    }

    pub fn is_pending(&self, a: &str) -> bool {
        self.pending.iter().any(|p| p == a)
    }

    pub fn arc_index(&self, a: &str) -> Option<usize> {
        self.arcs.iter().position(|x| x == a)
    }

    fn pos(&self, t: usize, a: &str) -> Option<usize> {
        self.triangles[t].iter().position(|s| s == a)
    }

    /// The triangle entered when crossing `a` out of `t`, and the side index there.
    pub fn across(&self, t: usize, a: &str) -> Result<(usize, usize), OrbifoldError> {
        let i =
            self.pos(t, a).ok_or_else(|| OrbifoldError::BadCurve(format!("arc {a} is not a side of triangle {t}")))?;
        if self.boundary.iter().any(|b| b == a) {
            return Err(OrbifoldError::BadCurve(format!("cannot cross boundary {a}")));
        }
        if self.is_pending(a) {
            return Ok((t, i));
        }
        for (u, tri) in self.triangles.iter().enumerate() {
            if u != t {
                if let Some(j) = tri.iter().position(|s| s == a) {
                    return Ok((u, j));
                }
            }
        }
        Err(OrbifoldError::Invalid(format!("arc {a} has one side only")))
    }

    /// The two sides following `a` counterclockwise in triangle `t`.
    pub fn after(&self, t: usize, a: &str) -> [String; 2] {
        let s = &self.triangles[t];
        let i = self.pos(t, a).expect("side of triangle");
        [s[(i + 1) % 3].clone(), s[(i + 2) % 3].clone()]
    }

    /// The side of `t` other than `a` and `b`.
    pub fn third(&self, t: usize, a: &str, b: &str) -> Result<String, OrbifoldError> {
        let s = &self.triangles[t];
        let rest: Vec<&String> = s.iter().filter(|x| *x != a && *x != b).collect();
        match rest.as_slice() {
            [x] if s.iter().any(|x| x == a) && s.iter().any(|x| x == b) => Ok((*x).clone()),
            _ => Err(OrbifoldError::BadCurve(format!("consecutive crossings {a},{b} do not share triangle {t}"))),
        }
    }

    /// Walks the corners around the boundary marked point, starting and ending at
    /// the boundary segment. Returns the crossed arcs and the triangle before each.
    pub fn boundary_link(&self) -> (Vec<String>, Vec<usize>) {
        let b = &self.boundary[0];
        let tb = self.triangles.iter().position(|t| t.contains(b)).expect("boundary triangle");
        let p = self.pos(tb, b).expect("boundary side");
        let (mut t, mut i) = (tb, (p + 2) % 3);
        let (mut seq, mut tris) = (Vec::new(), Vec::new());
        loop {
            let s = self.triangles[t][i].clone();
            if &s == b {
                break;
            }
            let (t2, j) = self.across(t, &s).expect("valid triangulation");
            seq.push(s);
            tris.push(t);
            t = t2;
            i = (j + 2) % 3;
        }
        (seq, tris)
    }

    pub fn boundary_triangle(&self) -> usize {
        let b = &self.boundary[0];
        self.triangles.iter().position(|t| t.contains(b)).expect("boundary triangle")
    }

    /// Variables x for arcs and boundary segments, y for arcs.
    pub fn var_table(&self) -> Arc<VarTable> {
        let xs: Vec<String> = self.arcs.iter().chain(&self.boundary).cloned().collect();
        VarTable::new(xs, self.arcs.clone()).expect("labels are unique")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveKind {
    Arc,
    Loop,
    SemiClosed,
}

/// A curve given by the triangle it starts in and the arcs it crosses.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Curve {
    pub kind: CurveKind,
    pub start: usize,
    pub crossings: Vec<String>,
    /// For an arc of the triangulation itself, its label.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arc: Option<String>,
}

impl Curve {
    pub fn arc(start: usize, crossings: &[&str]) -> Self {
        Curve { kind: CurveKind::Arc, start, crossings: crossings.iter().map(|s| s.to_string()).collect(), arc: None }
    }

    pub fn closed(start: usize, crossings: &[&str]) -> Self {
        Curve { kind: CurveKind::Loop, start, crossings: crossings.iter().map(|s| s.to_string()).collect(), arc: None }
    }

    pub fn from_vec(kind: CurveKind, start: usize, crossings: Vec<String>) -> Self {
        Curve { kind, start, crossings, arc: None }
    }

    /// The curve traversed `k` times; loops only.
    pub fn power(&self, k: usize) -> Curve {
        Curve {
            crossings: self.crossings.iter().cloned().cycle().take(k * self.crossings.len()).collect(),
            ..self.clone()
        }
    }
}

/// Triangles visited: entry `j` is the triangle before crossing `j`, the last entry
/// the triangle after the final crossing.
pub fn walk(t: &Triangulation, c: &Curve) -> Result<Vec<usize>, OrbifoldError> {
    if c.start >= t.triangles.len() {
        return Err(OrbifoldError::BadCurve(format!("no triangle {}", c.start)));
    }
    let mut ts = vec![c.start];
    for (j, a) in c.crossings.iter().enumerate() {
        if j > 0 && &c.crossings[j - 1] == a && !t.is_pending(a) {
            return Err(OrbifoldError::BadCurve(format!("crossing {a} twice in a row")));
        }
        let (u, _) = t.across(*ts.last().expect("nonempty"), a)?;
        ts.push(u);
    }
    Ok(ts)
}

const POS: [Side; 4] = [Side::S, Side::E, Side::N, Side::W];

struct Placed {
    tiles: Vec<Tile>,
    dirs: Vec<Step>,
}

/// Places one tile per crossing. Tile orientation alternates; the first tile puts
/// the two sides of the start triangle on its W and S edges.
fn place(t: &Triangulation, cr: &[String], ts: &[usize], closed: bool) -> Result<Placed, OrbifoldError> {
    let d = cr.len();
    let mut tiles = Vec::with_capacity(d);
    let mut dirs: Vec<Step> = Vec::with_capacity(d);
    for j in 0..d {
        let a = &cr[j];
        let [q0, q1] = t.after(ts[j], a);
        let [q2, q3] = t.after(ts[j + 1], a);
        let q = [q0, q1, q2, q3];
        let o: i32 = if j % 2 == 0 { 1 } else { -1 };
        let base: i32 = if j == 0 {
            3
        } else {
            let il = t.third(ts[j], a, &cr[j - 1])?;
            let ink = (0..2).find(|&k| q[k] == il).ok_or_else(|| OrbifoldError::BadCurve("entry side".into()))? as i32;
            let inpos = if dirs[j - 1] == Step::Right { 3 } else { 0 };
            (inpos - o * ink).rem_euclid(4)
        };
        let at = |k: i32| POS[(base + o * k).rem_euclid(4) as usize];
        let mut edges: [String; 4] = Default::default();
        for (k, l) in q.iter().enumerate() {
            edges[at(k as i32).index()] = l.clone();
        }
        let next = if j + 1 < d {
            Some(&cr[j + 1])
        } else if closed {
            Some(&cr[0])
        } else {
            None
        };
        if let Some(n) = next {
            let ol = t.third(ts[j + 1], a, n)?;
            let outk = (2..4).find(|&k| q[k] == ol).ok_or_else(|| OrbifoldError::BadCurve("exit side".into()))?;
            let dir = match at(outk as i32) {
                Side::E => Step::Right,
                Side::N => Step::Up,
                s => return Err(OrbifoldError::BadCurve(format!("exit edge landed on {s:?}"))),
            };
            dirs.push(dir);
        }
        tiles.push(Tile { label: a.clone(), edges });
    }
    Ok(Placed { tiles, dirs })
}

pub fn snake_graph_of(t: &Triangulation, c: &Curve) -> Result<SnakeGraph, OrbifoldError> {
    if c.crossings.is_empty() {
        return Err(OrbifoldError::NoCrossings);
    }
    let ts = walk(t, c)?;
    let p = place(t, &c.crossings, &ts, false)?;
    Ok(SnakeGraph::new(p.tiles, p.dirs)?)
}

pub fn band_graph_of(t: &Triangulation, c: &Curve) -> Result<BandGraph, OrbifoldError> {
    if c.crossings.is_empty() {
        return Err(OrbifoldError::NoCrossings);
    }
    let ts = walk(t, c)?;
    if ts[ts.len() - 1] != c.start {
        return Err(OrbifoldError::NotClosed);
    }
    let d = c.crossings.len();
    let mut p = place(t, &c.crossings, &ts, true)?;
    let closing = p.dirs.pop().expect("closed placement has a closing step");
    let il = t.third(ts[0], &c.crossings[0], &c.crossings[d - 1])?;
    let first = if t.after(ts[0], &c.crossings[0])[1] == il { Side::S } else { Side::W };
    let last = if closing == Step::Right { Side::E } else { Side::N };
    let base = SnakeGraph::new(p.tiles, p.dirs)?;
    Ok(BandGraph::new(base, first, last)?)
}

/// The enclosing loop of a semi-closed curve: around the first orbifold point,
/// along the curve, around the second one, and back.
pub fn perturbation(t: &Triangulation, c: &Curve) -> Result<Curve, OrbifoldError> {
    if c.kind != CurveKind::SemiClosed || c.crossings.is_empty() {
        return Err(OrbifoldError::NotSemiClosed);
    }
    let ts = walk(t, c)?;
    let pend = |tri: usize| t.triangles[tri].iter().find(|s| t.is_pending(s)).cloned();
    let p = pend(c.start).ok_or(OrbifoldError::NotSemiClosed)?;
    let q = pend(ts[ts.len() - 1]).ok_or(OrbifoldError::NotSemiClosed)?;
    let mut cr = vec![p];
    cr.extend(c.crossings.iter().cloned());
    cr.push(q);
    cr.extend(c.crossings.iter().rev().cloned());
    Ok(Curve::from_vec(CurveKind::Loop, c.start, cr))
}

/// The graph of any curve: an edge for arcs of the triangulation, a snake graph
/// for other arcs, a band graph for loops and semi-closed curves.
pub fn graph_of(t: &Triangulation, c: &Curve) -> Result<Graph, OrbifoldError> {
    match c.kind {
        CurveKind::Arc if c.crossings.is_empty() => match &c.arc {
            Some(a) => Ok(Graph::Edge(a.clone())),
            None => Err(OrbifoldError::NoCrossings),
        },
        CurveKind::Arc => Ok(Graph::Snake(snake_graph_of(t, c)?)),
        CurveKind::Loop => Ok(Graph::Band(band_graph_of(t, c)?)),
        CurveKind::SemiClosed => Ok(Graph::Band(band_graph_of(t, &perturbation(t, c)?)?)),
    }
}

pub fn expansion_of(t: &Triangulation, table: &Arc<VarTable>, c: &Curve) -> Result<Poly, OrbifoldError> {
    Ok(graph_of(t, c)?.expansion(table)?)
}

pub fn semi_closed_expansion(t: &Triangulation, table: &Arc<VarTable>, c: &Curve) -> Result<Poly, OrbifoldError> {
    if c.kind != CurveKind::SemiClosed {
        return Err(OrbifoldError::NotSemiClosed);
    }
    expansion_of(t, table, c)
}

/// Rewrites crossings of a one-orbifold-point curve for `c` orbifold points: the
/// pending crossing 6 becomes 6,7,...,2c+4 and a passage 3,5 becomes 3,2c+3,...,7,5.
pub fn extend_zigzag(crossings: &[&str], c: usize) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for (i, &a) in crossings.iter().enumerate() {
        let prev = if i > 0 { Some(crossings[i - 1]) } else { None };
        let next = crossings.get(i + 1).copied();
        if a == "6" {
            if prev == Some("3") && next == Some("5") {
                out.extend((6..=2 * c + 4).rev().map(|k| k.to_string()));
            } else {
                out.extend((6..=2 * c + 4).map(|k| k.to_string()));
            }
            continue;
        }
        let between = |x: &str, y: &str| (x == "3" && y == "5") || (x == "5" && y == "3");
        if let Some(p) = prev {
            if between(p, a) {
                let mut mids: Vec<String> = (0..c - 1).map(|k| (7 + 2 * k).to_string()).collect();
                if p == "3" {
                    mids.reverse();
                }
                out.extend(mids);
            }
        }
        out.push(a.to_string());
    }
    out
}

/// The curves built from the walk around the boundary marked point.
#[derive(Debug, Clone)]
pub struct BoundaryCurves {
    /// Arc along the first part of the walk, back to the boundary triangle.
    pub u: Curve,
    /// Arc along the rest of the walk.
    pub v: Curve,
    /// Arc along the whole walk.
    pub k: Curve,
    /// The loop around the boundary.
    pub l: Curve,
    pub s: Curve,
    pub t: Curve,
    pub x: Curve,
    pub y: Curve,
}

pub fn boundary_curves(t: &Triangulation) -> Result<BoundaryCurves, OrbifoldError> {
    let (seq, tris) = t.boundary_link();
    let tb = t.boundary_triangle();
    let n = seq.len();
    let split = (0..n)
        .find(|&i| tris.get(i + 1) == Some(&tb))
        .ok_or_else(|| OrbifoldError::Invalid("the walk never returns to the boundary triangle".into()))?
        + 1;
    let (us, vs) = seq.split_at(split);
    if us.len() < 3 || vs.len() < 3 {
        return Err(OrbifoldError::Invalid("walk too short".into()));
    }
    let arc = |start: usize, s: &[String]| Curve::from_vec(CurveKind::Arc, start, s.to_vec());
    let closed = |start: usize, s: &[String]| Curve::from_vec(CurveKind::Loop, start, s.to_vec());
    Ok(BoundaryCurves {
        u: arc(tb, us),
        v: arc(tb, vs),
        k: arc(tb, &seq),
        l: closed(tb, &seq),
        s: arc(tb, &us[..us.len() - 1]),
        t: arc(tris[split + 1], &vs[1..]),
        x: closed(tris[1], &us[1..us.len() - 1]),
        y: closed(tris[split + 1], &vs[1..vs.len() - 1]),
    })
}

/// Product of y-variables over the given crossings.
pub fn y_product(table: &Arc<VarTable>, labels: &[String]) -> Result<Poly, OrbifoldError> {
    let mut e = ExpVec::zero(table);
    for l in labels {
        let i = table.y(l).ok_or_else(|| GraphError::UnknownLabel(l.clone()))?;
        e.bump(Var::Y(i), 1);
    }
    Ok(Poly::monomial(table, e, 1.into()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisKind {
    Bangle,
    Band,
    Bracelet,
}

#[derive(Debug, Clone)]
pub struct BasisElement {
    pub kind: BasisKind,
    pub components: Vec<(Curve, usize)>,
    pub value: Poly,
}

/// Product of the expansions of compatible curves, with multiplicity.
pub fn bangle(
    t: &Triangulation,
    table: &Arc<VarTable>,
    elts: &[(Curve, usize)],
) -> Result<BasisElement, OrbifoldError> {
    let mut value = Poly::one(table);
    for (c, m) in elts {
        value = &value * &expansion_of(t, table, c)?.pow(*m as u32);
    }
    let kind = if elts.iter().all(|(c, _)| c.kind == CurveKind::Loop) && elts.len() == 1 && elts[0].1 == 1 {
        BasisKind::Band
    } else {
        BasisKind::Bangle
    };
    Ok(BasisElement { kind, components: elts.to_vec(), value })
}

/// Chebyshev-type recursion `T_1 = z`, `T_2 = z^2 - 2h`, `T_k = z T_{k-1} - h T_{k-2}`.
pub fn chebyshev(z: &Poly, h: &Poly, k: usize) -> Poly {
    let two = Poly::constant(z.table(), 2.into());
    let (mut prev, mut cur) = (two, z.clone());
    for _ in 1..k {
        let next = &(z * &cur) - &(h * &prev);
        prev = cur;
        cur = next;
    }
    cur
}

pub fn bracelet(t: &Triangulation, table: &Arc<VarTable>, c: &Curve, k: usize) -> Result<BasisElement, OrbifoldError> {
    if k == 0 || c.kind != CurveKind::Loop {
        return Err(OrbifoldError::BadCurve("bracelets need a loop and k >= 1".into()));
    }
    let band = band_graph_of(t, c)?;
    let z = band.expansion(table)?;
    let h = band.tile_monomial(table)?;
    Ok(BasisElement { kind: BasisKind::Bracelet, components: vec![(c.clone(), k)], value: chebyshev(&z, &h, k) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn genus_one() -> (Triangulation, Arc<VarTable>) {
        let t = standard_triangulation(1, 1).unwrap();
        let v = t.var_table();
        (t, v)
    }

    fn tri(t: &Triangulation, sides: [&str; 3]) -> usize {
        t.triangles.iter().position(|s| (0..3).any(|r| (0..3).all(|i| s[(i + r) % 3] == sides[i]))).unwrap()
    }

    #[test]
    fn genus_one_layout() {
        let (t, _) = genus_one();
        assert_eq!(t.arcs, ["1", "2", "3", "4", "5", "6"]);
        assert_eq!(t.pending, ["6"]);
        for s in [["4", "B", "5"], ["4", "1", "2"], ["1", "2", "3"], ["5", "3", "6"]] {
            tri(&t, s);
        }
        let (seq, _) = t.boundary_link();
        assert_eq!(seq.join(""), "42145632135");
    }

    #[test]
    fn arc_counts() {
        for g in 1..=3 {
            for c in 1..=4 {
                let t = standard_triangulation(g, c).unwrap();
                assert_eq!(t.arcs.len(), 6 * g + 2 * c - 2);
            }
        }
        assert!(standard_triangulation(0, 1).is_err());
    }

    #[test]
    fn first_factor_graph() {
        let (t, _) = genus_one();
        let u = Curve::arc(tri(&t, ["4", "B", "5"]), &["4", "2", "1", "4"]);
        let g = snake_graph_of(&t, &u).unwrap();
        assert_eq!(g.tile_labels(), ["4", "2", "1", "4"]);
        assert_eq!(g.tiles()[0].edge(Side::W), "B");
        assert_eq!(g.tiles()[0].edge(Side::S), "5");
    }

    #[test]
    fn pending_crossing_is_one_tile() {
        let (t, table) = genus_one();
        let c = Curve::arc(tri(&t, ["5", "3", "6"]), &["6"]);
        let g = snake_graph_of(&t, &c).unwrap();
        assert_eq!(g.len(), 1);
        let tile = &g.tiles()[0];
        assert_eq!(tile.edge(Side::S), tile.edge(Side::N));
        assert_eq!(tile.edge(Side::E), tile.edge(Side::W));
        let x = g.expansion(&table).unwrap();
        assert_eq!(x, Poly::parse(&table, "x_3^2 * x_6^-1 + x_5^2 * x_6^-1 * y_6").unwrap());
    }

    #[test]
    fn zigzag_rule_matches_walk() {
        for c in 2..=4 {
            let t = standard_triangulation(1, c).unwrap();
            let bc = boundary_curves(&t).unwrap();
            assert_eq!(bc.v.crossings, extend_zigzag(&["5", "6", "3", "2", "1", "3", "5"], c));
            assert_eq!(bc.u.crossings, ["4", "2", "1", "4"]);
        }
    }

    #[test]
    fn loops_must_close() {
        let (t, _) = genus_one();
        let c = Curve::closed(tri(&t, ["1", "2", "3"]), &["1"]);
        assert_eq!(band_graph_of(&t, &c), Err(OrbifoldError::NotClosed));
        let bad = Curve::arc(0, &["1"]);
        assert!(matches!(snake_graph_of(&t, &bad), Err(OrbifoldError::BadCurve(_))));
        assert_eq!(snake_graph_of(&t, &Curve::arc(0, &[])), Err(OrbifoldError::NoCrossings));
    }

    #[test]
    fn chebyshev_small_cases() {
        let table = VarTable::new(["z"], ["h"]).unwrap();
        let z = Poly::x(&table, "z").unwrap();
        let h = Poly::y(&table, "h").unwrap();
        assert_eq!(chebyshev(&z, &h, 1), z);
        assert_eq!(chebyshev(&z, &h, 2), Poly::parse(&table, "x_z^2 - 2 * y_h").unwrap());
        assert_eq!(chebyshev(&z, &h, 3), Poly::parse(&table, "x_z^3 - 3 * x_z * y_h").unwrap());
    }
}
