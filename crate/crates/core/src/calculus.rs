//! Identities between products of snake graph, band graph and edge expansions:
//! an exact verifier, and constructive grafting and self-grafting.
//!
//! Constructive operations do not re-derive coefficients from the general theory.
//! They search a bounded family of right-hand sides (end runs, sub-runs, closures and
//! at most two extra edges per term), filter candidates numerically, and fit the
//! y-monomials exactly.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::laurent::{monomial_text, ExpVec, LaurentError, Poly, Var, VarTable};
use crate::modp::Fp;
use crate::orbifold::{boundary_curves, graph_of, Curve, Triangulation};
use crate::snakegraph::{BandGraph, Graph, GraphError, SnakeGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CalculusError {
    #[error("no graftable edge labeled `{0}`")]
    NoGraftableEdge(String),
    #[error("no self-grafting locus labeled `{0}`")]
    NoSelfGraftLocus(String),
    #[error("pattern not supported: {0}")]
    PatternNotSupported(String),
    #[error("term coefficient `{0}` is not a y-monomial with coefficient 1")]
    BadCoefficient(String),
    #[error("unknown graph reference `{0}`")]
    UnknownGraph(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// A y-monomial times a product of graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub y: ExpVec,
    pub factors: Vec<Graph>,
}

impl Term {
    pub fn new(y: ExpVec, factors: Vec<Graph>) -> Self {
        Term { y, factors }
    }

    pub fn plain(table: &VarTable, factors: Vec<Graph>) -> Self {
        Term { y: ExpVec::zero(table), factors }
    }

    /// Parses a coefficient such as `y_1 * y_3^2` or `1`.
    pub fn coefficient(table: &Arc<VarTable>, s: &str) -> Result<ExpVec, CalculusError> {
        let p = Poly::parse(table, s)?;
        match p.as_monomial() {
            Some((e, c)) if c.is_one() && !e.has_x() => Ok(e.clone()),
            _ => Err(CalculusError::BadCoefficient(s.to_string())),
        }
    }

    fn times(&self, other: &Term) -> Term {
        let mut y = self.y.clone();
        for (i, &k) in other.y.y().iter().enumerate() {
            y.bump(Var::Y(i), k);
        }
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Term { y, factors }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Identity {
    pub name: String,
    pub lhs: Vec<Term>,
    pub rhs: Vec<Term>,
}

impl Identity {
    pub fn new(name: &str, lhs: Vec<Term>, rhs: Vec<Term>) -> Self {
        Identity { name: name.to_string(), lhs, rhs }
    }

    pub fn swapped(&self) -> Identity {
        Identity { name: self.name.clone(), lhs: self.rhs.clone(), rhs: self.lhs.clone() }
    }

    /// Replaces every occurrence of `target` on the right-hand side by `by`,
    /// distributing over the terms of `by`.
    pub fn substitute(&self, target: &Graph, by: &[Term]) -> Identity {
        let mut rhs = Vec::new();
        for t in &self.rhs {
            let mut partial = vec![Term { y: t.y.clone(), factors: vec![] }];
            for f in &t.factors {
                partial = if f == target {
                    partial.iter().flat_map(|p| by.iter().map(move |b| p.times(b))).collect()
                } else {
                    partial
                        .into_iter()
                        .map(|mut p| {
                            p.factors.push(f.clone());
                            p
                        })
                        .collect()
                };
            }
            rhs.extend(partial);
        }
        Identity { name: self.name.clone(), lhs: self.lhs.clone(), rhs }
    }

    /// Right-hand side terms with `g` among their factors.
    pub fn terms_with<'a>(&'a self, g: &'a Graph) -> impl Iterator<Item = &'a Term> + 'a {
        self.rhs.iter().filter(move |t| t.factors.contains(g))
    }
}

/// Which extremal matching heights are measured from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Heights {
    #[default]
    Minimal,
    /// Heights from the maximal matching: `G` becomes `y_G * G(1/y)`, where `y_G`
    /// is the product of the tile variables.
    Maximal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    /// A monomial of `lhs - rhs` with its nonzero coefficient.
    Fails {
        monomial: ExpVec,
        coeff: BigInt,
    },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }
}

/// Expands graphs once and evaluates identities.
pub struct Verifier {
    table: Arc<VarTable>,
    heights: Heights,
    cache: HashMap<String, Poly>,
}

fn graph_key(g: &Graph) -> String {
    serde_json::to_string(g).expect("graphs serialize")
}

fn tile_exponent(table: &VarTable, g: &Graph) -> Result<ExpVec, CalculusError> {
    let mut e = ExpVec::zero(table);
    for l in g.tile_labels() {
        let i = table.y(&l).ok_or(GraphError::UnknownLabel(l))?;
        e.bump(Var::Y(i), 1);
    }
    Ok(e)
}

/// `y_G * p(1/y)`.
fn mirror(table: &Arc<VarTable>, p: &Poly, top: &ExpVec) -> Result<Poly, CalculusError> {
    let mut terms = Vec::with_capacity(p.len());
    for (e, c) in p.terms() {
        let y: Vec<i32> = top.y().iter().zip(e.y()).map(|(t, v)| t - v).collect();
        terms.push((ExpVec::new(e.x().to_vec(), y)?, c.clone()));
    }
    Ok(Poly::from_terms(table, terms))
}

impl Verifier {
    pub fn new(table: &Arc<VarTable>) -> Self {
        Verifier::with_heights(table, Heights::Minimal)
    }

    pub fn with_heights(table: &Arc<VarTable>, heights: Heights) -> Self {
        Verifier { table: table.clone(), heights, cache: HashMap::new() }
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn expansion(&mut self, g: &Graph) -> Result<Poly, CalculusError> {
        let key = graph_key(g);
        if let Some(p) = self.cache.get(&key) {
            return Ok(p.clone());
        }
        let mut p = g.expansion(&self.table)?;
        if self.heights == Heights::Maximal {
            p = mirror(&self.table, &p, &tile_exponent(&self.table, g)?)?;
        }
        self.cache.insert(key, p.clone());
        Ok(p)
    }

    pub fn term(&mut self, t: &Term) -> Result<Poly, CalculusError> {
        let mut acc = Poly::one(&self.table).mul_exp(&t.y)?;
        for f in &t.factors {
            acc = acc.checked_mul(&self.expansion(f)?)?;
        }
        Ok(acc)
    }

    pub fn side(&mut self, terms: &[Term]) -> Result<Poly, CalculusError> {
        let mut acc = Poly::zero(&self.table);
        for t in terms {
            acc = acc.checked_add(&self.term(t)?)?;
        }
        Ok(acc)
    }

    pub fn sides(&mut self, id: &Identity) -> Result<(Poly, Poly), CalculusError> {
        Ok((self.side(&id.lhs)?, self.side(&id.rhs)?))
    }

    pub fn verify(&mut self, id: &Identity) -> Result<Verdict, CalculusError> {
        let (l, r) = self.sides(id)?;
        let d = l.checked_sub(&r)?;
        let v = match d.terms().next() {
            None => Verdict::Holds,
            Some((e, c)) => Verdict::Fails { monomial: e.clone(), coeff: c.clone() },
        };
        Ok(v)
    }
}

pub fn verify(table: &Arc<VarTable>, id: &Identity) -> Result<Verdict, CalculusError> {
    Verifier::new(table).verify(id)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportEntry {
    pub name: String,
    pub passed: bool,
    /// Surviving monomial of `lhs - rhs` with its coefficient, or the error text.
    pub detail: Option<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub entries: Vec<ReportEntry>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| !e.passed)
    }
}

/// Verifies every identity, one thread per identity. Entries come back sorted by name.
pub fn verify_suite(table: &Arc<VarTable>, ids: &[Identity], heights: Heights) -> Report {
    let mut entries: Vec<ReportEntry> = std::thread::scope(|s| {
        let handles: Vec<_> = ids
            .iter()
            .map(|id| {
                s.spawn(move || {
                    let start = Instant::now();
                    let r = Verifier::with_heights(table, heights).verify(id);
                    let (passed, detail) = match r {
                        Ok(Verdict::Holds) => (true, None),
                        Ok(Verdict::Fails { monomial, coeff }) => {
                            (false, Some(format!("{} * {}", coeff, monomial_text(table, &monomial))))
                        }
                        Err(e) => (false, Some(e.to_string())),
                    };
                    ReportEntry { name: id.name.clone(), passed, detail, elapsed: start.elapsed() }
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("verifier thread")).collect()
    });
    entries.sort_by(|a, b| a.name.cmp(&b.name));
    Report { entries }
}

/// Finds y-only exponents `a_i` with `p = sum_i y^{a_i} parts_i`.
///
/// All coefficients are assumed positive, so every term of `y^{a_0} parts_0` is a
/// term of `p` and the candidates for `a_0` are read off a single term.
pub fn fit_shifts(p: &Poly, parts: &[Poly]) -> Option<Vec<ExpVec>> {
    let table = p.table().clone();
    let Some((first, rest)) = parts.split_first() else {
        return p.is_zero().then(Vec::new);
    };
    if first.is_zero() {
        return None;
    }
    let mut by_x: HashMap<&[i32], Vec<(&ExpVec, &BigInt)>> = HashMap::new();
    for (e, c) in p.terms() {
        by_x.entry(e.x()).or_default().push((e, c));
    }
    // the term of `first` whose x-part is shared by the fewest terms of `p`
    let (m, mc) = first.terms().min_by_key(|(e, _)| by_x.get(e.x()).map_or(0, |v| v.len()))?;
    let candidates = by_x.get(m.x())?;
    for (e, c) in candidates {
        if *c < mc {
            continue;
        }
        let Some(y) = e.y().iter().zip(m.y()).map(|(a, b)| (a >= b).then_some(a - b)).collect::<Option<Vec<_>>>()
        else {
            continue;
        };
        let shift = ExpVec::new(vec![0; table.nx()], y).expect("nonnegative");
        let d = p.checked_sub(&first.mul_exp(&shift).ok()?).ok()?;
        if d.terms().any(|(_, c)| c.is_negative()) {
            continue;
        }
        if let Some(mut tail) = fit_shifts(&d, rest) {
            tail.insert(0, shift);
            return Some(tail);
        }
    }
    None
}

/// A numeric evaluation point with every y-variable equal to 1.
struct Point {
    xs: Vec<Fp>,
    ys: Vec<Fp>,
}

impl Point {
    fn new(table: &VarTable) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let xs = (0..table.nx()).map(|_| Fp::new(rng.gen_range(2..crate::modp::P))).collect();
        Point { xs, ys: vec![Fp::new(1); table.ny()] }
    }

    fn eval(&self, p: &Poly) -> Fp {
        p.eval(&self.xs, &self.ys)
    }
}

/// Products of at most two edges over `labels`, smallest first.
fn edge_products(labels: &[String]) -> Vec<Vec<Graph>> {
    let mut out = vec![vec![]];
    for (i, a) in labels.iter().enumerate() {
        out.push(vec![Graph::Edge(a.clone())]);
        for b in &labels[i..] {
            out.push(vec![Graph::Edge(a.clone()), Graph::Edge(b.clone())]);
        }
    }
    out.sort_by_key(|v| v.len());
    out
}

fn edge_labels(table: &VarTable, graphs: &[&Graph]) -> Vec<String> {
    let mut out: Vec<String> = graphs.iter().flat_map(|g| g.labels()).filter(|l| table.x(l).is_some()).collect();
    out.sort();
    out.dedup();
    out
}

/// A right-hand side candidate: graphs of one term, grouped as parts that get
/// separate y-monomials.
#[derive(Clone)]
struct Candidate {
    parts: Vec<Vec<Graph>>,
}

struct Search<'a> {
    v: Verifier,
    pt: Point,
    values: HashMap<String, Fp>,
    table: &'a Arc<VarTable>,
}

impl<'a> Search<'a> {
    fn new(table: &'a Arc<VarTable>) -> Self {
        Search { v: Verifier::new(table), pt: Point::new(table), values: HashMap::new(), table }
    }

    fn value(&mut self, g: &Graph) -> Result<Fp, CalculusError> {
        let key = graph_key(g);
        if let Some(v) = self.values.get(&key) {
            return Ok(*v);
        }
        let v = match g {
            Graph::Edge(l) => self.pt.xs[self.table.x(l).ok_or_else(|| GraphError::UnknownLabel(l.clone()))?],
            _ => {
                let p = self.v.expansion(g)?;
                self.pt.eval(&p)
            }
        };
        self.values.insert(key, v);
        Ok(v)
    }

    fn product(&mut self, gs: &[Graph]) -> Result<Fp, CalculusError> {
        let mut acc = Fp::new(1);
        for g in gs {
            acc = acc * self.value(g)?;
        }
        Ok(acc)
    }

    fn poly(&mut self, gs: &[Graph]) -> Result<Poly, CalculusError> {
        self.v.term(&Term::plain(self.table, gs.to_vec()))
    }

    /// Searches `lhs * e0 = a * lead * e1 + b * rem * e2` over the given candidates
    /// and returns the first exact fit.
    fn run(
        &mut self,
        name: &str,
        lhs: &[Graph],
        leads: &[Graph],
        rems: &[Vec<Graph>],
        lhs_edges: &[Vec<Graph>],
        edges: &[Vec<Graph>],
    ) -> Result<Option<Identity>, CalculusError> {
        let mut table: HashMap<Fp, Vec<Vec<Graph>>> = HashMap::new();
        for r in rems {
            let rv = self.product(r)?;
            for e in edges {
                let mut f = r.clone();
                f.extend(e.iter().cloned());
                table.entry(rv * self.product(e)?).or_default().push(f);
            }
        }
        let lv = self.product(lhs)?;
        for e0 in lhs_edges {
            let mut l = lhs.to_vec();
            l.extend(e0.iter().cloned());
            let target = lv * self.product(e0)?;
            for lead in leads {
                let gv = self.value(lead)?;
                for e1 in edges {
                    let mut first = vec![lead.clone()];
                    first.extend(e1.iter().cloned());
                    let rest = target - gv * self.product(e1)?;
                    let mut cands: Vec<Candidate> = Vec::new();
                    if rest == Fp::new(0) {
                        cands.push(Candidate { parts: vec![first.clone()] });
                    }
                    if let Some(rs) = table.get(&rest) {
                        cands.extend(rs.iter().map(|r| Candidate { parts: vec![first.clone(), r.clone()] }));
                    }
                    for c in cands {
                        if let Some(id) = self.fit(name, &l, &c)? {
                            return Ok(Some(id));
                        }
                    }
                }
            }
        }
        Ok(None)
    }

    fn fit(&mut self, name: &str, lhs: &[Graph], c: &Candidate) -> Result<Option<Identity>, CalculusError> {
        let p = self.poly(lhs)?;
        let parts = c.parts.iter().map(|gs| self.poly(gs)).collect::<Result<Vec<_>, _>>()?;
        let Some(shifts) = fit_shifts(&p, &parts) else {
            return Ok(None);
        };
        let rhs = shifts.into_iter().zip(&c.parts).map(|(y, gs)| Term::new(y, gs.clone())).collect();
        let id = Identity::new(name, vec![Term::plain(self.table, lhs.to_vec())], rhs);
        if self.v.verify(&id)?.holds() {
            Ok(Some(id))
        } else {
            Ok(None)
        }
    }
}

fn snake(g: &Graph) -> Result<&SnakeGraph, CalculusError> {
    match g {
        Graph::Snake(s) => Ok(s),
        other => Err(CalculusError::PatternNotSupported(format!("expected a snake graph, got {other}"))),
    }
}

fn end_runs(g: &SnakeGraph) -> Result<Vec<SnakeGraph>, CalculusError> {
    let n = g.len();
    let mut out = Vec::new();
    for i in 1..n {
        out.push(g.slice(0, i)?);
        out.push(g.slice(i, n)?);
    }
    Ok(out)
}

/// Grafting of two snake graphs across a boundary edge labeled `at` joining an end
/// tile of each: `g1 * g2 = y^a * G (edges) + y^b * (end runs) (edges)`, where `G` is
/// the concatenation.
pub fn graft(table: &Arc<VarTable>, g1: &Graph, g2: &Graph, at: &str) -> Result<Identity, CalculusError> {
    let name = format!("graft-{at}");
    if let (Graph::Edge(l), g) | (g, Graph::Edge(l)) = (g1, g2) {
        if l != at && !g.labels().contains(&at.to_string()) {
            return Err(CalculusError::NoGraftableEdge(at.to_string()));
        }
        let t = Term::plain(table, vec![g1.clone(), g2.clone()]);
        return Ok(Identity::new(&name, vec![t.clone()], vec![t]));
    }
    let (s1, s2) = (snake(g1)?, snake(g2)?);
    let leads: Vec<Graph> = [s1.concat(s2, at), s2.concat(s1, at)].into_iter().flatten().map(Graph::Snake).collect();
    if leads.is_empty() {
        return Err(CalculusError::NoGraftableEdge(at.to_string()));
    }
    let runs1: Vec<Option<SnakeGraph>> = std::iter::once(None).chain(end_runs(s1)?.into_iter().map(Some)).collect();
    let runs2: Vec<Option<SnakeGraph>> = std::iter::once(None).chain(end_runs(s2)?.into_iter().map(Some)).collect();
    let mut rems = Vec::new();
    for a in &runs1 {
        for b in &runs2 {
            rems.push(a.iter().chain(b).cloned().map(Graph::Snake).collect::<Vec<_>>());
        }
    }
    let labels = edge_labels(table, &[g1, g2]);
    let edges = edge_products(&labels);
    let lhs_edges: Vec<Vec<Graph>> = edges.iter().filter(|e| e.len() <= 1).cloned().collect();
    Search::new(table)
        .run(&name, &[g1.clone(), g2.clone()], &leads, &rems, &lhs_edges, &edges)?
        .ok_or_else(|| CalculusError::PatternNotSupported(format!("no resolution found for grafting at `{at}`")))
}

/// Self-grafting of a snake graph at two boundary edges labeled `at`:
/// `g (edges) = y^a * B (edges) + y^b * R (edges)` with `B` the closure of an end
/// run at `at` and `R` a sub-run, a product of edges, or absent.
pub fn self_graft(table: &Arc<VarTable>, g: &Graph, at: &str) -> Result<Identity, CalculusError> {
    self_graft_with(table, g, at, &[])
}

/// As [`self_graft`], also trying `extra` graphs as remainders.
pub fn self_graft_with(table: &Arc<VarTable>, g: &Graph, at: &str, extra: &[Graph]) -> Result<Identity, CalculusError> {
    let name = format!("self-graft-{at}");
    let s = snake(g)?;
    let mut runs = end_runs(s)?;
    runs.push(s.clone());
    let leads: Vec<Graph> = runs.iter().flat_map(|r| r.closures(at)).map(Graph::Band).collect();
    if leads.is_empty() {
        return Err(CalculusError::NoSelfGraftLocus(at.to_string()));
    }
    let n = s.len();
    let mut rems: Vec<Vec<Graph>> = vec![vec![]];
    for i in 0..n {
        for j in i + 1..=n {
            if j - i < n {
                rems.push(vec![Graph::Snake(s.slice(i, j)?)]);
            }
        }
    }
    rems.extend(extra.iter().map(|e| vec![e.clone()]));
    let labels = edge_labels(table, &[g]);
    let edges = edge_products(&labels);
    let lhs_edges: Vec<Vec<Graph>> = edges.iter().filter(|e| e.len() <= 1).cloned().collect();
    Search::new(table)
        .run(&name, std::slice::from_ref(g), &leads, &rems, &lhs_edges, &edges)?
        .ok_or_else(|| CalculusError::PatternNotSupported(format!("no resolution found for self-grafting at `{at}`")))
}

/// The band graph among the factors of the leading right-hand term.
pub fn leading_band(id: &Identity) -> Option<&BandGraph> {
    id.rhs.first()?.factors.iter().find_map(|f| match f {
        Graph::Band(b) => Some(b),
        _ => None,
    })
}

/// The chain of resolutions around the boundary marked point: grafting the two
/// arcs `U` and `V`, closing `K`, self-grafting `S` and `T`, and the combined
/// identity expressing `U V` through the loop `L`, the bands `X`, `Y` and edges.
#[derive(Debug, Clone)]
pub struct BoundaryResolution {
    pub graft: Identity,
    pub closure: Identity,
    pub s: Identity,
    pub t: Identity,
    pub resolved: Identity,
}

pub fn boundary_resolution(t: &Triangulation) -> Result<BoundaryResolution, CalculusError> {
    let table = t.var_table();
    let bc = boundary_curves(t).map_err(|e| CalculusError::PatternNotSupported(e.to_string()))?;
    let g = |c: &Curve| graph_of(t, c).map_err(|e| CalculusError::PatternNotSupported(e.to_string()));
    let (u, v, k, s, tt) = (g(&bc.u)?, g(&bc.v)?, g(&bc.k)?, g(&bc.s)?, g(&bc.t)?);
    let at = t.boundary.first().ok_or_else(|| CalculusError::PatternNotSupported("no boundary segment".into()))?;
    let mut graft = graft(&table, &u, &v, at)?;
    graft.name = "uv-graft".into();
    let mut closure = self_graft(&table, &k, at)?;
    closure.name = "k-closure".into();
    let s_at = s.tile_labels().first().cloned().unwrap_or_default();
    let mut sg = self_graft(&table, &s, &s_at)?;
    sg.name = "s-self-graft".into();
    let t_at = tt.tile_labels().last().cloned().unwrap_or_default();
    let mut tg = self_graft(&table, &tt, &t_at)?;
    tg.name = "t-self-graft".into();
    let mut resolved = graft.substitute(&k, &closure.rhs).substitute(&s, &sg.rhs).substitute(&tt, &tg.rhs);
    resolved.name = "uv-resolved".into();
    Ok(BoundaryResolution { graft, closure, s: sg, t: tg, resolved })
}

impl Identity {
    /// Serializes with factor names looked up by `name_of`; edges become `edge:<label>`.
    pub fn to_json(
        &self,
        table: &VarTable,
        name_of: impl Fn(&Graph) -> Option<String>,
    ) -> Result<IdentityJson, CalculusError> {
        let side = |ts: &[Term]| -> Result<Vec<TermJson>, CalculusError> {
            ts.iter()
                .map(|t| {
                    let factors = t
                        .factors
                        .iter()
                        .map(|f| match f {
                            Graph::Edge(l) => Ok(format!("edge:{l}")),
                            g => name_of(g).ok_or_else(|| CalculusError::UnknownGraph(g.to_string())),
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    let y = monomial_text(table, &t.y);
                    Ok(TermJson { y: if y.is_empty() { "1".into() } else { y }, factors })
                })
                .collect()
        };
        Ok(IdentityJson { name: self.name.clone(), lhs: side(&self.lhs)?, rhs: side(&self.rhs)? })
    }
}

/// Serialized identity; factors name graphs of a bundle, or `edge:<label>`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityJson {
    pub name: String,
    pub lhs: Vec<TermJson>,
    pub rhs: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub y: String,
    pub factors: Vec<String>,
}

impl IdentityJson {
    pub fn resolve(&self, table: &Arc<VarTable>, graphs: &BTreeMap<String, Graph>) -> Result<Identity, CalculusError> {
        let side = |ts: &[TermJson]| -> Result<Vec<Term>, CalculusError> {
            ts.iter()
                .map(|t| {
                    let factors = t
                        .factors
                        .iter()
                        .map(|f| match f.strip_prefix("edge:") {
                            Some(l) => Ok(Graph::Edge(l.to_string())),
                            None => graphs.get(f).cloned().ok_or_else(|| CalculusError::UnknownGraph(f.clone())),
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    Ok(Term::new(Term::coefficient(table, &t.y)?, factors))
                })
                .collect()
        };
        Ok(Identity::new(&self.name, side(&self.lhs)?, side(&self.rhs)?))
    }
}
