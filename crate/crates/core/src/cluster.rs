//! Seeds of skew-symmetrizable cluster algebras with principal coefficients,
//! mutation, and a numeric breadth-first search for flip sequences.
//!
//! Boundary segments enter as frozen rows of the extended exchange matrix.

use std::collections::{HashSet, VecDeque};
use std::hash::Hash;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Num;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::laurent::{ExpVec, LaurentError, Poly, Var, VarTable};
use crate::orbifold::Triangulation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClusterError {
    #[error("mutation index {0} out of range")]
    Index(usize),
    #[error("d*B is not skew-symmetric at ({0}, {1})")]
    NotSkewSymmetrizable(usize, usize),
    #[error("malformed seed: {0}")]
    Malformed(String),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// Sign attached to a pair of consecutive sides of a counterclockwise triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SignConvention {
    /// `b_ij = +1` when side `j` follows side `i` clockwise.
    #[default]
    ClockwisePositive,
    CounterclockwisePositive,
}

/// Where the factor 2 of a pending arc goes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PendingDoubling {
    /// Entries `b_{i,tau}` are doubled; `d_tau = 2`.
    #[default]
    Column,
    /// Entries `b_{tau,i}` are doubled; `d_i = 2` for the other arcs.
    Row,
}

pub type Matrix = Vec<Vec<i64>>;

#[derive(Debug, Clone, PartialEq)]
pub struct Seed {
    pub labels: Vec<String>,
    pub frozen_labels: Vec<String>,
    pub b: Matrix,
    pub frozen: Matrix,
    pub c: Matrix,
    pub d: Vec<i64>,
    pub cluster: Vec<Poly>,
    table: Arc<VarTable>,
}

fn pos(v: i64) -> i64 {
    v.max(0)
}

/// Mutates the rows of `m` in direction `k`, using the exchange part `b`.
fn mutate_rows(m: &Matrix, b: &Matrix, k: usize, rows_are_b: bool) -> Matrix {
    let n = b.len();
    m.iter()
        .enumerate()
        .map(|(i, row)| {
            (0..n)
                .map(|j| {
                    if j == k || (rows_are_b && i == k) {
                        -row[j]
                    } else {
                        row[j] + pos(row[k]) * pos(b[k][j]) - pos(-row[k]) * pos(-b[k][j])
                    }
                })
                .collect()
        })
        .collect()
}

impl Seed {
    /// The initial seed with cluster `x_i` and coefficient matrix the identity.
    pub fn initial(
        table: &Arc<VarTable>,
        labels: Vec<String>,
        frozen_labels: Vec<String>,
        b: Matrix,
        frozen: Matrix,
        d: Vec<i64>,
    ) -> Result<Seed, ClusterError> {
        let n = labels.len();
        let cluster = labels.iter().map(|l| Poly::x(table, l)).collect::<Result<Vec<_>, _>>()?;
        let c = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        let s = Seed { labels, frozen_labels, b, frozen, c, d, cluster, table: table.clone() };
        s.validate()?;
        Ok(s)
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn validate(&self) -> Result<(), ClusterError> {
        let n = self.rank();
        let square = |m: &Matrix, rows: usize| m.len() == rows && m.iter().all(|r| r.len() == n);
        if !square(&self.b, n) || !square(&self.c, n) || !square(&self.frozen, self.frozen_labels.len()) {
            return Err(ClusterError::Malformed("matrix dimensions".into()));
        }
        if self.d.len() != n || self.d.iter().any(|&v| v <= 0) || self.cluster.len() != n {
            return Err(ClusterError::Malformed("skew-symmetrizer or cluster size".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if self.d[i] * self.b[i][j] != -self.d[j] * self.b[j][i] {
                    return Err(ClusterError::NotSkewSymmetrizable(i, j));
                }
            }
        }
        Ok(())
    }

    /// The two monomials of the exchange relation in direction `k`.
    fn exchange_monomials(&self, k: usize) -> Result<(Poly, Poly), ClusterError> {
        let t = &self.table;
        let mut plus = Poly::one(t);
        let mut minus = Poly::one(t);
        for i in 0..self.rank() {
            let v = self.b[i][k];
            if v > 0 {
                plus = &plus * &self.cluster[i].pow(v as u32);
            } else if v < 0 {
                minus = &minus * &self.cluster[i].pow((-v) as u32);
            }
        }
        let mut ep = ExpVec::zero(t);
        let mut em = ExpVec::zero(t);
        for (f, l) in self.frozen_labels.iter().enumerate() {
            let var = Var::X(t.x(l).ok_or_else(|| LaurentError::UnknownVariable(l.clone()))?);
            let v = self.frozen[f][k];
            if v > 0 {
                ep.bump(var, v as i32);
            } else {
                em.bump(var, (-v) as i32);
            }
        }
        for (j, l) in self.labels.iter().enumerate() {
            let var = Var::Y(t.y(l).ok_or_else(|| LaurentError::UnknownVariable(l.clone()))?);
            let v = self.c[j][k];
            if v > 0 {
                ep.bump(var, v as i32);
            } else {
                em.bump(var, (-v) as i32);
            }
        }
        Ok((plus.mul_exp(&ep)?, minus.mul_exp(&em)?))
    }

    pub fn mutate(&self, k: usize) -> Result<Seed, ClusterError> {
        if k >= self.rank() {
            return Err(ClusterError::Index(k));
        }
        let (p, m) = self.exchange_monomials(k)?;
        let mut cluster = self.cluster.clone();
        cluster[k] = (&p + &m).div_exact(&self.cluster[k])?;
        Ok(Seed {
            labels: self.labels.clone(),
            frozen_labels: self.frozen_labels.clone(),
            b: mutate_rows(&self.b, &self.b, k, true),
            frozen: mutate_rows(&self.frozen, &self.b, k, false),
            c: mutate_rows(&self.c, &self.b, k, false),
            d: self.d.clone(),
            cluster,
            table: self.table.clone(),
        })
    }

    pub fn mutate_along(&self, seq: &[usize]) -> Result<Seed, ClusterError> {
        let mut s = self.clone();
        for &k in seq {
            s = s.mutate(k)?;
        }
        Ok(s)
    }

    /// The same seed with every y-variable set to 1.
    pub fn trivial_coefficients(&self) -> Result<Seed, ClusterError> {
        let map = (0..self.table.ny()).map(|j| (Var::Y(j), Poly::one(&self.table))).collect();
        let cluster = self.cluster.iter().map(|p| p.substitute(&map)).collect::<Result<_, _>>()?;
        let n = self.rank();
        Ok(Seed { cluster, c: vec![vec![0; n]; n], ..self.clone() })
    }

    pub fn to_json(&self) -> SeedJson {
        SeedJson {
            labels: self.labels.clone(),
            frozen_labels: self.frozen_labels.clone(),
            b: self.b.clone(),
            frozen: self.frozen.clone(),
            c: self.c.clone(),
            d: self.d.clone(),
            cluster: self.cluster.iter().map(|p| p.to_string()).collect(),
        }
    }

    pub fn from_json(j: &SeedJson) -> Result<Seed, ClusterError> {
        let xs: Vec<String> = j.labels.iter().chain(&j.frozen_labels).cloned().collect();
        let table = VarTable::new(xs, j.labels.clone())?;
        let cluster = j.cluster.iter().map(|s| Poly::parse(&table, s)).collect::<Result<Vec<_>, _>>()?;
        let s = Seed {
            labels: j.labels.clone(),
            frozen_labels: j.frozen_labels.clone(),
            b: j.b.clone(),
            frozen: j.frozen.clone(),
            c: j.c.clone(),
            d: j.d.clone(),
            cluster,
            table,
        };
        s.validate()?;
        Ok(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedJson {
    pub labels: Vec<String>,
    #[serde(default)]
    pub frozen_labels: Vec<String>,
    pub b: Matrix,
    #[serde(default)]
    pub frozen: Matrix,
    pub c: Matrix,
    pub d: Vec<i64>,
    pub cluster: Vec<String>,
}

/// The `k`-th cluster variable after mutating along `seq`.
pub fn variable_along(s: &Seed, seq: &[usize], k: usize) -> Result<Poly, ClusterError> {
    let t = s.mutate_along(seq)?;
    t.cluster.get(k).cloned().ok_or(ClusterError::Index(k))
}

/// Exchange matrix read off the triangles, with boundary segments as frozen rows.
pub fn seed_from_triangulation(t: &Triangulation) -> Result<Seed, ClusterError> {
    seed_with(t, SignConvention::default(), PendingDoubling::default())
}

pub fn seed_with(t: &Triangulation, sign: SignConvention, doubling: PendingDoubling) -> Result<Seed, ClusterError> {
    t.validate().map_err(|e| ClusterError::Malformed(e.to_string()))?;
    let n = t.arcs.len();
    let m = t.boundary.len();
    let s: i64 = match sign {
        SignConvention::ClockwisePositive => -1,
        SignConvention::CounterclockwisePositive => 1,
    };
    let weight = |target: &str, source: &str| -> i64 {
        match doubling {
            PendingDoubling::Column if t.is_pending(target) => 2,
            PendingDoubling::Row if t.is_pending(source) => 2,
            _ => 1,
        }
    };
    let mut ext = vec![vec![0i64; n]; n + m];
    let row = |l: &str| t.arc_index(l).or_else(|| t.boundary.iter().position(|b| b == l).map(|i| n + i));
    for tri in &t.triangles {
        for k in 0..3 {
            let (a, b) = (&tri[k], &tri[(k + 1) % 3]);
            let (ia, ib) = (row(a).expect("side"), row(b).expect("side"));
            if ib < n {
                ext[ia][ib] += s * weight(b, a);
            }
            if ia < n {
                ext[ib][ia] -= s * weight(a, b);
            }
        }
    }
    let d = (0..n)
        .map(|i| match doubling {
            PendingDoubling::Column if t.is_pending(&t.arcs[i]) => 2,
            PendingDoubling::Row if !t.pending.is_empty() && !t.is_pending(&t.arcs[i]) => 2,
            _ => 1,
        })
        .collect();
    let frozen = ext.split_off(n);
    Seed::initial(&t.var_table(), t.arcs.clone(), t.boundary.clone(), ext, frozen, d)
}

/// A seed evaluated at a numeric point.
#[derive(Debug, Clone)]
pub struct NumericSeed<S> {
    pub b: Matrix,
    pub frozen: Matrix,
    pub c: Matrix,
    pub cluster: Vec<S>,
    pub frozen_values: Vec<S>,
    pub y_values: Vec<S>,
}

impl<S: Num + Clone> NumericSeed<S> {
    pub fn new(s: &Seed, x: Vec<S>, frozen_values: Vec<S>, y_values: Vec<S>) -> Self {
        NumericSeed { b: s.b.clone(), frozen: s.frozen.clone(), c: s.c.clone(), cluster: x, frozen_values, y_values }
    }

    pub fn mutate(&self, k: usize) -> Self {
        let n = self.b.len();
        let mut p = S::one();
        let mut m = S::one();
        let mut fold = |v: i64, base: &S| {
            let e = v.unsigned_abs() as usize;
            if v > 0 {
                p = p.clone() * num_traits::pow(base.clone(), e);
            } else if v < 0 {
                m = m.clone() * num_traits::pow(base.clone(), e);
            }
        };
        for i in 0..n {
            fold(self.b[i][k], &self.cluster[i]);
        }
        for (f, row) in self.frozen.iter().enumerate() {
            fold(row[k], &self.frozen_values[f]);
        }
        for (j, row) in self.c.iter().enumerate() {
            fold(row[k], &self.y_values[j]);
        }
        let mut cluster = self.cluster.clone();
        cluster[k] = (p + m) / self.cluster[k].clone();
        NumericSeed {
            b: mutate_rows(&self.b, &self.b, k, true),
            frozen: mutate_rows(&self.frozen, &self.b, k, false),
            c: mutate_rows(&self.c, &self.b, k, false),
            cluster,
            frozen_values: self.frozen_values.clone(),
            y_values: self.y_values.clone(),
        }
    }
}

/// Breadth-first search for a flip sequence producing `target` in some position.
/// Returns the sequence and the position. Seeds with equal cluster values are
/// visited once.
pub fn find_flip_sequence<S>(start: &NumericSeed<S>, target: &S, max_depth: usize) -> Option<(Vec<usize>, usize)>
where
    S: Num + Clone + Eq + Hash + Ord,
{
    if let Some(k) = start.cluster.iter().position(|v| v == target) {
        return Some((vec![], k));
    }
    let n = start.b.len();
    let key = |s: &NumericSeed<S>| {
        let mut v = s.cluster.clone();
        v.sort();
        v
    };
    let mut seen: HashSet<Vec<S>> = HashSet::new();
    seen.insert(key(start));
    let mut queue: VecDeque<(Vec<usize>, NumericSeed<S>)> = VecDeque::new();
    queue.push_back((vec![], start.clone()));
    while let Some((seq, s)) = queue.pop_front() {
        if seq.len() >= max_depth {
            continue;
        }
        for k in 0..n {
            if seq.last() == Some(&k) {
                continue;
            }
            let t = s.mutate(k);
            let mut next = seq.clone();
            next.push(k);
            if &t.cluster[k] == target {
                return Some((next, k));
            }
            if seen.insert(key(&t)) {
                queue.push_back((next, t));
            }
        }
    }
    None
}

/// True iff every term of `p` has the same non-positive x-exponent on at most the
/// denominator side, that is `p` times a single monomial is a polynomial with
/// non-negative exponents.
pub fn has_monomial_denominator(p: &Poly) -> bool {
    // Laurent polynomials always do; this checks the y-part stays polynomial.
    p.terms().all(|(e, _)| e.y().iter().all(|&v| v >= 0))
}

/// Coefficient of the identity check used by tests: `d·B` skew-symmetric.
pub fn is_skew_symmetrizable(b: &Matrix, d: &[i64]) -> bool {
    let n = b.len();
    (0..n).all(|i| (0..n).all(|j| d[i] * b[i][j] == -d[j] * b[j][i]))
}

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}
