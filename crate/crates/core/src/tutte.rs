//! Tutte polynomial by subset expansion and by memoized deletion–contraction,
//! exact evaluation, and the colouring/flow specializations.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::{BigInt, One, Signed, Zero};
use rayon::prelude::*;

use crate::cyclotomic::{int, Rational, Scalar};
use crate::error::{Error, Result};
use crate::graph::{Dsu, MultiGraph, RankProfile};

/// Largest edge count accepted by [`tutte_subset_expansion`].
pub const SUBSET_EXPANSION_MAX_EDGES: usize = 20;

/// Sparse integer polynomial in `x, y`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, BigInt::one())
    }

    pub fn monomial(i: u32, j: u32, c: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    /// `x + y + ... + y^{k-1}`, the polynomial of `k` parallel edges.
    pub fn bond(k: u32) -> Self {
        let mut p = Self::monomial(1, 0, BigInt::one());
        for j in 1..k {
            p.add_term(0, j, BigInt::one());
        }
        p
    }

    /// `1 + y + ... + y^{k-1}`.
    fn y_chain(k: u32) -> Self {
        let mut p = Self::zero();
        for j in 0..k {
            p.add_term(0, j, BigInt::one());
        }
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &other.terms {
                out.add_term(i + k, j + l, a * b);
            }
        }
        out
    }

    pub fn shift_y(&self, k: u32) -> Self {
        BivariatePoly { terms: self.terms.iter().map(|(&(i, j), c)| ((i, j + k), c.clone())).collect() }
    }

    pub fn degree_x(&self) -> u32 {
        self.terms.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn degree_y(&self) -> u32 {
        self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    /// Exact evaluation over any [`Scalar`] ring.
    pub fn eval<S: Scalar>(&self, x: &S, y: &S) -> S {
        let xp = x.powers(self.degree_x() as usize);
        let yp = y.powers(self.degree_y() as usize);
        let mut acc = S::zero();
        for (&(i, j), c) in &self.terms {
            acc = acc + S::from_bigint(c) * xp[i as usize].clone() * yp[j as usize].clone();
        }
        acc
    }

    /// Evaluation at a rational point.
    pub fn evaluate(&self, x: &Rational, y: &Rational) -> Rational {
        self.eval(x, y)
    }

    /// `Σ c_ij X^i xs^{dx-i} Y^j ys^{dy-j}`: the value `xs^dx ys^dy P(X/xs, Y/ys)`
    /// without any division, so it is defined when `xs` or `ys` vanish.
    pub fn eval_homogeneous<S: Scalar>(&self, dx: u32, dy: u32, big_x: &S, xs: &S, big_y: &S, ys: &S) -> S {
        assert!(self.degree_x() <= dx && self.degree_y() <= dy, "homogenizing degree too small");
        let xp = big_x.powers(dx as usize);
        let xsp = xs.powers(dx as usize);
        let yp = big_y.powers(dy as usize);
        let ysp = ys.powers(dy as usize);
        let mut acc = S::zero();
        for (&(i, j), c) in &self.terms {
            let (i, j) = (i as usize, j as usize);
            acc = acc
                + S::from_bigint(c)
                    * xp[i].clone()
                    * xsp[dx as usize - i].clone()
                    * yp[j].clone()
                    * ysp[dy as usize - j].clone();
        }
        acc
    }
}

impl fmt::Display for BivariatePoly {
    /// Graded lexicographic: total degree descending, then `x`-degree descending.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by(|a, b| (b.0 + b.1, b.0).cmp(&(a.0 + a.1, a.0)));
        let mut out = String::new();
        for (n, (i, j)) in keys.into_iter().enumerate() {
            let c = &self.terms[&(i, j)];
            let mono = match (i, j) {
                (0, 0) => String::new(),
                _ => {
                    let mut parts = Vec::new();
                    match i {
                        0 => {}
                        1 => parts.push("x".to_string()),
                        _ => parts.push(format!("x^{i}")),
                    }
                    match j {
                        0 => {}
                        1 => parts.push("y".to_string()),
                        _ => parts.push(format!("y^{j}")),
                    }
                    parts.join("*")
                }
            };
            let mag = c.abs();
            let body = if mono.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                mono
            } else {
                format!("{mag}*{mono}")
            };
            if n == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        write!(f, "{out}")
    }
}

fn binomial_row(n: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = vec![BigInt::one(); row.len() + 1];
        for k in 1..row.len() {
            next[k] = &row[k - 1] + &row[k];
        }
        row = next;
    }
    row
}

/// `Σ_{A⊆E} (x-1)^{r(E)-r(A)} (y-1)^{|A|-r(A)}` over all `2^|E|` subsets.
pub fn tutte_subset_expansion(g: &MultiGraph) -> Result<BivariatePoly> {
    let m = g.edge_count();
    if m > SUBSET_EXPANSION_MAX_EDGES {
        return Err(Error::size(format!("subset expansion on {m} edges"), SUBSET_EXPANSION_MAX_EDGES as u64));
    }
    let nv = g.vertex_count();
    let rank_e = g.rank_profile().r;
    let edges = g.edges();
    // counts[(a, b)] = #{A : r(E)-r(A) = a, |A|-r(A) = b}
    let counts = (0u64..1 << m)
        .into_par_iter()
        .fold(HashMap::new, |mut acc: HashMap<(u32, u32), u64>, mask| {
            let mut dsu = Dsu::new(nv);
            let mut rank = 0usize;
            for (e, &(u, v)) in edges.iter().enumerate() {
                if mask >> e & 1 == 1 && dsu.union(u, v) {
                    rank += 1;
                }
            }
            let size = mask.count_ones() as usize;
            *acc.entry(((rank_e - rank) as u32, (size - rank) as u32)).or_insert(0) += 1;
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    let mut poly = BivariatePoly::zero();
    for ((a, b), count) in counts {
        let ra = binomial_row(a);
        let rb = binomial_row(b);
        for i in 0..=a {
            for j in 0..=b {
                let sign = if (a - i + b - j) % 2 == 0 { 1 } else { -1 };
                let c = BigInt::from(count) * &ra[i as usize] * &rb[j as usize] * sign;
                poly.add_term(i, j, c);
            }
        }
    }
    Ok(poly)
}

type EdgeKey = Vec<(u32, u32)>;

/// Deletion–contraction with a memo keyed on a canonical edge list.
#[derive(Default)]
pub struct DeletionContraction {
    memo: HashMap<EdgeKey, BivariatePoly>,
}

impl DeletionContraction {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn compute(&mut self, g: &MultiGraph) -> BivariatePoly {
        let edges: EdgeKey = g.edges().iter().map(|&(u, v)| (u as u32, v as u32)).collect();
        self.solve(edges)
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    fn solve(&mut self, edges: EdgeKey) -> BivariatePoly {
        let loops = edges.iter().filter(|(u, v)| u == v).count() as u32;
        let edges: EdgeKey = edges.into_iter().filter(|(u, v)| u != v).collect();
        if edges.is_empty() {
            return BivariatePoly::monomial(0, loops, BigInt::one());
        }
        let comps = split_components(&edges);
        let mut acc = BivariatePoly::monomial(0, loops, BigInt::one());
        for comp in comps {
            let key = canonical(&comp);
            let value = match self.memo.get(&key) {
                Some(v) => v.clone(),
                None => {
                    let v = self.solve_connected(&key);
                    self.memo.insert(key, v.clone());
                    v
                }
            };
            acc = acc.mul(&value);
        }
        acc
    }

    /// `edges` is loopless, connected and canonical.
    fn solve_connected(&mut self, edges: &EdgeKey) -> BivariatePoly {
        let nv = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap() as usize + 1;
        let mut deg = vec![0usize; nv];
        for &(u, v) in edges {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        // branch on a bundle at a minimum-degree vertex: leaves become bridges
        let u = (0..nv).filter(|&v| deg[v] > 0).min_by_key(|&v| deg[v]).unwrap() as u32;
        let v = edges.iter().find_map(|&(a, b)| if a == u { Some(b) } else if b == u { Some(a) } else { None }).unwrap();
        let is_bundle = |&(a, b): &(u32, u32)| (a == u && b == v) || (a == v && b == u);
        let k = edges.iter().filter(|e| is_bundle(e)).count() as u32;
        let rest: EdgeKey = edges.iter().copied().filter(|e| !is_bundle(e)).collect();
        let merged: EdgeKey = rest
            .iter()
            .map(|&(a, b)| (if a == v { u } else { a }, if b == v { u } else { b }))
            .collect();
        if connected(&rest, u, v) {
            let del = self.solve(rest);
            let con = self.solve(merged);
            del.add(&BivariatePoly::y_chain(k).mul(&con))
        } else {
            BivariatePoly::bond(k).mul(&self.solve(merged))
        }
    }
}

fn split_components(edges: &EdgeKey) -> Vec<EdgeKey> {
    let nv = edges.iter().map(|&(u, v)| u.max(v)).max().map_or(0, |m| m as usize + 1);
    let mut dsu = Dsu::new(nv);
    for &(u, v) in edges {
        dsu.union(u as usize, v as usize);
    }
    let mut groups: BTreeMap<usize, EdgeKey> = BTreeMap::new();
    for &(u, v) in edges {
        groups.entry(dsu.find(u as usize)).or_default().push((u, v));
    }
    groups.into_values().collect()
}

/// Relabel vertices by first occurrence, orient each edge low→high, sort.
fn canonical(edges: &EdgeKey) -> EdgeKey {
    let mut label: HashMap<u32, u32> = HashMap::new();
    let mut key: EdgeKey = edges
        .iter()
        .map(|&(u, v)| {
            let n = label.len() as u32;
            let a = *label.entry(u).or_insert(n);
            let n = label.len() as u32;
            let b = *label.entry(v).or_insert(n);
            (a.min(b), a.max(b))
        })
        .collect();
    key.sort_unstable();
    key
}

fn connected(edges: &EdgeKey, s: u32, t: u32) -> bool {
    let nv = edges.iter().map(|&(u, v)| u.max(v)).max().map_or(0, |m| m as usize + 1).max(s.max(t) as usize + 1);
    let mut dsu = Dsu::new(nv);
    for &(u, v) in edges {
        dsu.union(u as usize, v as usize);
    }
    dsu.find(s as usize) == dsu.find(t as usize)
}

pub fn tutte_deletion_contraction(g: &MultiGraph) -> BivariatePoly {
    DeletionContraction::new().compute(g)
}

/// A graph's Tutte polynomial together with its rank profile.
#[derive(Debug, Clone)]
pub struct Tutte {
    pub poly: BivariatePoly,
    pub profile: RankProfile,
    pub edge_count: usize,
    pub vertex_count: usize,
}

impl Tutte {
    pub fn of(g: &MultiGraph) -> Self {
        Tutte {
            poly: tutte_deletion_contraction(g),
            profile: g.rank_profile(),
            edge_count: g.edge_count(),
            vertex_count: g.vertex_count(),
        }
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.poly.evaluate(x, y)
    }

    /// `xs^r ys^n T(X/xs, Y/ys)`, division free.
    pub fn hom<S: Scalar>(&self, big_x: &S, xs: &S, big_y: &S, ys: &S) -> S {
        self.poly.eval_homogeneous(self.profile.r as u32, self.profile.n as u32, big_x, xs, big_y, ys)
    }

    /// `c^k a^n b^r T(cx/b, y/a)`, the Tutte–Grothendieck invariant with
    /// deletion–contraction weights `a, b`, isthmus value `x`, loop value `y`
    /// and edgeless value `c^{|V|}`. Defined for every `a, b` including zero.
    pub fn grothendieck(&self, a: &Rational, b: &Rational, c: &Rational, x: &Rational, y: &Rational) -> Rational {
        let ck = Scalar::pow(c, self.profile.k as u32);
        ck * self.hom(&(c * x), b, y, a)
    }

    /// `P(G;q) = (-1)^r q^k T(1-q, 0)`.
    pub fn chromatic(&self, q: i64) -> Result<Rational> {
        let t = self.eval(&int(1 - q), &int(0));
        let v = sign(self.profile.r) * Scalar::pow(&int(q), self.profile.k as u32) * t;
        integral(v, "chromatic value")
    }

    /// `F(G;q) = (-1)^n T(0, 1-q)`.
    pub fn flow(&self, q: i64) -> Result<Rational> {
        let v = sign(self.profile.n) * self.eval(&int(0), &int(1 - q));
        integral(v, "flow value")
    }
}

pub(crate) fn sign(e: usize) -> Rational {
    if e.is_multiple_of(2) {
        int(1)
    } else {
        int(-1)
    }
}

fn integral(v: Rational, what: &str) -> Result<Rational> {
    if v.is_integer() {
        Ok(v)
    } else {
        Err(Error::Internal(format!("{what} {v} is not an integer")))
    }
}

pub fn chromatic_value(g: &MultiGraph, q: i64) -> Result<Rational> {
    Tutte::of(g).chromatic(q)
}

pub fn flow_value(g: &MultiGraph, q: i64) -> Result<Rational> {
    Tutte::of(g).flow(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::by_name;
    use crate::cyclotomic::rat;

    fn poly(s: &[(u32, u32, i64)]) -> BivariatePoly {
        let mut p = BivariatePoly::zero();
        for &(i, j, c) in s {
            p.add_term(i, j, BigInt::from(c));
        }
        p
    }

    #[test]
    fn small_polynomials() {
        let k3 = by_name("K3").unwrap();
        let expect = poly(&[(2, 0, 1), (1, 0, 1), (0, 1, 1)]);
        assert_eq!(tutte_subset_expansion(&k3).unwrap(), expect);
        assert_eq!(tutte_deletion_contraction(&k3), expect);
        assert_eq!(expect.to_string(), "x^2 + x + y");

        assert_eq!(tutte_deletion_contraction(&by_name("edge").unwrap()).to_string(), "x");
        assert_eq!(tutte_deletion_contraction(&by_name("loop").unwrap()).to_string(), "y");
        assert_eq!(tutte_deletion_contraction(&by_name("C4").unwrap()).to_string(), "x^3 + x^2 + x + y");
        assert_eq!(tutte_deletion_contraction(&by_name("K3+K2").unwrap()).to_string(), "x^3 + x^2 + x*y");
        assert_eq!(tutte_deletion_contraction(&MultiGraph::empty(3)).to_string(), "1");
    }

    #[test]
    fn k4_known_polynomial() {
        let t = tutte_deletion_contraction(&by_name("K4").unwrap());
        assert_eq!(t.to_string(), "x^3 + y^3 + 3*x^2 + 4*x*y + 3*y^2 + 2*x + 2*y");
    }

    #[test]
    fn evaluations() {
        let t = Tutte::of(&by_name("K3").unwrap());
        assert_eq!(t.eval(&int(2), &int(2)), int(8));
        assert_eq!(t.eval(&int(-1), &int(0)), int(0));
        assert_eq!(t.eval(&int(-1), &int(-1)), int(-1));
        assert_eq!(t.eval(&int(-2), &rat(1, 3)), rat(7, 3));
        assert_eq!(t.chromatic(2).unwrap(), int(0));
        assert_eq!(t.chromatic(3).unwrap(), int(6));
        assert_eq!(t.flow(2).unwrap(), int(1));
        assert_eq!(t.flow(4).unwrap(), int(3));
        assert_eq!(Tutte::of(&by_name("K5").unwrap()).chromatic(4).unwrap(), int(0));
        assert_eq!(Tutte::of(&by_name("C4").unwrap()).flow(2).unwrap(), int(1));
    }

    #[test]
    fn homogeneous_matches_division() {
        let t = Tutte::of(&by_name("K4").unwrap());
        let (x, xs, y, ys) = (int(3), int(5), int(-2), int(7));
        let direct = t.eval(&(&x / &xs), &(&y / &ys)) * Scalar::pow(&xs, 3) * Scalar::pow(&ys, 3);
        assert_eq!(t.hom(&x, &xs, &y, &ys), direct);
    }

    #[test]
    fn grothendieck_degenerate_closed_forms() {
        // b = 0: c^{|V|} a^{n-l} x^r y^l ; a = 0: c^{k+i} b^{r-i} x^i y^n
        let g = MultiGraph::new(3, vec![(0, 1), (1, 2), (2, 0), (2, 2), (0, 1)]).unwrap();
        let t = Tutte::of(&g);
        let (a, c, x, y) = (int(3), int(2), int(5), int(7));
        let p = g.rank_profile();
        let l = g.loop_count() as u32;
        let expect_b0 = Scalar::pow(&c, 3) * Scalar::pow(&a, p.n as u32 - l) * Scalar::pow(&x, p.r as u32) * Scalar::pow(&y, l);
        assert_eq!(t.grothendieck(&a, &int(0), &c, &x, &y), expect_b0);

        let h = MultiGraph::new(4, vec![(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let th = Tutte::of(&h);
        let ph = h.rank_profile();
        let b = int(3);
        // one isthmus (2,3)
        let expect_a0 = Scalar::pow(&c, ph.k as u32 + 1) * Scalar::pow(&b, ph.r as u32 - 1) * x.clone() * Scalar::pow(&y, ph.n as u32);
        assert_eq!(th.grothendieck(&int(0), &b, &c, &x, &y), expect_a0);
    }
}
