//! Bias of parity events `|A| ± |B| (± |C|) mod q ∈ S` for uniformly random
//! edge subsets, unconditionally and given that the subsets have pairwise
//! eulerian symmetric differences.
//!
//! `Bias(Σ) = 2 P(Σ) - 1`. Both biases are available by enumeration over
//! coset weight classes and through Fourier coefficients on `Z_q`; the two
//! routes share nothing beyond the cycle-space basis, so agreement between
//! them is the main consistency check of this module.

use num::{BigInt, One, Signed, Zero};
use serde::Serialize;

use crate::cyclespace::{bicycle_dimension, check_modulus, cycle_space_checked};
use crate::cyclotomic::{check_residues, cos_rational, fmt_rational, fourier, fourier_indicator, int, rat, root_of_unity, transform_support, Cyc12, Rational, Scalar};
use crate::enumerators::{aggregate_convolution, convolve, Convolution};
use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::report::{ser_opt_rational, ser_rational, Check};
use crate::tutte::{sign, Tutte};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Combiner {
    Difference,
    Sum,
}

/// The event `combiner(|A|, |B|[, |C|]) mod q ∈ S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EventSpec {
    pub arity: u8,
    pub combiner: Combiner,
    pub q: u32,
    pub residues: Vec<u32>,
}

/// The three shapes of event, by convolution of residue counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EventKind {
    Difference,
    Sum,
    Triple,
}

impl EventSpec {
    pub fn new(arity: u8, combiner: Combiner, q: u32, residues: &[u32]) -> Result<Self> {
        check_modulus(q as usize)?;
        check_residues(q, residues)?;
        match (arity, combiner) {
            (2, _) | (3, Combiner::Sum) => {}
            (3, Combiner::Difference) => return Err(Error::Domain("the difference combiner needs arity 2".into())),
            _ => return Err(Error::Domain(format!("arity must be 2 or 3, got {arity}"))),
        }
        if residues.is_empty() || residues.len() == q as usize {
            return Err(Error::Domain("residue set must be nonempty and proper".into()));
        }
        let mut residues = residues.to_vec();
        residues.sort_unstable();
        Ok(EventSpec { arity, combiner, q, residues })
    }

    pub fn of_kind(kind: EventKind, q: u32, residues: &[u32]) -> Result<Self> {
        match kind {
            EventKind::Difference => EventSpec::new(2, Combiner::Difference, q, residues),
            EventKind::Sum => EventSpec::new(2, Combiner::Sum, q, residues),
            EventKind::Triple => EventSpec::new(3, Combiner::Sum, q, residues),
        }
    }

    pub fn kind(&self) -> EventKind {
        match (self.arity, self.combiner) {
            (2, Combiner::Difference) => EventKind::Difference,
            (2, Combiner::Sum) => EventKind::Sum,
            _ => EventKind::Triple,
        }
    }

    /// The complementary event.
    pub fn complement(&self) -> EventSpec {
        let residues = (0..self.q).filter(|l| !self.residues.contains(l)).collect();
        EventSpec { residues, ..self.clone() }
    }

    fn convolution(&self) -> Convolution {
        match self.kind() {
            EventKind::Difference => Convolution::Difference,
            EventKind::Sum => Convolution::Sum,
            EventKind::Triple => Convolution::TripleSum,
        }
    }

    pub fn describe(&self) -> String {
        let vars = match self.kind() {
            EventKind::Difference => "|A|-|B|",
            EventKind::Sum => "|A|+|B|",
            EventKind::Triple => "|A|+|B|+|C|",
        };
        let s: Vec<String> = self.residues.iter().map(u32::to_string).collect();
        format!("{vars} mod {} in {{{}}}", self.q, s.join(","))
    }
}

/// `(2/q) Σ_k ĥ(k) conj(1̂_S(k)) - 1`.
fn bias_from_transform(q: u32, s: &[u32], hat: &[Cyc12]) -> Result<Rational> {
    let ind = fourier_indicator(q, s)?;
    let mut acc = Cyc12::zero();
    for (h, i) in hat.iter().zip(&ind) {
        acc += h.clone() * i.conj();
    }
    let v = acc.to_rational().map_err(|_| Error::Internal(format!("bias transform not rational: {acc}")))?;
    Ok(v * rat(2, q as i64) - int(1))
}

/// `ĝ(k)` for the unconditional distribution of the combiner on `m` edges.
pub fn ghat(m: usize, ev: &EventSpec) -> Result<Vec<Cyc12>> {
    let q = ev.q;
    let half = Cyc12::from_rational(rat(1, 2));
    (0..q as i64)
        .map(|k| {
            let t = root_of_unity(q, -k)?;
            let u = (t + Cyc12::one()) * half.clone();
            Ok(match ev.kind() {
                EventKind::Difference => u.norm_sq().pow(m as u32),
                EventKind::Sum => u.pow(2 * m as u32),
                EventKind::Triple => u.pow(3 * m as u32),
            })
        })
        .collect()
}

/// Bias of the event for uniformly random subsets of `m` edges.
pub fn unconditional_bias(m: usize, ev: &EventSpec) -> Result<Rational> {
    bias_from_transform(ev.q, &ev.residues, &ghat(m, ev)?)
}

/// Distribution of the combiner mod `q` from binomial subset counts.
pub fn binomial_distribution(m: usize, ev: &EventSpec) -> Vec<Rational> {
    let q = ev.q as usize;
    let mut counts = vec![BigInt::zero(); q];
    let mut binom = BigInt::one();
    for j in 0..=m {
        counts[j % q] += &binom;
        binom = binom * (m - j) / (j + 1);
    }
    let conv = convolve(&counts, ev.convolution());
    let total: BigInt = conv.iter().sum();
    conv.into_iter().map(|c| Rational::new(c, total.clone())).collect()
}

/// Oracle for [`unconditional_bias`] by direct convolution of subset counts.
pub fn unconditional_bias_by_counts(m: usize, ev: &EventSpec) -> Rational {
    let dist = binomial_distribution(m, ev);
    let p: Rational = ev.residues.iter().map(|&l| dist[l as usize].clone()).sum();
    p * int(2) - int(1)
}

/// `f(l) = P(combiner ≡ l | Δ)` by summing coset convolutions.
pub fn conditional_distribution(g: &MultiGraph, ev: &EventSpec) -> Result<Vec<Rational>> {
    let cs = cycle_space_checked(g)?;
    let conv = aggregate_convolution(&cs, ev.q as usize, ev.convolution())?;
    let total: BigInt = conv.iter().sum();
    Ok(conv.into_iter().map(|c| Rational::new(c, total.clone())).collect())
}

/// `Bias(Σ | Δ)` by enumeration of coset weight classes.
pub fn conditional_bias(g: &MultiGraph, ev: &EventSpec) -> Result<Rational> {
    let dist = conditional_distribution(g, ev)?;
    let p: Rational = ev.residues.iter().map(|&l| dist[l as usize].clone()).sum();
    Ok(p * int(2) - int(1))
}

/// `f̂(k)` of the conditional distribution from the Tutte polynomial.
pub fn fhat_from_tutte(tt: &Tutte, ev: &EventSpec) -> Result<Vec<Cyc12>> {
    let q = ev.q;
    let m = tt.edge_count as u32;
    let n = tt.profile.n as u32;
    let one = int(1);
    let scale = Rational::one() / Scalar::pow(&int(2), n);
    let mut out = vec![Cyc12::one()];
    for k in 1..q as i64 {
        let t = root_of_unity(q, -k)?;
        let c = cos_rational(q, k)?;
        let v = match ev.kind() {
            EventKind::Difference => Cyc12::from(tt.hom(&one, &c, &(&one + &c), &(&one - &c))),
            EventKind::Sum => t.pow(m).scale(&tt.hom(&c, &one, &(&c + &one), &(&c - &one))),
            EventKind::Triple => {
                // phase t^{3|E|/2} and (1+cos)^{|E|/2} combine to (t(1+t)/2)^{|E|}
                let u = (t.clone() * (t + Cyc12::one())).scale(&rat(1, 2));
                u.pow(m).scale(&tt.hom(&(int(2) * &c - &one), &one, &(&c + &one), &(&c - &one)))
            }
        };
        out.push(v.scale(&scale));
    }
    Ok(out)
}

/// `Bias(Σ | Δ)` through the Tutte polynomial.
pub fn bias_from_tutte(g: &MultiGraph, ev: &EventSpec) -> Result<Rational> {
    bias_from_tutte_with(&Tutte::of(g), ev)
}

pub fn bias_from_tutte_with(tt: &Tutte, ev: &EventSpec) -> Result<Rational> {
    bias_from_transform(ev.q, &ev.residues, &fhat_from_tutte(tt, ev)?)
}

/// `f̂` of the enumerated conditional distribution.
pub fn fhat_by_enumeration(g: &MultiGraph, ev: &EventSpec) -> Result<Vec<Cyc12>> {
    fourier(ev.q, &conditional_distribution(g, ev)?)
}

/// `(Bias(Σ|Δ) - Bias(Σ'|Δ)) / (Bias(Σ) - Bias(Σ'))` for events whose
/// indicator transforms differ only at `k = ±1` (and `q/2` for triples).
pub fn theorem_ratio(g: &MultiGraph, q: u32, kind: EventKind, s: &[u32], s2: &[u32]) -> Result<Rational> {
    if ![3, 4, 6].contains(&q) {
        return Err(Error::Domain(format!("ratio theorem needs q in {{3,4,6}}, got {q}")));
    }
    let ev = EventSpec::of_kind(kind, q, s)?;
    let ev2 = EventSpec::of_kind(kind, q, s2)?;
    for k in transform_support(q, s, s2)? {
        let allowed = k == 1 || k == q - 1 || (kind == EventKind::Triple && q.is_multiple_of(2) && k == q / 2);
        if !allowed {
            return Err(Error::Domain(format!("indicator transforms differ at k={k}")));
        }
    }
    let m = g.edge_count();
    let den = unconditional_bias(m, &ev)? - unconditional_bias(m, &ev2)?;
    if den.is_zero() {
        return Err(Error::Domain("degenerate denominator: the two unconditional biases are equal".into()));
    }
    Ok((conditional_bias(g, &ev)? - conditional_bias(g, &ev2)?) / den)
}

/// Closed form of the ratio with `c = cos(2π/q)`:
/// `2^r (1+c)^{-|E|} · h`, where `h` is `c^r (1-c)^n T(1/c, (1+c)/(1-c))`,
/// `(c-1)^n T(c, (c+1)/(c-1))` or `(c-1)^n T(2c-1, (c+1)/(c-1))`.
pub fn general_closed_form(tt: &Tutte, q: u32, kind: EventKind) -> Result<Rational> {
    let c = cos_rational(q, 1)?;
    let one = int(1);
    let h = match kind {
        EventKind::Difference => tt.hom(&one, &c, &(&one + &c), &(&one - &c)),
        EventKind::Sum => tt.hom(&c, &one, &(&c + &one), &(&c - &one)),
        EventKind::Triple => tt.hom(&(int(2) * &c - &one), &one, &(&c + &one), &(&c - &one)),
    };
    let pref = Scalar::pow(&int(2), tt.profile.r as u32) / Scalar::pow(&(&one + &c), tt.edge_count as u32);
    Ok(pref * h)
}

/// True iff `|A| - |B| mod q` is uniform for random subsets of `m` edges.
pub fn equidistribution_check(m: usize, q: u32) -> Result<bool> {
    check_modulus(q as usize)?;
    let ev = EventSpec { arity: 2, combiner: Combiner::Difference, q, residues: vec![0] };
    let dist = binomial_distribution(m, &ev);
    Ok(dist.iter().all(|p| *p == dist[0]))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BiasReport {
    pub event: EventSpec,
    #[serde(serialize_with = "ser_rational")]
    pub bias_unconditional: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub bias_conditional: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub correlation: Rational,
    #[serde(serialize_with = "ser_opt_rational")]
    pub ratio: Option<Rational>,
}

impl BiasReport {
    pub fn new(event: EventSpec, bias_unconditional: Rational, bias_conditional: Rational) -> Self {
        let correlation = (&bias_conditional - &bias_unconditional) / int(2);
        let ratio = (!bias_unconditional.is_zero()).then(|| &bias_conditional / &bias_unconditional);
        BiasReport { event, bias_unconditional, bias_conditional, correlation, ratio }
    }
}

/// Exact report, with the conditional bias by enumeration.
pub fn bias_report(g: &MultiGraph, ev: &EventSpec) -> Result<BiasReport> {
    Ok(BiasReport::new(ev.clone(), unconditional_bias(g.edge_count(), ev)?, conditional_bias(g, ev)?))
}

pub(crate) fn pow2(e: i64) -> Rational {
    if e >= 0 {
        Scalar::pow(&int(2), e as u32)
    } else {
        Rational::one() / Scalar::pow(&int(2), (-e) as u32)
    }
}

/// Unconditional bias of `|A|+|B|+|C| ≡ 0,1 (mod 4)` by `|E| mod 8`.
pub fn triple_q4_unconditional(m: usize) -> Rational {
    let m8 = m % 8;
    let e = m as i64;
    match m8 {
        0 | 6 => pow2(-3 * e / 2),
        1 | 5 => int(0),
        2 | 4 => -pow2(-3 * e / 2),
        3 => pow2((1 - 3 * e) / 2),
        _ => -pow2((1 - 3 * e) / 2),
    }
}

/// Unconditional bias of `|A|+|B|+|C| ≡ 0,1,2 (mod 6)`:
/// `(3/4)^{3|E|/2 - 1} Re[i^{-|E|} e^{πi/3}]`.
///
/// `conj(1̂_S(1)) = 2e^{πi/3} = -2e^{-2πi/3}`; keeping the sign here makes
/// the value negative for `|E| = 3`, as enumeration confirms.
pub fn triple_q6_unconditional(m: usize) -> Result<Rational> {
    let w = root_of_unity(4, -(m as i64))? * root_of_unity(6, 1)?;
    let re = (w.clone() + w.conj()).scale(&rat(1, 2));
    let three_quarters = rat(3, 4);
    let mag = if m.is_multiple_of(2) {
        Cyc12::from_rational(Scalar::pow(&three_quarters, (3 * m as u32 - 2) / 2))
    } else {
        // (3/4)^{1/2} = √3/2 = (ζ₁₂ + ζ₁₂⁻¹)/2
        let sqrt = (Cyc12::zeta() + Cyc12::zeta().conj()).scale(&rat(1, 2));
        sqrt.scale(&Scalar::pow(&three_quarters, (3 * m as u32 - 3) / 2))
    };
    (mag * re).to_rational()
}

fn ev(kind: EventKind, q: u32, s: &[u32]) -> EventSpec {
    EventSpec::of_kind(kind, q, s).expect("registry events are valid")
}

/// Checks every named correlation theorem on `g`; conditional biases come
/// from enumeration, closed forms from the Tutte polynomial.
pub fn verify_named_theorems(g: &MultiGraph) -> Result<Vec<Check>> {
    let tt = Tutte::of(g);
    let p = tt.profile;
    let m = g.edge_count();
    let mut out = Vec::new();
    let ratio_check = |out: &mut Vec<Check>, name: &str, kind: EventKind, q: u32, s: &[u32], s2: &[u32], expect: Rational| {
        match theorem_ratio(g, q, kind, s, s2) {
            Ok(v) => out.push(Check::rational(name, format!("q={q} S={s:?} S'={s2:?}"), &v, &expect)),
            Err(e) => out.push(Check::new(name, format!("q={q} S={s:?} S'={s2:?}"), e.to_string(), fmt_rational(&expect), false)),
        }
        if let Ok(gen) = general_closed_form(&tt, q, kind) {
            out.push(Check::rational(format!("{name} general form"), format!("q={q}"), &gen, &expect));
        }
    };

    // q = 2
    let e = ev(EventKind::Sum, 2, &[0]);
    let cond = conditional_bias(g, &e)?;
    out.push(Check::rational("squares q=2 tutte", "S={0}", &cond, &(sign(p.r) * tt.eval(&int(-1), &int(0)))));
    let chrom = tt.chromatic(2)? / Scalar::pow(&int(2), p.k as u32);
    out.push(Check::rational("squares q=2 chromatic", "S={0}", &cond, &chrom));
    out.push(Check::rational("squares q=2 fourier route", "S={0}", &cond, &bias_from_tutte_with(&tt, &e)?));

    let e = ev(EventKind::Triple, 2, &[0]);
    out.push(Check::rational("three uncorrelated even", "S={0}", &conditional_bias(g, &e)?, &int(0)));

    // q = 3
    let d1 = conditional_bias(g, &ev(EventKind::Difference, 3, &[1]))?;
    let d2 = conditional_bias(g, &ev(EventKind::Difference, 3, &[2]))?;
    out.push(Check::rational("A-B q=3 equal biases", "S={1} vs S={2}", &d1, &d2));
    let expect = Scalar::pow(&int(-2), p.r as u32) * Scalar::pow(&int(3), p.n as u32) * tt.eval(&int(-2), &rat(1, 3));
    ratio_check(&mut out, "A-B q=3 ratio", EventKind::Difference, 3, &[0], &[1], expect);

    let shift = (m % 3) as u32;
    let s1 = conditional_bias(g, &ev(EventKind::Sum, 3, &[(shift + 1) % 3]))?;
    let s2 = conditional_bias(g, &ev(EventKind::Sum, 3, &[(shift + 2) % 3]))?;
    out.push(Check::rational("cube root A+B equal biases", "S={|E|+1} vs S={|E|+2}", &s1, &s2));
    let expect = Scalar::pow(&int(4), p.r as u32) * Scalar::pow(&int(-3), p.n as u32) * tt.eval(&rat(-1, 2), &rat(-1, 3));
    ratio_check(&mut out, "cube root A+B ratio", EventKind::Sum, 3, &[shift], &[(shift + 1) % 3], expect);

    let t1 = conditional_bias(g, &ev(EventKind::Triple, 3, &[1]))?;
    let t2 = conditional_bias(g, &ev(EventKind::Triple, 3, &[2]))?;
    out.push(Check::rational("cube root A+B+C equal biases", "S={1} vs S={2}", &t1, &t2));
    let expect = Scalar::pow(&int(4), p.r as u32) * Scalar::pow(&int(-3), p.n as u32) * tt.eval(&int(-2), &rat(-1, 3));
    ratio_check(&mut out, "cube root A+B+C ratio", EventKind::Triple, 3, &[0], &[1], expect);

    // q = 4
    let two_r = Scalar::pow(&int(2), p.r as u32);
    let e = ev(EventKind::Difference, 4, &[0, 1]);
    let un = unconditional_bias(m, &e)?;
    out.push(Check::rational("A-B q=4 unconditional", "S={0,1}", &un, &pow2(-(m as i64))));
    out.push(Check::rational("A-B q=4 ratio", "S={0,1}", &(conditional_bias(g, &e)? / &un), &two_r));
    ratio_check(&mut out, "A-B q=4 difference ratio", EventKind::Difference, 4, &[0, 1], &[2, 3], two_r.clone());

    let e = ev(EventKind::Sum, 4, &[0, 1]);
    let un = unconditional_bias(m, &e)?;
    let expect_un = if (m / 2).is_multiple_of(2) { pow2(-(m as i64)) } else { -pow2(-(m as i64)) };
    out.push(Check::rational("squares q=4 unconditional", "S={0,1}", &un, &expect_un));
    let expect = &two_r * tt.flow(2)?;
    out.push(Check::rational("squares q=4 ratio", "S={0,1}", &(conditional_bias(g, &e)? / &un), &expect));
    let via_t = &two_r * sign(p.n) * tt.eval(&int(0), &int(-1));
    ratio_check(&mut out, "squares q=4 difference ratio", EventKind::Sum, 4, &[0, 1], &[2, 3], via_t);

    let e = ev(EventKind::Triple, 4, &[0, 1]);
    let un = unconditional_bias(m, &e)?;
    out.push(Check::rational("A+B+C q=4 unconditional", "S={0,1}", &un, &triple_q4_unconditional(m)));
    let cond = conditional_bias(g, &e)?;
    if m % 4 == 1 {
        out.push(Check::rational("A+B+C q=4 zero branch unconditional", "|E|=1 mod 4", &un, &int(0)));
        out.push(Check::rational("A+B+C q=4 zero branch conditional", "|E|=1 mod 4", &cond, &int(0)));
    } else {
        let expect = &two_r * sign(p.n) * tt.eval(&int(-1), &int(-1));
        out.push(Check::rational("A+B+C q=4 ratio", "S={0,1}", &(&cond / &un), &expect));
        ratio_check(&mut out, "A+B+C q=4 difference ratio", EventKind::Triple, 4, &[0, 1], &[2, 3], expect.clone());
        let b = bicycle_dimension(g);
        let bicycle = Scalar::pow(&int(-2), (p.r + b) as u32);
        out.push(Check::rational("A+B+C q=4 bicycle form", format!("bicycle dim {b}"), &expect, &bicycle));
    }

    // q = 6
    let e = ev(EventKind::Triple, 6, &[0, 1, 2]);
    let un = unconditional_bias(m, &e)?;
    out.push(Check::rational("sum cubes q=6 unconditional", "S={0,1,2}", &un, &triple_q6_unconditional(m)?));
    let expect = Scalar::pow(&int(4), p.r as u32) * tt.flow(4)? / Scalar::pow(&int(3), m as u32);
    out.push(Check::rational("sum cubes q=6 ratio", "S={0,1,2}", &(conditional_bias(g, &e)? / &un), &expect));
    ratio_check(&mut out, "sum cubes q=6 difference ratio", EventKind::Triple, 6, &[0, 1, 2], &[3, 4, 5], expect);

    Ok(out)
}

/// Whether a probability-like rational lies in `[-1, 1]`.
pub fn in_unit_interval(x: &Rational) -> bool {
    x.abs() <= int(1)
}
