//! Hamming weight enumerators of the cycle space, its cosets and the
//! cutset space, and checks of the identities that tie them to the Tutte
//! polynomial.
//!
//! Power sums over cosets are computed from residue counts `p_l` and cyclic
//! convolutions; the Tutte side always uses division-free homogeneous
//! evaluation so that degenerate parameter values need no special casing.

use num::{BigInt, One, Zero};

use crate::cyclespace::{check_modulus, cocycle_basis, cycle_basis, fold_mod, CycleSpace, EdgeSubset};
use crate::cyclotomic::{cos_rational, fmt_rational, int, rat, root_of_unity, Cyc12, Rational, Scalar};
use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::report::Check;
use crate::tutte::{sign, Tutte};

/// Limit on `log2` of the number of tuples enumerated by pair/triple sums.
pub const TUPLE_ENUM_MAX_LOG2: usize = 30;

/// `coeffs[d] = #{x : |E| - |x| = d}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightPoly {
    pub coeffs: Vec<BigInt>,
}

impl WeightPoly {
    pub fn from_counts(h: &[u64]) -> Self {
        WeightPoly { coeffs: h.iter().map(|&c| BigInt::from(c)).collect() }
    }

    pub fn eval<S: Scalar>(&self, t: &S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t.clone() + S::from_bigint(c);
        }
        acc
    }

    pub fn total(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }
}

fn ensure_log2(what: &str, log2: usize) -> Result<()> {
    if log2 > TUPLE_ENUM_MAX_LOG2 {
        return Err(Error::size(format!("{what}: 2^{log2} tuples"), 1u64 << TUPLE_ENUM_MAX_LOG2));
    }
    Ok(())
}

/// Span of `basis` as masks, Gray-code order.
pub fn span_masks(basis: &[u64]) -> Vec<u64> {
    let mut out = Vec::with_capacity(1 << basis.len());
    let mut x = 0u64;
    out.push(x);
    for i in 1u64..(1u64 << basis.len()) {
        x ^= basis[i.trailing_zeros() as usize];
        out.push(x);
    }
    out
}

/// All eulerian subgraphs of `g` as masks.
pub fn eulerian_masks(g: &MultiGraph) -> Result<Vec<u64>> {
    cycle_basis(g).elements()
}

/// All cutsets (elements of the cocycle space) of `g` as masks.
pub fn cutset_masks(g: &MultiGraph) -> Result<Vec<u64>> {
    g.ensure_enumerable("cutset enumeration")?;
    let basis: Vec<u64> = cocycle_basis(g).iter().map(|b| b.to_mask().expect("bounded")).collect();
    Ok(span_masks(&basis))
}

/// Weight enumerator of the coset `C₂ + z`.
pub fn hwe_coset(g: &MultiGraph, z: &EdgeSubset) -> Result<WeightPoly> {
    let cs = cycle_basis(g);
    let z = z.to_mask().ok_or_else(|| Error::size("edge subset wider than 64", 64))?;
    Ok(WeightPoly::from_counts(&cs.coset_histogram(z)?))
}

fn hwe_of_space(m: usize, elems: &[u64], q: usize) -> Result<WeightPoly> {
    let mut h = vec![0u64; m + 1];
    match q {
        2 => {
            for &x in elems {
                h[m - x.count_ones() as usize] += 1;
            }
        }
        4 => {
            ensure_log2("pair enumeration", 2 * elems.len().trailing_zeros() as usize)?;
            for &a in elems {
                for &b in elems {
                    h[m - (a | b).count_ones() as usize] += 1;
                }
            }
        }
        _ => return Err(Error::Domain(format!("flow weight enumerator needs q in {{2,4}}, got {q}"))),
    }
    Ok(WeightPoly::from_counts(&h))
}

/// Weight enumerator of the `F_q`-flows, `q ∈ {2,4}` (for `q = 4` the flow
/// space is `C₂ × C₂` and an element `(A,B)` has support `A ∪ B`).
pub fn hwe_flows(g: &MultiGraph, q: usize) -> Result<WeightPoly> {
    hwe_of_space(g.edge_count(), &eulerian_masks(g)?, q)
}

/// Weight enumerator of the `F_q`-tensions, `q ∈ {2,4}`.
pub fn hwe_tensions(g: &MultiGraph, q: usize) -> Result<WeightPoly> {
    hwe_of_space(g.edge_count(), &cutset_masks(g)?, q)
}

fn reject_one(t: &Rational) -> Result<()> {
    if t.is_one() {
        return Err(Error::Domain("t = 1 is excluded".into()));
    }
    Ok(())
}

/// `hwe(flows; t) = (t-1)^n T(t, (t+q-1)/(t-1))`.
pub fn verify_flow_hwe(g: &MultiGraph, q: usize, t: &Rational) -> Result<Check> {
    reject_one(t)?;
    let lhs = hwe_flows(g, q)?.eval(t);
    let tt = Tutte::of(g);
    let rhs = tt.hom(t, &int(1), &(t + int(q as i64 - 1)), &(t - int(1)));
    Ok(Check::rational("flow hwe", format!("q={q} t={}", fmt_rational(t)), &lhs, &rhs))
}

/// MacWilliams duality between flows and tensions at `t`, together with the
/// signed eulerian sums that specialize it to `P(G;2)` and `P(G;4)`.
pub fn verify_macwilliams(g: &MultiGraph, q: usize, t: &Rational) -> Result<Vec<Check>> {
    reject_one(t)?;
    let m = g.edge_count() as u32;
    let flows = hwe_flows(g, q)?;
    let tensions = hwe_tensions(g, q)?;
    let lhs = flows.eval(t);
    let s = (t + int(q as i64 - 1)) / (t - int(1));
    let n_tensions = Rational::from_integer(tensions.total());
    let rhs = Scalar::pow(&(t - int(1)), m) / n_tensions * tensions.eval(&s);
    let params = format!("q={q} t={}", fmt_rational(t));
    let mut out = vec![Check::rational("macwilliams", params.clone(), &lhs, &rhs)];

    let tt = Tutte::of(g);
    let e_minus_v = g.edge_count() as i64 - g.vertex_count() as i64;
    let pow_signed = |base: i64, e: i64| -> Rational {
        if e >= 0 {
            Scalar::pow(&int(base), e as u32)
        } else {
            Rational::one() / Scalar::pow(&int(base), (-e) as u32)
        }
    };
    if q == 2 {
        let signed: i64 = eulerian_masks(g)?.iter().map(|a| if a.count_ones() % 2 == 0 { 1 } else { -1 }).sum();
        let rhs = pow_signed(2, e_minus_v) * tt.chromatic(2)?;
        out.push(Check::rational("eulerian sign sum", "q=2", &int(signed), &rhs));
    } else {
        let sum = flows.eval(&int(-3));
        let rhs = sign(g.edge_count()) * pow_signed(4, e_minus_v) * tt.chromatic(4)?;
        out.push(Check::rational("eulerian pair sum", "q=4 base=-3", &sum, &rhs));
    }
    Ok(out)
}

/// Residue counts of every coset, as `(p, multiplicity)` classes.
pub fn residue_classes(cs: &CycleSpace, q: usize) -> Result<Vec<(Vec<u64>, u64)>> {
    check_modulus(q)?;
    Ok(cs.coset_histogram_classes()?.into_iter().map(|(h, mult)| (fold_mod(&h, q), mult)).collect())
}

/// How the residue counts of one coset are convolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convolution {
    /// `P_l = Σ_{j-k≡l} p_j p_k`
    Difference,
    /// `P_l = Σ_{j+k≡l} p_j p_k`
    Sum,
    /// `P_l = Σ_{i+j+k≡l} p_i p_j p_k`
    TripleSum,
}

pub fn convolve(p: &[BigInt], kind: Convolution) -> Vec<BigInt> {
    let q = p.len();
    let mut out = vec![BigInt::zero(); q];
    match kind {
        Convolution::Difference | Convolution::Sum => {
            for (j, pj) in p.iter().enumerate() {
                for (k, pk) in p.iter().enumerate() {
                    let l = if kind == Convolution::Sum { (j + k) % q } else { (j + q - k) % q };
                    out[l] += pj * pk;
                }
            }
        }
        Convolution::TripleSum => {
            for (i, pi) in p.iter().enumerate() {
                for (j, pj) in p.iter().enumerate() {
                    let pij = pi * pj;
                    for (k, pk) in p.iter().enumerate() {
                        out[(i + j + k) % q] += &pij * pk;
                    }
                }
            }
        }
    }
    out
}

/// `Σ_cosets P_l` for every residue `l`.
pub fn aggregate_convolution(cs: &CycleSpace, q: usize, kind: Convolution) -> Result<Vec<BigInt>> {
    let mut total = vec![BigInt::zero(); q];
    for (p, mult) in residue_classes(cs, q)? {
        let p: Vec<BigInt> = p.into_iter().map(BigInt::from).collect();
        for (acc, v) in total.iter_mut().zip(convolve(&p, kind)) {
            *acc += v * mult;
        }
    }
    Ok(total)
}

/// `Σ_z hwe(C₂+z; ζ_q^k)^power`, or `Σ_z |hwe(C₂+z; ζ_q^k)|²` when `absolute`.
pub fn coset_power_sum(g: &MultiGraph, q: usize, k: i64, power: u32, absolute: bool) -> Result<Cyc12> {
    let kind = match (power, absolute) {
        (2, true) => Convolution::Difference,
        (2, false) => Convolution::Sum,
        (3, false) => Convolution::TripleSum,
        _ => return Err(Error::Domain(format!("unsupported power sum: power {power}, absolute {absolute}"))),
    };
    let total = aggregate_convolution(&cycle_basis(g), q, kind)?;
    let mut acc = Cyc12::zero();
    for (l, c) in total.iter().enumerate() {
        acc += root_of_unity(q as u32, k * l as i64)?.scale(&Rational::from_integer(c.clone()));
    }
    Ok(acc)
}

/// Direct evaluation `Σ_z f(hwe(C₂+z; t))` from the coset histograms.
pub fn coset_sum_with<S: Scalar>(cs: &CycleSpace, t: &S, f: impl Fn(S) -> S) -> Result<S> {
    let mut acc = S::zero();
    for (h, mult) in cs.coset_histogram_classes()? {
        let v = f(WeightPoly::from_counts(&h).eval(t));
        acc = acc + v * S::from_bigint(&BigInt::from(mult));
    }
    Ok(acc)
}

/// The three coset power-sum identities at a rational or cyclotomic `t`.
pub fn verify_sum_cubes(g: &MultiGraph, t: &Cyc12) -> Result<Vec<Check>> {
    if *t == Cyc12::one() {
        return Err(Error::Domain("t = 1 is excluded".into()));
    }
    let cs = cycle_basis(g);
    let tt = Tutte::of(g);
    let one = Cyc12::one();
    let two = Cyc12::from_int(2);
    let tb = t.conj();
    let params = format!("t={t}");

    let lhs1 = coset_sum_with(&cs, t, |h| h.norm_sq())?;
    let abs_t2 = t.norm_sq();
    let rhs1 = tt.hom(
        &(abs_t2 + one.clone()),
        &(t.clone() + tb.clone()),
        &(t.clone() + one.clone()).norm_sq(),
        &(t.clone() - one.clone()).norm_sq(),
    );

    let lhs2 = coset_sum_with(&cs, t, |h| h.clone() * h)?;
    let tp1_sq = (t.clone() + one.clone()).pow(2);
    let tm1_sq = (t.clone() - one.clone()).pow(2);
    let rhs2 = tt.hom(&(t.pow(2) + one.clone()), &(two * t.clone()), &tp1_sq, &tm1_sq);

    let lhs3 = coset_sum_with(&cs, t, |h| h.pow(3))?;
    let rhs3 = (t.clone() + one.clone()).pow(g.edge_count() as u32)
        * tt.hom(&(t.pow(2) - t.clone() + one), t, &tp1_sq, &tm1_sq);

    Ok(vec![
        Check::cyc("sum abs squares", params.clone(), &lhs1, &rhs1),
        Check::cyc("sum squares", params.clone(), &lhs2, &rhs2),
        Check::cyc("sum cubes", params, &lhs3, &rhs3),
    ])
}

/// Tutte evaluation points of the three real-sum identities at `cos θ = c`.
pub fn table_points(c: &Rational) -> [Option<(Rational, Rational)>; 3] {
    let one = int(1);
    let first = if c.is_zero() || c.is_one() { None } else { Some((&one / c, (&one + c) / (&one - c))) };
    let second = if c.is_one() { None } else { Some((c.clone(), (c + &one) / (c - &one))) };
    let third = if c.is_one() { None } else { Some((int(2) * c - &one, (c + &one) / (c - &one))) };
    [first, second, third]
}

/// The expected evaluation points for `cos θ ∈ {-1, -1/2, 0, 1/2}`.
pub fn expected_table_row(c: &Rational) -> Option<[Option<(Rational, Rational)>; 3]> {
    let p = |a: Rational, b: Rational| Some((a, b));
    if *c == int(-1) {
        Some([p(int(-1), int(0)), p(int(-1), int(0)), p(int(-3), int(0))])
    } else if *c == rat(-1, 2) {
        Some([p(int(-2), rat(1, 3)), p(rat(-1, 2), rat(-1, 3)), p(int(-2), rat(-1, 3))])
    } else if c.is_zero() {
        Some([None, p(int(0), int(-1)), p(int(-1), int(-1))])
    } else if *c == rat(1, 2) {
        Some([p(int(2), int(3)), p(rat(1, 2), int(-3)), p(int(0), int(-3))])
    } else {
        None
    }
}

/// The real-valued forms of the power-sum identities at `t = e^{2πik/q}`.
///
/// The cube identity carries `(2t)^{3|E|/2}` and `(1+cos θ)^{|E|/2}`; it is
/// checked as `Σ hwe³ = 2^{-r} (2t)^{|E|} (t+1)^{|E|} (cos θ-1)^n T(...)`,
/// taking `(2t(1+cos θ))^{1/2} = t+1`, and also in the branch-free squared
/// magnitude form.
pub fn verify_real_sums(g: &MultiGraph, q: u32, k: i64) -> Result<Vec<Check>> {
    check_modulus(q as usize)?;
    if k.rem_euclid(q as i64) == 0 {
        return Err(Error::Domain("θ must lie in (0, 2π)".into()));
    }
    let t = root_of_unity(q, k)?;
    let c = cos_rational(q, k)?;
    let tt = Tutte::of(g);
    let p = tt.profile;
    let m = g.edge_count() as u32;
    let cs = cycle_basis(g);
    let params = format!("q={q} k={k} cos={}", fmt_rational(&c));
    let one = int(1);
    let mut out = Vec::new();

    let abs_sum = coset_power_sum(g, q as usize, k, 2, true)?.to_rational().map_err(|_| Error::Internal("|hwe|² sum not rational".into()))?;
    let lhs1 = abs_sum / Scalar::pow(&int(2), m);
    let rhs1 = tt.hom(&one, &c, &(&one + &c), &(&one - &c));
    out.push(Check::rational("abs sum squares theta", params.clone(), &lhs1, &rhs1));
    if c.is_zero() {
        out.push(Check::rational("abs sum squares theta equals 1", params.clone(), &rhs1, &one));
    }

    let sq = coset_power_sum(g, q as usize, k, 2, false)?;
    let scale = Scalar::pow(&t.conj(), m).scale(&(one.clone() / Scalar::pow(&int(2), m)));
    let lhs2 = sq * scale;
    let rhs2 = Cyc12::from(tt.hom(&c, &one, &(&c + &one), &(&c - &one)));
    out.push(Check::cyc("sum squares real", params.clone(), &lhs2, &rhs2));

    let cubes = coset_power_sum(g, q as usize, k, 3, false)?;
    let direct = coset_sum_with(&cs, &t, |h| h.pow(3))?;
    out.push(Check::cyc("sum cubes convolution route", params.clone(), &cubes, &direct));
    let t_part = tt.hom(&(int(2) * &c - &one), &one, &(&c + &one), &(&c - &one));
    let two_t = t.scale(&int(2));
    let rhs3 = (two_t.pow(m) * (t.clone() + Cyc12::one()).pow(m)).scale(&(t_part.clone() / Scalar::pow(&int(2), p.r as u32)));
    out.push(Check::cyc("sum cubes real", params.clone(), &cubes, &rhs3));
    let mag_lhs = cubes.norm_sq().to_rational().map_err(|_| Error::Internal("|Σ hwe³|² not rational".into()))?
        / Scalar::pow(&int(2), 3 * m);
    let mag_rhs = Scalar::pow(&(&one + &c), m) * Scalar::pow(&t_part, 2) / Scalar::pow(&int(4), p.r as u32);
    out.push(Check::rational("sum cubes real squared magnitude", params.clone(), &mag_lhs, &mag_rhs));
    if c == int(-1) && m > 0 {
        out.push(Check::cyc("sum cubes real vanishes", params.clone(), &cubes, &Cyc12::zero()));
    }

    if let Some(expected) = expected_table_row(&c) {
        let fmt = |pt: &Option<(Rational, Rational)>| match pt {
            Some((a, b)) => format!("({},{})", fmt_rational(a), fmt_rational(b)),
            None => "*".to_string(),
        };
        let got = table_points(&c);
        for (i, (gp, ep)) in got.iter().zip(expected.iter()).enumerate() {
            out.push(Check::new(format!("table point {}", i + 1), params.clone(), fmt(gp), fmt(ep), gp == ep));
        }
    }
    Ok(out)
}

/// `Σ_z hwe(C₂+z;t)⁴ = 2^{-3r} (t²-1)^{2|E|} Σ_{cutsets A,B,C} s^{|E|-|A∪B∪C|-|A∩B∩C|}`,
/// `s = ((t+1)/(t-1))²`.
pub fn verify_fourth_power(g: &MultiGraph, t: &Rational) -> Result<Check> {
    if t.is_one() || *t == int(-1) {
        return Err(Error::Domain("t = ±1 is excluded".into()));
    }
    let cs = cycle_basis(g);
    let lhs = coset_sum_with(&cs, t, |h| Scalar::pow(&h, 4))?;
    let cuts = cutset_masks(g)?;
    let rhs = fourth_power_rhs(g, t, &cuts, g.rank_profile().r)?;
    Ok(Check::rational("fourth power", format!("t={}", fmt_rational(t)), &lhs, &rhs))
}

/// The right-hand side with the triple sum running over `family`.
pub fn fourth_power_rhs(g: &MultiGraph, t: &Rational, family: &[u64], r: usize) -> Result<Rational> {
    ensure_log2("triple enumeration", 3 * family.len().trailing_zeros() as usize)?;
    let m = g.edge_count();
    // hist[m + d] = #{(A,B,C) : |E| - |A∪B∪C| - |A∩B∩C| = d}, -|E| <= d <= |E|
    let mut hist = vec![0u64; 2 * m + 1];
    for &a in family {
        for &b in family {
            for &c in family {
                let d = 2 * m - (a | b | c).count_ones() as usize - (a & b & c).count_ones() as usize;
                hist[d] += 1;
            }
        }
    }
    let one = int(1);
    let s = Scalar::pow(&((t + &one) / (t - &one)), 2);
    let sum = WeightPoly::from_counts(&hist).eval(&s) / Scalar::pow(&s, m as u32);
    let pref = Scalar::pow(&(t * t - &one), 2 * m as u32) / Scalar::pow(&int(2), 3 * r as u32);
    Ok(pref * sum)
}

/// `T(t, (t+1)/(t-1)) = (-1)^n t^r T(1/t, (1+t)/(1-t))` for eulerian `G`.
pub fn verify_eulerian_reciprocal(g: &MultiGraph, t: &Rational) -> Result<Check> {
    if !g.is_eulerian() {
        return Err(Error::Precondition("graph is not eulerian (some vertex has odd degree)".into()));
    }
    if t.is_zero() || t.is_one() || *t == int(-1) {
        return Err(Error::Domain("t must avoid 0 and ±1".into()));
    }
    let tt = Tutte::of(g);
    let one = int(1);
    let lhs = tt.eval(t, &((t + &one) / (t - &one)));
    let p = tt.profile;
    let rhs = sign(p.n) * Scalar::pow(t, p.r as u32) * tt.eval(&(&one / t), &((&one + t) / (&one - t)));
    Ok(Check::rational("eulerian reciprocal", format!("t={}", fmt_rational(t)), &lhs, &rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::by_name;

    #[test]
    fn coset_enumerators() {
        let k3 = by_name("K3").unwrap();
        let w = hwe_coset(&k3, &EdgeSubset::empty(3)).unwrap();
        assert_eq!(w, WeightPoly::from_counts(&[1, 0, 0, 1]));
        let w1 = hwe_coset(&k3, &EdgeSubset::from_edges(3, &[0])).unwrap();
        assert_eq!(w1, WeightPoly::from_counts(&[0, 1, 1, 0]));
        let lp = by_name("loop").unwrap();
        assert_eq!(hwe_coset(&lp, &EdgeSubset::empty(1)).unwrap(), WeightPoly::from_counts(&[1, 1]));
    }

    #[test]
    fn flow_hwe_examples() {
        let k3 = by_name("K3").unwrap();
        let c = verify_flow_hwe(&k3, 2, &int(2)).unwrap();
        assert!(c.pass);
        assert_eq!(c.lhs, "9");
        let lp = by_name("loop").unwrap();
        let c = verify_flow_hwe(&lp, 2, &int(3)).unwrap();
        assert!(c.pass && c.lhs == "4");
        let c = verify_flow_hwe(&k3, 4, &int(-3)).unwrap();
        assert!(c.pass && c.lhs == "-24", "{c}");
        assert!(verify_flow_hwe(&k3, 2, &int(1)).is_err());
    }

    #[test]
    fn macwilliams_examples() {
        for (name, q, sum) in [("K3", 2, "0"), ("C4", 2, "2"), ("K3", 4, "-24")] {
            let checks = verify_macwilliams(&by_name(name).unwrap(), q, &int(3)).unwrap();
            assert!(checks.iter().all(|c| c.pass), "{name} {checks:?}");
            assert_eq!(checks[1].lhs, sum);
        }
    }

    #[test]
    fn power_sum_examples() {
        let k3 = by_name("K3").unwrap();
        assert_eq!(coset_power_sum(&k3, 2, 1, 2, true).unwrap(), Cyc12::zero());
        let lp = by_name("loop").unwrap();
        assert_eq!(coset_power_sum(&lp, 2, 1, 3, false).unwrap(), Cyc12::zero());
    }

    #[test]
    fn sum_cubes_examples() {
        let k3 = by_name("K3").unwrap();
        let checks = verify_sum_cubes(&k3, &Cyc12::from_int(2)).unwrap();
        assert!(checks.iter().all(|c| c.pass), "{checks:?}");
        assert_eq!(checks[1].lhs, "189");
        let e = by_name("edge").unwrap();
        let checks = verify_sum_cubes(&e, &Cyc12::from_int(3)).unwrap();
        assert_eq!(checks[1].lhs, "10");
        assert!(checks.iter().all(|c| c.pass));
        assert!(verify_sum_cubes(&k3, &Cyc12::one()).is_err());
    }

    #[test]
    fn real_sums_footnotes() {
        let k3 = by_name("K3").unwrap();
        let c = verify_real_sums(&k3, 4, 1).unwrap();
        assert!(c.iter().all(|c| c.pass), "{c:?}");
        assert_eq!(c[0].lhs, "1");
        let c = verify_real_sums(&k3, 2, 1).unwrap();
        assert!(c.iter().all(|c| c.pass), "{c:?}");
        assert!(c.iter().any(|c| c.name == "sum cubes real vanishes"));
    }

    #[test]
    fn fourth_power_cutset_form() {
        for name in ["K3", "loop", "C4"] {
            let g = by_name(name).unwrap();
            for t in [int(2), int(3)] {
                let c = verify_fourth_power(&g, &t).unwrap();
                assert!(c.pass, "{name}: {c}");
            }
        }
    }

    #[test]
    fn fourth_power_eulerian_reading_fails() {
        // summing the triple over eulerian subgraphs instead of cutsets is wrong
        let lp = by_name("loop").unwrap();
        let eul = eulerian_masks(&lp).unwrap();
        let wrong = fourth_power_rhs(&lp, &int(2), &eul, 0).unwrap();
        assert_eq!(wrong, int(136));
        assert_eq!(verify_fourth_power(&lp, &int(2)).unwrap().lhs, "81");
    }

    #[test]
    fn reciprocal() {
        assert!(verify_eulerian_reciprocal(&by_name("K3").unwrap(), &int(2)).unwrap().pass);
        assert!(verify_eulerian_reciprocal(&by_name("C4").unwrap(), &int(3)).unwrap().pass);
        assert!(matches!(
            verify_eulerian_reciprocal(&by_name("path3").unwrap(), &int(2)),
            Err(Error::Precondition(_))
        ));
    }
}
