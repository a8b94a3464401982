//! Evaluation of the combinatorial bounds (rows B1-B12) against measured
//! quantities.
//!
//! Each row compares an integer measurement against a real-valued formula
//! in `|S|`, `z` (LZ77 factor count), `q` (power-freeness order) and
//! `|Sigma|`. Logarithms are evaluated as exact rational intervals via a
//! digit-by-digit fixed-point algorithm with directed rounding, so a
//! measurement within a hair of the bound is still decided correctly; the
//! interval width shrinks geometrically and is re-evaluated at higher
//! precision whenever the decision is ambiguous.

use std::collections::{HashMap, HashSet};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::bwt;
use crate::bwt_map::{check_injectivity, run_boundary_pairs, InjectivityReport};
use crate::error::{Error, Result};
use crate::lce::LceIndex;
use crate::lz77::{lz77_from, Lz77Parse};
use crate::periodicity::{
    self, fourth_power_runs, maximal_periodic_extension, max_exponent, MAX_EXPONENT_CAP,
};
use crate::repeats::{cdawg_stats_from, for_each_maximal_pair, ClassTable, MaximalPair};
use crate::taxonomy::pairs_from_extension_pair;
use crate::text::Text;
use crate::Exponent;

// ---------------------------------------------------------------------------
// Exact interval arithmetic for the bound formulas.

/// A closed interval of exact rationals enclosing a real value.
#[derive(Clone, Debug)]
struct RInt {
    lo: BigRational,
    hi: BigRational,
}

impl RInt {
    fn exact(v: BigRational) -> Self {
        RInt { lo: v.clone(), hi: v }
    }

    fn exact_u64(v: u64) -> Self {
        Self::exact(BigRational::from_integer(BigInt::from(v)))
    }

    fn add(&self, o: &RInt) -> RInt {
        RInt { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    fn add_u(&self, v: u64) -> RInt {
        self.add(&RInt::exact_u64(v))
    }

    fn sub_u(&self, v: u64) -> RInt {
        let r = BigRational::from_integer(BigInt::from(v));
        RInt { lo: &self.lo - &r, hi: &self.hi - &r }
    }

    /// Product; both operands must be non-negative.
    fn mul(&self, o: &RInt) -> RInt {
        RInt { lo: &self.lo * &o.lo, hi: &self.hi * &o.hi }
    }

    fn mul_u(&self, v: u64) -> RInt {
        self.mul(&RInt::exact_u64(v))
    }

    /// Quotient; both operands must be strictly positive.
    fn div(&self, o: &RInt) -> RInt {
        RInt { lo: &self.lo / &o.hi, hi: &self.hi / &o.lo }
    }
}

/// `log_base(x)` as an exact rational interval with about `frac_bits`
/// correct fractional bits, by repeated squaring in fixed point with
/// directed rounding (a floor-rounded track yields the lower bound, a
/// ceil-rounded track the upper).
fn log_interval(base: u64, x: u64, frac_bits: usize) -> RInt {
    assert!(base >= 2 && x >= 1);
    let b = BigUint::from(base);
    let big_x = BigUint::from(x);
    let mut k = 0u64;
    let mut pw = BigUint::one();
    while &pw * &b <= big_x {
        pw *= &b;
        k += 1;
    }
    let g = frac_bits + 64;
    let scale = BigUint::one() << g;
    let limit = &scale * &b;
    // y = x / base^k in [1, base), tracked as floor and ceil fixed points.
    let num = big_x << g;
    let mut ylo = &num / &pw;
    let mut yhi = (&num + &pw - BigUint::one()) / &pw;
    let mut frac_lo = BigRational::zero();
    let mut frac_hi = BigRational::zero();
    let mut bit = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut exact = ylo == scale && yhi == scale;
    if !exact {
        let ceil_shift = &scale - BigUint::one();
        for _ in 0..frac_bits {
            ylo = (&ylo * &ylo) >> g;
            if ylo >= limit {
                ylo /= &b;
                frac_lo += &bit;
            }
            yhi = ((&yhi * &yhi) + &ceil_shift) >> g;
            if yhi >= limit {
                yhi = (&yhi + &b - BigUint::one()) / &b;
                frac_hi += &bit;
            }
            bit /= BigRational::from_integer(BigInt::from(2));
            if ylo == scale && yhi == scale {
                exact = true;
                break;
            }
        }
    }
    let kq = BigRational::from_integer(BigInt::from(k));
    if exact && frac_lo == frac_hi {
        RInt::exact(kq + frac_lo)
    } else {
        // One trailing-bit slack on the upper track.
        RInt { lo: &kq + frac_lo, hi: kq + frac_hi + bit }
    }
}

/// The right-hand side of a bound row as an exact interval.
fn exact_bound(name: &str, n: u64, z: u64, q: u64, sigma: u64, bits: usize) -> RInt {
    let l2n = || log_interval(2, n, bits);
    let qterm = || log_interval(q, n, bits).add_u(1).mul_u(18 * q);
    match name {
        "B1" => l2n().mul_u(73 * (z + 2) * (z + 2)),
        "B2" => qterm().mul_u((z + 2) * (z + 2)),
        "B3" => qterm().mul_u((z + 2) * (z + 2)).sub_u(z + 1),
        "B4" => l2n().mul_u(41 * (z + 1) * (z + 2)),
        "B5" => l2n().mul_u(32 * (z + 1) * (z + 1)),
        "B6" => qterm(),
        "B7" => l2n().mul_u(12),
        "B8" => RInt::exact_u64(3 * q)
            .div(&log_interval(2, q, bits))
            .add_u(1)
            .mul_u(12)
            .mul(&l2n()),
        "B9" => RInt::exact_u64(4 * n.ilog2() as u64),
        "B10" => RInt::exact_u64(4),
        "B11" => l2n().mul_u(8 * (z + 1) * (z + 1)),
        "B12" => RInt::exact_u64(sigma),
        _ => unreachable!("unknown bound row {name}"),
    }
}

/// Decides `measured <= bound`, raising the precision while the interval
/// straddles the measurement. A measurement exactly on the bound holds.
fn decide(measured: u64, name: &str, n: u64, z: u64, q: u64, sigma: u64) -> bool {
    let m = BigRational::from_integer(BigInt::from(measured));
    let mut bits = 64;
    loop {
        let iv = exact_bound(name, n, z, q, sigma, bits);
        if m <= iv.lo {
            return true;
        }
        if m > iv.hi {
            return false;
        }
        if bits >= 1024 {
            return true;
        }
        bits *= 4;
    }
}

// ---------------------------------------------------------------------------
// Measurement.

/// All quantities a report compares against bounds.
#[derive(Debug, Clone, Serialize)]
pub struct Measures {
    pub length: usize,
    pub alphabet_size: usize,
    pub z: usize,
    pub r: usize,
    /// Copy classes of maximal pairs.
    pub substantially_different_pairs: u64,
    /// Copy classes whose body exponent is below 6.
    pub pairs_not_sixth_power: u64,
    /// Copy classes with a fourth-power, one-side-nonextendable member.
    pub pairs_fourth_power_nonextendable: u64,
    pub maximal_repeats: u64,
    pub right_extension_total: u64,
    pub cdawg_arc_total: u64,
    /// Max over LZ-start pairs (i, j) of the eligible-class counts.
    pub max_lemma3_per_index_pair: u64,
    pub max_thm5_per_index_pair: u64,
    pub max_exp_lt_2q_per_index_pair: u64,
    /// Max over text indices i of substantially different crossing
    /// fourth-power extensions.
    pub max_crossing_extensions_over_i: u64,
    pub max_pairs_per_extension_pair: u64,
    /// Unordered rotation-compatible pairs of boundary-crossing extensions.
    pub compatible_extension_pairs: u64,
    pub boundary_count: u64,
    pub boundary_l0_count: u64,
}

/// Lexicographically least rotation (Booth's algorithm).
fn least_rotation(s: &[u8]) -> Vec<u8> {
    let n = s.len();
    let doubled: Vec<u8> = [s, s].concat();
    let mut f = vec![usize::MAX; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = doubled[j];
        let mut i = f[j - k - 1];
        while i != usize::MAX && sj != doubled[k + i + 1] {
            if sj < doubled[k + i + 1] {
                k = j - i - 1;
            }
            i = f[i];
        }
        if i == usize::MAX && sj != doubled[k] {
            if sj < doubled[k] {
                k = j;
            }
            f[j - k] = usize::MAX;
        } else {
            f[j - k] = i.wrapping_add(1);
        }
    }
    doubled[k..k + n].to_vec()
}

fn member_nonextendable(t: &Text, pair: MaximalPair, delta: usize) -> bool {
    let (n, m, l) = (pair.n, pair.m, pair.l);
    let en = maximal_periodic_extension(t, n, n + l - 1, Some(delta)).expect("body periodic");
    let em = maximal_periodic_extension(t, m, m + l - 1, Some(delta)).expect("body periodic");
    en.added_around(n, n + l - 1) <= delta || em.added_around(m, m + l - 1) <= delta
}

/// Split labels for one class body at split offset `d`: (lemma3, thm5).
fn split_labels(t: &Text, n: usize, l: usize, d: usize, q: u64) -> (bool, bool) {
    let left_len = d;
    let right_len = l - d;
    let (ls, ll) = if left_len >= right_len { (n, left_len) } else { (n + d, right_len) };
    if ll == 0 {
        return (true, false);
    }
    let w = t.slice(ls, ls + ll - 1);
    let p = periodicity::min_period(w);
    let e = Exponent::new(ll as u64, p as u64);
    let lemma3 = e < Exponent::from(q);
    let thm5 =
        e >= Exponent::from(3) && !(n..=n + l - 1 - p).all(|k| t.sym(k) == t.sym(k + p));
    (lemma3, thm5)
}

fn measure(t: &Text, index: &LceIndex, parse: &Lz77Parse, q: u64) -> Measures {
    let n = t.len();
    let starts = parse.factor_starts();

    struct ClassInfo {
        min_period: Option<usize>,
        exp_lt6: bool,
        exp_lt_2q: bool,
        fourth_nonext: bool,
    }
    let mut table = ClassTable::new(t, index);
    let mut infos: Vec<ClassInfo> = Vec::new();
    let mut label_cache: HashMap<(u32, u32), (bool, bool)> = HashMap::new();
    let mut cells: HashMap<(u32, u32), [HashSet<u32>; 3]> = HashMap::new();
    let mut fourth_nonext_pairs: Vec<MaximalPair> = Vec::new();
    let mut fourth_nonext_classes = 0u64;

    for_each_maximal_pair(t, index, |pair| {
        let cid = table.class_of(pair);
        let l = pair.l;
        if cid as usize == infos.len() {
            // Smallest period up to l/4; anything longer means the body
            // exponent is below 4 and therefore below every threshold.
            let mut mp = None;
            for delta in 1..=l / 4 {
                if index.lce(pair.n, pair.n + delta) >= l - delta {
                    mp = Some(delta);
                    break;
                }
            }
            infos.push(ClassInfo {
                min_period: mp,
                exp_lt6: mp.map_or(true, |p| l < 6 * p),
                exp_lt_2q: mp.map_or(true, |p| (l as u64) < 2 * q * p as u64),
                fourth_nonext: false,
            });
        }
        if let Some(p) = infos[cid as usize].min_period {
            // l >= 4p by construction: the body is at least a fourth power.
            if member_nonextendable(t, pair, p) {
                if !infos[cid as usize].fourth_nonext {
                    infos[cid as usize].fourth_nonext = true;
                    fourth_nonext_classes += 1;
                }
                fourth_nonext_pairs.push(pair);
            }
        }
        let exp_lt_2q = infos[cid as usize].exp_lt_2q;
        for (a, b) in [(pair.n, pair.m), (pair.m, pair.n)] {
            let a_lo = starts.partition_point(|&s| s < a);
            let a_hi = starts.partition_point(|&s| s <= a + l);
            if a_lo == a_hi {
                continue;
            }
            let b_lo = starts.partition_point(|&s| s < b);
            let b_hi = starts.partition_point(|&s| s <= b + l);
            if b_lo == b_hi {
                continue;
            }
            for ai in a_lo..a_hi {
                let d = starts[ai] - a;
                let (lemma3, thm5) = *label_cache
                    .entry((cid, d as u32))
                    .or_insert_with(|| split_labels(t, a, l, d, q));
                for bj in b_lo..b_hi {
                    let cell = cells.entry((ai as u32, bj as u32)).or_default();
                    if lemma3 {
                        cell[0].insert(cid);
                    }
                    if thm5 {
                        cell[1].insert(cid);
                    }
                    if exp_lt_2q {
                        cell[2].insert(cid);
                    }
                }
            }
        }
    });

    let mut cell_max = [0u64; 3];
    for sets in cells.values() {
        for (slot, set) in cell_max.iter_mut().zip(sets.iter()) {
            *slot = (*slot).max(set.len() as u64);
        }
    }

    // Crossing fourth-power extensions: sweep the index i over 1..=n+1
    // keeping the multiset of active runs, counting distinct contents.
    let runs = fourth_power_runs(t);
    let mut adds: Vec<(usize, usize)> = runs.iter().enumerate().map(|(k, e)| (e.core.0, k)).collect();
    let mut dels: Vec<(usize, usize)> = runs.iter().enumerate().map(|(k, e)| (e.core.1 + 2, k)).collect();
    adds.sort_unstable();
    dels.sort_unstable();
    let mut active: HashMap<&[u8], usize> = HashMap::new();
    let mut distinct = 0usize;
    let mut max_crossing = 0usize;
    let (mut ai, mut di) = (0usize, 0usize);
    for i in 1..=n + 1 {
        while di < dels.len() && dels[di].0 <= i {
            let key = runs[dels[di].1].content_key.as_slice();
            let c = active.get_mut(key).expect("active run");
            *c -= 1;
            if *c == 0 {
                active.remove(key);
                distinct -= 1;
            }
            di += 1;
        }
        while ai < adds.len() && adds[ai].0 <= i {
            let c = active.entry(runs[adds[ai].1].content_key.as_slice()).or_insert(0);
            if *c == 0 {
                distinct += 1;
            }
            *c += 1;
            ai += 1;
        }
        max_crossing = max_crossing.max(distinct);
    }

    // Rotation classes of runs: same period and rotation-equal roots.
    let mut group_ids: HashMap<(usize, Vec<u8>), usize> = HashMap::new();
    let group: Vec<usize> = runs
        .iter()
        .map(|e| {
            let key = (e.delta, least_rotation(e.root(t)));
            let next = group_ids.len();
            *group_ids.entry(key).or_insert(next)
        })
        .collect();

    // Unordered compatible pairs among boundary-crossing extensions.
    let mut per_group_keys: HashMap<usize, HashSet<&[u8]>> = HashMap::new();
    for (k, e) in runs.iter().enumerate() {
        let lo = starts.partition_point(|&s| s <= e.padded.0);
        let crossing = lo < starts.len() && starts[lo] <= e.padded.1;
        if crossing {
            per_group_keys.entry(group[k]).or_default().insert(e.content_key.as_slice());
        }
    }
    let compatible_extension_pairs: u64 = per_group_keys
        .values()
        .map(|s| (s.len() * (s.len() + 1) / 2) as u64)
        .sum();

    // Pairs produced per compatible extension pair, by inverting the
    // containment relation over the fourth-power nonextendable pairs.
    let mut per_run_pair: HashMap<(usize, usize), u64> = HashMap::new();
    for pair in &fourth_nonext_pairs {
        // The pair must sit as a prefix of one padded extension and a
        // suffix of the other (context included); see the taxonomy module.
        let prefix = |a: usize, len: usize, e: &periodicity::PaddedExtension| {
            e.padded.0 == a - 1 && a + len <= e.padded.1
        };
        let suffix = |a: usize, len: usize, e: &periodicity::PaddedExtension| {
            e.padded.1 == a + len && e.padded.0 <= a - 1
        };
        let runs_where = |pred: &dyn Fn(&periodicity::PaddedExtension) -> bool| -> Vec<usize> {
            (0..runs.len()).filter(|&k| pred(&runs[k])).collect()
        };
        let pn: Vec<usize> = runs_where(&|e| prefix(pair.n, pair.l, e));
        let sn: Vec<usize> = runs_where(&|e| suffix(pair.n, pair.l, e));
        let pm: Vec<usize> = runs_where(&|e| prefix(pair.m, pair.l, e));
        let sm: Vec<usize> = runs_where(&|e| suffix(pair.m, pair.l, e));
        let mut local: HashSet<(usize, usize)> = HashSet::new();
        for (ps, ss) in [(&pn, &sm), (&pm, &sn)] {
            for &a in ps.iter() {
                for &b in ss.iter() {
                    if group[a] == group[b] {
                        local.insert((a.min(b), a.max(b)));
                    }
                }
            }
        }
        for k in local {
            *per_run_pair.entry(k).or_default() += 1;
        }
    }
    let max_pairs_per_extension_pair = per_run_pair.values().copied().max().unwrap_or(0);

    let order = bwt::rotation_order_from(index);
    let profile = bwt::bwt_from(t, &order);
    let boundaries = run_boundary_pairs(t, index);
    let injectivity = check_injectivity(t, &boundaries);
    let stats = cdawg_stats_from(t, index);

    Measures {
        length: n,
        alphabet_size: t.alphabet().len(),
        z: parse.z,
        r: profile.r,
        substantially_different_pairs: table.class_count() as u64,
        pairs_not_sixth_power: infos.iter().filter(|c| c.exp_lt6).count() as u64,
        pairs_fourth_power_nonextendable: fourth_nonext_classes,
        maximal_repeats: stats.maximal_repeat_count as u64,
        right_extension_total: stats.right_extension_total as u64,
        cdawg_arc_total: stats.arc_total as u64,
        max_lemma3_per_index_pair: cell_max[0],
        max_thm5_per_index_pair: cell_max[1],
        max_exp_lt_2q_per_index_pair: cell_max[2],
        max_crossing_extensions_over_i: max_crossing as u64,
        max_pairs_per_extension_pair,
        compatible_extension_pairs,
        boundary_count: boundaries.len() as u64,
        boundary_l0_count: injectivity.zero_lcp_count as u64,
    }
}

// ---------------------------------------------------------------------------
// Reports.

/// One verified bound row.
#[derive(Debug, Clone, Serialize)]
pub struct BoundRow {
    pub name: String,
    pub formula: String,
    /// Plain-language description of the bounded quantity.
    pub anchor: String,
    /// Right-hand side; absent when the row is skipped.
    pub bound: Option<f64>,
    pub measured: u64,
    /// Absent when the row is skipped.
    pub holds: Option<bool>,
    /// measured / bound.
    pub ratio: Option<f64>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub text_id: String,
    pub length: usize,
    pub alphabet_size: usize,
    pub z: usize,
    pub r: usize,
    pub q_user: Option<u32>,
    /// Smallest q for which the text is q-power-free.
    pub q_min: u32,
    /// The q the q-dependent rows were evaluated at.
    pub q_effective: u32,
    pub max_exponent: Exponent,
    pub measures: Measures,
    pub injectivity: InjectivityReport,
    pub bounds: Vec<BoundRow>,
}

impl BoundReport {
    /// True iff no evaluated row is violated (skipped rows don't count).
    pub fn all_hold(&self) -> bool {
        self.bounds.iter().all(|b| b.holds != Some(false))
    }
}

struct RowDef {
    name: &'static str,
    formula: &'static str,
    anchor: &'static str,
    q_dependent: bool,
}

const ROW_DEFS: [RowDef; 12] = [
    RowDef {
        name: "B1",
        formula: "r <= 73*log2(n)*(z+2)^2",
        anchor: "run count of the Burrows-Wheeler transform of S$",
        q_dependent: false,
    },
    RowDef {
        name: "B2",
        formula: "cdawg_arcs <= 18*q*(1+log_q(n))*(z+2)^2",
        anchor: "total arc count of the compacted DAWG",
        q_dependent: true,
    },
    RowDef {
        name: "B3",
        formula: "right_extensions <= 18*q*(1+log_q(n))*(z+2)^2 - (z+1)",
        anchor: "right extensions summed over maximal repeats",
        q_dependent: true,
    },
    RowDef {
        name: "B4",
        formula: "classes_exp_lt_6 <= 41*log2(n)*(z+1)*(z+2)",
        anchor: "substantially different pairs whose body is not a sixth power",
        q_dependent: false,
    },
    RowDef {
        name: "B5",
        formula: "classes_fourth_nonextendable <= 32*(z+1)^2*log2(n)",
        anchor: "substantially different fourth-power nonextendable pairs",
        q_dependent: false,
    },
    RowDef {
        name: "B6",
        formula: "max_lemma3_classes_per_start_pair <= 18*q*(1+log_q(n))",
        anchor: "per start-pair classes whose longer split part is below a q-th power",
        q_dependent: true,
    },
    RowDef {
        name: "B7",
        formula: "max_thm5_classes_per_start_pair <= 12*log2(n)",
        anchor: "per start-pair classes with a cubic split part not spanning the body",
        q_dependent: false,
    },
    RowDef {
        name: "B8",
        formula: "max_exp_lt_2q_classes_per_start_pair <= 12*(1+3*q/log2(q))*log2(n)",
        anchor: "per start-pair classes with body exponent below 2q",
        q_dependent: true,
    },
    RowDef {
        name: "B9",
        formula: "max_crossing_extensions_per_index <= 4*floor(log2(n))",
        anchor: "substantially different fourth-power extensions crossing one index",
        q_dependent: false,
    },
    RowDef {
        name: "B10",
        formula: "max_pairs_per_extension_pair <= 4",
        anchor: "pairs produced by one compatible extension pair",
        q_dependent: false,
    },
    RowDef {
        name: "B11",
        formula: "compatible_boundary_extension_pairs <= 8*(z+1)^2*log2(n)",
        anchor: "rotation-compatible pairs of boundary-crossing extensions",
        q_dependent: false,
    },
    RowDef {
        name: "B12",
        formula: "zero_lcp_boundaries <= alphabet_size",
        anchor: "run boundaries whose adjacent rows share no prefix",
        q_dependent: false,
    },
];

fn measured_of(m: &Measures, name: &str) -> u64 {
    match name {
        "B1" => m.r as u64,
        "B2" => m.cdawg_arc_total,
        "B3" => m.right_extension_total,
        "B4" => m.pairs_not_sixth_power,
        "B5" => m.pairs_fourth_power_nonextendable,
        "B6" => m.max_lemma3_per_index_pair,
        "B7" => m.max_thm5_per_index_pair,
        "B8" => m.max_exp_lt_2q_per_index_pair,
        "B9" => m.max_crossing_extensions_over_i,
        "B10" => m.max_pairs_per_extension_pair,
        "B11" => m.compatible_extension_pairs,
        "B12" => m.boundary_l0_count,
        _ => unreachable!(),
    }
}

/// Evaluates every bound row for one text.
///
/// `q` defaults to the smallest order for which the text is power-free.
/// When a user-supplied `q` fails power-freeness the q-dependent rows are
/// skipped with a notice naming a witness substring, instead of reporting
/// vacuous comparisons.
pub fn verify(t: &Text, text_id: &str, q_user: Option<u32>) -> Result<BoundReport> {
    if t.len() < 2 {
        return Err(Error::InvalidParameter(format!(
            "bound verification needs |S| >= 2, got {}",
            t.len()
        )));
    }
    if let Some(q) = q_user {
        if q < 2 {
            return Err(Error::InvalidParameter(format!("q must be at least 2, got {q}")));
        }
    }
    let (max_exp, witness) = max_exponent(t, MAX_EXPONENT_CAP)?;
    let q_min = (max_exp.to_integer() + 1).max(2) as u32;
    let q_note = match q_user {
        Some(q) if max_exp >= Exponent::from(q as u64) => {
            let w = t.slice(witness.start, witness.start + witness.length - 1);
            Some(format!(
                "skipped: S is not {q}-power-free (witness {:?} has exponent {}/{})",
                String::from_utf8_lossy(w),
                max_exp.numer(),
                max_exp.denom()
            ))
        }
        _ => None,
    };
    let q_effective = match (q_user, &q_note) {
        (Some(q), None) => q,
        _ => q_min,
    };

    let index = LceIndex::new(t);
    let parse = lz77_from(t, &index);
    let measures = measure(t, &index, &parse, q_effective as u64);
    let boundaries = run_boundary_pairs(t, &index);
    let injectivity = check_injectivity(t, &boundaries);

    let (n, z) = (t.len() as u64, measures.z as u64);
    let (q, sigma) = (q_effective as u64, measures.alphabet_size as u64);
    let bounds = ROW_DEFS
        .iter()
        .map(|def| {
            let measured = measured_of(&measures, def.name);
            if def.q_dependent && q_note.is_some() {
                return BoundRow {
                    name: def.name.into(),
                    formula: def.formula.into(),
                    anchor: def.anchor.into(),
                    bound: None,
                    measured,
                    holds: None,
                    ratio: None,
                    note: q_note.clone(),
                };
            }
            let bound = exact_bound(def.name, n, z, q, sigma, 64).hi.to_f64();
            let holds = decide(measured, def.name, n, z, q, sigma);
            let ratio = bound.filter(|&b| b > 0.0).map(|b| measured as f64 / b);
            BoundRow {
                name: def.name.into(),
                formula: def.formula.into(),
                anchor: def.anchor.into(),
                bound,
                measured,
                holds: Some(holds),
                ratio,
                note: None,
            }
        })
        .collect();

    Ok(BoundReport {
        text_id: text_id.to_string(),
        length: t.len(),
        alphabet_size: measures.alphabet_size,
        z: measures.z,
        r: measures.r,
        q_user,
        q_min,
        q_effective,
        max_exponent: max_exp,
        measures,
        injectivity,
        bounds,
    })
}

/// Per-row tightness telemetry over a corpus.
#[derive(Debug, Clone, Serialize)]
pub struct TightnessRow {
    pub name: String,
    pub max_ratio: f64,
    /// Text attaining the maximum.
    pub text_id: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusFailure {
    pub text_id: String,
    pub error: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusReport {
    pub reports: Vec<BoundReport>,
    pub failures: Vec<CorpusFailure>,
    pub tightness: Vec<TightnessRow>,
}

impl CorpusReport {
    pub fn all_hold(&self) -> bool {
        self.failures.is_empty() && self.reports.iter().all(|r| r.all_hold())
    }
}

/// Verifies a corpus, distributing texts over worker threads. Individual
/// failures are isolated; the aggregate is sorted by text id.
pub fn verify_corpus(texts: &[(String, Text)], q_user: Option<u32>) -> CorpusReport {
    let workers = std::thread::available_parallelism().map_or(1, |p| p.get()).min(texts.len().max(1));
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<std::result::Result<BoundReport, CorpusFailure>>> =
        Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= texts.len() {
                    break;
                }
                let (id, t) = &texts[i];
                let outcome = verify(t, id, q_user)
                    .map_err(|e| CorpusFailure { text_id: id.clone(), error: e.to_string() });
                results.lock().unwrap().push(outcome);
            });
        }
    });
    let mut reports = Vec::new();
    let mut failures = Vec::new();
    for r in results.into_inner().unwrap() {
        match r {
            Ok(rep) => reports.push(rep),
            Err(f) => failures.push(f),
        }
    }
    reports.sort_by(|a, b| a.text_id.cmp(&b.text_id));
    failures.sort_by(|a, b| a.text_id.cmp(&b.text_id));
    let mut tightness: Vec<TightnessRow> = Vec::new();
    for def in &ROW_DEFS {
        let best = reports
            .iter()
            .filter_map(|rep| {
                rep.bounds
                    .iter()
                    .find(|b| b.name == def.name)
                    .and_then(|b| b.ratio.map(|r| (r, rep.text_id.clone())))
            })
            .max_by(|a, b| a.0.total_cmp(&b.0));
        if let Some((ratio, id)) = best {
            tightness.push(TightnessRow { name: def.name.into(), max_ratio: ratio, text_id: id });
        }
    }
    CorpusReport { reports, failures, tightness }
}

/// Cross-check helper: the maximum pair production over all compatible
/// extension pairs, computed definitionally via [`pairs_from_extension_pair`].
pub fn max_production_definitional(t: &Text, index: &LceIndex) -> usize {
    let runs = fourth_power_runs(t);
    let mut best = 0usize;
    for a in 0..runs.len() {
        for b in a..runs.len() {
            if let Ok(pairs) = pairs_from_extension_pair(t, index, &runs[a], &runs[b]) {
                best = best.max(pairs.len());
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::oracle;

    fn t(s: &str) -> Text {
        Text::new(s.as_bytes().to_vec()).unwrap()
    }

    #[test]
    fn log_interval_values() {
        let iv = log_interval(2, 8, 64);
        assert_eq!(iv.lo, iv.hi);
        assert_eq!(iv.lo, BigRational::from_integer(BigInt::from(3)));

        let iv = log_interval(2, 10, 96);
        let lo = iv.lo.to_f64().unwrap();
        let hi = iv.hi.to_f64().unwrap();
        let truth = 10f64.log2();
        assert!(lo <= truth && truth <= hi, "{lo} {truth} {hi}");
        assert!((hi - lo) < 1e-20);

        let iv = log_interval(3, 9, 64);
        assert_eq!(iv.lo, BigRational::from_integer(BigInt::from(2)));
        assert_eq!(iv.hi, iv.lo);
    }

    #[test]
    fn b1_bound_symbolic_at_smallest_input() {
        // |S|=2, z=1: 73 * 1 * 9 = 657 exactly.
        let iv = exact_bound("B1", 2, 1, 2, 1, 64);
        assert_eq!(iv.lo, BigRational::from_integer(BigInt::from(657)));
        assert_eq!(iv.hi, iv.lo);
        assert!(decide(657, "B1", 2, 1, 2, 1));
        assert!(!decide(658, "B1", 2, 1, 2, 1));
    }

    #[test]
    fn verify_examples() {
        let rep = verify(&t("aaa"), "aaa", None).unwrap();
        assert_eq!(rep.z, 2);
        assert_eq!(rep.r, 2);
        assert!(rep.all_hold());
        let b1 = rep.bounds.iter().find(|b| b.name == "B1").unwrap();
        assert_eq!(b1.measured, 2);
        assert!((b1.bound.unwrap() - 73.0 * 3f64.log2() * 16.0).abs() < 1e-6);

        let rep = verify(&t("ab"), "ab", None).unwrap();
        assert!(rep.all_hold());
        assert_eq!(rep.measures.substantially_different_pairs, 0);
    }

    #[test]
    fn verify_paper_example_string() {
        let x = Text::new(corpus::paper_example()).unwrap();
        let rep = verify(&x, "example", None).unwrap();
        assert_eq!(rep.z, 5);
        assert!(rep.all_hold(), "{:#?}", rep.bounds);
    }

    #[test]
    fn invalid_user_q_skips_q_rows() {
        let rep = verify(&t("aaa"), "aaa", Some(2)).unwrap();
        for name in ["B2", "B3", "B6", "B8"] {
            let row = rep.bounds.iter().find(|b| b.name == name).unwrap();
            assert!(row.holds.is_none());
            assert!(row.note.as_deref().unwrap().contains("not 2-power-free"));
        }
        assert!(rep.all_hold()); // skipped rows are not violations
        let b1 = rep.bounds.iter().find(|b| b.name == "B1").unwrap();
        assert_eq!(b1.holds, Some(true));
    }

    #[test]
    fn rejects_tiny_text_and_bad_q() {
        assert!(verify(&t("a"), "a", None).is_err());
        assert!(verify(&t("ab"), "ab", Some(1)).is_err());
    }

    #[test]
    fn all_rows_hold_exhaustively_binary_10() {
        oracle::for_each_string(2, 10, |s| {
            let x = Text::new(s.to_vec()).unwrap();
            if x.len() < 2 {
                return;
            }
            let rep = verify(&x, "t", None).unwrap();
            assert!(rep.all_hold(), "{:?}: {:#?}", s, rep.bounds);
        });
    }

    #[test]
    fn production_measurement_matches_definitional() {
        oracle::for_each_string(2, 9, |s| {
            let x = Text::new(s.to_vec()).unwrap();
            let index = LceIndex::new(&x);
            let parse = lz77_from(&x, &index);
            let m = measure(&x, &index, &parse, 2);
            assert_eq!(
                m.max_pairs_per_extension_pair as usize,
                max_production_definitional(&x, &index),
                "{:?}",
                s
            );
        });
    }

    #[test]
    fn least_rotation_examples() {
        assert_eq!(least_rotation(b"ba"), b"ab");
        assert_eq!(least_rotation(b"cab"), b"abc");
        assert_eq!(least_rotation(b"aab"), b"aab");
        assert_eq!(least_rotation(b"a"), b"a");
    }

    #[test]
    fn empty_corpus_is_empty_aggregate() {
        let rep = verify_corpus(&[], None);
        assert!(rep.reports.is_empty());
        assert!(rep.failures.is_empty());
        assert!(rep.tightness.is_empty());
        assert!(rep.all_hold());
    }

    #[test]
    fn corpus_isolates_failures() {
        let texts = vec![
            ("good".to_string(), t("abab")),
            ("bad".to_string(), t("a")),
            ("fib".to_string(), Text::new(corpus::fibonacci(7)).unwrap()),
        ];
        let rep = verify_corpus(&texts, None);
        assert_eq!(rep.reports.len(), 2);
        assert_eq!(rep.failures.len(), 1);
        assert_eq!(rep.failures[0].text_id, "bad");
        assert!(!rep.all_hold()); // the failure counts against the aggregate
        assert!(rep.reports.iter().all(|r| r.all_hold()));
        assert!(!rep.tightness.is_empty());
    }
}
