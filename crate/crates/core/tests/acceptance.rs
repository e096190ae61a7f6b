//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on failure.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use realgr_core::characters::{
    character_of_multiset, irreducible_character, kostant_multiplicity, weyl_dimension,
};
use realgr_core::dualgroup::{associated_subgroup, classify_table1};
use realgr_core::grcomb::{
    branch_with, mv_dim, orbit_poset, specialization_character, stratum_dim,
};
use realgr_core::realform::{catalog, CatalogEntry, RealForm};
use realgr_core::{BasedRootDatum, CartanType};

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn adjoint(t: &str) -> BasedRootDatum {
    BasedRootDatum::adjoint(&t.parse::<CartanType>().unwrap()).unwrap()
}

fn ty(s: &str) -> CartanType {
    s.parse().unwrap()
}

fn pair(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn sum(vs: &[Vec<i64>], n: usize) -> Vec<i64> {
    vs.iter().fold(vec![0; n], |acc, v| acc.iter().zip(v).map(|(a, b)| a + b).collect())
}

/// Height against the sum of positive roots.
fn height(d: &BasedRootDatum, l: &[i64]) -> i64 {
    pair(&sum(d.positive_roots(), d.rank()), l)
}

/// Weyl dimension formula over the positive roots, computed from scratch.
fn weyl_dim(d: &BasedRootDatum, l: &[i64]) -> u128 {
    let two_rho = sum(d.positive_coroots(), d.rank());
    let (mut num, mut den) = (1u128, 1u128);
    for g in d.positive_roots() {
        let shifted: Vec<i64> = l.iter().zip(&two_rho).map(|(a, b)| 2 * a + b).collect();
        num *= pair(g, &shifted) as u128;
        den *= pair(g, &two_rho) as u128;
    }
    assert_eq!(num % den, 0);
    num / den
}

/// Whether `lambda - mu` is a sum of simple coroots, by exhaustive search.
fn brute_leq(d: &BasedRootDatum, mu: &[i64], lambda: &[i64]) -> bool {
    let top = height(d, lambda);
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut stack = vec![mu.to_vec()];
    while let Some(v) = stack.pop() {
        if v == lambda {
            return true;
        }
        if height(d, &v) >= top || !seen.insert(v.clone()) {
            continue;
        }
        for c in d.simple_coroots() {
            stack.push(v.iter().zip(c).map(|(a, b)| a + b).collect());
        }
    }
    false
}

/// Dominant `mu` with `lambda - mu` a sum of simple coroots, by descent.
fn brute_below(d: &BasedRootDatum, lambda: &[i64]) -> BTreeSet<Vec<i64>> {
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut stack = vec![lambda.to_vec()];
    let mut out = BTreeSet::new();
    while let Some(v) = stack.pop() {
        // dominant coweights have nonnegative height
        if height(d, &v) < 0 || !seen.insert(v.clone()) {
            continue;
        }
        if d.is_dominant(&v) {
            out.insert(v.clone());
        }
        for c in d.simple_coroots() {
            stack.push(v.iter().zip(c).map(|(a, b)| a - b).collect());
        }
    }
    out
}

/// Exact rank of an integer matrix.
fn rank(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let cols = a.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, p);
        for i in r + 1..a.len() {
            let (f, g) = (a[i][c], a[r][c]);
            for j in 0..cols {
                a[i][j] = a[i][j] * g - a[r][j] * f;
            }
            let k = a[i].iter().fold(0i128, |k, &x| gcd(k, x));
            if k > 1 {
                a[i].iter_mut().for_each(|x| *x /= k);
            }
        }
        r += 1;
    }
    r
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

/// Associated subgroup type read off the classification table.
fn table_h(e: &CatalogEntry) -> Option<String> {
    let p = &e.record.params;
    let n: usize = e.record.cartan[1..].parse().unwrap();
    let h = match e.record.family.as_str() {
        "AI" => format!("A{}", p[0] - 1),
        "AII" => format!("A{}", p[0] - 1),
        "AIII" | "BI" | "CII" => format!("C{}", p[0]),
        "CI" => format!("B{n}"),
        "DI" if p[0] == p[1] => format!("D{n}"),
        "DI" if p[0] + 2 == p[1] => format!("B{}", n - 1),
        "DI" => format!("B{}", p[0]),
        "DIII" => format!("C{}", n / 2),
        "EI" => "E6".into(),
        "EII" | "EVI" | "EIX" | "FI" => "F4".into(),
        "EIII" => "B2".into(),
        "EIV" => "A2".into(),
        "EV" => "E7".into(),
        "EVII" => "C3".into(),
        "EVIII" => "E8".into(),
        "FII" => "A1".into(),
        "G" => "G2".into(),
        _ => return None,
    };
    Some(h)
}

/// Quasi-split forms per the remarks column: split, AIII with q = p or p+1,
/// DI with q = p+2, EII; tori have no painted nodes.
fn remarks_quasi_split(e: &CatalogEntry) -> bool {
    let p = &e.record.params;
    match e.record.family.as_str() {
        "torus" => true,
        "AIII" => p[1] - p[0] <= 1,
        "DI" => p[1] - p[0] <= 2,
        "EII" => true,
        _ => e.form.is_split(),
    }
}

fn table1() -> Outcome {
    let cat = catalog();
    let report = classify_table1(cat, 8).map_err(|e| e.to_string())?;
    let mut families = BTreeSet::new();
    for row in &report.rows {
        let e = cat.entry(&row.label).ok_or(format!("{} missing", row.label))?;
        let want = table_h(e).ok_or(format!("{}: no table row", row.label))?;
        if !ty(&row.h_type).is_isomorphic(&ty(&want)) {
            return Err(format!("{}: computed {} expected {want}", row.label, row.h_type));
        }
        if !row.matches {
            return Err(format!("{}: catalog expects {}", row.label, row.expected_h));
        }
        families.insert(row.family.clone());
    }
    let all = [
        "AI", "AII", "AIII", "BI", "CI", "CII", "DI", "DIII", "EI", "EII", "EIII", "EIV", "EV",
        "EVI", "EVII", "EVIII", "EIX", "FI", "FII", "G",
    ];
    if let Some(f) = all.iter().find(|f| !families.contains(**f)) {
        return Err(format!("family {f} not covered"));
    }
    Ok(format!("{} forms", report.rows.len()))
}

fn extremes() -> Outcome {
    let cat = catalog();
    let mut types = BTreeSet::new();
    let (mut split, mut compact) = (0, 0);
    for e in cat.entries() {
        let d = e.form.datum();
        if d.is_semisimple() {
            types.insert(d.cartan_type().to_string());
        }
        let h = associated_subgroup(&e.form).map_err(|x| x.to_string())?;
        if e.form.is_split() {
            split += 1;
            if !h.cartan_type.is_isomorphic(&d.cartan_type().dual()) {
                return Err(format!("{}: split but H = {}", e.label(), h.cartan_type));
            }
        }
        if e.form.is_compact() {
            compact += 1;
            if !h.xi.is_empty() {
                return Err(format!("{}: compact but Xi nonempty", e.label()));
            }
        }
    }
    for t in &types {
        let d = adjoint(t);
        let s = RealForm::split(d.clone()).map_err(|x| x.to_string())?;
        let h = associated_subgroup(&s).map_err(|x| x.to_string())?;
        if !h.cartan_type.is_isomorphic(&d.cartan_type().dual()) {
            return Err(format!("split({t}): H = {}", h.cartan_type));
        }
        let c = RealForm::compact(d).map_err(|x| x.to_string())?;
        if !associated_subgroup(&c).map_err(|x| x.to_string())?.xi.is_empty() {
            return Err(format!("compact({t}): Xi nonempty"));
        }
    }
    Ok(format!("{split} split, {compact} compact entries, {} types", types.len()))
}

fn rank_weyl() -> Outcome {
    let cat = catalog();
    for e in cat.entries() {
        let f = &e.form;
        let h = associated_subgroup(f).map_err(|x| x.to_string())?;
        let theta = f.theta_matrix();
        let plus: Vec<Vec<i64>> = theta
            .iter()
            .enumerate()
            .map(|(i, r)| r.iter().enumerate().map(|(j, &x)| x + (i == j) as i64).collect())
            .collect();
        let real_rank = rank(&plus);
        if h.rank() != real_rank || real_rank != e.record.real_rank {
            return Err(format!("{}: rank H {} real rank {real_rank}", e.label(), h.rank()));
        }
        let small = f.small_weyl_order().map_err(|x| x.to_string())?;
        if h.weyl_order() != small {
            return Err(format!("{}: |W(Xi)| {} small {small}", e.label(), h.weyl_order()));
        }
    }
    Ok(format!("{} entries", cat.len()))
}

fn quasi_split() -> Outcome {
    let cat = catalog();
    let mut trivial = BTreeSet::new();
    let mut flagged = BTreeSet::new();
    let mut remarks = BTreeSet::new();
    for e in cat.entries() {
        let f = &e.form;
        let d = f.datum();
        // the adjoint representation has every coroot as a weight
        let mut lambdas: Vec<Vec<i64>> = d
            .positive_coroots()
            .iter()
            .filter(|c| d.is_dominant(c))
            .cloned()
            .collect();
        if !d.is_semisimple() {
            lambdas.extend((0..d.rank()).map(|i| (0..d.rank()).map(|j| (i == j) as i64).collect()));
        }
        let mut graded = false;
        for l in &lambdas {
            let g = specialization_character(f, l).map_err(|x| x.to_string())?;
            graded |= g.degrees().iter().any(|&z| z != 0);
        }
        if !graded {
            trivial.insert(e.label().to_string());
        }
        if f.is_quasi_split() {
            flagged.insert(e.label().to_string());
        }
        if remarks_quasi_split(e) {
            remarks.insert(e.label().to_string());
        }
    }
    if trivial != flagged {
        let diff: Vec<_> = trivial.symmetric_difference(&flagged).collect();
        return Err(format!("grading vs flag differ at {diff:?}"));
    }
    if flagged != remarks {
        let diff: Vec<_> = flagged.symmetric_difference(&remarks).collect();
        return Err(format!("flag vs remarks differ at {diff:?}"));
    }
    Ok(format!("{} quasi-split entries", flagged.len()))
}

fn non_reduced() -> Outcome {
    let cat = catalog();
    let mut count = 0;
    for e in cat.entries() {
        let p = &e.record.params;
        let expected = e.record.family == "AIII" && (p[0] + p[1]) % 2 == 1;
        let reduced = e.form.levi_restricted_roots().is_reduced();
        if reduced == expected {
            return Err(format!("{}: reduced = {reduced}", e.label()));
        }
        count += expected as usize;
    }
    Ok(format!("{count} non-reduced entries"))
}

const ORACLE_TYPES: [&str; 7] = ["A1", "A2", "A3", "B2", "B3", "C3", "G2"];

fn multiplicities() -> Outcome {
    let checked: Result<Vec<usize>, String> = ORACLE_TYPES
        .par_iter()
        .map(|t| {
            let d = adjoint(t);
            let mut n = 0;
            let small: HashSet<Vec<i64>> =
                d.dominant_coweights(6).map_err(|x| x.to_string())?.into_iter().collect();
            for l in d.dominant_coweights(10).map_err(|x| x.to_string())? {
                let ch = irreducible_character(&d, &l).map_err(|x| x.to_string())?;
                let dim = weyl_dim(&d, &l);
                if ch.dimension().to_string() != dim.to_string() {
                    return Err(format!("{t} {l:?}: mass {} vs {dim}", ch.dimension()));
                }
                if weyl_dimension(&d, &l).map_err(|x| x.to_string())?.to_string() != dim.to_string() {
                    return Err(format!("{t} {l:?}: library Weyl dimension"));
                }
                if !small.contains(&l) {
                    continue;
                }
                let below = brute_below(&d, &l);
                if ch.dominant_weights().keys().any(|mu| !below.contains(mu)) {
                    return Err(format!("{t} {l:?}: weight outside the dominance interval"));
                }
                for mu in below {
                    let k = kostant_multiplicity(&d, &l, &mu).map_err(|x| x.to_string())?;
                    if k != ch.multiplicity(&mu) {
                        return Err(format!("{t} {l:?} at {mu:?}: {k} vs {}", ch.multiplicity(&mu)));
                    }
                    n += 1;
                }
            }
            Ok(n)
        })
        .collect();
    Ok(format!("{} multiplicities compared", checked?.iter().sum::<usize>()))
}

fn mass_and_branching() -> Outcome {
    let cat = catalog();
    let entries: Vec<&CatalogEntry> = cat
        .table1()
        .filter(|e| e.form.datum().semisimple_rank() <= 4)
        .collect();
    let counts: Result<Vec<usize>, String> = entries
        .par_iter()
        .map(|e| {
            let f = &e.form;
            let d = f.datum();
            let h = associated_subgroup(f).map_err(|x| x.to_string())?;
            let wd = h.weight_datum();
            let mut n = 0;
            for l in d.dominant_coweights(4).map_err(|x| x.to_string())? {
                let g = specialization_character(f, &l).map_err(|x| x.to_string())?;
                let dim = weyl_dim(d, &l);
                if g.total_mass().to_string() != dim.to_string() {
                    return Err(format!("{} {l:?}: mass {} vs {dim}", e.label(), g.total_mass()));
                }
                let b = branch_with(f, &h, &l).map_err(|x| x.to_string())?;
                let Some(ms) = b.multiset() else {
                    return Err(format!("{} {l:?}: negative multiplicity", e.label()));
                };
                for z in g.degrees() {
                    let part: BTreeMap<Vec<i64>, u64> = ms
                        .iter()
                        .filter(|((_, deg), _)| *deg == z)
                        .map(|((w, _), &k)| (h.to_coordinates(w).unwrap(), k))
                        .collect();
                    let rebuilt = character_of_multiset(&wd, &part).map_err(|x| x.to_string())?;
                    let slice: BTreeMap<Vec<i64>, u64> = g
                        .slice(z)
                        .into_iter()
                        .map(|(w, k)| (h.to_coordinates(&w).unwrap(), k))
                        .collect();
                    if rebuilt.weights() != slice {
                        return Err(format!("{} {l:?}: degree {z} not rebuilt", e.label()));
                    }
                }
                n += 1;
            }
            Ok(n)
        })
        .collect();
    let counts = counts?;
    Ok(format!("{} forms, {} weights", entries.len(), counts.iter().sum::<usize>()))
}

fn su12() -> Outcome {
    let f = catalog().lookup("su(1,2)").map_err(|x| x.to_string())?;
    let h = associated_subgroup(&f).map_err(|x| x.to_string())?;
    if !h.cartan_type.is_isomorphic(&ty("A1")) {
        return Err(format!("H = {}", h.cartan_type));
    }
    let wd = h.weight_datum();
    let std = [1, 0];
    let g = specialization_character(&f, &std).map_err(|x| x.to_string())?;
    if g.total_mass().to_string() != "3" || g.degrees() != vec![0] {
        return Err(format!("mass {} degrees {:?}", g.total_mass(), g.degrees()));
    }
    let b = branch_with(&f, &h, &std).map_err(|x| x.to_string())?;
    let ms = b.multiset().ok_or("negative multiplicity")?;
    let mut dims: Vec<(u128, i64, u64)> = ms
        .iter()
        .map(|((w, z), &k)| (weyl_dim(&wd, &h.to_coordinates(w).unwrap()), *z, k))
        .collect();
    dims.sort();
    if dims != vec![(1, 0, 1), (2, 0, 1)] {
        return Err(format!("constituents {ms:?}"));
    }
    Ok("standard = std(A1) + trivial in degree 0".into())
}

fn posets() -> Outcome {
    let mut pairs = 0;
    for t in ORACLE_TYPES {
        let d = adjoint(t);
        let ws = d.dominant_coweights(8).map_err(|x| x.to_string())?;
        for mu in &ws {
            for l in &ws {
                if d.dominance_leq(mu, l) != brute_leq(&d, mu, l) {
                    return Err(format!("{t}: {mu:?} <= {l:?}"));
                }
                pairs += 1;
            }
        }
        let p = orbit_poset(&d, 8).map_err(|x| x.to_string())?;
        for &(a, b) in &p.covers {
            if p.dims[a] >= p.dims[b] || !brute_leq(&d, &p.elements[a], &p.elements[b]) {
                return Err(format!("{t}: cover {:?} -> {:?}", p.elements[a], p.elements[b]));
            }
        }
        for l in &ws {
            let s = stratum_dim(&d, l).map_err(|x| x.to_string())?;
            if mv_dim(&d, l, l).map_err(|x| x.to_string())? != Some(s) {
                return Err(format!("{t} {l:?}: mv_dim vs stratum_dim {s}"));
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn product_law() -> Outcome {
    let cat = catalog();
    let entries: Vec<&CatalogEntry> = cat.entries().iter().collect();
    let mut state = 0x2545_f491_4f6c_dd1du64;
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state as usize % entries.len()
    };
    for _ in 0..20 {
        let (a, b) = (entries[next()], entries[next()]);
        let (ha, hb) = (
            associated_subgroup(&a.form).map_err(|x| x.to_string())?,
            associated_subgroup(&b.form).map_err(|x| x.to_string())?,
        );
        let p = a.form.product(&b.form);
        let hp = associated_subgroup(&p).map_err(|x| x.to_string())?;
        let who = format!("{} x {}", a.label(), b.label());
        if !hp.cartan_type.is_isomorphic(&ha.cartan_type.direct_sum(&hb.cartan_type)) {
            return Err(format!("{who}: type {}", hp.cartan_type));
        }
        let (ra, rb) = (a.form.datum().rank(), b.form.datum().rank());
        let embed = |v: &[i64], left: bool| -> Vec<i64> {
            let mut out = vec![0; ra + rb];
            let off = if left { 0 } else { ra };
            out[off..off + v.len()].copy_from_slice(v);
            out
        };
        let want: BTreeSet<Vec<i64>> = ha
            .xi
            .iter()
            .map(|v| embed(v, true))
            .chain(hb.xi.iter().map(|v| embed(v, false)))
            .collect();
        let got: BTreeSet<Vec<i64>> = hp.xi.iter().cloned().collect();
        if got != want {
            return Err(format!("{who}: Xi differs"));
        }
        let gens: Vec<Vec<i64>> = ha
            .torus_lattice
            .basis_i64()
            .iter()
            .map(|v| embed(v, true))
            .chain(hb.torus_lattice.basis_i64().iter().map(|v| embed(v, false)))
            .collect();
        let sum = realgr_core::Sublattice::from_generators(ra + rb, &gens).map_err(|x| x.to_string())?;
        if sum != hp.torus_lattice {
            return Err(format!("{who}: torus lattice differs"));
        }
    }
    Ok("20 pairs".into())
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, name: "associated subgroup table", limit: Some(Duration::from_secs(30)), run: table1 },
        Criterion { id: 2, name: "split and compact extremes", limit: Some(Duration::from_secs(5)), run: extremes },
        Criterion { id: 3, name: "rank and Weyl identities", limit: None, run: rank_weyl },
        Criterion { id: 4, name: "quasi-split characterization", limit: None, run: quasi_split },
        Criterion { id: 5, name: "non-reduced restricted roots", limit: None, run: non_reduced },
        Criterion { id: 6, name: "Freudenthal, Kostant and Weyl dimension", limit: Some(Duration::from_secs(60)), run: multiplicities },
        Criterion { id: 7, name: "specialization mass and branching", limit: Some(Duration::from_secs(120)), run: mass_and_branching },
        Criterion { id: 8, name: "su(1,2) standard representation", limit: None, run: su12 },
        Criterion { id: 9, name: "dominance, posets and dimensions", limit: None, run: posets },
        Criterion { id: 10, name: "product law", limit: None, run: product_law },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(_), Some(limit)) if elapsed > limit => {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            }
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {}: {detail} ({elapsed:.2?})", c.id, c.name),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {}: {why} ({elapsed:.2?})", c.id, c.name);
            }
        }
    }
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
