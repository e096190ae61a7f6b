//! The associated subgroup `Ĥ` of the dual group: the Levi data `Δ_0`, `τ`,
//! `Δ_1`, the reduced root system `Ξ ⊂ σ(Λ_T)` and the datum of `Ĥ`.
//!
//! Roots of the dual group `Ǧ` are the coroots of `G`, so every vector here is
//! a coweight of `G`. `R_0` is the set of coroots orthogonal to `2ρ^vee_M`.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::Sublattice;
use crate::realform::{restricted_type_of, Catalog, CatalogEntry, RealForm};
use crate::rootdatum::{add, pair, scale, sub, BasedRootDatum, CartanType, RootSubsystem};

/// Simple roots of `Ľ_0` and `Ľ_1` and the vectors `τ(α)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviData {
    /// Simple system of `R_0`.
    pub delta0: Vec<Vec<i64>>,
    /// Simple roots of `Ľ_1`.
    pub delta1: Vec<Vec<i64>>,
    /// `(α, τ(α))` for each `α ∈ Δ_0`; `τ(α) = 0` unless `α + θα ∈ R_0`.
    pub tau: Vec<(Vec<i64>, Vec<i64>)>,
    /// All roots of `R_0`.
    pub r0: Vec<Vec<i64>>,
    /// All roots of `Ľ_1`: the roots of `R_0` in the span of `Δ_1`.
    pub r1: Vec<Vec<i64>>,
}

fn r0_subsystem(rf: &RealForm) -> Result<RootSubsystem> {
    let d = rf.datum();
    let form = |x: &[i64], y: &[i64]| d.invariant_form(x, y);
    let height = |v: &[i64]| pair(d.two_rho_check(), v);
    RootSubsystem::new(&rf.levi_coroots(), &form, &height)
}

fn is_zero(v: &[i64]) -> bool {
    v.iter().all(|&x| x == 0)
}

pub fn levi_data(rf: &RealForm) -> Result<LeviData> {
    let r0 = rf.levi_coroots();
    let r0_set: HashSet<&Vec<i64>> = r0.iter().collect();
    let delta0 = r0_subsystem(rf)?.simple_roots().to_vec();
    let n = rf.datum().rank();
    let mut tau = Vec::new();
    let mut delta1 = BTreeSet::new();
    for a in &delta0 {
        let ta = rf.theta(a);
        let s = add(a, &ta);
        if ta != *a && r0_set.contains(&s) {
            tau.push((a.clone(), sub(a, &ta)));
            delta1.insert(s);
        } else {
            tau.push((a.clone(), vec![0; n]));
            delta1.insert(a.clone());
        }
    }
    let delta1: Vec<Vec<i64>> = delta1.into_iter().collect();
    let span = Sublattice::from_generators(n, &delta1)?;
    let r1 = r0
        .iter()
        .filter(|b| in_rational_span(&span, b))
        .cloned()
        .collect();
    Ok(LeviData {
        delta0,
        delta1,
        tau,
        r0,
        r1,
    })
}

fn in_rational_span(span: &Sublattice, v: &[i64]) -> bool {
    let mut gens = span.basis_i64();
    gens.push(v.to_vec());
    Sublattice::from_generators(span.ambient_rank(), &gens)
        .map(|s| s.rank() == span.rank())
        .unwrap_or(false)
}

/// Whether `Ľ_1 = Ľ_0`: every θ-stable component of the `Δ_0` diagram has a
/// θ-fixed node.
pub fn l1_equals_l0(rf: &RealForm) -> Result<bool> {
    let d = rf.datum();
    let delta0 = r0_subsystem(rf)?.simple_roots().to_vec();
    let k = delta0.len();
    let mut comp: Vec<usize> = (0..k).collect();
    fn find(c: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while c[r] != r {
            r = c[r];
        }
        c[i] = r;
        r
    }
    for i in 0..k {
        for j in (i + 1)..k {
            if d.invariant_form(&delta0[i], &delta0[j]) != 0 {
                let (a, b) = (find(&mut comp, i), find(&mut comp, j));
                comp[a] = b;
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..k {
        let r = find(&mut comp, i);
        groups.entry(r).or_default().push(i);
    }
    for nodes in groups.values() {
        let members: HashSet<&Vec<i64>> = nodes.iter().map(|&i| &delta0[i]).collect();
        let stable = nodes.iter().all(|&i| members.contains(&rf.theta(&delta0[i])));
        let fixed = nodes.iter().any(|&i| rf.theta(&delta0[i]) == delta0[i]);
        if stable && !fixed {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Ξ`: the nonzero `σ(β)`, `β ∈ R_0`, whose double is not in `σ(R_0)`. Sorted.
pub fn xi(rf: &RealForm) -> Vec<Vec<i64>> {
    let proj: BTreeSet<Vec<i64>> = rf
        .levi_coroots()
        .iter()
        .map(|b| rf.sigma(b))
        .filter(|v| !is_zero(v))
        .collect();
    proj.iter()
        .filter(|v| !proj.contains(&scale(2, v)))
        .cloned()
        .collect()
}

/// The associated subgroup `Ĥ`.
#[derive(Clone, Debug)]
pub struct AssociatedSubgroup {
    /// `σ(Λ_T)`, the character lattice of the maximal torus of `Ĥ`.
    pub torus_lattice: Sublattice,
    /// `Σ(Λ_T) ⊂ Λ_T × Z`.
    pub graded_lattice: Sublattice,
    /// Roots `Ξ`, as vectors of `Λ_T`.
    pub xi: Vec<Vec<i64>>,
    /// Simple roots of `Ξ` for the order given by `<2ρ^vee, ·>`.
    pub simple_xi: Vec<Vec<i64>>,
    pub cartan_type: CartanType,
    /// Root datum of `Ĥ` in the basis of `torus_lattice`: roots are `Ξ`.
    pub h_datum: BasedRootDatum,
}

impl AssociatedSubgroup {
    /// Datum whose coweights are the weights of `Ĥ`, for use with the
    /// characters module.
    pub fn weight_datum(&self) -> BasedRootDatum {
        self.h_datum.dual()
    }

    /// Coordinates of a vector of `σ(Λ_T)` in the lattice basis.
    pub fn to_coordinates(&self, v: &[i64]) -> Result<Vec<i64>> {
        self.torus_lattice
            .coordinates(v)
            .ok_or_else(|| Error::NotInImageLattice(v.to_vec()))
    }

    /// Vector of `Λ_T` from lattice coordinates.
    pub fn from_coordinates(&self, c: &[i64]) -> Vec<i64> {
        let basis = self.torus_lattice.basis_i64();
        let n = self.torus_lattice.ambient_rank();
        basis
            .iter()
            .zip(c)
            .fold(vec![0; n], |acc, (b, &k)| add(&acc, &scale(k, b)))
    }

    pub fn rank(&self) -> usize {
        self.torus_lattice.rank()
    }

    pub fn weyl_order(&self) -> BigUint {
        self.cartan_type.weyl_order()
    }
}

pub fn associated_subgroup(rf: &RealForm) -> Result<AssociatedSubgroup> {
    let d = rf.datum();
    let torus_lattice = rf.sigma_lattice();
    let graded_lattice = rf.big_sigma_lattice();
    let xi = xi(rf);
    let form = |x: &[i64], y: &[i64]| d.invariant_form(x, y);
    let height = |v: &[i64]| pair(d.two_rho_check(), v);
    let sub_sys = RootSubsystem::new(&xi, &form, &height)?;
    let simple_xi = sub_sys.simple_roots().to_vec();
    let r = torus_lattice.rank();
    let basis = torus_lattice.basis_i64();

    let mut roots = Vec::with_capacity(simple_xi.len());
    let mut coroots = Vec::with_capacity(simple_xi.len());
    for x in &simple_xi {
        let c = torus_lattice.coordinates(x).ok_or_else(|| {
            Error::InternalInconsistency(format!("root {x:?} is not in σ(Λ_T)"))
        })?;
        let bxx = form(x, x);
        let mut cv = Vec::with_capacity(r);
        for b in &basis {
            let num = 2 * form(x, b);
            if num % bxx != 0 {
                return Err(Error::InternalInconsistency(format!(
                    "coroot of {x:?} is not integral on σ(Λ_T)"
                )));
            }
            cv.push((num / bxx) as i64);
        }
        roots.push(c);
        coroots.push(cv);
    }
    let h_datum = BasedRootDatum::new(r, roots, coroots)
        .map_err(|e| Error::InternalInconsistency(format!("datum of Ĥ: {e}")))?;
    let cartan_type = h_datum.cartan_type().clone();
    let out = AssociatedSubgroup {
        torus_lattice,
        graded_lattice,
        xi,
        simple_xi,
        cartan_type,
        h_datum,
    };
    if out.rank() != rf.real_rank() {
        return Err(Error::InternalInconsistency(format!(
            "rank of Ĥ is {} but the real rank is {}",
            out.rank(),
            rf.real_rank()
        )));
    }
    if *sub_sys.cartan_type() != out.cartan_type.without_torus() {
        return Err(Error::InternalInconsistency(
            "datum of Ĥ does not reproduce the type of Ξ".into(),
        ));
    }
    if d.is_semisimple() {
        let small = rf.small_weyl_order()?;
        if out.weyl_order() != small {
            return Err(Error::InternalInconsistency(format!(
                "|W(Ξ)| = {} but the small Weyl group has order {small}",
                out.weyl_order()
            )));
        }
    }
    Ok(out)
}

/// `σ(β) ∈ Ξ ⟺ β ∈ R_1` for `β ∈ R_0`, with fibres over `Ξ` of size one
/// (a θ-fixed root) or two (an exchanged pair).
pub fn verify_fixed_point_shadow(rf: &RealForm) -> Result<bool> {
    let ld = levi_data(rf)?;
    let xi: HashSet<Vec<i64>> = xi(rf).into_iter().collect();
    let r1: HashSet<&Vec<i64>> = ld.r1.iter().collect();
    let mut fibres: BTreeMap<Vec<i64>, Vec<&Vec<i64>>> = BTreeMap::new();
    for b in &ld.r0 {
        let s = rf.sigma(b);
        if xi.contains(&s) != r1.contains(b) {
            return Ok(false);
        }
        if r1.contains(b) {
            fibres.entry(s).or_default().push(b);
        }
    }
    if fibres.len() != xi.len() {
        return Ok(false);
    }
    Ok(fibres.values().all(|f| match f.as_slice() {
        [b] => rf.theta(b) == **b,
        [b, c] => rf.theta(b) == **c,
        _ => false,
    }))
}

/// One row of the associated-subgroup table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Row {
    pub label: String,
    pub family: String,
    pub g_type: String,
    pub dual_type: String,
    pub h_type: String,
    pub expected_h: String,
    pub real_rank: usize,
    pub small_weyl_order: String,
    pub restricted_type: String,
    pub quasi_split: bool,
    pub split: bool,
    pub reduced: bool,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Report {
    pub rows: Vec<Table1Row>,
}

impl Table1Report {
    pub fn mismatches(&self) -> Vec<&Table1Row> {
        self.rows.iter().filter(|r| !r.matches).collect()
    }

    /// `Err(Mismatch)` for the first failing row.
    pub fn check(&self) -> Result<()> {
        match self.mismatches().first() {
            None => Ok(()),
            Some(r) => Err(Error::Mismatch {
                label: r.label.clone(),
                expected: r.expected_h.clone(),
                computed: r.h_type.clone(),
            }),
        }
    }
}

pub fn table1_row(entry: &CatalogEntry) -> Result<Table1Row> {
    let rf = &entry.form;
    let h = associated_subgroup(rf)?;
    let h_type = h.cartan_type.clone();
    let matches = entry
        .expected_h()
        .is_some_and(|e| e.is_isomorphic(&h_type));
    Ok(Table1Row {
        label: entry.label().to_string(),
        family: entry.record.family.clone(),
        g_type: rf.datum().cartan_type().to_string(),
        dual_type: rf.datum().cartan_type().dual().to_string(),
        h_type: h_type.to_string(),
        expected_h: entry.record.expected_h.clone(),
        real_rank: rf.real_rank(),
        small_weyl_order: rf.small_weyl_order()?.to_string(),
        restricted_type: restricted_type_of(rf, &rf.levi_restricted_roots())?.to_string(),
        quasi_split: rf.is_quasi_split(),
        split: rf.is_split(),
        reduced: rf.levi_restricted_roots().is_reduced(),
        matches,
    })
}

/// Table rows for the flagged catalog entries of semisimple rank at most
/// `max_rank` (exceptional rows are always included).
pub fn classify_table1(catalog: &Catalog, max_rank: usize) -> Result<Table1Report> {
    let entries: Vec<&CatalogEntry> = catalog
        .table1()
        .filter(|e| {
            let exceptional = matches!(e.record.cartan.chars().next(), Some('E' | 'F' | 'G'));
            exceptional || e.form.datum().semisimple_rank() <= max_rank
        })
        .collect();
    let rows = entries
        .par_iter()
        .map(|e| table1_row(e))
        .collect::<Result<Vec<_>>>()?;
    Ok(Table1Report { rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realform::catalog;

    fn form(label: &str) -> RealForm {
        catalog().lookup(label).unwrap()
    }

    #[test]
    fn quasi_split_levi_data() {
        let f = form("su(2,3)");
        let mut delta0 = levi_data(&f).unwrap().delta0;
        delta0.sort();
        let mut simple = f.datum().simple_coroots().to_vec();
        simple.sort();
        assert_eq!(delta0, simple);
    }

    #[test]
    fn su_1_2_levi_data() {
        let f = form("su(1,2)");
        let ld = levi_data(&f).unwrap();
        let c = f.datum().simple_coroots();
        assert_eq!(ld.delta0.len(), 2);
        assert_eq!(f.theta(&c[0]), c[1]);
        assert_eq!(ld.delta1, vec![add(&c[0], &c[1])]);
        assert!(ld.tau.iter().all(|(_, t)| !is_zero(t)));
        assert!(!l1_equals_l0(&f).unwrap());
    }

    #[test]
    fn split_levi_data() {
        let f = form("split(B3)");
        let ld = levi_data(&f).unwrap();
        assert_eq!(ld.delta1, {
            let mut v = ld.delta0.clone();
            v.sort();
            v
        });
        assert!(ld.tau.iter().all(|(_, t)| is_zero(t)));
        assert!(l1_equals_l0(&f).unwrap());
    }

    #[test]
    fn su_2_2_l1_equals_l0() {
        assert!(l1_equals_l0(&form("su(2,2)")).unwrap());
    }

    #[test]
    fn l1_criterion_agrees_with_tau() {
        for e in catalog().entries() {
            let ld = levi_data(&e.form).unwrap();
            let all_zero = ld.tau.iter().all(|(_, t)| is_zero(t));
            assert_eq!(l1_equals_l0(&e.form).unwrap(), all_zero, "{}", e.label());
        }
    }

    #[test]
    fn xi_examples() {
        let s = form("split(A2)");
        let two_r: BTreeSet<Vec<i64>> = s
            .datum()
            .root_system()
            .all_coroots()
            .iter()
            .map(|b| scale(2, b))
            .collect();
        assert_eq!(xi(&s).into_iter().collect::<BTreeSet<_>>(), two_r);
        assert!(xi(&form("compact(E6)")).is_empty());
        let f = form("su(1,2)");
        let beta = f.sigma(&f.datum().simple_coroots()[0]);
        assert_eq!(xi(&f), vec![scale(-2, &beta), scale(2, &beta)]);
    }

    #[test]
    fn associated_subgroup_examples() {
        for (label, t) in [("split(E6)", "E6"), ("su*(4)", "A1"), ("f4(-20)", "A1"), ("e6(-14)", "B2")] {
            let h = associated_subgroup(&form(label)).unwrap();
            assert_eq!(h.cartan_type.to_string(), t, "{label}");
        }
    }

    #[test]
    fn table_rows_match() {
        let report = classify_table1(catalog(), 8).unwrap();
        assert!(report.mismatches().is_empty(), "{:?}", report.mismatches());
        assert!(report.check().is_ok());
        let bi = report.rows.iter().find(|r| r.label == "so(3,6)").unwrap();
        assert_eq!((bi.dual_type.as_str(), bi.h_type.as_str()), ("C4", "C3"));
    }

    #[test]
    fn fixed_point_shadow_holds() {
        for e in catalog().entries() {
            assert!(verify_fixed_point_shadow(&e.form).unwrap(), "{}", e.label());
        }
    }

    #[test]
    fn su_2_3_has_mixed_fibres() {
        let f = form("su(2,3)");
        let ld = levi_data(&f).unwrap();
        let fixed = ld.r1.iter().filter(|b| f.theta(b) == **b).count();
        assert!(fixed > 0 && fixed < ld.r1.len());
        assert!(verify_fixed_point_shadow(&f).unwrap());
    }

    #[test]
    fn coroot_normalization_does_not_change_type() {
        // the Cartan matrix of Ξ under a rescaled form
        for label in ["e6(-14)", "sp(2,3)", "so(3,8)"] {
            let f = form(label);
            let d = f.datum();
            let x = xi(&f);
            let form7 = |a: &[i64], b: &[i64]| 7 * d.invariant_form(a, b);
            let height = |v: &[i64]| pair(d.two_rho_check(), v);
            let s = RootSubsystem::new(&x, &form7, &height).unwrap();
            let h = associated_subgroup(&f).unwrap();
            assert_eq!(s.cartan_type(), &h.cartan_type.without_torus(), "{label}");
        }
    }

    #[test]
    fn tori_have_empty_xi() {
        let h = associated_subgroup(&form("torus C^x")).unwrap();
        assert!(h.xi.is_empty());
        assert_eq!(h.cartan_type.to_string(), "T1");
    }

    #[test]
    fn product_law() {
        let a = form("su(1,2)");
        let b = form("e6(-14)");
        let p = associated_subgroup(&a.product(&b)).unwrap();
        let ha = associated_subgroup(&a).unwrap();
        let hb = associated_subgroup(&b).unwrap();
        assert_eq!(p.cartan_type, ha.cartan_type.direct_sum(&hb.cartan_type));
    }
}
