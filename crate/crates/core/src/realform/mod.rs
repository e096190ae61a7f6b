//! Real forms: Satake data, the involution `θ` of the coweight lattice, the
//! projections `σ(λ) = θλ + λ` and `Σ(λ) = (σ(λ), <2ρ^vee_M, λ>)`, and
//! restricted roots.
//!
//! `θ` acts on column vectors of coweights; its transpose `θ^vee` acts on
//! weights. `M` is the Levi subgroup spanned by the painted nodes.
//!
//! Restricted-root multiplicities count preimages under `σ` among the
//! coroots, not dimensions of real root spaces.

mod catalog;
mod theta;

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::lattice::{fixed_sublattice, IntMatrix, Sublattice};
use crate::rootdatum::{add, pair, scale, BasedRootDatum, CartanType, Family, RootSubsystem};

pub use catalog::{catalog, Catalog, CatalogEntry, FormRecord, CATALOG_SCHEMA};
pub use theta::theta_from_satake;

/// Satake diagram on a based root datum: painted nodes and an involutive
/// permutation of the unpainted nodes. Indices are zero-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatakeData {
    datum: BasedRootDatum,
    painted: Vec<usize>,
    arrow: Vec<usize>,
}

impl SatakeData {
    /// `arrows` lists exchanged pairs of unpainted nodes.
    pub fn new(
        datum: BasedRootDatum,
        painted: Vec<usize>,
        arrows: &[(usize, usize)],
    ) -> Result<Self> {
        let n = datum.semisimple_rank();
        let mut painted = painted;
        painted.sort_unstable();
        painted.dedup();
        if let Some(&i) = painted.iter().find(|&&i| i >= n) {
            return Err(Error::InvariantViolation(format!("painted node {i} out of range")));
        }
        let mut arrow: Vec<usize> = (0..n).collect();
        for &(a, b) in arrows {
            if a >= n || b >= n || a == b {
                return Err(Error::InvariantViolation(format!("bad arrow ({a}, {b})")));
            }
            if painted.contains(&a) || painted.contains(&b) {
                return Err(Error::InvariantViolation(format!(
                    "arrow ({a}, {b}) touches a painted node"
                )));
            }
            if arrow[a] != a || arrow[b] != b {
                return Err(Error::InvariantViolation(format!(
                    "node of arrow ({a}, {b}) already paired"
                )));
            }
            arrow[a] = b;
            arrow[b] = a;
        }
        Ok(SatakeData {
            datum,
            painted,
            arrow,
        })
    }

    pub fn datum(&self) -> &BasedRootDatum {
        &self.datum
    }

    pub fn painted(&self) -> &[usize] {
        &self.painted
    }

    pub fn is_painted(&self, i: usize) -> bool {
        self.painted.binary_search(&i).is_ok()
    }

    /// The arrow permutation; painted nodes are fixed.
    pub fn arrow(&self) -> &[usize] {
        &self.arrow
    }

    /// Exchanged pairs `(i, j)` with `i < j`.
    pub fn arrow_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.arrow.len())
            .filter(|&i| self.arrow[i] > i)
            .map(|i| (i, self.arrow[i]))
            .collect()
    }

    /// Datum of the Levi `M`.
    pub fn levi(&self) -> BasedRootDatum {
        self.datum
            .levi_subdatum(&self.painted)
            .expect("painted indices are in range")
    }
}

/// Projected roots with preimage counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedRootSystem {
    ambient: Sublattice,
    roots: BTreeMap<Vec<i64>, usize>,
    reduced: bool,
}

impl RestrictedRootSystem {
    fn from_counts(ambient: Sublattice, roots: BTreeMap<Vec<i64>, usize>) -> Self {
        let reduced = !roots.keys().any(|v| roots.contains_key(&scale(2, v)));
        RestrictedRootSystem {
            ambient,
            roots,
            reduced,
        }
    }

    /// `Λ_S`.
    pub fn ambient(&self) -> &Sublattice {
        &self.ambient
    }

    pub fn roots(&self) -> &BTreeMap<Vec<i64>, usize> {
        &self.roots
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Roots whose double is not a root (the longer root of each `BC` pair is kept).
    pub fn reduced_part(&self) -> Vec<Vec<i64>> {
        self.roots
            .keys()
            .filter(|v| !self.roots.contains_key(&scale(2, v)))
            .cloned()
            .collect()
    }

    /// Roots that are not twice another root.
    pub fn indivisible_part(&self) -> Vec<Vec<i64>> {
        self.roots
            .keys()
            .filter(|v| {
                !(v.iter().all(|x| x % 2 == 0)
                    && self.roots.contains_key(&v.iter().map(|x| x / 2).collect::<Vec<_>>()))
            })
            .cloned()
            .collect()
    }
}

/// A real form: Satake data plus the lattice involution `θ` on coweights.
#[derive(Clone, Debug)]
pub struct RealForm {
    satake: SatakeData,
    theta: Vec<Vec<i64>>,
    label: Option<String>,
    two_rho_check_m: Vec<i64>,
    two_rho_m: Vec<i64>,
    fixed: Sublattice,
}

impl PartialEq for RealForm {
    fn eq(&self, other: &Self) -> bool {
        self.satake == other.satake && self.theta == other.theta
    }
}

impl Eq for RealForm {}

impl RealForm {
    /// Builds and validates a real form. `theta` is given by rows acting on
    /// column vectors of coweights.
    pub fn new(satake: SatakeData, theta: Vec<Vec<i64>>, label: Option<String>) -> Result<Self> {
        let datum = satake.datum.clone();
        let n = datum.rank();
        if theta.len() != n || theta.iter().any(|r| r.len() != n) {
            return Err(Error::InvariantViolation(format!(
                "theta must be {n}x{n}"
            )));
        }
        let m = IntMatrix::from_i64_rows(n, &theta)?;
        let fixed = fixed_sublattice(&m)?;
        let levi = satake.levi();
        let rf = RealForm {
            two_rho_check_m: levi.two_rho_check().to_vec(),
            two_rho_m: levi.two_rho().to_vec(),
            satake,
            theta,
            label,
            fixed,
        };
        rf.validate()?;
        Ok(rf)
    }

    fn validate(&self) -> Result<()> {
        let d = self.datum();
        let fail = |msg: String| Err(Error::InvariantViolation(msg));
        let coroots: HashSet<Vec<i64>> = d.root_system().all_coroots().into_iter().collect();
        for b in d.positive_coroots() {
            if !coroots.contains(&self.theta(b)) {
                return fail(format!("theta does not permute the coroots at {b:?}"));
            }
        }
        let roots: HashSet<Vec<i64>> = d.root_system().all_roots().into_iter().collect();
        for g in d.positive_roots() {
            if !roots.contains(&self.theta_check(g)) {
                return fail(format!("theta^vee does not permute the roots at {g:?}"));
            }
        }
        let m = &self.two_rho_check_m;
        if self.theta_check(m) != scale(-1, m) {
            return fail("theta^vee(2 rho^vee_M) != -2 rho^vee_M".into());
        }
        let rest: Vec<i64> = d
            .two_rho_check()
            .iter()
            .zip(m)
            .map(|(a, b)| a - b)
            .collect();
        if self.theta_check(&rest) != rest {
            return fail("theta^vee does not fix 2 rho^vee - 2 rho^vee_M".into());
        }
        // Satake compatibility on simple coroots
        for i in 0..d.semisimple_rank() {
            let img = self.theta(&d.simple_coroots()[i]);
            if self.satake.is_painted(i) {
                if img != scale(-1, &d.simple_coroots()[i]) {
                    return fail(format!("painted coroot {i} is not negated"));
                }
                continue;
            }
            let j = self.satake.arrow[i];
            let diff: Vec<i64> = img
                .iter()
                .zip(&d.simple_coroots()[j])
                .map(|(a, b)| a - b)
                .collect();
            let ok = match d.coroot_coordinates(&diff) {
                Some(c) => c
                    .iter()
                    .enumerate()
                    .all(|(k, &x)| x == 0 || (x > 0 && self.satake.is_painted(k))),
                None => false,
            };
            if !ok {
                return fail(format!(
                    "theta(coroot {i}) is not coroot {j} plus painted coroots"
                ));
            }
        }
        Ok(())
    }

    pub fn datum(&self) -> &BasedRootDatum {
        &self.satake.datum
    }

    pub fn satake(&self) -> &SatakeData {
        &self.satake
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn theta_matrix(&self) -> &[Vec<i64>] {
        &self.theta
    }

    /// `θ(λ)` on a coweight.
    pub fn theta(&self, v: &[i64]) -> Vec<i64> {
        self.theta.iter().map(|r| pair(r, v)).collect()
    }

    /// `θ^vee(x)` on a weight (transpose action).
    pub fn theta_check(&self, x: &[i64]) -> Vec<i64> {
        let n = x.len();
        (0..n)
            .map(|j| (0..n).map(|i| x[i] * self.theta[i][j]).sum())
            .collect()
    }

    /// `2ρ^vee_M`, the sum of the positive roots of `M`.
    pub fn two_rho_check_m(&self) -> &[i64] {
        &self.two_rho_check_m
    }

    /// `2ρ_M`, the sum of the positive coroots of `M`.
    pub fn two_rho_m(&self) -> &[i64] {
        &self.two_rho_m
    }

    /// `σ(λ) = θ(λ) + λ`.
    pub fn sigma(&self, lambda: &[i64]) -> Vec<i64> {
        add(&self.theta(lambda), lambda)
    }

    /// `Σ(λ) = (σ(λ), <2ρ^vee_M, λ>)`.
    pub fn big_sigma(&self, lambda: &[i64]) -> (Vec<i64>, i64) {
        (self.sigma(lambda), pair(&self.two_rho_check_m, lambda))
    }

    /// `Λ_S`, the θ-fixed coweights.
    pub fn real_lattice(&self) -> &Sublattice {
        &self.fixed
    }

    /// `σ(Λ_T)`.
    pub fn sigma_lattice(&self) -> Sublattice {
        let n = self.datum().rank();
        let gens: Vec<Vec<i64>> = (0..n).map(|i| self.sigma(&unit(n, i))).collect();
        Sublattice::from_generators(n, &gens).expect("consistent widths")
    }

    /// `Σ(Λ_T)` inside `Λ_T × Z`.
    pub fn big_sigma_lattice(&self) -> Sublattice {
        let n = self.datum().rank();
        let gens: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let (mut v, z) = self.big_sigma(&unit(n, i));
                v.push(z);
                v
            })
            .collect();
        Sublattice::from_generators(n + 1, &gens).expect("consistent widths")
    }

    pub fn real_rank(&self) -> usize {
        self.fixed.rank()
    }

    /// All coroots `β` with `<2ρ^vee_M, β> = 0` (both signs).
    pub fn levi_coroots(&self) -> Vec<Vec<i64>> {
        self.datum()
            .root_system()
            .all_coroots()
            .into_iter()
            .filter(|b| pair(&self.two_rho_check_m, b) == 0)
            .collect()
    }

    fn project(&self, coroots: &[Vec<i64>]) -> RestrictedRootSystem {
        let mut counts = BTreeMap::new();
        for b in coroots {
            let s = self.sigma(b);
            if s.iter().any(|&x| x != 0) {
                *counts.entry(s).or_insert(0) += 1;
            }
        }
        RestrictedRootSystem::from_counts(self.fixed.clone(), counts)
    }

    /// `σ(R)` over all coroots.
    pub fn restricted_roots(&self) -> RestrictedRootSystem {
        self.project(&self.datum().root_system().all_coroots())
    }

    /// `σ(R_0)`, projections of the coroots orthogonal to `2ρ^vee_M`.
    pub fn levi_restricted_roots(&self) -> RestrictedRootSystem {
        self.project(&self.levi_coroots())
    }

    /// Positive system for vectors of `Λ_S`: positive under `<2ρ^vee, ·>`.
    pub(crate) fn subsystem(&self, roots: &[Vec<i64>]) -> Result<RootSubsystem> {
        let d = self.datum();
        let form = |x: &[i64], y: &[i64]| d.invariant_form(x, y);
        let height = |v: &[i64]| pair(d.two_rho_check(), v);
        RootSubsystem::new(roots, &form, &height)
    }

    /// Type of `σ(R)`, with `BC` for components carrying both `v` and `2v`.
    pub fn restricted_type(&self) -> Result<CartanType> {
        restricted_type_of(self, &self.restricted_roots())
    }

    /// Order of the Weyl group of the reduced part of `σ(R)`.
    pub fn small_weyl_order(&self) -> Result<BigUint> {
        let rr = self.restricted_roots();
        Ok(self.subsystem(&rr.reduced_part())?.cartan_type().weyl_order())
    }

    /// No painted nodes (`2ρ^vee_M = 0`).
    pub fn is_quasi_split(&self) -> bool {
        self.two_rho_check_m.iter().all(|&x| x == 0)
    }

    /// `θ` is the identity.
    pub fn is_split(&self) -> bool {
        let n = self.theta.len();
        (0..n).all(|i| (0..n).all(|j| self.theta[i][j] == (i == j) as i64))
    }

    /// Real rank zero.
    pub fn is_compact(&self) -> bool {
        self.real_rank() == 0
    }

    /// The product real form on the direct-sum datum.
    pub fn product(&self, other: &RealForm) -> RealForm {
        let d = self.datum().direct_sum(other.datum());
        let off = self.datum().semisimple_rank();
        // simple roots of the sum: those of self, then those of other
        let mut painted = self.satake.painted.clone();
        painted.extend(other.satake.painted.iter().map(|i| i + off));
        let mut arrows = self.satake.arrow_pairs();
        arrows.extend(other.satake.arrow_pairs().iter().map(|(a, b)| (a + off, b + off)));
        let (r1, r2) = (self.theta.len(), other.theta.len());
        let mut theta = vec![vec![0; r1 + r2]; r1 + r2];
        for i in 0..r1 {
            theta[i][..r1].copy_from_slice(&self.theta[i]);
        }
        for i in 0..r2 {
            theta[r1 + i][r1..].copy_from_slice(&other.theta[i]);
        }
        let label = match (&self.label, &other.label) {
            (Some(a), Some(b)) => Some(format!("{a} x {b}")),
            _ => None,
        };
        let sd = SatakeData::new(d, painted, &arrows).expect("product of valid Satake data");
        RealForm::new(sd, theta, label).expect("product of valid real forms")
    }

    /// Generators of `Λ_S ∩ Q^+`: the θ-fixed positive coroots and the nonzero
    /// `σ(β)` for positive coroots `β`, deduplicated and sorted.
    pub fn real_dominance_generators(&self) -> Vec<Vec<i64>> {
        let mut out = BTreeSet::new();
        for b in self.datum().positive_coroots() {
            if self.theta(b) == *b {
                out.insert(b.clone());
            }
            let s = self.sigma(b);
            if s.iter().any(|&x| x != 0) {
                out.insert(s);
            }
        }
        out.into_iter().collect()
    }

    /// Real coweight that is dominant for `G`.
    pub fn is_real_dominant(&self, lambda: &[i64]) -> bool {
        self.fixed.contains(lambda) && self.datum().is_dominant(lambda)
    }

    /// Real dominance: `λ - μ ∈ Λ_S ∩ Q^+`.
    pub fn real_dominance_leq(&self, mu: &[i64], lambda: &[i64]) -> bool {
        self.fixed.contains(mu) && self.fixed.contains(lambda) && self.datum().dominance_leq(mu, lambda)
    }

    /// Real dominant coweights of height at most `max_height`.
    pub fn real_dominant_coweights(&self, max_height: usize) -> Result<Vec<Vec<i64>>> {
        Ok(self
            .datum()
            .dominant_coweights(max_height)?
            .into_iter()
            .filter(|l| self.fixed.contains(l))
            .collect())
    }
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Type of a projected root system, marking non-reduced components as `BC`.
pub fn restricted_type_of(rf: &RealForm, rr: &RestrictedRootSystem) -> Result<CartanType> {
    let indivisible = rr.indivisible_part();
    let sub = rf.subsystem(&indivisible)?;
    let doubled: HashSet<Vec<i64>> = rr
        .roots()
        .keys()
        .filter(|v| rr.roots().contains_key(&scale(2, v)))
        .cloned()
        .collect();
    let simple = sub.simple_roots();
    let comps = crate::rootdatum::classify_components(sub.cartan_matrix())?;
    let mut out = Vec::new();
    for c in comps {
        // a component is BC when some of its roots has its double present
        let members: Vec<&Vec<i64>> = c.nodes.iter().map(|&i| &simple[i]).collect();
        let in_component = |v: &Vec<i64>| {
            let form = |x: &[i64], y: &[i64]| rf.datum().invariant_form(x, y);
            simple
                .iter()
                .enumerate()
                .filter(|(_, s)| form(v, s) != 0)
                .all(|(i, _)| c.nodes.contains(&i))
                && members.iter().any(|s| form(v, s) != 0)
        };
        let bc = doubled.iter().any(in_component);
        let family = if bc { Family::BC } else { c.component.family };
        out.push(crate::rootdatum::Component {
            family,
            rank: c.component.rank,
        });
    }
    Ok(CartanType::new(out, 0))
}
