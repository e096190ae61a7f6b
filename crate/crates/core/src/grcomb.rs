//! Orbit combinatorics of the loop Grassmannian of `G` and of a real form:
//! stratum dimensions, closure posets, components, MV dimensions, graded
//! specialization characters and branching to the associated subgroup.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::characters::{
    decompose_graded, irreducible_character, Character, Decomposition, GradedCharacter,
    GradedWeightMap,
};
use crate::dualgroup::{associated_subgroup, AssociatedSubgroup};
use crate::error::{Error, Result};
use crate::lattice::{quotient, FiniteAbelianGroup, Sublattice};
use crate::realform::RealForm;
use crate::rootdatum::{add, pair, BasedRootDatum};

/// `dim Gr^λ = <2ρ^vee, λ>`.
pub fn stratum_dim(datum: &BasedRootDatum, lambda: &[i64]) -> Result<i64> {
    check_rank(datum, lambda)?;
    if !datum.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_vec()));
    }
    Ok(pair(datum.two_rho_check(), lambda))
}

/// Real dimension of `Gr_R^λ`, the same integer `<2ρ^vee, λ>`.
pub fn real_stratum_dim(rf: &RealForm, lambda: &[i64]) -> Result<i64> {
    check_rank(rf.datum(), lambda)?;
    if !rf.is_real_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_vec()));
    }
    Ok(pair(rf.datum().two_rho_check(), lambda))
}

fn check_rank(datum: &BasedRootDatum, v: &[i64]) -> Result<()> {
    if v.len() != datum.rank() {
        return Err(Error::RankMismatch {
            expected: datum.rank(),
            found: v.len(),
        });
    }
    Ok(())
}

/// Closure order on orbits, truncated at a height bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumPoset {
    /// Ordered by height, then by fundamental coordinates (decreasing).
    pub elements: Vec<Vec<i64>>,
    /// Hasse diagram: `(i, j)` when `elements[j]` covers `elements[i]`.
    pub covers: Vec<(usize, usize)>,
    pub dims: Vec<i64>,
}

impl StratumPoset {
    fn build(
        elements: Vec<Vec<i64>>,
        dims: Vec<i64>,
        leq: impl Fn(&[i64], &[i64]) -> bool,
    ) -> Self {
        let n = elements.len();
        let lt: Vec<Vec<bool>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| i != j && leq(&elements[i], &elements[j]))
                    .collect()
            })
            .collect();
        let mut covers = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if lt[i][j] && !(0..n).any(|k| lt[i][k] && lt[k][j]) {
                    covers.push((i, j));
                }
            }
        }
        StratumPoset {
            elements,
            covers,
            dims,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Graphviz text: one node per orbit with its dimension, one edge per cover.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph strata {\n");
        for (i, (e, d)) in self.elements.iter().zip(&self.dims).enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{e:?}\", dim={d}];");
        }
        for (i, j) in &self.covers {
            let _ = writeln!(s, "  n{i} -> n{j};");
        }
        s.push_str("}\n");
        s
    }
}

/// Dominant coweights of height at most `height_bound` under dominance.
pub fn orbit_poset(datum: &BasedRootDatum, height_bound: usize) -> Result<StratumPoset> {
    let elements = datum.dominant_coweights(height_bound)?;
    let dims = elements
        .iter()
        .map(|l| pair(datum.two_rho_check(), l))
        .collect();
    Ok(StratumPoset::build(elements, dims, |a, b| {
        datum.dominance_leq(a, b)
    }))
}

/// Real dominant coweights of height at most `height_bound` under real dominance.
pub fn real_orbit_poset(rf: &RealForm, height_bound: usize) -> Result<StratumPoset> {
    let elements = if rf.real_rank() == 0 {
        vec![vec![0; rf.datum().rank()]]
    } else {
        rf.real_dominant_coweights(height_bound)?
    };
    let dims = elements
        .iter()
        .map(|l| pair(rf.datum().two_rho_check(), l))
        .collect();
    Ok(StratumPoset::build(elements, dims, |a, b| {
        rf.real_dominance_leq(a, b)
    }))
}

/// Components of the real loop Grassmannian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentReport {
    /// `π_0 = Λ_S / (Λ_S ∩ Q)`.
    pub pi0: FiniteAbelianGroup,
    /// Image of `Λ_T / Q` under `σ`: the components of `Gr_R^0`.
    pub gr0: FiniteAbelianGroup,
    /// `π_0` modulo the image of `σ`.
    pub gr0_cokernel: FiniteAbelianGroup,
    /// Index of `Gr_R^0` in `π_0`, when finite.
    pub gr0_index: Option<BigInt>,
    /// Parity of `<2ρ^vee, ·>` on the basis of `Λ_S`.
    pub parity: Vec<u8>,
    /// Index of `Gr_R^+` (even-dimensional components) in `π_0`: 1 or 2.
    pub plus_index: u8,
    /// Whether every component of `Gr_R^0` lies in `Gr_R^+`.
    pub gr0_in_plus: bool,
}

pub fn components(rf: &RealForm) -> Result<ComponentReport> {
    let d = rf.datum();
    let n = d.rank();
    let ls = rf.real_lattice();
    let q = Sublattice::from_generators(n, d.simple_coroots())?;
    let k = ls.intersect(&q)?;
    let pi0 = quotient(ls.rank(), &k.relative_to(ls)?)?;
    let image = rf.sigma_lattice().sum(&k)?;
    let gr0 = quotient(image.rank(), &k.relative_to(&image)?)?;
    let gr0_cokernel = quotient(ls.rank(), &image.relative_to(ls)?)?;
    let gr0_index = gr0_cokernel.order();
    let parity: Vec<u8> = ls
        .basis_i64()
        .iter()
        .map(|b| pair(d.two_rho_check(), b).rem_euclid(2) as u8)
        .collect();
    let plus_index = if parity.iter().any(|&p| p == 1) { 2 } else { 1 };
    let gr0_in_plus = rf
        .sigma_lattice()
        .basis_i64()
        .iter()
        .all(|b| pair(d.two_rho_check(), b).rem_euclid(2) == 0);
    Ok(ComponentReport {
        pi0,
        gr0,
        gr0_cokernel,
        gr0_index,
        parity,
        plus_index,
        gr0_in_plus,
    })
}

/// `dim (Gr^λ ∩ S^ν) = <ρ^vee, λ + ν>`, or `None` when the intersection is
/// empty (the dominant representative of `ν` is not below `λ`).
pub fn mv_dim(datum: &BasedRootDatum, lambda: &[i64], nu: &[i64]) -> Result<Option<i64>> {
    stratum_dim(datum, lambda)?;
    check_rank(datum, nu)?;
    let (dom, _) = datum.dominant_representative(nu);
    if !datum.dominance_leq(&dom, lambda) {
        return Ok(None);
    }
    Ok(Some(pair(datum.two_rho_check(), &add(lambda, nu)) / 2))
}

/// Upper bound `<ρ^vee, λ + ν>` for `dim_R (Gr_R^λ ∩ S_R^ν)`, or `None` when
/// the intersection is empty.
pub fn mv_dim_bound_real(rf: &RealForm, lambda: &[i64], nu: &[i64]) -> Result<Option<i64>> {
    real_stratum_dim(rf, lambda)?;
    check_rank(rf.datum(), nu)?;
    let (dom, _) = rf.datum().dominant_representative(nu);
    if !rf.real_dominance_leq(&dom, lambda) {
        return Ok(None);
    }
    Ok(Some(pair(rf.datum().two_rho_check(), &add(lambda, nu)) / 2))
}

/// The character of `V_λ` pushed forward along `Σ`.
pub fn specialization_character(rf: &RealForm, lambda: &[i64]) -> Result<GradedCharacter> {
    let ch = irreducible_character(rf.datum(), lambda)?;
    Ok(push_forward(rf, &ch))
}

fn push_forward(rf: &RealForm, ch: &Character) -> GradedCharacter {
    let mut out = GradedWeightMap::new();
    for (mu, m) in ch.weights() {
        let key = rf.big_sigma(&mu);
        *out.entry(key).or_insert(0) += m;
    }
    GradedCharacter::new(out)
}

/// Constituents `(highest weight in Λ_T, degree) -> multiplicity`.
pub type Branching = Decomposition<(Vec<i64>, i64)>;

/// Decomposes the specialization character of `V_λ` into irreducible
/// characters of `Ĥ`, one degree at a time.
pub fn branch(rf: &RealForm, lambda: &[i64]) -> Result<Branching> {
    let h = associated_subgroup(rf)?;
    branch_with(rf, &h, lambda)
}

/// [`branch`] with a precomputed associated subgroup.
pub fn branch_with(rf: &RealForm, h: &AssociatedSubgroup, lambda: &[i64]) -> Result<Branching> {
    let spec = specialization_character(rf, lambda)?;
    branch_graded(h, &spec)
}

/// Decomposes a graded character supported on `σ(Λ_T)`.
pub fn branch_graded(h: &AssociatedSubgroup, g: &GradedCharacter) -> Result<Branching> {
    let wd = h.weight_datum();
    let mut coords = GradedWeightMap::new();
    for ((w, z), &m) in g.weights() {
        coords.insert((h.to_coordinates(w)?, *z), m);
    }
    Ok(match decompose_graded(&wd, &GradedCharacter::new(coords))? {
        Decomposition::Multiset(ms) => Decomposition::Multiset(
            ms.into_iter()
                .map(|((c, z), k)| ((h.from_coordinates(&c), z), k))
                .collect(),
        ),
        Decomposition::NegativeWitness {
            weight: (c, z),
            value,
        } => Decomposition::NegativeWitness {
            weight: (h.from_coordinates(&c), z),
            value,
        },
    })
}

/// The `Ĥ`-irreducible with highest weight `ν ∈ σ(Λ_T)` has multiplicity one
/// at every Weyl translate of `ν`.
pub fn extreme_weight_check(rf: &RealForm, nu: &[i64]) -> Result<bool> {
    check_rank(rf.datum(), nu)?;
    let h = associated_subgroup(rf)?;
    let c = h.to_coordinates(nu)?;
    let wd = h.weight_datum();
    let ch = irreducible_character(&wd, &c)?;
    let weights = ch.weights();
    let orbit = crate::characters::weyl_orbit(&wd, &c);
    Ok(orbit.iter().all(|w| weights.get(w) == Some(&1)))
}

/// Multiset of `(weight, degree)` pairs, summed over both inputs.
pub fn add_multisets(
    a: &BTreeMap<(Vec<i64>, i64), u64>,
    b: &BTreeMap<(Vec<i64>, i64), u64>,
) -> BTreeMap<(Vec<i64>, i64), u64> {
    let mut out = a.clone();
    for (k, v) in b {
        *out.entry(k.clone()).or_insert(0) += v;
    }
    out
}

/// Whether the `Z`-grading of every specialization in `lambdas` is trivial.
pub fn grading_is_trivial(rf: &RealForm, lambdas: &[Vec<i64>]) -> Result<bool> {
    for l in lambdas {
        let g = specialization_character(rf, l)?;
        if g.degrees().iter().any(|&z| z != 0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether all weights of `g` lie in one coset `σ(λ) + (Λ_S ∩ Q)`.
pub fn single_coset(rf: &RealForm, lambda: &[i64], g: &GradedCharacter) -> Result<bool> {
    let d = rf.datum();
    let q = Sublattice::from_generators(d.rank(), d.simple_coroots())?;
    let k = rf.real_lattice().intersect(&q)?;
    let base = rf.sigma(lambda);
    let seen: HashSet<&Vec<i64>> = g.weights().keys().map(|(w, _)| w).collect();
    Ok(seen.into_iter().all(|w| {
        let diff: Vec<i64> = w.iter().zip(&base).map(|(a, b)| a - b).collect();
        k.contains(&diff)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{tensor_decompose, weyl_dimension};
    use crate::realform::catalog;
    use crate::rootdatum::CartanType;
    use num_bigint::BigUint;

    fn adj(s: &str) -> BasedRootDatum {
        BasedRootDatum::adjoint(&s.parse::<CartanType>().unwrap()).unwrap()
    }

    fn form(label: &str) -> RealForm {
        catalog().lookup(label).unwrap()
    }

    #[test]
    fn stratum_dims() {
        let a1 = adj("A1");
        assert_eq!(stratum_dim(&a1, &[0]).unwrap(), 0);
        // adjoint A1: the coroot is twice the fundamental coweight
        assert_eq!(stratum_dim(&a1, &[2]).unwrap(), 2);
        assert!(matches!(stratum_dim(&a1, &[-1]), Err(Error::NotDominant(_))));
        let p = form("split(A1)").product(&form("split(B2)"));
        let (l1, l2) = (vec![3], vec![1, 2]);
        let mut l = l1.clone();
        l.extend(&l2);
        assert_eq!(
            real_stratum_dim(&p, &l).unwrap(),
            stratum_dim(&a1, &l1).unwrap() + stratum_dim(&adj("B2"), &l2).unwrap()
        );
    }

    #[test]
    fn a1_chain() {
        let p = orbit_poset(&adj("A1"), 6).unwrap();
        assert_eq!(p.len(), 7);
        // two chains by parity: 0 < 2 < 4 < 6 and 1 < 3 < 5
        assert_eq!(p.covers.len(), 5);
        for &(i, j) in &p.covers {
            assert_eq!(p.elements[j][0] - p.elements[i][0], 2);
        }
    }

    #[test]
    fn poset_matches_pairwise_reduction() {
        let d = adj("B2");
        let p = orbit_poset(&d, 5).unwrap();
        for &(i, j) in &p.covers {
            assert!(p.dims[i] < p.dims[j]);
            assert!(d.dominance_leq(&p.elements[i], &p.elements[j]));
        }
        let compact = real_orbit_poset(&form("compact(A2)"), 5).unwrap();
        assert_eq!(compact.len(), 1);
        assert!(compact.to_dot().contains("n0 [label=\"[0, 0]\", dim=0]"));
    }

    #[test]
    fn components_of_pgl2() {
        let c = components(&form("split(A1)")).unwrap();
        assert_eq!(c.pi0.to_string(), "Z/2");
        assert_eq!(c.gr0_index, Some(BigInt::from(2)));
        assert!(components(&form("compact(E7)")).unwrap().pi0.is_trivial());
    }

    #[test]
    fn gr0_in_plus_for_catalog() {
        for e in catalog().entries() {
            let c = components(&e.form).unwrap();
            assert!(c.gr0_in_plus, "{}", e.label());
        }
    }

    #[test]
    fn mv_dims() {
        let a2 = adj("A2");
        let lambda = vec![1, 1];
        assert_eq!(mv_dim(&a2, &lambda, &lambda).unwrap(), Some(stratum_dim(&a2, &lambda).unwrap()));
        let w0l: Vec<i64> = a2.longest_weyl_element().to_i64_rows().unwrap().iter().map(|r| pair(r, &lambda)).collect();
        assert_eq!(mv_dim(&a2, &lambda, &w0l).unwrap(), Some(0));
        assert_eq!(mv_dim(&a2, &lambda, &[0, 0]).unwrap(), Some(2));
        assert_eq!(mv_dim(&a2, &lambda, &[2, 2]).unwrap(), None);
        assert_eq!(mv_dim(&a2, &lambda, &[1, 0]).unwrap(), None);
    }

    #[test]
    fn specialization_examples() {
        let c = form("compact(A2)");
        let g = specialization_character(&c, &[1, 1]).unwrap();
        assert!(g.weights().keys().all(|(w, _)| w.iter().all(|&x| x == 0)));
        assert_eq!(g.total_mass(), BigUint::from(8u32));
        let s = form("split(B2)");
        let g = specialization_character(&s, &[1, 1]).unwrap();
        assert_eq!(g.degrees(), vec![0]);
        let f = form("su(1,2)");
        let g = specialization_character(&f, &[1, 0]).unwrap();
        let expected: GradedWeightMap =
            [((vec![1, 1], 0), 1), ((vec![0, 0], 0), 1), ((vec![-1, -1], 0), 1)]
                .into_iter()
                .collect();
        assert_eq!(g.weights(), &expected);
    }

    #[test]
    fn branch_examples() {
        let f = form("su(1,2)");
        let b = branch(&f, &[1, 0]).unwrap();
        let expected: BTreeMap<(Vec<i64>, i64), u64> =
            [((vec![1, 1], 0), 1), ((vec![0, 0], 0), 1)].into_iter().collect();
        assert_eq!(b.multiset(), Some(&expected));

        let c = form("compact(A1)");
        let b = branch(&c, &[1]).unwrap();
        let expected: BTreeMap<(Vec<i64>, i64), u64> =
            [((vec![0], 1), 1), ((vec![0], -1), 1)].into_iter().collect();
        assert_eq!(b.multiset(), Some(&expected));

        let s = form("split(G2)");
        let b = branch(&s, &[1, 0]).unwrap();
        let expected: BTreeMap<(Vec<i64>, i64), u64> =
            [((vec![2, 0], 0), 1)].into_iter().collect();
        assert_eq!(b.multiset(), Some(&expected));
    }

    #[test]
    fn mass_grading_and_coset_over_catalog() {
        for e in catalog().entries() {
            let f = &e.form;
            if !f.datum().is_semisimple() || f.datum().rank() > 4 {
                continue;
            }
            let lambdas = f.datum().dominant_coweights(2).unwrap();
            for l in &lambdas {
                let g = specialization_character(f, l).unwrap();
                assert_eq!(g.total_mass(), weyl_dimension(f.datum(), l).unwrap());
                assert!(single_coset(f, l, &g).unwrap(), "{} {l:?}", e.label());
            }
            assert_eq!(
                grading_is_trivial(f, &lambdas).unwrap(),
                f.is_quasi_split(),
                "{}",
                e.label()
            );
        }
    }

    #[test]
    fn extreme_weights() {
        assert!(extreme_weight_check(&form("split(B2)"), &[0, 0]).unwrap());
        // twice the short fundamental coweight of adjoint B2
        assert!(extreme_weight_check(&form("split(B2)"), &[2, 0]).unwrap());
        let f = form("su(1,2)");
        assert!(extreme_weight_check(&f, &[2, 2]).unwrap());
        assert!(matches!(
            extreme_weight_check(&form("split(B2)"), &[1, 0]),
            Err(Error::NotInImageLattice(_))
        ));
    }

    #[test]
    fn tensor_compatibility() {
        for (label, l, m) in [("su(1,2)", vec![1, 0], vec![0, 1]), ("sp(1,2)", vec![1, 0, 0], vec![0, 1, 0]), ("so(2,3)", vec![1, 0], vec![0, 1])] {
            let f = form(label);
            let h = associated_subgroup(&f).unwrap();
            let wd = h.weight_datum();
            let mut lhs = BTreeMap::new();
            for (nu, k) in tensor_decompose(f.datum(), &l, &m).unwrap() {
                for (key, v) in branch_with(&f, &h, &nu).unwrap().multiset().unwrap() {
                    *lhs.entry(key.clone()).or_insert(0) += k * v;
                }
            }
            let bl = branch_with(&f, &h, &l).unwrap().multiset().unwrap().clone();
            let bm = branch_with(&f, &h, &m).unwrap().multiset().unwrap().clone();
            let mut rhs = BTreeMap::new();
            for ((a, z), ka) in &bl {
                for ((b, w), kb) in &bm {
                    let ca = h.to_coordinates(a).unwrap();
                    let cb = h.to_coordinates(b).unwrap();
                    for (c, kc) in tensor_decompose(&wd, &ca, &cb).unwrap() {
                        *rhs.entry((h.from_coordinates(&c), z + w)).or_insert(0) += ka * kb * kc;
                    }
                }
            }
            assert_eq!(lhs, rhs, "{label}");
        }
    }

    #[test]
    fn mv_emptiness_is_weyl_invariant() {
        let d = adj("B2");
        let lambda = vec![2, 1];
        for nu in [vec![1, 0], vec![0, 1], vec![2, -1], vec![-2, 1], vec![1, 1]] {
            let orbit = crate::characters::weyl_orbit(&d, &nu);
            let empties: HashSet<bool> = orbit
                .iter()
                .map(|w| mv_dim(&d, &lambda, w).unwrap().is_none())
                .collect();
            assert_eq!(empties.len(), 1);
        }
    }
}
