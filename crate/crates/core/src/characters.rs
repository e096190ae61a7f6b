//! Weight multiplicities and characters of representations of the dual group.
//!
//! A based root datum `Ψ` for `G` is used throughout; representations are
//! those of the dual group, so weights are coweights of `Ψ` (vectors in
//! `X^vee`), the roots of the dual group are the coroots of `Ψ`, and its
//! coroots are the roots of `Ψ`.
//!
//! The invariant form is `B(x, y) = Σ <γ, x><γ, y>` over the positive roots
//! `γ` of `Ψ`. It is integral, Weyl invariant and positive definite on the
//! span of the coroots; any positive multiple gives the same multiplicities.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::rootdatum::{add, pair, scale, sub, BasedRootDatum};

/// Finitely supported map weight -> multiplicity.
pub type WeightMap = BTreeMap<Vec<i64>, u64>;

/// Finitely supported map (weight, degree) -> multiplicity.
pub type GradedWeightMap = BTreeMap<(Vec<i64>, i64), u64>;

/// Largest semisimple rank accepted by the Kostant oracle.
pub const KOSTANT_RANK_BOUND: usize = 4;

/// Largest height of `λ - ν` (in simple coroots) accepted by the Kostant oracle.
pub const KOSTANT_HEIGHT_BOUND: i64 = 60;

/// A Weyl-invariant character, stored as one multiplicity per dominant weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    datum: BasedRootDatum,
    dominant: WeightMap,
}

impl Character {
    pub fn zero(datum: &BasedRootDatum) -> Self {
        Character {
            datum: datum.clone(),
            dominant: WeightMap::new(),
        }
    }

    /// From multiplicities on dominant weights.
    pub fn from_dominant(datum: &BasedRootDatum, dominant: WeightMap) -> Result<Self> {
        for w in dominant.keys() {
            check_rank(datum, w)?;
            if !datum.is_dominant(w) {
                return Err(Error::NotDominant(w.clone()));
            }
        }
        let dominant = dominant.into_iter().filter(|(_, m)| *m > 0).collect();
        Ok(Character {
            datum: datum.clone(),
            dominant,
        })
    }

    /// From a full weight map, checking that it is constant on Weyl orbits.
    pub fn from_weights(datum: &BasedRootDatum, weights: &WeightMap) -> Result<Self> {
        let mut dominant = WeightMap::new();
        for (w, &m) in weights {
            check_rank(datum, w)?;
            if m == 0 {
                continue;
            }
            for i in 0..datum.semisimple_rank() {
                let r = datum.reflect_coweight(i, w);
                if weights.get(&r).copied().unwrap_or(0) != m {
                    return Err(Error::NotWeylInvariant(w.clone()));
                }
            }
            if datum.is_dominant(w) {
                dominant.insert(w.clone(), m);
            }
        }
        Ok(Character {
            datum: datum.clone(),
            dominant,
        })
    }

    pub fn datum(&self) -> &BasedRootDatum {
        &self.datum
    }

    pub fn dominant_weights(&self) -> &WeightMap {
        &self.dominant
    }

    pub fn multiplicity(&self, mu: &[i64]) -> u64 {
        let (d, _) = self.datum.dominant_representative(mu);
        self.dominant.get(&d).copied().unwrap_or(0)
    }

    /// Full weight map, expanding each dominant weight to its orbit.
    pub fn weights(&self) -> WeightMap {
        let mut out = WeightMap::new();
        for (w, &m) in &self.dominant {
            for v in weyl_orbit(&self.datum, w) {
                out.insert(v, m);
            }
        }
        out
    }

    /// Sum of all multiplicities.
    pub fn dimension(&self) -> BigUint {
        self.dominant
            .iter()
            .map(|(w, &m)| BigUint::from(m) * BigUint::from(weyl_orbit(&self.datum, w).len()))
            .sum()
    }

    pub fn add(&self, other: &Character) -> Character {
        let mut dominant = self.dominant.clone();
        for (w, &m) in &other.dominant {
            *dominant.entry(w.clone()).or_insert(0) += m;
        }
        Character {
            datum: self.datum.clone(),
            dominant,
        }
    }

    pub fn scaled(&self, k: u64) -> Character {
        Character {
            datum: self.datum.clone(),
            dominant: self
                .dominant
                .iter()
                .filter(|_| k > 0)
                .map(|(w, &m)| (w.clone(), m * k))
                .collect(),
        }
    }
}

/// A character graded by an extra integer degree; no Weyl invariance is assumed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedCharacter {
    weights: GradedWeightMap,
}

impl GradedCharacter {
    pub fn new(weights: GradedWeightMap) -> Self {
        GradedCharacter {
            weights: weights.into_iter().filter(|(_, m)| *m > 0).collect(),
        }
    }

    pub fn weights(&self) -> &GradedWeightMap {
        &self.weights
    }

    pub fn add_weight(&mut self, weight: Vec<i64>, degree: i64, mult: u64) {
        if mult > 0 {
            *self.weights.entry((weight, degree)).or_insert(0) += mult;
        }
    }

    pub fn total_mass(&self) -> BigUint {
        self.weights.values().map(|&m| BigUint::from(m)).sum()
    }

    /// Degrees carrying nonzero multiplicity, ascending.
    pub fn degrees(&self) -> Vec<i64> {
        let set: std::collections::BTreeSet<i64> = self.weights.keys().map(|(_, z)| *z).collect();
        set.into_iter().collect()
    }

    /// The ungraded weight map in one degree.
    pub fn slice(&self, degree: i64) -> WeightMap {
        self.weights
            .iter()
            .filter(|((_, z), _)| *z == degree)
            .map(|((w, _), &m)| (w.clone(), m))
            .collect()
    }
}

fn check_rank(datum: &BasedRootDatum, w: &[i64]) -> Result<()> {
    if w.len() != datum.rank() {
        return Err(Error::RankMismatch {
            expected: datum.rank(),
            found: w.len(),
        });
    }
    Ok(())
}

/// The Weyl orbit of a coweight.
pub fn weyl_orbit(datum: &BasedRootDatum, w: &[i64]) -> Vec<Vec<i64>> {
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    seen.insert(w.to_vec());
    let mut out = vec![w.to_vec()];
    let mut k = 0;
    while k < out.len() {
        for i in 0..datum.semisimple_rank() {
            let r = datum.reflect_coweight(i, &out[k]);
            if seen.insert(r.clone()) {
                out.push(r);
            }
        }
        k += 1;
    }
    out
}

/// Dominant weights `μ ≤ λ`, found by subtracting positive coroots while
/// staying dominant.
pub fn dominant_weights_below(datum: &BasedRootDatum, lambda: &[i64]) -> Vec<Vec<i64>> {
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    seen.insert(lambda.to_vec());
    let mut queue = VecDeque::from([lambda.to_vec()]);
    let mut out = Vec::new();
    while let Some(mu) = queue.pop_front() {
        for b in datum.positive_coroots() {
            let nu = sub(&mu, b);
            if datum.is_dominant(&nu) && seen.insert(nu.clone()) {
                queue.push_back(nu);
            }
        }
        out.push(mu);
    }
    out
}

/// Character of the irreducible representation with highest weight `λ`
/// (Freudenthal's recursion over dominant weights).
pub fn irreducible_character(datum: &BasedRootDatum, lambda: &[i64]) -> Result<Character> {
    freudenthal(datum, lambda, 1)
}

fn freudenthal(datum: &BasedRootDatum, lambda: &[i64], form_scale: i128) -> Result<Character> {
    let form = |x: &[i64], y: &[i64]| form_scale * datum.invariant_form(x, y);
    check_rank(datum, lambda)?;
    if !datum.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_vec()));
    }
    let height = |v: &[i64]| pair(datum.two_rho_check(), v);
    let mut doms = dominant_weights_below(datum, lambda);
    doms.sort_by(|a, b| height(b).cmp(&height(a)).then_with(|| b.cmp(a)));
    let member: HashSet<Vec<i64>> = doms.iter().cloned().collect();

    let two_rho = datum.two_rho();
    let bll = form(lambda, lambda);
    let mut mult: HashMap<Vec<i64>, u64> = HashMap::new();
    mult.insert(lambda.to_vec(), 1);
    for mu in doms.iter().skip(1) {
        let lhs = bll - form(mu, mu) + form(&sub(lambda, mu), two_rho);
        let mut rhs: i128 = 0;
        for beta in datum.positive_coroots() {
            let mut v = add(mu, beta);
            loop {
                let (d, _) = datum.dominant_representative(&v);
                if !member.contains(&d) {
                    break;
                }
                let m = mult[&d];
                rhs += form(&v, beta) * m as i128;
                v = add(&v, beta);
            }
        }
        rhs *= 2;
        if lhs <= 0 || rhs % lhs != 0 {
            return Err(Error::InternalInconsistency(format!(
                "Freudenthal step at {mu:?} is not integral ({rhs}/{lhs})"
            )));
        }
        mult.insert(mu.clone(), (rhs / lhs) as u64);
    }
    Character::from_dominant(datum, mult.into_iter().collect())
}

/// Weyl dimension formula `Π <γ, λ+ρ> / <γ, ρ>` over positive roots `γ` of `Ψ`.
pub fn weyl_dimension(datum: &BasedRootDatum, lambda: &[i64]) -> Result<BigUint> {
    check_rank(datum, lambda)?;
    if !datum.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_vec()));
    }
    let shifted = add(&scale(2, lambda), datum.two_rho());
    let mut num = BigUint::from(1u8);
    let mut den = BigUint::from(1u8);
    for g in datum.positive_roots() {
        num *= BigUint::from(pair(g, &shifted) as u64);
        den *= BigUint::from(pair(g, datum.two_rho()) as u64);
    }
    Ok(num / den)
}

/// Multiplicity of `ν` in `V_λ` by Kostant's alternating sum over the Weyl
/// group, with the partition function counted by exhaustive recursion.
pub fn kostant_multiplicity(datum: &BasedRootDatum, lambda: &[i64], nu: &[i64]) -> Result<u64> {
    check_rank(datum, lambda)?;
    check_rank(datum, nu)?;
    if !datum.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_vec()));
    }
    if datum.semisimple_rank() > KOSTANT_RANK_BOUND {
        return Err(Error::BoundExceeded(format!(
            "Kostant oracle limited to semisimple rank {KOSTANT_RANK_BOUND}"
        )));
    }
    let Some(diff) = datum.coroot_coordinates(&sub(lambda, nu)) else {
        return Ok(0);
    };
    let h: i64 = diff.iter().sum();
    if h > KOSTANT_HEIGHT_BOUND {
        return Err(Error::BoundExceeded(format!(
            "Kostant oracle limited to height {KOSTANT_HEIGHT_BOUND}"
        )));
    }
    let two_rho = datum.two_rho();
    let top = add(&scale(2, lambda), two_rho);
    let bottom = add(&scale(2, nu), two_rho);
    let parts: Vec<Vec<i64>> = datum.root_system().coroot_coefficients().to_vec();
    let mut memo = HashMap::new();
    let mut total: i128 = 0;
    for w in datum.weyl_group_elements(usize::MAX)? {
        let g2 = sub(&w.apply_coweight(datum, &top), &bottom);
        let Some(c2) = datum.coroot_coordinates(&g2) else {
            continue;
        };
        if c2.iter().any(|x| x % 2 != 0 || *x < 0) {
            continue;
        }
        let c: Vec<i64> = c2.iter().map(|x| x / 2).collect();
        let p = partitions(&c, &parts, 0, &mut memo) as i128;
        total += if w.len() % 2 == 0 { p } else { -p };
    }
    u64::try_from(total).map_err(|_| {
        Error::InternalInconsistency(format!("Kostant sum is negative at {nu:?}"))
    })
}

/// Number of ways to write `target` as an `N`-combination of `parts[k..]`.
fn partitions(
    target: &[i64],
    parts: &[Vec<i64>],
    k: usize,
    memo: &mut HashMap<(Vec<i64>, usize), u64>,
) -> u64 {
    if target.iter().all(|&x| x == 0) {
        return 1;
    }
    if k == parts.len() || target.iter().any(|&x| x < 0) {
        return 0;
    }
    let key = (target.to_vec(), k);
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let skip = partitions(target, parts, k + 1, memo);
    let take = partitions(&sub(target, &parts[k]), parts, k, memo);
    memo.insert(key, skip + take);
    skip + take
}

/// Result of greedy decomposition into irreducible characters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition<K: Ord> {
    /// Multiplicity of each irreducible constituent.
    Multiset(BTreeMap<K, u64>),
    /// Subtraction forced a negative multiplicity at this dominant weight.
    NegativeWitness { weight: K, value: i64 },
}

impl<K: Ord> Decomposition<K> {
    pub fn multiset(&self) -> Option<&BTreeMap<K, u64>> {
        match self {
            Decomposition::Multiset(m) => Some(m),
            Decomposition::NegativeWitness { .. } => None,
        }
    }
}

/// Decomposes a Weyl-invariant character, subtracting irreducible characters
/// from the highest remaining weight down. Ties in `<2ρ^vee, ·>` are broken
/// lexicographically in fundamental coordinates.
pub fn decompose_character(c: &Character) -> Result<Decomposition<Vec<i64>>> {
    let datum = &c.datum;
    let mut rest: BTreeMap<Vec<i64>, i64> = c
        .dominant
        .iter()
        .map(|(w, &m)| (w.clone(), m as i64))
        .collect();
    let mut out = BTreeMap::new();
    loop {
        rest.retain(|_, m| *m != 0);
        let Some(top) = rest
            .keys()
            .max_by(|a, b| {
                pair(datum.two_rho_check(), a)
                    .cmp(&pair(datum.two_rho_check(), b))
                    .then_with(|| {
                        datum
                            .fundamental_coordinates(a)
                            .cmp(&datum.fundamental_coordinates(b))
                    })
            })
            .cloned()
        else {
            return Ok(Decomposition::Multiset(out));
        };
        let m = rest[&top];
        if m < 0 {
            return Ok(Decomposition::NegativeWitness {
                weight: top,
                value: m,
            });
        }
        let irr = irreducible_character(datum, &top)?;
        for (w, &k) in irr.dominant_weights() {
            *rest.entry(w.clone()).or_insert(0) -= m * k as i64;
        }
        out.insert(top, m as u64);
    }
}

/// Decomposes a graded character degree by degree; each slice must be Weyl invariant.
pub fn decompose_graded(
    datum: &BasedRootDatum,
    g: &GradedCharacter,
) -> Result<Decomposition<(Vec<i64>, i64)>> {
    let mut out = BTreeMap::new();
    for z in g.degrees() {
        let slice = Character::from_weights(datum, &g.slice(z))?;
        match decompose_character(&slice)? {
            Decomposition::Multiset(m) => {
                for (w, k) in m {
                    out.insert((w, z), k);
                }
            }
            Decomposition::NegativeWitness { weight, value } => {
                return Ok(Decomposition::NegativeWitness {
                    weight: (weight, z),
                    value,
                })
            }
        }
    }
    Ok(Decomposition::Multiset(out))
}

/// Character of a formal sum of irreducibles.
pub fn character_of_multiset(
    datum: &BasedRootDatum,
    multiset: &BTreeMap<Vec<i64>, u64>,
) -> Result<Character> {
    let mut c = Character::zero(datum);
    for (w, &m) in multiset {
        c = c.add(&irreducible_character(datum, w)?.scaled(m));
    }
    Ok(c)
}

/// Product of two characters, restricted to dominant weights of the result.
pub fn tensor_product(a: &Character, b: &Character) -> Character {
    let datum = &a.datum;
    let wa = a.weights();
    let wb = b.weights();
    let mut dominant = WeightMap::new();
    for (x, &m) in &wa {
        for (y, &k) in &wb {
            let s = add(x, y);
            if datum.is_dominant(&s) {
                *dominant.entry(s).or_insert(0) += m * k;
            }
        }
    }
    Character {
        datum: datum.clone(),
        dominant,
    }
}

/// `V_λ ⊗ V_μ` as a multiset of highest weights.
pub fn tensor_decompose(
    datum: &BasedRootDatum,
    lambda: &[i64],
    mu: &[i64],
) -> Result<BTreeMap<Vec<i64>, u64>> {
    let a = irreducible_character(datum, lambda)?;
    let b = irreducible_character(datum, mu)?;
    match decompose_character(&tensor_product(&a, &b))? {
        Decomposition::Multiset(m) => Ok(m),
        Decomposition::NegativeWitness { weight, .. } => Err(Error::InternalInconsistency(
            format!("tensor product decomposition went negative at {weight:?}"),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdatum::CartanType;

    fn adj(s: &str) -> BasedRootDatum {
        BasedRootDatum::adjoint(&s.parse::<CartanType>().unwrap()).unwrap()
    }

    fn wm(pairs: &[(&[i64], u64)]) -> WeightMap {
        pairs.iter().map(|(w, m)| (w.to_vec(), *m)).collect()
    }

    #[test]
    fn sl2_standard() {
        // PGL2 coweights: the fundamental coweight 1 is the standard of SL2
        let d = adj("A1");
        let c = irreducible_character(&d, &[1]).unwrap();
        assert_eq!(c.weights(), wm(&[(&[1], 1), (&[-1], 1)]));
        assert_eq!(weyl_dimension(&d, &[1]).unwrap(), BigUint::from(2u8));
    }

    #[test]
    fn trivial_character() {
        let d = adj("B3");
        let c = irreducible_character(&d, &[0, 0, 0]).unwrap();
        assert_eq!(c.weights(), wm(&[(&[0, 0, 0], 1)]));
        assert_eq!(weyl_dimension(&d, &[0, 0, 0]).unwrap(), BigUint::from(1u8));
    }

    #[test]
    fn a2_adjoint() {
        let d = adj("A2");
        let theta = d.positive_coroots().last().unwrap().clone();
        let c = irreducible_character(&d, &theta).unwrap();
        assert_eq!(c.multiplicity(&[0, 0]), 2);
        assert_eq!(c.dimension(), BigUint::from(8u8));
        assert_eq!(kostant_multiplicity(&d, &theta, &[0, 0]).unwrap(), 2);
        assert_eq!(kostant_multiplicity(&d, &theta, &theta).unwrap(), 1);
        assert_eq!(kostant_multiplicity(&d, &theta, &scale(2, &theta)).unwrap(), 0);
        assert_eq!(weyl_dimension(&d, &theta).unwrap(), BigUint::from(8u8));
    }

    #[test]
    fn non_dominant_is_rejected() {
        let d = adj("A2");
        assert_eq!(
            irreducible_character(&d, &[-1, 0]),
            Err(Error::NotDominant(vec![-1, 0]))
        );
        assert!(weyl_dimension(&d, &[0, -1]).is_err());
        assert!(kostant_multiplicity(&adj("A5"), &[0; 5], &[0; 5]).is_err());
    }

    #[test]
    fn tensor_examples() {
        let d = adj("A1");
        assert_eq!(
            tensor_decompose(&d, &[1], &[1]).unwrap(),
            [(vec![2], 1), (vec![0], 1)].into_iter().collect()
        );
        assert_eq!(
            tensor_decompose(&d, &[3], &[0]).unwrap(),
            [(vec![3], 1)].into_iter().collect()
        );
        // std ⊗ dual std of SL3 = adjoint + trivial
        let a2 = adj("A2");
        assert_eq!(
            tensor_decompose(&a2, &[1, 0], &[0, 1]).unwrap(),
            [(vec![1, 1], 1), (vec![0, 0], 1)].into_iter().collect()
        );
    }

    #[test]
    fn decomposition_examples() {
        let d = adj("A1");
        let c = irreducible_character(&d, &[4]).unwrap();
        assert_eq!(
            decompose_character(&c).unwrap(),
            Decomposition::Multiset([(vec![4], 1)].into_iter().collect())
        );
        let two_trivial = Character::from_dominant(&d, wm(&[(&[0], 2)])).unwrap();
        assert_eq!(
            decompose_character(&two_trivial).unwrap(),
            Decomposition::Multiset([(vec![0], 2)].into_iter().collect())
        );
        // SL2 weights in units of the coweight lattice of PGL2: {2, 0, -2}
        // plus an extra zero weight is V_2 + V_0
        let c = Character::from_weights(&d, &wm(&[(&[2], 1), (&[0], 2), (&[-2], 1)])).unwrap();
        assert_eq!(
            decompose_character(&c).unwrap(),
            Decomposition::Multiset([(vec![2], 1), (vec![0], 1)].into_iter().collect())
        );
        let bad = Character::from_dominant(&d, wm(&[(&[2], 1)])).unwrap();
        assert!(matches!(
            decompose_character(&bad).unwrap(),
            Decomposition::NegativeWitness { .. }
        ));
    }

    #[test]
    fn weyl_invariance_is_enforced() {
        let d = adj("A1");
        assert_eq!(
            Character::from_weights(&d, &wm(&[(&[1], 1)])),
            Err(Error::NotWeylInvariant(vec![1]))
        );
    }

    #[test]
    fn graded_decomposition() {
        let d = adj("A1");
        let mut g = GradedCharacter::default();
        g.add_weight(vec![1], 0, 1);
        g.add_weight(vec![-1], 0, 1);
        g.add_weight(vec![0], 3, 2);
        let dec = decompose_graded(&d, &g).unwrap();
        assert_eq!(
            dec,
            Decomposition::Multiset(
                [((vec![1], 0), 1), ((vec![0], 3), 2)].into_iter().collect()
            )
        );
        assert_eq!(g.total_mass(), BigUint::from(4u8));
    }

    #[test]
    fn form_scaling_does_not_change_multiplicities() {
        let d = adj("B2");
        for l in d.dominant_coweights(4).unwrap() {
            let a = freudenthal(&d, &l, 1).unwrap();
            let b = freudenthal(&d, &l, 7).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn extreme_weights_have_multiplicity_one() {
        for s in ["B3", "G2", "C3"] {
            let d = adj(s);
            for l in d.dominant_coweights(3).unwrap() {
                let c = irreducible_character(&d, &l).unwrap();
                for v in weyl_orbit(&d, &l) {
                    assert_eq!(c.weights()[&v], 1);
                }
            }
        }
    }
}
