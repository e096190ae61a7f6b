//! Weyl group actions, dominant representatives and longest elements.

use std::collections::HashMap;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::lattice::IntMatrix;

use super::{pair, BasedRootDatum};

/// Semisimple rank up to which Weyl group orders are reported.
pub const WEYL_RANK_BOUND: usize = 8;

/// A Weyl group element as a word in simple reflections, applied left to
/// right: `[i, j]` means `s_j(s_i(v))`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn identity() -> Self {
        WeylWord(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply_coweight(&self, datum: &BasedRootDatum, v: &[i64]) -> Vec<i64> {
        let mut w = v.to_vec();
        for &i in &self.0 {
            datum.reflect_coweight_in_place(i, &mut w);
        }
        w
    }

    pub fn apply_weight(&self, datum: &BasedRootDatum, v: &[i64]) -> Vec<i64> {
        let mut w = v.to_vec();
        for &i in &self.0 {
            datum.reflect_weight_in_place(i, &mut w);
        }
        w
    }

    /// Matrix acting on column vectors of `X^vee`.
    pub fn coweight_matrix(&self, datum: &BasedRootDatum) -> IntMatrix {
        let n = datum.rank();
        let cols: Vec<Vec<i64>> = (0..n)
            .map(|j| {
                let mut e = vec![0; n];
                e[j] = 1;
                self.apply_coweight(datum, &e)
            })
            .collect();
        let rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| cols[j][i]).collect()).collect();
        IntMatrix::from_i64_rows(n, &rows).expect("square matrix")
    }
}

impl BasedRootDatum {
    /// `s_i(v) = v - <alpha_i, v> alpha_i^vee` on a coweight.
    pub fn reflect_coweight(&self, i: usize, v: &[i64]) -> Vec<i64> {
        let mut w = v.to_vec();
        self.reflect_coweight_in_place(i, &mut w);
        w
    }

    /// `s_i(v) = v - <v, alpha_i^vee> alpha_i` on a weight.
    pub fn reflect_weight(&self, i: usize, v: &[i64]) -> Vec<i64> {
        let mut w = v.to_vec();
        self.reflect_weight_in_place(i, &mut w);
        w
    }

    pub(crate) fn reflect_coweight_in_place(&self, i: usize, v: &mut [i64]) {
        let k = pair(&self.simple_roots()[i], v);
        if k != 0 {
            for (x, c) in v.iter_mut().zip(&self.simple_coroots()[i]) {
                *x -= k * c;
            }
        }
    }

    pub(crate) fn reflect_weight_in_place(&self, i: usize, v: &mut [i64]) {
        let k = pair(v, &self.simple_coroots()[i]);
        if k != 0 {
            for (x, c) in v.iter_mut().zip(&self.simple_roots()[i]) {
                *x -= k * c;
            }
        }
    }

    /// The dominant coweight in the orbit of `lambda`, with `w` such that
    /// `w(lambda)` is that coweight.
    pub fn dominant_representative(&self, lambda: &[i64]) -> (Vec<i64>, WeylWord) {
        let mut v = lambda.to_vec();
        let mut word = Vec::new();
        while let Some(i) = (0..self.semisimple_rank()).find(|&i| pair(&self.simple_roots()[i], &v) < 0)
        {
            self.reflect_coweight_in_place(i, &mut v);
            word.push(i);
        }
        (v, WeylWord(word))
    }

    /// Dominant representative on the weight side.
    pub fn dominant_weight_representative(&self, mu: &[i64]) -> (Vec<i64>, WeylWord) {
        let mut v = mu.to_vec();
        let mut word = Vec::new();
        while let Some(i) =
            (0..self.semisimple_rank()).find(|&i| pair(&v, &self.simple_coroots()[i]) < 0)
        {
            self.reflect_weight_in_place(i, &mut v);
            word.push(i);
        }
        (v, WeylWord(word))
    }

    /// Reduced word of the longest element.
    pub fn longest_word(&self) -> WeylWord {
        let neg: Vec<i64> = self.two_rho().iter().map(|x| -x).collect();
        self.dominant_representative(&neg).1
    }

    /// Matrix of `w_0` acting on `X^vee`.
    pub fn longest_weyl_element(&self) -> IntMatrix {
        self.longest_word().coweight_matrix(self)
    }

    /// Order of the Weyl group, from the classified type.
    pub fn weyl_group_order(&self) -> Result<BigUint> {
        if self.semisimple_rank() > WEYL_RANK_BOUND {
            return Err(Error::BoundExceeded(format!(
                "Weyl group order requested at semisimple rank {} (bound {WEYL_RANK_BOUND})",
                self.semisimple_rank()
            )));
        }
        Ok(self.cartan_type().weyl_order())
    }

    /// Explicit enumeration of the Weyl group as reduced words, via the orbit
    /// of the regular coweight `2 rho`. Fails once more than `limit` elements
    /// have been found.
    pub fn weyl_group_elements(&self, limit: usize) -> Result<Vec<WeylWord>> {
        let start = self.two_rho().to_vec();
        let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
        index.insert(start.clone(), 0);
        let mut elems = vec![(start, WeylWord::identity())];
        let mut k = 0;
        while k < elems.len() {
            let (v, w) = elems[k].clone();
            for i in 0..self.semisimple_rank() {
                let u = self.reflect_coweight(i, &v);
                if index.contains_key(&u) {
                    continue;
                }
                let mut word = w.0.clone();
                word.push(i);
                index.insert(u.clone(), elems.len());
                elems.push((u, WeylWord(word)));
                if elems.len() > limit {
                    return Err(Error::BoundExceeded(format!(
                        "Weyl group has more than {limit} elements"
                    )));
                }
            }
            k += 1;
        }
        Ok(elems.into_iter().map(|(_, w)| w).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdatum::CartanType;
    use proptest::prelude::*;

    fn adj(s: &str) -> BasedRootDatum {
        BasedRootDatum::adjoint(&s.parse::<CartanType>().unwrap()).unwrap()
    }

    #[test]
    fn enumeration_matches_product_formula() {
        for s in ["A1", "A2", "B2", "G2", "A3", "B3", "C3", "D4", "A1+A2", "F4"] {
            let d = adj(s);
            let n = d.weyl_group_elements(100_000).unwrap().len();
            assert_eq!(BigUint::from(n), d.weyl_group_order().unwrap(), "{s}");
        }
    }

    #[test]
    fn weyl_order_bound() {
        assert!(adj("A9").weyl_group_order().is_err());
        assert_eq!(adj("E8").weyl_group_order().unwrap(), BigUint::from(696_729_600u64));
        assert!(adj("E6").weyl_group_elements(1000).is_err());
    }

    #[test]
    fn longest_element_examples() {
        let a1 = adj("A1");
        assert_eq!(a1.longest_weyl_element().to_i64_rows().unwrap(), vec![vec![-1]]);
        let t = BasedRootDatum::torus(2);
        assert!(t.longest_weyl_element().is_identity());
        // GL2-like: -1 on the coroot line, identity on the centre
        let gl2 = BasedRootDatum::new(2, vec![vec![1, -1]], vec![vec![1, -1]]).unwrap();
        assert_eq!(
            gl2.longest_weyl_element().to_i64_rows().unwrap(),
            vec![vec![0, 1], vec![1, 0]]
        );
    }

    #[test]
    fn a2_longest_is_minus_flip_by_search() {
        let a2 = adj("A2");
        let elems = a2.weyl_group_elements(10).unwrap();
        assert_eq!(elems.len(), 6);
        let longest = elems.iter().max_by_key(|w| w.len()).unwrap();
        assert_eq!(longest.coweight_matrix(&a2), a2.longest_weyl_element());
        // in fundamental coweights: -(flip)
        assert_eq!(
            a2.longest_weyl_element().to_i64_rows().unwrap(),
            vec![vec![0, -1], vec![-1, 0]]
        );
    }

    #[test]
    fn longest_element_properties() {
        for s in ["A4", "B3", "C4", "D5", "E6", "E7", "F4", "G2", "A2+B2"] {
            let d = adj(s);
            let w0 = d.longest_weyl_element();
            assert!((&w0 * &w0).is_identity(), "{s}");
            let rows = w0.to_i64_rows().unwrap();
            for c in d.simple_coroots() {
                let img: Vec<i64> = rows.iter().map(|r| pair(r, c)).collect();
                let neg: Vec<i64> = img.iter().map(|x| -x).collect();
                assert!(d.simple_coroots().contains(&neg), "{s}");
            }
        }
    }

    #[test]
    fn dominant_representative_examples() {
        let a1 = adj("A1");
        let (v, w) = a1.dominant_representative(&[-2]);
        assert_eq!(v, vec![2]);
        assert_eq!(w, WeylWord(vec![0]));
        let (v, w) = a1.dominant_representative(&[3]);
        assert_eq!((v, w), (vec![3], WeylWord::identity()));
    }

    proptest! {
        #[test]
        fn b2_dominant_matches_brute_force(a in -6i64..=6, b in -6i64..=6) {
            let d = adj("B2");
            let lambda = vec![a, b];
            let (dom, w) = d.dominant_representative(&lambda);
            prop_assert_eq!(w.apply_coweight(&d, &lambda), dom.clone());
            let images: Vec<Vec<i64>> = d
                .weyl_group_elements(8)
                .unwrap()
                .iter()
                .map(|w| w.apply_coweight(&d, &lambda))
                .collect();
            let dominant: Vec<&Vec<i64>> = images.iter().filter(|v| d.is_dominant(v)).collect();
            prop_assert!(dominant.iter().all(|v| **v == dom));
            prop_assert!(!dominant.is_empty());
        }
    }
}
