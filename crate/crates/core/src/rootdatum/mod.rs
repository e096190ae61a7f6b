//! Based root data `(X, Δ, X^vee, Δ^vee)`.
//!
//! Both lattices are `Z^rank` with the standard pairing. Simple roots live in
//! the character lattice `X`, simple coroots in the cocharacter lattice
//! `X^vee`, and the `i`-th root is paired with the `i`-th coroot. All weights
//! handled by the rest of the crate (coweights of `G`, i.e. weights of the
//! dual group) are vectors in `X^vee`.

mod cartan;
mod roots;
mod subsystem;
mod weyl;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::lattice::{scaled_inverse, IntMatrix};

pub use cartan::{
    cartan_matrix, cartan_matrix_of, classify, classify_components, CartanType,
    ClassifiedComponent, Component, Family,
};
pub use roots::{generate_roots, positive_root_coefficients, RootSystem};
pub use subsystem::RootSubsystem;
pub use weyl::{WeylWord, WEYL_RANK_BOUND};

/// Standard pairing of two integer vectors.
pub fn pair(a: &[i64], b: &[i64]) -> i64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub(crate) fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn scale(k: i64, a: &[i64]) -> Vec<i64> {
    a.iter().map(|x| k * x).collect()
}

/// Rational linear map stored as an integer matrix over a common denominator.
#[derive(Clone, Debug)]
pub(crate) struct ScaledMap {
    num: Vec<Vec<i64>>,
    den: i64,
}

impl ScaledMap {
    /// `m` given as rows of rationals.
    /// `num / den` reduced to lowest terms with positive denominator.
    fn from_scaled(num: Vec<Vec<i128>>, den: i128) -> Self {
        use num_integer::Integer;
        let g = num.iter().flatten().fold(den, |g, x| g.gcd(x));
        let g = if den < 0 { -g } else { g };
        let small = |x: i128| i64::try_from(x / g).expect("coordinate map fits in i64");
        ScaledMap {
            num: num.iter().map(|r| r.iter().map(|&x| small(x)).collect()).collect(),
            den: small(den),
        }
    }

    /// Applies the map; `None` when the image is not integral.
    fn apply(&self, v: &[i64]) -> Option<Vec<i64>> {
        self.num
            .iter()
            .map(|row| {
                let s = pair(row, v);
                (s % self.den == 0).then(|| s / self.den)
            })
            .collect()
    }
}

struct Derived {
    cartan: Vec<Vec<i64>>,
    cartan_type: CartanType,
    system: Arc<RootSystem>,
    two_rho_check: Vec<i64>,
    two_rho: Vec<i64>,
    // x^vee -> coefficients in the simple coroots (valid on their span)
    coroot_coords: ScaledMap,
    // x -> coefficients in the simple roots (valid on their span)
    root_coords: ScaledMap,
}

/// A based root datum. Cheap to clone; derived data is shared.
#[derive(Clone)]
pub struct BasedRootDatum {
    rank: usize,
    simple_roots: Vec<Vec<i64>>,
    simple_coroots: Vec<Vec<i64>>,
    derived: Arc<Derived>,
}

impl PartialEq for BasedRootDatum {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank
            && self.simple_roots == other.simple_roots
            && self.simple_coroots == other.simple_coroots
    }
}

impl Eq for BasedRootDatum {}

impl fmt::Debug for BasedRootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BasedRootDatum")
            .field("rank", &self.rank)
            .field("type", &self.cartan_type().to_string())
            .field("simple_roots", &self.simple_roots)
            .field("simple_coroots", &self.simple_coroots)
            .finish()
    }
}

impl BasedRootDatum {
    /// Validates the datum: pairings `<alpha_i, alpha_i^vee> = 2` and a Cartan
    /// matrix of finite type.
    pub fn new(
        rank: usize,
        simple_roots: Vec<Vec<i64>>,
        simple_coroots: Vec<Vec<i64>>,
    ) -> Result<Self> {
        if simple_roots.len() != simple_coroots.len() {
            return Err(Error::InvalidDatum(format!(
                "{} simple roots but {} simple coroots",
                simple_roots.len(),
                simple_coroots.len()
            )));
        }
        for v in simple_roots.iter().chain(&simple_coroots) {
            if v.len() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    found: v.len(),
                });
            }
        }
        let n = simple_roots.len();
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| pair(&simple_roots[j], &simple_coroots[i]))
                    .collect()
            })
            .collect();
        for (i, row) in cartan.iter().enumerate() {
            if row[i] != 2 {
                return Err(Error::InvalidDatum(format!(
                    "<alpha_{i}, alpha_{i}^vee> = {} instead of 2",
                    row[i]
                )));
            }
        }
        let cartan_type = {
            let mut t = classify(&cartan)?;
            t.torus_rank = rank - n;
            t
        };
        let (root_coeffs, coroot_coeffs) = positive_root_coefficients(&cartan)?;
        let system = Arc::new(RootSystem::lift(
            &simple_roots,
            &simple_coroots,
            root_coeffs,
            coroot_coeffs,
        ));
        if system.len() != cartan_type.num_positive_roots() {
            return Err(Error::InternalInconsistency(format!(
                "{} positive roots generated for type {cartan_type}",
                system.len()
            )));
        }
        let two_rho_check = system.roots().iter().fold(vec![0; rank], |a, r| add(&a, r));
        let two_rho = system
            .coroots()
            .iter()
            .fold(vec![0; rank], |a, r| add(&a, r));

        // coordinates: c = (C^T)^{-1} A d  and  c = C^{-1} B x
        let to_big = |m: &[Vec<i64>], cols: usize| {
            IntMatrix::from_i64_rows(cols, m).expect("consistent widths")
        };
        let (coroot_coords, root_coords) = if n == 0 {
            let empty = ScaledMap {
                num: Vec::new(),
                den: 1,
            };
            (empty.clone(), empty)
        } else {
            let c = to_big(&cartan, n);
            let (adj, det) = scaled_inverse(&c).ok_or_else(|| {
                Error::InvalidDatum("Cartan matrix is singular".into())
            })?;
            let adj: Vec<Vec<i128>> = adj
                .iter()
                .map(|r| r.iter().map(|x| x.to_i128().expect("small adjugate")).collect())
                .collect();
            let det = det.to_i128().expect("small determinant");
            let compose = |left: &dyn Fn(usize, usize) -> i128, right: &[Vec<i64>]| {
                let num: Vec<Vec<i128>> = (0..n)
                    .map(|i| {
                        (0..rank)
                            .map(|k| (0..n).map(|j| left(i, j) * right[j][k] as i128).sum())
                            .collect()
                    })
                    .collect();
                ScaledMap::from_scaled(num, det)
            };
            (
                compose(&|i, j| adj[j][i], &simple_roots),
                compose(&|i, j| adj[i][j], &simple_coroots),
            )
        };

        Ok(BasedRootDatum {
            rank,
            simple_roots,
            simple_coroots,
            derived: Arc::new(Derived {
                cartan,
                cartan_type,
                system,
                two_rho_check,
                two_rho,
                coroot_coords,
                root_coords,
            }),
        })
    }

    /// Datum of the adjoint group: `X^vee` has the fundamental coweights as
    /// basis, roots are unit vectors and coroots are the rows of `C`.
    pub fn adjoint_from_cartan(c: &[Vec<i64>]) -> Result<Self> {
        let n = c.len();
        let roots = (0..n).map(|i| unit(n, i)).collect();
        Self::new(n, roots, c.to_vec())
    }

    /// Datum of the simply connected group: coroots are unit vectors and
    /// roots are the columns of `C`.
    pub fn simply_connected_from_cartan(c: &[Vec<i64>]) -> Result<Self> {
        let n = c.len();
        let roots = (0..n).map(|j| (0..n).map(|i| c[i][j]).collect()).collect();
        let coroots = (0..n).map(|i| unit(n, i)).collect();
        Self::new(n, roots, coroots)
    }

    /// Adjoint datum of a type, with a split central torus of its torus rank.
    pub fn adjoint(t: &CartanType) -> Result<Self> {
        let ss = Self::adjoint_from_cartan(&cartan_matrix_of(t)?)?;
        Ok(ss.direct_sum(&Self::torus(t.torus_rank)))
    }

    pub fn simply_connected(t: &CartanType) -> Result<Self> {
        let ss = Self::simply_connected_from_cartan(&cartan_matrix_of(t)?)?;
        Ok(ss.direct_sum(&Self::torus(t.torus_rank)))
    }

    /// Torus of the given rank (no roots).
    pub fn torus(rank: usize) -> Self {
        Self::new(rank, Vec::new(), Vec::new()).expect("a torus datum is valid")
    }

    /// Swaps the two lattices and the two simple sets.
    pub fn dual(&self) -> Self {
        Self::new(
            self.rank,
            self.simple_coroots.clone(),
            self.simple_roots.clone(),
        )
        .expect("dual of a valid datum is valid")
    }

    /// Same lattices, simple sets restricted to the indices in `subset`
    /// (zero-based, kept in the given order).
    pub fn levi_subdatum(&self, subset: &[usize]) -> Result<Self> {
        for &i in subset {
            if i >= self.semisimple_rank() {
                return Err(Error::InvalidDatum(format!("no simple root with index {i}")));
            }
        }
        Self::new(
            self.rank,
            subset.iter().map(|&i| self.simple_roots[i].clone()).collect(),
            subset.iter().map(|&i| self.simple_coroots[i].clone()).collect(),
        )
    }

    /// Datum of the direct product.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (r1, r2) = (self.rank, other.rank);
        let left = |v: &Vec<i64>| {
            let mut w = v.clone();
            w.resize(r1 + r2, 0);
            w
        };
        let right = |v: &Vec<i64>| {
            let mut w = vec![0; r1];
            w.extend(v);
            w
        };
        let roots = self
            .simple_roots
            .iter()
            .map(left)
            .chain(other.simple_roots.iter().map(right))
            .collect();
        let coroots = self
            .simple_coroots
            .iter()
            .map(left)
            .chain(other.simple_coroots.iter().map(right))
            .collect();
        Self::new(r1 + r2, roots, coroots).expect("direct sum of valid data is valid")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn semisimple_rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn is_semisimple(&self) -> bool {
        self.semisimple_rank() == self.rank
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[Vec<i64>] {
        &self.simple_coroots
    }

    /// `C[i][j] = <alpha_j, alpha_i^vee>`.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.derived.cartan
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.derived.cartan_type
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.derived.system
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        self.derived.system.roots()
    }

    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        self.derived.system.coroots()
    }

    /// `2 rho^vee`: sum of the positive roots, a covector on coweights.
    pub fn two_rho_check(&self) -> &[i64] {
        &self.derived.two_rho_check
    }

    /// `2 rho`: sum of the positive coroots, a coweight.
    pub fn two_rho(&self) -> &[i64] {
        &self.derived.two_rho
    }

    /// Coefficients of a coweight in the simple coroots, if it lies in the
    /// coroot lattice `Q`.
    pub fn coroot_coordinates(&self, v: &[i64]) -> Option<Vec<i64>> {
        let c = self.derived.coroot_coords.apply(v)?;
        let back = self
            .simple_coroots
            .iter()
            .zip(&c)
            .fold(vec![0; self.rank], |acc, (a, &k)| add(&acc, &scale(k, a)));
        (back == v).then_some(c)
    }

    /// Coefficients of a weight in the simple roots, if it lies in the root lattice.
    pub fn root_coordinates(&self, v: &[i64]) -> Option<Vec<i64>> {
        let c = self.derived.root_coords.apply(v)?;
        let back = self
            .simple_roots
            .iter()
            .zip(&c)
            .fold(vec![0; self.rank], |acc, (a, &k)| add(&acc, &scale(k, a)));
        (back == v).then_some(c)
    }

    /// `mu <= lambda` in the dominance order: `lambda - mu` is a nonnegative
    /// integral combination of simple coroots.
    pub fn dominance_leq(&self, mu: &[i64], lambda: &[i64]) -> bool {
        match self.coroot_coordinates(&sub(lambda, mu)) {
            Some(c) => c.iter().all(|&x| x >= 0),
            None => false,
        }
    }

    /// Weyl-invariant form `B(x, y) = Σ <γ, x><γ, y>` on coweights, summed
    /// over the positive roots `γ`.
    pub fn invariant_form(&self, x: &[i64], y: &[i64]) -> i128 {
        self.positive_roots()
            .iter()
            .map(|g| pair(g, x) as i128 * pair(g, y) as i128)
            .sum()
    }

    /// `<alpha_i, lambda>` for every simple root.
    pub fn fundamental_coordinates(&self, lambda: &[i64]) -> Vec<i64> {
        self.simple_roots.iter().map(|a| pair(a, lambda)).collect()
    }

    /// Height of a dominant coweight: the sum of its fundamental coordinates.
    pub fn height(&self, lambda: &[i64]) -> i64 {
        self.fundamental_coordinates(lambda).iter().sum()
    }

    pub fn is_dominant(&self, lambda: &[i64]) -> bool {
        self.simple_roots.iter().all(|a| pair(a, lambda) >= 0)
    }

    /// The coweight with prescribed fundamental coordinates, when the datum is
    /// semisimple and such a coweight exists in `X^vee`.
    pub fn coweight_from_fundamental(&self, coords: &[i64]) -> Result<Option<Vec<i64>>> {
        if !self.is_semisimple() {
            return Err(Error::NotSemisimple);
        }
        if coords.len() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: coords.len(),
            });
        }
        let a = IntMatrix::from_i64_rows(self.rank, &self.simple_roots)
            .expect("consistent widths");
        let rhs: Vec<BigInt> = coords.iter().map(|&x| BigInt::from(x)).collect();
        let Some(sol) = crate::lattice::solve_rational(&a, &rhs) else {
            return Ok(None);
        };
        if sol.iter().any(|x| !x.is_integer()) {
            return Ok(None);
        }
        Ok(Some(
            sol.iter()
                .map(|x| x.to_integer().to_i64().expect("coweight fits in i64"))
                .collect(),
        ))
    }

    /// All dominant coweights of height at most `max_height`, ordered by
    /// height and then lexicographically in fundamental coordinates.
    pub fn dominant_coweights(&self, max_height: usize) -> Result<Vec<Vec<i64>>> {
        if !self.is_semisimple() {
            return Err(Error::NotSemisimple);
        }
        let n = self.rank;
        let a = IntMatrix::from_i64_rows(n, &self.simple_roots).expect("consistent widths");
        let (adj, det) = scaled_inverse(&a).ok_or(Error::NotSemisimple)?;
        let wide = |x: &BigInt| x.to_i128().expect("small adjugate");
        let inv = ScaledMap::from_scaled(
            adj.iter().map(|r| r.iter().map(wide).collect()).collect(),
            wide(&det),
        );
        let mut out = Vec::new();
        for h in 0..=max_height {
            for coords in compositions(n, h) {
                if let Some(l) = inv.apply(&coords) {
                    out.push(l);
                }
            }
        }
        Ok(out)
    }
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// Vectors in `N^n` with coordinate sum `h`, in decreasing lexicographic order.
pub(crate) fn compositions(n: usize, h: usize) -> Vec<Vec<i64>> {
    fn go(n: usize, h: usize, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if n == 1 {
            prefix.push(h as i64);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in (0..=h).rev() {
            prefix.push(k as i64);
            go(n - 1, h - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if h == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(n, h, &mut Vec::new(), &mut out);
    out
}
