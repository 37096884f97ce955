//! Simply-laced root data.
//!
//! Weights are stored in fundamental-weight coordinates and roots in
//! simple-root coordinates, so the pairing `<nu, alpha^vee>` is a plain dot
//! product. Roots and coroots are identified: a coroot is represented by the
//! same integer vector as its root. Node indices in the public API are
//! 1-based, following the Bourbaki numbering of the Dynkin diagram.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::D => 'D',
            Family::E => 'E',
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            other => Err(Error::Parse(format!(
                "unknown Cartan family {other:?} (expected A, D or E)"
            ))),
        }
    }
}

/// A simply-laced Cartan type: `A_n` (n >= 1), `D_n` (n >= 4) or `E_n`
/// (n in 6..=8).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if !ok {
            return Err(Error::InvalidRank {
                family: family.letter(),
                rank,
            });
        }
        Ok(CartanType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// E8 results of the main formula are only conjectural.
    pub fn is_conjectural(&self) -> bool {
        self.family == Family::E && self.rank == 8
    }

    /// Edges of the Dynkin diagram, 1-based, Bourbaki numbering.
    fn dynkin_edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.family {
            Family::A => (1..n).map(|i| (i, i + 1)).collect(),
            Family::D => {
                let mut edges: Vec<_> = (1..n - 1).map(|i| (i, i + 1)).collect();
                edges.push((n - 2, n));
                edges
            }
            Family::E => [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]
                .into_iter()
                .filter(|&(i, j)| i <= n && j <= n)
                .collect(),
        }
    }

    /// Row-major Cartan matrix.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (i, j) in self.dynkin_edges() {
            c[i - 1][j - 1] = -1;
            c[j - 1][i - 1] = -1;
        }
        c
    }

    /// Nodes `k` whose fundamental weight is minuscule.
    pub fn minuscule_nodes(&self) -> Vec<usize> {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => (1..=n).collect(),
            (Family::D, _) => vec![1, n - 1, n],
            (Family::E, 6) => vec![1, 6],
            (Family::E, 7) => vec![7],
            _ => vec![],
        }
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match (self.family, self.rank) {
            (Family::A, _) => fact(n + 1),
            (Family::D, _) => (1u128 << (n - 1)) * fact(n),
            (Family::E, 6) => 51_840,
            (Family::E, 7) => 2_903_040,
            _ => 696_729_600,
        }
    }

    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * (n + 1) / 2,
            (Family::D, _) => n * (n - 1),
            (Family::E, 6) => 36,
            (Family::E, 7) => 63,
            _ => 120,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Parses `"A2"`, `"D4"`, `"E7"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, tail) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
        let family: Family = head.parse()?;
        let rank = tail
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad Cartan type {s:?}")))?;
        CartanType::new(family, rank)
    }
}

macro_rules! lattice_vector {
    ($name:ident) => {
        #[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
        pub struct $name(pub Vec<i64>);

        impl $name {
            pub fn zero(rank: usize) -> Self {
                $name(vec![0; rank])
            }

            pub fn coords(&self) -> &[i64] {
                &self.0
            }

            pub fn rank(&self) -> usize {
                self.0.len()
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|&c| c == 0)
            }

            pub fn dot(&self, other: &[i64]) -> i64 {
                self.0.iter().zip(other).map(|(a, b)| a * b).sum()
            }
        }

        impl From<Vec<i64>> for $name {
            fn from(v: Vec<i64>) -> Self {
                $name(v)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "(")?;
                for (i, c) in self.0.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }

        impl Add<&$name> for &$name {
            type Output = $name;
            fn add(self, rhs: &$name) -> $name {
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
            }
        }

        impl Add for $name {
            type Output = $name;
            fn add(self, rhs: $name) -> $name {
                &self + &rhs
            }
        }

        impl Sub<&$name> for &$name {
            type Output = $name;
            fn sub(self, rhs: &$name) -> $name {
                $name(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
            }
        }

        impl Sub for $name {
            type Output = $name;
            fn sub(self, rhs: $name) -> $name {
                &self - &rhs
            }
        }

        impl AddAssign<&$name> for $name {
            fn add_assign(&mut self, rhs: &$name) {
                for (a, b) in self.0.iter_mut().zip(&rhs.0) {
                    *a += b;
                }
            }
        }

        impl SubAssign<&$name> for $name {
            fn sub_assign(&mut self, rhs: &$name) {
                for (a, b) in self.0.iter_mut().zip(&rhs.0) {
                    *a -= b;
                }
            }
        }

        impl Neg for &$name {
            type Output = $name;
            fn neg(self) -> $name {
                $name(self.0.iter().map(|a| -a).collect())
            }
        }

        impl Neg for $name {
            type Output = $name;
            fn neg(self) -> $name {
                -&self
            }
        }

        impl Mul<&$name> for i64 {
            type Output = $name;
            fn mul(self, rhs: &$name) -> $name {
                $name(rhs.0.iter().map(|a| self * a).collect())
            }
        }
    };
}

lattice_vector!(Weight);
lattice_vector!(Root);

impl Root {
    /// Height: sum of simple-root coordinates. Equals `<rho, alpha^vee>`.
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Sign by the first nonzero coordinate; valid for roots.
    pub fn is_positive(&self) -> bool {
        self.0.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
    }
}

/// Immutable root datum of a simply-laced type.
#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Root>,
    root_index: HashMap<Root, usize>,
    theta: Root,
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Self {
        let cartan = cartan_type.cartan_matrix();
        let n = cartan_type.rank();

        // Close the simple roots under simple reflections, staying positive.
        let mut seen: HashSet<Root> = HashSet::new();
        let mut queue: VecDeque<Root> = VecDeque::new();
        for i in 0..n {
            let mut v = vec![0; n];
            v[i] = 1;
            let r = Root(v);
            seen.insert(r.clone());
            queue.push_back(r);
        }
        while let Some(beta) = queue.pop_front() {
            for (i, row) in cartan.iter().enumerate() {
                let p: i64 = row.iter().zip(&beta.0).map(|(a, b)| a * b).sum();
                if p < 0 {
                    let mut next = beta.clone();
                    next.0[i] -= p;
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
        }
        let mut positive_roots: Vec<Root> = seen.into_iter().collect();
        positive_roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
        let theta = positive_roots
            .last()
            .cloned()
            .expect("root system has at least one root");
        let root_index = positive_roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        RootSystem {
            cartan_type,
            cartan,
            positive_roots,
            root_index,
            theta,
        }
    }

    /// Convenience constructor from a family and rank.
    pub fn of(family: Family, rank: usize) -> Result<Self> {
        Ok(RootSystem::new(CartanType::new(family, rank)?))
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots ordered by height, then lexicographically.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// Index of a positive root in [`Self::positive_roots`].
    pub fn positive_root_index(&self, alpha: &Root) -> Option<usize> {
        self.root_index.get(alpha).copied()
    }

    /// All roots: positive roots followed by their negatives.
    pub fn roots(&self) -> Vec<Root> {
        let mut all = self.positive_roots.clone();
        all.extend(self.positive_roots.iter().map(|r| -r));
        all
    }

    pub fn theta(&self) -> &Root {
        &self.theta
    }

    /// Coxeter number, `height(theta) + 1`.
    pub fn coxeter_number(&self) -> i64 {
        self.theta.height() + 1
    }

    pub fn simple_root(&self, i: usize) -> Root {
        let n = self.rank();
        assert!((1..=n).contains(&i), "simple root index {i} out of range");
        let mut v = vec![0; n];
        v[i - 1] = 1;
        Root(v)
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let n = self.rank();
        assert!(
            (1..=n).contains(&i),
            "fundamental weight index {i} out of range"
        );
        let mut v = vec![0; n];
        v[i - 1] = 1;
        Weight(v)
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    pub fn check_node(&self, i: usize) -> Result<()> {
        if (1..=self.rank()).contains(&i) {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                index: i,
                rank: self.rank(),
            })
        }
    }

    pub fn check_dim(&self, v: &[i64]) -> Result<()> {
        if v.len() == self.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: v.len(),
            })
        }
    }

    pub fn is_root(&self, alpha: &Root) -> bool {
        if alpha.is_positive() {
            self.root_index.contains_key(alpha)
        } else {
            self.root_index.contains_key(&-alpha)
        }
    }

    pub fn ensure_root(&self, alpha: &Root) -> Result<()> {
        if alpha.rank() == self.rank() && self.is_root(alpha) {
            Ok(())
        } else {
            Err(Error::NotARoot(alpha.to_string()))
        }
    }

    /// `<nu, alpha^vee>`.
    pub fn pair(&self, nu: &Weight, alpha: &Root) -> i64 {
        nu.dot(&alpha.0)
    }

    /// The normalized invariant form `(beta, alpha)` on the root lattice.
    pub fn pair_root_coroot(&self, beta: &Root, alpha: &Root) -> i64 {
        let n = self.rank();
        let mut acc = 0;
        for i in 0..n {
            if alpha.0[i] == 0 {
                continue;
            }
            let row: i64 = (0..n).map(|j| self.cartan[i][j] * beta.0[j]).sum();
            acc += row * alpha.0[i];
        }
        acc
    }

    /// Weight-lattice coordinates of a root-lattice vector.
    pub fn root_to_weight(&self, beta: &Root) -> Weight {
        let n = self.rank();
        Weight(
            (0..n)
                .map(|i| (0..n).map(|j| self.cartan[i][j] * beta.0[j]).sum())
                .collect(),
        )
    }

    /// `s_alpha(nu) = nu - <nu, alpha^vee> alpha`.
    pub fn reflect_weight(&self, alpha: &Root, nu: &Weight) -> Weight {
        let p = self.pair(nu, alpha);
        nu - &(p * &self.root_to_weight(alpha))
    }

    pub fn reflect_root(&self, alpha: &Root, beta: &Root) -> Root {
        let p = self.pair_root_coroot(beta, alpha);
        beta - &(p * alpha)
    }

    pub fn sgn(&self, alpha: &Root) -> Result<i64> {
        self.ensure_root(alpha)?;
        Ok(if alpha.is_positive() { 1 } else { -1 })
    }

    pub fn abs(&self, alpha: &Root) -> Result<Root> {
        self.ensure_root(alpha)?;
        Ok(if alpha.is_positive() {
            alpha.clone()
        } else {
            -alpha
        })
    }

    pub fn is_simple(&self, alpha: &Root) -> bool {
        alpha.0.iter().all(|&c| c == 0 || c == 1) && alpha.height() == 1
    }

    /// Index `i` with `alpha == alpha_i`.
    pub fn simple_index(&self, alpha: &Root) -> Option<usize> {
        if self.is_simple(alpha) {
            alpha.0.iter().position(|&c| c == 1).map(|i| i + 1)
        } else {
            None
        }
    }

    pub fn is_dominant(&self, nu: &Weight) -> bool {
        nu.0.iter().all(|&c| c >= 0)
    }

    /// Minuscule in the sense that every root pairs into {-1, 0, 1}.
    pub fn is_minuscule(&self, nu: &Weight) -> bool {
        !nu.is_zero()
            && self
                .positive_roots
                .iter()
                .all(|a| self.pair(nu, a).abs() <= 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> RootSystem {
        RootSystem::of(Family::A, 2).unwrap()
    }

    fn root(v: &[i64]) -> Root {
        Root(v.to_vec())
    }

    #[test]
    fn invalid_ranks_rejected() {
        assert!(CartanType::new(Family::A, 0).is_err());
        assert!(CartanType::new(Family::D, 3).is_err());
        assert!(CartanType::new(Family::E, 5).is_err());
        assert!(CartanType::new(Family::E, 9).is_err());
        assert!(CartanType::new(Family::E, 8).unwrap().is_conjectural());
        assert!(!CartanType::new(Family::E, 7).unwrap().is_conjectural());
    }

    #[test]
    fn a2_data() {
        let rs = a2();
        assert_eq!(
            rs.positive_roots(),
            &[root(&[0, 1]), root(&[1, 0]), root(&[1, 1])][..]
        );
        assert_eq!(rs.theta(), &root(&[1, 1]));
    }

    #[test]
    fn cartan_matrices_are_symmetric_simply_laced() {
        for ct in ["A1", "A5", "D4", "D6", "E6", "E7", "E8"] {
            let ct: CartanType = ct.parse().unwrap();
            let c = ct.cartan_matrix();
            for (i, row) in c.iter().enumerate() {
                assert_eq!(row[i], 2);
                for (j, &x) in row.iter().enumerate() {
                    assert_eq!(x, c[j][i]);
                    if i != j {
                        assert!(x == 0 || x == -1);
                    }
                }
            }
        }
    }

    #[test]
    fn e8_bourbaki_theta() {
        let rs = RootSystem::of(Family::E, 8).unwrap();
        assert_eq!(rs.theta(), &root(&[2, 3, 4, 6, 5, 4, 3, 2]));
        let rs = RootSystem::of(Family::E, 6).unwrap();
        assert_eq!(rs.theta(), &root(&[1, 2, 2, 3, 2, 1]));
    }

    #[test]
    fn pairing_examples() {
        let rs = a2();
        assert_eq!(rs.pair(&rs.fundamental_weight(1), &rs.simple_root(1)), 1);
        assert_eq!(rs.pair(&Weight(vec![1, 1]), rs.theta()), 2);
        assert_eq!(rs.pair(&rs.rho(), rs.theta()), 2);
        assert_eq!(
            rs.pair_root_coroot(&rs.simple_root(1), &rs.simple_root(2)),
            -1
        );
        assert_eq!(rs.pair_root_coroot(rs.theta(), rs.theta()), 2);

        let d4 = RootSystem::of(Family::D, 4).unwrap();
        let a1 = d4.simple_root(1);
        assert_eq!(d4.pair_root_coroot(&(&a1 + &d4.simple_root(2)), &a1), 1);
    }

    #[test]
    fn reflection_examples() {
        let rs = a2();
        let a1 = rs.simple_root(1);
        let w1 = rs.fundamental_weight(1);
        assert_eq!(rs.reflect_weight(&a1, &w1), &w1 - &rs.root_to_weight(&a1));
        assert_eq!(rs.reflect_root(rs.theta(), rs.theta()), -rs.theta());
        assert_eq!(rs.reflect_root(&a1, &rs.simple_root(2)), root(&[1, 1]));
    }

    #[test]
    fn sign_and_abs() {
        let rs = a2();
        assert_eq!(rs.sgn(&rs.simple_root(1)).unwrap(), 1);
        let neg_theta = -rs.theta();
        assert_eq!(rs.sgn(&neg_theta).unwrap(), -1);
        assert_eq!(&rs.abs(&neg_theta).unwrap(), rs.theta());
        let r = rs.reflect_root(&rs.simple_root(1), &root(&[-1, -1]));
        assert_eq!(rs.abs(&r).unwrap(), rs.simple_root(2));
        assert!(rs.sgn(&root(&[2, 0])).is_err());
        assert!(rs.abs(&root(&[1, -1])).is_err());
    }

    #[test]
    fn simplicity() {
        let rs = a2();
        assert!(rs.is_simple(&rs.simple_root(1)));
        assert!(!rs.is_simple(rs.theta()));
        assert!(!rs.is_simple(&-rs.simple_root(2)));
        assert_eq!(rs.simple_index(&rs.simple_root(2)), Some(2));
    }

    #[test]
    fn rho_pairing_is_height_and_theta_is_maximal() {
        for ct in ["A3", "D5", "E6", "E7"] {
            let rs = RootSystem::new(ct.parse().unwrap());
            let rho = rs.rho();
            let max = rs
                .positive_roots()
                .iter()
                .map(|a| rs.pair(&rho, a))
                .max()
                .unwrap();
            let argmax: Vec<_> = rs
                .positive_roots()
                .iter()
                .filter(|a| rs.pair(&rho, a) == max)
                .collect();
            assert_eq!(argmax, vec![rs.theta()]);
            for a in rs.positive_roots() {
                let h = rs.pair(&rho, a);
                assert_eq!(h, a.height());
                assert!(h >= 1);
                assert_eq!(h == 1, rs.is_simple(a));
            }
        }
    }

    #[test]
    fn minuscule_detection() {
        let rs = RootSystem::of(Family::D, 5).unwrap();
        for k in 1..=5 {
            let w = rs.fundamental_weight(k);
            assert_eq!(
                rs.is_minuscule(&w),
                rs.cartan_type().minuscule_nodes().contains(&k),
                "node {k}"
            );
        }
        let e7 = RootSystem::of(Family::E, 7).unwrap();
        for k in 1..=7 {
            assert_eq!(e7.is_minuscule(&e7.fundamental_weight(k)), k == 7);
        }
        let e8 = RootSystem::of(Family::E, 8).unwrap();
        assert!((1..=8).all(|k| !e8.is_minuscule(&e8.fundamental_weight(k))));
    }
}
