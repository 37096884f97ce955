//! Weyl group elements as integer matrices.
//!
//! An element carries two matrices: its action on weight coordinates and its
//! action on simple-root coordinates. The two are inverse-transposes of each
//! other, which makes inversion free.

use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::lattice::{Root, RootSystem, Weight};

/// Default cap on the size of a Weyl group that may be enumerated.
pub const DEFAULT_GROUP_GUARD: u128 = 1_000_000;

#[derive(Clone)]
pub struct WeylElement {
    rank: usize,
    /// Row-major action on fundamental-weight coordinates.
    on_weights: Vec<i64>,
    /// Row-major action on simple-root coordinates.
    on_roots: Vec<i64>,
    length: OnceLock<usize>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.on_weights == other.on_weights
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.on_weights.hash(state);
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeylElement")
            .field("on_weights", &self.on_weights)
            .finish()
    }
}

fn mat_mul(n: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for r in 0..n {
        for k in 0..n {
            let x = a[r * n + k];
            if x == 0 {
                continue;
            }
            for c in 0..n {
                out[r * n + c] += x * b[k * n + c];
            }
        }
    }
    out
}

fn mat_vec(n: usize, m: &[i64], v: &[i64]) -> Vec<i64> {
    (0..n)
        .map(|r| (0..n).map(|c| m[r * n + c] * v[c]).sum())
        .collect()
}

fn transpose_vec(n: usize, m: &[i64], v: &[i64]) -> Vec<i64> {
    (0..n)
        .map(|c| (0..n).map(|r| m[r * n + c] * v[r]).sum())
        .collect()
}

fn transpose(n: usize, m: &[i64]) -> Vec<i64> {
    let mut out = vec![0; n * n];
    for r in 0..n {
        for c in 0..n {
            out[c * n + r] = m[r * n + c];
        }
    }
    out
}

fn identity_matrix(n: usize) -> Vec<i64> {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

impl WeylElement {
    fn from_parts(rank: usize, on_weights: Vec<i64>, on_roots: Vec<i64>) -> Self {
        WeylElement {
            rank,
            on_weights,
            on_roots,
            length: OnceLock::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_identity(&self) -> bool {
        self.on_weights == identity_matrix(self.rank)
    }

    /// Row-major matrix of the action on fundamental-weight coordinates.
    pub fn weight_matrix(&self) -> &[i64] {
        &self.on_weights
    }

    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        let n = self.rank;
        WeylElement::from_parts(
            n,
            mat_mul(n, &self.on_weights, &other.on_weights),
            mat_mul(n, &self.on_roots, &other.on_roots),
        )
    }

    pub fn inverse(&self) -> WeylElement {
        let n = self.rank;
        let inv = WeylElement::from_parts(
            n,
            transpose(n, &self.on_roots),
            transpose(n, &self.on_weights),
        );
        if let Some(&l) = self.length.get() {
            let _ = inv.length.set(l);
        }
        inv
    }

    pub fn act_on_weight(&self, nu: &Weight) -> Weight {
        Weight(mat_vec(self.rank, &self.on_weights, &nu.0))
    }

    pub fn act_on_root(&self, beta: &Root) -> Root {
        Root(mat_vec(self.rank, &self.on_roots, &beta.0))
    }

    /// `w^{-1} beta`, without forming the inverse.
    pub fn inverse_act_on_root(&self, beta: &Root) -> Root {
        Root(transpose_vec(self.rank, &self.on_weights, &beta.0))
    }

    /// `w^{-1} nu`, without forming the inverse.
    pub fn inverse_act_on_weight(&self, nu: &Weight) -> Weight {
        Weight(transpose_vec(self.rank, &self.on_roots, &nu.0))
    }

    /// Whether `w alpha_i` is negative (1-based `i`).
    pub fn has_right_descent(&self, i: usize) -> bool {
        let n = self.rank;
        let c = i - 1;
        (0..n)
            .map(|r| self.on_roots[r * n + c])
            .find(|&x| x != 0)
            .is_some_and(|x| x < 0)
    }

    /// Whether `w^{-1} alpha_i` is negative (1-based `i`).
    pub fn has_left_descent(&self, i: usize) -> bool {
        let n = self.rank;
        let r = i - 1;
        self.on_weights[r * n..(r + 1) * n]
            .iter()
            .find(|&&x| x != 0)
            .is_some_and(|&x| x < 0)
    }
}

/// An element `v t_xi` of the affine Weyl group, with `xi` in the coroot
/// lattice (identified with the root lattice).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineWeylElement {
    pub linear: WeylElement,
    pub translation: Root,
}

impl AffineWeylElement {
    pub fn new(linear: WeylElement, translation: Root) -> Self {
        AffineWeylElement {
            linear,
            translation,
        }
    }

    /// `(w, xi)(w', xi') = (w w', w'^{-1} xi + xi')`.
    pub fn compose(&self, other: &AffineWeylElement) -> AffineWeylElement {
        let moved = other.linear.inverse_act_on_root(&self.translation);
        AffineWeylElement {
            linear: self.linear.mul(&other.linear),
            translation: &moved + &other.translation,
        }
    }
}

impl RootSystem {
    pub fn identity(&self) -> WeylElement {
        let n = self.rank();
        let e = WeylElement::from_parts(n, identity_matrix(n), identity_matrix(n));
        let _ = e.length.set(0);
        e
    }

    /// `s_i` for 1-based `i`.
    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        self.reflection(&self.simple_root(i))
    }

    /// The reflection `s_alpha` for a root `alpha`.
    pub fn reflection(&self, alpha: &Root) -> WeylElement {
        let n = self.rank();
        let ca = self.root_to_weight(alpha).0;
        let mut on_weights = identity_matrix(n);
        let mut on_roots = identity_matrix(n);
        for r in 0..n {
            for c in 0..n {
                on_weights[r * n + c] -= ca[r] * alpha.0[c];
                on_roots[r * n + c] -= alpha.0[r] * ca[c];
            }
        }
        WeylElement::from_parts(n, on_weights, on_roots)
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, w: &WeylElement) -> usize {
        *w.length.get_or_init(|| {
            self.positive_roots()
                .iter()
                .filter(|a| !w.act_on_root(a).is_positive())
                .count()
        })
    }

    pub fn longest_element(&self) -> WeylElement {
        let mut w = self.identity();
        'climb: loop {
            for i in 1..=self.rank() {
                if !w.has_right_descent(i) {
                    w = w.mul(&self.simple_reflection(i));
                    continue 'climb;
                }
            }
            return w;
        }
    }

    /// Lexicographically least reduced word `[i_1, ..., i_l]` with
    /// `w = s_{i_1} ... s_{i_l}`.
    pub fn canonical_reduced_word(&self, w: &WeylElement) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = w.clone();
        'peel: loop {
            for i in 1..=self.rank() {
                if cur.has_left_descent(i) {
                    word.push(i);
                    cur = self.simple_reflection(i).mul(&cur);
                    continue 'peel;
                }
            }
            break;
        }
        debug_assert!(cur.is_identity());
        word
    }

    /// `"e"` for the identity, otherwise the canonical word like `"1,2,1"`.
    pub fn word_string(&self, w: &WeylElement) -> String {
        let word = self.canonical_reduced_word(w);
        if word.is_empty() {
            "e".to_string()
        } else {
            word.iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    pub fn element_from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut w = self.identity();
        for &i in word {
            self.check_node(i)?;
            w = w.mul(&self.simple_reflection(i));
        }
        Ok(w)
    }

    /// Parses `"e"` or a comma-separated word such as `"1,2,1"`.
    pub fn parse_element(&self, text: &str) -> Result<WeylElement> {
        let text = text.trim();
        if text.is_empty() || text == "e" {
            return Ok(self.identity());
        }
        let word = text
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad Weyl word token {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.element_from_word(&word)
    }

    /// All elements, ordered by length and then by canonical reduced word.
    pub fn enumerate_group(&self, guard: u128) -> Result<Vec<WeylElement>> {
        let order = self.cartan_type().weyl_order();
        if order > guard {
            return Err(Error::GroupTooLarge { order, guard });
        }
        let mut all: Vec<WeylElement> = vec![self.identity()];
        let mut layer: Vec<WeylElement> = vec![self.identity()];
        let mut len = 0usize;
        while !layer.is_empty() {
            len += 1;
            let mut seen: HashSet<WeylElement> = HashSet::new();
            let mut next: Vec<WeylElement> = Vec::new();
            for w in &layer {
                for i in 1..=self.rank() {
                    if !w.has_right_descent(i) {
                        let v = w.mul(&self.simple_reflection(i));
                        if seen.insert(v.clone()) {
                            let _ = v.length.set(len);
                            next.push(v);
                        }
                    }
                }
            }
            let mut keyed: Vec<(Vec<usize>, WeylElement)> = next
                .into_iter()
                .map(|w| (self.canonical_reduced_word(&w), w))
                .collect();
            keyed.sort_by(|a, b| a.0.cmp(&b.0));
            layer = keyed.into_iter().map(|(_, w)| w).collect();
            all.extend(layer.iter().cloned());
        }
        Ok(all)
    }

    /// Returns `(x, dominant)` with `x` of minimal length and
    /// `x * dominant == lambda`.
    pub fn min_orbit_representative(&self, lambda: &Weight) -> (WeylElement, Weight) {
        let mut cur = lambda.clone();
        let mut x = self.identity();
        while let Some(i) = cur.0.iter().position(|&c| c < 0) {
            let node = i + 1;
            cur = self.reflect_weight(&self.simple_root(node), &cur);
            x = x.mul(&self.simple_reflection(node));
        }
        (x, cur)
    }

    /// Minimal-length `u` with `u * varpi_k == target`.
    pub fn min_coset_rep_to(&self, target: &Weight, k: usize) -> Result<WeylElement> {
        self.check_node(k)?;
        self.check_dim(&target.0)?;
        let (x, dominant) = self.min_orbit_representative(target);
        if dominant != self.fundamental_weight(k) {
            return Err(Error::NotInOrbit(target.to_string()));
        }
        Ok(x)
    }
}
