//! Quantum walks over an alcove path, their decorations, and the per-walk
//! statistics (sign, quantum weight, weight, degree).

use crate::alcove::AlcovePath;
use crate::error::{Error, Result};
use crate::lattice::{Root, RootSystem, Weight};
use crate::qbg::EdgeKind;
use crate::weyl::WeylElement;

/// Default cap on the number of walks enumerated for one request.
pub const DEFAULT_MAX_WALKS: usize = 10_000_000;

/// A sequence `w_0, ..., w_m` with `w_t` equal to `w_{t-1}` or
/// `s_{gamma_t} w_{t-1}`, every change being an edge of the quantum Bruhat
/// graph. Step indices are 1-based throughout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumWalk {
    steps: Vec<WeylElement>,
    /// `crossings[t - 1]` is the edge kind when step `t` moves.
    crossings: Vec<Option<EdgeKind>>,
    special: Vec<usize>,
}

/// The index sets attached to a walk.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StepSets {
    /// Steps that move.
    pub crossing: Vec<usize>,
    /// Moving steps along a quantum edge (length goes down).
    pub quantum: Vec<usize>,
    /// Stationary steps with `-w_t^{-1} gamma_t` simple.
    pub special: Vec<usize>,
}

impl QuantumWalk {
    pub fn steps(&self) -> &[WeylElement] {
        &self.steps
    }

    pub fn start(&self) -> &WeylElement {
        &self.steps[0]
    }

    pub fn end(&self) -> &WeylElement {
        self.steps.last().expect("walk has a start")
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    /// Edge kind of step `t` (1-based), or `None` when the walk stays.
    pub fn crossing_kind(&self, t: usize) -> Option<EdgeKind> {
        self.crossings[t - 1]
    }

    pub fn special_steps(&self) -> &[usize] {
        &self.special
    }

    pub fn step_sets(&self) -> StepSets {
        let mut sets = StepSets {
            special: self.special.clone(),
            ..StepSets::default()
        };
        for (i, k) in self.crossings.iter().enumerate() {
            if let Some(kind) = k {
                sets.crossing.push(i + 1);
                if *kind == EdgeKind::Quantum {
                    sets.quantum.push(i + 1);
                }
            }
        }
        sets
    }
}

/// Enumerates all quantum walks from `w` along `path`, depth first with the
/// stationary branch explored before the moving one.
pub fn enumerate_walks(
    rs: &RootSystem,
    path: &AlcovePath,
    w: &WeylElement,
    max_walks: usize,
) -> Result<Vec<QuantumWalk>> {
    let labels = path.labels();
    let m = labels.len();
    let mut out = Vec::new();
    let mut steps: Vec<WeylElement> = Vec::with_capacity(m + 1);
    let mut crossings: Vec<Option<EdgeKind>> = Vec::with_capacity(m);
    // Each entry sets w_t for t = entry.0 and discards anything deeper.
    let mut stack: Vec<(usize, WeylElement, Option<EdgeKind>)> = vec![(0, w.clone(), None)];
    while let Some((t, x, kind)) = stack.pop() {
        steps.truncate(t);
        crossings.truncate(t.saturating_sub(1));
        steps.push(x);
        if t > 0 {
            crossings.push(kind);
        }
        if t == m {
            if out.len() == max_walks {
                return Err(Error::WalkGuard { limit: max_walks });
            }
            let special = special_set(rs, labels, &steps, &crossings);
            out.push(QuantumWalk {
                steps: steps.clone(),
                crossings: crossings.clone(),
                special,
            });
            continue;
        }
        let cur = &steps[t];
        let gamma = &labels[t];
        if let Some(step) = rs.classify_left_step(cur, gamma)? {
            stack.push((t + 1, step.target, Some(step.kind)));
        }
        stack.push((t + 1, cur.clone(), None));
    }
    Ok(out)
}

fn special_set(
    rs: &RootSystem,
    labels: &[Root],
    steps: &[WeylElement],
    crossings: &[Option<EdgeKind>],
) -> Vec<usize> {
    (1..=labels.len())
        .filter(|&t| {
            crossings[t - 1].is_none()
                && rs.is_simple(&-steps[t].inverse_act_on_root(&labels[t - 1]))
        })
        .collect()
}

/// A walk together with a 0/1 value on each of its special steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecoratedWalk<'a> {
    pub walk: &'a QuantumWalk,
    /// Aligned with `walk.special_steps()`.
    pub bits: Vec<u8>,
}

impl DecoratedWalk<'_> {
    /// The decoration value at step `t`, if `t` is special.
    pub fn bit_at(&self, t: usize) -> Option<u8> {
        self.walk
            .special
            .iter()
            .position(|&s| s == t)
            .map(|i| self.bits[i])
    }

    /// `"2->1,4->0"`-style rendering, `"-"` when there are no special steps.
    pub fn decoration_string(&self) -> String {
        if self.bits.is_empty() {
            return "-".to_string();
        }
        self.walk
            .special
            .iter()
            .zip(&self.bits)
            .map(|(t, b)| format!("{t}->{b}"))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// All decorations of a walk; the first special step is the lowest bit of a
/// binary counter.
pub fn decorate(walk: &QuantumWalk) -> Vec<DecoratedWalk<'_>> {
    let n = walk.special.len();
    (0u64..1u64 << n)
        .map(|mask| DecoratedWalk {
            walk,
            bits: (0..n).map(|j| ((mask >> j) & 1) as u8).collect(),
        })
        .collect()
}

/// Running values after each step `t = 0..=m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prefixes {
    pub qwt: Vec<Root>,
    pub qwt_co: Vec<Root>,
    pub wt: Vec<Weight>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkStats {
    pub sign: i64,
    pub end: WeylElement,
    pub qwt: Root,
    /// The same vector as `qwt`, accumulated in the coroot role.
    pub qwt_co: Root,
    pub wt: Weight,
    pub deg: i64,
    pub prefixes: Option<Prefixes>,
}

/// An affine map `nu -> A nu + b` on weights.
#[derive(Debug, Clone)]
struct AffineMap {
    linear: WeylElement,
    shift: Weight,
}

impl AffineMap {
    fn apply(&self, nu: &Weight) -> Weight {
        &self.linear.act_on_weight(nu) + &self.shift
    }

    /// `self` followed on the right by the reflection in `H_{gamma, l}`,
    /// i.e. `nu -> self(s_gamma nu + l gamma)`.
    fn then_reflect(&self, rs: &RootSystem, gamma: &Root, level: i64) -> AffineMap {
        let g = rs.root_to_weight(gamma);
        AffineMap {
            linear: self.linear.mul(&rs.reflection(gamma)),
            shift: &self.linear.act_on_weight(&(level * &g)) + &self.shift,
        }
    }
}

/// Computes sign, quantum weight, weight and degree of a decorated walk.
///
/// The weight increments are obtained twice, from the closed form
/// `-l'_t w_{t-1}^{-1} gamma_t` and by composing affine reflections; any
/// disagreement is reported as an internal error.
pub fn walk_stats(
    rs: &RootSystem,
    path: &AlcovePath,
    dw: &DecoratedWalk,
    keep_prefixes: bool,
) -> Result<WalkStats> {
    let walk = dw.walk;
    let labels = path.labels();
    let levels = path.levels();
    let co = path.co_levels();
    let lambda = path.lambda();
    let rank = rs.rank();

    let mut sign = 1i64;
    let mut qwt = Root::zero(rank);
    let mut qwt_co = Root::zero(rank);
    let w = walk.start();
    let wt0 = w.inverse_act_on_weight(lambda);
    let mut wt_total = wt0.clone();
    let mut fold = AffineMap {
        linear: w.inverse(),
        shift: Weight::zero(rank),
    };
    let mut folded_prev = fold.apply(lambda);
    let mut pairing_sum = 0i64;
    let mut correction = 0i64;
    let mut prefixes = keep_prefixes.then(|| Prefixes {
        qwt: vec![qwt.clone()],
        qwt_co: vec![qwt_co.clone()],
        wt: vec![wt0.clone()],
    });

    let mut special_iter = walk.special.iter().zip(&dw.bits).peekable();
    for t in 1..=walk.len() {
        let gamma = &labels[t - 1];
        let prev = &walk.steps[t - 1];
        let cur = &walk.steps[t];
        let mut wt_t = Weight::zero(rank);
        match walk.crossings[t - 1] {
            Some(kind) => {
                let before = prev.inverse_act_on_root(gamma);
                if before.is_positive() {
                    sign = -sign;
                }
                if kind == EdgeKind::Quantum {
                    let label = rs.abs(&cur.inverse_act_on_root(gamma))?;
                    qwt += &label;
                    qwt_co += &label;
                    correction += rs.sgn(gamma)? * co[t - 1];
                }
                wt_t = -co[t - 1] * &rs.root_to_weight(&before);
                fold = fold.then_reflect(rs, gamma, levels[t - 1]);
                let folded = fold.apply(lambda);
                let increment = &folded - &folded_prev;
                if increment != wt_t {
                    return Err(Error::Internal(format!(
                        "weight increment at step {t}: closed form {wt_t}, affine fold {increment}"
                    )));
                }
                folded_prev = folded;
            }
            None => {
                if let Some((_, &b)) = special_iter.next_if(|(s, _)| **s == t) {
                    if b == 1 {
                        sign = -sign;
                        let v = cur.inverse_act_on_root(gamma);
                        qwt -= &v;
                        qwt_co -= &v;
                        correction += co[t - 1];
                    }
                }
            }
        }
        wt_total += &wt_t;
        pairing_sum += rs.pair(&wt_t, &qwt_co);
        if let Some(p) = prefixes.as_mut() {
            p.qwt.push(qwt.clone());
            p.qwt_co.push(qwt_co.clone());
            p.wt.push(wt_t);
        }
    }

    if qwt != qwt_co {
        return Err(Error::Internal(format!(
            "quantum weight {qwt} differs from its coroot form {qwt_co}"
        )));
    }
    if wt_total != folded_prev {
        return Err(Error::Internal(format!(
            "telescoped weight {wt_total} differs from affine image {folded_prev}"
        )));
    }
    let norm = rs.pair_root_coroot(&qwt, &qwt_co);
    if norm % 2 != 0 {
        return Err(Error::Internal(format!("odd norm {norm} for {qwt}")));
    }
    let deg = norm / 2 + pairing_sum - correction;
    Ok(WalkStats {
        sign,
        end: walk.end().clone(),
        qwt,
        qwt_co,
        wt: wt_total,
        deg,
        prefixes,
    })
}

/// The sign computed three ways: by the sign of `gamma_t` against the length
/// change, by `w_{t-1}^{-1} gamma_t > 0`, and by `w_t^{-1} gamma_t < 0`.
pub fn sign_forms(rs: &RootSystem, path: &AlcovePath, dw: &DecoratedWalk) -> [i64; 3] {
    let walk = dw.walk;
    let decoration: i64 = dw
        .bits
        .iter()
        .map(|&b| if b == 1 { -1 } else { 1 })
        .product();
    let mut forms = [decoration; 3];
    for t in 1..=walk.len() {
        if walk.crossings[t - 1].is_none() {
            continue;
        }
        let gamma = &path.labels()[t - 1];
        let (prev, cur) = (&walk.steps[t - 1], &walk.steps[t]);
        let up = rs.length(cur) > rs.length(prev);
        if gamma.is_positive() == up {
            forms[0] = -forms[0];
        }
        if prev.inverse_act_on_root(gamma).is_positive() {
            forms[1] = -forms[1];
        }
        if !cur.inverse_act_on_root(gamma).is_positive() {
            forms[2] = -forms[2];
        }
    }
    forms
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alcove::parse_labels;
    use crate::lattice::Family;

    fn setup() -> (RootSystem, AlcovePath) {
        let rs = RootSystem::of(Family::A, 2).unwrap();
        let labels = parse_labels(&rs, "t,a2,t,a1").unwrap();
        let path = AlcovePath::new(&rs, Weight(vec![1, 1]), labels).unwrap();
        (rs, path)
    }

    fn words(rs: &RootSystem, walk: &QuantumWalk) -> Vec<String> {
        walk.steps().iter().map(|w| rs.word_string(w)).collect()
    }

    fn find<'a>(rs: &RootSystem, walks: &'a [QuantumWalk], seq: &[&str]) -> &'a QuantumWalk {
        walks
            .iter()
            .find(|w| words(rs, w) == seq)
            .unwrap_or_else(|| panic!("walk {seq:?} missing"))
    }

    #[test]
    fn worked_example_counts() {
        let (rs, path) = setup();
        let w0 = rs.longest_element();
        let walks = enumerate_walks(&rs, &path, &w0, DEFAULT_MAX_WALKS).unwrap();
        assert_eq!(walks.len(), 13);
        let decorated: usize = walks.iter().map(|w| decorate(w).len()).sum();
        assert_eq!(decorated, 21);
        let first = &walks[0];
        assert!(first.steps().iter().all(|x| x == &w0));
        assert_eq!(first.special_steps(), &[2, 4]);
        assert_eq!(decorate(first).len(), 4);
    }

    #[test]
    fn worked_example_special_sets() {
        let (rs, path) = setup();
        let walks = enumerate_walks(&rs, &path, &rs.longest_element(), DEFAULT_MAX_WALKS).unwrap();
        let bw9 = find(&rs, &walks, &["1,2,1", "1,2,1", "1,2", "1", "1"]);
        assert_eq!(bw9.special_steps(), &[4]);
        let bw8 = find(&rs, &walks, &["1,2,1", "1,2,1", "1,2", "1,2", "1,2"]);
        assert_eq!(bw8.special_steps(), &[3]);
        let sets = bw9.step_sets();
        assert_eq!(sets.crossing, vec![2, 3]);
        assert_eq!(sets.quantum, vec![2, 3]);
    }

    #[test]
    fn stationary_walk_at_identity_over_positive_labels_has_no_special_steps() {
        let (rs, path) = setup();
        let walks = enumerate_walks(&rs, &path, &rs.identity(), DEFAULT_MAX_WALKS).unwrap();
        assert!(walks[0].steps().iter().all(|x| x.is_identity()));
        assert!(walks[0].special_steps().is_empty());
        assert!(!rs.is_simple(&-rs.theta()));
    }

    #[test]
    fn worked_example_statistics() {
        let (rs, path) = setup();
        let walks = enumerate_walks(&rs, &path, &rs.longest_element(), DEFAULT_MAX_WALKS).unwrap();
        let w0 = rs.longest_element();
        let wt_expected = w0.inverse_act_on_weight(&Weight(vec![1, 1]));
        let two_a1_a2 = Root(vec![2, 1]);

        let bw10 = find(&rs, &walks, &["1,2,1", "1,2,1", "1,2", "1", "e"]);
        let st = walk_stats(&rs, &path, &decorate(bw10)[0], true).unwrap();
        assert_eq!((st.sign, st.qwt.clone(), st.deg), (1, two_a1_a2.clone(), 3));
        assert_eq!(st.wt, wt_expected);

        let bw11 = find(&rs, &walks, &["1,2,1", "1,2,1", "1,2,1", "e", "e"]);
        let d = decorate(bw11);
        let s0 = walk_stats(&rs, &path, &d[0], false).unwrap();
        let s1 = walk_stats(&rs, &path, &d[1], false).unwrap();
        assert_eq!(
            (s0.sign, s0.qwt.clone(), s0.deg),
            (1, rs.theta().clone(), 1)
        );
        assert_eq!(
            (s1.sign, s1.qwt.clone(), s1.deg),
            (-1, two_a1_a2.clone(), 3)
        );
        assert_eq!(s0.wt, wt_expected);

        let bw12 = find(&rs, &walks, &["1,2,1", "1,2,1", "1,2,1", "e", "1"]);
        let d = decorate(bw12);
        let s0 = walk_stats(&rs, &path, &d[0], false).unwrap();
        let s1 = walk_stats(&rs, &path, &d[1], false).unwrap();
        assert_eq!((s0.sign, s0.deg), (-1, 1));
        assert_eq!((s1.sign, s1.deg), (1, 3));

        let bw1 = &walks[0];
        let d = decorate(bw1);
        assert_eq!(d[3].decoration_string(), "2->1,4->1");
        let s = walk_stats(&rs, &path, &d[3], false).unwrap();
        assert_eq!((s.sign, s.qwt.clone(), s.deg), (1, rs.theta().clone(), 1));
        assert_eq!(d[1].bit_at(2), Some(1));
        assert_eq!(d[1].bit_at(4), Some(0));
        assert_eq!(d[1].bit_at(3), None);
    }

    #[test]
    fn empty_path() {
        let rs = RootSystem::of(Family::A, 2).unwrap();
        let path = AlcovePath::empty(&rs);
        for w in rs.enumerate_group(1000).unwrap() {
            let walks = enumerate_walks(&rs, &path, &w, DEFAULT_MAX_WALKS).unwrap();
            assert_eq!(walks.len(), 1);
            let d = decorate(&walks[0]);
            assert_eq!(d.len(), 1);
            assert_eq!(d[0].decoration_string(), "-");
            let st = walk_stats(&rs, &path, &d[0], false).unwrap();
            assert_eq!(st.sign, 1);
            assert!(st.qwt.is_zero());
            assert!(st.wt.is_zero());
            assert_eq!(st.deg, 0);
            assert_eq!(st.end, w);
        }
    }

    #[test]
    fn walk_guard() {
        let (rs, path) = setup();
        assert!(matches!(
            enumerate_walks(&rs, &path, &rs.longest_element(), 5),
            Err(Error::WalkGuard { limit: 5 })
        ));
    }

    #[test]
    fn walks_are_valid_and_signs_agree() {
        let rs = RootSystem::of(Family::A, 3).unwrap();
        let path = crate::alcove::reduced_path(&rs, &Weight(vec![1, -1, 1])).unwrap();
        for w in rs.enumerate_group(1000).unwrap() {
            let walks = enumerate_walks(&rs, &path, &w, DEFAULT_MAX_WALKS).unwrap();
            for walk in &walks {
                for t in 1..=walk.len() {
                    let (prev, cur) = (&walk.steps()[t - 1], &walk.steps()[t]);
                    let gamma = &path.labels()[t - 1];
                    match walk.crossing_kind(t) {
                        None => assert_eq!(prev, cur),
                        Some(kind) => {
                            let step = rs.classify_left_step(prev, gamma).unwrap().unwrap();
                            assert_eq!(step.kind, kind);
                            assert_eq!(&step.target, cur);
                        }
                    }
                }
                for dw in decorate(walk) {
                    let forms = sign_forms(&rs, &path, &dw);
                    let st = walk_stats(&rs, &path, &dw, true).unwrap();
                    assert_eq!(forms, [st.sign; 3]);
                    let p = st.prefixes.unwrap();
                    assert_eq!(p.qwt.len(), path.len() + 1);
                    assert_eq!(p.qwt.last().unwrap(), &st.qwt);
                }
            }
        }
    }
}
