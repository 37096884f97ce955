//! The quantum Bruhat graph: edge predicates, the full graph for small
//! groups, and brute-force checks of the rank-two path lemmas.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::lattice::{Root, RootSystem};
use crate::weyl::WeylElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    /// Length goes up by one.
    Bruhat,
    /// Length drops by `2 ht(alpha) - 1`.
    Quantum,
}

impl EdgeKind {
    pub fn letter(self) -> char {
        match self {
            EdgeKind::Bruhat => 'B',
            EdgeKind::Quantum => 'Q',
        }
    }
}

/// Edge `w -> s_gamma w`, rewritten as `w -> w s_label`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftStep {
    pub kind: EdgeKind,
    pub label: Root,
    pub target: WeylElement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Neighbor {
    pub label: Root,
    pub kind: EdgeKind,
    pub target: WeylElement,
}

fn kind_from_lengths(from: usize, to: usize, height: i64) -> Option<EdgeKind> {
    let (from, to) = (from as i64, to as i64);
    if to == from + 1 {
        Some(EdgeKind::Bruhat)
    } else if to == from - 2 * height + 1 {
        Some(EdgeKind::Quantum)
    } else {
        None
    }
}

impl RootSystem {
    /// Classifies `x -> x s_alpha` for a positive root `alpha`.
    pub fn classify_edge(&self, x: &WeylElement, alpha: &Root) -> Result<Option<EdgeKind>> {
        if self.positive_root_index(alpha).is_none() {
            return Err(Error::NotPositiveRoot(alpha.to_string()));
        }
        let y = x.mul(&self.reflection(alpha));
        Ok(kind_from_lengths(
            self.length(x),
            self.length(&y),
            alpha.height(),
        ))
    }

    /// Classifies the step `w -> s_gamma w` for any root `gamma`.
    pub fn classify_left_step(&self, w: &WeylElement, gamma: &Root) -> Result<Option<LeftStep>> {
        self.ensure_root(gamma)?;
        let label = self.abs(&w.inverse_act_on_root(gamma))?;
        let target = self.reflection(gamma).mul(w);
        Ok(
            kind_from_lengths(self.length(w), self.length(&target), label.height()).map(|kind| {
                LeftStep {
                    kind,
                    label,
                    target,
                }
            }),
        )
    }

    /// Outgoing edges of `x`, in positive-root order.
    pub fn neighbors(&self, x: &WeylElement) -> Vec<Neighbor> {
        self.positive_roots()
            .iter()
            .filter_map(|alpha| {
                let target = x.mul(&self.reflection(alpha));
                kind_from_lengths(self.length(x), self.length(&target), alpha.height()).map(
                    |kind| Neighbor {
                        label: alpha.clone(),
                        kind,
                        target,
                    },
                )
            })
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct QbgEdge {
    pub from: usize,
    pub to: usize,
    pub label: Root,
    pub kind: EdgeKind,
}

/// The whole graph, for groups below the enumeration guard.
#[derive(Debug, Clone)]
pub struct QuantumBruhatGraph {
    pub vertices: Vec<WeylElement>,
    pub edges: Vec<QbgEdge>,
}

impl QuantumBruhatGraph {
    pub fn build(rs: &RootSystem, guard: u128) -> Result<Self> {
        let vertices = rs.enumerate_group(guard)?;
        let index: HashMap<&WeylElement, usize> =
            vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut edges = Vec::new();
        for (from, x) in vertices.iter().enumerate() {
            for nb in rs.neighbors(x) {
                edges.push(QbgEdge {
                    from,
                    to: index[&nb.target],
                    label: nb.label,
                    kind: nb.kind,
                });
            }
        }
        Ok(QuantumBruhatGraph { vertices, edges })
    }

    /// Graphviz rendering. Vertices are named by canonical reduced word.
    pub fn to_dot(&self, rs: &RootSystem) -> String {
        let names: Vec<String> = self.vertices.iter().map(|v| rs.word_string(v)).collect();
        let mut out = String::new();
        let _ = writeln!(out, "digraph QBG_{} {{", rs.cartan_type());
        for name in &names {
            let _ = writeln!(out, "  \"{name}\";");
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{};{}\"];",
                names[e.from],
                names[e.to],
                e.label,
                e.kind.letter()
            );
        }
        out.push_str("}\n");
        out
    }
}

/// Outcome of one rank-two lemma over a full sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub name: &'static str,
    /// Number of `(w, alpha, beta)` triples examined.
    pub checked: usize,
    /// Number of triples where the path pattern occurs.
    pub occurrences: usize,
    pub violations: Vec<String>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

struct Triple<'a> {
    rs: &'a RootSystem,
    w: &'a WeylElement,
    a: &'a Root,
    b: &'a Root,
}

impl Triple<'_> {
    fn edge(&self, x: &WeylElement, r: &Root) -> Option<EdgeKind> {
        let abs = self.rs.abs(r).expect("root");
        self.rs.classify_edge(x, &abs).expect("positive root")
    }

    /// Whether `w -> w s_p -> w s_p s_q -> w s_p s_q s_p` has the given kinds.
    fn path(&self, p: &Root, q: &Root, kinds: [EdgeKind; 3]) -> bool {
        let sp = self.rs.reflection(p);
        let sq = self.rs.reflection(q);
        let x1 = self.w.mul(&sp);
        let x2 = x1.mul(&sq);
        self.edge(self.w, p) == Some(kinds[0])
            && self.edge(&x1, q) == Some(kinds[1])
            && self.edge(&x2, p) == Some(kinds[2])
    }

    fn sgn(&self, r: &Root) -> i64 {
        if r.is_positive() {
            1
        } else {
            -1
        }
    }

    fn sgn_w(&self, r: &Root) -> i64 {
        self.sgn(&self.w.act_on_root(r))
    }

    fn sum(&self) -> Root {
        self.a + self.b
    }

    fn sum_edge(&self) -> Option<EdgeKind> {
        self.edge(self.w, &self.sum())
    }

    fn sum_length_cmp(&self) -> std::cmp::Ordering {
        let v = self.w.mul(&self.rs.reflection(&self.sum()));
        self.rs.length(&v).cmp(&self.rs.length(self.w))
    }

    fn describe(&self) -> String {
        format!(
            "w={} alpha={} beta={}",
            self.rs.word_string(self.w),
            self.a,
            self.b
        )
    }
}

fn all_equal(xs: &[i64]) -> bool {
    xs.windows(2).all(|p| p[0] == p[1])
}

type LemmaCheck = fn(&Triple) -> Option<bool>;

/// Each check returns `None` when the pattern does not occur and the
/// converse holds, `Some(true)` when the pattern occurs and everything
/// holds, and `Some(false)` on a violation.
fn lemma_checks() -> Vec<(&'static str, LemmaCheck)> {
    use std::cmp::Ordering::{Greater, Less};
    use EdgeKind::{Bruhat as B, Quantum as Q};

    fn iff(lhs: bool, rhs: bool, conclusion: impl FnOnce() -> bool) -> Option<bool> {
        match (lhs, rhs) {
            (false, false) => None,
            (true, true) => Some(conclusion()),
            _ => Some(false),
        }
    }

    vec![
        ("Q(a)Q(b)Q(a)", |t| {
            let (a, b, s) = (t.a, t.b, t.sum());
            let lhs = t.path(a, b, [Q, Q, Q]);
            let rhs = t.rs.is_simple(&t.rs.abs(a).unwrap())
                && t.sgn(a) == t.sgn(b)
                && t.sum_edge() == Some(Q);
            iff(lhs, rhs, || {
                all_equal(&[
                    t.sgn_w(a),
                    t.sgn_w(b),
                    t.sgn_w(&s),
                    -t.sgn(a),
                    -t.sgn(b),
                    -t.sgn(&s),
                ])
            })
        }),
        ("B(a)Q(b)B(a), l(ws_{a+b}) < l(w)", |t| {
            let (a, b, s) = (t.a, t.b, t.sum());
            let lhs = t.path(a, b, [B, Q, B]) && t.sum_length_cmp() == Less;
            let rhs = t.rs.is_simple(&t.rs.abs(a).unwrap())
                && all_equal(&[t.sgn(a), t.sgn_w(a), -t.sgn(b), t.sgn_w(b)])
                && t.sum_edge() == Some(Q);
            iff(lhs, rhs, || {
                all_equal(&[
                    t.sgn(a),
                    -t.sgn(b),
                    -t.sgn(&s),
                    t.sgn_w(a),
                    t.sgn_w(b),
                    t.sgn_w(&s),
                ])
            })
        }),
        ("B(b)Q(a)B(b), l(ws_{a+b}) > l(w)", |t| {
            let (a, b, s) = (t.a, t.b, t.sum());
            let lhs = t.path(b, a, [B, Q, B]) && t.sum_length_cmp() == Greater;
            let rhs = t.rs.is_simple(&t.rs.abs(a).unwrap())
                && all_equal(&[t.sgn(a), -t.sgn_w(a), -t.sgn_w(b)])
                && t.sum_edge() == Some(B);
            iff(lhs, rhs, || {
                all_equal(&[
                    t.sgn(a),
                    -t.sgn(b),
                    -t.sgn(&s),
                    -t.sgn_w(a),
                    -t.sgn_w(b),
                    -t.sgn_w(&s),
                ])
            })
        }),
        ("Q(b)B(a)B(b), l(ws_{a+b}) < l(w)", |t| {
            let (a, b, s) = (t.a, t.b, t.sum());
            let lhs = t.path(b, a, [Q, B, B]) && t.sum_length_cmp() == Less;
            let rhs = t.rs.is_simple(&t.rs.abs(a).unwrap())
                && all_equal(&[t.sgn(a), -t.sgn(b), -t.sgn_w(a)])
                && t.sum_edge() == Some(Q);
            iff(lhs, rhs, || {
                all_equal(&[
                    t.sgn(a),
                    -t.sgn(b),
                    -t.sgn(&s),
                    -t.sgn_w(a),
                    t.sgn_w(b),
                    t.sgn_w(&s),
                ])
            })
        }),
        ("B(b)B(a)Q(b), l(ws_{a+b}) < l(w)", |t| {
            let (a, b, s) = (t.a, t.b, t.sum());
            let lhs = t.path(b, a, [B, B, Q]) && t.sum_length_cmp() == Less;
            let rhs = t.rs.is_simple(&t.rs.abs(a).unwrap())
                && all_equal(&[t.sgn(a), -t.sgn(b), t.sgn_w(a), -t.sgn_w(b)])
                && t.sum_edge() == Some(Q);
            iff(lhs, rhs, || {
                all_equal(&[
                    t.sgn(a),
                    -t.sgn(b),
                    -t.sgn(&s),
                    t.sgn_w(a),
                    -t.sgn_w(b),
                    t.sgn_w(&s),
                ])
            })
        }),
        ("B(a)B(b)Q(a), l(ws_{a+b}) > l(w)", |t| {
            let (a, b, s) = (t.a, t.b, t.sum());
            let lhs = t.path(a, b, [B, B, Q]) && t.sum_length_cmp() == Greater;
            let rhs = t.rs.is_simple(&t.rs.abs(a).unwrap())
                && t.sgn(a) == t.sgn_w(a)
                && t.sum_edge() == Some(B);
            iff(lhs, rhs, || {
                all_equal(&[t.sgn_w(a), t.sgn(a), -t.sgn_w(b)])
                    && all_equal(&[t.sgn_w(&s), t.sgn(&s), t.sgn(b)])
            })
        }),
        ("Q(a)B(b)B(a), l(ws_{a+b}) > l(w)", |t| {
            let (a, b, s) = (t.a, t.b, t.sum());
            let lhs = t.path(a, b, [Q, B, B]) && t.sum_length_cmp() == Greater;
            let rhs = t.rs.is_simple(&t.rs.abs(a).unwrap())
                && t.sgn(a) == t.sgn_w(b)
                && t.sum_edge() == Some(B);
            iff(lhs, rhs, || {
                all_equal(&[t.sgn_w(a), -t.sgn(a), -t.sgn_w(b)])
                    && all_equal(&[t.sgn_w(&s), t.sgn(&s), t.sgn(b)])
            })
        }),
        ("no Q(a)B(b)Q(a)", |t| {
            if t.path(t.a, t.b, [Q, B, Q]) {
                Some(false)
            } else {
                None
            }
        }),
        ("B(a)Q(b)Q(a) iff Q(b)Q(a)B(b)", |t| {
            let (a, b, s) = (t.a, t.b, t.sum());
            let lhs = t.path(a, b, [B, Q, Q]);
            let rhs = t.path(b, a, [Q, Q, B]);
            iff(lhs, rhs, || {
                all_equal(&[
                    t.sgn(a),
                    t.sgn(b),
                    t.sgn(&s),
                    t.sgn_w(a),
                    -t.sgn_w(b),
                    -t.sgn_w(&s),
                ])
            })
        }),
        ("B(a)B(b)B(a) iff B(b)B(a)B(b)", |t| {
            let (a, b, s) = (t.a, t.b, t.sum());
            let lhs = t.path(a, b, [B, B, B]);
            let rhs = t.path(b, a, [B, B, B]);
            iff(lhs, rhs, || {
                all_equal(&[
                    t.sgn(a),
                    t.sgn(b),
                    t.sgn(&s),
                    t.sgn_w(a),
                    t.sgn_w(b),
                    t.sgn_w(&s),
                ])
            })
        }),
    ]
}

/// Checks the ten rank-two path lemmas over every `w` and every ordered pair
/// of roots `(alpha, beta)` with `(alpha, beta) = -1`.
pub fn verify_qbg_lemmas(rs: &RootSystem, guard: u128) -> Result<Vec<LemmaReport>> {
    let group = rs.enumerate_group(guard)?;
    let roots = rs.roots();
    let pairs: Vec<(&Root, &Root)> = roots
        .iter()
        .flat_map(|a| roots.iter().map(move |b| (a, b)))
        .filter(|(a, b)| rs.pair_root_coroot(a, b) == -1)
        .collect();
    let checks = lemma_checks();
    let mut reports: Vec<LemmaReport> = checks
        .iter()
        .map(|(name, _)| LemmaReport {
            name,
            checked: 0,
            occurrences: 0,
            violations: Vec::new(),
        })
        .collect();
    for w in &group {
        for &(a, b) in &pairs {
            let t = Triple { rs, w, a, b };
            for ((_, check), report) in checks.iter().zip(reports.iter_mut()) {
                report.checked += 1;
                match check(&t) {
                    None => {}
                    Some(true) => report.occurrences += 1,
                    Some(false) => report.violations.push(t.describe()),
                }
            }
        }
    }
    Ok(reports)
}
