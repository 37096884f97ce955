//! Reference data for `e^{varpi_1 + varpi_2} [O_{w0}]` in type A2 along the
//! path `(theta, alpha_2, theta, alpha_1)`, and a checker that recomputes
//! the whole instance and compares it with the data.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::alcove::{parse_labels, AlcovePath};
use crate::chevalley::walk_class;
use crate::error::Result;
use crate::kexpr::{ClassKey, KExpression, LaurentPoly};
use crate::lattice::{Family, Root, RootSystem, Weight};
use crate::walks::{decorate, enumerate_walks, sign_forms, walk_stats, DEFAULT_MAX_WALKS};

const W0: &[usize] = &[1, 2, 1];
const E: &[usize] = &[];
const S1: &[usize] = &[1];
const S2: &[usize] = &[2];
const S12: &[usize] = &[1, 2];
const S21: &[usize] = &[2, 1];

pub const LEVELS: [i64; 4] = [1, 1, 2, 1];
pub const CO_LEVELS: [i64; 4] = [1, 0, 0, 0];

pub struct ReferenceWalk {
    /// Reduced words of `w_0, ..., w_4`.
    pub steps: [&'static [usize]; 5],
    pub special: &'static [usize],
}

/// The walks, numbered from 1 in this order.
pub const WALKS: [ReferenceWalk; 13] = [
    ReferenceWalk {
        steps: [W0, W0, W0, W0, W0],
        special: &[2, 4],
    },
    ReferenceWalk {
        steps: [W0, E, E, E, E],
        special: &[],
    },
    ReferenceWalk {
        steps: [W0, E, S2, S2, S2],
        special: &[],
    },
    ReferenceWalk {
        steps: [W0, E, S2, S21, S21],
        special: &[],
    },
    ReferenceWalk {
        steps: [W0, E, S2, S21, W0],
        special: &[],
    },
    ReferenceWalk {
        steps: [W0, E, S2, S2, S12],
        special: &[],
    },
    ReferenceWalk {
        steps: [W0, E, E, E, S1],
        special: &[],
    },
    ReferenceWalk {
        steps: [W0, W0, S12, S12, S12],
        special: &[3],
    },
    ReferenceWalk {
        steps: [W0, W0, S12, S1, S1],
        special: &[4],
    },
    ReferenceWalk {
        steps: [W0, W0, S12, S1, E],
        special: &[],
    },
    ReferenceWalk {
        steps: [W0, W0, W0, E, E],
        special: &[2],
    },
    ReferenceWalk {
        steps: [W0, W0, W0, E, S1],
        special: &[2],
    },
    ReferenceWalk {
        steps: [W0, W0, W0, W0, S21],
        special: &[2],
    },
];

/// One decorated walk and its term `sign q^deg [O_{end t_xi}(mu)]`.
pub struct ReferenceTerm {
    /// 1-based index into [`WALKS`].
    pub walk: usize,
    /// Values on the special steps, in step order.
    pub bits: &'static [u8],
    pub sign: i64,
    pub deg: i64,
    /// The quantum weight, which is also the translation part.
    pub qwt: [i64; 2],
    pub mu: [i64; 2],
}

const fn term(
    walk: usize,
    bits: &'static [u8],
    sign: i64,
    deg: i64,
    qwt: [i64; 2],
    mu: [i64; 2],
) -> ReferenceTerm {
    ReferenceTerm {
        walk,
        bits,
        sign,
        deg,
        qwt,
        mu,
    }
}

pub const TERMS: [ReferenceTerm; 21] = [
    term(1, &[0, 0], 1, 0, [0, 0], [-1, -1]),
    term(1, &[1, 0], -1, 1, [1, 0], [-2, 1]),
    term(1, &[0, 1], -1, 1, [0, 1], [1, -2]),
    term(1, &[1, 1], 1, 1, [1, 1], [0, 0]),
    term(2, &[], 1, 2, [1, 1], [1, 1]),
    term(3, &[], -1, 2, [1, 1], [1, 1]),
    term(4, &[], 1, 2, [1, 1], [1, 1]),
    term(5, &[], -1, 2, [1, 1], [1, 1]),
    term(6, &[], 1, 2, [1, 1], [1, 1]),
    // The only move of walk 7 after the quantum step is e -> s1 along the
    // positive label alpha_1, which contributes a factor -1.
    term(7, &[], -1, 2, [1, 1], [1, 1]),
    term(8, &[0], 1, 1, [1, 0], [-2, 1]),
    term(8, &[1], -1, 1, [1, 1], [0, 0]),
    term(9, &[0], 1, 1, [1, 1], [0, 0]),
    term(9, &[1], -1, 3, [2, 1], [-1, 2]),
    term(10, &[], 1, 3, [2, 1], [-1, 2]),
    term(11, &[0], 1, 1, [1, 1], [0, 0]),
    term(11, &[1], -1, 3, [2, 1], [-1, 2]),
    term(12, &[0], -1, 1, [1, 1], [0, 0]),
    term(12, &[1], 1, 3, [2, 1], [-1, 2]),
    term(13, &[0], 1, 1, [0, 1], [1, -2]),
    term(13, &[1], -1, 1, [1, 1], [0, 0]),
];

/// Walks 9 to 12 all have weight `w0^{-1}(varpi_1 + varpi_2)`.
pub const WEIGHT_OF_WALKS_9_TO_12: [i64; 2] = [-1, -1];

/// A decorated walk as `(walk, bits)`.
pub type DecoratedRef = (usize, &'static [u8]);

/// `(coefficient sign, q exponent, end, xi, mu)`.
pub type ExpansionRow = (i64, i64, &'static [usize], [i64; 2], [i64; 2]);

/// Pairs of decorated walks whose terms cancel.
pub const CANCELLATIONS: [(DecoratedRef, DecoratedRef); 3] = [
    ((10, &[]), (11, &[1])),
    ((9, &[0]), (12, &[0])),
    ((9, &[1]), (12, &[1])),
];

/// Terms of the final expansion.
pub const EXPANSION: [ExpansionRow; 15] = [
    (1, 0, W0, [0, 0], [-1, -1]),
    (1, 2, E, [1, 1], [1, 1]),
    (-1, 2, S2, [1, 1], [1, 1]),
    (-1, 2, S1, [1, 1], [1, 1]),
    (1, 2, S21, [1, 1], [1, 1]),
    (1, 2, S12, [1, 1], [1, 1]),
    (-1, 2, W0, [1, 1], [1, 1]),
    (1, 1, S21, [0, 1], [1, -2]),
    (-1, 1, W0, [0, 1], [1, -2]),
    (1, 1, S12, [1, 0], [-2, 1]),
    (-1, 1, W0, [1, 0], [-2, 1]),
    (1, 1, E, [1, 1], [0, 0]),
    (-1, 1, S21, [1, 1], [0, 0]),
    (-1, 1, S12, [1, 1], [0, 0]),
    (1, 1, W0, [1, 1], [0, 0]),
];

pub fn system() -> RootSystem {
    RootSystem::of(Family::A, 2).expect("A2 is valid")
}

pub fn lambda() -> Weight {
    Weight(vec![1, 1])
}

pub fn path(rs: &RootSystem) -> Result<AlcovePath> {
    AlcovePath::new(rs, lambda(), parse_labels(rs, "t,a2,t,a1")?)
}

fn key(rs: &RootSystem, end: &[usize], xi: [i64; 2], mu: [i64; 2]) -> Result<ClassKey> {
    Ok(ClassKey::new(
        rs,
        &rs.element_from_word(end)?,
        Root(xi.to_vec()),
        Weight(mu.to_vec()),
    ))
}

pub fn reference_term_class(rs: &RootSystem, t: &ReferenceTerm) -> Result<ClassKey> {
    let end = WALKS[t.walk - 1].steps[4];
    key(rs, end, t.qwt, t.mu)
}

/// The reference expansion as an expression.
pub fn expansion(rs: &RootSystem) -> Result<KExpression> {
    let mut out = KExpression::new();
    for &(sign, deg, end, xi, mu) in &EXPANSION {
        out.add_term(key(rs, end, xi, mu)?, &LaurentPoly::monomial(sign, deg));
    }
    Ok(out)
}

/// Recomputed data with a list of every disagreement with the reference.
#[derive(Debug, Clone)]
pub struct ExampleReport {
    pub lines: Vec<String>,
    pub mismatches: Vec<String>,
    pub walk_count: usize,
    pub decorated_count: usize,
    pub expression: KExpression,
}

impl ExampleReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

struct Computed {
    sign: i64,
    deg: i64,
    qwt: Root,
    wt: Weight,
    class: ClassKey,
}

/// Recomputes the instance from scratch and compares every listed value.
pub fn check(rs: &RootSystem) -> Result<ExampleReport> {
    let path = path(rs)?;
    let mut lines = Vec::new();
    let mut bad = Vec::new();

    if path.levels() != LEVELS {
        bad.push(format!("levels {:?}, expected {:?}", path.levels(), LEVELS));
    }
    if path.co_levels() != CO_LEVELS {
        bad.push(format!(
            "co-levels {:?}, expected {:?}",
            path.co_levels(),
            CO_LEVELS
        ));
    }
    lines.push(format!(
        "path [{}] levels {:?} co-levels {:?}",
        path.to_tokens(rs),
        path.levels(),
        path.co_levels()
    ));

    let w0 = rs.longest_element();
    let walks = enumerate_walks(rs, &path, &w0, DEFAULT_MAX_WALKS)?;
    let reference_steps: Vec<Vec<crate::WeylElement>> = WALKS
        .iter()
        .map(|r| {
            r.steps
                .iter()
                .map(|s| rs.element_from_word(s))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;

    // (walk number, bits) -> computed values
    let mut computed: BTreeMap<(usize, Vec<u8>), Computed> = BTreeMap::new();
    let mut expression = KExpression::new();
    let mut decorated_count = 0;
    let mut seen = vec![false; WALKS.len()];
    for walk in &walks {
        let number = reference_steps
            .iter()
            .position(|r| r.as_slice() == walk.steps());
        let shown: Vec<String> = walk.steps().iter().map(|x| rs.word_string(x)).collect();
        let Some(n) = number else {
            bad.push(format!("unexpected walk ({})", shown.join(" | ")));
            continue;
        };
        seen[n] = true;
        let r = &WALKS[n];
        if walk.special_steps() != r.special {
            bad.push(format!(
                "walk {}: special steps {:?}, expected {:?}",
                n + 1,
                walk.special_steps(),
                r.special
            ));
        }
        lines.push(format!(
            "walk {:>2}: ({})  S = {:?}",
            n + 1,
            shown.join(" | "),
            walk.special_steps()
        ));
        for dw in decorate(walk) {
            decorated_count += 1;
            let stats = walk_stats(rs, &path, &dw, false)?;
            let forms = sign_forms(rs, &path, &dw);
            if forms.iter().any(|&s| s != stats.sign) {
                bad.push(format!(
                    "walk {} {}: sign forms {:?}",
                    n + 1,
                    dw.decoration_string(),
                    forms
                ));
            }
            let class = walk_class(rs, &stats);
            expression.add_term(class.clone(), &LaurentPoly::monomial(stats.sign, stats.deg));
            computed.insert(
                (n + 1, dw.bits.clone()),
                Computed {
                    sign: stats.sign,
                    deg: stats.deg,
                    qwt: stats.qwt,
                    wt: stats.wt,
                    class,
                },
            );
        }
    }
    for (i, s) in seen.iter().enumerate() {
        if !s {
            bad.push(format!("walk {} was not produced", i + 1));
        }
    }
    if walks.len() != WALKS.len() {
        bad.push(format!("{} walks, expected {}", walks.len(), WALKS.len()));
    }
    if decorated_count != TERMS.len() {
        bad.push(format!(
            "{decorated_count} decorated walks, expected {}",
            TERMS.len()
        ));
    }
    lines.push(format!(
        "{} walks, {} decorated walks",
        walks.len(),
        decorated_count
    ));

    for t in &TERMS {
        let label = format!("walk {} bits {:?}", t.walk, t.bits);
        let Some(c) = computed.get(&(t.walk, t.bits.to_vec())) else {
            bad.push(format!("{label}: missing"));
            continue;
        };
        let expected_class = reference_term_class(rs, t)?;
        let mut line = format!("{label:<22} sign {:+} qwt {} deg {}", c.sign, c.qwt, c.deg);
        if (9..=12).contains(&t.walk) {
            let _ = write!(line, " wt {}", c.wt);
            if c.wt.0 != WEIGHT_OF_WALKS_9_TO_12 {
                bad.push(format!(
                    "{label}: wt {}, expected {:?}",
                    c.wt, WEIGHT_OF_WALKS_9_TO_12
                ));
            }
        }
        lines.push(line);
        if c.sign != t.sign || c.deg != t.deg || c.qwt.0 != t.qwt || c.class != expected_class {
            bad.push(format!(
                "{label}: got sign {} deg {} qwt {} class ({:?}, {}, {}), expected sign {} deg {} qwt {:?} class ({:?}, {}, {})",
                c.sign, c.deg, c.qwt, c.class.word, c.class.xi, c.class.mu,
                t.sign, t.deg, t.qwt, expected_class.word, expected_class.xi, expected_class.mu
            ));
        }
    }

    for ((wa, ba), (wb, bb)) in &CANCELLATIONS {
        let (Some(x), Some(y)) = (
            computed.get(&(*wa, ba.to_vec())),
            computed.get(&(*wb, bb.to_vec())),
        ) else {
            bad.push(format!(
                "cancellation walk {wa} {ba:?} + walk {wb} {bb:?}: term missing"
            ));
            continue;
        };
        let cancels = x.class == y.class && x.deg == y.deg && x.sign == -y.sign;
        lines.push(format!(
            "G(walk {wa}, {ba:?}) + G(walk {wb}, {bb:?}) = 0: {}",
            if cancels { "yes" } else { "no" }
        ));
        if !cancels {
            bad.push(format!(
                "walk {wa} {ba:?} and walk {wb} {bb:?} do not cancel"
            ));
        }
    }

    let reference = expansion(rs)?;
    if expression != reference {
        let diff = expression.add(&reference.negate());
        bad.push(format!(
            "expansion differs from the reference in {} classes",
            diff.len()
        ));
    }
    if expression.len() != EXPANSION.len() {
        bad.push(format!(
            "{} terms, expected {}",
            expression.len(),
            EXPANSION.len()
        ));
    }
    lines.push(format!("{} terms after cancellation", expression.len()));

    Ok(ExampleReport {
        lines,
        mismatches: bad,
        walk_count: walks.len(),
        decorated_count,
        expression,
    })
}
