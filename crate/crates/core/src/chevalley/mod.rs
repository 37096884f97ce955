//! The inverse Chevalley expansion of `e^lambda [O_w]` over an alcove path,
//! multiplication of a single twisted class by `e^mu`, and minuscule
//! decompositions of weights.

mod knos;
pub mod verify;

pub use knos::{knos_minuscule, KnosExpansion};

use std::collections::{HashSet, VecDeque};

use crate::alcove::AlcovePath;
use crate::error::{Error, Result};
use crate::kexpr::{ClassKey, KExpression, LaurentPoly};
use crate::lattice::{RootSystem, Weight};
use crate::walks::{decorate, enumerate_walks, walk_stats, WalkStats, DEFAULT_MAX_WALKS};
use crate::weyl::WeylElement;

/// Default node budget for [`minuscule_decompose`].
pub const DEFAULT_DECOMPOSITION_BUDGET: usize = 2_000_000;

/// Input of [`inverse_chevalley`]; the weight is the endpoint of `path`.
#[derive(Debug, Clone, Copy)]
pub struct ExpansionRequest<'a> {
    pub rs: &'a RootSystem,
    pub w: &'a WeylElement,
    pub path: &'a AlcovePath,
    pub allow_conjectural: bool,
    pub max_walks: usize,
}

impl<'a> ExpansionRequest<'a> {
    pub fn new(rs: &'a RootSystem, w: &'a WeylElement, path: &'a AlcovePath) -> Self {
        ExpansionRequest {
            rs,
            w,
            path,
            allow_conjectural: false,
            max_walks: DEFAULT_MAX_WALKS,
        }
    }

    pub fn allow_conjectural(mut self, allow: bool) -> Self {
        self.allow_conjectural = allow;
        self
    }

    pub fn max_walks(mut self, limit: usize) -> Self {
        self.max_walks = limit;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    pub expression: KExpression,
    pub walk_count: usize,
    pub decorated_count: usize,
    /// Set when the type lies outside the proved range (E8).
    pub conjectural: bool,
}

/// Fails for E8 unless the caller opted in; returns whether the result is
/// conjectural.
pub fn conjectural_gate(rs: &RootSystem, allow: bool) -> Result<bool> {
    let ct = rs.cartan_type();
    if ct.is_conjectural() {
        if allow {
            Ok(true)
        } else {
            Err(Error::Conjectural(ct.to_string()))
        }
    } else {
        Ok(false)
    }
}

/// The twisted class `[O_{end t_qwt}(-w0 wt - w0 qwt)]` of a decorated walk.
pub fn walk_class(rs: &RootSystem, stats: &WalkStats) -> ClassKey {
    let w0 = rs.longest_element();
    let shift = &stats.wt + &rs.root_to_weight(&stats.qwt);
    let mu = -w0.act_on_weight(&shift);
    ClassKey::new(rs, &stats.end, stats.qwt_co.clone(), mu)
}

/// Sums `sign q^deg [class]` over all decorated quantum walks from `w`.
pub fn inverse_chevalley(req: &ExpansionRequest) -> Result<Expansion> {
    let rs = req.rs;
    let conjectural = conjectural_gate(rs, req.allow_conjectural)?;
    let walks = enumerate_walks(rs, req.path, req.w, req.max_walks)?;
    let mut expression = KExpression::new();
    let mut decorated_count = 0usize;
    for walk in &walks {
        for dw in decorate(walk) {
            decorated_count += 1;
            let stats = walk_stats(rs, req.path, &dw, false)?;
            expression.add_term(
                walk_class(rs, &stats),
                &LaurentPoly::monomial(stats.sign, stats.deg),
            );
        }
    }
    Ok(Expansion {
        expression,
        walk_count: walks.len(),
        decorated_count,
        conjectural,
    })
}

/// `e^mu [O_{v t_xi}(nu)]` where `xi_path` ends at `mu`: every decorated
/// walk from `v` contributes
/// `sign q^{deg + <wt + qwt, xi>} [O_{end t_{xi + qwt}}(nu - w0 wt - w0 qwt)]`.
pub fn scalar_times_class(
    rs: &RootSystem,
    key: &ClassKey,
    xi_path: &AlcovePath,
    max_walks: usize,
) -> Result<KExpression> {
    let v = key.element(rs)?;
    let walks = enumerate_walks(rs, xi_path, &v, max_walks)?;
    let mut out = KExpression::new();
    for walk in &walks {
        for dw in decorate(walk) {
            let stats = walk_stats(rs, xi_path, &dw, false)?;
            let base = walk_class(rs, &stats);
            let shift = &stats.wt + &rs.root_to_weight(&stats.qwt);
            let deg = stats.deg + rs.pair(&shift, &key.xi);
            let class = ClassKey {
                word: base.word,
                xi: &key.xi + &base.xi,
                mu: &key.mu + &base.mu,
            };
            out.add_term(class, &LaurentPoly::monomial(stats.sign, deg));
        }
    }
    Ok(out)
}

/// Extends [`scalar_times_class`] linearly over an expression.
pub fn scalar_times_expression(
    rs: &RootSystem,
    expr: &KExpression,
    xi_path: &AlcovePath,
    max_walks: usize,
) -> Result<KExpression> {
    let mut out = KExpression::new();
    for (key, coeff) in expr.iter() {
        let product = scalar_times_class(rs, key, xi_path, max_walks)?;
        out.add_assign(&product.scale(coeff));
    }
    Ok(out)
}

/// The full Weyl orbit of `nu`, sorted.
pub fn weyl_orbit(rs: &RootSystem, nu: &Weight) -> Vec<Weight> {
    let mut seen: HashSet<Weight> = HashSet::from([nu.clone()]);
    let mut queue = VecDeque::from([nu.clone()]);
    while let Some(x) = queue.pop_front() {
        for i in 1..=rs.rank() {
            let y = rs.reflect_weight(&rs.simple_root(i), &x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<Weight> = seen.into_iter().collect();
    out.sort();
    out
}

/// Every weight conjugate to a minuscule fundamental weight, sorted.
pub fn minuscule_weights(rs: &RootSystem) -> Vec<Weight> {
    let mut out: Vec<Weight> = rs
        .cartan_type()
        .minuscule_nodes()
        .into_iter()
        .flat_map(|k| weyl_orbit(rs, &rs.fundamental_weight(k)))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Writes `lambda` as a sum of as few minuscule weights as possible; among
/// shortest decompositions the lexicographically smallest sorted one wins.
pub fn minuscule_decompose(rs: &RootSystem, lambda: &Weight, budget: usize) -> Result<Vec<Weight>> {
    rs.check_dim(&lambda.0)?;
    let parts = minuscule_weights(rs);
    if parts.is_empty() {
        return Err(Error::Unsupported(rs.cartan_type().to_string()));
    }
    let mut nodes = 0usize;
    // Each minuscule weight changes every coordinate by at most one.
    let lower = lambda
        .0
        .iter()
        .map(|c| c.unsigned_abs() as usize)
        .max()
        .unwrap_or(0);
    for depth in lower.. {
        let mut chosen = Vec::with_capacity(depth);
        match search(&parts, lambda, depth, 0, &mut chosen, &mut nodes, budget) {
            Some(true) => return Ok(chosen.into_iter().map(|i| parts[i].clone()).collect()),
            Some(false) => {}
            None => return Err(Error::DecompositionBudget(lambda.to_string())),
        }
    }
    unreachable!("the depth loop only exits by returning")
}

fn search(
    parts: &[Weight],
    rest: &Weight,
    depth: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    nodes: &mut usize,
    budget: usize,
) -> Option<bool> {
    *nodes += 1;
    if *nodes > budget {
        return None;
    }
    if depth == 0 {
        return Some(rest.is_zero());
    }
    if rest.0.iter().any(|c| c.unsigned_abs() as usize > depth) {
        return Some(false);
    }
    for i in from..parts.len() {
        chosen.push(i);
        if search(
            parts,
            &(rest - &parts[i]),
            depth - 1,
            i,
            chosen,
            nodes,
            budget,
        )? {
            return Some(true);
        }
        chosen.pop();
    }
    Some(false)
}
