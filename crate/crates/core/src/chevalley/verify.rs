//! Drivers that check structural properties of the expansion: independence
//! of the alcove path, additivity in the weight, and agreement with the
//! minuscule formula.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{inverse_chevalley, knos_minuscule, scalar_times_expression, ExpansionRequest};
use crate::alcove::{minuscule_path, reduced_path, AlcovePath};
use crate::error::Result;
use crate::kexpr::KExpression;
use crate::lattice::{RootSystem, Weight};
use crate::weyl::WeylElement;

/// Outcome of a batch of comparisons. Failures are listed in case order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SweepReport {
    fn new(name: impl Into<String>) -> Self {
        SweepReport {
            name: name.into(),
            cases: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn absorb(&mut self, other: SweepReport) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
    }

    /// Runs `check` for every element in parallel and merges the reports in
    /// input order.
    fn merge_over<T: Sync>(
        name: &str,
        items: &[T],
        check: impl Fn(&T) -> Result<SweepReport> + Sync + Send,
    ) -> Result<SweepReport> {
        let parts: Vec<Result<SweepReport>> = items.par_iter().map(check).collect();
        let mut out = SweepReport::new(name);
        for part in parts {
            out.absorb(part?);
        }
        Ok(out)
    }
}

fn expand(
    rs: &RootSystem,
    w: &WeylElement,
    path: &AlcovePath,
    max_walks: usize,
) -> Result<KExpression> {
    let req = ExpansionRequest::new(rs, w, path)
        .allow_conjectural(true)
        .max_walks(max_walks);
    Ok(inverse_chevalley(&req)?.expression)
}

fn describe_difference(rs: &RootSystem, lhs: &KExpression, rhs: &KExpression) -> String {
    let diff = lhs.add(&rhs.negate());
    let first = diff
        .iter()
        .next()
        .map(|(k, c)| {
            format!(
                "first differing class w={} xi={} mu={} coeff {c}",
                rs.word_string(&k.element(rs).expect("stored word")),
                k.xi,
                k.mu
            )
        })
        .unwrap_or_default();
    format!("{} vs {} terms; {first}", lhs.len(), rhs.len())
}

/// Expands `e^lambda [O_w]` along every path and compares each result with
/// the first.
pub fn verify_path_invariance(
    rs: &RootSystem,
    w: &WeylElement,
    paths: &[AlcovePath],
    max_walks: usize,
) -> Result<SweepReport> {
    let mut report = SweepReport::new("path invariance");
    let Some((first, rest)) = paths.split_first() else {
        return Ok(report);
    };
    let base = expand(rs, w, first, max_walks)?;
    for p in rest {
        report.cases += 1;
        if p.lambda() != first.lambda() {
            report.failures.push(format!(
                "path {} ends at {} instead of {}",
                p.to_tokens(rs),
                p.lambda(),
                first.lambda()
            ));
            continue;
        }
        let other = expand(rs, w, p, max_walks)?;
        if other != base {
            report.failures.push(format!(
                "lambda={} w={} path [{}] vs [{}]: {}",
                first.lambda(),
                rs.word_string(w),
                p.to_tokens(rs),
                first.to_tokens(rs),
                describe_difference(rs, &other, &base)
            ));
        }
    }
    Ok(report)
}

/// Compares `e^mu (e^lambda [O_w])`, computed term by term, with the
/// expansion along the concatenated path.
pub fn verify_additivity(
    rs: &RootSystem,
    w: &WeylElement,
    gamma: &AlcovePath,
    xi: &AlcovePath,
    max_walks: usize,
) -> Result<SweepReport> {
    let mut report = SweepReport::new("additivity");
    report.cases = 1;
    let first = expand(rs, w, gamma, max_walks)?;
    let composite = scalar_times_expression(rs, &first, xi, max_walks)?;
    let direct = expand(rs, w, &gamma.concatenate(xi), max_walks)?;
    if composite != direct {
        report.failures.push(format!(
            "lambda={} mu={} w={}: {}",
            gamma.lambda(),
            xi.lambda(),
            rs.word_string(w),
            describe_difference(rs, &composite, &direct)
        ));
    }
    Ok(report)
}

/// The geometric reduced path for `lambda`, every single Yang-Baxter move
/// of it, one composition of two moves, and one insertion of a
/// back-and-forth pair in the middle.
pub fn invariance_variants(rs: &RootSystem, lambda: &Weight) -> Result<Vec<AlcovePath>> {
    let base = reduced_path(rs, lambda)?;
    let mut out = vec![base.clone()];
    let sites = base.yb_sites(rs);
    for &s in &sites {
        out.push(base.yang_baxter(rs, s)?);
    }
    if let Some(&s) = sites.first() {
        let once = base.yang_baxter(rs, s)?;
        for t in once.yb_sites(rs) {
            let twice = once.yang_baxter(rs, t)?;
            if twice != base {
                out.push(twice);
                break;
            }
        }
    }
    let middle = base.len() / 2;
    if let Some(gamma) = base.wall_directions(rs, middle).first() {
        out.push(base.insert_deletion_pair(rs, middle, gamma)?);
    }
    Ok(out)
}

/// All weights with every coordinate in `-bound..=bound`.
pub fn weights_in_box(rank: usize, bound: i64) -> Vec<Weight> {
    let mut out = vec![Weight(Vec::new())];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-bound..=bound).map(move |c| {
                    let mut next = v.0.clone();
                    next.push(c);
                    Weight(next)
                })
            })
            .collect();
    }
    out
}

/// Elements of `group`, or a seeded sample of `limit` of them.
pub fn sample_elements(group: &[WeylElement], limit: Option<usize>, seed: u64) -> Vec<WeylElement> {
    match limit {
        Some(n) if n < group.len() => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut picked: Vec<usize> = (0..group.len()).collect::<Vec<_>>();
            picked.shuffle(&mut rng);
            picked.truncate(n);
            picked.sort_unstable();
            picked.into_iter().map(|i| group[i].clone()).collect()
        }
        _ => group.to_vec(),
    }
}

/// Path invariance over the variants of each weight, for each `w`.
pub fn invariance_sweep(
    rs: &RootSystem,
    weights: &[Weight],
    ws: &[WeylElement],
    max_walks: usize,
) -> Result<SweepReport> {
    let variants: Vec<Vec<AlcovePath>> = weights
        .iter()
        .map(|l| invariance_variants(rs, l))
        .collect::<Result<_>>()?;
    let cases: Vec<(&Vec<AlcovePath>, &WeylElement)> = variants
        .iter()
        .flat_map(|v| ws.iter().map(move |w| (v, w)))
        .collect();
    SweepReport::merge_over("path invariance", &cases, |(paths, w)| {
        verify_path_invariance(rs, w, paths, max_walks)
    })
}

/// Agreement of the general formula on the minuscule path with the
/// minuscule formula, for each minuscule weight and each `w`.
pub fn minuscule_sweep(
    rs: &RootSystem,
    lambdas: &[Weight],
    ws: &[WeylElement],
    max_walks: usize,
) -> Result<SweepReport> {
    let paths: Vec<AlcovePath> = lambdas
        .iter()
        .map(|l| minuscule_path(rs, l))
        .collect::<Result<_>>()?;
    let cases: Vec<(&AlcovePath, &WeylElement)> = paths
        .iter()
        .flat_map(|p| ws.iter().map(move |w| (p, w)))
        .collect();
    SweepReport::merge_over("minuscule oracle", &cases, |&(path, w)| {
        let mut report = SweepReport::new("minuscule oracle");
        report.cases = 1;
        let req = ExpansionRequest::new(rs, w, path).max_walks(max_walks);
        let main = inverse_chevalley(&req)?;
        let oracle = knos_minuscule(rs, path.lambda(), w, max_walks)?;
        if main.walk_count != oracle.walk_count {
            report.failures.push(format!(
                "lambda={} w={}: {} walks vs {} from the minuscule formula",
                path.lambda(),
                rs.word_string(w),
                main.walk_count,
                oracle.walk_count
            ));
        } else if main.expression != oracle.expression {
            report.failures.push(format!(
                "lambda={} w={}: {}",
                path.lambda(),
                rs.word_string(w),
                describe_difference(rs, &main.expression, &oracle.expression)
            ));
        }
        Ok(report)
    })
}

/// Additivity for every pair of weights and every `w`, using geometric
/// reduced paths for both factors.
pub fn additivity_sweep(
    rs: &RootSystem,
    pairs: &[(Weight, Weight)],
    ws: &[WeylElement],
    max_walks: usize,
) -> Result<SweepReport> {
    let paths: Vec<(AlcovePath, AlcovePath)> = pairs
        .iter()
        .map(|(l, m)| Ok((reduced_path(rs, l)?, reduced_path(rs, m)?)))
        .collect::<Result<_>>()?;
    let cases: Vec<(&(AlcovePath, AlcovePath), &WeylElement)> = paths
        .iter()
        .flat_map(|p| ws.iter().map(move |w| (p, w)))
        .collect();
    SweepReport::merge_over("additivity", &cases, |&((g, x), w)| {
        verify_additivity(rs, w, g, x, max_walks)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alcove::parse_labels;
    use crate::chevalley::minuscule_weights;
    use crate::lattice::Family;
    use crate::walks::DEFAULT_MAX_WALKS;
    use crate::weyl::DEFAULT_GROUP_GUARD;

    fn a2() -> RootSystem {
        RootSystem::of(Family::A, 2).unwrap()
    }

    #[test]
    fn worked_example_paths_agree() {
        let rs = a2();
        let lambda = Weight(vec![1, 1]);
        let gamma =
            AlcovePath::new(&rs, lambda.clone(), parse_labels(&rs, "t,a2,t,a1").unwrap()).unwrap();
        let swapped =
            AlcovePath::new(&rs, lambda.clone(), parse_labels(&rs, "t,a1,t,a2").unwrap()).unwrap();
        let inserted = gamma
            .insert_deletion_pair(&rs, 2, &-rs.simple_root(2))
            .unwrap();
        let auto = reduced_path(&rs, &lambda).unwrap();
        let w0 = rs.longest_element();
        let report = verify_path_invariance(
            &rs,
            &w0,
            &[gamma, swapped, inserted, auto],
            DEFAULT_MAX_WALKS,
        )
        .unwrap();
        assert_eq!(report.cases, 3);
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn variants_are_distinct_paths_to_the_same_weight() {
        let rs = a2();
        let lambda = Weight(vec![1, 1]);
        let v = invariance_variants(&rs, &lambda).unwrap();
        assert!(v.len() >= 3);
        assert!(v.iter().all(|p| p.lambda() == &lambda));
        assert!(!v.last().unwrap().is_reduced(&rs));
    }

    #[test]
    fn additivity_varpi1_varpi2() {
        let rs = a2();
        let g = reduced_path(&rs, &rs.fundamental_weight(1)).unwrap();
        let x = reduced_path(&rs, &rs.fundamental_weight(2)).unwrap();
        for w in rs.enumerate_group(DEFAULT_GROUP_GUARD).unwrap() {
            let r = verify_additivity(&rs, &w, &g, &x, DEFAULT_MAX_WALKS).unwrap();
            assert!(r.passed(), "{:?}", r.failures);
        }
        let empty = AlcovePath::empty(&rs);
        let r = verify_additivity(&rs, &rs.identity(), &empty, &empty, DEFAULT_MAX_WALKS).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn oracle_sweep_a2() {
        let rs = a2();
        let group = rs.enumerate_group(DEFAULT_GROUP_GUARD).unwrap();
        let r = minuscule_sweep(&rs, &minuscule_weights(&rs), &group, DEFAULT_MAX_WALKS).unwrap();
        assert_eq!(r.cases, 36);
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn box_and_sampling() {
        assert_eq!(weights_in_box(2, 1).len(), 9);
        let rs = a2();
        let group = rs.enumerate_group(DEFAULT_GROUP_GUARD).unwrap();
        let a = sample_elements(&group, Some(3), 7);
        assert_eq!(a, sample_elements(&group, Some(3), 7));
        assert_eq!(a.len(), 3);
        assert_eq!(sample_elements(&group, None, 0).len(), 6);
    }
}
