//! The inverse Chevalley formula for minuscule weights, written
//! independently of the walk statistics in [`crate::walks`] so that it can
//! serve as an oracle for the general formula.

use crate::alcove::minuscule_data;
use crate::error::{Error, Result};
use crate::kexpr::{ClassKey, KExpression, LaurentPoly};
use crate::lattice::{Family, Root, RootSystem, Weight};
use crate::weyl::WeylElement;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnosExpansion {
    pub expression: KExpression,
    pub walk_count: usize,
    pub decorated_count: usize,
}

/// Applies `s_{word[from]}`, then `s_{word[from + 1]}`, and so on.
fn apply_simple_reflections(rs: &RootSystem, word: &[usize], mut v: Root) -> Root {
    for &i in word {
        v = rs.reflect_root(&rs.simple_root(i), &v);
    }
    v
}

/// The root sequence `(beta_a, ..., beta_1, zeta_1, ..., zeta_b)` and `a`.
fn eta_sequence(rs: &RootSystem, lambda: &Weight) -> Result<(Vec<Root>, usize)> {
    let (k, x) = minuscule_data(rs, lambda)?;
    let w0 = rs.longest_element();
    let target = w0.act_on_weight(&rs.fundamental_weight(k));
    let yx = rs.min_coset_rep_to(&target, k)?;
    let y = yx.mul(&x.inverse());

    // x = s_{j_a} ... s_{j_1}, so j is the reversed canonical word.
    let mut j = rs.canonical_reduced_word(&x);
    j.reverse();
    let a = j.len();
    // beta_r = s_{j_a} ... s_{j_{r+1}} alpha_{j_r}; the innermost reflection
    // is s_{j_{r+1}}.
    let mut eta: Vec<Root> = (1..=a)
        .rev()
        .map(|r| apply_simple_reflections(rs, &j[r..], rs.simple_root(j[r - 1])))
        .collect();

    // y = s_{i_1} ... s_{i_b}; zeta_s = s_{i_b} ... s_{i_{s+1}} alpha_{i_s}.
    let i = rs.canonical_reduced_word(&y);
    let b = i.len();
    eta.extend((1..=b).map(|s| apply_simple_reflections(rs, &i[s..], rs.simple_root(i[s - 1]))));

    if eta.iter().any(|r| !r.is_positive() || !rs.is_root(r)) {
        return Err(Error::Internal(format!(
            "non-positive root in the sequence for {lambda}"
        )));
    }
    Ok((eta, a))
}

fn is_qbg_step(rs: &RootSystem, from: &WeylElement, to: &WeylElement, eta: &Root) -> bool {
    let label = from.inverse_act_on_root(eta);
    let height = label.height().abs();
    let (l0, l1) = (rs.length(from) as i64, rs.length(to) as i64);
    l1 == l0 + 1 || l1 == l0 - 2 * height + 1
}

fn enumerate(
    rs: &RootSystem,
    eta: &[Root],
    current: &mut Vec<WeylElement>,
    out: &mut Vec<Vec<WeylElement>>,
    max_walks: usize,
) -> Result<()> {
    let t = current.len();
    if t == eta.len() + 1 {
        if out.len() == max_walks {
            return Err(Error::WalkGuard { limit: max_walks });
        }
        out.push(current.clone());
        return Ok(());
    }
    let prev = current[t - 1].clone();
    current.push(prev.clone());
    enumerate(rs, eta, current, out, max_walks)?;
    current.pop();
    let next = rs.reflection(&eta[t - 1]).mul(&prev);
    if is_qbg_step(rs, &prev, &next, &eta[t - 1]) {
        current.push(next);
        enumerate(rs, eta, current, out, max_walks)?;
        current.pop();
    }
    Ok(())
}

/// `e^lambda [O_w]` for a minuscule `lambda`, summed over walks along the
/// root sequence built from reduced words of the minimal `x` with
/// `lambda = x varpi_k` and of the complementary `y`.
pub fn knos_minuscule(
    rs: &RootSystem,
    lambda: &Weight,
    w: &WeylElement,
    max_walks: usize,
) -> Result<KnosExpansion> {
    let ct = rs.cartan_type();
    if ct.family() == Family::E && ct.rank() == 8 {
        return Err(Error::Unsupported(ct.to_string()));
    }
    let (eta, a) = eta_sequence(rs, lambda)?;
    let m = eta.len();
    let mut walks = Vec::new();
    enumerate(rs, &eta, &mut vec![w.clone()], &mut walks, max_walks)?;

    let w0 = rs.longest_element();
    let rho = rs.rho();
    let mut expression = KExpression::new();
    let mut decorated_count = 0usize;
    for walk in &walks {
        let len: Vec<usize> = walk.iter().map(|x| rs.length(x)).collect();
        let special: Vec<usize> = (1..=m)
            .filter(|&t| {
                if walk[t] != walk[t - 1] {
                    return false;
                }
                let p = rs.pair(&rho, &walk[t - 1].inverse_act_on_root(&eta[t - 1]));
                if t <= a {
                    p == 1
                } else {
                    p == -1
                }
            })
            .collect();

        for mask in 0u64..(1u64 << special.len()) {
            decorated_count += 1;
            let bit = |t: usize| -> i64 {
                special
                    .iter()
                    .position(|&s| s == t)
                    .map_or(0, |j| ((mask >> j) & 1) as i64)
            };
            let mut sign = if mask.count_ones() % 2 == 1 { -1 } else { 1 };
            let mut wt = Root::zero(rs.rank());
            let mut deg = 0i64;
            let wa_inv_lambda = walk[a].inverse_act_on_weight(lambda);
            let twist = -w0.act_on_weight(&wa_inv_lambda);
            for t in 1..=m {
                if t == a + 1 {
                    deg += rs.pair(&twist, &wt);
                }
                let down = len[t] < len[t - 1];
                let up = len[t] > len[t - 1];
                if (t <= a && down) || (t > a && up) {
                    sign = -sign;
                }
                let v = w0.act_on_root(&walk[t - 1].inverse_act_on_root(&eta[t - 1]));
                let is_special = special.contains(&t);
                let d = if is_special && t <= a {
                    -bit(t) * &v
                } else if is_special {
                    bit(t) * &v
                } else if down {
                    v
                } else {
                    Root::zero(rs.rank())
                };
                let dd = rs.pair_root_coroot(&d, &d);
                if dd % 2 != 0 {
                    return Err(Error::Internal(format!("odd norm for increment {d}")));
                }
                deg += dd / 2 + rs.pair_root_coroot(&d, &wt);
                wt += &d;
            }
            if a == m {
                deg += rs.pair(&twist, &wt);
            }
            let xi = -w0.act_on_root(&wt);
            let mu = &twist + &rs.root_to_weight(&wt);
            expression.add_term(
                ClassKey::new(rs, &walk[m], xi, mu),
                &LaurentPoly::monomial(sign, deg),
            );
        }
    }
    Ok(KnosExpansion {
        expression,
        walk_count: walks.len(),
        decorated_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walks::DEFAULT_MAX_WALKS;

    #[test]
    fn sequence_for_a2() {
        let rs = RootSystem::of(Family::A, 2).unwrap();
        let (eta, a) = eta_sequence(&rs, &rs.fundamental_weight(1)).unwrap();
        assert_eq!(a, 0);
        assert_eq!(eta, vec![rs.theta().clone(), rs.simple_root(1)]);
        let (eta, a) = eta_sequence(&rs, &Weight(vec![-1, 0])).unwrap();
        assert_eq!(a, 2);
        assert_eq!(eta, vec![rs.simple_root(1), rs.theta().clone()]);
    }

    #[test]
    fn identity_times_varpi1() {
        // Along (theta, alpha_1) from e only the last step can move.
        let rs = RootSystem::of(Family::A, 2).unwrap();
        let out = knos_minuscule(
            &rs,
            &rs.fundamental_weight(1),
            &rs.identity(),
            DEFAULT_MAX_WALKS,
        )
        .unwrap();
        assert_eq!(out.walk_count, 2);
        assert_eq!(out.decorated_count, 2);
        let twist = Weight(vec![0, 1]);
        let mut expected = KExpression::term(
            1,
            0,
            ClassKey::new(&rs, &rs.identity(), Root::zero(2), twist.clone()),
        );
        expected.add_assign(&KExpression::term(
            -1,
            0,
            ClassKey::new(&rs, &rs.simple_reflection(1), Root::zero(2), twist),
        ));
        assert_eq!(out.expression, expected);
    }

    #[test]
    fn refuses_non_minuscule_and_e8() {
        let rs = RootSystem::of(Family::A, 2).unwrap();
        assert!(matches!(
            knos_minuscule(&rs, &Weight(vec![1, 1]), &rs.identity(), 10),
            Err(Error::NotMinuscule(_))
        ));
        let e8 = RootSystem::of(Family::E, 8).unwrap();
        assert!(matches!(
            knos_minuscule(&e8, &e8.fundamental_weight(1), &e8.identity(), 10),
            Err(Error::Unsupported(_))
        ));
    }
}
