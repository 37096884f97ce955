//! Laurent polynomials in `q` with big-integer coefficients, and formal
//! combinations of twisted Schubert class symbols `[O_{v t_xi}(mu)]`.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::ops::{Add, Mul, Neg};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::lattice::{CartanType, Root, RootSystem, Weight};
use crate::weyl::WeylElement;

/// Element of `Z[q, q^-1]`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(1, 0)
    }

    /// `c q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_monomial(c.into(), e);
        p
    }

    pub fn add_monomial(&mut self, c: BigInt, e: i64) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    /// `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Renders with `q^{e}` for LaTeX or `q^e` for plain text.
    fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let q = match (*e, latex) {
                (0, _) => String::new(),
                (1, _) => "q".to_string(),
                (e, true) => format!("q^{{{e}}}"),
                (e, false) => format!("q^{e}"),
            };
            if mag.is_one() && !q.is_empty() {
                out.push_str(&q);
            } else {
                let _ = write!(out, "{mag}{q}");
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_monomial(c.clone(), *e);
        }
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.add_monomial(c1 * c2, e1 + e2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

/// Index of a twisted class: `v` by its canonical reduced word, the
/// translation `xi` in simple-coroot coordinates, and the twist `mu` in
/// fundamental-weight coordinates. The derived order is the canonical one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassKey {
    pub word: Vec<usize>,
    pub xi: Root,
    pub mu: Weight,
}

impl ClassKey {
    pub fn new(rs: &RootSystem, v: &WeylElement, xi: Root, mu: Weight) -> Self {
        ClassKey {
            word: rs.canonical_reduced_word(v),
            xi,
            mu,
        }
    }

    /// The plain Schubert class `[O_w]`.
    pub fn untwisted(rs: &RootSystem, w: &WeylElement) -> Self {
        ClassKey::new(rs, w, Root::zero(rs.rank()), Weight::zero(rs.rank()))
    }

    pub fn element(&self, rs: &RootSystem) -> Result<WeylElement> {
        rs.element_from_word(&self.word)
    }
}

/// Finite `Z[q, q^-1]`-combination of twisted classes; zero coefficients are
/// never stored, so structural equality is equality of expressions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct KExpression {
    terms: BTreeMap<ClassKey, LaurentPoly>,
}

impl KExpression {
    pub fn new() -> Self {
        KExpression::default()
    }

    /// `sign * q^deg * [key]`.
    pub fn term(sign: i64, deg: i64, key: ClassKey) -> Self {
        let mut e = KExpression::new();
        e.add_term(key, &LaurentPoly::monomial(sign, deg));
        e
    }

    pub fn add_term(&mut self, key: ClassKey, coeff: &LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        let sum = match self.terms.get(&key) {
            Some(old) => old + coeff,
            None => coeff.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, sum);
        }
    }

    pub fn add_assign(&mut self, other: &KExpression) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c);
        }
    }

    pub fn add(&self, other: &KExpression) -> KExpression {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn negate(&self) -> KExpression {
        KExpression {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> KExpression {
        let mut out = KExpression::new();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), &(v * c));
        }
        out
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, key: &ClassKey) -> Option<&LaurentPoly> {
        self.terms.get(key)
    }

    /// Terms in canonical key order.
    pub fn iter(&self) -> impl Iterator<Item = (&ClassKey, &LaurentPoly)> {
        self.terms.iter()
    }

    /// Number of keys whose coefficient survives `q = 1`.
    pub fn nonvanishing_at_one(&self) -> usize {
        self.terms
            .values()
            .filter(|c| !c.at_one().is_zero())
            .count()
    }

    /// `{"terms":[...]}` with terms in canonical order.
    pub fn to_json(&self) -> String {
        let mut out = String::from("{\"terms\":");
        write_terms(&mut out, self);
        out.push('}');
        out
    }

    /// Accepts either a bare `{"terms":[...]}` object or an expansion
    /// document.
    pub fn parse_json(text: &str) -> Result<KExpression> {
        let value = parse_value(text)?;
        expression_from_value(&value)
    }

    /// One line per term, mirroring the usual notation.
    pub fn to_latex(&self) -> String {
        if self.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (key, coeff)) in self.terms.iter().enumerate() {
            let class = latex_class(key);
            let c = coeff.render(true);
            let line = if coeff.is_monomial() {
                let (sign, body) = match c.strip_prefix('-') {
                    Some(rest) => ("-", rest.to_string()),
                    None => ("+", c.clone()),
                };
                let body = if body == "1" {
                    String::new()
                } else {
                    format!("{body} ")
                };
                if i == 0 && sign == "+" {
                    format!("{body}{class}")
                } else {
                    format!("{sign} {body}{class}")
                }
            } else if i == 0 {
                format!("({c}) {class}")
            } else {
                format!("+ ({c}) {class}")
            };
            out.push_str(&line);
            out.push('\n');
        }
        out
    }

    /// Plain-text rendering, one term per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (key, coeff) in &self.terms {
            let v = if key.word.is_empty() {
                "e".to_string()
            } else {
                key.word
                    .iter()
                    .map(|i| format!("s{i}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            let t = if key.xi.is_zero() {
                String::new()
            } else {
                format!(" t{}", key.xi)
            };
            let _ = writeln!(out, "{:>16}  O[{v}{t}]({})", coeff.to_string(), key.mu);
        }
        out
    }
}

fn join_ints<T: fmt::Display>(xs: &[T]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn write_terms(out: &mut String, e: &KExpression) {
    out.push('[');
    for (i, (key, coeff)) in e.terms.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(
            out,
            "\n{{\"w\":[{}],\"xi\":[{}],\"mu\":[{}],\"coeff\":{{",
            join_ints(&key.word),
            join_ints(&key.xi.0),
            join_ints(&key.mu.0)
        );
        for (j, (exp, c)) in coeff.coeffs.iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            let _ = write!(out, "\"{exp}\":{c}");
        }
        out.push_str("}}");
    }
    if !e.is_empty() {
        out.push('\n');
    }
    out.push(']');
}

fn latex_combination(coords: &[i64], basis: &str) -> String {
    let mut out = String::new();
    for (i, &c) in coords.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let sym = basis.replace('#', &(i + 1).to_string());
        let mag = c.abs();
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push(if c < 0 { '-' } else { '+' });
        }
        if mag != 1 {
            let _ = write!(out, "{mag}");
        }
        out.push_str(&sym);
    }
    out
}

fn latex_class(key: &ClassKey) -> String {
    let mut x: String = key.word.iter().map(|i| format!("s_{{{i}}}")).collect();
    if !key.xi.is_zero() {
        let _ = write!(
            x,
            "t_{{{}}}",
            latex_combination(&key.xi.0, "\\alpha_#^\\vee")
        );
    }
    if x.is_empty() {
        x.push('e');
    }
    let mut out = format!("\\mathcal{{O}}_{{\\mathbf{{Q}}_G({x})}}");
    if !key.mu.is_zero() {
        let _ = write!(out, "({})", latex_combination(&key.mu.0, "\\varpi_#"));
    }
    out
}

fn parse_value(text: &str) -> Result<Value> {
    serde_json::from_str(text)
        .map_err(|e| Error::Json(format!("line {} column {}: {e}", e.line(), e.column())))
}

fn int_list(v: &Value, at: &str) -> Result<Vec<i64>> {
    v.as_array()
        .ok_or_else(|| Error::Json(format!("{at}: expected an array")))?
        .iter()
        .enumerate()
        .map(|(i, x)| {
            x.as_i64()
                .ok_or_else(|| Error::Json(format!("{at}[{i}]: expected an integer")))
        })
        .collect()
}

fn expression_from_value(value: &Value) -> Result<KExpression> {
    let terms = value
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json("missing \"terms\" array".to_string()))?;
    let mut out = KExpression::new();
    for (i, term) in terms.iter().enumerate() {
        let at = format!("terms[{i}]");
        let field = |name: &str| {
            term.get(name)
                .ok_or_else(|| Error::Json(format!("{at}: missing \"{name}\"")))
        };
        let word = int_list(field("w")?, &format!("{at}.w"))?
            .into_iter()
            .map(|x| {
                usize::try_from(x)
                    .ok()
                    .filter(|&x| x >= 1)
                    .ok_or_else(|| Error::Json(format!("{at}.w: bad node index {x}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let xi = Root(int_list(field("xi")?, &format!("{at}.xi"))?);
        let mu = Weight(int_list(field("mu")?, &format!("{at}.mu"))?);
        let coeff_obj = field("coeff")?
            .as_object()
            .ok_or_else(|| Error::Json(format!("{at}.coeff: expected an object")))?;
        let mut coeff = LaurentPoly::zero();
        for (exp, c) in coeff_obj {
            let e: i64 = exp
                .parse()
                .map_err(|_| Error::Json(format!("{at}.coeff: bad exponent {exp:?}")))?;
            let n = match c {
                Value::Number(n) => BigInt::from_str(&n.to_string())
                    .map_err(|_| Error::Json(format!("{at}.coeff.{exp}: not an integer")))?,
                _ => return Err(Error::Json(format!("{at}.coeff.{exp}: expected a number"))),
            };
            coeff.add_monomial(n, e);
        }
        out.add_term(ClassKey { word, xi, mu }, &coeff);
    }
    Ok(out)
}

/// An expansion together with the metadata written alongside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionDocument {
    pub cartan_type: CartanType,
    pub conjectural: bool,
    pub walks: Option<usize>,
    pub decorated_walks: Option<usize>,
    pub expression: KExpression,
}

impl ExpansionDocument {
    pub fn to_json(&self) -> String {
        let ct = self.cartan_type;
        let mut out = format!(
            "{{\"type\":\"{}\",\"rank\":{}",
            ct.family().letter(),
            ct.rank()
        );
        if self.conjectural {
            out.push_str(",\"conjectural\":true");
        }
        if let Some(n) = self.walks {
            let _ = write!(out, ",\"walks\":{n}");
        }
        if let Some(n) = self.decorated_walks {
            let _ = write!(out, ",\"decorated_walks\":{n}");
        }
        out.push_str(",\"terms\":");
        write_terms(&mut out, &self.expression);
        out.push_str("}\n");
        out
    }

    pub fn parse_json(text: &str) -> Result<ExpansionDocument> {
        let value = parse_value(text)?;
        let family = value
            .get("type")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Json("missing \"type\" string".to_string()))?;
        let rank = value
            .get("rank")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Json("missing \"rank\" integer".to_string()))?;
        let cartan_type = CartanType::new(family.parse()?, rank as usize)?;
        let count = |name: &str| value.get(name).and_then(Value::as_u64).map(|n| n as usize);
        Ok(ExpansionDocument {
            cartan_type,
            conjectural: value
                .get("conjectural")
                .and_then(Value::as_bool)
                .unwrap_or(false),
            walks: count("walks"),
            decorated_walks: count("decorated_walks"),
            expression: expression_from_value(&value)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Family;

    fn a2() -> RootSystem {
        RootSystem::of(Family::A, 2).unwrap()
    }

    #[test]
    fn laurent_arithmetic() {
        let p = &LaurentPoly::monomial(2, 3) + &LaurentPoly::monomial(-1, -1);
        let q = &LaurentPoly::monomial(1, 1) + &LaurentPoly::one();
        let pq = &p * &q;
        assert_eq!(pq.coeff(4), BigInt::from(2));
        assert_eq!(pq.coeff(3), BigInt::from(2));
        assert_eq!(pq.coeff(0), BigInt::from(-1));
        assert_eq!(pq.coeff(-1), BigInt::from(-1));
        assert!((&p + &-&p).is_zero());
        assert_eq!(p.to_string(), "2q^3 - q^-1");
        assert_eq!(LaurentPoly::monomial(-1, 1).to_string(), "-q");
        assert_eq!(LaurentPoly::one().to_string(), "1");
    }

    #[test]
    fn big_coefficients_do_not_overflow() {
        let big = LaurentPoly::monomial(BigInt::from(i64::MAX), 0);
        let sq = &big * &big;
        assert_eq!(sq.coeff(0), BigInt::from(i64::MAX) * BigInt::from(i64::MAX));
        let mut e = KExpression::new();
        e.add_term(ClassKey::untwisted(&a2(), &a2().identity()), &sq);
        assert_eq!(KExpression::parse_json(&e.to_json()).unwrap(), e);
    }

    #[test]
    fn expression_basics() {
        let rs = a2();
        let key = ClassKey::untwisted(&rs, &rs.identity());
        let e = KExpression::term(1, 0, key.clone());
        assert!(e.add(&e.negate()).is_empty());
        let scaled = e.scale(&LaurentPoly::monomial(1, 1));
        assert_eq!(scaled.get(&key), Some(&LaurentPoly::monomial(1, 1)));
        let sum = KExpression::term(1, 0, key.clone()).add(&KExpression::term(-1, 0, key));
        assert!(sum.is_empty());
    }

    #[test]
    fn json_forms() {
        let rs = a2();
        assert_eq!(KExpression::new().to_json(), "{\"terms\":[]}");
        let key = ClassKey::new(
            &rs,
            &rs.longest_element(),
            Root(vec![1, 1]),
            Weight(vec![-1, -1]),
        );
        let e = KExpression::term(1, 0, key);
        assert_eq!(
            e.to_json(),
            "{\"terms\":[\n{\"w\":[1,2,1],\"xi\":[1,1],\"mu\":[-1,-1],\"coeff\":{\"0\":1}}\n]}"
        );
        assert_eq!(KExpression::parse_json(&e.to_json()).unwrap(), e);
    }

    #[test]
    fn exponents_are_ordered_numerically() {
        let rs = a2();
        let mut c = LaurentPoly::zero();
        for e in [10, 2, -1] {
            c.add_monomial(BigInt::from(1), e);
        }
        let mut e = KExpression::new();
        e.add_term(ClassKey::untwisted(&rs, &rs.identity()), &c);
        assert!(e.to_json().contains("{\"-1\":1,\"2\":1,\"10\":1}"));
    }

    #[test]
    fn malformed_documents_report_position() {
        let err = KExpression::parse_json("{\"terms\": [\n{\"w\": [1,}").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        let err = KExpression::parse_json("{\"terms\":[{\"w\":[1],\"xi\":[0,0],\"mu\":[0,0]}]}")
            .unwrap_err();
        assert!(err.to_string().contains("coeff"), "{err}");
        assert!(KExpression::parse_json(
            "{\"terms\":[{\"w\":[0],\"xi\":[],\"mu\":[],\"coeff\":{}}]}"
        )
        .is_err());
    }

    #[test]
    fn document_round_trip() {
        let rs = a2();
        let key = ClassKey::new(
            &rs,
            &rs.simple_reflection(2),
            Root(vec![0, 1]),
            Weight(vec![1, -2]),
        );
        let doc = ExpansionDocument {
            cartan_type: rs.cartan_type(),
            conjectural: false,
            walks: Some(3),
            decorated_walks: Some(4),
            expression: KExpression::term(-1, 2, key),
        };
        let text = doc.to_json();
        assert!(text.starts_with(
            "{\"type\":\"A\",\"rank\":2,\"walks\":3,\"decorated_walks\":4,\"terms\":["
        ));
        assert_eq!(ExpansionDocument::parse_json(&text).unwrap(), doc);
    }

    #[test]
    fn latex_rendering() {
        let rs = a2();
        let mut e = KExpression::new();
        e.add_term(
            ClassKey::new(
                &rs,
                &rs.longest_element(),
                Root::zero(2),
                Weight(vec![-1, -1]),
            ),
            &LaurentPoly::one(),
        );
        e.add_term(
            ClassKey::new(
                &rs,
                &rs.parse_element("2,1").unwrap(),
                Root(vec![1, 1]),
                Weight::zero(2),
            ),
            &LaurentPoly::monomial(-1, 1),
        );
        e.add_term(
            ClassKey::new(&rs, &rs.identity(), Root(vec![2, 1]), Weight(vec![-1, 2])),
            &LaurentPoly::monomial(1, 3),
        );
        let tex = e.to_latex();
        let lines: Vec<&str> = tex.lines().collect();
        assert_eq!(
            lines[0],
            "q^{3} \\mathcal{O}_{\\mathbf{Q}_G(t_{2\\alpha_1^\\vee+\\alpha_2^\\vee})}(-\\varpi_1+2\\varpi_2)"
        );
        assert_eq!(
            lines[1],
            "+ \\mathcal{O}_{\\mathbf{Q}_G(s_{1}s_{2}s_{1})}(-\\varpi_1-\\varpi_2)"
        );
        assert_eq!(
            lines[2],
            "- q \\mathcal{O}_{\\mathbf{Q}_G(s_{2}s_{1}t_{\\alpha_1^\\vee+\\alpha_2^\\vee})}"
        );
    }
}
