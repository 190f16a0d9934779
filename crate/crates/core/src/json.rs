//! JSON renderings. Key order is fixed by insertion, Laurent polynomials
//! are `{exponent: coefficient}` maps with the lowest exponent first, and
//! coefficients that do not fit an `i64` are written as strings.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::affine_weyl::{AffineElt, AffineWeyl, ReflectionKind};
use crate::hecke::Hecke;
use crate::laurent::Laurent;
use crate::lattice::IVec;
use crate::oracle::OracleRow;
use crate::qanalogue::{KatoRow, QOneRow};
use crate::report::Check;
use crate::scalar::Coeff;
use crate::spherical::Sph;

fn coeff<C: Coeff>(c: &C) -> Value {
    match c.to_i64() {
        Some(n) => json!(n),
        None => json!(c.to_string()),
    }
}

pub fn laurent<C: Coeff>(p: &Laurent<C>) -> Value {
    let mut m = Map::new();
    for (e, c) in p.terms() {
        m.insert(e.to_string(), coeff(c));
    }
    Value::Object(m)
}

pub fn weight(l: &[i64]) -> Value {
    json!(l)
}

pub fn affine_elt(x: &AffineElt) -> Value {
    json!({ "w": x.w.matrix().rows(), "lambda": x.lambda.as_slice() })
}

/// Finite reflections are numbered from 1 as in `s1`, affine ones by
/// their component.
pub fn word(g: &AffineWeyl, w: &[usize]) -> Value {
    Value::Array(
        w.iter()
            .map(|&k| match g.simples()[k].kind {
                ReflectionKind::Finite(i) => json!({ "kind": "finite", "index": i + 1 }),
                ReflectionKind::Affine(c) => json!({ "kind": "affine", "index": c }),
            })
            .collect(),
    )
}

pub fn hecke<C: Coeff>(g: &AffineWeyl, h: &Hecke<C>) -> Value {
    Value::Array(
        h.sorted_terms(g)
            .iter()
            .map(|(x, c)| json!({ "element": affine_elt(x), "coefficient": laurent(c) }))
            .collect(),
    )
}

pub fn sph<C: Coeff>(g: &AffineWeyl, m: &Sph<C>) -> Value {
    Value::Array(
        m.sorted_terms(g)
            .iter()
            .map(|(l, c)| json!({ "lambda": l.as_slice(), "coefficient": laurent(c) }))
            .collect(),
    )
}

pub fn decomposition<C: Coeff>(g: &AffineWeyl, d: &BTreeMap<IVec, Laurent<C>>) -> Value {
    let mut rows: Vec<(&IVec, &Laurent<C>)> = d.iter().collect();
    rows.sort_by_key(|(l, _)| (std::cmp::Reverse(g.min_rep_length(l)), (*l).clone()));
    json!({
        "characteristic": 0,
        "summands": rows
            .iter()
            .map(|(l, c)| json!({ "lambda": l.as_slice(), "multiplicity": laurent(c) }))
            .collect::<Vec<_>>(),
    })
}

pub fn kato_row<C: Coeff>(r: &KatoRow<C>) -> Value {
    json!({
        "lambda": r.lambda.as_slice(),
        "mu": r.mu.as_slice(),
        "lhs": laurent(&r.lhs),
        "rhs": laurent(&r.rhs),
        "pass": r.pass,
    })
}

pub fn q_one_row(r: &QOneRow) -> Value {
    json!({
        "eta": r.eta.as_slice(),
        "chi": r.chi.as_slice(),
        "lusztig_at_one": r.lusztig_at_one,
        "freudenthal": r.freudenthal,
        "pass": r.pass,
    })
}

fn decorated(g: &AffineWeyl, x: &(AffineElt, Vec<usize>)) -> Value {
    json!({ "omega": affine_elt(&x.0), "word": word(g, &x.1) })
}

pub fn oracle_row<C: Coeff>(g: &AffineWeyl, r: &OracleRow<C>) -> Value {
    json!({
        "left_word": decorated(g, &r.left),
        "right_word": decorated(g, &r.right),
        "oracle": laurent(&r.oracle),
        "predicted": laurent(&r.predicted),
        "pass": r.pass,
        "cutoff": r.cutoff,
    })
}

pub fn check(c: &Check) -> Value {
    json!({ "name": c.name, "checked": c.checked, "pass": c.passed(), "failures": c.failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::ivec;
    use crate::{Integer, LaurentPoly};

    #[test]
    fn laurent_is_lowest_first() {
        let p = LaurentPoly::from_i64_terms(&[(2, 1), (-2, 1), (0, 2)]);
        assert_eq!(serde_json::to_string(&laurent(&p)).unwrap(), r#"{"-2":1,"0":2,"2":1}"#);
        let big = Laurent::constant(Integer::from(1u8) << 80);
        assert_eq!(serde_json::to_string(&laurent(&big)).unwrap(), r#"{"0":"1208925819614629174706176"}"#);
    }

    #[test]
    fn words_and_elements() {
        let g = AffineWeyl::preset("A2").unwrap();
        let w = g.parse_word("s2,s0,s1").unwrap();
        assert_eq!(
            serde_json::to_string(&word(&g, &w)).unwrap(),
            r#"[{"kind":"finite","index":2},{"kind":"affine","index":0},{"kind":"finite","index":1}]"#
        );
        let x = g.translation(&ivec(&[1, -1]));
        assert_eq!(
            serde_json::to_string(&affine_elt(&x)).unwrap(),
            r#"{"w":[[1,0],[0,1]],"lambda":[1,-1]}"#
        );
    }
}
