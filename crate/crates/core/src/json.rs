//! JSON wire formats. Block indices on the wire are 1-based; rationals are
//! canonical `"p/q"` or integer strings (bare JSON integers are accepted on
//! input, floats never).
//!
//! * realization: `{"partition": [..], "spaces": [{"k", "j", "basis": [[row-major entries]]}]}`
//! * point of `V`: `{"diag": [..], "off": [{"k", "j", "coords": [..]}]}`
//! * group element: `{"diag": [..], "lower": [{"k", "j", "coords": [..]}]}`
//! * composition family: `{"r", "s", "n", "A": [[[row], ..], ..]}`
//! * dimension table: `{"r": int, "dims": {"d21": int, "d10_2": int, ..}}`
//!
//! Omitted `(k, j)` pairs in point and group JSON mean zero coordinates.
//! Objects are built as `serde_json::Value` maps, which keep keys sorted.

use serde_json::{json, Map, Value};

use crate::degrees::{DimTable, SigmaMatrix};
use crate::element::{ConeElement, GroupElement, OffCoords};
use crate::error::FormatError;
use crate::matrix::Matrix;
use crate::rank3::CompositionFamily;
use crate::realization::{BlockPartition, Realization};
use crate::scalar::{format_rational, parse_rational, Scalar};
use crate::Rational;

fn schema(msg: impl Into<String>) -> FormatError {
    FormatError::Schema(msg.into())
}

pub fn rational_to_json(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

pub fn rational_from_json(v: &Value, at: &str) -> Result<Rational, FormatError> {
    match v {
        Value::String(s) => Ok(parse_rational(s)?),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(parse_rational(&n.to_string())?),
        _ => Err(schema(format!("{at}: expected a rational string"))),
    }
}

pub fn rationals_to_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_to_json).collect())
}

fn array<'a>(v: &'a Value, at: &str) -> Result<&'a Vec<Value>, FormatError> {
    v.as_array().ok_or_else(|| schema(format!("{at}: expected an array")))
}

fn field<'a>(v: &'a Value, key: &str, at: &str) -> Result<&'a Value, FormatError> {
    v.get(key).ok_or_else(|| schema(format!("{at}: missing field \"{key}\"")))
}

fn uint(v: &Value, at: &str) -> Result<usize, FormatError> {
    v.as_u64()
        .and_then(|u| usize::try_from(u).ok())
        .ok_or_else(|| schema(format!("{at}: expected a nonnegative integer")))
}

pub fn rationals_from_json(v: &Value, at: &str) -> Result<Vec<Rational>, FormatError> {
    array(v, at)?
        .iter()
        .enumerate()
        .map(|(i, x)| rational_from_json(x, &format!("{at}[{i}]")))
        .collect()
}

pub fn matrix_to_json(m: &Matrix<Rational>) -> Value {
    Value::Array(m.to_rows().iter().map(|r| rationals_to_json(r)).collect())
}

pub fn matrix_from_json(v: &Value, at: &str) -> Result<Matrix<Rational>, FormatError> {
    let rows = array(v, at)?
        .iter()
        .enumerate()
        .map(|(i, r)| rationals_from_json(r, &format!("{at}[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    Matrix::from_rows(rows).ok_or_else(|| schema(format!("{at}: ragged matrix")))
}

/// Parses a `(k, j)` pair given 1-based on the wire and returns it 0-based.
fn pair(item: &Value, at: &str) -> Result<(usize, usize), FormatError> {
    let k = uint(field(item, "k", at)?, &format!("{at}.k"))?;
    let j = uint(field(item, "j", at)?, &format!("{at}.j"))?;
    if j == 0 || k <= j {
        return Err(schema(format!("{at}: need 1 <= j < k, got k = {k}, j = {j}")));
    }
    Ok((k - 1, j - 1))
}

pub fn realization_to_json(v: &Realization<Rational>) -> Value {
    let spaces: Vec<Value> = v
        .spaces()
        .filter(|(_, _, s)| s.dim() > 0)
        .map(|(k, j, s)| {
            json!({
                "k": k + 1,
                "j": j + 1,
                "basis": s.basis().iter().map(|e| rationals_to_json(e.as_slice())).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "partition": v.partition().sizes(), "spaces": spaces })
}

pub fn realization_from_json(v: &Value) -> Result<Realization<Rational>, FormatError> {
    let sizes = array(field(v, "partition", "realization")?, "partition")?
        .iter()
        .enumerate()
        .map(|(i, x)| uint(x, &format!("partition[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    let partition = BlockPartition::new(sizes)?;
    let mut spaces = Vec::new();
    for (idx, item) in array(field(v, "spaces", "realization")?, "spaces")?.iter().enumerate() {
        let at = format!("spaces[{idx}]");
        let (k, j) = pair(item, &at)?;
        if k >= partition.rank() {
            return Err(schema(format!("{at}: k = {} exceeds the rank {}", k + 1, partition.rank())));
        }
        let (rows, cols) = (partition.size(k), partition.size(j));
        let basis = array(field(item, "basis", &at)?, &at)?
            .iter()
            .enumerate()
            .map(|(b, e)| {
                let at = format!("{at}.basis[{b}]");
                let flat = rationals_from_json(e, &at)?;
                if flat.len() != rows * cols {
                    return Err(schema(format!(
                        "{at}: expected {} entries for a {rows}x{cols} block, found {}",
                        rows * cols,
                        flat.len()
                    )));
                }
                Ok(Matrix::from_vec(rows, cols, flat))
            })
            .collect::<Result<Vec<_>, FormatError>>()?;
        spaces.push(((k, j), basis));
    }
    Ok(Realization::new(partition, spaces)?)
}

fn coords_to_json(v: &Realization<Rational>, diag: &[Rational], off: &OffCoords<Rational>, key: &str) -> Value {
    let entries: Vec<Value> = v
        .spaces()
        .filter(|(_, _, s)| s.dim() > 0)
        .map(|(k, j, _)| json!({ "k": k + 1, "j": j + 1, "coords": rationals_to_json(&off[k][j]) }))
        .collect();
    let mut m = Map::new();
    m.insert("diag".into(), rationals_to_json(diag));
    m.insert(key.into(), Value::Array(entries));
    Value::Object(m)
}

fn coords_from_json(
    v: &Realization<Rational>,
    value: &Value,
    key: &str,
) -> Result<(Vec<Rational>, OffCoords<Rational>), FormatError> {
    let diag = rationals_from_json(field(value, "diag", "point")?, "diag")?;
    if diag.len() != v.rank() {
        return Err(schema(format!("diag: expected {} entries, found {}", v.rank(), diag.len())));
    }
    let mut off: OffCoords<Rational> = (0..v.rank())
        .map(|k| (0..k).map(|j| vec![Rational::from_int(0); v.dim(k, j)]).collect())
        .collect();
    if let Some(list) = value.get(key) {
        for (idx, item) in array(list, key)?.iter().enumerate() {
            let at = format!("{key}[{idx}]");
            let (k, j) = pair(item, &at)?;
            if k >= v.rank() {
                return Err(schema(format!("{at}: k = {} exceeds the rank {}", k + 1, v.rank())));
            }
            let c = rationals_from_json(field(item, "coords", &at)?, &at)?;
            if c.len() != v.dim(k, j) {
                return Err(schema(format!(
                    "{at}: space ({}, {}) has dimension {}, found {} coordinates",
                    k + 1,
                    j + 1,
                    v.dim(k, j),
                    c.len()
                )));
            }
            off[k][j] = c;
        }
    }
    Ok((diag, off))
}

pub fn cone_element_to_json(v: &Realization<Rational>, x: &ConeElement<Rational>) -> Value {
    coords_to_json(v, &x.diag, &x.off, "off")
}

pub fn cone_element_from_json(v: &Realization<Rational>, value: &Value) -> Result<ConeElement<Rational>, FormatError> {
    let (diag, off) = coords_from_json(v, value, "off")?;
    Ok(ConeElement { diag, off })
}

pub fn group_element_to_json(v: &Realization<Rational>, h: &GroupElement<Rational>) -> Value {
    coords_to_json(v, &h.diag, &h.lower, "lower")
}

pub fn group_element_from_json(v: &Realization<Rational>, value: &Value) -> Result<GroupElement<Rational>, FormatError> {
    let (diag, lower) = coords_from_json(v, value, "lower")?;
    let h = GroupElement { diag, lower };
    h.check(v)?;
    Ok(h)
}

pub fn family_to_json(f: &CompositionFamily<Rational>) -> Value {
    json!({
        "r": f.r(),
        "s": f.s(),
        "n": f.n(),
        "A": f.matrices().iter().map(matrix_to_json).collect::<Vec<_>>(),
    })
}

/// Reads a family; shapes are checked, the composition relations are not.
pub fn family_from_json(v: &Value) -> Result<CompositionFamily<Rational>, FormatError> {
    let r = uint(field(v, "r", "family")?, "r")?;
    let s = uint(field(v, "s", "family")?, "s")?;
    let n = uint(field(v, "n", "family")?, "n")?;
    let a = array(field(v, "A", "family")?, "A")?
        .iter()
        .enumerate()
        .map(|(i, m)| matrix_from_json(m, &format!("A[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    if a.len() != r {
        return Err(schema(format!("A: expected r = {r} matrices, found {}", a.len())));
    }
    CompositionFamily::new(s, n, a).map_err(|e| schema(format!("family: {e}")))
}

/// Parses a dimension key: `"dKJ"` with single digits or `"dK_J"`.
fn dim_key(key: &str) -> Option<(usize, usize)> {
    let rest = key.strip_prefix('d')?;
    if let Some((k, j)) = rest.split_once('_') {
        return Some((k.parse().ok()?, j.parse().ok()?));
    }
    let digits: Vec<u32> = rest.chars().map(|c| c.to_digit(10)).collect::<Option<_>>()?;
    match digits.as_slice() {
        [k, j] => Some((*k as usize, *j as usize)),
        _ => None,
    }
}

pub fn dims_from_json(v: &Value) -> Result<DimTable, FormatError> {
    let rank = uint(field(v, "r", "dims file")?, "r")?;
    if rank == 0 {
        return Err(schema("r: rank must be at least 1"));
    }
    let obj = field(v, "dims", "dims file")?
        .as_object()
        .ok_or_else(|| schema("dims: expected an object"))?;
    let mut entries = Vec::with_capacity(obj.len());
    for (key, val) in obj {
        let (k, j) = dim_key(key).ok_or_else(|| schema(format!("dims.{key}: expected a key like \"d21\" or \"d10_2\"")))?;
        if !(1 <= j && j < k && k <= rank) {
            return Err(schema(format!("dims.{key}: need 1 <= j < k <= {rank}")));
        }
        let d = uint(val, &format!("dims.{key}"))?;
        entries.push((k - 1, j - 1, d));
    }
    DimTable::from_entries(rank, entries).map_err(|e| schema(e.to_string()))
}

pub fn dims_to_json(d: &DimTable) -> Value {
    let mut m = Map::new();
    for k in 0..d.rank() {
        for j in 0..k {
            m.insert(format!("d{}_{}", k + 1, j + 1), json!(d.get(k, j)));
        }
    }
    json!({ "r": d.rank(), "dims": Value::Object(m) })
}

/// `{"sigma", "degrees", "trace"}`; the trace is keyed by the 1-based
/// column index.
pub fn sigma_to_json(s: &SigmaMatrix) -> Value {
    let degrees = crate::degrees::degrees_from_sigma(s);
    let mut trace = Map::new();
    for (i, c) in s.trace().iter().enumerate() {
        trace.insert((i + 1).to_string(), json!({ "l": c.l, "epsilon": c.epsilon }));
    }
    json!({ "sigma": s.entries(), "degrees": degrees, "trace": Value::Object(trace) })
}

/// Canonical pretty rendering (sorted keys, trailing newline).
pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}

pub fn parse(text: &str) -> Result<Value, FormatError> {
    Ok(serde_json::from_str(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doubling::iterate_construction;
    use crate::rank3::family_3_5_7;
    use crate::sample::RationalSampler;

    #[test]
    fn realization_round_trip() {
        let v = iterate_construction::<Rational>(3);
        let j = realization_to_json(&v);
        assert_eq!(j["spaces"][0]["k"], json!(2));
        let w = realization_from_json(&j).unwrap();
        assert_eq!(realization_to_json(&w), j);
    }

    #[test]
    fn point_round_trip_and_omitted_pairs() {
        let v = iterate_construction::<Rational>(3);
        let x = RationalSampler::new(3).cone_element(&v);
        let j = cone_element_to_json(&v, &x);
        assert_eq!(cone_element_from_json(&v, &j).unwrap(), x);
        let id = cone_element_from_json(&v, &json!({"diag": ["1", "1", 1]})).unwrap();
        assert_eq!(id, ConeElement::identity(&v));
    }

    #[test]
    fn schema_errors() {
        let v = iterate_construction::<Rational>(2);
        assert!(cone_element_from_json(&v, &json!({"diag": ["1", 0.5]})).is_err());
        assert!(cone_element_from_json(&v, &json!({"diag": ["1", "1"], "off": [{"k": 1, "j": 2, "coords": []}]})).is_err());
        assert!(realization_from_json(&json!({"partition": [2, 1], "spaces": [{"k": 2, "j": 1, "basis": [["1"]]}]})).is_err());
        assert!(dims_from_json(&json!({"r": 3, "dims": {"d21": -1}})).is_err());
        assert!(dims_from_json(&json!({"r": 3, "dims": {"d12": 1}})).is_err());
    }

    #[test]
    fn dims_keys() {
        let d = dims_from_json(&json!({"r": 11, "dims": {"d21": 2, "d11_10": 4}})).unwrap();
        assert_eq!(d.get(1, 0), 2);
        assert_eq!(d.get(10, 9), 4);
        assert_eq!(dims_from_json(&dims_to_json(&d)).unwrap(), d);
    }

    #[test]
    fn family_round_trip() {
        let f = family_3_5_7::<Rational>();
        let j = family_to_json(&f);
        assert_eq!(family_from_json(&j).unwrap(), f);
        assert_eq!(j["A"][1][0][3], json!("1"));
    }
}
