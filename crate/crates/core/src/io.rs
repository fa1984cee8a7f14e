//! JSON forms of the exchange types. Every scalar travels as an exact
//! string (`"-3"`, `"3/2"`); no floating point appears anywhere.
//!
//! * matrix: `{"rows": n, "cols": m, "entries": [[r, c, "v"], …]}`
//! * complex: `{"vertices": n, "facets": [[…], …]}`
//! * cochain: `{"degree": n, "ring": "Z"|"Q"|"QmodZ", "values": {"0,1": "3/2"}}`
//! * group: `{"rank": r, "torsion": [d, …]}` (also accepted: `"Z/2+Z/4"`)
//! * Deligne cocycle: `{"p": n, "q": n, "c": …, "omega": …, "theta": …}`
//! * tower: `{"p": n, "q": n, "m": {key: "int"}, "components": [{"r":, "s":, "local": {key: cochain}}]}`

use crate::deligne::cocycle::DeligneCocycle;
use crate::deligne::tower::CechTower;
use crate::error::Error;
use crate::exact::group::FgAbGroup;
use crate::exact::matrix::SparseMatrix;
use crate::scalar::{Integer, Scalar};
use crate::simplicial::cochain::{Cochain, CoefRing};
use crate::simplicial::complex::{Complex, SimplexKey};
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;

fn err(msg: impl Into<String>) -> Error {
    Error::Json(msg.into())
}

fn as_usize(v: &Value, what: &str) -> Result<usize, Error> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| err(format!("{what} must be a nonneg integer")))
}

fn as_str<'a>(v: &'a Value, what: &str) -> Result<&'a str, Error> {
    v.as_str()
        .ok_or_else(|| err(format!("{what} must be a string")))
}

fn field<'a>(v: &'a Value, name: &str) -> Result<&'a Value, Error> {
    v.get(name)
        .ok_or_else(|| err(format!("missing field `{name}`")))
}

pub fn parse(s: &str) -> Result<Value, Error> {
    serde_json::from_str(s).map_err(|e| err(format!("bad JSON: {e}")))
}

pub fn to_string_pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

// --- matrices ---

pub fn matrix_to_json<T: Scalar>(m: &SparseMatrix<T>) -> Value {
    let entries: Vec<Value> = m
        .iter()
        .map(|(r, c, v)| json!([r, c, v.render()]))
        .collect();
    json!({"rows": m.rows(), "cols": m.cols(), "entries": entries})
}

pub fn matrix_from_json<T: Scalar>(v: &Value) -> Result<SparseMatrix<T>, Error> {
    let rows = as_usize(field(v, "rows")?, "rows")?;
    let cols = as_usize(field(v, "cols")?, "cols")?;
    let entries = field(v, "entries")?
        .as_array()
        .ok_or_else(|| err("entries must be an array"))?;
    let mut triples = Vec::new();
    for e in entries {
        let a = e
            .as_array()
            .filter(|a| a.len() == 3)
            .ok_or_else(|| err("entry must be [r, c, v]"))?;
        let r = as_usize(&a[0], "entry row")?;
        let c = as_usize(&a[1], "entry col")?;
        let val = T::parse(as_str(&a[2], "entry value")?)
            .ok_or_else(|| err(format!("bad scalar `{}`", a[2])))?;
        triples.push((r, c, val));
    }
    SparseMatrix::from_entries(rows, cols, triples)
}

// --- complexes ---

pub fn complex_to_json(x: &Complex) -> Value {
    let facets: Vec<Value> = x
        .facets()
        .iter()
        .map(|f| json!(f.vertices().to_vec()))
        .collect();
    json!({"vertices": x.vertex_count(), "facets": facets})
}

pub fn complex_from_json(v: &Value) -> Result<Complex, Error> {
    let n = as_usize(field(v, "vertices")?, "vertices")?;
    let facets = field(v, "facets")?
        .as_array()
        .ok_or_else(|| err("facets must be an array"))?;
    let mut list = Vec::new();
    for f in facets {
        let arr = f.as_array().ok_or_else(|| err("facet must be an array"))?;
        let verts: Vec<usize> = arr
            .iter()
            .map(|x| as_usize(x, "vertex"))
            .collect::<Result<_, _>>()?;
        list.push(verts);
    }
    Complex::build(n, &list)
}

// --- cochains ---

pub fn cochain_to_json(c: &Cochain) -> Value {
    let mut values = Map::new();
    for (k, v) in c.iter() {
        values.insert(k.label(), Value::String(v.render()));
    }
    json!({"degree": c.degree(), "ring": c.ring().label(), "values": values})
}

pub fn cochain_from_json(x: &Complex, v: &Value) -> Result<Cochain, Error> {
    let degree = as_usize(field(v, "degree")?, "degree")?;
    let ring = CoefRing::parse(as_str(field(v, "ring")?, "ring")?)?;
    let values = field(v, "values")?
        .as_object()
        .ok_or_else(|| err("values must be an object"))?;
    let mut pairs = Vec::new();
    for (key, val) in values {
        let simplex = SimplexKey::parse(key)?;
        let scalar = crate::scalar::Rational::parse(as_str(val, "cochain value")?)
            .ok_or_else(|| err(format!("bad scalar `{val}`")))?;
        pairs.push((simplex, scalar));
    }
    Cochain::from_values(x, degree, ring, pairs)
}

// --- groups ---

pub fn group_to_json(g: &FgAbGroup) -> Value {
    let torsion: Vec<Value> = g
        .torsion()
        .iter()
        .map(|d| {
            serde_json::Number::from_str(&d.to_string())
                .map(Value::Number)
                .unwrap_or_else(|_| Value::String(d.to_string()))
        })
        .collect();
    json!({"rank": g.free_rank(), "torsion": torsion})
}

use std::str::FromStr;

pub fn group_from_json(v: &Value) -> Result<FgAbGroup, Error> {
    if let Some(s) = v.as_str() {
        return FgAbGroup::parse(s);
    }
    let rank = as_usize(field(v, "rank")?, "rank")?;
    let torsion = field(v, "torsion")?
        .as_array()
        .ok_or_else(|| err("torsion must be an array"))?;
    let mut ds = Vec::new();
    for d in torsion {
        let val = match d {
            Value::Number(n) => Integer::from_str(&n.to_string())
                .map_err(|_| err(format!("bad torsion modulus {n}")))?,
            Value::String(s) => {
                Integer::from_str(s).map_err(|_| err(format!("bad torsion modulus {s}")))?
            }
            _ => return Err(err("torsion modulus must be a number or string")),
        };
        ds.push(val);
    }
    FgAbGroup::new(rank, ds)
}

pub fn homology_table_to_json(groups: &[FgAbGroup]) -> Value {
    Value::Array(groups.iter().map(group_to_json).collect())
}

// --- Deligne cocycles ---

pub fn cocycle_to_json(x: &DeligneCocycle) -> Value {
    json!({
        "p": x.p,
        "q": x.q,
        "c": cochain_to_json(&x.c),
        "omega": cochain_to_json(&x.omega),
        "theta": cochain_to_json(&x.theta),
    })
}

pub fn cocycle_from_json(complex: &Complex, v: &Value) -> Result<DeligneCocycle, Error> {
    Ok(DeligneCocycle {
        p: as_usize(field(v, "p")?, "p")?,
        q: as_usize(field(v, "q")?, "q")?,
        c: cochain_from_json(complex, field(v, "c")?)?,
        omega: cochain_from_json(complex, field(v, "omega")?)?,
        theta: cochain_from_json(complex, field(v, "theta")?)?,
    })
}

// --- towers ---

pub fn tower_to_json(t: &CechTower) -> Value {
    let mut m = Map::new();
    for (k, v) in &t.m {
        m.insert(k.label(), Value::String(v.to_string()));
    }
    let mut comps = Vec::new();
    for (&(r, s), locals) in &t.components {
        let mut local = Map::new();
        for (k, c) in locals {
            local.insert(k.label(), cochain_to_json(c));
        }
        comps.push(json!({"r": r, "s": s, "local": local}));
    }
    json!({"p": t.degree, "q": t.q, "m": m, "components": comps})
}

pub fn tower_from_json(complex: &Complex, v: &Value) -> Result<CechTower, Error> {
    let degree = as_usize(field(v, "p")?, "p")?;
    let q = as_usize(field(v, "q")?, "q")?;
    let mut tower = CechTower::zero(degree, q);
    let m = field(v, "m")?
        .as_object()
        .ok_or_else(|| err("m must be an object"))?;
    for (k, val) in m {
        let key = SimplexKey::parse(k)?;
        let value = Integer::from_str(as_str(val, "m value")?)
            .map_err(|_| err(format!("bad integer `{val}`")))?;
        tower.m.insert(key, value);
    }
    let comps = field(v, "components")?
        .as_array()
        .ok_or_else(|| err("components must be an array"))?;
    for comp in comps {
        let r = as_usize(field(comp, "r")?, "r")?;
        let s = as_usize(field(comp, "s")?, "s")?;
        let local = field(comp, "local")?
            .as_object()
            .ok_or_else(|| err("local must be an object"))?;
        let mut bucket = BTreeMap::new();
        for (k, val) in local {
            bucket.insert(SimplexKey::parse(k)?, cochain_from_json(complex, val)?);
        }
        tower.components.insert((r, s), bucket);
    }
    tower.check_support(complex)?;
    Ok(tower)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Rng;
    use crate::simplicial::cochain::random_cochain;
    use crate::simplicial::spaces::{standard_space, SpaceName};

    #[test]
    fn matrix_round_trip() {
        let mut rng = Rng::new(80);
        for _ in 0..10 {
            let mut m = SparseMatrix::zero(3, 4);
            for r in 0..3 {
                for c in 0..4 {
                    m.set(
                        r,
                        c,
                        crate::scalar::rat(rng.int_in(-5, 5), 1 + rng.index(3) as i64),
                    );
                }
            }
            let v = matrix_to_json(&m);
            let back = matrix_from_json::<crate::scalar::Rational>(&v).unwrap();
            assert_eq!(m, back);
        }
    }

    #[test]
    fn complex_and_cochain_round_trip() {
        let mut rng = Rng::new(81);
        let x = standard_space(SpaceName::Klein);
        let v = complex_to_json(&x);
        let back = complex_from_json(&v).unwrap();
        assert_eq!(x, back);
        for ring in [CoefRing::Int, CoefRing::Rat, CoefRing::RatModZ] {
            let c = random_cochain(&x, 1, ring, &mut rng);
            let cv = cochain_to_json(&c);
            assert_eq!(cochain_from_json(&x, &cv).unwrap(), c);
        }
    }

    #[test]
    fn group_forms() {
        let g = FgAbGroup::parse("Z^2+Z/2+Z/4").unwrap();
        let v = group_to_json(&g);
        assert_eq!(group_from_json(&v).unwrap(), g);
        assert_eq!(
            group_from_json(&json!("Z/6")).unwrap(),
            FgAbGroup::cyclic(6)
        );
        assert!(group_from_json(&json!({"rank": 1})).is_err());
    }

    #[test]
    fn tower_round_trip() {
        let mut rng = Rng::new(82);
        let x = standard_space(SpaceName::Torus);
        let t = crate::deligne::tower::random_tower(&x, 2, 2, &mut rng);
        let v = tower_to_json(&t);
        let back = tower_from_json(&x, &v).unwrap();
        assert_eq!(t, back);
    }
}
