//! JSON formats: algebras, quiver presentations, group actions.
//!
//! Scalars are integers over GF(p) and `"n/d"` strings over Q; either form
//! is accepted on input.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{Algebra, Element};
use crate::constructions::{path_algebra, Arrow, GroupAction, PathAlgebra, QuiverSpec, Relation};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldJson {
    Prime {
        #[serde(rename = "char")]
        characteristic: u64,
    },
    Rationals {
        rationals: bool,
    },
}

impl FieldJson {
    pub fn from_field(f: Field) -> Self {
        match f {
            Field::Prime(p) => FieldJson::Prime { characteristic: p },
            Field::Rationals => FieldJson::Rationals { rationals: true },
        }
    }

    pub fn to_field(&self) -> Result<Field> {
        match *self {
            FieldJson::Prime { characteristic } => Field::prime(characteristic),
            FieldJson::Rationals { rationals: true } => Ok(Field::Rationals),
            FieldJson::Rationals { rationals: false } => {
                Err(Error::InvalidInput("field: {\"rationals\": false} names no field".into()))
            }
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub field: FieldJson,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<Value>,
    /// `[i, j, b_i b_j]`; omitted pairs multiply to zero.
    pub mult: Vec<(usize, usize, Vec<Value>)>,
    /// Optional grading, one degree per basis element.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<usize>>,
}

pub fn scalar_to_json(f: Field, a: &Scalar) -> Value {
    match f {
        Field::Prime(_) => Value::from(f.residue(a)),
        Field::Rationals => Value::from(f.format(a)),
    }
}

pub fn scalar_from_json(f: Field, v: &Value) -> Result<Scalar> {
    match v {
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(f.from_i64(i)),
            None => f.parse(&n.to_string()),
        },
        Value::String(s) => f.parse(s),
        other => Err(Error::InvalidInput(format!("scalar expected, found {other}"))),
    }
}

fn vector_from_json(f: Field, vs: &[Value], dim: usize, what: &str) -> Result<Element> {
    if vs.len() != dim {
        return Err(Error::InvalidInput(format!("{what}: expected {dim} scalars, found {}", vs.len())));
    }
    vs.iter().map(|v| scalar_from_json(f, v).map_err(|e| Error::InvalidInput(format!("{what}: {e}")))).collect()
}

pub fn algebra_to_json(a: &Algebra, degrees: Option<&[usize]>) -> AlgebraJson {
    let f = a.field();
    let vec = |v: &[Scalar]| v.iter().map(|c| scalar_to_json(f, c)).collect::<Vec<_>>();
    let mut mult = Vec::new();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            if !a.basis_product(i, j).is_empty() {
                mult.push((i, j, vec(&a.basis_product_vec(i, j))));
            }
        }
    }
    AlgebraJson {
        field: FieldJson::from_field(f),
        dim: a.dim(),
        basis: a.labels().to_vec(),
        unit: vec(a.unit()),
        mult,
        degrees: degrees.map(<[usize]>::to_vec),
    }
}

/// Parses without checking associativity; callers validate.
pub fn algebra_from_json(j: &AlgebraJson) -> Result<(Algebra, Option<Vec<usize>>)> {
    let f = j.field.to_field()?;
    let n = j.dim;
    if j.basis.len() != n {
        return Err(Error::InvalidInput(format!("basis: expected {n} labels, found {}", j.basis.len())));
    }
    let unit = vector_from_json(f, &j.unit, n, "unit")?;
    let mut a = Algebra::zero_products(f, j.basis.clone(), unit)?;
    let mut seen = vec![false; n * n];
    for (i, jj, v) in &j.mult {
        if *i >= n || *jj >= n {
            return Err(Error::InvalidInput(format!("mult: index pair ({i}, {jj}) outside 0..{n}")));
        }
        if std::mem::replace(&mut seen[i * n + jj], true) {
            return Err(Error::InvalidInput(format!("mult: pair ({i}, {jj}) given twice")));
        }
        a.set_product(*i, *jj, vector_from_json(f, v, n, &format!("mult ({i}, {jj})"))?)?;
    }
    if let Some(d) = &j.degrees {
        if d.len() != n {
            return Err(Error::InvalidInput(format!("degrees: expected {n} entries, found {}", d.len())));
        }
    }
    Ok((a, j.degrees.clone()))
}

pub fn parse_algebra(text: &str) -> Result<(Algebra, Option<Vec<usize>>)> {
    let j: AlgebraJson = serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("algebra JSON: {e}")))?;
    algebra_from_json(&j)
}

pub fn write_algebra(a: &Algebra, degrees: Option<&[usize]>) -> String {
    let mut s = serde_json::to_string_pretty(&algebra_to_json(a, degrees)).unwrap();
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VertexRef {
    Index(usize),
    Label(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ArrowJson {
    pub name: String,
    pub from: VertexRef,
    pub to: VertexRef,
}

/// A quiver with relations; each relation is a list of `[coefficient,
/// [arrow names in traversal order]]`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PathAlgebraJson {
    pub field: FieldJson,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowJson>,
    #[serde(default)]
    pub relations: Vec<Vec<(Value, Vec<String>)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_len: Option<usize>,
}

fn resolve(vertices: &[String], v: &VertexRef) -> Result<usize> {
    match v {
        VertexRef::Index(i) if *i < vertices.len() => Ok(*i),
        VertexRef::Index(i) => Err(Error::InvalidInput(format!("vertex index {i} out of range"))),
        VertexRef::Label(l) => {
            vertices.iter().position(|x| x == l).ok_or_else(|| Error::InvalidInput(format!("unknown vertex {l:?}")))
        }
    }
}

impl PathAlgebraJson {
    pub fn quiver(&self) -> Result<QuiverSpec> {
        let arrows = self
            .arrows
            .iter()
            .map(|a| {
                Ok(Arrow {
                    name: a.name.clone(),
                    from: resolve(&self.vertices, &a.from)?,
                    to: resolve(&self.vertices, &a.to)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let q = QuiverSpec { vertices: self.vertices.clone(), arrows };
        q.validate()?;
        Ok(q)
    }

    pub fn build(&self, max_len: Option<usize>) -> Result<PathAlgebra> {
        let f = self.field.to_field()?;
        let q = self.quiver()?;
        let relations = self
            .relations
            .iter()
            .map(|r| {
                let terms = r
                    .iter()
                    .map(|(c, names)| {
                        let path = names
                            .iter()
                            .map(|n| {
                                q.arrow_index(n).ok_or_else(|| Error::InvalidInput(format!("unknown arrow {n:?}")))
                            })
                            .collect::<Result<Vec<_>>>()?;
                        Ok((scalar_from_json(f, c)?, path))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Relation { terms })
            })
            .collect::<Result<Vec<_>>>()?;
        path_algebra(f, &q, &relations, max_len.or(self.max_len))
    }
}

/// Order `g` and the images of the basis labels under the generator, each a
/// list of `[coefficient, label]`; unlisted labels are fixed.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupActionJson {
    pub order: usize,
    pub images: BTreeMap<String, Vec<(Value, String)>>,
}

impl GroupActionJson {
    pub fn to_action(&self, lambda: &Algebra) -> Result<GroupAction> {
        let f = lambda.field();
        let index = |l: &str| {
            lambda
                .labels()
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| Error::InvalidInput(format!("unknown basis label {l:?}")))
        };
        let mut generator: Vec<Element> = (0..lambda.dim()).map(|i| lambda.basis_element(i)).collect();
        for (label, terms) in &self.images {
            let mut v = lambda.zero();
            for (c, target) in terms {
                let k = index(target)?;
                v[k] = f.add(&v[k], &scalar_from_json(f, c)?);
            }
            generator[index(label)?] = v;
        }
        let action = GroupAction { order: self.order, generator };
        action.verify(lambda)?;
        Ok(action)
    }
}
