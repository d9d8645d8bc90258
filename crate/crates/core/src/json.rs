//! Context-dependent JSON encodings. Elements, characters, point sets,
//! and ideals are rendered relative to an owning algebra, so every
//! `*_from_json` takes the algebra and validates against it.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use crate::algebra::{Algebra, BlockElement, Element};
use crate::error::{Error, Result};
use crate::ideal::{Ideal, IdealBlock};
use crate::space::{check_character, CharKind, Character, PointSet, PointSetBlock};

fn bad(msg: impl Into<String>) -> Error {
    Error::Validation(msg.into())
}

fn block_element_to_json(be: &BlockElement) -> Value {
    match be {
        BlockElement::Finite(atoms) => json!({ "atoms": atoms }),
        BlockElement::Fc { cofinite, support } => json!({
            "mode": if *cofinite { "cofinite" } else { "finite" },
            "support": support,
        }),
    }
}

fn block_element_from_json(v: &Value) -> Result<BlockElement> {
    let obj = v.as_object().ok_or_else(|| bad("element block must be an object"))?;
    if let Some(atoms) = obj.get("atoms") {
        let atoms = atoms.as_array().ok_or_else(|| bad("\"atoms\" must be an array"))?;
        let mut set = BTreeSet::new();
        for a in atoms {
            set.insert(a.as_str().ok_or_else(|| bad("atom labels must be strings"))?.to_string());
        }
        return Ok(BlockElement::Finite(set));
    }
    let mode = obj
        .get("mode")
        .and_then(Value::as_str)
        .ok_or_else(|| bad("element block needs \"atoms\" or \"mode\""))?;
    let cofinite = match mode {
        "finite" => false,
        "cofinite" => true,
        other => return Err(bad(format!("unknown mode {other:?}"))),
    };
    let support = obj
        .get("support")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("\"support\" must be an array"))?
        .iter()
        .map(|i| i.as_u64().map(|i| i as usize).ok_or_else(|| bad("support indices must be numbers")))
        .collect::<Result<BTreeSet<usize>>>()?;
    Ok(BlockElement::Fc { cofinite, support })
}

pub fn element_to_json(a: &Algebra, e: &Element) -> Result<Value> {
    a.check_element(e)?;
    if a.is_product() {
        Ok(json!({ "tuple": e.blocks().iter().map(block_element_to_json).collect::<Vec<_>>() }))
    } else {
        Ok(block_element_to_json(&e.blocks()[0]))
    }
}

pub fn element_from_json(a: &Algebra, v: &Value) -> Result<Element> {
    let blocks = if a.is_product() {
        let tuple = v
            .get("tuple")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("product element needs a \"tuple\" array"))?;
        tuple.iter().map(block_element_from_json).collect::<Result<Vec<_>>>()?
    } else {
        vec![block_element_from_json(v)?]
    };
    a.element_from_blocks(blocks)
}

pub fn character_to_json(a: &Algebra, x: &Character) -> Result<Value> {
    check_character(a, x)?;
    Ok(match &x.kind {
        CharKind::Atom(label) => json!({ "block": x.block, "kind": "atom", "id": label }),
        CharKind::Principal(i) => json!({ "block": x.block, "kind": "principal", "id": i }),
        CharKind::Free => json!({ "block": x.block, "kind": "free" }),
    })
}

pub fn character_from_json(a: &Algebra, v: &Value) -> Result<Character> {
    let block = v
        .get("block")
        .and_then(Value::as_u64)
        .ok_or_else(|| bad("character needs a numeric \"block\""))? as usize;
    let kind = match v.get("kind").and_then(Value::as_str) {
        Some("atom") => CharKind::Atom(
            v.get("id")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("atom character needs a string \"id\""))?
                .to_string(),
        ),
        Some("principal") => CharKind::Principal(
            v.get("id")
                .and_then(Value::as_u64)
                .ok_or_else(|| bad("principal character needs a numeric \"id\""))?
                as usize,
        ),
        Some("free") => CharKind::Free,
        _ => return Err(bad("character \"kind\" must be atom, principal, or free")),
    };
    let x = Character { block, kind };
    check_character(a, &x)?;
    Ok(x)
}

pub fn point_set_to_json(a: &Algebra, p: &PointSet) -> Result<Value> {
    p.check(a)?;
    let blocks: Vec<Value> = p
        .blocks
        .iter()
        .map(|b| match b {
            PointSetBlock::Finite(set) => {
                json!({ "mode": "finite", "set": set, "free": false })
            }
            PointSetBlock::Fc { cofinite, support, free } => json!({
                "mode": if *cofinite { "cofinite" } else { "finite" },
                "set": support,
                "free": free,
            }),
        })
        .collect();
    Ok(json!({ "blocks": blocks }))
}

pub fn point_set_from_json(a: &Algebra, v: &Value) -> Result<PointSet> {
    let raw = v
        .get("blocks")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("point set needs a \"blocks\" array"))?;
    if raw.len() != a.blocks().len() {
        return Err(bad("point set block count does not match the algebra"));
    }
    let mut blocks = Vec::new();
    for (k, b) in raw.iter().enumerate() {
        let mode = b
            .get("mode")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("point set block needs a \"mode\""))?;
        let cofinite = match mode {
            "finite" => false,
            "cofinite" => true,
            other => return Err(bad(format!("unknown mode {other:?}"))),
        };
        let free = b.get("free").and_then(Value::as_bool).unwrap_or(false);
        let set = b
            .get("set")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("point set block needs a \"set\" array"))?;
        if matches!(a.blocks()[k], crate::algebra::Block::Finite { .. }) {
            if cofinite || free {
                return Err(bad("finite blocks take mode \"finite\" and free=false"));
            }
            let mut labels = BTreeSet::new();
            for s in set {
                labels.insert(
                    s.as_str().ok_or_else(|| bad("finite-block set takes atom labels"))?.to_string(),
                );
            }
            blocks.push(PointSetBlock::Finite(labels));
        } else {
            let support = set
                .iter()
                .map(|i| {
                    i.as_u64().map(|i| i as usize).ok_or_else(|| bad("fc set takes indices"))
                })
                .collect::<Result<BTreeSet<usize>>>()?;
            blocks.push(PointSetBlock::Fc { cofinite, support, free });
        }
    }
    let p = PointSet { blocks };
    p.check(a)?;
    Ok(p)
}

pub fn ideal_to_json(i: &Ideal) -> Result<Value> {
    if i.blocks.iter().all(|b| matches!(b, IdealBlock::Full)) {
        return Ok(json!({ "kind": "full" }));
    }
    let fs: Vec<usize> = i
        .blocks
        .iter()
        .enumerate()
        .filter(|(_, b)| matches!(b, IdealBlock::FiniteSupport))
        .map(|(k, _)| k)
        .collect();
    if let [block] = fs[..] {
        if i.blocks.iter().enumerate().all(|(k, b)| k == block || matches!(b, IdealBlock::Full)) {
            return Ok(json!({ "kind": "finite-support", "block": block }));
        }
    }
    if !fs.is_empty() {
        return Err(Error::UnrepresentableIdeal(
            "mixed finite-support ideal has no serialized form".into(),
        ));
    }
    let top = i.algebra.top();
    let gen = Element(
        i.blocks
            .iter()
            .enumerate()
            .map(|(k, b)| match b {
                IdealBlock::Principal(be) => be.clone(),
                IdealBlock::Full => top.blocks()[k].clone(),
                IdealBlock::FiniteSupport => unreachable!(),
            })
            .collect(),
    );
    Ok(json!({ "kind": "principal", "gen": element_to_json(&i.algebra, &gen)? }))
}

pub fn ideal_from_json(a: &Algebra, v: &Value) -> Result<Ideal> {
    match v.get("kind").and_then(Value::as_str) {
        Some("full") => Ok(Ideal::full(a)),
        Some("finite-support") => {
            let block = v
                .get("block")
                .and_then(Value::as_u64)
                .ok_or_else(|| bad("finite-support ideal needs a numeric \"block\""))?;
            Ideal::finite_support(a, block as usize)
        }
        Some("principal") => {
            let gen = v.get("gen").ok_or_else(|| bad("principal ideal needs a \"gen\""))?;
            Ideal::principal(a, &element_from_json(a, gen)?)
        }
        _ => Err(bad("ideal \"kind\" must be principal, full, or finite-support")),
    }
}
