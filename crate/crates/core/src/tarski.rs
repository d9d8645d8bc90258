//! The Tarski duality between finite sets and finite powerset algebras:
//! P on objects and functions, At on algebras and homomorphisms, and the
//! transport of morphisms to point functions.

use std::collections::BTreeMap;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::hom::Homomorphism;
use crate::space::{CharKind, Character, MapBlock, PointMap, PointSet};

/// P(X): the powerset algebra of a finite set of labeled points.
pub fn p_obj(points: &[String]) -> Result<Algebra> {
    Algebra::new(crate::algebra::AlgebraDescriptor::Finite { atoms: points.to_vec() })
}

/// P(f) for f: X → X′: the preimage homomorphism P(X′) → P(X), stored (as
/// every homomorphism here) by its dual point map, which is f itself on
/// atom characters.
pub fn p_mor(
    source: &[String],
    target: &[String],
    f: &BTreeMap<String, String>,
) -> Result<Homomorphism> {
    let px = p_obj(source)?;
    let py = p_obj(target)?;
    for t in source {
        let img = f.get(t).ok_or_else(|| Error::Validation("f is not total".into()))?;
        if !target.contains(img) {
            return Err(Error::Validation(format!("f({t:?}) is not a point of the target")));
        }
    }
    let table: BTreeMap<CharKind, Character> = source
        .iter()
        .map(|t| (CharKind::Atom(t.clone()), Character::atom(0, &f[t])))
        .collect();
    let dual = PointMap::new(
        px.clone(),
        py.clone(),
        PointSet::full(&px),
        PointSet::full(&py),
        vec![MapBlock::Table(table)],
    )?;
    Homomorphism::from_dual(py, px, dual)
}

/// At(B): the atoms of a finite algebra.
pub fn at_obj(b: &Algebra) -> Result<Vec<Element>> {
    if !b.is_finite() {
        return Err(Error::FiniteBackendOnly);
    }
    Ok(b.atoms_bounded(0))
}

/// At(σ) for σ: B → B′: the function At(B′) → At(B) given by
/// At(σ)(x′) = ⋀{b ∈ B : x′ ≤ σ(b)}, computed by the meet formula.
pub fn at_mor(sigma: &Homomorphism) -> Result<BTreeMap<Element, Element>> {
    if !sigma.domain.is_finite() || !sigma.codomain.is_finite() {
        return Err(Error::FiniteBackendOnly);
    }
    let mut out = BTreeMap::new();
    for xp in at_obj(&sigma.codomain)? {
        let mut meet = sigma.domain.top();
        for b in sigma.domain.enumerate_elements()? {
            if sigma.codomain.leq(&xp, &sigma.apply(&b)?)? {
                meet = sigma.domain.meet(&meet, &b)?;
            }
        }
        out.insert(xp, meet);
    }
    Ok(out)
}

/// The transported point function of a morphism (φ, σ): the map sending
/// the α′-character at x′ to the α-character at At(σ)(x′). With powerset
/// codomains this is exactly the Tarski dual of σ, so the stored dual and
/// the meet-formula route must agree — which `f_sigma_agrees` certifies.
pub fn f_sigma(sigma: &Homomorphism) -> Result<BTreeMap<Element, Element>> {
    at_mor(sigma)
}

/// Cross-check: the dual point map of σ and the At-formula agree on every
/// atom (atoms of a powerset algebra are the points).
pub fn f_sigma_agrees(sigma: &Homomorphism) -> Result<bool> {
    let table = at_mor(sigma)?;
    for (xp, img) in &table {
        // xp is an atom of the codomain; its character
        let cp = atom_character(&sigma.codomain, xp)?;
        let c = sigma.dual.apply(&cp)?;
        let via_dual = atom_of_character(&sigma.domain, &c)?;
        if &via_dual != img {
            return Ok(false);
        }
    }
    Ok(true)
}

fn atom_character(_a: &Algebra, atom: &Element) -> Result<Character> {
    for (k, be) in atom.blocks().iter().enumerate() {
        match be {
            crate::algebra::BlockElement::Finite(s) if s.len() == 1 => {
                return Ok(Character::atom(k, s.iter().next().unwrap()));
            }
            crate::algebra::BlockElement::Fc { cofinite: false, support } if support.len() == 1 => {
                return Ok(Character::principal(k, *support.iter().next().unwrap()));
            }
            _ => continue,
        }
    }
    Err(Error::ForeignElement)
}

fn atom_of_character(a: &Algebra, c: &Character) -> Result<Element> {
    match &c.kind {
        CharKind::Atom(l) => a.atom_element(c.block, l),
        CharKind::Principal(i) => a.singleton_element(c.block, *i),
        CharKind::Free => Err(Error::ForeignCharacter),
    }
}
