//! The map-side presentation of a pair (A, X): the trace map α = s_A^X
//! into the powerset of X, its z/mz/lmz validation levels, the functors
//! F′ and G′, and morphisms into complete atomic codomains.
//!
//! Powerset codomains are materialized only on the finite backend; for
//! fc-based objects every condition is decided through the identification
//! of X_α with X.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::{Algebra, Element};
use crate::dz::{DzAlgebra, DzMorphism, Level, Verdict, Witness};
use crate::error::{Error, Result};
use crate::hom::Homomorphism;
use crate::space::{
    block_points, char_eval, characters, s_trace, CharKind, Character, MapBlock, PointMap,
    PointSet,
};
use crate::spaces::{classify_point_set, co_algebra};

/// α = s_A^X packaged with its validation levels. X_α is identified with X
/// throughout (the h_α identification), so the levels are exactly the
/// z/dz/ldz levels of the underlying pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MzPresentation {
    pub base: DzAlgebra,
    pub z_map: bool,
    pub mz_map: bool,
    pub lmz_map: bool,
}

/// F′(A, X) = s_A^X; defined on dz pairs, lmz on ldz input.
pub fn fp_obj(d: &DzAlgebra) -> Result<MzPresentation> {
    if !d.has_level(Level::Dz) {
        return Err(Error::NotValidated);
    }
    Ok(MzPresentation {
        base: d.clone(),
        z_map: d.has_level(Level::Z),
        mz_map: d.has_level(Level::Dz),
        lmz_map: d.has_level(Level::Ldz),
    })
}

/// A morphism (φ, σ) with σ a complete homomorphism between the powerset
/// codomains, stored by its Tarski dual: the point function f_σ: X′ → X.
#[derive(Clone, Debug)]
pub struct MBoolMorphism {
    pub source: MzPresentation,
    pub target: MzPresentation,
    pub phi: Homomorphism,
    pub sigma_dual: PointMap,
}

/// F′(φ, f) = (φ, 𝔓(f)): the point part of the DZA morphism becomes the
/// Tarski dual of σ.
pub fn fp_mor(m: &DzMorphism) -> Result<MBoolMorphism> {
    Ok(MBoolMorphism {
        source: fp_obj(&m.source)?,
        target: fp_obj(&m.target)?,
        phi: m.phi.clone(),
        sigma_dual: m.f.clone(),
    })
}

impl MBoolMorphism {
    /// The defining square α′∘φ = σ∘α, checked exhaustively on the finite
    /// backend: for every a and every point x′ of X′,
    /// x′ ∈ α′(φ(a)) ⟺ f_σ(x′) ∈ α(a).
    pub fn check_square(&self) -> Result<bool> {
        let a = &self.source.base.algebra;
        if !a.is_finite() || !self.target.base.algebra.is_finite() {
            return Err(Error::FiniteBackendOnly);
        }
        let xs = &self.source.base.point_set;
        let xt = &self.target.base.point_set;
        for e in a.enumerate_elements()? {
            let alpha = s_trace(a, xs, &e)?;
            let alpha_phi = s_trace(&self.target.base.algebra, xt, &self.phi.apply(&e)?)?;
            for x in characters(&self.target.base.algebra)? {
                if !xt.contains(&x) {
                    continue;
                }
                let lhs = alpha_phi.contains(&x);
                let rhs = alpha.contains(&self.sigma_dual.apply(&x)?);
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// The per-block characters of X in a fixed (sorted) order; the basis of
/// every identification with a rebuilt clopen algebra. Finite backend only.
fn x_chars_by_block(d: &DzAlgebra) -> Result<Vec<Vec<Character>>> {
    if !d.algebra.is_finite() {
        return Err(Error::FiniteBackendOnly);
    }
    let mut out = Vec::new();
    for (k, ab) in d.algebra.blocks().iter().enumerate() {
        let mut chars: Vec<Character> = block_points(ab, k)
            .into_iter()
            .filter(|c| d.point_set.contains(c))
            .collect();
        chars.sort();
        out.push(chars);
    }
    Ok(out)
}

/// G′(α) = (CO(X_α), X̂_α): the clopen algebra of X rebuilt as the dual of
/// the classified presentation, with the full point set.
pub fn gp_obj(m: &MzPresentation) -> Result<DzAlgebra> {
    let sp = classify_point_set(&m.base.algebra, &m.base.point_set)?;
    let a = co_algebra(&sp)?;
    DzAlgebra::analyze(&a, PointSet::full(&a))
}

/// The constructed isomorphism d → G′(F′(d)) on the finite backend: the
/// Stone-map identification, returned as a homomorphism whose dual pairs
/// the rebuilt characters with the points of X in order.
pub fn gp_fp_iso(d: &DzAlgebra) -> Result<Homomorphism> {
    let rebuilt = gp_obj(&fp_obj(d)?)?;
    let chars = x_chars_by_block(d)?;
    let blocks: Vec<MapBlock> = chars
        .iter()
        .map(|blk| {
            MapBlock::Table(
                blk.iter()
                    .enumerate()
                    .map(|(j, c)| (CharKind::Atom(j.to_string()), c.clone()))
                    .collect(),
            )
        })
        .collect();
    let dual = PointMap::new(
        rebuilt.algebra.clone(),
        d.algebra.clone(),
        PointSet::full(&rebuilt.algebra),
        PointSet::full(&d.algebra),
        blocks,
    )?;
    Homomorphism::from_dual(d.algebra.clone(), rebuilt.algebra.clone(), dual)
}

/// Existence check for the constructed isomorphism: on the finite backend
/// the identification homomorphism must be bijective; on fc objects the
/// block structures of X and of the rebuilt full space must classify
/// identically (the identification is then the index-order bijection).
pub fn check_gp_fp_iso(d: &DzAlgebra) -> Result<bool> {
    let m = fp_obj(d)?;
    let rebuilt = gp_obj(&m)?;
    let same_shape = classify_point_set(&d.algebra, &d.point_set)?
        == classify_point_set(&rebuilt.algebra, &rebuilt.point_set)?;
    if !same_shape || rebuilt.level != d.level {
        return Ok(false);
    }
    if !d.algebra.is_finite() {
        return Ok(true);
    }
    let iso = gp_fp_iso(d)?;
    let mut images = BTreeSet::new();
    for e in d.algebra.enumerate_elements()? {
        images.insert(iso.apply(&e)?);
    }
    Ok(images.len() == rebuilt.algebra.enumerate_elements()?.len())
}

/// G′(φ, σ) = (CO(f_σ), f̂_σ): transported through the identifications of
/// both sides; finite backend only.
pub fn gp_mor(mb: &MBoolMorphism) -> Result<DzMorphism> {
    let src = gp_obj(&mb.source)?;
    let tgt = gp_obj(&mb.target)?;
    let src_chars = x_chars_by_block(&mb.source.base)?;
    let tgt_chars = x_chars_by_block(&mb.target.base)?;
    // index of a character of X inside the identification tables
    let locate = |chars: &[Vec<Character>], c: &Character| -> Result<(usize, usize)> {
        for (k, blk) in chars.iter().enumerate() {
            if let Some(j) = blk.iter().position(|x| x == c) {
                return Ok((k, j));
            }
        }
        Err(Error::ForeignCharacter)
    };
    // dual of CO(f_σ): S(tgt) → S(src), j′ ↦ index of f_σ(x′_{j′})
    let mut blocks: Vec<BTreeMap<CharKind, Character>> =
        tgt.algebra.blocks().iter().map(|_| BTreeMap::new()).collect();
    for (k, blk) in tgt_chars.iter().enumerate() {
        for (j, c) in blk.iter().enumerate() {
            let img = mb.sigma_dual.apply(c)?;
            let (k2, j2) = locate(&src_chars, &img)?;
            blocks[k].insert(CharKind::Atom(j.to_string()), Character::atom(k2, &j2.to_string()));
        }
    }
    let dual = PointMap::new(
        tgt.algebra.clone(),
        src.algebra.clone(),
        PointSet::full(&tgt.algebra),
        PointSet::full(&src.algebra),
        blocks.into_iter().map(MapBlock::Table).collect(),
    )?;
    let phi = Homomorphism::from_dual(src.algebra.clone(), tgt.algebra.clone(), dual)?;
    DzMorphism::from_hom(&src, &tgt, phi)
}

/// Verdicts for a user-supplied table α: A → P(points) on the finite
/// backend, per level.
#[derive(Clone, Debug)]
pub struct MapLevels {
    pub z_map: Verdict,
    pub mz_map: Verdict,
    pub lmz_map: Verdict,
}

/// Decide z-map (Boolean monomorphism whose codomain atoms are meets of
/// α-images), mz-map and lmz-map (the dz/ldz levels of (A, X_α)) for an
/// explicit table into the powerset of a finite point set.
pub fn validate_map_levels(
    a: &Algebra,
    points: &[String],
    alpha: &BTreeMap<Element, Element>,
) -> Result<MapLevels> {
    if !a.is_finite() {
        return Err(Error::FiniteBackendOnly);
    }
    let b = Algebra::new(crate::algebra::AlgebraDescriptor::Finite { atoms: points.to_vec() })?;
    if !crate::hom::is_homomorphism(a, &b, alpha)? {
        let w = Witness::Symbolic("α is not a Boolean homomorphism".into());
        return Ok(MapLevels {
            z_map: Verdict::fail(w.clone()),
            mz_map: Verdict::fail(w.clone()),
            lmz_map: Verdict::fail(w),
        });
    }
    // injectivity
    let elems = a.enumerate_elements()?;
    let mut z_map = Verdict::pass();
    let mut seen: BTreeMap<&Element, &Element> = BTreeMap::new();
    for e in &elems {
        let img = alpha.get(e).unwrap();
        if let Some(prev) = seen.insert(img, e) {
            z_map = Verdict::fail(Witness::Symbolic(format!(
                "α identifies {prev:?} and {e:?}"
            )));
            break;
        }
    }
    // atom-meet condition: each point's singleton is the meet of the
    // α-images containing it
    if z_map.pass {
        for t in points {
            let singleton = b.fin_elem(&[t.as_str()])?;
            let mut meet = b.top();
            for e in &elems {
                let img = alpha.get(e).unwrap();
                if b.leq(&singleton, img)? {
                    meet = b.meet(&meet, img)?;
                }
            }
            if meet != singleton {
                z_map = Verdict::fail(Witness::Element(singleton));
                break;
            }
        }
    }
    // X_α: the characters a ↦ (t ∈ α(a)), one per point of the codomain
    let mut x_alpha = PointSet::empty(a);
    for t in points {
        let singleton = b.fin_elem(&[t.as_str()])?;
        let c = characters(a)?
            .into_iter()
            .find(|x| {
                elems.iter().all(|e| {
                    char_eval(a, x, e).unwrap()
                        == b.leq(&singleton, alpha.get(e).unwrap()).unwrap()
                })
            })
            .ok_or_else(|| {
                Error::Validation(format!("α-character at point {t:?} is not a character"))
            })?;
        x_alpha.insert(&c);
    }
    let mz_map = crate::dz::validate(a, &x_alpha, Level::Dz)?;
    let lmz_map = crate::dz::validate(a, &x_alpha, Level::Ldz)?;
    Ok(MapLevels { z_map, mz_map, lmz_map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::all_homomorphisms;
    use crate::space::{s_point_set, PointSetBlock};

    fn full_pair(a: &Algebra) -> DzAlgebra {
        DzAlgebra::analyze(a, PointSet::full(a)).unwrap()
    }

    #[test]
    fn fp_levels_track_the_base_pair() {
        let a = Algebra::fc_nat();
        let m = fp_obj(&full_pair(&a)).unwrap();
        assert!(m.z_map && m.mz_map && m.lmz_map);
        // a merely-z pair is rejected (F′ needs dz)
        let mut p = PointSet::full(&a);
        if let PointSetBlock::Fc { free, .. } = &mut p.blocks[0] {
            *free = false;
        }
        let z_only = DzAlgebra::analyze(&a, p).unwrap();
        assert!(matches!(fp_obj(&z_only), Err(Error::NotValidated)));
    }

    #[test]
    fn gp_rebuilds_an_isomorphic_pair() {
        for a in [
            Algebra::finite(&["p", "q"]).unwrap(),
            Algebra::finite(&["p", "q", "r"]).unwrap(),
            Algebra::finite(&[]).unwrap(),
        ] {
            let d = full_pair(&a);
            assert!(check_gp_fp_iso(&d).unwrap());
            let iso = gp_fp_iso(&d).unwrap();
            // explicit bijective homomorphism
            let rebuilt = gp_obj(&fp_obj(&d).unwrap()).unwrap();
            let mut imgs = BTreeSet::new();
            for e in a.enumerate_elements().unwrap() {
                imgs.insert(iso.apply(&e).unwrap());
            }
            assert_eq!(imgs.len(), rebuilt.algebra.element_count().unwrap() as usize);
        }
        // fc object: structural identification
        let b = Algebra::fc_nat();
        assert!(check_gp_fp_iso(&full_pair(&b)).unwrap());
    }

    #[test]
    fn fp_mor_square_commutes_for_real_morphisms() {
        let a = Algebra::finite(&["p", "q"]).unwrap();
        let b = Algebra::finite(&["u"]).unwrap();
        let da = full_pair(&a);
        let db = full_pair(&b);
        for phi in all_homomorphisms(&a, &b).unwrap() {
            let m = DzMorphism::from_hom(&da, &db, phi).unwrap();
            let mb = fp_mor(&m).unwrap();
            assert!(mb.check_square().unwrap());
            // transported back, G′ reproduces a morphism matching the
            // rebuilt objects
            let back = gp_mor(&mb).unwrap();
            assert!(back.condition_verdict().unwrap().pass);
        }
    }

    #[test]
    fn alpha_equal_to_stone_map_is_lmz() {
        let a = Algebra::finite(&["p", "q"]).unwrap();
        // α = s_A into the powerset of the two characters, named by atoms
        let points = vec!["p".to_string(), "q".to_string()];
        let alpha: BTreeMap<Element, Element> = a
            .enumerate_elements()
            .unwrap()
            .into_iter()
            .map(|e| {
                let s = s_point_set(&a, &e).unwrap();
                let labels: Vec<&str> = ["p", "q"]
                    .iter()
                    .filter(|t| s.contains(&Character::atom(0, t)))
                    .copied()
                    .collect();
                let img = Algebra::finite(&["p", "q"]).unwrap().fin_elem(&labels).unwrap();
                (e, img)
            })
            .collect();
        let v = validate_map_levels(&a, &points, &alpha).unwrap();
        assert!(v.z_map.pass && v.mz_map.pass && v.lmz_map.pass);
    }

    #[test]
    fn projection_alpha_fails_z_and_mz() {
        // α: Finite{p,q} → P({1}), a ↦ {1} iff p ∈ a: a homomorphism, but
        // not injective, and X_α is a single point of the 2-point space
        let a = Algebra::finite(&["p", "q"]).unwrap();
        let points = vec!["1".to_string()];
        let b = Algebra::finite(&["1"]).unwrap();
        let alpha: BTreeMap<Element, Element> = a
            .enumerate_elements()
            .unwrap()
            .into_iter()
            .map(|e| {
                let img = if char_eval(&a, &Character::atom(0, "p"), &e).unwrap() {
                    b.top()
                } else {
                    b.bottom()
                };
                (e, img)
            })
            .collect();
        let v = validate_map_levels(&a, &points, &alpha).unwrap();
        assert!(!v.z_map.pass, "a monomorphism is required");
        assert!(!v.mz_map.pass, "X_α is not dense");
        assert!(!v.lmz_map.pass);
    }

    #[test]
    fn non_homomorphism_tables_fail_everything() {
        let a = Algebra::finite(&["p"]).unwrap();
        let b = Algebra::finite(&["1"]).unwrap();
        // swap 0 and 1: not a homomorphism
        let alpha: BTreeMap<Element, Element> = a
            .enumerate_elements()
            .unwrap()
            .into_iter()
            .map(|e| {
                let img = if a.is_zero(&e).unwrap() { b.top() } else { b.bottom() };
                (e, img)
            })
            .collect();
        let v = validate_map_levels(&a, &["1".to_string()], &alpha).unwrap();
        assert!(!v.z_map.pass && !v.mz_map.pass && !v.lmz_map.pass);
    }

    #[test]
    fn user_tables_require_the_finite_backend() {
        let a = Algebra::fc_nat();
        assert!(matches!(
            validate_map_levels(&a, &[], &BTreeMap::new()),
            Err(Error::FiniteBackendOnly)
        ));
    }
}
