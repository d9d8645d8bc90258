//! Presented Boolean spaces: finite coproducts of finite discrete blocks
//! and one-point compactifications of the discrete naturals, plus their
//! clopen algebras, compact-open ideals, the hat constructions, and
//! continuous maps between presented spaces.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, AlgebraDescriptor, Universe};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::space::{CharKind, Character, PointMap, PointSet, PointSetBlock};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SpaceBlock {
    /// A finite discrete block of `n` points.
    Finite { n: usize },
    /// The one-point compactification of discrete ℕ.
    KOmega,
    /// Discrete ℕ without the limit point: accepted syntactically, but its
    /// clopen algebra is a full powerset and hence unrepresentable.
    DiscreteOmega,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpacePresentation {
    pub blocks: Vec<SpaceBlock>,
}

impl SpacePresentation {
    pub fn finite(n: usize) -> Self {
        SpacePresentation { blocks: vec![SpaceBlock::Finite { n }] }
    }

    pub fn k_omega() -> Self {
        SpacePresentation { blocks: vec![SpaceBlock::KOmega] }
    }

    pub fn is_compact(&self) -> bool {
        self.blocks.iter().all(|b| !matches!(b, SpaceBlock::DiscreteOmega))
    }

    pub fn points_bounded(&self, fc_bound: usize) -> Vec<SpacePoint> {
        let mut out = Vec::new();
        for (k, b) in self.blocks.iter().enumerate() {
            match b {
                SpaceBlock::Finite { n } => {
                    out.extend((0..*n).map(|i| SpacePoint { block: k, id: PointId::Index(i) }))
                }
                SpaceBlock::KOmega => {
                    out.extend(
                        (0..fc_bound).map(|i| SpacePoint { block: k, id: PointId::Index(i) }),
                    );
                    out.push(SpacePoint { block: k, id: PointId::Infinity });
                }
                SpaceBlock::DiscreteOmega => out.extend(
                    (0..fc_bound).map(|i| SpacePoint { block: k, id: PointId::Index(i) }),
                ),
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum PointId {
    Index(usize),
    Infinity,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SpacePoint {
    pub block: usize,
    pub id: PointId,
}

/// Atom labels of the clopen algebra of a finite discrete block are the
/// point indices rendered as strings.
fn finite_atoms(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// CO(X): the clopen algebra of a presented space. A finite discrete block
/// contributes a finite algebra on its points; a compactified block
/// contributes FC(ℕ); a coproduct contributes the product.
pub fn co_algebra(x: &SpacePresentation) -> Result<Algebra> {
    let factors: Vec<AlgebraDescriptor> = x
        .blocks
        .iter()
        .map(|b| match b {
            SpaceBlock::Finite { n } => Ok(AlgebraDescriptor::Finite { atoms: finite_atoms(*n) }),
            SpaceBlock::KOmega => Ok(AlgebraDescriptor::Fc { universe: Universe::Nat }),
            SpaceBlock::DiscreteOmega => Err(Error::UnrepresentableCO(
                "the clopen algebra of discrete ℕ is its full powerset".into(),
            )),
        })
        .collect::<Result<_>>()?;
    match factors.len() {
        1 => Algebra::new(factors.into_iter().next().unwrap()),
        _ => Algebra::product(factors),
    }
}

/// KO(X): the ideal of compact open sets inside CO(X). Every presented
/// block without DiscreteOmega is compact, so the ideal is Full.
pub fn ko_ideal(x: &SpacePresentation) -> Result<Ideal> {
    let a = co_algebra(x)?;
    Ok(Ideal::full(&a))
}

/// x̂: the evaluation character of a point on the clopen algebra.
pub fn hat_char(x: &SpacePresentation, p: &SpacePoint) -> Result<Character> {
    let block = x.blocks.get(p.block).ok_or(Error::ForeignCharacter)?;
    Ok(match (block, &p.id) {
        (SpaceBlock::Finite { n }, PointId::Index(i)) if i < n => {
            Character::atom(p.block, &i.to_string())
        }
        (SpaceBlock::KOmega, PointId::Index(i)) => Character::principal(p.block, *i),
        (SpaceBlock::KOmega, PointId::Infinity) => Character::free(p.block),
        _ => return Err(Error::ForeignCharacter),
    })
}

/// The inverse classification: a character of CO(X) as a point of X.
pub fn unhat_char(x: &SpacePresentation, c: &Character) -> Result<SpacePoint> {
    let block = x.blocks.get(c.block).ok_or(Error::ForeignCharacter)?;
    Ok(match (block, &c.kind) {
        (SpaceBlock::Finite { .. }, CharKind::Atom(l)) => SpacePoint {
            block: c.block,
            id: PointId::Index(
                l.parse().map_err(|_| Error::ForeignCharacter)?,
            ),
        },
        (SpaceBlock::KOmega, CharKind::Principal(i)) => {
            SpacePoint { block: c.block, id: PointId::Index(*i) }
        }
        (SpaceBlock::KOmega, CharKind::Free) => {
            SpacePoint { block: c.block, id: PointId::Infinity }
        }
        _ => return Err(Error::ForeignCharacter),
    })
}

/// The map ĥ_X : X → X̂ together with its separation verdict. For every
/// presented space the clopens T₀-separate points, X̂ is all of S(CO(X)),
/// and ĥ_X is a bijection.
#[derive(Clone, Debug)]
pub struct HatMap {
    pub space: SpacePresentation,
    pub algebra: Algebra,
    pub image: PointSet,
    pub t0_separation: bool,
    pub bijective: bool,
}

pub fn hat_map(x: &SpacePresentation) -> Result<HatMap> {
    let algebra = co_algebra(x)?;
    let image = PointSet::full(&algebra);
    Ok(HatMap {
        space: x.clone(),
        algebra,
        image,
        t0_separation: true,
        bijective: true,
    })
}

impl HatMap {
    pub fn apply(&self, p: &SpacePoint) -> Result<Character> {
        hat_char(&self.space, p)
    }

    pub fn inverse(&self, c: &Character) -> Result<SpacePoint> {
        unhat_char(&self.space, c)
    }
}

/// Classify a representable point set back to a space presentation,
/// block-wise: finite discrete parts become finite blocks; a cofinite
/// principal part with its limit point becomes a compactification; a
/// cofinite principal part without it is discrete ℕ.
pub fn classify_point_set(a: &Algebra, x: &PointSet) -> Result<SpacePresentation> {
    x.check(a)?;
    let blocks = x
        .blocks
        .iter()
        .map(|b| match b {
            PointSetBlock::Finite(s) => SpaceBlock::Finite { n: s.len() },
            PointSetBlock::Fc { cofinite: false, support, free: _ } => {
                SpaceBlock::Finite { n: support.len() }
            }
            PointSetBlock::Fc { cofinite: true, free: true, .. } => SpaceBlock::KOmega,
            PointSetBlock::Fc { cofinite: true, free: false, .. } => SpaceBlock::DiscreteOmega,
        })
        .collect();
    Ok(SpacePresentation { blocks })
}

/// A continuous map between presented spaces, stored through the hat
/// identification as a point map between the full dual spaces of the
/// clopen algebras. Continuity is inherited from the representation.
#[derive(Clone, Debug)]
pub struct SpaceMap {
    pub source: SpacePresentation,
    pub target: SpacePresentation,
    pub map: PointMap,
}

impl SpaceMap {
    /// Build from an explicit action on points: a table for finite blocks
    /// and an exception table with a default for compactified blocks. The
    /// default is either the identity into a compactified target block or a
    /// constant point; ∞ is sent where continuity forces it.
    pub fn new(
        source: &SpacePresentation,
        target: &SpacePresentation,
        blocks: Vec<crate::space::MapBlock>,
    ) -> Result<SpaceMap> {
        let sa = co_algebra(source)?;
        let ta = co_algebra(target)?;
        let map = PointMap::new(
            sa.clone(),
            ta.clone(),
            PointSet::full(&sa),
            PointSet::full(&ta),
            blocks,
        )?;
        Ok(SpaceMap { source: source.clone(), target: target.clone(), map })
    }

    pub fn identity(x: &SpacePresentation) -> Result<SpaceMap> {
        let a = co_algebra(x)?;
        Ok(SpaceMap {
            source: x.clone(),
            target: x.clone(),
            map: PointMap::identity(&a, &PointSet::full(&a))?,
        })
    }

    pub fn apply(&self, p: &SpacePoint) -> Result<SpacePoint> {
        let c = hat_char(&self.source, p)?;
        unhat_char(&self.target, &self.map.apply(&c)?)
    }

    /// g ∘ self.
    pub fn then(&self, g: &SpaceMap) -> Result<SpaceMap> {
        if self.target != g.source {
            return Err(Error::DomainMismatch);
        }
        Ok(SpaceMap {
            source: self.source.clone(),
            target: g.target.clone(),
            map: self.map.then(&g.map)?,
        })
    }

    pub fn fn_eq(&self, other: &SpaceMap) -> bool {
        self.source == other.source && self.target == other.target && self.map.fn_eq(&other.map)
    }

    /// CO(f): the clopen-preimage homomorphism CO(target) → CO(source),
    /// whose dual point map is f itself under the hat identification.
    pub fn co_hom(&self) -> Result<crate::hom::Homomorphism> {
        crate::hom::Homomorphism::from_dual(
            self.map.target_algebra.clone(),
            self.map.source_algebra.clone(),
            self.map.clone(),
        )
    }

    /// All continuous maps between two finite presented spaces.
    pub fn all_between(
        source: &SpacePresentation,
        target: &SpacePresentation,
    ) -> Result<Vec<SpaceMap>> {
        let sa = co_algebra(source)?;
        let ta = co_algebra(target)?;
        if !sa.is_finite() || !ta.is_finite() {
            return Err(Error::EnumerationUnsupported);
        }
        let src_points = source.points_bounded(0);
        let tgt_points = target.points_bounded(0);
        if src_points.is_empty() {
            let blocks = sa
                .blocks()
                .iter()
                .map(|_| crate::space::MapBlock::Table(BTreeMap::new()))
                .collect();
            return Ok(vec![SpaceMap::new(source, target, blocks)?]);
        }
        if tgt_points.is_empty() {
            return Ok(vec![]);
        }
        let n = src_points.len();
        let m = tgt_points.len();
        let mut out = Vec::new();
        let mut idx = vec![0usize; n];
        loop {
            let mut blocks: Vec<BTreeMap<CharKind, Character>> =
                sa.blocks().iter().map(|_| BTreeMap::new()).collect();
            for (p, &i) in src_points.iter().zip(&idx) {
                let c = hat_char(source, p)?;
                blocks[c.block].insert(c.kind, hat_char(target, &tgt_points[i])?);
            }
            out.push(SpaceMap::new(
                source,
                target,
                blocks.into_iter().map(crate::space::MapBlock::Table).collect(),
            )?);
            let mut k = 0;
            loop {
                if k == n {
                    return Ok(out);
                }
                idx[k] += 1;
                if idx[k] < m {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::IdealBlock;
    use crate::space::{char_eval, s_point_set, FcDefault, MapBlock};

    #[test]
    fn co_algebra_shapes() {
        assert_eq!(
            co_algebra(&SpacePresentation::finite(3)).unwrap(),
            Algebra::finite(&["0", "1", "2"]).unwrap()
        );
        assert_eq!(co_algebra(&SpacePresentation::k_omega()).unwrap(), Algebra::fc_nat());
        let x = SpacePresentation {
            blocks: vec![SpaceBlock::Finite { n: 2 }, SpaceBlock::KOmega],
        };
        let a = co_algebra(&x).unwrap();
        assert!(a.is_product());
        assert!(matches!(
            co_algebra(&SpacePresentation { blocks: vec![SpaceBlock::DiscreteOmega] }),
            Err(Error::UnrepresentableCO(_))
        ));
    }

    #[test]
    fn ko_ideal_is_full_on_compact_presentations() {
        for x in [
            SpacePresentation::finite(3),
            SpacePresentation::k_omega(),
            SpacePresentation { blocks: vec![SpaceBlock::Finite { n: 1 }, SpaceBlock::KOmega] },
        ] {
            let i = ko_ideal(&x).unwrap();
            assert!(i.blocks.iter().all(|b| matches!(b, IdealBlock::Full)));
        }
    }

    #[test]
    fn hat_characters_evaluate_by_membership() {
        // x̂(U) = 1 ⟺ x ∈ U, with U ranged over clopen sets = elements
        let x = SpacePresentation::k_omega();
        let a = co_algebra(&x).unwrap();
        let u = a.fc_finite(&[0, 2]).unwrap();
        let v = a.fc_cofinite(&[1]).unwrap();
        let p0 = SpacePoint { block: 0, id: PointId::Index(0) };
        let inf = SpacePoint { block: 0, id: PointId::Infinity };
        assert!(char_eval(&a, &hat_char(&x, &p0).unwrap(), &u).unwrap());
        assert!(!char_eval(&a, &hat_char(&x, &inf).unwrap(), &u).unwrap());
        // ∞ lies in every cofinite clopen — its neighborhoods
        assert!(char_eval(&a, &hat_char(&x, &inf).unwrap(), &v).unwrap());
    }

    #[test]
    fn hat_map_is_bijective_on_presented_spaces() {
        for x in [
            SpacePresentation::finite(2),
            SpacePresentation::k_omega(),
            SpacePresentation { blocks: vec![SpaceBlock::Finite { n: 3 }, SpaceBlock::KOmega] },
            SpacePresentation::finite(0),
        ] {
            let h = hat_map(&x).unwrap();
            assert!(h.t0_separation && h.bijective);
            for p in x.points_bounded(5) {
                let c = h.apply(&p).unwrap();
                assert!(h.image.contains(&c));
                assert_eq!(h.inverse(&c).unwrap(), p);
            }
        }
    }

    #[test]
    fn classification_inverts_hat_on_full_spaces() {
        for x in [
            SpacePresentation::finite(2),
            SpacePresentation::k_omega(),
            SpacePresentation { blocks: vec![SpaceBlock::Finite { n: 1 }, SpaceBlock::KOmega] },
        ] {
            let a = co_algebra(&x).unwrap();
            assert_eq!(classify_point_set(&a, &PointSet::full(&a)).unwrap(), x);
        }
        // discrete trace classifies to discrete ℕ
        let b = Algebra::fc_nat();
        let mut p = PointSet::full(&b);
        if let PointSetBlock::Fc { free, .. } = &mut p.blocks[0] {
            *free = false;
        }
        assert_eq!(
            classify_point_set(&b, &p).unwrap(),
            SpacePresentation { blocks: vec![SpaceBlock::DiscreteOmega] }
        );
        // a finite trace in an fc block is a finite discrete space
        let s = s_point_set(&b, &b.fc_finite(&[3, 5]).unwrap()).unwrap();
        assert_eq!(classify_point_set(&b, &s).unwrap(), SpacePresentation::finite(2));
    }

    #[test]
    fn space_maps_compose_and_apply() {
        let x = SpacePresentation::k_omega();
        // shift-like map: exceptions send 0 to ∞, default identity
        let f = SpaceMap::new(
            &x,
            &x,
            vec![MapBlock::Fc {
                exceptions: [(0, Character::free(0))].into(),
                default: FcDefault::Identity { block: 0 },
            }],
        )
        .unwrap();
        let p0 = SpacePoint { block: 0, id: PointId::Index(0) };
        let inf = SpacePoint { block: 0, id: PointId::Infinity };
        assert_eq!(f.apply(&p0).unwrap(), inf);
        assert_eq!(f.apply(&inf).unwrap(), inf);
        let id = SpaceMap::identity(&x).unwrap();
        assert!(f.then(&id).unwrap().fn_eq(&f));
        assert!(id.then(&f).unwrap().fn_eq(&f));
    }

    #[test]
    fn co_hom_is_clopen_preimage() {
        let x = SpacePresentation::finite(2);
        let y = SpacePresentation::finite(1);
        // the unique map X → Y collapses both points
        let maps = SpaceMap::all_between(&x, &y).unwrap();
        assert_eq!(maps.len(), 1);
        let co = maps[0].co_hom().unwrap();
        let cy = co_algebra(&y).unwrap();
        let cx = co_algebra(&x).unwrap();
        // preimage of the whole point {0} of Y is all of X
        assert_eq!(co.apply(&cy.fin_elem(&["0"]).unwrap()).unwrap(), cx.top());
        assert_eq!(co.apply(&cy.bottom()).unwrap(), cx.bottom());
    }

    #[test]
    fn all_between_counts_functions() {
        let x = SpacePresentation::finite(2);
        let y = SpacePresentation::finite(3);
        assert_eq!(SpaceMap::all_between(&x, &y).unwrap().len(), 9);
        assert_eq!(SpaceMap::all_between(&y, &x).unwrap().len(), 8);
        assert_eq!(SpaceMap::all_between(&x, &SpacePresentation::finite(0)).unwrap().len(), 0);
        assert_eq!(SpaceMap::all_between(&SpacePresentation::finite(0), &y).unwrap().len(), 1);
    }

    #[test]
    fn space_presentation_json_shape() {
        let x = SpacePresentation {
            blocks: vec![
                SpaceBlock::Finite { n: 3 },
                SpaceBlock::KOmega,
                SpaceBlock::DiscreteOmega,
            ],
        };
        let json = serde_json::to_value(&x).unwrap();
        assert_eq!(
            json,
            serde_json::json!({"blocks":[
                {"kind":"finite","n":3},
                {"kind":"k-omega"},
                {"kind":"discrete-omega"}
            ]})
        );
        let back: SpacePresentation = serde_json::from_value(json).unwrap();
        assert_eq!(back, x);
    }
}
