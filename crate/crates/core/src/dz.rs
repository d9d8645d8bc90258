//! Pairs (A, X ⊆ S(A)) with their z / dz / ldz validation levels, their
//! morphisms, and the duality functors F, G, E, E′, Θᵗ, Θᵃ with roundtrip
//! and coherence checks.

use crate::algebra::{Algebra, BlockElement, Element};
use crate::error::{Error, Result};
use crate::hom::Homomorphism;
use crate::ideal::{iota, iota_inv, IndexSet, LbaPair};
use crate::space::{
    is_dense, is_open, s_trace, Character, PointMap, PointSet, PointSetBlock,
};
use crate::spaces::{classify_point_set, co_algebra, ko_ideal, SpaceMap, SpacePresentation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Level {
    Z,
    Dz,
    Ldz,
}

/// Evidence attached to a failed verdict.
#[derive(Clone, Debug)]
pub enum Witness {
    /// A nonzero element with empty trace (density failure).
    Element(Element),
    /// A point violating a pointwise condition.
    Character(Character),
    /// A representable set violating a set-level condition.
    Set(PointSet),
    /// A counterexample that exists but is not representable; described.
    Symbolic(String),
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub pass: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict { pass: true, witness: None }
    }
    pub fn fail(w: Witness) -> Self {
        Verdict { pass: false, witness: Some(w) }
    }
}

/// Decide one validation level for the pair (A, X).
pub fn validate(a: &Algebra, x: &PointSet, level: Level) -> Result<Verdict> {
    x.check(a)?;
    // z: X dense in S(A); equivalently every nonzero element has a point of
    // X in its Stone image.
    if !is_dense(a, x)? {
        return Ok(Verdict::fail(Witness::Element(empty_trace_element(a, x)?)));
    }
    if level == Level::Z {
        return Ok(Verdict::pass());
    }
    // dz: the traces of the Stone map exhaust CO(X). Block-wise the only
    // failure is an infinite discrete trace: a cofinite principal part
    // without the limit point, whose infinite–coinfinite subsets are clopen
    // in the subspace but are never traces.
    for (k, b) in x.blocks.iter().enumerate() {
        if let PointSetBlock::Fc { cofinite: true, free: false, .. } = b {
            return Ok(Verdict::fail(Witness::Symbolic(format!(
                "any infinite–coinfinite clopen of the discrete trace in block {k}, \
                 e.g. the even principal indices"
            ))));
        }
    }
    if level == Level::Dz {
        return Ok(Verdict::pass());
    }
    // ldz: additionally X open in S(A)
    if !is_open(a, x)? {
        return Ok(Verdict::fail(Witness::Set(x.clone())));
    }
    Ok(Verdict::pass())
}

/// A nonzero element whose trace on X is empty, taken from a non-dense
/// block.
fn empty_trace_element(a: &Algebra, x: &PointSet) -> Result<Element> {
    for (k, (xb, ab)) in x.blocks.iter().zip(a.blocks()).enumerate() {
        let part: Option<BlockElement> = match (xb, ab) {
            (PointSetBlock::Finite(s), crate::algebra::Block::Finite { atoms }) => {
                let missing: std::collections::BTreeSet<String> =
                    atoms.iter().filter(|t| !s.contains(*t)).cloned().collect();
                if missing.is_empty() {
                    None
                } else {
                    Some(BlockElement::Finite(missing))
                }
            }
            (
                PointSetBlock::Fc { cofinite, support, .. },
                crate::algebra::Block::Fc { universe },
            ) => {
                if *cofinite {
                    if support.is_empty() {
                        None
                    } else {
                        // the excluded principals are missed entirely
                        Some(BlockElement::Fc { cofinite: false, support: support.clone() })
                    }
                } else {
                    // a singleton outside the finite support
                    let bound = universe.finite_size().unwrap_or(usize::MAX);
                    (0..bound)
                        .find(|i| !support.contains(i))
                        .map(|i| BlockElement::Fc { cofinite: false, support: [i].into() })
                }
            }
            _ => unreachable!("block shape mismatch"),
        };
        if let Some(p) = part {
            let mut blocks = a.bottom().blocks().to_vec();
            blocks[k] = p;
            return a.element_from_blocks(blocks);
        }
    }
    Err(Error::Validation("no density failure to witness".into()))
}

/// Certify that no sampled trace realizes the clopen given by an
/// infinite–coinfinite residue class: for each sample, return a principal
/// index on which the trace and the class disagree.
pub fn trace_refutes_class(
    a: &Algebra,
    x: &PointSet,
    block: usize,
    class: &IndexSet,
    samples: &[Element],
) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for e in samples {
        let t = s_trace(a, x, e)?;
        let (cofinite, support) = match &t.blocks[block] {
            PointSetBlock::Fc { cofinite, support, .. } => (*cofinite, support),
            _ => return Err(Error::ForeignElement),
        };
        let idx = if cofinite {
            // the trace contains all but finitely many indices, so it
            // contains some index outside the class
            (0..)
                .find(|i| !class.contains(*i) && !support.contains(i))
                .expect("class is coinfinite")
        } else {
            // the trace is finite, so it misses some index in the class
            (0..)
                .map(|j| class.residue + j * class.modulus)
                .find(|i| !support.contains(i))
                .expect("class is infinite")
        };
        out.push(idx);
    }
    Ok(out)
}

/// A pair (A, X) with its highest validated level (None: not even z).
#[derive(Clone, Debug)]
pub struct DzAlgebra {
    pub algebra: Algebra,
    pub point_set: PointSet,
    pub level: Option<Level>,
}

impl PartialEq for DzAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.point_set == other.point_set
    }
}
impl Eq for DzAlgebra {}

impl DzAlgebra {
    pub fn analyze(a: &Algebra, x: PointSet) -> Result<DzAlgebra> {
        let level = if !validate(a, &x, Level::Z)?.pass {
            None
        } else if !validate(a, &x, Level::Dz)?.pass {
            Some(Level::Z)
        } else if !validate(a, &x, Level::Ldz)?.pass {
            Some(Level::Dz)
        } else {
            Some(Level::Ldz)
        };
        Ok(DzAlgebra { algebra: a.clone(), point_set: x, level })
    }

    pub fn has_level(&self, level: Level) -> bool {
        self.level.is_some_and(|l| l >= level)
    }

    fn require(&self, level: Level) -> Result<()> {
        if self.has_level(level) {
            Ok(())
        } else {
            Err(Error::NotValidated)
        }
    }
}

/// A DZA morphism (A,X) → (A′,X′): a homomorphism φ: A → A′ together with
/// the point map f: X′ → X satisfying x′∘φ = f(x′) on all of X′.
#[derive(Clone, Debug)]
pub struct DzMorphism {
    pub source: DzAlgebra,
    pub target: DzAlgebra,
    pub phi: Homomorphism,
    pub f: PointMap,
}

impl DzMorphism {
    pub fn new(
        source: DzAlgebra,
        target: DzAlgebra,
        phi: Homomorphism,
        f: PointMap,
    ) -> Result<DzMorphism> {
        if phi.domain != source.algebra
            || phi.codomain != target.algebra
            || f.source != target.point_set
            || !f.target.is_subset(&source.point_set)
        {
            return Err(Error::DomainMismatch);
        }
        let m = DzMorphism { source, target, phi, f };
        let v = m.condition_verdict()?;
        if !v.pass {
            return Err(Error::Validation(format!(
                "x′∘φ = f(x′) fails at {:?}",
                v.witness
            )));
        }
        Ok(m)
    }

    /// Derive the point part by restricting the dual of φ; fails when the
    /// dual does not carry X′ into X.
    pub fn from_hom(source: &DzAlgebra, target: &DzAlgebra, phi: Homomorphism) -> Result<DzMorphism> {
        if phi.domain != source.algebra || phi.codomain != target.algebra {
            return Err(Error::DomainMismatch);
        }
        let f = phi.dual.restrict(target.point_set.clone(), source.point_set.clone())?;
        DzMorphism::new(source.clone(), target.clone(), phi, f)
    }

    /// The defining condition, checked on the structural probe points of
    /// the dual map (exact for this representation class).
    pub fn condition_verdict(&self) -> Result<Verdict> {
        let dual = self
            .phi
            .dual
            .restrict(self.target.point_set.clone(), self.source.point_set.clone());
        let dual = match dual {
            Ok(d) => d,
            Err(_) => {
                // the dual escapes X on some probe point
                for x in self.phi.dual.probe_points() {
                    if self.target.point_set.contains(&x)
                        && !self.source.point_set.contains(&self.phi.dual.apply(&x)?)
                    {
                        return Ok(Verdict::fail(Witness::Character(x)));
                    }
                }
                return Ok(Verdict::fail(Witness::Symbolic(
                    "dual of φ escapes the source point set".into(),
                )));
            }
        };
        if self.f.fn_eq(&dual) {
            return Ok(Verdict::pass());
        }
        for x in self.f.probe_points() {
            if self.f.apply(&x).ok() != dual.apply(&x).ok() {
                return Ok(Verdict::fail(Witness::Character(x)));
            }
        }
        // fn_eq can also fail on the default disagreement of an infinite
        // block; surface it symbolically
        Ok(Verdict::fail(Witness::Symbolic(
            "f and the dual of φ disagree on cofinitely many points".into(),
        )))
    }

    pub fn identity(d: &DzAlgebra) -> Result<DzMorphism> {
        let phi = Homomorphism::identity(&d.algebra)?;
        DzMorphism::from_hom(d, d, phi)
    }

    /// Composite `other ∘ self` (self: d1 → d2, other: d2 → d3).
    pub fn then(&self, other: &DzMorphism) -> Result<DzMorphism> {
        if self.target != other.source {
            return Err(Error::DomainMismatch);
        }
        let phi = self.phi.compose_with(&other.phi)?;
        let f = other.f.then(&self.f)?;
        DzMorphism::new(self.source.clone(), other.target.clone(), phi, f)
    }

    pub fn fn_eq(&self, other: &DzMorphism) -> bool {
        self.source == other.source
            && self.target == other.target
            && self.phi.fn_eq(&other.phi)
            && self.f.fn_eq(&other.f)
    }
}

// ---------------------------------------------------------------------------
// The functors
// ---------------------------------------------------------------------------

/// F(X) = (CO(X), X̂); every presented space yields an ldz pair.
pub fn f_obj(x: &SpacePresentation) -> Result<DzAlgebra> {
    let a = co_algebra(x)?;
    let full = PointSet::full(&a);
    DzAlgebra::analyze(&a, full)
}

/// F(f: X → Y) = (CO(f), f̂): F(Y) → F(X).
pub fn f_mor(f: &SpaceMap) -> Result<DzMorphism> {
    let source = f_obj(&f.target)?;
    let target = f_obj(&f.source)?;
    let phi = f.co_hom()?;
    DzMorphism::new(source, target, phi, f.map.clone())
}

/// G(A, X) = X with its subspace structure, classified to a presentation;
/// also reports local compactness for ldz inputs.
pub fn g_obj(d: &DzAlgebra) -> Result<(SpacePresentation, bool)> {
    d.require(Level::Z)?;
    let sp = classify_point_set(&d.algebra, &d.point_set)?;
    let locally_compact = is_open(&d.algebra, &d.point_set)?;
    Ok((sp, locally_compact))
}

/// G(φ, f) = f.
pub fn g_mor(m: &DzMorphism) -> PointMap {
    m.f.clone()
}

/// E(A, X) = (A, I_X) with I_X = {a : s_A(a) ⊆ X}; defined on ldz pairs and
/// always lands on a ZLBA.
pub fn e_obj(d: &DzAlgebra) -> Result<LbaPair> {
    d.require(Level::Ldz)?;
    let ideal = iota_inv(&d.algebra, &d.point_set)?;
    let pair = LbaPair::analyze(&d.algebra, ideal)?;
    if !pair.is_zlba {
        return Err(Error::Validation(
            "E produced a non-ZLBA pair from an ldz input".into(),
        ));
    }
    Ok(pair)
}

/// E(φ, f) = φ, after asserting the (LBA) condition: every member of the
/// target ideal sits under the image of a member of the source ideal,
/// decided as dual-image containment.
pub fn e_mor(m: &DzMorphism) -> Result<Homomorphism> {
    let img = m.phi.dual.image_of(&m.target.point_set)?;
    if !img.is_subset(&m.source.point_set) {
        // a violating b: an ideal member seen by an escaping point
        return Err(Error::LbaConditionFailed(format!(
            "dual image escapes the source point set: {:?}",
            img
        )));
    }
    Ok(m.phi.clone())
}

/// E′(A, I) = (A, X_I) with X_I = ι(I); defined on ZLBAs, lands on ldz.
pub fn ep_obj(p: &LbaPair) -> Result<DzAlgebra> {
    if !p.is_zlba {
        return Err(Error::NotZlba);
    }
    let x = iota(&p.ideal)?;
    let d = DzAlgebra::analyze(&p.algebra, x)?;
    if !d.has_level(Level::Ldz) {
        return Err(Error::Validation("E′ produced a non-ldz pair from a ZLBA".into()));
    }
    Ok(d)
}

/// E′(φ) = (φ, f_φ) with f_φ the restriction of the dual to X_J → X_I,
/// available exactly when φ satisfies the (LBA) condition.
pub fn ep_mor(source: &LbaPair, target: &LbaPair, phi: &Homomorphism) -> Result<DzMorphism> {
    let ds = ep_obj(source)?;
    let dt = ep_obj(target)?;
    if phi.domain != source.algebra || phi.codomain != target.algebra {
        return Err(Error::DomainMismatch);
    }
    let img = phi.dual.image_of(&dt.point_set)?;
    if !img.is_subset(&ds.point_set) {
        return Err(Error::LbaConditionFailed(
            "dual image of X_J escapes X_I".into(),
        ));
    }
    DzMorphism::from_hom(&ds, &dt, phi.clone())
}

/// E′(E(d)) = d, literally.
pub fn check_ep_e(d: &DzAlgebra) -> Result<bool> {
    let p = e_obj(d)?;
    Ok(&ep_obj(&p)? == d)
}

/// E(E′(p)) = p, literally.
pub fn check_e_ep(p: &LbaPair) -> Result<bool> {
    let d = ep_obj(p)?;
    Ok(&e_obj(&d)? == p)
}

/// Θᵗ(X) = (CO(X), KO(X)).
pub fn theta_t(x: &SpacePresentation) -> Result<LbaPair> {
    let a = co_algebra(x)?;
    let ideal = ko_ideal(x)?;
    LbaPair::analyze(&a, ideal)
}

/// Θᵃ(A, I) = L_I^A, classified back to a presentation.
pub fn theta_a(p: &LbaPair) -> Result<SpacePresentation> {
    if !p.is_zlba {
        return Err(Error::NotZlba);
    }
    classify_point_set(&p.algebra, &p.ideal.l_set()?)
}

/// E(F(X)) = Θᵗ(X) under the hat identification, including the direct
/// check I_{X̂} = KO(X).
pub fn check_ef_equals_theta_t(x: &SpacePresentation) -> Result<bool> {
    let lhs = e_obj(&f_obj(x)?)?;
    let rhs = theta_t(x)?;
    let i_hat = iota_inv(&lhs.algebra, &f_obj(x)?.point_set)?;
    Ok(lhs == rhs && i_hat == ko_ideal(x)?)
}

/// G(E′(p)) = Θᵃ(p) block-wise.
pub fn check_g_ep_equals_theta_a(p: &LbaPair) -> Result<bool> {
    let (lhs, _) = g_obj(&ep_obj(p)?)?;
    Ok(lhs == theta_a(p)?)
}
