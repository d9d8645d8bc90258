//! Characters, representable point sets of the dual space, the Stone map,
//! topology predicates, and representable point maps.
//!
//! The dual space of a product algebra is the coproduct of the factor
//! spaces, so every character is tagged with the block it lives in. In an
//! infinite finite–cofinite block every principal character is isolated and
//! the free character is the unique limit point of every infinite set of
//! principals; all topology predicates below are the block-wise readings of
//! that picture.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::{Algebra, Block, BlockElement, Element};
use crate::error::{Error, Result};

/// Which character of a block: evaluation at a finite-block atom, at an
/// fc-block index, or the cofinite (free) character of an infinite fc block.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CharKind {
    Atom(String),
    Principal(usize),
    Free,
}

/// A point of the dual space: a homomorphism into the two-element algebra.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Character {
    pub block: usize,
    pub kind: CharKind,
}

impl Character {
    pub fn atom(block: usize, label: &str) -> Self {
        Character { block, kind: CharKind::Atom(label.to_string()) }
    }
    pub fn principal(block: usize, index: usize) -> Self {
        Character { block, kind: CharKind::Principal(index) }
    }
    pub fn free(block: usize) -> Self {
        Character { block, kind: CharKind::Free }
    }
}

/// Checks that `x` names an actual character of `a`.
pub fn check_character(a: &Algebra, x: &Character) -> Result<()> {
    let block = a.blocks().get(x.block).ok_or(Error::ForeignCharacter)?;
    match (&x.kind, block) {
        (CharKind::Atom(l), Block::Finite { atoms }) if atoms.iter().any(|t| t == l) => Ok(()),
        (CharKind::Principal(i), Block::Fc { universe }) => match universe.finite_size() {
            Some(n) if *i >= n => Err(Error::ForeignCharacter),
            _ => Ok(()),
        },
        (CharKind::Free, Block::Fc { universe }) if universe.is_infinite() => Ok(()),
        _ => Err(Error::ForeignCharacter),
    }
}

/// Evaluate a character on an element.
pub fn char_eval(a: &Algebra, x: &Character, e: &Element) -> Result<bool> {
    check_character(a, x)?;
    a.check_element(e)?;
    let be = &e.blocks()[x.block];
    Ok(match (&x.kind, be) {
        (CharKind::Atom(l), BlockElement::Finite(set)) => set.contains(l),
        (CharKind::Principal(i), BlockElement::Fc { cofinite, support }) => {
            if *cofinite {
                !support.contains(i)
            } else {
                support.contains(i)
            }
        }
        (CharKind::Free, BlockElement::Fc { cofinite, .. }) => *cofinite,
        _ => return Err(Error::ForeignCharacter),
    })
}

/// All characters, with infinite fc blocks listing `fc_bound` principals
/// followed by the free character.
pub fn characters_bounded(a: &Algebra, fc_bound: usize) -> Vec<Character> {
    let mut out = Vec::new();
    for (k, block) in a.blocks().iter().enumerate() {
        match block {
            Block::Finite { atoms } => {
                for t in atoms {
                    out.push(Character::atom(k, t));
                }
            }
            Block::Fc { universe } => match universe.finite_size() {
                Some(n) => {
                    for i in 0..n {
                        out.push(Character::principal(k, i));
                    }
                }
                None => {
                    for i in 0..fc_bound {
                        out.push(Character::principal(k, i));
                    }
                    out.push(Character::free(k));
                }
            },
        }
    }
    out
}

/// Exactly the characters of a finite algebra.
pub fn characters(a: &Algebra) -> Result<Vec<Character>> {
    if !a.is_finite() {
        return Err(Error::EnumerationUnsupported);
    }
    Ok(characters_bounded(a, 0))
}

/// One block of a representable point set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum PointSetBlock {
    /// Subset of the atom characters of a finite block.
    Finite(BTreeSet<String>),
    /// Principal part (finite or cofinite set of indices) plus the free
    /// character flag; `free` is always false over a finite universe.
    Fc { cofinite: bool, support: BTreeSet<usize>, free: bool },
}

/// A representable subset of the dual space, one block per factor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PointSet {
    pub blocks: Vec<PointSetBlock>,
}

impl PointSet {
    pub fn empty(a: &Algebra) -> Self {
        PointSet {
            blocks: a
                .blocks()
                .iter()
                .map(|b| match b {
                    Block::Finite { .. } => PointSetBlock::Finite(BTreeSet::new()),
                    Block::Fc { .. } => PointSetBlock::Fc {
                        cofinite: false,
                        support: BTreeSet::new(),
                        free: false,
                    },
                })
                .collect(),
        }
    }

    pub fn full(a: &Algebra) -> Self {
        PointSet {
            blocks: a
                .blocks()
                .iter()
                .map(|b| match b {
                    Block::Finite { atoms } => {
                        PointSetBlock::Finite(atoms.iter().cloned().collect())
                    }
                    Block::Fc { universe } => match universe.finite_size() {
                        Some(n) => PointSetBlock::Fc {
                            cofinite: false,
                            support: (0..n).collect(),
                            free: false,
                        },
                        None => PointSetBlock::Fc {
                            cofinite: true,
                            support: BTreeSet::new(),
                            free: true,
                        },
                    },
                })
                .collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|b| match b {
            PointSetBlock::Finite(s) => s.is_empty(),
            PointSetBlock::Fc { cofinite, support: _, free } => !cofinite && !free && match b {
                PointSetBlock::Fc { support, .. } => support.is_empty(),
                _ => unreachable!(),
            },
        })
    }

    pub fn contains(&self, x: &Character) -> bool {
        match self.blocks.get(x.block) {
            Some(PointSetBlock::Finite(s)) => match &x.kind {
                CharKind::Atom(l) => s.contains(l),
                _ => false,
            },
            Some(PointSetBlock::Fc { cofinite, support, free }) => match &x.kind {
                CharKind::Principal(i) => {
                    if *cofinite {
                        !support.contains(i)
                    } else {
                        support.contains(i)
                    }
                }
                CharKind::Free => *free,
                CharKind::Atom(_) => false,
            },
            None => false,
        }
    }

    pub fn insert(&mut self, x: &Character) {
        match (&mut self.blocks[x.block], &x.kind) {
            (PointSetBlock::Finite(s), CharKind::Atom(l)) => {
                s.insert(l.clone());
            }
            (PointSetBlock::Fc { cofinite, support, .. }, CharKind::Principal(i)) => {
                if *cofinite {
                    support.remove(i);
                } else {
                    support.insert(*i);
                }
            }
            (PointSetBlock::Fc { free, .. }, CharKind::Free) => {
                *free = true;
            }
            _ => unreachable!("character shape does not match block"),
        }
    }

    /// Union a finite-or-cofinite index set into an fc block.
    pub fn union_fc_part(&mut self, block: usize, cofinite: bool, support: &BTreeSet<usize>) {
        if let PointSetBlock::Fc { cofinite: c, support: s, .. } = &mut self.blocks[block] {
            let (nc, ns) = fc_union(*c, s, cofinite, support);
            *c = nc;
            *s = ns;
        } else {
            unreachable!("not an fc block");
        }
    }

    pub fn union(&self, other: &PointSet) -> PointSet {
        PointSet {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(x, y)| match (x, y) {
                    (PointSetBlock::Finite(a), PointSetBlock::Finite(b)) => {
                        PointSetBlock::Finite(a.union(b).cloned().collect())
                    }
                    (
                        PointSetBlock::Fc { cofinite: ca, support: sa, free: fa },
                        PointSetBlock::Fc { cofinite: cb, support: sb, free: fb },
                    ) => {
                        let (c, s) = fc_union(*ca, sa, *cb, sb);
                        PointSetBlock::Fc { cofinite: c, support: s, free: *fa || *fb }
                    }
                    _ => unreachable!("mismatched point-set blocks"),
                })
                .collect(),
        }
    }

    pub fn intersect(&self, other: &PointSet) -> PointSet {
        PointSet {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(x, y)| match (x, y) {
                    (PointSetBlock::Finite(a), PointSetBlock::Finite(b)) => {
                        PointSetBlock::Finite(a.intersection(b).cloned().collect())
                    }
                    (
                        PointSetBlock::Fc { cofinite: ca, support: sa, free: fa },
                        PointSetBlock::Fc { cofinite: cb, support: sb, free: fb },
                    ) => {
                        let (c, s) = fc_intersect(*ca, sa, *cb, sb);
                        PointSetBlock::Fc { cofinite: c, support: s, free: *fa && *fb }
                    }
                    _ => unreachable!("mismatched point-set blocks"),
                })
                .collect(),
        }
    }

    /// Complement inside the full dual space of `a`.
    pub fn complement(&self, a: &Algebra) -> PointSet {
        let mut out = Vec::new();
        for (k, x) in self.blocks.iter().enumerate() {
            out.push(match (x, &a.blocks()[k]) {
                (PointSetBlock::Finite(s), Block::Finite { atoms }) => PointSetBlock::Finite(
                    atoms.iter().filter(|t| !s.contains(*t)).cloned().collect(),
                ),
                (PointSetBlock::Fc { cofinite, support, free }, Block::Fc { universe }) => {
                    match universe.finite_size() {
                        Some(n) => PointSetBlock::Fc {
                            cofinite: false,
                            support: (0..n).filter(|i| {
                                let member = if *cofinite { !support.contains(i) } else { support.contains(i) };
                                !member
                            }).collect(),
                            free: false,
                        },
                        None => PointSetBlock::Fc {
                            cofinite: !cofinite,
                            support: support.clone(),
                            free: !free,
                        },
                    }
                }
                _ => unreachable!("mismatched point-set blocks"),
            });
        }
        PointSet { blocks: out }
    }

    pub fn minus(&self, a: &Algebra, other: &PointSet) -> PointSet {
        self.intersect(&other.complement(a))
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.blocks.iter().zip(&other.blocks).all(|(x, y)| match (x, y) {
            (PointSetBlock::Finite(a), PointSetBlock::Finite(b)) => a.is_subset(b),
            (
                PointSetBlock::Fc { cofinite: ca, support: sa, free: fa },
                PointSetBlock::Fc { cofinite: cb, support: sb, free: fb },
            ) => {
                let part = match (ca, cb) {
                    (false, false) => sa.is_subset(sb),
                    (false, true) => sa.iter().all(|i| !sb.contains(i)),
                    (true, false) => false, // cofinite never inside finite (infinite universe)
                    (true, true) => sb.is_subset(sa),
                };
                part && (!fa || *fb)
            }
            _ => false,
        })
    }

    /// Sanity check against the owning algebra's block structure.
    pub fn check(&self, a: &Algebra) -> Result<()> {
        if self.blocks.len() != a.blocks().len() {
            return Err(Error::Validation("point set has wrong block count".into()));
        }
        for (b, ab) in self.blocks.iter().zip(a.blocks()) {
            match (b, ab) {
                (PointSetBlock::Finite(s), Block::Finite { atoms }) => {
                    if !s.iter().all(|t| atoms.iter().any(|x| x == t)) {
                        return Err(Error::Validation("unknown atom in point set".into()));
                    }
                }
                (PointSetBlock::Fc { cofinite, support, free }, Block::Fc { universe }) => {
                    if let Some(n) = universe.finite_size() {
                        if *cofinite || *free || support.iter().any(|&i| i >= n) {
                            return Err(Error::Validation(
                                "non-canonical fc block over finite universe".into(),
                            ));
                        }
                    }
                }
                _ => return Err(Error::Validation("point-set block shape mismatch".into())),
            }
        }
        Ok(())
    }
}

fn fc_union(
    ca: bool,
    sa: &BTreeSet<usize>,
    cb: bool,
    sb: &BTreeSet<usize>,
) -> (bool, BTreeSet<usize>) {
    match (ca, cb) {
        (false, false) => (false, sa.union(sb).copied().collect()),
        (false, true) => (true, sb.iter().filter(|i| !sa.contains(i)).copied().collect()),
        (true, false) => (true, sa.iter().filter(|i| !sb.contains(i)).copied().collect()),
        (true, true) => (true, sa.intersection(sb).copied().collect()),
    }
}

fn fc_intersect(
    ca: bool,
    sa: &BTreeSet<usize>,
    cb: bool,
    sb: &BTreeSet<usize>,
) -> (bool, BTreeSet<usize>) {
    match (ca, cb) {
        (false, false) => (false, sa.intersection(sb).copied().collect()),
        (false, true) => (false, sa.iter().filter(|i| !sb.contains(i)).copied().collect()),
        (true, false) => (false, sb.iter().filter(|i| !sa.contains(i)).copied().collect()),
        (true, true) => (true, sa.union(sb).copied().collect()),
    }
}

/// The Stone map: the set of characters sending `e` to 1.
pub fn s_point_set(a: &Algebra, e: &Element) -> Result<PointSet> {
    a.check_element(e)?;
    let blocks = e
        .blocks()
        .iter()
        .zip(a.blocks())
        .map(|(be, block)| match (be, block) {
            (BlockElement::Finite(set), Block::Finite { .. }) => {
                PointSetBlock::Finite(set.clone())
            }
            (BlockElement::Fc { cofinite, support }, Block::Fc { universe }) => PointSetBlock::Fc {
                cofinite: *cofinite,
                support: support.clone(),
                free: *cofinite && universe.is_infinite(),
            },
            _ => unreachable!(),
        })
        .collect();
    Ok(PointSet { blocks })
}

/// Trace of the Stone map on a subset: `X ∩ s(e)`.
pub fn s_trace(a: &Algebra, x: &PointSet, e: &Element) -> Result<PointSet> {
    x.check(a)?;
    Ok(x.intersect(&s_point_set(a, e)?))
}

/// Inverse of the Stone map on clopen point sets.
pub fn point_set_to_element(a: &Algebra, x: &PointSet) -> Result<Element> {
    x.check(a)?;
    let mut parts = Vec::new();
    for (b, ab) in x.blocks.iter().zip(a.blocks()) {
        parts.push(match (b, ab) {
            (PointSetBlock::Finite(s), Block::Finite { .. }) => BlockElement::Finite(s.clone()),
            (PointSetBlock::Fc { cofinite, support, free }, Block::Fc { universe }) => {
                if universe.is_infinite() && *free != *cofinite {
                    return Err(Error::NotClopen);
                }
                BlockElement::Fc { cofinite: *cofinite, support: support.clone() }
            }
            _ => unreachable!(),
        });
    }
    a.element_from_blocks(parts)
}

// ---------------------------------------------------------------------------
// Topology of the dual space
// ---------------------------------------------------------------------------

pub fn is_open(a: &Algebra, x: &PointSet) -> Result<bool> {
    x.check(a)?;
    Ok(x.blocks.iter().all(|b| match b {
        PointSetBlock::Finite(_) => true,
        PointSetBlock::Fc { cofinite, free, .. } => !free || *cofinite,
    }))
}

pub fn is_closed(a: &Algebra, x: &PointSet) -> Result<bool> {
    is_open(a, &x.complement(a))
}

pub fn is_compact(a: &Algebra, x: &PointSet) -> Result<bool> {
    x.check(a)?;
    Ok(x.blocks.iter().all(|b| match b {
        PointSetBlock::Finite(_) => true,
        PointSetBlock::Fc { cofinite, free, .. } => *free || !cofinite,
    }))
}

pub fn closure(a: &Algebra, x: &PointSet) -> Result<PointSet> {
    x.check(a)?;
    let mut out = x.clone();
    for b in &mut out.blocks {
        if let PointSetBlock::Fc { cofinite, free, .. } = b {
            if *cofinite {
                *free = true;
            }
        }
    }
    Ok(out)
}

pub fn interior(a: &Algebra, x: &PointSet) -> Result<PointSet> {
    x.check(a)?;
    let mut out = x.clone();
    for b in &mut out.blocks {
        if let PointSetBlock::Fc { cofinite, free, .. } = b {
            if !*cofinite {
                *free = false;
            }
        }
    }
    Ok(out)
}

pub fn is_dense(a: &Algebra, x: &PointSet) -> Result<bool> {
    Ok(closure(a, x)? == PointSet::full(a))
}

/// Second reading of density: every nonzero element has nonempty trace.
/// Decided block-wise; the two readings agree, which the property tests
/// assert against element samples.
pub fn is_dense_by_traces(a: &Algebra, x: &PointSet) -> Result<bool> {
    x.check(a)?;
    // A nonzero element concentrated in one block must meet X there, and
    // a singleton forces each individual character to be present.
    Ok(x.blocks.iter().zip(a.blocks()).all(|(b, ab)| match (b, ab) {
        (PointSetBlock::Finite(s), Block::Finite { atoms }) => s.len() == atoms.len(),
        (PointSetBlock::Fc { cofinite, support, .. }, Block::Fc { universe }) => {
            match universe.finite_size() {
                Some(n) => !cofinite && support.len() == n,
                None => *cofinite && support.is_empty(),
            }
        }
        _ => false,
    }))
}

/// Membership test for the clopen algebra of the subspace `x`.
pub fn is_clopen_in(a: &Algebra, x: &PointSet, u: &PointSet) -> Result<bool> {
    x.check(a)?;
    u.check(a)?;
    if !u.is_subset(x) {
        return Err(Error::NotASubset);
    }
    Ok(x.blocks.iter().zip(&u.blocks).all(|(xb, ub)| match (xb, ub) {
        (PointSetBlock::Finite(_), PointSetBlock::Finite(_)) => true,
        (
            PointSetBlock::Fc { cofinite: cx, support: sx, free: fx },
            PointSetBlock::Fc { cofinite: cu, support: su, free: fu },
        ) => {
            // U open in X: the free point of U needs a cofinite-principal
            // neighborhood inside U, i.e. X∖U has finite principal part.
            let diff_finite = |cp: bool, _sp: &BTreeSet<usize>, cq: bool, _sq: &BTreeSet<usize>| {
                // p ∖ q finite  ⟺  p finite or q cofinite
                !cp || cq
            };
            let u_open_in_x = !fu || diff_finite(*cx, sx, *cu, su);
            // X∖U open in X: its free point (present when fx && !fu) needs
            // U's principal part to be finite.
            let rest_open_in_x = !(*fx && !*fu) || !*cu;
            u_open_in_x && rest_open_in_x
        }
        _ => false,
    }))
}

// ---------------------------------------------------------------------------
// Representable point maps
// ---------------------------------------------------------------------------

/// Default action of a map on the non-exceptional part of an infinite fc
/// block. `Identity` sends each principal to the same index in a target fc
/// block (and free to free there); `Const` collapses the block to one point.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FcDefault {
    Identity { block: usize },
    Const(Character),
}

/// Per-source-block representation of a point map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapBlock {
    /// Explicit graph on the (finitely many) characters of the block.
    Table(BTreeMap<CharKind, Character>),
    /// Exception table on principal indices plus a default; the free
    /// character (when present) goes to the default's limit, which is what
    /// continuity forces.
    Fc { exceptions: BTreeMap<usize, Character>, default: FcDefault },
}

/// A continuous map between representable subsets of two dual spaces.
#[derive(Clone, Debug)]
pub struct PointMap {
    pub source_algebra: Algebra,
    pub target_algebra: Algebra,
    pub source: PointSet,
    pub target: PointSet,
    pub blocks: Vec<MapBlock>,
}

impl PointMap {
    pub fn new(
        source_algebra: Algebra,
        target_algebra: Algebra,
        source: PointSet,
        target: PointSet,
        blocks: Vec<MapBlock>,
    ) -> Result<Self> {
        source.check(&source_algebra)?;
        target.check(&target_algebra)?;
        if blocks.len() != source_algebra.blocks().len() {
            return Err(Error::Validation("map has wrong block count".into()));
        }
        let pm = PointMap { source_algebra, target_algebra, source, target, blocks };
        pm.validate()?;
        Ok(pm.canonical())
    }

    fn validate(&self) -> Result<()> {
        for (k, (mb, ab)) in self.blocks.iter().zip(self.source_algebra.blocks()).enumerate() {
            match (mb, ab) {
                (MapBlock::Table(table), _) if !ab.is_infinite_fc() => {
                    // totality on the source points of this block
                    for x in block_points(ab, k) {
                        if self.source.contains(&x) {
                            let img = table
                                .get(&x.kind)
                                .ok_or_else(|| Error::Validation("map not total on source".into()))?;
                            check_character(&self.target_algebra, img)?;
                            if !self.target.contains(img) {
                                return Err(Error::Validation("image escapes target".into()));
                            }
                        }
                    }
                }
                (MapBlock::Fc { exceptions, default }, Block::Fc { universe })
                    if universe.is_infinite() =>
                {
                    for img in exceptions.values() {
                        check_character(&self.target_algebra, img)?;
                        if !self.target.contains(img) {
                            return Err(Error::Validation("image escapes target".into()));
                        }
                    }
                    match default {
                        FcDefault::Identity { block } => {
                            let tb = self
                                .target_algebra
                                .blocks()
                                .get(*block)
                                .ok_or(Error::ForeignCharacter)?;
                            if !tb.is_infinite_fc() {
                                return Err(Error::Validation(
                                    "identity default must target an infinite fc block".into(),
                                ));
                            }
                            // default part of the source must land inside target
                            let (dc, ds) = self.default_part(k);
                            if let PointSetBlock::Fc { cofinite, support, .. } =
                                &self.target.blocks[*block]
                            {
                                let (ic, is_) = fc_intersect(dc, &ds, *cofinite, support);
                                if (ic, is_) != (dc, ds.clone()) {
                                    return Err(Error::Validation("image escapes target".into()));
                                }
                            }
                            if self.source_has_free(k) && !self.target.contains(&Character::free(*block)) {
                                return Err(Error::Validation("image escapes target".into()));
                            }
                        }
                        FcDefault::Const(c) => {
                            check_character(&self.target_algebra, c)?;
                            let (dc, ds) = self.default_part(k);
                            let default_used = dc || !ds.is_empty() || self.source_has_free(k);
                            if default_used && !self.target.contains(c) {
                                return Err(Error::Validation("image escapes target".into()));
                            }
                        }
                    }
                }
                _ => {
                    return Err(Error::Validation("map block shape mismatch".into()));
                }
            }
        }
        Ok(())
    }

    fn source_has_free(&self, block: usize) -> bool {
        matches!(&self.source.blocks[block], PointSetBlock::Fc { free: true, .. })
    }

    /// Principal part of the source block minus the exception indices.
    fn default_part(&self, block: usize) -> (bool, BTreeSet<usize>) {
        let (c, s) = match &self.source.blocks[block] {
            PointSetBlock::Fc { cofinite, support, .. } => (*cofinite, support.clone()),
            _ => (false, BTreeSet::new()),
        };
        let exc: BTreeSet<usize> = match &self.blocks[block] {
            MapBlock::Fc { exceptions, .. } => exceptions.keys().copied().collect(),
            _ => BTreeSet::new(),
        };
        // remove exception indices from (c, s)
        if c {
            (true, s.union(&exc).copied().collect())
        } else {
            (false, s.difference(&exc).copied().collect())
        }
    }

    /// Drop exceptions that are outside the source or that agree with the
    /// default image, so structural comparison is meaningful.
    fn canonical(mut self) -> Self {
        for k in 0..self.blocks.len() {
            let src = self.source.blocks[k].clone();
            if let MapBlock::Fc { exceptions, default } = &mut self.blocks[k] {
                let default = default.clone();
                exceptions.retain(|i, img| {
                    let in_source = match &src {
                        PointSetBlock::Fc { cofinite, support, .. } => {
                            if *cofinite { !support.contains(i) } else { support.contains(i) }
                        }
                        _ => false,
                    };
                    if !in_source {
                        return false;
                    }
                    match &default {
                        FcDefault::Identity { block } => img != &Character::principal(*block, *i),
                        FcDefault::Const(c) => img != c,
                    }
                });
            }
        }
        self
    }

    pub fn apply(&self, x: &Character) -> Result<Character> {
        check_character(&self.source_algebra, x)?;
        if !self.source.contains(x) {
            return Err(Error::Validation("point outside map source".into()));
        }
        Ok(match &self.blocks[x.block] {
            MapBlock::Table(table) => table
                .get(&x.kind)
                .cloned()
                .ok_or_else(|| Error::Validation("map not total on source".into()))?,
            MapBlock::Fc { exceptions, default } => match &x.kind {
                CharKind::Principal(i) => match exceptions.get(i) {
                    Some(img) => img.clone(),
                    None => match default {
                        FcDefault::Identity { block } => Character::principal(*block, *i),
                        FcDefault::Const(c) => c.clone(),
                    },
                },
                // continuity pins the free point to the default's limit
                CharKind::Free => match default {
                    FcDefault::Identity { block } => Character::free(*block),
                    FcDefault::Const(c) => c.clone(),
                },
                CharKind::Atom(_) => unreachable!(),
            },
        })
    }

    /// Forward image of a subset of the source.
    pub fn image_of(&self, sub: &PointSet) -> Result<PointSet> {
        if !sub.is_subset(&self.source) {
            return Err(Error::NotASubset);
        }
        let mut out = PointSet::empty(&self.target_algebra);
        for (k, (mb, ab)) in self.blocks.iter().zip(self.source_algebra.blocks()).enumerate() {
            match mb {
                MapBlock::Table(table) => {
                    for x in block_points(ab, k) {
                        if sub.contains(&x) {
                            out.insert(&table[&x.kind]);
                        }
                    }
                }
                MapBlock::Fc { exceptions, default } => {
                    let (sc, ss) = match &sub.blocks[k] {
                        PointSetBlock::Fc { cofinite, support, .. } => (*cofinite, support.clone()),
                        _ => unreachable!(),
                    };
                    // exceptional points in the subset
                    let def_c = sc;
                    let mut def_s = ss.clone();
                    for (i, img) in exceptions {
                        let member = if sc { !ss.contains(i) } else { ss.contains(i) };
                        if member {
                            out.insert(img);
                        }
                        if def_c {
                            def_s.insert(*i);
                        } else {
                            def_s.remove(i);
                        }
                    }
                    // default part
                    match default {
                        FcDefault::Identity { block } => {
                            out.union_fc_part(*block, def_c, &def_s);
                        }
                        FcDefault::Const(c) => {
                            if def_c || !def_s.is_empty() {
                                out.insert(c);
                            }
                        }
                    }
                    // free point
                    let sub_free = matches!(&sub.blocks[k], PointSetBlock::Fc { free: true, .. });
                    if sub_free {
                        out.insert(&self.apply(&Character::free(k))?);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Preimage (inside the source) of a subset of the target space.
    pub fn preimage_of(&self, sub: &PointSet) -> Result<PointSet> {
        sub.check(&self.target_algebra)?;
        let mut out = PointSet::empty(&self.source_algebra);
        for (k, (mb, ab)) in self.blocks.iter().zip(self.source_algebra.blocks()).enumerate() {
            match mb {
                MapBlock::Table(table) => {
                    for x in block_points(ab, k) {
                        if self.source.contains(&x) && sub.contains(&table[&x.kind]) {
                            out.insert(&x);
                        }
                    }
                }
                MapBlock::Fc { exceptions, default } => {
                    // default part of the source block
                    let (dc, ds) = self.default_part(k);
                    match default {
                        FcDefault::Identity { block } => {
                            if let PointSetBlock::Fc { cofinite, support, .. } = &sub.blocks[*block]
                            {
                                let (ic, is_) = fc_intersect(dc, &ds, *cofinite, support);
                                out.union_fc_part(k, ic, &is_);
                            }
                        }
                        FcDefault::Const(c) => {
                            if sub.contains(c) {
                                out.union_fc_part(k, dc, &ds);
                            }
                        }
                    }
                    for (i, img) in exceptions {
                        if sub.contains(img) {
                            out.insert(&Character::principal(k, *i));
                        }
                    }
                    if self.source_has_free(k) && sub.contains(&self.apply(&Character::free(k))?) {
                        out.insert(&Character::free(k));
                    }
                }
            }
        }
        Ok(out.intersect(&self.source))
    }

    pub fn identity(a: &Algebra, on: &PointSet) -> Result<Self> {
        let blocks = a
            .blocks()
            .iter()
            .enumerate()
            .map(|(k, b)| match b {
                Block::Fc { universe } if universe.is_infinite() => MapBlock::Fc {
                    exceptions: BTreeMap::new(),
                    default: FcDefault::Identity { block: k },
                },
                _ => MapBlock::Table(
                    block_points(b, k)
                        .into_iter()
                        .map(|x| (x.kind.clone(), x))
                        .collect(),
                ),
            })
            .collect();
        PointMap::new(a.clone(), a.clone(), on.clone(), on.clone(), blocks)
    }

    /// Composition `g ∘ self` (apply `self`, then `g`).
    pub fn then(&self, g: &PointMap) -> Result<PointMap> {
        if self.target_algebra != g.source_algebra || !self.target.is_subset(&g.source) {
            return Err(Error::DomainMismatch);
        }
        let mut blocks = Vec::new();
        for (k, mb) in self.blocks.iter().enumerate() {
            blocks.push(match mb {
                MapBlock::Table(table) => {
                    let mut out = BTreeMap::new();
                    for (kind, img) in table {
                        let x = Character { block: k, kind: kind.clone() };
                        if self.source.contains(&x) {
                            out.insert(kind.clone(), g.apply(img)?);
                        }
                    }
                    MapBlock::Table(out)
                }
                MapBlock::Fc { exceptions, default } => {
                    let mut exc: BTreeMap<usize, Character> = BTreeMap::new();
                    for (i, img) in exceptions {
                        exc.insert(*i, g.apply(img)?);
                    }
                    let default = match default {
                        FcDefault::Const(c) => FcDefault::Const(g.apply(c)?),
                        FcDefault::Identity { block } => match &g.blocks[*block] {
                            MapBlock::Fc { exceptions: ge, default: gd } => {
                                // inner identity feeds directly into g's block rep
                                for (i, img) in ge {
                                    exc.entry(*i).or_insert_with(|| img.clone());
                                }
                                gd.clone()
                            }
                            MapBlock::Table(_) => {
                                return Err(Error::Validation(
                                    "identity default into a finite block".into(),
                                ))
                            }
                        },
                    };
                    MapBlock::Fc { exceptions: exc, default }
                }
            });
        }
        PointMap::new(
            self.source_algebra.clone(),
            g.target_algebra.clone(),
            self.source.clone(),
            g.target.clone(),
            blocks,
        )
    }

    /// Restriction to a smaller source (and optionally smaller target).
    pub fn restrict(&self, source: PointSet, target: PointSet) -> Result<PointMap> {
        if !source.is_subset(&self.source) {
            return Err(Error::NotASubset);
        }
        PointMap::new(
            self.source_algebra.clone(),
            self.target_algebra.clone(),
            source,
            target,
            self.blocks.clone(),
        )
    }

    /// Function equality on the shared source: exact decision procedure.
    pub fn fn_eq(&self, other: &PointMap) -> bool {
        if self.source_algebra != other.source_algebra
            || self.target_algebra != other.target_algebra
            || self.source != other.source
        {
            return false;
        }
        for (k, ab) in self.source_algebra.blocks().iter().enumerate() {
            match (&self.blocks[k], &other.blocks[k]) {
                (MapBlock::Table(_), MapBlock::Table(_)) => {
                    for x in block_points(ab, k) {
                        if self.source.contains(&x) && self.apply(&x).ok() != other.apply(&x).ok() {
                            return false;
                        }
                    }
                }
                (MapBlock::Fc { .. }, MapBlock::Fc { .. }) => {
                    let (dc, ds) = self.default_part(k);
                    let (oc, os) = other.default_part(k);
                    // probe all indices mentioned by either side
                    let mut probe: BTreeSet<usize> = ds.iter().chain(os.iter()).copied().collect();
                    if let (MapBlock::Fc { exceptions: e1, .. }, MapBlock::Fc { exceptions: e2, .. }) =
                        (&self.blocks[k], &other.blocks[k])
                    {
                        probe.extend(e1.keys().copied());
                        probe.extend(e2.keys().copied());
                    }
                    let max = probe.iter().max().copied().unwrap_or(0);
                    probe.extend(max + 1..max + 3);
                    for i in probe {
                        let x = Character::principal(k, i);
                        if self.source.contains(&x)
                            && self.apply(&x).ok() != other.apply(&x).ok()
                        {
                            return false;
                        }
                    }
                    // infinitely many default points: defaults must agree
                    let infinite_default = dc || oc;
                    if infinite_default {
                        let d1 = match &self.blocks[k] {
                            MapBlock::Fc { default, .. } => default.clone(),
                            _ => unreachable!(),
                        };
                        let d2 = match &other.blocks[k] {
                            MapBlock::Fc { default, .. } => default.clone(),
                            _ => unreachable!(),
                        };
                        if d1 != d2 {
                            return false;
                        }
                    }
                    if self.source_has_free(k) {
                        let f = Character::free(k);
                        if self.apply(&f).ok() != other.apply(&f).ok() {
                            return false;
                        }
                    }
                }
                _ => return false,
            }
        }
        true
    }

    /// A finite set of probe characters that exercises every structural case
    /// of the map on its source.
    pub fn probe_points(&self) -> Vec<Character> {
        let mut out = Vec::new();
        for (k, ab) in self.source_algebra.blocks().iter().enumerate() {
            match &self.blocks[k] {
                MapBlock::Table(_) => {
                    for x in block_points(ab, k) {
                        if self.source.contains(&x) {
                            out.push(x);
                        }
                    }
                }
                MapBlock::Fc { exceptions, .. } => {
                    let mut idxs: BTreeSet<usize> = exceptions.keys().copied().collect();
                    if let PointSetBlock::Fc { support, .. } = &self.source.blocks[k] {
                        idxs.extend(support.iter().copied());
                    }
                    let max = idxs.iter().max().copied().unwrap_or(0);
                    idxs.extend(max + 1..max + 4);
                    for i in idxs {
                        let x = Character::principal(k, i);
                        if self.source.contains(&x) {
                            out.push(x);
                        }
                    }
                    if self.source_has_free(k) {
                        out.push(Character::free(k));
                    }
                }
            }
        }
        out
    }
}

/// All characters housed in one block of an algebra; only valid for blocks
/// with finitely many points.
pub fn block_points(block: &Block, k: usize) -> Vec<Character> {
    match block {
        Block::Finite { atoms } => atoms.iter().map(|t| Character::atom(k, t)).collect(),
        Block::Fc { universe } => match universe.finite_size() {
            Some(n) => (0..n).map(|i| Character::principal(k, i)).collect(),
            None => panic!("block_points on an infinite fc block"),
        },
    }
}
