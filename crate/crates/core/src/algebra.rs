//! Representable Boolean algebras and their elements.
//!
//! Three backends: finite algebras given by an atom list, the
//! finite–cofinite algebra over a universe (the naturals or a named finite
//! set), and flat products of these. Elements carry a unique canonical
//! form, so equality is structural.

use std::collections::BTreeSet;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index universe of a finite–cofinite factor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Universe {
    /// The naturals; the only infinite universe.
    Nat,
    /// A named finite set; indices refer to positions in the list.
    Named(Vec<String>),
}

impl Universe {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Universe::Nat)
    }

    pub fn finite_size(&self) -> Option<usize> {
        match self {
            Universe::Nat => None,
            Universe::Named(names) => Some(names.len()),
        }
    }
}

impl Serialize for Universe {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Universe::Nat => serializer.serialize_str("nat"),
            Universe::Named(names) => {
                let mut seq = serializer.serialize_seq(Some(names.len()))?;
                for n in names {
                    seq.serialize_element(n)?;
                }
                seq.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for Universe {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct UniverseVisitor;
        impl<'de> Visitor<'de> for UniverseVisitor {
            type Value = Universe;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                write!(f, "\"nat\" or a list of names")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Universe, E> {
                if v == "nat" {
                    Ok(Universe::Nat)
                } else {
                    Err(E::custom(format!("unknown universe {v:?}")))
                }
            }
            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<Universe, A::Error> {
                let mut names = Vec::new();
                while let Some(n) = seq.next_element::<String>()? {
                    names.push(n);
                }
                Ok(Universe::Named(names))
            }
        }
        deserializer.deserialize_any(UniverseVisitor)
    }
}

/// Shape of a representable Boolean algebra.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum AlgebraDescriptor {
    Finite { atoms: Vec<String> },
    Fc { universe: Universe },
    Product { factors: Vec<AlgebraDescriptor> },
}

/// A single factor of a (possibly trivial) product.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Block {
    Finite { atoms: Vec<String> },
    Fc { universe: Universe },
}

impl Block {
    pub fn is_infinite_fc(&self) -> bool {
        matches!(self, Block::Fc { universe } if universe.is_infinite())
    }

    /// Number of characters this block contributes, when finite.
    pub fn finite_point_count(&self) -> Option<usize> {
        match self {
            Block::Finite { atoms } => Some(atoms.len()),
            Block::Fc { universe } => universe.finite_size(),
        }
    }
}

/// A validated algebra handle. Equality is by descriptor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    descriptor: AlgebraDescriptor,
    blocks: Vec<Block>,
}

/// Per-block component of an element, in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BlockElement {
    /// Subset of the declared atoms.
    Finite(BTreeSet<String>),
    /// Finite-or-cofinite subset of the universe; over a finite universe
    /// the canonical form always has `cofinite = false`.
    Fc { cofinite: bool, support: BTreeSet<usize> },
}

/// An element of a representable algebra: one component per block.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Element(pub Vec<BlockElement>);

impl Element {
    pub fn blocks(&self) -> &[BlockElement] {
        &self.0
    }
}

fn block_of_descriptor(d: &AlgebraDescriptor) -> Result<Block> {
    match d {
        AlgebraDescriptor::Finite { atoms } => {
            let mut seen = BTreeSet::new();
            for a in atoms {
                if !seen.insert(a) {
                    return Err(Error::MalformedDescriptor(format!("duplicate atom {a:?}")));
                }
            }
            Ok(Block::Finite { atoms: atoms.clone() })
        }
        AlgebraDescriptor::Fc { universe } => {
            if let Universe::Named(names) = universe {
                let mut seen = BTreeSet::new();
                for n in names {
                    if !seen.insert(n) {
                        return Err(Error::MalformedDescriptor(format!(
                            "duplicate universe name {n:?}"
                        )));
                    }
                }
            }
            Ok(Block::Fc { universe: universe.clone() })
        }
        AlgebraDescriptor::Product { .. } => Err(Error::MalformedDescriptor(
            "nested product".to_string(),
        )),
    }
}

impl Algebra {
    pub fn new(descriptor: AlgebraDescriptor) -> Result<Self> {
        let blocks = match &descriptor {
            AlgebraDescriptor::Product { factors } => {
                if factors.is_empty() {
                    return Err(Error::MalformedDescriptor("empty product".to_string()));
                }
                factors.iter().map(block_of_descriptor).collect::<Result<Vec<_>>>()?
            }
            other => vec![block_of_descriptor(other)?],
        };
        Ok(Algebra { descriptor, blocks })
    }

    /// Finite algebra with the given atom labels.
    pub fn finite(atoms: &[&str]) -> Result<Self> {
        Algebra::new(AlgebraDescriptor::Finite {
            atoms: atoms.iter().map(|s| s.to_string()).collect(),
        })
    }

    /// The finite–cofinite algebra over the naturals.
    pub fn fc_nat() -> Self {
        Algebra::new(AlgebraDescriptor::Fc { universe: Universe::Nat }).expect("valid")
    }

    pub fn product(factors: Vec<AlgebraDescriptor>) -> Result<Self> {
        Algebra::new(AlgebraDescriptor::Product { factors })
    }

    pub fn descriptor(&self) -> &AlgebraDescriptor {
        &self.descriptor
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn is_product(&self) -> bool {
        matches!(self.descriptor, AlgebraDescriptor::Product { .. })
    }

    /// True when the algebra has finitely many elements.
    pub fn is_finite(&self) -> bool {
        self.blocks.iter().all(|b| !b.is_infinite_fc())
    }

    /// The one-element algebra: no block has any point, so 0 = 1.
    pub fn is_degenerate(&self) -> bool {
        self.blocks.iter().all(|b| b.finite_point_count() == Some(0))
    }

    fn block_bottom(block: &Block) -> BlockElement {
        match block {
            Block::Finite { .. } => BlockElement::Finite(BTreeSet::new()),
            Block::Fc { .. } => BlockElement::Fc { cofinite: false, support: BTreeSet::new() },
        }
    }

    fn block_top(block: &Block) -> BlockElement {
        match block {
            Block::Finite { atoms } => BlockElement::Finite(atoms.iter().cloned().collect()),
            Block::Fc { universe } => match universe {
                Universe::Nat => BlockElement::Fc { cofinite: true, support: BTreeSet::new() },
                Universe::Named(names) => BlockElement::Fc {
                    cofinite: false,
                    support: (0..names.len()).collect(),
                },
            },
        }
    }

    pub fn bottom(&self) -> Element {
        Element(self.blocks.iter().map(Self::block_bottom).collect())
    }

    pub fn top(&self) -> Element {
        Element(self.blocks.iter().map(Self::block_top).collect())
    }

    /// Canonicalize and validate a raw block list as an element of `self`.
    pub fn element_from_blocks(&self, raw: Vec<BlockElement>) -> Result<Element> {
        if raw.len() != self.blocks.len() {
            return Err(Error::ForeignElement);
        }
        let mut out = Vec::with_capacity(raw.len());
        for (block, be) in self.blocks.iter().zip(raw) {
            out.push(canonical_block_element(block, be)?);
        }
        Ok(Element(out))
    }

    pub fn check_element(&self, e: &Element) -> Result<()> {
        if e.0.len() != self.blocks.len() {
            return Err(Error::ForeignElement);
        }
        for (block, be) in self.blocks.iter().zip(&e.0) {
            let canon = canonical_block_element(block, be.clone())?;
            if &canon != be {
                return Err(Error::ForeignElement);
            }
        }
        Ok(())
    }

    pub fn meet(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check_element(a)?;
        self.check_element(b)?;
        Ok(Element(
            a.0.iter().zip(&b.0).map(|(x, y)| block_meet(x, y)).collect(),
        ))
    }

    pub fn join(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check_element(a)?;
        self.check_element(b)?;
        Ok(Element(
            a.0.iter()
                .zip(&b.0)
                .enumerate()
                .map(|(k, (x, y))| self.block_join(k, x, y))
                .collect(),
        ))
    }

    pub fn complement(&self, a: &Element) -> Result<Element> {
        self.check_element(a)?;
        Ok(Element(
            a.0.iter()
                .enumerate()
                .map(|(k, be)| self.block_complement(k, be))
                .collect(),
        ))
    }

    pub fn leq(&self, a: &Element, b: &Element) -> Result<bool> {
        let m = self.meet(a, b)?;
        Ok(&m == a)
    }

    pub fn is_zero(&self, a: &Element) -> Result<bool> {
        self.check_element(a)?;
        Ok(a == &self.bottom())
    }

    pub fn equal(&self, a: &Element, b: &Element) -> Result<bool> {
        self.check_element(a)?;
        self.check_element(b)?;
        Ok(a == b)
    }

    /// Atom at `(block, label)` of a finite block.
    pub fn atom_element(&self, block: usize, label: &str) -> Result<Element> {
        match self.blocks.get(block) {
            Some(Block::Finite { atoms }) if atoms.iter().any(|a| a == label) => {
                let mut parts: Vec<BlockElement> =
                    self.blocks.iter().map(Self::block_bottom).collect();
                parts[block] = BlockElement::Finite([label.to_string()].into_iter().collect());
                Ok(Element(parts))
            }
            _ => Err(Error::ForeignElement),
        }
    }

    /// Singleton atom at `(block, index)` of an fc block.
    pub fn singleton_element(&self, block: usize, index: usize) -> Result<Element> {
        match self.blocks.get(block) {
            Some(Block::Fc { universe }) => {
                if let Some(n) = universe.finite_size() {
                    if index >= n {
                        return Err(Error::ForeignElement);
                    }
                }
                let mut parts: Vec<BlockElement> =
                    self.blocks.iter().map(Self::block_bottom).collect();
                parts[block] = BlockElement::Fc {
                    cofinite: false,
                    support: [index].into_iter().collect(),
                };
                Ok(Element(parts))
            }
            _ => Err(Error::ForeignElement),
        }
    }

    /// All atoms, with per-block enumeration of infinite fc blocks cut at
    /// `fc_bound` singletons.
    pub fn atoms_bounded(&self, fc_bound: usize) -> Vec<Element> {
        let mut out = Vec::new();
        for (k, block) in self.blocks.iter().enumerate() {
            match block {
                Block::Finite { atoms } => {
                    for a in atoms {
                        out.push(self.atom_element(k, a).expect("atom"));
                    }
                }
                Block::Fc { universe } => {
                    let n = universe.finite_size().unwrap_or(fc_bound);
                    for i in 0..n {
                        out.push(self.singleton_element(k, i).expect("singleton"));
                    }
                }
            }
        }
        out
    }

    /// Lazy atom stream; infinite when some fc block is over the naturals.
    pub fn atoms(&self) -> impl Iterator<Item = Element> + '_ {
        self.blocks.iter().enumerate().flat_map(move |(k, block)| {
            let iter: Box<dyn Iterator<Item = Element>> = match block {
                Block::Finite { atoms } => Box::new(
                    atoms
                        .clone()
                        .into_iter()
                        .map(move |a| self.atom_element(k, &a).expect("atom")),
                ),
                Block::Fc { universe } => match universe.finite_size() {
                    Some(n) => Box::new(
                        (0..n).map(move |i| self.singleton_element(k, i).expect("singleton")),
                    ),
                    None => Box::new(
                        (0usize..).map(move |i| self.singleton_element(k, i).expect("singleton")),
                    ),
                },
            };
            iter
        })
    }

    /// Every element of a finite algebra.
    pub fn enumerate_elements(&self) -> Result<Vec<Element>> {
        if !self.is_finite() {
            return Err(Error::EnumerationUnsupported);
        }
        let mut acc: Vec<Vec<BlockElement>> = vec![vec![]];
        for block in &self.blocks {
            let choices: Vec<BlockElement> = match block {
                Block::Finite { atoms } => subsets(atoms.len())
                    .map(|mask| {
                        BlockElement::Finite(
                            atoms
                                .iter()
                                .enumerate()
                                .filter(|(i, _)| mask & (1 << i) != 0)
                                .map(|(_, a)| a.clone())
                                .collect(),
                        )
                    })
                    .collect(),
                Block::Fc { universe } => {
                    let n = universe.finite_size().expect("finite");
                    subsets(n)
                        .map(|mask| BlockElement::Fc {
                            cofinite: false,
                            support: (0..n).filter(|i| mask & (1 << i) != 0).collect(),
                        })
                        .collect()
                }
            };
            let mut next = Vec::with_capacity(acc.len() * choices.len());
            for prefix in &acc {
                for c in &choices {
                    let mut row = prefix.clone();
                    row.push(c.clone());
                    next.push(row);
                }
            }
            acc = next;
        }
        Ok(acc.into_iter().map(Element).collect())
    }

    pub fn element_count(&self) -> Option<u64> {
        let mut total: u64 = 1;
        for block in &self.blocks {
            let n = block.finite_point_count()?;
            total = total.checked_mul(1u64.checked_shl(n as u32)?)?;
        }
        Some(total)
    }

    // -- test/construction helpers for single-block algebras --

    /// Element of a single finite block given by atom labels.
    pub fn fin_elem(&self, labels: &[&str]) -> Result<Element> {
        self.element_from_blocks(vec![BlockElement::Finite(
            labels.iter().map(|s| s.to_string()).collect(),
        )])
    }

    /// Finite-mode element of a single fc block.
    pub fn fc_finite(&self, idxs: &[usize]) -> Result<Element> {
        self.element_from_blocks(vec![BlockElement::Fc {
            cofinite: false,
            support: idxs.iter().copied().collect(),
        }])
    }

    /// Cofinite-mode element of a single fc block.
    pub fn fc_cofinite(&self, idxs: &[usize]) -> Result<Element> {
        self.element_from_blocks(vec![BlockElement::Fc {
            cofinite: true,
            support: idxs.iter().copied().collect(),
        }])
    }
}

fn subsets(n: usize) -> impl Iterator<Item = u64> {
    0..(1u64 << n)
}

fn canonical_block_element(block: &Block, be: BlockElement) -> Result<BlockElement> {
    match (block, be) {
        (Block::Finite { atoms }, BlockElement::Finite(set)) => {
            for a in &set {
                if !atoms.iter().any(|x| x == a) {
                    return Err(Error::ForeignElement);
                }
            }
            Ok(BlockElement::Finite(set))
        }
        (Block::Fc { universe }, BlockElement::Fc { cofinite, support }) => match universe {
            Universe::Nat => Ok(BlockElement::Fc { cofinite, support }),
            Universe::Named(names) => {
                let n = names.len();
                if support.iter().any(|&i| i >= n) {
                    return Err(Error::ForeignElement);
                }
                if cofinite {
                    Ok(BlockElement::Fc {
                        cofinite: false,
                        support: (0..n).filter(|i| !support.contains(i)).collect(),
                    })
                } else {
                    Ok(BlockElement::Fc { cofinite: false, support })
                }
            }
        },
        _ => Err(Error::ForeignElement),
    }
}

fn block_meet(a: &BlockElement, b: &BlockElement) -> BlockElement {
    match (a, b) {
        (BlockElement::Finite(x), BlockElement::Finite(y)) => {
            BlockElement::Finite(x.intersection(y).cloned().collect())
        }
        (
            BlockElement::Fc { cofinite: ca, support: sa },
            BlockElement::Fc { cofinite: cb, support: sb },
        ) => match (ca, cb) {
            (false, false) => BlockElement::Fc {
                cofinite: false,
                support: sa.intersection(sb).copied().collect(),
            },
            (false, true) => BlockElement::Fc {
                cofinite: false,
                support: sa.difference(sb).copied().collect(),
            },
            (true, false) => BlockElement::Fc {
                cofinite: false,
                support: sb.difference(sa).copied().collect(),
            },
            (true, true) => BlockElement::Fc {
                cofinite: true,
                support: sa.union(sb).copied().collect(),
            },
        },
        _ => unreachable!("mismatched block elements"),
    }
}

impl Algebra {
    fn block_complement(&self, k: usize, a: &BlockElement) -> BlockElement {
        match (&self.blocks[k], a) {
            (Block::Finite { atoms }, BlockElement::Finite(set)) => BlockElement::Finite(
                atoms.iter().filter(|x| !set.contains(*x)).cloned().collect(),
            ),
            (Block::Fc { universe }, BlockElement::Fc { cofinite, support }) => match universe {
                Universe::Nat => BlockElement::Fc {
                    cofinite: !cofinite,
                    support: support.clone(),
                },
                Universe::Named(names) => BlockElement::Fc {
                    cofinite: false,
                    support: (0..names.len()).filter(|i| !support.contains(i)).collect(),
                },
            },
            _ => unreachable!(),
        }
    }

    fn block_join(&self, k: usize, a: &BlockElement, b: &BlockElement) -> BlockElement {
        // de Morgan on each block
        let ca = self.block_complement(k, a);
        let cb = self.block_complement(k, b);
        self.block_complement(k, &block_meet(&ca, &cb))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finite_algebra_has_powerset_of_atoms() {
        let a = Algebra::finite(&["p", "q", "r"]).unwrap();
        assert_eq!(a.enumerate_elements().unwrap().len(), 8);
    }

    #[test]
    fn degenerate_algebra_identifies_bottom_and_top() {
        let a = Algebra::finite(&[]).unwrap();
        assert!(a.is_degenerate());
        assert_eq!(a.bottom(), a.top());
        assert!(a.atoms_bounded(10).is_empty());
    }

    #[test]
    fn duplicate_atoms_are_rejected() {
        let err = Algebra::finite(&["p", "p"]).unwrap_err();
        assert!(matches!(err, Error::MalformedDescriptor(_)));
    }

    #[test]
    fn nested_products_are_rejected() {
        let inner = AlgebraDescriptor::Product {
            factors: vec![AlgebraDescriptor::Finite { atoms: vec!["p".into()] }],
        };
        let err = Algebra::new(AlgebraDescriptor::Product { factors: vec![inner] }).unwrap_err();
        assert!(matches!(err, Error::MalformedDescriptor(_)));
    }

    #[test]
    fn product_of_finite_and_fc_validates() {
        let a = Algebra::product(vec![
            AlgebraDescriptor::Finite { atoms: vec!["p".into()] },
            AlgebraDescriptor::Fc { universe: Universe::Nat },
        ])
        .unwrap();
        assert_eq!(a.blocks().len(), 2);
        assert!(!a.is_finite());
    }

    #[test]
    fn finite_meet_is_set_intersection() {
        let a = Algebra::finite(&["p", "q", "r"]).unwrap();
        let x = a.fin_elem(&["p", "q"]).unwrap();
        let y = a.fin_elem(&["q", "r"]).unwrap();
        assert_eq!(a.meet(&x, &y).unwrap(), a.fin_elem(&["q"]).unwrap());
    }

    #[test]
    fn fc_complement_of_finite_is_cofinite() {
        let a = Algebra::fc_nat();
        let x = a.fc_finite(&[0, 1]).unwrap();
        assert_eq!(a.complement(&x).unwrap(), a.fc_cofinite(&[0, 1]).unwrap());
    }

    /// Oracle: embed fc elements as explicit subsets of {0..9} and compare
    /// the representation-level join with plain set union.
    #[test]
    fn fc_join_matches_explicit_set_union() {
        let a = Algebra::fc_nat();
        let x = a.fc_finite(&[0]).unwrap();
        let y = a.fc_cofinite(&[0, 2]).unwrap();
        let joined = a.join(&x, &y).unwrap();
        assert_eq!(joined, a.fc_cofinite(&[2]).unwrap());

        // explicit-subset oracle over the window {0..9}
        let window: BTreeSet<usize> = (0..10).collect();
        let explicit = |e: &Element| -> BTreeSet<usize> {
            match &e.0[0] {
                BlockElement::Fc { cofinite, support } => window
                    .iter()
                    .copied()
                    .filter(|i| if *cofinite { !support.contains(i) } else { support.contains(i) })
                    .collect(),
                _ => unreachable!(),
            }
        };
        let union: BTreeSet<usize> = explicit(&x).union(&explicit(&y)).copied().collect();
        assert_eq!(explicit(&joined), union);
    }

    #[test]
    fn fc_over_named_universe_normalizes_cofinite_to_finite() {
        let a = Algebra::new(AlgebraDescriptor::Fc {
            universe: Universe::Named(vec!["u".into(), "v".into(), "w".into()]),
        })
        .unwrap();
        let x = a.fc_cofinite(&[1]).unwrap();
        assert_eq!(x, a.fc_finite(&[0, 2]).unwrap());
        assert!(a.is_finite());
        assert_eq!(a.enumerate_elements().unwrap().len(), 8);
    }

    #[test]
    fn atoms_of_fc_are_singletons() {
        let a = Algebra::fc_nat();
        let atoms: Vec<Element> = a.atoms().take(3).collect();
        assert_eq!(
            atoms,
            vec![
                a.fc_finite(&[0]).unwrap(),
                a.fc_finite(&[1]).unwrap(),
                a.fc_finite(&[2]).unwrap()
            ]
        );
    }

    #[test]
    fn foreign_elements_are_rejected() {
        let a = Algebra::finite(&["p"]).unwrap();
        let b = Algebra::finite(&["p", "q"]).unwrap();
        let x = b.fin_elem(&["q"]).unwrap();
        assert_eq!(a.meet(&x, &x).unwrap_err(), Error::ForeignElement);
    }

    /// All ten Boolean-algebra axioms over every element triple, exhaustive
    /// for algebras of at most 2^5 elements.
    #[test]
    fn boolean_axioms_hold_exhaustively() {
        let algebras = vec![
            Algebra::finite(&[]).unwrap(),
            Algebra::finite(&["p"]).unwrap(),
            Algebra::finite(&["p", "q"]).unwrap(),
            Algebra::finite(&["p", "q", "r"]).unwrap(),
            Algebra::product(vec![
                AlgebraDescriptor::Finite { atoms: vec!["p".into()] },
                AlgebraDescriptor::Fc { universe: Universe::Named(vec!["u".into(), "v".into()]) },
            ])
            .unwrap(),
        ];
        for alg in algebras {
            let elems = alg.enumerate_elements().unwrap();
            assert!(elems.len() <= 32);
            let top = alg.top();
            let bot = alg.bottom();
            for a in &elems {
                // complementation
                assert_eq!(alg.join(a, &alg.complement(a).unwrap()).unwrap(), top);
                assert_eq!(alg.meet(a, &alg.complement(a).unwrap()).unwrap(), bot);
                // identity
                assert_eq!(&alg.join(a, &bot).unwrap(), a);
                assert_eq!(&alg.meet(a, &top).unwrap(), a);
                for b in &elems {
                    // commutativity
                    assert_eq!(alg.meet(a, b).unwrap(), alg.meet(b, a).unwrap());
                    assert_eq!(alg.join(a, b).unwrap(), alg.join(b, a).unwrap());
                    for c in &elems {
                        // associativity
                        assert_eq!(
                            alg.meet(&alg.meet(a, b).unwrap(), c).unwrap(),
                            alg.meet(a, &alg.meet(b, c).unwrap()).unwrap()
                        );
                        assert_eq!(
                            alg.join(&alg.join(a, b).unwrap(), c).unwrap(),
                            alg.join(a, &alg.join(b, c).unwrap()).unwrap()
                        );
                        // distributivity
                        assert_eq!(
                            alg.meet(a, &alg.join(b, c).unwrap()).unwrap(),
                            alg.join(&alg.meet(a, b).unwrap(), &alg.meet(a, c).unwrap())
                                .unwrap()
                        );
                        assert_eq!(
                            alg.join(a, &alg.meet(b, c).unwrap()).unwrap(),
                            alg.meet(
                                &alg.join(a, b).unwrap(),
                                &alg.join(a, c).unwrap()
                            )
                            .unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn leq_agrees_with_meet() {
        let a = Algebra::fc_nat();
        let x = a.fc_finite(&[0, 1]).unwrap();
        let y = a.fc_cofinite(&[2]).unwrap();
        assert!(a.leq(&x, &y).unwrap());
        assert!(!a.leq(&y, &x).unwrap());
    }
}
