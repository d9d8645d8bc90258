//! Representable ideals, density, pseudocomplements, simple ideals, the
//! ideal↔open-set bijection ι, and the LBA/ZLBA verdicts with their
//! join-refuter witnesses.
//!
//! An ideal of a product algebra is a tuple of per-block ideals. Three
//! per-block shapes suffice for everything built here: a principal downset,
//! the whole block, and (on an infinite finite–cofinite block) the elements
//! of finite mode.

use crate::algebra::{Algebra, Block, BlockElement, Element};
use crate::error::{Error, Result};
use crate::space::{is_open, s_point_set, PointSet, PointSetBlock};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealBlock {
    Principal(BlockElement),
    Full,
    /// Elements whose component in this block is a finite set; only
    /// meaningful on an infinite fc block.
    FiniteSupport,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    pub algebra: Algebra,
    pub blocks: Vec<IdealBlock>,
}

impl Ideal {
    fn canonicalize(algebra: Algebra, blocks: Vec<IdealBlock>) -> Result<Ideal> {
        if blocks.len() != algebra.blocks().len() {
            return Err(Error::Validation("ideal has wrong block count".into()));
        }
        let blocks = blocks
            .into_iter()
            .zip(algebra.blocks())
            .map(|(ib, ab)| {
                Ok(match (ib, ab) {
                    (IdealBlock::FiniteSupport, b) if !b.is_infinite_fc() => {
                        if matches!(b, Block::Finite { .. }) {
                            return Err(Error::FiniteSupportOnNonFcBlock);
                        }
                        // finite universe: every element has finite mode
                        IdealBlock::Full
                    }
                    (IdealBlock::Principal(g), b) => {
                        let top = block_top(b);
                        if g == top {
                            IdealBlock::Full
                        } else {
                            IdealBlock::Principal(g)
                        }
                    }
                    (ib, _) => ib,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal { algebra, blocks })
    }

    pub fn full(a: &Algebra) -> Ideal {
        Ideal {
            algebra: a.clone(),
            blocks: a.blocks().iter().map(|_| IdealBlock::Full).collect(),
        }
    }

    pub fn principal(a: &Algebra, g: &Element) -> Result<Ideal> {
        a.check_element(g)?;
        Ideal::canonicalize(
            a.clone(),
            g.blocks().iter().cloned().map(IdealBlock::Principal).collect(),
        )
    }

    pub fn zero(a: &Algebra) -> Ideal {
        Ideal::principal(a, &a.bottom()).expect("bottom is always an element")
    }

    /// The finite-support ideal of fc block `block`, full elsewhere.
    pub fn finite_support(a: &Algebra, block: usize) -> Result<Ideal> {
        if !a.blocks().get(block).is_some_and(|b| b.is_infinite_fc()) {
            return Err(Error::FiniteSupportOnNonFcBlock);
        }
        let blocks = (0..a.blocks().len())
            .map(|k| if k == block { IdealBlock::FiniteSupport } else { IdealBlock::Full })
            .collect();
        Ideal::canonicalize(a.clone(), blocks)
    }

    pub fn from_blocks(a: &Algebra, blocks: Vec<IdealBlock>) -> Result<Ideal> {
        Ideal::canonicalize(a.clone(), blocks)
    }

    /// Finitely generated ideals normalize to the principal ideal of the
    /// join of the generators.
    pub fn generated_by(a: &Algebra, gens: &[Element]) -> Result<Ideal> {
        let mut g = a.bottom();
        for e in gens {
            g = a.join(&g, e)?;
        }
        Ideal::principal(a, &g)
    }

    pub fn member(&self, e: &Element) -> Result<bool> {
        self.algebra.check_element(e)?;
        Ok(self.blocks.iter().zip(e.blocks()).all(|(ib, be)| match ib {
            IdealBlock::Full => true,
            IdealBlock::Principal(g) => block_leq(be, g),
            IdealBlock::FiniteSupport => {
                matches!(be, BlockElement::Fc { cofinite: false, .. })
            }
        }))
    }

    /// Density with a witness: on false, an a ∈ A⁺ dominating no nonzero
    /// member of the ideal.
    pub fn is_dense(&self) -> Result<(bool, Option<Element>)> {
        for (k, (ib, ab)) in self.blocks.iter().zip(self.algebra.blocks()).enumerate() {
            let dense_here = match ib {
                IdealBlock::Full | IdealBlock::FiniteSupport => true,
                IdealBlock::Principal(g) => *g == block_top(ab),
            };
            if !dense_here {
                // the complement of the generator, concentrated in block k
                let g = match ib {
                    IdealBlock::Principal(g) => g.clone(),
                    _ => unreachable!(),
                };
                let mut parts: Vec<BlockElement> =
                    self.algebra.bottom().blocks().to_vec();
                let gk = self
                    .algebra
                    .element_from_blocks(replace_block(&parts, k, g))?;
                let comp = self.algebra.complement(&gk)?;
                // mask away the other blocks (they are complemented to top)
                parts[k] = comp.blocks()[k].clone();
                let witness = self.algebra.element_from_blocks(parts)?;
                return Ok((false, Some(witness)));
            }
        }
        Ok((true, None))
    }

    /// The pseudocomplement ¬I = {a : a ∧ b = 0 for every b ∈ I}.
    pub fn pseudocomplement(&self) -> Result<Ideal> {
        let blocks = self
            .blocks
            .iter()
            .zip(self.algebra.blocks())
            .map(|(ib, ab)| match ib {
                IdealBlock::Principal(g) => IdealBlock::Principal(block_complement(ab, g)),
                IdealBlock::Full | IdealBlock::FiniteSupport => {
                    IdealBlock::Principal(block_bottom(ab))
                }
            })
            .collect();
        Ideal::canonicalize(self.algebra.clone(), blocks)
    }

    /// J is simple iff J ∨ ¬J is the whole algebra, decided in
    /// representation by asking whether 1 lands in the join.
    pub fn is_simple(&self) -> Result<bool> {
        // block-wise: Principal(g) ∨ Principal(g*) and Full both reach the
        // block top; FiniteSupport ∨ Principal(0) = FiniteSupport misses it.
        Ok(self
            .blocks
            .iter()
            .all(|ib| !matches!(ib, IdealBlock::FiniteSupport)))
    }

    /// L_I^A: the characters sending some member of I to 1.
    pub fn l_set(&self) -> Result<PointSet> {
        let mut out = PointSet::full(&self.algebra);
        for (k, (ib, _ab)) in self.blocks.iter().zip(self.algebra.blocks()).enumerate() {
            out.blocks[k] = match ib {
                IdealBlock::Full => out.blocks[k].clone(),
                IdealBlock::Principal(g) => {
                    let gk = self
                        .algebra
                        .element_from_blocks(replace_block(
                            self.algebra.top().blocks(),
                            k,
                            g.clone(),
                        ))?;
                    s_point_set(&self.algebra, &gk)?.blocks[k].clone()
                }
                IdealBlock::FiniteSupport => PointSetBlock::Fc {
                    cofinite: true,
                    support: Default::default(),
                    free: false,
                },
            };
        }
        Ok(out)
    }
}

fn replace_block(parts: &[BlockElement], k: usize, b: BlockElement) -> Vec<BlockElement> {
    let mut v = parts.to_vec();
    v[k] = b;
    v
}

fn block_top(b: &Block) -> BlockElement {
    match b {
        Block::Finite { atoms } => BlockElement::Finite(atoms.iter().cloned().collect()),
        Block::Fc { universe } => match universe.finite_size() {
            Some(n) => BlockElement::Fc { cofinite: false, support: (0..n).collect() },
            None => BlockElement::Fc { cofinite: true, support: Default::default() },
        },
    }
}

fn block_bottom(b: &Block) -> BlockElement {
    match b {
        Block::Finite { .. } => BlockElement::Finite(Default::default()),
        Block::Fc { .. } => BlockElement::Fc { cofinite: false, support: Default::default() },
    }
}

fn block_complement(b: &Block, g: &BlockElement) -> BlockElement {
    match (b, g) {
        (Block::Finite { atoms }, BlockElement::Finite(s)) => BlockElement::Finite(
            atoms.iter().filter(|t| !s.contains(*t)).cloned().collect(),
        ),
        (Block::Fc { universe }, BlockElement::Fc { cofinite, support }) => {
            match universe.finite_size() {
                Some(n) => BlockElement::Fc {
                    cofinite: false,
                    support: (0..n)
                        .filter(|i| {
                            let member =
                                if *cofinite { !support.contains(i) } else { support.contains(i) };
                            !member
                        })
                        .collect(),
                },
                None => BlockElement::Fc { cofinite: !cofinite, support: support.clone() },
            }
        }
        _ => unreachable!("block shape mismatch"),
    }
}

fn block_leq(a: &BlockElement, b: &BlockElement) -> bool {
    match (a, b) {
        (BlockElement::Finite(x), BlockElement::Finite(y)) => x.is_subset(y),
        (
            BlockElement::Fc { cofinite: ca, support: sa },
            BlockElement::Fc { cofinite: cb, support: sb },
        ) => match (ca, cb) {
            (false, false) => sa.is_subset(sb),
            (false, true) => sa.iter().all(|i| !sb.contains(i)),
            (true, false) => false,
            (true, true) => sb.is_subset(sa),
        },
        _ => false,
    }
}

/// All simple ideals of a finite algebra; there every ideal is principal
/// and every principal ideal is simple.
pub fn simple_ideals(a: &Algebra) -> Result<Vec<Ideal>> {
    let elems = a.enumerate_elements()?;
    elems.iter().map(|e| Ideal::principal(a, e)).collect()
}

/// ι(J) = union of the s_A(a) over a ∈ J; coincides with L_J^A on every
/// representable ideal, which a unit test checks against sampled members.
pub fn iota(j: &Ideal) -> Result<PointSet> {
    j.l_set()
}

/// ι⁻¹(U) = {a : s_A(a) ⊆ U}, for open U; errors when the resulting ideal
/// falls outside the representable family.
pub fn iota_inv(a: &Algebra, u: &PointSet) -> Result<Ideal> {
    if !is_open(a, u)? {
        return Err(Error::NotOpen);
    }
    let mut blocks = Vec::new();
    for (ub, ab) in u.blocks.iter().zip(a.blocks()) {
        blocks.push(match (ub, ab) {
            (PointSetBlock::Finite(s), Block::Finite { .. }) => {
                IdealBlock::Principal(BlockElement::Finite(s.clone()))
            }
            (PointSetBlock::Fc { cofinite, support, free }, Block::Fc { universe }) => {
                match universe.finite_size() {
                    Some(_) => IdealBlock::Principal(BlockElement::Fc {
                        cofinite: *cofinite,
                        support: support.clone(),
                    }),
                    None => match (cofinite, free) {
                        (false, false) => IdealBlock::Principal(BlockElement::Fc {
                            cofinite: false,
                            support: support.clone(),
                        }),
                        (true, true) => IdealBlock::Principal(BlockElement::Fc {
                            cofinite: true,
                            support: support.clone(),
                        }),
                        (true, false) => {
                            if support.is_empty() {
                                IdealBlock::FiniteSupport
                            } else {
                                return Err(Error::UnrepresentableIdeal(
                                    "finite sets avoiding a nonempty finite index set".into(),
                                ));
                            }
                        }
                        (false, true) => unreachable!("open sets exclude this shape"),
                    },
                }
            }
            _ => unreachable!("block shape mismatch"),
        });
    }
    Ideal::from_blocks(a, blocks)
}

/// A symbolic infinite–coinfinite set of fc indices: a residue class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexSet {
    pub modulus: usize,
    pub residue: usize,
}

impl IndexSet {
    pub fn evens() -> Self {
        IndexSet { modulus: 2, residue: 0 }
    }

    pub fn new(modulus: usize, residue: usize) -> Result<Self> {
        if modulus < 2 || residue >= modulus {
            return Err(Error::Validation(
                "index set must be an infinite–coinfinite residue class".into(),
            ));
        }
        Ok(IndexSet { modulus, residue })
    }

    pub fn contains(&self, i: usize) -> bool {
        i % self.modulus == self.residue
    }

    pub fn describe(&self) -> String {
        if self.modulus == 2 && self.residue == 0 {
            "finite subsets of the even indices".into()
        } else {
            format!("finite subsets of the indices ≡ {} (mod {})", self.residue, self.modulus)
        }
    }
}

/// Negative ZLBA witness: a simple ideal of I (the finite subsets of an
/// infinite–coinfinite index set inside an fc block) whose join does not
/// exist in A, certified by a refuter that strictly improves any candidate
/// upper bound.
#[derive(Clone, Debug)]
pub struct JoinlessWitness {
    pub block: usize,
    pub index_set: IndexSet,
}

/// What the refuter says about one candidate upper bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RefuterOutcome {
    /// The candidate misses this member of the simple ideal.
    NotAnUpperBound { missing: Element },
    /// A strictly smaller upper bound.
    SmallerBound(Element),
}

impl JoinlessWitness {
    /// Every upper bound of the witness ideal is a cofinite set containing
    /// the index class; removing one index outside the class keeps it an
    /// upper bound and strictly shrinks it.
    pub fn refute(&self, a: &Algebra, candidate: &Element) -> Result<RefuterOutcome> {
        a.check_element(candidate)?;
        let (cofinite, support) = match &candidate.blocks()[self.block] {
            BlockElement::Fc { cofinite, support } => (*cofinite, support.clone()),
            _ => return Err(Error::ForeignElement),
        };
        // find a class member not below the candidate
        if !cofinite {
            // a finite set misses some singleton of the (infinite) class
            let mut i = self.index_set.residue;
            while support.contains(&i) {
                i += self.index_set.modulus;
            }
            return Ok(RefuterOutcome::NotAnUpperBound {
                missing: singleton_in_block(a, self.block, i)?,
            });
        }
        if let Some(&i) = support.iter().find(|i| self.index_set.contains(**i)) {
            return Ok(RefuterOutcome::NotAnUpperBound {
                missing: singleton_in_block(a, self.block, i)?,
            });
        }
        // cofinite and containing the class: remove the smallest
        // out-of-class index still present
        let mut i = 0;
        while self.index_set.contains(i) || support.contains(&i) {
            i += 1;
        }
        let mut smaller = support;
        smaller.insert(i);
        let parts = replace_block(
            candidate.blocks(),
            self.block,
            BlockElement::Fc { cofinite: true, support: smaller },
        );
        Ok(RefuterOutcome::SmallerBound(a.element_from_blocks(parts)?))
    }
}

fn singleton_in_block(a: &Algebra, block: usize, i: usize) -> Result<Element> {
    let parts = replace_block(
        a.bottom().blocks(),
        block,
        BlockElement::Fc { cofinite: false, support: [i].into() },
    );
    a.element_from_blocks(parts)
}

/// A pair (A, I) with its LBA/ZLBA verdicts and witnesses.
#[derive(Clone, Debug)]
pub struct LbaPair {
    pub algebra: Algebra,
    pub ideal: Ideal,
    pub is_lba: bool,
    pub density_witness: Option<Element>,
    pub is_zlba: bool,
    pub zlba_witness: Option<JoinlessWitness>,
}

impl PartialEq for LbaPair {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.ideal == other.ideal
    }
}
impl Eq for LbaPair {}

impl LbaPair {
    pub fn analyze(a: &Algebra, ideal: Ideal) -> Result<LbaPair> {
        if ideal.algebra != *a {
            return Err(Error::DomainMismatch);
        }
        let (is_lba, density_witness) = ideal.is_dense()?;
        let (is_zlba_raw, zlba_witness) = zlba_by_trace(&ideal)?;
        Ok(LbaPair {
            algebra: a.clone(),
            ideal,
            is_lba,
            density_witness,
            is_zlba: is_lba && is_zlba_raw,
            zlba_witness: if is_lba { zlba_witness } else { None },
        })
    }
}

/// The clopen-trace route: (A,I) is ZLBA iff on L_I^A the traces of the
/// Stone map exhaust the clopen sets of the subspace. Block-wise, the only
/// failing shape is an infinite discrete trace (cofinite principal part
/// without the free point), which is exactly a FiniteSupport ideal block.
fn zlba_by_trace(ideal: &Ideal) -> Result<(bool, Option<JoinlessWitness>)> {
    let l = ideal.l_set()?;
    for (k, lb) in l.blocks.iter().enumerate() {
        if let PointSetBlock::Fc { cofinite: true, free: false, .. } = lb {
            return Ok((
                false,
                Some(JoinlessWitness { block: k, index_set: IndexSet::evens() }),
            ));
        }
    }
    Ok((true, None))
}

/// The definitional route: every simple ideal of I must have a join in A.
/// On principal/full blocks all joins exist (the generator, resp. 1); a
/// FiniteSupport block yields the joinless witness ideal, validated by
/// running its refuter against candidate upper bounds.
pub fn zlba_by_witness(a: &Algebra, ideal: &Ideal, candidates: &[Element]) -> Result<bool> {
    for (k, ib) in ideal.blocks.iter().enumerate() {
        if matches!(ib, IdealBlock::FiniteSupport) {
            let w = JoinlessWitness { block: k, index_set: IndexSet::evens() };
            // the witness ideal is inside I and simple there; certify
            // joinlessness: every candidate is refuted
            for c in candidates {
                match w.refute(a, c)? {
                    RefuterOutcome::NotAnUpperBound { missing } => {
                        // the missing member really is in the witness ideal
                        debug_assert!(ideal.member(&missing)?);
                    }
                    RefuterOutcome::SmallerBound(s) => {
                        debug_assert!(a.leq(&s, c)? && s != *c);
                    }
                }
            }
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::{is_dense as set_is_dense, PointSet};

    fn fc() -> Algebra {
        Algebra::fc_nat()
    }

    #[test]
    fn membership_examples() {
        let a = Algebra::finite(&["p", "q"]).unwrap();
        let p = a.fin_elem(&["p"]).unwrap();
        let q = a.fin_elem(&["q"]).unwrap();
        let ip = Ideal::principal(&a, &p).unwrap();
        assert!(ip.member(&p).unwrap());
        assert!(!ip.member(&q).unwrap());

        let b = fc();
        let fs = Ideal::finite_support(&b, 0).unwrap();
        assert!(fs.member(&b.fc_finite(&[0, 1]).unwrap()).unwrap());
        assert!(!fs.member(&b.fc_cofinite(&[]).unwrap()).unwrap());
    }

    /// Oracle: finitely generated ideals normalize to the join.
    #[test]
    fn generated_by_normalizes_to_principal_of_join() {
        let a = Algebra::finite(&["p", "q"]).unwrap();
        let gens = [a.fin_elem(&["p"]).unwrap(), a.fin_elem(&["q"]).unwrap()];
        let i = Ideal::generated_by(&a, &gens).unwrap();
        assert_eq!(i, Ideal::full(&a)); // {p}∨{q} = 1 here
        let j = Ideal::generated_by(&a, &gens[..1]).unwrap();
        assert_eq!(j, Ideal::principal(&a, &gens[0]).unwrap());
        // oracle: membership is exactly being under the join
        for e in a.enumerate_elements().unwrap() {
            assert_eq!(j.member(&e).unwrap(), a.leq(&e, &gens[0]).unwrap());
        }
    }

    #[test]
    fn finite_support_rejected_off_fc_blocks() {
        let a = Algebra::finite(&["p"]).unwrap();
        assert!(matches!(
            Ideal::finite_support(&a, 0),
            Err(Error::FiniteSupportOnNonFcBlock)
        ));
    }

    #[test]
    fn density_verdicts() {
        let b = fc();
        let (dense, w) = Ideal::finite_support(&b, 0).unwrap().is_dense().unwrap();
        assert!(dense && w.is_none());
        // independent check on an element sample: every nonzero sample
        // dominates a nonzero finite set
        for e in [b.fc_finite(&[3]).unwrap(), b.fc_cofinite(&[0]).unwrap(), b.top()] {
            assert!(!b.is_zero(&e).unwrap());
            // a singleton below e
            let i = match &e.blocks()[0] {
                BlockElement::Fc { cofinite: false, support } => *support.iter().next().unwrap(),
                BlockElement::Fc { cofinite: true, support } => {
                    (0..).find(|i| !support.contains(i)).unwrap()
                }
                _ => unreachable!(),
            };
            let s = b.fc_finite(&[i]).unwrap();
            assert!(b.leq(&s, &e).unwrap());
        }

        let a = Algebra::finite(&["p", "q"]).unwrap();
        let p = a.fin_elem(&["p"]).unwrap();
        let (dense, w) = Ideal::principal(&a, &p).unwrap().is_dense().unwrap();
        assert!(!dense);
        assert_eq!(w.unwrap(), a.fin_elem(&["q"]).unwrap());

        let (dense, _) = Ideal::full(&a).is_dense().unwrap();
        assert!(dense);
    }

    /// Oracle: enumerate all a with a ∧ g = 0.
    #[test]
    fn pseudocomplement_matches_enumeration() {
        let a = Algebra::finite(&["p", "q"]).unwrap();
        let p = a.fin_elem(&["p"]).unwrap();
        let np = Ideal::principal(&a, &p).unwrap().pseudocomplement().unwrap();
        assert_eq!(np, Ideal::principal(&a, &a.fin_elem(&["q"]).unwrap()).unwrap());
        for e in a.enumerate_elements().unwrap() {
            let disjoint = a.is_zero(&a.meet(&e, &p).unwrap());
            assert_eq!(np.member(&e).unwrap(), disjoint.unwrap());
        }
        assert_eq!(Ideal::full(&a).pseudocomplement().unwrap(), Ideal::zero(&a));

        let b = fc();
        let nfs = Ideal::finite_support(&b, 0).unwrap().pseudocomplement().unwrap();
        assert_eq!(nfs, Ideal::zero(&b));
        // defining property on samples
        for e in [b.fc_finite(&[2]).unwrap(), b.fc_cofinite(&[]).unwrap()] {
            if !b.is_zero(&e).unwrap() {
                assert!(!nfs.member(&e).unwrap());
            }
        }
    }

    #[test]
    fn simple_ideal_verdicts() {
        let a = Algebra::finite(&["p", "q", "r"]).unwrap();
        // exhaustive: every principal ideal of a finite algebra is simple
        for e in a.enumerate_elements().unwrap() {
            let j = Ideal::principal(&a, &e).unwrap();
            assert!(j.is_simple().unwrap());
            // oracle: 1 ∈ J ∨ ¬J, i.e. g ∨ g* = 1
            let g = e.clone();
            let gstar = a.complement(&g).unwrap();
            assert_eq!(a.join(&g, &gstar).unwrap(), a.top());
        }
        assert_eq!(simple_ideals(&a).unwrap().len(), 8);

        let b = fc();
        assert!(!Ideal::finite_support(&b, 0).unwrap().is_simple().unwrap());
        assert!(Ideal::full(&b).is_simple().unwrap());
    }

    #[test]
    fn l_set_shapes() {
        let b = fc();
        let l = Ideal::finite_support(&b, 0).unwrap().l_set().unwrap();
        assert_eq!(
            l.blocks[0],
            PointSetBlock::Fc { cofinite: true, support: Default::default(), free: false }
        );
        assert_eq!(Ideal::full(&b).l_set().unwrap(), PointSet::full(&b));
        let g = b.fc_cofinite(&[1]).unwrap();
        assert_eq!(
            Ideal::principal(&b, &g).unwrap().l_set().unwrap(),
            s_point_set(&b, &g).unwrap()
        );
    }

    /// ι agrees with unions of s(a) over sampled members.
    #[test]
    fn iota_covers_member_images_and_is_open() {
        let b = fc();
        for i in [
            Ideal::finite_support(&b, 0).unwrap(),
            Ideal::full(&b),
            Ideal::principal(&b, &b.fc_finite(&[0, 4]).unwrap()).unwrap(),
            Ideal::zero(&b),
        ] {
            let u = iota(&i).unwrap();
            assert!(is_open(&b, &u).unwrap());
            for e in [
                b.fc_finite(&[0]).unwrap(),
                b.fc_finite(&[4, 7]).unwrap(),
                b.fc_cofinite(&[9]).unwrap(),
            ] {
                if i.member(&e).unwrap() {
                    assert!(s_point_set(&b, &e).unwrap().is_subset(&u));
                }
            }
        }
    }

    /// Exhaustive bijection on a 2-atom algebra: 4 ideals vs 4 open sets.
    #[test]
    fn iota_is_a_bijection_on_small_finite() {
        let a = Algebra::finite(&["p", "q"]).unwrap();
        let ideals: Vec<Ideal> = a
            .enumerate_elements()
            .unwrap()
            .into_iter()
            .map(|e| Ideal::principal(&a, &e).unwrap())
            .collect();
        let mut opens = Vec::new();
        for i in &ideals {
            let u = iota(i).unwrap();
            assert!(!opens.contains(&u), "ι must be injective");
            assert_eq!(&iota_inv(&a, &u).unwrap(), i, "ι⁻¹ inverts ι");
            opens.push(u);
        }
        // monotone and meet-preserving
        for i in &ideals {
            for j in &ideals {
                let (gi, gj) = (iota(i).unwrap(), iota(j).unwrap());
                // ideal intersection of principals = principal of meet
                let (a_, b_) = (elem_of(i), elem_of(j));
                let meet_ideal = Ideal::principal(&a, &a.meet(&a_, &b_).unwrap()).unwrap();
                assert_eq!(iota(&meet_ideal).unwrap(), gi.intersect(&gj));
            }
        }

        fn elem_of(i: &Ideal) -> Element {
            match &i.blocks[0] {
                IdealBlock::Principal(g) => Element(vec![g.clone()]),
                IdealBlock::Full => Element(vec![BlockElement::Finite(
                    ["p".to_string(), "q".to_string()].into(),
                )]),
                _ => unreachable!(),
            }
        }
    }

    #[test]
    fn iota_inv_on_fc_shapes() {
        let b = fc();
        // all principals, no free → finite-support ideal
        let mut p = PointSet::full(&b);
        if let PointSetBlock::Fc { free, .. } = &mut p.blocks[0] {
            *free = false;
        }
        assert_eq!(iota_inv(&b, &p).unwrap(), Ideal::finite_support(&b, 0).unwrap());
        assert_eq!(iota(&Ideal::finite_support(&b, 0).unwrap()).unwrap(), p);
        // full space → full ideal
        assert_eq!(iota_inv(&b, &PointSet::full(&b)).unwrap(), Ideal::full(&b));
        // cofinite principal part with a nonempty excluded set and no free
        // point is open but has an unrepresentable ideal
        let mut q = p.clone();
        if let PointSetBlock::Fc { support, .. } = &mut q.blocks[0] {
            support.insert(0);
        }
        assert!(matches!(iota_inv(&b, &q), Err(Error::UnrepresentableIdeal(_))));
        // non-open input
        let mut r = PointSet::empty(&b);
        if let PointSetBlock::Fc { free, .. } = &mut r.blocks[0] {
            *free = true;
        }
        assert!(matches!(iota_inv(&b, &r), Err(Error::NotOpen)));
    }

    #[test]
    fn lba_and_zlba_verdicts() {
        let b = fc();
        let fs = LbaPair::analyze(&b, Ideal::finite_support(&b, 0).unwrap()).unwrap();
        assert!(fs.is_lba);
        assert!(!fs.is_zlba);
        let w = fs.zlba_witness.as_ref().unwrap();
        assert_eq!(w.index_set, IndexSet::evens());

        let full = LbaPair::analyze(&b, Ideal::full(&b)).unwrap();
        assert!(full.is_lba && full.is_zlba);

        let a = Algebra::finite(&["p", "q"]).unwrap();
        let fin = LbaPair::analyze(&a, Ideal::full(&a)).unwrap();
        assert!(fin.is_lba && fin.is_zlba);

        // non-dense principal ideal: not even LBA
        let p = Ideal::principal(&a, &a.fin_elem(&["p"]).unwrap()).unwrap();
        let nd = LbaPair::analyze(&a, p).unwrap();
        assert!(!nd.is_lba && !nd.is_zlba);
    }

    #[test]
    fn join_refuter_defeats_candidates() {
        let b = fc();
        let w = JoinlessWitness { block: 0, index_set: IndexSet::evens() };
        // candidates that are upper bounds: cofinite, excluding only odds
        let candidates = [
            b.fc_cofinite(&[]).unwrap(),
            b.fc_cofinite(&[1]).unwrap(),
            b.fc_cofinite(&[1, 3]).unwrap(),
            b.fc_cofinite(&[5]).unwrap(),
            b.fc_cofinite(&[1, 3, 5, 7, 9]).unwrap(),
        ];
        for c in &candidates {
            match w.refute(&b, c).unwrap() {
                RefuterOutcome::SmallerBound(s) => {
                    assert!(b.leq(&s, c).unwrap() && s != *c);
                    // still an upper bound: cofinite, support avoids evens
                    match &s.blocks()[0] {
                        BlockElement::Fc { cofinite: true, support } => {
                            assert!(support.iter().all(|i| i % 2 == 1));
                        }
                        _ => panic!("refuter must return a cofinite bound"),
                    }
                }
                other => panic!("expected a smaller bound, got {other:?}"),
            }
        }
        // a non-upper-bound gets a missing member
        match w.refute(&b, &b.fc_finite(&[0, 2]).unwrap()).unwrap() {
            RefuterOutcome::NotAnUpperBound { missing } => {
                let fs = Ideal::finite_support(&b, 0).unwrap();
                assert!(fs.member(&missing).unwrap());
                assert!(!b.leq(&missing, &b.fc_finite(&[0, 2]).unwrap()).unwrap());
            }
            other => panic!("expected not-an-upper-bound, got {other:?}"),
        }
        match w.refute(&b, &b.fc_cofinite(&[2]).unwrap()).unwrap() {
            RefuterOutcome::NotAnUpperBound { .. } => {}
            other => panic!("expected not-an-upper-bound, got {other:?}"),
        }
    }

    #[test]
    fn the_two_zlba_routes_agree() {
        let b = fc();
        let a = Algebra::finite(&["p", "q"]).unwrap();
        let candidates = [
            b.fc_cofinite(&[]).unwrap(),
            b.fc_cofinite(&[1, 3]).unwrap(),
            b.fc_cofinite(&[7]).unwrap(),
            b.fc_finite(&[0, 2, 4]).unwrap(),
            b.fc_cofinite(&[1, 9]).unwrap(),
        ];
        for (alg, ideal) in [
            (&b, Ideal::finite_support(&b, 0).unwrap()),
            (&b, Ideal::full(&b)),
            (&a, Ideal::full(&a)),
            (&a, Ideal::principal(&a, &a.fin_elem(&["p"]).unwrap()).unwrap()),
        ] {
            let trace_route = LbaPair::analyze(alg, ideal.clone()).unwrap();
            let witness_route = if alg == &b {
                zlba_by_witness(alg, &ideal, &candidates).unwrap()
            } else {
                zlba_by_witness(alg, &ideal, &[]).unwrap()
            };
            // the witness route decides the join condition alone; combine
            // with density as analyze does
            assert_eq!(trace_route.is_zlba, trace_route.is_lba && witness_route);
        }
    }

    #[test]
    fn l_set_is_dense_for_dense_ideals() {
        let b = fc();
        for i in [Ideal::finite_support(&b, 0).unwrap(), Ideal::full(&b)] {
            assert!(i.is_dense().unwrap().0);
            assert!(set_is_dense(&b, &i.l_set().unwrap()).unwrap());
        }
    }
}
