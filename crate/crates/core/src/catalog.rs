//! The built-in object catalog: the worked examples every roundtrip,
//! coherence, and verdict check runs over, shipped as data so the checks
//! need no authoring.

use crate::algebra::{Algebra, AlgebraDescriptor, Universe};
use crate::dz::DzAlgebra;
use crate::error::Result;
use crate::ideal::{Ideal, LbaPair};
use crate::space::{PointSet, PointSetBlock};
use crate::spaces::{SpaceBlock, SpacePresentation};

pub struct Catalog {
    pub algebras: Vec<(String, Algebra)>,
    pub spaces: Vec<(String, SpacePresentation)>,
    pub pairs: Vec<(String, LbaPair)>,
    pub dz_objects: Vec<(String, DzAlgebra)>,
}

fn atom_names(n: usize) -> Vec<&'static str> {
    ["p", "q", "r", "s", "t"][..n].to_vec()
}

/// All principals of an fc block, without the limit point.
pub fn principals_only(a: &Algebra, block: usize) -> PointSet {
    let mut p = PointSet::full(a);
    if let PointSetBlock::Fc { free, .. } = &mut p.blocks[block] {
        *free = false;
    }
    p
}

pub fn builtin() -> Result<Catalog> {
    let mut algebras = Vec::new();
    for n in 0..=4 {
        let names = atom_names(n);
        algebras.push((format!("finite-{n}"), Algebra::finite(&names)?));
    }
    algebras.push(("fc-nat".into(), Algebra::fc_nat()));
    algebras.push((
        "fc-named".into(),
        Algebra::new(AlgebraDescriptor::Fc {
            universe: Universe::Named(vec!["a".into(), "b".into(), "c".into()]),
        })?,
    ));
    algebras.push((
        "product-finite-fc".into(),
        Algebra::product(vec![
            AlgebraDescriptor::Finite { atoms: vec!["p".into(), "q".into()] },
            AlgebraDescriptor::Fc { universe: Universe::Nat },
        ])?,
    ));

    let spaces = vec![
        ("finite-0".to_string(), SpacePresentation::finite(0)),
        ("finite-1".to_string(), SpacePresentation::finite(1)),
        ("finite-2".to_string(), SpacePresentation::finite(2)),
        ("finite-3".to_string(), SpacePresentation::finite(3)),
        ("k-omega".to_string(), SpacePresentation::k_omega()),
        (
            "finite-2+k-omega".to_string(),
            SpacePresentation { blocks: vec![SpaceBlock::Finite { n: 2 }, SpaceBlock::KOmega] },
        ),
        (
            "discrete-omega".to_string(),
            SpacePresentation { blocks: vec![SpaceBlock::DiscreteOmega] },
        ),
    ];

    // LBA pairs: (A, Full) is ZLBA for every representable A; the
    // finite-support pair is the canonical LBA-not-ZLBA example; a
    // non-dense principal ideal is not even LBA.
    let mut pairs = Vec::new();
    for (name, a) in &algebras {
        pairs.push((format!("{name}/full"), LbaPair::analyze(a, Ideal::full(a))?));
    }
    let fc = Algebra::fc_nat();
    pairs.push((
        "fc-nat/finite-support".into(),
        LbaPair::analyze(&fc, Ideal::finite_support(&fc, 0)?)?,
    ));
    let fin2 = Algebra::finite(&["p", "q"])?;
    pairs.push((
        "finite-2/principal-p".into(),
        LbaPair::analyze(&fin2, Ideal::principal(&fin2, &fin2.fin_elem(&["p"])?)?)?,
    ));

    // dz pairs: (A, S(A)) is ldz for every representable A; the
    // all-principals pair is z-not-dz; a finite principal set is not z.
    let mut dz_objects = Vec::new();
    for (name, a) in &algebras {
        dz_objects.push((
            format!("{name}/full-space"),
            DzAlgebra::analyze(a, PointSet::full(a))?,
        ));
    }
    dz_objects.push((
        "fc-nat/principals".into(),
        DzAlgebra::analyze(&fc, principals_only(&fc, 0))?,
    ));
    dz_objects.push((
        "fc-nat/two-points".into(),
        DzAlgebra::analyze(&fc, crate::space::s_point_set(&fc, &fc.fc_finite(&[0, 1])?)?)?,
    ));

    Ok(Catalog { algebras, spaces, pairs, dz_objects })
}
