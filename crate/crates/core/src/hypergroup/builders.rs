//! Ready-made hypergroup families: plain groups, finite fields, vector
//! spaces, and product profiles over a pair of groups.

use crate::gf::{Gf, GfError};
use crate::group::{cyclic, FiniteGroup};

use super::{Hypergroup, HypergroupError, RawHypergroup};

/// Any group is a hypergroup over the one-element group: `xi` is the group
/// table and the other three mappings carry no information.
pub fn from_group(g: &FiniteGroup) -> Hypergroup {
    let m = g.order();
    let raw = RawHypergroup {
        name: format!("{}-hyp", g.name()),
        base_names: g.elements().to_vec(),
        h: cyclic(1).expect("order 1 is valid").with_name("h1"),
        phi: (0..m).map(|a| vec![a]).collect(),
        psi: vec![vec![0]; m],
        xi: (0..m).map(|a| g.row(a).to_vec()).collect(),
        lam: vec![vec![0; m]; m],
    };
    Hypergroup::validate(raw).expect("a group over the trivial group satisfies every axiom")
}

/// Shared core of the field-flavored builders: base set the elements of
/// `field` under addition, `H = scalars`, with scalar `u` acting as
/// multiplication by the field element of index `u + 1` (the scalar groups
/// below index their elements so that this is the right shift).
fn scalar_action(name: String, field: &Gf, scalars: FiniteGroup) -> Hypergroup {
    let q = field.order();
    let hn = scalars.order();
    let eps = scalars.identity();
    let raw = RawHypergroup {
        name,
        base_names: (0..q).map(|i| i.to_string()).collect(),
        h: scalars,
        phi: (0..q)
            .map(|a| (0..hn).map(|u| field.mul(a, u + 1)).collect())
            .collect(),
        psi: vec![(0..hn).collect(); q],
        xi: (0..q)
            .map(|a| (0..q).map(|b| field.add(a, b)).collect())
            .collect(),
        lam: vec![vec![eps; q]; q],
    };
    Hypergroup::validate(raw)
        .expect("distributivity and associativity of the field imply the axioms")
}

/// `GF(p^k)` as a hypergroup over its own multiplicative group: the base
/// set is the field under addition and `phi` is field multiplication.
pub fn from_field(p: usize, k: u32) -> Result<Hypergroup, GfError> {
    let gf = Gf::new(p, k)?;
    let scalars = gf.multiplicative_group();
    Ok(scalar_action(format!("gf{}", gf.order()), &gf, scalars))
}

/// `GF(p)^n` as a hypergroup over `GF(p)^×`: the base set is the additive
/// group of `GF(p^n)` and scalars act coordinatewise (multiplication by a
/// constant polynomial). For `p = 2` the scalar group is trivial and this
/// degenerates to [`from_group`] of the elementary abelian group.
pub fn from_vector_space(p: usize, n: u32) -> Result<Hypergroup, GfError> {
    let space = Gf::new(p, n)?;
    let scalars = Gf::new(p, 1)?.multiplicative_group();
    Ok(scalar_action(format!("vs{p}-{n}"), &space, scalars))
}

/// The `phi`/`psi` half of a product profile; `xi` is always the `M` group
/// table and `lam ≡ ε`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Profile {
    /// Both actions trivial; the resulting exact product is `H × M`.
    TrivialAll,
    /// `phi` trivial and `psi` prescribed (rows indexed by `M`, columns by
    /// `H`): a semidirect-product shape.
    Semidirect { psi: Vec<Vec<usize>> },
    /// Both actions prescribed: a knit-product shape where neither group
    /// need act by automorphisms.
    General {
        phi: Vec<Vec<usize>>,
        psi: Vec<Vec<usize>>,
    },
}

/// Builds a hypergroup with `xi` the table of `mgroup` and `lam ≡ ε`, the
/// two actions supplied by `profile`. Unlike the field builders nothing
/// here is automatically lawful: the tables go through the full axiom
/// sweep, and an unsound profile comes back as
/// [`HypergroupError::Axioms`] with the failing report.
pub fn with_profile(
    h: &FiniteGroup,
    mgroup: &FiniteGroup,
    profile: Profile,
) -> Result<Hypergroup, HypergroupError> {
    let m = mgroup.order();
    let hn = h.order();
    let trivial_phi = || (0..m).map(|a| vec![a; hn]).collect::<Vec<_>>();
    let trivial_psi = || vec![(0..hn).collect::<Vec<_>>(); m];
    let (tag, phi, psi) = match profile {
        Profile::TrivialAll => ("dp", trivial_phi(), trivial_psi()),
        Profile::Semidirect { psi } => ("sd", trivial_phi(), psi),
        Profile::General { phi, psi } => ("knit", phi, psi),
    };
    let raw = RawHypergroup {
        name: format!("{tag}-{}-{}", h.name(), mgroup.name()),
        base_names: mgroup.elements().to_vec(),
        h: h.clone(),
        phi,
        psi,
        xi: (0..m).map(|a| mgroup.row(a).to_vec()).collect(),
        lam: vec![vec![h.identity(); m]; m],
    };
    Hypergroup::validate(raw)
}
