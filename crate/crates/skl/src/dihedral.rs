//! The dihedral action on the ground set and the vertex permutations it
//! induces on stable Kneser graphs.
//!
//! Ground maps live on residues 0..n-1: the rotation sends i to i+1 and the
//! reflection sends i to -i, both mod n. The 2n products rho^t and rho^t∘tau
//! act on a stable Kneser graph by acting elementwise on the subsets carried
//! by its vertices.

use crate::error::{Error, Result};
use crate::families::StableKneserGraph;
use crate::group::{PermutationGroup, DEFAULT_MAX_ORDER};
use crate::perm::Permutation;

pub fn rotation(n: usize, shift: usize) -> Permutation {
    Permutation::from_fn(n, |i| (i + shift) % n).expect("rotation is a bijection")
}

pub fn reflection(n: usize) -> Permutation {
    Permutation::from_fn(n, |i| (n - i) % n).expect("reflection is a bijection")
}

/// The 2n ground maps rho^t and rho^t∘tau, t = 0..n-1, in that order.
/// Distinct for n >= 3.
pub fn ground_dihedral_elements(n: usize) -> Vec<Permutation> {
    let tau = reflection(n);
    let mut elements = Vec::with_capacity(2 * n);
    for t in 0..n {
        let rho_t = rotation(n, t);
        elements.push(rho_t.clone());
        elements.push(rho_t.compose(&tau));
    }
    elements
}

/// The ground dihedral group of order 2n as a closure of {rotation,
/// reflection}, with the group invariants established by construction.
pub fn ground_dihedral_group(n: usize) -> Result<PermutationGroup> {
    if n < 3 {
        return Err(Error::InvalidParams(format!(
            "the dihedral action on residues is only faithful for n >= 3, got n={n}"
        )));
    }
    PermutationGroup::closure(n, &[rotation(n, 1), reflection(n)], DEFAULT_MAX_ORDER)
}

/// True iff p maps every consecutive residue pair (i, i+1) to a consecutive
/// pair, in either direction.
pub fn sends_consecutive_to_consecutive(p: &Permutation) -> bool {
    let n = p.degree();
    if n < 3 {
        return true;
    }
    (0..n).all(|i| {
        let a = p.apply(i);
        let b = p.apply((i + 1) % n);
        b == (a + 1) % n || a == (b + 1) % n
    })
}

/// Direct membership test for the ground dihedral group: p is a rotation or
/// a reflected rotation.
pub fn is_dihedral_on_cycle(p: &Permutation) -> bool {
    let n = p.degree();
    if n < 3 {
        return true;
    }
    let base = p.apply(0);
    let forward = (0..n).all(|i| p.apply(i) == (base + i) % n);
    let backward = (0..n).all(|i| p.apply(i) == (base + n - i) % n);
    forward || backward
}

/// The dihedral action realized on a concrete graph: the induced rotation and
/// reflection plus the full (deduplicated) set of induced vertex
/// permutations. The action is faithful exactly when all 2n are distinct,
/// which holds whenever n >= sk+1; at n = sk the action collapses.
#[derive(Clone, Debug)]
pub struct DihedralCert {
    n: usize,
    rotation: Permutation,
    reflection: Permutation,
    elements: Vec<Permutation>,
    faithful: bool,
}

impl DihedralCert {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rotation(&self) -> &Permutation {
        &self.rotation
    }

    pub fn reflection(&self) -> &Permutation {
        &self.reflection
    }

    /// Sorted, deduplicated induced vertex permutations.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn is_faithful(&self) -> bool {
        self.faithful
    }
}

/// Induces the full dihedral action on a stable Kneser graph's vertices and
/// verifies every induced map against the adjacency. A failure of that check
/// is reported as an internal invariant violation: the dihedral maps preserve
/// circular distance, so they must act as automorphisms.
pub fn induced_dihedral(kg: &StableKneserGraph) -> Result<DihedralCert> {
    let n = kg.params().n();
    let nv = kg.num_vertices();
    let induce = |ground: &Permutation| -> Result<Permutation> {
        let mut images = Vec::with_capacity(nv);
        for v in 0..nv {
            let mapped = kg.vertex_set(v).map_elements(|x| ground.apply(x));
            let index = kg.index_of(&mapped).ok_or_else(|| {
                Error::Internal(format!(
                    "ground map {ground} sends vertex {v} outside the stable-set family"
                ))
            })?;
            images.push(index);
        }
        Permutation::from_images(images)
            .map_err(|e| Error::Internal(format!("induced map is not a bijection: {e}")))
    };

    let tau = reflection(n);
    let mut elements = Vec::with_capacity(2 * n);
    for t in 0..n {
        let rho_t = rotation(n, t);
        elements.push(induce(&rho_t)?);
        elements.push(induce(&rho_t.compose(&tau))?);
    }
    for e in &elements {
        if !kg.graph().is_automorphism(e)? {
            return Err(Error::Internal(format!(
                "induced dihedral map {e} is not an automorphism of {}",
                kg.params()
            )));
        }
    }
    let induced_rotation = elements[2].clone(); // t = 1, rho branch
    let induced_reflection = elements[1].clone(); // t = 0, tau branch
    elements.sort();
    elements.dedup();
    let faithful = elements.len() == 2 * n;

    let conjugated = induced_reflection
        .compose(&induced_rotation)
        .compose(&induced_reflection);
    if conjugated != induced_rotation.inverse() {
        return Err(Error::Internal(
            "reflection ∘ rotation ∘ reflection != rotation^-1 in the induced action".into(),
        ));
    }
    if faithful && induced_rotation.order() != n {
        return Err(Error::Internal(format!(
            "induced rotation has order {} instead of {n}",
            induced_rotation.order()
        )));
    }
    Ok(DihedralCert {
        n,
        rotation: induced_rotation,
        reflection: induced_reflection,
        elements,
        faithful,
    })
}

/// The dihedral certificate for graphs whose vertices are the residues
/// themselves (the auxiliary graphs): the induced maps are the ground maps.
pub fn ground_dihedral_cert(n: usize) -> Result<DihedralCert> {
    if n < 3 {
        return Err(Error::InvalidParams(format!(
            "ground dihedral certificate needs n >= 3, got n={n}"
        )));
    }
    let mut elements = ground_dihedral_elements(n);
    elements.sort();
    elements.dedup();
    let faithful = elements.len() == 2 * n;
    Ok(DihedralCert {
        n,
        rotation: rotation(n, 1),
        reflection: reflection(n),
        elements,
        faithful,
    })
}

/// True iff the enumerated automorphism group is exactly the induced dihedral
/// element set (hence has order 2n and realizes the dihedral group through a
/// faithful action).
pub fn certify_dihedral(aut: &PermutationGroup, cert: &DihedralCert) -> bool {
    cert.is_faithful() && aut.elements() == cert.elements()
}
