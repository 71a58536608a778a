//! The star map: reading a ground-set permutation off a Kneser-graph
//! automorphism through its action on the stars.
//!
//! For s >= 3 and n >= sk+1 every maximum independent set is a star, so an
//! automorphism permutes the stars setwise and therefore induces a
//! permutation of the residues. That correspondence is a group isomorphism
//! onto the automorphism group of the auxiliary graph.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::families::StableKneserGraph;
use crate::indep::StarFamily;
use crate::perm::Permutation;

/// A Kneser-graph automorphism together with the ground permutation it
/// induces on the stars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarMap {
    pub source: Permutation,
    pub ground: Permutation,
}

/// Computes the setwise image of every star under `source` and identifies it
/// as a star. Fails with a witness if some image is not a star, which would
/// contradict the star structure of maximum independent sets; valid inputs
/// never trigger that error.
pub fn star_map(
    kg: &StableKneserGraph,
    stars: &StarFamily,
    source: &Permutation,
) -> Result<StarMap> {
    let n = kg.params().n();
    debug_assert_eq!(stars.len(), n);
    let nv = kg.num_vertices();
    if source.degree() != nv {
        return Err(Error::DegreeMismatch {
            expected: nv,
            actual: source.degree(),
        });
    }
    let mut images = Vec::with_capacity(n);
    for i in 0..n {
        let mut image = BitSet::new(nv);
        for v in stars.star(i).iter() {
            image.insert(source.apply(v));
        }
        let j =
            (0..n)
                .find(|&j| stars.star(j) == &image)
                .ok_or_else(|| Error::StarImageNotStar {
                    star: i,
                    detail: format!(
                        "image {:?} under {} matches no star of {}",
                        image,
                        source,
                        kg.params()
                    ),
                })?;
        images.push(j);
    }
    let ground = Permutation::from_images(images).map_err(|e| Error::StarImageNotStar {
        star: 0,
        detail: format!("star images do not form a bijection: {e}"),
    })?;
    Ok(StarMap {
        source: source.clone(),
        ground,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::{automorphism_group, DEFAULT_NODE_BUDGET};
    use crate::dihedral::{induced_dihedral, rotation};
    use crate::families::stable_kneser_graph;
    use crate::indep::build_stars;
    use crate::params::Params;

    #[test]
    fn identity_maps_to_identity() {
        let kg = stable_kneser_graph(&Params::new(7, 2, 3).unwrap());
        let stars = build_stars(&kg).unwrap();
        let id = Permutation::identity(kg.num_vertices());
        let map = star_map(&kg, &stars, &id).unwrap();
        assert!(map.ground.is_identity());
    }

    #[test]
    fn induced_rotation_maps_to_ground_rotation() {
        let kg = stable_kneser_graph(&Params::new(7, 2, 3).unwrap());
        let stars = build_stars(&kg).unwrap();
        let cert = induced_dihedral(&kg).unwrap();
        let map = star_map(&kg, &stars, cert.rotation()).unwrap();
        assert_eq!(map.ground, rotation(7, 1));
    }

    #[test]
    fn star_map_is_an_injective_homomorphism_on_aut() {
        let kg = stable_kneser_graph(&Params::new(7, 2, 3).unwrap());
        let stars = build_stars(&kg).unwrap();
        let aut = automorphism_group(kg.graph(), DEFAULT_NODE_BUDGET).unwrap();
        let mut images = Vec::new();
        for alpha in aut.elements() {
            images.push(star_map(&kg, &stars, alpha).unwrap().ground);
        }
        // Injective.
        let mut sorted = images.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), aut.order());
        // Homomorphism over the full multiplication table.
        for (a, ga) in aut.elements().iter().zip(&images) {
            for (b, gb) in aut.elements().iter().zip(&images) {
                let composed = star_map(&kg, &stars, &a.compose(b)).unwrap().ground;
                assert_eq!(composed, ga.compose(gb));
            }
        }
    }

    #[test]
    fn non_automorphism_input_may_fail_with_witness() {
        // A permutation that scrambles one star without permuting the family.
        let kg = stable_kneser_graph(&Params::new(7, 2, 3).unwrap());
        let stars = build_stars(&kg).unwrap();
        // Swap vertices 0 and 1 = {0,3} and {0,4}; both lie in star 0, so
        // star 0 maps to itself, but star 3 = {{0,3},{3,6}} maps to
        // {{0,4},{3,6}} which is no star.
        let mut images: Vec<usize> = (0..7).collect();
        images.swap(0, 1);
        let p = Permutation::from_images(images).unwrap();
        let err = star_map(&kg, &stars, &p).unwrap_err();
        assert!(matches!(err, Error::StarImageNotStar { star: 3, .. }));
    }
}
