//! Brute-force oracles for the acceptance suite. Deliberately naive and
//! independent of the library's search implementations: permutation filters,
//! subset scans and subset dynamic programming only.
#![allow(dead_code)]

use skl::bitset::BitSet;
use skl::graph::Graph;
use skl::perm::Permutation;

/// All automorphisms by filtering every permutation. Usable up to ~8 vertices.
pub fn brute_force_automorphisms(g: &Graph) -> Vec<Permutation> {
    let n = g.num_vertices();
    assert!(n <= 8, "permutation filter oracle capped at 8 vertices");
    let mut found = Vec::new();
    let mut images: Vec<usize> = Vec::new();
    let mut used = vec![false; n];
    permute(g, &mut images, &mut used, &mut found);
    found.sort();
    found
}

fn permute(g: &Graph, images: &mut Vec<usize>, used: &mut Vec<bool>, found: &mut Vec<Permutation>) {
    let n = g.num_vertices();
    if images.len() == n {
        let p = Permutation::from_images(images.clone()).unwrap();
        if g.is_automorphism(&p).unwrap() {
            found.push(p);
        }
        return;
    }
    for w in 0..n {
        if !used[w] {
            used[w] = true;
            images.push(w);
            permute(g, images, used, found);
            images.pop();
            used[w] = false;
        }
    }
}

/// Independence number and all maximum independent sets by scanning every
/// vertex subset. Usable up to 20 vertices.
pub fn brute_force_maximum_independent_sets(g: &Graph) -> (usize, Vec<BitSet>) {
    let n = g.num_vertices();
    assert!(n <= 20, "subset scan oracle capped at 20 vertices");
    let rows: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, u| acc | 1 << u))
        .collect();
    let mut alpha = 0usize;
    let mut best: Vec<u32> = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let mut rest = mask;
        let mut independent = true;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if rows[v] & mask != 0 {
                independent = false;
                break;
            }
        }
        if !independent {
            continue;
        }
        let size = mask.count_ones() as usize;
        match size.cmp(&alpha) {
            std::cmp::Ordering::Greater => {
                alpha = size;
                best = vec![mask];
            }
            std::cmp::Ordering::Equal => best.push(mask),
            std::cmp::Ordering::Less => {}
        }
    }
    let mut sets: Vec<BitSet> = best
        .into_iter()
        .map(|mask| {
            let indices: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            BitSet::from_indices(n, &indices)
        })
        .collect();
    sets.sort();
    (alpha, sets)
}

/// Chromatic number as the minimum number of independent sets covering the
/// vertices, by dynamic programming over subsets. Usable up to 12 vertices.
pub fn brute_force_chromatic_number(g: &Graph) -> usize {
    let n = g.num_vertices();
    assert!(n <= 12, "subset DP oracle capped at 12 vertices");
    if n == 0 {
        return 0;
    }
    let rows: Vec<usize> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0usize, |acc, u| acc | 1 << u))
        .collect();
    let full = (1usize << n) - 1;
    let mut independent = vec![false; full + 1];
    independent[0] = true;
    for mask in 1..=full {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        independent[mask] = independent[rest] && rows[v] & mask == 0;
    }
    let mut colors_needed = vec![usize::MAX; full + 1];
    colors_needed[0] = 0;
    for mask in 1..=full {
        let v = mask.trailing_zeros() as usize;
        let without_v = mask & !(1 << v);
        let mut sub = without_v;
        loop {
            let class = sub | 1 << v;
            if independent[class] && colors_needed[mask & !class] != usize::MAX {
                colors_needed[mask] = colors_needed[mask].min(colors_needed[mask & !class] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & without_v;
        }
    }
    colors_needed[full]
}

/// s-stable k-subsets by filtering every k-subset bitmask through the
/// pairwise circular-distance definition. Usable up to n = 16 or so.
pub fn brute_force_stable_subsets(n: usize, k: usize, s: usize) -> Vec<Vec<usize>> {
    assert!(n <= 16);
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let stable = members.iter().enumerate().all(|(i, &x)| {
            members[i + 1..].iter().all(|&y| {
                let d = y - x;
                d >= s && d <= n - s
            })
        });
        if stable {
            out.push(members);
        }
    }
    out.sort();
    out
}
