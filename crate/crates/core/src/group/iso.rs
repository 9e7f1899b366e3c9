//! Isomorphism testing by invariant screening plus backtracking over
//! generator images.

use super::{Caps, Group};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsomorphismCapExceeded {
    pub order: usize,
    pub cap: usize,
}

impl fmt::Display for IsomorphismCapExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "isomorphism test refused: order {} exceeds cap {}",
            self.order, self.cap
        )
    }
}

impl std::error::Error for IsomorphismCapExceeded {}

fn order_histogram(g: &Group) -> BTreeMap<u64, usize> {
    let mut h = BTreeMap::new();
    for &o in g.element_orders() {
        *h.entry(o).or_insert(0) += 1;
    }
    h
}

/// Decide `G ≅ H`.
///
/// Groups of different order are never isomorphic (and not an error).
/// Cheap invariants (order histogram, abelianness, center size, conjugacy
/// class sizes) reject most pairs; survivors go to a backtracking search
/// mapping a generating set of `G` onto order-compatible tuples of `H`,
/// verified as a bijective homomorphism over the full table.
pub fn is_isomorphic(g: &Group, h: &Group, caps: &Caps) -> Result<bool, IsomorphismCapExceeded> {
    if g.order() != h.order() {
        return Ok(false);
    }
    let n = g.order();
    if n > caps.isomorphism {
        return Err(IsomorphismCapExceeded {
            order: n,
            cap: caps.isomorphism,
        });
    }
    if order_histogram(g) != order_histogram(h) {
        return Ok(false);
    }
    if g.is_abelian() != h.is_abelian() {
        return Ok(false);
    }
    if g.center().len() != h.center().len() {
        return Ok(false);
    }
    if g.conjugacy_class_sizes() != h.conjugacy_class_sizes() {
        return Ok(false);
    }

    let gens = g.generators().to_vec();
    let mut images = Vec::with_capacity(gens.len());
    Ok(assign(g, h, &gens, &mut images))
}

fn assign(g: &Group, h: &Group, gens: &[usize], images: &mut Vec<usize>) -> bool {
    if images.len() == gens.len() {
        return check_full_map(g, h, gens, images);
    }
    let want = g.element_order(gens[images.len()]);
    for cand in 0..h.order() {
        if h.element_order(cand) != want {
            continue;
        }
        images.push(cand);
        if partial_map(g, h, gens, images).is_some() && assign(g, h, gens, images) {
            return true;
        }
        images.pop();
    }
    false
}

/// Extend `gens[i] → images[i]` to the subgroup generated so far, watching
/// for conflicts. Returns the partial map, or `None` on contradiction.
fn partial_map(
    g: &Group,
    h: &Group,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<Option<usize>>> {
    let mut map: Vec<Option<usize>> = vec![None; g.order()];
    map[0] = Some(0);
    let mut frontier = vec![0usize];
    let pairs: Vec<(usize, usize)> = gens.iter().copied().zip(images.iter().copied()).collect();
    let mut i = 0;
    while i < frontier.len() {
        let a = frontier[i];
        let fa = map[a].expect("frontier elements are mapped");
        for &(gen, img) in &pairs {
            let b = g.mul(a, gen);
            let fb = h.mul(fa, img);
            match map[b] {
                None => {
                    map[b] = Some(fb);
                    frontier.push(b);
                }
                Some(existing) if existing != fb => return None,
                _ => {}
            }
        }
        i += 1;
    }
    Some(map)
}

fn check_full_map(g: &Group, h: &Group, gens: &[usize], images: &[usize]) -> bool {
    let Some(map) = partial_map(g, h, gens, images) else {
        return false;
    };
    // The greedy generators span G, so the map must be total and bijective.
    let mut image: Vec<usize> = Vec::with_capacity(g.order());
    for m in &map {
        match m {
            Some(v) => image.push(*v),
            None => return false,
        }
    }
    let mut seen = vec![false; h.order()];
    for &v in &image {
        if seen[v] {
            return false;
        }
        seen[v] = true;
    }
    // Full homomorphism check over the table.
    for a in 0..g.order() {
        for b in 0..g.order() {
            if image[g.mul(a, b)] != h.mul(image[a], image[b]) {
                return false;
            }
        }
    }
    true
}
