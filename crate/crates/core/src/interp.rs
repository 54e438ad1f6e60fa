//! Exact interpolation at distinct rational nodes.
//!
//! The interpolant is assembled bottom-up over a subproduct tree: a leaf for
//! node `x_i` carries the constant `w_i v_i` with barycentric weight
//! `w_i = 1 / Π_{j≠i} (x_i - x_j)`, and an internal node combines its
//! children as `r_L M_R + r_R M_L`, where `M` is the product of `(x - x_j)`
//! over a subtree. The tree and the weights depend only on the nodes, so one
//! [`Interpolator`] serves any number of value vectors.

use std::collections::HashSet;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ops::tick;
use crate::poly::UniPoly;
use crate::rat::Rat;

#[derive(Clone, Debug)]
pub struct Interpolator {
    nodes: Vec<Rat>,
    weights: Vec<Rat>,
    /// `levels[0]` holds the leaves `x - x_i`; each later level pairs up the
    /// previous one, carrying an unpaired last entry upward unchanged.
    levels: Vec<Vec<UniPoly>>,
}

impl Interpolator {
    pub fn new(nodes: Vec<Rat>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(nodes.len());
        for x in &nodes {
            if !seen.insert(x) {
                return Err(Error::DuplicateNode(x.clone()));
            }
        }
        let weights = nodes
            .iter()
            .enumerate()
            .map(|(i, xi)| {
                tick(2 * nodes.len());
                let denom = nodes
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .fold(Rat::one(), |acc, (_, xj)| acc * (xi - xj));
                denom.recip()
            })
            .collect();
        let mut levels = vec![nodes.iter().map(UniPoly::linear_root).collect::<Vec<_>>()];
        while levels.last().is_some_and(|l| l.len() > 1) {
            let prev = levels.last().unwrap();
            let next = prev
                .chunks(2)
                .map(|pair| match pair {
                    [a, b] => a * b,
                    [a] => a.clone(),
                    _ => unreachable!(),
                })
                .collect();
            levels.push(next);
        }
        Ok(Interpolator {
            nodes,
            weights,
            levels,
        })
    }

    pub fn nodes(&self) -> &[Rat] {
        &self.nodes
    }

    /// The unique polynomial of degree below `nodes().len()` through the
    /// points `(nodes[i], values[i])`.
    pub fn interpolate(&self, values: &[Rat]) -> Result<UniPoly> {
        if values.len() != self.nodes.len() {
            return Err(Error::LengthMismatch {
                nodes: self.nodes.len(),
                values: values.len(),
            });
        }
        if values.iter().all(Zero::is_zero) {
            return Ok(UniPoly::zero());
        }
        tick(values.len());
        let mut acc: Vec<UniPoly> = values
            .iter()
            .zip(&self.weights)
            .map(|(v, w)| UniPoly::constant(v * w))
            .collect();
        for level in &self.levels[..self.levels.len().saturating_sub(1)] {
            acc = acc
                .chunks(2)
                .zip(level.chunks(2))
                .map(|(r, m)| match (r, m) {
                    ([rl, rr], [ml, mr]) => &(rl * mr) + &(rr * ml),
                    ([r], _) => r.clone(),
                    _ => unreachable!(),
                })
                .collect();
        }
        Ok(acc.pop().unwrap_or_default())
    }
}

/// The unique polynomial of degree below `nodes.len()` through the given
/// points.
pub fn interpolate(nodes: &[Rat], values: &[Rat]) -> Result<UniPoly> {
    if nodes.len() != values.len() {
        return Err(Error::LengthMismatch {
            nodes: nodes.len(),
            values: values.len(),
        });
    }
    Interpolator::new(nodes.to_vec())?.interpolate(values)
}
