//! Exact symmetric-group machinery: enumeration, composition, signatures,
//! and disjoint-cycle decomposition.
//!
//! Points are `0..n`. A [`Permutation`] maps point `i` to `mapping[i]`.
//! Full enumeration of S_n is capped at `n = `[`MAX_ENUMERATION_DEGREE`]
//! because every probability sum built on top of it is O(n!) or worse.

use crate::error::{Error, Result};

/// Largest degree for which [`enumerate_permutations`] will run.
pub const MAX_ENUMERATION_DEGREE: usize = 10;

/// An element of S_n, stored as the image of each point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    mapping: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line mapping (`i -> mapping[i]`).
    pub fn from_mapping(mapping: Vec<usize>) -> Result<Self> {
        let n = mapping.len();
        let mut seen = vec![false; n];
        for &image in &mapping {
            if image >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {image} out of range for degree {n}"
                )));
            }
            if seen[image] {
                return Err(Error::InvalidPermutation(format!("image {image} repeated")));
            }
            seen[image] = true;
        }
        Ok(Self { mapping })
    }

    /// The identity on `0..n`.
    pub fn identity(n: usize) -> Self {
        Self { mapping: (0..n).collect() }
    }

    /// Builds the permutation with the given disjoint cycles on `0..n`;
    /// points not mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut mapping: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (idx, &point) in cycle.iter().enumerate() {
                if point >= n {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle point {point} out of range for degree {n}"
                    )));
                }
                if touched[point] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {point} appears in more than one cycle"
                    )));
                }
                touched[point] = true;
                mapping[point] = cycle[(idx + 1) % cycle.len()];
            }
        }
        Ok(Self { mapping })
    }

    /// Degree n of the symmetric group this element belongs to.
    pub fn degree(&self) -> usize {
        self.mapping.len()
    }

    /// Image of a single point.
    pub fn apply(&self, point: usize) -> usize {
        self.mapping[point]
    }

    /// One-line mapping as a slice.
    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn is_identity(&self) -> bool {
        self.mapping.iter().enumerate().all(|(i, &m)| i == m)
    }

    /// Group inverse.
    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.mapping.len()];
        for (i, &m) in self.mapping.iter().enumerate() {
            inv[m] = i;
        }
        Self { mapping: inv }
    }

    /// Composition `self ∘ other`: applies `other` first, then `self`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DimensionMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        let mapping = (0..self.degree()).map(|i| self.apply(other.apply(i))).collect();
        Ok(Self { mapping })
    }

    /// Canonical disjoint-cycle decomposition. Each cycle starts at its
    /// smallest element and cycles are sorted by smallest element; fixed
    /// points are kept as length-1 cycles.
    pub fn cycle_decompose(&self) -> CycleDecomposition {
        let n = self.degree();
        let mut visited = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut cycle = vec![start];
            visited[start] = true;
            let mut point = self.apply(start);
            while point != start {
                visited[point] = true;
                cycle.push(point);
                point = self.apply(point);
            }
            cycles.push(cycle);
        }
        CycleDecomposition { degree: n, cycles }
    }

    /// Signature: product over cycles of (-1)^(len-1).
    pub fn signature(&self) -> i32 {
        let decomposition = self.cycle_decompose();
        let transpositions: usize =
            decomposition.cycles.iter().map(|c| c.len() - 1).sum();
        if transpositions % 2 == 0 { 1 } else { -1 }
    }
}

/// Disjoint-cycle factorization of a permutation, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    degree: usize,
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// Rebuilds the permutation the decomposition came from.
    pub fn reconstruct(&self) -> Permutation {
        Permutation::from_cycles(self.degree, &self.cycles)
            .expect("disjoint cycles by construction")
    }
}

/// Iterator over S_n in lexicographic order of the one-line mapping.
pub struct Permutations {
    state: Vec<usize>,
    done: bool,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let current = Permutation { mapping: self.state.clone() };
        self.done = !next_lexicographic(&mut self.state);
        Some(current)
    }
}

fn next_lexicographic(state: &mut [usize]) -> bool {
    let n = state.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && state[i - 1] >= state[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while state[j] <= state[i - 1] {
        j -= 1;
    }
    state.swap(i - 1, j);
    state[i..].reverse();
    true
}

/// All n! permutations of `0..n`, lexicographically ordered.
pub fn enumerate_permutations(n: usize) -> Result<Permutations> {
    if n == 0 || n > MAX_ENUMERATION_DEGREE {
        return Err(Error::Size {
            got: n,
            reason: format!("enumeration supports 1..={MAX_ENUMERATION_DEGREE}"),
        });
    }
    Ok(Permutations { state: (0..n).collect(), done: false })
}

/// Number of distinct r-cycles in S_n: n! / (r (n-r)!).
pub fn count_r_cycles(n: usize, r: usize) -> Result<u64> {
    if r < 2 || r > n {
        return Err(Error::Size {
            got: r,
            reason: format!("cycle length must satisfy 2 <= r <= n = {n}"),
        });
    }
    // n!/(n-r)! = n (n-1) ... (n-r+1), then divide by r.
    let falling: u64 = ((n - r + 1)..=n).map(|k| k as u64).product();
    Ok(falling / r as u64)
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}
