//! Signed permutations.
//!
//! The symmetry groups appearing in this library are hyperoctahedral groups
//! `B_d` (all coordinate permutations combined with coordinate sign flips)
//! and their subgroups. Elements act on sequence letters coordinatewise.

use std::fmt;

use itertools::Itertools;

use crate::seq::{Sign, Symbol};

/// An element of the hyperoctahedral group `B_d`.
///
/// Stored source-based: output coordinate `i` reads source coordinate
/// `src[i]` and multiplies by `sign[i]`, i.e. `(g.s)_i = sign[i] * s_{src[i]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    src: Vec<usize>,
    sign: Vec<Sign>,
}

impl SignedPermutation {
    pub fn new(src: Vec<usize>, sign: Vec<Sign>) -> SignedPermutation {
        assert_eq!(src.len(), sign.len());
        let mut seen = vec![false; src.len()];
        for &s in &src {
            assert!(s < src.len() && !seen[s], "src must be a permutation");
            seen[s] = true;
        }
        SignedPermutation { src, sign }
    }

    pub fn identity(d: usize) -> SignedPermutation {
        SignedPermutation { src: (0..d).collect(), sign: vec![Sign::Plus; d] }
    }

    /// The reflection flipping a single coordinate.
    pub fn coordinate_flip(d: usize, i: usize) -> SignedPermutation {
        let mut g = SignedPermutation::identity(d);
        g.sign[i] = Sign::Minus;
        g
    }

    pub fn dim(&self) -> usize {
        self.src.len()
    }

    pub fn is_identity(&self) -> bool {
        self.src.iter().enumerate().all(|(i, &s)| i == s)
            && self.sign.iter().all(|&s| s == Sign::Plus)
    }

    /// Source coordinate and sign factor feeding output coordinate `i`.
    pub fn source_of(&self, i: usize) -> (usize, Sign) {
        (self.src[i], self.sign[i])
    }

    pub fn apply_symbol(&self, s: &Symbol) -> Symbol {
        assert_eq!(s.dim(), self.dim());
        Symbol::new(
            (0..self.dim())
                .map(|i| {
                    let v = s.get(self.src[i]);
                    if self.sign[i] == Sign::Minus {
                        v.flip()
                    } else {
                        v
                    }
                })
                .collect(),
        )
    }

    pub fn apply_word(&self, w: &[Symbol]) -> Vec<Symbol> {
        w.iter().map(|s| self.apply_symbol(s)).collect()
    }

    /// `self` after `other`: `(self * other).s = self.(other.s)`.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        assert_eq!(self.dim(), other.dim());
        let d = self.dim();
        let mut src = vec![0; d];
        let mut sign = vec![Sign::Plus; d];
        for i in 0..d {
            // (self.(other.s))_i = self.sign[i] * (other.s)_{self.src[i]}
            //                    = self.sign[i] * other.sign[self.src[i]] * s_{other.src[self.src[i]]}
            let mid = self.src[i];
            src[i] = other.src[mid];
            sign[i] = if self.sign[i] == other.sign[mid] { Sign::Plus } else { Sign::Minus };
        }
        SignedPermutation { src, sign }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let d = self.dim();
        let mut src = vec![0; d];
        let mut sign = vec![Sign::Plus; d];
        for i in 0..d {
            src[self.src[i]] = i;
            sign[self.src[i]] = self.sign[i];
        }
        SignedPermutation { src, sign }
    }

    /// One-line window notation: entry `i` (1-based output coordinate) is
    /// `+-(source+1)`. The identity on 2 coordinates is `[1, 2]`, the single
    /// sign flip on 1 coordinate is `[-1]`.
    pub fn window_notation(&self) -> Vec<i64> {
        (0..self.dim())
            .map(|i| {
                let v = (self.src[i] + 1) as i64;
                if self.sign[i] == Sign::Minus {
                    -v
                } else {
                    v
                }
            })
            .collect()
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.window_notation().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// All `2^d * d!` elements of `B_d`, identity first, in a fixed order:
/// permutations lexicographically, sign vectors with `+` before `-`.
pub fn hyperoctahedral(d: usize) -> Vec<SignedPermutation> {
    let mut out = Vec::with_capacity((1usize << d) * (1..=d).product::<usize>());
    for perm in (0..d).permutations(d) {
        for mask in 0..(1u32 << d) {
            let sign = (0..d)
                .map(|i| if mask & (1 << i) != 0 { Sign::Minus } else { Sign::Plus })
                .collect();
            out.push(SignedPermutation::new(perm.clone(), sign));
        }
    }
    out
}

/// A subgroup of `B_d`, stored as its sorted element list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    elements: Vec<SignedPermutation>,
}

impl Subgroup {
    /// Closure of the given elements (the identity is always included).
    pub fn generated(d: usize, gens: &[SignedPermutation]) -> Subgroup {
        let mut elements = std::collections::BTreeSet::new();
        elements.insert(SignedPermutation::identity(d));
        let mut frontier: Vec<SignedPermutation> = vec![SignedPermutation::identity(d)];
        while let Some(g) = frontier.pop() {
            for h in gens {
                let next = h.compose(&g);
                if elements.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        Subgroup { elements: elements.into_iter().collect() }
    }

    pub fn from_elements(mut elements: Vec<SignedPermutation>) -> Subgroup {
        elements.sort();
        elements.dedup();
        Subgroup { elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[SignedPermutation] {
        &self.elements
    }

    pub fn contains(&self, g: &SignedPermutation) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    /// A small generating set, chosen greedily in element order.
    pub fn generators(&self) -> Vec<SignedPermutation> {
        let d = match self.elements.first() {
            Some(g) => g.dim(),
            None => return vec![],
        };
        let mut gens: Vec<SignedPermutation> = Vec::new();
        let mut span = Subgroup::generated(d, &gens);
        for g in &self.elements {
            if !span.contains(g) {
                gens.push(g.clone());
                span = Subgroup::generated(d, &gens);
                if span.order() == self.order() {
                    break;
                }
            }
        }
        gens
    }
}
