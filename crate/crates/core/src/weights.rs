use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Vertex;

/// Integer weight per vertex. Classification works with {0,1} weights only.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightFn {
    weights: Vec<i64>,
}

impl WeightFn {
    /// Arbitrary integer weights.
    pub fn integer(weights: Vec<i64>) -> Self {
        WeightFn { weights }
    }

    /// Weights restricted to {0,1}.
    pub fn binary(weights: Vec<i64>) -> Result<Self> {
        if let Some((vertex, &weight)) = weights.iter().enumerate().find(|(_, &w)| w != 0 && w != 1) {
            return Err(Error::NonBinaryWeight { vertex, weight });
        }
        Ok(WeightFn { weights })
    }

    pub fn zeros(n: usize) -> Self {
        WeightFn { weights: alloc::vec![0; n] }
    }

    /// Vertex `v` gets bit `v` of `mask`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        WeightFn { weights: (0..n).map(|v| ((mask >> v) & 1) as i64).collect() }
    }

    /// Parses a bitstring `b0b1...`, one character per vertex.
    pub fn from_bitstring(bits: &str) -> Result<Self> {
        let weights = bits
            .chars()
            .enumerate()
            .map(|(vertex, c)| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::NonBinaryWeight { vertex, weight: c.to_digit(10).map_or(-1, i64::from) }),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(WeightFn { weights })
    }

    /// Rejects a length mismatch with `g`.
    pub fn check_against(&self, g: &Graph) -> Result<()> {
        if self.weights.len() == g.n() {
            Ok(())
        } else {
            Err(Error::WeightLength { expected: g.n(), got: self.weights.len() })
        }
    }

    #[inline]
    pub fn get(&self, v: Vertex) -> i64 {
        self.weights[v]
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.weights
    }

    pub fn total(&self) -> i64 {
        self.weights.iter().sum()
    }

    pub fn is_binary(&self) -> bool {
        self.weights.iter().all(|&w| w == 0 || w == 1)
    }

    /// `"b0b1...b_{n-1}"`; `None` unless every weight is 0 or 1.
    pub fn to_bitstring(&self) -> Option<String> {
        self.is_binary()
            .then(|| self.weights.iter().map(|&w| if w == 1 { '1' } else { '0' }).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mask_and_bitstring_agree() {
        let w = WeightFn::from_mask(4, 0b0110);
        assert_eq!(w.as_slice(), [0, 1, 1, 0]);
        assert_eq!(w.to_bitstring().as_deref(), Some("0110"));
        assert_eq!(WeightFn::from_bitstring("0110").unwrap(), w);
        assert_eq!(w.total(), 2);
    }

    #[test]
    fn binary_validation() {
        assert_eq!(WeightFn::binary(alloc::vec![0, 2, 0]), Err(Error::NonBinaryWeight { vertex: 1, weight: 2 }));
        assert!(WeightFn::from_bitstring("01x").is_err());
        let w = WeightFn::integer(alloc::vec![3, -1]);
        assert!(!w.is_binary());
        assert_eq!(w.to_bitstring(), None);
    }
}
