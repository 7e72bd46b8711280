//! Finite chains given by explicit operation tables.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laws::{check_laws, AxiomReport, Structure};

/// A finite chain whose elements are `0..size` in ascending order.
/// Index `size - 1` is the top; meet and join are min and max.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawChain {
    pub size: usize,
    pub mul: Vec<Vec<usize>>,
    pub imp: Vec<Vec<usize>>,
    #[serde(default)]
    pub bottom_designated: bool,
}

impl RawChain {
    pub fn from_json(text: &str) -> Result<Self> {
        let t: RawChain = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        t.check_shape()?;
        Ok(t)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("raw chains serialize")
    }

    pub fn top(&self) -> usize {
        self.size - 1
    }

    /// Dimensions and closure of both tables.
    pub fn check_shape(&self) -> Result<()> {
        if self.size == 0 {
            return Err(Error::Malformed("size must be at least 1".into()));
        }
        for (name, t) in [("mul", &self.mul), ("imp", &self.imp)] {
            if t.len() != self.size || t.iter().any(|row| row.len() != self.size) {
                return Err(Error::Malformed(format!("{name} is not {0}x{0}", self.size)));
            }
            if t.iter().flatten().any(|&v| v >= self.size) {
                return Err(Error::Malformed(format!("{name} has an entry outside 0..{}", self.size)));
            }
        }
        Ok(())
    }

    /// Restriction of the tables to a subset of elements, which must be
    /// closed under both operations.
    pub fn restrict(&self, elems: &[usize]) -> Result<RawChain> {
        let mut sorted = elems.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let pos = |v: usize| sorted.binary_search(&v).ok();
        let n = sorted.len();
        let mut mul = vec![vec![0; n]; n];
        let mut imp = vec![vec![0; n]; n];
        for (i, &a) in sorted.iter().enumerate() {
            for (j, &b) in sorted.iter().enumerate() {
                mul[i][j] = pos(self.mul[a][b])
                    .ok_or_else(|| Error::Invalid("subset not closed under multiplication".into()))?;
                imp[i][j] =
                    pos(self.imp[a][b]).ok_or_else(|| Error::Invalid("subset not closed under implication".into()))?;
            }
        }
        Ok(RawChain { size: n, mul, imp, bottom_designated: self.bottom_designated })
    }
}

struct Tables<'a>(&'a RawChain);

impl Structure for Tables<'_> {
    type E = usize;

    fn mul(&self, x: &usize, y: &usize) -> usize {
        self.0.mul[*x][*y]
    }

    fn imp(&self, x: &usize, y: &usize) -> usize {
        self.0.imp[*x][*y]
    }

    fn le(&self, x: &usize, y: &usize) -> bool {
        x <= y
    }

    fn top(&self) -> usize {
        self.0.size - 1
    }
}

/// Exhaustive law check on all pairs and triples of a table.
pub fn check_axioms(t: &RawChain) -> Result<AxiomReport> {
    t.check_shape()?;
    let elems: Vec<usize> = (0..t.size).collect();
    Ok(check_laws(&Tables(t), &elems, t.bottom_designated))
}
