//! Combinatorial lines of the cube `[n]^N` and the exhaustive line scan.
//!
//! A line is a template over the alphabet plus a wildcard on a nonempty
//! moving set; instantiating the wildcard with `1..=n` yields the `n`
//! points. There are `(n+1)^N - n^N` candidate lines; the scan visits them
//! in template order (digits before the wildcard) and returns the first
//! monochromatic one.

use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Letters are `1..=n`.
pub type Word = Vec<u8>;

/// Pure word-to-colour rule behind a cube.
pub type CubeRule = Arc<dyn Fn(&Word) -> Result<u32> + Send + Sync>;

/// A `k`-colouring of the cube `[n]^N`, evaluated lazily with memoisation
/// (pullbacks touch few of the `n^N` points).
pub struct HJCube {
    pub n: u8,
    pub big_n: u32,
    rule: CubeRule,
    memo: RefCell<HashMap<Word, u32>>,
}

impl HJCube {
    pub fn new(n: u8, big_n: u32, rule: CubeRule) -> Result<Self> {
        if n < 1 || big_n < 1 {
            return Err(Error::InvalidParameter(
                "cube needs alphabet size >= 1 and dimension >= 1".into(),
            ));
        }
        Ok(HJCube {
            n,
            big_n,
            rule,
            memo: RefCell::new(HashMap::new()),
        })
    }

    /// Cube from an explicit colour table in row-major word order.
    pub fn from_table(n: u8, big_n: u32, table: Vec<u32>) -> Result<Self> {
        let expected = (n as u64).pow(big_n);
        if table.len() as u64 != expected {
            return Err(Error::InvalidParameter(format!(
                "table has {} entries, cube needs {expected}",
                table.len()
            )));
        }
        let nn = n;
        HJCube::new(
            n,
            big_n,
            Arc::new(move |w: &Word| {
                let mut idx = 0u64;
                for &letter in w {
                    idx = idx * nn as u64 + (letter - 1) as u64;
                }
                Ok(table[idx as usize])
            }),
        )
    }

    pub fn colour(&self, w: &Word) -> Result<u32> {
        if let Some(c) = self.memo.borrow().get(w) {
            return Ok(*c);
        }
        let c = (self.rule)(w)?;
        self.memo.borrow_mut().insert(w.clone(), c);
        Ok(c)
    }

    pub fn memo_len(&self) -> usize {
        self.memo.borrow().len()
    }
}

/// A combinatorial line: fixed letters on `fixed` positions, wildcard
/// elsewhere; `moving` is nonempty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinatorialLine {
    /// Template with `None` on the moving coordinates.
    pub template: Vec<Option<u8>>,
}

impl CombinatorialLine {
    pub fn moving_set(&self) -> Vec<usize> {
        self.template
            .iter()
            .enumerate()
            .filter(|(_, t)| t.is_none())
            .map(|(i, _)| i)
            .collect()
    }

    /// The `n` points of the line.
    pub fn points(&self, n: u8) -> Vec<Word> {
        (1..=n)
            .map(|j| {
                self.template
                    .iter()
                    .map(|t| t.unwrap_or(j))
                    .collect::<Word>()
            })
            .collect()
    }
}

/// Exhaustive scan over all `(n+1)^N - n^N` candidate lines, in template
/// order with the wildcard before the digits `1..=n`, returning the first
/// monochromatic line. Absence is meaningful only below the Hales-Jewett
/// threshold for the cube's parameters.
pub fn hj_find_line(cube: &HJCube) -> Result<Option<CombinatorialLine>> {
    let n = cube.n;
    let big_n = cube.big_n as usize;
    // Symbol 0 is the wildcard; symbols 1..=n are the fixed letters.
    let mut symbols = vec![0u8; big_n];
    loop {
        if symbols.contains(&0) {
            let line = CombinatorialLine {
                template: symbols
                    .iter()
                    .map(|&s| if s == 0 { None } else { Some(s) })
                    .collect(),
            };
            let mut colour: Option<u32> = None;
            let mut mono = true;
            for p in line.points(n) {
                let c = cube.colour(&p)?;
                match colour {
                    None => colour = Some(c),
                    Some(c0) if c0 != c => {
                        mono = false;
                        break;
                    }
                    _ => {}
                }
            }
            if mono {
                return Ok(Some(line));
            }
        }
        // Increment in row-major order, last coordinate fastest.
        let mut axis = big_n;
        loop {
            if axis == 0 {
                return Ok(None);
            }
            axis -= 1;
            symbols[axis] += 1;
            if symbols[axis] <= n {
                break;
            }
            symbols[axis] = 0;
            if axis == 0 {
                return Ok(None);
            }
        }
    }
}

/// Number of candidate lines for the cube's parameters.
pub fn line_count(n: u8, big_n: u32) -> u64 {
    (n as u64 + 1).pow(big_n) - (n as u64).pow(big_n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_lines_in_2_by_2() {
        assert_eq!(line_count(2, 2), 5);
        assert_eq!(line_count(3, 4), 175);
    }

    #[test]
    fn finds_the_fixed_second_coordinate_line() {
        // Colour 0 at (1,1) and (2,1); colour 1 elsewhere. The moving-first
        // line with second coordinate fixed to 1 is monochromatic.
        let cube = HJCube::new(
            2,
            2,
            Arc::new(|w: &Word| Ok(if w[1] == 1 { 0 } else { 1 })),
        )
        .unwrap();
        let line = hj_find_line(&cube).unwrap().expect("line exists");
        assert_eq!(line.template, vec![None, Some(1)]);
        assert_eq!(line.points(2), vec![vec![1, 1], vec![2, 1]]);
    }

    #[test]
    fn every_two_colouring_of_2_2_has_a_line() {
        // Brute force over all 16 colourings of the 4-point cube.
        for mask in 0u32..16 {
            let table: Vec<u32> = (0..4).map(|i| (mask >> i) & 1).collect();
            let cube = HJCube::from_table(2, 2, table).unwrap();
            assert!(hj_find_line(&cube).unwrap().is_some(), "mask {mask}");
        }
    }

    #[test]
    fn constant_cube_yields_the_diagonal() {
        let cube = HJCube::new(3, 2, Arc::new(|_: &Word| Ok(0))).unwrap();
        let line = hj_find_line(&cube).unwrap().expect("line");
        // First in template order: the all-moving diagonal.
        assert_eq!(line.template, vec![None, None]);
        assert_eq!(line.moving_set(), vec![0, 1]);
    }

    #[test]
    fn no_line_below_threshold_is_reported_as_none() {
        // n = 3, N = 1: colour each singleton differently; the only lines
        // are the whole diagonal, which is rainbow.
        let cube = HJCube::new(3, 1, Arc::new(|w: &Word| Ok(w[0] as u32))).unwrap();
        assert!(hj_find_line(&cube).unwrap().is_none());
    }

    #[test]
    fn memoisation_counts_points_once() {
        let cube = HJCube::new(2, 3, Arc::new(|_: &Word| Ok(0))).unwrap();
        let _ = hj_find_line(&cube).unwrap();
        assert!(cube.memo_len() <= 8);
    }
}
