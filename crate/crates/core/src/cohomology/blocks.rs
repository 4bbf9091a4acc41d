use crate::exact::{int, RationalMatrix};

use super::{CohomologyError, CohomologySpace};

/// U₁, U₂, U₃ as 0-based positions in the basis e₁..e₁₈.
pub const PLAT_BLOCKS: [[usize; 6]; 3] = [
    [0, 2, 5, 9, 12, 15],
    [3, 6, 8, 10, 13, 16],
    [1, 4, 7, 11, 14, 17],
];

/// How a matrix moves a family of coordinate blocks: block `i` goes to `permutation[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockAction {
    pub permutation: Vec<usize>,
}

impl BlockAction {
    pub fn is_identity(&self) -> bool {
        self.permutation.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Length of each cycle, in order of the least element.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.permutation.len()];
        let mut out = Vec::new();
        for s in 0..self.permutation.len() {
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.permutation[x];
                len += 1;
            }
            if len > 0 {
                out.push(len);
            }
        }
        out
    }
}

/// Groups basis positions by the single Pauli axis their cocycles take values in.
pub fn axis_blocks(space: &CohomologySpace) -> Result<Vec<Vec<usize>>, CohomologyError> {
    let mut blocks = vec![Vec::new(); 3];
    for (i, u) in space.basis().iter().enumerate() {
        match CohomologySpace::axis_support(u)[..] {
            [k] => blocks[k].push(i),
            _ => return Err(CohomologyError::NotPermuted),
        }
    }
    Ok(blocks)
}

fn rows_hit(m: &RationalMatrix, cols: &[usize]) -> Vec<usize> {
    (0..m.rows())
        .filter(|&r| cols.iter().any(|&c| *m.get(r, c) != int(0)))
        .collect()
}

/// Checks that `m` permutes `blocks` and reports the permutation.
pub fn block_structure<B: AsRef<[usize]>>(
    m: &RationalMatrix,
    blocks: &[B],
) -> Result<BlockAction, CohomologyError> {
    let owner = |r: usize| blocks.iter().position(|b| b.as_ref().contains(&r));
    let mut permutation = Vec::with_capacity(blocks.len());
    for b in blocks {
        let targets: Vec<Option<usize>> = rows_hit(m, b.as_ref()).into_iter().map(owner).collect();
        match targets.first() {
            Some(&Some(t)) if targets.iter().all(|&x| x == Some(t)) => permutation.push(t),
            _ => return Err(CohomologyError::NotPermuted),
        }
    }
    let mut sorted = permutation.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != blocks.len() {
        return Err(CohomologyError::NotPermuted);
    }
    Ok(BlockAction { permutation })
}

/// Restriction of `m` to an invariant coordinate block.
pub fn restrict_to_block(
    m: &RationalMatrix,
    block: &[usize],
) -> Result<RationalMatrix, CohomologyError> {
    if rows_hit(m, block).iter().any(|r| !block.contains(r)) {
        return Err(CohomologyError::NotInvariant(block.to_vec()));
    }
    Ok(m.select(block, block))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_fixes_blocks() {
        let a = block_structure(&RationalMatrix::identity(18), &PLAT_BLOCKS).unwrap();
        assert!(a.is_identity());
        assert_eq!(a.cycle_lengths(), [1, 1, 1]);
    }

    #[test]
    fn mixing_matrix_rejected() {
        let m = RationalMatrix::from_i64_rows(&[&[1, 1], &[0, 1]]);
        assert_eq!(
            block_structure(&m, &[[0], [1]]),
            Err(CohomologyError::NotPermuted)
        );
        assert!(restrict_to_block(&m, &[0]).is_ok());
        assert!(restrict_to_block(&m, &[1]).is_err());
    }
}
