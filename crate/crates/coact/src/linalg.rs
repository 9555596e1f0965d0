//! Dense linear algebra over F2 on bit-packed rows.

/// A vector over F2, packed 64 coordinates per limb.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitVec {
    pub limbs: Vec<u64>,
}

impl BitVec {
    pub fn zeros(n: usize) -> Self {
        BitVec {
            limbs: vec![0; n.div_ceil(64)],
        }
    }

    pub fn set(&mut self, i: usize) {
        self.limbs[i / 64] ^= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        (self.limbs[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        for (a, b) in self.limbs.iter_mut().zip(&other.limbs) {
            *a ^= *b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.iter().all(|&l| l == 0)
    }

    pub fn leading(&self) -> Option<usize> {
        for (j, &l) in self.limbs.iter().enumerate() {
            if l != 0 {
                return Some(j * 64 + l.trailing_zeros() as usize);
            }
        }
        None
    }
}

/// A row-echelon basis for a subspace of F2^n, supporting membership tests
/// and incremental extension.
#[derive(Clone, Debug)]
pub struct RowSpace {
    /// Rows in echelon form, keyed by pivot column.
    rows: Vec<(usize, BitVec)>,
}

impl RowSpace {
    pub fn new(_ncols: usize) -> Self {
        RowSpace { rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current basis, in place.
    pub fn reduce(&self, v: &mut BitVec) {
        for (pivot, row) in &self.rows {
            if v.get(*pivot) {
                v.xor_assign(row);
            }
        }
    }

    /// Inserts `v`; returns true when it enlarged the space.
    pub fn insert(&mut self, v: BitVec) -> bool {
        let mut w = v;
        self.reduce(&mut w);
        match w.leading() {
            None => false,
            Some(pivot) => {
                // keep echelon form: eliminate the new pivot from older rows
                for (_, row) in self.rows.iter_mut() {
                    if row.get(pivot) {
                        row.xor_assign(&w);
                    }
                }
                self.rows.push((pivot, w));
                self.rows.sort_by_key(|(p, _)| *p);
                true
            }
        }
    }

    pub fn basis(&self) -> impl Iterator<Item = &BitVec> {
        self.rows.iter().map(|(_, r)| r)
    }
}

/// Solves `sum_i x_i rows[i] = target` over F2.
///
/// Returns the selected indices of a solution, or `None` when the target is
/// not in the span.
pub fn solve(rows: &[BitVec], ncols: usize, target: &BitVec) -> Option<Vec<usize>> {
    // Gaussian elimination with bookkeeping of row combinations.
    let mut work: Vec<(BitVec, BitVec)> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut tag = BitVec::zeros(rows.len());
            tag.set(i);
            (r.clone(), tag)
        })
        .collect();
    let mut echelon: Vec<(usize, usize)> = Vec::new(); // (pivot, index into work)
    let _ = ncols;
    for i in 0..work.len() {
        loop {
            let lead = work[i].0.leading();
            match lead {
                None => break,
                Some(pivot) => {
                    if let Some(&(_, j)) = echelon.iter().find(|(p, _)| *p == pivot) {
                        let (rj, tj) = work[j].clone();
                        work[i].0.xor_assign(&rj);
                        work[i].1.xor_assign(&tj);
                    } else {
                        echelon.push((pivot, i));
                        break;
                    }
                }
            }
        }
    }
    let mut t = target.clone();
    let mut combo = BitVec::zeros(rows.len());
    loop {
        match t.leading() {
            None => break,
            Some(pivot) => {
                let &(_, j) = echelon.iter().find(|(p, _)| *p == pivot)?;
                let (rj, tj) = work[j].clone();
                t.xor_assign(&rj);
                combo.xor_assign(&tj);
            }
        }
    }
    Some((0..rows.len()).filter(|&i| combo.get(i)).collect())
}

/// Rank of a list of vectors.
pub fn rank(rows: &[BitVec], ncols: usize) -> usize {
    let mut space = RowSpace::new(ncols);
    for r in rows {
        space.insert(r.clone());
    }
    space.dim()
}

/// A basis of the kernel of the linear map sending unit vector `e_i` to
/// `rows[i]`; kernel vectors are returned as index sets over the rows.
pub fn kernel(rows: &[BitVec], ncols: usize) -> Vec<Vec<usize>> {
    let _ = ncols;
    let mut work: Vec<(BitVec, BitVec)> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut tag = BitVec::zeros(rows.len());
            tag.set(i);
            (r.clone(), tag)
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut kernel_rows = Vec::new();
    for i in 0..work.len() {
        loop {
            match work[i].0.leading() {
                None => {
                    let tag = &work[i].1;
                    kernel_rows.push((0..rows.len()).filter(|&j| tag.get(j)).collect());
                    break;
                }
                Some(pivot) => {
                    if let Some(&(_, j)) = pivots.iter().find(|(p, _)| *p == pivot) {
                        let (rj, tj) = work[j].clone();
                        work[i].0.xor_assign(&rj);
                        work[i].1.xor_assign(&tj);
                    } else {
                        pivots.push((pivot, i));
                        break;
                    }
                }
            }
        }
    }
    kernel_rows
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec_of(bits: &[usize], n: usize) -> BitVec {
        let mut v = BitVec::zeros(n);
        for &b in bits {
            v.set(b);
        }
        v
    }

    #[test]
    fn rank_and_membership() {
        let rows = vec![vec_of(&[0, 1], 4), vec_of(&[1, 2], 4), vec_of(&[0, 2], 4)];
        assert_eq!(rank(&rows, 4), 2);
        let mut space = RowSpace::new(4);
        for r in &rows {
            space.insert(r.clone());
        }
        let mut member = vec_of(&[0, 2], 4);
        space.reduce(&mut member);
        assert!(member.is_zero());
        let mut outside = vec_of(&[3], 4);
        space.reduce(&mut outside);
        assert!(!outside.is_zero());
    }

    #[test]
    fn solve_finds_combination() {
        let rows = vec![vec_of(&[0, 1], 4), vec_of(&[1, 2], 4), vec_of(&[2, 3], 4)];
        let target = vec_of(&[0, 3], 4);
        let combo = solve(&rows, 4, &target).unwrap();
        let mut acc = BitVec::zeros(4);
        for i in combo {
            acc.xor_assign(&rows[i]);
        }
        assert_eq!(acc, target);
        assert!(solve(&rows[..2], 4, &vec_of(&[3], 4)).is_none());
    }

    #[test]
    fn kernel_of_dependent_rows() {
        let rows = vec![vec_of(&[0, 1], 4), vec_of(&[1, 2], 4), vec_of(&[0, 2], 4)];
        let ker = kernel(&rows, 4);
        assert_eq!(ker.len(), 1);
        assert_eq!(ker[0], vec![0, 1, 2]);
    }
}
