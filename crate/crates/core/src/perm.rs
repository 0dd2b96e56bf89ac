use std::fmt;

/// A permutation of `{0, .., n-1}` in one-line form: `p.apply(i) == p.as_slice()[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PermutationError {
    #[error("value {value} at position {position} is outside 0..{len}")]
    OutOfRange { position: usize, value: usize, len: usize },
    #[error("value {0} occurs more than once")]
    Repeated(usize),
}

impl Permutation {
    pub fn from_one_line(images: Vec<usize>) -> Result<Self, PermutationError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (position, &value) in images.iter().enumerate() {
            if value >= n {
                return Err(PermutationError::OutOfRange { position, value, len: n });
            }
            if seen[value] {
                return Err(PermutationError::Repeated(value));
            }
            seen[value] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// The transposition swapping `a` and `b` on `{0, .., n-1}`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(a, b);
        Permutation(v)
    }

    /// `j -> j + 1` for `j < n - 1`, and `n - 1 -> 0`.
    pub fn long_cycle(n: usize) -> Self {
        Permutation((0..n).map(|j| (j + 1) % n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.len(), other.len());
        Permutation(other.0.iter().map(|&j| self.0[j]).collect())
    }

    /// `phi ∘ self ∘ phi⁻¹`: the same permutation after renaming every `i` to `phi(i)`.
    pub fn conjugate_by(&self, phi: &Permutation) -> Self {
        let mut out = vec![0; self.len()];
        for (i, &j) in self.0.iter().enumerate() {
            out[phi.apply(i)] = phi.apply(j);
        }
        Permutation(out)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Points moved by the permutation, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(i, j)| i != *j)
            .map(|(i, _)| i)
            .collect()
    }

    /// Disjoint cycle decomposition. Each cycle starts at its smallest element
    /// and cycles are listed by that element; fixed points are 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.0[i];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.len()];
        let mut count = 0;
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i];
            }
        }
        count
    }

    /// The cycle containing `i`, rotated to start at its smallest element.
    pub fn cycle_of(&self, i: usize) -> Vec<usize> {
        let mut cycle = vec![i];
        let mut j = self.0[i];
        while j != i {
            cycle.push(j);
            j = self.0[j];
        }
        canonical_cycle(cycle)
    }
}

/// Rotates a cyclically ordered list so that it starts at its minimum.
pub fn canonical_cycle(mut cycle: Vec<usize>) -> Vec<usize> {
    if let Some((pos, _)) = cycle.iter().enumerate().min_by_key(|(_, v)| **v) {
        cycle.rotate_left(pos);
    }
    cycle
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.cycles() {
            f.write_str("(")?;
            for (k, v) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::from_one_line(v.to_vec()).unwrap()
    }

    #[test]
    fn cycles_of_small_examples() {
        assert_eq!(p(&[0, 1, 2]).cycles(), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(p(&[1, 2, 0]).cycles(), vec![vec![0, 1, 2]]);
        assert_eq!(p(&[2, 1, 0]).cycles(), vec![vec![0, 2], vec![1]]);
    }

    #[test]
    fn rejects_non_bijections() {
        assert_eq!(
            Permutation::from_one_line(vec![0, 0, 1]),
            Err(PermutationError::Repeated(0))
        );
        assert!(matches!(
            Permutation::from_one_line(vec![0, 3, 1]),
            Err(PermutationError::OutOfRange { .. })
        ));
    }

    #[test]
    fn conjugation_renames_cycles() {
        let s = p(&[1, 2, 0, 3]);
        let phi = p(&[3, 0, 1, 2]);
        let t = s.conjugate_by(&phi);
        // (0 1 2)(3) renamed by phi becomes (3 0 1)(2)
        assert_eq!(t.cycles(), vec![vec![0, 1, 3], vec![2]]);
    }

    fn arb_perm() -> impl Strategy<Value = Permutation> {
        (1usize..9).prop_flat_map(|n| {
            Just((0..n).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::from_one_line(v).unwrap())
        })
    }

    proptest! {
        #[test]
        fn cycles_partition_ground_set(s in arb_perm()) {
            let mut all: Vec<usize> = s.cycles().into_iter().flatten().collect();
            all.sort_unstable();
            prop_assert_eq!(all, (0..s.len()).collect::<Vec<_>>());
            prop_assert_eq!(s.cycles().len(), s.cycle_count());
        }

        #[test]
        fn inverse_composes_to_identity(s in arb_perm()) {
            prop_assert!(s.compose(&s.inverse()).is_identity());
            prop_assert!(s.inverse().compose(&s).is_identity());
        }
    }
}
