//! Permutations of the three ribbon positions.

use std::fmt;

/// A bijection on the three ribbon slots.
///
/// Stored as the source index of each output slot: applying the permutation
/// to `[a0,a1,a2]` yields `[a[source[0]], a[source[1]], a[source[2]]]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Permutation {
    source: [usize; 3],
}

impl Permutation {
    pub const IDENTITY: Permutation = Permutation { source: [0, 1, 2] };

    /// Transposition of slots `i` and `j` (0-based).
    pub fn transposition(i: usize, j: usize) -> Self {
        assert!(i < 3 && j < 3 && i != j, "invalid transposition");
        let mut source = [0, 1, 2];
        source.swap(i, j);
        Permutation { source }
    }

    pub fn is_identity(&self) -> bool {
        self.source == [0, 1, 2]
    }

    pub fn apply<T: Copy>(&self, v: [T; 3]) -> [T; 3] {
        [v[self.source[0]], v[self.source[1]], v[self.source[2]]]
    }

    /// `self ∘ inner`: `inner` acts first.
    pub fn after(&self, inner: &Permutation) -> Permutation {
        // (self ∘ inner)(v)[i] = inner(v)[self.source[i]] = v[inner.source[self.source[i]]]
        Permutation {
            source: [
                inner.source[self.source[0]],
                inner.source[self.source[1]],
                inner.source[self.source[2]],
            ],
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut source = [0; 3];
        for (i, &s) in self.source.iter().enumerate() {
            source[s] = i;
        }
        Permutation { source }
    }

    /// All six elements of the symmetric group on three slots.
    pub fn all() -> [Permutation; 6] {
        [
            Permutation::IDENTITY,
            Permutation::transposition(0, 1),
            Permutation::transposition(1, 2),
            Permutation::transposition(2, 0),
            Permutation { source: [1, 2, 0] },
            Permutation { source: [2, 0, 1] },
        ]
    }
}

impl fmt::Display for Permutation {
    /// Shows the action on an abstract twist vector, e.g. `[a,b,c]->[c,a,b]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "id");
        }
        let names = ["a", "b", "c"];
        let image = self.apply(names);
        write!(f, "[a,b,c]->[{},{},{}]", image[0], image[1], image[2])
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
