use fixedbitset::FixedBitSet;

/// Set of vertices able to reach a given vertex.
///
/// `union_with` is only ever called on two sets holding adjacent vertices,
/// which is what lets cycles use a two-number encoding.
pub trait ReachSet: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn singleton(n: usize, v: usize) -> Self;
    fn union_with(&mut self, other: &Self, n: usize);
    fn count(&self, n: usize) -> usize;
    fn to_bits(&self, n: usize) -> FixedBitSet;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bits(pub FixedBitSet);

impl ReachSet for Bits {
    fn singleton(n: usize, v: usize) -> Self {
        let mut b = FixedBitSet::with_capacity(n);
        b.insert(v);
        Bits(b)
    }

    fn union_with(&mut self, other: &Self, _n: usize) {
        self.0.union_with(&other.0);
    }

    fn count(&self, _n: usize) -> usize {
        self.0.count_ones(..)
    }

    fn to_bits(&self, _n: usize) -> FixedBitSet {
        self.0.clone()
    }
}

/// Contiguous run of cycle positions `lo, lo+1, ..., lo+len-1` (mod n).
/// The full cycle is always stored as `lo = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arc {
    lo: u32,
    len: u32,
}

impl Arc {
    pub fn new(lo: usize, len: usize, n: usize) -> Self {
        if len >= n {
            Arc {
                lo: 0,
                len: n as u32,
            }
        } else {
            Arc {
                lo: (lo % n) as u32,
                len: len as u32,
            }
        }
    }

    pub fn lo(&self) -> usize {
        self.lo as usize
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, v: usize, n: usize) -> bool {
        (v + n - self.lo()) % n < self.len()
    }
}

impl ReachSet for Arc {
    fn singleton(n: usize, v: usize) -> Self {
        Arc::new(v, 1, n)
    }

    fn union_with(&mut self, other: &Self, n: usize) {
        if self.len() >= n || other.len() >= n {
            *self = Arc::new(0, n, n);
            return;
        }
        let (a0, a1) = (self.lo() as i64, (self.lo() + self.len()) as i64);
        let n = n as i64;
        for shift in [-n, 0, n] {
            let b0 = other.lo() as i64 + shift;
            let b1 = b0 + other.len() as i64;
            if b0 <= a1 && a0 <= b1 {
                let lo = a0.min(b0);
                let len = a1.max(b1) - lo;
                *self = Arc::new(lo.rem_euclid(n) as usize, len as usize, n as usize);
                return;
            }
        }
        panic!("union of disjoint arcs {self:?} and {other:?}");
    }

    fn count(&self, _n: usize) -> usize {
        self.len()
    }

    fn to_bits(&self, n: usize) -> FixedBitSet {
        let mut b = FixedBitSet::with_capacity(n);
        for k in 0..self.len() {
            b.insert((self.lo() + k) % n);
        }
        b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arc_unions() {
        let n = 8;
        let mut a = Arc::singleton(n, 7);
        a.union_with(&Arc::singleton(n, 0), n);
        assert_eq!(a, Arc::new(7, 2, n));
        assert!(a.contains(0, n) && a.contains(7, n) && !a.contains(1, n));
        let mut b = Arc::new(2, 3, n);
        b.union_with(&Arc::new(5, 4, n), n);
        assert_eq!(b, Arc::new(2, 7, n));
        b.union_with(&Arc::new(1, 1, n), n);
        assert_eq!(b.len(), n);
        assert_eq!(b.lo(), 0);
    }

    #[test]
    fn arc_matches_bits() {
        let n = 6;
        for lo in 0..n {
            for len in 1..=n {
                for lo2 in 0..n {
                    for len2 in 1..=n {
                        let (x, y) = (Arc::new(lo, len, n), Arc::new(lo2, len2, n));
                        let (bx, by) = (x.to_bits(n), y.to_bits(n));
                        let touching = (0..n).any(|v| {
                            bx.contains(v)
                                && (by.contains(v)
                                    || by.contains((v + 1) % n)
                                    || by.contains((v + n - 1) % n))
                        });
                        if !touching {
                            continue;
                        }
                        let mut u = x;
                        u.union_with(&y, n);
                        let mut bu = bx.clone();
                        bu.union_with(&by);
                        assert_eq!(u.to_bits(n), bu, "{x:?} {y:?}");
                    }
                }
            }
        }
    }
}
