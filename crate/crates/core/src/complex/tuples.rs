//! Integer encoding of tuples of non-identity elements.
//!
//! A tuple `(t_1, …, t_m)` with `t_i ∈ {1..n-1}` is encoded in base `n-1`
//! with `t_1` most significant, so codes sort lexicographically.

/// Encoder/decoder for tuples over `Ḡ` of a group of order `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TupleCodec {
    base: usize,
}

impl TupleCodec {
    pub fn new(group_order: usize) -> Self {
        TupleCodec { base: group_order.saturating_sub(1) }
    }

    /// Number of tuples of length `len` (`(n-1)^len`).
    pub fn count(&self, len: usize) -> usize {
        self.base.pow(len as u32)
    }

    /// Same as [`count`](Self::count) without overflow, for cost estimates.
    pub fn count_u128(&self, len: usize) -> u128 {
        (self.base as u128).saturating_pow(len as u32)
    }

    #[inline]
    pub fn encode(&self, tuple: &[usize]) -> usize {
        tuple.iter().fold(0, |acc, &t| {
            debug_assert!(t != 0, "identity in a bar slot");
            acc * self.base + (t - 1)
        })
    }

    /// Encodes, returning `None` if any entry is the identity.
    #[inline]
    pub fn try_encode(&self, tuple: &[usize]) -> Option<usize> {
        let mut acc = 0;
        for &t in tuple {
            if t == 0 {
                return None;
            }
            acc = acc * self.base + (t - 1);
        }
        Some(acc)
    }

    #[inline]
    pub fn decode_into(&self, mut code: usize, len: usize, out: &mut Vec<usize>) {
        out.clear();
        out.resize(len, 0);
        for slot in out.iter_mut().rev() {
            *slot = code % self.base + 1;
            code /= self.base;
        }
    }

    pub fn decode(&self, code: usize, len: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(len);
        self.decode_into(code, len, &mut out);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let c = TupleCodec::new(6);
        assert_eq!(c.count(3), 125);
        for code in 0..125 {
            let t = c.decode(code, 3);
            assert!(t.iter().all(|&x| (1..6).contains(&x)));
            assert_eq!(c.encode(&t), code);
        }
        assert_eq!(c.encode(&[]), 0);
        assert_eq!(c.count(0), 1);
        assert_eq!(c.try_encode(&[1, 0]), None);
        assert!(c.encode(&[1, 5]) < c.encode(&[2, 1]));
    }
}
