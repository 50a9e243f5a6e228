//! Small helpers for u128 subset masks.

/// Mask with the lowest `n` bits set.
pub fn left_mask(n: usize) -> u128 {
    if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

/// Indices of the set bits, ascending.
pub fn bit_iter(mut m: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let k = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(k)
        }
    })
}

pub fn from_indices(xs: impl IntoIterator<Item = usize>) -> u128 {
    xs.into_iter().fold(0, |m, x| m | 1 << x)
}

pub fn is_subset(a: u128, b: u128) -> bool {
    a & !b == 0
}
