/// `C(n, k) mod 2`.
///
/// By Lucas' theorem the coefficient is odd iff every binary digit of `k`
/// is at most the matching digit of `n`, i.e. `k` is a bitwise subset of `n`.
pub fn lucas_binom(n: u64, k: u64) -> bool {
    k <= n && k & !n == 0
}

/// Number of ones in the binary expansion of `n`.
pub fn alpha(n: u64) -> u32 {
    n.count_ones()
}
