//! Fundamental discriminants.

use crate::sieve::{mobius_table, squarefree_flags};

fn is_squarefree(n: u64) -> bool {
    n != 0 && num_prime::nt_funcs::factorize64(n).values().all(|&e| e == 1)
}

/// True when `d` is the discriminant of a quadratic field.
pub fn is_fundamental(d: i64) -> bool {
    if d == 1 || d == 0 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => is_squarefree(d.unsigned_abs()),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m.unsigned_abs())
        }
        _ => false,
    }
}

/// Discriminant of `Q(sqrt(n))`; returns 1 when `n` is a nonzero square.
pub fn fundamental_of(n: i128) -> i128 {
    assert!(n != 0, "square class of zero");
    let mut core: i128 = if n < 0 { -1 } else { 1 };
    let m = n.unsigned_abs();
    let factors = if let Ok(small) = u64::try_from(m) {
        num_prime::nt_funcs::factorize64(small).into_iter().map(|(p, e)| (p as u128, e)).collect::<Vec<_>>()
    } else {
        num_prime::nt_funcs::factorize128(m).into_iter().collect()
    };
    for (p, e) in factors {
        if e % 2 == 1 {
            core *= p as i128;
        }
    }
    if core.rem_euclid(4) == 1 {
        core
    } else {
        4 * core
    }
}

/// Fundamental discriminants with `|d| <= bound`, ordered by `|d|` with the
/// negative one first on ties.
pub fn fundamental_discriminants(bound: u64) -> Vec<i64> {
    let n = bound as usize;
    let sqf = squarefree_flags(n);
    let mut out = Vec::new();
    for a in 3..=n {
        for d in [-(a as i64), a as i64] {
            let ok = match d.rem_euclid(4) {
                1 => sqf[a],
                0 => {
                    let m = d / 4;
                    matches!(m.rem_euclid(4), 2 | 3) && sqf[a / 4]
                }
                _ => false,
            };
            if ok {
                out.push(d);
            }
        }
    }
    out
}

/// Per-absolute-value multiplicity table: `table[n]` is the number of
/// fundamental discriminants with `|d| = n` (0, 1 or 2).
pub fn fundamental_multiplicity(bound: usize) -> Vec<u8> {
    let sqf = squarefree_flags(bound);
    (0..=bound)
        .map(|n| {
            if n < 3 {
                return 0;
            }
            match n % 4 {
                1 | 3 => sqf[n] as u8,
                0 => match (n / 4) % 4 {
                    1 | 3 => sqf[n / 4] as u8,
                    2 => 2 * sqf[n / 4] as u8,
                    _ => 0,
                },
                _ => 0,
            }
        })
        .collect()
}

/// Counts fundamental discriminants with `|d| <= y` without enumerating them.
pub struct FundamentalCounter {
    mu: Vec<i8>,
}

impl FundamentalCounter {
    /// Supports arguments up to `max_y`.
    pub fn new(max_y: u64) -> Self {
        FundamentalCounter { mu: mobius_table(crate::isqrt(max_y) as usize + 1) }
    }

    fn in_class(z: u64, r: u64) -> u64 {
        if z < r {
            0
        } else {
            (z - r) / 4 + 1
        }
    }

    /// Squarefree `n <= y` with `n = r (mod 4)`, `r` odd.
    fn squarefree_odd_class(&self, y: u64, r: u64) -> u64 {
        let mut total: i64 = 0;
        let mut k = 1u64;
        while k * k <= y {
            let m = self.mu[k as usize];
            if m != 0 {
                total += m as i64 * Self::in_class(y / (k * k), r) as i64;
            }
            k += 2;
        }
        total as u64
    }

    fn squarefree_class(&self, y: u64, r: u64) -> u64 {
        match r {
            1 | 3 => self.squarefree_odd_class(y, r),
            2 => self.squarefree_odd_class(y / 2, 1) + self.squarefree_odd_class(y / 2, 3),
            _ => 0,
        }
    }

    pub fn count(&self, y: u64) -> u64 {
        assert!(crate::isqrt(y) < self.mu.len() as u64, "counter built for a smaller range");
        if y < 3 {
            return 0;
        }
        let q = y / 4;
        (self.squarefree_class(y, 1) - 1)
            + self.squarefree_class(y, 3)
            + 2 * self.squarefree_class(q, 2)
            + self.squarefree_class(q, 3)
            + self.squarefree_class(q, 1)
    }
}
