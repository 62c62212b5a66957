//! Table sieves over `1..=n`.

pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    num_prime::nt_funcs::primes(n)
}

/// Smallest-prime-factor table; `spf[0] = spf[1] = 0`.
pub struct SpfSieve {
    spf: Vec<u32>,
}

impl SpfSieve {
    pub fn new(n: usize) -> Self {
        let mut spf = vec![0u32; n + 1];
        let mut primes: Vec<u32> = Vec::new();
        for i in 2..=n {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u32);
            }
            let si = spf[i];
            for &p in &primes {
                if p > si || i * p as usize > n {
                    break;
                }
                spf[i * p as usize] = p;
            }
        }
        SpfSieve { spf }
    }

    pub fn limit(&self) -> usize {
        self.spf.len() - 1
    }

    pub fn spf(&self, n: usize) -> u32 {
        self.spf[n]
    }

    pub fn is_prime(&self, n: usize) -> bool {
        n >= 2 && self.spf[n] as usize == n
    }

    /// Splits `n` into `(p, e, n / p^e)` with `p` its smallest prime.
    pub fn split(&self, n: usize) -> (usize, u32, usize) {
        let p = self.spf[n] as usize;
        let mut m = n / p;
        let mut e = 1;
        while m.is_multiple_of(p) {
            m /= p;
            e += 1;
        }
        (p, e, m)
    }

    pub fn factor(&self, mut n: usize) -> Vec<(usize, u32)> {
        let mut out = Vec::new();
        while n > 1 {
            let (p, e, m) = self.split(n);
            out.push((p, e));
            n = m;
        }
        out
    }
}

/// Möbius function on `0..=n` (index 0 unused).
pub fn mobius_table(n: usize) -> Vec<i8> {
    let mut mu = vec![1i8; n + 1];
    if n == 0 {
        return mu;
    }
    mu[0] = 0;
    let mut composite = vec![false; n + 1];
    for p in 2..=n {
        if composite[p] {
            continue;
        }
        for m in (p..=n).step_by(p) {
            if m > p {
                composite[m] = true;
            }
            mu[m] = -mu[m];
        }
        if let Some(sq) = p.checked_mul(p) {
            for m in (sq..=n).step_by(sq) {
                mu[m] = 0;
            }
        }
    }
    mu
}

/// `flags[k]` is true when `k` is squarefree (index 0 false).
pub fn squarefree_flags(n: usize) -> Vec<bool> {
    let mut flags = vec![true; n + 1];
    flags[0] = false;
    let mut p = 2usize;
    while p * p <= n {
        let sq = p * p;
        for m in (sq..=n).step_by(sq) {
            flags[m] = false;
        }
        p += 1;
    }
    flags
}
