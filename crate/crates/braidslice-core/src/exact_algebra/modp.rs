//! Word-sized prime-field arithmetic and linear algebra.

#[inline]
pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn addmod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
pub fn submod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

pub fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    r
}

pub fn invmod(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "inverse of zero mod {p}");
    powmod(a, p - 2, p)
}

pub fn reduce_i64(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(sp) {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Distinct prime factors of `n` by trial division.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Descending primes below 2^62 that are congruent to 1 modulo `m`.
pub fn primes_one_mod(m: u64) -> impl Iterator<Item = u64> {
    let m = m.max(2);
    let start = ((1u64 << 62) / m) * m + 1;
    let mut cur = start;
    std::iter::from_fn(move || loop {
        cur -= m;
        if is_prime(cur) {
            return Some(cur);
        }
    })
}

/// A primitive root modulo the prime `p`.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let fs = prime_factors(p - 1);
    (2..p)
        .find(|&g| fs.iter().all(|&f| powmod(g, (p - 1) / f, p) != 1))
        .expect("prime has a primitive root")
}

/// Determinant of a square matrix over F_p (row-major, destroyed).
pub fn det_mod(a: &mut [u64], n: usize, p: u64) -> u64 {
    let mut det = 1u64;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| a[r * n + col] != 0) else {
            return 0;
        };
        if piv != col {
            for j in 0..n {
                a.swap(piv * n + j, col * n + j);
            }
            det = submod(0, det, p);
        }
        let pv = a[col * n + col];
        det = mulmod(det, pv, p);
        let inv = invmod(pv, p);
        for r in col + 1..n {
            let f = a[r * n + col];
            if f == 0 {
                continue;
            }
            let f = mulmod(f, inv, p);
            for j in col..n {
                let sub = mulmod(f, a[col * n + j], p);
                a[r * n + j] = submod(a[r * n + j], sub, p);
            }
        }
    }
    det
}

/// Reduced row echelon form over F_p; returns pivot columns.
pub fn rref(m: &mut [Vec<u64>], p: u64) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !m[i][c].is_multiple_of(p)) else {
            continue;
        };
        m.swap(r, piv);
        let inv = invmod(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = mulmod(*x, inv, p);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    let sub = mulmod(f, m[r][j], p);
                    m[i][j] = submod(m[i][j], sub, p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank_mod(rows: &[Vec<u64>], p: u64) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, p).len()
}

/// Basis of the right null space `{x : M x = 0}` over F_p.
pub fn nullspace_mod(rows: &[Vec<u64>], ncols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, p);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; ncols];
            v[f] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = submod(0, m[i][f], p);
            }
            v
        })
        .collect()
}

/// Solve `M x = b` over F_p; `None` if inconsistent. Free variables are set to 0.
pub fn solve_mod(rows: &[Vec<u64>], rhs: &[u64], p: u64) -> Option<(Vec<u64>, usize)> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut aug: Vec<Vec<u64>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, &b)| {
            let mut v = r.clone();
            v.push(b % p);
            v
        })
        .collect();
    let pivots = rref(&mut aug, p);
    if pivots.contains(&ncols) {
        return None;
    }
    let mut x = vec![0u64; ncols];
    for (i, &pc) in pivots.iter().enumerate() {
        x[pc] = aug[i][ncols];
    }
    Some((x, ncols - pivots.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_roots() {
        let p = primes_one_mod(7).next().unwrap();
        assert!(is_prime(p));
        assert_eq!(p % 7, 1);
        let g = primitive_root(p);
        let w = powmod(g, (p - 1) / 7, p);
        assert_ne!(w, 1);
        assert_eq!(powmod(w, 7, p), 1);
        assert_eq!(primitive_root(7), 3);
    }

    #[test]
    fn linear_algebra() {
        let p = 7;
        let m = vec![vec![1, 2, 3], vec![2, 4, 6]];
        assert_eq!(rank_mod(&m, p), 1);
        let ns = nullspace_mod(&m, 3, p);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let s = (0..3).fold(0, |acc, j| addmod(acc, mulmod(m[0][j], v[j], p), p));
            assert_eq!(s, 0);
        }
        let mut a = vec![2, 1, 1, 3];
        assert_eq!(det_mod(&mut a, 2, p), 5);
        assert!(solve_mod(&[vec![1, 1], vec![1, 1]], &[1, 2], p).is_none());
    }
}
