//! Small integer helpers: gcd, totients, divisors, binomials, Bell numbers.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Euler's totient.
pub fn phi(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}

/// Units of Z_n in increasing order. For n = 1 this is `[0]` (the trivial ring).
pub fn units(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![0];
    }
    (1..n).filter(|&k| gcd(k, n) == 1).collect()
}

pub fn is_unit(a: i64, n: u64) -> bool {
    gcd(a.rem_euclid(n as i64) as u64, n) == 1
}

/// Inverse of `a` modulo `n`, if it exists.
pub fn mod_inverse(a: i64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let a = a.rem_euclid(n as i64) as u64;
    (1..n).find(|&x| (a as u128 * x as u128 % n as u128) == 1)
}

/// Multiplicative order of a unit `a` modulo `n`.
pub fn multiplicative_order(a: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(1);
    }
    if gcd(a, n) != 1 {
        return None;
    }
    let mut x = a % n;
    let mut k = 1;
    while x != 1 {
        x = x * a % n;
        k += 1;
    }
    Some(k)
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|k| k * k <= n).all(|k| !n.is_multiple_of(k))
}

pub fn mobius(mut n: u64) -> i64 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Binomial coefficient, zero outside `0 <= t <= m`.
pub fn binomial(m: i64, t: i64) -> u128 {
    if t < 0 || m < 0 || t > m {
        return 0;
    }
    let t = t.min(m - t) as u128;
    let m = m as u128;
    let mut acc: u128 = 1;
    for i in 0..t {
        acc = acc * (m - i) / (i + 1);
    }
    acc
}

/// Bell numbers B_0..=B_len via the Bell triangle.
pub fn bell_numbers(len: usize) -> Vec<u128> {
    let mut out = vec![1u128];
    let mut row = vec![1u128];
    for _ in 0..len {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &x in &row {
            let prev = *next.last().unwrap();
            next.push(prev + x);
        }
        out.push(next[0]);
        row = next;
    }
    out
}
