//! Integer-polynomial workhorse shared by the gcd and the fraction-free
//! determinant: dense `Vec<BigInt>` polynomials (ascending, trimmed, empty =
//! zero) and a modular gcd.
//!
//! The gcd reduces both inputs modulo machine-word primes, runs the Euclidean
//! algorithm there, lifts the (leading-coefficient corrected) images by CRT,
//! and verifies the candidate by exact division. Degree-0 images certify a
//! trivial gcd after a single prime, which is the overwhelmingly common case
//! in rational-function cross-reductions.

use std::sync::Mutex;

use num::bigint::BigInt;
use num::traits::{One, Signed, ToPrimitive, Zero};

pub(crate) type IPoly = Vec<BigInt>;

pub(crate) fn ip_trim(mut v: IPoly) -> IPoly {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

pub(crate) fn ip_mul(a: &[BigInt], b: &[BigInt]) -> IPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len().min(b.len()) >= 12 {
        return kronecker_mul(a, b);
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    ip_trim(out)
}

/// Kronecker substitution: evaluate both polynomials at 2^b, do one big
/// integer multiplication, and slice the product back into digits. The
/// window is wide enough that every product coefficient fits strictly below
/// 2^(b-1) in magnitude, so digits can be recovered after offsetting.
fn kronecker_mul(a: &[BigInt], b: &[BigInt]) -> IPoly {
    use num::bigint::Sign;

    let max_bits = |p: &[BigInt]| p.iter().map(|c| c.bits()).max().unwrap_or(0);
    let len_bits = 64 - (a.len().min(b.len()) as u64).leading_zeros() as u64;
    let window_bits = ((max_bits(a) + max_bits(b) + len_bits + 2 + 7) / 8) * 8;
    let bw = (window_bits / 8) as usize;

    let pack_nonneg = |p: &[BigInt], negate: bool| -> BigInt {
        let mut buf = vec![0u8; p.len() * bw];
        for (i, c) in p.iter().enumerate() {
            let keep = if negate {
                c.is_negative()
            } else {
                c.is_positive()
            };
            if !keep {
                continue;
            }
            let (_, bytes) = c.to_bytes_le();
            buf[i * bw..i * bw + bytes.len()].copy_from_slice(&bytes);
        }
        BigInt::from_bytes_le(Sign::Plus, &buf)
    };
    let pack = |p: &[BigInt]| pack_nonneg(p, false) - pack_nonneg(p, true);

    let product = pack(a) * pack(b);
    let n_out = a.len() + b.len() - 1;

    // Add 2^(b-1) to every window so all digits become nonnegative, then
    // read the digits off the byte representation.
    let mut offset_buf = vec![0u8; n_out * bw];
    for i in 0..n_out {
        offset_buf[i * bw + bw - 1] = 0x80;
    }
    let offset = BigInt::from_bytes_le(Sign::Plus, &offset_buf);
    let shifted = product + &offset;
    debug_assert!(!shifted.is_negative());
    let (_, bytes) = shifted.to_bytes_le();

    let half = BigInt::one() << (window_bits - 1);
    let zero_window = [0u8; 0];
    let mut out = Vec::with_capacity(n_out);
    for i in 0..n_out {
        let lo = (i * bw).min(bytes.len());
        let hi = ((i + 1) * bw).min(bytes.len());
        let window = if lo < hi { &bytes[lo..hi] } else { &zero_window[..] };
        let digit = BigInt::from_bytes_le(Sign::Plus, window) - &half;
        out.push(digit);
    }
    ip_trim(out)
}

pub(crate) fn ip_sub(a: &[BigInt], b: &[BigInt]) -> IPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let out = (0..n)
        .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
        .collect();
    ip_trim(out)
}

/// Exact division over Z[t]; None when the division is not exact.
pub(crate) fn ip_try_exact_div(num: &[BigInt], den: &[BigInt]) -> Option<IPoly> {
    assert!(!den.is_empty(), "division by zero polynomial");
    if num.is_empty() {
        return Some(Vec::new());
    }
    if num.len() < den.len() {
        return None;
    }
    if den.len() >= 8 && num.len() >= 24 {
        return crt_exact_div(num, den);
    }
    schoolbook_exact_div(num, den)
}

fn schoolbook_exact_div(num: &[BigInt], den: &[BigInt]) -> Option<IPoly> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - den.len() + 1];
    let lc = den.last().unwrap();
    let lc_is_one = lc.is_one();
    let lc_is_neg_one = (-lc).is_one();
    for i in (den.len() - 1..num.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let q = if lc_is_one {
            rem[i].clone()
        } else if lc_is_neg_one {
            -&rem[i]
        } else {
            let (q, r) = num::integer::div_rem(rem[i].clone(), lc.clone());
            if !r.is_zero() {
                return None;
            }
            q
        };
        let shift = i + 1 - den.len();
        for (j, dc) in den.iter().enumerate() {
            rem[shift + j] -= &q * dc;
        }
        quot[shift] = q;
    }
    if rem.iter().all(|c| c.is_zero()) {
        Some(ip_trim(quot))
    } else {
        None
    }
}

/// Exact division by Chinese remaindering: divide modulo word primes until
/// the lifted quotient stabilizes, then confirm with one multiplication.
fn crt_exact_div(num: &[BigInt], den: &[BigInt]) -> Option<IPoly> {
    let lcd = den.last().unwrap();
    let mut crt_res: Vec<BigInt> = Vec::new();
    let mut crt_mod = BigInt::one();
    let mut previous: Option<IPoly> = None;
    for i in 0.. {
        let p = gcd_prime(i);
        let pb = BigInt::from(p);
        if (lcd % &pb).is_zero() {
            continue;
        }
        let np = mod_reduce(num, p);
        let dp = mod_reduce(den, p);
        if dp.is_empty() {
            continue;
        }
        let (qp, rp) = mod_divrem(&np, &dp, p);
        if !rp.is_empty() {
            // Division fails modulo a good prime, so it fails over Z.
            return None;
        }
        let qlen = num.len() - den.len() + 1;
        let mut padded = qp;
        padded.resize(qlen, 0);
        let digits: Vec<BigInt> = padded.iter().map(|&c| BigInt::from(c)).collect();
        if crt_res.is_empty() {
            crt_res = digits;
            crt_mod = pb;
        } else {
            let m_inv = powmod((&crt_mod % &pb).to_u64().expect("below p"), p - 2, p);
            for (acc, new) in crt_res.iter_mut().zip(digits.iter()) {
                let delta = {
                    let r = (new - &*acc) % &pb;
                    let r = if r.is_negative() { r + &pb } else { r };
                    r.to_u64().expect("below p")
                };
                *acc += &crt_mod * BigInt::from(mulmod(delta, m_inv, p));
            }
            crt_mod *= &pb;
        }
        let candidate = symmetric_lift(&crt_res, &crt_mod);
        if previous.as_ref() == Some(&candidate) {
            if ip_sub(&ip_mul(&candidate, den), num).is_empty() {
                return Some(candidate);
            }
        }
        previous = Some(candidate);
    }
    unreachable!("CRT division terminates once the modulus exceeds the quotient")
}

fn mod_divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let db = b.len() - 1;
    let lc_inv = powmod(b[db], p - 2, p);
    let mut rem: Vec<u64> = a.to_vec();
    let mut quot = vec![0u64; a.len().saturating_sub(db)];
    while rem.len() > db {
        let top = *rem.last().unwrap();
        if top == 0 {
            rem.pop();
            continue;
        }
        let q = mulmod(top, lc_inv, p);
        let shift = rem.len() - 1 - db;
        for (j, &bc) in b.iter().enumerate() {
            let sub = mulmod(q, bc, p);
            let cell = &mut rem[shift + j];
            *cell = if *cell >= sub { *cell - sub } else { *cell + p - sub };
        }
        quot[shift] = q;
        while rem.last().map_or(false, |&c| c == 0) {
            rem.pop();
        }
    }
    (quot, rem)
}

/// Exact division that must succeed (Bareiss invariant).
pub(crate) fn ip_exact_div(num: &[BigInt], den: &[BigInt]) -> IPoly {
    ip_try_exact_div(num, den).expect("inexact polynomial division")
}

/// Content (gcd of coefficients), signed so the primitive part has a
/// positive leading coefficient. Zero polynomial reports zero.
pub(crate) fn ip_content(v: &[BigInt]) -> BigInt {
    let mut content = BigInt::zero();
    for c in v {
        content = num::integer::gcd(content, c.clone());
        if content.is_one() {
            break;
        }
    }
    if content.is_zero() {
        return content;
    }
    if v.last().unwrap().is_negative() {
        -content
    } else {
        content
    }
}

pub(crate) fn ip_primitive(v: IPoly) -> IPoly {
    let v = ip_trim(v);
    if v.is_empty() {
        return v;
    }
    let content = ip_content(&v);
    if content.is_one() {
        return v;
    }
    v.into_iter().map(|c| c / &content).collect()
}

// --- word-size modular arithmetic ------------------------------------------

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    acc
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // Deterministic Miller-Rabin bases for all u64.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Returns the i-th gcd prime (descending 62-bit primes), generating and
/// caching them on demand.
fn gcd_prime(i: usize) -> u64 {
    static PRIMES: Mutex<Vec<u64>> = Mutex::new(Vec::new());
    let mut primes = PRIMES.lock().expect("prime cache");
    while primes.len() <= i {
        let mut candidate = primes.last().map_or((1u64 << 62) - 1, |p| p - 2);
        while !is_prime_u64(candidate) {
            candidate -= 2;
        }
        primes.push(candidate);
    }
    primes[i]
}

fn mod_reduce(f: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut out: Vec<u64> = f
        .iter()
        .map(|c| {
            let r = c % &pb;
            let r = if r.is_negative() { r + &pb } else { r };
            r.to_u64().expect("reduced below p")
        })
        .collect();
    while out.last().map_or(false, |&c| c == 0) {
        out.pop();
    }
    out
}

/// Monic gcd in GF(p)[t] by the Euclidean algorithm.
fn mod_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    while !b.is_empty() {
        let r = mod_rem(&a, &b, p);
        a = b;
        b = r;
    }
    let lc_inv = powmod(*a.last().expect("nonzero"), p - 2, p);
    a.iter().map(|&c| mulmod(c, lc_inv, p)).collect()
}

fn mod_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let lc_inv = powmod(b[db], p - 2, p);
    let mut rem: Vec<u64> = a.to_vec();
    while rem.len() > db {
        let top = *rem.last().unwrap();
        if top == 0 {
            rem.pop();
            continue;
        }
        let q = mulmod(top, lc_inv, p);
        let shift = rem.len() - 1 - db;
        for (j, &bc) in b.iter().enumerate() {
            let sub = mulmod(q, bc, p);
            let cell = &mut rem[shift + j];
            *cell = if *cell >= sub { *cell - sub } else { *cell + p - sub };
        }
        while rem.last().map_or(false, |&c| c == 0) {
            rem.pop();
        }
    }
    rem
}

fn symmetric_lift(res: &[BigInt], modulus: &BigInt) -> IPoly {
    let half = modulus / 2;
    ip_trim(
        res.iter()
            .map(|c| {
                if c > &half {
                    c - modulus
                } else {
                    c.clone()
                }
            })
            .collect(),
    )
}

/// Primitive gcd of two nonzero primitive integer polynomials.
pub(crate) fn ip_gcd_primitive(f: &[BigInt], g: &[BigInt]) -> IPoly {
    debug_assert!(!f.is_empty() && !g.is_empty());
    if f.len() == 1 || g.len() == 1 {
        // A primitive constant is a unit.
        return vec![BigInt::one()];
    }
    let lcf = f.last().unwrap();
    let lcg = g.last().unwrap();
    let lc_bound = num::integer::gcd(lcf.abs(), lcg.abs());

    let mut best_deg = usize::MAX;
    let mut crt_res: Vec<BigInt> = Vec::new();
    let mut crt_mod = BigInt::one();
    for i in 0.. {
        let p = gcd_prime(i);
        let pb = BigInt::from(p);
        if (lcf % &pb).is_zero() || (lcg % &pb).is_zero() {
            continue;
        }
        let hp = mod_gcd(mod_reduce(f, p), mod_reduce(g, p), p);
        let deg = hp.len() - 1;
        if deg == 0 {
            return vec![BigInt::one()];
        }
        if deg > best_deg {
            // Unlucky prime: its image has too high a degree.
            continue;
        }
        let lc_mod = {
            let r = &lc_bound % &pb;
            r.to_u64().expect("below p")
        };
        let scaled: Vec<BigInt> = hp
            .iter()
            .map(|&c| BigInt::from(mulmod(c, lc_mod, p)))
            .collect();
        if deg < best_deg {
            best_deg = deg;
            crt_res = scaled;
            crt_mod = pb;
        } else {
            // CRT-combine with the accumulated residue.
            let m_inv = powmod(
                (&crt_mod % &pb).to_u64().expect("below p"),
                p - 2,
                p,
            );
            for (acc, new) in crt_res.iter_mut().zip(scaled.iter()) {
                let delta = {
                    let r = (new - &*acc) % &pb;
                    let r = if r.is_negative() { r + &pb } else { r };
                    r.to_u64().expect("below p")
                };
                *acc += &crt_mod * BigInt::from(mulmod(delta, m_inv, p));
            }
            crt_mod *= &pb;
        }
        let candidate = ip_primitive(symmetric_lift(&crt_res, &crt_mod));
        if candidate.is_empty() {
            continue;
        }
        if ip_try_exact_div(f, &candidate).is_some() && ip_try_exact_div(g, &candidate).is_some() {
            return candidate;
        }
    }
    unreachable!("CRT gcd terminates once the modulus exceeds the coefficients")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(coeffs: &[i64]) -> IPoly {
        ip_trim(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64((1 << 61) - 1));
        assert!(!is_prime_u64((1 << 62) - 1));
        assert!(is_prime_u64(2));
        assert!(!is_prime_u64(3215031751)); // strong pseudoprime to bases 2,3,5,7
        assert!(is_prime_u64(gcd_prime(0)));
        assert!(is_prime_u64(gcd_prime(3)));
    }

    #[test]
    fn modular_gcd_basics() {
        // gcd((1+t)^2, (1+t)(1+t^2)) = 1 + t
        let a = ip_mul(&ip(&[1, 1]), &ip(&[1, 1]));
        let b = ip_mul(&ip(&[1, 1]), &ip(&[1, 0, 1]));
        assert_eq!(ip_gcd_primitive(&a, &b), ip(&[1, 1]));
        // Coprime inputs
        assert_eq!(ip_gcd_primitive(&ip(&[0, 1]), &ip(&[1, 1])), ip(&[1]));
        // Large common factor with content interplay
        let common = ip(&[3, 0, -2, 5]);
        let a = ip_mul(&common, &ip(&[7, 1]));
        let b = ip_mul(&common, &ip(&[-4, 0, 9]));
        assert_eq!(ip_gcd_primitive(&ip_primitive(a), &ip_primitive(b)), ip(&[3, 0, -2, 5]));
    }

    #[test]
    fn exact_division_detects_failure() {
        let num = ip(&[1, 2, 1]);
        assert_eq!(ip_try_exact_div(&num, &ip(&[1, 1])), Some(ip(&[1, 1])));
        assert_eq!(ip_try_exact_div(&num, &ip(&[1, 2])), None);
        assert_eq!(ip_try_exact_div(&ip(&[2, 2]), &ip(&[2])), Some(ip(&[1, 1])));
    }
}

#[cfg(test)]
mod kronecker_tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn schoolbook(a: &[BigInt], b: &[BigInt]) -> IPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        ip_trim(out)
    }

    #[test]
    fn kronecker_matches_schoolbook() {
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..20 {
            let la = rng.gen_range(12..40);
            let lb = rng.gen_range(12..40);
            let a: IPoly = (0..la)
                .map(|_| BigInt::from(rng.gen_range(-1_000_000_i64..=1_000_000)))
                .collect();
            let b: IPoly = (0..lb)
                .map(|_| BigInt::from(rng.gen_range(-1_000_000_i64..=1_000_000)))
                .collect();
            assert_eq!(kronecker_mul(&a, &b), schoolbook(&a, &b));
        }
        // Huge-coefficient smoke test.
        let big = BigInt::from(1u64 << 62) * BigInt::from(1u64 << 62);
        let a: IPoly = (0..16).map(|i| &big * BigInt::from(i as i64 - 8)).collect();
        let b: IPoly = (0..16).map(|i| -&big * BigInt::from(i as i64 - 5)).collect();
        assert_eq!(kronecker_mul(&a, &b), schoolbook(&a, &b));
    }
}
