//! Dense polynomial arithmetic over GF(p), little-endian coefficient vectors.
//! Just enough to reduce products modulo the field modulus and to test
//! irreducibility by trial factorization.

fn trim(v: &mut Vec<u32>) {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
}

fn pmul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = ((out[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
        }
    }
    trim(&mut out);
    out
}

/// (quotient, remainder) of a by b; b need not be monic.
pub(crate) fn pdivrem(a: &[u32], b: &[u32], p: u32) -> (Vec<u32>, Vec<u32>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let mut bb = b.to_vec();
    trim(&mut bb);
    let db = bb.len() - 1;
    let lead = bb[db];
    let lead_inv = mod_inv(lead, p);
    if rem.len() <= db && !(rem.len() == 1 && db == 0) {
        return (vec![0], rem);
    }
    let mut quot = vec![0u32; rem.len().saturating_sub(db)];
    while rem.len() > db || (db == 0 && !(rem.len() == 1 && rem[0] == 0)) {
        let da = rem.len() - 1;
        if da < db || (rem.len() == 1 && rem[0] == 0) {
            break;
        }
        let coef = (rem[da] as u64 * lead_inv as u64 % p as u64) as u32;
        let shift = da - db;
        quot[shift] = coef;
        for (i, &bc) in bb.iter().enumerate() {
            let sub = (coef as u64 * bc as u64) % p as u64;
            let idx = i + shift;
            rem[idx] = ((rem[idx] as u64 + p as u64 - sub) % p as u64) as u32;
        }
        trim(&mut rem);
        if rem.len() == 1 && rem[0] == 0 {
            break;
        }
    }
    trim(&mut quot);
    (quot, rem)
}

pub(crate) fn pmulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let prod = pmul(a, b, p);
    let (_, mut rem) = pdivrem(&prod, modulus, p);
    rem.resize(modulus.len() - 1, 0);
    rem
}

fn mod_inv(a: u32, p: u32) -> u32 {
    // Fermat; p is prime and a nonzero.
    let mut acc = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

/// Trial factorization: a monic polynomial of degree d is irreducible iff no
/// monic polynomial of degree 1..=d/2 divides it.
pub(crate) fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let d = poly.len() - 1;
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    for e in 1..=d / 2 {
        let count = (p as u64).pow(e as u32);
        for idx in 0..count {
            let mut div = Vec::with_capacity(e + 1);
            let mut rest = idx;
            for _ in 0..e {
                div.push((rest % p as u64) as u32);
                rest /= p as u64;
            }
            div.push(1);
            let (_, rem) = pdivrem(poly, &div, p);
            if rem.len() == 1 && rem[0] == 0 {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divrem_exact() {
        // (x+1)(x+2) = x^2 + 3x + 2 = x^2 + 2 over GF(3)
        let prod = pmul(&[1, 1], &[2, 1], 3);
        assert_eq!(prod, vec![2, 0, 1]);
        let (q, r) = pdivrem(&prod, &[1, 1], 3);
        assert_eq!(r, vec![0]);
        assert_eq!(q, vec![2, 1]);
    }

    #[test]
    fn irreducibility_small_cases() {
        assert!(is_irreducible(&[1, 0, 1], 3)); // x^2+1 over GF(3)
        assert!(!is_irreducible(&[2, 0, 1], 3)); // x^2+2 = (x+1)(x+2)
        assert!(is_irreducible(&[1, 1, 1], 2)); // x^2+x+1 over GF(2)
        assert!(!is_irreducible(&[1, 0, 1], 2)); // x^2+1 = (x+1)^2
        assert!(!is_irreducible(&[1, 1, 0, 0, 1], 3)); // x^4+x+1 has the root 1
    }

    #[test]
    fn x4_x_2_is_irreducible_over_gf3() {
        assert!(is_irreducible(&[2, 1, 0, 0, 1], 3));
    }

    #[test]
    fn mulmod_reduces() {
        // x * x mod (x^2+1) = -1 = 2 over GF(3)
        let r = pmulmod(&[0, 1], &[0, 1], &[1, 0, 1], 3);
        assert_eq!(r, vec![2, 0]);
    }
}
