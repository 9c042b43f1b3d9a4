//! The squares acting on `F2[x1..x4]` with `|xi| = 1`.

use std::collections::BTreeSet;

use sqpd::steenrod::SteenrodElement;

pub type Mono = [u8; 4];
pub type Poly = BTreeSet<Mono>;

pub fn toggle(p: &mut Poly, m: Mono) {
    if !p.remove(&m) {
        p.insert(m);
    }
}

/// `Sq^k` on `F2[x1..x4]` with `|xi| = 1`: on `x^a` it is `C(a, k) x^{a+k}`, extended by Cartan.
pub fn sq(k: u32, p: &Poly) -> Poly {
    fn go(k: u32, i: usize, m: &Mono, cur: &mut Mono, out: &mut Poly) {
        if i == 4 {
            if k == 0 {
                toggle(out, *cur);
            }
            return;
        }
        let a = m[i] as u32;
        for ki in 0..=k.min(a) {
            if a & ki == ki {
                cur[i] = (a + ki) as u8;
                go(k - ki, i + 1, m, cur, out);
            }
        }
        cur[i] = m[i];
    }
    let mut out = Poly::new();
    for m in p {
        let mut cur = *m;
        go(k, 0, m, &mut cur, &mut out);
    }
    out
}

pub fn apply_word(word: &[u32], p: &Poly) -> Poly {
    word.iter().rev().fold(p.clone(), |acc, &k| sq(k, &acc))
}

pub fn apply_element(a: &SteenrodElement, p: &Poly) -> Poly {
    let mut out = Poly::new();
    for m in a.terms() {
        for x in apply_word(m.exponents(), p) {
            toggle(&mut out, x);
        }
    }
    out
}

pub fn inputs() -> Vec<Poly> {
    let mut out = Vec::new();
    for a in 0..=3u8 {
        for b in 0..=2u8 {
            for c in 0..=1u8 {
                for d in 0..=1u8 {
                    if a + b + c + d > 0 {
                        out.push(Poly::from([[a, b, c, d]]));
                    }
                }
            }
        }
    }
    out.push(Poly::from([[1, 1, 1, 1], [2, 1, 1, 0]]));
    out
}

pub fn compositions(n: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}
