#![allow(dead_code)]

use std::collections::BTreeMap;

use qflag_core::flagext::ExteriorAlgebra;
use qflag_core::{Echelon, Root, SparseVec, Word};

/// Dimensions of the quadratic algebra in degrees `0..=max_k`, by Gaussian
/// elimination of every `prefix . relation . suffix` inside the full word
/// space, one weight block at a time.
pub fn quotient_dims(alg: &ExteriorAlgebra, max_k: usize) -> Vec<usize> {
    let mut out = vec![1, 6];
    for k in 2..=max_k {
        let idx = |w: &[u8]| w.iter().fold(0usize, |acc, &l| acc * 6 + l as usize);
        let mut blocks: BTreeMap<Root, Echelon> = BTreeMap::new();
        let n = 6usize.pow(k as u32 - 2);
        for r in alg.system().rules() {
            let rel = r.relation();
            for pre_len in 0..=k - 2 {
                for m in 0..n {
                    let mut ctx = vec![0u8; k - 2];
                    let mut x = m;
                    for slot in ctx.iter_mut().rev() {
                        *slot = (x % 6) as u8;
                        x /= 6;
                    }
                    let (p, s) = ctx.split_at(pre_len);
                    let mut v = SparseVec::new();
                    let mut wt = Root::ZERO;
                    for (w, c) in rel.terms() {
                        let full: Vec<u8> = p.iter().chain(w.0.iter()).chain(s.iter()).copied().collect();
                        wt = alg.word_weight(&Word(full.clone()));
                        v.insert(idx(&full), c.clone());
                    }
                    blocks.entry(wt).or_default().insert(&v).unwrap();
                }
            }
        }
        let rank: usize = blocks.values().map(Echelon::rank).sum();
        out.push(6usize.pow(k as u32) - rank);
    }
    out.truncate(max_k + 1);
    out
}
