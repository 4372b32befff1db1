mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;
use qflag_core::flagext::{associated_graded, build_relations, derive_relations_via_omega};
use qflag_core::linalg::sparse_from_dense;
use qflag_core::qpair::{
    coset, flag_generator, flag_generators, functional_table, ideal_generators, omega, pair, pair_word, right_act,
    right_act_deg2, u_rank, FunctionalId,
};
use qflag_core::{Coefficient, CotangentVector, Echelon, GeneratorWord, Letter, Root, TensorSquare, Word};

type Dense = Vec<Vec<Coefficient>>;

fn identity(n: usize) -> Dense {
    (0..n).map(|i| (0..n).map(|j| if i == j { Coefficient::one() } else { Coefficient::zero() }).collect()).collect()
}

fn kron(a: &Dense, b: &Dense) -> Dense {
    let (n, m) = (a.len(), b.len());
    let mut out = vec![vec![Coefficient::zero(); n * m]; n * m];
    for i in 0..n {
        for j in 0..n {
            if a[i][j].is_zero() {
                continue;
            }
            for k in 0..m {
                for l in 0..m {
                    out[i * m + k][j * m + l] = &a[i][j] * &b[k][l];
                }
            }
        }
    }
    out
}

fn mul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    let mut out = vec![vec![Coefficient::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] = &out[i][j] + &(&a[i][k] * &b[k][j]);
                }
            }
        }
    }
    out
}

fn lin(a: &Dense, ca: &Coefficient, b: &Dense, cb: &Coefficient) -> Dense {
    a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(s, t)| &(ca * s) + &(cb * t)).collect()).collect()
}

fn unit(i: usize, j: usize) -> Dense {
    let mut m = vec![vec![Coefficient::zero(); 3]; 3];
    m[i - 1][j - 1] = Coefficient::one();
    m
}

fn diag(e: [i32; 3]) -> Dense {
    (0..3).map(|i| (0..3).map(|j| if i == j { Coefficient::q_pow(e[i]) } else { Coefficient::zero() }).collect()).collect()
}

fn power(m: &Dense, k: usize) -> Dense {
    (0..k).fold(identity(1), |acc, _| kron(&acc, m))
}

/// `rho^(x)k` of a skew-primitive element with coproduct `x (x) g + 1 (x) x`.
fn skew(x: &Dense, g: &Dense, k: usize) -> Dense {
    if k == 1 {
        return x.clone();
    }
    let a = kron(x, &power(g, k - 1));
    let b = kron(&identity(3), &skew(x, g, k - 1));
    lin(&a, &Coefficient::one(), &b, &Coefficient::one())
}

/// Every family member on the `k`-th tensor power, built only from the
/// generators' coproducts and algebra products.
fn tensor_rep(k: usize) -> BTreeMap<FunctionalId, Dense> {
    use FunctionalId::*;
    let q = Coefficient::q_pow;
    let one = Coefficient::one();
    let (k1, k2) = (diag([-1, 1, 0]), diag([0, -1, 1]));
    let (k1i, k2i) = (diag([1, -1, 0]), diag([0, 1, -1]));
    let (e1, e2) = (skew(&unit(2, 1), &k1, k), skew(&unit(3, 2), &k2, k));
    let fa1 = skew(&mul(&k1, &unit(1, 2)), &k1, k);
    let fa2 = skew(&mul(&k2, &unit(2, 3)), &k2, k);
    let (pk1, pk2) = (power(&k1, k), power(&k2, k));
    let f1 = mul(&power(&k1i, k), &fa1);
    let f2 = mul(&power(&k2i, k), &fa2);
    let e12 = lin(&mul(&e2, &e1), &one, &mul(&e1, &e2), &-q(-1));
    let bracket = lin(&mul(&f1, &f2), &one, &mul(&f2, &f1), &-q(-1));
    let k1k2 = mul(&pk1, &pk2);
    let fa12 = lin(&mul(&k1k2, &bracket), &q(-1), &identity(3usize.pow(k as u32)), &Coefficient::zero());
    BTreeMap::from([
        (Eps, identity(3usize.pow(k as u32))),
        (E1, e1.clone()),
        (E2, e2.clone()),
        (E12, e12),
        (Fa1, fa1),
        (Fa2, fa2.clone()),
        (Fa12, fa12),
        (K1, pk1.clone()),
        (K2, pk2),
        (K1K2, k1k2),
        (E2K1, mul(&e2, &pk1)),
        (Fa2K1, mul(&fa2, &pk1)),
    ])
}

fn words(k: usize) -> Vec<Vec<(usize, usize)>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=3).flat_map(move |i| {
                    let w = w.clone();
                    (1..=3).map(move |j| {
                        let mut v = w.clone();
                        v.push((i, j));
                        v
                    })
                })
            })
            .collect();
    }
    out
}

fn u_word(w: &[(usize, usize)]) -> Word {
    Word(w.iter().map(|&(i, j)| u_rank(i, j)).collect())
}

#[test]
fn pairing_matches_tensor_power_representation() {
    for k in 1..=3 {
        let rep = tensor_rep(k);
        for w in words(k) {
            let row = w.iter().fold(0, |acc, &(i, _)| acc * 3 + i - 1);
            let col = w.iter().fold(0, |acc, &(_, j)| acc * 3 + j - 1);
            for id in FunctionalId::ALL {
                assert_eq!(pair_word(id, &u_word(&w)), rep[&id][row][col], "{} on {w:?}", id.name());
            }
        }
    }
}

#[test]
fn family_coproducts_are_coassociative_and_counital() {
    let t = functional_table();
    for f in t.members() {
        let mut left: BTreeMap<(FunctionalId, FunctionalId, FunctionalId), Coefficient> = BTreeMap::new();
        let mut right = left.clone();
        for (l, r, c) in &f.coproduct {
            for (ll, lr, c2) in &t.get(*l).coproduct {
                let e = left.entry((*ll, *lr, *r)).or_default();
                *e = &*e + &(c * c2);
            }
            for (rl, rr, c2) in &t.get(*r).coproduct {
                let e = right.entry((*l, *rl, *rr)).or_default();
                *e = &*e + &(c * c2);
            }
        }
        left.retain(|_, c| !c.is_zero());
        right.retain(|_, c| !c.is_zero());
        assert_eq!(left, right, "{}", f.id.name());

        let mut via_left: BTreeMap<FunctionalId, Coefficient> = BTreeMap::new();
        let mut via_right = via_left.clone();
        for (l, r, c) in &f.coproduct {
            let e = via_left.entry(*r).or_default();
            *e = &*e + &(c * &t.get(*l).counit);
            let e = via_right.entry(*l).or_default();
            *e = &*e + &(c * &t.get(*r).counit);
        }
        via_left.retain(|_, c| !c.is_zero());
        via_right.retain(|_, c| !c.is_zero());
        let expected = BTreeMap::from([(f.id, Coefficient::one())]);
        assert_eq!(via_left, expected, "{}", f.id.name());
        assert_eq!(via_right, expected, "{}", f.id.name());
    }
}

fn literal_omega(y: &GeneratorWord) -> TensorSquare {
    let mut out = TensorSquare::zero();
    for (w, c) in y.poly().terms() {
        let n = w.len();
        for m in 0..3usize.pow(n as u32) {
            let mut ks = vec![0; n];
            let mut x = m;
            for k in ks.iter_mut().rev() {
                *k = x % 3 + 1;
                x /= 3;
            }
            let (mut l, mut r) = (Vec::new(), Vec::new());
            for (p, &rank) in w.0.iter().enumerate() {
                let (i, j) = (rank as usize / 3 + 1, rank as usize % 3 + 1);
                l.push((i, ks[p]));
                r.push((ks[p], j));
            }
            let (cl, cr) = (coset(&GeneratorWord::monomial(&l)), coset(&GeneratorWord::monomial(&r)));
            for a in cl.support() {
                for b in cr.support() {
                    let slot = &mut out.0[a.rank() as usize][b.rank() as usize];
                    *slot = &*slot + &(&(c * cl.get(a)) * cr.get(b));
                }
            }
        }
    }
    out
}

#[test]
fn omega_matches_literal_coproduct_expansion() {
    for (name, z) in flag_generators() {
        let y = z.plus();
        assert_eq!(omega(&y).unwrap(), literal_omega(&y), "{name}");
    }
    for g in ideal_generators().iter().step_by(31) {
        assert_eq!(omega(&g.element).unwrap(), literal_omega(&g.element), "{}", g.label);
    }
}

/// `(v . a)_X = sum over (L, R, c) in Delta X with L tangent of c v_L <R, a>`.
fn derived_action(v: &CotangentVector, a: &GeneratorWord) -> CotangentVector {
    let t = functional_table();
    let mut out = CotangentVector::zero();
    for x in Letter::ALL {
        let f = t.get(FunctionalId::tangent(x));
        let mut acc = Coefficient::zero();
        for (l, r, c) in &f.coproduct {
            if let Some(ll) = l.as_letter() {
                acc = &acc + &(&(c * v.get(ll)) * &pair(*r, a));
            }
        }
        out.0[x.rank() as usize] = acc;
    }
    out
}

#[test]
fn right_action_matches_pairing_formula() {
    for l in Letter::ALL {
        let v = CotangentVector::basis(l);
        for k in 1..=2 {
            for w in words(k) {
                let a = GeneratorWord::monomial(&w);
                assert_eq!(right_act(&v, &a), derived_action(&v, &a), "{l} . {a}");
            }
        }
        for (name, z) in flag_generators() {
            assert_eq!(right_act(&v, &z), derived_action(&v, &z), "{l} . {name}");
        }
    }
}

#[test]
fn omega_is_compatible_with_the_right_ideal() {
    let a = build_relations();
    let span = derive_relations_via_omega(&a).unwrap().omega_span;
    let bs = [flag_generator(1, 1, 2), flag_generator(2, 3, 2), flag_generator(1, 2, 2)];
    for g in ideal_generators().iter().step_by(13) {
        for b in &bs {
            let t = omega(&(&g.element * b)).unwrap();
            assert!(span.contains(&sparse_from_dense(&t.flatten())).unwrap(), "{} * {b}", g.label);
        }
    }
}

#[test]
fn relations_form_a_right_submodule() {
    let a = build_relations();
    let span = a.relation_span().unwrap();
    for r in a.system().rules() {
        let t = TensorSquare::from_poly(&r.relation());
        for (name, z) in flag_generators() {
            let img = right_act_deg2(&t, &z);
            assert!(span.contains(&sparse_from_dense(&img.flatten())).unwrap(), "{} . {name}", a.render(&r.relation()));
        }
    }
}

#[test]
fn elimination_oracle_agrees_on_confluent_systems() {
    let graded = associated_graded();
    let classical = build_relations().at_q_one().unwrap();
    for alg in [&graded, &classical] {
        assert!(alg.system().is_confluent());
        let rewrite: Vec<usize> = (0..=4).map(|k| alg.basis(k).len()).collect();
        assert_eq!(common::quotient_dims(alg, 4), rewrite);
    }
}

#[test]
fn elimination_oracle_on_encoded_relations() {
    let a = build_relations();
    assert_eq!(common::quotient_dims(&a, 3), [1, 6, 15, 16]);
    let rewrite: Vec<usize> = (0..=3).map(|k| a.basis(k).len()).collect();
    assert_eq!(rewrite, [1, 6, 15, 20]);
}

#[test]
fn torsion_free_count_from_wedge_kernel() {
    let a = build_relations();
    let weights: Vec<Root> = Letter::ALL.iter().map(|&l| a.word_weight(&a.word(&[l]))).collect();
    let mut blocks: BTreeMap<Root, (usize, Echelon)> = BTreeMap::new();
    for x in Letter::ALL {
        for y in Letter::ALL {
            let w = a.word(&[x, y]);
            let img = a.normal_form(&a.monomial(&[x, y]));
            let v = img.terms().map(|(w, c)| (w.0[0] as usize * 6 + w.0[1] as usize, c.clone())).collect();
            let e = blocks.entry(a.word_weight(&w)).or_default();
            e.0 += 1;
            e.1.insert(&v).unwrap();
        }
    }
    let kernel = |(n, e): &(usize, Echelon)| n - e.rank();
    assert_eq!(blocks.values().map(kernel).sum::<usize>(), 21);
    assert_eq!(weights.iter().map(|w| kernel(&blocks[w])).sum::<usize>(), 6);
    assert_eq!(weights.iter().map(|w| blocks[w].0).sum::<usize>(), 12);
}

fn index_pair() -> impl Strategy<Value = (usize, usize)> {
    (1..=3usize, 1..=3usize)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pairing_splits_along_coproduct(
        a in prop::collection::vec(index_pair(), 0..3),
        b in prop::collection::vec(index_pair(), 0..3),
    ) {
        let t = functional_table();
        let (wa, wb) = (GeneratorWord::monomial(&a), GeneratorWord::monomial(&b));
        let ab = &wa * &wb;
        for f in t.members() {
            let split: Coefficient = f.coproduct.iter().map(|(l, r, c)| &(c * &pair(*l, &wa)) * &pair(*r, &wb)).sum();
            prop_assert_eq!(pair(f.id, &ab), split);
        }
    }

    #[test]
    fn module_action_is_associative(
        a in prop::collection::vec(index_pair(), 1..3),
        b in prop::collection::vec(index_pair(), 1..3),
        l in 0u8..6,
    ) {
        let v = CotangentVector::basis(Letter::from_rank(l));
        let (wa, wb) = (GeneratorWord::monomial(&a), GeneratorWord::monomial(&b));
        prop_assert_eq!(right_act(&right_act(&v, &wa), &wb), derived_action(&v, &(&wa * &wb)));
    }
}
