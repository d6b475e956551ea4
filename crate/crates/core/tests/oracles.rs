use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use plethykit_core::hookcontent::{dimension, p_poly};
use plethykit_core::oracle::{
    specialize_bialternant, specialize_ssyt, ssyt_count, DEFAULT_SSYT_BUDGET,
};
use plethykit_core::plethysm::{
    character_data, gl_isomorphic, sl_character, sl_isomorphic, LocalCache,
};
use plethykit_core::{Partition, PlethysmInstance, QPolynomial, SLInstance};

fn instances(max_weight: usize, max_d: usize) -> Vec<SLInstance> {
    let mut out = Vec::new();
    for n in 0..=max_weight {
        for lambda in Partition::all_of_weight(n) {
            for d in lambda.length().saturating_sub(1)..=max_d {
                out.push(SLInstance::new(lambda.clone(), d).unwrap());
            }
        }
    }
    out
}

/// `x₁^{|λ|δ₁} x₂^{|λ|δ₂} s_λ(1, q, …, q^d)` at `q = x₂/x₁`, from tableaux.
fn oracle_character(inst: &PlethysmInstance) -> BTreeMap<(usize, usize), BigInt> {
    let spec = specialize_ssyt(inst.lambda(), inst.d(), DEFAULT_SSYT_BUDGET).unwrap();
    let w = inst.lambda().weight();
    let (e1, e2) = (w * inst.delta().0, w * inst.delta().1);
    spec.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| ((e1 - k, e2 + k), c.clone()))
        .collect()
}

#[test]
fn three_routes_agree() {
    for inst in instances(6, 5) {
        let (lambda, d) = (inst.lambda(), inst.d());
        let hc = p_poly(lambda, d).unwrap().shift(lambda.b_statistic());
        assert_eq!(specialize_bialternant(lambda, d).unwrap(), hc, "{inst:?}");
        assert_eq!(
            specialize_ssyt(lambda, d, DEFAULT_SSYT_BUDGET).unwrap(),
            hc,
            "{inst:?}"
        );
    }
}

#[test]
fn dimension_counts_tableaux() {
    for inst in instances(5, 4) {
        let count = ssyt_count(inst.lambda(), inst.d(), DEFAULT_SSYT_BUDGET).unwrap();
        assert_eq!(
            dimension(inst.lambda(), inst.d()).unwrap(),
            BigInt::from(count)
        );
    }
}

#[test]
fn sl_character_matches_tableaux() {
    let cache = LocalCache::new();
    for inst in instances(5, 4) {
        let spec = specialize_ssyt(inst.lambda(), inst.d(), DEFAULT_SSYT_BUDGET).unwrap();
        let base = -((inst.lambda().weight() * inst.d()) as i64);
        let expected: BTreeMap<i64, BigInt> = spec
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (base + 2 * k as i64, c.clone()))
            .collect();
        assert_eq!(sl_character(&cache, &inst).unwrap(), expected, "{inst:?}");
    }
}

#[test]
fn isomorphism_matches_characters_exhaustively() {
    let cache = LocalCache::new();
    let mut pool = Vec::new();
    for inst in instances(3, 3) {
        for shift in 0..=1 {
            let delta = (inst.d() + shift, shift);
            pool.push(PlethysmInstance::new(inst.lambda().clone(), delta).unwrap());
        }
    }
    let chars: Vec<_> = pool.iter().map(oracle_character).collect();
    let mut hits = 0;
    for (i, a) in pool.iter().enumerate() {
        assert_eq!(
            character_data(&cache, a).unwrap().expand(),
            chars[i],
            "{a:?}"
        );
        for (j, b) in pool.iter().enumerate() {
            let gl = gl_isomorphic(&cache, a, b).unwrap();
            assert_eq!(gl, chars[i] == chars[j], "{a:?} vs {b:?}");
            if gl && i != j {
                hits += 1;
            }
        }
    }
    // the pool must exercise nontrivial isomorphisms
    assert!(hits > 0);
}

#[test]
fn sl_matches_specializations_up_to_shift() {
    let cache = LocalCache::new();
    let pool = instances(4, 4);
    let normalized: Vec<QPolynomial> = pool
        .iter()
        .map(|i| {
            let s = specialize_bialternant(i.lambda(), i.d()).unwrap();
            let low = s.coeffs().iter().position(|c| !c.is_zero()).unwrap();
            QPolynomial::from_coeffs(s.coeffs()[low..].to_vec())
        })
        .collect();
    for (i, a) in pool.iter().enumerate() {
        for (j, b) in pool.iter().enumerate() {
            assert_eq!(
                sl_isomorphic(&cache, a, b).unwrap(),
                normalized[i] == normalized[j]
            );
        }
    }
}
