//! Randomized properties over the public API: the zero-list file format is
//! stable under one quantization, characters behave like characters on
//! every input, grid refinement reuses sample points bitwise, and linear
//! combinations of reconstructions act coefficientwise.

use proptest::prelude::*;

use prime_interference::lfunction::{ZeroSource, export_zeros, import_zeros};
use prime_interference::{
    CharacterId, Convention, DirichletCharacter, Grid, ZeroList, combine, reconstruct,
};

// ---- strategies ----

/// Structurally valid (modulus, label) pairs with label coprime to modulus.
fn character_id() -> impl Strategy<Value = (u64, u64)> {
    (1u64..=24).prop_flat_map(|q| {
        let labels: Vec<u64> = (1..=q).filter(|l| gcd(*l, q) == 1).collect();
        (Just(q), proptest::sample::select(labels))
    })
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Strictly increasing ordinates with gaps far above the validation floor.
fn gamma_list() -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec(1e-3..50.0f64, 0..40).prop_map(|deltas| {
        let mut acc = 0.0;
        deltas
            .into_iter()
            .map(|d| {
                acc += d;
                acc
            })
            .collect()
    })
}

fn zero_list((q, l): (u64, u64), gammas: Vec<f64>) -> ZeroList {
    let t_max = gammas.last().copied().unwrap_or(0.0) + 1.0;
    ZeroList::new(CharacterId::new(q, l), gammas, t_max, ZeroSource::Computed)
        .expect("strategy produces valid lists")
}

// ---- file format ----

proptest! {
    /// Writing, reading, and writing again reproduces the file byte for
    /// byte: the nine-decimal quantization applied by the first write is
    /// idempotent, and the header survives the trip.
    #[test]
    fn zero_file_roundtrip_is_idempotent(id in character_id(), gammas in gamma_list()) {
        let list = zero_list(id, gammas);
        let mut first = Vec::new();
        export_zeros(&list, &mut first).expect("in-memory write");
        let reread = import_zeros(first.as_slice()).expect("own output parses");
        prop_assert_eq!(reread.character(), list.character());
        prop_assert_eq!(reread.len(), list.len());
        let mut second = Vec::new();
        export_zeros(&reread, &mut second).expect("in-memory write");
        prop_assert_eq!(first, second);
    }

    /// The quantization error of the file format never exceeds half an ulp
    /// of the ninth decimal.
    #[test]
    fn zero_file_quantization_is_bounded(id in character_id(), gammas in gamma_list()) {
        let list = zero_list(id, gammas);
        let mut bytes = Vec::new();
        export_zeros(&list, &mut bytes).expect("in-memory write");
        let reread = import_zeros(bytes.as_slice()).expect("own output parses");
        for (a, b) in list.gammas().iter().zip(reread.gammas()) {
            prop_assert!((a - b).abs() <= 5.1e-10, "{a} drifted to {b}");
        }
    }
}

// ---- zero-list slicing ----

proptest! {
    #[test]
    fn truncation_keeps_exactly_the_low_zeros(
        id in character_id(),
        gammas in gamma_list(),
        height in 0.0..2000.0f64,
    ) {
        let list = zero_list(id, gammas);
        let cut = list.truncated(height);
        let expected: Vec<f64> =
            list.gammas().iter().copied().filter(|&g| g <= height).collect();
        prop_assert_eq!(cut.gammas(), expected.as_slice());
        prop_assert!(cut.t_max() <= height);
    }

    #[test]
    fn leading_takes_a_prefix(id in character_id(), gammas in gamma_list(), n in 0usize..50) {
        let list = zero_list(id, gammas);
        let head = list.leading(n);
        let keep = n.min(list.len());
        prop_assert_eq!(head.gammas(), &list.gammas()[..keep]);
    }
}

// ---- character laws ----

proptest! {
    /// chi is q-periodic, vanishes exactly on the non-units, and lies on
    /// the unit circle elsewhere.
    #[test]
    fn characters_are_periodic_unit_valued(id in character_id(), n in -300i64..300, k in -3i64..=3) {
        let (q, l) = id;
        let chi = DirichletCharacter::from_label(q, l).expect("valid label");
        let shifted = n + k * q as i64;
        prop_assert_eq!(chi.evaluate(n), chi.evaluate(shifted));
        let value = chi.evaluate(n);
        let coprime = gcd(n.rem_euclid(q as i64) as u64, q) == 1;
        prop_assert_eq!(value.is_zero(), !coprime);
        if coprime {
            prop_assert!((value.to_complex().norm() - 1.0).abs() < 1e-15);
        }
    }

    /// chi(mn) = chi(m) chi(n) after complex conversion.
    #[test]
    fn characters_are_completely_multiplicative(id in character_id(), m in 1i64..400, n in 1i64..400) {
        let (q, l) = id;
        let chi = DirichletCharacter::from_label(q, l).expect("valid label");
        let product = chi.evaluate(m * n).to_complex();
        let split = chi.evaluate(m).to_complex() * chi.evaluate(n).to_complex();
        prop_assert!((product - split).norm() < 1e-12, "chi({m}*{n}) = {product} vs {split}");
    }

    /// The conjugate character is the complex conjugate pointwise.
    #[test]
    fn conjugate_character_conjugates_values(id in character_id(), n in -300i64..300) {
        let (q, l) = id;
        let chi = DirichletCharacter::from_label(q, l).expect("valid label");
        let bar = chi.conjugate();
        let a = chi.evaluate(n).to_complex();
        let b = bar.evaluate(n).to_complex();
        prop_assert!((a.conj() - b).norm() < 1e-12, "conj {a} vs {b}");
    }
}

// ---- grids ----

proptest! {
    /// Doubling the resolution reuses every existing sample point bitwise,
    /// so refined plots line up exactly with coarse ones.
    #[test]
    fn grid_refinement_shares_points_bitwise(
        x_min in 1.5..10.0f64,
        span in 1.0..80.0f64,
        n in 2usize..300,
        log_scale in proptest::bool::ANY,
    ) {
        let x_max = x_min + span;
        let build = |points| if log_scale {
            Grid::log_uniform(x_min, x_max, points)
        } else {
            Grid::linear(x_min, x_max, points)
        };
        let coarse = build(n).expect("valid grid");
        let fine = build(2 * n - 1).expect("valid grid");
        let cp = coarse.points();
        let fp = fine.points();
        for (i, &x) in cp.iter().enumerate() {
            prop_assert_eq!(x.to_bits(), fp[2 * i].to_bits(), "index {} of {}", i, n);
        }
    }
}

// ---- linear combinations ----

proptest! {
    /// Combining a reconstruction with its own negation cancels to exact
    /// positive zero everywhere, and a scalar multiple acts pointwise.
    #[test]
    fn combinations_act_coefficientwise(gammas in proptest::collection::vec(0.5..40.0f64, 1..8), c in -3.0..3.0f64) {
        let mut sorted = gammas;
        sorted.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
        sorted.dedup_by(|a, b| (*a - *b).abs() < 1e-3);
        let list = ZeroList::new(
            CharacterId::new(4, 3),
            sorted,
            41.0,
            ZeroSource::Computed,
        ).expect("sorted separated list");
        let grid = Grid::log_uniform(2.0, 30.0, 60).expect("valid grid");
        let r = reconstruct(&list, &grid, Convention::Symmetric, false, None)
            .expect("real-character reconstruction");

        let cancelled = combine(&[r.clone(), r.clone()], &[1.0, -1.0]).expect("same layout");
        for (&s, &t) in cancelled.s_values().iter().zip(cancelled.t_values()) {
            prop_assert_eq!(s.to_bits(), 0.0f64.to_bits());
            prop_assert_eq!(t.to_bits(), 0.0f64.to_bits());
        }

        let scaled = combine(&[r.clone()], &[c]).expect("single part");
        for (&s, &s0) in scaled.s_values().iter().zip(r.s_values()) {
            prop_assert_eq!(s.to_bits(), (c * s0).to_bits());
        }
    }
}
