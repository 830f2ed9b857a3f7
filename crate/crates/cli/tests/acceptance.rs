//! Acceptance suite: every exit criterion of the engine, one test per
//! criterion, each printing a pass/fail line. All comparisons are exact
//! rational arithmetic with tolerance zero.
//!
//! Run with `cargo test -p nilva --test acceptance -- --nocapture` to see
//! the per-criterion lines.

use nilva::config::{Suite, SuiteConfig, VariantSel};
use nilva::{report, suites};
use nilva_core::fields::FieldName;
use nilva_core::kernels::{self, Window};
use nilva_core::report::CheckStatus;
use nilva_core::{cartan, forms, group, lie, modes, verify, Params, Variant};
use rayon::prelude::*;

fn criterion(n: u32, ok: bool, what: &str) {
    println!("criterion {n}: {} - {what}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {n} failed: {what}");
}

/// Criterion 1: Jacobi and pairing invariance over all basis triples, (k,j) in [-5,5]^2.
#[test]
fn criterion_1_finite_lie_algebra() {
    let mut ok = true;
    for k in -5..=5 {
        for j in -5..=5 {
            let p = Params::new(k, j);
            ok &= lie::check_jacobi_finite(p).passed();
            ok &= lie::check_pairing_invariance(p).passed();
            ok &= cartan::check_frame_structure_constants(p).passed();
        }
    }
    criterion(1, ok, "finite Lie algebra: Jacobi + pairing invariance on [-5,5]^2");
}

/// Criterion 2: symbolic associativity in 18 indeterminates on [-3,3]^2; identity and
/// inverse axioms on 100 seeded rational points per parameter pair.
#[test]
fn criterion_2_group_law() {
    let pairs: Vec<(i64, i64)> = (-3..=3)
        .flat_map(|k| (-3..=3).map(move |j| (k, j)))
        .collect();
    let ok = pairs
        .par_iter()
        .all(|&(k, j)| {
            let p = Params::new(k, j);
            group::check_associativity(p, group::AssocMode::Symbolic).passed()
                && group::check_identity_inverse(p, 100, 1).passed()
                && group::check_heisenberg_embedding(p, 50, 1).passed()
        });
    criterion(2, ok, "group law: symbolic associativity + axioms on seeded points");
}

/// Criterion 3: left-invariance (symbolic translating element) and structure-constant
/// agreement of the coframe on [-3,3]^2; d^2 = 0.
#[test]
fn criterion_3_forms() {
    let pairs: Vec<(i64, i64)> = (-3..=3)
        .flat_map(|k| (-3..=3).map(move |j| (k, j)))
        .collect();
    let ok = pairs
        .par_iter()
        .all(|&(k, j)| {
            let p = Params::new(k, j);
            forms::check_left_invariance_symbolic(p).passed()
                && forms::check_maurer_cartan(p).passed()
                && forms::check_d_squared(p, 100, 1).passed()
                && forms::check_coframe_unipotent(p).passed()
        });
    criterion(3, ok, "forms: symbolic left-invariance + structure constants + d^2 = 0");
}

/// Criterion 4: the four kernel derivative identities at N = 8, 12, 16 (L = 3), the
/// rl/t symmetries, and the failing negative control.
#[test]
fn criterion_4_kernels() {
    let mut ok = true;
    for n in [8, 12, 16] {
        let w = Window::new(n, 3);
        for r in kernels::check_kernel_identities(w).unwrap() {
            ok &= r.passed();
        }
        for r in kernels::check_kernel_symmetries(w).unwrap() {
            ok &= r.passed();
        }
        let negative = kernels::check_negative_control(w).unwrap();
        ok &= negative.passed() && !negative.notes.is_empty();
    }
    criterion(4, ok, "kernels: derivative identities at N = 8, 12, 16 + symmetries + negative control");
}

/// Criterion 5: mode algebra -- skew-symmetry and per-monomial Jacobi (window 12) over
/// all generator triples with modes in [-4,4], for the six parameter pairs,
/// under the corrected table; including the published proof's triple family.
#[test]
fn criterion_5_mode_algebra() {
    let param_list = [(0i64, 0i64), (0, 1), (1, 0), (1, 1), (2, 3), (-1, 2)];
    let mut ok = true;
    for (k, j) in param_list {
        let p = Params::new(k, j);
        ok &= modes::check_skew_symmetry(p, 4, 12, Variant::Corrected)
            .unwrap()
            .passed();
        let gens = modes::generator_grid(4);
        let jacobi_ok = gens.par_iter().all(|a| {
            gens.iter().all(|b| {
                gens.iter().all(|c| {
                    modes::jacobi_triple_failure(*a, *b, *c, p, 12, Variant::Corrected)
                        .unwrap()
                        .is_none()
                })
            })
        });
        ok &= jacobi_ok;
        // the proof's displayed cancellation, instantiated across the grid
        let proof_ok = (-4..=4i64).into_par_iter().all(|l| {
            (-4..=4i64).all(|n| {
                (-4..=4i64).all(|m| {
                    modes::jacobi_triple_failure(
                        modes::Generator::y(1, l),
                        modes::Generator::y(1, n),
                        modes::Generator::y(3, m),
                        p,
                        12,
                        Variant::Corrected,
                    )
                    .unwrap()
                    .is_none()
                })
            })
        });
        ok &= proof_ok;
    }
    criterion(5, ok, "mode algebra: skew + exact Jacobi on modes in [-4,4]^3, window 12, corrected");
}

/// Criterion 6: the commutator table -- field commutators equal the expected kernel
/// combinations for every field pair at N = 6, L = 3, for the five parameter
/// pairs; the (0,0) case is the pure log table, the (0,1) case the
/// antisymmetric-tensor table.
#[test]
fn criterion_6_field_commutators() {
    let win = Window::new(6, 3);
    let param_list = [(0i64, 0i64), (0, 1), (1, 0), (1, 1), (2, 3)];
    let mut ok = true;
    for (k, j) in param_list {
        let p = Params::new(k, j);
        let mut pairs = Vec::new();
        for a in FieldName::all() {
            for b in FieldName::all() {
                pairs.push((a, b));
            }
        }
        let pair_ok = pairs.par_iter().all(|(a, b)| {
            verify::theorem_pair_failure(*a, *b, p, win, Variant::Corrected, 14)
                .unwrap()
                .is_none()
        });
        ok &= pair_ok;
    }
    // the twisted-torus collapse, assembled independently
    ok &= verify::verify_twisted_torus_case(Params::new(0, 1), win, Variant::Corrected, 14)
        .unwrap()
        .passed();
    // the torus case collapses to the log kernel alone: every expected term
    // besides [x_i, y_i] vanishes at (0,0)
    ok &= verify::verify_theorem_principal(Params::new(0, 0), win, Variant::Corrected, 14)
        .unwrap()
        .passed();
    criterion(6, ok, "field commutator table at N = 6 for five parameter pairs + special cases");
}

/// Criterion 7: the currents built from the coordinate fields satisfy the affine
/// relations, and the two computation routes agree.
#[test]
fn criterion_7_current_algebra() {
    let win = Window::new(6, 3);
    let param_list = [(0i64, 0i64), (0, 1), (1, 0), (1, 1), (2, 3)];
    let mut ok = true;
    for (k, j) in param_list {
        let p = Params::new(k, j);
        let mut pairs = Vec::new();
        for a in verify::CurrentName::all() {
            for b in verify::CurrentName::all() {
                pairs.push((a, b));
            }
        }
        ok &= pairs.par_iter().all(|(a, b)| {
            verify::current_pair_failure(*a, *b, p, win, Variant::Corrected, 14)
                .unwrap()
                .is_none()
        });
        let sq_pairs: Vec<_> = FieldName::all()
            .into_iter()
            .flat_map(|a| FieldName::all().into_iter().map(move |b| (a, b)))
            .collect();
        ok &= sq_pairs.par_iter().all(|(a, b)| {
            verify::consistency_square_failure(*a, *b, p, win, Variant::Corrected, 14)
                .unwrap()
                .is_none()
        });
    }
    criterion(7, ok, "current algebra + two-route consistency square at N = 6");
}

/// Criterion 8: the delta-expansion lemma holds with the 1/j! factor for N = 0..3 and
/// fails without it for N >= 2; both outcomes are reported.
#[test]
fn criterion_8_taylor_lemma() {
    let p = Params::new(1, 1);
    let win = Window::new(6, 3);
    let mut ok = true;
    for (label, field) in verify::taylor_sample_fields(p).unwrap() {
        let (with_fact, as_printed) =
            verify::check_taylor_lemma(&field, &label, 3, p, win, 14).unwrap();
        ok &= with_fact.passed();
        ok &= as_printed.status == CheckStatus::Reported;
        ok &= as_printed.notes.iter().any(|l| l.contains("N=0 holds"));
        ok &= as_printed.notes.iter().any(|l| l.contains("N=1 holds"));
        ok &= as_printed.notes.iter().any(|l| l.contains("N=2 fails"));
        ok &= as_printed.notes.iter().any(|l| l.contains("N=3 fails"));
    }
    criterion(8, ok, "delta-expansion lemma: passes with 1/j!, fails as printed for N >= 2");
}

/// Criterion 9: typo adjudication under `--variant both`: the as-written table fails
/// at least one of the skew/field checks, the corrected table passes all,
/// and the diff section names the [w2, y^3_m] entry.
#[test]
fn criterion_9_variant_adjudication() {
    let cfg = SuiteConfig {
        suites: vec![Suite::Modes, Suite::Fields],
        params: Some((1, 1)),
        window: 4,
        monomial_window: 10,
        mode_grid: 2,
        variant: VariantSel::Both,
        ..SuiteConfig::default()
    };
    let (results, diff) = suites::run_all(&cfg).unwrap();
    let corrected_all_pass = results
        .iter()
        .filter(|r| r.variant == Some("corrected"))
        .all(|r| r.passed());
    let as_written_flagged = results
        .iter()
        .filter(|r| r.variant == Some("as-written"))
        .any(|r| r.status == CheckStatus::Reported && r.counterexample.is_some());
    let diff_names_entry = diff.iter().any(|l| l.starts_with("[w2, y3_"));
    let ok = corrected_all_pass && as_written_flagged && diff_names_entry;
    criterion(
        9,
        ok,
        "variant both: corrected passes, as-written flagged, diff names [w2, y3_m]",
    );
}

/// Criterion 10: determinism -- two runs of the same configuration produce byte-identical
/// reports.
#[test]
fn criterion_10_determinism() {
    let cfg = SuiteConfig {
        suites: vec![Suite::Lie, Suite::Kernels, Suite::Modes, Suite::Taylor],
        params: Some((1, 1)),
        window: 6,
        mode_grid: 2,
        monomial_window: 10,
        ..SuiteConfig::default()
    };
    let run = || {
        let (results, diff) = suites::run_all(&cfg).unwrap();
        let json: Vec<report::JsonResult> = results
            .iter()
            .map(|r| report::to_json_result(r, None))
            .collect();
        serde_json::to_string_pretty(&report::assemble(&cfg, json, diff)).unwrap()
    };
    let a = run();
    let b = run();
    criterion(10, a == b, "two identical runs produce byte-identical reports");
}
