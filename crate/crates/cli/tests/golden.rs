//! Golden-file tests: the kernel and commutator dump formats are bit-exact
//! and stable across runs and platforms.

use nilva_core::fields::{coordinate_fields, field_commutator, FieldName};
use nilva_core::kernels::{self, Window};
use nilva_core::{Params, Variant};

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("reading {path}: {e}"))
}

#[test]
fn kernel_dumps_are_bit_exact() {
    let w = Window::new(4, 3);
    assert_eq!(kernels::log_kernel(w).unwrap().dump(), golden("kernel_log_n4.txt"));
    assert_eq!(kernels::rl_kernel(w).unwrap().dump(), golden("kernel_rl_n4.txt"));
    assert_eq!(kernels::t_kernel(w).unwrap().dump(), golden("kernel_t_n4.txt"));
}

#[test]
fn commutator_dump_twisted_torus() {
    let p = Params::new(0, 1);
    let win = Window::new(3, 3);
    let fields = coordinate_fields(p).unwrap();
    let d = field_commutator(
        &fields[FieldName::Y1.position()],
        &fields[FieldName::Y2.position()],
        p,
        Variant::Corrected,
        win,
    )
    .unwrap();
    assert_eq!(d.dump(8), golden("bidist_y1y2_k0j1_n3.txt"));
}

#[test]
fn commutator_dump_general_case() {
    let p = Params::new(1, 1);
    let win = Window::new(3, 3);
    let fields = coordinate_fields(p).unwrap();
    let d = field_commutator(
        &fields[FieldName::Y1.position()],
        &fields[FieldName::Y3.position()],
        p,
        Variant::Corrected,
        win,
    )
    .unwrap();
    assert_eq!(d.dump(8), golden("bidist_y1y3_k1j1_n3.txt"));
}
