use std::time::Instant;

use gasket_core::enumerate::{
    crossing_pair, generate_superpacking, periodicity_counterexample, same_depth_violation, EnumerationBudget, Window,
};
use gasket_core::exact::rational::{int, rat};
use gasket_core::{AugmentedMatrix, Isometry};

fn standard(window: Window, n: i64) -> gasket_core::enumerate::Enumeration {
    let b = EnumerationBudget::new(int(n)).unwrap().with_window(window);
    generate_superpacking(&AugmentedMatrix::d1(), &b).unwrap()
}

#[test]
fn periodic_and_non_crossing_at_100() {
    let t = Instant::now();
    let base = standard(Window::unit_square(), 100);
    eprintln!("{} circles in {:?}", base.len(), t.elapsed());
    let t = Instant::now();
    assert_eq!(crossing_pair(base.circles()), None);
    assert_eq!(same_depth_violation(base.circles()), None);
    eprintln!("pairs in {:?}", t.elapsed());
    let shift = Isometry::translation(rat(2), rat(0));
    let shifted = standard(Window::from_i64(2, 3, 0, 1).unwrap(), 100);
    assert_eq!(periodicity_counterexample(&base, &shifted, &shift), None);
    let flip = Isometry::linear(false, -1, 1);
    let flipped = standard(Window::from_i64(-1, 0, 0, 1).unwrap(), 100);
    assert_eq!(periodicity_counterexample(&base, &flipped, &flip), None);
}
