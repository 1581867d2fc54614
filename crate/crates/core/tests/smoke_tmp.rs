use tjurina_core::*;
use std::time::Instant;

#[test]
fn septic_syzygy_smoke() {
    let fp = PrimeField::new(DEFAULT_PRIME).unwrap();
    let f = parse_polynomial("y^7+x^7+z*(x^2+y*z)^3", &fp).unwrap();
    let t0 = Instant::now();
    let [fx, fy, fz] = partial_derivatives(&f).unwrap();
    let j = GradedSubmodule::ideal(&fp, vec![fx, fy, fz]).unwrap();
    let syz = j.syzygy_basis();
    println!("syzygy gens: {} in {:?}", syz.gens().len(), t0.elapsed());
    let t1 = Instant::now();
    let min = syz.minimalize_generators();
    let degs: Vec<i64> = min.gens().iter().map(|g| g.graded_degree(min.shifts()).unwrap().unwrap() - 6).collect();
    println!("minimal: m={} degrees={:?} in {:?}", min.gens().len(), degs, t1.elapsed());
    assert_eq!(min.gens().len(), 5);
    assert_eq!(degs, vec![6, 6, 6, 6, 6]);
    let t2 = Instant::now();
    let sat = j.saturation().unwrap();
    println!("saturation in {:?}, gens {}", t2.elapsed(), sat.gens().len());
    let hj = j.hilbert_series();
    let hi = sat.hilbert_series();
    let n: Vec<u64> = (0..=15).map(|k| hj.dim_at(k) - hi.dim_at(k)).collect();
    println!("n-vector 0..15: {:?}", n);
    assert_eq!(&n[4..12], &[3, 9, 13, 15, 15, 13, 9, 3]);
    println!("tau = {}", hj.dim_at(40));
    assert_eq!(hj.dim_at(40), 12);
}

#[test]
fn septic_over_rationals_smoke() {
    let q = Rationals;
    let f = parse_polynomial("y^7+x^7+z*(x^2+y*z)^3", &q).unwrap();
    let t0 = Instant::now();
    let [fx, fy, fz] = partial_derivatives(&f).unwrap();
    let j = GradedSubmodule::ideal(&q, vec![fx, fy, fz]).unwrap();
    let syz = j.syzygy_basis();
    let min = syz.minimalize_generators();
    println!("QQ minimal: m={} in {:?}", min.gens().len(), t0.elapsed());
    assert_eq!(min.gens().len(), 5);
    let t2 = Instant::now();
    let sat = j.saturation().unwrap();
    println!("QQ saturation in {:?}", t2.elapsed());
    let hj = j.hilbert_series();
    let hi = sat.hilbert_series();
    let n: Vec<u64> = (0..=15).map(|k| hj.dim_at(k) - hi.dim_at(k)).collect();
    assert_eq!(&n[4..12], &[3, 9, 13, 15, 15, 13, 9, 3]);
}
