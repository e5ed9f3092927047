use std::f64::consts::PI;

use fusedrot::{AnyRotationF64 as AnyRotation, Kind};
use fusedrot_oracle::{oracle_convert, OracleError, RandomRotationStream};

#[test]
fn closed_forms_agree_with_geometry() {
    let stream = RandomRotationStream::new(11)
        .alpha_cap(PI - 1e-3)
        .unwrap()
        .gimbal_margin(1e-3)
        .unwrap();
    let mut worst = 0.0f64;
    for q in stream.take(10_000) {
        for from in Kind::ALL {
            let src = AnyRotation::from(q).convert(from).unwrap().value;
            for to in Kind::ALL {
                let closed = src.convert(to).unwrap().value;
                match oracle_convert(&src, to) {
                    Ok(o) => worst = worst.max(o.param_distance(&closed)),
                    Err(OracleError::NearSingular(_)) => {}
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }
    assert!(worst <= 1e-8, "worst disagreement {worst:e}");
}
