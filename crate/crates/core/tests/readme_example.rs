use salem_core::{classify_salem, unit_spectrum, IntPoly};

#[test]
fn library_example() {
    let s = IntPoly::from_i64(&[1, 0, -1, -1, -1, 0, 1]);
    let salem = classify_salem(&s).expect("Salem polynomial");
    assert_eq!(salem.alpha_decimal(6), "1.401268");
    let spectrum = unit_spectrum(&salem, 6);
    assert_eq!(spectrum.members.into_iter().collect::<Vec<_>>(), vec![1, 2, 4]);
}
