use std::time::Instant;
use mlv_core::hodge::{weak_duality, HodgeDatum, rational_matrix};
use mlv_core::linalg::PMatrix;
use mlv_core::period::PeriodValue;

fn upper(n: usize) -> PMatrix {
    let mut m = PMatrix::identity(n);
    for i in 0..n { for j in i+1..n { m[(i,j)] = PeriodValue::from_int(((i+2*j) % 3) as i64 - 1); } }
    m
}

fn main() {
    let t = Instant::now();
    let h = HodgeDatum::tate(0).direct_sum(&HodgeDatum::tate(1)).unwrap().direct_sum(&HodgeDatum::tate(-1)).unwrap();
    let b = rational_matrix(&[&[1,2,0],&[0,1,1],&[1,0,1]]);
    let h = h.base_change(&b, &upper(3)).unwrap();
    weak_duality(&h).unwrap();
    println!("(a) 3 tates + base change: {:?}", t.elapsed());

    let t = Instant::now();
    weak_duality(&HodgeDatum::elliptic_h1()).unwrap();
    println!("(b) elliptic alone: {:?}", t.elapsed());

    let t = Instant::now();
    let h = HodgeDatum::elliptic_h1().direct_sum(&HodgeDatum::tate(0)).unwrap();
    weak_duality(&h).unwrap();
    println!("(c) elliptic + tate, no mix: {:?}", t.elapsed());

    let t = Instant::now();
    let h = HodgeDatum::elliptic_h1().direct_sum(&HodgeDatum::tate(0)).unwrap();
    let b = rational_matrix(&[&[1,2,0],&[0,1,1],&[1,0,1]]);
    let h = h.base_change(&b, &upper(3)).unwrap();
    weak_duality(&h).unwrap();
    println!("(d) elliptic + tate, mixed: {:?}", t.elapsed());
}
