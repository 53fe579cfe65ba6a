use std::time::Instant;
use mlv_core::linalg::PMatrix;
use mlv_core::period::PeriodValue;

fn main() {
    let log2 = PeriodValue::log_prime(2).unwrap();
    let log3 = PeriodValue::log_prime(3).unwrap();
    let pi = PeriodValue::pi();
    let syms = [PeriodValue::one(), log2, log3, pi];
    let ent = |k: usize| syms[k % 4].mul(&PeriodValue::rational((k % 7) as i64 - 3, 1 + (k % 3) as i64));
    let a = PMatrix::from_fn(3, 3, |i, j| ent(3*i + j + 1));
    let b = PMatrix::from_fn(3, 3, |i, j| ent(5*i + 2*j + 2));
    let t = Instant::now();
    let prod = a.mul(&b);
    println!("mul: {:?}", t.elapsed());
    let t = Instant::now();
    let d = prod.det().unwrap();
    println!("det: {:?} -> {}", t.elapsed(), d);
}
