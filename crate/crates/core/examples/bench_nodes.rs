use istr_core::numfield::*;
use istr_core::poly::IntPoly;
use istr_core::qform::*;
use istr_core::repsearch::*;
use num_bigint::BigInt;

fn main() {
    let k = make_field_power_basis(IntPoly::from_i64(&[-1, -2, 1, 1])).unwrap();
    let q = rational_field();
    let t0 = std::time::Instant::now();
    let f = diag_form_i64(&k, &[1, 71]).unwrap();
    let a = OrderElement::from_int(&k, 232.into());
    let rep = represent(&f, &a, SearchMode::All, None).unwrap();
    println!("232/K49 All: nodes={} witnesses={} in {:?}", rep.nodes_visited, rep.witnesses.len(), t0.elapsed());

    let t0 = std::time::Instant::now();
    let f = diag_form_i64(&k, &[1, 1, 1, 37]).unwrap();
    let a = OrderElement::from_int(&k, 124.into());
    let rep = represent(&f, &a, SearchMode::First, None).unwrap();
    println!("124/K49 First: nodes={} witnesses={} in {:?}", rep.nodes_visited, rep.witnesses.len(), t0.elapsed());

    let t0 = std::time::Instant::now();
    let f = diag_form_i64(&k, &[1, 2, 5, 5]).unwrap();
    let a = OrderElement::from_int(&k, 15.into());
    let rep = represent(&f, &a, SearchMode::All, None).unwrap();
    println!("15/K49 All: nodes={} exh={} wit={} in {:?}", rep.nodes_visited, rep.exhaustive, rep.witnesses.len(), t0.elapsed());
    let _ = BigInt::from(0);
}
