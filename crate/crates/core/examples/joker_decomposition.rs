// The Joker over A(1), and splitting `J ⊗ J[-4] ⊕ J[-6]` into free summands.

use sqpd::gradmod::{iso_check, joker, split_free_summands, direct_sum, shift, AlgebraTag, GradedModule};
use sqpd::models::decomposition_module;

pub fn run_example() -> String {
    let j = joker();
    let mut out = format!("Joker: {} basis elements, dims {:?}\n", j.dim(), j.dims());
    out += &j.to_json();
    let m = decomposition_module(&j).unwrap();
    let s = split_free_summands(&m).unwrap();
    out += &format!("J ⊗ J[-4] ⊕ J[-6]: dimension {}\n", m.dim());
    out += &format!("free summands A(1)[n] for n in {:?}\n", s.shifts);
    let expected = direct_sum(&GradedModule::trivial(AlgebraTag::A1, "1", 0), &shift(&j, -6)).unwrap();
    out += &format!(
        "remainder of dimension {} is F2 ⊕ J[-6]: {}\n",
        s.remainder.dim(),
        iso_check(&s.remainder, &expected).is_some()
    );
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
