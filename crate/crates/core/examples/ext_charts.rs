// Ext charts over A(1) for F2, the Joker and their combination.

use sqpd::ext::{e2_diagonal, ext_chart, render_chart, ChartFormat};
use sqpd::gradmod::{direct_sum, joker, shift, AlgebraTag, GradedModule};

pub fn run_example() -> String {
    let f2 = GradedModule::trivial(AlgebraTag::A1, "1", 0);
    let mut out = String::from("Ext(F2):\n");
    out += &render_chart(&ext_chart(&f2, 8, 16).unwrap(), ChartFormat::Ascii);
    out += "Ext(Joker):\n";
    out += &render_chart(&ext_chart(&joker(), 8, 16).unwrap(), ChartFormat::Ascii);
    let combined = direct_sum(&f2, &shift(&joker(), -6)).unwrap();
    out += &format!("diagonal of F2 ⊕ J[-6]: {:?}\n", e2_diagonal(&combined, 12).unwrap());
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
