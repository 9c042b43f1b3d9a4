// Adem reduction, products and the antipode.

use sqpd::steenrod::{adem_reduce, antipode_sq, coproduct, SteenrodElement};

pub fn run_example() -> String {
    let mut out = String::new();
    for word in [&[1, 2][..], &[1, 1], &[2, 2], &[2, 3], &[3, 5, 1]] {
        let name: Vec<String> = word.iter().map(|k| format!("Sq{k}")).collect();
        out += &format!("{} = {}\n", name.join(" "), adem_reduce(word));
    }
    let x: SteenrodElement = "Sq2 Sq2 + Sq3 Sq1".parse().unwrap();
    out += &format!("Sq2 Sq2 + Sq3 Sq1 = {x}\n");
    for k in 1..=6 {
        out += &format!("chi(Sq{k}) = {}\n", antipode_sq(k));
    }
    out += &format!("psi(Sq3) = {}\n", coproduct(&SteenrodElement::sq(3)));
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
