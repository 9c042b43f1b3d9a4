// The Thom module of J⁸ and its comparison with the drawn diagram.

use sqpd::gradmod::{dualize, iso_check, shift};
use sqpd::models::{model_j8, model_thom, thom_diagram};
use sqpd::steenrod::SteenrodElement;

pub fn run_example() -> String {
    let m = model_thom();
    let u = m.vector("u").unwrap();
    let mut out = format!("Thom module: {} basis elements\n", m.dim());
    for k in [1, 2, 4, 8] {
        let image = m.act(&SteenrodElement::sq(k), &u).unwrap();
        out += &format!("Sq{k} u = {}\n", m.format_vector(&image));
    }
    out += &format!(
        "matches the diagram over A(1): {}\n",
        iso_check(&m.restrict_to_a1(), &thom_diagram()).is_some()
    );
    let dual = shift(&dualize(&model_j8().to_module()), 8);
    out += &format!("isomorphic to the dual of J8 shifted by 8: {}\n", iso_check(&m, &dual).is_some());
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
