// J⁸: Poincaré duality, Wu and Stiefel-Whitney classes, total classes.

use sqpd::models::model_j8;
use sqpd::spda::{
    characteristic_classes, total_class_product, verify_char_identities, verify_pd, verify_sharp_pd,
    TotalElement,
};

pub fn run_example() -> String {
    let p = model_j8();
    let mut out = String::new();
    for n in 0..=8 {
        out += &format!("degree {n}: {:?}\n", p.basis_names(n));
    }
    out += &format!("duality: {}", verify_pd(&p));
    out += &format!("Steenrod compatibility: {}", verify_sharp_pd(&p));
    let t = characteristic_classes(&p).unwrap();
    out += &t.render(&p);
    out += &format!("identities: {}", verify_char_identities(&p, &t));
    let w = TotalElement::parse(&p, "1 + u2 + u3").unwrap();
    out += &format!("(1 + u2 + u3)^2 = {}\n", total_class_product(&p, &w, &w).format(&p));
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
