// The ideal `(w2^3 + w3^2, w2^2 w3)` in the cohomology of BSO(3).

use sqpd::models::{model_bso3, model_bso3_quotient};

pub fn run_example() -> String {
    let b = model_bso3();
    let r = b.element("w2^3 + w3^2");
    let mut out = String::new();
    for k in [1, 2, 4] {
        out += &format!("Sq{k}(w2^3 + w3^2) = {}\n", b.format(&b.steenrod_on(&r, k)));
    }
    let q = model_bso3_quotient();
    out += &format!("quotient dims through degree 10: {:?}\n", q.dims());
    out += &format!("u2^5 in the quotient: {}\n", q.format(&q.element("u2^5")));
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
