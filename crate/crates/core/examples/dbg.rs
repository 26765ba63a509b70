use scasimir_core::*;

fn main() {
    // 1) HC images of Sc and Sc².
    for n in [1u32, 2] {
        let img = gamma_shift(&hc_project(&scasimir_pbw(n)), ShiftDirection::Inverse);
        println!("n={n}: g^-1 h(Sc)  = {img}");
        let img2 = gamma_shift(&hc_project(&scasimir_square(n)), ShiftDirection::Inverse);
        println!("n={n}: g^-1 h(Sc²) = {img2}");
    }
    // 2) Independent cross-check: Scasimir eigenvalue on the fundamental rep (n=2).
    let rep = fundamental_rep(2).unwrap();
    let sc = evaluate(&scasimir_pbw(2), &rep);
    println!("n=2 rep: Sc even-sector eigenvalue = {}", sc.at(0, 0));
    println!("n=2 rep: Sc odd-sector eigenvalue  = {}", sc.at(1, 1));
    // h(Sc) evaluated at the raw weight of the rep's highest weight vector e_1, which is (-1, 0):
    // h(Sc) = 9/2 - 3 H1 - 9 H2 + 6 H1 H2 -> 9/2 + 3 = 15/2, must equal the odd-sector eigenvalue.
    // 3) n=3 image (predicts factor (2n)!/2^n = 90).
    let img3 = gamma_shift(&hc_project(&scasimir_pbw(3)), ShiftDirection::Inverse);
    println!("n=3: g^-1 h(Sc)  = {img3}");
}
