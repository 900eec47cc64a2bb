use gcx::chain::Chain;
use gcx::diff::{delta_glue, delta_split, delta_total, delta_z};
use gcx::enumerate::{degree_range, enumerate_basis};
use gcx::graph::{Alphabet, Family};

fn main() {
    let mut all_ok = true;
    for (family, alpha) in [
        (Family::Plain, Alphabet::Symplectic { g: 2 }),
        (Family::Tadpole, Alphabet::Symplectic { g: 2 }),
        (Family::Extended, Alphabet::Extended { g: 2 }),
    ] {
        for w in 1..=4u32 {
            for ell in 0..=(w / 2 + 1) {
                for k in degree_range(w, ell) {
                    let basis = enumerate_basis(family, &alpha, w, ell, k);
                    let mut split2 = 0usize;
                    let mut total2 = 0usize;
                    let mut anti = 0usize;
                    for b in &basis {
                        let x = Chain::from_iter([(b.clone(), gcx::chain::coeff_int(1))]);
                        // delta_split^2
                        let ss = delta_split(&delta_split(&x));
                        if !ss.is_zero() { split2 += 1; }
                        // total d^2
                        let d = delta_total(&x, family, &alpha);
                        let dd = delta_total(&d, family, &alpha);
                        if !dd.is_zero() { total2 += 1; }
                        // anticommutator split/glue (a plain-family identity)
                        if family == Family::Plain {
                            let sg = delta_split(&delta_glue(&x, &alpha).unwrap());
                            let mut gs = delta_glue(&delta_split(&x), &alpha).unwrap();
                            gs.add_assign(&sg);
                            if !gs.is_zero() { anti += 1; }
                        }
                        if family == Family::Extended {
                            let zz = delta_z(&delta_z(&x, &alpha).unwrap(), &alpha).unwrap();
                            if !zz.is_zero() { println!("  dZ^2 != 0 at w={w} l={ell} k={k}"); all_ok = false; }
                        }
                    }
                    if split2 + total2 + anti > 0 {
                        println!("{family:?} w={w} l={ell} k={k} (dim {}): split2 fail {split2}, total2 fail {total2}, anti fail {anti}", basis.len());
                        all_ok = false;
                    }
                }
            }
        }
    }
    println!("{}", if all_ok { "ALL d^2 CHECKS PASS" } else { "FAILURES PRESENT" });
}
