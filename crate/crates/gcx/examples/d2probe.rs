use gcx::chain::Chain;
use gcx::diff::{delta_glue, delta_split, delta_z};
use gcx::enumerate::enumerate_basis;
use gcx::graph::{Alphabet, Family};

fn main() {
    let alpha = Alphabet::Extended { g: 2 };
    let basis = enumerate_basis(Family::Extended, &alpha, 4, 0, -2);
    let mut fails = [0usize; 3];
    let mut example: Option<usize> = None;
    for (i, b) in basis.iter().enumerate() {
        let x = Chain::from_iter([(b.clone(), gcx::chain::coeff_int(1))]);
        let dz = delta_z(&x, &alpha).unwrap();
        let ds = delta_split(&x);
        let dg = delta_glue(&x, &alpha).unwrap();
        let mut zs = delta_z(&ds, &alpha).unwrap();
        zs.add_assign(&delta_split(&dz));
        let mut zg = delta_z(&dg, &alpha).unwrap();
        zg.add_assign(&delta_glue(&dz, &alpha).unwrap());
        let zz = delta_z(&dz, &alpha).unwrap();
        if !zs.is_zero() { fails[0] += 1; if example.is_none() { example = Some(i); } }
        if !zg.is_zero() { fails[1] += 1; }
        if !zz.is_zero() { fails[2] += 1; }
    }
    println!("split-Z anti fails: {}, glue-Z anti fails: {}, Z^2 fails: {}", fails[0], fails[1], fails[2]);
    if let Some(i) = example {
        let g = basis[i].decode();
        println!("example graph: n={} edges={:?} decs={:?}", g.n, g.edges, g.decorations);
        let x = Chain::from_iter([(basis[i].clone(), gcx::chain::coeff_int(1))]);
        let mut zs = delta_z(&delta_split(&x), &alpha).unwrap();
        zs.add_assign(&delta_split(&delta_z(&x, &alpha).unwrap()));
        for (cg, c) in zs.iter().take(4) {
            let d = cg.decode();
            println!("  residual {} * n={} edges={:?} decs={:?}", c, d.n, d.edges, d.decorations);
        }
    }
}
