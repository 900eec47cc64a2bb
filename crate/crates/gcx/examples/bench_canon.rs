use gcx::enumerate::core_graphs;
use gcx::graph::Family;
use std::time::Instant;
fn main() {
    let t = Instant::now();
    let cores8 = core_graphs(8, 12, false, 0, 0, Family::Plain);
    println!("cubic on 8: {} classes in {:?}", cores8.len(), t.elapsed());
    let t = Instant::now();
    let c = core_graphs(8, 11, false, 2, 2, Family::Plain);
    println!("(v=8,e=11): {} classes in {:?}", c.len(), t.elapsed());
    let t = Instant::now();
    let c = core_graphs(7, 10, false, 1, 1, Family::Plain);
    println!("(v=7,e=10): {} classes in {:?}", c.len(), t.elapsed());
}
