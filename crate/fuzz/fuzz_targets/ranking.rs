#![no_main]

use critset::bigraph::load_edge_list;
use critset::rankcore::{check_permutation, Ranking};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let (g, _) = load_edge_list("a x\nb x\nc y\nd y\nd z\n".as_bytes()).unwrap();
    if let Ok(r) = Ranking::read(&g, data) {
        check_permutation(r.order(), g.num_contributors()).unwrap();
    }
});
