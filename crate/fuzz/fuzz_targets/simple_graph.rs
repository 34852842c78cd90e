#![no_main]

use critset::bigraph::{incidence_transform, SimpleGraph};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(sg) = SimpleGraph::parse(data) {
        if let Ok(b) = incidence_transform(&sg) {
            assert_eq!(b.num_items(), sg.num_edges());
            b.validate().unwrap();
        }
    }
});
