#![no_main]

use critset::bigraph::{load_edge_list, write_edge_list};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok((g, _)) = load_edge_list(data) {
        g.validate().unwrap();
        let mut once = Vec::new();
        write_edge_list(&g, &mut once).unwrap();
        let (h, report) = load_edge_list(once.as_slice()).unwrap();
        assert_eq!(report.duplicates_dropped, 0);
        assert_eq!(h.num_edges(), g.num_edges());
    }
});
