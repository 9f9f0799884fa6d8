// SPDX-License-Identifier: Apache-2.0

#![no_main]

use libfuzzer_sys::fuzz_target;
use netfrac::{all_pairs_distances, parse_network, Format};

fuzz_target!(|data: &[u8]| {
    if let Ok(graph) = parse_network(data, Format::Pajek) {
        let lcc = graph.largest_connected_component();
        if lcc.node_count() <= 256 {
            let _ = all_pairs_distances(&lcc);
        }
    }
});
