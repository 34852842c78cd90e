#![no_main]

use critset::synth::ConfigMap;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(map) = ConfigMap::parse(text) {
        if let Ok(cfg) = map.power_law() {
            cfg.validate().unwrap();
        }
        if let Ok(cfg) = map.er() {
            cfg.validate().unwrap();
        }
    }
});
