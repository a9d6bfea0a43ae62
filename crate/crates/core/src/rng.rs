//! Small deterministic PRNG for seeded sampling.
//!
//! SplitMix64: identical output on every platform, no dependencies. Sampled
//! verifier suites derive one stream per (seed, subject, suite) so reports
//! are reproducible regardless of which suites run together.

#[derive(Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Seed derived from a base seed and a label, for independent streams.
    pub fn derived(seed: u64, label: &str) -> Self {
        let mut h = 0xcbf2_9ce4_8422_2325u64; // FNV-1a
        for b in label.bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x1000_0000_01b3);
        }
        SplitMix64::new(seed ^ h)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound` (bound > 0).
    pub fn below(&mut self, bound: u64) -> u64 {
        // rejection sampling keeps the distribution exactly uniform
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % bound;
            }
        }
    }

    /// Random mask over `m` elements.
    pub fn mask(&mut self, m: usize) -> u32 {
        (self.next_u64() & ((1u64 << m) - 1)) as u32
    }

    /// Random subset of the given mask.
    pub fn submask(&mut self, of: u32) -> u32 {
        (self.next_u64() as u32) & of
    }
}
