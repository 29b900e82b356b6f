use crate::pebbling::Configuration;

/// All configurations on `n` vertices with total weight `w` and every entry
/// at most `t`, each exactly once, in descending lexicographic order.
#[derive(Debug, Clone)]
pub struct WeightConfigs {
    t: u32,
    current: Option<Vec<u32>>,
}

impl WeightConfigs {
    pub fn new(n: usize, w: u64, t: u32) -> Self {
        let mut first = vec![0; n];
        let feasible = fill_greedy(&mut first, w, t);
        WeightConfigs {
            t,
            current: feasible.then_some(first),
        }
    }
}

/// Packs `w` into `slots` left to right; false if it does not fit.
fn fill_greedy(slots: &mut [u32], mut w: u64, t: u32) -> bool {
    for s in slots.iter_mut() {
        let take = w.min(u64::from(t)) as u32;
        *s = take;
        w -= u64::from(take);
    }
    w == 0
}

impl Iterator for WeightConfigs {
    type Item = Configuration;

    fn next(&mut self) -> Option<Configuration> {
        let out = self.current.take()?;
        let mut next = out.clone();
        let n = next.len();
        let mut suffix: u64 = 0;
        // rightmost position that can give one pebble to the suffix behind it
        for i in (0..n.saturating_sub(1)).rev() {
            suffix += u64::from(next[i + 1]);
            let room = u64::from(self.t) * (n - i - 1) as u64;
            if next[i] > 0 && suffix < room {
                next[i] -= 1;
                fill_greedy(&mut next[i + 1..], suffix + 1, self.t);
                self.current = Some(next);
                break;
            }
        }
        Some(Configuration::new(out))
    }
}

pub fn enumerate_weight_configs(n: usize, w: u64, t: u32) -> WeightConfigs {
    WeightConfigs::new(n, w, t)
}

/// Coefficient of `x^w` in `(1 + x + … + x^t)^n`.
pub fn capped_composition_count(n: usize, w: u64, t: u32) -> u128 {
    let w = w as usize;
    let mut poly = vec![0u128; w + 1];
    poly[0] = 1;
    for _ in 0..n {
        let mut next = vec![0u128; w + 1];
        for (i, &c) in poly.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for k in 0..=(t as usize).min(w - i) {
                next[i + k] += c;
            }
        }
        poly = next;
    }
    poly[w]
}
