//! Seeded property suites for the coloring, parity and second-cycle lemmas.

use chordlab_core::coloring::three_color_cycle_plus;
use chordlab_core::enumeration::{gen_cycle_plus_instance, gen_lemma_instance};
use chordlab_core::search::{hamilton_count_through_edge, Cycle};
use chordlab_core::second_cycle::{check_certificate, second_hamilton_cycle, verify_parity_lemma};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Which {
    Coloring,
    Parity,
    SecondCycle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub seed: u64,
    /// Order for coloring instances, `k` otherwise.
    pub size: usize,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub which: Which,
    pub instances: usize,
    pub failures: Vec<Failure>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Orders used for coloring instances.
pub const COLORING_ORDERS: std::ops::RangeInclusive<usize> = 6..=24;

fn coloring(n: usize, seed: u64) -> Result<(), String> {
    let inst = gen_cycle_plus_instance(n, seed).map_err(|e| e.to_string())?;
    let c = Cycle::new(&inst.g, &inst.cycle).map_err(|e| e.to_string())?;
    let col = three_color_cycle_plus(&inst.g, &c).map_err(|e| e.to_string())?;
    if !col.is_proper(&inst.g) {
        return Err("coloring is not proper".into());
    }
    for (t, _) in inst.triples.iter().zip(&inst.is_triangle).filter(|(_, &tri)| tri) {
        let mut cs = t.map(|v| col.color[v]);
        cs.sort_unstable();
        if cs != [1, 2, 3] {
            return Err(format!("triangle {t:?} is not rainbow"));
        }
    }
    Ok(())
}

fn parity(k: usize, seed: u64) -> Result<(), String> {
    let inst = gen_lemma_instance(k, seed).map_err(|e| e.to_string())?;
    let rep = verify_parity_lemma(&inst).map_err(|e| e.to_string())?;
    if let Some(&(e, c)) = rep.checked.iter().find(|&&(_, c)| c % 2 == 1) {
        return Err(format!("edge {e:?} lies on {c} Hamilton cycles"));
    }
    if !rep.all_preserved {
        return Err("a Hamilton cycle differs from the instance cycle outside A".into());
    }
    for &(e, c) in &rep.checked {
        let again = hamilton_count_through_edge(&inst.g, e).map_err(|e| e.to_string())?;
        if again != c {
            return Err(format!("edge {e:?}: recount {again} differs from {c}"));
        }
    }
    Ok(())
}

fn second_cycle(k: usize, seed: u64) -> Result<(), String> {
    let inst = gen_lemma_instance(k, seed).map_err(|e| e.to_string())?;
    let (x, y) = inst.distinguished_exit();
    let cert = second_hamilton_cycle(&inst, x, y).map_err(|e| e.to_string())?;
    check_certificate(&inst, x, y, &cert).map_err(|e| e.to_string())
}

/// Runs `seeds` instances starting at `base_seed`. Instance `i` uses seed
/// `base_seed + i`; `k` cycles through `k_range` (orders cycle through
/// [`COLORING_ORDERS`] for coloring).
pub fn run_lemmas(which: Which, seeds: u64, base_seed: u64, k_range: (usize, usize)) -> LemmaReport {
    let (kmin, kmax) = k_range;
    let mut failures = Vec::new();
    for i in 0..seeds {
        let seed = base_seed.wrapping_add(i);
        let (size, res) = match which {
            Which::Coloring => {
                let span = COLORING_ORDERS.end() - COLORING_ORDERS.start() + 1;
                let n = COLORING_ORDERS.start() + (i as usize * 7) % span;
                (n, coloring(n, seed))
            }
            Which::Parity | Which::SecondCycle => {
                let k = kmin + i as usize % (kmax - kmin + 1);
                let f = if which == Which::Parity { parity } else { second_cycle };
                (k, f(k, seed))
            }
        };
        if let Err(detail) = res {
            log::warn!("{which:?} seed {seed}: {detail}");
            failures.push(Failure { seed, size, detail });
        }
    }
    LemmaReport {
        which,
        instances: seeds as usize,
        failures,
    }
}
