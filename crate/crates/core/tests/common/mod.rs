//! Shared oracles, generators and CLI helpers for the integration tests.
#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::atomic::{AtomicUsize, Ordering};

use pdmf::GPdmf;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// `erf(t)` from the all-positive series
/// `2/sqrt(pi) * exp(-t^2) * sum 2^n t^(2n+1) / (1*3*...*(2n+1))`.
fn erf_series(t: f64) -> f64 {
    let mut term = t;
    let mut sum = t;
    let mut n = 0.0;
    while term.abs() > 1e-18 * sum.abs() {
        n += 1.0;
        term *= 2.0 * t * t / (2.0 * n + 1.0);
        sum += term;
    }
    2.0 / std::f64::consts::PI.sqrt() * (-t * t).exp() * sum
}

/// `erfc(t)` for `t > 0` from its continued fraction, evaluated backwards.
fn erfc_continued_fraction(t: f64) -> f64 {
    let mut tail = t;
    for k in (1..=400).rev() {
        tail = t + (k as f64 / 2.0) / tail;
    }
    (-t * t).exp() / std::f64::consts::PI.sqrt() / tail
}

/// Standard normal CDF built from the series and the continued fraction.
pub fn phi_oracle(x: f64) -> f64 {
    let t = x / std::f64::consts::SQRT_2;
    if t.abs() <= 3.0 {
        0.5 * (1.0 + erf_series(t))
    } else if t > 0.0 {
        1.0 - 0.5 * erfc_continued_fraction(t)
    } else {
        0.5 * erfc_continued_fraction(-t)
    }
}

/// Quantile by bisection on [`phi_oracle`] down to a bracket of `1e-14`.
pub fn quantile_oracle(y: f64) -> f64 {
    let (mut lo, mut hi) = (-40.0_f64, 40.0_f64);
    while hi - lo > 1e-14 {
        let mid = 0.5 * (lo + hi);
        if phi_oracle(mid) < y {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// G-PDMF membership written out from its closed form.
pub fn gpdmf_closed_form(n: &GPdmf, x: f64) -> f64 {
    let (a, b, c) = n.support();
    let pi = std::f64::consts::PI;
    if x == b {
        1.0
    } else if x <= a || x >= c {
        0.0
    } else if x < b {
        phi_oracle((pi * (x - a) / (b - a) - pi / 2.0).tan() - n.mu_left())
    } else {
        phi_oracle((pi * (c - x) / (c - b) - pi / 2.0).tan() - n.mu_right())
    }
}

pub fn triangle(a: f64, b: f64, c: f64, x: f64) -> f64 {
    if x <= a || x >= c {
        0.0
    } else if x <= b {
        (x - a) / (b - a)
    } else {
        (c - x) / (c - b)
    }
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Ordered support with both sides at least `min_side` wide.
pub fn random_support(rng: &mut StdRng, min_side: f64) -> (f64, f64, f64) {
    let a = rng.random_range(-10.0..10.0);
    let b = a + rng.random_range(min_side..5.0);
    let c = b + rng.random_range(min_side..5.0);
    (a, b, c)
}

pub fn random_gpdmf(rng: &mut StdRng, mu_bound: f64) -> GPdmf {
    let (a, b, c) = random_support(rng, 0.1);
    let ml = rng.random_range(-mu_bound..=mu_bound);
    let mr = rng.random_range(-mu_bound..=mu_bound);
    GPdmf::new(a, b, c, ml, mr).unwrap()
}

/// `k` distinct sorted values drawn from `(lo, hi)`, separated by at least
/// `gap` times the interval width.
pub fn sorted_distinct(rng: &mut StdRng, k: usize, lo: f64, hi: f64, gap: f64) -> Vec<f64> {
    loop {
        let mut v: Vec<f64> = (0..k).map(|_| rng.random_range(lo..hi)).collect();
        v.sort_by(f64::total_cmp);
        let w = hi - lo;
        let spaced = v.windows(2).all(|p| p[1] - p[0] > gap * w)
            && v[0] - lo > gap * w
            && hi - v[k - 1] > gap * w;
        if spaced {
            return v;
        }
    }
}

pub fn max_component_diff(x: &GPdmf, y: &GPdmf) -> f64 {
    x.components()
        .iter()
        .zip(y.components())
        .fold(0.0, |m, (p, q)| m.max((p - q).abs()))
}

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

pub fn pdmf<S: AsRef<std::ffi::OsStr>>(args: &[S]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pdmf"))
        .args(args)
        .output()
        .expect("pdmf binary runs")
}

pub fn stdout_of<S: AsRef<std::ffi::OsStr>>(args: &[S]) -> String {
    let out = pdmf(args);
    assert!(
        out.status.success(),
        "pdmf failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

/// Writes `contents` to a fresh scratch file whose name ends in `tag`.
pub fn scratch(tag: &str, contents: &str) -> PathBuf {
    static COUNTER: AtomicUsize = AtomicUsize::new(0);
    let dir = std::env::temp_dir().join(format!("pdmf-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(format!("{}-{tag}", COUNTER.fetch_add(1, Ordering::Relaxed)));
    std::fs::write(&path, contents).unwrap();
    path
}

/// One figure: golden file name and how to produce it.
pub struct Figure {
    pub golden: &'static str,
    pub build: fn() -> String,
}

fn f(name: &str) -> String {
    fixture(name).display().to_string()
}

fn curve_of(path: &str, extra: &[String]) -> String {
    let mut args = vec!["curve".to_string(), path.to_string(), "--n".into(), "201".into()];
    args.extend_from_slice(extra);
    stdout_of(&args)
}

fn derived(tag: &str, args: &[&str]) -> String {
    let doc = stdout_of(args);
    scratch(tag, &doc).display().to_string()
}

pub const FIGURES: &[Figure] = &[
    Figure {
        golden: "b1.csv",
        build: || curve_of(&f("b1.json"), &[]),
    },
    Figure {
        golden: "b2.csv",
        build: || curve_of(&f("b2.json"), &[]),
    },
    Figure {
        golden: "b1_plus_b2.csv",
        build: || {
            let sum = derived("sum.json", &["add", &f("b1.json"), &f("b2.json")]);
            curve_of(&sum, &["--compare".into(), f("b1.json"), f("b2.json")])
        },
    },
    Figure {
        golden: "b3_times_3.csv",
        build: || {
            let p = derived("times3.json", &["scale", "--lambda", "3", &f("b3.json")]);
            curve_of(&p, &[])
        },
    },
    Figure {
        golden: "b3_times_minus_2.csv",
        build: || {
            let p = derived("times_m2.json", &["scale", "--lambda", "-2", &f("b3.json")]);
            curve_of(&p, &[])
        },
    },
    Figure {
        golden: "b3_minus_b1.csv",
        build: || {
            let d = derived("diff.json", &["sub", &f("b3.json"), &f("b1.json")]);
            curve_of(&d, &[])
        },
    },
];

/// Parses a curve CSV into rows of numbers, skipping the header.
pub fn parse_csv(text: &str) -> Vec<Vec<f64>> {
    text.lines()
        .skip(1)
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect()
}
