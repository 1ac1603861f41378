//! Write membership curves of the worked examples as CSV files, ready for
//! any plotting tool.
//!
//! ```bash
//! cargo run --example figure_curves -- out/
//! ```

use std::error::Error;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use pdmf::{sample_curve, FuzzyNumber, GPdmf};

fn csv(num: &dyn FuzzyNumber, n: usize) -> Result<String, Box<dyn Error>> {
    let mut out = String::from("x,f\n");
    for (x, f) in sample_curve(num, n)? {
        writeln!(out, "{x},{f}")?;
    }
    Ok(out)
}

pub fn write_curves(dir: &Path) -> Result<Vec<PathBuf>, Box<dyn Error>> {
    let b1 = GPdmf::new(-1.0, 0.0, 1.0, 0.0, 0.0)?;
    let b2 = GPdmf::new(-1.0, 1.0, 4.0, 0.0, 0.0)?;
    let b3 = GPdmf::new(-1.0, 1.0, 2.0, -0.6745, -0.4399)?;
    let curves = [
        ("b1", b1),
        ("b2", b2),
        ("b1_plus_b2", b1 + b2),
        ("b3_times_3", 3.0 * b3),
        ("b3_times_minus_2", -2.0 * b3),
        ("b3_minus_b1", b3 - b1),
    ];
    fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for (name, num) in curves {
        let path = dir.join(format!("{name}.csv"));
        fs::write(&path, csv(&num, 201)?)?;
        written.push(path);
    }
    Ok(written)
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("pdmf-curves"));
    for path in write_curves(&dir)? {
        println!("wrote {}", path.display());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
