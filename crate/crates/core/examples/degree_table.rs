//! Every pipeline quantity over a range of t, as a markdown table.
//!
//! cargo run --example degree_table -- 4 12

use k3_secant::cli::{render_md, OutputRecord};

fn main() -> Result<(), k3_secant::Error> {
    let mut args = std::env::args()
        .skip(1)
        .map(|s| s.parse::<u64>().expect("integer bound"));
    let lo = args.next().unwrap_or(4);
    let hi = args.next().unwrap_or(12);
    let records = (lo..=hi)
        .map(OutputRecord::for_t)
        .collect::<Result<Vec<_>, _>>()?;
    print!("{}", render_md(&records));
    Ok(())
}
