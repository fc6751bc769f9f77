//! Builds the full report at default settings and prints it as JSON.

use klein_volume::specfun::SeriesPolicy;
use klein_volume::volume::VolumeReport;

fn main() {
    let report = VolumeReport::compute(&SeriesPolicy::default()).expect("report");
    println!("{}", report.to_json());
}
