//! The self-verification suites (the machinery behind the CLI `verify`
//! command) must pass wholesale on the default seed.

use spherechord::verify;

fn assert_all_pass(rows: &[verify::CheckRow]) {
    for row in rows {
        assert!(
            row.pass,
            "{}: residual {:.3e} exceeds tolerance {:.3e} ({})",
            row.name,
            row.residual,
            row.tolerance,
            row.detail.as_deref().unwrap_or("-")
        );
    }
}

#[test]
fn chords_suite_passes() {
    assert_all_pass(&verify::chords_suite(0));
}

#[test]
fn spectrum_suite_passes() {
    assert_all_pass(&verify::spectrum_suite(0));
}

#[test]
fn frames_suite_passes() {
    assert_all_pass(&verify::frames_suite(0));
}
