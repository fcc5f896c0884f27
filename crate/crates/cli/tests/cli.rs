use std::io::Write;
use std::process::{Command, Stdio};

fn hcube(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hcube"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().expect("exited normally"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

/// Runs each stage on the previous stage's stdout; every stage but the last must succeed.
fn pipeline(stages: &[&[&str]]) -> (i32, String, String) {
    let mut data = String::new();
    for (i, stage) in stages.iter().enumerate() {
        let (code, out, err) = hcube(stage, &data);
        if i + 1 == stages.len() {
            return (code, out, err);
        }
        assert_eq!(code, 0, "stage {stage:?} failed: {err}");
        data = out;
    }
    unreachable!("pipeline has at least one stage")
}

fn labels_of(bundle: &str) -> Vec<u64> {
    bundle
        .lines()
        .skip_while(|l| !l.starts_with("k "))
        .skip(1)
        .take_while(|l| !l.starts_with("d "))
        .map(|l| l.split_whitespace().nth(1).unwrap().parse().unwrap())
        .collect()
}

#[test]
fn greedy_labelling_verifies() {
    let (code, out, _) = pipeline(&[&["gen", "complete", "4"], &["label", "greedy"], &["verify"]]);
    assert_eq!(code, 0);
    assert!(out.starts_with("labelling: valid"), "{out}");
}

#[test]
fn full_pipeline_through_drawing() {
    for family in [
        &["complete", "6"][..],
        &["subdivided_complete", "5"],
        &["random", "40", "60", "5", "--seed", "9"],
    ] {
        let gen: Vec<&str> = std::iter::once("gen").chain(family.iter().copied()).collect();
        let (code, out, err) = pipeline(&[&gen, &["label", "greedy"], &["draw", "via-antimagic"], &["verify"]]);
        assert_eq!(code, 0, "{family:?}: {err}");
        assert!(out.contains("drawing: valid"), "{out}");
    }
}

#[test]
fn path_power_labels_stay_below_bound() {
    let (code, out, _) = pipeline(&[&["gen", "path_power", "20", "3"], &["label", "pathpower", "--p", "3"]]);
    assert_eq!(code, 0);
    let labels = labels_of(&out);
    assert_eq!(labels.len(), 20);
    // p(2n - 1) with p = 3 as the smallest prime >= k
    assert!(*labels.iter().max().unwrap() <= 117);
}

#[test]
fn pathpower_rejects_wide_graph() {
    let (code, _, err) = pipeline(&[&["gen", "complete", "5"], &["label", "pathpower", "--p", "2"]]);
    assert_eq!(code, 1);
    assert!(err.contains("bandwidth"), "{err}");
}

#[test]
fn oracle_vol_of_k4_is_eight() {
    let (code, out, _) = pipeline(&[&["gen", "complete", "4"], &["oracle", "vol"]]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("vol 8"));
    // The witness section parses as a drawing and verifies.
    let drawing: String = out.lines().skip(2).map(|l| format!("{l}\n")).collect();
    let bundle = format!("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n{drawing}");
    let (code, out, _) = hcube(&["verify"], &bundle);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn oracle_cap_exit_code() {
    let (code, out, _) = pipeline(&[&["gen", "complete", "5"], &["oracle", "mag", "--cap", "6"]]);
    assert_eq!(code, 3);
    assert!(out.starts_with("mag unresolved: at least 7, best known 8"), "{out}");
    // Search refutes 7 and the greedy labelling reaches 8.
    for cap in ["7", "8"] {
        let (code, out, _) = pipeline(&[&["gen", "complete", "5"], &["oracle", "mag", "--cap", cap]]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().next(), Some("mag 8"));
    }
}

#[test]
fn reruns_are_byte_identical() {
    let stages: &[&[&str]] = &[
        &["gen", "random", "60", "90", "4", "--seed", "5"],
        &["draw", "lll", "--seed", "17"],
    ];
    let first = pipeline(stages);
    let second = pipeline(stages);
    assert_eq!(first.0, 0);
    assert_eq!(first, second);
    let json = |s: &[&[&str]]| {
        let mut v: Vec<Vec<&str>> = s.iter().map(|a| a.to_vec()).collect();
        v.last_mut().unwrap().insert(0, "--json");
        let refs: Vec<&[&str]> = v.iter().map(Vec::as_slice).collect();
        pipeline(&refs)
    };
    assert_eq!(json(stages), json(stages));
}

#[test]
fn parse_errors_name_the_line() {
    let (code, _, err) = hcube(&["verify"], "3 2\n0 1\n# comment\n1 7\n");
    assert_eq!(code, 2);
    assert!(err.contains("line 4"), "{err}");
    let (code, _, err) = hcube(&["label", "greedy"], "2 1\n0 1\nk 2\n0 x\n1 2\n");
    assert_eq!(code, 2);
    assert!(err.contains("line 4"), "{err}");
}

#[test]
fn invalid_artifacts_exit_one() {
    // labels 1,2,3,4 give 1+4 = 2+3
    let (code, out, _) = hcube(&["verify"], "4 2\n0 3\n1 2\nk 4\n0 1\n1 2\n2 3\n3 4\n");
    assert_eq!(code, 1);
    assert!(out.contains("both sum to 5"), "{out}");
    // 000-011 and 001-010 meet at the centre of a face
    let (code, out, _) = hcube(&["verify"], "4 2\n0 1\n2 3\nd 2\n0 00\n1 11\n2 01\n3 10\n");
    assert_eq!(code, 1);
    assert!(out.contains("cross"), "{out}");
}

#[test]
fn verify_needs_something_to_check() {
    let (code, _, err) = hcube(&["verify"], "2 1\n0 1\n");
    assert_eq!(code, 2);
    assert!(err.contains("neither"), "{err}");
}

#[test]
fn json_input_is_accepted() {
    let (code, json, _) = hcube(&["--json", "gen", "cycle", "5"], "");
    assert_eq!(code, 0);
    let (code, labelled, _) = hcube(&["label", "greedy"], &json);
    assert_eq!(code, 0);
    let (code, out, _) = hcube(&["verify"], &labelled);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn combine_uses_track_file() {
    let dir = std::env::temp_dir().join(format!("hcube-tracks-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("tracks.txt");
    // Path 0-1-2-3 split over two tracks with no edge inside a track.
    std::fs::write(&path, "t 2 2\n0 1 1\n1 2 1\n2 1 2\n3 2 2\n").unwrap();
    let (code, out, err) = pipeline(&[
        &["gen", "path", "4"],
        &["label", "combine", "--tracks", path.to_str().unwrap()],
        &["verify"],
    ]);
    std::fs::remove_dir_all(&dir).ok();
    assert_eq!(code, 0, "{err}");
    assert!(out.starts_with("labelling: valid"), "{out}");
}

#[test]
fn probes() {
    let (code, out, _) = hcube(&["probe", "max-edges", "3"], "");
    assert_eq!(code, 0);
    assert!(out.contains("d 3: 19 (exhaustive 19)"), "{out}");
    let (code, out, _) = hcube(&["probe", "crossing", "1"], "");
    assert_eq!(code, 0);
    assert!(out.starts_with("d 1: probability 3/8"), "{out}");
    let (code, _, _) = hcube(&["probe", "sidon", "singer", "4"], "");
    assert_eq!(code, 2);
}

#[test]
fn bounds_sweep_is_consistent() {
    let (code, out, err) = hcube(
        &[
            "bounds",
            "--family",
            "complete",
            "--from",
            "1",
            "--to",
            "6",
            "--exact",
            "--vol-cap",
            "4",
        ],
        "",
    );
    assert_eq!(code, 0, "{out}{err}");
    assert!(!out.contains("inconsistent"));
    assert!(out.contains("mag  lower 9  exact 13"), "{out}");
}
