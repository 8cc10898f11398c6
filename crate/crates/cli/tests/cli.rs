use num_bigint::BigUint;
use quadpair::drop_kit::{CandidateList, DropReport};
use quadpair::matrix_oracle::{OracleDropReport, TensorLemmaReport};
use quadpair::minuscule::RepSummary;
use quadpair::mt_decision::{MtStatus, MtVerdict, Witness};
use quadpair::root_kit::LengthClass;
use quadpair_cli::table::TableRow;
use quadpair_cli::{run, EXIT_OK, EXIT_PRECONDITION, EXIT_USAGE};

struct Outcome {
    code: i32,
    out: String,
    err: String,
}

fn quadpair(args: &[&str]) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("quadpair").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Outcome {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn ok(args: &[&str]) -> String {
    let o = quadpair(args);
    assert_eq!(o.code, EXIT_OK, "{args:?}: {}", o.err);
    assert!(o.err.is_empty());
    o.out
}

fn fails(args: &[&str], code: i32) -> String {
    let o = quadpair(args);
    assert_eq!(o.code, code, "{args:?}: out {} err {}", o.out, o.err);
    assert!(o.out.is_empty());
    o.err
}

#[test]
fn mt_check_reports_the_family_one_witness() {
    let v: MtVerdict = serde_json::from_str(&ok(&["mt-check", "--g", "10", "--s", "6", "--endo", "Z"])).unwrap();
    assert_eq!(v.status, MtStatus::ExceptionalCase);
    let w = v.witness.unwrap();
    assert_eq!(w.r_or_t, 3);
    assert_eq!((w.g, w.s), (BigUint::from(10u32), BigUint::from(6u32)));
}

#[test]
fn mt_check_rejects_odd_toric_rank_for_quaternion_types() {
    let err = fails(&["mt-check", "--g", "7", "--s", "3", "--endo", "II"], EXIT_PRECONDITION);
    assert!(err.contains("Type II/III requires even s"), "{err}");
}

#[test]
fn mt_check_usage_errors() {
    fails(&["mt-check", "--g", "7", "--s", "3", "--endo", "IV"], EXIT_USAGE);
    fails(&["mt-check", "--g", "-1", "--s", "0", "--endo", "Z"], EXIT_USAGE);
    fails(&["mt-check", "--g", "7"], EXIT_USAGE);
    fails(&["bogus"], EXIT_USAGE);
}

#[test]
fn mt_check_accepts_large_dimensions() {
    let g = "1".to_string() + &"0".repeat(40);
    let v: MtVerdict = serde_json::from_str(&ok(&["mt-check", "--g", &g, "--s", "2", "--endo", "III"])).unwrap();
    assert!(v.status.is_proved());
}

#[test]
fn mt_exceptional_lists_eight_trivial_endomorphism_cases_up_to_300() {
    let list: Vec<Witness> = serde_json::from_str(&ok(&["mt-exceptional", "--max-g", "300", "--endo", "Z"])).unwrap();
    assert_eq!(list.len(), 8);
    assert!(list.windows(2).all(|p| p[0].g <= p[1].g));
}

#[test]
fn table_formats_carry_the_same_rows() {
    let rows: Vec<TableRow> = serde_json::from_str(&ok(&["table", "--max-rank", "4"])).unwrap();
    let csv = ok(&["table", "--max-rank", "4", "--format", "csv"]);
    let md = ok(&["table", "--max-rank", "4", "--format", "markdown"]);
    let csv_lines: Vec<&str> = csv.lines().collect();
    assert_eq!(csv_lines[0], "family,rank,weight,dimension,sign,drops_long,drops_short");
    assert_eq!(csv_lines.len(), rows.len() + 1);
    let md_rows: Vec<&str> = md.lines().filter(|l| l.starts_with("| ")).skip(1).collect();
    assert_eq!(md_rows.len(), rows.len());
    for ((row, c), m) in rows.iter().zip(&csv_lines[1..]).zip(&md_rows) {
        let cells = [
            row.family.clone(),
            row.rank.to_string(),
            row.weight.clone(),
            row.dimension.clone(),
            row.sign.clone(),
            row.drops_long.clone().unwrap_or_default(),
            row.drops_short.clone().unwrap_or_default(),
        ];
        assert_eq!(*c, cells.join(","));
        let md_cells: Vec<&str> = m.trim_matches('|').split('|').map(str::trim).collect();
        assert_eq!(md_cells, cells.iter().map(String::as_str).collect::<Vec<_>>());
    }
    assert!(md.contains("| B | 4 | w4 | 16 | +1 | 4 | 8 |"));
    assert!(!md.contains("E6"));
}

#[test]
fn table_flags_exceptional_rows() {
    let rows: Vec<TableRow> = serde_json::from_str(&ok(&["table", "--max-rank", "7"])).unwrap();
    let e: Vec<(&str, &str)> = rows
        .iter()
        .filter(|r| r.family.starts_with('E'))
        .map(|r| (r.family.as_str(), r.dimension.as_str()))
        .collect();
    assert_eq!(e, vec![("E6", "27"), ("E6", "27"), ("E7", "56")]);
    let md = ok(&["table", "--max-rank", "7", "--format", "markdown"]);
    assert!(md.contains("E6 and E7 rows lie outside the classical A-D table."));
}

#[test]
fn minuscule_and_drops() {
    let reps: Vec<RepSummary> = serde_json::from_str(&ok(&["minuscule", "--type", "E6"])).unwrap();
    assert_eq!(reps.len(), 2);
    let spin: DropReport = serde_json::from_str(&ok(&["drops", "--type", "B", "--rank", "4", "--weight", "spin"])).unwrap();
    assert_eq!(spin.rep.dimension, BigUint::from(16u32));
    assert_eq!(spin.drop(LengthClass::Long), Some(&BigUint::from(4u32)));
    assert_eq!(spin.drop(LengthClass::Short), Some(&BigUint::from(8u32)));
}

#[test]
fn label_and_type_errors_are_usage_errors() {
    fails(&["minuscule", "--type", "Q5"], EXIT_USAGE);
    fails(&["drops", "--type", "D6", "--weight", "spin"], EXIT_USAGE);
    fails(&["drops", "--type", "C3", "--weight", "frob"], EXIT_USAGE);
    fails(&["oracle", "drop", "--type", "D6", "--weight", "spin+", "--roots", "e1-"], EXIT_USAGE);
    fails(&["oracle", "drop", "--type", "D6", "--weight", "spin+", "--roots", "e1-a2"], EXIT_USAGE);
}

#[test]
fn library_preconditions_exit_with_two() {
    let err = fails(&["drops", "--type", "C3", "--weight", "w2"], EXIT_PRECONDITION);
    assert!(err.starts_with("error: "));
    fails(&["oracle", "drop", "--type", "D6", "--weight", "spin+", "--roots", "e1-e2,e2-e3"], EXIT_PRECONDITION);
    fails(&["classify", "--two-g", "7"], EXIT_PRECONDITION);
    fails(&["oracle", "tensor-lemma", "--k1", "2", "--k2", "2", "--trials", "0", "--seed", "1"], EXIT_PRECONDITION);
    fails(
        &["oracle", "tensor-lemma", "--k1", "2", "--k2", "2", "--trials", "3", "--seed", "1", "--prime", "4"],
        EXIT_PRECONDITION,
    );
}

#[test]
fn classify_round_trips() {
    let list: CandidateList = serde_json::from_str(&ok(&["classify", "--two-g", "20"])).unwrap();
    assert_eq!(list.two_g, BigUint::from(20u32));
    let names: Vec<String> = list.candidates.iter().map(|c| c.cartan_type.to_string()).collect();
    assert_eq!(names, vec!["A5", "C10"]);
}

#[test]
fn oracle_drop_on_a_single_root_and_an_orthogonal_pair() {
    let single: OracleDropReport = serde_json::from_str(&ok(&[
        "oracle", "drop", "--type", "B", "--rank", "4", "--weight", "spin", "--roots", "e1",
    ]))
    .unwrap();
    assert_eq!((single.degree, single.drop, single.exploratory), (2, 8, false));
    let pair: OracleDropReport = serde_json::from_str(&ok(&[
        "oracle", "drop", "--type", "D6", "--weight", "spin+", "--roots", "e1-e2,e3-e4", "--prime", "10007",
    ]))
    .unwrap();
    assert!(pair.exploratory);
    assert_eq!(pair.roots.len(), 2);
}

#[test]
fn tensor_lemma_is_deterministic() {
    let args = ["oracle", "tensor-lemma", "--k1", "2", "--k2", "3", "--trials", "20", "--seed", "7"];
    let a = ok(&args);
    assert_eq!(a, ok(&args));
    let report: TensorLemmaReport = serde_json::from_str(&a).unwrap();
    assert!(report.passed);
    assert_eq!(report.expected_degree, 4);
    let mut with_dims = args.to_vec();
    with_dims.extend(["--dims", "3,4"]);
    let r: TensorLemmaReport = serde_json::from_str(&ok(&with_dims)).unwrap();
    assert_eq!(r.spec.dims, (3, 4));
}

#[test]
fn help_goes_to_stdout() {
    let out = ok(&["--help"]);
    assert!(out.contains("mt-check"));
}
