//! Subcommand wiring. Every check-running command produces a RunReport;
//! `table` and `draw` emit their artifact directly.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use octo_core::constants;
use octo_core::eisenstein::hexmap::hexagon_map;
use octo_core::eisenstein::paley_tournament;
use octo_core::fano::standard_fano;
use octo_core::graphs::{dual_graph, graphs_isomorphic, incidence_graph};
use octo_core::octonion::{
    random_nonzero_octonion, seeded_rng, verify_alternative, verify_norm_multiplicative,
    verify_quaternion_subalgebras, Octonion, StructureConstants, Verification,
};
use octo_core::surface::search::{
    compare_with_oracle, search_orientations_threads,
};
use octo_core::surface::{
    canonical_triangle_set, cycle_triangulation, enumerate_triangulations, fano_from_orientation,
    oriented_triangulation_test, Tournament,
};

use crate::report::RunReport;
use crate::svg;

#[derive(Parser)]
#[command(name = "octo", version, about = "Octonion multiplication table: construction and verification")]
pub struct Cli {
    /// Output format. csv applies to `table` only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for the randomized exact checks.
    #[arg(long, global = true, default_value_t = 7)]
    pub seed: u64,
    /// Worker threads for the orientation scan.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=64))]
    pub threads: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum Source {
    /// Cyclic lines (n+1, n+2, n+4) of the standard oriented plane.
    Fano,
    /// Plane read off the residue-rule orientation of K7.
    Lattice,
    /// Index arithmetic mod 7 directly.
    Index,
}

#[derive(Subcommand)]
pub enum Command {
    /// Print the multiplication table from one of three constructions.
    Table {
        #[arg(long, value_enum, default_value_t = Source::Index)]
        source: Source,
    },
    /// Alternativity, norm composition, inverses, quaternion lines.
    VerifyAlgebra {
        /// Random exact pairs for the norm check.
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        /// Reverse one cyclic line first (test hook; makes checks fail).
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..7))]
        mutate_line: Option<u8>,
    },
    /// Scan all 2^21 orientations of K7 for triangulating ones.
    SearchOrientations {
        /// Also run the slow independent path on the deterministic
        /// 1/64 sample and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Enumerate every 14-triangle double cover directly.
    EnumerateTriangulations,
    /// Dual graph of the residue-rule triangulation vs the incidence
    /// graph of the plane.
    Dual,
    /// Render the hexagon diagram as SVG.
    Draw {
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Use the conjugate ideal's rule (circles the inverted corners).
        #[arg(long)]
        mirror: bool,
    },
}

pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

fn usage_error(msg: &str) -> Outcome {
    Outcome {
        stdout: format!("error: {msg}\n"),
        code: 2,
    }
}

/// Executes a parsed invocation. The caller prints `stdout` and exits
/// with `code`; usage errors land on stdout here only because the binary
/// routes them to stderr itself.
pub fn run(cli: Cli) -> Outcome {
    if cli.format == Format::Csv && !matches!(cli.command, Command::Table { .. }) {
        return usage_error("csv output is only available for `table`");
    }
    match cli.command {
        Command::Table { source } => cmd_table(source, cli.format),
        Command::VerifyAlgebra {
            trials,
            mutate_line,
        } => cmd_verify_algebra(cli.seed, trials, mutate_line, cli.format),
        Command::SearchOrientations { oracle } => {
            cmd_search(cli.threads as usize, oracle, cli.format)
        }
        Command::EnumerateTriangulations => cmd_triangulations(cli.format),
        Command::Dual => cmd_dual(cli.format),
        Command::Draw { out, mirror } => cmd_draw(out, mirror),
    }
}

fn report_outcome(mut report: RunReport, started: Instant, format: Format) -> Outcome {
    report.stop_clock(started);
    let stdout = match format {
        Format::Text => report.render_text(),
        Format::Json => format!("{}\n", report.to_json()),
        Format::Csv => unreachable!("csv rejected before dispatch"),
    };
    Outcome {
        stdout,
        code: report.exit_code(),
    }
}

/// The table each source must reproduce.
pub fn table_from_source(source: Source) -> StructureConstants {
    match source {
        Source::Fano => StructureConstants::from_oriented_plane(&standard_fano()),
        Source::Lattice => {
            let plane = fano_from_orientation(&paley_tournament())
                .expect("the residue-rule orientation triangulates");
            StructureConstants::from_oriented_plane(&plane)
        }
        Source::Index => StructureConstants::from_index_rules(),
    }
}

fn cmd_table(source: Source, format: Format) -> Outcome {
    let sc = table_from_source(source);
    let stdout = match format {
        Format::Text => sc.render_text(),
        Format::Csv => sc.render_csv(),
        Format::Json => format!("{}\n", sc.render_json()),
    };
    Outcome { stdout, code: 0 }
}

fn push_verification(report: &mut RunReport, v: &Verification) {
    report.check(v.name, v.pass, format!("{} [{} cases]", v.detail, v.cases));
    report.counter(&format!("{}_cases", v.name.replace('-', "_")), v.cases);
}

fn cmd_verify_algebra(
    seed: u64,
    trials: u64,
    mutate_line: Option<u8>,
    format: Format,
) -> Outcome {
    let started = Instant::now();
    let mut report = RunReport::new("verify-algebra");
    report.param("seed", seed);
    report.param("trials", trials);
    let plane = match mutate_line {
        None => standard_fano(),
        Some(k) => {
            report.param("mutate-line", k);
            standard_fano()
                .with_line_reversed(k as usize)
                .expect("index below seven")
        }
    };
    let sc = StructureConstants::from_oriented_plane(&plane);

    push_verification(&mut report, &verify_alternative(&sc));
    push_verification(&mut report, &verify_norm_multiplicative(&sc, trials, seed));
    let quat = verify_quaternion_subalgebras(&sc, &plane.underlying())
        .expect("table and plane built from the same orientation");
    push_verification(&mut report, &quat);

    let mut rng = seeded_rng(seed);
    let mut failure = None;
    let one = Octonion::one();
    for i in 0..100 {
        let x = random_nonzero_octonion(&mut rng);
        let inv = x.inverse().expect("nonzero");
        if x.multiply(&inv, &sc) != one || inv.multiply(&x, &sc) != one {
            failure = Some((i, x));
            break;
        }
    }
    report.counter("inverse_cases", 100);
    match failure {
        None => report.check(
            "inverse-round-trip",
            true,
            "x * x^-1 = x^-1 * x = 1 for 100 seeded nonzero samples",
        ),
        Some((i, x)) => report.check(
            "inverse-round-trip",
            false,
            format!("sample {i}: x = {x} does not invert"),
        ),
    }
    report_outcome(report, started, format)
}

fn cmd_search(threads: usize, oracle: bool, format: Format) -> Outcome {
    let started = Instant::now();
    let mut report = RunReport::new("search-orientations");
    report.param("threads", threads);
    report.param("oracle", oracle);

    let sr = search_orientations_threads(threads);
    report.counter("total", sr.total);
    report.counter("survivors", sr.survivors.len() as u64);
    report.counter("classes", sr.classes.len() as u64);
    report.counter("paley_mask", sr.paley_mask as u64);

    report.check(
        "survivors-nonempty",
        !sr.survivors.is_empty(),
        format!("{} orientations triangulate", sr.survivors.len()),
    );
    let revalidated = sr.survivors.iter().all(|&m| {
        oriented_triangulation_test(&Tournament::new(m).expect("scan emits valid masks"))
    });
    report.check(
        "survivors-revalidated",
        revalidated,
        "every survivor re-passes the direct predicate",
    );
    report.check(
        "single-class",
        sr.classes.len() == 1,
        format!("{} relabeling class(es)", sr.classes.len()),
    );
    report.check(
        "paley-survives",
        sr.survivors.contains(&sr.paley_mask),
        format!("residue-rule mask {}", sr.paley_mask),
    );
    report.check(
        "survivor-count-frozen",
        sr.survivors.len() == constants::SURVIVOR_COUNT,
        format!(
            "{} found, {} frozen",
            sr.survivors.len(),
            constants::SURVIVOR_COUNT
        ),
    );
    if let [class] = sr.classes.as_slice() {
        report.counter("class_size", class.size as u64);
        report.counter("canonical_mask", class.representative as u64);
        report.check(
            "canonical-mask-frozen",
            class.representative == constants::CANONICAL_SURVIVOR_MASK,
            format!(
                "{} found, {} frozen",
                class.representative,
                constants::CANONICAL_SURVIVOR_MASK
            ),
        );
    }

    if oracle {
        let cmp = compare_with_oracle();
        report.counter("sample_size", cmp.sample_size);
        report.counter("sample_survivors", cmp.fast_survivors.len() as u64);
        report.check(
            "oracle-agrees",
            cmp.agree,
            format!(
                "fast and slow paths match on {} sampled masks",
                cmp.sample_size
            ),
        );
    }
    report_outcome(report, started, format)
}

fn cmd_triangulations(format: Format) -> Outcome {
    let started = Instant::now();
    let mut report = RunReport::new("enumerate-triangulations");
    let all = enumerate_triangulations();
    report.counter("labeled_count", all.len() as u64);
    report.check(
        "count-frozen",
        all.len() == constants::TRIANGULATION_COUNT,
        format!("{} found, {} frozen", all.len(), constants::TRIANGULATION_COUNT),
    );
    let canon = canonical_triangle_set(all[0].triangles());
    report.check(
        "all-isomorphic",
        all.iter().all(|t| canonical_triangle_set(t.triangles()) == canon),
        "one triangle set up to relabeling",
    );
    report.check(
        "all-orientable",
        all.iter().all(|t| t.is_orientable()),
        "no Klein bottles among the solutions",
    );
    report.check(
        "all-torus",
        all.iter().all(|t| t.euler_characteristic() == 0),
        "Euler characteristic 0 throughout",
    );
    report_outcome(report, started, format)
}

fn cmd_dual(format: Format) -> Outcome {
    let started = Instant::now();
    let mut report = RunReport::new("dual");
    let tri = cycle_triangulation(&paley_tournament())
        .expect("the residue-rule orientation triangulates");
    let h = dual_graph(&tri);
    report.counter("vertices", h.vertex_count() as u64);
    report.counter("edges", h.edge_count() as u64);
    report.counter("girth", h.girth() as u64);

    report.check(
        "three-regular",
        h.degree_sequence() == vec![3; 14],
        "every triangle borders three others",
    );
    let split = h.bipartition();
    let sizes = split
        .as_ref()
        .map(|(a, b)| (a.len(), b.len()));
    report.check(
        "bipartite-7-7",
        sizes == Some((7, 7)),
        format!("bipartition sizes {sizes:?}"),
    );
    report.check("girth-six", h.girth() == 6, "shortest cycle has length 6");

    let levi = incidence_graph(&standard_fano().underlying());
    let mapping = graphs_isomorphic(&h, &levi);
    report.check(
        "incidence-isomorphic",
        mapping.is_some(),
        "dual matches the point-line incidence graph",
    );
    let side_consistent = match (&mapping, &split) {
        (Some(map), Some((s0, s1))) => {
            let to_points: Vec<usize> = (0..h.vertex_count())
                .filter(|&v| levi.tag(map[v]).starts_with("point"))
                .collect();
            to_points == *s0 || to_points == *s1
        }
        _ => false,
    };
    report.check(
        "side-consistent",
        side_consistent,
        "one dual color class maps onto point vertices, the other onto lines",
    );
    report_outcome(report, started, format)
}

fn cmd_draw(out: Option<PathBuf>, mirror: bool) -> Outcome {
    let svg = svg::render(&hexagon_map(mirror));
    match out {
        None => Outcome {
            stdout: svg,
            code: 0,
        },
        Some(path) => match std::fs::write(&path, &svg) {
            Ok(()) => Outcome {
                stdout: String::new(),
                code: 0,
            },
            Err(e) => Outcome {
                stdout: format!("error: cannot write {}: {e}\n", path.display()),
                code: 1,
            },
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(args).expect("valid args")
    }

    #[test]
    fn three_sources_render_identically() {
        for format in [Format::Text, Format::Csv, Format::Json] {
            let render = |source| {
                let sc = table_from_source(source);
                match format {
                    Format::Text => sc.render_text(),
                    Format::Csv => sc.render_csv(),
                    Format::Json => sc.render_json(),
                }
            };
            let index = render(Source::Index);
            assert_eq!(render(Source::Fano), index);
            assert_eq!(render(Source::Lattice), index);
        }
    }

    #[test]
    fn csv_is_for_tables_only() {
        let cli = parse(&["octo", "--format", "csv", "dual"]);
        let out = run(cli);
        assert_eq!(out.code, 2);
        assert!(out.stdout.starts_with("error:"));
    }

    #[test]
    fn verify_algebra_passes_and_mutation_fails() {
        let ok = run(parse(&["octo", "verify-algebra", "--trials", "5"]));
        assert_eq!(ok.code, 0);
        assert!(ok.stdout.contains("result: pass"));
        let bad = run(parse(&[
            "octo",
            "verify-algebra",
            "--trials",
            "5",
            "--mutate-line",
            "0",
        ]));
        assert_eq!(bad.code, 1);
        assert!(bad.stdout.contains("check alternative: FAIL"));
        assert!(bad.stdout.contains("associator"));
    }

    #[test]
    fn draw_to_stdout_has_the_golden_shape() {
        let out = run(parse(&["octo", "draw"]));
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout.matches("class=\"cell\"").count(), 7);
    }
}
