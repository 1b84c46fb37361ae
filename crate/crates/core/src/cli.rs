//! The `t3` command line. [`run`] takes the full argument vector and returns
//! the rendered output instead of printing, so it can be tested directly.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use crate::diagram::{builtin_example, parse_diagram, serialize_diagram, Diagram, BUILTIN_NAMES};
use crate::fox::TwistCharacter;
use crate::invariants::{alexander_polynomial, display_delta, twisted_alexander, AlexanderOptions, AlexanderResult, Collapse};
use crate::moves::{parse_move_log, replay, scramble_with, serialize_move_log, Move, ALL_FAMILIES, STABLE_FAMILIES};
use crate::presentation::{build_presentation, first_homology, tietze_simplify, HomologyDecomposition};
use crate::Error;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutcome {
    fn ok(stdout: String) -> Self {
        CommandOutcome { exit_code: 0, stdout, stderr: String::new() }
    }
}

#[derive(Parser, Debug)]
#[command(name = "t3", about = "Invariants of links in the 3-torus", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MoveSet {
    /// Every implemented move family.
    All,
    /// R1-R5 and V1, under which the invariants are stable.
    Stable,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and validate a diagram file.
    Validate { file: PathBuf },
    /// Print a built-in diagram.
    Example {
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Presentation of the fundamental group of the complement.
    Group {
        file: PathBuf,
        /// Skip Tietze simplification.
        #[arg(long)]
        raw: bool,
        #[arg(long)]
        json: bool,
    },
    /// First homology of the complement and the component classes.
    Homology {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Alexander polynomial, optionally twisted by a torsion character.
    Alexander {
        file: PathBuf,
        /// Exponents per torsion factor in divisibility order, e.g. `2=1`.
        #[arg(long)]
        twist: Option<String>,
        /// Keep one variable per free generator instead of collapsing to t.
        #[arg(long)]
        multivar: bool,
        /// Use the unsimplified presentation and every minor.
        #[arg(long)]
        raw: bool,
        /// Compute both paths and fail with exit code 2 if they disagree.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        json: bool,
    },
    /// Apply random moves.
    Scramble {
        file: PathBuf,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        steps: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        log: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "all")]
        moves: MoveSet,
    },
    /// Scramble repeatedly and check that the invariants do not change.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 30)]
        steps: usize,
        #[arg(long, value_enum, default_value = "all")]
        moves: MoveSet,
        /// Check a single recorded move log instead of random scrambles.
        #[arg(long)]
        replay: Option<PathBuf>,
    },
}

/// A failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Inconsistency(_)) { 2 } else { 1 };
        Failure { code, message: e.to_string() }
    }
}

fn input_error(message: String) -> Failure {
    Failure { code: 1, message }
}

type CliResult = std::result::Result<CommandOutcome, Failure>;

/// Runs `t3` on `argv`, whose first entry is the program name.
pub fn run<I, T>(argv: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CommandOutcome::ok(text),
                _ => CommandOutcome { exit_code: 1, stdout: String::new(), stderr: text },
            };
        }
    };
    match dispatch(cli.command) {
        Ok(out) => out,
        Err(f) => CommandOutcome { exit_code: f.code, stdout: String::new(), stderr: format!("error: {}\n", f.message) },
    }
}

fn dispatch(cmd: Command) -> CliResult {
    match cmd {
        Command::Validate { file } => validate(&file),
        Command::Example { name, output } => example(&name, output.as_deref()),
        Command::Group { file, raw, json } => group(&load(&file)?, raw, json),
        Command::Homology { file, json } => homology(&load(&file)?, json),
        Command::Alexander { file, twist, multivar, raw, check, json } => {
            alexander(&load(&file)?, twist.as_deref(), multivar, raw, check, json)
        }
        Command::Scramble { file, seed, steps, output, log, moves } => {
            scramble_cmd(&load(&file)?, seed, steps, output.as_deref(), log.as_deref(), moves)
        }
        Command::Verify { file, seed, trials, steps, moves, replay } => {
            verify(&load(&file)?, seed, trials, steps, moves, replay.as_deref())
        }
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> std::result::Result<(), Failure> {
    fs::write(path, text).map_err(|e| input_error(format!("cannot write {}: {e}", path.display())))
}

fn load(path: &Path) -> std::result::Result<Diagram, Failure> {
    Ok(parse_diagram(&read(path)?)?)
}

fn validate(path: &Path) -> CliResult {
    let d = load(path)?;
    let walls = d.events().filter(|(_, _, e)| matches!(e, crate::diagram::Event::Wall { .. })).count();
    Ok(CommandOutcome::ok(format!(
        "valid: {} components, {} crossings, {} wall punctures, {} vertices\n",
        d.components.len(),
        d.crossings.len(),
        walls,
        d.vertex_count()
    )))
}

fn example(name: &str, output: Option<&Path>) -> CliResult {
    let d = builtin_example(name).map_err(|e| input_error(format!("{e}; known: {}", BUILTIN_NAMES.join(", "))))?;
    let text = serialize_diagram(&d);
    match output {
        Some(p) => {
            write(p, &text)?;
            Ok(CommandOutcome::ok(format!("wrote {}\n", p.display())))
        }
        None => Ok(CommandOutcome::ok(text)),
    }
}

fn group(d: &Diagram, raw: bool, json: bool) -> CliResult {
    let p = build_presentation(d);
    let p = if raw { p } else { tietze_simplify(&p) };
    Ok(CommandOutcome::ok(if json { pretty(&p.to_json()) } else { p.render_text() }))
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn classes_text(h: &HomologyDecomposition) -> String {
    h.classes.iter().map(|c| format!("({},{},{})", c.delta, c.sigma, c.xi)).collect::<Vec<_>>().join(", ")
}

fn homology(d: &Diagram, json: bool) -> CliResult {
    let h = first_homology(d)?;
    if json {
        let mut v = serde_json::to_value(&h).expect("homology serializes");
        v["rendered"] = h.render().into();
        return Ok(CommandOutcome::ok(pretty(&v)));
    }
    Ok(CommandOutcome::ok(format!("H1 = {}; classes: {}\n", h.render(), classes_text(&h))))
}

/// Parses `f1=e1,f2=e2` against the torsion factors of `h`.
fn parse_twist(spec: &str, h: &HomologyDecomposition) -> std::result::Result<TwistCharacter, Failure> {
    let mut images = Vec::new();
    for (i, part) in spec.split(',').map(str::trim).filter(|s| !s.is_empty()).enumerate() {
        let (f, e) = part.split_once('=').ok_or_else(|| input_error(format!("twist entry `{part}` is not f=e")))?;
        let f: u64 = f.trim().parse().map_err(|_| input_error(format!("bad factor order `{f}`")))?;
        let e: i64 = e.trim().parse().map_err(|_| input_error(format!("bad exponent `{e}`")))?;
        match h.torsion.get(i) {
            Some(&t) if t == f => images.push(e),
            Some(&t) => return Err(input_error(format!("twist entry {} names Z/{f} but factor {} is Z/{t}", i + 1, i + 1))),
            None => return Err(input_error(format!("twist has more entries than the {} torsion factors", h.torsion.len()))),
        }
    }
    let d = h.torsion.iter().fold(1u64, |acc, &t| num_integer::lcm(acc, t));
    Ok(TwistCharacter::new(d as u32, &images, &h.torsion)?)
}

fn alexander(d: &Diagram, twist: Option<&str>, multivar: bool, raw: bool, check: bool, json: bool) -> CliResult {
    let h = first_homology(d)?;
    let sigma = match twist {
        Some(s) => parse_twist(s, &h)?,
        None => TwistCharacter::trivial(h.torsion.len()),
    };
    let collapse = if multivar { Collapse::None } else { Collapse::AllToT };
    let opts = AlexanderOptions { collapse, raw };
    let r = twisted_alexander(d, &sigma, &opts)?;
    if check {
        let other = twisted_alexander(d, &sigma, &AlexanderOptions { raw: !raw, ..opts.clone() })?;
        if !crate::invariants::unit_equivalent(&r.canonical, &other.canonical) {
            return Err(Error::Inconsistency(format!(
                "simplified and raw paths disagree: {} vs {}",
                r.canonical, other.canonical
            ))
            .into());
        }
    }
    if json {
        let mut v = r.to_json();
        v["character"] = serde_json::json!({ "d": sigma.d, "images": sigma.images });
        return Ok(CommandOutcome::ok(pretty(&v)));
    }
    let name = if sigma.is_trivial() { "Delta".to_string() } else { format!("Delta^sigma (d = {})", sigma.d) };
    Ok(CommandOutcome::ok(format!("{name} = {}\n", display_delta(&r.canonical))))
}

fn families(set: MoveSet) -> &'static [&'static str] {
    match set {
        MoveSet::All => &ALL_FAMILIES,
        MoveSet::Stable => &STABLE_FAMILIES,
    }
}

fn scramble_cmd(d: &Diagram, seed: u64, steps: usize, output: Option<&Path>, log: Option<&Path>, set: MoveSet) -> CliResult {
    let r = scramble_with(d, seed, steps, families(set));
    let text = serialize_diagram(&r.diagram);
    if let Some(p) = log {
        write(p, &serialize_move_log(&r.moves))?;
    }
    let mut out = CommandOutcome::ok(String::new());
    match output {
        Some(p) => {
            write(p, &text)?;
            out.stdout = format!("wrote {} after {} moves\n", p.display(), r.moves.len());
        }
        None => out.stdout = text,
    }
    Ok(out)
}

/// Everything `verify` compares.
struct Fingerprint {
    classes: String,
    homology: String,
    delta: AlexanderResult,
}

fn fingerprint(d: &Diagram) -> crate::Result<Fingerprint> {
    let h = first_homology(d)?;
    Ok(Fingerprint {
        classes: classes_text(&h),
        homology: h.render(),
        delta: alexander_polynomial(d, &AlexanderOptions::default())?,
    })
}

fn difference(a: &Fingerprint, b: &Fingerprint) -> Option<String> {
    if a.classes != b.classes {
        Some(format!("classes changed from {} to {}", a.classes, b.classes))
    } else if a.homology != b.homology {
        Some(format!("H1 changed from {} to {}", a.homology, b.homology))
    } else if !crate::invariants::unit_equivalent(&a.delta.canonical, &b.delta.canonical) {
        Some(format!("Delta changed from {} to {}", a.delta.canonical, b.delta.canonical))
    } else {
        None
    }
}

fn verify(d: &Diagram, seed: u64, trials: usize, steps: usize, set: MoveSet, replay_log: Option<&Path>) -> CliResult {
    let base = fingerprint(d)?;
    let runs: Vec<(String, Vec<Move>, Diagram)> = match replay_log {
        Some(p) => {
            let moves = parse_move_log(&read(p)?)?;
            let out = replay(d, &moves)?;
            vec![(format!("replay of {}", p.display()), moves, out)]
        }
        None => (0..trials as u64)
            .map(|i| {
                let s = seed.wrapping_add(i);
                let r = scramble_with(d, s, steps, families(set));
                (format!("trial {} (seed {s})", i + 1), r.moves, r.diagram)
            })
            .collect(),
    };
    let mut stable = 0;
    let mut first: Option<String> = None;
    for (label, moves, out) in &runs {
        match difference(&base, &fingerprint(out)?) {
            None => stable += 1,
            Some(why) if first.is_none() => {
                let mut s = format!("first failure: {label}: {why}\nmove log:\n");
                s.push_str(&serialize_move_log(moves));
                first = Some(s);
            }
            Some(_) => {}
        }
    }
    let mut text = String::new();
    let _ = writeln!(text, "{stable}/{} invariant-stable", runs.len());
    match first {
        None => Ok(CommandOutcome::ok(text)),
        Some(f) => {
            text.push_str(&f);
            Ok(CommandOutcome { exit_code: 1, stdout: text, stderr: String::new() })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t3(args: &[&str]) -> CommandOutcome {
        run(std::iter::once("t3").chain(args.iter().copied()))
    }

    fn fixture(dir: &tempfile::TempDir, name: &str) -> String {
        let p = dir.path().join(format!("{name}.t3d"));
        fs::write(&p, serialize_diagram(&builtin_example(name).unwrap())).unwrap();
        p.to_string_lossy().into_owned()
    }

    #[test]
    fn spec_examples() {
        let dir = tempfile::tempdir().unwrap();
        let u1 = fixture(&dir, "U1");
        let w2 = fixture(&dir, "W2");
        assert_eq!(t3(&["alexander", &u1]).stdout, "Delta = (t-1)^2\n");
        assert_eq!(t3(&["homology", &w2]).stdout, "H1 = Z^3 + Z/2; classes: (2,0,0)\n");
        let v = t3(&["verify", &u1, "--seed", "7", "--trials", "20", "--steps", "30"]);
        assert_eq!((v.exit_code, v.stdout.as_str()), (0, "20/20 invariant-stable\n"));
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(t3(&["frobnicate"]).exit_code, 1);
        assert_eq!(t3(&["alexander"]).exit_code, 1);
        assert_eq!(t3(&["validate", "/nonexistent/file.t3d"]).exit_code, 1);
        assert_eq!(t3(&["example", "nope"]).exit_code, 1);
        assert_eq!(t3(&["--help"]).exit_code, 0);
    }

    #[test]
    fn twist_parsing() {
        let dir = tempfile::tempdir().unwrap();
        let w2 = fixture(&dir, "W2");
        let out = t3(&["alexander", &w2, "--twist", "2=1", "--check"]);
        assert_eq!(out.exit_code, 0, "{}", out.stderr);
        assert!(out.stdout.starts_with("Delta^sigma (d = 2) = "));
        assert_eq!(t3(&["alexander", &w2, "--twist", "3=1"]).exit_code, 1);
        assert_eq!(t3(&["alexander", &w2, "--twist", "2=1,2=1"]).exit_code, 1);
        assert_eq!(t3(&["alexander", &w2, "--twist", "2"]).exit_code, 1);
        assert_eq!(t3(&["alexander", &w2, "--twist", "2=0"]).stdout, t3(&["alexander", &w2]).stdout);
    }

    #[test]
    fn deterministic_output() {
        let dir = tempfile::tempdir().unwrap();
        let w2 = fixture(&dir, "W2");
        let a = t3(&["scramble", &w2, "--seed", "5", "--steps", "12"]);
        assert_eq!(a, t3(&["scramble", &w2, "--seed", "5", "--steps", "12"]));
        assert!(parse_diagram(&a.stdout).is_ok());
    }
}
