//! `simonk`: normal forms and equivalence tests for Simon's congruence.
//!
//! Exit status is 0 on success or EQUIV, 1 on DISTINCT and 2 on usage errors.

use std::io::{self, BufRead, BufWriter, Write};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use rand::{rngs::StdRng, Rng, SeedableRng};
use simonk::attributes::{annotate, attributes};
use simonk::automaton::{build_subword_dfa, dfa_witness, PRODUCT_BUDGET};
use simonk::normalizer::normal_word;
use simonk::oracle::Oracle;
use simonk::ranker::{canonical_rankers, enumerate_rankers, predecessor_dag};
use simonk::{equivalent, normalize, Alphabet, Direction, Letter, Position, Word};

#[derive(Parser)]
#[command(name = "simonk", version, about = "Shortlex normal forms under Simon's congruence")]
struct Cli {
    /// Alphabet in increasing order; defaults to the input's letters by byte value.
    #[arg(long, global = true)]
    order: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Batch {
    /// Read one input per line from standard input.
    #[arg(long)]
    stdin: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print the shortlex normal form of a word.
    Normalize {
        #[arg(long)]
        k: usize,
        /// Also print the attribute table of the normal form.
        #[arg(long, conflicts_with = "stdin")]
        attrs: bool,
        #[command(flatten)]
        batch: Batch,
        #[arg(required_unless_present = "stdin", conflicts_with = "stdin")]
        word: Option<String>,
    },
    /// Decide whether two words are equivalent.
    ///
    /// With --stdin each line holds two words separated by whitespace.
    Equiv {
        #[arg(long)]
        k: usize,
        /// On DISTINCT, also print the shortlex-least subword of one word only.
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        batch: Batch,
        #[arg(required_unless_present = "stdin", conflicts_with = "stdin")]
        u: Option<String>,
        #[arg(required_unless_present = "stdin", conflicts_with = "stdin")]
        v: Option<String>,
    },
    /// Print the attribute table of a word as TSV.
    Attrs {
        /// Show the deletion pass at --k instead of the exact attributes.
        #[arg(long, requires = "k")]
        marked: bool,
        #[arg(long, requires = "marked")]
        k: Option<usize>,
        word: String,
    },
    /// Shortest rankers reaching a position.
    Rankers {
        word: String,
        position: usize,
        /// Most rankers to list.
        #[arg(long, default_value_t = 100)]
        cap: usize,
    },
    /// The automaton of subwords of length at most k.
    Dfa {
        #[arg(long)]
        k: usize,
        /// Emit Graphviz instead of a summary.
        #[arg(long)]
        dot: bool,
        word: String,
    },
    /// Exponential reference implementations.
    Oracle {
        #[command(subcommand)]
        query: OracleQuery,
    },
    /// Time normalization on random words.
    Bench {
        #[arg(long, default_value_t = 10)]
        k: usize,
        /// Alphabet sizes, at most 26.
        #[arg(long, value_delimiter = ',', default_value = "26")]
        alphabet: Vec<usize>,
        /// Word lengths.
        #[arg(long, value_delimiter = ',', default_value = "10000,100000,1000000,10000000")]
        sizes: Vec<usize>,
        /// Timed runs per size; the fastest is reported.
        #[arg(long, default_value_t = 3)]
        runs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum OracleQuery {
    /// List the subwords of length at most k, shortlex order, one per line.
    Subwords {
        #[arg(long)]
        k: usize,
        /// Ignore the size guards.
        #[arg(long)]
        force: bool,
        word: String,
    },
    /// Normal form by exhaustive search.
    NaiveNf {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        force: bool,
        word: String,
    },
    /// Equivalence by comparing subword sets.
    NaiveEquiv {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        force: bool,
        u: String,
        v: String,
    },
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<simonk::Error> for Failure {
    fn from(e: simonk::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Out<'a> = BufWriter<io::StdoutLock<'a>>;

const EQUIV: ExitCode = ExitCode::SUCCESS;

fn distinct() -> ExitCode {
    ExitCode::from(1)
}

/// Parses `texts` over `--order`, or over their own letters in byte order.
fn words(order: Option<&str>, texts: &[&str]) -> Result<Vec<Word>, Failure> {
    let alphabet = Arc::new(match order {
        Some(o) => Alphabet::from_order(o)?,
        None => Alphabet::covering(texts.iter().copied())?,
    });
    Ok(texts
        .iter()
        .map(|t| Word::parse(&alphabet, t))
        .collect::<Result<_, _>>()?)
}

fn one_word(order: Option<&str>, text: &str) -> Result<Word, Failure> {
    Ok(words(order, &[text])?.pop().expect("one word"))
}

fn oracle(force: bool) -> Oracle {
    if force {
        Oracle::unguarded()
    } else {
        Oracle::default()
    }
}

fn guarded<T>(r: simonk::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Usage(format!("{e}; pass --force to run anyway")))
}

fn stdin_lines() -> impl Iterator<Item = io::Result<String>> {
    io::stdin()
        .lock()
        .lines()
        .map(|l| l.map(|s| s.trim_end_matches('\r').to_string()))
}

fn symbol(w: &Word, l: Letter) -> char {
    w.alphabet().symbol(l) as char
}

fn equiv_line(out: &mut Out, u: &Word, v: &Word, k: usize, witness: bool) -> Result<bool, Failure> {
    if equivalent(u, v, k) {
        writeln!(out, "EQUIV")?;
        return Ok(true);
    }
    if !witness {
        writeln!(out, "DISTINCT")?;
        return Ok(false);
    }
    match dfa_witness(u, v, k, PRODUCT_BUDGET) {
        Ok(Some(w)) => writeln!(out, "DISTINCT\t{w}")?,
        Ok(None) => unreachable!("normal forms differ but the automata agree"),
        Err(e) => {
            eprintln!("simonk: no witness: {e}");
            writeln!(out, "DISTINCT")?;
        }
    }
    Ok(false)
}

fn run(cli: Cli, out: &mut Out) -> Result<ExitCode, Failure> {
    let order = cli.order.as_deref();
    match cli.command {
        Command::Normalize { k, attrs, batch, word } => {
            if batch.stdin {
                for line in stdin_lines() {
                    let u = one_word(order, &line?)?;
                    writeln!(out, "{}", normal_word(&u, k))?;
                }
                return Ok(ExitCode::SUCCESS);
            }
            let u = one_word(order, word.as_deref().unwrap_or_default())?;
            let nf = normalize(&u, k);
            writeln!(out, "{}", nf.word())?;
            if attrs {
                for ((p, &l), a) in nf.word().positions().zip(nf.word().letters()).zip(nf.attributes()) {
                    writeln!(out, "{p}\t{}\t{}\t{}", symbol(nf.word(), l), a.x, a.y)?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Equiv {
            k,
            witness,
            batch,
            u,
            v,
        } => {
            if !batch.stdin {
                let w = words(
                    order,
                    &[u.as_deref().unwrap_or_default(), v.as_deref().unwrap_or_default()],
                )?;
                return Ok(if equiv_line(out, &w[0], &w[1], k, witness)? {
                    EQUIV
                } else {
                    distinct()
                });
            }
            let mut all_equiv = true;
            for (n, line) in stdin_lines().enumerate() {
                let line = line?;
                let fields: Vec<&str> = line.split_whitespace().collect();
                let (a, b) = match fields.as_slice() {
                    [a, b] => (*a, *b),
                    [a] => (*a, ""),
                    [] => ("", ""),
                    _ => return Err(Failure::Usage(format!("line {}: expected two words", n + 1))),
                };
                let w = words(order, &[a, b])?;
                all_equiv &= equiv_line(out, &w[0], &w[1], k, witness)?;
            }
            Ok(if all_equiv { EQUIV } else { distinct() })
        }
        Command::Attrs { marked, k, word } => {
            let u = one_word(order, &word)?;
            if marked {
                let aw = annotate::<u64>(&u, k.expect("clap enforces --k"))?;
                for (p, &l) in u.positions().zip(u.letters()) {
                    match aw.y(p) {
                        Some(y) => writeln!(out, "{p}\t{}\t{}\t{y}", symbol(&u, l), aw.x(p))?,
                        None => writeln!(out, "{p}\t{}\t{}\tDEL", symbol(&u, l), aw.x(p))?,
                    }
                }
            } else {
                for ((p, &l), a) in u.positions().zip(u.letters()).zip(attributes(&u)) {
                    writeln!(out, "{p}\t{}\t{}\t{}", symbol(&u, l), a.x, a.y)?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Rankers { word, position, cap } => {
            let u = one_word(order, &word)?;
            let p = Position::checked(position, u.len())?;
            let alphabet = u.alphabet();
            let x = canonical_rankers(&u, Direction::X);
            let y = canonical_rankers(&u, Direction::Y);
            let dag = predecessor_dag(&u);
            writeln!(out, "x\t{}", dag.x(p))?;
            writeln!(out, "y\t{}", y.coordinate(p))?;
            writeln!(out, "canonical-x\t{}", x.ranker(p).render(alphabet))?;
            writeln!(out, "canonical-y\t{}", y.ranker(p).render(alphabet))?;
            let preds: Vec<String> = dag.predecessors(p).iter().map(|q| q.to_string()).collect();
            writeln!(out, "predecessors\t{}", preds.join(" "))?;
            let total = dag.ranker_counts()[p.offset()];
            match enumerate_rankers(&dag, p, cap) {
                Ok(all) => {
                    writeln!(out, "rankers\t{total}")?;
                    for r in all {
                        writeln!(out, "{}", r.render(alphabet))?;
                    }
                }
                Err(_) => {
                    writeln!(out, "rankers\t{total}\tpartial, first {cap}")?;
                    for r in dag.rankers(p).take(cap) {
                        writeln!(out, "{}", r.render(alphabet))?;
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Dfa { k, dot, word } => {
            let u = one_word(order, &word)?;
            let dfa = build_subword_dfa(&u, k);
            if dot {
                write!(out, "{}", dfa.to_dot())?;
            } else {
                writeln!(out, "live\t{}", dfa.live_states())?;
                writeln!(out, "states\t{}", dfa.state_count())?;
                writeln!(out, "transitions\t{}", dfa.transitions().count())?;
                writeln!(out, "bound\t{}", k.saturating_mul(u.len()).saturating_add(2))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { query } => match query {
            OracleQuery::Subwords { k, force, word } => {
                let u = one_word(order, &word)?;
                for w in guarded(oracle(force).subwords_up_to(&u, k))?.iter() {
                    writeln!(out, "{w}")?;
                }
                Ok(ExitCode::SUCCESS)
            }
            OracleQuery::NaiveNf { k, force, word } => {
                let u = one_word(order, &word)?;
                writeln!(out, "{}", guarded(oracle(force).naive_shortlex(&u, k))?)?;
                Ok(ExitCode::SUCCESS)
            }
            OracleQuery::NaiveEquiv { k, force, u, v } => {
                let w = words(order, &[&u, &v])?;
                if guarded(oracle(force).naive_equivalent(&w[0], &w[1], k))? {
                    writeln!(out, "EQUIV")?;
                    Ok(EQUIV)
                } else {
                    writeln!(out, "DISTINCT")?;
                    Ok(distinct())
                }
            }
        },
        Command::Bench {
            k,
            alphabet,
            sizes,
            runs,
            seed,
        } => {
            bench(out, k, &alphabet, &sizes, runs.max(1), seed)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn bench(out: &mut Out, k: usize, sigmas: &[usize], sizes: &[usize], runs: usize, seed: u64) -> Result<(), Failure> {
    let mut rng = StdRng::seed_from_u64(seed);
    writeln!(out, "sigma\tn\tk\tbest_ms\tns_per_letter")?;
    for &sigma in sigmas {
        if !(1..=26).contains(&sigma) {
            return Err(Failure::Usage(format!("alphabet size {sigma} is outside 1..=26")));
        }
        let alphabet = Arc::new(Alphabet::first_letters(sigma));
        let mut costs = Vec::new();
        for &n in sizes {
            let letters = (0..n).map(|_| Letter(rng.gen_range(0..sigma as u8))).collect();
            let u = Word::from_letters(&alphabet, letters)?;
            let best = (0..runs)
                .map(|_| {
                    let t = Instant::now();
                    std::hint::black_box(normal_word(std::hint::black_box(&u), k));
                    t.elapsed()
                })
                .min()
                .unwrap_or(Duration::ZERO);
            let per_letter = if n == 0 { 0.0 } else { best.as_nanos() as f64 / n as f64 };
            if n > 0 {
                costs.push(per_letter);
            }
            writeln!(
                out,
                "{sigma}\t{n}\t{k}\t{:.3}\t{per_letter:.2}",
                best.as_secs_f64() * 1e3
            )?;
            out.flush()?;
        }
        if let (Some(lo), Some(hi)) = (
            costs.iter().cloned().reduce(f64::min),
            costs.iter().cloned().reduce(f64::max),
        ) {
            let spread = if lo > 0.0 { hi / lo } else { 1.0 };
            let verdict = if spread < 3.0 { "linear" } else { "superlinear drift" };
            writeln!(out, "# sigma {sigma}: per-letter spread {spread:.2}x, {verdict}")?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let status = run(cli, &mut out).and_then(|s| {
        out.flush()?;
        Ok(s)
    });
    match status {
        Ok(s) => s,
        Err(Failure::Usage(msg)) => {
            let _ = out.flush();
            eprintln!("simonk: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("simonk: {e}");
            ExitCode::from(2)
        }
    }
}
