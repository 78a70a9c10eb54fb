use std::cmp::Ordering;
use std::fmt::Display;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ordgap::check::BitMatrix;
use ordgap::enumerate::{bh_by_weight, ot_by_size, seq_by_height, DEFAULT_LIMIT};
use ordgap::export::{to_csv, to_dot, to_jsonl};
use ordgap::suites::{self, show_bh, Params, SUITES};
use ordgap_core::bh::{transport, LinDerivative, Syntactic};
use ordgap_core::collapse::rank_ot;
use ordgap_core::descriptor::{from_keys, to_keys, to_nested, BaseOrder, Leaf, SystemId};
use ordgap_core::dilator::TZero;
use ordgap_core::gap::{gap_embed_oracle, gap_leq, gap_leq_view, kappa_gap, kappa_n, pi_n, WnElem};
use ordgap_core::grammar::{parse_ot, parse_seq, print_keyed, print_ot, print_seq};
use ordgap_core::kruskal::nu_seq;
use ordgap_core::linear::{lin_cmp, sigma_lin, theta_lin};
use ordgap_core::order::Poset;
use ordgap_core::ot::{f_lin, ot_cmp, OtTerm};
use ordgap_core::seq::{Index, SeqView};
use ordgap_core::{Family, SeqTerm, System};

#[derive(Parser)]
#[command(name = "ordgap", version, about = "Compare, enumerate and check collapsing term systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Sys {
    #[value(name = "T")]
    T,
    #[value(name = "T0")]
    T0,
    #[value(name = "S")]
    S,
    #[value(name = "S0")]
    S0,
    #[value(name = "OT")]
    Ot,
    #[value(name = "OT0")]
    Ot0,
    /// The syntactic derivative of T0_n, entered as T0_{n+1} terms.
    #[value(name = "BH")]
    Bh,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Jsonl,
    Dot,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MapName {
    Sigma,
    Theta,
    Kappa,
    Pi,
    Plus,
    Flin,
    Nu,
    Rank,
}

#[derive(Subcommand)]
enum Command {
    /// Compare two terms: LT, EQ, GT, or INC for incomparable gap terms.
    Cmp {
        #[arg(long, value_enum)]
        sys: Sys,
        #[arg(long)]
        n: u32,
        /// Base order: 0, 1, K, chain:K, anti:K, poset:K:a<b,..., or FAMILY:N/BASE.
        #[arg(long, default_value = "1")]
        x: String,
        a: String,
        b: String,
    },
    /// List every term up to a height (size for binary terms, weight for BH).
    Enum {
        #[arg(long, value_enum)]
        sys: Sys,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "1")]
        x: String,
        #[arg(long)]
        height: usize,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: Format,
    },
    /// Apply one of the library maps.
    Map {
        #[arg(long, value_enum)]
        name: MapName,
        #[arg(long, default_value_t = 0)]
        n: u32,
        #[arg(required = true, num_args = 1..=2)]
        terms: Vec<String>,
    },
    /// Run a property suite and print its report as JSON.
    Check {
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        h: Option<usize>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        x: Option<u32>,
        #[arg(long)]
        samples: Option<usize>,
        /// Also print each kept violation on its own line.
        #[arg(long)]
        violations: bool,
    },
    /// Strong gap embeddability of two sequences `<i1,...,ik>`, checked
    /// against the gap comparator.
    OracleGap { a: String, b: String },
    /// Registered suites.
    List,
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(e: impl Display) -> Failure {
    Failure { code: 2, message: e.to_string() }
}

fn parse_family(s: &str) -> Result<Family, Failure> {
    Ok(match s {
        "T" => Family::T,
        "T0" => Family::T0,
        "S" => Family::S,
        "S0" => Family::S0,
        _ => return Err(usage(format!("unknown family '{s}'"))),
    })
}

fn parse_num<T: std::str::FromStr>(s: &str, what: &str) -> Result<T, Failure> {
    s.trim().parse().map_err(|_| usage(format!("expected {what}, got '{s}'")))
}

/// The base order descriptor grammar of `--x`.
fn parse_base(text: &str) -> Result<BaseOrder, Failure> {
    if let Some((head, inner)) = text.split_once('/') {
        let (fam, n) = head.split_once(':').ok_or_else(|| usage("nested base must be FAMILY:N/BASE"))?;
        let system = System::new(parse_family(fam)?, parse_num(n, "an index bound")?);
        return Ok(BaseOrder::Terms(Box::new(SystemId::new(system, parse_base(inner)?))));
    }
    let mut parts = text.splitn(3, ':');
    let head = parts.next().unwrap_or_default();
    match head {
        "0" => Ok(BaseOrder::Empty),
        "1" => Ok(BaseOrder::One),
        "chain" => Ok(BaseOrder::Chain(parse_num(parts.next().unwrap_or_default(), "a size")?)),
        "anti" => Ok(BaseOrder::Poset(Poset::antichain(parse_num(parts.next().unwrap_or_default(), "a size")?))),
        "poset" => {
            let size: u32 = parse_num(parts.next().unwrap_or_default(), "a size")?;
            let mut pairs = Vec::new();
            for rel in parts.next().unwrap_or_default().split(',').filter(|r| !r.is_empty()) {
                let (a, b) = rel.split_once('<').ok_or_else(|| usage(format!("expected a<b, got '{rel}'")))?;
                pairs.push((parse_num(a, "a point")?, parse_num(b, "a point")?));
            }
            Poset::generated(size, &pairs).map(BaseOrder::Poset).ok_or_else(|| usage("poset relation has a cycle or an out-of-range point"))
        }
        k => Ok(BaseOrder::Chain(parse_num(k, "a base order")?)),
    }
}

fn seq_family(sys: Sys) -> Option<Family> {
    match sys {
        Sys::T => Some(Family::T),
        Sys::T0 => Some(Family::T0),
        Sys::S => Some(Family::S),
        Sys::S0 => Some(Family::S0),
        _ => None,
    }
}

fn read_seq(text: &str, id: &SystemId) -> Result<SeqTerm<Leaf>, Failure> {
    let s = parse_seq(text).map_err(|e| usage(format!("'{text}': {e}")))?;
    id.system.check(&s, &id.base).map_err(|e| usage(format!("'{text}' is not a term of the system: {e}")))?;
    Ok(s)
}

fn read_ot(text: &str, n: u32, restricted: bool) -> Result<OtTerm, Failure> {
    let s = parse_ot(text).map_err(|e| usage(format!("'{text}': {e}")))?;
    if !s.validate(n, restricted) {
        return Err(usage(format!("'{text}' is not a term of OT{}_{n}", if restricted { "0" } else { "" })));
    }
    Ok(s)
}

fn ordering_word(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "LT",
        Ordering::Equal => "EQ",
        Ordering::Greater => "GT",
    }
}

fn gap_word(ab: bool, ba: bool) -> &'static str {
    match (ab, ba) {
        (true, true) => "EQ",
        (true, false) => "LT",
        (false, true) => "GT",
        (false, false) => "INC",
    }
}

fn cmp(sys: Sys, n: u32, x: &str, a: &str, b: &str) -> Result<String, Failure> {
    let base = parse_base(x)?;
    match sys {
        Sys::Ot | Sys::Ot0 => {
            let restricted = sys == Sys::Ot0;
            let (s, t) = (read_ot(a, n, restricted)?, read_ot(b, n, restricted)?);
            Ok(ordering_word(ot_cmp(&s, &t)).into())
        }
        Sys::Bh => {
            let id = SystemId::new(System::new(Family::T0, n + 1), base.clone());
            let (s, t) = (read_seq(a, &id)?, read_seq(b, &id)?);
            let syn = Syntactic::new(TZero { n }, base.clone());
            let lin = LinDerivative { n, base };
            let to_syn = |z: &SeqTerm<Leaf>| transport(&lin, &syn, z).map_err(|e| usage(format!("decomposition failed: {e}")));
            let (u, v) = (to_syn(&s)?, to_syn(&t)?);
            Ok(ordering_word(syn.compare(&u, &v)).into())
        }
        _ => {
            let family = seq_family(sys).expect("unary system");
            let id = SystemId::new(System::new(family, n), base);
            let (s, t) = (read_seq(a, &id)?, read_seq(b, &id)?);
            if family.is_linear() {
                Ok(ordering_word(lin_cmp(&id.base, &s, &t)).into())
            } else {
                Ok(gap_word(gap_leq(&id.base, &s, &t), gap_leq(&id.base, &t, &s)).into())
            }
        }
    }
}

/// Leaves of a base order; nested term bases are enumerated to the same height.
fn base_elements(base: &BaseOrder, height: usize) -> Result<Vec<Leaf>, Failure> {
    if let Some(keys) = base.finite_elements() {
        return Ok(keys);
    }
    match base {
        BaseOrder::Terms(id) => {
            let inner = base_elements(&id.base, height)?;
            let terms = seq_by_height(id.system, &inner, height, DEFAULT_LIMIT).map_err(usage)?;
            Ok(terms.into_iter().map(|t| Leaf::Term(Box::new(t))).collect())
        }
        _ => unreachable!("finite bases are handled above"),
    }
}

fn render(format: Format, name: &str, items: &[(String, usize)], less: impl Fn(usize, usize) -> bool, leq: impl Fn(usize, usize) -> bool) -> String {
    let labels: Vec<String> = items.iter().map(|(l, _)| l.clone()).collect();
    match format {
        Format::Jsonl => to_jsonl(items),
        Format::Dot => to_dot(name, &labels, &BitMatrix::from_fn(items.len(), less)),
        Format::Csv => to_csv(&labels, |i, j| match (leq(i, j), leq(j, i)) {
            (true, true) => "EQ",
            (true, false) => "LT",
            (false, true) => "GT",
            (false, false) => "INC",
        }),
    }
}

fn enumerate(sys: Sys, n: u32, x: &str, height: usize, format: Format) -> Result<String, Failure> {
    let base = parse_base(x)?;
    let name = format!("{sys:?}_{n}");
    match sys {
        Sys::Ot | Sys::Ot0 => {
            let terms = ot_by_size(n, sys == Sys::Ot0, height);
            let items: Vec<(String, usize)> = terms.iter().map(|s| (print_ot(s), s.size())).collect();
            let less = |i: usize, j: usize| ot_cmp(&terms[i], &terms[j]) == Ordering::Less;
            Ok(render(format, &name, &items, less, |i, j| ot_cmp(&terms[i], &terms[j]) != Ordering::Greater))
        }
        Sys::Bh => {
            let syn = Syntactic::new(TZero { n }, base.clone());
            let leaves = base_elements(&base, height)?;
            let terms = bh_by_weight(&syn, &leaves, height);
            let show_leaf = |l: &Leaf| match l {
                Leaf::Key(k) => format!("b{k}"),
                Leaf::Term(t) => format!("{{{}}}", print_seq(t)),
            };
            let items: Vec<(String, usize)> = terms.iter().map(|s| (show_bh(s, &print_keyed, &show_leaf), s.height())).collect();
            let less = |i: usize, j: usize| syn.less(&terms[i], &terms[j]);
            Ok(render(format, &name, &items, less, |i, j| !syn.less(&terms[j], &terms[i])))
        }
        _ => {
            let family = seq_family(sys).expect("unary system");
            let system = System::new(family, n);
            let leaves = base_elements(&base, height)?;
            let terms = seq_by_height(system, &leaves, height, DEFAULT_LIMIT).map_err(usage)?;
            let items: Vec<(String, usize)> = terms.iter().map(|s| (print_seq(s), s.height())).collect();
            if family.is_linear() {
                let less = |i: usize, j: usize| lin_cmp(&base, &terms[i], &terms[j]) == Ordering::Less;
                Ok(render(format, &name, &items, less, |i, j| lin_cmp(&base, &terms[i], &terms[j]) != Ordering::Greater))
            } else {
                let leq = |i: usize, j: usize| gap_leq(&base, &terms[i], &terms[j]);
                Ok(render(format, &name, &items, |i, j| i != j && leq(i, j), leq))
            }
        }
    }
}

fn keyed_arg(text: &str) -> Result<SeqTerm<u32>, Failure> {
    let s = parse_seq(text).map_err(|e| usage(format!("'{text}': {e}")))?;
    to_keys(s).ok_or_else(|| usage(format!("'{text}' must have a key leaf")))
}

fn nested_arg(text: &str) -> Result<SeqTerm<SeqTerm<u32>>, Failure> {
    let s = parse_seq(text).map_err(|e| usage(format!("'{text}': {e}")))?;
    to_nested(s).ok_or_else(|| usage(format!("'{text}' must have a term leaf {{...}}")))
}

fn map(name: MapName, n: u32, terms: &[String]) -> Result<String, Failure> {
    let fail = |e: ordgap_core::TermError| usage(format!("{name:?}: {e}"));
    let one = |k: usize| -> Result<&str, Failure> {
        if terms.len() != k {
            return Err(usage(format!("{name:?} takes {k} term(s)")));
        }
        Ok(&terms[0])
    };
    match name {
        MapName::Sigma => Ok(print_keyed(&sigma_lin(n, &nested_arg(one(1)?)?).map_err(fail)?)),
        MapName::Theta => Ok(print_keyed(&theta_lin(n, &nested_arg(one(1)?)?).map_err(fail)?)),
        MapName::Kappa if terms.len() == 2 => {
            let w = WnElem::Pair(keyed_arg(&terms[0])?, keyed_arg(&terms[1])?);
            Ok(print_keyed(&kappa_n(n, &w).map_err(fail)?))
        }
        MapName::Kappa => Ok(print_keyed(&kappa_gap(n, &nested_arg(one(1)?)?).map_err(fail)?)),
        MapName::Pi => {
            one(2)?;
            Ok(print_keyed(&pi_n(n, &keyed_arg(&terms[0])?, &keyed_arg(&terms[1])?).map_err(fail)?))
        }
        MapName::Plus => {
            let text = one(1)?;
            Ok(print_ot(&parse_ot(text).map_err(|e| usage(format!("'{text}': {e}")))?.plus()))
        }
        MapName::Flin => Ok(print_keyed(&f_lin(n, &read_ot(one(1)?, n, true)?).map_err(fail)?)),
        MapName::Nu => {
            let s = keyed_arg(one(1)?)?;
            let id = SystemId::new(System::new(Family::T0, n), BaseOrder::One);
            id.system.check(&from_keys(s.clone()), &id.base).map_err(fail)?;
            Ok(print_keyed(&nu_seq(n, 1, &s).map_err(fail)?))
        }
        MapName::Rank => Ok(rank_ot(n, &read_ot(one(1)?, n, true)?).map_err(fail)?.to_string()),
    }
}

/// `<i1,...,ik>` without any term constraint.
fn raw_sequence(text: &str) -> Result<Vec<Index>, Failure> {
    let body = text.trim().strip_prefix('<').and_then(|t| t.strip_suffix('>')).ok_or_else(|| usage(format!("expected <i1,...,ik>, got '{text}'")))?;
    body.split(',').map(str::trim).filter(|p| !p.is_empty()).map(|p| parse_num(p, "an index")).collect()
}

fn oracle_gap(a: &str, b: &str) -> Result<String, Failure> {
    let (u, v) = (raw_sequence(a)?, raw_sequence(b)?);
    let oracle = gap_embed_oracle(&u, &v);
    let fast = gap_leq_view(&ordgap_core::order::One, SeqView { indices: &u, leaf: &0 }, SeqView { indices: &v, leaf: &0 });
    if oracle != fast {
        return Err(Failure { code: 1, message: format!("disagreement: oracle {oracle}, comparator {fast}") });
    }
    Ok(oracle.to_string())
}

struct CheckArgs {
    seed: u64,
    h: Option<usize>,
    n: Option<u32>,
    x: Option<u32>,
    samples: Option<usize>,
    violations: bool,
}

fn check(suite: &str, a: CheckArgs) -> Result<String, Failure> {
    let params = Params { n: a.n, h: a.h, x: a.x, samples: a.samples, seed: a.seed };
    let report = suites::run_suite(suite, &params).map_err(usage)?;
    let mut text = report.to_jsonl();
    if a.violations && !report.violations.is_empty() {
        text.push('\n');
        text.push_str(report.violations_jsonl().trim_end());
    }
    if report.passed() {
        Ok(text)
    } else {
        Err(Failure { code: 1, message: text })
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Cmp { sys, n, x, a, b } => cmp(sys, n, &x, &a, &b),
        Command::Enum { sys, n, x, height, format } => enumerate(sys, n, &x, height, format),
        Command::Map { name, n, terms } => map(name, n, &terms),
        Command::Check { suite, seed, h, n, x, samples, violations } => check(&suite, CheckArgs { seed, h, n, x, samples, violations }),
        Command::OracleGap { a, b } => oracle_gap(&a, &b),
        Command::List => Ok(SUITES.iter().map(|s| format!("{}\t{}", s.name, s.about)).collect::<Vec<_>>().join("\n")),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(text) => {
            if !text.is_empty() {
                println!("{}", text.trim_end());
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            // Reports go to stdout even on failure; usage errors to stderr.
            if f.code == 1 {
                println!("{}", f.message.trim_end());
            } else {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}
