mod emit;

use std::io;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qtag_core::agcode::{
    build_ag_code, build_rational_code, build_rs_demo, designed_parameters, exact_min_distance, MinDistance,
    DEFAULT_BUDGET,
};
use qtag_core::bounds::{
    self, gs_tower_row, ihara_bounds, parse_rational, plan_rate_distance, thm_ledger, BoundsError, Q,
};
use qtag_core::curve::{make_curve, Decomposition, HyperCurve, Place};
use qtag_core::poly::{render_factored, seed_roots};
use qtag_core::seeds::{
    exhaustive_seed_search, legendre_reduction_sign, prime_family_scan, scan_prime, scan_primes, split_candidate_count,
    ScanOptions, ScanRecord, ScanReport, EXHAUSTIVE_SEARCH_CAP,
};
use qtag_core::structure::{
    affine_automorphism_orbits, check_cyclic, check_r_quasi_transitive, conjugate_pair_layout, is_block_invariant,
    AffineMap, BlockStructure, CodePermutation, OrbitReport,
};
use qtag_core::{build_seed_poly, PrimeField, SeedTuple};

use emit::{Emitter, Format};

#[derive(Parser)]
#[command(
    name = "qtag",
    version,
    about = "Seed polynomials, genus-4 AG-codes and asymptotic bounds over prime fields"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find two square witnesses for the seed polynomial over F_p.
    Seeds {
        #[arg(long)]
        prime: u64,
        #[arg(long, default_value_t = SeedTuple::DEFAULT)]
        tuple: SeedTuple,
    },
    /// Try every monic split separable degree-9 polynomial over a small F_p.
    SeedsExhaustive {
        #[arg(long)]
        prime: u64,
        #[arg(long, default_value_t = EXHAUSTIVE_SEARCH_CAP)]
        cap: u64,
    },
    /// Certify every prime in a range, one record per prime.
    Scan {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[arg(long, default_value_t = SeedTuple::DEFAULT)]
        tuple: SeedTuple,
        /// Try (2,3,4,6) and then lexicographic tuples when the tuple fails.
        #[arg(long)]
        fallback: bool,
    },
    /// Reduced Legendre sign and certification along p = residue (mod modulus).
    Families {
        #[arg(long)]
        modulus: u64,
        #[arg(long, default_value_t = 1)]
        residue: u64,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        j: u64,
    },
    /// Compare the reduced Legendre product for h(p - j) with direct evaluation.
    Reduction {
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        j: u64,
    },
    /// Inspect the curve y^2 = h(x).
    Curve {
        #[command(flatten)]
        curve: CurveArgs,
        /// List every rational place.
        #[arg(long, conflicts_with = "classify")]
        places: bool,
        /// Decomposition of x = A.
        #[arg(long, value_name = "A")]
        classify: Option<u64>,
    },
    /// Build C_L(D, m Q_inf) on the affine rational places.
    Code {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long)]
        m: u64,
        /// Use only the places over split x values.
        #[arg(long)]
        split_only: bool,
        #[arg(long)]
        min_distance: bool,
        /// Maximum number of codewords enumerated for the exact distance.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        /// Also print the generator matrix (human format).
        #[arg(long)]
        generator: bool,
    },
    /// Verify a permutation symmetry.
    Structure {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long)]
        m: u64,
        /// `involution`, `cyclic-rs`, or `orbits A,B` for x -> A x + B.
        #[arg(long, num_args = 1..=2, value_names = ["CHECK", "A,B"], required = true)]
        check: Vec<String>,
    },
    /// Asymptotic bound tables.
    #[command(subcommand)]
    Bounds(BoundsCommand),
}

#[derive(Args)]
struct CurveArgs {
    #[arg(long)]
    prime: u64,
    #[arg(long, default_value_t = SeedTuple::DEFAULT)]
    tuple: SeedTuple,
}

#[derive(Subcommand)]
enum BoundsCommand {
    /// Bounds on Ihara's function A(q).
    Ihara {
        /// One or more prime powers, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        q: Vec<u64>,
    },
    /// Garcia–Stichtenoth tower rows for levels up to L.
    Gs {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        levels: u32,
    },
    /// Choose r with 1 - delta >= r deg_G / n > 1 - delta - eps.
    Plan {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        degg: u64,
        #[arg(long, value_parser = rational)]
        ell: Q,
        #[arg(long, value_parser = rational)]
        delta: Q,
        #[arg(long, value_parser = rational)]
        eps: Q,
    },
    /// Inequality ledger for the genus-4 tower, deg_i = base_deg * 2^i.
    Ledger {
        #[arg(long)]
        levels: u32,
        #[arg(long)]
        base_deg: u64,
    },
}

fn rational(s: &str) -> Result<Q, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    Involution,
    CyclicRs,
    Orbits,
}

/// How a command ended, mapped onto the process exit code.
enum Outcome {
    Ok,
    Violated,
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

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

type Run = Result<Outcome, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Emitter::new(cli.format);
    let result = dispatch(cli.command, &mut out).and_then(|o| out.finish().map(|_| o).map_err(Failure::Io));
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Violated) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cmd: Command, out: &mut Emitter) -> Run {
    match cmd {
        Command::Seeds { prime, tuple } => seeds(out, prime, tuple),
        Command::SeedsExhaustive { prime, cap } => seeds_exhaustive(out, prime, cap),
        Command::Scan {
            from,
            to,
            tuple,
            fallback,
        } => scan(out, from, to, ScanOptions { tuple, fallback }),
        Command::Families {
            modulus,
            residue,
            count,
            j,
        } => families(out, modulus, residue, count, j),
        Command::Reduction { prime, j } => reduction(out, prime, j),
        Command::Curve {
            curve,
            places,
            classify,
        } => curve_cmd(out, &curve, places, classify),
        Command::Code {
            curve,
            m,
            split_only,
            min_distance,
            budget,
            generator,
        } => code(out, &curve, m, split_only, min_distance.then_some(budget), generator),
        Command::Structure { curve, m, check } => structure(out, &curve, m, &check),
        Command::Bounds(b) => bounds_cmd(out, b),
    }
}

fn field(p: u64) -> Result<PrimeField, Failure> {
    PrimeField::new(p).map_err(usage)
}

fn verdict(ok: bool) -> Outcome {
    if ok {
        Outcome::Ok
    } else {
        Outcome::Violated
    }
}

fn scan_line(r: &ScanRecord) -> String {
    let tuple = r.tuple.map(|v| v.to_string()).join(",");
    match (r.alpha, r.beta, r.h_alpha, r.h_beta, r.gamma_alpha, r.gamma_beta) {
        (Some(a), Some(b), Some(ha), Some(hb), Some(ga), Some(gb)) => format!(
            "p={} certified tuple={tuple} h({a})={ha}={ga}^2 h({b})={hb}={gb}^2",
            r.p
        ),
        _ => match &r.reason {
            Some(why) => format!("p={} {} tuple={tuple}: {why}", r.p, r.outcome),
            None => format!("p={} {} tuple={tuple}", r.p, r.outcome),
        },
    }
}

fn seeds(out: &mut Emitter, p: u64, tuple: SeedTuple) -> Run {
    field(p)?;
    let report: ScanReport = scan_prime(p, &ScanOptions { tuple, fallback: false });
    let record = ScanRecord::from(&report);
    out.emit(&record, || {
        let h = seed_roots(PrimeField::new(p).unwrap(), tuple)
            .map(|roots| render_factored(p, &roots))
            .unwrap_or_else(|e| e.to_string());
        format!("h = {h}\n{}", scan_line(&record))
    })?;
    Ok(verdict(report.outcome.is_certified()))
}

#[derive(Serialize)]
struct ExhaustiveRecord {
    p: u64,
    h: String,
    roots: Vec<u64>,
    alpha: u64,
    beta: u64,
    h_alpha: u64,
    h_beta: u64,
    gamma_alpha: u64,
    gamma_beta: u64,
}

fn seeds_exhaustive(out: &mut Emitter, p: u64, cap: u64) -> Run {
    let certs = exhaustive_seed_search(p, cap).map_err(usage)?;
    for c in &certs {
        let roots = c.h().roots();
        let rec = ExhaustiveRecord {
            p,
            h: render_factored(p, &roots),
            roots,
            alpha: c.alpha(),
            beta: c.beta(),
            h_alpha: c.h_alpha(),
            h_beta: c.h_beta(),
            gamma_alpha: c.gamma_alpha(),
            gamma_beta: c.gamma_beta(),
        };
        out.emit(&rec, || {
            format!(
                "{}  h({})={}={}^2  h({})={}={}^2",
                rec.h, rec.alpha, rec.h_alpha, rec.gamma_alpha, rec.beta, rec.h_beta, rec.gamma_beta
            )
        })?;
    }
    let summary = format!(
        "p={p}: {} of {} split candidates certified",
        certs.len(),
        split_candidate_count(p)
    );
    out.note(&summary)?;
    if out.format() != Format::Human {
        eprintln!("{summary}");
    }
    Ok(verdict(!certs.is_empty()))
}

fn scan(out: &mut Emitter, from: u64, to: u64, opts: ScanOptions) -> Run {
    if from > to {
        return Err(usage(format!("--from {from} exceeds --to {to}")));
    }
    let (mut total, mut certified) = (0u64, 0u64);
    for report in scan_primes(from, to, opts) {
        total += 1;
        certified += report.outcome.is_certified() as u64;
        let record = ScanRecord::from(&report);
        out.emit(&record, || scan_line(&record))?;
    }
    out.note(&format!("{certified} of {total} primes certified"))?;
    Ok(verdict(certified == total))
}

#[derive(Serialize)]
struct FamilyRecord {
    p: u64,
    j: u64,
    factors: Vec<i64>,
    reduced: i8,
    direct: i8,
    outcome: String,
    alpha: Option<u64>,
    beta: Option<u64>,
}

fn families(out: &mut Emitter, modulus: u64, residue: u64, count: usize, j: u64) -> Run {
    if modulus == 0 {
        return Err(usage("--modulus must be positive"));
    }
    let rows = prime_family_scan(modulus, residue, count, j).map_err(usage)?;
    let mut all_good = true;
    for row in rows {
        let rec = ScanRecord::from(&row.report);
        let fam = FamilyRecord {
            p: row.reduction.p,
            j,
            factors: row.reduction.factors.clone(),
            reduced: row.reduction.reduced,
            direct: row.reduction.direct,
            outcome: rec.outcome.clone(),
            alpha: rec.alpha,
            beta: rec.beta,
        };
        all_good &= fam.reduced == 1 && fam.direct == 1 && row.report.outcome.is_certified();
        out.emit(&fam, || {
            format!(
                "p={} reduced={:+} direct={:+} {}",
                fam.p, fam.reduced, fam.direct, fam.outcome
            )
        })?;
    }
    Ok(verdict(all_good))
}

fn reduction(out: &mut Emitter, p: u64, j: u64) -> Run {
    field(p)?;
    match legendre_reduction_sign(p, j) {
        Ok(r) => {
            out.emit(&r, || {
                let prod: String = r.factors.iter().map(|f| format!("({f}/p)")).collect();
                format!(
                    "(h(p-{j})/p) = {prod} = {:+} at p = {p}; direct {:+}",
                    r.reduced, r.direct
                )
            })?;
            Ok(verdict(r.agrees()))
        }
        Err(e @ qtag_core::seeds::SeedError::DegenerateEvaluation(_)) => {
            eprintln!("{e}");
            Ok(Outcome::Violated)
        }
        Err(e) => Err(usage(e)),
    }
}

fn load_curve(args: &CurveArgs) -> Result<HyperCurve, Failure> {
    let f = field(args.prime)?;
    let h = build_seed_poly(f, args.tuple).map_err(|e| {
        usage(format!(
            "tuple {} at p = {}: {e} (try another --tuple)",
            args.tuple, args.prime
        ))
    })?;
    make_curve(&h).map_err(usage)
}

fn decomposition_name(d: Decomposition) -> &'static str {
    match d {
        Decomposition::Split => "split",
        Decomposition::Ramified => "ramified",
        Decomposition::Inert => "inert",
    }
}

#[derive(Serialize)]
struct CurveSummary {
    p: u64,
    tuple: String,
    h: String,
    genus: u32,
    ramified: usize,
    split_x: Vec<u64>,
    inert_x: usize,
    rational_places: usize,
}

#[derive(Serialize)]
struct PlaceRecord {
    place: Place,
    x: Option<u64>,
    decomposition: &'static str,
}

#[derive(Serialize)]
struct ClassifyRecord {
    x: u64,
    h_x: u64,
    decomposition: &'static str,
    places: Vec<Place>,
}

fn curve_cmd(out: &mut Emitter, args: &CurveArgs, places: bool, classify: Option<u64>) -> Run {
    let curve = load_curve(args)?;
    let p = curve.p();
    if let Some(a) = classify {
        if a >= p {
            return Err(usage(format!("x = {a} is not a residue mod {p}")));
        }
        let rec = ClassifyRecord {
            x: a,
            h_x: curve.h().eval(a),
            decomposition: decomposition_name(curve.classify_x(a)),
            places: curve.places_over(a),
        };
        out.emit(&rec, || {
            let ps: Vec<String> = rec.places.iter().map(|q| format!("({q})")).collect();
            format!("x={a}: h={} {} {}", rec.h_x, rec.decomposition, ps.join(" "))
        })?;
    } else if places {
        for place in curve.rational_places() {
            let (x, kind) = match place {
                Place::Infinity => (None, "ramified"),
                Place::Affine { x, .. } => (Some(x), decomposition_name(curve.classify_x(x))),
            };
            let rec = PlaceRecord {
                place,
                x,
                decomposition: kind,
            };
            out.emit(&rec, || format!("{place} ({kind})"))?;
        }
    } else {
        let split_x: Vec<u64> = (0..p)
            .filter(|&a| curve.classify_x(a) == Decomposition::Split)
            .collect();
        let inert_x = (0..p).filter(|&a| curve.classify_x(a) == Decomposition::Inert).count();
        let rec = CurveSummary {
            p,
            tuple: args.tuple.to_string(),
            h: curve.h().to_string(),
            genus: curve.genus(),
            ramified: curve.ramified_base_places().len(),
            split_x,
            inert_x,
            rational_places: curve.rational_places().len(),
        };
        out.emit(&rec, || {
            format!(
                "y^2 = {} over F_{p}, genus {}\nramified base places {}, split x {:?}, inert x {}\nrational places {}",
                rec.h, rec.genus, rec.ramified, rec.split_x, rec.inert_x, rec.rational_places
            )
        })?;
    }
    Ok(Outcome::Ok)
}

#[derive(Serialize)]
struct CodeSummary {
    p: u64,
    n: usize,
    k: usize,
    m: u64,
    k_designed: Option<u64>,
    d_designed: Option<u64>,
    distance: Option<u64>,
    distance_kind: Option<&'static str>,
    places: Vec<String>,
}

fn code(out: &mut Emitter, args: &CurveArgs, m: u64, split_only: bool, budget: Option<u128>, generator: bool) -> Run {
    let curve = load_curve(args)?;
    let places = if split_only {
        curve.split_places()
    } else {
        curve.affine_places()
    };
    let code = build_ag_code(&curve, &places, m).map_err(usage)?;
    let designed = designed_parameters(code.n() as u64, m, curve.genus() as u64).ok();
    let dist = budget.map(|b| exact_min_distance(&code, b));
    let rec = CodeSummary {
        p: code.p(),
        n: code.n(),
        k: code.k(),
        m,
        k_designed: designed.map(|d| d.k_lower),
        d_designed: designed.map(|d| d.d_lower),
        distance: dist.map(|d| d.value()),
        distance_kind: dist.map(|d| match d {
            MinDistance::Exact(_) => "exact",
            MinDistance::LowerBoundOnly(_) => "lower_bound",
        }),
        places: code.places().iter().map(|q| q.to_string()).collect(),
    };
    out.emit(&rec, || {
        let mut s = format!("[n={}, k={}] over F_{} with G = {m} Q_inf", rec.n, rec.k, rec.p);
        if let Some(d) = rec.d_designed {
            s.push_str(&format!(", designed d >= {d}"));
        }
        if let (Some(d), Some(kind)) = (rec.distance, rec.distance_kind) {
            s.push_str(&format!(", d = {d} ({kind})"));
        }
        if generator {
            s.push('\n');
            s.push_str(code.generator_text().trim_end());
        }
        s
    })?;
    Ok(Outcome::Ok)
}

#[derive(Serialize)]
struct StructureRecord {
    check: &'static str,
    p: u64,
    m: u64,
    n: usize,
    k: usize,
    blocks: String,
    generator: String,
    holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    orbits: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    order: Option<u64>,
}

fn structure(out: &mut Emitter, args: &CurveArgs, m: u64, check: &[String]) -> Run {
    let kind = Check::from_str(&check[0], true).map_err(|_| usage(format!("unknown check {:?}", check[0])))?;
    let rec = match kind {
        Check::Involution => {
            let curve = load_curve(args)?;
            let xs: Vec<u64> = (0..curve.p())
                .filter(|&a| curve.classify_x(a) == Decomposition::Split)
                .collect();
            let layout = conjugate_pair_layout(&curve, &xs).map_err(usage)?;
            let code = build_ag_code(&curve, &layout.places, m).map_err(usage)?;
            let holds =
                check_r_quasi_transitive(&code, layout.blocks, std::slice::from_ref(&layout.swap)).map_err(usage)?;
            StructureRecord {
                check: "involution",
                p: code.p(),
                m,
                n: code.n(),
                k: code.k(),
                blocks: format!("{}x{}", layout.blocks.r, layout.blocks.m),
                generator: layout.swap.to_string(),
                holds,
                orbits: None,
                order: None,
            }
        }
        Check::CyclicRs => {
            let f = field(args.prime)?;
            let code = build_rs_demo(f, m).map_err(usage)?;
            let shift = CodePermutation::cyclic_shift(code.n());
            let one = BlockStructure::new(code.n(), code.n()).map_err(usage)?;
            let holds = check_cyclic(&code)
                && check_r_quasi_transitive(&code, one, std::slice::from_ref(&shift)).map_err(usage)?;
            StructureRecord {
                check: "cyclic-rs",
                p: code.p(),
                m,
                n: code.n(),
                k: code.k(),
                blocks: format!("1x{}", code.n()),
                generator: shift.to_string(),
                holds,
                orbits: None,
                order: None,
            }
        }
        Check::Orbits => {
            let spec = check.get(1).ok_or_else(|| usage("orbits needs A,B"))?;
            let (a, b) = spec
                .split_once(',')
                .and_then(|(a, b)| Some((a.trim().parse::<u64>().ok()?, b.trim().parse::<u64>().ok()?)))
                .ok_or_else(|| usage(format!("cannot parse {spec:?} as A,B")))?;
            let f = field(args.prime)?;
            let map = AffineMap::new(f, a, b).map_err(usage)?;
            let report = affine_automorphism_orbits(&map);
            let longest = report.orbits.iter().max_by_key(|o| o.len()).expect("F_p is nonempty");
            let points = OrbitReport::shift_order(longest);
            let code = build_rational_code(f, &points, m).map_err(usage)?;
            let shift = CodePermutation::cyclic_shift(code.n());
            let holds = check_cyclic(&code)
                && is_block_invariant(&code, BlockStructure::new(code.n(), code.n()).map_err(usage)?, &shift)
                    .map_err(usage)?;
            StructureRecord {
                check: "orbits",
                p: f.modulus(),
                m,
                n: code.n(),
                k: code.k(),
                blocks: format!("1x{}", code.n()),
                generator: shift.to_string(),
                holds,
                orbits: Some(
                    report
                        .orbits
                        .iter()
                        .map(|o| o.iter().map(u64::to_string).collect::<Vec<_>>().join(" "))
                        .collect(),
                ),
                order: Some(report.order),
            }
        }
    };
    out.emit(&rec, || {
        let mut s = format!(
            "{} over F_{}: [n={}, k={}] blocks {} generator {} -> {}",
            rec.check,
            rec.p,
            rec.n,
            rec.k,
            rec.blocks,
            rec.generator,
            if rec.holds { "invariant" } else { "NOT invariant" }
        );
        if let (Some(orbits), Some(order)) = (&rec.orbits, rec.order) {
            s.push_str(&format!(
                "\norder {order}, orbits: {}",
                orbits.iter().map(|o| format!("{{{o}}}")).collect::<Vec<_>>().join(" ")
            ));
        }
        s
    })?;
    Ok(verdict(rec.holds))
}

fn bounds_err(e: BoundsError) -> Failure {
    usage(e)
}

fn csv_io(e: csv::Error) -> Failure {
    Failure::Io(io::Error::other(e))
}

fn bounds_cmd(out: &mut Emitter, cmd: BoundsCommand) -> Run {
    match cmd {
        BoundsCommand::Ihara { q } => {
            let reports = q
                .iter()
                .map(|&q| ihara_bounds(q))
                .collect::<Result<Vec<_>, _>>()
                .map_err(bounds_err)?;
            if out.format() == Format::Csv {
                bounds::write_ihara_csv(out.raw(), &reports).map_err(csv_io)?;
                return Ok(Outcome::Ok);
            }
            for r in &reports {
                out.emit(r, || {
                    let opt = |v: Option<bounds::Real>| v.map_or("-".to_string(), |x| x.to_string());
                    format!(
                        "q={}: A(q) <= {}; Serre >= {}; square >= {}; cube >= {}; lambda = {}",
                        r.q,
                        r.dv_upper,
                        r.serre_lower,
                        opt(r.gs_square_lower),
                        opt(r.bgs_cube_lower),
                        opt(r.tvz_lambda)
                    )
                })?;
            }
        }
        BoundsCommand::Gs { q, levels } => {
            let mut rows = Vec::new();
            for i in 1..=levels {
                match gs_tower_row(q, i) {
                    Ok(r) => rows.push(r),
                    Err(BoundsError::GenusZeroLevel { .. }) => continue,
                    Err(e) => return Err(bounds_err(e)),
                }
            }
            if out.format() == Format::Csv {
                bounds::write_csv(out.raw(), &rows).map_err(csv_io)?;
                return Ok(Outcome::Ok);
            }
            for r in &rows {
                out.emit(r, || {
                    format!(
                        "i={}: N >= {}, g = {}, N/g >= {}",
                        r.i, r.n_lower, r.genus, r.ratio_lower
                    )
                })?;
            }
        }
        BoundsCommand::Plan {
            n,
            degg,
            ell,
            delta,
            eps,
        } => match plan_rate_distance(n, degg, ell, delta, eps) {
            Ok(r) => {
                if out.format() == Format::Csv {
                    bounds::write_csv(out.raw(), &[&r]).map_err(csv_io)?;
                    return Ok(Outcome::Ok);
                }
                out.emit(&r, || {
                    format!(
                        "r = {}: {} >= {} > {}; rate >= {}, relative distance >= {}",
                        r.r,
                        Q::from_integer(1) - delta,
                        r.fraction,
                        Q::from_integer(1) - delta - eps,
                        r.rate_lower,
                        r.delta
                    )
                })?;
            }
            Err(e @ BoundsError::InfeasibleInterval { .. }) => {
                eprintln!("{e}");
                return Ok(Outcome::Violated);
            }
            Err(e) => return Err(bounds_err(e)),
        },
        BoundsCommand::Ledger { levels, base_deg } => {
            let rows = thm_ledger(levels, base_deg).map_err(bounds_err)?;
            if out.format() == Format::Csv {
                bounds::write_csv(out.raw(), &rows).map_err(csv_io)?;
                return Ok(Outcome::Ok);
            }
            for r in &rows {
                out.emit(r, || {
                    format!(
                        "i={} deg={}: deg G <= {}, g <= {}, n = {}, g/n <= {}",
                        r.i, r.deg, r.deg_g_bound, r.genus_bound, r.n, r.ratio_bound
                    )
                })?;
            }
            out.note("lambda = 1/8, delta in (0, 1/8)")?;
        }
    }
    Ok(Outcome::Ok)
}
