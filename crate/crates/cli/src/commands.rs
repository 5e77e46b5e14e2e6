use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use serde_json::{json, Value};

use flagmod::chevalley::SlGroup;
use flagmod::coxeter::{telephone_number, CoxeterSystem, SubsetJ};
use flagmod::exactlinalg::{Field, PrimeField, Rationals};
use flagmod::klpoly::KlTable;
use flagmod::permod::{
    expected_e_prime_dim, meataxe_length, parabolic_quotient_check, rank_one_identities, semisimple_characteristic,
    tau_consistency, u_average_check, FlagLattice, PermutationModule,
};
use flagmod::walgebra::{EModel, StepKind};

use crate::vector::parse_terms;
use crate::{Format, Output};

/// A rendered report. `ok` decides the exit code.
struct Report {
    json: Value,
    text: String,
    csv: String,
    ok: bool,
}

fn emit(out: &Output, report: Report) -> Result<bool> {
    let body = match out.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.json)?;
            s.push('\n');
            s
        }
        Format::Csv => report.csv,
        Format::Text => report.text,
    };
    match &out.output {
        Some(path) => fs::write(path, body).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{body}"),
    }
    Ok(report.ok)
}

fn csv_string(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

#[derive(Debug, Args)]
pub struct KlArgs {
    /// Finite type label such as A3, B2 or G2.
    #[arg(long = "type")]
    pub type_label: String,
    /// Only list pairs whose polynomial is not 1.
    #[arg(long)]
    pub nontrivial_only: bool,
    #[command(flatten)]
    pub out: Output,
}

pub fn kl(args: &KlArgs) -> Result<bool> {
    let sys = CoxeterSystem::build(&args.type_label)?;
    let table = KlTable::full(&sys);
    let mut entries: Vec<_> = table
        .entries()
        .filter(|(_, _, p)| !args.nontrivial_only || p.coeffs() != [1])
        .map(|(y, w, p)| (y, w, p.clone()))
        .collect();
    entries.sort_by_key(|&(y, w, _)| (w, y));

    let coeff_list = |c: &[i64]| format!("[{}]", c.iter().map(i64::to_string).collect::<Vec<_>>().join(","));
    let rows: Vec<Value> = entries
        .iter()
        .map(|(y, w, p)| json!({"y": sys.format_word(*y), "w": sys.format_word(*w), "coeffs": p.coeffs()}))
        .collect();
    let json = json!({
        "config": {"command": "kl", "type": sys.label(), "nontrivial_only": args.nontrivial_only},
        "order": sys.order(),
        "pairs": rows.len(),
        "polynomials": rows,
    });
    let csv = csv_string(
        &["y_word", "w_word", "coefficients"],
        entries.iter().map(|(y, w, p)| vec![sys.format_word(*y), sys.format_word(*w), coeff_list(p.coeffs())]),
    )?;
    let mut text = format!("KL polynomials of {} (|W| = {}), {} pairs\n", sys.label(), sys.order(), entries.len());
    for (y, w, p) in &entries {
        writeln!(text, "  P({}, {}) = {}", sys.format_word(*y), sys.format_word(*w), p)?;
    }
    emit(&args.out, Report { json, text, csv, ok: true })
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[arg(long = "type")]
    pub type_label: String,
    /// The subset J, 0-based, e.g. "[0]".
    #[arg(long, default_value = "[]")]
    pub subset: String,
    /// A prime r for GF(r), or Q for the rationals.
    #[arg(long, default_value = "Q")]
    pub field: String,
    /// Terms as (word, scalar) pairs, e.g. '[("s1", 1), ("", 7)]'.
    #[arg(long, conflicts_with = "fuzz", required_unless_present = "fuzz")]
    pub vector: Option<String>,
    /// Reduce this many seeded random vectors instead.
    #[arg(long)]
    pub fuzz: Option<usize>,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[command(flatten)]
    pub out: Output,
}

pub fn reduce(args: &ReduceArgs) -> Result<bool> {
    let sys = CoxeterSystem::build(&args.type_label)?;
    let j = SubsetJ::parse(&args.subset)?;
    let field = args.field.trim();
    if field.eq_ignore_ascii_case("q") || field == "0" {
        reduce_over(&sys, j, &Rationals, args)
    } else {
        let r: u64 = field.parse().with_context(|| format!("field `{field}` is neither Q nor a prime"))?;
        reduce_over(&sys, j, &PrimeField::new(r)?, args)
    }
}

fn reduce_over<F: Field>(sys: &CoxeterSystem, j: SubsetJ, field: &F, args: &ReduceArgs) -> Result<bool> {
    let model = EModel::new(sys, j, field)?;
    let config = json!({
        "command": "reduce",
        "type": sys.label(),
        "subset": j.to_string(),
        "field": field.name(),
        "seed": args.seed,
    });

    if let Some(count) = args.fuzz {
        let rep = model.fuzz(count, args.seed);
        let ok = rep.successes == rep.runs;
        let json = json!({
            "config": config,
            "runs": rep.runs,
            "valid": rep.successes,
            "total_steps": rep.total_steps,
            "max_steps": rep.max_steps,
            "failures": rep.failures,
        });
        let text = format!(
            "{} J={} over {}: {}/{} certificates valid (max {} steps, seed {})\n{}",
            sys.label(),
            j,
            field.name(),
            rep.successes,
            rep.runs,
            rep.max_steps,
            args.seed,
            rep.failures.iter().map(|f| format!("  {f}\n")).collect::<String>()
        );
        let csv = csv_string(
            &["runs", "valid", "total_steps", "max_steps"],
            [vec![
                rep.runs.to_string(),
                rep.successes.to_string(),
                rep.total_steps.to_string(),
                rep.max_steps.to_string(),
            ]],
        )?;
        return emit(&args.out, Report { json, text, csv, ok });
    }

    let vector = args.vector.as_deref().unwrap_or_default();
    let terms = parse_terms(vector)?
        .into_iter()
        .map(|(w, c)| Ok((sys.parse_word(&w)?, field.parse(&c)?)))
        .collect::<Result<Vec<_>>>()?;
    let v = model.from_terms(&terms)?;
    let cert = model.reduce_to_generator(&v)?;
    let valid = model.replay(&v, &cert)?;
    let scalar_nonzero = !field.is_zero(&cert.final_scalar);
    let kind = |k: &StepKind| match k {
        StepKind::Direct => "direct",
        StepKind::Detour => "detour",
    };
    let json = json!({
        "config": config,
        "input": model.format_vector(&v),
        "steps": cert.steps,
        "kinds": cert.kinds.iter().map(kind).collect::<Vec<_>>(),
        "psi": cert.trace.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "final_scalar": field.format(&cert.final_scalar),
        "replay_valid": valid,
    });
    let mut text = format!("input: {}\nsteps: {:?}\n", model.format_vector(&v), cert.steps);
    writeln!(text, "psi:   {}", cert.trace[0])?;
    for ((s, k), psi) in cert.steps.iter().zip(&cert.kinds).zip(&cert.trace[1..]) {
        writeln!(text, "  tau_{s} ({}) -> {psi}", kind(k))?;
    }
    writeln!(
        text,
        "final scalar: {}\nreplay: {}",
        field.format(&cert.final_scalar),
        if valid { "valid" } else { "INVALID" }
    )?;
    let csv = csv_string(
        &["step", "tau", "kind", "psi"],
        std::iter::once(vec!["0".into(), String::new(), "start".into(), cert.trace[0].to_string()]).chain(
            cert.steps.iter().zip(&cert.kinds).zip(&cert.trace[1..]).enumerate().map(|(n, ((s, k), psi))| {
                vec![(n + 1).to_string(), s.to_string(), kind(k).to_string(), psi.to_string()]
            }),
        ),
    )?;
    emit(&args.out, Report { json, text, csv, ok: valid && scalar_nonzero })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Level {
    /// Dimensions and composition series only.
    Quick,
    /// Every identity check as well.
    Full,
}

#[derive(Debug, Args)]
pub struct PermodArgs {
    /// Group descriptor such as SL3; must agree with --n when both are given.
    #[arg(long)]
    pub group: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub q: u32,
    /// Coefficient characteristic; 0 selects the least prime above |G|.
    #[arg(long = "char", default_value_t = 0)]
    pub characteristic: u64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "full")]
    pub level: Level,
    #[command(flatten)]
    pub out: Output,
}

struct Check {
    name: String,
    pass: bool,
    detail: String,
}

fn resolve_rank(group: Option<&str>, n: Option<usize>) -> Result<usize> {
    let from_group = group
        .map(|g| {
            g.trim()
                .strip_prefix("SL")
                .and_then(|d| d.parse::<usize>().ok())
                .with_context(|| format!("group `{g}` must look like SL3"))
        })
        .transpose()?;
    match (from_group, n) {
        (Some(a), Some(b)) if a != b => bail!("--group SL{a} disagrees with --n {b}"),
        (Some(a), _) | (None, Some(a)) => Ok(a),
        (None, None) => bail!("give --n or --group"),
    }
}

pub fn permod(args: &PermodArgs) -> Result<bool> {
    let n = resolve_rank(args.group.as_deref(), args.n)?;
    let group = SlGroup::new(n, args.q)?;
    let r = if args.characteristic == 0 { semisimple_characteristic(&group) } else { args.characteristic };
    let field = PrimeField::new(r)?;
    let module = PermutationModule::new(&group, SubsetJ::EMPTY, &field)?;
    let weyl = group.weyl();
    let rank = weyl.rank();

    let lattice = FlagLattice::new(&module)?;
    let mut m_dims = BTreeMap::new();
    let mut e_dims = BTreeMap::new();
    let mut checks = Vec::new();
    for j in SubsetJ::all(rank) {
        let d = lattice.e_quotient_dims(j)?;
        m_dims.insert(j.to_string(), d.dim_m);
        e_dims.insert(j.to_string(), d.dim_e);
    }
    checks.push(Check {
        name: "lattice_containment".into(),
        pass: lattice.containment_holds(),
        detail: "J ⊆ K implies M_K ⊆ M_J".into(),
    });

    let composition = meataxe_length(&module, None, args.seed)?;
    let target = 1usize << rank;
    checks.push(Check {
        name: "composition_length".into(),
        pass: composition.length == target,
        detail: format!("length {} vs 2^{rank} = {target}, factors {:?}", composition.length, composition.factor_dims),
    });
    let e_total: usize = e_dims.values().sum();
    checks.push(Check {
        name: "e_dims_sum".into(),
        pass: e_total == module.dim(),
        detail: format!("sum of dim E_J = {e_total}, dim k[G/B] = {}", module.dim()),
    });

    let involutions = weyl.count_involutions();
    let involution_report = json!({
        "count": involutions,
        "two_pow_rank": target,
        "exceeds": involutions > target,
        "telephone_number": telephone_number(n),
    });

    if args.level == Level::Full {
        for j in SubsetJ::all(rank) {
            let pm = PermutationModule::new(&group, j.complement(rank), &field)?;
            let got = pm.submodule_of(&pm.d_vector(j)?)?.dim();
            let want = expected_e_prime_dim(&group, j);
            checks.push(Check {
                name: format!("dimension_formula {j}"),
                pass: got == want,
                detail: format!("dim kG·D_J = {got}, expected {want}"),
            });
            let pq = parabolic_quotient_check(&module, &lattice, j)?;
            checks.push(Check {
                name: format!("parabolic_quotient {j}"),
                pass: pq.quotient_matches && pq.e_sum_matches,
                detail: format!(
                    "dim k[G/B] - dim N_J = {}, dim k[G/P_J] = {}, E-sum = {}",
                    pq.dim_flag_module - pq.dim_n,
                    pq.dim_parabolic_module,
                    pq.e_sum
                ),
            });
        }
        let ua = u_average_check(&module)?;
        let trivial_ok = ua.generated_is_trivial.unwrap_or(true);
        checks.push(Check {
            name: "u_average_identity".into(),
            pass: ua.identity_holds && trivial_ok,
            detail: format!(
                "expansion {}, p ≡ 1 mod r: {}, generated dim {:?}",
                if ua.identity_holds { "holds" } else { "fails" },
                ua.trivial_regime,
                ua.generated_dim
            ),
        });
        let r1 = rank_one_identities(&module)?;
        checks.push(Check {
            name: "rank_one_identities".into(),
            pass: r1.failures.is_empty(),
            detail: format!("checked {:?}, failures {}", r1.checked, r1.failures.len()),
        });
        let tc = tau_consistency(&group, &field)?;
        checks.push(Check {
            name: "tau_consistency".into(),
            pass: tc.failures.is_empty(),
            detail: format!("checked {}, failures {}", tc.checked, tc.failures.len()),
        });
    }

    let ok = checks.iter().all(|c| c.pass);
    let json = json!({
        "config": {
            "command": "permod",
            "n": n,
            "q": args.q,
            "char_requested": args.characteristic,
            "seed": args.seed,
            "level": format!("{:?}", args.level).to_lowercase(),
        },
        "group": group.label(),
        "q": args.q,
        "char": r,
        "dims": {"flag_module": module.dim(), "M_J": m_dims, "E_J": e_dims},
        "composition": composition,
        "involutions": involution_report,
        "checks": checks.iter().map(|c| json!({"name": c.name, "pass": c.pass, "detail": c.detail})).collect::<Vec<_>>(),
    });

    let mut text = format!("{} over GF({r}), seed {}: dim k[G/B] = {}\n", group.label(), args.seed, module.dim());
    writeln!(text, "{:<10} {:>6} {:>6}", "J", "dim M", "dim E")?;
    for j in SubsetJ::all(rank).map(|j| j.to_string()) {
        writeln!(text, "{j:<10} {:>6} {:>6}", m_dims[&j], e_dims[&j])?;
    }
    writeln!(text, "composition: length {}, factors {:?}", composition.length, composition.factor_dims)?;
    writeln!(
        text,
        "involutions in W: {involutions} vs 2^{rank} = {target}{}",
        if involutions > target { " (exceeds)" } else { "" }
    )?;
    for c in &checks {
        writeln!(text, "[{}] {}: {}", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail)?;
    }
    let csv = csv_string(
        &["name", "pass", "detail"],
        checks.iter().map(|c| vec![c.name.clone(), c.pass.to_string(), c.detail.clone()]),
    )?;
    emit(&args.out, Report { json, text, csv, ok })
}

#[derive(Debug, Args)]
pub struct CoxeterArgs {
    #[arg(long = "type")]
    pub type_label: String,
    #[command(flatten)]
    pub out: Output,
}

pub fn coxeter(args: &CoxeterArgs) -> Result<bool> {
    let sys = CoxeterSystem::build(&args.type_label)?;
    let rank = sys.rank();
    let involutions = sys.count_involutions();
    let target = 1usize << rank;
    let y_sizes: BTreeMap<String, usize> = SubsetJ::all(rank).map(|j| (j.to_string(), sys.y_set(j).len())).collect();
    let total: usize = y_sizes.values().sum();
    let partition_ok = total == sys.order();
    let telephone = sys.label().starts_with('A').then(|| telephone_number(rank + 1));
    let json = json!({
        "config": {"command": "coxeter", "type": sys.label()},
        "order": sys.order(),
        "rank": rank,
        "involutions": involutions,
        "two_pow_rank": target,
        "involutions_exceed_two_pow_rank": involutions > target,
        "telephone_number": telephone,
        "y_sizes": y_sizes,
        "partition_holds": partition_ok,
    });
    let mut text = format!("{}: |W| = {}, rank {rank}\n", sys.label(), sys.order());
    writeln!(
        text,
        "involutions: {involutions} vs 2^{rank} = {target}: {}",
        if involutions > target { "exceeds, hypothesis holds" } else { "does not exceed" }
    )?;
    if let Some(t) = telephone {
        writeln!(text, "telephone number T({}) = {t}", rank + 1)?;
    }
    for j in SubsetJ::all(rank).map(|j| j.to_string()) {
        writeln!(text, "  |Y_{j}| = {}", y_sizes[&j])?;
    }
    writeln!(text, "sum = {total} ({})", if partition_ok { "partition holds" } else { "MISMATCH" })?;
    let csv = csv_string(&["subset", "y_size"], y_sizes.iter().map(|(j, n)| vec![j.clone(), n.to_string()]))?;
    emit(&args.out, Report { json, text, csv, ok: partition_ok })
}
