//! Command implementations behind the `krstrata` binary. Each command
//! returns its output as a string so that tests can call it directly.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use anyhow::{anyhow, bail, Context, Result};
use serde::{Deserialize, Serialize};

use krstrata::admissible::{enumerate_admissible_oracle, MAX_GENUS};
use krstrata::hermitian::isotropic_flag_count;
use krstrata::invariants::superspecial_union_dimension;
use krstrata::point_counts::{
    a_tau_count, kr_connected_components, lambda_mass, minimal_stable_parabolic,
    twisted_flag_polynomial, unitary_flag_count, unitary_flag_polynomial, TwistedCoxeterDiagram,
};
use krstrata::{enumerate_admissible, evaluate_word, ExtAffineElement, GroupContext, StratumRecord};

/// Bumped whenever a serialized field changes meaning or disappears.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

/// One stratum as emitted by `enumerate` and `stratum`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumReportRow {
    pub schema: u32,
    pub word: Vec<usize>,
    pub length: usize,
    pub p_rank: usize,
    pub superspecial_at: Vec<usize>,
    pub is_supersingular: bool,
    pub alcove: Vec<Vec<i64>>,
    pub r_table: BTreeMap<String, i64>,
    /// Decimal string so that arbitrarily large counts survive JSON.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub component_count: Option<String>,
}

impl StratumReportRow {
    pub fn from_record(rec: &StratumRecord) -> Self {
        let mut r_table = BTreeMap::new();
        for ((i, j), v) in rec.r_table.determining_entries() {
            r_table.insert(format!("r_{i}_{j}"), v);
        }
        for (k, v) in rec.r_table.named_values() {
            r_table.insert(k, v);
        }
        StratumReportRow {
            schema: SCHEMA_VERSION,
            word: rec.word.letters.clone(),
            length: rec.dim,
            p_rank: rec.p_rank,
            superspecial_at: rec.superspecial_at.iter().copied().collect(),
            is_supersingular: rec.is_supersingular(),
            alcove: rec.alcove.vertices().to_vec(),
            r_table,
            component_count: None,
        }
    }
}

#[derive(Serialize)]
struct CsvRow<'a> {
    word: String,
    length: usize,
    p_rank: usize,
    superspecial_at: String,
    is_supersingular: bool,
    alcove: String,
    r_table: String,
    component_count: &'a str,
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn write_rows(rows: &[StratumReportRow], format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let mut out = String::new();
            for row in rows {
                out.push_str(&serde_json::to_string(row)?);
                out.push('\n');
            }
            Ok(out)
        }
        Format::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            for row in rows {
                let alcove: Vec<String> = row.alcove.iter().map(|v| join(v, " ")).collect();
                let r_table: Vec<String> = row.r_table.iter().map(|(k, v)| format!("{k}={v}")).collect();
                writer.serialize(CsvRow {
                    word: join(&row.word, " "),
                    length: row.length,
                    p_rank: row.p_rank,
                    superspecial_at: join(&row.superspecial_at, " "),
                    is_supersingular: row.is_supersingular,
                    alcove: alcove.join(";"),
                    r_table: r_table.join(";"),
                    component_count: row.component_count.as_deref().unwrap_or(""),
                })?;
            }
            Ok(String::from_utf8(writer.into_inner()?)?)
        }
    }
}

fn check_genus(g: usize) -> Result<()> {
    if !(1..=MAX_GENUS).contains(&g) {
        bail!("genus {g} outside the supported range 1..={MAX_GENUS}");
    }
    Ok(())
}

/// All strata of genus `g`, sorted by length and then by alcove coordinates.
pub fn stratum_rows(g: usize, p_rank: Option<usize>) -> Result<Vec<StratumReportRow>> {
    check_genus(g)?;
    let mut recs = enumerate_admissible(g)?;
    recs.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.alcove.flat().cmp(&b.alcove.flat())));
    Ok(recs
        .iter()
        .filter(|r| p_rank.is_none_or(|p| r.p_rank == p))
        .map(StratumReportRow::from_record)
        .collect())
}

pub fn cmd_enumerate(g: usize, format: Format, p_rank: Option<usize>) -> Result<String> {
    write_rows(&stratum_rows(g, p_rank)?, format)
}

/// The table of strata counts, p-rank-0 counts, superspecial dimensions and
/// `dim A_I`, one column per genus.
pub fn cmd_table(g_max: usize) -> Result<String> {
    check_genus(g_max)?;
    let mut strata = Vec::new();
    let mut p0 = Vec::new();
    let mut ssp = Vec::new();
    let mut dim = Vec::new();
    for g in 1..=g_max {
        let recs = enumerate_admissible(g)?;
        strata.push(recs.len().to_string());
        p0.push(recs.iter().filter(|r| r.p_rank == 0).count().to_string());
        ssp.push(superspecial_union_dimension(g).0.to_string());
        dim.push(recs.iter().map(|r| r.dim).max().unwrap_or(0).to_string());
    }
    let header: Vec<String> = (1..=g_max).map(|g| g.to_string()).collect();
    let rows = [
        ("g", header),
        ("KR strata", strata),
        ("KR strata of p-rank 0", p0),
        ("dim of superspecial union", ssp),
        ("dim A_I", dim),
    ];
    let label_w = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
    let col_w = rows.iter().flat_map(|(_, v)| v.iter().map(String::len)).max().unwrap_or(1);
    let mut out = String::new();
    for (label, values) in rows {
        write!(out, "{label:<label_w$}")?;
        for v in values {
            write!(out, "  {v:>col_w$}")?;
        }
        out.push('\n');
    }
    Ok(out)
}

/// Parses a word such as `"2 0 1"` or `"2,0,1"`.
pub fn parse_word(text: &str) -> Result<Vec<usize>> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().with_context(|| format!("bad letter {t:?} in word")))
        .collect()
}

/// Output of `stratum`: the JSON report plus any warnings for stderr.
#[derive(Debug)]
pub struct StratumOutput {
    pub row: StratumReportRow,
    pub warnings: Vec<String>,
}

/// Report for the stratum of `s_{w_1} ⋯ s_{w_k} τ`.
pub fn cmd_stratum(g: usize, word: &[usize], level: Option<(u64, u64)>) -> Result<StratumOutput> {
    check_genus(g)?;
    let ctx = GroupContext::symplectic(g)?;
    if let Some(&bad) = word.iter().find(|&&s| s > g) {
        bail!("letter {bad} is not a simple reflection index (expected 0..={g})");
    }
    let w = evaluate_word(ctx, word)?;
    let x = &w * &ExtAffineElement::tau(ctx)?;
    let rec = StratumRecord::from_element(x.clone()).map_err(|_| {
        anyhow!("s_{{{}}}·τ = {x} is not μ-admissible for g = {g}", join(word, " "))
    })?;
    let mut warnings = Vec::new();
    if rec.word.len() < word.len() {
        warnings.push(format!(
            "word [{}] is not reduced; using the reduced word [{}]",
            join(word, " "),
            join(&rec.word.letters, " ")
        ));
    }
    let mut row = StratumReportRow::from_record(&rec);
    if let Some((p, n)) = level {
        if rec.superspecial_at.is_empty() {
            bail!("stratum is not superspecial; component counts are only available for superspecial strata");
        }
        row.component_count = Some(kr_connected_components(&w, p, n)?.to_string());
    }
    Ok(StratumOutput { row, warnings })
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ComponentCount {
    pub word: Vec<usize>,
    pub superspecial_at: Vec<usize>,
    pub parahoric_j: Vec<usize>,
    pub component_count: String,
}

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CountsReport {
    pub schema: u32,
    pub g: usize,
    pub p: u64,
    #[serde(rename = "N")]
    pub n: u64,
    pub lambda_mass: String,
    pub unitary_flag_count: String,
    pub a_tau_count: String,
    pub components: Vec<ComponentCount>,
}

pub fn cmd_counts(g: usize, p: u64, n: u64) -> Result<String> {
    check_genus(g)?;
    let ctx = GroupContext::symplectic(g)?;
    let mut components = Vec::new();
    for row in stratum_rows(g, None)?.into_iter().filter(|r| !r.superspecial_at.is_empty()) {
        let w = evaluate_word(ctx, &row.word)?;
        components.push(ComponentCount {
            parahoric_j: minimal_stable_parabolic(&w)?.into_iter().collect(),
            component_count: kr_connected_components(&w, p, n)?.to_string(),
            word: row.word,
            superspecial_at: row.superspecial_at,
        });
    }
    let report = CountsReport {
        schema: SCHEMA_VERSION,
        g,
        p,
        n,
        lambda_mass: lambda_mass(g, p, n)?.to_string(),
        unitary_flag_count: unitary_flag_count(g, p).to_string(),
        a_tau_count: a_tau_count(g, p, n)?.to_string(),
        components,
    };
    Ok(serde_json::to_string_pretty(&report)? + "\n")
}

/// Runs the oracle cross-checks. Returns the report and whether all passed.
pub fn cmd_verify() -> (String, bool) {
    type Check = Box<dyn Fn() -> Result<()>>;
    let checks: Vec<(&str, Check)> = vec![
        (
            "admissible set equals the Bruhat-cone oracle for g = 1..3",
            Box::new(|| {
                for g in 1..=3 {
                    let fast: BTreeSet<ExtAffineElement> =
                        enumerate_admissible(g)?.into_iter().map(|r| r.element).collect();
                    if fast != enumerate_admissible_oracle(g)? {
                        bail!("mismatch at g = {g}");
                    }
                }
                Ok(())
            }),
        ),
        (
            "unitary flag product equals the twisted Poincaré sum for g = 1..8",
            Box::new(|| {
                for g in 1..=8 {
                    let d = TwistedCoxeterDiagram::symmetric_group(g, true)?;
                    if twisted_flag_polynomial(&d)? != unitary_flag_polynomial(g) {
                        bail!("mismatch at g = {g}");
                    }
                }
                Ok(())
            }),
        ),
        (
            "Hermitian flag counts equal the unitary flag count",
            Box::new(|| {
                for (g, q) in [(1usize, 2u32), (2, 2), (2, 3), (3, 2), (3, 3)] {
                    let brute = isotropic_flag_count(g, q)?;
                    if num_bigint::BigInt::from(brute) != unitary_flag_count(g, u64::from(q)) {
                        bail!("mismatch at g = {g}, q = {q}");
                    }
                }
                Ok(())
            }),
        ),
        (
            "component counts are integral for g = 1..3",
            Box::new(|| {
                for g in 1..=3 {
                    for (p, n) in [(2u64, 3u64), (3, 4), (5, 3)] {
                        cmd_counts(g, p, n)?;
                    }
                }
                Ok(())
            }),
        ),
    ];
    let mut out = String::new();
    let mut ok = true;
    for (name, check) in checks {
        match check() {
            Ok(()) => out.push_str(&format!("ok    {name}\n")),
            Err(e) => {
                ok = false;
                out.push_str(&format!("FAIL  {name}: {e:#}\n"));
            }
        }
    }
    (out, ok)
}
