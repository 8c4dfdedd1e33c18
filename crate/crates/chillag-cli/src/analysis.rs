//! End-to-end verification pipelines behind the CLI commands.

use chillag_core::chartab::character_table;
use chillag_core::cyclo::{Cyclotomic, GaloisAutomorphism, Rationality};
use chillag_core::group::{
    catalog_group, parse_generators, pi_part, primes_of, GroupError, PermGroup,
};
use chillag_core::pipart::{
    analyze_pi, brauer_pi, lemma_upper_bound_check, pim_structure_constants,
    pipartial_structure_constants,
};
use chillag_core::rat::{rat, Rat};
use chillag_core::sfca::{bounds_certificate, galois_column_test, Sfca, Table};
use num_traits::Zero;

use crate::report::*;
use crate::table_file::TableFile;

/// Input problems exit with 3, failed theorem verdicts with 2.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Internal(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) | CliError::Internal(m) => write!(f, "{m}"),
        }
    }
}

pub fn load_group(spec: &str, cap: u64) -> Result<PermGroup, CliError> {
    match catalog_group(spec, cap) {
        Ok(g) => Ok(g),
        Err(GroupError::UnknownGroup(_)) => {
            parse_generators(spec, cap).map_err(|e| CliError::Input(e.to_string()))
        }
        Err(e) => Err(CliError::Input(e.to_string())),
    }
}

fn rationality_tag(v: &Cyclotomic) -> &'static str {
    match v.rationality() {
        Rationality::Rational(_) => {
            if v.is_rational_integer() {
                "integer"
            } else {
                "non-integer-rational"
            }
        }
        Rationality::Irrational => "irrational",
    }
}

fn rat_str(r: &Rat) -> String {
    chillag_core::cyclo::fmt_rat(r)
}

/// Builds one table section from an exact tensor and its value table.
fn build_section(
    kind: &str,
    alg: &Sfca,
    entries: Vec<Vec<Cyclotomic>>,
    basis_labels: Vec<String>,
    column_labels: Vec<String>,
    u: Vec<Rat>,
    v: Vec<Rat>,
    window: (Rat, Rat),
) -> Result<TableSection, CliError> {
    let table = Table::exact_verified(alg, entries, column_labels.clone())
        .map_err(|e| CliError::Internal(format!("{kind} table verification: {e}")))?;
    let (row_sums_alg, s) = alg.row_sums_exact();
    let column_sums = table.column_sums_exact().unwrap();
    let col_reports: Vec<ColumnSumReport> = column_sums
        .iter()
        .map(|c| ColumnSumReport {
            value: c.literal(),
            rationality: rationality_tag(c).to_string(),
        })
        .collect();
    let column_integrality =
        Verdict::from_bool(column_sums.iter().all(|c| c.is_rational_integer()));
    let bounds = match bounds_certificate(alg, &table, &u, &v, 1e-9) {
        Ok(cert) => BoundsReport {
            lower: rat_str(&cert.lower),
            upper: rat_str(&cert.upper),
            s: rat_str(&cert.s),
            verdict: Verdict::from_bool(cert.verdict),
        },
        Err(e) => BoundsReport {
            lower: String::new(),
            upper: String::new(),
            s: format!("relation rejected: {e}"),
            verdict: Verdict::Fail,
        },
    };
    let (wlow, whigh) = window;
    let window = BoundsReport {
        lower: rat_str(&wlow),
        upper: rat_str(&whigh),
        s: rat_str(&s),
        verdict: Verdict::from_bool(wlow <= s && s <= whigh),
    };
    let trace_identity = Verdict::from_bool(
        table
            .row_sums_from_table()
            .unwrap()
            .iter()
            .zip(&row_sums_alg)
            .all(|(x, y)| *x == Cyclotomic::from_rat(y.clone())),
    );
    let sigmas = GaloisAutomorphism::all(table.exponent().unwrap());
    let galois = galois_column_test(&table, &sigmas)
        .map_err(|e| CliError::Internal(e.to_string()))?;
    Ok(TableSection {
        kind: kind.to_string(),
        basis_labels,
        column_labels,
        s: rat_str(&s),
        row_sums: row_sums_alg.iter().map(rat_str).collect(),
        column_sums: col_reports,
        column_integrality,
        bounds,
        window,
        trace_identity,
        galois_actions: Verdict::from_bool(galois.all_actions_exist()),
    })
}

fn section_ok(s: &TableSection) -> bool {
    !(s.column_integrality.failed()
        || s.bounds.verdict.failed()
        || s.window.verdict.failed()
        || s.trace_identity.failed()
        || s.galois_actions.failed())
}

/// `analyze` pipeline; the i32 is the suggested process exit code.
pub fn analyze(
    group_spec: &str,
    pi_opt: Option<Vec<u64>>,
    p_opt: Option<u64>,
    seed: u64,
    tol: f64,
    cap: u64,
) -> Result<(VerificationReport, i32), CliError> {
    let g = load_group(group_spec, cap)?;
    let order = g.order();
    let pi: Option<Vec<u64>> = match (pi_opt, p_opt) {
        (Some(_), Some(_)) => {
            return Err(CliError::Input("--pi and --p are mutually exclusive".into()))
        }
        (Some(pi), None) => {
            let mut pi = pi;
            pi.sort_unstable();
            pi.dedup();
            Some(pi)
        }
        (None, Some(p)) => Some(brauer_pi(order, p)),
        (None, None) => None,
    };
    let t = character_table(&g).map_err(|e| CliError::Internal(e.to_string()))?;
    let mut sections = Vec::new();
    let mut errors: Vec<String> = Vec::new();
    let mut lemma = LemmaSection::not_applicable();
    let mut exit = 0;

    // ordinary section
    let n_cls = t.classes.len();
    let (labels, alpha) = t
        .irr_structure_constants()
        .map_err(|e| CliError::Internal(e.to_string()))?;
    let alg = Sfca::new(labels.clone(), alpha).map_err(|e| CliError::Internal(e.to_string()))?;
    let (a_max, _) = g.max_abelian_pi_subgroup(&primes_of(order));
    let u: Vec<Rat> = t.degrees.iter().map(|&d| rat(d as i64)).collect();
    let mut v = vec![Rat::zero(); n_cls];
    v[0] = rat(order as i64);
    let window = (
        rat(std::cmp::max(n_cls as u64, a_max) as i64),
        rat(order as i64),
    );
    let column_labels: Vec<String> = t.classes.iter().map(|c| c.label.clone()).collect();
    sections.push(build_section(
        "ordinary",
        &alg,
        t.entries.clone(),
        labels,
        column_labels.clone(),
        u,
        v,
        window,
    )?);

    // pi sections
    if let Some(pi) = pi.clone() {
        match g.is_pi_separable(&pi, order) {
            Ok(true) => {
                let a = analyze_pi(&g, &t, &pi)
                    .map_err(|e| CliError::Internal(e.to_string()))?;
                let n = a.ipi.irreducibles.len();
                let pi_labels: Vec<String> = a
                    .class_ids
                    .iter()
                    .map(|&c| t.classes[c].label.clone())
                    .collect();
                let (h_order, _) = g.max_abelian_pi_subgroup(&pi);
                let mut v = vec![Rat::zero(); n];
                v[0] = rat(order as i64);

                let (plabels, palpha) =
                    pipartial_structure_constants(&t, &a.ipi, &a.decomposition)
                        .map_err(|e| CliError::Internal(e.to_string()))?;
                let palg = Sfca::new(plabels.clone(), palpha)
                    .map_err(|e| CliError::Internal(e.to_string()))?;
                let entries: Vec<Vec<Cyclotomic>> = a
                    .ipi
                    .irreducibles
                    .iter()
                    .map(|p| p.values.clone())
                    .collect();
                let u: Vec<Rat> = a.pims.degrees.iter().map(|&d| rat(d as i64)).collect();
                let window = (
                    rat(std::cmp::max(n as u64, h_order) as i64),
                    rat(pi_part(order, &pi) as i64),
                );
                sections.push(build_section(
                    "pipartial",
                    &palg,
                    entries,
                    plabels,
                    pi_labels.clone(),
                    u,
                    v.clone(),
                    window,
                )?);

                let (qlabels, qalpha) = pim_structure_constants(&a.ipi, &a.pims)
                    .map_err(|e| CliError::Internal(e.to_string()))?;
                let qalg = Sfca::new(qlabels.clone(), qalpha)
                    .map_err(|e| CliError::Internal(e.to_string()))?;
                let pentries: Vec<Vec<Cyclotomic>> = a
                    .pims
                    .pims
                    .iter()
                    .map(|row| a.class_ids.iter().map(|&c| row[c].clone()).collect())
                    .collect();
                let qu: Vec<Rat> = a
                    .ipi
                    .irreducibles
                    .iter()
                    .map(|p| rat(p.degree as i64))
                    .collect();
                let window = (rat(a_max as i64), rat(order as i64));
                sections.push(build_section(
                    "pim",
                    &qalg,
                    pentries,
                    qlabels,
                    pi_labels,
                    qu,
                    v,
                    window,
                )?);

                match lemma_upper_bound_check(&g, &t, &a.ipi, &a.decomposition, &a.pims) {
                    Ok(rep) => {
                        lemma = LemmaSection {
                            verdict: Verdict::from_bool(rep.all_ok()),
                            subgroup_order: rep.subgroup_order,
                            index: rep.index,
                            details: rep
                                .checks
                                .iter()
                                .enumerate()
                                .map(|(i, c)| {
                                    format!(
                                        "Phi{}(1) = {} <= {} : {}",
                                        i + 1,
                                        c.pim_degree,
                                        c.bound,
                                        Verdict::from_bool(c.degree_ok)
                                    )
                                })
                                .collect(),
                        };
                    }
                    Err(e) => {
                        errors.push(format!("induced-degree check: {e}"));
                        lemma.verdict = Verdict::Fail;
                    }
                }
            }
            Ok(false) => {
                errors.push("NotPiSeparable: pi sections refused".into());
                exit = 3;
            }
            Err(e) => return Err(CliError::Internal(e.to_string())),
        }
    }

    let all_ok = sections.iter().all(section_ok)
        && !lemma.verdict.failed()
        && (exit == 3 || errors.is_empty());
    let overall = Verdict::from_bool(all_ok && exit == 0);
    if exit == 0 && !all_ok {
        exit = 2;
    }
    let report = VerificationReport {
        group: group_spec.to_string(),
        order,
        seed,
        tol,
        pi: pi.unwrap_or_default(),
        sections,
        lemma,
        errors,
        overall: if exit == 3 { Verdict::NotApplicable } else { overall },
    };
    Ok((report, exit))
}

pub fn columns_report(tf: &TableFile) -> ColumnsReport {
    let n = tf.rows.len();
    let mut sums = Vec::with_capacity(n);
    let mut irrational = Vec::new();
    for j in 0..n {
        let mut s = Cyclotomic::zero();
        for row in &tf.rows {
            s = s.add(&row[j]);
        }
        if matches!(s.rationality(), Rationality::Irrational) {
            irrational.push(j);
        }
        sums.push(ColumnSumReport {
            value: s.literal(),
            rationality: rationality_tag(&s).to_string(),
        });
    }
    ColumnsReport {
        table: tf.name.clone(),
        kind: tf.kind.as_str().to_string(),
        group_order: tf.group_order,
        prime_or_pi: tf.prime_or_pi.clone(),
        class_orders: tf.class_orders.clone(),
        column_sums: sums,
        irrational_columns: irrational,
    }
}

fn match_columns(numeric: &[Vec<(f64, f64)>], exact: &[Vec<(f64, f64)>], tol: f64) -> bool {
    let n = exact.len();
    let mut used = vec![false; n];
    'outer: for j in 0..n {
        for c in 0..n {
            if used[c] {
                continue;
            }
            let ok = (0..n).all(|i| {
                let (nr, ni) = numeric[i][j];
                let (er, ei) = exact[i][c];
                (nr - er).abs() < tol && (ni - ei).abs() < tol
            });
            if ok {
                used[c] = true;
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// `crosscheck` pipeline: numeric tables for the irreducible-character
/// basis and the class algebra against the exact character-table data.
pub fn crosscheck(
    group_spec: &str,
    seed: u64,
    tol: f64,
    cap: u64,
) -> Result<(CrosscheckReport, i32), CliError> {
    let g = load_group(group_spec, cap)?;
    let t = character_table(&g).map_err(|e| CliError::Internal(e.to_string()))?;
    let n = t.classes.len();
    let match_tol = tol.max(1e-6);

    // irreducible-character basis
    let (labels, alpha) = t
        .irr_structure_constants()
        .map_err(|e| CliError::Internal(e.to_string()))?;
    let alg = Sfca::new(labels, alpha).map_err(|e| CliError::Internal(e.to_string()))?;
    let numeric = Table::numeric(&alg, seed, tol.max(1e-8))
        .map_err(|e| CliError::Internal(e.to_string()))?;
    let irr_residual = numeric.residual;
    let num_cols: Vec<Vec<(f64, f64)>> = numeric
        .numeric_entries()
        .unwrap()
        .iter()
        .map(|row| row.iter().map(|c| (c.re, c.im)).collect())
        .collect();
    let exact_cols: Vec<Vec<(f64, f64)>> = t
        .entries
        .iter()
        .map(|row| row.iter().map(|v| v.embed()).collect())
        .collect();
    let irr_match = Verdict::from_bool(match_columns(&num_cols, &exact_cols, match_tol));

    // class algebra: expected eigenvalue table omega_j(K_i)
    let classes = g.conjugacy_classes();
    let tensor = g.class_structure_constants(&classes);
    let clabels: Vec<String> = t.classes.iter().map(|c| format!("K_{}", c.label)).collect();
    let calpha: Vec<Rat> = (0..n * n * n)
        .map(|x| rat(tensor.at(x / (n * n), (x / n) % n, x % n)))
        .collect();
    let calg = Sfca::new(clabels, calpha).map_err(|e| CliError::Internal(e.to_string()))?;
    let cnumeric = Table::numeric(&calg, seed, tol.max(1e-8))
        .map_err(|e| CliError::Internal(e.to_string()))?;
    let class_residual = cnumeric.residual;
    let cnum: Vec<Vec<(f64, f64)>> = cnumeric
        .numeric_entries()
        .unwrap()
        .iter()
        .map(|row| row.iter().map(|c| (c.re, c.im)).collect())
        .collect();
    // omega_j(K_i) = |K_i| chi_j(g_i) / chi_j(1)
    let cexact: Vec<Vec<(f64, f64)>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let scale = Rat::new(
                        (classes[i].size as i64).into(),
                        (t.degrees[j] as i64).into(),
                    );
                    t.entries[j][i].scale(&scale).embed()
                })
                .collect()
        })
        .collect();
    let class_match = Verdict::from_bool(match_columns(&cnum, &cexact, match_tol));

    let overall = Verdict::from_bool(!irr_match.failed() && !class_match.failed());
    let exit = if overall.failed() { 2 } else { 0 };
    Ok((
        CrosscheckReport {
            group: group_spec.to_string(),
            seed,
            tol,
            irr_residual,
            class_residual,
            irr_match,
            class_match,
            overall,
        },
        exit,
    ))
}
