//! End-to-end acceptance checks, one test per criterion.  Each test
//! prints exactly one pass/fail line for its criterion.

use std::process::Command;

use chillag_core::chartab::{character_table, CharacterTable};
use chillag_core::cyclo::{Cyclotomic, GaloisAutomorphism};
use chillag_core::group::{catalog_group, pi_part, primes_of, PermGroup, DEFAULT_CAP};
use chillag_core::pipart::{
    analyze_pi, brauer_pi, lemma_upper_bound_check, pim_structure_constants,
    pipartial_structure_constants, restricted_characters, solve_in_cyclotomic_basis, PiAnalysis,
};
use chillag_core::rat::{as_i64, rat, ratio, Rat};
use chillag_core::sfca::{bounds_certificate, galois_column_test, Sfca, SfcaError, Table};
use num_traits::Signed;

fn report(n: usize, label: &str, result: Result<(), String>) {
    match result {
        Ok(()) => println!("criterion {n} ({label}): pass"),
        Err(e) => {
            println!("criterion {n} ({label}): fail");
            panic!("criterion {n} ({label}) failed: {e}");
        }
    }
}

fn catalog() -> Vec<String> {
    let mut names: Vec<String> = (1..=12).map(|n| format!("C{n}")).collect();
    for n in [
        "S3",
        "S4",
        "S5",
        "A4",
        "A5",
        "D8",
        "Q8",
        "SL(2,3)",
        "F20",
        "PSL(2,7)",
    ] {
        names.push(n.to_string());
    }
    names
}

fn load(name: &str) -> Result<(PermGroup, CharacterTable), String> {
    let g = catalog_group(name, DEFAULT_CAP).map_err(|e| format!("{name}: {e:?}"))?;
    let t = character_table(&g).map_err(|e| format!("{name}: {e:?}"))?;
    Ok((g, t))
}

fn irr_algebra(name: &str, t: &CharacterTable) -> Result<Sfca, String> {
    let (labels, alpha) = t
        .irr_structure_constants()
        .map_err(|e| format!("{name}: {e:?}"))?;
    Sfca::new(labels, alpha).map_err(|e| format!("{name}: {e:?}"))
}

fn class_labels(t: &CharacterTable) -> Vec<String> {
    t.classes.iter().map(|c| c.label.clone()).collect()
}

/// Every pi-separable (group, pi) pair over nonempty subsets of the
/// primes dividing the order.
fn separable_pairs() -> Result<Vec<(String, Vec<u64>)>, String> {
    let mut pairs = Vec::new();
    for name in catalog() {
        let g = catalog_group(&name, DEFAULT_CAP).map_err(|e| format!("{name}: {e:?}"))?;
        let primes = primes_of(g.order());
        for mask in 1u32..(1 << primes.len()) {
            let pi: Vec<u64> = primes
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            if g
                .is_pi_separable(&pi, g.order())
                .map_err(|e| format!("{name}: {e:?}"))?
            {
                pairs.push((name.clone(), pi));
            }
        }
    }
    Ok(pairs)
}

fn pair_analysis(name: &str, pi: &[u64]) -> Result<(PermGroup, CharacterTable, PiAnalysis), String> {
    let (g, t) = load(name)?;
    let a = analyze_pi(&g, &t, pi).map_err(|e| format!("{name} pi={pi:?}: {e:?}"))?;
    Ok((g, t, a))
}

fn ipi_table(name: &str, a: &PiAnalysis) -> Result<(Sfca, Table), String> {
    let (labels, alpha) = pipartial_structure_constants_of(name, a)?;
    let alg = Sfca::new(labels, alpha).map_err(|e| format!("{name}: {e:?}"))?;
    let entries: Vec<Vec<Cyclotomic>> = a
        .ipi
        .irreducibles
        .iter()
        .map(|p| p.values.clone())
        .collect();
    let cols: Vec<String> = (0..a.class_ids.len()).map(|j| format!("pc{j}")).collect();
    let table =
        Table::exact_verified(&alg, entries, cols).map_err(|e| format!("{name}: {e:?}"))?;
    Ok((alg, table))
}

fn pipartial_structure_constants_of(
    name: &str,
    a: &PiAnalysis,
) -> Result<(Vec<String>, Vec<Rat>), String> {
    let (_, t) = load(name)?;
    pipartial_structure_constants(&t, &a.ipi, &a.decomposition)
        .map_err(|e| format!("{name}: {e:?}"))
}

fn pim_table(name: &str, a: &PiAnalysis) -> Result<(Sfca, Table), String> {
    let (labels, alpha) =
        pim_structure_constants(&a.ipi, &a.pims).map_err(|e| format!("{name}: {e:?}"))?;
    let alg = Sfca::new(labels, alpha).map_err(|e| format!("{name}: {e:?}"))?;
    let entries: Vec<Vec<Cyclotomic>> = a
        .pims
        .pims
        .iter()
        .map(|row| a.class_ids.iter().map(|&c| row[c].clone()).collect())
        .collect();
    let cols: Vec<String> = (0..a.class_ids.len()).map(|j| format!("pc{j}")).collect();
    let table =
        Table::exact_verified(&alg, entries, cols).map_err(|e| format!("{name}: {e:?}"))?;
    Ok((alg, table))
}

fn class_algebra_table(
    name: &str,
    g: &PermGroup,
    t: &CharacterTable,
) -> Result<(Sfca, Table), String> {
    let classes = g.conjugacy_classes();
    let tensor = g.class_structure_constants(&classes);
    let n = classes.len();
    let mut alpha = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                alpha.push(rat(tensor.at(i, j, k)));
            }
        }
    }
    let labels: Vec<String> = class_labels(t);
    let alg = Sfca::new(labels.clone(), alpha).map_err(|e| format!("{name}: {e:?}"))?;
    // omega_i(chi_j) = |K_i| chi_j(g_i) / chi_j(1); column j is the
    // central character of chi_j, column 0 (trivial chi) is Perron
    let entries: Vec<Vec<Cyclotomic>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    t.entries[j][i].scale(&ratio(classes[i].size as i64, t.degrees[j] as i64))
                })
                .collect()
        })
        .collect();
    let cols: Vec<String> = (0..n).map(|j| format!("chi{}", j + 1)).collect();
    let table =
        Table::exact_verified(&alg, entries, cols).map_err(|e| format!("{name}: {e:?}"))?;
    Ok((alg, table))
}

fn check_trace_identity(name: &str, alg: &Sfca, table: &Table) -> Result<(), String> {
    let (traces, _) = alg.row_sums_exact();
    let from_table = table
        .row_sums_from_table()
        .ok_or_else(|| format!("{name}: no exact row sums"))?;
    for (i, (tr, fr)) in traces.iter().zip(&from_table).enumerate() {
        if Cyclotomic::from_rat(tr.clone()) != *fr {
            return Err(format!("{name}: trace identity fails at row {i}"));
        }
    }
    Ok(())
}

fn regular_vector(n: usize, order: u64) -> Vec<Rat> {
    let mut v = vec![rat(0); n];
    v[0] = rat(order as i64);
    v
}

// ---------------------------------------------------------------------------

#[test]
fn criterion_1_ordinary_tables() {
    report(1, "ordinary tables, orthogonality, table sums", (|| {
        let mut spot = std::collections::BTreeMap::new();
        for name in catalog() {
            let (_, t) = load(&name)?;
            let n = t.n();
            for i in 0..n {
                for j in 0..n {
                    let ip = t.inner_product(&t.entries[i], &t.entries[j]);
                    let expect = if i == j {
                        Cyclotomic::one()
                    } else {
                        Cyclotomic::zero()
                    };
                    if ip != expect {
                        return Err(format!("{name}: first orthogonality fails at ({i},{j})"));
                    }
                }
            }
            for i in 0..n {
                for j in 0..n {
                    let mut acc = Cyclotomic::zero();
                    for chi in &t.entries {
                        acc = acc.add(&chi[i].mul(&chi[j].conj()));
                    }
                    let expect = if i == j {
                        Cyclotomic::from_rat(ratio(
                            t.group_order as i64,
                            t.classes[i].size as i64,
                        ))
                    } else {
                        Cyclotomic::zero()
                    };
                    if acc != expect {
                        return Err(format!("{name}: second orthogonality fails at ({i},{j})"));
                    }
                }
            }
            // independent oracle: the table of the Irr tensor algebra is the
            // character table itself, so s is the sum of all its entries
            let mut total = Cyclotomic::zero();
            for row in &t.entries {
                for v in row {
                    total = total.add(v);
                }
            }
            let oracle = total
                .as_rat()
                .ok_or_else(|| format!("{name}: entry sum not rational"))?;
            let alg = irr_algebra(&name, &t)?;
            let (_, s) = alg.row_sums_exact();
            if s != oracle {
                return Err(format!("{name}: tensor trace sum {s} != oracle {oracle}"));
            }
            let s_int =
                as_i64(&s).ok_or_else(|| format!("{name}: s not an integer: {s}"))?;
            if s_int <= 0 || s_int < n as i64 || s_int > t.group_order as i64 {
                return Err(format!(
                    "{name}: s = {s_int} outside [{n}, {}]",
                    t.group_order
                ));
            }
            spot.insert(name.clone(), s_int);
        }
        for (name, want) in [("S3", 5i64), ("C2", 2), ("Q8", 8)] {
            if spot.get(name) != Some(&want) {
                return Err(format!("spot value s({name}) != {want}: {:?}", spot.get(name)));
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_2_oracle_equivalence() {
    report(2, "numeric table matches exact table", (|| {
        for name in catalog() {
            let (_, t) = load(&name)?;
            let alg = irr_algebra(&name, &t)?;
            let exact = Table::exact_verified(&alg, t.entries.clone(), class_labels(&t))
                .map_err(|e| format!("{name}: exact verification: {e:?}"))?;
            let numeric = Table::numeric(&alg, 1, 1e-6)
                .map_err(|e| format!("{name}: numeric build: {e:?}"))?;
            let xe = exact.exact_entries().unwrap();
            let ne = numeric.numeric_entries().unwrap();
            let n = alg.n();
            let mut used = vec![false; n];
            let mut worst = 0f64;
            for j in 0..n {
                let mut best: Option<(usize, f64)> = None;
                for m in 0..n {
                    if used[m] {
                        continue;
                    }
                    let dev = (0..n)
                        .map(|i| {
                            let (re, im) = xe[i][m].embed();
                            let d = ne[i][j];
                            ((d.re - re).powi(2) + (d.im - im).powi(2)).sqrt()
                        })
                        .fold(0f64, f64::max);
                    if best.map_or(true, |(_, b)| dev < b) {
                        best = Some((m, dev));
                    }
                }
                let (m, dev) = best.ok_or_else(|| format!("{name}: no column left"))?;
                if dev > 1e-6 {
                    return Err(format!("{name}: column {j} residual {dev:.3e} > 1e-6"));
                }
                used[m] = true;
                worst = worst.max(dev);
            }
            let _ = worst;
        }
        Ok(())
    })());
}

#[test]
fn criterion_3_trace_identity() {
    report(3, "trace identity on all four bases", (|| {
        for name in catalog() {
            let (g, t) = load(&name)?;
            let alg = irr_algebra(&name, &t)?;
            let table = Table::exact_verified(&alg, t.entries.clone(), class_labels(&t))
                .map_err(|e| format!("{name}: {e:?}"))?;
            check_trace_identity(&name, &alg, &table)?;
            let (calg, ctable) = class_algebra_table(&name, &g, &t)?;
            check_trace_identity(&name, &calg, &ctable)?;
        }
        for (name, pi) in separable_pairs()? {
            let (_, _, a) = pair_analysis(&name, &pi)?;
            let (alg, table) = ipi_table(&name, &a)?;
            check_trace_identity(&name, &alg, &table)?;
            let (palg, ptable) = pim_table(&name, &a)?;
            check_trace_identity(&name, &palg, &ptable)?;
        }
        Ok(())
    })());
}

#[test]
fn criterion_4_bound_certificates() {
    report(4, "two-sided bound certificates", (|| {
        for name in catalog() {
            let (_, t) = load(&name)?;
            let alg = irr_algebra(&name, &t)?;
            let table = Table::exact_verified(&alg, t.entries.clone(), class_labels(&t))
                .map_err(|e| format!("{name}: {e:?}"))?;
            let u: Vec<Rat> = t.degrees.iter().map(|&d| rat(d as i64)).collect();
            let v = regular_vector(t.n(), t.group_order);
            let cert = bounds_certificate(&alg, &table, &u, &v, 1e-9)
                .map_err(|e| format!("{name}: {e:?}"))?;
            if !cert.verdict {
                return Err(format!("{name}: ordinary certificate fails"));
            }
            let s = as_i64(&cert.s).unwrap();
            if s < t.n() as i64 || s > t.group_order as i64 {
                return Err(format!("{name}: s = {s} outside the ordinary window"));
            }
        }
        for (name, pi) in separable_pairs()? {
            let (g, _, a) = pair_analysis(&name, &pi)?;
            let order = g.order();
            let n = a.class_ids.len();
            let v = regular_vector(n, order);
            // I_pi basis: u = PIM degrees
            let (alg, table) = ipi_table(&name, &a)?;
            let u: Vec<Rat> = a.pims.degrees.iter().map(|&d| rat(d as i64)).collect();
            let cert = bounds_certificate(&alg, &table, &u, &v, 1e-9)
                .map_err(|e| format!("{name} pi={pi:?}: {e:?}"))?;
            if !cert.verdict {
                return Err(format!("{name} pi={pi:?}: I_pi certificate fails"));
            }
            let s = as_i64(&cert.s).unwrap();
            let (h_order, _) = g.max_abelian_pi_subgroup(&pi);
            let lower = (n as u64).max(h_order) as i64;
            let upper = pi_part(order, &pi) as i64;
            if s < lower || s > upper {
                return Err(format!(
                    "{name} pi={pi:?}: s = {s} outside [{lower}, {upper}]"
                ));
            }
            // PIM basis: u = phi degrees
            let (palg, ptable) = pim_table(&name, &a)?;
            let pu: Vec<Rat> = a
                .ipi
                .irreducibles
                .iter()
                .map(|p| rat(p.degree as i64))
                .collect();
            let pcert = bounds_certificate(&palg, &ptable, &pu, &v, 1e-9)
                .map_err(|e| format!("{name} pi={pi:?}: {e:?}"))?;
            if !pcert.verdict {
                return Err(format!("{name} pi={pi:?}: PIM certificate fails"));
            }
            let ps = as_i64(&pcert.s).unwrap();
            if ps < n as i64 || ps > order as i64 {
                return Err(format!("{name} pi={pi:?}: PIM s = {ps} outside window"));
            }
        }
        // tight Brauer spot checks
        for (p, want) in [(3u64, 2i64), (2, 3)] {
            let pi = brauer_pi(6, p);
            let (_, _, a) = pair_analysis("S3", &pi)?;
            let (alg, _) = ipi_table("S3", &a)?;
            let (_, s) = alg.row_sums_exact();
            if as_i64(&s) != Some(want) {
                return Err(format!("S3 p={p}: s = {s}, expected {want}"));
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_5_pi_partial_engine() {
    report(5, "pi-partial engine invariants and Brauer oracle", (|| {
        for (name, pi) in separable_pairs()? {
            let (g, t, a) = pair_analysis(&name, &pi)?;
            let n = a.class_ids.len();
            if a.ipi.irreducibles.len() != n {
                return Err(format!(
                    "{name} pi={pi:?}: |I_pi| = {} != {n}",
                    a.ipi.irreducibles.len()
                ));
            }
            // decomposition reconstructs every restricted ordinary character
            for (row, chi) in t.entries.iter().enumerate() {
                for (j, &c) in a.class_ids.iter().enumerate() {
                    let mut acc = Cyclotomic::zero();
                    for (i, phi) in a.ipi.irreducibles.iter().enumerate() {
                        let m = a.decomposition.d[row][i];
                        if m != 0 {
                            acc = acc.add(&phi.values[j].scale(&rat(m as i64)));
                        }
                    }
                    if acc != chi[c] {
                        return Err(format!(
                            "{name} pi={pi:?}: decomposition fails at chi{row}, class {c}"
                        ));
                    }
                }
            }
            let pi_prime_part = g.order() / pi_part(g.order(), &pi);
            for &d in &a.pims.degrees {
                if d < pi_prime_part {
                    return Err(format!(
                        "{name} pi={pi:?}: PIM degree {d} < |G|_pi' = {pi_prime_part}"
                    ));
                }
            }
            // rho* = sum Phi(1) phi on pi-classes
            for (j, &c) in a.class_ids.iter().enumerate() {
                let mut acc = Cyclotomic::zero();
                for (i, phi) in a.ipi.irreducibles.iter().enumerate() {
                    acc = acc.add(&phi.values[j].scale(&rat(a.pims.degrees[i] as i64)));
                }
                let expect = if c == 0 {
                    Cyclotomic::from_int(g.order() as i64)
                } else {
                    Cyclotomic::zero()
                };
                if acc != expect {
                    return Err(format!("{name} pi={pi:?}: rho* identity fails at class {c}"));
                }
            }
            // rho = sum phi(1) Phi on all classes
            for c in 0..t.n() {
                let mut acc = Cyclotomic::zero();
                for (i, phi) in a.ipi.irreducibles.iter().enumerate() {
                    acc = acc.add(&a.pims.pims[i][c].scale(&rat(phi.degree as i64)));
                }
                let expect = if c == 0 {
                    Cyclotomic::from_int(g.order() as i64)
                } else {
                    Cyclotomic::zero()
                };
                if acc != expect {
                    return Err(format!("{name} pi={pi:?}: rho identity fails at class {c}"));
                }
            }
        }
        // brute-force basis-search oracle for the small Brauer cases
        for (name, p) in [
            ("S3", 2u64),
            ("S3", 3),
            ("S4", 2),
            ("S4", 3),
            ("A4", 2),
            ("SL(2,3)", 3),
        ] {
            let (g, t) = load(name)?;
            let pi = brauer_pi(g.order(), p);
            let a = analyze_pi(&g, &t, &pi).map_err(|e| format!("{name} p={p}: {e:?}"))?;
            let (class_ids, restrictions) = restricted_characters(&g, &t, &pi)
                .map_err(|e| format!("{name} p={p}: {e:?}"))?;
            let n = class_ids.len();
            let m = restrictions.len();
            let mut valid: Vec<Vec<usize>> = Vec::new();
            let mut pick = vec![0usize; n];
            // all n-subsets of the m distinct restrictions
            fn subsets(
                start: usize,
                depth: usize,
                n: usize,
                m: usize,
                pick: &mut Vec<usize>,
                out: &mut Vec<Vec<usize>>,
            ) {
                if depth == n {
                    out.push(pick.clone());
                    return;
                }
                for i in start..m {
                    pick[depth] = i;
                    subsets(i + 1, depth + 1, n, m, pick, out);
                }
            }
            let mut all = Vec::new();
            subsets(0, 0, n, m, &mut pick, &mut all);
            for cand in all {
                let basis: Vec<&[Cyclotomic]> = cand
                    .iter()
                    .map(|&i| restrictions[i].values.as_slice())
                    .collect();
                let ok = restrictions.iter().all(|r| {
                    solve_in_cyclotomic_basis(&basis, &r.values)
                        .map(|sol| {
                            sol.iter().all(|x| {
                                !x.is_negative() && x.is_integer()
                            })
                        })
                        .unwrap_or(false)
                });
                if ok {
                    valid.push(cand);
                }
            }
            if valid.len() != 1 {
                return Err(format!(
                    "{name} p={p}: oracle found {} valid bases, expected 1",
                    valid.len()
                ));
            }
            let mut oracle: Vec<&Vec<Cyclotomic>> =
                valid[0].iter().map(|&i| &restrictions[i].values).collect();
            let mut ours: Vec<&Vec<Cyclotomic>> =
                a.ipi.irreducibles.iter().map(|p| &p.values).collect();
            oracle.sort();
            ours.sort();
            if oracle != ours {
                return Err(format!("{name} p={p}: greedy basis differs from oracle"));
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_6_column_integrality_and_galois() {
    report(6, "integer column sums and Galois row actions", (|| {
        let check = |name: &str, table: &Table| -> Result<(), String> {
            let e = table.exponent().unwrap_or(1);
            let sigmas = GaloisAutomorphism::all(e);
            let rep = galois_column_test(table, &sigmas)
                .map_err(|er| format!("{name}: {er:?}"))?;
            if !rep.all_actions_exist() {
                return Err(format!("{name}: Galois action missing: {:?}", rep.violation));
            }
            if !rep.irrational_columns.is_empty() {
                return Err(format!(
                    "{name}: irrational column sums at {:?}",
                    rep.irrational_columns
                ));
            }
            for (j, sum) in rep.column_sums.iter().enumerate() {
                if !sum.is_rational_integer() {
                    return Err(format!("{name}: column {j} sum {sum} not an integer"));
                }
            }
            Ok(())
        };
        for name in catalog() {
            let (_, t) = load(&name)?;
            let alg = irr_algebra(&name, &t)?;
            let table = Table::exact_verified(&alg, t.entries.clone(), class_labels(&t))
                .map_err(|e| format!("{name}: {e:?}"))?;
            check(&name, &table)?;
        }
        for (name, pi) in separable_pairs()? {
            let (_, _, a) = pair_analysis(&name, &pi)?;
            let tag = format!("{name} pi={pi:?}");
            let (_, table) = ipi_table(&name, &a)?;
            check(&tag, &table)?;
            let (_, ptable) = pim_table(&name, &a)?;
            check(&tag, &ptable)?;
        }
        Ok(())
    })());
}

#[test]
fn criterion_7_counterexample_fixtures() {
    report(7, "fixture tables have irrational column sums", (|| {
        let fixtures = [
            "psl2_16_mod2_brauer.tbl",
            "psl2_27_mod3_brauer.tbl",
            "sz32_mod2_brauer.tbl",
            "psl2_16_mod2_pim.tbl",
        ];
        for f in fixtures {
            let path = format!("{}/fixtures/{f}", env!("CARGO_MANIFEST_DIR"));
            let out = Command::new(env!("CARGO_BIN_EXE_chillag"))
                .args(["ingest", &path, "--json"])
                .output()
                .map_err(|e| format!("{f}: cannot run binary: {e}"))?;
            if !out.status.success() {
                return Err(format!(
                    "{f}: ingest failed: {}",
                    String::from_utf8_lossy(&out.stderr)
                ));
            }
            let json: serde_json::Value = serde_json::from_slice(&out.stdout)
                .map_err(|e| format!("{f}: bad JSON: {e}"))?;
            let irr = json["irrational_columns"]
                .as_array()
                .ok_or_else(|| format!("{f}: missing irrational_columns"))?;
            if irr.is_empty() {
                return Err(format!("{f}: no irrational column sums reported"));
            }
        }
        // control: the ordinary S3 fixture has integer column sums only
        let path = format!("{}/fixtures/s3_ordinary.tbl", env!("CARGO_MANIFEST_DIR"));
        let out = Command::new(env!("CARGO_BIN_EXE_chillag"))
            .args(["ingest", &path, "--json"])
            .output()
            .map_err(|e| format!("s3 fixture: {e}"))?;
        let json: serde_json::Value =
            serde_json::from_slice(&out.stdout).map_err(|e| format!("s3 fixture: {e}"))?;
        if json["irrational_columns"].as_array().map(|a| a.len()) != Some(0) {
            return Err("s3 fixture: unexpected irrational columns".to_string());
        }
        Ok(())
    })());
}

#[test]
fn criterion_8_induced_degree_bounds() {
    report(8, "PIM degree bounds from induced linear characters", (|| {
        for (name, pi) in separable_pairs()? {
            let (g, t, a) = pair_analysis(&name, &pi)?;
            let rep = lemma_upper_bound_check(&g, &t, &a.ipi, &a.decomposition, &a.pims)
                .map_err(|e| format!("{name} pi={pi:?}: {e:?}"))?;
            if !rep.all_ok() {
                return Err(format!("{name} pi={pi:?}: degree bound violated"));
            }
            for c in &rep.checks {
                if c.pim_degree > c.bound {
                    return Err(format!(
                        "{name} pi={pi:?}: Phi(1) = {} > |G:H| = {}",
                        c.pim_degree, c.bound
                    ));
                }
            }
        }
        Ok(())
    })());
}

#[test]
fn criterion_9_negative_paths() {
    report(9, "rejections name their witnesses", (|| {
        // non-commutative 2-dim tensor: b0 b1 = b0 but b1 b0 = b1
        let mut alpha = vec![rat(0); 8];
        let set = |a: &mut Vec<Rat>, i: usize, j: usize, k: usize| {
            a[(i * 2 + j) * 2 + k] = rat(1);
        };
        set(&mut alpha, 0, 0, 0);
        set(&mut alpha, 0, 1, 0);
        set(&mut alpha, 1, 0, 1);
        set(&mut alpha, 1, 1, 1);
        match Sfca::new(vec!["a".into(), "b".into()], alpha) {
            Err(SfcaError::NotCommutative { i, j, .. }) => {
                if (i, j) != (0, 1) && (i, j) != (1, 0) {
                    return Err(format!("wrong commutativity witness ({i},{j})"));
                }
            }
            other => return Err(format!("expected NotCommutative, got {other:?}")),
        }
        // commutative but non-associative: e0 e0 = e1, e0 e1 = e0, e1 e1 = 0
        let mut alpha = vec![rat(0); 8];
        set(&mut alpha, 0, 0, 1);
        set(&mut alpha, 0, 1, 0);
        set(&mut alpha, 1, 0, 0);
        match Sfca::new(vec!["a".into(), "b".into()], alpha) {
            Err(SfcaError::NotAssociative { .. }) => {}
            other => return Err(format!("expected NotAssociative, got {other:?}")),
        }
        // A5 with --pi 2: NotPiSeparable, exit code 3
        let out = Command::new(env!("CARGO_BIN_EXE_chillag"))
            .args(["analyze", "A5", "--pi", "2"])
            .output()
            .map_err(|e| format!("cannot run binary: {e}"))?;
        if out.status.code() != Some(3) {
            return Err(format!("A5 --pi 2 exit code {:?}, expected 3", out.status.code()));
        }
        let text = String::from_utf8_lossy(&out.stdout);
        if !text.contains("NotPiSeparable") {
            return Err("A5 --pi 2 report does not mention NotPiSeparable".to_string());
        }
        Ok(())
    })());
}
