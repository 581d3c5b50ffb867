//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

mod common;

use std::collections::BTreeMap;
use std::path::Path;
use std::process::Command;
use std::sync::Arc;
use std::time::Instant;

use galois_tori::cohomology::{self, cohomology_table, equivariant_homs, ext1, is_coflasque, is_flasque, whole_of};
use galois_tori::group::catalog;
use galois_tori::linalg;
use galois_tori::motivic::{self, FieldModel, HomologyValue, VanishingCertificate};
use galois_tori::resolve::{
    classify, coflasque_cover, coflasque_cover_with, fixed_point_surjectivity, iterate_resolution_with,
    lift_morphism, KernelLevel, Lift, Limits, Resolution, ToricComplex,
};
use galois_tori::{oracle, AbelianGroupInvariants, BigInt, Error, FiniteGroup, GLattice, IntMatrix, LatticeMap, Subgroup};
use rand::seq::SliceRandom;
use rand::Rng;

use common::{corpus, corpus_for, group, rng_for, Entry};

type Outcome = Result<String, String>;

/// Cover rank budget for the iterated constructions in criteria 5 and 6.
const BUDGET: usize = 1024;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s(e: Error) -> String {
    e.to_string()
}

fn subgroups(g: &FiniteGroup) -> &[Subgroup] {
    g.subgroups().expect("subgroup inventory")
}

// 1. Smith normal form against the Hermite oracle.
fn snf_kernel() -> Outcome {
    let mut rng = rng_for("snf", 1);
    for trial in 0..1000 {
        let rows = rng.gen_range(1..=8);
        let cols = rng.gen_range(1..=8);
        let m = IntMatrix::from_fn(rows, cols, |_, _| rng.gen_range(-9..=9));
        let snf = linalg::smith_normal_form_exact(&m);
        let big = m.to_big();
        let usv = snf.u.try_mul(&big).and_then(|x| x.try_mul(&snf.v)).map_err(|e| format!("{e:?}"))?;
        ensure(usv == snf.s, || format!("trial {trial}: U M V != S"))?;
        let d = snf.invariant_factors();
        for i in 0..rows {
            for j in 0..cols {
                let on_diag = i == j && i < d.len();
                ensure(on_diag || snf.s[(i, j)] == BigInt::from(0), || format!("trial {trial}: S not diagonal"))?;
            }
        }
        ensure(d.iter().all(|x| *x > BigInt::from(0)), || format!("trial {trial}: nonpositive factor"))?;
        ensure(d.windows(2).all(|w| (&w[1] % &w[0]) == BigInt::from(0)), || format!("trial {trial}: divisibility"))?;
        let oracle = oracle::invariant_factors_int(&m);
        ensure(d == oracle, || format!("trial {trial}: {d:?} vs oracle {oracle:?}"))?;
    }
    Ok("1000 matrices".into())
}

// 2. Cyclic Ĥ^0, acyclicity of Z[G] and Shapiro's lemma.
fn tate_sanity() -> Outcome {
    for n in 1..=12 {
        let g = Arc::new(catalog::cyclic(n));
        let h0 = cohomology::tate_cohomology(&GLattice::trivial(g.clone(), 1), &whole_of(&g), 0).map_err(e2s)?;
        let expected = AbelianGroupInvariants::cyclic(n as u64);
        ensure(h0 == expected, || format!("Ĥ^0(C{n}, Z) = {h0:?}"))?;
    }
    let mut checks = 0usize;
    for named in catalog::small_groups(16) {
        let g = Arc::new(named.group);
        let regular = GLattice::regular(g.clone());
        let trivial = GLattice::trivial(g.clone(), 1);
        for h in subgroups(&g) {
            for i in -1..=2 {
                let v = cohomology::tate_cohomology(&regular, h, i).map_err(e2s)?;
                ensure(v.is_trivial(), || format!("{}: Ĥ^{i}(H{}, Z[G]) = {v:?}", named.name, h.id))?;
                checks += 1;
            }
            let perm = GLattice::permutation(g.clone(), h);
            for i in -1..=2 {
                let induced = cohomology::tate_cohomology(&perm, &whole_of(&g), i).map_err(e2s)?;
                let local = cohomology::tate_cohomology(&trivial, h, i).map_err(e2s)?;
                ensure(induced == local, || {
                    format!("{}: Ĥ^{i}(G, Z[G/H{}]) = {induced:?} but Ĥ^{i}(H, Z) = {local:?}", named.name, h.id)
                })?;
                checks += 1;
            }
        }
    }
    Ok(format!("12 cyclic groups, {checks} subgroup checks"))
}

// 3. Flasque/coflasque duality.
fn duality(corpus: &[Entry]) -> Outcome {
    let mut checks = 0usize;
    for e in corpus {
        let dual = e.lattice.dual().map_err(e2s)?;
        let minus = cohomology_table(&e.lattice, -1).map_err(e2s)?;
        let one = cohomology_table(&dual, 1).map_err(e2s)?;
        for ((id, a), (_, b)) in minus.iter().zip(&one) {
            ensure(a == b, || format!("{}/{}: H{id}: Ĥ^-1(L) = {a:?}, H^1(L*) = {b:?}", e.group, e.label))?;
            checks += 1;
        }
        let flasque = is_flasque(&e.lattice).map_err(e2s)?;
        let coflasque = is_coflasque(&dual).map_err(e2s)?;
        ensure(flasque == coflasque, || format!("{}/{}: flasque {flasque}, dual coflasque {coflasque}", e.group, e.label))?;
    }
    Ok(format!("{} lattices, {checks} subgroup comparisons", corpus.len()))
}

// 4. Coflasque cover.
fn cover_correctness(corpus: &[Entry]) -> Outcome {
    for e in corpus {
        let tag = || format!("{}/{}", e.group, e.label);
        let res = coflasque_cover(&e.lattice).map_err(|x| format!("{}: {x}", tag()))?;
        ensure(res.check_exact().map_err(e2s)?, || format!("{}: not exact", tag()))?;
        ensure(res.cover.is_permutation_action(), || format!("{}: cover is not a permutation lattice", tag()))?;
        ensure(res.cover.rank() == res.base.rank() + res.kernel.rank(), || format!("{}: rank mismatch", tag()))?;
        let surjective: BTreeMap<usize, bool> = fixed_point_surjectivity(&res).map_err(e2s)?.into_iter().collect();
        let h1 = cohomology_table(&res.kernel, 1).map_err(e2s)?;
        ensure(surjective.len() == h1.len(), || format!("{}: subgroup tables differ", tag()))?;
        for (id, h) in &h1 {
            ensure(surjective[id] == h.is_trivial(), || {
                format!("{}: H{id}: fixed points onto = {}, H^1 = {h:?}", tag(), surjective[id])
            })?;
        }
        ensure(h1.iter().all(|(_, h)| h.is_trivial()), || format!("{}: kernel not coflasque", tag()))?;
    }
    Ok(format!("{} lattices", corpus.len()))
}

// 5. Iterated resolutions to depth 3.
fn complex_invariants(corpus: &[Entry]) -> Outcome {
    let limits = Limits { max_rank: BUDGET, ..Limits::default() };
    let mut complete = 0usize;
    let mut verified_levels = 0usize;
    let mut stopped: BTreeMap<usize, usize> = BTreeMap::new();
    let mut largest = 0usize;
    for e in corpus {
        let tag = || format!("{}/{}", e.group, e.label);
        let mut levels = Vec::new();
        let mut kernels = Vec::new();
        let mut current = e.lattice.clone();
        for i in 0..=3 {
            match coflasque_cover_with(&current, &limits) {
                Ok(res) => {
                    let fps = fixed_point_surjectivity(&res).map_err(e2s)?;
                    let q = res.kernel.clone();
                    largest = largest.max(res.cover.rank());
                    kernels.push(KernelLevel { index: i + 1, lattice: q.clone(), fixed_point_surjectivity: fps, classification: None });
                    levels.push(res);
                    current = q;
                }
                Err(Error::Capacity(_)) => {
                    *stopped.entry(i).or_default() += 1;
                    break;
                }
                Err(x) => return Err(format!("{}: {x}", tag())),
            }
        }
        if levels.is_empty() {
            continue;
        }
        let depth = levels.len() - 1;
        let cx = ToricComplex { base: e.lattice.clone(), depth, levels, kernels };
        ensure(cx.check_exact().map_err(e2s)?, || format!("{}: inexact complex", tag()))?;
        for k in &cx.kernels {
            ensure(k.is_coflasque(), || format!("{}: Q_{} not coflasque", tag(), k.index))?;
            if k.lattice.rank() <= 64 {
                ensure(is_coflasque(&k.lattice).map_err(e2s)?, || format!("{}: H^1(Q_{}) != 0", tag(), k.index))?;
            }
        }
        for model in [FieldModel::quasi_finite(), FieldModel::local(e.lattice.group().clone()), FieldModel::abstract_field()] {
            for n in -3..0 {
                let h = motivic::homology(&cx, &model, n).map_err(e2s)?;
                ensure(h.group().is_some_and(|g| g.is_trivial()), || format!("{}: H_{n} nonzero", tag()))?;
            }
        }
        verified_levels += depth + 1;
        if depth == 3 {
            complete += 1;
        }
    }
    let summary = format!(
        "{complete}/{} lattices reached depth 3, {verified_levels} levels verified, largest cover rank {largest}, \
         stopped by the rank limit {} at level {:?}",
        corpus.len(),
        limits.max_rank,
        stopped
    );
    if complete == corpus.len() {
        Ok(summary)
    } else {
        Err(summary)
    }
}

// 6. Sylow-cyclic vanishing.
fn sylow_cyclic() -> Outcome {
    let groups = catalog::sylow_cyclic_groups(24);
    let mut lattices = 0usize;
    let mut depth_one = 0usize;
    let count = groups.len();
    for named in groups {
        let gc = corpus_for(&named.name, Arc::new(named.group));
        let g = gc.group.clone();
        ensure(g.is_sylow_cyclic(), || format!("{} is not Sylow-cyclic", named.name))?;
        for e in &gc.entries {
            let tag = || format!("{}/{}", e.group, e.label);
            let cert = motivic::vanishing_certificate(&e.lattice).map_err(e2s)?;
            ensure(cert == VanishingCertificate::SylowCyclic, || format!("{}: certificate {cert}", tag()))?;
            let limits = Limits { max_rank: BUDGET, classify_rank: 0, ..Limits::default() };
            let cx = match iterate_resolution_with(&e.lattice, 1, &limits, None) {
                Ok(cx) => {
                    depth_one += 1;
                    cx
                }
                Err(Error::Capacity(_)) => {
                    iterate_resolution_with(&e.lattice, 0, &limits, None).map_err(|x| format!("{}: {x}", tag()))?
                }
                Err(x) => return Err(format!("{}: {x}", tag())),
            };
            let q1 = cx.kernel(1);
            ensure(is_flasque(q1).map_err(e2s)? && is_coflasque(q1).map_err(e2s)?, || {
                format!("{}: Q_1 not flasque and coflasque", tag())
            })?;
            for n in 0..=cx.depth as i64 {
                for model in [FieldModel::quasi_finite(), FieldModel::sylow_cyclic_split(), FieldModel::local(g.clone())] {
                    let h = motivic::homology(&cx, &model, n).map_err(e2s)?;
                    ensure(h.group().is_some_and(|x| x.is_trivial()), || format!("{}: H_{n} in {} = {h:?}", tag(), model.kind()))?;
                }
                let q = cx.kernel(n as usize + 1);
                if q.rank() <= 96 {
                    let oracle = oracle::tate_cohomology(q, &whole_of(&g), -1).map_err(e2s)?;
                    ensure(oracle.is_trivial(), || format!("{}: oracle H_{n} = {oracle:?}", tag()))?;
                }
                match motivic::homology(&cx, &FieldModel::abstract_field(), n).map_err(e2s)? {
                    HomologyValue::Symbolic { classification: Some(c), .. } => {
                        ensure(c.flasque && c.coflasque, || format!("{}: abstract Q_{n} not flasque", tag()))?
                    }
                    HomologyValue::Symbolic { .. } => {}
                    other => return Err(format!("{}: abstract model evaluated to {other:?}", tag())),
                }
            }
            lattices += 1;
        }
    }
    Ok(format!("{count} groups, {lattices} lattices, {depth_one} to depth 1, the rest to depth 0"))
}

// 7. Invertibility decisions.
fn invertibility() -> Outcome {
    let mut positives = 0usize;
    for named in catalog::small_groups(16) {
        let g = Arc::new(named.group);
        let mut rng = rng_for(&named.name, 7);
        for h in subgroups(&g) {
            let perm = GLattice::permutation(g.clone(), h);
            let c = classify(&perm).map_err(e2s)?;
            ensure(c.invertible && c.is_permutation_witnessed, || format!("{}: Z[G/H{}] not invertible", named.name, h.id))?;
            positives += 1;
            if h.is_class_representative && perm.rank() <= 8 {
                let p = common::random_unimodular(perm.rank(), &mut rng);
                let disguised = perm.change_basis(&p).map_err(e2s)?;
                let c = classify(&disguised).map_err(e2s)?;
                ensure(c.invertible, || format!("{}: Z[G/H{}] in another basis not invertible", named.name, h.id))?;
                positives += 1;
            }
        }
    }
    let mut planted = 0usize;
    for named in catalog::small_groups(8) {
        let g = Arc::new(named.group);
        let reps: Vec<&Subgroup> = g.subgroup_class_representatives().map_err(e2s)?;
        // Z[G/H] recovered from Z[G/H] ⊕ Z[G/K] in a random basis as the kernel of a projection
        let mut rng = rng_for(&named.name, 8);
        for _ in 0..3 {
            let h = reps.choose(&mut rng).unwrap();
            let k = reps.choose(&mut rng).unwrap();
            let m = GLattice::permutation(g.clone(), h);
            let p = m.direct_sum(&GLattice::permutation(g.clone(), k)).map_err(e2s)?;
            let u = common::random_unimodular(p.rank(), &mut rng);
            let mixed = p.change_basis(&u).map_err(e2s)?;
            let inverse = linalg::left_inverse_int(&u).map_err(|x| format!("{x:?}"))?.ok_or("basis change not invertible")?;
            // kernel of the projection onto the second block, in the mixed coordinates
            let second = IntMatrix::from_fn(p.rank() - m.rank(), p.rank(), |i, j| if i + m.rank() == j { 1 } else { 0 });
            let f = LatticeMap::new(
                mixed.clone(),
                GLattice::permutation(g.clone(), k),
                second.try_mul(&inverse).map_err(|x| format!("{x:?}"))?,
            )
            .map_err(e2s)?;
            let summand = mixed.sublattice(&f.kernel_basis().map_err(e2s)?).map_err(e2s)?;
            ensure(summand.rank() == m.rank(), || format!("{}: projected summand has wrong rank", named.name))?;
            let c = classify(&summand).map_err(e2s)?;
            ensure(c.invertible, || format!("{}: projected summand not invertible", named.name))?;
            planted += 1;
        }
        // Q_1 of Z[G/H] is a complement of Z[G/H] in its split cover
        for h in &reps {
            let base = GLattice::permutation(g.clone(), h);
            let res = coflasque_cover(&base).map_err(e2s)?;
            if res.kernel.rank() > 48 {
                continue;
            }
            let s = res.split().map_err(e2s)?.ok_or_else(|| format!("{}: cover of Z[G/H{}] does not split", named.name, h.id))?;
            let retraction = s.matrix().try_mul(res.surjection.matrix()).map_err(|x| format!("{x:?}"))?;
            let e = IntMatrix::identity(res.cover.rank()).try_sub(&retraction).map_err(|x| format!("{x:?}"))?;
            let ee = e.try_mul(&e).map_err(|x| format!("{x:?}"))?;
            let ei = e.try_mul(res.inclusion.matrix()).map_err(|x| format!("{x:?}"))?;
            ensure(ee == e && ei == *res.inclusion.matrix(), || format!("{}: bad projector onto Q_1", named.name))?;
            let c = classify(&res.kernel).map_err(e2s)?;
            ensure(c.invertible, || format!("{}: Q_1(Z[G/H{}]) not invertible", named.name, h.id))?;
            planted += 1;
        }
    }
    let c2 = Arc::new(catalog::cyclic(2));
    let whole = c2.whole().map_err(e2s)?.clone();
    let sign = GLattice::sign(c2.clone(), &subgroups(&c2)[0]).map_err(e2s)?;
    let sign = if sign.generator_matrices()[0][(0, 0)] == -1 {
        sign
    } else {
        GLattice::new(c2.clone(), 1, vec![IntMatrix::from_rows(vec![vec![-1]], 1)]).map_err(e2s)?
    };
    let c = classify(&sign).map_err(e2s)?;
    let h = cohomology::tate_cohomology(&sign, &whole, -1).map_err(e2s)?;
    ensure(!c.invertible && h == AbelianGroupInvariants::cyclic(2), || format!("Z- classified {c:?}, Ĥ^-1 = {h:?}"))?;
    let v4 = group("C2xC2");
    let norm_one = GLattice::norm_one(v4.clone());
    let c = classify(&norm_one).map_err(e2s)?;
    let cx = motivic::build_complex(&norm_one, 0).map_err(e2s)?;
    let h0 = motivic::local_homology(&cx, 0).map_err(e2s)?;
    let oracle = oracle::tate_cohomology(cx.kernel(1), &whole_of(&v4), -1).map_err(e2s)?;
    ensure(!c.invertible && !h0.is_trivial() && h0 == oracle, || {
        format!("norm-one C2xC2 classified {}, H_0 = {h0:?}, oracle {oracle:?}", c.invertible)
    })?;
    Ok(format!("{positives} permutation lattices, {planted} planted summands, 2 negatives"))
}

fn local_pair(cx: &ToricComplex, g: &Arc<FiniteGroup>, n: usize) -> Result<(AbelianGroupInvariants, AbelianGroupInvariants), String> {
    let main = match motivic::homology(cx, &FieldModel::local(g.clone()), n as i64).map_err(e2s)? {
        HomologyValue::Group(h) => h,
        other => return Err(format!("local model returned {other:?}")),
    };
    let q = cx.kernel(n + 1);
    let oracle = oracle::tate_cohomology(q, &whole_of(g), -1).map_err(e2s)?;
    if q.rank() <= 40 {
        let literal = oracle::norm_kernel_quotient(q, &whole_of(g)).map_err(e2s)?;
        if literal != oracle {
            return Err(format!("oracle paths disagree: {literal:?} vs {oracle:?}"));
        }
    }
    Ok((main, oracle))
}

// 8. Local evaluator against the oracle.
fn local_evaluator() -> Outcome {
    let mut compared = 0usize;
    for name in ["C2xC2", "D8", "Q8"] {
        let gc = corpus_for(name, group(name));
        let mut entries: Vec<&Entry> = gc.entries.iter().collect();
        entries.sort_by_key(|e| (e.lattice.rank(), e.label.clone()));
        for e in entries.into_iter().take(10) {
            let cx = iterate_resolution_with(&e.lattice, 1, &Limits::default(), None).map_err(|x| format!("{name}/{}: {x}", e.label))?;
            for n in 0..=1 {
                let (main, oracle) = local_pair(&cx, &gc.group, n).map_err(|x| format!("{name}/{}: {x}", e.label))?;
                ensure(main == oracle && main.is_finite(), || format!("{name}/{}: H_{n} = {main:?}, oracle {oracle:?}", e.label))?;
                compared += 1;
            }
        }
    }
    let v4 = group("C2xC2");
    let cx = iterate_resolution_with(&GLattice::norm_one(v4.clone()), 1, &Limits::default(), None).map_err(e2s)?;
    let (main, oracle) = local_pair(&cx, &v4, 0)?;
    let order = main.order().unwrap_or_default();
    let two_group = order > BigInt::from(1) && (&order & (&order - BigInt::from(1))) == BigInt::from(0);
    ensure(main == oracle && two_group, || format!("norm-one C2xC2: H_0 = {main:?}, oracle {oracle:?}"))?;
    Ok(format!("{compared} homology groups, norm-one C2xC2 H_0 of order {order}"))
}

// 9. Lifting through resolutions.
fn lifting() -> Outcome {
    let mut rng = rng_for("lift", 9);
    let names = ["C2xC2", "C4", "S3", "D8", "C2xC2"];
    let mut found = 0usize;
    let mut attempts = 0usize;
    let mut targets: BTreeMap<(&str, usize), Resolution> = BTreeMap::new();
    while found < 25 {
        attempts += 1;
        if attempts > 500 {
            return Err(format!("only {found} nonzero maps generated"));
        }
        let name = names[found % names.len()];
        let g = group(name);
        let reps: Vec<Subgroup> = g.subgroup_class_representatives().map_err(e2s)?.into_iter().cloned().collect();
        let h = reps.choose(&mut rng).unwrap();
        let target = GLattice::permutation(g.clone(), h);
        let source = common::random_lattice(&g, &mut rng);
        let homs = equivariant_homs(&source, &target).map_err(e2s)?;
        if homs.is_empty() {
            continue;
        }
        let mut m = IntMatrix::zeros(target.rank(), source.rank());
        for phi in &homs {
            let c: i64 = rng.gen_range(-3..=3);
            m = m.try_add(&phi.try_scale(&c).unwrap()).unwrap();
        }
        if m.is_zero() {
            continue;
        }
        let f = LatticeMap::new(source.clone(), target.clone(), m).map_err(e2s)?;
        let target_res = match targets.get(&(name, h.id)) {
            Some(r) => r.clone(),
            None => {
                let r = coflasque_cover(&target).map_err(e2s)?;
                ensure(classify(&r.kernel).map_err(e2s)?.invertible, || "target kernel not invertible".into())?;
                targets.insert((name, h.id), r.clone());
                r
            }
        };
        let source_res = coflasque_cover(&source).map_err(e2s)?;
        // Ext^1 is additive in the first argument: sum over the summands Z[G/H]^copies of the cover
        let mut ext = AbelianGroupInvariants::trivial();
        for sm in source_res.summands.iter().filter(|sm| sm.copies > 0) {
            let piece = ext1(&GLattice::permutation(g.clone(), &sm.subgroup), &target_res.kernel).map_err(e2s)?;
            for _ in 0..sm.copies {
                ext = ext.direct_sum(&piece);
            }
        }
        match lift_morphism(&f, &target_res, &source_res).map_err(e2s)? {
            Lift::Found(lift) => {
                let lhs = target_res.surjection.compose(&lift).map_err(e2s)?;
                let rhs = f.compose(&source_res.surjection).map_err(e2s)?;
                ensure(lhs.matrix() == rhs.matrix(), || format!("map {found}: lift does not commute"))?;
                for (a, b) in lift.source().generator_matrices().iter().zip(lift.target().generator_matrices()) {
                    ensure(b.try_mul(lift.matrix()).unwrap() == lift.matrix().try_mul(a).unwrap(), || {
                        format!("map {found}: lift not equivariant")
                    })?;
                }
            }
            Lift::Obstructed(o) => return Err(format!("map {found}: obstructed by {o:?}, Ext^1 = {ext:?}")),
        }
        ensure(ext.is_trivial(), || format!("map {found}: Ext^1 = {ext:?}"))?;
        found += 1;
    }
    Ok(format!("25 maps lifted in {attempts} draws"))
}

fn fixtures_dir() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures"))
}

fn run_fixture(args: &[String], cache: Option<&Path>) -> (i32, Vec<u8>) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_tori"));
    cmd.current_dir(fixtures_dir()).args(args).env_remove("TORI_CACHE_DIR");
    if let Some(dir) = cache {
        cmd.arg("--cache-dir").arg(dir);
    }
    let out = cmd.output().expect("run tori");
    (out.status.code().unwrap_or(-1), out.stdout)
}

// 10. Determinism.
fn determinism() -> Outcome {
    let text = std::fs::read_to_string(fixtures_dir().join("cli.json")).map_err(|e| e.to_string())?;
    let fixtures: Vec<serde_json::Value> = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let cache = tempfile::tempdir().map_err(|e| e.to_string())?;
    for fx in &fixtures {
        let name = fx["name"].as_str().unwrap_or("?");
        let args: Vec<String> = fx["args"].as_array().unwrap().iter().map(|a| a.as_str().unwrap().to_string()).collect();
        let expected = fx["exit"].as_i64().unwrap() as i32;
        let first = run_fixture(&args, None);
        let second = run_fixture(&args, None);
        let cached = run_fixture(&args, Some(cache.path()));
        let hit = run_fixture(&args, Some(cache.path()));
        ensure(first.0 == expected, || format!("{name}: exit {} (expected {expected})", first.0))?;
        ensure(first == second, || format!("{name}: outputs differ between runs"))?;
        ensure(first == cached && first == hit, || format!("{name}: cached output differs"))?;
    }
    let mut permuted = 0usize;
    for name in ["C2xC2", "D8", "Q8", "S3"] {
        let g = group(name);
        let reps: Vec<Subgroup> = g.subgroup_class_representatives().map_err(e2s)?.into_iter().cloned().collect();
        let mut order: Vec<Subgroup> = reps
            .iter()
            .map(|r| subgroups(&g).iter().rev().find(|s| s.class_representative == r.id).unwrap().clone())
            .collect();
        order.reverse();
        let gc = corpus_for(name, g.clone());
        let mut entries: Vec<&Entry> = gc.entries.iter().collect();
        entries.sort_by_key(|e| (e.lattice.rank(), e.label.clone()));
        for e in entries.into_iter().take(6) {
            let a = iterate_resolution_with(&e.lattice, 1, &Limits::default(), None).map_err(e2s)?;
            let b = iterate_resolution_with(&e.lattice, 1, &Limits::default(), Some(&order)).map_err(e2s)?;
            for n in 0..=1 {
                let ha = motivic::local_homology(&a, n).map_err(e2s)?;
                let hb = motivic::local_homology(&b, n).map_err(e2s)?;
                ensure(ha == hb, || format!("{name}/{}: H_{n} = {ha:?} vs {hb:?} after reordering", e.label))?;
            }
            permuted += 1;
        }
    }
    Ok(format!("{} fixtures, {permuted} reordered complexes", fixtures.len()))
}

fn main() {
    let full: Vec<Entry> = corpus(16).into_iter().flat_map(|gc| gc.entries).collect();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("SNF kernel", Box::new(snf_kernel)),
        ("Tate cohomology sanity", Box::new(tate_sanity)),
        ("Duality bridge", Box::new(|| duality(&full))),
        ("Coflasque cover correctness", Box::new(|| cover_correctness(&full))),
        ("Complex invariants", Box::new(|| complex_invariants(&full))),
        ("Sylow-cyclic vanishing", Box::new(sylow_cyclic)),
        ("Invertibility decision", Box::new(invertibility)),
        ("Local evaluator oracle equivalence", Box::new(local_evaluator)),
        ("Lifting", Box::new(lifting)),
        ("Determinism", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2}. {name}: {detail} ({secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2}. {name}: {detail} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
