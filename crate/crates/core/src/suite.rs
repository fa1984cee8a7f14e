//! The corpus verification suite: every statement with a combinatorial
//! analogue, run end to end with exact arithmetic. One criterion per
//! subject; each result carries a verdict and the details that certify it.

use crate::bar::em::em_homology;
use crate::bar::milnor::{
    dl_to_join, join_to_dl, milnor_join_homology, random_group_elt, random_join_point,
    translate_dl, DlPoint,
};
use crate::bar::models::normalized_chains;
use crate::bar::point::{
    contraction_point, random_point, shuffle_add, BarPoint, PointGroup, PointKind,
};
use crate::bar::resolution::bar_resolution_check;
use crate::bar::simgroup::{e_of, SimAbGroup, DEFAULT_BUDGET};
use crate::deligne::cocycle::{
    class_is_trivial, cocycle_check, flat_normal_form, qmodz_is_exact, random_flat_cocycle,
    random_valid_cocycle, scalar_curvature, weil_kostant_lift, DeligneCocycle,
};
use crate::deligne::complex::{deligne_complex, DeligneElement};
use crate::deligne::tower::{
    gerbe_view, localize_cocycle, random_tower, tower_check, tower_collapse, tower_collapse_raw,
    tower_differential,
};
use crate::error::Error;
use crate::exact::group::FgAbGroup;
use crate::rng::Rng;
use crate::scalar::{rat_int, Integer, Scalar};
use crate::simplicial::cochain::{Cochain, CoefRing};
use crate::simplicial::periods::{integral_periods, ComplexHomology};
use crate::simplicial::spaces::{standard_space, SpaceName};
use num_traits::Zero;
use serde_json::{json, Value};
use std::collections::BTreeMap;

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: usize,
    pub name: String,
    pub passed: bool,
    pub details: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct CorpusReport {
    pub seed: u64,
    pub criteria: Vec<CriterionResult>,
    /// Deterministic work counters (not wall-clock; reports must be
    /// byte-identical for a fixed seed).
    pub counters: BTreeMap<String, u64>,
}

impl CorpusReport {
    pub fn all_passed(&self) -> bool {
        self.criteria.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "seed": self.seed,
            "conventions": conventions(),
            "criteria": self.criteria.iter().map(|c| json!({
                "id": c.id,
                "name": c.name,
                "verdict": if c.passed { "pass" } else { "fail" },
                "details": c.details,
            })).collect::<Vec<_>>(),
            "timing": {
                "counters": self.counters,
            },
            "summary": if self.all_passed() { "all criteria passed" } else { "FAILURES present" },
        })
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# Corpus verification (seed {})\n\n", self.seed));
        for c in &self.criteria {
            out.push_str(&format!(
                "- [{}] criterion {}: {}\n",
                if c.passed { "pass" } else { "FAIL" },
                c.id,
                c.name
            ));
            for d in &c.details {
                out.push_str(&format!("    - {d}\n"));
            }
        }
        out.push_str(&format!(
            "\n{}\n",
            if self.all_passed() {
                "All criteria passed."
            } else {
                "FAILURES present."
            }
        ));
        out.push_str("\nConventions: ");
        out.push_str(&conventions_text());
        out.push('\n');
        out
    }
}

/// The convention block every report carries.
pub fn conventions() -> Value {
    json!({
        "coefficients": "R replaced by Q, C* replaced by Q/Z; Z(q) twist dropped (Z(q) := Z)",
        "orientation": "sorted-vertex ordering with face signs (-1)^i",
        "cone": "Cone(f)^n = A^{n+1} (+) B^n, d(a, b) = (-d a, f(a) + d b)",
        "total_complex": "d_tot = d_horiz + (-1)^{horizontal degree} d_vert",
        "deligne_differential": "d(c, omega, theta) = (delta c, delta omega, iota(c) - omega - delta theta)",
        "tower_differential": "D = cech_delta + (-1)^r local_delta; collapse by front-face/back-face with min-vertex gluing",
        "cover": "closed vertex stars; intersections are closed stars of index simplices",
    })
}

pub fn conventions_text() -> String {
    "coefficients Q for R and Q/Z for C* (Z(q) := Z); sorted-vertex orientation with face signs (-1)^i; cone d(a,b) = (-da, f(a)+db); total differential d + (-1)^r vertical; Deligne differential (dc, dw, i(c)-w-dt); tower differential cech + (-1)^r local with front-face/back-face collapse".to_string()
}

fn corpus_groups() -> Vec<FgAbGroup> {
    ["Z", "Z/2", "Z/3", "Z/2+Z/4"]
        .iter()
        .map(|s| FgAbGroup::parse(s).unwrap())
        .collect()
}

struct Check {
    details: Vec<String>,
    failed: bool,
}

impl Check {
    fn new() -> Self {
        Check {
            details: Vec::new(),
            failed: false,
        }
    }

    fn expect(&mut self, ok: bool, what: impl Into<String>) {
        let what = what.into();
        if ok {
            self.details.push(format!("ok: {what}"));
        } else {
            self.details.push(format!("FAIL: {what}"));
            self.failed = true;
        }
    }

    fn finish(self, id: usize, name: &str) -> CriterionResult {
        CriterionResult {
            id,
            name: name.to_string(),
            passed: !self.failed,
            details: self.details,
        }
    }
}

fn table_string(groups: &[FgAbGroup]) -> String {
    let cells: Vec<String> = groups.iter().map(ToString::to_string).collect();
    format!("({})", cells.join(", "))
}

fn homology_table(name: SpaceName) -> Result<Vec<FgAbGroup>, Error> {
    let x = standard_space(name);
    let h = x.chain_complex::<Integer>().homology()?;
    Ok((0..=x.dim() as isize).map(|d| h.group(d)).collect())
}

/// Criterion 1: the homology golden corpus.
pub fn criterion_homology_corpus() -> Result<CriterionResult, Error> {
    let mut ck = Check::new();
    let golden: Vec<(SpaceName, Vec<&str>)> = vec![
        (SpaceName::Circle, vec!["Z", "Z"]),
        (SpaceName::Sphere(2), vec!["Z", "0", "Z"]),
        (SpaceName::Sphere(3), vec!["Z", "0", "0", "Z"]),
        (SpaceName::Sphere(4), vec!["Z", "0", "0", "0", "Z"]),
        (SpaceName::Torus, vec!["Z", "Z^2", "Z"]),
        (SpaceName::Rp2, vec!["Z", "Z/2", "0"]),
        (SpaceName::Klein, vec!["Z", "Z + Z/2", "0"]),
    ];
    for (name, expect) in golden {
        let got = homology_table(name)?;
        let got_s: Vec<String> = got.iter().map(ToString::to_string).collect();
        ck.expect(
            got_s == expect,
            format!("H_*({name}) = {}", table_string(&got)),
        );
    }
    Ok(ck.finish(1, "homology golden corpus"))
}

/// Criterion 2: acyclicity of the normalized chains of `EG`.
pub fn criterion_bar_acyclicity() -> Result<CriterionResult, Error> {
    let mut ck = Check::new();
    for g in corpus_groups() {
        let e = e_of(&SimAbGroup::constant(&g, 5), DEFAULT_BUDGET)?;
        let chains = normalized_chains(&e, DEFAULT_BUDGET)?;
        let h = chains.homology()?;
        let mut ok = h.group(0) == FgAbGroup::free(1);
        for i in 1..=4isize {
            ok &= h.group(i).is_trivial();
        }
        ck.expect(ok, format!("E({g}) acyclic to degree 4 with H_0 = Z"));
    }
    Ok(ck.finish(2, "bar acyclicity of EG"))
}

/// Criterion 3: Eilenberg–MacLane homology tables and axioms.
pub fn criterion_em_homology() -> Result<CriterionResult, Error> {
    let mut ck = Check::new();
    let z2 = FgAbGroup::cyclic(2);
    let t = em_homology(&z2, 1, 5, DEFAULT_BUDGET)?;
    ck.expect(
        table_string(&t) == "(Z, Z/2, 0, Z/2, 0, Z/2)",
        format!("H(K(Z/2,1)) to degree 5 = {}", table_string(&t)),
    );
    let z = FgAbGroup::free(1);
    let t = em_homology(&z, 2, 4, DEFAULT_BUDGET)?;
    ck.expect(
        table_string(&t) == "(Z, 0, Z, 0, Z)",
        format!("H(K(Z,2)) to degree 4 = {}", table_string(&t)),
    );
    for g in corpus_groups() {
        for s in 1..=3usize {
            let t = em_homology(&g, s, s, DEFAULT_BUDGET)?;
            let mut ok = t[0] == FgAbGroup::free(1) && t[s] == g;
            for item in t.iter().take(s).skip(1) {
                ok &= item.is_trivial();
            }
            ck.expect(
                ok,
                format!("EM axioms for K({g},{s}): {}", table_string(&t)),
            );
        }
    }
    Ok(ck.finish(3, "Eilenberg-MacLane homology"))
}

/// Criterion 4: the Milnor join models.
pub fn criterion_join_models() -> Result<CriterionResult, Error> {
    let mut ck = Check::new();
    let z2 = FgAbGroup::cyclic(2);
    for n in 0..=3usize {
        let jm = milnor_join_homology(&z2, n)?;
        let mut e_ok = true;
        for (d, grp) in jm.e_homology.iter().enumerate() {
            let expect_rank = match (d, n) {
                (0, 0) => 2,
                (0, _) => 1,
                (d, n) if d == n => 1,
                _ => 0,
            };
            e_ok &= grp.free_rank() == expect_rank && grp.torsion().is_empty();
        }
        ck.expect(e_ok, format!("E side of join(Z/2, {n}) = H_*(S^{n})"));
        let mut b_ok = true;
        for (d, grp) in jm.b_homology.iter().enumerate() {
            let expect = match d {
                0 => "Z".to_string(),
                d if d % 2 == 1 && d < n => "Z/2".to_string(),
                d if d == n && n % 2 == 1 => "Z".to_string(),
                _ => "0".to_string(),
            };
            b_ok &= grp.to_string() == expect;
        }
        ck.expect(b_ok, format!("B side of join(Z/2, {n}) = H_*(RP^{n})"));
    }
    Ok(ck.finish(4, "Milnor join models"))
}

/// Criterion 5: bar-resolution exactness.
pub fn criterion_bar_resolution() -> Result<CriterionResult, Error> {
    let mut ck = Check::new();
    for g in corpus_groups() {
        let r = bar_resolution_check(&g, 3, 3, DEFAULT_BUDGET)?;
        let failed: Vec<String> = r
            .stages
            .iter()
            .filter(|s| !s.passed)
            .map(|s| format!("{} at degree {}", s.stage, s.degree))
            .collect();
        ck.expect(
            r.all_exact(),
            format!(
                "bar resolution of {g} exact for L = 3, N = 3 ({} stages checked{})",
                r.stages.len(),
                if failed.is_empty() {
                    String::new()
                } else {
                    format!("; failed: {failed:?}")
                }
            ),
        );
    }
    Ok(ck.finish(5, "bar-resolution exactness"))
}

/// Criterion 6: the seeded shuffle / Dold–Lashof / contraction point suite.
pub fn criterion_point_suite(seed: u64) -> Result<CriterionResult, Error> {
    let mut ck = Check::new();
    let mut rng = Rng::new(seed ^ 0x6a);
    let groups = [
        PointGroup::FgAb(FgAbGroup::cyclic(2)),
        PointGroup::FgAb(FgAbGroup::parse("Z/2+Z/4")?),
        PointGroup::FgAb(FgAbGroup::free(1)),
        PointGroup::QVec(2),
    ];
    let mut shuffle_ok = true;
    let mut contraction_ok = true;
    let mut dl_ok = true;
    let total = 200usize;
    for i in 0..total {
        let group = &groups[i % groups.len()];
        let kind = if i % 2 == 0 {
            PointKind::E
        } else {
            PointKind::B
        };
        let u = random_point(group, kind, 3, &mut rng);
        let v = random_point(group, kind, 3, &mut rng);
        let w = random_point(group, kind, 3, &mut rng);
        let e = BarPoint::basepoint(group.clone(), kind);
        shuffle_ok &= shuffle_add(&u, &e)? == u;
        shuffle_ok &= shuffle_add(&u, &v)? == shuffle_add(&v, &u)?;
        shuffle_ok &=
            shuffle_add(&shuffle_add(&u, &v)?, &w)? == shuffle_add(&u, &shuffle_add(&v, &w)?)?;
        if kind == PointKind::E {
            let x = u.clone();
            contraction_ok &= contraction_point(&x, &rat_int(0))? == x;
            contraction_ok &=
                contraction_point(&x, &rat_int(1))? == BarPoint::basepoint(group.clone(), kind);
        }
        // Dold–Lashof round trip and equivariance over the finite groups
        if let PointGroup::FgAb(g) = group {
            if g.is_finite() {
                let y = random_join_point(group, 3, &mut rng);
                let h = random_group_elt(group, &mut rng);
                let t = rng.unit_interval();
                let d = DlPoint { h, t, y };
                let j = dl_to_join(&d, group)?;
                dl_ok &= join_to_dl(&j, group)? == d;
                let g_elt = random_group_elt(group, &mut rng);
                dl_ok &= dl_to_join(&translate_dl(&d, &g_elt, group), group)?
                    == j.translate(&g_elt, group);
            }
        }
    }
    ck.expect(
        shuffle_ok,
        format!("commutativity, associativity, identity on {total} points"),
    );
    ck.expect(
        contraction_ok,
        "contraction endpoints r(x,0) = x and r(x,1) = basepoint",
    );
    ck.expect(dl_ok, "DL <-> join round trip and equivariance");
    Ok(ck.finish(6, "shuffle and Dold-Lashof point suites"))
}

/// Criterion 7: the scalar-curvature suite.
pub fn criterion_curvature_suite(seed: u64) -> Result<CriterionResult, Error> {
    let mut ck = Check::new();
    let mut rng = Rng::new(seed ^ 0x7c);
    for (name, p) in [
        (SpaceName::Torus, 2),
        (SpaceName::Sphere(2), 2),
        (SpaceName::Sphere(3), 3),
    ] {
        let x = standard_space(name);
        let hom = ComplexHomology::new(&x)?;
        let mut crv_ok = true;
        let mut lift_ok = true;
        let mut kernel_ok = true;
        for _ in 0..10 {
            let c = random_valid_cocycle(&hom, p, &mut rng)?;
            let crv = scalar_curvature(&hom, &c)?;
            let report = integral_periods(&hom, &crv, true)?;
            crv_ok &= report.is_closed && report.has_integral_periods;
            // lift the curvature back and compare curvatures exactly
            let lift = weil_kostant_lift(&hom, &crv)?;
            lift_ok &= scalar_curvature(&hom, &lift)? == crv;
            // flat normal form defined exactly on the curvature kernel
            if crv.is_zero() {
                kernel_ok &= flat_normal_form(&hom, &c).is_ok();
            } else {
                kernel_ok &= matches!(flat_normal_form(&hom, &c), Err(Error::NonzeroCurvature));
            }
        }
        ck.expect(
            crv_ok,
            format!("{name} p=q={p}: curvatures closed with integral periods"),
        );
        ck.expect(
            lift_ok,
            format!("{name}: weil_kostant_lift round-trips on curvatures"),
        );
        ck.expect(
            kernel_ok,
            format!("{name}: flat normal form defined exactly on ker(s)"),
        );
    }
    Ok(ck.finish(7, "scalar curvature and Weil-Kostant"))
}

/// Criterion 8: the flat/torsion suite on the Klein bottle and the torus.
pub fn criterion_flat_torsion_suite(seed: u64) -> Result<CriterionResult, Error> {
    let mut ck = Check::new();
    let mut rng = Rng::new(seed ^ 0x8b);
    // Klein bottle, p = 2 < q = 3
    let x = standard_space(SpaceName::Klein);
    let hom = ComplexHomology::new(&x)?;
    let (t, order) = hom
        .cocycle_generators(2)
        .into_iter()
        .find(|(_, o)| o.is_some())
        .ok_or_else(|| Error::bad_input("Klein bottle lost its torsion"))?;
    ck.expect(order == Some(Integer::from(2)), "Tors H^2(klein) = Z/2");
    let c = Cochain::from_int_vec(&x, 2, &t);
    let delta_q = x.boundary_matrix::<crate::scalar::Rational>(2).transpose();
    let theta_vec = crate::exact::solve::solve_rat(&delta_q, &c.retag(CoefRing::Rat)?.to_vec(&x))?
        .ok_or_else(|| Error::bad_input("torsion class not rationally exact"))?;
    let theta = Cochain::from_vec(&x, 1, CoefRing::Rat, &theta_vec)?;
    let flat = DeligneCocycle {
        p: 2,
        q: 3,
        c,
        omega: Cochain::zero(2, CoefRing::Rat),
        theta,
    };
    let check = cocycle_check(&hom, &flat)?;
    ck.expect(
        check.valid,
        "flat torsion representative is a valid cocycle",
    );
    ck.expect(
        check.char_class.map(|cc| cc.iter().any(|v| !v.is_zero())) == Some(true),
        "flat class maps onto the torsion generator of H^2",
    );
    ck.expect(
        class_is_trivial(&hom, &flat)?.is_none(),
        "flat torsion class is nontrivial",
    );
    ck.expect(
        class_is_trivial(&hom, &flat.scale_int(2)?)?.is_some(),
        "its double is trivial: exact order 2",
    );
    let u = flat_normal_form(&hom, &flat)?;
    ck.expect(
        qmodz_is_exact(&hom, &u.u)?.is_none(),
        "flat invariant u has order 2 in Q/Z",
    );
    ck.expect(
        qmodz_is_exact(&hom, &u.u.add(&u.u)?)?.is_some(),
        "2u is exact over Q/Z",
    );
    // torus, p = 2 < q = 3: no torsion to hit; u = 0 membership characterizes
    let x = standard_space(SpaceName::Torus);
    let hom = ComplexHomology::new(&x)?;
    let mut char_ok = true;
    let mut membership_ok = true;
    for _ in 0..10 {
        let f = random_flat_cocycle(&hom, 2, 3, &mut rng)?;
        let check = cocycle_check(&hom, &f)?;
        char_ok &= check.valid
            && check
                .char_class
                .as_ref()
                .is_some_and(|cc| cc.iter().all(Zero::is_zero));
        let u = flat_normal_form(&hom, &f)?;
        let u_exact = qmodz_is_exact(&hom, &u.u)?.is_some();
        let trivial = class_is_trivial(&hom, &f)?.is_some();
        membership_ok &= u_exact == trivial;
    }
    ck.expect(
        char_ok,
        "torus flat classes map onto nothing torsion (Tors H^2 = 0)",
    );
    ck.expect(
        membership_ok,
        "u = 0 membership test characterizes triviality on the torus",
    );
    Ok(ck.finish(8, "flat classification and torsion"))
}

/// Criterion 9: the degree-`p` extension suite.
pub fn criterion_first_sequence(seed: u64) -> Result<CriterionResult, Error> {
    let mut ck = Check::new();
    let mut rng = Rng::new(seed ^ 0x91);
    for name in [SpaceName::Torus, SpaceName::Sphere(2)] {
        let x = standard_space(name);
        let hom = ComplexHomology::new(&x)?;
        // surjectivity: lift every generator of H^2(X; Z)
        let gens = hom.cocycle_generators(2);
        let mut surj_ok = !gens.is_empty();
        for (i, (g, _)) in gens.iter().enumerate() {
            let c = Cochain::from_int_vec(&x, 2, g);
            let lift = DeligneCocycle {
                p: 2,
                q: 2,
                c: c.clone(),
                omega: c.retag(CoefRing::Rat)?,
                theta: Cochain::zero(1, CoefRing::Rat),
            };
            let check = cocycle_check(&hom, &lift)?;
            let class = check.char_class.unwrap_or_default();
            surj_ok &= check.valid
                && class.iter().enumerate().all(|(j, v)| {
                    if j == i {
                        *v == Integer::from(1)
                    } else {
                        v.is_zero()
                    }
                });
        }
        ck.expect(
            surj_ok,
            format!("{name}: every H^2 generator lifts with the right class"),
        );
        // kernel characterization on 50 seeded random cocycles
        let mut kernel_ok = true;
        for _ in 0..50 {
            let y = random_valid_cocycle(&hom, 2, &mut rng)?;
            let class = cocycle_check(&hom, &y)?.char_class.unwrap();
            let class_zero = class.iter().all(Zero::is_zero);
            // c removable: delta b = c solvable over Z
            let delta = x.boundary_matrix::<Integer>(2).transpose();
            let removable = crate::exact::solve::solve_int(&delta, &y.c.to_int_vec(&x)?)?.is_some();
            kernel_ok &= class_zero == removable;
        }
        ck.expect(
            kernel_ok,
            format!("{name}: c removable iff char_class = 0 (50 samples)"),
        );
    }
    Ok(ck.finish(9, "characteristic class sequence"))
}

/// Criterion 10: tower comparison.
pub fn criterion_towers(seed: u64) -> Result<CriterionResult, Error> {
    let mut ck = Check::new();
    let mut rng = Rng::new(seed ^ 0xa0);
    // localization of corpus lifts
    for (name, p) in [
        (SpaceName::Torus, 2),
        (SpaceName::Sphere(2), 2),
        (SpaceName::Sphere(3), 3),
    ] {
        let x = standard_space(name);
        let hom = ComplexHomology::new(&x)?;
        let cell = x.simplices(p)[0].clone();
        let omega = Cochain::from_values(&x, p, CoefRing::Rat, [(cell, rat_int(1))])?;
        let lift = weil_kostant_lift(&hom, &omega)?;
        let tower = localize_cocycle(&hom, &lift)?;
        let report = tower_check(&x, &tower)?;
        ck.expect(
            report.valid,
            format!("{name}: localization of the lift passes tower_check"),
        );
        let back = tower_collapse(&hom, &tower)?;
        let diff = back.sub(&lift)?;
        ck.expect(
            class_is_trivial(&hom, &diff)?.is_some(),
            format!("{name}: collapse of the localization is equivalent to the lift"),
        );
    }
    // chain map on 50 random towers (mixed degrees and weights)
    let x = standard_space(SpaceName::Torus);
    let hom = ComplexHomology::new(&x)?;
    let mut chain_ok = true;
    for i in 0..50 {
        let (deg, q) = [(1usize, 2usize), (1, 3), (2, 3)][i % 3];
        let t = random_tower(&x, deg, q, &mut rng);
        let dt = tower_differential(&x, &t)?;
        let lhs = tower_collapse_raw(&x, &dt)?;
        let collapsed = tower_collapse_raw(&x, &t)?;
        let dc = deligne_complex(&x, q, deg + 2)?;
        let rhs = dc.apply_d(&DeligneElement {
            degree: deg,
            c: collapsed.c.clone(),
            omega: collapsed.omega.clone(),
            theta: collapsed.theta.clone(),
        })?;
        chain_ok &= lhs.c == rhs.c && lhs.omega == rhs.omega && lhs.theta == rhs.theta;
        // differentials of towers collapse to trivial classes
        if deg + 1 == 2 && q == 2 {
            let y = tower_collapse(&hom, &dt)?;
            chain_ok &= class_is_trivial(&hom, &y)?.is_some();
        }
    }
    ck.expect(
        chain_ok,
        "collapse is a chain map on 50 random towers and kills differentials",
    );
    // gerbe view of the 3-sphere generator tower
    let x = standard_space(SpaceName::Sphere(3));
    let hom = ComplexHomology::new(&x)?;
    let cell = x.simplices(3)[0].clone();
    let omega = Cochain::from_values(&x, 3, CoefRing::Rat, [(cell, rat_int(1))])?;
    let lift = weil_kostant_lift(&hom, &omega)?;
    let tower = localize_cocycle(&hom, &lift)?;
    let gerbe = gerbe_view(&x, &tower)?;
    let fund = hom.free_cycles(3).remove(0);
    let period = gerbe.curvature.pair(&x, &fund)?;
    ck.expect(
        period == rat_int(1) || period == rat_int(-1),
        format!(
            "sphere(3) gerbe curvature has total period {} = ±1",
            period.render()
        ),
    );
    Ok(ck.finish(10, "tower comparison and gerbe dictionary"))
}

/// Criterion 11: determinism of the seeded sub-suites (the CLI re-runs the
/// whole binary for the byte-identical check).
pub fn criterion_determinism(seed: u64) -> Result<CriterionResult, Error> {
    let mut ck = Check::new();
    let a = criterion_point_suite(seed)?;
    let b = criterion_point_suite(seed)?;
    let render = |c: &CriterionResult| serde_json::to_string(&c.details).unwrap();
    ck.expect(
        render(&a) == render(&b),
        "point suite byte-identical across two runs",
    );
    let a = criterion_first_sequence(seed)?;
    let b = criterion_first_sequence(seed)?;
    ck.expect(
        render(&a) == render(&b),
        "sequence suite byte-identical across two runs",
    );
    Ok(ck.finish(11, "fixed-seed determinism"))
}

/// Run every criterion.
pub fn run_corpus(seed: u64) -> Result<CorpusReport, Error> {
    let criteria = vec![
        criterion_homology_corpus()?,
        criterion_bar_acyclicity()?,
        criterion_em_homology()?,
        criterion_join_models()?,
        criterion_bar_resolution()?,
        criterion_point_suite(seed)?,
        criterion_curvature_suite(seed)?,
        criterion_flat_torsion_suite(seed)?,
        criterion_first_sequence(seed)?,
        criterion_towers(seed)?,
        criterion_determinism(seed)?,
    ];
    let mut counters = BTreeMap::new();
    counters.insert("criteria".to_string(), criteria.len() as u64);
    counters.insert(
        "checks".to_string(),
        criteria.iter().map(|c| c.details.len() as u64).sum(),
    );
    Ok(CorpusReport {
        seed,
        criteria,
        counters,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conventions_block_is_stable() {
        assert_eq!(
            serde_json::to_string(&conventions()).unwrap(),
            serde_json::to_string(&conventions()).unwrap()
        );
    }
}
