//! Seeded property suites behind `gasket verify`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classify::{
    canonical_augmented, decorated_forms, kappa, orbit_census, reduce_to_ground, reduced_form,
    root_quadruples_with_curvature, Family,
};
use crate::completion::{complete, complex_descartes_holds, TangentTriple};
use crate::enumerate::{
    crossing_pair, generate_superpacking, locate_in_unit_square, location_is_unique, nesting_depth_geometric,
    periodicity_counterexample, same_depth_violation, Enumeration, EnumerationBudget, Window,
};
use crate::exact::rational::{int, rat};
use crate::exact::{AugmentedMatrix, DescartesQuadruple, IntMatrix, Isometry, Orientation, RatMatrix};
use crate::group::{
    conjugate_j0, conjugated_generator, duality_matrix, is_lorentz_integer, j0, stabilizer_matrix, transposition,
    GroupWord, Letter, StabilizerType,
};
use crate::render::{residue_symmetry_check, Reflection};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Group,
    Forms,
    Packing,
    Appendix,
    Symmetry,
    All,
}

impl Suite {
    const EACH: [Suite; 5] = [Suite::Group, Suite::Forms, Suite::Packing, Suite::Appendix, Suite::Symmetry];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Group => "group",
            Suite::Forms => "forms",
            Suite::Packing => "packing",
            Suite::Appendix => "appendix",
            Suite::Symmetry => "symmetry",
            Suite::All => "all",
        })
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: bool,
    pub checks: Vec<Check>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub seed: u64,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn add(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        let detail = if passed { String::new() } else { detail.into() };
        self.0.push(Check { name: name.into(), passed, detail });
    }
}

/// Runs one suite, or all of them, with the given seed.
pub fn run(suite: Suite, seed: u64) -> Report {
    let suites: Vec<Suite> = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
    let suites: Vec<SuiteReport> = suites
        .into_iter()
        .map(|s| {
            let mut c = Checks::default();
            match s {
                Suite::Group => group(&mut c),
                Suite::Forms => forms(&mut c, seed),
                Suite::Packing => packing(&mut c, seed),
                Suite::Appendix => appendix(&mut c, seed),
                Suite::Symmetry => symmetry(&mut c),
                Suite::All => unreachable!(),
            }
            SuiteReport { suite: s, passed: c.0.iter().all(|x| x.passed), checks: c.0 }
        })
        .collect();
    Report { seed, passed: suites.iter().all(|s| s.passed), suites }
}

fn r(m: IntMatrix) -> RatMatrix {
    m.to_rat()
}

fn group(c: &mut Checks) {
    let id = RatMatrix::identity();
    let s = |i: u8| r(Letter::s(i).matrix());
    let t = |i: u8| r(Letter::t(i).matrix());
    let d = duality_matrix();
    c.add("S_i^2 = I", (1..=4).all(|i| s(i).mul(&s(i)) == id), "");
    c.add("(S_i^perp)^2 = I", (1..=4).all(|i| t(i).mul(&t(i)) == id), "");
    let commute = (1..=4).all(|i| (1..=4).filter(|&j| j != i).all(|j| t(i).mul(&s(j)) == s(j).mul(&t(i))));
    c.add("S_i^perp S_j = S_j S_i^perp for i != j", commute, "");
    c.add("D^2 = I", d.mul(&d) == id, "");
    c.add("D S_i D = S_i^T", (1..=4).all(|i| d.mul(&s(i)).mul(&d) == s(i).transpose()), "");
    let p = r(transposition(1, 4).mul(&transposition(2, 3)));
    let dual_forms = (1..=4).all(|g| {
        let a = canonical_augmented(Family::A, &int(1), &int(0), &int(g)).matrix();
        let b = canonical_augmented(Family::B, &int(0), &int(1), &int(g)).matrix();
        p.mul(&d).mul(&a) == b
    });
    c.add("P(14) P(23) D A~_{1,0}[g] = B~_{0,1}[g], g = 1..4", dual_forms, "");
    let j = j0();
    c.add("J0 = J0^T = J0^-1", j == j.transpose() && j.mul(&j) == id, "");
    c.add("J0 S1 J0 matches the literal matrix", conjugate_j0(&s(1)) == r(conjugated_generator(1)), "");
    let diag = RatMatrix::diagonal([rat(1), rat(-1), rat(-1), rat(-1)]);
    c.add("J0 D J0 = diag(1,-1,-1,-1)", conjugate_j0(&d) == diag, "");
    let lorentz = (1..=4).all(|i| {
        let (a, b) = (conjugate_j0(&s(i)), conjugate_j0(&t(i)));
        is_lorentz_integer(&a) && is_lorentz_integer(&b) && b == a.transpose()
    });
    c.add("J0-conjugated generators are integral Lorentz with S~perp = S~^T", lorentz, "");
    let mut bad = None;
    for m in -3..=3i64 {
        for n in -3..=3i64 {
            for k in -3..=3i64 {
                for l in -3..=3i64 {
                    if (m - n) % 2 != 0 || (k - l) % 2 != 0 {
                        continue;
                    }
                    let u = |a: i64, b: i64| stabilizer_matrix(int(a), int(b), StabilizerType::I).unwrap().matrix;
                    if u(m, n).mul(&u(k, l)) != u(m + k, n + l) {
                        bad = Some((m, n, k, l));
                    }
                }
            }
        }
    }
    c.add("U(m,n;I) U(k,l;I) = U(m+k,n+l;I)", bad.is_none(), format!("fails at {bad:?}"));
}

/// A uniformly random word of `len` letters, not necessarily reduced.
pub fn random_word(rng: &mut impl Rng, len: usize) -> GroupWord {
    let all: Vec<Letter> = Letter::all().collect();
    GroupWord::from_applied_order((0..len).map(|_| *all.choose(rng).unwrap()).collect())
}

fn forms(c: &mut Checks, seed: u64) {
    let all = decorated_forms(&int(1));
    let mats: HashSet<_> = all.iter().map(|f| f.instantiate()).collect();
    c.add(
        "384 decorated forms are distinct",
        all.len() == 384 && mats.len() == 384,
        format!("{} distinct", mats.len()),
    );
    let fixed = all.iter().all(|f| reduced_form(&f.instantiate()).is_ok_and(|(_, l)| &l == f));
    c.add("reduced_form fixes every decorated form", fixed, "");
    let base = crate::classify::base_forms(&int(1));
    let mut collisions = Vec::new();
    for (i, a) in base.iter().enumerate() {
        for b in &base[i + 1..] {
            if kappa(&a.instantiate()).ok() == kappa(&b.instantiate()).ok() {
                collisions.push(format!("{}~{}", a.name(), b.name()));
            }
        }
    }
    c.add(
        "kappa separates base forms except A_{1,0} and B_{0,1}",
        collisions == ["A_{1,0}[1]~B_{0,1}[1]"],
        collisions.join(" "),
    );
    let census = orbit_census();
    c.add("census total is 672", census.total == 672, census.total.to_string());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d1 = AugmentedMatrix::d1();
    let mut failures = 0;
    for _ in 0..1000 {
        let len = rng.gen_range(0..=25);
        let w = random_word(&mut rng, len).apply(&d1);
        let q = w.quadruple().unwrap();
        if !(w.is_valid() && q.divisor() == int(1) && w.orientation() == Orientation::Positive) {
            failures += 1;
        }
    }
    c.add("random words keep W valid, g and orientation", failures == 0, format!("{failures} failures"));
    let mut bad = 0;
    for g in [1, 3] {
        let q0 = DescartesQuadruple::from_i64([0, 0, g, g]).unwrap();
        for _ in 0..500 {
            let q = random_word(&mut rng, 20).apply_quadruple(&q0);
            let ok = reduce_to_ground(&q).is_ok_and(|red| {
                let mut z = red.ground.0.clone();
                z.sort();
                let ground = z == [0, 0, g, g].map(int) || z == [-g, -g, 0, 0].map(int);
                ground && red.sizes.windows(2).all(|p| p[1] < p[0])
            });
            if !ok {
                bad += 1;
            }
        }
    }
    c.add("random quadruples reduce to ground with shrinking size", bad == 0, format!("{bad} failures"));
    let six: Vec<_> = root_quadruples_with_curvature(6, true).iter().map(|r| r.to_string()).collect();
    c.add(
        "primitive roots with a = -6",
        six == ["(-6, 7, 42, 43)", "(-6, 10, 15, 19)", "(-6, 11, 14, 15)"],
        six.join(" "),
    );
}

/// The standard super-packing over the unit square up to curvature `n`.
pub fn standard_superpacking(window: Window, n: i64) -> Enumeration {
    let b = EnumerationBudget::new(int(n)).unwrap().with_window(window);
    generate_superpacking(&AugmentedMatrix::d1(), &b).expect("bounded budget")
}

fn packing(c: &mut Checks, seed: u64) {
    let e = standard_superpacking(Window::unit_square(), 100);
    c.add("no crossing pairs at curvature <= 100", crossing_pair(e.circles()).is_none(), "");
    c.add("equal depth means disjoint or tangent", same_depth_violation(e.circles()).is_none(), "");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample: Vec<_> = e.circles().choose_multiple(&mut rng, 100).collect();
    let bad: Vec<String> = sample
        .iter()
        .filter(|p| nesting_depth_geometric(&p.circle, &e).ok() != Some(p.depth))
        .map(|p| p.circle.to_string())
        .collect();
    c.add("geometric depth equals witness depth on 100 samples", bad.is_empty(), bad.join(" "));
    let normal = e.iter().all(|p| p.witness.is_normal_form() && p.witness.dual_count() == p.depth);
    c.add("witnesses are normal forms with depth = perp count", normal, "");
}

/// Seeded tangent triples: random normal-form words applied to `D1` and to
/// the located curvature-6 roots, with one row dropped.
pub fn sample_tangent_triples(seed: u64, count: usize) -> Vec<TangentTriple> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bases = vec![AugmentedMatrix::d1()];
    bases.extend(root_quadruples_with_curvature(6, true).iter().map(|r| locate_in_unit_square(r).unwrap()));
    (0..count)
        .map(|_| {
            let base = bases.choose(&mut rng).unwrap();
            let len = rng.gen_range(1..=12);
            let w = random_word(&mut rng, len).normalize().apply(base);
            let skip = rng.gen_range(0..4);
            let rows: Vec<_> =
                w.rows().iter().enumerate().filter(|(k, _)| *k != skip).map(|(_, c)| c.clone()).collect();
            TangentTriple::new([rows[0].clone(), rows[1].clone(), rows[2].clone()]).expect("rows of a configuration")
        })
        .collect()
}

fn appendix(c: &mut Checks, seed: u64) {
    let mut bad = 0;
    for t in sample_tangent_triples(seed, 200) {
        let ok = complete(&t).is_ok_and(|pair| {
            pair.iter().all(|w| w.is_valid() && w.is_strongly_integral() && complex_descartes_holds(w))
        });
        if !ok {
            bad += 1;
        }
    }
    c.add("200 integral triples complete integrally", bad == 0, format!("{bad} failures"));
    let d1 = AugmentedMatrix::d1();
    let two_lines = TangentTriple::new([d1.row(0).clone(), d1.row(1).clone(), d1.row(2).clone()]).unwrap();
    let got = complete(&two_lines).map(|p| p.map(|w| w.row(3).center()));
    let want = [Some((rat(-1), rat(0))), Some((rat(3), rat(0)))];
    c.add(
        "two lines and b=1 at (1,0) complete at (-1,0) and (3,0)",
        got.as_ref().ok() == Some(&want),
        format!("{got:?}"),
    );
    let root = AugmentedMatrix::from_i64([[1, -1, 0, 0], [0, 2, 1, 0], [0, 2, -1, 0], [1, 3, 0, 2]]).unwrap();
    let t = TangentTriple::new([root.row(0).clone(), root.row(1).clone(), root.row(2).clone()]).unwrap();
    let b4 = complete(&t).map(|p| p.map(|w| w.row(3).b.clone()));
    c.add("(-1,2,2) double root b4 = 3, 3", b4.as_ref().ok() == Some(&[rat(3), rat(3)]), format!("{b4:?}"));
}

fn symmetry(c: &mut Checks) {
    let base = standard_superpacking(Window::unit_square(), 100);
    let maps = [
        ("shift (2,0)", Window::from_i64(2, 3, 0, 1).unwrap(), Isometry::translation(rat(2), rat(0))),
        ("reflect x -> -x", Window::from_i64(-1, 0, 0, 1).unwrap(), Isometry::linear(false, -1, 1)),
    ];
    for (name, w, g) in maps {
        let other = standard_superpacking(w, 100);
        let cx = periodicity_counterexample(&base, &other, &g);
        c.add(name, cx.is_none(), format!("{cx:?}"));
    }
    let mut located = root_quadruples_with_curvature(6, true);
    located.push(crate::classify::RootQuadruple::from_i64([-1, 2, 2, 3]).unwrap());
    for r in located {
        let ok = locate_in_unit_square(&r).is_ok_and(|w| {
            let center = w.row(0).center().unwrap();
            w.is_strongly_integral()
                && w.quadruple().ok().as_ref() == Some(r.quadruple())
                && location_is_unique((&center.0, &center.1))
        });
        c.add(&format!("locate {r}"), ok, "");
    }
    for (m, res, refl, want) in [
        (2, 1, Reflection::AntiDiagonal, true),
        (4, 2, Reflection::Horizontal, true),
        (4, 0, Reflection::Vertical, true),
        (4, 0, Reflection::AntiDiagonal, false),
    ] {
        let got = residue_symmetry_check(&base, &int(m), &int(res), refl).map(|s| s.holds);
        c.add(
            &format!("{res} mod {m} under {refl:?} is {}", if want { "symmetric" } else { "not symmetric" }),
            got == Ok(want),
            format!("{got:?}"),
        );
    }
}
