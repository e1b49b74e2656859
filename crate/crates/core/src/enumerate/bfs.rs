use std::collections::HashMap;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::window::Window;
use crate::classify::root_reduction;
use crate::exact::rational::{from_int, rat};
use crate::exact::{AugmentedMatrix, Circle, DescartesQuadruple, Integer, Orientation, Rational};
use crate::group::{GroupWord, Letter};
use crate::{Error, Result};

/// One emitted circle with its nesting depth and the first normal-form word
/// producing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PackedCircle {
    pub circle: Circle,
    pub depth: usize,
    #[serde(serialize_with = "word_text")]
    pub witness: GroupWord,
}

fn word_text<S: serde::Serializer>(w: &GroupWord, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&w.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_curvature: Integer,
    pub max_word_length: Option<usize>,
    pub window: Option<Window>,
}

impl EnumerationBudget {
    pub fn new(max_curvature: Integer) -> Result<Self> {
        if !max_curvature.is_positive() {
            return Err(Error::UnboundedBudget("max_curvature must be positive"));
        }
        Ok(EnumerationBudget { max_curvature, max_word_length: None, window: None })
    }

    pub fn with_window(mut self, window: Window) -> Self {
        self.window = Some(window);
        self
    }

    pub fn with_max_word_length(mut self, n: usize) -> Self {
        self.max_word_length = Some(n);
        self
    }

    fn admits(&self, c: &Circle) -> bool {
        c.b.abs() <= from_int(&self.max_curvature) && self.window.as_ref().is_none_or(|w| w.meets_circle(c))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Apollonian,
    SuperApollonian,
}

/// Emitted circles in emission order, indexed by geometric key.
#[derive(Clone, Debug)]
pub struct Enumeration {
    circles: Vec<PackedCircle>,
    index: HashMap<Circle, usize>,
    budget: EnumerationBudget,
}

impl Enumeration {
    pub fn circles(&self) -> &[PackedCircle] {
        &self.circles
    }

    pub fn len(&self) -> usize {
        self.circles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circles.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, PackedCircle> {
        self.circles.iter()
    }

    pub fn budget(&self) -> &EnumerationBudget {
        &self.budget
    }

    /// Lookup by geometric circle, whatever the orientation of `c`.
    pub fn get(&self, c: &Circle) -> Option<&PackedCircle> {
        self.index.get(&c.geometric_key()).map(|&i| &self.circles[i])
    }

    pub fn into_vec(self) -> Vec<PackedCircle> {
        self.circles
    }

    fn insert(&mut self, circle: Circle, depth: usize, witness: &GroupWord) {
        let key = circle.geometric_key();
        if self.index.contains_key(&key) {
            return;
        }
        self.index.insert(key, self.circles.len());
        self.circles.push(PackedCircle { circle, depth, witness: witness.clone() });
    }
}

struct Node {
    rows: [Circle; 4],
    word: GroupWord,
    text: String,
}

/// `⟨c, π(p)⟩` with `π(p) = (|p|², 1, x, y)`: positive exactly on the open
/// oriented interior of `c`.
fn interior_value(c: &Circle, (x, y): (&Rational, &Rational)) -> Rational {
    let r2 = x * x + y * y;
    &c.bx * x + &c.by * y - (&c.bbar + &c.b * r2) / rat(2)
}

fn interior_point(c: &Circle) -> (Rational, Rational) {
    if c.b.is_zero() {
        let t = &c.bbar / rat(2) + Rational::one();
        (&c.bx * &t, &c.by * &t)
    } else {
        let (x, y) = c.center().unwrap();
        if c.b.is_positive() {
            (x, y)
        } else {
            (x - rat(2) / &c.b, y)
        }
    }
}

/// Circle through the tangency points of the three rows other than `i`,
/// oriented towards row `i`. Everything generated below an `S_i` step stays
/// on that closed side.
fn dual_cap(rows: &[Circle; 4], i: usize) -> Circle {
    let mut s = rows[i].neg();
    for (k, r) in rows.iter().enumerate() {
        if k != i {
            s = s.add(r);
        }
    }
    let d = s.scale(&(Rational::one() / rat(2)));
    let p = interior_point(&rows[i]);
    if interior_value(&d, (&p.0, &p.1)).is_negative() {
        d.neg()
    } else {
        d
    }
}

struct Expander<'a> {
    budget: &'a EnumerationBudget,
    bound: Rational,
    kind: GroupKind,
}

impl Expander<'_> {
    fn letters(&self) -> Vec<Letter> {
        match self.kind {
            GroupKind::Apollonian => Letter::apollonian().collect(),
            GroupKind::SuperApollonian => Letter::all().collect(),
        }
    }

    fn children(&self, node: &Node) -> Vec<Node> {
        let prev = node.word.last_applied();
        let mut out = Vec::new();
        for l in self.letters() {
            if prev.is_some_and(|p| !l.may_follow(p)) {
                continue;
            }
            let i = l.row();
            if l.is_dual() {
                let cap = &node.rows[i];
                if cap.b.is_positive() && cap.b >= self.bound {
                    continue;
                }
                if self.budget.window.as_ref().is_some_and(|w| !w.meets_interior(cap)) {
                    continue;
                }
            }
            let mut rows = node.rows.clone();
            l.act(&mut rows);
            if !l.is_dual() {
                if rows[i].b > self.bound {
                    continue;
                }
                if let Some(w) = &self.budget.window {
                    if !w.meets_interior(&dual_cap(&rows, i)) {
                        continue;
                    }
                }
            }
            let text = if node.text.is_empty() { l.to_string() } else { format!("{l} {}", node.text) };
            out.push(Node { rows, word: node.word.then(l), text });
        }
        out
    }
}

fn has_line_in_packing(w: &AugmentedMatrix) -> bool {
    let b = w.curvatures();
    let den = b.iter().fold(Integer::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: [Integer; 4] = b.map(|x| (x * from_int(&den)).to_integer());
    match DescartesQuadruple::new(scaled) {
        Ok(q) => match root_reduction(&q) {
            Ok((_, root)) => root.0.iter().any(Zero::is_zero),
            Err(_) => true,
        },
        Err(_) => true,
    }
}

/// Breadth-first orbit enumeration of `W` under the chosen group.
///
/// Words are extended only in normal form. Each level is sorted by word
/// text before emission, so the witness kept for a circle is the shortest
/// word and, among those, the lexicographically first. `threads > 1`
/// expands each level on a rayon pool; the output does not depend on it.
pub fn generate(
    w: &AugmentedMatrix,
    budget: &EnumerationBudget,
    kind: GroupKind,
    threads: usize,
) -> Result<Enumeration> {
    if w.orientation() == Orientation::Negative {
        return Err(Error::NegativelyOriented);
    }
    if budget.window.is_none() && budget.max_word_length.is_none() {
        match kind {
            GroupKind::SuperApollonian => {
                return Err(Error::UnboundedBudget("a super-packing needs a window or a word-length bound"))
            }
            GroupKind::Apollonian if has_line_in_packing(w) => {
                return Err(Error::UnboundedBudget(
                    "this packing contains a line; give a window or a word-length bound",
                ))
            }
            _ => {}
        }
    }
    let mut out = Enumeration { circles: Vec::new(), index: HashMap::new(), budget: budget.clone() };
    let empty = GroupWord::empty();
    for c in w.rows().iter().filter(|c| budget.admits(c)) {
        out.insert(c.clone(), 0, &empty);
    }
    let ex = Expander { budget, bound: from_int(&budget.max_curvature), kind };
    let pool =
        (threads > 1).then(|| rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool"));
    let mut frontier = vec![Node { rows: w.rows().clone(), word: empty, text: String::new() }];
    let mut len = 0;
    while !frontier.is_empty() && budget.max_word_length.is_none_or(|m| len < m) {
        len += 1;
        let mut next: Vec<Node> = match &pool {
            Some(p) => p.install(|| frontier.par_iter().flat_map_iter(|n| ex.children(n)).collect()),
            None => frontier.iter().flat_map(|n| ex.children(n)).collect(),
        };
        next.sort_by(|a, b| a.text.cmp(&b.text));
        for n in &next {
            let l = n.word.last_applied().unwrap();
            let depth = n.word.dual_count();
            if l.is_dual() {
                for (k, c) in n.rows.iter().enumerate() {
                    if k != l.row() && budget.admits(c) {
                        out.insert(c.clone(), depth, &n.word);
                    }
                }
            } else if budget.admits(&n.rows[l.row()]) {
                out.insert(n.rows[l.row()].clone(), depth, &n.word);
            }
        }
        frontier = next;
    }
    Ok(out)
}

/// All circles of the Apollonian packing of `W` within the budget.
pub fn generate_packing(w: &AugmentedMatrix, budget: &EnumerationBudget) -> Result<Enumeration> {
    generate(w, budget, GroupKind::Apollonian, 1)
}

/// All circles of the super-packing of `W` within the budget.
pub fn generate_superpacking(w: &AugmentedMatrix, budget: &EnumerationBudget) -> Result<Enumeration> {
    generate(w, budget, GroupKind::SuperApollonian, 1)
}
