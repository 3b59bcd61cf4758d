use serde::Serialize;

use super::{Element, GroupSpec, MAX_ARITY};

/// One relator of a presentation and what it evaluated to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelatorCheck {
    pub relator: String,
    pub value: Element,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationReport {
    pub relators: Vec<RelatorCheck>,
}

impl PresentationReport {
    pub fn all_hold(&self) -> bool {
        self.relators.iter().all(|r| r.holds)
    }
}

/// A word in the presentation generators: `(generator, exponent)` factors.
type Word = Vec<(usize, i64)>;

fn unit(arity: usize, k: usize) -> Element {
    let mut c = [0u64; MAX_ARITY];
    c[k] = 1;
    Element::new(&c[..arity])
}

pub(super) fn check(spec: &GroupSpec) -> PresentationReport {
    let arity = spec.arity();
    let gens: Vec<Element> = (0..arity).map(|k| unit(arity, k)).collect();
    let (names, words) = relators(spec);

    let relators = words
        .into_iter()
        .map(|word| {
            let value = word.iter().fold(spec.identity(), |acc, &(g, e)| {
                let p = spec.pow(&gens[g], e).expect("unit vectors lie in every group");
                spec.mul_unchecked(&acc, &p)
            });
            RelatorCheck { relator: render(&names, &word), value, holds: value == spec.identity() }
        })
        .collect();
    PresentationReport { relators }
}

fn render(names: &[&str], word: &Word) -> String {
    word.iter()
        .map(|&(g, e)| match e {
            1 => names[g].to_string(),
            _ => format!("{}^{}", names[g], e),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn relators(spec: &GroupSpec) -> (Vec<&'static str>, Vec<Word>) {
    match spec {
        GroupSpec::Cyclic(g) => {
            let (m, n, a) = (g.m as i64, g.n as i64, g.a as i64);
            let (x, y) = (0, 1);
            (vec!["x", "y"], vec![vec![(x, m)], vec![(y, n)], vec![(x, -1), (y, 1), (x, 1), (y, -a)]])
        }
        GroupSpec::Square(g) => {
            let (m, n) = (g.m as i64, g.n as i64);
            let [[x, y], [z, t]] = g.sigma.map(|row| row.map(|v| v as i64));
            let (ga, gb, gc) = (0, 1, 2);
            (
                vec!["a", "b", "c"],
                vec![
                    vec![(ga, m)],
                    vec![(gb, n)],
                    vec![(gc, n)],
                    vec![(gb, 1), (gc, 1), (gb, -1), (gc, -1)],
                    vec![(ga, -1), (gb, 1), (ga, 1), (gc, -y), (gb, -x)],
                    vec![(ga, -1), (gc, 1), (ga, 1), (gc, -t), (gb, -z)],
                ],
            )
        }
        GroupSpec::Doubled(g) => {
            let b = &g.base;
            let (m, n, a) = (b.m as i64, b.n as i64, b.a as i64);
            let (r, s, t, u) = (0, 1, 2, 3);
            (
                vec!["r", "s", "t", "u"],
                vec![
                    vec![(r, m)],
                    vec![(s, n)],
                    vec![(r, -1), (s, 1), (r, 1), (s, -a)],
                    vec![(t, m)],
                    vec![(u, n)],
                    vec![(t, -1), (u, 1), (t, 1), (u, -a)],
                    vec![(r, -1), (t, 1), (r, 1), (t, -1)],
                    vec![(s, -1), (t, 1), (s, 1), (u, -1), (t, -1), (u, 1)],
                    vec![(r, -1), (u, 1), (r, 1), (u, -a)],
                    vec![(s, -1), (u, 1), (s, 1), (u, -1)],
                ],
            )
        }
    }
}
