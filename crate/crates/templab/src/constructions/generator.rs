use super::{cycle_edge, predicted_density, ConstructionResult, Family};
use crate::error::{Error, Result};
use crate::temporal::{Label, TemporalGraph};

struct Cycle {
    n: usize,
    g: TemporalGraph,
}

impl Cycle {
    fn new(n: usize) -> Result<Self> {
        let mut g = TemporalGraph::new(n);
        for i in 0..n {
            let (u, v) = cycle_edge(n, i);
            g.ensure_edge(u, v)?;
        }
        Ok(Cycle { n, g })
    }

    fn put(&mut self, i: usize, l: Label) {
        let (u, v) = cycle_edge(self.n, i);
        self.g.add_label(u, v, l).expect("cycle edge");
    }

    fn max_on(&self, i: usize) -> Label {
        let (u, v) = cycle_edge(self.n, i);
        self.g
            .labels(u, v)
            .and_then(|l| l.last().copied())
            .unwrap_or(0)
    }
}

/// Move the smallest label of `list` to `carry`, then drop the largest.
fn shrink(list: &mut Vec<Label>, carry: &mut Vec<Label>) {
    if !list.is_empty() {
        carry.push(list.remove(0));
    }
    list.pop();
}

/// Generator labelling of `C_n` for even `n`, start edge `{0, 1}`.
///
/// Rounds walk one edge clockwise (`e_c`) and one counter-clockwise (`e_cc`)
/// from the start edge, alternating between the odd list and the even list.
/// Each round first copies that list's carry onto both edges, then deals the
/// list out alternately starting at `e_c`. When the two walks meet on the
/// opposite edge it receives both the carry and the list, plus the largest
/// label there increased by 2.
pub fn generator_even(n: usize) -> Result<ConstructionResult> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::Param(format!(
            "generator_even needs an even n >= 2, got {n}"
        )));
    }
    let mut cyc = Cycle::new(n)?;
    if n == 2 {
        cyc.put(0, 1);
    } else {
        let mut lists: [Vec<Label>; 2] = [
            (1..n as Label).step_by(2).collect(),
            (2..n as Label).step_by(2).collect(),
        ];
        let mut carry: [Vec<Label>; 2] = [Vec::new(), Vec::new()];
        let (mut ec, mut ecc, mut turn) = (0usize, 0usize, 0usize);
        loop {
            for &l in &carry[turn] {
                cyc.put(ec, l);
                cyc.put(ecc, l);
            }
            for (i, &l) in lists[turn].iter().enumerate() {
                cyc.put(if i % 2 == 0 { ec } else { ecc }, l);
            }
            let (list, kept) = (&mut lists[turn], &mut carry[turn]);
            shrink(list, kept);
            ec = (ec + 1) % n;
            ecc = (ecc + n - 1) % n;
            turn ^= 1;
            if ec == ecc {
                for &l in carry[turn].iter().chain(&lists[turn]) {
                    cyc.put(ec, l);
                }
                let top = cyc.max_on(ec);
                cyc.put(ec, top + 2);
                break;
            }
        }
    }
    Ok(ConstructionResult {
        family: "cycles-even",
        params: vec![("n", n)],
        graph: cyc.g,
        predicted: predicted_density(Family::EvenCycle { n }),
        notes: Vec::new(),
    })
}

/// Generator labelling of `C_n` for odd `n`, start edge `{0, 1}`.
///
/// The start edge takes every odd label up to `n`, the first pair of edges
/// around it shares the even labels. Further pairs alternate between the odd
/// list (dealt from `e_cc`) and the even list (dealt from `e_c`), each time
/// dealing the shared carry followed by the list. The walk stops once the two
/// edges of a pair are incident.
pub fn generator_odd(n: usize) -> Result<ConstructionResult> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::Param(format!(
            "generator_odd needs an odd n >= 3, got {n}"
        )));
    }
    let mut cyc = Cycle::new(n)?;
    let mut odd: Vec<Label> = (1..=n as Label).step_by(2).collect();
    let mut even: Vec<Label> = (2..=n as Label).step_by(2).collect();
    let mut carry: Vec<Label> = Vec::new();
    for &l in &odd {
        cyc.put(0, l);
    }
    odd.pop();
    let (mut ec, mut ecc) = (1usize, n - 1);
    for (i, &l) in even.iter().enumerate() {
        cyc.put(if i % 2 == 0 { ec } else { ecc }, l);
    }
    even.pop();
    let mut use_odd = true;
    while (ec + 1) % n != ecc {
        ec += 1;
        ecc -= 1;
        let (list, first, second) = if use_odd {
            (&mut odd, ecc, ec)
        } else {
            (&mut even, ec, ecc)
        };
        for (i, &l) in carry.iter().chain(list.iter()).enumerate() {
            cyc.put(if i % 2 == 0 { first } else { second }, l);
        }
        if !list.is_empty() {
            carry.push(list.remove(0));
            carry.sort_unstable();
        }
        list.pop();
        use_odd = !use_odd;
    }
    Ok(ConstructionResult {
        family: "cycles-odd",
        params: vec![("n", n)],
        graph: cyc.g,
        predicted: predicted_density(Family::OddCycle { n }),
        notes: Vec::new(),
    })
}

pub fn generator_cycle(n: usize) -> Result<ConstructionResult> {
    if n % 2 == 0 {
        generator_even(n)
    } else {
        generator_odd(n)
    }
}
