use super::{predicted_density, ConstructionResult, Family};
use crate::error::{Error, Result};
use crate::temporal::{is_label_necessary, Contact, Label, TemporalGraph, Vertex};

/// Vertex numbering shared by both ad-hoc variants; `base` is the id of `u_1` minus one.
struct Ids {
    k: usize,
    base: usize,
}

impl Ids {
    fn u(&self, i: usize) -> Vertex {
        self.base + i
    }
    fn v(&self, i: usize) -> Vertex {
        self.base + self.k + i
    }
    fn w(&self, i: usize) -> Vertex {
        self.base + 2 * self.k + i
    }
}

fn check_k(k: usize) -> Result<()> {
    if (2..=40).contains(&k) {
        Ok(())
    } else {
        Err(Error::Param(format!("k must be in 2..=40, got {k}")))
    }
}

/// Ad-hoc construction: `a = 0`, `b = 1`, `u_i = 1 + i`, `v_i = 1 + k + i`,
/// `w_i = 1 + 2k + i`.
///
/// Edge `{a, b}` is built with label 1 plus `ik²` for `i = 1..=k`; label 1 is
/// removed again when the verifier finds it redundant, which is recorded in
/// `notes`.
pub fn adhoc(k: usize) -> Result<ConstructionResult> {
    check_k(k)?;
    let (a, b) = (0, 1);
    let id = Ids { k, base: 1 };
    let kk = (k * k) as Label;
    let k4 = kk * kk;
    let kl = k as Label;
    let mut g = TemporalGraph::new(3 * k + 1);
    g.add_label(a, b, 1)?;
    for i in 1..=k {
        let il = i as Label;
        g.add_label(id.u(i), a, il * kk - 1)?;
        g.add_label(a, b, il * kk)?;
        g.add_label(b, id.v(i), il * kk + 1)?;
    }
    for i in 1..k {
        let il = i as Label;
        g.add_label(id.v(i), id.w(i), k4)?;
        g.add_label(id.u(i), id.u(i + 1), k4 + kl - il)?;
        g.add_label(id.v(i), id.v(i + 1), kl - il)?;
    }
    for i in 2..=k {
        for j in 1..i {
            g.add_label(id.u(i), id.w(j), i as Label * kk - 1 - j as Label)?;
        }
    }
    let mut notes = Vec::new();
    let one = Contact::new(a, b, 1);
    if !is_label_necessary(&g, one)? {
        g.remove_label(a, b, 1)?;
        notes.push("label 1 on {a, b} is redundant and was dropped".to_string());
    }
    Ok(ConstructionResult {
        family: "adhoc",
        params: vec![("k", k)],
        graph: g,
        predicted: predicted_density(Family::Adhoc { k }),
        notes,
    })
}

/// Happy variant: `b` split into `b_1 = 1`, `b_2 = 2`; `u_i = 2 + i`,
/// `v_i = 2 + k + i`, `w_i = 2 + 2k + i`.
///
/// Every label of the ad-hoc construction is doubled so the intermediate
/// steps `ik² + ε` become `2ik² + 1`. The journey that used label `ik²` on
/// `{a, b}` now runs `a -> v_{i+1} -> b(i)`, where `b(i)` alternates between
/// `b_1` and `b_2` so that `v_k` hangs off `b_1`.
pub fn happy_adhoc(k: usize) -> Result<ConstructionResult> {
    check_k(k)?;
    let (a, b1, b2) = (0, 1, 2);
    let id = Ids { k, base: 2 };
    let side = |i: usize| if (k - i) % 2 == 0 { b1 } else { b2 };
    let kk = (k * k) as Label;
    let k4 = kk * kk;
    let kl = k as Label;
    let mut g = TemporalGraph::new(3 * k + 2);
    for i in 1..=k {
        let il = i as Label;
        g.add_label(id.u(i), a, 2 * (il * kk - 1))?;
        g.add_label(side(i), id.v(i), 2 * (il * kk + 1))?;
    }
    for i in 1..k {
        let il = i as Label;
        g.add_label(a, id.v(i + 1), 2 * il * kk)?;
        g.add_label(id.v(i + 1), side(i), 2 * il * kk + 1)?;
    }
    g.add_label(a, b1, 2 * kk * kl)?;
    g.add_label(b1, b2, 1)?;
    g.add_label(b2, id.u(k), 2 * k4)?;
    for i in 1..k {
        let il = i as Label;
        g.add_label(id.v(i), id.w(i), 2 * k4)?;
        g.add_label(id.u(i), id.u(i + 1), 2 * (k4 + kl - il))?;
        g.add_label(id.v(i), id.v(i + 1), 2 * (kl - il))?;
    }
    for i in 2..=k {
        for j in 1..i {
            g.add_label(id.u(i), id.w(j), 2 * (i as Label * kk - 1 - j as Label))?;
        }
    }
    Ok(ConstructionResult {
        family: "happy-adhoc",
        params: vec![("k", k)],
        graph: g,
        predicted: predicted_density(Family::HappyAdhoc { k }),
        notes: Vec::new(),
    })
}
