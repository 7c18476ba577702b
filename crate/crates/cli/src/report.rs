//! Human and `key=value` renderings of results.

use std::fmt::Write as _;
use std::time::Duration;

use gotzmann_core::{GotzmannReport, StarTheoremSummary};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Human,
    /// One `key=value` pair per line, byte-stable for identical input.
    Machine,
}

/// An ordered list of fields; each has a machine key and a human label.
#[derive(Clone, Debug, Default)]
pub struct Report {
    fields: Vec<(String, String, String)>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn field(mut self, key: &str, label: &str, value: impl ToString) -> Self {
        self.fields
            .push((key.to_owned(), label.to_owned(), value.to_string()));
        self
    }

    /// A field that only appears in human output.
    pub fn note(mut self, label: &str, value: impl ToString) -> Self {
        self.fields
            .push((String::new(), label.to_owned(), value.to_string()));
        self
    }

    pub fn render(&self, mode: Mode) -> String {
        let mut out = String::new();
        for (key, label, value) in &self.fields {
            match mode {
                Mode::Human => writeln!(out, "{label}: {value}"),
                Mode::Machine if key.is_empty() => Ok(()),
                Mode::Machine => writeln!(out, "{key}={value}"),
            }
            .expect("writing to a String");
        }
        out
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn gotzmann(r: &GotzmannReport) -> Report {
    let d = r.degree;
    let mut rep = Report::new()
        .field("num_vars", "variables", r.num_vars)
        .field("degree", "generation degree", d)
        .field("h_quotient_d", &format!("H(P/I,{d})"), &r.h_quotient_d)
        .field(
            "h_quotient_d1",
            &format!("H(P/I,{})", d + 1),
            &r.h_quotient_d1,
        )
        .field(
            "macaulay_bound",
            &format!("Macaulay bound H(P/I,{d})^<{d}>"),
            &r.macaulay_bound,
        )
        .field("is_gotzmann", "is_gotzmann", r.is_gotzmann);
    match &r.kruskal_katona {
        Some(kk) => {
            rep = rep
                .field("f_prev", &format!("f_{}", d - 1), &kk.f_prev)
                .field("f_d", &format!("f_{d}"), &kk.f_d)
                .field("kk_bound", &format!("f_{}^({d})", d - 1), &kk.bound)
                .field("square_free_check", "square_free_check", kk.holds());
        }
        None => rep = rep.field("square_free_check", "square_free_check", "none"),
    }
    rep
}

pub fn summary(s: &StarTheoremSummary, elapsed: Option<Duration>) -> Report {
    let (lo, hi) = s.vertex_range.unwrap_or((0, 0));
    let mut rep = Report::new()
        .field("min_vertices", "min vertices", lo)
        .field("max_vertices", "max vertices", hi)
        .field("graphs_checked", "graphs checked", s.graphs_checked)
        .field("stars", "stars", s.stars)
        .field("gotzmann", "Gotzmann edge ideals", s.gotzmann)
        .field("mismatches", "mismatches", s.mismatches)
        .note("theorem holds", yes_no(s.is_clean()));
    if let Some(t) = elapsed {
        rep = rep.note("wall time", format!("{:.3}s", t.as_secs_f64()));
    }
    rep
}
