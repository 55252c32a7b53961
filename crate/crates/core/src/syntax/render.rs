use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use super::DomainDescription;
use crate::lang::{Formula, IFormula, Literal, Outcome, Signature};

pub fn render_literal(sig: &Signature, lit: &Literal) -> String {
    sig.show_literal(lit)
}

/// Fully parenthesized, so the output reparses to the same tree.
pub fn render_formula(sig: &Signature, phi: &Formula) -> String {
    match phi {
        Formula::Lit(l) => render_literal(sig, l),
        Formula::Not(f) => alloc::format!("!({})", render_formula(sig, f)),
        Formula::And(a, b) => alloc::format!("({} & {})", render_formula(sig, a), render_formula(sig, b)),
        Formula::Or(a, b) => alloc::format!("({} | {})", render_formula(sig, a), render_formula(sig, b)),
        Formula::Implies(a, b) => {
            alloc::format!("({} -> {})", render_formula(sig, a), render_formula(sig, b))
        }
    }
}

pub fn render_iformula(sig: &Signature, phi: &IFormula) -> String {
    match phi {
        IFormula::Lit(l, i) => alloc::format!("[{}]@{i}", render_literal(sig, l)),
        IFormula::Not(f) => alloc::format!("!({})", render_iformula(sig, f)),
        IFormula::And(a, b) => alloc::format!("({} & {})", render_iformula(sig, a), render_iformula(sig, b)),
        IFormula::Or(a, b) => alloc::format!("({} | {})", render_iformula(sig, a), render_iformula(sig, b)),
        IFormula::Implies(a, b) => {
            alloc::format!("({} -> {})", render_iformula(sig, a), render_iformula(sig, b))
        }
    }
}

fn render_head(sig: &Signature, head: &[Outcome]) -> String {
    let items: Vec<String> = head
        .iter()
        .map(|o| {
            let lits: Vec<String> = o
                .effect
                .iter()
                .map(|(f, v)| alloc::format!("{}={}", sig.fluent_name(f), sig.values(f)[v.0]))
                .collect();
            alloc::format!("({{{}}}, {})", lits.join(", "), o.weight)
        })
        .collect();
    alloc::format!("{{{}}}", items.join(", "))
}

/// Renders a description in the `.pec` grammar. Implicit empty outcomes are
/// written out and weights appear as reduced fractions.
pub fn render(dd: &DomainDescription) -> String {
    let sig = dd.signature();
    let mut out = String::new();
    for f in sig.fluents() {
        let _ = writeln!(out, "fluent {} takes-values {{{}}}", sig.fluent_name(f), sig.values(f).join(", "));
    }
    for a in sig.actions() {
        let _ = writeln!(out, "action {}", sig.action_name(a));
    }
    let _ = writeln!(out, "maxinst {}", sig.maxinst());
    let _ = writeln!(out, "initially-one-of {}", render_head(sig, &dd.iprop().head));
    for c in dd.cprops() {
        let _ = writeln!(out, "{} causes-one-of {}", render_formula(sig, &c.body), render_head(sig, &c.head));
    }
    for p in dd.pprops() {
        let _ = writeln!(
            out,
            "{} performed-at {} with-prob {}",
            sig.action_name(p.action),
            p.instant,
            p.prob
        );
    }
    out
}
