//! The line-oriented ring-definition format.
//!
//! ```text
//! ring <name>
//! order <n>
//! unity <index|none>
//! add
//! <n lines of n indices>
//! mul
//! <n lines of n indices>
//! group <m>
//! cayley
//! <m lines of m indices>
//! grading
//! g0: <indices of component 0, ascending>
//! ...
//! end
//! ```
//!
//! `#` starts a comment and blank lines are ignored. Index 0 is the additive
//! zero, group index 0 the identity.

use std::fmt::Write as _;

use graded_core::{AlgebraError, ElementSet, FiniteGroup, FiniteRing, GradedRing, Limits};

use crate::error::CliError;

/// A parsed, fully validated ring file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingFile {
    pub name: String,
    pub ring: GradedRing,
}

struct Lines<'a> {
    inner: std::iter::Peekable<Box<dyn Iterator<Item = (usize, &'a str)> + 'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let it: Box<dyn Iterator<Item = (usize, &'a str)>> = Box::new(
            text.lines()
                .enumerate()
                .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
                .filter(|(_, l)| !l.is_empty()),
        );
        Self {
            inner: it.peekable(),
            last: 0,
        }
    }

    fn next(&mut self, expecting: &str) -> Result<(usize, &'a str), CliError> {
        match self.inner.next() {
            Some((n, l)) => {
                self.last = n;
                Ok((n, l))
            }
            None => Err(CliError::Parse {
                line: self.last + 1,
                reason: format!("unexpected end of file, expected {expecting}"),
            }),
        }
    }

    /// `<keyword> <value>` on one line.
    fn keyword_value(&mut self, keyword: &str) -> Result<(usize, &'a str), CliError> {
        let (n, line) = self.next(&format!("`{keyword}`"))?;
        match line.split_once(char::is_whitespace) {
            Some((k, v)) if k == keyword && !v.trim().is_empty() => Ok((n, v.trim())),
            _ => Err(parse_err(
                n,
                format!("expected `{keyword} <value>`, found `{line}`"),
            )),
        }
    }

    fn keyword(&mut self, keyword: &str) -> Result<(), CliError> {
        let (n, line) = self.next(&format!("`{keyword}`"))?;
        if line == keyword {
            Ok(())
        } else {
            Err(parse_err(
                n,
                format!("expected `{keyword}`, found `{line}`"),
            ))
        }
    }

    fn table(&mut self, rows: usize, what: &str) -> Result<Vec<Vec<usize>>, CliError> {
        let mut out = Vec::with_capacity(rows);
        for r in 0..rows {
            let (n, line) = self.next(&format!("row {r} of the {what} table"))?;
            let row = indices(n, line)?;
            if row.len() != rows {
                return Err(parse_err(
                    n,
                    format!(
                        "{what} table row {r} has {} entries, expected {rows}",
                        row.len()
                    ),
                ));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= rows) {
                return Err(parse_err(
                    n,
                    format!("{what} table entry {bad} is out of range [0, {rows})"),
                ));
            }
            out.push(row);
        }
        Ok(out)
    }
}

fn parse_err(line: usize, reason: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        reason: reason.into(),
    }
}

fn indices(line_no: usize, line: &str) -> Result<Vec<usize>, CliError> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| parse_err(line_no, format!("`{t}` is not an index")))
        })
        .collect()
}

fn count(line_no: usize, v: &str, what: &str) -> Result<usize, CliError> {
    match v.parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(parse_err(
            line_no,
            format!("{what} must be a positive integer, found `{v}`"),
        )),
    }
}

fn invalid(context: &'static str, source: AlgebraError) -> CliError {
    match source {
        AlgebraError::CapExceeded { .. } => CliError::Algebra(source),
        source => CliError::Invalid { context, source },
    }
}

/// Parses and validates a ring file. Orders above `limits.max_order` are
/// refused before any table is read.
pub fn parse_ring_file(text: &str, limits: &Limits) -> Result<RingFile, CliError> {
    let mut lines = Lines::new(text);
    let (_, name) = lines.keyword_value("ring")?;
    if name.split_whitespace().count() != 1 {
        return Err(parse_err(lines.last, "ring name must be a single word"));
    }
    let (n_line, order) = lines.keyword_value("order")?;
    let order = count(n_line, order, "order")?;
    if order > limits.max_order {
        return Err(CliError::Algebra(AlgebraError::CapExceeded {
            order,
            cap: limits.max_order,
        }));
    }
    let (u_line, unity) = lines.keyword_value("unity")?;
    let unity = match unity {
        "none" => None,
        v => match v.parse::<usize>() {
            Ok(u) if u < order => Some(u),
            _ => {
                return Err(parse_err(
                    u_line,
                    format!("unity must be `none` or an index below {order}"),
                ))
            }
        },
    };
    lines.keyword("add")?;
    let add = lines.table(order, "add")?;
    lines.keyword("mul")?;
    let mul = lines.table(order, "mul")?;
    let (g_line, m) = lines.keyword_value("group")?;
    let m = count(g_line, m, "group order")?;
    lines.keyword("cayley")?;
    let cayley = lines.table(m, "cayley")?;
    lines.keyword("grading")?;
    let mut components = Vec::with_capacity(m);
    for k in 0..m {
        let (n, line) = lines.next(&format!("component g{k}"))?;
        let label = format!("g{k}:");
        let rest = line
            .strip_prefix(&label)
            .ok_or_else(|| parse_err(n, format!("expected `{label}`, found `{line}`")))?;
        let items = indices(n, rest)?;
        if items.windows(2).any(|w| w[0] >= w[1]) {
            return Err(parse_err(
                n,
                format!("component g{k} is not strictly ascending"),
            ));
        }
        if let Some(&bad) = items.iter().find(|&&v| v >= order) {
            return Err(parse_err(
                n,
                format!("element {bad} is out of range [0, {order})"),
            ));
        }
        components.push(ElementSet::from_indices(order, items));
    }
    lines.keyword("end")?;
    if let Some((n, line)) = lines.inner.next() {
        return Err(parse_err(
            n,
            format!("unexpected content after `end`: `{line}`"),
        ));
    }

    let ring = FiniteRing::with_cap(&add, &mul, unity, limits.max_order)
        .map_err(|e| invalid("ring tables", e))?;
    let group = FiniteGroup::new(&cayley).map_err(|e| invalid("group table", e))?;
    let ring = GradedRing::new(ring, group, components).map_err(|e| invalid("grading", e))?;
    Ok(RingFile {
        name: name.into(),
        ring,
    })
}

fn push_table(out: &mut String, rows: impl Iterator<Item = Vec<usize>>) {
    for row in rows {
        let line: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
}

/// Canonical text of a ring file. `parse_ring_file` inverts it exactly.
pub fn emit_ring_file(name: &str, gr: &GradedRing) -> String {
    let r = gr.ring();
    let mut out = String::new();
    let _ = writeln!(out, "ring {name}");
    let _ = writeln!(out, "order {}", r.order());
    match r.unity() {
        Some(u) => {
            let _ = writeln!(out, "unity {u}");
        }
        None => out.push_str("unity none\n"),
    }
    out.push_str("add\n");
    push_table(&mut out, r.add_rows().into_iter());
    out.push_str("mul\n");
    push_table(&mut out, r.mul_rows().into_iter());
    let _ = writeln!(out, "group {}", gr.group().order());
    out.push_str("cayley\n");
    push_table(&mut out, gr.group().rows().into_iter());
    out.push_str("grading\n");
    for (k, comp) in gr.components().iter().enumerate() {
        let _ = write!(out, "g{k}:");
        for x in comp {
            let _ = write!(out, " {x}");
        }
        out.push('\n');
    }
    out.push_str("end\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use graded_core::catalog;

    fn corpus_texts() -> Vec<String> {
        catalog::default_corpus()
            .into_iter()
            .filter(|(_, g)| g.order() <= 32)
            .map(|(name, g)| emit_ring_file(&name, &g))
            .collect()
    }

    proptest::proptest! {
        #[test]
        fn comments_blank_lines_and_spacing_do_not_matter(
            which in 0usize..64,
            edits in proptest::collection::vec((0usize..4, proptest::bool::ANY), 0..64),
        ) {
            let texts = corpus_texts();
            let text = &texts[which % texts.len()];
            let canonical = parse_ring_file(text, &Limits::default()).unwrap();
            let mut noisy = String::new();
            for (i, line) in text.lines().enumerate() {
                let (kind, flag) = edits.get(i).copied().unwrap_or((0, false));
                match kind {
                    1 => noisy.push('\n'),
                    2 => noisy.push_str("  # note\n"),
                    _ => {}
                }
                let spaced = if kind == 3 { line.replace(' ', "   ") } else { line.to_string() };
                noisy.push_str(&spaced);
                if flag {
                    noisy.push_str(" # trailing");
                }
                noisy.push('\n');
            }
            let parsed = parse_ring_file(&noisy, &Limits::default()).unwrap();
            proptest::prop_assert_eq!(&parsed, &canonical);
            proptest::prop_assert_eq!(emit_ring_file(&parsed.name, &parsed.ring), text.clone());
        }
    }

    #[test]
    fn example2_text() {
        let text = emit_ring_file("example2", &catalog::example2());
        let expected = "\
ring example2
order 4
unity none
add
0 1 2 3
1 0 3 2
2 3 0 1
3 2 1 0
mul
0 0 0 0
0 1 1 0
0 2 2 0
0 3 3 0
group 3
cayley
0 1 2
1 2 0
2 0 1
grading
g0: 0 1
g1: 0 3
g2: 0
end
";
        assert_eq!(text, expected);
        let parsed = parse_ring_file(&text, &Limits::default()).unwrap();
        assert_eq!(parsed.name, "example2");
        assert_eq!(parsed.ring, catalog::example2());
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = emit_ring_file("example2", &catalog::example2())
            .replace("add\n", "# tables follow\n\nadd   # addition\n");
        assert!(parse_ring_file(&text, &Limits::default()).is_ok());
    }

    fn line_of(err: CliError) -> usize {
        match err {
            CliError::Parse { line, .. } => line,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn non_square_add_table() {
        let text = emit_ring_file("example2", &catalog::example2()).replace("1 0 3 2\n", "1 0 3\n");
        let err = parse_ring_file(&text, &Limits::default()).unwrap_err();
        assert_eq!(line_of(err), 6);
    }

    #[test]
    fn truncated_file() {
        let text = "ring r\norder 2\nunity none\nadd\n0 1\n";
        let err = parse_ring_file(text, &Limits::default()).unwrap_err();
        assert_eq!(line_of(err), 6);
    }

    #[test]
    fn unordered_component() {
        let text = emit_ring_file("example2", &catalog::example2()).replace("g0: 0 1", "g0: 1 0");
        let err = parse_ring_file(&text, &Limits::default()).unwrap_err();
        assert_eq!(line_of(err), 20);
    }

    #[test]
    fn axiom_failures_carry_context() {
        let text = emit_ring_file("example2", &catalog::example2()).replace("g1: 0 3", "g1: 0 2");
        match parse_ring_file(&text, &Limits::default()).unwrap_err() {
            CliError::Invalid { context, .. } => assert_eq!(context, "grading"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn order_cap() {
        let text = emit_ring_file("example2", &catalog::example2());
        let err = parse_ring_file(&text, &Limits::with_max_order(3)).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn quotient_of_example2_by_j_by_hand() {
        let text = "\
ring example2-mod-j
order 2
unity none
add
0 1
1 0
mul
0 0
0 1
group 3
cayley
0 1 2
1 2 0
2 0 1
grading
g0: 0 1
g1: 0
g2: 0
end
";
        let parsed = parse_ring_file(text, &Limits::default()).unwrap();
        let report =
            graded_core::primality::classify_all(&parsed.ring, &Limits::default()).unwrap();
        assert_eq!(report.entries.len(), 1);
        assert!(report.entries[0].almost_prime.value);
    }
}
