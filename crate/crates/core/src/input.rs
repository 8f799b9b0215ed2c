//! Line-oriented description files for matroids and perspectives.
//!
//! ```text
//! elements: 5
//! order: 1 2 3 4 5                          # optional
//! matroid M circuits: {1,2,3} {3,4,5} {1,2,4,5}
//! matroid N bases: {2,4} {2,5} {3,4} {3,5} {4,5}
//! graph G edges: 1=a-b 2=b-c 3=c-a          # instead of a matroid stanza
//! identify: a=b                             # second matroid from the graph
//! ```
//!
//! `#` starts a comment. Elements are the integers `1..=n`; a document whose
//! element tokens are not all integers uses them as names, numbered by the
//! `order:` line if there is one and by first appearance otherwise. The first stanza is `M`, the second (or the identified graph)
//! is `M′`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graphic::Multigraph;
use crate::matroid::Matroid;
use crate::perspective::Perspective;
use crate::setcore::{GroundSet, Subset, MAX_ELEMENTS};

/// Display names for elements; `None` means plain numbers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Labels(Option<Vec<String>>);

impl Labels {
    pub fn numeric() -> Self {
        Labels(None)
    }

    pub fn named(names: Vec<String>) -> Self {
        Labels(Some(names))
    }

    pub fn is_numeric(&self) -> bool {
        self.0.is_none()
    }

    pub fn name(&self, e: usize) -> String {
        match &self.0 {
            Some(names) => names[e - 1].clone(),
            None => e.to_string(),
        }
    }

    /// `{a,b,c}` with elements in ascending label number.
    pub fn set(&self, s: Subset) -> String {
        let names: Vec<String> = s.iter().map(|e| self.name(e)).collect();
        format!("{{{}}}", names.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StanzaBody {
    Bases(Vec<Subset>),
    Circuits(Vec<Subset>),
    Graph(Multigraph),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stanza {
    pub name: String,
    pub body: StanzaBody,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputDocument {
    pub ground: GroundSet,
    pub labels: Labels,
    pub stanzas: Vec<Stanza>,
    pub identify: Vec<(String, String)>,
}

/// What a document describes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Single(Matroid),
    Pair(Perspective),
}

impl Target {
    /// The perspective, lifting a single matroid to `(M, M)`.
    pub fn into_perspective(self) -> Perspective {
        match self {
            Target::Single(m) => Perspective::identity(m),
            Target::Pair(p) => p,
        }
    }
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<Self> {
        Raw::parse(text)?.resolve()
    }

    pub fn is_pair(&self) -> bool {
        self.stanzas.len() == 2 || !self.identify.is_empty()
    }

    fn build_stanza(&self, stanza: &Stanza) -> Result<Matroid> {
        match &stanza.body {
            StanzaBody::Bases(b) => Matroid::from_bases(&self.ground, b.iter().copied()),
            StanzaBody::Circuits(c) => Matroid::from_circuits(&self.ground, c.iter().copied()),
            StanzaBody::Graph(g) => g.cycle_matroid(&self.ground),
        }
    }

    /// The matroids `M` and (if present) `M′`, each validated on its own.
    pub fn matroids(&self) -> Result<(Matroid, Option<Matroid>)> {
        let first = self.build_stanza(&self.stanzas[0])?;
        let second = if let Some(s) = self.stanzas.get(1) {
            Some(self.build_stanza(s)?)
        } else if !self.identify.is_empty() {
            let StanzaBody::Graph(g) = &self.stanzas[0].body else {
                unreachable!("checked at parse time")
            };
            Some(g.identify_pairs(&self.identify)?.cycle_matroid(&self.ground)?)
        } else {
            None
        };
        Ok((first, second))
    }

    pub fn build(&self) -> Result<Target> {
        match self.matroids()? {
            (m, None) => Ok(Target::Single(m)),
            (m, Some(q)) => Ok(Target::Pair(Perspective::new(m, q)?)),
        }
    }

    pub fn perspective(&self) -> Result<Perspective> {
        self.build().map(Target::into_perspective)
    }
}

impl fmt::Display for InputDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = &self.labels;
        writeln!(f, "elements: {}", self.ground.size())?;
        // named elements are numbered by the order line, so always write it
        if !self.ground.is_natural_order() || !l.is_numeric() {
            let names: Vec<String> = self.ground.order().iter().map(|&e| l.name(e)).collect();
            writeln!(f, "order: {}", names.join(" "))?;
        }
        for s in &self.stanzas {
            let family = |sets: &[Subset]| sets.iter().map(|&s| l.set(s)).collect::<Vec<_>>().join(" ");
            match &s.body {
                StanzaBody::Bases(b) => writeln!(f, "matroid {} bases: {}", s.name, family(b))?,
                StanzaBody::Circuits(c) => writeln!(f, "matroid {} circuits: {}", s.name, family(c))?,
                StanzaBody::Graph(g) => {
                    let edges: Vec<String> = g
                        .edges()
                        .iter()
                        .map(|e| format!("{}={}-{}", l.name(e.label), g.vertex_name(e.u), g.vertex_name(e.v)))
                        .collect();
                    writeln!(f, "graph {} edges: {}", s.name, edges.join(" "))?
                }
            }
        }
        if !self.identify.is_empty() {
            let pairs: Vec<String> = self.identify.iter().map(|(a, b)| format!("{a}={b}")).collect();
            writeln!(f, "identify: {}", pairs.join(" "))?;
        }
        Ok(())
    }
}

enum RawBody {
    Sets { circuits: bool, sets: Vec<Vec<String>> },
    Edges(Vec<(String, String, String)>),
}

struct RawStanza {
    line: usize,
    name: String,
    body: RawBody,
}

#[derive(Default)]
struct Raw {
    elements: Option<usize>,
    order: Option<(usize, Vec<String>)>,
    stanzas: Vec<RawStanza>,
    identify: Option<(usize, Vec<(String, String)>)>,
    /// Element tokens in order of appearance.
    tokens: Vec<String>,
}

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        message: message.into(),
    }
}

/// `{a,b} {c} {}` into token lists.
fn parse_sets(line: usize, text: &str) -> Result<Vec<Vec<String>>> {
    let mut sets = Vec::new();
    let mut rest = text.trim_start();
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('{') else {
            return Err(syntax(line, format!("expected '{{' at {rest:?}")));
        };
        let close = body.find('}').ok_or_else(|| syntax(line, "unterminated '{'"))?;
        let inner = &body[..close];
        if inner.contains('{') {
            return Err(syntax(line, "nested '{'"));
        }
        let members: Vec<String> = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|t| {
                    let t = t.trim();
                    if t.is_empty() || t.contains(char::is_whitespace) {
                        Err(syntax(line, format!("bad element in {{{inner}}}")))
                    } else {
                        Ok(t.to_string())
                    }
                })
                .collect::<Result<_>>()?
        };
        sets.push(members);
        rest = body[close + 1..].trim_start();
    }
    Ok(sets)
}

fn split_pair<'a>(line: usize, token: &'a str, sep: char, what: &str) -> Result<(&'a str, &'a str)> {
    match token.split_once(sep) {
        Some((a, b)) if !a.is_empty() && !b.is_empty() => Ok((a, b)),
        _ => Err(syntax(line, format!("malformed {what} {token:?}"))),
    }
}

impl Raw {
    fn parse(text: &str) -> Result<Raw> {
        let mut raw = Raw::default();
        for (i, full) in text.lines().enumerate() {
            let line = i + 1;
            let content = full.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (head, rest) = content
                .split_once(':')
                .ok_or_else(|| syntax(line, "expected '<keyword>: ...'"))?;
            let words: Vec<&str> = head.split_whitespace().collect();
            if raw.elements.is_none() && words != ["elements"] {
                return Err(syntax(line, "the first statement must be 'elements: <n>'"));
            }
            match words.as_slice() {
                ["elements"] => {
                    if raw.elements.is_some() {
                        return Err(Error::Semantic(format!("line {line}: duplicate 'elements'")));
                    }
                    let n: usize = rest
                        .trim()
                        .parse()
                        .map_err(|_| syntax(line, format!("bad element count {:?}", rest.trim())))?;
                    if n > MAX_ELEMENTS {
                        return Err(Error::TooManyElements(n));
                    }
                    raw.elements = Some(n);
                }
                ["order"] => {
                    if raw.order.is_some() {
                        return Err(Error::Semantic(format!("line {line}: duplicate 'order'")));
                    }
                    let tokens: Vec<String> = rest.split_whitespace().map(String::from).collect();
                    raw.tokens.extend(tokens.iter().cloned());
                    raw.order = Some((line, tokens));
                }
                ["identify"] => {
                    if raw.identify.is_some() {
                        return Err(Error::Semantic(format!("line {line}: duplicate 'identify'")));
                    }
                    let pairs = rest
                        .split_whitespace()
                        .map(|t| {
                            split_pair(line, t, '=', "identification").map(|(a, b)| (a.to_string(), b.to_string()))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    if pairs.is_empty() {
                        return Err(syntax(line, "'identify' needs at least one pair"));
                    }
                    raw.identify = Some((line, pairs));
                }
                ["matroid", name, kind @ ("circuits" | "bases")] => {
                    let sets = parse_sets(line, rest)?;
                    raw.tokens.extend(sets.iter().flatten().cloned());
                    raw.stanzas.push(RawStanza {
                        line,
                        name: name.to_string(),
                        body: RawBody::Sets {
                            circuits: *kind == "circuits",
                            sets,
                        },
                    });
                }
                ["graph", name, "edges"] => {
                    let mut edges = Vec::new();
                    for token in rest.split_whitespace() {
                        let (label, ends) = split_pair(line, token, '=', "edge")?;
                        let (u, v) = split_pair(line, ends, '-', "edge")?;
                        raw.tokens.push(label.to_string());
                        edges.push((label.to_string(), u.to_string(), v.to_string()));
                    }
                    raw.stanzas.push(RawStanza {
                        line,
                        name: name.to_string(),
                        body: RawBody::Edges(edges),
                    });
                }
                _ => return Err(syntax(line, format!("unknown statement {head:?}"))),
            }
        }
        Ok(raw)
    }

    fn resolve(self) -> Result<InputDocument> {
        let n = self.elements.ok_or_else(|| syntax(1, "missing 'elements: <n>'"))?;
        match self.stanzas.len() {
            0 => return Err(Error::Semantic("no matroid or graph stanza".into())),
            1 | 2 => {}
            k => {
                return Err(Error::Semantic(format!(
                    "line {}: at most two stanzas allowed, found {k}",
                    self.stanzas[2].line
                )))
            }
        }
        if self.stanzas.len() == 2 && self.stanzas[0].name == self.stanzas[1].name {
            return Err(Error::Semantic(format!(
                "line {}: duplicate stanza {}",
                self.stanzas[1].line, self.stanzas[1].name
            )));
        }
        if let Some((line, _)) = &self.identify {
            if self.stanzas.len() != 1 || !matches!(self.stanzas[0].body, RawBody::Edges(_)) {
                return Err(Error::Semantic(format!(
                    "line {line}: 'identify' needs exactly one graph stanza and no second matroid"
                )));
            }
        }

        let numeric = self.tokens.iter().all(|t| t.parse::<usize>().is_ok());
        let (labels, index) = if numeric {
            (Labels::numeric(), None)
        } else {
            let mut index: HashMap<String, usize> = HashMap::new();
            let mut names = Vec::new();
            // an order line fixes the numbering; otherwise first appearance does
            let source = match &self.order {
                Some((_, order)) => order,
                None => &self.tokens,
            };
            for t in source {
                if !index.contains_key(t) {
                    names.push(t.clone());
                    index.insert(t.clone(), names.len());
                }
            }
            if let Some(t) = self.tokens.iter().find(|t| !index.contains_key(*t)) {
                return Err(Error::Semantic(format!("element {t} is missing from the order")));
            }
            if names.len() != n {
                return Err(Error::Semantic(format!(
                    "elements: {n} but {} distinct element names are used",
                    names.len()
                )));
            }
            (Labels::named(names), Some(index))
        };
        let element = |t: &str| -> Result<usize> {
            match &index {
                Some(index) => Ok(index[t]),
                None => {
                    let e: usize = t.parse().expect("numeric");
                    if e == 0 || e > n {
                        Err(Error::Semantic(format!("element {e} is outside 1..={n}")))
                    } else {
                        Ok(e)
                    }
                }
            }
        };
        let to_subset = |tokens: &Vec<String>| -> Result<Subset> {
            let elements = tokens.iter().map(|t| element(t)).collect::<Result<Vec<_>>>()?;
            Subset::from_elements(elements, n)
        };

        let ground = match &self.order {
            None => GroundSet::new(n)?,
            Some((line, tokens)) => {
                let order = tokens.iter().map(|t| element(t)).collect::<Result<Vec<_>>>()?;
                GroundSet::with_order(order).map_err(|e| Error::Semantic(format!("line {line}: {e}")))?
            }
        };

        let mut stanzas = Vec::new();
        for s in &self.stanzas {
            let body = match &s.body {
                RawBody::Sets { circuits, sets } => {
                    let family = sets.iter().map(to_subset).collect::<Result<Vec<_>>>()?;
                    if *circuits {
                        StanzaBody::Circuits(family)
                    } else {
                        StanzaBody::Bases(family)
                    }
                }
                RawBody::Edges(edges) => {
                    let mut g = Multigraph::new();
                    for (label, u, v) in edges {
                        g.add_edge(element(label)?, u, v);
                    }
                    StanzaBody::Graph(g)
                }
            };
            stanzas.push(Stanza {
                name: s.name.clone(),
                body,
            });
        }

        Ok(InputDocument {
            ground,
            labels,
            stanzas,
            identify: self.identify.map(|(_, p)| p).unwrap_or_default(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const FIXTURE: &str = "\
# two triangles sharing edge 3, and the same graph with edge 1 contracted to a loop
elements: 5
matroid M circuits: {1,2,3} {3,4,5} {1,2,4,5}
matroid N circuits: {1} {2,3} {3,4,5} {2,4,5}
";

    #[test]
    fn parses_fixture_as_pair() {
        let doc = InputDocument::parse(FIXTURE).unwrap();
        assert!(doc.is_pair());
        let p = doc.perspective().unwrap();
        assert_eq!(p.matroid().rank(), 3);
        assert_eq!(p.quotient().rank(), 2);
    }

    #[test]
    fn graph_with_identification() {
        let text = "elements: 5\ngraph G edges: 1=a-b 2=b-c 3=c-a 4=c-d 5=d-a\nidentify: a=b\n";
        let doc = InputDocument::parse(text).unwrap();
        let from_graph = doc.perspective().unwrap();
        let from_circuits = InputDocument::parse(FIXTURE).unwrap().perspective().unwrap();
        assert_eq!(from_graph, from_circuits);
    }

    #[test]
    fn single_matroid_by_bases() {
        let doc = InputDocument::parse("elements: 2\nmatroid M bases: {1} {2}\n").unwrap();
        assert!(!doc.is_pair());
        let Target::Single(m) = doc.build().unwrap() else {
            panic!()
        };
        assert_eq!(m.circuits(), &[Subset::of(&[1, 2])]);
    }

    #[test]
    fn empty_forms() {
        let free = InputDocument::parse("elements: 3\nmatroid M circuits:\n").unwrap();
        let Target::Single(m) = free.build().unwrap() else {
            panic!()
        };
        assert_eq!(m, Matroid::free(&GroundSet::new(3).unwrap()));
        let zero = InputDocument::parse("elements: 3\nmatroid M bases: {}\n").unwrap();
        let Target::Single(m) = zero.build().unwrap() else {
            panic!()
        };
        assert_eq!(m, Matroid::rank_zero(&GroundSet::new(3).unwrap()));
    }

    #[test]
    fn whitespace_and_comments() {
        let text = "  elements :  2  # two\n\n matroid   M bases:{ 1 }   {2}# done\n";
        let doc = InputDocument::parse(text).unwrap();
        assert!(doc.build().is_ok());
    }

    #[test]
    fn order_line() {
        let doc = InputDocument::parse("elements: 3\norder: 3 1 2\nmatroid M circuits: {1,2}\n").unwrap();
        assert_eq!(doc.ground.order(), &[3, 1, 2]);
        assert!(matches!(
            InputDocument::parse("elements: 3\norder: 3 1\nmatroid M circuits:\n"),
            Err(Error::Semantic(_))
        ));
    }

    #[test]
    fn symbolic_labels() {
        let text = "elements: 3\nmatroid M circuits: {a,b} {c}\n";
        let doc = InputDocument::parse(text).unwrap();
        assert_eq!(doc.labels.name(1), "a");
        assert_eq!(doc.labels.set(Subset::of(&[1, 3])), "{a,c}");
        let ordered = InputDocument::parse("elements: 3\nmatroid M circuits: {a,b}\norder: c b a\n").unwrap();
        assert_eq!(ordered.labels.name(1), "c");
        assert_eq!(ordered.ground.order(), &[1, 2, 3]);
        assert!(InputDocument::parse("elements: 2\norder: a b\nmatroid M circuits: {a,q}\n").is_err());
        assert!(InputDocument::parse("elements: 3\nmatroid M circuits: {a,b}\n").is_err());
    }

    #[test]
    fn element_out_of_range() {
        let err = InputDocument::parse("elements: 5\nmatroid M circuits: {1,9}\n").unwrap_err();
        assert_eq!(err, Error::Semantic("element 9 is outside 1..=5".into()));
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let cases = [
            ("elements: 2\nmatroid M circuits: {1,2\n", 2),
            ("elements: 2\nmatroid M circuits: 1,2\n", 2),
            ("elements: 2\n\nfrobnicate: 3\n", 3),
            ("matroid M circuits: {1}\n", 1),
            ("elements: two\n", 1),
            ("elements: 2\ngraph G edges: 1=a\n", 2),
            ("elements: 2\nmatroid M bases: {1,,2}\n", 2),
        ];
        for (text, line) in cases {
            match InputDocument::parse(text) {
                Err(Error::Syntax { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn semantic_errors() {
        let cases = [
            "elements: 2\n",
            "elements: 2\nmatroid M bases: {1}\nmatroid M bases: {2}\n",
            "elements: 1\nmatroid A bases: {1}\nmatroid B bases: {1}\nmatroid C bases: {1}\n",
            "elements: 2\nmatroid M bases: {1}\nidentify: a=b\n",
            "elements: 2\nelements: 2\n",
        ];
        for text in cases {
            assert!(
                matches!(InputDocument::parse(text), Err(Error::Semantic(_))),
                "{text:?}"
            );
        }
        assert_eq!(InputDocument::parse("elements: 31\n"), Err(Error::TooManyElements(31)));
    }

    #[test]
    fn invalid_perspective_is_reported() {
        let text = "elements: 2\nmatroid M bases: {1} {2}\nmatroid N circuits:\n";
        let err = InputDocument::parse(text).unwrap().build().unwrap_err();
        assert_eq!(
            err,
            Error::NotPerspective {
                circuit: Subset::of(&[1, 2])
            }
        );
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn display_round_trips_fixture() {
        let doc = InputDocument::parse(FIXTURE).unwrap();
        let again = InputDocument::parse(&doc.to_string()).unwrap();
        assert_eq!(again, doc);
    }
}
