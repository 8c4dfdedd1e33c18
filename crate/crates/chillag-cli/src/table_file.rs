//! Character-table file format: a small header followed by one line per
//! row of comma-separated cyclotomic literals.
//!
//! ```text
//! #table psl2_16_mod2
//! order 4080
//! kind brauer
//! prime 2
//! classes 16
//! class_orders 1,3,5,5,15,...
//! 1,1,1,...
//! ...
//! ```
//!
//! Lines starting with `#` other than the leading `#table` line are
//! comments.

use std::fmt;

use chillag_core::cyclo::Cyclotomic;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableFileError {
    Parse { line: usize, col: usize, msg: String },
    ShapeMismatch(String),
}

impl fmt::Display for TableFileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableFileError::Parse { line, col, msg } => {
                write!(f, "parse error at line {line}, column {col}: {msg}")
            }
            TableFileError::ShapeMismatch(msg) => write!(f, "shape mismatch: {msg}"),
        }
    }
}

impl std::error::Error for TableFileError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Ordinary,
    Brauer,
    Pim,
    Pipartial,
}

impl TableKind {
    pub fn as_str(self) -> &'static str {
        match self {
            TableKind::Ordinary => "ordinary",
            TableKind::Brauer => "brauer",
            TableKind::Pim => "pim",
            TableKind::Pipartial => "pipartial",
        }
    }
}

#[derive(Clone, Debug)]
pub struct TableFile {
    pub name: String,
    pub group_order: u64,
    pub kind: TableKind,
    /// `prime p` or `pi p1,p2,...` from the header.
    pub prime_or_pi: Vec<u64>,
    pub class_orders: Vec<u64>,
    pub rows: Vec<Vec<Cyclotomic>>,
}

fn err(line: usize, col: usize, msg: impl Into<String>) -> TableFileError {
    TableFileError::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

/// Splits a row line at commas outside parentheses; yields (1-based
/// column, token) pairs.
fn split_row(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in line.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push((start + 1, &line[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((start + 1, &line[start..]));
    out
}

pub fn parse_table_file(text: &str) -> Result<TableFile, TableFileError> {
    let mut name = None;
    let mut order = None;
    let mut kind = None;
    let mut prime_or_pi: Option<Vec<u64>> = None;
    let mut classes: Option<usize> = None;
    let mut class_orders: Option<Vec<u64>> = None;
    let mut rows: Vec<Vec<Cyclotomic>> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("#table") {
            if name.is_some() {
                return Err(err(lineno, 1, "duplicate #table line"));
            }
            let n = rest.trim();
            if n.is_empty() {
                return Err(err(lineno, 7, "missing table name"));
            }
            name = Some(n.to_string());
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        let mut split = line.splitn(2, char::is_whitespace);
        let key = split.next().unwrap();
        let rest = split.next().unwrap_or("").trim();
        match key {
            "order" => {
                order = Some(
                    rest.parse::<u64>()
                        .map_err(|_| err(lineno, 7, format!("bad order: {rest}")))?,
                );
            }
            "kind" => {
                kind = Some(match rest {
                    "ordinary" => TableKind::Ordinary,
                    "brauer" => TableKind::Brauer,
                    "pim" => TableKind::Pim,
                    "pipartial" => TableKind::Pipartial,
                    other => return Err(err(lineno, 6, format!("unknown kind: {other}"))),
                });
            }
            "prime" => {
                let p = rest
                    .parse::<u64>()
                    .map_err(|_| err(lineno, 7, format!("bad prime: {rest}")))?;
                prime_or_pi = Some(vec![p]);
            }
            "pi" => {
                let ps: Result<Vec<u64>, _> =
                    rest.split(',').map(|t| t.trim().parse::<u64>()).collect();
                prime_or_pi =
                    Some(ps.map_err(|_| err(lineno, 4, format!("bad pi list: {rest}")))?);
            }
            "classes" => {
                classes = Some(
                    rest.parse::<usize>()
                        .map_err(|_| err(lineno, 9, format!("bad class count: {rest}")))?,
                );
            }
            "class_orders" => {
                let os: Result<Vec<u64>, _> =
                    rest.split(',').map(|t| t.trim().parse::<u64>()).collect();
                class_orders =
                    Some(os.map_err(|_| err(lineno, 14, format!("bad class orders: {rest}")))?);
            }
            _ => {
                // a table row of cyclotomic literals; commas inside E(n,k)
                // do not separate entries
                let mut row = Vec::new();
                for (col, tok) in split_row(line) {
                    let v = Cyclotomic::parse(tok.trim())
                        .map_err(|e| err(lineno, col, e))?;
                    row.push(v);
                }
                rows.push(row);
            }
        }
    }

    let name = name.ok_or_else(|| err(1, 1, "missing #table header"))?;
    let group_order = order.ok_or_else(|| err(1, 1, "missing order line"))?;
    let kind = kind.ok_or_else(|| err(1, 1, "missing kind line"))?;
    let prime_or_pi = prime_or_pi.unwrap_or_default();
    let n = classes.ok_or_else(|| err(1, 1, "missing classes line"))?;
    let class_orders = class_orders.ok_or_else(|| err(1, 1, "missing class_orders line"))?;

    if class_orders.len() != n {
        return Err(TableFileError::ShapeMismatch(format!(
            "classes says {n} but class_orders has {}",
            class_orders.len()
        )));
    }
    if rows.len() != n {
        return Err(TableFileError::ShapeMismatch(format!(
            "expected {n} rows, found {}",
            rows.len()
        )));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(TableFileError::ShapeMismatch(format!(
                "row {} has {} entries, expected {n}",
                i + 1,
                row.len()
            )));
        }
    }
    Ok(TableFile {
        name,
        group_order,
        kind,
        prime_or_pi,
        class_orders,
        rows,
    })
}
