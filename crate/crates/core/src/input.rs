//! Input formats: combined weight systems and point matrices.

use std::io::BufRead;

use crate::error::{Error, Result};

/// One degree/weights row of a combined weight system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    pub degree: i64,
    pub weights: Vec<i64>,
}

/// Combined weight system: several weight systems over a common set of
/// coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cws {
    pub systems: Vec<WeightSystem>,
}

impl Cws {
    pub fn new(systems: Vec<WeightSystem>) -> Result<Self> {
        let cws = Cws { systems };
        cws.validate()?;
        Ok(cws)
    }

    pub fn num_coordinates(&self) -> usize {
        self.systems.first().map_or(0, |s| s.weights.len())
    }

    /// Dimension of the associated polytopes.
    pub fn dim(&self) -> usize {
        self.num_coordinates().saturating_sub(self.systems.len())
    }

    fn validate(&self) -> Result<()> {
        let n = self.num_coordinates();
        if self.systems.is_empty() || n == 0 {
            return Err(Error::InvalidWeights("empty weight system".into()));
        }
        for (j, s) in self.systems.iter().enumerate() {
            if s.weights.len() != n {
                return Err(Error::InvalidWeights(format!(
                    "system {} has {} weights, expected {n}",
                    j + 1,
                    s.weights.len()
                )));
            }
            if s.weights.iter().any(|&w| w < 0) {
                return Err(Error::InvalidWeights(format!("system {} has a negative weight", j + 1)));
            }
            if s.weights.iter().all(|&w| w == 0) {
                return Err(Error::InvalidWeights(format!("system {} has no positive weight", j + 1)));
            }
            let sum: i64 = s.weights.iter().sum();
            if sum != s.degree {
                return Err(Error::InvalidWeights(format!(
                    "degree {} differs from the weight sum {sum}",
                    s.degree
                )));
            }
        }
        if (0..n).any(|i| self.systems.iter().all(|s| s.weights[i] == 0)) {
            return Err(Error::InvalidWeights("a coordinate has zero weight in every system".into()));
        }
        let d = self.dim();
        if !(2..=4).contains(&d) {
            return Err(Error::UnsupportedDimension(d));
        }
        Ok(())
    }
}

/// Lattice points given directly, one entry per point, in input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointMatrix {
    pub dim: usize,
    pub points: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Weights(Cws),
    Points(PointMatrix),
}

fn integers(text: &str) -> Result<Vec<i64>> {
    text.split_whitespace()
        .map(|t| t.parse::<i64>().map_err(|_| Error::Parse(format!("not an integer: `{t}`"))))
        .collect()
}

/// Parses one combined weight system `d1 w11 w12 ... d2 w21 w22 ...` given on a
/// single line. The number of coordinates is inferred from the token count:
/// the first split into systems of equal length whose degrees match their
/// weight sums is taken.
pub fn parse_cws(line: &str) -> Result<Cws> {
    let toks = integers(line)?;
    let total = toks.len();
    if total < 2 {
        return Err(Error::Parse("weight system needs a degree and weights".into()));
    }
    let mut first_err = None;
    for k in 1..=total / 2 {
        if total % k != 0 {
            continue;
        }
        let width = total / k;
        let systems: Vec<WeightSystem> = toks
            .chunks(width)
            .map(|c| WeightSystem { degree: c[0], weights: c[1..].to_vec() })
            .collect();
        match Cws::new(systems) {
            Ok(cws) => return Ok(cws),
            Err(e) => {
                if first_err.is_none() {
                    first_err = Some(e);
                }
            }
        }
    }
    Err(first_err.unwrap_or_else(|| Error::Parse("cannot split weight system".into())))
}

/// Interprets a `#lines #columns` header. The smaller value is the dimension;
/// the layout follows the header literally (dim lines of points as columns, or
/// one point per line).
pub fn matrix_shape(lines: i64, cols: i64) -> Result<(usize, usize, bool)> {
    if lines <= 0 || cols <= 0 {
        return Err(Error::Parse(format!("invalid matrix header `{lines} {cols}`")));
    }
    if lines == cols {
        return Err(Error::Parse(format!(
            "ambiguous matrix header `{lines} {cols}`: dimension and point count coincide"
        )));
    }
    let dim = lines.min(cols) as usize;
    let np = lines.max(cols) as usize;
    if !(2..=4).contains(&dim) {
        return Err(Error::UnsupportedDimension(dim));
    }
    Ok((dim, np, lines as usize == dim))
}

/// Builds the point list from a header and its `lines * cols` entries.
pub fn parse_point_matrix(lines: i64, cols: i64, values: &[i64]) -> Result<PointMatrix> {
    let (dim, np, points_are_columns) = matrix_shape(lines, cols)?;
    if values.len() != dim * np {
        return Err(Error::Parse(format!(
            "expected {} coordinates, found {}",
            dim * np,
            values.len()
        )));
    }
    let points = (0..np)
        .map(|p| {
            (0..dim)
                .map(|i| if points_are_columns { values[i * np + p] } else { values[p * dim + i] })
                .collect()
        })
        .collect();
    Ok(PointMatrix { dim, points })
}

/// Parses a single record from `text`.
pub fn parse_input(text: &str, matrix_mode: bool) -> Result<Input> {
    let mut records = parse_records(text, matrix_mode)?;
    match records.len() {
        1 => Ok(records.remove(0)),
        0 => Err(Error::Parse("empty input".into())),
        n => Err(Error::Parse(format!("expected one record, found {n}"))),
    }
}

/// Parses every record of `text`: one weight system per non-empty line, or a
/// sequence of header-plus-coordinates blocks in matrix mode.
pub fn parse_records(text: &str, matrix_mode: bool) -> Result<Vec<Input>> {
    let mut stream = TokenStream::new(text.as_bytes());
    let mut out = Vec::new();
    while let Some(rec) = stream.next_record(matrix_mode)? {
        out.push(rec);
    }
    Ok(out)
}

/// Line-buffered integer reader, so that interactive prompts can be
/// interleaved with partial input.
pub struct TokenStream<R> {
    reader: R,
    pending: std::collections::VecDeque<String>,
}

impl<R: BufRead> TokenStream<R> {
    pub fn new(reader: R) -> Self {
        TokenStream { reader, pending: Default::default() }
    }

    /// Next non-blank line, including any unread tokens of the current line.
    pub fn next_line(&mut self) -> Result<Option<String>> {
        if !self.pending.is_empty() {
            let rest: Vec<String> = self.pending.drain(..).collect();
            return Ok(Some(rest.join(" ")));
        }
        loop {
            let mut line = String::new();
            if self.reader.read_line(&mut line)? == 0 {
                return Ok(None);
            }
            if !line.trim().is_empty() {
                return Ok(Some(line));
            }
        }
    }

    fn next_token(&mut self) -> Result<Option<String>> {
        while self.pending.is_empty() {
            let mut line = String::new();
            if self.reader.read_line(&mut line)? == 0 {
                return Ok(None);
            }
            self.pending.extend(line.split_whitespace().map(str::to_owned));
        }
        Ok(self.pending.pop_front())
    }

    /// Reads exactly `count` integers, possibly spanning several lines.
    pub fn integers(&mut self, count: usize) -> Result<Vec<i64>> {
        let mut out = Vec::with_capacity(count);
        while out.len() < count {
            let tok = self
                .next_token()?
                .ok_or_else(|| Error::Parse(format!("expected {count} integers, input ended after {}", out.len())))?;
            out.push(tok.parse().map_err(|_| Error::Parse(format!("not an integer: `{tok}`")))?);
        }
        Ok(out)
    }

    /// Whether any further token is available.
    pub fn at_end(&mut self) -> Result<bool> {
        if !self.pending.is_empty() {
            return Ok(false);
        }
        let Some(tok) = self.next_token()? else {
            return Ok(true);
        };
        self.pending.push_front(tok);
        Ok(false)
    }

    pub fn next_record(&mut self, matrix_mode: bool) -> Result<Option<Input>> {
        if matrix_mode {
            if self.at_end()? {
                return Ok(None);
            }
            let h = self.integers(2)?;
            let (dim, np, _) = matrix_shape(h[0], h[1])?;
            let vals = self.integers(dim * np)?;
            Ok(Some(Input::Points(parse_point_matrix(h[0], h[1], &vals)?)))
        } else {
            match self.next_line()? {
                None => Ok(None),
                Some(line) => Ok(Some(Input::Weights(parse_cws(&line)?))),
            }
        }
    }
}
