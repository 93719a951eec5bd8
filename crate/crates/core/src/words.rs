//! Freely reduced words over a small generator set, their evaluation in
//! SL₂(ℂ), and bounded searches over all words up to a given length.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{commutator, is_nonelementary, jorgensen_pair, JReport, Mat2, MobiusKind};
use crate::tolerance::tolerances;

pub const MAX_WORD_LEN: usize = 16;
pub const MAX_ARITY: usize = 8;

/// Quantization step used when deduplicating matrices.
pub const DEDUP_GRID: f64 = 1e-6;

/// A freely reduced word in run-length form: `(generator, exponent)` pairs
/// with distinct neighbouring generators and nonzero exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word {
    letters: Vec<(usize, i32)>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn generator(index: usize) -> Self {
        Word { letters: vec![(index, 1)] }
    }

    /// Builds the free reduction of the given letters.
    pub fn from_letters<I: IntoIterator<Item = (usize, i32)>>(letters: I) -> Self {
        let mut out: Vec<(usize, i32)> = Vec::new();
        for (g, e) in letters {
            if e == 0 {
                continue;
            }
            match out.last_mut() {
                Some(top) if top.0 == g => {
                    top.1 += e;
                    if top.1 == 0 {
                        out.pop();
                    }
                }
                _ => out.push((g, e)),
            }
        }
        Word { letters: out }
    }

    /// From unit letters `l`, meaning generator `l / 2` with exponent `+1` for
    /// even `l` and `−1` for odd `l`.
    pub(crate) fn from_unit_letters(letters: &[u8]) -> Self {
        Word::from_letters(letters.iter().map(|&l| ((l / 2) as usize, if l % 2 == 0 { 1 } else { -1 })))
    }

    pub fn letters(&self) -> &[(usize, i32)] {
        &self.letters
    }

    /// Σ|exponent|.
    pub fn len(&self) -> usize {
        self.letters.iter().map(|(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::from_letters(self.letters.iter().chain(other.letters.iter()).copied())
    }

    pub fn pow(&self, n: i32) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// `u v u⁻¹ v⁻¹`.
    pub fn commutator(u: &Word, v: &Word) -> Word {
        u.concat(v).concat(&u.inverse()).concat(&v.inverse())
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|(g, _)| *g).max()
    }

    /// Parses a word written with the given generator names.
    ///
    /// Accepted syntax: juxtaposition, `X^n`, `X^-n`, `X^{-n}`, superscripts
    /// such as `X⁻¹` or `X²`, parenthesized groups with exponents, and
    /// commutators `[u,v]`. `1` or an empty string is the identity.
    pub fn parse<S: AsRef<str>>(text: &str, names: &[S]) -> Result<Word> {
        let mut p = Parser { chars: text.chars().collect(), pos: 0, names };
        let w = p.word()?;
        p.skip_ws();
        if p.pos != p.chars.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(w)
    }

    /// Renders the word with the given names, e.g. `A^-1B^2A`.
    pub fn render<S: AsRef<str>>(&self, names: &[S]) -> String {
        if self.is_empty() {
            return "1".into();
        }
        let spaced = names.iter().any(|n| n.as_ref().chars().count() > 1);
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&(g, e)| {
                let name = names.get(g).map(|n| n.as_ref().to_string()).unwrap_or(format!("g{g}"));
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        parts.join(if spaced { " " } else { "" })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..=self.max_generator().unwrap_or(0)).map(|g| format!("g{g}")).collect();
        f.write_str(&self.render(&names))
    }
}

struct Parser<'a, S> {
    chars: Vec<char>,
    pos: usize,
    names: &'a [S],
}

const SUPERSCRIPT_DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];

impl<S: AsRef<str>> Parser<'_, S> {
    fn error(&self, msg: &str) -> Error {
        let text: String = self.chars.iter().collect();
        Error::Parse(format!("{msg} at offset {} in {text:?}", self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace() || c == '*' || c == '·') {
            self.pos += 1;
        }
    }

    fn word(&mut self) -> Result<Word> {
        let mut w = Word::empty();
        loop {
            self.skip_ws();
            match self.peek() {
                None | Some(')') | Some(']') | Some(',') => return Ok(w),
                _ => {
                    let f = self.factor()?;
                    w = w.concat(&f);
                }
            }
        }
    }

    fn factor(&mut self) -> Result<Word> {
        let atom = match self.peek() {
            Some('(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(')')?;
                w
            }
            Some('[') => {
                self.pos += 1;
                let u = self.word()?;
                self.expect(',')?;
                let v = self.word()?;
                self.expect(']')?;
                Word::commutator(&u, &v)
            }
            Some('1') => {
                self.pos += 1;
                Word::empty()
            }
            _ => Word::generator(self.name()?),
        };
        let e = self.exponent()?;
        Ok(atom.pow(e))
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected {c:?}")))
        }
    }

    fn name(&mut self) -> Result<usize> {
        let rest: String = self.chars[self.pos..].iter().collect();
        let best = self
            .names
            .iter()
            .enumerate()
            .filter(|(_, n)| !n.as_ref().is_empty() && rest.starts_with(n.as_ref()))
            .max_by_key(|(_, n)| n.as_ref().chars().count());
        match best {
            Some((i, n)) => {
                self.pos += n.as_ref().chars().count();
                Ok(i)
            }
            None => Err(self.error("unknown generator")),
        }
    }

    fn exponent(&mut self) -> Result<i32> {
        let mut total = 1i32;
        loop {
            match self.peek() {
                Some('^') => {
                    self.pos += 1;
                    let braced = self.peek() == Some('{');
                    if braced {
                        self.pos += 1;
                    }
                    let e = self.signed_int()?;
                    if braced {
                        self.expect('}')?;
                    }
                    total = total.checked_mul(e).ok_or_else(|| self.error("exponent overflow"))?;
                }
                Some(c) if c == '⁻' || SUPERSCRIPT_DIGITS.contains(&c) => {
                    let neg = c == '⁻';
                    if neg {
                        self.pos += 1;
                    }
                    let mut v: i32 = 0;
                    let start = self.pos;
                    while let Some(d) = self.peek().and_then(|c| SUPERSCRIPT_DIGITS.iter().position(|&s| s == c)) {
                        v = v.saturating_mul(10).saturating_add(d as i32);
                        self.pos += 1;
                    }
                    if self.pos == start {
                        return Err(self.error("expected superscript digits"));
                    }
                    total =
                        total.checked_mul(if neg { -v } else { v }).ok_or_else(|| self.error("exponent overflow"))?;
                }
                _ => return Ok(total),
            }
        }
    }

    fn signed_int(&mut self) -> Result<i32> {
        let neg = match self.peek() {
            Some('-') | Some('−') => {
                self.pos += 1;
                true
            }
            _ => false,
        };
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer exponent"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        let v: i32 = s.parse().map_err(|_| self.error("exponent out of range"))?;
        Ok(if neg { -v } else { v })
    }
}

/// Named generators.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSet {
    names: Vec<String>,
    mats: Vec<Mat2>,
}

impl GeneratorSet {
    pub fn new<S: Into<String>>(names: Vec<S>, mats: Vec<Mat2>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() != mats.len() {
            return Err(Error::Usage("names and matrices differ in number".into()));
        }
        if names.is_empty() || names.len() > MAX_ARITY {
            return Err(Error::Usage(format!("arity must be in 1..={MAX_ARITY}")));
        }
        Ok(GeneratorSet { names, mats })
    }

    pub fn from_pairs(pairs: &[(&str, Mat2)]) -> Result<Self> {
        Self::new(pairs.iter().map(|(n, _)| *n).collect(), pairs.iter().map(|(_, m)| *m).collect())
    }

    /// Appends a generator, typically a derived element used in later words.
    pub fn push(&mut self, name: &str, mat: Mat2) -> Result<()> {
        if self.names.len() == MAX_ARITY {
            return Err(Error::Usage(format!("arity must be in 1..={MAX_ARITY}")));
        }
        self.names.push(name.into());
        self.mats.push(mat);
        Ok(())
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn mats(&self) -> &[Mat2] {
        &self.mats
    }

    pub fn arity(&self) -> usize {
        self.mats.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn get(&self, name: &str) -> Option<&Mat2> {
        self.index_of(name).map(|i| &self.mats[i])
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        Word::parse(text, &self.names)
    }

    pub fn evaluate(&self, w: &Word) -> Result<Mat2> {
        evaluate(self, w)
    }

    /// Parses and evaluates in one step.
    pub fn eval_str(&self, text: &str) -> Result<Mat2> {
        evaluate(self, &self.parse_word(text)?)
    }

    pub fn render(&self, w: &Word) -> String {
        w.render(&self.names)
    }

    /// The same generators with only the first `n` kept.
    pub fn truncated(&self, n: usize) -> Result<Self> {
        Self::new(self.names[..n.min(self.arity())].to_vec(), self.mats[..n.min(self.arity())].to_vec())
    }
}

/// Left-to-right product of generator powers.
pub fn evaluate(gens: &GeneratorSet, w: &Word) -> Result<Mat2> {
    let mut m = Mat2::IDENTITY;
    for &(g, e) in w.letters() {
        let gm = gens.mats.get(g).ok_or_else(|| Error::Usage(format!("generator index {g} out of range")))?;
        m = m * gm.pow(e as i64);
    }
    if m.entries().iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        Ok(m)
    } else {
        Err(Error::NumericRange("word value overflowed".into()))
    }
}

/// Number of freely reduced words of length ≤ `max_len` over `arity` generators.
pub fn reduced_word_count(arity: usize, max_len: usize) -> u128 {
    let g = arity as u128;
    let mut total = 1u128;
    let mut level = 2 * g;
    for _ in 1..=max_len {
        total += level;
        level *= 2 * g - 1;
    }
    total
}

fn check_len(max_len: usize) -> Result<()> {
    if max_len > MAX_WORD_LEN {
        Err(Error::SizeLimit(format!("max_len {max_len} exceeds {MAX_WORD_LEN}")))
    } else {
        Ok(())
    }
}

struct Letters {
    mats: Vec<Mat2>,
    norms: Vec<f64>,
}

impl Letters {
    fn new(gens: &GeneratorSet) -> Self {
        let mats: Vec<Mat2> = gens.mats.iter().flat_map(|m| [*m, m.inverse()]).collect();
        let norms = mats.iter().map(|m| m.row_norm()).collect();
        Letters { mats, norms }
    }

    fn count(&self) -> u8 {
        self.mats.len() as u8
    }
}

/// Every freely reduced word of length ≤ `max_len` with its value, in order of
/// increasing length. Memory use is linear in `max_len`.
pub struct Enumeration {
    letters: Letters,
    max_len: usize,
    word: Vec<u8>,
    prefix: Vec<Mat2>,
    started: bool,
    done: bool,
}

/// Streams all reduced words up to `max_len` (at most [`MAX_WORD_LEN`]).
pub fn enumerate(gens: &GeneratorSet, max_len: usize) -> Result<Enumeration> {
    check_len(max_len)?;
    Ok(Enumeration {
        letters: Letters::new(gens),
        max_len,
        word: Vec::new(),
        prefix: vec![Mat2::IDENTITY],
        started: false,
        done: false,
    })
}

impl Enumeration {
    fn min_after(&self, prev: Option<u8>) -> u8 {
        match prev {
            Some(p) if p ^ 1 == 0 => 1,
            _ => 0,
        }
    }

    fn fill_from(&mut self, i: usize) {
        for j in i..self.word.len() {
            if j > i {
                self.word[j] = self.min_after(Some(self.word[j - 1]));
            }
            self.prefix[j + 1] = self.prefix[j] * self.letters.mats[self.word[j] as usize];
        }
    }

    fn start_length(&mut self, len: usize) {
        self.word = vec![0; len];
        self.prefix = vec![Mat2::IDENTITY; len + 1];
        self.fill_from(0);
    }

    fn advance(&mut self) -> bool {
        let n = self.letters.count();
        for i in (0..self.word.len()).rev() {
            let forbid = if i > 0 { Some(self.word[i - 1] ^ 1) } else { None };
            let mut l = self.word[i] + 1;
            if Some(l) == forbid {
                l += 1;
            }
            if l < n {
                self.word[i] = l;
                self.fill_from(i);
                return true;
            }
        }
        false
    }
}

impl Iterator for Enumeration {
    type Item = (Word, Mat2);

    fn next(&mut self) -> Option<(Word, Mat2)> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
        } else if !self.advance() {
            let len = self.word.len() + 1;
            if len > self.max_len {
                self.done = true;
                return None;
            }
            self.start_length(len);
        }
        let len = self.word.len();
        Some((Word::from_unit_letters(&self.word), self.prefix[len]))
    }
}

fn quantize(m: &Mat2) -> [i64; 8] {
    let mut k = [0i64; 8];
    for (i, z) in m.entries().iter().enumerate() {
        k[2 * i] = (z.re / DEDUP_GRID).round() as i64;
        k[2 * i + 1] = (z.im / DEDUP_GRID).round() as i64;
    }
    k
}

/// Sign-independent dedup key on the [`DEDUP_GRID`] lattice.
pub fn projective_key(m: &Mat2) -> [i64; 8] {
    let p = quantize(m);
    let n = quantize(&-*m);
    p.min(n)
}

/// Projectively distinct, non-identity elements of word length ≤ `max_len`,
/// each with its first (shortest) word.
pub fn distinct_elements(gens: &GeneratorSet, max_len: usize) -> Result<Vec<(Word, Mat2)>> {
    let mut seen: HashMap<[i64; 8], ()> = HashMap::new();
    let mut out = Vec::new();
    for (w, m) in enumerate(gens, max_len)? {
        if m.is_identity() {
            continue;
        }
        if seen.insert(projective_key(&m), ()).is_none() {
            out.push((w, m));
        }
    }
    Ok(out)
}

/// Rounding error estimate for a product of `len` letters whose row norms
/// multiply to `growth`.
fn rounding_floor(len: usize, growth: f64) -> f64 {
    8.0 * (len as f64 + 1.0) * f64::EPSILON * growth
}

fn dfs<F: FnMut(&[u8], &Mat2, f64)>(
    letters: &Letters,
    max_len: usize,
    buf: &mut Vec<u8>,
    m: Mat2,
    growth: f64,
    f: &mut F,
) {
    f(buf, &m, growth);
    if buf.len() == max_len {
        return;
    }
    let forbid = buf.last().map(|l| l ^ 1);
    for l in 0..letters.count() {
        if Some(l) == forbid {
            continue;
        }
        buf.push(l);
        let i = l as usize;
        dfs(letters, max_len, buf, m * letters.mats[i], growth * letters.norms[i], f);
        buf.pop();
    }
}

/// Folds every reduced word of length 1..=max_len, partitioned by first letter.
fn par_fold<T, Init, Visit, Merge>(
    gens: &GeneratorSet,
    max_len: usize,
    init: Init,
    visit: Visit,
    merge: Merge,
) -> Result<T>
where
    T: Send,
    Init: Fn() -> T + Sync,
    Visit: Fn(&mut T, &[u8], &Mat2, f64) + Sync,
    Merge: Fn(T, T) -> T + Sync,
{
    check_len(max_len)?;
    let letters = Letters::new(gens);
    if max_len == 0 {
        return Ok(init());
    }
    let out = (0..letters.count())
        .into_par_iter()
        .map(|first| {
            let mut acc = init();
            let mut buf = vec![first];
            let i = first as usize;
            dfs(&letters, max_len, &mut buf, letters.mats[i], letters.norms[i], &mut |w, m, g| {
                visit(&mut acc, w, m, g)
            });
            acc
        })
        .reduce(&init, &merge);
    Ok(out)
}

/// Result of a minimum search over enumerated elements.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchMin {
    pub value: f64,
    pub word: Word,
    pub element: Mat2,
}

#[derive(Clone)]
struct Best {
    value: f64,
    word: Vec<u8>,
    element: Mat2,
}

impl Best {
    fn beats(&self, value: f64, word: &[u8]) -> bool {
        (value, word.len(), word) < (self.value, self.word.len(), self.word.as_slice())
    }
}

fn offer(best: &mut Option<Best>, value: f64, word: &[u8], m: &Mat2) {
    if best.as_ref().is_none_or(|b| b.beats(value, word)) {
        *best = Some(Best { value, word: word.to_vec(), element: *m });
    }
}

fn merge_best(a: Option<Best>, b: Option<Best>) -> Option<Best> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if x.beats(y.value, &y.word) { y } else { x }),
        (x, None) => x,
        (None, y) => y,
    }
}

fn into_search_min(b: Best) -> SearchMin {
    SearchMin { value: b.value, word: Word::from_unit_letters(&b.word), element: b.element }
}

/// Smallest nonzero |c| over elements of word length ≤ `max_len`: an upper
/// bound for the waist size of the cusp at ∞.
pub fn min_c_entry(gens: &GeneratorSet, max_len: usize) -> Result<SearchMin> {
    let a = Mat2::translation(crate::linalg::ONE);
    if !gens.mats.iter().any(|m| m.proj_eq(&a) || m.proj_eq(&a.inverse())) {
        return Err(Error::Usage("generator set must contain [[1,1],[0,1]]".into()));
    }
    let eps = tolerances().cx;
    let best = par_fold(
        gens,
        max_len,
        || None,
        |best: &mut Option<Best>, w, m, growth| {
            let c = m.c().norm();
            if c > eps.max(rounding_floor(w.len(), growth)) {
                offer(best, c, w, m);
            }
        },
        merge_best,
    )?;
    best.map(into_search_min).ok_or(Error::EmptySearch("element with nonzero c entry"))
}

/// Smallest |tr²X − 4| over loxodromic or hyperbolic X of word length
/// ≤ `max_len`: an upper bound for α.
pub fn min_loxodromic_defect(gens: &GeneratorSet, max_len: usize) -> Result<SearchMin> {
    let eps = tolerances().cx;
    let best = par_fold(
        gens,
        max_len,
        || None,
        |best: &mut Option<Best>, w, m, growth| {
            let t = m.trace();
            let tol = eps.max(rounding_floor(w.len(), growth));
            if loxodromic_kind(t, tol).is_loxodromic_or_hyperbolic() {
                offer(best, (t * t - 4.0).norm(), w, m);
            }
        },
        merge_best,
    )?;
    best.map(into_search_min).ok_or(Error::EmptySearch("loxodromic element"))
}

/// Loxodromic element of least translation length `2·Re acosh(tr/2)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShortestGeodesic {
    pub translation_length: f64,
    /// `|tr²X − 4|` for that element; among elements of equal length
    /// (within 1e-9) the smallest value is kept, then the shortest word.
    pub defect: f64,
    pub word: Word,
    pub element: Mat2,
}

/// The shortest closed geodesic visible at word length ≤ `max_len` and its
/// trace defect. Unlike [`min_loxodromic_defect`] this ignores proper powers,
/// whose defect can be smaller than that of the primitive element.
pub fn shortest_geodesic(gens: &GeneratorSet, max_len: usize) -> Result<ShortestGeodesic> {
    let eps = tolerances().cx;
    type Cand = Option<(f64, f64, Vec<u8>, Mat2)>;
    fn better(a: (f64, f64, &[u8]), b: (f64, f64, &[u8])) -> bool {
        if (a.0 - b.0).abs() > 1e-9 {
            return a.0 < b.0;
        }
        if (a.1 - b.1).abs() > 1e-9 * (1.0 + a.1) {
            return a.1 < b.1;
        }
        (a.2.len(), a.2) < (b.2.len(), b.2)
    }
    let best = par_fold(
        gens,
        max_len,
        || None,
        |best: &mut Cand, w, m, growth| {
            let t = m.trace();
            let tol = eps.max(rounding_floor(w.len(), growth));
            if !loxodromic_kind(t, tol).is_loxodromic_or_hyperbolic() {
                return;
            }
            let len = 2.0 * (t / 2.0).acosh().re.abs();
            let defect = (t * t - 4.0).norm();
            if best.as_ref().is_none_or(|b| better((len, defect, w), (b.0, b.1, &b.2))) {
                *best = Some((len, defect, w.to_vec(), *m));
            }
        },
        |a: Cand, b: Cand| match (a, b) {
            (Some(x), Some(y)) => Some(if better((y.0, y.1, &y.2), (x.0, x.1, &x.2)) { y } else { x }),
            (x, None) => x,
            (None, y) => y,
        },
    )?;
    best.map(|(translation_length, defect, w, element)| ShortestGeodesic {
        translation_length,
        defect,
        word: Word::from_unit_letters(&w),
        element,
    })
    .ok_or(Error::EmptySearch("loxodromic element"))
}

/// Kind from the trace alone; identity and parabolic are not separated.
fn loxodromic_kind(t: crate::linalg::Cx, tol: f64) -> MobiusKind {
    if (t - 2.0).norm() <= tol || (t + 2.0).norm() <= tol {
        MobiusKind::Parabolic
    } else if t.im.abs() <= tol {
        if t.re.abs() < 2.0 {
            MobiusKind::Elliptic
        } else {
            MobiusKind::Hyperbolic
        }
    } else {
        MobiusKind::Loxodromic
    }
}

/// A pair of enumerated elements and their Jørgensen report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairWitness {
    pub report: JReport,
    pub words: (Word, Word),
}

type PairBest = Option<(f64, usize, usize)>;

fn pair_better(cand: (f64, usize, usize), cur: &PairBest) -> bool {
    cur.is_none_or(|c| cand < c)
}

fn witness(elements: &[(Word, Mat2)], i: usize, j: usize) -> PairWitness {
    PairWitness {
        report: jorgensen_pair(&elements[i].1, &elements[j].1),
        words: (elements[i].0.clone(), elements[j].0.clone()),
    }
}

#[inline]
fn j_value_fast(x: &Mat2, tx2m4: f64, y: &Mat2) -> f64 {
    tx2m4 + (commutator(x, y).trace() - 2.0).norm()
}

/// Minimum Jørgensen value over ordered pairs of distinct enumerated elements
/// that pass [`is_nonelementary`].
pub fn jtilde_upper_bound(gens: &GeneratorSet, max_len: usize) -> Result<PairWitness> {
    let elements = distinct_elements(gens, max_len)?;
    let best = min_nonelementary_pair(&elements);
    best.map(|(_, i, j)| witness(&elements, i, j)).ok_or(Error::EmptySearch("non-elementary pair"))
}

fn min_nonelementary_pair(elements: &[(Word, Mat2)]) -> PairBest {
    (0..elements.len())
        .into_par_iter()
        .fold(
            || None,
            |mut best: PairBest, i| {
                let x = &elements[i].1;
                let t = x.trace();
                let d = (t * t - 4.0).norm();
                for (j, (_, y)) in elements.iter().enumerate() {
                    if i == j {
                        continue;
                    }
                    let v = j_value_fast(x, d, y);
                    if pair_better((v, i, j), &best) && is_nonelementary(x, y) {
                        best = Some((v, i, j));
                    }
                }
                best
            },
        )
        .reduce(
            || None,
            |a, b| match (a, b) {
                (Some(x), Some(y)) => Some(if x <= y { x } else { y }),
                (x, None) => x,
                (None, y) => y,
            },
        )
}

/// Finds some non-elementary pair with J below `bound`, if one exists among
/// elements of word length ≤ `max_len`.
pub fn find_jorgensen_violation(gens: &GeneratorSet, max_len: usize, bound: f64) -> Result<Option<PairWitness>> {
    let elements = distinct_elements(gens, max_len)?;
    let hit = (0..elements.len()).into_par_iter().find_map_any(|i| {
        let x = &elements[i].1;
        let t = x.trace();
        let d = (t * t - 4.0).norm();
        if d >= bound {
            return None;
        }
        elements.iter().enumerate().find_map(|(j, (_, y))| {
            (i != j && j_value_fast(x, d, y) < bound && is_nonelementary(x, y)).then_some((i, j))
        })
    });
    Ok(hit.map(|(i, j)| witness(&elements, i, j)))
}

/// Outcome of checking the Jørgensen inequality on all enumerated pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub max_len: usize,
    pub elements: usize,
    pub pairs: u64,
    /// Minimum over pairs passing the elementarity heuristic.
    pub minimum: Option<PairWitness>,
    pub holds: bool,
}

/// Checks `J ≥ 1 − ε_j` for every ordered pair of distinct enumerated elements
/// passing [`is_nonelementary`].
pub fn inequality_sweep(gens: &GeneratorSet, max_len: usize) -> Result<SweepReport> {
    let elements = distinct_elements(gens, max_len)?;
    let n = elements.len() as u64;
    let minimum = min_nonelementary_pair(&elements).map(|(_, i, j)| witness(&elements, i, j));
    let holds = minimum.as_ref().is_none_or(|w| w.report.value >= 1.0 - tolerances().j);
    Ok(SweepReport { max_len, elements: elements.len(), pairs: n * n.saturating_sub(1), minimum, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{cis, cx, I, ONE};
    use std::f64::consts::PI;

    fn fig8() -> GeneratorSet {
        GeneratorSet::from_pairs(&[("A", Mat2::translation(ONE)), ("B", Mat2::lower(cis(PI / 3.0)))]).unwrap()
    }

    #[test]
    fn free_reduction() {
        let w = Word::from_letters([(0, 1), (1, 2), (1, -2), (0, 2)]);
        assert_eq!(w.letters(), &[(0, 3)]);
        assert!(Word::from_letters([(0, 1), (0, -1)]).is_empty());
        let u = Word::from_letters([(0, 1), (1, -1)]);
        assert!(u.concat(&u.inverse()).is_empty());
        assert_eq!(Word::commutator(&u, &u), Word::empty());
    }

    #[test]
    fn parse_forms() {
        let names = ["A", "B", "C"];
        let w = Word::parse("C⁻¹ACA⁻²CAC⁻¹", &names).unwrap();
        assert_eq!(w.letters(), &[(2, -1), (0, 1), (2, 1), (0, -2), (2, 1), (0, 1), (2, -1)]);
        assert_eq!(Word::parse("C^-1 A C A^{-2} C A C^-1", &names).unwrap(), w);
        assert_eq!(Word::parse("(AB)^2", &names).unwrap().letters(), &[(0, 1), (1, 1), (0, 1), (1, 1)]);
        assert_eq!(Word::parse("[A,B]", &names).unwrap().len(), 4);
        assert!(Word::parse("1", &names).unwrap().is_empty());
        assert!(Word::parse("AX", &names).is_err());
        assert!(Word::parse("(AB", &names).is_err());
        assert_eq!(w.render(&names), "C^-1ACA^-2CAC^-1");
        assert_eq!(Word::parse(&w.render(&names), &names).unwrap(), w);
    }

    #[test]
    fn evaluate_examples() {
        let g = fig8();
        assert_eq!(g.evaluate(&Word::empty()).unwrap(), Mat2::IDENTITY);
        assert_eq!(g.eval_str("A").unwrap(), Mat2::translation(ONE));
        let mut g = g;
        g.push("C", Mat2::lower(cis(PI / 3.0))).unwrap();
        let t = g.eval_str("C⁻¹ACA⁻²CAC⁻¹").unwrap();
        assert!(t.proj_dist(&Mat2::translation(cx(0.0, 2.0 * 3f64.sqrt()))) < 1e-12);
        assert!(matches!(g.evaluate(&Word::generator(7)), Err(Error::Usage(_))));
    }

    #[test]
    fn enumeration_counts() {
        let one = GeneratorSet::from_pairs(&[("A", Mat2::translation(ONE))]).unwrap();
        let words: Vec<String> = enumerate(&one, 2).unwrap().skip(1).map(|(w, _)| one.render(&w)).collect();
        assert_eq!(words, ["A", "A^-1", "A^2", "A^-2"]);
        assert_eq!(enumerate(&fig8(), 1).unwrap().count(), 5);
        assert_eq!(enumerate(&fig8(), 2).unwrap().count(), 17);
        assert!(enumerate(&fig8(), 17).is_err());
    }

    #[test]
    fn enumeration_matrices_match_evaluation() {
        let g = fig8();
        for (w, m) in enumerate(&g, 4).unwrap() {
            assert!(g.evaluate(&w).unwrap().dist(&m) < 1e-12);
        }
    }

    #[test]
    fn waist_examples() {
        assert!((min_c_entry(&fig8(), 4).unwrap().value - 1.0).abs() < 1e-12);
        let s = Mat2::real(0.0, -1.0, 1.0, 0.0).unwrap();
        let o1 =
            GeneratorSet::from_pairs(&[("A", Mat2::translation(ONE)), ("S", s), ("T", Mat2::translation(I))]).unwrap();
        assert!((min_c_entry(&o1, 2).unwrap().value - 1.0).abs() < 1e-12);
        let wh = GeneratorSet::from_pairs(&[("A", Mat2::translation(ONE)), ("B", Mat2::lower(cx(1.0, 1.0)))]).unwrap();
        assert!((min_c_entry(&wh, 2).unwrap().value - 2f64.sqrt()).abs() < 1e-12);
        let no_a = GeneratorSet::from_pairs(&[("S", s)]).unwrap();
        assert!(matches!(min_c_entry(&no_a, 2), Err(Error::Usage(_))));
    }

    #[test]
    fn fig8_defect_at_length_two() {
        let r = min_loxodromic_defect(&fig8(), 2).unwrap();
        assert!((r.value - 13f64.sqrt()).abs() < 1e-9, "{}", r.value);
    }

    #[test]
    fn fig8_shortest_geodesic() {
        // Length from an independent length-spectrum computation.
        let r = shortest_geodesic(&fig8(), 4).unwrap();
        assert!((r.translation_length - 1.087070144995739).abs() < 1e-9);
        assert!((r.defect - 13f64.sqrt()).abs() < 1e-9);
        let t = r.element.trace();
        assert!((2.0 * (t / 2.0).acosh().re.abs() - r.translation_length).abs() < 1e-12);
    }

    #[test]
    fn jtilde_examples() {
        let r = jtilde_upper_bound(&fig8(), 3).unwrap();
        assert!((r.report.value - 1.0).abs() < 1e-9);
        let wh =
            GeneratorSet::from_pairs(&[("A", Mat2::translation(ONE)), ("B", Mat2::lower(cx(-1.0, -1.0)))]).unwrap();
        let r = jtilde_upper_bound(&wh, 3).unwrap();
        assert!((r.report.value - 2.0).abs() < 1e-9, "{}", r.report.value);
    }

    #[test]
    fn free_group_has_no_violation() {
        // A Schottky-like pair far from the identity.
        let x = Mat2::diagonal(cx(3.0, 0.0)).unwrap();
        let y = x.conjugate_by(&Mat2::real(1.0, 1.0, 1.0, 2.0).unwrap());
        let g = GeneratorSet::from_pairs(&[("X", x), ("Y", y)]).unwrap();
        assert!(find_jorgensen_violation(&g, 3, 1.0).unwrap().is_none());
        let small =
            GeneratorSet::from_pairs(&[("A", Mat2::translation(ONE)), ("B", Mat2::lower(cx(0.3, 0.4)))]).unwrap();
        assert!(find_jorgensen_violation(&small, 2, 1.0).unwrap().is_some());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn closed_form_count(arity in 1usize..=3, len in 0usize..=5) {
                let mats: Vec<Mat2> = (0..arity).map(|k| Mat2::translation(cx(k as f64 + 1.0, 0.0))).collect();
                let names: Vec<String> = (0..arity).map(|k| format!("g{k}")).collect();
                let g = GeneratorSet::new(names, mats).unwrap();
                prop_assert_eq!(enumerate(&g, len).unwrap().count() as u128, reduced_word_count(arity, len));
            }

            #[test]
            fn enumerated_words_are_reduced_and_unique(len in 0usize..=5) {
                let mut seen = std::collections::HashSet::new();
                for (w, _) in enumerate(&fig8(), len).unwrap() {
                    prop_assert!(w.letters().windows(2).all(|p| p[0].0 != p[1].0));
                    prop_assert!(w.len() <= len);
                    prop_assert!(seen.insert(w));
                }
            }

            #[test]
            fn searches_are_monotone(len in 1usize..=5) {
                let g = fig8();
                prop_assert!(min_c_entry(&g, len + 1).unwrap().value <= min_c_entry(&g, len).unwrap().value);
                if len >= 2 {
                    prop_assert!(min_loxodromic_defect(&g, len + 1).unwrap().value
                        <= min_loxodromic_defect(&g, len).unwrap().value);
                }
                if len <= 3 {
                    prop_assert!(jtilde_upper_bound(&g, len + 1).unwrap().report.value
                        <= jtilde_upper_bound(&g, len).unwrap().report.value + 1e-12);
                }
            }

            #[test]
            fn parse_render_round_trip(letters in proptest::collection::vec((0usize..3, -3i32..=3), 0..8)) {
                let names = ["A", "B", "C"];
                let w = Word::from_letters(letters);
                prop_assert_eq!(Word::parse(&w.render(&names), &names).unwrap(), w);
            }
        }
    }
}
