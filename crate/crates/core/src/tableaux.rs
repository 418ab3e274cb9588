//! Immaculate tableaux, standard immaculate tableaux and Y-words.
//!
//! Rows are numbered from 1 at the top. A standard immaculate tableau is
//! identified with its Y-word `w`, where `w_j` is the row containing `j`.

use std::fmt;
use std::str::FromStr;

use crate::combinatorics::{from_descent_set, Composition, DescentSet};
use crate::error::{Error, Result};

/// A filling of a composition diagram with weakly increasing rows and a
/// strictly increasing first column.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ImmaculateTableau {
    shape: Composition,
    rows: Vec<Vec<usize>>,
}

impl ImmaculateTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        check_immaculate(&rows)?;
        let shape = Composition::new(rows.iter().map(Vec::len).collect())
            .map_err(|_| Error::InvalidTableau("empty row".into()))?;
        let tableau = ImmaculateTableau { shape, rows };
        tableau.content()?;
        Ok(tableau)
    }

    pub fn shape(&self) -> &Composition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Letter multiplicities `β_i`; every letter `1..=max` must occur.
    pub fn content(&self) -> Result<Composition> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut counts = vec![0usize; max];
        for &x in self.rows.iter().flatten() {
            counts[x - 1] += 1;
        }
        Composition::new(counts)
            .map_err(|_| Error::InvalidTableau(format!("content of {:?} skips a letter", self.rows)))
    }
}

fn check_immaculate(rows: &[Vec<usize>]) -> Result<()> {
    for row in rows {
        if row.is_empty() {
            return Err(Error::InvalidTableau("empty row".into()));
        }
        if row.iter().any(|&x| x == 0) {
            return Err(Error::InvalidTableau("entries must be positive".into()));
        }
        if row.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidTableau(format!("row {row:?} is not weakly increasing")));
        }
    }
    if rows.windows(2).any(|w| w[0][0] >= w[1][0]) {
        return Err(Error::InvalidTableau(
            "first column is not strictly increasing".into(),
        ));
    }
    Ok(())
}

/// An immaculate tableau with content `1^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardImmaculateTableau {
    tableau: ImmaculateTableau,
    // row_of[j - 1] is the (1-based) row containing letter j
    row_of: Vec<usize>,
}

impl StandardImmaculateTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let tableau = ImmaculateTableau::new(rows)?;
        Self::from_tableau(tableau)
    }

    pub fn from_tableau(tableau: ImmaculateTableau) -> Result<Self> {
        let n = tableau.shape.size();
        let mut row_of = vec![0usize; n];
        for (r, row) in tableau.rows.iter().enumerate() {
            for &x in row {
                if x > n || row_of[x - 1] != 0 {
                    return Err(Error::InvalidTableau(format!(
                        "{:?} is not standard",
                        tableau.rows
                    )));
                }
                row_of[x - 1] = r + 1;
            }
        }
        if tableau.rows.iter().any(|row| row.windows(2).any(|w| w[0] == w[1])) {
            return Err(Error::InvalidTableau("repeated letter".into()));
        }
        Ok(StandardImmaculateTableau { tableau, row_of })
    }

    pub fn shape(&self) -> &Composition {
        &self.tableau.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.tableau.rows
    }

    pub fn size(&self) -> usize {
        self.row_of.len()
    }

    pub fn as_tableau(&self) -> &ImmaculateTableau {
        &self.tableau
    }

    /// The 1-based row containing `letter`.
    pub fn row_of(&self, letter: usize) -> usize {
        self.row_of[letter - 1]
    }

    pub fn in_first_column(&self, letter: usize) -> bool {
        self.tableau.rows[self.row_of(letter) - 1][0] == letter
    }

    /// The tableau obtained by exchanging the letters `i` and `i + 1`.
    ///
    /// The result is not revalidated; callers only swap when the action rule
    /// guarantees an immaculate result.
    pub(crate) fn swap_letters(&self, i: usize) -> StandardImmaculateTableau {
        let mut rows = self.tableau.rows.clone();
        for row in rows.iter_mut() {
            for x in row.iter_mut() {
                if *x == i {
                    *x = i + 1;
                } else if *x == i + 1 {
                    *x = i;
                }
            }
        }
        let mut row_of = self.row_of.clone();
        row_of.swap(i - 1, i);
        StandardImmaculateTableau {
            tableau: ImmaculateTableau {
                shape: self.tableau.shape.clone(),
                rows,
            },
            row_of,
        }
    }
}

impl fmt::Display for StandardImmaculateTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.tableau.rows)
    }
}

/// A word whose letters are exactly `1..=m`, each occurring at least once.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<usize>,
    content: Composition,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        let max = letters.iter().copied().max().unwrap_or(0);
        if letters.iter().any(|&x| x == 0) {
            return Err(Error::ParseWord(format!("{letters:?}")));
        }
        let mut counts = vec![0usize; max];
        for &x in &letters {
            counts[x - 1] += 1;
        }
        let content = Composition::new(counts)
            .map_err(|_| Error::ParseWord(format!("{letters:?} skips a letter")))?;
        Ok(Word { letters, content })
    }

    /// The sorted word `1^{α_1} 2^{α_2} ⋯ k^{α_k}`.
    pub fn sorted(content: &Composition) -> Word {
        let letters = content
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| std::iter::repeat(i + 1).take(a))
            .collect();
        Word {
            letters,
            content: content.clone(),
        }
    }

    pub(crate) fn from_parts_unchecked(letters: Vec<usize>, content: Composition) -> Word {
        Word { letters, content }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn content(&self) -> &Composition {
        &self.content
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Inversions `i < j` with `w_i > w_j`.
    pub fn inversions(&self) -> usize {
        let w = &self.letters;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&y| y < w[i]).count())
            .sum()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.content.len() <= 9 {
            for x in &self.letters {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(|x| x.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Digit strings (`"112322231"`) or comma-separated integers.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseWord(s.to_string());
        let letters = if s.contains(',') {
            s.split(',')
                .map(|t| t.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<Vec<_>>>()?
        };
        Word::new(letters).map_err(|_| bad())
    }
}

/// All immaculate tableaux of the given shape and content, ordered
/// lexicographically by their row-index word (the rows of the letters, read
/// letter by letter in increasing order).
pub fn immaculate_tableaux(shape: &Composition, content: &Composition) -> Result<Vec<ImmaculateTableau>> {
    if shape.size() != content.size() {
        return Err(Error::SizeMismatch {
            shape: shape.size(),
            content: content.size(),
        });
    }
    let mut filler = Filler {
        shape: shape.parts(),
        content: content.parts(),
        rows: vec![Vec::new(); shape.len()],
        out: Vec::new(),
    };
    filler.place_letter(0, 0);
    Ok(filler
        .out
        .into_iter()
        .map(|rows| ImmaculateTableau {
            shape: shape.clone(),
            rows,
        })
        .collect())
}

struct Filler<'a> {
    shape: &'a [usize],
    content: &'a [usize],
    rows: Vec<Vec<usize>>,
    out: Vec<Vec<Vec<usize>>>,
}

impl Filler<'_> {
    /// Places every copy of letter `letter_idx + 1`; rows `0..started` are
    /// already begun and may accept more boxes, row `started` may be begun.
    fn place_letter(&mut self, letter_idx: usize, started: usize) {
        if letter_idx == self.content.len() {
            self.out.push(self.rows.clone());
            return;
        }
        self.distribute(letter_idx, 0, self.content[letter_idx], started, false);
    }

    fn distribute(&mut self, letter_idx: usize, row: usize, remaining: usize, started: usize, begins_row: bool) {
        if remaining == 0 {
            self.place_letter(letter_idx + 1, started + usize::from(begins_row));
            return;
        }
        if row > started || row >= self.shape.len() {
            return;
        }
        let room = self.shape[row] - self.rows[row].len();
        let letter = letter_idx + 1;
        // more copies in upper rows first gives lexicographic order
        for take in (0..=room.min(remaining)).rev() {
            self.rows[row].extend(std::iter::repeat(letter).take(take));
            let begins = begins_row || (row == started && take > 0);
            self.distribute(letter_idx, row + 1, remaining - take, started, begins);
            let len = self.rows[row].len();
            self.rows[row].truncate(len - take);
        }
    }
}

/// `K_{α,β}`, the number of immaculate tableaux of shape `α` and content `β`.
pub fn kostka(shape: &Composition, content: &Composition) -> Result<usize> {
    Ok(immaculate_tableaux(shape, content)?.len())
}

/// All standard immaculate tableaux of shape `alpha`, in lexicographic order
/// of their Y-words.
pub fn standard_immaculate_tableaux(alpha: &Composition) -> Vec<StandardImmaculateTableau> {
    let content = Composition::ones(alpha.size());
    immaculate_tableaux(alpha, &content)
        .expect("sizes agree")
        .into_iter()
        .map(|t| StandardImmaculateTableau::from_tableau(t).expect("content 1^n is standard"))
        .collect()
}

/// `D(T)`: descents at `i` whenever `i + 1` sits in a strictly lower row.
pub fn descent_composition(t: &StandardImmaculateTableau) -> Composition {
    let n = t.size();
    let descents = (1..n).filter(|&i| t.row_of(i + 1) > t.row_of(i)).collect();
    from_descent_set(&DescentSet::new(n, descents).expect("descents lie in 1..n-1"))
        .expect("valid descent set")
}

/// True iff the first `j` precedes the first `j + 1` for every `j`.
pub fn is_y_word(w: &Word) -> bool {
    let m = w.content().len();
    let mut first = vec![usize::MAX; m];
    for (pos, &x) in w.letters().iter().enumerate() {
        if first[x - 1] == usize::MAX {
            first[x - 1] = pos;
        }
    }
    first.windows(2).all(|f| f[0] < f[1])
}

/// All Y-words of the given content in lexicographic order.
pub fn y_words(content: &Composition) -> Vec<Word> {
    fn go(remaining: &mut [usize], used: usize, prefix: &mut Vec<usize>, n: usize, content: &Composition, out: &mut Vec<Word>) {
        if prefix.len() == n {
            out.push(Word::from_parts_unchecked(prefix.clone(), content.clone()));
            return;
        }
        // a fresh letter may only be the next unused one
        let limit = (used + 1).min(remaining.len());
        for letter in 1..=limit {
            if remaining[letter - 1] == 0 {
                continue;
            }
            remaining[letter - 1] -= 1;
            prefix.push(letter);
            go(remaining, used.max(letter), prefix, n, content, out);
            prefix.pop();
            remaining[letter - 1] += 1;
        }
    }
    let mut remaining = content.parts().to_vec();
    let mut out = Vec::new();
    go(&mut remaining, 0, &mut Vec::new(), content.size(), content, &mut out);
    out
}

/// `𝒯(w)`: the standard immaculate tableau with `j` in row `w_j`.
pub fn yword_to_tableau(w: &Word) -> Result<StandardImmaculateTableau> {
    if !is_y_word(w) {
        return Err(Error::NotAYWord(w.to_string()));
    }
    let mut rows = vec![Vec::new(); w.content().len()];
    for (j, &r) in w.letters().iter().enumerate() {
        rows[r - 1].push(j + 1);
    }
    StandardImmaculateTableau::new(rows)
}

/// The inverse of [`yword_to_tableau`].
pub fn tableau_to_yword(t: &StandardImmaculateTableau) -> Word {
    Word::from_parts_unchecked(t.row_of.clone(), t.shape().clone())
}

/// `Ŝ_α`: row `i` holds the `i`-th consecutive block of letters.
pub fn super_standard(alpha: &Composition) -> StandardImmaculateTableau {
    let mut next = 1;
    let rows = alpha
        .parts()
        .iter()
        .map(|&a| {
            let row: Vec<usize> = (next..next + a).collect();
            next += a;
            row
        })
        .collect();
    StandardImmaculateTableau::new(rows).expect("super-standard tableau is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::compositions_of;
    use std::collections::BTreeSet;

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn sit(rows: &[&[usize]]) -> StandardImmaculateTableau {
        StandardImmaculateTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    /// Brute-force filler: every function boxes -> letters, filtered by the
    /// immaculate conditions. Independent of the backtracking enumerator.
    fn brute_force_kostka(shape: &Composition, content: &Composition) -> usize {
        let n = shape.size();
        let m = content.len();
        if n == 0 {
            return 1;
        }
        let mut count = 0;
        let mut filling = vec![1usize; n];
        loop {
            let mut counts = vec![0usize; m];
            filling.iter().for_each(|&x| counts[x - 1] += 1);
            if counts == content.parts() {
                let mut rows = Vec::new();
                let mut k = 0;
                for &a in shape.parts() {
                    rows.push(filling[k..k + a].to_vec());
                    k += a;
                }
                let rows_ok = rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
                let col_ok = rows.windows(2).all(|w| w[0][0] < w[1][0]);
                if rows_ok && col_ok {
                    count += 1;
                }
            }
            // odometer increment
            let mut pos = 0;
            loop {
                if pos == n {
                    return count;
                }
                if filling[pos] < m {
                    filling[pos] += 1;
                    break;
                }
                filling[pos] = 1;
                pos += 1;
            }
        }
    }

    #[test]
    fn example_kostka_shape_423() {
        let tabs = immaculate_tableaux(&c(&[4, 2, 3]), &c(&[3, 1, 2, 3])).unwrap();
        let got: BTreeSet<Vec<Vec<usize>>> = tabs.iter().map(|t| t.rows().to_vec()).collect();
        let expected: BTreeSet<Vec<Vec<usize>>> = [
            vec![vec![1, 1, 1, 3], vec![2, 3], vec![4, 4, 4]],
            vec![vec![1, 1, 1, 3], vec![2, 4], vec![3, 4, 4]],
            vec![vec![1, 1, 1, 4], vec![2, 3], vec![3, 4, 4]],
            vec![vec![1, 1, 1, 4], vec![2, 4], vec![3, 3, 4]],
            vec![vec![1, 1, 1, 2], vec![3, 3], vec![4, 4, 4]],
        ]
        .into_iter()
        .collect();
        assert_eq!(got, expected);
        assert_eq!(kostka(&c(&[4, 2, 3]), &c(&[3, 1, 2, 3])).unwrap(), 5);
    }

    #[test]
    fn diagonal_and_empty_cases() {
        for alpha in compositions_of(5) {
            let tabs = immaculate_tableaux(&alpha, &alpha).unwrap();
            assert_eq!(tabs.len(), 1);
            for (i, row) in tabs[0].rows().iter().enumerate() {
                assert!(row.iter().all(|&x| x == i + 1));
            }
        }
        assert!(immaculate_tableaux(&c(&[2, 3]), &c(&[3, 2])).unwrap().is_empty());
        assert_eq!(kostka(&c(&[2, 3]), &c(&[3, 2])).unwrap(), 0);
        let empty = Composition::empty();
        assert_eq!(immaculate_tableaux(&empty, &empty).unwrap().len(), 1);
        assert!(matches!(
            kostka(&c(&[2]), &c(&[1])),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn enumerator_matches_brute_force() {
        for n in 0..=6 {
            for shape in compositions_of(n) {
                for content in compositions_of(n) {
                    let tabs = immaculate_tableaux(&shape, &content).unwrap();
                    assert_eq!(tabs.len(), brute_force_kostka(&shape, &content), "{shape} {content}");
                    for t in &tabs {
                        let checked = ImmaculateTableau::new(t.rows().to_vec()).unwrap();
                        assert_eq!(checked.content().unwrap(), content);
                    }
                    let unique: BTreeSet<_> = tabs.iter().collect();
                    assert_eq!(unique.len(), tabs.len());
                }
            }
        }
    }

    #[test]
    fn standard_counts() {
        assert_eq!(standard_immaculate_tableaux(&c(&[5])).len(), 1);
        assert_eq!(standard_immaculate_tableaux(&Composition::ones(5)).len(), 1);
        assert_eq!(standard_immaculate_tableaux(&c(&[2, 2, 3])).len(), 24);
    }

    #[test]
    fn descent_composition_examples() {
        let t = sit(&[&[1, 2, 4, 5, 10, 11], &[3, 6, 7, 8, 9], &[12, 13, 14, 15, 16, 17, 18]]);
        assert_eq!(descent_composition(&t), c(&[2, 3, 6, 7]));
        assert_eq!(descent_composition(&sit(&[&[1, 2, 3, 4]])), c(&[4]));
        for n in 0..=7 {
            for alpha in compositions_of(n) {
                assert_eq!(descent_composition(&super_standard(&alpha)), alpha);
            }
        }
    }

    #[test]
    fn y_word_examples() {
        let w: Word = "112322231".parse().unwrap();
        assert!(is_y_word(&w));
        assert_eq!(w.content(), &c(&[3, 4, 2]));
        assert!(!is_y_word(&"21".parse().unwrap()));
        assert!(is_y_word(&"1112222".parse().unwrap()));
    }

    #[test]
    fn bijection_example() {
        let w: Word = "112322231".parse().unwrap();
        let t = yword_to_tableau(&w).unwrap();
        assert_eq!(t.rows(), &[vec![1, 2, 9], vec![3, 5, 6, 7], vec![4, 8]]);
        assert_eq!(tableau_to_yword(&t), w);
        assert_eq!(yword_to_tableau(&"1111".parse().unwrap()).unwrap().rows(), &[vec![1, 2, 3, 4]]);
        assert_eq!(
            yword_to_tableau(&"1122".parse().unwrap()).unwrap(),
            super_standard(&c(&[2, 2]))
        );
        assert!(matches!(
            yword_to_tableau(&"21".parse().unwrap()),
            Err(Error::NotAYWord(_))
        ));
    }

    #[test]
    fn bijection_matches_enumeration() {
        for n in 0..=7 {
            for alpha in compositions_of(n) {
                let words = y_words(&alpha);
                let from_words: Vec<_> = words.iter().map(|w| yword_to_tableau(w).unwrap()).collect();
                assert_eq!(from_words, standard_immaculate_tableaux(&alpha), "{alpha}");
                for w in &words {
                    assert_eq!(&tableau_to_yword(&yword_to_tableau(w).unwrap()), w);
                }
            }
        }
    }

    #[test]
    fn super_standard_examples() {
        assert_eq!(super_standard(&c(&[2, 2, 3])).rows(), &[vec![1, 2], vec![3, 4], vec![5, 6, 7]]);
        assert_eq!(super_standard(&c(&[4])).rows(), &[vec![1, 2, 3, 4]]);
        assert_eq!(tableau_to_yword(&super_standard(&c(&[2, 1, 3]))).to_string(), "112333");
    }

    #[test]
    fn invalid_tableaux_rejected() {
        assert!(ImmaculateTableau::new(vec![vec![2, 1]]).is_err());
        assert!(ImmaculateTableau::new(vec![vec![2], vec![1]]).is_err());
        assert!(ImmaculateTableau::new(vec![vec![1], vec![3]]).is_err());
        assert!(StandardImmaculateTableau::new(vec![vec![1, 1]]).is_err());
        // non-first columns are unconstrained
        assert!(StandardImmaculateTableau::new(vec![vec![1, 4], vec![2, 3]]).is_ok());
    }

    #[test]
    fn word_text_forms() {
        let w = Word::new((1..=10).collect()).unwrap();
        assert_eq!(w.to_string(), "1,2,3,4,5,6,7,8,9,10");
        assert_eq!(w.to_string().parse::<Word>().unwrap(), w);
        assert!("102".parse::<Word>().is_err());
        assert!("13".parse::<Word>().is_err());
    }
}
