//! R-matrices and operators on tensor powers of an n-dimensional space.
//!
//! Index convention: `R^a_i{}^b_j` is stored at row `(a,b)`, column `(i,j)`,
//! and the braiding is `Ψ(x_i ⊗ x_j) = x_b ⊗ x_a R^a_i{}^b_j`, i.e. `Ψ = P∘R`.
//! Letters are 0-based internally and composite indices are big-endian:
//! the word `(i_1, ..., i_m)` has index `Σ i_k n^{m-k}`.

mod operator;
mod rmatrix;

pub use operator::GradedOperator;
pub use rmatrix::{braid_relation_holds, yang_baxter_check, BraidTable, RMatrix, YbeFailure, YbeReport};

/// A word over the alphabet `{0, .., n-1}`.
pub type Word = Vec<usize>;

pub fn word_index(word: &[usize], n: usize) -> usize {
    word.iter().fold(0, |acc, &l| acc * n + l)
}

pub fn index_word(mut idx: usize, n: usize, m: usize) -> Word {
    let mut w = vec![0; m];
    for slot in w.iter_mut().rev() {
        *slot = idx % n;
        idx /= n;
    }
    w
}

/// All words of length `m`, in index order.
pub fn all_words(n: usize, m: usize) -> impl Iterator<Item = Word> {
    (0..n.pow(m as u32)).map(move |i| index_word(i, n, m))
}

/// 1-based rendering used in reports and file formats.
pub fn display_word(w: &[usize]) -> String {
    let parts: Vec<String> = w.iter().map(|l| (l + 1).to_string()).collect();
    format!("({})", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composite_index_is_big_endian() {
        assert_eq!(word_index(&[1, 0, 1], 2), 5);
        assert_eq!(index_word(5, 2, 3), vec![1, 0, 1]);
        let words: Vec<Word> = all_words(3, 2).collect();
        assert_eq!(words.len(), 9);
        assert_eq!(words[5], vec![1, 2]);
        assert_eq!(display_word(&[0, 1, 0]), "(1,2,1)");
    }
}
