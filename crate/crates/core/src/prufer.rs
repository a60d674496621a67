//! Prüfer words: the bijection between labelled trees on `0..n` and words of
//! length `n - 2` over `0..n`, using the smallest-leaf-first rule.

use thiserror::Error;

use crate::graph::Vertex;
use crate::tree::{DegreeTree, TreeError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PruferError {
    #[error("a tree needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("word of length {len} cannot describe a tree on {n} vertices")]
    WrongLength { len: usize, n: usize },
    #[error("word entry {entry} at position {position} is out of range [0, {n})")]
    OutOfRange {
        position: usize,
        entry: Vertex,
        n: usize,
    },
    #[error("not a tree: {0}")]
    NotATree(#[from] TreeError),
}

fn check_word(word: &[Vertex], n: usize) -> Result<(), PruferError> {
    if n < 2 {
        return Err(PruferError::TooFewVertices(n));
    }
    if word.len() != n - 2 {
        return Err(PruferError::WrongLength { len: word.len(), n });
    }
    if let Some((position, &entry)) = word.iter().enumerate().find(|(_, &x)| x >= n) {
        return Err(PruferError::OutOfRange { position, entry, n });
    }
    Ok(())
}

/// Decodes `word`, offering each edge to `accept` as it is produced. Returns
/// `None` as soon as `accept` rejects an edge.
///
/// `degree` is scratch space of length `n`; `word` must already be valid.
pub(crate) fn decode_filtered<F>(
    word: &[Vertex],
    n: usize,
    degree: &mut [usize],
    edges: &mut Vec<(Vertex, Vertex)>,
    mut accept: F,
) -> bool
where
    F: FnMut(Vertex, Vertex) -> bool,
{
    edges.clear();
    degree.iter_mut().for_each(|d| *d = 1);
    for &x in word {
        degree[x] += 1;
    }
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &x in word {
        if !accept(leaf, x) {
            return false;
        }
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    if !accept(leaf, n - 1) {
        return false;
    }
    edges.push((leaf, n - 1));
    true
}

/// The unique labelled tree whose Prüfer word is `word`.
pub fn decode(word: &[Vertex], n: usize) -> Result<DegreeTree, PruferError> {
    check_word(word, n)?;
    let mut degree = vec![0; n];
    let mut edges = Vec::with_capacity(n - 1);
    decode_filtered(word, n, &mut degree, &mut edges, |_, _| true);
    Ok(DegreeTree::from_edges(n, edges)?)
}

/// The Prüfer word of `tree`.
pub fn encode(tree: &DegreeTree) -> Result<Vec<Vertex>, PruferError> {
    let n = tree.n();
    if n < 2 {
        return Err(PruferError::TooFewVertices(n));
    }
    tree.check_tree()?;
    // Root at n - 1 so that every other vertex has a parent.
    let mut parent = vec![usize::MAX; n];
    let mut stack = vec![n - 1];
    while let Some(v) = stack.pop() {
        for &w in tree.neighbors(v) {
            if w != parent[v] {
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let mut degree = tree.degrees();
    let mut word = Vec::with_capacity(n - 2);
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for _ in 0..n - 2 {
        let next = parent[leaf];
        word.push(next);
        degree[next] -= 1;
        if degree[next] == 1 && next < ptr {
            leaf = next;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn base_case() {
        let t = decode(&[], 2).unwrap();
        assert_eq!(t.edges(), vec![(0, 1)]);
        assert_eq!(encode(&t).unwrap(), Vec::<Vertex>::new());
    }

    #[test]
    fn star() {
        let t = decode(&[0, 0], 4).unwrap();
        assert_eq!(t.edges(), vec![(0, 1), (0, 2), (0, 3)]);
        assert_eq!(encode(&t).unwrap(), vec![0, 0]);
    }

    #[test]
    fn hand_decoded_word() {
        // Leaves 0, 1, 2 hang off 3; then 3 attaches to 4; the last edge is 4-5.
        let t = decode(&[3, 3, 3, 4], 6).unwrap();
        assert_eq!(t.edges(), vec![(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]);
        assert_eq!(t.degrees(), vec![1, 1, 1, 4, 2, 1]);
    }

    #[test]
    fn roundtrip_example() {
        let t = decode(&[2, 1, 2], 5).unwrap();
        assert_eq!(encode(&t).unwrap(), vec![2, 1, 2]);
    }

    #[test]
    fn errors() {
        assert_eq!(
            decode(&[4], 3),
            Err(PruferError::OutOfRange { position: 0, entry: 4, n: 3 })
        );
        assert_eq!(decode(&[0], 4), Err(PruferError::WrongLength { len: 1, n: 4 }));
        assert_eq!(decode(&[], 1), Err(PruferError::TooFewVertices(1)));
        let forest = DegreeTree::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(encode(&forest), Err(PruferError::NotATree(_))));
        let cycle = DegreeTree::from_edges(4, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(matches!(encode(&cycle), Err(PruferError::NotATree(_))));
    }

    #[test]
    fn early_rejection_stops_decoding() {
        let mut degree = vec![0; 6];
        let mut edges = Vec::new();
        let mut seen = 0;
        let ok = decode_filtered(&[3, 3, 3, 4], 6, &mut degree, &mut edges, |_, _| {
            seen += 1;
            seen < 2
        });
        assert!(!ok);
        assert_eq!(seen, 2);
    }

    proptest! {
        #[test]
        fn decode_then_encode_is_identity(
            (n, word) in (2usize..40).prop_flat_map(|n| (Just(n), prop::collection::vec(0..n, n - 2)))
        ) {
            let t = decode(&word, n).unwrap();
            prop_assert!(t.is_tree());
            for v in 0..n {
                let mult = word.iter().filter(|&&x| x == v).count();
                prop_assert_eq!(t.degree(v), mult + 1);
            }
            prop_assert_eq!(encode(&t).unwrap(), word);
        }
    }
}
