use crate::bits::bit_iter;

/// A labelled bipartite graph with at most 128 left nodes.
/// `adj[r]` is the set of left neighbours of right node r.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartite {
    pub left: Vec<String>,
    pub right: Vec<String>,
    pub adj: Vec<u128>,
}

impl Bipartite {
    pub fn new(left: Vec<String>, right: Vec<String>, adj: Vec<u128>) -> Self {
        assert!(left.len() <= 128, "at most 128 left nodes");
        assert_eq!(right.len(), adj.len());
        Bipartite { left, right, adj }
    }

    pub fn from_edges(left: Vec<String>, right: Vec<String>, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![0u128; right.len()];
        for &(l, r) in edges {
            adj[r] |= 1 << l;
        }
        Self::new(left, right, adj)
    }

    pub fn num_left(&self) -> usize {
        self.left.len()
    }

    pub fn num_right(&self) -> usize {
        self.right.len()
    }

    /// (left, right) pairs in left-major order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for (r, &m) in self.adj.iter().enumerate() {
            out.extend(bit_iter(m).map(|l| (l, r)));
        }
        out.sort();
        out
    }

    pub fn right_of(&self, l: usize) -> Vec<usize> {
        (0..self.adj.len()).filter(|&r| self.adj[r] >> l & 1 == 1).collect()
    }

    pub fn edge_labels(&self) -> Vec<(String, String)> {
        self.edges()
            .into_iter()
            .map(|(l, r)| (self.left[l].clone(), self.right[r].clone()))
            .collect()
    }
}
