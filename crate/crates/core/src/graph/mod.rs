//! Influence graphs: simple digraphs with exact arc weights in `(0, 1]`.

mod closure;
mod scc;

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use num::{One, Signed};

use crate::error::{Error, Result};
use crate::rational::{format_rational, Rational};

pub use closure::{deterministic_closure, inverse_deterministic_closure, reachable};
pub use scc::{condensation, ArcFilter, CondensedDag};
pub(crate) use closure::{extend_mask, Direction};
pub(crate) use scc::condense_masked;

/// Dense index of a node, `0..n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub usize);

impl NodeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Node sets are kept ordered so that iteration, output and tie-breaking are
/// canonical.
pub type NodeSet = BTreeSet<NodeId>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    pub tail: NodeId,
    pub head: NodeId,
    pub weight: Rational,
}

impl Arc {
    pub fn is_deterministic(&self) -> bool {
        self.weight.is_one()
    }
}

/// A validated influence graph. Immutable once built.
#[derive(Debug, Clone)]
pub struct InfluenceGraph {
    labels: Vec<String>,
    label_index: HashMap<String, NodeId>,
    arcs: Vec<Arc>,
    out_arcs: Vec<Vec<usize>>,
    in_arcs: Vec<Vec<usize>>,
    probabilistic_arcs: Vec<usize>,
    probabilistic_tails: NodeSet,
}

impl PartialEq for InfluenceGraph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.arcs == other.arcs
    }
}

impl Eq for InfluenceGraph {}

/// Builds a graph from labelled arcs, validating every structural invariant.
pub fn build_graph<L, S, T>(node_labels: L, weighted_arcs: impl IntoIterator<Item = (S, T, Rational)>) -> Result<InfluenceGraph>
where
    L: IntoIterator,
    L::Item: Into<String>,
    S: AsRef<str>,
    T: AsRef<str>,
{
    let labels: Vec<String> = node_labels.into_iter().map(Into::into).collect();
    let mut label_index = HashMap::with_capacity(labels.len());
    for (i, label) in labels.iter().enumerate() {
        if label_index.insert(label.clone(), NodeId(i)).is_some() {
            return Err(Error::DuplicateLabel(label.clone()));
        }
    }
    let lookup = |label: &str| {
        label_index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    };
    let arcs = weighted_arcs
        .into_iter()
        .map(|(from, to, weight)| {
            Ok(Arc {
                tail: lookup(from.as_ref())?,
                head: lookup(to.as_ref())?,
                weight,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    InfluenceGraph::from_parts(labels, label_index, arcs)
}

impl InfluenceGraph {
    /// Builds a graph from index-based arcs; used by the generators.
    pub fn from_indexed(labels: Vec<String>, arcs: Vec<(usize, usize, Rational)>) -> Result<Self> {
        let n = labels.len();
        let mut label_index = HashMap::with_capacity(n);
        for (i, label) in labels.iter().enumerate() {
            if label_index.insert(label.clone(), NodeId(i)).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        let arcs = arcs
            .into_iter()
            .map(|(tail, head, weight)| {
                for end in [tail, head] {
                    if end >= n {
                        return Err(Error::UnknownLabel(format!("#{end}")));
                    }
                }
                Ok(Arc {
                    tail: NodeId(tail),
                    head: NodeId(head),
                    weight,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_parts(labels, label_index, arcs)
    }

    fn from_parts(labels: Vec<String>, label_index: HashMap<String, NodeId>, arcs: Vec<Arc>) -> Result<Self> {
        let n = labels.len();
        let mut seen = HashSet::with_capacity(arcs.len());
        let mut out_arcs = vec![Vec::new(); n];
        let mut in_arcs = vec![Vec::new(); n];
        let mut probabilistic_arcs = Vec::new();
        let mut probabilistic_tails = NodeSet::new();
        for (i, arc) in arcs.iter().enumerate() {
            let (from, to) = (&labels[arc.tail.0], &labels[arc.head.0]);
            if arc.tail == arc.head {
                return Err(Error::SelfLoop(from.clone()));
            }
            if !seen.insert((arc.tail, arc.head)) {
                return Err(Error::DuplicateArc {
                    from: from.clone(),
                    to: to.clone(),
                });
            }
            if !arc.weight.is_positive() || arc.weight > Rational::one() {
                return Err(Error::WeightOutOfRange {
                    from: from.clone(),
                    to: to.clone(),
                    weight: format_rational(&arc.weight),
                });
            }
            out_arcs[arc.tail.0].push(i);
            in_arcs[arc.head.0].push(i);
            if !arc.is_deterministic() {
                probabilistic_arcs.push(i);
                probabilistic_tails.insert(arc.tail);
            }
        }
        Ok(InfluenceGraph {
            labels,
            label_index,
            arcs,
            out_arcs,
            in_arcs,
            probabilistic_arcs,
            probabilistic_tails,
        })
    }

    /// Number of nodes `n`.
    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    /// Number of arcs `m`.
    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Number of probabilistic arcs `r`.
    pub fn probabilistic_arc_count(&self) -> usize {
        self.probabilistic_arcs.len()
    }

    pub fn nodes(&self) -> impl ExactSizeIterator<Item = NodeId> + '_ {
        (0..self.labels.len()).map(NodeId)
    }

    pub fn all_nodes(&self) -> NodeSet {
        self.nodes().collect()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, index: usize) -> &Arc {
        &self.arcs[index]
    }

    /// Indices of outgoing arcs of `node`, in insertion order.
    pub fn out_arcs(&self, node: NodeId) -> &[usize] {
        &self.out_arcs[node.0]
    }

    pub fn in_arcs(&self, node: NodeId) -> &[usize] {
        &self.in_arcs[node.0]
    }

    /// `E_p`: indices of arcs with weight strictly below one.
    pub fn probabilistic_arcs(&self) -> &[usize] {
        &self.probabilistic_arcs
    }

    /// `V_p`: tails of probabilistic arcs.
    pub fn probabilistic_tails(&self) -> &NodeSet {
        &self.probabilistic_tails
    }

    pub fn label(&self, node: NodeId) -> &str {
        &self.labels[node.0]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn node(&self, label: &str) -> Result<NodeId> {
        self.label_index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Resolves a list of labels to a node set.
    pub fn node_set<S: AsRef<str>>(&self, labels: impl IntoIterator<Item = S>) -> Result<NodeSet> {
        labels.into_iter().map(|l| self.node(l.as_ref())).collect()
    }

    pub fn set_labels(&self, set: &NodeSet) -> Vec<String> {
        set.iter().map(|&v| self.labels[v.0].clone()).collect()
    }

    pub fn is_deterministic(&self) -> bool {
        self.probabilistic_arcs.is_empty()
    }

    pub fn is_acyclic(&self) -> bool {
        condensation(self, ArcFilter::All, None).components.len() == self.node_count()
    }

    /// True when the underlying undirected graph is a tree.
    pub fn is_directed_tree(&self) -> bool {
        let n = self.node_count();
        if n == 0 || self.arcs.len() != n - 1 {
            return false;
        }
        // n - 1 arcs with no antiparallel pair: connected iff a tree
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for arc in &self.arcs {
            let (a, b) = (find(&mut parent, arc.tail.0), find(&mut parent, arc.head.0));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }

    /// Membership mask for a node set.
    pub fn mask(&self, set: &NodeSet) -> Vec<bool> {
        let mut mask = vec![false; self.node_count()];
        for v in set {
            mask[v.0] = true;
        }
        mask
    }
}

pub(crate) fn mask_to_set(mask: &[bool]) -> NodeSet {
    mask.iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(i, _)| NodeId(i))
        .collect()
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::rational::{from_int, ratio};

    #[test]
    fn example_graph_counts() {
        let g = example_graph();
        assert_eq!(g.node_count(), 4);
        assert_eq!(g.arc_count(), 6);
        assert_eq!(g.probabilistic_arc_count(), 5);
        let tails: Vec<_> = g.set_labels(g.probabilistic_tails());
        assert_eq!(tails, ["v1", "v2", "v4"]);
        assert!(!g.is_acyclic());
    }

    #[test]
    fn empty_arc_list() {
        let g = build_graph(["a", "b", "c"], Vec::<(&str, &str, Rational)>::new()).unwrap();
        assert_eq!(g.arc_count(), 0);
        assert_eq!(g.probabilistic_arc_count(), 0);
        assert!(g.is_acyclic());
    }

    #[test]
    fn invalid_graphs_get_distinct_errors() {
        let zero = build_graph(["a", "b"], [("a", "b", from_int(0))]);
        assert!(matches!(zero, Err(Error::WeightOutOfRange { .. })));
        assert!(zero.unwrap_err().to_string().contains("weight out of range"));
        let big = build_graph(["a", "b"], [("a", "b", ratio(3, 2))]);
        assert!(matches!(big, Err(Error::WeightOutOfRange { .. })));
        let looped = build_graph(["a"], [("a", "a", from_int(1))]);
        assert!(matches!(looped, Err(Error::SelfLoop(_))));
        let dup = build_graph(["a", "b"], [("a", "b", from_int(1)), ("a", "b", ratio(1, 2))]);
        assert!(matches!(dup, Err(Error::DuplicateArc { .. })));
        let unknown = build_graph(["a"], [("a", "z", from_int(1))]);
        assert!(matches!(unknown, Err(Error::UnknownLabel(l)) if l == "z"));
        let twice = build_graph(["a", "a"], Vec::<(&str, &str, Rational)>::new());
        assert!(matches!(twice, Err(Error::DuplicateLabel(_))));
    }

    #[test]
    fn antiparallel_arcs_are_allowed() {
        let g = build_graph(["a", "b"], [("a", "b", from_int(1)), ("b", "a", from_int(1))]).unwrap();
        assert_eq!(g.arc_count(), 2);
    }

    #[test]
    fn tree_detection() {
        assert!(star_graph().is_directed_tree());
        assert!(chain(&["a", "b", "c"]).is_directed_tree());
        assert!(!example_graph().is_directed_tree());
        let forest = build_graph(["a", "b", "c"], [("a", "b", from_int(1))]).unwrap();
        assert!(!forest.is_directed_tree());
    }
}
