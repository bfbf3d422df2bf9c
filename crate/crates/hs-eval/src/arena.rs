//! Indexed form of an HS formula, so memo keys are (node id, interval).
//! Atoms are resolved to label-mask bits up front; atoms outside AP are
//! false everywhere.

use kripke_model::Kripke;
use logic_core::{HsFormula, Polarity, Rel};

pub(crate) type NodeId = u32;

#[derive(Debug, Clone, Copy)]
pub(crate) enum Node {
    Atom(Option<usize>),
    True,
    Not(NodeId),
    And(NodeId, NodeId),
    Or(NodeId, NodeId),
    Implies(NodeId, NodeId),
    Modal(Rel, Polarity, NodeId),
}

pub(crate) struct Arena {
    pub nodes: Vec<Node>,
    pub root: NodeId,
}

impl Arena {
    pub fn build(f: &HsFormula, k: &Kripke) -> Arena {
        let mut nodes = Vec::new();
        let root = intern(f, k, &mut nodes);
        Arena { nodes, root }
    }

    pub fn node(&self, id: NodeId) -> Node {
        self.nodes[id as usize]
    }
}

fn intern(f: &HsFormula, k: &Kripke, nodes: &mut Vec<Node>) -> NodeId {
    let node = match f {
        HsFormula::Atom(a) => Node::Atom(k.atom_index(a)),
        HsFormula::True => Node::True,
        HsFormula::Not(a) => Node::Not(intern(a, k, nodes)),
        HsFormula::And(a, b) => Node::And(intern(a, k, nodes), intern(b, k, nodes)),
        HsFormula::Or(a, b) => Node::Or(intern(a, k, nodes), intern(b, k, nodes)),
        HsFormula::Implies(a, b) => Node::Implies(intern(a, k, nodes), intern(b, k, nodes)),
        HsFormula::Modal(r, pol, a) => Node::Modal(*r, *pol, intern(a, k, nodes)),
    };
    nodes.push(node);
    (nodes.len() - 1) as NodeId
}
