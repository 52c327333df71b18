use crate::graph::{BitGraph, Graph};

use super::clique::CliqueSearch;
use super::{IndependentSetCert, Optimality, SearchError, SearchLimits};

/// Maximum independent set by clique search in the complement.
///
/// For vertex-transitive graphs vertex 0 is fixed in the solution. On budget
/// exhaustion the error carries the best size found and the trivial upper
/// bound.
pub fn max_independent_set_exact<G: Graph + ?Sized>(
    g: &G,
    limits: SearchLimits,
) -> Result<IndependentSetCert, SearchError> {
    let order = g.order();
    if order > limits.vertex_limit {
        return Err(SearchError::SizeOverLimit {
            order,
            limit: limits.vertex_limit,
        });
    }
    if order == 0 {
        return Ok(IndependentSetCert::new(0, vec![], Optimality::Exact));
    }
    let explicit = BitGraph::materialize(g, limits.vertex_limit).expect("size checked");
    let complement = explicit.complement();
    let search = CliqueSearch::new(&complement, None).node_limit(limits.node_limit);
    let out = if g.is_vertex_transitive() {
        search.run(&[0])
    } else {
        search.run(&[])
    };
    if !out.complete {
        return Err(SearchError::BudgetExhausted {
            lower: out.clique.len(),
            upper: order,
        });
    }
    Ok(IndependentSetCert::new(
        order,
        out.clique.into_iter().map(|v| v as u64).collect(),
        Optimality::Exact,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::confusion::{confusion_generators, CayleyGraph};
    use crate::graphcore::verify_independent_set;
    use crate::model::{BroadcastHypergraph, SideInfoGraph};

    #[test]
    fn c5_confusion_alpha_is_five() {
        let h = BroadcastHypergraph::from_side_info_graph(&SideInfoGraph::cycle(5).unwrap());
        let c = confusion_generators(&h, 1).unwrap();
        let cert = max_independent_set_exact(&c, SearchLimits::mis()).unwrap();
        assert_eq!(cert.len(), 5);
        assert!(verify_independent_set(&c, &cert).is_ok());
        // deterministic
        assert_eq!(max_independent_set_exact(&c, SearchLimits::mis()).unwrap(), cert);
    }

    #[test]
    fn edgeless_takes_everything() {
        let c = CayleyGraph::edgeless(4);
        assert_eq!(max_independent_set_exact(&c, SearchLimits::mis()).unwrap().len(), 16);
    }

    #[test]
    fn refuses_large_graphs() {
        let c = CayleyGraph::edgeless(15);
        assert!(matches!(
            max_independent_set_exact(&c, SearchLimits::mis()),
            Err(SearchError::SizeOverLimit { .. })
        ));
    }

    #[test]
    fn non_transitive_graph() {
        // star K_{1,4}: alpha = 4
        let g = BitGraph::from_edges(5, (1..5).map(|i| (0, i)));
        assert_eq!(max_independent_set_exact(&g, SearchLimits::mis()).unwrap().len(), 4);
    }
}
