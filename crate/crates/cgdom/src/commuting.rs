//! Group-derived graphs: the commuting graph, its proper version, and the
//! (proper) enhanced power graph.

use crate::graph::SimpleGraph;
use crate::group::GroupTable;
use crate::mask::SubsetMask;

/// Vertex i is element i; two distinct elements are adjacent iff they commute.
/// The dominating vertices of the result are exactly the center.
pub fn commuting_graph(g: &GroupTable) -> SimpleGraph {
    let n = g.order();
    let mut graph = SimpleGraph::edgeless(n, format!("commuting({})", g.descriptor()));
    for x in 0..n {
        for y in x + 1..n {
            if g.commutes(x, y) {
                graph.add_edge(x, y);
            }
        }
    }
    graph.set_labels((0..n).map(|x| g.label(x).into_owned()).collect());
    graph
}

/// The commuting graph induced on the noncentral elements. Abelian groups
/// yield the empty graph. The second component maps each vertex back to its
/// element index in `g`; labels carry the element labels as well.
pub fn proper_commuting_graph(g: &GroupTable) -> (SimpleGraph, Vec<usize>) {
    let center = g.center();
    let keep = center.complement();
    let elements: Vec<usize> = keep.iter().collect();
    let mut graph = commuting_graph(g).induced_subgraph(&keep);
    graph.set_provenance(format!("proper-commuting({})", g.descriptor()));
    (graph, elements)
}

/// x ~ y iff the subgroup generated by the pair is cyclic, equivalently iff
/// some cyclic subgroup contains both. Built from the per-element cyclic
/// subgroup masks: row(x) = union of ⟨w⟩ over all w with x in ⟨w⟩.
pub fn enhanced_power_graph(g: &GroupTable) -> SimpleGraph {
    let n = g.order();
    let mut rows = vec![SubsetMask::empty(n); n];
    for w in 0..n {
        let cyc = g.cyclic_subgroup(w);
        for x in cyc.iter() {
            rows[x].union_with(&cyc);
        }
    }
    let mut graph = SimpleGraph::edgeless(n, format!("epg({})", g.descriptor()));
    for x in 0..n {
        for y in rows[x].iter() {
            if y > x {
                graph.add_edge(x, y);
            }
        }
    }
    graph.set_labels((0..n).map(|x| g.label(x).into_owned()).collect());
    graph
}

/// The enhanced power graph minus its dominating vertices — the dominating
/// vertices of the EPG itself, not the group center.
pub fn proper_enhanced_power_graph(g: &GroupTable) -> (SimpleGraph, Vec<usize>) {
    let epg = enhanced_power_graph(g);
    let dom = epg.dominating_vertices();
    let keep = dom.complement();
    let elements: Vec<usize> = keep.iter().collect();
    let mut graph = epg.induced_subgraph(&keep);
    graph.set_provenance(format!("proper-epg({})", g.descriptor()));
    (graph, elements)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::DEFAULT_GRAPH_CAP;
    use crate::group::DEFAULT_GROUP_CAP as CAP;
    use crate::group::GroupTable;

    #[test]
    fn abelian_commuting_graph_is_complete() {
        let g = commuting_graph(&families::cyclic(7, CAP).unwrap());
        assert!(g.is_complete());
    }

    #[test]
    fn commuting_graph_dom_is_center() {
        for g in [
            families::symmetric(3, CAP).unwrap(),
            families::dihedral(12, CAP).unwrap(),
            families::generalized_quaternion(16, CAP).unwrap(),
            families::heisenberg(3, CAP).unwrap(),
        ] {
            let cg = commuting_graph(&g);
            assert_eq!(cg.dominating_vertices(), g.center(), "{}", g.descriptor());
        }
    }

    #[test]
    fn s3_proper_graph_shape() {
        let s3 = families::symmetric(3, CAP).unwrap();
        let (p, elements) = proper_commuting_graph(&s3);
        assert_eq!(p.vertex_count(), 5);
        assert_eq!(p.edge_count(), 1);
        let comps = p.connected_components();
        let mut sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 1, 2]);
        // labels map back to original elements injectively
        assert_eq!(elements.len(), 5);
        for (v, &x) in elements.iter().enumerate() {
            assert_eq!(p.label(v), s3.label(x).into_owned());
        }
    }

    #[test]
    fn q8_and_d8_proper_graphs_are_three_disjoint_edges() {
        for g in [
            families::generalized_quaternion(8, CAP).unwrap(),
            families::dihedral(8, CAP).unwrap(),
        ] {
            let (p, _) = proper_commuting_graph(&g);
            assert_eq!(p.vertex_count(), 6);
            assert_eq!(p.edge_count(), 3);
            assert_eq!(p.connected_components().len(), 3);
        }
    }

    #[test]
    fn product_commuting_graph_is_strong_product() {
        let pairs = [
            (families::cyclic(2, CAP).unwrap(), families::symmetric(3, CAP).unwrap()),
            (families::symmetric(3, CAP).unwrap(), families::symmetric(3, CAP).unwrap()),
            (families::dihedral(8, CAP).unwrap(), families::cyclic(3, CAP).unwrap()),
        ];
        for (a, b) in pairs {
            let prod = GroupTable::direct_product(&a, &b, CAP).unwrap();
            let lhs = commuting_graph(&prod);
            let rhs = SimpleGraph::strong_product(
                &commuting_graph(&a),
                &commuting_graph(&b),
                DEFAULT_GRAPH_CAP,
            )
            .unwrap();
            assert!(lhs.same_adjacency(&rhs), "{}", prod.descriptor());
        }
    }

    #[test]
    fn epg_cyclic_is_complete() {
        assert!(enhanced_power_graph(&families::cyclic(9, CAP).unwrap()).is_complete());
        let (p, _) = proper_enhanced_power_graph(&families::cyclic(9, CAP).unwrap());
        assert_eq!(p.vertex_count(), 0);
    }

    #[test]
    fn epg_elementary_abelian_adjacency() {
        let g = families::abelian_product(&[3, 3], CAP).unwrap();
        let epg = enhanced_power_graph(&g);
        for x in 0..9 {
            for y in 0..9 {
                if x != y {
                    let expected = g.cyclic_subgroup(x).contains(y) || g.cyclic_subgroup(y).contains(x);
                    assert_eq!(epg.has_edge(x, y), expected);
                }
            }
        }
        let (p, _) = proper_enhanced_power_graph(&g);
        assert_eq!(p.vertex_count(), 8);
        let comps = p.connected_components();
        assert_eq!(comps.len(), 4);
        assert!(comps.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn s3_epg_equals_commuting_graph() {
        let s3 = families::symmetric(3, CAP).unwrap();
        assert!(enhanced_power_graph(&s3).same_adjacency(&commuting_graph(&s3)));
    }

    #[test]
    fn epg_is_subgraph_of_commuting_graph() {
        for g in [
            families::symmetric(4, CAP).unwrap(),
            families::generalized_quaternion(16, CAP).unwrap(),
            families::heisenberg(3, CAP).unwrap(),
            families::abelian_product(&[2, 4], CAP).unwrap(),
        ] {
            let epg = enhanced_power_graph(&g);
            let cg = commuting_graph(&g);
            for x in 0..g.order() {
                assert!(epg.neighbors(x).is_subset_of(cg.neighbors(x)), "{}", g.descriptor());
            }
        }
    }

    #[test]
    fn proper_epg_gamma_of_elementary_products() {
        use crate::domination::{exact_domination_number, Budget};
        let budget = Budget::unlimited();
        // the number of order-3 subgroups of Z3 x Z3 is 4
        let g1 = families::abelian_product(&[3, 3], CAP).unwrap();
        let (p, _) = proper_enhanced_power_graph(&g1);
        assert_eq!(exact_domination_number(&p, &budget).value, Some(4));
        // for a product of p-groups the count is the min over the primes:
        // 4 order-3 subgroups vs 6 order-5 subgroups
        let g2 = families::abelian_product(&[5, 5], CAP).unwrap();
        let g = GroupTable::direct_product(&g1, &g2, CAP).unwrap();
        let (p, _) = proper_enhanced_power_graph(&g);
        assert_eq!(p.vertex_count(), 224);
        assert_eq!(exact_domination_number(&p, &budget).value, Some(4));
    }

    #[test]
    fn isolated_vertices_match_order2_centralizers() {
        for g in [
            families::symmetric(3, CAP).unwrap(),
            families::dihedral(10, CAP).unwrap(),
            families::generalized_quaternion(8, CAP).unwrap(),
            families::symmetric(4, CAP).unwrap(),
        ] {
            let (p, elements) = proper_commuting_graph(&g);
            let isolated: Vec<usize> = p.isolated_vertices().iter().map(|v| elements[v]).collect();
            let expected: Vec<usize> = (0..g.order()).filter(|&x| g.centralizer(x).len() == 2).collect();
            assert_eq!(isolated, expected, "{}", g.descriptor());
        }
    }
}
