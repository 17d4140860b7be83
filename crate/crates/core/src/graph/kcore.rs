use super::Graph;

/// Coreness per node, indexed by node id.
pub type CorenessMap = Vec<u32>;

/// k-core decomposition by bucket peeling (Batagelj and Zaversnik), O(N + E).
pub fn coreness(g: &Graph) -> CorenessMap {
    let n = g.node_count();
    if n == 0 {
        return Vec::new();
    }
    let mut degree: Vec<usize> = g.degrees();
    let max_degree = degree.iter().copied().max().unwrap_or(0);

    // bin[d] = start of the block of nodes with current degree d in `order`
    let mut bin = vec![0usize; max_degree + 1];
    for &d in &degree {
        bin[d] += 1;
    }
    let mut start = 0;
    for slot in bin.iter_mut() {
        let count = *slot;
        *slot = start;
        start += count;
    }
    let mut order = vec![0usize; n];
    let mut position = vec![0usize; n];
    {
        let mut next = bin.clone();
        for v in 0..n {
            position[v] = next[degree[v]];
            order[position[v]] = v;
            next[degree[v]] += 1;
        }
    }

    for i in 0..n {
        let v = order[i];
        for &u in g.neighbors(v) {
            if degree[u] > degree[v] {
                // move u to the front of its block, then shrink the block
                let du = degree[u];
                let pu = position[u];
                let pw = bin[du];
                let w = order[pw];
                if u != w {
                    order.swap(pu, pw);
                    position[u] = pw;
                    position[w] = pu;
                }
                bin[du] += 1;
                degree[u] -= 1;
            }
        }
    }
    degree.into_iter().map(|d| d as u32).collect()
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn isolated_node_has_zero_coreness() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(coreness(&g), vec![1, 1, 0]);
    }

    #[test]
    fn triangle_with_pendant() {
        assert_eq!(coreness(&triangle_pendant()), vec![2, 2, 2, 1]);
    }

    #[test]
    fn complete_graph() {
        assert_eq!(coreness(&complete(5)), vec![4; 5]);
    }

    #[test]
    fn empty_graph() {
        assert!(coreness(&Graph::empty()).is_empty());
    }
}
