//! Small dense integer max-flow (Edmonds–Karp), enough for the order-class
//! assignment graphs, which have at most a few dozen nodes.

pub struct FlowNetwork {
    n: usize,
    capacity: Vec<u64>,
}

impl FlowNetwork {
    pub fn new(n: usize) -> Self {
        FlowNetwork {
            n,
            capacity: vec![0; n * n],
        }
    }

    pub fn add_edge(&mut self, from: usize, to: usize, cap: u64) {
        self.capacity[from * self.n + to] += cap;
    }

    /// Maximum flow from `source` to `sink`.
    pub fn max_flow(&mut self, source: usize, sink: usize) -> u64 {
        let n = self.n;
        let mut total = 0u64;
        loop {
            // BFS for a shortest augmenting path.
            let mut parent = vec![usize::MAX; n];
            parent[source] = source;
            let mut queue = std::collections::VecDeque::from([source]);
            while let Some(u) = queue.pop_front() {
                if u == sink {
                    break;
                }
                for v in 0..n {
                    if parent[v] == usize::MAX && self.capacity[u * n + v] > 0 {
                        parent[v] = u;
                        queue.push_back(v);
                    }
                }
            }
            if parent[sink] == usize::MAX {
                return total;
            }
            let mut bottleneck = u64::MAX;
            let mut v = sink;
            while v != source {
                let u = parent[v];
                bottleneck = bottleneck.min(self.capacity[u * n + v]);
                v = u;
            }
            let mut v = sink;
            while v != source {
                let u = parent[v];
                self.capacity[u * n + v] -= bottleneck;
                self.capacity[v * n + u] += bottleneck;
                v = u;
            }
            total += bottleneck;
        }
    }
}
