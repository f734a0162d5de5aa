/// Disjoint sets over `0..len` with path compression and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(len: usize) -> Self {
        UnionFind {
            parent: (0..len).collect(),
            size: vec![1; len],
        }
    }

    pub fn find(&mut self, id: usize) -> usize {
        let mut root = id;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut id = id;
        while self.parent[id] != root {
            let next = self.parent[id];
            self.parent[id] = root;
            id = next;
        }
        root
    }

    /// Returns false if `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (big, small) = if self.size[ra] >= self.size[rb] { (ra, rb) } else { (rb, ra) };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        true
    }

    /// Component number of every element, numbered by first occurrence.
    pub fn labels(&mut self) -> (Vec<usize>, usize) {
        let mut numbering = vec![usize::MAX; self.parent.len()];
        let mut count = 0;
        let mut out = Vec::with_capacity(self.parent.len());
        for i in 0..self.parent.len() {
            let root = self.find(i);
            if numbering[root] == usize::MAX {
                numbering[root] = count;
                count += 1;
            }
            out.push(numbering[root]);
        }
        (out, count)
    }
}
