//! Union-find with an undo stack: union by size, no path compression, so a
//! recorded history entry can be rolled back exactly.

#[derive(Clone)]
pub struct UndoUnionFind {
    parent: Vec<i32>,
    history: Vec<(usize, i32)>,
}

impl UndoUnionFind {
    pub fn new(n: usize) -> Self {
        UndoUnionFind {
            parent: vec![-1; n],
            history: Vec::new(),
        }
    }

    #[inline]
    pub fn find(&self, mut v: usize) -> usize {
        while self.parent[v] >= 0 {
            v = self.parent[v] as usize;
        }
        v
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    /// Marker for a later rollback.
    pub fn time(&self) -> usize {
        self.history.len()
    }

    /// Returns false (and records nothing) when a and b were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut x, mut y) = (self.find(a), self.find(b));
        if x == y {
            return false;
        }
        if self.parent[x] > self.parent[y] {
            std::mem::swap(&mut x, &mut y);
        }
        self.history.push((y, self.parent[y]));
        self.parent[x] += self.parent[y];
        self.parent[y] = x as i32;
        true
    }

    pub fn rollback(&mut self, t: usize) {
        while self.history.len() > t {
            let (v, old) = self.history.pop().unwrap();
            let p = self.parent[v] as usize;
            self.parent[p] -= old;
            self.parent[v] = old;
        }
    }
}
