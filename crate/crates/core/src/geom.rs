//! Leaf-block geometry for one plane: which transform block covers
//! each pixel, at 4x4 cell granularity.

/// Recursive quadtree split of a square area. Children are in
/// z-order: top-left, top-right, bottom-left, bottom-right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitTree {
    Leaf,
    Split(Box<[SplitTree; 4]>),
}

impl SplitTree {
    /// Leaves in z-order as (x, y, size) relative to the tree origin.
    pub fn leaves(&self, size: usize) -> Vec<Leaf> {
        let mut out = Vec::new();
        self.walk(0, 0, size, &mut out);
        out
    }

    fn walk(&self, x: usize, y: usize, size: usize, out: &mut Vec<Leaf>) {
        match self {
            SplitTree::Leaf => out.push(Leaf { x, y, size }),
            SplitTree::Split(children) => {
                let half = size / 2;
                children[0].walk(x, y, half, out);
                children[1].walk(x + half, y, half, out);
                children[2].walk(x, y + half, half, out);
                children[3].walk(x + half, y + half, half, out);
            }
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            SplitTree::Leaf => 1,
            SplitTree::Split(c) => c.iter().map(|t| t.leaf_count()).sum(),
        }
    }
}

/// Transform block sizes supported by the codec.
pub const BLOCK_SIZES: [usize; 5] = [4, 8, 16, 32, 64];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Leaf {
    pub x: usize,
    pub y: usize,
    pub size: usize,
}

/// Tiling of a plane by transform blocks.
#[derive(Clone, Debug)]
pub struct BlockGrid {
    width: usize,
    height: usize,
    cells_w: usize,
    /// Per 4x4 cell: origin of the covering leaf.
    origin: Vec<(u32, u32)>,
    /// Per 4x4 cell: log2 of the covering leaf size.
    size_log: Vec<u8>,
    leaves: Vec<Leaf>,
}

impl BlockGrid {
    pub fn new(width: usize, height: usize) -> Self {
        assert!(width % 4 == 0 && height % 4 == 0);
        let cells_w = width / 4;
        BlockGrid {
            width,
            height,
            cells_w,
            origin: vec![(0, 0); cells_w * (height / 4)],
            size_log: vec![0; cells_w * (height / 4)],
            leaves: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn add_leaf(&mut self, x: usize, y: usize, size: usize) {
        debug_assert!(BLOCK_SIZES.contains(&size));
        debug_assert!(x % size == 0 && y % size == 0);
        debug_assert!(x + size <= self.width && y + size <= self.height);
        for cy in y / 4..(y + size) / 4 {
            for cx in x / 4..(x + size) / 4 {
                let i = cy * self.cells_w + cx;
                self.origin[i] = (x as u32, y as u32);
                self.size_log[i] = size.trailing_zeros() as u8;
            }
        }
        self.leaves.push(Leaf { x, y, size });
    }

    /// Leaf covering pixel (x, y).
    pub fn leaf_at(&self, x: usize, y: usize) -> Leaf {
        let i = (y / 4) * self.cells_w + x / 4;
        let (ox, oy) = self.origin[i];
        Leaf {
            x: ox as usize,
            y: oy as usize,
            size: 1usize << self.size_log[i],
        }
    }

    pub fn leaves(&self) -> &[Leaf] {
        &self.leaves
    }

    /// True if a block boundary separates columns x-1 and x on row y.
    pub fn vertical_edge(&self, x: usize, y: usize) -> bool {
        x > 0 && x < self.width && self.leaf_at(x, y).x == x
    }

    /// True if a block boundary separates rows y-1 and y on column x.
    pub fn horizontal_edge(&self, x: usize, y: usize) -> bool {
        y > 0 && y < self.height && self.leaf_at(x, y).y == y
    }
}
