//! Basic-block cache for dynamic translation: the decoder's result is
//! stored so re-executing the same addresses pays no decode cost. A block is
//! a run of decoded instructions ending at the first terminator (or at the
//! block-size/page bound), and is invalidated before its next execution if
//! any write touched its address range since it was decoded.

use std::collections::HashMap;
use std::rc::Rc;

/// Upper bound on instructions per block; bounded blocks keep invalidation
/// and limit accounting simple.
pub const MAX_BLOCK_INSNS: usize = 256;

/// Blocks never span a page boundary.
pub const BLOCK_PAGE: u32 = 4096;

#[derive(Debug, Clone)]
pub struct Block<I> {
    pub start: u32,
    /// Exclusive byte end.
    pub end: u32,
    pub instrs: Rc<Vec<I>>,
    /// Memory write epoch when the block was decoded.
    pub epoch: u64,
}

#[derive(Debug, Default)]
pub struct BlockCache<I> {
    blocks: HashMap<u32, Block<I>>,
    pub hits: u64,
    pub misses: u64,
    pub invalidations: u64,
}

impl<I> BlockCache<I> {
    pub fn new() -> Self {
        BlockCache {
            blocks: HashMap::new(),
            hits: 0,
            misses: 0,
            invalidations: 0,
        }
    }

    /// Fetch a block if present and not stale. `range_epoch` reports the
    /// latest write epoch over a byte range.
    pub fn lookup(&mut self, start: u32, range_epoch: impl Fn(u32, u32) -> u64) -> Option<&Block<I>> {
        let stale = match self.blocks.get(&start) {
            Some(b) => range_epoch(b.start, b.end) > b.epoch,
            None => {
                self.misses += 1;
                return None;
            }
        };
        if stale {
            self.blocks.remove(&start);
            self.invalidations += 1;
            self.misses += 1;
            None
        } else {
            self.hits += 1;
            self.blocks.get(&start)
        }
    }

    pub fn insert(&mut self, block: Block<I>) -> &Block<I> {
        let start = block.start;
        self.blocks.insert(start, block);
        &self.blocks[&start]
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn clear(&mut self) {
        self.blocks.clear();
    }
}
