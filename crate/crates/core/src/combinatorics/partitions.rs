/// Exponent sequence `(r_1, ..., r_len)` with `sum r_i = blocks` and
/// `sum i * r_i = elements`; indexes the multiset of block sizes of a set
/// partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RVector {
    entries: Vec<usize>,
    blocks: usize,
    elements: usize,
}

impl RVector {
    /// `entries[i - 1]` is `r_i`.
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// `r_i` for 1-based `i`; zero beyond the stored length.
    pub fn r(&self, i: usize) -> usize {
        self.entries.get(i - 1).copied().unwrap_or(0)
    }

    pub fn blocks(&self) -> usize {
        self.blocks
    }

    pub fn elements(&self) -> usize {
        self.elements
    }
}

/// Weak composition `(j_1, ..., j_k)` of `total`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
    total: usize,
}

impl Composition {
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.total
    }
}

/// All `RVector`s of length `len` with `blocks` blocks over `elements`
/// elements, in lexicographic order.
pub fn partition_sequences(elements: usize, blocks: usize, len: usize) -> Vec<RVector> {
    let mut out = Vec::new();
    let mut current = vec![0; len];
    fill_partition(1, elements, blocks, &mut current, &mut out, elements, blocks);
    out
}

fn fill_partition(
    index: usize,
    elements_left: usize,
    blocks_left: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<RVector>,
    elements: usize,
    blocks: usize,
) {
    let len = current.len();
    if index > len {
        if elements_left == 0 && blocks_left == 0 {
            out.push(RVector {
                entries: current.clone(),
                blocks,
                elements,
            });
        }
        return;
    }
    // every remaining block uses between `index` and `len` elements
    if blocks_left * index > elements_left || blocks_left * len < elements_left {
        return;
    }
    let max_here = blocks_left.min(elements_left / index);
    for r in 0..=max_here {
        current[index - 1] = r;
        fill_partition(
            index + 1,
            elements_left - r * index,
            blocks_left - r,
            current,
            out,
            elements,
            blocks,
        );
    }
    current[index - 1] = 0;
}

/// All weak compositions of `total` into `parts` parts, lexicographic.
pub fn compositions(total: usize, parts: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Composition { parts: vec![], total });
        }
        return out;
    }
    let mut current = vec![0; parts];
    fill_composition(0, total, &mut current, &mut out, total);
    out
}

fn fill_composition(
    pos: usize,
    left: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Composition>,
    total: usize,
) {
    if pos + 1 == current.len() {
        current[pos] = left;
        out.push(Composition {
            parts: current.clone(),
            total,
        });
        return;
    }
    for j in 0..=left {
        current[pos] = j;
        fill_composition(pos + 1, left - j, current, out, total);
    }
}
