use serde::Serialize;

use crate::chromatic::Coloring;

/// A contiguous block of colour ids `base..base + width`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Palette {
    pub label: String,
    pub base: usize,
    pub width: usize,
}

/// A colouring assembled from disjoint palettes. A vertex keeps the colour
/// of the first palette that reaches it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaletteColoring {
    pub coloring: Coloring,
    pub palettes: Vec<Palette>,
}

impl PaletteColoring {
    pub fn new(n: usize) -> Self {
        PaletteColoring {
            coloring: Coloring::empty(n),
            palettes: Vec::new(),
        }
    }

    /// First colour id not yet allocated to a palette.
    pub fn span(&self) -> usize {
        self.palettes.last().map_or(0, |p| p.base + p.width)
    }

    /// Number of distinct colours actually used.
    pub fn color_count(&self) -> usize {
        self.coloring.color_count()
    }

    /// Adds `sub` as one fresh palette; its colours are renumbered densely.
    pub fn push(&mut self, label: impl Into<String>, sub: &Coloring) -> usize {
        let fresh = self.fresh_part(sub).normalized();
        let width = fresh.color_count();
        self.push_layout(vec![(label.into(), width)], &fresh);
        width
    }

    /// Adds several consecutive palettes at once. `sub` uses colour ids
    /// relative to the start of the layout.
    pub fn push_layout(&mut self, parts: Vec<(String, usize)>, sub: &Coloring) {
        let start = self.span();
        let mut base = start;
        for (label, width) in parts {
            self.palettes.push(Palette { label, base, width });
            base += width;
        }
        debug_assert!(sub.colored().all(|(_, c)| start + c < base.max(start + 1)));
        for (v, c) in self.fresh_part(sub).colored() {
            self.coloring.set(v, start + c);
        }
    }

    /// Gives every still-uncoloured vertex of `vertices` its own colour.
    pub fn push_private(
        &mut self,
        label: impl Into<String>,
        vertices: impl IntoIterator<Item = usize>,
    ) {
        let mut sub = Coloring::empty(self.coloring.n());
        let mut width = 0;
        for v in vertices {
            if !self.coloring.is_colored(v) && !sub.is_colored(v) {
                sub.set(v, width);
                width += 1;
            }
        }
        self.push_layout(vec![(label.into(), width)], &sub);
    }

    /// Embeds another palette colouring after the current palettes.
    pub fn absorb(&mut self, prefix: &str, other: &PaletteColoring) {
        let parts = other
            .palettes
            .iter()
            .map(|p| (format!("{prefix}/{}", p.label), p.width))
            .collect();
        self.push_layout(parts, &other.coloring);
    }

    fn fresh_part(&self, sub: &Coloring) -> Coloring {
        let mut fresh = Coloring::empty(self.coloring.n());
        for (v, c) in sub.colored() {
            if !self.coloring.is_colored(v) {
                fresh.set(v, c);
            }
        }
        fresh
    }
}
