//! Diagram isomorphism and canonical forms.
//!
//! `isomorphic` is a direct backtracking search over atom bijections.
//! `canonical_form` is computed independently by individualisation and
//! refinement on the atom/block incidence graph, taking the minimum leaf
//! code and pruning subtrees equivalent under automorphisms found so far.

use std::collections::HashSet;

use super::GreechieDiagram;

/// An atom bijection `map[source atom] = target atom` carrying blocks onto blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramIsomorphism {
    pub map: Vec<usize>,
}

impl DiagramIsomorphism {
    pub fn is_valid(&self, from: &GreechieDiagram, to: &GreechieDiagram) -> bool {
        if self.map.len() != from.atom_count() || from.atom_count() != to.atom_count() {
            return false;
        }
        let mut seen = vec![false; to.atom_count()];
        for &t in &self.map {
            if t >= seen.len() || std::mem::replace(&mut seen[t], true) {
                return false;
            }
        }
        let target: HashSet<&Vec<usize>> = to.blocks().iter().collect();
        let images: HashSet<Vec<usize>> = from
            .blocks()
            .iter()
            .map(|b| {
                let mut img: Vec<usize> = b.iter().map(|&a| self.map[a]).collect();
                img.sort_unstable();
                img
            })
            .collect();
        images.len() == from.block_count()
            && from.block_count() == to.block_count()
            && images.iter().all(|b| target.contains(b))
    }

    pub fn labeled_pairs<'a>(
        &self,
        from: &'a GreechieDiagram,
        to: &'a GreechieDiagram,
    ) -> Vec<(&'a str, &'a str)> {
        self.map
            .iter()
            .enumerate()
            .map(|(s, &t)| (from.label(s), to.label(t)))
            .collect()
    }
}

type AtomInvariant = (usize, Vec<usize>);

fn atom_invariants(d: &GreechieDiagram) -> Vec<AtomInvariant> {
    (0..d.atom_count())
        .map(|a| {
            let mut nd: Vec<usize> = d.neighbours(a).iter().map(|&n| d.degree(n)).collect();
            nd.sort_unstable();
            (d.degree(a), nd)
        })
        .collect()
}

fn orthogonality_matrix(d: &GreechieDiagram) -> Vec<Vec<bool>> {
    let n = d.atom_count();
    let mut m = vec![vec![false; n]; n];
    for b in d.blocks() {
        for &x in b {
            for &y in b {
                if x != y {
                    m[x][y] = true;
                }
            }
        }
    }
    m
}

struct IsoSearch<'a> {
    order: Vec<usize>,
    anchors: Vec<Option<usize>>,
    closing_blocks: Vec<Vec<usize>>,
    inv1: Vec<AtomInvariant>,
    inv2: Vec<AtomInvariant>,
    orth1: Vec<Vec<bool>>,
    orth2: Vec<Vec<bool>>,
    d1: &'a GreechieDiagram,
    d2: &'a GreechieDiagram,
    blocks2: HashSet<Vec<usize>>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl IsoSearch<'_> {
    fn run(&mut self, k: usize) -> bool {
        if k == self.order.len() {
            return true;
        }
        let a = self.order[k];
        let candidates: Vec<usize> = match self.anchors[k] {
            Some(p) => self.d2.neighbours(self.map[p]),
            None => (0..self.d2.atom_count()).collect(),
        };
        for t in candidates {
            if self.used[t] || self.inv1[a] != self.inv2[t] {
                continue;
            }
            let consistent = self.order[..k]
                .iter()
                .all(|&p| self.orth1[a][p] == self.orth2[t][self.map[p]]);
            if !consistent {
                continue;
            }
            self.map[a] = t;
            let blocks_ok = self.closing_blocks[k].iter().all(|&b| {
                let mut img: Vec<usize> =
                    self.d1.blocks()[b].iter().map(|&x| self.map[x]).collect();
                img.sort_unstable();
                self.blocks2.contains(&img)
            });
            if !blocks_ok {
                continue;
            }
            self.used[t] = true;
            if self.run(k + 1) {
                return true;
            }
            self.used[t] = false;
        }
        false
    }
}

/// Finds an isomorphism `d1 → d2` if one exists. The decision is exact.
pub fn isomorphic(d1: &GreechieDiagram, d2: &GreechieDiagram) -> Option<DiagramIsomorphism> {
    let n = d1.atom_count();
    if n != d2.atom_count() || d1.block_count() != d2.block_count() {
        return None;
    }
    let sizes = |d: &GreechieDiagram| {
        let mut s: Vec<usize> = d.blocks().iter().map(Vec::len).collect();
        s.sort_unstable();
        s
    };
    if sizes(d1) != sizes(d2) {
        return None;
    }
    let inv1 = atom_invariants(d1);
    let inv2 = atom_invariants(d2);
    let mut sorted1 = inv1.clone();
    let mut sorted2 = inv2.clone();
    sorted1.sort();
    sorted2.sort();
    if sorted1 != sorted2 {
        return None;
    }
    let rarity: Vec<usize> = inv1
        .iter()
        .map(|i| sorted2.iter().filter(|j| *j == i).count())
        .collect();

    // Place atoms so that each one, where possible, is orthogonal to an earlier one.
    let orth1 = orthogonality_matrix(d1);
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut anchors = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&a| !placed[a])
            .max_by_key(|&a| {
                let links = order.iter().filter(|&&p| orth1[a][p]).count();
                (links, std::cmp::Reverse(rarity[a]), std::cmp::Reverse(a))
            })
            .unwrap();
        anchors.push(order.iter().copied().find(|&p| orth1[next][p]));
        placed[next] = true;
        order.push(next);
    }
    let mut position = vec![0; n];
    for (k, &a) in order.iter().enumerate() {
        position[a] = k;
    }
    let mut closing_blocks = vec![Vec::new(); n];
    for (bi, b) in d1.blocks().iter().enumerate() {
        if let Some(last) = b.iter().map(|&a| position[a]).max() {
            closing_blocks[last].push(bi);
        }
    }

    let mut search = IsoSearch {
        order,
        anchors,
        closing_blocks,
        inv1,
        inv2,
        orth1,
        orth2: orthogonality_matrix(d2),
        d1,
        d2,
        blocks2: d2.blocks().iter().cloned().collect(),
        map: vec![usize::MAX; n],
        used: vec![false; n],
    };
    search
        .run(0)
        .then_some(DiagramIsomorphism { map: search.map })
}

struct Incidence {
    atoms: usize,
    adj: Vec<Vec<usize>>,
}

impl Incidence {
    fn new(d: &GreechieDiagram) -> Self {
        let atoms = d.atom_count();
        let mut adj = vec![Vec::new(); atoms + d.block_count()];
        for (bi, b) in d.blocks().iter().enumerate() {
            for &a in b {
                adj[a].push(atoms + bi);
                adj[atoms + bi].push(a);
            }
        }
        Incidence { atoms, adj }
    }

    /// Splits cells until every vertex in a cell sees the same multiset of cells.
    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        let mut cell_of = vec![0usize; self.adj.len()];
        loop {
            for (ci, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = ci;
                }
            }
            let mut next = Vec::with_capacity(cells.len());
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<usize>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let mut sig: Vec<usize> = self.adj[v].iter().map(|&u| cell_of[u]).collect();
                        sig.sort_unstable();
                        (sig, v)
                    })
                    .collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                        start = i;
                    }
                }
            }
            let stable = next.len() == cells.len();
            *cells = next;
            if stable {
                return;
            }
        }
    }
}

struct Canonizer<'a> {
    g: Incidence,
    d: &'a GreechieDiagram,
    best: Option<(Vec<u32>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Canonizer<'_> {
    fn leaf_code(&self, lab: &[usize]) -> Vec<u32> {
        let mut blocks: Vec<Vec<u32>> = self
            .d
            .blocks()
            .iter()
            .map(|b| {
                let mut img: Vec<u32> = b.iter().map(|&a| lab[a] as u32).collect();
                img.sort_unstable();
                img.insert(0, b.len() as u32);
                img
            })
            .collect();
        blocks.sort_unstable();
        let mut code = vec![self.d.atom_count() as u32, self.d.block_count() as u32];
        code.extend(blocks.into_iter().flatten());
        code
    }

    fn search(&mut self, mut cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        self.g.refine(&mut cells);
        let atoms = self.g.atoms;
        // Atom cells always precede block cells, so atom cell positions are labels.
        let atom_cells = cells.iter().take_while(|c| c[0] < atoms).count();
        if atom_cells == atoms {
            let mut lab = vec![0; atoms];
            for (pos, cell) in cells[..atom_cells].iter().enumerate() {
                lab[cell[0]] = pos;
            }
            let code = self.leaf_code(&lab);
            match &self.best {
                Some((best, best_lab)) if *best == code => {
                    let mut inverse = vec![0; atoms];
                    for (a, &l) in best_lab.iter().enumerate() {
                        inverse[l] = a;
                    }
                    let auto: Vec<usize> = lab.iter().map(|&l| inverse[l]).collect();
                    self.automorphisms.push(auto);
                }
                Some((best, _)) if *best < code => {}
                _ => self.best = Some((code, lab)),
            }
            return;
        }
        let target = (0..atom_cells)
            .filter(|&i| cells[i].len() > 1)
            .min_by_key(|&i| (cells[i].len(), i))
            .unwrap();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cells[target].clone() {
            if !explored.is_empty() && self.equivalent_to_explored(v, &explored, prefix) {
                continue;
            }
            let mut child = cells.clone();
            let rest: Vec<usize> = child[target].iter().copied().filter(|&x| x != v).collect();
            child[target] = vec![v];
            child.insert(target + 1, rest);
            prefix.push(v);
            self.search(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    /// True if an automorphism fixing `prefix` pointwise links `v` to an explored vertex.
    fn equivalent_to_explored(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let n = self.g.atoms;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for auto in &self.automorphisms {
            if prefix.iter().any(|&p| auto[p] != p) {
                continue;
            }
            for (x, &y) in auto.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&e| find(&mut parent, e) == rv)
    }
}

/// Canonical labeling: `labeling[atom]` is the atom's canonical position.
pub fn canonical_labeling(d: &GreechieDiagram) -> Vec<usize> {
    canonize(d).1
}

/// A byte string equal for two diagrams iff they are isomorphic.
pub fn canonical_form(d: &GreechieDiagram) -> Vec<u8> {
    let (code, _) = canonize(d);
    let mut out = format!("{}|{}|", code[0], code[1]);
    let mut rest = &code[2..];
    let mut blocks = Vec::new();
    while let Some((&len, tail)) = rest.split_first() {
        let (b, t) = tail.split_at(len as usize);
        blocks.push(b.iter().map(u32::to_string).collect::<Vec<_>>().join(","));
        rest = t;
    }
    out.push_str(&blocks.join(";"));
    out.into_bytes()
}

fn canonize(d: &GreechieDiagram) -> (Vec<u32>, Vec<usize>) {
    let atoms = d.atom_count();
    let g = Incidence::new(d);
    let mut cells = Vec::new();
    if atoms > 0 {
        cells.push((0..atoms).collect::<Vec<_>>());
    }
    if d.block_count() > 0 {
        cells.push((atoms..atoms + d.block_count()).collect());
    }
    let mut c = Canonizer {
        g,
        d,
        best: None,
        automorphisms: Vec::new(),
    };
    if cells.is_empty() {
        return (vec![0, 0], Vec::new());
    }
    c.search(cells, &mut Vec::new());
    c.best.expect("search reaches at least one leaf")
}
