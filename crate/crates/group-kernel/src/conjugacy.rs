//! Conjugacy classes by orbit search under generator conjugation.

use crate::group::Group;

pub struct Classes {
    /// Class index per element id.
    pub class_of: Vec<u32>,
    /// Minimal id per class, ascending in rep id.
    pub reps: Vec<u32>,
    pub classes: Vec<Vec<u32>>,
}

pub fn element_classes(g: &Group) -> Classes {
    let n = g.order();
    let mut class_of = vec![u32::MAX; n];
    let mut reps = Vec::new();
    let mut classes = Vec::new();
    for start in 0..n as u32 {
        if class_of[start as usize] != u32::MAX {
            continue;
        }
        let ci = reps.len() as u32;
        let mut orbit = vec![start];
        class_of[start as usize] = ci;
        let mut frontier = vec![start];
        while let Some(cur) = frontier.pop() {
            for &x in &g.gens {
                let nxt = g.conj(x, cur);
                if class_of[nxt as usize] == u32::MAX {
                    class_of[nxt as usize] = ci;
                    orbit.push(nxt);
                    frontier.push(nxt);
                }
            }
        }
        orbit.sort_unstable();
        reps.push(start);
        classes.push(orbit);
    }
    Classes { class_of, reps, classes }
}

impl Classes {
    pub fn size_multiset(&self) -> Vec<(usize, usize)> {
        let mut sizes: Vec<usize> = self.classes.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        let mut out: Vec<(usize, usize)> = Vec::new();
        for s in sizes {
            match out.last_mut() {
                Some((v, k)) if *v == s => *k += 1,
                _ => out.push((s, 1)),
            }
        }
        out
    }
}
