//! Small enumeration helpers shared by the diagram enumerators.

/// All set partitions of `items`, as lists of blocks.
///
/// Generated from restricted growth strings, so blocks appear in order of
/// their first element and elements keep their relative order.
pub fn set_partitions<T: Clone>(items: &[T]) -> Vec<Vec<Vec<T>>> {
    let mut out = Vec::new();
    let mut labels = vec![0usize; items.len()];
    fn go<T: Clone>(
        pos: usize,
        used: usize,
        items: &[T],
        labels: &mut Vec<usize>,
        out: &mut Vec<Vec<Vec<T>>>,
    ) {
        if pos == items.len() {
            let mut blocks = vec![Vec::new(); used];
            for (item, &label) in items.iter().zip(labels.iter()) {
                blocks[label].push(item.clone());
            }
            out.push(blocks);
            return;
        }
        for label in 0..=used {
            labels[pos] = label;
            go(pos + 1, used.max(label + 1), items, labels, out);
        }
    }
    go(0, 0, items, &mut labels, &mut out);
    out
}

/// All permutations of `0..m` in lexicographic order.
pub fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(m);
    let mut used = vec![false; m];
    fn go(m: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if current.len() == m {
            out.push(current.clone());
            return;
        }
        for v in 0..m {
            if !used[v] {
                used[v] = true;
                current.push(v);
                go(m, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    go(m, &mut current, &mut used, &mut out);
    out
}

/// All subsets of `items`, each preserving the original order.
pub fn subsets<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    (0u64..(1u64 << items.len()))
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}

pub fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Stirling numbers of the second kind by the usual recurrence.
pub fn stirling2(n: usize, m: usize) -> u128 {
    let mut row = vec![0u128; m + 1];
    row[0] = 1;
    for i in 1..=n {
        for j in (1..=m.min(i)).rev() {
            row[j] = j as u128 * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    row[m]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let bell: Vec<usize> = (0..7)
            .map(|n| set_partitions(&(0..n).collect::<Vec<_>>()).len())
            .collect();
        assert_eq!(bell, vec![1, 1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn stirling_rows() {
        assert_eq!(
            (0..=4).map(|m| stirling2(4, m)).collect::<Vec<_>>(),
            vec![0, 1, 7, 6, 1]
        );
        assert_eq!(stirling2(0, 0), 1);
    }

    #[test]
    fn small_counts() {
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(subsets(&[1, 2, 3]).len(), 8);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(factorial(5), 120);
    }
}
