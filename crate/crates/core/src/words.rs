//! Binary incidence words: digit `k` is `1` iff index `k` belongs to the set.

use std::cmp::Ordering;

pub fn word(set: &[usize], len: usize) -> String {
    let mut s = vec![b'0'; len];
    for &i in set {
        s[i] = b'1';
    }
    String::from_utf8(s).expect("ascii")
}

pub fn parse_word(w: &str) -> Vec<usize> {
    w.bytes()
        .enumerate()
        .filter(|&(_, b)| b == b'1')
        .map(|(i, _)| i)
        .collect()
}

/// Order of two sorted index sets as equal-length words ("0" < "1").
pub fn word_cmp(a: &[usize], b: &[usize]) -> Ordering {
    let (mut i, mut j) = (0, 0);
    loop {
        match (a.get(i), b.get(j)) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (Some(x), Some(y)) if x == y => {
                i += 1;
                j += 1;
            }
            // the set holding the smaller index has a 1 where the other has a 0
            (Some(x), Some(y)) => return if x < y { Ordering::Greater } else { Ordering::Less },
        }
    }
}

pub fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_round_trip_and_order() {
        let a = parse_word("011110");
        assert_eq!(a, vec![1, 2, 3, 4]);
        assert_eq!(word(&a, 6), "011110");
        let b = parse_word("110110");
        assert_eq!(word_cmp(&a, &b), "011110".cmp("110110"));
        assert_eq!(word_cmp(&b, &a), Ordering::Greater);
        assert_eq!(word_cmp(&[0, 1], &[0, 1, 2]), "110".cmp("111"));
    }

    proptest::proptest! {
        #[test]
        fn word_order_matches_string_order(a in proptest::collection::btree_set(0usize..10, 0..10),
                                           b in proptest::collection::btree_set(0usize..10, 0..10)) {
            let a: Vec<usize> = a.into_iter().collect();
            let b: Vec<usize> = b.into_iter().collect();
            proptest::prop_assert_eq!(word_cmp(&a, &b), word(&a, 10).cmp(&word(&b, 10)));
        }
    }
}
