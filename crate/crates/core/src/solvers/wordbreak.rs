use crate::instance::{WordBreakInstance, WORD_ALPHABET};

const NONE: u32 = u32::MAX;

/// Prefix trie over the symbols `0..3`.
struct Trie {
    children: Vec<[u32; WORD_ALPHABET as usize]>,
    terminal: Vec<bool>,
}

impl Trie {
    fn new<'a>(words: impl IntoIterator<Item = &'a Vec<u8>>) -> Self {
        let mut t = Trie {
            children: vec![[NONE; WORD_ALPHABET as usize]],
            terminal: vec![false],
        };
        for w in words {
            let mut node = 0usize;
            for &a in w {
                let next = t.children[node][a as usize];
                node = if next == NONE {
                    t.children.push([NONE; WORD_ALPHABET as usize]);
                    t.terminal.push(false);
                    let id = t.children.len() - 1;
                    t.children[node][a as usize] = id as u32;
                    id
                } else {
                    next as usize
                };
            }
            t.terminal[node] = true;
        }
        t
    }
}

/// True iff the text is a concatenation of dictionary words.
///
/// Scans positions left to right; from each reachable position the trie is
/// walked along the text and every word end marks a new reachable position.
pub fn word_break_solve(inst: &WordBreakInstance) -> bool {
    let trie = Trie::new(&inst.dictionary);
    let text = &inst.text;
    let mut reach = vec![false; text.len() + 1];
    reach[0] = true;
    for i in 0..text.len() {
        if !reach[i] {
            continue;
        }
        let mut node = 0usize;
        for (j, &a) in text.iter().enumerate().skip(i) {
            let next = trie.children[node][a as usize];
            if next == NONE {
                break;
            }
            node = next as usize;
            if trie.terminal[node] {
                reach[j + 1] = true;
            }
        }
    }
    reach[text.len()]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wb(text: &str, words: &[&str]) -> bool {
        let sym = |s: &str| s.bytes().map(|b| b - b'0').collect::<Vec<u8>>();
        word_break_solve(&WordBreakInstance {
            text: sym(text),
            dictionary: words.iter().map(|w| sym(w)).collect(),
        })
    }

    #[test]
    fn examples() {
        assert!(wb("0120", &["01", "20"]));
        assert!(!wb("0", &["00"]));
        assert!(wb("", &[]));
        assert!(!wb("0", &[]));
    }

    #[test]
    fn needs_backtracking_over_prefixes() {
        assert!(wb("000", &["00", "0"]));
        assert!(wb("0102", &["0", "01", "102"]));
        assert!(!wb("0102", &["01", "010"]));
    }
}
