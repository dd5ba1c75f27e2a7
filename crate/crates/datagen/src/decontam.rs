//! Exact-match decontamination against benchmark solutions and prompts.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use unicoder_lang::transpile::TargetLanguage;

use crate::types::Triplet;

/// One benchmark item. `language` selects the comment syntax used when
/// normalizing `solution`; Python when absent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceItem {
    #[serde(default)]
    pub id: Option<String>,
    pub prompt: String,
    pub solution: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub language: Option<TargetLanguage>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatchField {
    Answer,
    Question,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Removed {
    pub triplet: Triplet,
    pub matched: MatchField,
    /// Name of the reference set, then the item id or line index.
    pub reference: String,
}

/// Comments removed, whitespace runs collapsed to one space, lowercased.
pub fn normalize(text: &str, language: TargetLanguage) -> String {
    let stripped = strip_comments(text, language);
    stripped.split_whitespace().collect::<Vec<_>>().join(" ").to_lowercase()
}

/// Normalization for natural-language fields: no comment syntax.
pub fn normalize_prose(text: &str) -> String {
    text.split_whitespace().collect::<Vec<_>>().join(" ").to_lowercase()
}

/// Removes comments outside string literals. Python uses `#`; the other
/// targets use `//` and `/* */`.
pub fn strip_comments(text: &str, language: TargetLanguage) -> String {
    let hash = language == TargetLanguage::Python;
    let chars: Vec<char> = text.chars().collect();
    let mut out = String::with_capacity(text.len());
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let next = chars.get(i + 1).copied();
        if hash && c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        if !hash && c == '/' && next == Some('/') {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        if !hash && c == '/' && next == Some('*') {
            i += 2;
            while i < chars.len() && !(chars[i] == '*' && chars.get(i + 1) == Some(&'/')) {
                i += 1;
            }
            i = (i + 2).min(chars.len());
            out.push(' ');
            continue;
        }
        if c == '\'' && !hash && language != TargetLanguage::Javascript {
            let width = match (next, chars.get(i + 2), chars.get(i + 3)) {
                (Some('\\'), Some(_), Some('\'')) => 4,
                (Some(_), Some('\''), _) => 3,
                _ => 1,
            };
            out.extend(&chars[i..i + width]);
            i += width;
            continue;
        }
        let quote = match c {
            '"' => true,
            '\'' => hash || language == TargetLanguage::Javascript,
            '`' => language == TargetLanguage::Javascript || language == TargetLanguage::Go,
            _ => false,
        };
        if quote {
            let triple = hash && next == Some(c) && chars.get(i + 2) == Some(&c);
            let width = if triple { 3 } else { 1 };
            out.extend(&chars[i..i + width]);
            i += width;
            while i < chars.len() {
                if chars[i] == '\\' && c != '`' {
                    out.extend(&chars[i..(i + 2).min(chars.len())]);
                    i += 2;
                    continue;
                }
                let closes = chars[i] == c && (!triple || (chars.get(i + 1) == Some(&c) && chars.get(i + 2) == Some(&c)));
                if closes {
                    out.extend(&chars[i..i + width]);
                    i += width;
                    break;
                }
                if chars[i] == '\n' && !triple && c != '`' {
                    break;
                }
                out.push(chars[i]);
                i += 1;
            }
            continue;
        }
        out.push(c);
        i += 1;
    }
    out
}

/// Normalized lookup tables for one or more reference sets.
#[derive(Debug, Default)]
pub struct ReferenceIndex {
    solutions: HashMap<String, String>,
    prompts: HashMap<String, String>,
}

impl ReferenceIndex {
    pub fn new() -> Self {
        ReferenceIndex::default()
    }

    /// Adds a set; the first item with a given normalized text names it.
    pub fn add_set(&mut self, name: &str, items: &[ReferenceItem]) {
        for (index, item) in items.iter().enumerate() {
            let label = format!("{name}:{}", item.id.clone().unwrap_or_else(|| index.to_string()));
            let language = item.language.unwrap_or(TargetLanguage::Python);
            let solution = normalize(&item.solution, language);
            if !solution.is_empty() {
                self.solutions.entry(solution).or_insert_with(|| label.clone());
            }
            let prompt = normalize_prose(&item.prompt);
            if !prompt.is_empty() {
                self.prompts.entry(prompt).or_insert(label);
            }
        }
    }

    pub fn matches(&self, triplet: &Triplet) -> Option<(MatchField, &str)> {
        if let Some(label) = self.solutions.get(&normalize(&triplet.answer.code, triplet.answer.language)) {
            return Some((MatchField::Answer, label));
        }
        self.prompts.get(&normalize_prose(&triplet.question)).map(|label| (MatchField::Question, label.as_str()))
    }
}

/// Keeps input order in both outputs; every input lands in exactly one.
pub fn decontaminate(triplets: Vec<Triplet>, index: &ReferenceIndex) -> (Vec<Triplet>, Vec<Removed>) {
    let mut kept = Vec::new();
    let mut removed = Vec::new();
    for triplet in triplets {
        match index.matches(&triplet) {
            Some((matched, label)) => {
                let reference = label.to_string();
                removed.push(Removed { triplet, matched, reference });
            }
            None => kept.push(triplet),
        }
    }
    (kept, removed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::{Answer, Origin};

    fn triplet(question: &str, code: &str) -> Triplet {
        Triplet {
            origin: Origin::FromPair,
            origin_id: "t".into(),
            language: TargetLanguage::Python,
            question: question.into(),
            answer: Answer { language: TargetLanguage::Python, code: code.into() },
            unicode: "p".into(),
            unicode_parses: true,
            unicode_diagnostics: Vec::new(),
        }
    }

    fn index() -> ReferenceIndex {
        let mut index = ReferenceIndex::new();
        index.add_set(
            "bench",
            &[ReferenceItem {
                id: Some("7".into()),
                prompt: "Return the sum of a list.".into(),
                solution: "def total(xs):\n    return sum(xs)\n".into(),
                language: None,
            }],
        );
        index
    }

    #[test]
    fn python_comments_respect_strings() {
        let code = "x = '# not a comment'  # a comment\ny = \"\"\"doc # kept\"\"\"\n";
        assert_eq!(strip_comments(code, TargetLanguage::Python), "x = '# not a comment'  \ny = \"\"\"doc # kept\"\"\"\n");
    }

    #[test]
    fn c_like_comments() {
        let code = "int x = 1; // one\n/* block\n */ char *s = \"// kept\";";
        assert_eq!(normalize(code, TargetLanguage::Cpp), "int x = 1; char *s = \"// kept\";");
    }

    #[test]
    fn exact_and_variant_matches_are_removed() {
        let index = index();
        let exact = triplet("Something else.", "def total(xs):\n    return sum(xs)\n");
        let variant = triplet("Other.", "# sums\ndef  total(xs):\n\n\treturn sum(xs)   # done\n");
        let prompt = triplet("  return the SUM of a list. ", "def f(): pass");
        let renamed = triplet("Another.", "def total(values):\n    return sum(values)\n");
        let (kept, removed) = decontaminate(vec![exact, variant, prompt, renamed.clone()], &index);
        assert_eq!(kept, vec![renamed]);
        assert_eq!(removed.iter().map(|r| r.matched).collect::<Vec<_>>(), [MatchField::Answer, MatchField::Answer, MatchField::Question]);
        assert!(removed.iter().all(|r| r.reference == "bench:7"));
    }

    #[test]
    fn second_pass_removes_nothing() {
        let index = index();
        let input = vec![triplet("q", "def total(xs):\n    return sum(xs)\n"), triplet("r", "x = 1")];
        let (kept, _) = decontaminate(input, &index);
        let (again, removed) = decontaminate(kept.clone(), &index);
        assert_eq!(again, kept);
        assert!(removed.is_empty());
    }
}
