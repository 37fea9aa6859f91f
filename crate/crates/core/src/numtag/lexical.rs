//! Closed-class word lists used in place of a part-of-speech tagger.

use crate::corpus::{NumTag, Token};

const FUNCTION_WORDS: &[&str] = &[
    "a", "an", "the", "this", "that", "these", "those", "of", "in", "on", "at", "to", "for",
    "from", "by", "with", "without", "about", "as", "into", "onto", "over", "under", "and", "or",
    "but", "nor", "so", "yet", "if", "then", "than", "he", "she", "it", "they", "we", "you", "i",
    "me", "him", "her", "them", "us", "his", "its", "their", "our", "your", "my", "hers", "theirs",
    "who", "whom", "whose", "which", "what", "where", "when", "why", "how", "not", "no", "never",
    "'s", "also", "only", "all", "some", "any", "each", "every", "both", "either", "neither",
    "more", "most", "less", "least", "such", "there", "here", "after", "before", "during",
    "while", "until", "since", "between", "among", "through", "against", "including", "together",
    "later", "earlier", "ago", "approximately", "around", "nearly", "almost", "roughly", "just",
    "still", "already", "again", "eventually", "subsequently", "previously", "currently", "now",
    "once", "twice", "thrice", "total", "altogether", "per", "via", "within", "across", "along",
    "towards", "toward", "upon", "whereas", "although", "though", "because", "however", "other",
    "another", "own", "same", "up", "out", "off", "down", "away", "back", "even", "very", "too",
    "himself", "herself", "themselves", "itself", "one's", "mr", "mrs", "ms", "dr", "st", "jr",
    "sr", "will", "would", "can", "could", "shall", "should", "may", "might", "must",
    "respectively", "overall", "today", "yesterday", "tomorrow", "further", "thereafter",
];

const VERBS: &[&str] = &[
    "be", "have", "do", "marry", "remarry", "wed", "divorce", "separate", "bear", "give", "die",
    "live", "work", "become", "win", "play", "score", "write", "publish", "release", "direct",
    "produce", "star", "serve", "lead", "find", "found", "join", "leave", "move", "return",
    "adopt", "raise", "father", "name", "include", "contain", "comprise", "consist", "make",
    "take", "receive", "earn", "lose", "appear", "record", "sign", "retire", "survive", "go",
    "get", "see", "say", "tell", "meet", "hold", "grow", "build", "run", "fall", "begin", "speak",
    "study", "teach", "attend", "graduate", "elect", "appoint", "establish", "create", "form",
    "compose", "sing", "perform", "act", "settle", "visit", "travel", "remain", "stay", "divide",
    "administer", "govern", "sell", "buy", "spend", "welcome", "expect", "share",
    "know", "consider", "describe", "call", "use", "follow", "feature", "complete", "reach",
    "finish", "start", "continue", "help", "want", "need", "seem", "keep", "bring", "come",
    "age",
];

const ADJECTIVES: &[&str] = &[
    "young", "younger", "youngest", "old", "older", "oldest", "elder", "eldest", "biological",
    "adopted", "adoptive", "step", "former", "late", "grown", "small", "large", "big", "little",
    "new", "additional", "several", "many", "few", "various", "different", "previous", "first-born",
    "surviving", "living", "healthy", "twin", "illegitimate", "legitimate", "beloved", "famous",
    "notable", "successful", "professional", "local", "national", "international", "official",
    "original", "administrative", "rural", "urban", "main", "major", "minor", "independent",
    "separate", "full", "half", "grand", "great", "known", "remaining", "consecutive", "straight",
    "short", "long", "full-length", "feature-length", "only", "sole", "natural", "legal", "adult",
    "infant", "teenage", "british", "american", "french", "german", "english",
];

const ADJECTIVE_SUFFIXES: &[&str] = &["ous", "ful", "ible", "able", "less", "ical"];

pub fn is_function_word(lemma: &str) -> bool {
    FUNCTION_WORDS.contains(&lemma)
}

pub fn is_verb(lemma: &str) -> bool {
    VERBS.contains(&lemma)
}

pub fn is_adjective(lemma: &str) -> bool {
    ADJECTIVES.contains(&lemma)
        || (lemma.len() > 6 && ADJECTIVE_SUFFIXES.iter().any(|s| lemma.ends_with(s)))
}

/// A content word that is not a number, verb, adjective or function word.
pub fn is_noun_like(token: &Token) -> bool {
    token.num_tag == NumTag::None
        && token.is_word()
        && !is_function_word(&token.lemma)
        && !is_verb(&token.lemma)
        && !is_adjective(&token.lemma)
}

pub fn is_adjective_token(token: &Token) -> bool {
    token.num_tag == NumTag::None && token.is_word() && is_adjective(&token.lemma)
}

/// Tokens allowed between the members of a list of counts
/// ("two sons, three daughters and one stepson").
pub fn is_list_connector(token: &Token) -> bool {
    token.surface == "," || token.lemma == "and" || is_noun_like(token) || is_adjective_token(token)
}

/// Position of the noun a number at `index` quantifies, if the next token is
/// noun-like or an adjective followed by a noun-like token.
pub fn modified_noun(tokens: &[Token], index: usize) -> Option<usize> {
    let next = tokens.get(index + 1)?;
    if next.lemma == "of" {
        return None;
    }
    if is_noun_like(next) {
        return Some(index + 1);
    }
    if is_adjective_token(next) {
        let after = tokens.get(index + 2)?;
        if is_noun_like(after) {
            return Some(index + 2);
        }
    }
    None
}
