//! Dictionary-plus-suffix lemmatizer.

/// Irregular forms looked up before any suffix rule fires.
const EXCEPTIONS: &[(&str, &str)] = &[
    ("children", "child"),
    ("wives", "wife"),
    ("husbands", "husband"),
    ("lives", "life"),
    ("knives", "knife"),
    ("men", "man"),
    ("women", "woman"),
    ("people", "person"),
    ("feet", "foot"),
    ("teeth", "tooth"),
    ("mice", "mouse"),
    ("geese", "goose"),
    ("series", "series"),
    ("species", "species"),
    ("news", "news"),
    ("has", "have"),
    ("had", "have"),
    ("having", "have"),
    ("is", "be"),
    ("are", "be"),
    ("was", "be"),
    ("were", "be"),
    ("been", "be"),
    ("being", "be"),
    ("am", "be"),
    ("'s", "'s"),
    ("does", "do"),
    ("did", "do"),
    ("done", "do"),
    ("n't", "not"),
    ("n\u{2019}t", "not"),
    ("went", "go"),
    ("gone", "go"),
    ("bore", "bear"),
    ("born", "bear"),
    ("borne", "bear"),
    ("gave", "give"),
    ("given", "give"),
    ("won", "win"),
    ("wrote", "write"),
    ("written", "write"),
    ("made", "make"),
    ("took", "take"),
    ("taken", "take"),
    ("became", "become"),
    ("began", "begin"),
    ("begun", "begin"),
    ("left", "leave"),
    ("led", "lead"),
    ("met", "meet"),
    ("held", "hold"),
    ("died", "die"),
    ("lying", "lie"),
    ("dying", "die"),
    ("saw", "see"),
    ("seen", "see"),
    ("got", "get"),
    ("gotten", "get"),
    ("said", "say"),
    ("told", "tell"),
    ("found", "find"),
    ("built", "build"),
    ("ran", "run"),
    ("grew", "grow"),
    ("grown", "grow"),
    ("fell", "fall"),
    ("fallen", "fall"),
    ("sons-in-law", "son-in-law"),
    ("daughters-in-law", "daughter-in-law"),
    ("this", "this"),
    ("his", "his"),
    ("its", "its"),
    ("us", "us"),
    ("as", "as"),
    ("was", "be"),
    ("less", "less"),
    ("always", "always"),
    ("perhaps", "perhaps"),
    ("towards", "towards"),
    ("whereas", "whereas"),
    ("afterwards", "afterwards"),
    ("thus", "thus"),
    ("twins", "twins"),
    ("triplets", "triplets"),
    ("quadruplets", "quadruplets"),
    ("quintuplets", "quintuplets"),
];

fn is_vowel(c: u8) -> bool {
    matches!(c, b'a' | b'e' | b'i' | b'o' | b'u')
}

/// Lowercases `token` and reduces it to a base form.
///
/// Irregular nouns and verbs come from a bundled exception list; regular
/// plurals and `-ed` past forms are handled by suffix rules. Anything else
/// passes through lowercased.
pub fn lemmatize(token: &str) -> String {
    let lower = token.to_lowercase();
    if let Some(&(_, lemma)) = EXCEPTIONS.iter().find(|(form, _)| *form == lower) {
        return lemma.to_string();
    }
    if !lower.is_ascii() || !lower.bytes().all(|b| b.is_ascii_alphabetic() || b == b'-') {
        return lower;
    }
    // hyphenated compounds inflect on the last part
    if let Some((head, tail)) = lower.rsplit_once('-') {
        if tail.is_empty() {
            return lower;
        }
        return format!("{head}-{}", lemmatize(tail));
    }
    strip_suffix(&lower).unwrap_or(lower)
}

/// `-ed` stems whose base form ends in a silent e that no rule predicts.
const E_STEMS: &[&str] = &[
    "nam", "welcom", "retir", "complet", "describ", "scor", "rul", "declin", "invit", "unit",
    "vot", "hir", "fir", "admir", "inspir", "requir", "acquir", "declar", "prepar", "shar",
    "compar", "car", "stor", "explor", "defin", "combin", "shap", "hop", "escap", "tim", "becom",
    "promot", "not", "quot", "devot", "decid", "provid", "divid", "guid", "includ", "conclud",
    "lik", "fram", "blam", "creat", "recreat", "pil",
];

fn strip_suffix(w: &str) -> Option<String> {
    let b = w.as_bytes();
    let n = b.len();
    if n <= 3 {
        return None;
    }
    if let Some(stem) = w.strip_suffix("ied") {
        return Some(format!("{stem}y"));
    }
    if let Some(stem) = w.strip_suffix("ies") {
        if stem.len() >= 2 {
            return Some(format!("{stem}y"));
        }
    }
    if w.ends_with("sses") || w.ends_with("shes") || w.ends_with("ches") || w.ends_with("xes") || w.ends_with("zes") {
        return Some(w[..n - 2].to_string());
    }
    if w.ends_with('s') && !w.ends_with("ss") && !w.ends_with("us") && !w.ends_with("is") {
        return Some(w[..n - 1].to_string());
    }
    if let Some(stem) = w.strip_suffix("ed") {
        if stem.len() < 3 || w.ends_with("eed") {
            return None;
        }
        let s = stem.as_bytes();
        let m = s.len();
        // stopped -> stop, but not called -> cal
        if s[m - 1] == s[m - 2] && !is_vowel(s[m - 1]) && !matches!(s[m - 1], b'l' | b's' | b'z') {
            return Some(stem[..m - 1].to_string());
        }
        // divorced -> divorce, raised -> raise, settled -> settle, created -> create
        if matches!(s[m - 1], b'c' | b'v' | b'z' | b'g' | b'u')
            || (s[m - 1] == b's' && is_vowel(s[m - 2]))
            || (s[m - 1] == b'l' && matches!(s[m - 2], b'b' | b'd' | b'f' | b'g' | b'k' | b'p' | b't' | b'z'))
            || (stem.ends_with("at") && m >= 5 && !matches!(s[m - 3], b'a' | b'e' | b'o'))
            || E_STEMS.contains(&stem)
        {
            return Some(format!("{stem}e"));
        }
        return Some(stem.to_string());
    }
    None
}
