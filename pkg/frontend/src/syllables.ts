// Advisory syllable counter for the verse editor.
//
// Orthographic only (vowel groups, silent final e): the server's
// pronouncing lexicon is authoritative and may disagree (e.g. "fire" or
// "hour" count 2 there). The editor shows these counts as hints and
// never blocks a submission.

const VOWELS = new Set(['a', 'e', 'i', 'o', 'u', 'y']);

export function countWord(word: string): number {
    const w = word.toLowerCase().replace(/^[^a-z0-9]+|[^a-z0-9]+$/g, '');
    if (!/[a-z]/.test(w)) return 0; // punctuation token like "--"
    let groups = 0;
    let inGroup = false;
    for (const c of w) {
        if (VOWELS.has(c)) {
            if (!inGroup) groups += 1;
            inGroup = true;
        } else {
            inGroup = false;
        }
    }
    if (w.length >= 2 && w.endsWith('e') && !VOWELS.has(w[w.length - 2]) && /[a-z]/.test(w[w.length - 2])) {
        groups -= 1;
    }
    return Math.max(groups, 1);
}

export function countLine(line: string): number {
    return line
        .split(/\s+/)
        .filter((t) => t.length > 0)
        .reduce((total, token) => total + countWord(token), 0);
}

export const TARGET = [5, 7, 5] as const;
