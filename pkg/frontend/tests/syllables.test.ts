import { describe, expect, it } from 'vitest';

import { countLine, countWord } from '../src/syllables';

describe('countWord', () => {
    it('counts vowel groups', () => {
        expect(countWord('frog')).toBe(1);
        expect(countWord('autumn')).toBe(2);
        expect(countWord('silently')).toBe(3);
    });

    it('drops a silent final e after a consonant', () => {
        expect(countWord('stone')).toBe(1);
        expect(countWord('bridge')).toBe(1);
        expect(countWord('bee')).toBe(1);
    });

    it('never reports less than one for a word', () => {
        expect(countWord('grlx')).toBe(1);
    });

    it('ignores punctuation tokens and edge punctuation', () => {
        expect(countWord('--')).toBe(0);
        expect(countWord('pond.')).toBe(1);
        expect(countWord('"moon,"')).toBe(1);
    });

    it('is case-insensitive', () => {
        expect(countWord('Moon')).toBe(countWord('moon'));
    });
});

describe('countLine', () => {
    it('sums words and skips punctuation', () => {
        expect(countLine('cold rain falls on stone')).toBe(5);
        expect(countLine('autumn moonlight --')).toBe(4);
        expect(countLine('')).toBe(0);
        expect(countLine('   ')).toBe(0);
    });
});
