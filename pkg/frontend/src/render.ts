// Pure HTML renderers; main.ts mounts their output into the page.

import { SessionState, Violation } from './api.js';
import { countLine, TARGET } from './syllables.js';

export function escapeHtml(text: string): string {
    return text
        .replace(/&/g, '&amp;')
        .replace(/</g, '&lt;')
        .replace(/>/g, '&gt;')
        .replace(/"/g, '&quot;');
}

export function renderBoard(state: SessionState): string {
    const links = state.links
        .map((link, i) => {
            const lines = link.lines
                .map((tokens) => `<div class="verse-line">${escapeHtml(tokens.join(' '))}</div>`)
                .join('');
            const constraint = link.constraint.length
                ? `<span class="constraint">${escapeHtml(link.constraint.join(' '))}</span>`
                : '';
            return (
                `<article class="link" data-index="${i}">` +
                `<header><span class="badge badge-${link.author}">${link.author}</span>${constraint}</header>` +
                lines +
                `</article>`
            );
        })
        .join('');
    const turn =
        state.status === 'complete'
            ? `<p class="turn">renga complete: ${state.cursor} links</p>`
            : `<p class="turn">link ${state.cursor + 1} of ${state.total_links}` +
              (state.next_constraint
                  ? `, alluding to &quot;${escapeHtml(state.next_constraint.join(' '))}&quot;`
                  : '') +
              `</p>`;
    return `<section class="board">${links}${turn}</section>`;
}

export function renderViolations(violations: Violation[]): string {
    if (!violations.length) return '';
    const items = violations
        .map((v) => {
            const cls = v.kind === 'form' ? 'violation-form' : 'violation-repetition';
            const where = v.kind === 'form' && v.line ? ` data-line="${v.line}"` : '';
            return `<li class="${cls}"${where}>${escapeHtml(v.message)}</li>`;
        })
        .join('');
    return `<ul class="violations">${items}</ul>`;
}

export function renderSyllableHints(lines: string[]): string {
    return lines
        .map((line, i) => {
            const got = countLine(line);
            const want = TARGET[i];
            const cls = got === want ? 'hint-ok' : 'hint-off';
            return `<span class="hint ${cls}" data-line="${i + 1}">${got}/${want}</span>`;
        })
        .join('');
}

export function renderBanner(message: string, kind: 'error' | 'info' = 'error'): string {
    if (!message) return '';
    return `<div class="banner banner-${kind}">${escapeHtml(message)}</div>`;
}
