import { RengaClient, ServiceError } from './api.js';
import { renderBanner, renderBoard, renderSyllableHints, renderViolations } from './render.js';
import { SessionStore } from './state.js';

const DEFAULT_RULESET = {
    initial_prompt: 'flower blossom',
    links: [
        { prompt: 'moon', filter: 'most_positive' },
        { prompt: 'autumn', filter: 'most_positive' },
        { prompt: 'love', filter: 'most_positive' },
    ],
    window: 2,
};

function $(id: string): HTMLElement {
    const el = document.getElementById(id);
    if (!el) throw new Error(`missing element #${id}`);
    return el;
}

function setup() {
    const serverInput = $('server-url') as HTMLInputElement;
    const rulesetInput = $('ruleset-json') as HTMLTextAreaElement;
    const seedInput = $('seed') as HTMLInputElement;
    const newForm = $('new-session-form') as HTMLFormElement;
    const boardEl = $('board');
    const bannerEl = $('banner');
    const violationsEl = $('violations');
    const hintsEl = $('hints');
    const editor = $('editor');
    const verseForm = $('verse-form') as HTMLFormElement;
    const machineButton = $('machine-turn') as HTMLButtonElement;
    const lineInputs = [1, 2, 3].map((i) => $(`line-${i}`) as HTMLInputElement);

    rulesetInput.value = JSON.stringify(DEFAULT_RULESET, null, 2);

    let store = new SessionStore(new RengaClient(serverInput.value));

    const redraw = () => {
        bannerEl.innerHTML = renderBanner(store.banner);
        violationsEl.innerHTML = renderViolations(store.violations);
        if (store.state) {
            boardEl.innerHTML = renderBoard(store.state);
            const open = store.state.status === 'open';
            editor.style.display = open ? '' : 'none';
            machineButton.disabled = !open;
        } else {
            boardEl.innerHTML = '';
            editor.style.display = 'none';
        }
        hintsEl.innerHTML = renderSyllableHints(lineInputs.map((el) => el.value));
    };

    const failing = (work: () => Promise<void>) => async () => {
        try {
            await work();
        } catch (err) {
            if (err instanceof ServiceError) {
                store.banner =
                    err.code === 'session_complete'
                        ? 'The renga is complete; no further turns.'
                        : `${err.code}: ${err.message}`;
            } else {
                store.banner = 'Server unreachable; check the URL and retry.';
            }
        }
        redraw();
    };

    newForm.onsubmit = (e) => {
        e.preventDefault();
        store = new SessionStore(new RengaClient(serverInput.value.replace(/\/$/, '')));
        void failing(async () => {
            const ruleset = JSON.parse(rulesetInput.value);
            const seed = seedInput.value === '' ? undefined : Number(seedInput.value);
            await store.create(ruleset, seed);
        })();
    };

    machineButton.onclick = failing(() => store.machineTurn());

    verseForm.onsubmit = (e) => {
        e.preventDefault();
        void failing(async () => {
            const accepted = await store.submitVerse(lineInputs.map((el) => el.value));
            if (accepted) lineInputs.forEach((el) => (el.value = ''));
        })();
    };

    lineInputs.forEach((el) => (el.oninput = redraw));

    // the server owns the truth; refetch whenever the tab regains focus
    window.addEventListener('focus', failing(() => store.refresh()));

    redraw();
}

document.addEventListener('DOMContentLoaded', setup);
