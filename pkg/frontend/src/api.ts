// Typed client for the renga session endpoints (see docs/api.md).

export interface Scores {
    ngram: number;
    topic: number;
}

export interface LinkView {
    lines: string[][];
    text: string;
    scores: Scores;
    author: 'machine' | 'human';
    constraint: string[];
    criterion: string;
    candidate_count: number;
}

export interface SessionState {
    session_id: string;
    status: 'open' | 'complete';
    seed: number;
    cursor: number;
    total_links: number;
    next_constraint: string[] | null;
    ruleset: unknown;
    links: LinkView[];
}

export interface Violation {
    kind: 'form' | 'repetition';
    message: string;
    line?: number;
    expected?: number;
    got?: number;
    word?: string;
    link_index?: number;
}

export type TurnResult =
    | { ok: true; state: SessionState }
    | { ok: false; violations: Violation[] };

export class ServiceError extends Error {
    constructor(
        public status: number,
        public code: string,
        message: string,
    ) {
        super(message);
    }
}

async function readError(resp: Response): Promise<ServiceError> {
    let code = 'unknown';
    let message = `HTTP ${resp.status}`;
    try {
        const body = await resp.json();
        if (body && body.error) {
            code = body.error.code ?? code;
            message = body.error.message ?? message;
        }
    } catch {
        // non-JSON error body; keep defaults
    }
    return new ServiceError(resp.status, code, message);
}

export class RengaClient {
    constructor(
        private baseUrl: string = '',
        private fetchImpl: typeof fetch = fetch,
    ) {}

    private async request(path: string, init?: RequestInit): Promise<Response> {
        return this.fetchImpl(this.baseUrl + path, {
            headers: { 'Content-Type': 'application/json' },
            ...init,
        });
    }

    async createSession(ruleset: unknown, seed?: number): Promise<SessionState> {
        const body: Record<string, unknown> = { ruleset };
        if (seed !== undefined) body.seed = seed;
        const resp = await this.request('/session', {
            method: 'POST',
            body: JSON.stringify(body),
        });
        if (!resp.ok) throw await readError(resp);
        return resp.json();
    }

    async getSession(id: string): Promise<SessionState> {
        const resp = await this.request(`/session/${id}`);
        if (!resp.ok) throw await readError(resp);
        return resp.json();
    }

    async machineTurn(id: string): Promise<SessionState> {
        const resp = await this.request(`/session/${id}/link`, {
            method: 'POST',
            body: JSON.stringify({ machine: true }),
        });
        if (!resp.ok) throw await readError(resp);
        return resp.json();
    }

    // The server is the sole authority on form and repetition: a 422 is a
    // normal outcome carrying the violation list, not an exception.
    async submitVerse(id: string, lines: string[]): Promise<TurnResult> {
        const resp = await this.request(`/session/${id}/link`, {
            method: 'POST',
            body: JSON.stringify({ lines }),
        });
        if (resp.status === 422) {
            const body = await resp.json();
            return { ok: false, violations: body.violations ?? [] };
        }
        if (!resp.ok) throw await readError(resp);
        return { ok: true, state: await resp.json() };
    }
}
