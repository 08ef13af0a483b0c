// Client-side session mirror: whatever the server last said, plus any
// violations pending display. The board is always re-rendered from this
// state, and the state only changes to match a server response.

import { RengaClient, SessionState, Violation } from './api.js';

export class SessionStore {
    state: SessionState | null = null;
    violations: Violation[] = [];
    banner = '';

    constructor(private client: RengaClient) {}

    get sessionId(): string | null {
        return this.state ? this.state.session_id : null;
    }

    async create(ruleset: unknown, seed?: number): Promise<void> {
        this.state = await this.client.createSession(ruleset, seed);
        this.violations = [];
        this.banner = '';
    }

    async refresh(): Promise<void> {
        if (!this.state) return;
        this.state = await this.client.getSession(this.state.session_id);
    }

    async machineTurn(): Promise<void> {
        if (!this.state) return;
        this.state = await this.client.machineTurn(this.state.session_id);
        this.violations = [];
        this.banner = '';
    }

    // returns true when the verse was accepted
    async submitVerse(lines: string[]): Promise<boolean> {
        if (!this.state) return false;
        const result = await this.client.submitVerse(this.state.session_id, lines);
        if (result.ok) {
            this.state = result.state;
            this.violations = [];
            this.banner = '';
            return true;
        }
        this.violations = result.violations;
        return false;
    }
}
