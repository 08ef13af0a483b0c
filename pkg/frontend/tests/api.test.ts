import { describe, expect, it } from 'vitest';

import { RengaClient, ServiceError } from '../src/api';
import { FakeRengaServer } from './fake_server';

const RULESET = {
    initial_prompt: 'flower blossom',
    links: [{ prompt: 'moon', filter: 'most_positive' }],
    window: 2,
};

function client(server: FakeRengaServer): RengaClient {
    return new RengaClient('http://fake', server.fetch as typeof fetch);
}

describe('RengaClient', () => {
    it('creates and refetches sessions', async () => {
        const c = client(new FakeRengaServer({ machineVerses: [] }));
        const created = await c.createSession(RULESET, 5);
        expect(created.status).toBe('open');
        expect(created.total_links).toBe(2);
        expect(created.next_constraint).toEqual(['flower', 'blossom']);
        const fetched = await c.getSession(created.session_id);
        expect(fetched).toEqual(created);
    });

    it('maps unknown sessions to ServiceError 404', async () => {
        const c = client(new FakeRengaServer({ machineVerses: [] }));
        await expect(c.getSession('nope')).rejects.toMatchObject({
            status: 404,
            code: 'unknown_session',
        });
        await expect(c.getSession('nope')).rejects.toBeInstanceOf(ServiceError);
    });

    it('returns violations as a normal result, not an exception', async () => {
        const c = client(new FakeRengaServer({ machineVerses: [] }));
        const session = await c.createSession(RULESET);
        const result = await c.submitVerse(session.session_id, [
            'cold cold rain falls on stone',
            'the river turns at the bridge',
            'reeds bend in the wind',
        ]);
        expect(result.ok).toBe(false);
        if (!result.ok) {
            expect(result.violations[0]).toMatchObject({ kind: 'form', line: 1, got: 6 });
        }
    });

    it('raises session_complete as ServiceError 409', async () => {
        const server = new FakeRengaServer({
            machineVerses: [
                ['cold rain falls on stone', 'the river turns at the bridge', 'reeds bend in the wind'],
                ['first snow at morning', 'the mountain hides in white mist', 'smoke from the village'],
            ],
        });
        const c = client(server);
        const session = await c.createSession(RULESET);
        await c.machineTurn(session.session_id);
        const done = await c.machineTurn(session.session_id);
        expect(done.status).toBe('complete');
        await expect(c.machineTurn(session.session_id)).rejects.toMatchObject({
            status: 409,
            code: 'session_complete',
        });
    });
});
