// Thin typed client for the four service endpoints.  The server is the
// single source of truth; this layer only moves JSON.

import type { CreateRequest, HintView, SessionView } from "./view.js";

export class ApiError extends Error {
    constructor(readonly status: number, message: string) {
        super(message);
    }
}

async function parseResponse<T>(resp: Response): Promise<T> {
    let body: unknown = null;
    try {
        body = await resp.json();
    } catch {
        // error responses may have no JSON body
    }
    if (!resp.ok) {
        const detail =
            body && typeof body === "object" && "detail" in body
                ? String((body as { detail: unknown }).detail)
                : resp.statusText;
        throw new ApiError(resp.status, detail);
    }
    return body as T;
}

export class Client {
    constructor(
        private readonly base: string = "",
        private readonly fetchFn: typeof fetch = fetch,
    ) {}

    createSession(req: CreateRequest): Promise<SessionView> {
        return this.request("POST", "/sessions", req);
    }

    getState(sessionId: string): Promise<SessionView> {
        return this.request("GET", `/sessions/${sessionId}`);
    }

    postMove(sessionId: string, cherryId: number): Promise<SessionView> {
        return this.request("POST", `/sessions/${sessionId}/moves`, {
            cherry_id: cherryId,
        });
    }

    hint(sessionId: string): Promise<HintView> {
        return this.request("GET", `/sessions/${sessionId}/hint`);
    }

    private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
        const resp = await this.fetchFn(this.base + path, {
            method,
            headers: body === undefined ? {} : { "Content-Type": "application/json" },
            body: body === undefined ? undefined : JSON.stringify(body),
        });
        return parseResponse<T>(resp);
    }
}
