import { readFileSync } from "node:fs";
import { join } from "node:path";
import { vi } from "vitest";

import { ApiClient, type FetchLike } from "../src/api.js";
import { boot, type App } from "../src/main.js";

export function fixture<T>(name: string): T {
  const path = join(__dirname, "fixtures", `${name}.json`);
  return JSON.parse(readFileSync(path, "utf-8")) as T;
}

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

export interface RecordedCall {
  method: string;
  url: string;
  body: unknown;
}

/** fetch mock routing the recorded service fixtures; what-if responses are
 * selected by whether the posted edits are empty (identity) or not. */
export function mockApi() {
  const calls: RecordedCall[] = [];
  let whatifResolver: ((edits: unknown[]) => Promise<Response>) | null = null;
  const failing = new Set<string>();

  const fetchFn: FetchLike = vi.fn(async (url: string, init?: RequestInit) => {
    const method = init?.method ?? "GET";
    const body = init?.body ? JSON.parse(init.body as string) : undefined;
    calls.push({ method, url, body });

    for (const suffix of failing) {
      if (url.endsWith(suffix)) {
        return jsonResponse({ error: "failed", detail: `${suffix} failed` }, 500);
      }
    }
    if (url.endsWith("/whatif") && method === "POST") {
      if (whatifResolver) return whatifResolver(body.edits);
      return jsonResponse(
        body.edits.length === 0
          ? fixture("whatif_identity")
          : fixture("whatif_reweight"));
    }
    if (url.includes("/interests") && method === "PATCH") {
      return jsonResponse(fixture("model"));
    }
    if (url.endsWith("/interests")) return jsonResponse(fixture("interests"));
    if (url.includes("/recommendations?level=basic")) {
      return jsonResponse(fixture("recommendations_basic"));
    }
    if (url.endsWith("/why")) {
      return jsonResponse(
        (fixture("why") as { payload: unknown }).payload);
    }
    if (url.endsWith("/how")) {
      return jsonResponse(
        (fixture("how") as { payload: unknown }).payload);
    }
    if (url.endsWith("/meta/levels")) return jsonResponse(fixture("meta_levels"));
    return jsonResponse({ error: "not_found", detail: url }, 404);
  });

  return {
    fetchFn,
    calls,
    setWhatifResolver(fn: (edits: unknown[]) => Promise<Response>) {
      whatifResolver = fn;
    },
    failEndpoint(suffix: string) {
      failing.add(suffix);
    },
    json: jsonResponse,
  };
}

export async function bootApp(): Promise<{
  app: App;
  root: HTMLElement;
  api: ReturnType<typeof mockApi>;
}> {
  const api = mockApi();
  const root = document.createElement("div");
  document.body.replaceChildren(root);
  const app = await boot(root, new ApiClient("", api.fetchFn), "alice");
  return { app, root, api };
}
