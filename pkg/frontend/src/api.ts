import type {
  HowTracePayload,
  InterestEdit,
  ModelDict,
  RecommendationsResponse,
  WhatIfDiff,
  WhatPayload,
  WhyDetailedPayload,
} from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(public status: number, public code: string, detail: string) {
    super(detail);
  }
}

/** Thin typed client over the recommendation service HTTP contract. */
export class ApiClient {
  constructor(
    private baseUrl: string,
    private fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, init);
    const body = await response.json();
    if (!response.ok) {
      throw new ApiError(response.status, body.error ?? "error",
        body.detail ?? response.statusText);
    }
    return body as T;
  }

  private post<T>(path: string, payload: unknown, method = "POST"): Promise<T> {
    return this.request<T>(path, {
      method,
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  createUser(profile: unknown): Promise<ModelDict> {
    return this.post("/users", profile);
  }

  getInterests(userId: string): Promise<WhatPayload> {
    return this.request(`/users/${userId}/interests`);
  }

  patchInterests(userId: string, edits: InterestEdit[]): Promise<ModelDict> {
    return this.post(`/users/${userId}/interests`, { edits }, "PATCH");
  }

  getRecommendations(userId: string, level = "basic"): Promise<RecommendationsResponse> {
    return this.request(`/users/${userId}/recommendations?level=${level}`);
  }

  getWhy(userId: string, pubId: string): Promise<WhyDetailedPayload> {
    return this.request(`/users/${userId}/recommendations/${pubId}/why`);
  }

  getHow(userId: string, pubId: string, fullVectors = false): Promise<HowTracePayload> {
    const flag = fullVectors ? "?full_vectors=true" : "";
    return this.request(`/users/${userId}/recommendations/${pubId}/how${flag}`);
  }

  postWhatIf(userId: string, edits: InterestEdit[]): Promise<WhatIfDiff> {
    return this.post(`/users/${userId}/whatif`, { edits });
  }
}
